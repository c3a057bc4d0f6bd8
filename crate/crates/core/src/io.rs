//! Text formats for specs, messages and codewords.
//!
//! * Spec: JSON `{"p": 2, "m": 1, "reduction": null, "moduli": [[0,1], [1,1,1]], "k": 1}`,
//!   coefficient lists low-to-high; `reduction` may be omitted for prime fields
//!   (and for binary extensions, which then use the default reduction polynomial).
//! * Message: one bracketed coefficient list, e.g. `[1,0,1]`.
//! * Codeword: a header line `n=<n>`, then one line per symbol holding exactly
//!   `deg m_i` whitespace-separated coefficients, low-to-high.
//!
//! Blank lines and lines starting with `#` are ignored in the two text formats.

use serde::{Deserialize, Serialize};

use crate::code::{CodeSpec, Codeword};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::Poly;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct SpecFile {
    p: u32,
    #[serde(default = "one")]
    m: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    reduction: Option<Vec<u32>>,
    moduli: Vec<Vec<u32>>,
    k: usize,
}

fn one() -> u32 {
    1
}

pub fn parse_spec(text: &str) -> Result<CodeSpec> {
    let file: SpecFile = serde_json::from_str(text)
        .map_err(|e| Error::parse(e.line(), e.column(), e.to_string()))?;
    let field = match (&file.reduction, file.p, file.m) {
        (None, 2, m) if m > 1 => Field::binary(m)?,
        (r, p, m) => Field::new(p, m, r.as_deref())?,
    };
    let moduli = file
        .moduli
        .into_iter()
        .map(|c| Poly::from_coeffs(&field, c))
        .collect::<Result<Vec<_>>>()?;
    CodeSpec::new(&field, moduli, file.k)
}

pub fn spec_to_string(spec: &CodeSpec) -> String {
    let f = spec.field();
    let file = SpecFile {
        p: f.characteristic(),
        m: f.extension_degree(),
        reduction: f.reduction().map(<[u32]>::to_vec),
        moduli: spec.moduli().iter().map(|m| m.coeffs().to_vec()).collect(),
        k: spec.k(),
    };
    serde_json::to_string_pretty(&file).expect("plain data serializes")
}

/// Non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
}

fn column_of(line: &str, token: &str) -> usize {
    token.as_ptr() as usize - line.as_ptr() as usize + 1
}

fn element(spec: &CodeSpec, token: &str, line_no: usize, line: &str) -> Result<u32> {
    let col = column_of(line, token);
    let v: u64 = token.parse().map_err(|_| {
        Error::parse(
            line_no,
            col,
            format!("expected an integer, found `{token}`"),
        )
    })?;
    let q = spec.field().size();
    if v >= q as u64 {
        return Err(Error::parse(
            line_no,
            col,
            format!("{v} is not an element of a field of size {q}"),
        ));
    }
    Ok(v as u32)
}

pub fn parse_message(spec: &CodeSpec, text: &str) -> Result<Poly> {
    let mut lines = content_lines(text);
    let (line_no, line) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty message file"))?;
    if let Some((n, l)) = lines.next() {
        return Err(Error::parse(
            n,
            column_of(l, l.trim_start()),
            "trailing content",
        ));
    }
    let body = line.trim();
    let inner = body
        .strip_prefix('[')
        .and_then(|b| b.strip_suffix(']'))
        .ok_or_else(|| Error::parse(line_no, column_of(line, body), "expected `[c0,c1,...]`"))?;
    let coeffs = if inner.trim().is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|tok| element(spec, tok.trim(), line_no, line))
            .collect::<Result<Vec<_>>>()?
    };
    let a = Poly::from_coeffs(spec.field(), coeffs)?;
    spec.check_message(&a)?;
    Ok(a)
}

pub fn message_to_string(message: &Poly) -> String {
    format!("{message}\n")
}

pub fn parse_codeword(spec: &CodeSpec, text: &str) -> Result<Codeword> {
    let mut lines = content_lines(text);
    let (line_no, header) = lines
        .next()
        .ok_or_else(|| Error::parse(1, 1, "empty codeword file"))?;
    let h = header.trim();
    let n: usize = h
        .strip_prefix("n=")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| {
            Error::parse(line_no, column_of(header, h), "expected header `n=<count>`")
        })?;
    if n != spec.n() {
        return Err(Error::parse(
            line_no,
            column_of(header, h),
            format!("word has {n} symbols but the code has {}", spec.n()),
        ));
    }
    let mut symbols = Vec::with_capacity(n);
    let mut last_line = line_no;
    for (i, &d) in spec.degrees().iter().enumerate() {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| Error::parse(last_line + 1, 1, format!("missing symbol {i}")))?;
        last_line = line_no;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != d {
            return Err(Error::parse(
                line_no,
                column_of(line, line.trim_start()),
                format!("symbol {i} needs {d} coefficients, found {}", tokens.len()),
            ));
        }
        let coeffs = tokens
            .iter()
            .map(|t| element(spec, t, line_no, line))
            .collect::<Result<Vec<_>>>()?;
        symbols.push(Poly::from_coeffs(spec.field(), coeffs)?);
    }
    if let Some((n, l)) = lines.next() {
        return Err(Error::parse(
            n,
            column_of(l, l.trim_start()),
            "trailing content",
        ));
    }
    Ok(Codeword::new(symbols))
}

pub fn codeword_to_string(spec: &CodeSpec, word: &Codeword) -> String {
    let mut out = format!("n={}\n", word.len());
    for (s, &d) in word.symbols.iter().zip(spec.degrees()) {
        let cells: Vec<String> = (0..d).map(|i| s.coeff(i).to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    const GF4_SPEC: &str =
        r#"{"p": 2, "m": 2, "moduli": [[0,1],[1,1],[2,1],[2,1,1],[3,1,1]], "k": 3}"#;

    #[test]
    fn spec_round_trip() {
        let s = parse_spec(GF4_SPEC).unwrap();
        assert_eq!(s.big_n(), 7);
        assert_eq!(parse_spec(&spec_to_string(&s)).unwrap(), s);
    }

    #[test]
    fn spec_errors() {
        assert!(matches!(
            parse_spec("{\"p\": 2,\n \"k\": }"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_spec(r#"{"p": 4, "moduli": [[0,1]], "k": 1}"#),
            Err(Error::NonPrimeCharacteristic(4))
        ));
    }

    #[test]
    fn codeword_round_trip_and_errors() {
        let s = parse_spec(GF4_SPEC).unwrap();
        let a = Poly::from_coeffs(s.field(), vec![1, 2, 3]).unwrap();
        let c = s.encode(&a).unwrap();
        let text = codeword_to_string(&s, &c);
        assert_eq!(parse_codeword(&s, &text).unwrap(), c);

        let bad = "n=5\n1\n0\n3\n1\n0 2\n";
        assert!(matches!(
            parse_codeword(&s, bad),
            Err(Error::Parse {
                line: 5,
                column: 1,
                ..
            })
        ));
        let bad = "n=5\n1\n0\n7\n1 0\n0 2\n";
        assert!(matches!(
            parse_codeword(&s, bad),
            Err(Error::Parse {
                line: 4,
                column: 1,
                ..
            })
        ));
        assert!(matches!(
            parse_codeword(&s, "n=4\n"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn message_round_trip_and_errors() {
        let s = parse_spec(GF4_SPEC).unwrap();
        let a = Poly::from_coeffs(s.field(), vec![1, 0, 3]).unwrap();
        assert_eq!(parse_message(&s, &message_to_string(&a)).unwrap(), a);
        assert!(parse_message(&s, "[]").unwrap().is_zero());
        assert!(matches!(
            parse_message(&s, "[1,1,1,1]"),
            Err(Error::MessageTooLarge { .. })
        ));
        assert!(matches!(
            parse_message(&s, "[1, x]"),
            Err(Error::Parse {
                line: 1,
                column: 5,
                ..
            })
        ));
    }
}
