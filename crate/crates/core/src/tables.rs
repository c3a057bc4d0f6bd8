//! Counts of monic irreducible polynomials, rendered as text and CSV.

use std::fmt::Write as _;

use num_bigint::BigUint;

use crate::poly::{count_irreducible, cumulative_degree_sum};

/// `N_i` and `S_i = sum_{l<=i} l N_l` over GF(q) for `i = 1..=max_degree`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeTable {
    pub q: u64,
    pub counts: Vec<BigUint>,
    pub cumulative: Vec<BigUint>,
}

pub fn emit_tables(q: u64, max_degree: u32) -> DegreeTable {
    DegreeTable {
        q,
        counts: (1..=max_degree).map(|i| count_irreducible(q, i)).collect(),
        cumulative: cumulative_degree_sum(q, max_degree),
    }
}

fn aligned(rows: &[Vec<String>]) -> String {
    let cols = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..cols)
        .map(|c| {
            rows.iter()
                .filter_map(|r| r.get(c))
                .map(String::len)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .zip(&widths)
            .enumerate()
            .map(|(c, (cell, &w))| {
                if c == 0 {
                    format!("{cell:<w$}")
                } else {
                    format!("{cell:>w$}")
                }
            })
            .collect();
        out.push_str(cells.join("  ").trim_end());
        out.push('\n');
    }
    out
}

impl DegreeTable {
    fn rows(&self) -> Vec<Vec<String>> {
        let n = self.counts.len();
        let mut header = vec!["i".to_string()];
        header.extend((1..=n).map(|i| i.to_string()));
        let mut counts = vec!["N_i".to_string()];
        counts.extend(self.counts.iter().map(|c| c.to_string()));
        let mut sums = vec!["S_i".to_string()];
        sums.extend(self.cumulative.iter().map(|c| c.to_string()));
        vec![header, counts, sums]
    }

    /// Aligned text with one row each for `i`, `N_i` and `S_i`.
    pub fn to_text(&self) -> String {
        format!("GF({})\n{}", self.q, aligned(&self.rows()))
    }

    /// `i,N_i,S_i` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("q,i,N_i,S_i\n");
        for (i, (n, s)) in self.counts.iter().zip(&self.cumulative).enumerate() {
            writeln!(out, "{},{},{},{}", self.q, i + 1, n, s).unwrap();
        }
        out
    }
}

/// `N_1 .. N_max_degree` for several field sizes side by side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldTable {
    pub fields: Vec<u64>,
    /// `counts[i][j]` is `N_{i+1}` over GF(fields[j]).
    pub counts: Vec<Vec<BigUint>>,
}

pub fn emit_field_table(fields: &[u64], max_degree: u32) -> FieldTable {
    FieldTable {
        fields: fields.to_vec(),
        counts: (1..=max_degree)
            .map(|i| fields.iter().map(|&q| count_irreducible(q, i)).collect())
            .collect(),
    }
}

impl FieldTable {
    pub fn to_text(&self) -> String {
        let mut header = vec![String::new()];
        header.extend(self.fields.iter().map(|q| format!("GF({q})")));
        let mut rows = vec![header];
        for (i, row) in self.counts.iter().enumerate() {
            let mut r = vec![format!("N_{}", i + 1)];
            r.extend(row.iter().map(|c| c.to_string()));
            rows.push(r);
        }
        aligned(&rows)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("q,i,N_i\n");
        for (i, row) in self.counts.iter().enumerate() {
            for (q, c) in self.fields.iter().zip(row) {
                writeln!(out, "{},{},{}", q, i + 1, c).unwrap();
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binary_rows() {
        let t = emit_tables(2, 12);
        let n: Vec<String> = t.counts.iter().map(|c| c.to_string()).collect();
        assert_eq!(n.join(" "), "2 1 2 3 6 9 18 30 56 99 186 335");
        let text = t.to_text();
        assert!(text.lines().nth(2).unwrap().starts_with("N_i"));
        assert!(text.contains("8032"));
        assert!(t.to_csv().lines().any(|l| l == "2,12,335,8032"));
    }

    #[test]
    fn field_table_layout() {
        let t = emit_field_table(&[4, 1024], 2);
        let text = t.to_text();
        assert!(text.contains("GF(1024)"));
        assert!(text.lines().nth(2).unwrap().ends_with("523776"));
        assert!(t.to_csv().contains("1024,1,1024\n"));
    }
}
