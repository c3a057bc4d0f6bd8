//! Error decoding for polynomial remainder codes.
//!
//! [`decode`] runs in three steps: transform the received word to its
//! pre-image `Y`, run one of the partial GCD algorithms to obtain the error
//! factor polynomial (up to a scalar) as `t`, then recover the message by
//! one of three equivalent routes. [`list_decode`] adds a fallback that
//! tries precomputed locator candidates when the GCD decoder gives up.

mod factor;
mod gcd;

use std::fmt;

pub use factor::{
    error_factor_poly, error_factor_test, error_locator_poly, error_locator_test,
    factor_interpolate, locator_for, locator_test_poly, TestVerdict,
};
pub use gcd::{
    extended_gcd, invariant_checks_performed, partial_gcd_i, partial_gcd_ii, upper_parts, Stopping,
    XgcdResult,
};

use crate::code::{CodeSpec, Codeword};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Default bound on the size of a candidate list.
pub const DEFAULT_CANDIDATE_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// Works on `(M_n, Y)`.
    PartialI,
    /// Works on the upper parts `(M_U, E_U)` only.
    PartialII,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Recovery {
    /// `a = (t Y mod M_n) / t`.
    QuotientMod,
    /// `a = r / t`; needs [`Algorithm::PartialI`].
    Ratio,
    /// Reconstruct the low part of `E` from `s` and `t`, then `a = Y - E`.
    ErrorSubtract,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DecodeOptions {
    pub algorithm: Algorithm,
    pub stopping: Stopping,
    pub recovery: Recovery,
}

impl Default for DecodeOptions {
    fn default() -> Self {
        DecodeOptions {
            algorithm: Algorithm::PartialI,
            stopping: Stopping::DegreeRelative,
            recovery: Recovery::QuotientMod,
        }
    }
}

impl DecodeOptions {
    pub fn validate(&self) -> Result<()> {
        if self.recovery == Recovery::Ratio && self.algorithm != Algorithm::PartialI {
            return Err(Error::InvalidOptions(
                "ratio recovery requires partial GCD I",
            ));
        }
        Ok(())
    }

    /// Every valid combination of algorithm, stopping rule and recovery.
    pub fn all_valid() -> Vec<DecodeOptions> {
        let mut out = Vec::new();
        for algorithm in [Algorithm::PartialI, Algorithm::PartialII] {
            for stopping in [Stopping::DegreeRelative, Stopping::Threshold] {
                for recovery in [
                    Recovery::QuotientMod,
                    Recovery::Ratio,
                    Recovery::ErrorSubtract,
                ] {
                    let o = DecodeOptions {
                        algorithm,
                        stopping,
                        recovery,
                    };
                    if o.validate().is_ok() {
                        out.push(o);
                    }
                }
            }
        }
        out
    }

    fn track_s(&self) -> bool {
        self.recovery == Recovery::ErrorSubtract
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FailureReason {
    /// `deg t > (N - K) / 2`.
    FactorDegreeExceeded,
    /// The recovery division left a remainder.
    NonDivisible,
    /// The recovered polynomial has degree `>= K`.
    MessageDegreeOverflow,
    /// The GCD decoder failed and no list candidate passed the locator test.
    NoCandidatePassed,
}

impl fmt::Display for FailureReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailureReason::FactorDegreeExceeded => "factor_degree_exceeded",
            FailureReason::NonDivisible => "non_divisible",
            FailureReason::MessageDegreeOverflow => "message_degree_overflow",
            FailureReason::NoCandidatePassed => "no_candidate_passed",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DecodeOutcome {
    /// `deg Y < K`: the received word is a codeword.
    NoError {
        message: Poly,
    },
    /// `encode(message) + error_word = received`.
    Success {
        message: Poly,
        error_word: Codeword,
        factor_poly: Poly,
    },
    Failure {
        reason: FailureReason,
    },
}

impl DecodeOutcome {
    /// The decoded message for `NoError` and `Success`.
    pub fn message(&self) -> Option<&Poly> {
        match self {
            DecodeOutcome::NoError { message } | DecodeOutcome::Success { message, .. } => {
                Some(message)
            }
            DecodeOutcome::Failure { .. } => None,
        }
    }

    pub fn is_failure(&self) -> bool {
        matches!(self, DecodeOutcome::Failure { .. })
    }
}

impl fmt::Display for DecodeOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecodeOutcome::NoError { message } => {
                writeln!(f, "status: no_error")?;
                write!(f, "message: {message}")
            }
            DecodeOutcome::Success {
                message,
                error_word,
                factor_poly,
            } => {
                writeln!(f, "status: success")?;
                writeln!(f, "message: {message}")?;
                writeln!(f, "factor_poly: {factor_poly}")?;
                let symbols: Vec<String> =
                    error_word.symbols.iter().map(|s| s.to_string()).collect();
                writeln!(f, "error_positions: {:?}", error_word.support())?;
                write!(f, "error_word: {}", symbols.join(" "))
            }
            DecodeOutcome::Failure { reason } => {
                writeln!(f, "status: failure")?;
                write!(f, "failure_reason: {reason}")
            }
        }
    }
}

fn failure(reason: FailureReason) -> DecodeOutcome {
    DecodeOutcome::Failure { reason }
}

fn division_failure(e: Error) -> DecodeOutcome {
    match e {
        Error::NonDivisible => failure(FailureReason::NonDivisible),
        other => unreachable!("division by a nonzero t cannot fail with {other}"),
    }
}

fn success(spec: &CodeSpec, received: &Codeword, message: Poly, t: &Poly) -> Result<DecodeOutcome> {
    if message.deg() >= spec.big_k() {
        return Ok(failure(FailureReason::MessageDegreeOverflow));
    }
    let codeword = spec.encode(&message)?;
    Ok(DecodeOutcome::Success {
        error_word: received.sub(&codeword),
        message,
        factor_poly: t.monic(),
    })
}

/// Decode a received word.
///
/// Corrects every error whose error factor polynomial has degree at most
/// `t_D`, in particular every error with `w_D(e) <= t_D`. Errors outside
/// that region give `Failure` or, sometimes, a different codeword.
pub fn decode(
    spec: &CodeSpec,
    received: &Codeword,
    options: &DecodeOptions,
) -> Result<DecodeOutcome> {
    options.validate()?;
    spec.check_word(received)?;
    let big_k = spec.big_k();
    let big_n = spec.big_n();
    let y = spec.psi_inverse(received)?;
    if y.deg() < big_k {
        return Ok(DecodeOutcome::NoError { message: y });
    }

    let track_s = options.track_s();
    let out = match options.algorithm {
        Algorithm::PartialI => {
            gcd::partial_gcd_i_with(spec.mn(), &y, big_k, options.stopping, track_s)?
        }
        Algorithm::PartialII => {
            let (m_u, e_u) = upper_parts(spec, &y)?;
            gcd::partial_gcd_ii_with(&m_u, &e_u, big_n, big_k, options.stopping, track_s)?
        }
    };
    let t = &out.t;
    let deg_t = t.degree().expect("t is never zero");
    if 2 * deg_t > big_n - big_k {
        return Ok(failure(FailureReason::FactorDegreeExceeded));
    }

    let message = match options.recovery {
        Recovery::QuotientMod => {
            let z = (t * &y).rem(spec.mn())?;
            match z.div_exact(t) {
                Ok(a) => a,
                Err(e) => return Ok(division_failure(e)),
            }
        }
        Recovery::Ratio => {
            let r = out.r.as_ref().expect("partial GCD I returns r");
            match r.div_exact(t) {
                Ok(a) => a,
                Err(e) => return Ok(division_failure(e)),
            }
        }
        Recovery::ErrorSubtract => {
            // t E = -s M_n with E = E_L + x^K E_U; only E_L is unknown.
            let s = out.s();
            let e_u = y.high_part(big_k);
            let numerator = &(-&(s * spec.mn())) - &(t * &e_u).shift(big_k);
            let e_l = match numerator.div_exact(t) {
                Ok(e_l) => e_l,
                Err(e) => return Ok(division_failure(e)),
            };
            &y.low_part(big_k) - &e_l
        }
    };
    success(spec, received, message, t)
}

/// A precomputed locator candidate `G = ∏_{i ∈ positions} m_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub positions: Vec<usize>,
    pub poly: Poly,
}

/// All locators of at most `t_H` moduli whose degree lies above the GCD
/// decoder's reach, `(N - K) / 2 < deg G`, and at most the sum of the `t_H`
/// largest modulus degrees.
pub fn build_candidate_list(spec: &CodeSpec, cap: usize) -> Result<Vec<Candidate>> {
    if !spec.ordered_degree() {
        return Err(Error::UnorderedDegrees);
    }
    let t_h = spec.t_h();
    let upper = spec.top_t_h_degree_sum();
    let lower_doubled = spec.big_n() - spec.big_k();
    let degrees = spec.degrees();
    let mut out = Vec::new();
    let mut stack = Vec::new();

    fn walk(
        start: usize,
        weight: usize,
        ctx: (&[usize], usize, usize, usize, usize),
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<()> {
        let (degrees, t_h, upper, lower_doubled, cap) = ctx;
        if !stack.is_empty() && 2 * weight > lower_doubled && weight <= upper {
            if out.len() == cap {
                return Err(Error::CandidateExplosion { cap });
            }
            out.push(stack.clone());
        }
        if stack.len() == t_h {
            return Ok(());
        }
        for (i, &d) in degrees.iter().enumerate().skip(start) {
            if weight + d > upper {
                // degrees are nondecreasing: later indices are no lighter
                break;
            }
            stack.push(i);
            walk(i + 1, weight + d, ctx, stack, out)?;
            stack.pop();
        }
        Ok(())
    }

    walk(
        0,
        0,
        (degrees, t_h, upper, lower_doubled, cap),
        &mut stack,
        &mut out,
    )?;
    Ok(out
        .into_iter()
        .map(|positions| Candidate {
            poly: locator_for(spec, &positions),
            positions,
        })
        .collect())
}

/// [`decode`], followed on failure by a scan of `candidates` with the
/// error locator test; the first passing candidate `G` yields `a = Z / G`.
pub fn list_decode(
    spec: &CodeSpec,
    received: &Codeword,
    candidates: &[Candidate],
    options: &DecodeOptions,
) -> Result<DecodeOutcome> {
    if !spec.ordered_degree() {
        return Err(Error::UnorderedDegrees);
    }
    let first = decode(spec, received, options)?;
    if !first.is_failure() {
        return Ok(first);
    }
    let y = spec.psi_inverse(received)?;
    for c in candidates {
        let verdict = locator_test_poly(spec, &y, &c.poly, c.positions.len())?;
        if verdict.passed {
            let a = verdict.z.div_exact(&c.poly)?;
            return success(spec, received, a, &c.poly);
        }
    }
    Ok(failure(FailureReason::NoCandidatePassed))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn rs42() -> CodeSpec {
        let f = Field::prime(5).unwrap();
        let moduli = (1..=4).map(|b| Poly::linear(&f, b)).collect();
        CodeSpec::new(&f, moduli, 2).unwrap()
    }

    fn consts(spec: &CodeSpec, v: &[u32]) -> Codeword {
        Codeword::new(v.iter().map(|&c| Poly::constant(spec.field(), c)).collect())
    }

    fn ladder_gf2() -> CodeSpec {
        let f = Field::prime(2).unwrap();
        let p = |c: &[u32]| Poly::from_coeffs(&f, c.to_vec()).unwrap();
        let moduli = vec![
            p(&[0, 1]),
            p(&[1, 1, 1]),
            p(&[1, 1, 0, 1]),
            p(&[1, 1, 0, 0, 1]),
            p(&[1, 0, 1, 0, 0, 1]),
        ];
        CodeSpec::new(&f, moduli, 3).unwrap()
    }

    #[test]
    fn options_validation() {
        let bad = DecodeOptions {
            algorithm: Algorithm::PartialII,
            stopping: Stopping::Threshold,
            recovery: Recovery::Ratio,
        };
        assert!(matches!(bad.validate(), Err(Error::InvalidOptions(_))));
        assert_eq!(DecodeOptions::all_valid().len(), 10);
    }

    #[test]
    fn codeword_is_no_error() {
        let s = rs42();
        for o in DecodeOptions::all_valid() {
            let out = decode(&s, &consts(&s, &[1, 2, 3, 4]), &o).unwrap();
            assert_eq!(
                out,
                DecodeOutcome::NoError {
                    message: Poly::x(s.field())
                }
            );
        }
    }

    #[test]
    fn single_error_all_options() {
        let s = rs42();
        let f = s.field();
        let y = consts(&s, &[1, 2, 0, 4]);
        for o in DecodeOptions::all_valid() {
            match decode(&s, &y, &o).unwrap() {
                DecodeOutcome::Success {
                    message,
                    error_word,
                    factor_poly,
                } => {
                    assert_eq!(message, Poly::x(f), "{o:?}");
                    assert_eq!(factor_poly, Poly::linear(f, 3));
                    assert_eq!(error_word.support(), vec![2]);
                    assert_eq!(s.encode(&message).unwrap().add(&error_word), y);
                }
                other => panic!("{o:?}: {other:?}"),
            }
        }
    }

    #[test]
    fn two_errors_fail_or_miscorrect() {
        let s = rs42();
        let y = consts(&s, &[1, 0, 0, 4]);
        for o in DecodeOptions::all_valid() {
            let out = decode(&s, &y, &o).unwrap();
            assert_ne!(out.message(), Some(&Poly::x(s.field())));
        }
    }

    #[test]
    fn candidate_lists() {
        let s = ladder_gf2();
        let list = build_candidate_list(&s, DEFAULT_CANDIDATE_CAP).unwrap();
        assert_eq!(list.len(), 1);
        assert_eq!(list[0].positions, vec![4]);
        assert_eq!(&list[0].poly, &s.moduli()[4]);
        assert!(build_candidate_list(&rs42(), 10).unwrap().is_empty());
        assert!(matches!(
            build_candidate_list(&s, 0),
            Err(Error::CandidateExplosion { cap: 0 })
        ));
    }

    #[test]
    fn list_decoding_rescues_heavy_symbol() {
        let s = ladder_gf2();
        let f = s.field();
        let a = Poly::from_coeffs(f, vec![1, 0, 1, 1]).unwrap();
        let mut y = s.encode(&a).unwrap();
        y.symbols[4] = &y.symbols[4] + &Poly::from_coeffs(f, vec![1, 0, 0, 0, 1]).unwrap();
        let o = DecodeOptions::default();
        assert!(decode(&s, &y, &o).unwrap().is_failure());
        let list = build_candidate_list(&s, DEFAULT_CANDIDATE_CAP).unwrap();
        let out = list_decode(&s, &y, &list, &o).unwrap();
        assert_eq!(out.message(), Some(&a));
        assert_eq!(
            list_decode(&s, &y, &[], &o).unwrap(),
            DecodeOutcome::Failure {
                reason: FailureReason::NoCandidatePassed
            }
        );
    }
}
