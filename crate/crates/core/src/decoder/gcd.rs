//! The extended GCD algorithm in the decoder's form, and the two partial
//! variants that work from the received pre-image `Y` (variant I) or from
//! the known upper coefficients `E_U` only (variant II).
//!
//! All three share one loop. Each outer pass performs the division of `r`
//! by `r̃` one leading term at a time, updating `s` and `t` alongside, then
//! tests the variant's stopping condition before swapping the pairs.
//!
//! In builds with debug assertions every outer pass checks the loop
//! invariants:
//!
//! * `gcd(input1, input2) = gcd(r, r̃)`
//! * `r = s * input1 + t * input2` (when `s` is tracked)
//! * after the division block: `deg r < deg r̃`, `deg t > deg t̃`,
//!   `deg input1 = deg r̃ + deg t` and `deg t = sum of the leading
//!   quotient degrees so far`.

use std::sync::atomic::{AtomicU64, Ordering};

use crate::code::CodeSpec;
use crate::error::{Error, Result};
use crate::poly::{Degree, Poly};

static INVARIANT_CHECKS: AtomicU64 = AtomicU64::new(0);

/// Number of loop-invariant checks executed so far in this process (always
/// zero without debug assertions).
pub fn invariant_checks_performed() -> u64 {
    INVARIANT_CHECKS.load(Ordering::Relaxed)
}

/// Stopping condition of the partial algorithms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stopping {
    /// Variant I: `deg r < deg t + K`; variant II: `deg r < deg t`.
    DegreeRelative,
    /// Variant I: `deg r < (N + K) / 2`; variant II: `deg r < (N - K) / 2`.
    Threshold,
}

/// Output of the GCD variants.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct XgcdResult {
    /// `γ * gcd(input1, input2)` for the full algorithm; the partner of `r`
    /// for variant I. `None` for variant II and for the early exits of the
    /// partial variants.
    pub r_tilde: Option<Poly>,
    /// Variant I only: equals `t * a` inside the correction radius.
    pub r: Option<Poly>,
    /// `None` when `s` tracking was switched off.
    pub s: Option<Poly>,
    pub t: Poly,
    /// Outer-loop passes executed (0 for the early exits).
    pub iterations: usize,
}

impl XgcdResult {
    /// `s`, which the public entry points always track.
    pub fn s(&self) -> &Poly {
        self.s.as_ref().expect("s was tracked")
    }
}

#[derive(Debug, Clone, Copy)]
enum Stop {
    RemainderZero,
    /// `deg r < deg t + offset`
    RelativeToT(usize),
    /// `2 deg r < bound`
    Doubled(usize),
}

impl Stop {
    fn done(self, r: &Poly, t: &Poly) -> bool {
        match self {
            Stop::RemainderZero => r.is_zero(),
            Stop::RelativeToT(offset) => r.deg() < t.deg() + offset,
            Stop::Doubled(bound) => r.deg().doubled_below(bound),
        }
    }
}

struct Loop {
    r: Poly,
    r_tilde: Poly,
    s: Option<Poly>,
    t: Poly,
    iterations: usize,
}

#[cfg(debug_assertions)]
struct InvariantCtx<'a> {
    input1: &'a Poly,
    input2: &'a Poly,
    gcd: Poly,
}

#[cfg(debug_assertions)]
impl InvariantCtx<'_> {
    fn linear_combination(&self, r: &Poly, s: &Option<Poly>, t: &Poly, at: &str) {
        if let Some(s) = s {
            let combo = &(s * self.input1) + &(t * self.input2);
            assert_eq!(&combo, r, "r = s*input1 + t*input2 violated {at}");
        }
    }

    fn gcd_preserved(&self, r: &Poly, r_tilde: &Poly, at: &str) {
        let g = r.gcd(r_tilde).expect("r and r̃ are never both zero");
        assert_eq!(g, self.gcd, "gcd(input1, input2) = gcd(r, r̃) violated {at}");
    }
}

/// The shared loop. `input2` must be nonzero with `deg input1 > deg input2`.
fn run(input1: &Poly, input2: &Poly, stop: Stop, track_s: bool) -> Loop {
    let field = input1.field();
    let mut r = input1.clone();
    let mut r_tilde = input2.clone();
    let mut s = track_s.then(|| Poly::one(field));
    let mut s_tilde = track_s.then(|| Poly::zero(field));
    let mut t = Poly::zero(field);
    let mut t_tilde = Poly::one(field);
    let mut iterations = 0;
    let mut delta_sum = 0usize;

    #[cfg(debug_assertions)]
    let ctx = InvariantCtx {
        input1,
        input2,
        gcd: input1.gcd(input2).expect("inputs not both zero"),
    };

    loop {
        iterations += 1;
        let j = r_tilde
            .degree()
            .expect("r̃ is nonzero whenever the loop continues");
        let lead_inv = field
            .inv(r_tilde.lead())
            .expect("nonzero leading coefficient");

        #[cfg(debug_assertions)]
        {
            INVARIANT_CHECKS.fetch_add(1, Ordering::Relaxed);
            ctx.gcd_preserved(&r, &r_tilde, "before division");
            ctx.linear_combination(&r, &s, &t, "before division");
        }

        let mut first_delta = None;
        while let Degree::Finite(i) = r.deg() {
            if i < j {
                break;
            }
            let shift = i - j;
            let c = field.mul(r.lead(), lead_inv);
            first_delta.get_or_insert(shift);
            r.sub_scaled_shifted(c, shift, &r_tilde);
            if let (Some(s), Some(st)) = (s.as_mut(), s_tilde.as_ref()) {
                s.sub_scaled_shifted(c, shift, st);
            }
            t.sub_scaled_shifted(c, shift, &t_tilde);
        }
        let delta = first_delta.expect("deg r >= deg r̃ at the top of every pass");
        delta_sum += delta;

        #[cfg(debug_assertions)]
        {
            INVARIANT_CHECKS.fetch_add(1, Ordering::Relaxed);
            assert!(delta > 0, "leading quotient degree must be positive");
            ctx.gcd_preserved(&r, &r_tilde, "after division");
            ctx.linear_combination(&r, &s, &t, "after division");
            assert!(r.deg() < r_tilde.deg(), "deg r < deg r̃ violated");
            assert!(t.deg() > t_tilde.deg(), "deg t > deg t̃ violated");
            assert_eq!(
                input1.deg(),
                r_tilde.deg() + t.degree().expect("t nonzero"),
                "deg input1 = deg r̃ + deg t violated"
            );
            assert_eq!(
                t.deg(),
                delta_sum,
                "deg t = sum of quotient degrees violated"
            );
        }
        #[cfg(not(debug_assertions))]
        let _ = delta_sum;

        if stop.done(&r, &t) {
            return Loop {
                r,
                r_tilde,
                s,
                t,
                iterations,
            };
        }
        std::mem::swap(&mut r, &mut r_tilde);
        std::mem::swap(&mut s, &mut s_tilde);
        std::mem::swap(&mut t, &mut t_tilde);
    }
}

fn same_field(a: &Poly, b: &Poly) -> Result<()> {
    if a.field() == b.field() {
        Ok(())
    } else {
        Err(Error::SpecMismatch)
    }
}

/// Full extended GCD on `(M_n, E)` with `deg M_n > deg E`.
///
/// Returns `r̃ = γ gcd(M_n, E)`, and `s`, `t` with `s M_n + t E = 0`, where
/// `t` is a scalar multiple of the error factor polynomial `M_n / gcd(M_n, E)`.
pub fn extended_gcd(mn: &Poly, e: &Poly) -> Result<XgcdResult> {
    same_field(mn, e)?;
    if e.deg() >= mn.deg() {
        return Err(Error::DegreePreconditionViolated("deg M_n > deg E"));
    }
    let field = mn.field();
    if e.is_zero() {
        return Ok(XgcdResult {
            r_tilde: Some(mn.clone()),
            r: None,
            s: Some(Poly::zero(field)),
            t: Poly::one(field),
            iterations: 0,
        });
    }
    let out = run(mn, e, Stop::RemainderZero, true);
    Ok(XgcdResult {
        r_tilde: Some(out.r_tilde),
        r: None,
        s: out.s,
        t: out.t,
        iterations: out.iterations,
    })
}

pub(crate) fn partial_gcd_i_with(
    mn: &Poly,
    y: &Poly,
    big_k: usize,
    stopping: Stopping,
    track_s: bool,
) -> Result<XgcdResult> {
    same_field(mn, y)?;
    if y.deg() >= mn.deg() {
        return Err(Error::DegreePreconditionViolated("deg M_n > deg Y"));
    }
    let field = mn.field();
    if y.deg() < big_k {
        return Ok(XgcdResult {
            r_tilde: None,
            r: Some(y.clone()),
            s: track_s.then(|| Poly::zero(field)),
            t: Poly::one(field),
            iterations: 0,
        });
    }
    let big_n = mn.degree().expect("deg M_n > deg Y >= 0");
    let stop = match stopping {
        Stopping::DegreeRelative => Stop::RelativeToT(big_k),
        Stopping::Threshold => Stop::Doubled(big_n + big_k),
    };
    let out = run(mn, y, stop, track_s);
    Ok(XgcdResult {
        r_tilde: Some(out.r_tilde),
        r: Some(out.r),
        s: out.s,
        t: out.t,
        iterations: out.iterations,
    })
}

/// Partial GCD on `(M_n, Y)` where only the coefficients of `Y` from `x^K`
/// up are known to equal those of `E`.
///
/// Whenever the error factor polynomial has degree at most `(N - K) / 2`,
/// the returned `s`, `t` and iteration count equal those of
/// [`extended_gcd`] on the true `E`, and `r = t a`.
pub fn partial_gcd_i(mn: &Poly, y: &Poly, big_k: usize, stopping: Stopping) -> Result<XgcdResult> {
    partial_gcd_i_with(mn, y, big_k, stopping, true)
}

/// `M_U = sum_l (M_n)_{K+l} x^l` and `E_U = sum_l Y_{K+l} x^l`.
pub fn upper_parts(spec: &CodeSpec, y: &Poly) -> Result<(Poly, Poly)> {
    if y.field() != spec.field() {
        return Err(Error::SpecMismatch);
    }
    if y.deg() >= spec.big_n() {
        return Err(Error::DegreePreconditionViolated("deg Y < N"));
    }
    let k = spec.big_k();
    Ok((spec.mn().high_part(k), y.high_part(k)))
}

pub(crate) fn partial_gcd_ii_with(
    m_u: &Poly,
    e_u: &Poly,
    big_n: usize,
    big_k: usize,
    stopping: Stopping,
    track_s: bool,
) -> Result<XgcdResult> {
    same_field(m_u, e_u)?;
    if e_u.deg() >= m_u.deg() {
        return Err(Error::DegreePreconditionViolated("deg M_U > deg E_U"));
    }
    if big_k > big_n {
        return Err(Error::DegreePreconditionViolated("K <= N"));
    }
    let field = m_u.field();
    if e_u.is_zero() {
        return Ok(XgcdResult {
            r_tilde: None,
            r: None,
            s: track_s.then(|| Poly::zero(field)),
            t: Poly::one(field),
            iterations: 0,
        });
    }
    let stop = match stopping {
        Stopping::DegreeRelative => Stop::RelativeToT(0),
        Stopping::Threshold => Stop::Doubled(big_n - big_k),
    };
    let out = run(m_u, e_u, stop, track_s);
    Ok(XgcdResult {
        r_tilde: None,
        r: None,
        s: out.s,
        t: out.t,
        iterations: out.iterations,
    })
}

/// Partial GCD on the known upper parts `(M_U, E_U)` only.
///
/// Whenever the error factor polynomial has degree at most `(N - K) / 2`,
/// returns the same `s`, `t` and iteration count as [`extended_gcd`] on
/// the true `E`.
pub fn partial_gcd_ii(
    m_u: &Poly,
    e_u: &Poly,
    big_n: usize,
    big_k: usize,
    stopping: Stopping,
) -> Result<XgcdResult> {
    partial_gcd_ii_with(m_u, e_u, big_n, big_k, stopping, true)
}
