//! Error factor / error locator polynomials and the interpolation and test
//! routines built on them.

use crate::code::{CodeSpec, Codeword};
use crate::error::{Error, Result};
use crate::poly::{product, Degree, Poly};

/// `Λ_f = M_n / gcd(E, M_n)`, monic; `1` when `E = 0`.
pub fn error_factor_poly(e: &Poly, mn: &Poly) -> Result<Poly> {
    if e.field() != mn.field() {
        return Err(Error::SpecMismatch);
    }
    if e.is_zero() {
        return Ok(Poly::one(mn.field()));
    }
    let g = e.gcd(mn)?;
    Ok(mn.div_exact(&g)?.monic())
}

/// `Λ_e`, the product of the moduli at the nonzero positions of `e`.
pub fn error_locator_poly(spec: &CodeSpec, e: &Codeword) -> Result<Poly> {
    spec.check_word(e)?;
    Ok(locator_for(spec, &e.support()))
}

/// `∏_{i ∈ set} m_i`.
pub fn locator_for(spec: &CodeSpec, set: &[usize]) -> Poly {
    product(spec.field(), set.iter().map(|&i| &spec.moduli()[i]))
}

/// `a = (G Y mod M_n) / G`, valid when `G` is a multiple of `Λ_f` of degree
/// at most `N - K`.
pub fn factor_interpolate(spec: &CodeSpec, y: &Poly, g: &Poly) -> Result<Poly> {
    if g.is_zero() {
        return Err(Error::ZeroG);
    }
    if g.deg() > spec.big_n() - spec.big_k() {
        return Err(Error::DegreePreconditionViolated("deg G <= N - K"));
    }
    let z = (g * y).rem(spec.mn())?;
    let a = z.div_exact(g)?;
    if a.deg() >= spec.big_k() {
        return Err(Error::MessageDegreeOverflow);
    }
    Ok(a)
}

/// Verdict of the factor/locator tests together with `Z = G Y mod M_n`.
///
/// Only the checkable conditions enter the verdict; the bound on the true
/// error (on `deg Λ_f` or on `w_H(e)`) is a promise about the channel.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestVerdict {
    pub passed: bool,
    pub z: Poly,
}

fn divisibility_checks(spec: &CodeSpec, y: &Poly, g: &Poly) -> Result<(bool, Poly)> {
    let z = (g * y).rem(spec.mn())?;
    let divides = g.divides(&z)?;
    let quotient_small = match (z.deg(), g.degree()) {
        (Degree::NegInf, _) => true,
        (Degree::Finite(dz), Some(dg)) => dz < dg + spec.big_k(),
        (Degree::Finite(_), None) => unreachable!("G is nonzero"),
    };
    Ok((divides && quotient_small, z))
}

/// Error Factor Test: `deg G <= t_D`, `G | Z` and `deg Z - deg G < K`.
pub fn error_factor_test(spec: &CodeSpec, y: &Poly, g: &Poly) -> Result<TestVerdict> {
    if g.is_zero() {
        return Err(Error::ZeroG);
    }
    if g.field() != spec.field() || y.field() != spec.field() {
        return Err(Error::SpecMismatch);
    }
    let (ok, z) = divisibility_checks(spec, y, g)?;
    Ok(TestVerdict {
        passed: g.deg() <= spec.t_d() && ok,
        z,
    })
}

/// Error Locator Test on `G = ∏_{i ∈ set} m_i`: `|set| <= t_H`,
/// `deg G <=` the sum of the `t_H` largest degrees, `G | Z` and
/// `deg Z - deg G < K`.
pub fn error_locator_test(spec: &CodeSpec, y: &Poly, set: &[usize]) -> Result<TestVerdict> {
    if !spec.ordered_degree() {
        return Err(Error::UnorderedDegrees);
    }
    if let Some(&index) = set.iter().find(|&&i| i >= spec.n()) {
        return Err(Error::IndexOutOfRange { index, n: spec.n() });
    }
    let mut distinct = set.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let g = locator_for(spec, &distinct);
    locator_test_poly(spec, y, &g, distinct.len())
}

/// Locator test on a precomputed `G` known to be a product of `n_zero`
/// distinct moduli.
pub fn locator_test_poly(
    spec: &CodeSpec,
    y: &Poly,
    g: &Poly,
    n_zero: usize,
) -> Result<TestVerdict> {
    if !spec.ordered_degree() {
        return Err(Error::UnorderedDegrees);
    }
    if g.field() != spec.field() || y.field() != spec.field() {
        return Err(Error::SpecMismatch);
    }
    let (ok, z) = divisibility_checks(spec, y, g)?;
    let passed = n_zero <= spec.t_h() && g.deg() <= spec.top_t_h_degree_sum() && ok;
    Ok(TestVerdict { passed, z })
}
