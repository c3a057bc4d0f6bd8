//! Dense polynomials over a finite field.
//!
//! Coefficients are stored low-to-high (`coeffs[l]` is the coefficient of
//! `x^l`) with no trailing zeros; the zero polynomial has no coefficients.

mod irreducible;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::field::{Field, FieldElement, FieldOp};

pub use irreducible::{count_irreducible, cumulative_degree_sum};

/// Degree of a polynomial. The zero polynomial has degree [`Degree::NegInf`],
/// which compares below every finite degree, so any test of the form
/// `deg r < bound` holds for `r = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl Degree {
    pub fn finite(self) -> Option<usize> {
        match self {
            Degree::NegInf => None,
            Degree::Finite(d) => Some(d),
        }
    }

    /// `2 * self < bound`, i.e. `self < bound / 2` compared exactly.
    pub fn doubled_below(self, bound: usize) -> bool {
        match self {
            Degree::NegInf => true,
            Degree::Finite(d) => 2 * d < bound,
        }
    }
}

impl Add<usize> for Degree {
    type Output = Degree;

    fn add(self, rhs: usize) -> Degree {
        match self {
            Degree::NegInf => Degree::NegInf,
            Degree::Finite(d) => Degree::Finite(d + rhs),
        }
    }
}

impl PartialEq<usize> for Degree {
    fn eq(&self, other: &usize) -> bool {
        *self == Degree::Finite(*other)
    }
}

impl PartialOrd<usize> for Degree {
    fn partial_cmp(&self, other: &usize) -> Option<std::cmp::Ordering> {
        self.partial_cmp(&Degree::Finite(*other))
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Operation selector for [`Poly::arith`].
pub type PolyOp = FieldOp;

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<u32>,
    field: Field,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Bracketed low-to-high list, e.g. `[0,1,1]` for `x^2 + x`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl Poly {
    fn normalized(field: &Field, mut coeffs: Vec<u32>) -> Poly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly {
            coeffs,
            field: field.clone(),
        }
    }

    /// Builds a polynomial from low-to-high coefficients; trailing zeros are dropped.
    pub fn from_coeffs(field: &Field, coeffs: Vec<u32>) -> Result<Poly> {
        for &c in &coeffs {
            field.check(c)?;
        }
        Ok(Poly::normalized(field, coeffs))
    }

    pub fn zero(field: &Field) -> Poly {
        Poly {
            coeffs: Vec::new(),
            field: field.clone(),
        }
    }

    pub fn one(field: &Field) -> Poly {
        Poly::constant(field, 1)
    }

    pub fn x(field: &Field) -> Poly {
        Poly::monomial(field, 1, 1)
    }

    pub fn constant(field: &Field, c: u32) -> Poly {
        Poly::monomial(field, c, 0)
    }

    /// `c * x^d`.
    pub fn monomial(field: &Field, c: u32, d: usize) -> Poly {
        debug_assert!(c < field.size());
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = c;
        Poly::normalized(field, coeffs)
    }

    /// `x - root`.
    pub fn linear(field: &Field, root: u32) -> Poly {
        Poly::normalized(field, vec![field.neg(root), 1])
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> u32 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn deg(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as an integer, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    /// Leading coefficient (0 for the zero polynomial).
    pub fn lead(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.lead() == 1
    }

    /// Scales to leading coefficient 1; the zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.field.inv(self.lead()) {
            Some(inv) => self.scale(inv),
            None => self.clone(),
        }
    }

    pub fn scale(&self, c: u32) -> Poly {
        let f = &self.field;
        Poly::normalized(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Multiplication by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let mut coeffs = vec![0; k];
        coeffs.extend_from_slice(&self.coeffs);
        Poly {
            coeffs,
            field: self.field.clone(),
        }
    }

    /// Terms of degree below `k`.
    pub fn low_part(&self, k: usize) -> Poly {
        let end = k.min(self.coeffs.len());
        Poly::normalized(&self.field, self.coeffs[..end].to_vec())
    }

    /// `sum_{l >= 0} coeff(k + l) x^l`, i.e. the quotient by `x^k`.
    pub fn high_part(&self, k: usize) -> Poly {
        if k >= self.coeffs.len() {
            return Poly::zero(&self.field);
        }
        Poly {
            coeffs: self.coeffs[k..].to_vec(),
            field: self.field.clone(),
        }
    }

    fn same_field(&self, other: &Poly) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    /// Checked add/sub/mul.
    pub fn arith(&self, other: &Poly, op: PolyOp) -> Result<Poly> {
        self.same_field(other)?;
        Ok(match op {
            FieldOp::Add => self.add_impl(other, false),
            FieldOp::Sub => self.add_impl(other, true),
            FieldOp::Mul => self.mul_impl(other),
        })
    }

    fn add_impl(&self, other: &Poly, negate: bool) -> Poly {
        let f = &self.field;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| {
                let b = other.coeff(i);
                f.add(self.coeff(i), if negate { f.neg(b) } else { b })
            })
            .collect();
        Poly::normalized(f, coeffs)
    }

    fn mul_impl(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::normalized(f, out)
    }

    /// In place: `self -= c * x^shift * other`.
    pub(crate) fn sub_scaled_shifted(&mut self, c: u32, shift: usize, other: &Poly) {
        if c == 0 || other.is_zero() {
            return;
        }
        let f = &self.field;
        let coeffs = &mut self.coeffs;
        let need = other.coeffs.len() + shift;
        if coeffs.len() < need {
            coeffs.resize(need, 0);
        }
        for (k, &o) in other.coeffs.iter().enumerate() {
            coeffs[shift + k] = f.sub(coeffs[shift + k], f.mul(c, o));
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        self.same_field(divisor)?;
        let Some(dd) = divisor.degree() else {
            return Err(Error::DivisionByZeroPoly);
        };
        let f = &self.field;
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Ok((Poly::zero(f), self.clone()));
        };
        let lead_inv = f.inv(divisor.lead()).expect("nonzero leading coefficient");
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u32; nd - dd + 1];
        for top in (dd..=nd).rev() {
            let c = rem[top];
            if c == 0 {
                continue;
            }
            let factor = f.mul(c, lead_inv);
            quot[top - dd] = factor;
            for (k, &d) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + k;
                rem[idx] = f.sub(rem[idx], f.mul(factor, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::normalized(f, quot), Poly::normalized(f, rem)))
    }

    /// Remainder modulo `divisor`.
    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Exact quotient, or [`Error::NonDivisible`] when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &Poly) -> Result<Poly> {
        let (q, r) = self.div_rem(divisor)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::NonDivisible)
        }
    }

    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.rem(self)?.is_zero())
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        self.same_field(other)?;
        if self.is_zero() && other.is_zero() {
            return Err(Error::BothZero);
        }
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        Ok(a.monic())
    }

    /// Inverse of `self` in `F[x] / (modulus)`, if it exists.
    pub fn inverse_mod(&self, modulus: &Poly) -> Result<Option<Poly>> {
        self.same_field(modulus)?;
        let f = &self.field;
        let (mut r0, mut r1) = (modulus.clone(), self.rem(modulus)?);
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let t2 = &t0 - &(&q * &t1);
            r0 = std::mem::replace(&mut r1, r);
            t0 = std::mem::replace(&mut t1, t2);
        }
        // r0 = gcd up to scaling; invertible iff it is a nonzero constant
        if r0.degree() != Some(0) {
            return Ok(None);
        }
        let c = f.inv(r0.lead()).expect("nonzero constant");
        Ok(Some(t0.scale(c).rem(modulus)?))
    }

    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Result<Poly> {
        let mut base = self.rem(modulus)?;
        let mut acc = Poly::one(&self.field).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus)?;
            }
            base = (&base * &base).rem(modulus)?;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Evaluates at a raw element value (Horner).
    pub fn eval_raw(&self, x: u32) -> u32 {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn eval(&self, x: &FieldElement) -> Result<FieldElement> {
        if *x.field() != self.field {
            return Err(Error::SpecMismatch);
        }
        self.field.element(self.eval_raw(x.value()))
    }

    /// True iff the polynomial has no nontrivial factorization over its field.
    pub fn is_irreducible(&self) -> Result<bool> {
        irreducible::is_irreducible(self)
    }
}

// Operator forms panic on field mismatch; library internals only combine
// polynomials from one code. Use `Poly::arith` for the checked form.
impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        assert!(self.field == rhs.field, "polynomials over different fields");
        self.add_impl(rhs, false)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        assert!(self.field == rhs.field, "polynomials over different fields");
        self.add_impl(rhs, true)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        assert!(self.field == rhs.field, "polynomials over different fields");
        self.mul_impl(rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        let f = &self.field;
        Poly::normalized(f, self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }
}

/// Product of a sequence of polynomials (1 for an empty sequence).
pub fn product<'a>(field: &Field, polys: impl IntoIterator<Item = &'a Poly>) -> Poly {
    polys.into_iter().fold(Poly::one(field), |acc, p| &acc * p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf2() -> Field {
        Field::prime(2).unwrap()
    }

    fn gf5() -> Field {
        Field::prime(5).unwrap()
    }

    fn p(f: &Field, c: &[u32]) -> Poly {
        Poly::from_coeffs(f, c.to_vec()).unwrap()
    }

    #[test]
    fn degree_sentinel_orders_below_everything() {
        let z = Poly::zero(&gf2());
        assert_eq!(z.deg(), Degree::NegInf);
        assert!(z.deg() < 0usize);
        assert!(z.deg() < Degree::Finite(0));
        assert!(z.deg().doubled_below(0));
        assert_eq!(z.deg() + 7, Degree::NegInf);
        assert_eq!(p(&gf2(), &[0, 0, 1]).deg(), 2usize);
    }

    #[test]
    fn arithmetic_examples() {
        let f = gf2();
        let x1 = p(&f, &[1, 1]);
        assert_eq!(&x1 * &x1, p(&f, &[1, 0, 1]));
        // (x^2+x)(x^2+x+1) = x^4 + x
        assert_eq!(
            &p(&f, &[0, 1, 1]) * &p(&f, &[1, 1, 1]),
            p(&f, &[0, 1, 0, 0, 1])
        );
        let a = p(&f, &[1, 0, 1, 1]);
        assert_eq!(&a + &Poly::zero(&f), a);
        assert_eq!(
            a.arith(&p(&gf5(), &[1]), FieldOp::Add),
            Err(Error::SpecMismatch)
        );
    }

    #[test]
    fn division_examples() {
        let f = gf2();
        let (q, r) = p(&f, &[0, 1, 0, 1]).div_rem(&p(&f, &[1, 1, 1])).unwrap();
        assert_eq!(q, p(&f, &[1, 1]));
        assert_eq!(r, p(&f, &[1, 1]));

        let a = p(&f, &[1, 1, 0, 1]);
        assert_eq!(a.div_rem(&a).unwrap(), (Poly::one(&f), Poly::zero(&f)));

        let g5 = gf5();
        let (q, r) = Poly::x(&g5).div_rem(&Poly::linear(&g5, 2)).unwrap();
        assert_eq!(q, Poly::one(&g5));
        assert_eq!(r, Poly::constant(&g5, 2));

        assert_eq!(a.div_rem(&Poly::zero(&f)), Err(Error::DivisionByZeroPoly));
        assert_eq!(a.div_exact(&p(&f, &[1, 1])), Err(Error::NonDivisible));
    }

    #[test]
    fn gcd_examples() {
        let f = gf2();
        let g = p(&f, &[0, 1, 0, 0, 1]).gcd(&p(&f, &[0, 0, 1, 1])).unwrap();
        assert_eq!(g, p(&f, &[0, 1, 1]));

        let g5 = gf5();
        let a = p(&g5, &[2, 0, 3]);
        assert_eq!(a.gcd(&Poly::zero(&g5)).unwrap(), a.monic());
        assert!(Poly::linear(&g5, 1)
            .gcd(&Poly::linear(&g5, 2))
            .unwrap()
            .is_one());
        assert_eq!(Poly::zero(&g5).gcd(&Poly::zero(&g5)), Err(Error::BothZero));
    }

    #[test]
    fn eval_examples() {
        let g5 = gf5();
        let three = g5.element(3).unwrap();
        assert_eq!(Poly::x(&g5).eval(&three).unwrap().value(), 3);
        assert_eq!(p(&gf2(), &[1, 1, 1]).eval_raw(1), 1);
        let a = p(&g5, &[4, 1, 0, 2]);
        for b in 0..5 {
            let r = a.rem(&Poly::linear(&g5, b)).unwrap();
            assert_eq!(r.coeff(0), a.eval_raw(b));
        }
    }

    #[test]
    fn inverse_mod_works() {
        let f = gf2();
        let m = p(&f, &[1, 1, 0, 1]);
        let a = p(&f, &[0, 1, 1]);
        let inv = a.inverse_mod(&m).unwrap().unwrap();
        assert!((&a * &inv).rem(&m).unwrap().is_one());
        // x is not invertible mod x^2
        assert_eq!(Poly::x(&f).inverse_mod(&p(&f, &[0, 0, 1])).unwrap(), None);
    }

    fn arb_poly(f: Field, max_len: usize) -> impl Strategy<Value = Poly> {
        let q = f.size();
        proptest::collection::vec(0..q, 0..max_len)
            .prop_map(move |c| Poly::from_coeffs(&f, c).unwrap())
    }

    fn arb_field() -> impl Strategy<Value = Field> {
        prop_oneof![
            Just(Field::prime(2).unwrap()),
            Just(Field::prime(3).unwrap()),
            Just(Field::prime(5).unwrap()),
            Just(Field::binary(2).unwrap()),
            Just(Field::binary(4).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn divmod_roundtrip((a, b) in arb_field().prop_flat_map(|f| (arb_poly(f.clone(), 12), arb_poly(f, 7)))) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.deg() < b.deg());
        }

        #[test]
        fn gcd_divides_and_is_greatest((a, b, c) in arb_field().prop_flat_map(|f| (arb_poly(f.clone(), 6), arb_poly(f.clone(), 6), arb_poly(f, 4)))) {
            prop_assume!(!c.is_zero());
            let a = &a * &c;
            let b = &b * &c;
            prop_assume!(!(a.is_zero() && b.is_zero()));
            let g = a.gcd(&b).unwrap();
            prop_assert!(g.is_monic());
            prop_assert!(g.divides(&a).unwrap());
            prop_assert!(g.divides(&b).unwrap());
            // the planted common divisor divides the gcd
            prop_assert!(c.divides(&g).unwrap());
        }

        #[test]
        fn ring_laws((a, b, c) in arb_field().prop_flat_map(|f| (arb_poly(f.clone(), 6), arb_poly(f.clone(), 6), arb_poly(f, 6)))) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert_eq!(&a * &b, &b * &a);
        }
    }
}
