//! Erasure decoding: recover the message from the symbols at a known index set.
//!
//! Two routes are provided. [`interpolate_direct`] runs CRT over the known
//! moduli only, with coefficients recomputed for each support set.
//! [`interpolate_fixed_transform`] reuses the code's fixed CRT coefficients:
//! it inverts the whole (filled) word, multiplies by the product of the
//! erased moduli and divides that product back out.

use std::collections::BTreeSet;

use crate::code::{CodeSpec, Codeword};
use crate::error::{Error, Result};
use crate::poly::{product, Poly};

/// Known (`S`) and erased (`S̄`) positions of a word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErasurePattern {
    known: Vec<usize>,
    erased: Vec<usize>,
    m_known: Poly,
    m_erased: Poly,
    erased_weight: usize,
}

impl ErasurePattern {
    /// Pattern from the set of known indices.
    pub fn from_known(spec: &CodeSpec, known: &[usize]) -> Result<ErasurePattern> {
        let n = spec.n();
        let known: BTreeSet<usize> = known.iter().copied().collect();
        if let Some(&index) = known.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index, n });
        }
        if known.is_empty() {
            return Err(Error::InsufficientSupport {
                support: 0,
                k_deg: spec.big_k(),
            });
        }
        let erased: Vec<usize> = (0..n).filter(|i| !known.contains(i)).collect();
        let known: Vec<usize> = known.into_iter().collect();
        let pick = |idx: &[usize]| product(spec.field(), idx.iter().map(|&i| &spec.moduli()[i]));
        let m_known = pick(&known);
        let m_erased = pick(&erased);
        debug_assert_eq!(&(&m_known * &m_erased), spec.mn());
        Ok(ErasurePattern {
            erased_weight: spec.set_degree_weight(&erased),
            known,
            erased,
            m_known,
            m_erased,
        })
    }

    /// Pattern from the set of erased indices.
    pub fn from_erased(spec: &CodeSpec, erased: &[usize]) -> Result<ErasurePattern> {
        if let Some(&index) = erased.iter().find(|&&i| i >= spec.n()) {
            return Err(Error::IndexOutOfRange { index, n: spec.n() });
        }
        let known: Vec<usize> = (0..spec.n()).filter(|i| !erased.contains(i)).collect();
        ErasurePattern::from_known(spec, &known)
    }

    pub fn known(&self) -> &[usize] {
        &self.known
    }

    pub fn erased(&self) -> &[usize] {
        &self.erased
    }

    /// `M_S`, the product of the known moduli.
    pub fn m_known(&self) -> &Poly {
        &self.m_known
    }

    /// `M_S̄ = M_n / M_S`.
    pub fn m_erased(&self) -> &Poly {
        &self.m_erased
    }

    /// `w_D(S̄)`.
    pub fn erased_weight(&self) -> usize {
        self.erased_weight
    }
}

/// CRT restricted to the known positions.
///
/// `known_symbols` lists the residues in the order of `pattern.known()`.
/// Requires `w_D(S) >= K`.
pub fn interpolate_direct(
    spec: &CodeSpec,
    known_symbols: &[Poly],
    pattern: &ErasurePattern,
) -> Result<Poly> {
    let support = spec.big_n() - pattern.erased_weight();
    if support < spec.big_k() {
        return Err(Error::InsufficientSupport {
            support,
            k_deg: spec.big_k(),
        });
    }
    if known_symbols.len() != pattern.known().len() {
        return Err(Error::WrongLength {
            got: known_symbols.len(),
            expected: pattern.known().len(),
        });
    }
    let ms = pattern.m_known();
    let mut sum = Poly::zero(spec.field());
    for (&i, c) in pattern.known().iter().zip(known_symbols) {
        let m = &spec.moduli()[i];
        if c.field() != spec.field() {
            return Err(Error::SpecMismatch);
        }
        if c.deg() >= m.deg() {
            return Err(Error::ResidueDegreeViolation(i));
        }
        let cofactor = ms.div_exact(m)?;
        let inv = cofactor
            .inverse_mod(m)?
            .expect("moduli are pairwise coprime");
        let beta = &cofactor * &inv;
        sum = &sum + &(c * &beta);
    }
    let a = sum.rem(ms)?;
    if a.deg() >= spec.big_k() {
        return Err(Error::InconsistentResidues);
    }
    Ok(a)
}

/// Erasure decoding with the code's fixed CRT coefficients:
/// `Z = M_S̄ * psi^{-1}(filled) mod M_n`, `a = Z / M_S̄`.
///
/// Symbols at erased positions may hold anything of the right degree.
/// Requires `w_D(S̄) <= N - K`.
pub fn interpolate_fixed_transform(
    spec: &CodeSpec,
    filled: &Codeword,
    pattern: &ErasurePattern,
) -> Result<Poly> {
    let budget = spec.big_n() - spec.big_k();
    if pattern.erased_weight() > budget {
        return Err(Error::ErasureBudgetExceeded {
            erased: pattern.erased_weight(),
            budget,
        });
    }
    let y = spec.psi_inverse(filled)?;
    let z = (pattern.m_erased() * &y).rem(spec.mn())?;
    let a = z.div_exact(pattern.m_erased())?;
    if a.deg() >= spec.big_k() {
        return Err(Error::MessageDegreeOverflow);
    }
    Ok(a)
}
