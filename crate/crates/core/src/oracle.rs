//! Brute-force references: minimum-distance decoding and exhaustive
//! distance scans by enumerating every message.

use rayon::prelude::*;

use crate::code::{CodeSpec, Codeword};
use crate::error::{Error, Result};
use crate::poly::Poly;

/// Default bound on the number of messages a brute-force routine visits.
pub const DEFAULT_SEARCH_CAP: u128 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Metric {
    Hamming,
    Degree,
}

/// Message number `index` in base-`q` digit order (coefficient `i` is digit `i`).
pub fn message_at(spec: &CodeSpec, index: u128) -> Poly {
    let q = spec.field().size() as u128;
    let mut rest = index;
    let coeffs = (0..spec.big_k())
        .map(|_| {
            let c = (rest % q) as u32;
            rest /= q;
            c
        })
        .collect();
    Poly::from_coeffs(spec.field(), coeffs).expect("digits are field elements")
}

fn checked_count(spec: &CodeSpec, cap: u128) -> Result<u64> {
    let size = spec.message_count();
    if size > cap {
        return Err(Error::SearchSpaceTooLarge { size, cap });
    }
    Ok(size as u64)
}

fn distance(spec: &CodeSpec, metric: Metric, a: &Codeword, b: &Codeword) -> usize {
    (0..a.len())
        .filter(|&i| a.symbols[i] != b.symbols[i])
        .map(|i| match metric {
            Metric::Hamming => 1,
            Metric::Degree => spec.degrees()[i],
        })
        .sum()
}

/// Every message whose codeword is nearest to `y`, in index order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nearest {
    pub messages: Vec<Poly>,
    pub distance: usize,
}

/// Minimum-distance decoding by scanning all messages; ties are all returned.
pub fn brute_force_decode(
    spec: &CodeSpec,
    y: &Codeword,
    metric: Metric,
    cap: u128,
) -> Result<Nearest> {
    spec.check_word(y)?;
    let count = checked_count(spec, cap)?;
    let (distance, indices) = (0..count)
        .into_par_iter()
        .map(|idx| {
            let c = spec
                .psi(&message_at(spec, idx as u128))
                .expect("message fits");
            (distance(spec, metric, &c, y), vec![idx])
        })
        .reduce(
            || (usize::MAX, Vec::new()),
            |a, b| match a.0.cmp(&b.0) {
                std::cmp::Ordering::Less => a,
                std::cmp::Ordering::Greater => b,
                std::cmp::Ordering::Equal => {
                    let mut v = a.1;
                    v.extend(b.1);
                    (a.0, v)
                }
            },
        );
    let mut indices = indices;
    indices.sort_unstable();
    Ok(Nearest {
        messages: indices
            .into_iter()
            .map(|i| message_at(spec, i as u128))
            .collect(),
        distance,
    })
}

/// Exact distances and Singleton-bound right-hand sides for a code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeScanReport {
    pub dmin_h: usize,
    pub dmin_d: usize,
    pub codeword_count: u128,
    /// `log_q` of `min |R_S|` over `|S| = n - dmin_h + 1`: the smallest
    /// `n - dmin_h + 1` symbol degrees summed.
    pub singleton_h_rhs: usize,
    /// `min { w_D(S) : w_D(S) > N - dmin_d }`.
    pub singleton_d_rhs: usize,
}

impl std::fmt::Display for CodeScanReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "dmin_h: {}", self.dmin_h)?;
        writeln!(f, "dmin_d: {}", self.dmin_d)?;
        writeln!(f, "codeword_count: {}", self.codeword_count)?;
        writeln!(f, "singleton_h_rhs_log: {}", self.singleton_h_rhs)?;
        write!(f, "singleton_d_rhs: {}", self.singleton_d_rhs)
    }
}

/// Minimum Hamming and degree weights over all nonzero codewords (the code
/// is linear, so these are the minimum distances).
pub fn exhaustive_scan(spec: &CodeSpec, cap: u128) -> Result<CodeScanReport> {
    let count = checked_count(spec, cap)?;
    if count < 2 {
        return Err(Error::InvalidOptions("code has no nonzero codeword"));
    }
    let (dmin_h, dmin_d) = (1..count)
        .into_par_iter()
        .map(|idx| {
            let c = spec
                .psi(&message_at(spec, idx as u128))
                .expect("message fits");
            (spec.hamming_weight(&c), spec.degree_weight(&c))
        })
        .reduce(
            || (usize::MAX, usize::MAX),
            |a, b| (a.0.min(b.0), a.1.min(b.1)),
        );
    let mut sorted = spec.degrees().to_vec();
    sorted.sort_unstable();
    let singleton_h_rhs = sorted[..spec.n() - dmin_h + 1].iter().sum();
    let singleton_d_rhs = spec
        .min_set_weight_above(spec.big_n() - dmin_d)
        .expect("the full index set has weight N > N - dmin_d");
    Ok(CodeScanReport {
        dmin_h,
        dmin_d,
        codeword_count: count as u128,
        singleton_h_rhs,
        singleton_d_rhs,
    })
}
