//! Polynomial remainder codes: the CRT map and its inverse, weights,
//! distances and derived code parameters.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::poly::{product, Poly};

/// A vector of residues `(c_0, .., c_{n-1})`, one per modulus, in moduli order.
///
/// Used both for codewords and for arbitrary received or error words.
#[derive(Clone, PartialEq, Eq)]
pub struct Codeword {
    pub symbols: Vec<Poly>,
}

impl fmt::Debug for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.symbols.iter()).finish()
    }
}

impl Codeword {
    pub fn new(symbols: Vec<Poly>) -> Codeword {
        Codeword { symbols }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Symbol-wise sum. Residue degrees cannot grow, so no reduction is needed.
    pub fn add(&self, other: &Codeword) -> Codeword {
        Codeword::new(
            self.symbols
                .iter()
                .zip(&other.symbols)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Codeword) -> Codeword {
        Codeword::new(
            self.symbols
                .iter()
                .zip(&other.symbols)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Indices of nonzero symbols.
    pub fn support(&self) -> Vec<usize> {
        self.symbols
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

/// Hamming and degree weights of a word, plus distances when a second word is given.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Weights {
    pub hamming: usize,
    pub degree: usize,
    pub hamming_distance: Option<usize>,
    pub degree_distance: Option<usize>,
}

/// A validated polynomial remainder code.
///
/// Moduli are kept in the caller's order; the ordered-degree flag records
/// whether `deg m_0 <= deg m_1 <= ...` holds.
#[derive(Clone, Debug)]
pub struct CodeSpec {
    field: Field,
    moduli: Vec<Poly>,
    degrees: Vec<usize>,
    k: usize,
    mn: Poly,
    mk: Poly,
    big_n: usize,
    big_k: usize,
    betas: Vec<Poly>,
    ordered_degree: bool,
    irreducible: bool,
    tail_equal_degree: bool,
}

impl PartialEq for CodeSpec {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.moduli == other.moduli && self.k == other.k
    }
}

impl CodeSpec {
    /// Validates the moduli and precomputes `M_n`, `M_k`, the CRT
    /// coefficients `beta_i` and the structural flags.
    pub fn new(field: &Field, moduli: Vec<Poly>, k: usize) -> Result<CodeSpec> {
        if moduli.is_empty() {
            return Err(Error::NoModuli);
        }
        let n = moduli.len();
        let mut degrees = Vec::with_capacity(n);
        for (i, m) in moduli.iter().enumerate() {
            if m.field() != field {
                return Err(Error::SpecMismatch);
            }
            match m.degree() {
                None | Some(0) => return Err(Error::ConstantModulus(i)),
                Some(d) => degrees.push(d),
            }
            if !m.is_monic() {
                return Err(Error::NonMonicModulus(i));
            }
        }
        if k == 0 || k > n {
            return Err(Error::BadK { k, n });
        }

        let mut prefix = Poly::one(field);
        for (j, m) in moduli.iter().enumerate() {
            if !m.gcd(&prefix)?.is_one() {
                let i = (0..j)
                    .find(|&i| !moduli[i].gcd(m).map(|g| g.is_one()).unwrap_or(false))
                    .expect("a common factor with the prefix product comes from one modulus");
                return Err(Error::NonCoprimeModuli(i, j));
            }
            prefix = &prefix * m;
        }
        let mn = prefix;
        let mk = product(field, &moduli[..k]);
        let big_n = degrees.iter().sum();
        let big_k = degrees[..k].iter().sum();

        let betas = moduli
            .iter()
            .map(|m| {
                let cofactor = mn.div_exact(m)?;
                let inv = cofactor
                    .inverse_mod(m)?
                    .expect("cofactor is invertible modulo a coprime modulus");
                Ok(&cofactor * &inv)
            })
            .collect::<Result<Vec<_>>>()?;

        let ordered_degree = degrees.windows(2).all(|w| w[0] <= w[1]);
        let irreducible = moduli
            .iter()
            .map(|m| m.is_irreducible())
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .all(|b| b);
        let tail_equal_degree = degrees[k..].windows(2).all(|w| w[0] == w[1]);

        Ok(CodeSpec {
            field: field.clone(),
            moduli,
            degrees,
            k,
            mn,
            mk,
            big_n,
            big_k,
            betas,
            ordered_degree,
            irreducible,
            tail_equal_degree,
        })
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn moduli(&self) -> &[Poly] {
        &self.moduli
    }

    /// `deg m_i` for each modulus.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Number of symbols `n`.
    pub fn n(&self) -> usize {
        self.moduli.len()
    }

    /// Number of message symbols `k`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// `N = deg M_n`, the length of the code over F.
    pub fn big_n(&self) -> usize {
        self.big_n
    }

    /// `K = deg M_k`, the dimension of the code over F.
    pub fn big_k(&self) -> usize {
        self.big_k
    }

    /// Product of all moduli.
    pub fn mn(&self) -> &Poly {
        &self.mn
    }

    /// Product of the first `k` moduli.
    pub fn mk(&self) -> &Poly {
        &self.mk
    }

    /// CRT coefficients: `beta_i = 1 mod m_i`, `0 mod m_j` for `j != i`.
    pub fn betas(&self) -> &[Poly] {
        &self.betas
    }

    /// `floor((n - k) / 2)`.
    pub fn t_h(&self) -> usize {
        (self.n() - self.k) / 2
    }

    /// `floor((N - K) / 2)`.
    pub fn t_d(&self) -> usize {
        (self.big_n - self.big_k) / 2
    }

    pub fn ordered_degree(&self) -> bool {
        self.ordered_degree
    }

    pub fn irreducible(&self) -> bool {
        self.irreducible
    }

    /// `deg m_k = ... = deg m_{n-1}`.
    pub fn tail_equal_degree(&self) -> bool {
        self.tail_equal_degree
    }

    pub fn rate(&self) -> f64 {
        self.big_k as f64 / self.big_n as f64
    }

    pub fn symbol_rate(&self) -> f64 {
        self.k as f64 / self.n() as f64
    }

    /// Number of messages, `|F|^K`, saturating at `u128::MAX`.
    pub fn message_count(&self) -> u128 {
        (self.field.size() as u128)
            .checked_pow(self.big_k as u32)
            .unwrap_or(u128::MAX)
    }

    /// Residues `a mod m_i` of an arbitrary polynomial.
    pub fn psi(&self, a: &Poly) -> Result<Codeword> {
        if a.field() != &self.field {
            return Err(Error::SpecMismatch);
        }
        Ok(Codeword::new(
            self.moduli
                .iter()
                .map(|m| a.rem(m))
                .collect::<Result<_>>()?,
        ))
    }

    /// Encodes a message polynomial of degree below `K`.
    pub fn encode(&self, message: &Poly) -> Result<Codeword> {
        self.check_message(message)?;
        self.psi(message)
    }

    pub fn check_message(&self, message: &Poly) -> Result<()> {
        if message.field() != &self.field {
            return Err(Error::SpecMismatch);
        }
        match message.degree() {
            Some(d) if d >= self.big_k => Err(Error::MessageTooLarge {
                degree: d,
                k_deg: self.big_k,
            }),
            _ => Ok(()),
        }
    }

    /// Checks length, field and residue degrees of a word.
    pub fn check_word(&self, word: &Codeword) -> Result<()> {
        if word.len() != self.n() {
            return Err(Error::WrongLength {
                got: word.len(),
                expected: self.n(),
            });
        }
        for (i, (s, m)) in word.symbols.iter().zip(&self.moduli).enumerate() {
            if s.field() != &self.field {
                return Err(Error::SpecMismatch);
            }
            if s.deg() >= m.deg() {
                return Err(Error::ResidueDegreeViolation(i));
            }
        }
        Ok(())
    }

    /// The unique `a` with `deg a < N` and `a mod m_i = word[i]`:
    /// `sum c_i beta_i mod M_n`.
    pub fn psi_inverse(&self, word: &Codeword) -> Result<Poly> {
        self.check_word(word)?;
        let sum = word
            .symbols
            .iter()
            .zip(&self.betas)
            .fold(Poly::zero(&self.field), |acc, (c, b)| &acc + &(c * b));
        sum.rem(&self.mn)
    }

    pub fn zero_word(&self) -> Codeword {
        Codeword::new(vec![Poly::zero(&self.field); self.n()])
    }

    /// Symbol-wise product reduced modulo each `m_i`.
    pub fn mul_words(&self, a: &Codeword, b: &Codeword) -> Result<Codeword> {
        self.check_word(a)?;
        self.check_word(b)?;
        Ok(Codeword::new(
            a.symbols
                .iter()
                .zip(&b.symbols)
                .zip(&self.moduli)
                .map(|((x, y), m)| (x * y).rem(m))
                .collect::<Result<_>>()?,
        ))
    }

    /// Degree weight of an index set: `sum_{i in S} deg m_i`.
    pub fn set_degree_weight(&self, indices: &[usize]) -> usize {
        indices.iter().map(|&i| self.degrees[i]).sum()
    }

    pub fn weights(&self, x: &Codeword, y: Option<&Codeword>) -> Result<Weights> {
        self.check_word(x)?;
        let support = x.support();
        let mut w = Weights {
            hamming: support.len(),
            degree: self.set_degree_weight(&support),
            hamming_distance: None,
            degree_distance: None,
        };
        if let Some(y) = y {
            self.check_word(y)?;
            let diff = x.sub(y).support();
            w.hamming_distance = Some(diff.len());
            w.degree_distance = Some(self.set_degree_weight(&diff));
        }
        Ok(w)
    }

    pub fn hamming_weight(&self, x: &Codeword) -> usize {
        x.support().len()
    }

    pub fn degree_weight(&self, x: &Codeword) -> usize {
        self.set_degree_weight(&x.support())
    }

    /// Subset-sum reachability over the multiset of modulus degrees:
    /// `reachable[s]` iff some index set has degree weight `s`.
    fn reachable_weights(&self) -> Vec<bool> {
        let mut reach = vec![false; self.big_n + 1];
        reach[0] = true;
        for &d in &self.degrees {
            for s in (d..=self.big_n).rev() {
                if reach[s - d] {
                    reach[s] = true;
                }
            }
        }
        reach
    }

    /// `min { w_D(S) : w_D(S) > threshold }`, or `None` if no set exceeds it.
    pub fn min_set_weight_above(&self, threshold: usize) -> Option<usize> {
        let reach = self.reachable_weights();
        (threshold + 1..=self.big_n).find(|&s| reach[s])
    }

    /// Minimum degree-weighted distance: the smallest achievable set degree
    /// weight exceeding `N - K`.
    pub fn min_degree_distance(&self) -> usize {
        self.min_set_weight_above(self.big_n - self.big_k)
            .expect("the full index set has weight N > N - K")
    }

    /// Minimum Hamming distance `n - k + 1`; only valid under the
    /// ordered-degree condition.
    pub fn min_hamming_distance(&self) -> Result<usize> {
        if !self.ordered_degree {
            return Err(Error::UnorderedDegrees);
        }
        Ok(self.n() - self.k + 1)
    }

    /// `sum_{i = n - t_H}^{n-1} deg m_i`, the degree window bound of the locator test.
    pub fn top_t_h_degree_sum(&self) -> usize {
        self.degrees[self.n() - self.t_h()..].iter().sum()
    }
}
