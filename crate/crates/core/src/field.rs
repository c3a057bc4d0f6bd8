//! Arithmetic in GF(p) and GF(p^m).
//!
//! Elements are encoded as integers in `[0, p^m)`: the polynomial-basis
//! coefficient vector `(c_0, .., c_{m-1})` maps to `sum c_i p^i`. This
//! encoding is also the serialization format.
//!
//! Multiplication goes through log/antilog tables built once per field.
//! Addition is XOR in characteristic 2, plain modular addition in prime
//! fields, and uses a Zech logarithm table otherwise. Fields up to
//! 2^16 elements are supported.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::poly::Poly;

/// Largest supported field size.
pub const MAX_FIELD_SIZE: u32 = 1 << 16;

const NO_LOG: u32 = u32::MAX;

struct Inner {
    p: u32,
    m: u32,
    q: u32,
    /// Monic reduction polynomial, low-to-high, length `m + 1`; empty for prime fields.
    reduction: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// `zech[k] = log(1 + g^k)`, `NO_LOG` when the sum is zero. Only for odd `p`, `m > 1`.
    zech: Vec<u32>,
}

/// Immutable handle to a finite field; cheap to clone and share across threads.
#[derive(Clone)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p
                && self.0.m == other.0.m
                && self.0.reduction == other.0.reduction)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.m == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(
                f,
                "GF({}^{}) mod {:?}",
                self.0.p, self.0.m, self.0.reduction
            )
        }
    }
}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n as u64 {
        if (n as u64).is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Multiplication by digit vectors, used only while building the tables.
fn slow_mul(p: u32, m: u32, reduction: &[u32], a: u32, b: u32) -> u32 {
    if m == 1 {
        return ((a as u64 * b as u64) % p as u64) as u32;
    }
    let m = m as usize;
    let digits = |mut v: u32| {
        let mut d = vec![0u64; m];
        for x in d.iter_mut() {
            *x = (v % p) as u64;
            v /= p;
        }
        d
    };
    let (da, db) = (digits(a), digits(b));
    let p64 = p as u64;
    let mut prod = vec![0u64; 2 * m - 1];
    for (i, &x) in da.iter().enumerate() {
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p64;
        }
    }
    // reduction is monic of degree m
    for top in (m..prod.len()).rev() {
        let c = prod[top];
        if c == 0 {
            continue;
        }
        for (k, &r) in reduction.iter().enumerate().take(m) {
            let idx = top - m + k;
            prod[idx] = (prod[idx] + (p64 - c) * r as u64) % p64;
        }
        prod[top] = 0;
    }
    prod[..m].iter().rev().fold(0u64, |acc, &d| acc * p64 + d) as u32
}

fn slow_pow(p: u32, m: u32, reduction: &[u32], mut base: u32, mut e: u64) -> u32 {
    let mut acc = 1u32;
    while e > 0 {
        if e & 1 == 1 {
            acc = slow_mul(p, m, reduction, acc, base);
        }
        base = slow_mul(p, m, reduction, base, base);
        e >>= 1;
    }
    acc
}

impl Field {
    /// Builds GF(p^m). `reduction` must be given exactly when `m > 1`; it is a
    /// monic polynomial of degree `m` over GF(p), low-to-high, and is checked
    /// for irreducibility.
    pub fn new(p: u32, m: u32, reduction: Option<&[u32]>) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NonPrimeCharacteristic(p));
        }
        if m == 0 {
            return Err(Error::DegreeMismatch(
                "extension degree must be at least 1".into(),
            ));
        }
        let q = (p as u64)
            .checked_pow(m)
            .filter(|&q| q <= MAX_FIELD_SIZE as u64)
            .ok_or(Error::FieldTooLarge { p, m })? as u32;

        let reduction = match (m, reduction) {
            (1, None) => Vec::new(),
            (1, Some(_)) => {
                return Err(Error::DegreeMismatch(
                    "prime fields take no reduction polynomial".into(),
                ))
            }
            (_, None) => {
                return Err(Error::DegreeMismatch(format!(
                    "GF({p}^{m}) needs a reduction polynomial"
                )))
            }
            (_, Some(r)) => {
                if r.len() != m as usize + 1 {
                    return Err(Error::DegreeMismatch(format!(
                        "reduction polynomial has {} coefficients, expected {}",
                        r.len(),
                        m + 1
                    )));
                }
                if r[m as usize] != 1 {
                    return Err(Error::DegreeMismatch(
                        "reduction polynomial must be monic".into(),
                    ));
                }
                if let Some(&bad) = r.iter().find(|&&c| c >= p) {
                    return Err(Error::ElementOutOfRange {
                        value: bad as u64,
                        q: p,
                    });
                }
                let base = Field::new(p, 1, None)?;
                let poly = Poly::from_coeffs(&base, r.to_vec())?;
                if !poly.is_irreducible()? {
                    return Err(Error::ReducibleModulus(p));
                }
                r.to_vec()
            }
        };

        let order = q - 1;
        let generator = if q == 2 {
            1
        } else {
            let factors = prime_factors(order);
            (2..q)
                .find(|&g| {
                    factors
                        .iter()
                        .all(|&f| slow_pow(p, m, &reduction, g, (order / f) as u64) != 1)
                })
                .expect("irreducible reduction polynomial yields a cyclic group")
        };

        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![NO_LOG; q as usize];
        let mut x = 1u32;
        for i in 0..order as usize {
            exp[i] = x;
            exp[i + order as usize] = x;
            log[x as usize] = i as u32;
            x = slow_mul(p, m, &reduction, x, generator);
        }

        let zech = if p != 2 && m > 1 {
            (0..order as usize)
                .map(|k| {
                    let v = exp[k];
                    let low = v % p;
                    let sum = v - low + (low + 1) % p;
                    log[sum as usize]
                })
                .collect()
        } else {
            Vec::new()
        };

        Ok(Field(Arc::new(Inner {
            p,
            m,
            q,
            reduction,
            exp,
            log,
            zech,
        })))
    }

    /// The prime field GF(p).
    pub fn prime(p: u32) -> Result<Field> {
        Field::new(p, 1, None)
    }

    /// GF(2^m) with the numerically smallest irreducible reduction polynomial
    /// (e.g. `x^2+x+1`, `x^4+x+1`, `x^8+x^4+x^3+x+1`).
    pub fn binary(m: u32) -> Result<Field> {
        if m == 1 {
            return Field::prime(2);
        }
        if m > 16 {
            return Err(Error::FieldTooLarge { p: 2, m });
        }
        let gf2 = Field::prime(2)?;
        for low in (1u32..1 << m).step_by(2) {
            let bits: Vec<u32> = (0..=m)
                .map(|i| if i == m { 1 } else { (low >> i) & 1 })
                .collect();
            if Poly::from_coeffs(&gf2, bits.clone())?.is_irreducible()? {
                return Field::new(2, m, Some(&bits));
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn characteristic(&self) -> u32 {
        self.0.p
    }

    pub fn extension_degree(&self) -> u32 {
        self.0.m
    }

    /// Number of elements.
    pub fn size(&self) -> u32 {
        self.0.q
    }

    /// Reduction polynomial (low-to-high); `None` for prime fields.
    pub fn reduction(&self) -> Option<&[u32]> {
        if self.0.m == 1 {
            None
        } else {
            Some(&self.0.reduction)
        }
    }

    pub fn element(&self, value: u32) -> Result<FieldElement> {
        self.check(value)?;
        Ok(FieldElement {
            value,
            field: self.clone(),
        })
    }

    pub(crate) fn check(&self, value: u32) -> Result<()> {
        if value < self.0.q {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                value: value as u64,
                q: self.0.q,
            })
        }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let f = &*self.0;
        if f.p == 2 {
            return a ^ b;
        }
        if f.m == 1 {
            let s = a + b;
            return if s >= f.p { s - f.p } else { s };
        }
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let order = f.q - 1;
        let la = f.log[a as usize];
        let lb = f.log[b as usize];
        let k = if lb >= la { lb - la } else { lb + order - la };
        match f.zech[k as usize] {
            NO_LOG => 0,
            z => f.exp[(la + z) as usize],
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        let f = &*self.0;
        if f.p == 2 || a == 0 {
            a
        } else if f.m == 1 {
            f.p - a
        } else {
            // -1 is the constant p-1
            self.mul(a, f.p - 1)
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let f = &*self.0;
        f.exp[(f.log[a as usize] + f.log[b as usize]) as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let f = &*self.0;
        let order = f.q - 1;
        Some(f.exp[((order - f.log[a as usize]) % order) as usize])
    }

    /// `a / b`; panics when `b == 0`.
    #[inline]
    pub fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b).expect("division by zero field element"))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let f = &*self.0;
        let order = (f.q - 1) as u64;
        let l = (f.log[a as usize] as u64 * (e % order)) % order;
        f.exp[l as usize]
    }
}

/// Binary field operation selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
}

/// A field element bound to its field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    value: u32,
    field: Field,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl FieldElement {
    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn arith(&self, other: &FieldElement, op: FieldOp) -> Result<FieldElement> {
        if self.field != other.field {
            return Err(Error::SpecMismatch);
        }
        let f = &self.field;
        let value = match op {
            FieldOp::Add => f.add(self.value, other.value),
            FieldOp::Sub => f.sub(self.value, other.value),
            FieldOp::Mul => f.mul(self.value, other.value),
        };
        Ok(FieldElement {
            value,
            field: f.clone(),
        })
    }

    pub fn inv(&self) -> Result<FieldElement> {
        let value = self.field.inv(self.value).ok_or(Error::ZeroInverse)?;
        Ok(FieldElement {
            value,
            field: self.field.clone(),
        })
    }
}
