use num_bigint::BigUint;

use super::Poly;
use crate::error::{Error, Result};

/// Ben-Or: a monic `f` of degree `d` is irreducible iff
/// `gcd(x^(q^i) - x, f) = 1` for every `1 <= i <= d/2`.
pub(super) fn is_irreducible(a: &Poly) -> Result<bool> {
    let d = match a.degree() {
        None | Some(0) => return Err(Error::ConstantInput),
        Some(d) => d,
    };
    if d == 1 {
        return Ok(true);
    }
    let f = a.monic();
    let q = a.field().size() as u64;
    let x = Poly::x(a.field());
    let mut h = x.clone();
    for _ in 1..=d / 2 {
        h = h.pow_mod(q, &f)?;
        if !(&h - &x).gcd(&f)?.is_one() {
            return Ok(false);
        }
    }
    Ok(true)
}

fn mobius(mut n: u32) -> i8 {
    let mut sign = 1i8;
    let mut d = 2u32;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

/// Number of monic irreducible polynomials of degree `degree` over GF(q):
/// `(1/i) * sum_{d | i} mu(d) q^(i/d)`.
pub fn count_irreducible(q: u64, degree: u32) -> BigUint {
    assert!(degree >= 1, "degree must be positive");
    let q = BigUint::from(q);
    let mut plus = BigUint::from(0u32);
    let mut minus = BigUint::from(0u32);
    for d in (1..=degree).filter(|d| degree.is_multiple_of(*d)) {
        let term = q.pow(degree / d);
        match mobius(d) {
            1 => plus += term,
            -1 => minus += term,
            _ => {}
        }
    }
    (plus - minus) / BigUint::from(degree)
}

/// `S_i = sum_{l=1}^{i} l * N_l` for `i = 1..=max_degree`: the largest
/// `deg M_n` reachable with distinct irreducible moduli of degree at most `i`.
pub fn cumulative_degree_sum(q: u64, max_degree: u32) -> Vec<BigUint> {
    let mut acc = BigUint::from(0u32);
    (1..=max_degree)
        .map(|l| {
            acc += count_irreducible(q, l) * BigUint::from(l);
            acc.clone()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn mobius_values() {
        let expect = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (n, &m) in (1..=12).zip(expect.iter()) {
            assert_eq!(mobius(n), m, "mu({n})");
        }
    }

    #[test]
    fn irreducibility_examples() {
        let f = Field::prime(2).unwrap();
        let p = |c: &[u32]| Poly::from_coeffs(&f, c.to_vec()).unwrap();
        assert!(p(&[1, 1, 1]).is_irreducible().unwrap());
        assert!(!p(&[1, 0, 1]).is_irreducible().unwrap());
        assert!(p(&[1, 1, 0, 0, 1]).is_irreducible().unwrap());
        // (x^2+x+1)^2 has no roots but is reducible
        assert!(!p(&[1, 0, 1, 0, 1]).is_irreducible().unwrap());
        assert_eq!(p(&[1]).is_irreducible(), Err(Error::ConstantInput));
        assert_eq!(Poly::zero(&f).is_irreducible(), Err(Error::ConstantInput));

        let g7 = Field::prime(7).unwrap();
        for b in 0..7 {
            assert!(Poly::linear(&g7, b).is_irreducible().unwrap());
        }
    }

    /// Degree-`d` monic polynomials over GF(q) enumerated and tested one by one.
    fn brute_count(field: &Field, d: usize) -> u64 {
        let q = field.size() as usize;
        let mut count = 0;
        for idx in 0..q.pow(d as u32) {
            let mut c: Vec<u32> = (0..d)
                .map(|i| ((idx / q.pow(i as u32)) % q) as u32)
                .collect();
            c.push(1);
            if Poly::from_coeffs(field, c)
                .unwrap()
                .is_irreducible()
                .unwrap()
            {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn count_agrees_with_direct_enumeration() {
        for (field, max_d) in [
            (Field::prime(2).unwrap(), 8),
            (Field::prime(3).unwrap(), 5),
            (Field::binary(2).unwrap(), 4),
            (Field::prime(5).unwrap(), 3),
        ] {
            for d in 1..=max_d {
                assert_eq!(
                    count_irreducible(field.size() as u64, d as u32),
                    BigUint::from(brute_count(&field, d)),
                    "{field} degree {d}"
                );
            }
        }
    }

    #[test]
    fn published_counts() {
        assert_eq!(count_irreducible(2, 16), BigUint::from(4080u32));
        assert_eq!(count_irreducible(2, 2), BigUint::from(1u32));
        assert_eq!(count_irreducible(256, 2), BigUint::from(32640u32));
        let s = cumulative_degree_sum(2, 16);
        assert_eq!(s[11], BigUint::from(8032u32));
        assert_eq!(s[15], BigUint::from(130486u32));
    }
}
