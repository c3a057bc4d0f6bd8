#![allow(dead_code)]

use prc_core::{CodeSpec, Codeword, Field, Poly};
use rand::Rng;

pub fn poly(f: &Field, c: &[u32]) -> Poly {
    Poly::from_coeffs(f, c.to_vec()).unwrap()
}

pub fn spec(f: &Field, moduli: &[&[u32]], k: usize) -> CodeSpec {
    CodeSpec::new(f, moduli.iter().map(|m| poly(f, m)).collect(), k).unwrap()
}

/// Reed-Solomon style code over GF(5) with moduli `x - 1, .., x - 4`, k = 2.
pub fn rs42() -> CodeSpec {
    let f = Field::prime(5).unwrap();
    CodeSpec::new(&f, (1..=4).map(|b| Poly::linear(&f, b)).collect(), 2).unwrap()
}

/// GF(2), moduli `x, x+1, x^2+x+1`, k = 2.
pub fn three_modulus() -> CodeSpec {
    let f = Field::prime(2).unwrap();
    spec(&f, &[&[0, 1], &[1, 1], &[1, 1, 1]], 2)
}

/// GF(2), irreducible moduli of degrees 1..5, k = 3.
pub fn ladder_gf2() -> CodeSpec {
    let f = Field::prime(2).unwrap();
    spec(
        &f,
        &[
            &[0, 1],
            &[1, 1, 1],
            &[1, 1, 0, 1],
            &[1, 1, 0, 0, 1],
            &[1, 0, 1, 0, 0, 1],
        ],
        3,
    )
}

/// GF(4) with `alpha = 2`: moduli `x, x+1, x+alpha, x^2+x+alpha, x^2+x+alpha^2`, k = 3.
pub fn mixed_gf4() -> CodeSpec {
    let f = Field::binary(2).unwrap();
    spec(&f, &[&[0, 1], &[1, 1], &[2, 1], &[2, 1, 1], &[3, 1, 1]], 3)
}

/// GF(2), moduli `x^2, x+1, x^2+x+1`, k = 1: the first modulus is reducible.
pub fn reducible_small() -> CodeSpec {
    let f = Field::prime(2).unwrap();
    spec(&f, &[&[0, 0, 1], &[1, 1], &[1, 1, 1]], 1)
}

/// GF(2), moduli `x^2, x+1, x^2+x+1, x^3+x+1, x^3+x^2+1`, k = 2.
pub fn reducible_larger() -> CodeSpec {
    let f = Field::prime(2).unwrap();
    spec(
        &f,
        &[
            &[0, 0, 1],
            &[1, 1],
            &[1, 1, 1],
            &[1, 1, 0, 1],
            &[1, 0, 1, 1],
        ],
        2,
    )
}

pub fn random_poly(f: &Field, len: usize, rng: &mut impl Rng) -> Poly {
    let q = f.size();
    Poly::from_coeffs(f, (0..len).map(|_| rng.gen_range(0..q)).collect()).unwrap()
}

pub fn random_message(spec: &CodeSpec, rng: &mut impl Rng) -> Poly {
    random_poly(spec.field(), spec.big_k(), rng)
}

/// Random word: every symbol uniform modulo its modulus.
pub fn random_word(spec: &CodeSpec, rng: &mut impl Rng) -> Codeword {
    Codeword::new(
        spec.degrees()
            .iter()
            .map(|&d| random_poly(spec.field(), d, rng))
            .collect(),
    )
}

/// Random code over `field`: 2..=max_n pairwise coprime monic moduli of
/// degree 1..=max_deg (reducible ones allowed), sorted by degree, random k.
pub fn random_spec(field: &Field, max_n: usize, max_deg: usize, rng: &mut impl Rng) -> CodeSpec {
    loop {
        let n = rng.gen_range(2..=max_n);
        let mut moduli: Vec<Poly> = Vec::new();
        let mut attempts = 0;
        while moduli.len() < n && attempts < 200 {
            attempts += 1;
            let d = rng.gen_range(1..=max_deg);
            let mut c: Vec<u32> = (0..d).map(|_| rng.gen_range(0..field.size())).collect();
            c.push(1);
            let m = Poly::from_coeffs(field, c).unwrap();
            if moduli.iter().all(|o| o.gcd(&m).unwrap().is_one()) {
                moduli.push(m);
            }
        }
        if moduli.len() < 2 {
            continue;
        }
        moduli.sort_by_key(|m| m.degree());
        let k = rng.gen_range(1..moduli.len());
        return CodeSpec::new(field, moduli, k).unwrap();
    }
}

pub fn test_fields() -> Vec<Field> {
    vec![
        Field::prime(2).unwrap(),
        Field::binary(2).unwrap(),
        Field::prime(5).unwrap(),
        Field::binary(4).unwrap(),
    ]
}

/// Binary polynomials as bit masks (bit i = coefficient of x^i).
pub fn clmul(a: u64, b: u64) -> u64 {
    let mut out = 0;
    for i in 0..64 {
        if (b >> i) & 1 == 1 {
            out ^= a << i;
        }
    }
    out
}

/// Number of irreducible binary polynomials of each degree `1..=max_degree`,
/// by crossing out every product of two polynomials of positive degree.
pub fn binary_irreducible_sieve(max_degree: u32) -> Vec<u64> {
    let limit = 1u64 << (max_degree + 1);
    let mut reducible = vec![false; limit as usize];
    for a in 2..limit {
        let da = 63 - a.leading_zeros();
        if 2 * da > max_degree {
            break;
        }
        for b in a..limit {
            let db = 63 - b.leading_zeros();
            if da + db > max_degree {
                break;
            }
            reducible[clmul(a, b) as usize] = true;
        }
    }
    (1..=max_degree)
        .map(|d| {
            ((1u64 << d)..(1u64 << (d + 1)))
                .filter(|&p| !reducible[p as usize])
                .count() as u64
        })
        .collect()
}

/// `min { w_D(S) : w_D(S) > threshold }` by enumerating every index subset.
pub fn min_subset_weight_above(degrees: &[usize], threshold: usize) -> usize {
    (1u32..(1 << degrees.len()))
        .map(|mask| {
            (0..degrees.len())
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| degrees[i])
                .sum::<usize>()
        })
        .filter(|&w| w > threshold)
        .min()
        .unwrap()
}
