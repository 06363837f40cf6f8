#![allow(dead_code)]

use alternant::{Code, Elem, Field, GrsCode, Word};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Fields used across the test suites, as (p, m, modulus).
pub const SMALL_FIELDS: &[(u64, usize, &[u64])] = &[
    (2, 1, &[0, 1]),
    (3, 1, &[0, 1]),
    (5, 1, &[0, 1]),
    (7, 1, &[0, 1]),
    (11, 1, &[0, 1]),
    (13, 1, &[0, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (3, 2, &[1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (5, 2, &[2, 0, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (7, 2, &[1, 0, 1]),
    (2, 6, &[1, 1, 0, 0, 0, 0, 1]),
];

pub fn field(p: u64, m: usize, modulus: &[u64]) -> Field {
    Field::new(p, m, modulus).unwrap()
}

pub fn small_fields() -> Vec<Field> {
    SMALL_FIELDS.iter().map(|&(p, m, f)| field(p, m, f)).collect()
}

pub fn gf16() -> Field {
    field(2, 4, &[1, 1, 0, 0, 1])
}

pub fn els(f: &Field, v: &[u64]) -> Vec<Elem> {
    v.iter().map(|&x| f.elem(x).unwrap()).collect()
}

/// RS over GF(p) with alpha = 1..=n.
pub fn rs_prime(p: u64, n: u64, k: usize) -> GrsCode {
    let f = Field::prime(p).unwrap();
    GrsCode::reed_solomon(&f, (1..=n).map(|x| f.elem(x).unwrap()).collect(), k).unwrap()
}

/// RS over GF(16) on all nonzero elements.
pub fn rs_gf16(k: usize) -> GrsCode {
    let f = gf16();
    GrsCode::reed_solomon(&f, f.elements().skip(1).collect(), k).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random GRS code over `f` with `2 <= n <= min(order, max_n)` and `1 <= k < n`.
pub fn random_grs(f: &Field, rng: &mut ChaCha8Rng, max_n: usize) -> GrsCode {
    let mut pool: Vec<Elem> = f.elements().collect();
    pool.shuffle(rng);
    let n = rng.random_range(2..=pool.len().min(max_n));
    let alpha = pool[..n].to_vec();
    let u = (0..n).map(|_| f.elem(rng.random_range(1..f.order())).unwrap()).collect();
    let k = rng.random_range(1..n);
    GrsCode::new(f, alpha, u, k).unwrap()
}

pub fn random_word(f: &Field, n: usize, rng: &mut ChaCha8Rng) -> Word {
    (0..n).map(|_| f.elem(rng.random_range(0..f.order())).unwrap()).collect()
}

/// Every error vector of length `n` and weight exactly `t` over the given nonzero values.
pub fn error_patterns(n: usize, t: usize, nonzero: &[Elem]) -> Vec<Word> {
    let mut out = Vec::new();
    let mut positions: Vec<usize> = (0..t).collect();
    if t > n {
        return out;
    }
    loop {
        let mut digits = vec![0usize; t];
        loop {
            let mut e = vec![Elem::default(); n];
            for (&p, &d) in positions.iter().zip(&digits) {
                e[p] = nonzero[d];
            }
            out.push(e);
            let mut i = 0;
            while i < t {
                digits[i] += 1;
                if digits[i] < nonzero.len() {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == t {
                break;
            }
        }
        // next combination
        let mut i = t;
        while i > 0 && positions[i - 1] == n - t + i - 1 {
            i -= 1;
        }
        if i == 0 {
            return out;
        }
        positions[i - 1] += 1;
        for j in i..t {
            positions[j] = positions[j - 1] + 1;
        }
    }
}

pub fn add(f: &Field, a: &[Elem], b: &[Elem]) -> Word {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

/// All codewords of a GRS code by brute-force message enumeration.
pub fn all_codewords(code: &GrsCode) -> Vec<Word> {
    let mut out = Vec::new();
    alternant::harness::for_each_codeword(&Code::Grs(code.clone()), |c| out.push(c.to_vec())).unwrap();
    out
}
