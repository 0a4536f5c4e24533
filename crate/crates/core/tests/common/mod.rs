//! Test-only oracles. Nothing here calls the library's multiplication,
//! reduction or product code; polynomials are plain maps from exponent
//! vectors to residues.

#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use rand::Rng;
use zpk_classes::fparith::PrimeModulus;
use zpk_classes::multipoly::{Monomial, SparsePoly};

pub type NaivePoly = BTreeMap<Vec<u32>, u64>;

pub fn pm(p: u64) -> PrimeModulus {
    PrimeModulus::new(p).unwrap()
}

pub fn to_naive(f: &SparsePoly) -> NaivePoly {
    f.terms()
        .map(|(m, c)| (m.exponents().to_vec(), c.value() as u64))
        .collect()
}

pub fn from_naive(p: u64, k: usize, f: &NaivePoly) -> SparsePoly {
    SparsePoly::from_terms(
        pm(p),
        k,
        f.iter().map(|(e, &c)| (Monomial::new(e.clone()), c as i64)),
    )
    .unwrap()
}

fn prune(f: NaivePoly) -> NaivePoly {
    f.into_iter().filter(|(_, c)| *c != 0).collect()
}

/// Schoolbook product, reducing each coefficient mod p.
pub fn naive_mul(p: u64, a: &NaivePoly, b: &NaivePoly) -> NaivePoly {
    let mut out = NaivePoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            let slot = out.entry(e).or_insert(0);
            *slot = (*slot + ca * cb) % p;
        }
    }
    prune(out)
}

pub fn naive_one(k: usize) -> NaivePoly {
    std::iter::once((vec![0; k], 1)).collect()
}

pub fn naive_product(p: u64, k: usize, fs: &[NaivePoly]) -> NaivePoly {
    fs.iter().fold(naive_one(k), |acc, f| naive_mul(p, &acc, f))
}

pub fn naive_reduce(f: &NaivePoly, caps: &[u64]) -> NaivePoly {
    f.iter()
        .filter(|(e, _)| e.iter().zip(caps).all(|(&x, &d)| (x as u64) < d))
        .map(|(e, c)| (e.clone(), *c))
        .collect()
}

/// Expands a product of linear forms by distributing one factor at a time.
pub fn expand_forms(p: u64, k: usize, forms: &[Vec<u64>]) -> NaivePoly {
    let mut acc = naive_one(k);
    for form in forms {
        let mut next = NaivePoly::new();
        for (e, c) in &acc {
            for (i, &a) in form.iter().enumerate() {
                if a % p == 0 {
                    continue;
                }
                let mut e2 = e.clone();
                e2[i] += 1;
                let slot = next.entry(e2).or_insert(0);
                *slot = (*slot + c * (a % p)) % p;
            }
        }
        acc = prune(next);
    }
    acc
}

/// All nonzero tuples of F_p^k.
pub fn all_nonzero_tuples(p: u64, k: usize) -> Vec<Vec<u64>> {
    let total = p.pow(k as u32);
    (1..total)
        .map(|mut n| {
            let mut t = vec![0; k];
            for slot in t.iter_mut().rev() {
                *slot = n % p;
                n /= p;
            }
            t
        })
        .collect()
}

/// Tuples `(a_1, ..., a_{i-1}, 1, 0, ..., 0)` for every `i`.
pub fn dickson_tuples(p: u64, k: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    for i in 0..k {
        for n in 0..p.pow(i as u32) {
            let mut t = vec![0; k];
            let mut r = n;
            for slot in t[..i].iter_mut().rev() {
                *slot = r % p;
                r /= p;
            }
            t[i] = 1;
            out.push(t);
        }
    }
    out
}

pub fn naive_scale(p: u64, f: &NaivePoly, c: u64) -> NaivePoly {
    prune(f.iter().map(|(e, x)| (e.clone(), x * (c % p) % p)).collect())
}

pub fn naive_pow(p: u64, k: usize, f: &NaivePoly, e: u64) -> NaivePoly {
    (0..e).fold(naive_one(k), |acc, _| naive_mul(p, &acc, f))
}

/// Determinant mod p by Gaussian elimination.
pub fn det_mod(p: u64, m: &[Vec<u64>]) -> u64 {
    let n = m.len();
    let mut a: Vec<Vec<u64>> = m.iter().map(|r| r.iter().map(|x| x % p).collect()).collect();
    let mut det = 1u64;
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| a[r][col] != 0) else {
            return 0;
        };
        if pivot != col {
            a.swap(pivot, col);
            det = (p - det) % p;
        }
        det = det * a[col][col] % p;
        let inv = mod_pow(a[col][col], p - 2, p);
        for r in col + 1..n {
            let f = a[r][col] * inv % p;
            for c in col..n {
                a[r][c] = (a[r][c] + p * p - f * a[col][c] % p) % p;
            }
        }
    }
    det
}

pub fn mod_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn random_invertible<R: Rng>(rng: &mut R, p: u64, k: usize) -> Vec<Vec<u64>> {
    loop {
        let m: Vec<Vec<u64>> = (0..k)
            .map(|_| (0..k).map(|_| rng.gen_range(0..p)).collect())
            .collect();
        if det_mod(p, &m) != 0 {
            return m;
        }
    }
}

/// Images `x_i -> sum_j g_ij x_j` as polynomials.
pub fn substitution_images(p: u64, g: &[Vec<u64>]) -> Vec<SparsePoly> {
    let k = g.len();
    g.iter()
        .map(|row| {
            let terms = row.iter().enumerate().map(|(j, &c)| {
                let mut e = vec![0; k];
                e[j] = 1;
                (Monomial::new(e), c as i64)
            });
            SparsePoly::from_terms(pm(p), k, terms).unwrap()
        })
        .collect()
}

/// Random polynomial over F_p in k variables with small exponents.
pub fn arb_poly(p: u64, k: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = SparsePoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, k), 0..p as i64),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        SparsePoly::from_terms(
            pm(p),
            k,
            terms.into_iter().map(|(e, c)| (Monomial::new(e), c)),
        )
        .unwrap()
    })
}

/// `(p, k)` pairs with `p` in {2, 3, 5} and `k <= 3`.
pub fn arb_field() -> impl Strategy<Value = (u64, usize)> {
    (prop::sample::select(vec![2u64, 3, 5]), 1usize..=3)
}

pub fn no_zero_coefficients(f: &SparsePoly) -> bool {
    f.terms().all(|(_, c)| !c.is_zero())
}
