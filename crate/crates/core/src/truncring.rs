//! The quotient F_p[x_1, ..., x_k] / (x_1^d_1, ..., x_k^d_k).
//!
//! Elements are represented by their canonical coset representative: a
//! [`SparsePoly`] with every exponent `e_i < d_i`. Long products reduce after
//! every multiplication, so intermediate sizes never exceed `prod d_i` terms.
//! When that box is small enough, [`product_trunc`] folds the factors over a
//! dense coefficient array instead of a hash map.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fparith::PrimeModulus;
use crate::multipoly::{Exponent, Monomial, SparsePoly};

/// Largest box (number of cells) folded densely.
pub const DENSE_CELL_LIMIT: u64 = 1 << 23;

/// Exclusive per-variable caps: a monomial vanishes once some `e_i >= d_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncationIdeal {
    caps: Vec<u64>,
}

impl TruncationIdeal {
    pub fn new(caps: Vec<u64>) -> Result<Self> {
        if caps.is_empty() {
            return Err(Error::InvalidInstance("truncation ideal needs at least one cap".into()));
        }
        if let Some(i) = caps.iter().position(|&d| d == 0) {
            return Err(Error::InvalidInstance(format!("cap d_{} must be >= 1", i + 1)));
        }
        Ok(TruncationIdeal { caps })
    }

    pub fn caps(&self) -> &[u64] {
        &self.caps
    }

    pub fn nvars(&self) -> usize {
        self.caps.len()
    }

    /// Whether the monomial survives in the quotient.
    pub fn survives(&self, m: &Monomial) -> bool {
        m.exponents()
            .iter()
            .zip(&self.caps)
            .all(|(&e, &d)| (e as u64) < d)
    }

    /// Number of standard monomials, saturating.
    pub fn box_size(&self) -> u64 {
        self.caps.iter().fold(1u64, |acc, &d| acc.saturating_mul(d))
    }

    fn check_arity(&self, f: &SparsePoly) -> Result<()> {
        if f.nvars() != self.nvars() {
            return Err(Error::ArityMismatch {
                expected: self.nvars(),
                got: f.nvars(),
            });
        }
        Ok(())
    }
}

/// Drops every term lying in the ideal.
pub fn reduce(f: &SparsePoly, ideal: &TruncationIdeal) -> Result<SparsePoly> {
    ideal.check_arity(f)?;
    Ok(f.filter_terms(|m| ideal.survives(m)))
}

/// `reduce(a * b)` for reduced `a`, `b`; cross terms that land in the ideal
/// are skipped before any coefficient arithmetic.
pub fn mul_trunc(a: &SparsePoly, b: &SparsePoly, ideal: &TruncationIdeal) -> Result<SparsePoly> {
    ideal.check_arity(a)?;
    ideal.check_arity(b)?;
    if a.modulus() != b.modulus() {
        return Err(Error::ModulusMismatch {
            left: a.modulus().get(),
            right: b.modulus().get(),
        });
    }
    let p = a.modulus();
    let k = ideal.nvars();
    let caps = ideal.caps();
    let mut acc: HashMap<Monomial, u32> = HashMap::new();
    let mut exps = vec![0 as Exponent; k];
    for (ma, ca) in a.raw_terms() {
        'pair: for (mb, cb) in b.raw_terms() {
            for i in 0..k {
                let e = ma.exponents()[i] as u64 + mb.exponents()[i] as u64;
                if e >= caps[i] {
                    continue 'pair;
                }
                exps[i] = e as Exponent;
            }
            let slot = acc.entry(Monomial::new(exps.clone())).or_insert(0);
            *slot = p.add_raw(*slot, p.mul_raw(*ca, *cb));
        }
    }
    let terms = acc.into_iter().filter(|(_, c)| *c != 0).map(|(m, c)| (m, c as i64));
    SparsePoly::from_terms(p, k, terms)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parallelism {
    #[default]
    Serial,
    Parallel,
}

/// `reduce(f_1 * ... * f_n)`, reducing after every multiplication.
pub fn product_trunc(factors: &[SparsePoly], ideal: &TruncationIdeal) -> Result<SparsePoly> {
    product_trunc_with(factors, ideal, Parallelism::Serial)
}

pub fn product_trunc_with(
    factors: &[SparsePoly],
    ideal: &TruncationIdeal,
    parallelism: Parallelism,
) -> Result<SparsePoly> {
    let first = factors
        .first()
        .ok_or_else(|| Error::InvalidInstance("empty factor list".into()))?;
    let p = first.modulus();
    for f in factors {
        ideal.check_arity(f)?;
        if f.modulus() != p {
            return Err(Error::ModulusMismatch {
                left: p.get(),
                right: f.modulus().get(),
            });
        }
    }
    let reduced: Vec<SparsePoly> = factors
        .iter()
        .map(|f| reduce(f, ideal))
        .collect::<Result<_>>()?;
    if reduced.iter().any(SparsePoly::is_zero) {
        return Ok(SparsePoly::zero(p, ideal.nvars()));
    }
    if ideal.box_size() <= DENSE_CELL_LIMIT {
        Ok(DenseBox::new(ideal, p).product(&reduced, parallelism))
    } else {
        let mut acc = reduced[0].clone();
        for f in &reduced[1..] {
            acc = mul_trunc(&acc, f, ideal)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }
}

pub fn is_zero_in_quotient(f: &SparsePoly, ideal: &TruncationIdeal) -> Result<bool> {
    ideal.check_arity(f)?;
    Ok(!f.raw_terms().iter().any(|(m, _)| ideal.survives(m)))
}

/// Row-major layout of the standard monomials with `x_k` contiguous.
struct DenseBox {
    modulus: PrimeModulus,
    caps: Vec<usize>,
    strides: Vec<usize>,
    cells: usize,
}

impl DenseBox {
    fn new(ideal: &TruncationIdeal, modulus: PrimeModulus) -> Self {
        let caps: Vec<usize> = ideal.caps().iter().map(|&d| d as usize).collect();
        let k = caps.len();
        let mut strides = vec![1usize; k];
        for i in (0..k.saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * caps[i + 1];
        }
        let cells = caps.iter().product();
        DenseBox {
            modulus,
            caps,
            strides,
            cells,
        }
    }

    fn index(&self, m: &Monomial) -> usize {
        m.exponents()
            .iter()
            .zip(&self.strides)
            .map(|(&e, &s)| e as usize * s)
            .sum()
    }

    fn product(&self, factors: &[SparsePoly], parallelism: Parallelism) -> SparsePoly {
        let mut src = vec![0u32; self.cells];
        for (m, c) in factors[0].raw_terms() {
            src[self.index(m)] = *c;
        }
        let mut dst = vec![0u32; self.cells];
        for f in &factors[1..] {
            self.mul_into(&src, f, &mut dst, parallelism);
            std::mem::swap(&mut src, &mut dst);
        }
        self.to_poly(&src)
    }

    /// `dst = reduce(src * f)`, computed per output row by gathering from the
    /// shifted source rows.
    fn mul_into(&self, src: &[u32], f: &SparsePoly, dst: &mut [u32], parallelism: Parallelism) {
        let k = self.caps.len();
        let row_len = self.caps[k - 1];
        let p = self.modulus;
        let shifts: Vec<(Vec<usize>, usize, u64)> = f
            .raw_terms()
            .iter()
            .map(|(m, c)| {
                let e: Vec<usize> = m.exponents().iter().map(|&x| x as usize).collect();
                (e, self.index(m), *c as u64)
            })
            .collect();
        // Reduce the u64 accumulators before they can overflow.
        let pp = (p.get() as u64 - 1) * (p.get() as u64 - 1);
        let flush_every = (u64::MAX / pp).saturating_sub(1).max(1) as usize;

        let fill_row = |row: usize, out: &mut [u32]| {
            let mut coords = vec![0usize; k - 1];
            let mut r = row;
            for i in (0..k - 1).rev() {
                coords[i] = r % self.caps[i];
                r /= self.caps[i];
            }
            let base = row * row_len;
            let mut acc = vec![0u64; row_len];
            let mut pending = 0usize;
            for (e, shift, c) in &shifts {
                if (0..k - 1).any(|i| coords[i] < e[i]) {
                    continue;
                }
                let inner = e[k - 1];
                if inner >= row_len {
                    continue;
                }
                let from = base + inner - shift;
                let src_row = &src[from..from + row_len - inner];
                for (a, &s) in acc[inner..].iter_mut().zip(src_row) {
                    *a += c * s as u64;
                }
                pending += 1;
                if pending == flush_every {
                    acc.iter_mut().for_each(|a| *a %= p.get() as u64);
                    pending = 0;
                }
            }
            for (o, a) in out.iter_mut().zip(&acc) {
                *o = p.reduce_u64(*a);
            }
        };

        match parallelism {
            Parallelism::Serial => dst
                .chunks_mut(row_len)
                .enumerate()
                .for_each(|(row, out)| fill_row(row, out)),
            Parallelism::Parallel => dst
                .par_chunks_mut(row_len)
                .enumerate()
                .for_each(|(row, out)| fill_row(row, out)),
        }
    }

    fn to_poly(&self, cells: &[u32]) -> SparsePoly {
        let k = self.caps.len();
        let mut terms: Vec<(Monomial, u32)> = Vec::new();
        for (idx, &c) in cells.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mut exps = vec![0 as Exponent; k];
            let mut r = idx;
            for i in (0..k).rev() {
                exps[i] = (r % self.caps[i]) as Exponent;
                r /= self.caps[i];
            }
            terms.push((Monomial::new(exps), c));
        }
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        SparsePoly::from_sorted_raw(self.modulus, k, terms)
    }
}
