//! Sparse polynomials in F_p[x_1, ..., x_k].
//!
//! A [`SparsePoly`] is a sorted list of `(Monomial, coefficient)` pairs with
//! no zero coefficients. Terms are kept in the canonical order: lexicographic
//! with `x_k` compared first, descending, so the first stored term is the
//! leading term in `x_k`.
//!
//! The text form (see [`SparsePoly::parse`] and the `Display` impl) is
//!
//! ```text
//! poly   = "0" | term (" + " term)*
//! term   = coeff | [coeff "*"] factor ("*" factor)*
//! factor = "x" index ["^" exponent]
//! ```
//!
//! Printed terms are listed with `x_1` as the most significant variable,
//! descending, coefficients in `[1, p-1]` and printed only when not 1.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::fparith::{Fp, PrimeModulus};

pub type Exponent = u32;

/// Exponent vector `(e_1, ..., e_k)` of `x_1^e_1 ... x_k^e_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<Exponent>);

impl Monomial {
    pub fn new(exponents: Vec<Exponent>) -> Self {
        Monomial(exponents)
    }

    /// Builds a monomial from wide exponents, failing if one does not fit.
    pub fn try_from_wide(exponents: &[u64]) -> Result<Self> {
        exponents
            .iter()
            .map(|&e| Exponent::try_from(e).map_err(|_| Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[Exponent] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn checked_pow(&self, e: u64) -> Result<Monomial> {
        self.0
            .iter()
            .map(|&x| {
                (x as u64)
                    .checked_mul(e)
                    .and_then(|v| Exponent::try_from(v).ok())
                    .ok_or(Error::ExponentOverflow)
            })
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// Order used for printing: `x_1` most significant.
    fn cmp_display(&self, other: &Monomial) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl Ord for Monomial {
    /// Lexicographic with `x_k` compared first.
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.iter().rev().cmp(other.0.iter().rev())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e >= 2 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// `a_1 x_1 + ... + a_k x_k` over F_p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinearForm {
    modulus: PrimeModulus,
    coeffs: Vec<u32>,
}

impl LinearForm {
    pub fn new(coeffs: &[Fp]) -> Result<Self> {
        let first = coeffs.first().ok_or(Error::ArityMismatch {
            expected: 1,
            got: 0,
        })?;
        let modulus = first.modulus();
        if let Some(bad) = coeffs.iter().find(|c| c.modulus() != modulus) {
            return Err(Error::ModulusMismatch {
                left: modulus.get(),
                right: bad.modulus().get(),
            });
        }
        Ok(LinearForm {
            modulus,
            coeffs: coeffs.iter().map(|c| c.value()).collect(),
        })
    }

    pub fn from_residues(p: PrimeModulus, coeffs: &[i64]) -> Result<Self> {
        let coeffs: Vec<Fp> = coeffs.iter().map(|&c| p.element(c)).collect();
        LinearForm::new(&coeffs)
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> Fp {
        Fp::from_raw(self.coeffs[i], self.modulus)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn to_poly(&self) -> SparsePoly {
        let k = self.nvars();
        let mut terms: Vec<(Monomial, u32)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let mut e = vec![0; k];
                e[i] = 1;
                (Monomial(e), c)
            })
            .collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        SparsePoly {
            modulus: self.modulus,
            nvars: k,
            terms,
        }
    }
}

/// The degree-one polynomial with the given coefficients.
pub fn linear_form(coeffs: &[Fp]) -> Result<SparsePoly> {
    Ok(LinearForm::new(coeffs)?.to_poly())
}

/// Sparse multivariate polynomial over F_p.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    modulus: PrimeModulus,
    nvars: usize,
    terms: Vec<(Monomial, u32)>,
}

impl SparsePoly {
    pub fn zero(modulus: PrimeModulus, nvars: usize) -> Self {
        SparsePoly {
            modulus,
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(c: Fp, nvars: usize) -> Self {
        let mut f = SparsePoly::zero(c.modulus(), nvars);
        if !c.is_zero() {
            f.terms.push((Monomial::one(nvars), c.value()));
        }
        f
    }

    pub fn one(modulus: PrimeModulus, nvars: usize) -> Self {
        SparsePoly::constant(modulus.one(), nvars)
    }

    /// The variable `x_{i+1}` (zero-based index).
    pub fn var(modulus: PrimeModulus, nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        let mut e = vec![0; nvars];
        e[i] = 1;
        SparsePoly {
            modulus,
            nvars,
            terms: vec![(Monomial(e), 1)],
        }
    }

    pub fn monomial(c: Fp, mono: Monomial) -> Self {
        let nvars = mono.nvars();
        let mut f = SparsePoly::zero(c.modulus(), nvars);
        if !c.is_zero() {
            f.terms.push((mono, c.value()));
        }
        f
    }

    /// Collects terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(modulus: PrimeModulus, nvars: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, i64)>,
    {
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            if m.nvars() != nvars {
                return Err(Error::ArityMismatch {
                    expected: nvars,
                    got: m.nvars(),
                });
            }
            let c = modulus.element(c).value();
            let slot = acc.entry(m).or_insert(0);
            *slot = modulus.add_raw(*slot, c);
        }
        Ok(SparsePoly::from_map(modulus, nvars, acc))
    }

    fn from_map(modulus: PrimeModulus, nvars: usize, acc: HashMap<Monomial, u32>) -> Self {
        let mut terms: Vec<(Monomial, u32)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        SparsePoly {
            modulus,
            nvars,
            terms,
        }
    }

    /// Builds from terms already sorted descending with distinct monomials
    /// and nonzero coefficients.
    pub(crate) fn from_sorted_raw(
        modulus: PrimeModulus,
        nvars: usize,
        terms: Vec<(Monomial, u32)>,
    ) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        SparsePoly {
            modulus,
            nvars,
            terms,
        }
    }

    pub fn modulus(&self) -> PrimeModulus {
        self.modulus
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (descending, `x_k`-first) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Fp)> + '_ {
        self.terms
            .iter()
            .map(move |(m, c)| (m, Fp::from_raw(*c, self.modulus)))
    }

    pub(crate) fn raw_terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    /// `Some(d)` when every term has total degree `d`; `None` for zero or
    /// inhomogeneous polynomials.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        let d = self.terms.first()?.0.degree();
        self.terms
            .iter()
            .all(|(m, _)| m.degree() == d)
            .then_some(d)
    }

    fn check_compatible(&self, other: &SparsePoly) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            });
        }
        if self.nvars != other.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_compatible(other)?;
        let p = self.modulus;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match ma.cmp(mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), *ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb.clone(), *cb));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = p.add_raw(*ca, *cb);
                    if c != 0 {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(SparsePoly::from_sorted_raw(p, self.nvars, out))
    }

    pub fn neg(&self) -> SparsePoly {
        let p = self.modulus;
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), p.neg_raw(*c)))
            .collect();
        SparsePoly::from_sorted_raw(p, self.nvars, terms)
    }

    pub fn sub(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: Fp) -> Result<SparsePoly> {
        if c.modulus() != self.modulus {
            return Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: c.modulus().get(),
            });
        }
        if c.is_zero() {
            return Ok(SparsePoly::zero(self.modulus, self.nvars));
        }
        let p = self.modulus;
        let terms = self
            .terms
            .iter()
            .map(|(m, x)| (m.clone(), p.mul_raw(*x, c.value())))
            .collect();
        Ok(SparsePoly::from_sorted_raw(p, self.nvars, terms))
    }

    pub fn mul(&self, other: &SparsePoly) -> Result<SparsePoly> {
        self.check_compatible(other)?;
        let p = self.modulus;
        if self.is_zero() || other.is_zero() {
            return Ok(SparsePoly::zero(p, self.nvars));
        }
        let mut acc: HashMap<Monomial, u32> =
            HashMap::with_capacity(self.terms.len().saturating_mul(other.terms.len()).min(1 << 20));
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.checked_mul(mb)?;
                let c = p.mul_raw(*ca, *cb);
                let slot = acc.entry(m).or_insert(0);
                *slot = p.add_raw(*slot, c);
            }
        }
        Ok(SparsePoly::from_map(p, self.nvars, acc))
    }

    /// `self^e` by binary exponentiation; `f^0 = 1`.
    pub fn pow(&self, mut e: u64) -> Result<SparsePoly> {
        let mut acc = SparsePoly::one(self.modulus, self.nvars);
        if e == 0 {
            return Ok(acc);
        }
        if self.terms.len() == 1 {
            let (m, c) = &self.terms[0];
            let m = m.checked_pow(e)?;
            let c = self.modulus.pow_raw(*c, e);
            return Ok(SparsePoly::from_sorted_raw(self.modulus, self.nvars, vec![(m, c)]));
        }
        let mut base = self.clone();
        loop {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base)?;
        }
        Ok(acc)
    }

    /// The coefficient of `mono`, or zero when absent.
    pub fn coefficient_of(&self, mono: &Monomial) -> Fp {
        assert_eq!(mono.nvars(), self.nvars, "monomial arity mismatch");
        let value = self
            .terms
            .binary_search_by(|(m, _)| mono.cmp(m))
            .map(|i| self.terms[i].1)
            .unwrap_or(0);
        Fp::from_raw(value, self.modulus)
    }

    /// The maximal term in canonical order (highest power of `x_k` first).
    pub fn leading_term(&self) -> Result<(Monomial, Fp)> {
        let (m, c) = self.terms.first().ok_or(Error::ZeroPolynomial)?;
        Ok((m.clone(), Fp::from_raw(*c, self.modulus)))
    }

    /// Keeps only the terms whose monomial satisfies `keep`.
    pub fn filter_terms<F>(&self, mut keep: F) -> SparsePoly
    where
        F: FnMut(&Monomial) -> bool,
    {
        let terms = self.terms.iter().filter(|(m, _)| keep(m)).cloned().collect();
        SparsePoly::from_sorted_raw(self.modulus, self.nvars, terms)
    }

    /// Substitutes `x_i -> images[i]` for every variable.
    pub fn substitute(&self, images: &[SparsePoly]) -> Result<SparsePoly> {
        if images.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let target_vars = images.first().map_or(self.nvars, |g| g.nvars);
        for g in images {
            if g.modulus != self.modulus {
                return Err(Error::ModulusMismatch {
                    left: self.modulus.get(),
                    right: g.modulus.get(),
                });
            }
            if g.nvars != target_vars {
                return Err(Error::ArityMismatch {
                    expected: target_vars,
                    got: g.nvars,
                });
            }
        }
        let mut powers: HashMap<(usize, Exponent), SparsePoly> = HashMap::new();
        let mut out = SparsePoly::zero(self.modulus, target_vars);
        for (m, c) in &self.terms {
            let mut term = SparsePoly::constant(Fp::from_raw(*c, self.modulus), target_vars);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let power = match powers.get(&(i, e)) {
                    Some(g) => g.clone(),
                    None => {
                        let g = images[i].pow(e as u64)?;
                        powers.insert((i, e), g.clone());
                        g
                    }
                };
                term = term.mul(&power)?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Canonical text form.
    pub fn serialize(&self) -> String {
        self.to_string()
    }

    /// Parses the canonical text form (whitespace around `+` and `*` is
    /// tolerated; coefficients are reduced mod `p`, repeated monomials merge).
    pub fn parse(text: &str, modulus: PrimeModulus, nvars: usize) -> Result<SparsePoly> {
        Parser {
            src: text.as_bytes(),
            pos: 0,
            nvars,
        }
        .parse_poly(modulus)
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut order: Vec<&(Monomial, u32)> = self.terms.iter().collect();
        order.sort_by(|a, b| b.0.cmp_display(&a.0));
        for (i, (m, c)) in order.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let constant = m.degree() == 0;
            if constant {
                write!(f, "{c}")?;
            } else if *c == 1 {
                write!(f, "{m}")?;
            } else {
                write!(f, "{c}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Product of many polynomials by balanced pairing, so that intermediate
/// operands stay similar in size.
pub fn product(factors: &[SparsePoly]) -> Result<SparsePoly> {
    match factors {
        [] => Err(Error::InvalidInstance("empty factor list".into())),
        [f] => Ok(f.clone()),
        _ => {
            let mut level: Vec<SparsePoly> = factors.to_vec();
            while level.len() > 1 {
                let mut next = Vec::with_capacity(level.len().div_ceil(2));
                let mut it = level.chunks(2);
                for pair in &mut it {
                    next.push(match pair {
                        [a, b] => a.mul(b)?,
                        [a] => a.clone(),
                        _ => unreachable!(),
                    });
                }
                level = next;
            }
            Ok(level.pop().expect("nonempty"))
        }
    }
}

/// Product of linear forms; a zero form is rejected.
pub fn product_of_forms(forms: &[LinearForm]) -> Result<SparsePoly> {
    if forms.iter().any(LinearForm::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let polys: Vec<SparsePoly> = forms.iter().map(LinearForm::to_poly).collect();
    product(&polys)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    nvars: usize,
}

impl Parser<'_> {
    fn err<T>(&self, reason: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            position: self.pos,
            reason: reason.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u64> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        digits.parse::<u64>().map_err(|_| Error::Parse {
            position: start,
            reason: "number too large".into(),
        })
    }

    fn parse_poly(&mut self, modulus: PrimeModulus) -> Result<SparsePoly> {
        let mut terms = Vec::new();
        self.skip_ws();
        if self.pos == self.src.len() {
            return self.err("empty input");
        }
        loop {
            self.skip_ws();
            terms.push(self.parse_term(modulus)?);
            self.skip_ws();
            match self.peek() {
                None => break,
                Some(b'+') => self.pos += 1,
                Some(c) => return self.err(format!("unexpected character '{}'", c as char)),
            }
        }
        SparsePoly::from_terms(modulus, self.nvars, terms)
    }

    fn parse_term(&mut self, modulus: PrimeModulus) -> Result<(Monomial, i64)> {
        let mut exps = vec![0u32; self.nvars];
        let mut coeff: u64 = 1;
        let mut need_factor = false;
        if matches!(self.peek(), Some(b'0'..=b'9')) {
            coeff = self.number()? % modulus.get() as u64;
            self.skip_ws();
            if self.peek() != Some(b'*') {
                return Ok((Monomial(exps), coeff as i64));
            }
            self.pos += 1;
            self.skip_ws();
            need_factor = true;
        }
        loop {
            match self.peek() {
                Some(b'x') => self.pos += 1,
                _ if need_factor => return self.err("expected a factor 'x<index>'"),
                _ => return self.err("expected a coefficient or a factor 'x<index>'"),
            }
            let at = self.pos;
            let index = self.number()?;
            if index == 0 || index > self.nvars as u64 {
                return Err(Error::Parse {
                    position: at,
                    reason: format!("variable index {index} outside 1..={}", self.nvars),
                });
            }
            let mut e: u64 = 1;
            if self.peek() == Some(b'^') {
                self.pos += 1;
                e = self.number()?;
            }
            let slot = &mut exps[index as usize - 1];
            *slot = Exponent::try_from(e)
                .ok()
                .and_then(|e| slot.checked_add(e))
                .ok_or(Error::Parse {
                    position: at,
                    reason: "exponent overflow".into(),
                })?;
            self.skip_ws();
            if self.peek() == Some(b'*') {
                self.pos += 1;
                self.skip_ws();
                need_factor = true;
            } else {
                return Ok((Monomial(exps), coeff as i64));
            }
        }
    }
}
