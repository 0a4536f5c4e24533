//! Arithmetic in the prime field F_p for a prime chosen at runtime.
//!
//! Every [`Fp`] carries its [`PrimeModulus`]; combining scalars from two
//! different fields is an error ([`Fp::checked_add`] and friends) or a panic
//! (the `std::ops` impls), never a silent coercion.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A validated prime p. Residues are stored as `u32`, so products of two
/// residues always fit in a `u64`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u32);

impl PrimeModulus {
    pub fn new(p: u64) -> Result<Self> {
        if p > u32::MAX as u64 {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let width_ok = (p - 1).checked_mul(p - 1).is_some();
        assert!(width_ok, "(p-1)^2 must fit in u64");
        Ok(PrimeModulus(p as u32))
    }

    #[inline]
    pub fn get(self) -> u32 {
        self.0
    }

    #[inline]
    pub(crate) fn reduce_u64(self, x: u64) -> u32 {
        (x % self.0 as u64) as u32
    }

    #[inline]
    pub(crate) fn add_raw(self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        let p = self.0 as u64;
        (if s >= p { s - p } else { s }) as u32
    }

    #[inline]
    pub(crate) fn mul_raw(self, a: u32, b: u32) -> u32 {
        self.reduce_u64(a as u64 * b as u64)
    }

    #[inline]
    pub(crate) fn neg_raw(self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    pub(crate) fn pow_raw(self, mut base: u32, mut e: u64) -> u32 {
        let mut acc = 1 % self.0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn zero(self) -> Fp {
        Fp { value: 0, modulus: self }
    }

    pub fn one(self) -> Fp {
        Fp { value: 1, modulus: self }
    }

    /// The residue of `n` as an element of this field.
    pub fn element(self, n: i64) -> Fp {
        normalize(n, self)
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Deterministic trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n % 2 == 0 {
        return false;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// An element of F_p, always held in canonical form `0 <= value < p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u32,
    modulus: PrimeModulus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
}

/// Canonical representative of `n mod p` in `[0, p)`.
pub fn normalize(n: i64, p: PrimeModulus) -> Fp {
    let value = n.rem_euclid(p.get() as i64) as u32;
    Fp { value, modulus: p }
}

/// Applies `op` to two scalars of the same field.
pub fn field_arith(a: Fp, b: Fp, op: FieldOp) -> Result<Fp> {
    match op {
        FieldOp::Add => a.checked_add(b),
        FieldOp::Sub => a.checked_sub(b),
        FieldOp::Mul => a.checked_mul(b),
    }
}

/// `n! mod p`.
pub fn factorial_mod(n: u64, p: PrimeModulus) -> Fp {
    // Every factor from p upward is 0 mod p.
    if n >= p.get() as u64 {
        return p.zero();
    }
    let value = (2..=n as u32).fold(1 % p.get(), |acc, i| p.mul_raw(acc, i));
    Fp { value, modulus: p }
}

impl Fp {
    pub(crate) fn from_raw(value: u32, modulus: PrimeModulus) -> Self {
        debug_assert!(value < modulus.get());
        Fp { value, modulus }
    }

    #[inline]
    pub fn value(self) -> u32 {
        self.value
    }

    #[inline]
    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn same_field(self, other: Fp) -> Result<PrimeModulus> {
        if self.modulus == other.modulus {
            Ok(self.modulus)
        } else {
            Err(Error::ModulusMismatch {
                left: self.modulus.get(),
                right: other.modulus.get(),
            })
        }
    }

    pub fn checked_add(self, other: Fp) -> Result<Fp> {
        let p = self.same_field(other)?;
        Ok(Fp::from_raw(p.add_raw(self.value, other.value), p))
    }

    pub fn checked_sub(self, other: Fp) -> Result<Fp> {
        let p = self.same_field(other)?;
        Ok(Fp::from_raw(p.add_raw(self.value, p.neg_raw(other.value)), p))
    }

    pub fn checked_mul(self, other: Fp) -> Result<Fp> {
        let p = self.same_field(other)?;
        Ok(Fp::from_raw(p.mul_raw(self.value, other.value), p))
    }

    pub fn pow(self, e: u64) -> Fp {
        Fp::from_raw(self.modulus.pow_raw(self.value, e), self.modulus)
    }

    /// Multiplicative inverse via Fermat: `a^(p-2)`.
    pub fn inv(self) -> Result<Fp> {
        if self.value == 0 {
            return Err(Error::DivisionByZero(self.modulus.get()));
        }
        Ok(self.pow(self.modulus.get() as u64 - 2))
    }
}

fn expect_same(r: Result<Fp>) -> Fp {
    match r {
        Ok(v) => v,
        Err(e) => panic!("{e}"),
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        expect_same(self.checked_add(rhs))
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        expect_same(self.checked_sub(rhs))
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        expect_same(self.checked_mul(rhs))
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::from_raw(self.modulus.neg_raw(self.value), self.modulus)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
