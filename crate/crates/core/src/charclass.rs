//! Characteristic classes of (Z/p)^k in F_p[x_1, ..., x_k].
//!
//! Two independent routes produce the top Chern class of the reduced regular
//! representation:
//!
//! * the direct product of all `p^k - 1` nonzero character forms
//!   `a_1 x_1 + ... + a_k x_k` ([`product_over_characters`]);
//! * the closed form `(-1)^k L_k^(p-1)` through the Dickson polynomial
//!   `L_k` ([`dickson`], [`chern_euler_complex`]).
//!
//! For `p = 2` the mod-2 Euler class `w_{2^k-1}` of the reduced real regular
//! representation is the product of all subset sums `x_{i_1} + ... + x_{i_q}`;
//! for odd `p` the real class is represented by `L_k^(m(p-1)/2)`, which
//! squares to the complex class up to the sign `(-1)^(km)`.
//!
//! Every routine also exposes its factored form (`*_factors`), which the
//! theorem checker multiplies out in a truncated ring.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fparith::{factorial_mod, normalize, Fp, PrimeModulus};
use crate::multipoly::{product_of_forms, LinearForm, Monomial, SparsePoly};

/// Default refusal threshold on `p^k - 1`.
pub const DEFAULT_MAX_FACTORS: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ResourceLimits {
    pub max_factors: u64,
}

impl Default for ResourceLimits {
    fn default() -> Self {
        ResourceLimits {
            max_factors: DEFAULT_MAX_FACTORS,
        }
    }
}

impl ResourceLimits {
    fn admit(&self, needed: u128) -> Result<()> {
        if needed > self.max_factors as u128 {
            Err(Error::ResourceCap {
                needed,
                cap: self.max_factors,
            })
        } else {
            Ok(())
        }
    }
}

/// `p^e` without overflow.
pub(crate) fn wide_pow(p: PrimeModulus, e: usize) -> u128 {
    (0..e).fold(1u128, |acc, _| acc.saturating_mul(p.get() as u128))
}

/// A nonzero element `(a_1, ..., a_k)` of (Z/p)^k.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Character(LinearForm);

impl Character {
    pub fn new(entries: &[Fp]) -> Result<Self> {
        let form = LinearForm::new(entries)?;
        if form.is_zero() {
            return Err(Error::InvalidInstance("character must be nonzero".into()));
        }
        Ok(Character(form))
    }

    pub fn entries(&self) -> Vec<u32> {
        (0..self.0.nvars()).map(|i| self.0.coeff(i).value()).collect()
    }

    /// The first Chern class `a_1 x_1 + ... + a_k x_k` of this character.
    pub fn form(&self) -> &LinearForm {
        &self.0
    }
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidInstance("k must be at least 1".into()));
    }
    Ok(())
}

/// All `p^k - 1` nonzero characters, ascending lexicographic with the first
/// entry most significant.
pub fn nonzero_characters(p: PrimeModulus, k: usize, limits: &ResourceLimits) -> Result<Vec<Character>> {
    check_k(k)?;
    let total = wide_pow(p, k);
    limits.admit(total - 1)?;
    let q = p.get() as u64;
    let mut out = Vec::with_capacity(total as usize - 1);
    let mut digits = vec![0u64; k];
    for _ in 1..total {
        // increment the base-p counter, last digit fastest
        for d in digits.iter_mut().rev() {
            *d += 1;
            if *d < q {
                break;
            }
            *d = 0;
        }
        let entries: Vec<Fp> = digits.iter().map(|&d| p.element(d as i64)).collect();
        out.push(Character(LinearForm::new(&entries)?));
    }
    Ok(out)
}

/// The `p^k - 1` character forms as polynomials.
pub fn character_factors(p: PrimeModulus, k: usize, limits: &ResourceLimits) -> Result<Vec<SparsePoly>> {
    Ok(nonzero_characters(p, k, limits)?
        .iter()
        .map(|c| c.form().to_poly())
        .collect())
}

/// Product of all nonzero character forms; homogeneous of degree `p^k - 1`.
pub fn product_over_characters(p: PrimeModulus, k: usize, limits: &ResourceLimits) -> Result<SparsePoly> {
    let forms: Vec<LinearForm> = nonzero_characters(p, k, limits)?
        .into_iter()
        .map(|c| c.0)
        .collect();
    product_of_forms(&forms)
}

/// The linear factors of `L_k`: for each `i`, all forms
/// `a_1 x_1 + ... + a_{i-1} x_{i-1} + x_i`.
pub fn dickson_factors(p: PrimeModulus, k: usize, limits: &ResourceLimits) -> Result<Vec<LinearForm>> {
    check_k(k)?;
    let count = (wide_pow(p, k) - 1) / (p.get() as u128 - 1);
    limits.admit(wide_pow(p, k - 1))?;
    let q = p.get() as u64;
    let mut out = Vec::with_capacity(count as usize);
    for i in 0..k {
        let mut digits = vec![0u64; i];
        loop {
            let mut coeffs: Vec<i64> = digits.iter().map(|&d| d as i64).collect();
            coeffs.push(1);
            coeffs.resize(k, 0);
            out.push(LinearForm::from_residues(p, &coeffs)?);
            let mut carried = true;
            for d in digits.iter_mut().rev() {
                *d += 1;
                if *d < q {
                    carried = false;
                    break;
                }
                *d = 0;
            }
            if carried {
                break;
            }
        }
    }
    debug_assert_eq!(out.len() as u128, count);
    Ok(out)
}

/// The Dickson polynomial `L_k`, homogeneous of degree `(p^k - 1)/(p - 1)`.
pub fn dickson(p: PrimeModulus, k: usize, limits: &ResourceLimits) -> Result<SparsePoly> {
    product_of_forms(&dickson_factors(p, k, limits)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    /// `w_{2^k-1}(eta)^m`, p = 2.
    Mod2Sw,
    /// `c_{p^k-1}(eta_C)^m`, odd p.
    ComplexChern,
    /// `L_k^(m(p-1)/2)`, odd p; the real Euler class up to a unit.
    RealRepresentative,
}

impl ClassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::Mod2Sw => "mod2_sw",
            ClassKind::ComplexChern => "complex_chern",
            ClassKind::RealRepresentative => "real_representative",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerClassResult {
    pub poly: SparsePoly,
    pub kind: ClassKind,
    pub p: u32,
    pub k: usize,
    pub m: u64,
}

impl EulerClassResult {
    /// Expected total degree of `poly` in exponent units.
    pub fn expected_degree(&self) -> u128 {
        let p = PrimeModulus::new(self.p as u64).expect("stored prime");
        let top = wide_pow(p, self.k) - 1;
        match self.kind {
            ClassKind::Mod2Sw | ClassKind::ComplexChern => self.m as u128 * top,
            ClassKind::RealRepresentative => self.m as u128 * top / 2,
        }
    }
}

fn require_odd(p: PrimeModulus) -> Result<()> {
    if p.get() == 2 {
        return Err(Error::InvalidInstance("this class needs an odd prime".into()));
    }
    Ok(())
}

fn check_m(m: u64) -> Result<()> {
    if m == 0 {
        return Err(Error::InvalidInstance("m must be at least 1".into()));
    }
    Ok(())
}

/// `w_{2^k-1}(eta)^m` over F_2.
pub fn sw_class_eta(k: usize, m: u64, limits: &ResourceLimits) -> Result<EulerClassResult> {
    check_m(m)?;
    let two = PrimeModulus::new(2)?;
    let poly = product_over_characters(two, k, limits)?.pow(m)?;
    Ok(EulerClassResult {
        poly,
        kind: ClassKind::Mod2Sw,
        p: 2,
        k,
        m,
    })
}

/// The subset-sum factors `x_{i_1} + ... + x_{i_q}` of `w_{2^k-1}(eta)`,
/// each repeated `m` times.
pub fn sw_class_factors(k: usize, m: u64, limits: &ResourceLimits) -> Result<Vec<SparsePoly>> {
    check_m(m)?;
    let two = PrimeModulus::new(2)?;
    limits.admit((wide_pow(two, k) - 1) * m as u128)?;
    let base = character_factors(two, k, limits)?;
    Ok(repeat_each(&base, m))
}

fn repeat_each(base: &[SparsePoly], times: u64) -> Vec<SparsePoly> {
    base.iter()
        .flat_map(|f| std::iter::repeat_n(f.clone(), times as usize))
        .collect()
}

/// `(-1)^k` computed in F_p.
fn sign(p: PrimeModulus, exponent: u64) -> Fp {
    normalize(if exponent % 2 == 0 { 1 } else { -1 }, p)
}

/// `((-1)^k L_k^(p-1))^m` from the closed form.
pub fn chern_euler_complex(p: PrimeModulus, k: usize, m: u64, limits: &ResourceLimits) -> Result<EulerClassResult> {
    require_odd(p)?;
    check_m(m)?;
    let l = dickson(p, k, limits)?;
    let exponent = (p.get() as u64 - 1)
        .checked_mul(m)
        .ok_or(Error::ExponentOverflow)?;
    let poly = l.pow(exponent)?.scale(sign(p, k as u64 * m))?;
    Ok(EulerClassResult {
        poly,
        kind: ClassKind::ComplexChern,
        p: p.get(),
        k,
        m,
    })
}

/// `L_k^(m(p-1)/2)`.
pub fn real_euler_representative(
    p: PrimeModulus,
    k: usize,
    m: u64,
    limits: &ResourceLimits,
) -> Result<EulerClassResult> {
    require_odd(p)?;
    check_m(m)?;
    let half = (p.get() as u64 - 1) / 2;
    let exponent = half.checked_mul(m).ok_or(Error::ExponentOverflow)?;
    let poly = dickson(p, k, limits)?.pow(exponent)?;
    Ok(EulerClassResult {
        poly,
        kind: ClassKind::RealRepresentative,
        p: p.get(),
        k,
        m,
    })
}

/// Linear factors of `L_k^(m(p-1)/2)`, each repeated `m(p-1)/2` times.
pub fn real_representative_factors(
    p: PrimeModulus,
    k: usize,
    m: u64,
    limits: &ResourceLimits,
) -> Result<Vec<SparsePoly>> {
    require_odd(p)?;
    check_m(m)?;
    limits.admit(wide_pow(p, k) - 1)?;
    let times = (p.get() as u64 - 1) / 2 * m;
    let base: Vec<SparsePoly> = dickson_factors(p, k, limits)?
        .iter()
        .map(LinearForm::to_poly)
        .collect();
    limits.admit(base.len() as u128 * times as u128)?;
    Ok(repeat_each(&base, times))
}

/// `x_1^(m) x_2^(2m) ... x_k^(2^(k-1) m)` for p = 2, and
/// `x_1^(m(p-1)/2) x_2^(mp(p-1)/2) ... x_k^(mp^(k-1)(p-1)/2)` for odd p.
pub fn target_monomial(p: PrimeModulus, k: usize, m: u64) -> Result<Monomial> {
    check_k(k)?;
    let exps = target_exponents(p, k, m)?;
    Monomial::try_from_wide(&exps)
}

pub(crate) fn target_exponents(p: PrimeModulus, k: usize, m: u64) -> Result<Vec<u64>> {
    let q = p.get() as u128;
    let scale: u128 = if p.get() == 2 { 1 } else { (q - 1) / 2 };
    let mut out = Vec::with_capacity(k);
    let mut power: u128 = 1;
    for _ in 0..k {
        let e = (m as u128)
            .checked_mul(power)
            .and_then(|v| v.checked_mul(scale))
            .and_then(|v| u64::try_from(v).ok())
            .ok_or(Error::ExponentOverflow)?;
        out.push(e);
        power = power.checked_mul(q).ok_or(Error::ExponentOverflow)?;
    }
    Ok(out)
}

/// `x_1^(m(p-1)) x_2^(mp(p-1)) ... x_k^(mp^(k-1)(p-1))`, the leading monomial
/// of the complex class.
pub fn chern_target_monomial(p: PrimeModulus, k: usize, m: u64) -> Result<Monomial> {
    let base = target_monomial(p, k, m)?;
    if p.get() == 2 {
        return Ok(base);
    }
    base.checked_pow(2)
}

/// Coefficient of [`target_monomial`] in the Euler class (p = 2) or its real
/// representative (odd p). A zero coefficient is reported as an
/// inconsistency.
pub fn target_coefficient(p: PrimeModulus, k: usize, m: u64, limits: &ResourceLimits) -> Result<Fp> {
    let class = if p.get() == 2 {
        sw_class_eta(k, m, limits)?
    } else {
        real_euler_representative(p, k, m, limits)?
    };
    let c = class.poly.coefficient_of(&target_monomial(p, k, m)?);
    if c.is_zero() {
        return Err(Error::Inconsistency(format!(
            "target coefficient vanishes for p={p}, k={k}, m={m}"
        )));
    }
    Ok(c)
}

/// `(p-1)!^k L_k^(p-1)`, the closed form with the factorial kept explicit.
pub fn wilson_closed_form(p: PrimeModulus, k: usize, limits: &ResourceLimits) -> Result<SparsePoly> {
    let unit = factorial_mod(p.get() as u64 - 1, p).pow(k as u64);
    dickson(p, k, limits)?.pow(p.get() as u64 - 1)?.scale(unit)
}

/// Checks `prod_{chi != 0} chi = (p-1)!^k L_k^(p-1) = (-1)^k L_k^(p-1)`.
pub fn verify_factorization(p: PrimeModulus, k: usize, limits: &ResourceLimits) -> Result<bool> {
    let direct = product_over_characters(p, k, limits)?;
    let wilson = wilson_closed_form(p, k, limits)?;
    let signed = dickson(p, k, limits)?
        .pow(p.get() as u64 - 1)?
        .scale(sign(p, k as u64))?;
    Ok(direct == wilson && wilson == signed)
}
