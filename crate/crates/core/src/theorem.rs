//! Decision procedure for the coincidence-set dimension bound of a product
//! of free `Z/p` actions on mod-p homology spheres `N^{n_1} x ... x N^{n_k}`.
//!
//! For a map into `R^m` the bound is `dim A(f) >= sum n_i - m(p^k - 1)`,
//! established when
//!
//! * for odd p every `n_i` is odd,
//! * `n_i >= m p^(i-1) (p-1)` for every `i` (the weak hypothesis), and
//! * the Euler class (p = 2) or its representative (odd p) survives in
//!   `F_p[x_1..x_k] / (x_i^{d_i})`, where `d_i = n_i + 1` for p = 2 and
//!   `d_i = (n_i + 1)/2` for odd p.
//!
//! The strong hypothesis `n_i >= m p^(k-1) (p-1)` upgrades the conclusion to
//! arbitrary free product actions.

use serde::Serialize;

use crate::charclass::{
    real_representative_factors, sw_class_factors, target_exponents, wide_pow, ClassKind,
    ResourceLimits,
};
use crate::error::{Error, Result};
use crate::fparith::PrimeModulus;
use crate::multipoly::SparsePoly;
use crate::truncring::{is_zero_in_quotient, product_trunc_with, Parallelism, TruncationIdeal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProblemInstance {
    p: PrimeModulus,
    k: usize,
    m: u64,
    n: Vec<u64>,
}

impl ProblemInstance {
    pub fn new(p: PrimeModulus, m: u64, n: Vec<u64>) -> Result<Self> {
        if n.is_empty() {
            return Err(Error::InvalidInstance("need at least one sphere (k >= 1)".into()));
        }
        if m == 0 {
            return Err(Error::InvalidInstance("m must be at least 1".into()));
        }
        if let Some(i) = n.iter().position(|&d| d == 0) {
            return Err(Error::InvalidInstance(format!("n_{} must be at least 1", i + 1)));
        }
        Ok(ProblemInstance { p, k: n.len(), m, n })
    }

    /// Like [`ProblemInstance::new`], additionally checking `n.len() == k`.
    pub fn with_k(p: PrimeModulus, k: usize, m: u64, n: Vec<u64>) -> Result<Self> {
        if n.len() != k {
            return Err(Error::InvalidInstance(format!(
                "expected {k} sphere dimensions, got {}",
                n.len()
            )));
        }
        ProblemInstance::new(p, m, n)
    }

    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> &[u64] {
        &self.n
    }

    pub fn dim_m(&self) -> u128 {
        self.n.iter().map(|&d| d as u128).sum()
    }

    /// `n_i` thresholds `m p^(i-1) (p-1)` of the weak hypothesis.
    pub fn weak_thresholds(&self) -> Vec<u128> {
        let q = self.p.get() as u128;
        (0..self.k)
            .map(|i| (self.m as u128).saturating_mul(wide_pow(self.p, i)).saturating_mul(q - 1))
            .collect()
    }

    /// The common threshold `m p^(k-1) (p-1)` of the strong hypothesis.
    pub fn strong_threshold(&self) -> u128 {
        let q = self.p.get() as u128;
        (self.m as u128)
            .saturating_mul(wide_pow(self.p, self.k - 1))
            .saturating_mul(q - 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Hypotheses {
    pub parity_ok: bool,
    pub weak_hypothesis: bool,
    pub strong_hypothesis: bool,
}

pub fn check_hypotheses(inst: &ProblemInstance) -> Hypotheses {
    let parity_ok = inst.p.get() == 2 || inst.n.iter().all(|d| d % 2 == 1);
    let weak_hypothesis = inst
        .n
        .iter()
        .zip(inst.weak_thresholds())
        .all(|(&d, t)| d as u128 >= t);
    let strong = inst.strong_threshold();
    let strong_hypothesis = inst.n.iter().all(|&d| d as u128 >= strong);
    Hypotheses {
        parity_ok,
        weak_hypothesis,
        strong_hypothesis,
    }
}

/// Generators `x_i^{d_i}` of the kernel of the map to `H^*(M/G; F_p)`.
pub fn truncation_caps(inst: &ProblemInstance) -> Result<TruncationIdeal> {
    let caps = if inst.p.get() == 2 {
        inst.n.iter().map(|&d| d.saturating_add(1)).collect()
    } else {
        if let Some(i) = inst.n.iter().position(|d| d % 2 == 0) {
            return Err(Error::Parity {
                index: i + 1,
                value: inst.n[i],
            });
        }
        inst.n.iter().map(|&d| d / 2 + 1).collect()
    };
    TruncationIdeal::new(caps)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Conclusion {
    BoundEstablished,
    BoundEstablishedAnyFreeAction,
    NotEstablished,
}

impl Conclusion {
    pub fn as_str(self) -> &'static str {
        match self {
            Conclusion::BoundEstablished => "bound_established",
            Conclusion::BoundEstablishedAnyFreeAction => "bound_established_any_free_action",
            Conclusion::NotEstablished => "not_established",
        }
    }

    pub fn is_established(self) -> bool {
        self != Conclusion::NotEstablished
    }
}

/// The class whose image in the truncated ring decides the verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedClass {
    pub kind: ClassKind,
    /// Image of the class in the quotient ring.
    pub image: SparsePoly,
    pub target_monomial: Vec<u64>,
    /// Coefficient of the target monomial in `image` (zero when the target
    /// lies in the ideal).
    pub target_coefficient: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub p: u32,
    pub k: usize,
    pub m: u64,
    pub n: Vec<u64>,
    pub parity_ok: bool,
    pub weak_hypothesis: bool,
    pub strong_hypothesis: bool,
    pub caps: TruncationIdeal,
    pub representative_nonzero_in_quotient: bool,
    pub conclusion: Conclusion,
    pub dim_m: u128,
    pub bound: i128,
    pub euler_class: ReducedClass,
}

impl BoundReport {
    /// A negative bound says nothing about `A(f)`.
    pub fn is_vacuous(&self) -> bool {
        self.bound < 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct CheckOptions {
    pub limits: ResourceLimits,
    pub parallelism: Parallelism,
}

/// Factors whose product is the Euler class (p = 2) or its representative
/// (odd p).
pub fn euler_factors(inst: &ProblemInstance, limits: &ResourceLimits) -> Result<(ClassKind, Vec<SparsePoly>)> {
    if inst.p.get() == 2 {
        Ok((ClassKind::Mod2Sw, sw_class_factors(inst.k, inst.m, limits)?))
    } else {
        Ok((
            ClassKind::RealRepresentative,
            real_representative_factors(inst.p, inst.k, inst.m, limits)?,
        ))
    }
}

pub fn check_bound(inst: &ProblemInstance, options: &CheckOptions) -> Result<BoundReport> {
    let hyp = check_hypotheses(inst);
    let caps = truncation_caps(inst)?;
    let (kind, factors) = euler_factors(inst, &options.limits)?;
    let image = product_trunc_with(&factors, &caps, options.parallelism)?;
    let nonzero = !is_zero_in_quotient(&image, &caps)?;

    let target = target_exponents(inst.p, inst.k, inst.m)?;
    let target_coefficient = match crate::multipoly::Monomial::try_from_wide(&target) {
        Ok(mono) if caps.survives(&mono) => image.coefficient_of(&mono).value(),
        _ => 0,
    };

    let conclusion = if hyp.parity_ok && hyp.weak_hypothesis && nonzero {
        if hyp.strong_hypothesis {
            Conclusion::BoundEstablishedAnyFreeAction
        } else {
            Conclusion::BoundEstablished
        }
    } else {
        Conclusion::NotEstablished
    };

    let dim_m = inst.dim_m();
    let drop = inst.m as u128 * (wide_pow(inst.p, inst.k) - 1);
    let bound = dim_m as i128 - drop as i128;

    Ok(BoundReport {
        p: inst.p.get(),
        k: inst.k,
        m: inst.m,
        n: inst.n.clone(),
        parity_ok: hyp.parity_ok,
        weak_hypothesis: hyp.weak_hypothesis,
        strong_hypothesis: hyp.strong_hypothesis,
        caps,
        representative_nonzero_in_quotient: nonzero,
        conclusion,
        dim_m,
        bound,
        euler_class: ReducedClass {
            kind,
            image,
            target_monomial: target,
            target_coefficient,
        },
    })
}
