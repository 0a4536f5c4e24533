//! Exact computation of the characteristic classes of `(Z/p)^k` that govern
//! Borsuk-Ulam type coincidence theorems, and a checker for the resulting
//! dimension bound.
//!
//! * [`fparith`]: the prime field F_p.
//! * [`multipoly`]: sparse polynomials over F_p with a canonical text form.
//! * [`truncring`]: truncated quotients `F_p[x] / (x_1^{d_1}, ..., x_k^{d_k})`.
//! * [`charclass`]: character products, Dickson polynomials, Euler classes.
//! * [`theorem`]: hypotheses, truncation caps and the [`theorem::BoundReport`].
//! * [`cli`]: the `zpk-classes` command line.
//!
//! ```
//! use zpk_classes::charclass::{dickson, ResourceLimits};
//! use zpk_classes::fparith::PrimeModulus;
//!
//! let p = PrimeModulus::new(3).unwrap();
//! let l2 = dickson(p, 2, &ResourceLimits::default()).unwrap();
//! assert_eq!(l2.to_string(), "2*x1^3*x2 + x1*x2^3");
//! ```

pub mod charclass;
pub mod cli;
pub mod error;
pub mod fparith;
pub mod multipoly;
pub mod theorem;
pub mod truncring;

pub use error::{Error, Result};
