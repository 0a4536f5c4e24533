//! Command-line front end.
//!
//! [`run`] parses arguments and renders results into an [`Outcome`] so the
//! whole command surface can be exercised without spawning a process. Exit
//! codes: 0 success / bound established, 1 bound not established (or a failed
//! self-test), 2 invalid input, 3 resource cap exceeded, 4 internal error.

use std::fmt::Write as _;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::charclass::{
    chern_euler_complex, chern_target_monomial, dickson, product_over_characters,
    real_euler_representative, sw_class_eta, target_coefficient, target_monomial,
    verify_factorization, EulerClassResult, ResourceLimits, DEFAULT_MAX_FACTORS,
};
use crate::error::Error;
use crate::fparith::PrimeModulus;
use crate::multipoly::{Monomial, SparsePoly};
use crate::theorem::{check_bound, BoundReport, CheckOptions, ProblemInstance};
use crate::truncring::Parallelism;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_ESTABLISHED: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Switch {
    On,
    #[default]
    Off,
}

#[derive(Debug, Parser)]
#[command(
    name = "zpk-classes",
    version,
    about = "Characteristic classes of (Z/p)^k and coincidence-set dimension bounds"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,

    /// Refuse products with more than this many linear factors
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_FACTORS)]
    pub max_factors: u64,

    #[arg(long, global = true, value_enum, default_value_t = Switch::Off)]
    pub parallel: Switch,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the Dickson polynomial L_k
    Dickson {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: usize,
    },
    /// Print the product of all nonzero character forms
    Product {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: usize,
    },
    /// Print the Euler class (p = 2) or the complex class and its real representative
    Euler {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        m: u64,
    },
    /// Decide the dimension bound for spheres of dimensions --n
    Check {
        #[arg(long)]
        p: u64,
        /// Defaults to the number of entries in --n
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, default_value_t = 1)]
        m: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        n: Vec<u64>,
    },
    /// Self-test: product over characters = (p-1)!^k L_k^(p-1) = (-1)^k L_k^(p-1)
    Verify {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: usize,
    },
}

/// Rendered result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn failure(err: &Error) -> Self {
        let code = match err {
            Error::ResourceCap { .. } => EXIT_RESOURCE,
            Error::Inconsistency(_) => EXIT_INTERNAL,
            _ => EXIT_INVALID,
        };
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: EXIT_INVALID,
                }
            } else {
                Outcome::ok(rendered)
            }
        }
    }
}

pub fn execute(cli: &Cli) -> Outcome {
    let limits = ResourceLimits {
        max_factors: cli.max_factors,
    };
    let options = CheckOptions {
        limits,
        parallelism: match cli.parallel {
            Switch::On => Parallelism::Parallel,
            Switch::Off => Parallelism::Serial,
        },
    };
    let result = match &cli.command {
        Command::Dickson { p, k } => {
            prime(*p).and_then(|p| Ok(render_poly(cli.format, p, *k, &dickson(p, *k, &limits)?)))
        }
        Command::Product { p, k } => prime(*p).and_then(|p| {
            Ok(render_poly(
                cli.format,
                p,
                *k,
                &product_over_characters(p, *k, &limits)?,
            ))
        }),
        Command::Euler { p, k, m } => {
            prime(*p).and_then(|p| cmd_euler(cli.format, p, *k, *m, &limits).map(Outcome::ok))
        }
        Command::Check { p, k, m, n } => prime(*p).and_then(|p| {
            let inst = match k {
                Some(k) => ProblemInstance::with_k(p, *k, *m, n.clone())?,
                None => ProblemInstance::new(p, *m, n.clone())?,
            };
            let report = check_bound(&inst, &options)?;
            let code = if report.conclusion.is_established() {
                EXIT_OK
            } else {
                EXIT_NOT_ESTABLISHED
            };
            let stdout = match cli.format {
                OutputFormat::Text => render_report_text(&report),
                OutputFormat::Json => render_report_json(&report),
            };
            Ok(Outcome {
                stdout,
                stderr: String::new(),
                code,
            })
        }),
        Command::Verify { p, k } => prime(*p).and_then(|p| {
            let pass = verify_factorization(p, *k, &limits)?;
            let stdout = match cli.format {
                OutputFormat::Text => format!(
                    "p: {p}\nk: {k}\nfactorization_identity: {}\n",
                    if pass { "pass" } else { "fail" }
                ),
                OutputFormat::Json => json_line(&VerifyJson {
                    p: p.get(),
                    k: *k,
                    pass,
                }),
            };
            Ok(Outcome {
                stdout,
                stderr: String::new(),
                code: if pass { EXIT_OK } else { EXIT_NOT_ESTABLISHED },
            })
        }),
    };
    result.unwrap_or_else(|e| Outcome::failure(&e))
}

fn prime(p: u64) -> Result<PrimeModulus, Error> {
    PrimeModulus::new(p)
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

#[derive(Serialize)]
struct PolyJson {
    p: u32,
    k: usize,
    degree: Option<u64>,
    polynomial: String,
}

#[derive(Serialize)]
struct VerifyJson {
    p: u32,
    k: usize,
    pass: bool,
}

fn render_poly(format: OutputFormat, p: PrimeModulus, k: usize, f: &SparsePoly) -> Outcome {
    Outcome::ok(match format {
        OutputFormat::Text => format!("{f}\n"),
        OutputFormat::Json => json_line(&PolyJson {
            p: p.get(),
            k,
            degree: f.total_degree(),
            polynomial: f.serialize(),
        }),
    })
}

#[derive(Serialize)]
struct ClassJson {
    kind: &'static str,
    degree: u128,
    polynomial: String,
    target_monomial: Vec<u32>,
    target_coefficient: u32,
}

#[derive(Serialize)]
struct EulerJson {
    p: u32,
    k: usize,
    m: u64,
    classes: Vec<ClassJson>,
}

fn class_json(class: &EulerClassResult, target: &Monomial) -> ClassJson {
    ClassJson {
        kind: class.kind.as_str(),
        degree: class.expected_degree(),
        polynomial: class.poly.serialize(),
        target_monomial: target.exponents().to_vec(),
        target_coefficient: class.poly.coefficient_of(target).value(),
    }
}

fn cmd_euler(
    format: OutputFormat,
    p: PrimeModulus,
    k: usize,
    m: u64,
    limits: &ResourceLimits,
) -> Result<String, Error> {
    let classes = if p.get() == 2 {
        let class = sw_class_eta(k, m, limits)?;
        // fails loudly if the leading coefficient were to vanish
        target_coefficient(p, k, m, limits)?;
        vec![class_json(&class, &target_monomial(p, k, m)?)]
    } else {
        let complex = chern_euler_complex(p, k, m, limits)?;
        let real = real_euler_representative(p, k, m, limits)?;
        target_coefficient(p, k, m, limits)?;
        vec![
            class_json(&complex, &chern_target_monomial(p, k, m)?),
            class_json(&real, &target_monomial(p, k, m)?),
        ]
    };
    let doc = EulerJson {
        p: p.get(),
        k,
        m,
        classes,
    };
    Ok(match format {
        OutputFormat::Json => json_line(&doc),
        OutputFormat::Text => {
            let mut out = String::new();
            for (i, c) in doc.classes.iter().enumerate() {
                if i > 0 {
                    out.push('\n');
                }
                let _ = writeln!(out, "kind: {}", c.kind);
                let _ = writeln!(out, "degree: {}", c.degree);
                let _ = writeln!(out, "polynomial: {}", c.polynomial);
                let _ = writeln!(out, "target_monomial: {}", join(&c.target_monomial));
                let _ = writeln!(out, "target_coefficient: {}", c.target_coefficient);
            }
            out
        }
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Serialize)]
struct ReportClassJson {
    kind: &'static str,
    polynomial: String,
    target_monomial: Vec<u64>,
    target_coefficient: u32,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    p: u32,
    k: usize,
    m: u64,
    n: &'a [u64],
    parity_ok: bool,
    weak_hypothesis: bool,
    strong_hypothesis: bool,
    caps: &'a [u64],
    representative_nonzero: bool,
    conclusion: &'static str,
    #[serde(rename = "dim_M")]
    dim_m: u128,
    bound: i128,
    euler_class: ReportClassJson,
}

pub fn render_report_json(r: &BoundReport) -> String {
    json_line(&ReportJson {
        p: r.p,
        k: r.k,
        m: r.m,
        n: &r.n,
        parity_ok: r.parity_ok,
        weak_hypothesis: r.weak_hypothesis,
        strong_hypothesis: r.strong_hypothesis,
        caps: r.caps.caps(),
        representative_nonzero: r.representative_nonzero_in_quotient,
        conclusion: r.conclusion.as_str(),
        dim_m: r.dim_m,
        bound: r.bound,
        euler_class: ReportClassJson {
            kind: r.euler_class.kind.as_str(),
            polynomial: r.euler_class.image.serialize(),
            target_monomial: r.euler_class.target_monomial.clone(),
            target_coefficient: r.euler_class.target_coefficient,
        },
    })
}

pub fn render_report_text(r: &BoundReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p: {}", r.p);
    let _ = writeln!(out, "k: {}", r.k);
    let _ = writeln!(out, "m: {}", r.m);
    let _ = writeln!(out, "n: {}", join(&r.n));
    let _ = writeln!(out, "parity_ok: {}", r.parity_ok);
    let _ = writeln!(out, "weak_hypothesis: {}", r.weak_hypothesis);
    let _ = writeln!(out, "strong_hypothesis: {}", r.strong_hypothesis);
    let _ = writeln!(out, "caps: {}", join(r.caps.caps()));
    let _ = writeln!(out, "representative_nonzero: {}", r.representative_nonzero_in_quotient);
    let _ = writeln!(out, "conclusion: {}", r.conclusion.as_str());
    let _ = writeln!(out, "dim_M: {}", r.dim_m);
    let _ = writeln!(out, "bound: {}", r.bound);
    let _ = writeln!(out, "euler_class.kind: {}", r.euler_class.kind.as_str());
    let _ = writeln!(out, "euler_class.polynomial: {}", r.euler_class.image);
    let _ = writeln!(
        out,
        "euler_class.target_monomial: {}",
        join(&r.euler_class.target_monomial)
    );
    let _ = writeln!(
        out,
        "euler_class.target_coefficient: {}",
        r.euler_class.target_coefficient
    );
    if r.is_vacuous() {
        let _ = writeln!(out, "note: the bound is negative and therefore vacuous");
    }
    out
}
