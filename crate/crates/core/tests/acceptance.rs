//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p zpk-classes --test acceptance`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zpk_classes::charclass::*;
use zpk_classes::multipoly::{Monomial, SparsePoly};
use zpk_classes::theorem::{check_bound, CheckOptions, Conclusion, ProblemInstance};
use zpk_classes::truncring::{product_trunc, TruncationIdeal};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lim() -> ResourceLimits {
    ResourceLimits::default()
}

/// Factorization identity, exact, each case under 10 s.
fn ac1() -> Outcome {
    let cases = [(2, 1), (2, 2), (2, 3), (2, 4), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2), (7, 1)];
    let mut slowest = Duration::ZERO;
    for (p, k) in cases {
        let start = Instant::now();
        let prime = pm(p);
        let direct = product_over_characters(prime, k, &lim()).map_err(|e| e.to_string())?;
        let sign = prime.element(if k % 2 == 0 { 1 } else { -1 });
        let closed = dickson(prime, k, &lim())
            .and_then(|l| l.pow(p - 1))
            .and_then(|f| f.scale(sign))
            .map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        slowest = slowest.max(elapsed);
        ensure(direct == closed, || format!("identity fails at p={p} k={k}"))?;
        ensure(elapsed < Duration::from_secs(10), || format!("p={p} k={k} took {elapsed:?}"))?;
    }
    Ok(format!("{} cases, slowest {slowest:?}", cases.len()))
}

/// Mod-2 target monomial coefficient is 1.
fn ac2() -> Outcome {
    let mut n = 0;
    for k in 1..=4 {
        for m in 1..=3u64 {
            let class = sw_class_eta(k, m, &lim()).map_err(|e| e.to_string())?;
            let exps: Vec<u32> = (0..k).map(|i| (m << i) as u32).collect();
            let c = class.poly.coefficient_of(&Monomial::new(exps.clone()));
            ensure(c.value() == 1, || format!("k={k} m={m}: coefficient of {exps:?} is {c}"))?;
            n += 1;
        }
    }
    Ok(format!("{n} cases"))
}

/// Complex class leading coefficient is (-1)^(km); real target coefficient nonzero.
fn ac3() -> Outcome {
    let mut n = 0;
    for p in [3u64, 5] {
        for k in 1..=2usize {
            for m in 1..=3u64 {
                let prime = pm(p);
                let complex = chern_euler_complex(prime, k, m, &lim()).map_err(|e| e.to_string())?;
                let exps: Vec<u32> = (0..k).map(|i| (m * p.pow(i as u32) * (p - 1)) as u32).collect();
                let c = complex.poly.coefficient_of(&Monomial::new(exps));
                let expected = prime.element(if (k as u64 * m) % 2 == 0 { 1 } else { -1 });
                ensure(c == expected, || format!("p={p} k={k} m={m}: got {c}, want {expected}"))?;
                let t = target_coefficient(prime, k, m, &lim()).map_err(|e| e.to_string())?;
                ensure(!t.is_zero(), || format!("p={p} k={k} m={m}: target coefficient zero"))?;
                n += 1;
            }
        }
    }
    Ok(format!("{n} cases"))
}

fn grid(p: u64, k: usize, m: u64) -> Vec<Vec<u64>> {
    let mut out: Vec<Vec<u64>> = vec![vec![]];
    for i in 0..k {
        let t = m * p.pow(i as u32) * (p - 1);
        let axis: Vec<u64> = (t.saturating_sub(2)..=t + 2)
            .filter(|&n| n >= 1 && (p == 2 || n % 2 == 1))
            .collect();
        out = out
            .iter()
            .flat_map(|prefix| {
                axis.iter().map(move |&n| {
                    let mut v = prefix.clone();
                    v.push(n);
                    v
                })
            })
            .collect();
    }
    out
}

/// parity_ok and weak_hypothesis imply a nonzero representative; under 5 min.
fn ac4() -> Outcome {
    let start = Instant::now();
    let mut instances = 0;
    let mut premises = 0;
    for (p, kmax) in [(2u64, 3usize), (3, 2)] {
        for k in 1..=kmax {
            for m in 1..=3 {
                for n in grid(p, k, m) {
                    let inst = ProblemInstance::new(pm(p), m, n.clone()).map_err(|e| e.to_string())?;
                    let r = check_bound(&inst, &CheckOptions::default()).map_err(|e| e.to_string())?;
                    if r.parity_ok && r.weak_hypothesis {
                        premises += 1;
                        ensure(r.representative_nonzero_in_quotient, || {
                            format!("exception at p={p} m={m} n={n:?}")
                        })?;
                    }
                    instances += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("grid took {elapsed:?}"))?;
    Ok(format!("{instances} instances, {premises} with hypotheses, 0 exceptions, {elapsed:?}"))
}

/// Single-sphere bounds n - m and n - m(p-1).
fn ac5() -> Outcome {
    let mut pairs = Vec::new();
    for m in 1..=4u64 {
        for n in m..m + 5 {
            pairs.push((2u64, n, m));
        }
    }
    assert_eq!(pairs.len(), 20);
    for p in [3u64, 5] {
        for m in 1..=3 {
            for n in (m * (p - 1) + 1..=m * (p - 1) + 9).step_by(2) {
                pairs.push((p, n, m));
            }
        }
    }
    for &(p, n, m) in &pairs {
        let inst = ProblemInstance::new(pm(p), m, vec![n]).map_err(|e| e.to_string())?;
        let r = check_bound(&inst, &CheckOptions::default()).map_err(|e| e.to_string())?;
        let expected = n as i128 - (m * (p - 1)) as i128;
        ensure(r.bound == expected, || format!("p={p} n={n} m={m}: bound {}", r.bound))?;
        ensure(r.conclusion.is_established(), || format!("p={p} n={n} m={m}: not established"))?;
    }
    Ok(format!("{} pairs (20 with p = 2)", pairs.len()))
}

/// GL_k(F_p) substitutions fix the character product.
fn ac6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for (p, k) in [(2u64, 3usize), (3, 2)] {
        let f = product_over_characters(pm(p), k, &lim()).map_err(|e| e.to_string())?;
        for trial in 0..100 {
            let g = random_invertible(&mut rng, p, k);
            let moved = f.substitute(&substitution_images(p, &g)).map_err(|e| e.to_string())?;
            ensure(moved == f, || format!("p={p} k={k} trial {trial}: {g:?} moves the product"))?;
        }
    }
    Ok("200 substitutions".into())
}

fn random_poly(rng: &mut ChaCha8Rng, p: u64, k: usize) -> SparsePoly {
    let terms = rng.gen_range(1..=3);
    let raw: Vec<(Monomial, i64)> = (0..terms)
        .map(|_| {
            let e: Vec<u32> = (0..k).map(|_| rng.gen_range(0..=2)).collect();
            (Monomial::new(e), rng.gen_range(0..p as i64))
        })
        .collect();
    SparsePoly::from_terms(pm(p), k, raw).unwrap()
}

/// Truncated products agree with reducing the full product.
fn ac7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut nonzero = 0;
    for trial in 0..200 {
        let p = [2u64, 3, 5][rng.gen_range(0..3)];
        let k = rng.gen_range(1..=3);
        let count = rng.gen_range(1..=10);
        let fs: Vec<SparsePoly> = (0..count).map(|_| random_poly(&mut rng, p, k)).collect();
        let caps: Vec<u64> = (0..k).map(|_| rng.gen_range(1..=6)).collect();
        let ideal = TruncationIdeal::new(caps.clone()).unwrap();
        let got = product_trunc(&fs, &ideal).map_err(|e| e.to_string())?;
        let naive: Vec<NaivePoly> = fs.iter().map(to_naive).collect();
        let expected = naive_reduce(&naive_product(p, k, &naive), &caps);
        ensure(to_naive(&got) == expected, || format!("trial {trial}: p={p} caps={caps:?}"))?;
        nonzero += usize::from(!got.is_zero());
    }
    Ok(format!("200 lists, {nonzero} with nonzero image"))
}

/// p=3, k=5, m=1, minimal odd n, under 60 s.
fn ac8() -> Outcome {
    let start = Instant::now();
    let inst = ProblemInstance::new(pm(3), 1, vec![3, 7, 19, 55, 163]).map_err(|e| e.to_string())?;
    let r = check_bound(&inst, &CheckOptions::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(r.caps.caps() == [2, 4, 10, 28, 82], || format!("caps {:?}", r.caps.caps()))?;
    ensure(r.representative_nonzero_in_quotient, || "representative vanished".into())?;
    ensure(r.conclusion == Conclusion::BoundEstablished, || format!("{:?}", r.conclusion))?;
    ensure(r.bound == 247 - 242, || format!("bound {}", r.bound))?;
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("{elapsed:?}, image {}", r.euler_class.image))
}

/// CLI golden files and exit codes.
fn ac9() -> Outcome {
    let golden = |name: &str| {
        std::fs::read_to_string(format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR")))
            .map_err(|e| format!("{name}: {e}"))
    };
    let run = |args: &[&str]| -> Result<(String, String, i32), String> {
        let out = Command::new(env!("CARGO_BIN_EXE_zpk-classes"))
            .args(args)
            .output()
            .map_err(|e| e.to_string())?;
        Ok((
            String::from_utf8_lossy(&out.stdout).into_owned(),
            String::from_utf8_lossy(&out.stderr).into_owned(),
            out.status.code().unwrap_or(-1),
        ))
    };
    let cases: [(&[&str], &str, i32); 3] = [
        (&["check", "--p", "3", "--k", "2", "--m", "1", "--n", "7,7", "--format", "json"], "check_p3_k2_m1_n7-7.json", 0),
        (&["check", "--p", "2", "--k", "2", "--m", "1", "--n", "1,1", "--format", "json"], "check_p2_k2_m1_n1-1.json", 1),
        (&["check", "--p", "2", "--k", "2", "--m", "1", "--n", "1,1"], "check_p2_k2_m1_n1-1.txt", 1),
    ];
    for (args, file, code) in cases {
        let (out, _, got) = run(args)?;
        ensure(got == code, || format!("{file}: exit {got}, want {code}"))?;
        ensure(out == golden(file)?, || format!("{file}: output differs"))?;
    }
    let (out, err, got) = run(&["check", "--p", "3", "--k", "2", "--m", "1", "--n", "6,7", "--format", "json"])?;
    ensure(got == 2 && out.is_empty(), || format!("parity case: exit {got}"))?;
    ensure(err == golden("check_p3_k2_m1_n6-7.stderr")?, || "parity message differs".into())?;
    let (_, _, got) = run(&["product", "--p", "3", "--k", "6", "--max-factors", "100"])?;
    ensure(got == 3, || format!("resource cap: exit {got}"))?;
    Ok("3 golden outputs, parity exit 2, cap exit 3".into())
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, fn() -> Outcome); 9] = [
        ("AC1", "factorization identity", ac1),
        ("AC2", "mod-2 target monomial", ac2),
        ("AC3", "odd-p leading coefficients", ac3),
        ("AC4", "sufficiency grid", ac4),
        ("AC5", "single-sphere bounds", ac5),
        ("AC6", "GL-invariance", ac6),
        ("AC7", "truncation oracle", ac7),
        ("AC8", "performance p=3 k=5", ac8),
        ("AC9", "CLI golden files", ac9),
    ];
    let mut failed = 0;
    for (id, name, f) in criteria {
        let result = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(detail) => println!("{id} PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("{id} FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
