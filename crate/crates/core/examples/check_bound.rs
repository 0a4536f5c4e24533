//! Check the coincidence-set dimension bound for a few instances.

use zpk_classes::fparith::PrimeModulus;
use zpk_classes::theorem::{check_bound, CheckOptions, ProblemInstance};

fn main() -> zpk_classes::Result<()> {
    let cases: [(u64, u64, &[u64]); 5] = [
        (3, 1, &[7, 7]),
        (2, 1, &[1, 1]),
        (2, 3, &[5]),
        (5, 2, &[9, 41]),
        (3, 1, &[3, 7, 19, 55, 163]),
    ];
    for (p, m, n) in cases {
        let inst = ProblemInstance::new(PrimeModulus::new(p)?, m, n.to_vec())?;
        let r = check_bound(&inst, &CheckOptions::default())?;
        println!(
            "p={p} m={m} n={n:?}: caps {:?}, weak {}, strong {}, {} (bound {})",
            r.caps.caps(),
            r.weak_hypothesis,
            r.strong_hypothesis,
            r.conclusion.as_str(),
            r.bound
        );
        println!("  image {}", r.euler_class.image);
    }

    let even = ProblemInstance::new(PrimeModulus::new(3)?, 1, vec![6, 7])?;
    if let Err(e) = check_bound(&even, &CheckOptions::default()) {
        println!("p=3 n=[6, 7]: {e}");
    }
    Ok(())
}
