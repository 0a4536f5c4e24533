//! The Dickson polynomial L_k as a product of normalized linear forms.

use zpk_classes::charclass::{dickson, dickson_factors, ResourceLimits};
use zpk_classes::fparith::PrimeModulus;

fn main() -> zpk_classes::Result<()> {
    let limits = ResourceLimits::default();
    for (p, k) in [(2, 2), (3, 2), (5, 1), (2, 3)] {
        let prime = PrimeModulus::new(p)?;
        let forms = dickson_factors(prime, k, &limits)?;
        let l = dickson(prime, k, &limits)?;
        println!("p={p} k={k}: {} forms, degree {:?}", forms.len(), l.homogeneous_degree());
        println!("  L = {l}");
    }
    Ok(())
}
