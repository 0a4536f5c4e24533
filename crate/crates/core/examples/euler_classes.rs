//! Euler classes of the bundles attached to a free (Z/p)^k action.

use zpk_classes::charclass::{
    chern_euler_complex, real_euler_representative, sw_class_eta, target_coefficient,
    target_monomial, ResourceLimits,
};
use zpk_classes::fparith::PrimeModulus;

fn main() -> zpk_classes::Result<()> {
    let limits = ResourceLimits::default();

    let w = sw_class_eta(2, 1, &limits)?;
    let two = PrimeModulus::new(2)?;
    println!("p=2 k=2 m=1 {}: {}", w.kind.as_str(), w.poly);
    println!("  target {:?}", target_monomial(two, 2, 1)?.exponents());

    let p = PrimeModulus::new(3)?;
    let c = chern_euler_complex(p, 2, 1, &limits)?;
    let r = real_euler_representative(p, 2, 1, &limits)?;
    println!("p=3 k=2 m=1 {}: degree {}, {} terms", c.kind.as_str(), c.expected_degree(), c.poly.len());
    println!("p=3 k=2 m=1 {}: {}", r.kind.as_str(), r.poly);
    println!(
        "  target {:?} with coefficient {}",
        target_monomial(p, 2, 1)?.exponents(),
        target_coefficient(p, 2, 1, &limits)?
    );
    Ok(())
}
