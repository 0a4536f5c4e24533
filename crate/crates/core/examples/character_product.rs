//! The product of all nonzero characters and its closed form (-1)^k L_k^(p-1).

use zpk_classes::charclass::{
    nonzero_characters, product_over_characters, verify_factorization, wilson_closed_form,
    ResourceLimits,
};
use zpk_classes::fparith::PrimeModulus;

fn main() -> zpk_classes::Result<()> {
    let limits = ResourceLimits::default();
    let p = PrimeModulus::new(3)?;
    let chars = nonzero_characters(p, 2, &limits)?;
    let listed: Vec<String> = chars.iter().map(|c| format!("{:?}", c.entries())).collect();
    println!("characters of (Z/3)^2: {}", listed.join(" "));

    let direct = product_over_characters(p, 2, &limits)?;
    println!("product = {direct}");
    println!("closed  = {}", wilson_closed_form(p, 2, &limits)?);

    for (q, k) in [(2, 4), (3, 3), (5, 2), (7, 1)] {
        let ok = verify_factorization(PrimeModulus::new(q)?, k, &limits)?;
        println!("identity at p={q} k={k}: {ok}");
    }
    Ok(())
}
