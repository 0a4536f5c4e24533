//! Products in F_p[x]/(x_1^d_1, ..., x_k^d_k) without expanding the full product.

use zpk_classes::charclass::{dickson_factors, ResourceLimits};
use zpk_classes::fparith::PrimeModulus;
use zpk_classes::multipoly::SparsePoly;
use zpk_classes::truncring::{product_trunc_with, reduce, Parallelism, TruncationIdeal};

fn main() -> zpk_classes::Result<()> {
    let p = PrimeModulus::new(3)?;
    let forms: Vec<SparsePoly> = dickson_factors(p, 2, &ResourceLimits::default())?
        .iter()
        .map(|f| f.to_poly())
        .collect();

    for caps in [vec![4, 4], vec![2, 4], vec![2, 3]] {
        let ideal = TruncationIdeal::new(caps.clone())?;
        let serial = product_trunc_with(&forms, &ideal, Parallelism::Serial)?;
        let parallel = product_trunc_with(&forms, &ideal, Parallelism::Parallel)?;
        assert_eq!(serial, parallel);
        println!("L_2 mod caps {caps:?} = {serial}");
    }

    let f = SparsePoly::parse("x1^5 + x1^2*x2 + x2^7", p, 2)?;
    let ideal = TruncationIdeal::new(vec![3, 3])?;
    println!("reduce({f}) = {}", reduce(&f, &ideal)?);
    Ok(())
}
