//! Prime field arithmetic: normalization, inverses, Wilson's theorem.

use zpk_classes::fparith::{factorial_mod, field_arith, normalize, FieldOp, PrimeModulus};

fn main() -> zpk_classes::Result<()> {
    let p = PrimeModulus::new(7)?;
    let a = normalize(-3, p);
    let b = p.element(5);
    println!("-3 mod 7 = {a}");
    println!("{a} + {b} = {}", field_arith(a, b, FieldOp::Add)?);
    println!("{a} * {b} = {}", field_arith(a, b, FieldOp::Mul)?);
    println!("{b}^-1 = {}", b.inv()?);
    println!("{b}^6 = {}", b.pow(6));

    for q in [2, 3, 5, 7, 11, 13] {
        let q = PrimeModulus::new(q)?;
        println!("({}-1)! = {} mod {}", q.get(), factorial_mod(q.get() as u64 - 1, q), q.get());
    }

    match PrimeModulus::new(9) {
        Ok(_) => unreachable!(),
        Err(e) => println!("PrimeModulus::new(9): {e}"),
    }
    Ok(())
}
