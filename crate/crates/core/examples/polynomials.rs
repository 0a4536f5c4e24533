//! Sparse polynomials over F_p: building, multiplying, parsing.

use zpk_classes::fparith::PrimeModulus;
use zpk_classes::multipoly::{LinearForm, Monomial, SparsePoly};

fn main() -> zpk_classes::Result<()> {
    let p = PrimeModulus::new(3)?;
    let x1 = SparsePoly::var(p, 2, 0);
    let x2 = SparsePoly::var(p, 2, 1);

    let f = x1.add(&x2)?.pow(3)?;
    println!("(x1 + x2)^3 = {f}");

    let g = LinearForm::from_residues(p, &[1, 2])?.to_poly();
    let h = g.mul(&x1)?.mul(&x2)?;
    println!("(x1 + 2*x2)*x1*x2 = {h}");
    println!("total degree {:?}, {} terms", h.total_degree(), h.len());
    println!("coefficient of x1*x2^2: {}", h.coefficient_of(&Monomial::new(vec![1, 2])));
    let (lead, c) = h.leading_term()?;
    println!("leading term: {c} * {:?}", lead.exponents());

    let text = "2*x1^3*x2 + x1*x2^3";
    let parsed = SparsePoly::parse(text, p, 2)?;
    println!("parsed {text:?} -> {}", parsed.serialize());
    Ok(())
}
