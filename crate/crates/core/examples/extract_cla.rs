// Recovering the coassociative Lie algebra on P₂ and rebuilding U(L).
use hopf_core::catalog::{make_cla_b, make_e};
use hopf_core::cla::{enveloping, verify_cla};
use hopf_core::structure::extract_cla;
use hopf_core::Scalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let e = make_e(&Scalar::from_int(1), &Scalar::from_int(1), &Scalar::zero());
    let l = extract_cla(&e, 5)?;
    println!("CLA inside {}:\n{l}", e.label());
    assert!(verify_cla(&l).passed());

    let b = make_cla_b(&Scalar::from_int(1));
    let u = enveloping(&b)?;
    let back = extract_cla(&u, 4)?;
    println!("b(1) → U(b(1)) → P₂ gives back:\n{back}");
    assert_eq!(back, b);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cla extraction");
}
