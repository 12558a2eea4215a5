// Normal forms in an iterated Ore extension and the PBW overlap check.
use hopf_core::catalog::make_a;
use hopf_core::ore::{normal_form, parse_word, pbw_count, verify_pbw_consistency};
use hopf_core::Scalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let h = make_a(
        &Scalar::from_int(1),
        &Scalar::from_int(2),
        &Scalar::from_int(1),
    );
    let alg = h.algebra();
    let word = parse_word(alg, "Z X Y")?;
    let nf = normal_form(alg, &word, &Scalar::one());
    println!("ZXY = {}", alg.render(&nf));

    let report = verify_pbw_consistency(alg);
    println!("{report}");
    assert!(report.passed());

    for n in 0..=6 {
        println!("PBW monomials of degree ≤ {n}: {}", pbw_count(alg, n));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("pbw rewriting");
}
