// The coassociative Lie algebras of dimension three and four.
use hopf_core::catalog::make_cla_35;
use hopf_core::cla::{conilpotency_index, verify_cla};
use hopf_core::Scalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let q = Scalar::from_int;
    let cases: [(char, Vec<Scalar>); 5] = [
        ('a', vec![q(1), q(1), q(1)]),
        ('c', vec![q(1), q(2), q(3)]),
        ('f', vec![]),
        ('g', vec![q(1), q(0), q(0)]),
        ('h', vec![q(2), q(0)]),
    ];
    for (v, params) in cases {
        let l = make_cla_35(v, &params)?;
        let r = verify_cla(&l);
        println!(
            "({v}) axioms {} conilpotency index {:?}",
            if r.passed() { "hold" } else { "fail" },
            conilpotency_index(&l)
        );
        assert!(r.passed());
    }

    let bad = make_cla_35('g', &[q(1), q(1), q(0)])?;
    let r = verify_cla(&bad);
    println!(
        "(g) with b = 1: {}",
        r.first_failure()
            .and_then(|c| c.witness.clone())
            .unwrap_or_default()
    );
    assert!(!r.passed());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cla catalog");
}
