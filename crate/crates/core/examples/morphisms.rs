// Linearizing substitutions and base changes as checked maps.
use hopf_core::catalog::{make_cla_a, make_k, presentation};
use hopf_core::cla::cla_transform;
use hopf_core::coalgebra::{parse_images, verify_morphism};
use hopf_core::{Matrix, Scalar};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let g = presentation(
        &[("X", 1), ("Y", 1), ("Z", 2), ("W'", 3)],
        &[("Z", "X", "X"), ("W'", "X", "-Z"), ("W'", "Z", "W'")],
        &[],
    )?;
    let k = make_k();
    let pairs: Vec<(String, String)> =
        [("X", "X"), ("Y", "Y"), ("Z", "Z"), ("W'", "W - 1/2*X*Y^2")]
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect();
    let r = verify_morphism(&g, &k, &parse_images(&g, &k, &pairs)?, false)?;
    println!(
        "U(g) → K, W' ↦ W - 1/2·XY²: {}",
        if r.passed() {
            "algebra map"
        } else {
            "not a map"
        }
    );
    assert!(r.passed());

    let q = Scalar::from_int;
    let half = Scalar::new(1, 2);
    let m = Matrix::from_dense(&[
        vec![q(0), q(1), q(0)],
        vec![-half.clone(), q(0), q(0)],
        vec![q(0), q(0), half.clone()],
    ]);
    let moved = cla_transform(&make_cla_a(&q(1), &q(2), &q(0)), &m)?;
    println!("a(1,2,0) after base change:\n{moved}");
    assert_eq!(moved, make_cla_a(&q(1), &half, &q(0)));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("morphisms");
}
