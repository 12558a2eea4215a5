// Second cobar cohomology of a truncated coalgebra.
use hopf_core::catalog::{make_a, make_b};
use hopf_core::cobar::{h2_report, is_coboundary};
use hopf_core::Scalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let zero = Scalar::zero();
    let graded = make_a(&zero, &zero, &zero);
    let r = h2_report(&graded, 4, true)?;
    println!("{}: nonzero H² in bidegrees {:?}", r.label, r.nonzero());

    let b = make_b(&Scalar::one());
    let r = h2_report(&b, 5, false)?;
    println!(
        "{}: dim H² = {} (d² = 0: {})",
        r.label, r.total_h2, r.squares_to_zero
    );

    let exact = b.parse_tensor("X⊗Y + Y⊗X")?;
    let off = b.parse_tensor("X⊗Z")?;
    println!(
        "X⊗Y + Y⊗X is a coboundary: {}",
        is_coboundary(&b, &exact, 5)?.is_coboundary()
    );
    match is_coboundary(&b, &off, 5) {
        Ok(c) => println!("X⊗Z is a coboundary: {}", c.is_coboundary()),
        Err(e) => println!("X⊗Z rejected: {e}"),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cobar cohomology");
}
