// Counting PBW monomials and reading off GK-dimension.
use hopf_core::catalog::{list_catalog, Family};
use hopf_core::ore::pbw_count;
use hopf_core::replicate::{finite_differences, GROWTH_POINTS};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let d = list_catalog()
        .into_iter()
        .find(|s| s.family == Family::D)
        .expect("a D entry")
        .hopf()?;
    let counts: Vec<i128> = GROWTH_POINTS
        .iter()
        .map(|&n| pbw_count(d.algebra(), n) as i128)
        .collect();
    for (n, c) in GROWTH_POINTS.iter().zip(&counts) {
        println!("dim of degree ≤ {n:>3}: {c}");
    }
    println!("4th differences {:?}", finite_differences(&counts, 4));
    println!("5th differences {:?}", finite_differences(&counts, 5));
    assert!(finite_differences(&counts, 5).iter().all(|&x| x == 0));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("growth");
}
