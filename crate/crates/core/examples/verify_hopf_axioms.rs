// Coassociativity, compatibility and antipode checks over the catalog.
use hopf_core::catalog::list_catalog;
use hopf_core::coalgebra::{verify_antipode, verify_coassociativity, verify_compatibility};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for entry in list_catalog().iter().filter(|s| !s.family.is_cla()) {
        let h = entry.hopf()?;
        let mut r = verify_coassociativity(&h);
        r.merge(verify_compatibility(&h));
        r.merge(verify_antipode(&h, 3));
        println!(
            "{:<32} {}",
            h.label(),
            if r.passed() { "ok" } else { "FAILED" }
        );
        assert!(r.passed());
    }

    let b = list_catalog()
        .into_iter()
        .find(|s| s.label() == "B(1)")
        .expect("B(1)")
        .hopf()?;
    let z = b.parse("Z")?;
    let s2 = b.antipode(&b.antipode(&z)?)?;
    println!("in B(1): S²(Z) = {}", b.render(&s2));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("hopf axioms");
}
