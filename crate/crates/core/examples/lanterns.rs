// Lanterns of Hopf algebras and of coassociative Lie algebras.
use hopf_core::catalog::{list_catalog, Built};
use hopf_core::cla::lantern_of_cla;
use hopf_core::structure::lantern_of_hopf;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for entry in list_catalog() {
        let g = match entry.build()? {
            Built::Hopf(h) => lantern_of_hopf(&h, 4)?,
            Built::Cla(l) => lantern_of_cla(&l)?,
        };
        assert!(g.verify().passed());
        println!(
            "{:<32} dims {:?} shape {:?}",
            entry.label(),
            g.dims_by_degree(),
            g.shape()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("lanterns");
}
