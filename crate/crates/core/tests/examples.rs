//! Every crate example runs to completion.

mod cla_catalog {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/cla_catalog.rs"
    ));
}

#[test]
fn cla_catalog_runs() {
    cla_catalog::run_example().expect("cla_catalog example should run");
}

mod cobar_cohomology {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/cobar_cohomology.rs"
    ));
}

#[test]
fn cobar_cohomology_runs() {
    cobar_cohomology::run_example().expect("cobar_cohomology example should run");
}

mod exact_linear_algebra {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/exact_linear_algebra.rs"
    ));
}

#[test]
fn exact_linear_algebra_runs() {
    exact_linear_algebra::run_example().expect("exact_linear_algebra example should run");
}

mod extract_cla {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/extract_cla.rs"
    ));
}

#[test]
fn extract_cla_runs() {
    extract_cla::run_example().expect("extract_cla example should run");
}

mod growth {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/growth.rs"));
}

#[test]
fn growth_runs() {
    growth::run_example().expect("growth example should run");
}

mod json_io {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/json_io.rs"));
}

#[test]
fn json_io_runs() {
    json_io::run_example().expect("json_io example should run");
}

mod lanterns {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/lanterns.rs"));
}

#[test]
fn lanterns_runs() {
    lanterns::run_example().expect("lanterns example should run");
}

mod morphisms {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/morphisms.rs"
    ));
}

#[test]
fn morphisms_runs() {
    morphisms::run_example().expect("morphisms example should run");
}

mod pbw_rewriting {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/pbw_rewriting.rs"
    ));
}

#[test]
fn pbw_rewriting_runs() {
    pbw_rewriting::run_example().expect("pbw_rewriting example should run");
}

mod primitive_spaces {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/primitive_spaces.rs"
    ));
}

#[test]
fn primitive_spaces_runs() {
    primitive_spaces::run_example().expect("primitive_spaces example should run");
}

mod verify_hopf_axioms {
    include!(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/examples/verify_hopf_axioms.rs"
    ));
}

#[test]
fn verify_hopf_axioms_runs() {
    verify_hopf_axioms::run_example().expect("verify_hopf_axioms example should run");
}
