// Reading and writing presentations and CLAs as JSON.
use hopf_core::catalog::{make_cla_b, make_d};
use hopf_core::json::{load_str, ClaJson, Loaded, PresentationJson};
use hopf_core::Scalar;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let (one, zero) = (Scalar::one(), Scalar::zero());
    let d = make_d(&one, &zero, [&zero, &zero, &zero, &one], &zero, &zero)?;
    let text = serde_json::to_string_pretty(&PresentationJson::from_presentation(&d))?;
    println!("{text}");
    match load_str(&text)? {
        Loaded::Hopf(back) => assert_eq!(back.deltas(), d.deltas()),
        Loaded::Cla(_) => unreachable!("presentation document"),
    }

    let b = make_cla_b(&Scalar::new(-1, 3));
    let text = serde_json::to_string(&ClaJson::from_cla(&b))?;
    println!("{text}");
    let Loaded::Cla(back) = load_str(&text)? else {
        unreachable!("cla document")
    };
    assert_eq!(back, b);

    let Loaded::Hopf(a) = load_str(r#"{"family": "A", "params": [1, 0, "1/2"]}"#)? else {
        unreachable!("family reference")
    };
    println!("family reference loads {}", a.label());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("json io");
}
