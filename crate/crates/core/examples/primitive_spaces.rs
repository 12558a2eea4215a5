// Primitives, P₂ and the coradical filtration inside a degree bound.
use hopf_core::catalog::make_k;
use hopf_core::structure::{coradical_filtration, p2_space, primitive_space};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let k = make_k();
    let p = primitive_space(&k, 5);
    let p2 = p2_space(&k, 5);
    println!("P  = span{{{}}}", p.render_basis().join(", "));
    println!("P₂ = span{{{}}}", p2.render_basis().join(", "));
    assert!(p.is_subspace_of(&p2));

    for n in 1..=3 {
        let hn = coradical_filtration(&k, n, 4);
        println!("dim H_{n} (degree ≤ 4) = {}", hn.dim());
    }
    let xy2 = k.parse("X*Y^2")?;
    println!(
        "X*Y^2 in H_2: {}",
        coradical_filtration(&k, 2, 4).contains(&xy2)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("primitive spaces");
}
