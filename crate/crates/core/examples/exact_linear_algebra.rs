// Exact rational rank, kernel and inverse.
use hopf_core::{Matrix, Scalar};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let m = Matrix::from_ints(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
    println!("rank = {}", m.rank());
    for v in m.kernel_basis() {
        let shown: Vec<String> = v.iter().map(Scalar::to_string).collect();
        println!("kernel vector ({})", shown.join(", "));
        assert!(m.mul_vec(&v).iter().all(Scalar::is_zero));
    }
    let a = Matrix::from_ints(&[&[2, 1], &[1, 1]]);
    let inv = a.inverse()?;
    assert_eq!(a.mul(&inv), Matrix::identity(2));
    let third: Scalar = "1/3".parse()?;
    println!("1/3 + 1/3 + 1/3 = {}", &(&third + &third) + &third);
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("exact linear algebra");
}
