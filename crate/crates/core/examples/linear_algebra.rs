//! Exact subspace arithmetic over GF(p).
//!
//! Usage: cargo run --example linear_algebra

use specht_gtensor::linalg::{dim_sum_and_intersection, span};
use specht_gtensor::{FieldPrime, FpVector, MatrixGFp};

fn main() -> specht_gtensor::Result<()> {
    let f2 = FieldPrime::TWO;
    let v = |c: &[i64]| FpVector::from_coords(f2, c);
    let s = span(&[v(&[1, 1, 0, 0]), v(&[0, 1, 1, 0])], 4, f2)?;
    let t = span(&[v(&[1, 0, 1, 0]), v(&[0, 0, 0, 1])], 4, f2)?;
    let (sum, inter) = dim_sum_and_intersection(&s, &t)?;
    println!("dim S = {}, dim T = {}, dim(S+T) = {sum}, dim(S∩T) = {inter}", s.dim(), t.dim());
    println!("S ∩ T basis: {:?}", s.intersection(&t)?.basis().iter().map(FpVector::to_coords).collect::<Vec<_>>());
    println!("(1,0,0,1) reduced mod S: {:?}", s.reduce(&v(&[1, 0, 0, 1]))?.to_coords());

    let f3 = FieldPrime::THREE;
    let m = MatrixGFp::from_coords(f3, &[vec![1, 2, 0, 1], vec![2, 1, 0, 2], vec![0, 0, 1, 1]])?;
    println!("\nA over GF(3): rank {} (transpose {})", m.rank(), m.transpose().rank());
    for k in m.kernel() {
        println!("  kernel vector {:?} -> {:?}", k.to_coords(), m.apply(&k)?.to_coords());
    }
    Ok(())
}
