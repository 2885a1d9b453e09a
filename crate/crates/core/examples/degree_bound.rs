//! dim U^λ as a function of d, with the degree of the interpolating polynomial.
//!
//! Usage: cargo run --release --example degree_bound

use specht_gtensor::theorems::{u221_formula, u_lambda_degree};
use specht_gtensor::Partition;

fn main() -> specht_gtensor::Result<()> {
    for n in [4, 5] {
        for l in Partition::all(n) {
            let (pts, deg) = u_lambda_degree(&l)?;
            let deg = deg.map_or("zero".to_string(), |k| k.to_string());
            println!("{:<12} degree {deg:<4} (bound {})  {pts:?}", l.to_string(), n - 1);
        }
    }
    let l: Partition = "2,2,1".parse()?;
    println!("\n(d^4 + 5d^2)/6 for {l}: {:?}", (4..=8).map(|d| (d, u221_formula(d))).collect::<Vec<_>>());
    Ok(())
}
