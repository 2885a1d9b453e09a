//! Weights of the kernel generators of q for λ = (2,2,1), grouped by sorted
//! type and compared with their binomial counts.
//!
//! Usage: cargo run --example kernel_weights -- [d_max]

use specht_gtensor::theorems::{table1_csv, table1_formulas, table1_weight_counts};

fn main() -> specht_gtensor::Result<()> {
    let d_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(7);
    for f in table1_formulas() {
        println!("{:<12} {f}", f.sorted_type.to_string());
    }
    for d in 4..=d_max {
        println!("\nd = {d}");
        print!("{}", table1_csv(d, &table1_weight_counts(d)?));
    }
    Ok(())
}
