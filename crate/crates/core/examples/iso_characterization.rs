//! Compares the predicted isomorphism G⊗(S^λ) ≅ ∇^λ in characteristic 2
//! with the constructed modules for every λ ⊢ n.
//!
//! Usage: cargo run --release --example iso_characterization -- [n_max]

use specht_gtensor::module_builder::{build_dual_weyl, build_gtensor_specht};
use specht_gtensor::theorems::{non_iso_list, verify_characterization, weak_d_bound, DPolicy};
use specht_gtensor::FieldPrime;

fn main() -> specht_gtensor::Result<()> {
    let n_max: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(6);
    let f2 = FieldPrime::TWO;
    for n in 1..=n_max {
        println!("n = {n}");
        for v in verify_characterization(n, &DPolicy::ThresholdAndN)? {
            let dims: Vec<String> = v
                .verified_at
                .iter()
                .map(|&(d, _)| {
                    let g = build_gtensor_specht(&v.lambda, d, f2).map(|m| m.dim()).unwrap_or(0);
                    let nb = build_dual_weyl(&v.lambda, d, f2).map(|m| m.dim()).unwrap_or(0);
                    format!("d={d}: {g} vs {nb}")
                })
                .collect();
            let flag = if v.violations().is_empty() { "" } else { "  MISMATCH" };
            let bound = weak_d_bound(&v.lambda).map_or(String::new(), |b| format!("  weak bound d >= {b}"));
            println!(
                "  {:<14} predicted {:<5} constructed {:?}  [{}]{bound}{flag}",
                v.lambda.to_string(),
                v.predicted,
                v.verified_at.iter().map(|x| x.1).collect::<Vec<_>>(),
                dims.join(", ")
            );
        }
    }
    for n in [4, 5] {
        let list: Vec<String> = non_iso_list(n, n)?.iter().map(ToString::to_string).collect();
        println!("non-isomorphic at n = d = {n}: {}", list.join(" "));
    }
    Ok(())
}
