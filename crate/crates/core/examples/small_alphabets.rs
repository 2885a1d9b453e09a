//! G⊗(S^λ) at d = 1 and for hooks at d = 2 in characteristic 2, against the
//! closed forms.
//!
//! Usage: cargo run --example small_alphabets

use specht_gtensor::module_builder::build_gtensor_specht;
use specht_gtensor::theorems::{d1_predict, frobenius_side_weights, frobenius_weight_check, hook_d2_dim};
use specht_gtensor::{FieldPrime, Partition};

fn main() -> specht_gtensor::Result<()> {
    let f2 = FieldPrime::TWO;
    println!("d = 1");
    for n in 1..=6 {
        let row: Vec<String> = Partition::all(n)
            .iter()
            .map(|l| Ok(format!("{l}:{}/{}", build_gtensor_specht(l, 1, f2)?.dim(), d1_predict(l).dim())))
            .collect::<specht_gtensor::Result<_>>()?;
        println!("  n={n}  {}", row.join("  "));
    }
    println!("\nhooks (a,1^(l-1)) at d = 2: constructed / formula");
    for a in 2..=6 {
        let row: Vec<String> = (2..=6)
            .map(|l| {
                Ok(format!(
                    "{:>2}/{:<2}",
                    build_gtensor_specht(&Partition::hook(a, l), 2, f2)?.dim(),
                    hook_d2_dim(a, l)?
                ))
            })
            .collect::<specht_gtensor::Result<_>>()?;
        println!("  a={a}  {}", row.join("  "));
    }
    println!("\nweights for even l");
    for (a, l) in [(2, 2), (3, 4), (4, 6)] {
        let w: Vec<Vec<usize>> = frobenius_side_weights(a, l)?.iter().map(|(w, _)| w.0.clone()).collect();
        println!("  a={a} l={l}: {:?} matches construction: {}", w, frobenius_weight_check(a, l)?);
    }
    Ok(())
}
