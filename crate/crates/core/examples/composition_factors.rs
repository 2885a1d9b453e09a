//! Composition factors of the kernel U^λ in characteristic 2 for every
//! non-isomorphic partition of n = 4 and 5, and the ∇-filtration test for
//! G⊗(S^(2,2,1)).

use specht_gtensor::theorems::{
    composition_factors_u, gtensor_factors, nabla_filtration_feasible, non_iso_list, table3_csv, table3_rows,
    DecompositionData,
};
use specht_gtensor::Partition;

fn main() -> specht_gtensor::Result<()> {
    let data = DecompositionData::from_env_or_embedded()?;
    for n in 2..=5 {
        println!(
            "n = {n}: non-isomorphic at d = n: {:?}",
            non_iso_list(n, n)?.iter().map(|p| p.to_string()).collect::<Vec<_>>()
        );
        for lambda in non_iso_list(n, n)? {
            let s = composition_factors_u(&lambda, &data)?;
            println!(
                "  U^{lambda} = {}  (character system {}x{}, dimension system rank {})",
                s.factors, s.system_size, s.system_size, s.dimension_system_rank
            );
        }
    }
    for n in [4, 5] {
        println!("\n{}", table3_csv(&table3_rows(n, &data)?));
    }
    let lambda: Partition = "2,2,1".parse()?;
    let g = gtensor_factors(&lambda, &data)?;
    println!("factors of G⊗(S^{lambda}): {g}");
    println!("sum of dual Weyl factor sets: {}", nabla_filtration_feasible(&g, &data)?);
    Ok(())
}
