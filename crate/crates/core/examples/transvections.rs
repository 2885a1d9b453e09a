//! Transvections and divided powers acting on skew column tabloids, and the
//! simple modules they generate inside dual Weyl modules.
//!
//! Usage: cargo run --example transvections

use specht_gtensor::module_builder::{apply_divided_power, apply_transvection, simple_module_weight_table};
use specht_gtensor::tabloids::{build_basis, TabloidVector};
use specht_gtensor::{FieldPrime, Partition, Tableau, TabloidKind};

fn main() -> specht_gtensor::Result<()> {
    let f2 = FieldPrime::TWO;
    let basis = build_basis(&"2,1".parse()?, 3, TabloidKind::SkewColumn(f2));
    let v = TabloidVector::of_tableau(&basis, f2, &Tableau::from_rows(&[[1u8, 1].as_slice(), &[2]])?)?;
    println!("v = {v}");
    println!("x1 -> x1 + x3: {}", apply_transvection(&v, 1, 3)?);
    for k in 0..=2 {
        println!("F13^({k}) v = {}", apply_divided_power(&v, 1, 3, k)?);
    }

    println!("\nsimple modules L(λ) at d = 3:");
    for l in (1..=4).flat_map(Partition::all) {
        let dims: Vec<usize> = [FieldPrime::TWO, FieldPrime::THREE]
            .iter()
            .map(|&p| simple_module_weight_table(&l, 3, p).map(|t| t.total()))
            .collect::<specht_gtensor::Result<_>>()?;
        println!("  {:<10} char 2: {:<4} char 3: {}", l.to_string(), dims[0], dims[1]);
    }
    Ok(())
}
