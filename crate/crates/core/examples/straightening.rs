//! Straightens column tabloids into combinations of semistandard ones.
//!
//! Usage: cargo run --example straightening

use specht_gtensor::module_builder::Straightener;
use specht_gtensor::{FieldPrime, Partition, Tableau};

fn show(s: &Straightener, rows: &[&[u8]]) -> specht_gtensor::Result<()> {
    let t = Tableau::from_rows(rows)?;
    let v = s.straighten(&t)?;
    let terms: Vec<String> = v.terms().map(|(i, c)| format!("{c}·{:?}", s.basis().rep(i).rows())).collect();
    println!("  {:?} -> {}", t.rows(), if terms.is_empty() { "0".into() } else { terms.join(" + ") });
    Ok(())
}

fn main() -> specht_gtensor::Result<()> {
    let shape: Partition = "2,1".parse()?;
    for p in [FieldPrime::TWO, FieldPrime::THREE] {
        println!("shape {shape}, d = 3, GF({})", p.p());
        let s = Straightener::new(&shape, 3, p)?;
        show(&s, &[&[2, 1], &[3]])?;
        show(&s, &[&[3, 1], &[2]])?;
        show(&s, &[&[2, 1], &[1]])?;
    }
    let shape: Partition = "2,2".parse()?;
    println!("shape {shape}, d = 4, GF(3)");
    let s = Straightener::new(&shape, 4, FieldPrime::THREE)?;
    show(&s, &[&[4, 3], &[2, 1]])?;
    show(&s, &[&[3, 1], &[4, 2]])?;
    Ok(())
}
