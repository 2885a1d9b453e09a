//! Builds dual Weyl modules as alternating column tabloids modulo basic
//! snake relations and compares dimensions with the hook-content formula.
//!
//! Usage: cargo run --example dual_weyl -- [lambda] [d] [p]

use specht_gtensor::combinatorics::hook_content_dim;
use specht_gtensor::module_builder::build_dual_weyl;
use specht_gtensor::{FieldPrime, Partition};

fn main() -> specht_gtensor::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let lambda: Partition = args.first().map_or("2,2,1", String::as_str).parse()?;
    let d: usize = args.get(1).map_or(Ok(3), |s| s.parse()).unwrap_or(3);
    let p = FieldPrime::new(args.get(2).map_or(Ok(2), |s| s.parse()).unwrap_or(2))?;

    let m = build_dual_weyl(&lambda, d, p)?;
    println!("∇^{lambda} over GF({}) with d = {d}", p.p());
    println!("  ambient column tabloids: {}", m.ambient_dim());
    println!("  relation rank:           {}", m.relations().dim());
    println!("  dimension:               {} (hook content {})", m.dim(), hook_content_dim(&lambda, d));
    println!("  weights:");
    for (w, k) in m.weight_table().dominant().iter() {
        println!("    {:?} x{k}", w.0);
    }
    println!("  quotient basis (semistandard tableaux, column-major):");
    for i in m.quotient_basis().into_iter().take(10) {
        println!("    {:?}", m.ambient().rep(i).rows());
    }

    println!("\nn <= 4, d = 3, all primes:");
    for l in (1..=4).flat_map(Partition::all) {
        let dims: Vec<usize> = [FieldPrime::TWO, FieldPrime::THREE, FieldPrime::FIVE]
            .iter()
            .map(|&f| build_dual_weyl(&l, 3, f).map(|m| m.dim()))
            .collect::<specht_gtensor::Result<_>>()?;
        println!("  {l:<10} {dims:?}  hook content {}", hook_content_dim(&l, 3));
    }
    Ok(())
}
