//! Ranks of the Garnir relation families on skew column tabloids.
//!
//! Usage: cargo run --release --example relation_families -- [n_max] [d_max]

use specht_gtensor::garnir::{generate_relation_set, relation_span, relation_span_union, Phi, RelationKind};
use specht_gtensor::tabloids::build_basis;
use specht_gtensor::{FieldPrime, Partition, TabloidKind};

fn main() -> specht_gtensor::Result<()> {
    let mut args = std::env::args().skip(1).map(|s| s.parse::<usize>().ok());
    let n_max = args.next().flatten().unwrap_or(4);
    let d_max = args.next().flatten().unwrap_or(3);
    let f2 = FieldPrime::TWO;
    println!(
        "{:<10} {:>2} {:>7} {:>6} {:>10} {:>9} {:>10}",
        "lambda", "d", "ambient", "basic", "basic+supp", "adjacent", "exhaustive"
    );
    for l in (2..=n_max).flat_map(Partition::all) {
        for d in 1..=d_max {
            let basis = build_basis(&l, d, TabloidKind::SkewColumn(f2));
            let set = |k| generate_relation_set(&basis, f2, k, Phi::default());
            let basic = set(RelationKind::SkewBasicSnake)?;
            let supp = set(RelationKind::SkewSupplementary)?;
            let adj = set(RelationKind::AllAdjacentSnakes)?;
            let exh = if l.n() <= 5 { Some(relation_span(&set(RelationKind::ExhaustiveGarnir)?)?.dim()) } else { None };
            println!(
                "{:<10} {:>2} {:>7} {:>6} {:>10} {:>9} {:>10}",
                l.to_string(),
                d,
                basis.dim(),
                relation_span(&basic)?.dim(),
                relation_span_union(&[&basic, &supp])?.dim(),
                relation_span(&adj)?.dim(),
                exh.map_or("-".into(), |r| r.to_string())
            );
        }
    }
    Ok(())
}
