#![allow(dead_code)]

use rayon::prelude::*;
use specht_gtensor::combinatorics::{count_syt, enumerate_tableaux, hook_content_dim};
use specht_gtensor::garnir::{generate_relation_set, relation_span, relation_span_union, Phi, RelationKind};
use specht_gtensor::module_builder::{
    apply_transvection, build_dual_weyl, build_gtensor_specht, restrict_entries, skew_garnir_span, Straightener,
};
use specht_gtensor::tabloids::{build_basis, TabloidVector};
use specht_gtensor::{FieldPrime, Partition, TableauClass, TabloidKind, Weight};

pub type Check = Result<(), String>;

pub fn partitions_up_to(n_max: usize) -> Vec<Partition> {
    (1..=n_max).flat_map(Partition::all).collect()
}

fn jobs(n_max: usize, d_max: usize, primes: &[FieldPrime]) -> Vec<(Partition, usize, FieldPrime)> {
    let mut out = Vec::new();
    for l in partitions_up_to(n_max) {
        for d in 1..=d_max {
            for &p in primes {
                out.push((l.clone(), d, p));
            }
        }
    }
    out
}

fn first_error(results: Vec<Check>) -> Check {
    results.into_iter().find(Result::is_err).unwrap_or(Ok(()))
}

/// `dim ∇^λ` equals the hook-content count and the brute-force semistandard count.
pub fn nabla_dim_is_ssyt_count(n_max: usize, d_max: usize, primes: &[FieldPrime]) -> Check {
    first_error(
        jobs(n_max, d_max, primes)
            .par_iter()
            .map(|(l, d, p)| {
                let got = build_dual_weyl(l, *d, *p).map_err(|e| e.to_string())?.dim() as u64;
                let hc = hook_content_dim(l, *d);
                let brute = enumerate_tableaux(l, *d, TableauClass::Semistandard).len() as u64;
                if got == hc && hc == brute {
                    Ok(())
                } else {
                    Err(format!("{l} d={d} p={}: dim {got}, hook-content {hc}, count {brute}", p.p()))
                }
            })
            .collect(),
    )
}

/// Basic snakes are nonzero, independent, and their number is the ambient dimension minus the semistandard count.
pub fn basic_snakes_independent(n_max: usize, d_max: usize, primes: &[FieldPrime]) -> Check {
    first_error(
        jobs(n_max, d_max, primes)
            .par_iter()
            .map(|(l, d, p)| {
                let basis = build_basis(l, *d, TabloidKind::AltColumn);
                let set = generate_relation_set(&basis, *p, RelationKind::AltBasicSnake, Phi::default())
                    .map_err(|e| e.to_string())?;
                let rank = relation_span(&set).map_err(|e| e.to_string())?.dim();
                let kernel = basis.dim() as u64 - hook_content_dim(l, *d);
                if rank == set.len() && rank as u64 == kernel {
                    Ok(())
                } else {
                    Err(format!("{l} d={d} p={}: {} snakes, rank {rank}, kernel {kernel}", p.p(), set.len()))
                }
            })
            .collect(),
    )
}

/// Skew spanning sets agree in rank. Returns the number of cases where supplementary snakes add rank.
pub fn skew_rank_equality(n_max: usize, d_max: usize, p: FieldPrime) -> Result<usize, String> {
    let results: Vec<Result<bool, String>> = jobs(n_max, d_max, &[p])
        .par_iter()
        .map(|(l, d, p)| {
            let e = |e: specht_gtensor::Error| e.to_string();
            let basis = build_basis(l, *d, TabloidKind::SkewColumn(*p));
            let basic = generate_relation_set(&basis, *p, RelationKind::SkewBasicSnake, Phi::default()).map_err(e)?;
            let supp = generate_relation_set(&basis, *p, RelationKind::SkewSupplementary, Phi::default()).map_err(e)?;
            let adj = generate_relation_set(&basis, *p, RelationKind::AllAdjacentSnakes, Phi::default()).map_err(e)?;
            let exh = generate_relation_set(&basis, *p, RelationKind::ExhaustiveGarnir, Phi::default()).map_err(e)?;
            let r_basic = relation_span(&basic).map_err(e)?.dim();
            let r_union = relation_span_union(&[&basic, &supp]).map_err(e)?.dim();
            let r_adj = relation_span(&adj).map_err(e)?.dim();
            let r_exh = relation_span(&exh).map_err(e)?.dim();
            if r_union == r_adj && r_adj == r_exh {
                Ok(r_union > r_basic)
            } else {
                Err(format!("{l} d={d}: basic∪supp {r_union}, adjacent {r_adj}, exhaustive {r_exh}"))
            }
        })
        .collect();
    let mut adds = 0;
    for r in results {
        adds += usize::from(r?);
    }
    Ok(adds)
}

/// Straightening lands on semistandard terms, is congruent to the input modulo GR, and is idempotent.
pub fn straightening_sound(n_max: usize, d_max: usize, p: FieldPrime) -> Check {
    first_error(
        jobs(n_max, d_max, &[p])
            .par_iter()
            .map(|(l, d, p)| {
                let e = |e: specht_gtensor::Error| e.to_string();
                let s = Straightener::new(l, *d, *p).map_err(e)?;
                let set =
                    generate_relation_set(s.basis(), *p, RelationKind::AltBasicSnake, Phi::default()).map_err(e)?;
                let gr = relation_span(&set).map_err(e)?;
                for t in enumerate_tableaux(l, *d, TableauClass::All) {
                    let v = TabloidVector::of_tableau(s.basis(), *p, &t).map_err(e)?;
                    let w = s.straighten(&t).map_err(e)?;
                    if w.terms().any(|(i, _)| !s.basis().rep(i).is_row_semistandard()) {
                        return Err(format!("{t}: result has a non-semistandard term"));
                    }
                    if !gr.contains(&v.sub(&w)).map_err(e)? {
                        return Err(format!("{t}: result not congruent modulo GR"));
                    }
                    if s.straighten_vector(&w).map_err(e)? != w {
                        return Err(format!("{t}: straightening is not idempotent"));
                    }
                }
                Ok(())
            })
            .collect(),
    )
}

/// Every skew Garnir generator stays in skGR under every transvection.
pub fn skew_span_transvection_closed(n_max: usize, d_max: usize, p: FieldPrime) -> Check {
    first_error(
        jobs(n_max, d_max.max(2), &[p])
            .into_iter()
            .filter(|(_, d, _)| *d >= 2)
            .collect::<Vec<_>>()
            .par_iter()
            .map(|(l, d, p)| {
                let e = |e: specht_gtensor::Error| e.to_string();
                let basis = build_basis(l, *d, TabloidKind::SkewColumn(*p));
                let span = skew_garnir_span(&basis, *p).map_err(e)?;
                let basic =
                    generate_relation_set(&basis, *p, RelationKind::SkewBasicSnake, Phi::default()).map_err(e)?;
                let supp =
                    generate_relation_set(&basis, *p, RelationKind::SkewSupplementary, Phi::default()).map_err(e)?;
                for r in basic.relations.iter().chain(&supp.relations) {
                    for s in 1..=*d as u8 {
                        for t in (1..=*d as u8).filter(|&t| t != s) {
                            if !span.contains(&apply_transvection(r, s, t).map_err(e)?).map_err(e)? {
                                return Err(format!("{l} d={d}: transvection {s}->{t} leaves skGR"));
                            }
                        }
                    }
                }
                Ok(())
            })
            .collect(),
    )
}

/// The all-ones weight space of `G⊗(S^λ)` at `d = n` has dimension `#SYT(λ)`.
pub fn all_ones_weight_is_syt(n_max: usize, p: FieldPrime) -> Check {
    first_error(
        partitions_up_to(n_max)
            .par_iter()
            .map(|l| {
                let n = l.n();
                let m = build_gtensor_specht(l, n, p).map_err(|e| e.to_string())?;
                let got = m.weight_table().get(&Weight(vec![1; n])) as u64;
                if got == count_syt(l) {
                    Ok(())
                } else {
                    Err(format!("{l}: all-ones weight {got}, #SYT {}", count_syt(l)))
                }
            })
            .collect(),
    )
}

/// Truncating the weights of the `d`-module to letters `<= d'` matches a direct build at `d'`.
pub fn restriction_matches(n_max: usize, d: usize, p: FieldPrime) -> Check {
    let cases: Vec<(Partition, usize)> =
        partitions_up_to(n_max).into_iter().flat_map(|l| (1..d).map(move |ds| (l.clone(), ds))).collect();
    first_error(
        cases
            .par_iter()
            .map(|(l, ds)| {
                let (restricted, direct) = restrict_entries(l, d, *ds, p).map_err(|e| e.to_string())?;
                if restricted == direct {
                    Ok(())
                } else {
                    Err(format!("{l} d={d} -> {ds}: restricted {restricted}, direct {direct}"))
                }
            })
            .collect(),
    )
}
