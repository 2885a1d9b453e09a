mod common;

use specht_gtensor::module_builder::{build_dual_weyl, build_gtensor_specht, u_lambda_weight_table};
use specht_gtensor::tabloids::{apply_q, build_basis, ker_q_generators};
use specht_gtensor::FieldPrime;

use common::partitions_up_to;

const PRIMES: [FieldPrime; 3] = [FieldPrime::TWO, FieldPrime::THREE, FieldPrime::FIVE];

#[test]
fn nabla_dimension_is_semistandard_count() {
    common::nabla_dim_is_ssyt_count(6, 4, &PRIMES).unwrap();
}

#[test]
fn basic_snakes_are_independent() {
    common::basic_snakes_independent(6, 4, &PRIMES).unwrap();
}

#[test]
fn skew_spanning_sets_have_equal_rank() {
    common::skew_rank_equality(4, 3, FieldPrime::TWO).unwrap();
    common::skew_rank_equality(4, 3, FieldPrime::THREE).unwrap();
}

#[test]
fn straightening_exhaustive_small() {
    for p in PRIMES {
        common::straightening_sound(4, 3, p).unwrap();
    }
}

#[test]
fn skew_span_closed_under_transvections() {
    common::skew_span_transvection_closed(4, 3, FieldPrime::TWO).unwrap();
    common::skew_span_transvection_closed(3, 3, FieldPrime::THREE).unwrap();
}

#[test]
fn all_ones_weight_space() {
    common::all_ones_weight_is_syt(5, FieldPrime::TWO).unwrap();
    common::all_ones_weight_is_syt(5, FieldPrime::THREE).unwrap();
}

#[test]
fn restriction_to_fewer_letters() {
    common::restriction_matches(5, 5, FieldPrime::TWO).unwrap();
}

#[test]
fn odd_characteristic_skew_quotient_is_nabla() {
    for l in partitions_up_to(5) {
        for d in 1..=3 {
            for p in [FieldPrime::THREE, FieldPrime::FIVE] {
                let g = build_gtensor_specht(&l, d, p).unwrap();
                let n = build_dual_weyl(&l, d, p).unwrap();
                assert_eq!(g.weight_table(), n.weight_table(), "{l} d={d} p={}", p.p());
            }
        }
    }
}

#[test]
fn kernel_dimension_is_the_difference() {
    for l in partitions_up_to(5) {
        for d in 1..=4 {
            let g = build_gtensor_specht(&l, d, FieldPrime::TWO).unwrap().weight_table();
            let n = build_dual_weyl(&l, d, FieldPrime::TWO).unwrap().weight_table();
            let u = u_lambda_weight_table(&l, d).unwrap();
            for (w, k) in g.iter() {
                assert_eq!(k, n.get(w) + u.get(w), "{l} d={d} weight {w:?}");
            }
            assert_eq!(g.total(), n.total() + u.total(), "{l} d={d}");
        }
    }
}

#[test]
fn q_kills_exactly_the_repeated_entries() {
    for l in partitions_up_to(4) {
        for d in 1..=3 {
            let skew = build_basis(&l, d, specht_gtensor::TabloidKind::SkewColumn(FieldPrime::TWO));
            let alt = build_basis(&l, d, specht_gtensor::TabloidKind::AltColumn);
            let gens = ker_q_generators(&skew).unwrap();
            for g in &gens {
                assert!(apply_q(g, &alt).unwrap().is_zero());
            }
            assert_eq!(skew.dim() - gens.len(), alt.dim(), "{l} d={d}");
        }
    }
}
