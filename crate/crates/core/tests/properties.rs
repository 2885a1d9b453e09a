use proptest::prelude::*;

use specht_gtensor::garnir::{generate_relation_set, relation_span, Phi, RelationKind};
use specht_gtensor::linalg::{dim_sum_and_intersection, span};
use specht_gtensor::module_builder::Straightener;
use specht_gtensor::tabloids::{canonicalize, TabloidVector};
use specht_gtensor::{FieldPrime, FpVector, MatrixGFp, Partition, Tableau, TabloidKind};

fn field() -> impl Strategy<Value = FieldPrime> {
    prop_oneof![Just(FieldPrime::TWO), Just(FieldPrime::THREE), Just(FieldPrime::FIVE)]
}

/// A field, a width, and up to two families of raw coordinate rows.
fn two_families() -> impl Strategy<Value = (FieldPrime, usize, Vec<Vec<i64>>, Vec<Vec<i64>>)> {
    (field(), 1usize..7).prop_flat_map(|(p, n)| {
        let row = prop::collection::vec(0i64..5, n);
        (Just(p), Just(n), prop::collection::vec(row.clone(), 0..7), prop::collection::vec(row, 0..7))
    })
}

fn to_vectors(p: FieldPrime, raw: &[Vec<i64>]) -> Vec<FpVector> {
    raw.iter().map(|r| FpVector::from_coords(p, r)).collect()
}

fn shape() -> impl Strategy<Value = Partition> {
    (1usize..=5).prop_flat_map(|n| {
        let all = Partition::all(n);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

fn tableau(max_d: usize) -> impl Strategy<Value = (Tableau, usize)> {
    (shape(), 1..=max_d).prop_flat_map(|(l, d)| {
        prop::collection::vec(1..=d as u8, l.n())
            .prop_map(move |e| (Tableau::from_column_major(l.clone(), e).expect("sized"), d))
    })
}

proptest! {
    #[test]
    fn grassmann_identity((p, n, a, b) in two_families()) {
        let s = span(&to_vectors(p, &a), n, p).unwrap();
        let t = span(&to_vectors(p, &b), n, p).unwrap();
        let (sum, inter) = dim_sum_and_intersection(&s, &t).unwrap();
        prop_assert_eq!(sum + inter, s.dim() + t.dim());
        prop_assert!(s.intersection(&t).unwrap().dim() == inter);
        prop_assert!(s.sum(&t).unwrap().contains_subspace(&s).unwrap());
    }

    #[test]
    fn row_rank_is_column_rank((p, n, a, _b) in two_families()) {
        prop_assume!(!a.is_empty());
        let m = MatrixGFp::from_coords(p, &a).unwrap();
        prop_assert_eq!(m.rank(), m.transpose().rank());
        let ker = m.kernel();
        prop_assert_eq!(ker.len(), n - m.rank());
        for x in ker {
            prop_assert!(m.apply(&x).unwrap().is_zero());
        }
    }

    #[test]
    fn span_ignores_order((p, n, a, _b) in two_families(), seed in any::<u64>()) {
        let mut v = to_vectors(p, &a);
        let s = span(&v, n, p).unwrap();
        let len = v.len();
        if len > 1 {
            v.rotate_left((seed as usize) % len);
            v.reverse();
        }
        let t = span(&v, n, p).unwrap();
        prop_assert_eq!(s.dim(), t.dim());
        prop_assert!(s.contains_subspace(&t).unwrap() && t.contains_subspace(&s).unwrap());
        // Reduced echelon forms are unique.
        prop_assert_eq!(s.basis(), t.basis());
    }

    #[test]
    fn canonicalization_is_idempotent((t, _d) in tableau(4), k in 0usize..4) {
        let kind = [TabloidKind::Row, TabloidKind::AltColumn, TabloidKind::SkewColumn(FieldPrime::TWO),
            TabloidKind::SkewColumn(FieldPrime::THREE)][k];
        let c = canonicalize(&t, kind);
        let again = canonicalize(&c.rep, kind);
        prop_assert_eq!(&again.rep, &c.rep);
        prop_assert_eq!(again.is_zero, c.is_zero);
        if !c.is_zero {
            prop_assert_eq!(again.sign, 1);
            prop_assert!(c.rep.satisfies(kind.representative_class()));
        }
        prop_assert_eq!(c.is_zero, kind == TabloidKind::AltColumn && t.has_repeated_column_entry()
            || kind == TabloidKind::SkewColumn(FieldPrime::THREE) && t.has_repeated_column_entry());
    }

    #[test]
    fn straightening_is_congruent_and_idempotent((t, d) in tableau(4), p in field()) {
        let s = Straightener::new(t.shape(), d, p).unwrap();
        let set = generate_relation_set(s.basis(), p, RelationKind::AltBasicSnake, Phi::default()).unwrap();
        let gr = relation_span(&set).unwrap();
        let v = TabloidVector::of_tableau(s.basis(), p, &t).unwrap();
        let w = s.straighten(&t).unwrap();
        prop_assert!(w.terms().all(|(i, _)| s.basis().rep(i).is_row_semistandard()));
        prop_assert!(gr.contains(&v.sub(&w)).unwrap());
        prop_assert_eq!(s.straighten_vector(&w).unwrap(), w);
    }

    #[test]
    fn phi_policies_agree_modulo_relations((t, d) in tableau(3), p in field()) {
        let a = Straightener::new(t.shape(), d, p).unwrap();
        let b = Straightener::new(t.shape(), d, p).unwrap().with_phi(Phi::LeastColumnLeastRow);
        let wa = a.straighten(&t).unwrap();
        let wb = b.straighten(&t).unwrap();
        let coords = |w: &TabloidVector| w.terms().map(|(i, c)| (w.basis().rep(i).clone(), c)).collect::<Vec<_>>();
        // Semistandard tabloids are a basis of the quotient, so the normal form is unique.
        prop_assert_eq!(coords(&wa), coords(&wb));
    }
}
