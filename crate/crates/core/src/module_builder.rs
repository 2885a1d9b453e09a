//! Quotient modules built from tabloid spaces and Garnir relation spans.
//!
//! * [`build_dual_weyl`]: alternating column tabloids modulo basic snakes.
//! * [`build_gtensor_specht`]: skew column tabloids modulo basic and
//!   supplementary snakes.
//! * [`u_lambda_dim`]: the kernel of the natural surjection between them.

use std::collections::{BTreeMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{col_compare_unchecked, ColOrder, Partition, Tableau, Weight};
use crate::error::{Error, Result};
use crate::garnir::{garnir_relation, generate_relation_set, relation_span_union, GarnirLabel, Phi, RelationKind};
use crate::linalg::{dim_sum_and_intersection, FieldPrime, SpanBuilder, Subspace};
use crate::tabloids::{build_basis, GradedSubspace, TabloidBasis, TabloidKind, TabloidVector};

/// Dimension of each weight space of a module; zero weights are omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct WeightTable(pub BTreeMap<Weight, usize>);

impl WeightTable {
    pub fn get(&self, w: &Weight) -> usize {
        self.0.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.0.values().sum()
    }

    pub fn insert(&mut self, w: Weight, dim: usize) {
        if dim > 0 {
            *self.0.entry(w).or_insert(0) += dim;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, usize)> {
        self.0.iter().map(|(w, &k)| (w, k))
    }

    /// Entries whose weight is a partition (weakly decreasing).
    pub fn dominant(&self) -> WeightTable {
        WeightTable(self.0.iter().filter(|(w, _)| w.is_dominant()).map(|(w, &k)| (w.clone(), k)).collect())
    }
}

impl fmt::Display for WeightTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, k) in self.iter() {
            writeln!(f, "{w}: {k}")?;
        }
        Ok(())
    }
}

/// An ambient tabloid space modulo a weight-graded relation span.
#[derive(Clone, Debug)]
pub struct QuotientModule {
    relations: GradedSubspace,
}

impl QuotientModule {
    pub fn new(relations: GradedSubspace) -> Self {
        Self { relations }
    }

    pub fn ambient(&self) -> &Arc<TabloidBasis> {
        self.relations.basis()
    }

    pub fn relations(&self) -> &GradedSubspace {
        &self.relations
    }

    pub fn field(&self) -> FieldPrime {
        self.relations.field()
    }

    pub fn shape(&self) -> &Partition {
        self.ambient().shape()
    }

    pub fn d(&self) -> usize {
        self.ambient().d()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient().dim()
    }

    pub fn dim(&self) -> usize {
        self.ambient_dim() - self.relations.dim()
    }

    /// Normal form modulo the relations; zero exactly on relation vectors.
    pub fn reduce(&self, v: &TabloidVector) -> Result<TabloidVector> {
        self.relations.reduce(v)
    }

    pub fn is_zero(&self, v: &TabloidVector) -> Result<bool> {
        self.relations.contains(v)
    }

    /// Ambient indices whose images form a basis of the quotient.
    pub fn quotient_basis(&self) -> Vec<usize> {
        let basis = self.ambient();
        let mut out: Vec<usize> = basis
            .blocks()
            .iter()
            .zip(self.relations.blocks())
            .flat_map(|(b, s)| s.non_pivots().into_iter().map(|k| b.members[k]))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn weight_table(&self) -> WeightTable {
        weight_table(self)
    }
}

/// Weight-space dimensions of a quotient module.
pub fn weight_table(m: &QuotientModule) -> WeightTable {
    let mut t = WeightTable::default();
    for (b, s) in m.ambient().blocks().iter().zip(m.relations.blocks()) {
        t.insert(b.weight.clone(), s.quotient_dim());
    }
    t
}

fn check_d(d: usize) -> Result<()> {
    if d == 0 || d > 255 {
        return Err(Error::Unsupported(format!("alphabet size d={d} must be in 1..=255")));
    }
    Ok(())
}

/// `⋀^λ' E` modulo the span of the basic snake relations.
pub fn build_dual_weyl(lambda: &Partition, d: usize, p: FieldPrime) -> Result<QuotientModule> {
    build_dual_weyl_with(lambda, d, p, Phi::default())
}

pub fn build_dual_weyl_with(lambda: &Partition, d: usize, p: FieldPrime, phi: Phi) -> Result<QuotientModule> {
    check_d(d)?;
    let basis = build_basis(lambda, d, TabloidKind::AltColumn);
    let set = generate_relation_set(&basis, p, RelationKind::AltBasicSnake, phi)?;
    Ok(QuotientModule::new(relation_span_union(&[&set])?))
}

/// Span of the basic and supplementary skew snake relations.
pub fn skew_garnir_span(basis: &Arc<TabloidBasis>, p: FieldPrime) -> Result<GradedSubspace> {
    let basic = generate_relation_set(basis, p, RelationKind::SkewBasicSnake, Phi::default())?;
    let supp = generate_relation_set(basis, p, RelationKind::SkewSupplementary, Phi::default())?;
    relation_span_union(&[&basic, &supp])
}

/// `Sk^λ' E` modulo the skew Garnir span.
pub fn build_gtensor_specht(lambda: &Partition, d: usize, p: FieldPrime) -> Result<QuotientModule> {
    check_d(d)?;
    let basis = build_basis(lambda, d, TabloidKind::SkewColumn(p));
    Ok(QuotientModule::new(skew_garnir_span(&basis, p)?))
}

/// Local indices of the repeated-column-entry tabloids in each weight block.
fn ker_q_by_block(basis: &TabloidBasis) -> Vec<Vec<usize>> {
    basis
        .blocks()
        .iter()
        .map(|b| {
            b.members
                .iter()
                .enumerate()
                .filter(|(_, &i)| basis.rep(i).has_repeated_column_entry())
                .map(|(k, _)| k)
                .collect()
        })
        .collect()
}

/// Weight table of `U^λ = ker q / (ker q ∩ skGR)` in characteristic 2.
pub fn u_lambda_weight_table(lambda: &Partition, d: usize) -> Result<WeightTable> {
    check_d(d)?;
    let f2 = FieldPrime::TWO;
    let basis = build_basis(lambda, d, TabloidKind::SkewColumn(f2));
    let kq = ker_q_by_block(&basis);
    if kq.iter().all(Vec::is_empty) {
        return Ok(WeightTable::default());
    }
    let rel = skew_garnir_span(&basis, f2)?;
    let dims = kq
        .par_iter()
        .enumerate()
        .map(|(b, ks)| -> Result<(usize, usize)> {
            if ks.is_empty() {
                return Ok((b, 0));
            }
            let size = basis.blocks()[b].members.len();
            let k = Subspace::coordinate(f2, size, ks);
            let (_, inter) = dim_sum_and_intersection(&k, rel.block(b))?;
            Ok((b, k.dim() - inter))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut t = WeightTable::default();
    for (b, k) in dims {
        t.insert(basis.blocks()[b].weight.clone(), k);
    }
    Ok(t)
}

/// `dim U^λ` at alphabet size `d`, in characteristic 2.
pub fn u_lambda_dim(lambda: &Partition, d: usize) -> Result<usize> {
    Ok(u_lambda_weight_table(lambda, d)?.total())
}

/// Whether `ker q` lies in the skew Garnir span, i.e. whether the natural
/// surjection from the skew quotient onto the dual Weyl module is injective.
pub fn verify_iso(lambda: &Partition, d: usize, p: FieldPrime) -> Result<bool> {
    check_d(d)?;
    let basis = build_basis(lambda, d, TabloidKind::SkewColumn(p));
    let kq = ker_q_by_block(&basis);
    if kq.iter().all(Vec::is_empty) {
        return Ok(true);
    }
    let rel = skew_garnir_span(&basis, p)?;
    kq.par_iter()
        .enumerate()
        .try_fold(
            || true,
            |acc, (b, ks)| -> Result<bool> {
                if !acc {
                    return Ok(false);
                }
                let s = rel.block(b);
                let size = basis.blocks()[b].members.len();
                for &k in ks {
                    if !s.contains(&crate::linalg::FpVector::unit(p, size, k))? {
                        return Ok(false);
                    }
                }
                Ok(true)
            },
        )
        .try_reduce(|| true, |a, b| Ok(a && b))
}

/// Straightening in `⋀^λ' E` modulo the basic snake relations.
#[derive(Debug)]
pub struct Straightener {
    basis: Arc<TabloidBasis>,
    field: FieldPrime,
    phi: Phi,
}

/// Safety cap on straightening steps.
const MAX_STRAIGHTEN_STEPS: usize = 1_000_000;

impl Straightener {
    pub fn new(lambda: &Partition, d: usize, p: FieldPrime) -> Result<Self> {
        check_d(d)?;
        Ok(Self { basis: build_basis(lambda, d, TabloidKind::AltColumn), field: p, phi: Phi::default() })
    }

    pub fn with_phi(mut self, phi: Phi) -> Self {
        self.phi = phi;
        self
    }

    pub fn basis(&self) -> &Arc<TabloidBasis> {
        &self.basis
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    /// Straightens `⟨t⟩`.
    pub fn straighten(&self, t: &Tableau) -> Result<TabloidVector> {
        self.straighten_vector(&TabloidVector::of_tableau(&self.basis, self.field, t)?)
    }

    /// Rewrites `v` modulo basic snakes until it is supported on semistandard tableaux.
    ///
    /// At each step the column-order-greatest non-semistandard term `⟨u⟩` is
    /// cancelled with the snake relation at `Φ(u)`.
    pub fn straighten_vector(&self, v: &TabloidVector) -> Result<TabloidVector> {
        if !Arc::ptr_eq(v.basis(), &self.basis) {
            return Err(Error::Unsupported("vector over a different basis".into()));
        }
        let mut v = v.clone();
        for _ in 0..MAX_STRAIGHTEN_STEPS {
            let mut lead: Option<usize> = None;
            for (i, _) in v.terms() {
                let t = self.basis.rep(i);
                if t.is_row_semistandard() {
                    continue;
                }
                lead = match lead {
                    Some(j) if col_compare_unchecked(t, self.basis.rep(j)) != ColOrder::Greater => Some(j),
                    _ => Some(i),
                };
            }
            let Some(i) = lead else {
                return Ok(v);
            };
            let u = self.basis.rep(i);
            let (r, c) = self.phi.choose(u).expect("non-semistandard column-standard tableau has a row descent");
            let rel = garnir_relation(&GarnirLabel::snake(u.clone(), r, c)?, &self.basis, self.field)?;
            let lead_coeff = rel.coeff(i);
            if lead_coeff == 0 {
                return Err(Error::Unsupported(format!("snake relation at {u} does not contain it")));
            }
            let scale = self.field.mul(v.coeff(i), self.field.inv(lead_coeff));
            v.add_scaled(&rel, self.field.neg(scale));
        }
        Err(Error::Unsupported("straightening did not terminate".into()))
    }
}

/// Straightens `⟨t⟩` in `⋀^λ' E` over GF(p) with entries in `1..=d`.
pub fn straighten(t: &Tableau, d: usize, p: FieldPrime) -> Result<TabloidVector> {
    Straightener::new(t.shape(), d, p)?.straighten(t)
}

/// Dimension of the skew quotient at `d` restricted to entries `<= d_small`,
/// paired with the dimension of a direct build at `d_small`.
pub fn restrict_entries(lambda: &Partition, d: usize, d_small: usize, p: FieldPrime) -> Result<(usize, usize)> {
    if d_small == 0 || d_small > d {
        return Err(Error::Unsupported(format!("need 1 <= d'={d_small} <= d={d}")));
    }
    let big = build_gtensor_specht(lambda, d, p)?;
    let restricted = weight_table(&big).iter().filter(|(w, _)| w.max_letter() <= d_small).map(|(_, k)| k).sum();
    let direct = build_gtensor_specht(lambda, d_small, p)?.dim();
    Ok((restricted, direct))
}

/// Replaces occurrences of `source` by `target` in every term, summing over
/// the chosen subsets of occurrences whose size satisfies `keep`.
fn substitute(v: &TabloidVector, source: u8, target: u8, keep: impl Fn(usize) -> bool) -> Result<TabloidVector> {
    let basis = v.basis();
    let d = basis.d();
    for x in [source, target] {
        if x == 0 || x as usize > d {
            return Err(Error::LetterOutOfRange { letter: x as usize, d });
        }
    }
    if source == target {
        return Err(Error::Unsupported("source and target letters must differ".into()));
    }
    let mut out = TabloidVector::zero(basis, v.field());
    for (i, c) in v.terms() {
        let t = basis.rep(i);
        let pos: Vec<usize> = t.entries().iter().enumerate().filter(|(_, &e)| e == source).map(|(k, _)| k).collect();
        let mut scratch = t.clone();
        for mask in 0u32..(1u32 << pos.len()) {
            if !keep(mask.count_ones() as usize) {
                continue;
            }
            scratch.clone_from(t);
            for (b, &k) in pos.iter().enumerate() {
                if mask & (1 << b) != 0 {
                    scratch.entries_mut()[k] = target;
                }
            }
            out.add_tableau_in_place(&mut scratch, c as i64)?;
        }
    }
    Ok(out)
}

/// The substitution `x_source ↦ x_source + x_target`, expanded multilinearly.
pub fn apply_transvection(v: &TabloidVector, source: u8, target: u8) -> Result<TabloidVector> {
    substitute(v, source, target, |_| true)
}

/// Divided power `F^{(k)}`: replace exactly `k` occurrences of `source` by `target`.
pub fn apply_divided_power(v: &TabloidVector, source: u8, target: u8, k: usize) -> Result<TabloidVector> {
    substitute(v, source, target, |s| s == k)
}

/// Weight table of the simple module `L(λ)`, computed as the span of the
/// orbit of the highest weight vector of the dual Weyl module under the
/// divided-power lowering operators.
pub fn simple_module_weight_table(lambda: &Partition, d: usize, p: FieldPrime) -> Result<WeightTable> {
    let nabla = build_dual_weyl(lambda, d, p)?;
    if lambda.len() > d {
        return Ok(WeightTable::default());
    }
    let basis = Arc::clone(nabla.ambient());
    let rows: Vec<Vec<u8>> = (1..=lambda.len()).map(|i| vec![i as u8; lambda.part(i)]).collect();
    let top = TabloidVector::of_tableau(&basis, p, &Tableau::from_rows(&rows)?)?;
    let mut builders: Vec<SpanBuilder> = nabla.relations().blocks().iter().map(SpanBuilder::from_subspace).collect();
    let base: Vec<usize> = builders.iter().map(SpanBuilder::rank).collect();
    let mut queue = VecDeque::new();
    let b0 = top.homogeneous_block().expect("highest weight vector is homogeneous");
    if builders[b0].push(top.block_coords(b0))? {
        queue.push_back(top);
    }
    while let Some(v) = queue.pop_front() {
        let w = basis.blocks()[v.homogeneous_block().expect("queued vectors are nonzero")].weight.clone();
        for a in 1..=d {
            for b in a + 1..=d {
                for k in 1..=w.mult(a) {
                    let img = apply_divided_power(&v, a as u8, b as u8, k)?;
                    let img = nabla.reduce(&img)?;
                    let Some(blk) = img.homogeneous_block() else { continue };
                    if builders[blk].push(img.block_coords(blk))? {
                        queue.push_back(img);
                    }
                }
            }
        }
    }
    let mut t = WeightTable::default();
    for (blk, sb) in builders.iter().enumerate() {
        t.insert(basis.blocks()[blk].weight.clone(), sb.rank() - base[blk]);
    }
    Ok(t)
}
