//! Garnir relations on column tabloids.
//!
//! A label `(t, A, B)` picks a set `A` of boxes in column `j` and a set `B`
//! in a later column `j'` with `|A| + |B| > λ'_j`. The relation is the signed
//! sum of `⟨t·τ⟩` over a transversal `τ` of `S_A × S_B` in `S_{A ∪ B}`.
//! Snakes are the labels with `A` the bottom of column `j` from row `i` and
//! `B` the top of column `j + 1` down to row `i`.

use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::combinatorics::{enumerate_tableaux, Tableau, TableauClass};
use crate::error::{Error, Result};
use crate::linalg::FieldPrime;
use crate::tabloids::{GradedSubspace, TabloidBasis, TabloidKind, TabloidVector};

/// A validated Garnir label.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GarnirLabel {
    t: Tableau,
    left_col: usize,
    a_rows: Vec<usize>,
    right_col: usize,
    b_rows: Vec<usize>,
}

impl GarnirLabel {
    /// General label; rows are 1-based and are sorted and deduplicated on input.
    pub fn new(t: Tableau, left_col: usize, a_rows: Vec<usize>, right_col: usize, b_rows: Vec<usize>) -> Result<Self> {
        let shape = t.shape().clone();
        let mut a_rows = a_rows;
        let mut b_rows = b_rows;
        a_rows.sort_unstable();
        b_rows.sort_unstable();
        let (na, nb) = (a_rows.len(), b_rows.len());
        a_rows.dedup();
        b_rows.dedup();
        if a_rows.len() != na || b_rows.len() != nb {
            return Err(Error::InvalidLabel("repeated row in A or B".into()));
        }
        if left_col == 0 || left_col >= right_col || right_col > shape.part(1) {
            return Err(Error::InvalidLabel(format!(
                "need 1 <= j < j' <= {}, got j={left_col}, j'={right_col}",
                shape.part(1)
            )));
        }
        let (ca, cb) = (shape.col_len(left_col), shape.col_len(right_col));
        if a_rows.iter().any(|&r| r == 0 || r > ca) || b_rows.iter().any(|&r| r == 0 || r > cb) {
            return Err(Error::InvalidLabel("row outside its column".into()));
        }
        if a_rows.len() + b_rows.len() <= ca {
            return Err(Error::InvalidLabel(format!(
                "|A| + |B| = {} must exceed the column length {ca}",
                a_rows.len() + b_rows.len()
            )));
        }
        Ok(Self { t, left_col, a_rows, right_col, b_rows })
    }

    /// The snake at `(i, j)`: `A = {(x, j) : x >= i}`, `B = {(x, j+1) : x <= i}`.
    pub fn snake(t: Tableau, i: usize, j: usize) -> Result<Self> {
        let shape = t.shape();
        if j == 0 || j >= shape.part(1) {
            return Err(Error::InvalidLabel(format!("snake column {j} has no right neighbour")));
        }
        if i == 0 || i > shape.col_len(j + 1) {
            return Err(Error::InvalidLabel(format!("snake row {i} outside column {}", j + 1)));
        }
        let a = (i..=shape.col_len(j)).collect();
        let b = (1..=i).collect();
        Self::new(t, j, a, j + 1, b)
    }

    pub fn tableau(&self) -> &Tableau {
        &self.t
    }

    pub fn columns(&self) -> (usize, usize) {
        (self.left_col, self.right_col)
    }

    pub fn a_rows(&self) -> &[usize] {
        &self.a_rows
    }

    pub fn b_rows(&self) -> &[usize] {
        &self.b_rows
    }

    /// Storage positions of `A ++ B` in the tableau.
    fn positions(&self) -> Vec<usize> {
        let a = self.a_rows.iter().map(|&r| self.t.box_index(r, self.left_col));
        let b = self.b_rows.iter().map(|&r| self.t.box_index(r, self.right_col));
        a.chain(b).collect()
    }
}

impl fmt::Display for GarnirLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, A=col {} rows {:?}, B=col {} rows {:?})",
            self.t, self.left_col, self.a_rows, self.right_col, self.b_rows
        )
    }
}

/// Which box a non-row-semistandard tableau straightens at.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Phi {
    /// Least column, then greatest row, with `t(i, j) > t(i, j + 1)`.
    #[default]
    LeastColumnGreatestRow,
    LeastColumnLeastRow,
    GreatestColumnGreatestRow,
}

impl Phi {
    /// A row descent `(i, j)` of `t`, or `None` if `t` is row-semistandard.
    pub fn choose(self, t: &Tableau) -> Option<(usize, usize)> {
        let shape = t.shape();
        let descents = |j: usize| (1..=shape.col_len(j + 1)).filter(move |&i| t.get(i, j) > t.get(i, j + 1));
        let cols: Vec<usize> = match self {
            Phi::GreatestColumnGreatestRow => (1..shape.part(1)).rev().collect(),
            _ => (1..shape.part(1)).collect(),
        };
        for j in cols {
            let pick = match self {
                Phi::LeastColumnLeastRow => descents(j).next(),
                _ => descents(j).next_back(),
            };
            if let Some(i) = pick {
                return Some((i, j));
            }
        }
        None
    }
}

/// Visits every `k`-subset of `0..m` as a bitmask with the sign
/// `(-1)^{#(x in X, y not in X, y < x)}` of the shuffle that moves it to the front.
fn for_each_shuffle(m: usize, k: usize, mut f: impl FnMut(u32, i8)) {
    for mask in 0u32..(1u32 << m) {
        if mask.count_ones() as usize != k {
            continue;
        }
        let mut inversions = 0;
        let mut outside_before = 0;
        for pos in 0..m {
            if mask & (1 << pos) != 0 {
                inversions += outside_before;
            } else {
                outside_before += 1;
            }
        }
        f(mask, if inversions % 2 == 0 { 1 } else { -1 });
    }
}

fn check_column_basis(basis: &TabloidBasis, field: FieldPrime) -> Result<()> {
    match basis.kind() {
        TabloidKind::Row => Err(Error::Unsupported("Garnir relations live in column tabloid spaces".into())),
        TabloidKind::SkewColumn(p) if p != field => {
            Err(Error::Unsupported(format!("skew tabloids over GF({}) used with GF({})", p.p(), field.p())))
        }
        _ => Ok(()),
    }
}

/// `R_(t,A,B)` over the canonical order-preserving transversal.
pub fn garnir_relation(label: &GarnirLabel, basis: &Arc<TabloidBasis>, field: FieldPrime) -> Result<TabloidVector> {
    check_column_basis(basis, field)?;
    let pos = label.positions();
    let na = label.a_rows.len();
    let values: Vec<u8> = pos.iter().map(|&p| label.t.entries()[p]).collect();
    let mut out = TabloidVector::zero(basis, field);
    let mut scratch = label.t.clone();
    let mut err = None;
    for_each_shuffle(pos.len(), na, |mask, sign| {
        if err.is_some() {
            return;
        }
        scratch.clone_from(&label.t);
        let (mut ia, mut ib) = (0, na);
        let e = scratch.entries_mut();
        for (k, &v) in values.iter().enumerate() {
            if mask & (1 << k) != 0 {
                e[pos[ia]] = v;
                ia += 1;
            } else {
                e[pos[ib]] = v;
                ib += 1;
            }
        }
        if let Err(x) = out.add_tableau_in_place(&mut scratch, sign as i64) {
            err = Some(x);
        }
    });
    match err {
        Some(e) => Err(e),
        None => Ok(out),
    }
}

/// `R_(t,A,B)` over an explicit transversal.
///
/// Each permutation `σ` of `0..|A|+|B|` places the content of position `σ[k]`
/// of `A ++ B` at position `k` and contributes with its sign. The caller is
/// responsible for supplying one element from each coset of `S_A × S_B`.
pub fn garnir_relation_with_transversal(
    label: &GarnirLabel,
    basis: &Arc<TabloidBasis>,
    field: FieldPrime,
    transversal: &[Vec<usize>],
) -> Result<TabloidVector> {
    check_column_basis(basis, field)?;
    let pos = label.positions();
    let m = pos.len();
    let mut out = TabloidVector::zero(basis, field);
    for sigma in transversal {
        let mut seen = vec![false; m];
        if sigma.len() != m || sigma.iter().any(|&s| s >= m || std::mem::replace(&mut seen[s], true)) {
            return Err(Error::InvalidLabel(format!("{sigma:?} is not a permutation of 0..{m}")));
        }
        let mut t = label.t.clone();
        for k in 0..m {
            t.entries_mut()[pos[k]] = label.t.entries()[pos[sigma[k]]];
        }
        out.add_tableau_in_place(&mut t, permutation_sign(sigma) as i64)?;
    }
    Ok(out)
}

/// The canonical transversal as explicit permutations, in the order used by [`garnir_relation`].
pub fn canonical_transversal(na: usize, nb: usize) -> Vec<Vec<usize>> {
    let m = na + nb;
    let mut out = Vec::new();
    for_each_shuffle(m, na, |mask, _| {
        let inside = (0..m).filter(|k| mask & (1 << k) != 0);
        let outside = (0..m).filter(|k| mask & (1 << k) == 0);
        out.push(inside.chain(outside).collect());
    });
    out
}

pub fn permutation_sign(sigma: &[usize]) -> i8 {
    let mut seen = vec![false; sigma.len()];
    let mut sign = 1;
    for start in 0..sigma.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut k = start;
        while !seen[k] {
            seen[k] = true;
            k = sigma[k];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Snake relation `R(t, i, j)`.
pub fn snake_relation(
    t: &Tableau,
    i: usize,
    j: usize,
    basis: &Arc<TabloidBasis>,
    field: FieldPrime,
) -> Result<TabloidVector> {
    garnir_relation(&GarnirLabel::snake(t.clone(), i, j)?, basis, field)
}

/// Families of Garnir relations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationKind {
    /// `R(t, Φ(t))` for column-standard `t` that are not row-semistandard.
    AltBasicSnake,
    /// `R(t, Φ(t))` for column-semistandard `t` that are not row-semistandard.
    SkewBasicSnake,
    /// `R(t, i, j)` for row-and-column-semistandard `t` with `t(i, j) = t(i, j + 1)`.
    SkewSupplementary,
    /// Every snake on every canonical representative.
    AllAdjacentSnakes,
    /// Every label on every filling and every pair of columns; `n <= 5` only.
    ExhaustiveGarnir,
}

/// Upper bound on `n` for [`RelationKind::ExhaustiveGarnir`].
pub const EXHAUSTIVE_MAX_N: usize = 5;

/// A generated family of relations with their labels.
#[derive(Clone, Debug)]
pub struct RelationSet {
    pub kind: RelationKind,
    pub basis: Arc<TabloidBasis>,
    pub field: FieldPrime,
    pub labels: Vec<GarnirLabel>,
    pub relations: Vec<TabloidVector>,
}

impl RelationSet {
    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }
}

fn labels_for(basis: &TabloidBasis, kind: RelationKind, phi: Phi) -> Result<Vec<GarnirLabel>> {
    let shape = basis.shape();
    let width = shape.part(1);
    let skew = matches!(basis.kind(), TabloidKind::SkewColumn(_));
    let need = |want_skew: bool| -> Result<()> {
        if want_skew != skew {
            return Err(Error::Unsupported(format!("{kind:?} relations do not apply to {}", basis.kind())));
        }
        Ok(())
    };
    let mut labels = Vec::new();
    match kind {
        RelationKind::AltBasicSnake | RelationKind::SkewBasicSnake => {
            need(kind == RelationKind::SkewBasicSnake)?;
            for t in basis.reps() {
                if let Some((i, j)) = phi.choose(t) {
                    labels.push(GarnirLabel::snake(t.clone(), i, j)?);
                }
            }
        }
        RelationKind::SkewSupplementary => {
            need(true)?;
            for t in basis.reps().iter().filter(|t| t.is_row_semistandard()) {
                for j in 1..width {
                    for i in 1..=shape.col_len(j + 1) {
                        if t.get(i, j) == t.get(i, j + 1) {
                            labels.push(GarnirLabel::snake(t.clone(), i, j)?);
                        }
                    }
                }
            }
        }
        RelationKind::AllAdjacentSnakes => {
            for t in basis.reps() {
                for j in 1..width {
                    for i in 1..=shape.col_len(j + 1) {
                        labels.push(GarnirLabel::snake(t.clone(), i, j)?);
                    }
                }
            }
        }
        RelationKind::ExhaustiveGarnir => {
            if shape.n() > EXHAUSTIVE_MAX_N {
                return Err(Error::Unsupported(format!(
                    "exhaustive Garnir relations are limited to n <= {EXHAUSTIVE_MAX_N}"
                )));
            }
            let all = enumerate_tableaux(shape, basis.d(), TableauClass::All);
            for j in 1..width {
                for j2 in j + 1..=width {
                    let (ca, cb) = (shape.col_len(j), shape.col_len(j2));
                    for amask in 1u32..(1 << ca) {
                        for bmask in 1u32..(1 << cb) {
                            if (amask.count_ones() + bmask.count_ones()) as usize <= ca {
                                continue;
                            }
                            let a: Vec<usize> = (0..ca).filter(|k| amask & (1 << k) != 0).map(|k| k + 1).collect();
                            let b: Vec<usize> = (0..cb).filter(|k| bmask & (1 << k) != 0).map(|k| k + 1).collect();
                            for t in &all {
                                labels.push(GarnirLabel::new(t.clone(), j, a.clone(), j2, b.clone())?);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(labels)
}

/// Generates the relations of `kind` on `basis`. Zero relations are kept.
pub fn generate_relation_set(
    basis: &Arc<TabloidBasis>,
    field: FieldPrime,
    kind: RelationKind,
    phi: Phi,
) -> Result<RelationSet> {
    check_column_basis(basis, field)?;
    let labels = labels_for(basis, kind, phi)?;
    let relations = labels.par_iter().map(|l| garnir_relation(l, basis, field)).collect::<Result<Vec<_>>>()?;
    Ok(RelationSet { kind, basis: Arc::clone(basis), field, labels, relations })
}

/// The span of a relation family, computed weight block by weight block.
pub fn relation_span(set: &RelationSet) -> Result<GradedSubspace> {
    GradedSubspace::span(&set.basis, set.field, &set.relations)
}

/// Span of the union of several relation families over the same basis.
pub fn relation_span_union(sets: &[&RelationSet]) -> Result<GradedSubspace> {
    let first = sets.first().ok_or_else(|| Error::Unsupported("empty list of relation sets".into()))?;
    if sets.iter().any(|s| !Arc::ptr_eq(&s.basis, &first.basis) || s.field != first.field) {
        return Err(Error::Unsupported("relation sets over different spaces".into()));
    }
    GradedSubspace::span(&first.basis, first.field, sets.iter().flat_map(|s| s.relations.iter()))
}
