//! Canonical forms and bases for row tabloids, alternating column tabloids
//! and skew column tabloids, plus sparse vectors over them.
//!
//! Every construction in this crate is homogeneous for the weight grading
//! (the multiset of entries), so bases are split into weight blocks and
//! subspaces are stored block by block in [`GradedSubspace`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use crate::combinatorics::{for_each_filling, Partition, Tableau, TableauClass, Weight};
use crate::error::{Error, Result};
use crate::linalg::{FieldPrime, FpVector, SpanBuilder, Subspace};

/// Which equivalence on tableaux a tabloid space is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TabloidKind {
    /// Rows may be reordered freely (the symmetric power `Sym^λ`).
    Row,
    /// Columns reorder with sign and vanish on repeated entries (`⋀^λ'`).
    AltColumn,
    /// Columns reorder with sign and never vanish; agrees with
    /// [`TabloidKind::AltColumn`] away from characteristic 2.
    SkewColumn(FieldPrime),
}

impl TabloidKind {
    /// Skew column tabloids in odd characteristic behave exactly like alternating ones.
    fn effective(self) -> TabloidKind {
        match self {
            TabloidKind::SkewColumn(p) if !p.is_two() => TabloidKind::AltColumn,
            k => k,
        }
    }

    /// Tableau class of the canonical representatives.
    pub fn representative_class(self) -> TableauClass {
        match self.effective() {
            TabloidKind::Row => TableauClass::RowSemistandard,
            TabloidKind::AltColumn => TableauClass::ColumnStandard,
            TabloidKind::SkewColumn(_) => TableauClass::ColumnSemistandard,
        }
    }

    pub fn is_column(self) -> bool {
        !matches!(self, TabloidKind::Row)
    }
}

impl fmt::Display for TabloidKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TabloidKind::Row => write!(f, "row"),
            TabloidKind::AltColumn => write!(f, "alt-column"),
            TabloidKind::SkewColumn(p) => write!(f, "skew-column(p={})", p.p()),
        }
    }
}

/// A canonical representative with the sign picked up while sorting.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedTabloid {
    pub rep: Tableau,
    pub sign: i8,
    pub is_zero: bool,
}

/// Sorts `xs` ascending and returns the parity (+1/-1) of the sorting permutation.
fn sort_with_sign(xs: &mut [u8]) -> i8 {
    let mut sign = 1i8;
    // Insertion sort: every adjacent swap is a transposition.
    for a in 1..xs.len() {
        let mut b = a;
        while b > 0 && xs[b - 1] > xs[b] {
            xs.swap(b - 1, b);
            sign = -sign;
            b -= 1;
        }
    }
    sign
}

/// In-place canonicalization; returns `None` when the tabloid vanishes.
pub(crate) fn canonicalize_in_place(t: &mut Tableau, kind: TabloidKind) -> Option<i8> {
    match kind.effective() {
        TabloidKind::Row => {
            let shape = t.shape().clone();
            for i in 1..=shape.len() {
                let mut row = t.row(i);
                row.sort_unstable();
                for (j, v) in row.into_iter().enumerate() {
                    t.set(i, j + 1, v);
                }
            }
            Some(1)
        }
        TabloidKind::AltColumn => {
            let mut sign = 1;
            for j in 1..=t.shape().part(1) {
                let col = t.column_mut(j);
                sign *= sort_with_sign(col);
                if col.windows(2).any(|w| w[0] == w[1]) {
                    return None;
                }
            }
            Some(sign)
        }
        TabloidKind::SkewColumn(_) => {
            // Signs are irrelevant in characteristic 2.
            for j in 1..=t.shape().part(1) {
                t.column_mut(j).sort_unstable();
            }
            Some(1)
        }
    }
}

/// Canonical representative of the tabloid of `t`.
///
/// Rows (or columns) are sorted ascending; the sign is the parity of the
/// column sort. Alternating tabloids with a repeated column entry are zero.
pub fn canonicalize(t: &Tableau, kind: TabloidKind) -> SignedTabloid {
    let mut rep = t.clone();
    match canonicalize_in_place(&mut rep, kind) {
        Some(sign) => SignedTabloid { rep, sign, is_zero: false },
        None => {
            // Still sort so the representative is deterministic.
            for j in 1..=rep.shape().part(1) {
                rep.column_mut(j).sort_unstable();
            }
            SignedTabloid { rep, sign: 1, is_zero: true }
        }
    }
}

/// One weight space of a tabloid basis.
#[derive(Clone, Debug)]
pub struct WeightBlock {
    pub weight: Weight,
    /// Global basis indices, ascending.
    pub members: Vec<usize>,
}

/// Basis of a tabloid space: canonical representatives indexed `0..dim`
/// in the deterministic tableau order.
#[derive(Debug)]
pub struct TabloidBasis {
    kind: TabloidKind,
    shape: Partition,
    d: usize,
    reps: Vec<Tableau>,
    index: HashMap<Vec<u8>, usize>,
    block_of: Vec<usize>,
    local: Vec<usize>,
    blocks: Vec<WeightBlock>,
}

impl TabloidBasis {
    pub fn kind(&self) -> TabloidKind {
        self.kind
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn rep(&self, i: usize) -> &Tableau {
        &self.reps[i]
    }

    pub fn reps(&self) -> &[Tableau] {
        &self.reps
    }

    /// Index of a canonical representative.
    pub fn index_of(&self, rep: &Tableau) -> Option<usize> {
        if rep.shape() != &self.shape {
            return None;
        }
        self.index.get(rep.entries()).copied()
    }

    pub fn blocks(&self) -> &[WeightBlock] {
        &self.blocks
    }

    pub fn block_of(&self, i: usize) -> usize {
        self.block_of[i]
    }

    /// Position of basis element `i` inside its weight block.
    pub fn local_index(&self, i: usize) -> usize {
        self.local[i]
    }

    pub fn weight_of(&self, i: usize) -> &Weight {
        &self.blocks[self.block_of[i]].weight
    }

    pub fn block_index(&self, w: &Weight) -> Option<usize> {
        self.blocks.binary_search_by(|b| b.weight.cmp(w)).ok()
    }
}

/// Builds the basis of canonical representatives for `kind`.
///
/// Row: row-semistandard fillings. AltColumn: column-standard fillings.
/// SkewColumn in characteristic 2: column-semistandard fillings.
pub fn build_basis(lambda: &Partition, d: usize, kind: TabloidKind) -> Arc<TabloidBasis> {
    let mut reps = Vec::new();
    for_each_filling(lambda, d, kind.representative_class(), |e| {
        reps.push(Tableau::from_column_major(lambda.clone(), e.to_vec()).expect("valid filling"));
    });
    let index = reps.iter().enumerate().map(|(i, t)| (t.entries().to_vec(), i)).collect();
    let mut by_weight: BTreeMap<Weight, Vec<usize>> = BTreeMap::new();
    for (i, t) in reps.iter().enumerate() {
        by_weight.entry(t.weight(d)).or_default().push(i);
    }
    let mut block_of = vec![0; reps.len()];
    let mut local = vec![0; reps.len()];
    let blocks: Vec<WeightBlock> = by_weight
        .into_iter()
        .enumerate()
        .map(|(b, (weight, members))| {
            for (k, &i) in members.iter().enumerate() {
                block_of[i] = b;
                local[i] = k;
            }
            WeightBlock { weight, members }
        })
        .collect();
    Arc::new(TabloidBasis { kind, shape: lambda.clone(), d, reps, index, block_of, local, blocks })
}

/// A sparse GF(p) combination of basis tabloids.
#[derive(Clone, Debug)]
pub struct TabloidVector {
    basis: Arc<TabloidBasis>,
    field: FieldPrime,
    coords: BTreeMap<usize, u8>,
}

impl PartialEq for TabloidVector {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.basis, &other.basis) && self.field == other.field && self.coords == other.coords
    }
}

impl TabloidVector {
    pub fn zero(basis: &Arc<TabloidBasis>, field: FieldPrime) -> Self {
        Self { basis: Arc::clone(basis), field, coords: BTreeMap::new() }
    }

    pub fn unit(basis: &Arc<TabloidBasis>, field: FieldPrime, i: usize) -> Self {
        let mut v = Self::zero(basis, field);
        v.add_term(i, 1);
        v
    }

    /// The tabloid of an arbitrary tableau (canonicalized, possibly zero).
    pub fn of_tableau(basis: &Arc<TabloidBasis>, field: FieldPrime, t: &Tableau) -> Result<Self> {
        let mut v = Self::zero(basis, field);
        v.add_tableau(t, 1)?;
        Ok(v)
    }

    pub fn basis(&self) -> &Arc<TabloidBasis> {
        &self.basis
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn coeff(&self, i: usize) -> u8 {
        self.coords.get(&i).copied().unwrap_or(0)
    }

    /// Nonzero `(index, coefficient)` pairs in index order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, u8)> + '_ {
        self.coords.iter().map(|(&i, &c)| (i, c))
    }

    pub fn support_len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add_term(&mut self, i: usize, c: u8) {
        assert!(i < self.basis.dim(), "basis index out of range");
        let c = c % self.field.p();
        if c == 0 {
            return;
        }
        let e = self.coords.entry(i).or_insert(0);
        *e = self.field.add(*e, c);
        if *e == 0 {
            self.coords.remove(&i);
        }
    }

    /// Adds `coeff * ⟨t⟩` after canonicalizing `t` for this basis.
    pub fn add_tableau(&mut self, t: &Tableau, coeff: i64) -> Result<()> {
        let mut rep = t.clone();
        self.add_tableau_in_place(&mut rep, coeff)
    }

    /// As [`Self::add_tableau`], reusing `t` as scratch space.
    pub(crate) fn add_tableau_in_place(&mut self, t: &mut Tableau, coeff: i64) -> Result<()> {
        if t.shape() != self.basis.shape() {
            return Err(Error::ShapeMismatch { left: t.shape().to_string(), right: self.basis.shape().to_string() });
        }
        if t.max_entry() as usize > self.basis.d() {
            return Err(Error::LetterOutOfRange { letter: t.max_entry() as usize, d: self.basis.d() });
        }
        if let Some(sign) = canonicalize_in_place(t, self.basis.kind()) {
            let i = self.basis.index.get(t.entries()).copied().expect("canonical representative is in the basis");
            self.add_term(i, self.field.reduce(coeff * sign as i64));
        }
        Ok(())
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &TabloidVector, c: u8) {
        assert!(Arc::ptr_eq(&self.basis, &other.basis), "vectors over different bases");
        for (i, x) in other.terms() {
            self.add_term(i, self.field.mul(x, c));
        }
    }

    pub fn sub(&self, other: &TabloidVector) -> TabloidVector {
        let mut out = self.clone();
        out.add_scaled(other, self.field.neg(1));
        out
    }

    /// The weight block containing the support, if the vector is nonzero and homogeneous.
    pub fn homogeneous_block(&self) -> Option<usize> {
        let mut blocks = self.coords.keys().map(|&i| self.basis.block_of(i));
        let first = blocks.next()?;
        blocks.all(|b| b == first).then_some(first)
    }

    pub fn is_weight_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_block().is_some()
    }

    /// Dense coordinates within weight block `b` (terms outside the block are dropped).
    pub fn block_coords(&self, b: usize) -> FpVector {
        let size = self.basis.blocks()[b].members.len();
        let mut v = FpVector::zeros(self.field, size);
        for (i, c) in self.terms() {
            if self.basis.block_of(i) == b {
                v.set(self.basis.local_index(i), c);
            }
        }
        v
    }

    /// Lifts dense block coordinates back to a sparse vector.
    pub fn from_block_coords(basis: &Arc<TabloidBasis>, b: usize, v: &FpVector) -> Self {
        let mut out = Self::zero(basis, v.field());
        let members = &basis.blocks()[b].members;
        for (k, c) in v.nonzero() {
            out.add_term(members[k], c);
        }
        out
    }
}

impl fmt::Display for TabloidVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (i, c)) in self.terms().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c != 1 {
                write!(f, "{c}*")?;
            }
            write!(f, "{}", self.basis.rep(i))?;
        }
        Ok(())
    }
}

/// A subspace of a tabloid space spanned by weight-homogeneous vectors,
/// stored as one echelon [`Subspace`] per weight block.
#[derive(Clone, Debug)]
pub struct GradedSubspace {
    basis: Arc<TabloidBasis>,
    field: FieldPrime,
    blocks: Vec<Subspace>,
}

impl GradedSubspace {
    pub fn zero(basis: &Arc<TabloidBasis>, field: FieldPrime) -> Self {
        let blocks = basis.blocks().iter().map(|b| Subspace::zero(field, b.members.len())).collect();
        Self { basis: Arc::clone(basis), field, blocks }
    }

    /// Spans `vectors` block by block (in parallel); fails on an inhomogeneous vector.
    pub fn span<'a>(
        basis: &Arc<TabloidBasis>,
        field: FieldPrime,
        vectors: impl IntoIterator<Item = &'a TabloidVector>,
    ) -> Result<Self> {
        let mut per_block: Vec<Vec<&TabloidVector>> = vec![Vec::new(); basis.blocks().len()];
        for v in vectors {
            if v.is_zero() {
                continue;
            }
            let b = v
                .homogeneous_block()
                .ok_or_else(|| Error::Unsupported("relation vector is not weight-homogeneous".into()))?;
            per_block[b].push(v);
        }
        let blocks = per_block
            .into_par_iter()
            .enumerate()
            .map(|(b, vs)| {
                let mut sb = SpanBuilder::new(field, basis.blocks()[b].members.len());
                for v in vs {
                    sb.push(v.block_coords(b)).expect("block dimensions agree");
                }
                sb.finish()
            })
            .collect();
        Ok(Self { basis: Arc::clone(basis), field, blocks })
    }

    /// Assembles a graded subspace from per-block subspaces.
    pub fn from_blocks(basis: &Arc<TabloidBasis>, field: FieldPrime, blocks: Vec<Subspace>) -> Result<Self> {
        if blocks.len() != basis.blocks().len() {
            return Err(Error::DimensionMismatch { expected: basis.blocks().len(), got: blocks.len() });
        }
        for (s, b) in blocks.iter().zip(basis.blocks()) {
            if s.ambient_dim() != b.members.len() {
                return Err(Error::DimensionMismatch { expected: b.members.len(), got: s.ambient_dim() });
            }
        }
        Ok(Self { basis: Arc::clone(basis), field, blocks })
    }

    pub fn basis(&self) -> &Arc<TabloidBasis> {
        &self.basis
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn block(&self, b: usize) -> &Subspace {
        &self.blocks[b]
    }

    pub fn blocks(&self) -> &[Subspace] {
        &self.blocks
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().map(Subspace::dim).sum()
    }

    /// Normal form of `v` modulo the subspace.
    pub fn reduce(&self, v: &TabloidVector) -> Result<TabloidVector> {
        if !Arc::ptr_eq(v.basis(), &self.basis) {
            return Err(Error::Unsupported("vector over a different basis".into()));
        }
        let mut out = TabloidVector::zero(&self.basis, self.field);
        let mut touched: Vec<usize> = v.terms().map(|(i, _)| self.basis.block_of(i)).collect();
        touched.sort_unstable();
        touched.dedup();
        for b in touched {
            let r = self.blocks[b].reduce(&v.block_coords(b))?;
            out.add_scaled(&TabloidVector::from_block_coords(&self.basis, b, &r), 1);
        }
        Ok(out)
    }

    pub fn contains(&self, v: &TabloidVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    pub fn contains_subspace(&self, other: &GradedSubspace) -> Result<bool> {
        for (a, b) in self.blocks.iter().zip(&other.blocks) {
            if !a.contains_subspace(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Unit vectors on the skew column tabloids that have a repeated column entry;
/// they span the kernel of `q: Sk^λ' → ⋀^λ'`.
///
/// In odd characteristic the skew basis has no such tabloids and the list is empty.
pub fn ker_q_generators(basis: &Arc<TabloidBasis>) -> Result<Vec<TabloidVector>> {
    let TabloidKind::SkewColumn(p) = basis.kind() else {
        return Err(Error::Unsupported(format!("ker q lives in a skew column space, not {}", basis.kind())));
    };
    Ok(basis
        .reps()
        .iter()
        .enumerate()
        .filter(|(_, t)| t.has_repeated_column_entry())
        .map(|(i, _)| TabloidVector::unit(basis, p, i))
        .collect())
}

/// The quotient map `q: ⟦t⟧ ↦ ⟨t⟩` from skew to alternating column tabloids.
pub fn apply_q(v: &TabloidVector, alt: &Arc<TabloidBasis>) -> Result<TabloidVector> {
    if !matches!(v.basis().kind(), TabloidKind::SkewColumn(_)) || alt.kind() != TabloidKind::AltColumn {
        return Err(Error::Unsupported("q maps skew column tabloids to alternating ones".into()));
    }
    let mut out = TabloidVector::zero(alt, v.field());
    for (i, c) in v.terms() {
        out.add_tableau(v.basis().rep(i), c as i64)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{binomial, enumerate_tableaux, multichoose};

    const F2: FieldPrime = FieldPrime::TWO;

    #[test]
    fn canonicalize_examples() {
        let t = Tableau::from_rows(&[vec![2], vec![1]]).unwrap();
        let c = canonicalize(&t, TabloidKind::AltColumn);
        assert_eq!(c.rep, Tableau::from_rows(&[vec![1], vec![2]]).unwrap());
        assert_eq!(c.sign, -1);
        assert!(!c.is_zero);

        let ones = Tableau::from_rows(&[vec![1], vec![1]]).unwrap();
        assert!(canonicalize(&ones, TabloidKind::AltColumn).is_zero);
        let sk = canonicalize(&ones, TabloidKind::SkewColumn(F2));
        assert!(!sk.is_zero);
        assert_eq!(sk.sign, 1);
        assert_eq!(sk.rep, ones);

        // Odd characteristic skew tabloids vanish like alternating ones.
        assert!(canonicalize(&ones, TabloidKind::SkewColumn(FieldPrime::THREE)).is_zero);

        let r = Tableau::from_rows(&[vec![3, 1, 2], vec![2, 1]]).unwrap();
        let rc = canonicalize(&r, TabloidKind::Row);
        assert_eq!(rc.rep, Tableau::from_rows(&[vec![1, 2, 3], vec![1, 2]]).unwrap());
        assert_eq!(rc.sign, 1);
    }

    #[test]
    fn basis_dims_match_product_formulas() {
        let lam: Partition = "2,2,1".parse().unwrap();
        assert_eq!(build_basis(&lam, 4, TabloidKind::SkewColumn(F2)).dim(), 200);
        let lam21: Partition = "2,1".parse().unwrap();
        assert_eq!(build_basis(&lam21, 2, TabloidKind::Row).dim(), 6);
        for n in 1..=5 {
            for d in 1..=4 {
                assert_eq!(
                    build_basis(&Partition::column(n), d, TabloidKind::AltColumn).dim() as u64,
                    binomial(d as u64, n as u64)
                );
            }
        }
        for lam in Partition::all(5) {
            let conj = lam.conjugate();
            for d in 1..=3u64 {
                let sk: u64 = conj.parts().iter().map(|&c| multichoose(d, c as u64)).product();
                let alt: u64 = conj.parts().iter().map(|&c| binomial(d, c as u64)).product();
                let row: u64 = lam.parts().iter().map(|&r| multichoose(d, r as u64)).product();
                assert_eq!(build_basis(&lam, d as usize, TabloidKind::SkewColumn(F2)).dim() as u64, sk);
                assert_eq!(build_basis(&lam, d as usize, TabloidKind::AltColumn).dim() as u64, alt);
                assert_eq!(build_basis(&lam, d as usize, TabloidKind::Row).dim() as u64, row);
            }
        }
    }

    #[test]
    fn skew_basis_matches_brute_force_canonicalization() {
        let lam: Partition = "2,2,1".parse().unwrap();
        let basis = build_basis(&lam, 4, TabloidKind::SkewColumn(F2));
        let mut reps: Vec<Tableau> = enumerate_tableaux(&lam, 4, TableauClass::All)
            .iter()
            .map(|t| canonicalize(t, TabloidKind::SkewColumn(F2)).rep)
            .collect();
        reps.sort();
        reps.dedup();
        assert_eq!(reps.len(), 200);
        assert_eq!(reps.as_slice(), basis.reps());
    }

    #[test]
    fn ker_q_examples() {
        let row = build_basis(&Partition::row(3), 3, TabloidKind::SkewColumn(F2));
        assert!(ker_q_generators(&row).unwrap().is_empty());
        let col = build_basis(&Partition::column(2), 2, TabloidKind::SkewColumn(F2));
        let gens = ker_q_generators(&col).unwrap();
        let reps: Vec<_> = gens.iter().map(|g| col.rep(g.terms().next().unwrap().0).clone()).collect();
        assert_eq!(reps, vec![Tableau::constant(Partition::column(2), 1), Tableau::constant(Partition::column(2), 2)]);
        let hook = build_basis(&"2,1".parse().unwrap(), 1, TabloidKind::SkewColumn(F2));
        assert_eq!(ker_q_generators(&hook).unwrap().len(), 1);
        let alt = build_basis(&Partition::column(2), 2, TabloidKind::AltColumn);
        assert!(ker_q_generators(&alt).is_err());
    }

    #[test]
    fn indexing_round_trip() {
        let lam: Partition = "3,1,1".parse().unwrap();
        for kind in [TabloidKind::Row, TabloidKind::AltColumn, TabloidKind::SkewColumn(F2)] {
            let b = build_basis(&lam, 3, kind);
            for i in 0..b.dim() {
                assert_eq!(b.index_of(b.rep(i)), Some(i));
                let blk = &b.blocks()[b.block_of(i)];
                assert_eq!(blk.members[b.local_index(i)], i);
                assert_eq!(&b.rep(i).weight(3), b.weight_of(i));
            }
        }
    }

    #[test]
    fn q_kills_exactly_the_repeated_tabloids() {
        let lam: Partition = "2,1,1".parse().unwrap();
        let sk = build_basis(&lam, 3, TabloidKind::SkewColumn(F2));
        let alt = build_basis(&lam, 3, TabloidKind::AltColumn);
        for i in 0..sk.dim() {
            let img = apply_q(&TabloidVector::unit(&sk, F2, i), &alt).unwrap();
            assert_eq!(img.is_zero(), sk.rep(i).has_repeated_column_entry());
        }
    }
}
