//! Dense exact linear algebra over small prime fields.
//!
//! Vectors over GF(2) are packed 64 coordinates to a machine word and reduced
//! with word-wide XOR; other primes use one byte per coordinate. Subspaces are
//! kept in reduced row-echelon form, which makes membership, reduction to a
//! normal form and quotient coordinates cheap. [`SpanBuilder`] grows a span one
//! vector at a time so relation sets never need to be materialized in full.

use std::fmt;

use crate::error::{Error, Result};

/// The prime field GF(p), for primes below 256.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldPrime(u8);

impl FieldPrime {
    pub const TWO: FieldPrime = FieldPrime(2);
    pub const THREE: FieldPrime = FieldPrime(3);
    pub const FIVE: FieldPrime = FieldPrime(5);

    pub fn new(p: u64) -> Result<Self> {
        if !(2..=251).contains(&p) || (2..p).take_while(|k| k * k <= p).any(|k| p.is_multiple_of(k)) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldPrime(p as u8))
    }

    pub fn p(self) -> u8 {
        self.0
    }

    pub fn is_two(self) -> bool {
        self.0 == 2
    }

    /// Reduces a signed integer into `[0, p)`.
    pub fn reduce(self, x: i64) -> u8 {
        x.rem_euclid(self.0 as i64) as u8
    }

    #[inline]
    pub fn add(self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.0 as u16) as u8
    }

    #[inline]
    pub fn sub(self, a: u8, b: u8) -> u8 {
        ((a as u16 + self.0 as u16 - b as u16) % self.0 as u16) as u8
    }

    #[inline]
    pub fn mul(self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.0 as u16) as u8
    }

    #[inline]
    pub fn neg(self, a: u8) -> u8 {
        self.sub(0, a)
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(self, a: u8) -> u8 {
        assert!(!a.is_multiple_of(self.0), "zero has no inverse");
        // a^(p-2) by square and multiply.
        let (mut base, mut exp, mut acc) = (a % self.0, self.0 as u32 - 2, 1u8);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }
}

impl fmt::Display for FieldPrime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Bits(Vec<u64>),
    Bytes(Vec<u8>),
}

/// A dense coordinate vector over GF(p).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpVector {
    field: FieldPrime,
    len: usize,
    repr: Repr,
}

impl FpVector {
    pub fn zeros(field: FieldPrime, len: usize) -> Self {
        let repr = if field.is_two() { Repr::Bits(vec![0; len.div_ceil(64)]) } else { Repr::Bytes(vec![0; len]) };
        Self { field, len, repr }
    }

    pub fn unit(field: FieldPrime, len: usize, i: usize) -> Self {
        let mut v = Self::zeros(field, len);
        v.set(i, 1);
        v
    }

    /// Builds a vector from integer coordinates, reducing each modulo p.
    pub fn from_coords(field: FieldPrime, coords: &[i64]) -> Self {
        let mut v = Self::zeros(field, coords.len());
        for (i, &c) in coords.iter().enumerate() {
            v.set(i, field.reduce(c));
        }
        v
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> u8 {
        debug_assert!(i < self.len);
        match &self.repr {
            Repr::Bits(w) => ((w[i / 64] >> (i % 64)) & 1) as u8,
            Repr::Bytes(b) => b[i],
        }
    }

    #[inline]
    pub fn set(&mut self, i: usize, x: u8) {
        assert!(i < self.len, "index {i} out of range {}", self.len);
        let x = x % self.field.0;
        match &mut self.repr {
            Repr::Bits(w) => {
                if x == 1 {
                    w[i / 64] |= 1 << (i % 64);
                } else {
                    w[i / 64] &= !(1 << (i % 64));
                }
            }
            Repr::Bytes(b) => b[i] = x,
        }
    }

    /// Adds `c` to coordinate `i`.
    #[inline]
    pub fn add_at(&mut self, i: usize, c: u8) {
        let cur = self.get(i);
        self.set(i, self.field.add(cur, c));
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Bits(w) => w.iter().all(|&x| x == 0),
            Repr::Bytes(b) => b.iter().all(|&x| x == 0),
        }
    }

    /// Index of the first nonzero coordinate.
    pub fn leading(&self) -> Option<usize> {
        match &self.repr {
            Repr::Bits(w) => {
                w.iter().enumerate().find(|(_, &x)| x != 0).map(|(k, &x)| k * 64 + x.trailing_zeros() as usize)
            }
            Repr::Bytes(b) => b.iter().position(|&x| x != 0),
        }
    }

    /// `self += c * other`.
    pub fn add_scaled(&mut self, other: &FpVector, c: u8) {
        assert_eq!(self.len, other.len, "length mismatch");
        let f = self.field;
        let c = c % f.0;
        if c == 0 {
            return;
        }
        match (&mut self.repr, &other.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x ^= *y;
                }
            }
            (Repr::Bytes(a), Repr::Bytes(b)) => {
                let p = f.0 as u16;
                for (x, &y) in a.iter_mut().zip(b) {
                    if y != 0 {
                        *x = ((*x as u16 + c as u16 * y as u16) % p) as u8;
                    }
                }
            }
            _ => panic!("mixed field representations"),
        }
    }

    pub fn scale(&mut self, c: u8) {
        let f = self.field;
        match &mut self.repr {
            Repr::Bits(w) => {
                if c.is_multiple_of(2) {
                    w.iter_mut().for_each(|x| *x = 0);
                }
            }
            Repr::Bytes(b) => b.iter_mut().for_each(|x| *x = f.mul(*x, c)),
        }
    }

    /// `(index, coefficient)` pairs of the nonzero coordinates, in increasing index order.
    pub fn nonzero(&self) -> Vec<(usize, u8)> {
        match &self.repr {
            Repr::Bits(w) => {
                let mut out = Vec::new();
                for (k, &word) in w.iter().enumerate() {
                    let mut x = word;
                    while x != 0 {
                        let t = x.trailing_zeros() as usize;
                        out.push((k * 64 + t, 1));
                        x &= x - 1;
                    }
                }
                out
            }
            Repr::Bytes(b) => b.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, &x)| (i, x)).collect(),
        }
    }

    pub fn to_coords(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Concatenation `[self | other]`.
    pub fn concat(&self, other: &FpVector) -> FpVector {
        let mut v = FpVector::zeros(self.field, self.len + other.len);
        for (i, c) in self.nonzero() {
            v.set(i, c);
        }
        for (i, c) in other.nonzero() {
            v.set(self.len + i, c);
        }
        v
    }

    /// Coordinates `range` as a new vector.
    pub fn slice(&self, start: usize, end: usize) -> FpVector {
        let mut v = FpVector::zeros(self.field, end - start);
        for (i, c) in self.nonzero() {
            if (start..end).contains(&i) {
                v.set(i - start, c);
            }
        }
        v
    }
}

/// Incrementally grows a subspace in reduced row-echelon form.
///
/// Single-owner: finish it into an immutable [`Subspace`] to share.
#[derive(Clone, Debug)]
pub struct SpanBuilder {
    field: FieldPrime,
    dim: usize,
    rows: Vec<FpVector>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(field: FieldPrime, ambient_dim: usize) -> Self {
        Self { field, dim: ambient_dim, rows: Vec::new(), pivots: Vec::new() }
    }

    /// Starts from an existing subspace.
    pub fn from_subspace(s: &Subspace) -> Self {
        Self { field: s.field, dim: s.ambient_dim, rows: s.rows.clone(), pivots: s.pivots.clone() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    fn reduce_in_place(&self, v: &mut FpVector) {
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = v.get(piv);
            if c != 0 {
                v.add_scaled(row, self.field.neg(c));
            }
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn push(&mut self, mut v: FpVector) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        if v.field() != self.field {
            return Err(Error::Unsupported(format!("vector over {} pushed into span over {}", v.field(), self.field)));
        }
        self.reduce_in_place(&mut v);
        let Some(piv) = v.leading() else {
            return Ok(false);
        };
        let lead = v.get(piv);
        if lead != 1 {
            v.scale(self.field.inv(lead));
        }
        for row in &mut self.rows {
            let c = row.get(piv);
            if c != 0 {
                row.add_scaled(&v, self.field.neg(c));
            }
        }
        let at = self.pivots.partition_point(|&p| p < piv);
        self.pivots.insert(at, piv);
        self.rows.insert(at, v);
        Ok(true)
    }

    /// Membership test against the current span.
    pub fn contains(&self, v: &FpVector) -> Result<bool> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, got: v.len() });
        }
        let mut w = v.clone();
        self.reduce_in_place(&mut w);
        Ok(w.is_zero())
    }

    pub fn finish(self) -> Subspace {
        Subspace { field: self.field, ambient_dim: self.dim, rows: self.rows, pivots: self.pivots }
    }
}

/// A subspace of GF(p)^m held as a reduced row-echelon basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    field: FieldPrime,
    ambient_dim: usize,
    rows: Vec<FpVector>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldPrime, ambient_dim: usize) -> Self {
        SpanBuilder::new(field, ambient_dim).finish()
    }

    pub fn full(field: FieldPrime, ambient_dim: usize) -> Self {
        let mut b = SpanBuilder::new(field, ambient_dim);
        for i in 0..ambient_dim {
            b.push(FpVector::unit(field, ambient_dim, i)).expect("unit vector");
        }
        b.finish()
    }

    /// Span of the unit vectors `e_k` for `k` in `indices`.
    pub fn coordinate(field: FieldPrime, ambient_dim: usize, indices: &[usize]) -> Self {
        let mut pivots = indices.to_vec();
        pivots.sort_unstable();
        pivots.dedup();
        assert!(pivots.last().is_none_or(|&k| k < ambient_dim), "coordinate out of range");
        let rows = pivots.iter().map(|&k| FpVector::unit(field, ambient_dim, k)).collect();
        Self { field, ambient_dim, rows, pivots }
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Codimension in the ambient space.
    pub fn quotient_dim(&self) -> usize {
        self.ambient_dim - self.rows.len()
    }

    pub fn basis(&self) -> &[FpVector] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Ambient coordinates that are not pivots; their unit vectors map to a basis of the quotient.
    pub fn non_pivots(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.quotient_dim());
        let mut k = 0;
        for i in 0..self.ambient_dim {
            if k < self.pivots.len() && self.pivots[k] == i {
                k += 1;
            } else {
                out.push(i);
            }
        }
        out
    }

    /// Normal form of `v` modulo the subspace (zero exactly on members).
    pub fn reduce(&self, v: &FpVector) -> Result<FpVector> {
        if v.len() != self.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: v.len() });
        }
        let mut w = v.clone();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = w.get(piv);
            if c != 0 {
                w.add_scaled(row, self.field.neg(c));
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &FpVector) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Containment of subspaces.
    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool> {
        for v in other.basis() {
            if !self.contains(v)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn check_same_ambient(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { expected: self.ambient_dim, got: other.ambient_dim });
        }
        if self.field != other.field {
            return Err(Error::Unsupported(format!("subspaces over {} and {}", self.field, other.field)));
        }
        Ok(())
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let mut b = SpanBuilder::from_subspace(self);
        for v in other.basis() {
            b.push(v.clone())?;
        }
        Ok(b.finish())
    }

    /// Intersection by the Zassenhaus construction: echelonize the rows
    /// `[s | s]` and `[t | 0]`; rows whose left half vanishes carry a basis
    /// of the intersection in their right half.
    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check_same_ambient(other)?;
        let m = self.ambient_dim;
        let mut b = SpanBuilder::new(self.field, 2 * m);
        for s in self.basis() {
            b.push(s.concat(s))?;
        }
        let zero = FpVector::zeros(self.field, m);
        for t in other.basis() {
            b.push(t.concat(&zero))?;
        }
        let joint = b.finish();
        let mut out = SpanBuilder::new(self.field, m);
        for (row, &piv) in joint.rows.iter().zip(&joint.pivots) {
            if piv >= m {
                out.push(row.slice(m, 2 * m))?;
            }
        }
        Ok(out.finish())
    }
}

/// Reduced row-echelon span of `vectors` inside GF(p)^`ambient_dim`.
pub fn span(vectors: &[FpVector], ambient_dim: usize, field: FieldPrime) -> Result<Subspace> {
    let mut b = SpanBuilder::new(field, ambient_dim);
    for v in vectors {
        b.push(v.clone())?;
    }
    Ok(b.finish())
}

/// `(dim(S + T), dim(S ∩ T))`, the intersection computed independently of the sum.
pub fn dim_sum_and_intersection(s: &Subspace, t: &Subspace) -> Result<(usize, usize)> {
    Ok((s.sum(t)?.dim(), s.intersection(t)?.dim()))
}

/// A dense matrix over GF(p), stored as row vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixGFp {
    field: FieldPrime,
    cols: usize,
    rows: Vec<FpVector>,
}

impl MatrixGFp {
    pub fn zeros(field: FieldPrime, rows: usize, cols: usize) -> Self {
        Self { field, cols, rows: (0..rows).map(|_| FpVector::zeros(field, cols)).collect() }
    }

    pub fn from_rows(field: FieldPrime, cols: usize, rows: Vec<FpVector>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, got: r.len() });
        }
        Ok(Self { field, cols, rows })
    }

    pub fn from_coords(field: FieldPrime, coords: &[Vec<i64>]) -> Result<Self> {
        let cols = coords.first().map_or(0, Vec::len);
        Self::from_rows(field, cols, coords.iter().map(|r| FpVector::from_coords(field, r)).collect())
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u8 {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, x: u8) {
        self.rows[r].set(c, x)
    }

    pub fn row(&self, r: usize) -> &FpVector {
        &self.rows[r]
    }

    pub fn transpose(&self) -> MatrixGFp {
        let mut t = MatrixGFp::zeros(self.field, self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for (c, x) in row.nonzero() {
                t.set(c, r, x);
            }
        }
        t
    }

    pub fn row_space(&self) -> Subspace {
        span(&self.rows, self.cols, self.field).expect("rows have matching length")
    }

    pub fn rank(&self) -> usize {
        self.row_space().dim()
    }

    /// Basis of the right kernel `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<FpVector> {
        let rref = self.row_space();
        let f = self.field;
        rref.non_pivots()
            .into_iter()
            .map(|free| {
                let mut x = FpVector::unit(f, self.cols, free);
                for (row, &piv) in rref.basis().iter().zip(rref.pivots()) {
                    let c = row.get(free);
                    if c != 0 {
                        x.set(piv, f.neg(c));
                    }
                }
                x
            })
            .collect()
    }

    /// Matrix-vector product `A x`.
    pub fn apply(&self, x: &FpVector) -> Result<FpVector> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, got: x.len() });
        }
        let f = self.field;
        let mut out = FpVector::zeros(f, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc = 0u8;
            for (c, a) in row.nonzero() {
                acc = f.add(acc, f.mul(a, x.get(c)));
            }
            out.set(r, acc);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const F2: FieldPrime = FieldPrime::TWO;
    const F3: FieldPrime = FieldPrime::THREE;

    fn v(f: FieldPrime, c: &[i64]) -> FpVector {
        FpVector::from_coords(f, c)
    }

    #[test]
    fn primes() {
        assert!(FieldPrime::new(2).is_ok());
        assert!(FieldPrime::new(7).is_ok());
        assert!(FieldPrime::new(4).is_err());
        assert!(FieldPrime::new(1).is_err());
        assert!(FieldPrime::new(257).is_err());
        let f = FieldPrime::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn span_examples() {
        for f in [F2, F3] {
            assert_eq!(span(&[], 4, f).unwrap().dim(), 0);
            let units: Vec<_> = (0..5).map(|i| FpVector::unit(f, 5, i)).collect();
            assert_eq!(span(&units, 5, f).unwrap().dim(), 5);
            let x = v(f, &[1, 0, 2, 1]);
            assert_eq!(span(&[x.clone(), x], 4, f).unwrap().dim(), 1);
        }
        assert!(span(&[v(F2, &[1, 0])], 3, F2).is_err());
    }

    #[test]
    fn contains_examples() {
        let s = span(&[v(F3, &[0, 1])], 2, F3).unwrap();
        assert!(s.contains(&v(F3, &[0, 0])).unwrap());
        assert!(!s.contains(&v(F3, &[1, 0])).unwrap());
        let full = span(&[v(F2, &[1, 0]), v(F2, &[0, 1])], 2, F2).unwrap();
        assert!(full.contains(&v(F2, &[1, 1])).unwrap());
        assert!(full.contains(&v(F2, &[1])).is_err());
    }

    #[test]
    fn sum_intersection_examples() {
        let f = F3;
        let s = span(&[v(f, &[1, 1, 0]), v(f, &[0, 1, 2])], 3, f).unwrap();
        assert_eq!(dim_sum_and_intersection(&s, &s).unwrap(), (2, 2));
        let a = span(&[v(f, &[1, 0])], 2, f).unwrap();
        let b = span(&[v(f, &[1, 1])], 2, f).unwrap();
        assert_eq!(dim_sum_and_intersection(&a, &b).unwrap(), (2, 0));
        let small = span(&[v(f, &[1, 1, 0])], 3, f).unwrap();
        assert_eq!(dim_sum_and_intersection(&small, &s).unwrap(), (2, 1));
        let other = Subspace::zero(f, 4);
        assert!(dim_sum_and_intersection(&s, &other).is_err());
    }

    #[test]
    fn rref_shape() {
        let s = span(&[v(F3, &[1, 2, 0, 1]), v(F3, &[2, 1, 1, 0]), v(F3, &[0, 0, 1, 1])], 4, F3).unwrap();
        for (k, (row, &p)) in s.basis().iter().zip(s.pivots()).enumerate() {
            assert_eq!(row.get(p), 1);
            assert_eq!(row.leading(), Some(p));
            for (k2, &p2) in s.pivots().iter().enumerate() {
                if k2 != k {
                    assert_eq!(row.get(p2), 0);
                }
            }
        }
        assert!(s.pivots().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn kernel_and_apply() {
        let m = MatrixGFp::from_coords(F3, &[vec![1, 2, 0, 1], vec![0, 1, 1, 2], vec![1, 0, 1, 0]]).unwrap();
        let ker = m.kernel();
        assert_eq!(ker.len() + m.rank(), 4);
        for x in &ker {
            assert!(m.apply(x).unwrap().is_zero());
        }
    }

    #[test]
    fn quotient_coordinates() {
        let s = span(&[v(F2, &[1, 1, 0, 0])], 4, F2).unwrap();
        assert_eq!(s.non_pivots(), vec![1, 2, 3]);
        assert_eq!(s.quotient_dim(), 3);
        let r = s.reduce(&v(F2, &[1, 0, 0, 1])).unwrap();
        assert_eq!(r.to_coords(), vec![0, 1, 0, 1]);
    }

    #[test]
    fn bit_vectors_cross_word_boundaries() {
        let n = 130;
        let mut a = FpVector::zeros(F2, n);
        a.set(0, 1);
        a.set(64, 1);
        a.set(129, 1);
        assert_eq!(a.nonzero().iter().map(|x| x.0).collect::<Vec<_>>(), vec![0, 64, 129]);
        let mut b = FpVector::unit(F2, n, 64);
        b.add_scaled(&a, 1);
        assert_eq!(b.leading(), Some(0));
        assert_eq!(b.nonzero().len(), 2);
        assert_eq!(a.slice(60, 130).leading(), Some(4));
    }
}
