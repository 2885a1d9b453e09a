//! Partitions, tableaux over the alphabet `{1..d}`, the column ordering on
//! tableaux, and the counting formulas used as oracles elsewhere.
//!
//! Boxes are addressed `(row, column)`, both 1-based. Tableau entries are
//! stored column-major (each column top to bottom, columns left to right), so
//! the natural lexicographic order on the storage is the deterministic
//! enumeration order used for every basis in the crate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty partition".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self { parts })
    }

    /// The single row `(n)`.
    pub fn row(n: usize) -> Self {
        Self::new(vec![n]).expect("n must be positive")
    }

    /// The single column `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::new(vec![1; n]).expect("n must be positive")
    }

    /// The hook `(a, 1^(l-1))` with arm `a` and leg length `l`.
    pub fn hook(a: usize, l: usize) -> Self {
        let mut parts = vec![a];
        parts.extend(std::iter::repeat_n(1, l.saturating_sub(1)));
        Self::new(parts).expect("a and l must be positive")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of boxes.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (nonzero) rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i`, 1-based, zero beyond the last row.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `λ'_j`: the length of column `j` (1-based), zero beyond the first row.
    pub fn col_len(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.parts[0]).map(|j| self.col_len(j)).collect();
        Partition { parts }
    }

    /// No repeated parts.
    pub fn is_two_regular(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] != w[1])
    }

    /// Consecutive differences (including the last part against zero) are at most one.
    pub fn is_two_restricted(&self) -> bool {
        let mut prev = None;
        for &p in self.parts.iter().rev() {
            let below = prev.unwrap_or(0);
            if p - below > 1 {
                return false;
            }
            prev = Some(p);
        }
        true
    }

    /// The partition with its first part removed, or `None` for a single row.
    pub fn without_first_part(&self) -> Option<Partition> {
        (self.parts.len() > 1).then(|| Partition { parts: self.parts[1..].to_vec() })
    }

    /// Dominance order: `self ⊵ other`.
    pub fn dominates(&self, other: &Partition) -> bool {
        if self.n() != other.n() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a < b {
                return false;
            }
        }
        true
    }

    /// Every box `(i, j)` in row-reading order.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    /// All partitions of `n`, in decreasing lexicographic order (`(n)` first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in (1..=rem.min(max)).rev() {
                cur.push(p);
                rec(rem - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Hook length of box `(i, j)`.
    pub fn hook_length(&self, i: usize, j: usize) -> usize {
        (self.part(i) - j) + (self.col_len(j) - i) + 1
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Accepts `4,3,2,1,1`, `(4,3,2,1,1)` and the exponent shorthand `2^2,1`.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = Vec::new();
        for tok in body.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                return Err(Error::InvalidPartition(format!("empty part in {s:?}")));
            }
            let (base, exp) = match tok.split_once('^') {
                Some((b, e)) => (b.trim(), e.trim()),
                None => (tok, "1"),
            };
            let base: usize =
                base.parse().map_err(|_| Error::InvalidPartition(format!("bad part {tok:?} in {s:?}")))?;
            let exp: usize =
                exp.parse().map_err(|_| Error::InvalidPartition(format!("bad exponent {tok:?} in {s:?}")))?;
            if exp == 0 {
                return Err(Error::InvalidPartition(format!("zero exponent in {s:?}")));
            }
            parts.extend(std::iter::repeat_n(base, exp));
        }
        Partition::new(parts)
    }
}

/// A composition of `n` recording how often each letter `1..=d` occurs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<usize>);

impl Weight {
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }

    /// Multiplicity of letter `m` (1-based).
    pub fn mult(&self, m: usize) -> usize {
        self.0.get(m.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// The partition obtained by sorting the nonzero multiplicities.
    pub fn sorted_type(&self) -> Partition {
        let mut parts: Vec<usize> = self.0.iter().copied().filter(|&x| x > 0).collect();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).expect("weight of positive degree")
    }

    pub fn is_dominant(&self) -> bool {
        self.0.windows(2).all(|w| w[0] >= w[1])
    }

    /// Largest letter with nonzero multiplicity.
    pub fn max_letter(&self) -> usize {
        self.0.iter().rposition(|&x| x > 0).map_or(0, |i| i + 1)
    }

    /// The weight of `λ` padded to length `d`; `None` if `λ` has more than `d` rows.
    pub fn of_partition(lambda: &Partition, d: usize) -> Option<Weight> {
        if lambda.len() > d {
            return None;
        }
        let mut w = lambda.parts().to_vec();
        w.resize(d, 0);
        Some(Weight(w))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A filling of the Young diagram of a partition with letters `1..=255`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tableau {
    shape: Partition,
    col_offsets: Vec<usize>,
    entries: Vec<u8>,
}

fn column_offsets(shape: &Partition) -> Vec<usize> {
    let mut offs = Vec::with_capacity(shape.part(1) + 1);
    let mut acc = 0;
    offs.push(0);
    for j in 1..=shape.part(1) {
        acc += shape.col_len(j);
        offs.push(acc);
    }
    offs
}

impl Tableau {
    /// Builds a tableau from column-major entries (column 1 top to bottom, then column 2, ...).
    pub fn from_column_major(shape: Partition, entries: Vec<u8>) -> Result<Self> {
        if entries.len() != shape.n() {
            return Err(Error::InvalidTableau(format!(
                "{} entries for a shape with {} boxes",
                entries.len(),
                shape.n()
            )));
        }
        if entries.contains(&0) {
            return Err(Error::InvalidTableau("entries must be positive".into()));
        }
        let col_offsets = column_offsets(&shape);
        Ok(Self { shape, col_offsets, entries })
    }

    /// Builds a tableau from its rows; the row lengths define the shape.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.as_ref().len()).collect())?;
        let mut entries = Vec::with_capacity(shape.n());
        for j in 1..=shape.part(1) {
            for i in 1..=shape.col_len(j) {
                entries.push(rows[i - 1].as_ref()[j - 1]);
            }
        }
        Self::from_column_major(shape, entries)
    }

    /// Builds a tableau from its columns; the column lengths must form a conjugate partition.
    pub fn from_columns<C: AsRef<[u8]>>(cols: &[C]) -> Result<Self> {
        let conj = Partition::new(cols.iter().map(|c| c.as_ref().len()).collect())?;
        let shape = conj.conjugate();
        let entries = cols.iter().flat_map(|c| c.as_ref().iter().copied()).collect();
        Self::from_column_major(shape, entries)
    }

    /// The tableau whose every entry is `m`.
    pub fn constant(shape: Partition, m: u8) -> Self {
        let n = shape.n();
        Self::from_column_major(shape, vec![m; n]).expect("positive letter")
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Column-major entry storage.
    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [u8] {
        &mut self.entries
    }

    /// Index of box `(i, j)` in the column-major storage.
    pub fn box_index(&self, i: usize, j: usize) -> usize {
        self.col_offsets[j - 1] + i - 1
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.entries[self.box_index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        let k = self.box_index(i, j);
        self.entries[k] = v;
    }

    pub fn has_box(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.shape.part(i)
    }

    /// Entries of column `j` (1-based), top to bottom.
    pub fn column(&self, j: usize) -> &[u8] {
        &self.entries[self.col_offsets[j - 1]..self.col_offsets[j]]
    }

    pub(crate) fn column_mut(&mut self, j: usize) -> &mut [u8] {
        let (a, b) = (self.col_offsets[j - 1], self.col_offsets[j]);
        &mut self.entries[a..b]
    }

    /// Entries of row `i` (1-based), left to right.
    pub fn row(&self, i: usize) -> Vec<u8> {
        (1..=self.shape.part(i)).map(|j| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        (1..=self.shape.len()).map(|i| self.row(i)).collect()
    }

    pub fn max_entry(&self) -> u8 {
        self.entries.iter().copied().max().unwrap_or(0)
    }

    /// Multiplicities of the letters `1..=d`.
    pub fn weight(&self, d: usize) -> Weight {
        let mut w = vec![0; d.max(self.max_entry() as usize)];
        for &e in &self.entries {
            w[e as usize - 1] += 1;
        }
        Weight(w)
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows_satisfy(|a, b| a < b)
    }

    pub fn is_row_semistandard(&self) -> bool {
        self.rows_satisfy(|a, b| a <= b)
    }

    pub fn is_column_standard(&self) -> bool {
        (1..=self.shape.part(1)).all(|j| self.column(j).windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_column_semistandard(&self) -> bool {
        (1..=self.shape.part(1)).all(|j| self.column(j).windows(2).all(|w| w[0] <= w[1]))
    }

    fn rows_satisfy(&self, ok: impl Fn(u8, u8) -> bool) -> bool {
        for j in 1..self.shape.part(1) {
            let (left, right) = (self.column(j), self.column(j + 1));
            if left.iter().zip(right).any(|(&a, &b)| !ok(a, b)) {
                return false;
            }
        }
        true
    }

    /// True when some column contains a letter twice.
    pub fn has_repeated_column_entry(&self) -> bool {
        (1..=self.shape.part(1)).any(|j| {
            let c = self.column(j);
            (0..c.len()).any(|a| c[a + 1..].contains(&c[a]))
        })
    }

    /// True when all entries are distinct.
    pub fn is_symmetric_type(&self) -> bool {
        let mut seen = [false; 256];
        self.entries.iter().all(|&e| !std::mem::replace(&mut seen[e as usize], true))
    }

    pub fn satisfies(&self, class: TableauClass) -> bool {
        use TableauClass::*;
        match class {
            All => true,
            RowStandard => self.is_row_standard(),
            ColumnStandard => self.is_column_standard(),
            RowSemistandard => self.is_row_semistandard(),
            ColumnSemistandard => self.is_column_semistandard(),
            Standard => self.is_row_standard() && self.is_column_standard(),
            Semistandard => self.is_row_semistandard() && self.is_column_standard(),
            RowAndColumnSemistandard => self.is_row_semistandard() && self.is_column_semistandard(),
        }
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, "|")?;
            }
            for (k, e) in row.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        write!(f, "]")
    }
}

impl Serialize for Tableau {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableauClass {
    All,
    RowStandard,
    ColumnStandard,
    RowSemistandard,
    ColumnSemistandard,
    Standard,
    Semistandard,
    RowAndColumnSemistandard,
}

impl TableauClass {
    fn row_rule(self) -> Option<bool> {
        use TableauClass::*;
        match self {
            All | ColumnStandard | ColumnSemistandard => None,
            RowStandard | Standard => Some(true),
            RowSemistandard | Semistandard | RowAndColumnSemistandard => Some(false),
        }
    }

    fn col_rule(self) -> Option<bool> {
        use TableauClass::*;
        match self {
            All | RowStandard | RowSemistandard => None,
            ColumnStandard | Standard | Semistandard => Some(true),
            ColumnSemistandard | RowAndColumnSemistandard => Some(false),
        }
    }
}

/// Every tableau of shape `lambda` with entries in `1..=d` belonging to `class`,
/// in lexicographic order of the column-major entry sequence.
pub fn enumerate_tableaux(lambda: &Partition, d: usize, class: TableauClass) -> Vec<Tableau> {
    let mut out = Vec::new();
    for_each_filling(lambda, d, class, |entries| {
        out.push(Tableau::from_column_major(lambda.clone(), entries.to_vec()).expect("valid filling"));
    });
    out
}

/// Streams the column-major entry sequences of [`enumerate_tableaux`] without allocating tableaux.
pub fn for_each_filling(lambda: &Partition, d: usize, class: TableauClass, mut f: impl FnMut(&[u8])) {
    assert!((1..=255).contains(&d), "alphabet size must be in 1..=255");
    let n = lambda.n();
    // For each storage slot: index of the box above (same column) and to the left (same row).
    let mut above = vec![None; n];
    let mut left = vec![None; n];
    let offs = column_offsets(lambda);
    for j in 1..=lambda.part(1) {
        for i in 1..=lambda.col_len(j) {
            let k = offs[j - 1] + i - 1;
            if i > 1 {
                above[k] = Some(k - 1);
            }
            if j > 1 {
                left[k] = Some(offs[j - 2] + i - 1);
            }
        }
    }
    let (row_rule, col_rule) = (class.row_rule(), class.col_rule());
    let mut cur = vec![0u8; n];

    fn rec(
        k: usize,
        d: u8,
        cur: &mut Vec<u8>,
        above: &[Option<usize>],
        left: &[Option<usize>],
        rules: (Option<bool>, Option<bool>),
        f: &mut dyn FnMut(&[u8]),
    ) {
        if k == cur.len() {
            f(cur);
            return;
        }
        let mut lo = 1u8;
        if let (Some(strict), Some(a)) = (rules.1, above[k]) {
            lo = lo.max(cur[a] + strict as u8);
        }
        if let (Some(strict), Some(l)) = (rules.0, left[k]) {
            lo = lo.max(cur[l] + strict as u8);
        }
        for v in lo..=d {
            cur[k] = v;
            rec(k + 1, d, cur, above, left, rules, f);
        }
    }
    rec(0, d as u8, &mut cur, &above, &left, (row_rule, col_rule), &mut f);
}

/// Outcome of comparing two same-shape tableaux in the column ordering.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColOrder {
    Less,
    Greater,
    Equivalent,
}

impl ColOrder {
    pub fn reverse(self) -> Self {
        match self {
            ColOrder::Less => ColOrder::Greater,
            ColOrder::Greater => ColOrder::Less,
            ColOrder::Equivalent => ColOrder::Equivalent,
        }
    }
}

/// Compares `t` and `u` in the column ordering.
///
/// Let `m` be the largest letter whose multiplicity differs in some column and
/// `j` the leftmost such column. The tableau holding more copies of `m` in
/// column `j` is the greater one. Tableaux with equal column multisets are
/// equivalent.
pub fn col_compare(t: &Tableau, u: &Tableau) -> Result<ColOrder> {
    if t.shape() != u.shape() {
        return Err(Error::ShapeMismatch { left: t.shape().to_string(), right: u.shape().to_string() });
    }
    Ok(col_compare_unchecked(t, u))
}

pub(crate) fn col_compare_unchecked(t: &Tableau, u: &Tableau) -> ColOrder {
    let cols = t.shape().part(1);
    let top = t.max_entry().max(u.max_entry()) as usize;
    // counts[m][j] = mult in t minus mult in u.
    let mut diff = vec![0i32; (top + 1) * cols];
    for j in 1..=cols {
        for &e in t.column(j) {
            diff[e as usize * cols + j - 1] += 1;
        }
        for &e in u.column(j) {
            diff[e as usize * cols + j - 1] -= 1;
        }
    }
    for m in (1..=top).rev() {
        for j in 0..cols {
            match diff[m * cols + j].cmp(&0) {
                Ordering::Greater => return ColOrder::Greater,
                Ordering::Less => return ColOrder::Less,
                Ordering::Equal => {}
            }
        }
    }
    ColOrder::Equivalent
}

/// Number of semistandard tableaux of shape `lambda` with entries in `1..=d`,
/// by the hook content formula.
pub fn hook_content_dim(lambda: &Partition, d: usize) -> u64 {
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for (i, j) in lambda.boxes() {
        let f = d as i64 + j as i64 - i as i64;
        if f <= 0 {
            return 0;
        }
        num *= f as u128;
        den *= lambda.hook_length(i, j) as u128;
    }
    (num / den) as u64
}

/// Number of standard tableaux of shape `lambda`, by the hook length formula.
pub fn count_syt(lambda: &Partition) -> u64 {
    let mut num: u128 = 1;
    for k in 2..=lambda.n() as u128 {
        num *= k;
    }
    let den: u128 = lambda.boxes().map(|(i, j)| lambda.hook_length(i, j) as u128).product();
    (num / den) as u64
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = acc * (n as u128 - i) / (i + 1);
    }
    acc as u64
}

/// Number of multisets of size `k` drawn from `n` letters.
pub fn multichoose(n: u64, k: u64) -> u64 {
    if n == 0 {
        return (k == 0) as u64;
    }
    binomial(n + k - 1, k)
}

/// Parity of `C(a+b, a)`: odd exactly when the binary addition of `a` and `b` is carry-free.
pub fn binom_parity(a: u64, b: u64) -> u8 {
    (a & b == 0) as u8
}

/// The least `1 <= i <= c-1` with `C(c, i)` odd; this is the largest power of
/// two dividing `c`, and it exists exactly when `c` is not a power of two.
pub fn min_odd_binomial_index(c: u64) -> Option<u64> {
    assert!(c >= 2, "c must be at least 2");
    if c.is_power_of_two() {
        None
    } else {
        Some(c & c.wrapping_neg())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("4,4,4,2,1").conjugate(), p("5,4,3,3"));
        assert_eq!(Partition::row(6).conjugate(), Partition::column(6));
        assert_eq!(Partition::column(6).conjugate(), Partition::row(6));
    }

    #[test]
    fn parse_shorthand_and_errors() {
        assert_eq!(p("2^2,1"), p("2,2,1"));
        assert_eq!(p("(4,3,2,1^2)"), p("4,3,2,1,1"));
        assert!("".parse::<Partition>().is_err());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("x".parse::<Partition>().is_err());
        assert!(Partition::new(vec![]).is_err());
    }

    #[test]
    fn two_regular() {
        assert!(p("2,1").is_two_regular());
        assert!(!p("2,2,1").is_two_regular());
        assert!(!p("4,3,2,1,1").is_two_regular());
        assert!(p("3,2").is_two_regular());
    }

    #[test]
    fn two_restricted() {
        assert!(p("2,2,1").is_two_restricted());
        assert!(p("1,1,1").is_two_restricted());
        assert!(!p("3,1,1").is_two_restricted());
        assert!(!p("2,2").is_two_restricted());
        assert!(!p("5").is_two_restricted());
    }

    #[test]
    fn partitions_counts() {
        let counts: Vec<usize> = (1..=10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(Partition::all(3), vec![p("3"), p("2,1"), p("1,1,1")]);
    }

    #[test]
    fn column_standard_impossible_is_empty() {
        assert!(enumerate_tableaux(&p("1,1"), 1, TableauClass::ColumnStandard).is_empty());
    }

    #[test]
    fn semistandard_counts_small() {
        assert_eq!(enumerate_tableaux(&p("2,2,1"), 3, TableauClass::Semistandard).len(), 3);
        let ss = enumerate_tableaux(&p("2,1"), 2, TableauClass::Semistandard);
        assert_eq!(ss.len(), 2);
        assert_eq!(ss[0], Tableau::from_rows(&[vec![1, 1], vec![2]]).unwrap());
        assert_eq!(ss[1], Tableau::from_rows(&[vec![1, 2], vec![2]]).unwrap());
    }

    #[test]
    fn enumeration_is_sorted_and_filtered() {
        let lam = p("3,2");
        let all = enumerate_tableaux(&lam, 3, TableauClass::All);
        assert_eq!(all.len(), 243);
        assert!(all.windows(2).all(|w| w[0].entries() < w[1].entries()));
        for class in [
            TableauClass::RowStandard,
            TableauClass::ColumnStandard,
            TableauClass::RowSemistandard,
            TableauClass::ColumnSemistandard,
            TableauClass::Standard,
            TableauClass::Semistandard,
            TableauClass::RowAndColumnSemistandard,
        ] {
            let direct = enumerate_tableaux(&lam, 3, class);
            let filtered: Vec<_> = all.iter().filter(|t| t.satisfies(class)).cloned().collect();
            assert_eq!(direct, filtered, "{class:?}");
        }
    }

    #[test]
    fn col_compare_basics() {
        let t = Tableau::from_rows(&[vec![1, 2], vec![3]]).unwrap();
        assert_eq!(col_compare(&t, &t).unwrap(), ColOrder::Equivalent);
        let swapped = Tableau::from_rows(&[vec![3, 2], vec![1]]).unwrap();
        assert_eq!(col_compare(&t, &swapped).unwrap(), ColOrder::Equivalent);
        let other = Tableau::from_rows(&[vec![1, 2, 3]]).unwrap();
        assert!(col_compare(&t, &other).is_err());
    }

    #[test]
    fn col_compare_extremal_standard_tableaux() {
        let lam = p("4,4,4,2,1");
        let by_cols =
            Tableau::from_columns(&[vec![1, 2, 3, 4, 5], vec![6, 7, 8, 9], vec![10, 11, 12], vec![13, 14, 15]])
                .unwrap();
        let by_rows =
            Tableau::from_rows(&[vec![1, 2, 3, 4], vec![5, 6, 7, 8], vec![9, 10, 11, 12], vec![13, 14], vec![15]])
                .unwrap();
        assert_eq!(by_cols.shape(), &lam);
        assert_eq!(col_compare(&by_cols, &by_rows).unwrap(), ColOrder::Less);
        assert_eq!(col_compare(&by_rows, &by_cols).unwrap(), ColOrder::Greater);
    }

    #[test]
    fn hook_content_examples() {
        for n in 1..=6u64 {
            for d in 1..=5u64 {
                assert_eq!(hook_content_dim(&Partition::row(n as usize), d as usize), binomial(d + n - 1, n));
                assert_eq!(hook_content_dim(&Partition::column(n as usize), d as usize), binomial(d, n));
            }
        }
        assert_eq!(hook_content_dim(&p("2,2,1"), 3), 3);
    }

    #[test]
    fn syt_counts() {
        assert_eq!(count_syt(&Partition::row(5)), 1);
        assert_eq!(count_syt(&p("2,1")), 2);
        assert_eq!(count_syt(&p("2,2,1")), 5);
    }

    #[test]
    fn binomial_parity_examples() {
        assert_eq!(binom_parity(2, 2), 0);
        assert_eq!(binom_parity(1, 3), 0);
        for b in 0..20 {
            assert_eq!(binom_parity(0, b), 1);
        }
    }

    #[test]
    fn min_odd_index_examples() {
        assert_eq!(min_odd_binomial_index(4), None);
        assert_eq!(min_odd_binomial_index(6), Some(2));
        assert_eq!(min_odd_binomial_index(3), Some(1));
        // Pascal's triangle mod 2.
        let mut row = vec![1u8];
        for c in 1..200u64 {
            let mut next = vec![1u8; row.len() + 1];
            for i in 1..row.len() {
                next[i] = row[i - 1] ^ row[i];
            }
            row = next;
            if c < 2 {
                continue;
            }
            let brute = (1..c).find(|&i| row[i as usize] == 1);
            assert_eq!(min_odd_binomial_index(c), brute, "c={c}");
        }
    }

    #[test]
    fn dominance() {
        assert!(p("3,1").dominates(&p("2,2")));
        assert!(!p("2,2").dominates(&p("3,1")));
        assert!(!p("3,1,1,1").dominates(&p("2,2,2")));
        assert!(!p("2,2,2").dominates(&p("3,1,1,1")));
        assert!(p("2,2").dominates(&p("2,2")));
    }
}
