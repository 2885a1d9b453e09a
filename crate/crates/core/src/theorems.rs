//! Closed-form predictions and the drivers that check them against the
//! constructions in [`crate::module_builder`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Ratio;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::combinatorics::{
    binomial, enumerate_tableaux, hook_content_dim, min_odd_binomial_index, Partition, TableauClass, Weight,
};
use crate::error::{Error, Result};
use crate::linalg::FieldPrime;
use crate::module_builder::{
    build_dual_weyl, build_gtensor_specht, simple_module_weight_table, u_lambda_dim, u_lambda_weight_table, verify_iso,
    WeightTable,
};
use crate::report::{ReportItem, SuiteOutcome};
use crate::tabloids::{build_basis, ker_q_generators, TabloidKind};

type Q = Ratio<i128>;

/// Whether `G⊗(S^λ) ≅ ∇^λ(E)` in characteristic 2 for large enough `d`.
pub fn predict_iso(lambda: &Partition) -> bool {
    if lambda.is_two_regular() {
        return true;
    }
    lambda.part(1) == lambda.part(2)
        && lambda.part(2) >= lambda.part(3) + 2
        && lambda.without_first_part().is_none_or(|t| t.is_two_regular())
}

/// The least `d` from which non-isomorphism is guaranteed for a partition
/// with `predict_iso(λ) = false`; `None` when an isomorphism is predicted.
pub fn weak_d_bound(lambda: &Partition) -> Option<usize> {
    if predict_iso(lambda) {
        return None;
    }
    let n = lambda.n() as i64;
    let part = |i: usize| lambda.part(i) as i64;
    let tail_singular = (2..lambda.len()).any(|r| lambda.part(r) == lambda.part(r + 1));
    let bound = if tail_singular {
        let r = (2..lambda.len()).find(|&r| lambda.part(r) == lambda.part(r + 1)).expect("tail is 2-singular");
        n + 1 - (part(r - 1) + part(r) + part(r + 1))
    } else {
        n + 1 - (part(1) + part(2) + part(3))
    };
    Some(bound.max(1) as usize)
}

/// Which alphabet sizes [`verify_characterization`] checks.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum DPolicy {
    /// `d = max(1, n - 2)`.
    #[default]
    Threshold,
    /// `d = max(1, n - 2)` and `d = n`.
    ThresholdAndN,
    /// The per-partition bound of [`weak_d_bound`] when non-isomorphism is predicted, else the threshold.
    WeakBound,
    Explicit(Vec<usize>),
}

impl DPolicy {
    fn ds(&self, lambda: &Partition) -> Vec<usize> {
        let n = lambda.n();
        let threshold = n.saturating_sub(2).max(1);
        let mut ds = match self {
            DPolicy::Threshold => vec![threshold],
            DPolicy::ThresholdAndN => vec![threshold, n.max(1)],
            DPolicy::WeakBound => vec![weak_d_bound(lambda).unwrap_or(threshold)],
            DPolicy::Explicit(ds) => ds.clone(),
        };
        ds.sort_unstable();
        ds.dedup();
        ds
    }
}

/// Prediction against construction for one partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsoVerdict {
    pub lambda: Partition,
    pub predicted: bool,
    pub verified_at: Vec<(usize, bool)>,
}

impl IsoVerdict {
    /// Alphabet sizes where the construction contradicts a claim of the characterization.
    ///
    /// A predicted isomorphism must hold for every `d`; a predicted
    /// non-isomorphism is only claimed from `d >= n - 2` or the weak bound.
    pub fn violations(&self) -> Vec<usize> {
        let n = self.lambda.n();
        let weak = weak_d_bound(&self.lambda);
        self.verified_at
            .iter()
            .filter(|&&(d, v)| {
                if self.predicted {
                    !v
                } else {
                    let claimed = d + 2 >= n || weak.is_some_and(|b| d >= b);
                    claimed && v
                }
            })
            .map(|&(d, _)| d)
            .collect()
    }

    pub fn is_iso_at(&self, d: usize) -> Option<bool> {
        self.verified_at.iter().find(|(e, _)| *e == d).map(|&(_, v)| v)
    }
}

/// Runs [`verify_iso`] in characteristic 2 for every `λ ⊢ n` at the policy's alphabet sizes.
pub fn verify_characterization(n: usize, policy: &DPolicy) -> Result<Vec<IsoVerdict>> {
    Partition::all(n)
        .into_par_iter()
        .map(|lambda| {
            let verified_at = policy
                .ds(&lambda)
                .into_iter()
                .map(|d| Ok((d, verify_iso(&lambda, d, FieldPrime::TWO)?)))
                .collect::<Result<Vec<_>>>()?;
            Ok(IsoVerdict { predicted: predict_iso(&lambda), lambda, verified_at })
        })
        .collect()
}

/// Dimension of `G⊗(S^λ)` at `d = 1` in characteristic 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum D1Prediction {
    Zero,
    Line,
}

impl D1Prediction {
    pub fn dim(self) -> usize {
        match self {
            D1Prediction::Zero => 0,
            D1Prediction::Line => 1,
        }
    }
}

pub fn d1_predict(lambda: &Partition) -> D1Prediction {
    let zero = (1..lambda.part(1)).any(|j| {
        let c = lambda.col_len(j) as u64 + 1;
        min_odd_binomial_index(c).is_some_and(|two_nu| lambda.col_len(j + 1) as u64 >= two_nu)
    });
    if zero {
        D1Prediction::Zero
    } else {
        D1Prediction::Line
    }
}

/// `dim G⊗(S^(a,1^(l-1)))` at `d = 2` in characteristic 2.
pub fn hook_d2_dim(a: usize, l: usize) -> Result<usize> {
    if a < 2 || l < 2 {
        return Err(Error::Unsupported(format!("hook needs a, l >= 2, got a={a}, l={l}")));
    }
    Ok(if l.is_multiple_of(2) { a * l / 2 } else { (a + 1) * (l + 1) / 2 })
}

/// Weight multiset of `Fr(Sym^(l/2-1) E) ⊗ Sym^(a-1) E ⊗ det` at `d = 2`.
pub fn frobenius_side_weights(a: usize, l: usize) -> Result<WeightTable> {
    if !l.is_multiple_of(2) || a < 1 || l < 2 {
        return Err(Error::Unsupported(format!("need a >= 1 and even l >= 2, got a={a}, l={l}")));
    }
    let m = l / 2 - 1;
    let mut t = WeightTable::default();
    for i in 0..=m {
        for j in 0..a {
            t.insert(Weight(vec![2 * i + j + 1, 2 * (m - i) + (a - 1 - j) + 1]), 1);
        }
    }
    Ok(t)
}

/// Compares the weight table of the constructed hook module at `d = 2` with
/// [`frobenius_side_weights`]. This checks characters only.
pub fn frobenius_weight_check(a: usize, l: usize) -> Result<bool> {
    let rhs = frobenius_side_weights(a, l)?;
    let lhs = build_gtensor_specht(&Partition::hook(a, l), 2, FieldPrime::TWO)?.weight_table();
    Ok(lhs == rhs)
}

fn shape_221() -> Partition {
    Partition::new(vec![2, 2, 1]).expect("valid")
}

/// Number of distinct weights among the `ker q` generators of `(2,2,1)`, grouped by sorted type.
pub fn table1_weight_counts(d: usize) -> Result<BTreeMap<Partition, u64>> {
    let basis = build_basis(&shape_221(), d, TabloidKind::SkewColumn(FieldPrime::TWO));
    let weights: BTreeSet<Weight> = ker_q_generators(&basis)?
        .iter()
        .map(|g| basis.weight_of(g.terms().next().expect("unit vector").0).clone())
        .collect();
    let mut out = BTreeMap::new();
    for w in weights {
        *out.entry(w.sorted_type()).or_insert(0) += 1;
    }
    Ok(out)
}

/// A row of the golden weight-count table: `coefficient * C(d, k)` weights of the given type.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightCountFormula {
    pub sorted_type: Partition,
    pub coefficient: u64,
    pub k: u64,
}

impl WeightCountFormula {
    pub fn eval(&self, d: usize) -> u64 {
        self.coefficient * binomial(d as u64, self.k)
    }
}

impl fmt::Display for WeightCountFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.coefficient, self.k) {
            (1, 1) => write!(f, "d"),
            (1, k) => write!(f, "C(d,{k})"),
            (c, k) => write!(f, "{c}*C(d,{k})"),
        }
    }
}

pub const TABLE1_GOLDEN: &str = include_str!("../golden/table1.csv");

/// Parses `sorted_type,coefficient,k` rows (header first).
pub fn parse_weight_count_golden(text: &str) -> Result<Vec<WeightCountFormula>> {
    let bad = |l: &str| Error::Io(format!("malformed golden row: {l}"));
    text.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let (ty, rest) = line
                .rsplit_once(',')
                .and_then(|(a, k)| a.rsplit_once(',').map(|(t, c)| (t, (c, k))))
                .ok_or_else(|| bad(line))?;
            let ty = ty.trim().trim_matches('"');
            Ok(WeightCountFormula {
                sorted_type: ty.parse()?,
                coefficient: rest.0.trim().parse().map_err(|_| bad(line))?,
                k: rest.1.trim().parse().map_err(|_| bad(line))?,
            })
        })
        .collect()
}

/// Golden weight-count formulas.
pub fn table1_formulas() -> Vec<WeightCountFormula> {
    parse_weight_count_golden(TABLE1_GOLDEN).expect("embedded golden file parses")
}

/// Rational polynomial in `d`, coefficients from degree 0 upwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly(pub Vec<Q>);

impl Poly {
    pub fn from_fractions(coeffs: &[(i128, i128)]) -> Self {
        Poly(coeffs.iter().map(|&(a, b)| Q::new(a, b)).collect())
    }

    pub fn eval(&self, d: usize) -> Q {
        let x = Q::from_integer(d as i128);
        self.0.iter().rev().fold(Q::zero(), |acc, c| acc * x + c)
    }
}

/// Simple module dimensions for `n = 5` in characteristic 2, as polynomials in `d`.
pub fn simple_dimension_polynomials_n5() -> Vec<(Partition, Poly)> {
    let rows: [(&str, [(i128, i128); 6]); 7] = [
        ("1^5", [(0, 1), (1, 5), (-5, 12), (7, 24), (-1, 12), (1, 120)]),
        ("2,1^3", [(0, 1), (-1, 5), (1, 6), (1, 6), (-1, 6), (1, 30)]),
        ("2^2,1", [(0, 1), (-1, 5), (1, 2), (-1, 3), (0, 1), (1, 30)]),
        ("3,1^2", [(0, 1), (0, 1), (1, 3), (-1, 2), (1, 6), (0, 1)]),
        ("3,2", [(0, 1), (0, 1), (-1, 2), (1, 2), (0, 1), (0, 1)]),
        ("4,1", [(0, 1), (0, 1), (-1, 3), (0, 1), (1, 3), (0, 1)]),
        ("5", [(0, 1), (0, 1), (1, 1), (0, 1), (0, 1), (0, 1)]),
    ];
    rows.iter().map(|(p, c)| (p.parse().expect("valid"), Poly::from_fractions(c))).collect()
}

/// Multiplicities `[∇^μ : L^ν]` in characteristic 2.
///
/// Rows are indexed by `μ`; nonzero entries have `ν ⊴ μ` and the diagonal is 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DecompositionData {
    rows: BTreeMap<Partition, BTreeMap<Partition, u32>>,
}

pub const DECOMPOSITION_DATA_ENV: &str = "SPECHT_DECOMP_DATA";
pub const EMBEDDED_DECOMPOSITION_DATA: &str = include_str!("../data/decomposition_p2.txt");

/// What [`DecompositionData::validate`] checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationSummary {
    pub ns: Vec<usize>,
    pub rows: usize,
    pub d_range: (usize, usize),
    pub polynomial_rows_checked: usize,
}

/// Alphabet sizes used by the validation gates.
pub const VALIDATION_D_MAX: usize = 8;

impl DecompositionData {
    /// Parses `(mu); (nu1):mult1, (nu2):mult2` lines; `#` starts a comment. No validation.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |no: usize, msg: &str| Error::DecompositionData(format!("line {}: {msg}", no + 1));
        let mut rows = BTreeMap::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (mu, rest) = line.split_once(';').ok_or_else(|| err(no, "expected 'mu; nu:mult, ...'"))?;
            let mu: Partition = mu.trim().parse().map_err(|e: Error| err(no, &e.to_string()))?;
            let mut row = BTreeMap::new();
            let mut rest = rest.trim();
            while !rest.is_empty() {
                let close = rest
                    .find(')')
                    .filter(|_| rest.starts_with('('))
                    .ok_or_else(|| err(no, "entry must be (nu):mult"))?;
                let nu: Partition = rest[..=close].parse().map_err(|e: Error| err(no, &e.to_string()))?;
                let tail = rest[close + 1..]
                    .trim_start()
                    .strip_prefix(':')
                    .ok_or_else(|| err(no, "missing ':' after partition"))?;
                let (m, next) = tail.split_once(',').unwrap_or((tail, ""));
                let m: u32 = m.trim().parse().map_err(|_| err(no, "multiplicity must be a nonnegative integer"))?;
                if row.insert(nu, m).is_some() {
                    return Err(err(no, "repeated entry"));
                }
                rest = next.trim();
            }
            row.retain(|_, m| *m > 0);
            if rows.insert(mu, row).is_some() {
                return Err(err(no, "repeated row"));
            }
        }
        Ok(Self { rows })
    }

    pub fn from_rows(rows: BTreeMap<Partition, BTreeMap<Partition, u32>>) -> Self {
        Self { rows }
    }

    /// Parses and validates.
    pub fn load(text: &str) -> Result<Self> {
        let data = Self::parse(text)?;
        data.validate()?;
        Ok(data)
    }

    /// The validated data shipped with the crate.
    pub fn embedded() -> Result<Self> {
        Self::load(EMBEDDED_DECOMPOSITION_DATA)
    }

    /// Reads the file named by [`DECOMPOSITION_DATA_ENV`] if set, else the embedded data.
    pub fn from_env_or_embedded() -> Result<Self> {
        match std::env::var_os(DECOMPOSITION_DATA_ENV) {
            Some(path) => {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.to_string_lossy())))?;
                Self::load(&text)
            }
            None => Self::embedded(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (mu, row) in &self.rows {
            let entries: Vec<String> = row.iter().rev().map(|(nu, m)| format!("{nu}:{m}")).collect();
            out.push_str(&format!("{mu}; {}\n", entries.join(", ")));
        }
        out
    }

    pub fn ns(&self) -> Vec<usize> {
        let s: BTreeSet<usize> = self.rows.keys().map(Partition::n).collect();
        s.into_iter().collect()
    }

    pub fn row(&self, mu: &Partition) -> Option<&BTreeMap<Partition, u32>> {
        self.rows.get(mu)
    }

    pub fn rows(&self) -> &BTreeMap<Partition, BTreeMap<Partition, u32>> {
        &self.rows
    }

    pub fn entry(&self, mu: &Partition, nu: &Partition) -> u32 {
        self.rows.get(mu).and_then(|r| r.get(nu)).copied().unwrap_or(0)
    }

    fn require(&self, mu: &Partition) -> Result<&BTreeMap<Partition, u32>> {
        self.rows.get(mu).ok_or_else(|| Error::DecompositionData(format!("no row for {mu}")))
    }

    /// Structural gates (complete, unitriangular for dominance), nonnegative
    /// simple dimensions vanishing exactly when `ℓ(μ) > d` for `d = 1..=8`,
    /// and, for `n = 5`, agreement with [`simple_dimension_polynomials_n5`]
    /// through the dimension identity `Σ_ν [∇^μ:L^ν] dim L^ν = dim ∇^μ`.
    pub fn validate(&self) -> Result<ValidationSummary> {
        let bad = |m: String| Err(Error::DecompositionData(m));
        if self.rows.is_empty() {
            return bad("no rows".into());
        }
        for (mu, row) in &self.rows {
            let n = mu.n();
            for p in Partition::all(n) {
                if !self.rows.contains_key(&p) {
                    return bad(format!("n={n} is missing the row for {p}"));
                }
            }
            if row.get(mu) != Some(&1) {
                return bad(format!("[∇^{mu} : L^{mu}] must be 1"));
            }
            for nu in row.keys() {
                if nu.n() != n || !mu.dominates(nu) {
                    return bad(format!("[∇^{mu} : L^{nu}] is nonzero but {nu} is not dominated by {mu}"));
                }
            }
        }
        for d in 1..=VALIDATION_D_MAX {
            for mu in self.rows.keys() {
                let l = self.dim_l_signed(mu, d)?;
                if l < 0 {
                    return bad(format!("dim L^{mu} at d={d} is negative ({l})"));
                }
                if (l == 0) != (mu.len() > d) {
                    return bad(format!(
                        "dim L^{mu} at d={d} is {l}, but L^{mu} vanishes exactly when it has more than d rows"
                    ));
                }
            }
        }
        let mut checked = 0;
        if self.ns().contains(&5) {
            let polys: BTreeMap<Partition, Poly> = simple_dimension_polynomials_n5().into_iter().collect();
            for (mu, row) in self.rows.iter().filter(|(m, _)| m.n() == 5) {
                for d in 1..=VALIDATION_D_MAX {
                    let lhs: Q = row.iter().map(|(nu, &m)| polys[nu].eval(d) * Q::from_integer(m as i128)).sum();
                    let rhs = Q::from_integer(hook_content_dim(mu, d) as i128);
                    if lhs != rhs {
                        return bad(format!("dimension identity fails for {mu} at d={d}: {lhs} != {rhs}"));
                    }
                    let direct = Q::from_integer(self.dim_l_signed(mu, d)?);
                    if direct != polys[mu].eval(d) {
                        return bad(format!("dim L^{mu} at d={d} is {direct}, polynomial gives {}", polys[mu].eval(d)));
                    }
                }
                checked += 1;
            }
        }
        Ok(ValidationSummary {
            ns: self.ns(),
            rows: self.rows.len(),
            d_range: (1, VALIDATION_D_MAX),
            polynomial_rows_checked: checked,
        })
    }

    /// `dim L^μ` by unitriangular inversion against the hook content formula.
    fn dim_l_signed(&self, mu: &Partition, d: usize) -> Result<i128> {
        let mut memo = BTreeMap::new();
        self.dim_l_rec(mu, d, &mut memo)
    }

    fn dim_l_rec(&self, mu: &Partition, d: usize, memo: &mut BTreeMap<Partition, i128>) -> Result<i128> {
        if let Some(&v) = memo.get(mu) {
            return Ok(v);
        }
        let row = self.require(mu)?;
        let mut v = hook_content_dim(mu, d) as i128;
        for (nu, &m) in row {
            if nu != mu {
                v -= m as i128 * self.dim_l_rec(nu, d, memo)?;
            }
        }
        memo.insert(mu.clone(), v);
        Ok(v)
    }

    /// Weight multiplicities of `L^ν` on dominant weights of length `d`, by inversion against Kostka numbers.
    pub fn simple_character(&self, nu: &Partition, d: usize) -> Result<BTreeMap<Weight, i64>> {
        let mut memo = BTreeMap::new();
        self.simple_character_rec(nu, d, &mut memo)
    }

    fn simple_character_rec(
        &self,
        nu: &Partition,
        d: usize,
        memo: &mut BTreeMap<Partition, BTreeMap<Weight, i64>>,
    ) -> Result<BTreeMap<Weight, i64>> {
        if let Some(v) = memo.get(nu) {
            return Ok(v.clone());
        }
        let row = self.require(nu)?.clone();
        let mut ch: BTreeMap<Weight, i64> =
            dominant_schur_character(nu, d).into_iter().map(|(w, k)| (w, k as i64)).collect();
        for (kappa, m) in row {
            if &kappa != nu {
                for (w, k) in self.simple_character_rec(&kappa, d, memo)? {
                    *ch.entry(w).or_insert(0) -= m as i64 * k;
                }
            }
        }
        ch.retain(|_, k| *k != 0);
        memo.insert(nu.clone(), ch.clone());
        Ok(ch)
    }
}

/// `dim L^μ(E)` at `d` from decomposition data.
pub fn dim_l(mu: &Partition, d: usize, data: &DecompositionData) -> Result<u64> {
    let v = data.dim_l_signed(mu, d)?;
    u64::try_from(v).map_err(|_| Error::DecompositionData(format!("dim L^{mu} at d={d} is negative ({v})")))
}

/// Kostka numbers `K_{μ,w}` for dominant weights `w` of length `d`.
fn dominant_schur_character(mu: &Partition, d: usize) -> BTreeMap<Weight, u64> {
    let mut out = BTreeMap::new();
    if mu.len() > d {
        return out;
    }
    for t in enumerate_tableaux(mu, d, TableauClass::Semistandard) {
        let w = t.weight(d);
        if w.is_dominant() {
            *out.entry(w).or_insert(0) += 1;
        }
    }
    out
}

/// Derives `[∇^μ : L^ν]` for all `μ ⊢ n` by peeling simple characters,
/// computed directly by [`simple_module_weight_table`], off Schur characters at `d = n`.
pub fn derive_decomposition_rows(n: usize, p: FieldPrime) -> Result<BTreeMap<Partition, BTreeMap<Partition, u32>>> {
    let parts = Partition::all(n);
    let simples: BTreeMap<Partition, WeightTable> = parts
        .par_iter()
        .map(|nu| Ok((nu.clone(), simple_module_weight_table(nu, n, p)?.dominant())))
        .collect::<Result<_>>()?;
    let mut rows = BTreeMap::new();
    for mu in &parts {
        let mut rest: BTreeMap<Weight, i64> =
            dominant_schur_character(mu, n).into_iter().map(|(w, k)| (w, k as i64)).collect();
        let mut row = BTreeMap::new();
        while let Some((w, &m)) = rest.iter().rev().find(|(_, &k)| k != 0) {
            if m < 0 {
                return Err(Error::DecompositionData(format!("negative remainder at weight {w} for {mu}")));
            }
            let nu = w.sorted_type();
            for (x, k) in simples[&nu].iter() {
                *rest.entry(x.clone()).or_insert(0) -= m * k as i64;
            }
            row.insert(nu, m as u32);
        }
        rows.insert(mu.clone(), row);
    }
    Ok(rows)
}

/// Composition factor multiplicities keyed by partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CompFactorMultiset(pub BTreeMap<Partition, u32>);

impl CompFactorMultiset {
    pub fn get(&self, nu: &Partition) -> u32 {
        self.0.get(nu).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add(&mut self, other: &CompFactorMultiset) {
        for (nu, &m) in &other.0 {
            *self.0.entry(nu.clone()).or_insert(0) += m;
        }
        self.0.retain(|_, m| *m > 0);
    }

    /// Factors of `∇^μ`.
    pub fn of_nabla(mu: &Partition, data: &DecompositionData) -> Result<Self> {
        Ok(Self(data.require(mu)?.clone()))
    }

    /// `Σ m_ν dim L^ν` at `d`.
    pub fn dim_at(&self, d: usize, data: &DecompositionData) -> Result<u64> {
        self.0.iter().map(|(nu, &m)| Ok(m as u64 * dim_l(nu, d, data)?)).sum()
    }
}

impl fmt::Display for CompFactorMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(nu, m)| format!("{nu}:{m}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// Result of [`composition_factors_u`] with the evidence used.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompFactorSolution {
    pub lambda: Partition,
    pub factors: CompFactorMultiset,
    /// Size of the square character system (number of partitions of `n`).
    pub system_size: usize,
    /// `(d, dim U^λ, Σ m_ν dim L^ν)` for `d = 1..=#partitions(n)`.
    pub dimension_checks: Vec<(usize, u64, u64)>,
    /// Rank over Q of the matrix `[dim L^ν(d)]` for the same `d`; full rank would make dimensions alone decisive.
    pub dimension_system_rank: usize,
}

/// Solves `A x = b` exactly; `None` unless `A` is square of full rank.
fn solve_exact(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) || b.len() != n {
        return None;
    }
    let mut m: Vec<Vec<Q>> = a.iter().zip(b).map(|(r, x)| r.iter().cloned().chain([*x]).collect()).collect();
    for c in 0..n {
        let piv = (c..n).find(|&r| !m[r][c].is_zero())?;
        m.swap(c, piv);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c];
                let pivot_row = m[c].clone();
                for (x, y) in m[r].iter_mut().zip(pivot_row) {
                    *x -= f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n]).collect())
}

fn rank_exact(rows: &[Vec<Q>]) -> usize {
    let mut m = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, piv);
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c] / pivot_row[c];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Composition factors of `U^λ` in characteristic 2 for `λ ⊢ n <= 5`.
///
/// The dimension polynomials of the simples are linearly dependent for
/// `n = 5`, so dimensions alone cannot separate the factors. Instead the
/// square system over dominant weights `w ⊢ n` at `d = n`,
/// `Σ_ν m_ν [L^ν]_w = [U^λ]_w`, is solved; it is unitriangular. The
/// solution must be integral and nonnegative, and it is checked against
/// `dim U^λ` at `d = 1..=#partitions(n)`.
pub fn composition_factors_u(lambda: &Partition, data: &DecompositionData) -> Result<CompFactorSolution> {
    let n = lambda.n();
    if n > 5 {
        return Err(Error::Unsupported(format!("composition factors are supported for n <= 5, got n={n}")));
    }
    let parts = Partition::all(n);
    let weights: Vec<Weight> = parts.iter().map(|p| Weight::of_partition(p, n).expect("len <= n")).collect();
    let chars: Vec<BTreeMap<Weight, i64>> =
        parts.iter().map(|nu| data.simple_character(nu, n)).collect::<Result<_>>()?;
    let a: Vec<Vec<Q>> = weights
        .iter()
        .map(|w| chars.iter().map(|ch| Q::from_integer(ch.get(w).copied().unwrap_or(0) as i128)).collect())
        .collect();
    let u = u_lambda_weight_table(lambda, n)?;
    let b: Vec<Q> = weights.iter().map(|w| Q::from_integer(u.get(w) as i128)).collect();
    let x = solve_exact(&a, &b).ok_or_else(|| Error::Solver(format!("character system for {lambda} is singular")))?;
    let mut factors = CompFactorMultiset::default();
    for (nu, v) in parts.iter().zip(&x) {
        if !v.is_integer() || v.is_negative() {
            return Err(Error::Solver(format!("multiplicity of L^{nu} in U^{lambda} is {v}")));
        }
        let m = v.to_integer() as u32;
        if m > 0 {
            factors.0.insert(nu.clone(), m);
        }
    }
    let points: Vec<usize> = (1..=parts.len()).collect();
    let dimension_checks = check_factor_dimensions(lambda, &factors, data, &points)?;
    if let Some((d, want, got)) = dimension_checks.iter().find(|(_, a, b)| a != b) {
        return Err(Error::Solver(format!("dim U^{lambda} at d={d} is {want}, factors give {got}")));
    }
    let dim_rows: Vec<Vec<Q>> = points
        .iter()
        .map(|&d| parts.iter().map(|nu| Ok(Q::from_integer(dim_l(nu, d, data)? as i128))).collect::<Result<_>>())
        .collect::<Result<_>>()?;
    Ok(CompFactorSolution {
        lambda: lambda.clone(),
        factors,
        system_size: parts.len(),
        dimension_checks,
        dimension_system_rank: rank_exact(&dim_rows),
    })
}

/// `(d, dim U^λ, Σ m_ν dim L^ν)` at each `d` in `points`.
pub fn check_factor_dimensions(
    lambda: &Partition,
    factors: &CompFactorMultiset,
    data: &DecompositionData,
    points: &[usize],
) -> Result<Vec<(usize, u64, u64)>> {
    points.par_iter().map(|&d| Ok((d, u_lambda_dim(lambda, d)? as u64, factors.dim_at(d, data)?))).collect()
}

/// Composition factors of `G⊗(S^λ)`: those of `∇^λ` plus those of `U^λ`.
pub fn gtensor_factors(lambda: &Partition, data: &DecompositionData) -> Result<CompFactorMultiset> {
    let mut f = CompFactorMultiset::of_nabla(lambda, data)?;
    f.add(&composition_factors_u(lambda, data)?.factors);
    Ok(f)
}

/// Whether `factors` is a sum of composition-factor multisets of dual Weyl modules.
pub fn nabla_filtration_feasible(factors: &CompFactorMultiset, data: &DecompositionData) -> Result<bool> {
    if factors.is_empty() {
        return Ok(true);
    }
    let n = factors.0.keys().next().expect("nonempty").n();
    if factors.0.keys().any(|p| p.n() != n) {
        return Ok(false);
    }
    let mus = Partition::all(n);
    let rows: Vec<&BTreeMap<Partition, u32>> = mus.iter().map(|m| data.require(m)).collect::<Result<_>>()?;
    let target: Vec<i64> = mus.iter().map(|nu| factors.get(nu) as i64).collect();
    let row_vecs: Vec<Vec<i64>> =
        rows.iter().map(|r| mus.iter().map(|nu| r.get(nu).copied().unwrap_or(0) as i64).collect()).collect();
    // Each c_μ is at most the total number of factors, since every row has a diagonal 1.
    fn search(k: usize, rest: &mut [i64], rows: &[Vec<i64>]) -> bool {
        if rest.iter().all(|&x| x == 0) {
            return true;
        }
        if k == rows.len() {
            return false;
        }
        let max_c = rows[k].iter().zip(rest.iter()).filter(|(&r, _)| r > 0).map(|(&r, &x)| x / r).min().unwrap_or(0);
        for c in 0..=max_c {
            rest.iter_mut().zip(&rows[k]).for_each(|(x, r)| *x -= c * r);
            let found = search(k + 1, rest, rows);
            rest.iter_mut().zip(&rows[k]).for_each(|(x, r)| *x += c * r);
            if found {
                return true;
            }
        }
        false
    }
    let mut rest = target;
    Ok(search(0, &mut rest, &row_vecs))
}

/// Partitions of `n` (ascending) with `G⊗(S^λ) ≇ ∇^λ(E)` at `d = n`, each with the composition factors of `U^λ`.
pub fn table3_rows(n: usize, data: &DecompositionData) -> Result<Vec<(Partition, CompFactorMultiset)>> {
    non_iso_list(n, n)?
        .into_iter()
        .map(|lambda| {
            let f = composition_factors_u(&lambda, data)?.factors;
            Ok((lambda, f))
        })
        .collect()
}

pub const TABLE3_GOLDEN_N4: &str = include_str!("../golden/table3_n4.csv");
pub const TABLE3_GOLDEN_N5: &str = include_str!("../golden/table3_n5.csv");

pub fn table3_golden(n: usize) -> Option<&'static str> {
    match n {
        4 => Some(TABLE3_GOLDEN_N4),
        5 => Some(TABLE3_GOLDEN_N5),
        _ => None,
    }
}

/// CSV with one row per `λ` and one column per factor label, blank for zero.
pub fn table3_csv(rows: &[(Partition, CompFactorMultiset)]) -> String {
    let labels: BTreeSet<&Partition> = rows.iter().flat_map(|(_, f)| f.0.keys()).collect();
    let header: Vec<String> =
        std::iter::once("lambda".to_string()).chain(labels.iter().map(|p| p.to_string())).collect();
    let body: Vec<Vec<String>> = rows
        .iter()
        .map(|(lam, f)| {
            std::iter::once(lam.to_string())
                .chain(labels.iter().map(|nu| match f.get(nu) {
                    0 => String::new(),
                    m => m.to_string(),
                }))
                .collect()
        })
        .collect();
    crate::report::to_csv(&header, &body)
}

/// CSV of weight counts with the golden formula alongside.
pub fn table1_csv(d: usize, counts: &BTreeMap<Partition, u64>) -> String {
    let header = ["dominant_weight", "count", "formula", "formula_value"].map(String::from);
    let body: Vec<Vec<String>> = table1_formulas()
        .iter()
        .map(|f| {
            vec![
                f.sorted_type.to_string(),
                counts.get(&f.sorted_type).copied().unwrap_or(0).to_string(),
                f.to_string(),
                f.eval(d).to_string(),
            ]
        })
        .collect();
    crate::report::to_csv(&header, &body)
}

/// Degree of the minimal polynomial through `(x_i, y_i)` via Newton divided differences; `None` for the zero polynomial.
pub fn interpolation_degree(points: &[(usize, u64)]) -> Option<usize> {
    let xs: Vec<Q> = points.iter().map(|&(x, _)| Q::from_integer(x as i128)).collect();
    let mut col: Vec<Q> = points.iter().map(|&(_, y)| Q::from_integer(y as i128)).collect();
    let mut coeffs = vec![col[0]];
    for k in 1..points.len() {
        col = (0..col.len() - 1).map(|i| (col[i + 1] - col[i]) / (xs[i + k] - xs[i])).collect();
        coeffs.push(col[0]);
    }
    coeffs.iter().rposition(|c| !c.is_zero())
}

/// `(d, dim)` samples.
pub type DimPoints = Vec<(usize, u64)>;

/// `dim U^λ` at `d = n-1..=n+4` with the degree of the interpolating polynomial.
pub fn u_lambda_degree(lambda: &Partition) -> Result<(DimPoints, Option<usize>)> {
    let n = lambda.n();
    let pts = (n.saturating_sub(1).max(1)..=n + 4)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&d| Ok((d, u_lambda_dim(lambda, d)? as u64)))
        .collect::<Result<Vec<_>>>()?;
    let deg = interpolation_degree(&pts);
    Ok((pts, deg))
}

/// `dim U^(2,2,1) = (d^4 + 5 d^2) / 6`.
pub fn u221_formula(d: usize) -> u64 {
    let d = d as u64;
    (d.pow(4) + 5 * d * d) / 6
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

/// Isomorphism away from characteristic 2, with matching dimensions and weight tables.
pub fn suite_thm1(n_max: usize, d_max: usize) -> Result<SuiteOutcome> {
    let jobs: Vec<(Partition, usize, FieldPrime)> = (1..=n_max)
        .flat_map(Partition::all)
        .flat_map(|l| (1..=d_max).flat_map(move |d| [FieldPrime::THREE, FieldPrime::FIVE].map(|p| (l.clone(), d, p))))
        .collect();
    let items = jobs
        .par_iter()
        .map(|(l, d, p)| {
            let iso = verify_iso(l, *d, *p)?;
            let g = build_gtensor_specht(l, *d, *p)?;
            let nb = build_dual_weyl(l, *d, *p)?;
            let ok = iso && g.dim() == nb.dim() && g.weight_table() == nb.weight_table();
            Ok(ReportItem::new(l, "iso-odd-char").d(*d).p(p.p()).value(g.dim()).expected(nb.dim()).verdict(ok))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut out = SuiteOutcome::default();
    items.into_iter().for_each(|i| out.push(i));
    Ok(out)
}

/// The characterization in characteristic 2 for `n <= n_max`, plus the explicit non-iso lists for `n = 4, 5`.
pub fn suite_thm2(n_max: usize, policy: &DPolicy) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    for n in 1..=n_max {
        for v in verify_characterization(n, policy)? {
            let bad = v.violations();
            for &(d, iso) in &v.verified_at {
                out.push(
                    ReportItem::new(&v.lambda, "iso-char2")
                        .d(d)
                        .p(2)
                        .value(iso)
                        .expected(v.predicted)
                        .verdict(!bad.contains(&d)),
                );
            }
        }
    }
    for (n, expected) in [(4, vec!["1^4", "2,1^2"]), (5, vec!["1^5", "2,1^3", "2^2,1", "3,1^2"])] {
        if n > n_max {
            continue;
        }
        let got = non_iso_list(n, n)?;
        let want: Vec<Partition> = expected.iter().map(|s| s.parse().expect("valid")).collect();
        out.push(ReportItem::new(format!("n={n}"), "non-iso-list").d(n).p(2).value(&got).expected(&want));
    }
    Ok(out)
}

/// Partitions of `n` for which `ker q ⊄ skGR` at `d`, in ascending order.
pub fn non_iso_list(n: usize, d: usize) -> Result<Vec<Partition>> {
    let mut v: Vec<Partition> = Partition::all(n)
        .into_par_iter()
        .map(|l| Ok((!verify_iso(&l, d, FieldPrime::TWO)?).then_some(l)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    v.sort();
    Ok(v)
}

/// The `d = 1` prediction against the constructed dimension.
pub fn suite_d1(n_max: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    for lambda in (1..=n_max).flat_map(Partition::all) {
        let got = build_gtensor_specht(&lambda, 1, FieldPrime::TWO)?.dim();
        out.push(ReportItem::new(&lambda, "d1-dim").d(1).p(2).value(got).expected(d1_predict(&lambda).dim()));
    }
    Ok(out)
}

/// Hook dimensions at `d = 2` and the weight check for even leg length.
pub fn suite_hooks_d2(max: usize) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    for a in 2..=max {
        for l in 2..=max {
            let lam = Partition::hook(a, l);
            let got = build_gtensor_specht(&lam, 2, FieldPrime::TWO)?.dim();
            out.push(ReportItem::new(&lam, "hook-d2-dim").d(2).p(2).value(got).expected(hook_d2_dim(a, l)?));
            if l % 2 == 0 {
                out.push(ReportItem::new(&lam, "hook-d2-weights").d(2).p(2).verdict(frobenius_weight_check(a, l)?));
            }
        }
    }
    Ok(out)
}

/// Weight counts, `dim U^(2,2,1)`, decomposition data, composition factors and filtration infeasibility.
pub fn suite_tables(data: &DecompositionData) -> Result<SuiteOutcome> {
    let mut out = SuiteOutcome::default();
    let l221 = shape_221();
    for d in 4..=6 {
        let counts = table1_weight_counts(d)?;
        for f in table1_formulas() {
            out.push(
                ReportItem::new(&f.sorted_type, "kerq-weight-count")
                    .d(d)
                    .p(2)
                    .value(counts.get(&f.sorted_type).copied().unwrap_or(0))
                    .expected(f.eval(d)),
            );
        }
        let extra = counts.keys().filter(|k| !table1_formulas().iter().any(|f| &&f.sorted_type == k)).count();
        out.push(ReportItem::new(&l221, "kerq-weight-classes").d(d).p(2).value(counts.len() - extra).expected(6));
    }
    for d in 4..=7 {
        out.push(ReportItem::new(&l221, "u-dim").d(d).p(2).value(u_lambda_dim(&l221, d)?).expected(u221_formula(d)));
    }
    match data.validate() {
        Ok(s) => out.push(ReportItem::new("decomposition-data", "validation").value(&s).verdict(true)),
        Err(e) => out.push(ReportItem::new("decomposition-data", "validation").value(e.to_string()).verdict(false)),
    }
    for n in [4, 5] {
        let rows = table3_rows(n, data)?;
        let csv = table3_csv(&rows);
        out.push(
            ReportItem::new(format!("n={n}"), "composition-factors-table")
                .p(2)
                .value(&csv)
                .expected(table3_golden(n).expect("golden exists")),
        );
    }
    let g = gtensor_factors(&l221, data)?;
    out.push(
        ReportItem::new(&l221, "nabla-filtration-feasible")
            .p(2)
            .value(nabla_filtration_feasible(&g, data)?)
            .expected(false),
    );
    Ok(out)
}

/// The below-threshold isomorphism for `(4,3,2,1,1)` at `d = 2`.
pub fn suite_example61() -> Result<SuiteOutcome> {
    let lam: Partition = "4,3,2,1,1".parse().expect("valid");
    let mut out = SuiteOutcome::default();
    out.push(ReportItem::new(&lam, "predict-iso").value(predict_iso(&lam)).expected(false));
    out.push(ReportItem::new(&lam, "iso-char2").d(2).p(2).value(verify_iso(&lam, 2, FieldPrime::TWO)?).expected(true));
    Ok(out)
}
