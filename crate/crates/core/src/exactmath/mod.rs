//! Exact rational arithmetic, rational vectors and affine inequality systems.
//!
//! Everything numeric in the crate is built on [`Rational`] (an arbitrary
//! precision fraction kept in lowest terms).  Polyhedra are finite systems of
//! inequalities `⟨a, x⟩ ≤ b` and equalities `⟨a, x⟩ = b`, stored in a
//! canonical integer form so that syntactically different descriptions of the
//! same half-space compare equal.
//!
//! Feasibility, optimisation and redundancy elimination live in [`lp`]
//! (an exact simplex method with Bland's rule); [`fm`] provides
//! Fourier–Motzkin elimination, used both for projections and as an
//! independent feasibility oracle in tests.

pub mod fm;
pub mod lp;

use std::fmt;
use std::ops::Index;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use fm::{cone_hrep, fm_eliminate, fm_feasible, fm_project, merge_opposite_pairs};
pub use lp::{implies, lp_feasible, lp_maximize, lp_witness, poly_equal, remove_redundant, remove_redundant_indexed, LpOutcome};

/// Exact rational scalar in lowest terms with positive denominator.
pub type Rational = BigRational;

/// The rational number `n`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The rational number `n / d`.
///
/// # Panics
/// Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse a rational from `"p/q"`, an integer `"p"`, or a finite decimal
/// such as `"-2.5"`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let s = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    if s.is_empty() {
        return Err(bad());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
        return Ok(Rational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int_part.starts_with('-');
        let int_digits = int_part.trim_start_matches(['-', '+']);
        if !int_digits.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let digits = format!("{int_digits}{frac_part}");
        let mut n: BigInt = if digits.is_empty() { BigInt::zero() } else { digits.parse().map_err(|_| bad())? };
        if negative {
            n = -n;
        }
        let d = num_traits::pow(BigInt::from(10), frac_part.len());
        return Ok(Rational::new(n, d));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rational::from_integer(n))
}

/// Format a rational as `"p/q"`, or `"p"` when it is an integer.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Convert an integral rational to `i64`, if it is one and fits.
pub fn rational_to_i64(r: &Rational) -> Option<i64> {
    if !r.is_integer() {
        return None;
    }
    i64::try_from(r.numer().clone()).ok()
}

/// Exact rational vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RatVec {
    entries: Vec<Rational>,
}

impl RatVec {
    /// Wrap a list of rationals.
    pub fn new(entries: Vec<Rational>) -> Self {
        Self { entries }
    }

    /// Vector with integer entries.
    pub fn from_ints(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| rat(v)).collect())
    }

    /// The zero vector of dimension `dim`.
    pub fn zeros(dim: usize) -> Self {
        Self::new(vec![Rational::zero(); dim])
    }

    /// The standard basis vector `e_i` (0-based index) of dimension `dim`.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Self::zeros(dim);
        v.entries[i] = Rational::one();
        v
    }

    /// Parse comma-separated rationals, e.g. `"3,1/2,-1"`.
    pub fn parse_csv(text: &str) -> Result<Self> {
        let entries = text
            .split(',')
            .map(parse_rational)
            .collect::<Result<Vec<_>>>()?;
        if entries.is_empty() {
            return Err(Error::Parse("empty vector".into()));
        }
        Ok(Self::new(entries))
    }

    /// Number of coordinates.
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    /// The coordinates.
    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// Consume into the coordinate list.
    pub fn into_entries(self) -> Vec<Rational> {
        self.entries
    }

    /// Return an error unless the vector has dimension `dim`.
    pub fn check_dim(&self, dim: usize) -> Result<()> {
        if self.dim() == dim {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: dim, found: self.dim() })
        }
    }

    /// Standard dot product.
    ///
    /// # Panics
    /// Panics if the dimensions differ; callers validate dimensions at the
    /// API boundary.
    pub fn dot(&self, other: &RatVec) -> Rational {
        assert_eq!(self.dim(), other.dim(), "dot product of vectors of different dimension");
        let mut acc = Rational::zero();
        for (a, b) in self.entries.iter().zip(&other.entries) {
            if !a.is_zero() && !b.is_zero() {
                acc += a * b;
            }
        }
        acc
    }

    /// Coordinate-wise sum.
    pub fn add(&self, other: &RatVec) -> RatVec {
        assert_eq!(self.dim(), other.dim(), "sum of vectors of different dimension");
        RatVec::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect())
    }

    /// Coordinate-wise difference.
    pub fn sub(&self, other: &RatVec) -> RatVec {
        assert_eq!(self.dim(), other.dim(), "difference of vectors of different dimension");
        RatVec::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect())
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Rational) -> RatVec {
        RatVec::new(self.entries.iter().map(|a| a * c).collect())
    }

    /// Negation.
    pub fn neg(&self) -> RatVec {
        RatVec::new(self.entries.iter().map(|a| -a).collect())
    }

    /// True when every coordinate is zero.
    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// True when every coordinate is an integer.
    pub fn is_integral(&self) -> bool {
        self.entries.iter().all(|e| e.is_integer())
    }

    /// Integer coordinates, if all coordinates are integers fitting in `i64`.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.entries.iter().map(rational_to_i64).collect()
    }

    /// Sum of coordinates.
    pub fn sum(&self) -> Rational {
        self.entries.iter().fold(Rational::zero(), |acc, e| acc + e)
    }

    /// Coordinates rendered as `"p/q"` strings.
    pub fn to_strings(&self) -> Vec<String> {
        self.entries.iter().map(format_rational).collect()
    }

    /// Parse from a list of `"p/q"` strings.
    pub fn from_strings(items: &[String]) -> Result<Self> {
        Ok(Self::new(items.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?))
    }
}

impl Index<usize> for RatVec {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.entries[i]
    }
}

impl fmt::Display for RatVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_strings().join(", "))
    }
}

impl From<Vec<Rational>> for RatVec {
    fn from(entries: Vec<Rational>) -> Self {
        Self::new(entries)
    }
}

/// Relation of an affine constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Relation {
    /// `⟨a, x⟩ ≤ b`.
    Le,
    /// `⟨a, x⟩ = b`.
    Eq,
}

/// An affine constraint `⟨normal, x⟩ ≤ bound` or `⟨normal, x⟩ = bound`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineIneq {
    normal: RatVec,
    bound: Rational,
    kind: Relation,
}

impl AffineIneq {
    /// Constraint `⟨normal, x⟩ ≤ bound`.
    pub fn le(normal: RatVec, bound: Rational) -> Self {
        Self { normal, bound, kind: Relation::Le }
    }

    /// Constraint `⟨normal, x⟩ ≥ bound`, stored as `⟨−normal, x⟩ ≤ −bound`.
    pub fn ge(normal: RatVec, bound: Rational) -> Self {
        Self::le(normal.neg(), -bound)
    }

    /// Constraint `⟨normal, x⟩ = bound`.
    pub fn eq(normal: RatVec, bound: Rational) -> Self {
        Self { normal, bound, kind: Relation::Eq }
    }

    /// The canonical infeasible constraint `0 ≤ −1` in dimension `dim`.
    pub fn contradiction(dim: usize) -> Self {
        Self::le(RatVec::zeros(dim), rat(-1))
    }

    /// The covector `a`.
    pub fn normal(&self) -> &RatVec {
        &self.normal
    }

    /// The right-hand side `b`.
    pub fn bound(&self) -> &Rational {
        &self.bound
    }

    /// Inequality or equality.
    pub fn kind(&self) -> Relation {
        self.kind
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.normal.dim()
    }

    /// True for equalities.
    pub fn is_equality(&self) -> bool {
        self.kind == Relation::Eq
    }

    /// True if `x` satisfies the constraint.
    ///
    /// # Panics
    /// Panics on dimension mismatch.
    pub fn is_satisfied(&self, x: &RatVec) -> bool {
        let lhs = self.normal.dot(x);
        match self.kind {
            Relation::Le => lhs <= self.bound,
            Relation::Eq => lhs == self.bound,
        }
    }

    /// True if the constraint holds for every `x` (zero normal, consistent bound).
    pub fn is_trivial(&self) -> bool {
        self.normal.is_zero()
            && match self.kind {
                Relation::Le => !self.bound.is_negative(),
                Relation::Eq => self.bound.is_zero(),
            }
    }

    /// True if the constraint holds for no `x`.
    pub fn is_contradiction(&self) -> bool {
        self.normal.is_zero() && !self.is_trivial()
    }

    /// Canonical form: integer entries with gcd 1 (over normal and bound);
    /// equalities additionally have a positive leading nonzero entry.
    /// Zero-normal constraints become `0 ≤ 0` (trivial) or `0 ≤ −1`
    /// (contradiction).
    pub fn canonical(&self) -> AffineIneq {
        let dim = self.dim();
        if self.normal.is_zero() {
            return if self.is_trivial() {
                AffineIneq::le(RatVec::zeros(dim), Rational::zero())
            } else {
                AffineIneq::contradiction(dim)
            };
        }
        let mut lcm = BigInt::one();
        for e in self.normal.entries().iter().chain(std::iter::once(&self.bound)) {
            lcm = lcm.lcm(e.denom());
        }
        let mut ints: Vec<BigInt> = self
            .normal
            .entries()
            .iter()
            .chain(std::iter::once(&self.bound))
            .map(|e| e.numer() * (&lcm / e.denom()))
            .collect();
        let mut g = BigInt::zero();
        for v in &ints {
            g = g.gcd(v);
        }
        if !g.is_zero() && !g.is_one() {
            for v in ints.iter_mut() {
                *v = &*v / &g;
            }
        }
        if self.kind == Relation::Eq {
            let lead = ints.iter().find(|v| !v.is_zero()).expect("nonzero normal");
            if lead.is_negative() {
                for v in ints.iter_mut() {
                    *v = -&*v;
                }
            }
        }
        let bound = Rational::from_integer(ints.pop().expect("bound entry"));
        let normal = RatVec::new(ints.into_iter().map(Rational::from_integer).collect());
        AffineIneq { normal, bound, kind: self.kind }
    }

    /// The constraint translated by `v`: `{x : x − v satisfies self}`.
    pub fn translate(&self, v: &RatVec) -> AffineIneq {
        AffineIneq { normal: self.normal.clone(), bound: &self.bound + self.normal.dot(v), kind: self.kind }
    }

    /// The same constraint written over `dim + extra` coordinates, the new
    /// coordinates having coefficient zero.
    pub fn extend(&self, extra: usize) -> AffineIneq {
        let mut entries = self.normal.entries().to_vec();
        entries.extend(std::iter::repeat_n(Rational::zero(), extra));
        AffineIneq { normal: RatVec::new(entries), bound: self.bound.clone(), kind: self.kind }
    }

    /// Human-readable form using variable names `{var}1, {var}2, …`.
    ///
    /// Inequalities are printed in `≥` orientation (`−a·x >= −b`), which
    /// reads naturally for the lower-bound shaped systems of this crate.
    pub fn to_text(&self, var: &str) -> String {
        let (coeffs, rhs, rel) = match self.kind {
            Relation::Le => (self.normal.neg(), -self.bound.clone(), ">="),
            Relation::Eq => (self.normal.clone(), self.bound.clone(), "="),
        };
        let mut out = String::new();
        for (i, c) in coeffs.entries().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let term = if mag.is_one() { format!("{var}{}", i + 1) } else { format!("{}*{var}{}", mag, i + 1) };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
                out.push_str(&term);
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
                out.push_str(&term);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        format!("{out} {rel} {rhs}")
    }
}

/// A finite system of affine constraints in a fixed dimension.
///
/// Constraints are stored canonicalised and deduplicated (first occurrence
/// wins, order otherwise preserved).  Trivial constraints are dropped; a
/// contradictory constraint collapses the whole system to the distinguished
/// empty system `{0 ≤ −1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HPolyhedron {
    dim: usize,
    ineqs: Vec<AffineIneq>,
}

impl HPolyhedron {
    /// Build a system, checking that every constraint has dimension `dim`.
    pub fn new(dim: usize, ineqs: Vec<AffineIneq>) -> Result<Self> {
        for c in &ineqs {
            if c.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: c.dim() });
            }
        }
        let mut out: Vec<AffineIneq> = Vec::with_capacity(ineqs.len());
        let mut seen = std::collections::HashSet::new();
        for c in ineqs {
            let c = c.canonical();
            if c.is_trivial() {
                continue;
            }
            if c.is_contradiction() {
                return Ok(Self::empty(dim));
            }
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
        Ok(Self { dim, ineqs: out })
    }

    /// The whole space `ℚ^dim`.
    pub fn universe(dim: usize) -> Self {
        Self { dim, ineqs: Vec::new() }
    }

    /// The distinguished empty system `{0 ≤ −1}`.
    pub fn empty(dim: usize) -> Self {
        Self { dim, ineqs: vec![AffineIneq::contradiction(dim)] }
    }

    /// True if this is the distinguished empty system.  (Other systems may
    /// also be infeasible; use [`lp_feasible`] to decide.)
    pub fn is_empty_marker(&self) -> bool {
        self.ineqs.len() == 1 && self.ineqs[0].is_contradiction()
    }

    /// Ambient dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The constraints.
    pub fn ineqs(&self) -> &[AffineIneq] {
        &self.ineqs
    }

    /// Number of constraints.
    pub fn len(&self) -> usize {
        self.ineqs.len()
    }

    /// True if there are no constraints (the whole space).
    pub fn is_empty(&self) -> bool {
        self.ineqs.is_empty()
    }

    /// True if `x` satisfies every constraint.
    pub fn contains(&self, x: &RatVec) -> Result<bool> {
        x.check_dim(self.dim)?;
        Ok(self.ineqs.iter().all(|c| c.is_satisfied(x)))
    }

    /// Constraints violated by `x`.
    pub fn violated(&self, x: &RatVec) -> Result<Vec<&AffineIneq>> {
        x.check_dim(self.dim)?;
        Ok(self.ineqs.iter().filter(|c| !c.is_satisfied(x)).collect())
    }

    /// Conjunction of two systems of the same dimension.
    pub fn intersect(&self, other: &HPolyhedron) -> Result<HPolyhedron> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        HPolyhedron::new(self.dim, self.ineqs.iter().chain(&other.ineqs).cloned().collect())
    }

    /// The translate `v + P`.
    pub fn translate(&self, v: &RatVec) -> Result<HPolyhedron> {
        v.check_dim(self.dim)?;
        HPolyhedron::new(self.dim, self.ineqs.iter().map(|c| c.translate(v)).collect())
    }

    /// JSON form `{"dim": n, "ineqs": [{"a": [...], "b": "p/q", "eq": bool}]}`.
    pub fn to_json_value(&self) -> PolyJson {
        PolyJson { dim: self.dim, ineqs: self.ineqs.iter().map(IneqJson::from).collect() }
    }

    /// Serialize to a JSON string.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("serializable")
    }

    /// Parse the JSON form produced by [`HPolyhedron::to_json`].
    pub fn from_json(text: &str) -> Result<HPolyhedron> {
        let pj: PolyJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        pj.to_poly()
    }

    /// Multi-line text rendering, one constraint per line.
    pub fn to_text(&self, var: &str) -> String {
        self.ineqs.iter().map(|c| c.to_text(var)).collect::<Vec<_>>().join("\n")
    }
}

/// JSON form of one constraint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IneqJson {
    /// Covector entries as `"p/q"` strings.
    pub a: Vec<String>,
    /// Right-hand side as a `"p/q"` string.
    pub b: String,
    /// Whether the constraint is an equality.
    pub eq: bool,
}

impl From<&AffineIneq> for IneqJson {
    fn from(c: &AffineIneq) -> Self {
        IneqJson { a: c.normal.to_strings(), b: format_rational(&c.bound), eq: c.is_equality() }
    }
}

impl IneqJson {
    /// Parse back into an [`AffineIneq`].
    pub fn to_ineq(&self) -> Result<AffineIneq> {
        let normal = RatVec::from_strings(&self.a)?;
        let bound = parse_rational(&self.b)?;
        Ok(if self.eq { AffineIneq::eq(normal, bound) } else { AffineIneq::le(normal, bound) })
    }
}

/// JSON form of a system.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    /// Ambient dimension.
    pub dim: usize,
    /// Constraints.
    pub ineqs: Vec<IneqJson>,
}

impl PolyJson {
    /// Parse into an [`HPolyhedron`].
    pub fn to_poly(&self) -> Result<HPolyhedron> {
        let ineqs = self.ineqs.iter().map(IneqJson::to_ineq).collect::<Result<Vec<_>>>()?;
        HPolyhedron::new(self.dim, ineqs)
    }
}

/// Primitive integer vector on the ray through `v` (entries divided by their
/// gcd after clearing denominators).  Returns `None` for the zero vector.
pub fn primitive_integer(v: &RatVec) -> Option<Vec<BigInt>> {
    if v.is_zero() {
        return None;
    }
    let mut lcm = BigInt::one();
    for e in v.entries() {
        lcm = lcm.lcm(e.denom());
    }
    let ints: Vec<BigInt> = v.entries().iter().map(|e| e.numer() * (&lcm / e.denom())).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    Some(ints.into_iter().map(|x| x / &g).collect())
}

/// Row-reduce a rational matrix in place to reduced row echelon form;
/// returns the pivot columns.  Rows that become zero are removed.
pub fn rref(rows: &mut Vec<Vec<Rational>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r >= rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let (pivot_row, other) = if i < r {
                    let (a, b) = rows.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = rows.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (x, y) in other.iter_mut().zip(pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &f * y;
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Rank of a list of vectors of common dimension `dim`.
pub fn rank(vectors: &[RatVec], dim: usize) -> usize {
    let mut rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.entries().to_vec()).collect();
    rref(&mut rows, dim).len()
}

/// Basis of the null space `{x : ⟨r, x⟩ = 0 for every row r}`.
pub fn nullspace(rows: &[RatVec], dim: usize) -> Vec<RatVec> {
    let mut m: Vec<Vec<Rational>> = rows.iter().map(|v| v.entries().to_vec()).collect();
    let pivots = rref(&mut m, dim);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); dim];
            v[f] = Rational::one();
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            RatVec::new(v)
        })
        .collect()
}
