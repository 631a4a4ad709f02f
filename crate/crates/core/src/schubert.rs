//! Integral cohomology of products of complete flag varieties of type A.
//!
//! The ring `H*(GL_{r_1}/B × ⋯ × GL_{r_k}/B, ℤ)` is modelled through the
//! Borel presentation: the Schubert class `σ_w` is represented by the
//! product over factors of the Schubert polynomials `𝔖_{w_f}` in disjoint
//! sets of variables.  Products are computed by multiplying polynomials and
//! re-expanding: the coefficient of `σ_u` in a homogeneous polynomial `F` of
//! degree `l(u)` is the constant term of `∂_u F`, where `∂_u` is the
//! divided-difference operator of `u`.
//!
//! Degrees are reported in two units: [`CohClass::length`] is the Coxeter
//! length `l(w)` (complex codimension) and [`CohClass::degree`] is the
//! cohomological degree `2·l(w)`.
//!
//! Multiplication by the degree-two class `Θ(μ)` of an integral weight is
//! also available directly through the Chevalley formula, which serves as an
//! independent check on the polynomial model.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::exactmath::RatVec;
use crate::rootdata::GroupData;
use crate::weyl::{ParabolicData, Perm, WeylElt, WeylGroup, MAX_FACTOR_DEGREE};

/// Exponent vector of a monomial.
type Monomial = Vec<u8>;

/// Polynomial with integer coefficients (no zero coefficients stored).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Poly {
    terms: HashMap<Monomial, i64>,
}

impl Poly {
    fn constant(nvars: usize, c: i64) -> Poly {
        let mut p = Poly::default();
        p.add_term(vec![0; nvars], c);
        p
    }

    fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.retain(|_, v| *v != 0);
        }
    }

    fn add_scaled(&mut self, other: &Poly, c: i64) {
        for (m, v) in &other.terms {
            self.add_term(m.clone(), v * c);
        }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn mul(&self, other: &Poly) -> Poly {
        let mut out: HashMap<Monomial, i64> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                *out.entry(m).or_insert(0) += ca * cb;
            }
        }
        out.retain(|_, v| *v != 0);
        Poly { terms: out }
    }

    /// Divided difference `∂` in the variables `k` and `k + 1` (0-based):
    /// `(f − f|_{x_k ↔ x_{k+1}}) / (x_k − x_{k+1})`.
    fn divided_difference(&self, k: usize) -> Poly {
        let mut out: HashMap<Monomial, i64> = HashMap::new();
        for (m, &c) in &self.terms {
            let (p, q) = (m[k], m[k + 1]);
            if p == q {
                continue;
            }
            let (lo, hi, sign) = if p > q { (q, p, 1) } else { (p, q, -1) };
            // x^hi y^lo − x^lo y^hi over (x − y) = Σ_{t=0}^{hi−lo−1} x^{hi−1−t} y^{lo+t}
            for t in 0..(hi - lo) {
                let mut e = m.clone();
                if sign == 1 {
                    e[k] = hi - 1 - t;
                    e[k + 1] = lo + t;
                } else {
                    e[k] = lo + t;
                    e[k + 1] = hi - 1 - t;
                }
                *out.entry(e).or_insert(0) += sign * c;
            }
        }
        out.retain(|_, v| *v != 0);
        Poly { terms: out }
    }

    fn constant_term(&self) -> i64 {
        self.terms.iter().find(|(m, _)| m.iter().all(|&e| e == 0)).map(|(_, &c)| c).unwrap_or(0)
    }
}

type SchubertTable = Arc<HashMap<Perm, Poly>>;

/// Schubert polynomials of `S_r` in `r` variables, computed once per `r`.
fn schubert_table(r: usize) -> SchubertTable {
    static CACHE: OnceLock<Mutex<HashMap<usize, SchubertTable>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(t) = cache.lock().expect("cache lock").get(&r) {
        return Arc::clone(t);
    }
    let mut table: HashMap<Perm, Poly> = HashMap::new();
    let w0 = Perm::longest(r);
    let mut top = Poly::default();
    top.add_term((0..r).map(|i| (r - 1 - i) as u8).collect(), 1);
    table.insert(w0.clone(), top);
    let mut frontier = vec![w0];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 1..r {
                if w.has_right_descent(i) {
                    let v = w.times_simple(i);
                    if !table.contains_key(&v) {
                        let p = table[w].divided_difference(i - 1);
                        table.insert(v.clone(), p);
                        next.push(v);
                    }
                }
            }
        }
        frontier = next;
    }
    let arc = Arc::new(table);
    cache.lock().expect("cache lock").entry(r).or_insert_with(|| Arc::clone(&arc));
    arc
}

/// An integral combination of Schubert classes of a common length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    length: usize,
    terms: BTreeMap<WeylElt, i64>,
}

impl CohClass {
    /// The zero class in codimension `length`.
    pub fn zero(length: usize) -> Self {
        Self { length, terms: BTreeMap::new() }
    }

    /// The Schubert class `σ_w`.
    pub fn schubert(w: &WeylElt) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(w.clone(), 1);
        Self { length: w.length(), terms }
    }

    /// Codimension (Coxeter length of the indexing elements).
    pub fn length(&self) -> usize {
        self.length
    }

    /// Cohomological degree `2·length`.
    pub fn degree(&self) -> usize {
        2 * self.length
    }

    /// Nonzero terms.
    pub fn terms(&self) -> &BTreeMap<WeylElt, i64> {
        &self.terms
    }

    /// Coefficient of `σ_w`.
    pub fn coefficient(&self, w: &WeylElt) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    /// True for the zero class.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// True if every coefficient is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|&c| c >= 0)
    }

    fn add_term(&mut self, w: WeylElt, c: i64) {
        if c == 0 {
            return;
        }
        let e = self.terms.entry(w.clone()).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&w);
        }
    }

    /// Sum of two classes of the same length (a zero class adapts).
    pub fn add(&self, other: &CohClass) -> Result<CohClass> {
        self.combine(other, 1)
    }

    /// Difference of two classes of the same length.
    pub fn sub(&self, other: &CohClass) -> Result<CohClass> {
        self.combine(other, -1)
    }

    fn combine(&self, other: &CohClass, sign: i64) -> Result<CohClass> {
        if self.is_zero() {
            return Ok(other.scale(sign));
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.length != other.length {
            return Err(Error::Domain(format!(
                "cannot add classes of codimension {} and {}",
                self.length, other.length
            )));
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), sign * c);
        }
        Ok(out)
    }

    /// Integer multiple.
    pub fn scale(&self, c: i64) -> CohClass {
        let mut out = CohClass::zero(self.length);
        for (w, v) in &self.terms {
            out.add_term(w.clone(), v * c);
        }
        out
    }
}

impl fmt::Display for CohClass {
    /// Text form such as `3*s1.s3.s2 + 1*s2` (factors joined by `|`).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, &c) in &self.terms {
            let label = w.word_label();
            if first {
                write!(f, "{c}*{label}")?;
                first = false;
            } else if c < 0 {
                write!(f, " - {}*{label}", -c)?;
            } else {
                write!(f, " + {c}*{label}")?;
            }
        }
        Ok(())
    }
}

/// The cohomology ring of a product of complete flag varieties.
#[derive(Clone, Debug)]
pub struct SchubertRing {
    group: WeylGroup,
    offsets: Vec<usize>,
    nvars: usize,
    tables: Vec<SchubertTable>,
}

impl SchubertRing {
    /// Ring for the product of flag varieties of the factors of `group`.
    pub fn new(group: WeylGroup) -> Result<Self> {
        if let Some(d) = group.degrees().iter().find(|&&d| d > MAX_FACTOR_DEGREE) {
            return Err(Error::LimitExceeded(format!("Schubert calculus available for factor degree ≤ {MAX_FACTOR_DEGREE}, got {d}")));
        }
        let offsets = group.offsets();
        let nvars = group.rank();
        let tables = group.degrees().iter().map(|&d| schubert_table(d)).collect();
        Ok(Self { group, offsets, nvars, tables })
    }

    /// Ring attached to the Weyl group of `K` of a family instance.
    pub fn for_group(g: &GroupData) -> Result<Self> {
        Self::new(g.weyl_group()?.clone())
    }

    /// The Weyl group indexing the Schubert basis.
    pub fn group(&self) -> &WeylGroup {
        &self.group
    }

    /// Codimension of the point class, `l(w₀)`.
    pub fn top_length(&self) -> usize {
        self.group.longest_length()
    }

    /// Top cohomological degree `2·l(w₀)`.
    pub fn top_degree(&self) -> usize {
        2 * self.top_length()
    }

    /// The Schubert class `σ_w`.
    pub fn sigma(&self, w: &WeylElt) -> Result<CohClass> {
        self.group.check(w)?;
        Ok(CohClass::schubert(w))
    }

    /// The point class `σ_{w₀}`.
    pub fn point_class(&self) -> CohClass {
        CohClass::schubert(&self.group.longest())
    }

    /// The unit `σ_id`.
    pub fn unit(&self) -> CohClass {
        CohClass::schubert(&self.group.identity())
    }

    fn check_class(&self, c: &CohClass) -> Result<()> {
        for w in c.terms.keys() {
            self.group.check(w)?;
        }
        Ok(())
    }

    fn poly_of_elt(&self, w: &WeylElt) -> Poly {
        let mut acc = Poly::constant(self.nvars, 1);
        for (f, p) in w.factors().iter().enumerate() {
            let local = &self.tables[f][p];
            let mut embedded = Poly::default();
            for (m, &c) in &local.terms {
                let mut e = vec![0u8; self.nvars];
                e[self.offsets[f]..self.offsets[f] + m.len()].copy_from_slice(m);
                embedded.add_term(e, c);
            }
            acc = acc.mul(&embedded);
        }
        acc
    }

    fn poly_of_class(&self, c: &CohClass) -> Poly {
        let mut acc = Poly::default();
        for (w, &v) in &c.terms {
            acc.add_scaled(&self.poly_of_elt(w), v);
        }
        acc
    }

    /// Expand a homogeneous polynomial of degree `length` in the Schubert
    /// basis via `coefficient(σ_u) = ∂_u F (0)`.
    fn expand(&self, f: Poly, length: usize) -> CohClass {
        let mut out = CohClass::zero(length);
        if f.is_zero() || length > self.top_length() {
            return out;
        }
        let mut level: HashMap<WeylElt, Poly> = HashMap::new();
        level.insert(self.group.identity(), f);
        let simples = self.group.simple_reflections();
        for _ in 0..length {
            let mut next: HashMap<WeylElt, Poly> = HashMap::new();
            let mut visited: HashSet<WeylElt> = HashSet::new();
            for (v, g) in &level {
                for s in &simples {
                    let factor = &v.factors()[s.factor];
                    if factor.has_left_descent(s.index) {
                        continue;
                    }
                    let u = v.with_factor(s.factor, factor.simple_times(s.index));
                    if !visited.insert(u.clone()) {
                        continue;
                    }
                    let h = g.divided_difference(self.offsets[s.factor] + s.index - 1);
                    if !h.is_zero() {
                        next.insert(u, h);
                    }
                }
            }
            level = next;
            if level.is_empty() {
                return out;
            }
        }
        for (u, g) in level {
            out.add_term(u, g.constant_term());
        }
        out
    }

    /// Cup product in the Schubert basis.
    pub fn cup(&self, a: &CohClass, b: &CohClass) -> Result<CohClass> {
        self.check_class(a)?;
        self.check_class(b)?;
        let length = a.length + b.length;
        if a.is_zero() || b.is_zero() || length > self.top_length() {
            return Ok(CohClass::zero(length));
        }
        let f = self.poly_of_class(a).mul(&self.poly_of_class(b));
        Ok(self.expand(f, length))
    }

    /// Cup product of several classes, left to right.
    pub fn cup_all(&self, classes: &[CohClass]) -> Result<CohClass> {
        let mut acc = self.unit();
        for c in classes {
            acc = self.cup(&acc, c)?;
        }
        Ok(acc)
    }

    fn integral_weight(&self, mu: &RatVec) -> Result<Vec<i64>> {
        mu.check_dim(self.nvars)?;
        mu.to_i64().ok_or_else(|| Error::Domain(format!("{mu} is not an integral weight")))
    }

    /// Chevalley formula: `Θ(μ)·σ_w = Σ μ(α^∨) σ_{w s_α}` over positive
    /// roots `α` with `l(w s_α) = l(w) + 1`, extended linearly.
    pub fn chevalley_mult(&self, c: &CohClass, mu: &RatVec) -> Result<CohClass> {
        self.check_class(c)?;
        let m = self.integral_weight(mu)?;
        let mut out = CohClass::zero(c.length + 1);
        if c.length + 1 > self.top_length() {
            return Ok(out);
        }
        for (w, &coef) in &c.terms {
            for (f, p) in w.factors().iter().enumerate() {
                let r = p.degree();
                let base = p.length();
                for a in 1..=r {
                    for b in a + 1..=r {
                        let pair = m[self.offsets[f] + a - 1] - m[self.offsets[f] + b - 1];
                        if pair == 0 {
                            continue;
                        }
                        let t = Perm::transposition(a, b, r).expect("valid transposition");
                        let q = p.compose(&t);
                        if q.length() == base + 1 {
                            out.add_term(w.with_factor(f, q), coef * pair);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// The degree-two class `Θ(μ) = Θ(μ)·σ_id = Σ_{simple α} μ(α^∨) σ_{s_α}`.
    /// Central (trace) parts of `μ` contribute nothing.
    pub fn theta(&self, mu: &RatVec) -> Result<CohClass> {
        self.chevalley_mult(&self.unit(), mu)
    }

    /// `Θ(μ)` computed instead in the polynomial model, as the expansion of
    /// the linear form `Σ μ_i x_i` (an independent check on [`Self::theta`]).
    pub fn theta_polynomial(&self, mu: &RatVec) -> Result<CohClass> {
        let m = self.integral_weight(mu)?;
        let mut f = Poly::default();
        for (i, &c) in m.iter().enumerate() {
            let mut e = vec![0u8; self.nvars];
            e[i] = 1;
            f.add_term(e, c);
        }
        Ok(self.expand(f, 1))
    }

    /// Decide whether `σ^P_w · σ^P_{w′} = [pt]` in the cohomology of the
    /// partial flag variety `G/P(λ)`, for `w, w′ ∈ W^λ` of complementary or
    /// larger total length.  Parabolic classes are pulled back to the full
    /// flag variety, where `σ^P_v ↦ σ_{v w_λ}` (the shortest representative)
    /// and `[pt]_P ↦ σ_{w₀ w_λ}`.
    pub fn duality_check(&self, w: &WeylElt, w_prime: &WeylElt, pd: &ParabolicData) -> Result<bool> {
        self.group.check(w)?;
        self.group.check(w_prime)?;
        if !pd.is_max_rep(w) || !pd.is_max_rep(w_prime) {
            return Err(Error::Domain("elements must be longest coset representatives".into()));
        }
        let wl = pd.longest(&self.group);
        if w.length() + w_prime.length() < self.top_length() + wl.length() {
            return Err(Error::Domain("total length below the dimension of the partial flag variety".into()));
        }
        let prod = self.cup(&CohClass::schubert(&w.compose(&wl)), &CohClass::schubert(&w_prime.compose(&wl)))?;
        Ok(prod == CohClass::schubert(&self.group.longest().compose(&wl)))
    }
}
