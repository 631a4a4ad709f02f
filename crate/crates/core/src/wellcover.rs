//! Well-covering pairs of `X = K_ℂ/B × K_ℂ/B × ℙ(𝔭⁻ ⊕ ℂ)`.
//!
//! For a dominant one-parameter subgroup `λ`, the module `M = 𝔭⁻ ⊕ ℂ` is
//! graded by the pairing of its weights with `λ`.  A pair `(w, w′, m)` of
//! longest coset representatives is well covering when either
//! `w′ = w₀ w w_λ` and `M_{<m} = 0`, or both
//!
//! * `σ_{w₀w} · σ_{w₀w′} · ∏_{β ∈ M_{<m}} Θ(−β) = σ_{w₀w_λ}`, and
//! * `⟨wλ + w′λ, ρ⟩ + Σ_{k<m} (m − k) dim M_{λ,k} = 0`.
//!
//! Every well-covering pair is length balanced:
//! `l(w) + l(w′) = l(w₀) + l(w_λ) + dim M_{<m}`, which is used as a cheap
//! prefilter before any cup product is formed.

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::admissible::OneParamSubgroup;
use crate::error::{Error, Result};
use crate::exactmath::{rat, RatVec, Rational};
use crate::rootdata::GroupData;
use crate::schubert::{CohClass, SchubertRing};
use crate::weyl::{max_coset_reps, ParabolicData, WeylElt};

/// The grading of `𝔭⁻ ⊕ ℂ` by a one-parameter subgroup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedModule {
    levels: BTreeMap<i64, Vec<RatVec>>,
}

impl GradedModule {
    /// Weights at each level (the `ℂ` summand is the zero weight at level 0).
    pub fn levels(&self) -> &BTreeMap<i64, Vec<RatVec>> {
        &self.levels
    }

    /// `dim M_{λ,k}`.
    pub fn dim_at(&self, k: i64) -> usize {
        self.levels.get(&k).map_or(0, Vec::len)
    }

    /// `dim M_{<m}`.
    pub fn dim_below(&self, m: i64) -> usize {
        self.levels.range(..m).map(|(_, v)| v.len()).sum()
    }

    /// The weights of `M_{<m}`, with multiplicity.
    pub fn weights_below(&self, m: i64) -> Vec<RatVec> {
        self.levels.range(..m).flat_map(|(_, v)| v.iter().cloned()).collect()
    }

    /// `Σ_{k<m} (m − k) dim M_{λ,k}`.
    pub fn defect(&self, m: i64) -> i64 {
        self.levels.range(..m).map(|(&k, v)| (m - k) * v.len() as i64).sum()
    }

    /// Total dimension `|ℜ_n⁺| + 1`.
    pub fn total_dim(&self) -> usize {
        self.levels.values().map(Vec::len).sum()
    }

    /// Smallest level.
    pub fn min_level(&self) -> i64 {
        *self.levels.keys().next().expect("the zero weight is always present")
    }

    /// Largest level.
    pub fn max_level(&self) -> i64 {
        *self.levels.keys().next_back().expect("the zero weight is always present")
    }

    /// True if some weight sits at level `m`, i.e. `C(w, w′, m)` is nonempty.
    pub fn has_level(&self, m: i64) -> bool {
        self.dim_at(m) > 0
    }
}

/// Grade `𝔭⁻ ⊕ ℂ` by `λ`.
pub fn grade(g: &GroupData, lam: &OneParamSubgroup) -> Result<GradedModule> {
    let l = lam.to_ratvec();
    l.check_dim(g.dim)?;
    let mut levels: BTreeMap<i64, Vec<RatVec>> = BTreeMap::new();
    for beta in &g.weights_p_minus {
        let k = crate::exactmath::rational_to_i64(&beta.dot(&l))
            .ok_or_else(|| Error::Domain("non-integral pairing of a weight with λ".into()))?;
        levels.entry(k).or_default().push(beta.clone());
    }
    levels.entry(0).or_default().push(RatVec::zeros(g.dim));
    Ok(levels_sorted(levels))
}

fn levels_sorted(mut levels: BTreeMap<i64, Vec<RatVec>>) -> GradedModule {
    for v in levels.values_mut() {
        v.sort();
    }
    GradedModule { levels }
}

/// A candidate pair `(C(w, w′, m), λ)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct WCPair {
    /// `w ∈ W^λ`.
    pub w: WeylElt,
    /// `w′ ∈ W^λ`.
    pub w_prime: WeylElt,
    /// The level `m`.
    pub m: i64,
    /// The one-parameter subgroup.
    pub lam: OneParamSubgroup,
}

/// JSON record of a pair; Weyl elements are written in one-line notation
/// (factors separated by `|`), with reduced words alongside for reading.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRecord {
    /// `w` in one-line notation.
    pub w: String,
    /// `w′` in one-line notation.
    pub w_prime: String,
    /// The level.
    pub m: i64,
    /// `λ`.
    pub lambda: Vec<i64>,
    /// Reduced word of `w`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w_word: Option<String>,
    /// Reduced word of `w′`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w_prime_word: Option<String>,
}

impl WCPair {
    /// The JSON record.
    pub fn to_record(&self) -> PairRecord {
        PairRecord {
            w: self.w.to_string(),
            w_prime: self.w_prime.to_string(),
            m: self.m,
            lambda: self.lam.coords().to_vec(),
            w_word: Some(self.w.word_label()),
            w_prime_word: Some(self.w_prime.word_label()),
        }
    }

    /// Parse a JSON record.
    pub fn from_record(r: &PairRecord) -> Result<WCPair> {
        Ok(WCPair {
            w: WeylElt::parse(&r.w)?,
            w_prime: WeylElt::parse(&r.w_prime)?,
            m: r.m,
            lam: OneParamSubgroup::new(r.lambda.clone())?,
        })
    }

    /// The inequality `⟨wλ, ξ⟩ ≤ ⟨w₀w′λ, Λ⟩` as `(normal, coefficient
    /// vector for Λ)`.
    pub fn inequality_data(&self, w0: &WeylElt) -> Result<(RatVec, RatVec)> {
        let l = self.lam.to_ratvec();
        Ok((self.w.act(&l)?, w0.compose(&self.w_prime).act(&l)?))
    }
}

/// Precomputed data to test pairs for one `(group, λ)`.
#[derive(Clone, Debug)]
pub struct WellCover {
    lam: OneParamSubgroup,
    lam_vec: RatVec,
    rho: RatVec,
    ring: SchubertRing,
    reps: Vec<WeylElt>,
    w0: WeylElt,
    w_lambda: WeylElt,
    module: GradedModule,
}

impl WellCover {
    /// Set up the engine.  Only families with type-A Weyl data are supported.
    pub fn new(g: &GroupData, lam: &OneParamSubgroup) -> Result<Self> {
        let group = g.weyl_group()?.clone();
        let lam_vec = lam.to_ratvec();
        let pd = ParabolicData::new(&group, &lam_vec)?;
        let reps = max_coset_reps(&group, &pd)?;
        let w_lambda = pd.longest(&group);
        let w0 = group.longest();
        let ring = SchubertRing::new(group)?;
        Ok(Self { lam: lam.clone(), lam_vec, rho: g.rho.clone(), ring, reps, w0, w_lambda, module: grade(g, lam)? })
    }

    /// The one-parameter subgroup.
    pub fn lambda(&self) -> &OneParamSubgroup {
        &self.lam
    }

    /// `W^λ`, sorted.
    pub fn reps(&self) -> &[WeylElt] {
        &self.reps
    }

    /// The longest element `w₀`.
    pub fn w0(&self) -> &WeylElt {
        &self.w0
    }

    /// The longest element `w_λ` of the stabiliser.
    pub fn w_lambda(&self) -> &WeylElt {
        &self.w_lambda
    }

    /// The grading of `𝔭⁻ ⊕ ℂ`.
    pub fn module(&self) -> &GradedModule {
        &self.module
    }

    /// The Schubert ring used for all products.
    pub fn ring(&self) -> &SchubertRing {
        &self.ring
    }

    fn check_rep(&self, w: &WeylElt) -> Result<()> {
        if self.reps.binary_search(w).is_err() {
            return Err(Error::Domain(format!("{w} is not a longest coset representative for {}", self.lam)));
        }
        Ok(())
    }

    fn nonempty(&self, m: i64) -> bool {
        m == 0 || self.module.has_level(m)
    }

    /// `σ_{w₀w′} · ∏_{β ∈ M_{<m}} Θ(−β)`, or zero when the zero weight lies
    /// below `m`.
    fn twisted_class(&self, w_prime: &WeylElt, m: i64) -> Result<CohClass> {
        let mut acc = self.ring.sigma(&self.w0.compose(w_prime))?;
        for beta in self.module.weights_below(m) {
            if beta.is_zero() {
                return Ok(CohClass::zero(acc.length() + 1));
            }
            acc = self.ring.chevalley_mult(&acc, &beta.neg())?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    /// The full product `σ_{w₀w} · σ_{w₀w′} · ∏ Θ(−β)`.
    pub fn product(&self, w: &WeylElt, w_prime: &WeylElt, m: i64) -> Result<CohClass> {
        self.check_rep(w)?;
        self.check_rep(w_prime)?;
        let t = self.twisted_class(w_prime, m)?;
        if t.is_zero() {
            return Ok(t);
        }
        self.ring.cup(&self.ring.sigma(&self.w0.compose(w))?, &t)
    }

    fn target(&self) -> CohClass {
        CohClass::schubert(&self.w0.compose(&self.w_lambda))
    }

    /// `l(w) + l(w′) = l(w₀) + l(w_λ) + dim M_{<m}`.
    pub fn length_balanced(&self, w: &WeylElt, w_prime: &WeylElt, m: i64) -> bool {
        w.length() + w_prime.length() == self.w0.length() + self.w_lambda.length() + self.module.dim_below(m)
    }

    /// `⟨wλ + w′λ, ρ⟩ + Σ_{k<m} (m − k) dim M_{λ,k}`.
    pub fn rho_defect(&self, w: &WeylElt, w_prime: &WeylElt, m: i64) -> Result<Rational> {
        let s = w.act(&self.lam_vec)?.add(&w_prime.act(&self.lam_vec)?);
        Ok(s.dot(&self.rho) + rat(self.module.defect(m)))
    }

    fn well_covering_with(&self, w: &WeylElt, w_prime: &WeylElt, m: i64, twisted: Option<&CohClass>) -> Result<bool> {
        if !self.nonempty(m) {
            return Ok(false);
        }
        let below = self.module.dim_below(m);
        if below == 0 && *w_prime == self.w0.compose(w).compose(&self.w_lambda) {
            return Ok(true);
        }
        if !self.length_balanced(w, w_prime, m) || !self.rho_defect(w, w_prime, m)?.is_zero() {
            return Ok(false);
        }
        let owned;
        let t = match twisted {
            Some(t) => t,
            None => {
                owned = self.twisted_class(w_prime, m)?;
                &owned
            }
        };
        if t.is_zero() {
            return Ok(false);
        }
        Ok(self.ring.cup(&self.ring.sigma(&self.w0.compose(w))?, t)? == self.target())
    }

    /// Decide whether `(C(w, w′, m), λ)` is well covering.
    pub fn is_well_covering(&self, w: &WeylElt, w_prime: &WeylElt, m: i64) -> Result<bool> {
        self.check_rep(w)?;
        self.check_rep(w_prime)?;
        self.well_covering_with(w, w_prime, m, None)
    }

    /// Decide whether `(C(w, w′, m), λ)` is dominant: the product
    /// `σ_{w₀w} · σ_{w₀w′} · ∏ Θ(−β)` is nonzero.
    pub fn is_dominant_pair(&self, w: &WeylElt, w_prime: &WeylElt, m: i64) -> Result<bool> {
        if !self.nonempty(m) {
            return Ok(false);
        }
        Ok(!self.product(w, w_prime, m)?.is_zero())
    }

    fn pair(&self, w: &WeylElt, w_prime: &WeylElt, m: i64) -> WCPair {
        WCPair { w: w.clone(), w_prime: w_prime.clone(), m, lam: self.lam.clone() }
    }

    fn scan(&self, keep: impl Fn(&WeylElt, &WeylElt, &CohClass) -> Result<bool> + Sync) -> Result<Vec<WCPair>> {
        let twisted: Vec<CohClass> = self.reps.par_iter().map(|wp| self.twisted_class(wp, 0)).collect::<Result<_>>()?;
        let rows: Vec<Vec<WCPair>> = self
            .reps
            .par_iter()
            .map(|w| {
                let mut row = Vec::new();
                for (wp, t) in self.reps.iter().zip(&twisted) {
                    if keep(w, wp, t)? {
                        row.push(self.pair(w, wp, 0));
                    }
                }
                Ok(row)
            })
            .collect::<Result<_>>()?;
        Ok(rows.into_iter().flatten().collect())
    }

    /// All well-covering pairs with `m = 0`, in lexicographic order.
    pub fn enumerate_m0(&self) -> Result<Vec<WCPair>> {
        self.scan(|w, wp, t| self.well_covering_with(w, wp, 0, Some(t)))
    }

    /// All dominant pairs with `m = 0`, in lexicographic order.
    pub fn enumerate_dominant_m0(&self) -> Result<Vec<WCPair>> {
        let min_len = self.w0.length() + self.module.dim_below(0);
        self.scan(|w, wp, t| {
            if w.length() + wp.length() < min_len || t.is_zero() {
                return Ok(false);
            }
            Ok(!self.ring.cup(&self.ring.sigma(&self.w0.compose(w))?, t)?.is_zero())
        })
    }

    /// Scan every `(w, w′, m)` with `C` nonempty and `m` between the lowest
    /// level and `max_m`, returning the well-covering triples.
    pub fn scan_all_levels(&self, max_m: i64) -> Result<Vec<WCPair>> {
        let mut out = Vec::new();
        for m in self.module.min_level()..=max_m {
            if !self.nonempty(m) {
                continue;
            }
            for w in &self.reps {
                for wp in &self.reps {
                    if self.well_covering_with(w, wp, m, None)? {
                        out.push(self.pair(w, wp, m));
                    }
                }
            }
        }
        Ok(out)
    }
}

/// Decide whether a pair is well covering.
pub fn is_well_covering(g: &GroupData, pair: &WCPair) -> Result<bool> {
    WellCover::new(g, &pair.lam)?.is_well_covering(&pair.w, &pair.w_prime, pair.m)
}

/// Decide whether a pair is dominant.
pub fn is_dominant_pair(g: &GroupData, pair: &WCPair) -> Result<bool> {
    WellCover::new(g, &pair.lam)?.is_dominant_pair(&pair.w, &pair.w_prime, pair.m)
}

/// All well-covering pairs `(C(w, w′, 0), λ)`.
pub fn enumerate_m0(g: &GroupData, lam: &OneParamSubgroup) -> Result<Vec<WCPair>> {
    WellCover::new(g, lam)?.enumerate_m0()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::admissible::enumerate_admissible;
    use crate::weyl::Perm;

    fn lam(v: &[i64]) -> OneParamSubgroup {
        OneParamSubgroup::new(v.to_vec()).unwrap()
    }

    fn word(w: &[usize], r: usize) -> WeylElt {
        WeylElt::new(vec![Perm::from_word(w, r).unwrap()])
    }

    #[test]
    fn grading_of_sp4() {
        let g = GroupData::from_spec("sp:n=2").unwrap();
        let m = grade(&g, &lam(&[0, -1])).unwrap();
        assert_eq!(m.total_dim(), 4);
        assert_eq!(m.dim_at(0), 2);
        assert_eq!(m.dim_at(1), 1);
        assert_eq!(m.dim_at(2), 1);
        assert_eq!(m.dim_below(0), 0);
    }

    #[test]
    fn grading_of_su21() {
        let g = GroupData::from_spec("su:n=2,q=1").unwrap();
        let m = grade(&g, &lam(&[2, -1])).unwrap();
        assert_eq!(m.dim_at(-3), 1);
        assert_eq!(m.dim_at(0), 2);
        assert_eq!(m.defect(0), 3);
    }

    #[test]
    fn su_n1_pairs_are_the_hat_family() {
        for n in 2..=4usize {
            let g = GroupData::from_spec(&format!("su:n={n},q=1")).unwrap();
            let mut l = vec![-1i64; n];
            l[0] = n as i64;
            let wc = WellCover::new(&g, &lam(&l)).unwrap();
            let got: Vec<(WeylElt, WeylElt)> = wc.enumerate_m0().unwrap().into_iter().map(|p| (p.w, p.w_prime)).collect();
            let hat_inv = |k: usize| word(&(1..k).rev().collect::<Vec<_>>(), n).compose(wc.w_lambda());
            let mut want: Vec<_> = (2..=n).map(|k| (hat_inv(k), hat_inv(n - k + 2))).collect();
            want.sort();
            assert_eq!(got, want, "n = {n}");
        }
    }

    #[test]
    fn so_star_6_pairs() {
        let g = GroupData::from_spec("so_star:n=3").unwrap();
        let wc = WellCover::new(&g, &lam(&[1, 1, -1])).unwrap();
        let got: Vec<(WeylElt, WeylElt)> = wc.enumerate_m0().unwrap().into_iter().map(|p| (p.w, p.w_prime)).collect();
        let w0 = word(&[1, 2, 1], 3);
        let s21 = word(&[2, 1], 3);
        let mut want = vec![(w0.clone(), s21.clone()), (s21, w0)];
        want.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn sp_positive_lambda_has_no_pairs() {
        let g = GroupData::from_spec("sp:n=3").unwrap();
        for l in enumerate_admissible(&g).unwrap() {
            let pairs = enumerate_m0(&g, &l).unwrap();
            if l.coords()[0] > 0 {
                assert!(pairs.is_empty(), "{l}");
            } else {
                let wc = WellCover::new(&g, &l).unwrap();
                assert_eq!(pairs.len(), wc.reps().len());
                for p in pairs {
                    assert_eq!(p.w_prime, wc.w0().compose(&p.w).compose(wc.w_lambda()));
                }
            }
        }
    }

    #[test]
    fn well_covering_implies_dominant_and_balanced() {
        for spec in ["sp:n=2", "su:n=2,q=1", "so_star:n=3", "su:p=2,q=2"] {
            let g = GroupData::from_spec(spec).unwrap();
            for l in enumerate_admissible(&g).unwrap() {
                let wc = WellCover::new(&g, &l).unwrap();
                let dominant = wc.enumerate_dominant_m0().unwrap();
                for p in wc.enumerate_m0().unwrap() {
                    assert!(wc.length_balanced(&p.w, &p.w_prime, 0));
                    assert!(dominant.contains(&p), "{spec} {l}");
                }
            }
        }
    }

    #[test]
    fn levels_above_zero_never_well_cover() {
        for spec in ["sp:n=2", "su:n=2,q=1", "so_star:n=3"] {
            let g = GroupData::from_spec(spec).unwrap();
            for l in enumerate_admissible(&g).unwrap() {
                let wc = WellCover::new(&g, &l).unwrap();
                assert!(wc.scan_all_levels(2).unwrap().iter().all(|p| p.m <= 0));
            }
        }
    }

    #[test]
    fn non_representatives_are_rejected() {
        let g = GroupData::from_spec("su:n=3,q=1").unwrap();
        let wc = WellCover::new(&g, &lam(&[3, -1, -1])).unwrap();
        let id = word(&[], 3);
        assert!(wc.is_well_covering(&id, &id, 0).is_err());
    }

    #[test]
    fn records_round_trip() {
        let g = GroupData::from_spec("su:p=2,q=2").unwrap();
        let pairs = enumerate_m0(&g, &lam(&[1, -1, 1, -1])).unwrap();
        assert_eq!(pairs.len(), 4);
        for p in pairs {
            let json = serde_json::to_string(&p.to_record()).unwrap();
            let back: PairRecord = serde_json::from_str(&json).unwrap();
            assert_eq!(WCPair::from_record(&back).unwrap(), p);
        }
    }

    #[test]
    fn so_p2_is_unsupported() {
        let g = GroupData::from_spec("so:p=4").unwrap();
        assert!(matches!(WellCover::new(&g, &lam(&[1, 0, 0])), Err(Error::UnsupportedFamily(_))));
    }
}
