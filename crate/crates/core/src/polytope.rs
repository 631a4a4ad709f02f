//! Moment polyhedra `Δ_K(𝒪_Λ)` of holomorphic coadjoint orbits.
//!
//! [`Assembler`] collects, for every admissible `λ`, the well-covering pairs
//! `(w, w′)` at level zero; each contributes `⟨wλ, ξ⟩ ≤ ⟨w₀w′λ, Λ⟩`.  The
//! pair list does not depend on `Λ`, so one assembler serves any number of
//! orbits.  Independent descriptions are provided by the explicit
//! per-family inequality lists ([`closed_form`]) and by a representation
//! theoretic oracle ([`horn_oracle_member`]): `ξ ∈ Δ` iff some `γ` in the
//! cone of highest weights of `ℂ[𝔭⁻]` satisfies `V_γ ⊆ V_ξ ⊗ V_Λ*`,
//! decided blockwise with Horn inequalities.

use std::fmt;

use num_traits::Signed;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::admissible::enumerate_admissible;
use crate::error::{Error, Result};
use crate::exactmath::{
    format_rational, implies, lp_feasible, lp_witness, rat, remove_redundant_indexed, AffineIneq, HPolyhedron,
    IneqJson, RatVec, Rational,
};
use crate::horn::enum_t;
use crate::rootdata::{GroupData, GroupFamily};
use crate::wellcover::{WCPair, WellCover};

/// Which pairs feed the assembly.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PairMode {
    /// Well-covering pairs only (the irredundant-by-construction set).
    Strict,
    /// All dominant pairs (a superset giving the same polyhedron).
    Relaxed,
}

/// Where an inequality of an [`OrbitPolytope`] comes from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case")]
pub enum Provenance {
    /// A wall of the dominant chamber (or the trace condition).
    Chamber,
    /// A pair `(C(w, w′, 0), λ)`.
    Pair {
        /// `λ`.
        lambda: Vec<i64>,
        /// `w` in one-line notation.
        w: String,
        /// `w′` in one-line notation.
        w_prime: String,
    },
    /// A row of an explicit per-family inequality list.
    ClosedForm,
}

impl Provenance {
    fn of_pair(p: &WCPair) -> Self {
        Provenance::Pair { lambda: p.lam.coords().to_vec(), w: p.w.to_string(), w_prime: p.w_prime.to_string() }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Chamber => write!(f, "chamber"),
            Provenance::ClosedForm => write!(f, "closed form"),
            Provenance::Pair { lambda, w, w_prime } => write!(f, "lambda={lambda:?} w=[{w}] w'=[{w_prime}]"),
        }
    }
}

/// A moment polyhedron together with the origin of each inequality.
#[derive(Clone, Debug)]
pub struct OrbitPolytope {
    /// The group.
    pub group: GroupData,
    /// The orbit parameter `Λ`.
    pub lambda: RatVec,
    /// Canonical inequality system (chamber rows first).
    pub system: HPolyhedron,
    /// One record per row of `system`.
    pub provenance: Vec<Provenance>,
    /// Rows found redundant (or duplicated) during assembly.
    pub dropped: Vec<(AffineIneq, Provenance)>,
}

/// JSON form of an [`OrbitPolytope`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    /// Group specification string.
    pub group: String,
    /// `Λ` as `"p/q"` strings.
    #[serde(rename = "Lambda")]
    pub lambda: Vec<String>,
    /// Number of coordinates.
    pub dim: usize,
    /// The inequalities `a·ξ ≤ b` (or `=` when `eq`).
    pub ineqs: Vec<IneqJson>,
    /// Origin of each inequality.
    pub provenance: Vec<Provenance>,
}

impl OrbitPolytope {
    /// True if `ξ` satisfies every inequality.
    pub fn member(&self, xi: &RatVec) -> Result<bool> {
        self.system.contains(xi)
    }

    /// The inequalities in `≥` orientation, chamber rows first, joined by `"; "`.
    pub fn to_text(&self) -> String {
        self.system.ineqs().iter().map(|c| c.to_text("xi")).collect::<Vec<_>>().join("; ")
    }

    /// The JSON form.
    pub fn to_json_value(&self) -> PolytopeJson {
        PolytopeJson {
            group: self.group.family.to_string(),
            lambda: self.lambda.to_strings(),
            dim: self.system.dim(),
            ineqs: self.system.to_json_value().ineqs,
            provenance: self.provenance.clone(),
        }
    }

    /// Pretty JSON text.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_json_value()).expect("serializable")
    }
}

impl PolytopeJson {
    /// Rebuild the inequality system.
    pub fn system(&self) -> Result<HPolyhedron> {
        let ineqs = self.ineqs.iter().map(IneqJson::to_ineq).collect::<Result<Vec<_>>>()?;
        HPolyhedron::new(self.dim, ineqs)
    }
}

fn require_pipeline_family(g: &GroupData) -> Result<()> {
    if matches!(g.family, GroupFamily::SOp2 { .. }) {
        return Err(Error::UnsupportedFamily(format!("{} has no moment polyhedron pipeline", g.family.display_name())));
    }
    Ok(())
}

/// Check that `Λ` lies strictly inside the holomorphic chamber.
pub fn validate_lambda(g: &GroupData, lambda: &RatVec) -> Result<()> {
    lambda.check_dim(g.dim)?;
    if !g.is_dominant(lambda)? {
        let what = if matches!(g.family, GroupFamily::SUpq { .. }) { "dominant with zero trace" } else { "dominant" };
        return Err(Error::Domain(format!("Lambda = {lambda} must be {what}")));
    }
    if let Some(beta) = g.noncompact_pos.iter().find(|b| !b.dot(lambda).is_positive()) {
        return Err(Error::Domain(format!(
            "Lambda = {lambda} must pair strictly positively with every noncompact positive root (fails for {beta})"
        )));
    }
    Ok(())
}

#[derive(Clone, Debug)]
struct PairRow {
    pair: WCPair,
    normal: RatVec,
    rhs: RatVec,
}

/// The `Λ`-independent part of the assembly: all pairs of all admissible `λ`.
#[derive(Clone, Debug)]
pub struct Assembler {
    group: GroupData,
    mode: PairMode,
    rows: Vec<PairRow>,
}

impl Assembler {
    /// Enumerate the pairs for every admissible `λ` (in parallel).
    pub fn new(g: &GroupData, mode: PairMode) -> Result<Self> {
        require_pipeline_family(g)?;
        let lams = enumerate_admissible(g)?;
        let per_lambda: Vec<Vec<PairRow>> = lams
            .par_iter()
            .map(|l| {
                let wc = WellCover::new(g, l)?;
                let pairs = match mode {
                    PairMode::Strict => wc.enumerate_m0()?,
                    PairMode::Relaxed => wc.enumerate_dominant_m0()?,
                };
                pairs
                    .into_iter()
                    .map(|pair| {
                        let (normal, rhs) = pair.inequality_data(wc.w0())?;
                        Ok(PairRow { pair, normal, rhs })
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Ok(Self { group: g.clone(), mode, rows: per_lambda.into_iter().flatten().collect() })
    }

    /// The group.
    pub fn group(&self) -> &GroupData {
        &self.group
    }

    /// The pair mode.
    pub fn mode(&self) -> PairMode {
        self.mode
    }

    /// All pairs, grouped by `λ` in decreasing order.
    pub fn pairs(&self) -> impl Iterator<Item = &WCPair> {
        self.rows.iter().map(|r| &r.pair)
    }

    /// The raw (unreduced) inequalities for `Λ`, pair rows then chamber rows.
    pub fn raw_rows(&self, lambda: &RatVec) -> Vec<(AffineIneq, Provenance)> {
        let mut out: Vec<(AffineIneq, Provenance)> = self
            .rows
            .iter()
            .map(|r| (AffineIneq::le(r.normal.clone(), r.rhs.dot(lambda)), Provenance::of_pair(&r.pair)))
            .collect();
        out.extend(self.group.chamber.ineqs().iter().map(|c| (c.clone(), Provenance::Chamber)));
        out
    }

    /// Assemble `Δ_K(𝒪_Λ)`.
    pub fn assemble(&self, lambda: &RatVec) -> Result<OrbitPolytope> {
        validate_lambda(&self.group, lambda)?;
        let raw = self.raw_rows(lambda);
        // Canonicalize and deduplicate, letting chamber rows win ties so the
        // chamber provenance survives.
        let mut unique: Vec<(AffineIneq, Provenance)> = Vec::new();
        let mut dropped = Vec::new();
        let (chamber, pairs): (Vec<_>, Vec<_>) = raw.into_iter().partition(|(_, p)| *p == Provenance::Chamber);
        let mut chamber_rows = Vec::new();
        for (c, p) in chamber.into_iter().chain(pairs) {
            let c = c.canonical();
            if c.is_trivial() {
                dropped.push((c, p));
                continue;
            }
            if chamber_rows.iter().chain(unique.iter()).any(|(d, _): &(AffineIneq, Provenance)| *d == c) {
                dropped.push((c, p));
            } else if p == Provenance::Chamber {
                chamber_rows.push((c, p));
            } else {
                unique.push((c, p));
            }
        }
        // Redundancy removal scans rows in order; pair rows go first so that
        // chamber walls are preferred when two rows are interchangeable.
        unique.extend(chamber_rows);
        let candidate = HPolyhedron::new(self.group.dim, unique.iter().map(|(c, _)| c.clone()).collect())?;
        let (_, kept) = remove_redundant_indexed(&candidate);
        let mut keep_flags = vec![false; unique.len()];
        for &i in &kept {
            keep_flags[i] = true;
        }
        let mut chamber_kept = Vec::new();
        let mut other_kept = Vec::new();
        for ((c, p), keep) in unique.into_iter().zip(keep_flags) {
            match (keep, &p) {
                (false, _) => dropped.push((c, p)),
                (true, Provenance::Chamber) => chamber_kept.push((c, p)),
                (true, _) => other_kept.push((c, p)),
            }
        }
        other_kept.sort_by(|(a, _), (b, _)| (a.normal(), a.bound()).cmp(&(b.normal(), b.bound())));
        let rows: Vec<(AffineIneq, Provenance)> = chamber_kept.into_iter().chain(other_kept).collect();
        let system = HPolyhedron::new(self.group.dim, rows.iter().map(|(c, _)| c.clone()).collect())?;
        debug_assert_eq!(system.len(), rows.len());
        Ok(OrbitPolytope {
            group: self.group.clone(),
            lambda: lambda.clone(),
            system,
            provenance: rows.into_iter().map(|(_, p)| p).collect(),
            dropped,
        })
    }
}

/// Assemble `Δ_K(𝒪_Λ)` from the well-covering pairs.
pub fn assemble(g: &GroupData, lambda: &RatVec) -> Result<OrbitPolytope> {
    Assembler::new(g, PairMode::Strict)?.assemble(lambda)
}

/// True if `ξ` lies in the polytope.
pub fn member(p: &OrbitPolytope, xi: &RatVec) -> Result<bool> {
    p.member(xi)
}

fn ivec(v: &[i64]) -> RatVec {
    RatVec::from_ints(v)
}

/// Row `⟨a, ξ⟩ ≥ ⟨b, Λ⟩` (or `≤` when `le`).
fn template_row(a: &[i64], le: bool, b: &[i64], lambda: &RatVec) -> AffineIneq {
    let bound = ivec(b).dot(lambda);
    if le {
        AffineIneq::le(ivec(a), bound)
    } else {
        AffineIneq::ge(ivec(a), bound)
    }
}

fn unit_int(n: usize, k: usize, c: i64) -> Vec<i64> {
    let mut v = vec![0; n];
    v[k] = c;
    v
}

/// The explicit inequality lists known for `Sp(2n, ℝ)`, `SU(n, 1)`,
/// `SO*(6)`, `SO*(8)` and `SU(2, 2)`, intersected with the chamber.
pub fn closed_form(g: &GroupData, lambda: &RatVec) -> Result<OrbitPolytope> {
    validate_lambda(g, lambda)?;
    let mut rows: Vec<AffineIneq> = Vec::new();
    match g.family {
        GroupFamily::Sp2nR { n } => {
            // ξ_i ≥ Λ_i.
            for k in 0..n {
                let e = unit_int(n, k, 1);
                rows.push(template_row(&e, false, &e, lambda));
            }
        }
        GroupFamily::SUn1 { n } => {
            // ⟨λ₁, ξ⟩ ≥ ⟨λ₁, Λ⟩ ≥ ⟨λ₂, ξ⟩ ≥ ⟨λ₂, Λ⟩ ≥ ⋯ ≥ ⟨λ_n, ξ⟩ ≥ ⟨λ_n, Λ⟩,
            // with λ_k = (n + 1)e_k − Σ e_j.
            let lam_k = |k: usize| -> Vec<i64> {
                let mut v = vec![-1; n];
                v[k] = n as i64;
                v
            };
            for k in 0..n {
                rows.push(template_row(&lam_k(k), false, &lam_k(k), lambda));
                if k + 1 < n {
                    rows.push(template_row(&lam_k(k + 1), true, &lam_k(k), lambda));
                }
            }
        }
        GroupFamily::SOstar2n { n: 3 } => {
            for (a, b) in [
                ([-1, 1, 1], [-1, 1, 1]),
                ([1, -1, 1], [1, -1, 1]),
                ([1, 1, -1], [1, 1, -1]),
                ([1, -1, -1], [-1, 1, -1]),
                ([-1, 1, -1], [-1, -1, 1]),
            ] {
                rows.push(template_row(&a, false, &b, lambda));
            }
        }
        GroupFamily::SOstar2n { n: 4 } => {
            // The cone Λ + C(ℜ_n⁺).
            for k in 0..4 {
                let mut a = vec![1; 4];
                a[k] = -1;
                rows.push(template_row(&a, false, &a, lambda));
                let e = unit_int(4, k, 1);
                rows.push(template_row(&e, false, &e, lambda));
            }
            for (a, b) in [
                ([1, -1, 1, -1], [1, 1, -1, -1]),
                ([-1, 1, 1, -1], [1, -1, 1, -1]),
                ([1, -1, -1, 1], [1, -1, 1, -1]),
                ([-1, 1, -1, 1], [-1, 1, 1, -1]),
                ([-1, 1, -1, 1], [1, -1, -1, 1]),
                ([-1, -1, 1, 1], [-1, 1, -1, 1]),
            ] {
                rows.push(template_row(&a, true, &b, lambda));
            }
        }
        GroupFamily::SUpq { p: 2, q: 2 } => {
            rows.push(template_row(&[1, 0, 0, 0], false, &[1, 0, 0, 0], lambda));
            rows.push(template_row(&[0, 1, 0, 0], false, &[0, 1, 0, 0], lambda));
            rows.push(template_row(&[0, 0, 1, 0], true, &[0, 0, 1, 0], lambda));
            rows.push(template_row(&[0, 0, 0, 1], true, &[0, 0, 0, 1], lambda));
            // |ξ₁ − ξ₂ − ξ₃ + ξ₄| ≤ Λ₁ − Λ₂ + Λ₃ − Λ₄.
            rows.push(template_row(&[1, -1, -1, 1], true, &[1, -1, 1, -1], lambda));
            rows.push(template_row(&[-1, 1, 1, -1], true, &[1, -1, 1, -1], lambda));
            // −ξ₁ + ξ₂ − ξ₃ + ξ₄ ≤ −|Λ₁ − Λ₂ − Λ₃ + Λ₄|, i.e. ≤ both ±(…).
            rows.push(template_row(&[-1, 1, -1, 1], true, &[1, -1, -1, 1], lambda));
            rows.push(template_row(&[-1, 1, -1, 1], true, &[-1, 1, 1, -1], lambda));
        }
        _ => {
            return Err(Error::UnsupportedFamily(format!(
                "no explicit inequality list for {}",
                g.family.display_name()
            )))
        }
    }
    let mut all: Vec<AffineIneq> = g.chamber.ineqs().to_vec();
    let chamber_len = all.len();
    all.extend(rows);
    let mut provenance = vec![Provenance::Chamber; chamber_len];
    let system = HPolyhedron::new(g.dim, all.clone())?;
    // Keep the provenance aligned with the rows that survived deduplication.
    let mut seen: Vec<AffineIneq> = Vec::new();
    let mut dropped = Vec::new();
    for c in all.into_iter().skip(chamber_len) {
        let cc = c.canonical();
        if cc.is_trivial() || g.chamber.ineqs().contains(&cc) || seen.contains(&cc) {
            dropped.push((cc, Provenance::ClosedForm));
        } else {
            seen.push(cc);
            provenance.push(Provenance::ClosedForm);
        }
    }
    debug_assert_eq!(provenance.len(), system.len());
    Ok(OrbitPolytope { group: g.clone(), lambda: lambda.clone(), system, provenance, dropped })
}

/// The linear system in the Schmid multipliers `m` expressing that
/// `γ = Σ m_i γ_i` (with `m₁ ≥ ⋯ ≥ m_r ≥ 0`) satisfies `V_γ ⊆ V_μ ⊗ V_Λ*`
/// on every unitary block.
fn oracle_system(g: &GroupData, lambda: &RatVec, mu: &RatVec) -> Result<HPolyhedron> {
    let r = g.schmid.len();
    let mut rows = Vec::new();
    for i in 0..r {
        let mut a = vec![rat(0); r];
        a[i] = rat(-1);
        if i + 1 < r {
            a[i + 1] = rat(1);
        }
        rows.push(AffineIneq::le(RatVec::new(a), rat(0)));
    }
    // Coefficient of m_i in Σ_{k ∈ S} γ_k.
    let gamma_sum = |idx: &[usize]| -> RatVec {
        RatVec::new(g.schmid.iter().map(|gi| idx.iter().map(|&k| gi[k].clone()).sum()).collect())
    };
    for block in g.unitary_blocks() {
        let nb = block.len();
        let mu_b: Vec<Rational> = block.clone().map(|k| mu[k].clone()).collect();
        // Λ* restricted to the block: negated and reversed.
        let dual_b: Vec<Rational> = block.clone().rev().map(|k| -lambda[k].clone()).collect();
        let all: Vec<usize> = block.clone().collect();
        let total: Rational = mu_b.iter().chain(&dual_b).sum();
        rows.push(AffineIneq::eq(gamma_sum(&all), total));
        for rr in 1..nb {
            for t in enum_t(rr, nb)?.iter() {
                let bound: Rational = t.i.iter().map(|&i| mu_b[i - 1].clone()).sum::<Rational>()
                    + t.j.iter().map(|&j| dual_b[j - 1].clone()).sum::<Rational>();
                let lidx: Vec<usize> = t.l.iter().map(|&l| block.start + l - 1).collect();
                rows.push(AffineIneq::le(gamma_sum(&lidx), bound));
            }
        }
    }
    HPolyhedron::new(r, rows)
}

fn oracle_precheck(g: &GroupData, lambda: &RatVec, mu: &RatVec) -> Result<bool> {
    require_pipeline_family(g)?;
    lambda.check_dim(g.dim)?;
    mu.check_dim(g.dim)?;
    g.is_dominant(mu)
}

/// Membership of `μ` in `Δ_K(𝒪_Λ)` decided by the Horn inequalities on the
/// multiplicity-free decomposition of `ℂ[𝔭⁻]`.
pub fn horn_oracle_member(g: &GroupData, lambda: &RatVec, mu: &RatVec) -> Result<bool> {
    if !oracle_precheck(g, lambda, mu)? {
        return Ok(false);
    }
    Ok(lp_feasible(&oracle_system(g, lambda, mu)?))
}

/// A witness `γ = Σ m_i γ_i` for [`horn_oracle_member`], if one exists.
pub fn horn_oracle_witness(g: &GroupData, lambda: &RatVec, mu: &RatVec) -> Result<Option<RatVec>> {
    if !oracle_precheck(g, lambda, mu)? {
        return Ok(None);
    }
    Ok(lp_witness(&oracle_system(g, lambda, mu)?).map(|m| {
        g.schmid.iter().zip(m.entries()).fold(RatVec::zeros(g.dim), |acc, (gi, mi)| acc.add(&gi.scale(mi)))
    }))
}

/// One disagreement found by [`cross_check`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Disagreement {
    /// The grid point.
    pub point: Vec<String>,
    /// Membership in the assembled polyhedron.
    pub assembled: bool,
    /// The oracle's verdict.
    pub oracle: bool,
}

/// Summary of a grid comparison between assembly and oracle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheckReport {
    /// Group specification.
    pub group: String,
    /// `Λ`.
    #[serde(rename = "Lambda")]
    pub lambda: Vec<String>,
    /// Grid radius.
    pub radius: u32,
    /// Number of dominant grid points tested.
    pub points: usize,
    /// Number of those inside the polyhedron.
    pub inside: usize,
    /// All disagreements.
    pub disagreements: Vec<Disagreement>,
}

impl CrossCheckReport {
    /// One-line summary.
    pub fn summary(&self) -> String {
        format!(
            "{} points ({} inside), {} disagreements",
            self.points,
            self.inside,
            self.disagreements.len()
        )
    }
}

/// The dominant points of `Λ + (½ℤ ∩ [−R, R])^dim` (restricted to the trace
/// hyperplane where it applies), in lexicographic order of offsets.
pub fn grid_points(g: &GroupData, lambda: &RatVec, radius: u32) -> Result<Vec<RatVec>> {
    lambda.check_dim(g.dim)?;
    let steps: Vec<Rational> = (-2 * radius as i64..=2 * radius as i64).map(|k| Rational::new(k.into(), 2.into())).collect();
    let mut out = Vec::new();
    let mut idx = vec![0usize; g.dim];
    loop {
        let p = RatVec::new(idx.iter().enumerate().map(|(i, &k)| lambda[i].clone() + &steps[k]).collect());
        if g.is_dominant(&p)? {
            out.push(p);
        }
        let Some(pos) = (0..g.dim).rev().find(|&i| idx[i] + 1 < steps.len()) else { break };
        idx[pos] += 1;
        for k in idx.iter_mut().skip(pos + 1) {
            *k = 0;
        }
    }
    Ok(out)
}

/// Compare membership in the assembled polyhedron with the oracle on
/// [`grid_points`].
pub fn cross_check(g: &GroupData, lambda: &RatVec, radius: u32) -> Result<CrossCheckReport> {
    let poly = assemble(g, lambda)?;
    cross_check_with(&poly, radius)
}

/// [`cross_check`] against an already assembled polyhedron.
pub fn cross_check_with(poly: &OrbitPolytope, radius: u32) -> Result<CrossCheckReport> {
    let g = &poly.group;
    let points = grid_points(g, &poly.lambda, radius)?;
    let verdicts: Vec<(bool, bool)> = points
        .par_iter()
        .map(|p| Ok((poly.member(p)?, horn_oracle_member(g, &poly.lambda, p)?)))
        .collect::<Result<_>>()?;
    let disagreements = points
        .iter()
        .zip(&verdicts)
        .filter(|(_, (a, o))| a != o)
        .map(|(p, &(assembled, oracle))| Disagreement { point: p.to_strings(), assembled, oracle })
        .collect();
    Ok(CrossCheckReport {
        group: g.family.to_string(),
        lambda: poly.lambda.to_strings(),
        radius,
        points: points.len(),
        inside: verdicts.iter().filter(|(a, _)| *a).count(),
        disagreements,
    })
}

/// True if every inequality of `outer` is implied by `inner`.
pub fn contained_in(inner: &HPolyhedron, outer: &HPolyhedron) -> Result<bool> {
    for c in outer.ineqs() {
        if !implies(inner, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `Δ ⊆ Λ + cone(ℜ_n⁺)`.
pub fn within_shifted_cone(p: &OrbitPolytope) -> Result<bool> {
    contained_in(&p.system, &p.group.noncompact_cone()?.translate(&p.lambda)?)
}

/// `Δ ⊆ closure(𝒞_hol)`.
pub fn within_hol_closure(p: &OrbitPolytope) -> Result<bool> {
    contained_in(&p.system, &p.group.hol_closure())
}

/// Sample points of `Δ` of the form `Λ + Σ c_β β` with small nonnegative
/// integer `c_β` and check that they pair strictly positively with every
/// noncompact positive root.  Returns the number of points checked, or the
/// first offending point.
pub fn strict_hol_samples(p: &OrbitPolytope, per_root: i64) -> Result<std::result::Result<usize, RatVec>> {
    let roots = &p.group.noncompact_pos;
    let mut checked = 0;
    let mut candidates = vec![p.lambda.clone()];
    for (i, b) in roots.iter().enumerate() {
        for c in 1..=per_root {
            candidates.push(p.lambda.add(&b.scale(&rat(c))));
            let next = &roots[(i + 1) % roots.len()];
            candidates.push(p.lambda.add(&b.scale(&rat(c))).add(next));
        }
    }
    for x in candidates {
        if !p.member(&x)? {
            continue;
        }
        checked += 1;
        if roots.iter().any(|b| !b.dot(&x).is_positive()) {
            return Ok(Err(x));
        }
    }
    Ok(Ok(checked))
}

/// Human-readable one-line rendering of `⟨a, ξ⟩ ≤ b` rows with provenance.
pub fn describe_rows(p: &OrbitPolytope) -> Vec<String> {
    p.system
        .ineqs()
        .iter()
        .zip(&p.provenance)
        .map(|(c, prov)| format!("{}    [{}]", c.to_text("xi"), prov))
        .collect()
}

/// `format_rational` applied entrywise, comma separated.
pub fn format_point(v: &RatVec) -> String {
    v.entries().iter().map(format_rational).collect::<Vec<_>>().join(",")
}
