//! Root data of the classical Hermitian families `Sp(2n,ℝ)`, `SU(p,q)`,
//! `SO*(2n)` and `SO(p,2)`.
//!
//! Each family instance records, in coordinates `e_1*, …, e_d*` of the dual
//! of a compact Cartan subalgebra: compact and noncompact positive roots,
//! `ρ` (half the sum of compact positive roots), the dominant chamber, the
//! holomorphic chamber, a maximal strongly orthogonal family of noncompact
//! roots, and the Weyl group of `K` when it is a product of symmetric groups.
//!
//! The invariant bilinear form is replaced by the standard dot product in
//! these coordinates.  Every membership question in the crate is invariant
//! under positive rescaling of the form, so its normalisation is irrelevant.

use std::fmt;
use std::ops::Range;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{cone_hrep, rat, AffineIneq, HPolyhedron, RatVec, Rational};
use crate::weyl::{SimpleReflection, WeylGroup};

/// A classical Hermitian family together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupFamily {
    /// `Sp(2n, ℝ)`, `n ≥ 1`; `K = U(n)`, coordinates `ξ_1..ξ_n`.
    Sp2nR {
        /// Rank.
        n: usize,
    },
    /// `SU(p, q)`, `p ≥ q ≥ 1`; `K = S(U(p) × U(q))`, coordinates
    /// `ξ_1..ξ_{p+q}` subject to `Σ ξ_i = 0`.
    SUpq {
        /// Size of the first unitary block.
        p: usize,
        /// Size of the second unitary block.
        q: usize,
    },
    /// `SU(n, 1)` in the `U(n)` convention: `n` coordinates, noncompact
    /// positive roots `β_k = e_k* + Σ_j e_j*`.
    SUn1 {
        /// Size of the unitary block.
        n: usize,
    },
    /// `SO*(2n)`, `n ≥ 3`; `K = U(n)`.
    SOstar2n {
        /// Rank.
        n: usize,
    },
    /// `SO(p, 2)`, `p ≥ 3`; `K = SO(p) × SO(2)`, coordinates
    /// `ξ_1..ξ_m, ξ_{m+1}` with `m = ⌊p/2⌋`, the last one for `SO(2)`.
    SOp2 {
        /// The real dimension parameter `p`.
        p: usize,
    },
}

impl GroupFamily {
    /// Parse `"sp:n=2"`, `"su:p=2,q=2"`, `"su:n=2,q=1"`, `"so_star:n=3"`,
    /// `"so:p=5"`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("bad group spec {text:?}: {why}"));
        let (tag, params) = text.trim().split_once(':').ok_or_else(|| bad("expected <family>:<params>"))?;
        let mut kv = std::collections::BTreeMap::new();
        for item in params.split(',') {
            let (k, v) = item.split_once('=').ok_or_else(|| bad("expected key=value"))?;
            let v: usize = v.trim().parse().map_err(|_| bad("parameter is not a nonnegative integer"))?;
            if kv.insert(k.trim().to_string(), v).is_some() {
                return Err(bad("repeated parameter"));
            }
        }
        let take = |keys: &[&str]| -> Result<Vec<usize>> {
            if kv.len() != keys.len() {
                return Err(bad(&format!("expected parameters {keys:?}")));
            }
            keys.iter().map(|k| kv.get(*k).copied().ok_or_else(|| bad(&format!("missing {k}")))).collect()
        };
        let fam = match tag.trim() {
            "sp" => GroupFamily::Sp2nR { n: take(&["n"])?[0] },
            "su" if kv.contains_key("n") => {
                let v = take(&["n", "q"])?;
                if v[1] != 1 {
                    return Err(bad("the n-coordinate convention requires q=1"));
                }
                GroupFamily::SUn1 { n: v[0] }
            }
            "su" => {
                let v = take(&["p", "q"])?;
                GroupFamily::SUpq { p: v[0], q: v[1] }
            }
            "so_star" => GroupFamily::SOstar2n { n: take(&["n"])?[0] },
            "so" => GroupFamily::SOp2 { p: take(&["p"])?[0] },
            other => return Err(bad(&format!("unknown family {other:?}"))),
        };
        fam.validate()?;
        Ok(fam)
    }

    /// Check the parameter ranges.
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            GroupFamily::Sp2nR { n } => n >= 1,
            GroupFamily::SUpq { p, q } => q >= 1 && p >= q,
            GroupFamily::SUn1 { n } => n >= 1,
            GroupFamily::SOstar2n { n } => n >= 3,
            GroupFamily::SOp2 { p } => p >= 3,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!("parameters out of range for {self}")))
        }
    }

    /// Human-readable name such as `Sp(4,R)` or `SU(2,2)`.
    pub fn display_name(&self) -> String {
        match *self {
            GroupFamily::Sp2nR { n } => format!("Sp({},R)", 2 * n),
            GroupFamily::SUpq { p, q } => format!("SU({p},{q})"),
            GroupFamily::SUn1 { n } => format!("SU({n},1)"),
            GroupFamily::SOstar2n { n } => format!("SO*({})", 2 * n),
            GroupFamily::SOp2 { p } => format!("SO({p},2)"),
        }
    }
}

impl fmt::Display for GroupFamily {
    /// The parseable specification string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupFamily::Sp2nR { n } => write!(f, "sp:n={n}"),
            GroupFamily::SUpq { p, q } => write!(f, "su:p={p},q={q}"),
            GroupFamily::SUn1 { n } => write!(f, "su:n={n},q=1"),
            GroupFamily::SOstar2n { n } => write!(f, "so_star:n={n}"),
            GroupFamily::SOp2 { p } => write!(f, "so:p={p}"),
        }
    }
}

/// Weyl group of `K` as used by the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylDescriptor {
    /// Product of symmetric groups, when `K` has type-A Weyl group.
    pub group: Option<WeylGroup>,
    /// True when the Weyl group also contains sign changes (the `SO(p,2)`
    /// families); such groups are only used through their dominance tests.
    pub sign_action: bool,
}

/// A simple compact root with its coroot, for the Chevalley formula.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleCoroot {
    /// The simple reflection of the root.
    pub reflection: SimpleReflection,
    /// The coroot, in the same coordinates as weights.
    pub coroot: RatVec,
}

/// All root-theoretic data of one family instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupData {
    /// The family.
    pub family: GroupFamily,
    /// Number of coordinates.
    pub dim: usize,
    /// Compact positive roots.
    pub compact_pos: Vec<RatVec>,
    /// Noncompact positive roots (weights of `𝔭⁺`).
    pub noncompact_pos: Vec<RatVec>,
    /// Half the sum of the compact positive roots.
    pub rho: RatVec,
    /// Maximal strongly orthogonal family `γ_1, …, γ_r`.
    pub schmid: Vec<RatVec>,
    /// Dominant chamber (with `Σ ξ = 0` for `SU(p,q)`).
    pub chamber: HPolyhedron,
    /// Constraints `⟨−β, ξ⟩ ≤ 0` for `β` noncompact positive, understood
    /// with strict inequality: together with `chamber` they cut out the
    /// holomorphic chamber.
    pub hol_chamber_strict: Vec<AffineIneq>,
    /// Weyl group of `K`.
    pub weyl: WeylDescriptor,
    /// Weights of `𝔭⁻` (negatives of the noncompact positive roots).
    pub weights_p_minus: Vec<RatVec>,
    /// Simple compact roots with coroots (type-A families only).
    pub coroot_pairing: Vec<SimpleCoroot>,
}

fn e(dim: usize, i: usize) -> RatVec {
    RatVec::unit(dim, i)
}

fn type_a_roots(dim: usize, blocks: &[Range<usize>]) -> Vec<RatVec> {
    let mut out = Vec::new();
    for b in blocks {
        for i in b.clone() {
            for j in i + 1..b.end {
                out.push(e(dim, i).sub(&e(dim, j)));
            }
        }
    }
    out
}

fn decreasing_chamber(dim: usize, blocks: &[Range<usize>]) -> Vec<AffineIneq> {
    let mut out = Vec::new();
    for b in blocks {
        for i in b.start + 1..b.end {
            out.push(AffineIneq::le(e(dim, i).sub(&e(dim, i - 1)), Rational::zero()));
        }
    }
    out
}

fn half_sum(vs: &[RatVec], dim: usize) -> RatVec {
    vs.iter().fold(RatVec::zeros(dim), |acc, v| acc.add(v)).scale(&crate::exactmath::ratio(1, 2))
}

impl GroupData {
    /// Instantiate the data of a family.
    pub fn build(family: GroupFamily) -> Result<GroupData> {
        family.validate()?;
        let (dim, blocks): (usize, Vec<Range<usize>>) = match family {
            GroupFamily::Sp2nR { n } | GroupFamily::SOstar2n { n } | GroupFamily::SUn1 { n } => (n, std::iter::once(0..n).collect()),
            GroupFamily::SUpq { p, q } => (p + q, vec![0..p, p..p + q]),
            GroupFamily::SOp2 { p } => (p / 2 + 1, Vec::new()),
        };
        let (compact_pos, noncompact_pos, schmid, mut chamber_ineqs) = match family {
            GroupFamily::Sp2nR { n } => {
                let mut nc = Vec::new();
                for i in 0..n {
                    for j in i..n {
                        nc.push(e(dim, i).add(&e(dim, j)));
                    }
                }
                let schmid = (0..n).map(|i| e(dim, i).scale(&rat(2))).collect();
                (type_a_roots(dim, &blocks), nc, schmid, decreasing_chamber(dim, &blocks))
            }
            GroupFamily::SOstar2n { n } => {
                let mut nc = Vec::new();
                for i in 0..n {
                    for j in i + 1..n {
                        nc.push(e(dim, i).add(&e(dim, j)));
                    }
                }
                let schmid = (0..n / 2).map(|k| e(dim, 2 * k).add(&e(dim, 2 * k + 1))).collect();
                (type_a_roots(dim, &blocks), nc, schmid, decreasing_chamber(dim, &blocks))
            }
            GroupFamily::SUpq { p, q } => {
                let mut nc = Vec::new();
                for i in 0..p {
                    for j in 0..q {
                        nc.push(e(dim, i).sub(&e(dim, p + j)));
                    }
                }
                let schmid = (0..q).map(|j| e(dim, j).sub(&e(dim, p + q - 1 - j))).collect();
                let mut ch = decreasing_chamber(dim, &blocks);
                ch.push(AffineIneq::eq(RatVec::new(vec![rat(1); dim]), Rational::zero()));
                (type_a_roots(dim, &blocks), nc, schmid, ch)
            }
            GroupFamily::SUn1 { n } => {
                let ones = RatVec::new(vec![rat(1); n]);
                let nc: Vec<RatVec> = (0..n).map(|k| e(dim, k).add(&ones)).collect();
                let schmid = vec![nc[0].clone()];
                (type_a_roots(dim, &blocks), nc, schmid, decreasing_chamber(dim, &blocks))
            }
            GroupFamily::SOp2 { p } => {
                let m = p / 2;
                let last = e(dim, m);
                let mut compact = Vec::new();
                for i in 0..m {
                    for j in i + 1..m {
                        compact.push(e(dim, i).sub(&e(dim, j)));
                        compact.push(e(dim, i).add(&e(dim, j)));
                    }
                    if p % 2 == 1 {
                        compact.push(e(dim, i));
                    }
                }
                let mut nc = Vec::new();
                for i in 0..m {
                    nc.push(e(dim, i).add(&last));
                    nc.push(e(dim, i).neg().add(&last));
                }
                if p % 2 == 1 {
                    nc.push(last.clone());
                }
                let schmid = vec![e(dim, 0).add(&last), e(dim, 0).neg().add(&last)];
                let mut ch = Vec::new();
                for i in 1..m {
                    ch.push(AffineIneq::le(e(dim, i).sub(&e(dim, i - 1)), Rational::zero()));
                }
                if p % 2 == 0 {
                    ch.push(AffineIneq::le(e(dim, m - 1).add(&e(dim, m - 2)).neg(), Rational::zero()));
                } else {
                    ch.push(AffineIneq::le(e(dim, m - 1).neg(), Rational::zero()));
                }
                (compact, nc, schmid, ch)
            }
        };
        let rho = half_sum(&compact_pos, dim);
        let chamber = HPolyhedron::new(dim, std::mem::take(&mut chamber_ineqs))?;
        let hol_chamber_strict = noncompact_pos.iter().map(|b| AffineIneq::le(b.neg(), Rational::zero())).collect();
        let weights_p_minus = noncompact_pos.iter().map(RatVec::neg).collect();
        let (weyl, coroot_pairing) = if blocks.is_empty() {
            (WeylDescriptor { group: None, sign_action: true }, Vec::new())
        } else {
            let group = WeylGroup::new(blocks.iter().map(|b| b.len()).collect())?;
            let offsets = group.offsets();
            let coroots = group
                .simple_reflections()
                .into_iter()
                .map(|s| {
                    let k = offsets[s.factor] + s.index - 1;
                    SimpleCoroot { reflection: s, coroot: e(dim, k).sub(&e(dim, k + 1)) }
                })
                .collect();
            (WeylDescriptor { group: Some(group), sign_action: false }, coroots)
        };
        Ok(GroupData {
            family,
            dim,
            compact_pos,
            noncompact_pos,
            rho,
            schmid,
            chamber,
            hol_chamber_strict,
            weyl,
            weights_p_minus,
            coroot_pairing,
        })
    }

    /// Parse a specification string and build the data.
    pub fn from_spec(spec: &str) -> Result<GroupData> {
        GroupData::build(GroupFamily::parse(spec)?)
    }

    /// The Weyl group of `K` as a product of symmetric groups; families
    /// without one report an unsupported-family error.
    pub fn weyl_group(&self) -> Result<&WeylGroup> {
        self.weyl.group.as_ref().ok_or_else(|| {
            Error::UnsupportedFamily(format!(
                "{} has no type-A Weyl group data; only admissible one-parameter subgroups are available",
                self.family.display_name()
            ))
        })
    }

    /// Coordinate ranges of the unitary factors of `K` (empty for `SO(p,2)`).
    pub fn unitary_blocks(&self) -> Vec<Range<usize>> {
        match self.family {
            GroupFamily::SUpq { p, q } => vec![0..p, p..p + q],
            GroupFamily::SOp2 { .. } => Vec::new(),
            _ => std::iter::once(0..self.dim).collect(),
        }
    }

    /// Dimension of the space spanned by the roots (`dim − 1` for
    /// `SU(p,q)`, whose roots live in the trace-zero hyperplane).
    pub fn effective_dim(&self) -> usize {
        match self.family {
            GroupFamily::SUpq { .. } => self.dim - 1,
            _ => self.dim,
        }
    }

    /// True if `v` lies in the (closed) dominant chamber.
    pub fn is_dominant(&self, v: &RatVec) -> Result<bool> {
        self.chamber.contains(v)
    }

    /// True if `v` is dominant and pairs strictly positively with every
    /// noncompact positive root.
    pub fn in_hol_chamber(&self, v: &RatVec) -> Result<bool> {
        v.check_dim(self.dim)?;
        Ok(self.chamber.contains(v)? && self.noncompact_pos.iter().all(|b| b.dot(v).is_positive()))
    }

    /// True if `v` lies in the closure of the holomorphic chamber.
    pub fn in_hol_closure(&self, v: &RatVec) -> Result<bool> {
        v.check_dim(self.dim)?;
        Ok(self.chamber.contains(v)? && self.noncompact_pos.iter().all(|b| !b.dot(v).is_negative()))
    }

    /// The closed holomorphic chamber as a polyhedron.
    pub fn hol_closure(&self) -> HPolyhedron {
        self.chamber
            .intersect(&HPolyhedron::new(self.dim, self.hol_chamber_strict.clone()).expect("same dimension"))
            .expect("same dimension")
    }

    /// `{Σ m_i γ_i : m_1 ≥ ⋯ ≥ m_r ≥ 0}` as a polyhedron, computed by
    /// Fourier–Motzkin elimination of the multipliers.
    pub fn schmid_cone(&self) -> Result<HPolyhedron> {
        let mut partial = RatVec::zeros(self.dim);
        let gens: Vec<RatVec> = self
            .schmid
            .iter()
            .map(|g| {
                partial = partial.add(g);
                partial.clone()
            })
            .collect();
        cone_hrep(&gens, self.dim)
    }

    /// The cone generated by the noncompact positive roots.
    pub fn noncompact_cone(&self) -> Result<HPolyhedron> {
        cone_hrep(&self.noncompact_pos, self.dim)
    }

    /// True if `v` is a root (compact or noncompact, either sign).
    pub fn is_root(&self, v: &RatVec) -> bool {
        let neg = v.neg();
        self.compact_pos.iter().chain(&self.noncompact_pos).any(|r| r == v || *r == neg)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_small_families() -> Vec<GroupFamily> {
        let mut v = Vec::new();
        for n in 1..=5 {
            v.push(GroupFamily::Sp2nR { n });
            v.push(GroupFamily::SUn1 { n });
        }
        for n in 3..=6 {
            v.push(GroupFamily::SOstar2n { n });
        }
        for p in 1..=5 {
            for q in 1..=p {
                v.push(GroupFamily::SUpq { p, q });
            }
        }
        for p in 3..=9 {
            v.push(GroupFamily::SOp2 { p });
        }
        v
    }

    #[test]
    fn spec_strings_round_trip() {
        for f in all_small_families() {
            assert_eq!(GroupFamily::parse(&f.to_string()).unwrap(), f);
        }
        assert!(GroupFamily::parse("sp:n=0").is_err());
        assert!(GroupFamily::parse("su:p=1,q=2").is_err());
        assert!(GroupFamily::parse("su:n=3,q=2").is_err());
        assert!(GroupFamily::parse("so_star:n=2").is_err());
        assert!(GroupFamily::parse("xx:n=2").is_err());
        assert!(GroupFamily::parse("sp").is_err());
    }

    #[test]
    fn root_counts() {
        for f in all_small_families() {
            let g = GroupData::build(f).unwrap();
            let expect = match f {
                GroupFamily::Sp2nR { n } => n * (n + 1) / 2,
                GroupFamily::SUpq { p, q } => p * q,
                GroupFamily::SUn1 { n } => n,
                GroupFamily::SOstar2n { n } => n * (n - 1) / 2,
                GroupFamily::SOp2 { p } => p,
            };
            assert_eq!(g.noncompact_pos.len(), expect, "{f}");
            assert_eq!(g.weights_p_minus.len(), expect);
            for (a, b) in g.weights_p_minus.iter().zip(&g.noncompact_pos) {
                assert_eq!(*a, b.neg());
            }
        }
    }

    #[test]
    fn schmid_families_are_strongly_orthogonal() {
        for f in all_small_families() {
            let g = GroupData::build(f).unwrap();
            for i in 0..g.schmid.len() {
                for j in 0..g.schmid.len() {
                    if i != j {
                        assert!(!g.is_root(&g.schmid[i].add(&g.schmid[j])), "{f}");
                        assert!(!g.is_root(&g.schmid[i].sub(&g.schmid[j])), "{f}");
                    }
                }
            }
        }
    }

    #[test]
    fn noncompact_roots_pair_nonnegatively() {
        for f in all_small_families() {
            if matches!(f, GroupFamily::SOp2 { .. }) {
                continue;
            }
            let g = GroupData::build(f).unwrap();
            for a in &g.noncompact_pos {
                for b in &g.noncompact_pos {
                    assert!(!a.dot(b).is_negative(), "{f}");
                }
            }
        }
    }

    #[test]
    fn holomorphic_chamber_examples() {
        let sp4 = GroupData::from_spec("sp:n=2").unwrap();
        assert!(sp4.in_hol_chamber(&RatVec::from_ints(&[3, 1])).unwrap());
        assert!(!sp4.in_hol_chamber(&RatVec::from_ints(&[3, 0])).unwrap());
        assert!(sp4.in_hol_chamber(&RatVec::from_ints(&[1])).is_err());
        let su22 = GroupData::from_spec("su:p=2,q=2").unwrap();
        assert!(su22.in_hol_chamber(&RatVec::from_ints(&[3, 1, -1, -3])).unwrap());
        assert!(!su22.in_hol_chamber(&RatVec::from_ints(&[3, -1, 1, -3])).unwrap());
        assert!(!su22.in_hol_chamber(&RatVec::from_ints(&[3, 1, -1, -2])).unwrap());
        assert_eq!(su22.noncompact_pos.iter().max_by_key(|b| b.dot(&RatVec::from_ints(&[3, 1, -1, -3]))).unwrap(), &RatVec::from_ints(&[1, 0, 0, -1]));
    }

    #[test]
    fn schmid_cones_match_known_facets() {
        // Sp: ξ_1 ≥ ⋯ ≥ ξ_n ≥ 0.
        let sp = GroupData::from_spec("sp:n=3").unwrap();
        let mut cs = decreasing_chamber(3, std::slice::from_ref(&(0..3)));
        cs.push(AffineIneq::le(e(3, 2).neg(), Rational::zero()));
        let expect = HPolyhedron::new(3, cs).unwrap();
        assert!(crate::exactmath::poly_equal(&sp.schmid_cone().unwrap(), &expect).unwrap());
        // SO*(6): the single ray through (1,1,0).
        let so6 = GroupData::from_spec("so_star:n=3").unwrap();
        let c = so6.schmid_cone().unwrap();
        assert!(c.contains(&RatVec::from_ints(&[2, 2, 0])).unwrap());
        assert!(!c.contains(&RatVec::from_ints(&[2, 1, 0])).unwrap());
        // SU(n,1) in n coordinates: the ray through (2,1,…,1).
        let su31 = GroupData::from_spec("su:n=3,q=1").unwrap();
        let c = su31.schmid_cone().unwrap();
        assert!(c.contains(&RatVec::from_ints(&[4, 2, 2])).unwrap());
        assert!(!c.contains(&RatVec::from_ints(&[4, 2, 1])).unwrap());
    }

    #[test]
    fn rho_is_half_sum() {
        let g = GroupData::from_spec("so_star:n=4").unwrap();
        assert_eq!(g.rho, RatVec::new(vec![crate::exactmath::ratio(3, 2), crate::exactmath::ratio(1, 2), crate::exactmath::ratio(-1, 2), crate::exactmath::ratio(-3, 2)]));
    }

    #[test]
    fn orthogonal_family_has_no_weyl_group() {
        let g = GroupData::from_spec("so:p=5").unwrap();
        assert!(matches!(g.weyl_group(), Err(Error::UnsupportedFamily(_))));
        assert!(g.weyl.sign_action);
        assert_eq!(g.dim, 3);
    }
}
