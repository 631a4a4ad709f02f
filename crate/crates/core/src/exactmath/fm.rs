//! Fourier–Motzkin elimination.
//!
//! Projection of a system onto its leading coordinates.  Without pruning
//! this is a completely LP-free procedure, which makes [`fm_feasible`] a
//! useful independent oracle against the simplex code for small dimensions.

use std::collections::HashSet;

use num_traits::{Signed, Zero};

use super::{lp::remove_redundant, AffineIneq, HPolyhedron, RatVec, Rational, Relation};
use crate::error::{Error, Result};

fn drop_coord(c: &AffineIneq, var: usize) -> AffineIneq {
    let mut entries = c.normal().entries().to_vec();
    entries.remove(var);
    let normal = RatVec::new(entries);
    match c.kind() {
        Relation::Le => AffineIneq::le(normal, c.bound().clone()),
        Relation::Eq => AffineIneq::eq(normal, c.bound().clone()),
    }
}

fn combine(p: &AffineIneq, fp: &Rational, q: &AffineIneq, fq: &Rational, kind: Relation) -> AffineIneq {
    let normal = p.normal().scale(fp).add(&q.normal().scale(fq));
    let bound = p.bound() * fp + q.bound() * fq;
    match kind {
        Relation::Le => AffineIneq::le(normal, bound),
        Relation::Eq => AffineIneq::eq(normal, bound),
    }
}

/// Eliminate coordinate `var` (0-based), returning the projection onto the
/// remaining `dim − 1` coordinates.
pub fn fm_eliminate(sys: &HPolyhedron, var: usize) -> Result<HPolyhedron> {
    let dim = sys.dim();
    if var >= dim {
        return Err(Error::InvalidParams(format!("cannot eliminate coordinate {var} of {dim}")));
    }
    if sys.is_empty_marker() {
        return Ok(HPolyhedron::empty(dim - 1));
    }
    let ineqs = sys.ineqs();
    if let Some(e) = ineqs.iter().find(|c| c.is_equality() && !c.normal()[var].is_zero()) {
        let ev = e.normal()[var].clone();
        let out = ineqs
            .iter()
            .filter(|c| *c != e)
            .map(|c| {
                let cv = &c.normal()[var];
                let reduced = if cv.is_zero() {
                    c.clone()
                } else {
                    combine(c, &Rational::from_integer(1.into()), e, &(-(cv / &ev)), c.kind())
                };
                drop_coord(&reduced, var)
            })
            .collect();
        return HPolyhedron::new(dim - 1, out);
    }
    let mut out = Vec::new();
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for c in ineqs {
        let v = &c.normal()[var];
        if v.is_zero() {
            out.push(drop_coord(c, var));
        } else if v.is_positive() {
            pos.push(c);
        } else {
            neg.push(c);
        }
    }
    let mut seen = HashSet::new();
    for p in &pos {
        for q in &neg {
            let fp = -q.normal()[var].clone();
            let fq = p.normal()[var].clone();
            let c = drop_coord(&combine(p, &fp, q, &fq, Relation::Le), var).canonical();
            if seen.insert(c.clone()) {
                out.push(c);
            }
        }
    }
    HPolyhedron::new(dim - 1, out)
}

/// Project onto the first `keep` coordinates by eliminating the trailing
/// ones.  With `prune`, redundant constraints are removed (by LP) after
/// every elimination step, which keeps the system small.
pub fn fm_project(sys: &HPolyhedron, keep: usize, prune: bool) -> Result<HPolyhedron> {
    if keep > sys.dim() {
        return Err(Error::InvalidParams(format!("cannot keep {keep} of {} coordinates", sys.dim())));
    }
    let mut cur = sys.clone();
    while cur.dim() > keep {
        cur = fm_eliminate(&cur, cur.dim() - 1)?;
        if prune {
            cur = remove_redundant(&cur);
        }
    }
    Ok(merge_opposite_pairs(&cur))
}

/// Feasibility decided purely by Fourier–Motzkin elimination of every
/// variable (no linear programming involved).
pub fn fm_feasible(sys: &HPolyhedron) -> bool {
    let mut cur = sys.clone();
    while cur.dim() > 0 {
        cur = fm_eliminate(&cur, cur.dim() - 1).expect("coordinate in range");
        if cur.is_empty_marker() {
            return false;
        }
    }
    !cur.is_empty_marker()
}

/// Replace each pair `a·x ≤ b`, `−a·x ≤ −b` by the equality `a·x = b`.
pub fn merge_opposite_pairs(sys: &HPolyhedron) -> HPolyhedron {
    if sys.is_empty_marker() {
        return sys.clone();
    }
    let set: HashSet<&AffineIneq> = sys.ineqs().iter().collect();
    let mut out = Vec::new();
    for c in sys.ineqs() {
        if c.kind() == Relation::Le {
            let opposite = AffineIneq::le(c.normal().neg(), -c.bound().clone()).canonical();
            if set.contains(&opposite) {
                out.push(AffineIneq::eq(c.normal().clone(), c.bound().clone()));
                continue;
            }
        }
        out.push(c.clone());
    }
    HPolyhedron::new(sys.dim(), out).expect("same dimension")
}

/// H-representation of the closed convex cone generated by `generators`
/// in `ℚ^dim` (the origin alone when there are no generators).
pub fn cone_hrep(generators: &[RatVec], dim: usize) -> Result<HPolyhedron> {
    for g in generators {
        g.check_dim(dim)?;
    }
    let k = generators.len();
    let total = dim + k;
    let mut cs = Vec::new();
    for i in 0..dim {
        let mut a = vec![Rational::zero(); total];
        a[i] = Rational::from_integer(1.into());
        for (j, g) in generators.iter().enumerate() {
            a[dim + j] = -g[i].clone();
        }
        cs.push(AffineIneq::eq(RatVec::new(a), Rational::zero()));
    }
    for j in 0..k {
        let mut a = vec![Rational::zero(); total];
        a[dim + j] = Rational::from_integer((-1).into());
        cs.push(AffineIneq::le(RatVec::new(a), Rational::zero()));
    }
    let sys = HPolyhedron::new(total, cs)?;
    fm_project(&sys, dim, true)
}
