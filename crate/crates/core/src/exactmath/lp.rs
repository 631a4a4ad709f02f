//! Exact linear programming over the rationals.
//!
//! Equalities are eliminated by substitution (row reduction), the remaining
//! free variables are split into positive and negative parts, and a dense
//! two-phase tableau simplex with Bland's anti-cycling rule is run in exact
//! arithmetic.  Desk-scale systems (a handful of variables, a few hundred
//! constraints) are solved in milliseconds.

use num_traits::{One, Signed, Zero};

use super::{rref, AffineIneq, HPolyhedron, RatVec, Rational, Relation};
use crate::error::{Error, Result};

/// Result of maximising a linear objective over a system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LpOutcome {
    /// The system has no solution.
    Infeasible,
    /// The objective is unbounded above on the system.
    Unbounded,
    /// An optimal value and a point attaining it.
    Optimal {
        /// Maximum of the objective.
        value: Rational,
        /// A maximiser.
        point: RatVec,
    },
}

/// The system after substituting out its equalities: `x = x0 + Σ y_j dirs[j]`
/// with `y` free and `rows` the inequalities `⟨a, y⟩ ≤ b` in `y`-space.
struct Reduced {
    x0: RatVec,
    dirs: Vec<RatVec>,
    rows: Vec<(Vec<Rational>, Rational)>,
}

fn reduce(sys: &HPolyhedron) -> Option<Reduced> {
    let n = sys.dim();
    let mut eq_rows: Vec<Vec<Rational>> = sys
        .ineqs()
        .iter()
        .filter(|c| c.kind() == Relation::Eq)
        .map(|c| {
            let mut row = c.normal().entries().to_vec();
            row.push(c.bound().clone());
            row
        })
        .collect();
    let pivots = rref(&mut eq_rows, n + 1);
    if pivots.last() == Some(&n) {
        return None;
    }
    let mut x0 = vec![Rational::zero(); n];
    for (row, &pc) in eq_rows.iter().zip(&pivots) {
        x0[pc] = row[n].clone();
    }
    let dirs: Vec<RatVec> = (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (row, &pc) in eq_rows.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            RatVec::new(v)
        })
        .collect();
    let x0 = RatVec::new(x0);
    let mut rows = Vec::new();
    for c in sys.ineqs().iter().filter(|c| c.kind() == Relation::Le) {
        let a: Vec<Rational> = dirs.iter().map(|d| c.normal().dot(d)).collect();
        let b = c.bound() - c.normal().dot(&x0);
        if a.iter().all(Zero::is_zero) {
            if b.is_negative() {
                return None;
            }
            continue;
        }
        rows.push((a, b));
    }
    Some(Reduced { x0, dirs, rows })
}

/// Dense simplex tableau in equality standard form `A x = b`, `x ≥ 0`.
struct Tableau {
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    is_basic: Vec<bool>,
    ncols: usize,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        if !inv.is_one() {
            for x in self.rows[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
            self.rhs[r] = &self.rhs[r] * &inv;
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let pivot_rhs = self.rhs[r].clone();
        for i in 0..self.rows.len() {
            if i == r || self.rows[i][c].is_zero() {
                continue;
            }
            let f = self.rows[i][c].clone();
            for (x, y) in self.rows[i].iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = &*x - &f * y;
                }
            }
            self.rhs[i] = &self.rhs[i] - &f * &pivot_rhs;
        }
        self.rows[r] = pivot_row;
        self.is_basic[self.basis[r]] = false;
        self.basis[r] = c;
        self.is_basic[c] = true;
    }

    /// Maximise `cost · x` over the allowed columns starting from the current
    /// feasible basis.  Returns `false` if the objective is unbounded.
    fn optimize(&mut self, cost: &[Rational], allowed: &[bool]) -> bool {
        loop {
            let basic_costs: Vec<(usize, &Rational)> = self
                .basis
                .iter()
                .enumerate()
                .filter(|(_, &b)| !cost[b].is_zero())
                .map(|(i, &b)| (i, &cost[b]))
                .collect();
            let mut entering = None;
            for j in 0..self.ncols {
                if !allowed[j] || self.is_basic[j] {
                    continue;
                }
                let mut reduced = cost[j].clone();
                for &(i, cb) in &basic_costs {
                    let a = &self.rows[i][j];
                    if !a.is_zero() {
                        reduced -= cb * a;
                    }
                }
                if reduced.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(j) = entering else { return true };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..self.rows.len() {
                let a = &self.rows[i][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[i] / a;
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((r, _)) = leave else { return false };
            self.pivot(r, j);
        }
    }

    fn value_of(&self, col: usize) -> Rational {
        match self.basis.iter().position(|&b| b == col) {
            Some(i) => self.rhs[i].clone(),
            None => Rational::zero(),
        }
    }
}

/// Solve `max c·y` subject to `rows` with `y ∈ ℚ^d` free.  `None` objective
/// means feasibility only.  Returns `Infeasible`, `Unbounded`, or an optimal
/// point in `y`-space (value reported relative to `c·y`).
fn simplex_free(d: usize, rows: &[(Vec<Rational>, Rational)], objective: Option<&[Rational]>) -> LpOutcome {
    let m = rows.len();
    // Columns: u (d), v (d), slack (m), artificial (as needed).
    let mut art_rows = Vec::new();
    for (i, (_, b)) in rows.iter().enumerate() {
        if b.is_negative() {
            art_rows.push(i);
        }
    }
    let ncols = 2 * d + m + art_rows.len();
    let mut t = Tableau {
        rows: Vec::with_capacity(m),
        rhs: Vec::with_capacity(m),
        basis: Vec::with_capacity(m),
        is_basic: vec![false; ncols],
        ncols,
    };
    let mut art_index = 0;
    for (i, (a, b)) in rows.iter().enumerate() {
        let mut row = vec![Rational::zero(); ncols];
        let flip = b.is_negative();
        for k in 0..d {
            if a[k].is_zero() {
                continue;
            }
            let v = if flip { -a[k].clone() } else { a[k].clone() };
            row[d + k] = -v.clone();
            row[k] = v;
        }
        row[2 * d + i] = if flip { -Rational::one() } else { Rational::one() };
        let basic = if flip {
            let col = 2 * d + m + art_index;
            art_index += 1;
            row[col] = Rational::one();
            col
        } else {
            2 * d + i
        };
        t.rows.push(row);
        t.rhs.push(if flip { -b.clone() } else { b.clone() });
        t.basis.push(basic);
        t.is_basic[basic] = true;
    }
    let first_art = 2 * d + m;
    if !art_rows.is_empty() {
        let mut cost = vec![Rational::zero(); ncols];
        for c in cost.iter_mut().skip(first_art) {
            *c = -Rational::one();
        }
        let allowed = vec![true; ncols];
        let bounded = t.optimize(&cost, &allowed);
        debug_assert!(bounded, "phase one is bounded");
        let infeasibility: Rational =
            (first_art..ncols).map(|c| t.value_of(c)).fold(Rational::zero(), |acc, v| acc + v);
        if infeasibility.is_positive() {
            return LpOutcome::Infeasible;
        }
        // Drive artificial variables out of the basis (they sit at zero).
        let mut i = 0;
        while i < t.rows.len() {
            if t.basis[i] >= first_art {
                match (0..first_art).find(|&j| !t.rows[i][j].is_zero()) {
                    Some(j) => {
                        t.pivot(i, j);
                        i += 1;
                    }
                    None => {
                        let b = t.basis[i];
                        t.is_basic[b] = false;
                        t.rows.remove(i);
                        t.rhs.remove(i);
                        t.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
    }
    let mut allowed = vec![true; ncols];
    for a in allowed.iter_mut().skip(first_art) {
        *a = false;
    }
    if let Some(c) = objective {
        let mut cost = vec![Rational::zero(); ncols];
        for k in 0..d {
            cost[k] = c[k].clone();
            cost[d + k] = -c[k].clone();
        }
        if !t.optimize(&cost, &allowed) {
            return LpOutcome::Unbounded;
        }
    }
    let y: Vec<Rational> = (0..d).map(|k| t.value_of(k) - t.value_of(d + k)).collect();
    let value = match objective {
        Some(c) => c.iter().zip(&y).fold(Rational::zero(), |acc, (a, b)| acc + a * b),
        None => Rational::zero(),
    };
    LpOutcome::Optimal { value, point: RatVec::new(y) }
}

fn solve(sys: &HPolyhedron, objective: Option<&RatVec>) -> LpOutcome {
    if sys.is_empty_marker() {
        return LpOutcome::Infeasible;
    }
    let Some(red) = reduce(sys) else { return LpOutcome::Infeasible };
    let d = red.dirs.len();
    let c_y: Option<Vec<Rational>> = objective.map(|c| red.dirs.iter().map(|dir| c.dot(dir)).collect());
    match simplex_free(d, &red.rows, c_y.as_deref()) {
        LpOutcome::Optimal { point, .. } => {
            let mut x = red.x0.clone();
            for (yj, dir) in point.entries().iter().zip(&red.dirs) {
                if !yj.is_zero() {
                    x = x.add(&dir.scale(yj));
                }
            }
            let value = objective.map(|c| c.dot(&x)).unwrap_or_else(Rational::zero);
            LpOutcome::Optimal { value, point: x }
        }
        other => other,
    }
}

/// Maximise `⟨objective, x⟩` over the system.
pub fn lp_maximize(sys: &HPolyhedron, objective: &RatVec) -> Result<LpOutcome> {
    objective.check_dim(sys.dim())?;
    Ok(solve(sys, Some(objective)))
}

/// True iff some rational point satisfies every constraint.
pub fn lp_feasible(sys: &HPolyhedron) -> bool {
    !matches!(solve(sys, None), LpOutcome::Infeasible)
}

/// A rational point satisfying every constraint, if one exists.
pub fn lp_witness(sys: &HPolyhedron) -> Option<RatVec> {
    match solve(sys, None) {
        LpOutcome::Optimal { point, .. } => Some(point),
        _ => None,
    }
}

/// True iff every point of `sys` satisfies `c` (vacuously true when `sys`
/// is infeasible).
pub fn implies(sys: &HPolyhedron, c: &AffineIneq) -> Result<bool> {
    c.normal().check_dim(sys.dim())?;
    let upper_ok = match solve(sys, Some(c.normal())) {
        LpOutcome::Infeasible => return Ok(true),
        LpOutcome::Unbounded => false,
        LpOutcome::Optimal { value, .. } => value <= *c.bound(),
    };
    if !upper_ok || c.kind() == Relation::Le {
        return Ok(upper_ok);
    }
    Ok(match solve(sys, Some(&c.normal().neg())) {
        LpOutcome::Infeasible => true,
        LpOutcome::Unbounded => false,
        LpOutcome::Optimal { value, .. } => -value >= *c.bound(),
    })
}

/// Remove every constraint implied by the others; also returns the indices
/// (into `sys.ineqs()`) of the kept constraints.  An infeasible input yields
/// the distinguished empty system and no kept indices.
pub fn remove_redundant_indexed(sys: &HPolyhedron) -> (HPolyhedron, Vec<usize>) {
    if !lp_feasible(sys) {
        return (HPolyhedron::empty(sys.dim()), Vec::new());
    }
    let all = sys.ineqs();
    let mut keep = vec![true; all.len()];
    for i in 0..all.len() {
        let others: Vec<AffineIneq> =
            all.iter().enumerate().filter(|&(j, _)| j != i && keep[j]).map(|(_, c)| c.clone()).collect();
        let rest = HPolyhedron::new(sys.dim(), others).expect("same dimension");
        if implies(&rest, &all[i]).expect("same dimension") {
            keep[i] = false;
        }
    }
    let kept: Vec<usize> = (0..all.len()).filter(|&i| keep[i]).collect();
    let poly = HPolyhedron::new(sys.dim(), kept.iter().map(|&i| all[i].clone()).collect()).expect("same dimension");
    (poly, kept)
}

/// Remove every constraint implied by the others.
pub fn remove_redundant(sys: &HPolyhedron) -> HPolyhedron {
    remove_redundant_indexed(sys).0
}

/// True iff the two systems define the same point set.
pub fn poly_equal(p: &HPolyhedron, q: &HPolyhedron) -> Result<bool> {
    if p.dim() != q.dim() {
        return Err(Error::DimensionMismatch { expected: p.dim(), found: q.dim() });
    }
    let pf = lp_feasible(p);
    let qf = lp_feasible(q);
    if !pf || !qf {
        return Ok(pf == qf);
    }
    for c in q.ineqs() {
        if !implies(p, c)? {
            return Ok(false);
        }
    }
    for c in p.ineqs() {
        if !implies(q, c)? {
            return Ok(false);
        }
    }
    Ok(true)
}
