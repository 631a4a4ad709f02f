//! Dominant, indivisible, `𝔭⁻`-admissible one-parameter subgroups.
//!
//! A one-parameter subgroup `λ` (an integer vector in the coordinates of the
//! torus) is admissible when its line is exactly the common kernel of some
//! linearly independent family of weights of `𝔭⁻`; equivalently, the weights
//! vanishing on `λ` span a hyperplane of the root space.  For `SU(p,q)`
//! everything happens inside the trace-zero hyperplane.
//!
//! Two independent computations are provided: a generic enumeration over
//! subsets of roots, and the explicit per-family lists.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{nullspace, primitive_integer, rank, rat, RatVec};
use crate::rootdata::{GroupData, GroupFamily};

/// Largest number of root subsets scanned by [`enumerate_admissible`].
pub const MAX_SUBSETS: usize = 100_000;

/// An indivisible integer vector (gcd of entries 1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct OneParamSubgroup {
    coords: Vec<i64>,
}

impl OneParamSubgroup {
    /// Wrap an integer vector, checking that its entries have gcd 1.
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        let g = coords.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(Error::Domain(format!("{coords:?} is not indivisible")));
        }
        Ok(Self { coords })
    }

    /// The coordinates.
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    /// As a rational vector.
    pub fn to_ratvec(&self) -> RatVec {
        RatVec::from_ints(&self.coords)
    }
}

impl fmt::Display for OneParamSubgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

fn sorted(set: BTreeSet<OneParamSubgroup>) -> Vec<OneParamSubgroup> {
    let mut v: Vec<_> = set.into_iter().collect();
    v.sort_by(|a, b| b.cmp(a));
    v
}

fn trace_row(g: &GroupData) -> Option<RatVec> {
    matches!(g.family, GroupFamily::SUpq { .. }).then(|| RatVec::new(vec![rat(1); g.dim]))
}

/// True if the weights of `𝔭⁻` vanishing on `λ` span a space of dimension
/// `effective_dim − 1` (and `λ` satisfies the trace condition for `SU(p,q)`).
pub fn is_admissible(g: &GroupData, lambda: &RatVec) -> Result<bool> {
    lambda.check_dim(g.dim)?;
    if lambda.is_zero() {
        return Ok(false);
    }
    if let Some(t) = trace_row(g) {
        if !t.dot(lambda).is_zero() {
            return Ok(false);
        }
    }
    let zeros: Vec<RatVec> = g.weights_p_minus.iter().filter(|b| b.dot(lambda).is_zero()).cloned().collect();
    Ok(rank(&zeros, g.dim) == g.effective_dim() - 1)
}

/// Enumerate every dominant, indivisible, admissible `λ` by scanning all
/// independent `(d − 1)`-subsets of noncompact positive roots, where `d` is
/// the dimension of the root space.  Sorted in decreasing lexicographic order.
pub fn enumerate_admissible(g: &GroupData) -> Result<Vec<OneParamSubgroup>> {
    let roots = &g.noncompact_pos;
    let k = g.effective_dim() - 1;
    if binomial(roots.len(), k) > MAX_SUBSETS {
        return Err(Error::LimitExceeded(format!("more than {MAX_SUBSETS} root subsets to scan")));
    }
    let trace = trace_row(g);
    let mut found = BTreeSet::new();
    for subset in crate::horn::subsets(roots.len(), k) {
        let rows: Vec<RatVec> = subset.iter().map(|&i| roots[i - 1].clone()).collect();
        if rank(&rows, g.dim) != k {
            continue;
        }
        let mut all_rows = rows;
        all_rows.extend(trace.clone());
        let kernel = nullspace(&all_rows, g.dim);
        if kernel.len() != 1 {
            continue;
        }
        let Some(prim) = primitive_integer(&kernel[0]) else { continue };
        let coords: Option<Vec<i64>> = prim.iter().map(|x| i64::try_from(x.clone()).ok()).collect();
        let coords = coords.ok_or_else(|| Error::LimitExceeded("kernel generator does not fit in i64".into()))?;
        for sign in [1i64, -1] {
            let c: Vec<i64> = coords.iter().map(|x| sign * x).collect();
            if g.is_dominant(&RatVec::from_ints(&c))? {
                found.insert(OneParamSubgroup::new(c)?);
            }
        }
    }
    Ok(sorted(found))
}

fn block(k: usize, a: i64, len: usize, b: i64) -> Vec<i64> {
    let mut v = vec![a; k];
    v.extend(std::iter::repeat_n(b, len - k));
    v
}

/// `λ_{k,l} = (1^k, 0^{n−k−l}, (−1)^l)`.
fn lambda_kl(n: usize, k: usize, l: usize) -> Vec<i64> {
    let mut v = vec![1; k];
    v.extend(std::iter::repeat_n(0, n - k - l));
    v.extend(std::iter::repeat_n(-1, l));
    v
}

/// The explicit lists of dominant indivisible admissible one-parameter
/// subgroups of each family, sorted in decreasing lexicographic order.
pub fn closed_form_admissible(g: &GroupData) -> Result<Vec<OneParamSubgroup>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    match g.family {
        GroupFamily::Sp2nR { n } => {
            out.push(lambda_kl(n, 1, 0));
            out.push(lambda_kl(n, 0, 1));
            for k in 1..n {
                for l in 1..=n - k {
                    out.push(lambda_kl(n, k, l));
                }
            }
        }
        GroupFamily::SOstar2n { n } => {
            if n == 3 {
                out.push(vec![1, -1, -1]);
                out.push(vec![1, 1, -1]);
            } else {
                out.push(lambda_kl(n, 1, 0));
                out.push(lambda_kl(n, 0, 1));
                for k in 1..n {
                    out.push(lambda_kl(n, k, n - k));
                }
                for k in 1..=n.saturating_sub(4) {
                    for l in 1..=n - k - 3 {
                        out.push(lambda_kl(n, k, l));
                    }
                }
            }
        }
        GroupFamily::SUn1 { n } => {
            out.push(block(1, n as i64, n, -1));
            out.push(block(n - 1, 1, n, -(n as i64)));
        }
        GroupFamily::SUpq { p, q: 1 } => {
            let mut a = block(1, p as i64, p, -1);
            a.push(-1);
            let mut b = block(p - 1, 1, p, -(p as i64));
            b.push(1);
            out.push(a);
            out.push(b);
        }
        GroupFamily::SUpq { p, q } => {
            let s = (p + q) as i64;
            for k in 1..p {
                for l in 1..q {
                    let (kk, ll) = (k as i64, l as i64);
                    let gcd = (s - kk - ll).gcd(&(kk + ll));
                    let a = (s - kk - ll) / gcd;
                    let b = -(kk + ll) / gcd;
                    let mut v = block(k, a, p, b);
                    v.extend(block(l, a, q, b));
                    out.push(v);
                }
            }
            let mut v = vec![1; p];
            v.extend(block(q - 1, 1, q, 1 - s));
            out.push(v);
            let mut v = block(p - 1, 1, p, 1 - s);
            v.extend(vec![1; q]);
            out.push(v);
            let mut v = vec![-1; p];
            v.extend(block(1, s - 1, q, -1));
            out.push(v);
            let mut v = block(1, s - 1, p, -1);
            v.extend(vec![-1; q]);
            out.push(v);
        }
        GroupFamily::SOp2 { p } => {
            let m = p / 2;
            let mut lambda0 = vec![0; m + 1];
            lambda0[0] = 1;
            out.push(lambda0);
            for sign in [1, -1] {
                let mut v = vec![1; m];
                v.push(sign);
                out.push(v);
            }
            if p % 2 == 0 {
                for sign in [1, -1] {
                    let mut v = vec![1; m];
                    v[m - 1] = -1;
                    v.push(sign);
                    out.push(v);
                }
            }
        }
    }
    let mut set = BTreeSet::new();
    for v in out {
        set.insert(OneParamSubgroup::new(v)?);
    }
    Ok(sorted(set))
}
