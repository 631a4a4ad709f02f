//! Horn triples and the Horn inequalities.
//!
//! `T_r^n` is the set of index triples `(I, J, L)` of `r`-subsets of
//! `{1..n}` whose inequalities `Σ_I α + Σ_J β ≥ Σ_L γ` (together with the
//! trace equality) characterise the spectra `(α, β, γ)` of Hermitian
//! matrices with `A + B = C`.  It is defined recursively: `T_1^n = U_1^n`,
//! and for `r ≥ 2` a balanced triple of `U_r^n` belongs to `T_r^n` when its
//! own indices satisfy the inequalities of every `T_p^r`, `p < r`.
//!
//! By saturation the same inequalities decide the nonvanishing of
//! Littlewood–Richardson coefficients for `GL_n`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::{rat, Rational};

/// Largest ambient size accepted by [`enum_t`].
pub const MAX_HORN_N: usize = 8;

/// A triple `(I, J, L)` of strictly increasing `r`-subsets of `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HornTriple {
    /// Ambient size.
    pub n: usize,
    /// First index set.
    pub i: Vec<usize>,
    /// Second index set.
    pub j: Vec<usize>,
    /// Third index set.
    pub l: Vec<usize>,
}

fn check_subset(set: &[usize], n: usize) -> Result<()> {
    if set.is_empty() || set.windows(2).any(|w| w[0] >= w[1]) || set[0] == 0 || *set.last().unwrap() > n {
        return Err(Error::InvalidParams(format!("{set:?} is not a strictly increasing subset of 1..{n}")));
    }
    Ok(())
}

impl HornTriple {
    /// Build a triple, validating the index sets.
    pub fn new(n: usize, i: Vec<usize>, j: Vec<usize>, l: Vec<usize>) -> Result<Self> {
        for s in [&i, &j, &l] {
            check_subset(s, n)?;
        }
        if i.len() != j.len() || j.len() != l.len() {
            return Err(Error::InvalidParams("index sets of different cardinality".into()));
        }
        if i.len() >= n {
            return Err(Error::InvalidParams(format!("need r < n, got r = {} and n = {n}", i.len())));
        }
        Ok(Self { n, i, j, l })
    }

    /// The common cardinality `r`.
    pub fn r(&self) -> usize {
        self.i.len()
    }

    /// True if `Σ I + Σ J = Σ L + r(r+1)/2`.
    pub fn is_balanced(&self) -> bool {
        let r = self.r();
        self.i.iter().sum::<usize>() + self.j.iter().sum::<usize>() == self.l.iter().sum::<usize>() + r * (r + 1) / 2
    }
}

/// A weakly decreasing list of rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Spectrum(Vec<Rational>);

impl Spectrum {
    /// Wrap a weakly decreasing list.
    pub fn new(values: Vec<Rational>) -> Result<Self> {
        if values.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Domain("spectrum must be weakly decreasing".into()));
        }
        Ok(Self(values))
    }

    /// Spectrum with integer entries.
    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| rat(v)).collect())
    }

    /// The values.
    pub fn values(&self) -> &[Rational] {
        &self.0
    }

    /// Length `n`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty spectrum.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// All `r`-subsets of `{1..n}` in lexicographic order.
pub fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut cur: Vec<usize> = (1..=r).collect();
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..r).rev().find(|&k| cur[k] < n - (r - 1 - k)) else { break };
        cur[pos] += 1;
        for k in pos + 1..r {
            cur[k] = cur[k - 1] + 1;
        }
    }
    out
}

type Memo = Mutex<HashMap<(usize, usize), Arc<Vec<HornTriple>>>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// The balanced triples `U_r^n`, lexicographically ordered.
pub fn enum_u(r: usize, n: usize) -> Result<Vec<HornTriple>> {
    check_bounds(r, n)?;
    let subs = subsets(n, r);
    let mut by_sum: HashMap<usize, Vec<&Vec<usize>>> = HashMap::new();
    for s in &subs {
        by_sum.entry(s.iter().sum()).or_default().push(s);
    }
    let shift = r * (r + 1) / 2;
    let mut out = Vec::new();
    for i in &subs {
        let si: usize = i.iter().sum();
        for j in &subs {
            let total = si + j.iter().sum::<usize>();
            let Some(ls) = total.checked_sub(shift).and_then(|s| by_sum.get(&s)) else { continue };
            for l in ls {
                out.push(HornTriple { n, i: i.clone(), j: j.clone(), l: (*l).clone() });
            }
        }
    }
    Ok(out)
}

fn check_bounds(r: usize, n: usize) -> Result<()> {
    if r == 0 || r >= n || n > MAX_HORN_N {
        return Err(Error::InvalidParams(format!("Horn triples need 1 ≤ r < n ≤ {MAX_HORN_N}, got r = {r}, n = {n}")));
    }
    Ok(())
}

/// The Horn triples `T_r^n` (lexicographic order on `(I, J, L)`), memoised.
pub fn enum_t(r: usize, n: usize) -> Result<Arc<Vec<HornTriple>>> {
    check_bounds(r, n)?;
    if let Some(t) = memo().lock().expect("memo lock").get(&(r, n)) {
        return Ok(Arc::clone(t));
    }
    let candidates = enum_u(r, n)?;
    let result = if r == 1 {
        candidates
    } else {
        let smaller: Vec<(usize, Arc<Vec<HornTriple>>)> =
            (1..r).map(|p| enum_t(p, r).map(|t| (p, t))).collect::<Result<Vec<_>>>()?;
        candidates
            .into_iter()
            .filter(|t| {
                smaller.iter().all(|(p, tp)| {
                    tp.iter().all(|h| {
                        let lhs: usize =
                            h.i.iter().map(|&f| t.i[f - 1]).sum::<usize>() + h.j.iter().map(|&g| t.j[g - 1]).sum::<usize>();
                        let rhs: usize = h.l.iter().map(|&k| t.l[k - 1]).sum::<usize>() + p * (p + 1) / 2;
                        lhs <= rhs
                    })
                })
            })
            .collect()
    };
    let arc = Arc::new(result);
    memo().lock().expect("memo lock").entry((r, n)).or_insert_with(|| Arc::clone(&arc));
    Ok(arc)
}

fn sum_at(v: &[Rational], idx: &[usize]) -> Rational {
    idx.iter().fold(Rational::from_integer(0.into()), |acc, &k| acc + &v[k - 1])
}

/// True iff `(α, β, γ)` are the spectra of Hermitian `A`, `B`, `A + B`:
/// the trace equality and every Horn inequality `Σ_I α + Σ_J β ≥ Σ_L γ`
/// over `T_r^n`, `r < n`, hold.
pub fn horn_member(alpha: &Spectrum, beta: &Spectrum, gamma: &Spectrum) -> Result<bool> {
    let n = alpha.len();
    if beta.len() != n || gamma.len() != n {
        return Err(Error::DimensionMismatch { expected: n, found: if beta.len() != n { beta.len() } else { gamma.len() } });
    }
    if n > MAX_HORN_N {
        return Err(Error::LimitExceeded(format!("Horn inequalities available for n ≤ {MAX_HORN_N}")));
    }
    let (a, b, c) = (alpha.values(), beta.values(), gamma.values());
    let all: Vec<usize> = (1..=n).collect();
    if sum_at(a, &all) + sum_at(b, &all) != sum_at(c, &all) {
        return Ok(false);
    }
    for r in 1..n {
        for t in enum_t(r, n)?.iter() {
            if sum_at(a, &t.i) + sum_at(b, &t.j) < sum_at(c, &t.l) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff `V_ν ⊆ V_λ ⊗ V_μ` for `GL_n` (integer highest weights).
///
/// Decided by the Horn inequalities; this is exact because the
/// Littlewood–Richardson semigroup of `GL_n` is saturated.
pub fn lr_nonzero(lam: &[i64], mu: &[i64], nu: &[i64]) -> Result<bool> {
    horn_member(&Spectrum::from_ints(lam)?, &Spectrum::from_ints(mu)?, &Spectrum::from_ints(nu)?)
}

/// `λ(I) = (i_r − r, …, i_1 − 1)`.
pub fn index_partition(set: &[usize]) -> Vec<i64> {
    set.iter().enumerate().rev().map(|(k, &i)| i as i64 - (k as i64 + 1)).collect()
}

/// Decide membership of `t` in `T_r^n` through the spectral criterion:
/// `t ∈ T_r^n` iff `(λ(I), λ(J), λ(L))` satisfies the Horn system of size `r`.
pub fn triple_via_eigen(t: &HornTriple) -> Result<bool> {
    lr_nonzero(&index_partition(&t.i), &index_partition(&t.j), &index_partition(&t.l))
}

/// JSON array of index triples `[[I, J, L], …]`.
pub fn triples_to_json(triples: &[HornTriple]) -> String {
    let v: Vec<[&Vec<usize>; 3]> = triples.iter().map(|t| [&t.i, &t.j, &t.l]).collect();
    serde_json::to_string(&v).expect("serializable")
}

/// Parse the JSON produced by [`triples_to_json`] for ambient size `n`.
pub fn triples_from_json(text: &str, n: usize) -> Result<Vec<HornTriple>> {
    let v: Vec<[Vec<usize>; 3]> = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    v.into_iter().map(|[i, j, l]| HornTriple::new(n, i, j, l)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, i: &[usize], j: &[usize], l: &[usize]) -> HornTriple {
        HornTriple::new(n, i.to_vec(), j.to_vec(), l.to_vec()).unwrap()
    }

    #[test]
    fn first_horn_sets() {
        let t12 = enum_t(1, 2).unwrap();
        let mut expect = vec![t(2, &[1], &[1], &[1]), t(2, &[2], &[1], &[2]), t(2, &[1], &[2], &[2])];
        expect.sort();
        assert_eq!(*t12, expect);
        let t23 = enum_t(2, 3).unwrap();
        assert_eq!(t23.len(), 6);
        assert_eq!(*t23, enum_u(2, 3).unwrap());
        assert!(t23.contains(&t(3, &[1, 3], &[1, 3], &[2, 3])));
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(enum_t(0, 3).is_err());
        assert!(enum_t(3, 3).is_err());
        assert!(enum_t(1, 9).is_err());
    }

    #[test]
    fn horn_member_examples() {
        let s = |v: &[i64]| Spectrum::from_ints(v).unwrap();
        assert!(horn_member(&s(&[1, 0]), &s(&[1, 0]), &s(&[2, 0])).unwrap());
        assert!(horn_member(&s(&[0, 0, 0]), &s(&[0, 0, 0]), &s(&[0, 0, 0])).unwrap());
        assert!(!horn_member(&s(&[1, 0]), &s(&[1, 0]), &s(&[1, 0])).unwrap());
        assert!(horn_member(&s(&[1, 0]), &s(&[1, 0]), &s(&[1, 1])).unwrap());
        assert!(horn_member(&s(&[1]), &s(&[1]), &s(&[1, 0])).is_err());
        assert!(Spectrum::from_ints(&[0, 1]).is_err());
    }

    #[test]
    fn index_partition_shape() {
        assert_eq!(index_partition(&[1, 3, 4]), vec![1, 1, 0]);
        assert!(!triple_via_eigen(&t(3, &[2], &[2], &[2])).unwrap());
    }

    #[test]
    fn json_round_trip() {
        let t23 = enum_t(2, 3).unwrap();
        let text = triples_to_json(&t23);
        assert_eq!(triples_from_json(&text, 3).unwrap(), *t23);
    }

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(subsets(4, 2), vec![vec![1, 2], vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4], vec![3, 4]]);
        assert_eq!(subsets(3, 3), vec![vec![1, 2, 3]]);
    }
}
