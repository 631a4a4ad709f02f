//! Products of symmetric groups: permutations in one-line notation,
//! Coxeter lengths, longest elements, parabolic subgroups and their longest
//! coset representatives.
//!
//! Conventions: a permutation `w` of `{1..r}` is stored by its images
//! `w(1), …, w(r)`.  Composition is right to left, `(u ∘ v)(i) = u(v(i))`,
//! and the simple reflection `s_i` swaps `i` and `i + 1`.  A permutation acts
//! on coordinate vectors by moving coordinate `i` to position `w(i)`:
//! `(w·v)_{w(i)} = v_i`.  With these conventions the word `s_1 s_2 ⋯ s_{k−1}`
//! read as a composition maps `k` to `1`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{RatVec, Rational};

/// Largest symmetric-group degree accepted per factor.
pub const MAX_FACTOR_DEGREE: usize = 6;
/// Largest group order accepted by exhaustive enumerations.
pub const MAX_GROUP_ORDER: usize = 1_000_000;

/// A permutation of `{1..r}` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    /// Zero-based images.
    images: Vec<u8>,
}

impl Perm {
    /// The identity of `S_r`.
    pub fn identity(r: usize) -> Self {
        Self { images: (0..r as u8).collect() }
    }

    /// Build from one-line notation with 1-based images, e.g. `[2, 1, 3]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let r = images.len();
        let mut seen = vec![false; r];
        for &x in images {
            if x == 0 || x > r || seen[x - 1] {
                return Err(Error::Parse(format!("not a permutation: {images:?}")));
            }
            seen[x - 1] = true;
        }
        Ok(Self { images: images.iter().map(|&x| (x - 1) as u8).collect() })
    }

    /// The degree `r`.
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// One-line notation with 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// `w(i)` for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1] as usize + 1
    }

    /// The simple reflection `s_i` of `S_r` (1 ≤ i < r).
    pub fn simple(i: usize, r: usize) -> Result<Self> {
        if i == 0 || i >= r {
            return Err(Error::InvalidParams(format!("no simple reflection s_{i} in S_{r}")));
        }
        Self::transposition(i, i + 1, r)
    }

    /// The transposition `t_{a,b}` of `S_r` (1-based, a ≠ b).
    pub fn transposition(a: usize, b: usize, r: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > r || b > r || a == b {
            return Err(Error::InvalidParams(format!("no transposition t_({a},{b}) in S_{r}")));
        }
        let mut p = Self::identity(r);
        p.images.swap(a - 1, b - 1);
        Ok(p)
    }

    /// Composition `self ∘ other`.
    ///
    /// # Panics
    /// Panics if the degrees differ.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "composition of permutations of different degree");
        Perm { images: other.images.iter().map(|&x| self.images[x as usize]).collect() }
    }

    /// Inverse permutation.
    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm { images: inv }
    }

    /// Coxeter length = number of inversions.
    pub fn length(&self) -> usize {
        let w = &self.images;
        let mut n = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    n += 1;
                }
            }
        }
        n
    }

    /// The longest element `w₀` of `S_r` (reverses `1..r`).
    pub fn longest(r: usize) -> Self {
        Self { images: (0..r as u8).rev().collect() }
    }

    /// The product `s_{i_1} ∘ s_{i_2} ∘ ⋯` of simple reflections of `S_r`.
    pub fn from_word(word: &[usize], r: usize) -> Result<Self> {
        let mut p = Self::identity(r);
        for &i in word {
            p = p.compose(&Self::simple(i, r)?);
        }
        Ok(p)
    }

    /// True if `l(w s_i) < l(w)`, i.e. `w(i) > w(i+1)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        self.images[i - 1] > self.images[i]
    }

    /// True if `l(s_i w) < l(w)`, i.e. `i + 1` appears before `i` in the
    /// one-line notation.
    pub fn has_left_descent(&self, i: usize) -> bool {
        let pos = |v: usize| self.images.iter().position(|&x| x as usize == v).expect("value present");
        pos(i - 1) > pos(i)
    }

    /// `w ∘ s_i`.
    pub fn times_simple(&self, i: usize) -> Perm {
        let mut p = self.clone();
        p.images.swap(i - 1, i);
        p
    }

    /// `s_i ∘ w`.
    pub fn simple_times(&self, i: usize) -> Perm {
        let (a, b) = ((i - 1) as u8, i as u8);
        Perm {
            images: self
                .images
                .iter()
                .map(|&x| if x == a { b } else if x == b { a } else { x })
                .collect(),
        }
    }

    /// A reduced word: `w = s_{i_1} ∘ ⋯ ∘ s_{i_l}` with `l = length(w)`.
    /// Obtained by peeling off the smallest right descent repeatedly.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut w = self.clone();
        let mut rev = Vec::new();
        while let Some(i) = (1..w.degree()).find(|&i| w.has_right_descent(i)) {
            rev.push(i);
            w = w.times_simple(i);
        }
        rev.reverse();
        rev
    }

    /// Act on a coordinate slice: `(w·v)_{w(i)} = v_i`.
    pub fn act_slice(&self, v: &[Rational]) -> Vec<Rational> {
        let mut out = v.to_vec();
        for (i, &x) in self.images.iter().enumerate() {
            out[x as usize] = v[i].clone();
        }
        out
    }

    /// All permutations of `S_r` in lexicographic order of one-line notation.
    pub fn all(r: usize) -> Vec<Perm> {
        let mut out = Vec::new();
        let mut cur: Vec<u8> = (0..r as u8).collect();
        loop {
            out.push(Perm { images: cur.clone() });
            // next lexicographic permutation
            let Some(i) = (0..r.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else { break };
            let j = (i + 1..r).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
            cur.swap(i, j);
            cur[i + 1..].reverse();
        }
        out
    }

    /// Label like `s1.s3.s2` from the reduced word (`id` for the identity).
    pub fn word_label(&self) -> String {
        let w = self.reduced_word();
        if w.is_empty() {
            "id".to_string()
        } else {
            w.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(".")
        }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.images().iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// Element of a product of symmetric groups `S_{r_1} × ⋯ × S_{r_k}`, acting
/// on consecutive coordinate blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    factors: Vec<Perm>,
}

impl WeylElt {
    /// Wrap a list of factors.
    pub fn new(factors: Vec<Perm>) -> Self {
        Self { factors }
    }

    /// The factors.
    pub fn factors(&self) -> &[Perm] {
        &self.factors
    }

    /// Factor degrees.
    pub fn degrees(&self) -> Vec<usize> {
        self.factors.iter().map(Perm::degree).collect()
    }

    /// Copy with factor `f` replaced by `p`.
    pub fn with_factor(&self, f: usize, p: Perm) -> WeylElt {
        let mut factors = self.factors.clone();
        factors[f] = p;
        WeylElt::new(factors)
    }

    /// Sum of factor lengths.
    pub fn length(&self) -> usize {
        self.factors.iter().map(Perm::length).sum()
    }

    /// Factorwise composition `self ∘ other`.
    ///
    /// # Panics
    /// Panics if the factor structures differ.
    pub fn compose(&self, other: &WeylElt) -> WeylElt {
        assert_eq!(self.degrees(), other.degrees(), "composition across different Weyl groups");
        WeylElt::new(self.factors.iter().zip(&other.factors).map(|(a, b)| a.compose(b)).collect())
    }

    /// Factorwise inverse.
    pub fn inverse(&self) -> WeylElt {
        WeylElt::new(self.factors.iter().map(Perm::inverse).collect())
    }

    /// Act on a vector whose coordinates are split into consecutive blocks
    /// of the factor degrees.
    pub fn act(&self, v: &RatVec) -> Result<RatVec> {
        let total: usize = self.degrees().iter().sum();
        v.check_dim(total)?;
        let mut out = Vec::with_capacity(total);
        let mut off = 0;
        for p in &self.factors {
            out.extend(p.act_slice(&v.entries()[off..off + p.degree()]));
            off += p.degree();
        }
        Ok(RatVec::new(out))
    }

    /// Parse the text form `"2 1 3|1 2"`.
    pub fn parse(text: &str) -> Result<WeylElt> {
        let factors = text
            .split('|')
            .map(|part| {
                let images = part
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("bad permutation entry {t:?}"))))
                    .collect::<Result<Vec<_>>>()?;
                Perm::from_images(&images)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(WeylElt::new(factors))
    }

    /// Reduced-word label per factor joined by `|`, e.g. `s2.s1|id`.
    pub fn word_label(&self) -> String {
        self.factors.iter().map(Perm::word_label).collect::<Vec<_>>().join("|")
    }
}

impl fmt::Display for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// A simple reflection of a product group: `s_index` in factor `factor`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleReflection {
    /// Factor index (0-based).
    pub factor: usize,
    /// Index `i` of `s_i` within the factor (1-based).
    pub index: usize,
}

/// Descriptor of `W = S_{r_1} × ⋯ × S_{r_k}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeylGroup {
    degrees: Vec<usize>,
}

impl WeylGroup {
    /// Product of symmetric groups of the given degrees (each ≥ 1).
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        if degrees.is_empty() || degrees.contains(&0) {
            return Err(Error::InvalidParams(format!("invalid factor degrees {degrees:?}")));
        }
        Ok(Self { degrees })
    }

    /// Factor degrees.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// Number of coordinates acted on.
    pub fn rank(&self) -> usize {
        self.degrees.iter().sum()
    }

    /// Starting coordinate (0-based) of each factor block.
    pub fn offsets(&self) -> Vec<usize> {
        let mut off = 0;
        self.degrees
            .iter()
            .map(|d| {
                let o = off;
                off += d;
                o
            })
            .collect()
    }

    /// Group order `∏ r_i!`.
    pub fn order(&self) -> usize {
        self.degrees.iter().map(|&d| (1..=d).product::<usize>()).product()
    }

    /// Error unless exhaustive enumeration is within the desk-scale caps.
    pub fn check_caps(&self) -> Result<()> {
        if let Some(d) = self.degrees.iter().find(|&&d| d > MAX_FACTOR_DEGREE) {
            return Err(Error::LimitExceeded(format!("factor degree {d} exceeds {MAX_FACTOR_DEGREE}")));
        }
        if self.order() > MAX_GROUP_ORDER {
            return Err(Error::LimitExceeded(format!("group order {} exceeds {MAX_GROUP_ORDER}", self.order())));
        }
        Ok(())
    }

    /// The identity.
    pub fn identity(&self) -> WeylElt {
        WeylElt::new(self.degrees.iter().map(|&d| Perm::identity(d)).collect())
    }

    /// The longest element `w₀`.
    pub fn longest(&self) -> WeylElt {
        WeylElt::new(self.degrees.iter().map(|&d| Perm::longest(d)).collect())
    }

    /// Length of `w₀`.
    pub fn longest_length(&self) -> usize {
        self.degrees.iter().map(|&d| d * (d - 1) / 2).sum()
    }

    /// All simple reflections, factor by factor.
    pub fn simple_reflections(&self) -> Vec<SimpleReflection> {
        self.degrees
            .iter()
            .enumerate()
            .flat_map(|(f, &d)| (1..d).map(move |i| SimpleReflection { factor: f, index: i }))
            .collect()
    }

    /// The element of `W` given by one simple reflection.
    pub fn simple(&self, s: SimpleReflection) -> WeylElt {
        let mut e = self.identity();
        e.factors[s.factor] = e.factors[s.factor].times_simple(s.index);
        e
    }

    /// True if `w` belongs to this group.
    pub fn contains(&self, w: &WeylElt) -> bool {
        w.degrees() == self.degrees
    }

    /// Error unless `w` belongs to this group.
    pub fn check(&self, w: &WeylElt) -> Result<()> {
        if self.contains(w) {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!("{w} is not in the group with factor degrees {:?}", self.degrees)))
        }
    }

    /// Every element, in lexicographic order of the concatenated one-line
    /// notations.  Fails if the caps are exceeded.
    pub fn elements(&self) -> Result<Vec<WeylElt>> {
        self.check_caps()?;
        let per_factor: Vec<Vec<Perm>> = self.degrees.iter().map(|&d| Perm::all(d)).collect();
        let mut out = vec![Vec::new()];
        for perms in &per_factor {
            let mut next = Vec::with_capacity(out.len() * perms.len());
            for prefix in &out {
                for p in perms {
                    let mut v: Vec<Perm> = prefix.clone();
                    v.push(p.clone());
                    next.push(v);
                }
            }
            out = next;
        }
        Ok(out.into_iter().map(WeylElt::new).collect())
    }

    /// Act on a vector (see [`WeylElt::act`]).
    pub fn act(&self, w: &WeylElt, v: &RatVec) -> Result<RatVec> {
        self.check(w)?;
        w.act(v)
    }

    /// True if `v` is weakly decreasing on every factor block.
    pub fn is_dominant(&self, v: &RatVec) -> Result<bool> {
        v.check_dim(self.rank())?;
        for (off, &d) in self.offsets().iter().zip(&self.degrees) {
            for i in off + 1..off + d {
                if v[i - 1] < v[i] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// The parabolic subgroup `W_λ` attached to a dominant `λ`: generated by the
/// simple reflections fixing `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicData {
    lambda: RatVec,
    generators: Vec<SimpleReflection>,
}

impl ParabolicData {
    /// Compute `W_λ` for `λ` dominant with respect to `group`.
    pub fn new(group: &WeylGroup, lambda: &RatVec) -> Result<Self> {
        if !group.is_dominant(lambda)? {
            return Err(Error::Domain(format!("{lambda} is not dominant")));
        }
        let offsets = group.offsets();
        let generators = group
            .simple_reflections()
            .into_iter()
            .filter(|s| {
                let k = offsets[s.factor] + s.index;
                lambda[k - 1] == lambda[k]
            })
            .collect();
        Ok(Self { lambda: lambda.clone(), generators })
    }

    /// The vector `λ`.
    pub fn lambda(&self) -> &RatVec {
        &self.lambda
    }

    /// Simple reflections generating `W_λ`.
    pub fn generators(&self) -> &[SimpleReflection] {
        &self.generators
    }

    /// The longest element `w_λ` of `W_λ` (reverses each block of equal
    /// coordinates).
    pub fn longest(&self, group: &WeylGroup) -> WeylElt {
        let offsets = group.offsets();
        let factors = group
            .degrees()
            .iter()
            .enumerate()
            .map(|(f, &d)| {
                let mut images: Vec<usize> = (1..=d).collect();
                let mut start = 0;
                while start < d {
                    let mut end = start;
                    while end + 1 < d && self.lambda[offsets[f] + end] == self.lambda[offsets[f] + end + 1] {
                        end += 1;
                    }
                    for (k, slot) in images.iter_mut().enumerate().take(end + 1).skip(start) {
                        *slot = start + end - k + 1;
                    }
                    start = end + 1;
                }
                Perm::from_images(&images).expect("valid permutation")
            })
            .collect();
        WeylElt::new(factors)
    }

    /// True if `w` is the longest element of its coset `w W_λ`.
    pub fn is_max_rep(&self, w: &WeylElt) -> bool {
        self.generators.iter().all(|s| w.factors[s.factor].has_right_descent(s.index))
    }
}

/// The longest representatives `W^λ` of the cosets `W / W_λ`, sorted in
/// lexicographic order of one-line notation.
///
/// Found by exhaustive scan: two elements share a coset iff they move `λ`
/// to the same vector (for dominant `λ`, `W_λ` is the full stabiliser).
pub fn max_coset_reps(group: &WeylGroup, pd: &ParabolicData) -> Result<Vec<WeylElt>> {
    let mut best: HashMap<RatVec, (WeylElt, usize, bool)> = HashMap::new();
    for w in group.elements()? {
        let key = w.act(pd.lambda())?;
        let len = w.length();
        match best.get_mut(&key) {
            None => {
                best.insert(key, (w, len, true));
            }
            Some(entry) => {
                if len > entry.1 {
                    *entry = (w, len, true);
                } else if len == entry.1 {
                    entry.2 = false;
                }
            }
        }
    }
    let mut reps = Vec::with_capacity(best.len());
    for (_, (w, _, unique)) in best {
        assert!(unique, "longest coset representative must be unique");
        reps.push(w);
    }
    reps.sort();
    Ok(reps)
}

/// The elements `ŵ_k = s_1 ∘ ⋯ ∘ s_{k−1}` and `w̌_k = s_{r−1} ∘ ⋯ ∘ s_k`
/// of `S_r` for `k = 1..r` (returned as two lists indexed by `k − 1`).
pub fn special_elements(r: usize) -> Result<(Vec<Perm>, Vec<Perm>)> {
    if r == 0 {
        return Err(Error::InvalidParams("special elements need r ≥ 1".into()));
    }
    let hats = (1..=r)
        .map(|k| Perm::from_word(&(1..k).collect::<Vec<_>>(), r))
        .collect::<Result<Vec<_>>>()?;
    let checks = (1..=r)
        .map(|k| Perm::from_word(&(k..r).rev().collect::<Vec<_>>(), r))
        .collect::<Result<Vec<_>>>()?;
    Ok((hats, checks))
}

/// Longest element of the copy of `S_{r−1}` permuting `{2..r}`.
pub fn longest_fixing_first(r: usize) -> Perm {
    let images: Vec<usize> = std::iter::once(1).chain((2..=r).rev()).collect();
    Perm::from_images(&images).expect("valid permutation")
}
