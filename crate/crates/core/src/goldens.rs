//! Ground-truth tables kept as checked-in JSON under `goldens/<topic>/`.
//!
//! Each record carries an `id` (`<topic>/<name>`), a `kind` naming the
//! payload schema, a human-readable `description`, and the `payload` itself.
//! The data are embedded at compile time so tests and tools can load them
//! without touching the filesystem.  Parametric statements are stored as
//! templates in `Λ` and instantiated at test time.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::admissible::OneParamSubgroup;
use crate::error::{Error, Result};
use crate::exactmath::{AffineIneq, HPolyhedron, RatVec};
use crate::horn::HornTriple;
use crate::rootdata::GroupData;
use crate::schubert::CohClass;
use crate::weyl::{Perm, WeylElt};

macro_rules! golden_files {
    ($($id:literal),* $(,)?) => {
        &[$(($id, include_str!(concat!("../goldens/", $id, ".json")))),*]
    };
}

const FILES: &[(&str, &str)] = golden_files![
    "admissible/so42",
    "admissible/so52",
    "admissible/so_star10",
    "admissible/so_star6",
    "admissible/so_star8",
    "admissible/sp4",
    "admissible/sp6",
    "admissible/sp8",
    "admissible/su21",
    "admissible/su22",
    "admissible/su31",
    "admissible/su32",
    "horn/t_1_2",
    "horn/t_1_3",
    "horn/t_2_3",
    "horn/u2_sum_inequalities",
    "horn/u3_sum_inequalities",
    "polytope/so_star6",
    "polytope/so_star8",
    "polytope/sp4",
    "polytope/sp4_membership",
    "polytope/sp6",
    "polytope/sp8",
    "polytope/su21",
    "polytope/su22",
    "polytope/su22_central_cone",
    "polytope/su31",
    "polytope/su41",
    "schubert/gl4_cup_products",
    "schubert/theta_values",
    "wellcover/so_star6_pairs",
    "wellcover/so_star8_cosets",
    "wellcover/so_star8_pairs",
    "wellcover/su21_pairs",
    "wellcover/su22_pairs",
    "wellcover/su31_pairs",
    "wellcover/su41_pairs",
    "wellcover/su51_pairs",
];

/// Every known golden id, sorted.
pub fn ids() -> Vec<&'static str> {
    FILES.iter().map(|(id, _)| *id).collect()
}

/// One parsed golden file.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GoldenRecord {
    /// `<topic>/<name>`.
    pub id: String,
    /// Payload schema name.
    pub kind: String,
    /// What the table states.
    pub description: String,
    /// Raw payload.
    pub payload: serde_json::Value,
}

/// Load and parse the golden with the given id.
pub fn load(id: &str) -> Result<GoldenRecord> {
    let (_, text) = FILES
        .iter()
        .find(|(k, _)| *k == id)
        .ok_or_else(|| Error::Golden(format!("unknown golden id {id:?}")))?;
    let rec: GoldenRecord =
        serde_json::from_str(text).map_err(|e| Error::Golden(format!("{id}: malformed record: {e}")))?;
    if rec.id != id {
        return Err(Error::Golden(format!("{id}: file declares id {:?}", rec.id)));
    }
    Ok(rec)
}

/// Build a Weyl element from one word of simple reflections per factor;
/// `degrees` gives the size of each symmetric-group factor.
pub fn word_elt(words: &[Vec<usize>], degrees: &[usize]) -> Result<WeylElt> {
    if words.len() != degrees.len() {
        return Err(Error::DimensionMismatch { expected: degrees.len(), found: words.len() });
    }
    let factors: Result<Vec<Perm>> = words.iter().zip(degrees).map(|(w, &r)| Perm::from_word(w, r)).collect();
    Ok(WeylElt::new(factors?))
}

/// `c · σ_w` with `w` written factor by factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    /// Coefficient.
    pub coeff: i64,
    /// Words of the indexing element.
    pub w: Vec<Vec<usize>>,
}

/// The class `Σ c · σ_w`; an empty list is the zero class.
pub fn class_of_terms(terms: &[Term], degrees: &[usize]) -> Result<CohClass> {
    let mut acc = CohClass::zero(0);
    for t in terms {
        acc = acc.add(&CohClass::schubert(&word_elt(&t.w, degrees)?).scale(t.coeff))?;
    }
    Ok(acc)
}

/// `horn_triples` and `spectrum_inequalities` payloads.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriplesGolden {
    /// Ambient size.
    pub n: usize,
    /// Subset size, when all triples share it.
    #[serde(default)]
    pub r: Option<usize>,
    /// `[I, J, L]` index triples (1-based).
    #[serde(alias = "rows")]
    pub triples: Vec<[Vec<usize>; 3]>,
}

impl TriplesGolden {
    /// As validated triples.
    pub fn to_triples(&self) -> Result<Vec<HornTriple>> {
        self.triples.iter().map(|[i, j, l]| HornTriple::new(self.n, i.clone(), j.clone(), l.clone())).collect()
    }
}

/// `admissible_list` payload.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdmissibleGolden {
    /// Group spec string.
    pub group: String,
    /// The one-parameter subgroups.
    pub lambdas: Vec<Vec<i64>>,
}

impl AdmissibleGolden {
    /// As validated one-parameter subgroups, sorted in decreasing order.
    pub fn to_subgroups(&self) -> Result<Vec<OneParamSubgroup>> {
        let mut v: Vec<OneParamSubgroup> =
            self.lambdas.iter().map(|l| OneParamSubgroup::new(l.clone())).collect::<Result<_>>()?;
        v.sort_by(|a, b| b.cmp(a));
        Ok(v)
    }
}

/// A template row `⟨xi, ξ⟩ rel ⟨lambda, Λ⟩`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateRow {
    /// Coefficients on `ξ`.
    pub xi: Vec<i64>,
    /// `">="` or `"<="`.
    pub rel: String,
    /// Coefficients on `Λ`.
    pub lambda: Vec<i64>,
}

/// `inequality_template` payload: rows in `ξ` and `Λ`, to be intersected
/// with the Weyl chamber.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateGolden {
    /// Group spec string.
    pub group: String,
    /// Template rows.
    pub rows: Vec<TemplateRow>,
}

impl TemplateGolden {
    /// Instantiate at `Λ` and intersect with the chamber of `g`.
    pub fn instantiate(&self, g: &GroupData, lambda: &RatVec) -> Result<HPolyhedron> {
        lambda.check_dim(g.dim)?;
        let mut rows = g.chamber.ineqs().to_vec();
        for row in &self.rows {
            let a = RatVec::from_ints(&row.xi);
            a.check_dim(g.dim)?;
            let bound = RatVec::from_ints(&row.lambda).dot(lambda);
            rows.push(match row.rel.as_str() {
                ">=" => AffineIneq::ge(a, bound),
                "<=" => AffineIneq::le(a, bound),
                other => return Err(Error::Golden(format!("unknown relation {other:?}"))),
            });
        }
        HPolyhedron::new(g.dim, rows)
    }
}

/// `shifted_cone` payload: `Λ + cone(generators)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftedConeGolden {
    /// Group spec string.
    pub group: String,
    /// The base point.
    pub lambda: Vec<String>,
    /// Cone generators.
    pub generators: Vec<Vec<i64>>,
}

/// `inequality_text` payload.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TextGolden {
    /// Group spec string.
    pub group: String,
    /// `Λ` as rational strings.
    pub lambda: Vec<String>,
    /// Expected rendering.
    pub text: String,
}

/// One row of a pair table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    /// Words of `w` (one per factor).
    pub w: Vec<Vec<usize>>,
    /// Words of `w′`.
    pub w_prime: Vec<Vec<usize>>,
    /// `wλ`, when tabulated.
    #[serde(default)]
    pub w_lambda: Option<Vec<i64>>,
    /// `w₀w′λ`, when tabulated.
    #[serde(default)]
    pub w0_w_prime_lambda: Option<Vec<i64>>,
}

/// `pair_table` payload.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairTableGolden {
    /// Group spec string.
    pub group: String,
    /// The one-parameter subgroup.
    pub lambda: Vec<i64>,
    /// When set, both words must be right-multiplied by `w_λ`.
    pub times_w_lambda: bool,
    /// The pairs.
    pub pairs: Vec<PairRow>,
}

/// One row of a coset table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetRow {
    /// Words of `w`.
    pub w: Vec<Vec<usize>>,
    /// `l(w)`.
    pub length: usize,
    /// Words of `w₀w`.
    pub w0_w: Vec<Vec<usize>>,
    /// `wλ`.
    pub w_lambda: Vec<i64>,
    /// `⟨wλ, ρ⟩` as a rational string.
    pub rho_pairing: String,
}

/// `coset_table` payload.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CosetTableGolden {
    /// Group spec string.
    pub group: String,
    /// The one-parameter subgroup.
    pub lambda: Vec<i64>,
    /// Words of the longest element of the stabilizer.
    pub w_lambda: Vec<Vec<usize>>,
    /// Rows in table order.
    pub rows: Vec<CosetRow>,
}

/// A product identity `Π σ_{factor} = result`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CupIdentity {
    /// Words of each factor's indexing element.
    pub factors: Vec<Vec<Vec<usize>>>,
    /// Expected product.
    pub result: Vec<Term>,
}

/// `cup_identities` payload.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CupGolden {
    /// Sizes of the symmetric-group factors.
    pub degrees: Vec<usize>,
    /// The identities.
    pub identities: Vec<CupIdentity>,
}

/// `Θ(Π weights) = result`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaIdentity {
    /// Sizes of the symmetric-group factors.
    pub degrees: Vec<usize>,
    /// The weights whose product is mapped.
    pub weights: Vec<Vec<i64>>,
    /// Expected class.
    pub result: Vec<Term>,
}

/// `theta_identities` payload.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThetaGolden {
    /// The identities.
    pub identities: Vec<ThetaIdentity>,
}

impl GoldenRecord {
    /// Decode the payload, checking the declared kind.
    pub fn payload_as<T: DeserializeOwned>(&self, kind: &str) -> Result<T> {
        if self.kind != kind {
            return Err(Error::Golden(format!("{}: expected kind {kind}, found {}", self.id, self.kind)));
        }
        serde_json::from_value(self.payload.clone())
            .map_err(|e| Error::Golden(format!("{}: malformed {kind} payload: {e}", self.id)))
    }

    /// Payload of a `horn_triples` record.
    pub fn horn_triples(&self) -> Result<TriplesGolden> {
        self.payload_as("horn_triples")
    }

    /// Payload of a `spectrum_inequalities` record.
    pub fn spectrum_inequalities(&self) -> Result<TriplesGolden> {
        self.payload_as("spectrum_inequalities")
    }

    /// Payload of an `admissible_list` record.
    pub fn admissible(&self) -> Result<AdmissibleGolden> {
        self.payload_as("admissible_list")
    }

    /// Payload of an `inequality_template` record.
    pub fn template(&self) -> Result<TemplateGolden> {
        self.payload_as("inequality_template")
    }

    /// Payload of a `shifted_cone` record.
    pub fn shifted_cone(&self) -> Result<ShiftedConeGolden> {
        self.payload_as("shifted_cone")
    }

    /// Payload of an `inequality_text` record.
    pub fn inequality_text(&self) -> Result<TextGolden> {
        self.payload_as("inequality_text")
    }

    /// Payload of a `pair_table` record.
    pub fn pair_table(&self) -> Result<PairTableGolden> {
        self.payload_as("pair_table")
    }

    /// Payload of a `coset_table` record.
    pub fn coset_table(&self) -> Result<CosetTableGolden> {
        self.payload_as("coset_table")
    }

    /// Payload of a `cup_identities` record.
    pub fn cup_identities(&self) -> Result<CupGolden> {
        self.payload_as("cup_identities")
    }

    /// Payload of a `theta_identities` record.
    pub fn theta_identities(&self) -> Result<ThetaGolden> {
        self.payload_as("theta_identities")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_record_loads_and_decodes() {
        for id in ids() {
            let rec = load(id).unwrap();
            match rec.kind.as_str() {
                "horn_triples" => drop(rec.horn_triples().unwrap().to_triples().unwrap()),
                "spectrum_inequalities" => drop(rec.spectrum_inequalities().unwrap().to_triples().unwrap()),
                "admissible_list" => drop(rec.admissible().unwrap().to_subgroups().unwrap()),
                "inequality_template" => {
                    let t = rec.template().unwrap();
                    GroupData::from_spec(&t.group).unwrap();
                }
                "shifted_cone" => drop(rec.shifted_cone().unwrap()),
                "inequality_text" => drop(rec.inequality_text().unwrap()),
                "pair_table" => drop(rec.pair_table().unwrap()),
                "coset_table" => drop(rec.coset_table().unwrap()),
                "cup_identities" => drop(rec.cup_identities().unwrap()),
                "theta_identities" => drop(rec.theta_identities().unwrap()),
                other => panic!("{id}: unknown kind {other}"),
            }
        }
    }

    #[test]
    fn unknown_ids_and_wrong_kinds_are_errors() {
        assert!(matches!(load("horn/nope"), Err(Error::Golden(_))));
        assert!(load("horn/t_1_2").unwrap().pair_table().is_err());
    }

    #[test]
    fn words_build_elements() {
        let w = word_elt(&[vec![1], vec![]], &[2, 2]).unwrap();
        assert_eq!(w.length(), 1);
        assert!(word_elt(&[vec![1]], &[2, 2]).is_err());
    }
}
