//! Exact moment polyhedra of holomorphic coadjoint orbits of the classical
//! Hermitian Lie groups `Sp(2n,ℝ)`, `SU(p,q)`, `SO*(2n)` and `SO(p,2)`.
//!
//! The pipeline enumerates admissible one-parameter subgroups, tests
//! well-covering pairs with Schubert calculus on flag varieties of the
//! maximal compact subgroup, and assembles the resulting inequalities into an
//! exact H-representation.  An independent membership oracle built from the
//! Horn inequalities cross-checks the result.
pub mod admissible;
pub mod error;
pub mod exactmath;
pub mod goldens;
pub mod horn;
pub mod polytope;
pub mod rootdata;
pub mod schubert;
pub mod wellcover;
pub mod weyl;

pub use admissible::{closed_form_admissible, enumerate_admissible, is_admissible, OneParamSubgroup};
pub use error::{Error, Result};
pub use exactmath::{poly_equal, AffineIneq, HPolyhedron, RatVec, Rational, Relation};
pub use horn::{enum_t, horn_member, triple_via_eigen, HornTriple, Spectrum};
pub use polytope::{
    assemble, closed_form, cross_check, horn_oracle_member, Assembler, CrossCheckReport, OrbitPolytope, PairMode,
    Provenance,
};
pub use rootdata::{GroupData, GroupFamily};
pub use schubert::{CohClass, SchubertRing};
pub use wellcover::{enumerate_m0, is_dominant_pair, is_well_covering, WCPair, WellCover};
pub use weyl::{ParabolicData, Perm, WeylElt, WeylGroup};
