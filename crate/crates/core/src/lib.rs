//! Finite-model engine for rough-set approximation pairs.
//!
//! Given a reflexive binary relation `R` on a finite universe `U`, every
//! subset `X ⊆ U` determines an approximation pair `(X^▼, X^▲)` (elements
//! whose neighbourhood is contained in `X`, and elements whose neighbourhood
//! meets `X`). The family `RS` of all such pairs is ordered componentwise;
//! it is not a lattice in general, but its Dedekind–MacNeille completion
//! `DM(RS)` is, and carries a Kleene-style involution `∼(A,B) = (Bᶜ, Aᶜ)`.
//!
//! This crate builds these structures concretely for small universes and
//! verifies their algebraic laws instance by instance:
//!
//! * [`relation`] — relations, closures, partitions, classification;
//! * [`approx`] — the four approximation operators and definability tests;
//! * [`rough`] — the `RS` family, exactness, the set family `𝒜`;
//! * [`lattice`] / [`completion`] — finite lattices, the direct `DM(RS)`
//!   construction and an independent cut-completion oracle;
//! * [`kleene`] — sharpness, complements, central elements, the `𝒞 ≅ 𝒜`
//!   isomorphism;
//! * [`bz`] — Brouwer–Zadeh complementations: axioms BZ1–BZ8, constructions
//!   from extending equivalences and from subortholattices, enumeration of
//!   all PBZ structures, pseudocomplements and Stone checks;
//! * [`harness`] — a theorem suite over single relations and a miner that
//!   sweeps or samples all reflexive relations of a given size;
//! * [`io`] / [`dot`] — JSON documents and Graphviz export for the CLI.

pub mod approx;
pub mod bits;
pub mod bz;
pub mod completion;
pub mod dot;
pub mod fixtures;
pub mod harness;
pub mod io;
pub mod kleene;
pub mod lattice;
pub mod relation;
pub mod rough;
pub mod universe;

pub use approx::{ApproxSpace, Direction};
pub use bits::BitVec;
pub use bz::{BzReport, NegOperator, PbzStructure, StoneReport};
pub use completion::{CutLattice, DmLattice, MembershipConditions};
pub use harness::{MineConfig, MineMode, MineOutcome, TheoremSuiteReport};
pub use kleene::{CFamilyReport, ElementAnalysis};
pub use lattice::{FiniteLattice, Involution};
pub use relation::{Partition, PropertyFlags, Relation, RelationClass};
pub use rough::{AFamily, LatticeCheck, RoughPair, RsFamily};
pub use universe::{Subset, Universe};

use serde::{Deserialize, Serialize};

/// Enumeration limits. All family constructions are exponential in the size
/// of the universe, so each entry bounds the universe (or poset) size a
/// routine is willing to sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Universe-size cap for `RS`, `𝒜` and exact-family enumeration (2^n subsets).
    pub rs: usize,
    /// Universe-size cap for full `DM(RS)` construction.
    pub dm: usize,
    /// Poset-size cap for the cut-completion oracle.
    pub oracle: usize,
    /// Universe-size cap for partition enumeration (Bell numbers).
    pub partition: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { rs: 16, dm: 10, oracle: 4096, partition: 10 }
    }
}

impl Caps {
    /// Caps with the universe-size limits replaced by `n` (CLI `--cap`).
    pub fn with_universe_cap(self, n: usize) -> Self {
        Caps { rs: n, dm: n, partition: n, ..self }
    }
}

/// Errors reported by the library.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("universe must be a nonempty list of distinct labels: {0}")]
    BadUniverse(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("operands belong to different universes")]
    UniverseMismatch,
    #[error("{what} requires {required} but the cap is {cap}")]
    CapExceeded { what: &'static str, required: usize, cap: usize },
    #[error("relation is not reflexive (missing loop at {0:?})")]
    NotReflexive(String),
    #[error("relation is not an equivalence: {0}")]
    NotEquivalence(String),
    #[error("{0:?} does not extend the relation (it must contain every related pair)")]
    NotExtending(String),
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("pair is not a member of {family}: {detail}")]
    NotInFamily { family: &'static str, detail: String },
    #[error("order relation is not a lattice: {0}")]
    NotALattice(String),
    #[error("invalid subortholattice: {0}")]
    BadSubortholattice(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("independent characterizations disagree ({0}); this indicates a bug")]
    CharacterizationDisagreement(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
