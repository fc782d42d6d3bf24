//! Finite matroid computations at desk scale.
//!
//! The crate provides matroid representations behind a uniform
//! independence-oracle interface ([`Matroid`]), the derived operations
//! (duality, minors, projections, preimages, direct sums), flat and circuit
//! enumeration, mutual bases and modularity tests, nullity and the
//! connectivity parameters λ and ⊓, modular cuts with single-element
//! extensions and projections, quotients with discrepancy and the
//! quotient-to-projection reconstruction, a catalog of named matroids, and a
//! brute-force verification harness ([`verify`]).
//!
//! Everything is finite. In particular the maximality axiom for independence
//! families is automatic on a finite ground set and is not implemented;
//! likewise the infinite-chain clause of the modular-cut definition is
//! vacuous here and only the superflat and modular-pair-intersection clauses
//! are checked. Rank values are plain naturals; no ∞ arithmetic exists in
//! this crate.
//!
//! Operations that enumerate all subsets of a ground set refuse ground sets
//! larger than a configurable cap (default 16, see [`size_cap`]).

use std::sync::atomic::{AtomicUsize, Ordering};

pub mod axioms;
pub mod catalog;
pub mod connectivity;
pub mod extensions;
pub mod flats;
pub mod ground;
pub mod matroid;
pub mod modularity;
pub mod quotients;
pub mod spec;
pub mod verify;

pub use axioms::{check_axioms, check_matroid, AxiomId, AxiomReport};
pub use extensions::{CutViolation, GutsCut, ModularCut};
pub use flats::FlatFamily;
pub use ground::{GroundSet, Mask};
pub use matroid::Matroid;
pub use modularity::{MutualBasisWitness, PartitionFamily};
pub use quotients::{BasisPair, ProjectionWitness};
pub use spec::MatroidSpec;

/// Default cap on ground-set sizes for subset-enumerating operations.
pub const DEFAULT_SIZE_CAP: usize = 16;

static SIZE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_SIZE_CAP);

/// Current cap for subset-enumerating operations.
pub fn size_cap() -> usize {
    SIZE_CAP.load(Ordering::Relaxed)
}

/// Override the enumeration cap (clamped to the 64-bit mask width).
pub fn set_size_cap(cap: usize) {
    SIZE_CAP.store(cap.min(ground::MAX_ELEMENTS), Ordering::Relaxed);
}

/// Guard for subset-enumerating operations.
pub fn check_cap(size: usize) -> Result<()> {
    let cap = size_cap();
    if size > cap {
        Err(Error::GroundTooLarge { size, cap })
    } else {
        Ok(())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("invalid spec: {0}")]
    InvalidSpec(String),
    #[error("not a matroid: {0}")]
    NotAMatroid(String),
    #[error("element not in ground set: {0}")]
    NotInGround(String),
    #[error("contract and delete sets overlap")]
    OverlappingSets,
    #[error("map image lies outside the ground set: {0}")]
    ImageOutsideGround(String),
    #[error("ground sets overlap on label {0:?}")]
    GroundOverlap(String),
    #[error("ground set of size {size} exceeds the enumeration cap {cap}")]
    GroundTooLarge { size: usize, cap: usize },
    #[error("too many flats to enumerate cuts over ({count} > {cap})")]
    TooManyFlats { count: usize, cap: usize },
    #[error("set is not a flat: {0}")]
    NotAFlat(String),
    #[error("family is not a partition of the ground set")]
    NotAPartition,
    #[error("preimage budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("label already in ground set: {0}")]
    LabelCollision(String),
    #[error("family union is not the ground set")]
    UnionNotGround,
    #[error("guts iteration exceeded the rank cap; this signals a bug")]
    IterationCapExceeded,
    #[error("first matroid is not a quotient of the second")]
    NotAQuotient,
    #[error("matroids have different ground sets")]
    GroundMismatch,
    #[error("projection descent failed to terminate as predicted: {0}")]
    InternalDescentFailure(String),
    #[error("matroid at position {index} is not a single-element projection of its predecessor")]
    NotASingleElementProjection { index: usize },
    #[error("splice prerequisite m/C = n\\D fails on subset {witness}")]
    PrerequisiteMismatch { witness: String },
    #[error("parse error at line {line}, column {column}: {message}")]
    ParseError {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("semantic error: {0}")]
    SemanticError(String),
    #[error("unknown catalog name: {0}")]
    UnknownName(String),
    #[error("unknown suite: {0}")]
    UnknownSuite(String),
    #[error("host matroid mismatch: {0}")]
    HostMismatch(String),
    #[error("internal invariant breach: {0}")]
    Internal(String),
}

impl Error {
    /// Internal invariant breaches get a distinct CLI exit code.
    pub fn is_internal(&self) -> bool {
        matches!(
            self,
            Error::Internal(_) | Error::InternalDescentFailure(_) | Error::IterationCapExceeded
        )
    }
}
