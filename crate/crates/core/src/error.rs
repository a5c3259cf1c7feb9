//! Error type shared across the crate.

use thiserror::Error;

use crate::sign::SignedSet;

pub type Result<T> = std::result::Result<T, OmError>;

/// Which family of signed sets an error refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SignedKind {
    Circuit,
    Cocircuit,
}

impl std::fmt::Display for SignedKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SignedKind::Circuit => write!(f, "circuit"),
            SignedKind::Cocircuit => write!(f, "cocircuit"),
        }
    }
}

/// Renders internal 0-based element indices as the 1-based set notation
/// used in all I/O.
fn one_based(elems: &[usize]) -> String {
    let inner = elems
        .iter()
        .map(|e| (e + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ");
    format!("{{{inner}}}")
}

#[derive(Debug, Error)]
pub enum OmError {
    #[error("ground set of size {0} exceeds the supported maximum of 20")]
    GroundTooLarge(usize),

    #[error("ground set labels are not distinct")]
    LabelsNotDistinct,

    #[error("empty ground set: no generic signature data exists")]
    EmptyGround,

    #[error("invalid chirotope: {0}")]
    InvalidChirotope(String),

    #[error("basis exchange fails for bases {}, {} at pivot {}", one_based(.b1), one_based(.b2), .pivot + 1)]
    BasisExchange {
        b1: Vec<usize>,
        b2: Vec<usize>,
        pivot: usize,
    },

    #[error("orthogonality fails for circuit {circuit} and cocircuit {cocircuit}")]
    OrthogonalityViolation {
        circuit: SignedSet,
        cocircuit: SignedSet,
    },

    #[error("{} is not a basis", one_based(.0))]
    NotABasis(Vec<usize>),

    #[error("element {} is not in the basis", .0 + 1)]
    NotInBasis(usize),

    #[error("element {} is already in the basis", .0 + 1)]
    AlreadyInBasis(usize),

    #[error("matrix is rank-deficient: expected rank {expected}, found {found}")]
    RankDeficient { expected: usize, found: usize },

    #[error("not generic: vanishes on {kind} {witness}")]
    NotGeneric { kind: SignedKind, witness: SignedSet },

    #[error("signature is missing a value for {kind} {missing}")]
    SignatureIncomplete { kind: SignedKind, missing: SignedSet },

    #[error("signature has a zero or antisymmetry-violating value at {kind} {witness}")]
    SignatureInconsistent { kind: SignedKind, witness: SignedSet },

    #[error("signature value requested for a set that is not a {kind} of the base: {witness}")]
    UnknownSignedSet { kind: SignedKind, witness: SignedSet },

    #[error("not a valid extension-lifting: {0}")]
    NotAnExtensionLifting(String),

    #[error("subset {} is not a compatible reorientation", one_based(.0))]
    NotCompatible(Vec<usize>),

    #[error("subset {} is not a bounded region", one_based(.0))]
    NotBoundedRegion(Vec<usize>),

    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}
