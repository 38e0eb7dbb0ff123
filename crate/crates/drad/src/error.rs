use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("no square root of -1 modulo {modulus}: {p} = 3 (mod 4)")]
    NoSquareRootOfMinusOne { p: u64, modulus: u64 },

    #[error("{0} is not an odd prime")]
    NotAnOddPrime(u64),

    #[error("family {family} requires p = 1 (mod 4), got p = {p}")]
    BadPrime { family: String, p: u64 },

    #[error("multiplication table is not a valid group: {0}")]
    NotAGroup(String),

    #[error("subset is not a subgroup")]
    NotASubgroup,

    #[error("subgroup is not valid here: {0}")]
    BadSubgroup(String),

    #[error("subgroup order {h} is not even and >= 4")]
    BadSubgroupOrder { h: usize },

    #[error("group order {order} is not a perfect square")]
    NotSquareOrder { order: usize },

    #[error("element {g} outside the subgroup is an involution")]
    InvolutionOutsideH { g: usize },

    #[error("catalog is corrupt: {0}")]
    CatalogCorrupt(String),

    #[error("no catalog shipped for order {0}")]
    CatalogUnavailable(usize),

    #[error("conductor mismatch: {0} vs {1}")]
    ConductorMismatch(usize, usize),

    #[error("k must not be the identity element")]
    IdentityK,

    #[error("identity failed: {0}")]
    IdentityViolation(String),

    #[error("assignment is missing variable {0}")]
    MissingVariable(usize),

    #[error("polynomial exceeded the monomial cap ({0} monomials)")]
    PolynomialTooLarge(usize),

    #[error("unknown group name {0:?}")]
    UnknownGroupName(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("conflicting certificate and witness for group {group}")]
    InternalInconsistency { group: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
