use crate::signature::Signature;
use thiserror::Error;

/// Errors produced by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("signature mismatch: expected Cl({},{}), found Cl({},{})", expected.p, expected.q, found.p, found.q)]
    SignatureMismatch {
        expected: Signature,
        found: Signature,
    },

    #[error("element is not an idempotent")]
    NotIdempotent,

    #[error("element is not in the left ideal generated by the idempotent")]
    NotInIdeal,

    #[error("element does not lie in the division ring fCl(p,q)f")]
    NotInDivisionRing,

    #[error("division ring basis mismatch")]
    KBasisMismatch,

    #[error("invalid idempotent factor set: {0}")]
    InvalidFactors(String),

    #[error("Cl({},{}) is simple; central idempotents exist only when p - q = 1 mod 4", sig.p, sig.q)]
    NotSemisimple { sig: Signature },

    #[error("Cl({},{}) is semisimple; this operation requires a simple algebra", sig.p, sig.q)]
    NotSimple { sig: Signature },

    #[error("left translation by this element does not permute the spinor basis up to sign")]
    NotMonomialAction,

    #[error("no witness blade maps the product into the division ring")]
    NoWitness,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
