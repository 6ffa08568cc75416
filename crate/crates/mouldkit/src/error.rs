//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Substitution or evaluation received the wrong number of images.
    #[error("arity mismatch: expected {expected} images, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    /// A fraction was constructed with (or reduced to) a zero denominator.
    #[error("zero denominator")]
    ZeroDenominator,

    /// The input is not in the span of c-monomial expansions.
    #[error("not representable in c-coordinates at weight {weight}, depth {depth}")]
    NotRepresentable { weight: u32, depth: u32 },

    /// The input is not the a-value of any derivation annihilating [a,b].
    #[error("not in the image of ad(a) at weight {weight}: no derivation has this a-value")]
    NotInImage { weight: u32 },

    /// A series or polynomial failed the Lie-likeness test.
    #[error("not a Lie element (Dynkin test fails at weight {weight})")]
    NotLie { weight: u32 },

    /// The requested computation needs a larger truncation cap.
    #[error("insufficient cap: need {needed}, have {have}")]
    InsufficientCap { needed: u32, have: u32 },

    /// An exponential of a non-weight-raising derivation does not truncate.
    #[error("derivation does not raise weight; exponential does not truncate")]
    NotWeightRaising,

    /// A mould value expected to be polynomial has a nontrivial denominator.
    #[error("non-polynomial mould value at depth {depth}")]
    NonPolynomial { depth: usize },

    /// Domain error for arithmetic functions.
    #[error("domain error: {0}")]
    Domain(String),

    /// Text or JSON input could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}
