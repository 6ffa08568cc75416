//! Exact-arithmetic toolkit for mould calculus on polynomial- and
//! rational-valued moulds, the free Lie algebra on two generators with its
//! special derivations, regularized iterated Eisenstein integrals, and the
//! depth-2 double-shuffle / Fay-shuffle solvers built on top of them.
//!
//! Everything is computed over exact rationals; there is no floating point
//! anywhere in the library. See `CONVENTIONS.md` for the sign conventions
//! fixed by this crate and how they relate to displays found in the
//! literature.

pub mod cli;
pub mod deriv;
pub mod eisenstein;
pub mod error;
pub mod freelie;
pub mod linalg;
pub mod mould;
pub mod relations;
pub mod scalar;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
