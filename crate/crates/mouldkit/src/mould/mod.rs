//! Polynomial- and rational-valued moulds and Ecalle's operator suite:
//! the encoding ma, mould multiplication mu and its bracket lu, the
//! push/swap/dar/Delta operators with inverses, the alternality-family
//! symmetry checkers, and the flexion derivations arit, arat, Darit.

mod core;
mod flexion;
pub mod random;
mod symmetry;

pub use self::core::{
    dar, dar_inv, delta, delta_inv, lu, ma, ma_inv, mu, mul_by_minus_sum, push, swap, swap_inv,
    ConstantMould, Mould, MouldJson, MouldValue, PolyMould, RatMould,
};
pub use flexion::{
    arat, arat_flexion, arat_with, arit, darit, darit_poly, darit_with, AratConvention,
};
pub use symmetry::{concentrated, 
    alternality_failure, bialternality_constants, is_alternal, is_bialternal,
    is_delta_bialternal, is_push_invariant, is_push_neutral, AlternalityFailure,
};
