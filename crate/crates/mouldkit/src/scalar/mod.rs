//! Scalar kernel: exact rationals, arithmetic functions, commutative
//! multivariate polynomials, formal fractions and truncated q/L-series.

pub mod arith;
pub mod fraction;
pub mod multipoly;
pub mod qseries;
pub mod rational;

pub use arith::{bernoulli, bernoulli_upto, binomial, factorial, sigma};
pub use fraction::{fraction_sum_is_zero, FormalFraction};
pub use multipoly::MultiPoly;
pub use qseries::QSeriesL;
pub use rational::{parse_rational, q, qr, Q};
