//! Alternality-family symmetry checkers: alternal, bialternal (alternal
//! with alternal swap up to a constant-valued mould), Delta-bialternal,
//! push-invariant and push-neutral.

use num::Zero;

use crate::freelie::word::shuffle_index_patterns;
use crate::scalar::{binomial, MultiPoly, Q};
use crate::Result;

use super::core::{delta_inv, push, swap, FromMould, Mould, MouldValue, PolyMould};

/// A failing shuffle pair, as a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternalityFailure {
    pub depth: usize,
    pub split: usize,
}

/// The shuffle sum at (depth r, split i).
fn shuffle_sum<V: MouldValue>(m: &Mould<V>, r: usize, i: usize) -> Result<V> {
    let mut acc = V::zero(r);
    for pattern in shuffle_index_patterns(i, r) {
        let images: Vec<MultiPoly> = pattern.iter().map(|&t| MultiPoly::var(r, t)).collect();
        acc = acc.add(&m.value(r).substitute(&images, r)?);
    }
    Ok(acc)
}

/// The first failing shuffle pair, or None when every shuffle sum
/// vanishes for 2 <= r <= cap, 1 <= i <= floor(r/2).
pub fn alternality_failure<V: MouldValue>(m: &Mould<V>) -> Option<AlternalityFailure> {
    for r in 2..=m.cap() {
        for i in 1..=r / 2 {
            let s = shuffle_sum(m, r, i).ok()?;
            if !s.is_zero() {
                return Some(AlternalityFailure { depth: r, split: i });
            }
        }
    }
    None
}

pub fn is_alternal<V: MouldValue>(m: &Mould<V>) -> bool {
    alternality_failure(m).is_none()
}

/// Bialternality: alternal, and the swap is alternal up to addition of a
/// constant-valued mould. Returns the per-depth constants kappa_r that
/// must be added to the swap to make it alternal, or None when no such
/// constants exist. A constant mould with value kappa_r at depth r
/// contributes C(r, i) kappa_r to every (r, i) shuffle sum, so the test is
/// that each sum is the constant -C(r, i) kappa_r for a single kappa_r.
pub fn bialternality_constants<V: MouldValue>(m: &Mould<V>) -> Option<Vec<(usize, Q)>> {
    if !is_alternal(m) {
        return None;
    }
    let sw = swap(m);
    let mut kappas = Vec::new();
    for r in 2..=m.cap() {
        let mut kappa_r: Option<Q> = None;
        for i in 1..=r / 2 {
            let s = shuffle_sum(&sw, r, i).ok()?;
            let c = s.try_constant()?; // non-constant defect: not bialternal
            let kappa = -c / binomial(r as u32, i as u32);
            match &kappa_r {
                None => kappa_r = Some(kappa),
                Some(prev) if *prev != kappa => return None,
                _ => {}
            }
        }
        kappas.push((r, kappa_r.unwrap_or_else(Q::zero)));
    }
    Some(kappas)
}

pub fn is_bialternal<V: MouldValue>(m: &Mould<V>) -> bool {
    bialternality_constants(m).is_some()
}

/// Delta-bialternality: Delta^{-1}(P) is bialternal, computed over
/// rational mould values with denominator-cleared zero tests.
pub fn is_delta_bialternal<V: MouldValue>(m: &Mould<V>) -> Result<bool>
where
    super::core::RatMould: FromMould<V>,
{
    let q = delta_inv(m)?;
    Ok(is_bialternal(&q))
}

/// push(P) = P at every depth.
pub fn is_push_invariant<V: MouldValue>(m: &Mould<V>) -> bool {
    &push(m) == m
}

/// The cyclic sum P + push(P) + ... + push^r(P) vanishes at every depth
/// 2 <= r <= cap (depth 1 is excluded).
pub fn is_push_neutral<V: MouldValue>(m: &Mould<V>) -> bool {
    for r in 2..=m.cap() {
        let mut acc = m.value(r).clone();
        let mut current = m.truncate(r);
        for _ in 0..r {
            current = push(&current);
            acc = acc.add(current.value(r));
        }
        if !acc.is_zero() {
            return false;
        }
    }
    true
}

/// Build the polynomial mould concentrated at one depth from a polynomial.
pub fn concentrated(cap: usize, r: usize, p: MultiPoly) -> PolyMould {
    assert_eq!(p.nvars(), r);
    let mut m = PolyMould::zero(cap);
    m.set_value(r, p);
    m
}
