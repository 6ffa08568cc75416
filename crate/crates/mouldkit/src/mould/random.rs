//! Seeded random mould and Lie-element generators for property tests.
//!
//! Flexion computations on rational moulds grow quickly with the number of
//! occupied depths, so the generators favor moulds concentrated at a single
//! depth with small homogeneous values; that also matches the depth-graded
//! shape of everything these operators are applied to.

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::freelie::cpoly::CPoly;
use crate::scalar::{q, MultiPoly};

use super::core::{ma, push, Mould, PolyMould};

/// A random homogeneous polynomial in r variables of the given total
/// degree with small integer coefficients.
pub fn random_poly(rng: &mut ChaCha8Rng, r: usize, degree: u32, terms: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(r);
    for _ in 0..terms {
        // random composition of `degree` into r parts
        let mut exps = vec![0u32; r];
        for _ in 0..degree {
            exps[rng.gen_range(0..r)] += 1;
        }
        p.add_term(exps, q(rng.gen_range(-4..5)));
    }
    p
}

/// A random mould concentrated at one depth.
pub fn random_concentrated_mould(
    rng: &mut ChaCha8Rng,
    cap: usize,
    depth: usize,
    degree: u32,
) -> PolyMould {
    let mut m = PolyMould::zero(cap);
    let terms = rng.gen_range(1..3);
    m.set_value(depth, random_poly(rng, depth, degree, terms));
    m
}

/// A random polynomial mould with values at every depth 1..=cap; kept
/// small, for the purely polynomial operator laws.
pub fn random_poly_mould(rng: &mut ChaCha8Rng, cap: usize, degree: u32) -> PolyMould {
    let mut m = PolyMould::zero(cap);
    for r in 1..=cap {
        let terms = rng.gen_range(1..3);
        m.set_value(r, random_poly(rng, r, degree, terms));
    }
    m
}

/// A random push-invariant mould concentrated at one depth: the
/// symmetrization of a random value over the full push orbit.
pub fn random_push_invariant_mould(
    rng: &mut ChaCha8Rng,
    cap: usize,
    depth: usize,
    degree: u32,
) -> PolyMould {
    let seed = random_concentrated_mould(rng, cap, depth, degree);
    let mut orbit = seed.clone();
    let mut total: Mould<MultiPoly> = seed;
    for _ in 0..depth {
        orbit = push(&orbit);
        total = total.add(&orbit);
    }
    total
}

/// A random Lie element of the c-alphabet as a CPoly: a combination of
/// left-normed brackets of the letters c_1..c_4.
pub fn random_lie_cpoly(rng: &mut ChaCha8Rng, cap: u32) -> CPoly {
    let mut acc = CPoly::zero(cap);
    for _ in 0..rng.gen_range(1..4) {
        let mut term = CPoly::c(cap, rng.gen_range(1..4));
        for _ in 0..rng.gen_range(0..3) {
            let letter = CPoly::c(cap, rng.gen_range(1..4));
            term = term.bracket(&letter);
        }
        acc = acc.add(&term.scale(&q(rng.gen_range(-3..4))));
    }
    acc
}

/// A random alternal polynomial mould: ma of a random Lie element.
pub fn random_alternal_mould(rng: &mut ChaCha8Rng, cap: usize) -> PolyMould {
    ma(&random_lie_cpoly(rng, 3 * cap as u32), cap)
}
