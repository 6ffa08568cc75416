//! Lazard elimination: re-expressing elements of Q a + Lie[[C]] in the
//! alphabet c_i = ad(a)^{i-1}(b), by an exact linear solve per
//! (weight, depth) block against the expanded c-monomial spanning set.

use std::collections::BTreeMap;

use num::Zero;

use super::cpoly::CPoly;
use super::ncpoly::NCPoly;
use super::word::Word;
use crate::linalg::RationalMatrix;
use crate::scalar::Q;
use crate::{Error, Result};

/// Compositions of `weight` into `depth` parts, each >= 1.
fn compositions(weight: u32, depth: u32) -> Vec<Vec<u32>> {
    fn rec(rest: u32, parts: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let max = rest.saturating_sub(parts - 1);
        for k in 1..=max {
            cur.push(k);
            rec(rest - k, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if depth == 0 {
        if weight == 0 {
            out.push(vec![]);
        }
        return out;
    }
    rec(weight, depth, &mut Vec::new(), &mut out);
    out
}

/// Express p in c-coordinates. Returns the coefficient of the letter a
/// (p may have a weight-1 a-term) and the CPoly with matching expansion.
///
/// Errors with `NotRepresentable` when some (weight, depth) block of p is
/// not in the span of the expanded c-monomials, which certifies that p does
/// not lie in Q a + Q<<C>> at that bigrade.
pub fn to_c_coordinates(p: &NCPoly) -> Result<(Q, CPoly)> {
    let cap = p.cap();
    let mut out = CPoly::zero(cap);
    let mut a_coeff = Q::zero();

    // split p into (weight, depth) blocks
    let mut blocks: BTreeMap<(u32, u32), Vec<(Word, Q)>> = BTreeMap::new();
    for (w, c) in p.terms() {
        blocks
            .entry((w.weight(), w.depth()))
            .or_default()
            .push((w.clone(), c.clone()));
    }

    for ((weight, depth), terms) in blocks {
        if weight == 0 {
            // constant term: the empty c-monomial
            out.add_term(vec![], terms[0].1.clone());
            continue;
        }
        if depth == 0 {
            // pure a-words: only the letter a itself is representable
            if weight == 1 {
                a_coeff = terms[0].1.clone();
                continue;
            }
            return Err(Error::NotRepresentable { weight, depth });
        }
        let keys = compositions(weight, depth);
        let expansions: Vec<NCPoly> = keys
            .iter()
            .map(|k| CPoly::monomial(cap, k.clone(), num::One::one()).expand(cap))
            .collect();
        // rows: words of this bigrade; columns: c-monomials
        let mut word_index: BTreeMap<Word, usize> = BTreeMap::new();
        for e in &expansions {
            for (w, _) in e.terms() {
                let next = word_index.len();
                word_index.entry(w.clone()).or_insert(next);
            }
        }
        for (w, _) in &terms {
            if !word_index.contains_key(w) {
                return Err(Error::NotRepresentable { weight, depth });
            }
        }
        let mut m = RationalMatrix::zero(word_index.len(), keys.len());
        for (j, e) in expansions.iter().enumerate() {
            for (w, c) in e.terms() {
                m.set(word_index[w], j, c.clone());
            }
        }
        let mut rhs = vec![Q::zero(); word_index.len()];
        for (w, c) in &terms {
            rhs[word_index[w]] = c.clone();
        }
        let sol = m
            .solve(&rhs)
            .ok_or(Error::NotRepresentable { weight, depth })?;
        // the solve sets free variables to zero, but the expansion columns
        // are linearly independent, so the solution is unique; verify by
        // expanding back (cheap at these block sizes).
        let mut check = NCPoly::zero(cap);
        for (k, x) in keys.iter().zip(&sol) {
            out.add_term(k.clone(), x.clone());
            if !x.is_zero() {
                check = check.add(&CPoly::monomial(cap, k.clone(), x.clone()).expand(cap));
            }
        }
        for (w, c) in &terms {
            if check.coeff(w) != *c {
                return Err(Error::NotRepresentable { weight, depth });
            }
        }
        // any word produced by the expansion but absent from p must cancel
        for (w, c) in check.terms() {
            if w.weight() == weight && w.depth() == depth {
                let want = terms
                    .iter()
                    .find(|(tw, _)| tw == w)
                    .map(|(_, tc)| tc.clone())
                    .unwrap_or_else(Q::zero);
                if *c != want {
                    return Err(Error::NotRepresentable { weight, depth });
                }
            }
        }
    }
    Ok((a_coeff, out))
}

/// c-coordinates of an element known to have no a-term.
pub fn to_c_coordinates_strict(p: &NCPoly) -> Result<CPoly> {
    let (a, c) = to_c_coordinates(p)?;
    if !a.is_zero() {
        return Err(Error::NotRepresentable {
            weight: 1,
            depth: 0,
        });
    }
    Ok(c)
}
