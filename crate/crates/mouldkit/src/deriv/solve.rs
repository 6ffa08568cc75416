//! Exact linear solve of [a, X] = Y per (weight, depth) block, with X
//! constrained to the span of c-monomial expansions (where ad(a) is
//! injective for weight >= 1, depth >= 1).

use std::collections::BTreeMap;

use num::{One, Zero};

use crate::freelie::cpoly::CPoly;
use crate::freelie::ncpoly::NCPoly;
use crate::freelie::word::Word;
use crate::linalg::RationalMatrix;
use crate::scalar::Q;
use crate::{Error, Result};

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
    if depth > 0 {
        rec(weight, depth, &mut Vec::new(), &mut out);
    }
    out
}

/// Solve [a, X] = Y. Y must decompose into bigrades (w+1, d) with w >= 1,
/// d >= 1; the solution block for each lives in bigrade (w, d).
pub fn solve_ad_a(y: &NCPoly, cap: u32) -> Result<NCPoly> {
    let mut blocks: BTreeMap<(u32, u32), Vec<(Word, Q)>> = BTreeMap::new();
    for (w, c) in y.terms() {
        blocks
            .entry((w.weight(), w.depth()))
            .or_default()
            .push((w.clone(), c.clone()));
    }
    let a = NCPoly::gen_a(cap + 1);
    let mut out = NCPoly::zero(cap);
    for ((weight, depth), terms) in blocks {
        if weight < 2 || depth == 0 {
            return Err(Error::NotInImage { weight });
        }
        let keys = compositions(weight - 1, depth);
        let images: Vec<NCPoly> = keys
            .iter()
            .map(|k| {
                let x = CPoly::monomial(cap, k.clone(), Q::one()).expand(cap + 1);
                a.bracket(&x)
            })
            .collect();
        let mut word_index: BTreeMap<Word, usize> = BTreeMap::new();
        for im in &images {
            for (w, _) in im.terms() {
                let next = word_index.len();
                word_index.entry(w.clone()).or_insert(next);
            }
        }
        for (w, _) in &terms {
            if !word_index.contains_key(w) {
                return Err(Error::NotInImage { weight });
            }
        }
        let mut m = RationalMatrix::zero(word_index.len(), keys.len());
        for (j, im) in images.iter().enumerate() {
            for (w, c) in im.terms() {
                m.set(word_index[w], j, c.clone());
            }
        }
        let mut rhs = vec![Q::zero(); word_index.len()];
        for (w, c) in &terms {
            rhs[word_index[w]] = c.clone();
        }
        let sol = m.solve(&rhs).ok_or(Error::NotInImage { weight })?;
        let mut x = CPoly::zero(cap);
        for (k, c) in keys.iter().zip(&sol) {
            x.add_term(k.clone(), c.clone());
        }
        let x = x.expand(cap);
        // confirm: residual must vanish exactly
        let residual = a.bracket(&x.truncate(cap + 1)).truncate(weight);
        for (w, c) in &terms {
            if residual.coeff(w) != *c {
                return Err(Error::NotInImage { weight });
            }
        }
        for (w, c) in residual.terms() {
            if w.weight() == weight
                && terms.iter().all(|(tw, _)| tw != w)
                && !c.is_zero()
            {
                return Err(Error::NotInImage { weight });
            }
        }
        out = out.add(&x);
    }
    Ok(out)
}
