//! The action of the generating automorphism on the generator a: the sum
//! over all multi-indices of the iterated integral times the value on a of
//! the corresponding composite of normalized derivations, together with
//! its differential-equation and group-likeness shadows.

use std::collections::BTreeMap;

use num::One;

use crate::deriv::{epsilon_tilde, Derivation};
use crate::freelie::ncpoly::NCPoly;
use crate::freelie::word::{Letter, Word};
use crate::scalar::{q, Q, QSeriesL};
use crate::Result;

use super::IterEis;

/// A noncommutative word series with q/L-series coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct NCSeries {
    pub cap: u32,
    pub terms: BTreeMap<Word, QSeriesL>,
}

impl NCSeries {
    fn zero(cap: u32) -> Self {
        NCSeries {
            cap,
            terms: BTreeMap::new(),
        }
    }

    fn add_word(&mut self, w: Word, s: QSeriesL) {
        if s.is_zero() || w.weight() > self.cap {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&s);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
            Entry::Vacant(v) => {
                v.insert(s);
            }
        }
    }

    fn add_poly(&mut self, p: &NCPoly, s: &QSeriesL) {
        for (w, c) in p.terms() {
            self.add_word(w.clone(), s.scale(c));
        }
    }

    fn d_dl(&self) -> Self {
        let mut out = Self::zero(self.cap);
        for (w, s) in &self.terms {
            out.add_word(w.clone(), s.d_dl());
        }
        out
    }

    fn scale_series(&self, f: &QSeriesL) -> Self {
        let mut out = Self::zero(self.cap);
        for (w, s) in &self.terms {
            out.add_word(w.clone(), s.mul(f));
        }
        out
    }

    fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, s) in &other.terms {
            out.add_word(w.clone(), s.clone());
        }
        out
    }

    /// Apply a rational-coefficient derivation through the coefficients.
    fn apply_derivation(&self, d: &Derivation) -> Self {
        let mut out = Self::zero(self.cap);
        for (w, s) in &self.terms {
            let letters = w.letters();
            for i in 0..letters.len() {
                let img = match letters[i] {
                    Letter::A => d.val_a(),
                    Letter::B => d.val_b(),
                };
                let prefix = Word::from_letters(letters[..i].to_vec());
                let suffix = Word::from_letters(letters[i + 1..].to_vec());
                for (iw, ic) in img.terms() {
                    out.add_word(prefix.concat(iw).concat(&suffix), s.scale(ic));
                }
            }
        }
        out
    }
}

/// The report produced by assembling the action on a.
pub struct GActionReport {
    pub series: NCSeries,
    /// the residual of the tau-evolution equation is identically zero
    pub differential_equation_ok: bool,
    /// number of multi-indices with a nonzero contribution
    pub contributing_indices: usize,
}

/// Assemble sum over multi-indices of G_index * eps~_index(a), truncated
/// at word weight `weight_cap`, and verify the evolution equation
/// d/dL (g . a) = -(sum_k G_{2k} eps~_{2k}) (g . a) by exact
/// differentiation in L.
pub fn g_action_on_a(weight_cap: u32, ctx: &IterEis) -> Result<GActionReport> {
    let mut eps: Vec<(u32, Derivation)> = Vec::new();
    let mut two_k = 0;
    while two_k + 1 <= weight_cap {
        eps.push((two_k / 2, epsilon_tilde(two_k, weight_cap)?));
        two_k += 2;
    }

    let mut assembled = NCSeries::zero(weight_cap);
    let mut contributing = 0usize;

    // depth-first over indices, applying the rightmost entry first
    fn rec(
        ctx: &IterEis,
        eps: &[(u32, Derivation)],
        weight_cap: u32,
        index_rev: &mut Vec<u32>,
        value: &NCPoly,
        out: &mut NCSeries,
        contributing: &mut usize,
    ) {
        for (k, d) in eps {
            let new_weight: u32 = {
                let delta = 2 * k;
                value.min_weight().unwrap_or(0) + delta
            };
            if new_weight > weight_cap && *k > 0 {
                continue;
            }
            let next = d.apply(value);
            if next.is_zero() {
                continue;
            }
            index_rev.push(*k);
            let index: Vec<u32> = index_rev.iter().rev().cloned().collect();
            let g = ctx.integral(&index);
            if !g.is_zero() {
                out.add_poly(&next, &g);
                *contributing += 1;
            }
            rec(ctx, eps, weight_cap, index_rev, &next, out, contributing);
            index_rev.pop();
        }
    }

    let a = NCPoly::gen_a(weight_cap);
    // the empty index contributes G_empty * a = a
    assembled.add_poly(&a, &QSeriesL::one(ctx.n_cap(), ctx.m_cap()));
    contributing += 1;
    rec(
        ctx,
        &eps,
        weight_cap,
        &mut Vec::new(),
        &a,
        &mut assembled,
        &mut contributing,
    );

    // evolution equation residual: d/dL (g.a) + sum_k G_{2k} eps~_{2k}(g.a)
    let lhs = assembled.d_dl();
    let mut residual = lhs;
    for (k, d) in &eps {
        let g = ctx.full_series(*k);
        let applied = assembled.apply_derivation(d);
        residual = residual.add(&applied.scale_series(&g));
    }

    Ok(GActionReport {
        differential_equation_ok: residual.terms.is_empty(),
        contributing_indices: contributing,
        series: assembled,
    })
}

/// Group-likeness shadow: in the free algebra on letters e_{2k}
/// (k <= k_max) the series sum G_index e_index is group-like, so its log
/// is Lie-like length by length; checked via the Dynkin projector over
/// the coefficient ring.
pub fn g_log_is_lie(ctx: &IterEis, k_max: u32, len_cap: usize) -> bool {
    type Free = BTreeMap<Vec<u32>, QSeriesL>;

    let letters: Vec<u32> = (0..=k_max).collect();
    // assemble g-hat - 1 (all nonempty indices up to the length cap)
    let mut gm1: Free = BTreeMap::new();
    let mut stack: Vec<Vec<u32>> = letters.iter().map(|&k| vec![k]).collect();
    while let Some(idx) = stack.pop() {
        gm1.insert(idx.clone(), ctx.integral(&idx));
        if idx.len() < len_cap {
            for &k in &letters {
                let mut next = idx.clone();
                next.push(k);
                stack.push(next);
            }
        }
    }

    let mul = |a: &Free, b: &Free| -> Free {
        let mut out: Free = BTreeMap::new();
        for (wa, ca) in a {
            for (wb, cb) in b {
                if wa.len() + wb.len() > len_cap {
                    continue;
                }
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                let c = ca.mul(cb);
                if c.is_zero() {
                    continue;
                }
                use std::collections::btree_map::Entry;
                match out.entry(w) {
                    Entry::Occupied(mut e) => {
                        let s = e.get().add(&c);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                    Entry::Vacant(v) => {
                        v.insert(c);
                    }
                }
            }
        }
        out
    };

    // log(1 + x) = sum (-1)^{m+1} x^m / m, truncated by length
    let mut log: Free = BTreeMap::new();
    let mut power: Free = gm1.clone();
    for m in 1..=len_cap {
        let coeff = if m % 2 == 1 {
            Q::one() / q(m as i64)
        } else {
            -Q::one() / q(m as i64)
        };
        for (w, c) in &power {
            let scaled = c.scale(&coeff);
            if scaled.is_zero() {
                continue;
            }
            use std::collections::btree_map::Entry;
            match log.entry(w.clone()) {
                Entry::Occupied(mut e) => {
                    let s = e.get().add(&scaled);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
                Entry::Vacant(v) => {
                    v.insert(scaled);
                }
            }
        }
        if m < len_cap {
            power = mul(&power, &gm1);
        }
    }

    // Dynkin: theta(word) = [..[[l1,l2],l3].., ln] in the free algebra;
    // Lie-likeness of the length-n part means theta(part) = n * part
    let bracket = |a: &Free, b: &Free| -> Free {
        let ab = mul(a, b);
        let ba = mul(b, a);
        let mut out = ab;
        for (w, c) in ba {
            use std::collections::btree_map::Entry;
            match out.entry(w) {
                Entry::Occupied(mut e) => {
                    let s = e.get().sub(&c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
                Entry::Vacant(v) => {
                    v.insert(c.scale(&q(-1)));
                }
            }
        }
        out
    };

    for n in 1..=len_cap {
        let part: Free = log
            .iter()
            .filter(|(w, _)| w.len() == n)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        let mut theta: Free = BTreeMap::new();
        for (w, c) in &part {
            let mut acc: Free = BTreeMap::new();
            acc.insert(vec![w[0]], QSeriesL::one(ctx.n_cap(), ctx.m_cap()));
            for &l in &w[1..] {
                let mut letter: Free = BTreeMap::new();
                letter.insert(vec![l], QSeriesL::one(ctx.n_cap(), ctx.m_cap()));
                acc = bracket(&acc, &letter);
            }
            for (w2, c2) in acc {
                let scaled = c2.mul(c);
                if scaled.is_zero() {
                    continue;
                }
                use std::collections::btree_map::Entry;
                match theta.entry(w2) {
                    Entry::Occupied(mut e) => {
                        let s = e.get().add(&scaled);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                    Entry::Vacant(v) => {
                        v.insert(scaled);
                    }
                }
            }
        }
        // compare theta with n * part
        let scaled_part: Free = part
            .iter()
            .map(|(w, c)| (w.clone(), c.scale(&q(n as i64))))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if theta != scaled_part {
            return false;
        }
    }
    true
}
