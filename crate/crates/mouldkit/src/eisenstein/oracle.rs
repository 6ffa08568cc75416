//! The regularized iterated integral via the R-map and tangential
//! basepoints, independent of the differential recursion.
//!
//! I(f_1,...,f_n) = sum_{i=0}^n [int_tau^{i8} R[f_1|...|f_i]]
//!                           * [int_tau^0 [f^8_{i+1}|...|f^8_n]],
//! where R[f_1|...|f_i] = sum_t (-1)^{i-t} [f_1|...|f_t] sh
//! [f_i^8|...|f_{t+1}^8], the divergent end is regularized by assigning
//! value zero at the tangential basepoint q = 0, and the integrals toward
//! the cusp tau = 0 of constants contribute (-L)^m/m! monomials.

use num::Zero;

use crate::scalar::{factorial, q, QSeriesL};

use super::{eisenstein_constant, IterEis};

/// A bar-word entry: the full Eisenstein series or its constant term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Symbol {
    Full(u32),
    Const(u32),
}

fn symbol_series(ctx: &IterEis, s: Symbol) -> QSeriesL {
    match s {
        Symbol::Full(k) => ctx.full_series(k),
        Symbol::Const(k) => {
            let mut c = QSeriesL::zero(ctx.n_cap(), ctx.m_cap());
            c.set((0, 0), eisenstein_constant(k));
            c
        }
    }
}

/// int_tau^{i8} of a bar word, with the primitive normalized to vanish in
/// the q^0 L^0 slot (tangential basepoint at q = 0):
/// E(empty) = 1; E([g1|...]) = -primitive(g1 * E(rest)).
fn bar_integral(ctx: &IterEis, word: &[Symbol]) -> QSeriesL {
    match word.split_first() {
        None => QSeriesL::one(ctx.n_cap(), ctx.m_cap()),
        Some((&g1, rest)) => {
            let inner = bar_integral(ctx, rest);
            symbol_series(ctx, g1)
                .mul(&inner)
                .primitive_dlog()
                .scale(&q(-1))
        }
    }
}

fn shuffles(a: &[Symbol], b: &[Symbol]) -> Vec<Vec<Symbol>> {
    fn rec(a: &[Symbol], b: &[Symbol], cur: &mut Vec<Symbol>, out: &mut Vec<Vec<Symbol>>) {
        if a.is_empty() && b.is_empty() {
            out.push(cur.clone());
            return;
        }
        if let Some((&h, t)) = a.split_first() {
            cur.push(h);
            rec(t, b, cur, out);
            cur.pop();
        }
        if let Some((&h, t)) = b.split_first() {
            cur.push(h);
            rec(a, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(a, b, &mut Vec::new(), &mut out);
    out
}

/// int_tau^{i8} R[f_1|...|f_i] with the regularization map expanded into
/// bar-word shuffles.
fn r_map_integral(ctx: &IterEis, index: &[u32]) -> QSeriesL {
    let i = index.len();
    let mut acc = QSeriesL::zero(ctx.n_cap(), ctx.m_cap());
    for t in 0..=i {
        let left: Vec<Symbol> = index[..t].iter().map(|&k| Symbol::Full(k)).collect();
        let right: Vec<Symbol> = index[t..i]
            .iter()
            .rev()
            .map(|&k| Symbol::Const(k))
            .collect();
        let mut term = QSeriesL::zero(ctx.n_cap(), ctx.m_cap());
        for w in shuffles(&left, &right) {
            term = term.add(&bar_integral(ctx, &w));
        }
        if (i - t) % 2 == 1 {
            term = term.scale(&q(-1));
        }
        acc = acc.add(&term);
    }
    acc
}

pub(super) fn integral_oracle(ctx: &IterEis, index: &[u32]) -> QSeriesL {
    let n = index.len();
    let mut acc = QSeriesL::zero(ctx.n_cap(), ctx.m_cap());
    for i in 0..=n {
        let head = r_map_integral(ctx, &index[..i]);
        // int_tau^0 of the constants f^8_{i+1}..f^8_n over the simplex:
        // prod of constants * (-L)^{n-i}/(n-i)!
        let m = (n - i) as u32;
        let mut c = factorial(m).recip();
        if m % 2 == 1 {
            c = -c;
        }
        for &k in &index[i..] {
            c *= eisenstein_constant(k);
        }
        if c.is_zero() {
            continue;
        }
        let tail = QSeriesL::monomial(ctx.n_cap(), ctx.m_cap(), 0, m, c);
        acc = acc.add(&head.mul(&tail));
    }
    acc
}
