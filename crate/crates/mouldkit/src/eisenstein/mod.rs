//! Eisenstein q-expansions and regularized iterated Eisenstein integrals.
//!
//! All integrals are computed in the coordinate L = 2*pi*i*tau = log q, with
//! the transcendental prefactor absorbed so every coefficient stays
//! rational: the integral family lives in Q[[q]][L]. Two independent
//! constructions are kept permanently as mutual oracles: the differential
//! recursion (`IterEis::integral`) and the regularized bar-word expansion
//! with tangential basepoints (`IterEis::integral_oracle`).

mod gaction;
mod oracle;

pub use gaction::{g_action_on_a, g_log_is_lie, GActionReport};

use std::cell::RefCell;
use std::collections::BTreeMap;

use num::{One, Zero};

use crate::scalar::{bernoulli, factorial, q, sigma, Q, QSeriesL};
use crate::{Error, Result};

/// The Hecke-normalized Eisenstein series G_{2k}: G_0 = -1 and for k >= 1
/// G_{2k}(q) = -B_{2k}/4k + sum_{n>=1} sigma_{2k-1}(n) q^n.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EisensteinSeries {
    pub k: u32,
    pub expansion: QSeriesL,
}

/// The constant term G_{2k}^infty.
pub fn eisenstein_constant(k: u32) -> Q {
    if k == 0 {
        q(-1)
    } else {
        -bernoulli(2 * k) / q(4 * k as i64)
    }
}

/// G_{2k} truncated at q-order N (L-degree 0).
pub fn eisenstein_q(k: u32, n_cap: u32) -> EisensteinSeries {
    let mut s = QSeriesL::zero(n_cap, 0);
    s.set((0, 0), eisenstein_constant(k));
    if k >= 1 {
        for n in 1..=n_cap {
            s.set((n, 0), Q::from_integer(sigma(2 * k - 1, n as i64).unwrap()));
        }
    }
    EisensteinSeries { k, expansion: s }
}

/// The positive-q part G^0_{2k}.
pub fn eisenstein_q0(k: u32, n_cap: u32) -> QSeriesL {
    let mut s = eisenstein_q(k, n_cap).expansion;
    s.set((0, 0), Q::zero());
    s
}

/// Iterated Eisenstein integrals with a memoized cache, at fixed
/// truncation (N, M).
pub struct IterEis {
    n_cap: u32,
    m_cap: u32,
    series: RefCell<BTreeMap<u32, QSeriesL>>,
    cache: RefCell<BTreeMap<Vec<u32>, QSeriesL>>,
}

impl IterEis {
    pub fn new(n_cap: u32, m_cap: u32) -> Self {
        IterEis {
            n_cap,
            m_cap,
            series: RefCell::new(BTreeMap::new()),
            cache: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn n_cap(&self) -> u32 {
        self.n_cap
    }

    pub fn m_cap(&self) -> u32 {
        self.m_cap
    }

    fn g_series(&self, k: u32) -> QSeriesL {
        self.series
            .borrow_mut()
            .entry(k)
            .or_insert_with(|| {
                eisenstein_q(k, self.n_cap)
                    .expansion
                    .truncate(self.n_cap, self.m_cap)
            })
            .clone()
    }

    /// I(G_{2k_1}, ..., G_{2k_n}) by the differential recursion
    /// I(empty) = 1, I(f_1,...,f_n) = -primitive(f_1 * I(f_2,...,f_n)).
    pub fn integral(&self, index: &[u32]) -> QSeriesL {
        if let Some(hit) = self.cache.borrow().get(index) {
            return hit.clone();
        }
        let value = if index.is_empty() {
            QSeriesL::one(self.n_cap, self.m_cap)
        } else {
            let rest = self.integral(&index[1..]);
            let f1 = self.g_series(index[0]);
            f1.mul(&rest).primitive_dlog().scale(&q(-1))
        };
        self.cache
            .borrow_mut()
            .insert(index.to_vec(), value.clone());
        value
    }

    /// The independent construction via the regularization map R and
    /// tangential basepoints; see `oracle.rs`.
    pub fn integral_oracle(&self, index: &[u32]) -> QSeriesL {
        oracle::integral_oracle(self, index)
    }

    pub(crate) fn full_series(&self, k: u32) -> QSeriesL {
        self.g_series(k)
    }

    /// The q^0 part predicted by regularization: (-L)^n/n! prod G^infty.
    pub fn q0_profile(&self, index: &[u32]) -> QSeriesL {
        let n = index.len() as u32;
        let mut c = factorial(n).recip();
        if n % 2 == 1 {
            c = -c;
        }
        for &k in index {
            c *= eisenstein_constant(k);
        }
        QSeriesL::monomial(self.n_cap, self.m_cap, 0, n, c)
    }

    /// d/dL I(k1, k2...) = -G_{2k1} I(k2...), identically at truncation.
    /// Exact provided the L-cap M is at least the index length.
    pub fn satisfies_differential_equation(&self, index: &[u32]) -> bool {
        if index.is_empty() {
            return self.integral(index).d_dl().is_zero();
        }
        let lhs = self.integral(index).d_dl();
        let rhs = self
            .g_series(index[0])
            .mul(&self.integral(&index[1..]))
            .scale(&q(-1));
        lhs == rhs
    }

    /// The shuffle identity I(j) I(k) = sum over shuffles of I. Exact
    /// provided M is at least the total length of the pair.
    pub fn satisfies_shuffle(&self, left: &[u32], right: &[u32]) -> bool {
        let lhs = self.integral(left).mul(&self.integral(right));
        let mut rhs = QSeriesL::zero(self.n_cap, self.m_cap);
        for merged in shuffle_merge(left, right) {
            rhs = rhs.add(&self.integral(&merged));
        }
        lhs == rhs
    }
}

/// All shuffles of two index words.
pub fn shuffle_merge(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    fn rec(a: &[u32], b: &[u32], cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
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

/// The weight of an index: sum of (2 k_i + 1). This counts length, so each
/// weight admits finitely many indices even though k_i = 0 is allowed.
pub fn index_weight(index: &[u32]) -> u32 {
    index.iter().map(|&k| 2 * k + 1).sum()
}

/// All indices of weight <= bound (including the empty index).
pub fn indices_up_to_weight(bound: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    fn rec(bound: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        let used = index_weight(cur);
        let mut k = 0;
        while used + 2 * k + 1 <= bound {
            cur.push(k);
            out.push(cur.clone());
            rec(bound, cur, out);
            cur.pop();
            k += 1;
        }
    }
    rec(bound, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// True iff the q^p coefficient of primitive(G^0_{2k}) equals
/// (p^{2k-1} + 1)/p for every listed prime p.
pub fn g_coefficient_identity_check(k: u32, primes: &[u32], n_cap: u32) -> Result<bool> {
    if k < 1 {
        return Err(Error::Domain("k must be >= 1".to_string()));
    }
    for &p in primes {
        if p > n_cap {
            return Err(Error::InsufficientCap {
                needed: p,
                have: n_cap,
            });
        }
    }
    let prim = eisenstein_q0(k, n_cap).primitive_dlog();
    for &p in primes {
        let got = prim.coeff(p, 0);
        let want = (q(p as i64).pow((2 * k - 1) as i32) + Q::one()) / q(p as i64);
        if got != want {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Exact rank over Q of the truncated coefficient vectors of the integral
/// family for the given indices.
pub struct RankReport {
    pub rank: usize,
    pub indices: usize,
    pub slots: usize,
    /// false when the truncation cannot possibly separate the family
    pub sufficient: bool,
}

pub fn rank_check(ctx: &IterEis, indices: &[Vec<u32>]) -> RankReport {
    let slots = ((ctx.n_cap + 1) * (ctx.m_cap + 1)) as usize;
    let rows: Vec<Vec<Q>> = indices
        .iter()
        .map(|idx| {
            let s = ctx.integral(idx);
            let mut row = Vec::with_capacity(slots);
            for n in 0..=ctx.n_cap {
                for m in 0..=ctx.m_cap {
                    row.push(s.coeff(n, m));
                }
            }
            row
        })
        .collect();
    let rank = crate::linalg::row_rank(&rows);
    RankReport {
        rank,
        indices: indices.len(),
        slots,
        sufficient: slots >= indices.len(),
    }
}

#[cfg(test)]
mod tests;
