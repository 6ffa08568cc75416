//! Truncated formal series sum c_{n,m} q^n L^m over exact rationals,
//! where L stands for 2*pi*i*tau = log q.
//!
//! A series carries explicit caps (N, M); mixing caps re-truncates to the
//! minimum so precision loss is always visible in the result type.

use std::collections::BTreeMap;

use num::Zero;
use serde::{Deserialize, Serialize};

use super::rational::{parse_rational, q, Q};
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QSeriesL {
    n_cap: u32,
    m_cap: u32,
    coeffs: BTreeMap<(u32, u32), Q>,
}

impl QSeriesL {
    pub fn zero(n_cap: u32, m_cap: u32) -> Self {
        QSeriesL {
            n_cap,
            m_cap,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(n_cap: u32, m_cap: u32) -> Self {
        let mut s = Self::zero(n_cap, m_cap);
        s.set((0, 0), q(1));
        s
    }

    /// The monomial q^n L^m.
    pub fn monomial(n_cap: u32, m_cap: u32, n: u32, m: u32, c: Q) -> Self {
        let mut s = Self::zero(n_cap, m_cap);
        if n <= n_cap && m <= m_cap {
            s.set((n, m), c);
        }
        s
    }

    pub fn n_cap(&self) -> u32 {
        self.n_cap
    }

    pub fn m_cap(&self) -> u32 {
        self.m_cap
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, n: u32, m: u32) -> Q {
        self.coeffs.get(&(n, m)).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (&(u32, u32), &Q)> {
        self.coeffs.iter()
    }

    pub fn set(&mut self, key: (u32, u32), c: Q) {
        if key.0 > self.n_cap || key.1 > self.m_cap {
            return;
        }
        if c.is_zero() {
            self.coeffs.remove(&key);
        } else {
            self.coeffs.insert(key, c);
        }
    }

    pub fn add_coeff(&mut self, key: (u32, u32), c: Q) {
        if key.0 > self.n_cap || key.1 > self.m_cap || c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(key) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// Re-truncate to the given caps.
    pub fn truncate(&self, n_cap: u32, m_cap: u32) -> Self {
        let mut out = Self::zero(n_cap, m_cap);
        for (&(n, m), c) in &self.coeffs {
            if n <= n_cap && m <= m_cap {
                out.set((n, m), c.clone());
            }
        }
        out
    }

    fn common_caps(&self, other: &Self) -> (u32, u32) {
        (self.n_cap.min(other.n_cap), self.m_cap.min(other.m_cap))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (n_cap, m_cap) = self.common_caps(other);
        let mut out = self.truncate(n_cap, m_cap);
        for (&k, c) in &other.coeffs {
            out.add_coeff(k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&q(-1)))
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = Self::zero(self.n_cap, self.m_cap);
        if c.is_zero() {
            return out;
        }
        for (&k, v) in &self.coeffs {
            out.set(k, v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (n_cap, m_cap) = self.common_caps(other);
        let mut out = Self::zero(n_cap, m_cap);
        for (&(n1, m1), c1) in &self.coeffs {
            if n1 > n_cap || m1 > m_cap {
                continue;
            }
            for (&(n2, m2), c2) in &other.coeffs {
                let (n, m) = (n1 + n2, m1 + m2);
                if n <= n_cap && m <= m_cap {
                    out.add_coeff((n, m), c1 * c2);
                }
            }
        }
        out
    }

    /// Term-wise d/dL where q = e^L: q^n L^m maps to n q^n L^m + m q^n L^{m-1}.
    pub fn d_dl(&self) -> Self {
        let mut out = Self::zero(self.n_cap, self.m_cap);
        for (&(n, m), c) in &self.coeffs {
            out.add_coeff((n, m), c * q(n as i64));
            if m > 0 {
                out.add_coeff((n, m - 1), c * q(m as i64));
            }
        }
        out
    }

    /// The unique F with dF/dL = self and zero q^0 L^0 coefficient:
    /// q^0 L^m integrates to L^{m+1}/(m+1); for n >= 1,
    /// q^n L^m maps to q^n sum_{j=0..m} (-1)^j m!/((m-j)! n^{j+1}) L^{m-j}.
    pub fn primitive_dlog(&self) -> Self {
        let mut out = Self::zero(self.n_cap, self.m_cap);
        for (&(n, m), c) in &self.coeffs {
            if n == 0 {
                out.add_coeff((0, m + 1), c / q(m as i64 + 1));
            } else {
                let mut factor = q(1) / q(n as i64); // (-1)^j m!/(m-j)! / n^{j+1}
                for j in 0..=m {
                    out.add_coeff((n, m - j), c * &factor);
                    if j < m {
                        factor = -factor * q((m - j) as i64) / q(n as i64);
                    }
                }
            }
        }
        out
    }

    /// The q^0 part as a polynomial in L (coefficients indexed by L-degree).
    pub fn q0_part(&self) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.m_cap as usize + 1];
        for (&(n, m), c) in &self.coeffs {
            if n == 0 {
                v[m as usize] = c.clone();
            }
        }
        v
    }

    pub fn to_json(&self) -> QSeriesJson {
        QSeriesJson {
            n_cap: self.n_cap,
            m_cap: self.m_cap,
            coeffs: self
                .coeffs
                .iter()
                .map(|(&(n, m), c)| QTermJson {
                    n,
                    m,
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &QSeriesJson) -> Result<Self> {
        let mut s = Self::zero(j.n_cap, j.m_cap);
        for t in &j.coeffs {
            s.add_coeff((t.n, t.m), parse_rational(&format!("{}/{}", t.num, t.den))?);
        }
        Ok(s)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QSeriesJson {
    pub n_cap: u32,
    pub m_cap: u32,
    pub coeffs: Vec<QTermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QTermJson {
    pub n: u32,
    pub m: u32,
    pub num: String,
    pub den: String,
}
