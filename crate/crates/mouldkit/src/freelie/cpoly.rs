//! Polynomials in the alphabet c_i = ad(a)^{i-1}(b). A monomial
//! c_{k1}...c_{kr} is keyed by its tuple (k1,...,kr) with every k_i >= 1;
//! its weight is k1+...+kr and its depth is r. The empty tuple is the unit.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::ncpoly::{split_signed_terms, NCPoly};

use crate::scalar::rational::{format_rational, parse_rational, q, Q};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CPoly {
    cap: u32,
    terms: BTreeMap<Vec<u32>, Q>,
}

impl CPoly {
    pub fn zero(cap: u32) -> Self {
        CPoly {
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(cap: u32) -> Self {
        Self::monomial(cap, vec![], Q::one())
    }

    /// The generator c_k.
    pub fn c(cap: u32, k: u32) -> Self {
        assert!(k >= 1);
        Self::monomial(cap, vec![k], Q::one())
    }

    pub fn monomial(cap: u32, key: Vec<u32>, coeff: Q) -> Self {
        let mut p = Self::zero(cap);
        p.add_term(key, coeff);
        p
    }

    /// The c-monomial matching the a-block tuple (k0,...,kr) of a word
    /// a^{k0} b a^{k1} b ... b a^{kr}, i.e. the key (k0+1,...,kr+1).
    pub fn from_word_tuple(cap: u32, blocks: &[u32], coeff: Q) -> Self {
        let key: Vec<u32> = blocks.iter().map(|&k| k + 1).collect();
        Self::monomial(cap, key, coeff)
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    pub fn coeff(&self, key: &[u32]) -> Q {
        self.terms.get(key).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, key: Vec<u32>, c: Q) {
        debug_assert!(key.iter().all(|&k| k >= 1));
        let weight: u32 = key.iter().sum();
        if c.is_zero() || weight > self.cap {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
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

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.truncate(self.cap.min(other.cap));
        for (k, c) in &other.terms {
            p.add_term(k.clone(), c.clone());
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut p = self.clone();
        for v in p.terms.values_mut() {
            *v = -v.clone();
        }
        p
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.cap);
        }
        let mut p = self.clone();
        for v in p.terms.values_mut() {
            *v *= c;
        }
        p
    }

    pub fn truncate(&self, cap: u32) -> Self {
        let mut p = Self::zero(cap);
        for (k, c) in &self.terms {
            p.add_term(k.clone(), c.clone());
        }
        p
    }

    /// Concatenation product in the free algebra on the c_i.
    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.cap.min(other.cap);
        let mut p = Self::zero(cap);
        for (k1, c1) in &self.terms {
            for (k2, c2) in &other.terms {
                let mut k = k1.clone();
                k.extend_from_slice(k2);
                p.add_term(k, c1 * c2);
            }
        }
        p
    }

    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|k| k.iter().sum()).max().unwrap_or(0)
    }

    /// The part lying in the given (weight, depth) bigrade.
    pub fn bigrade_part(&self, weight: u32, depth: u32) -> Self {
        let mut p = Self::zero(self.cap);
        for (k, c) in &self.terms {
            if k.len() as u32 == depth && k.iter().sum::<u32>() == weight {
                p.add_term(k.clone(), c.clone());
            }
        }
        p
    }

    pub fn depth_part(&self, depth: u32) -> Self {
        let mut p = Self::zero(self.cap);
        for (k, c) in &self.terms {
            if k.len() as u32 == depth {
                p.add_term(k.clone(), c.clone());
            }
        }
        p
    }

    pub fn max_depth(&self) -> u32 {
        self.terms.keys().map(|k| k.len() as u32).max().unwrap_or(0)
    }

    /// Rotate every monomial tuple right by one slot; on the a-block word
    /// encoding this is exactly the cyclic a-block permutation.
    pub fn push_word(&self) -> Self {
        let mut p = Self::zero(self.cap);
        for (k, c) in &self.terms {
            let mut key = k.clone();
            if key.len() > 1 {
                key.rotate_right(1);
            }
            p.add_term(key, c.clone());
        }
        p
    }

    /// Expand via c_i = ad(a)^{i-1}(b) and concatenation.
    pub fn expand(&self, cap: u32) -> NCPoly {
        let mut cache: BTreeMap<u32, NCPoly> = BTreeMap::new();
        let a = NCPoly::gen_a(cap);
        let b = NCPoly::gen_b(cap);
        let mut out = NCPoly::zero(cap);
        for (key, c) in &self.terms {
            let mut term = NCPoly::one(cap);
            for &k in key {
                let ck = cache
                    .entry(k)
                    .or_insert_with(|| NCPoly::ad_pow(&a, k - 1, &b))
                    .clone();
                term = term.mul(&ck);
            }
            out = out.add(&term.scale(c));
        }
        out
    }

    /// Text form like "c2*c1-c1*c2"; the unit monomial prints "1".
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by_key(|k| (k.iter().sum::<u32>(), k.len(), (*k).clone()));
        let mut out = String::new();
        for key in keys {
            let c = &self.terms[key];
            let mono = if key.is_empty() {
                String::new()
            } else {
                key.iter()
                    .map(|k| format!("c{k}"))
                    .collect::<Vec<_>>()
                    .join("*")
            };
            let abs = c.abs();
            let body = if mono.is_empty() {
                format_rational(&abs)
            } else if abs.is_one() {
                mono
            } else {
                format!("{}*{}", format_rational(&abs), mono)
            };
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&body);
        }
        out
    }

    pub fn parse(s: &str, cap: u32) -> Result<CPoly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == "0" {
            return Ok(CPoly::zero(cap));
        }
        let mut out = CPoly::zero(cap);
        for (sign, term) in split_signed_terms(&s)? {
            let mut coeff = q(sign);
            let mut key = Vec::new();
            for factor in term.split('*') {
                if let Some(rest) = factor.strip_prefix('c') {
                    let k: u32 = rest
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad c-letter `{factor}`")))?;
                    if k == 0 {
                        return Err(Error::Parse("c0 is not a letter".into()));
                    }
                    key.push(k);
                } else {
                    coeff *= parse_rational(factor)?;
                }
            }
            let weight: u32 = key.iter().sum();
            if weight > cap {
                return Err(Error::InsufficientCap {
                    needed: weight,
                    have: cap,
                });
            }
            out.add_term(key, coeff);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> CPolyJson {
        CPolyJson {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| CTermJson {
                    key: k.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &CPolyJson) -> Result<CPoly> {
        let mut p = CPoly::zero(j.cap);
        for t in &j.terms {
            p.add_term(t.key.clone(), parse_rational(&format!("{}/{}", t.num, t.den))?);
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CPolyJson {
    pub cap: u32,
    pub terms: Vec<CTermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CTermJson {
    pub key: Vec<u32>,
    pub num: String,
    pub den: String,
}

impl std::fmt::Display for CPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_basics() {
        // c1 = b, c2 = ab - ba
        assert_eq!(CPoly::c(4, 1).expand(4), NCPoly::parse("b", 4).unwrap());
        assert_eq!(CPoly::c(4, 2).expand(4), NCPoly::parse("ab-ba", 4).unwrap());
        // c3 = a^2 b - 2 aba + b a^2
        assert_eq!(
            CPoly::c(4, 3).expand(4),
            NCPoly::parse("aab-2*aba+baa", 4).unwrap()
        );
        // product expands by concatenation
        let c1c2 = CPoly::c(4, 1).mul(&CPoly::c(4, 2));
        assert_eq!(c1c2.expand(4), NCPoly::parse("bab-bba", 4).unwrap());
    }

    #[test]
    fn push_word_examples() {
        // word a^2 b = tuple (2,0) -> key (3,1); push -> key (1,3) = tuple (0,2)
        let p = CPoly::from_word_tuple(6, &[2, 0], q(1));
        assert_eq!(p.coeff(&[3, 1]), q(1));
        let pushed = p.push_word();
        assert_eq!(pushed.coeff(&[1, 3]), q(1));

        // orbit sums are push-invariant
        let w = CPoly::from_word_tuple(8, &[1, 2, 0], q(1));
        let mut orbit = CPoly::zero(8);
        let mut x = w.clone();
        for _ in 0..3 {
            orbit = orbit.add(&x);
            x = x.push_word();
        }
        assert_eq!(orbit.push_word(), orbit);

        // push^{r+1} = id on depth-r words (tuple length r+1)
        let mut y = w.clone();
        for _ in 0..3 {
            y = y.push_word();
        }
        assert_eq!(y, w);
    }

    #[test]
    fn text_roundtrip() {
        let p = CPoly::parse("c2*c1-c1*c2+1/3*c4", 6).unwrap();
        assert_eq!(CPoly::parse(&p.to_text(), 6).unwrap(), p);
        assert_eq!(p.coeff(&[2, 1]), q(1));
        assert_eq!(p.coeff(&[1, 2]), q(-1));
    }

    #[test]
    fn bigrading() {
        let p = CPoly::parse("c2*c1+c3+c1*c1*c1", 6).unwrap();
        assert_eq!(p.bigrade_part(3, 2).coeff(&[2, 1]), q(1));
        assert!(p.bigrade_part(3, 2).coeff(&[3]).is_zero());
        assert_eq!(p.bigrade_part(3, 1).coeff(&[3]), q(1));
        assert_eq!(p.max_depth(), 3);
    }
}
