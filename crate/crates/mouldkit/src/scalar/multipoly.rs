//! Sparse multivariate polynomials over exact rationals.
//!
//! Variables are u1..ur; a polynomial in 0 variables is a constant. Terms
//! are kept in a BTreeMap from exponent vector to coefficient, with no zero
//! coefficients ever stored, so equality is structural.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::rational::{format_rational, parse_rational, q, Q};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Q>,
}

/// Graded-lex: higher total degree first, then lexicographically larger
/// exponent vector first. Used for display and leading-term division.
fn grlex_desc(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    db.cmp(&da).then_with(|| b.cmp(a)).reverse()
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Q) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Q::one())
    }

    /// The variable u_{i+1} (0-based index i).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Self::monomial(nvars, exps, Q::one())
    }

    pub fn monomial(nvars: usize, exps: Vec<u32>, c: Q) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    /// The constant term.
    pub fn constant_term(&self) -> Q {
        self.terms
            .get(&vec![0; self.nvars])
            .cloned()
            .unwrap_or_else(Q::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .max()
            .unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> Q {
        self.terms.get(exps).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, c: Q) {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
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
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = -v.clone();
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..n {
            out = out.mul(self);
        }
        out
    }

    /// Exact composition: substitute images[i] for u_{i+1}. All images must
    /// share one variable count.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let out_vars = images.first().map(|p| p.nvars).unwrap_or(0);
        for im in images {
            if im.nvars != out_vars {
                return Err(Error::ArityMismatch {
                    expected: out_vars,
                    got: im.nvars,
                });
            }
        }
        // memoize powers of each image
        let mut pows: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|im| vec![MultiPoly::one(out_vars), im.clone()])
            .collect();
        let mut out = MultiPoly::zero(out_vars);
        for (exps, c) in &self.terms {
            let mut term = MultiPoly::constant(out_vars, c.clone());
            for (i, &e) in exps.iter().enumerate() {
                while pows[i].len() <= e as usize {
                    let next = pows[i].last().unwrap().mul(&images[i]);
                    pows[i].push(next);
                }
                if e > 0 {
                    term = term.mul(&pows[i][e as usize]);
                }
            }
            out = out.add(&term);
        }
        Ok(out)
    }

    /// Evaluate at a rational point.
    pub fn eval(&self, point: &[Q]) -> Result<Q> {
        if point.len() != self.nvars {
            return Err(Error::ArityMismatch {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut acc = Q::zero();
        for (exps, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(exps) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    fn leading(&self) -> Option<(&Vec<u32>, &Q)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| grlex_desc(b, a))
    }

    /// Exact division: Some(q) with self = q * d, or None when d does not
    /// divide self exactly.
    pub fn try_exact_div(&self, d: &Self) -> Option<MultiPoly> {
        assert_eq!(self.nvars, d.nvars, "variable count mismatch");
        let (dl_e, dl_c) = d.leading()?;
        let dl_e = dl_e.clone();
        let dl_c = dl_c.clone();
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.nvars);
        while !rem.is_zero() {
            let (rl_e, rl_c) = rem.leading().unwrap();
            if rl_e.iter().zip(&dl_e).any(|(a, b)| a < b) {
                return None;
            }
            let e: Vec<u32> = rl_e.iter().zip(&dl_e).map(|(a, b)| a - b).collect();
            let c = rl_c / &dl_c;
            let t = MultiPoly::monomial(self.nvars, e, c);
            rem = rem.sub(&t.mul(d));
            quot = quot.add(&t);
        }
        Some(quot)
    }

    /// Monic normalization: divide by the graded-lex leading coefficient.
    /// Returns (leading coefficient, monic polynomial); zero maps to zero.
    pub fn monic(&self) -> (Q, MultiPoly) {
        match self.leading() {
            None => (Q::one(), self.clone()),
            Some((_, c)) => {
                let c = c.clone();
                (c.clone(), self.scale(&c.recip()))
            }
        }
    }

    /// Remap into `out_vars` variables sending u_{i+1} to u_{i+1+offset}.
    pub fn shift_vars(&self, out_vars: usize, offset: usize) -> MultiPoly {
        assert!(self.nvars + offset <= out_vars);
        let mut out = MultiPoly::zero(out_vars);
        for (exps, c) in &self.terms {
            let mut e = vec![0u32; out_vars];
            for (i, &x) in exps.iter().enumerate() {
                e[i + offset] = x;
            }
            out.add_term(e, c.clone());
        }
        out
    }

    /// Canonical text form: graded-lex sorted monomials, e.g.
    /// "2*u1^3+3*u1^2*u2-3*u1*u2^2-2*u2^3". The zero polynomial prints "0".
    pub fn to_text(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut keys: Vec<&Vec<u32>> = self.terms.keys().collect();
        keys.sort_by(|a, b| grlex_desc(b, a));
        let mut out = String::new();
        for exps in keys {
            let c = &self.terms[exps];
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        format!("u{}", i + 1)
                    } else {
                        format!("u{}^{}", i + 1, e)
                    }
                })
                .collect();
            let abs = c.abs();
            let coeff_str = format_rational(&abs);
            let body = if mono.is_empty() {
                coeff_str
            } else if abs.is_one() {
                mono.join("*")
            } else {
                format!("{}*{}", coeff_str, mono.join("*"))
            };
            if out.is_empty() {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push('-');
            } else {
                out.push('+');
            }
            out.push_str(&body);
        }
        out
    }

    /// Parse the canonical text form. `nvars` fixes the ambient variable
    /// count; variables beyond it are rejected.
    pub fn parse(s: &str, nvars: usize) -> Result<MultiPoly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == "0" {
            return Ok(MultiPoly::zero(nvars));
        }
        let mut out = MultiPoly::zero(nvars);
        let mut term = String::new();
        let mut sign = 1i64;
        let mut chars = s.chars().peekable();
        // leading sign
        if let Some(&c) = chars.peek() {
            if c == '+' || c == '-' {
                if c == '-' {
                    sign = -1;
                }
                chars.next();
            }
        }
        let flush = |term: &str, sign: i64, out: &mut MultiPoly| -> Result<()> {
            if term.is_empty() {
                return Err(Error::Parse("empty term".into()));
            }
            let mut coeff = q(sign);
            let mut exps = vec![0u32; nvars];
            for factor in term.split('*') {
                if let Some(rest) = factor.strip_prefix('u') {
                    let (idx, pow) = match rest.split_once('^') {
                        Some((i, p)) => (i, p),
                        None => (rest, "1"),
                    };
                    let i: usize = idx
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad variable `{factor}`")))?;
                    let e: u32 = pow
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent `{factor}`")))?;
                    if i == 0 || i > nvars {
                        return Err(Error::Parse(format!(
                            "variable u{i} out of range (1..={nvars})"
                        )));
                    }
                    exps[i - 1] += e;
                } else {
                    coeff *= parse_rational(factor)?;
                }
            }
            out.add_term(exps, coeff);
            Ok(())
        };
        while let Some(c) = chars.next() {
            match c {
                '+' | '-' => {
                    // a sign inside a fraction like 1/-2 is not produced by us
                    flush(&term, sign, &mut out)?;
                    term.clear();
                    sign = if c == '-' { -1 } else { 1 };
                }
                _ => term.push(c),
            }
        }
        flush(&term, sign, &mut out)?;
        Ok(out)
    }

    pub fn to_json(&self) -> MultiPolyJson {
        MultiPolyJson {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson {
                    exps: e.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &MultiPolyJson) -> Result<MultiPoly> {
        let mut p = MultiPoly::zero(j.nvars);
        for t in &j.terms {
            if t.exps.len() != j.nvars {
                return Err(Error::ArityMismatch {
                    expected: j.nvars,
                    got: t.exps.len(),
                });
            }
            let c = parse_rational(&format!("{}/{}", t.num, t.den))?;
            p.add_term(t.exps.clone(), c);
        }
        Ok(p)
    }
}

/// JSON form: list of {exps, num, den}.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MultiPolyJson {
    pub nvars: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<u32>,
    pub num: String,
    pub den: String,
}

impl std::fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::qr;
    use proptest::prelude::*;

    fn u(nvars: usize, i: usize) -> MultiPoly {
        MultiPoly::var(nvars, i)
    }

    #[test]
    fn substitute_examples() {
        // p = u1, images = [u2] -> u2
        let p = u(1, 0);
        let got = p.substitute(&[u(2, 1)]).unwrap();
        assert_eq!(got, u(2, 1));

        // p = u1*u2, images = [u2, -u1-u2] -> -u1*u2 - u2^2
        let p = u(2, 0).mul(&u(2, 1));
        let img = [u(2, 1), u(2, 0).add(&u(2, 1)).neg()];
        let got = p.substitute(&img).unwrap();
        let want = u(2, 0).mul(&u(2, 1)).neg().sub(&u(2, 1).pow(2));
        assert_eq!(got, want);

        // p = u1^2, images = [u1+u2] -> u1^2 + 2 u1 u2 + u2^2
        let p = u(1, 0).pow(2);
        let got = p.substitute(&[u(2, 0).add(&u(2, 1))]).unwrap();
        let want = MultiPoly::parse("u1^2+2*u1*u2+u2^2", 2).unwrap();
        assert_eq!(got, want);

        // arity mismatch
        assert!(u(2, 0).substitute(&[u(1, 0)]).is_err());
    }

    #[test]
    fn text_roundtrip_canonical() {
        let p = MultiPoly::parse("2*u1^3+3*u1^2*u2-3*u1*u2^2-2*u2^3", 2).unwrap();
        assert_eq!(p.to_text(), "2*u1^3+3*u1^2*u2-3*u1*u2^2-2*u2^3");
        let p2 = MultiPoly::parse("-u2^3-u2^3+3*u1^2*u2+2*u1^3-3*u1*u2^2", 2).unwrap();
        assert_eq!(p, p2);
        let c = MultiPoly::parse("-5/3", 0).unwrap();
        assert_eq!(c.to_text(), "-5/3");
        assert_eq!(MultiPoly::parse("0", 3).unwrap(), MultiPoly::zero(3));
        assert_eq!(
            MultiPoly::parse("1/2*u1", 1).unwrap().coeff(&[1]),
            qr(1, 2)
        );
    }

    #[test]
    fn exact_division() {
        let p = MultiPoly::parse("u1^2-u2^2", 2).unwrap();
        let d = MultiPoly::parse("u1+u2", 2).unwrap();
        let quot = p.try_exact_div(&d).unwrap();
        assert_eq!(quot, MultiPoly::parse("u1-u2", 2).unwrap());
        assert!(MultiPoly::parse("u1^2+u2^2", 2)
            .unwrap()
            .try_exact_div(&d)
            .is_none());
    }

    #[test]
    fn json_roundtrip() {
        let p = MultiPoly::parse("1/2*u1^2*u3-7*u2", 3).unwrap();
        let j = serde_json::to_string(&p.to_json()).unwrap();
        let back: MultiPolyJson = serde_json::from_str(&j).unwrap();
        assert_eq!(MultiPoly::from_json(&back).unwrap(), p);
    }

    fn arb_poly() -> impl Strategy<Value = MultiPoly> {
        proptest::collection::vec(((0u32..3, 0u32..3), -4i64..5), 0..5).prop_map(|ts| {
            let mut p = MultiPoly::zero(2);
            for ((e1, e2), c) in ts {
                p.add_term(vec![e1, e2], q(c));
            }
            p
        })
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            // associativity and distributivity
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
        }
    }
}
