//! Noncommutative polynomials over {a, b} truncated by weight, and the
//! Dynkin-certified Lie elements.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::word::{shuffle_words, Letter, Word};
use crate::scalar::rational::{format_rational, parse_rational, q, Q};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCPoly {
    cap: u32,
    terms: BTreeMap<Word, Q>,
}

impl NCPoly {
    pub fn zero(cap: u32) -> Self {
        NCPoly {
            cap,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(cap: u32) -> Self {
        Self::from_word(cap, Word::empty(), Q::one())
    }

    pub fn gen_a(cap: u32) -> Self {
        Self::from_word(cap, Word::letter(Letter::A), Q::one())
    }

    pub fn gen_b(cap: u32) -> Self {
        Self::from_word(cap, Word::letter(Letter::B), Q::one())
    }

    pub fn from_word(cap: u32, w: Word, c: Q) -> Self {
        let mut p = Self::zero(cap);
        p.add_term(w, c);
        p
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Q)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, w: &Word) -> Q {
        self.terms.get(w).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, w: Word, c: Q) {
        if c.is_zero() || w.weight() > self.cap {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
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

    /// Weight caps combine by minimum.
    fn join_cap(&self, other: &Self) -> u32 {
        self.cap.min(other.cap)
    }

    pub fn truncate(&self, cap: u32) -> Self {
        let mut p = Self::zero(cap);
        for (w, c) in &self.terms {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut p = self.truncate(self.join_cap(other));
        for (w, c) in &other.terms {
            p.add_term(w.clone(), c.clone());
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

    /// Concatenation product, truncated at the joined cap.
    pub fn mul(&self, other: &Self) -> Self {
        let cap = self.join_cap(other);
        let mut p = Self::zero(cap);
        for (w1, c1) in &self.terms {
            if w1.weight() > cap {
                continue;
            }
            for (w2, c2) in &other.terms {
                if w1.weight() + w2.weight() > cap {
                    continue;
                }
                p.add_term(w1.concat(w2), c1 * c2);
            }
        }
        p
    }

    /// Lie bracket pq - qp.
    pub fn bracket(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    /// ad(x)^n(y).
    pub fn ad_pow(x: &Self, n: u32, y: &Self) -> Self {
        let mut acc = y.truncate(x.join_cap(y));
        for _ in 0..n {
            acc = x.bracket(&acc);
        }
        acc
    }

    pub fn max_weight(&self) -> u32 {
        self.terms.keys().map(|w| w.weight()).max().unwrap_or(0)
    }

    pub fn min_weight(&self) -> Option<u32> {
        self.terms.keys().map(|w| w.weight()).min()
    }

    /// The homogeneous part of the given weight.
    pub fn weight_part(&self, n: u32) -> Self {
        let mut p = Self::zero(self.cap);
        for (w, c) in &self.terms {
            if w.weight() == n {
                p.add_term(w.clone(), c.clone());
            }
        }
        p
    }

    /// The part of the given b-degree (depth).
    pub fn depth_part(&self, d: u32) -> Self {
        let mut p = Self::zero(self.cap);
        for (w, c) in &self.terms {
            if w.depth() == d {
                p.add_term(w.clone(), c.clone());
            }
        }
        p
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut weights = self.terms.keys().map(|w| w.weight());
        match weights.next() {
            None => true,
            Some(w0) => weights.all(|w| w == w0),
        }
    }

    /// Word-level push operator, extended linearly.
    pub fn push_series(&self) -> Self {
        let mut p = Self::zero(self.cap);
        for (w, c) in &self.terms {
            p.add_term(w.push(), c.clone());
        }
        p
    }

    /// Dynkin left-bracketing map: each word l1 l2 ... ln maps to
    /// [...[[l1, l2], l3]..., ln].
    pub fn dynkin(&self) -> Self {
        let mut out = Self::zero(self.cap);
        for (w, c) in &self.terms {
            let ls = w.letters();
            if ls.is_empty() {
                continue;
            }
            let mut acc = Self::from_word(self.cap, Word::letter(ls[0]), Q::one());
            for &l in &ls[1..] {
                let gen = Self::from_word(self.cap, Word::letter(l), Q::one());
                acc = acc.bracket(&gen);
            }
            out = out.add(&acc.scale(c));
        }
        out
    }

    /// Dynkin-Specht-Wever: p is a Lie element iff every homogeneous part
    /// p_n satisfies dynkin(p_n) = n p_n (and the weight-0 part vanishes).
    pub fn is_lie(&self) -> bool {
        self.lie_defect().is_none()
    }

    /// The smallest weight at which the Dynkin condition fails.
    pub fn lie_defect(&self) -> Option<u32> {
        if !self.coeff(&Word::empty()).is_zero() {
            return Some(0);
        }
        for n in 1..=self.max_weight() {
            let part = self.weight_part(n);
            if part.is_zero() {
                continue;
            }
            if part.dynkin() != part.scale(&q(n as i64)) {
                return Some(n);
            }
        }
        None
    }

    /// Shuffle product of two words as an NCPoly.
    pub fn shuffle(cap: u32, w1: &Word, w2: &Word) -> Self {
        let mut p = Self::zero(cap);
        for w in shuffle_words(w1, w2) {
            p.add_term(w, Q::one());
        }
        p
    }

    /// Text form like "ab-ba" or "2*aab+aba-1/2*b". The empty word prints 1.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut keys: Vec<&Word> = self.terms.keys().collect();
        keys.sort_by_key(|w| (w.weight(), (*w).clone()));
        let mut out = String::new();
        for w in keys {
            let c = &self.terms[w];
            let abs = c.abs();
            let body = if w.is_empty() {
                format_rational(&abs)
            } else if abs.is_one() {
                w.to_string()
            } else {
                format!("{}*{}", format_rational(&abs), w)
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

    pub fn parse(s: &str, cap: u32) -> Result<NCPoly> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() || s == "0" {
            return Ok(NCPoly::zero(cap));
        }
        let mut out = NCPoly::zero(cap);
        for piece in split_signed_terms(&s)? {
            let (sign, term) = piece;
            let mut coeff = q(sign);
            let mut word = Word::empty();
            for factor in term.split('*') {
                if factor.chars().all(|c| c == 'a' || c == 'b') && !factor.is_empty() {
                    word = word.concat(&Word::parse(factor)?);
                } else if factor == "1" && term == "1" {
                    // bare unit term
                } else {
                    coeff *= parse_rational(factor)?;
                }
            }
            if word.weight() > cap {
                return Err(Error::InsufficientCap {
                    needed: word.weight(),
                    have: cap,
                });
            }
            out.add_term(word, coeff);
        }
        Ok(out)
    }

    pub fn to_json(&self) -> NCPolyJson {
        NCPolyJson {
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .map(|(w, c)| NCTermJson {
                    word: if w.is_empty() { String::new() } else { w.to_string() },
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn from_json(j: &NCPolyJson) -> Result<NCPoly> {
        let mut p = NCPoly::zero(j.cap);
        for t in &j.terms {
            let w = Word::parse(&t.word)?;
            p.add_term(w, parse_rational(&format!("{}/{}", t.num, t.den))?);
        }
        Ok(p)
    }
}

pub(crate) fn split_signed_terms(s: &str) -> Result<Vec<(i64, String)>> {
    let mut pieces = Vec::new();
    let mut term = String::new();
    let mut sign = 1i64;
    let mut started = false;
    for (i, c) in s.chars().enumerate() {
        match c {
            '+' | '-' if i == 0 => {
                sign = if c == '-' { -1 } else { 1 };
                started = true;
            }
            '+' | '-' => {
                if term.is_empty() {
                    return Err(Error::Parse("empty term".into()));
                }
                pieces.push((sign, std::mem::take(&mut term)));
                sign = if c == '-' { -1 } else { 1 };
            }
            _ => {
                term.push(c);
                started = true;
            }
        }
    }
    if term.is_empty() || !started {
        return Err(Error::Parse("empty term".into()));
    }
    pieces.push((sign, term));
    Ok(pieces)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NCPolyJson {
    pub cap: u32,
    pub terms: Vec<NCTermJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct NCTermJson {
    pub word: String,
    pub num: String,
    pub den: String,
}

impl std::fmt::Display for NCPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// An NCPoly certified Lie-like by the Dynkin criterion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieElement(NCPoly);

impl LieElement {
    pub fn new(p: NCPoly) -> Result<Self> {
        match p.lie_defect() {
            None => Ok(LieElement(p)),
            Some(weight) => Err(Error::NotLie { weight }),
        }
    }

    /// Wrap without re-checking; for values produced by operations that
    /// preserve Lie-likeness by construction.
    pub(crate) fn new_unchecked(p: NCPoly) -> Self {
        LieElement(p)
    }

    pub fn as_poly(&self) -> &NCPoly {
        &self.0
    }

    pub fn into_poly(self) -> NCPoly {
        self.0
    }
}

impl std::ops::Deref for LieElement {
    type Target = NCPoly;
    fn deref(&self) -> &NCPoly {
        &self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(cap: u32) -> NCPoly {
        NCPoly::gen_a(cap)
    }
    fn b(cap: u32) -> NCPoly {
        NCPoly::gen_b(cap)
    }

    #[test]
    fn bracket_examples() {
        let ab = a(6).bracket(&b(6));
        assert_eq!(ab, NCPoly::parse("ab-ba", 6).unwrap());
        // [x, x] = 0
        assert!(ab.bracket(&ab).is_zero());
        // (a, [a,b]) = a(ab-ba) - (ab-ba)a
        let got = a(6).bracket(&ab);
        assert_eq!(got, NCPoly::parse("aab-2*aba+baa", 6).unwrap());
    }

    #[test]
    fn ad_pow_examples() {
        assert_eq!(NCPoly::ad_pow(&b(5), 0, &a(5)), a(5));
        assert_eq!(
            NCPoly::ad_pow(&a(5), 1, &b(5)),
            NCPoly::parse("ab-ba", 5).unwrap()
        );
        // ad(b)^2(a) = [b,[b,a]]
        let want = b(5).bracket(&b(5).bracket(&a(5)));
        assert_eq!(NCPoly::ad_pow(&b(5), 2, &a(5)), want);
    }

    #[test]
    fn is_lie_examples() {
        assert!(NCPoly::parse("ab-ba", 4).unwrap().is_lie());
        assert!(!NCPoly::parse("ab", 4).unwrap().is_lie());
        // dynkin(ab+ba) = [a,b] + [b,a] = 0 != 2(ab+ba)
        assert!(!NCPoly::parse("ab+ba", 4).unwrap().is_lie());
        assert!(NCPoly::zero(4).is_lie());
        assert!(a(4).is_lie());
    }

    #[test]
    fn jacobi_and_antisymmetry_on_random_lie_elements() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let cap = 8;
        // random Lie elements as random nested brackets of generators
        let random_lie = |rng: &mut rand_chacha::ChaCha8Rng| -> NCPoly {
            let mut acc = if rng.gen_bool(0.5) { a(cap) } else { b(cap) };
            for _ in 0..rng.gen_range(0..3) {
                let next = if rng.gen_bool(0.5) { a(cap) } else { b(cap) };
                acc = acc.bracket(&next);
            }
            acc.scale(&q(rng.gen_range(-3..4)))
        };
        for _ in 0..25 {
            let x = random_lie(&mut rng);
            let y = random_lie(&mut rng);
            let z = random_lie(&mut rng);
            assert!(x.bracket(&y).add(&y.bracket(&x)).is_zero());
            let jac = x
                .bracket(&y.bracket(&z))
                .add(&y.bracket(&z.bracket(&x)))
                .add(&z.bracket(&x.bracket(&y)));
            assert!(jac.is_zero());
            assert!(x.bracket(&y).is_lie());
        }
    }

    #[test]
    fn shuffle_examples() {
        let sh = NCPoly::shuffle(5, &Word::parse("a").unwrap(), &Word::parse("b").unwrap());
        assert_eq!(sh, NCPoly::parse("ab+ba", 5).unwrap());
        let sh = NCPoly::shuffle(5, &Word::empty(), &Word::parse("ab").unwrap());
        assert_eq!(sh, NCPoly::parse("ab", 5).unwrap());
        // (ab, a) -> 2 aab + aba, frozen by enumerating the 3 shuffles
        let sh = NCPoly::shuffle(5, &Word::parse("ab").unwrap(), &Word::parse("a").unwrap());
        assert_eq!(sh, NCPoly::parse("2*aab+aba", 5).unwrap());
    }

    #[test]
    fn truncation_by_minimum_cap() {
        let x = NCPoly::parse("ab", 2).unwrap();
        let y = NCPoly::parse("ba", 3).unwrap();
        let p = x.mul(&y);
        assert_eq!(p.cap(), 2);
        assert!(p.is_zero()); // weight-4 product truncated away
    }

    #[test]
    fn text_roundtrip() {
        let p = NCPoly::parse("2*aab+aba-1/2*b+3", 5).unwrap();
        let p2 = NCPoly::parse(&p.to_text(), 5).unwrap();
        assert_eq!(p, p2);
        assert_eq!(NCPoly::parse("ab-ba", 3).unwrap().to_text(), "ab-ba");
    }

    // The centralizer facts the Lazard solver relies on: ad(a) and ad(b)
    // are injective on homogeneous components of weight >= 2.
    #[test]
    fn centralizer_is_trivial_in_weight_ge_2() {
        use crate::linalg::RationalMatrix;
        use crate::scalar::Q;
        for gen in [a(8), b(8)] {
            for w in 2..=7u32 {
                // basis of homogeneous Lie elements of weight w via Dynkin images
                let words = all_words(w);
                let images: Vec<NCPoly> = words
                    .iter()
                    .map(|wd| NCPoly::from_word(8, wd.clone(), Q::one()).dynkin())
                    .collect();
                // matrix of ad(gen) on the span of these images
                let target_words = all_words(w + 1);
                let rows: Vec<Vec<Q>> = images
                    .iter()
                    .map(|p| {
                        let bp = gen.bracket(p);
                        target_words.iter().map(|tw| bp.coeff(tw)).collect()
                    })
                    .collect();
                let src_rank = RationalMatrix::from_rows(
                    images
                        .iter()
                        .map(|p| words.iter().map(|wd| p.coeff(wd)).collect())
                        .collect(),
                )
                .rank();
                let img_rank = RationalMatrix::from_rows(rows).rank();
                assert_eq!(src_rank, img_rank, "ad kernel nontrivial at weight {w}");
            }
        }
    }

    fn all_words(w: u32) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        for _ in 0..w {
            out = out
                .iter()
                .flat_map(|x| {
                    [
                        x.concat(&Word::letter(Letter::A)),
                        x.concat(&Word::letter(Letter::B)),
                    ]
                })
                .collect();
        }
        out
    }
}
