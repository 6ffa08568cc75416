//! Formal fractions of multivariate polynomials.
//!
//! No gcd normalization is performed; equality is decided by
//! cross-multiplication. Internally the denominator is kept as a multiset
//! of monic factors so that sums over structurally related denominators
//! (flexion images, push orbits) combine over the least common multiple
//! instead of the full product. The public contract is still a plain
//! num/den pair: `den()` expands the factor list.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::{Deserialize, Serialize};

use super::multipoly::{MultiPoly, MultiPolyJson};
use super::rational::Q;
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct FormalFraction {
    num: MultiPoly,
    /// monic factor -> multiplicity; the empty map denotes denominator 1
    den: BTreeMap<MultiPoly, u32>,
    nvars: usize,
}

impl FormalFraction {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        assert_eq!(num.nvars(), den.nvars(), "variable count mismatch");
        let mut f = FormalFraction::from_poly(num);
        f.div_poly(&den)?;
        Ok(f)
    }

    pub fn from_poly(num: MultiPoly) -> Self {
        let nvars = num.nvars();
        FormalFraction {
            num,
            den: BTreeMap::new(),
            nvars,
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_poly(MultiPoly::zero(nvars))
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    /// The denominator as an expanded polynomial.
    pub fn den(&self) -> MultiPoly {
        let mut d = MultiPoly::one(self.nvars);
        for (f, &e) in &self.den {
            for _ in 0..e {
                d = d.mul(f);
            }
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn prune(&mut self) {
        if self.num.is_zero() {
            self.den.clear();
        }
    }

    /// Multiply the denominator by `p` (splitting off its leading
    /// coefficient so stored factors stay monic).
    pub fn div_poly(&mut self, p: &MultiPoly) -> Result<()> {
        if p.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (lc, monic) = p.monic();
        self.num = self.num.scale(&lc.recip());
        if !monic.is_constant() {
            *self.den.entry(monic).or_insert(0) += 1;
        }
        self.prune();
        Ok(())
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        let mut out = self.clone();
        out.num = out.num.mul(p);
        out.prune();
        out
    }

    pub fn scale(&self, c: &Q) -> Self {
        let mut out = self.clone();
        out.num = out.num.scale(c);
        out.prune();
        out
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        out.num = out.num.neg();
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut den = self.den.clone();
        for (f, e) in &other.den {
            *den.entry(f.clone()).or_insert(0) += e;
        }
        let mut out = FormalFraction {
            num: self.num.mul(&other.num),
            den,
            nvars: self.nvars,
        };
        out.prune();
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
        // lcm of the factored denominators
        let mut lcm = self.den.clone();
        for (f, &e) in &other.den {
            let entry = lcm.entry(f.clone()).or_insert(0);
            *entry = (*entry).max(e);
        }
        let cofactor = |den: &BTreeMap<MultiPoly, u32>| -> MultiPoly {
            let mut c = MultiPoly::one(self.nvars);
            for (f, &e) in &lcm {
                let have = den.get(f).copied().unwrap_or(0);
                for _ in 0..(e - have) {
                    c = c.mul(f);
                }
            }
            c
        };
        let num = self
            .num
            .mul(&cofactor(&self.den))
            .add(&other.num.mul(&cofactor(&other.den)));
        let mut out = FormalFraction {
            num,
            den: lcm,
            nvars: self.nvars,
        };
        out.prune();
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    /// Equality as rational functions, by cross-multiplication.
    pub fn eq_fraction(&self, other: &Self) -> bool {
        self.sub(other).is_zero()
    }

    /// Substitute polynomial images into numerator and every denominator
    /// factor. Errors if a factor collapses to zero.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<Self> {
        let out_vars = images.first().map(|p| p.nvars()).unwrap_or(0);
        let num = self.num.substitute(images)?;
        let mut out = FormalFraction {
            num,
            den: BTreeMap::new(),
            nvars: out_vars,
        };
        for (f, &e) in &self.den {
            let fi = f.substitute(images)?;
            for _ in 0..e {
                out.div_poly(&fi)?;
            }
        }
        Ok(out)
    }

    /// Some(p) when the fraction is exactly a polynomial.
    pub fn try_to_poly(&self) -> Option<MultiPoly> {
        let mut p = self.num.clone();
        for (f, &e) in &self.den {
            for _ in 0..e {
                p = p.try_exact_div(f)?;
            }
        }
        Some(p)
    }

    /// Evaluate at a point; None when a denominator factor vanishes there.
    pub fn eval(&self, point: &[Q]) -> Result<Option<Q>> {
        let mut d = Q::one();
        for (f, &e) in &self.den {
            let v = f.eval(point)?;
            if v.is_zero() {
                return Ok(None);
            }
            for _ in 0..e {
                d *= &v;
            }
        }
        Ok(Some(self.num.eval(point)? / d))
    }

    /// Constant value of the fraction, when it is constant: c with
    /// num == c * den. None when the fraction is not constant.
    pub fn try_to_constant(&self) -> Option<Q> {
        if self.num.is_zero() {
            return Some(Q::zero());
        }
        let p = self.try_to_poly()?;
        if p.is_constant() {
            Some(p.constant_term())
        } else {
            None
        }
    }

    pub fn to_json(&self) -> FractionJson {
        FractionJson {
            num: self.num.to_json(),
            den: self.den().to_json(),
        }
    }

    pub fn from_json(j: &FractionJson) -> Result<Self> {
        FormalFraction::new(MultiPoly::from_json(&j.num)?, MultiPoly::from_json(&j.den)?)
    }
}

impl PartialEq for FormalFraction {
    fn eq(&self, other: &Self) -> bool {
        self.eq_fraction(other)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FractionJson {
    pub num: MultiPolyJson,
    pub den: MultiPolyJson,
}

impl std::fmt::Display for FormalFraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_empty() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den())
        }
    }
}

/// True iff the fractions sum to zero as a rational function. The sum is
/// combined over a common denominator and the resulting numerator is tested
/// for the zero polynomial.
pub fn fraction_sum_is_zero(fs: &[FormalFraction]) -> bool {
    if fs.is_empty() {
        return true;
    }
    let mut acc = FormalFraction::zero(fs[0].nvars());
    for f in fs {
        acc = acc.add(f);
    }
    acc.is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rational::{q, qr};
    use rand::{Rng, SeedableRng};

    fn ff(num: &str, den: &str, nvars: usize) -> FormalFraction {
        FormalFraction::new(
            MultiPoly::parse(num, nvars).unwrap(),
            MultiPoly::parse(den, nvars).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn sum_zero_examples() {
        // 1/u1 - 1/u1 = 0
        assert!(fraction_sum_is_zero(&[
            ff("1", "u1", 2),
            ff("-1", "u1", 2)
        ]));
        // 1/u1 + 1/u2 != 0
        assert!(!fraction_sum_is_zero(&[
            ff("1", "u1", 2),
            ff("1", "u2", 2)
        ]));
        // u2/(u1*u2) - 1/u1 = 0
        assert!(fraction_sum_is_zero(&[
            ff("u2", "u1*u2", 2),
            ff("-1", "u1", 2)
        ]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(FormalFraction::new(MultiPoly::one(1), MultiPoly::zero(1)).is_err());
    }

    #[test]
    fn cross_multiplication_equality() {
        // 2u1/(2u2) == u1/u2 without gcd machinery
        let a = ff("2*u1", "2*u2", 2);
        let b = ff("u1", "u2", 2);
        assert!(a.eq_fraction(&b));
        assert!(!a.eq_fraction(&ff("u1", "u1", 2)));
    }

    #[test]
    fn to_poly_and_constant() {
        let a = ff("u1^2-u2^2", "u1+u2", 2);
        assert_eq!(a.try_to_poly().unwrap(), MultiPoly::parse("u1-u2", 2).unwrap());
        let c = ff("3*u1*u2", "6*u1*u2", 2);
        assert_eq!(c.try_to_constant().unwrap(), qr(1, 2));
        assert!(ff("u1", "u2", 2).try_to_poly().is_none());
    }

    // fraction_sum_is_zero agrees with exact evaluation at random points
    // avoiding the denominators' zeros.
    #[test]
    fn agrees_with_random_evaluation() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        let polys = ["u1", "u2", "u1+u2", "u1-u2", "u1*u2", "u1^2"];
        for trial in 0..60 {
            let mut fs = Vec::new();
            for _ in 0..3 {
                let num = MultiPoly::parse(polys[rng.gen_range(0..polys.len())], 2)
                    .unwrap()
                    .scale(&q(rng.gen_range(-3..4)));
                let den = MultiPoly::parse(polys[rng.gen_range(0..polys.len())], 2).unwrap();
                fs.push(FormalFraction::new(num, den).unwrap());
            }
            // half the trials are forced to sum to zero
            if trial % 2 == 0 {
                let total = fs.iter().fold(FormalFraction::zero(2), |a, b| a.add(b));
                fs.push(total.neg());
            }
            let claimed = fraction_sum_is_zero(&fs);
            let mut all_zero = true;
            let mut checked = 0;
            while checked < 12 {
                let pt = [qr(rng.gen_range(1..50), rng.gen_range(1..7)), qr(rng.gen_range(1..50), rng.gen_range(1..7))];
                let vals: Option<Vec<Q>> = fs
                    .iter()
                    .map(|f| f.eval(&pt).unwrap())
                    .collect();
                match vals {
                    None => continue, // hit a pole, re-draw
                    Some(vs) => {
                        checked += 1;
                        let s: Q = vs.into_iter().sum();
                        if !s.is_zero() {
                            all_zero = false;
                            break;
                        }
                    }
                }
            }
            assert_eq!(claimed, all_zero, "disagreement on trial {trial}");
        }
    }
}
