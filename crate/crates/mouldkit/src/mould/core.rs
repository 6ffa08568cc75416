//! The mould container and the basic operator suite.

use num::Zero;
use serde::{Deserialize, Serialize};

use crate::freelie::cpoly::CPoly;
use crate::scalar::fraction::FractionJson;
use crate::scalar::multipoly::MultiPolyJson;
use crate::scalar::{FormalFraction, MultiPoly, Q};
use crate::{Error, Result};

/// Values a mould can take at each depth. Implemented by `MultiPoly`
/// (polynomial moulds) and `FormalFraction` (rational moulds).
pub trait MouldValue: Clone + PartialEq + std::fmt::Debug {
    fn zero(nvars: usize) -> Self;
    fn is_zero(&self) -> bool;
    fn nvars(&self) -> usize;
    fn add(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn scale(&self, c: &Q) -> Self;
    fn mul_poly(&self, p: &MultiPoly) -> Self;
    /// Substitute images (polynomials in `out_vars` variables) for the
    /// value's variables.
    fn substitute(&self, images: &[MultiPoly], out_vars: usize) -> Result<Self>;
    fn from_poly(p: MultiPoly) -> Self;
    /// Some(c) when the value equals the constant c.
    fn try_constant(&self) -> Option<Q>;
}

impl MouldValue for MultiPoly {
    fn zero(nvars: usize) -> Self {
        MultiPoly::zero(nvars)
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn nvars(&self) -> usize {
        MultiPoly::nvars(self)
    }
    fn add(&self, other: &Self) -> Self {
        MultiPoly::add(self, other)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        MultiPoly::mul(self, other)
    }
    fn scale(&self, c: &Q) -> Self {
        MultiPoly::scale(self, c)
    }
    fn mul_poly(&self, p: &MultiPoly) -> Self {
        MultiPoly::mul(self, p)
    }
    fn substitute(&self, images: &[MultiPoly], out_vars: usize) -> Result<Self> {
        if self.nvars() == 0 {
            return Ok(MultiPoly::constant(out_vars, self.constant_term()));
        }
        MultiPoly::substitute(self, images)
    }
    fn from_poly(p: MultiPoly) -> Self {
        p
    }
    fn try_constant(&self) -> Option<Q> {
        if self.is_constant() {
            Some(self.constant_term())
        } else {
            None
        }
    }
}

impl MouldValue for FormalFraction {
    fn zero(nvars: usize) -> Self {
        FormalFraction::zero(nvars)
    }
    fn is_zero(&self) -> bool {
        FormalFraction::is_zero(self)
    }
    fn nvars(&self) -> usize {
        FormalFraction::nvars(self)
    }
    fn add(&self, other: &Self) -> Self {
        FormalFraction::add(self, other)
    }
    fn neg(&self) -> Self {
        FormalFraction::neg(self)
    }
    fn mul(&self, other: &Self) -> Self {
        FormalFraction::mul(self, other)
    }
    fn scale(&self, c: &Q) -> Self {
        FormalFraction::scale(self, c)
    }
    fn mul_poly(&self, p: &MultiPoly) -> Self {
        FormalFraction::mul_poly(self, p)
    }
    fn substitute(&self, images: &[MultiPoly], out_vars: usize) -> Result<Self> {
        if self.nvars() == 0 {
            let c = self
                .try_to_constant()
                .ok_or(Error::NonPolynomial { depth: 0 })?;
            return Ok(FormalFraction::from_poly(MultiPoly::constant(out_vars, c)));
        }
        FormalFraction::substitute(self, images)
    }
    fn from_poly(p: MultiPoly) -> Self {
        FormalFraction::from_poly(p)
    }
    fn try_constant(&self) -> Option<Q> {
        self.try_to_constant()
    }
}

/// A mould truncated at depth cap R: one value in r variables for each
/// depth 0 <= r <= R.
#[derive(Debug, Clone, PartialEq)]
pub struct Mould<V: MouldValue> {
    values: Vec<V>,
}

pub type PolyMould = Mould<MultiPoly>;
pub type RatMould = Mould<FormalFraction>;

impl<V: MouldValue> Mould<V> {
    pub fn zero(cap: usize) -> Self {
        Mould {
            values: (0..=cap).map(|r| V::zero(r)).collect(),
        }
    }

    /// The mu-unit: 1 at depth 0, zero elsewhere.
    pub fn unit(cap: usize) -> Self {
        let mut m = Self::zero(cap);
        m.values[0] = V::from_poly(MultiPoly::one(0));
        m
    }

    pub fn from_values(values: Vec<V>) -> Self {
        for (r, v) in values.iter().enumerate() {
            assert_eq!(v.nvars(), r, "depth-{r} value must have {r} variables");
        }
        Mould { values }
    }

    pub fn cap(&self) -> usize {
        self.values.len() - 1
    }

    pub fn value(&self, r: usize) -> &V {
        &self.values[r]
    }

    pub fn set_value(&mut self, r: usize, v: V) {
        assert_eq!(v.nvars(), r);
        self.values[r] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    pub fn truncate(&self, cap: usize) -> Self {
        let mut m = Self::zero(cap);
        for r in 0..=cap.min(self.cap()) {
            m.values[r] = self.values[r].clone();
        }
        m
    }

    fn join_cap(&self, other: &Self) -> usize {
        self.cap().min(other.cap())
    }

    pub fn add(&self, other: &Self) -> Self {
        let cap = self.join_cap(other);
        let mut m = self.truncate(cap);
        for r in 0..=cap {
            m.values[r] = m.values[r].add(&other.values[r]);
        }
        m
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Mould {
            values: self.values.iter().map(|v| v.neg()).collect(),
        }
    }

    pub fn scale(&self, c: &Q) -> Self {
        Mould {
            values: self.values.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// Apply a variable substitution at each depth r >= 1, where
    /// `images(r)` yields the list of images for the r old variables as
    /// polynomials in r new variables.
    pub fn map_substitute(&self, images: impl Fn(usize) -> Vec<MultiPoly>) -> Result<Self> {
        let mut out = Self::zero(self.cap());
        out.values[0] = self.values[0].clone();
        for r in 1..=self.cap() {
            out.values[r] = self.values[r].substitute(&images(r), r)?;
        }
        Ok(out)
    }
}

impl PolyMould {
    pub fn to_rat(&self) -> RatMould {
        Mould {
            values: self
                .values
                .iter()
                .map(|p| FormalFraction::from_poly(p.clone()))
                .collect(),
        }
    }
}

impl RatMould {
    /// Certify every value polynomial.
    pub fn try_to_poly(&self) -> Result<PolyMould> {
        let mut values = Vec::with_capacity(self.values.len());
        for (r, v) in self.values.iter().enumerate() {
            values.push(v.try_to_poly().ok_or(Error::NonPolynomial { depth: r })?);
        }
        Ok(Mould { values })
    }
}

/// The linear encoding of c-alphabet polynomials as polynomial moulds:
/// c_{k1}...c_{kr} maps to (-1)^{k1+...+kr-r} u1^{k1-1}...ur^{kr-1}.
pub fn ma(p: &CPoly, cap: usize) -> PolyMould {
    let mut m = PolyMould::zero(cap);
    for (key, c) in p.terms() {
        let r = key.len();
        if r > cap {
            continue;
        }
        let exps: Vec<u32> = key.iter().map(|&k| k - 1).collect();
        let deg: u32 = exps.iter().sum();
        let sign = if deg % 2 == 0 { c.clone() } else { -c.clone() };
        let mono = MultiPoly::monomial(r, exps, sign);
        m.values[r] = m.values[r].add(&mono);
    }
    m
}

/// The inverse encoding; `weight_cap` bounds the c-weight of retained
/// monomials.
pub fn ma_inv(m: &PolyMould, weight_cap: u32) -> CPoly {
    let mut p = CPoly::zero(weight_cap);
    for v in m.values.iter() {
        for (exps, c) in v.terms() {
            let key: Vec<u32> = exps.iter().map(|&e| e + 1).collect();
            let deg: u32 = exps.iter().sum();
            let coeff = if deg % 2 == 0 { c.clone() } else { -c.clone() };
            p.add_term(key, coeff);
        }
    }
    p
}

/// Mould multiplication mu(P,Q)(u1..ur) = sum_i P(u1..ui) Q(u_{i+1}..ur).
pub fn mu<V: MouldValue>(p: &Mould<V>, q: &Mould<V>) -> Mould<V> {
    let cap = p.cap().min(q.cap());
    let mut out = Mould::zero(cap);
    for r in 0..=cap {
        let mut acc = V::zero(r);
        for i in 0..=r {
            let left = embed(p.value(i), r, 0);
            let right = embed(q.value(r - i), r, i);
            match (left, right) {
                (Ok(l), Ok(rv)) => acc = acc.add(&l.mul(&rv)),
                _ => continue,
            }
        }
        out.values[r] = acc;
    }
    out
}

/// Re-embed a depth-d value into r variables with its variables shifted by
/// `offset`.
fn embed<V: MouldValue>(v: &V, r: usize, offset: usize) -> Result<V> {
    let d = v.nvars();
    let images: Vec<MultiPoly> = (0..d).map(|j| MultiPoly::var(r, j + offset)).collect();
    v.substitute(&images, r)
}

/// lu(P,Q) = mu(P,Q) - mu(Q,P).
pub fn lu<V: MouldValue>(p: &Mould<V>, q: &Mould<V>) -> Mould<V> {
    mu(p, q).sub(&mu(q, p))
}

/// push(B)(u1,...,ur) = B(u2,...,ur,-u1-...-ur).
pub fn push<V: MouldValue>(m: &Mould<V>) -> Mould<V> {
    m.map_substitute(|r| {
        let mut images: Vec<MultiPoly> = (1..r).map(|j| MultiPoly::var(r, j)).collect();
        let mut last = MultiPoly::zero(r);
        for j in 0..r {
            last = last.sub(&MultiPoly::var(r, j));
        }
        images.push(last);
        images
    })
    .expect("push substitution cannot fail")
}

/// swap(A)(v1,...,vr) = A(vr, v_{r-1}-v_r, ..., v1-v2).
///
/// swap maps u-alphabet moulds to v-alphabet moulds; the return leg
/// `swap_inv` substitutes the inverse (prefix-sum) change of variables
/// v_i = u_1 + ... + u_{r-i+1}. The involution property of swap is
/// swap_inv(swap(A)) = A = swap(swap_inv(A)): iterating the difference
/// substitution alone is not the identity.
pub fn swap<V: MouldValue>(m: &Mould<V>) -> Mould<V> {
    m.map_substitute(|r| {
        let mut images = Vec::with_capacity(r);
        images.push(MultiPoly::var(r, r - 1));
        for j in 2..=r {
            // old position j receives v_{r-j+1} - v_{r-j+2}
            let hi = MultiPoly::var(r, r - j);
            let lo = MultiPoly::var(r, r - j + 1);
            images.push(hi.sub(&lo));
        }
        images
    })
    .expect("swap substitution cannot fail")
}

/// The inverse change of variables of `swap`: position i receives
/// u_1 + ... + u_{r-i+1}.
pub fn swap_inv<V: MouldValue>(m: &Mould<V>) -> Mould<V> {
    m.map_substitute(|r| {
        (0..r)
            .map(|i| {
                let mut s = MultiPoly::zero(r);
                for t in 0..(r - i) {
                    s = s.add(&MultiPoly::var(r, t));
                }
                s
            })
            .collect()
    })
    .expect("swap_inv substitution cannot fail")
}

fn var_product(r: usize) -> MultiPoly {
    let mut p = MultiPoly::one(r);
    for j in 0..r {
        p = p.mul(&MultiPoly::var(r, j));
    }
    p
}

fn var_sum(r: usize) -> MultiPoly {
    let mut p = MultiPoly::zero(r);
    for j in 0..r {
        p = p.add(&MultiPoly::var(r, j));
    }
    p
}

/// dar(P)(u1..ur) = u1...ur P(u1..ur).
pub fn dar<V: MouldValue>(m: &Mould<V>) -> Mould<V> {
    let mut out = m.clone();
    for r in 1..=m.cap() {
        out.values[r] = m.values[r].mul_poly(&var_product(r));
    }
    out
}

/// dar^{-1}: divide each depth by u1...ur; rational in general.
pub fn dar_inv<V: MouldValue>(m: &Mould<V>) -> RatMould
where
    RatMould: FromMould<V>,
{
    let mut out = RatMould::from_mould(m);
    for r in 1..=m.cap() {
        let mut f = out.values[r].clone();
        f.div_poly(&var_product(r)).expect("u1..ur is nonzero");
        out.values[r] = f;
    }
    out
}

/// Delta(P)(u1..ur) = u1...ur (u1+...+ur) P(u1..ur); the depth-0 value is
/// sent to zero (Delta acts on moulds with vanishing constant term).
pub fn delta<V: MouldValue>(m: &Mould<V>) -> Mould<V> {
    let mut out = m.clone();
    out.values[0] = V::zero(0);
    for r in 1..=m.cap() {
        out.values[r] = m.values[r].mul_poly(&var_product(r).mul(&var_sum(r)));
    }
    out
}

/// Delta^{-1}; requires a vanishing depth-0 value.
pub fn delta_inv<V: MouldValue>(m: &Mould<V>) -> Result<RatMould>
where
    RatMould: FromMould<V>,
{
    if !m.value(0).is_zero() {
        return Err(Error::Domain(
            "Delta^{-1} requires a vanishing depth-0 value".to_string(),
        ));
    }
    let mut out = RatMould::from_mould(m);
    for r in 1..=m.cap() {
        let mut f = out.values[r].clone();
        f.div_poly(&var_product(r).mul(&var_sum(r)))?;
        out.values[r] = f;
    }
    Ok(out)
}

/// Multiply the depth-r value by -(u1+...+ur); realizes ad(a) on the
/// mould side.
pub fn mul_by_minus_sum<V: MouldValue>(m: &Mould<V>) -> Mould<V> {
    let mut out = m.clone();
    out.values[0] = V::zero(0);
    for r in 1..=m.cap() {
        out.values[r] = m.values[r].mul_poly(&var_sum(r).neg());
    }
    out
}

/// Conversion from either value kind into rational moulds.
pub trait FromMould<V: MouldValue> {
    fn from_mould(m: &Mould<V>) -> Self;
}

impl FromMould<MultiPoly> for RatMould {
    fn from_mould(m: &PolyMould) -> Self {
        m.to_rat()
    }
}

impl FromMould<FormalFraction> for RatMould {
    fn from_mould(m: &RatMould) -> Self {
        m.clone()
    }
}

/// A constant-valued mould: one rational per depth.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstantMould {
    pub values: Vec<Q>,
}

impl ConstantMould {
    pub fn zero(cap: usize) -> Self {
        ConstantMould {
            values: vec![Q::zero(); cap + 1],
        }
    }

    pub fn to_poly_mould(&self) -> PolyMould {
        Mould {
            values: self
                .values
                .iter()
                .enumerate()
                .map(|(r, c)| MultiPoly::constant(r, c.clone()))
                .collect(),
        }
    }
}

/// JSON wire form for moulds of either kind.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MouldJson {
    Poly { cap: usize, values: Vec<MultiPolyJson> },
    Rational { cap: usize, values: Vec<FractionJson> },
}

impl PolyMould {
    pub fn to_json(&self) -> MouldJson {
        MouldJson::Poly {
            cap: self.cap(),
            values: self.values.iter().map(|v| v.to_json()).collect(),
        }
    }
}

impl RatMould {
    pub fn to_json(&self) -> MouldJson {
        MouldJson::Rational {
            cap: self.cap(),
            values: self.values.iter().map(|v| v.to_json()).collect(),
        }
    }
}

impl MouldJson {
    pub fn to_poly(&self) -> Result<PolyMould> {
        match self {
            MouldJson::Poly { cap, values } => {
                let mut m = PolyMould::zero(*cap);
                for (r, v) in values.iter().enumerate() {
                    if r > *cap {
                        break;
                    }
                    m.set_value(r, MultiPoly::from_json(v)?);
                }
                Ok(m)
            }
            MouldJson::Rational { .. } => self.to_rat()?.try_to_poly(),
        }
    }

    pub fn to_rat(&self) -> Result<RatMould> {
        match self {
            MouldJson::Poly { .. } => Ok(self.to_poly()?.to_rat()),
            MouldJson::Rational { cap, values } => {
                let mut m = RatMould::zero(*cap);
                for (r, v) in values.iter().enumerate() {
                    if r > *cap {
                        break;
                    }
                    m.set_value(r, FormalFraction::from_json(v)?);
                }
                Ok(m)
            }
        }
    }
}

