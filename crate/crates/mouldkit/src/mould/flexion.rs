//! Ecalle's flexion derivations.
//!
//! arit follows the three-block formula
//!   (arit(P).A)(w) = sum_{w=abc, c nonempty} A(a<c) P(b)
//!                  - sum_{w=abc, a nonempty} A(a>c) P(b)
//! with the flexions a> = (u_1,...,u_{i-1}, u_i+...+u_{i+j}) and
//! <c = (u_{i+1}+...+u_{i+j+1}, u_{i+j+2},...,u_r); arat(P) = -arit(P) + ad(P)
//! with ad(P).Q = lu(P,Q); and Darit(P) = dar o arat(Delta^{-1} P) o dar^{-1}.
//!
//! arat also has a single-sum form over all block decompositions once the
//! degenerate flexions are read as a<{} = a and {}>c = c:
//!   (arat(P).A)(w) = sum_{w=abc} (A(a>c) - A(a<c)) P(b),
//! which this module implements independently of the defining formula; the
//! two routes are asserted equal in the tests. (Note the orientation: with
//! the degenerate-case convention above, the all-decompositions sum with
//! the opposite sign equals -arat; see CONVENTIONS.md.)

use crate::scalar::MultiPoly;
use crate::{Error, Result};

use super::core::{dar, dar_inv, delta_inv, lu, FromMould, Mould, MouldValue, PolyMould, RatMould};

/// Images for A(a<c): blocks a = vars[0..i], b = vars[i..i+j],
/// c = vars[i+j..r] with c nonempty; the first entry of c absorbs the sum
/// of b.
fn flex_left_images(r: usize, i: usize, j: usize) -> Vec<MultiPoly> {
    let mut images = Vec::with_capacity(r - j);
    for p in 0..i {
        images.push(MultiPoly::var(r, p));
    }
    let mut sum = MultiPoly::zero(r);
    for t in i..=i + j {
        sum = sum.add(&MultiPoly::var(r, t));
    }
    images.push(sum);
    for p in i + j + 1..r {
        images.push(MultiPoly::var(r, p));
    }
    images
}

/// Images for A(a>c): blocks as above with a nonempty; the last entry of a
/// absorbs the sum of b.
fn flex_right_images(r: usize, i: usize, j: usize) -> Vec<MultiPoly> {
    let mut images = Vec::with_capacity(r - j);
    for p in 0..i - 1 {
        images.push(MultiPoly::var(r, p));
    }
    let mut sum = MultiPoly::zero(r);
    for t in i - 1..i + j {
        sum = sum.add(&MultiPoly::var(r, t));
    }
    images.push(sum);
    for p in i + j..r {
        images.push(MultiPoly::var(r, p));
    }
    images
}

/// P(b) embedded into r variables: b = vars[i..i+j].
fn middle<V: MouldValue>(p: &Mould<V>, r: usize, i: usize, j: usize) -> Result<V> {
    let images: Vec<MultiPoly> = (i..i + j).map(|t| MultiPoly::var(r, t)).collect();
    p.value(j).substitute(&images, r)
}

/// The flexion derivation arit(P) applied to A.
pub fn arit<V: MouldValue>(p: &Mould<V>, a: &Mould<V>) -> Result<Mould<V>> {
    let cap = p.cap().min(a.cap());
    let mut out = Mould::zero(cap);
    for r in 1..=cap {
        let mut acc = V::zero(r);
        // first sum: c nonempty
        for i in 0..r {
            for j in 0..=(r - 1 - i) {
                let pb = middle(p, r, i, j)?;
                if pb.is_zero() {
                    continue;
                }
                let av = a.value(r - j).substitute(&flex_left_images(r, i, j), r)?;
                acc = acc.add(&av.mul(&pb));
            }
        }
        // second sum: a nonempty, subtracted
        for i in 1..=r {
            for j in 0..=(r - i) {
                let pb = middle(p, r, i, j)?;
                if pb.is_zero() {
                    continue;
                }
                let av = a.value(r - j).substitute(&flex_right_images(r, i, j), r)?;
                acc = acc.add(&av.mul(&pb).neg());
            }
        }
        out.set_value(r, acc);
    }
    Ok(out)
}

/// The sign convention for an arat-style combination e1*arit + e2*ad.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AratConvention {
    pub arit_sign: i8,
    pub ad_sign: i8,
}

impl AratConvention {
    /// The defining convention: arat(P) = -arit(P) + ad(P).
    pub const STANDARD: AratConvention = AratConvention {
        arit_sign: -1,
        ad_sign: 1,
    };

    pub fn all() -> [AratConvention; 4] {
        [
            AratConvention { arit_sign: -1, ad_sign: 1 },
            AratConvention { arit_sign: 1, ad_sign: -1 },
            AratConvention { arit_sign: 1, ad_sign: 1 },
            AratConvention { arit_sign: -1, ad_sign: -1 },
        ]
    }
}

impl std::fmt::Display for AratConvention {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = |x: i8| if x >= 0 { "+" } else { "-" };
        write!(f, "arat = {}arit {} ad", s(self.arit_sign), s(self.ad_sign))
    }
}

/// arat under an explicit sign convention.
pub fn arat_with<V: MouldValue>(
    p: &Mould<V>,
    a: &Mould<V>,
    conv: AratConvention,
) -> Result<Mould<V>> {
    let ar = arit(p, a)?;
    let ad = lu(p, a);
    let ar = if conv.arit_sign >= 0 { ar } else { ar.neg() };
    let ad = if conv.ad_sign >= 0 { ad } else { ad.neg() };
    Ok(ar.add(&ad))
}

/// arat(P).A = -arit(P).A + lu(P, A).
pub fn arat<V: MouldValue>(p: &Mould<V>, a: &Mould<V>) -> Result<Mould<V>> {
    arat_with(p, a, AratConvention::STANDARD)
}

/// The independent single-sum route: over all decompositions w = abc,
/// (A(a>c) - A(a<c)) P(b), with degenerate flexions a<{} = a, {}>c = c.
pub fn arat_flexion<V: MouldValue>(p: &Mould<V>, a: &Mould<V>) -> Result<Mould<V>> {
    let cap = p.cap().min(a.cap());
    let mut out = Mould::zero(cap);
    for r in 1..=cap {
        let mut acc = V::zero(r);
        for i in 0..=r {
            for j in 0..=(r - i) {
                let pb = middle(p, r, i, j)?;
                if pb.is_zero() {
                    continue;
                }
                // a>c term (degenerate at i = 0: plain c)
                let right_images = if i >= 1 {
                    flex_right_images(r, i, j)
                } else {
                    (j..r).map(|t| MultiPoly::var(r, t)).collect()
                };
                let av_right = a.value(r - j).substitute(&right_images, r)?;
                acc = acc.add(&av_right.mul(&pb));
                // a<c term (degenerate at c = {}: plain a), subtracted
                let left_images = if i + j < r {
                    flex_left_images(r, i, j)
                } else {
                    (0..i).map(|t| MultiPoly::var(r, t)).collect()
                };
                let av_left = a.value(r - j).substitute(&left_images, r)?;
                acc = acc.add(&av_left.mul(&pb).neg());
            }
        }
        out.set_value(r, acc);
    }
    Ok(out)
}

/// Darit(P) = dar o arat(Delta^{-1}(P)) o dar^{-1}, applied to A.
/// Rational intermediates are inherent; the result is rational in general.
pub fn darit_with<V: MouldValue>(
    p: &PolyMould,
    a: &Mould<V>,
    conv: AratConvention,
) -> Result<RatMould>
where
    RatMould: FromMould<V>,
{
    if !p.value(0).is_zero() {
        return Err(Error::Domain(
            "Darit requires a vanishing depth-0 value".to_string(),
        ));
    }
    let q = delta_inv::<MultiPoly>(p)?;
    let ar = dar_inv(a);
    let mixed = arat_with(&q, &ar, conv)?;
    Ok(dar(&mixed))
}

pub fn darit<V: MouldValue>(p: &PolyMould, a: &Mould<V>) -> Result<RatMould>
where
    RatMould: FromMould<V>,
{
    darit_with(p, a, AratConvention::STANDARD)
}

/// Darit with the result re-certified polynomial; errors with
/// `NonPolynomial` when a denominator survives.
pub fn darit_poly(p: &PolyMould, a: &PolyMould) -> Result<PolyMould> {
    darit(p, a)?.try_to_poly()
}
