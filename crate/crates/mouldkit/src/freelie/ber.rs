//! The Ber operator Ber_x(y) = (ad(x)/(e^{ad(x)} - 1))(y) and the
//! tangential elements t01 = Ber_b(-a), t02 = Ber_{-b}(a), t12 = [a,b].
//!
//! Ber uses the Bernoulli convention B_1 = -1/2, so that
//! t01 + t02 + t12 = 0 holds at every weight.

use num::Zero;

use super::ncpoly::{LieElement, NCPoly};
use crate::scalar::{bernoulli_upto, factorial};
use crate::{Error, Result};

/// sum_{m>=0} (B_m / m!) ad(x)^m (y), truncated at weight `cap`.
pub fn ber_apply(x: &NCPoly, y: &NCPoly, cap: u32) -> NCPoly {
    let bs = bernoulli_upto(cap + 1);
    graded_ad_series(x, y, cap, |m| bs[m as usize].clone() / factorial(m))
}

/// The inverse operator ((e^{ad(x)} - 1)/ad(x))(y) = sum ad(x)^m(y)/(m+1)!.
pub fn ber_inv_apply(x: &NCPoly, y: &NCPoly, cap: u32) -> NCPoly {
    graded_ad_series(x, y, cap, |m| factorial(m + 1).recip())
}

fn graded_ad_series(
    x: &NCPoly,
    y: &NCPoly,
    cap: u32,
    coeff: impl Fn(u32) -> crate::scalar::Q,
) -> NCPoly {
    let x = x.truncate(cap);
    let mut acc = NCPoly::zero(cap);
    let mut ad = y.truncate(cap);
    let mut m = 0u32;
    while !ad.is_zero() {
        let c = coeff(m);
        if !c.is_zero() {
            acc = acc.add(&ad.scale(&c));
        }
        ad = x.bracket(&ad);
        m += 1;
        if m > cap + 1 {
            break;
        }
    }
    acc
}

/// The tangential elements truncated at weight `cap`.
pub struct TElements {
    pub t01: LieElement,
    pub t02: LieElement,
    pub t12: LieElement,
    /// t01 + t12/2
    pub t01_prime: LieElement,
}

pub fn t_elements(cap: u32) -> Result<TElements> {
    if cap < 2 {
        return Err(Error::InsufficientCap {
            needed: 2,
            have: cap,
        });
    }
    let a = NCPoly::gen_a(cap);
    let b = NCPoly::gen_b(cap);
    let t01 = ber_apply(&b, &a.neg(), cap);
    let t02 = ber_apply(&b.neg(), &a, cap);
    let t12 = a.bracket(&b);
    let t01_prime = t01.add(&t12.scale(&crate::scalar::qr(1, 2)));
    Ok(TElements {
        t01: LieElement::new(t01)?,
        t02: LieElement::new(t02)?,
        t12: LieElement::new(t12)?,
        t01_prime: LieElement::new(t01_prime)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, qr};

    #[test]
    fn ber_low_weights() {
        let cap = 3;
        let a = NCPoly::gen_a(cap);
        let b = NCPoly::gen_b(cap);
        let ber = ber_apply(&b, &a, cap);
        // weight 1: a; weight 2: B_1 [b,a] = -1/2 [b,a]; weight 3: B_2/2! [b,[b,a]] = 1/12 [b,[b,a]]
        assert_eq!(ber.weight_part(1), a.clone());
        assert_eq!(ber.weight_part(2), b.bracket(&a).scale(&qr(-1, 2)));
        assert_eq!(
            ber.weight_part(3),
            b.bracket(&b.bracket(&a)).scale(&qr(1, 12))
        );
        // linearity: Ber_x(0) = 0
        assert!(ber_apply(&b, &NCPoly::zero(cap), cap).is_zero());
    }

    #[test]
    fn ber_inverse_recovers_generator() {
        // a = ((e^{ad b} - 1)/ad b)(-t01)
        let cap = 9;
        let t = t_elements(cap).unwrap();
        let b = NCPoly::gen_b(cap);
        let got = ber_inv_apply(&b, &t.t01.as_poly().neg(), cap);
        assert_eq!(got, NCPoly::gen_a(cap));
    }

    #[test]
    fn t_identity_through_weight_10() {
        let t = t_elements(10).unwrap();
        let sum = t.t01.as_poly().add(t.t02.as_poly()).add(t.t12.as_poly());
        assert!(sum.is_zero());
        // weight-1 part of t01 is -a
        assert_eq!(
            t.t01.weight_part(1),
            NCPoly::gen_a(10).neg()
        );
    }

    #[test]
    fn t01_prime_has_even_ad_powers_only() {
        // t01' = -a - sum_{m>=2} (B_m/m!) ad(b)^m(a): no weight-2 term
        let t = t_elements(8).unwrap();
        assert!(t.t01_prime.weight_part(2).is_zero());
        // and matches the closed form
        let a = NCPoly::gen_a(8);
        let b = NCPoly::gen_b(8);
        let mut want = a.neg();
        for m in 2..8u32 {
            let c = crate::scalar::bernoulli(m) / crate::scalar::factorial(m);
            if !c.is_zero() {
                want = want.sub(&NCPoly::ad_pow(&b, m, &a).scale(&c));
            }
        }
        assert_eq!(t.t01_prime.as_poly(), &want);
        let _ = q(0);
    }
}
