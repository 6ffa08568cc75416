//! Automorphisms of the truncated enveloping algebra given by their images
//! on the two generators, with exp/log against weight-raising derivations.

use super::Derivation;
use crate::freelie::ncpoly::NCPoly;
use crate::freelie::word::Letter;
use crate::scalar::{q, Q};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Automorphism {
    im_a: NCPoly,
    im_b: NCPoly,
    cap: u32,
}

impl Automorphism {
    pub fn identity(cap: u32) -> Self {
        Automorphism {
            im_a: NCPoly::gen_a(cap),
            im_b: NCPoly::gen_b(cap),
            cap,
        }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    /// Substitute the generator images into every word of p.
    pub fn apply(&self, p: &NCPoly) -> NCPoly {
        let cap = self.cap.min(p.cap());
        let mut out = NCPoly::zero(cap);
        for (w, c) in p.terms() {
            let mut term = NCPoly::one(cap);
            for &l in w.letters() {
                let img = match l {
                    Letter::A => &self.im_a,
                    Letter::B => &self.im_b,
                };
                term = term.mul(img);
                if term.is_zero() {
                    break;
                }
            }
            out = out.add(&term.scale(c));
        }
        out
    }

    /// self after other: (self.compose(other))(p) = self(other(p)).
    pub fn compose(&self, other: &Self) -> Self {
        Automorphism {
            im_a: self.apply(&other.im_a),
            im_b: self.apply(&other.im_b),
            cap: self.cap.min(other.cap),
        }
    }

    /// exp(D) as an automorphism, for weight-raising D.
    pub fn exp(d: &Derivation) -> Result<Self> {
        let cap = d.cap();
        Ok(Automorphism {
            im_a: super::exp_action(d, &NCPoly::gen_a(cap), cap)?,
            im_b: super::exp_action(d, &NCPoly::gen_b(cap), cap)?,
            cap,
        })
    }

    /// log of an automorphism that is the identity to leading order:
    /// log(A)(x) = sum_{m>=1} (-1)^{m+1}/m (A - id)^m (x) on the
    /// generators. The result is a derivation; its annihilation condition
    /// is re-checked at construction.
    pub fn log(&self) -> Result<Derivation> {
        let delta = |p: &NCPoly| self.apply(p).sub(p);
        // (A - id) must raise weight or the series does not truncate
        for (gen, img) in [
            (NCPoly::gen_a(self.cap), &self.im_a),
            (NCPoly::gen_b(self.cap), &self.im_b),
        ] {
            let d = img.sub(&gen);
            if let Some(w) = d.min_weight() {
                if w <= 1 {
                    return Err(Error::NotWeightRaising);
                }
            }
        }
        let mut vals = Vec::new();
        for gen in [NCPoly::gen_a(self.cap), NCPoly::gen_b(self.cap)] {
            let mut acc = NCPoly::zero(self.cap);
            let mut power = gen.clone();
            let mut m = 1u32;
            loop {
                power = delta(&power);
                if power.is_zero() {
                    break;
                }
                let coeff: Q = if m % 2 == 1 { q(1) } else { q(-1) } / q(m as i64);
                acc = acc.add(&power.scale(&coeff));
                m += 1;
                if m > self.cap + 1 {
                    break;
                }
            }
            vals.push(acc);
        }
        let im_b = vals.pop().unwrap();
        let im_a = vals.pop().unwrap();
        Derivation::new(im_a, im_b, self.cap)
    }
}

