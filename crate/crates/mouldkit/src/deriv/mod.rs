//! Derivations of the free Lie algebra on {a, b} annihilating [a, b]:
//! the family eps_{2k}, brackets, evaluation at a, reconstruction of a
//! derivation from its a-value, exponentials and the transported
//! Campbell-Hausdorff bracket.
//!
//! Convention: eps_{2k}(a) = ad(a)^{2k}(b) for k >= 1 and eps_0: a -> b,
//! b -> 0, normalized so that D(b) has no linear term in a. With this
//! orientation every eps raises the b-degree of its argument by exactly
//! one, so v_a of a bracket of two of them is concentrated in depth 2 --
//! the grading all the depth-2 computations downstream rely on.

mod automorphism;
mod solve;

pub use automorphism::Automorphism;


use serde::{Deserialize, Serialize};

use crate::freelie::ncpoly::{LieElement, NCPoly, NCPolyJson};
use crate::freelie::word::{Letter, Word};
use crate::scalar::{factorial, q, Q};
use crate::{Error, Result};
use solve::solve_ad_a;

/// An element of Der0(f2), stored by its values on both generators with
/// the annihilation condition [D(a), b] + [a, D(b)] = 0 checked at
/// construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    val_a: NCPoly,
    val_b: NCPoly,
    cap: u32,
}

impl Derivation {
    pub fn new(val_a: NCPoly, val_b: NCPoly, cap: u32) -> Result<Self> {
        let val_a = val_a.truncate(cap);
        let val_b = val_b.truncate(cap);
        let a = NCPoly::gen_a(cap + 1);
        let b = NCPoly::gen_b(cap + 1);
        let defect = val_a
            .truncate(cap + 1)
            .bracket(&b)
            .add(&a.bracket(&val_b.truncate(cap + 1)));
        if !defect.truncate(cap).is_zero() {
            return Err(Error::Domain("values do not annihilate [a, b]".to_string()));
        }
        Ok(Derivation { val_a, val_b, cap })
    }

    pub fn zero(cap: u32) -> Self {
        Derivation {
            val_a: NCPoly::zero(cap),
            val_b: NCPoly::zero(cap),
            cap,
        }
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn val_a(&self) -> &NCPoly {
        &self.val_a
    }

    pub fn val_b(&self) -> &NCPoly {
        &self.val_b
    }

    pub fn is_zero(&self) -> bool {
        self.val_a.is_zero() && self.val_b.is_zero()
    }

    /// Evaluation at a.
    pub fn v_a(&self) -> LieElement {
        LieElement::new_unchecked(self.val_a.clone())
    }

    /// Evaluation at b.
    pub fn v_b(&self) -> LieElement {
        LieElement::new_unchecked(self.val_b.clone())
    }

    /// Leibniz extension to the enveloping algebra, truncated at the cap.
    pub fn apply(&self, p: &NCPoly) -> NCPoly {
        let cap = self.cap.min(p.cap());
        let mut out = NCPoly::zero(cap);
        for (w, c) in p.terms() {
            let letters = w.letters();
            for i in 0..letters.len() {
                let img = match letters[i] {
                    Letter::A => &self.val_a,
                    Letter::B => &self.val_b,
                };
                let prefix = Word::from_letters(letters[..i].to_vec());
                let suffix = Word::from_letters(letters[i + 1..].to_vec());
                let fixed = prefix.weight() + suffix.weight();
                for (iw, ic) in img.terms() {
                    if fixed + iw.weight() > cap {
                        continue;
                    }
                    out.add_term(prefix.concat(iw).concat(&suffix), c * ic);
                }
            }
        }
        out
    }

    /// Commutator of derivations, again given by values on the generators.
    pub fn bracket_der(&self, other: &Self) -> Result<Derivation> {
        let cap = self.cap.min(other.cap);
        let val_a = self.apply(&other.val_a).sub(&other.apply(&self.val_a));
        let val_b = self.apply(&other.val_b).sub(&other.apply(&self.val_b));
        Derivation::new(val_a.truncate(cap), val_b.truncate(cap), cap)
    }

    pub fn add(&self, other: &Self) -> Result<Derivation> {
        let cap = self.cap.min(other.cap);
        Derivation::new(
            self.val_a.add(&other.val_a),
            self.val_b.add(&other.val_b),
            cap,
        )
    }

    pub fn scale(&self, c: &Q) -> Derivation {
        Derivation {
            val_a: self.val_a.scale(c),
            val_b: self.val_b.scale(c),
            cap: self.cap,
        }
    }

    /// The weight shift, when homogeneous: every value raises the weight of
    /// its generator by the same amount.
    pub fn weight_shift(&self) -> Option<i64> {
        let mut shift: Option<i64> = None;
        for val in [&self.val_a, &self.val_b] {
            for (w, _) in val.terms() {
                let s = w.weight() as i64 - 1;
                match shift {
                    None => shift = Some(s),
                    Some(prev) if prev != s => return None,
                    _ => {}
                }
            }
        }
        shift.or(Some(0))
    }

    /// n-fold application to p.
    pub fn apply_pow(&self, n: u32, p: &NCPoly) -> NCPoly {
        let mut acc = p.truncate(self.cap.min(p.cap()));
        for _ in 0..n {
            acc = self.apply(&acc);
        }
        acc
    }

    pub fn to_json(&self) -> DerivationJson {
        DerivationJson {
            val_a: self.val_a.to_json(),
            val_b: self.val_b.to_json(),
            cap: self.cap,
        }
    }

    pub fn from_json(j: &DerivationJson) -> Result<Derivation> {
        Derivation::new(
            NCPoly::from_json(&j.val_a)?,
            NCPoly::from_json(&j.val_b)?,
            j.cap,
        )
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DerivationJson {
    pub val_a: NCPolyJson,
    pub val_b: NCPolyJson,
    pub cap: u32,
}

/// eps_{2k}: a maps to ad(a)^{2k}(b); the value on b is the unique solution
/// of the annihilation condition (for k = 0: a -> b, b -> 0).
pub fn epsilon(two_k: u32, cap: u32) -> Result<Derivation> {
    if two_k % 2 != 0 {
        return Err(Error::Domain(format!(
            "epsilon index must be even, got {two_k}"
        )));
    }
    if two_k + 1 > cap {
        return Err(Error::InsufficientCap {
            needed: two_k + 1,
            have: cap,
        });
    }
    if two_k == 0 {
        return Derivation::new(NCPoly::gen_b(cap), NCPoly::zero(cap), cap);
    }
    // the defining equation lives at weight 2k+2, so solve there even when
    // the requested cap is tight
    let solve_cap = two_k + 2;
    let a = NCPoly::gen_a(solve_cap);
    let b = NCPoly::gen_b(solve_cap);
    let val_a = NCPoly::ad_pow(&a, two_k, &b);
    // [a, val_b] = -[val_a, b]
    let rhs = val_a.bracket(&b).neg();
    let val_b = solve_ad_a(&rhs, solve_cap)?;
    Derivation::new(val_a.truncate(cap), val_b.truncate(cap), cap)
}

/// The Eisenstein-normalized rescaling: 2/(2k-2)! eps_{2k} for k > 0 and
/// -eps_0 for k = 0.
pub fn epsilon_tilde(two_k: u32, cap: u32) -> Result<Derivation> {
    let e = epsilon(two_k, cap)?;
    if two_k == 0 {
        Ok(e.scale(&q(-1)))
    } else {
        Ok(e.scale(&(q(2) / factorial(two_k - 2))))
    }
}

/// Reconstruct the derivation with D(a) = f and D([a,b]) = 0 by solving
/// [a, D(b)] = [b, f] per (weight, depth) block. Requires every
/// homogeneous component of f to have weight >= 2 (ad(a) is injective
/// there); errors with `NotInImage` when [b, f] is not in the image,
/// which certifies that f is not the a-value of any such derivation.
pub fn derivation_from_a(f: &LieElement, cap: u32) -> Result<Derivation> {
    let fp = f.as_poly().truncate(cap);
    if let Some(w) = fp.min_weight() {
        if w < 2 {
            return Err(Error::Domain(format!(
                "derivation_from_a needs weight >= 2, found weight-{w} term"
            )));
        }
    }
    let b = NCPoly::gen_b(cap + 1);
    let rhs = b.bracket(&fp.truncate(cap + 1));
    let val_b = solve_ad_a(&rhs.truncate(cap), cap)?;
    Derivation::new(fp, val_b, cap)
}

/// The transported bracket <f, g> = [D_f, D_g](a).
pub fn transported_bracket(f: &LieElement, g: &LieElement, cap: u32) -> Result<LieElement> {
    let df = derivation_from_a(f, cap)?;
    let dg = derivation_from_a(g, cap)?;
    Ok(df.bracket_der(&dg)?.v_a())
}

/// exp_a(f) = 1 + sum_{n>=1} D_f^n(a)/n!.
pub fn exp_a(f: &LieElement, cap: u32) -> Result<NCPoly> {
    let d = derivation_from_a(f, cap)?;
    let a = NCPoly::gen_a(cap);
    let mut out = NCPoly::one(cap);
    let mut term = a;
    let mut n = 1u32;
    loop {
        term = d.apply(&term);
        if term.is_zero() {
            break;
        }
        out = out.add(&term.scale(&factorial(n).recip()));
        n += 1;
        if n > cap + 1 {
            break;
        }
    }
    Ok(out)
}

/// exp(D) . p = sum D^n(p)/n!, truncated at `cap`. Rejects derivations
/// that do not raise weight, since the sum would not truncate.
pub fn exp_action(d: &Derivation, p: &NCPoly, cap: u32) -> Result<NCPoly> {
    match d.weight_shift() {
        Some(s) if s >= 1 => {}
        _ if d.is_zero() => {}
        _ => return Err(Error::NotWeightRaising),
    }
    let mut out = p.truncate(cap.min(d.cap()));
    let mut term = out.clone();
    let mut n = 1u32;
    loop {
        term = d.apply(&term);
        if term.is_zero() {
            break;
        }
        out = out.add(&term.scale(&factorial(n).recip()));
        n += 1;
        if n > cap + 1 {
            break;
        }
    }
    Ok(out)
}

/// Campbell-Hausdorff in the transported bracket: the h with
/// exp_a(f) * exp_a(g) = exp_a(h), computed as the a-value of
/// log(exp(D_f) o exp(D_g)). No standalone BCH coefficient table is used.
pub fn ch_bracket(f: &LieElement, g: &LieElement, cap: u32) -> Result<LieElement> {
    let df = derivation_from_a(f, cap)?;
    let dg = derivation_from_a(g, cap)?;
    let comp = Automorphism::exp(&df)?.compose(&Automorphism::exp(&dg)?);
    let log = comp.log()?;
    Ok(log.v_a())
}
