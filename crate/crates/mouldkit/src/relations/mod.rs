//! Depth-2 solution spaces, bracket span tables and the reference-value
//! verifier built on exact rational linear algebra.

mod verify;

pub use verify::{display_bracket, display_fs_basis, lie_basis, mader_convention_scan, verify_paper_examples, MaderScan, VerifyItem, VerifyReport};

use num::Zero;

use crate::deriv::{epsilon, Derivation};
use crate::freelie::lazard::to_c_coordinates_strict;
use crate::freelie::ncpoly::NCPoly;
use crate::freelie::ber::t_elements;
use crate::linalg::RationalMatrix;
use crate::mould::{is_push_neutral, ma, PolyMould};
use crate::scalar::{MultiPoly, Q};
use crate::{Error, Result};

/// A solved dimension problem at one weight.
#[derive(Debug, Clone)]
pub struct DimensionReport {
    pub weight: u32,
    pub computed: usize,
    pub formula: usize,
    pub basis: Vec<MultiPoly>,
    pub matches: bool,
}

/// Coefficient vector of a homogeneous bivariate polynomial of degree d.
pub(crate) fn coeff_vector(p: &MultiPoly, d: u32) -> Vec<Q> {
    (0..=d).map(|i| p.coeff(&[i, d - i])).collect()
}

fn poly_from_vector(v: &[Q], d: u32) -> MultiPoly {
    let mut p = MultiPoly::zero(2);
    for (i, c) in v.iter().enumerate() {
        p.add_term(vec![i as u32, d - i as u32], c.clone());
    }
    p
}

/// Solve a list of linear conditions on homogeneous degree-d bivariate
/// polynomials; each condition maps the monomial u1^i u2^{d-i} to a
/// polynomial, and the kernel is the space where the summed image
/// vanishes.
fn kernel_of_conditions(
    d: u32,
    conditions: &[&dyn Fn(u32) -> MultiPoly],
) -> Vec<Vec<Q>> {
    // rows: one per (condition, monomial of the image); columns: i = 0..=d
    let mut rows: Vec<Vec<Q>> = Vec::new();
    for cond in conditions {
        // collect images per basis monomial
        let images: Vec<MultiPoly> = (0..=d).map(|i| cond(i)).collect();
        let mut monomials: std::collections::BTreeSet<Vec<u32>> = Default::default();
        for im in &images {
            for (e, _) in im.terms() {
                monomials.insert(e.clone());
            }
        }
        for mono in monomials {
            rows.push(images.iter().map(|im| im.coeff(&mono)).collect());
        }
    }
    if rows.is_empty() {
        rows.push(vec![Q::zero(); d as usize + 1]);
    }
    RationalMatrix::from_rows(rows).nullspace()
}

/// The depth-2 double-shuffle space at odd weight n: homogeneous
/// degree-(n-2) polynomials with p(u1,u2) + p(u2,u1) = 0 and
/// p(u1,u2) = p(u2,-u1-u2); dimension compared to floor((n-5)/6) + 1.
pub fn eds2_space(n: u32) -> Result<DimensionReport> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::Domain(format!(
            "eds2_space needs odd weight >= 5, got {n}"
        )));
    }
    let d = n - 2;
    let antisym = move |i: u32| -> MultiPoly {
        // p + p-flipped, applied to the basis monomial
        let m = MultiPoly::monomial(2, vec![i, d - i], Q::from_integer(1.into()));
        let flipped = MultiPoly::monomial(2, vec![d - i, i], Q::from_integer(1.into()));
        m.add(&flipped)
    };
    let push_inv = move |i: u32| -> MultiPoly {
        // p - push(p): push substitutes (u2, -u1-u2)
        let m = MultiPoly::monomial(2, vec![i, d - i], Q::from_integer(1.into()));
        let images = [
            MultiPoly::var(2, 1),
            MultiPoly::var(2, 0).add(&MultiPoly::var(2, 1)).neg(),
        ];
        m.sub(&m.substitute(&images).unwrap())
    };
    let kernel = kernel_of_conditions(d, &[&antisym, &push_inv]);
    let formula = ((n - 5) / 6) as usize + 1;
    let basis: Vec<MultiPoly> = kernel.iter().map(|v| poly_from_vector(v, d)).collect();
    Ok(DimensionReport {
        weight: n,
        computed: basis.len(),
        formula,
        matches: basis.len() == formula,
        basis,
    })
}

/// The depth-2 Fay-shuffle space at odd weight n: antisymmetric
/// homogeneous degree-(n-2) polynomials with
/// u0 p(u1,u2) + u1 p(u2,u0) + u2 p(u0,u1) = 0 at u0 = -u1-u2;
/// dimension compared to floor((n-2)/3) + 1.
pub fn fs2_space(n: u32) -> Result<DimensionReport> {
    if n < 5 || n % 2 == 0 {
        return Err(Error::Domain(format!(
            "fs2_space needs odd weight >= 5, got {n}"
        )));
    }
    let d = n - 2;
    let u1 = MultiPoly::var(2, 0);
    let u2 = MultiPoly::var(2, 1);
    let u0 = u1.add(&u2).neg();
    let antisym = move |i: u32| -> MultiPoly {
        let m = MultiPoly::monomial(2, vec![i, d - i], Q::from_integer(1.into()));
        let flipped = MultiPoly::monomial(2, vec![d - i, i], Q::from_integer(1.into()));
        m.add(&flipped)
    };
    let fay = {
        let u0 = u0.clone();
        let u1 = u1.clone();
        let u2 = u2.clone();
        move |i: u32| -> MultiPoly {
            let m = MultiPoly::monomial(2, vec![i, d - i], Q::from_integer(1.into()));
            let at = |x: &MultiPoly, y: &MultiPoly| m.substitute(&[x.clone(), y.clone()]).unwrap();
            u0.mul(&at(&u1, &u2))
                .add(&u1.mul(&at(&u2, &u0)))
                .add(&u2.mul(&at(&u0, &u1)))
        }
    };
    let kernel = kernel_of_conditions(d, &[&antisym, &fay]);
    let formula = ((n - 2) / 3) as usize + 1;
    let basis: Vec<MultiPoly> = kernel.iter().map(|v| poly_from_vector(v, d)).collect();
    Ok(DimensionReport {
        weight: n,
        computed: basis.len(),
        formula,
        matches: basis.len() == formula,
        basis,
    })
}

/// ma of the a-value of [eps_{2j}, eps_{2k}], concentrated in depth 2.
pub fn eps_bracket_mould(two_j: u32, two_k: u32) -> Result<PolyMould> {
    let n = two_j + two_k + 1;
    let cap = n;
    let ej = epsilon(two_j, cap)?;
    let ek = epsilon(two_k, cap)?;
    let br = ej.bracket_der(&ek)?;
    eps_bracket_mould_from(&br)
}

fn eps_bracket_mould_from(br: &Derivation) -> Result<PolyMould> {
    let c = to_c_coordinates_strict(br.v_a().as_poly())?;
    if c.max_depth() > 2 {
        return Err(Error::Domain(format!(
            "bracket a-value has depth {} > 2",
            c.max_depth()
        )));
    }
    Ok(ma(&c, 2))
}

/// One row of the depth-2 bracket span table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankRow {
    pub weight: u32,
    pub brackets: usize,
    pub rank: usize,
    pub relations: usize,
    pub brackets_formula: i64,
    pub rank_formula: usize,
    pub relations_formula: i64,
}

/// For each odd weight n <= n_max: the brackets [eps_{2j}, eps_{2k}](a)
/// with j < k, j,k != 1 of that weight, the exact rank of their depth-2
/// moulds, and the number of relations among them, next to the classical
/// counting formulas floor((n-3)/4), floor((n-5)/6)+1 and their
/// difference.
pub fn eps_bracket_rank_table(n_max: u32) -> Result<Vec<RankRow>> {
    let mut rows = Vec::new();
    let mut n = 5;
    while n <= n_max {
        let m = (n - 1) / 2;
        let mut vectors: Vec<Vec<Q>> = Vec::new();
        let mut count = 0usize;
        for j in 0..=m / 2 {
            let k = m - j;
            if j >= k || j == 1 || k == 1 {
                continue;
            }
            let mould = eps_bracket_mould(2 * j, 2 * k)?;
            vectors.push(coeff_vector(mould.value(2), n - 2));
            count += 1;
        }
        let rank = crate::linalg::row_rank(&vectors);
        rows.push(RankRow {
            weight: n,
            brackets: count,
            rank,
            relations: count - rank,
            brackets_formula: ((n as i64) - 3).div_euclid(4),
            rank_formula: ((n - 5) / 6) as usize + 1,
            relations_formula: ((n as i64) - 7).div_euclid(4) - ((n as i64) - 5).div_euclid(6),
        });
        n += 2;
    }
    Ok(rows)
}

/// Per-n and assembled push-neutrality results for the t01' family.
#[derive(Debug, Clone)]
pub struct PropT01Report {
    /// push-neutrality of ma([ad^n(b)(a), a]) for each n
    pub per_n: Vec<(u32, bool)>,
    /// push-neutrality of the assembled ma([t01', a]) truncation
    pub assembled: bool,
}

impl PropT01Report {
    /// Only even n enter the assembled element (the odd Bernoulli
    /// numbers vanish), and only even n are in fact push-neutral.
    pub fn even_n_all_neutral(&self) -> bool {
        self.per_n.iter().all(|&(n, ok)| n % 2 == 1 || ok)
    }

    pub fn all_n_neutral(&self) -> bool {
        self.per_n.iter().all(|&(_, ok)| ok)
    }
}

/// Push-neutrality of ma([ad^n(b)(a), a]) for 2 <= n <= n_max and of the
/// assembled ma([t01', a]) truncation through weight n_max + 2.
pub fn prop_t01_report(n_max: u32) -> Result<PropT01Report> {
    if n_max < 2 {
        return Err(Error::Domain("n_max must be >= 2".to_string()));
    }
    let cap = n_max + 2;
    let a = NCPoly::gen_a(cap);
    let b = NCPoly::gen_b(cap);
    let mut per_n = Vec::new();
    for n in 2..=n_max {
        let f = NCPoly::ad_pow(&b, n, &a).bracket(&a);
        let c = to_c_coordinates_strict(&f)?;
        // depth is determined by the b-count of the underlying words
        if c.max_depth() != n {
            return Err(Error::Domain(format!(
                "f_{n} has depth {} instead of {n}",
                c.max_depth()
            )));
        }
        let m = ma(&c, n as usize);
        per_n.push((n, is_push_neutral(&m)));
    }
    // the assembled element
    let t = t_elements(cap)?;
    let bracket = t.t01_prime.as_poly().bracket(&a);
    let c = to_c_coordinates_strict(&bracket)?;
    let m = ma(&c, n_max as usize);
    Ok(PropT01Report {
        per_n,
        assembled: is_push_neutral(&m),
    })
}

/// True iff every f_n is push-neutral and so is the assembled element.
/// (In fact only even n pass; see `PropT01Report`.)
pub fn prop_t01_check(n_max: u32) -> Result<bool> {
    let r = prop_t01_report(n_max)?;
    Ok(r.all_n_neutral() && r.assembled)
}

/// The mould of ad^n(b)(a): linear in the u's with binomial coefficients.
pub fn ad_power_mould(n: u32) -> Result<PolyMould> {
    let cap = n + 1;
    let a = NCPoly::gen_a(cap);
    let b = NCPoly::gen_b(cap);
    let c = to_c_coordinates_strict(&NCPoly::ad_pow(&b, n, &a))?;
    Ok(ma(&c, n as usize))
}
