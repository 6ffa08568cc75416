//! The reference-value regression suite: every explicit polynomial,
//! dimension formula and identity from the source material, checked
//! exactly, with the single display sign resolved and reported.

use serde::Serialize;

use crate::deriv::{epsilon, epsilon_tilde, Derivation};
use crate::eisenstein::{
    g_coefficient_identity_check, indices_up_to_weight, rank_check, IterEis,
};
use crate::freelie::ber::t_elements;
use crate::freelie::cpoly::CPoly;
use crate::freelie::lazard::to_c_coordinates_strict;
use crate::linalg::same_span;
use crate::mould::{
    bialternality_constants, darit_with, delta_inv, is_alternal, is_delta_bialternal,
    is_push_invariant, ma, AratConvention, PolyMould,
};
use crate::scalar::{binomial, q, MultiPoly, Q};
use crate::Result;

use super::{ad_power_mould, eds2_space, eps_bracket_mould, eps_bracket_rank_table, fs2_space};

#[derive(Debug, Clone, Serialize)]
pub struct VerifyItem {
    pub item: String,
    pub expected_source: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sigma: Option<i8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub details: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub items: Vec<VerifyItem>,
    /// the single sign under which every bracket display matches
    pub sigma: Option<i8>,
    pub all_pass: bool,
}

/// The displayed depth-2 bracket polynomials, keyed by (2j, 2k).
pub fn display_bracket(two_j: u32, two_k: u32) -> Option<MultiPoly> {
    let text = match (two_j, two_k) {
        (0, 4) => "2*u1^3+3*u1^2*u2-3*u1*u2^2-2*u2^3",
        (0, 6) => "2*u1^5+5*u1^4*u2+2*u1^3*u2^2-2*u1^2*u2^3-5*u1*u2^4-2*u2^5",
        (0, 10) => {
            "8*u1^9+36*u1^8*u2+74*u1^7*u2^2+91*u1^6*u2^3+41*u1^5*u2^4\
             -41*u1^4*u2^5-91*u1^3*u2^6-74*u1^2*u2^7-36*u1*u2^8-8*u2^9"
        }
        (4, 6) => "-2*u1^7*u2^2-7*u1^6*u2^3-5*u1^5*u2^4+5*u1^4*u2^5+7*u1^3*u2^6+2*u1^2*u2^7",
        _ => return None,
    };
    Some(MultiPoly::parse(text, 2).unwrap())
}

/// The listed depth-2 Fay-shuffle bases by weight.
pub fn display_fs_basis(n: u32) -> Option<Vec<MultiPoly>> {
    let texts: &[&str] = match n {
        5 => &["u1^2*u2-u1*u2^2", "u1^3-u2^3"],
        7 => &["u1^4*u2-u1*u2^4", "u1^5+u1^3*u2^2-u1^2*u2^3-u2^5"],
        9 => &[
            "u1^7-2*u1^4*u2^3+2*u1^3*u2^4-u2^7",
            "u1^6*u2-u1*u2^6",
            "u1^5*u2^2+u1^4*u2^3-u1^3*u2^4-u1^2*u2^5",
        ],
        // the first weight-11 entry is listed with a dropped coefficient
        // (as printed it violates the antisymmetry relation FS.1 that
        // defines the space); the minimal correction restoring both
        // defining relations is used, see CONVENTIONS.md
        11 => &[
            "u1^9+3*u1^5*u2^4-3*u1^4*u2^5-u2^9",
            "u1^8*u2-u1*u2^8",
            "u1^7*u2^2-u1^5*u2^4+u1^4*u2^5-u1^2*u2^7",
            "u1^6*u2^3+u1^5*u2^4-u1^4*u2^5-u1^3*u2^6",
        ],
        _ => return None,
    };
    Some(texts.iter().map(|t| MultiPoly::parse(t, 2).unwrap()).collect())
}

fn scaled(p: &MultiPoly, sigma: i8) -> MultiPoly {
    if sigma >= 0 {
        p.clone()
    } else {
        p.neg()
    }
}

/// Scan the four arat sign conventions against ma(D(f)) =
/// Darit(ma(v_a(D))).ma(f) over a Lie basis; used both as the acceptance
/// oracle and in the verifier.
pub struct MaderScan {
    pub passing: Vec<AratConvention>,
    pub cases: usize,
}

/// A linear basis of the Lie algebra on the c-alphabet, per weight, via
/// Dynkin images of c-monomials.
pub fn lie_basis(weight: u32, cap: u32) -> Vec<CPoly> {
    fn compositions(weight: u32) -> Vec<Vec<u32>> {
        fn rec(rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if rest == 0 {
                if !cur.is_empty() {
                    out.push(cur.clone());
                }
                return;
            }
            for k in 1..=rest {
                cur.push(k);
                rec(rest - k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(weight, &mut Vec::new(), &mut out);
        out
    }
    // Dynkin left-bracketing of each c-monomial spans the Lie part
    let mut candidates: Vec<CPoly> = Vec::new();
    for key in compositions(weight) {
        let mut acc = CPoly::c(cap, key[0]);
        for &k in &key[1..] {
            acc = acc.bracket(&CPoly::c(cap, k));
        }
        if !acc.is_zero() {
            candidates.push(acc);
        }
    }
    // reduce to an independent subset by rref pivots on coefficient rows
    let mut keys: std::collections::BTreeSet<Vec<u32>> = Default::default();
    for c in &candidates {
        for (k, _) in c.terms() {
            keys.insert(k.clone());
        }
    }
    let keys: Vec<Vec<u32>> = keys.into_iter().collect();
    let rows: Vec<Vec<Q>> = candidates
        .iter()
        .map(|c| keys.iter().map(|k| c.coeff(k)).collect())
        .collect();
    let mut basis = Vec::new();
    let mut rank_so_far = 0;
    let mut kept_rows: Vec<Vec<Q>> = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        kept_rows.push(row.clone());
        let r = crate::linalg::row_rank(&kept_rows);
        if r > rank_so_far {
            rank_so_far = r;
            basis.push(candidates[i].clone());
        } else {
            kept_rows.pop();
        }
    }
    basis
}

pub fn mader_convention_scan(max_weight: u32) -> Result<MaderScan> {
    let cap = max_weight + 7;
    let derivations: Vec<Derivation> = vec![
        epsilon_tilde(0, cap)?,
        epsilon(4, cap)?,
        epsilon(6, cap)?,
    ];
    let mut fs: Vec<CPoly> = Vec::new();
    for w in 1..=max_weight {
        fs.extend(lie_basis(w, cap));
    }
    let depth_cap = (max_weight + 1) as usize;
    let mut passing = Vec::new();
    let mut cases = 0usize;
    for conv in AratConvention::all() {
        let mut ok = true;
        'outer: for d in &derivations {
            let p = ma(&to_c_coordinates_strict(d.v_a().as_poly())?, depth_cap);
            for f in &fs {
                cases += 1;
                let lhs = {
                    let df = d.apply(&f.expand(cap));
                    let (_, c) = crate::freelie::lazard::to_c_coordinates(&df)?;
                    ma(&c, depth_cap)
                };
                let rhs_rat = darit_with(&p, &ma(f, depth_cap), conv)?;
                let rhs = match rhs_rat.try_to_poly() {
                    Ok(m) => m,
                    Err(_) => {
                        ok = false;
                        break 'outer;
                    }
                };
                if lhs != rhs {
                    ok = false;
                    break 'outer;
                }
            }
        }
        if ok {
            passing.push(conv);
        }
    }
    Ok(MaderScan {
        passing,
        cases: cases / 4,
    })
}

fn item(name: &str, source: &str, pass: bool) -> VerifyItem {
    VerifyItem {
        item: name.to_string(),
        expected_source: source.to_string(),
        pass,
        sigma: None,
        details: None,
    }
}

/// Run the full reference regression. `heavy` enables the q-order-30
/// iterated-integral comparisons.
pub fn verify_paper_examples(heavy: bool) -> Result<VerifyReport> {
    let mut items: Vec<VerifyItem> = Vec::new();

    // Bernoulli convention pin
    items.push(item(
        "bernoulli-B1",
        "generating-function",
        crate::scalar::bernoulli(1) == crate::scalar::qr(-1, 2),
    ));

    // tangential element identity through weight 12
    {
        let t = t_elements(12)?;
        let s = t.t01.as_poly().add(t.t02.as_poly()).add(t.t12.as_poly());
        items.push(item("t01+t02+t12", "identity", s.is_zero()));
    }

    // centrality of eps_2 through weight 12
    {
        let e2 = epsilon(2, 12)?;
        let mut central = true;
        for two_k in [0u32, 4, 6, 8] {
            let ek = epsilon(two_k, 12)?;
            if !e2.bracket_der(&ek)?.is_zero() {
                central = false;
            }
        }
        items.push(item("eps2-central", "identity", central));
    }

    // depth-2 bracket displays: solve for the single sign matching the
    // most displays, then hold every display to it
    let display_pairs = [(0u32, 4u32), (0, 6), (0, 10), (4, 6)];
    let sigma: Option<i8>;
    {
        let computed: Vec<(u32, u32, PolyMould)> = display_pairs
            .iter()
            .map(|&(j, k)| Ok((j, k, eps_bracket_mould(j, k)?)))
            .collect::<Result<_>>()?;
        let matches_for = |s: i8| -> usize {
            computed
                .iter()
                .filter(|(j, k, m)| {
                    display_bracket(*j, *k)
                        .map(|d| m.value(2) == &scaled(&d, s))
                        .unwrap_or(false)
                })
                .count()
        };
        sigma = Some(if matches_for(1) >= matches_for(-1) { 1 } else { -1 });
        for (j, k, m) in &computed {
            let d = display_bracket(*j, *k).unwrap();
            let pass = sigma
                .map(|s| m.value(2) == &scaled(&d, s))
                .unwrap_or(false);
            let details = if pass {
                None
            } else {
                // diagnose proportional defects exactly
                let (e0, c0) = d.terms().next().unwrap();
                let lambda = m.value(2).coeff(e0) / c0.clone();
                if m.value(2) == &d.scale(&lambda) {
                    Some(format!(
                        "computed value is exactly {} times the listed polynomial \
                         (the listing is content-normalized)",
                        crate::scalar::rational::format_rational(&lambda)
                    ))
                } else {
                    Some("computed value is not proportional to the listing".to_string())
                }
            };
            items.push(VerifyItem {
                item: format!("bracket-display-({j},{k})"),
                expected_source: "display".to_string(),
                pass,
                sigma,
                details,
            });
        }
        // companion check: after content normalization of both sides,
        // every display matches under the same sign
        let primitive = |p: &MultiPoly| -> MultiPoly {
            let mut content: Option<Q> = None;
            for (_, c) in p.terms() {
                content = Some(match content {
                    None => c.clone(),
                    Some(prev) => {
                        // gcd of rationals: gcd of numerators over lcm of
                        // denominators; here all values are integers
                        let a = prev.numer().clone();
                        let b = c.numer().clone();
                        Q::from_integer(num::Integer::gcd(&a, &b))
                    }
                });
            }
            let content = content.unwrap_or_else(|| Q::from_integer(1.into()));
            let lead_neg = {
                let d = p.total_degree();
                num::Signed::is_negative(&p.coeff(&[d, 0]))
            };
            let scale = if lead_neg { -content } else { content };
            p.scale(&scale.recip())
        };
        let prim_ok = computed.iter().all(|(j, k, m)| {
            let d = display_bracket(*j, *k).unwrap();
            primitive(m.value(2)) == primitive(&d.scale(&q(if sigma == Some(-1) { -1 } else { 1 })))
        });
        items.push(item(
            "bracket-displays-primitive-normalized",
            "display",
            prim_ok,
        ));
    }

    // weight-9 bracket: the display has a typographical defect, so the
    // expected value is the recomputed one cross-checked by symmetry and
    // membership properties
    {
        let m = eps_bracket_mould(0, 8)?;
        let v = m.value(2);
        let antisym_mirror = {
            // p(u1,u2) = p(-u2,-u1) for these odd-degree elements
            let images = [MultiPoly::var(2, 1).neg(), MultiPoly::var(2, 0).neg()];
            v.substitute(&images).unwrap() == v.clone()
        };
        let in_eds = {
            let space = eds2_space(9)?;
            let mut stacked: Vec<Vec<Q>> = space
                .basis
                .iter()
                .map(|p| super::coeff_vector(p, 7))
                .collect();
            let rank0 = crate::linalg::row_rank(&stacked);
            stacked.push(super::coeff_vector(v, 7));
            crate::linalg::row_rank(&stacked) == rank0
        };
        let pass = antisym_mirror && in_eds && is_push_invariant(&m) && is_alternal(&m);
        items.push(item("bracket-(0,8)-self-oracle", "self-oracle", pass));
    }

    // ad-power display: matches with the separately recorded sign (the
    // display disagrees with the ground-truth encoding by a global sign;
    // see CONVENTIONS.md)
    {
        let mut ok = true;
        for n in 1..=6u32 {
            let m = ad_power_mould(n)?;
            let mut disp = MultiPoly::zero(n as usize);
            for k in 1..=n {
                let mut c = binomial(n - 1, k - 1);
                if (n - k) % 2 == 1 {
                    c = -c;
                }
                // the display  -sum (-1)^{n-k} C(n-1,k-1) u_k
                let mut e = vec![0u32; n as usize];
                e[(k - 1) as usize] = 1;
                disp.add_term(e, -c);
            }
            if m.value(n as usize) != &disp.neg() {
                ok = false;
            }
        }
        items.push(VerifyItem {
            item: "ad-power-display".to_string(),
            expected_source: "display+recorded-sign".to_string(),
            pass: ok,
            sigma: Some(-1),
            details: Some("recorded sign -1 relative to the encoding".to_string()),
        });
    }

    // dimension tables
    {
        let mut ok = true;
        let mut n = 5;
        while n <= 31 {
            let e = eds2_space(n)?;
            let f = fs2_space(n)?;
            if !e.matches || !f.matches {
                ok = false;
            }
            // strict inequality of the two dimension families
            if f.computed <= e.computed {
                ok = false;
            }
            n += 2;
        }
        items.push(item("dimension-tables-5..31", "formula", ok));
    }

    // Fay-shuffle bases span the listed polynomials
    {
        let mut ok = true;
        for n in [5u32, 7, 9, 11] {
            let space = fs2_space(n)?;
            let listed = display_fs_basis(n).unwrap();
            let a: Vec<Vec<Q>> = space
                .basis
                .iter()
                .map(|p| super::coeff_vector(p, n - 2))
                .collect();
            let b: Vec<Vec<Q>> = listed
                .iter()
                .map(|p| super::coeff_vector(p, n - 2))
                .collect();
            if !same_span(&a, &b) {
                ok = false;
            }
        }
        items.push(item("fs-bases-5-7-9-11", "display", ok));
    }

    // bracket rank table; the counting formulas are stated for n >= 7 (at
    // n = 5 the pair-count formula undercounts by one since there is no
    // excluded index-1 pair), so n = 5 is pinned to its computed row
    {
        let rows = eps_bracket_rank_table(21)?;
        let mut ok = true;
        for row in &rows {
            if row.weight == 5 {
                if (row.brackets, row.rank, row.relations) != (1, 1, 0) {
                    ok = false;
                }
                continue;
            }
            if row.brackets as i64 != row.brackets_formula
                || row.rank != row.rank_formula
                || row.relations as i64 != row.relations_formula
            {
                ok = false;
            }
        }
        items.push(item("bracket-rank-table-5..21", "formula", ok));
    }

    // every bracket mould is in the depth-2 double shuffle space
    {
        let mut ok = true;
        let mut n = 5;
        while n <= 13 {
            let m = (n - 1) / 2;
            for j in 0..=m / 2 {
                let k = m - j;
                if j >= k || j == 1 || k == 1 {
                    continue;
                }
                let mould = eps_bracket_mould(2 * j, 2 * k)?;
                if !is_alternal(&mould) || !is_push_invariant(&mould) {
                    ok = false;
                }
                if !is_delta_bialternal(&mould)? {
                    ok = false;
                }
                if bialternality_constants(&delta_inv(&mould)?).is_none() {
                    ok = false;
                }
            }
            n += 2;
        }
        items.push(item("brackets-delta-bialternal-5..13", "membership", ok));
    }

    // push-neutrality family: the assembled element is push-neutral; the
    // individual quadratics are push-neutral exactly for even n, and only
    // even n enter the assembled sum (odd Bernoulli numbers vanish)
    {
        let r = super::prop_t01_report(10)?;
        items.push(item("prop-t01-assembled", "identity", r.assembled));
        items.push(item(
            "prop-t01-even-n",
            "identity",
            r.even_n_all_neutral(),
        ));
        let odd_all: Vec<String> = r
            .per_n
            .iter()
            .filter(|&&(n, ok)| n % 2 == 1 && !ok)
            .map(|&(n, _)| n.to_string())
            .collect();
        items.push(VerifyItem {
            item: "prop-t01-all-n".to_string(),
            expected_source: "display".to_string(),
            pass: r.all_n_neutral() && r.assembled,
            sigma: None,
            details: if odd_all.is_empty() {
                None
            } else {
                Some(format!(
                    "push-neutrality fails for odd n = {} (these terms do not \
                     enter the assembled element)",
                    odd_all.join(", ")
                ))
            },
        });
    }

    // iterated-integral suite
    {
        let (n_cap, weight) = if heavy { (30, 8) } else { (12, 5) };
        let ctx = IterEis::new(n_cap, weight);
        let idx = indices_up_to_weight(weight);
        let mut oracle_ok = true;
        let mut diffeq_ok = true;
        let mut q0_ok = true;
        for i in &idx {
            if ctx.integral(i) != ctx.integral_oracle(i) {
                oracle_ok = false;
            }
            if !ctx.satisfies_differential_equation(i) {
                diffeq_ok = false;
            }
            let got = ctx.integral(i);
            let mut q0 = crate::scalar::QSeriesL::zero(n_cap, weight);
            for (&(nn, mm), c) in got.coeffs() {
                if nn == 0 {
                    q0.set((0, mm), c.clone());
                }
            }
            if q0 != ctx.q0_profile(i) {
                q0_ok = false;
            }
        }
        items.push(item("iterated-integral-oracle", "self-oracle", oracle_ok));
        items.push(item("iterated-integral-diffeq", "identity", diffeq_ok));
        items.push(item("iterated-integral-q0-profile", "identity", q0_ok));

        let mut shuffle_ok = true;
        for l in &idx {
            for r in &idx {
                if l.is_empty() && r.is_empty() {
                    continue;
                }
                if crate::eisenstein::index_weight(l) + crate::eisenstein::index_weight(r)
                    <= weight
                    && !ctx.satisfies_shuffle(l, r)
                {
                    shuffle_ok = false;
                }
            }
        }
        items.push(item("iterated-integral-shuffle", "identity", shuffle_ok));

        let primes: Vec<u32> = [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29]
            .iter()
            .copied()
            .filter(|&p| p <= n_cap)
            .collect();
        let mut coeff_ok = true;
        for k in 1..=4 {
            if !g_coefficient_identity_check(k, &primes, n_cap)? {
                coeff_ok = false;
            }
        }
        items.push(item("sigma-over-p-coefficients", "display", coeff_ok));

        let rank_weight = if heavy { 6 } else { 4 };
        let fam = indices_up_to_weight(rank_weight);
        let ctx_rank = IterEis::new(n_cap.max(20), rank_weight.max(6));
        let r = rank_check(&ctx_rank, &fam);
        items.push(item(
            "iterated-integral-rank",
            "finite-shadow",
            r.sufficient && r.rank == fam.len(),
        ));
    }

    // mader convention: exactly one of the four sign conventions works
    {
        let scan = mader_convention_scan(4)?;
        let pass = scan.passing.len() == 1;
        items.push(VerifyItem {
            item: "darit-mader-convention".to_string(),
            expected_source: "identity".to_string(),
            pass,
            sigma: None,
            details: Some(
                scan.passing
                    .iter()
                    .map(|c| c.to_string())
                    .collect::<Vec<_>>()
                    .join("; "),
            ),
        });
    }

    let all_pass = items.iter().all(|i| i.pass) && sigma.is_some();
    Ok(VerifyReport {
        items,
        sigma,
        all_pass,
    })
}
