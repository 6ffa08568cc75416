use num::Zero;

use super::*;
use crate::scalar::qr;

#[test]
fn eisenstein_series_values() {
    // G_0 = -1
    let g0 = eisenstein_q(0, 5);
    assert_eq!(g0.expansion.coeff(0, 0), q(-1));
    assert!(g0.expansion.coeff(1, 0).is_zero());
    // G_4 constant term: -B_4/8 = 1/240
    let g4 = eisenstein_q(2, 5);
    assert_eq!(g4.expansion.coeff(0, 0), qr(1, 240));
    // q^2 coefficient of G_4: sigma_3(2) = 9
    assert_eq!(g4.expansion.coeff(2, 0), q(9));
    // G_2 constant term: -B_2/4 = -1/24
    assert_eq!(eisenstein_q(1, 2).expansion.coeff(0, 0), qr(-1, 24));
}

#[test]
fn single_integrals() {
    let ctx = IterEis::new(12, 4);
    // G(0) = L
    assert_eq!(
        ctx.integral(&[0]),
        QSeriesL::monomial(12, 4, 0, 1, q(1))
    );
    // the q^0 part of G(2) is -G_4^infty L
    let g = ctx.integral(&[2]);
    assert_eq!(g.coeff(0, 1), -eisenstein_constant(2));
    assert!(g.coeff(0, 0).is_zero());
    // q^n coefficient of I(G_4) = -primitive(G_4) is -sigma_3(n)/n
    assert_eq!(g.coeff(5, 0), -q(126) / q(5));
    // empty index
    assert_eq!(ctx.integral(&[]), QSeriesL::one(12, 4));
}

#[test]
fn oracle_agrees_on_small_indices() {
    let ctx = IterEis::new(10, 6);
    for idx in indices_up_to_weight(6) {
        assert_eq!(
            ctx.integral(&idx),
            ctx.integral_oracle(&idx),
            "oracle mismatch at {idx:?}"
        );
    }
}

#[test]
fn q0_profile_holds() {
    let ctx = IterEis::new(8, 5);
    for idx in indices_up_to_weight(5) {
        let got = ctx.integral(&idx);
        let mut q0 = QSeriesL::zero(8, 5);
        for (&(n, m), c) in got.coeffs() {
            if n == 0 {
                q0.set((0, m), c.clone());
            }
        }
        assert_eq!(q0, ctx.q0_profile(&idx), "q0 profile at {idx:?}");
    }
}

#[test]
fn differential_equation_holds() {
    let ctx = IterEis::new(8, 5);
    for idx in indices_up_to_weight(5) {
        assert!(
            ctx.satisfies_differential_equation(&idx),
            "diffeq at {idx:?}"
        );
    }
}

#[test]
fn shuffle_identity_small() {
    let ctx = IterEis::new(8, 6);
    let pairs: [(&[u32], &[u32]); 4] = [
        (&[0], &[0]),
        (&[0], &[1]),
        (&[1], &[2]),
        (&[0, 1], &[1]),
    ];
    for (l, r) in pairs {
        assert!(ctx.satisfies_shuffle(l, r), "shuffle at {l:?}, {r:?}");
    }
}

#[test]
fn coefficient_identity() {
    // q^p coefficient of primitive(G^0_{2k}) is (p^{2k-1}+1)/p
    assert!(g_coefficient_identity_check(2, &[2, 3, 5, 7], 10).unwrap());
    assert!(g_coefficient_identity_check(1, &[3], 10).unwrap());
    // frozen: k=2, p=5 gives 126/5
    let prim = eisenstein_q0(2, 6).primitive_dlog();
    assert_eq!(prim.coeff(5, 0), qr(126, 5));
    assert_eq!(prim.coeff(2, 0), qr(9, 2));
    // guard: requesting primes beyond the cap is an error, not a wrong value
    assert!(g_coefficient_identity_check(2, &[31], 10).is_err());
}

#[test]
fn rank_of_small_family() {
    let ctx = IterEis::new(12, 6);
    // {G_empty, G(0)} has rank 2
    let r = rank_check(&ctx, &[vec![], vec![0]]);
    assert_eq!(r.rank, 2);
    // a dependent family has rank 1: G(0) and 2 G(0)
    let r = rank_check(&ctx, &[vec![0], vec![0]]);
    assert_eq!(r.rank, 1);
    // weight <= 4 family has full rank
    let idx = indices_up_to_weight(4);
    let r = rank_check(&ctx, &idx);
    assert!(r.sufficient);
    assert_eq!(r.rank, idx.len());
}

#[test]
fn index_weight_enumeration() {
    // weight counts 2k+1 per entry, so each bound is a finite family
    assert_eq!(index_weight(&[]), 0);
    assert_eq!(index_weight(&[0]), 1);
    assert_eq!(index_weight(&[2]), 5);
    assert_eq!(index_weight(&[0, 2]), 6);
    let idx = indices_up_to_weight(3);
    // {}, (0), (1), (0,0), (0,0,0)
    assert_eq!(idx.len(), 5);
}

#[test]
fn g_action_small() {
    let ctx = IterEis::new(8, 6);
    let report = g_action_on_a(6, &ctx).unwrap();
    // weight-1 terms: the empty index contributes a; the action of
    // eps~_0 contributes -G(0) b = -L b
    let a_word = crate::freelie::word::Word::parse("a").unwrap();
    let b_word = crate::freelie::word::Word::parse("b").unwrap();
    assert_eq!(
        report.series.terms.get(&a_word).unwrap(),
        &QSeriesL::one(8, 6)
    );
    assert_eq!(
        report.series.terms.get(&b_word).unwrap(),
        &QSeriesL::monomial(8, 6, 0, 1, q(-1))
    );
    assert!(report.differential_equation_ok);
    assert!(report.contributing_indices > 4);
}

#[test]
fn g_log_lie_shadow() {
    let ctx = IterEis::new(6, 3);
    assert!(g_log_is_lie(&ctx, 2, 3));
}
