use proptest::prelude::*;

use severi_bn::bn::{self, VerdictStatus};
use severi_bn::duality::{self, DualityError, RamProfile};

#[test]
fn p_prime_is_the_last_admissible_genus() {
    for r in 1..=8 {
        for d in 2..=80 {
            let pp = duality::p_prime(r, d).unwrap();
            let floor = -r * (r + 2);
            assert!(bn::rho(pp.p_prime, r, d).unwrap() >= floor, "({r},{d})");
            assert!(bn::rho(pp.p_prime + 1, r, d).unwrap() < floor, "({r},{d})");
            assert_eq!(pp.a_prime, (r + 1) * d - r * (pp.p_prime - 1));
            assert!((0..r).contains(&pp.a_prime));
        }
    }
}

#[test]
fn threshold_forces_nonnegative_expected_dim() {
    for r in 1..=8 {
        for d in 2..=80 {
            let pp = duality::p_prime(r, d).unwrap();
            let dim = pp.p_prime - 2 + bn::rho(pp.p_prime, r, d).unwrap();
            if pp.threshold_ok {
                assert!(dim >= 0, "({r},{d})");
            }
        }
    }
    // the converse fails: the dimension is 0 here although d < r(r+1)
    let pp = duality::p_prime(3, 11).unwrap();
    assert_eq!(pp.p_prime, 15);
    assert!(!pp.threshold_ok);
    assert_eq!(pp.p_prime - 2 + bn::rho(15, 3, 11).unwrap(), 0);
}

#[test]
fn negative_a_matches_empty_by_rho() {
    for p in 2..=60 {
        for r in 1..=6 {
            for d in 2..=60 {
                let negative = matches!(duality::cusp_scenario(p, r, d), Err(DualityError::NegativeA { .. }));
                let empty = bn::smooth_locus_verdict(p, r, d).unwrap().status == VerdictStatus::EmptyByRho;
                assert_eq!(negative, empty, "({p},{r},{d})");
            }
        }
    }
}

#[test]
fn scenario_grid() {
    for p in 2..=60 {
        for r in 1..=6 {
            for d in 2..=60 {
                let Ok(s) = duality::cusp_scenario(p, r, d) else { continue };
                assert_eq!(s.rho_dual, bn::rho(s.a + 1, r, s.d_star).unwrap());
                assert_eq!(s.rho_dual, p - 1 - r * (r + 2));
                assert_eq!(duality::double_dual_degree(p, r, d).unwrap(), d);
                assert_eq!(s.degenerate, s.d_star <= r);
                assert!(duality::pluecker_consistency(1, r, d, p - 1, s.a).unwrap());
            }
        }
    }
}

proptest! {
    #[test]
    fn dual_profile_is_an_involution(weights in prop::collection::vec(0i64..1000, 1..12)) {
        let p = RamProfile::new(weights).unwrap();
        let dual = duality::dual_profile(&p);
        prop_assert_eq!(dual.r(), p.r());
        prop_assert_eq!(duality::dual_profile(&dual), p);
    }

    #[test]
    fn dual_degree_is_linear_in_weights(
        r in 1i64..10,
        d in 1i64..500,
        seed in prop::collection::vec(0i64..50, 10),
    ) {
        let weights: Vec<i64> = seed[..r as usize].to_vec();
        let p = RamProfile::new(weights.clone()).unwrap();
        let correction: i64 = (1..r).map(|i| (r - i) * weights[(i - 1) as usize]).sum();
        prop_assert_eq!(duality::dual_degree(r, d, &p).unwrap(), r * d - correction);
    }
}
