use proptest::prelude::*;

use severi_bn::bn::{self, BnError, VerdictStatus};

/// `None` when even 128 bits are not enough.
fn rho_wide(g: i64, r: i64, d: i64) -> Option<i128> {
    let (g, r, d) = (g as i128, r as i128, d as i128);
    (r + 1).checked_mul(g - d + r).and_then(|t| g.checked_sub(t))
}

#[test]
fn rho_strictly_increasing_in_d() {
    for p in 2..=50 {
        for r in 1..=8 {
            for d in 2..60 {
                assert!(bn::rho(p, r, d + 1).unwrap() > bn::rho(p, r, d).unwrap());
            }
        }
    }
}

#[test]
fn appendix_emptiness_needs_negative_rho() {
    for p in 2..=60 {
        for r in 1..=8 {
            for d in 2..=70 {
                let v = bn::smooth_locus_verdict(p, r, d).unwrap();
                if v.status == VerdictStatus::EmptyByAppendix {
                    assert!(bn::rho(p, r, d).unwrap() < 0, "({p},{r},{d})");
                }
                if let Some(t) = bn::appendix_bound(p, r, d).unwrap() {
                    assert!(t.twice_rhs >= 0 && t.twice_rhs % 2 == 0);
                }
            }
        }
    }
}

#[test]
fn expected_dim_nonnegative_where_claimed() {
    for p in 2..=60 {
        for r in 1..=6 {
            for d in 2..=80 {
                let v = bn::smooth_locus_verdict(p, r, d).unwrap();
                let rho = bn::rho(p, r, d).unwrap();
                match v.status {
                    VerdictStatus::NonemptyExpectedDim => {
                        assert!(d >= r * (r + 1) && rho >= -r * (r + 2) && rho < 0);
                        assert_eq!(v.expected_dim, Some(p - 2 + rho));
                        assert!(p - 2 + rho >= 0, "({p},{r},{d})");
                    }
                    VerdictStatus::NonemptyGeneric => assert_eq!(v.expected_dim, Some(p - 2)),
                    _ => assert_eq!(v.expected_dim, None),
                }
            }
        }
    }
}

#[test]
fn appendix_top_degree() {
    for r in 2..=12 {
        for p in 3..=60 {
            let t = bn::appendix_bound(p, r, p - 1).unwrap().unwrap();
            assert_eq!(t.chi, 0);
            assert_eq!(t.rhs, r * (r + 1) / 2, "p = {p}, r = {r}");
        }
    }
}

#[test]
fn appendix_not_applicable_outside_range() {
    // χ < 0 or χ > r
    assert_eq!(bn::appendix_bound(8, 2, 8).unwrap(), None);
    assert_eq!(bn::appendix_bound(10, 2, 5).unwrap(), None);
    assert!(bn::appendix_bound(10, 2, 7).unwrap().is_some());
}

#[test]
fn pencil_reduction_matches() {
    for p in 2..=80 {
        for k in 2..=15 {
            for delta in 0..=p - 2 {
                assert_eq!(bn::thm56_bound(p, 1, k, delta).unwrap(), bn::nodal_pencil_nonempty(p, delta, k).unwrap());
            }
        }
    }
}

#[test]
fn overflow_is_an_error() {
    assert!(matches!(bn::rho(i64::MAX, 3, -5), Err(BnError::Overflow(_))));
    assert!(matches!(bn::rho_identity(2, i64::MAX / 2, 3), Err(BnError::Overflow(_))));
    assert!(matches!(bn::thm56_bound(i64::MAX, i64::MAX, 2, 0), Err(BnError::Overflow(_))));
    assert!(bn::smooth_locus_verdict(i64::MIN, 1, 2).is_err());
}

proptest! {
    #[test]
    fn rho_matches_wide_arithmetic(g in any::<i64>(), r in any::<i64>(), d in any::<i64>()) {
        let wide = rho_wide(g, r, d);
        match bn::rho(g, r, d) {
            Ok(v) => prop_assert_eq!(Some(v as i128), wide),
            Err(BnError::Overflow(_)) => {}
            Err(e) => prop_assert!(false, "unexpected {e}"),
        }
        if wide.is_none_or(|w| i64::try_from(w).is_err()) {
            prop_assert!(bn::rho(g, r, d).is_err());
        }
    }

    #[test]
    fn identity_sides_agree(p in 2i64..100_000, r in 1i64..1_000, d in 2i64..100_000) {
        let (lhs, rhs) = bn::rho_identity(p, r, d).unwrap();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(Some(lhs as i128), rho_wide(p, r, d).map(|w| w + (r as i128) * (r as i128 + 2)));
    }

    #[test]
    fn verdict_tree_is_consistent(p in 2i64..400, r in 1i64..20, d in 2i64..400) {
        let v = bn::smooth_locus_verdict(p, r, d).unwrap();
        let rho = bn::rho(p, r, d).unwrap();
        let expected_first = if rho >= 0 {
            Some(VerdictStatus::NonemptyGeneric)
        } else if rho < -r * (r + 2) {
            Some(VerdictStatus::EmptyByRho)
        } else if d >= r * (r + 1) {
            Some(VerdictStatus::NonemptyExpectedDim)
        } else {
            None
        };
        match expected_first {
            Some(s) => prop_assert_eq!(v.status, s),
            None => {
                let holds = bn::appendix_bound(p, r, d).unwrap().is_none_or(|t| t.holds);
                let s = if holds { VerdictStatus::Undetermined } else { VerdictStatus::EmptyByAppendix };
                prop_assert_eq!(v.status, s);
            }
        }
    }
}
