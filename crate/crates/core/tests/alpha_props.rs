use proptest::prelude::*;

use severi_bn::alpha::{self, AlphaError, AlphaVector};

#[test]
fn every_enumerated_vector_is_consistent() {
    for n in 1..=16 {
        for delta in 0..n {
            let vs = alpha::enumerate(n, delta, None).unwrap();
            assert!(!vs.is_empty());
            assert!(vs.windows(2).all(|w| w[0].entries() < w[1].entries()), "order at ({n},{delta})");
            for v in &vs {
                let s = v.validate().unwrap();
                assert_eq!((s.n, s.delta), (n, delta));
                assert_eq!(s.pairs, n - delta);
                assert_eq!(s.g, n + 1 - delta);
                assert_eq!(v.entries().iter().sum::<u64>() as usize, n - delta);
            }
        }
    }
}

#[test]
fn cap_filters_enumeration() {
    for n in 1..=12 {
        for delta in 0..n {
            let all = alpha::enumerate(n, delta, None).unwrap();
            for cap in 1..=4 {
                let capped = alpha::enumerate(n, delta, Some(cap)).unwrap();
                let filtered: Vec<_> = all.iter().filter(|v| v.respects_cap(cap)).cloned().collect();
                assert_eq!(capped, filtered);
                assert_eq!(alpha::first_solution(n, delta, Some(cap)).unwrap(), filtered.first().cloned());
            }
        }
    }
}

#[test]
fn walk_covers_reachable_deltas() {
    for n in 2..=60 {
        for k in 2..=10 {
            let steps = alpha::walk(n, k).unwrap();
            let deltas: Vec<usize> = steps.iter().map(AlphaVector::delta).collect();
            assert_eq!(deltas, alpha::reachable_deltas(n, k).unwrap());
            for v in &steps {
                assert!(v.validate().is_ok() && v.respects_cap(2 * k as u64));
                assert_eq!(v.n(), n);
            }
        }
    }
}

#[test]
fn severi_vectors_up_to_200() {
    for n in 1..=200 {
        for delta in 0..n {
            let v = alpha::severi_vector(n, delta).unwrap();
            assert_eq!(v.validate().unwrap().delta, delta);
        }
        assert!(alpha::severi_vector(n, n).is_err());
    }
}

#[test]
fn increment_rejects_top_and_tiny_caps() {
    let top = alpha::severi_vector(5, 4).unwrap();
    assert!(matches!(alpha::increment_delta(&top, 10), Err(AlphaError::DeltaOutOfRange { .. })));
    let v = alpha::severi_vector(5, 0).unwrap();
    assert!(alpha::increment_delta(&v, 1).is_err());
}

proptest! {
    #[test]
    fn increment_preserves_weight(n in 2usize..40, k in 2u64..8, pick in any::<prop::sample::Index>()) {
        let cap = 2 * k;
        let mut pool = Vec::new();
        for delta in 0..n - 1 {
            if let Some(v) = alpha::first_solution(n, delta, Some(cap)).unwrap() {
                pool.push(v);
            }
        }
        prop_assume!(!pool.is_empty());
        let v = pool[pick.index(pool.len())].clone();
        let next = alpha::increment_delta(&v, cap).unwrap();
        let s = next.validate().unwrap();
        prop_assert_eq!(s.n, n);
        prop_assert_eq!(s.delta, v.delta() + 1);
        prop_assert!(next.respects_cap(cap));
    }

    #[test]
    fn validate_rejects_wrong_weight(entries in prop::collection::vec(0u64..5, 1..10)) {
        let n = entries.len() as u64;
        let weight: u64 = entries.iter().enumerate().map(|(j, a)| (j as u64 + 1) * a).sum();
        prop_assert_eq!(AlphaVector::new(entries).is_ok(), weight == n);
    }
}
