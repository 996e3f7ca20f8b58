//! Invariant suites behind `selftest`. Each suite yields one record whose
//! criteria report `(cases held, cases checked)`, or the two sides of a
//! specific identity.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use severi_bn::alpha;
use severi_bn::bn::{self, VerdictStatus};
use severi_bn::duality::{self, DualityError};
use severi_bn::elliptic::{self, Curve, Divisor, DivisorClass, EcError, Point};
use severi_bn::lattice::{named_class, Lattice, NamedClass};

use crate::record::Record;

#[derive(Default)]
struct Tally {
    held: i64,
    total: i64,
}

impl Tally {
    fn check(&mut self, ok: bool) {
        self.total += 1;
        if ok {
            self.held += 1;
        }
    }
}

trait AddTally {
    fn tally(self, name: &str, t: Tally) -> Self;
    fn exact(self, name: &str, lhs: i64, rhs: i64) -> Self;
}

impl AddTally for Record {
    fn tally(self, name: &str, t: Tally) -> Self {
        self.criterion(name, t.held, t.total, t.held == t.total)
    }

    fn exact(self, name: &str, lhs: i64, rhs: i64) -> Self {
        self.criterion(name, lhs, rhs, lhs == rhs)
    }
}

fn suite(name: &str) -> Record {
    Record::new("selftest").input("suite", name)
}

pub fn run_all() -> Vec<Record> {
    vec![rho_suite(), alpha_suite(), elliptic_suite(), lattice_suite(), duality_suite(), strata_suite(), coherence_suite()]
}

fn rho_suite() -> Record {
    let mut identity = Tally::default();
    let mut monotone = Tally::default();
    let mut appendix_negative = Tally::default();
    let mut dim_nonnegative = Tally::default();
    for p in 2..=60i64 {
        for r in 1..=6i64 {
            for d in 2..=60i64 {
                identity.check(matches!(
                    bn::rho_identity(p, r, d),
                    Ok((lhs, rhs)) if lhs == rhs && lhs == p - (r + 1) * (p - d + r) + r * (r + 2)
                ));
                monotone.check(matches!((bn::rho(p, r, d), bn::rho(p, r, d + 1)), (Ok(a), Ok(b)) if b - a == r + 1));
                match bn::smooth_locus_verdict(p, r, d) {
                    Ok(v) => {
                        if v.status == VerdictStatus::EmptyByAppendix {
                            appendix_negative.check(bn::rho(p, r, d).is_ok_and(|rho| rho < 0));
                        }
                        if let Some(dim) = v.expected_dim {
                            dim_nonnegative.check(dim >= 0);
                        }
                    }
                    Err(_) => identity.check(false),
                }
            }
        }
    }
    let appendix = |p, r, d| match bn::smooth_locus_verdict(p, r, d) {
        Ok(v) if v.status == VerdictStatus::EmptyByAppendix => {
            v.reason("appendix_bound").map_or((0, 0), |a| (a.lhs, a.rhs))
        }
        _ => (i64::MIN, i64::MIN),
    };
    let (l1, r1) = appendix(6, 2, 4);
    let (l2, r2) = appendix(10, 3, 7);
    let undetermined = bn::smooth_locus_verdict(7, 2, 5).is_ok_and(|v| v.status == VerdictStatus::Undetermined);
    suite("rho")
        .tally("rho_identity", identity)
        .tally("rho_increasing_in_d", monotone)
        .tally("appendix_only_below_zero", appendix_negative)
        .tally("expected_dim_nonnegative", dim_nonnegative)
        .exact("appendix_6_2_4_lhs", l1, 2)
        .exact("appendix_6_2_4_rhs", r1, 3)
        .exact("appendix_10_3_7_lhs", l2, 1)
        .exact("appendix_10_3_7_rhs", r2, 4)
        .criterion("undetermined_7_2_5", i64::from(undetermined), 1, undetermined)
}

/// All tuples with `Σ (j+1) α_j = n`, grouped by `δ = Σ j α_j`.
fn all_vectors(n: usize) -> Vec<BTreeSet<Vec<u64>>> {
    fn go(n: usize, level: usize, left: usize, cur: &mut Vec<u64>, out: &mut [BTreeSet<Vec<u64>>]) {
        if level == n {
            if left == 0 {
                let delta: u64 = cur.iter().enumerate().map(|(j, a)| j as u64 * a).sum();
                out[delta as usize].insert(cur.clone());
            }
            return;
        }
        for a in 0..=left / (level + 1) {
            cur.push(a as u64);
            go(n, level + 1, left - a * (level + 1), cur, out);
            cur.pop();
        }
    }
    let mut out = vec![BTreeSet::new(); n];
    go(n, 0, n, &mut Vec::with_capacity(n), &mut out);
    out
}

fn alpha_suite() -> Record {
    let mut enumeration = Tally::default();
    for n in 1..=10 {
        for (delta, expected) in all_vectors(n).iter().enumerate() {
            let got: Option<BTreeSet<Vec<u64>>> =
                alpha::enumerate(n, delta, None).ok().map(|vs| vs.iter().map(|v| v.entries().to_vec()).collect());
            enumeration.check(got.as_ref() == Some(expected));
        }
    }
    let mut base = Tally::default();
    let mut walk = Tally::default();
    for n in 2..=40 {
        for k in 2..=8 {
            let cap = 2 * k as u64;
            base.check(alpha::base_vector(n, k).is_ok_and(|b| {
                b.vector.delta() == b.delta0
                    && b.delta0 == alpha::delta0_closed_form(n, k)
                    && b.vector.respects_cap(cap)
            }));
            walk.check(alpha::walk(n, k).is_ok_and(|steps| {
                steps.last().is_some_and(|v| v.delta() == n - 1)
                    && steps.windows(2).all(|w| w[1].delta() == w[0].delta() + 1)
                    && steps.iter().all(|v| v.respects_cap(cap) && v.validate().is_ok())
            }));
        }
    }
    let mut severi = Tally::default();
    for n in 1..=60 {
        for delta in 0..n {
            severi.check(alpha::severi_vector(n, delta).is_ok_and(|v| v.validate().is_ok_and(|s| s.delta == delta)));
        }
    }
    suite("alpha")
        .tally("enumerate_matches_generator", enumeration)
        .tally("base_vector", base)
        .tally("walk_to_top", walk)
        .tally("severi_vector", severi)
}

fn group_axioms(c: &Curve, p: &Point, q: &Point, r: &Point) -> Result<bool, EcError> {
    let pq = c.add(p, q)?;
    Ok(pq == c.add(q, p)?
        && c.add(&pq, r)? == c.add(p, &c.add(q, r)?)?
        && c.add(p, &Point::Infinity)? == *p
        && c.add(p, &c.neg(p)?)?.is_infinity()
        && c.contains(&pq))
}

/// Group axioms on every triple when the group is small, otherwise on
/// 10^4 seeded random triples. Returns `(held, checked)`.
pub fn group_law_sample(c: &Curve, seed: u64) -> Result<(usize, usize), EcError> {
    let pts = c.points();
    let mut held = 0;
    let mut total = 0;
    if pts.len() <= 30 {
        for p in pts {
            for q in pts {
                for r in pts {
                    total += 1;
                    held += usize::from(group_axioms(c, p, q, r)?);
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..10_000 {
            let mut pick = || pts[rng.gen_range(0..pts.len())];
            let (p, q, r) = (pick(), pick(), pick());
            total += 1;
            held += usize::from(group_axioms(c, &p, &q, &r)?);
        }
    }
    Ok((held, total))
}

fn elliptic_suite() -> Record {
    let mut rec = suite("elliptic");
    let (f5, f101) = match (Curve::new(5, 1, 1), Curve::new(101, 7, 4)) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return rec.criterion("curves", 0, 1, false),
    };
    rec = rec.exact("f5_order", f5.order() as i64, 9);
    for (name, c) in [("f5", &f5), ("f101", &f101)] {
        let t = c.q() as i64 + 1 - c.order() as i64;
        let (held, total) = group_law_sample(c, 1).unwrap_or((0, 1));
        rec = rec
            .exact(&format!("{name}_character_sum"), c.order() as i64, c.order_by_character_sum() as i64)
            .criterion(&format!("{name}_hasse"), t * t, 4 * c.q() as i64, t * t <= 4 * c.q() as i64)
            .criterion(&format!("{name}_group_axioms"), held as i64, total as i64, held == total);
    }

    let mut abel = Tally::default();
    for p in f5.points() {
        for q in f5.points() {
            let sum = f5.add(p, q);
            abel.check(sum.is_ok_and(|s| {
                let lhs = Divisor::from_points([(*p, 1), (*q, 1)]);
                let rhs = Divisor::from_points([(s, 1), (Point::Infinity, 1)]);
                elliptic::lin_equiv(&f5, &lhs, &rhs).unwrap_or(false)
            }));
        }
    }

    let pts = f101.points();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut translation = Tally::default();
    for _ in 0..50 {
        let n = rng.gen_range(1..=8i64);
        let mut divisor = || Divisor::from_points((0..n).map(|_| (pts[rng.gen_range(0..pts.len())], 1)));
        let (d, d_prime) = (divisor(), divisor());
        translation.check(elliptic::solve_translation(&f101, &d, &d_prime, n).is_ok_and(|p| {
            let rhs = &(&d_prime + &Divisor::from_points([(Point::Infinity, n)])) - &d;
            elliptic::lin_equiv(&f101, &Divisor::from_points([(p, n)]), &rhs).unwrap_or(false)
        }));
    }

    let (e, _) = f101.max_order_point();
    let mut limits = Tally::default();
    for n in 1..=8usize {
        let target = DivisorClass { degree: n as i64, sum: pts[n] };
        for delta in 0..n {
            let Ok(alpha) = alpha::severi_vector(n, delta) else {
                limits.check(false);
                continue;
            };
            let mut next = 1i64;
            let initial: Vec<Vec<Point>> = (0..n)
                .map(|level| {
                    (0..alpha.get(level))
                        .map(|_| {
                            let p = f101.mul(next, &e).unwrap_or(Point::Infinity);
                            next += level as i64 + 1;
                            p
                        })
                        .collect()
                })
                .collect();
            limits.check(
                elliptic::place_limit_curve(&f101, &alpha, &initial, &e, &target)
                    .is_ok_and(|lc| lc.g == n + 1 - delta && lc.class(&f101) == Ok(target)),
            );
        }
    }
    rec.tally("sum_of_two_points", abel)
        .tally("translation_recheck", translation)
        .tally("severi_limit_curves", limits)
}

fn lattice_suite() -> Record {
    let class = |lat, name| named_class(lat, name).ok();
    let pair = |lat, a, b| match (class(lat, a), class(lat, b)) {
        (Some(x), Some(y)) => x.pairing(&y).unwrap_or(i64::MIN),
        _ => i64::MIN,
    };
    let genus = |lat, a| class(lat, a).and_then(|c| c.adjunction_genus().ok()).unwrap_or(i64::MIN);
    let sym = Lattice::Sym2E;
    let ruled = Lattice::RuledR;
    let mut ck = Tally::default();
    for k in 2..=100 {
        ck.check(pair(sym, NamedClass::Ck { k }, NamedClass::Diagonal) == 2 * k);
        ck.check(pair(sym, NamedClass::Ck { k }, NamedClass::Section) == k - 1);
    }
    let mut l0 = Tally::default();
    for n in 1..=100 {
        l0.check(pair(ruled, NamedClass::NuL0 { n }, NamedClass::NuL0 { n }) == 2 * n);
        l0.check(pair(ruled, NamedClass::NuL0 { n }, NamedClass::Fiber) == 1);
        l0.check(genus(ruled, NamedClass::NuL0 { n }) == 1);
    }
    suite("lattice")
        .exact("section_square", pair(sym, NamedClass::Section, NamedClass::Section), 1)
        .exact("diagonal_fiber", pair(sym, NamedClass::Diagonal, NamedClass::Fiber), 4)
        .exact("diagonal_genus", genus(sym, NamedClass::Diagonal), 1)
        .exact("fiber_genus", genus(sym, NamedClass::Fiber), 0)
        .tally("ck_pairings", ck)
        .tally("polarization_pairings", l0)
}

fn duality_suite() -> Record {
    let mut dual = Tally::default();
    let mut threshold = Tally::default();
    for p in 2..=60i64 {
        for r in 1..=6i64 {
            for d in 2..=60i64 {
                match duality::cusp_scenario(p, r, d) {
                    Ok(s) => {
                        dual.check(s.rho_dual == p - 1 - r * (r + 2));
                        dual.check(duality::double_dual_degree(p, r, d) == Ok(d));
                    }
                    Err(DualityError::NegativeA { .. }) => {}
                    Err(_) => dual.check(false),
                }
            }
        }
    }
    for r in 1..=6i64 {
        for d in 2..=60i64 {
            threshold.check(duality::p_prime(r, d).is_ok_and(|pp| pp.threshold_ok == (d >= r * (r + 1))));
        }
    }
    let pp = duality::p_prime(2, 6).map(|pp| pp.p_prime).unwrap_or(0);
    let pluecker = duality::pluecker_consistency(1, 2, 5, 6, 3).unwrap_or(false);
    suite("duality")
        .tally("dual_grid", dual)
        .tally("threshold", threshold)
        .exact("p_prime_2_6", pp, 10)
        .criterion("pluecker_1_2_5_6_3", i64::from(pluecker), 1, pluecker)
}

fn strata_suite() -> Record {
    let codim = |p, k| {
        bn::gonality_strata(p)
            .ok()
            .and_then(|s| s.strata.iter().find(|x| x.k == k).map(|x| x.codim))
            .unwrap_or(-1)
    };
    suite("strata")
        .exact("p8_k4_codim", codim(8, 4), 2)
        .exact("p9_k5_codim", codim(9, 5), 1)
        .exact("p9_k4_codim", codim(9, 4), 3)
}

fn coherence_suite() -> Record {
    let mut pencils = Tally::default();
    for p in 2..=60i64 {
        for k in 2..=12i64 {
            for delta in 0..=p - 2 {
                let general = bn::thm56_bound(p, 1, k, delta);
                pencils.check(general.is_ok() && general == bn::nodal_pencil_nonempty(p, delta, k));
            }
        }
    }
    let mut negative = Tally::default();
    for p in 2..=60i64 {
        for r in 1..=6i64 {
            for d in 2..=60i64 {
                let a_negative = matches!(duality::cusp_scenario(p, r, d), Err(DualityError::NegativeA { .. }));
                negative.check(
                    bn::smooth_locus_verdict(p, r, d)
                        .is_ok_and(|v| a_negative == (v.status == VerdictStatus::EmptyByRho)),
                );
            }
        }
    }
    suite("coherence").tally("pencil_bounds_agree", pencils).tally("negative_a_iff_empty_by_rho", negative)
}
