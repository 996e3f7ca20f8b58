//! One function per subcommand, each returning its records.

use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde_json::{json, Value};

use severi_bn::alpha::{self, AlphaVector};
use severi_bn::bn::{self, Ambient};
use severi_bn::duality;
use severi_bn::elliptic::{self, Curve, DivisorClass, PairKind};
use severi_bn::lattice::{Lattice, NamedClass, NsClass};

use crate::curve_file::CurveFile;
use crate::record::{point_value, Record};
use crate::selftest;
use crate::{AlphaCmd, BnCmd, CliError, Command, DualCmd, EcCmd, LatticeCmd};

type Result<T> = std::result::Result<T, CliError>;

const MAX_TABLE_ROWS: u64 = 1_000_000;

pub fn dispatch(command: Command) -> Result<Vec<Record>> {
    match command {
        Command::Bn(BnCmd::Verdict { p, r, d }) => Ok(vec![bn_verdict(p, r, d)?]),
        Command::Bn(BnCmd::Dims { p, delta, r, d }) => Ok(vec![bn_dims(p, delta, r, d)?]),
        Command::Bn(BnCmd::Strata { p }) => Ok(vec![bn_strata(p)?]),
        Command::Bn(BnCmd::Table { p_range, r_range, d_range, .. }) => bn_table(p_range, r_range, d_range),
        Command::Alpha(AlphaCmd::Base { n, k }) => Ok(vec![alpha_base(n, k)?]),
        Command::Alpha(AlphaCmd::Enum { n, delta, cap }) => Ok(vec![alpha_enum(n, delta, cap)?]),
        Command::Alpha(AlphaCmd::Walk { n, k }) => Ok(vec![alpha_walk(n, k)?]),
        Command::Ec(EcCmd::Check { q, a, b }) => Ok(vec![ec_check(q, a, b)?]),
        Command::Ec(EcCmd::Limit { file }) => {
            let text = std::fs::read_to_string(&file).map_err(|source| CliError::Io { path: file.clone(), source })?;
            Ok(vec![ec_limit(&CurveFile::parse(&text)?)?])
        }
        Command::Lattice(LatticeCmd::Pair { first, second }) => Ok(vec![lattice_pair(&first, &second)?]),
        Command::Dual(DualCmd::Scenario { p, r, d }) => Ok(vec![dual_scenario(p, r, d)?]),
        Command::Selftest => Ok(selftest::run_all()),
    }
}

pub fn bn_verdict(p: i64, r: i64, d: i64) -> Result<Record> {
    let v = bn::smooth_locus_verdict(p, r, d)?;
    let mut rec = Record::new("bn verdict")
        .input("p", p)
        .input("r", r)
        .input("d", d)
        .output("rho", bn::rho(p, r, d)?)
        .output("status", v.status.as_str())
        .output("expected_dim", v.expected_dim);
    if let Some(trace) = bn::appendix_bound(p, r, d)? {
        rec = rec.output("appendix", trace);
    }
    for reason in &v.reasons {
        rec = rec.criterion(&reason.name, reason.lhs, reason.rhs, reason.holds);
    }
    Ok(rec)
}

pub fn bn_dims(p: i64, delta: i64, r: i64, d: i64) -> Result<Record> {
    let params = bn::BnParams::new(p, r, d, delta)?;
    let g = params.g();
    let bound = bn::thm56_bound(p, r, d, delta)?;
    Ok(Record::new("bn dims")
        .input("p", p)
        .input("delta", delta)
        .input("r", r)
        .input("d", d)
        .output("g", g)
        .output("rho", bn::rho(g, r, d)?)
        .output("expected_dim_linear", bn::expected_dim_bn_locus(p, delta, r, d, Ambient::Linear)?)
        .output("expected_dim_continuous", bn::expected_dim_bn_locus(p, delta, r, d, Ambient::Continuous)?)
        .output("alpha", bound.alpha)
        .criterion("nodal_bound", delta, bound.rhs, bound.holds))
}

pub fn bn_strata(p: i64) -> Result<Record> {
    let s = bn::gonality_strata(p)?;
    Ok(Record::new("bn strata")
        .input("p", p)
        .output("k_gen", s.k_gen)
        .output("c_gen", s.c_gen)
        .output("strata", &s.strata))
}

pub fn bn_table(
    p_range: RangeInclusive<i64>,
    r_range: RangeInclusive<i64>,
    d_range: RangeInclusive<i64>,
) -> Result<Vec<Record>> {
    let len = |r: &RangeInclusive<i64>| (*r.end() as i128 - *r.start() as i128 + 1) as u64;
    let rows = len(&p_range).saturating_mul(len(&r_range)).saturating_mul(len(&d_range));
    if rows > MAX_TABLE_ROWS {
        return Err(CliError::Input(format!("table has {rows} rows, limit is {MAX_TABLE_ROWS}")));
    }
    let mut grid = Vec::with_capacity(rows as usize);
    for p in p_range {
        for r in r_range.clone() {
            for d in d_range.clone() {
                grid.push((p, r, d));
            }
        }
    }
    grid.par_iter().map(|&(p, r, d)| bn_verdict(p, r, d)).collect()
}

fn vector_value(v: &AlphaVector) -> Value {
    Value::from(v.entries().to_vec())
}

pub fn alpha_base(n: usize, k: usize) -> Result<Record> {
    let base = alpha::base_vector(n, k)?;
    let summary = base.vector.validate()?;
    let cap = 2 * k as u64;
    let closed = alpha::delta0_closed_form(n, k);
    Ok(Record::new("alpha base")
        .input("n", n)
        .input("k", k)
        .output("m", base.m)
        .output("t", base.t)
        .output("lambda", base.lambda)
        .output("delta0", base.delta0)
        .output("vector", vector_value(&base.vector))
        .output("g", summary.g)
        .criterion("delta_matches", summary.delta as i64, base.delta0 as i64, summary.delta == base.delta0)
        .criterion("closed_form", base.delta0 as i64, closed as i64, base.delta0 == closed)
        .criterion("cap", base.vector.max_entry() as i64, cap as i64, base.vector.respects_cap(cap)))
}

pub fn alpha_enum(n: usize, delta: usize, cap: Option<u64>) -> Result<Record> {
    let vectors = alpha::enumerate(n, delta, cap)?;
    let values: Vec<Value> = vectors.iter().map(vector_value).collect();
    Ok(Record::new("alpha enum")
        .input("n", n)
        .input("delta", delta)
        .input("cap", cap)
        .output("count", vectors.len())
        .output("vectors", values))
}

pub fn alpha_walk(n: usize, k: usize) -> Result<Record> {
    let steps = alpha::walk(n, k)?;
    let deltas: Vec<usize> = steps.iter().map(AlphaVector::delta).collect();
    let reached = deltas.last().copied().unwrap_or(0);
    let cap = 2 * k as u64;
    let within_cap = steps.iter().filter(|v| v.respects_cap(cap)).count();
    Ok(Record::new("alpha walk")
        .input("n", n)
        .input("k", k)
        .output("deltas", &deltas)
        .output("vectors", steps.iter().map(vector_value).collect::<Vec<_>>())
        .criterion("reaches_top", reached as i64, n as i64 - 1, reached + 1 == n)
        .criterion("cap", within_cap as i64, steps.len() as i64, within_cap == steps.len()))
}

pub fn ec_check(q: u64, a: u64, b: u64) -> Result<Record> {
    let curve = Curve::new(q, a, b)?;
    let n = curve.order();
    let by_sum = curve.order_by_character_sum();
    let trace = q as i64 + 1 - n as i64;
    let (held, total) = selftest::group_law_sample(&curve, 0)?;
    let (gen, ord) = curve.max_order_point();
    Ok(Record::new("ec check")
        .input("q", q)
        .input("a", a)
        .input("b", b)
        .output("order", n)
        .output("max_order_point", point_value(&gen))
        .output("max_point_order", ord)
        .criterion("character_sum", n as i64, by_sum as i64, n == by_sum)
        .criterion("hasse", trace * trace, 4 * q as i64, trace * trace <= 4 * q as i64)
        .criterion("group_axioms", held as i64, total as i64, held == total)
        .criterion("lagrange", (n % ord) as i64, 0, n % ord == 0))
}

pub fn ec_limit(file: &CurveFile) -> Result<Record> {
    let curve = Curve::new(file.q, file.a, file.b)?;
    let alpha = AlphaVector::new(file.alpha.clone())?;
    let e = file.e.to_point()?;
    let target = DivisorClass { degree: alpha.n() as i64, sum: file.target_sum.to_point()? };
    let lc = elliptic::build_limit_curve(&curve, &alpha, &file.levels()?, &e, &target)?;
    let pairs: Vec<Value> = lc
        .pairs
        .iter()
        .map(|pair| {
            json!({
                "level": pair.level,
                "kind": match pair.kind { PairKind::First => "first", PairKind::Second => "second" },
                "points": [point_value(&pair.points.0), point_value(&pair.points.1)],
            })
        })
        .collect();
    let trace: Vec<Value> = lc.trace.support().map(|(p, m)| json!([point_value(p), m])).collect();
    let expected_g = alpha.n() as i64 + 1 - lc.delta as i64;
    Ok(Record::new("ec limit")
        .input("q", file.q)
        .input("a", file.a)
        .input("b", file.b)
        .input("alpha", &file.alpha)
        .input("e", point_value(&e))
        .input("target_sum", point_value(&target.sum))
        .output("delta", lc.delta)
        .output("g", lc.g)
        .output("pairs", pairs)
        .output("trace", trace)
        .criterion("genus", lc.g as i64, expected_g, lc.g as i64 == expected_g))
}

/// `LATTICE:NAME` (e.g. `Sym2E:Ck:3`) or `LATTICE:a,b`.
pub fn parse_class(s: &str) -> Result<NsClass> {
    let (lat, rest) = s
        .split_once(':')
        .ok_or_else(|| CliError::Input(format!("class '{s}' should look like Sym2E:diagonal or RuledR:1,3")))?;
    let lattice: Lattice = lat.parse()?;
    if let Some((a, b)) = rest.split_once(',') {
        let num = |t: &str| t.trim().parse::<i64>().map_err(|_| CliError::Input(format!("bad coordinate '{t}' in '{s}'")));
        return Ok(lattice.class(num(a)?, num(b)?));
    }
    let name: NamedClass = rest.parse()?;
    Ok(severi_bn::lattice::named_class(lattice, name)?)
}

pub fn lattice_pair(first: &str, second: &str) -> Result<Record> {
    let c1 = parse_class(first)?;
    let c2 = parse_class(second)?;
    let pairing = c1.pairing(&c2)?;
    Ok(Record::new("lattice pair")
        .input("first", first)
        .input("second", second)
        .output("lattice", c1.lattice.name())
        .output("first", json!([c1.lattice.name(), c1.a, c1.b]))
        .output("second", json!([c2.lattice.name(), c2.a, c2.b]))
        .output("pairing", pairing)
        .output("first_square", c1.self_intersection())
        .output("second_square", c2.self_intersection())
        .output("first_genus", c1.adjunction_genus()?)
        .output("second_genus", c2.adjunction_genus()?))
}

pub fn dual_scenario(p: i64, r: i64, d: i64) -> Result<Record> {
    let s = duality::cusp_scenario(p, r, d)?;
    let dd = duality::double_dual_degree(p, r, d)?;
    let expected = p - 1 - r * (r + 2);
    let pp = duality::p_prime(r, d)?;
    Ok(Record::new("dual scenario")
        .input("p", p)
        .input("r", r)
        .input("d", d)
        .output("a", s.a)
        .output("d_star", s.d_star)
        .output("rho_dual", s.rho_dual)
        .output("degenerate", s.degenerate)
        .output("p_prime", pp.p_prime)
        .output("threshold", pp.threshold_ok)
        .criterion("rho_dual", s.rho_dual, expected, s.rho_dual == expected)
        .criterion("double_dual", dd, d, dd == d))
}
