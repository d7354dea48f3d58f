//! Integer-grid checks of the computational lemmas.
//!
//! Each lemma instance is certified with [`check_le`]. Thresholds are probed just below the
//! stated bound: a probe the lemma's argument needs to reverse fails the report when it does
//! not, other probes are recorded as information.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::ops::RangeInclusive;
use std::sync::Mutex;

use num_bigint::BigInt;
use num_traits::One;
use rayon::prelude::*;

use super::report::{check_le, CheckPoint, CheckReport, Status};
use super::VerifyError;
use crate::catalog::catalog;
use crate::estimates::{certified_ceil, f_expr, s_expr, sporadic_f};
use crate::exactnum::exact::{big_pow, factorial, pow_u64};
use crate::exactnum::format::sci_bigint;
use crate::exactnum::{compare_with, eval_ln, BoundExpr, CompareError, CompareOptions, RealInterval};

pub const LEMMA_IDS: &[&str] = &[
    "A1a", "A1b", "A1c", "A1d", "A2a", "A2b", "A3a", "A3b", "A3c", "A5", "A6a", "A6b", "A6c", "A6d", "A6e",
    "A7a", "A7b", "A7c", "A7d", "A8", "A9a", "A9b", "A10",
];

/// Check a lemma on its default domain.
pub fn verify_lemma(id: &str) -> Result<CheckReport, VerifyError> {
    verify_lemma_with(id, None)
}

/// Check a lemma, replacing the range of its main variable (and of the second variable of the
/// two-dimensional grids). Ranges are clamped to each lemma's hypotheses.
pub fn verify_lemma_with(id: &str, range: Option<RangeInclusive<u64>>) -> Result<CheckReport, VerifyError> {
    let key = LEMMA_IDS
        .iter()
        .find(|l| l.eq_ignore_ascii_case(id.trim()))
        .ok_or_else(|| VerifyError::UnknownLemma(id.to_string()))?;
    let ctx = Ctx {
        opts: CompareOptions::from_env(),
        range,
    };
    Ok(match *key {
        "A1a" => a1a(&ctx),
        "A1b" => a1b(&ctx),
        "A1c" => a1c(&ctx),
        "A1d" => a1d(&ctx),
        "A2a" => a2a(&ctx),
        "A2b" => a2b(&ctx),
        "A3a" => a3(&ctx, "A3a", 0, 10, Expect::Reversed),
        "A3b" => a3(&ctx, "A3b", 2, 14, Expect::Reversed),
        "A3c" => a3(&ctx, "A3c", 1, 13, Expect::Optional),
        "A5" => a5(&ctx)?,
        "A6a" => a6a(&ctx),
        "A6b" => a6b(&ctx),
        "A6c" => a6c(&ctx),
        "A6d" => a6d(&ctx),
        "A6e" => a6e(&ctx),
        "A7a" => a7a(&ctx),
        "A7b" => a7b(&ctx),
        "A7c" => a7c(&ctx),
        "A7d" => a7d(&ctx),
        "A8" => a8(&ctx),
        "A9a" => a9a(&ctx),
        "A9b" => a9b(&ctx),
        "A10" => a10(&ctx),
        _ => unreachable!("id taken from LEMMA_IDS"),
    })
}

struct Ctx {
    opts: CompareOptions,
    range: Option<RangeInclusive<u64>>,
}

impl Ctx {
    /// The override range intersected with `lo..=hi_max`, or `lo..=default_hi`.
    fn span(&self, lo: u64, default_hi: u64) -> RangeInclusive<u64> {
        match &self.range {
            Some(r) => (*r.start()).max(lo)..=*r.end(),
            None => lo..=default_hi,
        }
    }

    fn describe(r: &RangeInclusive<u64>) -> String {
        format!("{}..{}", r.start(), r.end())
    }
}

struct Ineq {
    input: String,
    lhs: BoundExpr,
    rhs: BoundExpr,
}

fn ineq(input: String, lhs: BoundExpr, rhs: BoundExpr) -> Ineq {
    Ineq { input, lhs, rhs }
}

fn certify(ineqs: Vec<Ineq>, opts: &CompareOptions) -> Vec<CheckPoint> {
    ineqs
        .into_par_iter()
        .map(|q| check_le(q.input, &q.lhs, &q.rhs, opts))
        .collect()
}

/// Precision of the cached logarithm enclosures.
const MEMO_BITS: u32 = 128;

/// Memoized enclosures of `ln e` for the factors that grid lemmas share.
struct LnMemo {
    map: Mutex<HashMap<BoundExpr, Option<RealInterval>>>,
}

impl LnMemo {
    fn new() -> LnMemo {
        LnMemo {
            map: Mutex::new(HashMap::new()),
        }
    }

    fn ln(&self, e: &BoundExpr) -> Option<RealInterval> {
        if let Some(v) = self.map.lock().expect("memo lock").get(e) {
            return v.clone();
        }
        let v = eval_ln(e, 1, MEMO_BITS).ok();
        self.map.lock().expect("memo lock").insert(e.clone(), v.clone());
        v
    }

    fn term(&self, t: &Term) -> Option<RealInterval> {
        match t {
            Term::E(e) => self.ln(e),
            Term::Pow(e, k) => Some(self.ln(e)?.mul(&RealInterval::from_i64(*k, MEMO_BITS))),
            Term::S(ks) => {
                // ln s(k) = ln 2 + L (2 L / ln 2 + 1) with L = ln k = sum of ln k_i.
                let mut l = RealInterval::from_i64(0, MEMO_BITS);
                for k in ks {
                    l = l.add(&self.ln(&int(*k))?);
                }
                let ln2 = self.ln(&int(2))?;
                let inner = l.scale_pow2(1).div(&ln2).ok()?.add(&RealInterval::from_i64(1, MEMO_BITS));
                Some(ln2.add(&l.mul(&inner)))
            }
        }
    }

    fn sum(&self, ts: &[Term]) -> Option<RealInterval> {
        ts.iter()
            .try_fold(RealInterval::from_i64(0, MEMO_BITS), |acc, t| Some(acc.add(&self.term(t)?)))
    }
}

/// A positive factor of one side of a product inequality.
enum Term {
    E(BoundExpr),
    /// `e^k`.
    Pow(BoundExpr, i64),
    /// `s` at the product of the listed integers.
    S(Vec<u64>),
}

/// A product inequality with its factorization; the factors must multiply to the sides.
struct Factored {
    full: Ineq,
    lhs: Vec<Term>,
    rhs: Vec<Term>,
}

/// Decide from sums of cached logarithm enclosures where they separate; otherwise run the full
/// comparison, which also produces the values recorded on failures.
fn certify_factored(items: Vec<Factored>, opts: &CompareOptions) -> Vec<CheckPoint> {
    let memo = LnMemo::new();
    items
        .into_par_iter()
        .map(|it| {
            if let (Some(l), Some(r)) = (memo.sum(&it.lhs), memo.sum(&it.rhs)) {
                if l.certified_cmp(&r) == Some(Ordering::Less) {
                    return CheckPoint::new(it.full.input, Status::Pass);
                }
            }
            check_le(it.full.input, &it.full.lhs, &it.full.rhs, opts)
        })
        .collect()
}

fn factored(input: String, lhs: Vec<Term>, rhs: Vec<Term>) -> Factored {
    let product = |ts: &[Term]| {
        ts.iter()
            .map(|t| match t {
                Term::E(e) => e.clone(),
                Term::Pow(e, k) => e.powi(*k),
                Term::S(ks) => s(ks.iter().product()),
            })
            .reduce(|a, b| a.mul(&b))
            .expect("at least one factor")
    };
    Factored {
        full: ineq(input, product(&lhs), product(&rhs)),
        lhs,
        rhs,
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Expect {
    /// The argument for the lemma implies the reverse inequality here.
    Reversed,
    /// Nothing is implied; the outcome is recorded.
    Optional,
}

fn probe(q: Ineq, expect: Expect, opts: &CompareOptions) -> CheckPoint {
    let input = format!("{} (below threshold)", q.input);
    match compare_with(&q.lhs, &q.rhs, 1, opts) {
        Ok(c) => {
            let values = |p: CheckPoint| match (&c.left, &c.right) {
                (Some(l), Some(r)) => p.values(l.to_string(), r.to_string()),
                _ => p,
            };
            if c.ordering == Ordering::Greater {
                values(CheckPoint::new(input, Status::Pass)).note("reversed below the threshold")
            } else if expect == Expect::Reversed {
                values(CheckPoint::new(input, Status::Fail)).note("expected reversal, inequality holds")
            } else {
                values(CheckPoint::new(input, Status::Info)).note("inequality still holds below the threshold")
            }
        }
        Err(CompareError::Undecidable { left, right, .. }) => {
            CheckPoint::new(input, Status::Undecidable).values(left, right)
        }
        Err(CompareError::Domain(m)) => CheckPoint::new(input, Status::Undecidable).note(m),
    }
}

fn report(target: &str, domain: String, points: Vec<CheckPoint>) -> CheckReport {
    CheckReport::new(target, domain, points)
}

fn int(v: u64) -> BoundExpr {
    BoundExpr::int(v)
}

fn big(v: &BigInt) -> BoundExpr {
    BoundExpr::big(v)
}

/// `f` at an arbitrary integer.
fn f_big(v: &BigInt) -> BoundExpr {
    f_expr().substitute(&big(v))
}

fn f(v: u64) -> BoundExpr {
    f_big(&BigInt::from(v))
}

/// `f~`: 60 at 2, `f` elsewhere.
fn ft_big(v: &BigInt) -> BoundExpr {
    if *v == BigInt::from(2) {
        int(60)
    } else {
        f_big(v)
    }
}

fn ft(v: u64) -> BoundExpr {
    ft_big(&BigInt::from(v))
}

fn s(v: u64) -> BoundExpr {
    s_expr().at(v)
}

fn g(v: u64) -> BoundExpr {
    int(v + 3).gamma()
}

fn fact(t: u64) -> BoundExpr {
    big(&factorial(t))
}

fn c1025() -> BoundExpr {
    BoundExpr::decimal("1.025")
}

fn a1a(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(2, 64);
    let mut v = Vec::new();
    for x in r.clone() {
        for y in r.clone() {
            v.push(factored(format!("x={x}, y={y}"), vec![Term::E(ft(x)), Term::E(ft(y))], vec![Term::E(ft(x * y))]));
        }
    }
    let d = Ctx::describe(&r);
    report("A1a", format!("x, y in {d}"), certify_factored(v, &ctx.opts))
}

fn a1b(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(2, 64);
    let mut v = Vec::new();
    for x in r.clone() {
        for t in 1..=12u64 {
            let xt = pow_u64(x, t);
            let lhs = vec![Term::E(fact(t)), Term::Pow(ft(x), t as i64)];
            v.push(factored(format!("x={x}, t={t}"), lhs, vec![Term::E(ft_big(&xt))]));
        }
    }
    report("A1b", format!("x in {}, t in 1..12", Ctx::describe(&r)), certify_factored(v, &ctx.opts))
}

fn a1c(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(2, 64);
    let v = r
        .clone()
        .map(|y| ineq(format!("y={y}"), c1025().mul(&ft(4)).mul(&ft(y)), ft(4 * y)))
        .collect();
    report("A1c", format!("y in {}", Ctx::describe(&r)), certify(v, &ctx.opts))
}

fn a1d(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(2, 64);
    let v = r
        .clone()
        .map(|t| {
            let lhs = c1025().mul(&ft(4)).powi(t as i64).mul(&fact(t));
            ineq(format!("t={t}"), lhs, ft_big(&pow_u64(4, t)))
        })
        .collect();
    report("A1d", format!("t in {}", Ctx::describe(&r)), certify(v, &ctx.opts))
}

/// `0!, 1!, ..., max!`.
fn factorials(max: u64) -> Vec<BigInt> {
    let mut v = Vec::with_capacity(max as usize + 1);
    v.push(BigInt::one());
    for k in 1..=max {
        let next = &v[k as usize - 1] * BigInt::from(k);
        v.push(next);
    }
    v
}

fn exact_point(input: String, lhs: &BigInt, rhs: &BigInt) -> CheckPoint {
    if lhs <= rhs {
        CheckPoint::new(input, Status::Pass)
    } else {
        CheckPoint::new(input, Status::Fail)
            .values(sci_bigint(lhs, 12), sci_bigint(rhs, 12))
            .note("exact integers, shown to 12 figures")
    }
}

fn a2a(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(2, 64);
    let hi = *r.end();
    let fs = factorials(hi * hi + 2);
    let pairs: Vec<(u64, u64)> = r.clone().flat_map(|x| r.clone().map(move |y| (x, y))).collect();
    let points = pairs
        .par_iter()
        .map(|&(x, y)| {
            let lhs = &fs[x as usize + 2] * &fs[y as usize + 2];
            exact_point(format!("x={x}, y={y}"), &lhs, &fs[(x * y) as usize + 2])
        })
        .collect();
    report("A2a", format!("x, y in {}, exact", Ctx::describe(&r)), points)
}

fn a2b(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(3, 64);
    let mut v = Vec::new();
    for x in r.clone() {
        for t in 1..=12u64 {
            let xt = pow_u64(x, t);
            let rhs = big(&(xt + 3)).gamma();
            v.push(ineq(format!("x={x}, t={t}"), fact(t).mul(&g(x).powi(t as i64)), rhs));
        }
    }
    report("A2b", format!("x in {}, t in 1..12", Ctx::describe(&r)), certify(v, &ctx.opts))
}

/// `x^k f(x) <= g(x)` from `threshold` on, with probes below it.
fn a3(ctx: &Ctx, id: &str, k: i64, threshold: u64, expect: Expect) -> CheckReport {
    let lhs = |x: u64| int(x).powi(k).mul(&f(x));
    let r = ctx.span(threshold, 64);
    let v = r.clone().map(|x| ineq(format!("x={x}"), lhs(x), g(x))).collect();
    let mut points = certify(v, &ctx.opts);
    let below = threshold - 1;
    points.push(probe(ineq(format!("x={below}"), lhs(below), g(below)), expect, &ctx.opts));
    if expect == Expect::Optional {
        // Record where the reversal actually starts.
        let mut x = below;
        while x > 2 && points.last().map(|p| p.status) == Some(Status::Info) {
            x -= 1;
            points.push(probe(ineq(format!("x={x}"), lhs(x), g(x)), Expect::Optional, &ctx.opts));
        }
    }
    report(id, format!("x in {} plus probes", Ctx::describe(&r)), points)
}

/// `(log 3 - 1) / 2`.
pub(crate) fn beta_a5() -> BoundExpr {
    int(3).log2().sub(&int(1)).div(&int(2))
}

fn a5(ctx: &Ctx) -> Result<CheckReport, VerifyError> {
    let r = ctx.span(2, 12);
    let lhs = |x: u64, y: &BigInt| int(2).mul(&big(&pow_u64(2, x * x + x))).mul(&f_big(y));
    let rhs = |x: u64, y: &BigInt| f_big(&(pow_u64(2, x) * y));
    let mut v = Vec::new();
    let mut probes = Vec::new();
    for x in r.clone() {
        let y0 = certified_ceil(&int(2).pow(&beta_a5().mul(&int(x))))?.max(BigInt::from(2));
        let ys = [
            y0.clone(),
            &y0 + 1u32,
            &y0 + 2u32,
            &y0 * 2u32,
            &y0 * 10u32,
            &y0 * 1000u32,
        ];
        for y in ys {
            v.push(ineq(format!("x={x}, y={y}"), lhs(x, &y), rhs(x, &y)));
        }
        let below = &y0 - 1u32;
        if below >= BigInt::from(2) {
            probes.push(ineq(format!("x={x}, y={below}"), lhs(x, &below), rhs(x, &below)));
        }
    }
    let mut points = certify(v, &ctx.opts);
    points.extend(probes.into_par_iter().map(|q| probe(q, Expect::Optional, &ctx.opts)).collect::<Vec<_>>());
    Ok(report(
        "A5",
        format!("x in {}, y = ceil(2^(beta x)) and larger multiples", Ctx::describe(&r)),
        points,
    ))
}

struct Tabulated {
    name: String,
    a1: u64,
}

fn tabulated_groups() -> Vec<Tabulated> {
    catalog()
        .ta6
        .iter()
        .map(|row| Tabulated {
            name: row.group.clone(),
            a1: row.a1,
        })
        .collect()
}

fn big_f(group: &str, n: u64) -> BoundExpr {
    sporadic_f(group, n).expect("tabulated groups have F(G, n)")
}

const A6_GROUPS: &str = "the five tabulated groups";

fn a6a(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(2, 64);
    let gs = tabulated_groups();
    let mut v = Vec::new();
    // The inequality is symmetric under (G1, n) <-> (G2, m); each unordered pair is checked once.
    for (i, g1) in gs.iter().enumerate() {
        for (j, g2) in gs.iter().enumerate().skip(i) {
            for n in r.clone().filter(|&n| n >= g1.a1) {
                for m in r.clone().filter(|&m| m >= g2.a1 && (i != j || m >= n)) {
                    let lhs = vec![Term::E(big_f(&g1.name, n)), Term::E(big_f(&g2.name, m))];
                    let input = format!("G1={}, n={n}, G2={}, m={m}", g1.name, g2.name);
                    v.push(factored(input, lhs, vec![Term::E(f(n * m))]));
                }
            }
        }
    }
    let d = format!("{A6_GROUPS}, n, m in {} with F1(n), F2(m) != 1", Ctx::describe(&r));
    report("A6a", d, certify_factored(v, &ctx.opts))
}

fn a6b(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(2, 64);
    let mut v = Vec::new();
    for g1 in tabulated_groups() {
        for n in r.clone() {
            for t in 2..=12u64 {
                let lhs = vec![Term::E(fact(t)), Term::Pow(big_f(&g1.name, n), t as i64)];
                let rhs = vec![Term::E(f_big(&pow_u64(n, t)))];
                v.push(factored(format!("G1={}, n={n}, t={t}", g1.name), lhs, rhs));
            }
        }
    }
    report("A6b", format!("{A6_GROUPS}, n in {}, t in 2..12", Ctx::describe(&r)), certify_factored(v, &ctx.opts))
}

fn a6c(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(2, 64);
    let rm = ctx.span(4, 64);
    let mut v = Vec::new();
    for g1 in tabulated_groups() {
        for n in r.clone() {
            for m in rm.clone() {
                let lhs = vec![Term::E(f(m)), Term::E(big_f(&g1.name, n))];
                v.push(factored(format!("G1={}, n={n}, m={m}", g1.name), lhs, vec![Term::E(f(n * m))]));
            }
        }
    }
    let d = format!("{A6_GROUPS}, n in {}, m in {}", Ctx::describe(&r), Ctx::describe(&rm));
    report("A6c", d, certify_factored(v, &ctx.opts))
}

fn a6d(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(2, 64);
    let mut v = Vec::new();
    for g1 in tabulated_groups() {
        let co1 = g1.name == ".1";
        for n in r.clone().filter(|&n| !(co1 && n <= 37)) {
            for m in r.clone() {
                let lhs = vec![Term::E(ft(m)), Term::E(big_f(&g1.name, n))];
                v.push(factored(format!("G1={}, n={n}, m={m}", g1.name), lhs, vec![Term::E(f(n * m))]));
            }
        }
    }
    let d = format!("{A6_GROUPS}, n, m in {}, excluding G1 = .1 with n <= 37", Ctx::describe(&r));
    report("A6d", d, certify_factored(v, &ctx.opts))
}

fn a6e(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(2, 64);
    let mut v = Vec::new();
    for g1 in tabulated_groups() {
        for n in r.clone() {
            let lhs = c1025().mul(&f(4)).mul(&big_f(&g1.name, n));
            v.push(ineq(format!("G1={}, n={n}", g1.name), lhs, f(4 * n)));
        }
    }
    report("A6e", format!("{A6_GROUPS}, n in {}", Ctx::describe(&r)), certify(v, &ctx.opts))
}

fn a7a(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(2, 200);
    let v = r
        .clone()
        .map(|n| {
            let e = int(2).mul(&int(n).log3()).add(&BoundExpr::decimal("3.5"));
            let lhs = BoundExpr::decimal("4.796").mul(&int(n).pow(&e));
            ineq(format!("n={n}"), lhs, f(n))
        })
        .collect();
    report("A7a", format!("n in {}", Ctx::describe(&r)), certify(v, &ctx.opts))
}

fn a7b(ctx: &Ctx) -> CheckReport {
    let side = |n: u64| {
        let rhs = int(n).pow(&int(2).mul(&int(n).log2()).add(&int(5)));
        ineq(format!("n={n}"), int(n).mul(&f(n)), rhs)
    };
    let r = ctx.span(4, 200);
    let mut points = certify(r.clone().map(side).collect(), &ctx.opts);
    points.push(probe(side(3), Expect::Optional, &ctx.opts));
    report("A7b", format!("n in {} plus probe", Ctx::describe(&r)), points)
}

fn a7c(ctx: &Ctx) -> CheckReport {
    let side = |n: u64| ineq(format!("n={n}"), int(n).mul(&f(n)), s(n));
    let r = ctx.span(37, 200);
    let mut points = certify(r.clone().map(side).collect(), &ctx.opts);
    points.push(probe(side(36), Expect::Reversed, &ctx.opts));
    report("A7c", format!("n in {} plus probe", Ctx::describe(&r)), points)
}

fn a7d(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(2, 200);
    let mut v = Vec::new();
    // Symmetric in n and m.
    for n in r.clone() {
        for m in r.clone().filter(|&m| m >= n) {
            let lhs = vec![Term::S(vec![n]), Term::S(vec![m])];
            v.push(factored(format!("n={n}, m={m}"), lhs, vec![Term::S(vec![n, m])]));
        }
    }
    report("A7d", format!("n <= m in {}", Ctx::describe(&r)), certify_factored(v, &ctx.opts))
}

fn a8(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(128, 256);
    let mut groups: Vec<(String, String)> = tabulated_groups().into_iter().map(|g| (g.name.clone(), g.name)).collect();
    // Every other sporadic group has the same F; M11 stands in for all of them.
    groups.push(("M11".into(), "other sporadic (M11)".into()));
    let mut v = Vec::new();
    for (name, label) in &groups {
        for m in r.clone() {
            for n in 2..=16u64 {
                let lhs = vec![Term::S(vec![m]), Term::E(big_f(name, n))];
                v.push(factored(format!("H={label}, m={m}, n={n}"), lhs, vec![Term::S(vec![n, m])]));
            }
        }
    }
    let d = format!("five tabulated groups and the generic sporadic F, m in {}, n in 2..16", Ctx::describe(&r));
    report("A8", d, certify_factored(v, &ctx.opts))
}

fn a9a(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(13, 64);
    let hi = *r.end();
    let fs = factorials(hi * 12 + 2);
    let pairs: Vec<(u64, u64)> = r.clone().flat_map(|n| (1..=12u64).map(move |t| (n, t))).collect();
    let points = pairs
        .par_iter()
        .map(|&(n, t)| {
            let lhs = &fs[t as usize] * big_pow(&fs[n as usize + 2], t);
            exact_point(format!("n={n}, t={t}"), &lhs, &fs[(n * t) as usize + 2])
        })
        .collect();
    report("A9a", format!("n in {}, t in 1..12, exact", Ctx::describe(&r)), points)
}

fn a9b(ctx: &Ctx) -> CheckReport {
    let r = ctx.span(13, 64);
    let hi = *r.end();
    let fs = factorials(2 * hi + 2);
    let pairs: Vec<(u64, u64)> = r.clone().flat_map(|n| r.clone().map(move |m| (n, m))).collect();
    let points = pairs
        .par_iter()
        .map(|&(n, m)| {
            let lhs = &fs[n as usize + 2] * &fs[m as usize + 2];
            exact_point(format!("n={n}, m={m}"), &lhs, &fs[(n + m) as usize + 2])
        })
        .collect();
    report("A9b", format!("n, m in {}, exact", Ctx::describe(&r)), points)
}

/// Values of `a` swept by the A10 check: small integers, the printed ceilings and powers of
/// ten up to `10^12`.
pub(crate) fn a10_grid() -> Vec<BigInt> {
    let mut v: Vec<BigInt> = (1..=10u64).chain([12, 15, 20, 30, 50, 60, 100, 1000, 2520, 51840]).map(BigInt::from).collect();
    v.extend(catalog().primitive.iter().filter_map(|row| row.t_r.as_integer()));
    v.extend((6..=12).map(|k| pow_u64(10, k)));
    v.sort();
    v.dedup();
    v
}

/// Scan `F(m) = a^m m! / (b m + 2)!` for `m = 1..=m_max`. Returns the first `m` with
/// `F(m) < 1` followed by a later `m'` with `F(m') >= 1`, if any.
pub(crate) fn a10_counterexample(a: &BigInt, b: u64, m_max: u64) -> Option<(u64, u64)> {
    // F(m) = num / den, kept unreduced.
    let mut num = a.clone();
    let mut den = factorial(b + 2);
    let mut first_below = None;
    for m in 1..=m_max {
        if m > 1 {
            num *= a * BigInt::from(m);
            for j in (b * (m - 1) + 3)..=(b * m + 2) {
                den *= BigInt::from(j);
            }
        }
        let below = num < den;
        match (below, first_below) {
            (true, None) => first_below = Some(m),
            (false, Some(k)) => return Some((k, m)),
            _ => {}
        }
    }
    None
}

fn a10(ctx: &Ctx) -> CheckReport {
    let m_max = ctx.range.as_ref().map_or(200, |r| *r.end());
    let cases: Vec<(BigInt, u64)> = a10_grid().into_iter().flat_map(|a| (1..=12u64).map(move |b| (a.clone(), b))).collect();
    let points = cases
        .par_iter()
        .map(|(a, b)| {
            let input = format!("a={a}, b={b}");
            match a10_counterexample(a, *b, m_max) {
                None => CheckPoint::new(input, Status::Pass),
                Some((k, m)) => CheckPoint::new(input, Status::Fail)
                    .values(format!("F({k}) < 1"), format!("F({m}) >= 1"))
                    .note("F = a^m m!/(bm+2)!, exact"),
            }
        })
        .collect();
    report("A10", format!("a in a grid up to 10^12, b in 1..12, m in 1..{m_max}"), points)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a10_counterexamples_found() {
        assert_eq!(a10_counterexample(&BigInt::from(2), 1, 200), Some((1, 6)));
        assert_eq!(a10_counterexample(&BigInt::from(60), 2, 200), None);
        assert_eq!(a10_counterexample(&BigInt::from(2520), 3, 200), None);
    }

    #[test]
    fn a3a_threshold_probe_reverses() {
        let r = verify_lemma("A3a").unwrap();
        assert!(r.is_clean());
        let last = r.points.last().unwrap();
        assert_eq!(last.input, "x=9 (below threshold)");
        assert_eq!(last.status, Status::Pass);
    }

    #[test]
    fn exact_lemma_at_corner() {
        let r = verify_lemma_with("A9b", Some(13..=13)).unwrap();
        assert_eq!(r.points.len(), 1);
        assert_eq!(r.points[0].status, Status::Pass);
        assert!(matches!(verify_lemma("A4"), Err(VerifyError::UnknownLemma(_))));
    }
}
