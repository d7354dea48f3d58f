//! Acceptance run: one PASS/FAIL line per criterion, then a single assertion over all of them.

use std::cmp::Ordering;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;

use jbounds::catalog::{all_records, catalog, Agreement, GroupKind};
use jbounds::estimates::{extraspecial_aut_orders, f_at, min_n, min_n_tilde};
use jbounds::exactnum::format::sci_rational;
use jbounds::exactnum::{compare_with, eval_interval, BoundExpr, CompareOptions};
use jbounds::jordan::{envelope_check, primitive_ceilings, stable_m, Alpha, BoundTable};
use jbounds::jordan::{closure_table, irreducible_table};
use jbounds::verifier::{check_constant, regenerate_table, verify_lemma, CONSTANT_IDS, TABLE_IDS};

struct Outcome {
    id: u32,
    pass: bool,
    detail: String,
}

fn line(o: &Outcome) -> String {
    format!("criterion {}: {} ({})", o.id, if o.pass { "PASS" } else { "FAIL" }, o.detail)
}

fn within(limit: Duration, t: Instant) -> (bool, String) {
    let e = t.elapsed();
    (e <= limit, format!("{:.2}s of {}s", e.as_secs_f64(), limit.as_secs()))
}

fn c1() -> Outcome {
    let t = Instant::now();
    let opts = CompareOptions::from_env();
    let mut notes = Vec::new();
    let mut ok = true;
    for (k, v) in [(4u64, BigInt::from(59049)), (13, BigInt::from(3).pow(21))] {
        let c = compare_with(&f_at(k), &BoundExpr::big(&v), k, &opts);
        let equal = matches!(&c, Ok(c) if c.ordering == Ordering::Equal);
        ok &= equal;
        notes.push(format!("f({k})={v}:{}", if equal { "equal" } else { "NOT equal" }));
    }
    let f6 = eval_interval(&f_at(6), 6, 128).map(|iv| iv.to_f64_pair());
    let f6_ok = matches!(f6, Ok((lo, hi)) if lo >= 2_067_422.0 && hi <= 2_067_424.0);
    ok &= f6_ok;
    notes.push(format!("f(6) {:?}", f6.ok()));
    let f9 = eval_interval(&f_at(9), 9, 128).map(|iv| iv.midpoint().to_rational());
    let f9_text = f9.as_ref().map(|r| sci_rational(r, 3)).unwrap_or_default();
    ok &= f9_text == "1.35e8";
    notes.push(format!("f(9)~{f9_text}"));
    let (fast, time) = within(Duration::from_secs(1), t);
    notes.push(time);
    Outcome { id: 1, pass: ok && fast, detail: notes.join(", ") }
}

fn alpha_mismatches(table: &BoundTable, printed: impl Fn(u64) -> BigRational) -> Vec<(u64, Alpha, BigInt)> {
    (2..=63)
        .filter_map(|n| {
            let e = table.get(n)?;
            (e.alpha.as_rational() != printed(n)).then(|| (n, e.alpha, e.bound.clone()))
        })
        .collect()
}

fn c2() -> Outcome {
    let t = Instant::now();
    let irr = irreducible_table(63);
    let all = closure_table(&irr, 126);
    let rows = &catalog().alpha;
    let printed = |n: u64, irr: bool| {
        let r = rows.iter().find(|r| r.n == n).expect("printed alpha row");
        if irr { r.alpha_irr.value.clone() } else { r.alpha_all.value.clone() }
    };
    let mut bad = alpha_mismatches(&irr, |n| printed(n, true));
    bad.extend(alpha_mismatches(&all, |n| printed(n, false)));
    let spot = [2u64, 3, 4, 5, 7, 11, 13, 18, 59, 63];
    let spot_ok = bad.iter().all(|(n, _, _)| !spot.contains(n));
    let (fast, time) = within(Duration::from_secs(30), t);
    let list: Vec<String> = bad.iter().map(|(n, a, b)| format!("n={n} alpha={a} bound={b}")).collect();
    Outcome {
        id: 2,
        pass: spot_ok && bad.len() <= 3 && fast,
        detail: format!("{} mismatched cells [{}], spot rows clean={spot_ok}, {time}", bad.len(), list.join("; ")),
    }
}

fn c3() -> Outcome {
    let t = Instant::now();
    let mut ok = true;
    let mut max_rm = 0;
    let mut notes = Vec::new();
    for c in primitive_ceilings() {
        let m = stable_m(c.r, &c.t_r).m_star;
        let fits = m == c.printed_m_r || m + 1 == c.printed_m_r;
        let exact_needed = [2, 3, 8, 12].contains(&c.r);
        ok &= fits && (!exact_needed || m == c.printed_m_r);
        max_rm = max_rm.max(c.r * m);
        notes.push(format!("r={}:{}/{}", c.r, m, c.printed_m_r));
    }
    ok &= max_rm <= 63;
    let (fast, time) = within(Duration::from_secs(5), t);
    Outcome {
        id: 3,
        pass: ok && fast,
        detail: format!("{}, max r*m={max_rm}, {time}", notes.join(" ")),
    }
}

fn c4() -> Outcome {
    let mut bad = Vec::new();
    let mut cells = 0;
    for row in &catalog().extraspecial {
        let o = match extraspecial_aut_orders(row.q, row.a) {
            Ok(o) => o,
            Err(e) => {
                bad.push(format!("n={}: {e}", row.n));
                continue;
            }
        };
        for (label, v, printed) in [("aut_c", &o.aut_c, &row.aut_c), ("aut", &o.aut, &row.aut)] {
            cells += 1;
            if printed.classify(&BigRational::from_integer(v.clone())) != Agreement::Match {
                bad.push(format!("n={} {label}: {v} vs {}", row.n, printed.text));
            }
        }
    }
    Outcome {
        id: 4,
        pass: bad.is_empty(),
        detail: format!("{} of {cells} cells disagree [{}]", bad.len(), bad.join("; ")),
    }
}

fn c5() -> Outcome {
    let t = Instant::now();
    let ids = [
        "A1a", "A1b", "A1c", "A1d", "A2a", "A2b", "A3a", "A3b", "A3c", "A5", "A6a", "A6b", "A6c", "A6d", "A6e", "A7a",
        "A7b", "A7c", "A7d", "A8", "A9a", "A9b",
    ];
    let mut notes = Vec::new();
    let mut ok = true;
    for id in ids {
        match verify_lemma(id) {
            Ok(r) => {
                if r.summary.fail > 0 || r.summary.undecidable > 0 {
                    ok = false;
                    let first = r
                        .points
                        .iter()
                        .find(|p| p.status.as_str() == "fail" || p.status.as_str() == "undecidable")
                        .map(|p| p.input.clone())
                        .unwrap_or_default();
                    notes.push(format!("{id}: {} fail, {} undecidable, first at {first}", r.summary.fail, r.summary.undecidable));
                }
            }
            Err(e) => {
                ok = false;
                notes.push(format!("{id}: {e}"));
            }
        }
    }
    let (fast, time) = within(Duration::from_secs(60), t);
    if notes.is_empty() {
        notes.push("all clean".into());
    }
    Outcome { id: 5, pass: ok && fast, detail: format!("{}, {time}", notes.join("; ")) }
}

fn c6() -> Outcome {
    let sporadic: Vec<_> = all_records().iter().filter(|r| r.kind == GroupKind::Sporadic).collect();
    let mut n_hits = 0;
    let mut t_hits = 0;
    let mut misses = Vec::new();
    let mut m11 = false;
    for r in &sporadic {
        let n = min_n(&r.order).ok();
        let t = min_n_tilde(&r.order).ok();
        let n_ok = n.is_some() && n == r.a2;
        let t_ok = t.is_some() && t == r.min_n_tilde;
        n_hits += n_ok as usize;
        t_hits += t_ok as usize;
        if !n_ok {
            misses.push(format!("{} n: {n:?} vs {:?}", r.name, r.a2));
        }
        if !t_ok {
            misses.push(format!("{} n~: {t:?} vs {:?}", r.name, r.min_n_tilde));
        }
        if r.name == "M11" {
            m11 = n == Some(4) && t == Some(4) && n_ok && t_ok;
        }
    }
    let total = sporadic.len();
    Outcome {
        id: 6,
        pass: total == 26 && n_hits >= 24 && t_hits >= 24 && m11,
        detail: format!("min n {n_hits}/{total}, min n~ {t_hits}/{total}, M11 ok={m11}, misses [{}]", misses.join("; ")),
    }
}

fn c7() -> Outcome {
    let opts = CompareOptions::from_env();
    let mut notes = Vec::new();
    let mut ok = true;
    for id in CONSTANT_IDS {
        match check_constant(id) {
            Ok(r) => {
                ok &= r.is_clean() && r.summary.pass > 0;
                notes.push(format!("{id}: {} pass, {} fail", r.summary.pass, r.summary.fail));
            }
            Err(e) => {
                ok = false;
                notes.push(format!("{id}: {e}"));
            }
        }
    }
    // The coarser interval stated for the acceptance run.
    let b = BoundExpr::int(3).log2().sub(&BoundExpr::int(1)).div(&BoundExpr::int(2));
    let lo = compare_with(&BoundExpr::decimal("0.2924812"), &b, 1, &opts).map(|c| c.ordering);
    let hi = compare_with(&b, &BoundExpr::decimal("0.2924813"), 1, &opts).map(|c| c.ordering);
    let open = matches!((lo, hi), (Ok(Ordering::Less), Ok(Ordering::Less)));
    ok &= open;
    notes.push(format!("(0.2924812, 0.2924813) certified={open}"));
    Outcome { id: 7, pass: ok, detail: notes.join(", ") }
}

fn c8() -> Outcome {
    let irr = irreducible_table(63);
    let all = closure_table(&irr, 126);
    let report = envelope_check(&all);
    let factorial_tail = (64..=126).all(|n| all.get(n).map(|e| e.bound.clone()) == Some(jbounds::exactnum::exact::factorial(n + 2)));
    Outcome {
        id: 8,
        pass: report.is_clean() && report.summary.pass > 0 && factorial_tail,
        detail: format!(
            "{} pass, {} fail, {} undecidable, 64..126 equals (n+2)!={factorial_tail}",
            report.summary.pass, report.summary.fail, report.summary.undecidable
        ),
    }
}

fn peak_rss_kb() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}

fn c9() -> Outcome {
    let t = Instant::now();
    let mut code_table = Vec::new();
    let out_table = {
        let mut err = Vec::new();
        jbounds_cli::run_with(["jbounds", "table", "--id", "all", "--diff"], &mut code_table, &mut err)
    };
    let mut sink = Vec::new();
    let mut err = Vec::new();
    let out_verify = jbounds_cli::run_with(["jbounds", "verify", "--lemma", "all"], &mut sink, &mut err);
    let (fast, time) = within(Duration::from_secs(120), t);
    let rss = peak_rss_kb();
    let small = rss.is_none_or(|kb| kb < 1024 * 1024);
    let completed = (0..=2).contains(&out_table) && (0..=2).contains(&out_verify);
    Outcome {
        id: 9,
        pass: fast && small && completed,
        detail: format!(
            "table exit {out_table} ({} tables), verify exit {out_verify}, {time}, peak rss {} KiB",
            TABLE_IDS.len(),
            rss.map_or("n/a".into(), |v| v.to_string())
        ),
    }
}

#[test]
fn acceptance_criteria() {
    let outcomes = vec![c1(), c2(), c3(), c4(), c5(), c6(), c7(), c8(), c9()];
    for o in &outcomes {
        println!("{}", line(o));
    }
    let failed: Vec<u32> = outcomes.iter().filter(|o| !o.pass).map(|o| o.id).collect();
    assert!(failed.is_empty(), "criteria failing: {failed:?}");
}

#[test]
fn table_ids_cover_the_regenerated_tables() {
    for id in TABLE_IDS {
        assert!(regenerate_table(id).is_ok(), "{id}");
    }
}
