//! Property tests over the exact and certified layers.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use proptest::prelude::*;

use jbounds::catalog::{all_records, lie_lookup, GroupKind, LieFamily, LieTypeId};
use jbounds::estimates::{
    alt_min_degree, extraspecial_aut_orders, f_at, f_expr, min_n, min_n_formula, n_bound, AltRepKind,
};
use jbounds::exactnum::exact::factorial;
use jbounds::exactnum::{certified_compare, eval_interval, exact_value, BoundExpr};
use jbounds::jordan::{alpha_of, default_tables, primitive_ceilings, ratio_f, stable_m};
use jbounds::verifier::verify_lemma;

fn is_power_of_three(v: u64) -> bool {
    let mut v = v;
    while v.is_multiple_of(3) {
        v /= 3;
    }
    v == 1
}

#[test]
fn f_is_exact_exactly_at_powers_of_three() {
    let f = f_expr();
    for n in 1..=200u64 {
        assert_eq!(exact_value(&f, n).is_some(), is_power_of_three(2 * n + 1), "n={n}");
    }
}

#[test]
fn f_is_strictly_increasing() {
    for n in 1..200u64 {
        assert_eq!(certified_compare(&f_at(n), &f_at(n + 1), 1).unwrap(), Ordering::Less, "n={n}");
    }
}

#[test]
fn lie_degree_inequalities() {
    let mut checked = 0;
    for fam in LieFamily::ALL {
        for rank in 1..=30u32 {
            for m in ["2", "3", "4", "5", "8", "9", "27"] {
                let Ok(id) = LieTypeId::parse(&format!("{}{rank}({m})", fam.code())) else { continue };
                let Ok(rec) = lie_lookup(&id) else { continue };
                let (d, b) = (BigRational::from_integer(rec.d.into()), rec.b.clone());
                let two = BigRational::from_integer(2.into());
                assert!(d <= &two * &b * &b + &b, "{}", id.name());
                // C2 = B2 and C1 = A1 share the odd-field exception.
                let c_type = fam == LieFamily::C || (fam == LieFamily::B && rank == 2) || (fam == LieFamily::A && rank == 1);
                let odd_c = c_type && id.field() % 2u32 == BigInt::one();
                if !odd_c {
                    assert!(d <= &b * &b + &two * &b, "{}", id.name());
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 100, "only {checked} ids swept");
}

#[test]
fn exact_orders_round_to_printed_orders() {
    let bad: Vec<String> = all_records()
        .iter()
        .filter(|r| r.paper_order.classify(&BigRational::from_integer(r.order.clone())).is_hard_mismatch())
        .map(|r| format!("{}: {} vs {}", r.name, r.order, r.paper_order.text))
        .collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn min_n_formula_tracks_direct_search() {
    for r in all_records().iter().filter(|r| r.kind == GroupKind::Sporadic) {
        let direct = min_n(&r.order).unwrap();
        let formula = min_n_formula(&r.order).unwrap().value;
        assert!(formula == direct || formula + 1 == direct || direct + 1 == formula, "{}: {direct} vs {formula}", r.name);
    }
}

#[test]
fn alternating_projective_degrees_follow_digit_sum_powers() {
    for m in 8..=64u32 {
        let s = m.count_ones();
        let power = 1u64 << ((m - s - 1) / 2);
        let d = alt_min_degree(m, 1, AltRepKind::ProjectiveNonlifting).unwrap();
        assert!(d.is_multiple_of(power) && d.is_power_of_two(), "m={m}: {d} vs 2^k={power}");
    }
}

const PRIMES_TO_100: [u64; 25] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97];

fn extraspecial_sweep(mut check: impl FnMut(u64, u32)) {
    for q in PRIMES_TO_100 {
        let mut a = 1u32;
        while q.pow(a) <= 10_000 {
            check(q, a);
            a += 1;
        }
    }
}

#[test]
fn extraspecial_central_automorphisms_within_n_bound() {
    extraspecial_sweep(|q, a| {
        let o = extraspecial_aut_orders(q, a).unwrap();
        let ord = certified_compare(&BoundExpr::big(&o.aut_c), &n_bound(&o.d, q), 1).unwrap();
        assert_ne!(ord, Ordering::Greater, "q={q} a={a}");
    });
}

#[test]
fn extraspecial_full_automorphisms_within_odd_bound() {
    let mut bad = Vec::new();
    extraspecial_sweep(|q, a| {
        if q == 2 {
            return;
        }
        let o = extraspecial_aut_orders(q, a).unwrap();
        let d = BoundExpr::big(&o.d);
        let rhs = BoundExpr::int(2).mul(&d.pow(&BoundExpr::int(2).mul(&d.log3()).add(&BoundExpr::int(1))));
        if certified_compare(&BoundExpr::big(&o.aut), &rhs, 1).unwrap() == Ordering::Greater {
            bad.push(format!("q={q} a={a} |Aut E|={}", o.aut));
        }
    });
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn jordan_table_invariants() {
    let (irr, all) = default_tables();
    for n in 2..=63 {
        let (i, g) = (irr.get(n).unwrap(), all.get(n).unwrap());
        assert!(g.bound >= i.bound, "n={n}");
        assert!(g.alpha >= i.alpha, "n={n}");
        if n > 55 {
            assert_eq!(g.bound, i.bound, "n={n}");
        }
    }
    for p in [13u64, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61] {
        let e = irr.get(p).unwrap();
        assert_eq!(e.bound, factorial(p + 2), "p={p}");
        assert_eq!(e.alpha.hundredths(), 0, "p={p}");
    }
    let max_rm = primitive_ceilings().iter().map(|c| c.r * stable_m(c.r, &c.t_r).m_star).max().unwrap();
    assert!(max_rm <= 63);
}

#[test]
fn ratio_stays_below_one_after_stabilizing() {
    let one = BigRational::one();
    for c in primitive_ceilings() {
        let s = stable_m(c.r, &c.t_r);
        for m in (s.m_star + 1)..=200 {
            assert!(ratio_f(m, c.r, &c.t_r) < one, "r={} m={m}", c.r);
        }
    }
}

#[test]
fn lemma_reports_are_deterministic() {
    for id in ["A1a", "A9b", "A10"] {
        assert_eq!(verify_lemma(id).unwrap(), verify_lemma(id).unwrap(), "{id}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn precision_nesting(n in 1u64..200, p in 64u32..512) {
        let f = f_expr();
        let coarse = eval_interval(&f, n, p).unwrap();
        let fine = eval_interval(&f, n, 2 * p).unwrap();
        prop_assert!(coarse.contains(&fine.midpoint()));
    }

    #[test]
    fn compare_is_antisymmetric(a in 1u64..150, b in 1u64..150) {
        let x = f_at(a);
        let y = f_at(b).add(&BoundExpr::frac(1, 3));
        let xy = certified_compare(&x, &y, 1).unwrap();
        let yx = certified_compare(&y, &x, 1).unwrap();
        prop_assert_eq!(xy, yx.reverse());
    }

    #[test]
    fn factorials_are_super_additive(n in 13u64..=64, m in 13u64..=64) {
        prop_assert!(factorial(n + 2) * factorial(m + 2) <= factorial(n + m + 2));
    }

    #[test]
    fn ratio_f_matches_its_definition(m in 1u64..12, r in 2u64..12, t in 1u64..100_000) {
        let t = BigInt::from(t);
        let direct = BigRational::new(t.pow(m as u32) * factorial(m), factorial(r * m + 2));
        prop_assert_eq!(ratio_f(m, r, &t), direct);
    }

    #[test]
    fn alpha_is_monotone_in_the_bound(n in 2u64..64, k1 in 0u64..1_000_000, k2 in 0u64..1_000_000) {
        let base = factorial(n + 2);
        let (lo, hi) = (k1.min(k2), k1.max(k2));
        let a = alpha_of(n, &(&base * (lo + 1))).unwrap();
        let b = alpha_of(n, &(&base * (hi + 1))).unwrap();
        prop_assert!(a <= b);
    }
}
