use jbounds_cli::run_with;
use proptest::prelude::*;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("jbounds").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn bound_for_degree_four_irreducible() {
    let (code, out, _) = run(&["bound", "--n", "4", "--class", "irreducible"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "51840 (r=4, m=1), alpha=0.78");
}

#[test]
fn bound_above_63_is_factorial_with_zero_alpha() {
    let (code, out, _) = run(&["bound", "--n", "64", "--class", "general"]);
    assert_eq!(code, 0);
    assert!(out.contains("(66!)"), "{out}");
    assert!(out.trim_end().ends_with("alpha=0"), "{out}");
    assert!(out.contains("~5.443e92"), "{out}");
}

#[test]
fn brauer_feit_bound_uses_sylow_exponent() {
    let (code, out, _) = run(&["bound", "--n", "2", "--char", "5", "--sylow-exp", "1"]);
    assert_eq!(code, 0);
    // 5^3 * 2^4 * 4!
    assert!(out.starts_with("48000 "), "{out}");
}

#[test]
fn catalog_m11() {
    let (code, out, _) = run(&["catalog", "--group", "M11", "--emit", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["order"], "7920");
    assert_eq!(v["min_n"], 4);
    assert_eq!(v["min_n_printed"], 4);
}

#[test]
fn catalog_lie_and_degree_queries() {
    let (code, out, _) = run(&["catalog", "--lie", "E:8:2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("name: E8(2)"), "{out}");
    let (code, out, _) = run(&["catalog", "--degree", "2", "--char", "5", "--emit", "csv"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("degree,group,class,condition"), "{out}");
    assert_eq!(run(&["catalog"]).0, 3);
}

#[test]
fn mindeg_queries() {
    let (code, out, _) = run(&["mindeg", "--group", "M11", "--char", "2"]);
    assert_eq!((code, out.trim()), (0, "5"));
    assert_eq!(run(&["mindeg", "--group", "NoSuchGroup", "--char", "2"]).0, 3);
}

#[test]
fn diff_exit_code_tracks_hard_mismatches() {
    let (code, out, _) = run(&["table", "--id", "T4.5.4", "--diff"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run(&["table", "--id", "T7.2-min-n-tilde", "--diff"]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("F1"), "{out}");
    let (code, out, _) = run(&["table", "--id", "T12.1", "--emit", "csv"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "4,0.78,0.78"), "{out}");
}

#[test]
fn table_json_parses() {
    let (code, out, _) = run(&["table", "--id", "T12.2", "--emit", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["rows"].as_array().unwrap().len(), 11);
}

#[test]
fn verify_with_range_and_junit() {
    let (code, out, _) = run(&["verify", "--lemma", "A9", "--range", "13..20", "--emit", "junit"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("<testsuite"), "{out}");
    let (code, out, _) = run(&["verify", "--lemma", "A10"]);
    assert_eq!(code, 1, "{out}");
    assert_eq!(run(&["verify", "--lemma", "A1", "--range", "9..2"]).0, 3);
}

#[test]
fn constants_certify() {
    let (code, out, _) = run(&["constants", "--emit", "json"]);
    assert_eq!(code, 0, "{out}");
    serde_json::from_str::<Value>(&out).unwrap();
}

#[test]
fn help_and_version_exit_zero_usage_errors_exit_three() {
    assert_eq!(run(&["--help"]).0, 0);
    assert_eq!(run(&["--version"]).0, 0);
    let (code, out, err) = run(&["table"]);
    assert_eq!(code, 3);
    assert!(out.is_empty());
    assert!(err.contains("Usage"), "{err}");
    assert_eq!(run(&["table", "--id", "T99"]).0, 3);
    assert_eq!(run(&["bound", "--n", "4", "--char", "2"]).0, 3);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn bound_json_round_trips(n in 2u64..140, irr in any::<bool>()) {
        let class = if irr { "irreducible" } else { "general" };
        let (code, out, _) = run(&["bound", "--n", &n.to_string(), "--class", class, "--emit", "json"]);
        prop_assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        let again = serde_json::to_string_pretty(&v).unwrap();
        prop_assert_eq!(again.trim_end(), out.trim_end());
    }
}
