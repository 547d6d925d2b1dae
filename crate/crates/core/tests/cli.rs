use foliation_degrees::cli::{exit, json_integer, run, Outcome};
use foliation_degrees::exact::{Fraction, UniPoly};
use num_bigint::BigInt;
use serde_json::Value;

fn cli(args: &[&str]) -> Outcome {
    run(std::iter::once("foliation-degrees").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.push("--json");
    let out = cli(&full);
    let value = serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{e}: {out:?}"));
    (value, out.code)
}

#[test]
fn plane_lines_in_the_plane() {
    let out = cli(&["plane", "-n", "2", "-k", "1", "-d", "2"]);
    assert_eq!(out.code, exit::SUCCESS, "{out:?}");
    assert!(out.stdout.contains("degree: 15"));
    assert!(out.stdout.contains("codimension: 1"));
    assert!(out.stdout.contains("ambient dimension N: 14"));
    assert!(out.stdout.contains("closed form C(C(d+n,n),n): 15 (match)"));
}

#[test]
fn plane_weight_self_check() {
    let (v, code) = json(&["plane", "-n", "3", "-k", "1", "-d", "2"]);
    assert_eq!(code, exit::SUCCESS);
    assert_eq!(v["weight_check"]["matches"], Value::Bool(true));
    assert_eq!(v["weight_check"]["degree"], v["degree"]);
    assert_ne!(v["weight_check"]["weights"], v["weights"]);
    assert!(v["closed_form"].is_null());
}

#[test]
fn plane_usage_errors() {
    assert_eq!(cli(&["plane", "-n", "2", "-k", "2", "-d", "2"]).code, exit::USAGE);
    assert_eq!(cli(&["plane", "-n", "9", "-k", "1", "-d", "2"]).code, exit::USAGE);
    assert_eq!(cli(&["plane", "-n", "2", "-k", "1", "-d", "0"]).code, exit::USAGE);
    assert_eq!(cli(&["plane", "-n", "2", "-k", "1"]).code, exit::USAGE);
    assert_eq!(
        cli(&["plane", "-n", "2", "-k", "1", "-d", "2", "--weights", "0,1"]).code,
        exit::USAGE
    );
}

#[test]
fn plane_degree_one_is_flagged() {
    let out = cli(&["plane", "-n", "2", "-k", "1", "-d", "1"]);
    assert_eq!(out.code, exit::SUCCESS);
    assert!(out.stdout.contains("degree: 3"));
    assert!(out.stdout.contains("generically injective"));
}

#[test]
fn conic_degree_two() {
    let out = cli(&["conic", "-d", "2"]);
    assert_eq!(out.code, exit::SUCCESS);
    assert!(out.stdout.contains("degree: 81"));
    assert!(out.stdout.contains("codimension: 2"));
    assert!(out.stdout.contains("closed formula: 81 (match)"));
}

#[test]
fn conic_degree_five_matches_formula() {
    let (v, code) = json(&["conic", "-d", "5", "--weights", "2,-5,11"]);
    assert_eq!(code, exit::SUCCESS);
    let expected = foliation_degrees::bott::conic_closed_formula().eval(&Fraction::from(5));
    assert_eq!(json_integer(&v, "degree"), Some(expected.to_integer().unwrap()));
    assert_eq!(v["weights"], serde_json::json!(["2", "-5", "11"]));
}

#[test]
fn conic_usage_error() {
    assert_eq!(cli(&["conic", "-d", "1"]).code, exit::USAGE);
    assert_eq!(cli(&["conic", "-d", "3", "--weights", "0,1,3,7"]).code, exit::USAGE);
}

#[test]
fn degenerate_weights_are_retried_once() {
    let out = cli(&["conic", "-d", "3", "--weights", "0,1,2", "--seed", "9"]);
    assert_eq!(out.code, exit::SUCCESS);
    assert!(out.stdout.contains("degree: 1380"));
    assert!(out.stdout.contains("retried with weights"));
}

#[test]
fn json_report_round_trips() {
    for args in [
        vec!["conic", "-d", "4"],
        vec!["plane", "-n", "3", "-k", "2", "-d", "3"],
        vec!["plane", "-n", "4", "-k", "1", "-d", "2"],
    ] {
        let (v, code) = json(&args);
        assert_eq!(code, exit::SUCCESS);
        let degree = json_integer(&v, "degree").unwrap();
        let total: Fraction = v["contributions"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["contribution"].as_str().unwrap().parse::<Fraction>().unwrap())
            .sum();
        assert_eq!(total.to_integer().unwrap(), degree, "{args:?}");
        assert!(degree >= BigInt::from(0));
        let d: u32 = v["d"].as_str().unwrap().parse().unwrap();
        let n: usize = v["n"].as_str().unwrap().parse().unwrap();
        let codim = json_integer(&v, "codimension").unwrap();
        match v["family"].as_str().unwrap() {
            "conic" => assert_eq!(codim, BigInt::from(2 * (d - 1))),
            _ => {
                let k: usize = v["k"].as_str().unwrap().parse().unwrap();
                assert_eq!(codim, foliation_degrees::grassmann::plane_codimension(k, n, d));
            }
        }
        assert_eq!(
            json_integer(&v, "ambient_dimension").unwrap(),
            foliation_degrees::space::ambient_dimension(n, d)
        );
    }
}

#[test]
fn dump_fixed_points() {
    let (v, _) = json(&["conic", "-d", "2", "--dump-fixed-points"]);
    let points = v["fixed_points"].as_array().unwrap();
    assert_eq!(points.len(), 12);
    assert_eq!(points[0]["point"]["kind"], "OffExceptional");
    assert_eq!(points[0]["tangent_weights"], serde_json::json!([-1, 2, 1, 3, 5]));
    for p in points {
        assert_eq!(p["fiber_weights"].as_array().unwrap().len(), 8);
    }
    let text = cli(&["conic", "-d", "2", "--dump-fixed-points"]).stdout;
    assert!(text.contains("(z0^2; z1*z2)"));
}

#[test]
fn formula_conic_full_range() {
    let out = cli(&["formula", "--family", "conic", "--d-min", "2", "--d-max", "17"]);
    assert_eq!(out.code, exit::SUCCESS, "{out:?}");
    assert!(out.stdout.contains("(d - 1) * d * (d + 1)"), "{}", out.stdout);
    assert!(out.stdout.contains("reference formula: match"));

    let (v, _) = json(&["formula", "--family", "conic"]);
    let coeffs: Vec<Fraction> = v["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().parse().unwrap())
        .collect();
    assert_eq!(UniPoly::from_coeffs(coeffs), foliation_degrees::bott::conic_closed_formula());
}

#[test]
fn formula_short_range_needs_more_samples() {
    let out = cli(&["formula", "--family", "conic", "--d-min", "2", "--d-max", "3"]);
    assert_eq!(out.code, exit::NEEDS_MORE_SAMPLES);
    assert!(out.stdout.contains("needs more samples"));
}

#[test]
fn formula_eleven_samples_never_wrong() {
    let out = cli(&["formula", "--family", "conic", "--d-min", "2", "--d-max", "12", "--json"]);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    if out.code == exit::SUCCESS {
        assert_eq!(v["status"], "confirmed");
        assert_eq!(v["matches_reference"], Value::Bool(true));
    } else {
        assert_eq!(out.code, exit::NEEDS_MORE_SAMPLES);
    }
}

#[test]
fn formula_plane_family() {
    let out = cli(&["formula", "--family", "plane", "-n", "2", "-k", "1", "--d-min", "2", "--d-max", "8"]);
    assert_eq!(out.code, exit::SUCCESS, "{out:?}");
    assert!(out.stdout.contains("reference formula: match"));
    assert_eq!(cli(&["formula", "--family", "plane", "-n", "2"]).code, exit::USAGE);
}

#[test]
fn warm_cache_skips_recomputation() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("samples.json");
    let cache = cache.to_str().unwrap();
    let args = ["formula", "--family", "conic", "--d-min", "2", "--d-max", "17", "--cache", cache, "--stats"];
    let cold = cli(&args);
    let warm = cli(&args);
    assert_eq!(cold.code, exit::SUCCESS);
    assert!(cold.stdout.contains("bott evaluations: 16  cached samples: 0"));
    assert!(warm.stdout.contains("bott evaluations: 0  cached samples: 16"));
    let strip = |s: &str| s.lines().filter(|l| !l.starts_with("bott evaluations")).collect::<Vec<_>>().join("\n");
    assert_eq!(strip(&cold.stdout), strip(&warm.stdout));

    let stored: std::collections::BTreeMap<String, String> =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("samples.json")).unwrap()).unwrap();
    assert_eq!(stored["conic/2/0,1,3"], "81");
    assert_eq!(stored["conic/3/0,1,3"], "1380");
}

#[test]
fn corrupt_cache_warns_and_recomputes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("samples.json");
    std::fs::write(&path, "[1, 2").unwrap();
    let out = cli(&["formula", "--family", "conic", "--cache", path.to_str().unwrap(), "--stats"]);
    assert_eq!(out.code, exit::SUCCESS);
    assert!(out.stderr.contains("warning"));
    assert!(out.stdout.contains("bott evaluations: 16"));
}

#[test]
fn reference_formulas_only_print() {
    let out = cli(&["--show-reference-formulas"]);
    assert_eq!(out.code, exit::SUCCESS);
    assert!(out.stdout.contains("invariant quadric"));
    assert!(out.stdout.contains("codimension = 4(d-1)"));
}

#[test]
fn output_is_deterministic() {
    let a = cli(&["plane", "-n", "4", "-k", "2", "-d", "3", "--json", "--seed", "4"]);
    let b = cli(&["plane", "-n", "4", "-k", "2", "-d", "3", "--json", "--seed", "4"]);
    assert_eq!(a, b);
}
