use std::process::{Command, Output};

fn eqcob(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eqcob"))
        .args(args)
        .env_remove("EQCOB_TRUNC")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn ktheory_three_series() {
    let o = eqcob(&["nseries", "--theory", "ktheory", "-n", "3", "--trunc", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "3t - 3βt² + β²t³\n");
}

#[test]
fn negative_n_series() {
    let o = eqcob(&["nseries", "--theory", "chow", "-n", "-2", "--trunc", "3"]);
    assert_eq!(stdout(&o), "-2t\n");
}

#[test]
fn rank_one_torus() {
    let o = eqcob(&["coeff", "torus", "-r", "1", "--trunc", "3", "--theory", "universal"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("ℚ[t₁,t₂,…][[t]]  (deg t = 1)\n"), "{text}");
    assert!(text.contains("degree 3: stable from stage 5"), "{text}");
}

#[test]
fn verify_fgl_passes() {
    let o = eqcob(&["verify", "fgl", "--trunc", "5"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("PASS universal axioms at D=5"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "whitney", "--trials", "5", "--seed", "7", "--trunc", "3", "--format", "json"];
    assert_eq!(eqcob(&args).stdout, eqcob(&args).stdout);
    let args = ["coeff", "gln", "-n", "2", "--trunc", "3"];
    assert_eq!(eqcob(&args).stdout, eqcob(&args).stdout);
}

#[test]
fn json_round_trips() {
    for args in [
        &["fgl", "--trunc", "3", "--format", "json"][..],
        &["coeff", "mu", "-n", "3", "--theory", "chow", "--trunc", "3", "--format", "json"],
        &["pb", "--root", "1,0", "--root", "0,1", "--trunc", "2", "--format", "json"],
        &["verify", "restriction", "--trunc", "3", "--format", "json"],
    ] {
        let text = stdout(&eqcob(args));
        let value: serde_json::Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
        assert_eq!(again, text, "{args:?}");
        for key in ["request_echo", "result", "diagnostics"] {
            assert!(value.get(key).is_some(), "{key} missing for {args:?}");
        }
    }
}

#[test]
fn json_scalars_are_strings() {
    let text = stdout(&eqcob(&["nseries", "-n", "2", "--trunc", "2", "--format", "json"]));
    let value: serde_json::Value = serde_json::from_str(&text).unwrap();
    let terms = value["result"]["terms"].as_array().unwrap();
    assert!(!terms.is_empty());
    for t in terms {
        for c in t["coefficient"].as_array().unwrap() {
            assert!(c["scalar"].is_string());
        }
    }
    assert_eq!(value["request_echo"]["command"]["n"], 2);
    assert_eq!(value["request_echo"]["trunc"], 2);
}

#[test]
fn truncation_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_eqcob"))
        .args(["nseries", "--theory", "ktheory", "-n", "2"])
        .env("EQCOB_TRUNC", "2")
        .output()
        .unwrap();
    assert_eq!(stdout(&o), "2t - βt²\n");
}

#[test]
fn zero_truncation_is_a_usage_error() {
    let o = eqcob(&["fgl", "--trunc", "0"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("truncation must be at least 1"));
}

#[test]
fn computation_errors_are_one_line() {
    let o = eqcob(&["coeff", "mu", "-n", "1", "--theory", "chow"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.contains("n ≥ 2"));
    assert!(o.stdout.is_empty());
}

#[test]
fn mismatched_characters_are_rejected() {
    let o = eqcob(&["chern", "--root", "1,0", "--root", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn weighted_projective_line() {
    let o = eqcob(&["pn-weighted", "--weights", "0,1", "--theory", "chow", "--trunc", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("  ξ² = tξ\n"));
    let o = eqcob(&["pn-weighted", "--weights", "-1,1", "--theory", "chow", "--trunc", "3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("  ξ² = t²\n"), "{}", stdout(&o));
}

#[test]
fn chern_classes_of_characters() {
    let o = eqcob(&["chern", "--root", "1,0", "--root", "0,1", "--theory", "chow", "--trunc", "2"]);
    assert_eq!(stdout(&o), "c0 = 1\nc1 = t1 + t2\nc2 = t1t2\n");
}

#[test]
fn specialization_matches() {
    for to in ["chow", "ktheory"] {
        let o = eqcob(&["specialize", "--to", to, "--weights", "0,1,2", "--trunc", "3"]);
        assert!(o.status.success(), "{to}");
        assert!(!stdout(&o).contains(": no"));
    }
}

#[test]
fn conjugation_by_exp() {
    let o = eqcob(&["conjugate", "--trunc", "4"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("matches the law from its logarithm: yes\n"));
}

#[test]
fn chow_rejects_a_nonconstant_twist() {
    let o = eqcob(&["conjugate", "--theory", "chow", "--tau", "1,1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("twisting error"));
}

#[test]
fn output_file() {
    let path = std::env::temp_dir().join(format!("eqcob-out-{}.txt", std::process::id()));
    let o = eqcob(&["inverse", "--theory", "chow", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "-t\n");
    std::fs::remove_file(path).unwrap();
}
