//! The `penner` binary: output formats, determinism and exit codes.

use std::process::{Command, Output};

fn penner(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_penner"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn chi_examples() {
    let o = penner(&["chi", "--kind", "complex", "--g", "1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-1/12");
    let o = penner(&[
        "chi", "table", "--kind", "real", "--gmax", "2", "--nmax", "3", "--format", "csv",
    ]);
    let text = stdout(&o);
    assert!(text.starts_with("kind,genus_index,punctures,value\n"));
    assert!(text.contains("real,1,1,-1/24\n"), "{text}");
    let table = penner_core::cli::parse_chi_csv(&text).unwrap();
    let json = penner(&[
        "chi", "table", "--kind", "real", "--gmax", "2", "--nmax", "3", "--format", "json",
    ]);
    assert_eq!(penner_core::cli::parse_chi_json(&stdout(&json)).unwrap(), table);
}

#[test]
fn nonorientable_product_at_one_is_log_one_plus_t() {
    let o = penner(&[
        "series",
        "--model",
        "nonorientable-product",
        "--N",
        "1",
        "--order",
        "3",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = penner_core::cli::parse_tseries(&stdout(&o)).unwrap();
    let values: Vec<String> = s.coeffs().iter().map(|c| c.coeff(0).to_string()).collect();
    assert_eq!(values, ["0/1", "1/1", "-1/2", "1/3"]);
}

#[test]
fn every_series_model_runs() {
    for args in [
        &["--model", "hermitian"][..],
        &["--model", "symplectic"],
        &["--model", "orthogonal"],
        &["--model", "nonorientable-gf"],
        &["--model", "triple-sum", "--alpha", "1"],
        &["--model", "triple-sum", "--alpha", "2"],
        &["--model", "stirling-tail"],
        &["--model", "closed-form", "--orientation", "reciprocal"],
    ] {
        let mut full = vec!["series"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--N", "3", "--order", "6"]);
        let o = penner(&full);
        assert_eq!(
            o.status.code(),
            Some(0),
            "{full:?}: {}",
            String::from_utf8_lossy(&o.stderr)
        );
        assert_eq!(penner_core::cli::parse_tseries(&stdout(&o)).unwrap().order(), 6);
    }
}

#[test]
fn verify_exit_codes() {
    let o = penner(&["verify", "--identity", "eq17", "--N", "sym", "--order", "16"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["identity"], "eq17");
    assert_eq!(v["size_param"], "sym");
    assert_eq!(v["order"], 16);
    assert_eq!(v["mismatch_count"], 0);

    let o = penner(&["verify", "--identity", "closed-form", "--N", "3", "--order", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("orientation reciprocal matches"));
}

#[test]
fn report_runs_everything() {
    let o = penner(&["report", "--N", "2", "--order", "8"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 7);
    let o = penner(&["report", "--N", "sym", "--order", "6"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["skipped"][0]["identity"], "closed-form");
}

#[test]
fn continuum_output() {
    let o = penner(&["continuum", "--model", "penner", "--gmax", "2", "--format", "json"]);
    assert!(stdout(&o).contains(r#"{"coeff":"-1/240","mu_power":-2,"log_power":0}"#));
    let o = penner(&["continuum", "--model", "symplectic", "--gmax", "4", "--kmax", "4"]);
    let (_, notes) = penner_core::cli::parse_museries(&stdout(&o)).unwrap();
    assert!(notes.iter().any(|n| n.contains("on log mu")));
}

#[test]
fn doublescale_output() {
    let o = penner(&["doublescale", "--mu", "10", "--N", "1000", "--qmax", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["abs_error"].as_f64().unwrap() < 3e-5);
    assert_eq!(v["q_max"], 3);
}

#[test]
fn identical_runs_are_byte_identical() {
    for args in [
        &["series", "--model", "symplectic", "--N", "sym", "--order", "10"][..],
        &["verify", "--identity", "mirror-diff", "--N", "4", "--order", "10"],
        &["continuum", "--model", "orthogonal"],
        &["doublescale", "--mu", "3.5", "--N", "200000"],
        &[
            "chi", "table", "--kind", "complex", "--gmax", "4", "--nmax", "4", "--format", "json",
        ],
    ] {
        assert_eq!(penner(args).stdout, penner(args).stdout, "{args:?}");
    }
}

#[test]
fn error_classes_map_to_exit_codes_without_stdout() {
    let cases: [(&[&str], i32); 9] = [
        (&["chi", "--kind", "complex", "--g", "1"], 2),
        (&["chi", "--kind", "sideways", "--g", "1", "--n", "1"], 2),
        (&["series", "--model", "hermitian", "--N", "0"], 2),
        (&["series", "--model", "hermitian", "--N", "3", "--order", "-1"], 2),
        (&["verify", "--identity", "eq99", "--N", "3"], 2),
        (&["chi", "--kind", "complex", "--g", "0", "--n", "2"], 3),
        (&["chi", "--kind", "real", "--g", "0", "--n", "1"], 3),
        (&["doublescale", "--mu", "20", "--N", "10"], 3),
        (&["doublescale", "--mu", "25", "--N", "10"], 3),
    ];
    for (args, code) in cases {
        let o = penner(args);
        assert_eq!(o.status.code(), Some(code), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    let o = penner(&["verify", "--identity", "eq99", "--N", "3"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--identity"));
}
