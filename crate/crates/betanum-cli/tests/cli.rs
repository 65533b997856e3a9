//! End-to-end tests of the binary: every corpus base crossed with every
//! command, JSON schema checks against the stored records, payload formats,
//! determinism, and the documented error paths.

use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_betanum");

const BASES: &[(&str, &str, bool, bool)] = &[
    // name, word, qm_holds, tile_supported (unit and degree >= 2)
    ("golden", "10^w", true, true),
    ("plastic", "10000^w", false, true),
    ("quad-preperiodic", "2(1)^w", true, true),
    ("cubic-t2", "1100^w", true, true),
    ("cubic-t3", "2200^w", true, true),
    ("simple-odd-a", "2101^w", true, false),
    ("simple-odd-b", "2200^w", true, true),
    ("int3", "2^w", true, false),
];

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .output()
        .expect("binary invocation")
}

fn run_json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "command {:?} failed: {}",
        args,
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "command {:?} produced invalid JSON ({e}): {}",
            args,
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

fn check_envelope(v: &Value, command: &str, base: Option<(&str, &str)>) {
    assert_eq!(v["schema_version"], "1");
    assert_eq!(v["command"], command);
    if let Some((name, word)) = base {
        assert_eq!(v["base"]["corpus"], name);
        assert_eq!(v["base"]["word"], word);
    }
    assert!(v.get("result").is_some());
}

#[test]
fn every_corpus_base_runs_every_command() {
    for &(name, word, qm_holds, tile) in BASES {
        let meta = Some((name, word));

        let v = run_json(&["classify", "--corpus", name]);
        check_envelope(&v, "classify", meta);
        assert_eq!(v["result"]["parry"]["status"], "parry");
        assert_eq!(v["result"]["pisot"], true);

        let v = run_json(&["expand1", "--corpus", name]);
        check_envelope(&v, "expand1", meta);
        assert_eq!(v["result"]["word"], word);

        let v = run_json(&["gseq", "--count", "8", "--corpus", name]);
        check_envelope(&v, "gseq", meta);
        assert_eq!(v["result"]["values"].as_array().unwrap().len(), 8);
        assert_eq!(v["result"]["values"][0], "1");

        let v = run_json(&["gexp", "--n", "100", "--corpus", name]);
        check_envelope(&v, "gexp", meta);
        assert_eq!(v["result"]["greedy_condition"], true);

        let v = run_json(&["succ", "--n", "99", "--corpus", name]);
        check_envelope(&v, "succ", meta);
        assert_eq!(v["result"]["successor_value"], "100");

        let v = run_json(&["fin", "--coeffs", "1,1", "--corpus", name]);
        check_envelope(&v, "fin", meta);
        let status = v["result"]["outcome"]["status"].as_str().unwrap();
        assert!(["finite", "periodic", "unknown"].contains(&status));

        let v = run_json(&[
            "pf",
            "--max-power",
            "4",
            "--max-coeff",
            "2",
            "--corpus",
            name,
        ]);
        check_envelope(&v, "pf", meta);
        assert!(v["result"]["holds"].is_boolean());

        let v = run_json(&[
            "witness",
            "--coeffs",
            "0",
            "--max-power",
            "3",
            "--max-coeff",
            "1",
            "--corpus",
            name,
        ]);
        check_envelope(&v, "witness", meta);
        // x = 0 always has the trivial witness y = 0 at depth 0
        assert_eq!(v["result"]["found"], true);
        assert_eq!(v["result"]["depth"], 0);

        let v = run_json(&["qm", "--corpus", name]);
        check_envelope(&v, "qm", meta);
        assert_eq!(v["result"]["holds"], qm_holds, "qm for {name}");
        assert_eq!(v["result"]["consensus"], true, "consensus for {name}");

        let v = run_json(&[
            "hypb",
            "--b",
            "3",
            "--bounds",
            "6,3,8,1000000",
            "--corpus",
            name,
        ]);
        check_envelope(&v, "hypb", meta);
        let verdict = v["result"]["falsifier"]["verdict"].as_str().unwrap();
        assert!(["counterexample_found", "none_found_within_bounds"].contains(&verdict));

        let v = run_json(&["carries", "--limit", "60", "--corpus", name]);
        check_envelope(&v, "carries", meta);
        assert!(v["result"]["value_set"].is_array());

        if tile {
            let v = run_json(&[
                "rauzy",
                "--depth",
                "8",
                "--max-points",
                "500",
                "--translates",
                "1",
                "--corpus",
                name,
            ]);
            check_envelope(&v, "rauzy", meta);
            assert!(v["result"]["cloud"]["point_count"].as_u64().unwrap() > 0);
            assert!(v["result"]["tiling_estimate"]["overlap_fraction"].is_number());
        } else {
            // refused bases exit nonzero with a diagnostic
            let out = run(&["rauzy", "--depth", "8", "--corpus", name]);
            assert!(!out.status.success(), "rauzy should refuse {name}");
            let err = String::from_utf8_lossy(&out.stderr);
            assert!(err.contains("error:"), "stderr: {err}");
        }
    }
}

#[test]
fn corpus_check_passes_and_lists_every_base() {
    let v = run_json(&["corpus-check"]);
    check_envelope(&v, "corpus-check", None);
    assert_eq!(v["result"]["all_passed"], true);
    let entries = v["result"]["entries"].as_array().unwrap();
    assert_eq!(entries.len(), BASES.len());
    for e in entries {
        assert_eq!(e["passed"], true, "{}", e);
    }
}

#[test]
fn plastic_qm_report_has_the_expected_shape() {
    let v = run_json(&["qm", "--corpus", "plastic"]);
    assert_eq!(v["result"]["rank"]["rank"], 3);
    assert_eq!(v["result"]["holds"], false);
    assert_eq!(v["result"]["consensus"], true);
    assert_eq!(v["result"]["parity"]["applicable"], false);
    assert_eq!(
        v["result"]["recurrence"]["f_values"],
        serde_json::json!(["1", "0", "-1", "-1", "0"])
    );
}

#[test]
fn plastic_hypb_reports_a_replayable_counterexample() {
    let v = run_json(&["hypb", "--b", "3", "--corpus", "plastic"]);
    assert_eq!(v["result"]["falsifier"]["verdict"], "counterexample_found");
    let cex = &v["result"]["falsifier"]["counterexample"];
    assert!(cex["n"].is_string());
    assert!(cex["before"].is_array());
    assert!(cex["after"].is_array());
    assert_eq!(v["result"]["decided_by_theorem"]["qm_holds"], false);
    assert_eq!(v["result"]["decided_by_theorem"]["holds"], false);
}

#[test]
fn golden_gseq_values_match_the_worked_sequence() {
    let v = run_json(&["gseq", "--count", "6", "--corpus", "golden"]);
    assert_eq!(
        v["result"]["values"],
        serde_json::json!(["1", "2", "3", "5", "8", "13"])
    );
}

#[test]
fn base_specs_resolve_like_corpus_names() {
    let v = run_json(&["classify", "--base", "x^3-x-1"]);
    assert_eq!(v["base"]["word"], "10000^w");
    assert_eq!(v["base"]["corpus"], Value::Null);

    let v = run_json(&["classify", "--base", "1100^w"]);
    assert_eq!(v["base"]["minimal_polynomial"], "x^3-2x^2+x-1");

    let v = run_json(&["classify", "--base", "x^2-3x+1@[2, 3]"]);
    assert_eq!(v["base"]["word"], "2(1)^w");
}

#[test]
fn output_is_deterministic() {
    let a = run(&["qm", "--corpus", "plastic"]);
    let b = run(&["qm", "--corpus", "plastic"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&[
        "rauzy",
        "--depth",
        "10",
        "--max-points",
        "300",
        "--format",
        "csv",
        "--corpus",
        "plastic",
    ]);
    let b = run(&[
        "rauzy",
        "--depth",
        "10",
        "--max-points",
        "300",
        "--format",
        "csv",
        "--corpus",
        "plastic",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn payload_formats_have_the_documented_headers() {
    let out = run(&[
        "rauzy",
        "--depth",
        "8",
        "--max-points",
        "200",
        "--format",
        "csv",
        "--corpus",
        "golden",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("c1,error_radius\n"));

    let out = run(&[
        "rauzy",
        "--depth",
        "8",
        "--max-points",
        "200",
        "--format",
        "ppm",
        "--cell",
        "1/10",
        "--corpus",
        "golden",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("P2\n"));
}

#[test]
fn table_mode_renders_flat_keys() {
    let out = run(&["classify", "--table", "--corpus", "golden"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("schema_version"));
    assert!(text.contains("result.pisot"));
    assert!(text.lines().count() > 5);
}

#[test]
fn error_paths_exit_nonzero_with_diagnostics() {
    let cases: &[&[&str]] = &[
        &["classify", "--corpus", "nope"],
        &["classify", "--base", "x^2+1"],
        &["classify", "--base", "12^w"],
        &["classify"],
        &["gexp", "--n", "-4", "--corpus", "golden"],
        &["succ", "--corpus", "golden"],
        &["succ", "--digits", "9,9", "--corpus", "golden"],
        &["fin", "--corpus", "golden"],
        &["hypb", "--b", "2", "--bounds", "oops", "--corpus", "golden"],
        &["rauzy", "--format", "bmp", "--corpus", "golden"],
        &["classify", "--base", "x^2-3x+1@[0, 3]"],
    ];
    for args in cases {
        let out = run(args);
        assert!(!out.status.success(), "expected failure for {args:?}");
        assert!(!out.stderr.is_empty(), "expected a diagnostic for {args:?}");
    }
    // mathematical "fails" verdicts still exit 0
    let v = run_json(&["qm", "--corpus", "plastic"]);
    assert_eq!(v["result"]["holds"], false);
}

#[test]
fn seed_and_precision_flags_are_accepted_and_echoed() {
    let v = run_json(&[
        "classify",
        "--corpus",
        "golden",
        "--seed",
        "7",
        "--precision",
        "80",
    ]);
    assert_eq!(v["options"]["seed"], 7);
    assert_eq!(v["options"]["precision"], 80);
}
