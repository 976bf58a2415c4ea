//! Black-box tests against the compiled `dualhahn` binary: exact output
//! bytes, exit codes, format contracts, and determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualhahn"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn grid_prints_the_even_anchor_exactly() {
    let out = run(&["grid", "--alpha", "3", "--beta", "3", "--N", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "s,x\n0,-5\n1,3\n2,-1\n");
}

#[test]
fn grid_prints_the_odd_anchor_exactly() {
    let out = run(&["grid", "--alpha", "1", "--beta", "1", "--N", "1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "s,x\n0,3\n1,-5\n");
}

#[test]
fn grid_rejects_an_empty_family() {
    let out = run(&["grid", "--alpha", "3", "--beta", "3", "--N", "0"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--N"));
}

#[test]
fn grid_supports_the_q_family() {
    let out = run(&[
        "grid", "--family", "q-hahn", "--a", "1/3", "--b", "1/5", "--q", "1/2", "--N", "3",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "s,x\n0,31/30\n1,121/60\n2,481/120\n3,1921/240\n");
}

#[test]
fn malformed_rationals_are_usage_errors() {
    for bad in ["3.5", "x", "1/0", ""] {
        let out = run(&["grid", "--alpha", bad, "--beta", "3", "--N", "2"]);
        assert_eq!(code(&out), 2, "input {bad:?}");
        assert!(stderr(&out).contains("--alpha"), "input {bad:?}");
    }
}

#[test]
fn family_flags_are_checked_per_family() {
    let out = run(&[
        "grid", "--family", "q-hahn", "--alpha", "3", "--a", "1/3", "--b", "1/5", "--q", "1/2",
        "--N", "2",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--alpha"));

    let out = run(&["grid", "--alpha", "3", "--N", "2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--beta"));
}

#[test]
fn coeffs_report_exact_agreement_at_the_anchor() {
    let out = run(&["coeffs", "--alpha", "3", "--beta", "3", "--N", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,u,b,A,C,u_alt,b_alt,agree"));
    assert_eq!(lines.next(), Some("0,0,-1,-4,0,0,-1,true"));
    assert_eq!(lines.next(), Some("1,8,-1,-2,-2,8,-1,true"));
    assert_eq!(lines.next(), Some("2,8,-1,0,-4,8,-1,true"));
}

#[test]
fn weights_carry_mass_and_the_anchor_values() {
    let out = run(&["weights", "--alpha", "3", "--beta", "3", "--N", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        stdout(&out),
        "s,x,w\n0,-5,1\n1,3,1\n2,-1,2\n",
        "hand-checked weights (1,1,2) on grid (-5,3,-1)"
    );
}

#[test]
fn weights_are_not_defined_for_the_classical_family() {
    let out = run(&[
        "weights", "--family", "classical", "--alpha", "1", "--beta", "2", "--N", "3",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("classical"));
}

#[test]
fn eval_agrees_with_the_closed_form_at_a_point() {
    let out = run(&[
        "eval", "--alpha", "3", "--beta", "3", "--N", "2", "--n", "2", "--x", "-1",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "s,x,value\n,-1,-8\n");

    let out = run(&["eval", "--alpha", "3", "--beta", "3", "--N", "2", "--n", "3"]);
    assert_eq!(code(&out), 2, "degree above N is a usage error");
}

#[test]
fn verify_passes_cleanly_on_sound_parameters() {
    let out = run(&["verify", "--alpha", "7/3", "--beta", "6/5", "--N", "3"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    for suite in [
        "orthogonality",
        "closed-form",
        "branch-compact",
        "grid-shift",
        "stencil-eigen",
        "dunkl-eigen",
        "dunkl-stencil-consistency",
        "leonard-pair",
        "christoffel",
    ] {
        assert!(text.contains(&format!("{suite},0,ok")), "suite {suite}");
    }
    assert!(text.contains("positivity"));
}

#[test]
fn verify_flags_nonpositive_measures_without_failing() {
    // even N needs alpha, beta > N for positivity; these sit below it
    let out = run(&["verify", "--alpha", "1/3", "--beta", "2/5", "--N", "4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("measure not positive"));
}

#[test]
fn verify_names_the_precondition_on_degenerate_parameters() {
    let out = run(&["verify", "--alpha", "7/2", "--beta", "1/2", "--N", "4"]);
    assert_eq!(code(&out), 1);
    assert!(stderr(&out).contains("degenerate grid"));
}

#[test]
fn verify_covers_the_ancestor_families() {
    let out = run(&[
        "verify", "--family", "q-hahn", "--a", "1/3", "--b", "1/5", "--q", "1/2", "--N", "3",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    for suite in ["mass", "orthogonality", "series-norms", "difference-eigen"] {
        assert!(text.contains(&format!("{suite},0,ok")), "suite {suite}");
    }

    let out = run(&[
        "verify", "--family", "classical", "--alpha", "1", "--beta", "2", "--N", "3",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    for suite in ["operator-eigen", "coefficient-product"] {
        assert!(text.contains(&format!("{suite},0,ok")), "suite {suite}");
    }
}

#[test]
fn operator_emits_all_four_matrices_with_bandwidths() {
    let out = run(&["operator", "--alpha", "3", "--beta", "3", "--N", "2"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    // frozen 3x3 stencil at the anchor
    for row in [
        "entry,stencil,0,0,2",
        "entry,stencil,0,1,0",
        "entry,stencil,0,2,-2",
        "entry,stencil,1,1,2",
        "entry,stencil,1,2,-2",
        "entry,stencil,2,0,-1",
        "entry,stencil,2,1,-1",
        "entry,stencil,2,2,2",
    ] {
        assert!(text.contains(row), "{row}");
    }
    // eigenvalues 0, 2, 4 on the degree-basis diagonal
    for row in ["entry,degree,0,0,0", "entry,degree,1,1,2", "entry,degree,2,2,4"] {
        assert!(text.contains(row), "{row}");
    }
    for row in [
        "bandwidth,stencil,2,2,",
        "bandwidth,grid,0,0,",
        "bandwidth,degree,0,0,",
        "bandwidth,recurrence,1,1,",
    ] {
        assert!(text.contains(row), "{row}");
    }

    let out = run(&[
        "operator", "--family", "q-hahn", "--a", "1/3", "--b", "1/5", "--q", "1/2", "--N", "2",
    ]);
    assert_eq!(code(&out), 2, "operator is specific to m1-hahn");
}

#[test]
fn limits_fit_first_order_and_flag_bad_schedules() {
    let out = run(&["limits", "--alpha", "10/3", "--beta", "11/5", "--N", "3"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("check,n,epsilon,error,order"));
    for name in ["recurrence", "operator"] {
        let fit = text
            .lines()
            .find(|l| l.starts_with(&format!("{name},,fit")))
            .unwrap_or_else(|| panic!("fit row for {name}"));
        let order: f64 = fit.rsplit(',').next().unwrap().parse().expect("order");
        assert!((0.8..=1.2).contains(&order), "{name} order {order}");
    }
    assert!(
        text.contains("scalar,0,fit,,exact"),
        "degree zero is exact: {text}"
    );

    let out = run(&[
        "limits", "--alpha", "10/3", "--beta", "11/5", "--N", "3", "--eps", "0.1,0.2",
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("schedule"));

    let out = run(&[
        "limits", "--alpha", "10/3", "--beta", "11/5", "--N", "3", "--eps", "0.1,nope",
    ]);
    assert_eq!(code(&out), 2);
}

#[test]
fn limits_cover_the_classical_target() {
    let out = run(&[
        "limits", "--family", "classical", "--alpha", "1", "--beta", "2", "--N", "3",
    ]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    for name in ["recurrence-u", "recurrence-b"] {
        assert!(
            text.lines().any(|l| l.starts_with(&format!("{name},,fit"))),
            "fit row for {name}"
        );
    }
}

#[test]
fn json_envelope_has_ordered_keys_and_exact_rationals() {
    let out = run(&[
        "weights", "--alpha", "7/3", "--beta", "6/5", "--N", "2", "--format", "json",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let value: serde_json::Value = serde_json::from_str(&text).expect("valid json");
    let params = value.get("params").expect("params key");
    assert_eq!(params["family"], "m1-hahn");
    assert_eq!(params["alpha"]["num"], serde_json::json!(7));
    assert_eq!(params["alpha"]["den"], serde_json::json!(3));
    let rows = value.get("rows").expect("rows key").as_array().unwrap();
    assert_eq!(rows.len(), 3);
    assert!(value.get("residuals").is_some());
    let p = text.find("\"params\"").unwrap();
    let r = text.find("\"rows\"").unwrap();
    let s = text.find("\"residuals\"").unwrap();
    assert!(p < r && r < s, "envelope keys keep their order");
}

#[test]
fn exact_output_is_deterministic_across_runs() {
    let args = ["verify", "--alpha", "7/3", "--beta", "6/5", "--N", "4"];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.status.code(), second.status.code());

    let args = [
        "operator", "--alpha", "3", "--beta", "3", "--N", "2", "--format", "json",
    ];
    let first = run(&args);
    let second = run(&args);
    assert_eq!(first.stdout, second.stdout);
}
