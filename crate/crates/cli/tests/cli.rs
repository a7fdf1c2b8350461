use std::io::Write;
use std::process::{Command, Output, Stdio};

use g2star_core::atlas::g_eps_brackets;
use g2star_core::liealg::LieAlgebraData;
use g2star_core::QSqrt2;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_g2star"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn example(eps: &str) -> String {
    let o = run(&["example", "g-eps", "--eps", eps], "");
    assert_eq!(o.status.code(), Some(0));
    stdout(&o)
}

#[test]
fn example_round_trips() {
    for (token, eps) in [
        ("1", QSqrt2::from_int(1)),
        ("-3/2", QSqrt2::frac(-3, 2)),
        ("r2", QSqrt2::sqrt2()),
    ] {
        let parsed = LieAlgebraData::from_json_str(&example(token)).unwrap();
        assert_eq!(parsed, g_eps_brackets(&eps), "{token}");
    }
}

#[test]
fn holonomy_of_example() {
    let o = run(&["holonomy"], &example("1"));
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("dimension 3, equals m(1,0,2)"));
    let o = run(&["holonomy"], &example("0"));
    assert!(stdout(&o).starts_with("dimension 2, equals m(1,0,1)"));
}

#[test]
fn verify_passes() {
    for name in ["verify", "verify-paper"] {
        let o = run(&[name], "");
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn broken_jacobi_is_a_failed_check() {
    let input = r#"{"dim":3,"brackets":[{"i":1,"j":2,"c":{"3":"1"}},{"i":1,"j":3,"c":{"1":"1"}}]}"#;
    let o = run(&["validate"], input);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("(i,j,k,l) = (1,2,3,"), "{}", stdout(&o));
    let o = run(&["--json", "validate"], input);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["jacobi"], false);
    assert_eq!(v["violations"][0]["i"], 1);
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(run(&["validate"], "{\"dim\":").status.code(), Some(2));
    assert_eq!(
        run(&["classify", "--family", "so7"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["example", "g-eps", "--eps", "x"], "").status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
    // G2*-specific command on a 3-dimensional algebra
    let dir = std::env::temp_dir().join(format!("g2star-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let gram = dir.join("gram.json");
    std::fs::write(&gram, r#"[["1","0","0"],["0","1","0"],["0","0","-1"]]"#).unwrap();
    let lie = r#"{"dim":3,"brackets":[{"i":1,"j":2,"c":{"3":"1"}}]}"#;
    let o = run(
        &["deform", "--gram", gram.to_str().unwrap(), "--a", "1"],
        lie,
    );
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["connection", "--gram", gram.to_str().unwrap()], lie);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["connection"], lie);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_output_is_stable() {
    let input = example("2");
    for cmd in [
        "connection",
        "curvature",
        "holonomy",
        "bianchi",
        "invariant",
    ] {
        let a = stdout(&run(&["--json", cmd], &input));
        let b = stdout(&run(&["--json", cmd], &input));
        assert_eq!(a, b, "{cmd}");
        serde_json::from_str::<serde_json::Value>(&a).unwrap();
    }
}

#[test]
fn invariant_and_deformation() {
    let o = run(&["--json", "invariant"], &example("5"));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["value"], "-5");
    let o = run(
        &["--json", "deform", "--a", "1", "--b", "-1", "--c", "1/2"],
        &example("1"),
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["parallel"], true);
    assert_eq!(v["d"][0]["index"], 6);
}

#[test]
fn span_commands() {
    let o = run(&["--json", "classify", "--family", "m101"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["type"], "III");
    assert_eq!(v["indecomposability"], "indecomposable");

    let o = run(&["--json", "kspace", "--family", "hIII"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["kspace_dim"], 16);

    // one generator h(diag(1,0)): a span file on stdin
    let mut m = vec![vec!["0".to_string(); 7]; 7];
    for (r, c, x) in [(0, 0, "1"), (1, 1, "1"), (4, 4, "-1"), (5, 5, "-1")] {
        m[r][c] = x.to_string();
    }
    let file = serde_json::json!({"dim": 7, "matrices": [m]}).to_string();
    let o = run(&["--json", "classify"], &file);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["indecomposability"], "decomposable", "{v}");
    let o = run(&["berger"], &file);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn metric_signature() {
    let o = run(&["metric"], "");
    assert!(stdout(&o).contains("(positive, negative, zero) = (3, 4, 0)"));
    assert!(stdout(&o).contains("(negative, positive) = (4, 3)"));
}
