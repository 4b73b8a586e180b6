//! End-to-end checks of the command-line interface: output text and exit
//! codes are part of the contract.

use std::path::Path;
use std::process::{Command, Output};

use facering::models::{build_builtin, element_to_string, save_model};
use facering::ring::{multiply, tau};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_facering"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8_lossy(&output.stdout).into_owned()
}

fn write_bad_element(path: &Path) {
    // The bigon facet component x1 alone, missing its vertex restrictions.
    let text = r#"{
  "components": [
    { "face": 1, "terms": [ { "monomial": { "1": 1 }, "coeff": [["1", "1"]] } ] }
  ]
}"#;
    std::fs::write(path, text).unwrap();
}

#[test]
fn hilbert_prints_the_dimension_line() {
    let output = run(&[
        "hilbert",
        "--model",
        "builtin:triangle",
        "--max-degree",
        "8",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "1 0 3 0 6 0 9 0 12\n");
}

#[test]
fn compare_sr_agrees_on_the_triangle() {
    let output = run(&[
        "compare-sr",
        "--model",
        "builtin:triangle",
        "--max-degree",
        "20",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "AGREE\n");
}

#[test]
fn compare_sr_is_inapplicable_on_the_bigon() {
    let output = run(&[
        "compare-sr",
        "--model",
        "builtin:bigon",
        "--max-degree",
        "8",
    ]);
    assert_eq!(output.status.code(), Some(1));
    let err = String::from_utf8_lossy(&output.stderr).into_owned();
    assert!(err.contains("share the label set"), "stderr was: {err}");
}

#[test]
fn member_with_oracle_on_a_known_non_member() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    write_bad_element(&bad);
    let output = run(&[
        "member",
        "--model",
        "builtin:bigon",
        "--element",
        bad.to_str().unwrap(),
        "--oracle",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "NOT MEMBER (agrees with oracle)\n");
}

#[test]
fn member_with_oracle_on_a_product_of_thom_classes() {
    let model = build_builtin("bigon", None).unwrap();
    let complex = &model.complex;
    let product = multiply(complex, &tau(complex, 1), &tau(complex, 2));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("product.json");
    std::fs::write(&path, element_to_string(complex, &product).unwrap()).unwrap();
    let output = run(&[
        "member",
        "--model",
        "builtin:bigon",
        "--element",
        path.to_str().unwrap(),
        "--oracle",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "MEMBER (agrees with oracle)\n");
}

#[test]
fn decompose_prints_the_parts() {
    let model = build_builtin("bigon", None).unwrap();
    let complex = &model.complex;
    let product = multiply(complex, &tau(complex, 1), &tau(complex, 2));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("product.json");
    std::fs::write(&path, element_to_string(complex, &product).unwrap()).unwrap();
    let output = run(&[
        "decompose",
        "--model",
        "builtin:bigon",
        "--element",
        path.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(
        text.contains("part at face 3 {1,2}: (1)*x1*x2"),
        "stdout was: {text}"
    );
    assert!(
        text.contains("part at face 4 {1,2}: (1)*x1*x2"),
        "stdout was: {text}"
    );
}

#[test]
fn decompose_reports_non_members() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    write_bad_element(&bad);
    let output = run(&[
        "decompose",
        "--model",
        "builtin:bigon",
        "--element",
        bad.to_str().unwrap(),
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).starts_with("NOT IN FACE RING"));
}

#[test]
fn multiply_with_decomposition() {
    let model = build_builtin("bigon", None).unwrap();
    let complex = &model.complex;
    let dir = tempfile::tempdir().unwrap();
    let lhs = dir.path().join("t1.json");
    let rhs = dir.path().join("t2.json");
    std::fs::write(&lhs, element_to_string(complex, &tau(complex, 1)).unwrap()).unwrap();
    std::fs::write(&rhs, element_to_string(complex, &tau(complex, 2)).unwrap()).unwrap();
    let output = run(&[
        "multiply",
        "--model",
        "builtin:bigon",
        "--lhs",
        lhs.to_str().unwrap(),
        "--rhs",
        rhs.to_str().unwrap(),
        "--decompose",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(
        text.contains("face 3 {1,2}: (1)*x1*x2"),
        "stdout was: {text}"
    );
    assert!(text.contains("decomposition:"), "stdout was: {text}");
}

#[test]
fn validate_passes_builtins_and_rejects_bad_files() {
    let output = run(&["validate", "--model", "builtin:connected-sum"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "PASS\n");

    // Corrupt a saved model: break niceness on face 1.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("model.json");
    let model = build_builtin("bigon", None).unwrap();
    save_model(&model, &path).unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    let mut json: serde_json::Value = serde_json::from_str(&text).unwrap();
    json["faces"][1]["codim"] = serde_json::json!(2);
    std::fs::write(&path, serde_json::to_string(&json).unwrap()).unwrap();
    let output = run(&["validate", "--model", path.to_str().unwrap()]);
    assert_eq!(output.status.code(), Some(1));
    assert!(
        stdout(&output).contains("FAIL niceness"),
        "stdout was: {}",
        stdout(&output)
    );
}

#[test]
fn charclass_prints_decomposed_totals() {
    let output = run(&[
        "charclass",
        "--model",
        "builtin:triangle",
        "--field",
        "2",
        "--kind",
        "sw",
    ]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(
        text.contains("part at face 0 {}: (1)"),
        "stdout was: {text}"
    );
    assert!(
        text.contains("part at face 4 {1,2}: (1)*x1*x2"),
        "stdout was: {text}"
    );

    // Stiefel-Whitney classes need characteristic 2.
    let output = run(&["charclass", "--model", "builtin:triangle", "--kind", "sw"]);
    assert_eq!(output.status.code(), Some(1));

    let output = run(&[
        "charclass",
        "--model",
        "builtin:triangle",
        "--kind",
        "pontrjagin",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert!(stdout(&output).contains("x1^2"));
}

#[test]
fn eta_prints_the_thom_class_for_identity_weights() {
    let output = run(&["eta", "--model", "builtin:bigon", "--u", "1,0"]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "part at face 1 {1}: (1)*x1\n");
}

#[test]
fn usage_errors_exit_with_two() {
    let output = run(&["hilbert", "--model", "builtin:triangle"]);
    assert_eq!(output.status.code(), Some(2));
    let output = run(&["no-such-command"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn unknown_builtin_is_a_data_error() {
    let output = run(&[
        "hilbert",
        "--model",
        "builtin:dodecahedron",
        "--max-degree",
        "4",
    ]);
    assert_eq!(output.status.code(), Some(1));
}

#[test]
fn model_files_round_trip_through_the_loader() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("square.json");
    let model = build_builtin("square", None).unwrap();
    save_model(&model, &path).unwrap();
    let output = run(&[
        "hilbert",
        "--model",
        path.to_str().unwrap(),
        "--max-degree",
        "6",
    ]);
    assert_eq!(output.status.code(), Some(0));
    assert_eq!(stdout(&output), "1 0 4 0 8 0 12\n");
}
