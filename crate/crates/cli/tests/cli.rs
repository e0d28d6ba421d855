//! End-to-end tests of the binary: exit-code contract, document round
//! trips, inline presentations, and the module groundedness gate.

use std::io::Write;
use std::process::{Command, Stdio};

use kempf_cli::catalog;
use kempf_cli::input::{doc_to_string, parse_doc};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_kempf")
}

fn run_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut child = Command::new(bin())
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn");
    child
        .stdin
        .as_mut()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(bin()).args(args).output().expect("run");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn catalog_entries_validate_at_load() {
    let entries = catalog::load_all_validated().unwrap();
    assert_eq!(entries.len(), catalog::KEYS.len());
}

#[test]
fn bb_report_golden_format() {
    let (code, stdout, _) = run(&["bb", "--catalog", "gm-a1"]);
    assert_eq!(code, 0);
    let expected = "\
bb report
source: gm-a1
ring: [x, y]
attractor ideal: [y]
fixed ideal: [x, y]
unit map: x -> x, y -> 0
limit map: x -> 0, y -> 0
section map: x -> 0, y -> 0
verify containment: ok
verify section identity: ok
verify gbar stable: ok
verify fixed action trivial: ok
";
    assert_eq!(stdout, expected);
}

#[test]
fn upper_triangular_is_a_monoid_scheme_already() {
    // the standard plane carries an action of the full upper-triangular
    // monoid, so the attractor is everything
    let (code, stdout, _) = run(&["bb", "--catalog", "upper-tri-2"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("attractor ideal: [0]"));
    assert!(stdout.contains("unit map: v1 -> v1, v2 -> v2"));
}

#[test]
fn document_round_trip_is_identity() {
    let text = r#"
catalog = "gm-a1"

[ring]
vars = ["x", "y"]

[ideal]
generators = ["x*y"]

[torus]
rank = 1
weights = [[1], [-1]]

[params]
depth = 4
characters = [[2], [0]]
"#;
    let doc = parse_doc(text).unwrap();
    let serialized = doc_to_string(&doc).unwrap();
    let reparsed = parse_doc(&serialized).unwrap();
    assert_eq!(doc, reparsed);
}

#[test]
fn bb_from_stdin_document() {
    let doc = r#"
catalog = "gm-a1"

[ring]
vars = ["x", "y"]

[ideal]
generators = ["x*y"]

[torus]
rank = 1
weights = [[1], [-1]]
"#;
    let (code, stdout, _) = run_with_stdin(&["bb"], doc);
    assert_eq!(code, 0);
    assert!(stdout.contains("attractor ideal: [y]"));
    assert!(stdout.contains("fixed ideal: [x, y]"));
    assert!(stdout.contains("verify section identity: ok"));
}

#[test]
fn inline_group_and_monoid_sections() {
    // G_m with weights (1, -1), written out in full
    let doc = r#"
[ring]
vars = ["x", "y"]

[torus]
rank = 1
weights = [[1], [-1]]

[group]
vars = ["t", "tinv"]
relations = ["t*tinv - 1"]
action = [["t", "0"], ["0", "tinv"]]
inverse_action = [["tinv", "0"], ["0", "t"]]
identity = ["1", "1"]

[monoid]
generators = ["t"]
zero_point = ["0"]
central_rank = 1
central_weights = [[1], [-1]]
tbar_rank = 1
tbar_generators = [[1]]
central_embedding = [[1]]
"#;
    let (code, stdout, stderr) = run_with_stdin(&["bb"], doc);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stdout.contains("attractor ideal: [y]"));
}

#[test]
fn parse_errors_exit_2() {
    let (code, _, stderr) = run_with_stdin(&["bb"], "this is not toml [");
    assert_eq!(code, 2);
    assert!(stderr.contains("error"));

    let (code, _, _) = run(&["bb", "--catalog", "no-such-entry"]);
    assert_eq!(code, 2);

    let bad_poly = r#"
[ring]
vars = ["x"]

[torus]
rank = 1
weights = [[1]]

[ideal]
generators = ["x + q"]
"#;
    let (code, _, _) = run_with_stdin(&["stabilize"], bad_poly);
    assert_eq!(code, 2);
}

#[test]
fn resource_cap_exits_4() {
    let (code, _, stderr) = run(&["bb", "--catalog", "gm-a1", "--saturation-cap", "0"]);
    assert_eq!(code, 4, "stderr: {stderr}");
}

#[test]
fn module_stabilization_via_document() {
    let doc = r#"
[ring]
vars = ["x"]

[torus]
rank = 1
weights = [[1]]

[module]
generator_weights = [[-1]]

[params]
depth = 4
characters = [[1]]
"#;
    let (code, stdout, stderr) = run_with_stdin(&["stabilize"], doc);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stdout.contains("subject: module"));
    assert!(stdout.contains("character (1): predicted 2, observed 2"));
}

#[test]
fn ungrounded_module_is_rejected() {
    let doc = r#"
[ring]
vars = ["x"]

[torus]
rank = 1
weights = [[1]]

[[module.generator_chains]]
start = [0]
step = [-1]

[params]
depth = 2
"#;
    let (code, _, stderr) = run_with_stdin(&["stabilize"], doc);
    assert_eq!(code, 2);
    assert!(stderr.contains("not grounded"));
    assert!(stderr.contains("unbounded below"));
}

#[test]
fn repeated_weight_family_passes_groundedness_but_needs_finite_presentation() {
    let doc = r#"
[ring]
vars = ["x"]

[torus]
rank = 1
weights = [[1]]

[module]
generator_repeats = [[-1]]
"#;
    let (code, _, stderr) = run_with_stdin(&["stabilize"], doc);
    assert_eq!(code, 2);
    assert!(stderr.contains("list generators explicitly"));
}

#[test]
fn file_input_works() {
    let dir = std::env::temp_dir().join("kempf-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("problem.toml");
    std::fs::write(&path, "catalog = \"gl2-m2-std\"\n").unwrap();
    let (code, stdout, _) = run(&["bb", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.contains("attractor ideal: [0]"));
    assert!(stdout.contains("fixed ideal: [v1, v2]"));
}

#[test]
fn lex_order_flag_changes_reported_bases() {
    let doc = r#"
catalog = "gm-a1"

[ring]
vars = ["x", "y"]

[ideal]
generators = ["x^2 - y"]

[torus]
rank = 1
weights = [[1], [2]]
"#;
    let (code, grevlex_out, _) = run_with_stdin(&["fixed"], doc);
    assert_eq!(code, 0);
    let (code, lex_out, _) = run_with_stdin(&["fixed", "--order", "lex"], doc);
    assert_eq!(code, 0);
    assert!(grevlex_out.contains("fixed ideal: [x, y]"));
    assert!(lex_out.contains("fixed ideal: [x, y]"));
}

#[test]
fn shallow_depth_marks_characters_inconclusive() {
    let doc = r#"
[ring]
vars = ["x"]

[torus]
rank = 1
weights = [[1]]

[params]
depth = 1
characters = [[5]]
"#;
    let (code, stdout, _) = run_with_stdin(&["stabilize"], doc);
    assert_eq!(code, 0);
    assert!(stdout.contains("character (5):"));
    assert!(stdout.contains("status inconclusive"));
}

#[test]
fn algebraize_command_reports_bases() {
    let doc = r#"
[ring]
vars = ["x", "y"]

[ideal]
generators = ["x*y"]

[torus]
rank = 1
weights = [[1], [1]]

[params]
depth = 5
characters = [[3]]
"#;
    let (code, stdout, stderr) = run_with_stdin(&["algebraize"], doc);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stdout.contains("character (3): dim 2, basis [x^3, y^3]"));
}
