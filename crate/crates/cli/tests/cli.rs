use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(format!("{name}.ds"))
        .display()
        .to_string()
}

fn homorder(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_homorder"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn field<'a>(text: &'a str, key: &str) -> Option<&'a str> {
    let prefix = format!("{key}: ");
    text.lines().find_map(|l| l.strip_prefix(prefix.as_str()))
}

fn structured(args: &[&str]) -> String {
    let mut all = args.to_vec();
    all.extend(["--format", "structured"]);
    let out = homorder(&all);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

#[test]
fn compare_reports_relation() {
    let p3 = fixture("P3");
    let tt3 = fixture("TT3");
    let p2 = fixture("P2");
    assert_eq!(field(&structured(&["compare", &p3, &tt3]), "relation"), Some("incomparable"));
    let s = structured(&["compare", &p2, &tt3]);
    assert_eq!(field(&s, "relation"), Some("strictly-below"));
    assert!(field(&s, "forward").unwrap().starts_with('{'));
    assert_eq!(field(&s, "backward"), None);
}

#[test]
fn hom_prints_a_map() {
    let s = structured(&["hom", &fixture("P2"), &fixture("TT3")]);
    assert_eq!(field(&s, "exists"), Some("yes"));
    assert!(field(&s, "map").is_some());
    let s = structured(&["hom", &fixture("C3"), &fixture("TT3")]);
    assert_eq!(field(&s, "exists"), Some("no"));
}

#[test]
fn core_of_even_cycle_is_an_edge() {
    let s = structured(&["core", &fixture("C2")]);
    assert_eq!(field(&s, "input_is_core"), Some("yes"));
    let s = structured(&["sum", &fixture("P2"), &fixture("P1"), "--core"]);
    assert!(s.contains("vertices 3"), "{s}");
}

#[test]
fn dual_of_two_path() {
    let s = structured(&["dual", &fixture("P2"), "--verify-bound", "4"]);
    assert_eq!(field(&s, "verified_bound"), Some("4"));
    assert_eq!(field(&s, "dual_vertices"), Some("2"));
}

#[test]
fn dual_rejects_non_tree() {
    let out = homorder(&["dual", &fixture("C3")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}

#[test]
fn verify_duality_counterexample_exits_one() {
    let out = homorder(&[
        "verify-duality",
        "--forest",
        &fixture("P2"),
        "--dual",
        &fixture("K1"),
        "--verify-bound",
        "2",
        "--format",
        "structured",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let s = stdout(&out);
    assert_eq!(field(&s, "result"), Some("counterexample"));
    assert_eq!(field(&s, "failure"), Some("neither"));
}

#[test]
fn verify_duality_passes() {
    let s = structured(&[
        "verify-duality",
        "--forest",
        &fixture("P1"),
        "--dual",
        &fixture("K1"),
        "--verify-bound",
        "3",
    ]);
    assert_eq!(field(&s, "result"), Some("pass"));
}

#[test]
fn split_worked_example() {
    let s = structured(&["split", &fixture("P3"), &fixture("TT3"), "--witness-bound", "5"]);
    assert_eq!(field(&s, "F"), Some("0"));
    assert_eq!(field(&s, "D"), Some("1"));
    assert_eq!(field(&s, "element.0.witness_source"), Some("tree-sum"));
    assert_eq!(field(&s, "element.1.rejection"), Some("duality-forced"));
    assert_eq!(field(&s, "contract"), Some("pass"));
    assert_eq!(field(&s, "verdict"), Some("splitting"));
    assert_eq!(field(&s, "order_independent"), Some("yes"));
}

#[test]
fn split_rejects_comparable_inputs() {
    let out = homorder(&["split", &fixture("P1"), &fixture("P2")]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn smallness_and_classes() {
    let s = structured(&["small", &fixture("P2")]);
    assert_eq!(field(&s, "verdict"), Some("small-up-to-bound"));
    let s = structured(&["small", &fixture("C3")]);
    assert_eq!(field(&s, "verdict"), Some("not-small"));
    let s = structured(&["classes", &fixture("TT3")]);
    assert_eq!(field(&s, "condition.1"), Some("yes"));
    assert_eq!(field(&s, "condition.5"), Some("yes"));
    assert_eq!(field(&s, "shadow_directed_cycle"), Some("no"));
    let s = structured(&["classes", &fixture("E3")]);
    assert_eq!(field(&s, "condition.5"), Some("n/a"));
}

#[test]
fn dstar_for_digraphs() {
    let s = structured(&["dstar", "--type", "2"]);
    assert_eq!(field(&s, "components"), Some("2"));
}

#[test]
fn mac_check_exit_codes() {
    let s = structured(&["mac-check", &fixture("P2"), "--verify-bound", "4"]);
    assert_eq!(field(&s, "result"), Some("maximal-up-to-bound"));
    let out = homorder(&["mac-check", &fixture("P3"), "--verify-bound", "3"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn shadow_of_cycle() {
    let s = structured(&["shadow", &fixture("C3")]);
    assert_eq!(field(&s, "directed_cycle"), Some("yes"));
}

#[test]
fn text_format_adds_prose_only() {
    let args = ["dual", &fixture("P2")];
    let text = stdout(&homorder(&args));
    let data = structured(&args);
    let stripped: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(stripped, data.lines().collect::<Vec<_>>());
    assert!(text.lines().any(|l| l.starts_with('#')));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(homorder(&["core", "/nonexistent/x.ds"]).status.code(), Some(2));
    assert_eq!(homorder(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(homorder(&["split", &fixture("P3"), "--witness-bound", "0"]).status.code(), Some(2));
    assert_eq!(homorder(&["compare", &fixture("P2"), &fixture("E3")]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["split", &fixture("TT3"), &fixture("P3"), "--witness-bound", "5"];
    let first = homorder(&args).stdout;
    for _ in 0..2 {
        assert_eq!(homorder(&args).stdout, first);
    }
}

#[test]
fn cache_dir_is_reused() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().to_str().unwrap();
    let args = ["enumerate", "--type", "2", "--n-max", "3", "--kind", "cores", "--cache-dir", cache];
    let cold = structured(&args);
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_some());
    let warm = structured(&args);
    assert_eq!(cold, warm);
    assert_eq!(field(&warm, "count"), Some("12"));
}

#[test]
fn enumerate_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("trees");
    let s = structured(&[
        "enumerate",
        "--type",
        "2",
        "--n-max",
        "3",
        "--kind",
        "trees",
        "--out",
        out.to_str().unwrap(),
        "--count-only",
    ]);
    let count: usize = field(&s, "count").unwrap().parse().unwrap();
    let files = std::fs::read_dir(&out).unwrap().filter(|e| {
        e.as_ref().unwrap().path().extension().is_some_and(|x| x == "ds")
    });
    assert_eq!(files.count(), count);
}
