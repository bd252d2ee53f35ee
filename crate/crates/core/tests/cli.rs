use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn argkit(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_argkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("argkit starts");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

const MUTUAL: &str = "arg(a).\narg(b).\narg(c).\natt(a,b).\natt(b,a).\natt(b,c).\n";

#[test]
fn solve_prints_one_extension_per_line() {
    let o = argkit(&["solve", "-s", "prf", "-"], MUTUAL);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "[a,c]\n[b]\n");
    let o = argkit(&["solve", "-f", "tgf", "-s", "grd", "-"], "1\n2\n#\n1 2\n");
    assert_eq!(stdout(&o), "[1]\n");
}

#[test]
fn accept_answers_yes_or_no_with_exit_zero() {
    let o = argkit(&["accept", "cred", "-s", "prf", "-a", "c", "-"], MUTUAL);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "YES\n"));
    let o = argkit(&["accept", "skept", "-s", "prf", "-a", "c", "-"], MUTUAL);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "NO\n"));
}

#[test]
fn classify_reports_all_classes() {
    let o = argkit(&["classify", "-"], MUTUAL);
    assert_eq!(stdout(&o), "ACY false\nNOEVEN false\nBIP true\nSYM false\n");
}

#[test]
fn distance_and_verify_set() {
    let o = argkit(&["distance", "-g", "acy", "-"], MUTUAL);
    assert_eq!(stdout(&o), "1\n[a]\n");
    let o = argkit(&["distance", "-g", "sym", "--verify-set", "b", "-"], MUTUAL);
    assert_eq!(stdout(&o), "YES\n");
    let o = argkit(&["distance", "-g", "sym", "--verify-set", "a", "-"], MUTUAL);
    assert_eq!(stdout(&o), "NO\n");
}

#[test]
fn distance_budget_exhaustion_is_a_capacity_error() {
    let o = argkit(&["distance", "-g", "acy", "--budget", "1", "-"], MUTUAL);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("upper bound"));
}

#[test]
fn reduce_emits_apx_and_sidecar() {
    let meta = std::env::temp_dir().join(format!("argkit-cli-{}.json", std::process::id()));
    let meta_s = meta.to_string_lossy().into_owned();
    let o = argkit(&["reduce", "-r", "1", "--meta", &meta_s, &fixture("monotone_example.qdimacs")], "");
    assert!(o.status.success());
    let apx = stdout(&o);
    assert_eq!(apx.lines().filter(|l| l.starts_with("arg(")).count(), 11);
    let sidecar: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&meta).unwrap()).unwrap();
    std::fs::remove_file(&meta).unwrap();
    assert_eq!(sidecar["reduction_id"], 1);
    assert_eq!(sidecar["claimed_class"], "BIP");

    let o = argkit(&["accept", "skept", "-s", "prf", "-a", "phi", "-"], &apx);
    assert_eq!(stdout(&o), "YES\n");
}

#[test]
fn reduce_five_needs_a_target() {
    let cnf = fixture("minsat_example.cnf");
    let o = argkit(&["reduce", "-r", "5", &cnf], "");
    assert_eq!(o.status.code(), Some(1));
    let o = argkit(&["reduce", "-r", "5", "--target", "1", &cnf], "");
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().filter(|l| l.starts_with("arg(")).count(), 17);
    let o = argkit(&["reduce", "-r", "5", "--target", "x1", "--variant", "literal", &cnf], "");
    assert!(o.status.success());
    let o = argkit(&["reduce", "-r", "1", "--target", "1", &fixture("monotone_example.qdimacs")], "");
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_prints_a_json_report() {
    let o = argkit(&["verify", "--claim", "PROP1", "--max-y", "1", "--max-z", "1", "--max-clauses", "2"], "");
    assert!(o.status.success());
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["claim"], "PROP1");
    assert_eq!(report["verdict"], "holds");
    assert!(report.get("wall_time_ms").is_none());

    let o = argkit(&["verify", "--claim", "LATTICE", "--max-args", "2", "--timing"], "");
    let report: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(report["instances_checked"], 16);
    assert!(report["wall_time_ms"].is_u64());

    let o = argkit(&["verify", "--claim", "PROP1", "--variant", "literal", "--output", "table"], "");
    assert!(stdout(&o).contains("FAILS"));
}

#[test]
fn identical_invocations_give_identical_output() {
    let args = ["verify", "--claim", "PROP4", "--samples", "50", "--seed", "3", "--max-vars", "4"];
    assert_eq!(argkit(&args, "").stdout, argkit(&args, "").stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(argkit(&["solve", "-s", "prf", "-"], "att(a,b).").status.code(), Some(1));
    assert_eq!(argkit(&["solve", "-s", "ideal", "-"], MUTUAL).status.code(), Some(1));
    assert_eq!(argkit(&["solve", "--bogus", "-s", "prf", "-"], MUTUAL).status.code(), Some(1));
    assert_eq!(argkit(&["solve", "-s", "prf", "/nonexistent/file.apx"], "").status.code(), Some(1));
    let big: String = (0..30).map(|i| format!("arg(a{i}).\n")).collect();
    assert_eq!(argkit(&["solve", "-s", "prf", "-"], &big).status.code(), Some(2));
    assert_eq!(argkit(&["verify", "--claim", "LATTICE", "--max-args", "6"], "").status.code(), Some(2));
    assert_eq!(argkit(&["--help"], "").status.code(), Some(0));
}

#[test]
fn formats_lists_everything() {
    let text = stdout(&argkit(&["formats"], ""));
    for needle in ["apx", "tgf", "qdimacs", "dimacs"] {
        assert!(text.contains(needle));
    }
}
