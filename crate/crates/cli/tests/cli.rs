use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
}

fn lexshell(args: &[&str]) -> (i32, Value, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lexshell"))
        .arg("--deterministic")
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    let report = serde_json::from_str(stdout.trim()).unwrap_or(Value::Null);
    (
        out.status.code().unwrap_or(-1),
        report,
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn scratch(name: &str, body: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("lexshell-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn gb_prints_initial_terms() {
    let (code, r, _) = lexshell(&["gb", s(&fixture("fig1.json"))]);
    assert_eq!(code, 0);
    assert_eq!(r["command"], "gb");
    assert_eq!(
        r["details"]["initial_terms"],
        serde_json::json!(["a-d-g", "b-e-g", "a-b-f"])
    );
    assert_eq!(r["details"]["quadratic"], true);
    assert!(r.get("timing_ms").is_none());
}

#[test]
fn timing_is_reported_without_the_flag() {
    let out = Command::new(env!("CARGO_BIN_EXE_lexshell"))
        .args(["sbs", s(&fixture("fig1.json"))])
        .output()
        .unwrap();
    let r: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(r["timing_ms"].is_number());
}

#[test]
fn verdicts_map_to_exit_codes() {
    let (code, r, _) = lexshell(&["sbs", s(&fixture("fig1.json"))]);
    assert_eq!((code, r["verdict"].clone()), (0, Value::Bool(true)));

    let (code, r, _) = lexshell(&["sbs", s(&fixture("short_least_chain.json"))]);
    assert_eq!((code, r["verdict"].clone()), (1, Value::Bool(false)));

    let (code, r, _) = lexshell(&["quadratic", s(&fixture("short_least_chain.json"))]);
    assert_eq!((code, r["verdict"].clone()), (0, Value::Bool(true)));
}

#[test]
fn missing_file_is_an_error() {
    let (code, r, err) = lexshell(&["gb", "/no/such/instance.json"]);
    assert_eq!(code, 2);
    assert!(r.is_null());
    assert!(err.starts_with("error:"));
}

#[test]
fn malformed_json_is_an_error() {
    let p = scratch("broken.json", "{\"kind\": \"poset\", \"elements\": [");
    let (code, _, err) = lexshell(&["validate", s(&p)]);
    assert_eq!(code, 2);
    assert!(err.contains("line"), "{err}");
}

#[test]
fn unknown_fields_are_rejected() {
    let p = scratch(
        "extra.json",
        r#"{"kind": "poset", "elements": ["a", "b"], "covers": [["a", "b"]], "colour": 3}"#,
    );
    let (code, _, _) = lexshell(&["validate", s(&p)]);
    assert_eq!(code, 2);
}

#[test]
fn hand_written_basis_verifies() {
    let (code, r, _) = lexshell(&[
        "gb",
        s(&fixture("fig1.json")),
        "--verify-paper-basis",
        s(&fixture("fig1_paper_basis.json")),
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"], true);
}

#[test]
fn partial_basis_is_rejected() {
    let p = scratch(
        "two.json",
        r#"{"elements": ["+a-d-g - a-b-e-g", "+b-e-g - b-f-g"]}"#,
    );
    let (code, r, _) = lexshell(&[
        "gb",
        s(&fixture("fig1.json")),
        "--verify-paper-basis",
        s(&p),
    ]);
    assert_eq!(code, 1);
    assert_eq!(r["verdict"], false);
}

#[test]
fn verify_dumps_a_fixture_on_violation() {
    let dir = std::env::temp_dir().join(format!("lexshell-dump-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let (code, _, err) = lexshell(&[
        "verify",
        s(&fixture("short_least_chain.json")),
        "--dump-dir",
        s(&dir),
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("x-u-v-y"), "{err}");
    let dumped: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert_eq!(dumped.len(), 1);

    let (code, r, _) = lexshell(&[
        "verify",
        s(&fixture("short_least_chain.json")),
        "--direction",
        "fwd",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"], true);
}

#[test]
fn verify_passes_on_nongraded_lattice() {
    let (code, r, _) = lexshell(&["verify", s(&fixture("fig1.json"))]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"], true);
}

#[test]
fn category_commands() {
    let exac = fixture("exac.json");
    let (code, r, _) = lexshell(&["complex", s(&exac)]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["face_counts"], serde_json::json!([3, 5, 2]));

    let (_, r, _) = lexshell(&["gb", s(&exac)]);
    assert_eq!(
        r["details"]["elements"],
        serde_json::json!(["+alpha2-beta - alpha1-beta"])
    );

    let (_, r, _) = lexshell(&["chains", s(&exac), "--from", "x0", "--to", "x2"]);
    assert_eq!(r["command"], "chains");

    let (code, r, _) = lexshell(&["shelling", s(&exac), "--search"]);
    assert_eq!(code, 1);
    assert_eq!(r["verdict"], false);
}

#[test]
fn order_explains_the_deciding_rule() {
    let (code, r, _) = lexshell(&[
        "order",
        s(&fixture("fig1.json")),
        "--explain",
        "a-d-g",
        "a-b-e-g",
    ]);
    assert_eq!(code, 0);
    assert_eq!(r["details"]["rule"], "degree");
    assert_eq!(r["details"]["relation"], "greater");

    let (code, _, _) = lexshell(&[
        "order",
        s(&fixture("fig1.json")),
        "--explain",
        "a-g",
        "a-d-g",
    ]);
    assert_eq!(code, 2);
}

#[test]
fn every_read_only_command_accepts_every_fixture() {
    let commands = [
        "validate",
        "chains",
        "complex",
        "nerve",
        "prefix",
        "lex",
        "sbs",
        "gb",
        "oracle",
        "quadratic",
    ];
    for f in ["fig1.json", "exac.json", "short_least_chain.json"] {
        for c in commands {
            let (code, r, err) = lexshell(&[c, s(&fixture(f))]);
            if c == "chains" && f == "exac.json" {
                // no initial object, so no maximal chains without --from/--to
                assert_eq!(code, 2, "{err}");
                continue;
            }
            assert!(code == 0 || code == 1, "{c} {f}: {err}");
            assert_eq!(r["command"], c);
        }
    }
}

#[test]
fn sweep_is_reproducible() {
    let args = [
        "sweep",
        "--max-elements",
        "4",
        "--max-label",
        "2",
        "--seed",
        "3",
    ];
    let (code, a, _) = lexshell(&args);
    let (_, b, _) = lexshell(&args);
    assert_eq!(code, 0);
    assert_eq!(a, b);
}

#[test]
fn augment_bounds_an_unbounded_poset() {
    let p = scratch(
        "vee.json",
        r#"{"kind": "poset", "elements": ["a", "b", "c"], "covers": [["a", "b"], ["a", "c"]]}"#,
    );
    let (code, r, _) = lexshell(&["augment", s(&p)]);
    assert_eq!(code, 0);
    let out = scratch("vee_aug.json", &r["details"].to_string());
    let (_, r, _) = lexshell(&["validate", s(&out)]);
    assert_eq!(r["details"]["bounded"], true);
}
