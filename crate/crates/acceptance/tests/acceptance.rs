//! One line per acceptance criterion. Exits non-zero when any criterion fails.

use std::collections::BTreeSet;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use serde_json::{json, Value};

use lexshell::combinatorics::Instance;
use lexshell::lab::{equivalence_sweep, SweepConfig, SweepSummary};
use lexshell_cli::run_args;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn cli(args: &[&str]) -> (u8, Value) {
    let mut full = vec!["lexshell", "--deterministic"];
    full.extend_from_slice(args);
    let out = run_args(full);
    (out.code, out.report().unwrap_or(Value::Null))
}

struct Outcome {
    pass: bool,
    note: String,
}

fn check(pass: bool, note: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        note: note.into(),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let mut out = f();
    let took = start.elapsed();
    if took > limit {
        out.pass = false;
    }
    out.note = format!("{} [{:.0} ms]", out.note, took.as_secs_f64() * 1000.0);
    out
}

fn nongraded_lattice_ground_truth() -> Outcome {
    let (code, r) = cli(&["gb", &fixture("fig1.json")]);
    let terms: BTreeSet<String> = r["details"]["initial_terms"]
        .as_array()
        .map(|a| {
            a.iter()
                .filter_map(|t| t.as_str().map(String::from))
                .collect()
        })
        .unwrap_or_default();
    let want: BTreeSet<String> = ["a-d-g", "b-e-g", "a-b-f"].map(String::from).into();
    let quadratic = r["details"]["quadratic"] == json!(true);
    check(
        code == 0 && terms == want && quadratic && r["details"]["reduced"] == json!(true),
        format!("initial terms {terms:?}, quadratic {quadratic}"),
    )
}

fn hand_written_basis() -> Outcome {
    let text = std::fs::read_to_string(fixture("fig1_paper_basis.json")).unwrap();
    let doc: Value = serde_json::from_str(&text).unwrap();
    let elements = doc["elements"].as_array().unwrap().clone();
    let (_, full) = cli(&[
        "gb",
        &fixture("fig1.json"),
        "--verify-paper-basis",
        &fixture("fig1_paper_basis.json"),
    ]);
    let mut verdicts = vec![full["verdict"].clone()];
    let dir = std::env::temp_dir().join(format!("lexshell-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for skip in 0..elements.len() {
        let mut fewer = elements.clone();
        fewer.remove(skip);
        let path = dir.join(format!("without-{skip}.json"));
        std::fs::write(&path, json!({ "elements": fewer }).to_string()).unwrap();
        let (_, r) = cli(&[
            "gb",
            &fixture("fig1.json"),
            "--verify-paper-basis",
            &path.to_string_lossy(),
        ]);
        verdicts.push(r["verdict"].clone());
    }
    let _ = std::fs::remove_dir_all(&dir);
    let mut want = vec![json!(true)];
    want.extend(std::iter::repeat_n(json!(false), elements.len()));
    check(
        verdicts == want,
        format!("full basis then each removal: {verdicts:?}"),
    )
}

fn category_pipeline() -> Outcome {
    let exac = fixture("exac.json");
    let (_, complex) = cli(&["complex", &exac]);
    let counts = complex["details"]["face_counts"].clone();
    let (_, gb) = cli(&["gb", &exac]);
    let elements = gb["details"]["elements"].clone();

    let text = std::fs::read_to_string(&exac).unwrap();
    let (inst, _) = lexshell::io::parse_instance(&text).unwrap();
    let sys = inst.system().unwrap();
    let nontrivial_classes = sys.classes().iter().filter(|c| c.paths.len() > 1).count();
    let is_category = matches!(inst, Instance::Category(_));

    check(
        is_category
            && counts == json!([3, 5, 2])
            && nontrivial_classes == 1
            && elements.as_array().map(Vec::len) == Some(1)
            && gb["details"]["quadratic"] == json!(true),
        format!(
            "faces {counts}, classes with several paths {nontrivial_classes}, basis {elements}"
        ),
    )
}

fn sweep() -> (SweepSummary, Duration) {
    let cfg = SweepConfig {
        max_elements: 8,
        max_label: 3,
        count: 500,
        categories: 200,
        seed: 42,
        jobs: 0,
        dump_dir: Some(std::env::temp_dir().join("lexshell-acceptance-witnesses")),
        ..SweepConfig::default()
    };
    let start = Instant::now();
    let s = equivalence_sweep(&cfg).expect("sweep runs within budget");
    (s, start.elapsed())
}

fn report(n: usize, name: &str, out: &Outcome) -> bool {
    let tag = if out.pass { "PASS" } else { "FAIL" };
    println!("{tag} criterion {n}: {name}: {}", out.note);
    out.pass
}

fn main() -> ExitCode {
    let mut results = Vec::new();
    let sec = Duration::from_secs(1);
    results.push(report(
        1,
        "reduced basis of the seven-element example",
        &timed(sec, nongraded_lattice_ground_truth),
    ));
    results.push(report(
        2,
        "hand-written basis verification",
        &timed(sec, hand_written_basis),
    ));

    let (s, took) = sweep();
    let budget = Duration::from_secs(30 * 60);
    let scope = format!(
        "{} instances, {} pairs, {:.1} s",
        s.instances,
        s.pairs,
        took.as_secs_f64()
    );
    let clean = s.errors == 0 && took <= budget && s.pairs > 0;

    results.push(report(
        3,
        "oracle equivalence",
        &check(
            clean && s.oracle_discrepancies == 0,
            format!("{} discrepancies over {scope}", s.oracle_discrepancies),
        ),
    ));
    results.push(report(
        4,
        "quadratic basis iff SBS",
        &check(
            clean && s.theorem_violations() == 0,
            format!(
                "{} violations ({} SBS without quadratic basis, {} quadratic basis without SBS, {} of those on graded posets) over {scope}",
                s.theorem_violations(),
                s.forward_failures,
                s.backward_failures,
                s.backward_failures_graded
            ),
        ),
    ));
    results.push(report(
        5,
        "LEX iff SBS",
        &check(
            clean && s.lex_sbs_disagreements == 0,
            format!("{} disagreements", s.lex_sbs_disagreements),
        ),
    ));
    results.push(report(
        6,
        "normal monomial count and truncation",
        &check(
            clean && s.dimension_discrepancies == 0 && s.truncation_discrepancies == 0,
            format!(
                "{} dimension and {} truncation discrepancies",
                s.dimension_discrepancies, s.truncation_discrepancies
            ),
        ),
    ));
    results.push(report(
        7,
        "category pipeline",
        &timed(sec, category_pipeline),
    ));
    results.push(report(
        8,
        "monomial order laws",
        &check(
            clean
                && s.order_law_checked > 0
                && s.order_law_failures == 0
                && s.incomparable_ties == 0,
            format!(
                "{} pairs checked, {} failures, {} ties",
                s.order_law_checked, s.order_law_failures, s.incomparable_ties
            ),
        ),
    ));
    results.push(report(
        9,
        "lex order of maximal chains is a shelling",
        &check(
            clean && s.shelling_checked > 0 && s.shelling_failures == 0,
            format!(
                "{} posets checked, {} failures",
                s.shelling_checked, s.shelling_failures
            ),
        ),
    ));

    let failed = results.iter().filter(|&&p| !p).count();
    println!(
        "{} of {} criteria pass",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
