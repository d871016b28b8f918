use std::path::Path;

use lexshell::algebra::MonomialOrder;
use lexshell::combinatorics::Instance;
use lexshell::fixtures;
use lexshell::groebner;
use lexshell::io;
use lexshell::lab::{self, Direction};
use lexshell::labelling::{check_lex_condition, check_sbs_condition};

fn load(name: &str) -> (Instance, lexshell::labelling::EdgeLabelling) {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name);
    let (inst, lab) = io::parse_instance(&std::fs::read_to_string(path).unwrap()).unwrap();
    (inst, lab.expect("fixture is labelled"))
}

#[test]
fn json_fixtures_match_builders() {
    let (inst, lab) = load("fig1.json");
    let (p, want) = fixtures::nongraded_lattice();
    assert_eq!(inst, Instance::Poset(p));
    assert_eq!(lab, want);

    let (inst, lab) = load("exac.json");
    let (c, want) = fixtures::example_category();
    assert_eq!(inst, Instance::Category(c));
    assert_eq!(lab, want);
}

#[test]
fn hand_written_basis_parses_and_verifies() {
    let (inst, lab) = load("fig1.json");
    let sys = inst.system().unwrap();
    let ord = MonomialOrder::new(&sys, &lab).unwrap();
    let text = std::fs::read_to_string(
        Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures/fig1_paper_basis.json"),
    )
    .unwrap();
    let basis = io::parse_basis_file(&sys, &text).unwrap();
    assert_eq!(basis.len(), 3);
    assert!(groebner::is_groebner_basis(&basis, &ord).unwrap());
}

#[test]
fn short_least_chain_is_quadratic_without_sbs() {
    let (inst, lab) = load("short_least_chain.json");
    let sys = inst.system().unwrap();
    assert!(!check_sbs_condition(&sys, &lab).unwrap().holds);
    assert!(!check_lex_condition(&sys, &lab).unwrap().holds);

    let ex = lab::examine(&sys, &lab).unwrap();
    assert!(ex.quadratic);
    assert_eq!(ex.sbs_witness.as_deref(), Some("x-u-v-y"));

    assert!(lab::verify(&sys, &lab, Direction::Forward).is_ok());
    assert!(lab::verify(&sys, &lab, Direction::Backward).is_err());
}
