//! Small named instances used by tests, benches and documentation.

use crate::combinatorics::category::AcyclicCategory;
use crate::combinatorics::poset::Poset;
use crate::labelling::EdgeLabelling;

/// Seven-element non-graded lattice with an injective lex-shelling.
pub fn nongraded_lattice() -> (Poset, EdgeLabelling) {
    let covers = [
        ("a", "b", 4),
        ("a", "c", 1),
        ("a", "d", 8),
        ("b", "e", 6),
        ("b", "f", 5),
        ("c", "f", 2),
        ("d", "g", 9),
        ("e", "g", 7),
        ("f", "g", 3),
    ];
    let rel: Vec<_> = covers.iter().map(|&(x, y, _)| (x, y)).collect();
    let p = Poset::build(&["a", "b", "c", "d", "e", "f", "g"], &rel).unwrap();
    let lab = EdgeLabelling::new(covers.iter().map(|c| c.2).collect());
    (p, lab)
}

/// Three objects, `alpha1, alpha2: x0 -> x1`, `beta: x1 -> x2`,
/// `gamma: x0 -> x2`, with `alpha1 beta = alpha2 beta` (diagrammatic order).
pub fn example_category() -> (AcyclicCategory, EdgeLabelling) {
    let c = AcyclicCategory::build(
        &["x0", "x1", "x2"],
        &[
            ("alpha1", "x0", "x1"),
            ("alpha2", "x0", "x1"),
            ("beta", "x1", "x2"),
            ("gamma", "x0", "x2"),
        ],
        &[(vec!["alpha1", "beta"], vec!["alpha2", "beta"])],
    )
    .unwrap();
    (c, EdgeLabelling::new(vec![1, 2, 3, 4]))
}

pub fn three_chain() -> Poset {
    Poset::build(&["0", "1", "2"], &[("0", "1"), ("1", "2")]).unwrap()
}

/// `0 < x, y < 1`, covers ordered `0-x, 0-y, x-1, y-1`, labelled injectively.
pub fn diamond() -> (Poset, EdgeLabelling) {
    let p = Poset::build(
        &["0", "x", "y", "1"],
        &[("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")],
    )
    .unwrap();
    (p, EdgeLabelling::injective(4))
}

/// Two length-3 chains sharing only their endpoints; the labelling makes
/// them diverge at the bottom edge.
pub fn parallel_length_three() -> (Poset, EdgeLabelling) {
    let p = Poset::build(
        &["0", "x1", "x2", "y1", "y2", "1"],
        &[
            ("0", "x1"),
            ("x1", "x2"),
            ("x2", "1"),
            ("0", "y1"),
            ("y1", "y2"),
            ("y2", "1"),
        ],
    )
    .unwrap();
    (p, EdgeLabelling::new(vec![1, 1, 1, 2, 2, 2]))
}
