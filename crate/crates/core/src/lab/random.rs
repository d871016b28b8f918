//! Seeded random instances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::combinatorics::category::{AcyclicCategory, Generator};
use crate::combinatorics::instance::Instance;
use crate::combinatorics::paths::{PathTable, Quiver, DEFAULT_PATH_BOUND};
use crate::combinatorics::poset::{Poset, BOTTOM_NAME, TOP_NAME};
use crate::combinatorics::system::{Kind, PathSystem};
use crate::labelling::{check_prefix_condition, EdgeLabelling};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RandomParams {
    /// Total size, bounds included. At least 2.
    pub elements: usize,
    pub edge_density: f64,
    pub kind: Kind,
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn interior_names(prefix: &str, m: usize) -> Vec<String> {
    (1..=m).map(|i| format!("{prefix}{i}")).collect()
}

/// Random DAG on the interior, bounded by a forced minimum and maximum,
/// then transitively reduced.
pub fn random_poset(rng: &mut impl Rng, elements: usize, density: f64) -> Poset {
    let m = elements.max(2) - 2;
    let mut names = vec![BOTTOM_NAME.to_string()];
    names.extend(interior_names("v", m));
    names.push(TOP_NAME.to_string());
    let top = m + 1;
    let mut rel = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            if rng.random_bool(density) {
                rel.push((i, j));
            }
        }
    }
    rel.extend((1..=m).map(|v| (0, v)));
    rel.extend((1..=m).map(|v| (v, top)));
    if m == 0 {
        rel.push((0, top));
    }
    Poset::from_relations(names, &rel).expect("forward edges are acyclic")
}

/// Random generator multigraph on the interior with random relations
/// between parallel composites, then augmented.
pub fn random_category(rng: &mut impl Rng, objects: usize, density: f64) -> AcyclicCategory {
    let m = objects.max(2) - 2;
    let names = interior_names("x", m);
    let mut generators = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            if rng.random_bool(density) {
                let copies = if rng.random_bool(0.3) { 2 } else { 1 };
                for _ in 0..copies {
                    generators.push(Generator {
                        name: format!("g{}", generators.len() + 1),
                        dom: i,
                        cod: j,
                    });
                }
            }
        }
    }
    let quiver = Quiver::new(m, generators.iter().map(|g| (g.dom, g.cod)).collect());
    let table = PathTable::build(quiver, DEFAULT_PATH_BOUND).expect("forward edges are acyclic");
    let mut relations = Vec::new();
    let long: Vec<_> = table
        .nontrivial()
        .filter(|&p| table.path(p).degree() >= 2)
        .collect();
    for (k, &p) in long.iter().enumerate() {
        for &q in &long[k + 1..] {
            let (a, b) = (table.path(p), table.path(q));
            if a.dom == b.dom && a.cod == b.cod && relations.len() < 3 && rng.random_bool(0.4) {
                relations.push((a.edges.clone(), b.edges.clone()));
            }
        }
    }
    AcyclicCategory::from_parts(names, generators, relations)
        .expect("relations between composites keep generators indecomposable")
        .augment()
}

/// Deterministic for a given seed and parameters.
pub fn random_instance(seed: u64, params: RandomParams) -> Instance {
    let mut r = rng(seed);
    match params.kind {
        Kind::Poset => Instance::Poset(random_poset(&mut r, params.elements, params.edge_density)),
        Kind::Category => Instance::Category(random_category(
            &mut r,
            params.elements,
            params.edge_density,
        )),
    }
}

/// Uniform labels in `1..=max_label`, redrawn until the prefix condition
/// holds. Falls back to an injective labelling after `tries` failures.
pub fn random_prefix_labelling(
    rng: &mut impl Rng,
    sys: &PathSystem,
    max_label: i64,
    tries: usize,
) -> EdgeLabelling {
    for _ in 0..tries {
        let lab = EdgeLabelling::new(
            (0..sys.edge_count())
                .map(|_| rng.random_range(1..=max_label.max(1)))
                .collect(),
        );
        if check_prefix_condition(sys, &lab).holds {
            return lab;
        }
    }
    EdgeLabelling::injective(sys.edge_count())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(kind: Kind, elements: usize) -> RandomParams {
        RandomParams {
            elements,
            edge_density: 0.4,
            kind,
        }
    }

    #[test]
    fn deterministic() {
        for kind in [Kind::Poset, Kind::Category] {
            assert_eq!(
                random_instance(11, params(kind, 7)),
                random_instance(11, params(kind, 7))
            );
        }
    }

    #[test]
    fn two_elements_is_a_chain() {
        let Instance::Poset(p) = random_instance(3, params(Kind::Poset, 2)) else {
            unreachable!()
        };
        assert_eq!(p.len(), 2);
        assert_eq!(p.covers().len(), 1);
    }

    #[test]
    fn pinned_seven_element_poset() {
        let Instance::Poset(p) = random_instance(7, params(Kind::Poset, 7)) else {
            unreachable!()
        };
        assert!(p.is_bounded());
        assert_eq!(p.len(), 7);
        let covers: Vec<String> = p
            .covers()
            .iter()
            .map(|&(x, y)| format!("{}<{}", p.name(x), p.name(y)))
            .collect();
        assert_eq!(covers, PINNED);
    }

    const PINNED: &[&str] = &[
        "v1<v2", "v1<v3", "v2<v4", "v2<v5", "v3<v5", "0hat<v1", "v4<1hat", "v5<1hat",
    ];

    #[test]
    fn categories_are_bounded() {
        for seed in 0..30 {
            let inst = random_instance(seed, params(Kind::Category, 6));
            assert!(inst.is_bounded());
            let sys = inst.system().unwrap();
            assert!(sys.bounds().is_some());
        }
    }

    #[test]
    fn labellings_satisfy_prefix() {
        let mut r = rng(5);
        for seed in 0..20 {
            let inst = random_instance(seed, params(Kind::Poset, 8));
            let sys = inst.system().unwrap();
            let lab = random_prefix_labelling(&mut r, &sys, 3, 16);
            assert!(check_prefix_condition(&sys, &lab).holds);
        }
    }
}
