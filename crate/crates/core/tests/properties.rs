use num_rational::Ratio;
use proptest::prelude::*;

use lexshell::algebra::{in_parallel_ideal, multiply, truncate, AlgebraElement, MonomialOrder};
use lexshell::combinatorics::{Instance, Kind, PathId, PathSystem};
use lexshell::groebner::{self, ReductionStrategy};
use lexshell::io;
use lexshell::lab::random::{random_poset, random_prefix_labelling, rng};
use lexshell::lab::{random_instance, RandomParams};
use lexshell::labelling::{check_lex_condition, EdgeLabelling};

struct Setup {
    sys: PathSystem,
    lab: EdgeLabelling,
    instance: Instance,
}

fn setup(seed: u64, elements: usize, max_label: i64) -> Setup {
    let mut r = rng(seed);
    let p = random_poset(&mut r, elements, 0.45);
    let instance = Instance::Poset(p);
    let sys = instance.system().unwrap();
    let lab = random_prefix_labelling(&mut r, &sys, max_label, 64);
    Setup { sys, lab, instance }
}

/// Picks paths by index modulo the table size.
fn element(sys: &PathSystem, raw: &[(usize, i64)]) -> AlgebraElement {
    let ids: Vec<PathId> = sys.paths().ids().collect();
    AlgebraElement::from_terms(
        raw.iter()
            .map(|&(i, c)| (ids[i % ids.len()], Ratio::from_integer(c))),
    )
}

fn raw_element() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..1000, -3i64..=3), 0..6)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn multiplication_is_associative_and_distributive(
        seed in any::<u64>(),
        a in raw_element(),
        b in raw_element(),
        c in raw_element(),
    ) {
        let s = setup(seed, 6, 3);
        let t = s.sys.paths();
        let (a, b, c) = (element(&s.sys, &a), element(&s.sys, &b), element(&s.sys, &c));
        prop_assert_eq!(
            multiply(t, &multiply(t, &a, &b), &c),
            multiply(t, &a, &multiply(t, &b, &c))
        );
        prop_assert_eq!(
            multiply(t, &a, &b.add(&c)),
            multiply(t, &a, &b).add(&multiply(t, &a, &c))
        );
        prop_assert_eq!(
            multiply(t, &a.add(&b), &c),
            multiply(t, &a, &c).add(&multiply(t, &b, &c))
        );
    }

    #[test]
    fn normal_forms_do_not_depend_on_strategy(
        seed in any::<u64>(),
        elements in 4usize..=7,
        f in raw_element(),
    ) {
        let s = setup(seed, elements, 3);
        let ord = MonomialOrder::new(&s.sys, &s.lab).unwrap();
        let gb = groebner::parallel_ideal_basis(&ord).unwrap();
        let f = element(&s.sys, &f);
        let nf = groebner::normal_form(&f, &gb.elements, &ord);
        for strategy in [ReductionStrategy::LeftmostInnermost, ReductionStrategy::RightmostOutermost] {
            prop_assert_eq!(&groebner::normal_form_with(&f, &gb.elements, &ord, strategy), &nf);
        }
        prop_assert!(in_parallel_ideal(&s.sys, &f.sub(&nf)));
        let leads = gb.initial_term_set();
        for p in nf.monomials() {
            prop_assert!(!leads.iter().any(|&l| s.sys.paths().divides(l, p)));
        }
    }

    #[test]
    fn leading_term_survives_truncation(seed in any::<u64>(), f in raw_element()) {
        let s = setup(seed, 6, 3);
        let ord = MonomialOrder::new(&s.sys, &s.lab).unwrap();
        let f = element(&s.sys, &f);
        prop_assume!(!f.is_zero() && f.monomials().all(|p| s.sys.paths().path(p).degree() > 0));
        let t = truncate(s.sys.paths(), &f).unwrap();
        prop_assert_eq!(
            groebner::leading_term(&f, &ord).unwrap(),
            groebner::leading_term(&t, &ord).unwrap()
        );
    }

    #[test]
    fn random_instances_are_deterministic(seed in any::<u64>(), elements in 2usize..=8) {
        let params = RandomParams { elements, edge_density: 0.4, kind: Kind::Poset };
        prop_assert_eq!(random_instance(seed, params), random_instance(seed, params));
        let params = RandomParams { elements: elements.min(5), edge_density: 0.4, kind: Kind::Category };
        prop_assert_eq!(random_instance(seed, params), random_instance(seed, params));
    }

    #[test]
    fn instances_survive_serialisation(seed in any::<u64>(), elements in 2usize..=8, category in any::<bool>()) {
        let kind = if category { Kind::Category } else { Kind::Poset };
        let params = RandomParams { elements: if category { elements.min(5) } else { elements }, edge_density: 0.4, kind };
        let inst = random_instance(seed, params);
        let lab = EdgeLabelling::injective(inst.edge_count());
        let text = io::serialize_instance(&inst, Some(&lab));
        let (back, back_lab) = io::parse_instance(&text).unwrap();
        prop_assert_eq!(&back, &inst);
        prop_assert_eq!(back_lab, Some(lab));
        prop_assert_eq!(io::serialize_instance(&back, None), io::serialize_instance(&inst, None));
    }

    #[test]
    fn carriers_agree_for_lex_labellings(seed in any::<u64>(), elements in 3usize..=7) {
        let s = setup(seed, elements, 2);
        prop_assume!(check_lex_condition(&s.sys, &s.lab).unwrap().holds);
        let ord = MonomialOrder::new(&s.sys, &s.lab).unwrap();
        for w in s.sys.paths().nontrivial() {
            prop_assert_eq!(ord.carrier(w).unwrap(), ord.carrier_by_concatenation(w).unwrap());
        }
    }

    #[test]
    fn basis_matches_oracle(seed in any::<u64>(), elements in 3usize..=7) {
        let s = setup(seed, elements, 3);
        let ord = MonomialOrder::new(&s.sys, &s.lab).unwrap();
        let gb = groebner::parallel_ideal_basis(&ord).unwrap();
        let oracle = groebner::initial_ideal_oracle(&ord).unwrap();
        prop_assert_eq!(groebner::minimal_generators(s.sys.paths(), &oracle), gb.initial_term_set());
        prop_assert!(groebner::is_groebner_basis(&gb.elements, &ord).unwrap());
        prop_assert!(groebner::dimension_check(&s.sys, &gb));
        prop_assert!(s.instance.is_bounded());
    }
}
