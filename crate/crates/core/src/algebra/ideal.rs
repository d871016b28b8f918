use num_traits::Zero;

use crate::algebra::element::{AlgebraElement, Scalar};
use crate::combinatorics::system::PathSystem;

/// Differences `p - r` for every path `p` of a parallel class other than
/// the class representative `r` (its first enumerated path).
///
/// For categories the classes are morphisms, so paths that merely share
/// endpoints but compose differently are never related.
pub fn parallel_ideal_generators(sys: &PathSystem) -> Vec<AlgebraElement> {
    sys.classes()
        .iter()
        .flat_map(|c| {
            let rep = c.paths[0];
            c.paths[1..]
                .iter()
                .map(move |&p| AlgebraElement::binomial(p, rep))
        })
        .collect()
}

/// Membership in the parallel ideal: coefficients sum to zero on every class.
pub fn in_parallel_ideal(sys: &PathSystem, f: &AlgebraElement) -> bool {
    let mut sums = vec![Scalar::zero(); sys.classes().len()];
    for (p, c) in f.terms() {
        sums[sys.class_of(p)] += c;
    }
    sums.iter().all(Zero::is_zero)
}
