use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

use crate::combinatorics::paths::{PathId, PathTable};
use crate::error::{Error, Result};

pub type Scalar = Rational64;

/// A finite rational combination of paths. Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement {
    terms: BTreeMap<PathId, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(p: PathId) -> Self {
        Self::term(p, Scalar::one())
    }

    pub fn term(p: PathId, c: Scalar) -> Self {
        let mut e = Self::zero();
        e.add_term(p, c);
        e
    }

    /// `p - q`.
    pub fn binomial(p: PathId, q: PathId) -> Self {
        let mut e = Self::monomial(p);
        e.add_term(q, -Scalar::one());
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (PathId, Scalar)>>(terms: I) -> Self {
        let mut e = Self::zero();
        for (p, c) in terms {
            e.add_term(p, c);
        }
        e
    }

    pub fn add_term(&mut self, p: PathId, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: PathId) -> Scalar {
        self.terms.get(&p).copied().unwrap_or_else(Scalar::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (PathId, Scalar)> + '_ {
        self.terms.iter().map(|(&p, &c)| (p, c))
    }

    pub fn monomials(&self) -> impl Iterator<Item = PathId> + '_ {
        self.terms.keys().copied()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p, c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in other.terms() {
            out.add_term(p, -c);
        }
        out
    }

    pub fn scale(&self, k: Scalar) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&p, &c)| (p, c * k)).collect(),
        }
    }

    /// Whether every coefficient is `1` or `-1`.
    pub fn has_unit_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.abs().is_one())
    }

    pub fn min_degree(&self, table: &PathTable) -> Option<usize> {
        self.monomials().map(|p| table.path(p).degree()).min()
    }

    pub fn is_homogeneous(&self, table: &PathTable) -> bool {
        let mut degrees = self.monomials().map(|p| table.path(p).degree());
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|x| x == d),
        }
    }
}

/// Bilinear extension of path concatenation; non-composable pairs vanish.
pub fn multiply(table: &PathTable, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (p, x) in a.terms() {
        for (q, y) in b.terms() {
            if let Some(pq) = table.concat(p, q) {
                out.add_term(pq, x * y);
            }
        }
    }
    out
}

/// The sum of the terms of least degree.
pub fn truncate(table: &PathTable, f: &AlgebraElement) -> Result<AlgebraElement> {
    let d = f.min_degree(table).ok_or(Error::ZeroElement)?;
    Ok(AlgebraElement::from_terms(
        f.terms().filter(|&(p, _)| table.path(p).degree() == d),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::system::PathSystem;
    use crate::fixtures;

    fn fig() -> PathSystem {
        PathSystem::from_poset(&fixtures::nongraded_lattice().0).unwrap()
    }

    fn m(s: &PathSystem, t: &str) -> AlgebraElement {
        AlgebraElement::monomial(s.parse_path(t).unwrap())
    }

    #[test]
    fn multiplication_examples() {
        let s = fig();
        let t = s.paths();
        assert_eq!(multiply(t, &m(&s, "a-b"), &m(&s, "b-f")), m(&s, "a-b-f"));
        assert!(multiply(t, &m(&s, "a-b"), &m(&s, "c-f")).is_zero());
        let diff = m(&s, "a-b").sub(&m(&s, "a-d"));
        assert_eq!(multiply(t, &diff, &m(&s, "b-e")), m(&s, "a-b-e"));
    }

    #[test]
    fn trivial_paths_act_as_local_identities() {
        let s = fig();
        let t = s.paths();
        assert_eq!(multiply(t, &m(&s, "a"), &m(&s, "a-b")), m(&s, "a-b"));
        assert!(multiply(t, &m(&s, "b"), &m(&s, "a-b")).is_zero());
    }

    #[test]
    fn truncation_examples() {
        let s = fig();
        let t = s.paths();
        let f = m(&s, "a-d-g").sub(&m(&s, "a-b-e-g"));
        assert_eq!(truncate(t, &f).unwrap(), m(&s, "a-d-g"));
        let h = m(&s, "a-b-f").sub(&m(&s, "a-c-f"));
        assert_eq!(truncate(t, &h).unwrap(), h);
        let mixed = h.add(&m(&s, "a-b-e-g"));
        assert_eq!(truncate(t, &mixed).unwrap(), h);
        assert_eq!(
            truncate(t, &AlgebraElement::zero()).unwrap_err(),
            Error::ZeroElement
        );
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let s = fig();
        let p = s.parse_path("a-b").unwrap();
        let e = AlgebraElement::binomial(p, p);
        assert!(e.is_zero());
    }
}
