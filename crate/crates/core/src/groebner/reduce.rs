//! Rank-keyed polynomials and reduction modulo a set of elements.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::algebra::element::{AlgebraElement, Scalar};
use crate::algebra::order::MonomialOrder;
use crate::combinatorics::paths::PathId;

/// How to pick the next reduction step. All strategies reach the same
/// normal form modulo a Gröbner basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionStrategy {
    /// Reduce the greatest reducible term first.
    GreatestFirst,
    /// Smallest reducible term, leftmost occurrence, shortest divisor.
    LeftmostInnermost,
    /// Greatest reducible term, rightmost occurrence, longest divisor.
    RightmostOutermost,
}

/// Terms keyed by order rank; the greatest monomial is the last key.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Poly(pub BTreeMap<u32, Scalar>);

impl Poly {
    pub fn from_element(ord: &MonomialOrder<'_>, f: &AlgebraElement) -> Self {
        Poly(f.terms().map(|(p, c)| (ord.rank(p), c)).collect())
    }

    pub fn to_element(&self, ord: &MonomialOrder<'_>) -> AlgebraElement {
        AlgebraElement::from_terms(self.0.iter().map(|(&r, &c)| (ord.path_at_rank(r), c)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn leading(&self) -> Option<(u32, Scalar)> {
        self.0.last_key_value().map(|(&r, &c)| (r, c))
    }

    pub fn add_term(&mut self, r: u32, c: Scalar) {
        if c.is_zero() {
            return;
        }
        let e = self.0.entry(r).or_insert_with(Scalar::zero);
        *e += c;
        if e.is_zero() {
            self.0.remove(&r);
        }
    }

    /// `self += k * other`.
    pub fn axpy(&mut self, k: Scalar, other: &Poly) {
        for (&r, &c) in &other.0 {
            self.add_term(r, k * c);
        }
    }

    pub fn make_monic(&mut self) {
        if let Some((_, lc)) = self.leading() {
            for c in self.0.values_mut() {
                *c /= lc;
            }
        }
    }

    /// `u * self * v`, dropping terms that do not compose.
    pub fn sandwich(&self, ord: &MonomialOrder<'_>, u: PathId, v: PathId) -> Poly {
        let table = ord.system().paths();
        let mut out = Poly::default();
        for (&r, &c) in &self.0 {
            let p = ord.path_at_rank(r);
            if let Some(q) = table.concat(u, p).and_then(|x| table.concat(x, v)) {
                out.add_term(ord.rank(q), c);
            }
        }
        out
    }
}

pub(crate) struct Reducer<'o, 'a> {
    pub ord: &'o MonomialOrder<'a>,
    pub polys: Vec<Poly>,
    pub leads: Vec<PathId>,
}

impl<'o, 'a> Reducer<'o, 'a> {
    pub fn new(ord: &'o MonomialOrder<'a>) -> Self {
        Reducer {
            ord,
            polys: Vec::new(),
            leads: Vec::new(),
        }
    }

    pub fn push(&mut self, p: Poly) {
        let (r, _) = p.leading().expect("only nonzero elements enter a basis");
        self.leads.push(self.ord.path_at_rank(r));
        self.polys.push(p);
    }

    /// `(basis index, position)` of every leading monomial dividing `m`.
    fn divisors(&self, m: PathId) -> impl Iterator<Item = (usize, usize)> + '_ {
        let table = self.ord.system().paths();
        let deg = table.path(m).degree();
        self.leads.iter().enumerate().filter_map(move |(i, &l)| {
            if table.path(l).degree() > deg {
                return None;
            }
            table.factor_position(m, l).map(|pos| (i, pos))
        })
    }

    fn first_divisor(&self, m: PathId, skip: Option<usize>) -> Option<(usize, usize)> {
        self.divisors(m).find(|&(i, _)| Some(i) != skip)
    }

    /// Subtracts the multiple of basis element `i` cancelling the term at rank `r`.
    fn step(&self, f: &mut Poly, r: u32, i: usize, pos: usize) {
        let table = self.ord.system().paths();
        let m = self.ord.path_at_rank(r);
        let lead = self.leads[i];
        let len = table.path(lead).degree();
        let u = table.subpath(m, 0, pos);
        let v = table.subpath(m, pos + len, table.path(m).degree());
        let c = f.0[&r];
        let (_, lc) = self.polys[i].leading().unwrap();
        let multiple = self.polys[i].sandwich(self.ord, u, v);
        f.axpy(-(c / lc), &multiple);
    }

    /// Full reduction, greatest term first. Element `skip` is ignored.
    pub fn normal_form(&self, f: &Poly, skip: Option<usize>) -> Poly {
        let mut work = f.clone();
        let mut done = Poly::default();
        while let Some((r, c)) = work.leading() {
            let m = self.ord.path_at_rank(r);
            match self.first_divisor(m, skip) {
                Some((i, pos)) => self.step(&mut work, r, i, pos),
                None => {
                    work.0.remove(&r);
                    done.0.insert(r, c);
                }
            }
        }
        done
    }

    pub fn normal_form_with(&self, f: &Poly, strategy: ReductionStrategy) -> Poly {
        if strategy == ReductionStrategy::GreatestFirst {
            return self.normal_form(f, None);
        }
        let table = self.ord.system().paths();
        let mut work = f.clone();
        loop {
            let ranks: Vec<u32> = match strategy {
                ReductionStrategy::LeftmostInnermost => work.0.keys().copied().collect(),
                _ => work.0.keys().rev().copied().collect(),
            };
            let choice = ranks.into_iter().find_map(|r| {
                let m = self.ord.path_at_rank(r);
                let ds = self.divisors(m);
                let pick = match strategy {
                    ReductionStrategy::LeftmostInnermost => {
                        ds.min_by_key(|&(i, pos)| (pos, table.path(self.leads[i]).degree(), i))
                    }
                    _ => ds.max_by_key(|&(i, pos)| {
                        let len = table.path(self.leads[i]).degree();
                        (pos + len, len, std::cmp::Reverse(i))
                    }),
                };
                pick.map(|(i, pos)| (r, i, pos))
            });
            match choice {
                Some((r, i, pos)) => self.step(&mut work, r, i, pos),
                None => return work,
            }
        }
    }
}
