//! Noncommutative Gröbner bases of parallel ideals in path algebras.
//!
//! Completion follows the usual overlap/inclusion scheme for path algebras.
//! Monomials are paths; "divides" means contiguous factor. The order is the
//! negative degree lexicographic order of [`MonomialOrder`], so leading terms
//! are the *lowest*-degree terms, and reduction replaces a monomial by
//! monomials of higher degree or smaller labels.

mod reduce;

use std::cmp::Reverse;
use std::collections::{BTreeSet, BinaryHeap};

use num_traits::{One, Signed};

pub use reduce::ReductionStrategy;
use reduce::{Poly, Reducer};

use crate::algebra::element::{truncate, AlgebraElement, Scalar};
use crate::algebra::ideal::{in_parallel_ideal, parallel_ideal_generators};
use crate::algebra::order::MonomialOrder;
use crate::combinatorics::paths::{path_bound, PathId, PathTable};
use crate::combinatorics::system::PathSystem;
use crate::error::{Error, Result};
use crate::par;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub elements: Vec<AlgebraElement>,
    /// Leading monomial of each element, in the same order.
    pub initial_terms: Vec<PathId>,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn initial_term_set(&self) -> BTreeSet<PathId> {
        self.initial_terms.iter().copied().collect()
    }

    /// Parallel-ideal bases are binomial; every coefficient should be ±1.
    pub fn has_unit_coefficients(&self) -> bool {
        self.elements
            .iter()
            .all(AlgebraElement::has_unit_coefficients)
    }
}

/// Greatest monomial of `f` with its coefficient.
pub fn leading_term(f: &AlgebraElement, ord: &MonomialOrder<'_>) -> Result<(PathId, Scalar)> {
    f.terms()
        .max_by_key(|&(p, _)| ord.rank(p))
        .ok_or(Error::ZeroElement)
}

fn reducer_for<'o, 'a>(basis: &[AlgebraElement], ord: &'o MonomialOrder<'a>) -> Reducer<'o, 'a> {
    let mut red = Reducer::new(ord);
    for g in basis.iter().filter(|g| !g.is_zero()) {
        red.push(Poly::from_element(ord, g));
    }
    red
}

/// Reduces every monomial of `f` divisible by a leading monomial of `basis`
/// until none is.
pub fn normal_form(
    f: &AlgebraElement,
    basis: &[AlgebraElement],
    ord: &MonomialOrder<'_>,
) -> AlgebraElement {
    normal_form_with(f, basis, ord, ReductionStrategy::GreatestFirst)
}

pub fn normal_form_with(
    f: &AlgebraElement,
    basis: &[AlgebraElement],
    ord: &MonomialOrder<'_>,
    strategy: ReductionStrategy,
) -> AlgebraElement {
    let red = reducer_for(basis, ord);
    red.normal_form_with(&Poly::from_element(ord, f), strategy)
        .to_element(ord)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Obstruction {
    /// `lead(i) = u c`, `lead(j) = c v` with `|c| = overlap`.
    Overlap { i: usize, j: usize, overlap: usize },
    /// `lead(i) = u lead(j) v`.
    Inclusion { i: usize, j: usize },
}

struct Completion<'o, 'a> {
    red: Reducer<'o, 'a>,
    queue: BinaryHeap<Reverse<(usize, u32, Obstruction)>>,
}

impl<'o, 'a> Completion<'o, 'a> {
    fn table(&self) -> &'a PathTable {
        self.red.ord.system().paths()
    }

    fn add(&mut self, mut p: Poly) {
        p.make_monic();
        let k = self.red.polys.len();
        self.red.push(p);
        for i in 0..=k {
            self.obstructions(i, k);
            if i != k {
                self.obstructions(k, i);
            }
        }
    }

    fn obstructions(&mut self, i: usize, j: usize) {
        let table = self.table();
        let ord = self.red.ord;
        let (li, lj) = (self.red.leads[i], self.red.leads[j]);
        let (ei, ej) = (&table.path(li).edges, &table.path(lj).edges);
        for overlap in 1..ei.len().min(ej.len()) {
            if ei[ei.len() - overlap..] == ej[..overlap] {
                let v = table.subpath(lj, overlap, ej.len());
                let amb = table.concat(li, v).expect("overlap composes");
                self.queue.push(Reverse((
                    table.path(amb).degree(),
                    ord.rank(amb),
                    Obstruction::Overlap { i, j, overlap },
                )));
            }
        }
        if i != j && table.divides(lj, li) {
            self.queue.push(Reverse((
                ei.len(),
                ord.rank(li),
                Obstruction::Inclusion { i, j },
            )));
        }
    }

    fn s_element(&self, ob: Obstruction) -> Poly {
        let table = self.table();
        let ord = self.red.ord;
        match ob {
            Obstruction::Overlap { i, j, overlap } => {
                let (li, lj) = (self.red.leads[i], self.red.leads[j]);
                let dj = table.path(lj).degree();
                let di = table.path(li).degree();
                let v = table.subpath(lj, overlap, dj);
                let u = table.subpath(li, 0, di - overlap);
                let left = self.red.polys[i].sandwich(ord, table.trivial(table.path(li).dom), v);
                let right = self.red.polys[j].sandwich(ord, u, table.trivial(table.path(lj).cod));
                let mut s = left;
                s.axpy(-Scalar::one(), &right);
                s
            }
            Obstruction::Inclusion { i, j } => {
                let (li, lj) = (self.red.leads[i], self.red.leads[j]);
                let pos = table.factor_position(li, lj).unwrap();
                let u = table.subpath(li, 0, pos);
                let v = table.subpath(li, pos + table.path(lj).degree(), table.path(li).degree());
                let mut s = self.red.polys[i].clone();
                s.axpy(-Scalar::one(), &self.red.polys[j].sandwich(ord, u, v));
                s
            }
        }
    }

    fn run(mut self) -> GroebnerBasis {
        while let Some(Reverse((_, _, ob))) = self.queue.pop() {
            let s = self.s_element(ob);
            let r = self.red.normal_form(&s, None);
            if !r.is_zero() {
                self.add(r);
            }
        }
        self.finish()
    }

    fn finish(self) -> GroebnerBasis {
        let table = self.table();
        let ord = self.red.ord;
        let leads = &self.red.leads;
        let keep: Vec<usize> = (0..leads.len())
            .filter(|&i| !(0..leads.len()).any(|j| j != i && table.divides(leads[j], leads[i])))
            .collect();
        let mut minimal = Reducer::new(ord);
        for &i in &keep {
            minimal.push(self.red.polys[i].clone());
        }
        let mut out: Vec<Poly> = (0..keep.len())
            .map(|k| {
                let mut p = minimal.normal_form(&minimal.polys[k], Some(k));
                p.make_monic();
                p
            })
            .collect();
        out.sort_by_key(|p| Reverse(p.leading().unwrap().0));
        GroebnerBasis {
            initial_terms: out
                .iter()
                .map(|p| ord.path_at_rank(p.leading().unwrap().0))
                .collect(),
            elements: out.iter().map(|p| p.to_element(ord)).collect(),
            reduced: true,
        }
    }
}

/// Reduced Gröbner basis of the two-sided ideal generated by `gens`.
///
/// Works for any generating set; [`buchberger`] additionally checks that
/// the generators lie in the parallel ideal.
pub fn complete(gens: &[AlgebraElement], ord: &MonomialOrder<'_>) -> GroebnerBasis {
    let mut c = Completion {
        red: Reducer::new(ord),
        queue: BinaryHeap::new(),
    };
    for g in gens {
        let r = c.red.normal_form(&Poly::from_element(ord, g), None);
        if !r.is_zero() {
            c.add(r);
        }
    }
    c.run()
}

/// Reduced Gröbner basis of the ideal generated by parallel differences.
pub fn buchberger(gens: &[AlgebraElement], ord: &MonomialOrder<'_>) -> Result<GroebnerBasis> {
    let sys = ord.system();
    if let Some(bad) = gens.iter().find(|g| !in_parallel_ideal(sys, g)) {
        return Err(Error::NotInIdeal(render_element(sys, bad)));
    }
    Ok(complete(gens, ord))
}

/// Reduced Gröbner basis of the whole parallel ideal of the instance.
pub fn parallel_ideal_basis(ord: &MonomialOrder<'_>) -> Result<GroebnerBasis> {
    buchberger(&parallel_ideal_generators(ord.system()), ord)
}

/// Whether `basis` is a Gröbner basis of the parallel ideal: every parallel
/// difference reduces to zero. Fails if some element is outside the ideal.
pub fn is_groebner_basis(basis: &[AlgebraElement], ord: &MonomialOrder<'_>) -> Result<bool> {
    let sys = ord.system();
    let reference = parallel_ideal_basis(ord)?;
    for g in basis {
        if !normal_form(g, &reference.elements, ord).is_zero() {
            return Err(Error::NotInIdeal(render_element(sys, g)));
        }
    }
    let red = reducer_for(basis, ord);
    for class in sys.classes() {
        for (k, &p) in class.paths.iter().enumerate() {
            for &q in &class.paths[k + 1..] {
                let diff = Poly::from_element(ord, &AlgebraElement::binomial(p, q));
                if !red.normal_form(&diff, None).is_zero() {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Brute-force initial ideal: every path that is not the order-minimum of
/// its parallel class.
pub fn initial_ideal_oracle(ord: &MonomialOrder<'_>) -> Result<BTreeSet<PathId>> {
    initial_ideal_oracle_with(ord, par::enabled())
}

pub fn initial_ideal_oracle_with(
    ord: &MonomialOrder<'_>,
    parallel: bool,
) -> Result<BTreeSet<PathId>> {
    let sys = ord.system();
    let bound = path_bound();
    if sys.paths().len() > bound {
        return Err(Error::PathBoundExceeded { bound });
    }
    let per_class = par::map_collect(sys.classes(), parallel, |class| {
        if class.paths.len() < 2 {
            return Vec::new();
        }
        let min = class
            .paths
            .iter()
            .copied()
            .min_by(|&a, &b| ord.cmp_ranked(a, b))
            .unwrap();
        class.paths.iter().copied().filter(|&p| p != min).collect()
    });
    Ok(per_class.into_iter().flatten().collect())
}

/// Elements of `set` with no proper factor in `set`.
pub fn minimal_generators(table: &PathTable, set: &BTreeSet<PathId>) -> BTreeSet<PathId> {
    set.iter()
        .copied()
        .filter(|&m| !set.iter().any(|&d| d != m && table.divides(d, m)))
        .collect()
}

/// Every truncation is homogeneous of degree two.
pub fn is_quadratic(basis: &GroebnerBasis, table: &PathTable) -> bool {
    basis.elements.iter().all(|g| {
        truncate(table, g)
            .map(|t| t.monomials().all(|p| table.path(p).degree() == 2))
            .unwrap_or(false)
    })
}

/// Paths (trivial ones included) divisible by none of `leads`.
pub fn normal_monomial_count(table: &PathTable, leads: &[PathId]) -> usize {
    table
        .ids()
        .filter(|&p| !leads.iter().any(|&l| table.divides(l, p)))
        .count()
}

/// Normal monomials are in bijection with intervals (posets) or morphisms
/// (categories).
pub fn dimension_check(sys: &PathSystem, basis: &GroebnerBasis) -> bool {
    normal_monomial_count(sys.paths(), &basis.initial_terms) == sys.classes().len()
}

/// Completes the truncations of `basis` and counts the normal monomials of
/// the ideal they generate. Returns `(count matches, count)`.
pub fn truncation_check(basis: &GroebnerBasis, ord: &MonomialOrder<'_>) -> Result<(bool, usize)> {
    let sys = ord.system();
    let table = sys.paths();
    let truncs: Vec<AlgebraElement> = basis
        .elements
        .iter()
        .map(|g| truncate(table, g))
        .collect::<Result<_>>()?;
    let tb = complete(&truncs, ord);
    let count = normal_monomial_count(table, &tb.initial_terms);
    Ok((count == sys.classes().len(), count))
}

/// Signed term list, e.g. `+a-d-g - a-b-e-g`.
pub fn render_element(sys: &PathSystem, f: &AlgebraElement) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let mut terms: Vec<(PathId, Scalar)> = f.terms().collect();
    let table = sys.paths();
    // lower degree first, then rendered text, for stable output
    terms.sort_by_key(|&(p, _)| (table.path(p).degree(), sys.render_path(p)));
    render_terms(sys, &terms)
}

/// Signed term list in the given term order.
pub fn render_terms(sys: &PathSystem, terms: &[(PathId, Scalar)]) -> String {
    let mut out = String::new();
    for (k, &(p, c)) in terms.iter().enumerate() {
        let sign = if c < Scalar::from_integer(0) {
            '-'
        } else {
            '+'
        };
        let mag = c.abs();
        if k > 0 {
            out.push(' ');
        }
        out.push(sign);
        if k > 0 {
            out.push(' ');
        }
        if !mag.is_one() {
            out.push_str(&format!("{mag} "));
        }
        out.push_str(&sys.render_path(p));
    }
    out
}

/// Renders with the leading term first.
pub fn render_ordered(ord: &MonomialOrder<'_>, f: &AlgebraElement) -> String {
    let mut terms: Vec<(PathId, Scalar)> = f.terms().collect();
    terms.sort_by_key(|&(p, _)| Reverse(ord.rank(p)));
    render_terms(ord.system(), &terms)
}

/// Parses a signed term list such as `+a-d-g - a-b-e-g` or `2/3 a-b`.
pub fn parse_element(sys: &PathSystem, text: &str) -> Result<AlgebraElement> {
    let bad = |m: String| Error::Parse {
        line: 1,
        column: 1,
        message: m,
    };
    let mut out = AlgebraElement::zero();
    let mut tokens = text.split_whitespace().peekable();
    let mut any = false;
    while tokens.peek().is_some() {
        let mut sign = Scalar::one();
        let mut tok = tokens.next().unwrap();
        if tok == "+" || tok == "-" {
            if tok == "-" {
                sign = -sign;
            }
            tok = tokens
                .next()
                .ok_or_else(|| bad(format!("dangling sign in `{text}`")))?;
        } else if let Some(rest) = tok.strip_prefix('+') {
            tok = rest;
        } else if any {
            return Err(bad(format!("missing sign before `{tok}`")));
        }
        let coeff = tok
            .parse::<Scalar>()
            .ok()
            .or_else(|| tok.parse::<i64>().ok().map(Scalar::from_integer));
        let (c, path_tok) = match coeff {
            Some(c) => {
                let p = tokens
                    .next()
                    .ok_or_else(|| bad(format!("coefficient without a path in `{text}`")))?;
                (c, p)
            }
            None => (Scalar::one(), tok),
        };
        out.add_term(sys.parse_path(path_tok)?, sign * c);
        any = true;
    }
    Ok(out)
}
