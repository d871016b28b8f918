use std::collections::HashMap;

use crate::combinatorics::paths::{Quiver, VertexId};
use crate::error::{Error, Result};

pub const BOTTOM_NAME: &str = "0hat";
pub const TOP_NAME: &str = "1hat";

/// A finite poset stored by its cover relations.
///
/// Element order follows construction order and is used for iteration
/// everywhere. `covers` keeps the order in which relations were supplied.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    index: HashMap<String, VertexId>,
    covers: Vec<(VertexId, VertexId)>,
    upper: Vec<Vec<VertexId>>,
    lower: Vec<Vec<VertexId>>,
    leq: Vec<Vec<bool>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub bottom: VertexId,
    pub top: VertexId,
    pub members: Vec<VertexId>,
}

/// A saturated chain `x0 < x1 < ... < xn` where each step is a cover.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chain {
    pub vertices: Vec<VertexId>,
}

impl Chain {
    pub fn length(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }
}

fn validate_names<S: AsRef<str>>(elements: &[S]) -> Result<HashMap<String, VertexId>> {
    let mut index = HashMap::with_capacity(elements.len());
    for (i, e) in elements.iter().enumerate() {
        let name = e.as_ref();
        if name.is_empty() || name.contains('-') || name.chars().any(char::is_whitespace) {
            return Err(Error::Validation(format!(
                "identifier `{name}` must be non-empty without '-' or whitespace"
            )));
        }
        if index.insert(name.to_string(), i).is_some() {
            return Err(Error::DuplicateElement(name.to_string()));
        }
    }
    Ok(index)
}

impl Poset {
    /// Builds a poset from element names and order relations.
    ///
    /// The relations may contain non-covers; they are reduced to the
    /// transitive reduction of their closure.
    pub fn build<S: AsRef<str>>(elements: &[S], relations: &[(S, S)]) -> Result<Self> {
        let index = validate_names(elements)?;
        let lookup = |s: &S| {
            index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.as_ref().to_string()))
        };
        let mut pairs = Vec::with_capacity(relations.len());
        for (x, y) in relations {
            pairs.push((lookup(x)?, lookup(y)?));
        }
        let names = elements.iter().map(|s| s.as_ref().to_string()).collect();
        Self::from_relations(names, &pairs)
    }

    /// Same as [`Poset::build`] on already-indexed relations.
    pub fn from_relations(names: Vec<String>, relations: &[(VertexId, VertexId)]) -> Result<Self> {
        let index = validate_names(&names)?;
        let n = names.len();
        for &(x, y) in relations {
            if x >= n || y >= n {
                return Err(Error::UnknownElement(x.max(y).to_string()));
            }
            if x == y {
                return Err(Error::CycleDetected(names[x].clone()));
            }
        }
        let quiver = Quiver::new(n, relations.to_vec());
        if let Some(v) = quiver.find_cycle() {
            return Err(Error::CycleDetected(names[v].clone()));
        }
        let leq = quiver.reachability();
        let mut covers: Vec<(VertexId, VertexId)> = Vec::new();
        for &(x, y) in relations {
            let between = (0..n).any(|z| z != x && z != y && leq[x][z] && leq[z][y]);
            if !between && !covers.contains(&(x, y)) {
                covers.push((x, y));
            }
        }
        let mut upper = vec![Vec::new(); n];
        let mut lower = vec![Vec::new(); n];
        for &(x, y) in &covers {
            upper[x].push(y);
            lower[y].push(x);
        }
        Ok(Poset {
            names,
            index,
            covers,
            upper,
            lower,
            leq,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Result<VertexId> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn covers(&self) -> &[(VertexId, VertexId)] {
        &self.covers
    }

    pub fn cover_index(&self, x: VertexId, y: VertexId) -> Option<usize> {
        self.covers.iter().position(|&c| c == (x, y))
    }

    pub fn upper_covers(&self, x: VertexId) -> &[VertexId] {
        &self.upper[x]
    }

    pub fn lower_covers(&self, x: VertexId) -> &[VertexId] {
        &self.lower[x]
    }

    pub fn leq(&self, x: VertexId, y: VertexId) -> bool {
        self.leq[x][y]
    }

    pub fn lt(&self, x: VertexId, y: VertexId) -> bool {
        x != y && self.leq[x][y]
    }

    /// Number of pairs `x <= y`, i.e. the number of closed intervals.
    pub fn relation_size(&self) -> usize {
        self.leq.iter().flatten().filter(|&&b| b).count()
    }

    pub fn hasse_quiver(&self) -> Quiver {
        Quiver::new(self.len(), self.covers.clone())
    }

    pub fn minimal_elements(&self) -> Vec<VertexId> {
        (0..self.len())
            .filter(|&v| self.lower[v].is_empty())
            .collect()
    }

    pub fn maximal_elements(&self) -> Vec<VertexId> {
        (0..self.len())
            .filter(|&v| self.upper[v].is_empty())
            .collect()
    }

    pub fn bottom(&self) -> Option<VertexId> {
        match self.minimal_elements().as_slice() {
            [b] => Some(*b),
            _ => None,
        }
    }

    pub fn top(&self) -> Option<VertexId> {
        match self.maximal_elements().as_slice() {
            [t] => Some(*t),
            _ => None,
        }
    }

    pub fn is_bounded(&self) -> bool {
        self.bottom().is_some() && self.top().is_some()
    }

    /// Adjoins a fresh minimum and maximum.
    ///
    /// The new minimum is covered by the old minimal elements only, and the
    /// new maximum covers the old maximal elements only.
    pub fn augment(&self) -> Poset {
        let fresh = |base: &str| {
            let mut name = base.to_string();
            while self.index.contains_key(&name) {
                name.push('\'');
            }
            name
        };
        let mut names = self.names.clone();
        let n = names.len();
        let (bot, top) = (n, n + 1);
        names.push(fresh(BOTTOM_NAME));
        names.push(fresh(TOP_NAME));
        let mut rel = self.covers.clone();
        if n == 0 {
            rel.push((bot, top));
        }
        rel.extend(self.minimal_elements().into_iter().map(|m| (bot, m)));
        rel.extend(self.maximal_elements().into_iter().map(|m| (m, top)));
        Poset::from_relations(names, &rel).expect("augmentation preserves acyclicity")
    }

    /// Adjoins bounds only when the poset lacks them.
    pub fn augment_if_needed(&self) -> Poset {
        if self.is_bounded() {
            self.clone()
        } else {
            self.augment()
        }
    }

    pub fn closed_interval(&self, x: VertexId, y: VertexId) -> Result<Interval> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(
                self.names[x].clone(),
                self.names[y].clone(),
            ));
        }
        let members = (0..self.len())
            .filter(|&z| self.leq(x, z) && self.leq(z, y))
            .collect();
        Ok(Interval {
            bottom: x,
            top: y,
            members,
        })
    }

    /// All closed intervals `[x, y]` with `x <= y`, in element order.
    pub fn intervals(&self) -> Vec<Interval> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in 0..self.len() {
                if self.leq(x, y) {
                    out.push(self.closed_interval(x, y).unwrap());
                }
            }
        }
        out
    }

    /// Every saturated chain from the bottom to the top of `iv`.
    pub fn maximal_chains(&self, iv: &Interval) -> Vec<Chain> {
        let mut out = Vec::new();
        let mut stack = vec![vec![iv.bottom]];
        while let Some(chain) = stack.pop() {
            let last = *chain.last().unwrap();
            if last == iv.top {
                out.push(Chain { vertices: chain });
                continue;
            }
            for &y in self.upper[last].iter().rev() {
                if self.leq(y, iv.top) {
                    let mut next = chain.clone();
                    next.push(y);
                    stack.push(next);
                }
            }
        }
        out
    }

    /// Whether all maximal chains of the bounded poset have equal length.
    pub fn is_graded(&self) -> Result<bool> {
        let (b, t) = self.bottom().zip(self.top()).ok_or(Error::NotBounded)?;
        let iv = self.closed_interval(b, t)?;
        let mut lengths = self.maximal_chains(&iv).into_iter().map(|c| c.length());
        let first = lengths.next();
        Ok(lengths.all(|l| Some(l) == first))
    }

    /// Length of the longest maximal chain in `[x, y]`.
    pub fn rank_of_interval(&self, x: VertexId, y: VertexId) -> Result<usize> {
        let iv = self.closed_interval(x, y)?;
        Ok(self
            .maximal_chains(&iv)
            .iter()
            .map(Chain::length)
            .max()
            .unwrap_or(0))
    }

    /// Strict chains `x1 < ... < xk` (not necessarily saturated), `k >= 1`.
    pub fn all_chains(&self) -> Vec<Vec<VertexId>> {
        let mut out = Vec::new();
        let mut stack: Vec<Vec<VertexId>> = (0..self.len()).rev().map(|v| vec![v]).collect();
        while let Some(c) = stack.pop() {
            let last = *c.last().unwrap();
            for y in (0..self.len()).rev() {
                if self.lt(last, y) {
                    let mut next = c.clone();
                    next.push(y);
                    stack.push(next);
                }
            }
            out.push(c);
        }
        out
    }

    /// Relabels elements by a permutation: element `i` becomes `perm[i]`.
    pub fn relabel(&self, perm: &[VertexId]) -> Poset {
        let mut names = vec![String::new(); self.len()];
        for (i, &p) in perm.iter().enumerate() {
            names[p] = self.names[i].clone();
        }
        let rel: Vec<_> = self
            .covers
            .iter()
            .map(|&(x, y)| (perm[x], perm[y]))
            .collect();
        Poset::from_relations(names, &rel).unwrap()
    }

    /// Sorted list of covers; equal for identical posets regardless of input order.
    pub fn cover_set(&self) -> Vec<(VertexId, VertexId)> {
        let mut c = self.covers.clone();
        c.sort_unstable();
        c
    }

    /// All strict relations `x < y`.
    pub fn strict_relations(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for x in 0..self.len() {
            for y in 0..self.len() {
                if self.lt(x, y) {
                    out.push((x, y));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn three_chain() {
        let p = Poset::build(&["0", "1", "2"], &[("0", "1"), ("1", "2")]).unwrap();
        assert_eq!(p.relation_size(), 6);
        assert!(p.is_graded().unwrap());
    }

    #[test]
    fn two_cycle_rejected() {
        let err = Poset::build(&["0", "1"], &[("0", "1"), ("1", "0")]).unwrap_err();
        assert!(matches!(err, Error::CycleDetected(_)));
    }

    #[test]
    fn unknown_and_duplicate() {
        assert_eq!(
            Poset::build(&["0"], &[("0", "9")]).unwrap_err(),
            Error::UnknownElement("9".into())
        );
        assert_eq!(
            Poset::build(&["0", "0"], &[]).unwrap_err(),
            Error::DuplicateElement("0".into())
        );
    }

    #[test]
    fn nongraded_lattice_shape() {
        let (p, _) = fixtures::nongraded_lattice();
        assert_eq!(p.covers().len(), 9);
        assert_eq!(p.bottom(), Some(p.index_of("a").unwrap()));
        assert_eq!(p.top(), Some(p.index_of("g").unwrap()));
        assert!(!p.is_graded().unwrap());
    }

    #[test]
    fn non_covers_are_reduced() {
        let p = Poset::build(&["0", "1", "2"], &[("0", "1"), ("1", "2"), ("0", "2")]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn intervals_of_nongraded_lattice() {
        let (p, _) = fixtures::nongraded_lattice();
        let ix = |s| p.index_of(s).unwrap();
        let iv = p.closed_interval(ix("a"), ix("f")).unwrap();
        let mut names: Vec<_> = iv.members.iter().map(|&v| p.name(v)).collect();
        names.sort();
        assert_eq!(names, ["a", "b", "c", "f"]);
        assert_eq!(
            p.closed_interval(ix("c"), ix("c")).unwrap().members.len(),
            1
        );
        assert_eq!(
            p.closed_interval(ix("d"), ix("e")).unwrap_err(),
            Error::NotComparable("d".into(), "e".into())
        );
    }

    #[test]
    fn chains_of_nongraded_lattice() {
        let (p, _) = fixtures::nongraded_lattice();
        let ix = |s| p.index_of(s).unwrap();
        let render = |iv: &Interval| {
            let mut v: Vec<String> = p
                .maximal_chains(iv)
                .iter()
                .map(|c| {
                    c.vertices
                        .iter()
                        .map(|&x| p.name(x))
                        .collect::<Vec<_>>()
                        .join("-")
                })
                .collect();
            v.sort();
            v
        };
        let ag = p.closed_interval(ix("a"), ix("g")).unwrap();
        assert_eq!(render(&ag), ["a-b-e-g", "a-b-f-g", "a-c-f-g", "a-d-g"]);
        let bg = p.closed_interval(ix("b"), ix("g")).unwrap();
        assert_eq!(render(&bg), ["b-e-g", "b-f-g"]);
        let cc = p.closed_interval(ix("c"), ix("c")).unwrap();
        assert_eq!(
            p.maximal_chains(&cc),
            vec![Chain {
                vertices: vec![ix("c")]
            }]
        );
    }

    #[test]
    fn augment_examples() {
        let anti = Poset::build(&["x", "y"], &[]).unwrap();
        let d = anti.augment();
        assert_eq!(d.len(), 4);
        assert_eq!(d.covers().len(), 4);
        assert!(d.is_bounded());

        let chain = Poset::build(&["0", "1", "2"], &[("0", "1"), ("1", "2")]).unwrap();
        let five = chain.augment();
        assert_eq!(five.len(), 5);
        assert_eq!(five.covers().len(), 4);

        let (lattice, _) = fixtures::nongraded_lattice();
        let aug = lattice.augment();
        assert_eq!(aug.len(), 9);
        let bot = aug.index_of(BOTTOM_NAME).unwrap();
        let top = aug.index_of(TOP_NAME).unwrap();
        assert_eq!(aug.upper_covers(bot), &[aug.index_of("a").unwrap()]);
        assert_eq!(aug.lower_covers(top), &[aug.index_of("g").unwrap()]);
        assert_eq!(lattice.augment_if_needed(), lattice);
    }

    #[test]
    fn graded_examples() {
        let b2 = Poset::build(
            &["0", "x", "y", "1"],
            &[("0", "x"), ("0", "y"), ("x", "1"), ("y", "1")],
        )
        .unwrap();
        assert!(b2.is_graded().unwrap());
        let anti = Poset::build(&["x", "y"], &[]).unwrap();
        assert_eq!(anti.is_graded().unwrap_err(), Error::NotBounded);
    }

    #[test]
    fn all_chains_of_three_chain() {
        let p = Poset::build(&["0", "1", "2"], &[("0", "1"), ("1", "2")]).unwrap();
        // 3 singletons, 3 pairs, 1 triple
        assert_eq!(p.all_chains().len(), 7);
    }
}
