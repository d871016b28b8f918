//! Directed paths in a finite acyclic multigraph.
//!
//! Every path (trivial ones included) gets a dense [`PathId`]. Trivial paths
//! come first, one per vertex, so `PathId(v)` is the trivial path at `v`.

use std::collections::HashMap;

use crate::error::{Error, Result};

pub type VertexId = usize;
pub type EdgeId = usize;

/// Default safety bound on the number of enumerated paths.
pub const DEFAULT_PATH_BOUND: usize = 100_000;

/// Reads `LEXSHELL_PATH_BOUND`, falling back to [`DEFAULT_PATH_BOUND`].
pub fn path_bound() -> usize {
    std::env::var("LEXSHELL_PATH_BOUND")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(DEFAULT_PATH_BOUND)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathId(pub u32);

impl PathId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A directed multigraph whose edges are `(dom, cod)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    out_edges: Vec<Vec<EdgeId>>,
}

impl Quiver {
    pub fn new(vertex_count: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut out_edges = vec![Vec::new(); vertex_count];
        for (e, &(d, _)) in edges.iter().enumerate() {
            out_edges[d].push(e);
        }
        Quiver {
            vertex_count,
            edges,
            out_edges,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn out_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.out_edges[v]
    }

    /// Returns a vertex on a directed cycle, if there is one.
    pub fn find_cycle(&self) -> Option<VertexId> {
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; self.vertex_count];
        for start in 0..self.vertex_count {
            if state[start] != 0 {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            state[start] = 1;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                if let Some(&e) = self.out_edges[v].get(*next) {
                    *next += 1;
                    let w = self.edges[e].1;
                    match state[w] {
                        0 => {
                            state[w] = 1;
                            stack.push((w, 0));
                        }
                        1 => return Some(w),
                        _ => {}
                    }
                } else {
                    state[v] = 2;
                    stack.pop();
                }
            }
        }
        None
    }

    /// Reflexive reachability matrix.
    pub fn reachability(&self) -> Vec<Vec<bool>> {
        let n = self.vertex_count;
        let mut reach = vec![vec![false; n]; n];
        for (s, row) in reach.iter_mut().enumerate() {
            let mut stack = vec![s];
            row[s] = true;
            while let Some(v) = stack.pop() {
                for &e in &self.out_edges[v] {
                    let w = self.edges[e].1;
                    if !row[w] {
                        row[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
        reach
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    pub dom: VertexId,
    pub cod: VertexId,
    pub edges: Vec<EdgeId>,
}

impl Path {
    pub fn degree(&self) -> usize {
        self.edges.len()
    }
}

/// Every path of an acyclic quiver, indexed.
#[derive(Clone, Debug)]
pub struct PathTable {
    quiver: Quiver,
    paths: Vec<Path>,
    index: HashMap<Vec<EdgeId>, PathId>,
    from: Vec<Vec<PathId>>,
    to: Vec<Vec<PathId>>,
}

impl PathTable {
    /// Enumerates all paths. The quiver must be acyclic.
    pub fn build(quiver: Quiver, bound: usize) -> Result<Self> {
        if let Some(v) = quiver.find_cycle() {
            return Err(Error::CycleDetected(v.to_string()));
        }
        let n = quiver.vertex_count();
        let mut paths: Vec<Path> = (0..n)
            .map(|v| Path {
                dom: v,
                cod: v,
                edges: Vec::new(),
            })
            .collect();
        if paths.len() > bound {
            return Err(Error::PathBoundExceeded { bound });
        }
        for start in 0..n {
            let mut stack: Vec<(VertexId, Vec<EdgeId>)> = vec![(start, Vec::new())];
            // depth-first, edges visited in declaration order
            let mut out = Vec::new();
            while let Some((v, prefix)) = stack.pop() {
                if !prefix.is_empty() {
                    out.push(Path {
                        dom: start,
                        cod: v,
                        edges: prefix.clone(),
                    });
                    if paths.len() + out.len() > bound {
                        return Err(Error::PathBoundExceeded { bound });
                    }
                }
                for &e in quiver.out_edges(v).iter().rev() {
                    let mut next = prefix.clone();
                    next.push(e);
                    stack.push((quiver.edge(e).1, next));
                }
            }
            paths.extend(out);
        }
        let mut index = HashMap::with_capacity(paths.len());
        let mut from = vec![Vec::new(); n];
        let mut to = vec![Vec::new(); n];
        for (i, p) in paths.iter().enumerate() {
            let id = PathId(i as u32);
            if !p.edges.is_empty() {
                index.insert(p.edges.clone(), id);
            }
            from[p.dom].push(id);
            to[p.cod].push(id);
        }
        Ok(PathTable {
            quiver,
            paths,
            index,
            from,
            to,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn path(&self, id: PathId) -> &Path {
        &self.paths[id.index()]
    }

    pub fn ids(&self) -> impl Iterator<Item = PathId> + '_ {
        (0..self.paths.len() as u32).map(PathId)
    }

    /// Paths of positive degree.
    pub fn nontrivial(&self) -> impl Iterator<Item = PathId> + '_ {
        (self.quiver.vertex_count() as u32..self.paths.len() as u32).map(PathId)
    }

    pub fn trivial(&self, v: VertexId) -> PathId {
        PathId(v as u32)
    }

    pub fn starting_at(&self, v: VertexId) -> &[PathId] {
        &self.from[v]
    }

    pub fn ending_at(&self, v: VertexId) -> &[PathId] {
        &self.to[v]
    }

    pub fn lookup(&self, edges: &[EdgeId]) -> Option<PathId> {
        self.index.get(edges).copied()
    }

    /// Sequence of vertices visited by a path.
    pub fn vertices(&self, id: PathId) -> Vec<VertexId> {
        let p = self.path(id);
        let mut out = Vec::with_capacity(p.edges.len() + 1);
        out.push(p.dom);
        out.extend(p.edges.iter().map(|&e| self.quiver.edge(e).1));
        out
    }

    /// Concatenation `a` then `b`, if composable.
    pub fn concat(&self, a: PathId, b: PathId) -> Option<PathId> {
        let (pa, pb) = (self.path(a), self.path(b));
        if pa.cod != pb.dom {
            return None;
        }
        if pa.edges.is_empty() {
            return Some(b);
        }
        if pb.edges.is_empty() {
            return Some(a);
        }
        let mut edges = Vec::with_capacity(pa.edges.len() + pb.edges.len());
        edges.extend_from_slice(&pa.edges);
        edges.extend_from_slice(&pb.edges);
        self.lookup(&edges)
    }

    /// The factor of `id` spanning edges `start..end`.
    pub fn subpath(&self, id: PathId, start: usize, end: usize) -> PathId {
        let p = self.path(id);
        if start == end {
            let v = if start == 0 {
                p.dom
            } else {
                self.quiver.edge(p.edges[start - 1]).1
            };
            return self.trivial(v);
        }
        if start == 0 && end == p.edges.len() {
            return id;
        }
        self.lookup(&p.edges[start..end])
            .expect("every factor of an enumerated path is enumerated")
    }

    /// Position at which `small` occurs as a contiguous factor of `big`.
    ///
    /// In an acyclic quiver a factor of positive degree occurs at most once.
    pub fn factor_position(&self, big: PathId, small: PathId) -> Option<usize> {
        let (b, s) = (self.path(big), self.path(small));
        if s.edges.is_empty() {
            let verts = self.vertices(big);
            return verts.iter().position(|&v| v == s.dom);
        }
        if s.edges.len() > b.edges.len() {
            return None;
        }
        b.edges
            .windows(s.edges.len())
            .position(|w| w == s.edges.as_slice())
    }

    pub fn divides(&self, small: PathId, big: PathId) -> bool {
        self.factor_position(big, small).is_some()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> PathTable {
        // 0 -> 1 -> 3, 0 -> 2 -> 3
        let q = Quiver::new(4, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        PathTable::build(q, 1000).unwrap()
    }

    #[test]
    fn counts_paths_of_diamond() {
        let t = diamond();
        // 4 trivial + 4 edges + 2 long
        assert_eq!(t.len(), 10);
        assert_eq!(t.nontrivial().count(), 6);
    }

    #[test]
    fn concat_and_factor() {
        let t = diamond();
        let a = t.lookup(&[0]).unwrap();
        let b = t.lookup(&[2]).unwrap();
        let ab = t.concat(a, b).unwrap();
        assert_eq!(t.path(ab).edges, vec![0, 2]);
        assert_eq!(t.concat(b, a), None);
        assert_eq!(t.factor_position(ab, b), Some(1));
        assert_eq!(t.subpath(ab, 1, 2), b);
        assert_eq!(t.subpath(ab, 1, 1), t.trivial(1));
        assert!(!t.divides(t.lookup(&[1]).unwrap(), ab));
    }

    #[test]
    fn cycle_rejected() {
        let q = Quiver::new(2, vec![(0, 1), (1, 0)]);
        assert!(matches!(
            PathTable::build(q, 10),
            Err(Error::CycleDetected(_))
        ));
    }

    #[test]
    fn bound_enforced() {
        let q = Quiver::new(4, vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(
            PathTable::build(q, 5).unwrap_err(),
            Error::PathBoundExceeded { bound: 5 }
        );
    }
}
