//! A common view of posets and acyclic categories: a quiver, its paths, and
//! the partition of paths into parallel classes.
//!
//! For a poset the classes are the closed intervals (paths with equal
//! endpoints). For a category they are the morphisms (paths with equal
//! composite). Everything downstream of construction works on this view.

use std::collections::HashMap;

use crate::combinatorics::category::AcyclicCategory;
use crate::combinatorics::paths::{path_bound, EdgeId, PathId, PathTable, VertexId};
use crate::combinatorics::poset::Poset;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Poset,
    Category,
}

/// All paths sharing an interval (poset) or a composite morphism (category).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParallelClass {
    pub dom: VertexId,
    pub cod: VertexId,
    pub paths: Vec<PathId>,
}

#[derive(Clone, Debug)]
pub struct PathSystem {
    kind: Kind,
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    paths: PathTable,
    class_of: Vec<usize>,
    classes: Vec<ParallelClass>,
    reach: Vec<Vec<bool>>,
    bounds: Option<(VertexId, VertexId)>,
}

impl PathSystem {
    pub fn from_poset(p: &Poset) -> Result<Self> {
        Self::from_poset_with_bound(p, path_bound())
    }

    pub fn from_poset_with_bound(p: &Poset, bound: usize) -> Result<Self> {
        let paths = PathTable::build(p.hasse_quiver(), bound)?;
        let mut key: HashMap<(VertexId, VertexId), usize> = HashMap::new();
        let mut classes: Vec<ParallelClass> = Vec::new();
        let mut class_of = Vec::with_capacity(paths.len());
        for id in paths.ids() {
            let path = paths.path(id);
            let c = *key.entry((path.dom, path.cod)).or_insert_with(|| {
                classes.push(ParallelClass {
                    dom: path.dom,
                    cod: path.cod,
                    paths: Vec::new(),
                });
                classes.len() - 1
            });
            classes[c].paths.push(id);
            class_of.push(c);
        }
        let edge_names = p
            .covers()
            .iter()
            .map(|&(x, y)| format!("{}-{}", p.name(x), p.name(y)))
            .collect();
        let reach = (0..p.len())
            .map(|x| (0..p.len()).map(|y| p.leq(x, y)).collect())
            .collect();
        Ok(PathSystem {
            kind: Kind::Poset,
            vertex_names: p.names().to_vec(),
            edge_names,
            paths,
            class_of,
            classes,
            reach,
            bounds: p.bottom().zip(p.top()),
        })
    }

    pub fn from_category(c: &AcyclicCategory) -> Self {
        let classes = c
            .morphisms()
            .iter()
            .map(|m| ParallelClass {
                dom: m.dom,
                cod: m.cod,
                paths: m.paths.clone(),
            })
            .collect();
        let n = c.objects().len();
        let reach = (0..n)
            .map(|x| (0..n).map(|y| c.hom_nonempty(x, y)).collect())
            .collect();
        PathSystem {
            kind: Kind::Category,
            vertex_names: c.objects().to_vec(),
            edge_names: c.generators().iter().map(|g| g.name.clone()).collect(),
            paths: c.paths().clone(),
            class_of: c.class_assignment().to_vec(),
            classes,
            reach,
            bounds: c.initial_object().zip(c.terminal_object()),
        }
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn paths(&self) -> &PathTable {
        &self.paths
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_names.len()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edge_names[e]
    }

    pub fn classes(&self) -> &[ParallelClass] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &ParallelClass {
        &self.classes[c]
    }

    pub fn class_of(&self, p: PathId) -> usize {
        self.class_of[p.index()]
    }

    /// `x <= y` for posets; `hom(x, y)` nonempty for categories.
    pub fn reaches(&self, x: VertexId, y: VertexId) -> bool {
        self.reach[x][y]
    }

    /// The minimum and maximum (poset) or initial and terminal objects.
    pub fn bounds(&self) -> Option<(VertexId, VertexId)> {
        self.bounds
    }

    /// Paths from the bottom to the top, i.e. the maximal chains.
    pub fn maximal_paths(&self) -> Result<Vec<PathId>> {
        let (b, t) = self.bounds.ok_or(Error::NotBounded)?;
        Ok(self
            .paths
            .starting_at(b)
            .iter()
            .copied()
            .filter(|&p| self.paths.path(p).cod == t)
            .collect())
    }

    /// Classes whose endpoints both lie in the vertex interval `[x, z]`.
    pub fn classes_within(&self, x: VertexId, z: VertexId) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| {
                let cl = &self.classes[c];
                self.reaches(x, cl.dom) && self.reaches(cl.cod, z)
            })
            .collect()
    }

    /// Vertex names joined by `-` for posets; generator names for categories.
    pub fn render_path(&self, id: PathId) -> String {
        let p = self.paths.path(id);
        match self.kind {
            Kind::Poset => self
                .paths
                .vertices(id)
                .iter()
                .map(|&v| self.vertex_names[v].as_str())
                .collect::<Vec<_>>()
                .join("-"),
            Kind::Category if p.edges.is_empty() => format!("id_{}", self.vertex_names[p.dom]),
            Kind::Category => p
                .edges
                .iter()
                .map(|&e| self.edge_names[e].as_str())
                .collect::<Vec<_>>()
                .join("-"),
        }
    }

    /// Inverse of [`PathSystem::render_path`].
    pub fn parse_path(&self, text: &str) -> Result<PathId> {
        let parts: Vec<&str> = text.trim().split('-').map(str::trim).collect();
        let bad = || Error::Validation(format!("`{text}` is not a path of this instance"));
        match self.kind {
            Kind::Poset => {
                let verts: Vec<VertexId> = parts
                    .iter()
                    .map(|s| {
                        self.vertex_names
                            .iter()
                            .position(|n| n == s)
                            .ok_or_else(|| Error::UnknownElement(s.to_string()))
                    })
                    .collect::<Result<_>>()?;
                if verts.len() == 1 {
                    return Ok(self.paths.trivial(verts[0]));
                }
                let q = self.paths.quiver();
                let edges: Vec<EdgeId> = verts
                    .windows(2)
                    .map(|w| {
                        (0..q.edge_count())
                            .find(|&e| q.edge(e) == (w[0], w[1]))
                            .ok_or_else(bad)
                    })
                    .collect::<Result<_>>()?;
                self.paths.lookup(&edges).ok_or_else(bad)
            }
            Kind::Category => {
                if let [single] = parts.as_slice() {
                    if let Some(obj) = single.strip_prefix("id_") {
                        if let Some(v) = self.vertex_names.iter().position(|n| n == obj) {
                            return Ok(self.paths.trivial(v));
                        }
                    }
                }
                let edges: Vec<EdgeId> = parts
                    .iter()
                    .map(|s| {
                        self.edge_names
                            .iter()
                            .position(|n| n == s)
                            .ok_or_else(|| Error::UnknownElement(s.to_string()))
                    })
                    .collect::<Result<_>>()?;
                self.paths.lookup(&edges).ok_or_else(bad)
            }
        }
    }
}
