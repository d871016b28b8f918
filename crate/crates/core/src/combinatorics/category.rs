//! Finite acyclic categories presented by generators and relations.
//!
//! Generators are the indecomposable morphisms. Paths are read in
//! diagrammatic order: the first generator is applied first. The full
//! composition table is the congruence closure of the relations over the
//! finite path set.

use std::collections::HashMap;

use crate::combinatorics::paths::{path_bound, EdgeId, PathId, PathTable, Quiver, VertexId};
use crate::combinatorics::poset::{Poset, BOTTOM_NAME, TOP_NAME};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub dom: VertexId,
    pub cod: VertexId,
}

/// A morphism together with every generator path composing to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Morphism {
    pub dom: VertexId,
    pub cod: VertexId,
    pub paths: Vec<PathId>,
}

impl Morphism {
    pub fn is_identity(&self) -> bool {
        self.dom == self.cod
    }
}

#[derive(Clone, Debug)]
pub struct AcyclicCategory {
    objects: Vec<String>,
    object_index: HashMap<String, VertexId>,
    generators: Vec<Generator>,
    generator_index: HashMap<String, EdgeId>,
    relations: Vec<(Vec<EdgeId>, Vec<EdgeId>)>,
    paths: PathTable,
    class_of: Vec<usize>,
    morphisms: Vec<Morphism>,
    hom_counts: Vec<Vec<usize>>,
}

/// Equal when objects, generators and the induced identification of paths
/// agree; the relation lists themselves may differ.
impl PartialEq for AcyclicCategory {
    fn eq(&self, other: &Self) -> bool {
        self.objects == other.objects
            && self.generators == other.generators
            && self.morphisms == other.morphisms
    }
}

impl Eq for AcyclicCategory {}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            // keep the smaller index as root so representatives are stable
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi] = lo;
        }
    }
}

fn check_identifier(name: &str) -> Result<()> {
    if name.is_empty() || name.contains('-') || name.chars().any(char::is_whitespace) {
        return Err(Error::Validation(format!(
            "identifier `{name}` must be non-empty without '-' or whitespace"
        )));
    }
    Ok(())
}

impl AcyclicCategory {
    /// Builds a category from objects, generators `(name, dom, cod)` and
    /// relations between generator paths.
    pub fn build<S: AsRef<str>>(
        objects: &[S],
        generators: &[(S, S, S)],
        relations: &[(Vec<S>, Vec<S>)],
    ) -> Result<Self> {
        let mut object_index = HashMap::new();
        for (i, o) in objects.iter().enumerate() {
            check_identifier(o.as_ref())?;
            if object_index.insert(o.as_ref().to_string(), i).is_some() {
                return Err(Error::DuplicateElement(o.as_ref().to_string()));
            }
        }
        let obj = |s: &S| {
            object_index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.as_ref().to_string()))
        };
        let mut gens = Vec::with_capacity(generators.len());
        let mut generator_index = HashMap::new();
        for (i, (name, d, c)) in generators.iter().enumerate() {
            check_identifier(name.as_ref())?;
            if generator_index
                .insert(name.as_ref().to_string(), i)
                .is_some()
            {
                return Err(Error::DuplicateElement(name.as_ref().to_string()));
            }
            gens.push(Generator {
                name: name.as_ref().to_string(),
                dom: obj(d)?,
                cod: obj(c)?,
            });
        }
        let gen = |s: &S| {
            generator_index
                .get(s.as_ref())
                .copied()
                .ok_or_else(|| Error::UnknownElement(s.as_ref().to_string()))
        };
        let mut rels = Vec::with_capacity(relations.len());
        for (l, r) in relations {
            let l: Vec<EdgeId> = l.iter().map(gen).collect::<Result<_>>()?;
            let r: Vec<EdgeId> = r.iter().map(gen).collect::<Result<_>>()?;
            rels.push((l, r));
        }
        let objects = objects.iter().map(|s| s.as_ref().to_string()).collect();
        Self::from_parts(objects, gens, rels)
    }

    pub fn from_parts(
        objects: Vec<String>,
        generators: Vec<Generator>,
        relations: Vec<(Vec<EdgeId>, Vec<EdgeId>)>,
    ) -> Result<Self> {
        let mut object_index = HashMap::new();
        for (i, o) in objects.iter().enumerate() {
            check_identifier(o)?;
            if object_index.insert(o.clone(), i).is_some() {
                return Err(Error::DuplicateElement(o.clone()));
            }
        }
        let mut generator_index = HashMap::new();
        for (i, g) in generators.iter().enumerate() {
            check_identifier(&g.name)?;
            if g.dom >= objects.len() || g.cod >= objects.len() {
                return Err(Error::UnknownElement(g.name.clone()));
            }
            if g.dom == g.cod {
                return Err(Error::CycleDetected(objects[g.dom].clone()));
            }
            if generator_index.insert(g.name.clone(), i).is_some() {
                return Err(Error::DuplicateElement(g.name.clone()));
            }
        }
        let quiver = Quiver::new(
            objects.len(),
            generators.iter().map(|g| (g.dom, g.cod)).collect(),
        );
        if let Some(v) = quiver.find_cycle() {
            return Err(Error::CycleDetected(objects[v].clone()));
        }
        let paths = PathTable::build(quiver, path_bound())?;

        let render = |seq: &[EdgeId]| {
            seq.iter()
                .map(|&e| generators[e].name.as_str())
                .collect::<Vec<_>>()
                .join("-")
        };
        let mut rel_ids = Vec::with_capacity(relations.len());
        for (l, r) in &relations {
            let resolve = |seq: &[EdgeId]| {
                if seq.is_empty() {
                    return Err(Error::Validation("relation with an empty path".into()));
                }
                paths.lookup(seq).ok_or_else(|| {
                    Error::Validation(format!("`{}` is not a composable path", render(seq)))
                })
            };
            let (lp, rp) = (resolve(l)?, resolve(r)?);
            let (a, b) = (paths.path(lp), paths.path(rp));
            if a.dom != b.dom || a.cod != b.cod {
                return Err(Error::RelationEndpointMismatch(format!(
                    "{} vs {}",
                    render(l),
                    render(r)
                )));
            }
            rel_ids.push((lp, rp));
        }

        let mut uf = UnionFind((0..paths.len()).collect());
        for &(lp, rp) in &rel_ids {
            let (d, c) = (paths.path(lp).dom, paths.path(lp).cod);
            for &u in paths.ending_at(d) {
                for &v in paths.starting_at(c) {
                    let left = paths.concat(u, lp).and_then(|x| paths.concat(x, v));
                    let right = paths.concat(u, rp).and_then(|x| paths.concat(x, v));
                    if let (Some(x), Some(y)) = (left, right) {
                        uf.union(x.index(), y.index());
                    }
                }
            }
        }

        let mut class_of = vec![usize::MAX; paths.len()];
        let mut morphisms: Vec<Morphism> = Vec::new();
        let mut root_class: HashMap<usize, usize> = HashMap::new();
        for id in paths.ids() {
            let root = uf.find(id.index());
            let cls = *root_class.entry(root).or_insert_with(|| {
                let p = paths.path(id);
                morphisms.push(Morphism {
                    dom: p.dom,
                    cod: p.cod,
                    paths: Vec::new(),
                });
                morphisms.len() - 1
            });
            class_of[id.index()] = cls;
            morphisms[cls].paths.push(id);
        }

        for (e, g) in generators.iter().enumerate() {
            let id = paths.lookup(&[e]).unwrap();
            let m = &morphisms[class_of[id.index()]];
            if m.paths.iter().any(|&p| paths.path(p).degree() >= 2) {
                return Err(Error::GeneratorDecomposable(g.name.clone()));
            }
            if m.paths.len() > 1 {
                return Err(Error::Validation(format!(
                    "generator `{}` is identified with another generator",
                    g.name
                )));
            }
        }

        let n = objects.len();
        let mut hom_counts = vec![vec![0usize; n]; n];
        for m in &morphisms {
            hom_counts[m.dom][m.cod] += 1;
        }

        Ok(AcyclicCategory {
            objects,
            object_index,
            generators,
            generator_index,
            relations: rel_ids
                .iter()
                .map(|&(l, r)| (paths.path(l).edges.clone(), paths.path(r).edges.clone()))
                .collect(),
            paths,
            class_of,
            morphisms,
            hom_counts,
        })
    }

    /// The poset viewed as a category: covers generate, all parallel paths agree.
    pub fn from_poset(p: &Poset) -> Result<Self> {
        let generators: Vec<Generator> = p
            .covers()
            .iter()
            .map(|&(x, y)| Generator {
                name: format!("{}>{}", p.name(x), p.name(y)),
                dom: x,
                cod: y,
            })
            .collect();
        let table = PathTable::build(p.hasse_quiver(), path_bound())?;
        let mut first: HashMap<(VertexId, VertexId), PathId> = HashMap::new();
        let mut relations = Vec::new();
        for id in table.nontrivial() {
            let path = table.path(id);
            match first.get(&(path.dom, path.cod)) {
                Some(&rep) => relations.push((table.path(rep).edges.clone(), path.edges.clone())),
                None => {
                    first.insert((path.dom, path.cod), id);
                }
            }
        }
        Self::from_parts(p.names().to_vec(), generators, relations)
    }

    /// Recovers a poset when every hom-set has at most one element.
    pub fn to_poset(&self) -> Result<Poset> {
        if self.hom_counts.iter().flatten().any(|&c| c > 1) {
            return Err(Error::Validation(
                "category has a hom-set with more than one morphism".into(),
            ));
        }
        let rel: Vec<_> = self.generators.iter().map(|g| (g.dom, g.cod)).collect();
        Poset::from_relations(self.objects.clone(), &rel)
    }

    pub fn objects(&self) -> &[String] {
        &self.objects
    }

    pub fn object_index(&self, name: &str) -> Result<VertexId> {
        self.object_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_index(&self, name: &str) -> Result<EdgeId> {
        self.generator_index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownElement(name.to_string()))
    }

    pub fn relations(&self) -> &[(Vec<EdgeId>, Vec<EdgeId>)] {
        &self.relations
    }

    pub fn paths(&self) -> &PathTable {
        &self.paths
    }

    pub fn morphisms(&self) -> &[Morphism] {
        &self.morphisms
    }

    pub fn morphism_of(&self, path: PathId) -> usize {
        self.class_of[path.index()]
    }

    pub fn class_assignment(&self) -> &[usize] {
        &self.class_of
    }

    pub fn hom_count(&self, x: VertexId, y: VertexId) -> usize {
        self.hom_counts[x][y]
    }

    pub fn hom_nonempty(&self, x: VertexId, y: VertexId) -> bool {
        self.hom_counts[x][y] > 0
    }

    pub fn initial_object(&self) -> Option<VertexId> {
        let n = self.objects.len();
        (0..n).find(|&o| (0..n).all(|y| self.hom_counts[o][y] == 1))
    }

    pub fn terminal_object(&self) -> Option<VertexId> {
        let n = self.objects.len();
        (0..n).find(|&o| (0..n).all(|x| self.hom_counts[x][o] == 1))
    }

    pub fn is_augmented(&self) -> bool {
        self.initial_object().is_some() && self.terminal_object().is_some()
    }

    /// Adjoins a fresh initial and a fresh terminal object.
    ///
    /// The initial object gets one generator to every source object and the
    /// terminal object one generator from every sink. All parallel paths
    /// leaving the initial object or entering the terminal one are identified.
    pub fn augment(&self) -> AcyclicCategory {
        let fresh = |base: &str| {
            let mut name = base.to_string();
            while self.object_index.contains_key(&name) || self.generator_index.contains_key(&name)
            {
                name.push('\'');
            }
            name
        };
        let n = self.objects.len();
        let (bot, top) = (n, n + 1);
        let mut objects = self.objects.clone();
        objects.push(fresh(BOTTOM_NAME));
        objects.push(fresh(TOP_NAME));
        let mut generators = self.generators.clone();
        let mut taken: std::collections::HashSet<String> =
            generators.iter().map(|g| g.name.clone()).collect();
        taken.extend(objects.iter().cloned());
        let mut gen_name = |base: String| {
            let mut name = base;
            while taken.contains(&name) {
                name.push('\'');
            }
            taken.insert(name.clone());
            name
        };
        let has_in: Vec<bool> = (0..n)
            .map(|o| self.generators.iter().any(|g| g.cod == o))
            .collect();
        let has_out: Vec<bool> = (0..n)
            .map(|o| self.generators.iter().any(|g| g.dom == o))
            .collect();
        if n == 0 {
            generators.push(Generator {
                name: gen_name(format!("{}>{}", objects[bot], objects[top])),
                dom: bot,
                cod: top,
            });
        }
        for o in (0..n).filter(|&o| !has_in[o]) {
            generators.push(Generator {
                name: gen_name(format!("{}>{}", objects[bot], objects[o])),
                dom: bot,
                cod: o,
            });
        }
        for o in (0..n).filter(|&o| !has_out[o]) {
            generators.push(Generator {
                name: gen_name(format!("{}>{}", objects[o], objects[top])),
                dom: o,
                cod: top,
            });
        }
        let quiver = Quiver::new(
            objects.len(),
            generators.iter().map(|g| (g.dom, g.cod)).collect(),
        );
        let table = PathTable::build(quiver, path_bound()).expect("augmented quiver is acyclic");
        let mut relations = self.relations.clone();
        let mut tie = |from_end: bool, anchor: VertexId| {
            let mut first: HashMap<VertexId, PathId> = HashMap::new();
            let ids = if from_end {
                table.ending_at(anchor)
            } else {
                table.starting_at(anchor)
            };
            for &id in ids {
                let p = table.path(id);
                if p.edges.is_empty() {
                    continue;
                }
                let other = if from_end { p.dom } else { p.cod };
                match first.get(&other) {
                    Some(&rep) => relations.push((table.path(rep).edges.clone(), p.edges.clone())),
                    None => {
                        first.insert(other, id);
                    }
                }
            }
        };
        tie(false, bot);
        tie(true, top);
        AcyclicCategory::from_parts(objects, generators, relations)
            .expect("augmentation of a valid category is valid")
    }

    /// Augments unless an initial and a terminal object already exist.
    pub fn augment_if_needed(&self) -> AcyclicCategory {
        if self.is_augmented() {
            self.clone()
        } else {
            self.augment()
        }
    }

    /// Human-readable name of a morphism: `id_x` or a representative path.
    pub fn morphism_name(&self, m: usize) -> String {
        let mor = &self.morphisms[m];
        if mor.is_identity() {
            format!("id_{}", self.objects[mor.dom])
        } else {
            self.render_path(mor.paths[0])
        }
    }

    pub fn render_path(&self, id: PathId) -> String {
        let p = self.paths.path(id);
        if p.edges.is_empty() {
            format!("id_{}", self.objects[p.dom])
        } else {
            p.edges
                .iter()
                .map(|&e| self.generators[e].name.as_str())
                .collect::<Vec<_>>()
                .join("-")
        }
    }
}
