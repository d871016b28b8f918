//! Order complexes, nerves and shellings.
//!
//! Faces are stored with explicit boundary lists. Nerve faces are chains of
//! morphisms, so two faces may share a vertex set without being equal.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::combinatorics::category::AcyclicCategory;
use crate::combinatorics::paths::VertexId;
use crate::combinatorics::poset::Poset;
use crate::error::{Error, Result};
use crate::par;

pub const DEFAULT_SHELLING_BOUND: usize = 9;

/// `(dimension, index within that dimension)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FaceRef {
    pub dim: usize,
    pub index: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Face {
    pub vertices: Vec<VertexId>,
    /// Morphism chain for nerve faces; empty for order complexes.
    pub morphisms: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralisedSimplicialComplex {
    vertex_names: Vec<String>,
    faces: Vec<Vec<Face>>,
    boundary: Vec<Vec<Vec<FaceRef>>>,
    facets: Vec<FaceRef>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetOrdering(pub Vec<FaceRef>);

impl GeneralisedSimplicialComplex {
    fn assemble(
        vertex_names: Vec<String>,
        faces: Vec<Vec<Face>>,
        boundary: Vec<Vec<Vec<FaceRef>>>,
    ) -> Self {
        let mut covered = BTreeSet::new();
        for per_dim in &boundary {
            for b in per_dim {
                covered.extend(b.iter().copied());
            }
        }
        let facets = faces
            .iter()
            .enumerate()
            .flat_map(|(dim, fs)| (0..fs.len()).map(move |index| FaceRef { dim, index }))
            .filter(|f| !covered.contains(f))
            .collect();
        GeneralisedSimplicialComplex {
            vertex_names,
            faces,
            boundary,
            facets,
        }
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertex_names
    }

    pub fn dimension(&self) -> Option<usize> {
        self.faces.len().checked_sub(1)
    }

    pub fn faces(&self, dim: usize) -> &[Face] {
        self.faces.get(dim).map_or(&[], Vec::as_slice)
    }

    pub fn face(&self, f: FaceRef) -> &Face {
        &self.faces[f.dim][f.index]
    }

    pub fn face_counts(&self) -> Vec<usize> {
        self.faces.iter().map(Vec::len).collect()
    }

    pub fn boundary(&self, f: FaceRef) -> &[FaceRef] {
        &self.boundary[f.dim][f.index]
    }

    pub fn facets(&self) -> &[FaceRef] {
        &self.facets
    }

    /// Facet with exactly this vertex sequence, if any.
    pub fn facet_by_vertices(&self, vertices: &[VertexId]) -> Option<FaceRef> {
        self.facets
            .iter()
            .copied()
            .find(|&f| self.face(f).vertices == vertices)
    }

    /// Facet with exactly this morphism chain, if any.
    pub fn facet_by_morphisms(&self, morphisms: &[usize]) -> Option<FaceRef> {
        self.facets
            .iter()
            .copied()
            .find(|&f| self.face(f).morphisms == morphisms)
    }

    /// All faces below `f`, including `f`.
    pub fn closure(&self, f: FaceRef) -> BTreeSet<FaceRef> {
        let mut out = BTreeSet::new();
        let mut stack = vec![f];
        while let Some(g) = stack.pop() {
            if out.insert(g) {
                stack.extend_from_slice(self.boundary(g));
            }
        }
        out
    }

    pub fn render_face(&self, f: FaceRef) -> String {
        self.face(f)
            .vertices
            .iter()
            .map(|&v| self.vertex_names[v].as_str())
            .collect::<Vec<_>>()
            .join("<")
    }
}

/// Faces are the chains of `p`; boundaries delete one vertex.
pub fn order_complex(p: &Poset) -> GeneralisedSimplicialComplex {
    let mut chains = p.all_chains();
    chains.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let top = chains.last().map_or(0, Vec::len);
    let mut faces: Vec<Vec<Face>> = vec![Vec::new(); top];
    let mut index: HashMap<Vec<VertexId>, FaceRef> = HashMap::new();
    for c in chains {
        let dim = c.len() - 1;
        index.insert(
            c.clone(),
            FaceRef {
                dim,
                index: faces[dim].len(),
            },
        );
        faces[dim].push(Face {
            vertices: c,
            morphisms: Vec::new(),
        });
    }
    let boundary = faces
        .iter()
        .map(|fs| {
            fs.iter()
                .map(|f| {
                    if f.vertices.len() == 1 {
                        return Vec::new();
                    }
                    (0..f.vertices.len())
                        .map(|i| {
                            let mut v = f.vertices.clone();
                            v.remove(i);
                            index[&v]
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    GeneralisedSimplicialComplex::assemble(p.names().to_vec(), faces, boundary)
}

/// Faces are composable chains of non-identity morphisms. The `i`-th
/// boundary of `m1, ..., mk` drops `m1` (i = 0), composes `m_i` with
/// `m_{i+1}`, or drops `mk` (i = k).
pub fn nerve(c: &AcyclicCategory) -> GeneralisedSimplicialComplex {
    let table = c.paths();
    let morphs = c.morphisms();
    let arrows: Vec<usize> = (0..morphs.len())
        .filter(|&m| !morphs[m].is_identity())
        .collect();
    let compose = |a: usize, b: usize| {
        let pa = morphs[a].paths[0];
        let pb = morphs[b].paths[0];
        c.morphism_of(table.concat(pa, pb).expect("composable morphisms"))
    };

    let mut faces: Vec<Vec<Face>> = vec![(0..c.objects().len())
        .map(|x| Face {
            vertices: vec![x],
            morphisms: Vec::new(),
        })
        .collect()];
    let mut index: Vec<HashMap<Vec<usize>, usize>> = vec![HashMap::new()];
    let mut frontier: Vec<Vec<usize>> = arrows.iter().map(|&m| vec![m]).collect();
    while !frontier.is_empty() {
        let mut layer = Vec::new();
        let mut idx = HashMap::new();
        let mut next = Vec::new();
        for chain in frontier {
            let mut vertices = vec![morphs[chain[0]].dom];
            vertices.extend(chain.iter().map(|&m| morphs[m].cod));
            let last = *vertices.last().unwrap();
            for &m in &arrows {
                if morphs[m].dom == last {
                    let mut ext = chain.clone();
                    ext.push(m);
                    next.push(ext);
                }
            }
            idx.insert(chain.clone(), layer.len());
            layer.push(Face {
                vertices,
                morphisms: chain,
            });
        }
        faces.push(layer);
        index.push(idx);
        frontier = next;
    }

    let boundary = faces
        .iter()
        .enumerate()
        .map(|(dim, fs)| {
            fs.iter()
                .map(|f| {
                    if dim == 0 {
                        return Vec::new();
                    }
                    let ms = &f.morphisms;
                    if dim == 1 {
                        let m = &morphs[ms[0]];
                        return vec![
                            FaceRef {
                                dim: 0,
                                index: m.cod,
                            },
                            FaceRef {
                                dim: 0,
                                index: m.dom,
                            },
                        ];
                    }
                    (0..=dim)
                        .map(|i| {
                            let chain: Vec<usize> = if i == 0 {
                                ms[1..].to_vec()
                            } else if i == dim {
                                ms[..dim - 1].to_vec()
                            } else {
                                let mut v = ms[..i - 1].to_vec();
                                v.push(compose(ms[i - 1], ms[i]));
                                v.extend_from_slice(&ms[i + 1..]);
                                v
                            };
                            FaceRef {
                                dim: dim - 1,
                                index: index[dim - 1][&chain],
                            }
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    GeneralisedSimplicialComplex::assemble(c.objects().to_vec(), faces, boundary)
}

struct ShellingData<'k> {
    k: &'k GeneralisedSimplicialComplex,
    closures: Vec<BTreeSet<FaceRef>>,
    /// Closures of each facet's codimension-one faces.
    ridges: Vec<Vec<BTreeSet<FaceRef>>>,
}

impl<'k> ShellingData<'k> {
    fn new(k: &'k GeneralisedSimplicialComplex) -> Self {
        let closures = k.facets.iter().map(|&f| k.closure(f)).collect();
        let ridges = k
            .facets
            .iter()
            .map(|&f| {
                if f.dim == 0 {
                    vec![BTreeSet::new()]
                } else {
                    k.boundary(f).iter().map(|&b| k.closure(b)).collect()
                }
            })
            .collect();
        ShellingData {
            k,
            closures,
            ridges,
        }
    }

    /// Whether facet `j` may follow the facets in `prefix`.
    fn extends(&self, prefix: &[usize], j: usize) -> bool {
        if prefix.is_empty() {
            return true;
        }
        let cj = &self.closures[j];
        let meets: Vec<BTreeSet<FaceRef>> = prefix
            .iter()
            .map(|&i| self.closures[i].intersection(cj).copied().collect())
            .collect();
        let good: Vec<&BTreeSet<FaceRef>> = meets
            .iter()
            .filter(|m| self.ridges[j].contains(m))
            .collect();
        meets.iter().all(|m| good.iter().any(|g| m.is_subset(g)))
    }

    fn position(&self, f: FaceRef) -> Option<usize> {
        self.k.facets.iter().position(|&g| g == f)
    }

    fn dfs(&self, order: &mut Vec<usize>, used: &mut [bool]) -> bool {
        if order.len() == used.len() {
            return true;
        }
        for j in 0..used.len() {
            if !used[j] && self.extends(order, j) {
                used[j] = true;
                order.push(j);
                if self.dfs(order, used) {
                    return true;
                }
                order.pop();
                used[j] = false;
            }
        }
        false
    }

    fn search_from(&self, first: usize) -> Option<Vec<usize>> {
        let mut used = vec![false; self.k.facets.len()];
        used[first] = true;
        let mut order = vec![first];
        self.dfs(&mut order, &mut used).then_some(order)
    }
}

/// Intersections are sets of common faces; for order complexes this is the
/// usual vertex-set intersection.
pub fn is_shelling(k: &GeneralisedSimplicialComplex, ord: &FacetOrdering) -> Result<bool> {
    let data = ShellingData::new(k);
    let mut seen = vec![false; k.facets.len()];
    let mut idx = Vec::with_capacity(ord.0.len());
    for &f in &ord.0 {
        match data.position(f) {
            Some(i) if !seen[i] => {
                seen[i] = true;
                idx.push(i);
            }
            _ => return Err(Error::IncompleteOrdering),
        }
    }
    if idx.len() != k.facets.len() {
        return Err(Error::IncompleteOrdering);
    }
    Ok((0..idx.len()).all(|j| data.extends(&idx[..j], idx[j])))
}

/// Pairwise scan on vertex sets: for all `i < j` some `k < j` and vertex `x`
/// of `F_j` give `F_i ∩ F_j ⊆ F_k ∩ F_j = F_j \ {x}`.
pub fn is_shelling_by_vertices(facets: &[Vec<VertexId>]) -> bool {
    let sets: Vec<BTreeSet<VertexId>> =
        facets.iter().map(|f| f.iter().copied().collect()).collect();
    for j in 1..sets.len() {
        for i in 0..j {
            let meet: BTreeSet<VertexId> = sets[i].intersection(&sets[j]).copied().collect();
            let ok = (0..j).any(|k| {
                let kj: BTreeSet<VertexId> = sets[k].intersection(&sets[j]).copied().collect();
                kj.len() + 1 == sets[j].len() && meet.is_subset(&kj)
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Lexicographically first shelling order, searching permutations with
/// prefix pruning.
pub fn find_shelling(k: &GeneralisedSimplicialComplex) -> Result<Option<FacetOrdering>> {
    find_shelling_with(k, DEFAULT_SHELLING_BOUND, par::enabled())
}

pub fn find_shelling_with(
    k: &GeneralisedSimplicialComplex,
    bound: usize,
    parallel: bool,
) -> Result<Option<FacetOrdering>> {
    let n = k.facets.len();
    if n > bound {
        return Err(Error::SearchBoundExceeded { size: n, bound });
    }
    if n == 0 {
        return Ok(Some(FacetOrdering(Vec::new())));
    }
    let data = ShellingData::new(k);
    let first = par::find_first(n as u64, parallel, |i| {
        data.search_from(i as usize).is_some()
    });
    Ok(first.map(|i| {
        let order = data.search_from(i as usize).unwrap();
        FacetOrdering(order.into_iter().map(|j| k.facets[j]).collect())
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn chain_gives_full_simplex() {
        let k = order_complex(&fixtures::three_chain());
        assert_eq!(k.face_counts(), [3, 3, 1]);
        assert_eq!(k.facets().len(), 1);
        let f = k.facets()[0];
        assert_eq!(k.boundary(f).len(), 3);
    }

    #[test]
    fn nongraded_lattice_facets() {
        let (p, _) = fixtures::nongraded_lattice();
        let k = order_complex(&p);
        let mut dims: Vec<usize> = k.facets().iter().map(|f| f.dim).collect();
        dims.sort();
        assert_eq!(dims, [2, 3, 3, 3]);
        let lex = ["a-c-f-g", "a-b-f-g", "a-b-e-g", "a-d-g"];
        let ord: Vec<FaceRef> = lex
            .iter()
            .map(|s| {
                let v: Vec<usize> = s.split('-').map(|n| p.index_of(n).unwrap()).collect();
                k.facet_by_vertices(&v).unwrap()
            })
            .collect();
        assert!(is_shelling(&k, &FacetOrdering(ord.clone())).unwrap());
        let verts: Vec<Vec<usize>> = ord.iter().map(|&f| k.face(f).vertices.clone()).collect();
        assert!(is_shelling_by_vertices(&verts));
        let mut bad = ord.clone();
        bad.swap(0, 3);
        assert!(!is_shelling(&k, &FacetOrdering(bad)).unwrap());
        assert!(find_shelling(&k).unwrap().is_some());
    }

    #[test]
    fn antichain_and_disjoint_edges() {
        let anti = Poset::build(&["x", "y"], &[]).unwrap();
        let k = order_complex(&anti);
        assert_eq!(k.face_counts(), [2]);
        let two = Poset::build(&["a", "b", "c", "d"], &[("a", "b"), ("c", "d")]).unwrap();
        let k = order_complex(&two);
        let facets = k.facets().to_vec();
        assert!(!is_shelling(&k, &FacetOrdering(facets.clone())).unwrap());
        assert_eq!(find_shelling(&k).unwrap(), None);
        assert!(is_shelling(&k, &FacetOrdering(facets[..1].to_vec())).is_err());
        let mut dup = facets.clone();
        dup[1] = dup[0];
        assert_eq!(
            is_shelling(&k, &FacetOrdering(dup)).unwrap_err(),
            Error::IncompleteOrdering
        );
    }

    #[test]
    fn two_triangles_on_an_edge_shell_in_any_order() {
        let (p, _) = fixtures::diamond();
        let k = order_complex(&p);
        let mut facets = k.facets().to_vec();
        assert!(is_shelling(&k, &FacetOrdering(facets.clone())).unwrap());
        facets.reverse();
        assert!(is_shelling(&k, &FacetOrdering(facets)).unwrap());
        let found = find_shelling(&k).unwrap().unwrap();
        assert!(is_shelling(&k, &found).unwrap());
    }

    #[test]
    fn example_category_nerve() {
        let (c, _) = fixtures::example_category();
        let k = nerve(&c);
        assert_eq!(k.face_counts(), [3, 5, 2]);
        let twos: Vec<FaceRef> = (0..2).map(|index| FaceRef { dim: 2, index }).collect();
        let b0: BTreeSet<FaceRef> = k.boundary(twos[0]).iter().copied().collect();
        let b1: BTreeSet<FaceRef> = k.boundary(twos[1]).iter().copied().collect();
        let shared: Vec<String> = b0
            .intersection(&b1)
            .map(|&f| c.morphism_name(k.face(f).morphisms[0]))
            .collect();
        assert_eq!(shared.len(), 2);
        assert!(shared.contains(&"beta".to_string()));
        // identical vertex sets, different faces
        assert_eq!(k.face(twos[0]).vertices, k.face(twos[1]).vertices);
        // the two triangles meet in two edges, never in a single ridge
        assert_eq!(find_shelling(&k).unwrap(), None);
    }

    #[test]
    fn nerve_of_poset_matches_order_complex() {
        let (p, _) = fixtures::nongraded_lattice();
        let k1 = order_complex(&p);
        let k2 = nerve(&AcyclicCategory::from_poset(&p).unwrap());
        assert_eq!(k1.face_counts(), k2.face_counts());
        let by_vertices = |k: &GeneralisedSimplicialComplex, f: FaceRef| {
            let mut bs: Vec<Vec<usize>> = k
                .boundary(f)
                .iter()
                .map(|&b| k.face(b).vertices.clone())
                .collect();
            bs.sort();
            bs
        };
        for dim in 0..k1.face_counts().len() {
            for index in 0..k1.faces(dim).len() {
                let f = FaceRef { dim, index };
                let g = (0..k2.faces(dim).len())
                    .map(|index| FaceRef { dim, index })
                    .find(|&g| k2.face(g).vertices == k1.face(f).vertices)
                    .unwrap();
                assert_eq!(by_vertices(&k1, f), by_vertices(&k2, g));
            }
        }
    }

    #[test]
    fn single_object_nerve() {
        let c = AcyclicCategory::build::<&str>(&["x"], &[], &[]).unwrap();
        let k = nerve(&c);
        assert_eq!(k.face_counts(), [1]);
        assert!(is_shelling(&k, &FacetOrdering(k.facets().to_vec())).unwrap());
    }

    #[test]
    fn search_bound() {
        let (p, _) = fixtures::nongraded_lattice();
        let k = order_complex(&p);
        assert_eq!(
            find_shelling_with(&k, 3, false).unwrap_err(),
            Error::SearchBoundExceeded { size: 4, bound: 3 }
        );
        assert_eq!(
            find_shelling_with(&k, 9, false).unwrap(),
            find_shelling_with(&k, 9, true).unwrap()
        );
    }
}
