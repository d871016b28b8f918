//! Edge labellings, the prefix condition, and the LEX and SBS conditions.
//!
//! Labels are integers. A chain is read bottom to top (posets) or in
//! diagrammatic order (categories); its label sequence is compared
//! lexicographically, a proper prefix being smaller.

use crate::combinatorics::paths::{EdgeId, PathId, PathTable};
use crate::combinatorics::system::PathSystem;
use crate::error::{Error, Result};
use crate::par;

/// Default bound on the edge count for [`search_lex_labelling`].
pub const DEFAULT_SEARCH_EDGE_BOUND: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeLabelling(Vec<i64>);

impl EdgeLabelling {
    pub fn new(labels: Vec<i64>) -> Self {
        EdgeLabelling(labels)
    }

    /// Labels `1, 2, ..., n` in edge order.
    pub fn injective(edge_count: usize) -> Self {
        EdgeLabelling((1..=edge_count as i64).collect())
    }

    pub fn label(&self, e: EdgeId) -> i64 {
        self.0[e]
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sequence(&self, table: &PathTable, p: PathId) -> Vec<i64> {
        table.path(p).edges.iter().map(|&e| self.0[e]).collect()
    }

    pub(crate) fn check_total(&self, sys: &PathSystem) -> Result<()> {
        if self.0.len() != sys.edge_count() {
            return Err(Error::Validation(format!(
                "labelling has {} labels for {} edges",
                self.0.len(),
                sys.edge_count()
            )));
        }
        Ok(())
    }
}

/// Result of a combinatorial check. Failing checks carry a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict<W> {
    pub holds: bool,
    pub witness: Option<W>,
}

impl<W> Verdict<W> {
    fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    fn fail(w: W) -> Self {
        Verdict {
            holds: false,
            witness: Some(w),
        }
    }
}

/// Chain `chain` satisfies the hypotheses of the LEX-condition at the
/// interior positions `s < t` (edge counts from the bottom) but is not least.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LexWitness {
    pub chain: PathId,
    pub s: usize,
    pub t: usize,
}

fn sequences(sys: &PathSystem, lab: &EdgeLabelling) -> Vec<Vec<i64>> {
    sys.paths()
        .ids()
        .map(|p| lab.sequence(sys.paths(), p))
        .collect()
}

fn class_prefix_witness(
    sys: &PathSystem,
    seqs: &[Vec<i64>],
    class: usize,
) -> Option<(PathId, PathId)> {
    let mut paths = sys.class(class).paths.clone();
    paths.sort_by(|a, b| seqs[a.index()].cmp(&seqs[b.index()]));
    paths
        .windows(2)
        .find(|w| seqs[w[1].index()].starts_with(&seqs[w[0].index()]))
        .map(|w| (w[0], w[1]))
}

/// No maximal chain of an interval (or morphism) has a label sequence that
/// is a prefix of, or equal to, another's.
pub fn check_prefix_condition(sys: &PathSystem, lab: &EdgeLabelling) -> Verdict<(PathId, PathId)> {
    let seqs = sequences(sys, lab);
    prefix_with(sys, &seqs)
}

fn prefix_with(sys: &PathSystem, seqs: &[Vec<i64>]) -> Verdict<(PathId, PathId)> {
    (0..sys.classes().len())
        .find_map(|c| class_prefix_witness(sys, seqs, c))
        .map_or_else(Verdict::pass, Verdict::fail)
}

fn prefix_error(sys: &PathSystem, (a, b): (PathId, PathId)) -> Error {
    Error::PrefixViolation(sys.render_path(a), sys.render_path(b))
}

/// Label sequences and lex-least chains, shared by the condition checks.
pub struct LexData {
    seqs: Vec<Vec<i64>>,
    least: Vec<PathId>,
}

impl LexData {
    pub fn new(sys: &PathSystem, lab: &EdgeLabelling) -> Result<Self> {
        lab.check_total(sys)?;
        let seqs = sequences(sys, lab);
        if let Some(w) = prefix_with(sys, &seqs).witness {
            return Err(prefix_error(sys, w));
        }
        let least = sys
            .classes()
            .iter()
            .map(|c| {
                *c.paths
                    .iter()
                    .min_by(|a, b| seqs[a.index()].cmp(&seqs[b.index()]))
                    .expect("classes are nonempty")
            })
            .collect();
        Ok(LexData { seqs, least })
    }

    pub fn sequence(&self, p: PathId) -> &[i64] {
        &self.seqs[p.index()]
    }

    pub fn least_in_class(&self, class: usize) -> PathId {
        self.least[class]
    }

    pub fn is_least(&self, sys: &PathSystem, p: PathId) -> bool {
        self.least[sys.class_of(p)] == p
    }
}

/// The lex-least maximal chain of one parallel class.
pub fn lex_least_chain(sys: &PathSystem, lab: &EdgeLabelling, class: usize) -> Result<PathId> {
    lab.check_total(sys)?;
    let seqs = sequences(sys, lab);
    if let Some(w) = class_prefix_witness(sys, &seqs, class) {
        return Err(prefix_error(sys, w));
    }
    Ok(*sys
        .class(class)
        .paths
        .iter()
        .min_by(|a, b| seqs[a.index()].cmp(&seqs[b.index()]))
        .expect("classes are nonempty"))
}

/// The LEX-condition: whenever `C|[x,t]` and `C|[s,y]` are lex-least for
/// interior `s < t` on `C`, the chain `C` is lex-least in `[x,y]`.
pub fn check_lex_condition(sys: &PathSystem, lab: &EdgeLabelling) -> Result<Verdict<LexWitness>> {
    let data = LexData::new(sys, lab)?;
    Ok(lex_with(sys, &data))
}

pub(crate) fn lex_with(sys: &PathSystem, data: &LexData) -> Verdict<LexWitness> {
    let table = sys.paths();
    for p in table.nontrivial() {
        let k = table.path(p).degree();
        if k < 3 || data.is_least(sys, p) {
            continue;
        }
        for s in 1..k {
            for t in s + 1..k {
                let head = table.subpath(p, 0, t);
                let tail = table.subpath(p, s, k);
                if data.is_least(sys, head) && data.is_least(sys, tail) {
                    return Verdict::fail(LexWitness { chain: p, s, t });
                }
            }
        }
    }
    Verdict::pass()
}

/// The SBS-condition: every chain that is not lex-least contains two
/// consecutive edges forming a chain that is not lex-least in its own
/// interval. The witness is a bad chain without such a short bad subchain.
pub fn check_sbs_condition(sys: &PathSystem, lab: &EdgeLabelling) -> Result<Verdict<PathId>> {
    let data = LexData::new(sys, lab)?;
    Ok(sbs_with(sys, &data))
}

/// [`check_sbs_condition`] for categories, where intervals are morphisms.
pub fn check_sbs_category(sys: &PathSystem, lab: &EdgeLabelling) -> Result<Verdict<PathId>> {
    check_sbs_condition(sys, lab)
}

pub(crate) fn sbs_with(sys: &PathSystem, data: &LexData) -> Verdict<PathId> {
    let table = sys.paths();
    for p in table.nontrivial() {
        if data.is_least(sys, p) {
            continue;
        }
        let k = table.path(p).degree();
        let has_short_bad =
            (0..k.saturating_sub(1)).any(|i| !data.is_least(sys, table.subpath(p, i, i + 2)));
        if !has_short_bad {
            return Verdict::fail(p);
        }
    }
    Verdict::pass()
}

/// The `index`-th labelling with labels in `1..=max_label`, first edge most
/// significant.
pub fn labelling_at(index: u64, edges: usize, max_label: i64) -> EdgeLabelling {
    // base-`max_label` digits, most significant first
    let mut labels = vec![1i64; edges];
    let mut rest = index;
    for e in (0..edges).rev() {
        labels[e] = (rest % max_label as u64) as i64 + 1;
        rest /= max_label as u64;
    }
    EdgeLabelling(labels)
}

/// Exhaustive search for a labelling into `1..=max_label` satisfying the
/// prefix and SBS conditions.
///
/// Returns the lexicographically smallest such labelling.
pub fn search_lex_labelling(
    sys: &PathSystem,
    max_label: i64,
    edge_bound: usize,
    parallel: bool,
) -> Result<Option<EdgeLabelling>> {
    let edges = sys.edge_count();
    if edges > edge_bound {
        return Err(Error::SearchBoundExceeded {
            size: edges,
            bound: edge_bound,
        });
    }
    if max_label < 1 {
        return Ok(None);
    }
    let total = (max_label as u64)
        .checked_pow(edges as u32)
        .ok_or(Error::SearchBoundExceeded {
            size: edges,
            bound: edge_bound,
        })?;
    let found = par::find_first(total, parallel, |i| {
        let lab = labelling_at(i, edges, max_label);
        LexData::new(sys, &lab).is_ok_and(|d| sbs_with(sys, &d).holds)
    });
    Ok(found.map(|i| labelling_at(i, edges, max_label)))
}
