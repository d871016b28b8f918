//! The negative degree lexicographic monomial order built from a labelling.
//!
//! For monomials `w`, `v` of positive degree, `w > v` when
//!
//! 1. `deg w < deg v`, else
//! 2. the label sequence of `w` is lexicographically greater, else
//! 3. the carrier of `w` comes earlier among the lex-ordered maximal chains, else
//! 4. the domain of `w` is above the domain of `v` (posets), or
//!    `hom(dom w, dom v)` is nonempty (categories).
//!
//! The carrier of `w` is the earliest maximal chain having `w` as a
//! contiguous factor. Any tie the four rules leave is an error.

use std::cell::RefCell;
use std::cmp::Ordering;

use crate::combinatorics::paths::PathId;
use crate::combinatorics::system::{Kind, PathSystem};
use crate::error::{Error, Result};
use crate::labelling::{check_prefix_condition, EdgeLabelling};

/// Which of the four rules separated two monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    Degree,
    Labels,
    Carrier,
    Domain,
    Identical,
}

impl Rule {
    pub fn describe(self) -> &'static str {
        match self {
            Rule::Degree => "rule 1: lower degree is greater",
            Rule::Labels => "rule 2: lexicographically greater label sequence is greater",
            Rule::Carrier => "rule 3: earlier carrier chain is greater",
            Rule::Domain => "rule 4: domain tie-break",
            Rule::Identical => "identical monomials",
        }
    }
}

#[derive(Clone, Debug)]
pub struct MonomialOrder<'a> {
    sys: &'a PathSystem,
    labelling: EdgeLabelling,
    seqs: Vec<Vec<i64>>,
    shelling: Vec<PathId>,
    carrier: Vec<Option<usize>>,
    // rank[p]: position in ascending order; trivial paths sit above everything
    rank: Vec<u32>,
    by_rank: Vec<PathId>,
}

impl<'a> MonomialOrder<'a> {
    /// Builds the order. The labelling must satisfy the prefix condition.
    ///
    /// Carriers exist only when the instance is bounded; without bounds
    /// the order is still available as long as rule 3 is never needed.
    pub fn new(sys: &'a PathSystem, labelling: &EdgeLabelling) -> Result<Self> {
        labelling.check_total(sys)?;
        if let Some((a, b)) = check_prefix_condition(sys, labelling).witness {
            return Err(Error::PrefixViolation(
                sys.render_path(a),
                sys.render_path(b),
            ));
        }
        let table = sys.paths();
        let seqs: Vec<Vec<i64>> = table.ids().map(|p| labelling.sequence(table, p)).collect();

        let mut shelling = sys.maximal_paths().unwrap_or_default();
        shelling.sort_by(|a, b| seqs[a.index()].cmp(&seqs[b.index()]));

        let mut carrier = vec![None; table.len()];
        for (i, &chain) in shelling.iter().enumerate() {
            let k = table.path(chain).degree();
            for s in 0..k {
                for t in s + 1..=k {
                    let f = table.subpath(chain, s, t);
                    carrier[f.index()].get_or_insert(i);
                }
            }
        }

        let mut order = MonomialOrder {
            sys,
            labelling: labelling.clone(),
            seqs,
            shelling,
            carrier,
            rank: Vec::new(),
            by_rank: Vec::new(),
        };

        let failure: RefCell<Option<Error>> = RefCell::new(None);
        let mut sorted: Vec<PathId> = table.nontrivial().collect();
        sorted.sort_by(|&w, &v| match order.explain(w, v) {
            Ok((o, _)) => o,
            Err(e) => {
                failure.borrow_mut().get_or_insert(e);
                Ordering::Equal
            }
        });
        if let Some(e) = failure.into_inner() {
            return Err(e);
        }
        for w in sorted.windows(2) {
            if order.explain(w[0], w[1])?.0 != Ordering::Less {
                return Err(Error::OrderNotTotal(format!(
                    "{} and {} are not strictly ordered",
                    sys.render_path(w[0]),
                    sys.render_path(w[1])
                )));
            }
        }
        sorted.extend((0..sys.vertex_count()).map(|v| table.trivial(v)));
        let mut rank = vec![0u32; table.len()];
        for (r, &p) in sorted.iter().enumerate() {
            rank[p.index()] = r as u32;
        }
        order.rank = rank;
        order.by_rank = sorted;
        Ok(order)
    }

    pub fn system(&self) -> &'a PathSystem {
        self.sys
    }

    pub fn labelling(&self) -> &EdgeLabelling {
        &self.labelling
    }

    pub fn sequence(&self, p: PathId) -> &[i64] {
        &self.seqs[p.index()]
    }

    /// Maximal chains in lexicographic order of their label sequences.
    pub fn shelling(&self) -> &[PathId] {
        &self.shelling
    }

    /// Position of `p` in the ascending order. Trivial paths rank above all
    /// monomials of positive degree.
    #[inline]
    pub fn rank(&self, p: PathId) -> u32 {
        self.rank[p.index()]
    }

    pub fn path_at_rank(&self, r: u32) -> PathId {
        self.by_rank[r as usize]
    }

    /// Monomials of positive degree in ascending order.
    pub fn ascending(&self) -> &[PathId] {
        &self.by_rank[..self.by_rank.len() - self.sys.vertex_count()]
    }

    /// Earliest maximal chain having `w` as a contiguous factor.
    pub fn carrier(&self, w: PathId) -> Result<PathId> {
        self.carrier_index(w).map(|i| self.shelling[i])
    }

    fn carrier_index(&self, w: PathId) -> Result<usize> {
        if self.sys.paths().path(w).degree() == 0 {
            return Err(Error::NoCarrier(self.sys.render_path(w)));
        }
        self.carrier[w.index()].ok_or_else(|| Error::NoCarrier(self.sys.render_path(w)))
    }

    /// Carrier computed as lex-least path below `w`, then `w`, then the
    /// lex-least path above it.
    pub fn carrier_by_concatenation(&self, w: PathId) -> Result<PathId> {
        let (bot, top) = self.sys.bounds().ok_or(Error::NotBounded)?;
        let table = self.sys.paths();
        let path = table.path(w);
        let least = |from, to| {
            table
                .starting_at(from)
                .iter()
                .copied()
                .filter(|&p| table.path(p).cod == to)
                .min_by(|a, b| self.seqs[a.index()].cmp(&self.seqs[b.index()]))
        };
        let no = || Error::NoCarrier(self.sys.render_path(w));
        let below = least(bot, path.dom).ok_or_else(no)?;
        let above = least(path.cod, top).ok_or_else(no)?;
        table
            .concat(below, w)
            .and_then(|x| table.concat(x, above))
            .ok_or_else(no)
    }

    /// Compares two monomials of positive degree by the four rules.
    pub fn compare(&self, w: PathId, v: PathId) -> Result<Ordering> {
        self.explain(w, v).map(|(o, _)| o)
    }

    /// Like [`MonomialOrder::compare`], also reporting the deciding rule.
    pub fn explain(&self, w: PathId, v: PathId) -> Result<(Ordering, Rule)> {
        if w == v {
            return Ok((Ordering::Equal, Rule::Identical));
        }
        let table = self.sys.paths();
        let (pw, pv) = (table.path(w), table.path(v));
        if pw.degree() == 0 || pv.degree() == 0 {
            return Err(Error::Validation(
                "trivial paths are not compared by the monomial order".into(),
            ));
        }
        match pv.degree().cmp(&pw.degree()) {
            Ordering::Equal => {}
            o => return Ok((o, Rule::Degree)),
        }
        match self.seqs[w.index()].cmp(&self.seqs[v.index()]) {
            Ordering::Equal => {}
            o => return Ok((o, Rule::Labels)),
        }
        let (cw, cv) = (self.carrier_index(w)?, self.carrier_index(v)?);
        match cv.cmp(&cw) {
            Ordering::Equal => {}
            o => return Ok((o, Rule::Carrier)),
        }
        let (dw, dv) = (pw.dom, pv.dom);
        let tie = || Error::IncomparableTie(self.sys.render_path(w), self.sys.render_path(v));
        if dw == dv {
            return Err(tie());
        }
        let o = match self.sys.kind() {
            // dom w > dom v in P
            Kind::Poset if self.sys.reaches(dv, dw) => Ordering::Greater,
            Kind::Poset if self.sys.reaches(dw, dv) => Ordering::Less,
            // hom(dom w, dom v) nonempty
            Kind::Category if self.sys.reaches(dw, dv) => Ordering::Greater,
            Kind::Category if self.sys.reaches(dv, dw) => Ordering::Less,
            _ => return Err(tie()),
        };
        Ok((o, Rule::Domain))
    }

    /// Fast comparison through precomputed ranks.
    #[inline]
    pub fn cmp_ranked(&self, w: PathId, v: PathId) -> Ordering {
        self.rank(w).cmp(&self.rank(v))
    }
}
