//! Exhaustive checks of the monomial order axioms on one instance.

use std::cmp::Ordering;

use serde::Serialize;

use crate::algebra::order::{MonomialOrder, Rule};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LawReport {
    /// Irreflexive, antisymmetric, trichotomous and consistent with a
    /// linear ranking (hence transitive).
    pub total: bool,
    /// `w < u` and `vws, vus` nonzero imply `vws < vus`.
    pub multiplicative: bool,
    /// `u = vws` with `v` or `s` nontrivial implies `u < w`.
    pub shrinking: bool,
    /// Domains compared by the last rule lie in a common chain.
    pub domains_comparable: bool,
    pub ties: u64,
    pub checks: u64,
    pub first_failure: Option<String>,
}

impl LawReport {
    pub fn holds(&self) -> bool {
        self.total
            && self.multiplicative
            && self.shrinking
            && self.domains_comparable
            && self.ties == 0
    }
}

pub fn check_order_laws(ord: &MonomialOrder<'_>) -> LawReport {
    let sys = ord.system();
    let table = sys.paths();
    let mono: Vec<_> = table.nontrivial().collect();
    let mut r = LawReport {
        total: true,
        multiplicative: true,
        shrinking: true,
        domains_comparable: true,
        ..LawReport::default()
    };
    let fail = |r: &mut LawReport, msg: String| {
        if r.first_failure.is_none() {
            r.first_failure = Some(msg);
        }
    };

    for &w in &mono {
        for &v in &mono {
            r.checks += 1;
            let explained = ord.explain(w, v);
            let back = ord.compare(v, w);
            match (explained, back) {
                (Ok((o, rule)), Ok(b)) => {
                    let consistent = (w == v) == (o == Ordering::Equal)
                        && o == b.reverse()
                        && o == ord.rank(w).cmp(&ord.rank(v));
                    if !consistent {
                        r.total = false;
                        fail(
                            &mut r,
                            format!(
                                "order inconsistent on {}, {}",
                                sys.render_path(w),
                                sys.render_path(v)
                            ),
                        );
                    }
                    if rule == Rule::Domain {
                        let (a, b) = (table.path(w).dom, table.path(v).dom);
                        if !(sys.reaches(a, b) || sys.reaches(b, a)) {
                            r.domains_comparable = false;
                            fail(
                                &mut r,
                                format!(
                                    "incomparable domains for {}, {}",
                                    sys.render_path(w),
                                    sys.render_path(v)
                                ),
                            );
                        }
                    }
                }
                _ => {
                    r.ties += 1;
                    r.total = false;
                    fail(
                        &mut r,
                        format!("tie between {}, {}", sys.render_path(w), sys.render_path(v)),
                    );
                }
            }
        }
    }

    for &w in &mono {
        let pw = table.path(w);
        for &v in table.ending_at(pw.dom) {
            for &s in table.starting_at(pw.cod) {
                let vw = table.concat(v, w).unwrap();
                let vws = table.concat(vw, s).unwrap();
                r.checks += 1;
                if (v != table.trivial(pw.dom) || s != table.trivial(pw.cod))
                    && ord.rank(vws) >= ord.rank(w)
                {
                    r.shrinking = false;
                    fail(
                        &mut r,
                        format!(
                            "{} is not below its factor {}",
                            sys.render_path(vws),
                            sys.render_path(w)
                        ),
                    );
                }
            }
        }
    }

    for &w in &mono {
        let pw = table.path(w);
        for &u in &mono {
            let pu = table.path(u);
            if u == w || pu.dom != pw.dom || pu.cod != pw.cod || ord.rank(w) > ord.rank(u) {
                continue;
            }
            for &v in table.ending_at(pw.dom) {
                for &s in table.starting_at(pw.cod) {
                    let x = table.concat(table.concat(v, w).unwrap(), s).unwrap();
                    let y = table.concat(table.concat(v, u).unwrap(), s).unwrap();
                    r.checks += 1;
                    if ord.rank(x) >= ord.rank(y) {
                        r.multiplicative = false;
                        fail(
                            &mut r,
                            format!(
                                "{} < {} but {} >= {}",
                                sys.render_path(w),
                                sys.render_path(u),
                                sys.render_path(x),
                                sys.render_path(y)
                            ),
                        );
                    }
                }
            }
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::system::PathSystem;
    use crate::fixtures;

    #[test]
    fn laws_hold_on_fixtures() {
        let (p, lab) = fixtures::nongraded_lattice();
        let s = PathSystem::from_poset(&p).unwrap();
        let r = check_order_laws(&MonomialOrder::new(&s, &lab).unwrap());
        assert!(r.holds(), "{r:?}");
        let (c, lab) = fixtures::example_category();
        let s = PathSystem::from_category(&c);
        let r = check_order_laws(&MonomialOrder::new(&s, &lab).unwrap());
        assert!(r.holds(), "{r:?}");
    }
}
