//! Per-instance checks of the two directions of the main equivalence.

use serde::Serialize;

use crate::algebra::order::MonomialOrder;
use crate::combinatorics::system::PathSystem;
use crate::error::{Error, Result};
use crate::groebner::{self, GroebnerBasis};
use crate::labelling::{check_prefix_condition, check_sbs_condition, EdgeLabelling};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// SBS implies a quadratic basis.
    Forward,
    /// A quadratic basis implies SBS.
    Backward,
}

/// Everything both directions look at.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Examination {
    pub sbs: bool,
    /// A non-lex-least chain with no bad length-two subchain.
    pub sbs_witness: Option<String>,
    pub quadratic: bool,
    pub basis: GroebnerBasis,
    pub rendered_basis: Vec<String>,
    pub initial_terms: Vec<String>,
}

pub fn examine(sys: &PathSystem, lab: &EdgeLabelling) -> Result<Examination> {
    if let Some((a, b)) = check_prefix_condition(sys, lab).witness {
        return Err(Error::PrefixViolation(
            sys.render_path(a),
            sys.render_path(b),
        ));
    }
    let sbs = check_sbs_condition(sys, lab)?;
    let ord = MonomialOrder::new(sys, lab)?;
    let basis = groebner::parallel_ideal_basis(&ord)?;
    Ok(Examination {
        sbs: sbs.holds,
        sbs_witness: sbs.witness.map(|p| sys.render_path(p)),
        quadratic: groebner::is_quadratic(&basis, sys.paths()),
        rendered_basis: basis
            .elements
            .iter()
            .map(|g| groebner::render_ordered(&ord, g))
            .collect(),
        initial_terms: basis
            .initial_terms
            .iter()
            .map(|&p| sys.render_path(p))
            .collect(),
        basis,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub direction: Direction,
    /// False when the hypothesis of the direction does not hold.
    pub applicable: bool,
    pub sbs: bool,
    pub sbs_witness: Option<String>,
    pub quadratic: bool,
    pub basis: Vec<String>,
    pub initial_terms: Vec<String>,
}

impl VerifyReport {
    fn from(direction: Direction, e: &Examination) -> Self {
        VerifyReport {
            direction,
            applicable: match direction {
                Direction::Forward => e.sbs,
                Direction::Backward => true,
            },
            sbs: e.sbs,
            sbs_witness: e.sbs_witness.clone(),
            quadratic: e.quadratic,
            basis: e.rendered_basis.clone(),
            initial_terms: e.initial_terms.clone(),
        }
    }

    /// Whether the asserted implication failed.
    pub fn violation(&self) -> Option<String> {
        match self.direction {
            Direction::Forward if self.sbs && !self.quadratic => Some(format!(
                "SBS holds but the basis is not quadratic (initial terms: {})",
                self.initial_terms.join(", ")
            )),
            Direction::Backward if self.quadratic && !self.sbs => Some(format!(
                "the basis is quadratic but SBS fails at chain {}",
                self.sbs_witness.as_deref().unwrap_or("?")
            )),
            Direction::Backward if !self.quadratic && self.sbs => Some(format!(
                "SBS holds but the basis is not quadratic (initial terms: {})",
                self.initial_terms.join(", ")
            )),
            _ => None,
        }
    }
}

/// SBS implies quadratic. Non-SBS inputs are reported as not applicable.
pub fn verify_forward(sys: &PathSystem, lab: &EdgeLabelling) -> Result<VerifyReport> {
    verify(sys, lab, Direction::Forward)
}

/// Quadratic implies SBS; a non-quadratic basis with SBS is also flagged.
pub fn verify_backward(sys: &PathSystem, lab: &EdgeLabelling) -> Result<VerifyReport> {
    verify(sys, lab, Direction::Backward)
}

/// Runs one direction and turns a failed implication into
/// [`Error::TheoremViolation`]. Use [`examine`] to keep the report.
pub fn verify(sys: &PathSystem, lab: &EdgeLabelling, direction: Direction) -> Result<VerifyReport> {
    let report = VerifyReport::from(direction, &examine(sys, lab)?);
    match report.violation() {
        Some(msg) => Err(Error::TheoremViolation(msg)),
        None => Ok(report),
    }
}

/// Report without raising on a failed implication.
pub fn report(sys: &PathSystem, lab: &EdgeLabelling, direction: Direction) -> Result<VerifyReport> {
    Ok(VerifyReport::from(direction, &examine(sys, lab)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::poset::Poset;
    use crate::fixtures;

    #[test]
    fn nongraded_lattice_both_directions() {
        let (p, lab) = fixtures::nongraded_lattice();
        let s = PathSystem::from_poset(&p).unwrap();
        let f = verify_forward(&s, &lab).unwrap();
        assert!(f.applicable && f.quadratic);
        assert_eq!(f.initial_terms.len(), 3);
        let b = verify_backward(&s, &lab).unwrap();
        assert!(b.sbs && b.quadratic);
    }

    #[test]
    fn chain_and_category() {
        let s = PathSystem::from_poset(&fixtures::three_chain()).unwrap();
        let r = verify_forward(&s, &EdgeLabelling::injective(2)).unwrap();
        assert!(r.quadratic && r.basis.is_empty());
        let (c, lab) = fixtures::example_category();
        let s = PathSystem::from_category(&c.augment());
        let mut labels = lab.as_slice().to_vec();
        labels.resize(s.edge_count(), 0);
        let r = verify_forward(&s, &EdgeLabelling::new(labels)).unwrap();
        assert!(r.applicable && r.quadratic);
    }

    #[test]
    fn divergence_at_bottom() {
        let (p, lab) = fixtures::parallel_length_three();
        let s = PathSystem::from_poset(&p).unwrap();
        let r = verify_backward(&s, &lab).unwrap();
        assert!(!r.quadratic && !r.sbs);
        assert_eq!(r.sbs_witness.as_deref(), Some("0-y1-y2-1"));
        assert!(!verify_forward(&s, &lab).unwrap().applicable);
    }

    #[test]
    fn prefix_violation_is_an_error() {
        let (d, _) = fixtures::diamond();
        let s = PathSystem::from_poset(&d).unwrap();
        let err = verify_forward(&s, &EdgeLabelling::new(vec![1, 1, 1, 1])).unwrap_err();
        assert!(matches!(err, Error::PrefixViolation(..)));
    }

    /// Two chains of lengths two and three between the bounds, the shorter
    /// one lex-least. The basis is quadratic but SBS fails.
    #[test]
    fn short_least_chain_breaks_backward_direction() {
        let p = Poset::build(
            &["x", "z", "u", "v", "y"],
            &[("x", "z"), ("z", "y"), ("x", "u"), ("u", "v"), ("v", "y")],
        )
        .unwrap();
        let s = PathSystem::from_poset(&p).unwrap();
        let lab = EdgeLabelling::new(vec![1, 3, 2, 1, 1]);
        let r = report(&s, &lab, Direction::Backward).unwrap();
        assert!(r.quadratic);
        assert!(!r.sbs);
        assert_eq!(r.sbs_witness.as_deref(), Some("x-u-v-y"));
        assert!(matches!(
            verify_backward(&s, &lab),
            Err(Error::TheoremViolation(_))
        ));
    }
}
