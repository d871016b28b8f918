//! Report documents written by the command-line tool.

use serde::Serialize;
use serde_json::{json, Value};

use crate::algebra::element::AlgebraElement;
use crate::algebra::order::MonomialOrder;
use crate::combinatorics::system::{Kind, PathSystem};
use crate::complexes::GeneralisedSimplicialComplex;
use crate::error::{Error, Result};
use crate::groebner::{self, GroebnerBasis};

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            instance: None,
            verdict: None,
            witness: None,
            details: Value::Null,
            timing_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).unwrap()
    }
}

/// How monomials are written for this kind of instance.
pub fn monomial_convention(kind: Kind) -> &'static str {
    match kind {
        Kind::Poset => "monomials are vertex sequences read bottom to top",
        Kind::Category => {
            "monomials are generator sequences in diagrammatic order (first applied first), \
             the reverse of composition order"
        }
    }
}

pub fn basis_document(ord: &MonomialOrder<'_>, gb: &GroebnerBasis) -> Value {
    let sys = ord.system();
    json!({
        "convention": monomial_convention(sys.kind()),
        "elements": gb.elements.iter().map(|g| groebner::render_ordered(ord, g)).collect::<Vec<_>>(),
        "initial_terms": gb.initial_terms.iter().map(|&p| sys.render_path(p)).collect::<Vec<_>>(),
        "reduced": gb.reduced,
        "quadratic": groebner::is_quadratic(gb, sys.paths()),
        "normal_monomials": groebner::normal_monomial_count(sys.paths(), &gb.initial_terms),
        "dimension": sys.classes().len(),
    })
}

pub fn complex_document(k: &GeneralisedSimplicialComplex) -> Value {
    let dims: Vec<Value> = k
        .face_counts()
        .iter()
        .enumerate()
        .map(|(dim, &n)| {
            let faces: Vec<Value> = (0..n)
                .map(|index| {
                    let f = crate::complexes::FaceRef { dim, index };
                    let face = k.face(f);
                    json!({
                        "vertices": face.vertices.iter().map(|&v| k.vertex_names()[v].clone()).collect::<Vec<_>>(),
                        "morphisms": face.morphisms,
                        "boundary": k.boundary(f).iter().map(|b| b.index).collect::<Vec<_>>(),
                    })
                })
                .collect();
            json!({ "dimension": dim, "faces": faces })
        })
        .collect();
    json!({
        "face_counts": k.face_counts(),
        "facets": k.facets().iter().map(|&f| k.render_face(f)).collect::<Vec<_>>(),
        "faces": dims,
    })
}

#[derive(serde::Deserialize)]
#[serde(deny_unknown_fields)]
struct BasisFile {
    elements: Vec<String>,
}

/// Reads `{"elements": ["+a-d-g - a-b-e-g", ...]}`.
pub fn parse_basis_file(sys: &PathSystem, text: &str) -> Result<Vec<AlgebraElement>> {
    let f: BasisFile = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    f.elements
        .iter()
        .map(|t| groebner::parse_element(sys, t))
        .collect()
}
