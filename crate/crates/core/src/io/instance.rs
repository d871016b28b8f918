//! JSON instance files.
//!
//! ```json
//! {"kind": "poset", "elements": ["a", "b"], "covers": [["a", "b", 1]]}
//! {"kind": "category", "objects": ["x", "y"],
//!  "generators": [{"id": "f", "dom": "x", "cod": "y", "label": 1}],
//!  "relations": [[["f", "g"], ["h", "k"]]]}
//! ```
//!
//! Labels are optional but must be given for all edges or none.

use std::fmt;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::combinatorics::category::AcyclicCategory;
use crate::combinatorics::instance::Instance;
use crate::combinatorics::poset::Poset;
use crate::error::{Error, Result};
use crate::labelling::EdgeLabelling;

/// Identifiers may be written as strings or integers.
#[derive(Clone, Debug, Deserialize, Serialize, PartialEq, Eq)]
#[serde(untagged)]
enum Ident {
    Str(String),
    Int(i64),
}

impl fmt::Display for Ident {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ident::Str(s) => f.write_str(s),
            Ident::Int(i) => write!(f, "{i}"),
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(untagged)]
enum CoverEntry {
    Labelled(Ident, Ident, i64),
    Plain(Ident, Ident),
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct PosetFile {
    kind: String,
    elements: Vec<Ident>,
    covers: Vec<CoverEntry>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct GeneratorEntry {
    id: Ident,
    dom: Ident,
    cod: Ident,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<i64>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct CategoryFile {
    kind: String,
    objects: Vec<Ident>,
    generators: Vec<GeneratorEntry>,
    #[serde(default)]
    relations: Vec<(Vec<Ident>, Vec<Ident>)>,
}

#[derive(Deserialize)]
struct KindOnly {
    kind: String,
}

fn parse_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn collect_labels(labels: Vec<Option<i64>>) -> Result<Option<EdgeLabelling>> {
    let given = labels.iter().filter(|l| l.is_some()).count();
    if given == 0 {
        Ok(None)
    } else if given == labels.len() {
        Ok(Some(EdgeLabelling::new(
            labels.into_iter().flatten().collect(),
        )))
    } else {
        Err(Error::Validation(format!(
            "labels given for {given} of {} edges; give all or none",
            labels.len()
        )))
    }
}

/// Parses and validates an instance file.
pub fn parse_instance(text: &str) -> Result<(Instance, Option<EdgeLabelling>)> {
    let head: KindOnly = serde_json::from_str(text).map_err(parse_error)?;
    match head.kind.as_str() {
        "poset" => {
            let f: PosetFile = serde_json::from_str(text).map_err(parse_error)?;
            let elements: Vec<String> = f.elements.iter().map(Ident::to_string).collect();
            let mut rel = Vec::with_capacity(f.covers.len());
            let mut labels = Vec::with_capacity(f.covers.len());
            for c in &f.covers {
                let (x, y, l) = match c {
                    CoverEntry::Labelled(x, y, l) => (x, y, Some(*l)),
                    CoverEntry::Plain(x, y) => (x, y, None),
                };
                rel.push((x.to_string(), y.to_string()));
                labels.push(l);
            }
            let p = Poset::build(&elements, &rel)?;
            if p.covers().len() != rel.len() {
                return Err(Error::Validation(
                    "covers list contains a relation implied by transitivity".into(),
                ));
            }
            Ok((Instance::Poset(p), collect_labels(labels)?))
        }
        "category" => {
            let f: CategoryFile = serde_json::from_str(text).map_err(parse_error)?;
            let objects: Vec<String> = f.objects.iter().map(Ident::to_string).collect();
            let gens: Vec<(String, String, String)> = f
                .generators
                .iter()
                .map(|g| (g.id.to_string(), g.dom.to_string(), g.cod.to_string()))
                .collect();
            let rels: Vec<(Vec<String>, Vec<String>)> = f
                .relations
                .iter()
                .map(|(a, b)| {
                    (
                        a.iter().map(Ident::to_string).collect(),
                        b.iter().map(Ident::to_string).collect(),
                    )
                })
                .collect();
            let c = AcyclicCategory::build(&objects, &gens, &rels)?;
            let labels = f.generators.iter().map(|g| g.label).collect();
            Ok((Instance::Category(c), collect_labels(labels)?))
        }
        other => Err(Error::Validation(format!(
            "unknown kind `{other}` (expected `poset` or `category`)"
        ))),
    }
}

pub fn instance_to_value(inst: &Instance, lab: Option<&EdgeLabelling>) -> serde_json::Value {
    let label = |e: usize| lab.map(|l| l.label(e));
    let value = match inst {
        Instance::Poset(p) => serde_json::to_value(PosetFile {
            kind: "poset".into(),
            elements: p.names().iter().cloned().map(Ident::Str).collect(),
            covers: p
                .covers()
                .iter()
                .enumerate()
                .map(|(e, &(x, y))| {
                    let (x, y) = (Ident::Str(p.name(x).into()), Ident::Str(p.name(y).into()));
                    match label(e) {
                        Some(l) => CoverEntry::Labelled(x, y, l),
                        None => CoverEntry::Plain(x, y),
                    }
                })
                .collect(),
        }),
        Instance::Category(c) => {
            let gname = |e: &usize| Ident::Str(c.generators()[*e].name.clone());
            serde_json::to_value(CategoryFile {
                kind: "category".into(),
                objects: c.objects().iter().cloned().map(Ident::Str).collect(),
                generators: c
                    .generators()
                    .iter()
                    .enumerate()
                    .map(|(e, g)| GeneratorEntry {
                        id: Ident::Str(g.name.clone()),
                        dom: Ident::Str(c.objects()[g.dom].clone()),
                        cod: Ident::Str(c.objects()[g.cod].clone()),
                        label: label(e),
                    })
                    .collect(),
                relations: c
                    .relations()
                    .iter()
                    .map(|(a, b)| (a.iter().map(gname).collect(), b.iter().map(gname).collect()))
                    .collect(),
            })
        }
    };
    value.expect("instance documents serialize")
}

pub fn serialize_instance(inst: &Instance, lab: Option<&EdgeLabelling>) -> String {
    serde_json::to_string_pretty(&instance_to_value(inst, lab)).unwrap()
}

/// SHA-256 of the compact serialization, in hex.
pub fn digest(inst: &Instance, lab: Option<&EdgeLabelling>) -> String {
    digest_value(&instance_to_value(inst, lab))
}

/// SHA-256 of an already serialized instance document.
pub fn digest_value(doc: &serde_json::Value) -> String {
    let compact = serde_json::to_string(doc).unwrap();
    Sha256::digest(compact.as_bytes())
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn poset_round_trip() {
        let (p, lab) = fixtures::nongraded_lattice();
        let inst = Instance::Poset(p);
        let text = serialize_instance(&inst, Some(&lab));
        let (back, lab2) = parse_instance(&text).unwrap();
        assert_eq!(back, inst);
        assert_eq!(lab2, Some(lab.clone()));
        assert_eq!(digest(&back, lab2.as_ref()), digest(&inst, Some(&lab)));
    }

    #[test]
    fn category_round_trip() {
        let (c, lab) = fixtures::example_category();
        let inst = Instance::Category(c);
        let text = serialize_instance(&inst, Some(&lab));
        let (back, lab2) = parse_instance(&text).unwrap();
        assert_eq!(back, inst);
        assert_eq!(lab2, Some(lab));
    }

    #[test]
    fn integer_identifiers_and_missing_labels() {
        let (inst, lab) =
            parse_instance(r#"{"kind":"poset","elements":[0,1,2],"covers":[[0,1],[1,2]]}"#)
                .unwrap();
        assert_eq!(inst.size(), 3);
        assert!(lab.is_none());
    }

    #[test]
    fn errors() {
        let e = parse_instance("{\"kind\": \"poset\",\n \"elements\": [").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        let e = parse_instance(r#"{"kind":"poset","elements":["a"],"covers":[],"extra":1}"#)
            .unwrap_err();
        assert!(matches!(e, Error::Parse { .. }));
        let e = parse_instance(r#"{"kind":"lattice"}"#).unwrap_err();
        assert!(matches!(e, Error::Validation(_)));
        let e = parse_instance(
            r#"{"kind":"poset","elements":["a","b","c"],"covers":[["a","b",1],["b","c"]]}"#,
        )
        .unwrap_err();
        assert!(matches!(e, Error::Validation(_)));
        let e = parse_instance(r#"{"kind":"poset","elements":["a","a"],"covers":[]}"#).unwrap_err();
        assert_eq!(e, Error::DuplicateElement("a".into()));
        let e = parse_instance(
            r#"{"kind":"poset","elements":["a","b"],"covers":[["a","b"],["b","a"]]}"#,
        )
        .unwrap_err();
        assert!(matches!(e, Error::CycleDetected(_)));
    }
}
