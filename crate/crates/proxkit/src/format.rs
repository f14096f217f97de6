//! JSON instance files.
//!
//! Every file is one object with a `kind` tag. Element references are
//! either indices or element names.
//!
//! ```text
//! {"kind":"lattice","elements":["0","a","b","1"],"leq":[[0,1],[0,2],[1,3],[2,3]]}
//! {"kind":"relation","pairs":[[0,0],["a","1"]]}
//! {"kind":"morphism","map":[0,0,0,1]}
//! {"kind":"gleason","elements":["x","y"],"leq":[],"r":[[0,0],[0,1],[1,1]]}
//! ```
//!
//! `leq` lists generating pairs; the reflexive-transitive closure is taken
//! on load.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use proxkit_core::gleason::GleasonSpace;
use proxkit_core::order::lattice_from_poset;
use proxkit_core::{Lattice, OrderError, Poset, Relation};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(untagged)]
pub enum Ref {
    Index(usize),
    Name(String),
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OrderDoc {
    #[serde(default)]
    pub kind: Option<String>,
    pub elements: Vec<String>,
    #[serde(default)]
    pub leq: Vec<(Ref, Ref)>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDoc {
    pub kind: String,
    pub pairs: Vec<(Ref, Ref)>,
    #[serde(default)]
    pub lattice: Option<OrderDoc>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismDoc {
    pub kind: String,
    pub map: Vec<Ref>,
}

/// Extra fields written by `dualize` are accepted and ignored.
#[derive(Clone, Debug, Deserialize)]
pub struct GleasonDoc {
    pub kind: String,
    pub elements: Vec<String>,
    #[serde(default)]
    pub leq: Vec<(Ref, Ref)>,
    pub r: Vec<(Ref, Ref)>,
}

#[derive(Clone, Debug)]
pub enum Doc {
    Lattice(OrderDoc),
    Poset(OrderDoc),
    Relation(RelationDoc),
    Morphism(MorphismDoc),
    Gleason(GleasonDoc),
}

impl Doc {
    pub fn kind(&self) -> &'static str {
        match self {
            Doc::Lattice(_) => "lattice",
            Doc::Poset(_) => "poset",
            Doc::Relation(_) => "relation",
            Doc::Morphism(_) => "morphism",
            Doc::Gleason(_) => "gleason",
        }
    }
}

/// A parsed document and where it came from.
#[derive(Clone, Debug)]
pub struct Source {
    pub path: PathBuf,
    pub doc: Doc,
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.path.display())
    }
}

#[derive(Deserialize)]
struct Head {
    kind: String,
}

fn positioned(path: &Path, e: serde_json::Error) -> CliError {
    CliError::Parse { path: path.to_owned(), line: e.line(), column: e.column(), message: strip_position(&e) }
}

fn strip_position(e: &serde_json::Error) -> String {
    let s = e.to_string();
    match s.rfind(" at line ") {
        Some(i) => s[..i].to_owned(),
        None => s,
    }
}

pub fn parse(path: &Path, text: &str) -> Result<Doc, CliError> {
    let head: Head = serde_json::from_str(text).map_err(|e| positioned(path, e))?;
    let doc = match head.kind.as_str() {
        "lattice" => Doc::Lattice(serde_json::from_str(text).map_err(|e| positioned(path, e))?),
        "poset" => Doc::Poset(serde_json::from_str(text).map_err(|e| positioned(path, e))?),
        "relation" => Doc::Relation(serde_json::from_str(text).map_err(|e| positioned(path, e))?),
        "morphism" => Doc::Morphism(serde_json::from_str(text).map_err(|e| positioned(path, e))?),
        "gleason" => Doc::Gleason(serde_json::from_str(text).map_err(|e| positioned(path, e))?),
        other => {
            return Err(CliError::Invalid {
                path: path.to_owned(),
                message: format!("unknown kind {other:?}; expected lattice, poset, relation, morphism or gleason"),
            })
        }
    };
    Ok(doc)
}

pub fn read(path: &Path) -> Result<Source, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io { path: path.to_owned(), message: e.to_string() })?;
    Ok(Source { path: path.to_owned(), doc: parse(path, &text)? })
}

fn resolve(names: &[String], r: &Ref, at: &str, path: &Path) -> Result<usize, CliError> {
    match r {
        Ref::Index(i) if *i < names.len() => Ok(*i),
        Ref::Index(i) => Err(CliError::Invalid {
            path: path.to_owned(),
            message: format!("{at}: index {i} out of range for {} elements", names.len()),
        }),
        Ref::Name(n) => names.iter().position(|m| m == n).ok_or_else(|| CliError::Invalid {
            path: path.to_owned(),
            message: format!("{at}: unknown element {n:?}"),
        }),
    }
}

pub fn resolve_pairs(names: &[String], pairs: &[(Ref, Ref)], field: &str, path: &Path) -> Result<Vec<(usize, usize)>, CliError> {
    pairs
        .iter()
        .enumerate()
        .map(|(k, (a, b))| {
            Ok((
                resolve(names, a, &format!("{field}[{k}][0]"), path)?,
                resolve(names, b, &format!("{field}[{k}][1]"), path)?,
            ))
        })
        .collect()
}

fn check_names(names: &[String], path: &Path) -> Result<(), CliError> {
    for (i, n) in names.iter().enumerate() {
        if names[..i].contains(n) {
            return Err(CliError::Invalid { path: path.to_owned(), message: format!("elements[{i}]: duplicate name {n:?}") });
        }
    }
    Ok(())
}

pub fn poset_of(doc: &OrderDoc, path: &Path) -> Result<Poset, CliError> {
    check_names(&doc.elements, path)?;
    let pairs = resolve_pairs(&doc.elements, &doc.leq, "leq", path)?;
    Poset::from_relation(doc.elements.clone(), &pairs).map_err(|e| CliError::Invalid {
        path: path.to_owned(),
        message: match e {
            OrderError::Cycle { a, b } => {
                format!("leq is not antisymmetric: {} and {} are below each other", doc.elements[a], doc.elements[b])
            }
            other => other.to_string(),
        },
    })
}

/// A poset that must also be a distributive lattice.
pub fn lattice_of(doc: &OrderDoc, path: &Path) -> Result<Lattice, CliError> {
    let p = poset_of(doc, path)?;
    lattice_from_poset(p).map_err(|e| CliError::Invalid { path: path.to_owned(), message: e.to_string() })
}

impl Source {
    pub fn order_doc(&self) -> Result<&OrderDoc, CliError> {
        match &self.doc {
            Doc::Lattice(d) | Doc::Poset(d) => Ok(d),
            Doc::Relation(RelationDoc { lattice: Some(d), .. }) => Ok(d),
            other => Err(self.wrong_kind("a lattice or poset", other.kind())),
        }
    }

    pub fn lattice(&self) -> Result<Lattice, CliError> {
        lattice_of(self.order_doc()?, &self.path)
    }

    pub fn relation_on(&self, l: &Lattice) -> Result<Relation, CliError> {
        match &self.doc {
            Doc::Relation(d) => {
                let names: Vec<String> = l.poset().names().to_vec();
                let pairs = resolve_pairs(&names, &d.pairs, "pairs", &self.path)?;
                Ok(Relation::from_pairs(l.len(), l.len(), pairs))
            }
            other => Err(self.wrong_kind("a relation", other.kind())),
        }
    }

    pub fn map_into(&self, source: &Lattice, target: &Lattice) -> Result<Vec<usize>, CliError> {
        match &self.doc {
            Doc::Morphism(d) => {
                if d.map.len() != source.len() {
                    return Err(CliError::Invalid {
                        path: self.path.clone(),
                        message: format!("map has {} entries for a source of {} elements", d.map.len(), source.len()),
                    });
                }
                let names = target.poset().names().to_vec();
                d.map.iter().enumerate().map(|(k, r)| resolve(&names, r, &format!("map[{k}]"), &self.path)).collect()
            }
            other => Err(self.wrong_kind("a morphism", other.kind())),
        }
    }

    pub fn gleason(&self) -> Result<GleasonSpace, CliError> {
        match &self.doc {
            Doc::Gleason(d) => {
                let order_doc = OrderDoc { kind: None, elements: d.elements.clone(), leq: d.leq.clone() };
                let order = poset_of(&order_doc, &self.path)?;
                let pairs = resolve_pairs(&d.elements, &d.r, "r", &self.path)?;
                let n = d.elements.len();
                GleasonSpace::synthetic(order, Relation::from_pairs(n, n, pairs))
                    .map_err(|e| CliError::Invalid { path: self.path.clone(), message: e.to_string() })
            }
            other => Err(self.wrong_kind("a gleason space", other.kind())),
        }
    }

    fn wrong_kind(&self, wanted: &str, got: &str) -> CliError {
        CliError::Invalid { path: self.path.clone(), message: format!("expected {wanted}, found kind {got:?}") }
    }
}

fn pairs_json(pairs: impl IntoIterator<Item = (usize, usize)>) -> Value {
    Value::Array(pairs.into_iter().map(|(a, b)| json!([a, b])).collect())
}

/// Compact writer: one top-level field per line.
pub fn write_object(fields: &[(&str, Value)]) -> String {
    let mut out = String::from("{\n");
    for (k, (key, value)) in fields.iter().enumerate() {
        out.push_str(&format!("  {}: {}", json!(key), serde_json::to_string(value).expect("json")));
        out.push_str(if k + 1 < fields.len() { ",\n" } else { "\n" });
    }
    out.push_str("}\n");
    out
}

pub fn order_fields(kind: &str, p: &Poset) -> Vec<(&'static str, Value)> {
    vec![("kind", json!(kind)), ("elements", json!(p.names())), ("leq", pairs_json(p.covers()))]
}

pub fn lattice_text(l: &Lattice) -> String {
    write_object(&order_fields("lattice", l.poset()))
}

pub fn poset_text(p: &Poset) -> String {
    write_object(&order_fields("poset", p))
}

pub fn relation_text(rel: &Relation) -> String {
    write_object(&[("kind", json!("relation")), ("pairs", pairs_json(rel.pairs()))])
}

pub fn relation_fields(rel: &Relation) -> Value {
    pairs_json(rel.pairs())
}

pub fn morphism_text(map: &[usize]) -> String {
    write_object(&[("kind", json!("morphism")), ("map", json!(map))])
}
