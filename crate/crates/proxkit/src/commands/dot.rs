use std::fmt::Write as _;

use proxkit_core::gleason::{quotient, relation_from_subordination};
use proxkit_core::{Poset, Relation};

use super::RelationArg;
use crate::error::CliError;
use crate::fixtures;
use crate::format::Doc;

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("string")
}

/// Hasse diagram of `order`; pairs of `extra` outside the order are dashed
/// and `classes` with more than one member become clusters.
pub fn render(order: &Poset, extra: Option<&Relation>, classes: &[Vec<usize>]) -> String {
    let mut out = String::from("digraph {\n");
    if !order.is_empty() {
        out.push_str("  rankdir=BT;\n");
    }
    let mut clustered = vec![false; order.len()];
    for (k, class) in classes.iter().enumerate().filter(|(_, c)| c.len() > 1) {
        let _ = writeln!(out, "  subgraph cluster_{k} {{");
        let _ = writeln!(out, "    style=dotted;");
        for &x in class {
            clustered[x] = true;
            let _ = writeln!(out, "    n{x} [label={}];", quote(order.name(x)));
        }
        out.push_str("  }\n");
    }
    for x in (0..order.len()).filter(|&x| !clustered[x]) {
        let _ = writeln!(out, "  n{x} [label={}];", quote(order.name(x)));
    }
    for (a, b) in order.covers() {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
    if let Some(r) = extra {
        for (a, b) in r.pairs().filter(|&(a, b)| !order.leq(a, b)) {
            let _ = writeln!(out, "  n{a} -> n{b} [style=dashed];");
        }
    }
    out.push_str("}\n");
    out
}

fn classes_of(g: &proxkit_core::gleason::GleasonSpace) -> Vec<Vec<usize>> {
    quotient(g).map(|q| q.classes.iter().map(|c| c.to_vec()).collect()).unwrap_or_default()
}

/// DOT for a lattice, poset or Gleason file; `dual` draws the Gleason dual
/// of a lattice with `relation`.
pub fn run(file: &str, relation: Option<RelationArg>, dual: bool) -> Result<String, CliError> {
    let src = fixtures::load(file)?;
    if let Doc::Gleason(_) = src.doc {
        let g = src.gleason()?;
        let classes = classes_of(&g);
        return Ok(render(g.order(), Some(g.r()), &classes));
    }
    if dual || relation.is_some() {
        let l = src.lattice()?;
        let s = relation.unwrap_or_default().subordination(&l)?;
        let g = relation_from_subordination(&s).map_err(|e| CliError::Usage(format!("no dual: {e}")))?;
        let classes = classes_of(&g);
        return Ok(render(g.order(), Some(g.r()), &classes));
    }
    let p = crate::format::poset_of(src.order_doc()?, &src.path)?;
    Ok(render(&p, None, &[]))
}
