use proxkit_core::gleason::{check_gleason_axioms, quotient, relation_from_subordination, sigma_check};
use proxkit_core::subordination::{ends, Subordination};
use serde_json::{json, Value};

use super::{axiom_rows, set_names, RelationArg};
use crate::error::CliError;
use crate::fixtures;
use crate::format::{relation_fields, write_object};
use crate::report::Report;

/// The report and the Gleason file for `--out`.
pub struct Dualized {
    pub report: Report,
    pub gleason: Option<String>,
}

pub fn run(lattice: &str, relation: RelationArg) -> Result<Dualized, CliError> {
    let src = fixtures::load(lattice)?;
    let l = src.lattice()?;
    let mut report = Report::new("dualize");
    report.text("lattice", lattice).count("elements", l.len()).text("relation", relation.label());
    let rel = relation.resolve(&l)?;
    let s = Subordination::new(&l, rel).map_err(|e| CliError::Usage(e.to_string()))?;
    axiom_rows(&mut report, &l, s.axioms(), false);
    let g = match relation_from_subordination(&s) {
        Ok(g) => g,
        Err(e) => {
            report.fail("dual", e.to_string());
            return Ok(Dualized { report, gleason: None });
        }
    };
    let space = g.dual().expect("dual of a subordination");
    report.count("points", g.len());
    report.json("point names", json!(g.order().names()));
    report.json("point filters", json!(space.points().iter().map(|x| set_names(&l, x)).collect::<Vec<_>>()));
    report.json("order", relation_fields(&g.order().relation()));
    report.json("R", relation_fields(g.r()));
    for (label, verdict) in check_gleason_axioms(&g).items() {
        report.observe(label, verdict, None);
    }
    let q = quotient(&g).ok();
    match &q {
        Some(q) => {
            report.count("classes", q.len());
            report.json("class names", json!(q.order.names()));
            report.json("class order", relation_fields(&q.order.relation()));
        }
        None => {
            report.skipped("classes", "R is not a pre-order");
        }
    }
    let end_sets = ends(&s).expect("subordination checked above");
    report.count("ends", end_sets.len());
    report.json("end filters", json!(end_sets.iter().map(|p| set_names(&l, p)).collect::<Vec<_>>()));
    let mut sigma_field = Value::Null;
    if s.is_proximity() {
        match sigma_check(&g, &s) {
            Ok(r) => {
                report.text("sigma", "pass");
                report.json("sigma table", json!(r.sigma));
                sigma_field = json!(r.sigma);
            }
            Err(e) => {
                report.fail("sigma", e.to_string());
            }
        }
    } else {
        report.skipped("sigma", "not a proximity frame");
    }
    let gleason = write_object(&[
        ("kind", json!("gleason")),
        ("elements", json!(g.order().names())),
        ("leq", json!(g.order().covers().iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>())),
        ("r", relation_fields(g.r())),
        ("points", json!(space.points().iter().map(|x| x.iter().map(|i| l.name(i)).collect::<Vec<_>>()).collect::<Vec<_>>())),
        ("quotient", q.as_ref().map_or(Value::Null, |q| json!(q.classes.iter().map(|c| c.to_vec()).collect::<Vec<_>>()))),
        ("ends", json!(end_sets.iter().map(|p| p.iter().map(|i| l.name(i)).collect::<Vec<_>>()).collect::<Vec<_>>())),
        ("sigma", sigma_field),
    ]);
    Ok(Dualized { report, gleason: Some(gleason) })
}
