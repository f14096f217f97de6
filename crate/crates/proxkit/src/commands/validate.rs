use proxkit_core::gleason::check_gleason_axioms;
use proxkit_core::order::lattice_from_poset;
use proxkit_core::subordination::AxiomTable;
use proxkit_core::{OrderError, Verdict, Witness};

use super::{axiom_rows, RelationArg};
use crate::error::CliError;
use crate::fixtures;
use crate::format::{poset_of, Doc};
use crate::report::Report;

/// Checks a lattice, a poset, a relation on a lattice, or a Gleason space.
pub fn run(file: &str, relation: Option<RelationArg>) -> Result<Report, CliError> {
    let src = fixtures::load(file)?;
    let mut report = Report::new("validate");
    report.text("file", file).text("kind", src.doc.kind());
    if let Doc::Gleason(_) = src.doc {
        let g = src.gleason()?;
        report.count("points", g.len());
        for (label, verdict) in check_gleason_axioms(&g).items() {
            report.check(label, verdict);
        }
        return Ok(report);
    }
    if let Doc::Morphism(_) = src.doc {
        return Err(CliError::Usage("morphism files are checked with the `morphism` command".into()));
    }
    let order_doc = src.order_doc()?;
    let poset = poset_of(order_doc, &src.path)?;
    report.count("elements", poset.len());
    report.check("order", &Verdict::Pass);
    let embedded = matches!(src.doc, Doc::Relation(_));
    if matches!(src.doc, Doc::Poset(_)) && relation.is_none() {
        report.count("upsets", poset.upsets().len());
        return Ok(report);
    }
    let names = poset.names().to_vec();
    let l = match lattice_from_poset(poset) {
        Ok(l) => {
            report.check("lattice", &Verdict::Pass).check("distributive", &Verdict::Pass);
            l
        }
        Err(e) => {
            let pick = |w: Witness| w.0.iter().map(|&i| names[i].clone()).collect::<Vec<_>>();
            match e {
                OrderError::NoBounds => {
                    report.fail("lattice", "no least or greatest element");
                }
                OrderError::NotALattice { a, b, which } => {
                    let w = Witness::of([a, b]);
                    report.fail("lattice", format!("no {which}"));
                    report.check_named("lattice witness", &Verdict::Fail(w.clone()), Some(pick(w)));
                }
                OrderError::NotDistributive { a, b, c } => {
                    let w = Witness::of([a, b, c]);
                    report.check("lattice", &Verdict::Pass);
                    report.check_named("distributive", &Verdict::Fail(w.clone()), Some(pick(w)));
                }
                other => return Err(CliError::Invalid { path: src.path.clone(), message: other.to_string() }),
            }
            return Ok(report);
        }
    };
    let rel = if embedded {
        report.text("relation", file);
        Some(src.relation_on(&l)?)
    } else if let Some(arg) = relation {
        report.text("relation", arg.label());
        Some(arg.resolve(&l)?)
    } else {
        None
    };
    if let Some(rel) = rel {
        report.count("pairs", rel.len());
        axiom_rows(&mut report, &l, &AxiomTable::compute(&l, &rel), true);
    }
    Ok(report)
}
