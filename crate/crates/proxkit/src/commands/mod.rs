//! One module per CLI verb. Each returns a [`Report`](crate::report::Report)
//! or an input error.

pub mod dot;
pub mod dualize;
pub mod exhaust;
pub mod generate;
pub mod morphism;
pub mod validate;

use proxkit_core::subordination::{Axiom, AxiomTable, Subordination};
use proxkit_core::{Lattice, Relation, Witness};

use crate::error::CliError;
use crate::fixtures;
use crate::report::Report;

/// Where a lattice's relation comes from.
#[derive(Clone, Debug, Default)]
pub enum RelationArg {
    /// `≤` itself.
    #[default]
    Order,
    File(String),
}

impl RelationArg {
    pub fn label(&self) -> String {
        match self {
            RelationArg::Order => "≤".into(),
            RelationArg::File(f) => f.clone(),
        }
    }

    pub fn resolve(&self, l: &Lattice) -> Result<Relation, CliError> {
        match self {
            RelationArg::Order => Ok(l.poset().relation()),
            RelationArg::File(f) => fixtures::load(f)?.relation_on(l),
        }
    }

    pub fn subordination(&self, l: &Lattice) -> Result<Subordination, CliError> {
        let rel = self.resolve(l)?;
        Subordination::new(l, rel).map_err(|e| CliError::Usage(e.to_string()))
    }
}

pub(crate) fn element_names(l: &Lattice, w: &Witness) -> Vec<String> {
    w.0.iter().map(|&i| l.name(i).to_owned()).collect()
}

/// Writes S1..S8 rows. Failures only mark the report failed when `strict`.
pub(crate) fn axiom_rows(report: &mut Report, l: &Lattice, table: &AxiomTable, strict: bool) {
    for (axiom, verdict) in &table.0 {
        let names = verdict.witness().map(|w| element_names(l, w));
        let key = axiom.name();
        if strict {
            report.check_named(key, verdict, names);
        } else {
            report.observe(key, verdict, names);
        }
    }
    report.text("subordination", yes_no(table.is_subordination()));
    report.text("proximity", yes_no(table.is_proximity()));
}

pub(crate) fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub(crate) fn set_names(l: &Lattice, s: &proxkit_core::ElementSet) -> String {
    let names: Vec<&str> = s.iter().map(|i| l.name(i)).collect();
    format!("{{{}}}", names.join(","))
}

pub(crate) fn parse_axioms(list: &str) -> Result<Vec<Axiom>, CliError> {
    list.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|s| Axiom::parse(s.trim()).ok_or_else(|| CliError::Usage(format!("unknown axiom {s:?}; expected S1..S6 or S8"))))
        .collect()
}
