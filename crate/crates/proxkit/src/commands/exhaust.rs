use std::thread;

use proxkit_core::exhaust::{self, check_range, check_sampled, code_space, matching_range, partition, Tally, Theorem};
use proxkit_core::subordination::{satisfies, Axiom};
use proxkit_core::{Lattice, Relation, Verdict};
use serde_json::json;

use super::element_names;
use crate::error::CliError;
use crate::fixtures;
use crate::format::relation_fields;
use crate::report::Report;

#[derive(Clone, Debug)]
pub struct Options {
    pub axioms: Vec<Axiom>,
    pub check: Option<Theorem>,
    pub sample: Option<u64>,
    pub seed: u64,
    pub workers: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { axioms: Axiom::SUBORDINATION.to_vec(), check: None, sample: None, seed: 0, workers: 1 }
    }
}

/// Runs `job` over `0..total` split into `workers` ranges and returns results in range order.
fn fan_out<T: Send>(total: u64, workers: usize, job: impl Fn(std::ops::Range<u64>) -> T + Sync) -> Vec<T> {
    let ranges = partition(total, workers);
    if ranges.len() <= 1 {
        return ranges.into_iter().map(&job).collect();
    }
    let job = &job;
    thread::scope(|scope| {
        let handles: Vec<_> = ranges.into_iter().map(|r| scope.spawn(move || job(r))).collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

pub fn run(lattice: &str, opts: &Options) -> Result<Report, CliError> {
    let l = fixtures::load(lattice)?.lattice()?;
    let mut report = Report::new("exhaust");
    report.text("lattice", lattice).count("elements", l.len());
    let (total, mode) = match opts.sample {
        Some(n) => (n, format!("sampled (seed {})", opts.seed)),
        None => (code_space(&l).map_err(|e| match e {
            proxkit_core::Error::Size(m) => CliError::Size(format!("{m}; pass --sample N")),
            other => CliError::Usage(other.to_string()),
        })?, "exhaustive".into()),
    };
    report.text("mode", mode);
    match opts.check {
        Some(theorem) => run_check(&l, theorem, total, opts, &mut report),
        None => run_stream(&l, total, opts, &mut report),
    }
    Ok(report)
}

fn run_check(l: &Lattice, theorem: Theorem, total: u64, opts: &Options, report: &mut Report) {
    report.text("check", theorem.name());
    let tally = fan_out(total, opts.workers, |r| match opts.sample {
        Some(_) => check_sampled(l, theorem, opts.seed, r),
        None => check_range(l, theorem, r).expect("size checked"),
    })
    .into_iter()
    .fold(Tally::default(), Tally::merge);
    let premise: Vec<&str> = theorem.premise().iter().map(|a| a.name()).collect();
    report.text("premise", premise.join(","));
    report.count("scanned", tally.scanned).count("qualifying", tally.qualifying);
    if theorem == Theorem::Collapse {
        report.count("survivors", tally.qualifying);
        report.text("survivor equals ≤", super::yes_no(tally.holds() && tally.qualifying >= 1));
    }
    match &tally.counterexample {
        None => {
            report.count("counterexamples", 0u64);
            report.check(theorem.name(), &Verdict::Pass);
        }
        Some(ce) => {
            report.text("counterexample index", ce.index.to_string());
            report.json("counterexample pairs", relation_fields(&ce.relation));
            let names = if matches!(theorem, Theorem::IffS6 | Theorem::IffS8) {
                None
            } else {
                Some(element_names(l, &ce.witness))
            };
            report.check_named(theorem.name(), &Verdict::Fail(ce.witness.clone()), names);
        }
    }
}

fn run_stream(l: &Lattice, total: u64, opts: &Options, report: &mut Report) {
    let names: Vec<&str> = opts.axioms.iter().map(|a| a.name()).collect();
    report.text("axioms", names.join(","));
    let found: Vec<(u64, Relation)> = fan_out(total, opts.workers, |r| match opts.sample {
        Some(_) => r
            .map(|i| (i, exhaust::sampled_relation(l, opts.seed, i)))
            .filter(|(_, rel)| satisfies(l, rel, &opts.axioms))
            .collect::<Vec<_>>(),
        None => matching_range(l, &opts.axioms, r).expect("size checked"),
    })
    .into_iter()
    .flatten()
    .collect();
    report.count("scanned", total).count("matches", found.len());
    for (index, rel) in &found {
        report.json(format!("relation {index}"), json!(relation_fields(rel)));
    }
}
