use proxkit_core::gleason::relation_from_subordination;
use proxkit_core::morphism::{
    check_dvc, check_h, check_ofc, ends_map, relation_from_hemimorphism, xi_map, HAxiom, HemiMorphism,
};
use proxkit_core::{Error, Lattice};
use serde_json::json;

use super::{element_names, RelationArg};
use crate::error::CliError;
use crate::fixtures;
use crate::format::relation_fields;
use crate::report::Report;

/// `MAP` is a morphism file, a fixture name, or an inline list such as `0,0,0,1`.
fn load_map(arg: &str, source: &Lattice, target: &Lattice) -> Result<Vec<usize>, CliError> {
    if let Ok(path) = fixtures::locate(arg) {
        return crate::format::read(&path)?.map_into(source, target);
    }
    let parts: Vec<&str> = arg.split(',').map(str::trim).collect();
    if parts.len() != source.len() {
        return Err(CliError::Usage(format!(
            "{arg:?} is neither a file nor an inline map of {} entries",
            source.len()
        )));
    }
    parts
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .ok()
                .filter(|&i| i < target.len())
                .or_else(|| target.elements().find(|&i| target.name(i) == *p))
                .ok_or_else(|| CliError::Usage(format!("map entry {p:?} is not an element of the target")))
        })
        .collect()
}

pub fn run(
    source: &str,
    target: &str,
    map: &str,
    src_relation: RelationArg,
    tgt_relation: RelationArg,
) -> Result<Report, CliError> {
    let l = fixtures::load(source)?.lattice()?;
    let m = fixtures::load(target)?.lattice()?;
    let table = load_map(map, &l, &m)?;
    let h = HemiMorphism::new(&l, &m, table.clone()).map_err(|e| CliError::Usage(e.to_string()))?;
    let sl = src_relation.subordination(&l)?;
    let sm = tgt_relation.subordination(&m)?;
    let mut report = Report::new("morphism");
    report
        .text("source", source)
        .text("target", target)
        .json("map", json!(table))
        .text("source relation", src_relation.label())
        .text("target relation", tgt_relation.label());
    for which in HAxiom::ALL {
        let v = check_h(&h, &sl, &sm, which).expect("subordinations built on these lattices");
        let names = v.witness().map(|w| element_names(&l, w));
        report.check_named(which.name(), &v, names);
    }
    let rho = match relation_from_hemimorphism(&h) {
        Ok(rho) => rho,
        Err(e) => {
            report.skipped("rho", e.to_string());
            return Ok(report);
        }
    };
    report.json("rho", relation_fields(rho.rho()));
    for (label, v) in rho.conditions().items() {
        report.check(label, v);
    }
    let duals = relation_from_subordination(&sl).and_then(|gl| Ok((gl, relation_from_subordination(&sm)?)));
    let (gl, gm) = match duals {
        Ok(pair) => pair,
        Err(e) => {
            let why = format!("relations are not subordinations ({e})");
            for key in ["ofc", "dvc", "End(h)", "xi"] {
                report.skipped(key, why.clone());
            }
            return Ok(report);
        }
    };
    match check_ofc(&rho, gl.r(), gm.r()) {
        Ok(v) => report.check("ofc", &v),
        Err(e) => report.skipped("ofc", e.to_string()),
    };
    report.check("dvc", &check_dvc(&rho, gl.r()));
    match ends_map(&h, &sl, &sm) {
        Ok(map) => report.json("End(h)", json!(map)),
        Err(e) => report.skipped("End(h)", e.to_string()),
    };
    match xi_map(&rho, &gl, &gm) {
        Ok(xi) => report.json("xi", json!(xi.map)),
        Err(Error::Condition { condition, witness }) => report.skipped("xi", format!("{condition} fails at {witness}")),
        Err(e) => report.fail("xi", e.to_string()),
    };
    Ok(report)
}
