use proxkit_core::order::close_order;
use proxkit_core::subordination::subordination_closure;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::CliError;
use crate::fixtures;
use crate::format::{order_fields, relation_fields, write_object};

pub const MAX_POSET: usize = 8;

/// A random order on `n` points: each forward pair `i < j` is a generating
/// edge with probability 1/2, then closed.
pub fn poset(n: usize, seed: u64) -> Result<String, CliError> {
    if n > MAX_POSET {
        return Err(CliError::Size(format!("--poset {n} exceeds the limit of {MAX_POSET} points")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.random_bool(0.5) {
                pairs.push((i, j));
            }
        }
    }
    let names = (0..n).map(|i| format!("p{i}")).collect();
    let p = close_order(&pairs, n)
        .and_then(|p| p.with_names(names))
        .expect("forward edges are acyclic");
    Ok(write_object(&order_fields("poset", &p)))
}

/// The subordination generated by up to `|L|` random pairs `a ≤ b`.
pub fn subordination(lattice: &str, seed: u64) -> Result<String, CliError> {
    let l = fixtures::load(lattice)?.lattice()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let below: Vec<(usize, usize)> =
        l.elements().flat_map(|a| l.elements().map(move |b| (a, b))).filter(|&(a, b)| l.leq(a, b)).collect();
    let k = rng.random_range(0..=l.len());
    let seeds: Vec<(usize, usize)> = (0..k).map(|_| below[rng.random_range(0..below.len())]).collect();
    let s = subordination_closure(&l, &seeds).map_err(|e| CliError::Usage(e.to_string()))?;
    debug_assert!(s.is_subordination());
    let lattice_fields = order_fields("lattice", l.poset());
    let embedded = json!({
        "elements": lattice_fields[1].1,
        "leq": lattice_fields[2].1,
    });
    Ok(write_object(&[
        ("kind", json!("relation")),
        ("pairs", relation_fields(s.relation())),
        ("lattice", embedded),
    ]))
}
