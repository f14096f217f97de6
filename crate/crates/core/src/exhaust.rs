//! Brute-force scans over every relation on a small lattice.
//!
//! Relation `code` sets pair `(i,j)` when bit `i·n + j` is set, so the scan
//! space of an `n`-element lattice is `0..2^(n²)`. Ranges can be checked
//! independently and merged with [`Tally::merge`]; the merged counterexample
//! is always the one with the least code, whatever the partition.

use alloc::vec::Vec;
use core::fmt;
use core::ops::Range;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gleason::dual_relation;
use crate::order::Lattice;
use crate::priestley::PriestleySpace;
use crate::relation::{Relation, Verdict, Witness};
use crate::subordination::{check_axiom, satisfies, subordination_closure, Axiom, Subordination, EXHAUSTIVE_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// `≤` is the only relation satisfying S1–S5.
    Collapse,
    /// For subordinations, `R` is reflexive iff S6 holds.
    IffS6,
    /// For subordinations, `R` is transitive iff S8 holds.
    IffS8,
    /// For subordinations, `a ≺ b ⟺ R[η(a),−] ⊆ η(b)`.
    LemmaCorrespondence,
}

impl Theorem {
    pub const ALL: [Theorem; 4] = [Theorem::Collapse, Theorem::IffS6, Theorem::IffS8, Theorem::LemmaCorrespondence];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::Collapse => "collapse",
            Theorem::IffS6 => "iff-s6",
            Theorem::IffS8 => "iff-s8",
            Theorem::LemmaCorrespondence => "lemma-correspondence",
        }
    }

    pub fn parse(s: &str) -> Option<Theorem> {
        Theorem::ALL.into_iter().find(|t| t.name() == s)
    }

    /// Axioms a relation must satisfy to be tested.
    pub fn premise(self) -> &'static [Axiom] {
        match self {
            Theorem::Collapse => &[Axiom::S1, Axiom::S2, Axiom::S3, Axiom::S4, Axiom::S5],
            _ => &Axiom::SUBORDINATION,
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub index: u64,
    pub relation: Relation,
    pub witness: Witness,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Tally {
    pub scanned: u64,
    /// Relations satisfying the premise.
    pub qualifying: u64,
    pub counterexample: Option<Counterexample>,
}

impl Tally {
    pub fn merge(mut self, other: Tally) -> Tally {
        self.scanned += other.scanned;
        self.qualifying += other.qualifying;
        self.counterexample = match (self.counterexample, other.counterexample) {
            (Some(a), Some(b)) => Some(if b.index < a.index { b } else { a }),
            (a, b) => a.or(b),
        };
        self
    }

    pub fn holds(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Number of relation codes on an `n`-element carrier, if exhaustively scannable.
pub fn code_space(l: &Lattice) -> Result<u64> {
    if l.len() > EXHAUSTIVE_LIMIT {
        return Err(Error::Size(alloc::format!(
            "{} elements exceed the exhaustive bound of {}",
            l.len(),
            EXHAUSTIVE_LIMIT
        )));
    }
    Ok(1u64 << (l.len() * l.len()))
}

struct Context<'a> {
    lattice: &'a Lattice,
    space: PriestleySpace,
    order: Relation,
    eta: Vec<crate::bitset::ElementSet>,
}

impl<'a> Context<'a> {
    fn new(lattice: &'a Lattice) -> Self {
        let space = PriestleySpace::new(lattice);
        let eta = lattice.elements().map(|a| space.eta(a)).collect();
        Context { lattice, order: lattice.poset().relation(), space, eta }
    }

    /// `None` when `rel` falls outside the premise.
    fn test(&self, theorem: Theorem, rel: &Relation) -> Option<Verdict> {
        let l = self.lattice;
        if !satisfies(l, rel, theorem.premise()) {
            return None;
        }
        if theorem == Theorem::Collapse {
            // Any survivor other than ≤ refutes; the witness is its first extra or missing pair.
            let diff = (0..l.len())
                .flat_map(|a| l.elements().map(move |b| (a, b)))
                .find(|&(a, b)| rel.get(a, b) != self.order.get(a, b));
            return Some(Verdict::from_first(diff.map(|(a, b)| Witness::of([a, b]))));
        }
        let s = Subordination::new(l, rel.clone()).expect("square relation");
        let r = dual_relation(&s, &self.space);
        let n = r.rows();
        Some(match theorem {
            Theorem::IffS6 => {
                let irreflexive = (0..n).find(|&x| !r.get(x, x));
                match (irreflexive, check_axiom(l, rel, Axiom::S6)) {
                    (None, Verdict::Fail(w)) => Verdict::Fail(w),
                    (Some(x), Verdict::Pass) => Verdict::Fail(Witness::of([x])),
                    _ => Verdict::Pass,
                }
            }
            Theorem::IffS8 => {
                let intransitive = r
                    .pairs()
                    .find_map(|(x, y)| r.row(y).iter().find(|&z| !r.get(x, z)).map(|z| Witness::of([x, y, z])));
                match (intransitive, check_axiom(l, rel, Axiom::S8)) {
                    (None, Verdict::Fail(w)) => Verdict::Fail(w),
                    (Some(w), Verdict::Pass) => Verdict::Fail(w),
                    _ => Verdict::Pass,
                }
            }
            Theorem::LemmaCorrespondence => Verdict::from_first(
                l.elements()
                    .flat_map(|a| l.elements().map(move |b| (a, b)))
                    .find(|&(a, b)| rel.get(a, b) != r.image(&self.eta[a]).is_subset(&self.eta[b]))
                    .map(|(a, b)| Witness::of([a, b])),
            ),
            Theorem::Collapse => unreachable!(),
        })
    }

    fn visit(&self, theorem: Theorem, index: u64, rel: Relation, tally: &mut Tally) {
        tally.scanned += 1;
        if let Some(v) = self.test(theorem, &rel) {
            tally.qualifying += 1;
            if let Verdict::Fail(witness) = v {
                if tally.counterexample.is_none() {
                    tally.counterexample = Some(Counterexample { index, relation: rel, witness });
                }
            }
        }
    }
}

/// Checks `theorem` on the relations with codes in `codes`.
pub fn check_range(l: &Lattice, theorem: Theorem, codes: Range<u64>) -> Result<Tally> {
    let space = code_space(l)?;
    let ctx = Context::new(l);
    let mut tally = Tally::default();
    for code in codes.start..codes.end.min(space) {
        ctx.visit(theorem, code, Relation::from_code(l.len(), code), &mut tally);
    }
    Ok(tally)
}

/// Relation number `index` of the sampled stream for `seed`.
///
/// Uniform relations on five or more elements are almost never
/// subordinations, so samples are closures of up to `|L|` random seed
/// pairs, three in four of them drawn from `≤`. Every sample satisfies S1–S4.
pub fn sampled_relation(l: &Lattice, seed: u64, index: u64) -> Relation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let n = l.len() as u64;
    let below: Vec<(usize, usize)> =
        l.elements().flat_map(|a| l.elements().map(move |b| (a, b))).filter(|&(a, b)| l.leq(a, b)).collect();
    let k = rng.next_u64() % (n + 1);
    let seeds: Vec<(usize, usize)> = (0..k)
        .map(|_| {
            let r = rng.next_u64();
            if r % 4 != 0 {
                below[(r >> 2) as usize % below.len()]
            } else {
                (((r >> 2) % n) as usize, ((r >> 32) % n) as usize)
            }
        })
        .collect();
    subordination_closure(l, &seeds).expect("square seeds").relation().clone()
}

/// Checks `theorem` on samples `indices` of the stream for `seed`.
pub fn check_sampled(l: &Lattice, theorem: Theorem, seed: u64, indices: Range<u64>) -> Tally {
    let ctx = Context::new(l);
    let mut tally = Tally::default();
    for index in indices {
        ctx.visit(theorem, index, sampled_relation(l, seed, index), &mut tally);
    }
    tally
}

/// Codes in `codes` whose relations satisfy every axiom in `axioms`.
pub fn matching_range(l: &Lattice, axioms: &[Axiom], codes: Range<u64>) -> Result<Vec<(u64, Relation)>> {
    let space = code_space(l)?;
    Ok((codes.start..codes.end.min(space))
        .map(|code| (code, Relation::from_code(l.len(), code)))
        .filter(|(_, rel)| satisfies(l, rel, axioms))
        .collect())
}

/// Splits `0..total` into `parts` contiguous ranges.
pub fn partition(total: u64, parts: usize) -> Vec<Range<u64>> {
    let parts = parts.max(1) as u64;
    (0..parts)
        .map(|k| (total * k / parts)..(total * (k + 1) / parts))
        .filter(|r| !r.is_empty())
        .collect()
}
