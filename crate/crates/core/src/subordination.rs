//! Subordination and proximity relations on a finite lattice.
//!
//! Axioms S1–S4 make a relation a subordination; S5, S6 and S8 on top of
//! those make it a proximity. There is no S7. Every checker reports the
//! lexicographically least counterexample tuple.
//!
//! Filters here are proper: they contain `1` and omit `0`. Without that the
//! whole lattice would pass the end test vacuously.

use alloc::vec::Vec;
use core::fmt;

use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::order::Lattice;
use crate::relation::{Relation, Verdict, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axiom {
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S8,
}

impl Axiom {
    pub const ALL: [Axiom; 7] = [Axiom::S1, Axiom::S2, Axiom::S3, Axiom::S4, Axiom::S5, Axiom::S6, Axiom::S8];
    pub const SUBORDINATION: [Axiom; 4] = [Axiom::S1, Axiom::S2, Axiom::S3, Axiom::S4];

    pub fn name(self) -> &'static str {
        match self {
            Axiom::S1 => "S1",
            Axiom::S2 => "S2",
            Axiom::S3 => "S3",
            Axiom::S4 => "S4",
            Axiom::S5 => "S5",
            Axiom::S6 => "S6",
            Axiom::S8 => "S8",
        }
    }

    pub fn parse(s: &str) -> Option<Axiom> {
        Axiom::ALL.into_iter().find(|a| a.name().eq_ignore_ascii_case(s.trim()))
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Checks one axiom of `rel` on `l`.
///
/// Witness shapes: S1 `(a,a)` for the missing bound pair; S2 and S3
/// `(a,b,c)`; S4 `(a,b,c,d)`; S5 `(a)`; S6 and S8 `(a,b)`.
pub fn check_axiom(l: &Lattice, rel: &Relation, which: Axiom) -> Verdict {
    Verdict::from_first(first_violation(l, rel, which))
}

fn first_violation(l: &Lattice, rel: &Relation, which: Axiom) -> Option<Witness> {
    let n = l.len();
    let r = |a: usize, b: usize| rel.get(a, b);
    match which {
        Axiom::S1 => [l.bottom(), l.top()]
            .into_iter()
            .find(|&e| !r(e, e))
            .map(|e| Witness::of([e, e])),
        Axiom::S2 => {
            for a in 0..n {
                let row = rel.row(a);
                for b in row {
                    for c in row {
                        if !r(a, l.meet(b, c)) {
                            return Some(Witness::of([a, b, c]));
                        }
                    }
                }
            }
            None
        }
        Axiom::S3 => {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        if r(a, c) && r(b, c) && !r(l.join(a, b), c) {
                            return Some(Witness::of([a, b, c]));
                        }
                    }
                }
            }
            None
        }
        Axiom::S4 => {
            let le = l.poset();
            for a in 0..n {
                for b in le.up_set(a) {
                    for c in rel.row(b) {
                        if let Some(d) = le.up_set(c).iter().find(|&d| !r(a, d)) {
                            // least d for this (a,b,c); (a,b,c) are scanned in order
                            return Some(Witness::of([a, b, c, d]));
                        }
                    }
                }
            }
            None
        }
        Axiom::S5 => (0..n)
            .find(|&a| l.join_all(&rel.column(a)) != a)
            .map(|a| Witness::of([a])),
        Axiom::S6 => rel.pairs().find(|&(a, b)| !l.leq(a, b)).map(|(a, b)| Witness::of([a, b])),
        Axiom::S8 => rel
            .pairs()
            .find(|&(a, b)| !rel.row(a).intersects(&rel.column(b)))
            .map(|(a, b)| Witness::of([a, b])),
    }
}

/// Per-axiom verdicts, in S1..S8 order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomTable(pub Vec<(Axiom, Verdict)>);

impl AxiomTable {
    pub fn compute(l: &Lattice, rel: &Relation) -> Self {
        AxiomTable(Axiom::ALL.iter().map(|&a| (a, check_axiom(l, rel, a))).collect())
    }

    pub fn verdict(&self, which: Axiom) -> &Verdict {
        &self.0.iter().find(|(a, _)| *a == which).expect("all axioms present").1
    }

    pub fn passes(&self, which: Axiom) -> bool {
        self.verdict(which).passed()
    }

    pub fn first_failure(&self, among: &[Axiom]) -> Option<(Axiom, &Witness)> {
        self.0
            .iter()
            .filter(|(a, _)| among.contains(a))
            .find_map(|(a, v)| v.witness().map(|w| (*a, w)))
    }

    pub fn is_subordination(&self) -> bool {
        self.first_failure(&Axiom::SUBORDINATION).is_none()
    }

    pub fn is_proximity(&self) -> bool {
        self.first_failure(&Axiom::ALL).is_none()
    }
}

/// A binary relation on a lattice together with its axiom table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subordination {
    lattice: Lattice,
    rel: Relation,
    axioms: AxiomTable,
}

impl Subordination {
    pub fn new(lattice: &Lattice, rel: Relation) -> Result<Self> {
        if rel.rows() != lattice.len() || rel.cols() != lattice.len() {
            return Err(Error::Shape(alloc::format!(
                "relation is {}×{} on a lattice of {} elements",
                rel.rows(),
                rel.cols(),
                lattice.len()
            )));
        }
        let axioms = AxiomTable::compute(lattice, &rel);
        Ok(Subordination { lattice: lattice.clone(), rel, axioms })
    }

    /// `≺ = ≤`.
    pub fn order(lattice: &Lattice) -> Self {
        Self::new(lattice, lattice.poset().relation()).expect("square by construction")
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn relation(&self) -> &Relation {
        &self.rel
    }

    #[inline]
    pub fn relates(&self, a: usize, b: usize) -> bool {
        self.rel.get(a, b)
    }

    pub fn axioms(&self) -> &AxiomTable {
        &self.axioms
    }

    pub fn is_subordination(&self) -> bool {
        self.axioms.is_subordination()
    }

    pub fn is_proximity(&self) -> bool {
        self.axioms.is_proximity()
    }

    pub(crate) fn require(&self, among: &[Axiom]) -> Result<()> {
        match self.axioms.first_failure(among) {
            None => Ok(()),
            Some((axiom, witness)) => Err(Error::Axiom { axiom: axiom.name(), witness: witness.clone() }),
        }
    }

    pub(crate) fn require_subordination(&self) -> Result<()> {
        self.require(&Axiom::SUBORDINATION)
    }

    pub(crate) fn require_proximity(&self) -> Result<()> {
        self.require(&Axiom::ALL)
    }
}

/// `⇑S = { b | ∃ s ∈ S : s ≺ b }`.
pub fn up_arrow(s: &Subordination, set: &ElementSet) -> ElementSet {
    s.rel.image(set)
}

/// `⇓S = { b | ∃ s ∈ S : b ≺ s }`.
pub fn down_arrow(s: &Subordination, set: &ElementSet) -> ElementSet {
    s.rel.preimage(set)
}

/// Proper filters `F` with `⇑F = F`, sorted as bitmaps.
pub fn round_filters(s: &Subordination) -> Result<Vec<ElementSet>> {
    s.require_subordination()?;
    Ok(s.lattice
        .proper_filters()
        .into_iter()
        .filter(|f| up_arrow(s, f) == *f)
        .collect())
}

/// Round filters `p` with `F₁ ∩ F₂ ⊆ p ⟹ F₁ ⊆ p or F₂ ⊆ p` for all round `F₁, F₂`.
pub fn ends(s: &Subordination) -> Result<Vec<ElementSet>> {
    let round = round_filters(s)?;
    Ok(ends_among(&round))
}

pub(crate) fn ends_among(round: &[ElementSet]) -> Vec<ElementSet> {
    round
        .iter()
        .filter(|p| {
            round.iter().all(|f1| {
                round
                    .iter()
                    .all(|f2| !f1.intersection(f2).is_subset(p) || f1.is_subset(p) || f2.is_subset(p))
            })
        })
        .cloned()
        .collect()
}

/// `μ(a)`: indices into [`ends`] of the ends containing `a`.
pub fn mu(s: &Subordination, a: usize) -> Result<ElementSet> {
    let e = ends(s)?;
    Ok(ElementSet::from_indices(e.len(), (0..e.len()).filter(|&k| e[k].contains(a))))
}

/// Least relation containing `seed`, `0 ≺ 0` and `1 ≺ 1` that is closed under S2, S3 and S4.
pub fn subordination_closure(l: &Lattice, seed: &[(usize, usize)]) -> Result<Subordination> {
    let n = l.len();
    let mut rel = Relation::empty(n, n);
    for &(a, b) in seed {
        for index in [a, b] {
            if index >= n {
                return Err(crate::order::OrderError::Index { index, size: n }.into());
            }
        }
        rel.insert(a, b);
    }
    rel.insert(l.bottom(), l.bottom());
    rel.insert(l.top(), l.top());
    loop {
        let mut next = rel.clone();
        for (b, c) in rel.pairs() {
            for a in l.poset().down_set(b) {
                for d in l.poset().up_set(c) {
                    next.insert(a, d);
                }
            }
        }
        for a in 0..n {
            for b in rel.row(a) {
                for c in rel.row(a) {
                    next.insert(a, l.meet(b, c));
                }
            }
        }
        for c in 0..n {
            let col = rel.column(c);
            for a in &col {
                for b in &col {
                    next.insert(l.join(a, b), c);
                }
            }
        }
        if next == rel {
            return Subordination::new(l, rel);
        }
        rel = next;
    }
}

/// Lattices up to this size are scanned exhaustively by [`collapse_check`].
pub const EXHAUSTIVE_LIMIT: usize = 4;
/// Random relations drawn by [`collapse_check`] above [`EXHAUSTIVE_LIMIT`].
pub const COLLAPSE_SAMPLES: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseReport {
    pub exhaustive: bool,
    pub scanned: u64,
    /// Relations satisfying S1–S5.
    pub survivors: u64,
    /// Whether `≤` itself was among the survivors.
    pub order_survives: bool,
    /// First survivor different from `≤`; a library bug if present.
    pub violation: Option<Relation>,
}

impl CollapseReport {
    pub fn holds(&self) -> bool {
        self.violation.is_none()
    }
}

/// Confirms that `≤` is the only relation satisfying S1–S5 on `l`.
///
/// Exhaustive for `|L| ≤ 4`; otherwise draws [`COLLAPSE_SAMPLES`] uniform
/// relations from a ChaCha stream seeded with `seed`, then checks `≤` itself.
pub fn collapse_check(l: &Lattice, seed: u64) -> CollapseReport {
    let order = l.poset().relation();
    let mut report = CollapseReport {
        exhaustive: l.len() <= EXHAUSTIVE_LIMIT,
        scanned: 0,
        survivors: 0,
        order_survives: false,
        violation: None,
    };
    let visit = |rel: Relation, report: &mut CollapseReport| {
        report.scanned += 1;
        if satisfies(l, &rel, &[Axiom::S1, Axiom::S2, Axiom::S3, Axiom::S4, Axiom::S5]) {
            report.survivors += 1;
            if rel == order {
                report.order_survives = true;
            } else if report.violation.is_none() {
                report.violation = Some(rel);
            }
        }
    };
    if report.exhaustive {
        let n = l.len();
        for code in 0..1u64 << (n * n) {
            visit(Relation::from_code(n, code), &mut report);
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..COLLAPSE_SAMPLES {
            visit(random_relation(l.len(), &mut rng), &mut report);
        }
        if !report.order_survives {
            visit(order.clone(), &mut report);
        }
    }
    report
}

/// Short-circuiting conjunction of axioms.
pub fn satisfies(l: &Lattice, rel: &Relation, axioms: &[Axiom]) -> bool {
    axioms.iter().all(|&a| first_violation(l, rel, a).is_none())
}

/// Each pair independently with probability 1/2.
pub fn random_relation<R: RngCore>(n: usize, rng: &mut R) -> Relation {
    let mut rel = Relation::empty(n, n);
    let mut bits = 0u64;
    let mut left = 0;
    for i in 0..n {
        for j in 0..n {
            if left == 0 {
                bits = rng.next_u64();
                left = 64;
            }
            if bits & 1 == 1 {
                rel.insert(i, j);
            }
            bits >>= 1;
            left -= 1;
        }
    }
    rel
}
