//! Finite Priestley duality.
//!
//! The dual of a finite distributive lattice is its poset of prime filters
//! under inclusion. The patch topology is discrete at this scale, so closure
//! and interior are identities and never appear as data: every subset is
//! clopen and the clopen upsets are simply the upsets.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::order::{Lattice, Poset};

/// Prime filters of `l` ordered by inclusion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PriestleySpace {
    lattice: Lattice,
    points: Vec<ElementSet>,
    order: Poset,
}

/// All proper prime filters, sorted as bitmaps.
pub fn prime_filters(l: &Lattice) -> Vec<ElementSet> {
    l.proper_filters().into_iter().filter(|f| l.is_prime_filter(f)).collect()
}

impl PriestleySpace {
    pub fn new(l: &Lattice) -> Self {
        let points = prime_filters(l);
        let names = points
            .iter()
            .map(|x| {
                // A prime filter is ↑j for its least element j.
                let j = l.meet_all(x);
                format!("↑{}", l.name(j))
            })
            .collect();
        let order = Poset::from_predicate(names, |i, j| points[i].is_subset(&points[j]));
        debug_assert!((0..points.len()).all(|i| (0..points.len())
            .all(|j| order.leq(i, j) == points[i].is_subset(&points[j]))));
        PriestleySpace { lattice: l.clone(), points, order }
    }

    pub fn lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn points(&self) -> &[ElementSet] {
        &self.points
    }

    pub fn point(&self, x: usize) -> &ElementSet {
        &self.points[x]
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    /// `η(a)`: the points containing `a`.
    pub fn eta(&self, a: usize) -> ElementSet {
        ElementSet::from_indices(self.len(), (0..self.len()).filter(|&x| self.points[x].contains(a)))
    }

    /// `F_S`: the points containing all of `s`.
    pub fn containing(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.len(), (0..self.len()).filter(|&x| s.is_subset(&self.points[x])))
    }

    /// The element whose `η` is `set`, if any.
    pub fn eta_inverse(&self, set: &ElementSet) -> Option<usize> {
        self.lattice.elements().find(|&a| self.eta(a) == *set)
    }

    pub fn index_of(&self, filter: &ElementSet) -> Option<usize> {
        self.points.binary_search(filter).ok()
    }
}

/// `η(a)` over the prime filters of `l`.
pub fn eta(l: &Lattice, a: usize) -> ElementSet {
    PriestleySpace::new(l).eta(a)
}

/// Upsets of `p` under inclusion, sorted as bitmaps.
pub fn upset_lattice(p: &Poset) -> Lattice {
    let sets = p.upsets();
    let names = sets
        .iter()
        .map(|s| {
            let mut out = String::from("{");
            for (k, i) in s.iter().enumerate() {
                if k > 0 {
                    out.push(',');
                }
                out.push_str(p.name(i));
            }
            out.push('}');
            out
        })
        .collect();
    let index = |s: &ElementSet| sets.binary_search(s).expect("upsets closed under ∩ and ∪");
    let n = sets.len();
    let order = Poset::from_predicate(names, |i, j| sets[i].is_subset(&sets[j]));
    let meet = (0..n)
        .map(|i| (0..n).map(|j| index(&sets[i].intersection(&sets[j]))).collect())
        .collect();
    let join = (0..n)
        .map(|i| (0..n).map(|j| index(&sets[i].union(&sets[j]))).collect())
        .collect();
    Lattice::from_tables(order, 0, n - 1, meet, join)
}

/// Witness maps of `a ↦ η(a)` onto the upsets of the prime-filter poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BirkhoffReport {
    pub space: PriestleySpace,
    pub upsets: Lattice,
    pub upset_sets: Vec<ElementSet>,
    /// Element `a` of `L` maps to element `forward[a]` of `upsets`.
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

/// Checks that `η` is a bijective lattice homomorphism `L → uOf(Prim(L))`.
pub fn birkhoff_check(l: &Lattice) -> Result<BirkhoffReport> {
    let space = PriestleySpace::new(l);
    let upset_sets = space.order().upsets();
    let upsets = upset_lattice(space.order());
    let fail = |msg: String| Err(Error::IsoFailure(msg));
    if upset_sets.len() != l.len() {
        return fail(format!("{} elements but {} upsets", l.len(), upset_sets.len()));
    }
    let mut forward = Vec::with_capacity(l.len());
    for a in l.elements() {
        let image = space.eta(a);
        match upset_sets.binary_search(&image) {
            Ok(k) => forward.push(k),
            Err(_) => return fail(format!("η({}) is not an upset", l.name(a))),
        }
    }
    let mut backward = alloc::vec![usize::MAX; l.len()];
    for (a, &k) in forward.iter().enumerate() {
        if backward[k] != usize::MAX {
            return fail(format!("η identifies {} and {}", l.name(backward[k]), l.name(a)));
        }
        backward[k] = a;
    }
    for a in l.elements() {
        for b in l.elements() {
            if forward[l.meet(a, b)] != upsets.meet(forward[a], forward[b])
                || forward[l.join(a, b)] != upsets.join(forward[a], forward[b])
            {
                return fail(format!("η does not preserve operations at ({a},{b})"));
            }
            if l.leq(a, b) != upsets.leq(forward[a], forward[b]) {
                return fail(format!("η does not reflect order at ({a},{b})"));
            }
        }
    }
    Ok(BirkhoffReport { space, upsets, upset_sets, forward, backward })
}
