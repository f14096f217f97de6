//! Finite compact pospaces.
//!
//! A finite pospace is a poset with the discrete patch topology. Its open
//! upsets are all upsets, every subset is compact, and `Ω(P)` is the upset
//! lattice with `O ≺ V ⟺ O ⊆ V`.

use alloc::format;
use alloc::vec::Vec;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::order::Poset;
use crate::priestley::upset_lattice;
use crate::subordination::{self, Subordination};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pospace(pub Poset);

impl Pospace {
    pub fn poset(&self) -> &Poset {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl From<Poset> for Pospace {
    fn from(p: Poset) -> Self {
        Pospace(p)
    }
}

/// `Ω(P)`: upsets of `P` with `≺ = ⊆`.
pub fn omega(p: &Pospace) -> Subordination {
    Subordination::order(&upset_lattice(p.poset()))
}

/// `K_F = { p ∈ End(L) | p ⊆ F }` as indices into [`subordination::ends`].
pub fn k_set(s: &Subordination, f: &ElementSet) -> Result<ElementSet> {
    s.require_proximity()?;
    let l = s.lattice();
    if f.capacity() != l.len() {
        return Err(Error::Shape(format!("filter over {} elements, lattice has {}", f.capacity(), l.len())));
    }
    if !l.is_proper_filter(f) {
        return Err(Error::ImproperFilter);
    }
    let ends = subordination::ends(s)?;
    Ok(ElementSet::from_indices(ends.len(), (0..ends.len()).filter(|&k| ends[k].is_subset(f))))
}

/// The order isomorphism `End(Ω(P)) → P`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PospaceRoundtrip {
    pub ends: Vec<ElementSet>,
    /// End `k` is the filter of upsets containing point `point[k]`.
    pub point: Vec<usize>,
}

pub fn roundtrip_pospace(p: &Pospace) -> Result<PospaceRoundtrip> {
    let poset = p.poset();
    let s = omega(p);
    let upsets = poset.upsets();
    let ends = subordination::ends(&s)?;
    if ends.len() != poset.len() {
        return Err(Error::IsoFailure(format!("{} ends for {} points", ends.len(), poset.len())));
    }
    let point_filter = |q: usize| ElementSet::from_indices(upsets.len(), (0..upsets.len()).filter(|&k| upsets[k].contains(q)));
    let mut point = Vec::with_capacity(ends.len());
    for (k, e) in ends.iter().enumerate() {
        match (0..poset.len()).find(|&q| point_filter(q) == *e) {
            Some(q) => point.push(q),
            None => return Err(Error::IsoFailure(format!("end {k} is not a point filter"))),
        }
    }
    let mut seen = ElementSet::empty(poset.len());
    for &q in &point {
        if !seen.insert(q) {
            return Err(Error::IsoFailure(format!("point {} is hit twice", poset.name(q))));
        }
    }
    for i in 0..ends.len() {
        for j in 0..ends.len() {
            if ends[i].is_subset(&ends[j]) != poset.leq(point[i], point[j]) {
                return Err(Error::IsoFailure(format!("order differs at ends ({i},{j})")));
            }
        }
    }
    Ok(PospaceRoundtrip { ends, point })
}
