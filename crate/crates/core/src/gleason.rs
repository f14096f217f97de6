//! Ordered Gleason spaces at finite scale.
//!
//! A Gleason space here is a finite poset of points with a second relation
//! `R`. Duals of subordinations carry their prime filters, which the
//! round-filter and end correspondences need; synthetic spaces (any `R` on
//! any poset) are accepted too so the axiom failures can be exercised.
//!
//! Closedness of `R` holds for every finite relation, and the closure in the
//! saturation axiom is the identity, so both reduce to plain set equalities.

use alloc::format;
use alloc::vec::Vec;

use crate::bitset::{all_subsets, ElementSet};
use crate::error::{Error, Result};
use crate::order::Poset;
use crate::priestley::{upset_lattice, PriestleySpace};
use crate::relation::{Relation, Verdict, Witness};
use crate::subordination::{self, up_arrow, Subordination};

/// Verdicts for the Gleason-space axioms.
///
/// Witnesses: `compatible` is `(x,y,z,t)` with `x ≤ y R z ≤ t` but not
/// `x R t`; `order_included` is `(x,y)`; `preorder` is `(x)` for
/// reflexivity or `(x,y,z)` for transitivity; `saturation` is `(k)`, the
/// index of the failing upset in [`Poset::upsets`] order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GleasonAxioms {
    pub closed: Verdict,
    pub compatible: Verdict,
    pub order_included: Verdict,
    pub preorder: Verdict,
    pub saturation: Verdict,
}

impl GleasonAxioms {
    pub fn all_pass(&self) -> bool {
        self.items().iter().all(|(_, v)| v.passed())
    }

    /// `(label, verdict)` rows in report order.
    pub fn items(&self) -> [(&'static str, &Verdict); 5] {
        [
            ("item 1 (R closed)", &self.closed),
            ("item 2 (x≤y R z≤t ⟹ x R t)", &self.compatible),
            ("item 2' (≤ ⊆ R)", &self.order_included),
            ("item 3 (R pre-order)", &self.preorder),
            ("item 4 (O = R[−,Oᶜ]ᶜ)", &self.saturation),
        ]
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GleasonSpace {
    order: Poset,
    r: Relation,
    dual: Option<PriestleySpace>,
    axioms: GleasonAxioms,
}

impl GleasonSpace {
    pub fn synthetic(order: Poset, r: Relation) -> Result<Self> {
        if r.rows() != order.len() || r.cols() != order.len() {
            return Err(Error::Shape(format!(
                "R is {}×{} on {} points",
                r.rows(),
                r.cols(),
                order.len()
            )));
        }
        let axioms = check_axioms(&order, &r);
        Ok(GleasonSpace { order, r, dual: None, axioms })
    }

    pub fn order(&self) -> &Poset {
        &self.order
    }

    pub fn r(&self) -> &Relation {
        &self.r
    }

    /// Prime-filter data, present when built from a subordination.
    pub fn dual(&self) -> Option<&PriestleySpace> {
        self.dual.as_ref()
    }

    pub fn axioms(&self) -> &GleasonAxioms {
        &self.axioms
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    fn require_dual(&self) -> Result<&PriestleySpace> {
        self.dual.as_ref().ok_or(Error::NotADual)
    }

    fn require_preorder(&self) -> Result<()> {
        match &self.axioms.preorder {
            Verdict::Pass => Ok(()),
            Verdict::Fail(w) => Err(Error::Preorder { witness: w.clone() }),
        }
    }

    fn require_all(&self) -> Result<()> {
        for (label, v) in self.axioms.items() {
            if let Verdict::Fail(w) = v {
                return Err(Error::Axiom { axiom: label, witness: w.clone() });
            }
        }
        Ok(())
    }
}

/// `x R y ⟺ ⇑x ⊆ y` on the prime filters of the lattice.
pub fn relation_from_subordination(s: &Subordination) -> Result<GleasonSpace> {
    s.require_subordination()?;
    let space = PriestleySpace::new(s.lattice());
    let r = dual_relation(s, &space);
    let axioms = check_axioms(space.order(), &r);
    Ok(GleasonSpace { order: space.order().clone(), r, dual: Some(space), axioms })
}

pub(crate) fn dual_relation(s: &Subordination, space: &PriestleySpace) -> Relation {
    let n = space.len();
    let rows = space
        .points()
        .iter()
        .map(|x| {
            let up = up_arrow(s, x);
            ElementSet::from_indices(n, (0..n).filter(|&y| up.is_subset(space.point(y))))
        })
        .collect();
    Relation::from_rows(n, rows)
}

/// `O ≺ U ⟺ R[O,−] ⊆ U` on the upset lattice of the points.
pub fn subordination_from_relation(g: &GleasonSpace) -> Subordination {
    let lattice = upset_lattice(&g.order);
    let sets = g.order.upsets();
    let n = sets.len();
    let images: Vec<ElementSet> = sets.iter().map(|o| g.r.image(o)).collect();
    let rel = Relation::from_rows(
        n,
        images
            .iter()
            .map(|img| ElementSet::from_indices(n, (0..n).filter(|&u| img.is_subset(&sets[u]))))
            .collect(),
    );
    Subordination::new(&lattice, rel).expect("square by construction")
}

/// `R[E,−]`.
pub fn r_image(g: &GleasonSpace, e: &ElementSet) -> ElementSet {
    g.r.image(e)
}

/// `R[−,E]`.
pub fn r_preimage(g: &GleasonSpace, e: &ElementSet) -> ElementSet {
    g.r.preimage(e)
}

pub fn check_gleason_axioms(g: &GleasonSpace) -> GleasonAxioms {
    check_axioms(&g.order, &g.r)
}

fn check_axioms(order: &Poset, r: &Relation) -> GleasonAxioms {
    let n = order.len();
    let compatible = Verdict::from_first((|| {
        for x in 0..n {
            for y in order.up_set(x) {
                for z in r.row(y) {
                    if let Some(t) = order.up_set(z).iter().find(|&t| !r.get(x, t)) {
                        return Some(Witness::of([x, y, z, t]));
                    }
                }
            }
        }
        None
    })());
    let order_included = Verdict::from_first(
        order
            .relation()
            .pairs()
            .find(|&(x, y)| !r.get(x, y))
            .map(|(x, y)| Witness::of([x, y])),
    );
    let preorder = Verdict::from_first(
        (0..n)
            .find(|&x| !r.get(x, x))
            .map(|x| Witness::of([x]))
            .or_else(|| {
                r.pairs().find_map(|(x, y)| {
                    r.row(y).iter().find(|&z| !r.get(x, z)).map(|z| Witness::of([x, y, z]))
                })
            }),
    );
    let saturation = Verdict::from_first(
        order
            .upsets()
            .iter()
            .position(|o| r.preimage(&o.complement()).complement() != *o)
            .map(|k| Witness::of([k])),
    );
    GleasonAxioms { closed: Verdict::Pass, compatible, order_included, preorder, saturation }
}

/// Members `y ∈ F` such that `z R y` implies `y R z` for every `z ∈ F`.
pub fn r_minimals_in(g: &GleasonSpace, f: &ElementSet) -> Result<ElementSet> {
    g.require_preorder()?;
    Ok(minimals(&g.r, f))
}

pub(crate) fn minimals(r: &Relation, f: &ElementSet) -> ElementSet {
    ElementSet::from_indices(
        f.capacity(),
        f.iter().filter(|&y| f.iter().all(|z| !r.get(z, y) || r.get(y, z))),
    )
}

/// `X/≡` ordered by `≤_R`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPospace {
    /// ≡-classes, ordered by least member.
    pub classes: Vec<ElementSet>,
    pub order: Poset,
    /// `Π`: point index to class index.
    pub projection: Vec<usize>,
}

impl QuotientPospace {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// A fixed representative: the least member.
    pub fn representative(&self, class: usize) -> usize {
        self.classes[class].first().expect("classes are nonempty")
    }
}

pub fn quotient(g: &GleasonSpace) -> Result<QuotientPospace> {
    g.require_preorder()?;
    quotient_of(&g.order, &g.r)
}

pub(crate) fn quotient_of(order: &Poset, r: &Relation) -> Result<QuotientPospace> {
    let n = order.len();
    let mut projection = alloc::vec![usize::MAX; n];
    let mut classes: Vec<ElementSet> = Vec::new();
    for x in 0..n {
        if projection[x] != usize::MAX {
            continue;
        }
        let class = ElementSet::from_indices(n, (x..n).filter(|&y| r.get(x, y) && r.get(y, x)));
        for y in &class {
            projection[y] = classes.len();
        }
        classes.push(class);
    }
    let k = classes.len();
    // ≤_R must not depend on representatives.
    for i in 0..k {
        for j in 0..k {
            let first = r.get(classes[i].first().unwrap(), classes[j].first().unwrap());
            for x in &classes[i] {
                for y in &classes[j] {
                    if r.get(x, y) != first {
                        return Err(Error::Preorder { witness: Witness::of([x, y]) });
                    }
                }
            }
        }
    }
    let names = (0..k)
        .map(|i| {
            let mut s = alloc::string::String::from("[");
            for (m, x) in classes[i].iter().enumerate() {
                if m > 0 {
                    s.push(',');
                }
                s.push_str(order.name(x));
            }
            s.push(']');
            s
        })
        .collect();
    let reps: Vec<usize> = classes.iter().map(|c| c.first().unwrap()).collect();
    let qorder = Poset::from_predicate(names, |i, j| r.get(reps[i], reps[j]));
    Ok(QuotientPospace { classes, order: qorder, projection })
}

/// `Φ(F) = F_F = { x | F ⊆ x }`.
pub fn phi(g: &GleasonSpace, f: &ElementSet) -> Result<ElementSet> {
    Ok(g.require_dual()?.containing(f))
}

/// Inverse of [`phi`]: `{ a | C ⊆ η(a) }` for a nonempty `R`-increasing `C`.
///
/// The empty set is `R`-increasing too but corresponds to the whole
/// lattice, which is not a proper filter.
pub fn phi_inverse(g: &GleasonSpace, c: &ElementSet) -> Result<ElementSet> {
    let space = g.require_dual()?;
    g.require_all()?;
    if let Some(y) = g.r.image(c).difference(c).first() {
        let x = c.iter().find(|&x| g.r.get(x, y)).expect("y is in the image");
        return Err(Error::NotRIncreasing { witness: Witness::of([x, y]) });
    }
    if c.is_empty() {
        return Err(Error::ImproperFilter);
    }
    let l = space.lattice();
    Ok(ElementSet::from_indices(l.len(), l.elements().filter(|&a| c.is_subset(&space.eta(a)))))
}

/// `R`-increasing sets: `R[C,−] ⊆ C`.
pub fn is_r_increasing(g: &GleasonSpace, c: &ElementSet) -> bool {
    g.r.image(c).is_subset(c)
}

/// All nonempty `R`-increasing point sets, sorted. Capped at 20 points.
pub fn r_increasing_sets(g: &GleasonSpace) -> Vec<ElementSet> {
    all_subsets(g.len()).filter(|c| !c.is_empty() && is_r_increasing(g, c)).collect()
}

/// Outcome of [`sigma_check`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaReport {
    pub quotient: QuotientPospace,
    pub ends: Vec<ElementSet>,
    /// `σ`: class index to end index.
    pub sigma: Vec<usize>,
    /// For each end `p`, the class whose members `x` satisfy `F_p = R[x,−]`.
    pub minimal_class: Vec<usize>,
}

/// Verifies `x^≡ ↦ ⇑x` is an order isomorphism `X/≡ → End(L)`, the
/// `F_p = R[x,−]` characterisation of each end, and the subbase identity
/// `Π⁻¹(σ⁻¹(μ(a))) = ⋃{ η(b) | b ≺ a }`.
pub fn sigma_check(g: &GleasonSpace, s: &Subordination) -> Result<SigmaReport> {
    s.require_proximity()?;
    let space = g.require_dual()?;
    if space.lattice() != s.lattice() {
        return Err(Error::Shape("Gleason space is not the dual of this lattice".into()));
    }
    let fail = |m: alloc::string::String| Err(Error::IsoFailure(m));
    let ends = subordination::ends(s)?;
    let q = quotient(g)?;
    let mut sigma = Vec::with_capacity(q.len());
    for (c, class) in q.classes.iter().enumerate() {
        let rep = q.representative(c);
        let p = up_arrow(s, space.point(rep));
        for x in class {
            if up_arrow(s, space.point(x)) != p {
                return fail(format!("⇑ differs inside class {}", q.order.name(c)));
            }
        }
        match ends.binary_search(&p) {
            Ok(k) => sigma.push(k),
            Err(_) => return fail(format!("⇑{} is not an end", g.order.name(rep))),
        }
    }
    let mut hit = alloc::vec![false; ends.len()];
    for &k in &sigma {
        if core::mem::replace(&mut hit[k], true) {
            return fail(format!("σ is not injective at end {k}"));
        }
    }
    if let Some(k) = hit.iter().position(|h| !h) {
        return fail(format!("end {k} is not ⇑x for any prime x"));
    }
    for i in 0..q.len() {
        for j in 0..q.len() {
            if q.order.leq(i, j) != ends[sigma[i]].is_subset(&ends[sigma[j]]) {
                return fail(format!("σ is not an order isomorphism at ({i},{j})"));
            }
        }
    }
    let mut minimal_class = Vec::with_capacity(ends.len());
    for (k, p) in ends.iter().enumerate() {
        let fp = space.containing(p);
        let mins = minimals(&g.r, &fp);
        let classes: Vec<usize> = {
            let mut v: Vec<usize> = mins.iter().map(|x| q.projection[x]).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        let [c] = classes[..] else {
            return fail(format!("F_p for end {k} has {} minimal classes", classes.len()));
        };
        for x in &q.classes[c] {
            if g.r.row(x) != &fp {
                return fail(format!("F_p ≠ R[x,−] for end {k}"));
            }
        }
        if sigma[c] != k {
            return fail(format!("σ does not send the minimal class of F_p to end {k}"));
        }
        minimal_class.push(c);
    }
    let l = s.lattice();
    for a in l.elements() {
        let lhs = ElementSet::from_indices(
            g.len(),
            (0..g.len()).filter(|&x| ends[sigma[q.projection[x]]].contains(a)),
        );
        let mut rhs = ElementSet::empty(g.len());
        for b in &s.relation().column(a) {
            rhs.union_with(&space.eta(b));
        }
        if lhs != rhs {
            return fail(format!("subbase identity fails at {}", l.name(a)));
        }
    }
    Ok(SigmaReport { quotient: q, ends, sigma, minimal_class })
}
