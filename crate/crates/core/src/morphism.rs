//! Meet-hemimorphisms, their hemirelations, and `★`-composition.
//!
//! Orientation: for `h: L → M` the hemirelation is stored as
//! `ρ ⊆ Prim(M) × Prim(L)`, rows indexed by points of the target's dual and
//! columns by points of the source's dual (`y ρ x ⟺ h⁻¹(y) ⊆ x`). Between
//! Gleason spaces this reads `ρ ⊆ X × Y` with `X = Prim(M)`, `Y = Prim(L)`
//! and `h: uOf(Y) → uOf(X)`; the letters swap but the stored matrix is the
//! same. [`HemiRelation::converse`] gives `ρ⁻¹ ⊆ Prim(L) × Prim(M)`.

use alloc::format;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::gleason::{self, minimals, GleasonSpace, QuotientPospace};
use crate::order::Lattice;
use crate::priestley::PriestleySpace;
use crate::relation::{Relation, Verdict, Witness};
use crate::subordination::{self, up_arrow, Subordination};

/// A total map between lattice carriers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HemiMorphism {
    source: Lattice,
    target: Lattice,
    map: Vec<usize>,
}

impl HemiMorphism {
    pub fn new(source: &Lattice, target: &Lattice, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() {
            return Err(Error::Shape(format!(
                "map has {} entries for a source of {} elements",
                map.len(),
                source.len()
            )));
        }
        if let Some(&v) = map.iter().find(|&&v| v >= target.len()) {
            return Err(Error::Shape(format!("map value {v} outside a target of {} elements", target.len())));
        }
        Ok(HemiMorphism { source: source.clone(), target: target.clone(), map })
    }

    pub fn identity(l: &Lattice) -> Self {
        HemiMorphism { source: l.clone(), target: l.clone(), map: l.elements().collect() }
    }

    pub fn source(&self) -> &Lattice {
        &self.source
    }

    pub fn target(&self) -> &Lattice {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    /// `h⁻¹(S)`.
    pub fn preimage(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(self.source.len(), self.source.elements().filter(|&a| s.contains(self.map[a])))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HAxiom {
    H0,
    H1,
    H2,
}

impl HAxiom {
    pub const ALL: [HAxiom; 3] = [HAxiom::H0, HAxiom::H1, HAxiom::H2];

    pub fn name(self) -> &'static str {
        match self {
            HAxiom::H0 => "H0",
            HAxiom::H1 => "H1",
            HAxiom::H2 => "H2",
        }
    }
}

impl fmt::Display for HAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Strong meet-hemimorphism check. Witness `(a)` for a bound that moves,
/// `(a,b)` for a meet that is not preserved.
pub fn check_h0(h: &HemiMorphism) -> Verdict {
    let (l, m) = (&h.source, &h.target);
    if h.apply(l.top()) != m.top() {
        return Verdict::Fail(Witness::of([l.top()]));
    }
    if h.apply(l.bottom()) != m.bottom() {
        return Verdict::Fail(Witness::of([l.bottom()]));
    }
    for a in l.elements() {
        for b in l.elements() {
            if h.apply(l.meet(a, b)) != m.meet(h.apply(a), h.apply(b)) {
                return Verdict::Fail(Witness::of([a, b]));
            }
        }
    }
    Verdict::Pass
}

fn check_shapes(h: &HemiMorphism, src: &Subordination, tgt: &Subordination) -> Result<()> {
    if src.lattice() != &h.source || tgt.lattice() != &h.target {
        return Err(Error::Shape("subordinations do not live on the morphism's lattices".into()));
    }
    Ok(())
}

/// Witnesses: H0 as in [`check_h0`]; H1 `(a₁,a₂,b₁,b₂)` with `a₁ ≺ b₁`,
/// `a₂ ≺ b₂` and `h(a₁∨a₂) ⊀ h(b₁)∨h(b₂)`; H2 `(a)`.
pub fn check_h(h: &HemiMorphism, src: &Subordination, tgt: &Subordination, which: HAxiom) -> Result<Verdict> {
    check_shapes(h, src, tgt)?;
    let (l, m) = (&h.source, &h.target);
    Ok(match which {
        HAxiom::H0 => check_h0(h),
        HAxiom::H1 => {
            let rel = src.relation();
            for a1 in l.elements() {
                for a2 in l.elements() {
                    let lhs = h.apply(l.join(a1, a2));
                    for b1 in rel.row(a1) {
                        for b2 in rel.row(a2) {
                            if !tgt.relates(lhs, m.join(h.apply(b1), h.apply(b2))) {
                                return Ok(Verdict::Fail(Witness::of([a1, a2, b1, b2])));
                            }
                        }
                    }
                }
            }
            Verdict::Pass
        }
        HAxiom::H2 => Verdict::from_first(
            l.elements()
                .find(|&a| {
                    let below = src.relation().column(a);
                    let joined = below.iter().fold(m.bottom(), |acc, b| m.join(acc, h.apply(b)));
                    joined != h.apply(a)
                })
                .map(|a| Witness::of([a])),
        ),
    })
}

fn require_h(h: &HemiMorphism, src: &Subordination, tgt: &Subordination) -> Result<()> {
    for which in HAxiom::ALL {
        if let Verdict::Fail(w) = check_h(h, src, tgt, which)? {
            return Err(Error::Morphism { condition: which.name(), witness: w });
        }
    }
    Ok(())
}

/// Verdicts for the hemirelation conditions.
///
/// Witnesses: `monotone` `(y₁,y₂,x₁,x₂)` with `y₁ ≤ y₂ ρ x₁ ≤ x₂` but not
/// `y₁ ρ x₂`; `upsets` `(k)` for the `k`-th upset of the source dual;
/// `total` `(y)` for a point with empty `ρ[y,−]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HemiConditions {
    pub monotone: Verdict,
    pub closed: Verdict,
    pub upsets: Verdict,
    pub total: Verdict,
}

impl HemiConditions {
    pub fn items(&self) -> [(&'static str, &Verdict); 4] {
        [
            ("condition 1 (y₁≤y₂ ρ x₁≤x₂ ⟹ y₁ ρ x₂)", &self.monotone),
            ("condition 2 (ρ closed)", &self.closed),
            ("condition 3 (ρ[−,Oᶜ]ᶜ upset)", &self.upsets),
            ("condition 4 (ρ[y,−] ≠ ∅)", &self.total),
        ]
    }

    pub fn all_pass(&self) -> bool {
        self.items().iter().all(|(_, v)| v.passed())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HemiRelation {
    /// `Y = Prim(M)`, the rows.
    target_dual: PriestleySpace,
    /// `X = Prim(L)`, the columns.
    source_dual: PriestleySpace,
    rho: Relation,
    conditions: HemiConditions,
}

impl HemiRelation {
    /// A relation `Prim(target) × Prim(source)` for a would-be `h: source → target`.
    pub fn new(source: &Lattice, target: &Lattice, rho: Relation) -> Result<Self> {
        let source_dual = PriestleySpace::new(source);
        let target_dual = PriestleySpace::new(target);
        if rho.rows() != target_dual.len() || rho.cols() != source_dual.len() {
            return Err(Error::Shape(format!(
                "ρ is {}×{}, expected {}×{}",
                rho.rows(),
                rho.cols(),
                target_dual.len(),
                source_dual.len()
            )));
        }
        let conditions = conditions(&target_dual, &source_dual, &rho);
        Ok(HemiRelation { target_dual, source_dual, rho, conditions })
    }

    pub fn rho(&self) -> &Relation {
        &self.rho
    }

    /// `ρ⁻¹ ⊆ Prim(L) × Prim(M)`.
    pub fn converse(&self) -> Relation {
        self.rho.converse()
    }

    pub fn source_dual(&self) -> &PriestleySpace {
        &self.source_dual
    }

    pub fn target_dual(&self) -> &PriestleySpace {
        &self.target_dual
    }

    pub fn conditions(&self) -> &HemiConditions {
        &self.conditions
    }

    fn require_conditions(&self) -> Result<()> {
        for (label, v) in self.conditions.items() {
            if let Verdict::Fail(w) = v {
                return Err(Error::Condition { condition: label, witness: w.clone() });
            }
        }
        Ok(())
    }
}

fn conditions(y: &PriestleySpace, x: &PriestleySpace, rho: &Relation) -> HemiConditions {
    let monotone = Verdict::from_first((|| {
        for y1 in 0..y.len() {
            for y2 in y.order().up_set(y1) {
                for x1 in rho.row(y2) {
                    if let Some(x2) = x.order().up_set(x1).iter().find(|&x2| !rho.get(y1, x2)) {
                        return Some(Witness::of([y1, y2, x1, x2]));
                    }
                }
            }
        }
        None
    })());
    let upsets = Verdict::from_first(
        x.order()
            .upsets()
            .iter()
            .position(|o| !y.order().is_upset(&rho.preimage(&o.complement()).complement()))
            .map(|k| Witness::of([k])),
    );
    let total = Verdict::from_first((0..y.len()).find(|&p| rho.row(p).is_empty()).map(|p| Witness::of([p])));
    HemiConditions { monotone, closed: Verdict::Pass, upsets, total }
}

/// `y ρ x ⟺ h⁻¹(y) ⊆ x`.
pub fn relation_from_hemimorphism(h: &HemiMorphism) -> Result<HemiRelation> {
    if let Verdict::Fail(w) = check_h0(h) {
        return Err(Error::Morphism { condition: "H0", witness: w });
    }
    let source_dual = PriestleySpace::new(&h.source);
    let target_dual = PriestleySpace::new(&h.target);
    let rows = target_dual
        .points()
        .iter()
        .map(|y| {
            let pre = h.preimage(y);
            ElementSet::from_indices(
                source_dual.len(),
                (0..source_dual.len()).filter(|&x| pre.is_subset(source_dual.point(x))),
            )
        })
        .collect();
    let rho = Relation::from_rows(source_dual.len(), rows);
    let conditions = conditions(&target_dual, &source_dual, &rho);
    Ok(HemiRelation { target_dual, source_dual, rho, conditions })
}

/// The unique `h` with `η(h(a)) = ρ[−,η(a)ᶜ]ᶜ`.
///
/// A strong morphism needs `h(0) = 0`, i.e. `ρ[−,η(0)ᶜ]ᶜ = ∅`; when some
/// `ρ[y,−]` is empty that set is not `η(0)` and the error names element `0`.
pub fn hemimorphism_from_relation(rho: &HemiRelation) -> Result<HemiMorphism> {
    let l = rho.source_dual.lattice();
    let m = rho.target_dual.lattice();
    let mut map = Vec::with_capacity(l.len());
    for a in l.elements() {
        let u = rho.rho.preimage(&rho.source_dual.eta(a).complement()).complement();
        let b = rho.target_dual.eta_inverse(&u).ok_or(Error::NotClopenUpset { element: a })?;
        map.push(b);
    }
    if map[l.bottom()] != m.bottom() {
        return Err(Error::NotClopenUpset { element: l.bottom() });
    }
    Ok(HemiMorphism { source: l.clone(), target: m.clone(), map })
}

/// Ordered forth condition: for `x₁` `R`-minimal in `ρ[y₁,−]`,
/// `x₁ ρ⁻¹ y₁ R y₂ ρ x₂` implies `x₁ R x₂`. Witness `(x₁,y₁,y₂,x₂)`.
///
/// `r_source` lives on `Prim(L)`, `r_target` on `Prim(M)`.
pub fn check_ofc(rho: &HemiRelation, r_source: &Relation, r_target: &Relation) -> Result<Verdict> {
    for r in [r_source, r_target] {
        let preorder = relation_preorder(r);
        if let Verdict::Fail(w) = preorder {
            return Err(Error::Preorder { witness: w });
        }
    }
    let ny = rho.target_dual.len();
    let nx = rho.source_dual.len();
    if r_source.rows() != nx || r_target.rows() != ny {
        return Err(Error::Shape("R relations do not match the dual spaces".into()));
    }
    let mut found: Option<Witness> = None;
    for y1 in 0..ny {
        let mins = minimals(r_source, rho.rho.row(y1));
        for x1 in &mins {
            for y2 in r_target.row(y1) {
                if let Some(x2) = rho.rho.row(y2).iter().find(|&x2| !r_source.get(x1, x2)) {
                    let w = Witness::of([x1, y1, y2, x2]);
                    if found.as_ref().is_none_or(|f| w < *f) {
                        found = Some(w);
                    }
                }
            }
        }
    }
    Ok(Verdict::from_first(found))
}

fn relation_preorder(r: &Relation) -> Verdict {
    let n = r.rows();
    Verdict::from_first((0..n).find(|&x| !r.get(x, x)).map(|x| Witness::of([x])).or_else(|| {
        r.pairs()
            .find_map(|(x, y)| r.row(y).iter().find(|&z| !r.get(x, z)).map(|z| Witness::of([x, y, z])))
    }))
}

/// de Vries condition: `ρ[−,Oᶜ] = ρ[−,R[−,Oᶜ]]` for every upset `O` of
/// `Prim(L)`. Witness `(k)`, the index of `O` in upset order.
pub fn check_dvc(rho: &HemiRelation, r_source: &Relation) -> Verdict {
    Verdict::from_first(
        rho.source_dual
            .order()
            .upsets()
            .iter()
            .position(|o| {
                let oc = o.complement();
                rho.rho.preimage(&oc) != rho.rho.preimage(&r_source.preimage(&oc))
            })
            .map(|k| Witness::of([k])),
    )
}

/// `(h₂ ★ h₁)(a) = ⋁{ h₂(h₁(b)) | b ≺ a }` for `h₁: L → M`, `h₂: M → N`.
pub fn star(
    h1: &HemiMorphism,
    h2: &HemiMorphism,
    s_l: &Subordination,
    s_m: &Subordination,
    s_n: &Subordination,
) -> Result<HemiMorphism> {
    require_h(h1, s_l, s_m)?;
    require_h(h2, s_m, s_n)?;
    Ok(star_unchecked(h1, h2, s_l))
}

pub(crate) fn star_unchecked(h1: &HemiMorphism, h2: &HemiMorphism, s_l: &Subordination) -> HemiMorphism {
    let n = &h2.target;
    let map = h1
        .source
        .elements()
        .map(|a| {
            s_l.relation()
                .column(a)
                .iter()
                .fold(n.bottom(), |acc, b| n.join(acc, h2.apply(h1.apply(b))))
        })
        .collect();
    HemiMorphism { source: h1.source.clone(), target: h2.target.clone(), map }
}

/// `ρ₁ ★ ρ₂`: the hemirelation of `h₂ ★ h₁`, where `ρᵢ` belongs to `hᵢ`.
pub fn compose_relations(
    rho1: &HemiRelation,
    rho2: &HemiRelation,
    s_l: &Subordination,
    s_m: &Subordination,
    s_n: &Subordination,
) -> Result<HemiRelation> {
    let h1 = hemimorphism_from_relation(rho1)?;
    let h2 = hemimorphism_from_relation(rho2)?;
    relation_from_hemimorphism(&star(&h1, &h2, s_l, s_m, s_n)?)
}

/// `End(h): End(M) → End(L)`, `p ↦ ⇑h⁻¹(p)`, as indices into [`subordination::ends`].
pub fn ends_map(h: &HemiMorphism, s_l: &Subordination, s_m: &Subordination) -> Result<Vec<usize>> {
    require_h(h, s_l, s_m)?;
    let ends_l = subordination::ends(s_l)?;
    let ends_m = subordination::ends(s_m)?;
    ends_m
        .iter()
        .map(|p| {
            let image = up_arrow(s_l, &h.preimage(p));
            ends_l
                .binary_search(&image)
                .map_err(|_| Error::NotAnEnd(format!("⇑h⁻¹({:?})", p.to_vec())))
        })
        .collect()
}

/// For every `y ∈ Prim(M)` and `x` `R`-minimal in `ρ[y,−]`:
/// `⇑(h⁻¹(⇑y)) = ⇑x`. Witness `(y,x)`.
pub fn check_end_agreement(h: &HemiMorphism, s_l: &Subordination, s_m: &Subordination) -> Result<Verdict> {
    require_h(h, s_l, s_m)?;
    let rho = relation_from_hemimorphism(h)?;
    let gl = gleason::relation_from_subordination(s_l)?;
    let y_space = &rho.target_dual;
    let x_space = &rho.source_dual;
    for y in 0..y_space.len() {
        let lhs = up_arrow(s_l, &h.preimage(&up_arrow(s_m, y_space.point(y))));
        for x in &minimals(gl.r(), rho.rho.row(y)) {
            if up_arrow(s_l, x_space.point(x)) != lhs {
                return Ok(Verdict::Fail(Witness::of([y, x])));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// `ξ(ρ): Prim(M)/≡ → Prim(L)/≡`, `y^≡ ↦ x^≡` for `x` `R`-minimal in `ρ[y,−]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiMap {
    pub domain: QuotientPospace,
    pub codomain: QuotientPospace,
    pub map: Vec<usize>,
}

/// `g_source` is the Gleason dual of `L`, `g_target` that of `M`.
pub fn xi_map(rho: &HemiRelation, g_source: &GleasonSpace, g_target: &GleasonSpace) -> Result<XiMap> {
    if g_source.len() != rho.source_dual.len() || g_target.len() != rho.target_dual.len() {
        return Err(Error::Shape("Gleason spaces do not match ρ".into()));
    }
    rho.require_conditions()?;
    if let Verdict::Fail(w) = check_ofc(rho, g_source.r(), g_target.r())? {
        return Err(Error::Condition { condition: "ofc", witness: w });
    }
    if let Verdict::Fail(w) = check_dvc(rho, g_source.r()) {
        return Err(Error::Condition { condition: "dvc", witness: w });
    }
    let domain = gleason::quotient(g_target)?;
    let codomain = gleason::quotient(g_source)?;
    let mut map = Vec::with_capacity(domain.len());
    for class in &domain.classes {
        let mut image: Option<usize> = None;
        for y in class {
            for x in &minimals(g_source.r(), rho.rho.row(y)) {
                let c = codomain.projection[x];
                match image {
                    None => image = Some(c),
                    Some(prev) if prev != c => {
                        return Err(Error::IsoFailure(format!("ξ is not well defined at point {y}")));
                    }
                    Some(_) => {}
                }
            }
        }
        map.push(image.ok_or_else(|| Error::IsoFailure("ξ has an empty fibre".into()))?);
    }
    for i in 0..domain.len() {
        for j in domain.order.up_set(i) {
            if !codomain.order.leq(map[i], map[j]) {
                return Err(Error::IsoFailure(format!("ξ is not monotone at ({i},{j})")));
            }
        }
    }
    Ok(XiMap { domain, codomain, map })
}

/// Cap on candidate tables scanned by [`enumerate_strong_meet_hemimorphisms`].
pub const ENUMERATION_CAP: u64 = 1_000_000;

/// Every map `L → M` satisfying H0, in lexicographic order of tables.
pub fn enumerate_strong_meet_hemimorphisms(l: &Lattice, m: &Lattice) -> Result<Vec<HemiMorphism>> {
    let free = l.elements().filter(|&a| a != l.bottom() && a != l.top()).count() as u32;
    let candidates = (m.len() as u64).checked_pow(free).filter(|&c| c <= ENUMERATION_CAP);
    if candidates.is_none() {
        return Err(Error::Size(format!(
            "{}^{} candidate maps exceed the cap of {}",
            m.len(),
            free,
            ENUMERATION_CAP
        )));
    }
    let mut out = Vec::new();
    if l.bottom() == l.top() && m.bottom() != m.top() {
        return Ok(out);
    }
    let mut map = alloc::vec![usize::MAX; l.len()];
    extend(l, m, 0, &mut map, &mut out);
    Ok(out)
}

fn extend(l: &Lattice, m: &Lattice, a: usize, map: &mut Vec<usize>, out: &mut Vec<HemiMorphism>) {
    if a == l.len() {
        out.push(HemiMorphism { source: l.clone(), target: m.clone(), map: map.clone() });
        return;
    }
    let choices: Vec<usize> = if a == l.bottom() {
        alloc::vec![m.bottom()]
    } else if a == l.top() {
        alloc::vec![m.top()]
    } else {
        m.elements().collect()
    };
    for v in choices {
        map[a] = v;
        // Each meet triple is checked once all three indices are assigned.
        let consistent = (0..=a).all(|b| {
            let c = l.meet(a, b);
            c > a || map[c] == m.meet(map[a], map[b])
        }) && (0..a).all(|b| {
            (0..a).all(|c| {
                let d = l.meet(b, c);
                d != a || map[a] == m.meet(map[b], map[c])
            })
        });
        if consistent {
            extend(l, m, a + 1, map, out);
        }
    }
    map[a] = usize::MAX;
}

#[cfg(test)]
mod tests {
    use alloc::vec;
    use super::*;
    use crate::corpus;

    fn le(l: &Lattice) -> Subordination {
        Subordination::order(l)
    }

    /// B2 → C2 with a, b ↦ 0.
    fn join_breaker() -> (Lattice, Lattice, HemiMorphism) {
        let b2 = corpus::boolean(2);
        let c2 = corpus::chain(2);
        let h = HemiMorphism::new(&b2, &c2, vec![0, 0, 0, 1]).unwrap();
        (b2, c2, h)
    }

    fn embed_c2_c3() -> (Lattice, Lattice, HemiMorphism) {
        let c2 = corpus::chain(2);
        let c3 = corpus::chain(3);
        let h = HemiMorphism::new(&c2, &c3, vec![0, 2]).unwrap();
        (c2, c3, h)
    }

    #[test]
    fn identity_passes_everything() {
        for (_, l) in corpus::lattices() {
            let h = HemiMorphism::identity(&l);
            let s = le(&l);
            for which in HAxiom::ALL {
                assert!(check_h(&h, &s, &s, which).unwrap().passed());
            }
        }
    }

    #[test]
    fn join_breaker_fails_h1_only() {
        let (b2, c2, h) = join_breaker();
        let (s, t) = (le(&b2), le(&c2));
        assert!(check_h(&h, &s, &t, HAxiom::H0).unwrap().passed());
        assert_eq!(check_h(&h, &s, &t, HAxiom::H1).unwrap(), Verdict::Fail(Witness::of([1, 2, 1, 2])));
        assert!(check_h(&h, &s, &t, HAxiom::H2).unwrap().passed());
    }

    #[test]
    fn embedding_passes() {
        let (c2, c3, h) = embed_c2_c3();
        for which in HAxiom::ALL {
            assert!(check_h(&h, &le(&c2), &le(&c3), which).unwrap().passed());
        }
    }

    #[test]
    fn h0_witnesses() {
        let c2 = corpus::chain(2);
        let h = HemiMorphism::new(&c2, &c2, vec![0, 0]).unwrap();
        assert_eq!(check_h0(&h), Verdict::Fail(Witness::of([1])));
        let b2 = corpus::boolean(2);
        let h = HemiMorphism::new(&b2, &c2, vec![0, 1, 1, 1]).unwrap();
        assert_eq!(check_h0(&h), Verdict::Fail(Witness::of([1, 2])));
    }

    #[test]
    fn identity_relation_is_inclusion() {
        for (_, l) in corpus::lattices() {
            let rho = relation_from_hemimorphism(&HemiMorphism::identity(&l)).unwrap();
            assert_eq!(rho.rho(), &PriestleySpace::new(&l).order().relation());
            assert!(rho.conditions().all_pass());
            assert_eq!(hemimorphism_from_relation(&rho).unwrap(), HemiMorphism::identity(&l));
        }
    }

    #[test]
    fn embedding_relation() {
        let (_, _, h) = embed_c2_c3();
        let rho = relation_from_hemimorphism(&h).unwrap();
        assert_eq!(rho.rho(), &Relation::full(2, 1));
    }

    #[test]
    fn meet_preserving_b2_c2_relation() {
        // h(a) = 1, h(b) = 0: h⁻¹({1}) = {a, 1} = ↑a.
        let b2 = corpus::boolean(2);
        let c2 = corpus::chain(2);
        let h = HemiMorphism::new(&b2, &c2, vec![0, 1, 0, 1]).unwrap();
        let rho = relation_from_hemimorphism(&h).unwrap();
        assert_eq!(rho.rho().pairs().collect::<Vec<_>>(), [(0, 0)]);
        assert_eq!(hemimorphism_from_relation(&rho).unwrap(), h);
    }

    #[test]
    fn relation_needs_h0() {
        let c2 = corpus::chain(2);
        let h = HemiMorphism::new(&c2, &c2, vec![1, 1]).unwrap();
        assert!(matches!(relation_from_hemimorphism(&h), Err(Error::Morphism { condition: "H0", .. })));
    }

    #[test]
    fn missing_condition_four() {
        let c2 = corpus::chain(2);
        let c3 = corpus::chain(3);
        // Point 0 of Prim(C3) relates to nothing.
        let rho = HemiRelation::new(&c2, &c3, Relation::from_pairs(2, 1, [(1, 0)])).unwrap();
        assert_eq!(rho.conditions().total, Verdict::Fail(Witness::of([0])));
        assert!(matches!(hemimorphism_from_relation(&rho), Err(Error::NotClopenUpset { .. })));
    }

    #[test]
    fn ofc_examples() {
        let b2 = corpus::boolean(2);
        let rb = gleason::relation_from_subordination(&le(&b2)).unwrap();
        let rho = relation_from_hemimorphism(&HemiMorphism::identity(&b2)).unwrap();
        assert!(check_ofc(&rho, rb.r(), rb.r()).unwrap().passed());

        let (b2, c2, h) = join_breaker();
        let rho = relation_from_hemimorphism(&h).unwrap();
        let rb = gleason::relation_from_subordination(&le(&b2)).unwrap();
        let rc = gleason::relation_from_subordination(&le(&c2)).unwrap();
        assert_eq!(check_ofc(&rho, rb.r(), rc.r()).unwrap(), Verdict::Fail(Witness::of([0, 0, 0, 1])));
        assert!(check_dvc(&rho, rb.r()).passed());
    }

    #[test]
    fn dvc_can_fail_on_b2() {
        // Search synthetic ρ ⊆ Prim(B2) × Prim(B2) with a non-order R on the source side.
        let b2 = corpus::boolean(2);
        let r_full = Relation::full(2, 2);
        let failing = (0..16u64)
            .map(|code| Relation::from_rows(2, (0..2).map(|y| ElementSet::from_code(2, code >> (2 * y))).collect()))
            .find(|rho| !check_dvc(&HemiRelation::new(&b2, &b2, rho.clone()).unwrap(), &r_full).passed());
        assert!(failing.is_some());
    }

    #[test]
    fn star_examples() {
        for (_, l) in corpus::lattices_up_to(5) {
            let s = le(&l);
            let id = HemiMorphism::identity(&l);
            assert_eq!(star(&id, &id, &s, &s, &s).unwrap(), id);
        }
        let (c2, c3, h) = embed_c2_c3();
        let id3 = HemiMorphism::identity(&c3);
        let composite = star(&h, &id3, &le(&c2), &le(&c3), &le(&c3)).unwrap();
        assert_eq!(composite.map(), h.map());
    }

    #[test]
    fn star_rejects_non_morphisms() {
        let (b2, c2, h) = join_breaker();
        let id = HemiMorphism::identity(&c2);
        assert!(matches!(
            star(&h, &id, &le(&b2), &le(&c2), &le(&c2)),
            Err(Error::Morphism { condition: "H1", .. })
        ));
    }

    #[test]
    fn ends_map_examples() {
        let (c2, c3, h) = embed_c2_c3();
        assert_eq!(ends_map(&h, &le(&c2), &le(&c3)).unwrap(), [0, 0]);
        for (_, l) in corpus::lattices() {
            let s = le(&l);
            let n = subordination::ends(&s).unwrap().len();
            assert_eq!(ends_map(&HemiMorphism::identity(&l), &s, &s).unwrap(), (0..n).collect::<Vec<_>>());
        }
        assert!(check_end_agreement(&h, &le(&c2), &le(&c3)).unwrap().passed());
    }

    #[test]
    fn xi_examples() {
        let (c2, c3, h) = embed_c2_c3();
        let rho = relation_from_hemimorphism(&h).unwrap();
        let g2 = gleason::relation_from_subordination(&le(&c2)).unwrap();
        let g3 = gleason::relation_from_subordination(&le(&c3)).unwrap();
        let xi = xi_map(&rho, &g2, &g3).unwrap();
        assert_eq!(xi.map, [0, 0]);
        for (_, l) in corpus::lattices() {
            let g = gleason::relation_from_subordination(&le(&l)).unwrap();
            let rho = relation_from_hemimorphism(&HemiMorphism::identity(&l)).unwrap();
            let xi = xi_map(&rho, &g, &g).unwrap();
            assert_eq!(xi.map, (0..g.len()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn xi_rejects_ofc_failure() {
        let (b2, c2, h) = join_breaker();
        let rho = relation_from_hemimorphism(&h).unwrap();
        let gb = gleason::relation_from_subordination(&le(&b2)).unwrap();
        let gc = gleason::relation_from_subordination(&le(&c2)).unwrap();
        assert!(matches!(xi_map(&rho, &gb, &gc), Err(Error::Condition { condition: "ofc", .. })));
    }

    #[test]
    fn enumeration_counts() {
        let c2 = corpus::chain(2);
        let c3 = corpus::chain(3);
        let b2 = corpus::boolean(2);
        assert_eq!(enumerate_strong_meet_hemimorphisms(&c2, &c2).unwrap().len(), 1);
        let maps = enumerate_strong_meet_hemimorphisms(&b2, &c2).unwrap();
        let tables: Vec<_> = maps.iter().map(|h| h.map().to_vec()).collect();
        assert_eq!(tables, [vec![0, 0, 0, 1], vec![0, 0, 1, 1], vec![0, 1, 0, 1]]);
        assert_eq!(enumerate_strong_meet_hemimorphisms(&c2, &c3).unwrap().len(), 1);
        let big = corpus::boolean(5);
        assert!(matches!(enumerate_strong_meet_hemimorphisms(&big, &big), Err(Error::Size(_))));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (_, l) in corpus::lattices_up_to(5) {
            for (_, m) in corpus::lattices_up_to(4) {
                let fast: Vec<Vec<usize>> = enumerate_strong_meet_hemimorphisms(&l, &m)
                    .unwrap()
                    .iter()
                    .map(|h| h.map().to_vec())
                    .collect();
                let mut brute = Vec::new();
                let total = m.len().pow(l.len() as u32);
                for mut code in 0..total {
                    let mut map = vec![0; l.len()];
                    for slot in map.iter_mut() {
                        *slot = code % m.len();
                        code /= m.len();
                    }
                    let h = HemiMorphism::new(&l, &m, map.clone()).unwrap();
                    if check_h0(&h).passed() {
                        brute.push(map);
                    }
                }
                brute.sort();
                assert_eq!(fast, brute);
            }
        }
    }
}
