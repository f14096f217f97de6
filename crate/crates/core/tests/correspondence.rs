//! Exhaustive scans of every relation on the small corpus lattices.

mod oracle;

use oracle::*;
use proxkit_core::corpus;
use proxkit_core::exhaust::{check_range, matching_range, Theorem};
use proxkit_core::gleason::{relation_from_subordination, subordination_from_relation};
use proxkit_core::priestley::{birkhoff_check, PriestleySpace};
use proxkit_core::subordination::{self, Axiom, Subordination};
use proxkit_core::{ElementSet, Relation};

fn subordinations(l: &proxkit_core::Lattice) -> Vec<(u64, Vec<Vec<bool>>)> {
    let naive = Naive::of(l);
    let n = l.len();
    (0..1u64 << (n * n))
        .map(|code| (code, relation_of_code(n, code)))
        .filter(|(_, r)| is_subordination(&naive, r))
        .collect()
}

#[test]
fn prime_filters_match_brute_force() {
    for (name, l) in corpus::lattices() {
        let got: Vec<Vec<usize>> = PriestleySpace::new(&l).points().iter().map(ElementSet::to_vec).collect();
        assert_eq!(got, Naive::of(&l).prime_filters(), "{name}");
    }
}

#[test]
fn subordination_counts_match() {
    for (name, l) in corpus::lattices_up_to(4) {
        let ours: Vec<u64> = matching_range(&l, &Axiom::SUBORDINATION, 0..u64::MAX)
            .unwrap()
            .into_iter()
            .map(|(c, _)| c)
            .collect();
        let theirs: Vec<u64> = subordinations(&l).into_iter().map(|(c, _)| c).collect();
        assert_eq!(ours, theirs, "{name}");
    }
}

#[test]
fn dual_relation_matches_definition() {
    for (name, l) in corpus::lattices_up_to(4) {
        let naive = Naive::of(&l);
        let points = naive.prime_filters();
        for (code, r) in subordinations(&l) {
            let s = Subordination::new(&l, Relation::from_code(l.len(), code)).unwrap();
            let g = relation_from_subordination(&s).unwrap();
            assert_eq!(matrix(g.r()), dual_r(&naive, &r, &points), "{name} code {code}");
        }
    }
}

#[test]
fn correspondence_lemma() {
    for (name, l) in corpus::lattices_up_to(4) {
        let naive = Naive::of(&l);
        let points = naive.prime_filters();
        for (code, r) in subordinations(&l) {
            let big_r = dual_r(&naive, &r, &points);
            for a in 0..l.len() {
                for b in 0..l.len() {
                    let lemma = subset(&image(&big_r, &eta(&points, a)), &eta(&points, b));
                    assert_eq!(r[a][b], lemma, "{name} code {code} at ({a},{b})");
                }
            }
        }
        let tally = check_range(&l, Theorem::LemmaCorrespondence, 0..u64::MAX).unwrap();
        assert!(tally.holds(), "{name}");
        assert_eq!(tally.qualifying as usize, subordinations(&l).len());
    }
}

#[test]
fn relation_roundtrip_along_eta() {
    for (name, l) in corpus::lattices_up_to(4) {
        let b = birkhoff_check(&l).unwrap();
        for (code, _) in subordinations(&l) {
            let s = Subordination::new(&l, Relation::from_code(l.len(), code)).unwrap();
            let back = subordination_from_relation(&relation_from_subordination(&s).unwrap());
            for x in l.elements() {
                for y in l.elements() {
                    assert_eq!(s.relates(x, y), back.relates(b.forward[x], b.forward[y]), "{name} code {code}");
                }
            }
        }
    }
}

#[test]
fn reflexive_iff_s6_transitive_iff_s8() {
    for (name, l) in corpus::lattices_up_to(4) {
        let naive = Naive::of(&l);
        let points = naive.prime_filters();
        let k = points.len();
        for (code, r) in subordinations(&l) {
            let big_r = dual_r(&naive, &r, &points);
            let reflexive = (0..k).all(|x| big_r[x][x]);
            let transitive =
                (0..k).all(|x| (0..k).all(|y| (0..k).all(|z| !(big_r[x][y] && big_r[y][z]) || big_r[x][z])));
            assert_eq!(reflexive, s6(&naive, &r), "{name} code {code}");
            assert_eq!(transitive, s8(&naive, &r), "{name} code {code}");
        }
        for th in [Theorem::IffS6, Theorem::IffS8] {
            assert!(check_range(&l, th, 0..u64::MAX).unwrap().holds(), "{name} {th}");
        }
    }
}

#[test]
fn alternative_forms_of_r() {
    // ⇑x ⊆ y ⟺ ⇓(yᶜ) ⊆ xᶜ for any subordination; the ⇑x ⊆ ⇑y and
    // ⇓(yᶜ) ⊆ ⇓(xᶜ) forms also agree once S6 and S8 hold.
    let mut interpolating = 0;
    for (name, l) in corpus::lattices_up_to(4) {
        let naive = Naive::of(&l);
        let points = naive.prime_filters();
        let n = l.len();
        for (code, r) in subordinations(&l) {
            let both = s6(&naive, &r) && s8(&naive, &r);
            interpolating += both as usize;
            for x in &points {
                for y in &points {
                    let (xc, yc) = (complement(n, x), complement(n, y));
                    let first = subset(&up(&naive, &r, x), y);
                    assert_eq!(first, subset(&down(&naive, &r, &yc), &xc), "{name} code {code}");
                    if both {
                        assert_eq!(first, subset(&up(&naive, &r, x), &up(&naive, &r, y)), "{name} code {code}");
                        assert_eq!(first, subset(&down(&naive, &r, &yc), &down(&naive, &r, &xc)), "{name} code {code}");
                    }
                }
            }
        }
    }
    assert!(interpolating > 20);
}

#[test]
fn up_arrow_form_needs_interpolation() {
    // On C2 the full relation is a subordination with ⇑x = L ⊄ x.
    let l = corpus::chain(2);
    let naive = Naive::of(&l);
    let r = relation_of_code(2, 15);
    assert!(is_subordination(&naive, &r) && !s6(&naive, &r));
    let x = &naive.prime_filters()[0];
    assert!(!subset(&up(&naive, &r, x), x));
    assert!(subset(&up(&naive, &r, x), &up(&naive, &r, x)));
}

#[test]
fn preimage_image_adjunction() {
    // R[−,E] ⊆ F ⟺ R[Fᶜ,−] ⊆ Eᶜ
    for (name, l) in corpus::lattices_up_to(4) {
        let naive = Naive::of(&l);
        let points = naive.prime_filters();
        let k = points.len();
        let all: Vec<Set> = (0u32..1 << k).map(|m| (0..k).filter(|&i| m >> i & 1 == 1).collect()).collect();
        for (_, r) in subordinations(&l) {
            let big_r = dual_r(&naive, &r, &points);
            for e in &all {
                for f in &all {
                    assert_eq!(
                        subset(&preimage(&big_r, e), f),
                        subset(&image(&big_r, &complement(k, f)), &complement(k, e)),
                        "{name}"
                    );
                }
            }
        }
    }
}

#[test]
fn collapse_to_order() {
    for (name, l) in corpus::lattices_up_to(4) {
        let naive = Naive::of(&l);
        let survivors: Vec<_> = subordinations(&l).into_iter().filter(|(_, r)| s5(&naive, r)).collect();
        assert_eq!(survivors.len(), 1, "{name}");
        assert_eq!(survivors[0].1, naive.le, "{name}");
        let tally = check_range(&l, Theorem::Collapse, 0..u64::MAX).unwrap();
        assert_eq!((tally.scanned, tally.qualifying), (1 << (l.len() * l.len()), 1), "{name}");
        assert!(tally.holds());
    }
}

#[test]
fn round_filters_and_ends_match_brute_force() {
    for (name, l) in corpus::lattices_up_to(4) {
        let naive = Naive::of(&l);
        for (code, r) in subordinations(&l) {
            let s = Subordination::new(&l, Relation::from_code(l.len(), code)).unwrap();
            let rf: Vec<Set> = subordination::round_filters(&s).unwrap().iter().map(ElementSet::to_vec).collect();
            assert_eq!(rf, round_filters(&naive, &r), "{name} code {code}");
            let e: Vec<Set> = subordination::ends(&s).unwrap().iter().map(ElementSet::to_vec).collect();
            assert_eq!(e, ends(&naive, &r), "{name} code {code}");
        }
    }
}

#[test]
fn dual_satisfies_compatibility() {
    // x ≤ y R z ≤ t ⟹ x R t for the dual of any subordination
    for (name, l) in corpus::lattices_up_to(4) {
        for (code, _) in subordinations(&l) {
            let s = Subordination::new(&l, Relation::from_code(l.len(), code)).unwrap();
            let g = relation_from_subordination(&s).unwrap();
            assert!(g.axioms().compatible.passed(), "{name} code {code}");
        }
    }
}
