//! The fixture corpus: chains, Boolean lattices, the two forbidden
//! non-distributive lattices, and downset lattices of small posets.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::order::{close_order, lattice_from_poset, Lattice, Poset};
use crate::priestley::upset_lattice;

fn labels(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| String::from(*s)).collect()
}

/// `C_n`, the `n`-element chain `0 < … < 1`. `C3` is `0 < m < 1`.
pub fn chain(n: usize) -> Lattice {
    assert!(n >= 1, "a lattice needs at least one element");
    let names = match n {
        1 => labels(&["0"]),
        3 => labels(&["0", "m", "1"]),
        _ => {
            let mut v = alloc::vec![String::from("0")];
            v.extend((1..n - 1).map(|i| format!("c{i}")));
            v.push(String::from("1"));
            v
        }
    };
    lattice_from_poset(Poset::chain(n).with_names(names).expect("label count"))
        .expect("chains are distributive")
}

/// `B_k`, subsets of `k` atoms `a, b, c, …` indexed by bit code.
pub fn boolean(k: usize) -> Lattice {
    assert!(k <= 5, "Boolean corpus stops at 5 atoms");
    let n = 1usize << k;
    let names = (0..n)
        .map(|code| match code {
            0 => String::from("0"),
            c if c == n - 1 => String::from("1"),
            c => (0..k)
                .filter(|i| c >> i & 1 == 1)
                .map(|i| (b'a' + i as u8) as char)
                .collect(),
        })
        .collect();
    let mut pairs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a & b == a {
                pairs.push((a, b));
            }
        }
    }
    lattice_from_poset(Poset::from_relation(names, &pairs).expect("inclusion is an order"))
        .expect("Boolean lattices are distributive")
}

/// The diamond `0 < x, y, z < 1`.
pub fn m3() -> Poset {
    Poset::from_relation(
        labels(&["0", "x", "y", "z", "1"]),
        &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)],
    )
    .expect("M3 is an order")
}

/// The pentagon `0 < a < c < 1`, `0 < b < 1`.
pub fn n5() -> Poset {
    Poset::from_relation(
        labels(&["0", "a", "b", "c", "1"]),
        &[(0, 1), (1, 3), (3, 4), (0, 2), (2, 4)],
    )
    .expect("N5 is an order")
}

/// Posets on at most three points, one per isomorphism type.
pub fn small_posets() -> Vec<(&'static str, Poset)> {
    let p = |pairs: &[(usize, usize)], n| close_order(pairs, n).expect("corpus order");
    alloc::vec![
        ("P0", p(&[], 0)),
        ("P1", p(&[], 1)),
        ("P2-chain", p(&[(0, 1)], 2)),
        ("P2-anti", p(&[], 2)),
        ("P3-chain", p(&[(0, 1), (1, 2)], 3)),
        ("P3-anti", p(&[], 3)),
        ("P3-edge", p(&[(0, 1)], 3)),
        ("P3-vee", p(&[(0, 1), (0, 2)], 3)),
        ("P3-wedge", p(&[(0, 2), (1, 2)], 3)),
    ]
}

/// The lattice of downsets of `p`, ordered by inclusion.
pub fn downset_lattice(p: &Poset) -> Lattice {
    upset_lattice(&p.dual())
}

/// Every valid lattice of the fixture corpus, in a fixed order.
pub fn lattices() -> Vec<(String, Lattice)> {
    let mut out: Vec<(String, Lattice)> = (1..=5).map(|n| (format!("C{n}"), chain(n))).collect();
    out.push((String::from("B2"), boolean(2)));
    out.push((String::from("B3"), boolean(3)));
    for (name, p) in small_posets() {
        out.push((format!("D-{name}"), downset_lattice(&p)));
    }
    out
}

/// Corpus lattices with at most `max` elements.
pub fn lattices_up_to(max: usize) -> Vec<(String, Lattice)> {
    lattices().into_iter().filter(|(_, l)| l.len() <= max).collect()
}
