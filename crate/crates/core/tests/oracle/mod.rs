//! Brute-force reference computations shared by the integration tests.
//!
//! Everything here works from the order matrix alone, with plain vectors
//! and subset enumeration, so it shares no code with the library beyond
//! reading `leq`.
#![allow(dead_code)]

use proxkit_core::{Lattice, Relation};

pub struct Naive {
    pub n: usize,
    pub le: Vec<Vec<bool>>,
}

pub type Set = Vec<usize>;

impl Naive {
    pub fn of(l: &Lattice) -> Self {
        let n = l.len();
        Naive { n, le: (0..n).map(|a| (0..n).map(|b| l.leq(a, b)).collect()).collect() }
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        let lower: Vec<usize> = (0..self.n).filter(|&c| self.le[c][a] && self.le[c][b]).collect();
        *lower.iter().find(|&&c| lower.iter().all(|&d| self.le[d][c])).unwrap()
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        let upper: Vec<usize> = (0..self.n).filter(|&c| self.le[a][c] && self.le[b][c]).collect();
        *upper.iter().find(|&&c| upper.iter().all(|&d| self.le[c][d])).unwrap()
    }

    pub fn bottom(&self) -> usize {
        (0..self.n).find(|&a| (0..self.n).all(|b| self.le[a][b])).unwrap()
    }

    pub fn top(&self) -> usize {
        (0..self.n).find(|&a| (0..self.n).all(|b| self.le[b][a])).unwrap()
    }

    pub fn subsets(&self) -> impl Iterator<Item = Set> + '_ {
        (0u32..1 << self.n).map(move |m| (0..self.n).filter(|&i| m >> i & 1 == 1).collect())
    }

    pub fn is_filter(&self, f: &[usize]) -> bool {
        !f.is_empty()
            && f.iter().all(|&a| (0..self.n).all(|b| !self.le[a][b] || f.contains(&b)))
            && f.iter().all(|&a| f.iter().all(|&b| f.contains(&self.meet(a, b))))
    }

    pub fn is_proper_filter(&self, f: &[usize]) -> bool {
        self.is_filter(f) && !f.contains(&self.bottom())
    }

    /// Proper prime filters, each sorted, in subset-mask order.
    pub fn prime_filters(&self) -> Vec<Set> {
        self.subsets()
            .filter(|f| {
                self.is_proper_filter(f)
                    && (0..self.n).all(|a| {
                        (0..self.n).all(|b| !f.contains(&self.join(a, b)) || f.contains(&a) || f.contains(&b))
                    })
            })
            .collect()
    }
}

/// A relation as a dense matrix.
pub fn matrix(rel: &Relation) -> Vec<Vec<bool>> {
    (0..rel.rows()).map(|i| (0..rel.cols()).map(|j| rel.get(i, j)).collect()).collect()
}

/// S1–S4 read straight off their definitions.
pub fn is_subordination(l: &Naive, r: &[Vec<bool>]) -> bool {
    let n = l.n;
    let (z, o) = (l.bottom(), l.top());
    if !r[z][z] || !r[o][o] {
        return false;
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if r[a][b] && r[a][c] && !r[a][l.meet(b, c)] {
                    return false;
                }
                if r[a][c] && r[b][c] && !r[l.join(a, b)][c] {
                    return false;
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    if l.le[a][b] && r[b][c] && l.le[c][d] && !r[a][d] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn s5(l: &Naive, r: &[Vec<bool>]) -> bool {
    (0..l.n).all(|a| (0..l.n).filter(|&b| r[b][a]).fold(l.bottom(), |acc, b| l.join(acc, b)) == a)
}

pub fn s6(l: &Naive, r: &[Vec<bool>]) -> bool {
    (0..l.n).all(|a| (0..l.n).all(|b| !r[a][b] || l.le[a][b]))
}

pub fn s8(l: &Naive, r: &[Vec<bool>]) -> bool {
    (0..l.n).all(|a| (0..l.n).all(|c| !r[a][c] || (0..l.n).any(|b| r[a][b] && r[b][c])))
}

/// `⇑S`.
pub fn up(l: &Naive, r: &[Vec<bool>], s: &[usize]) -> Set {
    (0..l.n).filter(|&b| s.iter().any(|&a| r[a][b])).collect()
}

/// `⇓S`.
pub fn down(l: &Naive, r: &[Vec<bool>], s: &[usize]) -> Set {
    (0..l.n).filter(|&a| s.iter().any(|&b| r[a][b])).collect()
}

pub fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

pub fn complement(n: usize, s: &[usize]) -> Set {
    (0..n).filter(|x| !s.contains(x)).collect()
}

/// `x R y ⟺ ⇑x ⊆ y` over the given points.
pub fn dual_r(l: &Naive, r: &[Vec<bool>], points: &[Set]) -> Vec<Vec<bool>> {
    points
        .iter()
        .map(|x| {
            let ux = up(l, r, x);
            points.iter().map(|y| subset(&ux, y)).collect()
        })
        .collect()
}

/// Points containing `a`.
pub fn eta(points: &[Set], a: usize) -> Set {
    (0..points.len()).filter(|&x| points[x].contains(&a)).collect()
}

/// `R[E,−]`.
pub fn image(r: &[Vec<bool>], e: &[usize]) -> Set {
    (0..r.first().map_or(0, Vec::len)).filter(|&y| e.iter().any(|&x| r[x][y])).collect()
}

/// `R[−,E]`.
pub fn preimage(r: &[Vec<bool>], e: &[usize]) -> Set {
    (0..r.len()).filter(|&x| e.iter().any(|&y| r[x][y])).collect()
}

/// Proper filters `F` with `⇑F = F`.
pub fn round_filters(l: &Naive, r: &[Vec<bool>]) -> Vec<Set> {
    l.subsets().filter(|f| l.is_proper_filter(f) && up(l, r, f) == *f).collect()
}

/// Round filters `p` with `F₁ ∩ F₂ ⊆ p ⟹ F₁ ⊆ p or F₂ ⊆ p` over round `F₁, F₂`.
pub fn ends(l: &Naive, r: &[Vec<bool>]) -> Vec<Set> {
    let round = round_filters(l, r);
    round
        .iter()
        .filter(|p| {
            round.iter().all(|f1| {
                round.iter().all(|f2| {
                    let meet: Set = f1.iter().copied().filter(|x| f2.contains(x)).collect();
                    !subset(&meet, p) || subset(f1, p) || subset(f2, p)
                })
            })
        })
        .cloned()
        .collect()
}

/// Every relation on `n` elements as a matrix, by code.
pub fn relation_of_code(n: usize, code: u64) -> Vec<Vec<bool>> {
    (0..n).map(|i| (0..n).map(|j| code >> (i * n + j) & 1 == 1).collect()).collect()
}
