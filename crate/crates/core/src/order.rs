//! Finite posets and bounded distributive lattices.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bitset::ElementSet;
use crate::relation::Relation;

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum OrderError {
    #[error("index {index} out of range for carrier of size {size}")]
    Index { index: usize, size: usize },
    #[error("order closure is not antisymmetric: {a} <= {b} <= {a}")]
    Cycle { a: usize, b: usize },
    #[error("{given} labels supplied for {size} elements")]
    Labels { given: usize, size: usize },
    #[error("poset has no bottom or no top")]
    NoBounds,
    #[error("elements {a} and {b} have no {which}")]
    NotALattice { a: usize, b: usize, which: &'static str },
    #[error("distributivity fails at ({a},{b},{c}): a∧(b∨c) ≠ (a∧b)∨(a∧c)")]
    NotDistributive { a: usize, b: usize, c: usize },
}

/// A finite partial order on `0..len`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    names: Vec<String>,
    // up[i] = { j | i <= j }
    up: Vec<ElementSet>,
    down: Vec<ElementSet>,
}

/// Reflexive-transitive closure of `pairs` on `0..size`, with index labels.
pub fn close_order(pairs: &[(usize, usize)], size: usize) -> Result<Poset, OrderError> {
    Poset::from_relation((0..size).map(|i| format!("{i}")).collect(), pairs)
}

impl Poset {
    /// Any relation whose reflexive-transitive closure is antisymmetric is accepted.
    pub fn from_relation(names: Vec<String>, pairs: &[(usize, usize)]) -> Result<Self, OrderError> {
        let size = names.len();
        let mut up: Vec<ElementSet> = (0..size).map(|i| ElementSet::singleton(size, i)).collect();
        for &(a, b) in pairs {
            for index in [a, b] {
                if index >= size {
                    return Err(OrderError::Index { index, size });
                }
            }
            up[a].insert(b);
        }
        // Warshall on bit rows.
        for k in 0..size {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        for a in 0..size {
            for b in a + 1..size {
                if up[a].contains(b) && up[b].contains(a) {
                    return Err(OrderError::Cycle { a, b });
                }
            }
        }
        Ok(Self::from_up_rows(names, up))
    }

    /// Poset whose order is `leq(i, j)`; the predicate must already be a partial order.
    pub(crate) fn from_predicate(names: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Self {
        let n = names.len();
        let up = (0..n)
            .map(|i| ElementSet::from_indices(n, (0..n).filter(|&j| leq(i, j))))
            .collect();
        Self::from_up_rows(names, up)
    }

    fn from_up_rows(names: Vec<String>, up: Vec<ElementSet>) -> Self {
        let n = names.len();
        let down = (0..n)
            .map(|j| ElementSet::from_indices(n, (0..n).filter(|&i| up[i].contains(j))))
            .collect();
        Poset { names, up, down }
    }

    pub fn antichain(size: usize) -> Self {
        close_order(&[], size).expect("empty relation is an order")
    }

    pub fn chain(size: usize) -> Self {
        let covers: Vec<_> = (1..size).map(|i| (i - 1, i)).collect();
        close_order(&covers, size).expect("chain is an order")
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, OrderError> {
        if names.len() != self.len() {
            return Err(OrderError::Labels { given: names.len(), size: self.len() });
        }
        self.names = names;
        Ok(self)
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.up[a].contains(b)
    }

    /// `↑a`.
    pub fn up_set(&self, a: usize) -> &ElementSet {
        &self.up[a]
    }

    /// `↓a`.
    pub fn down_set(&self, a: usize) -> &ElementSet {
        &self.down[a]
    }

    pub fn upset_closure(&self, s: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.len());
        for i in s {
            out.union_with(&self.up[i]);
        }
        out
    }

    pub fn downset_closure(&self, s: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.len());
        for i in s {
            out.union_with(&self.down[i]);
        }
        out
    }

    pub fn is_upset(&self, s: &ElementSet) -> bool {
        s.iter().all(|i| self.up[i].is_subset(s))
    }

    pub fn is_downset(&self, s: &ElementSet) -> bool {
        s.iter().all(|i| self.down[i].is_subset(s))
    }

    /// The order as a relation on the carrier.
    pub fn relation(&self) -> Relation {
        Relation::from_rows(self.len(), self.up.clone())
    }

    /// Minimal members of `s`.
    pub fn minimal_in(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.len(),
            s.iter().filter(|&i| self.down[i].intersection(s).count() == 1),
        )
    }

    /// Covering pairs `a < b` with nothing strictly between, lexicographic.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in self.up[a].iter().filter(|&b| b != a) {
                let between = self.up[a].intersection(&self.down[b]).count();
                if between == 2 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// The order-dual poset on the same carrier.
    pub fn dual(&self) -> Poset {
        Poset {
            names: self.names.clone(),
            up: self.down.clone(),
            down: self.up.clone(),
        }
    }

    /// All upsets, sorted as bitmaps.
    pub fn upsets(&self) -> Vec<ElementSet> {
        // Decide elements from the top down; `i` may join only once `↑i` is in.
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| core::cmp::Reverse(self.down[i].count()));
        let mut out = Vec::new();
        let mut stack = alloc::vec![(ElementSet::empty(self.len()), 0usize)];
        while let Some((set, depth)) = stack.pop() {
            if depth == order.len() {
                out.push(set);
                continue;
            }
            let i = order[depth];
            let mut above = self.up[i].clone();
            above.remove(i);
            if above.is_subset(&set) {
                let mut with = set.clone();
                with.insert(i);
                stack.push((with, depth + 1));
            }
            stack.push((set, depth + 1));
        }
        out.sort();
        out
    }
}

/// A finite bounded distributive lattice with precomputed operation tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lattice {
    poset: Poset,
    bottom: usize,
    top: usize,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
}

fn least_in(p: &Poset, set: &ElementSet) -> Option<usize> {
    set.iter().find(|&c| set.is_subset(p.up_set(c)))
}

fn greatest_in(p: &Poset, set: &ElementSet) -> Option<usize> {
    set.iter().find(|&c| set.is_subset(p.down_set(c)))
}

/// Validates bounds, the lattice property, and distributivity.
pub fn lattice_from_poset(poset: Poset) -> Result<Lattice, OrderError> {
    let n = poset.len();
    let everything = ElementSet::full(n);
    let bottom = least_in(&poset, &everything);
    let top = greatest_in(&poset, &everything);
    let (Some(bottom), Some(top)) = (bottom, top) else {
        return Err(OrderError::NoBounds);
    };
    let mut meet = alloc::vec![alloc::vec![0; n]; n];
    let mut join = alloc::vec![alloc::vec![0; n]; n];
    for a in 0..n {
        for b in 0..n {
            let lower = poset.down_set(a).intersection(poset.down_set(b));
            meet[a][b] = greatest_in(&poset, &lower).ok_or(OrderError::NotALattice { a, b, which: "meet" })?;
            let upper = poset.up_set(a).intersection(poset.up_set(b));
            join[a][b] = least_in(&poset, &upper).ok_or(OrderError::NotALattice { a, b, which: "join" })?;
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = meet[a][join[b][c]];
                let rhs = join[meet[a][b]][meet[a][c]];
                if lhs != rhs {
                    return Err(OrderError::NotDistributive { a, b, c });
                }
            }
        }
    }
    Ok(Lattice { poset, bottom, top, meet, join })
}

impl Lattice {
    pub(crate) fn from_tables(
        poset: Poset,
        bottom: usize,
        top: usize,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
    ) -> Self {
        Lattice { poset, bottom, top, meet, join }
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    #[inline]
    pub fn bottom(&self) -> usize {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> usize {
        self.top
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.poset.leq(a, b)
    }

    #[inline]
    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a][b]
    }

    #[inline]
    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a][b]
    }

    pub fn name(&self, a: usize) -> &str {
        self.poset.name(a)
    }

    /// `⋁ s`; the empty join is bottom.
    pub fn join_all(&self, s: &ElementSet) -> usize {
        s.iter().fold(self.bottom, |acc, x| self.join(acc, x))
    }

    /// `⋀ s`; the empty meet is top.
    pub fn meet_all(&self, s: &ElementSet) -> usize {
        s.iter().fold(self.top, |acc, x| self.meet(acc, x))
    }

    pub fn elements(&self) -> core::ops::Range<usize> {
        0..self.len()
    }

    pub fn is_filter(&self, s: &ElementSet) -> bool {
        !s.is_empty()
            && self.poset.is_upset(s)
            && s.iter().all(|a| s.iter().all(|b| s.contains(self.meet(a, b))))
    }

    /// Filter that contains top and omits bottom.
    pub fn is_proper_filter(&self, s: &ElementSet) -> bool {
        self.is_filter(s) && !s.contains(self.bottom)
    }

    pub fn is_prime_filter(&self, s: &ElementSet) -> bool {
        self.is_proper_filter(s)
            && self
                .elements()
                .all(|a| self.elements().all(|b| !s.contains(self.join(a, b)) || s.contains(a) || s.contains(b)))
    }

    /// Every nonempty filter of a finite lattice is principal; proper ones are `↑a`, `a ≠ 0`.
    pub fn proper_filters(&self) -> Vec<ElementSet> {
        let mut out: Vec<_> = self
            .elements()
            .filter(|&a| a != self.bottom)
            .map(|a| self.poset.up_set(a).clone())
            .collect();
        out.sort();
        out
    }
}

/// Elements `j ≠ 0` such that `j = a ∨ b` forces `j ∈ {a, b}`.
pub fn join_irreducibles(l: &Lattice) -> ElementSet {
    ElementSet::from_indices(
        l.len(),
        l.elements().filter(|&j| {
            j != l.bottom()
                && l.elements()
                    .all(|a| l.elements().all(|b| l.join(a, b) != j || a == j || b == j))
        }),
    )
}

/// Least filter containing `s`; `{1}` for empty `s`. May be the improper filter.
pub fn filter_generated(l: &Lattice, s: &ElementSet) -> ElementSet {
    let mut cur = s.clone();
    cur.insert(l.top());
    loop {
        let mut next = l.poset().upset_closure(&cur);
        for a in cur.iter() {
            for b in cur.iter() {
                next.insert(l.meet(a, b));
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Least ideal containing `s`; `{0}` for empty `s`.
pub fn ideal_generated(l: &Lattice, s: &ElementSet) -> ElementSet {
    let mut cur = s.clone();
    cur.insert(l.bottom());
    loop {
        let mut next = l.poset().downset_closure(&cur);
        for a in cur.iter() {
            for b in cur.iter() {
                next.insert(l.join(a, b));
            }
        }
        if next == cur {
            return cur;
        }
        cur = next;
    }
}
