//! Boolean matrices between finite carriers, plus the verdict type shared by
//! every axiom checker.

use alloc::vec::Vec;
use core::fmt;

use crate::bitset::ElementSet;

/// A relation `rows × cols`; row `i` is the set `{ j | i ~ j }`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    cols: usize,
    rows: Vec<ElementSet>,
}

impl Relation {
    pub fn empty(rows: usize, cols: usize) -> Self {
        Relation {
            cols,
            rows: (0..rows).map(|_| ElementSet::empty(cols)).collect(),
        }
    }

    pub fn full(rows: usize, cols: usize) -> Self {
        Relation {
            cols,
            rows: (0..rows).map(|_| ElementSet::full(cols)).collect(),
        }
    }

    pub fn from_rows(cols: usize, rows: Vec<ElementSet>) -> Self {
        debug_assert!(rows.iter().all(|r| r.capacity() == cols));
        Relation { cols, rows }
    }

    pub fn from_pairs<I: IntoIterator<Item = (usize, usize)>>(rows: usize, cols: usize, pairs: I) -> Self {
        let mut r = Self::empty(rows, cols);
        for (i, j) in pairs {
            r.insert(i, j);
        }
        r
    }

    /// Square relation whose pair `(i, j)` is bit `i * n + j` of `code`.
    pub fn from_code(n: usize, code: u64) -> Self {
        assert!(n * n <= 64, "relation codes cover carriers of at most 8 elements");
        let mut r = Self::empty(n, n);
        for i in 0..n {
            for j in 0..n {
                if code >> (i * n + j) & 1 == 1 {
                    r.insert(i, j);
                }
            }
        }
        r
    }

    /// Inverse of [`Relation::from_code`].
    pub fn code(&self) -> u64 {
        let n = self.cols;
        assert!(self.rows.len() == n && n * n <= 64);
        let mut code = 0u64;
        for (i, j) in self.pairs() {
            code |= 1 << (i * n + j);
        }
        code
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    pub fn insert(&mut self, i: usize, j: usize) -> bool {
        self.rows[i].insert(j)
    }

    #[inline]
    pub fn row(&self, i: usize) -> &ElementSet {
        &self.rows[i]
    }

    /// `{ i | i ~ j }`.
    pub fn column(&self, j: usize) -> ElementSet {
        ElementSet::from_indices(self.rows(), (0..self.rows()).filter(|&i| self.get(i, j)))
    }

    /// Pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(i, r)| r.iter().map(move |j| (i, j)))
    }

    pub fn len(&self) -> usize {
        self.rows.iter().map(ElementSet::count).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.iter().all(ElementSet::is_empty)
    }

    pub fn converse(&self) -> Relation {
        let mut t = Relation::empty(self.cols, self.rows());
        for (i, j) in self.pairs() {
            t.insert(j, i);
        }
        t
    }

    /// `{ j | ∃ i ∈ set : i ~ j }`.
    pub fn image(&self, set: &ElementSet) -> ElementSet {
        let mut out = ElementSet::empty(self.cols);
        for i in set {
            out.union_with(&self.rows[i]);
        }
        out
    }

    /// `{ i | ∃ j ∈ set : i ~ j }`.
    pub fn preimage(&self, set: &ElementSet) -> ElementSet {
        ElementSet::from_indices(
            self.rows(),
            (0..self.rows()).filter(|&i| self.rows[i].intersects(set)),
        )
    }

    pub fn is_subrelation(&self, other: &Relation) -> bool {
        self.rows.iter().zip(&other.rows).all(|(a, b)| a.is_subset(b))
    }

    /// Relational composition: `i (self;other) k` iff `i self j other k` for some `j`.
    pub fn then(&self, other: &Relation) -> Relation {
        Relation {
            cols: other.cols,
            rows: self.rows.iter().map(|r| other.image(r)).collect(),
        }
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

/// A counterexample tuple of carrier indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Witness(pub Vec<usize>);

impl Witness {
    pub fn of<const N: usize>(items: [usize; N]) -> Self {
        Witness(items.to_vec())
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, v) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(w) => Some(w),
        }
    }

    pub(crate) fn from_first(w: Option<Witness>) -> Self {
        w.map_or(Verdict::Pass, Verdict::Fail)
    }
}
