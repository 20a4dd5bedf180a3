//! Strict partial orders and the relational operations on them.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use fixedbitset::FixedBitSet;

use crate::error::Error;
use crate::graph::Graph;

/// Irreflexive, antisymmetric, transitively closed relation on `0..n`.
/// Validated on construction; every instance is a genuine strict order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrictOrder {
    n: usize,
    /// `lt[u]` = set of `v` with `u < v`.
    lt: Vec<FixedBitSet>,
}

impl StrictOrder {
    /// Empty order (antichain) on `n` elements.
    pub fn antichain(n: usize) -> Self {
        StrictOrder { n, lt: vec![FixedBitSet::with_capacity(n); n] }
    }

    /// Order with exactly the given `u < v` pairs.
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self, Error> {
        let mut lt = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in pairs {
            if u >= n || v >= n {
                return Err(Error::InvalidOrder(format!("pair ({u},{v}) out of range for n={n}")));
            }
            lt[u].insert(v);
        }
        let o = StrictOrder { n, lt };
        o.validate()?;
        Ok(o)
    }

    /// Wraps rows that are already known to form a strict order.
    /// Validity is still checked in debug builds.
    pub(crate) fn from_rows(n: usize, lt: Vec<FixedBitSet>) -> Self {
        let o = StrictOrder { n, lt };
        debug_assert!(o.validate().is_ok(), "rows do not form a strict order");
        o
    }

    fn validate(&self) -> Result<(), Error> {
        for u in 0..self.n {
            if self.lt[u].contains(u) {
                return Err(Error::InvalidOrder(format!("reflexive pair ({u},{u})")));
            }
            for v in self.lt[u].ones() {
                if self.lt[v].contains(u) {
                    return Err(Error::InvalidOrder(format!("both {u}<{v} and {v}<{u}")));
                }
                if !self.lt[v].is_subset(&self.lt[u]) {
                    let w = self.lt[v].ones().find(|&w| !self.lt[u].contains(w)).unwrap();
                    return Err(Error::InvalidOrder(format!(
                        "not transitive: {u}<{v} and {v}<{w} but not {u}<{w}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lt(&self, u: usize, v: usize) -> bool {
        self.lt[u].contains(v)
    }

    /// Elements above `u`, as a bit row.
    pub fn above(&self, u: usize) -> &FixedBitSet {
        &self.lt[u]
    }

    /// Elements below `u`, as a bit row.
    pub fn below(&self, u: usize) -> FixedBitSet {
        let mut row = FixedBitSet::with_capacity(self.n);
        for v in 0..self.n {
            if self.lt[v].contains(u) {
                row.insert(v);
            }
        }
        row
    }

    /// All `u < v` pairs in lexicographic order.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in self.lt[u].ones() {
                out.push((u, v));
            }
        }
        out
    }

    /// Number of comparable pairs.
    pub fn size(&self) -> usize {
        self.lt.iter().map(|r| r.count_ones(..)).sum()
    }

    /// True iff every two distinct elements are comparable.
    pub fn is_total(&self) -> bool {
        self.size() == self.n * self.n.saturating_sub(1) / 2
    }

    /// For a total order, `rank[u]` = number of elements below `u`.
    pub fn rank(&self, u: usize) -> usize {
        self.below(u).count_ones(..)
    }

    /// Order with all comparabilities reversed.
    pub fn inverse(&self) -> StrictOrder {
        let mut lt = vec![FixedBitSet::with_capacity(self.n); self.n];
        for u in 0..self.n {
            for v in self.lt[u].ones() {
                lt[v].insert(u);
            }
        }
        StrictOrder::from_rows(self.n, lt)
    }

    /// Pairs ordered in both inputs. Always again a strict order.
    pub fn intersect(&self, other: &StrictOrder) -> Result<StrictOrder, Error> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!(
                "intersect over {} vs {} elements",
                self.n, other.n
            )));
        }
        let mut lt = self.lt.clone();
        for u in 0..self.n {
            lt[u].intersect_with(&other.lt[u]);
        }
        Ok(StrictOrder::from_rows(self.n, lt))
    }

    /// Pairs ordered in either input, as a raw relation (possibly cyclic).
    pub fn union_as_relation(&self, other: &StrictOrder) -> Result<Vec<(usize, usize)>, Error> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(format!(
                "union over {} vs {} elements",
                self.n, other.n
            )));
        }
        let mut rows = self.lt.clone();
        let mut out = Vec::new();
        for u in 0..self.n {
            rows[u].union_with(&other.lt[u]);
            for v in rows[u].ones() {
                out.push((u, v));
            }
        }
        Ok(out)
    }

    /// Graph on the same elements whose edges are the incomparable pairs.
    pub fn incomparability_graph(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.lt(u, v) && !self.lt(v, u) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}

/// Total order on `0..n` containing every pair of `rel`, computed by
/// topological sort with smallest-index-first tie-breaking. A cycle in
/// `rel` yields [`Error::CyclicRelation`] carrying one witness cycle.
pub fn linear_extension(rel: &[(usize, usize)], n: usize) -> Result<StrictOrder, Error> {
    let mut succ = vec![FixedBitSet::with_capacity(n); n];
    for &(u, v) in rel {
        assert!(u < n && v < n, "pair ({u},{v}) out of range for n={n}");
        if u == v {
            return Err(Error::CyclicRelation { cycle: vec![u] });
        }
        succ[u].insert(v);
    }
    let mut indeg = vec![0usize; n];
    for u in 0..n {
        for v in succ[u].ones() {
            indeg[v] += 1;
        }
    }
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut sequence = Vec::with_capacity(n);
    let mut placed = FixedBitSet::with_capacity(n);
    while let Some(Reverse(u)) = heap.pop() {
        sequence.push(u);
        placed.insert(u);
        for v in succ[u].ones() {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                heap.push(Reverse(v));
            }
        }
    }
    if sequence.len() < n {
        return Err(Error::CyclicRelation { cycle: residual_cycle(n, &succ, &placed) });
    }
    let mut lt = vec![FixedBitSet::with_capacity(n); n];
    for (i, &u) in sequence.iter().enumerate() {
        for &v in &sequence[i + 1..] {
            lt[u].insert(v);
        }
    }
    Ok(StrictOrder::from_rows(n, lt))
}

/// One directed cycle among the unplaced vertices. Every unplaced vertex
/// keeps an unplaced predecessor, so walking backwards must repeat.
fn residual_cycle(n: usize, succ: &[FixedBitSet], placed: &FixedBitSet) -> Vec<usize> {
    let start = (0..n).find(|&v| !placed.contains(v)).unwrap();
    let mut walk = vec![start];
    loop {
        let tail = *walk.last().unwrap();
        let pred = (0..n)
            .find(|&u| !placed.contains(u) && succ[u].contains(tail))
            .expect("unplaced vertex with no unplaced predecessor");
        if let Some(i) = walk.iter().position(|&x| x == pred) {
            // arcs run walk[k+1] ← walk[k]... in reverse; reversing the
            // tail of the walk yields a forward-oriented cycle
            let mut cycle: Vec<usize> = walk[i..].to_vec();
            cycle.reverse();
            return cycle;
        }
        walk.push(pred);
    }
}

/// Total order ranking `0..n` by the given sequence (first element smallest).
pub fn total_from_sequence(sequence: &[usize]) -> StrictOrder {
    let n = sequence.len();
    let mut lt = vec![FixedBitSet::with_capacity(n); n];
    for (i, &u) in sequence.iter().enumerate() {
        for &v in &sequence[i + 1..] {
            lt[u].insert(v);
        }
    }
    StrictOrder::from_rows(n, lt)
}
