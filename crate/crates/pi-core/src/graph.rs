//! Graphs, bipartite graphs, split graphs, and the alternating-cycle and
//! threshold/chain predicates on them.
//!
//! Adjacency is stored as packed bit rows, so the pairwise predicates used
//! throughout the crate run on whole rows at a time.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use crate::error::Error;

/// Simple undirected graph on vertices `0..n`, irreflexive and symmetric.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<FixedBitSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph { n, rows: vec![FixedBitSet::with_capacity(n); n] }
    }

    /// Graph with the given edges. Panics on self-loops or out-of-range ids.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn m(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u},{v})");
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.rows[u].contains(v)
    }

    /// Neighbor set of `u` as a bit row.
    pub fn neighbors(&self, u: usize) -> &FixedBitSet {
        &self.rows[u]
    }

    pub fn degree(&self, u: usize) -> usize {
        self.rows[u].count_ones(..)
    }

    /// Edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.n {
            for v in self.rows[u].ones() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Graph with the same vertices and exactly the missing edges.
    pub fn complement(&self) -> Graph {
        let mut c = Graph::new(self.n);
        for u in 0..self.n {
            let mut row = self.rows[u].clone();
            row.toggle_range(..);
            row.remove(u);
            c.rows[u] = row;
        }
        c
    }

    /// True iff the graph is a threshold graph (no induced 2K₂, P₄ or C₄),
    /// decided via the vicinal preorder: sorted by descending degree,
    /// consecutive neighborhoods must be nested.
    pub fn is_threshold_graph(&self) -> bool {
        let mut by_deg: Vec<usize> = (0..self.n).collect();
        by_deg.sort_by_key(|&v| std::cmp::Reverse(self.degree(v)));
        for w in by_deg.windows(2) {
            let (x, y) = (w[0], w[1]);
            // need N(y) ∖ {x} ⊆ N(x) ∖ {y}
            let mut extra = self.rows[y].clone();
            extra.difference_with(&self.rows[x]);
            extra.remove(x);
            if extra.count_ones(..) != 0 {
                return false;
            }
        }
        true
    }

    /// True iff some `2k`-tuple of (not necessarily distinct) vertices
    /// alternates edges of `sub` with non-edges of this graph.
    pub fn has_alternating_cycle(&self, sub: &[(usize, usize)]) -> bool {
        let mut sub_rows = vec![FixedBitSet::with_capacity(self.n); self.n];
        for &(u, v) in sub {
            debug_assert!(self.has_edge(u, v));
            sub_rows[u].insert(v);
            sub_rows[v].insert(u);
        }
        let host = |u: usize, v: usize| self.has_edge(u, v);
        forcing_digraph_is_cyclic(self.n, host, &sub_rows)
    }
}

/// Bipartite graph with classes `U` (size `nu`) and `V` (size `nv`) and only
/// cross edges. Stored as one bit row over `V` per `U`-vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    nu: usize,
    nv: usize,
    rows: Vec<FixedBitSet>,
}

impl BipartiteGraph {
    pub fn new(nu: usize, nv: usize) -> Self {
        BipartiteGraph { nu, nv, rows: vec![FixedBitSet::with_capacity(nv); nu] }
    }

    pub fn from_edges(nu: usize, nv: usize, edges: &[(usize, usize)]) -> Self {
        let mut b = BipartiteGraph::new(nu, nv);
        for &(u, v) in edges {
            b.add_edge(u, v);
        }
        b
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    pub fn nv(&self) -> usize {
        self.nv
    }

    pub fn m(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.nu && v < self.nv, "bad cross pair ({u},{v})");
        self.rows[u].insert(v);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Neighbors of `u ∈ U` within `V`.
    pub fn u_row(&self, u: usize) -> &FixedBitSet {
        &self.rows[u]
    }

    /// Neighbors of `v ∈ V` within `U`.
    pub fn v_row(&self, v: usize) -> FixedBitSet {
        let mut row = FixedBitSet::with_capacity(self.nu);
        for u in 0..self.nu {
            if self.rows[u].contains(v) {
                row.insert(u);
            }
        }
        row
    }

    /// Cross pairs as sorted `(u, v)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m());
        for u in 0..self.nu {
            for v in self.rows[u].ones() {
                out.push((u, v));
            }
        }
        out
    }

    /// Bipartite complement: cross pair present iff absent here.
    pub fn bipartite_complement(&self) -> BipartiteGraph {
        let mut c = BipartiteGraph::new(self.nu, self.nv);
        for u in 0..self.nu {
            let mut row = self.rows[u].clone();
            row.toggle_range(..);
            c.rows[u] = row;
        }
        c
    }

    /// True iff the neighborhoods of one class (equivalently both) are
    /// totally ordered by inclusion; equivalently there is no induced 2K₂.
    pub fn is_chain_graph(&self) -> bool {
        let mut by_deg: Vec<usize> = (0..self.nu).collect();
        by_deg.sort_by_key(|&u| std::cmp::Reverse(self.rows[u].count_ones(..)));
        by_deg.windows(2).all(|w| self.rows[w[1]].is_subset(&self.rows[w[0]]))
    }
}

/// Identity of an edge of a split graph: a `U`–`V` cross edge or an edge of
/// the clique on `V`. The derived order (cross first, then lexicographic)
/// is the canonical edge order used everywhere for determinism.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeId {
    /// Edge between `u_u ∈ U` and `v_v ∈ V` (class-local indices).
    Cross { u: usize, v: usize },
    /// Clique edge between `v_a` and `v_b`, canonicalized to `a < b`.
    Clique { a: usize, b: usize },
}

impl EdgeId {
    pub fn cross(u: usize, v: usize) -> Self {
        EdgeId::Cross { u, v }
    }

    pub fn clique(a: usize, b: usize) -> Self {
        assert!(a != b, "clique edge needs distinct endpoints");
        EdgeId::Clique { a: a.min(b), b: a.max(b) }
    }
}

/// Split graph over `U ∪ V`: `U` stays independent, `V` is completed into a
/// clique, and the cross edges are those of `base`. Combined vertex ids put
/// `U` at `0..nu` and `V` at `nu..nu+nv`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitGraph {
    base: BipartiteGraph,
}

impl SplitGraph {
    pub fn new(base: BipartiteGraph) -> Self {
        SplitGraph { base }
    }

    pub fn base(&self) -> &BipartiteGraph {
        &self.base
    }

    pub fn nu(&self) -> usize {
        self.base.nu
    }

    pub fn nv(&self) -> usize {
        self.base.nv
    }

    /// Total vertex count `|U| + |V|`.
    pub fn nn(&self) -> usize {
        self.base.nu + self.base.nv
    }

    /// Adjacency on combined vertex ids.
    pub fn has_edge_ix(&self, x: usize, y: usize) -> bool {
        if x == y {
            return false;
        }
        let nu = self.base.nu;
        match (x < nu, y < nu) {
            (true, true) => false,
            (false, false) => true,
            (true, false) => self.base.has_edge(x, y - nu),
            (false, true) => self.base.has_edge(y, x - nu),
        }
    }

    /// Membership of an `EdgeId` in `E_H`.
    pub fn contains(&self, e: EdgeId) -> bool {
        match e {
            EdgeId::Cross { u, v } => u < self.nu() && v < self.nv() && self.base.has_edge(u, v),
            EdgeId::Clique { a, b } => a < b && b < self.nv(),
        }
    }

    /// Combined endpoint indices of an edge.
    pub fn endpoints(&self, e: EdgeId) -> (usize, usize) {
        let nu = self.base.nu;
        match e {
            EdgeId::Cross { u, v } => (u, nu + v),
            EdgeId::Clique { a, b } => (nu + a, nu + b),
        }
    }

    /// All edges of `E_H` in canonical order: cross edges then clique edges.
    pub fn edge_ids(&self) -> Vec<EdgeId> {
        let mut out: Vec<EdgeId> =
            self.base.edges().iter().map(|&(u, v)| EdgeId::cross(u, v)).collect();
        for a in 0..self.nv() {
            for b in a + 1..self.nv() {
                out.push(EdgeId::Clique { a, b });
            }
        }
        out
    }

    /// True iff `e1` and `e2` are in conflict: their four endpoints admit an
    /// alternating-cycle labeling `v₁v₂ ∉ E`, `v₂v₃ = e1`, `v₃v₄ ∉ E`,
    /// `v₄v₁ = e2`. Edges sharing an endpoint are never in conflict.
    pub fn in_conflict(&self, e1: EdgeId, e2: EdgeId) -> Result<bool, Error> {
        for e in [e1, e2] {
            if !self.contains(e) {
                return Err(Error::UnknownEdge(e));
            }
        }
        let (a, b) = self.endpoints(e1);
        let (c, d) = self.endpoints(e2);
        if a == c || a == d || b == c || b == d {
            return Ok(false);
        }
        let non = |x, y| !self.has_edge_ix(x, y);
        Ok((non(a, d) && non(b, c)) || (non(a, c) && non(b, d)))
    }
}

/// A subset of the edges of some split graph, tracked by `EdgeId`.
/// The host is not stored; operations take it alongside.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeSubset {
    members: BTreeSet<EdgeId>,
}

impl EdgeSubset {
    pub fn new() -> Self {
        EdgeSubset { members: BTreeSet::new() }
    }

    pub fn from_iter<I: IntoIterator<Item = EdgeId>>(iter: I) -> Self {
        EdgeSubset { members: iter.into_iter().collect() }
    }

    pub fn insert(&mut self, e: EdgeId) {
        self.members.insert(e);
    }

    pub fn contains(&self, e: EdgeId) -> bool {
        self.members.contains(&e)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in canonical `EdgeId` order.
    pub fn iter(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.members.iter().copied()
    }

    /// True iff every member is an edge of `host`.
    pub fn is_valid_for(&self, host: &SplitGraph) -> bool {
        self.members.iter().all(|&e| host.contains(e))
    }
}

/// Per-vertex bit rows (over combined indices) of a subset's edges.
fn subset_rows(host: &SplitGraph, sub: &EdgeSubset) -> Vec<FixedBitSet> {
    let n = host.nn();
    let mut rows = vec![FixedBitSet::with_capacity(n); n];
    for e in sub.iter() {
        debug_assert!(host.contains(e), "{e:?} not in host");
        let (x, y) = host.endpoints(e);
        rows[x].insert(y);
        rows[y].insert(x);
    }
    rows
}

/// Cycle test on the forcing digraph: arc `u → v` iff some witness `w` has
/// `vw ∈ sub` and `uw ∉ E_host` (`w ≠ u`). A directed cycle exists iff some
/// alternating cycle of `sub` exists in the host.
fn forcing_digraph_is_cyclic(
    n: usize,
    host_edge: impl Fn(usize, usize) -> bool,
    sub_rows: &[FixedBitSet],
) -> bool {
    // nonadj[u] = vertices w ≠ u with uw ∉ E_host
    let mut nonadj = vec![FixedBitSet::with_capacity(n); n];
    for u in 0..n {
        for w in 0..n {
            if w != u && !host_edge(u, w) {
                nonadj[u].insert(w);
            }
        }
    }
    let mut indeg = vec![0usize; n];
    let mut arcs = vec![FixedBitSet::with_capacity(n); n];
    for u in 0..n {
        for v in 0..n {
            if u != v && !sub_rows[v].is_disjoint(&nonadj[u]) {
                arcs[u].insert(v);
                indeg[v] += 1;
            }
        }
    }
    // Kahn: the digraph is acyclic iff all vertices get processed.
    let mut queue: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = queue.pop() {
        seen += 1;
        for v in arcs[u].ones() {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                queue.push(v);
            }
        }
    }
    seen < n
}

/// True iff `sub` has an alternating cycle in `host`: `2k` (not necessarily
/// distinct) vertices `v₁..v₂ₖ`, `k ≥ 2`, with `v_i v_{i+1} ∈ sub` for even
/// `i` and `∉ E_H` for odd `i` (indices mod `2k`).
pub fn has_alternating_cycle(host: &SplitGraph, sub: &EdgeSubset) -> bool {
    let rows = subset_rows(host, sub);
    forcing_digraph_is_cyclic(host.nn(), |x, y| host.has_edge_ix(x, y), &rows)
}

/// Like [`has_alternating_cycle`], but within the reduced host whose edge
/// set is `E_H ∖ forbidden`. `sub` must avoid `forbidden`.
pub fn has_alternating_cycle_avoiding(
    host: &SplitGraph,
    sub: &EdgeSubset,
    forbidden: &EdgeSubset,
) -> bool {
    let rows = subset_rows(host, sub);
    let nu = host.nu();
    let host_edge = |x: usize, y: usize| {
        if !host.has_edge_ix(x, y) {
            return false;
        }
        let e = if x < nu || y < nu {
            let (u, v) = if x < nu { (x, y - nu) } else { (y, x - nu) };
            EdgeId::cross(u, v)
        } else {
            EdgeId::clique(x - nu, y - nu)
        };
        !forbidden.contains(e)
    };
    forcing_digraph_is_cyclic(host.nn(), host_edge, &rows)
}
