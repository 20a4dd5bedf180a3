//! Order-derived bipartite structures: the domination graph `C(P)`, its
//! reflexive variant `NC(P)`, the bipartite complement `G̃ = Ĉ(P)`, and the
//! associated split graph `H` with its diagonal `E₀`.
//!
//! Both classes of every structure are indexed by the carrier of `P`:
//! `u_i` and `v_i` are the two copies of element `i`.

use crate::graph::{BipartiteGraph, EdgeId, EdgeSubset, SplitGraph};
use crate::order::StrictOrder;

/// Everything the downstream stages need about one order `P`.
#[derive(Debug, Clone)]
pub struct DominationContext {
    pub p: StrictOrder,
    /// Domination graph `C(P)`: cross edge `(i, j)` iff `i <_P j`.
    pub c: BipartiteGraph,
    /// `G̃ = Ĉ(P)`, the bipartite complement of `C(P)`.
    pub gtilde: BipartiteGraph,
    /// Split graph over `G̃`: `U` independent, `V` completed into a clique.
    pub h: SplitGraph,
    /// Diagonal cross edges `u_i v_i`; always present in `G̃`.
    pub e0: EdgeSubset,
}

/// Cross edge `(i, j)` iff `i <_P j`. Edge count equals the number of
/// comparable pairs of `p`.
pub fn domination_graph(p: &StrictOrder) -> BipartiteGraph {
    let n = p.n();
    let mut c = BipartiteGraph::new(n, n);
    for (i, j) in p.pairs() {
        c.add_edge(i, j);
    }
    c
}

/// Cross edge `(i, j)` iff `i ≤_P j`: the domination graph plus the
/// full diagonal.
pub fn nc_graph(p: &StrictOrder) -> BipartiteGraph {
    let mut nc = domination_graph(p);
    for i in 0..p.n() {
        nc.add_edge(i, i);
    }
    nc
}

pub fn build_context(p: &StrictOrder) -> DominationContext {
    let c = domination_graph(p);
    let gtilde = c.bipartite_complement();
    let h = SplitGraph::new(gtilde.clone());
    let e0 = EdgeSubset::from_iter((0..p.n()).map(|i| EdgeId::cross(i, i)));
    debug_assert!(e0.is_valid_for(&h), "diagonal missing from Ĉ(P)");
    DominationContext { p: p.clone(), c, gtilde, h, e0 }
}
