//! Linear-interval covers of `G̃`: two chain graphs whose union is `G̃`
//! with the diagonal `E₀` confined to the second, built from a satisfying
//! assignment by completing each color class to a threshold graph inside
//! the split host.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use crate::conflict::{assignment_to_coloring, Color, Coloring, LiteralAssignment};
use crate::domination::DominationContext;
use crate::error::Error;
use crate::formulas::TruthAssignment;
use crate::graph::{
    has_alternating_cycle, has_alternating_cycle_avoiding, BipartiteGraph, EdgeId, EdgeSubset,
    Graph, SplitGraph,
};

/// Two cross-edge classes covering `G̃`; chain graphs with `E₀ ⊆ E2 ∖ E1`.
#[derive(Debug, Clone)]
pub struct LinearIntervalCover {
    pub e1: BipartiteGraph,
    pub e2: BipartiteGraph,
}

/// The edge joining combined vertex ids `x` and `y`, if the host can have
/// one (both on the independent side means it cannot).
fn pair_edge(nu: usize, x: usize, y: usize) -> Option<EdgeId> {
    match (x < nu, y < nu) {
        (true, true) => None,
        (false, false) => Some(EdgeId::clique(x - nu, y - nu)),
        (true, false) => Some(EdgeId::cross(x, y - nu)),
        (false, true) => Some(EdgeId::cross(y, x - nu)),
    }
}

/// Complete `sub` to a threshold graph `T` with `sub ⊆ T ⊆ E_host ∖
/// forbidden`. Such a completion exists iff `sub` closes no alternating
/// cycle in the reduced host; on success the peeling below cannot get
/// stuck: while every remaining vertex keeps a `sub` edge, a sink of the
/// forcing digraph is adjacent to all remaining vertices. Removing
/// vertices that are sub-isolated (quietly) or dominating (donating their
/// full star) yields a graph whose reverse construction order is an
/// isolated-or-universal insertion sequence, hence threshold. The result
/// is re-verified before returning; a failure there is a bug.
pub fn threshold_completion(
    sub: &EdgeSubset,
    host: &SplitGraph,
    forbidden: &EdgeSubset,
) -> Result<EdgeSubset, Error> {
    let nn = host.nn();
    let nu = host.nu();
    for e in sub.iter() {
        debug_assert!(host.contains(e), "completion seed outside the host");
        debug_assert!(!forbidden.contains(e), "completion seed is forbidden");
    }
    if has_alternating_cycle_avoiding(host, sub, forbidden) {
        return Err(Error::NoCompletion);
    }

    let mut r_rows = vec![FixedBitSet::with_capacity(nn); nn];
    for x in 0..nn {
        for y in x + 1..nn {
            if host.has_edge_ix(x, y) && !forbidden.contains(pair_edge(nu, x, y).unwrap()) {
                r_rows[x].insert(y);
                r_rows[y].insert(x);
            }
        }
    }
    let mut sub_rows = vec![FixedBitSet::with_capacity(nn); nn];
    for e in sub.iter() {
        let (x, y) = host.endpoints(e);
        sub_rows[x].insert(y);
        sub_rows[y].insert(x);
    }
    // Degrees into the still-alive set.
    let mut r_deg: Vec<usize> = (0..nn).map(|x| r_rows[x].count_ones(..)).collect();
    let mut sub_deg: Vec<usize> = (0..nn).map(|x| sub_rows[x].count_ones(..)).collect();
    let mut alive = FixedBitSet::with_capacity(nn);
    alive.insert_range(..);
    let mut remaining = nn;
    let mut t = EdgeSubset::new();
    while remaining > 1 {
        let isolated = (0..nn).find(|&x| alive.contains(x) && sub_deg[x] == 0);
        let (v, dominating) = match isolated {
            Some(v) => (v, false),
            None => {
                let v = (0..nn)
                    .find(|&x| alive.contains(x) && r_deg[x] == remaining - 1)
                    .expect("dominating vertex exists without an alternating cycle");
                (v, true)
            }
        };
        if dominating {
            for x in r_rows[v].ones() {
                if alive.contains(x) {
                    t.insert(pair_edge(nu, v, x).unwrap());
                }
            }
        }
        alive.remove(v);
        remaining -= 1;
        for x in r_rows[v].ones() {
            if alive.contains(x) {
                r_deg[x] -= 1;
            }
        }
        for x in sub_rows[v].ones() {
            if alive.contains(x) {
                sub_deg[x] -= 1;
            }
        }
    }

    for e in sub.iter() {
        assert!(t.contains(e), "completion lost a seed edge");
    }
    let mut g = Graph::new(nn);
    for e in t.iter() {
        assert!(host.contains(e), "completion left the host");
        assert!(!forbidden.contains(e), "completion used a forbidden edge");
        let (x, y) = host.endpoints(e);
        g.add_edge(x, y);
    }
    assert!(g.is_threshold_graph(), "completion is not a threshold graph");
    Ok(t)
}

fn cross_part(t: &EdgeSubset, nu: usize, nv: usize) -> BipartiteGraph {
    let mut g = BipartiteGraph::new(nu, nv);
    for e in t.iter() {
        if let EdgeId::Cross { u, v } = e {
            g.add_edge(u, v);
        }
    }
    g
}

/// Turn a satisfying assignment into a cover: color committed edges per
/// `tau`, force uncommitted edges (diagonal and clique among them) blue,
/// complete the red class avoiding `E₀` and the blue class unrestricted,
/// and keep the cross edges of each completion.
pub fn cover_from_assignment(
    ctx: &DominationContext,
    la: &LiteralAssignment,
    chi0: &Coloring,
    tau: &TruthAssignment,
) -> LinearIntervalCover {
    let mut colors = assignment_to_coloring(la, chi0, tau).colors;
    for (idx, c) in colors.iter_mut().enumerate() {
        if !la.committed[idx] {
            *c = Color::Blue;
        }
    }
    let mut red = EdgeSubset::new();
    let mut blue = EdgeSubset::new();
    for (idx, &e) in la.vertices.iter().enumerate() {
        match colors[idx] {
            Color::Red => red.insert(e),
            Color::Blue => blue.insert(e),
        }
    }
    assert!(
        !has_alternating_cycle_avoiding(&ctx.h, &red, &ctx.e0),
        "red class closes an alternating cycle avoiding the diagonal"
    );
    assert!(
        !has_alternating_cycle(&ctx.h, &blue),
        "blue class closes an alternating cycle"
    );
    let t1 = threshold_completion(&red, &ctx.h, &ctx.e0)
        .expect("red class completes: no alternating cycle avoids the diagonal");
    let t2 = threshold_completion(&blue, &ctx.h, &EdgeSubset::new())
        .expect("blue class completes: no alternating cycle");
    let cover = LinearIntervalCover {
        e1: cross_part(&t1, ctx.c.nu(), ctx.c.nv()),
        e2: cross_part(&t2, ctx.c.nu(), ctx.c.nv()),
    };
    debug_assert!(verify_cover(ctx, &cover));
    cover
}

/// Check the defining properties: the union is exactly `G̃`, both classes
/// are chain graphs, and the diagonal lies in `E2 ∖ E1`.
pub fn verify_cover(ctx: &DominationContext, c: &LinearIntervalCover) -> bool {
    let gt = &ctx.gtilde;
    if c.e1.nu() != gt.nu()
        || c.e1.nv() != gt.nv()
        || c.e2.nu() != gt.nu()
        || c.e2.nv() != gt.nv()
    {
        return false;
    }
    let union: BTreeSet<(usize, usize)> = c.e1.edges().into_iter().chain(c.e2.edges()).collect();
    let want: BTreeSet<(usize, usize)> = gt.edges().into_iter().collect();
    if union != want {
        return false;
    }
    if !c.e1.is_chain_graph() || !c.e2.is_chain_graph() {
        return false;
    }
    ctx.e0.iter().all(|e| match e {
        EdgeId::Cross { u, v } => c.e2.has_edge(u, v) && !c.e1.has_edge(u, v),
        EdgeId::Clique { .. } => false,
    })
}
