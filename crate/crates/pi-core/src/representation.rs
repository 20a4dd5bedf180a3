//! From a linear-interval cover to geometry: extract the realizer pair
//! `P = P₁ ∩ P₂` (`P₁` linear, `P₂` an interval order), realize `P₂` as
//! intervals by down-set/up-set ranks, and place each element as a
//! triangle with its apex on an upper line and its interval on a lower
//! line. Two triangles are disjoint iff one is entirely to the left of
//! the other on both lines.

use fixedbitset::FixedBitSet;

use crate::cover::{verify_cover, LinearIntervalCover};
use crate::domination::DominationContext;
use crate::error::Error;
use crate::graph::Graph;
use crate::order::{linear_extension, StrictOrder};

/// Apex positions on the upper line and integer intervals on the lower
/// line; all `2n` interval endpoints are pairwise distinct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PiRepresentation {
    pub apex_rank: Vec<usize>,
    pub intervals: Vec<(usize, usize)>,
}

impl PiRepresentation {
    /// `{"points":[...],"intervals":[[l,r],...]}` with integer
    /// coordinates; points live on the upper line, intervals on the lower.
    pub fn to_json(&self) -> String {
        let points: Vec<String> = self.apex_rank.iter().map(usize::to_string).collect();
        let intervals: Vec<String> =
            self.intervals.iter().map(|(l, r)| format!("[{l},{r}]")).collect();
        format!(
            "{{\"points\":[{}],\"intervals\":[{}]}}",
            points.join(","),
            intervals.join(",")
        )
    }
}

/// A linear order and an interval order whose intersection is the input.
#[derive(Debug, Clone)]
pub struct RealizerPair {
    pub p1: StrictOrder,
    pub p2: StrictOrder,
}

/// Read the realizer pair off a verified cover. `P₂` relates `i` to `j`
/// exactly when `u_i v_j` is missing from `E2`; `P₁` is a linear
/// extension of `P` together with the reversal of every `E1` edge
/// (smallest-source tie-break, so unconstrained elements come out
/// ascending). Both are strict orders because the cover classes are chain
/// graphs with the diagonal confined to `E2`; the intersection is checked
/// against `P` before returning.
pub fn orders_from_cover(ctx: &DominationContext, c: &LinearIntervalCover) -> RealizerPair {
    assert!(verify_cover(ctx, c), "cover does not verify");
    let n = ctx.p.n();
    let missing: Vec<(usize, usize)> = c
        .e2
        .bipartite_complement()
        .edges()
        .into_iter()
        .filter(|&(i, j)| i != j)
        .collect();
    let p2 = StrictOrder::new(n, &missing)
        .expect("complement of the second cover class is a strict order");
    let mut rel = ctx.p.pairs();
    for (i, j) in c.e1.edges() {
        if i != j {
            rel.push((j, i));
        }
    }
    let p1 = linear_extension(&rel, n)
        .expect("the realizer constraints admit a linear extension");
    let got = p1.intersect(&p2).expect("sizes match");
    assert_eq!(got, ctx.p, "realizer intersection does not reproduce the order");
    RealizerPair { p1, p2 }
}

/// Sorts element indices so that the given sets ascend by inclusion;
/// errors with an incomparable witness pair if they do not form a chain.
fn inclusion_order(sets: &[FixedBitSet]) -> Result<Vec<usize>, (usize, usize)> {
    let mut order: Vec<usize> = (0..sets.len()).collect();
    order.sort_by_key(|&x| (sets[x].count_ones(..), sets[x].ones().collect::<Vec<_>>()));
    for w in order.windows(2) {
        if !sets[w[0]].is_subset(&sets[w[1]]) {
            return Err((w[0], w[1]));
        }
    }
    Ok(order)
}

/// Rank of each element's set among the distinct sets in `order`.
fn inclusion_ranks(sets: &[FixedBitSet], order: &[usize]) -> Vec<usize> {
    let mut ranks = vec![0usize; sets.len()];
    let mut rank = 0;
    for w in 0..order.len() {
        if w > 0 && sets[order[w]] != sets[order[w - 1]] {
            rank += 1;
        }
        ranks[order[w]] = rank;
    }
    ranks
}

/// Realize an interval order: `l(x)` ranks the down-set of `x` among the
/// distinct down-sets by inclusion, `r(x)` ranks the up-set among the
/// distinct up-sets by reverse inclusion. Then `x < y ⇔ r(x) < l(y)`,
/// which is validated for every pair before returning.
pub fn interval_realization(p2: &StrictOrder) -> Result<Vec<(usize, usize)>, Error> {
    let n = p2.n();
    let downs: Vec<FixedBitSet> = (0..n).map(|x| p2.below(x)).collect();
    let ups: Vec<FixedBitSet> = (0..n).map(|x| p2.above(x).clone()).collect();

    let d_order = inclusion_order(&downs).map_err(|(x, y)| {
        let a = downs[x].ones().find(|&a| !downs[y].contains(a)).unwrap();
        let c = downs[y].ones().find(|&c| !downs[x].contains(c)).unwrap();
        Error::NotIntervalOrder { x, y, a, c }
    })?;
    let l = inclusion_ranks(&downs, &d_order);

    let mut u_order = inclusion_order(&ups).map_err(|(x, y)| {
        // x < a and y < c with x,c and y,a unrelated: the same 2+2 seen
        // from above.
        let a = ups[x].ones().find(|&a| !ups[y].contains(a)).unwrap();
        let c = ups[y].ones().find(|&c| !ups[x].contains(c)).unwrap();
        Error::NotIntervalOrder { x: a, y: c, a: x, c: y }
    })?;
    u_order.reverse();
    let r = inclusion_ranks(&ups, &u_order);

    let out: Vec<(usize, usize)> = (0..n).map(|x| (l[x], r[x])).collect();
    for (x, &(lx, rx)) in out.iter().enumerate() {
        assert!(lx <= rx, "interval of {x} is reversed");
        for (y, &(ly, _)) in out.iter().enumerate() {
            if x != y {
                assert_eq!(p2.lt(x, y), rx < ly, "ranks disagree with the order at ({x},{y})");
            }
        }
    }
    Ok(out)
}

/// Assemble the representation: apex positions follow `P₁`, intervals
/// realize `P₂`, and the `2n` endpoints are spread to distinct integers.
/// At a shared coordinate left endpoints precede right endpoints (then
/// vertex id), which keeps `r(x) < l(y)` exactly where it held before.
pub fn build_representation(rp: &RealizerPair) -> Result<PiRepresentation, Error> {
    assert!(rp.p1.is_total(), "the first realizer order must be linear");
    let n = rp.p1.n();
    assert_eq!(n, rp.p2.n(), "realizer orders disagree on size");
    let raw = interval_realization(&rp.p2)?;

    let mut endpoints: Vec<(usize, u8, usize)> = Vec::with_capacity(2 * n);
    for (x, &(l, r)) in raw.iter().enumerate() {
        endpoints.push((l, 0, x));
        endpoints.push((r, 1, x));
    }
    endpoints.sort_unstable();
    let mut intervals = vec![(0usize, 0usize); n];
    for (pos, &(_, kind, x)) in endpoints.iter().enumerate() {
        if kind == 0 {
            intervals[x].0 = pos;
        } else {
            intervals[x].1 = pos;
        }
    }
    let apex_rank: Vec<usize> = (0..n).map(|x| rp.p1.rank(x)).collect();

    for (x, &(l, r)) in intervals.iter().enumerate() {
        assert!(l < r, "perturbed interval of {x} is reversed");
        for (y, &(ly, _)) in intervals.iter().enumerate() {
            if x != y {
                assert_eq!(rp.p2.lt(x, y), r < ly, "perturbation changed the order at ({x},{y})");
            }
        }
    }
    Ok(PiRepresentation { apex_rank, intervals })
}

/// Does the representation draw exactly `g`? Vertex `u` lies entirely
/// left of `v` iff both its apex and its interval do; adjacency is the
/// failure of both directions.
pub fn verify_representation(r: &PiRepresentation, g: &Graph) -> bool {
    let n = g.n();
    if r.apex_rank.len() != n || r.intervals.len() != n {
        return false;
    }
    let left = |u: usize, v: usize| {
        r.apex_rank[u] < r.apex_rank[v] && r.intervals[u].1 < r.intervals[v].0
    };
    for u in 0..n {
        for v in u + 1..n {
            let adjacent = !left(u, v) && !left(v, u);
            if adjacent != g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}
