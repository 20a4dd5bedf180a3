//! Brute-force ground truth and instance generators.
//!
//! The deciders here exist to cross-validate the recognition pipeline, so
//! they deliberately share no algorithms with it: orders are enumerated
//! instead of oriented, interval orders are detected by a direct 2+2 scan,
//! chain graphs by a direct 2K₂ scan, and extension existence by plain
//! source elimination. Only the data model and the final representation
//! predicate are reused.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::{BipartiteGraph, Graph};
use crate::order::StrictOrder;
use crate::representation::{verify_representation, PiRepresentation};

/// Hard cap on element count for the exhaustive enumerations.
const ENUMERATION_BOUND: usize = 5;

/// Hard cap on non-diagonal edges for the exhaustive cover search.
const COVER_BOUND: usize = 12;

fn check_bound(requested: usize, bound: usize) -> Result<(), Error> {
    if requested > bound {
        return Err(Error::TooLarge { bound, requested });
    }
    Ok(())
}

/// Advances a little-endian fixed-radix counter; false on wrap to zero.
fn advance(digits: &mut [u8], radix: u8) -> bool {
    for d in digits.iter_mut() {
        *d += 1;
        if *d < radix {
            return true;
        }
        *d = 0;
    }
    false
}

/// Direct 2+2 scan. `q` is an interval order iff for every two
/// comparabilities `a < b` and `c < d`, also `a < d` or `c < b`; degenerate
/// quadruples satisfy the disjunction automatically.
fn has_two_plus_two(q: &StrictOrder) -> bool {
    let pairs = q.pairs();
    for &(a, b) in &pairs {
        for &(c, d) in &pairs {
            if !q.lt(a, d) && !q.lt(c, b) {
                return true;
            }
        }
    }
    false
}

/// Source elimination over an explicit arc list (duplicates allowed).
fn is_acyclic(n: usize, arcs: &[(usize, usize)]) -> bool {
    let mut indegree = vec![0usize; n];
    let mut out = vec![Vec::new(); n];
    for &(u, v) in arcs {
        indegree[v] += 1;
        out[u].push(v);
    }
    let mut stack: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    let mut removed = 0;
    while let Some(u) = stack.pop() {
        removed += 1;
        for &v in &out[u] {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                stack.push(v);
            }
        }
    }
    removed == n
}

/// True iff some linear extension `P₁` of `p` has `P₁ ∩ q = p`. Such an
/// extension must reverse every pair of `q` that `p` leaves open, so it
/// exists iff `p ∪ {(v, u) : u <_q v, u ∥_p v}` is acyclic.
fn admits_agreeing_linear_extension(p: &StrictOrder, q: &StrictOrder) -> bool {
    let mut arcs = p.pairs();
    for (u, v) in q.pairs() {
        if !p.lt(u, v) {
            arcs.push((v, u));
        }
    }
    is_acyclic(p.n(), &arcs)
}

/// Decides by exhaustion whether `p` is the intersection of a linear order
/// with an interval order. Enumerates every strict order `q ⊇ p` (three
/// states per incomparable pair), keeps the interval orders, and succeeds
/// iff one of them admits an agreeing linear extension.
pub fn oracle_is_linear_interval(p: &StrictOrder) -> Result<bool, Error> {
    check_bound(p.n(), ENUMERATION_BOUND)?;
    let n = p.n();
    let mut open = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if !p.lt(i, j) && !p.lt(j, i) {
                open.push((i, j));
            }
        }
    }
    let base = p.pairs();
    let mut digits = vec![0u8; open.len()];
    loop {
        let mut pairs = base.clone();
        for (d, &(i, j)) in digits.iter().zip(&open) {
            match d {
                1 => pairs.push((i, j)),
                2 => pairs.push((j, i)),
                _ => {}
            }
        }
        if let Ok(q) = StrictOrder::new(n, &pairs) {
            if !has_two_plus_two(&q) && admits_agreeing_linear_extension(p, &q) {
                return Ok(true);
            }
        }
        if !advance(&mut digits, 3) {
            return Ok(false);
        }
    }
}

/// Tally of the exhaustive orientation sweep of [`oracle_is_pi_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PiOracleReport {
    /// Some transitive orientation of the complement is a linear-interval
    /// order.
    pub is_pi: bool,
    /// Number of transitive orientations of the complement.
    pub orientations: usize,
    /// How many of those orientations are linear-interval orders.
    pub accepting: usize,
}

impl PiOracleReport {
    /// The verdict is independent of the chosen orientation: either no
    /// orientation accepts or all of them do.
    pub fn all_agree(&self) -> bool {
        self.accepting == 0 || self.accepting == self.orientations
    }
}

/// Decides by exhaustion whether `g` is a PI graph: tries all `2^m̄`
/// orientations of the complement, keeps the transitive ones, and asks
/// [`oracle_is_linear_interval`] about each.
pub fn oracle_is_pi_graph(g: &Graph) -> Result<PiOracleReport, Error> {
    check_bound(g.n(), ENUMERATION_BOUND)?;
    let comp = g.complement().edges();
    let mut orientations = 0;
    let mut accepting = 0;
    for mask in 0u32..1 << comp.len() {
        let pairs: Vec<(usize, usize)> = comp
            .iter()
            .enumerate()
            .map(|(b, &(u, v))| if mask >> b & 1 == 0 { (u, v) } else { (v, u) })
            .collect();
        let Ok(p) = StrictOrder::new(g.n(), &pairs) else {
            continue;
        };
        orientations += 1;
        if oracle_is_linear_interval(&p)? {
            accepting += 1;
        }
    }
    Ok(PiOracleReport {
        is_pi: accepting > 0,
        orientations,
        accepting,
    })
}

/// Direct 2K₂ scan over a bipartite adjacency matrix.
fn local_is_chain(e: &[Vec<bool>]) -> bool {
    let mut edges = Vec::new();
    for (u, row) in e.iter().enumerate() {
        for (v, &bit) in row.iter().enumerate() {
            if bit {
                edges.push((u, v));
            }
        }
    }
    for &(a, b) in &edges {
        for &(c, d) in &edges {
            if a != c && b != d && !e[a][d] && !e[c][b] {
                return false;
            }
        }
    }
    true
}

/// Decides by exhaustion whether a square bipartite graph containing its
/// diagonal splits into two chain graphs `E1 ∪ E2` with the diagonal barred
/// from `E1`. Each non-diagonal edge independently goes to `E1`, to `E2`,
/// or to both.
pub fn oracle_has_cover(gt: &BipartiteGraph) -> Result<bool, Error> {
    assert_eq!(gt.nu(), gt.nv(), "cover search needs a square host");
    let n = gt.nu();
    for i in 0..n {
        assert!(gt.has_edge(i, i), "diagonal edge {i} missing");
    }
    let free: Vec<(usize, usize)> = gt.edges().into_iter().filter(|&(u, v)| u != v).collect();
    check_bound(free.len(), COVER_BOUND)?;
    let mut digits = vec![0u8; free.len()];
    loop {
        let mut e1 = vec![vec![false; n]; n];
        let mut e2 = vec![vec![false; n]; n];
        for i in 0..n {
            e2[i][i] = true;
        }
        for (d, &(u, v)) in digits.iter().zip(&free) {
            if *d != 1 {
                e1[u][v] = true;
            }
            if *d != 0 {
                e2[u][v] = true;
            }
        }
        if local_is_chain(&e1) && local_is_chain(&e2) {
            return Ok(true);
        }
        if !advance(&mut digits, 3) {
            return Ok(false);
        }
    }
}

/// Random guaranteed-PI instance together with its witnessing
/// representation: a uniform apex permutation and `2n` distinct interval
/// endpoints, with adjacency read off the drawn triangles.
pub fn random_pi_instance(n: usize, seed: u64) -> (Graph, PiRepresentation) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut apex_rank: Vec<usize> = (0..n).collect();
    apex_rank.shuffle(&mut rng);
    let mut coords: Vec<usize> = (0..2 * n).collect();
    coords.shuffle(&mut rng);
    let intervals: Vec<(usize, usize)> = coords
        .chunks(2)
        .map(|c| (c[0].min(c[1]), c[0].max(c[1])))
        .collect();
    let rep = PiRepresentation {
        apex_rank,
        intervals,
    };
    // The triangle of `u` misses the triangle of `v` iff it lies entirely to
    // one side: apex before apex and interval before interval.
    let left = |u: usize, v: usize| {
        rep.apex_rank[u] < rep.apex_rank[v] && rep.intervals[u].1 < rep.intervals[v].0
    };
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !left(u, v) && !left(v, u) {
                g.add_edge(u, v);
            }
        }
    }
    debug_assert!(verify_representation(&rep, &g));
    (g, rep)
}

/// Erdős–Rényi graph: each pair is an edge independently with probability
/// `p`.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random partial order: a coin per pair of a random linear arrangement,
/// closed transitively. Closed subrelations of a linear order are strict
/// orders, so the constructor cannot fail.
pub fn random_poset(n: usize, seed: u64) -> StrictOrder {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(&mut rng);
    let mut rel = vec![vec![false; n]; n];
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(0.5) {
                rel[perm[a]][perm[b]] = true;
            }
        }
    }
    for t in 0..n {
        for a in 0..n {
            for b in 0..n {
                if rel[a][t] && rel[t][b] {
                    rel[a][b] = true;
                }
            }
        }
    }
    let mut pairs = Vec::new();
    for (a, row) in rel.iter().enumerate() {
        for (b, &bit) in row.iter().enumerate() {
            if bit {
                pairs.push((a, b));
            }
        }
    }
    StrictOrder::new(n, &pairs).expect("closed subrelation of a linear order")
}

/// Every labeled graph on `n` vertices, each exactly once.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 7, "exhaustive graph enumeration is exponential in n²");
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << slots.len()).map(move |mask| {
        let mut g = Graph::new(n);
        for (b, &(u, v)) in slots.iter().enumerate() {
            if mask >> b & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

/// Every labeled strict order on `n` elements, each exactly once: three
/// states per unordered pair, filtered through the validating constructor.
pub fn all_posets(n: usize) -> Result<Vec<StrictOrder>, Error> {
    check_bound(n, ENUMERATION_BOUND)?;
    let slots: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut out = Vec::new();
    let mut digits = vec![0u8; slots.len()];
    loop {
        let mut pairs = Vec::new();
        for (d, &(i, j)) in digits.iter().zip(&slots) {
            match d {
                1 => pairs.push((i, j)),
                2 => pairs.push((j, i)),
                _ => {}
            }
        }
        if let Ok(p) = StrictOrder::new(n, &pairs) {
            out.push(p);
        }
        if !advance(&mut digits, 3) {
            return Ok(out);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::total_from_sequence;
    use crate::pipeline::{recognize_graph, recognize_order};

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
    }

    #[test]
    fn small_orders_are_linear_interval() {
        for p in all_posets(2).unwrap() {
            assert!(oracle_is_linear_interval(&p).unwrap());
        }
        for n in 1..=5 {
            let total = total_from_sequence(&(0..n).collect::<Vec<_>>());
            assert!(oracle_is_linear_interval(&total).unwrap());
        }
        let two_two = StrictOrder::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(oracle_is_linear_interval(&two_two).unwrap());
    }

    #[test]
    fn interval_orders_are_linear_interval() {
        let mut interval_orders = 0;
        for p in all_posets(4).unwrap() {
            if !has_two_plus_two(&p) {
                interval_orders += 1;
                assert!(oracle_is_linear_interval(&p).unwrap());
            }
        }
        assert!(interval_orders > 200);
    }

    #[test]
    fn pi_oracle_examples() {
        assert!(oracle_is_pi_graph(&cycle(4)).unwrap().is_pi);
        assert!(oracle_is_pi_graph(&Graph::new(5)).unwrap().is_pi);
        assert!(oracle_is_pi_graph(&Graph::new(5).complement()).unwrap().is_pi);
        for g in all_graphs(4) {
            let report = oracle_is_pi_graph(&g).unwrap();
            assert!(report.is_pi);
            assert!(report.all_agree());
        }
        // C₅ is chordless, so its complement has no transitive orientation.
        let report = oracle_is_pi_graph(&cycle(5)).unwrap();
        assert!(!report.is_pi);
        assert_eq!(report.orientations, 0);
        assert!(report.all_agree());
    }

    #[test]
    fn cover_oracle_examples() {
        let single = BipartiteGraph::from_edges(1, 1, &[(0, 0)]);
        assert!(oracle_has_cover(&single).unwrap());
        // A bare diagonal of size two is a 2K₂ sitting inside E2.
        let bare = BipartiteGraph::from_edges(2, 2, &[(0, 0), (1, 1)]);
        assert!(!oracle_has_cover(&bare).unwrap());
        let mut complete = BipartiteGraph::new(3, 3);
        for u in 0..3 {
            for v in 0..3 {
                complete.add_edge(u, v);
            }
        }
        assert!(oracle_has_cover(&complete).unwrap());
    }

    #[test]
    fn bound_violations_are_reported() {
        assert!(matches!(
            oracle_is_linear_interval(&StrictOrder::antichain(6)),
            Err(Error::TooLarge {
                bound: 5,
                requested: 6
            })
        ));
        assert!(matches!(
            oracle_is_pi_graph(&Graph::new(6)),
            Err(Error::TooLarge { .. })
        ));
        assert!(matches!(all_posets(6), Err(Error::TooLarge { .. })));
        let mut big = BipartiteGraph::new(5, 5);
        for u in 0..5 {
            for v in 0..5 {
                big.add_edge(u, v);
            }
        }
        assert!(matches!(
            oracle_has_cover(&big),
            Err(Error::TooLarge {
                bound: 12,
                requested: 20
            })
        ));
    }

    #[test]
    fn generators_are_deterministic() {
        let (g1, r1) = random_pi_instance(12, 7);
        let (g2, r2) = random_pi_instance(12, 7);
        assert_eq!(g1.edges(), g2.edges());
        assert_eq!(r1, r2);
        assert!(verify_representation(&r1, &g1));
        let (g3, _) = random_pi_instance(12, 8);
        assert_ne!(g1.edges(), g3.edges());
        let (tiny, _) = random_pi_instance(1, 0);
        assert_eq!((tiny.n(), tiny.m()), (1, 0));
        assert_eq!(
            random_graph(10, 0.5, 3).edges(),
            random_graph(10, 0.5, 3).edges()
        );
        assert_eq!(random_poset(6, 4), random_poset(6, 4));
    }

    #[test]
    fn random_graph_extremes() {
        assert_eq!(random_graph(6, 0.0, 1).m(), 0);
        assert_eq!(random_graph(6, 1.0, 1).m(), 15);
    }

    #[test]
    fn enumerations_have_known_sizes() {
        assert_eq!(all_graphs(0).count(), 1);
        assert_eq!(all_graphs(3).count(), 8);
        assert_eq!(all_graphs(4).count(), 64);
        let sizes: Vec<usize> = (0..=4).map(|n| all_posets(n).unwrap().len()).collect();
        assert_eq!(sizes, [1, 1, 3, 19, 219]);
        let ps = all_posets(3).unwrap();
        for i in 0..ps.len() {
            for j in i + 1..ps.len() {
                assert_ne!(ps[i], ps[j]);
            }
        }
    }

    #[test]
    fn oracle_matches_pipeline_on_three_elements() {
        for g in all_graphs(3) {
            let report = oracle_is_pi_graph(&g).unwrap();
            assert_eq!(report.is_pi, recognize_graph(&g).is_pi());
        }
        for p in all_posets(3).unwrap() {
            assert_eq!(
                oracle_is_linear_interval(&p).unwrap(),
                recognize_order(&p).is_linear_interval()
            );
        }
    }
}
