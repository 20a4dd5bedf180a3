//! Transitive orientation by edge forcing.
//!
//! Two edges sharing an endpoint force each other's direction whenever
//! their far endpoints are non-adjacent. Orienting one seed edge and
//! closing under forcing yields a color class; removing it and repeating
//! decomposes the graph. The graph is a comparability graph iff no class
//! ever receives contradictory directions, and then the union of the
//! oriented classes is transitive.

use std::collections::VecDeque;

use fixedbitset::FixedBitSet;

use crate::error::{Error, OrientationFailure};
use crate::graph::Graph;
use crate::order::StrictOrder;

/// Orients every edge of `g` into a strict order whose comparable pairs
/// are exactly the edges of `g`, or reports that none exists.
///
/// Deterministic: classes are seeded at the lowest remaining edge,
/// oriented low index → high index. The result is re-validated for
/// transitivity before being returned; the validation failure witness
/// is part of the error.
pub fn transitive_orientation(g: &Graph) -> Result<StrictOrder, Error> {
    let n = g.n();
    let mut remaining = g.clone();
    // out[x] = vertices y with the edge xy oriented x → y
    let mut out = vec![FixedBitSet::with_capacity(n); n];

    let force = |out: &mut Vec<FixedBitSet>,
                     queue: &mut VecDeque<(usize, usize)>,
                     class: &mut Vec<(usize, usize)>,
                     x: usize,
                     z: usize|
     -> Result<(), Error> {
        if out[z].contains(x) {
            return Err(Error::NotComparability(OrientationFailure::Contradiction {
                edge: (x.min(z), x.max(z)),
            }));
        }
        if !out[x].contains(z) {
            out[x].insert(z);
            queue.push_back((x, z));
            class.push((x, z));
        }
        Ok(())
    };

    loop {
        let Some(seed) = lowest_edge(&remaining) else { break };
        let mut queue = VecDeque::new();
        let mut class = Vec::new();
        force(&mut out, &mut queue, &mut class, seed.0, seed.1)?;
        while let Some((x, y)) = queue.pop_front() {
            // shared tail: xz ∈ E_rem, yz ∉ E_rem ⇒ x → z
            let mut tails = remaining.neighbors(x).clone();
            tails.difference_with(remaining.neighbors(y));
            tails.remove(y);
            for z in tails.ones() {
                force(&mut out, &mut queue, &mut class, x, z)?;
            }
            // shared head: zy ∈ E_rem, zx ∉ E_rem ⇒ z → y
            let mut heads = remaining.neighbors(y).clone();
            heads.difference_with(remaining.neighbors(x));
            heads.remove(x);
            for z in heads.ones() {
                force(&mut out, &mut queue, &mut class, z, y)?;
            }
        }
        for (x, y) in class {
            remaining.remove_edge(x, y);
        }
    }

    debug_assert_eq!(out.iter().map(|r| r.count_ones(..)).sum::<usize>(), g.m());
    // Forcing succeeded on every class; the union must now be transitive.
    for a in 0..n {
        for b in out[a].ones() {
            if !out[b].is_subset(&out[a]) {
                let c = out[b].ones().find(|&c| !out[a].contains(c)).unwrap();
                return Err(Error::NotComparability(OrientationFailure::NotTransitive {
                    a,
                    b,
                    c,
                }));
            }
        }
    }
    Ok(StrictOrder::from_rows(n, out))
}

fn lowest_edge(g: &Graph) -> Option<(usize, usize)> {
    for u in 0..g.n() {
        if let Some(v) = g.neighbors(u).ones().next() {
            if u < v {
                return Some((u, v));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn p4_orientation() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]);
        let o = transitive_orientation(&p4).unwrap();
        assert_eq!(o.pairs(), vec![(0, 1), (2, 1), (2, 3)]);
        assert_eq!(o.incomparability_graph(), p4.complement());
    }

    #[test]
    fn c5_is_not_a_comparability_graph() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert!(matches!(
            transitive_orientation(&c5),
            Err(Error::NotComparability(OrientationFailure::Contradiction { .. }))
        ));
    }

    #[test]
    fn complete_graph_orients_to_a_total_order() {
        let mut k4 = Graph::new(4);
        for u in 0..4 {
            for v in u + 1..4 {
                k4.add_edge(u, v);
            }
        }
        let o = transitive_orientation(&k4).unwrap();
        assert!(o.is_total());
        assert_eq!(o.pairs(), vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn empty_and_tiny_graphs() {
        assert_eq!(transitive_orientation(&Graph::new(0)).unwrap().n(), 0);
        assert_eq!(transitive_orientation(&Graph::new(3)).unwrap().size(), 0);
        let e = Graph::from_edges(2, &[(0, 1)]);
        assert_eq!(transitive_orientation(&e).unwrap().pairs(), vec![(0, 1)]);
    }

    /// Independent check: some orientation mask of the edges is transitive.
    fn orientable_by_enumeration(g: &Graph) -> bool {
        let edges = g.edges();
        let m = edges.len();
        'mask: for mask in 0u64..(1 << m) {
            let mut lt = vec![FixedBitSet::with_capacity(g.n()); g.n()];
            for (i, &(u, v)) in edges.iter().enumerate() {
                let (a, b) = if mask & (1 << i) != 0 { (v, u) } else { (u, v) };
                lt[a].insert(b);
            }
            for a in 0..g.n() {
                for b in lt[a].ones() {
                    if !lt[b].is_subset(&lt[a]) {
                        continue 'mask;
                    }
                }
            }
            return true;
        }
        false
    }

    #[test]
    fn matches_orientation_enumeration_for_all_graphs_up_to_5() {
        for n in 0..=5usize {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u64..(1 << pairs.len()) {
                let mut g = Graph::new(n);
                for (i, &(u, v)) in pairs.iter().enumerate() {
                    if mask & (1 << i) != 0 {
                        g.add_edge(u, v);
                    }
                }
                let ours = transitive_orientation(&g);
                assert_eq!(ours.is_ok(), orientable_by_enumeration(&g), "n={n} mask={mask}");
                if let Ok(o) = ours {
                    // comparabilities are exactly the edges
                    assert_eq!(o.incomparability_graph(), g.complement(), "n={n} mask={mask}");
                }
            }
        }
    }
}
