//! Conflict graph `H*` of a split graph `H`, its 2-coloring, and the
//! literal assignment on edges of `H`.
//!
//! Vertices of `H*` are the edges of `H`; two edges are adjacent iff they
//! are in conflict (their endpoints close an alternating 4-cycle). An edge
//! with at least one conflict partner is *committed*. A proper 2-coloring
//! χ₀ of `H*` plus one boolean variable per component turns every proper
//! 2-coloring of `H*` into a truth assignment and back.

use crate::error::Error;
use crate::formulas::Lit;
use crate::graph::{EdgeId, SplitGraph};

/// Conflict graph: adjacency between `EdgeId`s of one host, plus its
/// partition into connected components. Vertex indices follow the
/// canonical edge order of the host; component ids are ordered by each
/// component's smallest `EdgeId`.
#[derive(Debug, Clone)]
pub struct ConflictGraph {
    pub vertices: Vec<EdgeId>,
    /// Sorted neighbor lists over vertex indices; symmetric.
    pub adj: Vec<Vec<usize>>,
    /// Component id per vertex.
    pub component: Vec<usize>,
    pub components: usize,
}

impl ConflictGraph {
    /// Index of an edge in `vertices`, if present.
    pub fn index_of(&self, e: EdgeId) -> Option<usize> {
        self.vertices.binary_search(&e).ok()
    }

    /// An edge is committed iff it has a conflict partner.
    pub fn is_committed(&self, idx: usize) -> bool {
        !self.adj[idx].is_empty()
    }

    /// Number of conflict pairs.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }
}

/// 2-coloring of the vertices of a conflict graph, by vertex index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn flipped(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<Color>,
}

/// One literal per edge of the host: all edges of component `i` carry
/// variable `x_i`, positive on the red side of χ₀.
#[derive(Debug, Clone)]
pub struct LiteralAssignment {
    /// Variable count; one variable per component of `H*`.
    pub k: usize,
    pub vertices: Vec<EdgeId>,
    pub lits: Vec<Lit>,
    pub committed: Vec<bool>,
}

impl LiteralAssignment {
    pub fn idx(&self, e: EdgeId) -> Option<usize> {
        self.vertices.binary_search(&e).ok()
    }

    pub fn lit(&self, e: EdgeId) -> Lit {
        self.lits[self.idx(e).expect("literal lookup on a non-edge")]
    }

    pub fn is_committed(&self, e: EdgeId) -> bool {
        self.committed[self.idx(e).expect("committedness lookup on a non-edge")]
    }
}

/// Build `H*`. A conflict between two cross edges `u_i v_j`, `u_p v_q`
/// exists iff `u_i v_q` and `u_p v_j` are both cross non-edges, so every
/// conflict corresponds to exactly one unordered pair of base-complement
/// edges; iterating those pairs enumerates the adjacency without
/// duplicates. Clique edges are never in conflict with anything.
pub fn conflict_graph(h: &SplitGraph) -> ConflictGraph {
    let base = h.base();
    let vertices = h.edge_ids();
    let index = |e: EdgeId| vertices.binary_search(&e).expect("edge of the host");
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); vertices.len()];
    let missing = base.bipartite_complement().edges();
    for (a, &(i, q)) in missing.iter().enumerate() {
        for &(p, j) in &missing[a + 1..] {
            if i == p || q == j {
                continue;
            }
            if base.has_edge(i, j) && base.has_edge(p, q) {
                let e1 = index(EdgeId::cross(i, j));
                let e2 = index(EdgeId::cross(p, q));
                adj[e1].push(e2);
                adj[e2].push(e1);
            }
        }
    }
    for row in &mut adj {
        row.sort_unstable();
        debug_assert!(row.windows(2).all(|w| w[0] != w[1]), "duplicate conflict");
    }
    let m = missing.len();
    debug_assert!(adj.iter().map(Vec::len).sum::<usize>() / 2 <= m * m.saturating_sub(1) / 2);

    let mut component = vec![usize::MAX; vertices.len()];
    let mut components = 0;
    for start in 0..vertices.len() {
        if component[start] != usize::MAX {
            continue;
        }
        let mut queue = vec![start];
        component[start] = components;
        while let Some(x) = queue.pop() {
            for &y in &adj[x] {
                if component[y] == usize::MAX {
                    component[y] = components;
                    queue.push(y);
                }
            }
        }
        components += 1;
    }
    ConflictGraph { vertices, adj, component, components }
}

/// Proper 2-coloring via BFS, seeding the smallest edge of every component
/// red. Fails with an odd conflict cycle witness iff `H*` is not bipartite.
pub fn two_color(cg: &ConflictGraph) -> Result<Coloring, Error> {
    let n = cg.vertices.len();
    let mut colors: Vec<Option<Color>> = vec![None; n];
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    for start in 0..n {
        if colors[start].is_some() {
            continue;
        }
        colors[start] = Some(Color::Red);
        let mut queue = std::collections::VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            let cx = colors[x].unwrap();
            for &y in &cg.adj[x] {
                match colors[y] {
                    None => {
                        colors[y] = Some(cx.flipped());
                        parent[y] = x;
                        depth[y] = depth[x] + 1;
                        queue.push_back(y);
                    }
                    Some(cy) if cy == cx => {
                        return Err(Error::OddCycle {
                            cycle: odd_cycle(cg, &parent, &depth, x, y),
                        });
                    }
                    Some(_) => {}
                }
            }
        }
    }
    Ok(Coloring { colors: colors.into_iter().map(Option::unwrap).collect() })
}

/// Close the BFS-tree paths of two same-colored conflict partners into an
/// odd cycle of `EdgeId`s.
fn odd_cycle(cg: &ConflictGraph, parent: &[usize], depth: &[usize], x: usize, y: usize) -> Vec<EdgeId> {
    let (mut a, mut b) = (x, y);
    let mut from_x = vec![a];
    let mut from_y = vec![b];
    while depth[a] > depth[b] {
        a = parent[a];
        from_x.push(a);
    }
    while depth[b] > depth[a] {
        b = parent[b];
        from_y.push(b);
    }
    while a != b {
        a = parent[a];
        b = parent[b];
        from_x.push(a);
        from_y.push(b);
    }
    from_y.pop();
    from_y.reverse();
    from_x.extend(from_y);
    debug_assert!(from_x.len() % 2 == 1, "conflict cycle witness must be odd");
    from_x.into_iter().map(|i| cg.vertices[i]).collect()
}

/// One variable per component: edge `e` of component `i` gets `x_i`,
/// positive iff χ₀ colors it red. Adjacent (conflicting) edges therefore
/// carry complementary literals.
pub fn assign_literals(cg: &ConflictGraph, chi0: &Coloring) -> LiteralAssignment {
    let lits = (0..cg.vertices.len())
        .map(|idx| Lit { var: cg.component[idx], positive: chi0.colors[idx] == Color::Red })
        .collect();
    let committed = (0..cg.vertices.len()).map(|idx| cg.is_committed(idx)).collect();
    LiteralAssignment { k: cg.components, vertices: cg.vertices.clone(), lits, committed }
}

/// The coloring χ_τ: component `i` keeps χ₀'s colors when `x_i = 0` and
/// flips them when `x_i = 1`. Equivalently, `e` is blue iff `ℓ_e` is true
/// under `tau`.
pub fn assignment_to_coloring(
    la: &LiteralAssignment,
    chi0: &Coloring,
    tau: &crate::formulas::TruthAssignment,
) -> Coloring {
    let colors = (0..la.lits.len())
        .map(|idx| {
            if tau.values[la.lits[idx].var] {
                chi0.colors[idx].flipped()
            } else {
                chi0.colors[idx]
            }
        })
        .collect();
    Coloring { colors }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::domination::build_context;
    use crate::formulas::TruthAssignment;
    use crate::graph::BipartiteGraph;
    use crate::order::StrictOrder;

    fn split(nu: usize, nv: usize, edges: &[(usize, usize)]) -> SplitGraph {
        SplitGraph::new(BipartiteGraph::from_edges(nu, nv, edges))
    }

    /// Adjacency recomputed edge pair by edge pair.
    fn naive_adjacency(h: &SplitGraph) -> Vec<Vec<usize>> {
        let ids = h.edge_ids();
        let mut adj = vec![Vec::new(); ids.len()];
        for i in 0..ids.len() {
            for j in i + 1..ids.len() {
                if h.in_conflict(ids[i], ids[j]).unwrap() {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        adj
    }

    #[test]
    fn conflict_on_2k2_base() {
        let h = split(2, 2, &[(0, 0), (1, 1)]);
        let cg = conflict_graph(&h);
        let e1 = cg.index_of(EdgeId::cross(0, 0)).unwrap();
        let e2 = cg.index_of(EdgeId::cross(1, 1)).unwrap();
        let k = cg.index_of(EdgeId::clique(0, 1)).unwrap();
        assert_eq!(cg.adj[e1], vec![e2]);
        assert_eq!(cg.adj[e2], vec![e1]);
        assert!(cg.adj[k].is_empty(), "clique edges are uncommitted");
        assert_eq!(cg.components, 2);
        assert_eq!(cg.component[e1], cg.component[e2]);
    }

    #[test]
    fn chain_base_has_no_conflicts() {
        let h = split(2, 2, &[(0, 0), (0, 1), (1, 1)]);
        assert!(h.base().is_chain_graph());
        let cg = conflict_graph(&h);
        assert_eq!(cg.edge_count(), 0);
        assert_eq!(cg.components, cg.vertices.len());
    }

    #[test]
    fn adjacency_matches_pairwise_conflict_checks() {
        let hosts = [
            split(2, 2, &[(0, 0), (1, 1)]),
            split(3, 3, &[(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]),
            split(3, 3, &[(0, 0), (1, 1), (2, 2), (0, 1), (1, 2)]),
            split(4, 3, &[(0, 0), (1, 1), (2, 2), (3, 0), (3, 2), (0, 2)]),
            split(3, 4, &[(0, 0), (1, 1), (2, 2), (2, 3), (0, 3)]),
        ];
        for h in hosts {
            assert_eq!(conflict_graph(&h).adj, naive_adjacency(&h));
        }
    }

    #[test]
    fn components_are_ordered_by_smallest_edge() {
        let h = split(3, 3, &[(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]);
        let cg = conflict_graph(&h);
        let mut first_seen = Vec::new();
        for idx in 0..cg.vertices.len() {
            if !first_seen.contains(&cg.component[idx]) {
                first_seen.push(cg.component[idx]);
            }
        }
        assert_eq!(first_seen, (0..cg.components).collect::<Vec<_>>());
    }

    #[test]
    fn diagonal_edges_are_isolated_in_small_contexts() {
        // Every valid order on 3 elements: relations as masks over the 6
        // ordered pairs, kept when they form a strict order.
        let pairs: Vec<(usize, usize)> =
            (0..3).flat_map(|i| (0..3).filter(move |&j| j != i).map(move |j| (i, j))).collect();
        let mut checked = 0;
        for mask in 0u32..64 {
            let rel: Vec<(usize, usize)> =
                pairs.iter().enumerate().filter(|(b, _)| mask >> b & 1 == 1).map(|(_, &p)| p).collect();
            let Ok(p) = StrictOrder::new(3, &rel) else { continue };
            let ctx = build_context(&p);
            let cg = conflict_graph(&ctx.h);
            for e in ctx.e0.iter() {
                assert!(!cg.is_committed(cg.index_of(e).unwrap()), "diagonal edge committed");
            }
            checked += 1;
        }
        assert!(checked > 10);
    }

    #[test]
    fn two_color_edgeless_is_all_red() {
        let h = split(2, 2, &[(0, 0), (0, 1), (1, 1)]);
        let cg = conflict_graph(&h);
        let chi0 = two_color(&cg).unwrap();
        assert!(chi0.colors.iter().all(|&c| c == Color::Red));
    }

    #[test]
    fn two_color_splits_a_conflict_pair() {
        let h = split(2, 2, &[(0, 0), (1, 1)]);
        let cg = conflict_graph(&h);
        let chi0 = two_color(&cg).unwrap();
        let e1 = cg.index_of(EdgeId::cross(0, 0)).unwrap();
        let e2 = cg.index_of(EdgeId::cross(1, 1)).unwrap();
        assert_eq!(chi0.colors[e1], Color::Red, "smallest edge of the component seeds red");
        assert_eq!(chi0.colors[e2], Color::Blue);
    }

    #[test]
    fn two_color_reports_an_odd_conflict_cycle() {
        // Identity matching on (3,3): the three cross edges are pairwise in
        // conflict, a conflict triangle.
        let h = split(3, 3, &[(0, 0), (1, 1), (2, 2)]);
        let cg = conflict_graph(&h);
        let Err(Error::OddCycle { cycle }) = two_color(&cg) else {
            panic!("expected an odd cycle")
        };
        assert!(cycle.len() % 2 == 1 && cycle.len() >= 3);
        for w in 0..cycle.len() {
            let next = cycle[(w + 1) % cycle.len()];
            assert!(h.in_conflict(cycle[w], next).unwrap(), "witness step not a conflict");
        }
    }

    #[test]
    fn literals_follow_components_and_colors() {
        let h = split(2, 2, &[(0, 0), (1, 1)]);
        let cg = conflict_graph(&h);
        let la = assign_literals(&cg, &two_color(&cg).unwrap());
        assert_eq!(la.k, 2);
        assert_eq!(la.lit(EdgeId::cross(0, 0)), Lit { var: 0, positive: true });
        assert_eq!(la.lit(EdgeId::cross(1, 1)), Lit { var: 0, positive: false });
        assert_eq!(la.lit(EdgeId::clique(0, 1)), Lit { var: 1, positive: true });
        assert!(la.is_committed(EdgeId::cross(0, 0)));
        assert!(!la.is_committed(EdgeId::clique(0, 1)));
    }

    #[test]
    fn conflicting_edges_get_complementary_literals() {
        let h = split(3, 3, &[(0, 1), (0, 2), (1, 0), (1, 2), (2, 0), (2, 1)]);
        let cg = conflict_graph(&h);
        let la = assign_literals(&cg, &two_color(&cg).unwrap());
        for x in 0..cg.vertices.len() {
            for &y in &cg.adj[x] {
                assert_eq!(la.lits[x].var, la.lits[y].var);
                assert_ne!(la.lits[x].positive, la.lits[y].positive);
            }
        }
    }

    #[test]
    fn coloring_from_assignment_flips_whole_components() {
        let h = split(2, 2, &[(0, 0), (1, 1)]);
        let cg = conflict_graph(&h);
        let chi0 = two_color(&cg).unwrap();
        let la = assign_literals(&cg, &chi0);
        let zeros = TruthAssignment { values: vec![false; la.k] };
        assert_eq!(assignment_to_coloring(&la, &chi0, &zeros), chi0);

        let mut tau = zeros.clone();
        tau.values[0] = true;
        let flipped = assignment_to_coloring(&la, &chi0, &tau);
        let e1 = cg.index_of(EdgeId::cross(0, 0)).unwrap();
        let e2 = cg.index_of(EdgeId::cross(1, 1)).unwrap();
        let k = cg.index_of(EdgeId::clique(0, 1)).unwrap();
        assert_eq!(flipped.colors[e1], chi0.colors[e1].flipped());
        assert_eq!(flipped.colors[e2], chi0.colors[e2].flipped());
        assert_eq!(flipped.colors[k], chi0.colors[k]);
        // Properness is preserved under any component flip.
        for x in 0..cg.vertices.len() {
            for &y in &cg.adj[x] {
                assert_ne!(flipped.colors[x], flipped.colors[y]);
            }
        }
    }
}
