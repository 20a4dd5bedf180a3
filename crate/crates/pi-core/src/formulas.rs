//! Boolean formulas deciding linear-interval coverability of a split host:
//! clause pairs forbidding monochromatic alternating 6-cycles (3-CNF), a
//! 2-CNF layer tying edge colors across the non-edges of `E′ = E_H ∖ E₀`,
//! and a solver for their conjunction that reduces to plain 2-SAT plus a
//! local repair pass.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use crate::conflict::{ConflictGraph, LiteralAssignment};
use crate::error::Error;
use crate::graph::{EdgeId, SplitGraph};

/// A boolean literal over variables `x_0 .. x_{k-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Lit {
    pub var: usize,
    pub positive: bool,
}

impl Lit {
    pub fn negated(self) -> Lit {
        Lit { var: self.var, positive: !self.positive }
    }
}

/// Clause pair `{α, α′}` where `α′` is the literal-wise negation of `α`.
/// The witness edges carry exactly `α`'s literals and close an alternating
/// 6-cycle in the host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phi1Pair {
    pub alpha: [Lit; 3],
    pub witness: [EdgeId; 3],
}

impl Phi1Pair {
    pub fn alpha_prime(&self) -> [Lit; 3] {
        self.alpha.map(Lit::negated)
    }
}

/// The 3-CNF side: satisfied iff no pair has all-equal literal values,
/// i.e. iff the induced coloring has no monochromatic alternating 6-cycle.
#[derive(Debug, Clone, Default)]
pub struct Phi1 {
    pub pairs: Vec<Phi1Pair>,
}

/// One 2-CNF clause `(ℓ_e ∨ ℓ_{e′})`; `lits[i]` is the literal of
/// `witness[i]`. `prime` iff some witness edge is uncommitted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Phi2Clause {
    pub lits: [Lit; 2],
    pub witness: [EdgeId; 2],
    pub prime: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Phi2 {
    pub clauses: Vec<Phi2Clause>,
}

/// Total assignment of the `k` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruthAssignment {
    pub values: Vec<bool>,
}

impl TruthAssignment {
    pub fn eval(&self, l: Lit) -> bool {
        self.values[l.var] == l.positive
    }
}

/// Canonical representative of the unordered pair `{α, α′}`.
fn canon_pair(alpha: [Lit; 3]) -> [Lit; 3] {
    let mut a = alpha;
    a.sort_unstable();
    let mut b = alpha.map(Lit::negated);
    b.sort_unstable();
    a.min(b)
}

fn same_pair(a: [Lit; 3], b: [Lit; 3]) -> bool {
    canon_pair(a) == canon_pair(b)
}

/// Build the clause pairs. For every cross non-edge `ab` of the host and
/// every pair of committed edges `bc`, `da` meeting a committed edge `cd`,
/// the cycle `a b c · · d` closes into an alternating 6-cycle through a
/// conflict partner of `cd`, giving the pair `α = (ℓ_bc ∨ ℓ̄_cd ∨ ℓ_da)`,
/// `α′ = ¬α`, unless two of the literals would be complementary. Distinct
/// pairs never share a variable, so marking variables deduplicates
/// losslessly; the emitted set equals the one found by enumerating all
/// alternating 6-cycles directly.
pub fn build_phi1(h: &SplitGraph, cg: &ConflictGraph, la: &LiteralAssignment) -> Phi1 {
    let base = h.base();
    let committed = |u: usize, v: usize| {
        base.has_edge(u, v) && la.is_committed(EdgeId::cross(u, v))
    };
    let mut pair_of_var: Vec<Option<usize>> = vec![None; la.k];
    let mut pairs: Vec<Phi1Pair> = Vec::new();
    for (i, j) in base.bipartite_complement().edges() {
        let b_side: Vec<usize> = (0..base.nu()).filter(|&x| committed(x, j)).collect();
        let a_side: Vec<usize> = (0..base.nv()).filter(|&y| committed(i, y)).collect();
        for &x in &b_side {
            for &y in &a_side {
                if !committed(x, y) {
                    continue;
                }
                let (bc, cd, da) =
                    (EdgeId::cross(x, j), EdgeId::cross(x, y), EdgeId::cross(i, y));
                let (lbc, lcd, lda) = (la.lit(bc), la.lit(cd), la.lit(da));
                if lbc == lcd || lcd == lda || lbc == lda.negated() {
                    continue;
                }
                let alpha = [lbc, lcd.negated(), lda];
                let vars = [lbc.var, lcd.var, lda.var];
                if let Some(at) = vars.iter().find_map(|&v| pair_of_var[v]) {
                    for &v in &vars {
                        assert_eq!(pair_of_var[v], Some(at), "pairs sharing a variable differ");
                    }
                    assert!(same_pair(alpha, pairs[at].alpha), "pairs sharing a variable differ");
                    continue;
                }
                // The middle literal is realized by cd's smallest conflict
                // partner, completing the witness cycle.
                let cd_idx = cg.index_of(cd).expect("committed edge is a conflict vertex");
                let pq = cg.vertices[cg.adj[cd_idx][0]];
                assert_eq!(la.lit(pq), lcd.negated());
                for &v in &vars {
                    pair_of_var[v] = Some(pairs.len());
                }
                pairs.push(Phi1Pair { alpha, witness: [bc, pq, da] });
            }
        }
    }
    pairs.sort_by(|a, b| a.witness.cmp(&b.witness));
    assert!(3 * pairs.len() <= la.k, "more clause pairs than variables permit");
    Phi1 { pairs }
}

/// Build the 2-CNF layer: for every cross pair `u_i v_j ∉ E′` (missing or
/// diagonal) and every middle index `t` with `u_i v_t, u_t v_j ∈ E′`, emit
/// `(ℓ_{u_i v_t} ∨ ℓ_{u_t v_j})`: the two edges may not both be red.
pub fn build_phi2(h: &SplitGraph, la: &LiteralAssignment) -> Phi2 {
    let base = h.base();
    let n = base.nu();
    assert_eq!(n, base.nv(), "square host required: E′ removes the diagonal");
    let in_eprime = |a: usize, b: usize| a != b && base.has_edge(a, b);
    let mut clauses = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if in_eprime(i, j) {
                continue;
            }
            for t in 0..n {
                if !(in_eprime(i, t) && in_eprime(t, j)) {
                    continue;
                }
                let (e, ep) = (EdgeId::cross(i, t), EdgeId::cross(t, j));
                clauses.push(Phi2Clause {
                    lits: [la.lit(e), la.lit(ep)],
                    witness: [e, ep],
                    prime: !(la.is_committed(e) && la.is_committed(ep)),
                });
            }
        }
    }
    clauses.sort_by(|a, b| a.witness.cmp(&b.witness));
    assert!(clauses.len() <= n * (n + base.bipartite_complement().m()));
    Phi2 { clauses }
}

/// Unit consequences through the clause pairs: for each unit `(ℓ)` over a
/// variable of some pair, written `(ℓ ∨ m₁ ∨ m₂) ∧ (ℓ̄ ∨ m̄₁ ∨ m̄₂)`, the
/// second clause reduces to `(m̄₁ ∨ m̄₂)`. Pairs must be variable-disjoint
/// with three distinct variables each; each variable thus matches at most
/// one pair.
pub fn build_phi0(pairs: &[[Lit; 3]], units: &[Lit]) -> Vec<[Lit; 2]> {
    let mut of_var: BTreeMap<usize, usize> = BTreeMap::new();
    for (at, alpha) in pairs.iter().enumerate() {
        for l in alpha {
            assert!(of_var.insert(l.var, at).is_none(), "pairs must be variable-disjoint");
        }
    }
    let mut out: BTreeSet<[Lit; 2]> = BTreeSet::new();
    for &u in units {
        let Some(&at) = of_var.get(&u.var) else { continue };
        let alpha = pairs[at];
        let clause = if alpha.contains(&u) { alpha } else { alpha.map(Lit::negated) };
        debug_assert!(clause.contains(&u));
        let mut rest = clause.into_iter().filter(|&l| l != u).map(Lit::negated);
        let mut two = [rest.next().unwrap(), rest.next().unwrap()];
        two.sort_unstable();
        out.insert(two);
    }
    out.into_iter().collect()
}

/// 2-SAT via the implication graph and its strongly connected components.
/// A unit clause is passed as a repeated literal. Components are numbered
/// in reverse topological order with a deterministic scan, so unconstrained
/// variables come out false.
pub fn solve_2sat(clauses: &[[Lit; 2]], k: usize) -> Result<TruthAssignment, Error> {
    let node = |l: Lit| 2 * l.var + l.positive as usize;
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); 2 * k];
    for c in clauses {
        assert!(c[0].var < k && c[1].var < k, "literal out of range");
        out[node(c[0].negated())].push(node(c[1]));
        out[node(c[1].negated())].push(node(c[0]));
    }

    const UNSET: usize = usize::MAX;
    let n = 2 * k;
    let mut index = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut comp = vec![UNSET; n];
    let mut on_stack = vec![false; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut next_index = 0;
    let mut comps = 0;
    let mut frames: Vec<(usize, usize)> = Vec::new();
    for root in 0..n {
        if index[root] != UNSET {
            continue;
        }
        frames.push((root, 0));
        while let Some(&(v, child)) = frames.last() {
            if index[v] == UNSET {
                index[v] = next_index;
                low[v] = next_index;
                next_index += 1;
                stack.push(v);
                on_stack[v] = true;
            }
            if let Some(&w) = out[v].get(child) {
                frames.last_mut().unwrap().1 += 1;
                if index[w] == UNSET {
                    frames.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
            } else {
                if low[v] == index[v] {
                    loop {
                        let w = stack.pop().unwrap();
                        on_stack[w] = false;
                        comp[w] = comps;
                        if w == v {
                            break;
                        }
                    }
                    comps += 1;
                }
                frames.pop();
                if let Some(&(u, _)) = frames.last() {
                    low[u] = low[u].min(low[v]);
                }
            }
        }
    }

    for v in 0..k {
        if comp[2 * v] == comp[2 * v + 1] {
            return Err(Error::Unsatisfiable { variable: v });
        }
    }
    // True iff the positive node sits deeper toward the sinks.
    let values = (0..k).map(|v| comp[2 * v + 1] < comp[2 * v]).collect();
    Ok(TruthAssignment { values })
}

/// Decide the conjunction of both formulas and produce a satisfying
/// assignment if one exists:
///
/// 1. clauses with an uncommitted literal are satisfied up front by making
///    every uncommitted edge blue (those variables occur nowhere else);
/// 2. duplicate literals are eliminated; pairs dropping below three
///    distinct literals migrate to the 2-CNF side, tautologies drop;
/// 3. units spawn their pair consequences ([`build_phi0`]);
/// 4. 2-SAT decides the committed 2-CNF part; unsatisfiable here means
///    unsatisfiable overall;
/// 5. a violated pair (all-equal literal values) is repaired by flipping
///    its smallest variable, which fixes both clauses and, by variable
///    disjointness, disturbs nothing else.
///
/// The result is verified against every original clause before returning.
pub fn solve_phi(
    phi1: &Phi1,
    phi2: &Phi2,
    la: &LiteralAssignment,
) -> Result<TruthAssignment, Error> {
    let mut seen_var = vec![false; la.k];
    for pair in &phi1.pairs {
        let a = pair.alpha;
        for s in 0..3 {
            for t in s + 1..3 {
                assert!(a[s] != a[t].negated(), "clause with complementary literals");
            }
        }
        let mut vars = a.map(|l| l.var).to_vec();
        vars.sort_unstable();
        vars.dedup();
        for v in vars {
            assert!(!seen_var[v], "clause pairs share a variable");
            seen_var[v] = true;
        }
    }

    let mut two: Vec<[Lit; 2]> = Vec::new();
    let mut core: Vec<[Lit; 3]> = Vec::new();
    for pair in &phi1.pairs {
        let mut d: Vec<Lit> = Vec::with_capacity(3);
        for l in pair.alpha {
            if !d.contains(&l) {
                d.push(l);
            }
        }
        match d.len() {
            3 => core.push(pair.alpha),
            2 => {
                two.push([d[0], d[1]]);
                two.push([d[0].negated(), d[1].negated()]);
            }
            _ => {
                two.push([d[0], d[0]]);
                two.push([d[0].negated(), d[0].negated()]);
            }
        }
    }
    for cl in &phi2.clauses {
        if cl.prime || cl.lits[0] == cl.lits[1].negated() {
            continue;
        }
        two.push(cl.lits);
    }

    let units: Vec<Lit> = two.iter().filter(|c| c[0] == c[1]).map(|c| c[0]).collect();
    two.extend(build_phi0(&core, &units));
    let mut tau = solve_2sat(&two, la.k)?;

    for idx in 0..la.lits.len() {
        if !la.committed[idx] {
            debug_assert!(la.lits[idx].positive, "trivial components seed red");
            tau.values[la.lits[idx].var] = true;
        }
    }

    for alpha in &core {
        let vals = alpha.map(|l| tau.eval(l));
        if vals == [true; 3] || vals == [false; 3] {
            let v = alpha.iter().map(|l| l.var).min().unwrap();
            tau.values[v] = !tau.values[v];
        }
    }

    for pair in &phi1.pairs {
        assert!(pair.alpha.iter().any(|&l| tau.eval(l)), "clause pair left unsatisfied");
        assert!(pair.alpha.iter().any(|&l| !tau.eval(l)), "clause pair left unsatisfied");
    }
    for cl in &phi2.clauses {
        assert!(cl.lits.iter().any(|&l| tau.eval(l)), "2-CNF clause left unsatisfied");
    }
    Ok(tau)
}

/// DIMACS CNF text of the conjunction: both clauses of every pair, then
/// the 2-CNF clauses, as 1-based signed variable ids.
pub fn to_dimacs(phi1: &Phi1, phi2: &Phi2, k: usize) -> String {
    let signed = |l: Lit| {
        let v = l.var as i64 + 1;
        if l.positive { v } else { -v }
    };
    let mut s = String::new();
    let _ = writeln!(s, "p cnf {} {}", k, 2 * phi1.pairs.len() + phi2.clauses.len());
    for pair in &phi1.pairs {
        for clause in [pair.alpha, pair.alpha_prime()] {
            let _ = writeln!(
                s,
                "{} {} {} 0",
                signed(clause[0]),
                signed(clause[1]),
                signed(clause[2])
            );
        }
    }
    for cl in &phi2.clauses {
        let _ = writeln!(s, "{} {} 0", signed(cl.lits[0]), signed(cl.lits[1]));
    }
    s
}
