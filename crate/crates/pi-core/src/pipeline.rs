//! End-to-end recognition. A graph is a PI graph iff its complement has a
//! transitive orientation `P` such that the conflict graph of the split
//! host is bipartite and the two formulas are jointly satisfiable; a
//! strict order is linear-interval under the same gates minus the
//! orientation step. Every acceptance carries a representation that is
//! re-verified against the input; every refusal names its stage and a
//! machine-checkable witness.

use crate::conflict::{assign_literals, conflict_graph, two_color};
use crate::cover::{cover_from_assignment, verify_cover, LinearIntervalCover};
use crate::domination::build_context;
use crate::error::{Error, OrientationFailure};
use crate::formulas::{build_phi1, build_phi2, solve_phi};
use crate::graph::{EdgeId, Graph};
use crate::order::StrictOrder;
use crate::orientation::transitive_orientation;
use crate::representation::{
    build_representation, orders_from_cover, verify_representation, PiRepresentation,
    RealizerPair,
};

/// Where recognition refused, with a witness auditable without rerunning
/// the pipeline.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RefusalStage {
    /// The complement admits no transitive orientation.
    NotCocomparability { failure: OrientationFailure },
    /// The conflict graph has an odd cycle (listed as its edge-vertices).
    ConflictGraphNotBipartite { cycle: Vec<EdgeId> },
    /// Both literals of this variable fall into one strongly connected
    /// component of the implication graph.
    FormulaUnsatisfiable { variable: usize },
}

impl RefusalStage {
    pub fn name(&self) -> &'static str {
        match self {
            RefusalStage::NotCocomparability { .. } => "not_cocomparability",
            RefusalStage::ConflictGraphNotBipartite { .. } => "conflict_graph_not_bipartite",
            RefusalStage::FormulaUnsatisfiable { .. } => "formula_unsatisfiable",
        }
    }

    /// The witness as a JSON object, auditable without this library.
    pub fn witness_json(&self) -> String {
        fn edge(e: &EdgeId) -> String {
            match e {
                EdgeId::Cross { u, v } => format!("{{\"kind\":\"cross\",\"ends\":[{u},{v}]}}"),
                EdgeId::Clique { a, b } => format!("{{\"kind\":\"clique\",\"ends\":[{a},{b}]}}"),
            }
        }
        match self {
            RefusalStage::NotCocomparability { failure } => match failure {
                OrientationFailure::Contradiction { edge: (u, v) } => {
                    format!("{{\"kind\":\"forced_contradiction\",\"edge\":[{u},{v}]}}")
                }
                OrientationFailure::NotTransitive { a, b, c } => {
                    format!("{{\"kind\":\"not_transitive\",\"chain\":[{a},{b},{c}]}}")
                }
            },
            RefusalStage::ConflictGraphNotBipartite { cycle } => {
                let edges: Vec<String> = cycle.iter().map(edge).collect();
                format!("{{\"kind\":\"odd_cycle\",\"cycle\":[{}]}}", edges.join(","))
            }
            RefusalStage::FormulaUnsatisfiable { variable } => {
                format!("{{\"kind\":\"unsatisfiable_variable\",\"variable\":{variable}}}")
            }
        }
    }
}

/// Everything an acceptance certifies: the drawn representation, the
/// realizer pair behind it, and the cover behind that.
#[derive(Debug, Clone)]
pub struct Acceptance {
    pub representation: PiRepresentation,
    pub realizer: RealizerPair,
    pub cover: LinearIntervalCover,
}

#[derive(Debug, Clone)]
pub enum RecognitionOutcome {
    Pi(Box<Acceptance>),
    NotPi(RefusalStage),
}

impl RecognitionOutcome {
    pub fn is_pi(&self) -> bool {
        matches!(self, RecognitionOutcome::Pi(_))
    }
}

/// Acceptance at the order level: the realizer pair and its cover.
#[derive(Debug, Clone)]
pub struct OrderAcceptance {
    pub realizer: RealizerPair,
    pub cover: LinearIntervalCover,
}

#[derive(Debug, Clone)]
pub enum OrderOutcome {
    LinearInterval(Box<OrderAcceptance>),
    /// Never [`RefusalStage::NotCocomparability`]: the order is given.
    NotLinearInterval(RefusalStage),
}

impl OrderOutcome {
    pub fn is_linear_interval(&self) -> bool {
        matches!(self, OrderOutcome::LinearInterval(_))
    }
}

/// The shared tail of both recognizers: context, bipartite gate, formula
/// gate, cover, realizer. The cover and the intersection
/// `P₁ ∩ P₂ = P` are checked before anything is returned.
fn order_acceptance(p: &StrictOrder) -> Result<OrderAcceptance, RefusalStage> {
    let ctx = build_context(p);
    let cg = conflict_graph(&ctx.h);
    let chi0 = match two_color(&cg) {
        Ok(c) => c,
        Err(Error::OddCycle { cycle }) => {
            return Err(RefusalStage::ConflictGraphNotBipartite { cycle })
        }
        Err(e) => unreachable!("two_color: {e}"),
    };
    let la = assign_literals(&cg, &chi0);
    let phi1 = build_phi1(&ctx.h, &cg, &la);
    let phi2 = build_phi2(&ctx.h, &la);
    let tau = match solve_phi(&phi1, &phi2, &la) {
        Ok(t) => t,
        Err(Error::Unsatisfiable { variable }) => {
            return Err(RefusalStage::FormulaUnsatisfiable { variable })
        }
        Err(e) => unreachable!("solve_phi: {e}"),
    };
    let cover = cover_from_assignment(&ctx, &la, &chi0, &tau);
    assert!(verify_cover(&ctx, &cover), "pipeline produced an invalid cover");
    let realizer = orders_from_cover(&ctx, &cover);
    Ok(OrderAcceptance { realizer, cover })
}

/// Decide whether `g` is a PI graph. On acceptance the returned
/// representation has already been verified to draw exactly `g`.
pub fn recognize_graph(g: &Graph) -> RecognitionOutcome {
    let p = match transitive_orientation(&g.complement()) {
        Ok(p) => p,
        Err(Error::NotComparability(failure)) => {
            return RecognitionOutcome::NotPi(RefusalStage::NotCocomparability { failure })
        }
        Err(e) => unreachable!("transitive_orientation: {e}"),
    };
    let acc = match order_acceptance(&p) {
        Ok(acc) => acc,
        Err(stage) => return RecognitionOutcome::NotPi(stage),
    };
    let representation = build_representation(&acc.realizer)
        .expect("the second realizer order is an interval order");
    assert!(
        verify_representation(&representation, g),
        "accepted representation does not draw the input"
    );
    RecognitionOutcome::Pi(Box::new(Acceptance {
        representation,
        realizer: acc.realizer,
        cover: acc.cover,
    }))
}

/// Decide whether `p` is a linear-interval order.
pub fn recognize_order(p: &StrictOrder) -> OrderOutcome {
    match order_acceptance(p) {
        Ok(acc) => OrderOutcome::LinearInterval(Box::new(acc)),
        Err(stage) => OrderOutcome::NotLinearInterval(stage),
    }
}

/// Trapezoid-graph membership: the complement is a comparability graph
/// and the conflict graph is bipartite.
pub fn is_trapezoid(g: &Graph) -> bool {
    let Ok(p) = transitive_orientation(&g.complement()) else {
        return false;
    };
    let ctx = build_context(&p);
    two_color(&conflict_graph(&ctx.h)).is_ok()
}
