//! Recognition of simple-triangle graphs and linear-interval orders.
//!
//! A simple-triangle (PI) graph is the intersection graph of triangles that
//! have one apex on a line `L1` and the opposite side on a parallel line
//! `L2`. Equivalently, the PI graphs are exactly the incomparability graphs
//! of linear-interval orders: intersections `P₁ ∩ P₂` of a linear order
//! `P₁` with an interval order `P₂`.
//!
//! The crate decides membership in both languages and certifies its answer
//! in both directions:
//!
//! * acceptance comes with an explicit triangle representation that is
//!   re-checked edge-by-edge against the input, and
//! * rejection names the pipeline stage that refused, with a
//!   machine-checkable witness (odd conflict cycle, unsatisfiable variable,
//!   failed orientation, ...).
//!
//! Entry points: [`pipeline::recognize_graph`] and
//! [`pipeline::recognize_order`]. The `oracle` module contains slow,
//! independent deciders used to cross-validate the fast pipeline on small
//! instances.

pub mod conflict;
pub mod cover;
pub mod domination;
pub mod error;
pub mod formulas;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod order;
pub mod orientation;
pub mod pipeline;
pub mod representation;

pub use error::{Error, OrientationFailure};
pub use graph::{BipartiteGraph, EdgeId, EdgeSubset, Graph, SplitGraph};
pub use io::{format_graph, format_order, parse_graph, parse_order};
pub use oracle::{
    all_graphs, all_posets, oracle_has_cover, oracle_is_linear_interval, oracle_is_pi_graph,
    random_graph, random_pi_instance, random_poset, PiOracleReport,
};
pub use order::StrictOrder;
pub use pipeline::{
    is_trapezoid, recognize_graph, recognize_order, Acceptance, OrderAcceptance, OrderOutcome,
    RecognitionOutcome, RefusalStage,
};
pub use representation::{PiRepresentation, RealizerPair};
