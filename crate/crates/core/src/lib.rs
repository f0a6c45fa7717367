//! Computational toolkit for graph Ramsey arrowing: exact (F,H)-arrowing
//! deciders, the polynomial (P3,K3) algorithm, the edge-pair-linkage
//! invariant, and a verified-gadget forge with a (2,2)-3SAT reduction
//! pipeline.

pub mod coloring;
pub mod decide;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod iso;
pub mod p3k3;
pub mod search;

pub use coloring::EdgeColoring;
pub use decide::{arrows, check_tk_equivalence, find_good_coloring, prune_non_h_edges, Decision};
pub use error::{FormulaError, GadgetError, GraphError};
pub use graph::{combine_on_edge, Edge, Family, Graph, LinkageValue, Vertex};
pub use search::{Budget, Outcome, SearchOptions, SearchResult};

pub mod formula;
pub mod gadget;

pub use formula::{generate_formulas, parse_formula, sat_oracle, Formula223, Literal};
pub use gadget::{Gadget, GadgetKind, Role, Verification, VerificationLog};
