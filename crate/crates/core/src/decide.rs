//! Arrowing decisions built on the search engine: good-coloring search,
//! the arrowing predicate with certificates, edge pruning by copy
//! membership, and the tailed-complete equivalence check.

use serde::{Deserialize, Serialize};

use crate::coloring::EdgeColoring;
use crate::graph::{Edge, Family, Graph};
use crate::iso;
use crate::search::{solve, Budget, Outcome, SearchOptions, SearchResult};

/// Searches for an (f,h)-good coloring of `g`. `Exhausted` is a proof
/// that none exists; `OutOfBudget` is a non-answer.
pub fn find_good_coloring(g: &Graph, f: &Graph, h: &Graph, budget: Budget) -> SearchResult {
    solve(g, f, h, budget, &SearchOptions::default())
}

/// Three-valued arrowing decision with a certificate on the negative
/// side.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    Arrows,
    DoesNotArrow(EdgeColoring),
    OutOfBudget,
}

impl Decision {
    pub fn answer(&self) -> Option<bool> {
        match self {
            Decision::Arrows => Some(true),
            Decision::DoesNotArrow(_) => Some(false),
            Decision::OutOfBudget => None,
        }
    }
}

/// An (G, F, H) instance with its decision. When the graph does not
/// arrow, the certificate is a good coloring; when it arrows there is
/// nothing to attach.
#[derive(Clone, Debug)]
pub struct ArrowingInstance {
    pub g: Graph,
    pub f_pattern: Graph,
    pub h_pattern: Graph,
    pub result: Option<bool>,
    pub certificate: Option<EdgeColoring>,
    pub nodes: u64,
}

/// Decides g -> (f, h): true iff every red/blue coloring of g contains a
/// red f or a blue h.
pub fn arrows(g: &Graph, f: &Graph, h: &Graph, budget: Budget) -> (Decision, u64) {
    let r = find_good_coloring(g, f, h, budget);
    let d = match r.outcome {
        Outcome::Found(c) => Decision::DoesNotArrow(c),
        Outcome::Exhausted => Decision::Arrows,
        Outcome::OutOfBudget => Decision::OutOfBudget,
    };
    (d, r.nodes)
}

/// Convenience wrapper building the full instance record.
pub fn decide_instance(g: &Graph, f: &Graph, h: &Graph, budget: Budget) -> ArrowingInstance {
    let (d, nodes) = arrows(g, f, h, budget);
    let (result, certificate) = match d {
        Decision::Arrows => (Some(true), None),
        Decision::DoesNotArrow(c) => (Some(false), Some(c)),
        Decision::OutOfBudget => (None, None),
    };
    ArrowingInstance {
        g: g.clone(),
        f_pattern: f.clone(),
        h_pattern: h.clone(),
        result,
        certificate,
        nodes,
    }
}

/// Result of iterated removal of edges that lie in no copy of `h`.
#[derive(Clone, Debug)]
pub struct Pruned {
    pub graph: Graph,
    pub removed: Vec<Edge>,
}

/// Iteratively removes every edge lying in no copy of `h` until a
/// fixpoint. Removing such an edge preserves the (P3,h)-arrowing
/// decision: it can always be colored blue.
pub fn prune_non_h_edges(g: &Graph, h: &Graph) -> Pruned {
    let mut current = g.clone();
    let mut removed = Vec::new();
    loop {
        if current.edge_count() == 0 {
            break;
        }
        let copies = iso::enumerate_copies(&current, h);
        let mut covered = vec![false; current.edge_count()];
        for c in &copies {
            for &e in c {
                covered[e] = true;
            }
        }
        let stale: Vec<usize> =
            (0..current.edge_count()).filter(|&i| !covered[i]).collect();
        if stale.is_empty() {
            break;
        }
        removed.extend(stale.iter().map(|&i| current.edges()[i]));
        current = current.remove_edges(&stale);
    }
    removed.sort();
    Pruned { graph: current, removed }
}

/// Agreement report for arrows(g, P3, TK_n) versus arrows(g, P3, K_n).
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TkEquivalenceReport {
    pub n: usize,
    pub tk_arrows: Option<bool>,
    pub k_arrows: Option<bool>,
    /// None when either side ran out of budget (inconclusive).
    pub agree: Option<bool>,
}

/// Decides both (P3, TK_n)- and (P3, K_n)-arrowing for `g` and reports
/// whether they agree. Disagreement signals an implementation bug.
pub fn check_tk_equivalence(g: &Graph, n: usize, budget: Budget) -> TkEquivalenceReport {
    assert!(n >= 3);
    let p3 = Graph::family(Family::Path, 3).unwrap();
    let tkn = Graph::family(Family::TailedComplete, n).unwrap();
    let kn = Graph::family(Family::Complete, n).unwrap();
    let (tk, _) = arrows(g, &p3, &tkn, budget);
    let (k, _) = arrows(g, &p3, &kn, budget);
    let tk_arrows = tk.answer();
    let k_arrows = k.answer();
    let agree = match (tk_arrows, k_arrows) {
        (Some(a), Some(b)) => Some(a == b),
        _ => None,
    };
    TkEquivalenceReport { n, tk_arrows, k_arrows, agree }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> Graph {
        Graph::from_name(name).unwrap()
    }

    #[test]
    fn arrows_examples() {
        let (d, _) = arrows(&g("p3"), &g("p3"), &g("c4"), Budget::DEFAULT);
        assert_eq!(d.answer(), Some(false), "all blue is good");

        let (d, _) = arrows(&g("k6"), &g("k3"), &g("k3"), Budget::DEFAULT);
        assert_eq!(d.answer(), Some(true));

        let (d, _) = arrows(&g("k4"), &g("k1_3"), &g("k3"), Budget::DEFAULT);
        match d {
            Decision::DoesNotArrow(c) => {
                assert!(c.is_good(&g("k1_3"), &g("k3")));
            }
            other => panic!("expected a certificate, got {other:?}"),
        }
        // The classic witness: red Hamiltonian C4, blue perfect matching.
        let cert = EdgeColoring::from_red_edges(
            g("k4"),
            &[Edge::new(0, 1), Edge::new(1, 2), Edge::new(2, 3), Edge::new(0, 3)],
        )
        .unwrap();
        assert!(cert.is_good(&g("k1_3"), &g("k3")));
    }

    #[test]
    fn prune_examples() {
        // C4 plus a pendant edge: the pendant is in no C4.
        let gp = Graph::new(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (1, 4)]).unwrap();
        let p = prune_non_h_edges(&gp, &g("c4"));
        assert_eq!(p.removed, vec![Edge::new(1, 4)]);
        assert_eq!(p.graph.edge_count(), 4);

        // Two triangles sharing a vertex contain no C4 at all.
        let bowtie =
            Graph::new(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let p = prune_non_h_edges(&bowtie, &g("c4"));
        assert_eq!(p.graph.edge_count(), 0);
        assert_eq!(p.removed.len(), 6);
    }

    #[test]
    fn tk_equivalence_spots() {
        let r = check_tk_equivalence(&g("k5"), 3, Budget::DEFAULT);
        assert_eq!(r.tk_arrows, Some(true));
        assert_eq!(r.k_arrows, Some(true));
        assert_eq!(r.agree, Some(true));

        let r = check_tk_equivalence(&g("c5"), 3, Budget::DEFAULT);
        assert_eq!(r.tk_arrows, Some(false));
        assert_eq!(r.k_arrows, Some(false));
        assert_eq!(r.agree, Some(true));
    }
}
