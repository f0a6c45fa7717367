//! The polynomial (P3,K3)-arrowing decider: weight each edge by the
//! number of triangles through it, find an exact maximum-weight matching,
//! and compare its weight with the triangle count. A matching of weight t
//! exists iff the graph has a good coloring (red = matching, blue = rest),
//! since no triangle can contain two matching edges.

use std::convert::Infallible;

use petgraph::graph::UnGraph;
use rustworkx_core::max_weight_matching::max_weight_matching as blossom;

use crate::coloring::EdgeColoring;
use crate::graph::{Edge, Graph};

/// Per-edge triangle counts; `total` is the number of triangles t, and
/// the gammas sum to 3t.
#[derive(Clone, Debug)]
pub struct TriangleWeighting {
    pub gamma: Vec<u64>,
    pub total: u64,
}

/// Counts, for every edge, the triangles it belongs to.
pub fn triangle_weights(g: &Graph) -> TriangleWeighting {
    let mut gamma = vec![0u64; g.edge_count()];
    for (i, e) in g.edges().iter().enumerate() {
        let (mut a, mut b) = (g.neighbors(e.0), g.neighbors(e.1));
        // sorted-list intersection
        let mut count = 0u64;
        while let (Some(&x), Some(&y)) = (a.first(), b.first()) {
            match x.cmp(&y) {
                std::cmp::Ordering::Less => a = &a[1..],
                std::cmp::Ordering::Greater => b = &b[1..],
                std::cmp::Ordering::Equal => {
                    count += 1;
                    a = &a[1..];
                    b = &b[1..];
                }
            }
        }
        gamma[i] = count;
    }
    let sum: u64 = gamma.iter().sum();
    debug_assert_eq!(sum % 3, 0);
    TriangleWeighting { gamma, total: sum / 3 }
}

/// A matching with its total gamma weight.
#[derive(Clone, Debug)]
pub struct WeightedMatching {
    pub edges: Vec<Edge>,
    pub weight: u64,
}

/// Exact maximum-weight matching of (g, gamma), via the blossom
/// algorithm. Zero-weight edges cannot raise the weight and are left out
/// of the solver input.
pub fn max_weight_matching(g: &Graph, w: &TriangleWeighting) -> WeightedMatching {
    let mut pg: UnGraph<(), i128> = UnGraph::default();
    let nodes: Vec<_> = (0..g.vertex_count()).map(|_| pg.add_node(())).collect();
    for (i, e) in g.edges().iter().enumerate() {
        if w.gamma[i] > 0 {
            pg.add_edge(nodes[e.0], nodes[e.1], w.gamma[i] as i128);
        }
    }
    let pairs = blossom(&pg, false, |e| Ok::<i128, Infallible>(*e.weight()), true)
        .unwrap_or_else(|e| match e {});
    let mut edges: Vec<Edge> = pairs.into_iter().map(|(u, v)| Edge::new(u, v)).collect();
    edges.sort();
    edges.dedup();
    let weight = edges
        .iter()
        .map(|e| w.gamma[g.edge_id(*e).expect("matching edge in graph")])
        .sum();
    WeightedMatching { edges, weight }
}

/// Decision record for (P3,K3)-arrowing.
#[derive(Clone, Debug)]
pub struct P3K3Decision {
    pub arrows: bool,
    pub triangles: u64,
    pub matching_weight: u64,
    pub matching: Vec<Edge>,
    /// Good coloring (matching red, rest blue) when the graph does not
    /// arrow.
    pub certificate: Option<EdgeColoring>,
}

/// Decides g -> (P3, K3) in polynomial time: the graph arrows iff no
/// matching reaches total weight t.
pub fn decide_p3_k3(g: &Graph) -> P3K3Decision {
    let w = triangle_weights(g);
    let m = max_weight_matching(g, &w);
    assert!(
        m.weight <= w.total,
        "matching weight {} exceeds triangle count {}",
        m.weight,
        w.total
    );
    let arrows = m.weight < w.total;
    let certificate = if arrows {
        None
    } else {
        let c = EdgeColoring::from_red_edges(g.clone(), &m.edges)
            .expect("matching edges in graph");
        assert!(
            c.is_good(
                &Graph::from_name("p3").unwrap(),
                &Graph::from_name("k3").unwrap()
            ),
            "weight-t matching must be a good coloring"
        );
        Some(c)
    };
    P3K3Decision {
        arrows,
        triangles: w.total,
        matching_weight: m.weight,
        matching: m.edges,
        certificate,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> Graph {
        Graph::from_name(name).unwrap()
    }

    #[test]
    fn weights() {
        let w = triangle_weights(&g("k4"));
        assert!(w.gamma.iter().all(|&x| x == 2));
        assert_eq!(w.total, 4);

        let w = triangle_weights(&g("c5"));
        assert!(w.gamma.iter().all(|&x| x == 0));
        assert_eq!(w.total, 0);

        let w = triangle_weights(&g("k5"));
        assert!(w.gamma.iter().all(|&x| x == 3));
        assert_eq!(w.total, 10);
    }

    #[test]
    fn matching_spots() {
        let k4 = g("k4");
        let m = max_weight_matching(&k4, &triangle_weights(&k4));
        assert_eq!(m.weight, 4);
        let k5 = g("k5");
        let m = max_weight_matching(&k5, &triangle_weights(&k5));
        assert_eq!(m.weight, 6);
    }

    #[test]
    fn decisions() {
        let d = decide_p3_k3(&g("k3"));
        assert!(!d.arrows);
        assert_eq!(d.certificate.unwrap().red_edges().len(), 1);

        let d = decide_p3_k3(&g("k5"));
        assert!(d.arrows);
        assert_eq!((d.triangles, d.matching_weight), (10, 6));

        let d = decide_p3_k3(&g("c5"));
        assert!(!d.arrows);
        assert_eq!(d.triangles, 0);
        assert!(d.matching.is_empty());

        let d = decide_p3_k3(&g("k4"));
        assert!(!d.arrows, "K4 has a weight-4 perfect matching");

        let d = decide_p3_k3(&g("k6"));
        assert!(d.arrows);
    }
}
