//! Red/blue edge colorings and the goodness check: a coloring is
//! (F,H)-good iff its red subgraph is F-free and its blue subgraph is
//! H-free.

use serde::{Deserialize, Serialize};

use crate::error::GraphError;
use crate::graph::{Edge, Graph, Vertex};
use crate::iso;

/// A total red/blue assignment on the edges of a graph. The coloring owns
/// a copy of its graph; `red[i]` refers to edge id `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    graph: Graph,
    red: Vec<bool>,
}

#[derive(Serialize, Deserialize)]
struct ColoringFile {
    graph: String,
    red: Vec<(Vertex, Vertex)>,
}

impl EdgeColoring {
    /// All-blue coloring.
    pub fn all_blue(graph: Graph) -> EdgeColoring {
        let m = graph.edge_count();
        EdgeColoring { graph, red: vec![false; m] }
    }

    pub fn from_red_flags(graph: Graph, red: Vec<bool>) -> EdgeColoring {
        assert_eq!(graph.edge_count(), red.len());
        EdgeColoring { graph, red }
    }

    pub fn from_red_edges(graph: Graph, red_edges: &[Edge]) -> Result<EdgeColoring, GraphError> {
        let mut red = vec![false; graph.edge_count()];
        for &e in red_edges {
            red[graph.require_edge(e)?] = true;
        }
        Ok(EdgeColoring { graph, red })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn is_red_id(&self, id: usize) -> bool {
        self.red[id]
    }

    pub fn is_red(&self, e: Edge) -> bool {
        self.graph.edge_id(e).map(|i| self.red[i]).unwrap_or(false)
    }

    pub fn red_flags(&self) -> &[bool] {
        &self.red
    }

    pub fn red_edges(&self) -> Vec<Edge> {
        self.graph
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.red[*i])
            .map(|(_, e)| *e)
            .collect()
    }

    /// Number of red edges incident to `v`.
    pub fn red_degree(&self, v: Vertex) -> usize {
        self.graph
            .neighbors(v)
            .iter()
            .filter(|&&w| self.is_red(Edge::new(v, w)))
            .count()
    }

    /// Vertices not incident to any red edge.
    pub fn free_vertices(&self) -> Vec<Vertex> {
        (0..self.graph.vertex_count())
            .filter(|&v| self.red_degree(v) == 0)
            .collect()
    }

    pub fn is_free(&self, v: Vertex) -> bool {
        self.red_degree(v) == 0
    }

    /// True iff the red subgraph contains no copy of `f` and the blue
    /// subgraph contains no copy of `h`. Star-shaped `f` reduces to a red
    /// degree bound.
    pub fn is_good(&self, f: &Graph, h: &Graph) -> bool {
        if let Some(n) = f.as_star() {
            if (0..self.graph.vertex_count()).any(|v| self.red_degree(v) >= n) {
                return false;
            }
        } else {
            if iso::contains_copy_masked(&self.graph, f, &self.red) {
                return false;
            }
        }
        let blue: Vec<bool> = self.red.iter().map(|r| !r).collect();
        !iso::contains_copy_masked(&self.graph, h, &blue)
    }

    /// Serializes as `{"graph": <edge-list text>, "red": [[u,v],...]}`;
    /// blue is implicit.
    pub fn to_json(&self) -> String {
        let file = ColoringFile {
            graph: self.graph.to_edge_list_text(),
            red: self.red_edges().iter().map(|e| (e.0, e.1)).collect(),
        };
        serde_json::to_string_pretty(&file).expect("coloring serialization")
    }

    pub fn from_json(text: &str) -> Result<EdgeColoring, GraphError> {
        let file: ColoringFile = serde_json::from_str(text).map_err(|e| GraphError::Parse {
            line: 0,
            msg: format!("coloring json: {e}"),
        })?;
        let graph = Graph::from_edge_list_text(&file.graph)?;
        let red: Vec<Edge> = file.red.iter().map(|&(u, v)| Edge::new(u, v)).collect();
        EdgeColoring::from_red_edges(graph, &red)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> Graph {
        Graph::from_name(name).unwrap()
    }

    #[test]
    fn goodness_examples() {
        let all_blue_p3 = EdgeColoring::all_blue(g("p3"));
        assert!(all_blue_p3.is_good(&g("p3"), &g("c4")));

        let all_blue_c4 = EdgeColoring::all_blue(g("c4"));
        assert!(!all_blue_c4.is_good(&g("p3"), &g("c4")));

        let k3_one_red =
            EdgeColoring::from_red_edges(g("k3"), &[Edge::new(0, 1)]).unwrap();
        assert!(k3_one_red.is_good(&g("p3"), &g("k3")));
        // Brute force over all 8 colorings confirms this one is good.
        let k3 = g("k3");
        for mask in 0u8..8 {
            let red: Vec<bool> = (0..3).map(|i| mask & (1 << i) != 0).collect();
            let c = EdgeColoring::from_red_flags(k3.clone(), red);
            let expect = {
                let reds = c.red_edges();
                let red_p3_free = (0..3).all(|v| c.red_degree(v) <= 1);
                let blue_k3_free = reds.len() >= 1;
                red_p3_free && blue_k3_free
            };
            assert_eq!(c.is_good(&g("p3"), &g("k3")), expect, "mask {mask:08b}");
        }
    }

    #[test]
    fn free_vertices_and_red_degree() {
        let all_blue = EdgeColoring::all_blue(g("p3"));
        assert_eq!(all_blue.free_vertices(), vec![0, 1, 2]);
        assert_eq!(all_blue.red_degree(1), 0);

        let p3_red = EdgeColoring::from_red_edges(g("p3"), &[Edge::new(0, 1)]).unwrap();
        assert_eq!(p3_red.free_vertices(), vec![2]);

        // Red perfect matching on K4 leaves nobody free.
        let k4pm =
            EdgeColoring::from_red_edges(g("k4"), &[Edge::new(0, 1), Edge::new(2, 3)]).unwrap();
        assert!(k4pm.free_vertices().is_empty());

        let star = EdgeColoring::from_red_flags(g("k1_3"), vec![true; 3]);
        assert_eq!(star.red_degree(0), 3);
        let c4red = EdgeColoring::from_red_flags(g("c4"), vec![true; 4]);
        for v in 0..4 {
            assert_eq!(c4red.red_degree(v), 2);
        }
        // free iff red_degree == 0
        for v in 0..4 {
            assert_eq!(c4red.is_free(v), c4red.red_degree(v) == 0);
        }
    }

    #[test]
    fn json_roundtrip() {
        let c = EdgeColoring::from_red_edges(g("c4"), &[Edge::new(1, 2)]).unwrap();
        let back = EdgeColoring::from_json(&c.to_json()).unwrap();
        assert_eq!(back, c);
    }
}
