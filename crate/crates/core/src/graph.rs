//! Simple undirected graphs with dense integer vertex ids, the named
//! families used throughout the toolkit, graph surgery, edge pair linkage
//! and connectivity tests.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GraphError;

pub type Vertex = usize;

/// An undirected edge, stored with the smaller endpoint first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    pub fn new(u: Vertex, v: Vertex) -> Edge {
        if u <= v {
            Edge(u, v)
        } else {
            Edge(v, u)
        }
    }

    pub fn touches(&self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.touches(other.0) || self.touches(other.1)
    }

    pub fn other(&self, v: Vertex) -> Vertex {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

impl fmt::Debug for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

/// Edge pair linkage: the number of edges adjacent to both edges of a
/// disjoint pair, or `Infinite` when the pair shares a vertex. Finite
/// values never exceed 4.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum LinkageValue {
    Finite(u32),
    Infinite,
}

impl LinkageValue {
    pub fn is_infinite(&self) -> bool {
        matches!(self, LinkageValue::Infinite)
    }
}

impl PartialOrd for LinkageValue {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LinkageValue {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use LinkageValue::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinite) => std::cmp::Ordering::Less,
            (Infinite, Finite(_)) => std::cmp::Ordering::Greater,
            (Infinite, Infinite) => std::cmp::Ordering::Equal,
        }
    }
}

impl fmt::Display for LinkageValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LinkageValue::Finite(k) => write!(f, "{k}"),
            LinkageValue::Infinite => write!(f, "inf"),
        }
    }
}

/// The named graph families.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Path,
    Cycle,
    Complete,
    Star,
    CompleteMinusEdge,
    TailedComplete,
}

/// A finite simple undirected graph. Vertices are `0..vertex_count()`;
/// the edge list is kept sorted and duplicate-free. Graphs are immutable
/// after construction; surgery returns fresh graphs together with a
/// vertex mapping so that role bookkeeping survives.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
    labels: BTreeMap<Vertex, String>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, m={}, {:?})", self.n, self.edges.len(), self.edges)
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn new(n: usize, edge_list: &[(Vertex, Vertex)]) -> Result<Graph, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            edges.push(Edge::new(u, v));
        }
        edges.sort();
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
            }
        }
        Ok(Graph::from_sorted(n, edges))
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> Graph {
        let mut adj = vec![Vec::new(); n];
        for e in &edges {
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
        }
        for a in adj.iter_mut() {
            a.sort_unstable();
        }
        Graph { n, edges, adj, labels: BTreeMap::new() }
    }

    /// Constructs one of the named families on `n` vertices. `star` builds
    /// K_{1,n} (n+1 vertices, center 0) and `tailed_complete` builds TK_n
    /// (n+1 vertices, tail vertex n attached to vertex 0).
    pub fn family(kind: Family, n: usize) -> Result<Graph, GraphError> {
        let min = match kind {
            Family::Path | Family::Complete | Family::Star => 1,
            Family::CompleteMinusEdge => 2,
            Family::Cycle | Family::TailedComplete => 3,
        };
        if n < min {
            let family = match kind {
                Family::Path => "path",
                Family::Cycle => "cycle",
                Family::Complete => "complete",
                Family::Star => "star",
                Family::CompleteMinusEdge => "complete_minus_edge",
                Family::TailedComplete => "tailed_complete",
            };
            return Err(GraphError::SizeOutOfRange { family, min, got: n });
        }
        let mut edges = Vec::new();
        let verts;
        match kind {
            Family::Path => {
                verts = n;
                for i in 1..n {
                    edges.push((i - 1, i));
                }
            }
            Family::Cycle => {
                verts = n;
                for i in 0..n {
                    edges.push((i, (i + 1) % n));
                }
            }
            Family::Complete => {
                verts = n;
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
            }
            Family::Star => {
                verts = n + 1;
                for v in 1..=n {
                    edges.push((0, v));
                }
            }
            Family::CompleteMinusEdge => {
                verts = n;
                for u in 0..n {
                    for v in u + 1..n {
                        if !(u == 0 && v == 1) {
                            edges.push((u, v));
                        }
                    }
                }
            }
            Family::TailedComplete => {
                verts = n + 1;
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
                edges.push((0, n));
            }
        }
        Graph::new(verts, &edges)
    }

    /// Parses a pattern shorthand such as `k4`, `c5`, `p3`, `j4`, `tk3`
    /// or `k1_3`.
    pub fn from_name(name: &str) -> Result<Graph, GraphError> {
        let s = name.trim().to_ascii_lowercase();
        let err = || GraphError::UnknownName(name.to_string());
        if let Some(rest) = s.strip_prefix("k1_") {
            let n: usize = rest.parse().map_err(|_| err())?;
            return Graph::family(Family::Star, n);
        }
        if let Some(rest) = s.strip_prefix("tk") {
            let n: usize = rest.parse().map_err(|_| err())?;
            return Graph::family(Family::TailedComplete, n);
        }
        let (kind, rest) = match s.chars().next() {
            Some('p') => (Family::Path, &s[1..]),
            Some('c') => (Family::Cycle, &s[1..]),
            Some('k') => (Family::Complete, &s[1..]),
            Some('j') => (Family::CompleteMinusEdge, &s[1..]),
            _ => return Err(err()),
        };
        let n: usize = rest.parse().map_err(|_| err())?;
        Graph::family(kind, n)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        if u >= self.n || v >= self.n || u == v {
            return false;
        }
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of an edge in the sorted edge list.
    pub fn edge_id(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn require_edge(&self, e: Edge) -> Result<usize, GraphError> {
        self.edge_id(e).ok_or(GraphError::MissingEdge(e.0, e.1))
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(|s| s.as_str())
    }

    pub fn set_label(&mut self, v: Vertex, label: impl Into<String>) {
        self.labels.insert(v, label.into());
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    /// Edge pair linkage of a pair of distinct edges: infinite when they
    /// share a vertex, otherwise the number of edges adjacent to both
    /// (always at most 4).
    pub fn epl(&self, e: Edge, f: Edge) -> Result<LinkageValue, GraphError> {
        self.require_edge(e)?;
        self.require_edge(f)?;
        if e.shares_vertex(&f) {
            return Ok(LinkageValue::Infinite);
        }
        let mut count = 0;
        for &a in &[e.0, e.1] {
            for &b in &[f.0, f.1] {
                if self.has_edge(a, b) {
                    count += 1;
                }
            }
        }
        Ok(LinkageValue::Finite(count))
    }

    /// Minimum edge pair linkage over all unordered edge pairs. Graphs in
    /// which every pair of edges shares a vertex (stars, K3, a single
    /// edge) report `Infinite`.
    pub fn mepl(&self) -> Result<LinkageValue, GraphError> {
        if self.edges.is_empty() {
            return Err(GraphError::EmptyEdgeSet);
        }
        let mut best = LinkageValue::Infinite;
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                let v = self.epl(self.edges[i], self.edges[j])?;
                if v < best {
                    best = v;
                    if best == LinkageValue::Finite(0) {
                        return Ok(best);
                    }
                }
            }
        }
        Ok(best)
    }

    /// Identifies vertices `u` and `v`. The merged vertex keeps `u`'s slot
    /// (after compaction); the returned map sends every old vertex to its
    /// new id, with `map[v] == map[u]`.
    pub fn identify_vertices(
        &self,
        u: Vertex,
        v: Vertex,
    ) -> Result<(Graph, Vec<Vertex>), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange(u, self.n));
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        if u == v {
            return Err(GraphError::IdenticalVertices(u));
        }
        let mut map = vec![0; self.n];
        let mut next = 0;
        for w in 0..self.n {
            if w == v {
                continue;
            }
            map[w] = next;
            next += 1;
        }
        map[v] = map[u];
        let mut edges: Vec<Edge> = self
            .edges
            .iter()
            .filter_map(|e| {
                let (a, b) = (map[e.0], map[e.1]);
                if a == b {
                    None // loop created by identifying adjacent vertices
                } else {
                    Some(Edge::new(a, b))
                }
            })
            .collect();
        edges.sort();
        edges.dedup();
        let mut g = Graph::from_sorted(self.n - 1, edges);
        for (w, lab) in &self.labels {
            g.labels.entry(map[*w]).or_insert_with(|| lab.clone());
        }
        Ok((g, map))
    }

    /// Disjoint union; the second graph's vertices are shifted by
    /// `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| Edge(e.0 + shift, e.1 + shift)));
        edges.sort();
        let mut g = Graph::from_sorted(self.n + other.n, edges);
        g.labels = self.labels.clone();
        for (w, lab) in &other.labels {
            g.labels.insert(w + shift, lab.clone());
        }
        g
    }

    /// Removes a set of edges (by id), keeping the vertex set.
    pub fn remove_edges(&self, ids: &[usize]) -> Graph {
        let mut keep = vec![true; self.edges.len()];
        for &i in ids {
            keep[i] = false;
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(i, _)| keep[*i])
            .map(|(_, e)| *e)
            .collect();
        let mut g = Graph::from_sorted(self.n, edges);
        g.labels = self.labels.clone();
        g
    }

    /// Drops isolated vertices, compacting ids. Returns the new graph and
    /// the old-to-new vertex map (isolated vertices map to `usize::MAX`).
    pub fn drop_isolated(&self) -> (Graph, Vec<Vertex>) {
        let mut map = vec![usize::MAX; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if !self.adj[v].is_empty() {
                map[v] = next;
                next += 1;
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(map[e.0], map[e.1]))
            .collect();
        let mut g = Graph::from_sorted(next, edges);
        for (w, lab) in &self.labels {
            if map[*w] != usize::MAX {
                g.labels.insert(map[*w], lab.clone());
            }
        }
        (g, map)
    }

    /// Adds a fresh pendant vertex attached to `v`; returns the new graph
    /// and the pendant vertex id (the old ids are unchanged).
    pub fn with_pendant(&self, v: Vertex) -> Result<(Graph, Vertex), GraphError> {
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange(v, self.n));
        }
        let mut edges = self.edges.clone();
        edges.push(Edge::new(v, self.n));
        edges.sort();
        let mut g = Graph::from_sorted(self.n + 1, edges);
        g.labels = self.labels.clone();
        Ok((g, self.n))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    fn connected_avoiding(&self, removed: &[bool]) -> bool {
        let start = match (0..self.n).find(|&v| !removed[v]) {
            Some(v) => v,
            None => return true,
        };
        let mut seen = vec![false; self.n];
        let mut stack = vec![start];
        seen[start] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] && !removed[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        (0..self.n).all(|v| removed[v] || seen[v])
    }

    /// True iff the graph has more than `k` vertices and stays connected
    /// after removing any vertex set of size less than `k`.
    pub fn is_k_connected(&self, k: usize) -> bool {
        if self.n <= k {
            return false;
        }
        if !self.is_connected() {
            return false;
        }
        if k <= 1 {
            return true;
        }
        // Removing any set of exactly k-1 vertices is enough: if some
        // smaller set disconnected the graph, it extends to a bad set of
        // size k-1.
        let mut removed = vec![false; self.n];
        self.k_connected_rec(&mut removed, 0, k - 1)
    }

    fn k_connected_rec(&self, removed: &mut [bool], next: Vertex, left: usize) -> bool {
        if left == 0 {
            return self.connected_avoiding(removed);
        }
        if next + left > self.n {
            return true;
        }
        removed[next] = true;
        let picked = self.k_connected_rec(removed, next + 1, left - 1);
        removed[next] = false;
        picked && self.k_connected_rec(removed, next + 1, left)
    }

    /// If the graph is a star K_{1,n} (including K_2 = K_{1,1}), returns n.
    pub fn as_star(&self) -> Option<usize> {
        if self.n < 2 || self.edges.len() != self.n - 1 || !self.is_connected() {
            return None;
        }
        let leaves = (0..self.n).filter(|&v| self.degree(v) == 1).count();
        let centers = (0..self.n).filter(|&v| self.degree(v) == self.n - 1).count();
        if self.n == 2 {
            return Some(1);
        }
        if leaves == self.n - 1 && centers == 1 {
            Some(self.n - 1)
        } else {
            None
        }
    }

    /// Serializes to the edge-list text format: `n m` on the first line,
    /// then one `u v` line per edge in sorted order.
    pub fn to_edge_list_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for e in &self.edges {
            out.push_str(&format!("{} {}\n", e.0, e.1));
        }
        out
    }

    /// Parses the edge-list text format. Blank lines and lines starting
    /// with `#` are ignored.
    pub fn from_edge_list_text(text: &str) -> Result<Graph, GraphError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut it = line.split_whitespace();
            let parse = |tok: Option<&str>| -> Result<usize, GraphError> {
                tok.and_then(|t| t.parse().ok()).ok_or(GraphError::Parse {
                    line: idx + 1,
                    msg: format!("expected two integers, got {raw:?}"),
                })
            };
            let a = parse(it.next())?;
            let b = parse(it.next())?;
            if it.next().is_some() {
                return Err(GraphError::Parse {
                    line: idx + 1,
                    msg: format!("trailing tokens in {raw:?}"),
                });
            }
            if header.is_none() {
                header = Some((a, b));
            } else {
                edges.push((a, b));
            }
        }
        let (n, m) = header.ok_or(GraphError::Parse { line: 0, msg: "missing header".into() })?;
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 0,
                msg: format!("header promises {m} edges, found {}", edges.len()),
            });
        }
        Graph::new(n, &edges)
    }
}

/// Result of identifying one edge across two disjoint copies of `h`
/// (the combined graph plus the embeddings of both copies).
#[derive(Clone, Debug)]
pub struct CombinedOnEdge {
    pub graph: Graph,
    /// Old-vertex -> new-vertex map for the first copy.
    pub first: Vec<Vertex>,
    /// Old-vertex -> new-vertex map for the second copy.
    pub second: Vec<Vertex>,
}

/// Takes two disjoint copies of `h` and identifies the edge `e` across
/// them (endpoint with endpoint, in order). The result has
/// `2|V(h)| - 2` vertices and `2|E(h)| - 1` edges.
pub fn combine_on_edge(h: &Graph, e: Edge) -> Result<CombinedOnEdge, GraphError> {
    combine_on_edge_oriented(h, e, false)
}

/// As [`combine_on_edge`], but optionally identifying the edge with its
/// orientation flipped in the second copy.
pub fn combine_on_edge_oriented(
    h: &Graph,
    e: Edge,
    flip: bool,
) -> Result<CombinedOnEdge, GraphError> {
    h.require_edge(e)?;
    let n = h.vertex_count();
    let union = h.disjoint_union(h);
    let (u2, v2) = if flip { (e.1 + n, e.0 + n) } else { (e.0 + n, e.1 + n) };
    let (g1, m1) = union.identify_vertices(e.0, u2)?;
    let (g2, m2) = g1.identify_vertices(m1[e.1], m1[v2])?;
    let first: Vec<Vertex> = (0..n).map(|v| m2[m1[v]]).collect();
    let second: Vec<Vertex> = (0..n).map(|v| m2[m1[v + n]]).collect();
    Ok(CombinedOnEdge { graph: g2, first, second })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> Graph {
        Graph::from_name(name).unwrap()
    }

    #[test]
    fn families() {
        let k4 = g("k4");
        assert_eq!(k4.vertex_count(), 4);
        assert_eq!(k4.edge_count(), 6);

        let tk3 = g("tk3");
        assert_eq!(tk3.vertex_count(), 4);
        assert_eq!(tk3.edge_count(), 4);
        let deg1: Vec<_> = (0..4).filter(|&v| tk3.degree(v) == 1).collect();
        assert_eq!(deg1.len(), 1, "TK_n has exactly one tail vertex");

        let j4 = g("j4");
        assert_eq!(j4.vertex_count(), 4);
        assert_eq!(j4.edge_count(), 5);

        let star = g("k1_5");
        assert_eq!(star.vertex_count(), 6);
        assert_eq!(star.edge_count(), 5);

        assert!(matches!(
            Graph::family(Family::Cycle, 2),
            Err(GraphError::SizeOutOfRange { family: "cycle", min: 3, got: 2 })
        ));
        assert!(Graph::family(Family::TailedComplete, 2).is_err());
        assert!(Graph::family(Family::CompleteMinusEdge, 1).is_err());
    }

    #[test]
    fn epl_values() {
        let p4 = g("p4");
        let e = Edge::new(0, 1);
        let f = Edge::new(2, 3);
        assert_eq!(p4.epl(e, f).unwrap(), LinkageValue::Finite(1));

        let k3 = g("k3");
        assert_eq!(
            k3.epl(Edge::new(0, 1), Edge::new(1, 2)).unwrap(),
            LinkageValue::Infinite
        );

        let k4 = g("k4");
        assert_eq!(
            k4.epl(Edge::new(0, 1), Edge::new(2, 3)).unwrap(),
            LinkageValue::Finite(4)
        );

        assert!(p4.epl(e, Edge::new(0, 3)).is_err());
    }

    #[test]
    fn mepl_values() {
        assert_eq!(g("k1_5").mepl().unwrap(), LinkageValue::Infinite);
        assert_eq!(g("c4").mepl().unwrap(), LinkageValue::Finite(2));
        assert_eq!(g("k3").mepl().unwrap(), LinkageValue::Infinite);
        assert_eq!(g("c5").mepl().unwrap(), LinkageValue::Finite(1));
        // J4 by independent brute force over all pairs.
        let j4 = g("j4");
        let mut best = LinkageValue::Infinite;
        for i in 0..j4.edge_count() {
            for j in i + 1..j4.edge_count() {
                let v = j4.epl(j4.edges()[i], j4.edges()[j]).unwrap();
                if v < best {
                    best = v;
                }
            }
        }
        assert_eq!(best, LinkageValue::Finite(3));
        assert_eq!(j4.mepl().unwrap(), best);

        let single = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(single.mepl().unwrap(), LinkageValue::Infinite);
        let empty = Graph::new(3, &[]).unwrap();
        assert!(matches!(empty.mepl(), Err(GraphError::EmptyEdgeSet)));
    }

    #[test]
    fn identify() {
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        let (p3, map) = two.identify_vertices(1, 2).unwrap();
        assert_eq!(p3.vertex_count(), 3);
        assert_eq!(p3.edge_count(), 2);
        assert_eq!(map[1], map[2]);
        assert_eq!(p3.degree(map[1]), 2);

        // Two triangles glued at a vertex: the bowtie.
        let k3 = g("k3");
        let union = k3.disjoint_union(&k3);
        let (bowtie, _) = union.identify_vertices(0, 3).unwrap();
        assert_eq!(bowtie.vertex_count(), 5);
        assert_eq!(bowtie.edge_count(), 6);

        // Identifying adjacent vertices of K3 discards the loop.
        let (e, _) = g("k3").identify_vertices(0, 1).unwrap();
        assert_eq!(e.vertex_count(), 2);
        assert_eq!(e.edge_count(), 1);

        assert!(g("k3").identify_vertices(1, 1).is_err());
    }

    #[test]
    fn combine_sizes() {
        for (name, ev, ee) in [("c4", 6, 7), ("k4", 6, 11), ("j4", 6, 9)] {
            let h = g(name);
            for &e in h.edges() {
                let c = combine_on_edge(&h, e).unwrap();
                assert_eq!(c.graph.vertex_count(), ev, "{name} on {e:?}");
                assert_eq!(c.graph.edge_count(), ee, "{name} on {e:?}");
            }
        }
        assert!(combine_on_edge(&g("c4"), Edge::new(0, 2)).is_err());
    }

    #[test]
    fn connectivity() {
        assert!(g("c4").is_k_connected(2));
        assert!(!g("p4").is_k_connected(2));
        assert!(g("k5").is_k_connected(3));
        assert!(!g("k3").is_k_connected(3), "|V| must exceed k");
        assert!(g("p4").is_k_connected(1));
        assert!(!Graph::new(4, &[(0, 1), (2, 3)]).unwrap().is_k_connected(1));
    }

    #[test]
    fn star_detection() {
        assert_eq!(g("p3").as_star(), Some(2));
        assert_eq!(g("k1_3").as_star(), Some(3));
        assert_eq!(g("p2").as_star(), Some(1));
        assert_eq!(g("k4").as_star(), None);
        assert_eq!(g("p4").as_star(), None);
    }

    #[test]
    fn edge_list_roundtrip() {
        let h = g("j4");
        let text = h.to_edge_list_text();
        let back = Graph::from_edge_list_text(&text).unwrap();
        assert_eq!(back, h);

        let with_comments = "# a comment\n\n3 2\n0 1\n# another\n1 2\n";
        let p3 = Graph::from_edge_list_text(with_comments).unwrap();
        assert_eq!(p3, g("p3"));

        assert!(Graph::from_edge_list_text("3 2\n0 1\n").is_err());
        assert!(Graph::from_edge_list_text("2 1\n0 0\n").is_err());
    }
}
