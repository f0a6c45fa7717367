//! Exact subgraph-copy enumeration. A copy of a pattern `h` in a host `g`
//! is a (not necessarily induced) subgraph of `g` isomorphic to `h`,
//! identified by its edge set; two copies are distinct iff their edge
//! sets differ.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::graph::{Edge, Graph, Vertex};

/// Matching order for the pattern: optionally two forced seed vertices,
/// then a max-degree start, then repeatedly the vertex with the most
/// already-placed neighbors (ties: larger degree, then smaller id).
/// Patterns here are connected, so every later vertex has at least one
/// placed neighbor.
fn pattern_order(h: &Graph, seed: Option<(Vertex, Vertex)>) -> Vec<Vertex> {
    let n = h.vertex_count();
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    if let Some((a, b)) = seed {
        placed[a] = true;
        placed[b] = true;
        order.push(a);
        order.push(b);
    }
    while order.len() < n {
        let mut best: Option<(usize, usize, std::cmp::Reverse<Vertex>)> = None;
        let mut best_v = 0;
        for v in 0..n {
            if placed[v] {
                continue;
            }
            let anchored = h.neighbors(v).iter().filter(|&&w| placed[w]).count();
            let key = (anchored, h.degree(v), std::cmp::Reverse(v));
            if best.is_none() || key > best.unwrap() {
                best = Some(key);
                best_v = v;
            }
        }
        placed[best_v] = true;
        order.push(best_v);
    }
    order
}

struct Matcher<'a> {
    host: &'a Graph,
    h: &'a Graph,
    order: Vec<Vertex>,
    pos: Vec<usize>,
    /// For order[i]: positions (< i) of the already-placed pattern
    /// neighbors of order[i].
    back_edges: Vec<Vec<usize>>,
    mask: Option<&'a [bool]>,
}

impl<'a> Matcher<'a> {
    fn new(
        host: &'a Graph,
        h: &'a Graph,
        mask: Option<&'a [bool]>,
        seed: Option<(Vertex, Vertex)>,
    ) -> Matcher<'a> {
        let order = pattern_order(h, seed);
        let mut pos = vec![usize::MAX; h.vertex_count()];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let back_edges = order
            .iter()
            .enumerate()
            .map(|(i, &v)| {
                h.neighbors(v)
                    .iter()
                    .filter(|&&w| pos[w] < i)
                    .map(|&w| pos[w])
                    .collect()
            })
            .collect();
        Matcher { host, h, order, pos, back_edges, mask }
    }

    fn edge_allowed(&self, u: Vertex, v: Vertex) -> bool {
        if !self.host.has_edge(u, v) {
            return false;
        }
        match self.mask {
            None => true,
            Some(mask) => mask[self.host.edge_id(Edge::new(u, v)).unwrap()],
        }
    }

    fn host_degree_ok(&self, hv: Vertex, pv: Vertex) -> bool {
        // Cheap degree prune; with an edge mask the full host degree is
        // still a valid upper bound.
        self.host.degree(hv) >= self.h.degree(pv)
    }

    /// Extends a partial map; `image[i]` is the host vertex for
    /// `order[i]`. Calls `found` on every complete embedding; a false
    /// return stops the search.
    fn extend(
        &self,
        image: &mut Vec<Vertex>,
        used: &mut Vec<bool>,
        found: &mut dyn FnMut(&[Vertex]) -> bool,
    ) -> bool {
        let i = image.len();
        if i == self.order.len() {
            return found(image);
        }
        let pv = self.order[i];
        let extend_with = |hv: Vertex,
                           image: &mut Vec<Vertex>,
                           used: &mut Vec<bool>,
                           found: &mut dyn FnMut(&[Vertex]) -> bool,
                           this: &Self|
         -> bool {
            if used[hv] || !this.host_degree_ok(hv, pv) {
                return true;
            }
            if !this.back_edges[i].iter().all(|&b| this.edge_allowed(image[b], hv)) {
                return true;
            }
            image.push(hv);
            used[hv] = true;
            let keep_going = this.extend(image, used, found);
            image.pop();
            used[hv] = false;
            keep_going
        };
        if let Some(&b) = self.back_edges[i].first() {
            let anchor = image[b];
            for &hv in self.host.neighbors(anchor) {
                if !extend_with(hv, image, used, found, self) {
                    return false;
                }
            }
        } else {
            for hv in 0..self.host.vertex_count() {
                if !extend_with(hv, image, used, found, self) {
                    return false;
                }
            }
        }
        true
    }

    fn copy_edge_ids(&self, image: &[Vertex]) -> Vec<usize> {
        let mut ids: Vec<usize> = self
            .h
            .edges()
            .iter()
            .map(|e| {
                self.host
                    .edge_id(Edge::new(image[self.pos[e.0]], image[self.pos[e.1]]))
                    .unwrap()
            })
            .collect();
        ids.sort_unstable();
        ids
    }
}

/// Enumerates all copies of `h` in `g`, as sorted edge-id lists, in
/// lexicographic order. The pattern must have at least one edge.
pub fn enumerate_copies(g: &Graph, h: &Graph) -> Vec<Vec<usize>> {
    enumerate_copies_masked(g, h, None)
}

/// As [`enumerate_copies`], restricted to host edges with `mask[id]` set.
pub fn enumerate_copies_masked(g: &Graph, h: &Graph, mask: Option<&[bool]>) -> Vec<Vec<usize>> {
    assert!(h.edge_count() > 0, "pattern must have at least one edge");
    let matcher = Matcher::new(g, h, mask, None);
    let collect_from = |root: Vertex| {
        let mut set: HashSet<Vec<usize>> = HashSet::new();
        if matcher.host_degree_ok(root, matcher.order[0]) {
            let mut image = vec![root];
            let mut used = vec![false; g.vertex_count()];
            used[root] = true;
            matcher.extend(&mut image, &mut used, &mut |img| {
                set.insert(matcher.copy_edge_ids(img));
                true
            });
        }
        set
    };
    // Fan out over root vertices for large hosts; results are merged into
    // one set, so the outcome is schedule-independent.
    let mut all: HashSet<Vec<usize>> = HashSet::new();
    if g.vertex_count() >= 128 {
        let roots: Vec<Vertex> = (0..g.vertex_count()).collect();
        let sets: Vec<_> = roots.par_iter().map(|&r| collect_from(r)).collect();
        for s in sets {
            all.extend(s);
        }
    } else {
        for r in 0..g.vertex_count() {
            all.extend(collect_from(r));
        }
    }
    let mut copies: Vec<Vec<usize>> = all.into_iter().collect();
    copies.sort();
    copies
}

/// Number of distinct copies of `h` in `g`.
pub fn count_copies(g: &Graph, h: &Graph) -> usize {
    enumerate_copies(g, h).len()
}

/// Enumerates copies but gives up (returning `None`) once more than
/// `limit` distinct copies have been collected.
pub fn enumerate_copies_limited(g: &Graph, h: &Graph, limit: usize) -> Option<Vec<Vec<usize>>> {
    assert!(h.edge_count() > 0, "pattern must have at least one edge");
    let matcher = Matcher::new(g, h, None, None);
    let mut set: HashSet<Vec<usize>> = HashSet::new();
    let mut over = false;
    for root in 0..g.vertex_count() {
        if !matcher.host_degree_ok(root, matcher.order[0]) {
            continue;
        }
        let mut image = vec![root];
        let mut used = vec![false; g.vertex_count()];
        used[root] = true;
        matcher.extend(&mut image, &mut used, &mut |img| {
            set.insert(matcher.copy_edge_ids(img));
            if set.len() > limit {
                over = true;
                return false;
            }
            true
        });
        if over {
            return None;
        }
    }
    let mut copies: Vec<Vec<usize>> = set.into_iter().collect();
    copies.sort();
    Some(copies)
}

/// True iff the host restricted to `mask` contains a copy of `h`.
pub fn contains_copy_masked(g: &Graph, h: &Graph, mask: &[bool]) -> bool {
    if h.edge_count() == 0 {
        return h.vertex_count() <= g.vertex_count();
    }
    let matcher = Matcher::new(g, h, Some(mask), None);
    let mut hit = false;
    for root in 0..g.vertex_count() {
        if !matcher.host_degree_ok(root, matcher.order[0]) {
            continue;
        }
        let mut image = vec![root];
        let mut used = vec![false; g.vertex_count()];
        used[root] = true;
        matcher.extend(&mut image, &mut used, &mut |_| {
            hit = true;
            false
        });
        if hit {
            return true;
        }
    }
    false
}

/// True iff the host restricted to `mask` contains a copy of `h` that
/// uses the host edge `anchor`. The anchor is pinned as the image of each
/// pattern edge in turn, in both orientations.
pub fn contains_copy_through_edge(g: &Graph, h: &Graph, mask: &[bool], anchor: usize) -> bool {
    let ae = g.edges()[anchor];
    if !mask[anchor] {
        return false;
    }
    let mut seen_seeds: HashSet<(Vertex, Vertex)> = HashSet::new();
    for pe in h.edges() {
        for (pa, pb) in [(pe.0, pe.1), (pe.1, pe.0)] {
            if !seen_seeds.insert((pa, pb)) {
                continue;
            }
            let matcher = Matcher::new(g, h, Some(mask), Some((pa, pb)));
            for (ha, hb) in [(ae.0, ae.1), (ae.1, ae.0)] {
                if !matcher.host_degree_ok(ha, pa) || !matcher.host_degree_ok(hb, pb) {
                    continue;
                }
                let mut image = vec![ha, hb];
                let mut used = vec![false; g.vertex_count()];
                used[ha] = true;
                used[hb] = true;
                let mut hit = false;
                matcher.extend(&mut image, &mut used, &mut |_| {
                    hit = true;
                    false
                });
                if hit {
                    return true;
                }
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::combine_on_edge;

    fn g(name: &str) -> Graph {
        Graph::from_name(name).unwrap()
    }

    /// Independent oracle: count distinct copy edge sets via all injective
    /// vertex maps, with no pruning or ordering tricks.
    pub fn count_copies_naive(host: &Graph, h: &Graph) -> usize {
        fn rec(
            host: &Graph,
            h: &Graph,
            map: &mut Vec<Option<Vertex>>,
            used: &mut Vec<bool>,
            v: Vertex,
            out: &mut HashSet<Vec<Edge>>,
        ) {
            if v == h.vertex_count() {
                let ok = h
                    .edges()
                    .iter()
                    .all(|e| host.has_edge(map[e.0].unwrap(), map[e.1].unwrap()));
                if ok {
                    let mut copy: Vec<Edge> = h
                        .edges()
                        .iter()
                        .map(|e| Edge::new(map[e.0].unwrap(), map[e.1].unwrap()))
                        .collect();
                    copy.sort();
                    out.insert(copy);
                }
                return;
            }
            for hv in 0..host.vertex_count() {
                if used[hv] {
                    continue;
                }
                map[v] = Some(hv);
                used[hv] = true;
                rec(host, h, map, used, v + 1, out);
                used[hv] = false;
                map[v] = None;
            }
        }
        let mut out = HashSet::new();
        let mut map = vec![None; h.vertex_count()];
        let mut used = vec![false; host.vertex_count()];
        rec(host, h, &mut map, &mut used, 0, &mut out);
        out.len()
    }

    #[test]
    fn known_counts() {
        assert_eq!(count_copies(&g("k4"), &g("k3")), 4);
        assert_eq!(count_copies(&g("k5"), &g("k3")), 10);
        assert_eq!(count_copies(&g("c5"), &g("k3")), 0);
        assert_eq!(count_copies(&g("k4"), &g("c4")), 3);
        // J4 copies in K4: drop any one of the six edges.
        assert_eq!(count_copies(&g("k4"), &g("j4")), 6);
        assert_eq!(count_copies(&g("c6"), &g("p4")), 6);
    }

    #[test]
    fn combine_copy_counts() {
        let c4 = g("c4");
        for &e in c4.edges() {
            let a = combine_on_edge(&c4, e).unwrap();
            assert_eq!(count_copies(&a.graph, &c4), 2, "A_(C4,{e:?})");
        }
        // Both nonisomorphic edge choices of J4 introduce rogue copies.
        let j4 = g("j4");
        for &e in j4.edges() {
            let a = combine_on_edge(&j4, e).unwrap();
            let n = count_copies(&a.graph, &j4);
            assert!(n >= 3, "A_(J4,{e:?}) has {n} copies");
            assert_eq!(n, count_copies_naive(&a.graph, &j4));
        }
    }

    #[test]
    fn agrees_with_naive_oracle() {
        let hosts = [
            g("k4"),
            g("k5"),
            g("c6"),
            g("j4"),
            g("tk4"),
            Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (4, 5), (5, 6), (6, 2), (1, 5)])
                .unwrap(),
        ];
        let patterns = [g("k3"), g("c4"), g("p4"), g("tk3"), g("j4")];
        for host in &hosts {
            for pat in &patterns {
                assert_eq!(
                    count_copies(host, pat),
                    count_copies_naive(host, pat),
                    "host {host:?} pattern {pat:?}"
                );
            }
        }
    }

    #[test]
    fn masked_and_anchored() {
        let k4 = g("k4");
        let mask_all = vec![true; 6];
        assert!(contains_copy_masked(&k4, &g("k3"), &mask_all));
        // Remove all edges at vertex 3: the remaining triangle is 0-1-2.
        let mut mask = mask_all.clone();
        for (i, e) in k4.edges().iter().enumerate() {
            if e.touches(3) {
                mask[i] = false;
            }
        }
        assert!(contains_copy_masked(&k4, &g("k3"), &mask));
        assert!(!contains_copy_masked(&k4, &g("c4"), &mask));
        let id01 = k4.edge_id(Edge::new(0, 1)).unwrap();
        let id23 = k4.edge_id(Edge::new(2, 3)).unwrap();
        assert!(contains_copy_through_edge(&k4, &g("k3"), &mask, id01));
        assert!(!contains_copy_through_edge(&k4, &g("k3"), &mask, id23));
    }
}
