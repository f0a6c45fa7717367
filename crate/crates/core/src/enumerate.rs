//! Exhaustive enumeration of non-isomorphic graphs on a small number of
//! vertices, via vertex augmentation and canonical-key deduplication.

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex, OnceLock};

use crate::graph::{Graph, Vertex};

const MAX_N: usize = 8;

fn pair_pos(n: usize, u: usize, v: usize) -> u32 {
    debug_assert!(u < v);
    (u * (2 * n - u - 1) / 2 + (v - u - 1)) as u32
}

/// Degree classes, higher degree first. Isomorphisms preserve degrees, so
/// minimizing the edge bitmask over class-respecting orderings yields a
/// canonical key.
fn degree_classes(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut by_degree: Vec<Vertex> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    for &v in &by_degree {
        match classes.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => classes.push(vec![v]),
        }
    }
    classes
}

/// Canonical isomorphism key for graphs with at most 8 vertices: the
/// minimum edge bitmask over all degree-respecting vertex orderings.
pub fn canonical_key(g: &Graph) -> u128 {
    let n = g.vertex_count();
    assert!(n <= MAX_N, "canonical_key supports at most {MAX_N} vertices");
    if n == 0 {
        return 0;
    }
    let classes = degree_classes(g);
    let mut slot = vec![usize::MAX; n];
    let mut best = u128::MAX;
    walk_orders(g, &classes, 0, 0, &mut slot, &mut best);
    best
}

/// Depth-first walk over all class-respecting slot assignments; at each
/// leaf the edge bitmask is compared against the running minimum.
fn walk_orders(
    g: &Graph,
    classes: &[Vec<Vertex>],
    class_idx: usize,
    next_slot: usize,
    slot: &mut [usize],
    best: &mut u128,
) {
    if class_idx == classes.len() {
        let n = g.vertex_count();
        let mut key = 0u128;
        for e in g.edges() {
            let (a, b) = (slot[e.0], slot[e.1]);
            let (a, b) = if a < b { (a, b) } else { (b, a) };
            key |= 1u128 << pair_pos(n, a, b);
        }
        if key < *best {
            *best = key;
        }
        return;
    }
    let class = &classes[class_idx];
    let mut taken = vec![false; class.len()];
    assign_class(g, classes, class_idx, next_slot, 0, &mut taken, slot, best);
}

fn assign_class(
    g: &Graph,
    classes: &[Vec<Vertex>],
    class_idx: usize,
    base_slot: usize,
    depth: usize,
    taken: &mut [bool],
    slot: &mut [usize],
    best: &mut u128,
) {
    let class = &classes[class_idx];
    if depth == class.len() {
        walk_orders(g, classes, class_idx + 1, base_slot + class.len(), slot, best);
        return;
    }
    for i in 0..class.len() {
        if taken[i] {
            continue;
        }
        taken[i] = true;
        slot[class[i]] = base_slot + depth;
        assign_class(g, classes, class_idx, base_slot, depth + 1, taken, slot, best);
        taken[i] = false;
        slot[class[i]] = usize::MAX;
    }
}

/// True iff the two graphs (same order, at most 8 vertices) are isomorphic.
pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && canonical_key(a) == canonical_key(b)
}

fn cache() -> &'static Mutex<HashMap<usize, Arc<Vec<Graph>>>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Vec<Graph>>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// All non-isomorphic graphs on exactly `n` vertices (one representative
/// per isomorphism class), sorted by edge count.
pub fn all_graphs(n: usize) -> Arc<Vec<Graph>> {
    assert!(n >= 1 && n <= MAX_N);
    if let Some(hit) = cache().lock().unwrap().get(&n) {
        return hit.clone();
    }
    let result = if n == 1 {
        vec![Graph::new(1, &[]).unwrap()]
    } else {
        let smaller = all_graphs(n - 1);
        let mut seen: HashSet<u128> = HashSet::new();
        let mut out: Vec<Graph> = Vec::new();
        for base in smaller.iter() {
            let mut edges: Vec<(Vertex, Vertex)> =
                base.edges().iter().map(|e| (e.0, e.1)).collect();
            let base_len = edges.len();
            for mask in 0u32..(1 << (n - 1)) {
                edges.truncate(base_len);
                for v in 0..n - 1 {
                    if mask & (1 << v) != 0 {
                        edges.push((v, n - 1));
                    }
                }
                let cand = Graph::new(n, &edges).unwrap();
                if seen.insert(canonical_key(&cand)) {
                    out.push(cand);
                }
            }
        }
        out.sort_by_key(|g| g.edge_count());
        out
    };
    let arc = Arc::new(result);
    cache().lock().unwrap().insert(n, arc.clone());
    arc
}

/// All non-isomorphic connected graphs on exactly `n` vertices, sorted by
/// edge count.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).iter().filter(|g| g.is_connected()).cloned().collect()
}
