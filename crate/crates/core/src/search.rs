//! The exact good-coloring search engine: backtracking over edges with
//! incremental forbidden-copy bookkeeping, unit propagation, and a
//! deterministic node budget.
//!
//! Structure-aware specializations are selected automatically: when the
//! red pattern is a star K_{1,n} (P_3 = K_{1,2} in particular) the red
//! side is tracked as per-vertex degree budgets instead of explicit
//! copies, so red sets range over matchings / bounded-degree subgraphs.

use crate::coloring::EdgeColoring;
use crate::graph::{Edge, Graph, Vertex};
use crate::iso;

/// Deterministic search budget: a ceiling on the number of branch nodes
/// explored, independent of wall clock and platform.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    /// A good coloring satisfying all constraints.
    Found(EdgeColoring),
    /// The search space was exhausted: no good coloring exists (under the
    /// given assumptions).
    Exhausted,
    /// The node budget ran out before an answer was reached. Never
    /// conflated with `Exhausted`.
    OutOfBudget,
}

#[derive(Clone, Debug)]
pub struct SearchResult {
    pub outcome: Outcome,
    pub nodes: u64,
}

impl SearchResult {
    pub fn found(&self) -> Option<&EdgeColoring> {
        match &self.outcome {
            Outcome::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn exhausted(&self) -> bool {
        matches!(self.outcome, Outcome::Exhausted)
    }

    pub fn out_of_budget(&self) -> bool {
        matches!(self.outcome, Outcome::OutOfBudget)
    }
}

/// Extra constraints and tuning knobs for [`solve`].
#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Pre-colored edges (edge, is_red), applied before the search.
    pub assumptions: Vec<(Edge, bool)>,
    /// Per-vertex red-degree ceilings, on top of what the red pattern
    /// implies. Used for minimum-red-degree queries.
    pub vertex_caps: Vec<(Vertex, u32)>,
    /// Test hook: disable the star specialization and track explicit
    /// copies of `f` instead.
    pub force_generic: bool,
    /// Ceiling on pre-enumerated copies of either pattern; beyond it the
    /// engine falls back to on-the-fly isomorphism checks around the last
    /// colored edge.
    pub copy_cap: Option<usize>,
}

const DEFAULT_COPY_CAP: usize = 2_000_000;

enum FSide {
    /// Red subgraph must have degree <= cap everywhere.
    Star { cap: u32 },
    /// Explicit copies of f, none of which may go all red.
    Copies { copies: Vec<Vec<usize>>, at: Vec<Vec<u32>> },
}

struct Engine<'a> {
    g: &'a Graph,
    m: usize,
    edge_ids_at: Vec<Vec<usize>>,
    h_copies: Vec<Vec<usize>>,
    h_at: Vec<Vec<u32>>,
    f_side: FSide,
    caps: Vec<i64>,

    color: Vec<Option<bool>>, // Some(true) = red
    h_blue: Vec<u32>,
    h_has_red: Vec<bool>,
    f_red: Vec<u32>,
    f_has_blue: Vec<bool>,
    unsat_h: usize,

    trail: Vec<TrailOp>,
    nodes: u64,
    limit: u64,
}

enum TrailOp {
    Color(usize),
    Cap(Vertex),
    HBlue(u32),
    HSat(u32),
    FRed(u32),
    FBlue(u32),
}

struct Conflict;
struct BudgetExhausted;

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, f: &Graph, h: &Graph, opts: &SearchOptions, limit: u64) -> Option<Engine<'a>> {
        let cap = opts.copy_cap.unwrap_or(DEFAULT_COPY_CAP);
        let m = g.edge_count();
        let h_copies = iso::enumerate_copies_limited(g, h, cap)?;
        let mut h_at = vec![Vec::new(); m];
        for (ci, c) in h_copies.iter().enumerate() {
            for &e in c {
                h_at[e].push(ci as u32);
            }
        }
        let f_side = match (f.as_star(), opts.force_generic) {
            (Some(n), false) => FSide::Star { cap: n as u32 - 1 },
            _ => {
                let copies = iso::enumerate_copies_limited(g, f, cap)?;
                let mut at = vec![Vec::new(); m];
                for (ci, c) in copies.iter().enumerate() {
                    for &e in c {
                        at[e].push(ci as u32);
                    }
                }
                FSide::Copies { copies, at }
            }
        };
        let mut caps = match &f_side {
            FSide::Star { cap } => vec![*cap as i64; g.vertex_count()],
            FSide::Copies { .. } => vec![i64::MAX; g.vertex_count()],
        };
        for &(v, c) in &opts.vertex_caps {
            caps[v] = caps[v].min(c as i64);
        }
        let mut edge_ids_at = vec![Vec::new(); g.vertex_count()];
        for (i, e) in g.edges().iter().enumerate() {
            edge_ids_at[e.0].push(i);
            edge_ids_at[e.1].push(i);
        }
        let unsat_h = h_copies.len();
        let f_len = match &f_side {
            FSide::Star { .. } => 0,
            FSide::Copies { copies, .. } => copies.len(),
        };
        let h_len = h_copies.len();
        Some(Engine {
            g,
            m,
            edge_ids_at,
            h_copies,
            h_at,
            f_side,
            caps,
            color: vec![None; m],
            h_blue: vec![0; h_len],
            h_has_red: vec![false; h_len],
            f_red: vec![0; f_len],
            f_has_blue: vec![false; f_len],
            unsat_h,
            trail: Vec::new(),
            nodes: 0,
            limit,
        })
    }

    /// Assigns a color to an edge and pushes all unit consequences onto
    /// `queue`. Errors on conflict.
    fn assign(&mut self, id: usize, red: bool, queue: &mut Vec<(usize, bool)>) -> Result<(), Conflict> {
        match self.color[id] {
            Some(c) => {
                return if c == red { Ok(()) } else { Err(Conflict) };
            }
            None => {
                self.color[id] = Some(red);
                self.trail.push(TrailOp::Color(id));
            }
        }
        let e = self.g.edges()[id];
        if red {
            for v in [e.0, e.1] {
                if self.caps[v] != i64::MAX {
                    self.caps[v] -= 1;
                    self.trail.push(TrailOp::Cap(v));
                    if self.caps[v] < 0 {
                        return Err(Conflict);
                    }
                    if self.caps[v] == 0 {
                        for &other in &self.edge_ids_at[v] {
                            if self.color[other].is_none() {
                                queue.push((other, false));
                            }
                        }
                    }
                }
            }
            for i in 0..self.h_at[id].len() {
                let ci = self.h_at[id][i];
                if !self.h_has_red[ci as usize] {
                    self.h_has_red[ci as usize] = true;
                    self.unsat_h -= 1;
                    self.trail.push(TrailOp::HSat(ci));
                }
            }
            if let FSide::Copies { copies, at } = &self.f_side {
                for i in 0..at[id].len() {
                    let ci = at[id][i] as usize;
                    self.f_red[ci] += 1;
                    self.trail.push(TrailOp::FRed(ci as u32));
                    let len = copies[ci].len() as u32;
                    if self.f_red[ci] == len {
                        return Err(Conflict);
                    }
                    if self.f_red[ci] + 1 == len && !self.f_has_blue[ci] {
                        if let Some(&open) =
                            copies[ci].iter().find(|&&e2| self.color[e2].is_none())
                        {
                            queue.push((open, false));
                        }
                    }
                }
            }
        } else {
            for i in 0..self.h_at[id].len() {
                let ci = self.h_at[id][i] as usize;
                self.h_blue[ci] += 1;
                self.trail.push(TrailOp::HBlue(ci as u32));
                let len = self.h_copies[ci].len() as u32;
                if self.h_blue[ci] == len && !self.h_has_red[ci] {
                    return Err(Conflict);
                }
                if self.h_blue[ci] + 1 == len && !self.h_has_red[ci] {
                    if let Some(&open) =
                        self.h_copies[ci].iter().find(|&&e2| self.color[e2].is_none())
                    {
                        queue.push((open, true));
                    }
                }
            }
            if let FSide::Copies { at, .. } = &self.f_side {
                for i in 0..at[id].len() {
                    let ci = at[id][i] as usize;
                    if !self.f_has_blue[ci] {
                        self.f_has_blue[ci] = true;
                        self.trail.push(TrailOp::FBlue(ci as u32));
                    }
                }
            }
        }
        Ok(())
    }

    fn propagate(&mut self, id: usize, red: bool) -> bool {
        let mut queue = vec![(id, red)];
        while let Some((e, r)) = queue.pop() {
            if self.assign(e, r, &mut queue).is_err() {
                return false;
            }
        }
        true
    }

    fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            match self.trail.pop().unwrap() {
                TrailOp::Color(id) => self.color[id] = None,
                TrailOp::Cap(v) => self.caps[v] += 1,
                TrailOp::HBlue(ci) => self.h_blue[ci as usize] -= 1,
                TrailOp::HSat(ci) => {
                    self.h_has_red[ci as usize] = false;
                    self.unsat_h += 1;
                }
                TrailOp::FRed(ci) => self.f_red[ci as usize] -= 1,
                TrailOp::FBlue(ci) => self.f_has_blue[ci as usize] = false,
            }
        }
    }

    /// Branch edge: the uncolored edge in the most not-yet-satisfied
    /// copies of h; ties broken by lowest edge id.
    fn pick_edge(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None; // (count, id)
        for id in 0..self.m {
            if self.color[id].is_some() {
                continue;
            }
            let count = self.h_at[id]
                .iter()
                .filter(|&&ci| !self.h_has_red[ci as usize])
                .count();
            match best {
                None => best = Some((count, id)),
                Some((bc, _)) if count > bc => best = Some((count, id)),
                _ => {}
            }
        }
        best.map(|(_, id)| id)
    }

    /// Once every copy of h has a red edge, the remaining edges can all
    /// be blue: blue fill never completes a red f.
    fn complete(&self) -> EdgeColoring {
        let red: Vec<bool> = self.color.iter().map(|c| c.unwrap_or(false)).collect();
        EdgeColoring::from_red_flags(self.g.clone(), red)
    }

    fn dfs(&mut self) -> Result<Option<EdgeColoring>, BudgetExhausted> {
        if self.unsat_h == 0 {
            return Ok(Some(self.complete()));
        }
        let id = match self.pick_edge() {
            Some(id) => id,
            // All edges colored with unsatisfied copies is impossible (a
            // fully blue copy conflicts earlier), so this is unreachable;
            // guard anyway.
            None => return Ok(None),
        };
        self.nodes += 1;
        if self.nodes > self.limit {
            return Err(BudgetExhausted);
        }
        for red in [true, false] {
            let mark = self.trail.len();
            if self.propagate(id, red) {
                match self.dfs() {
                    Ok(Some(c)) => return Ok(Some(c)),
                    Ok(None) => {}
                    Err(b) => {
                        self.rollback(mark);
                        return Err(b);
                    }
                }
            }
            self.rollback(mark);
        }
        Ok(None)
    }
}

/// Decides whether `g` has a coloring with no red copy of `f` and no blue
/// copy of `h`, subject to `opts`. Exhaustive within the node budget.
pub fn solve(g: &Graph, f: &Graph, h: &Graph, budget: Budget, opts: &SearchOptions) -> SearchResult {
    match Engine::new(g, f, h, opts, budget.0) {
        Some(mut eng) => {
            // Apply assumptions with propagation; a conflict here is a
            // definitive no.
            for &(e, red) in &opts.assumptions {
                let id = g
                    .edge_id(e)
                    .unwrap_or_else(|| panic!("assumption edge {e:?} not in graph"));
                if !eng.propagate(id, red) {
                    return SearchResult { outcome: Outcome::Exhausted, nodes: 0 };
                }
            }
            match eng.dfs() {
                Ok(Some(c)) => {
                    debug_assert!(c.is_good(f, h));
                    SearchResult { outcome: Outcome::Found(c), nodes: eng.nodes }
                }
                Ok(None) => SearchResult { outcome: Outcome::Exhausted, nodes: eng.nodes },
                Err(_) => SearchResult { outcome: Outcome::OutOfBudget, nodes: eng.nodes },
            }
        }
        // Copy pre-enumeration blew the cap: on-the-fly checks instead.
        None => solve_local(g, f, h, budget, opts),
    }
}

/// Fallback engine without pre-enumerated copies: plain DFS over edges in
/// id order, validating each assignment by an anchored isomorphism check
/// around the edge just colored.
fn solve_local(
    g: &Graph,
    f: &Graph,
    h: &Graph,
    budget: Budget,
    opts: &SearchOptions,
) -> SearchResult {
    let m = g.edge_count();
    let star_cap = if opts.force_generic { None } else { f.as_star().map(|n| n as u32 - 1) };
    let mut caps = vec![i64::MAX; g.vertex_count()];
    if let Some(c) = star_cap {
        caps.iter_mut().for_each(|x| *x = c as i64);
    }
    for &(v, c) in &opts.vertex_caps {
        caps[v] = caps[v].min(c as i64);
    }
    let mut red_mask = vec![false; m];
    let mut blue_mask = vec![false; m];
    let mut fixed: Vec<Option<bool>> = vec![None; m];
    for &(e, red) in &opts.assumptions {
        let id = g.edge_id(e).expect("assumption edge not in graph");
        if let Some(prev) = fixed[id] {
            if prev != red {
                return SearchResult { outcome: Outcome::Exhausted, nodes: 0 };
            }
        }
        fixed[id] = Some(red);
    }
    struct Ctx<'a> {
        g: &'a Graph,
        f: &'a Graph,
        h: &'a Graph,
        star_cap: Option<u32>,
        nodes: u64,
        limit: u64,
        over: bool,
    }
    fn ok_after(
        ctx: &Ctx,
        caps: &[i64],
        red_mask: &[bool],
        blue_mask: &[bool],
        id: usize,
        red: bool,
    ) -> bool {
        let e = ctx.g.edges()[id];
        if red {
            if caps[e.0] < 0 || caps[e.1] < 0 {
                return false;
            }
            if ctx.star_cap.is_none()
                && iso::contains_copy_through_edge(ctx.g, ctx.f, red_mask, id)
            {
                return false;
            }
            true
        } else {
            !iso::contains_copy_through_edge(ctx.g, ctx.h, blue_mask, id)
        }
    }
    fn dfs(
        ctx: &mut Ctx,
        caps: &mut [i64],
        red_mask: &mut [bool],
        blue_mask: &mut [bool],
        fixed: &[Option<bool>],
        id: usize,
    ) -> Option<Vec<bool>> {
        if id == ctx.g.edge_count() {
            return Some(red_mask.to_vec());
        }
        ctx.nodes += 1;
        if ctx.nodes > ctx.limit {
            ctx.over = true;
            return None;
        }
        let choices: &[bool] = match fixed[id] {
            Some(true) => &[true],
            Some(false) => &[false],
            None => &[true, false],
        };
        for &red in choices {
            let e = ctx.g.edges()[id];
            if red {
                red_mask[id] = true;
                caps[e.0] -= i64::from(caps[e.0] != i64::MAX);
                caps[e.1] -= i64::from(caps[e.1] != i64::MAX);
            } else {
                blue_mask[id] = true;
            }
            if ok_after(ctx, caps, red_mask, blue_mask, id, red) {
                if let Some(sol) = dfs(ctx, caps, red_mask, blue_mask, fixed, id + 1) {
                    return Some(sol);
                }
                if ctx.over {
                    // Unwind without trying the other color.
                    if red {
                        red_mask[id] = false;
                        caps[e.0] += i64::from(caps[e.0] != i64::MAX);
                        caps[e.1] += i64::from(caps[e.1] != i64::MAX);
                    } else {
                        blue_mask[id] = false;
                    }
                    return None;
                }
            }
            if red {
                red_mask[id] = false;
                caps[e.0] += i64::from(caps[e.0] != i64::MAX);
                caps[e.1] += i64::from(caps[e.1] != i64::MAX);
            } else {
                blue_mask[id] = false;
            }
        }
        None
    }
    let mut ctx = Ctx { g, f, h, star_cap, nodes: 0, limit: budget.0, over: false };
    let sol = dfs(&mut ctx, &mut caps, &mut red_mask, &mut blue_mask, &fixed, 0);
    let nodes = ctx.nodes;
    match sol {
        Some(red) => {
            let c = EdgeColoring::from_red_flags(g.clone(), red);
            debug_assert!(c.is_good(f, h));
            SearchResult { outcome: Outcome::Found(c), nodes }
        }
        None if ctx.over => SearchResult { outcome: Outcome::OutOfBudget, nodes },
        None => SearchResult { outcome: Outcome::Exhausted, nodes },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> Graph {
        Graph::from_name(name).unwrap()
    }

    #[test]
    fn finds_good_coloring_on_k3() {
        let r = solve(&g("k3"), &g("p3"), &g("k3"), Budget::DEFAULT, &SearchOptions::default());
        let c = r.found().expect("K3 is (P3,K3)-good");
        assert!(c.is_good(&g("p3"), &g("k3")));
        assert_eq!(c.red_edges().len(), 1);
    }

    #[test]
    fn k5_exhausts_for_p3_k3() {
        let r = solve(&g("k5"), &g("p3"), &g("k3"), Budget::DEFAULT, &SearchOptions::default());
        assert!(r.exhausted());
    }

    #[test]
    fn ramsey_k6_arrows_k3_k3() {
        let r = solve(&g("k6"), &g("k3"), &g("k3"), Budget::DEFAULT, &SearchOptions::default());
        assert!(r.exhausted(), "R(3,3) = 6");
        let r5 = solve(&g("k5"), &g("k3"), &g("k3"), Budget::DEFAULT, &SearchOptions::default());
        assert!(r5.found().is_some(), "K5 is (K3,K3)-good");
    }

    #[test]
    fn budget_is_reported() {
        let r = solve(&g("k6"), &g("k3"), &g("k3"), Budget(10), &SearchOptions::default());
        assert!(r.out_of_budget());
        assert!(r.nodes >= 10);
    }

    #[test]
    fn assumptions_constrain() {
        // K3 with all edges at vertex 0 forced blue still has good
        // colorings (red (1,2)); forcing everything blue does not.
        let k3 = g("k3");
        let opts = SearchOptions {
            assumptions: vec![(Edge::new(0, 1), false), (Edge::new(0, 2), false)],
            ..Default::default()
        };
        let r = solve(&k3, &g("p3"), &g("k3"), Budget::DEFAULT, &opts);
        let c = r.found().unwrap();
        assert!(c.is_red(Edge::new(1, 2)));

        let opts = SearchOptions {
            assumptions: k3.edges().iter().map(|&e| (e, false)).collect(),
            ..Default::default()
        };
        let r = solve(&k3, &g("p3"), &g("k3"), Budget::DEFAULT, &opts);
        assert!(r.exhausted());
    }

    #[test]
    fn generic_mode_matches_star_mode() {
        for name in ["k4", "c5", "k5"] {
            let host = g(name);
            let star = solve(&host, &g("p3"), &g("k3"), Budget::DEFAULT, &SearchOptions::default());
            let gen = solve(
                &host,
                &g("p3"),
                &g("k3"),
                Budget::DEFAULT,
                &SearchOptions { force_generic: true, ..Default::default() },
            );
            assert_eq!(star.found().is_some(), gen.found().is_some(), "{name}");
        }
    }

    #[test]
    fn local_fallback_agrees() {
        // Force the fallback by a tiny copy cap.
        for name in ["k4", "k5", "c5"] {
            let host = g(name);
            let normal =
                solve(&host, &g("p3"), &g("k3"), Budget::DEFAULT, &SearchOptions::default());
            let local = solve(
                &host,
                &g("p3"),
                &g("k3"),
                Budget::DEFAULT,
                &SearchOptions { copy_cap: Some(0), ..Default::default() },
            );
            assert_eq!(normal.found().is_some(), local.found().is_some(), "{name}");
        }
    }
}
