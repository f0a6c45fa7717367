//! Gadget graphs and their definition-exhaustive verifiers. Every gadget
//! carries distinguished-vertex roles, the pattern pair it was built for,
//! and a verification log; `verified` is set only after the exhaustive
//! check for its kind has passed.
//!
//! All verification clauses reduce to complete constrained searches:
//! "edge X is blue in every good coloring" is checked by proving that no
//! good coloring with X red exists, and "vertex v is nonfree whenever w
//! is free" by proving no good coloring leaves both free. The searches
//! are exhaustive within the node budget; running out of budget is a
//! distinct non-answer.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::coloring::EdgeColoring;
use crate::error::GadgetError;
use crate::graph::{Edge, Graph, Vertex};
use crate::iso;
use crate::search::{solve, Budget, Outcome, SearchOptions, SearchResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GadgetKind {
    Enforcer,
    SignalExtender,
    LeafSender,
    VariableGadget,
    ClauseGadget,
}

impl GadgetKind {
    pub fn name(&self) -> &'static str {
        match self {
            GadgetKind::Enforcer => "enforcer",
            GadgetKind::SignalExtender => "signal_extender",
            GadgetKind::LeafSender => "leaf_sender",
            GadgetKind::VariableGadget => "variable_gadget",
            GadgetKind::ClauseGadget => "clause_gadget",
        }
    }

    /// Roles that must be populated for this kind.
    pub fn required_roles(&self) -> &'static [(Role, usize)] {
        match self {
            GadgetKind::Enforcer => &[(Role::Signal, 1)],
            GadgetKind::SignalExtender => &[(Role::In, 1), (Role::Out, 1)],
            GadgetKind::LeafSender => &[(Role::LeafSignalU, 1), (Role::LeafSignalV, 1)],
            GadgetKind::VariableGadget => {
                &[(Role::UnnegatedOutput, 2), (Role::NegatedOutput, 2)]
            }
            GadgetKind::ClauseGadget => &[(Role::Input, 3)],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Role {
    Signal,
    In,
    Out,
    Input,
    UnnegatedOutput,
    NegatedOutput,
    LeafSignalU,
    LeafSignalV,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub nodes: u64,
    /// Good colorings found by this check (0 for nonexistence proofs).
    pub colorings_found: u64,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct VerificationLog {
    pub checks: Vec<CheckRecord>,
    pub total_nodes: u64,
}

impl VerificationLog {
    pub fn digest(&self) -> String {
        let json = serde_json::to_string(self).expect("log serialization");
        let mut hasher = Sha256::new();
        hasher.update(json.as_bytes());
        hex_string(&hasher.finalize())
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn hex_string(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// A gadget graph with roles, the pattern pair, the expected copy count
/// of h (for the rogue-copy audit), template colorings for reduction
/// assembly, and the verification state.
#[derive(Clone, Debug)]
pub struct Gadget {
    pub graph: Graph,
    pub kind: GadgetKind,
    pub roles: BTreeMap<Role, Vec<Vertex>>,
    pub pattern_f: Graph,
    pub pattern_h: Graph,
    /// Copies of h placed intentionally during construction.
    pub intended_copies: usize,
    pub verified: bool,
    pub log: VerificationLog,
    /// Keyed witness colorings (for example "u_free", "row_BRB",
    /// "fired"); assembled into G_phi colorings by the reduction.
    pub templates: BTreeMap<String, EdgeColoring>,
}

impl Gadget {
    pub fn new(
        graph: Graph,
        kind: GadgetKind,
        roles: BTreeMap<Role, Vec<Vertex>>,
        pattern_f: Graph,
        pattern_h: Graph,
        intended_copies: usize,
    ) -> Result<Gadget, GadgetError> {
        for &(role, count) in kind.required_roles() {
            let vs = roles.get(&role).ok_or_else(|| {
                GadgetError::MissingRole(format!("{role:?}"))
            })?;
            if vs.len() != count {
                return Err(GadgetError::MissingRole(format!(
                    "{role:?} needs {count} vertices, has {}",
                    vs.len()
                )));
            }
            for &v in vs {
                if v >= graph.vertex_count() {
                    return Err(GadgetError::Graph(
                        crate::error::GraphError::VertexOutOfRange(v, graph.vertex_count()),
                    ));
                }
            }
        }
        Ok(Gadget {
            graph,
            kind,
            roles,
            pattern_f,
            pattern_h,
            intended_copies,
            verified: false,
            log: VerificationLog::default(),
            templates: BTreeMap::new(),
        })
    }

    pub fn role_one(&self, role: Role) -> Result<Vertex, GadgetError> {
        self.roles
            .get(&role)
            .and_then(|v| if v.len() == 1 { Some(v[0]) } else { None })
            .ok_or_else(|| GadgetError::MissingRole(format!("{role:?}")))
    }

    pub fn role_vec(&self, role: Role) -> Result<&[Vertex], GadgetError> {
        self.roles
            .get(&role)
            .map(|v| v.as_slice())
            .ok_or_else(|| GadgetError::MissingRole(format!("{role:?}")))
    }

    pub fn template(&self, key: &str) -> Result<&EdgeColoring, GadgetError> {
        self.templates
            .get(key)
            .ok_or_else(|| GadgetError::TemplateGap(key.to_string()))
    }

    /// Rogue-copy audit: the actual copy count of h must equal what the
    /// construction intended.
    pub fn audit_copies(&self) -> bool {
        iso::count_copies(&self.graph, &self.pattern_h) == self.intended_copies
    }
}

/// Outcome of a verification run: the boolean answer plus the log and any
/// witness colorings found along the way.
#[derive(Clone, Debug)]
pub struct Verification {
    pub passed: bool,
    pub log: VerificationLog,
    pub templates: BTreeMap<String, EdgeColoring>,
}

/// Tracks node spend across the sub-searches of one verification.
struct Meter {
    limit: u64,
    used: u64,
}

impl Meter {
    fn new(budget: Budget) -> Meter {
        Meter { limit: budget.0, used: 0 }
    }

    fn remaining(&self) -> Budget {
        Budget(self.limit.saturating_sub(self.used))
    }

    fn charge(&mut self, r: &SearchResult) -> Result<(), GadgetError> {
        self.used = self.used.saturating_add(r.nodes);
        if r.out_of_budget() || self.used > self.limit {
            Err(GadgetError::BudgetExceeded(self.used))
        } else {
            Ok(())
        }
    }
}

fn blue_star(g: &Graph, v: Vertex) -> Vec<(Edge, bool)> {
    g.neighbors(v).iter().map(|&w| (Edge::new(v, w), false)).collect()
}

struct Checker<'a> {
    f: &'a Graph,
    h: &'a Graph,
    meter: Meter,
    log: VerificationLog,
    templates: BTreeMap<String, EdgeColoring>,
}

impl<'a> Checker<'a> {
    fn new(f: &'a Graph, h: &'a Graph, budget: Budget) -> Checker<'a> {
        Checker {
            f,
            h,
            meter: Meter::new(budget),
            log: VerificationLog::default(),
            templates: BTreeMap::new(),
        }
    }

    fn run(
        &mut self,
        g: &Graph,
        assumptions: Vec<(Edge, bool)>,
    ) -> Result<SearchResult, GadgetError> {
        let opts = SearchOptions { assumptions, ..Default::default() };
        let r = solve(g, self.f, self.h, self.meter.remaining(), &opts);
        self.meter.charge(&r)?;
        Ok(r)
    }

    /// Check that passes iff NO good coloring satisfies the assumptions.
    fn expect_none(
        &mut self,
        name: &str,
        g: &Graph,
        assumptions: Vec<(Edge, bool)>,
    ) -> Result<bool, GadgetError> {
        let r = self.run(g, assumptions)?;
        let passed = r.exhausted();
        self.log.checks.push(CheckRecord {
            name: name.to_string(),
            passed,
            nodes: r.nodes,
            colorings_found: if r.found().is_some() { 1 } else { 0 },
        });
        self.log.total_nodes += r.nodes;
        Ok(passed)
    }

    /// Check that passes iff a good coloring satisfying the assumptions
    /// exists; the witness is stored under `template_key`.
    fn expect_some(
        &mut self,
        name: &str,
        template_key: Option<&str>,
        g: &Graph,
        assumptions: Vec<(Edge, bool)>,
    ) -> Result<bool, GadgetError> {
        let r = self.run(g, assumptions)?;
        let passed = r.found().is_some();
        if let (Some(key), Some(c)) = (template_key, r.found()) {
            self.templates.insert(key.to_string(), c.clone());
        }
        self.log.checks.push(CheckRecord {
            name: name.to_string(),
            passed,
            nodes: r.nodes,
            colorings_found: if passed { 1 } else { 0 },
        });
        self.log.total_nodes += r.nodes;
        Ok(passed)
    }

    fn finish(self, passed: bool) -> Verification {
        Verification { passed, log: self.log, templates: self.templates }
    }
}

/// Restricts a coloring of a supergraph (same vertex ids for shared
/// vertices) to the edges of `g`.
fn restrict_to(g: &Graph, c: &EdgeColoring) -> EdgeColoring {
    let red: Vec<bool> = g.edges().iter().map(|&e| c.is_red(e)).collect();
    EdgeColoring::from_red_flags(g.clone(), red)
}

/// An enforcer is good, and a fresh pendant edge attached at the signal
/// vertex is blue in all good colorings (equivalently: no good coloring
/// of the pendant graph makes the pendant red).
pub fn verify_enforcer(gadget: &Gadget, budget: Budget) -> Result<Verification, GadgetError> {
    let s = gadget.role_one(Role::Signal)?;
    let mut ck = Checker::new(&gadget.pattern_f, &gadget.pattern_h, budget);
    if !ck.expect_some("gadget_is_good", Some("good"), &gadget.graph, vec![])? {
        return Ok(ck.finish(false));
    }
    let (pend, x) = gadget.graph.with_pendant(s)?;
    let pe = Edge::new(s, x);
    let ok = ck.expect_none("pendant_red_impossible", &pend, vec![(pe, true)])?;
    Ok(ck.finish(ok))
}

/// A signal extender is good, and in every good coloring the out-vertex
/// is nonfree whenever the in-vertex is free.
pub fn verify_extender(gadget: &Gadget, budget: Budget) -> Result<Verification, GadgetError> {
    let a = gadget.role_one(Role::In)?;
    let b = gadget.role_one(Role::Out)?;
    let mut ck = Checker::new(&gadget.pattern_f, &gadget.pattern_h, budget);
    if !ck.expect_some("gadget_is_good", Some("good"), &gadget.graph, vec![])? {
        return Ok(ck.finish(false));
    }
    let mut both_free = blue_star(&gadget.graph, a);
    both_free.extend(blue_star(&gadget.graph, b));
    let ok = ck.expect_none("in_free_out_free_impossible", &gadget.graph, both_free)?;
    Ok(ck.finish(ok))
}

/// A leaf sender is good, its leaf-signal edge is red in all good
/// colorings, and some good coloring gives that edge no adjacent red.
pub fn verify_leaf_sender(gadget: &Gadget, budget: Budget) -> Result<Verification, GadgetError> {
    let u = gadget.role_one(Role::LeafSignalU)?;
    let v = gadget.role_one(Role::LeafSignalV)?;
    let uv = Edge::new(u, v);
    gadget.graph.require_edge(uv)?;
    let mut ck = Checker::new(&gadget.pattern_f, &gadget.pattern_h, budget);
    if !ck.expect_some("gadget_is_good", Some("good"), &gadget.graph, vec![])? {
        return Ok(ck.finish(false));
    }
    if !ck.expect_none("signal_blue_impossible", &gadget.graph, vec![(uv, false)])? {
        return Ok(ck.finish(false));
    }
    let mut isolated = vec![(uv, true)];
    for &(e, _) in blue_star(&gadget.graph, u).iter().chain(blue_star(&gadget.graph, v).iter()) {
        if e != uv {
            isolated.push((e, false));
        }
    }
    let ok = ck.expect_some("isolated_red_signal_exists", Some("leaf_isolated"), &gadget.graph, isolated)?;
    Ok(ck.finish(ok))
}

/// A variable gadget is good; no good coloring leaves an unnegated and a
/// negated output free simultaneously (condition 1); and there are good
/// colorings with both unnegated outputs free (condition 2) and with both
/// negated outputs free (condition 3).
pub fn verify_variable_gadget(gadget: &Gadget, budget: Budget) -> Result<Verification, GadgetError> {
    let us = gadget.role_vec(Role::UnnegatedOutput)?.to_vec();
    let ns = gadget.role_vec(Role::NegatedOutput)?.to_vec();
    let mut ck = Checker::new(&gadget.pattern_f, &gadget.pattern_h, budget);
    if !ck.expect_some("gadget_is_good", Some("good"), &gadget.graph, vec![])? {
        return Ok(ck.finish(false));
    }
    for (i, &u) in us.iter().enumerate() {
        for (j, &n) in ns.iter().enumerate() {
            let mut both = blue_star(&gadget.graph, u);
            both.extend(blue_star(&gadget.graph, n));
            let name = format!("condition1_u{}_n{}_impossible", i + 1, j + 1);
            if !ck.expect_none(&name, &gadget.graph, both)? {
                return Ok(ck.finish(false));
            }
        }
    }
    let mut u_free = blue_star(&gadget.graph, us[0]);
    u_free.extend(blue_star(&gadget.graph, us[1]));
    if !ck.expect_some("condition2_u_outputs_free", Some("u_free"), &gadget.graph, u_free)? {
        return Ok(ck.finish(false));
    }
    let mut n_free = blue_star(&gadget.graph, ns[0]);
    n_free.extend(blue_star(&gadget.graph, ns[1]));
    let ok = ck.expect_some("condition3_n_outputs_free", Some("n_free"), &gadget.graph, n_free)?;
    Ok(ck.finish(ok))
}

/// Row key for a clause-input combination; bit j set = red pendant at
/// input j. "R" marks red (false signal), "B" blue.
pub fn row_key(combo: u8) -> String {
    let mut s = String::from("row_");
    for j in 0..3 {
        s.push(if combo & (1 << j) != 0 { 'R' } else { 'B' });
    }
    s
}

/// A clause gadget is good, and with one fresh pendant edge per input
/// vertex, exactly the seven non-all-red pendant combinations extend to a
/// good coloring. The seven extendable rows are stored as templates
/// (restricted to the gadget's own edges).
pub fn verify_clause_gadget(gadget: &Gadget, budget: Budget) -> Result<Verification, GadgetError> {
    let inputs = gadget.role_vec(Role::Input)?.to_vec();
    let mut ck = Checker::new(&gadget.pattern_f, &gadget.pattern_h, budget);
    if !ck.expect_some("gadget_is_good", Some("good"), &gadget.graph, vec![])? {
        return Ok(ck.finish(false));
    }
    // Attach the three pendants once; vertex ids of the gadget are
    // preserved.
    let (g1, p1) = gadget.graph.with_pendant(inputs[0])?;
    let (g2, p2) = g1.with_pendant(inputs[1])?;
    let (g3, p3) = g2.with_pendant(inputs[2])?;
    let pend_edges = [
        Edge::new(inputs[0], p1),
        Edge::new(inputs[1], p2),
        Edge::new(inputs[2], p3),
    ];
    let mut all_ok = true;
    for combo in 0u8..8 {
        let assumptions: Vec<(Edge, bool)> = (0..3)
            .map(|j| (pend_edges[j], combo & (1 << j) != 0))
            .collect();
        let key = row_key(combo);
        if combo == 0b111 {
            let name = "row_RRR_has_no_good_extension";
            if !ck.expect_none(name, &g3, assumptions)? {
                all_ok = false;
                break;
            }
        } else {
            let name = format!("{key}_extends");
            let r = ck.run(&g3, assumptions)?;
            let passed = r.found().is_some();
            if let Some(c) = r.found() {
                ck.templates.insert(key.clone(), restrict_to(&gadget.graph, c));
            }
            ck.log.checks.push(CheckRecord {
                name,
                passed,
                nodes: r.nodes,
                colorings_found: if passed { 1 } else { 0 },
            });
            ck.log.total_nodes += r.nodes;
            if !passed {
                all_ok = false;
                break;
            }
        }
    }
    Ok(ck.finish(all_ok))
}

/// Dispatches to the verifier for the gadget's kind.
pub fn verify_gadget(gadget: &Gadget, budget: Budget) -> Result<Verification, GadgetError> {
    match gadget.kind {
        GadgetKind::Enforcer => verify_enforcer(gadget, budget),
        GadgetKind::SignalExtender => verify_extender(gadget, budget),
        GadgetKind::LeafSender => verify_leaf_sender(gadget, budget),
        GadgetKind::VariableGadget => verify_variable_gadget(gadget, budget),
        GadgetKind::ClauseGadget => verify_clause_gadget(gadget, budget),
    }
}

/// Minimum red degree of `v` over all (f,h)-good colorings of `g`:
/// the smallest `k` admitting a good coloring with at most `k` red edges
/// at `v`.
pub fn min_red_degree_over_good(
    g: &Graph,
    v: Vertex,
    f: &Graph,
    h: &Graph,
    budget: Budget,
) -> Result<usize, GadgetError> {
    let mut meter = Meter::new(budget);
    let ceiling = g.degree(v);
    for k in 0..=ceiling {
        let opts = SearchOptions {
            vertex_caps: vec![(v, k as u32)],
            ..Default::default()
        };
        let r = solve(g, f, h, meter.remaining(), &opts);
        meter.charge(&r)?;
        match r.outcome {
            Outcome::Found(_) => return Ok(k),
            Outcome::Exhausted => continue,
            Outcome::OutOfBudget => unreachable!("charge() errors first"),
        }
    }
    Err(GadgetError::NoGoodColoring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    fn g(name: &str) -> Graph {
        Graph::from_name(name).unwrap()
    }

    fn roles(pairs: &[(Role, &[Vertex])]) -> BTreeMap<Role, Vec<Vertex>> {
        pairs.iter().map(|&(r, vs)| (r, vs.to_vec())).collect()
    }

    #[test]
    fn edgeless_vertex_is_no_enforcer() {
        let single = Graph::new(1, &[]).unwrap();
        let gadget = Gadget::new(
            single,
            GadgetKind::Enforcer,
            roles(&[(Role::Signal, &[0])]),
            g("p3"),
            g("c4"),
            0,
        )
        .unwrap();
        let v = verify_enforcer(&gadget, Budget::DEFAULT).unwrap();
        assert!(!v.passed, "a pendant at an isolated vertex can be red");
    }

    #[test]
    fn single_edge_is_no_extender_or_leaf_sender() {
        let e = Graph::new(2, &[(0, 1)]).unwrap();
        let ext = Gadget::new(
            e.clone(),
            GadgetKind::SignalExtender,
            roles(&[(Role::In, &[0]), (Role::Out, &[1])]),
            g("p3"),
            g("c4"),
            0,
        )
        .unwrap();
        assert!(!verify_extender(&ext, Budget::DEFAULT).unwrap().passed);

        let ls = Gadget::new(
            e,
            GadgetKind::LeafSender,
            roles(&[(Role::LeafSignalU, &[0]), (Role::LeafSignalV, &[1])]),
            g("k1_3"),
            g("k3"),
            0,
        )
        .unwrap();
        assert!(!verify_leaf_sender(&ls, Budget::DEFAULT).unwrap().passed);
    }

    #[test]
    fn k6_is_a_k13_k3_enforcer() {
        // Every (K_{1,3},K_3)-good coloring of K6 is a pair of disjoint
        // red triangles, so every vertex is red-saturated.
        let k6 = g("k6");
        let gadget = Gadget::new(
            k6,
            GadgetKind::Enforcer,
            roles(&[(Role::Signal, &[0])]),
            g("k1_3"),
            g("k3"),
            20,
        )
        .unwrap();
        let v = verify_enforcer(&gadget, Budget::DEFAULT).unwrap();
        assert!(v.passed);
        assert!(gadget.audit_copies());
    }

    #[test]
    fn bare_k4_is_a_p3_k4_clause_gadget() {
        let k4 = g("k4");
        let gadget = Gadget::new(
            k4,
            GadgetKind::ClauseGadget,
            roles(&[(Role::Input, &[0, 1, 3])]),
            g("p3"),
            g("k4"),
            1,
        )
        .unwrap();
        let v = verify_clause_gadget(&gadget, Budget::DEFAULT).unwrap();
        assert!(v.passed);
        // Exactly 7 extendable rows were recorded as templates.
        assert_eq!(v.templates.keys().filter(|k| k.starts_with("row_")).count(), 7);
    }

    #[test]
    fn bare_c4_is_not_a_clause_gadget() {
        // Opposite red inputs already force the whole cycle blue.
        let c4 = g("c4");
        for ins in [[0, 1, 2], [0, 1, 3], [0, 2, 3]] {
            let gadget = Gadget::new(
                c4.clone(),
                GadgetKind::ClauseGadget,
                roles(&[(Role::Input, &ins)]),
                g("p3"),
                g("c4"),
                1,
            )
            .unwrap();
            let v = verify_clause_gadget(&gadget, Budget::DEFAULT).unwrap();
            assert!(!v.passed, "inputs {ins:?}");
        }
    }

    #[test]
    fn min_red_degree_queries() {
        // Triangle-free graph, f = P3, h = K3: all-blue is good.
        let c5 = g("c5");
        for v in 0..5 {
            assert_eq!(
                min_red_degree_over_good(&c5, v, &g("p3"), &g("k3"), Budget::DEFAULT).unwrap(),
                0
            );
        }
        // K6 arrows (P3, K3): no good coloring at all.
        let err = min_red_degree_over_good(&g("k6"), 0, &g("p3"), &g("k3"), Budget::DEFAULT);
        assert!(matches!(err, Err(GadgetError::NoGoodColoring)));
        // Every vertex of K6 is saturated in every (K_{1,3},K_3)-good
        // coloring.
        assert_eq!(
            min_red_degree_over_good(&g("k6"), 3, &g("k1_3"), &g("k3"), Budget::DEFAULT).unwrap(),
            2
        );
    }

    #[test]
    fn budget_exceeded_is_distinct() {
        let k6 = Graph::family(Family::Complete, 6).unwrap();
        let gadget = Gadget::new(
            k6,
            GadgetKind::Enforcer,
            roles(&[(Role::Signal, &[0])]),
            g("k1_3"),
            g("k3"),
            20,
        )
        .unwrap();
        let r = verify_enforcer(&gadget, Budget(5));
        assert!(matches!(r, Err(GadgetError::BudgetExceeded(_))));
    }
}
