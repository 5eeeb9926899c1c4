//! The classical kernels: Buss (at most k²+k vertices), crown decomposition
//! (at most 3k vertices) and the LP kernel via half-integral optima (at most
//! 2k vertices).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, VertexId, VertexSet};
use crate::kernel::{Infeasible, KernelOutcome, Workspace};
use crate::matching::{greedy_maximal_matching, Bipartite, Matching};
use crate::trace::{Payload, RuleTag};

/// Partition `(C, H, B)` with a matching of `G[C, H]` saturating `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrownDecomposition {
    pub crown: VertexSet,
    pub head: VertexSet,
    pub body: VertexSet,
    pub witness_matching: Matching,
}

impl CrownDecomposition {
    /// Checks the partition, independence of the crown, separation of crown
    /// and body, and the saturating witness.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let bad = |m: &str| {
            Err(Error::ContractViolation(format!(
                "invalid crown decomposition: {m}"
            )))
        };
        let total = self.crown.len() + self.head.len() + self.body.len();
        let all: VertexSet = self
            .crown
            .iter()
            .chain(&self.head)
            .chain(&self.body)
            .copied()
            .collect();
        if total != all.len() || all != g.vertex_set() {
            return bad("parts do not partition the vertex set");
        }
        if self.crown.is_empty() {
            return bad("empty crown");
        }
        if !g.is_independent(&self.crown) {
            return bad("crown is not independent");
        }
        if self
            .crown
            .iter()
            .any(|c| g.neighbors(*c).iter().any(|w| self.body.contains(w)))
        {
            return bad("crown touches body");
        }
        for (u, v) in self.witness_matching.edges() {
            let crosses = (self.crown.contains(&u) && self.head.contains(&v))
                || (self.crown.contains(&v) && self.head.contains(&u));
            if !crosses || !g.has_edge(u, v) {
                return bad("witness edge outside G[C, H]");
            }
        }
        if !self.witness_matching.saturates(&self.head) {
            return bad("witness does not saturate the head");
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrownOrMatching {
    Crown(CrownDecomposition),
    /// A matching with more edges than the budget: a No certificate.
    Matching(Matching),
}

/// LP value of a vertex, in halves: 0, ½ or 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Half {
    Zero,
    Half,
    One,
}

impl Half {
    pub fn halves(self) -> usize {
        match self {
            Half::Zero => 0,
            Half::Half => 1,
            Half::One => 2,
        }
    }

    pub fn as_f64(self) -> f64 {
        self.halves() as f64 / 2.0
    }
}

/// Optimal solution of the vertex cover LP relaxation with values in
/// `{0, ½, 1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfIntegralSolution {
    pub values: BTreeMap<VertexId, Half>,
    /// Twice the objective value, kept integral.
    pub objective_halves: usize,
    /// Size of the maximum matching of the bipartite double cover; equals
    /// `objective_halves` at an optimum.
    pub double_cover_matching: usize,
}

impl HalfIntegralSolution {
    pub fn objective(&self) -> f64 {
        self.objective_halves as f64 / 2.0
    }

    pub fn value(&self, v: VertexId) -> Half {
        self.values[&v]
    }

    fn class(&self, h: Half) -> VertexSet {
        self.values
            .iter()
            .filter(|(_, x)| **x == h)
            .map(|(v, _)| *v)
            .collect()
    }

    pub fn zeros(&self) -> VertexSet {
        self.class(Half::Zero)
    }

    pub fn halves(&self) -> VertexSet {
        self.class(Half::Half)
    }

    pub fn ones(&self) -> VertexSet {
        self.class(Half::One)
    }

    /// `x_u + x_v ≥ 1` on every edge.
    pub fn is_feasible(&self, g: &Graph) -> bool {
        g.edges()
            .all(|(u, v)| self.values[&u].halves() + self.values[&v].halves() >= 2)
    }
}

pub(crate) fn remove_isolated(ws: &mut Workspace) -> bool {
    let iso: Vec<VertexId> = ws.graph.isolated_vertices();
    if iso.is_empty() {
        return false;
    }
    let touched: VertexSet = iso.iter().copied().collect();
    ws.apply(&touched, 0, Payload::Isolated { vertices: iso }, |g| {
        g.remove_vertices(&touched)
    })
    .expect("isolated removal keeps the budget");
    true
}

/// Deletes one vertex of degree above the budget, if any.
pub(crate) fn remove_one_high_degree(ws: &mut Workspace) -> std::result::Result<bool, Infeasible> {
    let budget = ws.budget;
    let Some(v) = ws.graph.vertices().find(|v| ws.graph.degree(*v) > budget) else {
        return Ok(false);
    };
    let touched = VertexSet::from([v]);
    ws.apply(&touched, 1, Payload::HighDegree { v }, |g| {
        g.remove_vertex(v);
    })?;
    Ok(true)
}

/// Deletes every isolated vertex.
pub fn rule_isolated(inst: Instance) -> KernelOutcome {
    let mut ws = Workspace::new(inst);
    remove_isolated(&mut ws);
    ws.finish()
}

/// Exhaustively deletes vertices of degree above the current budget,
/// lowering the budget each time.
pub fn rule_high_degree(inst: Instance) -> KernelOutcome {
    let mut ws = Workspace::new(inst);
    let res = (|| {
        while remove_one_high_degree(&mut ws)? {}
        ws.check_budget()
    })();
    ws.conclude(res)
}

/// Size test after the isolated and high-degree rules are exhausted.
pub fn buss_size_check(inst: Instance) -> Result<KernelOutcome> {
    let k = inst.budget;
    let g = &inst.graph;
    if let Some(v) = g.vertices().find(|v| g.degree(*v) == 0 || g.degree(*v) > k) {
        return Err(Error::ContractViolation(format!(
            "vertex {v} is isolated or has degree above the budget"
        )));
    }
    let ws = Workspace::new(inst);
    let n = ws.graph.vertex_count();
    let m = ws.graph.edge_count();
    if m > k * k || n > k * k + k {
        return Ok(ws.fail(Infeasible(RuleTag::BussSize)));
    }
    Ok(ws.finish())
}

/// Kernel with at most k²+k vertices and k² edges.
pub fn buss_kernelize(inst: Instance) -> KernelOutcome {
    let mut ws = Workspace::new(inst);
    let res = (|| {
        loop {
            ws.check_budget()?;
            let a = remove_isolated(&mut ws);
            let b = remove_one_high_degree(&mut ws)?;
            if !a && !b {
                break;
            }
        }
        let (n, m, k) = (ws.graph.vertex_count(), ws.graph.edge_count(), ws.budget);
        if m > k * k || n > k * k + k {
            return Err(Infeasible(RuleTag::BussSize));
        }
        Ok(())
    })();
    ws.conclude(res)
}

/// Either a matching of size at least `k + 1` or a crown decomposition.
/// Requires `|V| ≥ 3k + 1` and no isolated vertices.
pub fn find_crown_or_matching(g: &Graph, k: usize) -> Result<CrownOrMatching> {
    if g.vertex_count() < 3 * k + 1 {
        return Err(Error::InvalidArgument(format!(
            "{} vertices is at most 3k = {}",
            g.vertex_count(),
            3 * k
        )));
    }
    if let Some(v) = g.isolated_vertices().first() {
        return Err(Error::InvalidArgument(format!("vertex {v} is isolated")));
    }
    let m1 = greedy_maximal_matching(g);
    if m1.len() > k {
        return Ok(CrownOrMatching::Matching(m1));
    }
    // Outside a maximal matching the graph is independent.
    let matched = m1.vertices();
    let free: VertexSet = g.vertex_set().difference(&matched).copied().collect();
    let b = Bipartite::between(g, &free, &matched);
    let (mate_l, mate_r) = b.hopcroft_karp();
    let m2 = b.to_matching(&mate_l);
    if m2.len() > k {
        return Ok(CrownOrMatching::Matching(m2));
    }
    let (reach_l, reach_r) = b
        .alternating_reach(&mate_l, &mate_r)
        .expect("Hopcroft-Karp returns a maximum matching");
    let crown: VertexSet = b
        .left
        .iter()
        .zip(&reach_l)
        .filter(|(_, r)| **r)
        .map(|(v, _)| *v)
        .collect();
    let head: VertexSet = b
        .right
        .iter()
        .zip(&reach_r)
        .filter(|(_, r)| **r)
        .map(|(v, _)| *v)
        .collect();
    let mut witness = Matching::new();
    for h in &head {
        let c = m2.mate(*h).expect("reachable head vertices are matched");
        witness.insert(c, *h).expect("matching edges are disjoint");
    }
    let body = g
        .vertex_set()
        .into_iter()
        .filter(|v| !crown.contains(v) && !head.contains(v))
        .collect();
    let cd = CrownDecomposition {
        crown,
        head,
        body,
        witness_matching: witness,
    };
    debug_assert!(cd.validate(g).is_ok());
    Ok(CrownOrMatching::Crown(cd))
}

pub(crate) fn apply_crown(
    ws: &mut Workspace,
    cd: &CrownDecomposition,
) -> std::result::Result<(), Infeasible> {
    let touched: VertexSet = cd.crown.union(&cd.head).copied().collect();
    let payload = Payload::Crown {
        crown: cd.crown.clone(),
        head: cd.head.clone(),
    };
    ws.apply(&touched, cd.head.len(), payload, |g| {
        g.remove_vertices(&touched)
    })
}

/// Deletes `C ∪ H` and lowers the budget by `|H|`.
pub fn rule_crown(inst: Instance, cd: &CrownDecomposition) -> Result<KernelOutcome> {
    cd.validate(&inst.graph)?;
    let mut ws = Workspace::new(inst);
    let res = apply_crown(&mut ws, cd);
    Ok(ws.conclude(res))
}

/// Kernel with at most 3k vertices.
pub fn crown_kernelize(inst: Instance) -> KernelOutcome {
    let mut ws = Workspace::new(inst);
    let res = (|| loop {
        remove_isolated(&mut ws);
        ws.check_budget()?;
        if ws.graph.vertex_count() <= 3 * ws.budget {
            return Ok(());
        }
        match find_crown_or_matching(&ws.graph, ws.budget).expect("preconditions established above")
        {
            CrownOrMatching::Matching(_) => return Err(Infeasible(RuleTag::CrownMatching)),
            CrownOrMatching::Crown(cd) => apply_crown(&mut ws, &cd)?,
        }
    })();
    ws.conclude(res)
}

/// Optimal half-integral LP solution through the bipartite double cover:
/// each vertex `v` gets copies `v_L`, `v_R`, each edge `uv` gives `u_L v_R`
/// and `v_L u_R`, and `x_v` is half the number of copies of `v` in a König
/// cover of the double cover.
pub fn solve_lp_half_integral(g: &Graph) -> HalfIntegralSolution {
    let verts: Vec<VertexId> = g.vertices().collect();
    let index = |v: &VertexId| verts.binary_search(v).unwrap();
    let adj: Vec<Vec<usize>> = verts
        .iter()
        .map(|v| g.neighbors(*v).iter().map(index).collect())
        .collect();
    let b = Bipartite::from_adjacency(verts.clone(), verts.clone(), adj);
    let (mate_l, mate_r) = b.hopcroft_karp();
    let matching = mate_l.iter().filter(|m| **m != usize::MAX).count();
    let (cover_l, cover_r) = b.konig(&mate_l, &mate_r).expect("maximum matching");
    let mut values = BTreeMap::new();
    let mut objective_halves = 0;
    for (i, v) in verts.iter().enumerate() {
        let h = match (cover_l[i], cover_r[i]) {
            (false, false) => Half::Zero,
            (true, true) => Half::One,
            _ => Half::Half,
        };
        objective_halves += h.halves();
        values.insert(*v, h);
    }
    debug_assert_eq!(objective_halves, matching);
    HalfIntegralSolution {
        values,
        objective_halves,
        double_cover_matching: matching,
    }
}

/// One LP step: No if the optimum exceeds the budget, else delete
/// `V_0 ∪ V_1` and lower the budget by `|V_1|`. Returns whether anything
/// was removed.
pub(crate) fn lp_step(ws: &mut Workspace) -> std::result::Result<bool, Infeasible> {
    let sol = solve_lp_half_integral(&ws.graph);
    if sol.objective_halves > 2 * ws.budget {
        return Err(Infeasible(RuleTag::LpBound));
    }
    let zero = sol.zeros();
    let one = sol.ones();
    if zero.is_empty() && one.is_empty() {
        return Ok(false);
    }
    let touched: VertexSet = zero.union(&one).copied().collect();
    let delta = one.len();
    ws.apply(&touched, delta, Payload::Lp { zero, one }, |g| {
        g.remove_vertices(&touched)
    })?;
    Ok(true)
}

/// The LP rule, repeated until the all-½ solution is the one found, which
/// makes it idempotent. The result has at most 2k vertices.
pub fn rule_lp(inst: Instance) -> KernelOutcome {
    let mut ws = Workspace::new(inst);
    let res = (|| {
        while lp_step(&mut ws)? {}
        Ok(())
    })();
    ws.conclude(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(leaves: usize) -> Graph {
        let e: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::from_edges(leaves + 1, &e)
    }

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    fn set(v: &[u32]) -> VertexSet {
        v.iter().map(|&i| VertexId::new(i)).collect()
    }

    #[test]
    fn isolated_removed() {
        let mut g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]);
        g.add_vertex();
        let out = rule_isolated(Instance::new(g, 2));
        let r = out.reduction().unwrap();
        assert_eq!(r.instance.graph.vertex_count(), 3);
        assert!(!r.instance.graph.contains(VertexId::new(3)));
        assert!(matches!(out, KernelOutcome::Reduced(_)));

        let out = rule_isolated(Instance::new(Graph::with_vertices(3), 0));
        assert!(out.is_yes());
        assert_eq!(out.instance().unwrap().graph.vertex_count(), 0);

        let out = rule_isolated(Instance::new(c4(), 2));
        assert!(out.trace().is_empty());
    }

    #[test]
    fn high_degree_cases() {
        let out = rule_high_degree(Instance::new(star(5), 1));
        assert!(out.is_yes());
        assert_eq!(out.instance().unwrap().budget, 0);

        let two_stars = Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]);
        assert!(rule_high_degree(Instance::new(two_stars, 1)).is_no());

        let out = rule_high_degree(Instance::new(c4(), 2));
        assert_eq!(out.instance().unwrap().graph, c4());
    }

    #[test]
    fn buss_checks() {
        let pm = Graph::from_edges(12, &[(0, 1), (2, 3), (4, 5), (6, 7), (8, 9), (10, 11)]);
        let out = buss_size_check(Instance::new(pm, 2)).unwrap();
        assert!(matches!(
            out,
            KernelOutcome::No {
                rule: RuleTag::BussSize,
                ..
            }
        ));

        let out = buss_size_check(Instance::new(c4(), 2)).unwrap();
        assert_eq!(out.instance().unwrap().graph.vertex_count(), 4);

        assert!(buss_size_check(Instance::new(Graph::new(), 0))
            .unwrap()
            .is_yes());
        assert!(buss_size_check(Instance::new(star(3), 2)).is_err());
    }

    #[test]
    fn crown_in_star() {
        let g = star(4);
        let CrownOrMatching::Crown(cd) = find_crown_or_matching(&g, 1).unwrap() else {
            panic!("expected a crown");
        };
        cd.validate(&g).unwrap();
        assert_eq!(cd.head, set(&[0]));
        // The greedy matching pairs the center with leaf 1, so that leaf
        // lands in the body.
        assert_eq!(cd.crown, set(&[2, 3, 4]));
        assert_eq!(cd.body, set(&[1]));
        let out = rule_crown(Instance::new(g, 1), &cd).unwrap();
        assert!(out.is_yes());
        assert_eq!(out.instance().unwrap().budget, 0);
    }

    #[test]
    fn crown_or_matching_on_disjoint_edges() {
        let g = Graph::from_edges(6, &[(0, 1), (2, 3), (4, 5)]);
        // k = 1 needs 4 vertices; three disjoint edges give a 3-matching > k.
        assert!(matches!(
            find_crown_or_matching(&g, 1).unwrap(),
            CrownOrMatching::Matching(m) if m.len() >= 2
        ));
        assert!(find_crown_or_matching(&g, 2).is_err());
    }

    #[test]
    fn crown_head_larger_than_budget() {
        // Two stars K_{1,3}: crown decomposition with head = both centers.
        let g = Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]);
        let cd = CrownDecomposition {
            crown: set(&[1, 2, 3, 5, 6, 7]),
            head: set(&[0, 4]),
            body: VertexSet::new(),
            witness_matching: {
                let mut m = Matching::new();
                m.insert(VertexId::new(0), VertexId::new(1)).unwrap();
                m.insert(VertexId::new(4), VertexId::new(5)).unwrap();
                m
            },
        };
        assert!(rule_crown(Instance::new(g.clone(), 1), &cd)
            .unwrap()
            .is_no());
        assert!(rule_crown(Instance::new(g, 2), &cd).unwrap().is_yes());
    }

    #[test]
    fn invalid_crown_rejected() {
        let g = c4();
        let cd = CrownDecomposition {
            crown: set(&[0]),
            head: set(&[1]),
            body: set(&[2, 3]),
            witness_matching: Matching::new(),
        };
        assert!(rule_crown(Instance::new(g, 2), &cd).is_err());
    }

    #[test]
    fn crown_kernel_cases() {
        let out = crown_kernelize(Instance::new(c4(), 2));
        assert_eq!(out.instance().unwrap().graph, c4());
        assert!(crown_kernelize(Instance::new(star(9), 1)).is_yes());
        let two = Graph::from_edges(8, &[(0, 1), (0, 2), (0, 3), (4, 5), (4, 6), (4, 7)]);
        assert!(crown_kernelize(Instance::new(two, 2)).is_yes());
    }

    #[test]
    fn lp_values() {
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        let s = solve_lp_half_integral(&tri);
        assert_eq!(s.objective_halves, 3);
        assert!(s.values.values().all(|h| *h == Half::Half));

        let e = Graph::from_edges(2, &[(0, 1)]);
        let s = solve_lp_half_integral(&e);
        assert_eq!(s.objective_halves, 2);
        assert!(s.is_feasible(&e));

        let s = solve_lp_half_integral(&star(3));
        assert_eq!(s.objective_halves, 2);
        assert!(s.is_feasible(&star(3)));
        assert_eq!(s.double_cover_matching, s.objective_halves);
    }

    #[test]
    fn lp_rule_cases() {
        let tri = Graph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]);
        assert!(matches!(
            rule_lp(Instance::new(tri, 1)),
            KernelOutcome::No {
                rule: RuleTag::LpBound,
                ..
            }
        ));
        let out = rule_lp(Instance::new(star(3), 1));
        assert!(out.is_yes());
        assert_eq!(out.instance().unwrap().budget, 0);
        let out = rule_lp(Instance::new(c4(), 2));
        assert_eq!(out.instance().unwrap().graph, c4());
    }
}
