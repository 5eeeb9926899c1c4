//! Small-degree reduction rules and the driver that removes every vertex of
//! degree at most three and tames degree-four vertices.
//!
//! Each rule is exposed twice: as a single-application function on an
//! [`Instance`] and as a set of [`Site`]s (every position where the rule's
//! local guard holds) for position-by-position testing.

mod rules;

pub use rules::{DISJOINT_ATTACHMENTS, DISJOINT_CORE_EDGES, WEDGE_ATTACHMENTS, WEDGE_CORE_EDGES};

use crate::classic::{remove_isolated, remove_one_high_degree};
use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, VertexId};
use crate::kernel::{Halt, KernelOutcome, Workspace};
use crate::trace::RuleTag;

/// Largest degree the clique/co-matching partition search is run on.
pub const COMATCHING_MAX_DEGREE: usize = 4;

/// A position where a rule's local guard holds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Site {
    /// `leaf` has degree one; delete `leaf` and `anchor`.
    Pendant { leaf: VertexId, anchor: VertexId },
    /// Adjacent pair with `N(kept) ⊆ N[removed]`; delete `removed`.
    Dominance { removed: VertexId, kept: VertexId },
    /// Degree-two `v` with non-adjacent neighbors; contract `N[v]`.
    DegreeTwo { v: VertexId },
    /// Partition of `N(v)` into cliques `c1`, `c2` whose non-edges touch
    /// every `c1` vertex exactly once.
    CliqueCoMatching {
        v: VertexId,
        c1: Vec<VertexId>,
        c2: Vec<VertexId>,
    },
    /// Degree-three `v` with independent neighborhood.
    DegreeThree { v: VertexId },
    /// Degree-four `v` whose neighborhood induces a path.
    DegreeFourPath { v: VertexId },
    /// Degree-four `u` whose neighborhood edges are exactly `order[0]order[1]`
    /// and `order[2]order[3]`.
    DegreeFourDisjoint { u: VertexId, order: [VertexId; 4] },
    /// Degree-four `u` whose neighborhood edges are exactly
    /// `order[0]order[1]` and `order[1]order[2]`.
    DegreeFourWedge { u: VertexId, order: [VertexId; 4] },
}

impl Site {
    pub fn tag(&self) -> RuleTag {
        match self {
            Site::Pendant { .. } => RuleTag::Pendant,
            Site::Dominance { .. } => RuleTag::Dominance,
            Site::DegreeTwo { .. } => RuleTag::DegreeTwo,
            Site::CliqueCoMatching { .. } => RuleTag::CliqueCoMatching,
            Site::DegreeThree { .. } => RuleTag::DegreeThree,
            Site::DegreeFourPath { .. } => RuleTag::DegreeFourPath,
            Site::DegreeFourDisjoint { .. } => RuleTag::DegreeFourDisjoint,
            Site::DegreeFourWedge { .. } => RuleTag::DegreeFourWedge,
        }
    }

    /// How much applying the site lowers the budget.
    pub fn budget_delta(&self) -> usize {
        match self {
            Site::Pendant { .. } | Site::Dominance { .. } | Site::DegreeTwo { .. } => 1,
            Site::CliqueCoMatching { c2, .. } => c2.len(),
            _ => 0,
        }
    }
}

/// Every site of the rule `tag` in `g`. Tags that are not small-degree
/// rules have no sites.
pub fn applicable_sites(g: &Graph, tag: RuleTag) -> Vec<Site> {
    match tag {
        RuleTag::Pendant => rules::pendant_sites(g),
        RuleTag::Dominance => rules::dominance_sites(g),
        RuleTag::DegreeTwo => rules::degree_two_sites(g),
        RuleTag::CliqueCoMatching => rules::comatching_sites(g, COMATCHING_MAX_DEGREE),
        RuleTag::DegreeThree => rules::degree_three_sites(g),
        RuleTag::DegreeFourPath => rules::degree_four_path_sites(g),
        RuleTag::DegreeFourDisjoint => rules::disjoint_sites(g),
        RuleTag::DegreeFourWedge => rules::wedge_sites(g),
        _ => Vec::new(),
    }
}

/// Applies one rule at `site`. Fails with `InvalidArgument` if the site's
/// local guard does not hold in `inst`.
pub fn apply_site(inst: Instance, site: &Site) -> Result<KernelOutcome> {
    if !rules::guard_holds(&inst.graph, site) {
        return Err(Error::InvalidArgument(format!(
            "{} does not apply at {site:?}",
            site.tag()
        )));
    }
    let mut ws = Workspace::new(inst);
    let res = rules::apply(&mut ws, site);
    Ok(ws.conclude(res))
}

fn apply_first(inst: Instance, site: Option<Site>) -> KernelOutcome {
    let mut ws = Workspace::new(inst);
    let res = match site {
        Some(s) => rules::apply(&mut ws, &s),
        None => Ok(()),
    };
    ws.conclude(res)
}

/// Deletes the first pendant edge (by leaf id) and lowers the budget.
pub fn rule_pendant(inst: Instance) -> KernelOutcome {
    let site = rules::first_pendant(&inst.graph);
    apply_first(inst, site)
}

/// Deletes the first dominating vertex found.
pub fn rule_dominance(inst: Instance) -> KernelOutcome {
    let site = rules::first_dominance(&inst.graph);
    apply_first(inst, site)
}

/// Contracts the closed neighborhood of the first degree-two vertex.
/// Requires that dominance does not apply there, i.e. its neighbors are
/// non-adjacent.
pub fn rule_degree_two(inst: Instance) -> Result<KernelOutcome> {
    let g = &inst.graph;
    let site = g
        .vertices()
        .find(|v| g.degree(*v) == 2)
        .map(|v| Site::DegreeTwo { v });
    if let Some(Site::DegreeTwo { v }) = &site {
        let nb: Vec<VertexId> = g.neighbors(*v).iter().copied().collect();
        if g.has_edge(nb[0], nb[1]) {
            return Err(Error::ContractViolation(format!(
                "neighbors of degree-two vertex {v} are adjacent"
            )));
        }
    }
    Ok(apply_first(inst, site))
}

/// Applies the clique/co-matching rule at the first vertex of degree at
/// most `max_degree` that admits a qualifying partition.
pub fn rule_clique_comatching(inst: Instance, max_degree: usize) -> Result<KernelOutcome> {
    if max_degree > COMATCHING_MAX_DEGREE {
        return Err(Error::InvalidArgument(format!(
            "partition search supports degree at most {COMATCHING_MAX_DEGREE}"
        )));
    }
    let site = rules::first_comatching(&inst.graph, max_degree);
    Ok(apply_first(inst, site))
}

fn require_no_dominance_or_comatching(g: &Graph) -> Result<()> {
    if let Some(s) =
        rules::first_dominance(g).or_else(|| rules::first_comatching(g, COMATCHING_MAX_DEGREE))
    {
        return Err(Error::ContractViolation(format!(
            "{} still applies: {s:?}",
            s.tag()
        )));
    }
    Ok(())
}

fn degree_three_site(g: &Graph) -> Result<Option<Site>> {
    let Some(v) = g.vertices().find(|v| g.degree(*v) == 3) else {
        return Ok(None);
    };
    if !g.is_independent(g.neighbors(v)) {
        return Err(Error::ContractViolation(format!(
            "degree-three vertex {v} has a neighborhood edge"
        )));
    }
    Ok(Some(Site::DegreeThree { v }))
}

fn degree_four_path_site(g: &Graph) -> Result<Option<Site>> {
    let Some(v) = g
        .vertices()
        .find(|v| g.degree(*v) == 4 && g.induced_edge_count(g.neighbors(*v)) >= 3)
    else {
        return Ok(None);
    };
    if rules::path_order(g, v).is_none() {
        return Err(Error::ContractViolation(format!(
            "neighborhood of degree-four vertex {v} has three or more edges but is not a path"
        )));
    }
    Ok(Some(Site::DegreeFourPath { v }))
}

/// Removes the first degree-three vertex and adds the compensating edges.
/// Requires that neither dominance nor clique/co-matching applies.
pub fn rule_degree_three(inst: Instance) -> Result<KernelOutcome> {
    require_no_dominance_or_comatching(&inst.graph)?;
    let site = degree_three_site(&inst.graph)?;
    Ok(apply_first(inst, site))
}

/// Removes the first degree-four vertex whose neighborhood carries at
/// least three edges. Requires that neither dominance nor
/// clique/co-matching applies, which forces that neighborhood to be a path.
pub fn rule_degree_four_path(inst: Instance) -> Result<KernelOutcome> {
    require_no_dominance_or_comatching(&inst.graph)?;
    let site = degree_four_path_site(&inst.graph)?;
    Ok(apply_first(inst, site))
}

/// Replaces the first degree-four vertex whose neighborhood edges form two
/// disjoint edges.
pub fn rule_degree_four_two_edges_disjoint(inst: Instance) -> KernelOutcome {
    let site = rules::first_disjoint(&inst.graph);
    apply_first(inst, site)
}

/// Replaces the first degree-four vertex whose neighborhood edges form a
/// path on three vertices.
pub fn rule_degree_four_two_edges_path(inst: Instance) -> KernelOutcome {
    let site = rules::first_wedge(&inst.graph);
    apply_first(inst, site)
}

/// Options for [`kernelize_min_degree_with`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct MinDegreeOptions {
    /// Also run the two degree-four replacements.
    pub degree_four_replacements: bool,
}

/// Runs isolated, high-degree, pendant, dominance, clique/co-matching,
/// degree-two, degree-three and degree-four-path rules to a fixpoint.
pub fn kernelize_min_degree(inst: Instance) -> Result<KernelOutcome> {
    kernelize_min_degree_with(inst, MinDegreeOptions::default())
}

/// [`kernelize_min_degree`] plus the two degree-four replacements.
pub fn kernelize_min_degree_auto(inst: Instance) -> Result<KernelOutcome> {
    kernelize_min_degree_with(
        inst,
        MinDegreeOptions {
            degree_four_replacements: true,
        },
    )
}

pub fn kernelize_min_degree_with(inst: Instance, opts: MinDegreeOptions) -> Result<KernelOutcome> {
    let mut ws = Workspace::new(inst);
    let res = drive(&mut ws, opts);
    if res.is_ok() {
        check_min_degree_postcondition(&ws.graph, opts.degree_four_replacements)?;
    }
    ws.conclude_halt(res)
}

/// The next site to apply, in rule priority order.
fn next_site(g: &Graph, opts: MinDegreeOptions) -> Result<Option<Site>> {
    if let Some(s) = rules::first_pendant(g) {
        return Ok(Some(s));
    }
    if let Some(s) = rules::first_dominance(g) {
        return Ok(Some(s));
    }
    if let Some(s) = rules::first_comatching(g, COMATCHING_MAX_DEGREE) {
        return Ok(Some(s));
    }
    if let Some(v) = g.vertices().find(|v| g.degree(*v) == 2) {
        // Unreachable when clique/co-matching runs first, kept for the
        // documented order.
        return Ok(Some(Site::DegreeTwo { v }));
    }
    if let Some(s) = degree_three_site(g)? {
        return Ok(Some(s));
    }
    if let Some(s) = degree_four_path_site(g)? {
        return Ok(Some(s));
    }
    if opts.degree_four_replacements {
        if let Some(s) = rules::first_disjoint(g).or_else(|| rules::first_wedge(g)) {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

fn drive(ws: &mut Workspace, opts: MinDegreeOptions) -> std::result::Result<(), Halt> {
    loop {
        ws.check_budget()?;
        if remove_isolated(ws) {
            continue;
        }
        if remove_one_high_degree(ws)? {
            continue;
        }
        match next_site(&ws.graph, opts)? {
            Some(site) => rules::apply(ws, &site)?,
            None => return Ok(()),
        }
    }
}

/// Minimum degree at least four, and every degree-four vertex has at most
/// two neighborhood edges (at most one with the replacements enabled).
pub fn check_min_degree_postcondition(g: &Graph, with_replacements: bool) -> Result<()> {
    let limit = if with_replacements { 1 } else { 2 };
    for v in g.vertices() {
        let d = g.degree(v);
        if d < 4 {
            return Err(Error::ContractViolation(format!(
                "vertex {v} has degree {d}"
            )));
        }
        if d == 4 {
            let e = g.induced_edge_count(g.neighbors(v));
            if e > limit {
                return Err(Error::ContractViolation(format!(
                    "degree-four vertex {v} has {e} neighborhood edges"
                )));
            }
        }
    }
    Ok(())
}
