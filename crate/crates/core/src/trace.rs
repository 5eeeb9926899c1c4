//! Reduction traces.
//!
//! Every applied rule appends a [`TraceEvent`] carrying the exact graph diff
//! (so the kernel can be replayed from the original graph, or the original
//! recovered from the kernel) and a rule-specific [`Payload`] holding what
//! solution lifting needs.
//!
//! # Log format
//!
//! [`ReductionTrace::to_log`] writes one line per event:
//!
//! ```text
//! <tag> dk=<budget delta> <key>=<ids> ...
//! ```
//!
//! `<ids>` is a comma-separated list of vertex ids (`-` when empty). Lists of
//! pairs use `a:b`. Keys depend on the rule, e.g.
//! `degree-two dk=1 v=4 a=3 b=5 z=9`.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{edge, Graph, VertexId, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RuleTag {
    /// Budget exhausted while edges remain.
    Budget,
    Isolated,
    HighDegree,
    /// Edge or vertex count exceeds the quadratic bound.
    BussSize,
    Crown,
    /// A matching larger than the budget was found while searching for a crown.
    CrownMatching,
    Lp,
    /// LP optimum exceeds the budget.
    LpBound,
    Pendant,
    Dominance,
    DegreeTwo,
    CliqueCoMatching,
    DegreeThree,
    DegreeFourPath,
    DegreeFourDisjoint,
    DegreeFourWedge,
    /// Generic c-equivalent replacement.
    Replacement,
}

impl RuleTag {
    pub const ALL: [RuleTag; 17] = [
        RuleTag::Budget,
        RuleTag::Isolated,
        RuleTag::HighDegree,
        RuleTag::BussSize,
        RuleTag::Crown,
        RuleTag::CrownMatching,
        RuleTag::Lp,
        RuleTag::LpBound,
        RuleTag::Pendant,
        RuleTag::Dominance,
        RuleTag::DegreeTwo,
        RuleTag::CliqueCoMatching,
        RuleTag::DegreeThree,
        RuleTag::DegreeFourPath,
        RuleTag::DegreeFourDisjoint,
        RuleTag::DegreeFourWedge,
        RuleTag::Replacement,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleTag::Budget => "budget",
            RuleTag::Isolated => "isolated",
            RuleTag::HighDegree => "high-degree",
            RuleTag::BussSize => "buss-size",
            RuleTag::Crown => "crown",
            RuleTag::CrownMatching => "crown-matching",
            RuleTag::Lp => "lp",
            RuleTag::LpBound => "lp-bound",
            RuleTag::Pendant => "pendant",
            RuleTag::Dominance => "dominance",
            RuleTag::DegreeTwo => "degree-two",
            RuleTag::CliqueCoMatching => "clique-comatching",
            RuleTag::DegreeThree => "degree-three",
            RuleTag::DegreeFourPath => "degree-four-path",
            RuleTag::DegreeFourDisjoint => "degree-four-disjoint",
            RuleTag::DegreeFourWedge => "degree-four-wedge",
            RuleTag::Replacement => "replacement",
        }
    }
}

impl fmt::Display for RuleTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Rule-specific data needed to lift a cover across one event.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Payload {
    Isolated {
        vertices: Vec<VertexId>,
    },
    HighDegree {
        v: VertexId,
    },
    Crown {
        crown: VertexSet,
        head: VertexSet,
    },
    Lp {
        zero: VertexSet,
        one: VertexSet,
    },
    Pendant {
        leaf: VertexId,
        anchor: VertexId,
    },
    /// `removed` dominates: `N(kept) ⊆ N[removed]`.
    Dominance {
        removed: VertexId,
        kept: VertexId,
    },
    DegreeTwo {
        v: VertexId,
        a: VertexId,
        b: VertexId,
        z: VertexId,
    },
    CliqueCoMatching {
        v: VertexId,
        c1: Vec<VertexId>,
        c2: Vec<VertexId>,
        /// Non-edges of `G[C1, C2]` as `(c1, c2)` pairs.
        non_edges: Vec<(VertexId, VertexId)>,
    },
    DegreeThree {
        v: VertexId,
        a: VertexId,
        b: VertexId,
        c: VertexId,
    },
    /// `path` is the induced path `a-b-c-d` on `N(v)`.
    DegreeFourPath {
        v: VertexId,
        path: [VertexId; 4],
    },
    /// A boundaried core replaced by an equivalent one. Holds the original
    /// core (vertices, internal edges as index pairs, attachment masks) and
    /// the external neighborhoods each interface stood for.
    Replacement {
        tag: RuleTag,
        core: Vec<VertexId>,
        core_edges: Vec<(usize, usize)>,
        attachments: Vec<u32>,
        ext: Vec<VertexSet>,
    },
}

impl Payload {
    pub fn tag(&self) -> RuleTag {
        match self {
            Payload::Isolated { .. } => RuleTag::Isolated,
            Payload::HighDegree { .. } => RuleTag::HighDegree,
            Payload::Crown { .. } => RuleTag::Crown,
            Payload::Lp { .. } => RuleTag::Lp,
            Payload::Pendant { .. } => RuleTag::Pendant,
            Payload::Dominance { .. } => RuleTag::Dominance,
            Payload::DegreeTwo { .. } => RuleTag::DegreeTwo,
            Payload::CliqueCoMatching { .. } => RuleTag::CliqueCoMatching,
            Payload::DegreeThree { .. } => RuleTag::DegreeThree,
            Payload::DegreeFourPath { .. } => RuleTag::DegreeFourPath,
            Payload::Replacement { tag, .. } => *tag,
        }
    }
}

/// Exact change one event made to the graph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GraphDiff {
    /// Deleted vertices with their neighborhoods at deletion time.
    pub removed_vertices: Vec<(VertexId, Vec<VertexId>)>,
    pub added_vertices: Vec<VertexId>,
    /// Removed edges whose endpoints both survive.
    pub removed_edges: Vec<(VertexId, VertexId)>,
    pub added_edges: Vec<(VertexId, VertexId)>,
}

impl GraphDiff {
    /// Computes the diff given the pre-mutation neighborhoods of every
    /// touched vertex. Every changed edge must have an endpoint that was
    /// touched or is new; this is checked against the edge counts.
    pub(crate) fn compute(
        before: &[(VertexId, VertexSet)],
        before_edges: usize,
        first_new: VertexId,
        after: &Graph,
    ) -> GraphDiff {
        let mut diff = GraphDiff::default();
        let mut removed = BTreeSet::new();
        let mut added = BTreeSet::new();
        let mut gone_edges = BTreeSet::new();
        for (v, nb) in before {
            match after.try_neighbors(*v) {
                None => {
                    diff.removed_vertices
                        .push((*v, nb.iter().copied().collect()));
                    gone_edges.extend(nb.iter().map(|w| edge(*v, *w)));
                }
                Some(na) => {
                    for w in nb.difference(na) {
                        if after.contains(*w) {
                            removed.insert(edge(*v, *w));
                        }
                    }
                    for w in na.difference(nb) {
                        added.insert(edge(*v, *w));
                    }
                }
            }
        }
        for v in after.vertices().filter(|v| *v >= first_new) {
            diff.added_vertices.push(v);
            added.extend(after.neighbors(v).iter().map(|w| edge(v, *w)));
        }
        diff.removed_edges = removed.into_iter().collect();
        diff.added_edges = added.into_iter().collect();
        assert_eq!(
            before_edges + diff.added_edges.len() - gone_edges.len() - diff.removed_edges.len(),
            after.edge_count(),
            "reduction changed an edge between untouched vertices"
        );
        diff
    }

    /// Replays the change on the pre-event graph.
    pub fn apply(&self, g: &mut Graph) {
        for (u, v) in &self.removed_edges {
            g.remove_edge(*u, *v);
        }
        for (v, _) in &self.removed_vertices {
            g.remove_vertex(*v);
        }
        for v in &self.added_vertices {
            g.insert_vertex_with_id(*v)
                .expect("added vertex id is fresh");
        }
        for (u, v) in &self.added_edges {
            g.add_edge(*u, *v).expect("added edge endpoints exist");
        }
    }

    /// Undoes the change on the post-event graph.
    pub fn revert(&self, g: &mut Graph) {
        for (u, v) in &self.added_edges {
            g.remove_edge(*u, *v);
        }
        for v in &self.added_vertices {
            g.remove_vertex(*v);
        }
        for (v, _) in &self.removed_vertices {
            g.insert_vertex_with_id(*v)
                .expect("removed vertex id is free");
        }
        for (v, nb) in &self.removed_vertices {
            for w in nb {
                g.add_edge(*v, *w).expect("restored endpoints exist");
            }
        }
        for (u, v) in &self.removed_edges {
            g.add_edge(*u, *v).expect("restored endpoints exist");
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEvent {
    pub payload: Payload,
    pub budget_delta: usize,
    pub diff: GraphDiff,
}

impl TraceEvent {
    pub fn tag(&self) -> RuleTag {
        self.payload.tag()
    }
}

fn ids<'a>(it: impl IntoIterator<Item = &'a VertexId>) -> String {
    let s: Vec<String> = it.into_iter().map(|v| v.to_string()).collect();
    if s.is_empty() {
        "-".into()
    } else {
        s.join(",")
    }
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} dk={}", self.tag(), self.budget_delta)?;
        match &self.payload {
            Payload::Isolated { vertices } => write!(f, " v={}", ids(vertices)),
            Payload::HighDegree { v } => write!(f, " v={v}"),
            Payload::Crown { crown, head } => write!(f, " crown={} head={}", ids(crown), ids(head)),
            Payload::Lp { zero, one } => write!(f, " zero={} one={}", ids(zero), ids(one)),
            Payload::Pendant { leaf, anchor } => write!(f, " leaf={leaf} anchor={anchor}"),
            Payload::Dominance { removed, kept } => write!(f, " removed={removed} kept={kept}"),
            Payload::DegreeTwo { v, a, b, z } => write!(f, " v={v} a={a} b={b} z={z}"),
            Payload::CliqueCoMatching {
                v,
                c1,
                c2,
                non_edges,
            } => {
                let m: Vec<String> = non_edges.iter().map(|(x, y)| format!("{x}:{y}")).collect();
                let m = if m.is_empty() {
                    "-".to_string()
                } else {
                    m.join(",")
                };
                write!(f, " v={v} c1={} c2={} m={m}", ids(c1), ids(c2))
            }
            Payload::DegreeThree { v, a, b, c } => write!(f, " v={v} a={a} b={b} c={c}"),
            Payload::DegreeFourPath { v, path } => write!(f, " v={v} path={}", ids(path)),
            Payload::Replacement { core, ext, .. } => {
                write!(f, " core={}", ids(core))?;
                for (i, e) in ext.iter().enumerate() {
                    write!(f, " ext{i}={}", ids(e))?;
                }
                Ok(())
            }
        }
    }
}

/// Ordered log of applied reductions.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    events: Vec<TraceEvent>,
}

impl ReductionTrace {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, event: TraceEvent) {
        self.events.push(event);
    }

    pub fn extend(&mut self, other: ReductionTrace) {
        self.events.extend(other.events);
    }

    pub fn events(&self) -> &[TraceEvent] {
        &self.events
    }

    pub fn len(&self) -> usize {
        self.events.len()
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    /// Total amount by which the budget was lowered.
    pub fn budget_delta(&self) -> usize {
        self.events.iter().map(|e| e.budget_delta).sum()
    }

    pub fn count(&self, tag: RuleTag) -> usize {
        self.events.iter().filter(|e| e.tag() == tag).count()
    }

    /// Applies every diff, in order, to a copy of `original`.
    pub fn replay(&self, original: &Graph) -> Graph {
        let mut g = original.clone();
        for e in &self.events {
            e.diff.apply(&mut g);
        }
        g
    }

    /// Reverts every diff, newest first, starting from the kernel graph.
    pub fn unwind(&self, kernel: &Graph) -> Graph {
        let mut g = kernel.clone();
        for e in self.events.iter().rev() {
            e.diff.revert(&mut g);
        }
        g
    }

    pub fn to_log(&self) -> String {
        self.events.iter().map(|e| format!("{e}\n")).collect()
    }
}
