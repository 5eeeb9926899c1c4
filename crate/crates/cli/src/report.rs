//! JSON run report printed by `vck kernelize` and `vck solve`.
//!
//! Schema (version 1). Every field is always present; `null` marks values
//! that do not apply to the run.
//!
//! ```text
//! {
//!   "schema_version": 1,
//!   "command": "kernelize" | "solve",
//!   "input": { "vertices": int, "edges": int, "budget": int | null },
//!   "pipeline": "buss" | "crown" | "lp" | "mindeg" | "mindeg+auto" | "all" | null,
//!   "kernelization": bool,
//!   "rules": { "<rule name>": int, ... },
//!   "kernel": null | {
//!     "vertices": int, "edges": int, "budget": int,
//!     "bound": { "kind": "buss", "max_vertices": int, "max_edges": int }
//!            | { "kind": "crown" | "lp", "max_vertices": int }
//!            | { "kind": "min-degree", "min_degree": 4, "max_neighborhood_edges": 1 | 2 }
//!   },
//!   "verdict": "yes" | "no" | "kernel",
//!   "rejected_by": "<rule name>" | null,
//!   "optimum": int | null,
//!   "cover": [int, ...] | null,
//!   "search_nodes": int | null,
//!   "timings_ms": { "parse": float, "kernelize": float, "solve": float, "lift": float }
//! }
//! ```
//!
//! Vertices in `cover` use the input file's 1-based DIMACS labels.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use vckernel::Graph;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Kernelize,
    Solve,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Yes,
    No,
    Kernel,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputStats {
    pub vertices: usize,
    pub edges: usize,
    pub budget: Option<usize>,
}

/// The size guarantee of the pipeline that produced a kernel.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum KernelBound {
    Buss {
        max_vertices: usize,
        max_edges: usize,
    },
    Crown {
        max_vertices: usize,
    },
    Lp {
        max_vertices: usize,
    },
    MinDegree {
        min_degree: usize,
        max_neighborhood_edges: usize,
    },
}

impl KernelBound {
    pub fn holds(&self, g: &Graph) -> bool {
        match *self {
            KernelBound::Buss {
                max_vertices,
                max_edges,
            } => g.vertex_count() <= max_vertices && g.edge_count() <= max_edges,
            KernelBound::Crown { max_vertices } | KernelBound::Lp { max_vertices } => {
                g.vertex_count() <= max_vertices
            }
            KernelBound::MinDegree {
                min_degree,
                max_neighborhood_edges,
            } => g.vertices().all(|v| {
                let d = g.degree(v);
                d >= min_degree
                    && (d != min_degree
                        || g.induced_edge_count(g.neighbors(v)) <= max_neighborhood_edges)
            }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct KernelStats {
    pub vertices: usize,
    pub edges: usize,
    pub budget: usize,
    pub bound: KernelBound,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Timings {
    pub parse: f64,
    pub kernelize: f64,
    pub solve: f64,
    pub lift: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: Command,
    pub input: InputStats,
    pub pipeline: Option<String>,
    pub kernelization: bool,
    pub rules: BTreeMap<String, usize>,
    pub kernel: Option<KernelStats>,
    pub verdict: Verdict,
    pub rejected_by: Option<String>,
    pub optimum: Option<usize>,
    pub cover: Option<Vec<u32>>,
    pub search_nodes: Option<u64>,
    pub timings_ms: Timings,
}

impl RunReport {
    pub fn new(command: Command, g: &Graph, budget: Option<usize>) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command,
            input: InputStats {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                budget,
            },
            pipeline: None,
            kernelization: true,
            rules: BTreeMap::new(),
            kernel: None,
            verdict: Verdict::Kernel,
            rejected_by: None,
            optimum: None,
            cover: None,
            search_nodes: None,
            timings_ms: Timings::default(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bounds_check_graphs() {
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert!(KernelBound::Buss {
            max_vertices: 4,
            max_edges: 6
        }
        .holds(&k4));
        assert!(!KernelBound::Buss {
            max_vertices: 4,
            max_edges: 5
        }
        .holds(&k4));
        assert!(!KernelBound::Lp { max_vertices: 3 }.holds(&k4));
        let min_deg = KernelBound::MinDegree {
            min_degree: 4,
            max_neighborhood_edges: 1,
        };
        assert!(!min_deg.holds(&k4));
        assert!(min_deg.holds(&Graph::new()));
    }

    #[test]
    fn report_round_trips() {
        let mut r = RunReport::new(Command::Solve, &Graph::from_edges(2, &[(0, 1)]), Some(1));
        r.kernel = Some(KernelStats {
            vertices: 0,
            edges: 0,
            budget: 0,
            bound: KernelBound::Crown { max_vertices: 0 },
        });
        let text = serde_json::to_string(&r).unwrap();
        assert!(text.contains("\"kind\":\"crown\""));
        assert_eq!(serde_json::from_str::<RunReport>(&text).unwrap(), r);
    }
}
