//! Turning a cover of a kernel into a cover of the original graph by
//! undoing the trace events newest first.

use crate::bits;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};
use crate::trace::{Payload, ReductionTrace, TraceEvent};

/// Lifts `cover`, a vertex cover of `kernel`, through `trace`. The result
/// covers the graph the trace started from and has at most
/// `|cover| + trace.budget_delta()` vertices, with equality whenever
/// `cover` is a minimum cover of `kernel`.
pub fn lift_solution(
    trace: &ReductionTrace,
    kernel: &Graph,
    cover: &VertexSet,
) -> Result<VertexSet> {
    if let Some(v) = cover.iter().find(|v| !kernel.contains(**v)) {
        return Err(Error::InvalidArgument(format!(
            "cover vertex {v} is not in the kernel"
        )));
    }
    if let Some((u, v)) = kernel
        .edges()
        .find(|(u, v)| !cover.contains(u) && !cover.contains(v))
    {
        return Err(Error::InvalidArgument(format!(
            "edge {u}-{v} of the kernel is uncovered"
        )));
    }
    let mut x = cover.clone();
    for event in trace.events().iter().rev() {
        lift_event(event, &mut x);
    }
    Ok(x)
}

fn lift_event(event: &TraceEvent, x: &mut VertexSet) {
    match &event.payload {
        Payload::Isolated { .. } => {}
        Payload::HighDegree { v } => {
            x.insert(*v);
        }
        Payload::Crown { head, .. } => x.extend(head.iter().copied()),
        Payload::Lp { one, .. } => x.extend(one.iter().copied()),
        Payload::Pendant { anchor, .. } => {
            x.insert(*anchor);
        }
        Payload::Dominance { removed, .. } => {
            x.insert(*removed);
        }
        Payload::DegreeTwo { v, a, b, z } => {
            if x.remove(z) {
                x.insert(*a);
                x.insert(*b);
            } else {
                x.insert(*v);
            }
        }
        Payload::CliqueCoMatching {
            v,
            c1,
            c2,
            non_edges,
        } => match c1.iter().find(|c| !x.contains(c)) {
            None => x.extend(c2.iter().copied()),
            Some(missing) => {
                let partner = non_edges
                    .iter()
                    .find(|(a, _)| a == missing)
                    .map(|(_, b)| *b)
                    .expect("every c1 vertex has one non-neighbor in c2");
                x.insert(*v);
                x.extend(c2.iter().copied().filter(|c| *c != partner));
            }
        },
        Payload::DegreeThree { v, a, b, c } => {
            let has = |w: &VertexId| x.contains(w);
            let drop = match (has(a), has(b), has(c)) {
                (true, true, true) => None,
                (true, true, false) => Some(*a),
                (false, true, true) => Some(*b),
                (true, false, true) => Some(*c),
                (false, true, false) => Some(*b),
                _ => unreachable!("the added edges ab and bc are covered"),
            };
            if let Some(d) = drop {
                x.remove(&d);
                x.insert(*v);
            }
        }
        Payload::DegreeFourPath { v, path } => {
            let [a, _, c, d] = *path;
            let missing: Vec<VertexId> = path.iter().copied().filter(|w| !x.contains(w)).collect();
            let drop = match missing.as_slice() {
                [] => None,
                [m] if *m == c || *m == d => Some(a),
                [_] => Some(d),
                _ => unreachable!("the neighborhood became a clique"),
            };
            if let Some(w) = drop {
                x.remove(&w);
                x.insert(*v);
            }
        }
        Payload::Replacement {
            core,
            core_edges,
            attachments,
            ext,
            ..
        } => {
            let covered: u32 = ext
                .iter()
                .enumerate()
                .filter(|(_, e)| e.iter().all(|w| x.contains(w)))
                .fold(0, |m, (i, _)| m | (1 << i));
            for w in core.iter().chain(&event.diff.added_vertices) {
                x.remove(w);
            }
            let forced: u32 = attachments
                .iter()
                .enumerate()
                .filter(|(_, a)| **a & !covered != 0)
                .fold(0, |m, (i, _)| m | (1 << i));
            let adj = bits::adjacency(core.len(), core_edges);
            let pick = bits::min_cover_containing(&adj, forced);
            x.extend(
                (0..core.len())
                    .filter(|i| pick & (1 << i) != 0)
                    .map(|i| core[i]),
            );
        }
    }
}
