//! Replacing an occurrence of one pattern in a host graph by an equivalent
//! pattern.

use super::{check_equivalence, AttachmentPattern};
use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, VertexId, VertexSet};
use crate::kernel::{KernelOutcome, Workspace};
use crate::trace::{Payload, RuleTag};

/// Where a pattern sits in a host: `core[w]` is the host vertex playing
/// core vertex `w`, and `ext[i]` is the external neighborhood behind
/// interface `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Occurrence {
    pub core: Vec<VertexId>,
    pub ext: Vec<VertexSet>,
}

impl Occurrence {
    /// Reads the external neighborhoods off the host, using for each
    /// interface `i` a core vertex whose mask is exactly `{i}`.
    pub fn infer(host: &Graph, p: &AttachmentPattern, core: Vec<VertexId>) -> Result<Occurrence> {
        if core.len() != p.n() {
            return Err(Error::InvalidArgument(format!(
                "{} host vertices for a core of {}",
                core.len(),
                p.n()
            )));
        }
        for v in &core {
            if !host.contains(*v) {
                return Err(Error::MissingVertex(*v));
            }
        }
        let inside: VertexSet = core.iter().copied().collect();
        let mut ext = Vec::with_capacity(p.t());
        for i in 0..p.t() {
            let w = (0..p.n())
                .find(|w| p.attachment(*w) == 1 << i)
                .ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "no core vertex is attached to interface {i} alone"
                    ))
                })?;
            ext.push(
                host.neighbors(core[w])
                    .difference(&inside)
                    .copied()
                    .collect(),
            );
        }
        let occ = Occurrence { core, ext };
        occ.validate(host, p)?;
        Ok(occ)
    }

    /// Checks that `core` induces exactly the pattern's core and that each
    /// core vertex's outside neighborhood is the union of the external
    /// neighborhoods its mask names.
    pub fn validate(&self, host: &Graph, p: &AttachmentPattern) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidArgument(format!("invalid occurrence: {m}")));
        if self.core.len() != p.n() || self.ext.len() != p.t() {
            return bad("size mismatch".into());
        }
        let inside: VertexSet = self.core.iter().copied().collect();
        if inside.len() != self.core.len() {
            return bad("core vertices repeat".into());
        }
        for v in &self.core {
            if !host.contains(*v) {
                return Err(Error::MissingVertex(*v));
            }
        }
        for (i, e) in self.ext.iter().enumerate() {
            if let Some(v) = e.iter().find(|v| inside.contains(v) || !host.contains(**v)) {
                return bad(format!(
                    "external vertex {v} of interface {i} is in the core or missing"
                ));
            }
        }
        for a in 0..p.n() {
            for b in a + 1..p.n() {
                if host.has_edge(self.core[a], self.core[b]) != p.has_edge(a, b) {
                    return bad(format!("core pair {a}-{b} does not match"));
                }
            }
            let want = self.union(p.attachment(a));
            let have: VertexSet = host
                .neighbors(self.core[a])
                .difference(&inside)
                .copied()
                .collect();
            if want != have {
                return bad(format!(
                    "outside neighborhood of core vertex {a} does not match its mask"
                ));
            }
        }
        Ok(())
    }

    fn union(&self, mask: u32) -> VertexSet {
        self.ext
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .flat_map(|(_, e)| e.iter().copied())
            .collect()
    }
}

/// Rewrites `host`: the occurrence of `p1` is removed and `p2` inserted,
/// each inserted vertex joined to the external neighborhoods its mask names.
/// Vertex `j` of `p2` reuses the id `occ.core[j]` where one exists; extra
/// vertices get fresh ids. The budget drops from `k` to `k - c`.
pub fn swap_equivalent(
    host: &Graph,
    p1: &AttachmentPattern,
    occ: &Occurrence,
    p2: &AttachmentPattern,
    c: u32,
    k: usize,
) -> Result<Instance> {
    match swap_reduce(Instance::new(host.clone(), k), p1, occ, p2, c)? {
        KernelOutcome::No { .. } => Err(Error::InvalidArgument(format!(
            "budget {k} is below the offset {c}"
        ))),
        out => Ok(out.into_reduction().expect("not a No outcome").instance),
    }
}

/// [`swap_equivalent`] recorded as a trace event so covers can be lifted.
pub fn swap_reduce(
    inst: Instance,
    p1: &AttachmentPattern,
    occ: &Occurrence,
    p2: &AttachmentPattern,
    c: u32,
) -> Result<KernelOutcome> {
    match check_equivalence(p1, p2)? {
        Some(found) if found == c => {}
        Some(found) => {
            return Err(Error::InvalidArgument(format!(
                "patterns are {found}-equivalent, not {c}-equivalent"
            )))
        }
        None => return Err(Error::InvalidArgument("patterns are not equivalent".into())),
    }
    occ.validate(&inst.graph, p1)?;
    let mut ws = Workspace::new(inst);
    let payload = Payload::Replacement {
        tag: RuleTag::Replacement,
        core: occ.core.clone(),
        core_edges: p1.edges(),
        attachments: p1.attachments().to_vec(),
        ext: occ.ext.clone(),
    };
    let touched: VertexSet = occ.core.iter().copied().collect();
    let res = ws.apply(&touched, c as usize, payload, |g| {
        g.remove_vertices(&touched);
        let ids: Vec<VertexId> = (0..p2.n())
            .map(|j| match occ.core.get(j) {
                Some(v) => {
                    g.insert_vertex_with_id(*v).expect("id was just freed");
                    *v
                }
                None => g.add_vertex(),
            })
            .collect();
        for (a, b) in p2.edges() {
            g.add_edge(ids[a], ids[b]).expect("new core vertices exist");
        }
        for (j, v) in ids.iter().enumerate() {
            for w in occ.union(p2.attachment(j)) {
                g.add_edge(*v, w).expect("external vertices exist");
            }
        }
    });
    Ok(ws.conclude(res))
}
