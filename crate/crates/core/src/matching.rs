//! Maximum bipartite matching (Hopcroft–Karp) and König covers.
//!
//! All searches visit vertices in id order so results are reproducible.

use std::collections::{BTreeMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{edge, Graph, VertexId, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bipartition {
    pub left: VertexSet,
    pub right: VertexSet,
}

impl Bipartition {
    pub fn new(left: VertexSet, right: VertexSet) -> Self {
        Bipartition { left, right }
    }
}

/// A set of vertex-disjoint edges, stored as a symmetric mate map.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Matching {
    mate: BTreeMap<VertexId, VertexId>,
}

impl Matching {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `uv`; fails if either endpoint is already matched.
    pub fn insert(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        if u == v || self.mate.contains_key(&u) || self.mate.contains_key(&v) {
            return Err(Error::InvalidArgument(format!(
                "edge {u}-{v} conflicts with the matching"
            )));
        }
        self.mate.insert(u, v);
        self.mate.insert(v, u);
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.mate.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.mate.is_empty()
    }

    pub fn mate(&self, v: VertexId) -> Option<VertexId> {
        self.mate.get(&v).copied()
    }

    pub fn is_matched(&self, v: VertexId) -> bool {
        self.mate.contains_key(&v)
    }

    /// Matched vertices, V(M).
    pub fn vertices(&self) -> VertexSet {
        self.mate.keys().copied().collect()
    }

    /// Edges as normalized pairs in id order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.mate
            .iter()
            .filter(|(u, v)| u < v)
            .map(|(u, v)| (*u, *v))
    }

    pub fn saturates(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.is_matched(*v))
    }

    /// Every pair is an edge of `g` (disjointness holds by construction).
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.edges().all(|(u, v)| g.has_edge(u, v))
    }
}

/// Dense view of the bipartite subgraph between two vertex lists. Edges
/// inside a side are ignored.
pub(crate) struct Bipartite {
    pub left: Vec<VertexId>,
    pub right: Vec<VertexId>,
    adj: Vec<Vec<usize>>,
}

const FREE: usize = usize::MAX;

impl Bipartite {
    pub fn between(g: &Graph, left: &VertexSet, right: &VertexSet) -> Self {
        let left_v: Vec<VertexId> = left.iter().copied().collect();
        let right_v: Vec<VertexId> = right.iter().copied().collect();
        let adj = left_v
            .iter()
            .map(|u| {
                g.neighbors(*u)
                    .iter()
                    .filter_map(|w| right_v.binary_search(w).ok())
                    .collect()
            })
            .collect();
        Bipartite {
            left: left_v,
            right: right_v,
            adj,
        }
    }

    pub fn from_adjacency(left: Vec<VertexId>, right: Vec<VertexId>, adj: Vec<Vec<usize>>) -> Self {
        Bipartite { left, right, adj }
    }

    /// Returns `(mate_left, mate_right)` of a maximum matching.
    pub fn hopcroft_karp(&self) -> (Vec<usize>, Vec<usize>) {
        let nl = self.left.len();
        let mut mate_l = vec![FREE; nl];
        let mut mate_r = vec![FREE; self.right.len()];
        let mut dist = vec![0usize; nl];
        loop {
            // BFS layering from free left vertices.
            let mut queue = VecDeque::new();
            for u in 0..nl {
                if mate_l[u] == FREE {
                    dist[u] = 0;
                    queue.push_back(u);
                } else {
                    dist[u] = usize::MAX;
                }
            }
            let mut found = false;
            while let Some(u) = queue.pop_front() {
                for &r in &self.adj[u] {
                    let w = mate_r[r];
                    if w == FREE {
                        found = true;
                    } else if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            if !found {
                break;
            }
            for u in 0..nl {
                if mate_l[u] == FREE {
                    self.augment(u, &mut mate_l, &mut mate_r, &mut dist);
                }
            }
        }
        (mate_l, mate_r)
    }

    fn augment(
        &self,
        u: usize,
        mate_l: &mut [usize],
        mate_r: &mut [usize],
        dist: &mut [usize],
    ) -> bool {
        for &r in &self.adj[u] {
            let w = mate_r[r];
            let ok = w == FREE
                || (dist[w] == dist[u].wrapping_add(1) && self.augment(w, mate_l, mate_r, dist));
            if ok {
                mate_l[u] = r;
                mate_r[r] = u;
                return true;
            }
        }
        dist[u] = usize::MAX;
        false
    }

    /// Alternating reachability from free left vertices. Returns
    /// `(reached_left, reached_right)`, or `None` if a free right vertex is
    /// reached (the matching admits an augmenting path).
    pub fn alternating_reach(
        &self,
        mate_l: &[usize],
        mate_r: &[usize],
    ) -> Option<(Vec<bool>, Vec<bool>)> {
        let mut zl = vec![false; self.left.len()];
        let mut zr = vec![false; self.right.len()];
        let mut queue: VecDeque<usize> = (0..self.left.len())
            .filter(|&u| mate_l[u] == FREE)
            .collect();
        for &u in &queue {
            zl[u] = true;
        }
        while let Some(u) = queue.pop_front() {
            for &r in &self.adj[u] {
                if zr[r] || mate_l[u] == r {
                    continue;
                }
                zr[r] = true;
                let w = mate_r[r];
                if w == FREE {
                    return None;
                }
                if !zl[w] {
                    zl[w] = true;
                    queue.push_back(w);
                }
            }
        }
        Some((zl, zr))
    }

    /// König cover `(L \ Z) ∪ (R ∩ Z)` for a maximum matching.
    pub fn konig(&self, mate_l: &[usize], mate_r: &[usize]) -> Option<(Vec<bool>, Vec<bool>)> {
        let (zl, zr) = self.alternating_reach(mate_l, mate_r)?;
        let cover_l = zl.iter().map(|z| !z).collect();
        Some((cover_l, zr))
    }

    pub fn to_matching(&self, mate_l: &[usize]) -> Matching {
        let mut m = Matching::new();
        for (u, &r) in mate_l.iter().enumerate() {
            if r != FREE {
                m.insert(self.left[u], self.right[r])
                    .expect("mates are disjoint");
            }
        }
        m
    }
}

fn validate_parts(g: &Graph, parts: &Bipartition) -> Result<()> {
    if let Some(v) = parts.left.intersection(&parts.right).next() {
        return Err(Error::InvalidBipartition(format!(
            "vertex {v} is on both sides"
        )));
    }
    for v in parts.left.iter().chain(&parts.right) {
        if !g.contains(*v) {
            return Err(Error::MissingVertex(*v));
        }
    }
    for side in [&parts.left, &parts.right] {
        if let Some((u, v)) = g.induced_subgraph(side).edges().next() {
            return Err(Error::InvalidBipartition(format!(
                "edge {u}-{v} lies inside one side"
            )));
        }
    }
    Ok(())
}

/// Maximum matching of the bipartite graph `g[left, right]`.
pub fn maximum_bipartite_matching(g: &Graph, parts: &Bipartition) -> Result<Matching> {
    validate_parts(g, parts)?;
    let b = Bipartite::between(g, &parts.left, &parts.right);
    let (mate_l, _) = b.hopcroft_karp();
    Ok(b.to_matching(&mate_l))
}

/// Greedy maximal matching scanning edges in lexicographic order.
pub fn greedy_maximal_matching(g: &Graph) -> Matching {
    let mut m = Matching::new();
    for (u, v) in g.edges() {
        if !m.is_matched(u) && !m.is_matched(v) {
            m.insert(u, v).expect("both endpoints free");
        }
    }
    m
}

/// Minimum vertex cover of `g[left, right]` from a maximum matching `m`,
/// via alternating reachability from unmatched left vertices.
pub fn konig_cover(g: &Graph, parts: &Bipartition, m: &Matching) -> Result<VertexSet> {
    validate_parts(g, parts)?;
    let b = Bipartite::between(g, &parts.left, &parts.right);
    let mut mate_l = vec![FREE; b.left.len()];
    let mut mate_r = vec![FREE; b.right.len()];
    for (u, v) in m.edges() {
        if !g.has_edge(u, v) {
            return Err(Error::InvalidArgument(format!("{u}-{v} is not an edge")));
        }
        let (l, r) = if parts.left.contains(&u) {
            (u, v)
        } else {
            (v, u)
        };
        let (Ok(li), Ok(ri)) = (b.left.binary_search(&l), b.right.binary_search(&r)) else {
            return Err(Error::InvalidArgument(format!(
                "matching edge {} does not cross the bipartition",
                format_edge(u, v)
            )));
        };
        mate_l[li] = ri;
        mate_r[ri] = li;
    }
    let (cl, cr) = b.konig(&mate_l, &mate_r).ok_or_else(|| {
        Error::InvalidArgument("matching is not maximum (augmenting path found)".into())
    })?;
    Ok(b.left
        .iter()
        .zip(cl)
        .filter(|(_, c)| *c)
        .map(|(v, _)| *v)
        .chain(b.right.iter().zip(cr).filter(|(_, c)| *c).map(|(v, _)| *v))
        .collect())
}

fn format_edge(u: VertexId, v: VertexId) -> String {
    let (a, b) = edge(u, v);
    format!("{a}-{b}")
}
