//! Undirected simple graphs with stable vertex identities.
//!
//! Vertex ids are handed out from a monotone counter and are never recycled
//! within one [`Graph`], so a vertex deleted by a reduction can still be named
//! unambiguously when a solution is lifted back.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Opaque, totally ordered vertex identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    pub const fn new(raw: u32) -> Self {
        VertexId(raw)
    }

    pub const fn raw(self) -> u32 {
        self.0
    }

    pub const fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

pub type VertexSet = BTreeSet<VertexId>;

/// Normalizes an undirected edge so the smaller id comes first.
pub fn edge(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Graph {
    adj: BTreeMap<VertexId, VertexSet>,
    edges: usize,
    next_id: u32,
}

impl PartialEq for Graph {
    /// Structural equality: same vertex ids, same edges. The id counter is
    /// not compared.
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// A graph on `n` isolated vertices with ids `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        let mut g = Graph::new();
        for _ in 0..n {
            g.add_vertex();
        }
        g
    }

    /// Builds a graph on vertices `0..n` from index pairs. Panics on
    /// out-of-range indices or self-loops; intended for fixtures.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(VertexId(u as u32), VertexId(v as u32))
                .expect("fixture edge must be valid");
        }
        g
    }

    pub fn add_vertex(&mut self) -> VertexId {
        let id = VertexId(self.next_id);
        self.next_id += 1;
        self.adj.insert(id, VertexSet::new());
        id
    }

    /// Re-inserts a vertex under a specific id. Used when replaying or
    /// reverting recorded reductions; fails if the id is currently present.
    pub fn insert_vertex_with_id(&mut self, id: VertexId) -> Result<()> {
        if self.adj.contains_key(&id) {
            return Err(Error::InvalidArgument(format!(
                "vertex {id} already present"
            )));
        }
        self.adj.insert(id, VertexSet::new());
        self.next_id = self.next_id.max(id.0 + 1);
        Ok(())
    }

    /// Adds the edge `uv`. Returns `false` if it was already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.require(u)?;
        self.require(v)?;
        let fresh = self.adj.get_mut(&u).unwrap().insert(v);
        if fresh {
            self.adj.get_mut(&v).unwrap().insert(u);
            self.edges += 1;
        }
        self.debug_check_local(u);
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: VertexId, v: VertexId) -> bool {
        let removed = match self.adj.get_mut(&u) {
            Some(nu) => nu.remove(&v),
            None => false,
        };
        if removed {
            self.adj.get_mut(&v).unwrap().remove(&u);
            self.edges -= 1;
        }
        removed
    }

    /// Deletes `v` and its incident edges, returning its former neighborhood.
    pub fn remove_vertex(&mut self, v: VertexId) -> Option<VertexSet> {
        let nbrs = self.adj.remove(&v)?;
        for w in &nbrs {
            self.adj.get_mut(w).unwrap().remove(&v);
        }
        self.edges -= nbrs.len();
        Some(nbrs)
    }

    pub fn remove_vertices<'a>(&mut self, vs: impl IntoIterator<Item = &'a VertexId>) {
        for v in vs {
            self.remove_vertex(*v);
        }
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.adj.contains_key(&v)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj.get(&u).is_some_and(|n| n.contains(&v))
    }

    /// Open neighborhood of `v`. Panics if `v` is not a vertex.
    pub fn neighbors(&self, v: VertexId) -> &VertexSet {
        self.adj
            .get(&v)
            .unwrap_or_else(|| panic!("vertex {v} is not in the graph"))
    }

    pub fn try_neighbors(&self, v: VertexId) -> Option<&VertexSet> {
        self.adj.get(&v)
    }

    pub fn closed_neighborhood(&self, v: VertexId) -> VertexSet {
        let mut n = self.neighbors(v).clone();
        n.insert(v);
        n
    }

    /// N(S): vertices outside `s` adjacent to some vertex of `s`.
    pub fn set_neighborhood(&self, s: &VertexSet) -> VertexSet {
        s.iter()
            .flat_map(|v| self.neighbors(*v).iter().copied())
            .filter(|w| !s.contains(w))
            .collect()
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.neighbors(v).len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.adj.keys().copied()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().copied().collect()
    }

    /// Edges as normalized pairs, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        self.adj
            .iter()
            .flat_map(|(&u, n)| n.range(u..).map(move |&v| (u, v)))
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges == 0
    }

    /// The id the next call to [`Graph::add_vertex`] will return.
    pub fn next_id(&self) -> VertexId {
        VertexId(self.next_id)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(|n| n.len()).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> Option<usize> {
        self.adj.values().map(|n| n.len()).min()
    }

    /// Number of edges with both endpoints in `s`. Vertices of `s` missing
    /// from the graph contribute nothing.
    pub fn induced_edge_count(&self, s: &VertexSet) -> usize {
        s.iter()
            .filter_map(|v| self.adj.get(v))
            .map(|n| n.intersection(s).count())
            .sum::<usize>()
            / 2
    }

    /// The subgraph induced by `s`, keeping vertex ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Graph {
        let mut adj = BTreeMap::new();
        let mut edges = 0;
        for v in s {
            if let Some(n) = self.adj.get(v) {
                let kept: VertexSet = n.intersection(s).copied().collect();
                edges += kept.len();
                adj.insert(*v, kept);
            }
        }
        Graph {
            adj,
            edges: edges / 2,
            next_id: self.next_id,
        }
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        self.induced_edge_count(s) == 0
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let n = s.len();
        self.induced_edge_count(s) == n * n.saturating_sub(1) / 2
    }

    pub fn is_vertex_cover(&self, cover: &VertexSet) -> bool {
        self.edges()
            .all(|(u, v)| cover.contains(&u) || cover.contains(&v))
    }

    pub fn isolated_vertices(&self) -> Vec<VertexId> {
        self.adj
            .iter()
            .filter(|(_, n)| n.is_empty())
            .map(|(v, _)| *v)
            .collect()
    }

    /// Contracts `s` into one fresh vertex `z` with `N(z) = N(s)`, deleting
    /// every vertex of `s`. Returns the id of `z`.
    pub fn contract_set(&mut self, s: &VertexSet) -> Result<VertexId> {
        if s.is_empty() {
            return Err(Error::InvalidArgument(
                "cannot contract an empty set".into(),
            ));
        }
        for v in s {
            self.require(*v)?;
        }
        let outside = self.set_neighborhood(s);
        self.remove_vertices(s);
        let z = self.add_vertex();
        for w in outside {
            self.add_edge(z, w)?;
        }
        Ok(z)
    }

    /// Checks symmetry, loop-freeness and the cached edge count.
    pub fn check_invariants(&self) -> Result<()> {
        let mut twice = 0;
        for (u, n) in &self.adj {
            if n.contains(u) {
                return Err(Error::SelfLoop(*u));
            }
            for v in n {
                if !self.adj.get(v).is_some_and(|nv| nv.contains(u)) {
                    return Err(Error::ContractViolation(format!(
                        "asymmetric adjacency between {u} and {v}"
                    )));
                }
            }
            if u.0 >= self.next_id {
                return Err(Error::ContractViolation(format!(
                    "vertex {u} above id counter"
                )));
            }
            twice += n.len();
        }
        if twice != 2 * self.edges {
            return Err(Error::ContractViolation("edge count out of sync".into()));
        }
        Ok(())
    }

    fn require(&self, v: VertexId) -> Result<()> {
        if self.adj.contains_key(&v) {
            Ok(())
        } else {
            Err(Error::MissingVertex(v))
        }
    }

    #[inline]
    fn debug_check_local(&self, v: VertexId) {
        if cfg!(debug_assertions) {
            let n = &self.adj[&v];
            debug_assert!(!n.contains(&v), "self-loop at {v}");
            debug_assert!(
                n.iter().all(|w| self.adj[w].contains(&v)),
                "asymmetric at {v}"
            );
        }
    }
}

/// A graph together with a vertex cover budget `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub graph: Graph,
    pub budget: usize,
}

impl Instance {
    pub fn new(graph: Graph, budget: usize) -> Self {
        Instance { graph, budget }
    }
}
