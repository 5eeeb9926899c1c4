//! Boundaried graphs, attachment patterns and their profiles.
//!
//! An [`AttachmentPattern`] is a small core graph whose vertices are wired
//! to `t` external neighborhoods: core vertex `w` is adjacent to every
//! vertex of each neighborhood named in its attachment mask. A classic
//! `t`-boundaried graph is the special case where interface vertex `x_i`
//! has mask `{i}` and every other vertex has the empty mask.
//!
//! The profile of a pattern maps each `X ⊆ [t]` (the interfaces whose
//! external neighborhood is entirely in the cover) to the fewest core
//! vertices a compatible cover can use. A core vertex attached to an
//! interface outside `X` has an uncovered external neighbor and is
//! therefore forced into the cover, so
//! `profile[X] = min { |S| : S covers the core, S ⊇ forced(X) }`.
//! [`verify_profile_against_witness`] recomputes the same table from the
//! gluing definition.

mod certificate;
mod discover;
mod swap;

pub use certificate::{parse_certificates, Certificate};
pub use discover::{
    discover_replacements, estimate_candidates, DiscoverOptions, Discovery, SearchSpace,
    DEFAULT_CANDIDATE_LIMIT,
};
pub use swap::{swap_equivalent, swap_reduce, Occurrence};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::bits;
use crate::degree::{
    DISJOINT_ATTACHMENTS, DISJOINT_CORE_EDGES, WEDGE_ATTACHMENTS, WEDGE_CORE_EDGES,
};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId, VertexSet};

/// Default core size limit of [`compute_profile`].
pub const PROFILE_CORE_CAP: usize = 12;
/// Largest interface count a pattern may have.
pub const MAX_INTERFACES: usize = 16;
/// Largest glued graph [`verify_profile_against_witness`] enumerates.
pub const WITNESS_CAP: usize = 24;

/// A profile entry. Finite cores always admit a compatible cover, so
/// `Infinite` does not arise from [`compute_profile`]; it is kept for
/// tables read from elsewhere.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Cost {
    Finite(u32),
    Infinite,
}

impl Cost {
    pub fn finite(self) -> Option<u32> {
        match self {
            Cost::Finite(v) => Some(v),
            Cost::Infinite => None,
        }
    }
}

impl fmt::Display for Cost {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cost::Finite(v) => write!(f, "{v}"),
            Cost::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Cost {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(Cost::Infinite);
        }
        s.parse()
            .map(Cost::Finite)
            .map_err(|_| Error::InvalidArgument(format!("bad profile entry `{s}`")))
    }
}

/// Table indexed by interface subsets, bit `i` of the index standing for
/// interface `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Profile {
    t: usize,
    table: Vec<Cost>,
}

impl Profile {
    pub fn new(t: usize, table: Vec<Cost>) -> Result<Self> {
        if t == 0 || t > MAX_INTERFACES {
            return Err(Error::InvalidArgument(format!(
                "interface count {t} outside 1..={MAX_INTERFACES}"
            )));
        }
        if table.len() != 1 << t {
            return Err(Error::InvalidArgument(format!(
                "profile for {t} interfaces needs {} entries, got {}",
                1 << t,
                table.len()
            )));
        }
        Ok(Profile { t, table })
    }

    pub fn from_values(t: usize, values: &[u32]) -> Result<Self> {
        Profile::new(t, values.iter().map(|v| Cost::Finite(*v)).collect())
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn get(&self, x: u32) -> Cost {
        self.table[x as usize]
    }

    pub fn entries(&self) -> &[Cost] {
        &self.table
    }

    /// `X ⊆ Y` implies `profile[X] ≥ profile[Y]`.
    pub fn is_monotone(&self) -> bool {
        (0..self.table.len())
            .all(|x| (0..self.t).all(|i| self.table[x] >= self.table[x | (1 << i)]))
    }

    pub fn has_infinite(&self) -> bool {
        self.table.contains(&Cost::Infinite)
    }

    /// The constant `c ≥ 0` with `self[X] = other[X] + c` for every `X`, if
    /// there is one. Infinite entries must line up.
    pub fn offset_over(&self, other: &Profile) -> Option<u32> {
        if self.t != other.t {
            return None;
        }
        let mut c = None;
        for (a, b) in self.table.iter().zip(&other.table) {
            match (a, b) {
                (Cost::Infinite, Cost::Infinite) => {}
                (Cost::Finite(a), Cost::Finite(b)) if a >= b => {
                    let d = a - b;
                    if *c.get_or_insert(d) != d {
                        return None;
                    }
                }
                _ => return None,
            }
        }
        // All-infinite tables are 0-equivalent.
        Some(c.unwrap_or(0))
    }
}

impl fmt::Display for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.table.iter().map(|c| c.to_string()).collect();
        f.write_str(&s.join(" "))
    }
}

/// A graph with `t` labeled, non-isolated boundary vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundariedGraph {
    graph: Graph,
    boundary: Vec<VertexId>,
}

impl BoundariedGraph {
    pub fn new(graph: Graph, boundary: Vec<VertexId>) -> Result<Self> {
        if boundary.is_empty() || boundary.len() > MAX_INTERFACES {
            return Err(Error::InvalidArgument(format!(
                "boundary size {} outside 1..={MAX_INTERFACES}",
                boundary.len()
            )));
        }
        let distinct: VertexSet = boundary.iter().copied().collect();
        if distinct.len() != boundary.len() {
            return Err(Error::InvalidArgument("boundary vertices repeat".into()));
        }
        for x in &boundary {
            match graph.try_neighbors(*x) {
                None => return Err(Error::MissingVertex(*x)),
                Some(n) if n.is_empty() => {
                    return Err(Error::InvalidArgument(format!(
                        "boundary vertex {x} is isolated"
                    )))
                }
                _ => {}
            }
        }
        Ok(BoundariedGraph { graph, boundary })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn boundary(&self) -> &[VertexId] {
        &self.boundary
    }

    pub fn t(&self) -> usize {
        self.boundary.len()
    }

    /// Strong: the boundary is independent.
    pub fn is_strong(&self) -> bool {
        self.graph
            .is_independent(&self.boundary.iter().copied().collect())
    }

    /// Every boundary vertex with one private pendant neighbor: boundary
    /// `x_i` is id `i`, its pendant is id `t + i`.
    pub fn pendant_witness(t: usize) -> Result<Self> {
        let edges: Vec<(usize, usize)> = (0..t).map(|i| (i, t + i)).collect();
        let g = Graph::from_edges(2 * t, &edges);
        BoundariedGraph::new(g, (0..t as u32).map(VertexId::new).collect())
    }
}

/// Result of gluing: the graph and where each input vertex went.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Glued {
    pub graph: Graph,
    pub from_g: BTreeMap<VertexId, VertexId>,
    pub from_h: BTreeMap<VertexId, VertexId>,
}

/// Disjoint union of `g` and `h` with equally labeled boundary vertices
/// identified. `g` must be strong. The vertices of `g` come first, in id
/// order, followed by the non-boundary vertices of `h`.
pub fn glue(g: &BoundariedGraph, h: &BoundariedGraph) -> Result<Glued> {
    if g.t() != h.t() {
        return Err(Error::InvalidArgument(format!(
            "boundary sizes differ: {} and {}",
            g.t(),
            h.t()
        )));
    }
    if !g.is_strong() {
        return Err(Error::InvalidArgument(
            "left operand of glue must be strongly boundaried".into(),
        ));
    }
    let mut out = Graph::new();
    let mut from_g = BTreeMap::new();
    let mut from_h = BTreeMap::new();
    for v in g.graph.vertices() {
        from_g.insert(v, out.add_vertex());
    }
    for (x, y) in g.boundary.iter().zip(&h.boundary) {
        from_h.insert(*y, from_g[x]);
    }
    for v in h.graph.vertices() {
        from_h.entry(v).or_insert_with(|| out.add_vertex());
    }
    for (u, v) in g.graph.edges() {
        out.add_edge(from_g[&u], from_g[&v])?;
    }
    for (u, v) in h.graph.edges() {
        out.add_edge(from_h[&u], from_h[&v])?;
    }
    Ok(Glued {
        graph: out,
        from_g,
        from_h,
    })
}

/// A core on vertices `0..n` with an interface mask per vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AttachmentPattern {
    t: usize,
    adj: Vec<u32>,
    attachments: Vec<u32>,
}

impl AttachmentPattern {
    pub fn new(
        t: usize,
        n: usize,
        edges: &[(usize, usize)],
        attachments: Vec<u32>,
    ) -> Result<Self> {
        if t == 0 || t > MAX_INTERFACES {
            return Err(Error::InvalidArgument(format!(
                "interface count {t} outside 1..={MAX_INTERFACES}"
            )));
        }
        if n > 32 {
            return Err(Error::CapExceeded { size: n, cap: 32 });
        }
        if attachments.len() != n {
            return Err(Error::InvalidArgument(format!(
                "{} attachment masks for {n} core vertices",
                attachments.len()
            )));
        }
        if let Some(a) = attachments.iter().find(|a| **a >> t != 0) {
            return Err(Error::InvalidArgument(format!(
                "attachment mask {a:#b} names an interface ≥ {t}"
            )));
        }
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidArgument(format!(
                    "edge {a}-{b} outside the core"
                )));
            }
            if a == b {
                return Err(Error::InvalidArgument(format!(
                    "self-loop at core vertex {a}"
                )));
            }
        }
        Ok(AttachmentPattern {
            t,
            adj: bits::adjacency(n, edges),
            attachments,
        })
    }

    /// The pattern of a boundaried graph: core = all of `h` in id order,
    /// boundary vertex `x_i` attached to interface `i`. Returns the vertex
    /// order used.
    pub fn from_boundaried(h: &BoundariedGraph) -> Result<(Self, Vec<VertexId>)> {
        let order: Vec<VertexId> = h.graph.vertices().collect();
        let index = |v: &VertexId| order.binary_search(v).unwrap();
        let edges: Vec<(usize, usize)> = h
            .graph
            .edges()
            .map(|(u, v)| (index(&u), index(&v)))
            .collect();
        let mut att = vec![0u32; order.len()];
        for (i, x) in h.boundary.iter().enumerate() {
            att[index(x)] |= 1 << i;
        }
        Ok((
            AttachmentPattern::new(h.t(), order.len(), &edges, att)?,
            order,
        ))
    }

    /// A degree-four vertex (index 4) whose neighbors `0..4` carry the
    /// edges `0-1` and `2-3`; neighbor `i` is attached to interface `i`.
    pub fn degree_four_disjoint() -> Self {
        let mut e = vec![(0, 1), (2, 3)];
        e.extend((0..4).map(|i| (i, 4)));
        AttachmentPattern::new(4, 5, &e, vec![1, 2, 4, 8, 0]).unwrap()
    }

    /// The four-vertex replacement of [`Self::degree_four_disjoint`]: a K4
    /// with attachments `{0,2}, {0,3}, {1,2}, {1,3}`.
    pub fn degree_four_disjoint_replacement() -> Self {
        AttachmentPattern::new(4, 4, &DISJOINT_CORE_EDGES, DISJOINT_ATTACHMENTS.to_vec()).unwrap()
    }

    /// A degree-four vertex (index 4) whose neighbors carry the wedge
    /// `0-1-2`, with `3` isolated among them.
    pub fn degree_four_wedge() -> Self {
        let mut e = vec![(0, 1), (1, 2)];
        e.extend((0..4).map(|i| (i, 4)));
        AttachmentPattern::new(4, 5, &e, vec![1, 2, 4, 8, 0]).unwrap()
    }

    /// The replacement of [`Self::degree_four_wedge`]: triangle on `1, 2, 3`
    /// with attachments `{0,2}, {1,3}, {2,3}, {0,3}`.
    pub fn degree_four_wedge_replacement() -> Self {
        AttachmentPattern::new(4, 4, &WEDGE_CORE_EDGES, WEDGE_ATTACHMENTS.to_vec()).unwrap()
    }

    pub(crate) fn from_masks(t: usize, adj: Vec<u32>, attachments: Vec<u32>) -> Self {
        debug_assert_eq!(adj.len(), attachments.len());
        AttachmentPattern {
            t,
            adj,
            attachments,
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn attachment(&self, w: usize) -> u32 {
        self.attachments[w]
    }

    pub fn attachments(&self) -> &[u32] {
        &self.attachments
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] & (1 << b) != 0
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .filter(|(a, b)| self.has_edge(*a, *b))
            .collect()
    }

    /// Core vertices forced into the cover when exactly the interfaces in
    /// `x` are fully covered outside.
    pub fn forced(&self, x: u32) -> u32 {
        self.attachments
            .iter()
            .enumerate()
            .filter(|(_, a)| **a & !x != 0)
            .fold(0, |m, (w, _)| m | (1 << w))
    }

    /// Relabels the core: new vertex `j` is old vertex `order[j]`.
    pub fn relabel(&self, order: &[usize]) -> Self {
        let n = self.n();
        let mut pos = vec![0; n];
        for (j, &o) in order.iter().enumerate() {
            pos[o] = j;
        }
        let adj = order
            .iter()
            .map(|&o| {
                (0..n)
                    .filter(|w| self.adj[o] & (1 << w) != 0)
                    .fold(0u32, |m, w| m | (1 << pos[w]))
            })
            .collect();
        let attachments = order.iter().map(|&o| self.attachments[o]).collect();
        AttachmentPattern {
            t: self.t,
            adj,
            attachments,
        }
    }

    /// Smallest encoding over all relabelings of the core (interface labels
    /// stay fixed), together with the relabeled pattern.
    pub fn canonical(&self) -> (Vec<u32>, AttachmentPattern) {
        let n = self.n();
        // Vertices are first grouped by an isomorphism invariant so only
        // orderings within a group need to be tried.
        let inv = |w: usize| -> (u32, u32, Vec<(u32, u32)>) {
            let mut nb: Vec<(u32, u32)> = (0..n)
                .filter(|x| self.has_edge(w, *x))
                .map(|x| (self.attachments[x], self.adj[x].count_ones()))
                .collect();
            nb.sort_unstable();
            (self.attachments[w], self.adj[w].count_ones(), nb)
        };
        let invs: Vec<_> = (0..n).map(inv).collect();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by(|a, b| invs[*a].cmp(&invs[*b]));
        let mut groups: Vec<(usize, usize)> = Vec::new();
        let mut start = 0;
        for i in 1..=n {
            if i == n || invs[order[i]] != invs[order[start]] {
                groups.push((start, i));
                start = i;
            }
        }
        let mut best: Option<(Vec<u32>, Vec<usize>)> = None;
        permute_groups(&mut order, &groups, 0, &mut |ord| {
            let code = self.encode(ord);
            if best.as_ref().is_none_or(|(b, _)| code < *b) {
                best = Some((code, ord.to_vec()));
            }
        });
        let (code, ord) = best.unwrap_or_else(|| (self.encode(&[]), vec![]));
        (code, self.relabel(&ord))
    }

    fn encode(&self, order: &[usize]) -> Vec<u32> {
        let n = self.n();
        let mut pos = vec![0; n];
        for (j, &o) in order.iter().enumerate() {
            pos[o] = j;
        }
        let mut code = vec![self.t as u32, n as u32];
        code.extend(order.iter().map(|&o| self.attachments[o]));
        for &o in order {
            code.push(
                (0..n)
                    .filter(|w| self.adj[o] & (1 << w) != 0)
                    .fold(0u32, |m, w| m | (1 << pos[w])),
            );
        }
        code
    }

    /// Isomorphic cores with identical interface labels.
    pub fn is_isomorphic(&self, other: &AttachmentPattern) -> bool {
        self.t == other.t && self.n() == other.n() && self.canonical().0 == other.canonical().0
    }

    /// Text form: `t`, `n`, one `e a b` line per edge and one
    /// `a w i j ...` line per vertex with a nonempty attachment. Lines
    /// starting with `#` are ignored when parsing.
    pub fn to_text(&self) -> String {
        let mut s = format!("t {}\nn {}\n", self.t, self.n());
        for (a, b) in self.edges() {
            s.push_str(&format!("e {a} {b}\n"));
        }
        for (w, m) in self.attachments.iter().enumerate() {
            if *m != 0 {
                let ifaces: Vec<String> = (0..self.t)
                    .filter(|i| m & (1 << i) != 0)
                    .map(|i| i.to_string())
                    .collect();
                s.push_str(&format!("a {w} {}\n", ifaces.join(" ")));
            }
        }
        s
    }
}

impl fmt::Display for AttachmentPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// Accumulates pattern lines (`t`, `n`, `e`, `a`) in any order after `t`
/// and `n`.
#[derive(Default)]
pub(crate) struct PatternBuilder {
    t: Option<usize>,
    n: Option<usize>,
    edges: Vec<(usize, usize)>,
    att: BTreeMap<usize, u32>,
}

pub(crate) fn line_err(line: usize, msg: impl fmt::Display) -> Error {
    Error::InvalidArgument(format!("line {line}: {msg}"))
}

fn num(field: Option<&str>, line: usize) -> Result<usize> {
    field
        .ok_or_else(|| line_err(line, "missing number"))?
        .parse()
        .map_err(|_| line_err(line, "malformed number"))
}

impl PatternBuilder {
    /// Consumes a pattern line; returns false if the tag is not a pattern
    /// tag.
    pub fn feed(
        &mut self,
        tag: &str,
        rest: &mut std::str::SplitWhitespace<'_>,
        line: usize,
    ) -> Result<bool> {
        match tag {
            "t" => self.t = Some(num(rest.next(), line)?),
            "n" => self.n = Some(num(rest.next(), line)?),
            "e" => {
                let a = num(rest.next(), line)?;
                let b = num(rest.next(), line)?;
                self.edges.push((a, b));
            }
            "a" => {
                let w = num(rest.next(), line)?;
                let mut m = 0u32;
                for f in rest.by_ref() {
                    let i: usize = f
                        .parse()
                        .map_err(|_| line_err(line, "malformed interface"))?;
                    if i >= 32 {
                        return Err(line_err(line, format!("interface {i} out of range")));
                    }
                    m |= 1 << i;
                }
                *self.att.entry(w).or_default() |= m;
            }
            _ => return Ok(false),
        }
        if rest.next().is_some() {
            return Err(line_err(line, "trailing fields"));
        }
        Ok(true)
    }

    pub fn t(&self) -> Option<usize> {
        self.t
    }

    pub fn finish(self, line: usize) -> Result<AttachmentPattern> {
        let t = self.t.ok_or_else(|| line_err(line, "missing `t` line"))?;
        let n = self.n.ok_or_else(|| line_err(line, "missing `n` line"))?;
        let mut att = vec![0u32; n];
        for (w, m) in self.att {
            if w >= n {
                return Err(line_err(
                    line,
                    format!("attachment for vertex {w} outside the core"),
                ));
            }
            att[w] = m;
        }
        AttachmentPattern::new(t, n, &self.edges, att).map_err(|e| line_err(line, e))
    }
}

impl FromStr for AttachmentPattern {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut b = PatternBuilder::default();
        let mut last = 0;
        for (i, raw) in s.lines().enumerate() {
            last = i + 1;
            let mut fields = raw.split_whitespace();
            let Some(tag) = fields.next() else { continue };
            if tag.starts_with('#') {
                continue;
            }
            if !b.feed(tag, &mut fields, i + 1)? {
                return Err(line_err(i + 1, format!("unknown line type `{tag}`")));
            }
        }
        b.finish(last.max(1))
    }
}

fn permute_groups(
    order: &mut [usize],
    groups: &[(usize, usize)],
    g: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if g == groups.len() {
        f(order);
        return;
    }
    let (lo, hi) = groups[g];
    permute_range(order, hi, lo, groups, g, f);
}

fn permute_range(
    order: &mut [usize],
    hi: usize,
    i: usize,
    groups: &[(usize, usize)],
    g: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if i + 1 >= hi {
        permute_groups(order, groups, g + 1, f);
        return;
    }
    for j in i..hi {
        order.swap(i, j);
        permute_range(order, hi, i + 1, groups, g, f);
        order.swap(i, j);
    }
}

pub fn compute_profile(p: &AttachmentPattern) -> Result<Profile> {
    compute_profile_with_cap(p, PROFILE_CORE_CAP)
}

/// Profile by the forcing rule: `table[X]` is the smallest cover of the
/// core containing every vertex attached to an interface outside `X`.
pub fn compute_profile_with_cap(p: &AttachmentPattern, cap: usize) -> Result<Profile> {
    if p.n() > cap {
        return Err(Error::CapExceeded { size: p.n(), cap });
    }
    let best = bits::min_cover_table(&p.adj);
    let table = (0..1u32 << p.t)
        .map(|x| Cost::Finite(best[p.forced(x) as usize] as u32))
        .collect();
    Profile::new(p.t, table)
}

/// A smallest core cover compatible with `x`, as core indices.
pub fn compatible_core_cover(p: &AttachmentPattern, x: u32) -> Vec<usize> {
    let s = bits::min_cover_containing(&p.adj, p.forced(x));
    (0..p.n()).filter(|w| s & (1 << w) != 0).collect()
}

/// Profile from the gluing definition with `g` as the outside: the core is
/// wired to `g - boundary` by joining core vertex `w` to `N_g(x_i)` for each
/// `i` in its mask; a cover `S` of the result is compatible with `X` iff
/// `N_g(x_i) ⊆ S ⇔ i ∈ X`; `table[X]` minimizes `|S ∩ core|`.
pub fn verify_profile_against_witness(
    p: &AttachmentPattern,
    g: &BoundariedGraph,
) -> Result<Profile> {
    if p.t != g.t() {
        return Err(Error::InvalidArgument(format!(
            "pattern has {} interfaces, witness has {}",
            p.t,
            g.t()
        )));
    }
    if !g.is_strong() {
        return Err(Error::InvalidArgument(
            "witness must be strongly boundaried".into(),
        ));
    }
    let boundary: VertexSet = g.boundary.iter().copied().collect();
    let outside: Vec<VertexId> = g
        .graph
        .vertices()
        .filter(|v| !boundary.contains(v))
        .collect();
    let n = p.n();
    let total = outside.len() + n;
    if total > WITNESS_CAP {
        return Err(Error::CapExceeded {
            size: total,
            cap: WITNESS_CAP,
        });
    }
    // Core vertex w is index w; outside vertex j is index n + j.
    let oidx = |v: &VertexId| n + outside.binary_search(v).unwrap();
    let mut edges: Vec<u64> = Vec::new();
    for (a, b) in p.edges() {
        edges.push((1 << a) | (1 << b));
    }
    for (u, v) in g.graph.edges() {
        if !boundary.contains(&u) && !boundary.contains(&v) {
            edges.push((1 << oidx(&u)) | (1 << oidx(&v)));
        }
    }
    let nbhd: Vec<u64> = g
        .boundary
        .iter()
        .map(|x| {
            g.graph
                .neighbors(*x)
                .iter()
                .fold(0u64, |m, y| m | (1 << oidx(y)))
        })
        .collect();
    for w in 0..n {
        for (i, nb) in nbhd.iter().enumerate() {
            if p.attachments[w] & (1 << i) != 0 {
                let mut rest = *nb;
                while rest != 0 {
                    let y = rest.trailing_zeros();
                    rest &= rest - 1;
                    edges.push((1 << w) | (1u64 << y));
                }
            }
        }
    }
    let core_mask: u64 = (1u64 << n) - 1;
    let mut table = vec![Cost::Infinite; 1 << p.t];
    for s in 0u64..(1u64 << total) {
        if !edges.iter().all(|e| e & s != 0) {
            continue;
        }
        let x = nbhd
            .iter()
            .enumerate()
            .filter(|(_, nb)| *nb & s == **nb)
            .fold(0usize, |m, (i, _)| m | (1 << i));
        let cost = Cost::Finite((s & core_mask).count_ones());
        if cost < table[x] {
            table[x] = cost;
        }
    }
    Profile::new(p.t, table)
}

/// The constant `c ≥ 0` with `profile(p1) = profile(p2) + c`, or `None`.
pub fn check_equivalence(p1: &AttachmentPattern, p2: &AttachmentPattern) -> Result<Option<u32>> {
    if p1.t != p2.t {
        return Err(Error::InvalidArgument(format!(
            "interface counts differ: {} and {}",
            p1.t, p2.t
        )));
    }
    Ok(compute_profile(p1)?.offset_over(&compute_profile(p2)?))
}
