//! Site detection and application for the small-degree rules. Detection
//! checks only the local guard of each rule; the driver supplies the
//! ordering that makes the global preconditions hold.

use crate::graph::{Graph, VertexId, VertexSet};
use crate::kernel::{Infeasible, Workspace};
use crate::trace::{Payload, RuleTag};

use super::Site;

/// Internal edges of the replacement core for two disjoint neighborhood
/// edges: a K4.
pub const DISJOINT_CORE_EDGES: [(usize, usize); 6] =
    [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
/// Interface masks of the replacement for two disjoint neighborhood edges:
/// `{0,2}, {0,3}, {1,2}, {1,3}`.
pub const DISJOINT_ATTACHMENTS: [u32; 4] = [0b0101, 0b1001, 0b0110, 0b1010];
/// Internal edges of the replacement core for a neighborhood wedge
/// `0-1-2`: the triangle on `1, 2, 3`.
pub const WEDGE_CORE_EDGES: [(usize, usize); 3] = [(1, 2), (1, 3), (2, 3)];
/// Interface masks of the wedge replacement: `{0,2}, {1,3}, {2,3}, {0,3}`.
pub const WEDGE_ATTACHMENTS: [u32; 4] = [0b0101, 0b1010, 0b1100, 0b1001];

/// Edges of the matched degree-four core `n0..n3, u` (u is index 4), given
/// the two neighborhood edges.
pub(crate) fn degree_four_core_edges(nbhd: [(usize, usize); 2]) -> Vec<(usize, usize)> {
    let mut e: Vec<(usize, usize)> = (0..4).map(|i| (i, 4)).collect();
    e.extend(nbhd);
    e
}

fn sorted_neighbors(g: &Graph, v: VertexId) -> Vec<VertexId> {
    g.neighbors(v).iter().copied().collect()
}

pub(crate) fn pendant_sites(g: &Graph) -> Vec<Site> {
    g.vertices()
        .filter(|v| g.degree(*v) == 1)
        .map(|leaf| Site::Pendant {
            leaf,
            anchor: *g.neighbors(leaf).first().unwrap(),
        })
        .collect()
}

pub(crate) fn first_pendant(g: &Graph) -> Option<Site> {
    g.vertices()
        .find(|v| g.degree(*v) == 1)
        .map(|leaf| Site::Pendant {
            leaf,
            anchor: *g.neighbors(leaf).first().unwrap(),
        })
}

fn dominates(g: &Graph, removed: VertexId, kept: VertexId) -> bool {
    let nu = g.neighbors(removed);
    g.neighbors(kept)
        .iter()
        .all(|w| *w == removed || nu.contains(w))
}

pub(crate) fn dominance_sites(g: &Graph) -> Vec<Site> {
    let mut out = Vec::new();
    for (a, b) in g.edges() {
        for (removed, kept) in [(a, b), (b, a)] {
            if dominates(g, removed, kept) {
                out.push(Site::Dominance { removed, kept });
            }
        }
    }
    out
}

pub(crate) fn first_dominance(g: &Graph) -> Option<Site> {
    // Dominance needs |N(kept)| ≤ |N(removed)|, so scanning `kept` by
    // increasing id and checking its neighbors is enough.
    for kept in g.vertices() {
        for &removed in g.neighbors(kept) {
            if g.degree(removed) >= g.degree(kept) && dominates(g, removed, kept) {
                return Some(Site::Dominance { removed, kept });
            }
        }
    }
    None
}

pub(crate) fn degree_two_sites(g: &Graph) -> Vec<Site> {
    g.vertices()
        .filter(|v| g.degree(*v) == 2)
        .filter(|v| {
            let n = sorted_neighbors(g, *v);
            !g.has_edge(n[0], n[1])
        })
        .map(|v| Site::DegreeTwo { v })
        .collect()
}

/// All partitions `(C1, C2)` of `N(v)` meeting the clique/co-matching
/// conditions, with the non-edges of `G[C1, C2]`.
pub(crate) fn comatching_partitions(g: &Graph, v: VertexId) -> Vec<Site> {
    let nb = sorted_neighbors(g, v);
    let d = nb.len();
    let mut out = Vec::new();
    for mask in 1u32..(1 << d) {
        let c1: Vec<VertexId> = (0..d)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| nb[i])
            .collect();
        let c2: Vec<VertexId> = (0..d)
            .filter(|i| mask & (1 << i) == 0)
            .map(|i| nb[i])
            .collect();
        if c2.is_empty() || c1.len() < c2.len() {
            continue;
        }
        if !g.is_clique(&c1.iter().copied().collect())
            || !g.is_clique(&c2.iter().copied().collect())
        {
            continue;
        }
        let non_edges: Vec<(VertexId, VertexId)> = c1
            .iter()
            .flat_map(|x| c2.iter().map(move |y| (*x, *y)))
            .filter(|(x, y)| !g.has_edge(*x, *y))
            .collect();
        let each_once = c1
            .iter()
            .all(|x| non_edges.iter().filter(|(a, _)| a == x).count() == 1);
        if each_once {
            out.push(Site::CliqueCoMatching { v, c1, c2 });
        }
    }
    out
}

pub(crate) fn comatching_sites(g: &Graph, max_degree: usize) -> Vec<Site> {
    g.vertices()
        .filter(|v| g.degree(*v) <= max_degree && g.degree(*v) > 0)
        .flat_map(|v| comatching_partitions(g, v))
        .collect()
}

pub(crate) fn first_comatching(g: &Graph, max_degree: usize) -> Option<Site> {
    g.vertices()
        .filter(|v| g.degree(*v) <= max_degree && g.degree(*v) > 0)
        .find_map(|v| comatching_partitions(g, v).into_iter().next())
}

pub(crate) fn degree_three_sites(g: &Graph) -> Vec<Site> {
    g.vertices()
        .filter(|v| g.degree(*v) == 3 && g.is_independent(g.neighbors(*v)))
        .map(|v| Site::DegreeThree { v })
        .collect()
}

/// Orders an induced P4 on `N(v)` as `a-b-c-d` with `a` the smaller-id
/// endpoint, or `None` if `G[N(v)]` is not a P4.
pub(crate) fn path_order(g: &Graph, v: VertexId) -> Option<[VertexId; 4]> {
    let nb = g.neighbors(v);
    if nb.len() != 4 || g.induced_edge_count(nb) != 3 {
        return None;
    }
    let inner_deg = |x: VertexId| g.neighbors(x).intersection(nb).count();
    let ends: Vec<VertexId> = nb.iter().copied().filter(|x| inner_deg(*x) == 1).collect();
    if ends.len() != 2 || nb.iter().any(|x| inner_deg(*x) == 0) {
        return None;
    }
    let a = ends[0];
    let b = *g.neighbors(a).intersection(nb).next().unwrap();
    let c = *g.neighbors(b).intersection(nb).find(|x| **x != a)?;
    let d = *g.neighbors(c).intersection(nb).find(|x| **x != b)?;
    (d == ends[1]).then_some([a, b, c, d])
}

pub(crate) fn degree_four_path_sites(g: &Graph) -> Vec<Site> {
    g.vertices()
        .filter(|v| g.degree(*v) == 4 && path_order(g, *v).is_some())
        .map(|v| Site::DegreeFourPath { v })
        .collect()
}

/// Neighborhood edges of a degree-four vertex as index pairs into its
/// sorted neighbor list.
fn nbhd_pairs(g: &Graph, u: VertexId) -> (Vec<VertexId>, Vec<(usize, usize)>) {
    let nb = sorted_neighbors(g, u);
    let mut pairs = Vec::new();
    for i in 0..nb.len() {
        for j in i + 1..nb.len() {
            if g.has_edge(nb[i], nb[j]) {
                pairs.push((i, j));
            }
        }
    }
    (nb, pairs)
}

/// Every labeling `[n0, n1, n2, n3]` of `N(u)` whose neighborhood edges are
/// exactly `n0n1` and `n2n3`. The first one is canonical.
pub(crate) fn disjoint_labelings(g: &Graph, u: VertexId) -> Vec<[VertexId; 4]> {
    if g.degree(u) != 4 {
        return vec![];
    }
    let (nb, pairs) = nbhd_pairs(g, u);
    if pairs.len() != 2 {
        return vec![];
    }
    let (p, q) = (pairs[0], pairs[1]);
    if p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1 {
        return vec![];
    }
    let mut out = Vec::new();
    for (x, y) in [(p, q), (q, p)] {
        for (x0, x1) in [(x.0, x.1), (x.1, x.0)] {
            for (y0, y1) in [(y.0, y.1), (y.1, y.0)] {
                out.push([nb[x0], nb[x1], nb[y0], nb[y1]]);
            }
        }
    }
    out
}

/// Every labeling with neighborhood edges exactly `n0n1`, `n1n2`.
pub(crate) fn wedge_labelings(g: &Graph, u: VertexId) -> Vec<[VertexId; 4]> {
    if g.degree(u) != 4 {
        return vec![];
    }
    let (nb, pairs) = nbhd_pairs(g, u);
    if pairs.len() != 2 {
        return vec![];
    }
    let (p, q) = (pairs[0], pairs[1]);
    let shared = [p.0, p.1].into_iter().find(|x| *x == q.0 || *x == q.1);
    let Some(center) = shared else { return vec![] };
    let other = |e: (usize, usize)| if e.0 == center { e.1 } else { e.0 };
    let (e0, e1) = (other(p), other(q));
    let lone = (0..4)
        .find(|i| *i != center && *i != e0 && *i != e1)
        .unwrap();
    vec![
        [nb[e0], nb[center], nb[e1], nb[lone]],
        [nb[e1], nb[center], nb[e0], nb[lone]],
    ]
}

pub(crate) fn disjoint_sites(g: &Graph) -> Vec<Site> {
    g.vertices()
        .flat_map(|u| {
            disjoint_labelings(g, u)
                .into_iter()
                .map(move |order| Site::DegreeFourDisjoint { u, order })
        })
        .collect()
}

pub(crate) fn wedge_sites(g: &Graph) -> Vec<Site> {
    g.vertices()
        .flat_map(|u| {
            wedge_labelings(g, u)
                .into_iter()
                .map(move |order| Site::DegreeFourWedge { u, order })
        })
        .collect()
}

pub(crate) fn first_disjoint(g: &Graph) -> Option<Site> {
    g.vertices().find_map(|u| {
        disjoint_labelings(g, u)
            .into_iter()
            .next()
            .map(|order| Site::DegreeFourDisjoint { u, order })
    })
}

pub(crate) fn first_wedge(g: &Graph) -> Option<Site> {
    g.vertices().find_map(|u| {
        wedge_labelings(g, u)
            .into_iter()
            .next()
            .map(|order| Site::DegreeFourWedge { u, order })
    })
}

/// Applies a site that is known to satisfy its local guard.
pub(crate) fn apply(ws: &mut Workspace, site: &Site) -> Result<(), Infeasible> {
    match site {
        Site::Pendant { leaf, anchor } => {
            let (leaf, anchor) = (*leaf, *anchor);
            let touched = VertexSet::from([leaf, anchor]);
            ws.apply(&touched, 1, Payload::Pendant { leaf, anchor }, |g| {
                g.remove_vertices(&touched)
            })
        }
        Site::Dominance { removed, kept } => {
            let (removed, kept) = (*removed, *kept);
            let touched = VertexSet::from([removed]);
            ws.apply(&touched, 1, Payload::Dominance { removed, kept }, |g| {
                g.remove_vertex(removed);
            })
        }
        Site::DegreeTwo { v } => {
            let v = *v;
            let nb = sorted_neighbors(&ws.graph, v);
            let (a, b) = (nb[0], nb[1]);
            let z = ws.graph.next_id();
            let closed = ws.graph.closed_neighborhood(v);
            ws.apply(&closed, 1, Payload::DegreeTwo { v, a, b, z }, |g| {
                let made = g.contract_set(&closed).expect("closed neighborhood exists");
                debug_assert_eq!(made, z);
            })
        }
        Site::CliqueCoMatching { v, c1, c2 } => {
            let v = *v;
            let g = &ws.graph;
            let non_edges: Vec<(VertexId, VertexId)> = c1
                .iter()
                .flat_map(|x| c2.iter().map(move |y| (*x, *y)))
                .filter(|(x, y)| !g.has_edge(*x, *y))
                .collect();
            let c2_set: VertexSet = c2.iter().copied().collect();
            let c2_ref = &c2_set;
            let additions: Vec<(VertexId, VertexId)> = non_edges
                .iter()
                .flat_map(|&(x, y)| {
                    g.neighbors(y)
                        .iter()
                        .filter(move |w| **w != v && !c2_ref.contains(w) && **w != x)
                        .map(move |w| (x, *w))
                })
                .collect();
            let mut touched: VertexSet = c1.iter().copied().collect();
            touched.extend(c2.iter().copied());
            touched.insert(v);
            let payload = Payload::CliqueCoMatching {
                v,
                c1: c1.clone(),
                c2: c2.clone(),
                non_edges,
            };
            ws.apply(&touched, c2.len(), payload, |g| {
                g.remove_vertex(v);
                g.remove_vertices(&c2_set);
                for (x, w) in additions {
                    g.add_edge(x, w).expect("endpoints survive");
                }
            })
        }
        Site::DegreeThree { v } => {
            let v = *v;
            let nb = sorted_neighbors(&ws.graph, v);
            let (a, b, c) = (nb[0], nb[1], nb[2]);
            let g = &ws.graph;
            let outside = |x: VertexId| -> Vec<VertexId> {
                g.neighbors(x).iter().copied().filter(|w| *w != v).collect()
            };
            let mut added = vec![(a, b), (b, c)];
            added.extend(outside(b).into_iter().map(|w| (a, w)));
            added.extend(outside(c).into_iter().map(|w| (b, w)));
            added.extend(outside(a).into_iter().map(|w| (c, w)));
            let touched = VertexSet::from([v, a, b, c]);
            ws.apply(&touched, 0, Payload::DegreeThree { v, a, b, c }, |g| {
                g.remove_vertex(v);
                for (x, w) in added {
                    g.add_edge(x, w)
                        .expect("independent neighborhood gives no loops");
                }
            })
        }
        Site::DegreeFourPath { v } => {
            let v = *v;
            let path = path_order(&ws.graph, v).expect("site guard checked");
            let [a, b, c, d] = path;
            let g = &ws.graph;
            let outside = |x: VertexId| -> Vec<VertexId> {
                g.neighbors(x).iter().copied().filter(|w| *w != v).collect()
            };
            let mut added = Vec::new();
            for i in 0..4 {
                for j in i + 1..4 {
                    added.push((path[i], path[j]));
                }
            }
            for w in outside(d) {
                added.extend([(a, w), (b, w)]);
            }
            for w in outside(a) {
                added.extend([(c, w), (d, w)]);
            }
            let touched = VertexSet::from([v, a, b, c, d]);
            ws.apply(&touched, 0, Payload::DegreeFourPath { v, path }, |g| {
                g.remove_vertex(v);
                for (x, w) in added {
                    if x != w {
                        g.add_edge(x, w).expect("endpoints survive");
                    }
                }
            })
        }
        Site::DegreeFourDisjoint { u, order } => rewrite_degree_four(
            ws,
            RuleTag::DegreeFourDisjoint,
            *u,
            *order,
            [(0, 1), (2, 3)],
            &DISJOINT_CORE_EDGES,
            &DISJOINT_ATTACHMENTS,
        ),
        Site::DegreeFourWedge { u, order } => rewrite_degree_four(
            ws,
            RuleTag::DegreeFourWedge,
            *u,
            *order,
            [(0, 1), (1, 2)],
            &WEDGE_CORE_EDGES,
            &WEDGE_ATTACHMENTS,
        ),
    }
}

/// Replaces the core `n0..n3, u` by a four-vertex core on `n0..n3` with
/// the given internal edges, each `n_i` attached to the union of the
/// external neighborhoods named by its mask.
fn rewrite_degree_four(
    ws: &mut Workspace,
    tag: RuleTag,
    u: VertexId,
    n: [VertexId; 4],
    nbhd: [(usize, usize); 2],
    new_edges: &[(usize, usize)],
    attachments: &[u32; 4],
) -> Result<(), Infeasible> {
    let g = &ws.graph;
    let closed = g.closed_neighborhood(u);
    let ext: Vec<VertexSet> = n
        .iter()
        .map(|x| g.neighbors(*x).difference(&closed).copied().collect())
        .collect();
    let mut core = n.to_vec();
    core.push(u);
    let payload = Payload::Replacement {
        tag,
        core,
        core_edges: degree_four_core_edges(nbhd),
        attachments: vec![1, 2, 4, 8, 0],
        ext: ext.clone(),
    };
    let touched = closed.clone();
    ws.apply(&touched, 0, payload, |g| {
        g.remove_vertex(u);
        for (i, j) in nbhd {
            g.remove_edge(n[i], n[j]);
        }
        for &(i, j) in new_edges {
            g.add_edge(n[i], n[j]).expect("core vertices exist");
        }
        for i in 0..4 {
            let target: VertexSet = (0..4)
                .filter(|j| attachments[i] & (1 << j) != 0)
                .flat_map(|j| ext[j].iter().copied())
                .collect();
            for w in ext[i].difference(&target) {
                g.remove_edge(n[i], *w);
            }
            for w in &target {
                g.add_edge(n[i], *w).expect("external vertices exist");
            }
        }
    })
}

/// Local guard check for an externally supplied site.
pub(crate) fn guard_holds(g: &Graph, site: &Site) -> bool {
    let present = |v: &VertexId| g.contains(*v);
    match site {
        Site::Pendant { leaf, anchor } => {
            present(leaf) && g.degree(*leaf) == 1 && g.has_edge(*leaf, *anchor)
        }
        Site::Dominance { removed, kept } => {
            present(removed)
                && present(kept)
                && g.has_edge(*removed, *kept)
                && dominates(g, *removed, *kept)
        }
        Site::DegreeTwo { v } => present(v) && degree_two_sites(g).contains(site),
        Site::CliqueCoMatching { v, .. } => {
            present(v) && g.degree(*v) <= 4 && comatching_partitions(g, *v).contains(site)
        }
        Site::DegreeThree { v } => {
            present(v) && g.degree(*v) == 3 && g.is_independent(g.neighbors(*v))
        }
        Site::DegreeFourPath { v } => present(v) && path_order(g, *v).is_some(),
        Site::DegreeFourDisjoint { u, order } => {
            present(u) && disjoint_labelings(g, *u).contains(order)
        }
        Site::DegreeFourWedge { u, order } => present(u) && wedge_labelings(g, *u).contains(order),
    }
}
