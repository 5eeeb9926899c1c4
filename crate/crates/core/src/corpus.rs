//! Graph generators: every small connected graph up to isomorphism, and
//! seeded random graphs.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexId, VertexSet};
use crate::profile::{AttachmentPattern, Occurrence};

/// Largest order [`connected_graphs`] will enumerate.
pub const MAX_ENUMERATED_ORDER: usize = 9;

/// Deterministic generator used throughout the test suites.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn canonical_key(adj: &[u32]) -> Vec<u32> {
    AttachmentPattern::from_masks(1, adj.to_vec(), vec![0; adj.len()])
        .canonical()
        .0
}

fn is_connected(adj: &[u32]) -> bool {
    if adj.is_empty() {
        return false;
    }
    let all = (1u32 << adj.len()) - 1;
    let mut seen = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & !seen;
        seen |= fresh;
        frontier |= fresh;
    }
    seen == all
}

fn from_masks(adj: &[u32]) -> Graph {
    let mut g = Graph::with_vertices(adj.len());
    for (a, m) in adj.iter().enumerate() {
        for b in a + 1..adj.len() {
            if m & (1 << b) != 0 {
                g.add_edge(VertexId::new(a as u32), VertexId::new(b as u32))
                    .expect("vertices exist");
            }
        }
    }
    g
}

/// Every graph on `n` vertices up to isomorphism, as adjacency masks in
/// canonical labeling, built by adding one vertex at a time.
fn all_graph_masks(n: usize) -> Vec<Vec<u32>> {
    let mut level: Vec<Vec<u32>> = vec![vec![]];
    for size in 1..=n {
        let mut next: BTreeSet<Vec<u32>> = BTreeSet::new();
        for adj in &level {
            let v = size - 1;
            for nb in 0u32..1 << v {
                let mut grown = adj.clone();
                for (u, m) in grown.iter_mut().enumerate() {
                    if nb & (1 << u) != 0 {
                        *m |= 1 << v;
                    }
                }
                grown.push(nb);
                next.insert(canonical_key(&grown));
            }
        }
        // Keys are `[t, n, attachments.., adjacency..]`.
        level = next.into_iter().map(|k| k[2 + size..].to_vec()).collect();
    }
    level
}

/// Every connected graph on `n` vertices up to isomorphism, vertices
/// `0..n`. Panics if `n` exceeds [`MAX_ENUMERATED_ORDER`].
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(
        n <= MAX_ENUMERATED_ORDER,
        "enumeration is limited to {MAX_ENUMERATED_ORDER} vertices"
    );
    all_graph_masks(n)
        .into_iter()
        .filter(|adj| is_connected(adj))
        .map(|adj| from_masks(&adj))
        .collect()
}

/// Erdős–Rényi graph on vertices `0..n` with edge probability `p`.
pub fn random_gnp<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::with_vertices(n);
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(VertexId::new(a as u32), VertexId::new(b as u32))
                    .expect("vertices exist");
            }
        }
    }
    g
}

/// Uniformly random labeled tree on vertices `0..n` via a random Prüfer
/// sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Graph {
    let mut g = Graph::with_vertices(n);
    if n < 2 {
        return g;
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &s in &seq {
        degree[s] += 1;
    }
    let mut leaves: BTreeSet<usize> = (0..n).filter(|v| degree[*v] == 1).collect();
    let id = |v: usize| VertexId::new(v as u32);
    for &s in &seq {
        let leaf = leaves.pop_first().expect("a leaf remains");
        g.add_edge(id(leaf), id(s)).expect("vertices exist");
        degree[s] -= 1;
        if degree[s] == 1 {
            leaves.insert(s);
        }
    }
    let last: Vec<usize> = leaves.into_iter().collect();
    g.add_edge(id(last[0]), id(last[1]))
        .expect("vertices exist");
    g
}

/// Graph with a hidden cover of size `k`: `k` cover vertices, `n - k`
/// independent ones, every edge touching the cover kept with probability
/// `p`. Vertex labels are shuffled.
pub fn random_planted_cover<R: Rng>(n: usize, k: usize, p: f64, rng: &mut R) -> Graph {
    assert!(k <= n);
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut g = Graph::with_vertices(n);
    for a in 0..k {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                let (x, y) = (label[a] as u32, label[b] as u32);
                g.add_edge(VertexId::new(x), VertexId::new(y))
                    .expect("vertices exist");
            }
        }
    }
    g
}

/// A host containing `p` on vertices `0..p.n()`, plus `extra` outside
/// vertices joined at random and random (possibly overlapping or empty)
/// external sets per interface.
pub fn random_occurrence<R: Rng>(
    p: &AttachmentPattern,
    extra: usize,
    rng: &mut R,
) -> (Graph, Occurrence) {
    let n = p.n();
    let mut g = Graph::with_vertices(n + extra);
    let id = |i: usize| VertexId::new(i as u32);
    for (a, b) in p.edges() {
        g.add_edge(id(a), id(b)).expect("vertices exist");
    }
    let density = rng.gen_range(0.1..0.7);
    for a in n..n + extra {
        for b in a + 1..n + extra {
            if rng.gen_bool(density) {
                g.add_edge(id(a), id(b)).expect("vertices exist");
            }
        }
    }
    let ext: Vec<VertexSet> = (0..p.t())
        .map(|_| {
            (n..n + extra)
                .filter(|_| rng.gen_bool(0.4))
                .map(id)
                .collect()
        })
        .collect();
    for w in 0..n {
        for (i, e) in ext.iter().enumerate() {
            if p.attachment(w) & (1 << i) != 0 {
                for x in e {
                    g.add_edge(id(w), *x).expect("vertices exist");
                }
            }
        }
    }
    let occ = Occurrence {
        core: (0..n).map(id).collect(),
        ext,
    };
    (g, occ)
}
