//! Dense bitmask helpers for cores of at most 32 vertices.

/// Adjacency masks from index pairs.
pub(crate) fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for &(a, b) in edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    adj
}

pub(crate) fn is_cover(adj: &[u32], s: u32) -> bool {
    adj.iter()
        .enumerate()
        .all(|(v, nb)| s & (1 << v) != 0 || nb & !s == 0)
}

/// `best[f]` is the size of a smallest cover containing `f`, for every
/// `f ⊆ [n]`. Subset-sum style superset minimum over all covers.
pub(crate) fn min_cover_table(adj: &[u32]) -> Vec<u8> {
    let n = adj.len();
    let full = 1usize << n;
    let mut best: Vec<u8> = (0..full)
        .map(|s| {
            if is_cover(adj, s as u32) {
                (s as u32).count_ones() as u8
            } else {
                u8::MAX
            }
        })
        .collect();
    for bit in 0..n {
        for s in 0..full {
            if s & (1 << bit) == 0 {
                let with = best[s | (1 << bit)];
                if with < best[s] {
                    best[s] = with;
                }
            }
        }
    }
    best
}

/// A smallest cover containing `forced`, by increasing size.
pub(crate) fn min_cover_containing(adj: &[u32], forced: u32) -> u32 {
    let n = adj.len();
    let rest: Vec<usize> = (0..n).filter(|v| forced & (1 << v) == 0).collect();
    for size in 0..=rest.len() {
        let mut found = None;
        for_each_subset_of_size(rest.len(), size, |pick| {
            if found.is_some() {
                return;
            }
            let mut s = forced;
            for (i, v) in rest.iter().enumerate() {
                if pick & (1 << i) != 0 {
                    s |= 1 << v;
                }
            }
            if is_cover(adj, s) {
                found = Some(s);
            }
        });
        if let Some(s) = found {
            return s;
        }
    }
    unreachable!("the full vertex set is a cover")
}

/// Calls `f` on every `size`-subset of `[n]` (as a mask), in increasing
/// numeric order.
pub(crate) fn for_each_subset_of_size(n: usize, size: usize, mut f: impl FnMut(u64)) {
    if size > n {
        return;
    }
    if size == 0 {
        f(0);
        return;
    }
    let limit = 1u64 << n;
    let mut s: u64 = (1u64 << size) - 1;
    while s < limit {
        f(s);
        // Gosper's hack: next integer with the same popcount.
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}
