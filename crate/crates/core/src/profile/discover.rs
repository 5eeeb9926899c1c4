//! Exhaustive search for patterns with a prescribed profile.

use std::collections::BTreeMap;

use rayon::prelude::*;

use super::{AttachmentPattern, Profile};
use crate::bits;
use crate::error::{Error, Result};

/// Default refusal threshold for [`estimate_candidates`].
pub const DEFAULT_CANDIDATE_LIMIT: u128 = 1 << 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchSpace {
    /// Every graph on `n` vertices with every attachment map.
    Attachment,
    /// Vertices `0..t` form an independent boundary, boundary vertex `i`
    /// attached to interface `i`, all other vertices unattached; every
    /// graph on the remaining vertex pairs.
    Boundaried,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DiscoverOptions {
    /// Core size of the candidates.
    pub n: usize,
    pub space: SearchSpace,
    /// Refuse when the candidate count exceeds this.
    pub limit: u128,
    /// Also report candidates whose profile is the target minus a positive
    /// constant.
    pub allow_offset: bool,
}

impl DiscoverOptions {
    pub fn new(n: usize) -> Self {
        DiscoverOptions {
            n,
            space: SearchSpace::Attachment,
            limit: DEFAULT_CANDIDATE_LIMIT,
            allow_offset: true,
        }
    }
}

/// A candidate whose profile is the target minus `offset` everywhere. The
/// pattern is in canonical labeling.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Discovery {
    pub pattern: AttachmentPattern,
    pub offset: u32,
}

/// Number of candidates the search would examine.
pub fn estimate_candidates(n: usize, t: usize, space: SearchSpace) -> u128 {
    let pairs = n * n.saturating_sub(1) / 2;
    let exp = match space {
        SearchSpace::Attachment => pairs + n * t,
        SearchSpace::Boundaried => {
            if n < t {
                return 0;
            }
            pairs - t * (t - 1) / 2
        }
    };
    if exp >= 127 {
        u128::MAX
    } else {
        1u128 << exp
    }
}

/// Every pattern (up to relabeling the core) on `opts.n` vertices whose
/// profile equals `target` minus a constant `c ≥ 0` (`c = 0` only unless
/// `opts.allow_offset`). Output is sorted by canonical form, independent of
/// thread count.
pub fn discover_replacements(target: &Profile, opts: &DiscoverOptions) -> Result<Vec<Discovery>> {
    let t = target.t();
    let n = opts.n;
    if n > 12 || n * t >= 64 {
        return Err(Error::CapExceeded {
            size: n,
            cap: 12.min(63 / t.max(1)),
        });
    }
    let estimate = estimate_candidates(n, t, opts.space);
    if estimate > opts.limit {
        return Err(Error::InvalidArgument(format!(
            "search over {estimate} candidates exceeds the limit of {}",
            opts.limit
        )));
    }
    let Some(goal) = target
        .entries()
        .iter()
        .map(|c| c.finite())
        .collect::<Option<Vec<u32>>>()
    else {
        // Cores always have finite profiles.
        return Ok(Vec::new());
    };
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|(a, b)| opts.space == SearchSpace::Attachment || *a >= t || *b >= t)
        .collect();
    let fixed_att: Vec<u32> = (0..n).map(|w| if w < t { 1 << w } else { 0 }).collect();
    if opts.space == SearchSpace::Boundaried && n < t {
        return Ok(Vec::new());
    }

    let found: Vec<(Vec<u32>, Discovery)> = (0u64..1u64 << pairs.len())
        .into_par_iter()
        .flat_map_iter(|gbits| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| gbits & (1 << i) != 0)
                .map(|(_, e)| *e)
                .collect();
            let adj = bits::adjacency(n, &edges);
            let mut hits = Vec::new();
            match opts.space {
                SearchSpace::Boundaried => {
                    if (0..t).all(|x| adj[x] != 0) {
                        let best = bits::min_cover_table(&adj);
                        push_hit(&adj, &best, fixed_att.clone(), &goal, t, opts, &mut hits);
                    }
                }
                SearchSpace::Attachment => {
                    let best = bits::min_cover_table(&adj);
                    let radix = 1u64 << t;
                    for code in 0..radix.pow(n as u32) {
                        let mut c = code;
                        let att: Vec<u32> = (0..n)
                            .map(|_| {
                                let a = (c % radix) as u32;
                                c /= radix;
                                a
                            })
                            .collect();
                        push_hit(&adj, &best, att, &goal, t, opts, &mut hits);
                    }
                }
            }
            hits.into_iter()
        })
        .collect();

    let mut unique: BTreeMap<Vec<u32>, Discovery> = BTreeMap::new();
    for (key, d) in found {
        unique.entry(key).or_insert(d);
    }
    Ok(unique.into_values().collect())
}

/// The offset `c` if `best[forced(X)] + c = goal[X]` for every `X`.
fn matches_with(
    best: &[u8],
    att: &[u32],
    goal: &[u32],
    t: usize,
    opts: &DiscoverOptions,
) -> Option<u32> {
    let full = (1u32 << t) - 1;
    let vc = best[0] as u32;
    let c = goal[full as usize].checked_sub(vc)?;
    if c != 0 && !opts.allow_offset {
        return None;
    }
    for x in 0..=full {
        let forced = att
            .iter()
            .enumerate()
            .filter(|(_, a)| **a & !x != 0)
            .fold(0usize, |m, (w, _)| m | (1 << w));
        if best[forced] as u32 + c != goal[x as usize] {
            return None;
        }
    }
    Some(c)
}

fn push_hit(
    adj: &[u32],
    best: &[u8],
    att: Vec<u32>,
    goal: &[u32],
    t: usize,
    opts: &DiscoverOptions,
    hits: &mut Vec<(Vec<u32>, Discovery)>,
) {
    if let Some(offset) = matches_with(best, &att, goal, t, opts) {
        let p = AttachmentPattern::from_masks(t, adj.to_vec(), att);
        let (key, pattern) = p.canonical();
        hits.push((key, Discovery { pattern, offset }));
    }
}
