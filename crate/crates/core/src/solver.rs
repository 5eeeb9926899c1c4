//! Exact vertex cover: subset enumeration for small graphs, degree
//! branching with optional kernelization at every node, and the branching
//! factor of the `(1, d)` branch.

use crate::bits::for_each_subset_of_size;
use crate::classic::solve_lp_half_integral;
use crate::degree::kernelize_min_degree;
use crate::error::{Error, Result};
use crate::graph::{Graph, Instance, VertexId, VertexSet};
use crate::kernel::KernelOutcome;
use crate::lift::lift_solution;
use crate::matching::greedy_maximal_matching;

/// Default vertex limit of [`brute_force_vc`].
pub const BRUTE_FORCE_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveResult {
    /// Size of a minimum vertex cover.
    pub optimum: usize,
    pub cover: VertexSet,
    /// Subsets tried (brute force) or search nodes expanded (branching).
    pub nodes: u64,
}

/// Answer of the decision version.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decision {
    /// A cover within budget.
    Yes {
        cover: VertexSet,
        nodes: u64,
    },
    No {
        nodes: u64,
    },
}

impl Decision {
    pub fn is_yes(&self) -> bool {
        matches!(self, Decision::Yes { .. })
    }

    pub fn nodes(&self) -> u64 {
        match self {
            Decision::Yes { nodes, .. } | Decision::No { nodes } => *nodes,
        }
    }
}

pub fn brute_force_vc(g: &Graph) -> Result<SolveResult> {
    brute_force_vc_with_cap(g, BRUTE_FORCE_CAP)
}

/// Minimum cover by trying subsets in order of size, starting at the size
/// of a maximal matching (every cover needs one endpoint per matched edge).
pub fn brute_force_vc_with_cap(g: &Graph, cap: usize) -> Result<SolveResult> {
    let n = g.vertex_count();
    if n > cap || n > 32 {
        return Err(Error::CapExceeded {
            size: n,
            cap: cap.min(32),
        });
    }
    let verts: Vec<VertexId> = g.vertices().collect();
    let index = |v: &VertexId| verts.binary_search(v).unwrap();
    let edges: Vec<u64> = g
        .edges()
        .map(|(u, v)| (1u64 << index(&u)) | (1u64 << index(&v)))
        .collect();
    let lower = greedy_maximal_matching(g).len();
    let mut nodes = 0u64;
    for size in lower..=n {
        let mut found = None;
        for_each_subset_of_size(n, size, |s| {
            if found.is_some() {
                return;
            }
            nodes += 1;
            if edges.iter().all(|e| e & s != 0) {
                found = Some(s);
            }
        });
        if let Some(s) = found {
            let cover = (0..n)
                .filter(|i| s & (1 << i) != 0)
                .map(|i| verts[i])
                .collect();
            return Ok(SolveResult {
                optimum: size,
                cover,
                nodes,
            });
        }
    }
    unreachable!("all vertices form a cover")
}

/// Decides whether `inst` has a cover within budget by branching on a
/// maximum-degree vertex `v`: either `v` joins the cover, or all of `N(v)`
/// does. With `use_kernelization`, every node is first reduced by
/// [`kernelize_min_degree`] and the child's cover is lifted back.
pub fn branch_solve(inst: &Instance, use_kernelization: bool) -> Result<Decision> {
    let mut nodes = 0;
    let found = branch(
        inst.graph.clone(),
        inst.budget,
        use_kernelization,
        &mut nodes,
    )?;
    Ok(match found {
        Some(cover) => {
            debug_assert!(inst.graph.is_vertex_cover(&cover) && cover.len() <= inst.budget);
            Decision::Yes { cover, nodes }
        }
        None => Decision::No { nodes },
    })
}

fn branch(g: Graph, k: usize, kernelize: bool, nodes: &mut u64) -> Result<Option<VertexSet>> {
    *nodes += 1;
    if kernelize {
        return match kernelize_min_degree(Instance::new(g, k))? {
            KernelOutcome::No { .. } => Ok(None),
            KernelOutcome::Yes(r) => Ok(Some(lift_solution(
                &r.trace,
                &r.instance.graph,
                &VertexSet::new(),
            )?)),
            KernelOutcome::Reduced(r) => {
                let inner = branch_step(
                    r.instance.graph.clone(),
                    r.instance.budget,
                    kernelize,
                    nodes,
                )?;
                match inner {
                    Some(c) => Ok(Some(lift_solution(&r.trace, &r.instance.graph, &c)?)),
                    None => Ok(None),
                }
            }
        };
    }
    branch_step(g, k, kernelize, nodes)
}

fn branch_step(g: Graph, k: usize, kernelize: bool, nodes: &mut u64) -> Result<Option<VertexSet>> {
    if g.is_edgeless() {
        return Ok(Some(VertexSet::new()));
    }
    let Some(v) = g
        .vertices()
        .max_by_key(|v| (g.degree(*v), std::cmp::Reverse(*v)))
    else {
        return Ok(Some(VertexSet::new()));
    };
    let d = g.degree(v);
    if k == 0 || g.edge_count() > k * d {
        return Ok(None);
    }
    let mut with_v = g.clone();
    with_v.remove_vertex(v);
    if let Some(mut c) = branch(with_v, k - 1, kernelize, nodes)? {
        c.insert(v);
        return Ok(Some(c));
    }
    if d <= k {
        let nb = g.neighbors(v).clone();
        let mut with_nb = g;
        with_nb.remove_vertices(&nb);
        if let Some(mut c) = branch(with_nb, k - d, kernelize, nodes)? {
            c.extend(nb);
            return Ok(Some(c));
        }
    }
    Ok(None)
}

/// Minimum cover by deciding budgets upward from the LP lower bound.
pub fn minimum_vertex_cover(g: &Graph, use_kernelization: bool) -> Result<SolveResult> {
    let lp = solve_lp_half_integral(g);
    let mut k = lp.objective_halves.div_ceil(2);
    let mut nodes = 0;
    loop {
        match branch_solve(&Instance::new(g.clone(), k), use_kernelization)? {
            Decision::Yes { cover, nodes: n } => {
                return Ok(SolveResult {
                    optimum: cover.len(),
                    cover,
                    nodes: nodes + n,
                })
            }
            Decision::No { nodes: n } => {
                nodes += n;
                k += 1;
            }
        }
    }
}

/// Root `λ > 1` of `λ^d = λ^(d-1) + 1`, the growth rate of
/// `T(k) = T(k-1) + T(k-d)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BranchingFactor {
    pub degree: usize,
    pub lambda: f64,
}

impl BranchingFactor {
    /// `|λ^d - λ^(d-1) - 1|`.
    pub fn residual(&self) -> f64 {
        let d = self.degree as i32;
        (self.lambda.powi(d) - self.lambda.powi(d - 1) - 1.0).abs()
    }
}

/// Bisection on `(1, 2]`, where `λ^d - λ^(d-1) - 1` goes from `-1` to
/// `2^(d-1) - 1 ≥ 1`.
pub fn branching_factor(d: usize) -> Result<BranchingFactor> {
    if d < 2 {
        return Err(Error::InvalidArgument(format!("degree {d} is below 2")));
    }
    let di =
        i32::try_from(d).map_err(|_| Error::InvalidArgument(format!("degree {d} is too large")))?;
    let f = |x: f64| x.powi(di) - x.powi(di - 1) - 1.0;
    let (mut lo, mut hi) = (1.0f64, 2.0f64);
    while hi - lo > 1e-13 {
        let mid = 0.5 * (lo + hi);
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(BranchingFactor {
        degree: d,
        lambda: 0.5 * (lo + hi),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut e = vec![];
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(n, &e)
    }

    fn petersen() -> Graph {
        Graph::from_edges(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
    }

    #[test]
    fn brute_force_examples() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(brute_force_vc(&c5).unwrap().optimum, 3);
        for n in 1..7 {
            assert_eq!(brute_force_vc(&complete(n)).unwrap().optimum, n - 1);
        }
        let p = brute_force_vc(&petersen()).unwrap();
        assert_eq!(p.optimum, 6);
        assert!(petersen().is_vertex_cover(&p.cover));
        assert_eq!(brute_force_vc(&Graph::new()).unwrap().optimum, 0);
        assert!(matches!(
            brute_force_vc(&Graph::with_vertices(21)),
            Err(Error::CapExceeded { size: 21, .. })
        ));
    }

    #[test]
    fn branching_examples() {
        let c4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        for kern in [false, true] {
            match branch_solve(&Instance::new(c4.clone(), 2), kern).unwrap() {
                Decision::Yes { cover, .. } => {
                    assert_eq!(cover.len(), 2);
                    assert!(c4.is_vertex_cover(&cover));
                }
                Decision::No { .. } => panic!("C4 has a cover of size 2"),
            }
            assert!(!branch_solve(&Instance::new(c4.clone(), 1), kern)
                .unwrap()
                .is_yes());
        }
    }

    #[test]
    fn optimum_matches_brute_force() {
        for kern in [false, true] {
            let r = minimum_vertex_cover(&petersen(), kern).unwrap();
            assert_eq!(r.optimum, 6);
            assert!(petersen().is_vertex_cover(&r.cover));
        }
        assert_eq!(
            minimum_vertex_cover(&Graph::new(), true).unwrap().optimum,
            0
        );
    }

    #[test]
    fn branching_factor_table() {
        for (d, want) in [
            (5, 1.3247),
            (6, 1.2852),
            (7, 1.2555),
            (10, 1.1975),
            (25, 1.1005),
            (100, 1.0346),
        ] {
            let b = branching_factor(d).unwrap();
            assert!((b.lambda - want).abs() <= 5e-4, "d={d}: {}", b.lambda);
            assert!(b.residual() < 1e-8);
        }
        assert!(branching_factor(1).is_err());
        // d = 2 gives the golden ratio.
        assert!((branching_factor(2).unwrap().lambda - 1.618_033_988_75).abs() < 1e-9);
    }

    #[test]
    fn branching_factor_decreases() {
        let mut prev = f64::INFINITY;
        for d in 2..200 {
            let l = branching_factor(d).unwrap().lambda;
            assert!(l < prev);
            prev = l;
        }
    }
}
