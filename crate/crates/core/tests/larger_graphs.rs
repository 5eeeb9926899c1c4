//! Graphs beyond the oracle's comfortable range: the two solver modes
//! cross-check each other, and the minimum-degree kernels are inspected
//! structurally.

mod common;

use common::min_degree_violation;
use vckernel::corpus::{random_gnp, random_planted_cover, random_tree, seeded_rng};
use vckernel::degree::{kernelize_min_degree, kernelize_min_degree_auto};
use vckernel::solver::minimum_vertex_cover;
use vckernel::{lift_solution, Graph, Instance, Pipeline};

fn corpus() -> Vec<Graph> {
    let mut rng = seeded_rng(42);
    let mut out = Vec::new();
    for i in 0..30 {
        out.push(random_planted_cover(30 + i % 10, 8 + i % 5, 0.35, &mut rng));
        out.push(random_gnp(24, 0.12 + 0.01 * (i % 6) as f64, &mut rng));
        out.push(random_tree(40, &mut rng));
    }
    out
}

#[test]
fn solver_modes_agree_and_kernels_lift() {
    for (i, g) in corpus().into_iter().enumerate() {
        let plain = minimum_vertex_cover(&g, false).unwrap();
        let kern = minimum_vertex_cover(&g, true).unwrap();
        assert_eq!(plain.optimum, kern.optimum, "graph {i}");
        assert!(g.is_vertex_cover(&kern.cover));
        let opt = plain.optimum;
        for p in Pipeline::ALL {
            let out = p.run(Instance::new(g.clone(), opt)).unwrap();
            let red = out
                .reduction()
                .unwrap_or_else(|| panic!("graph {i}: {p} rejected"));
            let inner = minimum_vertex_cover(&red.instance.graph, false).unwrap();
            assert_eq!(
                inner.optimum + red.trace.budget_delta(),
                opt,
                "graph {i} {p}"
            );
            let lifted = lift_solution(&red.trace, &red.instance.graph, &inner.cover).unwrap();
            assert!(
                g.is_vertex_cover(&lifted) && lifted.len() == opt,
                "graph {i} {p}"
            );
        }
    }
}

#[test]
fn min_degree_postcondition_on_dense_kernels() {
    let mut rng = seeded_rng(9);
    let mut nonempty = 0;
    for i in 0..60 {
        let n = 20 + i % 20;
        let g = random_gnp(n, 0.25, &mut rng);
        // A generous budget keeps the high-degree rule quiet so the
        // small-degree rules do the work.
        let k = n;
        for (auto, limit) in [(false, 2), (true, 1)] {
            let inst = Instance::new(g.clone(), k);
            let out = if auto {
                kernelize_min_degree_auto(inst)
            } else {
                kernelize_min_degree(inst)
            };
            let out = out.unwrap();
            let red = out.reduction().expect("budget n always suffices");
            assert_eq!(
                min_degree_violation(&red.instance.graph, limit),
                None,
                "graph {i}"
            );
            assert_eq!(red.trace.replay(&g), red.instance.graph);
            if !red.instance.graph.is_edgeless() {
                nonempty += 1;
            }
        }
    }
    assert!(nonempty > 0);
}

#[test]
fn trees_reduce_completely() {
    let mut rng = seeded_rng(5);
    for _ in 0..20 {
        let t = random_tree(60, &mut rng);
        let opt = minimum_vertex_cover(&t, false).unwrap().optimum;
        let out = kernelize_min_degree(Instance::new(t, opt)).unwrap();
        assert!(out.is_yes());
    }
}
