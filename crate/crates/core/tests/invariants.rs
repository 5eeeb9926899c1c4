//! Property tests over random small graphs, checked against the brute-force
//! oracle in `common`.

mod common;

use proptest::prelude::*;

use common::{check_site, oracle_cover, oracle_vc, LOCAL_RULES};
use vckernel::classic::{
    find_crown_or_matching, rule_isolated, solve_lp_half_integral, CrownOrMatching,
};
use vckernel::degree::applicable_sites;
use vckernel::matching::greedy_maximal_matching;
use vckernel::solver::{branch_solve, brute_force_vc, minimum_vertex_cover};
use vckernel::{lift_solution, Graph, Instance, Pipeline};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
            let edges: Vec<(usize, usize)> = pairs
                .zip(bits)
                .filter(|(_, keep)| *keep)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn local_rules_shift_the_optimum_exactly(g in graph(10)) {
        let vc = oracle_vc(&g);
        for tag in LOCAL_RULES {
            for site in applicable_sites(&g, tag) {
                prop_assert_eq!(check_site(&g, vc, &site), Ok(()));
            }
        }
    }

    #[test]
    fn pipelines_replay_unwind_and_lift(g in graph(10), slack in 0usize..3) {
        let vc = oracle_vc(&g);
        for p in Pipeline::ALL {
            let k = vc + slack;
            let out = p.run(Instance::new(g.clone(), k)).unwrap();
            let red = out.reduction().expect("yes-instance");
            prop_assert_eq!(&red.trace.replay(&g), &red.instance.graph);
            prop_assert_eq!(&red.trace.unwind(&red.instance.graph), &g);
            prop_assert_eq!(k - red.instance.budget, red.trace.budget_delta());
            let cover = oracle_cover(&red.instance.graph);
            let lifted = lift_solution(&red.trace, &red.instance.graph, &cover).unwrap();
            prop_assert!(g.is_vertex_cover(&lifted));
            prop_assert_eq!(lifted.len(), vc);
        }
    }

    #[test]
    fn pipelines_never_accept_below_optimum(g in graph(10)) {
        let vc = oracle_vc(&g);
        prop_assume!(vc > 0);
        for p in Pipeline::ALL {
            let out = p.run(Instance::new(g.clone(), vc - 1)).unwrap();
            if let Some(i) = out.instance() {
                prop_assert!(oracle_vc(&i.graph) > i.budget, "{} accepted below optimum", p);
            }
        }
    }

    #[test]
    fn lp_bounds_the_optimum(g in graph(11)) {
        let lp = solve_lp_half_integral(&g);
        let vc = oracle_vc(&g);
        prop_assert!(lp.is_feasible(&g));
        prop_assert!(lp.objective() <= vc as f64 + 1e-9);
        prop_assert!(lp.objective() + 1e-9 >= greedy_maximal_matching(&g).len() as f64);
        // Some minimum cover contains every 1 and avoids every 0.
        let rest = g.induced_subgraph(&lp.halves());
        prop_assert_eq!(oracle_vc(&rest) + lp.ones().len(), vc);
    }

    #[test]
    fn crowns_are_valid(g in graph(11), k in 0usize..4) {
        let g = rule_isolated(Instance::new(g, 0)).into_reduction().unwrap().instance.graph;
        prop_assume!(g.vertex_count() > 3 * k);
        match find_crown_or_matching(&g, k).unwrap() {
            CrownOrMatching::Crown(cd) => {
                prop_assert_eq!(cd.validate(&g), Ok(()));
                let mut rest = g.clone();
                rest.remove_vertices(cd.crown.iter().chain(&cd.head));
                prop_assert_eq!(oracle_vc(&rest) + cd.head.len(), oracle_vc(&g));
            }
            CrownOrMatching::Matching(m) => {
                prop_assert!(m.is_valid_in(&g) && m.len() > k);
            }
        }
    }

    #[test]
    fn solvers_agree_with_oracle(g in graph(11)) {
        let vc = oracle_vc(&g);
        prop_assert_eq!(brute_force_vc(&g).unwrap().optimum, vc);
        for kern in [false, true] {
            let best = minimum_vertex_cover(&g, kern).unwrap();
            prop_assert_eq!(best.optimum, vc);
            prop_assert!(g.is_vertex_cover(&best.cover));
            prop_assert!(branch_solve(&Instance::new(g.clone(), vc), kern).unwrap().is_yes());
            if vc > 0 {
                prop_assert!(!branch_solve(&Instance::new(g.clone(), vc - 1), kern).unwrap().is_yes());
            }
        }
    }
}
