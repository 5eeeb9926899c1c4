//! Brute-force oracle, the shared graph suite, and one check per acceptance
//! criterion. Each check returns a short summary on success and the first
//! counterexample on failure.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::sync::OnceLock;
use std::time::{Duration, Instant};

use rand::Rng;
use rayon::prelude::*;

use vckernel::classic::{
    buss_kernelize, crown_kernelize, find_crown_or_matching, rule_crown, rule_high_degree,
    rule_isolated, rule_lp, CrownOrMatching,
};
use vckernel::corpus::{connected_graphs, random_gnp, random_occurrence, seeded_rng};
use vckernel::degree::{
    applicable_sites, apply_site, kernelize_min_degree, kernelize_min_degree_auto, Site,
};
use vckernel::profile::{
    check_equivalence, compatible_core_cover, compute_profile, discover_replacements, glue,
    swap_equivalent, AttachmentPattern, BoundariedGraph, Cost, DiscoverOptions, Profile,
};
use vckernel::solver::branching_factor;
use vckernel::{
    lift_solution, Graph, Instance, KernelOutcome, Pipeline, RuleTag, VertexId, VertexSet,
};

pub type Check = Result<String, String>;

// ---------------------------------------------------------------- oracle

/// Largest independent set of the vertices in `mask`, by plain branching.
fn mis(adj: &[u64], mask: u64) -> u64 {
    if mask == 0 {
        return 0;
    }
    let v = mask.trailing_zeros() as usize;
    let bit = 1u64 << v;
    let nb = adj[v] & mask;
    if nb.count_ones() <= 1 {
        // Taking a vertex of degree at most one never hurts.
        return bit | mis(adj, mask & !bit & !nb);
    }
    let without = mis(adj, mask & !bit);
    let with = bit | mis(adj, mask & !bit & !nb);
    if with.count_ones() > without.count_ones() {
        with
    } else {
        without
    }
}

/// A minimum vertex cover, independent of the library's solvers.
pub fn oracle_cover(g: &Graph) -> VertexSet {
    let ids: Vec<VertexId> = g.vertices().collect();
    assert!(ids.len() <= 64, "oracle is limited to 64 vertices");
    let index: BTreeMap<VertexId, usize> = ids.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let adj: Vec<u64> = ids
        .iter()
        .map(|v| g.neighbors(*v).iter().fold(0u64, |m, w| m | 1 << index[w]))
        .collect();
    let all = if ids.len() == 64 {
        u64::MAX
    } else {
        (1u64 << ids.len()) - 1
    };
    let keep = mis(&adj, all);
    ids.iter()
        .enumerate()
        .filter(|(i, _)| keep & (1 << i) == 0)
        .map(|(_, v)| *v)
        .collect()
}

pub fn oracle_vc(g: &Graph) -> usize {
    oracle_cover(g).len()
}

/// Optimum of the instance left by `out`, plus the budget it consumed;
/// `None` for a No outcome.
fn shifted_optimum(original_budget: usize, out: &KernelOutcome) -> Option<usize> {
    out.instance()
        .map(|i| oracle_vc(&i.graph) + (original_budget - i.budget))
}

// ---------------------------------------------------------------- suite

pub struct SuiteGraph {
    pub name: String,
    pub graph: Graph,
    pub vc: usize,
}

pub const RANDOM_SUITE_SIZE: usize = 10_000;
pub const RANDOM_SUITE_MAX_ORDER: usize = 11;
pub const EXHAUSTIVE_MAX_ORDER: usize = 8;

/// Every connected graph on at most eight vertices, followed by ten
/// thousand seeded random graphs on at most eleven.
pub fn suite() -> &'static [SuiteGraph] {
    static SUITE: OnceLock<Vec<SuiteGraph>> = OnceLock::new();
    SUITE.get_or_init(|| {
        let mut graphs: Vec<(String, Graph)> = Vec::new();
        for n in 1..=EXHAUSTIVE_MAX_ORDER {
            for (i, g) in connected_graphs(n).into_iter().enumerate() {
                graphs.push((format!("connected n={n} #{i}"), g));
            }
        }
        let mut rng = seeded_rng(0x5eed);
        for i in 0..RANDOM_SUITE_SIZE {
            let n = rng.gen_range(1..=RANDOM_SUITE_MAX_ORDER);
            let p = rng.gen_range(0.1..0.8);
            graphs.push((
                format!("random #{i} n={n} p={p:.2}"),
                random_gnp(n, p, &mut rng),
            ));
        }
        graphs
            .into_par_iter()
            .map(|(name, graph)| {
                let vc = oracle_vc(&graph);
                SuiteGraph { name, graph, vc }
            })
            .collect()
    })
}

/// Runs `f` on every suite graph in parallel and reports the first failure
/// in suite order.
fn over_suite<T: Send>(
    f: impl Fn(&SuiteGraph) -> Result<T, String> + Sync,
) -> Result<Vec<T>, String> {
    let results: Vec<Result<T, String>> = suite()
        .par_iter()
        .map(|s| f(s).map_err(|e| format!("{}: {e}", s.name)))
        .collect();
    results.into_iter().collect()
}

// ---------------------------------------------------------------- criterion 1

pub const LOCAL_RULES: [RuleTag; 8] = [
    RuleTag::Pendant,
    RuleTag::Dominance,
    RuleTag::DegreeTwo,
    RuleTag::CliqueCoMatching,
    RuleTag::DegreeThree,
    RuleTag::DegreeFourPath,
    RuleTag::DegreeFourDisjoint,
    RuleTag::DegreeFourWedge,
];

/// Checks one local site: the optimum drops by exactly the budget delta.
pub fn check_site(g: &Graph, vc: usize, site: &Site) -> Result<(), String> {
    let out =
        apply_site(Instance::new(g.clone(), vc), site).map_err(|e| format!("{site:?}: {e}"))?;
    match shifted_optimum(vc, &out) {
        Some(v) if v == vc => Ok(()),
        Some(v) => Err(format!("{site:?}: optimum {vc} became {v} after the shift")),
        None => Err(format!("{site:?}: rejected a yes-instance at its optimum")),
    }
}

/// Decision at budget `k` must agree with the oracle.
fn same_decision(vc: usize, k: usize, out: &KernelOutcome, what: &str) -> Result<(), String> {
    let kernel_yes = match out.instance() {
        Some(i) => oracle_vc(&i.graph) <= i.budget,
        None => false,
    };
    if kernel_yes != (vc <= k) {
        return Err(format!(
            "{what} at k={k}: decision {kernel_yes}, optimum {vc}"
        ));
    }
    Ok(())
}

fn safeness_counts(s: &SuiteGraph) -> Result<BTreeMap<&'static str, usize>, String> {
    let (g, vc) = (&s.graph, s.vc);
    let mut counts: BTreeMap<&'static str, usize> = BTreeMap::new();
    let n = g.vertex_count();

    let out = rule_isolated(Instance::new(g.clone(), vc));
    if shifted_optimum(vc, &out) != Some(vc) {
        return Err("isolated-vertex removal changed the optimum".into());
    }
    *counts.entry("isolated").or_default() += g.isolated_vertices().len();

    for k in 0..=n {
        if g.vertices().any(|v| g.degree(v) > k) {
            same_decision(
                vc,
                k,
                &rule_high_degree(Instance::new(g.clone(), k)),
                "high-degree",
            )?;
            *counts.entry("high-degree").or_default() += 1;
        }
        same_decision(vc, k, &buss_kernelize(Instance::new(g.clone(), k)), "buss")?;
        same_decision(vc, k, &rule_lp(Instance::new(g.clone(), k)), "lp")?;
        *counts.entry("lp").or_default() += 1;
    }

    let base = rule_isolated(Instance::new(g.clone(), vc))
        .into_reduction()
        .expect("never No")
        .instance
        .graph;
    for k in 0..=n {
        if base.vertex_count() < 3 * k + 1 {
            break;
        }
        match find_crown_or_matching(&base, k).map_err(|e| e.to_string())? {
            CrownOrMatching::Crown(cd) => {
                cd.validate(&base).map_err(|e| e.to_string())?;
                let out =
                    rule_crown(Instance::new(base.clone(), vc), &cd).map_err(|e| e.to_string())?;
                if shifted_optimum(vc, &out) != Some(vc) {
                    return Err(format!("crown {cd:?} changed the optimum"));
                }
                *counts.entry("crown").or_default() += 1;
            }
            CrownOrMatching::Matching(m) => {
                if !m.is_valid_in(&base) || m.len() <= k || vc < m.len() {
                    return Err(format!("bad matching certificate at k={k}"));
                }
                *counts.entry("crown-matching").or_default() += 1;
            }
        }
        let out = crown_kernelize(Instance::new(base.clone(), k));
        same_decision(vc, k, &out, "crown kernel")?;
    }

    for tag in LOCAL_RULES {
        for site in applicable_sites(g, tag) {
            check_site(g, vc, &site)?;
            *counts.entry(tag.name()).or_default() += 1;
        }
    }
    Ok(counts)
}

pub fn check_oracle_safeness() -> Check {
    let all = over_suite(safeness_counts)?;
    let mut total: BTreeMap<&'static str, usize> = BTreeMap::new();
    for c in all {
        for (k, v) in c {
            *total.entry(k).or_default() += v;
        }
    }
    let mut missing: Vec<&str> = LOCAL_RULES
        .iter()
        .map(|t| t.name())
        .chain(["isolated", "high-degree", "crown", "lp"])
        .filter(|r| total.get(r).copied().unwrap_or(0) == 0)
        .collect();
    missing.sort_unstable();
    if !missing.is_empty() {
        return Err(format!("rules never exercised: {missing:?}"));
    }
    let detail: Vec<String> = total.iter().map(|(k, v)| format!("{k}={v}")).collect();
    Ok(format!(
        "{} graphs; positions {}",
        suite().len(),
        detail.join(" ")
    ))
}

// ---------------------------------------------------------------- criterion 2

pub fn check_kernel_bounds() -> Check {
    let sizes = over_suite(|s| {
        let k = s.vc;
        let buss = buss_kernelize(Instance::new(s.graph.clone(), k));
        let Some(i) = buss.instance() else {
            return Err("buss rejected a yes-instance".into());
        };
        let (n, m, kk) = (i.graph.vertex_count(), i.graph.edge_count(), i.budget);
        if n > kk * kk + kk || m > kk * kk || kk > k {
            return Err(format!("buss kernel n={n} m={m} k'={kk}"));
        }
        let crown = crown_kernelize(Instance::new(s.graph.clone(), k));
        let Some(i) = crown.instance() else {
            return Err("crown kernel rejected a yes-instance".into());
        };
        if i.graph.vertex_count() > 3 * i.budget || i.budget > k {
            return Err(format!(
                "crown kernel n={} k'={}",
                i.graph.vertex_count(),
                i.budget
            ));
        }
        let lp = rule_lp(Instance::new(s.graph.clone(), k));
        let Some(i) = lp.instance() else {
            return Err("lp kernel rejected a yes-instance".into());
        };
        if i.graph.vertex_count() > 2 * i.budget || i.budget > k {
            return Err(format!(
                "lp kernel n={} k'={}",
                i.graph.vertex_count(),
                i.budget
            ));
        }
        Ok(s.graph.vertex_count())
    })?;
    Ok(format!("{} instances at k = optimum", sizes.len()))
}

// ---------------------------------------------------------------- criterion 3

/// Independent restatement of the minimum-degree postcondition.
pub fn min_degree_violation(g: &Graph, limit: usize) -> Option<String> {
    for v in g.vertices() {
        let d = g.degree(v);
        if d < 4 {
            return Some(format!("vertex {v} has degree {d}"));
        }
        if d == 4 {
            let e = g.induced_edge_count(g.neighbors(v));
            if e > limit {
                return Some(format!("degree-four vertex {v} has {e} neighborhood edges"));
            }
        }
    }
    None
}

pub fn check_min_degree_postcondition() -> Check {
    let nonempty = over_suite(|s| {
        let mut nonempty = 0;
        for k in [s.vc, s.graph.vertex_count()] {
            for (auto, limit) in [(false, 2), (true, 1)] {
                let inst = Instance::new(s.graph.clone(), k);
                let out = if auto {
                    kernelize_min_degree_auto(inst)
                } else {
                    kernelize_min_degree(inst)
                };
                let out = out.map_err(|e| e.to_string())?;
                if let Some(i) = out.instance() {
                    if i.budget > k {
                        return Err("budget increased".into());
                    }
                    if let Some(v) = min_degree_violation(&i.graph, limit) {
                        return Err(format!("replacements={auto} k={k}: {v}"));
                    }
                    if !i.graph.is_edgeless() {
                        nonempty += 1;
                    }
                }
            }
        }
        Ok(nonempty)
    })?;
    Ok(format!(
        "{} runs, {} nonempty kernels",
        4 * nonempty.len(),
        nonempty.iter().sum::<usize>()
    ))
}

// ---------------------------------------------------------------- criterion 4

pub const BRANCHING_TABLE: [(usize, f64); 6] = [
    (5, 1.3247),
    (6, 1.2852),
    (7, 1.2555),
    (10, 1.1975),
    (25, 1.1005),
    (100, 1.0346),
];

pub fn check_branching_factors() -> Check {
    let mut got = Vec::new();
    for (d, want) in BRANCHING_TABLE {
        let f = branching_factor(d).map_err(|e| e.to_string())?;
        if (f.lambda - want).abs() > 5e-4 {
            return Err(format!("d={d}: {} vs {want}", f.lambda));
        }
        got.push(format!("{d}:{:.4}", f.lambda));
    }
    Ok(got.join(" "))
}

// ---------------------------------------------------------------- criterion 5

/// Subset index with interfaces A=0, B=1, C=2, D=3.
pub fn subset(a: bool, b: bool, c: bool, d: bool) -> u32 {
    a as u32 | (b as u32) << 1 | (c as u32) << 2 | (d as u32) << 3
}

/// Rows CD, C¬D, ¬CD, ¬C¬D; columns AB, A¬B, ¬AB, ¬A¬B.
pub fn profile_from_grid(grid: [[u32; 4]; 4]) -> Profile {
    let pairs = [(true, true), (true, false), (false, true), (false, false)];
    let mut v = vec![0; 16];
    for (r, (c, d)) in pairs.iter().enumerate() {
        for (col, (a, b)) in pairs.iter().enumerate() {
            v[subset(*a, *b, *c, *d) as usize] = grid[r][col];
        }
    }
    Profile::from_values(4, &v).expect("16 entries")
}

pub fn disjoint_profile() -> Profile {
    profile_from_grid([[3, 3, 3, 4], [3, 3, 3, 4], [3, 3, 3, 4], [4, 4, 4, 4]])
}

pub fn wedge_profile() -> Profile {
    profile_from_grid([[2, 2, 3, 3], [3, 3, 4, 4], [3, 3, 3, 4], [4, 4, 4, 4]])
}

pub fn check_profile_tables() -> Check {
    for (name, p, want) in [
        (
            "disjoint",
            AttachmentPattern::degree_four_disjoint(),
            disjoint_profile(),
        ),
        (
            "wedge",
            AttachmentPattern::degree_four_wedge(),
            wedge_profile(),
        ),
    ] {
        let got = compute_profile(&p).map_err(|e| e.to_string())?;
        if got != want {
            return Err(format!("{name}: computed {got}, expected {want}"));
        }
    }
    // Interfaces A, C, D covered; core vertex 4 is the center u.
    let x = subset(true, false, true, true);
    let w1 = compatible_core_cover(&AttachmentPattern::degree_four_disjoint(), x);
    let w2 = compatible_core_cover(&AttachmentPattern::degree_four_wedge(), x);
    if w1 != [1, 2, 4] || w2 != [1, 4] {
        return Err(format!("witness covers {w1:?} and {w2:?}"));
    }
    Ok("both 16-entry tables match; witnesses {u,1,2} and {u,1}".into())
}

// ---------------------------------------------------------------- criterion 6

pub fn replacement_pairs() -> [(&'static str, AttachmentPattern, AttachmentPattern); 2] {
    [
        (
            "disjoint",
            AttachmentPattern::degree_four_disjoint(),
            AttachmentPattern::degree_four_disjoint_replacement(),
        ),
        (
            "wedge",
            AttachmentPattern::degree_four_wedge(),
            AttachmentPattern::degree_four_wedge_replacement(),
        ),
    ]
}

pub const HOSTS_PER_PAIR: usize = 200;

pub fn check_zero_equivalence() -> Check {
    let mut rng = seeded_rng(0xe9);
    for (name, p1, p2) in replacement_pairs() {
        match check_equivalence(&p1, &p2) {
            Ok(Some(0)) => {}
            other => return Err(format!("{name}: check_equivalence gave {other:?}")),
        }
        for h in 0..HOSTS_PER_PAIR {
            let extra = rng.gen_range(0..=7);
            let (host, occ) = random_occurrence(&p1, extra, &mut rng);
            occ.validate(&host, &p1)
                .map_err(|e| format!("{name} host {h}: {e}"))?;
            let vc = oracle_vc(&host);
            for k in vc.saturating_sub(1)..=vc + 1 {
                let swapped =
                    swap_equivalent(&host, &p1, &occ, &p2, 0, k).map_err(|e| e.to_string())?;
                let yes = oracle_vc(&swapped.graph) <= swapped.budget;
                if yes != (vc <= k) {
                    return Err(format!("{name} host {h} k={k}: swap changed the decision"));
                }
            }
        }
    }
    Ok(format!(
        "c = 0 for both pairs; {HOSTS_PER_PAIR} random hosts per pair agree"
    ))
}

// ---------------------------------------------------------------- criterion 7

pub const DISCOVERY_TIME_LIMIT: Duration = Duration::from_secs(60);

pub fn check_rediscovery() -> Check {
    let mut times = Vec::new();
    for (name, p1, p2) in replacement_pairs() {
        let target = compute_profile(&p1).map_err(|e| e.to_string())?;
        let start = Instant::now();
        let found =
            discover_replacements(&target, &DiscoverOptions::new(4)).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed();
        if !found
            .iter()
            .any(|d| d.offset == 0 && d.pattern.is_isomorphic(&p2))
        {
            return Err(format!(
                "{name}: replacement not among {} results",
                found.len()
            ));
        }
        if elapsed > DISCOVERY_TIME_LIMIT {
            return Err(format!("{name}: took {elapsed:?}"));
        }
        times.push(format!(
            "{name} {:.2}s ({} hits)",
            elapsed.as_secs_f64(),
            found.len()
        ));
    }
    Ok(times.join(", "))
}

// ---------------------------------------------------------------- criterion 8

pub fn check_end_to_end_lifting() -> Check {
    let runs = over_suite(|s| {
        for p in Pipeline::ALL {
            let out = p
                .run(Instance::new(s.graph.clone(), s.vc))
                .map_err(|e| format!("{p}: {e}"))?;
            let Some(red) = out.reduction() else {
                return Err(format!("{p} rejected a yes-instance"));
            };
            let kernel_cover = oracle_cover(&red.instance.graph);
            let lifted = lift_solution(&red.trace, &red.instance.graph, &kernel_cover)
                .map_err(|e| format!("{p}: {e}"))?;
            if !s.graph.is_vertex_cover(&lifted) || lifted.len() != s.vc {
                return Err(format!(
                    "{p}: lifted {} vertices, optimum {}",
                    lifted.len(),
                    s.vc
                ));
            }
        }
        Ok(())
    })?;
    Ok(format!(
        "{} instances x {} pipelines",
        runs.len(),
        Pipeline::ALL.len()
    ))
}

// ---------------------------------------------------------------- criterion 9

/// Profile of `h` by the definition: glue it to a private-pendant witness
/// and minimize the vertices of `h` over covers compatible with each `X`.
pub fn literal_profile(h: &BoundariedGraph) -> Vec<u32> {
    let t = h.t();
    let witness = BoundariedGraph::pendant_witness(t).unwrap();
    let glued = glue(&witness, h).unwrap();
    let ids: Vec<VertexId> = glued.graph.vertices().collect();
    let pos = |v: VertexId| ids.iter().position(|w| *w == v).unwrap();
    let pendant: Vec<usize> = (0..t)
        .map(|i| pos(glued.from_g[&VertexId::new((t + i) as u32)]))
        .collect();
    let h_mask = glued.from_h.values().fold(0u32, |m, v| m | 1 << pos(*v));
    let edges: Vec<(usize, usize)> = glued.graph.edges().map(|(a, b)| (pos(a), pos(b))).collect();
    literal_min(ids.len(), &edges, &pendant, h_mask, t)
}

/// Profile of an attachment pattern by the definition: the outside graph
/// is one private vertex `p_i` per interface, joined to every core vertex
/// whose mask names `i`, and `X` is compatible exactly when `p_i` is in the
/// cover for every `i` in `X`.
pub fn literal_pattern_profile(p: &AttachmentPattern) -> Vec<u32> {
    let (n, t) = (p.n(), p.t());
    let mut edges = p.edges();
    for i in 0..t {
        for w in 0..n {
            if p.attachment(w) & (1 << i) != 0 {
                edges.push((w, n + i));
            }
        }
    }
    let pendant: Vec<usize> = (0..t).map(|i| n + i).collect();
    literal_min(n + t, &edges, &pendant, (1 << n) - 1, t)
}

fn literal_min(
    nv: usize,
    edges: &[(usize, usize)],
    pendant: &[usize],
    local: u32,
    t: usize,
) -> Vec<u32> {
    let mut best = vec![u32::MAX; 1 << t];
    for s in 0u32..1 << nv {
        if edges
            .iter()
            .all(|(a, b)| s & (1 << a) != 0 || s & (1 << b) != 0)
        {
            let x = (0..t)
                .filter(|i| s & (1 << pendant[*i]) != 0)
                .fold(0usize, |m, i| m | 1 << i);
            let c = (s & local).count_ones();
            best[x] = best[x].min(c);
        }
    }
    best
}

fn finite(p: &Profile) -> Vec<u32> {
    p.entries()
        .iter()
        .map(|c| match c {
            Cost::Finite(v) => *v,
            Cost::Infinite => u32::MAX,
        })
        .collect()
}

/// Every graph on `n ≤ 6` vertices with boundary `0..t`, `t ≤ 3`.
fn forcing_on_boundaried_graphs() -> Result<usize, String> {
    let mut checked = 0;
    for n in 1..=6usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        for t in 1..=3.min(n) {
            let counts: Vec<Result<usize, String>> = (0u32..1 << pairs.len())
                .into_par_iter()
                .map(|bits| {
                    let edges: Vec<(usize, usize)> = pairs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| bits & (1 << i) != 0)
                        .map(|(_, e)| *e)
                        .collect();
                    let g = Graph::from_edges(n, &edges);
                    let boundary: Vec<VertexId> = (0..t as u32).map(VertexId::new).collect();
                    let Ok(h) = BoundariedGraph::new(g, boundary) else {
                        return Ok(0);
                    };
                    let (p, _) =
                        AttachmentPattern::from_boundaried(&h).map_err(|e| e.to_string())?;
                    let forced = finite(&compute_profile(&p).map_err(|e| e.to_string())?);
                    let literal = literal_profile(&h);
                    if forced != literal {
                        return Err(format!(
                            "n={n} t={t} edges {edges:?}: {forced:?} vs {literal:?}"
                        ));
                    }
                    Ok(1)
                })
                .collect();
            for c in counts {
                checked += c?;
            }
        }
    }
    Ok(checked)
}

/// Every attachment pattern with core `n` and `t` interfaces, where the
/// enumeration stays below a few million patterns.
fn forcing_on_attachment_patterns() -> Result<usize, String> {
    let mut checked = 0;
    for (n, t) in [
        (1, 1),
        (2, 1),
        (3, 1),
        (4, 1),
        (5, 1),
        (6, 1),
        (1, 2),
        (2, 2),
        (3, 2),
        (4, 2),
        (5, 2),
        (1, 3),
        (2, 3),
        (3, 3),
        (4, 3),
    ] {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .collect();
        let radix = 1u64 << t;
        let codes = radix.pow(n as u32);
        let counts: Vec<Result<usize, String>> = (0u64..1 << pairs.len())
            .into_par_iter()
            .map(|bits| {
                let edges: Vec<(usize, usize)> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits & (1 << i) != 0)
                    .map(|(_, e)| *e)
                    .collect();
                for code in 0..codes {
                    let att: Vec<u32> =
                        (0..n).map(|w| ((code >> (w * t)) % radix) as u32).collect();
                    let p = AttachmentPattern::new(t, n, &edges, att).map_err(|e| e.to_string())?;
                    let forced = finite(&compute_profile(&p).map_err(|e| e.to_string())?);
                    let literal = literal_pattern_profile(&p);
                    if forced != literal {
                        return Err(format!("{p}: {forced:?} vs {literal:?}"));
                    }
                }
                Ok(codes as usize)
            })
            .collect();
        for c in counts {
            checked += c?;
        }
    }
    Ok(checked)
}

pub fn check_forcing_profiles() -> Check {
    let a = forcing_on_boundaried_graphs()?;
    let b = forcing_on_attachment_patterns()?;
    Ok(format!("{a} boundaried graphs and {b} attachment patterns"))
}

// ---------------------------------------------------------------- report

pub type Criterion = (&'static str, fn() -> Check);

pub const CRITERIA: [Criterion; 9] = [
    ("oracle safeness of every rule", check_oracle_safeness),
    ("kernel size bounds", check_kernel_bounds),
    (
        "minimum-degree postcondition",
        check_min_degree_postcondition,
    ),
    ("branching factor table", check_branching_factors),
    ("degree-four profile tables", check_profile_tables),
    (
        "zero-equivalence of the replacements",
        check_zero_equivalence,
    ),
    ("rediscovery of the replacements", check_rediscovery),
    ("end-to-end lifting", check_end_to_end_lifting),
    (
        "forcing profiles equal literal profiles",
        check_forcing_profiles,
    ),
];
