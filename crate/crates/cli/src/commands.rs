//! The three subcommands, independent of argument parsing.

use std::fmt;
use std::fs;
use std::io::{self, Read};
use std::path::{Path, PathBuf};
use std::time::Instant;

use vckernel::classic::solve_lp_half_integral;
use vckernel::corpus::{random_occurrence, seeded_rng};
use vckernel::dimacs::{parse_dimacs_str, write_dimacs_with_map};
use vckernel::profile::{
    compute_profile, discover_replacements, estimate_candidates, swap_equivalent,
    AttachmentPattern, Certificate, DiscoverOptions, SearchSpace,
};
use vckernel::solver::{branch_solve, brute_force_vc, Decision};
use vckernel::{
    lift_solution, Error, Graph, Instance, KernelOutcome, Pipeline, RuleTag, VertexSet,
};

use crate::report::{Command, KernelBound, KernelStats, RunReport, Verdict};

/// Why a command stopped, mapped to the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    /// Bad flags, unreadable files, or requests the library refuses.
    Usage(String),
    /// Malformed input file.
    Parse(String),
    /// A checked invariant failed.
    Internal(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Parse(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "usage error: {m}"),
            Failure::Parse(m) => write!(f, "parse error: {m}"),
            Failure::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidArgument(_) | Error::CapExceeded { .. } => Failure::Usage(e.to_string()),
            _ => Failure::Internal(e.to_string()),
        }
    }
}

fn read_text(path: &Path) -> Result<String, Failure> {
    if path == Path::new("-") {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    parse_dimacs_str(&read_text(path)?)
        .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))
}

fn ms(since: Instant) -> f64 {
    since.elapsed().as_secs_f64() * 1e3
}

fn labels(cover: &VertexSet) -> Vec<u32> {
    cover.iter().map(|v| v.raw() + 1).collect()
}

fn rule_counts(outcome: &KernelOutcome) -> std::collections::BTreeMap<String, usize> {
    RuleTag::ALL
        .into_iter()
        .map(|t| (t.name().to_string(), outcome.trace().count(t)))
        .filter(|(_, c)| *c > 0)
        .collect()
}

fn bound_for(p: Pipeline, k: usize) -> KernelBound {
    match p {
        Pipeline::Buss => KernelBound::Buss {
            max_vertices: k * k + k,
            max_edges: k * k,
        },
        Pipeline::Crown => KernelBound::Crown {
            max_vertices: 3 * k,
        },
        Pipeline::Lp => KernelBound::Lp {
            max_vertices: 2 * k,
        },
        Pipeline::MinDegree => KernelBound::MinDegree {
            min_degree: 4,
            max_neighborhood_edges: 2,
        },
        Pipeline::MinDegreeAuto | Pipeline::All => KernelBound::MinDegree {
            min_degree: 4,
            max_neighborhood_edges: 1,
        },
    }
}

/// Records the outcome in `report` and checks the kernel against the
/// pipeline's bound.
fn record_outcome(
    report: &mut RunReport,
    p: Pipeline,
    outcome: &KernelOutcome,
) -> Result<(), Failure> {
    report.rules = rule_counts(outcome);
    match outcome {
        KernelOutcome::No { rule, .. } => {
            report.verdict = Verdict::No;
            report.rejected_by = Some(rule.name().to_string());
        }
        KernelOutcome::Yes(r) | KernelOutcome::Reduced(r) => {
            let g = &r.instance.graph;
            let bound = bound_for(p, r.instance.budget);
            let ok = if outcome.is_yes() {
                g.is_edgeless()
            } else {
                bound.holds(g)
            };
            if !ok {
                return Err(Failure::Internal(format!(
                    "{p} kernel violates its bound {bound:?}"
                )));
            }
            report.verdict = if outcome.is_yes() {
                Verdict::Yes
            } else {
                Verdict::Kernel
            };
            report.kernel = Some(KernelStats {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                budget: r.instance.budget,
                bound,
            });
        }
    }
    Ok(())
}

pub struct KernelizeArgs {
    pub input: PathBuf,
    pub pipeline: Pipeline,
    pub k: Option<usize>,
    pub out: Option<PathBuf>,
    pub trace: Option<PathBuf>,
}

pub fn kernelize(args: &KernelizeArgs) -> Result<RunReport, Failure> {
    let k = args
        .k
        .ok_or_else(|| Failure::Usage(format!("pipeline {} needs a budget (-k)", args.pipeline)))?;
    let start = Instant::now();
    let g = read_graph(&args.input)?;
    let mut report = RunReport::new(Command::Kernelize, &g, Some(k));
    report.pipeline = Some(args.pipeline.to_string());
    report.timings_ms.parse = ms(start);

    let start = Instant::now();
    let outcome = args.pipeline.run(Instance::new(g, k))?;
    report.timings_ms.kernelize = ms(start);
    record_outcome(&mut report, args.pipeline, &outcome)?;

    if let Some(path) = &args.out {
        let text = match outcome.instance() {
            Some(inst) => {
                let (body, order) = write_dimacs_with_map(&inst.graph);
                let mut text = format!(
                    "c kernel of {} with budget {}\n",
                    args.input.display(),
                    inst.budget
                );
                for (j, v) in order.iter().enumerate() {
                    text.push_str(&format!(
                        "c vertex {} is input vertex {}\n",
                        j + 1,
                        v.raw() + 1
                    ));
                }
                text + &body
            }
            None => "c no kernel: the instance was rejected\np edge 0 0\n".to_string(),
        };
        write_text(path, &text)?;
    }
    if let Some(path) = &args.trace {
        write_text(path, &outcome.trace().to_log())?;
    }
    Ok(report)
}

pub struct SolveArgs {
    pub input: PathBuf,
    pub k: Option<usize>,
    pub no_kernel: bool,
}

struct Attempt {
    cover: Option<VertexSet>,
    nodes: u64,
    outcome: Option<KernelOutcome>,
    kernelize_ms: f64,
    solve_ms: f64,
    lift_ms: f64,
}

/// Decides `(g, k)`: with kernelization, the full pipeline runs first, the
/// kernel is searched (reducing again at every node) and the cover lifted.
fn attempt(g: &Graph, k: usize, kernelize: bool) -> Result<Attempt, Failure> {
    if !kernelize {
        let start = Instant::now();
        let d = branch_solve(&Instance::new(g.clone(), k), false)?;
        let solve_ms = ms(start);
        let (cover, nodes) = match d {
            Decision::Yes { cover, nodes } => (Some(cover), nodes),
            Decision::No { nodes } => (None, nodes),
        };
        return Ok(Attempt {
            cover,
            nodes,
            outcome: None,
            kernelize_ms: 0.0,
            solve_ms,
            lift_ms: 0.0,
        });
    }
    let start = Instant::now();
    let outcome = Pipeline::All.run(Instance::new(g.clone(), k))?;
    let kernelize_ms = ms(start);
    let Some(red) = outcome.reduction() else {
        return Ok(Attempt {
            cover: None,
            nodes: 0,
            outcome: Some(outcome),
            kernelize_ms,
            solve_ms: 0.0,
            lift_ms: 0.0,
        });
    };
    let start = Instant::now();
    let d = branch_solve(&red.instance, true)?;
    let solve_ms = ms(start);
    let start = Instant::now();
    let (cover, nodes) = match d {
        Decision::Yes { cover, nodes } => (
            Some(lift_solution(&red.trace, &red.instance.graph, &cover)?),
            nodes,
        ),
        Decision::No { nodes } => (None, nodes),
    };
    Ok(Attempt {
        cover,
        nodes,
        kernelize_ms,
        solve_ms,
        lift_ms: ms(start),
        outcome: Some(outcome),
    })
}

pub fn solve(args: &SolveArgs) -> Result<RunReport, Failure> {
    let start = Instant::now();
    let g = read_graph(&args.input)?;
    let mut report = RunReport::new(Command::Solve, &g, args.k);
    report.kernelization = !args.no_kernel;
    if !args.no_kernel {
        report.pipeline = Some(Pipeline::All.to_string());
    }
    report.timings_ms.parse = ms(start);

    // Without a budget, budgets are tried upward from the LP lower bound.
    let budgets: Box<dyn Iterator<Item = usize>> = match args.k {
        Some(k) => Box::new(std::iter::once(k)),
        None => {
            Box::new(solve_lp_half_integral(&g).objective_halves.div_ceil(2)..=g.vertex_count())
        }
    };
    let mut nodes = 0;
    let mut last = None;
    for k in budgets {
        let a = attempt(&g, k, !args.no_kernel)?;
        nodes += a.nodes;
        report.timings_ms.kernelize += a.kernelize_ms;
        report.timings_ms.solve += a.solve_ms;
        report.timings_ms.lift += a.lift_ms;
        let done = a.cover.is_some();
        last = Some((k, a));
        if done {
            break;
        }
    }
    let (k, a) = last.ok_or_else(|| Failure::Internal("no budget was tried".into()))?;
    report.search_nodes = Some(nodes);
    if let Some(outcome) = &a.outcome {
        record_outcome(&mut report, Pipeline::All, outcome)?;
    }
    match a.cover {
        Some(cover) => {
            if !g.is_vertex_cover(&cover) || cover.len() > k {
                return Err(Failure::Internal(format!(
                    "witness of size {} does not check out",
                    cover.len()
                )));
            }
            report.verdict = Verdict::Yes;
            if args.k.is_none() {
                report.optimum = Some(cover.len());
            }
            report.cover = Some(labels(&cover));
        }
        None => {
            if args.k.is_none() {
                return Err(Failure::Internal("no cover found at any budget".into()));
            }
            report.verdict = Verdict::No;
        }
    }
    Ok(report)
}

/// Source of the target profile for `discover`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PatternSource {
    DegreeFourDisjoint,
    DegreeFourPath,
    File(PathBuf),
}

impl std::str::FromStr for PatternSource {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "deg4-disjoint" => Ok(PatternSource::DegreeFourDisjoint),
            "deg4-path" => Ok(PatternSource::DegreeFourPath),
            _ => match s.strip_prefix("file:") {
                Some(p) if !p.is_empty() => Ok(PatternSource::File(PathBuf::from(p))),
                _ => Err(format!(
                    "expected deg4-disjoint, deg4-path or file:<path>, got `{s}`"
                )),
            },
        }
    }
}

pub struct DiscoverArgs {
    pub pattern: PatternSource,
    pub n: usize,
    pub t: Option<usize>,
    pub space: SearchSpace,
    pub limit: u128,
    pub exact: bool,
    pub verify: bool,
    pub hosts: usize,
    pub seed: u64,
}

/// Checks a certificate by recomputing its profile, then swaps it into
/// random hosts and compares optima by brute force.
fn verify_certificate(
    source: &AttachmentPattern,
    cert: &Certificate,
    hosts: usize,
    seed: u64,
) -> Result<(), Failure> {
    cert.verify()
        .map_err(|e| Failure::Internal(e.to_string()))?;
    let mut rng = seeded_rng(seed);
    for h in 0..hosts {
        let (host, occ) = random_occurrence(source, h % 8, &mut rng);
        let vc = brute_force_vc(&host)?.optimum;
        let k = vc.max(cert.offset as usize);
        let swapped = swap_equivalent(&host, source, &occ, &cert.pattern, cert.offset, k)?;
        let after = brute_force_vc(&swapped.graph)?.optimum;
        if after + cert.offset as usize != vc {
            return Err(Failure::Internal(format!(
                "host {h}: optimum {vc} became {after} with offset {}",
                cert.offset
            )));
        }
    }
    Ok(())
}

/// Returns the certificate stream as text.
pub fn discover(args: &DiscoverArgs) -> Result<String, Failure> {
    let source = match &args.pattern {
        PatternSource::DegreeFourDisjoint => AttachmentPattern::degree_four_disjoint(),
        PatternSource::DegreeFourPath => AttachmentPattern::degree_four_wedge(),
        PatternSource::File(path) => read_text(path)?
            .parse::<AttachmentPattern>()
            .map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?,
    };
    if let Some(t) = args.t {
        if t != source.t() {
            return Err(Failure::Usage(format!(
                "--t {t} but the pattern has {} interfaces",
                source.t()
            )));
        }
    }
    let target = compute_profile(&source)?;
    let estimate = estimate_candidates(args.n, source.t(), args.space);
    let opts = DiscoverOptions {
        n: args.n,
        space: args.space,
        limit: args.limit,
        allow_offset: !args.exact,
    };
    let start = Instant::now();
    let found = discover_replacements(&target, &opts)?;
    let mut out = format!(
        "# target {target}\n# n {} t {} candidates {estimate} found {} in {:.2}s\n",
        args.n,
        source.t(),
        found.len(),
        start.elapsed().as_secs_f64()
    );
    for (i, d) in found.into_iter().enumerate() {
        let cert = Certificate {
            target: target.clone(),
            offset: d.offset,
            pattern: d.pattern,
        };
        out.push_str(&cert.to_string());
        if args.verify {
            verify_certificate(&source, &cert, args.hosts, args.seed.wrapping_add(i as u64))?;
            out.push_str(&format!(
                "# verified: profile recomputed, {} random hosts agree\n",
                args.hosts
            ));
        }
    }
    Ok(out)
}
