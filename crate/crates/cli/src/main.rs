//! `hitset`: instance generation, hitting sets, asymptotic-dimension
//! witnesses, template classification, homomorphism solving and LOCAL
//! simulation from one command.
//!
//! Every report is JSON on standard output (or `--output`), with a one-line
//! summary on standard error. Exit status is 0 on pass or present, 1 on fail
//! or absent, 2 on usage or input errors.

mod input;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use hitset_core::asdim::asdim_leq_one_pipeline;
use hitset_core::graph::{gen_path, gen_random_forest, gen_random_total};
use hitset_core::hitting::{
    dr_edge_violations, greedy_hitting, hitting_from_hom, hom_from_hitting, verify_hitting_set,
    DrLabeling,
};
use hitset_core::hom::{decide_hom_finite, hom_violations, solve_loop, solve_with_plan, ErgodicPlan};
use hitset_core::local::{self, log_star, members_of, AlgorithmId, IdAssignment, Network};
use hitset_core::shift::{dense_interval_witness, dominated_window_pairs, gen_increasing, verify_phi_hom};
use hitset_core::{AbstractWalk, FunctionalGraph, TemplateClass};

use input::CliError;

#[derive(Parser)]
#[command(name = "hitset", version, about = "Hitting sets, homomorphisms and LOCAL simulation on functional graphs")]
struct Cli {
    /// Seed for every random choice; echoed in each report.
    #[arg(long, global = true, env = "HITSET_SEED", default_value_t = 0)]
    seed: u64,
    /// Write the JSON report to this file instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// No summary on standard error.
    #[arg(long, short, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a functional graph as JSON (or DOT).
    Gen {
        #[command(flatten)]
        spec: Generated,
        #[arg(long)]
        dot: bool,
    },
    /// Greedy r-forward-independent hitting set, verified.
    Hit {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
    },
    /// Hitting set to D_r labeling and back, or a labeling file to a hitting set.
    Drhom {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        /// JSON array of labels (null where unlabeled) to convert instead.
        #[arg(long)]
        labels: Option<PathBuf>,
    },
    /// Hitting set -> cover and relation witnesses -> hitting sets, for each t.
    Asdim {
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, value_delimiter = ',', default_value = "1", value_parser = clap::value_parser!(u64).range(1..))]
        t: Vec<u64>,
    },
    /// Loop / ergodic without loop / non-ergodic.
    Classify {
        #[arg(long)]
        template: PathBuf,
    },
    /// The digraph H^p of a walk pattern p over {f, b}.
    Power {
        #[arg(long)]
        template: PathBuf,
        #[arg(long)]
        walk: String,
        #[arg(long)]
        dot: bool,
    },
    /// Decide or construct a homomorphism from a graph to a template.
    Hom {
        #[arg(long)]
        template: PathBuf,
        #[command(flatten)]
        graph: GraphSource,
        #[arg(long, value_enum, default_value = "decide")]
        mode: HomMode,
    },
    /// Check the shift labeling against sampled dominated sequences.
    Shift {
        /// JSON array of increasing integers; generated from the seed otherwise.
        #[arg(long)]
        x: Option<PathBuf>,
        /// Length of a generated x (default 20r² + 5).
        #[arg(long)]
        len: Option<usize>,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        r: u64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
    },
    /// Run a LOCAL algorithm on oriented paths.
    Local {
        /// constant, echo, ruling-set or solve-pi-h.
        #[arg(long)]
        algorithm: String,
        #[arg(long, default_value_t = 1000)]
        n: usize,
        /// Comma-separated path lengths, instead of one path of length n.
        #[arg(long, value_delimiter = ',')]
        paths: Option<Vec<usize>>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        template: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "random")]
        ids: Ids,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
        /// Extra runs in random node orders, compared with the first.
        #[arg(long, default_value_t = 0)]
        schedules: u64,
        /// Include every node's output in the report.
        #[arg(long)]
        outputs: bool,
    },
}

#[derive(Args)]
struct Generated {
    #[arg(long, value_enum, default_value = "forest")]
    kind: Kind,
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    n: u64,
}

#[derive(Args)]
struct GraphSource {
    /// Graph file {"n": .., "succ": [..]} (-1 for no successor); generated otherwise.
    #[arg(long)]
    graph: Option<PathBuf>,
    #[command(flatten)]
    generated: Generated,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Path,
    Forest,
    Total,
}

#[derive(Clone, Copy, ValueEnum)]
enum HomMode {
    /// Exact decision on the finite graph.
    Decide,
    /// The uniform construction for the template's class.
    Solve,
}

#[derive(Clone, Copy, ValueEnum)]
enum Ids {
    Sequential,
    Descending,
    Random,
}

impl From<Ids> for IdAssignment {
    fn from(i: Ids) -> Self {
        match i {
            Ids::Sequential => IdAssignment::Sequential,
            Ids::Descending => IdAssignment::Descending,
            Ids::Random => IdAssignment::Random,
        }
    }
}

fn generate(spec: &Generated, seed: u64) -> FunctionalGraph {
    let n = spec.n as usize;
    match spec.kind {
        Kind::Path => gen_path(n),
        Kind::Forest => gen_random_forest(n, seed),
        Kind::Total => gen_random_total(n, seed),
    }
}

fn load(src: &GraphSource, seed: u64) -> Result<FunctionalGraph, CliError> {
    match &src.graph {
        Some(path) => input::graph(path),
        None => Ok(generate(&src.generated, seed)),
    }
}

/// Report body, summary line, and whether the run passed.
struct Outcome {
    report: Value,
    summary: String,
    pass: bool,
}

fn raw(text: String, summary: String) -> Outcome {
    Outcome { report: Value::String(text), summary, pass: true }
}

fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let seed = cli.seed;
    match &cli.command {
        Command::Gen { spec, dot } => {
            let g = generate(spec, seed);
            let text = if *dot { g.to_dot() } else { g.to_json() };
            Ok(raw(text, format!("generated {} vertices (seed {seed})", g.len())))
        }
        Command::Hit { graph, r } => {
            let g = load(graph, seed)?;
            let h = greedy_hitting(&g, *r as usize)?;
            let rep = verify_hitting_set(&g, &h);
            Ok(Outcome {
                summary: format!(
                    "{} members for r = {r} on {} vertices, horizon {:?}: {}",
                    h.members.len(),
                    g.len(),
                    h.horizon,
                    if rep.valid { "valid" } else { "INVALID" }
                ),
                pass: rep.valid,
                report: json!({ "seed": seed, "n": g.len(), "hitting_set": h, "report": rep }),
            })
        }
        Command::Drhom { graph, r, labels } => {
            let g = load(graph, seed)?;
            let r = *r as usize;
            match labels {
                Some(path) => {
                    let phi = DrLabeling(input::labels(path)?);
                    let h = hitting_from_hom(&g, &phi, r)?;
                    let rep = verify_hitting_set(&g, &h);
                    Ok(Outcome {
                        summary: format!("labeling gives {} members: {}", h.members.len(), if rep.valid { "valid" } else { "INVALID" }),
                        pass: rep.valid,
                        report: json!({ "seed": seed, "hitting_set": h, "report": rep }),
                    })
                }
                None => {
                    let h = greedy_hitting(&g, r)?;
                    let phi = hom_from_hitting(&g, &h);
                    let bad = dr_edge_violations(&g, &phi, r);
                    let back = hitting_from_hom(&g, &phi, r)?;
                    let round_trip = back.members == h.members;
                    Ok(Outcome {
                        summary: format!("{} edge violations, round trip {}", bad.len(), if round_trip { "exact" } else { "BROKEN" }),
                        pass: bad.is_empty() && round_trip,
                        report: json!({
                            "seed": seed,
                            "r": r,
                            "labels": phi,
                            "edge_violations": bad,
                            "round_trip": round_trip,
                        }),
                    })
                }
            }
        }
        Command::Asdim { graph, t } => {
            let g = load(graph, seed)?;
            let ts: Vec<usize> = t.iter().map(|&t| t as usize).collect();
            let rep = asdim_leq_one_pipeline(&g, &ts)?;
            let diameters: Vec<String> = rep
                .steps
                .iter()
                .map(|s| {
                    let cover = s.cover.max_diameter.iter().max().copied().unwrap_or(0);
                    format!("t={}: cover diameter {cover} (bound {})", s.t, s.cover.bound)
                })
                .collect();
            Ok(Outcome {
                summary: format!("{}; {}", diameters.join(", "), if rep.passed { "passed" } else { "FAILED" }),
                pass: rep.passed,
                report: json!({ "seed": seed, "pipeline": rep }),
            })
        }
        Command::Classify { template } => {
            let h = input::template(template)?;
            let class = h.classify().map_err(|e| CliError(format!("{}: {e}", template.display())))?;
            let witness = h.is_ergodic();
            let ell0 = match class {
                TemplateClass::ErgodicNoLoop => Some(ErgodicPlan::new(&h)?.ell0),
                _ => None,
            };
            Ok(Outcome {
                summary: format!("{class:?}"),
                pass: true,
                report: json!({ "class": class, "ergodic_witness": witness, "ell0": ell0 }),
            })
        }
        Command::Power { template, walk, dot } => {
            let h = input::template(template)?;
            let w: AbstractWalk = walk.parse()?;
            let p = h.power_walk(&w);
            let summary = format!("H^{w} has {} edges", p.edge_count());
            Ok(raw(if *dot { p.to_dot() } else { p.to_json() }, summary))
        }
        Command::Hom { template, graph, mode } => {
            let h = input::template(template)?;
            let g = load(graph, seed)?;
            match mode {
                HomMode::Decide => {
                    let psi = decide_hom_finite(&g, &h);
                    Ok(Outcome {
                        summary: if psi.is_some() { "present".into() } else { "absent".into() },
                        pass: psi.is_some(),
                        report: json!({ "seed": seed, "present": psi.is_some(), "homomorphism": psi }),
                    })
                }
                HomMode::Solve => solve(&g, &h, seed),
            }
        }
        Command::Shift { x, len, r, samples } => {
            let r = *r as usize;
            let x = match x {
                Some(path) => input::sequence(path)?,
                None => gen_increasing(len.unwrap_or(20 * r * r + 5), 5, seed)?,
            };
            let ys = dominated_window_pairs(&x, *samples, seed);
            let rep = verify_phi_hom(&x, &ys, r);
            let missing: Vec<usize> = (0..ys.len())
                .filter(|&i| dense_interval_witness(&x, &ys[i], r).is_none())
                .collect();
            let pass = rep.violations.is_empty() && missing.is_empty();
            Ok(Outcome {
                summary: format!(
                    "{} of {} pairs decided, {} violations, {} without witness",
                    rep.checked,
                    rep.pairs,
                    rep.violations.len(),
                    missing.len()
                ),
                pass,
                report: json!({
                    "seed": seed,
                    "window": x.len(),
                    "phi": rep,
                    "witnesses_found": ys.len() - missing.len(),
                    "witnesses_missing": missing,
                }),
            })
        }
        Command::Local { algorithm, n, paths, r, template, ids, cap, schedules, outputs } => {
            let template = template.as_deref().map(input::template).transpose()?;
            let alg = AlgorithmId::lookup(algorithm, *r, template)?;
            let lengths = paths.clone().unwrap_or_else(|| vec![*n]);
            let net = Network::paths(&lengths, (*ids).into(), seed)?;
            simulate(&alg, &net, *cap, *schedules, *outputs, seed)
        }
    }
}

fn solve(g: &FunctionalGraph, h: &hitset_core::Digraph, seed: u64) -> Result<Outcome, CliError> {
    let class = h.classify()?;
    let (method, psi) = match class {
        TemplateClass::Loop => ("constant", solve_loop(g, h)?),
        TemplateClass::ErgodicNoLoop => {
            let plan = ErgodicPlan::new(h)?;
            let a = greedy_hitting(g, plan.ell0)?;
            ("ergodic", solve_with_plan(g, &plan, &a.members)?)
        }
        TemplateClass::NonErgodic => match decide_hom_finite(g, h) {
            Some(psi) => ("exact", psi),
            None => {
                return Ok(Outcome {
                    summary: "absent".into(),
                    pass: false,
                    report: json!({ "seed": seed, "class": class, "method": "exact", "present": false }),
                })
            }
        },
    };
    let bad = hom_violations(g, &psi, h);
    Ok(Outcome {
        summary: format!("{method}: {} of {} labeled, {} violations", psi.labeled(), g.len(), bad.len()),
        pass: bad.is_empty(),
        report: json!({
            "seed": seed,
            "class": class,
            "method": method,
            "labeled": psi.labeled(),
            "violations": bad,
            "homomorphism": psi,
        }),
    })
}

fn simulate(
    alg: &AlgorithmId,
    net: &Network,
    cap: usize,
    schedules: u64,
    with_outputs: bool,
    seed: u64,
) -> Result<Outcome, CliError> {
    let trace = local::run(alg, net, cap, None)?;
    let mut schedule_independent = true;
    for k in 0..schedules {
        let other = local::run(alg, net, cap, Some(seed.wrapping_add(k + 1)))?;
        schedule_independent &= other.outputs == trace.outputs;
    }
    let g = net.to_graph();
    let violations: Vec<Value> = match alg {
        AlgorithmId::Constant => (0..net.len())
            .filter(|&v| trace.outputs[v] != Some(net.id(v)))
            .map(|v| json!(v))
            .collect(),
        AlgorithmId::Echo => (0..net.len())
            .filter(|&v| trace.outputs[v] != net.succ(v).map(|s| net.id(s)))
            .map(|v| json!(v))
            .collect(),
        AlgorithmId::RulingSet { r } => {
            let h = hitset_core::hitting::HittingSet::new(*r, Some(r + 1), members_of(&trace));
            verify_hitting_set(&g, &h).violations.iter().map(|v| json!(v)).collect()
        }
        AlgorithmId::SolvePiH { template } => {
            let labels = hitset_core::hom::Homomorphism(
                trace.outputs.iter().map(|o| o.map(|v| v as usize)).collect(),
            );
            hom_violations(&g, &labels, template).iter().map(|e| json!(e)).collect()
        }
    };
    let valid = violations.is_empty();
    let pass = valid && schedule_independent;
    let mut report = json!({
        "seed": seed,
        "algorithm": trace.algorithm,
        "n": net.len(),
        "id_space": net.id_space(),
        "log_star_id_space": log_star(net.id_space()),
        "rounds": trace.rounds,
        "valid": valid,
        "violations": violations,
        "schedules_compared": schedules,
        "schedule_independent": schedule_independent,
    });
    if let AlgorithmId::RulingSet { .. } = alg {
        report["members"] = json!(members_of(&trace).len());
    }
    if with_outputs {
        report["outputs"] = json!(trace.outputs);
    }
    Ok(Outcome {
        summary: format!(
            "{} on {} nodes: {} rounds, {}",
            trace.algorithm,
            net.len(),
            trace.rounds,
            if pass { "valid" } else { "FAILED" }
        ),
        pass,
        report,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            let mut text = match &out.report {
                Value::String(s) => s.clone(),
                v => serde_json::to_string_pretty(v).expect("reports serialize"),
            };
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match &cli.output {
                Some(path) => {
                    if let Err(e) = fs::write(path, &text) {
                        eprintln!("error: {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if !cli.quiet {
                eprintln!("{} [seed {}]", out.summary, cli.seed);
            }
            ExitCode::from(if out.pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
