mod report;

use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};
use maxclique::community::{covers_from_labeled, k_clique_communities, omega_index, parse_communities, parse_memberships};
use maxclique::generators::{generate_hamming, generate_johnson};
use maxclique::io::{read_graph, write_graph, GraphFormat, LoadedGraph};
use maxclique::oracle::{brute_force_max_clique, enumerate_maximal_cliques};
use maxclique::{
    max_clique_heuristic, rmat_generate, run_parallel, Algorithm, CliqueResult, CsrGraph,
    ExactSolver, ParallelConfig, RmatParams, SelectionPolicy,
};
use serde::Serialize;

use report::{table, CommunityReport, EnumerationReport, GenerateReport, GraphStats, OmegaReport, RunReport};

#[derive(Parser)]
#[command(name = "maxclique", version, about = "Maximum clique solvers, graph generators and clique-based communities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact maximum clique (branch and bound).
    Exact {
        #[command(flatten)]
        input: InputArgs,
        /// Only cliques larger than this are reported.
        #[arg(long, default_value_t = 0)]
        lb: usize,
        #[arg(long)]
        json: bool,
    },
    /// Greedy maximum clique heuristic.
    Heuristic {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        policy: PolicyArgs,
        /// Number of runs with consecutive seeds; the best result is kept.
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        restarts: u64,
        #[arg(long)]
        json: bool,
    },
    /// Multi-threaded solver sharing one incumbent bound.
    Parallel {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = AlgorithmArg::Exact)]
        algorithm: AlgorithmArg,
        #[command(flatten)]
        policy: PolicyArgs,
        /// Worker threads (defaults to the available parallelism).
        #[arg(long)]
        workers: Option<usize>,
        /// Root vertices claimed per scheduling step.
        #[arg(long, default_value_t = maxclique::parallel::DEFAULT_CHUNK)]
        chunk: usize,
        #[arg(long, default_value_t = 0)]
        lb: usize,
        #[arg(long)]
        json: bool,
    },
    /// Graph generators.
    #[command(subcommand)]
    Gen(GenCommand),
    /// Overlapping communities from percolating k-cliques.
    Communities {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        /// Random clique probes per vertex, in addition to the max-degree probe.
        #[arg(long, default_value_t = 10)]
        c: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file, one community per line.
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Omega index between two overlapping covers.
    Omega {
        #[arg(long)]
        truth: PathBuf,
        #[arg(long)]
        found: PathBuf,
        /// Number of nodes in the shared universe.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = CoverFormat::Communities)]
        truth_format: CoverFormat,
        #[arg(long, value_enum, default_value_t = CoverFormat::Communities)]
        found_format: CoverFormat,
        #[arg(long)]
        json: bool,
    },
    /// Slow reference computations for small graphs.
    Oracle {
        #[command(flatten)]
        input: InputArgs,
        /// List every maximal clique instead of the maximum one.
        #[arg(long)]
        enumerate: bool,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum GenCommand {
    /// Recursive-matrix random graph.
    Rmat {
        /// Quadrant probabilities `a,b,c,d`.
        #[arg(long, value_parser = parse_quadrants)]
        params: [f64; 4],
        #[arg(long)]
        scale: u32,
        /// Number of edge samples.
        #[arg(long)]
        edges: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Binary words of length `bits`, adjacent when at Hamming distance >= `distance`.
    Hamming {
        #[arg(long)]
        bits: u32,
        #[arg(long)]
        distance: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Weight-`weight` subsets of `set`, adjacent when their symmetric difference is >= `distance`.
    Johnson {
        #[arg(long)]
        set: u32,
        #[arg(long)]
        weight: u32,
        #[arg(long)]
        distance: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Graph file (`.clq` is read as DIMACS, anything else as an edge list).
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct PolicyArgs {
    #[arg(long, value_enum, default_value_t = PolicyArg::MaxDegree)]
    policy: PolicyArg,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dimacs,
    Edges,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    MaxDegree,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum AlgorithmArg {
    Exact,
    Heuristic,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoverFormat {
    /// One community per line.
    Communities,
    /// `node community...` per line.
    Membership,
}

impl From<FormatArg> for GraphFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Dimacs => GraphFormat::Dimacs,
            FormatArg::Edges => GraphFormat::EdgeList,
        }
    }
}

impl PolicyArgs {
    fn policy(&self, seed: u64) -> SelectionPolicy {
        match self.policy {
            PolicyArg::MaxDegree => SelectionPolicy::MaxDegree,
            PolicyArg::Random => SelectionPolicy::RandomNeighbor { seed },
        }
    }

    fn seeds(&self) -> Vec<u64> {
        match self.policy {
            PolicyArg::MaxDegree => Vec::new(),
            PolicyArg::Random => vec![self.seed],
        }
    }
}

fn parse_quadrants(s: &str) -> Result<[f64; 4], String> {
    let values = s
        .split(',')
        .map(|t| t.trim().parse::<f64>().map_err(|_| format!("invalid probability {t:?}")))
        .collect::<Result<Vec<_>, _>>()?;
    values
        .try_into()
        .map_err(|v: Vec<f64>| format!("expected four values a,b,c,d, got {}", v.len()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn command_echo() -> String {
    std::env::args().skip(1).collect::<Vec<_>>().join(" ")
}

fn load(input: &InputArgs) -> anyhow::Result<LoadedGraph> {
    read_graph(&input.input, input.format.map(Into::into))
        .with_context(|| format!("reading {}", input.input.display()))
}

fn emit<T: Serialize>(report: &T, json: bool, human: impl FnOnce() -> String) -> anyhow::Result<()> {
    let text = if json {
        serde_json::to_string(report)? + "\n"
    } else {
        human()
    };
    let mut stdout = std::io::stdout().lock();
    stdout.write_all(text.as_bytes())?;
    Ok(())
}

fn emit_run(report: RunReport, json: bool) -> anyhow::Result<()> {
    emit(&report, json, || report.to_table())
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let command = command_echo();
    match cli.command {
        Command::Exact { input, lb, json } => {
            let loaded = load(&input)?;
            let result = ExactSolver::new(&loaded.graph).lower_bound(lb).run();
            emit_run(RunReport::new(command, &loaded, &result, Vec::new(), 1), json)
        }
        Command::Heuristic { input, policy, restarts, json } => {
            let loaded = load(&input)?;
            let seeds: Vec<u64> = match policy.policy {
                PolicyArg::MaxDegree => Vec::new(),
                PolicyArg::Random => (0..restarts).map(|i| policy.seed.wrapping_add(i)).collect(),
            };
            let result = if seeds.is_empty() {
                max_clique_heuristic(&loaded.graph, SelectionPolicy::MaxDegree)
            } else {
                best_of(seeds.iter().map(|&s| max_clique_heuristic(&loaded.graph, policy.policy(s))))
            };
            emit_run(RunReport::new(command, &loaded, &result, seeds, 1), json)
        }
        Command::Parallel { input, algorithm, policy, workers, chunk, lb, json } => {
            let loaded = load(&input)?;
            let mut cfg = ParallelConfig { chunk, lb, ..ParallelConfig::default() };
            if let Some(w) = workers {
                cfg.workers = w;
            }
            let (algorithm, seeds) = match algorithm {
                AlgorithmArg::Exact => (Algorithm::Exact, Vec::new()),
                AlgorithmArg::Heuristic => (Algorithm::Heuristic(policy.policy(policy.seed)), policy.seeds()),
            };
            let result = run_parallel(&loaded.graph, &cfg, algorithm, None)?;
            emit_run(RunReport::new(command, &loaded, &result, seeds, cfg.workers), json)
        }
        Command::Oracle { input, enumerate, json } => {
            let loaded = load(&input)?;
            if enumerate {
                let cliques = enumerate_maximal_cliques(&loaded.graph)?;
                let report = EnumerationReport {
                    command,
                    graph: GraphStats::of(&loaded.graph),
                    maximal_cliques: cliques.cliques().iter().map(|c| loaded.labels_of(c)).collect(),
                };
                emit(&report, json, || {
                    report
                        .maximal_cliques
                        .iter()
                        .map(|c| c.iter().map(u64::to_string).collect::<Vec<_>>().join(" ") + "\n")
                        .collect()
                })
            } else {
                let result = brute_force_max_clique(&loaded.graph)?;
                emit_run(RunReport::new(command, &loaded, &result, Vec::new(), 1), json)
            }
        }
        Command::Gen(gen) => run_gen(command, gen),
        Command::Communities { input, k, c, seed, out, json } => {
            let loaded = load(&input)?;
            let start = Instant::now();
            let found = k_clique_communities(&loaded.graph, k, c, seed)?;
            let elapsed = start.elapsed();
            let file = File::create(&out).with_context(|| format!("creating {}", out.display()))?;
            let mut writer = BufWriter::new(file);
            found.write(&loaded.labels, &mut writer)?;
            writer.flush()?;
            let report = CommunityReport {
                command,
                graph: GraphStats::of(&loaded.graph),
                k,
                c,
                seed,
                communities: found.len(),
                shared_nodes: found.shared_nodes,
                output: out.display().to_string(),
                elapsed_seconds: elapsed.as_secs_f64(),
            };
            emit(&report, json, || {
                table(&[
                    ("command", report.command.clone()),
                    ("vertices", report.graph.n.to_string()),
                    ("edges", report.graph.m.to_string()),
                    ("max degree", report.graph.max_degree.to_string()),
                    ("k c seed", format!("{} {} {}", k, c, seed)),
                    ("communities", report.communities.to_string()),
                    ("shared nodes", report.shared_nodes.to_string()),
                    ("output", report.output.clone()),
                    ("elapsed (s)", format!("{:.6}", report.elapsed_seconds)),
                ])
            })
        }
        Command::Omega { truth, found, n, truth_format, found_format, json } => {
            let a = read_cover(&truth, truth_format)?;
            let b = read_cover(&found, found_format)?;
            let (ca, cb) = covers_from_labeled(n, &a, &b)?;
            let omega = omega_index(&ca, &cb)?;
            let report = OmegaReport { command, n, omega };
            emit(&report, json, || format!("{omega}\n"))
        }
    }
}

fn best_of(results: impl Iterator<Item = CliqueResult>) -> CliqueResult {
    let mut best: Option<CliqueResult> = None;
    let mut stats = maxclique::PruningStats::default();
    let mut elapsed = std::time::Duration::ZERO;
    let mut roots = 0;
    for r in results {
        stats += r.stats;
        elapsed += r.elapsed;
        roots += r.roots_expanded;
        if best.as_ref().is_none_or(|b| r.size > b.size) {
            best = Some(r);
        }
    }
    let mut best = best.expect("at least one run");
    best.stats = stats;
    best.elapsed = elapsed;
    best.roots_expanded = roots;
    best
}

fn read_cover(path: &Path, format: CoverFormat) -> anyhow::Result<Vec<Vec<u64>>> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    let reader = BufReader::new(file);
    let cover = match format {
        CoverFormat::Communities => parse_communities(reader),
        CoverFormat::Membership => parse_memberships(reader),
    };
    cover.with_context(|| format!("reading {}", path.display()))
}

fn run_gen(command: String, gen: GenCommand) -> anyhow::Result<()> {
    let (graph, seed, output): (CsrGraph, Option<u64>, OutputArgs) = match gen {
        GenCommand::Rmat { params, scale, edges, seed, output } => {
            let [a, b, c, d] = params;
            let p = RmatParams { a, b, c, d, scale, target_edges: edges, seed };
            (rmat_generate(&p)?, Some(seed), output)
        }
        GenCommand::Hamming { bits, distance, output } => (generate_hamming(bits, distance)?, None, output),
        GenCommand::Johnson { set, weight, distance, output } => {
            (generate_johnson(set, weight, distance)?, None, output)
        }
    };
    let format = output
        .format
        .map(Into::into)
        .unwrap_or_else(|| GraphFormat::from_path(&output.out));
    write_graph(&output.out, &graph, format).with_context(|| format!("writing {}", output.out.display()))?;
    let report = GenerateReport {
        command,
        graph: GraphStats::of(&graph),
        seed,
        output: output.out.display().to_string(),
    };
    emit(&report, output.json, || {
        table(&[
            ("command", report.command.clone()),
            ("vertices", report.graph.n.to_string()),
            ("edges", report.graph.m.to_string()),
            ("max degree", report.graph.max_degree.to_string()),
            ("seed", report.seed.map_or("-".into(), |s| s.to_string())),
            ("output", report.output.clone()),
        ])
    })
}
