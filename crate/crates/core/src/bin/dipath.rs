use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use dipath::colouring::{chi_kdipath, Mode};
use dipath::graph::{
    directed_cycle, directed_path, random_acyclic, random_oriented, random_with_min_girth,
    transitive_tournament,
};
use dipath::hom::{core_of, find_homomorphism_with};
use dipath::reductions::{build_f_gadget, build_g_prime, build_h_kt};
use dipath::targets::{
    build_matrix_target, build_order5_tournament, build_sherk_target, EdgeRule,
    MatrixTargetOptions, TargetGraph,
};
use dipath::verify::{run_suite, Suite, VerifyConfig};
use dipath::{Error, OrientedGraph, SimpleGraph, DEFAULT_NODE_BUDGET};

#[derive(Parser)]
#[command(name = "dipath", version, about = "k-dipath colouring of oriented graphs")]
struct Cli {
    /// Search node budget [env: DIPATH_NODE_BUDGET]
    #[arg(long, global = true)]
    node_limit: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a graph as JSON
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
    /// k-dipath chromatic number with a witness colouring
    Chi {
        #[arg(long)]
        k: usize,
        #[arg(long, conflicts_with = "greedy")]
        exact: bool,
        #[arg(long)]
        greedy: bool,
        file: PathBuf,
    },
    /// Build a universal target
    Target {
        #[command(subcommand)]
        kind: TargetKind,
        /// Where to write the vertex meaning file
        #[arg(long, global = true)]
        meaning: Option<PathBuf>,
    },
    /// Search for a homomorphism SRC -> DST (exit 1 if none)
    Hom { src: PathBuf, dst: PathBuf },
    /// Core of a graph
    Core { file: PathBuf },
    /// Build a reduction gadget with its certificate
    Reduce {
        #[command(subcommand)]
        kind: ReduceKind,
    },
    /// Run the verification suite
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit a JSON report instead of text lines
        #[arg(long)]
        json: bool,
    },
    /// Graph JSON to DOT
    ExportDot { file: PathBuf },
}

#[derive(Subcommand)]
enum GenKind {
    Path {
        #[arg(long)]
        n: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Tt {
        #[arg(long)]
        t: usize,
    },
    Random(RandomArgs),
}

#[derive(Args)]
struct RandomArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0.3)]
    p: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Delete arcs until the directed girth is at least this
    #[arg(long, conflicts_with = "acyclic")]
    min_girth: Option<usize>,
    #[arg(long)]
    acyclic: bool,
}

#[derive(Subcommand)]
enum TargetKind {
    Matrix {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        /// Keep only realizable matrices
        #[arg(long)]
        realizable: bool,
        /// Use the literal propagation conditions
        #[arg(long)]
        strict: bool,
        #[arg(long)]
        max_vertices: Option<u64>,
    },
    Sherk {
        #[arg(long)]
        t: usize,
    },
    T5,
}

#[derive(Subcommand)]
enum ReduceKind {
    Hkt {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        t: usize,
        file: PathBuf,
    },
    Fgadget {
        #[arg(long)]
        t: usize,
    },
    Gprime {
        #[arg(long)]
        t: usize,
        file: PathBuf,
    },
}

fn read_input(path: &Path) -> dipath::Result<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(std::fs::read_to_string(path)?)
    }
}

fn read_graph(path: &Path) -> dipath::Result<OrientedGraph> {
    OrientedGraph::from_json_str(&read_input(path)?)
}

fn read_simple(path: &Path) -> dipath::Result<SimpleGraph> {
    SimpleGraph::from_json_str(&read_input(path)?)
}

fn budget(cli: &Cli) -> dipath::Result<u64> {
    if let Some(b) = cli.node_limit {
        return Ok(b);
    }
    match std::env::var("DIPATH_NODE_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| Error::Input(format!("DIPATH_NODE_BUDGET is not a number: {v:?}"))),
        Err(_) => Ok(DEFAULT_NODE_BUDGET),
    }
}

fn emit_target(target: &TargetGraph, meaning: Option<&Path>) -> dipath::Result<()> {
    if let Some(path) = meaning {
        std::fs::write(path, target.meaning_json())?;
    }
    println!("{}", target.graph.to_json_string());
    Ok(())
}

fn run(cli: Cli) -> dipath::Result<ExitCode> {
    let budget = budget(&cli)?;
    match cli.cmd {
        Cmd::Gen { kind } => {
            let g = match kind {
                GenKind::Path { n } => directed_path(n),
                GenKind::Cycle { n } => {
                    if n < 3 {
                        return Err(Error::Input(format!("a directed cycle needs n >= 3, got {n}")));
                    }
                    directed_cycle(n)
                }
                GenKind::Tt { t } => transitive_tournament(t),
                GenKind::Random(r) => match (r.min_girth, r.acyclic) {
                    (Some(girth), _) => random_with_min_girth(r.n, r.p, girth, r.seed),
                    (None, true) => random_acyclic(r.n, r.p, r.seed),
                    (None, false) => random_oriented(r.n, r.p, r.seed),
                },
            };
            println!("{}", g.to_json_string());
        }
        Cmd::Chi { k, greedy, file, .. } => {
            let g = read_graph(&file)?;
            let mode = if greedy { Mode::Greedy } else { Mode::Exact };
            let r = chi_kdipath(&g, k, mode, budget)?;
            println!("{}", serde_json::to_string(&r)?);
        }
        Cmd::Target { kind, meaning } => match kind {
            TargetKind::Matrix {
                k,
                t,
                realizable,
                strict,
                max_vertices,
            } => {
                let mut opts = MatrixTargetOptions {
                    rule: if strict { EdgeRule::StrictText } else { EdgeRule::Corrected },
                    realizable_only: realizable,
                    ..Default::default()
                };
                if let Some(m) = max_vertices {
                    opts.max_vertices = m;
                }
                emit_target(&build_matrix_target(k, t, opts)?, meaning.as_deref())?;
            }
            TargetKind::Sherk { t } => emit_target(&build_sherk_target(t)?, meaning.as_deref())?,
            TargetKind::T5 => println!("{}", build_order5_tournament().to_json_string()),
        },
        Cmd::Hom { src, dst } => {
            let (g, h) = (read_graph(&src)?, read_graph(&dst)?);
            match find_homomorphism_with(&g, &h, budget)?.witness {
                Some(phi) => println!("{}", phi.to_json_string()),
                None => {
                    eprintln!("no homomorphism");
                    return Ok(ExitCode::from(1));
                }
            }
        }
        Cmd::Core { file } => {
            let core = core_of(&read_graph(&file)?, budget)?;
            println!("{}", core.graph.to_json_string());
        }
        Cmd::Reduce { kind } => {
            let out = match kind {
                ReduceKind::Hkt { k, t, file } => build_h_kt(&read_simple(&file)?, k, t)?,
                ReduceKind::Fgadget { t } => build_f_gadget(t)?,
                ReduceKind::Gprime { t, file } => build_g_prime(&read_simple(&file)?, t)?,
            };
            println!("{}", out.to_json_string());
        }
        Cmd::Verify {
            suite,
            max_n,
            seed,
            json,
        } => {
            let suite: Suite = suite.parse()?;
            let outcomes = run_suite(suite, &VerifyConfig { max_n, seed, budget });
            if json {
                println!("{}", json!({ "outcomes": outcomes, "passed": outcomes.iter().all(|o| o.passed) }));
            } else {
                for o in &outcomes {
                    println!("{o}");
                }
            }
            if outcomes.iter().any(|o| !o.passed) {
                return Ok(ExitCode::from(1));
            }
        }
        Cmd::ExportDot { file } => print!("{}", read_graph(&file)?.to_dot()),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Budget { .. } => 2,
                _ => 3,
            })
        }
    }
}
