mod commands;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use chromatic_core::graph::catalog;
use chromatic_core::graph::io::{parse_dimacs, parse_edge_list, LabeledGraph};
use chromatic_core::{Error, Limits};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "chromatic", version, about = "Exact chromatic polynomials of small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the chromatic polynomial with one method.
    Compute {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Method::Classical)]
        method: Method,
        /// Partition scheme, required with `--method scheme`.
        #[arg(long, required_if_eq("method", "scheme"))]
        scheme: Option<String>,
    },
    /// Run every method and identity check and report whether they agree.
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', default_value = "minimal-tree,penrose")]
        schemes: Vec<String>,
    },
    /// Forest level counts N_k per scheme.
    Forests {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_delimiter = ',', default_value = "minimal-tree,penrose")]
        schemes: Vec<String>,
        /// Also list the forests of each scheme.
        #[arg(long)]
        list: bool,
    },
    /// Polymer activities and the polymer partition function.
    Activities {
        #[command(flatten)]
        common: Common,
    },
    /// Potts partition function over a grid of inverse temperatures.
    Potts {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        q: u32,
        /// Comma-separated; `inf` for zero temperature.
        #[arg(long, value_delimiter = ',', default_value = "0,0.5,1,2,inf")]
        beta: Vec<String>,
        #[arg(long = "coupling", short = 'J', default_value_t = -1.0, allow_hyphen_values = true)]
        coupling: f64,
    },
}

#[derive(Args)]
struct Common {
    /// Graph file, `-` for standard input.
    #[arg(long, required_unless_present = "demo", conflicts_with = "demo")]
    input: Option<PathBuf>,
    /// Built-in graph: K<n>, C<n>, P<n>, S<n> or E<n>.
    #[arg(long)]
    demo: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Edgelist)]
    format: Format,
    /// File listing every edge once, in the desired edge order.
    #[arg(long)]
    edge_order: Option<PathBuf>,
    #[arg(long, env = "CHROMATIC_MAX_VERTICES", default_value_t = Limits::default().max_vertices)]
    max_vertices: usize,
    #[arg(long, env = "CHROMATIC_MAX_EDGES", default_value_t = Limits::default().max_edges)]
    max_edges: usize,
    /// Budget on q^n for coloring and spin sums.
    #[arg(long, env = "CHROMATIC_BUDGET", default_value_t = Limits::default().coloring_budget)]
    budget: u128,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    out: Output,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Edgelist,
    Dimacs,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Method {
    Classical,
    Whitney,
    Scheme,
    Polymer,
    DeletionContraction,
    Brute,
}

/// A failure with its process exit code. `report` still goes to stdout.
pub struct Failure {
    pub code: u8,
    pub message: String,
    pub report: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into(), report: String::new() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GraphTooLarge { .. } | Error::BudgetExceeded { .. } | Error::Capacity { .. } => 3,
            Error::SchemeInvalid { .. } => 4,
            _ => 2,
        };
        Failure { code, message: e.to_string(), report: String::new() }
    }
}

fn read_text(path: &PathBuf) -> Result<String, Failure> {
    let res = if path.as_os_str() == "-" {
        std::io::read_to_string(std::io::stdin())
    } else {
        fs::read_to_string(path)
    };
    res.map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub struct Context {
    pub graph: LabeledGraph,
    pub limits: Limits,
    pub out: Output,
}

impl Common {
    fn load(&self) -> Result<Context, Failure> {
        let mut graph = match (&self.input, &self.demo) {
            (Some(path), _) => {
                let text = read_text(path)?;
                match self.format {
                    Format::Edgelist => parse_edge_list(&text)?,
                    Format::Dimacs => parse_dimacs(&text)?,
                }
            }
            (None, Some(name)) => {
                let graph = catalog::demo(name)?;
                let labels = (0..graph.vertex_count()).map(|v| v.to_string()).collect();
                LabeledGraph { graph, labels }
            }
            (None, None) => unreachable!("clap enforces one graph source"),
        };
        if let Some(path) = &self.edge_order {
            graph = graph.with_edge_order(&read_text(path)?)?;
        }
        let limits = Limits {
            max_vertices: self.max_vertices,
            max_edges: self.max_edges,
            coloring_budget: self.budget,
        };
        limits.check_vertices(&graph.graph)?;
        Ok(Context { graph, limits, out: self.out })
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Compute { common, method, scheme } => {
            if scheme.is_some() && method != Method::Scheme {
                return Err(Failure::usage("--scheme only applies to --method scheme"));
            }
            commands::compute(&common.load()?, method, scheme.as_deref())
        }
        Command::Verify { common, schemes } => commands::verify(&common.load()?, &schemes),
        Command::Forests { common, schemes, list } => commands::forests(&common.load()?, &schemes, list),
        Command::Activities { common } => commands::activities(&common.load()?),
        Command::Potts { common, q, beta, coupling } => commands::potts(&common.load()?, q, &beta, coupling),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(f) => {
            print!("{}", f.report);
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
