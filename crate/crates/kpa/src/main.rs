use clap::{Parser, Subcommand};
use kpa::cli::{
    cmd_analyze, cmd_eval, cmd_fixtures_emit, cmd_fixtures_list, cmd_lattice, cmd_laurent_check,
    cmd_validate, CmdResult, EXIT_INTERNAL,
};

#[derive(Parser)]
#[command(
    name = "kpa",
    about = "Kumjian-Pask algebras of finite k-graphs: validation, exact arithmetic, structure analysis",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a graph file (or built-in graph name)
    Validate { file: String },
    /// Full structure report: aperiodicity, cofinality, ideal lattice, simplicity
    Analyze {
        file: String,
        /// Coefficient ring: int, mod:<n>, rat, gf:<p>, laurent:<1|2>
        #[arg(long, default_value = "int")]
        ring: String,
        /// Degree bound for the periodicity pair scan
        #[arg(long, default_value_t = 3)]
        pair_bound: u32,
        /// Degree bound for separating-extension searches
        #[arg(long, default_value_t = 6)]
        depth_bound: u32,
        /// Write the JSON report to this path (`-` for stdout)
        #[arg(long)]
        json: Option<String>,
    },
    /// Evaluate expressions in the algebra
    Eval {
        file: String,
        /// Coefficient ring: int, mod:<n>, rat, gf:<p>, laurent:<1|2>
        #[arg(long, default_value = "int")]
        ring: String,
        /// Expression (repeatable)
        #[arg(short = 'e', long = "expr", required = true)]
        exprs: Vec<String>,
        /// Compare two expressions for equality in the algebra
        #[arg(long)]
        check_equal: bool,
    },
    /// Export the lattice of saturated hereditary vertex sets
    Lattice {
        file: String,
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// Randomized check of the Laurent-polynomial isomorphism for the
    /// one-vertex 2-graph
    LaurentCheck {
        #[arg(long, default_value = "int")]
        ring: String,
        #[arg(long, default_value_t = 200)]
        trials: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Built-in graphs
    Fixtures {
        #[command(subcommand)]
        action: FixturesAction,
    },
}

#[derive(Subcommand)]
enum FixturesAction {
    /// List the built-in graph names
    List,
    /// Print a built-in graph in the graph file format
    Emit { name: String },
}

fn dispatch(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Validate { file } => cmd_validate(&file),
        Command::Analyze {
            file,
            ring,
            pair_bound,
            depth_bound,
            json,
        } => cmd_analyze(&file, &ring, pair_bound, depth_bound, json.as_deref()),
        Command::Eval {
            file,
            ring,
            exprs,
            check_equal,
        } => cmd_eval(&file, &ring, &exprs, check_equal),
        Command::Lattice { file, format } => cmd_lattice(&file, &format),
        Command::LaurentCheck { ring, trials, seed } => cmd_laurent_check(&ring, trials, seed),
        Command::Fixtures { action } => match action {
            FixturesAction::List => cmd_fixtures_list(),
            FixturesAction::Emit { name } => cmd_fixtures_emit(&name),
        },
    }
}

fn main() {
    let cli = Cli::parse();
    // Internal invariant violations panic; report them as exit 3 rather
    // than a bare abort.
    let outcome = std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| dispatch(cli)));
    let result = match outcome {
        Ok(r) => r,
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            CmdResult {
                exit_code: EXIT_INTERNAL,
                stdout: String::new(),
                stderr: format!("internal consistency failure: {msg}\n"),
            }
        }
    };
    print!("{}", result.stdout);
    eprint!("{}", result.stderr);
    std::process::exit(result.exit_code);
}
