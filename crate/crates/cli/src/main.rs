mod commands;
mod dsl;
mod svg;

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{Failure, Names, Output};

/// Contact cut graphs, Lefschetz fibrations and their invariants.
#[derive(Parser)]
#[command(name = "ccgraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct Pick {
    /// Fibration to use
    #[arg(long)]
    fibration: Option<String>,
    /// Path to use
    #[arg(long)]
    path: Option<String>,
    /// Diagram to use
    #[arg(long)]
    diagram: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate every declaration
    Validate {
        file: PathBuf,
        #[arg(long, default_value_t = 10_000)]
        budget: usize,
    },
    /// Path between two systems realizing the fibration's twists
    Connect {
        file: PathBuf,
        #[arg(long)]
        from: Option<String>,
        #[arg(long)]
        to: Option<String>,
        #[arg(long)]
        fibration: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// Vanishing cycles read off a path
    PathToLf {
        file: PathBuf,
        #[arg(long)]
        path: Option<String>,
    },
    /// Path realizing a fibration from the canonical doubled system
    LfToPath {
        file: PathBuf,
        #[arg(long)]
        fibration: Option<String>,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// Multisection diagram with one side per twist (0 plus, 1 minus)
    LfToDiagram {
        file: PathBuf,
        #[arg(long)]
        fibration: Option<String>,
        #[arg(long)]
        sides: String,
    },
    /// Hurwitz move on cycles `index`, `index + 1` (1-based)
    Hurwitz {
        file: PathBuf,
        #[arg(long)]
        fibration: Option<String>,
        #[arg(long)]
        index: usize,
        #[arg(long)]
        inverse: bool,
    },
    /// Positive or negative stabilization along an arc
    Stabilize {
        file: PathBuf,
        #[arg(long)]
        arc: Option<String>,
        #[command(flatten)]
        pick: Pick,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        sign: i32,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// Hurwitz-normalize the cycles of a path without type-0 edges
    NormalizeL0 {
        file: PathBuf,
        #[arg(long)]
        path: Option<String>,
        /// Sample a random path of this length instead
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        surface: Option<String>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Bounds on the least number of type-0 edges
    LBound {
        file: PathBuf,
        #[command(flatten)]
        pick: Pick,
        /// Check a lower bound for family1 or family2
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// Homology, fundamental group and intersection form
    Invariants {
        file: PathBuf,
        #[arg(long)]
        fibration: Option<String>,
    },
    /// Print a member of family1 or family2 as a document
    Example {
        family: String,
        #[arg(long)]
        n: usize,
    },
    /// Draw each contact cut system as an SVG file
    Render {
        file: PathBuf,
        #[arg(long)]
        svg: PathBuf,
        #[command(flatten)]
        pick: Pick,
        #[arg(long)]
        system: Option<String>,
    },
}

fn names<'a>(pick: &'a Pick) -> Names<'a> {
    Names {
        from: None,
        to: None,
        fibration: pick.fibration.as_deref(),
        path: pick.path.as_deref(),
        diagram: pick.diagram.as_deref(),
        system: None,
        arc: None,
        surface: None,
    }
}

fn run(cli: Cli) -> commands::Outcome {
    use Command::*;
    let none = Pick::default();
    match cli.command {
        Validate { file, budget } => commands::validate(&file, budget),
        Connect { file, from, to, fibration, budget } => {
            let n = Names { from: from.as_deref(), to: to.as_deref(), fibration: fibration.as_deref(), ..names(&none) };
            commands::connect_cmd(&file, &n, budget)
        }
        PathToLf { file, path } => commands::path_to_lf_cmd(&file, &Names { path: path.as_deref(), ..names(&none) }),
        LfToPath { file, fibration, budget } => {
            commands::lf_to_path_cmd(&file, &Names { fibration: fibration.as_deref(), ..names(&none) }, budget)
        }
        LfToDiagram { file, fibration, sides } => {
            commands::lf_to_diagram_cmd(&file, &Names { fibration: fibration.as_deref(), ..names(&none) }, &sides)
        }
        Hurwitz { file, fibration, index, inverse } => {
            commands::hurwitz_cmd(&file, &Names { fibration: fibration.as_deref(), ..names(&none) }, index, inverse)
        }
        Stabilize { file, arc, pick, sign, budget } => {
            commands::stabilize_cmd(&file, &Names { arc: arc.as_deref(), ..names(&pick) }, sign, budget)
        }
        NormalizeL0 { file, path, n, surface, seed } => {
            let nm = Names { path: path.as_deref(), surface: surface.as_deref(), ..names(&none) };
            commands::normalize_cmd(&file, &nm, n, seed)
        }
        LBound { file, pick, family, n, budget } => commands::l_bound_cmd(&file, &names(&pick), family.as_deref(), n, budget),
        Invariants { file, fibration } => {
            commands::invariants_cmd(&file, &Names { fibration: fibration.as_deref(), ..names(&none) })
        }
        Example { family, n } => commands::example_cmd(&family, n),
        Render { file, svg, pick, system } => {
            commands::render_cmd(&file, &Names { system: system.as_deref(), ..names(&pick) }, &svg)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(Output::Text(t)) => {
            let _ = write!(std::io::stdout(), "{t}");
            ExitCode::SUCCESS
        }
        Ok(Output::Json(v)) => {
            let _ = writeln!(std::io::stdout(), "{}", serde_json::to_string_pretty(&v).expect("reports serialize"));
            if v.get("ok") == Some(&serde_json::Value::Bool(false)) {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
