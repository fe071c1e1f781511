use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kcell_cli::commands::{self, ConstructRequest, DiagramRequest, Predicate, VerifyRequest};
use kcell_cli::{CliResult, Report};

#[derive(Parser)]
#[command(
    name = "kcell",
    version,
    about = "Order-k Voronoi cells: inequalities, certificates, shapes and constructions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum PredicateArg {
    Empty,
    Bounded,
    Interior,
    Ball,
}

#[derive(Subcommand)]
enum Command {
    /// Print the cell's inequalities with the (s, t) pair of each row.
    Cell {
        input: String,
        /// Drop rows implied by the others.
        #[arg(long)]
        reduce: bool,
    },
    /// Evaluate a predicate and print its certificate.
    Check {
        input: String,
        #[arg(long, value_enum)]
        predicate: PredicateArg,
    },
    /// Classify a planar cell by shape.
    Classify { input: String },
    /// Emit a site file whose cell is the requested shape.
    #[command(allow_negative_numbers = true)]
    Construct {
        /// Shape name followed by its coordinates.
        #[arg(long, num_args = 1.., value_names = ["SHAPE", "VALUES"], conflicts_with = "target")]
        shape: Option<Vec<String>>,
        /// Inequality file describing the target cell.
        #[arg(long)]
        target: Option<String>,
        #[arg(long, num_args = 1..)]
        d: Vec<f64>,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        #[arg(long)]
        gamma: Option<f64>,
        #[arg(long)]
        sigma: Option<usize>,
        #[arg(long)]
        tau: Option<usize>,
        #[arg(long, num_args = 1..)]
        v1: Vec<f64>,
        #[arg(long, num_args = 1..)]
        v2: Vec<f64>,
        #[arg(long)]
        b1: Option<f64>,
        #[arg(long)]
        b2: Option<f64>,
        /// Ray directions `x1 y1 x2 y2` of unbounded shapes.
        #[arg(long, num_args = 4)]
        rays: Vec<f64>,
    },
    /// Order-k diagram of planar sites, with an optional SVG rendering.
    Diagram {
        input: String,
        #[arg(short = 'k', long = "order")]
        k: usize,
        #[arg(long)]
        svg: Option<String>,
        /// `xmin ymin xmax ymax`; defaults to 1.5 times the sites' extent.
        #[arg(long, num_args = 4, allow_negative_numbers = true)]
        bbox: Option<Vec<f64>>,
        /// Samples per axis of the coverage check.
        #[arg(long, default_value_t = 100)]
        resolution: usize,
        #[arg(long, default_value_t = 0)]
        palette_seed: u64,
        #[arg(long, default_value_t = 600)]
        width: u32,
        #[arg(long, default_value_t = 600)]
        height: u32,
    },
    /// Compare the distance definition with the inequalities on a sample grid.
    Verify {
        input: String,
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Inequality file to test instead of the cell's own rows.
        #[arg(long)]
        hrep: Option<String>,
    },
}

fn parse_values(raw: &[String]) -> CliResult<Vec<f64>> {
    raw.iter()
        .map(|t| {
            t.parse()
                .map_err(|_| kcell_cli::CliError::Usage(format!("bad number `{t}`")))
        })
        .collect()
}

fn run(cli: Cli) -> CliResult<Report> {
    match cli.command {
        Command::Cell { input, reduce } => commands::cmd_cell(&input, reduce),
        Command::Check { input, predicate } => {
            let p = match predicate {
                PredicateArg::Empty => Predicate::Empty,
                PredicateArg::Bounded => Predicate::Bounded,
                PredicateArg::Interior => Predicate::Interior,
                PredicateArg::Ball => Predicate::Ball,
            };
            commands::cmd_check(&input, p)
        }
        Command::Classify { input } => commands::cmd_classify(&input),
        Command::Construct {
            shape,
            target,
            d,
            alpha,
            beta,
            gamma,
            sigma,
            tau,
            v1,
            v2,
            b1,
            b2,
            rays,
        } => {
            let (name, values) = match shape.as_deref() {
                Some([name, rest @ ..]) => (Some(name.clone()), parse_values(rest)?),
                _ => (None, Vec::new()),
            };
            commands::cmd_construct(&ConstructRequest {
                shape: name,
                values,
                d,
                alpha,
                beta,
                gamma,
                sigma,
                tau,
                v1,
                v2,
                b1,
                b2,
                rays,
                target,
            })
        }
        Command::Diagram {
            input,
            k,
            svg,
            bbox,
            resolution,
            palette_seed,
            width,
            height,
        } => commands::cmd_diagram(&DiagramRequest {
            input,
            k,
            svg,
            bbox: bbox.map(|b| [b[0], b[1], b[2], b[3]]),
            resolution,
            palette_seed,
            width_px: width,
            height_px: height,
        }),
        Command::Verify {
            input,
            samples,
            seed,
            hrep,
        } => commands::cmd_verify(&VerifyRequest {
            input,
            samples,
            seed,
            hrep,
        }),
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(report) => {
            let _ = std::io::stdout().write_all(report.text.as_bytes());
            ExitCode::from(report.code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
