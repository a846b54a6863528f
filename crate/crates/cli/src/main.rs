use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pinned_groups::with_precision;
use sympos::config::parse_scalars;
use sympos::{commands, run_suite, CliError, Format, RunConfig, Suite, EXIT_FAILURE, EXIT_PRECISION};

#[derive(Parser)]
#[command(name = "sympos", version, about = "Twisted involutions, positive τ-cells, involution-word moves and their tropical zones")]
struct Cli {
    /// Dynkin family (A, B, C, D, G) or GL for the general linear models.
    #[arg(long = "type", global = true)]
    type_label: Option<String>,
    #[arg(long, global = true)]
    rank: Option<usize>,
    /// Diagram involution: id, flip, or one-based images such as 1,3,2,4.
    #[arg(long, global = true, default_value = "id")]
    star: String,
    /// Working precision in bits for certified intervals.
    #[arg(long, global = true, default_value_t = 128)]
    precision: u32,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Samples per check; each check has its own default.
    #[arg(long, global = true)]
    samples: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the twisted involutions with |w|, φ, ‖w‖ and the number of involution words.
    Enumerate,
    /// Involution words of an element, its reduced words, or joint words of a pair.
    Words {
        #[arg(default_value = "w0")]
        element: String,
        /// Second element of a pair; lists joint words.
        #[arg(long)]
        right: Option<String>,
        #[arg(long)]
        reduced: bool,
    },
    /// Braid graph of the involution words of an element.
    Graph {
        #[arg(default_value = "w0")]
        element: String,
    },
    /// Evaluate a move and certify its matrix identity.
    Move {
        #[arg(required_unless_present = "request")]
        tag: Option<String>,
        #[arg(long, default_value = "forward")]
        direction: String,
        #[arg(allow_hyphen_values = true)]
        coords: Vec<String>,
        /// A JSON request {"move": tag, "direction": d, "input": [scalars]}; '-' reads stdin.
        #[arg(long, conflicts_with = "tag")]
        request: Option<String>,
    },
    /// Run a seeded verification suite.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
    /// Zone map of a move applied to valuations.
    Tropicalize {
        tag: String,
        #[arg(long, default_value = "forward")]
        direction: String,
        #[arg(required = true, allow_hyphen_values = true)]
        valuations: Vec<String>,
    },
    /// Factor a matrix of the type A model: Weyl cell, along a word, or τ-cell.
    Factor {
        /// Rows separated by ';', entries by commas or spaces.
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
        #[arg(long)]
        word: Option<String>,
        #[arg(long)]
        classify: bool,
    },
    /// One conjugation step on a cell point.
    Act {
        /// U+, U- or G.
        #[arg(long, allow_hyphen_values = true)]
        kind: String,
        /// A word, or signed letters such as -1,+2 for G.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        coords: String,
        #[arg(long)]
        torus: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        letter: String,
        #[arg(long)]
        value: String,
    },
}

fn read_request(r: &str) -> Result<String, CliError> {
    if r != "-" {
        return Ok(r.to_string());
    }
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| CliError::Usage(format!("cannot read stdin: {e}")))?;
    Ok(s)
}

fn run(cli: &Cli, cfg: &RunConfig) -> Result<(String, i32), CliError> {
    let out = match &cli.command {
        Command::Enumerate => commands::enumerate(cfg)?,
        Command::Words { element, right, reduced } => commands::words(cfg, element, right.as_deref(), *reduced)?,
        Command::Graph { element } => commands::graph(cfg, element)?,
        Command::Move {
            tag,
            direction,
            coords,
            request,
        } => match (tag, request) {
            (_, Some(r)) => commands::move_request(cfg, &read_request(r)?)?,
            (Some(t), None) => commands::move_cmd(cfg, t, direction, &parse_scalars(coords)?)?,
            (None, None) => return Err(CliError::Usage("missing move tag".into())),
        },
        Command::Verify { suite } => {
            let report = run_suite(cfg, *suite)?;
            let code = if report.failed() {
                EXIT_FAILURE
            } else if report.undecidable() {
                EXIT_PRECISION
            } else {
                0
            };
            return Ok((report.render(cfg.format), code));
        }
        Command::Tropicalize { tag, direction, valuations } => commands::tropicalize(cfg, tag, direction, valuations)?,
        Command::Factor { matrix, word, classify } => commands::factor(cfg, matrix, word.as_deref(), *classify)?,
        Command::Act {
            kind,
            word,
            coords,
            torus,
            letter,
            value,
        } => commands::act(cfg, kind, word, coords, torus.as_deref(), letter, value)?,
    };
    Ok((out, 0))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = RunConfig::new(
        cli.type_label.clone(),
        cli.rank,
        &cli.star,
        cli.precision,
        cli.samples,
        cli.seed,
        cli.format,
    )
    .and_then(|cfg| with_precision(cfg.precision, || run(&cli, &cfg)));
    match result {
        Ok((out, code)) => {
            print!("{out}");
            ExitCode::from(code as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
