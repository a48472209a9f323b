use std::fs;
use std::io::{self, IsTerminal, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};

use sloped_width::{
    check_width_bounds, classify, deduce, parse_slope, Decomposition, Slope, Width,
};

mod atlas;

#[derive(Parser)]
#[command(name = "sloped-width", version, about = "Width calculus for sloped Heegaard splittings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classify a torus-knot surgery slope and print the result as JSON.
    Classify {
        #[arg(long, allow_negative_numbers = true)]
        p: i64,
        #[arg(long, allow_negative_numbers = true)]
        q: i64,
        #[arg(long, value_parser = slope_arg, allow_hyphen_values = true)]
        slope: Slope,
    },
    /// Tabulate a slope grid for one torus knot as CSV.
    Atlas(atlas::AtlasArgs),
    /// Validate or transform a decomposition given as JSON.
    Decomp {
        #[command(subcommand)]
        action: DecompAction,
    },
    /// Apply the width-restriction rules to a width.
    Deduce {
        #[arg(long, value_parser = width_arg)]
        width: Width,
        #[arg(long, value_parser = slope_arg, allow_hyphen_values = true)]
        slope: Slope,
        /// The width is realized by a single planar Heegaard surface.
        #[arg(long)]
        planar: bool,
    },
    /// Check a sloped width against the bounds from a closed width.
    Bounds {
        #[arg(long, value_parser = width_arg)]
        closed: Width,
        #[arg(long, value_parser = width_arg)]
        sloped: Width,
    },
}

#[derive(Args)]
struct Input {
    /// Read the decomposition from this file instead of standard input.
    #[arg(long)]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum DecompAction {
    Validate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        strict: bool,
    },
    Stabilize {
        #[command(flatten)]
        input: Input,
        /// Stabilization slope; defaults to the decomposition's own slope.
        #[arg(long, value_parser = slope_arg, allow_hyphen_values = true)]
        slope: Option<Slope>,
        /// 0-based thick surface index.
        #[arg(long, default_value_t = 0)]
        index: usize,
    },
    Tube {
        #[command(flatten)]
        input: Input,
    },
    Fill {
        #[command(flatten)]
        input: Input,
    },
    Width {
        #[command(flatten)]
        input: Input,
    },
}

fn slope_arg(text: &str) -> Result<Slope, String> {
    parse_slope(text).map_err(|e| e.to_string())
}

fn width_arg(text: &str) -> Result<Width, String> {
    text.parse().map_err(|e: sloped_width::Error| e.to_string())
}

/// Exit status categories: 1 for domain failures, 2 for usage errors.
#[derive(Debug)]
pub enum Failure {
    Domain(anyhow::Error),
    Usage(anyhow::Error),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Domain(_) => 1,
            Failure::Usage(_) => 2,
        }
    }
}

/// Successful runs may still ask for a non-zero status (failed validation).
pub struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn ok(text: String) -> Output {
        Output { text, code: 0 }
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string(value).expect("serializable output");
    text.push('\n');
    text
}

fn read_decomposition(input: &Input) -> Result<Decomposition, Failure> {
    let text = match &input.file {
        Some(path) => fs::read_to_string(path)
            .with_context(|| format!("reading {}", path.display()))
            .map_err(Failure::Usage)?,
        None => {
            let mut text = String::new();
            io::stdin()
                .read_to_string(&mut text)
                .context("reading standard input")
                .map_err(Failure::Usage)?;
            text
        }
    };
    Decomposition::from_json(&text).map_err(|e| Failure::Usage(e.into()))
}

fn read_valid(input: &Input) -> Result<Decomposition, Failure> {
    let d = read_decomposition(input)?;
    let report = d.validate(false);
    if !report.is_ok() {
        let reasons: Vec<_> = report.violations.iter().map(ToString::to_string).collect();
        return Err(Failure::Usage(anyhow!("invalid decomposition: {}", reasons.join("; "))));
    }
    Ok(d)
}

fn run_decomp(action: &DecompAction) -> Result<Output, Failure> {
    let domain = |e: sloped_width::Error| Failure::Domain(e.into());
    match action {
        DecompAction::Validate { input, strict } => {
            let report = read_decomposition(input)?.validate(*strict);
            Ok(Output {
                code: if report.is_ok() { 0 } else { 1 },
                text: json(&report),
            })
        }
        DecompAction::Stabilize { input, slope, index } => {
            let d = read_valid(input)?;
            let alpha = slope.unwrap_or(d.slope);
            d.alpha_stabilize(alpha, *index)
                .map(|out| Output::ok(json(&out)))
                .map_err(domain)
        }
        DecompAction::Tube { input } => read_valid(input)?
            .tube_to_closed()
            .map(|out| Output::ok(json(&out)))
            .map_err(domain),
        DecompAction::Fill { input } => Ok(Output::ok(json(&read_valid(input)?.fill()))),
        DecompAction::Width { input } => {
            let width = read_valid(input)?.width().map_err(domain)?;
            Ok(Output::ok(format!("{width}\n")))
        }
    }
}

fn run(cli: Cli) -> Result<Output, Failure> {
    match cli.command {
        Command::Classify { p, q, slope } => classify(p, q, slope)
            .map(|c| Output::ok(json(&c)))
            .map_err(|e| Failure::Usage(e.into())),
        Command::Atlas(args) => atlas::run(&args),
        Command::Decomp { action } => run_decomp(&action),
        Command::Deduce {
            width,
            slope,
            planar,
        } => Ok(Output::ok(json(&deduce(&width, slope, planar)))),
        Command::Bounds { closed, sloped } => check_width_bounds(&closed, &sloped)
            .map(|b| Output::ok(json(&b)))
            .map_err(|e| Failure::Usage(e.into())),
    }
}

fn use_color() -> bool {
    std::env::var_os("SLOPED_WIDTH_NO_COLOR").is_none() && io::stderr().is_terminal()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            let mut stdout = io::stdout().lock();
            if let Err(e) = stdout.write_all(output.text.as_bytes()) {
                if e.kind() != io::ErrorKind::BrokenPipe {
                    eprintln!("error: {e}");
                    return ExitCode::from(1);
                }
            }
            ExitCode::from(output.code)
        }
        Err(failure) => {
            let (Failure::Domain(e) | Failure::Usage(e)) = &failure;
            if use_color() {
                eprintln!("\x1b[1;31merror:\x1b[0m {e:#}");
            } else {
                eprintln!("error: {e:#}");
            }
            ExitCode::from(failure.code())
        }
    }
}
