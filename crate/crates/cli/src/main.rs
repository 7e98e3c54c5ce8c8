//! `coxgrow`: growth functions, growth rates and Perron certification for
//! Coxeter groups and hyperbolic Coxeter polyhedra.

mod commands;
mod render;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use commands::{InputError, Outcome, Settings, EXIT_INPUT};

#[derive(Parser)]
#[command(name = "coxgrow", version, about = "Growth series and growth rates of Coxeter groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Args)]
struct Common {
    /// Number of series coefficients to print.
    #[arg(long, default_value_t = 20)]
    series: usize,
    /// Relative precision of root enclosures, in bits.
    #[arg(long, default_value_t = 128)]
    precision: u32,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Treat the input as a Coxeter matrix document.
    #[arg(long)]
    matrix: bool,
    /// Check the cusp inequality even if the input declares no ideal vertex.
    #[arg(long)]
    noncompact: bool,
}

#[derive(Args)]
struct Inputs {
    /// Input document.
    input: Option<PathBuf>,
    /// Process every `*.json` file in a directory, writing `<name>.report.json`
    /// next to each input.
    #[arg(long, conflicts_with = "input")]
    input_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Full pipeline: counts, identities, growth function, H, rate, Perron verdict.
    Growth {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Combinatorial identities of a polyhedron document.
    Check {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Compare the extracted H-polynomial with its closed form.
    HVerify {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        common: Common,
    },
    /// Sample admissible count vectors and test coefficient signs of H.
    Sample {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, short, default_value_t = 100)]
        n: usize,
        /// Write the sampled count vectors here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Real roots and the smallest-modulus root of a polynomial.
    Roots {
        #[arg(long)]
        poly: String,
        #[command(flatten)]
        common: Common,
    },
    /// Perron verdict for a growth function, or for `1/p` with `--poly p`.
    Perron {
        input: Option<PathBuf>,
        #[arg(long, conflicts_with = "input")]
        poly: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Solomon growth polynomial of a finite type such as `B3` or `I2(7)`.
    Solomon {
        #[arg(long = "type")]
        label: String,
        #[command(flatten)]
        common: Common,
    },
    /// Breadth-first growth of a concrete permutation model.
    Oracle {
        #[arg(long = "type")]
        label: String,
        #[command(flatten)]
        common: Common,
    },
}

impl Common {
    fn settings(&self) -> Settings {
        Settings { series: self.series, precision: self.precision, matrix: self.matrix, noncompact: self.noncompact }
    }
}

fn emit(format: Format, v: &Value) {
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(v).expect("json")),
        Format::Text => print!("{}", render::text(v)),
    }
}

fn finish(format: Format, result: Result<Outcome, InputError>) -> u8 {
    match result {
        Ok(o) => {
            emit(format, &o.report);
            o.code
        }
        Err(e) => {
            eprintln!("{}", serde_json::to_string(&e.to_json()).expect("json"));
            EXIT_INPUT
        }
    }
}

type FileCommand = fn(&Path, &Settings) -> Result<Outcome, InputError>;

fn run_files(inputs: &Inputs, common: &Common, f: FileCommand) -> u8 {
    let settings = common.settings();
    match (&inputs.input, &inputs.input_dir) {
        (Some(path), None) => finish(common.format, f(path, &settings)),
        (None, Some(dir)) => batch(dir, &settings, common.format, f),
        _ => finish(common.format, Err(InputError::new("usage", "give an input file or --input-dir"))),
    }
}

fn batch(dir: &Path, settings: &Settings, format: Format, f: FileCommand) -> u8 {
    let entries = match std::fs::read_dir(dir) {
        Ok(rd) => rd,
        Err(e) => return finish(format, Err(InputError::new("io", format!("{}: {e}", dir.display())))),
    };
    let mut files: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            let name = p.file_name().and_then(|n| n.to_str()).unwrap_or("");
            p.is_file() && name.ends_with(".json") && !name.ends_with(".report.json")
        })
        .collect();
    files.sort();
    let results: Vec<(String, u8)> = files
        .par_iter()
        .map(|path| {
            let (report, code) = match f(path, settings) {
                Ok(o) => (o.report, o.code),
                Err(e) => (e.to_json(), EXIT_INPUT),
            };
            let out = path.with_extension("report.json");
            let body = serde_json::to_string_pretty(&report).expect("json") + "\n";
            let code = match std::fs::write(&out, body) {
                Ok(()) => code,
                Err(_) => EXIT_INPUT,
            };
            (path.file_name().unwrap().to_string_lossy().into_owned(), code)
        })
        .collect();
    let summary: Vec<Value> = results.iter().map(|(name, code)| json!({ "file": name, "exit": code })).collect();
    emit(format, &json!({ "files": summary }));
    results.iter().map(|(_, c)| *c).max().unwrap_or(0)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let code = match &cli.command {
        Command::Growth { inputs, common } => run_files(inputs, common, commands::growth),
        Command::Check { inputs, common } => run_files(inputs, common, commands::check),
        Command::HVerify { inputs, common } => run_files(inputs, common, commands::hverify),
        Command::Sample { family, seed, n, out, common } => {
            finish(common.format, commands::sample(family, *seed, *n, out.as_deref()))
        }
        Command::Roots { poly, common } => finish(common.format, commands::roots(poly, &common.settings())),
        Command::Perron { input, poly, common } => {
            finish(common.format, commands::perron(input.as_deref(), poly.as_deref(), &common.settings()))
        }
        Command::Solomon { label, common } => finish(common.format, commands::solomon(label, &common.settings())),
        Command::Oracle { label, common } => finish(common.format, commands::oracle(label)),
    };
    ExitCode::from(code)
}
