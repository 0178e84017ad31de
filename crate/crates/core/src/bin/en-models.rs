use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;

use en_models::barratt_eccles::{enumerate_gamma, BESimplex};
use en_models::bv::WElement;
use en_models::configurations::{CubeConfiguration, PointConfiguration};
use en_models::lattice_paths::{enumerate_l_n, LatticePath};
use en_models::suites::{run_suite, SuiteOptions};
use en_models::trees::LabelledPlanarTree;
use en_models::{Caps, Error, Variant, WeightedTournament};

#[derive(Parser)]
#[command(name = "en-models", version, about = "Combinatorial models of E_n-operads")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Comma-separated vertex labels.
    #[arg(long, value_delimiter = ',', default_values_t = ["a".to_string(), "b".to_string()])]
    vertices: Vec<String>,
    /// Weight (label) bound.
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_enum, default_value_t = VariantArg::Acyclic)]
    variant: VariantArg,
    /// Budget overrides, e.g. `vertices=6,simplices=100000`.
    #[arg(long, default_value = "")]
    caps: String,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print every element of a model as JSON lines.
    Enumerate {
        #[arg(value_enum)]
        model: Model,
        #[command(flatten)]
        common: Common,
        /// Inner-vertex bound for W-trees.
        #[arg(long, default_value_t = 2)]
        max_inner: usize,
    },
    /// Apply a comparison map to each JSON line of the input.
    Map {
        #[arg(value_enum)]
        map: MapName,
        /// Input file; stdin when absent or `-`.
        input: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Run a named verification suite and print its JSON report.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: Option<u32>,
        /// Refuse homology above this dimension.
        #[arg(long)]
        max_dim: Option<usize>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value = "")]
        caps: String,
        /// Recompute frozen expected values with brute-force oracles.
        #[arg(long)]
        recompute_oracles: bool,
        #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
        format: ReportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-emit a model element as indented JSON or DOT.
    Export {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ExportFormat::Json)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Acyclic,
    Extended,
}

#[derive(Clone, Copy, ValueEnum)]
enum Model {
    Graphs,
    Trees,
    Paths,
    Besimplices,
    Welements,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapName {
    Psi,
    Phi,
    #[value(name = "gamma_be")]
    GammaBe,
    #[value(name = "gamma_lp")]
    GammaLp,
    Mu,
    #[value(name = "phi_M")]
    PhiM,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExportFormat {
    Json,
    Dot,
}

enum Failure {
    Model(Error),
    Io(io::Error),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Model(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Model(e.into())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Model(e)) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => ExitCode::from(3),
                Error::Internal(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn caps(overrides: &str) -> Result<Caps, Failure> {
    Ok(Caps::default().with_overrides(overrides)?)
}

fn variant(v: VariantArg) -> Variant {
    match v {
        VariantArg::Acyclic => Variant::Acyclic,
        VariantArg::Extended => Variant::Extended,
    }
}

struct Sink(Box<dyn Write>);

impl Sink {
    fn open(out: &Option<PathBuf>) -> Result<Sink, Failure> {
        Ok(Sink(match out {
            Some(path) => Box::new(io::BufWriter::new(fs::File::create(path)?)),
            None => Box::new(io::BufWriter::new(io::stdout().lock())),
        }))
    }

    fn line<T: Serialize>(&mut self, x: &T) -> Result<(), Failure> {
        serde_json::to_writer(&mut self.0, x)?;
        self.0.write_all(b"\n")?;
        Ok(())
    }

    fn lines<T: Serialize>(&mut self, xs: &[T]) -> Result<(), Failure> {
        xs.iter().try_for_each(|x| self.line(x))
    }

    fn text(&mut self, s: &str) -> Result<(), Failure> {
        self.0.write_all(s.as_bytes())?;
        Ok(())
    }

    fn finish(mut self) -> Result<(), Failure> {
        self.0.flush()?;
        Ok(())
    }
}

fn read_input(input: &Option<PathBuf>) -> Result<String, Failure> {
    match input {
        Some(p) if p.as_os_str() != "-" => Ok(fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Enumerate { model, common, max_inner } => enumerate(model, &common, max_inner),
        Command::Map { map, input, common } => map_lines(map, &read_input(&input)?, &common),
        Command::Verify { suite, seed, n, max_dim, samples, caps: overrides, recompute_oracles, format, out } => {
            let opts = SuiteOptions { seed, caps: caps(&overrides)?, n, max_dim, samples, recompute_oracles };
            let report = run_suite(&suite, &opts)?;
            let mut sink = Sink::open(&out)?;
            match format {
                ReportFormat::Json => sink.line(&report)?,
                ReportFormat::Text => {
                    for c in &report.checks {
                        let status = serde_json::to_string(&c.status)?;
                        sink.text(&format!("{:<6} {:<32} {}\n", status.trim_matches('"'), c.name, c.observed))?;
                    }
                    sink.text(&format!("{}: {}\n", report.suite, if report.passed { "pass" } else { "fail" }))?;
                }
            }
            sink.finish()?;
            if report.passed {
                Ok(())
            } else {
                Err(Failure::Checks)
            }
        }
        Command::Export { input, format, out } => {
            let value: Value = serde_json::from_str(&read_input(&input)?)?;
            let mut sink = Sink::open(&out)?;
            sink.text(&export(value, format)?)?;
            sink.finish()
        }
    }
}

fn enumerate(model: Model, common: &Common, max_inner: usize) -> Result<(), Failure> {
    let caps = caps(&common.caps)?;
    let vs = &common.vertices;
    let n = common.n.unwrap_or(2);
    let mut sink = Sink::open(&common.out)?;
    match model {
        Model::Graphs => sink.lines(&WeightedTournament::enumerate(vs, n, variant(common.variant), &caps)?)?,
        Model::Trees => sink.lines(&LabelledPlanarTree::enumerate(vs, n, &caps)?)?,
        Model::Paths => sink.lines(&enumerate_l_n(vs, n, &caps)?)?,
        Model::Besimplices => {
            let (_, simplices) = enumerate_gamma(vs, n, None, &caps)?;
            for layer in &simplices {
                sink.lines(layer)?;
            }
        }
        Model::Welements => sink.lines(&WElement::enumerate(vs, n, variant(common.variant), max_inner, &caps)?)?,
    }
    sink.finish()
}

fn map_lines(map: MapName, input: &str, common: &Common) -> Result<(), Failure> {
    let caps = caps(&common.caps)?;
    let mut sink = Sink::open(&common.out)?;
    for line in input.lines().map(str::trim).filter(|l| !l.is_empty()) {
        match map {
            MapName::Psi => sink.line(&serde_json::from_str::<PointConfiguration>(line)?.psi()?)?,
            MapName::Phi => sink.line(&serde_json::from_str::<CubeConfiguration>(line)?.phi()?)?,
            MapName::PhiM => sink.line(&serde_json::from_str::<CubeConfiguration>(line)?.phi_m(&caps)?)?,
            MapName::GammaBe => {
                let x: BESimplex = serde_json::from_str(line)?;
                sink.line(&x.gamma(common.n.unwrap_or_else(|| x.max_weight()))?)?
            }
            MapName::GammaLp => {
                let x: LatticePath = serde_json::from_str(line)?;
                sink.line(&x.gamma(common.n.unwrap_or_else(|| x.max_weight()))?)?
            }
            MapName::Mu => sink.line(&LabelledPlanarTree::from_json(line, common.n)?.mu()?)?,
        }
    }
    sink.finish()
}

fn export(value: Value, format: ExportFormat) -> Result<String, Failure> {
    let has = |k: &str| value.get(k).is_some();
    if has("edges") {
        let g: WeightedTournament = serde_json::from_value(value)?;
        return Ok(match format {
            ExportFormat::Json => pretty(&g)?,
            ExportFormat::Dot => g.to_dot(),
        });
    }
    if let ExportFormat::Dot = format {
        return Err(Error::InvalidInput("DOT export is available for graphs only".into()).into());
    }
    if has("orders") {
        pretty(&serde_json::from_value::<BESimplex>(value)?)
    } else if has("letters") {
        pretty(&serde_json::from_value::<LatticePath>(value)?)
    } else if has("tree") {
        pretty(&serde_json::from_value::<WElement>(value)?)
    } else if has("cubes") {
        pretty(&serde_json::from_value::<CubeConfiguration>(value)?)
    } else if has("points") {
        pretty(&serde_json::from_value::<PointConfiguration>(value)?)
    } else if has("label") || has("leaf") {
        pretty(&LabelledPlanarTree::from_json(&value.to_string(), None)?)
    } else {
        Err(Error::InvalidInput("unrecognised element".into()).into())
    }
}

fn pretty<T: Serialize>(x: &T) -> Result<String, Failure> {
    Ok(serde_json::to_string_pretty(x)? + "\n")
}
