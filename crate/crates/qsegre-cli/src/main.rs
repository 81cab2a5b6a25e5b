//! Command-line front end: reads JSON state/cone files, runs the library
//! analyses, and prints machine-readable JSON (default) or text reports.
//!
//! Exit codes: 0 success, 2 input error, 3 domain error (zero states and
//! the like), 4 unsupported operation (e.g. the dual of a non-simplicial
//! cone). JSON goes to stdout; diagnostics go to stderr only.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qsegre::json::{
    read_cone, read_factors, read_state, write_binomials, write_state, BinomialJson, ConeJson,
};
use qsegre::{
    compose_partition, entanglement_measure, family_state, hypercube_atlas,
    ideal_equivalence_report, segre_embed, separability_report, toric_ideal_quadrics,
    MeasureConfig, MeasureMode, MultiQubitState, PartitionNode, StateFamily,
};

#[derive(Parser)]
#[command(name = "qsegre", version, about = "Segre and toric analyses of multi-qubit states")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Zero threshold for residual verdicts.
    #[arg(long, global = true, default_value_t = 1e-10)]
    tolerance: f64,

    /// Emit machine-readable JSON on stdout (the default).
    #[arg(long, global = true)]
    json: bool,

    /// Emit a human-readable report instead of JSON.
    #[arg(long, global = true, conflicts_with = "json")]
    text: bool,

    /// Seed for every random choice; a fixed seed fixes the output.
    #[arg(long, global = true)]
    seed: Option<u64>,

    /// Normalization constant of the entanglement measure.
    #[arg(long, global = true, default_value_t = 1.0)]
    norm_const: f64,

    /// Which swap subsets enter the measure.
    #[arg(long, global = true, value_enum, default_value_t = MeasureModeArg::Full)]
    measure_mode: MeasureModeArg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum MeasureModeArg {
    Full,
    MinorsOnly,
}

impl From<MeasureModeArg> for MeasureMode {
    fn from(mode: MeasureModeArg) -> Self {
        match mode {
            MeasureModeArg::Full => MeasureMode::Full,
            MeasureModeArg::MinorsOnly => MeasureMode::MinorsOnly,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Normalize a state file, certify separability, and compute the
    /// entanglement measure.
    Analyze {
        /// State JSON file.
        state_file: PathBuf,
    },
    /// Segre-embed single-qubit factors, optionally through a partition
    /// tree.
    Embed {
        /// Factors JSON file, leftmost factor first.
        factors_file: PathBuf,
        /// Partition tree over the factors, e.g. "((1,2),(3,4))".
        #[arg(long)]
        tree: Option<String>,
        /// Also run the one-shot embedding and report the largest
        /// amplitude deviation.
        #[arg(long)]
        check_commute: bool,
        /// Write the embedded state here instead of stdout.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
    /// Polyhedral and toric-variety reports.
    Toric {
        #[command(subcommand)]
        sub: ToricCommand,
    },
    /// Write a named state family as a state JSON file.
    Family {
        /// ghz, w, product-basis, random-product, or random-dense.
        name: String,
        /// Qubit count.
        m: usize,
        /// Write the state here instead of stdout.
        #[arg(long, short)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum ToricCommand {
    /// The 2^m coordinate charts of (CP¹)^m.
    Atlas { m: usize },
    /// The degree-2 binomials of the hypercube toric ideal.
    Quadrics { m: usize },
    /// Sampled co-vanishing check of the toric ideal against the minors.
    Equiv {
        m: usize,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
    /// Dual of a simplicial full-dimensional cone.
    ConeDual {
        /// Cone JSON file.
        cone_file: PathBuf,
    },
    /// Strong convexity, and membership of an optional point.
    ConeCheck {
        /// Cone JSON file.
        cone_file: PathBuf,
        /// Comma-separated integer point, e.g. "2,1".
        #[arg(long)]
        point: Option<String>,
    },
    /// Lattice points of the cone inside a box.
    Support {
        /// Cone JSON file.
        cone_file: PathBuf,
        #[arg(long, default_value_t = 1)]
        bound: u32,
    },
}

/// An error carrying its process exit code.
struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<qsegre::Error> for CliError {
    fn from(error: qsegre::Error) -> Self {
        use qsegre::Error::*;
        let code = match &error {
            ZeroState | ZeroVector | ZeroFactor | UnnormalizedState { .. } => 3,
            NonSimplicialCone { .. } | GeneratorOverflow => 4,
            _ => 2,
        };
        Self {
            code,
            message: error.to_string(),
        }
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("cannot read {}: {e}", path.display())))
}

fn parse_point(text: &str) -> Result<Vec<i64>, CliError> {
    text.split(',')
        .map(|part| {
            part.trim()
                .parse::<i64>()
                .map_err(|e| CliError::input(format!("invalid point coordinate \"{part}\": {e}")))
        })
        .collect()
}

#[derive(Serialize)]
struct MeasureConfigJson {
    norm_const: f64,
    mode: &'static str,
}

#[derive(Serialize)]
struct AnalysisReportJson {
    m: usize,
    norm: f64,
    separable: bool,
    max_residual: f64,
    witness: BinomialJson,
    tolerance: f64,
    measure: f64,
    measure_config: MeasureConfigJson,
    elapsed_ms: f64,
}

#[derive(Serialize)]
struct EquivReportJson {
    m: usize,
    trials: usize,
    seed: u64,
    minor_tolerance: f64,
    derived_tolerance: f64,
    product_max_residual: f64,
    minor_vanishing_states: usize,
    covanishing_max_residual: f64,
    dense_max_minor_residual: f64,
    verdict: bool,
}

#[derive(Serialize)]
struct ConeCheckJson {
    strongly_convex: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    point: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    contains: Option<bool>,
}

fn emit(path: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match path {
        Some(path) => std::fs::write(path, contents.as_bytes())
            .map_err(|e| CliError::input(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{contents}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let text_mode = cli.text;
    match &cli.command {
        Command::Analyze { state_file } => {
            let started = Instant::now();
            let state = read_state(&read_file(state_file)?)?;
            let norm = state.norm();
            let normalized = state.normalize()?;
            let report = separability_report(&normalized, cli.tolerance)?;
            let config = MeasureConfig {
                norm_const: cli.norm_const,
                mode: cli.measure_mode.into(),
            };
            let measure = entanglement_measure(&normalized, &config)?;
            let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
            let json = AnalysisReportJson {
                m: normalized.m(),
                norm,
                separable: report.separable,
                max_residual: report.max_residual,
                witness: BinomialJson::from(&report.witness),
                tolerance: report.tolerance,
                measure,
                measure_config: MeasureConfigJson {
                    norm_const: cli.norm_const,
                    mode: match cli.measure_mode {
                        MeasureModeArg::Full => "full",
                        MeasureModeArg::MinorsOnly => "minors-only",
                    },
                },
                elapsed_ms,
            };
            if text_mode {
                let mut out = String::new();
                let _ = writeln!(out, "qubits:        {}", json.m);
                let _ = writeln!(out, "input norm:    {:.12}", json.norm);
                let _ = writeln!(out, "separable:     {}", json.separable);
                let _ = writeln!(out, "max residual:  {:.3e}", json.max_residual);
                let _ = writeln!(out, "witness:       {}", report.witness);
                let _ = writeln!(out, "tolerance:     {:.3e}", json.tolerance);
                let _ = writeln!(
                    out,
                    "measure:       {:.12} (norm const {}, {} mode)",
                    json.measure, cli.norm_const, json.measure_config.mode
                );
                let _ = write!(out, "elapsed:       {:.3} ms", json.elapsed_ms);
                println!("{out}");
            } else {
                println!("{}", serde_json::to_string_pretty(&json).expect("report serializes"));
            }
            Ok(())
        }
        Command::Embed {
            factors_file,
            tree,
            check_commute,
            out,
        } => {
            let factors = read_factors(&read_file(factors_file)?)?;
            let normalized: Vec<_> = factors.iter().map(|f| f.normalized()).collect();
            let state = match tree {
                Some(tree_text) => {
                    let tree = PartitionNode::parse(tree_text)?;
                    let vectors: Vec<Vec<num_complex::Complex64>> = normalized
                        .iter()
                        .map(|f| vec![f.a0(), f.a1()])
                        .collect();
                    compose_partition(&tree, &vectors)?
                }
                None => segre_embed(&normalized)?,
            };
            let state_text = write_state(&state);
            if *check_commute {
                let direct = segre_embed(&normalized)?;
                let max_deviation = max_amplitude_deviation(&state, &direct);
                emit(out.as_deref(), &state_text)?;
                if out.is_some() || text_mode {
                    if text_mode {
                        println!("max commute deviation: {max_deviation:.3e}");
                    } else {
                        println!("{{\"max_deviation\": {max_deviation:e}}}");
                    }
                } else {
                    // state already went to stdout; keep it schema-pure
                    eprintln!("max commute deviation: {max_deviation:.3e}");
                }
            } else {
                emit(out.as_deref(), &state_text)?;
            }
            Ok(())
        }
        Command::Toric { sub } => run_toric(cli, sub),
        Command::Family { name, m, out } => {
            let family: StateFamily = name.parse()?;
            let state = family_state(family, *m, cli.seed)?;
            if text_mode {
                println!("{state}");
                Ok(())
            } else {
                emit(out.as_deref(), &write_state(&state))
            }
        }
    }
}

fn run_toric(cli: &Cli, sub: &ToricCommand) -> Result<(), CliError> {
    match sub {
        ToricCommand::Atlas { m } => {
            let atlas = hypercube_atlas(*m)?;
            if cli.text {
                for (i, chart) in atlas.charts().iter().enumerate() {
                    println!("chart {:>3}: {chart}", i + 1);
                }
            } else {
                #[derive(Serialize)]
                struct AtlasJson {
                    m: usize,
                    charts: Vec<Vec<i64>>,
                }
                let json = AtlasJson {
                    m: atlas.m(),
                    charts: atlas.charts().iter().map(|c| c.signs().to_vec()).collect(),
                };
                println!("{}", serde_json::to_string_pretty(&json).expect("atlas serializes"));
            }
            Ok(())
        }
        ToricCommand::Quadrics { m } => {
            let quadrics = toric_ideal_quadrics(*m)?;
            if cli.text {
                for q in &quadrics {
                    println!("{q}");
                }
            } else {
                println!("{}", write_binomials(&quadrics));
            }
            Ok(())
        }
        ToricCommand::Equiv { m, trials } => {
            let report =
                ideal_equivalence_report(*m, *trials, cli.seed.unwrap_or(0), cli.tolerance)?;
            if cli.text {
                println!("m:                        {}", report.m);
                println!("trials per family:        {}", report.trials);
                println!("product max residual:     {:.3e}", report.product_max_residual);
                println!("minor-vanishing states:   {}", report.minor_vanishing_states);
                println!("co-vanishing residual:    {:.3e}", report.covanishing_max_residual);
                println!("dense max minor residual: {:.3e}", report.dense_max_minor_residual);
                println!("verdict:                  {}", report.verdict);
            } else {
                let json = EquivReportJson {
                    m: report.m,
                    trials: report.trials,
                    seed: report.seed,
                    minor_tolerance: report.minor_tolerance,
                    derived_tolerance: report.derived_tolerance,
                    product_max_residual: report.product_max_residual,
                    minor_vanishing_states: report.minor_vanishing_states,
                    covanishing_max_residual: report.covanishing_max_residual,
                    dense_max_minor_residual: report.dense_max_minor_residual,
                    verdict: report.verdict,
                };
                println!("{}", serde_json::to_string_pretty(&json).expect("report serializes"));
            }
            Ok(())
        }
        ToricCommand::ConeDual { cone_file } => {
            let cone = read_cone(&read_file(cone_file)?)?;
            let dual = cone.dual()?;
            if cli.text {
                println!("dual generators: {:?}", dual.generators());
            } else {
                let json = ConeJson::from_cone(&dual);
                println!("{}", serde_json::to_string_pretty(&json).expect("cone serializes"));
            }
            Ok(())
        }
        ToricCommand::ConeCheck { cone_file, point } => {
            let cone = read_cone(&read_file(cone_file)?)?;
            let parsed_point = point.as_deref().map(parse_point).transpose()?;
            let contains = parsed_point
                .as_deref()
                .map(|p| cone.contains(p))
                .transpose()?;
            let strongly_convex = cone.is_strongly_convex();
            if cli.text {
                println!("strongly convex: {strongly_convex}");
                if let (Some(p), Some(c)) = (&parsed_point, contains) {
                    println!("contains {p:?}: {c}");
                }
            } else {
                let json = ConeCheckJson {
                    strongly_convex,
                    point: parsed_point,
                    contains,
                };
                println!("{}", serde_json::to_string_pretty(&json).expect("check serializes"));
            }
            Ok(())
        }
        ToricCommand::Support { cone_file, bound } => {
            let cone = read_cone(&read_file(cone_file)?)?;
            let points = cone.lattice_support(*bound)?;
            if cli.text {
                for p in &points {
                    println!("{p:?}");
                }
            } else {
                #[derive(Serialize)]
                struct SupportJson {
                    bound: u32,
                    points: Vec<Vec<i64>>,
                }
                let json = SupportJson {
                    bound: *bound,
                    points,
                };
                println!("{}", serde_json::to_string_pretty(&json).expect("support serializes"));
            }
            Ok(())
        }
    }
}

fn max_amplitude_deviation(a: &MultiQubitState, b: &MultiQubitState) -> f64 {
    (0..a.dim())
        .map(|rank| (a.amplitude_at_rank(rank) - b.amplitude_at_rank(rank)).norm())
        .fold(0.0, f64::max)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(error) => {
            eprintln!("error: {}", error.message);
            ExitCode::from(error.code)
        }
    }
}
