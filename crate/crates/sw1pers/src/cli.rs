//! Command-line drivers: scoring, diagram export, synthetic dataset
//! generation, ROC/AUC evaluation, and ranking.
//!
//! Exit codes: 0 success, 1 usage error, 2 data error.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::baseline;
use crate::denoise::{MeanShiftParams, MeanShiftRule};
use crate::embedding;
use crate::persistence::{self, FieldPrime};
use crate::rips;
use crate::scoring::{self, ScoreConfig};
use crate::signal::{self, SampledSignal, Shape};

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Data(m) => f.write_str(m),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
        }
    }

    fn data(err: impl std::fmt::Display) -> Self {
        CliError::Data(err.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "sw1pers",
    about = "Quantify periodicity in sampled signals via sliding-window embeddings and 1-dimensional persistence",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Score signals: CSV files or a synthesized waveform.
    Score(ScoreArgs),
    /// Emit the persistence diagram of a signal's embedded cloud as JSON.
    Diagram(DiagramArgs),
    /// Generate a labeled synthetic dataset of CSV signals.
    Synth(SynthArgs),
    /// ROC curves and AUC over a labeled dataset, per method.
    Roc(RocArgs),
    /// Rank signals by periodicity score, most periodic first.
    Rank(RankArgs),
}

#[derive(Args, Debug, Clone)]
struct PipelineOpts {
    /// Fourier degree N; the embedding dimension is 2N + 1.
    #[arg(long = "N", default_value_t = 10)]
    n: usize,
    /// Homology coefficient prime p (must exceed N).
    #[arg(long, default_value_t = 11)]
    field: u32,
    /// Period counts to sweep, e.g. --L 2,3,4.
    #[arg(long = "L", value_delimiter = ',', num_args = 1..)]
    l: Option<Vec<usize>>,
    /// Base points in the embedded cloud.
    #[arg(long, default_value_t = 200)]
    cloud_size: usize,
    /// Moving-average window (odd number of samples).
    #[arg(long, default_value_t = 7)]
    ma_window: usize,
    /// Mean-shift neighborhood parameter.
    #[arg(long, default_value_t = (std::f64::consts::PI / 16.0).cos())]
    meanshift_eps: f64,
    /// Neighbor rule: `similarity` accepts 1 - x.y < eps, `angular` accepts x.y > eps.
    #[arg(long, value_enum, default_value_t = RuleArg::Similarity)]
    meanshift_rule: RuleArg,
    #[arg(long, default_value_t = 1)]
    meanshift_iterations: usize,
    /// Skip the moving average and mean-shift passes.
    #[arg(long)]
    no_denoise: bool,
    /// Rips entry-time cap.
    #[arg(long, default_value_t = 2.0)]
    threshold: f64,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum RuleArg {
    Similarity,
    Angular,
}

impl PipelineOpts {
    fn build(&self, default_l: &[usize]) -> Result<ScoreConfig, CliError> {
        let field = FieldPrime::new(self.field)
            .map_err(|e| CliError::Usage(format!("--field: {e}")))?;
        Ok(ScoreConfig {
            n: self.n,
            field,
            l_set: self.l.clone().unwrap_or_else(|| default_l.to_vec()),
            cloud_size: self.cloud_size,
            ma_window: self.ma_window,
            mean_shift: MeanShiftParams {
                epsilon: self.meanshift_eps,
                iterations: self.meanshift_iterations,
                rule: match self.meanshift_rule {
                    RuleArg::Similarity => MeanShiftRule::Similarity,
                    RuleArg::Angular => MeanShiftRule::Angular,
                },
            },
            denoise: !self.no_denoise,
            threshold: self.threshold,
        })
    }

    fn config(&self, default_l: &[usize]) -> Result<ScoreConfig, CliError> {
        let config = self.build(default_l)?;
        config
            .validate()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(config)
    }

    /// Diagram inspection accepts any prime (p <= N included), so only the
    /// pipeline parameters are validated.
    fn diagram_config(&self, default_l: &[usize]) -> Result<ScoreConfig, CliError> {
        let config = self.build(default_l)?;
        config
            .validate_pipeline()
            .map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(config)
    }
}

#[derive(Args, Debug)]
struct SynthSpec {
    /// Synthesize this shape instead of reading files.
    #[arg(long)]
    synth: Option<String>,
    #[arg(long, default_value_t = 0.0)]
    phase: f64,
    /// Noise standard deviation as a fraction of the signal amplitude.
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Args, Debug)]
struct ScoreArgs {
    /// Input CSV files (time,value per row).
    inputs: Vec<PathBuf>,
    #[command(flatten)]
    synth: SynthSpec,
    #[command(flatten)]
    pipeline: PipelineOpts,
    /// Tabular output instead of JSON.
    #[arg(long)]
    csv: bool,
}

#[derive(Args, Debug)]
struct DiagramArgs {
    /// Input CSV file.
    input: Option<PathBuf>,
    #[command(flatten)]
    synth: SynthSpec,
    /// Homology dimension of the emitted diagram.
    #[arg(long, default_value_t = 1)]
    dim: usize,
    #[command(flatten)]
    pipeline: PipelineOpts,
    /// Dump the filtration (`dim t v0 v1 [v2]` per line) to this path.
    #[arg(long)]
    dump_filtration: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct SynthArgs {
    /// Shape name, or `all` for the six benchmark shapes.
    #[arg(long)]
    shape: String,
    /// Profiles per shape, phase-stepped across one period.
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    #[arg(long, default_value_t = 50)]
    samples: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output directory; receives one CSV per profile plus manifest.csv.
    #[arg(long)]
    out: PathBuf,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum Method {
    Sw1pers,
    Lombscargle,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Sw1pers => "sw1pers",
            Method::Lombscargle => "lombscargle",
        }
    }
}

#[derive(Args, Debug)]
struct RocArgs {
    /// Dataset directory containing manifest.csv.
    #[arg(long)]
    dataset: PathBuf,
    /// Methods to evaluate.
    #[arg(long, value_enum, num_args = 1.., value_delimiter = ',', default_values_t = [Method::Sw1pers])]
    method: Vec<Method>,
    #[command(flatten)]
    pipeline: PipelineOpts,
    /// Write ROC curve points (method,shape,fpr,tpr) to this CSV.
    #[arg(long)]
    roc_csv: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RankArgs {
    /// Input CSV files.
    inputs: Vec<PathBuf>,
    #[command(flatten)]
    pipeline: PipelineOpts,
    #[arg(long)]
    csv: bool,
}

/// Entry point used by the binary; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Score(args) => cmd_score(args),
        Command::Diagram(args) => cmd_diagram(args),
        Command::Synth(args) => cmd_synth(args),
        Command::Roc(args) => cmd_roc(args),
        Command::Rank(args) => cmd_rank(args),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn load_inputs(
    inputs: &[PathBuf],
    synth: &SynthSpec,
) -> Result<Vec<(String, SampledSignal)>, CliError> {
    let mut signals = Vec::new();
    if let Some(shape) = &synth.synth {
        let shape: Shape = shape
            .parse()
            .map_err(|e| CliError::Usage(format!("--synth: {e}")))?;
        let s = signal::synth(shape, synth.phase, synth.noise, synth.samples, synth.seed)
            .map_err(CliError::data)?;
        signals.push((format!("synth:{shape}"), s));
    }
    for path in inputs {
        let s = SampledSignal::read_csv(path).map_err(CliError::data)?;
        signals.push((path.display().to_string(), s));
    }
    if signals.is_empty() {
        return Err(CliError::Usage(
            "no inputs: pass CSV files or --synth <shape>".into(),
        ));
    }
    Ok(signals)
}

#[derive(Serialize)]
struct ScoreRecord<'a> {
    input: &'a str,
    score: f64,
    best_l: usize,
    per_l: &'a [scoring::LBreakdown],
}

fn cmd_score(args: ScoreArgs) -> Result<(), CliError> {
    let config = args.pipeline.config(&[2, 3, 4])?;
    let signals = load_inputs(&args.inputs, &args.synth)?;
    let scores: Vec<scoring::Score> = signals
        .par_iter()
        .map(|(_, s)| scoring::score(s, &config))
        .collect::<Result<_, _>>()
        .map_err(CliError::data)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if args.csv {
        writeln!(out, "input,score,best_l").map_err(CliError::data)?;
        for ((name, _), score) in signals.iter().zip(&scores) {
            writeln!(out, "{name},{},{}", score.value, score.best_l).map_err(CliError::data)?;
        }
    } else {
        let records: Vec<ScoreRecord> = signals
            .iter()
            .zip(&scores)
            .map(|((name, _), score)| ScoreRecord {
                input: name,
                score: score.value,
                best_l: score.best_l,
                per_l: &score.per_l,
            })
            .collect();
        serde_json::to_writer_pretty(&mut out, &records).map_err(CliError::data)?;
        writeln!(out).map_err(CliError::data)?;
    }
    Ok(())
}

fn cmd_diagram(args: DiagramArgs) -> Result<(), CliError> {
    if args.dim > 1 {
        return Err(CliError::Usage("--dim must be 0 or 1".into()));
    }
    let config = args.pipeline.diagram_config(&[2])?;
    let l = config.l_set[0];
    let inputs: Vec<PathBuf> = args.input.iter().cloned().collect();
    let signals = load_inputs(&inputs, &args.synth)?;
    let (_, signal) = &signals[0];

    let cloud = scoring::embed_signal(signal, &config, l).map_err(CliError::data)?;
    let homology = match cloud {
        Some(cloud) => {
            let complex = rips::build_rips(&rips::pairwise_distances(&cloud), 2, config.threshold)
                .map_err(CliError::data)?;
            if let Some(path) = &args.dump_filtration {
                let file = std::fs::File::create(path).map_err(CliError::data)?;
                complex
                    .dump(std::io::BufWriter::new(file))
                    .map_err(CliError::data)?;
            }
            persistence::compute_persistence(&complex, config.field).map_err(CliError::data)?
        }
        None => persistence::Homology {
            h0: persistence::PersistenceDiagram::empty(0, config.field.value()),
            h1: persistence::PersistenceDiagram::empty(1, config.field.value()),
            edge_count: 0,
        },
    };
    let dgm = if args.dim == 0 { &homology.h0 } else { &homology.h1 };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    serde_json::to_writer_pretty(&mut out, dgm).map_err(CliError::data)?;
    writeln!(out).map_err(CliError::data)?;
    Ok(())
}

/// One labeled dataset row; `label` is `periodic` or `nonperiodic`.
#[derive(Debug, Clone, Serialize)]
pub struct DatasetEntry {
    pub file: String,
    pub shape: Shape,
    pub label: &'static str,
    pub phase: f64,
    pub noise: f64,
    pub seed: u64,
}

impl Shape {
    fn label(self) -> &'static str {
        if self.is_periodic() {
            "periodic"
        } else {
            "nonperiodic"
        }
    }
}

impl Serialize for Shape {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Writes `count` phase-stepped noisy profiles per shape into `dir`, one CSV
/// each, plus a `manifest.csv` with labels. Profile `j` of a shape gets
/// phase `j * 2pi / count` and seed `seed + j`, so a fixed seed reproduces
/// the dataset exactly.
pub fn synth_dataset(
    dir: &Path,
    shapes: &[Shape],
    count: usize,
    noise: f64,
    samples: usize,
    seed: u64,
) -> Result<Vec<DatasetEntry>, CliError> {
    std::fs::create_dir_all(dir).map_err(CliError::data)?;
    let mut entries = Vec::new();
    let mut profile_seed = seed;
    for &shape in shapes {
        for j in 0..count {
            let phase = signal::TWO_PI * j as f64 / count as f64;
            let s = signal::synth(shape, phase, noise, samples, profile_seed)
                .map_err(CliError::data)?;
            let file = format!("{}_{j:03}.csv", shape.name());
            let f = std::fs::File::create(dir.join(&file)).map_err(CliError::data)?;
            s.write_csv(std::io::BufWriter::new(f)).map_err(CliError::data)?;
            entries.push(DatasetEntry {
                file,
                shape,
                label: shape.label(),
                phase,
                noise,
                seed: profile_seed,
            });
            profile_seed = profile_seed.wrapping_add(1);
        }
    }
    let manifest = std::fs::File::create(dir.join("manifest.csv")).map_err(CliError::data)?;
    let mut w = std::io::BufWriter::new(manifest);
    writeln!(w, "file,shape,label,phase,noise,seed").map_err(CliError::data)?;
    for e in &entries {
        writeln!(
            w,
            "{},{},{},{},{},{}",
            e.file, e.shape, e.label, e.phase, e.noise, e.seed
        )
        .map_err(CliError::data)?;
    }
    Ok(entries)
}

fn cmd_synth(args: SynthArgs) -> Result<(), CliError> {
    let shapes: Vec<Shape> = if args.shape.eq_ignore_ascii_case("all") {
        Shape::BENCHMARK.to_vec()
    } else {
        vec![args
            .shape
            .parse()
            .map_err(|e| CliError::Usage(format!("--shape: {e}")))?]
    };
    let entries = synth_dataset(
        &args.out,
        &shapes,
        args.count,
        args.noise,
        args.samples,
        args.seed,
    )?;
    eprintln!(
        "wrote {} profiles across {} shape(s) to {}",
        entries.len(),
        shapes.len(),
        args.out.display()
    );
    Ok(())
}

/// Loads a labeled dataset written by [`synth_dataset`]. Fails when the
/// manifest is missing: ROC evaluation cannot label signals on its own.
pub fn read_dataset(dir: &Path) -> Result<Vec<(DatasetEntry, SampledSignal)>, CliError> {
    let manifest = dir.join("manifest.csv");
    if !manifest.exists() {
        return Err(CliError::Data(format!(
            "missing labels: {} not found",
            manifest.display()
        )));
    }
    let text = std::fs::read_to_string(&manifest).map_err(CliError::data)?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        if lineno == 0 || line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 6 {
            return Err(CliError::Data(format!(
                "{}:{}: expected 6 fields",
                manifest.display(),
                lineno + 1
            )));
        }
        let shape: Shape = fields[1].parse().map_err(CliError::data)?;
        let parse_f = |s: &str| -> Result<f64, CliError> {
            s.parse().map_err(|_| {
                CliError::Data(format!(
                    "{}:{}: bad number `{s}`",
                    manifest.display(),
                    lineno + 1
                ))
            })
        };
        let entry = DatasetEntry {
            file: fields[0].to_string(),
            shape,
            label: shape.label(),
            phase: parse_f(fields[3])?,
            noise: parse_f(fields[4])?,
            seed: fields[5].parse().unwrap_or(0),
        };
        let signal = SampledSignal::read_csv(dir.join(&entry.file)).map_err(CliError::data)?;
        out.push((entry, signal));
    }
    if out.is_empty() {
        return Err(CliError::Data("dataset manifest has no rows".into()));
    }
    Ok(out)
}

// ---------------------------------------------------------------------------
// ROC / AUC
// ---------------------------------------------------------------------------

/// ROC curve as (FPR, TPR) points swept over every score threshold, ties
/// grouped, endpoints included.
pub fn roc_points(positives: &[f64], negatives: &[f64]) -> Vec<(f64, f64)> {
    assert!(
        !positives.is_empty() && !negatives.is_empty(),
        "ROC needs both classes"
    );
    let mut all: Vec<(f64, bool)> = positives
        .iter()
        .map(|&s| (s, true))
        .chain(negatives.iter().map(|&s| (s, false)))
        .collect();
    all.sort_by(|a, b| b.0.total_cmp(&a.0)); // descending score
    let np = positives.len() as f64;
    let nn = negatives.len() as f64;
    let mut points = vec![(0.0, 0.0)];
    let (mut tp, mut fp) = (0.0, 0.0);
    let mut prev = f64::INFINITY;
    for (s, is_pos) in all {
        if s != prev {
            points.push((fp / nn, tp / np));
            prev = s;
        }
        if is_pos {
            tp += 1.0;
        } else {
            fp += 1.0;
        }
    }
    points.push((1.0, 1.0));
    points.dedup();
    points
}

/// Trapezoidal area under an ROC curve.
pub fn auc(points: &[(f64, f64)]) -> f64 {
    points
        .windows(2)
        .map(|w| (w[1].0 - w[0].0) * (w[1].1 + w[0].1) / 2.0)
        .sum()
}

pub fn roc_auc(positives: &[f64], negatives: &[f64]) -> f64 {
    auc(&roc_points(positives, negatives))
}

#[derive(Serialize)]
struct ShapeRoc {
    shape: String,
    auc: f64,
    positives: usize,
    negatives: usize,
}

#[derive(Serialize)]
struct MethodRoc {
    method: &'static str,
    per_shape: Vec<ShapeRoc>,
    pooled_auc: f64,
}

fn method_scores(
    method: Method,
    data: &[(DatasetEntry, SampledSignal)],
    config: &ScoreConfig,
) -> Result<Vec<f64>, CliError> {
    match method {
        Method::Sw1pers => data
            .par_iter()
            .map(|(_, s)| scoring::score(s, config).map(|sc| sc.value))
            .collect::<Result<_, _>>()
            .map_err(CliError::data),
        Method::Lombscargle => Ok(data.par_iter().map(|(_, s)| baseline::ls_score(s)).collect()),
    }
}

/// One evaluated shape: its name, ROC curve points, and AUC.
pub type ShapeCurve = (String, Vec<(f64, f64)>, f64);

/// Per-shape ROC evaluation: each periodic shape's profiles are the
/// positives, all non-periodic profiles are the negatives.
pub fn evaluate_roc(
    data: &[(DatasetEntry, SampledSignal)],
    scores: &[f64],
) -> Vec<ShapeCurve> {
    let negatives: Vec<f64> = data
        .iter()
        .zip(scores)
        .filter(|((e, _), _)| !e.shape.is_periodic())
        .map(|(_, &s)| s)
        .collect();
    let mut shapes: Vec<Shape> = Vec::new();
    for (e, _) in data {
        if e.shape.is_periodic() && !shapes.contains(&e.shape) {
            shapes.push(e.shape);
        }
    }
    let mut out = Vec::new();
    for shape in shapes {
        let positives: Vec<f64> = data
            .iter()
            .zip(scores)
            .filter(|((e, _), _)| e.shape == shape)
            .map(|(_, &s)| s)
            .collect();
        let points = roc_points(&positives, &negatives);
        let area = auc(&points);
        out.push((shape.name().to_string(), points, area));
    }
    out
}

fn cmd_roc(args: RocArgs) -> Result<(), CliError> {
    let config = args.pipeline.config(&[2])?;
    let data = read_dataset(&args.dataset)?;
    if !data.iter().any(|(e, _)| !e.shape.is_periodic()) {
        return Err(CliError::Data(
            "dataset has no non-periodic profiles to use as negatives".into(),
        ));
    }

    let mut reports = Vec::new();
    let mut curve_rows: Vec<(String, String, f64, f64)> = Vec::new();
    for &method in &args.method {
        let scores = method_scores(method, &data, &config)?;
        let per_shape = evaluate_roc(&data, &scores);
        let positives: Vec<f64> = data
            .iter()
            .zip(&scores)
            .filter(|((e, _), _)| e.shape.is_periodic())
            .map(|(_, &s)| s)
            .collect();
        let negatives: Vec<f64> = data
            .iter()
            .zip(&scores)
            .filter(|((e, _), _)| !e.shape.is_periodic())
            .map(|(_, &s)| s)
            .collect();
        let pooled = roc_auc(&positives, &negatives);
        let mut shape_reports = Vec::new();
        for (shape, points, area) in per_shape {
            for &(fpr, tpr) in &points {
                curve_rows.push((method.name().to_string(), shape.clone(), fpr, tpr));
            }
            let shape_count = data
                .iter()
                .filter(|(e, _)| e.shape.name() == shape)
                .count();
            shape_reports.push(ShapeRoc {
                shape,
                auc: area,
                positives: shape_count,
                negatives: negatives.len(),
            });
        }
        reports.push(MethodRoc {
            method: method.name(),
            per_shape: shape_reports,
            pooled_auc: pooled,
        });
    }

    if let Some(path) = &args.roc_csv {
        let f = std::fs::File::create(path).map_err(CliError::data)?;
        let mut w = std::io::BufWriter::new(f);
        writeln!(w, "method,shape,fpr,tpr").map_err(CliError::data)?;
        for (m, s, fpr, tpr) in &curve_rows {
            writeln!(w, "{m},{s},{fpr},{tpr}").map_err(CliError::data)?;
        }
    }

    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    serde_json::to_writer_pretty(&mut out, &reports).map_err(CliError::data)?;
    writeln!(out).map_err(CliError::data)?;
    Ok(())
}

fn cmd_rank(args: RankArgs) -> Result<(), CliError> {
    if args.inputs.is_empty() {
        return Err(CliError::Usage("rank needs at least one input CSV".into()));
    }
    let config = args.pipeline.config(&[2, 3, 4])?;
    let mut names = Vec::new();
    let mut signals = Vec::new();
    for path in &args.inputs {
        names.push(path.display().to_string());
        signals.push(SampledSignal::read_csv(path).map_err(CliError::data)?);
    }
    let ranked = scoring::rank(&signals, &config).map_err(CliError::data)?;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    if args.csv {
        writeln!(out, "rank,input,score,best_l").map_err(CliError::data)?;
        for (position, (idx, score)) in ranked.iter().enumerate() {
            writeln!(
                out,
                "{},{},{},{}",
                position + 1,
                names[*idx],
                score.value,
                score.best_l
            )
            .map_err(CliError::data)?;
        }
    } else {
        #[derive(Serialize)]
        struct Row<'a> {
            rank: usize,
            input: &'a str,
            score: f64,
            best_l: usize,
        }
        let rows: Vec<Row> = ranked
            .iter()
            .enumerate()
            .map(|(position, (idx, score))| Row {
                rank: position + 1,
                input: &names[*idx],
                score: score.value,
                best_l: score.best_l,
            })
            .collect();
        serde_json::to_writer_pretty(&mut out, &rows).map_err(CliError::data)?;
        writeln!(out).map_err(CliError::data)?;
    }
    Ok(())
}

/// Embeds a trigonometric polynomial directly (no spline step) and returns
/// the persistence of the centered, normalized cloud: the analytic pipeline
/// used by diagnostics and several examples.
pub fn trig_pipeline(
    trig: &crate::signal::TrigPolynomial,
    params: embedding::WindowParams,
    sample_count: usize,
    field: FieldPrime,
) -> Result<persistence::Homology, CliError> {
    let base = embedding::circle_grid(sample_count);
    let cloud =
        embedding::sliding_window(|t| trig.eval(t), params, &base).map_err(CliError::data)?;
    let normalized =
        embedding::normalize(&embedding::center(&cloud)).map_err(CliError::data)?;
    persistence::cloud_persistence(&normalized, 2.0, field).map_err(CliError::data)
}
