//! Subcommands.
//!
//! Each command resolves its flags, runs the computation and returns an
//! [`Output`]: the run record, an optional tidy table and the text for stdout.
//! Nothing is written until [`Output::emit`].

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use gqaoa_core::analytics::draws::MAX_EXACT_GROUND;
use gqaoa_core::analytics::{
    expected_draws_exact, expected_draws_mc, sample, synthetic_fairness, Distribution, FairnessConfig,
    ShotsToRejectConfig,
};
use gqaoa_core::compiler::{
    compile_grover_mixer, compile_phase_separator, grover_mixer_unitary, phase_separator_unitary,
    sequence_unitary_deviation, MAX_COMPILE_QUBITS,
};
use gqaoa_core::graphs::Graph;
use gqaoa_core::problems::{DiagonalHamiltonian, ProblemKind, WeightTable};
use gqaoa_core::qaoa::{
    expectation_energy, ground_state_probability, optimize_parameters, paper_parameters, run_qaoa, MixerSpec,
    OptimizerConfig, PaperVariant, QaoaParams,
};

use crate::circuit_text::write_circuit;
use crate::graph_file::{resolve_graph, GraphIdentity};
use crate::report::{write_versioned, MixerRecord, ParamsRecord, RunRecord, Table};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(name = "gqaoa", version, about = "Exact-simulation QAOA and Grover-mixer QAOA experiments")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the protocol at given angles and report ground-state probabilities.
    Solve(SolveArgs),
    /// Search for angles minimising the energy expectation.
    Optimize(OptimizeArgs),
    /// Shots-to-reject, KL divergence and draw counts on synthetic data.
    Fairness(FairnessArgs),
    /// Expected draws until `n_g` distinct ground states are seen.
    Draws(DrawsArgs),
    /// Lower a phase separator or Grover mixer to native gates.
    Compile(CompileArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProblemArg {
    Maxcut,
    Edgecover,
}

impl From<ProblemArg> for ProblemKind {
    fn from(p: ProblemArg) -> Self {
        match p {
            ProblemArg::Maxcut => ProblemKind::MaxCut,
            ProblemArg::Edgecover => ProblemKind::EdgeCover,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MixerArg {
    Transverse,
    Grover,
}

#[derive(Debug, Clone, Args)]
pub struct ProblemArgs {
    /// Preset name (triangle, square, paw) or path to a graph file.
    #[arg(long)]
    pub graph: String,
    #[arg(long, value_enum, default_value = "edgecover")]
    pub problem: ProblemArg,
    #[arg(long, value_enum, default_value = "transverse")]
    pub mixer: MixerArg,
    /// Grover weight parameter; defaults to the graph file's `q`, else 0.5.
    #[arg(long)]
    pub q: Option<f64>,
    /// Number of rounds.
    #[arg(long, default_value_t = 1)]
    pub p: usize,
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Also write the JSON record here; existing files get a numbered sibling.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Also write the tidy CSV table here, versioned like `--out`.
    #[arg(long)]
    pub csv: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct SolveArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// `paper`, or comma-separated radians `α1,β1,α2,β2,…`.
    #[arg(long, allow_hyphen_values = true)]
    pub params: String,
    /// Measurement shots to sample; 0 skips sampling.
    #[arg(long, default_value_t = 0)]
    pub shots: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct OptimizeArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    #[arg(long, default_value_t = 50)]
    pub starts: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DataArg {
    /// Finite-shot samples from the ideal distribution.
    Synthetic,
    /// The ideal distribution itself.
    Exact,
}

#[derive(Debug, Clone, Args)]
pub struct FairnessArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// `paper`, or comma-separated radians `α1,β1,α2,β2,…`.
    #[arg(long, allow_hyphen_values = true)]
    pub params: String,
    #[arg(long, default_value_t = 4000)]
    pub shots: u64,
    #[arg(long, default_value_t = 0.05)]
    pub significance: f64,
    /// Test sets per sample size in the shots-to-reject search.
    #[arg(long, default_value_t = 1000)]
    pub sets: usize,
    #[arg(long, default_value_t = 10)]
    pub repeats: usize,
    #[arg(long, default_value_t = 300)]
    pub kl_resamples: usize,
    /// Monte Carlo episodes per row of the draws table.
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    /// Largest sample size tried by the shots-to-reject search.
    #[arg(long, default_value_t = 1 << 26)]
    pub max_shots: u64,
    #[arg(long, value_enum, default_value = "synthetic")]
    pub data: DataArg,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Args)]
pub struct DrawsArgs {
    #[command(flatten)]
    pub problem: ProblemArgs,
    /// Angles of the protocol whose output is sampled.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "baseline", conflicts_with = "baseline")]
    pub params: Option<String>,
    /// Sample uniformly over all outcomes (random guessing) instead.
    #[arg(long)]
    pub baseline: bool,
    /// `all` (2 to the ground-set size) or a comma-separated list.
    #[arg(long, default_value = "all")]
    pub ng: String,
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TargetArg {
    Separator,
    GroverMixer,
}

#[derive(Debug, Clone, Args)]
pub struct CompileArgs {
    /// Preset name (triangle, square, paw) or path to a graph file.
    #[arg(long)]
    pub graph: String,
    #[arg(long, value_enum, default_value = "edgecover")]
    pub problem: ProblemArg,
    #[arg(long, value_enum)]
    pub target: TargetArg,
    /// Separator angle, radians.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Mixer angle, radians.
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<f64>,
    /// Grover weight parameter for `grover-mixer`; defaults to the graph file's `q`, else 0.5.
    #[arg(long)]
    pub q: Option<f64>,
    /// Allow one ancilla qubit (needed for four-qubit Grover mixers).
    #[arg(long)]
    pub ancilla: bool,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// What a command produced.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub record: RunRecord,
    pub table: Option<Table>,
    pub stdout: String,
    pub exit_code: i32,
    pub out: Option<PathBuf>,
    pub csv: Option<PathBuf>,
}

impl Output {
    fn new(record: RunRecord, table: Option<Table>, output: &OutputArgs) -> Self {
        let stdout = record.to_json();
        Self { record, table, stdout, exit_code: 0, out: output.out.clone(), csv: output.csv.clone() }
    }

    /// Prints stdout and writes the requested files; returns the exit code.
    pub fn emit(&self) -> Result<i32, CliError> {
        print!("{}", self.stdout);
        if let Some(path) = &self.out {
            let written = write_versioned(path, &self.record.to_json())?;
            eprintln!("wrote {}", written.display());
        }
        if let Some(path) = &self.csv {
            let table =
                self.table.as_ref().ok_or_else(|| CliError::Usage("this command has no table output".into()))?;
            let written = write_versioned(path, &table.to_csv())?;
            eprintln!("wrote {}", written.display());
        }
        Ok(self.exit_code)
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Solve(a) => cmd_solve(a),
        Command::Optimize(a) => cmd_optimize(a),
        Command::Fairness(a) => cmd_fairness(a),
        Command::Draws(a) => cmd_draws(a),
        Command::Compile(a) => cmd_compile(a),
    }
}

/// Everything the protocol-based commands share.
struct Setup {
    identity: GraphIdentity,
    kind: ProblemKind,
    h: DiagonalHamiltonian,
    mixer: MixerSpec,
    p: usize,
}

impl Setup {
    fn resolve(args: &ProblemArgs) -> Result<Self, CliError> {
        let (graph, identity) = resolve_graph(&args.graph)?;
        let kind = ProblemKind::from(args.problem);
        let mixer = resolve_mixer(args.mixer, args.q, &graph)?;
        if args.p == 0 {
            return Err(CliError::Usage("--p must be at least 1".into()));
        }
        let h = DiagonalHamiltonian::build(&graph, kind)?;
        Ok(Self { identity, kind, h, mixer, p: args.p })
    }

    fn record(&self, command: &'static str, result: Value) -> RunRecord {
        let mut r = RunRecord::new(command, self.identity.clone(), self.kind.name(), result);
        r.mixer = Some(mixer_record(&self.mixer));
        r.p = Some(self.p);
        r
    }

    fn params(&self, spec: &str) -> Result<(QaoaParams, ParamsRecord), CliError> {
        if spec.trim() == "paper" {
            let Some(preset) = self.identity.preset() else {
                return Err(CliError::Usage("`--params paper` needs a preset graph".into()));
            };
            let variant = match self.mixer {
                MixerSpec::Transverse => PaperVariant::Standard,
                MixerSpec::Grover { q: 0.5 } => PaperVariant::Grover,
                m if PaperVariant::WeightedGrover.mixer(preset) == m => PaperVariant::WeightedGrover,
                MixerSpec::Grover { q } => {
                    return Err(gqaoa_core::Error::UnlistedParameters(format!(
                        "{preset} with the grover mixer at q = {q}"
                    ))
                    .into())
                }
            };
            let published = paper_parameters(preset, self.kind, variant, self.p)?;
            let applied = self.mixer.from_published(&published);
            let record = ParamsRecord {
                source: "paper",
                alphas: applied.alphas().to_vec(),
                betas: applied.betas().to_vec(),
                published_betas: Some(published.betas().to_vec()),
            };
            return Ok((applied, record));
        }
        let angles = parse_list::<f64>(spec, "--params")?;
        if angles.len() != 2 * self.p {
            return Err(CliError::Usage(format!(
                "--params needs 2p = {} comma-separated angles, got {}",
                2 * self.p,
                angles.len()
            )));
        }
        let params = QaoaParams::from_interleaved(&angles)?;
        let record = ParamsRecord {
            source: "explicit",
            alphas: params.alphas().to_vec(),
            betas: params.betas().to_vec(),
            published_betas: None,
        };
        Ok((params, record))
    }

    fn bits(&self, x: usize) -> String {
        bitstring(x, self.h.num_qubits())
    }

    fn key(&self) -> [String; 4] {
        [self.identity.key(), self.kind.name().into(), mixer_label(&self.mixer), self.p.to_string()]
    }
}

fn resolve_mixer(mixer: MixerArg, q: Option<f64>, graph: &Graph) -> Result<MixerSpec, CliError> {
    match mixer {
        MixerArg::Transverse if q.is_some() => Err(CliError::Usage("--q only applies to the grover mixer".into())),
        MixerArg::Transverse => Ok(MixerSpec::Transverse),
        MixerArg::Grover => Ok(MixerSpec::grover(q.or(graph.weight_q()).unwrap_or(0.5))?),
    }
}

fn mixer_record(m: &MixerSpec) -> MixerRecord {
    match *m {
        MixerSpec::Transverse => MixerRecord { kind: "transverse", q: None },
        MixerSpec::Grover { q } => MixerRecord { kind: "grover", q: Some(q) },
    }
}

fn mixer_label(m: &MixerSpec) -> String {
    match *m {
        MixerSpec::Transverse => "transverse".into(),
        MixerSpec::Grover { q } => format!("grover-q{q}"),
    }
}

/// Qubit 0 first.
pub fn bitstring(x: usize, n: usize) -> String {
    (0..n).map(|i| if x >> i & 1 == 1 { '1' } else { '0' }).collect()
}

fn parse_list<T: std::str::FromStr>(spec: &str, flag: &str) -> Result<Vec<T>, CliError> {
    spec.split(',')
        .map(|s| s.trim().parse::<T>().map_err(|_| CliError::Usage(format!("{flag}: `{}` is not a number", s.trim()))))
        .collect()
}

fn with_key(key: &[String; 4], rest: Vec<String>) -> Vec<String> {
    key.iter().cloned().chain(rest).collect()
}

const KEY_COLUMNS: [&str; 4] = ["graph", "problem", "mixer", "p"];

fn table(columns: &[&str]) -> Table {
    let header: Vec<&str> = KEY_COLUMNS.iter().chain(columns).copied().collect();
    Table::new(&header)
}

pub fn cmd_solve(args: &SolveArgs) -> Result<Output, CliError> {
    let setup = Setup::resolve(&args.problem)?;
    let (params, params_record) = setup.params(&args.params)?;
    let s = run_qaoa(&setup.h, &setup.mixer, &params)?;
    let probabilities = s.probabilities();
    let ground_states: Vec<Value> = setup
        .h
        .ground_set()
        .iter()
        .map(|&x| json!({"state": setup.bits(x), "index": x, "probability": probabilities[x]}))
        .collect();
    let mut result = json!({
        "ground_probability": ground_state_probability(&s, &setup.h)?,
        "expectation_energy": expectation_energy(&s, &setup.h)?,
        "ground_energy": setup.h.ground_energy(),
        "ground_states": ground_states,
    });
    if args.shots > 0 {
        let samples = sample(&s.measure_distribution(), args.shots, args.seed)?;
        let counts: Vec<Value> = samples
            .labels()
            .iter()
            .zip(samples.counts())
            .filter(|(_, &c)| c > 0)
            .map(|(&x, &c)| json!({"state": setup.bits(x), "index": x, "count": c}))
            .collect();
        result["counts"] = Value::Array(counts);
    }
    let mut record = setup.record("solve", result);
    record.params = Some(params_record);
    if args.shots > 0 {
        record.seed = Some(args.seed);
        record.shots = Some(args.shots);
    }

    let mut t = table(&["state", "probability", "ground"]);
    let key = setup.key();
    for (x, p) in probabilities.iter().enumerate() {
        let ground = setup.h.ground_set().contains(&x);
        t.push(with_key(&key, vec![setup.bits(x), p.to_string(), ground.to_string()]));
    }
    Ok(Output::new(record, Some(t), &args.output))
}

pub fn cmd_optimize(args: &OptimizeArgs) -> Result<Output, CliError> {
    let setup = Setup::resolve(&args.problem)?;
    let config = OptimizerConfig { starts: args.starts, ..Default::default() };
    let best = optimize_parameters(&setup.h, &setup.mixer, setup.p, &config, args.seed)?;
    let result = json!({
        "energy": best.energy,
        "ground_probability": best.ground_probability,
        "start_index": best.start_index,
        "starts": args.starts,
        "tolerance": config.tolerance,
        "max_iterations": config.max_iterations,
    });
    let mut record = setup.record("optimize", result);
    record.seed = Some(args.seed);
    record.params = Some(ParamsRecord {
        source: "optimized",
        alphas: best.params.alphas().to_vec(),
        betas: best.params.betas().to_vec(),
        published_betas: None,
    });
    let mut t = table(&["energy", "ground_probability"]);
    t.push(with_key(&setup.key(), vec![best.energy.to_string(), best.ground_probability.to_string()]));
    Ok(Output::new(record, Some(t), &args.output))
}

pub fn cmd_fairness(args: &FairnessArgs) -> Result<Output, CliError> {
    let setup = Setup::resolve(&args.problem)?;
    let (params, params_record) = setup.params(&args.params)?;
    let s = run_qaoa(&setup.h, &setup.mixer, &params)?;
    let full = s.measure_distribution();
    let ground = setup.h.ground_set();
    let config = FairnessConfig {
        shots: args.shots,
        repeats: args.repeats,
        kl_resamples: args.kl_resamples,
        draws_trials: args.trials,
        test: ShotsToRejectConfig { significance: args.significance, sets: args.sets, max_shots: args.max_shots },
        exact_data: args.data == DataArg::Exact,
    };
    let report = synthetic_fairness(&full, ground, &config, args.seed)?;

    let q = match setup.mixer {
        MixerSpec::Grover { q } => q,
        MixerSpec::Transverse => 0.5,
    };
    let weights = WeightTable::new(setup.h.num_qubits(), q)?;
    let ground_weights: Vec<f64> = ground.iter().map(|&x| weights.weight(x)).collect();
    let target = Distribution::from_weights(ground.to_vec(), &ground_weights)?;
    let ideal: Vec<Value> = ground
        .iter()
        .map(|&x| {
            json!({
                "state": setup.bits(x),
                "index": x,
                "probability": report.ideal.probability_of(x),
                "target": target.probability_of(x),
            })
        })
        .collect();
    let draws: Vec<Value> = report
        .draws_table
        .iter()
        .map(|(n_g, e)| json!({"n_g": n_g, "mean": e.mean, "std_error": e.std_error}))
        .collect();
    let result = json!({
        "data": if config.exact_data { "exact" } else { "synthetic" },
        "significance": args.significance,
        "sets": args.sets,
        "max_shots": args.max_shots,
        "ground_distribution": ideal,
        "n_star": {
            "runs": report.n_star_runs,
            "mean": report.n_star.map(|m| m.mean),
            "std_dev": report.n_star.map(|m| m.std_dev),
            "cap_reached": report.cap_reached(),
        },
        "kl": {
            "mean": report.kl.mean,
            "std_dev": report.kl.std_dev,
            "resamples": report.kl.count,
            "unit": "nats",
        },
        "draws": draws,
        "draws_trials": args.trials,
        "repeats": args.repeats,
    });
    let mut record = setup.record("fairness", result);
    record.params = Some(params_record);
    record.seed = Some(args.seed);
    record.shots = Some(args.shots);

    let mut t = table(&["state", "ideal_probability", "target_probability"]);
    for &x in ground {
        t.push(with_key(
            &setup.key(),
            vec![setup.bits(x), report.ideal.probability_of(x).to_string(), target.probability_of(x).to_string()],
        ));
    }
    let mut out = Output::new(record, Some(t), &args.output);
    if report.cap_reached() {
        eprintln!("notice: shots-to-reject hit the cap of {} shots in at least one repeat", args.max_shots);
        out.exit_code = CliError::EXIT_CAP;
    }
    Ok(out)
}

pub fn cmd_draws(args: &DrawsArgs) -> Result<Output, CliError> {
    let setup = Setup::resolve(&args.problem)?;
    let dim = setup.h.dim();
    let (d, params_record) = match &args.params {
        Some(spec) => {
            let (params, record) = setup.params(spec)?;
            (run_qaoa(&setup.h, &setup.mixer, &params)?.measure_distribution(), Some(record))
        }
        None => (Distribution::from_probabilities(vec![1.0 / dim as f64; dim])?, None),
    };
    let ground = setup.h.ground_set();
    let ng: Vec<usize> = if args.ng.trim() == "all" {
        if ground.len() > 1 {
            (2..=ground.len()).collect()
        } else {
            vec![1]
        }
    } else {
        parse_list(&args.ng, "--ng")?
    };
    let mut rows = Vec::with_capacity(ng.len());
    let mut t = table(&["distribution", "n_g", "mean", "std_error", "exact"]);
    let label = if args.baseline { "baseline" } else { "qaoa" };
    for &n_g in &ng {
        let mc = expected_draws_mc(&d, ground, n_g, args.trials, args.seed)?;
        let exact = if ground.len() <= MAX_EXACT_GROUND { Some(expected_draws_exact(&d, ground, n_g)?) } else { None };
        rows.push(json!({"n_g": n_g, "mean": mc.mean, "std_error": mc.std_error, "exact": exact}));
        t.push(with_key(
            &setup.key(),
            vec![
                label.into(),
                n_g.to_string(),
                mc.mean.to_string(),
                mc.std_error.to_string(),
                exact.map_or_else(String::new, |e| e.to_string()),
            ],
        ));
    }
    let result = json!({
        "distribution": label,
        "ground_states": ground.len(),
        "ground_probability": d.mass_of(ground),
        "trials": args.trials,
        "rows": rows,
    });
    let mut record = setup.record("draws", result);
    if args.baseline {
        record.mixer = None;
        record.p = None;
    }
    record.params = params_record;
    record.seed = Some(args.seed);
    Ok(Output::new(record, Some(t), &args.output))
}

pub fn cmd_compile(args: &CompileArgs) -> Result<Output, CliError> {
    let (graph, identity) = resolve_graph(&args.graph)?;
    let kind = ProblemKind::from(args.problem);
    let (seq, reference, angle) = match args.target {
        TargetArg::Separator => {
            if args.beta.is_some() || args.q.is_some() || args.ancilla {
                return Err(CliError::Usage("--beta, --q and --ancilla apply to --target grover-mixer".into()));
            }
            let alpha = args.alpha.ok_or_else(|| CliError::Usage("--target separator needs --alpha".into()))?;
            let seq = compile_phase_separator(&graph, kind, alpha)?;
            let h = DiagonalHamiltonian::build(&graph, kind)?;
            (seq, phase_separator_unitary(&h, alpha), json!({"alpha": alpha}))
        }
        TargetArg::GroverMixer => {
            if args.alpha.is_some() {
                return Err(CliError::Usage("--alpha applies to --target separator".into()));
            }
            let beta = args.beta.ok_or_else(|| CliError::Usage("--target grover-mixer needs --beta".into()))?;
            let q = args.q.or(graph.weight_q()).unwrap_or(0.5);
            let n = kind.num_qubits(&graph);
            let seq = compile_grover_mixer(n, q, beta, args.ancilla)?;
            (seq, grover_mixer_unitary(n, q, beta)?, json!({"beta": beta, "q": q}))
        }
    };
    let deviation =
        if seq.num_qubits() <= MAX_COMPILE_QUBITS { Some(sequence_unitary_deviation(&seq, &reference)?) } else { None };
    let circuit = write_circuit(&seq, deviation);
    let result = json!({
        "target": match args.target { TargetArg::Separator => "separator", TargetArg::GroverMixer => "grover-mixer" },
        "angles": angle,
        "qubits": seq.num_qubits(),
        "ancilla": seq.ancilla(),
        "gates": seq.len(),
        "two_qubit_gates": seq.two_qubit_count(),
        "deviation": deviation,
        "circuit": circuit.lines().filter(|l| !l.starts_with('#')).collect::<Vec<_>>(),
    });
    let record = RunRecord::new("compile", identity, kind.name(), result);
    let mut out = Output::new(record, None, &args.output);
    out.stdout = circuit;
    Ok(out)
}
