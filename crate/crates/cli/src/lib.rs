//! Front end for `ginv-core`: reads algebra and matrix files, runs one pipeline and
//! renders the result as text or versioned JSON.

pub mod report;

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use ginv_core::automorphism::{order_and_closure, parse_matrices};
use ginv_core::fixtures::{run_suite, SuiteConfig};
use ginv_core::invariants::{molien_report, regularity_gate};
use ginv_core::presentation::{groebner_truncated, parse_algebra, verify_dims, MonomialOrder};
use ginv_core::reflection::{classify, classify_group, OrderInfo};
use ginv_core::rootsum::{solve_with_limit, DEFAULT_CANDIDATE_LIMIT};
use ginv_core::{Algebra, AlgebraProfile, CycNumber, Error as CoreError, GradedAutomorphism, RootSumProblem};

pub use report::{
    ClassifyReport, Envelope, ExamplesReport, FamilyEntry, GateReport, HilbertReport, MolienCommandReport,
    Report, RootsumReport, TraceEntry, TraceReport, SCHEMA_VERSION,
};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{context}: {source}")]
    Core { context: String, source: CoreError },
    #[error("{0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, CliError>;

trait Context<T> {
    fn context(self, what: impl FnOnce() -> String) -> Result<T>;
}

impl<T> Context<T> for ginv_core::Result<T> {
    fn context(self, what: impl FnOnce() -> String) -> Result<T> {
        self.map_err(|source| CliError::Core { context: what(), source })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub degree_cutoff: usize,
    pub order_cap: usize,
    pub output_format: OutputFormat,
    /// Candidate assignments the root-sum search may try before giving up.
    pub conductor_overflow_limit: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            degree_cutoff: 12,
            order_cap: 10_000,
            output_format: OutputFormat::Text,
            conductor_overflow_limit: DEFAULT_CANDIDATE_LIMIT,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.degree_cutoff < 4 {
            return Err(CliError::Config(format!("--degree-cutoff must be at least 4, got {}", self.degree_cutoff)));
        }
        if self.order_cap == 0 || self.conductor_overflow_limit == 0 {
            return Err(CliError::Config("caps must be positive".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Parser)]
#[command(name = "ginv", version, about = "Invariants and quasi-reflections of graded algebras")]
pub struct Cli {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ConfigArgs {
    /// Highest degree computed.
    #[arg(long, global = true, default_value_t = 12)]
    pub degree_cutoff: usize,
    /// Largest group order or automorphism order searched.
    #[arg(long, global = true, default_value_t = 10_000)]
    pub order_cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output: OutputFormat,
    /// Candidate limit for the root-sum search.
    #[arg(long, global = true, default_value_t = DEFAULT_CANDIDATE_LIMIT)]
    pub conductor_overflow_limit: usize,
}

impl From<&ConfigArgs> for RunConfig {
    fn from(a: &ConfigArgs) -> Self {
        RunConfig {
            degree_cutoff: a.degree_cutoff,
            order_cap: a.order_cap,
            output_format: a.output,
            conductor_overflow_limit: a.conductor_overflow_limit,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Graded dimensions, checked against the declared Hilbert series.
    Hilbert {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Trace series, Euler polynomial and homological determinant.
    Trace {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        auto: PathBuf,
    },
    /// Quasi-reflection classification of each automorphism.
    Classify {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        auto: PathBuf,
    },
    /// Molien series of the generated group and the shape of the fixed ring.
    Molien {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, required = true)]
        group: Vec<PathBuf>,
    },
    /// Verdict on the global dimension of the fixed ring.
    Gate {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, required = true)]
        group: Vec<PathBuf>,
    },
    /// Multisets of `count` roots of unity, none equal to 1, summing to `target`.
    Rootsum {
        #[arg(long)]
        target: u32,
        #[arg(long)]
        count: u32,
        #[arg(long)]
        no_minus_one: bool,
        #[arg(long)]
        no_cancelling_pair: bool,
    },
    /// Runs the built-in fixture suite.
    Examples,
}

/// A finished command: its report and whether every check in it held.
#[derive(Debug)]
pub struct Outcome {
    pub report: Report,
    pub success: bool,
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

struct Loaded {
    algebra: Algebra,
    profile_assumed: bool,
}

/// Without a `hilbert` line the algebra is taken to be a quantum polynomial ring.
fn profile_or_default(file: &ginv_core::presentation::AlgebraFile) -> (AlgebraProfile, bool) {
    match &file.profile {
        Some(p) => (p.clone(), false),
        None => (AlgebraProfile::quantum_polynomial(file.presentation.num_generators() as u32), true),
    }
}

fn load_algebra(path: &Path, cfg: &RunConfig) -> Result<Loaded> {
    let shown = || path.display().to_string();
    let file = parse_algebra(&read(path)?).context(shown)?;
    let (profile, profile_assumed) = profile_or_default(&file);
    let algebra = Algebra::new(file.presentation, profile, cfg.degree_cutoff).context(shown)?;
    Ok(Loaded { algebra, profile_assumed })
}

fn load_automorphisms(alg: &Algebra, paths: &[PathBuf]) -> Result<Vec<GradedAutomorphism>> {
    let mut out = Vec::new();
    for path in paths {
        let shown = || path.display().to_string();
        for spec in parse_matrices(&read(path)?).context(shown)? {
            let name = &alg.presentation.name;
            if spec.algebra != *name {
                return Err(CliError::Config(format!(
                    "{}: automorphism {} is declared on {}, but the algebra is {name}",
                    path.display(),
                    spec.name,
                    spec.algebra
                )));
            }
            let g = alg.automorphism(&spec.name, spec.matrix).context(|| format!("{}: {}", path.display(), spec.name))?;
            out.push(g);
        }
    }
    Ok(out)
}

fn order_info(g: &GradedAutomorphism, cap: usize) -> Result<OrderInfo> {
    match g.order(cap) {
        Ok(m) => Ok(OrderInfo::Finite(m)),
        Err(CoreError::InfiniteOrder { .. }) => Ok(OrderInfo::ExceedsCap(cap)),
        Err(e) => Err(CliError::Core { context: format!("order of {}", g.name), source: e }),
    }
}

fn hilbert(path: &Path, cfg: &RunConfig) -> Result<Outcome> {
    let shown = || path.display().to_string();
    let file = parse_algebra(&read(path)?).context(shown)?;
    let (profile, profile_assumed) = profile_or_default(&file);
    let p = &file.presentation;
    let rs = groebner_truncated(p, &MonomialOrder::deglex(p.num_generators()), cfg.degree_cutoff)
        .context(|| format!("{}: rewriting system", path.display()))?;
    let dims = rs.dims();
    let expected = profile.hilbert.expand(cfg.degree_cutoff);
    let first_mismatch = dims
        .iter()
        .zip(&expected)
        .position(|(d, e)| *e != CycNumber::from_integer(*d as i64));
    debug_assert_eq!(first_mismatch.is_none(), verify_dims(&rs, &profile).is_ok());
    let report = HilbertReport {
        algebra: p.name.clone(),
        generators: p.names().to_vec(),
        cutoff: cfg.degree_cutoff,
        hilbert: profile.hilbert.to_string(),
        profile_assumed,
        dims,
        expected,
        first_mismatch,
    };
    Ok(Outcome { success: first_mismatch.is_none(), report: Report::Hilbert(report) })
}

fn group(alg: &Algebra, paths: &[PathBuf], cfg: &RunConfig) -> Result<(Vec<String>, ginv_core::FiniteGroup)> {
    let gens = load_automorphisms(alg, paths)?;
    let names = gens.iter().map(|g| g.name.clone()).collect();
    let group = order_and_closure(&gens, cfg.order_cap).context(|| "group closure".into())?;
    Ok((names, group))
}

/// Runs one command.
pub fn run(command: &Command, cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let ok = |report| Ok(Outcome { report, success: true });
    match command {
        Command::Hilbert { algebra } => hilbert(algebra, cfg),
        Command::Trace { algebra, auto } => {
            let l = load_algebra(algebra, cfg)?;
            let mut automorphisms = Vec::new();
            for g in load_automorphisms(&l.algebra, std::slice::from_ref(auto))? {
                let order = order_info(&g, cfg.order_cap)?;
                let trace = l.algebra.trace_function(&g, order.finite()).context(|| format!("trace of {}", g.name))?;
                automorphisms.push(TraceEntry { name: g.name.clone(), order, trace });
            }
            ok(Report::Trace(TraceReport {
                algebra: l.algebra.presentation.name.clone(),
                profile_assumed: l.profile_assumed,
                automorphisms,
            }))
        }
        Command::Classify { algebra, auto } => {
            let l = load_algebra(algebra, cfg)?;
            let automorphisms = load_automorphisms(&l.algebra, std::slice::from_ref(auto))?
                .iter()
                .map(|g| classify(&l.algebra, g, cfg.order_cap).context(|| format!("classify {}", g.name)))
                .collect::<Result<Vec<_>>>()?;
            ok(Report::Classify(ClassifyReport {
                algebra: l.algebra.presentation.name.clone(),
                profile_assumed: l.profile_assumed,
                automorphisms,
            }))
        }
        Command::Molien { algebra, group: paths } => {
            let l = load_algebra(algebra, cfg)?;
            let (generators, g) = group(&l.algebra, paths, cfg)?;
            let classes = classify_group(&l.algebra, &g, cfg.order_cap).context(|| "classify group".into())?;
            let molien = molien_report(&l.algebra, &g, &classes).context(|| "Molien series".into())?;
            ok(Report::Molien(MolienCommandReport {
                algebra: l.algebra.presentation.name.clone(),
                profile_assumed: l.profile_assumed,
                generators,
                molien,
            }))
        }
        Command::Gate { algebra, group: paths } => {
            let l = load_algebra(algebra, cfg)?;
            let (generators, g) = group(&l.algebra, paths, cfg)?;
            let classes = classify_group(&l.algebra, &g, cfg.order_cap).context(|| "classify group".into())?;
            let verdict = regularity_gate(&l.algebra.profile, &classes);
            ok(Report::Gate(GateReport {
                algebra: l.algebra.presentation.name.clone(),
                profile_assumed: l.profile_assumed,
                generators,
                classes,
                verdict,
            }))
        }
        Command::Rootsum { target, count, no_minus_one, no_cancelling_pair } => {
            let problem = RootSumProblem::new(*target, *count).excluding(*no_minus_one, *no_cancelling_pair);
            let families = solve_with_limit(&problem, cfg.conductor_overflow_limit)
                .context(|| format!("rootsum target {target}, count {count}"))?
                .into_iter()
                .map(FamilyEntry::from)
                .collect();
            ok(Report::Rootsum(RootsumReport { problem, families }))
        }
        Command::Examples => {
            let checks = run_suite(&SuiteConfig { cutoff: cfg.degree_cutoff, order_cap: cfg.order_cap });
            let report = ExamplesReport::new(checks);
            Ok(Outcome { success: report.failed == 0, report: Report::Examples(report) })
        }
    }
}

/// Renders a finished command in the configured format.
pub fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Text => report.to_text(),
        OutputFormat::Json => {
            let env = Envelope { schema: SCHEMA_VERSION, report: report.clone() };
            serde_json::to_string_pretty(&env).expect("reports serialize") + "\n"
        }
    }
}
