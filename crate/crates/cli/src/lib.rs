//! `tcc`: build, analyze, verify and simulate twisted centralizer codes.
//!
//! Exit codes: 0 success, 1 usage error, 2 verification or simulation
//! failure, 3 guard exceeded.

pub mod report;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use tcc_core::centralizer::{centralizer_code, TwistSpec};
use tcc_core::channel::{exhaustive_correction_stats, monte_carlo};
use tcc_core::code::{CodeReport, LinearCode};
use tcc_core::comb::{comb_matrix, comb_spectrum, diagonalize, eigen_scan, CombParams, Spectrum};
use tcc_core::linalg::{parse_matrix, primes_up_to, Matrix, Prime};
use tcc_core::Error;

use report::{
    CodeJson, EigenPair, SimulationMode, SimulationReport, SpectrumReport, VerifyReport, VerifyRow,
    VerifySummary,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_FAILURE: u8 = 2;
pub const EXIT_GUARD: u8 = 3;

/// Upper limits for `tcc verify`.
pub const VERIFY_P_MAX: u64 = 13;
pub const VERIFY_N_MAX: usize = 6;

/// Outside the theorem, minimum distance is only computed when `p^k` is at most this.
const VERIFY_DISTANCE_BUDGET: u128 = 1 << 12;

#[derive(Debug, Parser)]
#[command(name = "tcc", version, about = "Twisted centralizer codes over prime fields")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectrum and diagonalizability of xJ_n + yI_n
    Spectrum(SpectrumArgs),
    /// Compute C(A, a) and its RREF generator matrix
    Build(CodeArgs),
    /// Report [N, k, d], MDS status, capacities and rate of C(A, a)
    Analyze(CodeArgs),
    /// Sweep all small (p, n, x, y, a) and check the [n^2, 1, n^2] theorem
    Verify(VerifyArgs),
    /// Send codewords through a fixed-weight symbol-error channel
    Simulate(SimulateArgs),
}

#[derive(Debug, Clone, Args)]
pub struct CombArgs {
    /// Matrix order (2..=64)
    #[arg(long)]
    pub n: usize,
    /// Field characteristic (prime)
    #[arg(long)]
    pub p: u64,
    /// Coefficient of J_n
    #[arg(long)]
    pub x: u64,
    /// Coefficient of I_n
    #[arg(long)]
    pub y: u64,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub comb: CombArgs,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CodeArgs {
    #[arg(long, required_unless_present = "matrix_file", conflicts_with = "matrix_file")]
    pub n: Option<usize>,
    #[arg(long, required_unless_present = "matrix_file", conflicts_with = "matrix_file")]
    pub p: Option<u64>,
    #[arg(long, required_unless_present = "matrix_file", conflicts_with = "matrix_file")]
    pub x: Option<u64>,
    #[arg(long, required_unless_present = "matrix_file", conflicts_with = "matrix_file")]
    pub y: Option<u64>,
    /// Read A from a file (`p rows cols` header, then rows of entries)
    #[arg(long)]
    pub matrix_file: Option<PathBuf>,
    /// Twist a
    #[arg(long)]
    pub a: u64,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 7)]
    pub p_max: u64,
    #[arg(long, default_value_t = 5)]
    pub n_max: usize,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub code: CodeArgs,
    /// Number of symbol errors per transmission
    #[arg(long)]
    pub t: usize,
    #[arg(long, default_value_t = 1000)]
    pub trials: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Sweep every message and every weight-t pattern instead of sampling
    #[arg(long)]
    pub exhaustive: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GuardExceeded { .. } | Error::ScanTooLarge { .. } => EXIT_GUARD,
            Error::NotPrime(_)
            | Error::PrimeOutOfRange(_)
            | Error::InvalidOrder(_)
            | Error::EntryOutOfRange { .. }
            | Error::NotSquare { .. }
            | Error::Parse { .. }
            | Error::TooManyErrors { .. } => EXIT_USAGE,
            _ => EXIT_FAILURE,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

/// Output text plus exit code of a successful (or failed-but-reported) run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

fn json<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("report types serialize");
    s.push('\n');
    s
}

fn in_field(name: &str, v: u64, p: Prime) -> Result<(), CliError> {
    if v >= p.get() as u64 {
        Err(CliError::usage(format!("--{name} {v} is not in GF({p}) (need 0 <= {name} < {p})")))
    } else {
        Ok(())
    }
}

fn comb_params(args: &CombArgs) -> Result<CombParams, CliError> {
    let p = Prime::new(args.p).map_err(|e| CliError::usage(format!("--p: {e}")))?;
    in_field("x", args.x, p)?;
    in_field("y", args.y, p)?;
    CombParams::new(args.n, p.elt(args.x), p.elt(args.y)).map_err(|e| CliError::usage(format!("--n: {e}")))
}

/// Where `A` came from.
enum Source {
    Comb(CombParams),
    File(Matrix),
}

impl Source {
    fn from_args(args: &CodeArgs) -> Result<Self, CliError> {
        if let Some(path) = &args.matrix_file {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            let m = parse_matrix(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
            return Ok(Source::File(m));
        }
        let comb = CombArgs {
            n: args.n.expect("clap enforces"),
            p: args.p.expect("clap enforces"),
            x: args.x.expect("clap enforces"),
            y: args.y.expect("clap enforces"),
        };
        Ok(Source::Comb(comb_params(&comb)?))
    }

    fn matrix(&self) -> Matrix {
        match self {
            Source::Comb(c) => comb_matrix(c),
            Source::File(m) => m.clone(),
        }
    }

    fn xy(&self) -> (Option<u32>, Option<u32>) {
        match self {
            Source::Comb(c) => (Some(c.x().value()), Some(c.y().value())),
            Source::File(_) => (None, None),
        }
    }

    fn hypotheses_met(&self, a: u64) -> Option<bool> {
        match self {
            Source::Comb(c) => Some(c.theorem_hypotheses() && a >= 2),
            Source::File(_) => None,
        }
    }
}

struct Built {
    source: Source,
    a: u32,
    code: LinearCode,
}

impl Built {
    fn new(args: &CodeArgs) -> Result<Self, CliError> {
        let source = Source::from_args(args)?;
        let m = source.matrix();
        in_field("a", args.a, m.prime())?;
        let twist = m.prime().elt(args.a);
        let spec = TwistSpec::new(m, twist)?;
        let basis = centralizer_code(&spec)?;
        let code = LinearCode::from_basis(&basis)?;
        Ok(Built {
            source,
            a: args.a as u32,
            code,
        })
    }

    fn json(&self, analysis: Option<&CodeReport>, with_generator: bool) -> CodeJson {
        let (x, y) = self.source.xy();
        CodeJson {
            p: self.code.prime().get(),
            n: self.source.matrix().rows(),
            x,
            y,
            a: self.a,
            length: self.code.length(),
            dimension: self.code.dimension(),
            min_distance: analysis.map(|r| r.min_distance),
            mds: analysis.map(|r| r.mds),
            detect: analysis.map(|r| r.detect),
            correct: analysis.map(|r| r.correct),
            rate: format!("{}/{}", self.code.dimension(), self.code.length()),
            generator: with_generator.then(|| {
                self.code
                    .generator_rows()
                    .iter()
                    .map(|r| r.values().to_vec())
                    .collect()
            }),
        }
    }

    fn header(&self) -> String {
        let p = self.code.prime();
        let n = self.source.matrix().rows();
        match &self.source {
            Source::Comb(c) => format!("A = {}J_{n} + {}I_{n} over GF({p}), a = {}", c.x(), c.y(), self.a),
            Source::File(_) => format!("A from file ({n}x{n} over GF({p})), a = {}", self.a),
        }
    }
}

fn eigen_pairs(s: &Spectrum) -> Vec<EigenPair> {
    s.as_ints()
        .into_iter()
        .map(|(eigenvalue, multiplicity)| EigenPair {
            eigenvalue,
            multiplicity,
        })
        .collect()
}

fn spectrum_text(pairs: &[EigenPair]) -> String {
    let items: Vec<String> = pairs
        .iter()
        .map(|e| format!("{}:{}", e.eigenvalue, e.multiplicity))
        .collect();
    format!("{{{}}}", items.join(", "))
}

pub fn cmd_spectrum(args: &SpectrumArgs) -> Result<Outcome, CliError> {
    let params = comb_params(&args.comb)?;
    let a = comb_matrix(&params);
    let spectrum = eigen_pairs(&comb_spectrum(&params));
    let scan = match eigen_scan(&a) {
        Ok(s) => Some(eigen_pairs(&s)),
        Err(Error::ScanTooLarge { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let diag = diagonalize(&params).ok();
    let report = SpectrumReport {
        p: params.prime().get(),
        n: params.n(),
        x: params.x().value(),
        y: params.y().value(),
        matrix: (0..a.rows()).map(|i| a.row(i).values().to_vec()).collect(),
        scan_matches: scan.as_ref().map(|s| *s == spectrum),
        scan,
        spectrum,
        diagonalizable: diag.is_some(),
        diagonal: diag.map(|d| d.d.diagonal_entries().iter().map(|v| v.value()).collect()),
    };
    if args.json {
        return Ok(Outcome {
            stdout: json(&report),
            code: EXIT_OK,
        });
    }
    let mut out = String::new();
    let n = report.n;
    let _ = writeln!(out, "A = {}J_{n} + {}I_{n} over GF({})", report.x, report.y, report.p);
    let _ = write!(out, "{a}");
    let _ = writeln!(out, "eigenvalues (value:geometric multiplicity): {}", spectrum_text(&report.spectrum));
    match (&report.scan, report.scan_matches) {
        (Some(s), Some(ok)) => {
            let _ = writeln!(
                out,
                "eigen scan over GF({}): {} ({})",
                report.p,
                spectrum_text(s),
                if ok { "agrees" } else { "DISAGREES" }
            );
        }
        _ => {
            let _ = writeln!(out, "eigen scan skipped: p too large");
        }
    }
    match &report.diagonal {
        Some(d) => {
            let items: Vec<String> = d.iter().map(u32::to_string).collect();
            let _ = writeln!(out, "diagonalizable: D = diag({})", items.join(", "));
        }
        None => {
            let _ = writeln!(out, "defective over GF({}): not diagonalizable", report.p);
        }
    }
    Ok(Outcome {
        stdout: out,
        code: EXIT_OK,
    })
}

pub fn cmd_build(args: &CodeArgs) -> Result<Outcome, CliError> {
    let built = Built::new(args)?;
    let report = built.json(None, true);
    if args.json {
        return Ok(Outcome {
            stdout: json(&report),
            code: EXIT_OK,
        });
    }
    let mut out = String::new();
    let _ = writeln!(out, "{}", built.header());
    let _ = writeln!(out, "dim C(A, a) = {}", report.dimension);
    let _ = writeln!(out, "codeword length = {}", report.length);
    match built.code.generator() {
        Some(g) => {
            let _ = writeln!(out, "generator (RREF):");
            let _ = write!(out, "{g}");
        }
        None => {
            let _ = writeln!(out, "generator: none (zero code)");
        }
    }
    Ok(Outcome {
        stdout: out,
        code: EXIT_OK,
    })
}

pub fn cmd_analyze(args: &CodeArgs) -> Result<Outcome, CliError> {
    let built = Built::new(args)?;
    if built.code.dimension() == 0 {
        return Err(CliError {
            code: EXIT_FAILURE,
            message: format!("zero code: C(A, a) = {{0}} for {}", built.header()),
        });
    }
    let analysis = built.code.analyze()?;
    let report = built.json(Some(&analysis), false);
    if args.json {
        return Ok(Outcome {
            stdout: json(&report),
            code: EXIT_OK,
        });
    }
    let mut out = String::new();
    let _ = writeln!(out, "{}", built.header());
    let _ = writeln!(out, "parameters: {analysis}");
    let _ = writeln!(out, "MDS (d = N - k + 1): {}", if analysis.mds { "yes" } else { "no" });
    let _ = writeln!(out, "detects up to {} errors", analysis.detect);
    let _ = writeln!(out, "corrects up to {} errors", analysis.correct);
    let _ = writeln!(out, "rate: {}", analysis.rate);
    if built.source.hypotheses_met(args.a) == Some(false) {
        let _ = writeln!(out, "note: parameters outside the [n^2, 1, n^2] theorem (need p | xn+y, x, y != 0, a != 0, 1)");
    }
    Ok(Outcome {
        stdout: out,
        code: EXIT_OK,
    })
}

/// Evaluates one sweep tuple.
pub fn verify_row(params: &CombParams, a: u32) -> Result<VerifyRow, Error> {
    let p = params.prime();
    let n = params.n();
    let hypotheses_met = params.theorem_hypotheses() && a >= 2;
    let spec = TwistSpec::new(comb_matrix(params), p.elt(a as u64))?;
    let code = LinearCode::from_basis(&centralizer_code(&spec)?)?;
    let k = code.dimension();
    let analysis = match code.size() {
        Some(s) if k >= 1 && (hypotheses_met || s <= VERIFY_DISTANCE_BUDGET) => Some(code.analyze()?),
        _ => None,
    };
    let matches_theorem = hypotheses_met.then(|| {
        let n2 = n * n;
        k == 1
            && code.generator_rows()[0].values().iter().all(|&v| v == 1)
            && analysis.is_some_and(|r| {
                r.min_distance == n2
                    && r.mds
                    && r.detect == n2 - 1
                    && r.correct == (n2 - 1) / 2
                    && r.rate.k == 1
                    && r.rate.n == n2
            })
    });
    let note = if hypotheses_met {
        None
    } else if params.y().is_zero() {
        Some("outside theorem: y = 0".to_string())
    } else if a < 2 {
        Some(format!("outside theorem: a = {a}"))
    } else if params.x().is_zero() {
        Some("outside theorem: x = 0".to_string())
    } else {
        Some("outside theorem: p does not divide xn + y".to_string())
    };
    Ok(VerifyRow {
        p: p.get(),
        n,
        x: params.x().value(),
        y: params.y().value(),
        a,
        hypotheses_met,
        dim: k,
        d: analysis.map(|r| r.min_distance),
        mds: analysis.map(|r| r.mds),
        matches_theorem,
        note,
    })
}

/// Runs the full sweep; rows are sorted by `(p, n, x, y, a)`.
pub fn verify_sweep(p_max: u64, n_max: usize) -> Result<VerifyReport, CliError> {
    if p_max > VERIFY_P_MAX || n_max > VERIFY_N_MAX {
        return Err(CliError {
            code: EXIT_GUARD,
            message: format!(
                "sweep limited to p <= {VERIFY_P_MAX}, n <= {VERIFY_N_MAX} (got p_max = {p_max}, n_max = {n_max})"
            ),
        });
    }
    if p_max < 2 || n_max < 2 {
        return Err(CliError::usage("need p_max >= 2 and n_max >= 2"));
    }
    let mut tuples = Vec::new();
    for p in primes_up_to(p_max) {
        for n in 2..=n_max {
            for x in p.elements() {
                for y in p.elements() {
                    let params = CombParams::new(n, x, y)?;
                    for a in 0..p.get() {
                        tuples.push((params, a));
                    }
                }
            }
        }
    }
    let mut rows = tuples
        .par_iter()
        .map(|(params, a)| verify_row(params, *a))
        .collect::<Result<Vec<_>, Error>>()?;
    rows.sort_by_key(|r| (r.p, r.n, r.x, r.y, r.a));
    let hypothesis_rows = rows.iter().filter(|r| r.hypotheses_met).count();
    let matched = rows.iter().filter(|r| r.matches_theorem == Some(true)).count();
    Ok(VerifyReport {
        summary: VerifySummary {
            p_max: p_max as u32,
            n_max,
            rows: rows.len(),
            hypothesis_rows,
            matched,
            mismatched: hypothesis_rows - matched,
        },
        rows,
    })
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

pub fn cmd_verify(args: &VerifyArgs) -> Result<Outcome, CliError> {
    let report = verify_sweep(args.p_max, args.n_max)?;
    let code = if report.summary.mismatched == 0 {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    if args.json {
        return Ok(Outcome {
            stdout: json(&report),
            code,
        });
    }
    let mut out = String::new();
    let _ = writeln!(out, "{:>3} {:>2} {:>3} {:>3} {:>3}  {:<5} {:>4} {:>4} {:<5} {:<7} note", "p", "n", "x", "y", "a", "hyp", "dim", "d", "mds", "theorem");
    for r in &report.rows {
        let theorem = match r.matches_theorem {
            Some(true) => "match",
            Some(false) => "MISMATCH",
            None => "-",
        };
        let _ = writeln!(
            out,
            "{:>3} {:>2} {:>3} {:>3} {:>3}  {:<5} {:>4} {:>4} {:<5} {:<7} {}",
            r.p,
            r.n,
            r.x,
            r.y,
            r.a,
            r.hypotheses_met,
            r.dim,
            opt(r.d),
            opt(r.mds),
            theorem,
            r.note.as_deref().unwrap_or("")
        );
    }
    let s = &report.summary;
    let _ = writeln!(
        out,
        "\n{} tuples (p <= {}, 2 <= n <= {}); {} meet the hypotheses; {} match [n^2, 1, n^2]; {} mismatch",
        s.rows, s.p_max, s.n_max, s.hypothesis_rows, s.matched, s.mismatched
    );
    if s.mismatched > 0 {
        for r in report.rows.iter().filter(|r| r.matches_theorem == Some(false)) {
            let _ = writeln!(out, "MISMATCH: p={} n={} x={} y={} a={} dim={}", r.p, r.n, r.x, r.y, r.a, r.dim);
        }
    }
    let _ = writeln!(out, "{}", if code == EXIT_OK { "VERIFIED" } else { "FAILED" });
    Ok(Outcome { stdout: out, code })
}

pub fn cmd_simulate(args: &SimulateArgs) -> Result<Outcome, CliError> {
    let built = Built::new(&args.code)?;
    if built.code.dimension() == 0 {
        return Err(CliError {
            code: EXIT_FAILURE,
            message: format!("zero code: nothing to transmit for {}", built.header()),
        });
    }
    if args.t > built.code.length() {
        return Err(CliError::usage(format!(
            "--t {} exceeds codeword length {}",
            args.t,
            built.code.length()
        )));
    }
    if !args.exhaustive && args.trials == 0 {
        return Err(CliError::usage("--trials must be at least 1"));
    }
    let analysis = built.code.analyze()?;
    let (stats, mode, seed) = if args.exhaustive {
        let stats = exhaustive_correction_stats(&built.code, args.t).map_err(|e| match e {
            Error::GuardExceeded { .. } => CliError {
                code: EXIT_GUARD,
                message: format!("{e}; rerun without --exhaustive to use Monte Carlo"),
            },
            other => other.into(),
        })?;
        (stats, SimulationMode::Exhaustive, None)
    } else {
        let stats = monte_carlo(&built.code, args.t, args.trials, args.seed)?;
        (stats, SimulationMode::MonteCarlo, Some(args.seed))
    };
    let within_capacity = args.t <= analysis.correct;
    let pass = stats.all_succeeded();
    let report = SimulationReport {
        code: built.json(Some(&analysis), false),
        t: args.t,
        mode,
        seed,
        trials: stats.trials,
        successes: stats.successes,
        ambiguous: stats.ambiguous,
        miscorrected: stats.miscorrected,
        within_capacity,
        pass,
    };
    let code = if pass { EXIT_OK } else { EXIT_FAILURE };
    if args.code.json {
        return Ok(Outcome {
            stdout: json(&report),
            code,
        });
    }
    let mut out = String::new();
    let _ = writeln!(out, "{}", built.header());
    if built.source.hypotheses_met(args.code.a) == Some(false) {
        let _ = writeln!(out, "warning: hypotheses unmet (need p | xn+y, x, y != 0, a != 0, 1)");
    }
    let _ = writeln!(out, "code {analysis}, corrects up to {} errors", analysis.correct);
    let _ = writeln!(
        out,
        "{} trials with t = {} errors ({}): {} decoded correctly, {} ambiguous, {} miscorrected",
        stats.trials,
        args.t,
        match mode {
            SimulationMode::Exhaustive => "exhaustive".to_string(),
            SimulationMode::MonteCarlo => format!("monte carlo, seed {}", args.seed),
        },
        stats.successes,
        stats.ambiguous,
        stats.miscorrected
    );
    let verdict = if pass { "PASS" } else { "FAIL" };
    if within_capacity {
        let _ = writeln!(out, "{verdict}");
    } else {
        let _ = writeln!(out, "{verdict} (t = {} exceeds correction capacity {})", args.t, analysis.correct);
    }
    Ok(Outcome { stdout: out, code })
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Build(a) => cmd_build(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Simulate(a) => cmd_simulate(a),
    }
}
