//! Command-line front end.
//!
//! Every run is deterministic: identical arguments give byte-identical output.
//! CSV output starts with `#` lines echoing the tool version and the parsed
//! configuration, followed by a header row. JSON output is a single object
//! carrying `schema_version`, the generator, the configuration and the result.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as C64;
use serde::Serialize;
use thiserror::Error;

use crate::classify::{
    canonical_four, classify, closest_symmetric_product, ghz3_probability_closed_form, log_grid,
    named_state, product_state, stability_sweep, FourQubitG, NamedState, DEFAULT_PRODUCT_GRID,
    DEFAULT_REFINE_TOL, DEFAULT_SUPPORT_TOL,
};
use crate::error::Error;
use crate::fes_basis::{degeneracy, expand, fes_indices, psi_pq, BasisIndex, FesVector};
use crate::ilo::{
    check_t, curve_trace, success_probability, success_probability_dense, FPolicy, IloParams,
};
use crate::statevec::{fidelity, is_fes, StateVector, DEFAULT_TOL};

pub const SCHEMA_VERSION: u32 = 1;

/// Environment variable that sets the worker thread count.
pub const THREADS_ENV: &str = "FES_ILO_THREADS";

const GENERATOR: &str = concat!(env!("CARGO_PKG_NAME"), " ", env!("CARGO_PKG_VERSION"));

/// Failure of a run, grouped by exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("numerical domain error: {0}")]
    Domain(String),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::InvalidState(_) => 3,
            CliError::Domain(_) => 4,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::SingularParameter { .. } => CliError::Domain(msg),
            Error::NotFes { .. }
            | Error::NotSymmetric { .. }
            | Error::ZeroVector
            | Error::UnknownState(_)
            | Error::IncompatibleQubitCount { .. }
            | Error::BadCoefficientCount { .. }
            | Error::AllZero => CliError::InvalidState(msg),
            _ => CliError::Usage(msg),
        }
    }
}

/// Inclusive grid `start:stop:count`.
#[derive(Copy, Clone, Debug, PartialEq, Serialize)]
pub struct GridSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl GridSpec {
    /// Evenly spaced points, with both endpoints hit exactly.
    pub fn linear(&self) -> Vec<f64> {
        match self.count {
            0 => Vec::new(),
            1 => vec![self.start],
            c => {
                let step = (self.stop - self.start) / (c - 1) as f64;
                (0..c)
                    .map(|i| {
                        if i + 1 == c {
                            self.stop
                        } else {
                            self.start + step * i as f64
                        }
                    })
                    .collect()
            }
        }
    }

    /// Geometrically spaced points.
    pub fn geometric(&self) -> Vec<f64> {
        log_grid(self.start, self.stop, self.count)
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, count] = parts.as_slice() else {
            return Err(format!("grid '{s}' is not start:stop:count"));
        };
        let num = |x: &str| {
            x.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad grid bound '{x}': {e}"))
        };
        let count = count
            .trim()
            .parse::<usize>()
            .map_err(|e| format!("bad grid count '{count}': {e}"))?;
        if count == 0 {
            return Err("grid count must be at least 1".into());
        }
        Ok(GridSpec {
            start: num(start)?,
            stop: num(stop)?,
            count,
        })
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    Csv,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "snake_case")]
#[value(rename_all = "snake_case")]
pub enum PolicyArg {
    Unit,
    PovmMax,
}

impl From<PolicyArg> for FPolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Unit => FPolicy::Unit,
            PolicyArg::PovmMax => FPolicy::PovmMax,
        }
    }
}

/// Flip-and-exchange symmetric qubit states under invertible local operations.
#[derive(Debug, Parser, Serialize)]
#[command(name = "fes-ilo", version, about)]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value = "csv", global = true)]
    pub format: OutputFormat,

    /// Write to this file instead of standard output.
    #[arg(long, short, global = true)]
    #[serde(skip)]
    pub output: Option<PathBuf>,
}

/// Initial state: a named state or explicit FES coefficients.
#[derive(Debug, Clone, Args, Serialize)]
pub struct StateArgs {
    /// Number of qubits.
    #[arg(long)]
    pub n: usize,

    /// Named state: GHZ, W (n = 3), W_fes (n = 3) or S.
    #[arg(long, conflicts_with = "coeffs", required_unless_present = "coeffs")]
    pub state: Option<String>,

    /// Real coefficients c_pq ordered by q ascending (q = 0, 2, 4, ...).
    /// For three qubits, GHZ is `0.5,0.8660254037844386`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub coeffs: Option<Vec<f64>>,
}

#[derive(Debug, Subcommand, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// List the FES basis states psi_pq of n qubits.
    Basis {
        #[arg(long)]
        n: usize,
    },
    /// Trace the curve of states reachable from the initial state.
    Curve {
        #[command(flatten)]
        state: StateArgs,
        /// Curve parameters, start:stop:count inclusive.
        #[arg(long, default_value = "-0.99:0.99:199", allow_hyphen_values = true)]
        t_grid: GridSpec,
        /// Fidelity targets, e.g. `30,12` (p then q). Defaults to the whole basis.
        #[arg(long, value_delimiter = ',')]
        targets: Option<Vec<String>>,
        #[arg(long, value_enum, default_value = "povm_max")]
        f_policy: PolicyArg,
    },
    /// Approach a curve endpoint and record infidelity and probability.
    Stability {
        #[command(flatten)]
        state: StateArgs,
        /// Endpoint to approach, e.g. `12`. Defaults to the t -> -1 endpoint.
        #[arg(long)]
        target: Option<String>,
        /// Distances from the boundary, start:stop:count, geometrically spaced.
        #[arg(long, default_value = "1e-1:1e-6:26")]
        eps_grid: GridSpec,
        #[arg(long, value_enum, default_value = "povm_max")]
        f_policy: PolicyArg,
    },
    /// Report the equivalence class of an FES state (always JSON).
    Classify {
        #[command(flatten)]
        state: StateArgs,
        /// |c_pq| above which a coefficient belongs to the support.
        #[arg(long, default_value_t = DEFAULT_SUPPORT_TOL)]
        tol: f64,
    },
    /// GHZ3 success probability from the closed form, the reduced sum and
    /// the dense register.
    DemoGhz3 {
        #[arg(long, allow_hyphen_values = true)]
        t: f64,
        #[arg(long, value_enum, default_value = "unit")]
        f_policy: PolicyArg,
    },
    /// The four-qubit family G_{a,a-d,0,d} with a = cos(phi), d = sin(phi).
    DemoFour {
        #[arg(long, default_value = "0:3.1:32", allow_hyphen_values = true)]
        phi_grid: GridSpec,
    },
    /// Closest product state (cos th|0> + sin th|1>)^n.
    ClosestProduct {
        #[command(flatten)]
        state: StateArgs,
        #[arg(long, default_value_t = DEFAULT_PRODUCT_GRID)]
        grid_size: usize,
        #[arg(long, default_value_t = DEFAULT_REFINE_TOL)]
        refine_tol: f64,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Basis { .. } => "basis",
            Command::Curve { .. } => "curve",
            Command::Stability { .. } => "stability",
            Command::Classify { .. } => "classify",
            Command::DemoGhz3 { .. } => "demo-ghz3",
            Command::DemoFour { .. } => "demo-four",
            Command::ClosestProduct { .. } => "closest-product",
        }
    }
}

/// 17 significant digits, locale independent.
pub fn fmt_num(x: f64) -> String {
    format!("{x:.16e}")
}

/// Parse a basis label such as `12`, `1_2` or `10,0`-style `10_0`.
pub fn parse_target(s: &str, n: usize) -> Result<BasisIndex, CliError> {
    let bad = || CliError::Usage(format!("cannot read target '{s}' for n = {n}"));
    let index = if let Some((p, q)) = s.split_once(['_', '/']) {
        BasisIndex::new(p.parse().map_err(|_| bad())?, q.parse().map_err(|_| bad())?)
    } else {
        if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        let splits: Vec<BasisIndex> = (1..s.len())
            .filter_map(|k| {
                let (p, q) = (s[..k].parse::<usize>().ok()?, s[k..].parse::<usize>().ok()?);
                (p + q == n).then_some(BasisIndex::new(p, q))
            })
            .collect();
        match splits.as_slice() {
            [one] => *one,
            [] => return Err(bad()),
            _ => {
                return Err(CliError::Usage(format!(
                    "target '{s}' is ambiguous; write it as p_q"
                )))
            }
        }
    };
    if index.n() != n {
        return Err(bad());
    }
    Ok(index)
}

fn dense_state(args: &StateArgs) -> Result<StateVector, CliError> {
    if let Some(name) = &args.state {
        let name: NamedState = name.parse()?;
        return Ok(named_state(name, args.n)?);
    }
    Ok(crate::fes_basis::embed(&fes_state(args)?)?)
}

fn fes_state(args: &StateArgs) -> Result<FesVector, CliError> {
    if let Some(name) = &args.state {
        let name: NamedState = name.parse()?;
        return Ok(expand(&named_state(name, args.n)?, DEFAULT_TOL)?);
    }
    let coeffs = args
        .coeffs
        .as_ref()
        .ok_or_else(|| CliError::Usage("need --state or --coeffs".into()))?;
    let v = FesVector::from_real(args.n, coeffs)?;
    let norm = v.norm_sqr();
    if (norm - 1.0).abs() > 1e-6 {
        return Err(CliError::InvalidState(format!(
            "coefficients have squared norm {norm}, not 1 within 1e-6"
        )));
    }
    Ok(v.normalized()?)
}

#[derive(Serialize)]
struct Envelope<'a, T: Serialize> {
    schema_version: u32,
    generator: &'static str,
    command: &'static str,
    config: &'a RunConfig,
    result: T,
}

fn json<T: Serialize>(config: &RunConfig, result: T) -> String {
    let env = Envelope {
        schema_version: SCHEMA_VERSION,
        generator: GENERATOR,
        command: config.command.name(),
        config,
        result,
    };
    let mut s = serde_json::to_string_pretty(&env).expect("serializable");
    s.push('\n');
    s
}

struct Csv {
    text: String,
}

impl Csv {
    fn new(config: &RunConfig) -> Self {
        let mut text = String::new();
        let echo = serde_json::to_string(config).expect("serializable");
        let _ = writeln!(text, "# {GENERATOR}");
        let _ = writeln!(text, "# config: {echo}");
        Csv { text }
    }

    fn comment(&mut self, line: &str) {
        let _ = writeln!(self.text, "# {line}");
    }

    fn row<I: IntoIterator<Item = String>>(&mut self, cells: I) {
        let line: Vec<String> = cells.into_iter().collect();
        let _ = writeln!(self.text, "{}", line.join(","));
    }
}

#[derive(Serialize)]
struct BasisRow {
    index: BasisIndex,
    degeneracy: u64,
    entangled: bool,
}

#[derive(Serialize)]
struct TargetFidelity {
    target: BasisIndex,
    fidelity: f64,
}

#[derive(Serialize)]
struct CurveRow {
    t: f64,
    coeffs: Vec<[f64; 2]>,
    probability: f64,
    fidelities: Vec<TargetFidelity>,
}

#[derive(Serialize)]
struct Ghz3Row {
    t: f64,
    f: f64,
    closed_form: f64,
    spectral: f64,
    dense: f64,
    max_abs_diff: f64,
    agree: bool,
}

#[derive(Serialize)]
struct FourRow {
    phi: f64,
    a: f64,
    d: f64,
    mu: Option<[f64; 2]>,
    coeffs: [f64; 3],
    fidelity_canonical: Option<f64>,
    fidelity_psi22: f64,
}

#[derive(Serialize)]
struct ProductRow {
    theta: f64,
    overlap_sq: f64,
    degenerate: bool,
    product_is_fes: bool,
}

/// Produce the report text for a configuration.
pub fn render(config: &RunConfig) -> Result<String, CliError> {
    let format = config.format;
    match &config.command {
        Command::Basis { n } => {
            if *n == 0 {
                return Err(Error::NoQubits.into());
            }
            let rows: Vec<BasisRow> = fes_indices(*n)
                .into_iter()
                .map(|index| BasisRow {
                    index,
                    degeneracy: degeneracy(index.p, index.q),
                    entangled: index.is_entangled(),
                })
                .collect();
            Ok(match format {
                OutputFormat::Json => json(config, &rows),
                OutputFormat::Csv => {
                    let mut csv = Csv::new(config);
                    csv.comment(&format!("dimension {}", rows.len()));
                    csv.row(["p", "q", "degeneracy", "entangled"].map(String::from));
                    for r in &rows {
                        csv.row([
                            r.index.p.to_string(),
                            r.index.q.to_string(),
                            r.degeneracy.to_string(),
                            r.entangled.to_string(),
                        ]);
                    }
                    csv.text
                }
            })
        }

        Command::Curve {
            state,
            t_grid,
            targets,
            f_policy,
        } => {
            let v = fes_state(state)?;
            let targets = match targets {
                Some(list) => list
                    .iter()
                    .map(|s| parse_target(s, state.n))
                    .collect::<Result<Vec<_>, _>>()?,
                None => fes_indices(state.n),
            };
            let grid = t_grid.linear();
            let samples = curve_trace(&v, &grid, (*f_policy).into(), &targets)?;
            Ok(match format {
                OutputFormat::Json => {
                    let rows: Vec<CurveRow> = samples
                        .iter()
                        .map(|s| CurveRow {
                            t: s.t,
                            coeffs: s.state.coeffs().iter().map(|c| [c.re, c.im]).collect(),
                            probability: s.probability,
                            fidelities: s
                                .target_fidelities
                                .iter()
                                .map(|&(target, fidelity)| TargetFidelity { target, fidelity })
                                .collect(),
                        })
                        .collect();
                    json(config, rows)
                }
                OutputFormat::Csv => {
                    let mut csv = Csv::new(config);
                    let mut header = vec!["t".to_string()];
                    for i in v.indices() {
                        header.push(format!("c{i}_re"));
                        header.push(format!("c{i}_im"));
                    }
                    header.push("probability".into());
                    header.extend(targets.iter().map(|i| format!("fid_{i}")));
                    csv.row(header);
                    for s in &samples {
                        let mut cells = vec![fmt_num(s.t)];
                        for c in s.state.coeffs() {
                            cells.push(fmt_num(c.re));
                            cells.push(fmt_num(c.im));
                        }
                        cells.push(fmt_num(s.probability));
                        cells.extend(s.target_fidelities.iter().map(|(_, f)| fmt_num(*f)));
                        csv.row(cells);
                    }
                    csv.text
                }
            })
        }

        Command::Stability {
            state,
            target,
            eps_grid,
            f_policy,
        } => {
            let v = fes_state(state)?;
            let target = match target {
                Some(s) => parse_target(s, state.n)?,
                None => classify(&v, DEFAULT_SUPPORT_TOL).endpoint_minus,
            };
            let samples = stability_sweep(&v, target, &eps_grid.geometric(), (*f_policy).into())?;
            Ok(match format {
                OutputFormat::Json => json(config, &samples),
                OutputFormat::Csv => {
                    let mut csv = Csv::new(config);
                    csv.comment(&format!("target {target}"));
                    csv.row(["epsilon", "t", "infidelity", "probability"].map(String::from));
                    for s in &samples {
                        csv.row([s.epsilon, s.t, s.infidelity, s.probability].map(fmt_num));
                    }
                    csv.text
                }
            })
        }

        Command::Classify { state, tol } => {
            let v = fes_state(state)?;
            Ok(json(config, classify(&v, *tol)))
        }

        Command::DemoGhz3 { t, f_policy } => {
            check_t(*t)?;
            let params = IloParams::new(*t, (*f_policy).into())?;
            let ghz = expand(&named_state(NamedState::Ghz, 3)?, DEFAULT_TOL)?;
            let closed_form = ghz3_probability_closed_form(*t, params.f());
            let spectral = success_probability(&ghz, &params);
            let dense = success_probability_dense(&ghz, &params)?;
            let max_abs_diff = (closed_form - spectral)
                .abs()
                .max((closed_form - dense).abs())
                .max((spectral - dense).abs());
            let row = Ghz3Row {
                t: *t,
                f: params.f(),
                closed_form,
                spectral,
                dense,
                max_abs_diff,
                agree: max_abs_diff <= 1e-10,
            };
            Ok(match format {
                OutputFormat::Json => json(config, &row),
                OutputFormat::Csv => {
                    let mut csv = Csv::new(config);
                    csv.row(
                        [
                            "t",
                            "f",
                            "closed_form",
                            "spectral",
                            "dense",
                            "max_abs_diff",
                            "agree",
                        ]
                        .map(String::from),
                    );
                    let mut cells: Vec<String> = [
                        row.t,
                        row.f,
                        row.closed_form,
                        row.spectral,
                        row.dense,
                        row.max_abs_diff,
                    ]
                    .map(fmt_num)
                    .to_vec();
                    cells.push(row.agree.to_string());
                    csv.row(cells);
                    csv.text
                }
            })
        }

        Command::DemoFour { phi_grid } => {
            let psi22 = psi_pq(2, 2)?;
            let rows = phi_grid
                .linear()
                .into_iter()
                .map(|phi| {
                    let (a, d) = (phi.cos(), phi.sin());
                    let g = FourQubitG::fes(C64::new(a, 0.0), C64::new(d, 0.0));
                    let state = g.build()?.normalized()?;
                    let coeffs = expand(&state, DEFAULT_TOL)?.phase_fixed();
                    let mu = g.mu();
                    let fidelity_canonical = match mu {
                        Some(mu) => Some(fidelity(&state, &canonical_four(mu))?),
                        None => None,
                    };
                    let c = coeffs.coeffs();
                    Ok(FourRow {
                        phi,
                        a,
                        d,
                        mu: mu.map(|m| [m.re, m.im]),
                        coeffs: [c[0].re, c[1].re, c[2].re],
                        fidelity_canonical,
                        fidelity_psi22: fidelity(&state, &psi22)?,
                    })
                })
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(match format {
                OutputFormat::Json => json(config, &rows),
                OutputFormat::Csv => {
                    let mut csv = Csv::new(config);
                    csv.row(
                        [
                            "phi",
                            "a",
                            "d",
                            "mu_re",
                            "mu_im",
                            "c40",
                            "c22",
                            "c04",
                            "fid_canonical",
                            "fid_psi22",
                        ]
                        .map(String::from),
                    );
                    let opt = |x: Option<f64>| x.map_or_else(|| "nan".to_string(), fmt_num);
                    for r in &rows {
                        csv.row([
                            fmt_num(r.phi),
                            fmt_num(r.a),
                            fmt_num(r.d),
                            opt(r.mu.map(|m| m[0])),
                            opt(r.mu.map(|m| m[1])),
                            fmt_num(r.coeffs[0]),
                            fmt_num(r.coeffs[1]),
                            fmt_num(r.coeffs[2]),
                            opt(r.fidelity_canonical),
                            fmt_num(r.fidelity_psi22),
                        ]);
                    }
                    csv.text
                }
            })
        }

        Command::ClosestProduct {
            state,
            grid_size,
            refine_tol,
        } => {
            let psi = dense_state(state)?;
            let best = closest_symmetric_product(&psi, *grid_size, *refine_tol)?;
            let row = ProductRow {
                theta: best.theta,
                overlap_sq: best.overlap_sq,
                degenerate: best.degenerate,
                product_is_fes: is_fes(&product_state(state.n, best.theta)?, DEFAULT_TOL),
            };
            Ok(match format {
                OutputFormat::Json => json(config, &row),
                OutputFormat::Csv => {
                    let mut csv = Csv::new(config);
                    csv.row(
                        ["theta", "overlap_sq", "degenerate", "product_is_fes"].map(String::from),
                    );
                    csv.row([
                        fmt_num(row.theta),
                        fmt_num(row.overlap_sq),
                        row.degenerate.to_string(),
                        row.product_is_fes.to_string(),
                    ]);
                    csv.text
                }
            })
        }
    }
}

/// Render and write to the configured destination.
pub fn run(config: &RunConfig) -> Result<(), CliError> {
    let text = render(config)?;
    match &config.output {
        Some(path) => std::fs::write(path, text)?,
        None => {
            use std::io::Write;
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

/// Size the worker pool from [`THREADS_ENV`] when it is set.
pub fn init_threads() -> Result<(), CliError> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .map_err(|_| CliError::Usage(format!("{THREADS_ENV}={value} is not a thread count")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(args: &[&str]) -> RunConfig {
        RunConfig::try_parse_from(std::iter::once("fes-ilo").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn grid_parsing() {
        let g: GridSpec = "-0.99:0.99:199".parse().unwrap();
        let pts = g.linear();
        assert_eq!(pts.len(), 199);
        assert_eq!(pts[0], -0.99);
        assert_eq!(pts[198], 0.99);
        assert!((pts[99]).abs() < 1e-15);
        assert!("1:2".parse::<GridSpec>().is_err());
        assert!("1:2:0".parse::<GridSpec>().is_err());
        assert!("a:2:3".parse::<GridSpec>().is_err());
    }

    #[test]
    fn target_parsing() {
        assert_eq!(parse_target("30", 3).unwrap(), BasisIndex::new(3, 0));
        assert_eq!(parse_target("12", 3).unwrap(), BasisIndex::new(1, 2));
        assert_eq!(parse_target("100", 10).unwrap(), BasisIndex::new(10, 0));
        assert_eq!(parse_target("10_2", 12).unwrap(), BasisIndex::new(10, 2));
        assert!(matches!(parse_target("110", 11), Err(CliError::Usage(_))));
        assert!(parse_target("22", 3).is_err());
        assert!(parse_target("x", 3).is_err());
    }

    #[test]
    fn exit_codes() {
        let e = render(&cfg(&[
            "curve", "--n", "3", "--state", "GHZ", "--t-grid", "-1:0:3",
        ]))
        .unwrap_err();
        assert_eq!(e.exit_code(), 4);
        let e = render(&cfg(&["classify", "--n", "3", "--state", "W"])).unwrap_err();
        assert_eq!(e.exit_code(), 3);
        let e = render(&cfg(&["classify", "--n", "3", "--coeffs", "1,1"])).unwrap_err();
        assert_eq!(e.exit_code(), 3);
        let e = render(&cfg(&[
            "curve",
            "--n",
            "3",
            "--state",
            "GHZ",
            "--targets",
            "22",
        ]))
        .unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(RunConfig::try_parse_from(["fes-ilo", "curve", "--n", "3"]).is_err());
    }

    #[test]
    fn curve_has_requested_rows() {
        let text = render(&cfg(&[
            "curve",
            "--n",
            "3",
            "--state",
            "GHZ",
            "--t-grid",
            "-0.99:0.99:199",
            "--targets",
            "30,12",
        ]))
        .unwrap();
        let rows: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(
            rows[0],
            "t,c30_re,c30_im,c12_re,c12_im,probability,fid_30,fid_12"
        );
        assert_eq!(rows.len(), 200);
    }

    #[test]
    fn coefficients_are_renormalized() {
        let text = render(&cfg(&["classify", "--n", "3", "--coeffs", "0.5,0.8660254"])).unwrap();
        assert!(text.contains("\"schema_version\": 1"));
    }
}
