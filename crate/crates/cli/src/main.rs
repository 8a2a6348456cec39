//! `loosecheck` — ask whether a map can be deformed away from itself.
//!
//! Decision commands exit with the verdict (0 loose, 1 not loose, 2 unknown);
//! informational commands exit 0. Bad invocations exit 64, bad data files 65.

use std::borrow::Cow;
use std::fmt;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use indexmap::IndexMap;
use num_bigint::BigInt;

use loosecheck::{
    becker_schultz_constraint, corollary_sweep, decide_cp_tensor, decide_plane_bundle,
    decide_sphere_map, decide_stiefel, euler_grassmann, stiefel_dims, Error, Outcome,
    PlaneBundleInput, SphereMapInput, StemTable,
};
use loosecheck_cli::report::{Query, Report, ReportData, Versions};

const EXIT_LOOSE: i32 = 0;
const EXIT_NOT_LOOSE: i32 = 1;
const EXIT_UNKNOWN: i32 = 2;
const EXIT_USAGE: i32 = 64;
const EXIT_DATA: i32 = 65;

#[derive(Parser)]
#[command(
    name = "loosecheck",
    version,
    about = "Decide whether a map can be deformed away from itself"
)]
struct Cli {
    /// Emit the report as JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Read stable stems and frame-class orders from this file instead of
    /// the bundled table.
    #[arg(long, global = true, value_name = "PATH")]
    table: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide the frame-forgetting projection V_{r,k} -> G_{r,k}.
    Stiefel {
        /// Ambient dimension.
        #[arg(long, value_parser = parse_bigint)]
        r: BigInt,
        /// Number of frame vectors, 1 <= k < r.
        #[arg(long, value_parser = parse_bigint)]
        k: BigInt,
        /// Ask about the lift to the oriented Grassmannian instead.
        #[arg(long)]
        oriented: bool,
    },
    /// Decide sphere bundles of oriented plane bundles.
    #[command(subcommand)]
    Bundle(BundleCommand),
    /// Decide a map S^m -> N^n from its stable class.
    SphereMap {
        /// Source dimension.
        #[arg(long, value_parser = parse_bigint)]
        m: BigInt,
        /// Target dimension.
        #[arg(long, value_parser = parse_bigint)]
        n: BigInt,
        /// Coordinates of the stable class in the (m-n)-stem group,
        /// comma separated; omit for the zero class of a trivial stem.
        #[arg(long, value_delimiter = ',', value_parser = parse_bigint, allow_hyphen_values = true)]
        class: Option<Vec<BigInt>>,
        /// Euler characteristic of the target; defaults to that of S^n.
        #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
        chi: Option<BigInt>,
    },
    /// Euler characteristics (informational).
    #[command(subcommand)]
    Euler(EulerCommand),
    /// Derived dimensions for V_{r,k} -> G_{r,k} (informational).
    Dims {
        #[arg(long, value_parser = parse_bigint)]
        r: BigInt,
        #[arg(long, value_parser = parse_bigint)]
        k: BigInt,
    },
    /// Sweep r = k+1 ..= r-max against the closed-form answer (k in {2, 3, 5}).
    Sweep {
        #[arg(long, value_parser = parse_bigint)]
        k: BigInt,
        #[arg(long, value_parser = parse_bigint)]
        r_max: BigInt,
    },
    /// Order constraint a self-coincidence obstruction inherits from chi.
    Constraints {
        #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
        chi: BigInt,
    },
}

#[derive(Subcommand)]
enum BundleCommand {
    /// Oriented plane bundle over a closed manifold N.
    Plane {
        /// Euler characteristic of the base N.
        #[arg(long, value_parser = parse_bigint, allow_hyphen_values = true)]
        chi: BigInt,
        /// Evaluations of the Euler class on free generators of H^2(N),
        /// comma separated; omit if H^2(N) has no free part.
        #[arg(long, value_delimiter = ',', value_parser = parse_bigint, allow_hyphen_values = true)]
        evals: Option<Vec<BigInt>>,
        /// w_2 bits on torsion generators (0/1, comma separated; recorded in
        /// the trace, never consulted by the decision).
        #[arg(long, value_delimiter = ',', value_parser = parse_bit)]
        w2: Option<Vec<bool>>,
        /// Dimension of N (shapes the explanatory text only).
        #[arg(long, value_parser = parse_bigint, default_value = "4")]
        dim: BigInt,
    },
    /// Tensor powers of the tautological line bundle over CP^q.
    Cp {
        /// Complex projective dimension, q >= 2.
        #[arg(long, value_parser = parse_bigint)]
        q: BigInt,
        /// Tensor power, t >= 1.
        #[arg(long, value_parser = parse_bigint)]
        power: BigInt,
    },
}

#[derive(Subcommand)]
enum EulerCommand {
    /// Euler characteristic of the Grassmannian G_{r,k}.
    Grassmann {
        #[arg(long, value_parser = parse_bigint)]
        r: BigInt,
        #[arg(long, value_parser = parse_bigint)]
        k: BigInt,
        /// Oriented double cover (derived value; no verdict depends on it).
        #[arg(long)]
        oriented: bool,
    },
}

fn parse_bigint(s: &str) -> Result<BigInt, String> {
    s.trim().parse().map_err(|_| format!("'{s}' is not an integer"))
}

fn parse_bit(s: &str) -> Result<bool, String> {
    match s.trim() {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(format!("'{s}' is not a 0/1 bit")),
    }
}

#[derive(Debug)]
enum CliError {
    Engine(Error),
    Io { path: PathBuf, source: std::io::Error },
    Usage(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Engine(e) => e.fmt(f),
            CliError::Io { path, source } => write!(f, "{}: {source}", path.display()),
            CliError::Usage(msg) => f.write_str(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Engine(e)
    }
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(Error::Table { .. }) | CliError::Engine(Error::Inconsistent(_)) => {
                EXIT_DATA
            }
            CliError::Io { .. } => EXIT_DATA,
            _ => EXIT_USAGE,
        }
    }
}

/// Convert a dimension-like flag to machine size; group-valued quantities
/// stay arbitrary precision.
fn dim_flag(name: &str, value: &BigInt) -> Result<i64, CliError> {
    i64::try_from(value).map_err(|_| {
        CliError::Usage(format!("--{name} = {value} does not fit in a signed 64-bit integer"))
    })
}

fn load_table(path: Option<&Path>) -> Result<Cow<'static, StemTable>, CliError> {
    match path {
        None => Ok(Cow::Borrowed(StemTable::bundled())),
        Some(p) => {
            let text = std::fs::read_to_string(p)
                .map_err(|source| CliError::Io { path: p.to_owned(), source })?;
            Ok(Cow::Owned(StemTable::load(&text)?))
        }
    }
}

fn versions(table: Option<&Path>) -> Versions {
    Versions {
        tool: env!("CARGO_PKG_VERSION").to_string(),
        table: table.map_or_else(|| "bundled".to_string(), |p| p.display().to_string()),
    }
}

fn params<const N: usize>(pairs: [(&str, String); N]) -> IndexMap<String, String> {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}

fn render_list(values: &[BigInt]) -> String {
    let inner = values.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", ");
    format!("[{inner}]")
}

/// Write to stdout, shrugging off a closed pipe (`loosecheck ... | head`
/// should still hand the verdict to the shell).
fn emit(text: &str) {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(text.as_bytes());
    let _ = stdout.flush();
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: Cli) -> Result<i32, CliError> {
    let table_path = cli.table.as_deref();
    let report = match &cli.command {
        Command::Stiefel { r, k, oriented } => {
            let (r, k) = (dim_flag("r", r)?, dim_flag("k", k)?);
            let table = load_table(table_path)?;
            let verdict = decide_stiefel(table.as_ref(), r, k, *oriented)?;
            Report {
                query: Query {
                    command: "stiefel".into(),
                    params: params([
                        ("r", r.to_string()),
                        ("k", k.to_string()),
                        ("oriented", oriented.to_string()),
                    ]),
                },
                verdict: Some(verdict),
                data: None,
                versions: versions(table_path),
            }
        }
        Command::Bundle(BundleCommand::Plane { chi, evals, w2, dim }) => {
            let dim_n = dim_flag("dim", dim)?;
            let evals = evals.clone().unwrap_or_default();
            let w2 = w2.clone().unwrap_or_default();
            let input = PlaneBundleInput::new(chi.clone(), evals.clone(), w2.clone(), dim_n)?;
            let verdict = decide_plane_bundle(&input);
            let bits = w2.iter().map(|&b| if b { "1" } else { "0" }).collect::<Vec<_>>().join(", ");
            Report {
                query: Query {
                    command: "bundle plane".into(),
                    params: params([
                        ("chi", chi.to_string()),
                        ("evals", render_list(&evals)),
                        ("w2", format!("[{bits}]")),
                        ("dim", dim_n.to_string()),
                    ]),
                },
                verdict: Some(verdict),
                data: None,
                versions: versions(table_path),
            }
        }
        Command::Bundle(BundleCommand::Cp { q, power }) => {
            let verdict = decide_cp_tensor(q, power)?;
            Report {
                query: Query {
                    command: "bundle cp".into(),
                    params: params([("q", q.to_string()), ("power", power.to_string())]),
                },
                verdict: Some(verdict),
                data: None,
                versions: versions(table_path),
            }
        }
        Command::SphereMap { m, n, class, chi } => {
            let (m, n) = (dim_flag("m", m)?, dim_flag("n", n)?);
            let table = load_table(table_path)?;
            let coords = class.clone().unwrap_or_default();
            let input = match chi {
                Some(chi) => SphereMapInput::with_target_data(
                    table.as_ref(),
                    m,
                    n,
                    coords.clone(),
                    chi.clone(),
                )?,
                None => SphereMapInput::for_sphere_target(table.as_ref(), m, n, coords.clone())?,
            };
            let verdict = decide_sphere_map(&input);
            Report {
                query: Query {
                    command: "sphere-map".into(),
                    params: params([
                        ("m", m.to_string()),
                        ("n", n.to_string()),
                        ("class", render_list(&coords)),
                        ("chi", input.chi_n.to_string()),
                    ]),
                },
                verdict: Some(verdict),
                data: None,
                versions: versions(table_path),
            }
        }
        Command::Euler(EulerCommand::Grassmann { r, k, oriented }) => {
            let (r, k) = (dim_flag("r", r)?, dim_flag("k", k)?);
            let chi = euler_grassmann(r, k, *oriented)?;
            Report {
                query: Query {
                    command: "euler grassmann".into(),
                    params: params([
                        ("r", r.to_string()),
                        ("k", k.to_string()),
                        ("oriented", oriented.to_string()),
                    ]),
                },
                verdict: None,
                data: Some(ReportData::Euler { chi: chi.to_string(), oriented: *oriented }),
                versions: versions(table_path),
            }
        }
        Command::Dims { r, k } => {
            let (r, k) = (dim_flag("r", r)?, dim_flag("k", k)?);
            let data = stiefel_dims(r, k)?;
            Report {
                query: Query {
                    command: "dims".into(),
                    params: params([("r", r.to_string()), ("k", k.to_string())]),
                },
                verdict: None,
                data: Some(ReportData::Dims(data)),
                versions: versions(table_path),
            }
        }
        Command::Sweep { k, r_max } => {
            let (k, r_max) = (dim_flag("k", k)?, dim_flag("r-max", r_max)?);
            let table = load_table(table_path)?;
            let rows = corollary_sweep(table.as_ref(), k, r_max)?;
            let agreements = rows.iter().filter(|row| row.agrees()).count();
            Report {
                query: Query {
                    command: "sweep".into(),
                    params: params([("k", k.to_string()), ("r-max", r_max.to_string())]),
                },
                verdict: None,
                data: Some(ReportData::Sweep {
                    k,
                    r_max,
                    agreements,
                    disagreements: rows.len() - agreements,
                    rows,
                }),
                versions: versions(table_path),
            }
        }
        Command::Constraints { chi } => {
            let order = becker_schultz_constraint(chi);
            Report {
                query: Query {
                    command: "constraints".into(),
                    params: params([("chi", chi.to_string())]),
                },
                verdict: None,
                data: Some(ReportData::Constraint { chi: chi.to_string(), order }),
                versions: versions(table_path),
            }
        }
    };

    if cli.json {
        let mut text = serde_json::to_string_pretty(&report).expect("reports serialize");
        text.push('\n');
        emit(&text);
    } else {
        emit(&report.render_text());
    }
    Ok(match &report.verdict {
        Some(v) => match v.outcome {
            Outcome::Loose => EXIT_LOOSE,
            Outcome::NotLoose => EXIT_NOT_LOOSE,
            Outcome::Unknown => EXIT_UNKNOWN,
        },
        None => 0,
    })
}
