//! `hyptube` — calculators and checkers for collars, tubes, and
//! combination of hyperbolic-manifold groups.
//!
//! Scalar subcommands print one number on stdout; structured
//! subcommands print one JSON report (`"schema": 1`); `sweep` prints
//! CSV (or JSON on request). Identical invocations produce identical
//! bytes on stdout; diagnostics go to stderr.

mod schema;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;

use hyptube::collar_tube::{
    stable_width, tube_volume_with_config, tube_width_with_config, volume_lower_bound,
    volume_lower_bound_display_rounded, BoundInputs,
};
use hyptube::combination::{check_combination, Verdict};
use hyptube::roots::RootConfig;
use hyptube::special::ball_volume;
use hyptube::stability::{crossing_length_trend, geodesic_from_word, verify_stability};
use hyptube::{Area, Dimension, Length};

use schema::{
    CombineEnvelope, GroupFile, OutputFormat, Quantity, StabilityEnvelope, SweepEnvelope,
    SweepFile, TrendEnvelope, SCHEMA_VERSION,
};

/// Environment variable overriding the relative tolerance of the
/// tube-width root solve (default 1e−12).
const ROOT_TOL_ENV: &str = "HYPTUBE_ROOT_TOL";

#[derive(Parser)]
#[command(
    name = "hyptube",
    version,
    about = "Collar widths, tube volumes, and discreteness checks for hyperbolic manifolds",
    long_about = "Collar widths, tube volumes, and discreteness checks for hyperbolic \
                  manifolds.\n\n\
                  Exit codes: 0 success; 2 invalid input; 3 numerical failure \
                  (overflow or non-convergence); 4 negative verdict under --strict.\n\n\
                  Environment: HYPTUBE_ROOT_TOL overrides the relative tolerance of the \
                  tube-width root solve (default 1e-12)."
)]
struct Cli {
    /// Round printed numbers to this many significant digits
    /// (scientific notation); default prints full precision, the
    /// shortest decimal that re-reads to the same value.
    #[arg(long, global = true, value_parser = clap::value_parser!(u8).range(1..=17))]
    digits: Option<u8>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stable neighborhood (collar) width r(ℓ/2) of a closed geodesic
    /// of length ℓ
    Collar {
        /// Geodesic length ℓ > 0
        #[arg(long)]
        length: f64,
    },
    /// Tube width c_n(A): the width whose orthogonal discs have
    /// (n−1)-volume A (dimension ≥ 3)
    TubeWidth {
        /// Ambient dimension n
        #[arg(long)]
        dim: u32,
        /// Core hypersurface area A > 0
        #[arg(long)]
        area: f64,
    },
    /// Volume of the hyperbolic n-ball of the given radius
    BallVolume {
        /// Ambient dimension n
        #[arg(long)]
        dim: u32,
        /// Ball radius ≥ 0
        #[arg(long)]
        radius: f64,
    },
    /// Volume of the width-c_n(A) tube about a hypersurface of area A
    /// (in dimension 2: about a closed geodesic of length A)
    TubeVolume {
        /// Ambient dimension n
        #[arg(long)]
        dim: u32,
        /// Core hypersurface area (dimension 2: core geodesic length)
        #[arg(long)]
        area: f64,
        /// Count both sides of a two-sided hypersurface
        #[arg(long)]
        two_sided: bool,
    },
    /// Volume lower bound (√3/4)·cusps + a₃·surfaces for a hyperbolic
    /// 3-manifold with rank-two cusps and geodesic boundary surfaces
    Bounds {
        /// Number of rank-two cusps
        #[arg(long)]
        cusps: u32,
        /// Number of totally geodesic boundary surfaces
        #[arg(long)]
        surfaces: u32,
        /// Use the display-rounded surface coefficient 4.4 instead of
        /// the exact a₃ = π(log 2 + √2/2)
        #[arg(long)]
        display_rounded: bool,
    },
    /// Free-product combination check for two hyperplane subgroups
    /// described in a group file
    Combine {
        /// Group description JSON with exactly two subgroups
        #[arg(long)]
        file: PathBuf,
        /// Word length for truncated orbit searches
        #[arg(long, default_value_t = 4)]
        depth: usize,
        /// Exit 4 unless the verdict is certified_free_product
        #[arg(long)]
        strict: bool,
    },
    /// Stability check: crossing must match neighborhood overlap over
    /// all enumerated lift pairs of a closed geodesic
    Stability {
        /// Group description JSON with a surface section
        #[arg(long)]
        file: PathBuf,
        /// Word in the generator labels (default: first entry of the
        /// file's word list)
        #[arg(long)]
        word: Option<String>,
        /// Conjugator word length for lift enumeration
        #[arg(long)]
        depth: usize,
        /// Neighborhood width: "auto" for the stable width r(ℓ/2), or
        /// an explicit positive number
        #[arg(long, default_value = "auto")]
        width: String,
        /// Exit 4 if any violation is found
        #[arg(long)]
        strict: bool,
    },
    /// Minimum geodesic length per self-intersection lower bound,
    /// over all word classes up to a length cap
    Trend {
        /// Group description JSON with a surface section
        #[arg(long)]
        file: PathBuf,
        /// Longest word class to enumerate
        #[arg(long)]
        max_word_length: usize,
        /// Conjugator word length for the intersection bound
        #[arg(long)]
        depth: usize,
    },
    /// Evaluate one quantity over a parameter grid from a sweep spec
    /// (CSV by default)
    Sweep {
        /// Sweep specification JSON
        #[arg(long)]
        spec: PathBuf,
        /// Check the quantity's expected strict monotonicity across
        /// the emitted rows; failure exits 3
        #[arg(long)]
        verify: bool,
    },
}

/// Anything that stops a run: a library error (split into invalid
/// input vs numerical failure) or a front-end input problem.
enum Failure {
    Core(hyptube::Error),
    Input(String),
    Numerical(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        match self {
            Failure::Core(e) => {
                eprintln!("error: {e}");
                if e.is_numerical() {
                    ExitCode::from(3)
                } else {
                    ExitCode::from(2)
                }
            }
            Failure::Input(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(2)
            }
            Failure::Numerical(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(3)
            }
        }
    }
}

impl From<hyptube::Error> for Failure {
    fn from(e: hyptube::Error) -> Self {
        Failure::Core(e)
    }
}

impl From<schema::FieldError> for Failure {
    fn from(e: schema::FieldError) -> Self {
        Failure::Input(e.to_string())
    }
}

type RunResult = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(failure) => failure.exit(),
    }
}

fn run(cli: Cli) -> RunResult {
    let digits = cli.digits;
    match cli.command {
        Command::Collar { length } => {
            let w = stable_width(Length::new(length)?)?;
            print_number(w.value(), digits);
            Ok(ExitCode::SUCCESS)
        }
        Command::TubeWidth { dim, area } => {
            let cfg = root_config_from_env()?;
            let w = tube_width_with_config(Dimension::new(dim)?, Area::new(area)?, &cfg)?;
            print_number(w.value(), digits);
            Ok(ExitCode::SUCCESS)
        }
        Command::BallVolume { dim, radius } => {
            let v = ball_volume(Dimension::new(dim)?, Length::new(radius)?)?;
            print_number(v.value(), digits);
            Ok(ExitCode::SUCCESS)
        }
        Command::TubeVolume {
            dim,
            area,
            two_sided,
        } => {
            let cfg = root_config_from_env()?;
            let v = tube_volume_with_config(
                Dimension::new(dim)?,
                Area::new(area)?,
                !two_sided,
                &cfg,
            )?;
            print_number(v.value(), digits);
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds {
            cusps,
            surfaces,
            display_rounded,
        } => {
            let inputs = BoundInputs {
                cusp_count: cusps,
                surface_count: surfaces,
                dimension: Dimension::new(3).expect("3 is in range"),
            };
            let v = if display_rounded {
                volume_lower_bound_display_rounded(inputs)?
            } else {
                volume_lower_bound(inputs)?
            };
            print_number(v.value(), digits);
            Ok(ExitCode::SUCCESS)
        }
        Command::Combine {
            file,
            depth,
            strict,
        } => {
            let group: GroupFile = load_json(&file)?;
            let (first, second) = group.subgroup_pair()?;
            let report = check_combination(&first, &second, depth)?;
            let verdict = report.verdict;
            emit_json(&CombineEnvelope {
                schema: SCHEMA_VERSION,
                command: "combine".into(),
                report,
            })?;
            if strict && verdict != Verdict::CertifiedFreeProduct {
                return Ok(ExitCode::from(4));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stability {
            file,
            word,
            depth,
            width,
            strict,
        } => {
            let group_file: GroupFile = load_json(&file)?;
            let group = group_file.surface_group()?;
            let word_text = match word {
                Some(w) => w,
                None => group_file.words.first().cloned().ok_or_else(|| {
                    Failure::Input(
                        "no word given: pass --word or list one in the group file".into(),
                    )
                })?,
            };
            let parsed = group.parse_word(&word_text)?;
            let geodesic = geodesic_from_word(&group, &parsed)?;
            let width = match width.as_str() {
                "auto" => stable_width(geodesic.length())?,
                text => Length::new(text.parse::<f64>().map_err(|_| {
                    Failure::Input(format!(
                        "--width takes \"auto\" or a positive number, got {text:?}"
                    ))
                })?)?,
            };
            let report = verify_stability(&group, &geodesic, width, depth)?;
            let clean = report.violations.is_empty();
            emit_json(&StabilityEnvelope {
                schema: SCHEMA_VERSION,
                command: "stability".into(),
                report,
            })?;
            if strict && !clean {
                return Ok(ExitCode::from(4));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Trend {
            file,
            max_word_length,
            depth,
        } => {
            let group_file: GroupFile = load_json(&file)?;
            let group = group_file.surface_group()?;
            let bins = crossing_length_trend(&group, max_word_length, depth)?;
            emit_json(&TrendEnvelope {
                schema: SCHEMA_VERSION,
                command: "trend".into(),
                max_word_length,
                truncation_depth: depth,
                bins,
            })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep { spec, verify } => run_sweep(&spec, verify, digits),
    }
}

fn run_sweep(spec_path: &Path, verify: bool, digits: Option<u8>) -> RunResult {
    let spec: SweepFile = load_json(spec_path)?;
    spec.validate()?;
    let cfg = root_config_from_env()?;
    let dim = spec
        .dim
        .map(Dimension::new)
        .transpose()
        .map_err(Failure::Core)?;

    let mut rows: Vec<(f64, f64)> = Vec::with_capacity(spec.grid.count);
    for x in spec.grid.points() {
        let value = match spec.quantity {
            Quantity::Collar => stable_width(Length::new(x)?)?.value(),
            Quantity::TubeWidth => {
                tube_width_with_config(dim.expect("validated"), Area::new(x)?, &cfg)?.value()
            }
            Quantity::BallVolume => {
                ball_volume(dim.expect("validated"), Length::new(x)?)?.value()
            }
            Quantity::TubeVolume => tube_volume_with_config(
                dim.expect("validated"),
                Area::new(x)?,
                !spec.two_sided,
                &cfg,
            )?
            .value(),
        };
        rows.push((x, value));
    }

    if verify {
        check_monotone(&spec, &rows)?;
    }

    match spec.output {
        OutputFormat::Csv => {
            let (param, value) = spec.quantity.columns();
            let mut out = String::with_capacity(rows.len() * 48);
            out.push_str(param);
            out.push(',');
            out.push_str(value);
            out.push('\n');
            for (x, v) in &rows {
                out.push_str(&format_number(*x, digits));
                out.push(',');
                out.push_str(&format_number(*v, digits));
                out.push('\n');
            }
            print!("{out}");
        }
        OutputFormat::Json => emit_json(&SweepEnvelope {
            schema: SCHEMA_VERSION,
            command: "sweep".into(),
            quantity: spec.quantity,
            dim: spec.dim,
            two_sided: spec.two_sided,
            grid: spec.grid,
            rows,
        })?,
    }
    Ok(ExitCode::SUCCESS)
}

/// Strict monotonicity expected of each swept quantity; a violation is
/// reported as a numerical failure.
fn check_monotone(spec: &SweepFile, rows: &[(f64, f64)]) -> Result<(), Failure> {
    let increasing = match spec.quantity {
        Quantity::Collar | Quantity::TubeWidth => false,
        Quantity::BallVolume => true,
        // the dimension-2 tube volume decreases; every higher dimension
        // increases
        Quantity::TubeVolume => spec.dim != Some(2),
    };
    for pair in rows.windows(2) {
        let (x0, v0) = pair[0];
        let (x1, v1) = pair[1];
        let ok = if increasing { v1 > v0 } else { v1 < v0 };
        if !ok {
            return Err(Failure::Numerical(format!(
                "monotonicity check failed: value {v0} at {x0} then {v1} at {x1} \
                 (expected strictly {})",
                if increasing { "increasing" } else { "decreasing" }
            )));
        }
    }
    Ok(())
}

fn root_config_from_env() -> Result<RootConfig, Failure> {
    match std::env::var(ROOT_TOL_ENV) {
        Ok(text) => {
            let tol: f64 = text.parse().map_err(|_| {
                Failure::Input(format!("{ROOT_TOL_ENV} must be a number, got {text:?}"))
            })?;
            RootConfig::with_rel_tol(tol).map_err(Failure::Core)
        }
        Err(std::env::VarError::NotPresent) => Ok(RootConfig::default()),
        Err(std::env::VarError::NotUnicode(_)) => Err(Failure::Input(format!(
            "{ROOT_TOL_ENV} is not valid unicode"
        ))),
    }
}

fn load_json<T: DeserializeOwned>(path: &Path) -> Result<T, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn emit_json<T: serde::Serialize>(value: &T) -> Result<(), Failure> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| Failure::Input(format!("serializing report: {e}")))?;
    println!("{text}");
    Ok(())
}

fn print_number(x: f64, digits: Option<u8>) {
    println!("{}", format_number(x, digits));
}

/// Full precision by default: the shortest decimal string that parses
/// back to the identical f64. With `--digits d`: scientific notation
/// with `d` significant digits.
fn format_number(x: f64, digits: Option<u8>) -> String {
    match digits {
        None => format!("{x}"),
        Some(d) => format!("{:.*e}", usize::from(d) - 1, x),
    }
}
