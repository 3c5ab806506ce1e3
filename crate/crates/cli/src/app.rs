use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use hkcat::graded::hyperkahler_unit_verdict;
use hkcat::hodge::{prymian_pipeline, salamon_check};
use hkcat::orbifold::{
    category_euler_series, goettsche_coefficients, orbifold_euler, EulerFamily, K3_EULER,
};
use hkcat::permgroup::{count_point_orbits, subgroup_scan};
use hkcat::{PermutationGroup, DEFAULT_ELEMENT_CAP, DEFAULT_SUBSET_BUDGET};
use num_bigint::BigInt;
use serde::Serialize;
use thiserror::Error;

use crate::report::*;
use crate::spec::{parse_group_spec, GroupSpec, SpecError};

/// Largest group order for which `series --oracle` runs the direct
/// double loop over ordered pairs.
pub const PAIR_ORACLE_MAX_ORDER: usize = 2520;

#[derive(Debug, Parser)]
#[command(
    name = "hkcat",
    version,
    about = "Homogeneity, homological-unit and Euler-characteristic reports for permutation-group quotients"
)]
pub struct Cli {
    /// Print a JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Maximum number of group elements to enumerate.
    #[arg(long, global = true, default_value_t = DEFAULT_ELEMENT_CAP)]
    pub cap: usize,
    /// Maximum number of k-subsets visited per orbit computation.
    #[arg(long, global = true, default_value_t = DEFAULT_SUBSET_BUDGET)]
    pub subset_budget: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "Sn")]
    Sn,
    #[value(name = "An")]
    An,
    #[value(name = "sporadic")]
    Sporadic,
}

impl From<FamilyArg> for EulerFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Sn => EulerFamily::Sn,
            FamilyArg::An => EulerFamily::An,
            FamilyArg::Sporadic => EulerFamily::Sporadic,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Orbit counts on k-subsets for every k.
    Homog {
        #[arg(long)]
        group: String,
    },
    /// Invariant dimensions of the K3 product model and the hyper-Kähler verdict.
    Unit {
        #[arg(long)]
        group: String,
    },
    /// All subgroups of S_n up to conjugacy (n <= 5).
    Scan {
        #[arg(long)]
        n: usize,
    },
    /// Resolved Prymian pipeline with Salamon and Guan checks.
    Prymian,
    /// Salamon relation on hh^0, hh^1, ... (comma or space separated).
    Salamon {
        #[arg(long)]
        hh: String,
        #[arg(long)]
        r: u32,
    },
    /// Orbifold Euler characteristic of S^n modulo the group.
    Orbifold {
        #[arg(long)]
        group: String,
        #[arg(long, default_value_t = K3_EULER, allow_negative_numbers = true)]
        e_base: i64,
    },
    /// Orbifold Euler characteristics along a family.
    Series {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        max_n: usize,
        /// Compare each entry with an independent computation.
        #[arg(long)]
        oracle: bool,
        /// Also write the series as CSV.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = K3_EULER, allow_negative_numbers = true)]
        e_base: i64,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Domain(#[from] hkcat::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {message}")]
    Io { path: String, message: String },
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Spec(e) => e.code(),
            CliError::Domain(e) => e.code(),
            CliError::Usage(_) => "UsageError",
            CliError::Io { .. } => "IoError",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Spec(_) | CliError::Usage(_) => 2,
            CliError::Domain(_) | CliError::Io { .. } => 1,
        }
    }
}

#[derive(Serialize)]
struct ErrorBody<'a> {
    code: &'a str,
    message: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    offset: Option<usize>,
}

#[derive(Serialize)]
struct ErrorReport<'a> {
    error: ErrorBody<'a>,
}

fn error_json(code: &str, message: String, offset: Option<usize>) -> String {
    let report = ErrorReport {
        error: ErrorBody {
            code,
            message,
            offset,
        },
    };
    serde_json::to_string_pretty(&report).expect("error report serializes") + "\n"
}

/// What the process prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn render<R: Report>(r: &R, json: bool) -> String {
    if json {
        serde_json::to_string_pretty(r).expect("reports serialize") + "\n"
    } else {
        r.text()
    }
}

fn parse_spec(text: &str) -> Result<GroupSpec, CliError> {
    Ok(parse_group_spec(text)?)
}

fn parse_number_list(text: &str) -> Result<Vec<u64>, CliError> {
    let inner = text
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    inner
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<u64>()
                .map_err(|_| CliError::Usage(format!("--hh: '{s}' is not a non-negative integer")))
        })
        .collect()
}

/// Orbifold Euler characteristic by the plain double loop over all ordered
/// pairs of group elements.
fn pair_count_oracle(g: &PermutationGroup, e_base: i64, cap: usize) -> Result<BigInt, CliError> {
    let elements = g.enumerate_elements(cap)?;
    let base = BigInt::from(e_base);
    let mut total = BigInt::from(0);
    for a in elements {
        for b in elements {
            if a.commutes_with(b) {
                total += base.pow(count_point_orbits(&[a, b], g.degree()) as u32);
            }
        }
    }
    let order = BigInt::from(elements.len());
    if &total % &order != BigInt::from(0) {
        return Err(hkcat::Error::NonIntegralResult {
            order: elements.len(),
        }
        .into());
    }
    Ok(total / order)
}

fn series_report(
    family: FamilyArg,
    max_n: usize,
    oracle: bool,
    e_base: i64,
    cap: usize,
) -> Result<SeriesReport, CliError> {
    let family: EulerFamily = family.into();
    let series = category_euler_series(family, max_n, e_base, cap)?;
    let goettsche =
        (family == EulerFamily::Sn && oracle).then(|| goettsche_coefficients(max_n, e_base));
    let mut entries = Vec::with_capacity(series.entries.len());
    for e in &series.entries {
        let check = if !oracle {
            None
        } else if let Some(coeffs) = &goettsche {
            Some(OracleCell {
                oracle: Some(coeffs[e.n].to_string()),
                oracle_match: Some(coeffs[e.n] == e.euler),
            })
        } else {
            let group = pair_oracle_group(family, e.n, &e.label);
            match group {
                Some(g) if g.order(cap)? <= PAIR_ORACLE_MAX_ORDER => {
                    let v = pair_count_oracle(&g, e_base, cap)?;
                    Some(OracleCell {
                        oracle_match: Some(v == e.euler),
                        oracle: Some(v.to_string()),
                    })
                }
                Some(_) => Some(OracleCell {
                    oracle: None,
                    oracle_match: None,
                }),
                None => Some(OracleCell {
                    oracle: Some("1".to_string()),
                    oracle_match: Some(e.euler == BigInt::from(1)),
                }),
            }
        };
        entries.push(SeriesRow {
            n: e.n,
            label: e.label.clone(),
            euler: e.euler.to_string(),
            check,
        });
    }
    let oracle_name = oracle.then_some(match family {
        EulerFamily::Sn => "coefficients of prod_m (1 - z^m)^(-e_base)",
        _ => "direct count over ordered commuting pairs",
    });
    Ok(SeriesReport {
        family,
        e_base,
        oracle: oracle_name,
        entries,
        note: HKR_NOTE,
    })
}

/// The group behind a series entry, rebuilt from its spec so the oracle
/// does not share the series code path. `None` for the empty product.
fn pair_oracle_group(family: EulerFamily, n: usize, label: &str) -> Option<PermutationGroup> {
    if n == 0 {
        return None;
    }
    let spec = match family {
        EulerFamily::Sn => format!("Sn({n})"),
        EulerFamily::An => format!("An({n})"),
        EulerFamily::Sporadic => match label {
            "AGL(1,5)" => "AGL1(5)".to_string(),
            "PGL_2(5)" => "PGL2(5)".to_string(),
            "PGL_2(8)" => "PGL2(8)".to_string(),
            "PΓL_2(8)" => "PGammaL2(8)".to_string(),
            _ => return None,
        },
    };
    parse_group_spec(&spec).ok()?.resolve().ok()
}

fn execute(cli: &Cli) -> Result<String, CliError> {
    let json = cli.json;
    match &cli.command {
        Command::Homog { group } => {
            let spec = parse_spec(group)?;
            let g = spec.resolve()?;
            let profile = g.homogeneity_profile(cli.subset_budget)?;
            let report = HomogReport {
                group: GroupEcho::new(&spec, &g),
                failing_k: profile.failing_k(),
                is_homogeneous: profile.all_transitive,
                orbit_counts: profile.orbit_counts,
            };
            Ok(render(&report, json))
        }
        Command::Unit { group } => {
            let spec = parse_spec(group)?;
            let g = spec.resolve()?;
            let verdict = hyperkahler_unit_verdict(&g, cli.subset_budget)?;
            Ok(render(
                &UnitReport::new(GroupEcho::new(&spec, &g), verdict),
                json,
            ))
        }
        Command::Scan { n } => {
            let entries = subgroup_scan(*n)?;
            let rows: Vec<ScanRow> = entries.iter().map(ScanRow::from).collect();
            let report = ScanReport {
                n: *n,
                classes: rows.len(),
                passing: rows.iter().filter(|r| r.passes).count(),
                entries: rows,
            };
            Ok(render(&report, json))
        }
        Command::Prymian => Ok(render(&PrymianOutput::from(prymian_pipeline()?), json)),
        Command::Salamon { hh, r } => {
            let hh = parse_number_list(hh)?;
            let needed = 2 * *r as usize + 1;
            if hh.len() < needed {
                return Err(hkcat::Error::LengthMismatch {
                    expected: needed,
                    found: hh.len(),
                }
                .into());
            }
            let check = salamon_check(&hh, *r);
            Ok(render(&SalamonReport { hh, check }, json))
        }
        Command::Orbifold { group, e_base } => {
            let spec = parse_spec(group)?;
            let g = spec.resolve()?;
            let euler = orbifold_euler(&g, *e_base, cli.cap)?;
            let report = OrbifoldReport {
                group: GroupEcho::new(&spec, &g),
                e_base: *e_base,
                euler: euler.to_string(),
                note: HKR_NOTE,
            };
            Ok(render(&report, json))
        }
        Command::Series {
            family,
            max_n,
            oracle,
            out,
            e_base,
        } => {
            let report = series_report(*family, *max_n, *oracle, *e_base, cli.cap)?;
            if let Some(path) = out {
                let io = |message: String| CliError::Io {
                    path: path.display().to_string(),
                    message,
                };
                let bytes = report.csv().map_err(|e| io(e.to_string()))?;
                std::fs::write(path, bytes).map_err(|e| io(e.to_string()))?;
            }
            Ok(render(&report, json))
        }
    }
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let json = args.iter().skip(1).any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                return Outcome {
                    code,
                    stdout: rendered,
                    stderr: String::new(),
                };
            }
            let stdout = if json {
                let first = rendered
                    .lines()
                    .next()
                    .unwrap_or("")
                    .trim_start_matches("error: ");
                error_json("UsageError", first.to_string(), None)
            } else {
                String::new()
            };
            return Outcome {
                code: 2,
                stdout,
                stderr: rendered,
            };
        }
    };
    match execute(&cli) {
        Ok(stdout) => Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        },
        Err(e) => {
            let offset = match &e {
                CliError::Spec(SpecError::Parse { offset, .. })
                | CliError::Spec(SpecError::UnknownFamily { offset, .. }) => Some(*offset),
                _ => None,
            };
            let stderr = format!("error: {e}\n");
            let stdout = if json {
                error_json(e.code(), e.to_string(), offset)
            } else {
                String::new()
            };
            Outcome {
                code: e.exit_code(),
                stdout,
                stderr,
            }
        }
    }
}
