//! The `dyh` command-line tool.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 resource
//! bound exceeded.

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::element::Element;
use crate::error::{Error, Result};
use crate::hecke::{HAlgebra, HMonomial};
use crate::io::{self, Report};
use crate::iso::Isomorphism;
use crate::rewrite::Variant;
use crate::scalar::parse_rational;
use crate::structure::{self, gram_matrix};
use crate::verify::{self, Scope};
use crate::yokonuma::{YAlgebra, YElement, YParams};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BOUND: i32 = 3;

/// Below this dimension verification is exhaustive unless sampling is
/// requested explicitly.
pub const EXHAUSTIVE_DEFAULT_BELOW: usize = 64;

#[derive(Parser, Debug)]
#[command(name = "dyh", version, about = "Exact computations in degenerate cyclotomic Yokonuma-Hecke algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of a JSON element (idempotent or t-presentation).
    Nf {
        #[arg(long, short)]
        input: PathBuf,
        /// Emit the t-presentation instead of the idempotent basis.
        #[arg(long)]
        t_basis: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Product of two JSON elements.
    Mult {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Image of an element in the direct sum of matrix algebras.
    Phi {
        #[arg(long, short)]
        input: PathBuf,
        /// Apply the inverse to the result and check it returns the input.
        #[arg(long)]
        round_trip: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Preimage of a full image document.
    Psi {
        #[arg(long, short)]
        input: PathBuf,
        #[arg(long)]
        round_trip: bool,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Homomorphism, bijection and exponent-exchange checks for the isomorphism.
    VerifyIso {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        scope: ScopeArgs,
        #[command(flatten)]
        out: ReportArgs,
    },
    /// Gram matrix of a form and its determinant.
    Gram {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum)]
        form: FormName,
        #[arg(long, default_value_t = 256)]
        max_dim: usize,
        #[command(flatten)]
        out: ReportArgs,
    },
    /// Semisimplicity criterion against the radical oracle.
    Semisimple {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 128)]
        max_dim: usize,
        #[command(flatten)]
        out: ReportArgs,
    },
    /// Schur elements of the built-in simple modules and the product formula.
    Schur {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, default_value_t = 64)]
        max_dim: usize,
        #[command(flatten)]
        out: ReportArgs,
    },
    /// Dimension identity table over a parameter range.
    Dims {
        #[arg(long, default_value_t = 4)]
        r_max: usize,
        #[arg(long, default_value_t = 5)]
        n_max: usize,
        #[arg(long, default_value_t = 3)]
        d_max: usize,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ParamArgs {
    #[arg(long)]
    pub r: usize,
    #[arg(long)]
    pub n: usize,
    /// Level; must equal the number of `--v` values.
    #[arg(long)]
    pub d: Option<usize>,
    /// Cyclotomic parameters as rationals "p/q", one flag per value.
    #[arg(long = "v", allow_hyphen_values = true)]
    pub v: Vec<String>,
}

impl ParamArgs {
    pub fn to_params(&self) -> Result<YParams> {
        if self.v.is_empty() {
            return Err(Error::Parse("give the cyclotomic parameters with --v".into()));
        }
        if let Some(d) = self.d {
            if d != self.v.len() {
                return Err(Error::ParameterMismatch(format!("--d {d} but {} values of --v", self.v.len())));
            }
        }
        let v = self.v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>>>()?;
        Ok(YParams {
            r: self.r,
            n: self.n,
            variant: Variant::cyclotomic(v)?,
        })
    }
}

#[derive(Args, Debug, Clone)]
pub struct ScopeArgs {
    /// Check every basis pair regardless of dimension.
    #[arg(long, conflicts_with = "samples")]
    pub exhaustive: bool,
    /// Number of random basis pairs; requires --seed.
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
}

#[derive(Args, Debug, Clone)]
pub struct ReportArgs {
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Include wall-clock time in the report (makes output non-reproducible).
    #[arg(long)]
    pub timing: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormName {
    /// The form on Y with value 1 on t^0 x^(d-1,...,d-1).
    Tau,
    /// The form on Y with value 1 on each E_χ x^(d-1,...,d-1).
    RhoHatN,
    /// Sum over blocks of τ^μ composed with the matrix trace and Φ_μ.
    RhoN,
    /// The trace τ on the Hecke algebra H_n^d with the same parameters.
    TauN,
}

/// Why a command did not succeed.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Bound(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::DimensionBound { .. } => Failure::Bound(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type CmdResult = std::result::Result<(), Failure>;

fn read_json(path: &PathBuf) -> std::result::Result<Value, Failure> {
    let text = if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        s
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: malformed JSON: {e}", path.display())))
}

fn write_out(output: &Option<PathBuf>, text: &str) -> CmdResult {
    match output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Input(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn algebra_of(doc: &Value) -> std::result::Result<YAlgebra, Failure> {
    Ok(YAlgebra::new(io::read_params(doc)?)?)
}

fn emit_report(mut report: Report, out: &ReportArgs, start: Instant) -> CmdResult {
    if out.timing {
        report.timing_ms = Some(start.elapsed().as_millis());
    }
    write_out(&out.output, &io::to_pretty(&report))?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Verify)
    }
}

fn bounded(y: &YAlgebra, max_dim: usize) -> std::result::Result<usize, Failure> {
    let dim = y.dimension()?;
    if dim > max_dim {
        return Err(Error::DimensionBound { dim, bound: max_dim }.into());
    }
    Ok(dim)
}

pub fn run(cli: Cli) -> CmdResult {
    let start = Instant::now();
    match cli.command {
        Command::Nf { input, t_basis, output } => {
            let doc = read_json(&input)?;
            let y = algebra_of(&doc)?;
            let e = io::read_y_element(&y, &doc)?;
            let out = if t_basis {
                io::t_element_to_json(y.params(), &y.to_t(&e))
            } else {
                io::y_element_to_json(y.params(), &e)
            };
            write_out(&output, &io::to_pretty(&out))
        }
        Command::Mult { left, right, output } => {
            let (a, b) = (read_json(&left)?, read_json(&right)?);
            let y = algebra_of(&a)?;
            if io::read_params(&b)? != *y.params() {
                return Err(Failure::Input("operands have different parameters".into()));
            }
            let p = y.multiply(&io::read_y_element(&y, &a)?, &io::read_y_element(&y, &b)?)?;
            write_out(&output, &io::to_pretty(&io::y_element_to_json(y.params(), &p)))
        }
        Command::Phi { input, round_trip, output } => {
            let doc = read_json(&input)?;
            let y = algebra_of(&doc)?;
            let e = io::read_y_element(&y, &doc)?;
            let iso = Isomorphism::new(y)?;
            let img = iso.phi_full(&e)?;
            write_out(&output, &io::to_pretty(&io::full_image_to_json(iso.yokonuma().params(), &img)))?;
            if round_trip && iso.psi_full(&img)? != e {
                eprintln!("round trip failed: psi(phi(e)) differs from e");
                return Err(Failure::Verify);
            }
            Ok(())
        }
        Command::Psi { input, round_trip, output } => {
            let doc = read_json(&input)?;
            let iso = Isomorphism::new(algebra_of(&doc)?)?;
            let img = io::read_full_image(&iso, &doc)?;
            let e = iso.psi_full(&img)?;
            write_out(&output, &io::to_pretty(&io::y_element_to_json(iso.yokonuma().params(), &e)))?;
            if round_trip && iso.phi_full(&e)? != img {
                eprintln!("round trip failed: phi(psi(M)) differs from M");
                return Err(Failure::Verify);
            }
            Ok(())
        }
        Command::VerifyIso { params, scope, out } => {
            let y = YAlgebra::new(params.to_params()?)?;
            let dim = y.dimension()?;
            let scope = match (scope.exhaustive, scope.samples, scope.seed) {
                (true, _, _) => Scope::Exhaustive,
                (false, Some(count), Some(seed)) => Scope::Sampled { count, seed },
                (false, Some(_), None) => return Err(Failure::Input("--samples requires --seed".into())),
                (false, None, _) if dim < EXHAUSTIVE_DEFAULT_BELOW => Scope::Exhaustive,
                (false, None, Some(seed)) => Scope::Sampled { count: 10_000, seed },
                (false, None, None) => {
                    return Err(Failure::Input(format!(
                        "dimension {dim} needs --exhaustive, or --seed for sampling"
                    )))
                }
            };
            let iso = Isomorphism::new(y.clone())?;
            let sweeps = [
                verify::homomorphism(&iso, scope)?,
                verify::bijection(&iso)?,
                verify::crucial_equality(&y)?,
            ];
            let passed = sweeps.iter().all(verify::Sweep::passed);
            let scope_json = match scope {
                Scope::Exhaustive => json!("exhaustive"),
                Scope::Sampled { count, seed } => json!({"samples": count, "seed": seed}),
            };
            let summary = json!({
                "dimension": dim,
                "scope": scope_json,
                "sweeps": sweeps.iter().map(verify::Sweep::summary).collect::<Vec<_>>(),
            });
            let witnesses = sweeps
                .iter()
                .flat_map(|s| s.failures.iter().map(move |f| json!({"sweep": s.name, "witness": f})))
                .collect();
            emit_report(Report::new("verify-iso", y.params(), passed, summary, witnesses), &out, start)
        }
        Command::Gram { params, form, max_dim, out } => {
            let p = params.to_params()?;
            let y = YAlgebra::new(p.clone())?;
            let (gram, det, symmetric) = match form {
                FormName::TauN => {
                    let h = HAlgebra::single(p.n, p.variant.clone())?;
                    let dim = h.dimension()?;
                    if dim > max_dim {
                        return Err(Error::DimensionBound { dim, bound: max_dim }.into());
                    }
                    let tau = |e: &Element<HMonomial>| h.form_tau_n(e);
                    let g = gram_matrix(&h, h.enumerate_basis(None)?, &tau, "tau-n")?;
                    (g.gram.clone(), g.determinant()?, g.is_symmetric())
                }
                _ => {
                    bounded(&y, max_dim)?;
                    let iso = Isomorphism::new(y.clone())?;
                    let basis = y.enumerate_basis(None)?;
                    let g = match form {
                        FormName::Tau => gram_matrix(&y, basis, &|e: &YElement| y.form_tau_hat(e), "tau")?,
                        FormName::RhoHatN => {
                            gram_matrix(&y, basis, &|e: &YElement| y.form_rho_hat_n(e), "rho-hat-n")?
                        }
                        _ => gram_matrix(&y, basis, &|e: &YElement| structure::form_rho_n(&iso, e), "rho-n")?,
                    };
                    (g.gram.clone(), g.determinant()?, g.is_symmetric())
                }
            };
            let rows: Vec<Vec<Value>> = (0..gram.rows())
                .map(|i| gram.row(i).iter().map(io::scalar_to_json).collect())
                .collect();
            let summary = json!({
                "form": form.to_possible_value().map(|v| v.get_name().to_string()),
                "size": rows.len(),
                "determinant": io::scalar_to_json(&det),
                "invertible": !det.is_zero(),
                "symmetric": symmetric,
                "gram": rows,
            });
            emit_report(Report::new("gram", y.params(), true, summary, Vec::new()), &out, start)
        }
        Command::Semisimple { params, max_dim, out } => {
            let y = YAlgebra::new(params.to_params()?)?;
            bounded(&y, max_dim)?;
            let criterion = structure::semisimplicity_criterion(y.params())?;
            let oracle = structure::radical_oracle(&y, max_dim)?;
            let summary = json!({"criterion": criterion, "oracle": oracle, "agree": criterion == oracle});
            emit_report(Report::new("semisimple", y.params(), criterion == oracle, summary, Vec::new()), &out, start)
        }
        Command::Schur { params, max_dim, out } => {
            let y = YAlgebra::new(params.to_params()?)?;
            bounded(&y, max_dim)?;
            let iso = Isomorphism::new(y.clone())?;
            let rows = structure::schur_table(&iso)?;
            let passed = rows.iter().all(|r| r.agrees);
            let table: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({
                        "mu": r.mu,
                        "label": r.label,
                        "dimension": r.dimension,
                        "components": r.components.iter().map(io::scalar_to_json).collect::<Vec<_>>(),
                        "product": io::scalar_to_json(&r.product),
                        "transported": io::scalar_to_json(&r.transported),
                        "agrees": r.agrees,
                    })
                })
                .collect();
            let witnesses = table.iter().filter(|r| r["agrees"] == json!(false)).cloned().collect();
            emit_report(Report::new("schur", y.params(), passed, json!({"table": table}), witnesses), &out, start)
        }
        Command::Dims { r_max, n_max, d_max, output } => {
            let mut rows = Vec::new();
            let mut all = true;
            for r in 1..=r_max {
                for n in 1..=n_max {
                    for d in 1..=d_max {
                        let (lhs, rhs) = structure::dimension_identity_sides(r, n, d);
                        all &= lhs == rhs;
                        rows.push(json!({"r": r, "n": n, "d": d, "dim_y": lhs.to_string(), "sum_blocks": rhs.to_string(), "equal": lhs == rhs}));
                    }
                }
            }
            let doc = json!({
                "format_version": io::FORMAT_VERSION,
                "check": "dims",
                "version": env!("CARGO_PKG_VERSION"),
                "status": if all { "pass" } else { "fail" },
                "rows": rows,
            });
            write_out(&output, &io::to_pretty(&doc))?;
            if all {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        }
    }
}

/// Parses arguments, runs the command and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(cli) {
        Ok(()) => EXIT_OK,
        Err(Failure::Verify) => EXIT_VERIFY,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Bound(msg)) => {
            eprintln!("error: {msg}");
            EXIT_BOUND
        }
    }
}
