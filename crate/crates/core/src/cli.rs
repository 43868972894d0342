//! Command-line front end. [`run`] parses arguments, writes the report and
//! returns the process exit code: 0 on success, 1 when a verification fails,
//! 2 on a usage error.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::dirac::{self, eigenbasis_abstract, spectrum_from_blocks, spectrum_table, SpectrumRow};
use crate::exactnum::{GaussianRational, Rational};
use crate::geometry::{
    self, dirac_section, eta_quadrature, exact_tensor_rule, gram_proportionality, laplace_section,
    monomial_integral, IntegralValue, QuadratureSpec,
};
use crate::polyring::{Polynomial, View};
use crate::repspace::{casimir, commutators_hold};
use crate::transfer::{self, transfer_eigenbasis, TransferredEigenvector};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Largest `k` accepted without `--unsafe-k`.
pub const K_CAP: usize = 12;

pub const THREADS_ENV: &str = "SPINOR_S3_THREADS";

#[derive(Parser, Debug)]
#[command(
    name = "spinor-s3",
    version,
    about = "Exact Dirac spectrum and eigenbasis on the round 3-sphere"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dirac eigenvalues and multiplicities on V_0 .. V_{k-max}
    Spectrum {
        #[arg(long, default_value_t = 4)]
        k_max: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Polynomial eigensections of the Dirac operator on V_k
    Eigenbasis {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites
    Verify {
        #[arg(long, value_delimiter = ',', default_value = "all")]
        suite: Vec<Suite>,
        /// Applies to every selected suite; each suite has its own default
        #[arg(long)]
        k_max: Option<usize>,
        #[command(flatten)]
        quadrature: QuadratureArgs,
        #[command(flatten)]
        common: Common,
    },
    /// Exact Gram matrix of the transfer images on W_k
    Gram {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        common: Common,
    },
    /// Numerical integrals of all monomials up to a degree against the exact values
    Quadrature {
        #[arg(long, default_value_t = 4)]
        max_degree: u32,
        #[command(flatten)]
        quadrature: QuadratureArgs,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Allow k above the default cap
    #[arg(long)]
    pub unsafe_k: bool,
}

#[derive(Args, Debug, Clone)]
pub struct QuadratureArgs {
    /// Quadrature rule; `verify` runs the Monte Carlo check under either rule
    #[arg(long, value_enum, default_value_t = Rule::Tensor)]
    pub rule: Rule,
    #[arg(long, default_value_t = 1_000_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Table,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rule {
    Tensor,
    Mc,
}

#[derive(ValueEnum, Serialize, Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Casimir,
    Quadratic,
    Spectrum,
    Transfer,
    Dirac,
    Laplace,
    Integral,
    Gram,
    All,
}

impl Suite {
    const EVERY: [Suite; 8] = [
        Suite::Casimir,
        Suite::Quadratic,
        Suite::Spectrum,
        Suite::Transfer,
        Suite::Dirac,
        Suite::Laplace,
        Suite::Integral,
        Suite::Gram,
    ];

    fn default_k_max(self) -> usize {
        match self {
            Suite::Casimir | Suite::Quadratic => 12,
            Suite::Spectrum | Suite::Transfer => 8,
            Suite::Dirac | Suite::Laplace => 6,
            Suite::Gram => 5,
            Suite::Integral | Suite::All => 0,
        }
    }

    fn name(self) -> &'static str {
        match self {
            Suite::Casimir => "casimir",
            Suite::Quadratic => "quadratic",
            Suite::Spectrum => "spectrum",
            Suite::Transfer => "transfer",
            Suite::Dirac => "dirac",
            Suite::Laplace => "laplace",
            Suite::Integral => "integral",
            Suite::Gram => "gram",
            Suite::All => "all",
        }
    }
}

/// One line of a verification report.
#[derive(Serialize, Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub suite: Suite,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

impl CheckResult {
    fn new(suite: Suite, k: Option<usize>, check: &str, passed: bool, detail: String) -> Self {
        CheckResult {
            suite,
            k,
            check: check.to_string(),
            passed,
            detail,
        }
    }
}

pub fn exit_code(results: &[CheckResult]) -> i32 {
    if results.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAILED
    }
}

/// Floating values in reports: 12 significant digits.
pub fn format_float(x: f64) -> String {
    format!("{x:.11e}")
}

struct UsageError(String);

fn check_cap(k: usize, common: &Common) -> Result<(), UsageError> {
    if k > K_CAP && !common.unsafe_k {
        return Err(UsageError(format!(
            "k = {k} exceeds the cap of {K_CAP}; exact arithmetic cost grows quickly, pass --unsafe-k to override"
        )));
    }
    Ok(())
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
    {
        if n > 0 {
            // Fails only if a global pool already exists, which is fine.
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
}

/// Entry point shared by the binary and the tests.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    configure_threads();
    let (common, outcome) = match &cli.command {
        Command::Spectrum { k_max, common } => (common, cmd_spectrum(*k_max, common)),
        Command::Eigenbasis { k, common } => (common, cmd_eigenbasis(*k, common)),
        Command::Verify {
            suite,
            k_max,
            quadrature,
            common,
        } => (common, cmd_verify(suite, *k_max, quadrature, common)),
        Command::Gram { k, common } => (common, cmd_gram(*k, common)),
        Command::Quadrature {
            max_degree,
            quadrature,
            common,
        } => (common, cmd_quadrature(*max_degree, quadrature, common)),
    };
    match outcome {
        Err(UsageError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Ok((text, code)) => {
            let written = match &common.out {
                Some(path) => std::fs::write(path, text.as_bytes()),
                None => stdout.write_all(text.as_bytes()),
            };
            if let Err(e) = written {
                let _ = writeln!(stderr, "error: cannot write output: {e}");
                return EXIT_USAGE;
            }
            code
        }
    }
}

type Outcome = Result<(String, i32), UsageError>;

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn cmd_spectrum(k_max: usize, common: &Common) -> Outcome {
    check_cap(k_max, common)?;
    let rows = spectrum_table(k_max);
    let text = match common.format {
        Format::Json => to_json(&rows),
        Format::Table => {
            let mut s = format!("{:>3}  {:>10}  {:>12}\n", "k", "eigenvalue", "multiplicity");
            for SpectrumRow {
                k,
                eigenvalue,
                multiplicity,
            } in &rows
            {
                let _ = writeln!(
                    s,
                    "{k:>3}  {:>10}  {multiplicity:>12}",
                    eigenvalue.to_string()
                );
            }
            s
        }
    };
    Ok((text, EXIT_OK))
}

#[derive(Serialize)]
struct EigenbasisReport<'a> {
    k: usize,
    count: usize,
    sections: &'a [TransferredEigenvector],
}

fn cmd_eigenbasis(k: usize, common: &Common) -> Outcome {
    check_cap(k, common)?;
    let sections = transfer_eigenbasis(k);
    let bad: Vec<usize> = sections
        .par_iter()
        .enumerate()
        .filter(|(_, v)| dirac_section(&v.section) != v.section.scale_rational(&v.eigenvalue))
        .map(|(i, _)| i)
        .collect();
    if !bad.is_empty() {
        return Ok((
            format!("verification failed for sections {bad:?}\n"),
            EXIT_FAILED,
        ));
    }
    let text = match common.format {
        Format::Json => to_json(&EigenbasisReport {
            k,
            count: sections.len(),
            sections: &sections,
        }),
        Format::Table => {
            let mut s = String::new();
            for v in &sections {
                let _ = writeln!(
                    s,
                    "{:<5} q={} p={} eigenvalue={}\n  f = {}\n  g = {}",
                    v.family, v.q, v.p, v.eigenvalue, v.section.f, v.section.g
                );
            }
            s
        }
    };
    Ok((text, EXIT_OK))
}

fn cmd_gram(k: usize, common: &Common) -> Outcome {
    check_cap(k, common)?;
    let g = geometry::gram_matrix(k);
    let ratio = gram_proportionality(k);
    let code = if ratio.is_some() {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    let text = match common.format {
        Format::Json => {
            let rows: Vec<Vec<IntegralValue>> = g
                .to_rows()
                .into_iter()
                .map(|r| r.into_iter().map(IntegralValue::new).collect())
                .collect();
            to_json(&serde_json::json!({
                "k": k,
                "diagonal": g.is_diagonal(),
                "ratio_to_prediction": ratio.map(|r| r.to_string()),
                "entries": rows,
            }))
        }
        Format::Table => {
            let mut s = format!("Gram matrix of I(|p>|q>), k = {k}, in units of 2pi^2\n");
            let _ = writeln!(s, "diagonal: {}", g.is_diagonal());
            for (idx, d) in g.diagonal().iter().enumerate() {
                let _ = writeln!(s, "  p={} q={}  {}", idx / (k + 1), idx % (k + 1), d);
            }
            match &ratio {
                Some(r) => {
                    let _ = writeln!(s, "diagonal = {r} / (C(k,p) C(k,q))");
                }
                None => s.push_str("diagonal is not proportional to 1 / (C(k,p) C(k,q))\n"),
            }
            s
        }
    };
    Ok((text, code))
}

fn quadrature_spec(args: &QuadratureArgs, degree: u32) -> QuadratureSpec {
    match args.rule {
        Rule::Tensor => exact_tensor_rule(degree),
        Rule::Mc => QuadratureSpec::Mc {
            samples: args.samples,
            seed: args.seed,
        },
    }
}

/// All exponent vectors of total degree `<= d`, graded.
fn monomials_up_to(d: u32) -> Vec<[u32; 4]> {
    let mut out = Vec::new();
    for total in 0..=d {
        for a in 0..=total {
            for b in 0..=total - a {
                for c in 0..=total - a - b {
                    out.push([a, b, c, total - a - b - c]);
                }
            }
        }
    }
    out
}

#[derive(Serialize)]
struct QuadratureRow {
    exponents: [u32; 4],
    exact: IntegralValue,
    numeric_re: String,
    numeric_im: String,
    std_error: Option<String>,
    passed: bool,
    /// Relative error for the tensor rule, standard errors for Monte Carlo.
    #[serde(skip)]
    deviation: f64,
}

fn quadrature_row(e: [u32; 4], spec: &QuadratureSpec) -> Result<QuadratureRow, UsageError> {
    let poly = Polynomial::term(View::Z, e, GaussianRational::one());
    let est = eta_quadrature(&poly, spec).map_err(|e| UsageError(e.to_string()))?;
    let exact = monomial_integral(e);
    let diff = (est.value - exact.to_complex()).norm();
    let (passed, deviation) = match est.std_error {
        None => {
            let rel = diff / (1.0 + exact.to_complex().norm());
            (rel <= 1e-8, rel)
        }
        Some(se) => (
            diff <= 3.0 * se + 1e-12,
            if se > 0.0 { diff / se } else { 0.0 },
        ),
    };
    Ok(QuadratureRow {
        exponents: e,
        exact,
        numeric_re: format_float(est.value.re),
        numeric_im: format_float(est.value.im),
        std_error: est.std_error.map(format_float),
        passed,
        deviation,
    })
}

fn cmd_quadrature(max_degree: u32, args: &QuadratureArgs, common: &Common) -> Outcome {
    if max_degree > 2 * K_CAP as u32 && !common.unsafe_k {
        return Err(UsageError(format!(
            "max degree {max_degree} exceeds {}; pass --unsafe-k",
            2 * K_CAP
        )));
    }
    let spec = quadrature_spec(args, max_degree);
    let rows: Vec<QuadratureRow> = monomials_up_to(max_degree)
        .into_iter()
        .map(|e| quadrature_row(e, &spec))
        .collect::<Result<_, _>>()?;
    let code = if rows.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAILED
    };
    let text = match common.format {
        Format::Json => to_json(&serde_json::json!({ "rule": spec, "rows": rows })),
        Format::Table => {
            let mut s = format!(
                "rule: {}\n",
                serde_json::to_string(&spec).expect("serializable")
            );
            for r in &rows {
                let _ = writeln!(
                    s,
                    "{} {:?}  exact = {} * 2pi^2  numeric = {} {:+} i{}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.exponents,
                    r.exact.coefficient,
                    r.numeric_re,
                    r.numeric_im,
                    r.std_error
                        .as_ref()
                        .map(|se| format!("  se = {se}"))
                        .unwrap_or_default()
                );
            }
            s
        }
    };
    Ok((text, code))
}

fn cmd_verify(
    suites: &[Suite],
    k_max: Option<usize>,
    quad: &QuadratureArgs,
    common: &Common,
) -> Outcome {
    if let Some(k) = k_max {
        check_cap(k, common)?;
    }
    let mut selected: Vec<Suite> = if suites.contains(&Suite::All) {
        Suite::EVERY.to_vec()
    } else {
        suites.to_vec()
    };
    selected.sort();
    selected.dedup();

    let mut jobs: Vec<(Suite, Option<usize>)> = Vec::new();
    for &s in &selected {
        if s == Suite::Integral {
            jobs.push((s, None));
        } else {
            let top = k_max.unwrap_or_else(|| s.default_k_max());
            jobs.extend((0..=top).map(|k| (s, Some(k))));
        }
    }
    let mut results: Vec<CheckResult> = jobs
        .par_iter()
        .flat_map_iter(|&(s, k)| match k {
            Some(k) => suite_checks(s, k),
            None => integral_checks(quad),
        })
        .collect();
    results.sort_by_key(|r| (r.suite, r.k));
    let code = exit_code(&results);
    let text = match common.format {
        Format::Json => to_json(&results),
        Format::Table => {
            let mut s = String::new();
            for r in &results {
                let k = r.k.map(|k| format!("k={k}")).unwrap_or_default();
                let _ = writeln!(
                    s,
                    "{} {:<9} {:<5} {}: {}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.suite.name(),
                    k,
                    r.check,
                    r.detail
                );
            }
            let passed = results.iter().filter(|r| r.passed).count();
            let _ = writeln!(s, "{passed}/{} checks passed", results.len());
            s
        }
    };
    Ok((text, code))
}

/// The per-`k` checks of one suite.
pub fn suite_checks(suite: Suite, k: usize) -> Vec<CheckResult> {
    let kk = k as i64;
    let res = |check: &str, passed: bool, detail: String| {
        CheckResult::new(suite, Some(k), check, passed, detail)
    };
    match suite {
        Suite::Casimir => {
            let value = kk * (kk + 2);
            vec![
                res(
                    "casimir",
                    casimir(k).is_scalar(&GaussianRational::from(value)),
                    format!("-(l1^2+l2^2+l3^2) = {value} Id"),
                ),
                res(
                    "commutators",
                    commutators_hold(k),
                    "[l_i, l_j] = 2 l_{e_i e_j}".into(),
                ),
            ]
        }
        Suite::Quadratic => {
            let agree = dirac::Slot::ALL.into_iter().all(|s| {
                (0..=k).all(|p| {
                    let v = dirac::SpinorVector::basis(k, 0, s, p).expect("in range");
                    dirac::dbar_apply(&v) == dirac::dbar_first_principles(&v)
                })
            });
            vec![
                res(
                    "quadratic",
                    dirac::quadratic_check(k),
                    format!("(Dbar + {k})(Dbar - {}) = 0", k + 2),
                ),
                res(
                    "dbar-closed-form",
                    agree,
                    "basis formulas match -sum (l_i .) e_i".into(),
                ),
            ]
        }
        Suite::Spectrum => {
            let (plus, minus) = eigenbasis_abstract(k);
            let families_ok = plus.verify()
                && minus.verify()
                && plus.len() == k * (k + 1)
                && minus.len() == (k + 1) * (k + 2);
            let table: Vec<SpectrumRow> =
                spectrum_table(k).into_iter().filter(|r| r.k == k).collect();
            let brute = spectrum_from_blocks(k);
            vec![
                res(
                    "families",
                    families_ok,
                    format!(
                        "{} at {}, {} at {}",
                        plus.len(),
                        plus.dirac_eigenvalue,
                        minus.len(),
                        minus.dirac_eigenvalue
                    ),
                ),
                res(
                    "brute-force",
                    brute.as_ref() == Some(&table),
                    match &brute {
                        Some(rows) => rows
                            .iter()
                            .map(|r| format!("{} x{}", r.eigenvalue, r.multiplicity))
                            .collect::<Vec<_>>()
                            .join(", "),
                        None => "block matrix is not diagonalizable over Z".into(),
                    },
                ),
            ]
        }
        Suite::Transfer => {
            let recursive_ok = (0..=k).all(|p| {
                (0..=k).all(|q| {
                    transfer::iso_recursive(k, p, q).expect("in range")
                        == transfer::iso_closed_form(k, p, q).expect("in range")
                })
            });
            let harmonic = transfer::all_images(k)
                .iter()
                .all(|im| im.poly.is_harmonic());
            let rank = transfer::image_rank(k);
            vec![
                res(
                    "closed-vs-recursive",
                    recursive_ok,
                    format!("{} images", (k + 1) * (k + 1)),
                ),
                res(
                    "equivariance",
                    transfer::equivariance_holds(k),
                    "Y_L, Y_R lower p and q".into(),
                ),
                res(
                    "exponents",
                    transfer::exponents_balanced(k),
                    format!("every term has degree {k}"),
                ),
                res("harmonic", harmonic, "laplacian_r4 = 0".into()),
                res("rank", rank == (k + 1) * (k + 1), format!("rank {rank}")),
            ]
        }
        Suite::Dirac => {
            let sections = transfer_eigenbasis(k);
            let ok = sections
                .iter()
                .all(|v| dirac_section(&v.section) == v.section.scale_rational(&v.eigenvalue));
            vec![res(
                "eigen-identity",
                ok,
                format!("{} sections, D sigma = lambda sigma", sections.len()),
            )]
        }
        Suite::Laplace => {
            let sections = transfer_eigenbasis(k);
            let lambda = Rational::from_int(1 - (kk + 1) * (kk + 1));
            let eig = sections
                .iter()
                .all(|v| laplace_section(&v.section) == v.section.scale_rational(&lambda));
            let commute = sections.iter().all(|v| {
                laplace_section(&dirac_section(&v.section))
                    == dirac_section(&laplace_section(&v.section))
            });
            vec![
                res(
                    "eigenvalue",
                    eig,
                    format!("Delta = {lambda} on {} sections", sections.len()),
                ),
                res("commutes-with-dirac", commute, "D Delta = Delta D".into()),
            ]
        }
        Suite::Gram => {
            let ratio = gram_proportionality(k);
            let passed = ratio.is_some();
            let detail = match ratio {
                Some(r) => format!("diagonal, entries = {r} / (C(k,p) C(k,q))"),
                None => "not diagonal or not proportional".into(),
            };
            vec![res("gram", passed, detail)]
        }
        Suite::Integral | Suite::All => Vec::new(),
    }
}

/// Test functions for the Monte Carlo check, with known nonzero and zero
/// integrals.
fn mc_test_functions() -> Vec<[u32; 4]> {
    vec![
        [0, 0, 0, 0],
        [1, 1, 0, 0],
        [0, 0, 1, 1],
        [1, 1, 1, 1],
        [2, 2, 0, 0],
        [0, 0, 2, 2],
        [1, 0, 0, 0],
        [2, 1, 0, 1],
    ]
}

pub fn integral_checks(args: &QuadratureArgs) -> Vec<CheckResult> {
    let res = |check: &str, passed: bool, detail: String| {
        CheckResult::new(Suite::Integral, None, check, passed, detail)
    };
    let mut out = Vec::new();

    let norms_ok = (0..=K_CAP as u32).all(|k| {
        let g = Polynomial::g2().pow(k);
        geometry::l2_inner_product(&g, &g).coefficient
            == GaussianRational::real(Rational::new(1, k as i64 + 1))
    });
    out.push(res(
        "norm-g2^k",
        norms_ok,
        "<g2^k, g2^k> = 2pi^2 / (k+1), k <= 12".into(),
    ));

    let numeric = |spec: &QuadratureSpec, monomials: &[[u32; 4]]| -> (bool, f64) {
        monomials.iter().fold((true, 0.0f64), |(ok, worst), &e| {
            match quadrature_row(e, spec) {
                Ok(r) => (ok && r.passed, worst.max(r.deviation)),
                Err(_) => (false, worst),
            }
        })
    };
    if args.rule == Rule::Tensor {
        let monomials = monomials_up_to(8);
        let (ok, worst) = numeric(&exact_tensor_rule(8), &monomials);
        out.push(res(
            "tensor-rule",
            ok,
            format!(
                "{} monomials of degree <= 8, max relative error {}",
                monomials.len(),
                format_float(worst)
            ),
        ));
    }
    let spec = QuadratureSpec::Mc {
        samples: args.samples,
        seed: args.seed,
    };
    let (ok, worst) = numeric(&spec, &mc_test_functions());
    out.push(res(
        "monte-carlo",
        ok,
        format!(
            "{} samples, seed {}, worst deviation {:.2} standard errors",
            args.samples, args.seed, worst
        ),
    ));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("spinor-s3").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn exit_code_mapping() {
        let ok = CheckResult::new(Suite::Casimir, Some(0), "x", true, String::new());
        let bad = CheckResult::new(Suite::Casimir, Some(1), "x", false, String::new());
        assert_eq!(exit_code(std::slice::from_ref(&ok)), EXIT_OK);
        assert_eq!(exit_code(&[ok, bad]), EXIT_FAILED);
        assert_eq!(exit_code(&[]), EXIT_OK);
    }

    #[test]
    fn float_format_has_twelve_digits() {
        assert_eq!(format_float(19.739208802178716), "1.97392088022e1");
    }

    #[test]
    fn cap_is_enforced() {
        let (code, _, err) = run_capture(&["spectrum", "--k-max", "999"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("cap"));
        let (code, _, _) = run_capture(&["spectrum", "--k-max", "13", "--unsafe-k"]);
        assert_eq!(code, EXIT_OK);
    }

    #[test]
    fn unknown_suite_is_usage_error() {
        let (code, _, _) = run_capture(&["verify", "--suite", "bogus"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_up_to(8).len(), 495);
        assert!(monomials_up_to(3)
            .iter()
            .all(|e| e.iter().sum::<u32>() <= 3));
    }
}
