//! Argument parsing and dispatch.

use std::ffi::OsString;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use painleve_core::algebra::Rational;
use painleve_core::garnier_pvi::PVIVariant;
use painleve_core::periods::NumericConfig;
use painleve_core::picard_fuchs::FormKind;
use painleve_core::{Error, NumericError};

use crate::commands;
use crate::report::{emit_report, Check, Report};
use crate::text::{parse_complex, parse_grid, parse_rational_arg};

#[derive(Parser, Debug)]
#[command(name = "painleve-lab", version, about = "Verification pipelines for algebraic Painlevé VI solutions and their Picard-Fuchs equations")]
struct Cli {
    /// Indent the JSON report.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Solution {
    Eq1,
    Eq2,
}

impl Solution {
    fn name(self) -> &'static str {
        match self {
            Solution::Eq1 => "eq1",
            Solution::Eq2 => "eq2",
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Variant {
    Standard,
    Printed,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Form {
    First,
    Second,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Forms {
    First,
    Second,
    Both,
}

impl From<Form> for FormKind {
    fn from(f: Form) -> Self {
        match f {
            Form::First => FormKind::First,
            Form::Second => FormKind::Second,
        }
    }
}

impl Forms {
    fn kinds(self) -> Vec<FormKind> {
        match self {
            Forms::First => vec![FormKind::First],
            Forms::Second => vec![FormKind::Second],
            Forms::Both => vec![FormKind::First, FormKind::Second],
        }
    }
}

#[derive(Args, Debug)]
struct Numeric {
    /// Working precision in bits; only 53 is available.
    #[arg(long, default_value_t = 53)]
    precision_bits: u32,
}

impl Numeric {
    fn config(&self) -> NumericConfig {
        NumericConfig { precision_bits: self.precision_bits, ..NumericConfig::default() }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Substitute an algebraic curve into P_VI.
    VerifyPvi {
        #[arg(long, value_enum, default_value = "eq1")]
        solution: Solution,
        /// Four comma-separated entries, each of the form p + q*sigma.
        #[arg(long, conflicts_with = "pencil", allow_hyphen_values = true)]
        alpha: Option<String>,
        /// Use the pencil (1/8, sigma/8, sigma/8, sigma/8).
        #[arg(long)]
        pencil: bool,
        #[arg(long, value_enum, default_value = "standard")]
        variant: Variant,
    },
    /// Check the bracket identity along a curve.
    BracketCheck {
        #[arg(long, value_enum, default_value = "eq1")]
        solution: Solution,
        #[arg(long, default_value = "3", value_parser = parse_rational_arg, allow_hyphen_values = true)]
        at_a: Rational,
    },
    /// Compare the Garnier system with P_VI at random rational points.
    GarnierCheck {
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of random parameter vectors besides the two reference ones.
        #[arg(long, default_value_t = 20)]
        thetas: usize,
    },
    /// Derive the Picard-Fuchs equation of a form by cohomology reduction.
    DerivePf {
        #[arg(long, value_enum, default_value = "first")]
        form: Form,
        /// Compare with the reference equation.
        #[arg(long)]
        match_lemma: bool,
    },
    /// Riemann scheme of a reference equation.
    Scheme {
        #[arg(long, value_enum, default_value = "first")]
        kind: Form,
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        at_a: Option<Rational>,
    },
    /// Apparent-singularity test at λ (and at 0 for the second equation).
    ApparentTest {
        #[arg(long, value_enum, default_value = "both")]
        kind: Forms,
    },
    /// Read θ, λ, μ, t off the reference equations and check the Garnier
    /// system along the curve.
    ExtractParams {
        #[arg(long, value_enum, default_value = "both")]
        kind: Forms,
    },
    /// Monodromy matrices of a reference equation.
    MonodromySuite {
        #[arg(long, default_value = "3", value_parser = parse_rational_arg, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, value_enum, default_value = "first")]
        kind: Form,
        /// Second value of a for comparing conjugation invariants.
        #[arg(long, value_parser = parse_rational_arg, allow_hyphen_values = true)]
        compare_a: Option<Rational>,
        #[command(flatten)]
        numeric: Numeric,
    },
    /// A period over the cycle joining two branch points.
    Period {
        #[arg(long, default_value = "3", value_parser = parse_rational_arg, allow_hyphen_values = true)]
        a: Rational,
        #[arg(long, default_value = "0.5", value_parser = parse_complex, allow_hyphen_values = true)]
        s: num_complex::Complex64,
        #[arg(long, value_enum, default_value = "first")]
        form: Form,
        /// Branch point indices, ordered by real then imaginary part.
        #[arg(long, default_value = "1,2", value_parser = parse_pair)]
        pair: (usize, usize),
        #[command(flatten)]
        numeric: Numeric,
    },
    /// Residual of the reference equations on numerical periods.
    PfResidual {
        #[arg(long, default_value = "3", value_parser = parse_rational_arg, allow_hyphen_values = true)]
        a: Rational,
        /// Comma-separated points in s.
        #[arg(
            long,
            default_value = "0.15,0.25,0.35,0.45,0.55,0.65,0.75,0.85",
            value_parser = parse_grid_arg,
            allow_hyphen_values = true
        )]
        grid: Grid,
        #[arg(long, value_enum, default_value = "both")]
        form: Forms,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
        #[command(flatten)]
        numeric: Numeric,
    },
}

#[derive(Clone, Debug)]
struct Grid(Vec<num_complex::Complex64>);

fn parse_grid_arg(text: &str) -> Result<Grid, String> {
    parse_grid(text).map(Grid)
}

fn parse_pair(text: &str) -> Result<(usize, usize), String> {
    let (x, y) = text.split_once(',').ok_or_else(|| format!("expected i,j, got {text:?}"))?;
    let p = |s: &str| s.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(x)?, p(y)?))
}

/// Exit code and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    /// 0: every check passed; 1: a check failed; 2: usage or input error.
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn dispatch(cmd: Command) -> Result<Report, Error> {
    match cmd {
        Command::VerifyPvi { solution, alpha, pencil, variant } => {
            let variants = match variant {
                Variant::Standard => vec![PVIVariant::Standard],
                Variant::Printed => vec![PVIVariant::Printed],
                Variant::Both => PVIVariant::ALL.to_vec(),
            };
            commands::verify_pvi(solution.name(), alpha.as_deref(), pencil, &variants)
        }
        Command::BracketCheck { solution, at_a } => commands::bracket_check(solution.name(), &at_a),
        Command::GarnierCheck { samples, seed, thetas } => commands::garnier_check(samples, seed, thetas),
        Command::DerivePf { form, match_lemma } => commands::derive(form.into(), match_lemma),
        Command::Scheme { kind, at_a } => commands::scheme(kind.into(), at_a.as_ref()),
        Command::ApparentTest { kind } => commands::apparent(&kind.kinds()),
        Command::ExtractParams { kind } => commands::extract(&kind.kinds()),
        Command::MonodromySuite { a, kind, compare_a, numeric } => {
            commands::monodromy(&a, kind.into(), compare_a.as_ref(), &numeric.config())
        }
        Command::Period { a, s, form, pair, numeric } => commands::period(&a, s, form.into(), pair, &numeric.config()),
        Command::PfResidual { a, grid, form, tol, numeric } => {
            commands::pf_residual(&a, &grid.0, &form.kinds(), tol, &numeric.config())
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::VerifyPvi { .. } => "verify-pvi",
        Command::BracketCheck { .. } => "bracket-check",
        Command::GarnierCheck { .. } => "garnier-check",
        Command::DerivePf { .. } => "derive-pf",
        Command::Scheme { .. } => "scheme",
        Command::ApparentTest { .. } => "apparent-test",
        Command::ExtractParams { .. } => "extract-params",
        Command::MonodromySuite { .. } => "monodromy-suite",
        Command::Period { .. } => "period",
        Command::PfResidual { .. } => "pf-residual",
    }
}

/// Parses `args` (program name first), runs the command and renders its
/// report.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome { code: 0, stdout: text, stderr: String::new() },
                _ => Outcome { code: 2, stdout: String::new(), stderr: text },
            };
        }
    };
    let name = command_name(&cli.command);
    let report = match dispatch(cli.command) {
        Ok(r) => r,
        Err(Error::Numeric(e)) if !matches!(e, NumericError::CollidingRoots(_)) => {
            let mut r = Report::new(name);
            r.check(Check::exact("numerical computation", "completes", e.to_string(), false));
            r
        }
        Err(e) => {
            return Outcome { code: 2, stdout: String::new(), stderr: format!("error: {e}\n") };
        }
    };
    let code = if report.pass { 0 } else { 1 };
    Outcome { code, stdout: emit_report(&report, cli.pretty) + "\n", stderr: String::new() }
}
