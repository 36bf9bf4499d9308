//! Command-line front end: `eval`, `compare` and `spin`.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::center::{sqrt_center, CenterElement};
use crate::error::{GaError, Result};
use crate::exp::{exp_factors_with, exp_with, Tolerance, DEFAULT_EPS};
use crate::functions::{
    hyperbolic_exact_with, ratio_exact_with, trig_exact_with, HyperbolicFn, RatioFn, TrigFn,
};
use crate::multivector::{blade::*, Multivector};
use crate::series::{series_eval_with_delta, SeriesFamily, SeriesSpec};
use crate::signature::{Signature, BASIS};
use crate::spin::{sweep_ramp_with, RampSweep, SweepMode};
use crate::text::{format_value, parse_mv, render};

/// Series results whose last retained term exceeds this trigger a warning.
pub const CONVERGENCE_WARNING: f64 = 1e-6;

#[derive(Debug, Parser)]
#[command(name = "ga3", version, about = "Multivector exponentials and functions in Cl(3,0), Cl(0,3), Cl(1,2), Cl(2,1)")]
pub struct Cli {
    /// Degeneracy tolerance multiplier.
    #[arg(long, global = true, env = "GA_EPS", default_value_t = DEFAULT_EPS)]
    pub eps: f64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one function of a multivector.
    Eval(EvalArgs),
    /// Print the closed form next to its truncated series and their largest difference.
    Compare(CompareArgs),
    /// Sample the spin-flip probability along a linear ramp of B0 and write CSV.
    Spin(SpinArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    Cl30,
    Cl03,
    Cl12,
    Cl21,
}

impl From<Algebra> for Signature {
    fn from(a: Algebra) -> Self {
        match a {
            Algebra::Cl30 => Signature::Cl30,
            Algebra::Cl03 => Signature::Cl03,
            Algebra::Cl12 => Signature::Cl12,
            Algebra::Cl21 => Signature::Cl21,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Function {
    Exp,
    Sin,
    Cos,
    Tan,
    Sinh,
    Cosh,
    Tanh,
    /// Series only.
    Sech,
    /// Series only.
    Sec,
    Inv,
    Det,
    DetNorm,
    SqrtCenter,
    ExpFactors,
}

impl Function {
    fn family(self) -> Option<SeriesFamily> {
        Some(match self {
            Function::Exp => SeriesFamily::Exp,
            Function::Sin => SeriesFamily::Sin,
            Function::Cos => SeriesFamily::Cos,
            Function::Tan => SeriesFamily::Tan,
            Function::Sinh => SeriesFamily::Sinh,
            Function::Cosh => SeriesFamily::Cosh,
            Function::Tanh => SeriesFamily::Tanh,
            Function::Sech => SeriesFamily::SechEuler,
            Function::Sec => SeriesFamily::SecEuler,
            _ => return None,
        })
    }

    fn name(self) -> String {
        self.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct MvArgs {
    #[arg(long, value_enum, default_value = "cl30")]
    pub algebra: Algebra,

    #[arg(long = "fn", value_enum)]
    pub function: Function,

    /// Eight comma-separated coefficients or a sum of terms, optionally `/ N`.
    #[arg(long, allow_hyphen_values = true)]
    pub mv: String,

    /// Highest power kept in series evaluation.
    #[arg(long, default_value_t = 20)]
    pub terms: usize,

    /// Printed precision: N gives N-1 decimal places; 0 prints full precision.
    #[arg(long, default_value_t = 8)]
    pub digits: usize,

    #[arg(long, value_enum, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[command(flatten)]
    pub mv: MvArgs,

    /// Evaluate the truncated series instead of the closed form.
    #[arg(long)]
    pub series: bool,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    #[command(flatten)]
    pub mv: MvArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Adiabatic,
    Stepped,
}

#[derive(Debug, Args)]
#[command(allow_negative_numbers = true)]
pub struct SpinArgs {
    #[arg(long, default_value_t = 1.0)]
    pub omega: f64,

    #[arg(long, default_value_t = 0.05)]
    pub omega1: f64,

    #[arg(long, default_value_t = -2.0)]
    pub b0_start: f64,

    #[arg(long, default_value_t = 2.0)]
    pub b0_end: f64,

    /// Ramp duration.
    #[arg(long = "T", default_value_t = 500.0)]
    pub duration: f64,

    /// Rotation sense, -1 or 1.
    #[arg(long, default_value_t = -1.0)]
    pub sigma: f64,

    #[arg(long, default_value_t = 5000)]
    pub samples: usize,

    #[arg(long, default_value_t = 1.0)]
    pub gamma: f64,

    #[arg(long, value_enum, default_value = "adiabatic")]
    pub mode: Mode,

    /// CSV destination; standard output when absent.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

/// Runs a parsed command. Results go to `out`, warnings to `err`.
pub fn run<W: Write, E: Write>(cli: &Cli, out: &mut W, err: &mut E) -> Result<()> {
    if !(cli.eps.is_finite() && cli.eps >= 0.0) {
        return Err(GaError::InvalidParameter(format!("GA_EPS must be a non-negative number, got {}", cli.eps)));
    }
    let tol = Tolerance::new(cli.eps);
    match &cli.command {
        Command::Eval(a) => eval(a, tol, out, err),
        Command::Compare(a) => compare(&a.mv, tol, out, err),
        Command::Spin(a) => spin(a, out),
    }
}

fn io_err(e: io::Error) -> GaError {
    GaError::InvalidParameter(format!("write failed: {e}"))
}

fn digits(args: &MvArgs) -> Option<usize> {
    (args.digits > 0).then_some(args.digits)
}

fn fmt_scalar(v: f64, digits: Option<usize>) -> String {
    if v.is_sign_negative() && v != 0.0 {
        format!("-{}", format_value(-v, digits))
    } else {
        format_value(v, digits)
    }
}

fn closed_form(x: &Multivector, f: Function, tol: Tolerance) -> Result<Multivector> {
    match f {
        Function::Exp => Ok(exp_with(x, tol)),
        Function::Sin => trig_exact_with(x, TrigFn::Sin, tol),
        Function::Cos => trig_exact_with(x, TrigFn::Cos, tol),
        Function::Tan => ratio_exact_with(x, RatioFn::Tan, tol),
        Function::Sinh => Ok(hyperbolic_exact_with(x, HyperbolicFn::Sinh, tol)),
        Function::Cosh => Ok(hyperbolic_exact_with(x, HyperbolicFn::Cosh, tol)),
        Function::Tanh => ratio_exact_with(x, RatioFn::Tanh, tol),
        Function::Sech => Ok(hyperbolic_exact_with(x, HyperbolicFn::Cosh, tol).inverse()?.inv),
        Function::Sec => Ok(trig_exact_with(x, TrigFn::Cos, tol)?.inverse()?.inv),
        Function::Inv => Ok(x.inverse()?.inv),
        _ => Err(GaError::InvalidParameter(format!("`{}` does not produce a multivector", f.name()))),
    }
}

fn series(x: &Multivector, f: Function, terms: usize, err: &mut impl Write) -> Result<(Multivector, f64)> {
    let family = f
        .family()
        .ok_or_else(|| GaError::InvalidParameter(format!("`{}` has no series expansion", f.name())))?;
    let r = series_eval_with_delta(x, SeriesSpec::new(family, terms))?;
    if r.last_term.is_nan() || r.last_term > CONVERGENCE_WARNING {
        writeln!(
            err,
            "warning: {family} series with {terms} terms may not have converged (last term {:.3e} > {CONVERGENCE_WARNING:e})",
            r.last_term
        )
        .map_err(io_err)?;
    }
    Ok((r.value, r.last_term))
}

fn mv_json(x: &Multivector) -> serde_json::Value {
    json!({ "algebra": x.sig.name(), "coeffs": x.c, "basis": BASIS })
}

fn write_mv(out: &mut impl Write, x: &Multivector, args: &MvArgs) -> Result<()> {
    match args.format {
        Format::Text => writeln!(out, "{}", render(x, digits(args))),
        Format::Json => writeln!(out, "{}", mv_json(x)),
    }
    .map_err(io_err)
}

fn eval(a: &EvalArgs, tol: Tolerance, out: &mut impl Write, err: &mut impl Write) -> Result<()> {
    let args = &a.mv;
    let sig = Signature::from(args.algebra);
    let x = parse_mv(&args.mv, sig)?;
    let d = digits(args);
    if a.series {
        let (y, _) = series(&x, args.function, args.terms, err)?;
        return write_mv(out, &y, args);
    }
    match args.function {
        Function::Det | Function::DetNorm => {
            let v = if args.function == Function::Det { x.determinant() } else { x.det_norm()? };
            match args.format {
                Format::Text => writeln!(out, "{}", fmt_scalar(v, d)),
                Format::Json => writeln!(out, "{}", json!({ "algebra": sig.name(), "value": v })),
            }
            .map_err(io_err)
        }
        Function::SqrtCenter => {
            if x.c[1..7].iter().any(|v| *v != 0.0) {
                return Err(GaError::MixedGradeInput(
                    "sqrt-center expects a scalar + pseudoscalar multivector".into(),
                ));
            }
            let roots = sqrt_center(CenterElement::new(x.c[S], x.c[E123]), sig)?;
            match args.format {
                Format::Text => {
                    for r in &roots {
                        writeln!(out, "{}", render(&r.to_multivector(sig), d)).map_err(io_err)?;
                    }
                    Ok(())
                }
                Format::Json => {
                    let list: Vec<[f64; 2]> = roots.iter().map(|r| [r.a_s, r.a_i]).collect();
                    writeln!(out, "{}", json!({ "algebra": sig.name(), "roots": list })).map_err(io_err)
                }
            }
        }
        Function::ExpFactors => {
            let f = exp_factors_with(&x, tol);
            match args.format {
                Format::Text => {
                    let s = |v: f64| fmt_scalar(v, d);
                    let mut text = format!(
                        "branch: {:?}\na_s: {}\na_i: {}\na_plus: {}\na_minus: {}\na_plus_sq: {}\na_minus_sq: {}\n",
                        f.branch,
                        s(f.center.a_s),
                        s(f.center.a_i),
                        s(f.a_plus),
                        s(f.a_minus),
                        s(f.a_plus_sq),
                        s(f.a_minus_sq)
                    );
                    if let Some(c) = f.c_norm {
                        text.push_str(&format!("c_norm: {}\n", s(c)));
                    }
                    out.write_all(text.as_bytes()).map_err(io_err)
                }
                Format::Json => writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&f).map_err(|e| GaError::InvalidParameter(e.to_string()))?
                )
                .map_err(io_err),
            }
        }
        f => {
            let y = closed_form(&x, f, tol)?;
            write_mv(out, &y, args)
        }
    }
}

fn compare(args: &MvArgs, tol: Tolerance, out: &mut impl Write, err: &mut impl Write) -> Result<()> {
    let sig = Signature::from(args.algebra);
    let x = parse_mv(&args.mv, sig)?;
    if args.function.family().is_none() {
        return Err(GaError::InvalidParameter(format!("`{}` has no series to compare with", args.function.name())));
    }
    let exact = closed_form(&x, args.function, tol)?;
    let (approx, last_term) = series(&x, args.function, args.terms, err)?;
    let delta = exact.max_diff(&approx);
    let d = digits(args);
    match args.format {
        Format::Text => write!(
            out,
            "closed: {}\nseries({}): {}\nmax delta: {}\n",
            render(&exact, d),
            args.terms,
            render(&approx, d),
            fmt_scalar(delta, d)
        ),
        Format::Json => writeln!(
            out,
            "{}",
            json!({
                "algebra": sig.name(),
                "fn": args.function.name(),
                "terms": args.terms,
                "basis": BASIS,
                "closed": exact.c,
                "series": approx.c,
                "max_delta": delta,
                "last_term": last_term,
            })
        ),
    }
    .map_err(io_err)
}

fn spin(a: &SpinArgs, out: &mut impl Write) -> Result<()> {
    let sweep = RampSweep {
        b0_start: a.b0_start,
        b0_end: a.b0_end,
        duration: a.duration,
        samples: a.samples,
        omega: a.omega,
        omega1: a.omega1,
        gamma: a.gamma,
    };
    let mode = match a.mode {
        Mode::Adiabatic => SweepMode::Adiabatic,
        Mode::Stepped => SweepMode::Stepped,
    };
    let trace = sweep_ramp_with(&sweep, a.sigma, mode)?;
    match &a.out {
        Some(path) => {
            let file = File::create(path).map_err(io_err)?;
            trace.write_csv(BufWriter::new(file)).map_err(io_err)?;
            if let Some(p) = trace.peak() {
                writeln!(out, "peak p_down={:.6} at t={:.3}, b0={:.4}", p.p_down, p.t, p.b0).map_err(io_err)?;
            }
            Ok(())
        }
        None => trace.write_csv(out).map_err(io_err),
    }
}
