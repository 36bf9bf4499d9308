//! Trigonometric and hyperbolic functions built from closed-form exponentials,
//! multivector tangents via the adjugate inverse, and determinant-norm scaling.

use serde::{Deserialize, Serialize};

use crate::error::{GaError, Result};
use crate::exp::{exp_with, Tolerance};
use crate::multivector::Multivector;
use crate::signature::Signature;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TrigFn {
    Sin,
    Cos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum HyperbolicFn {
    Sinh,
    Cosh,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RatioFn {
    Tan,
    Tanh,
}

/// How [`normalize`] picks its divisor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum NormPolicy {
    /// Smallest integer not below the determinant norm, but at least 1.
    CeilInt,
    /// The determinant norm itself.
    Exact,
    /// A caller-chosen divisor.
    Factor(f64),
}

fn require_negative_i_square(sig: Signature, what: &'static str) -> Result<()> {
    if sig.pseudoscalar_square() < 0.0 {
        Ok(())
    } else {
        Err(GaError::UnsupportedSignature { what, sig })
    }
}

pub fn trig_exact(x: &Multivector, which: TrigFn) -> Result<Multivector> {
    trig_exact_with(x, which, Tolerance::default())
}

/// `sin A = (I/2)(e^{-IA} - e^{IA})`, `cos A = (e^{-IA} + e^{IA})/2`.
///
/// Only defined where `I² = -1`; elsewhere the pseudoscalar cannot stand in
/// for the imaginary unit.
pub fn trig_exact_with(x: &Multivector, which: TrigFn, tol: Tolerance) -> Result<Multivector> {
    let name = match which {
        TrigFn::Sin => "sin",
        TrigFn::Cos => "cos",
    };
    require_negative_i_square(x.sig, name)?;
    let i = Multivector::pseudoscalar(x.sig);
    let ia = i * *x;
    let (minus, plus) = (exp_with(&-ia, tol), exp_with(&ia, tol));
    Ok(match which {
        TrigFn::Sin => i * (minus - plus) * 0.5,
        TrigFn::Cos => (minus + plus) * 0.5,
    })
}

pub fn hyperbolic_exact(x: &Multivector, which: HyperbolicFn) -> Multivector {
    hyperbolic_exact_with(x, which, Tolerance::default())
}

pub fn hyperbolic_exact_with(x: &Multivector, which: HyperbolicFn, tol: Tolerance) -> Multivector {
    let (plus, minus) = (exp_with(x, tol), exp_with(&-*x, tol));
    match which {
        HyperbolicFn::Sinh => (plus - minus) * 0.5,
        HyperbolicFn::Cosh => (plus + minus) * 0.5,
    }
}

pub fn ratio_exact(x: &Multivector, which: RatioFn) -> Result<Multivector> {
    ratio_exact_with(x, which, Tolerance::default())
}

/// `tanh A = sinh A · (cosh A)⁻¹`, `tan A = sin A · (cos A)⁻¹`.
pub fn ratio_exact_with(x: &Multivector, which: RatioFn, tol: Tolerance) -> Result<Multivector> {
    let (num, den) = match which {
        RatioFn::Tanh => (
            hyperbolic_exact_with(x, HyperbolicFn::Sinh, tol),
            hyperbolic_exact_with(x, HyperbolicFn::Cosh, tol),
        ),
        RatioFn::Tan => (trig_exact_with(x, TrigFn::Sin, tol)?, trig_exact_with(x, TrigFn::Cos, tol)?),
    };
    Ok(num * den.inverse()?.inv)
}

/// Divides `x` by a scale chosen by `policy`; returns the scaled value and
/// the divisor.
pub fn normalize(x: &Multivector, policy: NormPolicy) -> Result<(Multivector, f64)> {
    let scale = match policy {
        NormPolicy::CeilInt => x.det_norm()?.ceil().max(1.0),
        NormPolicy::Exact => x.det_norm()?,
        NormPolicy::Factor(n) => n,
    };
    if !(scale.is_finite() && scale != 0.0) {
        return Err(GaError::InvalidParameter(format!("normalization scale must be finite and nonzero, got {scale}")));
    }
    Ok((*x / scale, scale))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multivector::blade::*;
    use crate::series::{series_eval, SeriesFamily, SeriesSpec};

    fn a_second() -> Multivector {
        Multivector::new(Signature::Cl30, [4.0, 1.0, 3.0, -5.0, 10.0, 9.0, -9.0, -4.0]) / 17.0
    }

    #[test]
    fn zero_argument() {
        for sig in Signature::ALL {
            let z = Multivector::zero(sig);
            assert_eq!(hyperbolic_exact(&z, HyperbolicFn::Cosh), Multivector::one(sig));
            assert_eq!(hyperbolic_exact(&z, HyperbolicFn::Sinh), z);
            assert_eq!(ratio_exact(&z, RatioFn::Tanh).unwrap(), z);
        }
        let z = Multivector::zero(Signature::Cl12);
        assert_eq!(trig_exact(&z, TrigFn::Cos).unwrap(), Multivector::one(Signature::Cl12));
    }

    #[test]
    fn hyperbolic_values() {
        let a = a_second();
        let s = hyperbolic_exact(&a, HyperbolicFn::Sinh);
        let c = hyperbolic_exact(&a, HyperbolicFn::Cosh);
        let t = ratio_exact(&a, RatioFn::Tanh).unwrap();
        assert!((s[S] - 0.0806082).abs() < 1e-7 && (s[E12] - 0.5504206).abs() < 1e-7);
        assert!((c[S] - 0.6039792).abs() < 1e-7 && (c[E123] + 0.2939648).abs() < 1e-7);
        assert!((t[S] - 0.6231177).abs() < 1e-7 && (t[E123] - 0.0547345).abs() < 1e-7);
    }

    #[test]
    fn trig_values() {
        let a = a_second();
        let s = trig_exact(&a, TrigFn::Sin).unwrap();
        let c = trig_exact(&a, TrigFn::Cos).unwrap();
        let t = ratio_exact(&a, RatioFn::Tan).unwrap();
        assert!((s[S] - 0.4142215).abs() < 1e-7 && (s[E23] + 0.5864014).abs() < 1e-7);
        assert!((c[S] - 1.3837580).abs() < 1e-7 && (c[E123] - 0.4152926).abs() < 1e-7);
        assert!((t[S] - 0.0520468).abs() < 1e-7 && (t[E12] - 0.4876809).abs() < 1e-7);
    }

    #[test]
    fn trig_matches_series_in_both_algebras() {
        let x = Multivector::new(Signature::Cl12, [0.1, -0.2, 0.15, 0.05, 0.2, -0.1, 0.12, 0.08]);
        for which in [TrigFn::Sin, TrigFn::Cos] {
            let family = if which == TrigFn::Sin { SeriesFamily::Sin } else { SeriesFamily::Cos };
            let series = series_eval(&x, SeriesSpec::new(family, 40)).unwrap();
            assert!(trig_exact(&x, which).unwrap().max_diff(&series) < 1e-14);
        }
    }

    #[test]
    fn trig_rejected_for_positive_i_square() {
        for sig in [Signature::Cl03, Signature::Cl21] {
            let x = Multivector::one(sig);
            assert!(matches!(trig_exact(&x, TrigFn::Sin), Err(GaError::UnsupportedSignature { .. })));
            assert!(matches!(ratio_exact(&x, RatioFn::Tan), Err(GaError::UnsupportedSignature { .. })));
        }
    }

    #[test]
    fn tan_at_pole_is_non_invertible() {
        // For the idempotent P = (1 + e1)/2, cos(θP) = (1 - P) + cos θ·P, which
        // is the singular idempotent (1 - e1)/2 at θ = π/2.
        let p = Multivector::new(Signature::Cl30, [0.5, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        let x = p * std::f64::consts::FRAC_PI_2;
        match ratio_exact(&x, RatioFn::Tan) {
            Err(GaError::NonInvertible { adjugate, det }) => {
                assert!(det.abs() < 1e-12);
                assert!(adjugate.is_finite());
            }
            other => panic!("expected NonInvertible, got {other:?}"),
        }
    }

    #[test]
    fn normalization_policies() {
        let a = a_second() * 17.0;
        let (n, scale) = normalize(&a, NormPolicy::CeilInt).unwrap();
        assert_eq!(scale, 17.0);
        assert!(n.max_diff(&a_second()) < 1e-16);
        let (e, scale) = normalize(&a, NormPolicy::Exact).unwrap();
        assert!((scale - 71129f64.powf(0.25)).abs() < 1e-12);
        assert!((e.determinant() - 1.0).abs() < 1e-12);
        let small = Multivector::scalar(Signature::Cl03, 0.5);
        assert_eq!(normalize(&small, NormPolicy::CeilInt).unwrap(), (small, 1.0));
        assert_eq!(normalize(&small, NormPolicy::Factor(2.0)).unwrap().1, 2.0);
        assert!(normalize(&small, NormPolicy::Factor(0.0)).is_err());
        let neg = Multivector::new(Signature::Cl21, [1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
        assert!(matches!(normalize(&neg, NormPolicy::CeilInt), Err(GaError::NormUndefined { .. })));
    }
}
