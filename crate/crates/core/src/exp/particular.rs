use crate::error::{GaError, Result};
use crate::multivector::{blade::*, Multivector};
use crate::signature::Signature;

/// Exponential of a pure vector, pure bivector, or scalar + pseudoscalar,
/// from the blade formulas `cos|X| + X/|X| sin|X|` (when `X² < 0`) and
/// `cosh|X| + X/|X| sinh|X|` (when `X² > 0`).
///
/// This path never calls the general formulas and serves as an independent
/// check on them.
pub fn exp_particular(x: &Multivector) -> Result<Multivector> {
    let sig = x.sig;
    let grades = x.grades_present();
    match grades {
        0 => Ok(Multivector::one(sig)),
        0b0010 => {
            let sq = vector_square(x);
            Ok(blade_exp(x, sq))
        }
        0b0100 => {
            let sq = bivector_square(x);
            Ok(blade_exp(x, sq))
        }
        g if g & 0b0110 == 0 => {
            let (a0, a123) = (x.c[S], x.c[E123]);
            let (even, odd) = if sig.pseudoscalar_square() < 0.0 {
                (a123.cos(), a123.sin())
            } else {
                (a123.cosh(), a123.sinh())
            };
            let g = a0.exp();
            let mut c = [0.0; 8];
            c[S] = g * even;
            c[E123] = g * odd;
            Ok(Multivector::new(sig, c))
        }
        _ => Err(GaError::MixedGradeInput(format!(
            "expected a pure vector, pure bivector or scalar + pseudoscalar, got grades {}",
            (0..4).filter(|g| grades & (1 << g) != 0).map(|g| g.to_string()).collect::<Vec<_>>().join(",")
        ))),
    }
}

/// `a²` for a pure vector.
fn vector_square(x: &Multivector) -> f64 {
    let sq = x.sig.squares();
    (1..=3).map(|k| f64::from(sq[k - 1]) * x.c[k] * x.c[k]).sum()
}

/// `𝒜²` for a pure bivector.
fn bivector_square(x: &Multivector) -> f64 {
    let (b12, b13, b23) = (x.c[E12] * x.c[E12], x.c[E13] * x.c[E13], x.c[E23] * x.c[E23]);
    match x.sig {
        Signature::Cl30 | Signature::Cl03 => -b12 - b13 - b23,
        Signature::Cl21 => -b12 + b13 + b23,
        Signature::Cl12 => b12 + b13 - b23,
    }
}

fn blade_exp(x: &Multivector, square: f64) -> Multivector {
    let sig = x.sig;
    if square == 0.0 {
        // Null blade: the series stops after the linear term.
        return Multivector::one(sig) + *x;
    }
    let norm = square.abs().sqrt();
    let (even, odd) = if square > 0.0 {
        (norm.cosh(), norm.sinh())
    } else {
        (norm.cos(), norm.sin())
    };
    Multivector::scalar(sig, even) + *x * (odd / norm)
}
