//! The center `{1, I}` of the 3D algebras: decomposition of `(a + 𝒜)²` into a
//! scalar + pseudoscalar pair, and isolated square roots of center elements.

use serde::{Deserialize, Serialize};

use crate::error::{GaError, Result};
use crate::multivector::{blade::*, Multivector};
use crate::signature::Signature;

/// `a_s + a_i I`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CenterElement {
    pub a_s: f64,
    pub a_i: f64,
}

impl CenterElement {
    pub const fn new(a_s: f64, a_i: f64) -> Self {
        Self { a_s, a_i }
    }

    /// Product of two center elements under the signature's `I²`.
    pub fn mul(self, other: Self, sig: Signature) -> Self {
        let ii = sig.pseudoscalar_square();
        Self {
            a_s: self.a_s * other.a_s + ii * self.a_i * other.a_i,
            a_i: self.a_s * other.a_i + self.a_i * other.a_s,
        }
    }

    pub fn square(self, sig: Signature) -> Self {
        self.mul(self, sig)
    }

    /// `|c| = sqrt(a_s² + a_i²)`, the modulus used when `I² = -1`.
    pub fn modulus(self) -> f64 {
        self.a_s.hypot(self.a_i)
    }

    pub fn to_multivector(self, sig: Signature) -> Multivector {
        let mut c = [0.0; 8];
        c[S] = self.a_s;
        c[E123] = self.a_i;
        Multivector::new(sig, c)
    }
}

/// Scalar and pseudoscalar coefficients of `(a + 𝒜)²` from the explicit
/// quadratic forms of each algebra. The scalar and pseudoscalar parts of `x`
/// are ignored.
///
/// For Cl(0,3) the sign is flipped so that `-(a + 𝒜)² = a_s + a_i I` and
/// `a_s ≥ 0`; the other three algebras use `(a + 𝒜)² = a_s + a_i I`.
pub fn center_decompose(x: &Multivector) -> CenterElement {
    let [_, a1, a2, a3, a12, a13, a23, _] = x.c;
    let mixed = a3 * a12 - a2 * a13 + a1 * a23;
    match x.sig {
        Signature::Cl03 => CenterElement {
            a_s: a1 * a1 + a2 * a2 + a3 * a3 + a12 * a12 + a13 * a13 + a23 * a23,
            a_i: -2.0 * mixed,
        },
        Signature::Cl30 | Signature::Cl12 => {
            let u = theorem2_sign(x.sig);
            CenterElement {
                a_s: a1 * a1 + u * a2 * a2 + u * a3 * a3 - u * a12 * a12 - u * a13 * a13 - a23 * a23,
                a_i: 2.0 * mixed,
            }
        }
        Signature::Cl21 => CenterElement {
            a_s: a1 * a1 + a2 * a2 - a3 * a3 - a12 * a12 + a13 * a13 + a23 * a23,
            a_i: 2.0 * mixed,
        },
    }
}

/// `+1` for Cl(3,0), `-1` for Cl(1,2): selects the upper/lower sign of the
/// shared Cl(3,0)/Cl(1,2) formulas. Other signatures map to `+1`.
pub(crate) fn theorem2_sign(sig: Signature) -> f64 {
    match sig {
        Signature::Cl12 => -1.0,
        _ => 1.0,
    }
}

/// The principal root `(p, m)` with `(p + m I)² = a_s + a_i I` when `I² = -1`,
/// `p ≥ 0` and `m` carrying the sign of `a_i`.
///
/// This is the case table `a_I ≠ 0`, `a_I = 0 ∧ a_S > 0`, `a_I = 0 ∧ a_S < 0`
/// evaluated without the `a_S + |c|` cancellation when `a_S < 0`.
pub(crate) fn principal_root_i_neg(a_s: f64, a_i: f64) -> (f64, f64) {
    let norm = a_s.hypot(a_i);
    if norm == 0.0 {
        return (0.0, 0.0);
    }
    if a_s >= 0.0 {
        let p = ((a_s + norm) / 2.0).sqrt();
        (p, a_i / (2.0 * p))
    } else {
        let m_abs = ((norm - a_s) / 2.0).sqrt();
        let m = if a_i < 0.0 { -m_abs } else { m_abs };
        (a_i.abs() / (2.0 * m_abs), m)
    }
}

/// All isolated roots `r` with `r² = c`.
///
/// * Cl(3,0), Cl(1,2): the two roots `±(a₊ + a₋ I)`; `c = 0` has no isolated root.
/// * Cl(0,3), Cl(2,1): with `I² = +1` the center splits into two real lines, so
///   roots exist iff `a_s > |a_i|` and then there are four:
///   `±(a_s ± sqrt(a_s² - a_i²) + a_i I) / (sqrt 2 · sqrt(a_s ± sqrt(a_s² - a_i²)))`.
///   These are evaluated as `(±p ± m)/2` with `p = sqrt(a_s + a_i)`,
///   `m = sqrt(a_s - a_i)`, which avoids cancellation near `a_i = 0`.
pub fn sqrt_center(c: CenterElement, sig: Signature) -> Result<Vec<CenterElement>> {
    let CenterElement { a_s, a_i } = c;
    let no_root = || GaError::NoIsolatedRoot { a_s, a_i, sig };
    if !(a_s.is_finite() && a_i.is_finite()) {
        return Err(no_root());
    }
    match sig {
        Signature::Cl30 | Signature::Cl12 => {
            if a_s == 0.0 && a_i == 0.0 {
                return Err(no_root());
            }
            let (p, m) = principal_root_i_neg(a_s, a_i);
            Ok(vec![CenterElement::new(p, m), CenterElement::new(-p, -m)])
        }
        Signature::Cl03 | Signature::Cl21 => {
            let plus = a_s + a_i;
            let minus = a_s - a_i;
            if !(plus > 0.0 && minus > 0.0) {
                return Err(no_root());
            }
            let (p, m) = (plus.sqrt(), minus.sqrt());
            let first = CenterElement::new((p + m) / 2.0, (p - m) / 2.0);
            let half_diff = (p - m) / 2.0;
            let half_sum = (p + m) / 2.0;
            // Keep the real part of each listed root non-negative.
            let second = if half_diff >= 0.0 {
                CenterElement::new(half_diff, half_sum)
            } else {
                CenterElement::new(-half_diff, -half_sum)
            };
            Ok(vec![
                first,
                CenterElement::new(-first.a_s, -first.a_i),
                second,
                CenterElement::new(-second.a_s, -second.a_i),
            ])
        }
    }
}
