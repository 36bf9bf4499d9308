//! Closed-form exponential of a general multivector.
//!
//! Each algebra has its own coordinate formula. All of them factor
//! `exp(A) = e^{a0} e^{a123 I} exp(a + 𝒜)`, where `(a + 𝒜)²` lies in the
//! center `{1, I}`; the scalar factors `a₊`, `a₋` are the square roots of that
//! center element and decide whether trigonometric or hyperbolic functions
//! appear.

mod particular;

pub use particular::exp_particular;

use serde::{Deserialize, Serialize};

use crate::center::{center_decompose, principal_root_i_neg, theorem2_sign, CenterElement};
use crate::multivector::{blade::*, Multivector};
use crate::signature::Signature;

/// Default multiplier of the degeneracy threshold.
pub const DEFAULT_EPS: f64 = 1e-12;

/// Width of the Maclaurin band around a branch point, as a multiple of the
/// degeneracy threshold.
const SMOOTHING_FACTOR: f64 = 1e3;

/// Branch selection tolerance. A squared factor (`a₊²`, `a₋²`, `|c|`) counts
/// as zero when it is below `eps * (1 + Σ vector² + Σ bivector²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub eps: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self { eps: DEFAULT_EPS }
    }
}

impl Tolerance {
    pub const fn new(eps: f64) -> Self {
        Self { eps }
    }

    /// Absolute threshold for the squared factors of `x`.
    pub fn threshold(&self, x: &Multivector) -> f64 {
        let sum_sq: f64 = x.c[1..7].iter().map(|v| v * v).sum();
        self.eps * (sum_sq + 1.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    Generic,
    PlusDegenerate,
    MinusDegenerate,
    BothDegenerate,
}

impl Branch {
    fn classify(plus_zero: bool, minus_zero: bool) -> Self {
        match (plus_zero, minus_zero) {
            (false, false) => Branch::Generic,
            (true, false) => Branch::PlusDegenerate,
            (false, true) => Branch::MinusDegenerate,
            (true, true) => Branch::BothDegenerate,
        }
    }
}

/// Per-algebra scalar factors of the exponential.
///
/// * Cl(0,3): `a₊² = (a3-a12)² + (a2+a13)² + (a1-a23)²`, `a₋²` with the
///   opposite signs inside; both non-negative.
/// * Cl(3,0), Cl(1,2): `a₊ + a₋ I` is the principal root of
///   `c = a_S + a_I I` and `|c| = a₊² + a₋²`. `a₋` carries the sign of `a_I`.
/// * Cl(2,1): `a₊²`, `a₋²` are signed; `a_plus`/`a_minus` hold `sqrt|a±²|`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExpFactors {
    pub sig: Signature,
    pub a_plus: f64,
    pub a_minus: f64,
    pub a_plus_sq: f64,
    pub a_minus_sq: f64,
    /// `|c|` for Cl(3,0) and Cl(1,2), `None` otherwise.
    pub c_norm: Option<f64>,
    pub center: CenterElement,
    pub branch: Branch,
}

pub fn exp_factors(x: &Multivector) -> ExpFactors {
    exp_factors_with(x, Tolerance::default())
}

pub fn exp_factors_with(x: &Multivector, tol: Tolerance) -> ExpFactors {
    let thr = tol.threshold(x);
    let center = center_decompose(x);
    let [_, a1, a2, a3, a12, a13, a23, _] = x.c;
    match x.sig {
        Signature::Cl03 => {
            let plus_sq = sq(a3 - a12) + sq(a2 + a13) + sq(a1 - a23);
            let minus_sq = sq(a3 + a12) + sq(a2 - a13) + sq(a1 + a23);
            ExpFactors {
                sig: x.sig,
                a_plus: plus_sq.sqrt(),
                a_minus: minus_sq.sqrt(),
                a_plus_sq: plus_sq,
                a_minus_sq: minus_sq,
                c_norm: None,
                center,
                branch: Branch::classify(plus_sq <= thr, minus_sq <= thr),
            }
        }
        Signature::Cl21 => {
            let plus_sq = -sq(a3 - a12) + sq(a2 - a13) + sq(a1 + a23);
            let minus_sq = -sq(a3 + a12) + sq(a2 + a13) + sq(a1 - a23);
            ExpFactors {
                sig: x.sig,
                a_plus: plus_sq.abs().sqrt(),
                a_minus: minus_sq.abs().sqrt(),
                a_plus_sq: plus_sq,
                a_minus_sq: minus_sq,
                c_norm: None,
                center,
                branch: Branch::classify(plus_sq.abs() <= thr, minus_sq.abs() <= thr),
            }
        }
        Signature::Cl30 | Signature::Cl12 => {
            let (plus, minus) = principal_root_i_neg(center.a_s, center.a_i);
            let c_norm = center.modulus();
            let branch = if c_norm <= thr {
                Branch::BothDegenerate
            } else {
                Branch::classify(plus * plus <= thr, minus * minus <= thr)
            };
            ExpFactors {
                sig: x.sig,
                a_plus: plus,
                a_minus: minus,
                a_plus_sq: plus * plus,
                a_minus_sq: minus * minus,
                c_norm: Some(c_norm),
                center,
                branch,
            }
        }
    }
}

/// Closed-form `exp(x)` with the default tolerance.
pub fn exp(x: &Multivector) -> Multivector {
    exp_with(x, Tolerance::default())
}

pub fn exp_with(x: &Multivector, tol: Tolerance) -> Multivector {
    let factors = exp_factors_with(x, tol);
    let band = SMOOTHING_FACTOR * tol.threshold(x);
    match x.sig {
        Signature::Cl03 => exp_cl03(x, &factors, band),
        Signature::Cl21 => exp_cl21(x, &factors, band),
        Signature::Cl30 | Signature::Cl12 => exp_cl30_cl12(x, &factors, band),
    }
}

fn sq(v: f64) -> f64 {
    v * v
}

/// `sinh(√s)/√s` for `s > 0`, `sin(√-s)/√-s` for `s < 0`, entire in `s`.
pub(crate) fn si(s: f64, band: f64) -> f64 {
    if s.abs() < band.max(f64::MIN_POSITIVE) {
        // 1 + s/3! + s²/5! + s³/7!
        1.0 + s * (1.0 / 6.0 + s * (1.0 / 120.0 + s / 5040.0))
    } else if s > 0.0 {
        let r = s.sqrt();
        r.sinh() / r
    } else {
        let r = (-s).sqrt();
        r.sin() / r
    }
}

/// `cosh(√s)` for `s > 0`, `cos(√-s)` for `s < 0`.
pub(crate) fn co(s: f64, band: f64) -> f64 {
    if s.abs() < band.max(f64::MIN_POSITIVE) {
        1.0 + s * (0.5 + s * (1.0 / 24.0 + s / 720.0))
    } else if s > 0.0 {
        s.sqrt().cosh()
    } else {
        (-s).sqrt().cos()
    }
}

/// Shared body of the Cl(0,3) and Cl(2,1) formulas: both algebras split
/// along the idempotents `(1 ± I)/2`, which gives
/// `b = ½ e^{a0} (e^{a123} P + e^{-a123} M)` with the per-blade sign patterns
/// supplied by the caller.
#[allow(clippy::too_many_arguments)]
fn split_formula(
    x: &Multivector,
    plus_si: f64,
    minus_si: f64,
    plus_co: f64,
    minus_co: f64,
    plus_vec: [f64; 3],
    minus_vec: [f64; 3],
    bivector_signs: [[f64; 2]; 3],
) -> Multivector {
    let a0 = x.c[S];
    let a123 = x.c[E123];
    let half = 0.5 * a0.exp();
    let ep = a123.exp();
    let em = (-a123).exp();
    let p = |v: f64| ep * v * plus_si;
    let m = |v: f64| em * v * minus_si;
    let mut c = [0.0; 8];
    c[S] = half * (ep * plus_co + em * minus_co);
    c[E123] = half * (ep * plus_co - em * minus_co);
    c[E1] = half * (p(plus_vec[0]) + m(minus_vec[0]));
    c[E2] = half * (p(plus_vec[1]) + m(minus_vec[1]));
    c[E3] = half * (p(plus_vec[2]) + m(minus_vec[2]));
    // e12 pairs with the e3 terms, e13 with e2, e23 with e1.
    let [s12, s13, s23] = bivector_signs;
    c[E12] = half * (s12[0] * p(plus_vec[2]) + s12[1] * m(minus_vec[2]));
    c[E13] = half * (s13[0] * p(plus_vec[1]) + s13[1] * m(minus_vec[1]));
    c[E23] = half * (s23[0] * p(plus_vec[0]) + s23[1] * m(minus_vec[0]));
    Multivector::new(x.sig, c)
}

fn exp_cl03(x: &Multivector, f: &ExpFactors, band: f64) -> Multivector {
    let [_, a1, a2, a3, a12, a13, a23, _] = x.c;
    // sin(a)/a and cos(a) are even in a, so evaluate from a² = -s.
    split_formula(
        x,
        si(-f.a_plus_sq, band),
        si(-f.a_minus_sq, band),
        co(-f.a_plus_sq, band),
        co(-f.a_minus_sq, band),
        [a1 - a23, a2 + a13, a3 - a12],
        [a1 + a23, a2 - a13, a3 + a12],
        [[-1.0, 1.0], [1.0, -1.0], [-1.0, 1.0]],
    )
}

fn exp_cl21(x: &Multivector, f: &ExpFactors, band: f64) -> Multivector {
    let [_, a1, a2, a3, a12, a13, a23, _] = x.c;
    split_formula(
        x,
        si(f.a_plus_sq, band),
        si(f.a_minus_sq, band),
        co(f.a_plus_sq, band),
        co(f.a_minus_sq, band),
        [a1 + a23, a2 - a13, a3 - a12],
        [a1 - a23, a2 + a13, a3 + a12],
        [[-1.0, 1.0], [-1.0, 1.0], [1.0, -1.0]],
    )
}

/// Cl(3,0) (upper signs) and Cl(1,2) (lower signs).
fn exp_cl30_cl12(x: &Multivector, f: &ExpFactors, band: f64) -> Multivector {
    let c_norm = f.c_norm.unwrap_or(0.0);
    if c_norm < band.max(f64::MIN_POSITIVE) {
        return exp_cl30_cl12_near_zero(x, f.center);
    }
    let u = theorem2_sign(x.sig);
    let [a0, a1, a2, a3, a12, a13, a23, a123] = x.c;
    let (ap, am) = (f.a_plus, f.a_minus);
    let (cs, sn) = (a123.cos(), a123.sin());
    let (ch, sh) = (ap.cosh(), ap.sinh());
    let (cm, sm) = (am.cos(), am.sin());
    // The two trigonometric/hyperbolic weights of every vector and bivector
    // coefficient.
    let w1 = ch * sm;
    let w2 = sh * cm;

    let b0 = cs * cm * ch - sn * sm * sh;
    let b123 = sn * cm * ch + cs * sm * sh;
    let b1 = w1 * ((am * a1 - ap * a23) * cs - (ap * a1 + am * a23) * sn)
        + w2 * ((ap * a1 + am * a23) * cs + (am * a1 - ap * a23) * sn);
    let b2 = u * w1 * ((u * am * a2 + ap * a13) * cs + (-u * ap * a2 + am * a13) * sn)
        + w2 * ((ap * a2 - u * am * a13) * cs + (am * a2 + u * ap * a13) * sn);
    let b3 = w1 * ((am * a3 - u * ap * a12) * cs - u * (u * ap * a3 + am * a12) * sn)
        + w2 * ((ap * a3 + u * am * a12) * cs + (am * a3 - u * ap * a12) * sn);
    let b12 = w1 * ((u * ap * a3 + am * a12) * cs + u * (am * a3 - u * ap * a12) * sn)
        + w2 * ((-u * am * a3 + ap * a12) * cs + (u * ap * a3 + am * a12) * sn);
    let b13 = -u * w1 * ((ap * a2 - u * am * a13) * cs + (am * a2 + u * ap * a13) * sn)
        + w2 * ((u * am * a2 + ap * a13) * cs + (-u * ap * a2 + am * a13) * sn);
    let b23 = w1 * ((ap * a1 + am * a23) * cs + (am * a1 - ap * a23) * sn)
        + w2 * ((-am * a1 + ap * a23) * cs + (ap * a1 + am * a23) * sn);

    let g = a0.exp();
    let k = g / c_norm;
    Multivector::new(
        x.sig,
        [g * b0, k * b1, k * b2, k * b3, k * b12, k * b13, k * b23, g * b123],
    )
}

/// `|c| → 0`: with `N = a + 𝒜` and `N² = c` central,
/// `exp(N) = cosh√c + N sinh√c/√c ≈ (1 + c/2 + c²/24) + N (1 + c/6 + c²/120)`.
/// At `c = 0` this is `1 + N`: a nilpotent `N` keeps its vector and bivector
/// parts.
fn exp_cl30_cl12_near_zero(x: &Multivector, c: CenterElement) -> Multivector {
    let sig = x.sig;
    let c2 = c.square(sig);
    let even = CenterElement::new(1.0 + c.a_s / 2.0 + c2.a_s / 24.0, c.a_i / 2.0 + c2.a_i / 24.0);
    let odd = CenterElement::new(1.0 + c.a_s / 6.0 + c2.a_s / 120.0, c.a_i / 6.0 + c2.a_i / 120.0);
    let n = x.vector_bivector();
    let exp_n = even.to_multivector(sig) + odd.to_multivector(sig) * n;
    let a123 = x.c[E123];
    let rotation = CenterElement::new(a123.cos(), a123.sin()).to_multivector(sig);
    (rotation * exp_n) * x.c[S].exp()
}
