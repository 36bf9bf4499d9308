//! General multivectors of the 3D algebras: geometric product, involutions,
//! grade projection, determinant, adjugate inverse and determinant norm.

use std::ops::{Add, Div, Index, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{GaError, Result};
use crate::signature::{Signature, GRADE};

/// Blade indices into [`Multivector::c`].
pub mod blade {
    pub const S: usize = 0;
    pub const E1: usize = 1;
    pub const E2: usize = 2;
    pub const E3: usize = 3;
    pub const E12: usize = 4;
    pub const E13: usize = 5;
    pub const E23: usize = 6;
    pub const E123: usize = 7;
}

/// `a0 + a1 e1 + a2 e2 + a3 e3 + a12 e12 + a13 e13 + a23 e23 + a123 I`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Multivector {
    pub sig: Signature,
    pub c: [f64; 8],
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvolutionKind {
    /// Negates grades 2 and 3.
    Reverse,
    /// Negates grades 1 and 3.
    GradeInverse,
    /// Clifford conjugate; negates grades 1 and 2.
    ReverseGradeInverse,
}

/// Relative singularity cutoff for [`Multivector::inverse`]:
/// `|Det| < SINGULAR_EPS * (Σ|c_i|)^4` is treated as zero.
pub const SINGULAR_EPS: f64 = 1e-12;

/// Tolerance on the non-scalar residue of the four-factor determinant product,
/// relative to the fourth power of the coefficient scale.
const DET_RESIDUE_EPS: f64 = 1e-10;

/// Result of [`Multivector::inverse`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Inverse {
    pub adjugate: Multivector,
    pub det: f64,
    pub inv: Multivector,
}

impl Multivector {
    pub const fn new(sig: Signature, c: [f64; 8]) -> Self {
        Self { sig, c }
    }

    pub const fn zero(sig: Signature) -> Self {
        Self { sig, c: [0.0; 8] }
    }

    pub const fn scalar(sig: Signature, s: f64) -> Self {
        let mut c = [0.0; 8];
        c[0] = s;
        Self { sig, c }
    }

    pub const fn one(sig: Signature) -> Self {
        Self::scalar(sig, 1.0)
    }

    /// Unit basis blade at storage index `index`.
    pub fn basis(sig: Signature, index: usize) -> Self {
        let mut c = [0.0; 8];
        c[index] = 1.0;
        Self { sig, c }
    }

    pub fn pseudoscalar(sig: Signature) -> Self {
        Self::basis(sig, blade::E123)
    }

    pub fn scalar_part(&self) -> f64 {
        self.c[0]
    }

    /// The vector plus bivector part `a + 𝒜`.
    pub fn vector_bivector(&self) -> Self {
        let mut out = *self;
        out.c[0] = 0.0;
        out.c[7] = 0.0;
        out
    }

    /// Geometric product; fails when the signatures differ.
    pub fn geometric_product(&self, other: &Self) -> Result<Self> {
        if self.sig != other.sig {
            return Err(GaError::SignatureMismatch { left: self.sig, right: other.sig });
        }
        Ok(self.product_unchecked(other))
    }

    fn product_unchecked(&self, other: &Self) -> Self {
        let table = self.sig.table();
        let mut out = [0.0; 8];
        for (i, &x) in self.c.iter().enumerate() {
            if x == 0.0 {
                continue;
            }
            for (j, &y) in other.c.iter().enumerate() {
                let e = table[i][j];
                out[e.index] += f64::from(e.sign) * x * y;
            }
        }
        Self { sig: self.sig, c: out }
    }

    pub fn involute(&self, kind: InvolutionKind) -> Self {
        let flip: [bool; 4] = match kind {
            InvolutionKind::Reverse => [false, false, true, true],
            InvolutionKind::GradeInverse => [false, true, false, true],
            InvolutionKind::ReverseGradeInverse => [false, true, true, false],
        };
        let mut out = *self;
        for (k, v) in out.c.iter_mut().enumerate() {
            if flip[GRADE[k]] {
                *v = -*v;
            }
        }
        out
    }

    pub fn reverse(&self) -> Self {
        self.involute(InvolutionKind::Reverse)
    }

    pub fn grade_inverse(&self) -> Self {
        self.involute(InvolutionKind::GradeInverse)
    }

    pub fn grade_select(&self, grade: usize) -> Result<Self> {
        if grade > 3 {
            return Err(GaError::GradeOutOfRange(grade));
        }
        let mut out = *self;
        for (k, v) in out.c.iter_mut().enumerate() {
            if GRADE[k] != grade {
                *v = 0.0;
            }
        }
        Ok(out)
    }

    /// Grades with a nonzero coefficient, as a bitset (bit g <=> grade g).
    pub fn grades_present(&self) -> u8 {
        self.c
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0.0)
            .fold(0, |acc, (k, _)| acc | (1 << GRADE[k]))
    }

    /// Largest absolute coefficient.
    pub fn max_abs(&self) -> f64 {
        self.c.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn l1_norm(&self) -> f64 {
        self.c.iter().map(|v| v.abs()).sum()
    }

    /// Largest componentwise difference. Panics on a signature mismatch.
    pub fn max_diff(&self, other: &Self) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn is_finite(&self) -> bool {
        self.c.iter().all(|v| v.is_finite())
    }

    /// `rev(A) * gradeinv(A) * conj(A)`, so that `A * Adj(A) = Det(A)`.
    pub fn adjugate(&self) -> Self {
        let rev = self.reverse();
        let gi = self.grade_inverse();
        let cj = self.involute(InvolutionKind::ReverseGradeInverse);
        rev * gi * cj
    }

    /// `Det(A) = A Ã Â (Â)~`.
    ///
    /// Only the scalar part of the product is returned; the remaining
    /// components must vanish up to rounding and this is asserted.
    pub fn determinant(&self) -> f64 {
        let full = *self * self.adjugate();
        let scale = self.l1_norm().powi(4).max(f64::MIN_POSITIVE);
        let residue = full.c[1..].iter().fold(0.0f64, |m, v| m.max(v.abs()));
        assert!(
            !residue.is_finite() || residue <= DET_RESIDUE_EPS * scale,
            "determinant product has non-scalar residue {residue:e} (scale {scale:e})"
        );
        full.c[0]
    }

    /// Adjugate, determinant and inverse `Adj(A) / Det(A)`.
    pub fn inverse(&self) -> Result<Inverse> {
        let adjugate = self.adjugate();
        let det = (*self * adjugate).c[0];
        if det.abs() < SINGULAR_EPS * self.l1_norm().powi(4) || det == 0.0 {
            return Err(GaError::NonInvertible { adjugate, det });
        }
        Ok(Inverse { adjugate, det, inv: adjugate / det })
    }

    /// `Det(A)^(1/4)`; undefined for negative determinants.
    pub fn det_norm(&self) -> Result<f64> {
        let det = self.determinant();
        if det < 0.0 {
            return Err(GaError::NormUndefined { det });
        }
        Ok(det.powf(0.25))
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = *self;
        out.c.iter_mut().for_each(|v| *v *= s);
        out
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, n: u32) -> Self {
        let mut result = Self::one(self.sig);
        let mut base = *self;
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                result = result * base;
            }
            base = base * base;
            n >>= 1;
        }
        result
    }

    fn assert_same(&self, other: &Self) {
        assert_eq!(self.sig, other.sig, "signature mismatch in multivector arithmetic");
    }
}

impl Index<usize> for Multivector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.c[i]
    }
}

/// Geometric product. Panics when the signatures differ; use
/// [`Multivector::geometric_product`] for a checked version.
impl Mul for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        self.assert_same(&rhs);
        self.product_unchecked(&rhs)
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        rhs.scale(self)
    }
}

impl Div<f64> for Multivector {
    type Output = Multivector;
    fn div(self, rhs: f64) -> Multivector {
        let mut out = self;
        out.c.iter_mut().for_each(|v| *v /= rhs);
        out
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        self.assert_same(&rhs);
        let mut out = self;
        out.c.iter_mut().zip(rhs.c).for_each(|(a, b)| *a += b);
        out
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        self.assert_same(&rhs);
        let mut out = self;
        out.c.iter_mut().zip(rhs.c).for_each(|(a, b)| *a -= b);
        out
    }
}

impl Add<f64> for Multivector {
    type Output = Multivector;
    fn add(self, rhs: f64) -> Multivector {
        let mut out = self;
        out.c[0] += rhs;
        out
    }
}

impl Sub<f64> for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: f64) -> Multivector {
        self + (-rhs)
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(-1.0)
    }
}

#[cfg(test)]
mod tests {
    use super::blade::*;
    use super::*;

    fn e(sig: Signature, i: usize) -> Multivector {
        Multivector::basis(sig, i)
    }

    pub(crate) fn a_prime() -> Multivector {
        Multivector::new(Signature::Cl30, [4.0, 1.0, 3.0, -5.0, 10.0, 9.0, -9.0, -4.0])
    }

    #[test]
    fn basic_products() {
        assert_eq!(e(Signature::Cl30, E1) * e(Signature::Cl30, E1), Multivector::one(Signature::Cl30));
        assert_eq!(e(Signature::Cl03, E1) * e(Signature::Cl03, E1), -Multivector::one(Signature::Cl03));
        for sig in Signature::ALL {
            assert_eq!(e(sig, E1) * e(sig, E3), e(sig, E13));
            assert_eq!(e(sig, E3) * e(sig, E1), -e(sig, E13));
        }
        assert_eq!(e(Signature::Cl30, E12) * e(Signature::Cl30, E13), -e(Signature::Cl30, E23));
    }

    #[test]
    fn mismatched_signatures_are_rejected() {
        let a = Multivector::one(Signature::Cl30);
        let b = Multivector::one(Signature::Cl21);
        assert!(matches!(a.geometric_product(&b), Err(GaError::SignatureMismatch { .. })));
    }

    #[test]
    fn involutions() {
        let sig = Signature::Cl30;
        assert_eq!(e(sig, E12).reverse(), -e(sig, E12));
        let x = e(sig, E1) + e(sig, E12);
        assert_eq!(x.grade_inverse(), -e(sig, E1) + e(sig, E12));
        let y = Multivector::new(sig, [1., 2., 3., 4., 5., 6., 7., 8.]);
        for k in [InvolutionKind::Reverse, InvolutionKind::GradeInverse, InvolutionKind::ReverseGradeInverse] {
            assert_eq!(y.involute(k).involute(k), y);
        }
        assert_eq!(
            y.reverse().grade_inverse(),
            y.involute(InvolutionKind::ReverseGradeInverse)
        );
    }

    #[test]
    fn grade_projection() {
        let sig = Signature::Cl21;
        let x = Multivector::new(sig, [2.0, 3.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        assert_eq!(x.grade_select(0).unwrap(), Multivector::scalar(sig, 2.0));
        assert_eq!(e(sig, E13).grade_select(2).unwrap(), e(sig, E13));
        let y = Multivector::new(sig, [1., 2., 3., 4., 5., 6., 7., 8.]);
        let sum = (0..4).map(|g| y.grade_select(g).unwrap()).fold(Multivector::zero(sig), |a, b| a + b);
        assert_eq!(sum, y);
        assert!(matches!(y.grade_select(4), Err(GaError::GradeOutOfRange(4))));
    }

    #[test]
    fn determinant_of_reference_multivector() {
        assert_eq!(a_prime().determinant(), 71129.0);
        assert_eq!(Multivector::one(Signature::Cl30).determinant(), 1.0);
        for sig in Signature::ALL {
            let s = Multivector::scalar(sig, -1.5);
            assert!((s.determinant() - 1.5f64.powi(4)).abs() < 1e-12);
        }
    }

    #[test]
    fn det_norm_values() {
        let n = a_prime().det_norm().unwrap();
        assert!((n - 71129f64.powf(0.25)).abs() < 1e-12);
        assert!((n - 16.33).abs() < 5e-3);
        assert_eq!(Multivector::one(Signature::Cl12).det_norm().unwrap(), 1.0);
        let s = 2.5;
        assert!(((a_prime() * s).det_norm().unwrap() - s * n).abs() < 1e-10);
    }

    #[test]
    fn det_norm_rejects_negative_determinant() {
        // 1 + e1 + e23 in Cl(2,1) has Det = -3.
        let x = Multivector::new(Signature::Cl21, [1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 1.0, 0.0]);
        assert_eq!(x.determinant(), -3.0);
        assert!(matches!(x.det_norm(), Err(GaError::NormUndefined { det }) if det == -3.0));
    }

    #[test]
    fn simple_inverses() {
        let two = Multivector::scalar(Signature::Cl03, 2.0);
        assert_eq!(two.inverse().unwrap().inv, Multivector::scalar(Signature::Cl03, 0.5));
        let e1 = e(Signature::Cl30, E1);
        assert_eq!(e1.inverse().unwrap().inv, e1);
        let e1 = e(Signature::Cl03, E1);
        assert_eq!(e1.inverse().unwrap().inv, -e1);
    }

    #[test]
    fn singular_multivector_reports_adjugate() {
        // (1 + e1)/2 is an idempotent in Cl(3,0).
        let p = Multivector::new(Signature::Cl30, [0.5, 0.5, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
        match p.inverse() {
            Err(GaError::NonInvertible { adjugate, det }) => {
                assert_eq!(det, 0.0);
                assert!((p * adjugate).max_abs() < 1e-15);
            }
            other => panic!("expected NonInvertible, got {other:?}"),
        }
    }

    #[test]
    fn powi_matches_repeated_product() {
        let x = a_prime() / 17.0;
        let mut p = Multivector::one(Signature::Cl30);
        for n in 0..9 {
            assert!(x.powi(n).max_diff(&p) < 1e-14);
            p = p * x;
        }
    }
}
