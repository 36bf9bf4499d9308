//! Truncated Taylor series of multivector functions.
//!
//! Coefficients are generated exactly as rationals (Bernoulli numbers for
//! `tan`/`tanh`, Euler numbers for `sec`/`sech`) and converted to `f64` once.
//! A series with `terms = n` keeps every power `A^k` with `k ≤ n`, so
//! `sinh` with 6 terms is `A + A³/3! + A⁵/5!` and `cosh` with 6 terms ends at
//! `A⁶/6!`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use once_cell::sync::Lazy;
use serde::{Deserialize, Serialize};

use crate::error::{GaError, Result};
use crate::multivector::Multivector;

/// Highest power for which coefficients are tabulated.
pub const MAX_ORDER: usize = 60;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SeriesFamily {
    Exp,
    Sin,
    Cos,
    Sinh,
    Cosh,
    Tanh,
    Tan,
    /// `1/cosh`, Euler numbers.
    SechEuler,
    /// `1/cos`, Euler numbers.
    SecEuler,
}

impl SeriesFamily {
    pub const ALL: [SeriesFamily; 9] = [
        SeriesFamily::Exp,
        SeriesFamily::Sin,
        SeriesFamily::Cos,
        SeriesFamily::Sinh,
        SeriesFamily::Cosh,
        SeriesFamily::Tanh,
        SeriesFamily::Tan,
        SeriesFamily::SechEuler,
        SeriesFamily::SecEuler,
    ];

    pub const fn name(self) -> &'static str {
        match self {
            SeriesFamily::Exp => "exp",
            SeriesFamily::Sin => "sin",
            SeriesFamily::Cos => "cos",
            SeriesFamily::Sinh => "sinh",
            SeriesFamily::Cosh => "cosh",
            SeriesFamily::Tanh => "tanh",
            SeriesFamily::Tan => "tan",
            SeriesFamily::SechEuler => "sech",
            SeriesFamily::SecEuler => "sec",
        }
    }

    fn slot(self) -> usize {
        self as usize
    }
}

impl fmt::Display for SeriesFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesFamily {
    type Err = GaError;

    fn from_str(s: &str) -> Result<Self> {
        SeriesFamily::ALL
            .into_iter()
            .find(|f| f.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| GaError::InvalidParameter(format!("unknown series family `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesSpec {
    pub family: SeriesFamily,
    /// Highest power of the argument kept in the sum.
    pub terms: usize,
}

impl SeriesSpec {
    pub const fn new(family: SeriesFamily, terms: usize) -> Self {
        Self { family, terms }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Multivector,
    /// Largest coefficient of the last nonzero term `c_k A^k`.
    pub last_term: f64,
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

fn binomial(n: usize, k: usize) -> BigInt {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Bernoulli numbers `B_0 ..= B_n` with `B_1 = -1/2`.
pub fn bernoulli_numbers(n: usize) -> Vec<BigRational> {
    let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
    b.push(BigRational::one());
    for m in 1..=n {
        let sum = (0..m).fold(BigRational::zero(), |acc, k| {
            acc + BigRational::from_integer(binomial(m + 1, k)) * &b[k]
        });
        b.push(-sum / BigRational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// Euler numbers `E_0 ..= E_n` (`E_odd = 0`, `E_2 = -1`, `E_4 = 5`, ...).
pub fn euler_numbers(n: usize) -> Vec<BigInt> {
    let mut e = vec![BigInt::zero(); n + 1];
    e[0] = BigInt::one();
    for m in (2..=n).step_by(2) {
        let sum = (0..m).step_by(2).fold(BigInt::zero(), |acc, k| acc + binomial(m, k) * &e[k]);
        e[m] = -sum;
    }
    e
}

/// Exact Maclaurin coefficients `c_0 ..= c_MAX_ORDER` of `family`.
pub fn exact_coefficients(family: SeriesFamily) -> Vec<BigRational> {
    let n = MAX_ORDER;
    let int = |v: i64| BigRational::from_integer(BigInt::from(v));
    let inv_fact = |k: usize| BigRational::new(BigInt::one(), factorial(k));
    let alternating = |k: usize| if (k / 2).is_multiple_of(2) { int(1) } else { int(-1) };
    match family {
        SeriesFamily::Exp => (0..=n).map(inv_fact).collect(),
        SeriesFamily::Sinh => (0..=n).map(|k| if k % 2 == 1 { inv_fact(k) } else { int(0) }).collect(),
        SeriesFamily::Cosh => (0..=n).map(|k| if k % 2 == 0 { inv_fact(k) } else { int(0) }).collect(),
        SeriesFamily::Sin => (0..=n)
            .map(|k| if k % 2 == 1 { alternating(k) * inv_fact(k) } else { int(0) })
            .collect(),
        SeriesFamily::Cos => (0..=n)
            .map(|k| if k % 2 == 0 { alternating(k) * inv_fact(k) } else { int(0) })
            .collect(),
        SeriesFamily::Tanh | SeriesFamily::Tan => {
            // c_{2j-1} = 2^{2j} (2^{2j} - 1) B_{2j} / (2j)!, with (-1)^{j-1} for tan.
            let b = bernoulli_numbers(n + 1);
            (0..=n)
                .map(|k| {
                    if k % 2 == 0 {
                        return int(0);
                    }
                    let j = k.div_ceil(2);
                    let p = BigInt::one() << (2 * j);
                    let factor = BigRational::from_integer(&p * (&p - BigInt::one()));
                    let mut c = factor * &b[2 * j] * inv_fact(2 * j);
                    if family == SeriesFamily::Tan && j % 2 == 0 {
                        c = -c;
                    }
                    c
                })
                .collect()
        }
        SeriesFamily::SechEuler | SeriesFamily::SecEuler => {
            let e = euler_numbers(n);
            (0..=n)
                .map(|k| {
                    if k % 2 == 1 {
                        return int(0);
                    }
                    let mut c = BigRational::from_integer(e[k].clone()) * inv_fact(k);
                    if family == SeriesFamily::SecEuler && (k / 2) % 2 == 1 {
                        c = -c;
                    }
                    c
                })
                .collect()
        }
    }
}

static TABLES: Lazy<Vec<Vec<f64>>> = Lazy::new(|| {
    SeriesFamily::ALL
        .iter()
        .map(|&f| {
            exact_coefficients(f)
                .iter()
                .map(|r| r.to_f64().expect("coefficient fits in f64"))
                .collect()
        })
        .collect()
});

/// Floating-point coefficients `c_0 ..= c_MAX_ORDER`.
pub fn coefficients(family: SeriesFamily) -> &'static [f64] {
    &TABLES[family.slot()]
}

pub fn series_eval(x: &Multivector, spec: SeriesSpec) -> Result<Multivector> {
    series_eval_with_delta(x, spec).map(|r| r.value)
}

/// Horner evaluation `c_0 + A(c_1 + A(c_2 + ...))`, one geometric product
/// per power, plus the size of the last retained term.
pub fn series_eval_with_delta(x: &Multivector, spec: SeriesSpec) -> Result<SeriesResult> {
    if spec.terms == 0 {
        return Err(GaError::EmptySeries);
    }
    if spec.terms > MAX_ORDER {
        return Err(GaError::SeriesOrder { requested: spec.terms, max: MAX_ORDER });
    }
    let c = &coefficients(spec.family)[..=spec.terms];
    let mut acc = Multivector::scalar(x.sig, c[spec.terms]);
    for &ck in c[..spec.terms].iter().rev() {
        acc = acc * *x + ck;
    }
    let last_term = match c.iter().rposition(|v| *v != 0.0) {
        Some(k) => c[k].abs() * x.powi(k as u32).max_abs(),
        None => 0.0,
    };
    Ok(SeriesResult { value: acc, last_term })
}

/// Exact check used by tests: `sum_{k} a_k b_{n-k}`.
pub fn cauchy_product(a: &[BigRational], b: &[BigRational], n: usize) -> BigRational {
    (0..=n).fold(BigRational::zero(), |acc, k| acc + &a[k] * &b[n - k])
}

/// True if every coefficient is a finite f64 with the sign of its rational.
pub fn table_is_consistent(family: SeriesFamily) -> bool {
    exact_coefficients(family)
        .iter()
        .zip(coefficients(family))
        .all(|(r, f)| f.is_finite() && (r.is_zero() == (*f == 0.0)) && (r.is_negative() == (*f < 0.0)))
}
