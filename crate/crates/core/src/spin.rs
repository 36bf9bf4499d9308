//! Spin-1/2 evolution in a static field along `e3` plus a field rotating in
//! the `e12` plane, solved in the rotating frame with closed-form
//! exponentials of Cl(3,0).
//!
//! The spinor obeys `dψ/dt = ½ γ I B(t) ψ` with
//! `B(t) = B0 e3 + B1 (e1 cos ωt + σ e2 sin ωt)`. The rotor
//! `S = exp(-σ e12 ω t / 2)` removes the time dependence, leaving
//! `ψ(t) = S(t) exp(½ t M) ψ(0)` with `M = (σω + ω0) e12 + ω1 e23`.

use std::io::{self, Write};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{GaError, Result};
use crate::exp::exp;
use crate::multivector::{blade::*, Multivector};
use crate::signature::Signature;

const NORM_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FieldConfig {
    pub b0: f64,
    pub b1: f64,
    pub omega: f64,
    /// Rotation sense: `-1` clockwise, `+1` anticlockwise.
    pub sigma: f64,
    pub gamma: f64,
}

impl FieldConfig {
    /// Field with `γ = 1`, so `ω0 = B0` and `ω1 = B1`.
    pub fn new(b0: f64, b1: f64, omega: f64, sigma: f64) -> Result<Self> {
        let cfg = Self { b0, b1, omega, sigma, gamma: 1.0 };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn with_gamma(mut self, gamma: f64) -> Result<Self> {
        self.gamma = gamma;
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        check_sigma(self.sigma)?;
        if [self.b0, self.b1, self.omega, self.gamma].iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(GaError::InvalidParameter("field parameters must be finite".into()))
        }
    }

    pub fn omega0(&self) -> f64 {
        self.gamma * self.b0
    }

    pub fn omega1(&self) -> f64 {
        self.gamma * self.b1
    }

    /// `σω + ω0`; zero at resonance.
    pub fn detuning(&self) -> f64 {
        self.sigma * self.omega + self.omega0()
    }

    /// `sqrt((σω + ω0)² + ω1²)`.
    pub fn rabi_frequency(&self) -> f64 {
        self.detuning().hypot(self.omega1())
    }

    /// Upper bound of `P↓` over all times.
    pub fn max_probability(&self) -> f64 {
        let w = self.rabi_frequency();
        if w == 0.0 {
            0.0
        } else {
            (self.omega1() / w).powi(2)
        }
    }

    /// `B(t)` as a Cl(3,0) vector.
    pub fn field(&self, t: f64) -> Multivector {
        let (s, c) = (self.omega * t).sin_cos();
        let mut v = [0.0; 8];
        v[E1] = self.b1 * c;
        v[E2] = self.b1 * self.sigma * s;
        v[E3] = self.b0;
        Multivector::new(Signature::Cl30, v)
    }

    /// Rotating-frame rotor `S(t) = exp(-σ e12 ω t / 2)`.
    pub fn rotor(&self, t: f64) -> Multivector {
        exp(&(Multivector::basis(Signature::Cl30, E12) * (-self.sigma * self.omega * t / 2.0)))
    }

    /// Constant generator `M = (σω + ω0) e12 + ω1 e23` of the rotating-frame equation.
    pub fn generator(&self) -> Multivector {
        let mut m = [0.0; 8];
        m[E12] = self.detuning();
        m[E23] = self.omega1();
        Multivector::new(Signature::Cl30, m)
    }
}

fn check_sigma(sigma: f64) -> Result<()> {
    if sigma == 1.0 || sigma == -1.0 {
        Ok(())
    } else {
        Err(GaError::InvalidParameter(format!("sigma must be -1 or +1, got {sigma}")))
    }
}

/// `|ψψ̃ - 1|` measured as the largest coefficient deviation.
pub fn norm_defect(psi: &Multivector) -> f64 {
    (*psi * psi.reverse()).max_diff(&Multivector::one(psi.sig))
}

/// `ψ(t) = S(t) exp(½ t M) ψ(0)`.
pub fn evolve_spinor(cfg: &FieldConfig, t: f64, psi0: &Multivector) -> Result<Multivector> {
    cfg.validate()?;
    if psi0.sig != Signature::Cl30 {
        return Err(GaError::SignatureMismatch { left: Signature::Cl30, right: psi0.sig });
    }
    let defect = norm_defect(psi0);
    if defect.is_nan() || defect > NORM_TOL {
        return Err(GaError::NotNormalized(defect));
    }
    let frame = exp(&(cfg.generator() * (t / 2.0)));
    Ok(cfg.rotor(t) * frame * *psi0)
}

/// Down-spin component `ψ↓ = -⟨e13 ψ⟩ + ⟨e13 ψ e12⟩ e12`.
pub fn down_component(psi: &Multivector) -> Multivector {
    let e12 = Multivector::basis(psi.sig, E12);
    let e13 = Multivector::basis(psi.sig, E13);
    let mut c = [0.0; 8];
    c[S] = -(e13 * *psi).scalar_part();
    c[E12] = (e13 * *psi * e12).scalar_part();
    Multivector::new(psi.sig, c)
}

/// `ψ↓ ψ̃↓` for an arbitrary spinor.
pub fn projected_probability(psi: &Multivector) -> f64 {
    let d = down_component(psi);
    (d * d.reverse()).scalar_part()
}

/// `P↓(t) = (ω1 sin(½ t Ω) / Ω)²` with `Ω = sqrt((σω + ω0)² + ω1²)`, starting
/// from the up state `ψ(0) = 1`.
pub fn down_probability(cfg: &FieldConfig, t: f64) -> f64 {
    let w = cfg.rabi_frequency();
    let half = 0.5 * t;
    // sin(Ω t/2)/Ω → t/2 as Ω → 0.
    let ratio = if w * half.abs() < 1e-8 { half } else { (w * half).sin() / w };
    (cfg.omega1() * ratio).powi(2)
}

/// `P↓(t)` by evolving `ψ(0) = 1` and projecting.
pub fn down_probability_projected(cfg: &FieldConfig, t: f64) -> Result<f64> {
    let psi = evolve_spinor(cfg, t, &Multivector::one(Signature::Cl30))?;
    Ok(projected_probability(&psi))
}

/// Linear ramp of `B0` over `[0, duration]` at fixed `ω` and `ω1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RampSweep {
    pub b0_start: f64,
    pub b0_end: f64,
    pub duration: f64,
    pub samples: usize,
    pub omega: f64,
    pub omega1: f64,
    pub gamma: f64,
}

impl RampSweep {
    pub fn validate(&self) -> Result<()> {
        if self.samples < 2 {
            return Err(GaError::InvalidParameter(format!("samples must be at least 2, got {}", self.samples)));
        }
        let finite = [self.b0_start, self.b0_end, self.duration, self.omega, self.omega1, self.gamma]
            .iter()
            .all(|v| v.is_finite());
        if !finite || self.duration < 0.0 || self.gamma == 0.0 {
            return Err(GaError::InvalidParameter(
                "sweep parameters must be finite, with duration >= 0 and gamma != 0".into(),
            ));
        }
        Ok(())
    }

    pub fn time(&self, k: usize) -> f64 {
        self.duration * k as f64 / (self.samples - 1) as f64
    }

    pub fn b0_at(&self, t: f64) -> f64 {
        if self.duration == 0.0 {
            return self.b0_start;
        }
        self.b0_start + (self.b0_end - self.b0_start) * t / self.duration
    }

    /// Field configuration frozen at time `t` of the ramp.
    pub fn config_at(&self, t: f64, sigma: f64) -> FieldConfig {
        FieldConfig {
            b0: self.b0_at(t),
            b1: self.omega1 / self.gamma,
            omega: self.omega,
            sigma,
            gamma: self.gamma,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum SweepMode {
    /// Closed-form `P↓` at each sample with `B0` frozen at its current value
    /// and the phase counted from the start of the ramp.
    #[default]
    Adiabatic,
    /// Exact propagation with `B0` held constant between consecutive samples.
    Stepped,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityTrace {
    pub times: Vec<f64>,
    pub b0: Vec<f64>,
    pub p_down: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Peak {
    pub index: usize,
    pub t: f64,
    pub b0: f64,
    pub p_down: f64,
}

impl ProbabilityTrace {
    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Sample with the largest probability (first one on ties).
    pub fn peak(&self) -> Option<Peak> {
        let mut best: Option<Peak> = None;
        for (index, &p) in self.p_down.iter().enumerate() {
            if best.is_none_or(|b| p > b.p_down) {
                best = Some(Peak { index, t: self.times[index], b0: self.b0[index], p_down: p });
            }
        }
        best
    }

    /// CSV with header `t,b0,p_down`, 17 significant digits, LF line endings.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        out.write_all(b"t,b0,p_down\n")?;
        for k in 0..self.len() {
            writeln!(out, "{:.16e},{:.16e},{:.16e}", self.times[k], self.b0[k], self.p_down[k])?;
        }
        out.flush()
    }
}

pub fn sweep_ramp(sweep: &RampSweep, sigma: f64) -> Result<ProbabilityTrace> {
    sweep_ramp_with(sweep, sigma, SweepMode::Adiabatic)
}

pub fn sweep_ramp_with(sweep: &RampSweep, sigma: f64, mode: SweepMode) -> Result<ProbabilityTrace> {
    sweep.validate()?;
    check_sigma(sigma)?;
    let times: Vec<f64> = (0..sweep.samples).map(|k| sweep.time(k)).collect();
    let b0: Vec<f64> = times.iter().map(|&t| sweep.b0_at(t)).collect();
    let p_down = match mode {
        SweepMode::Adiabatic => times
            .par_iter()
            .map(|&t| down_probability(&sweep.config_at(t, sigma), t))
            .collect(),
        SweepMode::Stepped => stepped(sweep, sigma, &times),
    };
    Ok(ProbabilityTrace { times, b0, p_down })
}

/// Rotating-frame state advanced by `exp(½ Δt M_k)` with `M_k` evaluated at
/// the midpoint of each interval. The probability does not depend on the
/// rotor `S`, so it is read directly from the rotating-frame state.
fn stepped(sweep: &RampSweep, sigma: f64, times: &[f64]) -> Vec<f64> {
    let mut phi = Multivector::one(Signature::Cl30);
    let mut out = Vec::with_capacity(times.len());
    out.push(projected_probability(&phi));
    for w in times.windows(2) {
        let dt = w[1] - w[0];
        let cfg = sweep.config_at(0.5 * (w[0] + w[1]), sigma);
        phi = exp(&(cfg.generator() * (dt / 2.0))) * phi;
        out.push(projected_probability(&phi));
    }
    out
}
