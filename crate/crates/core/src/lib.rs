//! Closed-form exponentials and elementary functions of general multivectors
//! in the four real Clifford algebras of three-dimensional space:
//! Cl(3,0), Cl(0,3), Cl(1,2) and Cl(2,1).

pub mod center;
pub mod cli;
pub mod error;
pub mod exp;
pub mod functions;
pub mod multivector;
pub mod remap;
pub mod series;
pub mod signature;
pub mod spin;
pub mod text;

pub use center::{center_decompose, sqrt_center, CenterElement};
pub use error::{GaError, Result};
pub use functions::{
    hyperbolic_exact, normalize, ratio_exact, trig_exact, HyperbolicFn, NormPolicy, RatioFn, TrigFn,
};
pub use exp::{exp, exp_factors, exp_particular, exp_with, Branch, ExpFactors, Tolerance};
pub use multivector::{InvolutionKind, Inverse, Multivector};
pub use remap::{basis_remap, RemapTable};
pub use series::{series_eval, series_eval_with_delta, SeriesFamily, SeriesSpec};
pub use signature::Signature;
pub use spin::{
    down_probability, evolve_spinor, sweep_ramp, sweep_ramp_with, FieldConfig, ProbabilityTrace, RampSweep, SweepMode,
};
pub use text::{parse_mv, render};
