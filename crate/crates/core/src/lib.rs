//! Exact first-order matrix algebra for massless spin 0 and 1 fields in an
//! 11-dimensional component space.
//!
//! All arithmetic is over Gaussian rationals, so every identity check is an
//! exact equality and every residual is either zero or a nonzero rational.

pub mod error;
pub mod fields;
pub mod fixtures;
pub mod identities;
pub mod kernel;
pub mod momentum;
pub mod oracle;
pub mod representation;
pub mod suite;

pub use error::{Error, Result};
pub use fields::{component_residual, em_fields, maxwell_limit_check, EMFields, FieldComponents};
pub use identities::{run_all, CheckResult, Residual, Status};
pub use kernel::{
    levi_civita3, levi_civita4, pair_slot, parse_rational, AdjointState, ComplexRational,
    ComponentIndex, Rational, RepMatrix, WaveState, CANONICAL, DIM, PAIRS,
};
pub use momentum::{
    dyad_decompose, gamma_projector, helicity_operator, k_slash, solution_basis, spin_squared,
    state_projectors, wave_operator, DyadSolution, FourMomentum, LightlikeMomentum,
    MassiveMomentum, Orientation, ProjectorSet, StateLabel,
};
pub use representation::{BetaFamily, RepresentationSet};

/// Numeric traits implemented by the scalar and used throughout the API.
pub use num_traits::{One, Zero};
