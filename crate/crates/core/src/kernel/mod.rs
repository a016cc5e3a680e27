//! Exact arithmetic kernel: Gaussian-rational scalars, the 11-slot index
//! scheme, dense matrices and elementary matrices `ε^{A,B}`.

pub mod index;
pub mod matrix;
pub mod scalar;

pub use index::{levi_civita3, levi_civita4, pair_slot, ComponentIndex, CANONICAL, DIM, PAIRS};
pub use matrix::{eps_matrix, mat_poly, AdjointState, RepMatrix, WaveState};
pub use scalar::{int, parse_rational, ratio, ComplexRational, Rational};
