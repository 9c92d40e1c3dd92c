//! Bound states of the Hulthén potential
//! `V(r) = −Ze²δ e^{−δr}/(1 − e^{−δr})` with the centrifugal barrier
//! replaced by `δ²[C₀ + e^{−δr}/(1 − e^{−δr})²]`.
//!
//! Three independent routes give the energies:
//!
//! * [`nu_solver`]: the Nikiforov–Uvarov reduction to a hypergeometric-type
//!   equation, with closed-form energies and Jacobi-polynomial wavefunctions.
//! * [`susy_solver`]: a superpotential with shape-invariant partners whose
//!   remainders sum to the same spectrum.
//! * [`oracle`]: a finite-difference eigensolver that works with either the
//!   approximated or the exact centrifugal term.
//!
//! Everything is generic over [`Real`] (`f32` or `f64`). The `*F64` aliases
//! below cover the common case.
//!
//! ```
//! use hulthen_core::{energy_nu, PotentialSpecF64, QuantumNumbers};
//!
//! let spec = PotentialSpecF64::atomic(1.0, 0.05).unwrap().with_c0(0.0).unwrap();
//! let q: QuantumNumbers = "2p".parse().unwrap();
//! let e = energy_nu(&spec, q);
//! assert!((e.energy + 0.10125).abs() < 1e-12);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod error;
pub mod model;
pub mod nu_solver;
pub mod oracle;
pub mod reference;
pub mod scalar;
pub mod specfun;
pub mod susy_solver;

pub use error::{HulthenError, Result};
pub use model::{
    dimensionless, lambda, potential_effective, potential_hulthen, DimensionlessParams, PotentialMode, PotentialSpec,
    QuantumNumbers, IMPROVED_C0,
};
pub use nu_solver::{
    energy_nu, normalization_constant, quantization_residual, wavefunction, EnergyResult, Intermediates, Method,
    RadialWavefunction,
};
pub use oracle::{
    approximation_gap, ode_residual, solve_radial, solve_radial_with, GridSpec, SolveOptions, SpectrumResult,
};
pub use scalar::Real;
pub use susy_solver::{
    energy_susy, ground_wavefunction, partner_potentials, riccati_residual, shape_invariance_remainder,
    superpotential_coeffs, SuperpotentialCoeffs,
};

pub type PotentialSpecF64 = PotentialSpec<f64>;
pub type PotentialSpecF32 = PotentialSpec<f32>;
pub type EnergyResultF64 = EnergyResult<f64>;
pub type EnergyResultF32 = EnergyResult<f32>;
pub type RadialWavefunctionF64 = RadialWavefunction<f64>;
pub type RadialWavefunctionF32 = RadialWavefunction<f32>;
pub type SuperpotentialCoeffsF64 = SuperpotentialCoeffs<f64>;
pub type GridSpecF64 = GridSpec<f64>;
pub type SpectrumResultF64 = SpectrumResult<f64>;
