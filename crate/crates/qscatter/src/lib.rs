//! Quantum scattering off a pair of Dirac delta walls, optionally dressed
//! with the truncated Poschl-Teller well of the sine-Gordon kink:
//! closed-form amplitudes, S-matrix and phase shifts, pole taxonomy in the
//! complex momentum plane, Dirichlet spectra in the wall limit,
//! zeta-regularized vacuum energies, and an independent ODE integrator
//! that cross-checks all of it.

pub mod cli;
pub mod dirichlet;
pub mod double_delta;
pub mod error;
pub mod kink;
pub mod oracle;
pub mod poles;
pub mod scattering;
pub mod system;
pub mod vacuum;

pub use dirichlet::{
    critical_separation, delta_dirichlet_momenta, kink_dirichlet_spectrum, kink_ground_state,
    kink_mode_wavefunction, DirichletMode, GroundStateRoot, Parity,
};
pub use double_delta::{
    delta_denominator, double_delta_amplitudes, jost_factors, nondimensionalize, DeltaPairParams,
    JostPair, PhysicalParams, RescaleMode, Rescaled,
};
pub use error::{Error, Result};
pub use kink::{kink_amplitudes, kink_denominator, kink_jost_factors, KinkDeltaParams, KinkJostPair};
pub use oracle::{
    ode_residual, solve_bound_states_numeric, solve_scattering_numeric, PotentialSpec, SmoothTerm,
};
pub use poles::{
    classify, count_zeros, find_poles, physical_poles, refine_root, Channel, Pole, PoleKind,
    SearchRegion,
};
pub use scattering::{
    phase_shift_sum_derivative, phase_shift_sweep, phase_shifts, spectral_density_shift,
    Amplitudes, DensityConvention, PhaseShiftPair, SMatrix2x2,
};
pub use system::System;
pub use vacuum::{
    dirichlet_casimir_energy, kink_dirichlet_mode_sum_difference, riemann_zeta,
    vacuum_energy_integrand, zeta_regularized_mode_sum, DispersionSpec, ModeSumTable,
};
