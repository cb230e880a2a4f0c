//! A closed-form scattering system: either the pure double-delta potential
//! or the double-delta plus truncated Poschl-Teller well.

use num_complex::Complex64;

use crate::double_delta::{self, DeltaPairParams};
use crate::error::Result;
use crate::kink::{self, KinkDeltaParams};
use crate::scattering::Amplitudes;

#[derive(Debug, Clone, Copy)]
pub enum System {
    TwoDelta(DeltaPairParams),
    Kink(KinkDeltaParams),
}

impl System {
    pub fn two_delta(params: DeltaPairParams) -> Self {
        System::TwoDelta(params)
    }

    pub fn kink(params: KinkDeltaParams) -> Self {
        System::Kink(params)
    }

    pub fn amplitudes(&self, k: f64) -> Result<Amplitudes> {
        match self {
            System::TwoDelta(p) => double_delta::double_delta_amplitudes(p, k),
            System::Kink(p) => kink::kink_amplitudes(p, k),
        }
    }

    /// The amplitude denominator, entire in complex k.
    pub fn denominator(&self, k: Complex64) -> Complex64 {
        match self {
            System::TwoDelta(p) => double_delta::delta_denominator(p, k),
            System::Kink(p) => kink::kink_denominator(p, k),
        }
    }

    /// Numerator of the transmission amplitude. A denominator zero where
    /// this also vanishes is a removable singularity of sigma, not a pole.
    pub fn sigma_numerator(&self, k: Complex64) -> Complex64 {
        match self {
            System::TwoDelta(_) => 4.0 * k * k,
            System::Kink(_) => 4.0 * (k.powu(4) + k * k),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        match self {
            System::TwoDelta(p) => p.is_symmetric(),
            System::Kink(p) => p.is_symmetric(),
        }
    }

    pub fn alpha(&self) -> f64 {
        match self {
            System::TwoDelta(p) => p.alpha,
            System::Kink(p) => p.alpha,
        }
    }

    pub fn beta(&self) -> f64 {
        match self {
            System::TwoDelta(p) => p.beta,
            System::Kink(p) => p.beta,
        }
    }

    pub fn half_separation(&self) -> f64 {
        match self {
            System::TwoDelta(p) => p.a,
            System::Kink(p) => p.a,
        }
    }
}
