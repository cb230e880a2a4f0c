//! S-matrix, eigenphases and spectral density, shared by both potentials.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::system::System;

/// The eight scattering coefficients at one real momentum.
///
/// `sigma_*` are transmission amplitudes, `rho_*` reflections, and
/// `a_*`/`b_*` the zone-I wave-function coefficients for the right- and
/// left-incoming solutions.
#[derive(Debug, Clone, Copy)]
pub struct Amplitudes {
    pub sigma_r: Complex64,
    pub sigma_l: Complex64,
    pub rho_r: Complex64,
    pub rho_l: Complex64,
    pub a_r: Complex64,
    pub b_r: Complex64,
    pub a_l: Complex64,
    pub b_l: Complex64,
}

/// 2x2 scattering matrix `[[sigma_r, rho_l], [rho_r, sigma_l]]`.
#[derive(Debug, Clone, Copy)]
pub struct SMatrix2x2 {
    pub sigma_r: Complex64,
    pub rho_l: Complex64,
    pub rho_r: Complex64,
    pub sigma_l: Complex64,
}

impl SMatrix2x2 {
    pub fn from_amplitudes(amp: &Amplitudes) -> Self {
        Self {
            sigma_r: amp.sigma_r,
            rho_l: amp.rho_l,
            rho_r: amp.rho_r,
            sigma_l: amp.sigma_l,
        }
    }

    pub fn identity() -> Self {
        Self {
            sigma_r: Complex64::new(1.0, 0.0),
            rho_l: Complex64::new(0.0, 0.0),
            rho_r: Complex64::new(0.0, 0.0),
            sigma_l: Complex64::new(1.0, 0.0),
        }
    }

    pub fn det(&self) -> Complex64 {
        self.sigma_r * self.sigma_l - self.rho_r * self.rho_l
    }

    /// Max-norm of `S S^dagger - I`.
    pub fn unitarity_defect(&self) -> f64 {
        let (s11, s12, s21, s22) = (self.sigma_r, self.rho_l, self.rho_r, self.sigma_l);
        let d11 = s11 * s11.conj() + s12 * s12.conj() - 1.0;
        let d12 = s11 * s21.conj() + s12 * s22.conj();
        let d21 = s21 * s11.conj() + s22 * s12.conj();
        let d22 = s21 * s21.conj() + s22 * s22.conj() - 1.0;
        d11.norm().max(d12.norm()).max(d21.norm()).max(d22.norm())
    }
}

/// Unwrapped eigenphases of the S-matrix at momentum `k`.
#[derive(Debug, Clone, Copy)]
pub struct PhaseShiftPair {
    pub delta_plus: f64,
    pub delta_minus: f64,
    pub k: f64,
}

const UNITARITY_TOL: f64 = 1e-8;

/// Continue `raw` (defined modulo pi) to the branch nearest `prev`.
fn continue_mod_pi(raw: f64, prev: f64) -> f64 {
    raw + PI * ((prev - raw) / PI).round()
}

/// Eigenphases `exp(2i delta_pm) = sigma pm sqrt(rho_l rho_r)`.
///
/// With `previous` given, the branch of the square root and the phase
/// winding are chosen for continuity against it; otherwise the principal
/// branch is used.
pub fn phase_shifts(
    s: &SMatrix2x2,
    k: f64,
    previous: Option<&PhaseShiftPair>,
) -> Result<PhaseShiftPair> {
    let defect = s.unitarity_defect();
    if defect > UNITARITY_TOL {
        return Err(Error::InconsistentInput(format!(
            "S-matrix unitarity defect {defect:.3e} exceeds {UNITARITY_TOL:.0e}"
        )));
    }
    let sigma = s.sigma_r;
    let root = (s.rho_l * s.rho_r).sqrt();
    let raw_a = 0.5 * (sigma + root).arg();
    let raw_b = 0.5 * (sigma - root).arg();

    match previous {
        None => Ok(PhaseShiftPair {
            delta_plus: raw_a,
            delta_minus: raw_b,
            k,
        }),
        Some(prev) => {
            // The sign of the square root is a branch choice: try both
            // assignments of the eigenvalues to the +/- channels.
            let mut best: Option<(f64, f64, f64)> = None;
            for (ra, rb) in [(raw_a, raw_b), (raw_b, raw_a)] {
                let dp = continue_mod_pi(ra, prev.delta_plus);
                let dm = continue_mod_pi(rb, prev.delta_minus);
                let cost = (dp - prev.delta_plus).abs() + (dm - prev.delta_minus).abs();
                if best.map_or(true, |(c, _, _)| cost < c) {
                    best = Some((cost, dp, dm));
                }
            }
            let (_, delta_plus, delta_minus) = best.unwrap();
            Ok(PhaseShiftPair {
                delta_plus,
                delta_minus,
                k,
            })
        }
    }
}

/// Eigenphases along an increasing momentum grid, unwrapped for continuity.
pub fn phase_shift_sweep(system: &System, ks: &[f64]) -> Result<Vec<PhaseShiftPair>> {
    let mut out = Vec::with_capacity(ks.len());
    let mut prev: Option<PhaseShiftPair> = None;
    for &k in ks {
        let amp = system.amplitudes(k)?;
        let s = SMatrix2x2::from_amplitudes(&amp);
        let pair = phase_shifts(&s, k, prev.as_ref())?;
        out.push(pair);
        prev = Some(pair);
    }
    Ok(out)
}

/// Prefactor convention for the spectral density shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityConvention {
    /// 1/(2 pi), the scattering-section convention. Default.
    HalfLine,
    /// 1/(4 pi), the vacuum-energy section convention.
    FullLine,
}

pub const DEFAULT_DERIVATIVE_STEP: f64 = 1e-5;

fn wrap_to_pm_pi(x: f64) -> f64 {
    let mut y = x % (2.0 * PI);
    if y > PI {
        y -= 2.0 * PI;
    } else if y < -PI {
        y += 2.0 * PI;
    }
    y
}

/// d(delta_+ + delta_-)/dk by central differences.
///
/// The eigenphase sum satisfies `exp(2i (delta_+ + delta_-)) = det S`, so
/// the derivative is branch-assignment free: only the winding of
/// `arg det S` between the two stencil points matters.
pub fn phase_shift_sum_derivative(system: &System, k: f64, step: f64) -> Result<f64> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(Error::InvalidArgument(format!("bad step {step}")));
    }
    if k <= step {
        return Err(Error::InvalidArgument(format!(
            "momentum {k} too close to 0 for step {step}"
        )));
    }
    let det = |k: f64| -> Result<Complex64> {
        let amp = system.amplitudes(k)?;
        Ok(SMatrix2x2::from_amplitudes(&amp).det())
    };
    let theta_lo = det(k - step)?.arg();
    let theta_hi = det(k + step)?.arg();
    let dtheta = wrap_to_pm_pi(theta_hi - theta_lo);
    // theta = 2 (delta_+ + delta_-)
    Ok(dtheta / (2.0 * 2.0 * step))
}

/// Spectral density measured relative to the free problem,
/// `pref * d(delta_+ + delta_-)/dk`.
pub fn spectral_density_shift(
    system: &System,
    k: f64,
    convention: DensityConvention,
    step: f64,
) -> Result<f64> {
    let pref = match convention {
        DensityConvention::HalfLine => 1.0 / (2.0 * PI),
        DensityConvention::FullLine => 1.0 / (4.0 * PI),
    };
    Ok(pref * phase_shift_sum_derivative(system, k, step)?)
}
