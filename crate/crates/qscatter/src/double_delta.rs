//! Closed-form scattering data for the double Dirac-delta potential
//! `U(x) = alpha * delta(x + a) + beta * delta(x - a)`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scattering::Amplitudes;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Dimensionless couplings and half-separation of the two-delta potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaPairParams {
    pub alpha: f64,
    pub beta: f64,
    pub a: f64,
}

impl DeltaPairParams {
    pub fn new(alpha: f64, beta: f64, a: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite()) {
            return Err(Error::InvalidArgument("couplings must be finite".into()));
        }
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "half-separation must be positive, got {a}"
            )));
        }
        Ok(Self { alpha, beta, a })
    }

    /// Whether both walls have the same strength (parity-even potential).
    pub fn is_symmetric(&self) -> bool {
        self.alpha == self.beta
    }
}

/// Which rescaling convention maps physical to dimensionless parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RescaleMode {
    /// Infrared mass scale Lambda: couplings multiply by Lambda.
    TwoDelta,
    /// Meson mass m of the sine-Gordon model: couplings multiply by m.
    Kink,
}

/// Physical inputs before the rescaling to dimensionless quantities.
#[derive(Debug, Clone, Copy)]
pub struct PhysicalParams {
    pub alpha: f64,
    pub beta: f64,
    pub a: f64,
    pub x: f64,
    pub t: f64,
}

/// Dimensionless parameters and rescaled coordinates.
#[derive(Debug, Clone, Copy)]
pub struct Rescaled {
    pub params: DeltaPairParams,
    pub x: f64,
    pub t: f64,
}

/// Maps physical couplings and coordinates to their dimensionless counterparts.
///
/// Couplings scale up by the mass scale, coordinates and the half-separation
/// scale down, in both conventions.
pub fn nondimensionalize(phys: &PhysicalParams, scale: f64, mode: RescaleMode) -> Result<Rescaled> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "scale must be positive, got {scale}"
        )));
    }
    let _ = mode; // both conventions multiply couplings and divide coordinates
    Ok(Rescaled {
        params: DeltaPairParams::new(phys.alpha * scale, phys.beta * scale, phys.a / scale)?,
        x: phys.x / scale,
        t: phys.t / scale,
    })
}

/// The amplitude denominator
/// `Delta(k) = alpha*beta*(e^{4iak} - 1) + 4k^2 + 2ik(alpha + beta)`,
/// entire in k.
pub fn delta_denominator(params: &DeltaPairParams, k: Complex64) -> Complex64 {
    let e4 = (4.0 * params.a * I * k).exp();
    params.alpha * params.beta * (e4 - 1.0)
        + 4.0 * k * k
        + 2.0 * I * k * (params.alpha + params.beta)
}

/// All eight scattering coefficients at real momentum `k > 0`.
pub fn double_delta_amplitudes(params: &DeltaPairParams, k: f64) -> Result<Amplitudes> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "momentum must be positive real, got {k}"
        )));
    }
    let kc = Complex64::new(k, 0.0);
    let d = delta_denominator(params, kc);
    if d.norm() < 1e-300 {
        return Err(Error::NumericDegeneracy(format!(
            "denominator vanished at real k = {k}"
        )));
    }
    let (alpha, beta, a) = (params.alpha, params.beta, params.a);
    let e2 = (2.0 * a * I * kc).exp();
    let e4 = e2 * e2;
    let em2 = e2.inv();

    let sigma = 4.0 * kc * kc / d;
    let rho_r = -I * em2 * (beta * e4 * (2.0 * kc - I * alpha) + alpha * (2.0 * kc + I * beta)) / d;
    let rho_l = -I * em2 * (alpha * e4 * (2.0 * kc - I * beta) + beta * (2.0 * kc + I * alpha)) / d;
    let a_r = 2.0 * kc * (2.0 * kc + I * beta) / d;
    let b_r = -2.0 * I * kc * beta * e2 / d;
    let a_l = -2.0 * I * kc * alpha * e2 / d;
    let b_l = 2.0 * kc * (2.0 * kc + I * alpha) / d;

    Ok(Amplitudes {
        sigma_r: sigma,
        sigma_l: sigma,
        rho_r,
        rho_l,
        a_r,
        b_r,
        a_l,
        b_l,
    })
}

/// Jost factors of the equal-strength denominator, `Delta = 4 J0 J1`.
#[derive(Debug, Clone, Copy)]
pub struct JostPair {
    pub j0: Complex64,
    pub j1: Complex64,
}

/// `J0 = k + i alpha e^{ika} cos(ka)`, `J1 = k + alpha e^{ika} sin(ka)`,
/// valid for alpha = beta only.
pub fn jost_factors(alpha: f64, a: f64, k: Complex64) -> JostPair {
    let e = (I * k * a).exp();
    let ka = k * a;
    JostPair {
        j0: k + I * alpha * e * ka.cos(),
        j1: k + alpha * e * ka.sin(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn denominator_free_case() {
        let p = DeltaPairParams::new(0.0, 0.0, 1.0).unwrap();
        let d = delta_denominator(&p, c(1.0, 0.0));
        assert!((d - c(4.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn denominator_single_delta() {
        let p = DeltaPairParams::new(2.0, 0.0, 1.0).unwrap();
        let d = delta_denominator(&p, c(1.0, 0.0));
        assert!((d - c(4.0, 4.0)).norm() < 1e-15);
    }

    #[test]
    fn rescaling_examples() {
        let phys = PhysicalParams {
            alpha: 0.5,
            beta: 0.5,
            a: 1.0,
            x: 0.0,
            t: 0.0,
        };
        let r = nondimensionalize(&phys, 1.0, RescaleMode::TwoDelta).unwrap();
        assert_eq!(r.params.alpha, 0.5);
        let r = nondimensionalize(&phys, 2.0, RescaleMode::TwoDelta).unwrap();
        assert_eq!(r.params.alpha, 1.0);
        let r = nondimensionalize(&phys, 3.0, RescaleMode::Kink).unwrap();
        assert_eq!(r.params.alpha, 1.5);
        assert!(nondimensionalize(&phys, -1.0, RescaleMode::TwoDelta).is_err());
        assert!(nondimensionalize(&phys, 0.0, RescaleMode::Kink).is_err());
    }

    #[test]
    fn free_amplitudes_are_trivial() {
        let p = DeltaPairParams::new(0.0, 0.0, 1.7).unwrap();
        let amp = double_delta_amplitudes(&p, 1.0).unwrap();
        assert!((amp.sigma_r - 1.0).norm() < 1e-15);
        assert!(amp.rho_r.norm() < 1e-15);
        assert!(amp.rho_l.norm() < 1e-15);
        assert!((amp.a_r - 1.0).norm() < 1e-15);
        assert!(amp.b_r.norm() < 1e-15);
    }

    #[test]
    fn single_delta_transmission_probability() {
        // |sigma|^2 = k^2 / (k^2 + alpha^2/4) for a single delta of strength alpha
        let p = DeltaPairParams::new(2.0, 0.0, 1.0).unwrap();
        let amp = double_delta_amplitudes(&p, 1.0).unwrap();
        assert!((amp.sigma_r - c(0.5, -0.5)).norm() < 1e-14);
        assert!((amp.sigma_r.norm_sqr() - 0.5).abs() < 1e-14);
    }

    #[test]
    fn momentum_must_be_positive() {
        let p = DeltaPairParams::new(1.0, 1.0, 1.0).unwrap();
        assert!(double_delta_amplitudes(&p, 0.0).is_err());
        assert!(double_delta_amplitudes(&p, -1.0).is_err());
    }

    #[test]
    fn flux_conservation_and_time_reversal() {
        let p = DeltaPairParams::new(2.0, 1.0, 1.0).unwrap();
        for k in [0.3, 1.0, 1.3, 7.0] {
            let amp = double_delta_amplitudes(&p, k).unwrap();
            assert_eq!(amp.sigma_r, amp.sigma_l);
            assert!((amp.sigma_r.norm_sqr() + amp.rho_r.norm_sqr() - 1.0).abs() < 1e-12);
            assert!((amp.sigma_l.norm_sqr() + amp.rho_l.norm_sqr() - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn parity_symmetric_reflections() {
        let p = DeltaPairParams::new(-0.5, -0.5, 2.0).unwrap();
        let amp = double_delta_amplitudes(&p, 0.4).unwrap();
        assert!((amp.rho_r - amp.rho_l).norm() < 1e-12);
    }

    #[test]
    fn jost_identity_on_random_complex_momenta() {
        let mut state = 0x9e3779b97f4a7c15u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 * 4.0 - 2.0
        };
        let (alpha, a) = (-2.0, 1.0);
        let p = DeltaPairParams::new(alpha, alpha, a).unwrap();
        for _ in 0..100 {
            let k = c(next(), next());
            let JostPair { j0, j1 } = jost_factors(alpha, a, k);
            let d = delta_denominator(&p, k);
            let rel = (4.0 * j0 * j1 - d).norm() / d.norm().max(1.0);
            assert!(rel < 1e-12, "k = {k}, rel = {rel}");
        }
    }

    #[test]
    fn jost_free_case_is_k() {
        let JostPair { j0, j1 } = jost_factors(0.0, 1.0, c(0.7, 0.3));
        assert_eq!(j0, c(0.7, 0.3));
        assert_eq!(j1, c(0.7, 0.3));
    }

    #[test]
    fn high_energy_transparency() {
        for (alpha, beta) in [(2.0, 2.0), (-2.0, 1.5), (0.5, -0.5)] {
            let p = DeltaPairParams::new(alpha, beta, 1.0).unwrap();
            let amp = double_delta_amplitudes(&p, 100.0).unwrap();
            assert!(amp.rho_r.norm() < 0.05);
            assert!((amp.sigma_r.norm() - 1.0).abs() < 0.05);
        }
    }
}
