//! Closed-form scattering data for the double delta plus truncated
//! Poschl-Teller potential
//! `U(x) = alpha delta(x+a) + beta delta(x-a) + 1 - theta(a-|x|) 2 sech^2 x`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scattering::Amplitudes;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Couplings and half-separation, with `sech(a)` and `tanh(a)` cached.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinkDeltaParams {
    pub alpha: f64,
    pub beta: f64,
    pub a: f64,
    /// sech(a)
    pub s: f64,
    /// tanh(a)
    pub t: f64,
}

impl KinkDeltaParams {
    pub fn new(alpha: f64, beta: f64, a: f64) -> Result<Self> {
        if !(alpha.is_finite() && beta.is_finite()) {
            return Err(Error::InvalidArgument("couplings must be finite".into()));
        }
        if !(a > 0.0 && a.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "half-separation must be positive, got {a}"
            )));
        }
        Ok(Self {
            alpha,
            beta,
            a,
            s: 1.0 / a.cosh(),
            t: a.tanh(),
        })
    }

    pub fn is_symmetric(&self) -> bool {
        self.alpha == self.beta
    }
}

/// Zone-I basis mode `f_k(x) = e^{ikx} (tanh x - ik)`, a plane wave times
/// the first-order Jacobi polynomial in tanh x.
pub fn pt_mode(k: Complex64, x: f64) -> Complex64 {
    (I * k * x).exp() * (x.tanh() - I * k)
}

/// Spatial derivative of `f_k`.
pub fn pt_mode_derivative(k: Complex64, x: f64) -> Complex64 {
    let sech2 = {
        let c = x.cosh();
        1.0 / (c * c)
    };
    (I * k * x).exp() * (I * k * (x.tanh() - I * k) + sech2)
}

/// The amplitude denominator of the kink system,
/// entire in k.
pub fn kink_denominator(params: &KinkDeltaParams, k: Complex64) -> Complex64 {
    let (alpha, beta, a) = (params.alpha, params.beta, params.a);
    let (s2, t) = (params.s * params.s, params.t);
    let x1 = s2 + (k - I * t) * (2.0 * k + I * alpha);
    let x2 = s2 + (k - I * t) * (2.0 * k + I * beta);
    let y1 = s2 + alpha * (t - I * k);
    let y2 = s2 + beta * (t - I * k);
    x1 * x2 - (4.0 * a * I * k).exp() * y1 * y2
}

/// All eight scattering coefficients at real `k > 0` (asymptotic momentum
/// outside the walls, where the potential equals the constant 1).
pub fn kink_amplitudes(params: &KinkDeltaParams, k: f64) -> Result<Amplitudes> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "momentum must be positive real, got {k}"
        )));
    }
    let kc = Complex64::new(k, 0.0);
    let d = kink_denominator(params, kc);
    if d.norm() < 1e-300 {
        return Err(Error::NumericDegeneracy(format!(
            "denominator vanished at real k = {k}"
        )));
    }
    let (alpha, beta, a) = (params.alpha, params.beta, params.a);
    let (s2, t) = (params.s * params.s, params.t);
    let e2 = (2.0 * a * I * kc).exp();
    let em2 = e2.inv();

    let sigma = 4.0 * (kc.powu(4) + kc * kc) / d;
    // Reflection and interior coefficients fixed by continuity at the walls
    // and validated against direct ODE integration; the interior basis is
    // (f_k, f_{-k}) and parity ties the two incidence directions together:
    // rho_l = rho_r|_{alpha <-> beta}, A_l = -B_r|_{alpha <-> beta}.
    // Transparent-limit check: a -> infinity with both couplings zero gives
    // interior content i/(k - i) f_k, the pure transmitted well mode.
    let rho_r = (e2 * (s2 + beta * (t - I * kc)) * (s2 + (kc + I * t) * (2.0 * kc - I * alpha))
        - em2 * (s2 + (kc - I * t) * (2.0 * kc + I * beta)) * (s2 + alpha * (t + I * kc)))
        / d;
    let rho_l = (e2 * (s2 + alpha * (t - I * kc)) * (s2 + (kc + I * t) * (2.0 * kc - I * beta))
        - em2 * (s2 + (kc - I * t) * (2.0 * kc + I * alpha)) * (s2 + beta * (t + I * kc)))
        / d;
    let a_r = 2.0 * I * kc * (s2 + (kc - I * t) * (2.0 * kc + I * beta)) / d;
    let b_r = -2.0 * kc * e2 * (beta * (kc + I * t) + I * s2) / d;
    let a_l = 2.0 * kc * e2 * (alpha * (kc + I * t) + I * s2) / d;
    let b_l = -2.0 * I * kc * (s2 + (kc - I * t) * (2.0 * kc + I * alpha)) / d;

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

/// Jost factors of the equal-strength kink denominator,
/// normalized so that `Delta^K = 4 J0 J1`.
#[derive(Debug, Clone, Copy)]
pub struct KinkJostPair {
    pub j0: Complex64,
    pub j1: Complex64,
}

pub fn kink_jost_factors(alpha: f64, a: f64, k: Complex64) -> KinkJostPair {
    let s = 1.0 / a.cosh();
    let t = a.tanh();
    let s2 = s * s;
    let common = s2 + (2.0 * k + I * alpha) * (k - I * t);
    let exch = (2.0 * a * I * k).exp() * (s2 + alpha * (t - I * k));
    KinkJostPair {
        j0: 0.5 * (common + exch),
        j1: 0.5 * (common - exch),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn cached_hyperbolics_are_consistent() {
        let p = KinkDeltaParams::new(1.0, 2.0, 4.0).unwrap();
        assert!((p.s * p.s + p.t * p.t - 1.0).abs() < 1e-15);
    }

    #[test]
    fn pt_mode_at_zero_momentum_is_tanh() {
        for x in [-2.0, -0.3, 0.0, 1.7] {
            let f = pt_mode(c(0.0, 0.0), x);
            assert!((f - x.tanh()).norm() < 1e-15);
        }
    }

    #[test]
    fn pt_mode_at_k_eq_i_is_sech() {
        // e^{-x} (tanh x + 1) = sech x
        for x in [-3.0, -0.4, 0.0, 0.9, 2.5] {
            let f = pt_mode(c(0.0, 1.0), x);
            assert!((f - 1.0 / x.cosh()).norm() < 1e-14, "x = {x}");
        }
    }

    #[test]
    fn pt_mode_ode_residual() {
        // -f'' - 2 sech^2 x f = k^2 f, finite differences at step 1e-3
        let k = c(1.3, 0.0);
        let h = 1e-3;
        let mut max_res: f64 = 0.0;
        let n = ((10.0 / h) as usize) + 1;
        for i in 1..n - 1 {
            let x = -5.0 + i as f64 * h;
            let fm = pt_mode(k, x - h);
            let f0 = pt_mode(k, x);
            let fp = pt_mode(k, x + h);
            let second = (fp - 2.0 * f0 + fm) / (h * h);
            let sech2 = 1.0 / (x.cosh() * x.cosh());
            let res = (-second - 2.0 * sech2 * f0 - k * k * f0).norm();
            max_res = max_res.max(res);
        }
        // limited by the O(h^2) truncation of the central difference
        assert!(max_res < 1e-5, "max residual {max_res}");
    }

    #[test]
    fn jost_identity_on_random_complex_momenta() {
        let mut state = 0x853c49e6748fea9bu64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (state >> 11) as f64 / (1u64 << 53) as f64 * 4.0 - 2.0
        };
        let (alpha, a) = (-2.0, 1.0);
        let p = KinkDeltaParams::new(alpha, alpha, a).unwrap();
        for _ in 0..100 {
            let k = c(next(), next());
            let KinkJostPair { j0, j1 } = kink_jost_factors(alpha, a, k);
            let d = kink_denominator(&p, k);
            let rel = (4.0 * j0 * j1 - d).norm() / d.norm().max(1.0);
            assert!(rel < 1e-12, "k = {k}, rel = {rel}");
        }
    }

    #[test]
    fn jost_difference_at_zero_coupling() {
        // J0 - J1 = e^{2iak} sech^2(a) when alpha = 0
        let a = 1.3;
        let k = c(0.4, -0.7);
        let KinkJostPair { j0, j1 } = kink_jost_factors(0.0, a, k);
        let s2 = 1.0 / (a.cosh() * a.cosh());
        let expected = (2.0 * a * I * k).exp() * s2;
        assert!((j0 - j1 - expected).norm() < 1e-14);
    }

    #[test]
    fn transparent_limit_large_window() {
        let p = KinkDeltaParams::new(0.0, 0.0, 10.0).unwrap();
        let amp = kink_amplitudes(&p, 1.0).unwrap();
        assert!(amp.rho_r.norm() < 1e-3);
        assert!((amp.sigma_r.norm() - 1.0).abs() < 1e-3);
    }

    #[test]
    fn flux_conservation_and_symmetries() {
        let p = KinkDeltaParams::new(1.0, 2.0, 2.0).unwrap();
        for k in [0.3, 1.3, 4.0] {
            let amp = kink_amplitudes(&p, k).unwrap();
            assert_eq!(amp.sigma_r, amp.sigma_l);
            assert!(
                (amp.sigma_r.norm_sqr() + amp.rho_r.norm_sqr() - 1.0).abs() < 1e-10,
                "flux defect at k = {k}"
            );
        }
        let sym = KinkDeltaParams::new(-0.7, -0.7, 1.5).unwrap();
        let amp = kink_amplitudes(&sym, 0.8).unwrap();
        assert!((amp.rho_r - amp.rho_l).norm() < 1e-12);
    }

    #[test]
    fn momentum_must_be_positive() {
        let p = KinkDeltaParams::new(1.0, 1.0, 1.0).unwrap();
        assert!(kink_amplitudes(&p, 0.0).is_err());
        assert!(kink_amplitudes(&p, -2.0).is_err());
    }
}
