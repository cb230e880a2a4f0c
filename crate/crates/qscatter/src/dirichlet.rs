//! Spectra and wave functions in the impenetrable-wall limit
//! alpha, beta -> +infinity, where modes vanish at x = +/- a.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSystem {
    TwoDelta,
    KinkDelta,
}

/// An allowed momentum in the Dirichlet limit.
#[derive(Debug, Clone, Copy)]
pub struct DirichletMode {
    /// 1-based index in the merged, ascending spectrum.
    pub n: usize,
    pub k: f64,
    pub parity: Parity,
    pub system: SpectrumSystem,
}

/// Exact two-delta Dirichlet momenta `k_n = pi n / (2a)`.
///
/// Modes with even n are the sine (odd-parity) states, odd n the cosine
/// (even-parity) states.
pub fn delta_dirichlet_momenta(a: f64, n_max: usize) -> Result<Vec<DirichletMode>> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::InvalidArgument(format!("need a > 0, got {a}")));
    }
    if n_max == 0 {
        return Err(Error::InvalidArgument("n_max must be at least 1".into()));
    }
    Ok((1..=n_max)
        .map(|n| DirichletMode {
            n,
            k: PI * n as f64 / (2.0 * a),
            parity: if n % 2 == 0 { Parity::Odd } else { Parity::Even },
            system: SpectrumSystem::TwoDelta,
        })
        .collect())
}

/// Wave function of a two-delta Dirichlet mode on a grid:
/// `sin(k x)` for even n, `cos(k x)` for odd n.
pub fn delta_mode_wavefunction(mode: &DirichletMode, grid: &[f64]) -> Vec<f64> {
    grid.iter()
        .map(|&x| match mode.parity {
            Parity::Odd => (mode.k * x).sin(),
            Parity::Even => (mode.k * x).cos(),
        })
        .collect()
}

/// Odd-channel spectral function `h_odd(k) = e^{2iak}(k + it) - (k - it)`,
/// with t = tanh a.
pub fn h_odd(k: Complex64, a: f64) -> Complex64 {
    let t = a.tanh();
    (2.0 * a * I * k).exp() * (k + I * t) - (k - I * t)
}

/// Even-channel spectral function `h_even(k) = e^{2iak}(k + it) + (k - it)`.
pub fn h_even(k: Complex64, a: f64) -> Complex64 {
    let t = a.tanh();
    (2.0 * a * I * k).exp() * (k + I * t) + (k - I * t)
}

// Real reductions on the real momentum axis: h_odd = 2i e^{iak} g_odd and
// h_even = 2 e^{iak} g_even, so the real functions below share the roots.
fn g_odd(k: f64, a: f64, t: f64) -> f64 {
    k * (a * k).sin() + t * (a * k).cos()
}

fn g_even(k: f64, a: f64, t: f64) -> f64 {
    k * (a * k).cos() - t * (a * k).sin()
}

/// Separation threshold between the short- and long-distance regimes,
/// the root of `a tanh(a) = 1`.
pub fn critical_separation() -> f64 {
    let f = |a: f64| a * a.tanh() - 1.0;
    let (mut lo, mut hi) = (0.5, 2.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if f(mid) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Imaginary even-channel root of the kink Dirichlet problem, the
/// ground state surviving between impenetrable walls.
#[derive(Debug, Clone, Copy)]
pub struct GroundStateRoot {
    pub kappa_b: f64,
    pub a: f64,
    /// omega = sqrt(1 - kappa_b^2)
    pub omega: f64,
}

/// Searches `h_even(i kappa) = 0` on kappa in (0, 1].
///
/// Returns `None` for a <= a_c, where the imaginary root state disappears.
pub fn kink_ground_state(a: f64) -> Result<Option<GroundStateRoot>> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::InvalidArgument(format!("need a > 0, got {a}")));
    }
    // Threshold condition: d/dkappa of -i h_even(i kappa) at 0 is 2 - 2 a tanh a.
    if a * a.tanh() <= 1.0 {
        return Ok(None);
    }
    let t = a.tanh();
    // -i h_even(i kappa), real valued
    // (kappa - t) first: at large a the exponential term underflows below
    // the rounding granularity of 1.0 and would be absorbed otherwise
    let p = |kappa: f64| (kappa - t) + (-2.0 * a * kappa).exp() * (kappa + t);
    let (mut lo, mut hi) = (1e-8, 1.0);
    if p(lo) >= 0.0 || p(hi) <= 0.0 {
        return Err(Error::RootIsolation(format!(
            "even imaginary root not bracketed on (1e-8, 1] at a = {a}"
        )));
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if p(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let kappa_b = 0.5 * (lo + hi);
    Ok(Some(GroundStateRoot {
        kappa_b,
        a,
        omega: (1.0 - kappa_b * kappa_b).max(0.0).sqrt(),
    }))
}

fn bisect_then_newton(f: &dyn Fn(f64) -> f64, df: &dyn Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    for _ in 0..80 {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if f(lo) * f(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let mut x = 0.5 * (lo + hi);
    for _ in 0..8 {
        let d = df(x);
        if d == 0.0 {
            break;
        }
        let step = f(x) / d;
        if !step.is_finite() || step.abs() > (hi - lo).abs() + 1e-6 {
            break;
        }
        x -= step;
    }
    x
}

/// The `count` smallest positive real Dirichlet momenta of the kink
/// system at separation `a > a_c`, merged across parities.
pub fn kink_dirichlet_spectrum(a: f64, count: usize) -> Result<Vec<DirichletMode>> {
    let a_c = critical_separation();
    if a <= a_c {
        return Err(Error::OutOfRegime { a, a_c });
    }
    if count == 0 {
        return Err(Error::InvalidArgument("count must be at least 1".into()));
    }
    let t = a.tanh();
    let step = (0.01f64).min(PI / (20.0 * a));
    let mut roots: Vec<(f64, Parity)> = Vec::new();
    let mut k = 1e-6;
    // Roots interlace with spacing ~ pi/(2a); scan until enough found.
    let mut guard = 0usize;
    while roots.len() < count {
        guard += 1;
        if guard > 20_000_000 {
            return Err(Error::RootIsolation(format!(
                "scan exhausted after {} roots of {count} requested (a = {a}, step = {step})",
                roots.len()
            )));
        }
        let k2 = k + step;
        for (parity, g) in [
            (Parity::Odd, &g_odd as &dyn Fn(f64, f64, f64) -> f64),
            (Parity::Even, &g_even as &dyn Fn(f64, f64, f64) -> f64),
        ] {
            if g(k, a, t) * g(k2, a, t) < 0.0 {
                let f = |x: f64| g(x, a, t);
                let df = |x: f64| (g(x + 1e-7, a, t) - g(x - 1e-7, a, t)) / 2e-7;
                let root = bisect_then_newton(&f, &df, k, k2);
                let h = match parity {
                    Parity::Odd => h_odd(Complex64::new(root, 0.0), a),
                    Parity::Even => h_even(Complex64::new(root, 0.0), a),
                };
                if h.norm() > 1e-10 {
                    return Err(Error::RootIsolation(format!(
                        "refinement left |h| = {:.3e} at k = {root} (bracket [{k}, {k2}])",
                        h.norm()
                    )));
                }
                roots.push((root, parity));
            }
        }
        k = k2;
    }
    roots.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
    roots.truncate(count);
    Ok(roots
        .into_iter()
        .enumerate()
        .map(|(i, (k, parity))| DirichletMode {
            n: i + 1,
            k,
            parity,
            system: SpectrumSystem::KinkDelta,
        })
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Normalization {
    Unnormalized,
    L2,
}

/// A mode sampled on a grid.
#[derive(Debug, Clone)]
pub struct SampledWaveFunction {
    pub grid: Vec<f64>,
    pub values: Vec<Complex64>,
    pub normalization: Normalization,
}

/// Kink-mode shape `k sin(kx) + tanh(x) cos(kx)` (odd) or
/// `k cos(kx) - tanh(x) sin(kx)` (even), without the divergent
/// closed-form prefactor.
pub fn kink_mode_shape(k: Complex64, parity: Parity, x: f64) -> Complex64 {
    let kx = k * x;
    match parity {
        Parity::Odd => k * kx.sin() + x.tanh() * kx.cos(),
        Parity::Even => k * kx.cos() - x.tanh() * kx.sin(),
    }
}

/// Samples a kink Dirichlet mode on a grid, optionally L2-normalized by
/// the trapezoidal rule.
pub fn kink_mode_wavefunction(
    k: Complex64,
    parity: Parity,
    grid: &[f64],
    normalization: Normalization,
) -> SampledWaveFunction {
    let mut values: Vec<Complex64> = grid
        .iter()
        .map(|&x| kink_mode_shape(k, parity, x))
        .collect();
    if normalization == Normalization::L2 && grid.len() > 1 {
        let mut norm_sq = 0.0;
        for i in 0..grid.len() - 1 {
            let h = grid[i + 1] - grid[i];
            norm_sq += 0.5 * h * (values[i].norm_sqr() + values[i + 1].norm_sqr());
        }
        if norm_sq > 1e-280 {
            let scale = 1.0 / norm_sq.sqrt();
            for v in &mut values {
                *v *= scale;
            }
        }
    }
    SampledWaveFunction {
        grid: grid.to_vec(),
        values,
        normalization,
    }
}

pub fn uniform_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect()
}
