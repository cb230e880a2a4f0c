//! Independent numeric cross-check: direct RK4 integration of the
//! Schrodinger equation with exact delta-wall jump conditions, plane-wave
//! matching for scattering data and Wronskian shooting for bound states.
//!
//! Nothing here reuses the closed-form amplitudes; agreement between the
//! two routes is the end-to-end correctness argument for both.

use num_complex::Complex64;

use crate::double_delta::DeltaPairParams;
use crate::error::{Error, Result};
use crate::kink::KinkDeltaParams;
use crate::scattering::Amplitudes;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Smooth background underneath the delta walls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SmoothTerm {
    /// Free space.
    None,
    /// `1 - theta(a - |x|) 2 sech^2 x`: the well is cut off at the walls
    /// and the constant mass term extends outside.
    TruncatedPt { a: f64 },
    /// `1 - 2 sech^2 x` on the whole line (reflectionless reference).
    FullLinePt,
}

impl SmoothTerm {
    /// Potential value at x (delta terms excluded).
    fn at(&self, x: f64) -> f64 {
        match *self {
            SmoothTerm::None => 0.0,
            SmoothTerm::TruncatedPt { a } => {
                if x.abs() < a {
                    let s = 1.0 / x.cosh();
                    1.0 - 2.0 * s * s
                } else {
                    1.0
                }
            }
            SmoothTerm::FullLinePt => {
                let s = 1.0 / x.cosh();
                1.0 - 2.0 * s * s
            }
        }
    }

    /// Asymptotic value as |x| -> infinity.
    fn at_infinity(&self) -> f64 {
        match self {
            SmoothTerm::None => 0.0,
            SmoothTerm::TruncatedPt { .. } | SmoothTerm::FullLinePt => 1.0,
        }
    }
}

/// A potential built from point walls plus a smooth term, together with
/// the numeric box size and integration step.
#[derive(Debug, Clone)]
pub struct PotentialSpec {
    /// (position, strength) of each delta wall.
    pub deltas: Vec<(f64, f64)>,
    pub smooth: SmoothTerm,
    /// Half-width of the integration box; the potential must be
    /// asymptotic (constant) beyond it.
    pub x_max: f64,
    /// RK4 step.
    pub step: f64,
}

impl PotentialSpec {
    pub fn new(deltas: Vec<(f64, f64)>, smooth: SmoothTerm, x_max: f64, step: f64) -> Result<Self> {
        if !(step > 0.0 && step <= 1e-2) {
            return Err(Error::InvalidArgument(format!(
                "step must lie in (0, 1e-2], got {step}"
            )));
        }
        if !(x_max > 0.0 && x_max.is_finite()) {
            return Err(Error::InvalidArgument(format!("bad box size {x_max}")));
        }
        for &(pos, g) in &deltas {
            if !(pos.is_finite() && g.is_finite()) {
                return Err(Error::InvalidArgument("non-finite delta wall".into()));
            }
            if pos.abs() >= x_max {
                return Err(Error::InconsistentInput(format!(
                    "delta wall at {pos} outside the box |x| < {x_max}"
                )));
            }
        }
        if let SmoothTerm::TruncatedPt { a } = smooth {
            if !(a > 0.0 && a < x_max) {
                return Err(Error::InconsistentInput(format!(
                    "truncation radius {a} incompatible with box {x_max}"
                )));
            }
        }
        Ok(Self {
            deltas,
            smooth,
            x_max,
            step,
        })
    }

    pub fn two_delta(params: &DeltaPairParams) -> Self {
        Self::new(
            vec![(-params.a, params.alpha), (params.a, params.beta)],
            SmoothTerm::None,
            params.a + 12.0,
            1e-3,
        )
        .expect("validated params produce a valid spec")
    }

    pub fn kink_delta(params: &KinkDeltaParams) -> Self {
        Self::new(
            vec![(-params.a, params.alpha), (params.a, params.beta)],
            SmoothTerm::TruncatedPt { a: params.a },
            params.a + 12.0,
            1e-3,
        )
        .expect("validated params produce a valid spec")
    }
}

/// One RK4 sweep of `psi'' = (u(x) - E) psi` from x0 to x1 (either
/// direction); `u` must be smooth on the segment, delta jumps and
/// truncation edges are the caller's job.
fn rk4_segment(
    u: &dyn Fn(f64) -> f64,
    energy: f64,
    x0: f64,
    x1: f64,
    step: f64,
    mut psi: Complex64,
    mut dpsi: Complex64,
) -> (Complex64, Complex64) {
    let span = x1 - x0;
    if span == 0.0 {
        return (psi, dpsi);
    }
    let n = (span.abs() / step).ceil().max(1.0) as usize;
    let h = span / n as f64;
    let f = |x: f64, y: Complex64| (u(x) - energy) * y;
    let mut x = x0;
    for _ in 0..n {
        let k1p = dpsi;
        let k1d = f(x, psi);
        let k2p = dpsi + 0.5 * h * k1d;
        let k2d = f(x + 0.5 * h, psi + 0.5 * h * k1p);
        let k3p = dpsi + 0.5 * h * k2d;
        let k3d = f(x + 0.5 * h, psi + 0.5 * h * k2p);
        let k4p = dpsi + h * k3d;
        let k4d = f(x + h, psi + h * k3p);
        psi += h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
        dpsi += h / 6.0 * (k1d + 2.0 * k2d + 2.0 * k3d + k4d);
        x += h;
    }
    (psi, dpsi)
}

/// Integrate from `from` to `to`, applying the exact matching condition
/// `psi'(x_d^+) - psi'(x_d^-) = g psi(x_d)` at every wall crossed.
fn propagate(
    spec: &PotentialSpec,
    energy: f64,
    from: f64,
    to: f64,
    mut psi: Complex64,
    mut dpsi: Complex64,
) -> (Complex64, Complex64) {
    let forward = to > from;
    // breakpoints: delta walls (with a derivative jump) and the truncation
    // edges of the smooth term (no jump, but the potential branch changes)
    let mut breaks: Vec<(f64, f64)> = spec.deltas.clone();
    if let SmoothTerm::TruncatedPt { a } = spec.smooth {
        breaks.push((-a, 0.0));
        breaks.push((a, 0.0));
    }
    let mut breaks: Vec<(f64, f64)> = breaks
        .into_iter()
        .filter(|&(p, _)| if forward { p > from && p < to } else { p < from && p > to })
        .collect();
    breaks.sort_by(|u, v| u.0.partial_cmp(&v.0).unwrap());
    if !forward {
        breaks.reverse();
    }
    // each segment lies in a single smooth region; sample it at the midpoint
    let branch = |x0: f64, x1: f64| -> Box<dyn Fn(f64) -> f64> {
        let mid = 0.5 * (x0 + x1);
        let well = |x: f64| {
            let s = 1.0 / x.cosh();
            1.0 - 2.0 * s * s
        };
        match spec.smooth {
            SmoothTerm::None => Box::new(|_| 0.0),
            SmoothTerm::FullLinePt => Box::new(well),
            SmoothTerm::TruncatedPt { a } => {
                if mid.abs() < a {
                    Box::new(well)
                } else {
                    Box::new(|_| 1.0)
                }
            }
        }
    };
    let mut x = from;
    for (pos, g) in breaks {
        let (p, d) = rk4_segment(branch(x, pos).as_ref(), energy, x, pos, spec.step, psi, dpsi);
        psi = p;
        // crossing left-to-right adds g psi to psi'; right-to-left removes it
        dpsi = if forward { d + g * psi } else { d - g * psi };
        x = pos;
    }
    let (p, d) = rk4_segment(branch(x, to).as_ref(), energy, x, to, spec.step, psi, dpsi);
    (p, d)
}

/// Split `psi` at `x` into coefficients of `e^{ikx}` and `e^{-ikx}`.
fn plane_wave_split(k: f64, x: f64, psi: Complex64, dpsi: Complex64) -> (Complex64, Complex64) {
    let ik = I * k;
    let right = 0.5 * (psi + dpsi / ik) * (-ik * x).exp();
    let left = 0.5 * (psi - dpsi / ik) * (ik * x).exp();
    (right, left)
}

/// All eight scattering coefficients by direct integration, in the same
/// normalization as the closed forms (unit incident amplitude).
pub fn solve_scattering_numeric(spec: &PotentialSpec, k: f64) -> Result<Amplitudes> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "momentum must be positive real, got {k}"
        )));
    }
    let energy = k * k + spec.smooth.at_infinity();
    let xm = spec.x_max;

    // interior coefficients read off at the origin in the zone basis
    let interior = |psi: Complex64, dpsi: Complex64| -> (Complex64, Complex64) {
        match spec.smooth {
            SmoothTerm::None => plane_wave_split(k, 0.0, psi, dpsi),
            SmoothTerm::TruncatedPt { .. } | SmoothTerm::FullLinePt => {
                // basis f_{+k}, f_{-k} with f_{+-k}(0) = -+ik,
                // f_{+-k}'(0) = k^2 + 1
                let kc = Complex64::new(k, 0.0);
                let sum = dpsi / (kc * kc + 1.0);
                let diff = I * psi / kc;
                (0.5 * (sum + diff), 0.5 * (sum - diff))
            }
        }
    };

    // incidence from the left: pure transmitted wave on the right
    let psi0 = (I * k * xm).exp();
    let (psi_mid, dpsi_mid) = propagate(spec, energy, xm, 0.0, psi0, I * k * psi0);
    let (psi_in, dpsi_in) = propagate(spec, energy, 0.0, -xm, psi_mid, dpsi_mid);
    let (a_inc, b_refl) = plane_wave_split(k, -xm, psi_in, dpsi_in);
    if a_inc.norm() < 1e-12 {
        return Err(Error::NumericDegeneracy(
            "vanishing incident amplitude in left-incidence matching".into(),
        ));
    }
    let sigma_r = a_inc.inv();
    let rho_r = b_refl / a_inc;
    let (ar0, br0) = interior(psi_mid, dpsi_mid);
    let (a_r, b_r) = (ar0 / a_inc, br0 / a_inc);

    // incidence from the right: pure transmitted wave on the left
    let psi0 = (I * k * xm).exp(); // e^{-ik(-xm)}
    let (psi_mid, dpsi_mid) = propagate(spec, energy, -xm, 0.0, psi0, -I * k * psi0);
    let (psi_out, dpsi_out) = propagate(spec, energy, 0.0, xm, psi_mid, dpsi_mid);
    let (b_refl, a_inc) = plane_wave_split(k, xm, psi_out, dpsi_out);
    if a_inc.norm() < 1e-12 {
        return Err(Error::NumericDegeneracy(
            "vanishing incident amplitude in right-incidence matching".into(),
        ));
    }
    let sigma_l = a_inc.inv();
    let rho_l = b_refl / a_inc;
    let (al0, bl0) = interior(psi_mid, dpsi_mid);
    let (a_l, b_l) = (al0 / a_inc, bl0 / a_inc);

    Ok(Amplitudes {
        sigma_r,
        sigma_l,
        rho_r,
        rho_l,
        a_r,
        b_r,
        a_l,
        b_l,
    })
}

/// Mismatch of the two one-sided decaying solutions at the origin,
/// normalized to be scale free. Zeros in kappa are bound states with
/// `E = U(inf) - kappa^2`.
fn shooting_mismatch(spec: &PotentialSpec, kappa: f64) -> f64 {
    let energy = spec.smooth.at_infinity() - kappa * kappa;
    let xm = spec.x_max;
    let one = Complex64::new(1.0, 0.0);
    // decaying like e^{+kappa x} on the left, e^{-kappa x} on the right
    let (pl, dl) = propagate(spec, energy, -xm, 0.0, one, Complex64::new(kappa, 0.0));
    let (pr, dr) = propagate(spec, energy, xm, 0.0, one, Complex64::new(-kappa, 0.0));
    let w = pl.re * dr.re - dl.re * pr.re;
    let scale = (pl.re.abs() + dl.re.abs()) * (pr.re.abs() + dr.re.abs());
    w / scale.max(f64::MIN_POSITIVE)
}

/// Bound-state decay rates in `(kappa_min, kappa_max)` by scanning the
/// shooting mismatch for sign changes and bisecting each bracket.
pub fn solve_bound_states_numeric(
    spec: &PotentialSpec,
    kappa_min: f64,
    kappa_max: f64,
    scan_points: usize,
) -> Result<Vec<f64>> {
    if !(kappa_min > 0.0 && kappa_max > kappa_min) || scan_points < 2 {
        return Err(Error::InvalidArgument(format!(
            "bad scan window ({kappa_min}, {kappa_max}) x {scan_points}"
        )));
    }
    let mut roots = Vec::new();
    let h = (kappa_max - kappa_min) / (scan_points - 1) as f64;
    let mut prev_k = kappa_min;
    let mut prev_w = shooting_mismatch(spec, prev_k);
    for i in 1..scan_points {
        let kappa = kappa_min + i as f64 * h;
        let w = shooting_mismatch(spec, kappa);
        if prev_w == 0.0 {
            roots.push(prev_k);
        } else if prev_w * w < 0.0 {
            let (mut lo, mut hi, mut wlo) = (prev_k, kappa, prev_w);
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                let wm = shooting_mismatch(spec, mid);
                if wm == 0.0 {
                    lo = mid;
                    hi = mid;
                    break;
                }
                if wlo * wm < 0.0 {
                    hi = mid;
                } else {
                    lo = mid;
                    wlo = wm;
                }
            }
            roots.push(0.5 * (lo + hi));
        }
        prev_k = kappa;
        prev_w = w;
    }
    Ok(roots)
}

/// Maximum residual of `-psi'' + U psi = E psi` for a numerically
/// propagated scattering wave, sampled by central differences away from
/// the walls. Diagnostic for the integrator itself.
pub fn ode_residual(spec: &PotentialSpec, k: f64) -> Result<f64> {
    if !(k > 0.0 && k.is_finite()) {
        return Err(Error::InvalidArgument(format!("bad momentum {k}")));
    }
    let energy = k * k + spec.smooth.at_infinity();
    let h = 1e-3;
    let xm = spec.x_max;
    let psi0 = (I * k * xm).exp();
    let mut max_res: f64 = 0.0;
    let mut x = -0.8 * xm;
    while x < 0.8 * xm {
        if spec.deltas.iter().any(|&(p, _)| (x - p).abs() < 3.0 * h) {
            x += 0.05;
            continue;
        }
        let sample = |xx: f64| propagate(spec, energy, xm, xx, psi0, I * k * psi0).0;
        let (fm, f0, fp) = (sample(x - h), sample(x), sample(x + h));
        let second = (fp - 2.0 * f0 + fm) / (h * h);
        let res = (-second + (spec.smooth.at(x) - energy) * f0).norm();
        max_res = max_res.max(res);
        x += 0.05;
    }
    Ok(max_res)
}
