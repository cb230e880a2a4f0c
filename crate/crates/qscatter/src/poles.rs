//! Zeros of the amplitude denominators in the complex momentum plane:
//! bound states (k = i kappa), antibound states (k = -i kappa) and
//! resonance mirror pairs (k = +/- gamma - i kappa).

use num_complex::Complex64;

use crate::double_delta;
use crate::error::{Error, Result};
use crate::kink;
use crate::system::System;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Axis-classification tolerance on |Re k|.
const AXIS_TOL: f64 = 1e-9;
/// Roots this close to the origin are the structural k = 0 zero of the
/// denominators (Delta(0) = 0 for every coupling) and are discarded.
const ORIGIN_GUARD: f64 = 1e-7;
/// Deduplication distance.
const DEDUP_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PoleKind {
    Bound,
    Antibound,
    Resonance,
}

/// Which Jost channel a root was located in (equal strengths only).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Channel {
    J0,
    J1,
    Full,
}

#[derive(Debug, Clone, Copy)]
pub struct Pole {
    pub k: Complex64,
    pub kind: PoleKind,
    /// |denominator| at the root.
    pub residual: f64,
    pub channel: Channel,
    /// True when the transmission-amplitude numerator also vanishes here,
    /// so the denominator zero cancels and sigma has no pole. The kink
    /// denominator carries such a zero at k = +/- i for every coupling.
    pub removable: bool,
}

/// Rectangular search window in the complex k plane.
#[derive(Debug, Clone, Copy)]
pub struct SearchRegion {
    pub re_min: f64,
    pub re_max: f64,
    pub im_min: f64,
    pub im_max: f64,
    pub max_depth: usize,
    /// Initial Gauss-Legendre node count per edge.
    pub nodes: usize,
}

impl SearchRegion {
    pub fn new(re_min: f64, re_max: f64, im_min: f64, im_max: f64) -> Result<Self> {
        if !(re_min < re_max && im_min < im_max)
            || ![re_min, re_max, im_min, im_max].iter().all(|v| v.is_finite())
        {
            return Err(Error::InvalidArgument(format!(
                "degenerate region [{re_min}, {re_max}] x [{im_min}, {im_max}]"
            )));
        }
        Ok(Self {
            re_min,
            re_max,
            im_min,
            im_max,
            max_depth: 40,
            nodes: 64,
        })
    }

    /// Default window for reproducing the pole-taxonomy figures.
    ///
    /// The lower edge sits above Im k = -1 so that the figure counts pick
    /// up the near-threshold virtual states and the first resonance pair
    /// but not the deep k = -i structural zero of the kink denominator.
    pub fn figure_default() -> Self {
        Self::new(-2.2, 2.2, -0.9, 2.2).unwrap()
    }

    fn width(&self) -> f64 {
        self.re_max - self.re_min
    }

    fn height(&self) -> f64 {
        self.im_max - self.im_min
    }

    fn diameter(&self) -> f64 {
        self.width().hypot(self.height())
    }

    fn contains(&self, k: Complex64, margin: f64) -> bool {
        k.re >= self.re_min - margin
            && k.re <= self.re_max + margin
            && k.im >= self.im_min - margin
            && k.im <= self.im_max + margin
    }
}

/// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on
/// the Legendre recurrence.
fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = (n + 1) / 2;
    for i in 0..m {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        loop {
            let (mut p0, mut p1) = (1.0f64, x);
            for j in 2..=n {
                let p2 = ((2 * j - 1) as f64 * x * p1 - (j - 1) as f64 * p0) / j as f64;
                p0 = p1;
                p1 = p2;
            }
            let dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let dx = p1 / dp;
            x -= dx;
            if dx.abs() < 1e-15 {
                let w = 2.0 / ((1.0 - x * x) * dp * dp);
                nodes[i] = -x;
                nodes[n - 1 - i] = x;
                weights[i] = w;
                weights[n - 1 - i] = w;
                break;
            }
        }
    }
    (nodes, weights)
}

fn numeric_derivative(f: &dyn Fn(Complex64) -> Complex64, z: Complex64) -> Complex64 {
    let h = 1e-6 * (1.0 + z.norm());
    (f(z + h) - f(z - h)) / (2.0 * h)
}

/// Zero count inside a rectangle by the argument principle:
/// `(1/2 pi i) \oint f'/f dk` on the boundary, Gauss-Legendre per edge
/// with node doubling until the winding number locks onto an integer.
pub fn count_zeros(f: &dyn Fn(Complex64) -> Complex64, region: &SearchRegion) -> Result<usize> {
    let corners = [
        Complex64::new(region.re_min, region.im_min),
        Complex64::new(region.re_max, region.im_min),
        Complex64::new(region.re_max, region.im_max),
        Complex64::new(region.re_min, region.im_max),
    ];
    let mut n = region.nodes.max(16);
    loop {
        let (nodes, weights) = gauss_legendre(n);
        let mut integral = Complex64::new(0.0, 0.0);
        let mut min_abs = f64::INFINITY;
        for e in 0..4 {
            let (z0, z1) = (corners[e], corners[(e + 1) % 4]);
            let half = 0.5 * (z1 - z0);
            let mid = 0.5 * (z1 + z0);
            for (&x, &w) in nodes.iter().zip(weights.iter()) {
                let z = mid + half * x;
                let fz = f(z);
                min_abs = min_abs.min(fz.norm());
                if fz.norm() == 0.0 {
                    return Err(Error::ContourProximity(format!("zero on contour at {z}")));
                }
                integral += w * half * numeric_derivative(f, z) / fz;
            }
        }
        let winding = (integral / (2.0 * std::f64::consts::PI * I)).re;
        let rounded = winding.round();
        if (winding - rounded).abs() < 0.05 && rounded >= -0.5 {
            if rounded < -0.5 {
                return Err(Error::ContourProximity(format!(
                    "negative winding {winding} (pole inside contour?)"
                )));
            }
            return Ok(rounded.max(0.0) as usize);
        }
        if n >= 1024 {
            return Err(Error::ContourProximity(format!(
                "winding {winding:.4} did not converge to an integer at {n} nodes \
                 (min |f| on contour {min_abs:.3e}); nudge or subdivide the region"
            )));
        }
        n *= 2;
    }
}

/// Newton iteration from `seed` to |f| < 1e-12, numerical derivative.
pub fn refine_root(f: &dyn Fn(Complex64) -> Complex64, seed: Complex64) -> Result<Complex64> {
    let mut z = seed;
    for _ in 0..100 {
        let fz = f(z);
        if fz.norm() < 1e-12 {
            return Ok(z);
        }
        let d = numeric_derivative(f, z);
        if d.norm() == 0.0 {
            break;
        }
        let step = fz / d;
        if !step.re.is_finite() || !step.im.is_finite() {
            break;
        }
        z -= step;
    }
    if f(z).norm() < 1e-12 {
        Ok(z)
    } else {
        Err(Error::RefinementFailure { last: z })
    }
}

/// Classify a root by its position in the k plane.
pub fn classify(k: Complex64) -> Result<PoleKind> {
    if k.norm() <= 1e-9 {
        return Err(Error::InvalidArgument(
            "origin excluded from pole classification".into(),
        ));
    }
    if k.re.abs() < AXIS_TOL {
        return Ok(if k.im > 0.0 {
            PoleKind::Bound
        } else {
            PoleKind::Antibound
        });
    }
    if k.im < 0.0 {
        return Ok(PoleKind::Resonance);
    }
    Err(Error::UnphysicalRoot { k })
}

// Splitting offsets are jittered off the midpoint so subdivision lines do
// not land exactly on the imaginary axis, where every bound state lives.
const SPLIT_JITTER: f64 = 0.028_657_1;

fn subdivide(region: &SearchRegion) -> [SearchRegion; 4] {
    let rm = region.re_min + region.width() * (0.5 + SPLIT_JITTER);
    let im = region.im_min + region.height() * (0.5 - SPLIT_JITTER);
    let mk = |re_min, re_max, im_min, im_max| SearchRegion {
        re_min,
        re_max,
        im_min,
        im_max,
        max_depth: region.max_depth,
        nodes: region.nodes,
    };
    [
        mk(region.re_min, rm, region.im_min, im),
        mk(rm, region.re_max, region.im_min, im),
        mk(region.re_min, rm, im, region.im_max),
        mk(rm, region.re_max, im, region.im_max),
    ]
}

fn count_with_nudge(
    f: &dyn Fn(Complex64) -> Complex64,
    region: &SearchRegion,
) -> Result<(usize, SearchRegion)> {
    let mut r = *region;
    let mut last_err = None;
    for attempt in 0..6 {
        match count_zeros(f, &r) {
            Ok(c) => return Ok((c, r)),
            Err(e) => {
                last_err = Some(e);
                let eps = 1e-3 * r.diameter() * (attempt + 1) as f64;
                r = SearchRegion {
                    re_min: r.re_min - eps,
                    re_max: r.re_max + eps * 1.31,
                    im_min: r.im_min - eps * 0.77,
                    im_max: r.im_max + eps * 1.13,
                    ..r
                };
            }
        }
    }
    Err(last_err.unwrap())
}

fn collect_roots(
    f: &dyn Fn(Complex64) -> Complex64,
    region: &SearchRegion,
    depth: usize,
    out: &mut Vec<Complex64>,
) -> Result<()> {
    let (count, region) = count_with_nudge(f, region)?;
    if count == 0 {
        return Ok(());
    }
    let small = region.diameter() < 0.05;
    if count == 1 && small {
        let center = Complex64::new(
            0.5 * (region.re_min + region.re_max),
            0.5 * (region.im_min + region.im_max),
        );
        let root = refine_root(f, center)?;
        if region.contains(root, 0.5 * region.diameter()) {
            out.push(root);
            return Ok(());
        }
        // Newton escaped the cell; fall through and subdivide further.
    }
    if depth >= region.max_depth || region.diameter() < 1e-6 {
        return Err(Error::RootIsolation(format!(
            "could not isolate {count} zero(s) in cell [{}, {}] x [{}, {}]",
            region.re_min, region.re_max, region.im_min, region.im_max
        )));
    }
    for sub in subdivide(&region) {
        collect_roots(f, &sub, depth + 1, out)?;
    }
    Ok(())
}

fn dedup(roots: &mut Vec<Complex64>) {
    let mut unique: Vec<Complex64> = Vec::new();
    for &r in roots.iter() {
        if !unique.iter().any(|u| (u - r).norm() < DEDUP_TOL) {
            unique.push(r);
        }
    }
    *roots = unique;
}

/// Locate, refine and classify every zero of the amplitude denominator
/// inside `region`.
///
/// For equal strengths the two Jost channels are searched separately and
/// tagged; otherwise the full denominator is used. The structural k = 0
/// zero is discarded; denominator zeros where the transmission numerator
/// also vanishes are kept but marked `removable`.
pub fn find_poles(system: &System, region: &SearchRegion) -> Result<Vec<Pole>> {
    let channels: Vec<(Channel, Box<dyn Fn(Complex64) -> Complex64>)> = if system.is_symmetric() {
        let alpha = system.alpha();
        let a = system.half_separation();
        match system {
            System::TwoDelta(_) => vec![
                (
                    Channel::J0,
                    Box::new(move |k| double_delta::jost_factors(alpha, a, k).j0) as Box<_>,
                ),
                (
                    Channel::J1,
                    Box::new(move |k| double_delta::jost_factors(alpha, a, k).j1) as Box<_>,
                ),
            ],
            System::Kink(_) => vec![
                (
                    Channel::J0,
                    Box::new(move |k| kink::kink_jost_factors(alpha, a, k).j0) as Box<_>,
                ),
                (
                    Channel::J1,
                    Box::new(move |k| kink::kink_jost_factors(alpha, a, k).j1) as Box<_>,
                ),
            ],
        }
    } else {
        let sys = *system;
        vec![(
            Channel::Full,
            Box::new(move |k| sys.denominator(k)) as Box<_>,
        )]
    };

    let mut poles: Vec<Pole> = Vec::new();
    for (channel, f) in channels {
        let mut roots = Vec::new();
        collect_roots(f.as_ref(), region, 0, &mut roots)?;
        dedup(&mut roots);
        for root in roots {
            if root.norm() <= ORIGIN_GUARD {
                continue;
            }
            // Snap near-axis roots onto the axis for clean classification.
            let k = if root.re.abs() < AXIS_TOL {
                Complex64::new(0.0, root.im)
            } else {
                root
            };
            let kind = classify(k)?;
            if kind == PoleKind::Resonance {
                // Real couplings force the mirror -conj(k) to be a root too.
                let mirror = -k.conj();
                if f(mirror).norm() > 1e-9 {
                    return Err(Error::UnphysicalRoot { k });
                }
            }
            let residual = system.denominator(k).norm();
            let removable = system.sigma_numerator(k).norm() < 1e-8;
            poles.push(Pole {
                k,
                kind,
                residual,
                channel,
                removable,
            });
        }
    }
    poles.sort_by(|p, q| {
        (p.k.im, p.k.re)
            .partial_cmp(&(q.k.im, q.k.re))
            .unwrap()
    });
    Ok(poles)
}

/// Only the poles of the transmission amplitude itself: denominator zeros
/// whose numerator does not cancel. These are the states the numeric
/// oracle can see.
pub fn physical_poles(poles: &[Pole]) -> Vec<Pole> {
    poles.iter().copied().filter(|p| !p.removable).collect()
}
