//! Command-line frontend: argument parsing, sweep orchestration and
//! deterministic CSV/JSON table emission.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::dirichlet;
use crate::double_delta::DeltaPairParams;
use crate::error::{Error, Result};
use crate::kink::KinkDeltaParams;
use crate::oracle::{self, PotentialSpec};
use crate::poles::{self, PoleKind, SearchRegion};
use crate::scattering::{SMatrix2x2, DEFAULT_DERIVATIVE_STEP};
use crate::system::System;
use crate::vacuum::{self, DispersionSpec};

#[derive(Debug, Parser)]
#[command(name = "qscatter", version, about = "Scattering data for double-delta and delta + Poschl-Teller potentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Output file (written atomically); stdout if omitted.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SystemKind {
    TwoDelta,
    Kink,
}

#[derive(Debug, Args)]
pub struct PotentialArgs {
    #[arg(long, value_enum)]
    pub system: SystemKind,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub beta: f64,
    #[arg(long, default_value_t = 1.0)]
    pub a: f64,
}

impl PotentialArgs {
    pub fn build(&self) -> Result<System> {
        Ok(match self.system {
            SystemKind::TwoDelta => {
                System::two_delta(DeltaPairParams::new(self.alpha, self.beta, self.a)?)
            }
            SystemKind::Kink => {
                System::kink(KinkDeltaParams::new(self.alpha, self.beta, self.a)?)
            }
        })
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Scattering amplitudes on a momentum grid.
    Amplitudes {
        #[command(flatten)]
        potential: PotentialArgs,
        /// Single momentum (shorthand for a one-point grid).
        #[arg(long, conflicts_with_all = ["k_min", "k_max", "samples"])]
        k: Option<f64>,
        #[arg(long, default_value_t = 0.1)]
        k_min: f64,
        #[arg(long, default_value_t = 10.0)]
        k_max: f64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Dirichlet-limit spectra; ground state and critical separation.
    Spectrum {
        #[arg(long, value_enum, required_unless_present = "critical")]
        system: Option<SystemKind>,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, default_value_t = 6)]
        count: usize,
        /// Emit only the critical separation a_c.
        #[arg(long)]
        critical: bool,
        /// Prepend the imaginary-root ground state (kink only) as row n = 0.
        #[arg(long)]
        ground_state: bool,
    },
    /// Denominator zeros in the complex momentum plane.
    Poles {
        #[command(flatten)]
        potential: PotentialArgs,
        #[arg(long, default_value_t = -2.2, allow_negative_numbers = true)]
        re_min: f64,
        #[arg(long, default_value_t = 2.2, allow_negative_numbers = true)]
        re_max: f64,
        #[arg(long, default_value_t = -0.9, allow_negative_numbers = true)]
        im_min: f64,
        #[arg(long, default_value_t = 2.2, allow_negative_numbers = true)]
        im_max: f64,
        /// Instead of poles, emit an n x n mesh of Re/Im of the denominator
        /// over the region (zero-contour plotting data).
        #[arg(long)]
        contour_grid: Option<usize>,
    },
    /// Vacuum energies: Dirichlet value, zeta mode sum, or the
    /// phase-shift integrand.
    Casimir {
        /// Dirichlet Casimir energy -pi/(48a).
        #[arg(long, conflicts_with_all = ["zeta", "integrand"])]
        dirichlet: bool,
        /// Regularized mode sum at exponent s.
        #[arg(long, conflicts_with = "integrand")]
        zeta: bool,
        /// Continuum vacuum-energy integrand over a k grid.
        #[arg(long)]
        integrand: bool,
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        s: Option<f64>,
        #[arg(long, value_enum)]
        system: Option<SystemKind>,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
        beta: f64,
        #[arg(long, default_value_t = 0.1)]
        k_min: f64,
        #[arg(long, default_value_t = 50.0)]
        k_max: f64,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// Cross-module invariant suite; exits 4 on any failing check.
    Verify {
        /// Also run the (slower) pole-count agreement suite.
        #[arg(long)]
        figures: bool,
        /// Closed-form vs numeric-integration agreement tolerance.
        #[arg(long, default_value_t = 1e-8)]
        tolerance: f64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

/// A result table with enough metadata to regenerate it.
#[derive(Debug, Clone)]
pub struct Table {
    pub command: String,
    pub params: Map<String, Value>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    fn new(command: &str, params: Map<String, Value>, columns: &[&str]) -> Self {
        Self {
            command: command.to_string(),
            params,
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn to_json(&self) -> String {
        let v = json!({
            "command": self.command,
            "params": self.params,
            "columns": self.columns,
            "rows": self.rows,
        });
        let mut s = serde_json::to_string_pretty(&v).expect("table serializes");
        s.push('\n');
        s
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# command={}\n", self.command));
        out.push_str(&format!(
            "# version={} params={}\n",
            env!("CARGO_PKG_VERSION"),
            serde_json::to_string(&self.params).expect("params serialize")
        ));
        out.push_str(&self.columns.iter().map(|c| csv_field(c)).collect::<Vec<_>>().join(","));
        out.push('\n');
        for row in &self.rows {
            let line = row.iter().map(|v| format!("{v}")).collect::<Vec<_>>().join(",");
            out.push_str(&line);
            out.push('\n');
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// Write to a temp file in the target directory, then rename into place.
pub fn write_output(path: Option<&Path>, content: &str) -> std::io::Result<()> {
    match path {
        None => {
            std::io::stdout().write_all(content.as_bytes())?;
            Ok(())
        }
        Some(path) => {
            let dir = path.parent().filter(|d| !d.as_os_str().is_empty());
            let tmp = match dir {
                Some(d) => d.join(format!(
                    ".{}.tmp",
                    path.file_name().map(|f| f.to_string_lossy().into_owned()).unwrap_or_default()
                )),
                None => PathBuf::from(format!(".{}.tmp", path.display())),
            };
            std::fs::write(&tmp, content)?;
            std::fs::rename(&tmp, path)
        }
    }
}

fn uniform_grid(lo: f64, hi: f64, n: usize) -> Result<Vec<f64>> {
    if n < 2 || !(lo > 0.0 && hi > lo) {
        return Err(Error::InvalidGrid(format!(
            "need 0 < k_min < k_max and samples >= 2, got [{lo}, {hi}] x {n}"
        )));
    }
    Ok((0..n)
        .map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
        .collect())
}

fn system_name(kind: SystemKind) -> &'static str {
    match kind {
        SystemKind::TwoDelta => "two-delta",
        SystemKind::Kink => "kink",
    }
}

pub fn cmd_amplitudes(
    potential: &PotentialArgs,
    k: Option<f64>,
    k_min: f64,
    k_max: f64,
    samples: usize,
) -> Result<Table> {
    let system = potential.build()?;
    let ks = match k {
        Some(k) => {
            if !(k > 0.0 && k.is_finite()) {
                return Err(Error::InvalidArgument(format!("need k > 0, got {k}")));
            }
            vec![k]
        }
        None => uniform_grid(k_min, k_max, samples)?,
    };
    let mut params = Map::new();
    params.insert("system".into(), json!(system_name(potential.system)));
    params.insert("alpha".into(), json!(potential.alpha));
    params.insert("beta".into(), json!(potential.beta));
    params.insert("a".into(), json!(potential.a));
    let mut table = Table::new(
        "amplitudes",
        params,
        &[
            "k",
            "re_sigma_r", "im_sigma_r", "re_sigma_l", "im_sigma_l",
            "re_rho_r", "im_rho_r", "re_rho_l", "im_rho_l",
            "re_a_r", "im_a_r", "re_b_r", "im_b_r",
            "re_a_l", "im_a_l", "re_b_l", "im_b_l",
            "sigma_abs2", "rho_r_abs2", "unitarity_defect",
        ],
    );
    let rows: Result<Vec<Vec<f64>>> = ks
        .par_iter()
        .map(|&k| {
            let amp = system.amplitudes(k)?;
            let defect = SMatrix2x2::from_amplitudes(&amp).unitarity_defect();
            Ok(vec![
                k,
                amp.sigma_r.re, amp.sigma_r.im, amp.sigma_l.re, amp.sigma_l.im,
                amp.rho_r.re, amp.rho_r.im, amp.rho_l.re, amp.rho_l.im,
                amp.a_r.re, amp.a_r.im, amp.b_r.re, amp.b_r.im,
                amp.a_l.re, amp.a_l.im, amp.b_l.re, amp.b_l.im,
                amp.sigma_r.norm_sqr(), amp.rho_r.norm_sqr(), defect,
            ])
        })
        .collect();
    table.rows = rows?;
    Ok(table)
}

pub fn cmd_spectrum(
    system: Option<SystemKind>,
    a: f64,
    count: usize,
    critical: bool,
    ground_state: bool,
) -> Result<Table> {
    if critical {
        let mut params = Map::new();
        params.insert("critical".into(), json!(true));
        let mut table = Table::new("spectrum", params, &["a_c"]);
        table.rows.push(vec![dirichlet::critical_separation()]);
        return Ok(table);
    }
    let kind = system.ok_or_else(|| Error::InvalidArgument("--system required".into()))?;
    let mut params = Map::new();
    params.insert("system".into(), json!(system_name(kind)));
    params.insert("a".into(), json!(a));
    params.insert("count".into(), json!(count));
    // parity_odd: 1 for sine-like (odd) modes, 0 for cosine-like (even);
    // the n = 0 ground-state row reports kappa_b in the k column and
    // omega = sqrt(1 - kappa_b^2) alongside
    let mut table = Table::new("spectrum", params, &["n", "k", "parity_odd", "omega"]);
    let omega_of = |k: f64| match kind {
        SystemKind::TwoDelta => k,
        SystemKind::Kink => (k * k + 1.0).sqrt(),
    };
    if ground_state {
        if kind != SystemKind::Kink {
            return Err(Error::InvalidArgument(
                "--ground-state applies to the kink system only".into(),
            ));
        }
        let root = dirichlet::kink_ground_state(a)?.ok_or(Error::OutOfRegime {
            a,
            a_c: dirichlet::critical_separation(),
        })?;
        table.rows.push(vec![0.0, root.kappa_b, 0.0, root.omega]);
    }
    let modes = match kind {
        SystemKind::TwoDelta => dirichlet::delta_dirichlet_momenta(a, count)?,
        SystemKind::Kink => dirichlet::kink_dirichlet_spectrum(a, count)?,
    };
    for m in &modes {
        let parity_odd = match m.parity {
            dirichlet::Parity::Odd => 1.0,
            dirichlet::Parity::Even => 0.0,
        };
        table.rows.push(vec![m.n as f64, m.k, parity_odd, omega_of(m.k)]);
    }
    Ok(table)
}

pub fn cmd_poles(
    potential: &PotentialArgs,
    region: SearchRegion,
    contour_grid: Option<usize>,
) -> Result<Table> {
    let system = potential.build()?;
    let mut params = Map::new();
    params.insert("system".into(), json!(system_name(potential.system)));
    params.insert("alpha".into(), json!(potential.alpha));
    params.insert("beta".into(), json!(potential.beta));
    // the figure reproductions never state a; it is an input here, echoed
    // so downstream consumers see the assumption explicitly
    params.insert("assumed_a".into(), json!(potential.a));
    params.insert("re_min".into(), json!(region.re_min));
    params.insert("re_max".into(), json!(region.re_max));
    params.insert("im_min".into(), json!(region.im_min));
    params.insert("im_max".into(), json!(region.im_max));

    if let Some(n) = contour_grid {
        if n < 2 {
            return Err(Error::InvalidGrid("contour grid needs at least 2 points".into()));
        }
        params.insert("contour_grid".into(), json!(n));
        let mut table = Table::new(
            "poles",
            params,
            &["re_k", "im_k", "re_delta", "im_delta"],
        );
        for i in 0..n {
            let re = region.re_min + (region.re_max - region.re_min) * i as f64 / (n - 1) as f64;
            for j in 0..n {
                let im =
                    region.im_min + (region.im_max - region.im_min) * j as f64 / (n - 1) as f64;
                let d = system.denominator(Complex64::new(re, im));
                table.rows.push(vec![re, im, d.re, d.im]);
            }
        }
        return Ok(table);
    }

    let mut table = Table::new(
        "poles",
        params,
        &["re_k", "im_k", "kind", "channel", "removable", "residual"],
    );
    for p in poles::find_poles(&system, &region)? {
        let kind = match p.kind {
            PoleKind::Bound => 0.0,
            PoleKind::Antibound => 1.0,
            PoleKind::Resonance => 2.0,
        };
        let channel = match p.channel {
            poles::Channel::J0 => 0.0,
            poles::Channel::J1 => 1.0,
            poles::Channel::Full => 2.0,
        };
        table
            .rows
            .push(vec![p.k.re, p.k.im, kind, channel, p.removable as u8 as f64, p.residual]);
    }
    Ok(table)
}

#[allow(clippy::too_many_arguments)]
pub fn cmd_casimir(
    dirichlet_flag: bool,
    zeta: bool,
    integrand: bool,
    a: f64,
    s: Option<f64>,
    system: Option<SystemKind>,
    alpha: f64,
    beta: f64,
    k_min: f64,
    k_max: f64,
    samples: usize,
) -> Result<Table> {
    match (dirichlet_flag, zeta, integrand) {
        (true, false, false) => {
            let mut params = Map::new();
            params.insert("mode".into(), json!("dirichlet"));
            params.insert("a".into(), json!(a));
            let mut table = Table::new("casimir", params, &["a", "energy"]);
            table.rows.push(vec![a, vacuum::dirichlet_casimir_energy(a)?]);
            Ok(table)
        }
        (false, true, false) => {
            let s = s.ok_or_else(|| Error::InvalidArgument("--zeta requires --s".into()))?;
            let v = vacuum::zeta_regularized_mode_sum(a, Complex64::new(s, 0.0))?;
            let mut params = Map::new();
            params.insert("mode".into(), json!("zeta"));
            params.insert("a".into(), json!(a));
            params.insert("s".into(), json!(s));
            let mut table = Table::new("casimir", params, &["a", "s", "re_value", "im_value"]);
            table.rows.push(vec![a, s, v.re, v.im]);
            Ok(table)
        }
        (false, false, true) => {
            let kind = system
                .ok_or_else(|| Error::InvalidArgument("--integrand requires --system".into()))?;
            let potential = PotentialArgs { system: kind, alpha, beta, a };
            let sys = potential.build()?;
            let dispersion = match kind {
                SystemKind::TwoDelta => DispersionSpec::Massless,
                SystemKind::Kink => DispersionSpec::Massive,
            };
            let ks = uniform_grid(k_min, k_max, samples)?;
            let mut params = Map::new();
            params.insert("mode".into(), json!("integrand"));
            params.insert("system".into(), json!(system_name(kind)));
            params.insert("alpha".into(), json!(alpha));
            params.insert("beta".into(), json!(beta));
            params.insert("a".into(), json!(a));
            let mut table = Table::new("casimir", params, &["k", "omega", "integrand"]);
            for k in ks {
                let v = vacuum::vacuum_energy_integrand(&sys, k, dispersion, DEFAULT_DERIVATIVE_STEP)?;
                table.rows.push(vec![k, dispersion.omega(k), v]);
            }
            Ok(table)
        }
        _ => Err(Error::InvalidArgument(
            "choose exactly one of --dirichlet, --zeta, --integrand".into(),
        )),
    }
}

pub struct VerifyReport {
    /// (check name, passed, detail)
    pub checks: Vec<(String, bool, String)>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|(_, ok, _)| *ok)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for (name, ok, detail) in &self.checks {
            out.push_str(&format!(
                "{} {name}: {detail}\n",
                if *ok { "PASS" } else { "FAIL" }
            ));
        }
        out.push_str(&format!(
            "{}: {} of {} checks passed\n",
            if self.all_passed() { "OK" } else { "FAILED" },
            self.checks.iter().filter(|(_, ok, _)| *ok).count(),
            self.checks.len()
        ));
        out
    }
}

fn amp_distance(a: &crate::scattering::Amplitudes, b: &crate::scattering::Amplitudes) -> f64 {
    [
        (a.sigma_r - b.sigma_r).norm(),
        (a.sigma_l - b.sigma_l).norm(),
        (a.rho_r - b.rho_r).norm(),
        (a.rho_l - b.rho_l).norm(),
        (a.a_r - b.a_r).norm(),
        (a.b_r - b.b_r).norm(),
        (a.a_l - b.a_l).norm(),
        (a.b_l - b.b_l).norm(),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

pub fn cmd_verify(figures: bool, tolerance: f64, seed: u64) -> Result<VerifyReport> {
    if !(tolerance > 0.0 && tolerance.is_finite()) {
        return Err(Error::InvalidArgument(format!("bad tolerance {tolerance}")));
    }
    let mut checks: Vec<(String, bool, String)> = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // free potentials scatter trivially
    {
        let sys = System::two_delta(DeltaPairParams::new(0.0, 0.0, 1.0)?);
        let amp = sys.amplitudes(1.0)?;
        let ok = (amp.sigma_r - 1.0).norm() < 1e-14 && amp.rho_r.norm() < 1e-14;
        checks.push((
            "free-two-delta".into(),
            ok,
            format!("|sigma - 1| = {:.2e}", (amp.sigma_r - 1.0).norm()),
        ));
        let sys = System::kink(KinkDeltaParams::new(0.0, 0.0, 10.0)?);
        let amp = sys.amplitudes(1.0)?;
        let ok = (amp.sigma_r.norm() - 1.0).abs() < 1e-3 && amp.rho_r.norm() < 1e-3;
        checks.push((
            "free-kink-window".into(),
            ok,
            format!("|rho| = {:.2e}", amp.rho_r.norm()),
        ));
    }

    // unitarity sweeps
    for (name, sys, bound) in [
        (
            "unitarity-two-delta",
            System::two_delta(DeltaPairParams::new(2.0, 1.0, 1.0)?),
            1e-12,
        ),
        (
            "unitarity-kink",
            System::kink(KinkDeltaParams::new(2.0, 1.0, 1.0)?),
            1e-10,
        ),
    ] {
        let worst = (0..1000)
            .into_par_iter()
            .map(|i| {
                let k = 0.05 + 20.0 * i as f64 / 999.0;
                let amp = sys.amplitudes(k)?;
                Ok(SMatrix2x2::from_amplitudes(&amp).unitarity_defect())
            })
            .try_reduce(|| 0.0f64, |u, v| Ok(u.max(v)))?;
        checks.push((name.into(), worst < bound, format!("max defect {worst:.2e}")));
    }

    // Jost factorizations on random complex momenta
    for (name, is_kink) in [("jost-two-delta", false), ("jost-kink", true)] {
        let (alpha, a) = (-2.0, 1.0);
        let mut worst = 0.0f64;
        for _ in 0..100 {
            let k = Complex64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let (prod, d) = if is_kink {
                let j = crate::kink::kink_jost_factors(alpha, a, k);
                let p = KinkDeltaParams::new(alpha, alpha, a)?;
                (4.0 * j.j0 * j.j1, crate::kink::kink_denominator(&p, k))
            } else {
                let j = crate::double_delta::jost_factors(alpha, a, k);
                let p = DeltaPairParams::new(alpha, alpha, a)?;
                (4.0 * j.j0 * j.j1, crate::double_delta::delta_denominator(&p, k))
            };
            worst = worst.max((prod - d).norm() / d.norm().max(1.0));
        }
        checks.push((name.into(), worst < 1e-12, format!("max rel err {worst:.2e}")));
    }

    // closed form vs direct integration on random parameter draws
    for (name, is_kink, step) in [("oracle-two-delta", false, 1e-3), ("oracle-kink", true, 5e-4)] {
        let draws: Vec<(f64, f64, f64, f64)> = (0..4)
            .map(|_| {
                (
                    rng.gen_range(-2.0..2.0),
                    rng.gen_range(-2.0..2.0),
                    rng.gen_range(0.6..1.6),
                    rng.gen_range(0.4..2.5),
                )
            })
            .collect();
        let worst = draws
            .par_iter()
            .map(|&(alpha, beta, a, k)| {
                let (system, mut spec) = if is_kink {
                    let p = KinkDeltaParams::new(alpha, beta, a)?;
                    (System::kink(p), PotentialSpec::kink_delta(&p))
                } else {
                    let p = DeltaPairParams::new(alpha, beta, a)?;
                    (System::two_delta(p), PotentialSpec::two_delta(&p))
                };
                spec.step = step;
                let exact = system.amplitudes(k)?;
                let numeric = oracle::solve_scattering_numeric(&spec, k)?;
                Ok(amp_distance(&exact, &numeric))
            })
            .try_reduce(|| 0.0f64, |u, v| Ok(u.max(v)))?;
        checks.push((
            name.into(),
            worst < tolerance,
            format!("max amplitude diff {worst:.2e} (tolerance {tolerance:.0e})"),
        ));
    }

    if figures {
        // bound-state counts and positions: root finder vs eigenvalue search
        let cases: [(SystemKind, f64); 8] = [
            (SystemKind::TwoDelta, -0.1),
            (SystemKind::TwoDelta, -2.0),
            (SystemKind::TwoDelta, 0.1),
            (SystemKind::TwoDelta, 2.0),
            (SystemKind::Kink, -0.1),
            (SystemKind::Kink, -2.0),
            (SystemKind::Kink, 0.1),
            (SystemKind::Kink, 2.0),
        ];
        for (kind, alpha) in cases {
            let (system, spec) = match kind {
                SystemKind::TwoDelta => {
                    let p = DeltaPairParams::new(alpha, alpha, 1.0)?;
                    (System::two_delta(p), PotentialSpec::two_delta(&p))
                }
                SystemKind::Kink => {
                    let p = KinkDeltaParams::new(alpha, alpha, 1.0)?;
                    (System::kink(p), PotentialSpec::kink_delta(&p))
                }
            };
            let found = poles::find_poles(&system, &SearchRegion::figure_default())?;
            let mut analytic: Vec<f64> = poles::physical_poles(&found)
                .iter()
                .filter(|p| p.kind == PoleKind::Bound)
                .map(|p| p.k.im)
                .collect();
            analytic.sort_by(|x, y| x.partial_cmp(y).unwrap());
            let numeric = oracle::solve_bound_states_numeric(&spec, 0.02, 2.1, 150)?;
            let ok = analytic.len() == numeric.len()
                && analytic
                    .iter()
                    .zip(numeric.iter())
                    .all(|(x, y)| (x - y).abs() < 1e-6);
            checks.push((
                format!("figure-counts-{}-alpha-{alpha}", system_name(kind)),
                ok,
                format!("analytic {analytic:?} vs numeric {numeric:?}"),
            ));
        }
    }

    Ok(VerifyReport { checks })
}

/// Run a parsed command, returning the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result: Result<String> = match &cli.command {
        Command::Amplitudes { potential, k, k_min, k_max, samples } => {
            cmd_amplitudes(potential, *k, *k_min, *k_max, *samples).map(|t| render(&t, cli.format))
        }
        Command::Spectrum { system, a, count, critical, ground_state } => {
            cmd_spectrum(*system, *a, *count, *critical, *ground_state)
                .map(|t| render(&t, cli.format))
        }
        Command::Poles { potential, re_min, re_max, im_min, im_max, contour_grid } => {
            SearchRegion::new(*re_min, *re_max, *im_min, *im_max)
                .and_then(|region| cmd_poles(potential, region, *contour_grid))
                .map(|t| render(&t, cli.format))
        }
        Command::Casimir {
            dirichlet, zeta, integrand, a, s, system, alpha, beta, k_min, k_max, samples,
        } => cmd_casimir(
            *dirichlet, *zeta, *integrand, *a, *s, *system, *alpha, *beta, *k_min, *k_max,
            *samples,
        )
        .map(|t| render(&t, cli.format)),
        Command::Verify { figures, tolerance, seed } => {
            match cmd_verify(*figures, *tolerance, *seed) {
                Err(e) => Err(e),
                Ok(report) => {
                    let text = report.render();
                    if let Err(e) = write_output(cli.output.as_deref(), &text) {
                        eprintln!("error: {e}");
                        return 3;
                    }
                    return if report.all_passed() { 0 } else { 4 };
                }
            }
        }
    };
    match result {
        Ok(content) => match write_output(cli.output.as_deref(), &content) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("error: {e}");
                3
            }
        },
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::InvalidArgument(_) | Error::InvalidGrid(_) | Error::InconsistentInput(_) => 2,
                _ => 3,
            }
        }
    }
}

fn render(table: &Table, format: Format) -> String {
    match format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json(),
    }
}
