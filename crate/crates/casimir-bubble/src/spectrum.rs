//! Photon spectra and budgets.
//!
//! # Finite volume
//!
//! The number of photons per dimensionless out-frequency `x = n_l ω_out R/c`
//! is the in-frequency integral of the pair-creation kernel,
//!
//! ```text
//! dN/dx = (n_l² - n_g²)²/(n_l³ n_g³) ∫_0^{RK} [y²/(n_g x + n_l y)]² kernel(x, y) dy,
//! ```
//!
//! with `kernel = F` exact or its factorized surrogate. The integrand is
//! smooth on the sinc² scale (period 8 in `x - y`), so composite 16-point
//! Gauss-Legendre panels of width 1 resolve it fully; the convergence check
//! halves the panels. The lower bound stays at 0 even though the kernels
//! vanish below `x + y = 2` — the dead region costs nothing.
//!
//! # Units
//!
//! Everything is carried dimensionless as long as possible. A photon at `x`
//! has energy `ħω_out = ħc x / (n_l R) = ħcK · x/(n_l RK)`, hence from a
//! sampled table
//!
//! ```text
//! N = ∫ (dN/dx) dx,        E = ħcK/(n_l RK) ∫ x (dN/dx) dx,
//! ```
//!
//! trapezoid-integrated in order. Energies are native in `ħcK` units; the eV
//! conversion multiplies by `ħcK[eV] = (ħc in eV·nm) · K[1/nm]` at the
//! presentation boundary and nowhere else.
//!
//! # Infinite volume
//!
//! For `R → ∞` the kernel collapses onto the diagonal and everything is
//! closed form:
//!
//! ```text
//! dN/dx = [1/(2π n_l n_g)] [(n_l - n_g)/(n_l n_g)]² x² Θ(RK - x),
//! N     = [1/(6π n_l n_g)] [(n_l - n_g)/(n_l n_g)]² (RK)³,
//! E     = [1/(8π n_l² n_g)] [(n_l - n_g)/(n_l n_g)]² ħcK (RK)³,
//! ⟨E⟩   = E/N = (3/4) ħcK / n_l.
//! ```
//!
//! # Static comparator
//!
//! The bulk zero-point energy difference between the bubble-present and
//! homogeneous configurations,
//! `E_static = (1/6π) ħc R³K⁴ (1/n_g - 1/n_l) = (1/6π) (RK)³ (1/n_g - 1/n_l) ħcK`,
//! bounds the energy available to the collapse; `n_est = E_static/⟨E⟩` is the
//! order-of-magnitude photon count that budget could fund. Note `E_static` is
//! first order in the index contrast while the radiated energy is second
//! order: conversion is inefficient, not energy-violating.

use serde::{Deserialize, Serialize};

use crate::approximation::f_factorized;
use crate::bogolubov::{f_exact, AFactor, Scenario, TruncationPolicy};
use crate::matching::Media;
use crate::quadrature::PanelRule;
use crate::{Error, Result};

/// Which kernel fills a finite-volume spectrum table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumKernel {
    Exact,
    Factorized,
}

/// Provenance tag of a spectrum table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpectrumMode {
    Exact,
    Factorized,
    Infinite,
}

impl std::fmt::Display for SpectrumMode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SpectrumMode::Exact => write!(f, "exact"),
            SpectrumMode::Factorized => write!(f, "factorized"),
            SpectrumMode::Infinite => write!(f, "infinite"),
        }
    }
}

/// One sample of the dimensionless spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SpectrumPoint {
    pub x: f64,
    pub dndx: f64,
}

/// A sampled dimensionless spectrum with its provenance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumTable {
    pub mode: SpectrumMode,
    pub a_factor: AFactor,
    pub media: Media,
    pub scenario: Scenario,
    /// Upper bound of the `y` integration actually used (defaults to `RK`).
    pub y_max: f64,
    pub points: Vec<SpectrumPoint>,
}

impl SpectrumTable {
    /// Check the structural invariants: strictly increasing `x`, `dndx >= 0`.
    pub fn validate(&self) -> Result<()> {
        for pair in self.points.windows(2) {
            if !(pair[1].x > pair[0].x) {
                return Err(Error::InvalidInput(format!(
                    "spectrum x values must be strictly increasing ({} then {})",
                    pair[0].x, pair[1].x
                )));
            }
        }
        for p in &self.points {
            if !p.dndx.is_finite() || p.dndx < 0.0 {
                return Err(Error::InvalidInput(format!(
                    "spectral density must be finite and non-negative, got {} at x = {}",
                    p.dndx, p.x
                )));
            }
        }
        Ok(())
    }

    /// Whether the sampled support is adequately covered: the last sample is
    /// below `rel` times the peak density.
    pub fn tail_is_negligible(&self, rel: f64) -> bool {
        let peak = self.points.iter().map(|p| p.dndx).fold(0.0f64, f64::max);
        match self.points.last() {
            Some(last) => peak == 0.0 || last.dndx <= rel * peak,
            None => true,
        }
    }
}

/// Total photon number and energy of a spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhotonBudget {
    /// Total photon count (dimensionless).
    pub n_total: f64,
    /// Total energy in units of `ħcK`.
    pub e_total_hck: f64,
    /// Total energy in eV.
    pub e_total_ev: f64,
    /// Mean photon energy in eV (zero for an empty budget).
    pub e_avg_ev: f64,
}

impl PhotonBudget {
    fn zero() -> Self {
        Self {
            n_total: 0.0,
            e_total_hck: 0.0,
            e_total_ev: 0.0,
            e_avg_ev: 0.0,
        }
    }
}

/// The static bulk comparator and the photon count it could fund.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StaticCasimirEnergy {
    /// `(1/6π)(RK)³(1/n_g - 1/n_l)` in `ħcK` units.
    pub e_hck: f64,
    pub e_ev: f64,
    /// Order-of-magnitude estimate `E/⟨E⟩` with `⟨E⟩ = (3/4)ħcK/n_l`.
    pub n_est: f64,
}

/// Quadrature layout for the `y` integral of [`spectrum_finite`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadSpec {
    /// Width of each 16-point Gauss-Legendre panel.
    pub panel_width: f64,
    /// Override of the `y` integration upper bound (defaults to `RK`).
    pub y_max: Option<f64>,
}

impl Default for QuadSpec {
    fn default() -> Self {
        Self {
            panel_width: 1.0,
            y_max: None,
        }
    }
}

impl QuadSpec {
    pub fn validate(&self) -> Result<()> {
        if !self.panel_width.is_finite() || self.panel_width <= 0.0 {
            return Err(Error::Domain(format!(
                "panel width must be positive, got {}",
                self.panel_width
            )));
        }
        if let Some(y) = self.y_max {
            if !y.is_finite() || y <= 0.0 {
                return Err(Error::Domain(format!(
                    "y_max override must be positive, got {y}"
                )));
            }
        }
        Ok(())
    }

    /// The same layout with halved panels (convergence check).
    pub fn halved(&self) -> Self {
        Self {
            panel_width: 0.5 * self.panel_width,
            y_max: self.y_max,
        }
    }
}

/// Closed-form infinite-volume spectral density at `x` (zero outside the
/// support `0 < x <= RK`).
pub fn spectrum_infinite(media: &Media, scenario: &Scenario, x: f64) -> f64 {
    if !(x > 0.0) || x > scenario.x_max() {
        return 0.0;
    }
    let (ng, nl) = (media.n_gas(), media.n_liquid());
    let q = (nl - ng) / (nl * ng);
    q * q * x * x / (2.0 * std::f64::consts::PI * nl * ng)
}

/// Sample the infinite-volume closed form onto a grid.
pub fn spectrum_infinite_table(
    media: &Media,
    scenario: &Scenario,
    x_grid: &[f64],
) -> Result<SpectrumTable> {
    check_grid(x_grid)?;
    let points = x_grid
        .iter()
        .map(|&x| SpectrumPoint {
            x,
            dndx: spectrum_infinite(media, scenario, x),
        })
        .collect();
    Ok(SpectrumTable {
        mode: SpectrumMode::Infinite,
        a_factor: AFactor::Unit,
        media: *media,
        scenario: *scenario,
        y_max: scenario.x_max(),
        points,
    })
}

fn check_grid(x_grid: &[f64]) -> Result<()> {
    if x_grid.is_empty() {
        return Err(Error::Domain("empty x grid".into()));
    }
    for pair in x_grid.windows(2) {
        if !(pair[1] > pair[0]) {
            return Err(Error::Domain(format!(
                "x grid must be strictly increasing ({} then {})",
                pair[0], pair[1]
            )));
        }
    }
    if x_grid[0] < 0.0 || !x_grid.iter().all(|x| x.is_finite()) {
        return Err(Error::Domain("x grid must be finite and >= 0".into()));
    }
    Ok(())
}

/// Finite-volume spectrum: for each grid `x`, the `y` integral of the kernel
/// over `[0, y_max]` by fixed composite Gauss-Legendre panels.
///
/// Grid points are independent and evaluated in parallel; results are
/// assembled in `x` order and each point's summation order is fixed, so the
/// output is identical for any thread count.
pub fn spectrum_finite(
    media: &Media,
    scenario: &Scenario,
    x_grid: &[f64],
    quad: &QuadSpec,
    kernel: SpectrumKernel,
    policy: &TruncationPolicy,
    a_factor: AFactor,
) -> Result<SpectrumTable> {
    check_grid(x_grid)?;
    quad.validate()?;
    let y_max = quad.y_max.unwrap_or_else(|| scenario.x_max());
    let (ng, nl) = (media.n_gas(), media.n_liquid());
    let prefactor = (nl * nl - ng * ng).powi(2) / (nl.powi(3) * ng.powi(3));
    let rule = PanelRule::new(quad.panel_width)?;

    use rayon::prelude::*;
    let densities: Vec<Result<f64>> = x_grid
        .par_iter()
        .map(|&x| -> Result<f64> {
            if media.is_uniform() {
                return Ok(0.0);
            }
            let mut point_err: Option<Error> = None;
            let value = rule.integrate(0.0, y_max, |y| {
                if point_err.is_some() || y <= 0.0 {
                    return 0.0;
                }
                let k = match kernel {
                    SpectrumKernel::Factorized => Ok(f_factorized(x, y)),
                    SpectrumKernel::Exact => {
                        if x == 0.0 {
                            // W̃_ν(0, y) = 0: the exact kernel vanishes at x = 0.
                            Ok(0.0)
                        } else {
                            f_exact(x, y, policy, media, a_factor)
                        }
                    }
                };
                match k {
                    Ok(k) => {
                        let g = y * y / (ng * x + nl * y);
                        g * g * k
                    }
                    Err(e) => {
                        point_err = Some(e);
                        0.0
                    }
                }
            });
            if let Some(e) = point_err {
                return Err(Error::Domain(format!(
                    "spectrum evaluation failed at x = {x}: {e}"
                )));
            }
            let dndx = prefactor * value;
            if !dndx.is_finite() || dndx < 0.0 {
                return Err(Error::Consistency(format!(
                    "non-physical spectral density {dndx} at x = {x}"
                )));
            }
            Ok(dndx)
        })
        .collect();

    let mut points = Vec::with_capacity(x_grid.len());
    for (&x, d) in x_grid.iter().zip(densities) {
        points.push(SpectrumPoint { x, dndx: d? });
    }
    Ok(SpectrumTable {
        mode: match kernel {
            SpectrumKernel::Exact => SpectrumMode::Exact,
            SpectrumKernel::Factorized => SpectrumMode::Factorized,
        },
        a_factor,
        media: *media,
        scenario: *scenario,
        y_max,
        points,
    })
}

/// Closed-form photon budget of the infinite-volume spectrum.
pub fn photon_budget_infinite(media: &Media, scenario: &Scenario) -> PhotonBudget {
    let (ng, nl) = (media.n_gas(), media.n_liquid());
    let q = (nl - ng) / (nl * ng);
    let rk3 = scenario.x_max().powi(3);
    let n_total = q * q * rk3 / (6.0 * std::f64::consts::PI * nl * ng);
    let e_total_hck = q * q * rk3 / (8.0 * std::f64::consts::PI * nl * nl * ng);
    let hck = scenario.hck_ev();
    let e_total_ev = e_total_hck * hck;
    let e_avg_ev = if n_total > 0.0 { 0.75 * hck / nl } else { 0.0 };
    PhotonBudget {
        n_total,
        e_total_hck,
        e_total_ev,
        e_avg_ev,
    }
}

/// Trapezoid-integrate a sampled table into a photon budget.
///
/// An empty or single-point table integrates to the zero budget. Use
/// [`SpectrumTable::tail_is_negligible`] to detect inadequate support
/// coverage before trusting the result.
pub fn photon_budget_from_table(table: &SpectrumTable) -> Result<PhotonBudget> {
    table.validate()?;
    if table.points.len() < 2 {
        return Ok(PhotonBudget::zero());
    }
    let mut n_total = 0.0;
    let mut x_moment = 0.0;
    for pair in table.points.windows(2) {
        let h = pair[1].x - pair[0].x;
        n_total += 0.5 * h * (pair[0].dndx + pair[1].dndx);
        x_moment += 0.5 * h * (pair[0].x * pair[0].dndx + pair[1].x * pair[1].dndx);
    }
    let nl = table.media.n_liquid();
    let rk = table.scenario.x_max();
    let e_total_hck = x_moment / (nl * rk);
    let hck = table.scenario.hck_ev();
    let e_total_ev = e_total_hck * hck;
    let e_avg_ev = if n_total > 0.0 {
        e_total_ev / n_total
    } else {
        0.0
    };
    Ok(PhotonBudget {
        n_total,
        e_total_hck,
        e_total_ev,
        e_avg_ev,
    })
}

/// Static bulk Casimir energy of the bubble-present configuration, plus the
/// photon count it could fund at the emitted mean energy.
pub fn schwinger_static_energy(media: &Media, scenario: &Scenario) -> StaticCasimirEnergy {
    let (ng, nl) = (media.n_gas(), media.n_liquid());
    let e_hck = scenario.x_max().powi(3) / (6.0 * std::f64::consts::PI) * (1.0 / ng - 1.0 / nl);
    let hck = scenario.hck_ev();
    let e_ev = e_hck * hck;
    let e_avg = 0.75 * hck / nl;
    let n_est = if e_avg > 0.0 && e_hck != 0.0 {
        e_ev / e_avg
    } else {
        0.0
    };
    StaticCasimirEnergy { e_hck, e_ev, n_est }
}
