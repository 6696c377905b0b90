//! Semi-analytic surrogate for the pair-creation kernel.
//!
//! The exact `F(x, y)` factorizes to a good approximation into its diagonal
//! profile times a universal transverse shape,
//!
//! ```text
//! F(x, y) ≈ D((x+y)/2) · sin²(π(x-y)/4) / (π(x-y)/4)²,
//! ```
//!
//! the smeared remnant of the infinite-volume `δ(x - y)`. The diagonal
//! `D(x) = F(x, x)` rises from zero below `x ≈ 1` to the plateau `1/(2π²)` and
//! is fitted by the rational form
//!
//! ```text
//! D(x) ≈ Θ(x - 1) · (1/2π²) · 2(x-1)² / (3 + 2(x-1)²),
//! ```
//!
//! a numerical-experimentation fit, not an expansion. Combining the two gives
//! [`f_factorized`]; [`approximation_report`] quantifies what the surrogate
//! costs against the exact kernel, pointwise and in total emitted energy.
//! The region `x, y < 1` contributes negligibly and both forms treat it as
//! zero; the step `Θ` is a hard `>=` cutoff (the energy integrals cannot see
//! a measure-zero boundary).

use serde::{Deserialize, Serialize};

use crate::bessel::{bessel_j_half_array, pseudo_wronskian_diagonal_from_array, MAX_ORDER};
use crate::bogolubov::{log_tail_term, AFactor, Scenario, StopRule, TruncationPolicy};
use crate::matching::Media;
use crate::spectrum::{photon_budget_from_table, spectrum_finite, QuadSpec, SpectrumKernel};
use crate::{Error, Result};

const INV_TWO_PI_SQ: f64 = 1.0 / (2.0 * std::f64::consts::PI * std::f64::consts::PI);

/// Diagonal of the exact kernel, `D(x) = F(x, x)`, by direct summation of
/// `(2l+1) [ (2l+1) J_{ν}J_{ν-1} - x(J_ν² + J_{ν-1}²) ]² / (4x²)`.
pub fn d_exact(x: f64, policy: &TruncationPolicy) -> Result<f64> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!(
            "x must be finite and positive, got {x}"
        )));
    }
    if x > crate::bessel::MAX_ARGUMENT {
        return Err(Error::Range(format!(
            "x = {x} exceeds supported maximum {}",
            crate::bessel::MAX_ARGUMENT
        )));
    }
    let l_floor = (x.ceil() as u32 + 10).max(11);
    let l_cap = match policy.rule() {
        StopRule::Fixed(l_max) => {
            if (l_max as f64) < x {
                return Err(Error::Truncation(format!(
                    "fixed l_max = {l_max} is below x = {x}"
                )));
            }
            l_max
        }
        StopRule::Adaptive => MAX_ORDER,
    };
    let mut l_arr = match policy.rule() {
        StopRule::Fixed(l_max) => l_max,
        StopRule::Adaptive => (l_floor + 40).min(l_cap),
    };
    loop {
        let j = bessel_j_half_array(l_arr, x)?;
        let mut sum = 0.0;
        for l in 1..=l_arr as usize {
            let t = pseudo_wronskian_diagonal_from_array(l, x, &j);
            sum += (2 * l + 1) as f64 * t * t / (4.0 * x * x);
            if let StopRule::Adaptive = policy.rule() {
                let nu = l as f64 + 0.5;
                if l as u32 >= l_floor && nu * nu > x * x {
                    let lt1 = log_tail_term(l as u32 + 1, x * x);
                    let lt2 = log_tail_term(l as u32 + 2, x * x);
                    let ratio = (lt2 - lt1).exp();
                    if ratio < 0.9 {
                        let tail = lt1.exp() / (1.0 - ratio);
                        if tail <= policy.tail_epsilon() * sum.abs().max(f64::MIN_POSITIVE) {
                            return Ok(sum);
                        }
                    }
                }
            }
        }
        match policy.rule() {
            StopRule::Fixed(_) => return Ok(sum),
            StopRule::Adaptive => {
                if l_arr >= l_cap {
                    return Err(Error::Truncation(format!(
                        "diagonal sum for D({x}) not certified below tail_epsilon = {}",
                        policy.tail_epsilon()
                    )));
                }
                l_arr = (l_arr * 2).min(l_cap);
            }
        }
    }
}

/// Rational fit to the diagonal: `Θ(x-1) (1/2π²) 2(x-1)²/(3 + 2(x-1)²)`.
pub fn d_approx(x: f64) -> f64 {
    if x < 1.0 {
        return 0.0;
    }
    let t = x - 1.0;
    INV_TWO_PI_SQ * 2.0 * t * t / (3.0 + 2.0 * t * t)
}

/// Transverse kernel `sin²(πt/4)/(πt/4)²` with `sinc_kernel(0) = 1` exactly.
pub fn sinc_kernel(t: f64) -> f64 {
    let u = std::f64::consts::FRAC_PI_4 * t;
    if u == 0.0 {
        return 1.0;
    }
    let s = u.sin() / u;
    s * s
}

/// The factorized kernel
/// `Θ(x+y-2) (1/2π²) (x+y-2)²/(6 + (x+y-2)²) · sinc_kernel(x-y)`.
///
/// Identical to `d_approx((x+y)/2) · sinc_kernel(x-y)`: substituting
/// `s = (x+y)/2` into the rational factor gives `t²/(6+t²)` at `t = x+y-2`.
pub fn f_factorized(x: f64, y: f64) -> f64 {
    let t = x + y - 2.0;
    if t < 0.0 {
        return 0.0;
    }
    INV_TWO_PI_SQ * t * t / (6.0 + t * t) * sinc_kernel(x - y)
}

/// Where and how much the factorized kernel deviates from the exact one.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ApproximationReport {
    /// Largest pointwise `|F_exact - F_factorized|` on the grid.
    pub max_abs_error: f64,
    /// Root-mean-square pointwise error on the grid.
    pub rms_error: f64,
    /// `|E_exact - E_factorized| / E_exact` for the total emitted energy.
    pub energy_discrepancy_fraction: f64,
    /// Human-readable description of the sampled region.
    pub grid: String,
}

/// Sampling grid for [`approximation_report`]: `n × n` uniform points on
/// `[0, hi]²`. Default: 201 × 201 over `[0, 1.2 · RK]²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReportGrid {
    pub hi: f64,
    pub n: usize,
}

impl ReportGrid {
    pub fn for_scenario(scenario: &Scenario) -> Self {
        Self {
            hi: 1.2 * scenario.x_max(),
            n: 201,
        }
    }
}

/// Compare the exact and factorized kernels pointwise on the grid and through
/// the total-energy budgets they produce.
pub fn approximation_report(
    media: &Media,
    scenario: &Scenario,
    policy: &TruncationPolicy,
    grid: &ReportGrid,
) -> Result<ApproximationReport> {
    if grid.n < 2 || !grid.hi.is_finite() || grid.hi <= 0.0 {
        return Err(Error::Domain(format!(
            "report grid needs n >= 2 and hi > 0, got n = {}, hi = {}",
            grid.n, grid.hi
        )));
    }
    let step = grid.hi / (grid.n - 1) as f64;
    let axis: Vec<f64> = (0..grid.n).map(|i| i as f64 * step).collect();

    use rayon::prelude::*;
    let row_stats: Vec<Result<(f64, f64)>> = axis
        .par_iter()
        .map(|&x| {
            let mut max_abs = 0.0f64;
            let mut sq_sum = 0.0f64;
            for &y in &axis {
                let exact = if x == 0.0 || y == 0.0 {
                    0.0
                } else {
                    crate::bogolubov::f_exact(x, y, policy, media, AFactor::Unit)?
                };
                let err = (exact - f_factorized(x, y)).abs();
                max_abs = max_abs.max(err);
                sq_sum += err * err;
            }
            Ok((max_abs, sq_sum))
        })
        .collect();

    let mut max_abs_error = 0.0f64;
    let mut sq_sum = 0.0f64;
    for r in row_stats {
        let (m, s) = r?;
        max_abs_error = max_abs_error.max(m);
        sq_sum += s;
    }
    let rms_error = (sq_sum / (grid.n * grid.n) as f64).sqrt();

    // Total-energy comparison on a spectrum grid spanning the same range.
    let x_grid: Vec<f64> = axis.clone();
    let quad = QuadSpec::default();
    let table_exact = spectrum_finite(
        media,
        scenario,
        &x_grid,
        &quad,
        SpectrumKernel::Exact,
        policy,
        AFactor::Unit,
    )?;
    let table_fact = spectrum_finite(
        media,
        scenario,
        &x_grid,
        &quad,
        SpectrumKernel::Factorized,
        policy,
        AFactor::Unit,
    )?;
    let e_exact = photon_budget_from_table(&table_exact)?.e_total_hck;
    let e_fact = photon_budget_from_table(&table_fact)?.e_total_hck;
    let energy_discrepancy_fraction = if e_exact > 0.0 {
        (e_exact - e_fact).abs() / e_exact
    } else {
        0.0
    };

    Ok(ApproximationReport {
        max_abs_error,
        rms_error,
        energy_discrepancy_fraction,
        grid: format!("{0}x{0} uniform on [0, {1:.6}]^2", grid.n, grid.hi),
    })
}
