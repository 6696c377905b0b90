//! The pair-creation kernel: truncated partial-wave sums for `F(x, y)` and
//! `|β(x, y)|²`, plus the closed-form radial overlap with its quadrature
//! self-check.
//!
//! # The kernel
//!
//! In the dimensionless frequencies `x = n_liquid ω_out R/c` (out basis) and
//! `y = n_gas ω_in R/c` (in basis), the squared pair-creation coefficient is
//!
//! ```text
//! |β(x, y)|² = (R²/c²) · (n_l² - n_g²)²/(n_l² n_g²) · [y² / (n_g x + n_l y)]² · F(x, y),
//!
//! F(x, y) = Σ_{l=1}^{∞} (2l+1) · w_l · W̃_ν(x, y)² / (x² - y²)²,
//! ```
//!
//! with `w_l = 1` (the unit A-factor substitution justified by the period
//! mean of `|A_ν|²` being exactly 1) or `w_l = |A_ν(y)|²` from the exact wall
//! matching. The monopole does not radiate: the sum starts at `l = 1`.
//!
//! On the diagonal the summand is a 0/0 that resolves through
//! `W̃_ν(x, y) -> (x - y) · diag_ν(x)`: for `|x - y| < 1e-6 max(1, x)` — where
//! the naive quotient has already lost six digits to cancellation — the
//! summand is replaced by `(2l+1) w_l diag_ν(s)²/(x+y)²` at `s = (x+y)/2`.
//!
//! # Truncation
//!
//! A photon emitted from within radius `R` carries at most `l ≈ R k`, so the
//! sum is effectively cut off at `l_max = ⌊R K⌋` ([`l_max_physical`]);
//! mathematically, the large-order decay `J_ν(z) ~ (ez/2ν)^ν / sqrt(2πν)`
//! suppresses terms once `ν² > x y`. The adaptive policy sums until that decay
//! regime is reached (never earlier than `l = ⌈max(x,y)⌉ + 10`, where the
//! asymptotics cannot yet be trusted) and then stops once a geometric bound on
//! the remaining tail, built from the large-order form, certifies a relative
//! tail below `tail_epsilon`. Summation order is fixed (ascending `l`) for
//! bit-reproducibility.
//!
//! # The overlap integral
//!
//! The identity `∫_a^b u G_λ G_μ du = [u W_{λμ}(u) / (μ² - λ²)]_a^b` for any
//! two solutions of the radial equation with eigenvalues `λ, μ` collapses the
//! overlap of an out mode with an in mode to wall terms. Carrying it across
//! both media pieces (interior eigenvalue `y`, exterior `w = n_l y / n_g`,
//! out-mode `x`, all per unit `u = r/R`) and using continuity of
//! `W[G_out, G_in]` at the wall:
//!
//! ```text
//! ∫_0^∞ u G_out(x u) G_in(u) du
//!     = A W̃_ν(x, y) [ 1/(x² - y²) + 1/(w² - x²) ]
//!     = - A (n_l² - n_g²) y² W̃_ν(x, y) / [ (x² - y²) (n_g² x² - n_l² y²) ]
//! ```
//!
//! in units of `R²` (the oscillatory boundary term at infinity integrates to
//! zero against any wave packet and is dropped, as usual for continuum
//! normalization). The second denominator vanishes at `n_g x = n_l y`, i.e.
//! `ω_out = ω_in`: equal frequencies in the same medium make the overlap
//! δ-singular, which is *not* removable — [`overlap_integral_closed`] reports
//! it as a domain error. In `|β|²` that pole is tamed by the `(ω_in - ω_out)`
//! prefactor, which is why [`f_exact`] is regular there.
//! [`overlap_identity_check`] verifies the finite-interval identity against
//! adaptive quadrature and is the module's independent oracle.

use serde::{Deserialize, Serialize};

use crate::bessel::{
    bessel_j_half_array, pseudo_wronskian_diagonal_from_array, pseudo_wronskian_from_arrays,
    ModeIndex, MAX_ARGUMENT, MAX_ORDER,
};
use crate::matching::{matching_coefficients, Media};
use crate::quadrature::integrate_to_tolerance;
use crate::{Error, Result, SPEED_OF_LIGHT_M_PER_S};

/// Bubble radius and wavenumber cutoff; `x_max = R K` is derived, never stored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ScenarioRepr", into = "ScenarioRepr")]
pub struct Scenario {
    radius_m: f64,
    cutoff_per_m: f64,
}

#[derive(Serialize, Deserialize, Clone, Copy)]
struct ScenarioRepr {
    radius_m: f64,
    cutoff_per_m: f64,
}

impl TryFrom<ScenarioRepr> for Scenario {
    type Error = Error;
    fn try_from(r: ScenarioRepr) -> Result<Self> {
        Scenario::new(r.radius_m, r.cutoff_per_m)
    }
}

impl From<Scenario> for ScenarioRepr {
    fn from(s: Scenario) -> Self {
        ScenarioRepr {
            radius_m: s.radius_m,
            cutoff_per_m: s.cutoff_per_m,
        }
    }
}

impl Scenario {
    pub fn new(radius_m: f64, cutoff_per_m: f64) -> Result<Self> {
        for (name, v) in [("radius", radius_m), ("cutoff", cutoff_per_m)] {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::Domain(format!(
                    "{name} must be finite and positive, got {v}"
                )));
            }
        }
        Ok(Self {
            radius_m,
            cutoff_per_m,
        })
    }

    /// Build from a radius in µm and a cutoff wavelength in nm (`K = 2π/λ`).
    pub fn from_radius_um_cutoff_nm(radius_um: f64, lambda_nm: f64) -> Result<Self> {
        if !lambda_nm.is_finite() || lambda_nm <= 0.0 {
            return Err(Error::Domain(format!(
                "cutoff wavelength must be finite and positive, got {lambda_nm}"
            )));
        }
        Scenario::new(
            radius_um * 1e-6,
            2.0 * std::f64::consts::PI / (lambda_nm * 1e-9),
        )
    }

    #[inline]
    pub fn radius_m(&self) -> f64 {
        self.radius_m
    }

    pub fn radius_um(&self) -> f64 {
        self.radius_m * 1e6
    }

    /// Wavenumber cutoff `K` in rad/m.
    #[inline]
    pub fn cutoff_per_m(&self) -> f64 {
        self.cutoff_per_m
    }

    /// Cutoff wavelength `2π/K` in nm.
    pub fn cutoff_wavelength_nm(&self) -> f64 {
        2.0 * std::f64::consts::PI / self.cutoff_per_m * 1e9
    }

    /// Dimensionless cutoff `x_max = R K`.
    #[inline]
    pub fn x_max(&self) -> f64 {
        self.radius_m * self.cutoff_per_m
    }

    /// `ħcK` in eV.
    pub fn hck_ev(&self) -> f64 {
        crate::HBAR_C_EV_NM * self.cutoff_per_m * 1e-9
    }
}

/// Whether the kernel carries the exact `|A_ν(y)|²` weight or its unit mean.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum AFactor {
    /// `w_l = 1`: the period-mean substitution (default pipeline).
    #[default]
    Unit,
    /// `w_l = |A_ν(y)|²` from the exact wall matching.
    Exact,
}

impl std::fmt::Display for AFactor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AFactor::Unit => write!(f, "unit"),
            AFactor::Exact => write!(f, "exact"),
        }
    }
}

/// How the partial-wave sum is cut off.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StopRule {
    /// Sum until the large-order tail bound certifies `tail < tail_epsilon`.
    Adaptive,
    /// Sum exactly `l = 1..=l_max` (refused when manifestly too short).
    Fixed(u32),
}

/// Truncation policy for the partial-wave sums.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TruncationPolicy {
    rule: StopRule,
    tail_epsilon: f64,
}

impl TruncationPolicy {
    pub const DEFAULT_TAIL_EPSILON: f64 = 1e-8;

    pub fn adaptive(tail_epsilon: f64) -> Result<Self> {
        if !(tail_epsilon > 0.0 && tail_epsilon <= 1e-3) {
            return Err(Error::Domain(format!(
                "tail_epsilon must lie in (0, 1e-3], got {tail_epsilon}"
            )));
        }
        Ok(Self {
            rule: StopRule::Adaptive,
            tail_epsilon,
        })
    }

    pub fn fixed(l_max: u32, tail_epsilon: f64) -> Result<Self> {
        if l_max < 1 {
            return Err(Error::Domain("fixed l_max must be >= 1".into()));
        }
        if !(tail_epsilon > 0.0 && tail_epsilon <= 1e-3) {
            return Err(Error::Domain(format!(
                "tail_epsilon must lie in (0, 1e-3], got {tail_epsilon}"
            )));
        }
        Ok(Self {
            rule: StopRule::Fixed(l_max),
            tail_epsilon,
        })
    }

    pub fn rule(&self) -> StopRule {
        self.rule
    }

    pub fn tail_epsilon(&self) -> f64 {
        self.tail_epsilon
    }
}

impl Default for TruncationPolicy {
    fn default() -> Self {
        Self {
            rule: StopRule::Adaptive,
            tail_epsilon: Self::DEFAULT_TAIL_EPSILON,
        }
    }
}

/// Largest angular momentum an emitted photon can carry: `⌊R K⌋`.
pub fn l_max_physical(scenario: &Scenario) -> u64 {
    scenario.x_max().floor() as u64
}

/// `|β(x, y)|²` in split form: the dimensionless factor and the `R²/c²` scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BetaSquared {
    /// Dimensionless `β₀²(x, y)`.
    pub beta0_sq: f64,
    /// `(R/c)²` in s², so that `value_s2 = beta0_sq · scale_s2`.
    pub scale_s2: f64,
}

impl BetaSquared {
    /// `|β|²` in seconds².
    pub fn value_s2(&self) -> f64 {
        self.beta0_sq * self.scale_s2
    }
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v <= 0.0 {
        return Err(Error::Domain(format!(
            "{name} must be finite and positive, got {v}"
        )));
    }
    Ok(())
}

/// Relative half-width of the diagonal strip where the summand switches to
/// the analytic limit: `|x - y| < 1e-6 max(1, x)`.
fn diagonal_tolerance(x: f64) -> f64 {
    1e-6 * x.max(1.0)
}

/// log of the large-order estimate of one (unit-weight) term of `F`:
/// `t(l) ≈ (2l+1) [ (xy/(ν(ν+1)))^ν (e/2)^{2ν+1} / (2π ν^{1/2} (ν+1)^{3/2}) ]²`.
/// The `(x² - y²)²` of the asymptotic pseudo-Wronskian cancels against the
/// denominator, so the same estimate serves on and off the diagonal.
pub(crate) fn log_tail_term(l: u32, xy: f64) -> f64 {
    let nu = l as f64 + 0.5;
    let half_e = 0.5 * std::f64::consts::E;
    let ln_w = nu * (xy / (nu * (nu + 1.0))).ln() + (2.0 * nu + 1.0) * half_e.ln()
        - (2.0 * std::f64::consts::PI).ln()
        - 0.5 * nu.ln()
        - 1.5 * (nu + 1.0).ln();
    (2.0 * l as f64 + 1.0).ln() + 2.0 * ln_w
}

/// Envelope of the exact-A weight for tail bounding: `|A_ν|² ≲ 4 (n_l/n_g)^{2ν+1}`.
fn log_a_weight_bound(l: u32, media: &Media, a_factor: AFactor) -> f64 {
    match a_factor {
        AFactor::Unit => 0.0,
        AFactor::Exact => {
            let r = (media.n_liquid() / media.n_gas()).max(media.n_gas() / media.n_liquid());
            (2.0 * (l as f64 + 0.5) + 1.0) * r.ln() + 4.0f64.ln()
        }
    }
}

/// One term of the `F` sum (unit weight), off- or on-diagonal.
struct KernelTerms<'a> {
    on_diagonal: bool,
    x: f64,
    y: f64,
    s: f64,
    jx: &'a [f64],
    jy: &'a [f64],
    js: &'a [f64],
}

impl KernelTerms<'_> {
    /// The amplitude whose square (times `2l+1` and the A-weight) is the term.
    fn amplitude(&self, l: usize) -> f64 {
        if self.on_diagonal {
            pseudo_wronskian_diagonal_from_array(l, self.s, self.js) / (self.x + self.y)
        } else {
            pseudo_wronskian_from_arrays(l, self.x, self.y, self.jx, self.jy)
                / ((self.x * self.x) - (self.y * self.y))
        }
    }
}

/// The kernel `F(x, y)`: truncated sum over partial waves.
pub fn f_exact(
    x: f64,
    y: f64,
    policy: &TruncationPolicy,
    media: &Media,
    a_factor: AFactor,
) -> Result<f64> {
    check_positive("x", x)?;
    check_positive("y", y)?;
    if x > MAX_ARGUMENT || y > MAX_ARGUMENT {
        return Err(Error::Range(format!(
            "arguments ({x}, {y}) exceed supported maximum {MAX_ARGUMENT}"
        )));
    }
    let hi = x.max(y);
    let on_diagonal = (x - y).abs() < diagonal_tolerance(x);
    let s = 0.5 * (x + y);
    let xy = if on_diagonal { s * s } else { x * y };
    let l_floor = (hi.ceil() as u32 + 10).max(11);

    let l_cap = match policy.rule() {
        StopRule::Fixed(l_max) => {
            if (l_max as f64) < hi {
                return Err(Error::Truncation(format!(
                    "fixed l_max = {l_max} is below max(x, y) = {hi}; the truncated sum would \
                     miss the oscillatory partial waves entirely"
                )));
            }
            l_max
        }
        StopRule::Adaptive => MAX_ORDER,
    };

    // Bessel arrays up to a working bound, extended on demand in the adaptive
    // case. Index l+1 is consumed by the pseudo-Wronskian at mode l.
    let mut l_arr = match policy.rule() {
        StopRule::Fixed(l_max) => l_max,
        StopRule::Adaptive => (l_floor + 40).min(l_cap),
    };

    loop {
        let (jx, jy, js);
        if on_diagonal {
            js = bessel_j_half_array(l_arr, s)?;
            jx = Vec::new();
            jy = Vec::new();
        } else {
            jx = bessel_j_half_array(l_arr + 1, x)?;
            jy = bessel_j_half_array(l_arr + 1, y)?;
            js = Vec::new();
        }
        let terms = KernelTerms {
            on_diagonal,
            x,
            y,
            s,
            jx: &jx,
            jy: &jy,
            js: &js,
        };

        let mut sum = 0.0;
        for l in 1..=l_arr {
            let weight_sqrt = match a_factor {
                AFactor::Unit => 1.0,
                AFactor::Exact => {
                    let mc = matching_coefficients(media, ModeIndex::new(l)?, y)?;
                    mc.a
                }
            };
            // Multiply amplitude by the weight before squaring so that a huge
            // |A| against a tiny pseudo-Wronskian stays finite.
            let amp = weight_sqrt * terms.amplitude(l as usize);
            sum += (2.0 * l as f64 + 1.0) * amp * amp;

            if let StopRule::Adaptive = policy.rule() {
                let nu = l as f64 + 0.5;
                if l >= l_floor && nu * nu > xy {
                    // Geometric bound on the tail from the large-order form.
                    let lt1 = log_tail_term(l + 1, xy) + log_a_weight_bound(l + 1, media, a_factor);
                    let lt2 = log_tail_term(l + 2, xy) + log_a_weight_bound(l + 2, media, a_factor);
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
                        "adaptive sum for F({x}, {y}) not certified below tail_epsilon = {} by \
                         l = {l_cap}",
                        policy.tail_epsilon()
                    )));
                }
                l_arr = (l_arr * 2).min(l_cap);
            }
        }
    }
}

/// `|β(x, y)|²` assembled from the kernel, in split dimensionless/scale form.
pub fn beta_squared(
    media: &Media,
    scenario: &Scenario,
    x: f64,
    y: f64,
    policy: &TruncationPolicy,
    a_factor: AFactor,
) -> Result<BetaSquared> {
    check_positive("x", x)?;
    check_positive("y", y)?;
    let scale = scenario.radius_m() / SPEED_OF_LIGHT_M_PER_S;
    let (ng, nl) = (media.n_gas(), media.n_liquid());
    if media.is_uniform() {
        // No dielectric contrast, no pair creation; skip the kernel entirely.
        return Ok(BetaSquared {
            beta0_sq: 0.0,
            scale_s2: scale * scale,
        });
    }
    let contrast = (nl * nl - ng * ng).powi(2) / (nl * nl * ng * ng);
    let geometry = (y * y / (ng * x + nl * y)).powi(2);
    let f = f_exact(x, y, policy, media, a_factor)?;
    Ok(BetaSquared {
        beta0_sq: contrast * geometry * f,
        scale_s2: scale * scale,
    })
}

/// Closed form of `∫_0^∞ u G_out(x u) G_in(u) du` in units of `R²`.
///
/// Exposed for validation and documentation; the spectral pipeline goes
/// through [`beta_squared`] directly, which folds this expression in. Errors
/// at the non-removable `n_g x = n_l y` resonance (see module docs); the
/// `x ≈ y` singularity is removable and handled through the diagonal limit.
pub fn overlap_integral_closed(media: &Media, m: ModeIndex, x: f64, y: f64) -> Result<f64> {
    check_positive("x", x)?;
    check_positive("y", y)?;
    let (ng, nl) = (media.n_gas(), media.n_liquid());
    if media.is_uniform() {
        return Ok(0.0);
    }
    let resonance = ng * x - nl * y;
    if resonance.abs() < 1e-9 * (ng * x).max(nl * y) {
        return Err(Error::Domain(format!(
            "overlap integral is δ-singular at n_g x = n_l y (x = {x}, y = {y}): equal \
             frequencies in the same medium do not have a finite overlap"
        )));
    }
    let mc = matching_coefficients(media, m, y)?;
    if mc.suppressed {
        return Ok(0.0);
    }
    // W̃_ν(x, y)/(x² - y²), with the removable diagonal handled analytically:
    // W̃ ≈ -(x - y) · diag, so the quotient tends to -diag(s)/(x + y).
    let l = m.l() as usize;
    let w_over_dx2 = if (x - y).abs() < diagonal_tolerance(x) {
        let s = 0.5 * (x + y);
        let js = bessel_j_half_array(m.l(), s)?;
        -pseudo_wronskian_diagonal_from_array(l, s, &js) / (x + y)
    } else {
        let jx = bessel_j_half_array(m.l() + 1, x)?;
        let jy = bessel_j_half_array(m.l() + 1, y)?;
        pseudo_wronskian_from_arrays(l, x, y, &jx, &jy) / (x * x - y * y)
    };
    let denom = ng * ng * x * x - nl * nl * y * y;
    Ok(-mc.a * (nl * nl - ng * ng) * y * y * w_over_dx2 / denom)
}

/// Residual of the finite-interval overlap identity
/// `∫_a^b u J_ν(λu) J_ν(μu) du = [u W_{λμ}(u)/(μ² - λ²)]_a^b`,
/// comparing adaptive quadrature against the closed form.
///
/// This is the module's core self-verification oracle: the left side knows
/// nothing about pseudo-Wronskians, the right side nothing about quadrature.
/// Quadrature non-convergence surfaces as [`Error::Quadrature`], distinct
/// from a large returned residual (an identity violation).
pub fn overlap_identity_check(m: ModeIndex, lambda: f64, mu: f64, a: f64, b: f64) -> Result<f64> {
    check_positive("lambda", lambda)?;
    check_positive("mu", mu)?;
    if !(a >= 0.0 && b > a) {
        return Err(Error::Domain(format!(
            "need 0 <= a < b, got a = {a}, b = {b}"
        )));
    }
    if (lambda - mu).abs() < 1e-12 * lambda.max(mu) {
        return Err(Error::Domain(
            "overlap identity requires distinct eigenvalues λ ≠ μ".into(),
        ));
    }
    if lambda.max(mu) * b > MAX_ARGUMENT {
        return Err(Error::Range(format!(
            "max eigenvalue times b = {} exceeds supported argument range",
            lambda.max(mu) * b
        )));
    }
    let l = m.l() as usize;
    let nu = m.nu();

    // u W_{λμ}(u)/(μ² - λ²), derivatives with respect to u eliminated through
    // the recurrence; vanishes at u = 0 for ν >= 3/2.
    let boundary = |u: f64| -> Result<f64> {
        if u == 0.0 {
            return Ok(0.0);
        }
        let jl = bessel_j_half_array(m.l() + 1, lambda * u)?;
        let jm = bessel_j_half_array(m.l() + 1, mu * u)?;
        let djl = lambda * (nu / (lambda * u) * jl[l] - jl[l + 1]);
        let djm = mu * (nu / (mu * u) * jm[l] - jm[l + 1]);
        Ok(u * (djl * jm[l] - djm * jl[l]) / (mu * mu - lambda * lambda))
    };
    let closed = boundary(b)? - boundary(a)?;

    let integrand = |u: f64| -> f64 {
        if u == 0.0 {
            return 0.0;
        }
        // In range: u <= b and max eigenvalue * b was checked above.
        let jl = bessel_j_half_array(m.l(), lambda * u).expect("checked range");
        let jm = bessel_j_half_array(m.l(), mu * u).expect("checked range");
        u * jl[l] * jm[l]
    };
    // Initial panels resolve the fastest oscillation; halving does the rest.
    let width = (std::f64::consts::PI / lambda.max(mu)).min(0.5);
    let (quad, _) = integrate_to_tolerance(a, b, integrand, width, 1e-12, 12)?;

    Ok((quad - closed).abs() / closed.abs().max(1e-300))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn media() -> Media {
        Media::new(1.0, 1.3).unwrap()
    }

    fn policy() -> TruncationPolicy {
        TruncationPolicy::default()
    }

    #[test]
    fn scenario_basics() {
        let s = Scenario::from_radius_um_cutoff_nm(0.5, 200.0).unwrap();
        assert_relative_eq!(s.x_max(), std::f64::consts::PI * 5.0, max_relative = 1e-12);
        assert_relative_eq!(s.radius_um(), 0.5, max_relative = 1e-12);
        assert_relative_eq!(s.cutoff_wavelength_nm(), 200.0, max_relative = 1e-12);
        assert!(Scenario::new(-1.0, 2.0).is_err());
        assert!(Scenario::from_radius_um_cutoff_nm(1.0, 0.0).is_err());
    }

    #[test]
    fn l_max_physical_presets() {
        let lmax = |r_um: f64, lam: f64| {
            l_max_physical(&Scenario::from_radius_um_cutoff_nm(r_um, lam).unwrap())
        };
        assert_eq!(lmax(0.5, 200.0), 15);
        assert_eq!(lmax(4.5, 200.0), 141);
        assert_eq!(lmax(45.0, 200.0), 1413);
    }

    #[test]
    fn f_reference_values() {
        // mpmath (dps = 60) references for the unit-A kernel.
        let cases = [
            (3.0, 2.0, 0.0201163089090507865),
            (7.0, 3.0, 0.00194695718749040634),
            (12.0, 11.0, 0.0397822493827085993),
        ];
        for (x, y, want) in cases {
            let got = f_exact(x, y, &policy(), &media(), AFactor::Unit).unwrap();
            assert_relative_eq!(got, want, max_relative = 1e-11);
        }
    }

    #[test]
    fn f_symmetry() {
        for (x, y) in [(3.0, 2.0), (10.0, 4.5), (25.0, 24.0), (1.5, 0.3)] {
            let a = f_exact(x, y, &policy(), &media(), AFactor::Unit).unwrap();
            let b = f_exact(y, x, &policy(), &media(), AFactor::Unit).unwrap();
            assert_relative_eq!(a, b, max_relative = 1e-12);
        }
    }

    #[test]
    fn f_vanishes_at_origin() {
        let f = f_exact(0.05, 0.05, &policy(), &media(), AFactor::Unit).unwrap();
        assert!(f < 1e-6, "F(0.05, 0.05) = {f}");
    }

    #[test]
    fn f_plateau_at_large_diagonal() {
        let f = f_exact(30.0, 30.0, &policy(), &media(), AFactor::Unit).unwrap();
        let plateau = 1.0 / (2.0 * std::f64::consts::PI.powi(2));
        assert!((f / plateau - 1.0).abs() < 0.05, "F(30,30) = {f}");
    }

    #[test]
    fn f_diagonal_continuity() {
        for &x in &[2.0, 5.0, 10.0] {
            let on = f_exact(x, x, &policy(), &media(), AFactor::Unit).unwrap();
            for dy in [1e-7, -1e-7] {
                let off = f_exact(x, x + dy, &policy(), &media(), AFactor::Unit).unwrap();
                assert!(
                    ((off - on) / on).abs() < 1e-4,
                    "x = {x}, dy = {dy}: {on} vs {off}"
                );
            }
        }
    }

    #[test]
    fn f_continuous_across_diagonal_switch() {
        // Values straddling the |x - y| = 1e-6·max(1,x) strip boundary agree.
        let x = 5.0;
        let inside = f_exact(x, x + 4.9e-6, &policy(), &media(), AFactor::Unit).unwrap();
        let outside = f_exact(x, x + 5.1e-6, &policy(), &media(), AFactor::Unit).unwrap();
        assert_relative_eq!(inside, outside, max_relative = 1e-6);
    }

    #[test]
    fn fixed_rule_matches_adaptive_and_rejects_short_sums() {
        let adaptive = f_exact(6.0, 4.0, &policy(), &media(), AFactor::Unit).unwrap();
        let fixed = f_exact(
            6.0,
            4.0,
            &TruncationPolicy::fixed(40, 1e-8).unwrap(),
            &media(),
            AFactor::Unit,
        )
        .unwrap();
        assert_relative_eq!(adaptive, fixed, max_relative = 1e-9);
        let short = TruncationPolicy::fixed(4, 1e-8).unwrap();
        assert!(matches!(
            f_exact(6.0, 4.0, &short, &media(), AFactor::Unit),
            Err(Error::Truncation(_))
        ));
    }

    #[test]
    fn truncation_soundness_spot() {
        // Doubling l beyond the adaptive stop must not move F by more than
        // tail_epsilon (relative).
        let eps = 1e-8;
        let pol = TruncationPolicy::adaptive(eps).unwrap();
        for (x, y) in [(3.0, 1.0), (12.0, 9.0), (27.0, 26.5)] {
            let f = f_exact(x, y, &pol, &media(), AFactor::Unit).unwrap();
            let long = TruncationPolicy::fixed(2 * (x.max(y).ceil() as u32 + 30), eps).unwrap();
            let f_long = f_exact(x, y, &long, &media(), AFactor::Unit).unwrap();
            assert!(((f - f_long) / f_long).abs() < eps, "({x}, {y})");
        }
    }

    #[test]
    fn exact_a_factor_stays_close_to_unit() {
        // |A|² oscillates about mean 1, so the two kernels track each other.
        let a = f_exact(6.0, 5.0, &policy(), &media(), AFactor::Exact).unwrap();
        let u = f_exact(6.0, 5.0, &policy(), &media(), AFactor::Unit).unwrap();
        let ratio = a / u;
        assert!(ratio > 0.5 && ratio < 2.0, "ratio = {ratio}");
    }

    #[test]
    fn beta_squared_uniform_media_is_zero() {
        let m = Media::new(1.3, 1.3).unwrap();
        let s = Scenario::from_radius_um_cutoff_nm(1.0, 300.0).unwrap();
        let b = beta_squared(&m, &s, 2.0, 3.0, &policy(), AFactor::Unit).unwrap();
        assert_eq!(b.beta0_sq, 0.0);
        assert_eq!(b.value_s2(), 0.0);
    }

    #[test]
    fn beta_squared_prefactor_arithmetic() {
        // β₀²(5, 5) = (0.69²/1.69) · (25/11.5)² · F(5, 5).
        let m = media();
        let s = Scenario::from_radius_um_cutoff_nm(1.0, 300.0).unwrap();
        let f55 = f_exact(5.0, 5.0, &policy(), &m, AFactor::Unit).unwrap();
        let want = (0.69f64.powi(2) / 1.69) * (25.0 / 11.5f64).powi(2) * f55;
        let got = beta_squared(&m, &s, 5.0, 5.0, &policy(), AFactor::Unit).unwrap();
        assert_relative_eq!(got.beta0_sq, want, max_relative = 1e-12);
        let r_over_c = s.radius_m() / crate::SPEED_OF_LIGHT_M_PER_S;
        assert_relative_eq!(got.scale_s2, r_over_c * r_over_c, max_relative = 1e-15);
    }

    #[test]
    fn beta_squared_symmetrized_kernel() {
        // β₀²(x,y) (n_g x + n_l y)²/y⁴ = contrast · F(x, y) is symmetric.
        let m = media();
        let s = Scenario::from_radius_um_cutoff_nm(1.0, 300.0).unwrap();
        let sym = |x: f64, y: f64| {
            let b = beta_squared(&m, &s, x, y, &policy(), AFactor::Unit).unwrap();
            b.beta0_sq * (1.0 * x + 1.3 * y).powi(2) / y.powi(4)
        };
        assert_relative_eq!(sym(4.0, 7.0), sym(7.0, 4.0), max_relative = 1e-11);
    }

    #[test]
    fn overlap_closed_uniform_media_vanishes() {
        let m = Media::new(1.2, 1.2).unwrap();
        let v = overlap_integral_closed(&m, ModeIndex::new(1).unwrap(), 3.0, 2.0).unwrap();
        assert_eq!(v, 0.0);
    }

    #[test]
    fn overlap_closed_matches_piecewise_quadrature() {
        // Brute-force [0, 1] ∪ [1, U] decomposition of the overlap, with the
        // analytic tail beyond U from the same wall-term identity.
        let m = media();
        let mi = ModeIndex::new(1).unwrap();
        let (x, y) = (3.0, 2.0);
        let w = m.exterior_argument(y);
        let mc = matching_coefficients(&m, mi, y).unwrap();
        let big_u = 200.0;

        let g_in = |u: f64| crate::matching::radial_mode_in(&m, mi, y, u).unwrap();
        let g_out = |u: f64| crate::matching::radial_mode_out(mi, x, u).unwrap();
        let (quad, _) =
            integrate_to_tolerance(0.0, big_u, |u| u * g_in(u) * g_out(u), 0.5, 1e-12, 10).unwrap();

        // Tail over [U, ∞): boundary term at U of the exterior piece (the
        // term at infinity integrates to zero distributionally).
        let l = 1usize;
        let nu = mi.nu();
        let jx = crate::bessel::bessel_j_half_array(2, x * big_u).unwrap();
        let jw = crate::bessel::bessel_j_half_array(2, w * big_u).unwrap();
        let nw = crate::bessel::bessel_n_half_array(2, w * big_u).unwrap();
        let djx = x * (nu / (x * big_u) * jx[l] - jx[l + 1]);
        let g_w = mc.b * jw[l] + mc.c * nw[l];
        let dg_w = w
            * (nu / (w * big_u) * (mc.b * jw[l] + mc.c * nw[l])
                - (mc.b * jw[l + 1] + mc.c * nw[l + 1]));
        let tail = -big_u * (djx * g_w - dg_w * jx[l]) / (w * w - x * x);

        let closed = overlap_integral_closed(&m, mi, x, y).unwrap();
        assert_relative_eq!(quad + tail, closed, max_relative = 1e-6);
    }

    #[test]
    fn overlap_closed_rejects_resonance() {
        let m = media();
        // n_g x = n_l y at x = 2.6, y = 2.0.
        assert!(matches!(
            overlap_integral_closed(&m, ModeIndex::new(1).unwrap(), 2.6, 2.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn overlap_identity_examples() {
        let r1 = overlap_identity_check(ModeIndex::new(1).unwrap(), 2.0, 3.0, 0.0, 1.0).unwrap();
        assert!(r1 < 1e-8, "residual = {r1}");
        let r2 = overlap_identity_check(ModeIndex::new(5).unwrap(), 10.0, 11.0, 0.0, 5.0).unwrap();
        assert!(r2 < 1e-8, "residual = {r2}");
    }

    #[test]
    fn overlap_identity_rejects_equal_eigenvalues() {
        assert!(matches!(
            overlap_identity_check(ModeIndex::new(1).unwrap(), 2.0, 2.0, 0.0, 1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn junction_identity_at_the_wall() {
        // A W̃[J(xu), J(yu)] = B W̃[J(xu), J(wu)] + C W̃[J(xu), N(wu)] at u = 1:
        // continuity of W[G_out, G_in] across the wall.
        let m = media();
        for (l, x, y) in [(1u32, 3.0, 2.0), (4, 9.0, 7.5), (9, 21.0, 15.0)] {
            let mi = ModeIndex::new(l).unwrap();
            let w = m.exterior_argument(y);
            let mc = matching_coefficients(&m, mi, y).unwrap();
            let li = l as usize;
            let jx = bessel_j_half_array(l + 1, x).unwrap();
            let jy = bessel_j_half_array(l + 1, y).unwrap();
            let jw = bessel_j_half_array(l + 1, w).unwrap();
            let nw = crate::bessel::bessel_n_half_array(l + 1, w).unwrap();
            let w_jj_y = pseudo_wronskian_from_arrays(li, x, y, &jx, &jy);
            let w_jj_w = pseudo_wronskian_from_arrays(li, x, w, &jx, &jw);
            // Mixed J–N pseudo-Wronskian with the same recurrence elimination.
            let w_jn_w = x * nw[li] * jx[li + 1] - w * jx[li] * nw[li + 1];
            let lhs = mc.a * w_jj_y;
            let rhs = mc.b * w_jj_w + mc.c * w_jn_w;
            assert_relative_eq!(lhs, rhs, max_relative = 1e-9);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]
        #[test]
        fn f_symmetry_property(
            x in 0.2f64..30.0,
            y in 0.2f64..30.0,
        ) {
            let a = f_exact(x, y, &policy(), &media(), AFactor::Unit).unwrap();
            let b = f_exact(y, x, &policy(), &media(), AFactor::Unit).unwrap();
            let scale = a.abs().max(b.abs()).max(1e-300);
            prop_assert!((a - b).abs() <= 1e-11 * scale);
            prop_assert!(a >= 0.0);
        }
    }
}
