//! Mode matching at the bubble wall.
//!
//! The bubble-present radial mode at angular momentum `l` (order `ν = l + 1/2`)
//! is regular at the origin and a free combination outside:
//!
//! ```text
//! G_in(u) = A J_ν(y u)                    u <= 1   (interior, u = r/R)
//!         = B J_ν(w u) + C N_ν(w u)       u >  1   (exterior)
//! ```
//!
//! with `y = n_gas ω_in R / c` the interior wall argument and
//! `w = (n_liquid/n_gas) y` the exterior one. Continuity of `G` and `G'` at
//! `u = 1` fixes `B/A` and `C/A`; the overall scale is set by `B² + C² = 1`,
//! which normalizes the mode to unit amplitude at large radius. Eliminating
//! derivatives through the Bessel recurrence, the linear solve reduces to two
//! mixed pseudo-Wronskians evaluated at the wall,
//!
//! ```text
//! P_JN = w J_ν(y) N_{ν+1}(w) - y J_{ν+1}(y) N_ν(w),
//! P_JJ = y J_ν(w) J_{ν+1}(y) - w J_ν(y) J_{ν+1}(w),
//! ```
//!
//! giving `A = (2/π) / sqrt(P_JN² + P_JJ²)`, `B = -P_JN / sqrt(...)`,
//! `C = -P_JJ / sqrt(...)` (the `2/π` is the true Wronskian
//! `W[J_ν, N_ν] = 2/(πz)` collapsing the exterior determinant). We fix the
//! sign convention `A > 0`; only `|A|²` enters the pair-creation kernel.
//!
//! For `ω → ∞` at fixed `l`, `|A|²` oscillates as
//!
//! ```text
//! |A|² ~ 2 n_g n_l / [n_g² + n_l² + (n_l² - n_g²) cos(2y - (ν + 1/2)π)]
//! ```
//!
//! between `n_g/n_l` and `n_l/n_g`, with period-average exactly 1 — which is
//! why the spectral pipeline may replace `|A|²` by 1 (`AFactor::Unit`) and
//! check the substitution a posteriori.
//!
//! Modes with `l` far above `y` are evanescent at the wall: both `P` values
//! underflow (or `N` overflows) and the mode cannot be excited at working
//! precision. Such modes are reported as `suppressed` with `A = 0`, `B = 1`,
//! `C = 0` rather than failing.

use serde::{Deserialize, Serialize};

use crate::bessel::{bessel_j_half_array, bessel_n_half_array, ModeIndex};
use crate::{Error, Result};

/// The refractive-index pair defining the dielectric contrast.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "MediaRepr", into = "MediaRepr")]
pub struct Media {
    n_gas: f64,
    n_liquid: f64,
}

#[derive(Serialize, Deserialize, Clone, Copy)]
struct MediaRepr {
    n_gas: f64,
    n_liquid: f64,
}

impl TryFrom<MediaRepr> for Media {
    type Error = Error;
    fn try_from(r: MediaRepr) -> Result<Self> {
        Media::new(r.n_gas, r.n_liquid)
    }
}

impl From<Media> for MediaRepr {
    fn from(m: Media) -> Self {
        MediaRepr {
            n_gas: m.n_gas,
            n_liquid: m.n_liquid,
        }
    }
}

impl Media {
    pub fn new(n_gas: f64, n_liquid: f64) -> Result<Self> {
        for (name, n) in [("n_gas", n_gas), ("n_liquid", n_liquid)] {
            if !n.is_finite() || n <= 0.0 {
                return Err(Error::Domain(format!(
                    "{name} must be finite and positive, got {n}"
                )));
            }
        }
        Ok(Self { n_gas, n_liquid })
    }

    #[inline]
    pub fn n_gas(&self) -> f64 {
        self.n_gas
    }

    #[inline]
    pub fn n_liquid(&self) -> f64 {
        self.n_liquid
    }

    /// Dielectric constant inside the bubble, `ε = n_gas²`.
    pub fn eps_inside(&self) -> f64 {
        self.n_gas * self.n_gas
    }

    /// Dielectric constant of the ambient liquid, `ε = n_liquid²`.
    pub fn eps_outside(&self) -> f64 {
        self.n_liquid * self.n_liquid
    }

    /// True when there is no dielectric discontinuity at all.
    pub fn is_uniform(&self) -> bool {
        self.n_gas == self.n_liquid
    }

    /// Exterior wall argument for a given interior one: `w = (n_l/n_g) y`.
    pub fn exterior_argument(&self, y: f64) -> f64 {
        self.n_liquid / self.n_gas * y
    }
}

/// Wall-matching amplitudes of one in-basis mode, normalized to `B² + C² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MatchingCoefficients {
    /// Interior amplitude (sign convention `a > 0`; zero when suppressed).
    pub a: f64,
    pub b: f64,
    pub c: f64,
    /// Mode evanescent at the wall beyond working precision; `{0, 1, 0}` was
    /// substituted and the mode contributes nothing.
    pub suppressed: bool,
}

fn check_positive(name: &str, v: f64) -> Result<()> {
    if !v.is_finite() || v <= 0.0 {
        return Err(Error::Domain(format!(
            "{name} must be finite and positive, got {v}"
        )));
    }
    Ok(())
}

/// Solve the wall-matching conditions for mode `m` at interior argument `y`.
pub fn matching_coefficients(media: &Media, m: ModeIndex, y: f64) -> Result<MatchingCoefficients> {
    let (p_jn, p_jj) = match wall_wronskians(media, m, y)? {
        Some(p) => p,
        None => {
            return Ok(MatchingCoefficients {
                a: 0.0,
                b: 1.0,
                c: 0.0,
                suppressed: true,
            })
        }
    };
    let norm = p_jn.hypot(p_jj);
    if norm == 0.0 || !norm.is_finite() {
        return Ok(MatchingCoefficients {
            a: 0.0,
            b: 1.0,
            c: 0.0,
            suppressed: true,
        });
    }
    Ok(MatchingCoefficients {
        a: std::f64::consts::FRAC_2_PI / norm,
        b: -p_jn / norm,
        c: -p_jj / norm,
        suppressed: false,
    })
}

/// The two wall pseudo-Wronskians `(P_JN, P_JJ)`, or `None` for a mode that is
/// numerically evanescent (non-finite or fully underflowed Bessel data).
fn wall_wronskians(media: &Media, m: ModeIndex, y: f64) -> Result<Option<(f64, f64)>> {
    check_positive("y", y)?;
    let w = media.exterior_argument(y);
    if w > crate::bessel::MAX_ARGUMENT {
        return Err(Error::Range(format!(
            "exterior argument w = {w} exceeds supported maximum"
        )));
    }
    let l = m.l() as usize;
    let jy = bessel_j_half_array(m.l() + 1, y)?;
    let jw = bessel_j_half_array(m.l() + 1, w)?;
    let nw = bessel_n_half_array(m.l() + 1, w)?;
    let p_jn = w * jy[l] * nw[l + 1] - y * jy[l + 1] * nw[l];
    let p_jj = y * jw[l] * jy[l + 1] - w * jy[l] * jw[l + 1];
    if !p_jn.is_finite() || !p_jj.is_finite() {
        return Ok(None);
    }
    Ok(Some((p_jn, p_jj)))
}

/// `|A_ν(y)|²` from the exact matching solve (0 for suppressed modes).
pub fn a_squared(media: &Media, m: ModeIndex, y: f64) -> Result<f64> {
    let mc = matching_coefficients(media, m, y)?;
    Ok(mc.a * mc.a)
}

/// Large-argument form of `|A_ν(y)|²`.
///
/// Accurate once `y` exceeds `ν` by a few; accepted for any `y > 0`. The
/// phase argument is the interior `y = n_gas ω_in R/c`.
pub fn a_squared_asymptotic(media: &Media, m: ModeIndex, y: f64) -> Result<f64> {
    check_positive("y", y)?;
    let (ng, nl) = (media.n_gas(), media.n_liquid());
    let phase = 2.0 * y - (m.nu() + 0.5) * std::f64::consts::PI;
    Ok(2.0 * ng * nl / (ng * ng + nl * nl + (nl * nl - ng * ng) * phase.cos()))
}

/// Exact mean of [`a_squared_asymptotic`] over one oscillation period.
///
/// `∮ dz / (a + b cos z) = 2π / sqrt(a² - b²)` with `a = n_g² + n_l²`,
/// `b = n_l² - n_g²` gives `sqrt(a² - b²) = 2 n_g n_l`, so the mean is
/// identically 1 for every media pair.
pub fn a_squared_period_mean(_media: &Media) -> f64 {
    1.0
}

/// In-basis radial profile `G_in` at scaled radius `u = r/R`.
pub fn radial_mode_in(media: &Media, m: ModeIndex, y: f64, u: f64) -> Result<f64> {
    check_positive("y", y)?;
    if !u.is_finite() || u < 0.0 {
        return Err(Error::Domain(format!("u must be >= 0, got {u}")));
    }
    if u == 0.0 {
        return Ok(0.0); // J_ν(0) = 0 for ν > 0
    }
    let mc = matching_coefficients(media, m, y)?;
    let l = m.l() as usize;
    if u <= 1.0 {
        let j = bessel_j_half_array(m.l(), y * u)?;
        Ok(mc.a * j[l])
    } else {
        let w = media.exterior_argument(y);
        let j = bessel_j_half_array(m.l(), w * u)?;
        let n = bessel_n_half_array(m.l(), w * u)?;
        Ok(mc.b * j[l] + mc.c * n[l])
    }
}

/// Out-basis radial profile `G_out(u) = J_ν(x u)`.
pub fn radial_mode_out(m: ModeIndex, x: f64, u: f64) -> Result<f64> {
    check_positive("x", x)?;
    if !u.is_finite() || u < 0.0 {
        return Err(Error::Domain(format!("u must be >= 0, got {u}")));
    }
    if u == 0.0 {
        return Ok(0.0);
    }
    let l = m.l() as usize;
    Ok(bessel_j_half_array(m.l(), x * u)?[l])
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn media() -> Media {
        Media::new(1.0, 1.3).unwrap()
    }

    #[test]
    fn media_validation() {
        assert!(Media::new(0.0, 1.3).is_err());
        assert!(Media::new(1.0, -1.0).is_err());
        assert!(Media::new(f64::NAN, 1.0).is_err());
        let m = media();
        assert_eq!(m.eps_inside(), 1.0);
        assert_relative_eq!(m.eps_outside(), 1.69, max_relative = 1e-15);
    }

    #[test]
    fn uniform_media_is_trivial() {
        let m = Media::new(1.3, 1.3).unwrap();
        for (l, y) in [(1u32, 0.7), (2, 5.0), (7, 20.0)] {
            let mc = matching_coefficients(&m, ModeIndex::new(l).unwrap(), y).unwrap();
            assert_relative_eq!(mc.a, 1.0, max_relative = 1e-12);
            assert_relative_eq!(mc.b, 1.0, max_relative = 1e-12);
            assert!(mc.c.abs() < 1e-12);
            assert!(!mc.suppressed);
        }
    }

    #[test]
    fn normalization_imposed() {
        let m = media();
        for (l, y) in [(1u32, 2.0), (3, 7.5), (10, 30.0), (5, 1.0)] {
            let mc = matching_coefficients(&m, ModeIndex::new(l).unwrap(), y).unwrap();
            assert_relative_eq!(mc.b * mc.b + mc.c * mc.c, 1.0, max_relative = 1e-10);
            assert!(mc.a > 0.0);
        }
    }

    #[test]
    fn a_squared_reference_values() {
        // mpmath (dps = 60) references.
        let m = media();
        let cases = [
            (1u32, 5.0, 1.1393942334005855),
            (2, 8.0, 0.843074411478430457),
            (10, 20.0, 0.928022903701157),
        ];
        for (l, y, want) in cases {
            let got = a_squared(&m, ModeIndex::new(l).unwrap(), y).unwrap();
            assert_relative_eq!(got, want, max_relative = 1e-11);
        }
    }

    #[test]
    fn asymptotic_band_and_value() {
        let m = media();
        // At cos = +1 the asymptotic form is 2 n_g n_l / (1 + 1.69 + 0.69).
        let mi = ModeIndex::new(1).unwrap();
        // phase = 2y - 2π = 0 at y = π.
        let v = a_squared_asymptotic(&m, mi, PI).unwrap();
        assert_relative_eq!(v, 2.0 * 1.3 / (1.0 + 1.69 + 0.69), max_relative = 1e-12);
        // Exact |A|² stays within the asymptotic band [n_g/n_l, n_l/n_g] once
        // y is large; this also lies inside any looser quoted envelope.
        let (lo, hi) = (1.0 / 1.3, 1.3);
        let mut y = 60.0;
        while y < 80.0 {
            let a2 = a_squared(&m, mi, y).unwrap();
            assert!(a2 > lo - 0.01 && a2 < hi + 0.01, "a2({y}) = {a2}");
            y += 0.37;
        }
    }

    #[test]
    fn asymptotic_equals_one_for_uniform_media() {
        let m = Media::new(1.2, 1.2).unwrap();
        let mi = ModeIndex::new(3).unwrap();
        for &y in &[0.5, 3.0, 17.0] {
            assert_relative_eq!(
                a_squared_asymptotic(&m, mi, y).unwrap(),
                1.0,
                max_relative = 1e-14
            );
        }
    }

    #[test]
    fn period_mean_from_quadrature() {
        // Mean of the asymptotic form over one exact period (π in y) is 1.
        let m = media();
        let mi = ModeIndex::new(1).unwrap();
        let rule = crate::quadrature::PanelRule::new(0.25).unwrap();
        let y0 = 40.0;
        let mean = rule.integrate(y0, y0 + PI, |y| a_squared_asymptotic(&m, mi, y).unwrap()) / PI;
        assert_relative_eq!(mean, a_squared_period_mean(&m), max_relative = 1e-9);
    }

    #[test]
    fn radial_mode_continuity_at_wall() {
        let m = media();
        for (l, y) in [(1u32, 3.0), (4, 11.0)] {
            let mi = ModeIndex::new(l).unwrap();
            let inner = radial_mode_in(&m, mi, y, 1.0).unwrap();
            let outer = radial_mode_in(&m, mi, y, 1.0 + 1e-14).unwrap();
            assert_relative_eq!(inner, outer, max_relative = 1e-10);
            // Derivative continuity via central differences straddling u = 1.
            let h = 1e-6;
            let dm = (radial_mode_in(&m, mi, y, 1.0).unwrap()
                - radial_mode_in(&m, mi, y, 1.0 - h).unwrap())
                / h;
            let dp = (radial_mode_in(&m, mi, y, 1.0 + h).unwrap()
                - radial_mode_in(&m, mi, y, 1.0).unwrap())
                / h;
            assert_relative_eq!(dm, dp, max_relative = 1e-4);
        }
    }

    #[test]
    fn radial_mode_uniform_media_is_plain_bessel() {
        let m = Media::new(1.3, 1.3).unwrap();
        let mi = ModeIndex::new(2).unwrap();
        for &u in &[0.3, 0.9, 1.4, 3.0] {
            let got = radial_mode_in(&m, mi, 5.0, u).unwrap();
            let want = crate::bessel::bessel_j_half(2, 5.0 * u).unwrap();
            assert_relative_eq!(got, want, max_relative = 1e-10);
        }
    }

    #[test]
    fn radial_mode_out_basics() {
        let mi = ModeIndex::new(1).unwrap();
        assert_relative_eq!(
            radial_mode_out(mi, PI, 1.0).unwrap(),
            std::f64::consts::SQRT_2 / PI,
            max_relative = 1e-13
        );
        assert_eq!(radial_mode_out(mi, PI, 0.0).unwrap(), 0.0);
        // Scaling: function of the product only.
        let a = radial_mode_out(mi, 4.0, 0.75).unwrap();
        let b = radial_mode_out(mi, 3.0, 1.0).unwrap();
        assert_relative_eq!(a, b, max_relative = 1e-12);
    }

    #[test]
    fn deep_suppression_flagged() {
        // l far above both wall arguments: N overflows, mode is evanescent.
        let m = media();
        let mc = matching_coefficients(&m, ModeIndex::new(400).unwrap(), 0.5).unwrap();
        assert!(mc.suppressed);
        assert_eq!(mc.a, 0.0);
        assert_eq!((mc.b, mc.c), (1.0, 0.0));
    }

    #[test]
    fn domain_errors() {
        let m = media();
        let mi = ModeIndex::new(1).unwrap();
        assert!(matching_coefficients(&m, mi, 0.0).is_err());
        assert!(matching_coefficients(&m, mi, -3.0).is_err());
        assert!(radial_mode_in(&m, mi, 2.0, -0.1).is_err());
        assert!(a_squared_asymptotic(&m, mi, 0.0).is_err());
    }

    proptest! {
        #[test]
        fn b_c_normalization_property(
            l in 1u32..20,
            y in 0.2f64..60.0,
            ng in 0.8f64..1.6,
            contrast in 0.05f64..0.8,
        ) {
            let media = Media::new(ng, ng + contrast).unwrap();
            let mc = matching_coefficients(&media, ModeIndex::new(l).unwrap(), y).unwrap();
            prop_assert!((mc.b * mc.b + mc.c * mc.c - 1.0).abs() < 1e-10);
            prop_assert!(mc.a >= 0.0);
        }
    }
}
