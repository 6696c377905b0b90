//! Photon production from a sudden refractive-index change in a dielectric bubble.
//!
//! A gas bubble of radius `R` sits in a liquid of refractive index `n_liquid`;
//! the gas inside has index `n_gas`. If the bubble collapses fast enough that the
//! sudden approximation applies, the electromagnetic vacuum of the
//! bubble-present configuration is no longer the vacuum of the homogeneous
//! liquid, and the mismatch radiates real photons. This crate evaluates that
//! mismatch quantitatively:
//!
//! * [`bessel`] — half-integer-order Bessel functions `J_{l+1/2}`, `N_{l+1/2}`
//!   and the pseudo-Wronskian determinants the mode overlaps reduce to,
//! * [`matching`] — the interior/exterior mode-matching amplitudes at the
//!   bubble wall and their large-argument behaviour,
//! * [`bogolubov`] — the pair-creation kernel `F(x, y)` (truncated partial-wave
//!   sum), `|β(x,y)|²`, and the closed-form radial overlap integral with its
//!   quadrature self-check,
//! * [`approximation`] — the semi-analytic surrogate for `F`: the diagonal
//!   profile `D(x)`, its rational fit, and the sinc² transverse kernel,
//! * [`spectrum`] — photon spectra `dN/dx`, total photon/energy budgets, and
//!   the static bulk Casimir comparator,
//! * [`presets`], [`validate`], [`cli`] — scenario presets, the consistency
//!   check suite, and the command-line front end.
//!
//! All spectral quantities are dimensionless: frequencies enter through
//! `x = n_liquid ω_out R / c` and `y = n_gas ω_in R / c`, energies are reported
//! in units of `ħcK` (with `K` the wavenumber cutoff) and converted to eV only
//! at the presentation layer.
//!
//! # Example
//!
//! ```
//! use casimir_bubble::prelude::*;
//!
//! let media = Media::new(1.0, 1.3).unwrap();
//! let scenario = Scenario::from_radius_um_cutoff_nm(40.0, 360.0).unwrap();
//! let budget = photon_budget_infinite(&media, &scenario);
//! assert!((budget.n_total / 7.39e5 - 1.0).abs() < 0.01);
//! ```
//!
//! Runnable walkthroughs for each capability live in `examples/`; the
//! `casimir-bubble` binary exposes the same machinery as `spectrum`, `budget`,
//! `validate` and `sweep` subcommands.

// Reference constants keep their full published digits, and comparisons of
// the form !(a > b) deliberately treat NaN as a failure.
#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod approximation;
pub mod bessel;
pub mod bogolubov;
pub mod cli;
pub mod matching;
pub mod output;
pub mod presets;
pub mod quadrature;
pub mod spectrum;
pub mod validate;

/// ħc in eV·nm, the single physical constant used for eV conversions.
pub const HBAR_C_EV_NM: f64 = 197.326_980_4;

/// Speed of light in m/s, used only to attach SI units to `|β|²`.
pub const SPEED_OF_LIGHT_M_PER_S: f64 = 299_792_458.0;

/// Errors produced by the numerical core.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An argument is finite and in-domain but outside the supported range.
    #[error("range error: {0}")]
    Range(String),
    /// A truncated sum could not be brought within the requested tolerance.
    #[error("truncation failure: {0}")]
    Truncation(String),
    /// Adaptive quadrature did not converge.
    #[error("quadrature failure: {0}")]
    Quadrature(String),
    /// An internal invariant was violated (indicates a bug, not bad input).
    #[error("internal consistency violation: {0}")]
    Consistency(String),
    /// Malformed input file or unusable CLI arguments.
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Serde(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

/// The names most callers want in scope.
pub mod prelude {
    pub use crate::approximation::{d_approx, d_exact, f_factorized, sinc_kernel};
    pub use crate::bessel::ModeIndex;
    pub use crate::bogolubov::{
        beta_squared, f_exact, l_max_physical, AFactor, Scenario, TruncationPolicy,
    };
    pub use crate::matching::{a_squared_asymptotic, matching_coefficients, Media};
    pub use crate::spectrum::{
        photon_budget_from_table, photon_budget_infinite, schwinger_static_energy, spectrum_finite,
        spectrum_infinite, PhotonBudget, SpectrumKernel, SpectrumTable,
    };
    pub use crate::{Error, Result};
}
