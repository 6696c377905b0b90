//! Built-in scenario presets.
//!
//! All four use the air/water pair `n_gas = 1.0`, `n_liquid = 1.3` and differ
//! in radius and cutoff wavelength:
//!
//! | name         | R (µm) | λ_cut (nm) | RK      |
//! |--------------|--------|------------|---------|
//! | `schwinger`  | 40     | 360        | ≈ 698   |
//! | `updated`    | 45     | 300        | ≈ 942   |
//! | `min-radius` | 0.5    | 200        | ≈ 15.7  |
//! | `ambient`    | 5      | 200        | ≈ 157   |
//!
//! `schwinger` is the classic maximum-radius parameter set, `updated` its
//! later experimental revision, `min-radius` the bubble at the light-flash
//! radius, and `ambient` the equilibrium radius.

use crate::bogolubov::Scenario;
use crate::matching::Media;

#[derive(Debug, Clone, Copy)]
pub struct Preset {
    pub name: &'static str,
    pub media: Media,
    pub scenario: Scenario,
}

fn make(name: &'static str, radius_um: f64, lambda_nm: f64) -> Preset {
    Preset {
        name,
        media: Media::new(1.0, 1.3).expect("static preset media"),
        scenario: Scenario::from_radius_um_cutoff_nm(radius_um, lambda_nm)
            .expect("static preset scenario"),
    }
}

/// All built-in presets.
pub fn all() -> Vec<Preset> {
    vec![
        make("schwinger", 40.0, 360.0),
        make("updated", 45.0, 300.0),
        make("min-radius", 0.5, 200.0),
        make("ambient", 5.0, 200.0),
    ]
}

/// Look up a built-in preset by name.
pub fn builtin(name: &str) -> Option<Preset> {
    all().into_iter().find(|p| p.name == name)
}
