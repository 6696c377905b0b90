//! The squared pair-creation coefficient |β(x, y)|² in split form: a
//! dimensionless kernel times the (R/c)² scale that carries the units.
//!
//!     cargo run --example beta_squared

use casimir_bubble::bogolubov::{beta_squared, AFactor, Scenario, TruncationPolicy};
use casimir_bubble::matching::Media;

fn main() {
    let media = Media::new(1.0, 1.3).unwrap();
    let scenario = Scenario::from_radius_um_cutoff_nm(0.5, 200.0).unwrap();
    let policy = TruncationPolicy::default();

    println!(
        "R = 0.5 µm: scale (R/c)² = {:.4e} s²",
        (scenario.radius_m() / casimir_bubble::SPEED_OF_LIGHT_M_PER_S).powi(2)
    );
    println!("{:>6} {:>6} {:>13} {:>13}", "x", "y", "β₀²", "|β|² [s²]");
    for (x, y) in [
        (2.0, 2.0),
        (3.0, 2.0),
        (5.0, 5.0),
        (8.0, 5.0),
        (12.0, 11.0),
        (15.0, 3.0),
    ] {
        let b = beta_squared(&media, &scenario, x, y, &policy, AFactor::Unit).unwrap();
        println!(
            "{x:>6.1} {y:>6.1} {:>13.5e} {:>13.5e}",
            b.beta0_sq,
            b.value_s2()
        );
    }

    let uniform = Media::new(1.3, 1.3).unwrap();
    let b = beta_squared(&uniform, &scenario, 3.0, 2.0, &policy, AFactor::Unit).unwrap();
    println!();
    println!(
        "equal indices: β₀² = {} — no contrast, no photons",
        b.beta0_sq
    );
}
