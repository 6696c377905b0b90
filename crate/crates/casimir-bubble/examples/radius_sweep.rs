//! Photon count versus bubble radius at fixed cutoff: the closed-form budget
//! scales exactly as R³ (equivalently as the bubble volume).
//!
//!     cargo run --example radius_sweep

use casimir_bubble::bogolubov::Scenario;
use casimir_bubble::matching::Media;
use casimir_bubble::spectrum::photon_budget_infinite;

fn main() {
    let media = Media::new(1.0, 1.3).unwrap();
    let lambda_nm = 200.0;
    println!("cutoff λ = {lambda_nm} nm");
    println!(
        "{:>10} {:>10} {:>12} {:>14}",
        "R [µm]", "RK", "N", "N/(R/µm)³"
    );
    for i in 0..10 {
        let r_um = 0.5 + 0.5 * i as f64;
        let scenario = Scenario::from_radius_um_cutoff_nm(r_um, lambda_nm).unwrap();
        let b = photon_budget_infinite(&media, &scenario);
        println!(
            "{r_um:>10.1} {:>10.2} {:>12.5e} {:>14.6e}",
            scenario.x_max(),
            b.n_total,
            b.n_total / r_um.powi(3)
        );
    }
    println!();
    println!("the last column is constant: N ∝ R³ — a bulk effect");
}
