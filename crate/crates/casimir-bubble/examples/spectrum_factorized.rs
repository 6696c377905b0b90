//! Finite-volume spectrum of the min-radius preset through the factorized
//! kernel: the smeared remnant of the infinite-volume x²·Θ(RK - x) law.
//!
//!     cargo run --example spectrum_factorized

use casimir_bubble::bogolubov::{AFactor, TruncationPolicy};
use casimir_bubble::presets;
use casimir_bubble::spectrum::{
    photon_budget_from_table, spectrum_finite, spectrum_infinite, QuadSpec, SpectrumKernel,
};

fn main() {
    let p = presets::builtin("min-radius").unwrap();
    let rk = p.scenario.x_max();
    let grid: Vec<f64> = (0..=36).map(|i| i as f64 * 0.5).collect();
    let table = spectrum_finite(
        &p.media,
        &p.scenario,
        &grid,
        &QuadSpec::default(),
        SpectrumKernel::Factorized,
        &TruncationPolicy::default(),
        AFactor::Unit,
    )
    .unwrap();

    println!("min-radius preset: R = 0.5 µm, λ_cut = 200 nm, RK = {rk:.4}");
    println!("{:>6} {:>12} {:>12}", "x", "dN/dx", "infinite");
    for pt in &table.points {
        println!(
            "{:>6.1} {:>12.5e} {:>12.5e}",
            pt.x,
            pt.dndx,
            spectrum_infinite(&p.media, &p.scenario, pt.x)
        );
    }
    let b = photon_budget_from_table(&table).unwrap();
    println!();
    println!(
        "table budget: N = {:.3}, E = {:.3} ħcK = {:.2} eV, <E> = {:.3} eV",
        b.n_total, b.e_total_hck, b.e_total_ev, b.e_avg_ev
    );
    println!("note the smeared cutoff: no hard edge survives at x = RK ≈ {rk:.1}");
}
