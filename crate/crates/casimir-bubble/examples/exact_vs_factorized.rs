//! What the factorization approximation costs: exact vs factorized kernel on
//! the min-radius preset, pointwise and in the total energy, plus the effect
//! of restoring the exact |A_ν|² weight.
//!
//!     cargo run --example exact_vs_factorized

use casimir_bubble::approximation::f_factorized;
use casimir_bubble::bogolubov::{f_exact, AFactor, TruncationPolicy};
use casimir_bubble::presets;
use casimir_bubble::spectrum::{
    photon_budget_from_table, spectrum_finite, QuadSpec, SpectrumKernel,
};

fn main() {
    let p = presets::builtin("min-radius").unwrap();
    let policy = TruncationPolicy::default();

    println!("kernel slices at y = 5:");
    println!("{:>6} {:>12} {:>12}", "x", "F exact", "F factorized");
    for i in 1..=14 {
        let x = i as f64;
        let exact = f_exact(x, 5.0, &policy, &p.media, AFactor::Unit).unwrap();
        println!("{x:>6.1} {exact:>12.5e} {:>12.5e}", f_factorized(x, 5.0));
    }

    let hi = 1.2 * p.scenario.x_max();
    let grid: Vec<f64> = (0..378).map(|i| hi * i as f64 / 377.0).collect();
    let quad = QuadSpec::default();
    let mut budgets = Vec::new();
    for (label, kernel, a) in [
        ("exact / unit-A", SpectrumKernel::Exact, AFactor::Unit),
        ("exact / exact-A", SpectrumKernel::Exact, AFactor::Exact),
        ("factorized", SpectrumKernel::Factorized, AFactor::Unit),
    ] {
        let t = spectrum_finite(&p.media, &p.scenario, &grid, &quad, kernel, &policy, a).unwrap();
        let b = photon_budget_from_table(&t).unwrap();
        println!();
        println!(
            "{label:<16}: N = {:.4}, E = {:.4} ħcK = {:.3} eV",
            b.n_total, b.e_total_hck, b.e_total_ev
        );
        budgets.push(b.e_total_hck);
    }
    println!();
    println!(
        "factorization error in E: {:.2}%  |  exact-A vs unit-A: {:.2}%",
        100.0 * (budgets[2] - budgets[0]).abs() / budgets[0],
        100.0 * (budgets[1] - budgets[0]).abs() / budgets[0],
    );
}
