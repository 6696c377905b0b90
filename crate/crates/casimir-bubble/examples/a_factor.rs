//! The interior amplitude |A_ν(y)|²: oscillation between n_g/n_l and n_l/n_g,
//! convergence to the asymptotic form, and the period mean of exactly 1 that
//! justifies dropping it from the kernel sum.
//!
//!     cargo run --example a_factor

use casimir_bubble::bessel::ModeIndex;
use casimir_bubble::matching::{a_squared, a_squared_asymptotic, Media};

fn main() {
    let media = Media::new(1.0, 1.3).unwrap();
    let m = ModeIndex::new(1).unwrap();

    println!("|A_ν|² for l = 1 (ν = 3/2), n_gas = 1, n_liquid = 1.3:");
    println!("{:>8} {:>10} {:>10}", "y", "exact", "asymptotic");
    let mut y = 1.0;
    while y <= 16.0 {
        println!(
            "{y:>8.2} {:>10.5} {:>10.5}",
            a_squared(&media, m, y).unwrap(),
            a_squared_asymptotic(&media, m, y).unwrap()
        );
        y += 0.75;
    }

    // Mean over ten asymptotic periods.
    let (y0, y1) = (50.0, 50.0 + 20.0 * std::f64::consts::PI);
    let n = 4000;
    let h = (y1 - y0) / n as f64;
    let mut sum = 0.0;
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..=n {
        let w = if i == 0 || i == n { 0.5 } else { 1.0 };
        let a2 = a_squared(&media, m, y0 + i as f64 * h).unwrap();
        sum += w * a2;
        lo = lo.min(a2);
        hi = hi.max(a2);
    }
    println!();
    println!(
        "over y ∈ [50, 50+20π]: range [{lo:.4}, {hi:.4}] (asymptotic band [{:.4}, {:.4}])",
        1.0 / 1.3,
        1.3
    );
    println!(
        "mean = {:.6} — the unit-A substitution in the kernel",
        sum / n as f64
    );
}
