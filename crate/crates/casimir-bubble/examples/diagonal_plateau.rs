//! The diagonal kernel profile D(x) = F(x, x): zero below x ≈ 1, rational
//! rise, plateau at 1/(2π²) ≈ 0.050661.
//!
//!     cargo run --example diagonal_plateau

use casimir_bubble::approximation::{d_approx, d_exact};
use casimir_bubble::bogolubov::TruncationPolicy;

fn main() {
    let policy = TruncationPolicy::default();
    let plateau = 1.0 / (2.0 * std::f64::consts::PI * std::f64::consts::PI);
    println!(
        "{:>6} {:>12} {:>12} {:>9}",
        "x", "D exact", "D fit", "fit err"
    );
    for i in 1..=30 {
        let x = i as f64;
        let d = d_exact(x, &policy).unwrap();
        let fit = d_approx(x);
        println!("{x:>6.0} {d:>12.6e} {fit:>12.6e} {:>9.2e}", (d - fit).abs());
    }
    println!();
    println!("plateau 1/(2π²) = {plateau:.6e}");
}
