//! Quantify the factorization approximation on the min-radius preset:
//! pointwise kernel errors on a grid plus the total-energy discrepancy,
//! as machine-readable JSON.
//!
//!     cargo run --example kernel_error_report

use casimir_bubble::approximation::{approximation_report, ReportGrid};
use casimir_bubble::bogolubov::TruncationPolicy;
use casimir_bubble::presets;

fn main() {
    let p = presets::builtin("min-radius").unwrap();
    let grid = ReportGrid {
        hi: 1.2 * p.scenario.x_max(),
        n: 101,
    };
    let report =
        approximation_report(&p.media, &p.scenario, &TruncationPolicy::default(), &grid).unwrap();
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
}
