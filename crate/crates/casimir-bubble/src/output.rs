//! File formats: significant-digit numeric formatting and the CSV/JSON
//! spectrum encodings.
//!
//! Numbers are printed with 12 significant digits, `.` separator, no locale
//! dependence, in the style of C's `%.12g`: positional decimal for exponents
//! in `[-4, 12)`, scientific otherwise, trailing zeros trimmed. CSV files
//! carry `#` metadata lines (tool version, preset, media, scenario, mode),
//! then the header `x,dndx`, then one row per sample; line endings are LF.
//! Identical inputs produce byte-identical files regardless of thread count.

use std::fmt::Write as _;

use crate::spectrum::SpectrumTable;
use crate::{Error, Result};

/// Format with 12 significant digits (`%.12g` semantics).
pub fn format_sig12(v: f64) -> String {
    format_sig(v, 12)
}

/// `%.{sig}g`-style formatting: positional decimal when the exponent lies in
/// `[-4, sig)`, scientific otherwise; trailing zeros trimmed.
pub fn format_sig(v: f64, sig: usize) -> String {
    assert!(sig >= 1);
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return v.to_string(); // "NaN", "inf", "-inf" — never in well-formed tables
    }
    // Round to `sig` digits via scientific formatting, then re-place the point.
    let sci = format!("{:.*e}", sig - 1, v);
    let (mantissa, exp) = sci.split_once('e').expect("e-format always has exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    let neg = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), sig);

    let body = if exp >= -4 && (exp as i64) < sig as i64 {
        let e = exp as i64;
        let mut s = String::new();
        if e < 0 {
            s.push_str("0.");
            for _ in 0..(-e - 1) {
                s.push('0');
            }
            s.push_str(&digits);
        } else {
            let point = (e + 1) as usize;
            s.push_str(&digits[..point.min(digits.len())]);
            if point < digits.len() {
                s.push('.');
                s.push_str(&digits[point..]);
            }
        }
        trim_fraction(s)
    } else {
        let mut mant = String::new();
        mant.push_str(&digits[..1]);
        if digits.len() > 1 {
            mant.push('.');
            mant.push_str(&digits[1..]);
        }
        let mant = trim_fraction(mant);
        format!("{mant}e{exp}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

fn trim_fraction(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let s = s.trim_end_matches('0');
    s.trim_end_matches('.').to_string()
}

/// Render a spectrum table in the CSV format.
pub fn spectrum_to_csv(table: &SpectrumTable, preset: Option<&str>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# casimir-bubble {}", env!("CARGO_PKG_VERSION"));
    let _ = writeln!(out, "# preset: {}", preset.unwrap_or("custom"));
    let _ = writeln!(out, "# n_gas: {}", format_sig12(table.media.n_gas()));
    let _ = writeln!(out, "# n_liquid: {}", format_sig12(table.media.n_liquid()));
    let _ = writeln!(
        out,
        "# radius_um: {}",
        format_sig12(table.scenario.radius_um())
    );
    let _ = writeln!(
        out,
        "# cutoff_nm: {}",
        format_sig12(table.scenario.cutoff_wavelength_nm())
    );
    let _ = writeln!(out, "# x_max: {}", format_sig12(table.scenario.x_max()));
    let _ = writeln!(out, "# y_max: {}", format_sig12(table.y_max));
    let _ = writeln!(out, "# mode: {}", table.mode);
    let _ = writeln!(out, "# a_factor: {}", table.a_factor);
    out.push_str("x,dndx\n");
    for p in &table.points {
        let _ = writeln!(out, "{},{}", format_sig12(p.x), format_sig12(p.dndx));
    }
    out
}

/// Render a spectrum table as pretty JSON (full f64 round-trip precision).
pub fn spectrum_to_json(table: &SpectrumTable) -> Result<String> {
    let mut s = serde_json::to_string_pretty(table)?;
    s.push('\n');
    Ok(s)
}

/// Parse a spectrum table from its JSON encoding, re-validating invariants.
pub fn spectrum_from_json(text: &str) -> Result<SpectrumTable> {
    let table: SpectrumTable =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(e.to_string()))?;
    table.validate()?;
    Ok(table)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bogolubov::Scenario;
    use crate::matching::Media;
    use crate::spectrum::spectrum_infinite_table;

    #[test]
    fn significant_digit_formatting() {
        assert_eq!(format_sig12(0.0), "0");
        assert_eq!(format_sig12(1.0), "1");
        assert_eq!(format_sig12(0.05), "0.05");
        assert_eq!(format_sig12(-2.5), "-2.5");
        assert_eq!(format_sig12(std::f64::consts::PI), "3.14159265359");
        assert_eq!(format_sig12(739474.797), "739474.797");
        assert_eq!(format_sig12(1.5e-7), "1.5e-7");
        assert_eq!(format_sig12(1.23456789012345e15), "1.23456789012e15");
        assert_eq!(format_sig12(6.5197745747e-3), "0.0065197745747");
        assert_eq!(format_sig(2.0 / 3.0, 3), "0.667");
        assert_eq!(format_sig(999.999, 3), "1e3");
    }

    #[test]
    fn csv_shape() {
        let media = Media::new(1.0, 1.3).unwrap();
        let scenario = Scenario::from_radius_um_cutoff_nm(0.5, 200.0).unwrap();
        let grid: Vec<f64> = (0..=10).map(|i| i as f64).collect();
        let table = spectrum_infinite_table(&media, &scenario, &grid).unwrap();
        let csv = spectrum_to_csv(&table, Some("min-radius"));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.iter().filter(|l| l.starts_with('#')).count(), 10);
        assert_eq!(lines[10], "x,dndx");
        assert_eq!(lines.len(), 10 + 1 + 11);
        assert!(!csv.contains('\r'));
        assert!(csv.ends_with('\n'));
    }

    #[test]
    fn json_round_trip() {
        let media = Media::new(1.0, 1.3).unwrap();
        let scenario = Scenario::from_radius_um_cutoff_nm(5.0, 200.0).unwrap();
        let grid: Vec<f64> = (0..=20).map(|i| i as f64 * 0.37).collect();
        let table = spectrum_infinite_table(&media, &scenario, &grid).unwrap();
        let json = spectrum_to_json(&table).unwrap();
        let back = spectrum_from_json(&json).unwrap();
        assert_eq!(table, back);
    }

    #[test]
    fn json_rejects_corrupt_tables() {
        let text = r#"{
            "mode": "infinite",
            "a_factor": "unit",
            "media": {"n_gas": 1.0, "n_liquid": -1.0},
            "scenario": {"radius_m": 5e-7, "cutoff_per_m": 3.1e7},
            "y_max": 15.0,
            "points": []
        }"#;
        assert!(spectrum_from_json(text).is_err());
    }
}
