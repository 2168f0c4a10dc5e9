//! Number formatting shared by the CSV writers.

use crate::scalar::Real;

/// Significant digits used for every floating-point field in exported tables.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// Formats `value` with `digits` significant digits: plain decimal for
/// magnitudes in `[1e-6, 1e15)`, scientific notation outside that range.
pub fn format_sig<R: Real>(value: R, digits: usize) -> String {
    let v = value.to_f64_lossy();
    if v == 0.0 {
        return "0".to_string();
    }
    if !v.is_finite() {
        return format!("{v}");
    }
    let digits = digits.max(1);
    // the exponent after rounding, so 0.0099999999999999 counts as 1e-2
    let sci = format!("{:.*e}", digits - 1, v);
    let exponent: i32 = sci[sci.find('e').expect("scientific format") + 1..]
        .parse()
        .expect("integer exponent");
    if !(-6..15).contains(&exponent) {
        return sci;
    }
    let decimals = (digits as i32 - 1 - exponent).max(0) as usize;
    format!("{v:.decimals$}")
}

/// [`format_sig`] at the crate-wide [`SIGNIFICANT_DIGITS`].
pub fn fmt<R: Real>(value: R) -> String {
    format_sig(value, SIGNIFICANT_DIGITS)
}
