//! Lossless decimal text for binary64 seed values.
//!
//! Seeds travel between processes as 17-significant-digit decimal strings.
//! Seventeen digits are enough to pin down any binary64 value, so
//! `parse_decimal(&format_decimal(v)) == v` bit for bit.

use crate::error::{Error, Result};

/// Significant digits used when a seed value is written out.
pub const SIGNIFICANT_DIGITS: usize = 17;

/// Formats `value` with exactly 17 significant digits.
///
/// Plain positional notation is used for magnitudes between 1e-6 and 1e17,
/// scientific notation otherwise. Non-finite values use Rust's spelling.
pub fn format_decimal(value: f64) -> String {
    if !value.is_finite() {
        return value.to_string();
    }
    if value == 0.0 {
        let zeros = "0".repeat(SIGNIFICANT_DIGITS - 1);
        let sign = if value.is_sign_negative() { "-" } else { "" };
        return format!("{sign}0.{zeros}");
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, value);
    // The exponent is taken from the rounded scientific form so that a
    // carry (9.99..e-2 -> 1.00..e-1) is accounted for.
    let exp: i32 = sci
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse().ok())
        .expect("scientific formatting always carries an exponent");
    if !(-6..17).contains(&exp) {
        return sci;
    }
    let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
    format!("{:.*}", decimals, value)
}

/// Parses a decimal seed component, rejecting anything that is not a finite number.
pub fn parse_decimal(field: &'static str, text: &str) -> Result<f64> {
    let trimmed = text.trim();
    match trimmed.parse::<f64>() {
        Ok(v) if v.is_finite() => Ok(v),
        _ => Err(Error::Parse {
            field,
            text: text.to_string(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_values() {
        assert_eq!(format_decimal(0.25), "0.25000000000000000");
        assert_eq!(format_decimal(3.99), "3.9900000000000002");
        assert_eq!(format_decimal(3.995), "3.9950000000000001");
        assert_eq!(format_decimal(4.0), "4.0000000000000000");
        assert_eq!(format_decimal(0.1), "0.10000000000000001");
        assert_eq!(format_decimal(1e-12), "9.9999999999999998e-13");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_decimal("x0", "abc").is_err());
        assert!(parse_decimal("x0", "NaN").is_err());
        assert!(parse_decimal("x0", "inf").is_err());
        assert_eq!(parse_decimal("x0", " 0.5 ").unwrap(), 0.5);
    }

    proptest! {
        #[test]
        fn round_trips_bit_exact(bits in any::<u64>()) {
            let v = f64::from_bits(bits);
            prop_assume!(v.is_finite());
            let s = format_decimal(v);
            let back = parse_decimal("v", &s).unwrap();
            prop_assert_eq!(back.to_bits(), v.to_bits());
            prop_assert_eq!(format_decimal(back), s);
        }

        #[test]
        fn unit_interval_round_trips(v in 0.0f64..1.0) {
            let s = format_decimal(v);
            prop_assert!(!s.contains('e') || v < 1e-6);
            prop_assert_eq!(parse_decimal("v", &s).unwrap().to_bits(), v.to_bits());
        }
    }
}
