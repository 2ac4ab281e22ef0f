//! Fixed 17-significant-digit number formatting.
//!
//! 17 significant decimal digits always round-trip an `f64`, so every
//! number the CLI prints can be parsed back to the identical bits.

/// Format with exactly 17 significant digits; plain decimal for moderate
/// exponents, scientific otherwise.
pub fn g17(v: f64) -> String {
    if !v.is_finite() {
        return format!("{v}");
    }
    if v == 0.0 {
        return if v.is_sign_negative() {
            "-0.0000000000000000".to_string()
        } else {
            "0.0000000000000000".to_string()
        };
    }
    let sci = format!("{v:.16e}");
    let (mantissa, exp) = sci.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("exponent");
    if !(-5..=16).contains(&exp) {
        return sci;
    }
    let negative = mantissa.starts_with('-');
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    debug_assert_eq!(digits.len(), 17);
    let mut out = String::new();
    if negative {
        out.push('-');
    }
    if exp >= 0 {
        let e = exp as usize;
        out.push_str(&digits[..=e]);
        out.push('.');
        out.push_str(&digits[e + 1..]);
    } else {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(&digits);
    }
    out
}
