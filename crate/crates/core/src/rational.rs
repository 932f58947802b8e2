//! Exact rational values and their canonical textual form.
//!
//! Every threshold in this library is a limit of integer ratios and is
//! reported as an exact `BigRational`. Serialization uses the `"num/den"`
//! form with a positive denominator in lowest terms, so `1` prints as
//! `"1/1"` and byte-for-byte output stability follows from the numeric
//! value alone. Floating point never enters a computation; `approx_f64`
//! exists purely for display.

use num_bigint::BigInt;
pub use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Builds an exact rational from machine integers.
pub fn ratio(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds an exact rational from unsigned machine integers.
pub fn ratio_u(num: u64, den: u64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Canonical `"num/den"` rendering, lowest terms, denominator positive.
pub fn to_fraction_string(value: &BigRational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Display-only decimal approximation; never used in computation.
pub fn approx_f64(value: &BigRational) -> f64 {
    value.to_f64().unwrap_or_else(|| {
        if value.is_negative() {
            f64::NEG_INFINITY
        } else if value.is_zero() {
            0.0
        } else {
            f64::INFINITY
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fraction_string_is_lowest_terms() {
        assert_eq!(to_fraction_string(&ratio(2, 4)), "1/2");
        assert_eq!(to_fraction_string(&ratio(1, 1)), "1/1");
        assert_eq!(to_fraction_string(&ratio(0, 5)), "0/1");
        assert_eq!(to_fraction_string(&ratio(-3, 6)), "-1/2");
        assert_eq!(to_fraction_string(&ratio(3, -6)), "-1/2");
    }

    #[test]
    fn approx_matches_value() {
        assert_eq!(approx_f64(&ratio(1, 2)), 0.5);
        assert_eq!(approx_f64(&ratio(7, 4)), 1.75);
    }
}
