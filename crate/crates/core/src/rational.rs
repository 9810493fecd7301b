//! Scalar field: arbitrary-precision rationals.
//!
//! `Rat` values are always in lowest terms with a positive denominator;
//! `num_rational` maintains that canonical form on every operation.

use num_bigint::BigInt;

pub use num_rational::BigRational;

/// Exact rational scalar.
pub type Rat = BigRational;

/// `n/d` as a `Rat`. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Integer `n` as a `Rat`.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use std::str::FromStr;

    #[test]
    fn canonical_form() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
        assert_eq!(rat(0, 7), Rat::zero());
        assert!(rat(-1, 2).denom() > &BigInt::from(0));
    }

    #[test]
    fn string_roundtrip() {
        for s in ["0", "7", "-3", "5/3", "-5/3", "1/2"] {
            let v = Rat::from_str(s).unwrap();
            assert_eq!(v.to_string(), s);
        }
    }
}
