//! The exact scalar type the whole kernel is generic over.
//!
//! Every coefficient in the kernel is built from rationals: rational
//! prefactors, rational exponents of `q`, rational colour constants.
//! [`Scalar`] collects the bounds the algebra needs and is blanket
//! implemented, so `Ratio<BigInt>` (the default, never overflows) and
//! `Ratio<i64>` (faster, fixed width) both work out of the box.

use std::fmt;

use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact rational scalar.
///
/// `Signed` brings the full `Num` tower (ring ops, `Zero`, `One`,
/// `abs`/`signum`); `Ord` is required because canonical forms sort by
/// coefficient data; `FromPrimitive`/`ToPrimitive` convert to and from
/// integer literals in rule tables, parsers and exponent bookkeeping.
pub trait Scalar:
    Clone + fmt::Debug + fmt::Display + Eq + Ord + Signed + FromPrimitive + ToPrimitive + 'static
{
    /// The integer `n` as a scalar.
    fn int(n: i64) -> Self {
        Self::from_i64(n).expect("integer does not fit in scalar")
    }

    /// The fraction `n/d` as a scalar.
    fn rat(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Self::int(n) / Self::int(d)
    }

    /// The fractional part normalized into `[0, 1)`.
    fn frac_part(&self) -> Self {
        let f = self.clone() % Self::one();
        if f.is_negative() {
            f + Self::one()
        } else {
            f
        }
    }

    /// `Some(n)` when the value is exactly the integer `n`.
    fn as_integer(&self) -> Option<i64> {
        if (self.clone() % Self::one()).is_zero() {
            self.to_i64()
        } else {
            None
        }
    }
}

impl<T> Scalar for T where
    T: Clone
        + fmt::Debug
        + fmt::Display
        + Eq
        + Ord
        + Signed
        + FromPrimitive
        + ToPrimitive
        + 'static
{
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::{BigRational, Rational64};

    #[test]
    fn both_rational_backends_satisfy_scalar() {
        fn probe<R: Scalar>() -> R {
            R::rat(3, -6) + R::int(1)
        }
        assert_eq!(probe::<BigRational>(), BigRational::rat(1, 2));
        assert_eq!(probe::<Rational64>(), Rational64::rat(1, 2));
    }
}
