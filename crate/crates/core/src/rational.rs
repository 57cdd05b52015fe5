//! Arbitrary-precision rational numbers in canonical reduced form.
//!
//! Every value keeps `gcd(|numerator|, denominator) = 1` and `denominator > 0`
//! after every operation, so equality is structural and arithmetic is exact
//! under any reordering. Rendering is `num/den` (plain `num` for integers)
//! with the sign on the numerator.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number, always in canonical reduced form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `num/den` and reduces. Panics on a zero denominator.
    pub fn new(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rational(BigRational::new(num, den))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    /// Convenience constructor from a small numerator/denominator pair.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::new(BigInt::from(num), BigInt::from(den))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rational(self.0.recip())
    }

    /// Nonnegative integer power.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Correctly rounded (nearest, ties to even) conversion to `f64`.
    ///
    /// This is the single exact-to-float boundary of the crate: certificates
    /// stay rational, float consumers get the nearest double of the true value.
    pub fn to_f64(&self) -> f64 {
        if self.is_zero() {
            return 0.0;
        }
        let negative = self.is_negative();
        let num = self.numer().abs();
        let den = self.denom().clone();

        // Scale so the integer quotient carries at least 57 significant bits,
        // then round the quotient (plus a sticky bit from the remainder).
        let shift: i64 = 57 - (num.bits() as i64 - den.bits() as i64);
        let (scaled_num, scaled_den) = if shift >= 0 {
            (&num << shift as u64, den)
        } else {
            (num, &den << (-shift) as u64)
        };
        let (q, r) = num_integer::Integer::div_rem(&scaled_num, &scaled_den);
        // value = (q + r/scaled_den) * 2^(-shift), with q having 56..=58 bits.
        let qbits = q.bits() as i64;
        let drop = qbits - 54; // keep 54 bits: 53 mantissa + 1 round bit
        debug_assert!(drop >= 0);
        let kept = &q >> drop as u64;
        let sticky = !r.is_zero() || (&kept << drop as u64) != q;
        let mut mantissa = to_u64(&kept); // 54 bits
        let round_bit = mantissa & 1;
        mantissa >>= 1;
        if round_bit == 1 && (sticky || mantissa & 1 == 1) {
            mantissa += 1; // may carry to 54 bits; 2^53 is exactly representable
        }
        let exp = (-shift + drop + 1) as i32;
        let magnitude = (mantissa as f64) * 2f64.powi(exp);
        if negative {
            -magnitude
        } else {
            magnitude
        }
    }
}

fn to_u64(n: &BigInt) -> u64 {
    let (sign, digits) = n.to_u64_digits();
    debug_assert!(sign != Sign::Minus && digits.len() <= 1);
    digits.first().copied().unwrap_or(0)
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.numer())
        } else {
            write!(f, "{}/{}", self.numer(), self.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

/// Error parsing a `num/den` string.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid rational literal {input:?}")]
pub struct ParseRationalError {
    pub input: String,
}

impl FromStr for Rational {
    type Err = ParseRationalError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || ParseRationalError {
            input: s.to_string(),
        };
        let (num_str, den_str) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num_str.trim()).map_err(|_| err())?;
        let den = BigInt::from_str(den_str.trim()).map_err(|_| err())?;
        if den.is_zero() || den.is_negative() {
            return Err(err());
        }
        Ok(Rational::new(num, den))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((&self.0).$method(rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self == &Rational::from_int(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        self.partial_cmp(&Rational::from_int(*other))
    }
}

/// Certified rational lower bound for pi: `3.14159265358979 < pi`.
pub fn pi_lower() -> Rational {
    Rational::new(BigInt::from(314159265358979u64), BigInt::from(10u64.pow(14)))
}

/// Certified rational upper bound for pi: `pi < 355/113`.
pub fn pi_upper() -> Rational {
    Rational::ratio(355, 113)
}

/// Certified rational lower bound for pi^2: `9.8696044 < pi^2`.
pub fn pi_sq_lower() -> Rational {
    Rational::new(BigInt::from(98696044u64), BigInt::from(10u64.pow(7)))
}

/// Certified rational upper bound for pi^2: `pi^2 < 9.8696045`.
pub fn pi_sq_upper() -> Rational {
    Rational::new(BigInt::from(98696045u64), BigInt::from(10u64.pow(7)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn canonical_form() {
        let r = Rational::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(r.to_string(), "-2/3");
    }

    #[test]
    fn integers_render_without_denominator() {
        assert_eq!(Rational::ratio(6, 3).to_string(), "2");
        assert_eq!(Rational::from_int(-7).to_string(), "-7");
        assert_eq!("-7".parse::<Rational>().unwrap(), Rational::from_int(-7));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!("1/0".parse::<Rational>().is_err());
        assert!("1/-2".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    #[test]
    fn to_f64_matches_known_doubles() {
        assert_eq!(Rational::ratio(1, 3).to_f64(), 1.0 / 3.0);
        assert_eq!(Rational::ratio(-1, 3).to_f64(), -1.0 / 3.0);
        assert_eq!(Rational::ratio(3, 4).to_f64(), 0.75);
        assert_eq!(Rational::ratio(1, 10).to_f64(), 0.1);
        assert_eq!(Rational::zero().to_f64(), 0.0);
        assert_eq!(Rational::from_int(1 << 62).to_f64(), (1u64 << 62) as f64);
        // Huge numerator and denominator still round to the nearest double.
        let big = Rational::new(BigInt::from(10).pow(40) + 1, BigInt::from(3) * BigInt::from(10).pow(40));
        assert_eq!(big.to_f64(), 1.0 / 3.0);
    }

    #[test]
    fn pi_bounds_bracket_pi() {
        let pi = std::f64::consts::PI;
        assert!(pi_lower().to_f64() < pi);
        assert!(pi_upper().to_f64() > pi);
        assert!(pi_sq_lower().to_f64() < pi * pi);
        assert!(pi_sq_upper().to_f64() > pi * pi);
        assert!(pi_sq_lower() < pi_sq_upper());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (any::<i64>(), 1u64..=u64::MAX).prop_map(|(n, d)| {
            Rational::new(BigInt::from(n), BigInt::from(d))
        })
    }

    proptest! {
        #[test]
        fn render_parse_roundtrip(r in arb_rational()) {
            let back: Rational = r.to_string().parse().unwrap();
            prop_assert_eq!(back, r);
        }

        #[test]
        fn addition_reorders_exactly(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            let left = (&a + &b) + &c;
            let right = &a + (&b + &c);
            prop_assert_eq!(&left, &right);
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn to_f64_agrees_with_small_division(n in -1_000_000i64..1_000_000, d in 1i64..1_000_000) {
            let r = Rational::ratio(n, d);
            prop_assert_eq!(r.to_f64(), n as f64 / d as f64);
        }
    }
}
