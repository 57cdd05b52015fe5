//! Dense univariate polynomials over [`Rational`], indexed by degree with
//! trailing zeros trimmed. Evaluation and all ring operations are exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<Rational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        RatPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RatPoly::from_coeffs(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        RatPoly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        RatPoly::from_coeffs(coeffs)
    }

    /// Builds from degree-indexed coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Argument substitution `x -> c*x`: coefficient `a_k` becomes `a_k * c^k`.
    pub fn scale_argument(&self, c: &Rational) -> RatPoly {
        let mut power = Rational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let scaled = a * &power;
                power = &power * c;
                scaled
            })
            .collect();
        RatPoly::from_coeffs(coeffs)
    }

    /// Synthetic division by `(x - r)`: returns `(quotient, remainder)` with
    /// `self = quotient * (x - r) + remainder`.
    pub fn divide_by_linear(&self, r: &Rational) -> (RatPoly, Rational) {
        if self.is_zero() {
            return (RatPoly::zero(), Rational::zero());
        }
        let deg = self.coeffs.len() - 1;
        let mut quotient = vec![Rational::zero(); deg];
        let mut carry = Rational::zero();
        for k in (0..=deg).rev() {
            let value = &self.coeffs[k] + &carry;
            if k == 0 {
                return (RatPoly::from_coeffs(quotient), value);
            }
            carry = &value * r;
            quotient[k - 1] = value;
        }
        unreachable!()
    }

    /// Multiplicity of the root 0, i.e. the number of trailing zero coefficients.
    pub fn order_at_zero(&self) -> usize {
        self.coeffs
            .iter()
            .take_while(|c| c.is_zero())
            .count()
            .min(self.coeffs.len())
    }

    /// Exact division by `x^k`; panics if 0 is not a root of order at least `k`.
    pub fn shift_down(&self, k: usize) -> RatPoly {
        assert!(self.order_at_zero() >= k || self.is_zero(), "x^k does not divide");
        RatPoly::from_coeffs(self.coeffs.iter().skip(k).cloned().collect())
    }
}

impl Add for &RatPoly {
    type Output = RatPoly;
    fn add(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        RatPoly::from_coeffs(coeffs)
    }
}

impl Sub for &RatPoly {
    type Output = RatPoly;
    fn sub(self, rhs: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        RatPoly::from_coeffs(coeffs)
    }
}

impl Mul for &RatPoly {
    type Output = RatPoly;
    fn mul(self, rhs: &RatPoly) -> RatPoly {
        if self.is_zero() || rhs.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        RatPoly::from_coeffs(coeffs)
    }
}

impl Neg for &RatPoly {
    type Output = RatPoly;
    fn neg(self) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, c) in self.coeffs.iter().enumerate() {
            if k == 0 {
                write!(f, "{c}")?;
            } else if k == 1 {
                write!(f, " + {c}*x")?;
            } else {
                write!(f, " + {c}*x^{k}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
