//! Exact Gamma moments of the Laguerre weight: `int_0^infty x^k e^{-x} dx = k!`,
//! plus the factorials and central binomial coefficients used throughout.

use num_bigint::BigInt;
use num_traits::One;

use crate::poly::RatPoly;
use crate::rational::Rational;

pub fn factorial(k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= i;
    }
    acc
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    num_integer::binomial(BigInt::from(n), BigInt::from(k.min(n - k)))
}

/// `C(2p, p)`.
pub fn central_binomial(p: usize) -> BigInt {
    binomial(2 * p, p)
}

/// `int_0^infty p(x) e^{-x} dx = sum_k coeff_k * k!`, exactly.
pub fn exp_moment_integrate(p: &RatPoly) -> Rational {
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * &Rational::from_bigint(factorial(k)))
        .sum()
}

/// `int_0^infty p(x) x^nu e^{-x} dx / Gamma(nu+1) = sum_k coeff_k * (k+nu)!/nu!`.
pub fn exp_moment_integrate_weighted(p: &RatPoly, nu: usize) -> Rational {
    let nu_fact = factorial(nu);
    p.coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| c * &Rational::new(factorial(k + nu), nu_fact.clone()))
        .sum()
}
