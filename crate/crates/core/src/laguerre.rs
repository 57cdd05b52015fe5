//! Generalized Laguerre polynomials `L_n^nu` as exact rational polynomials.
//!
//! These are the orthogonal polynomials for the weight `x^nu e^{-x}` on
//! `(0, infinity)`, normalized by `L_n^nu(0) = C(n+nu, n)`, so that
//!
//! ```text
//! int_0^inf L_m^nu L_n^nu x^nu e^{-x} dx / Gamma(nu+1) = delta_{mn} C(n+nu, n).
//! ```
//!
//! Generation uses the three-term recurrence
//! `(n+1) L_{n+1}^nu = (2n+1+nu-x) L_n^nu - (n+nu) L_{n-1}^nu`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, Mutex};

use crate::error::Error;
use crate::moments::{binomial, exp_moment_integrate};
use crate::poly::RatPoly;
use crate::rational::Rational;

/// A single basis polynomial `L_n^nu` with its expanded coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaguerreBasisElement {
    pub n: usize,
    pub nu: usize,
    pub poly: RatPoly,
}

static CACHE: LazyLock<Mutex<HashMap<usize, Vec<RatPoly>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// `L_n^nu` by the three-term recurrence, memoized per `nu`.
pub fn laguerre(n: usize, nu: usize) -> LaguerreBasisElement {
    LaguerreBasisElement {
        n,
        nu,
        poly: laguerre_poly(n, nu),
    }
}

/// The expanded coefficients of `L_n^nu`.
pub fn laguerre_poly(n: usize, nu: usize) -> RatPoly {
    let mut cache = CACHE.lock().unwrap();
    let seq = cache.entry(nu).or_insert_with(|| {
        vec![RatPoly::one(), {
            // L_1^nu = 1 + nu - x
            RatPoly::from_coeffs(vec![
                Rational::from_int(1 + nu as i64),
                Rational::from_int(-1),
            ])
        }]
    });
    while seq.len() <= n {
        let k = seq.len() - 1; // recurrence advances from L_k to L_{k+1}
        let prev = &seq[k - 1];
        let curr = &seq[k];
        let linear = RatPoly::from_coeffs(vec![
            Rational::from_int((2 * k + 1 + nu) as i64),
            Rational::from_int(-1),
        ]);
        let next = &(&linear * curr) - &prev.scale(&Rational::from_int((k + nu) as i64));
        seq.push(next.scale(&Rational::ratio(1, (k + 1) as i64)));
    }
    seq[n].clone()
}

/// Coefficients of `x -> L_n(x/2)`.
pub fn laguerre_half(n: usize) -> RatPoly {
    laguerre_poly(n, 0).scale_argument(&Rational::ratio(1, 2))
}

/// The expansion `L_a(x/2) L_b(x/2) = sum_m p_m(a,b) L_m(x)`, computed by the
/// exact inner products `p_m = int_0^inf L_a(x/2) L_b(x/2) L_m(x) e^{-x} dx`
/// (the `L_m` are orthonormal for `nu = 0`). Returns `(p_0, ..., p_{a+b})`.
pub fn connection_coefficients(a: usize, b: usize) -> Vec<Rational> {
    let product = &laguerre_half(a) * &laguerre_half(b);
    (0..=a + b)
        .map(|m| exp_moment_integrate(&(&product * &laguerre_poly(m, 0))))
        .collect()
}

/// Squared `L^2(R^d)` norm of the Hermite-Laguerre function `Psi_n^nu`,
/// `2^{-(nu+1)} C(n+nu, n)`, for the supported dimensions `d = 2nu+2`.
pub fn psi_norm(n: usize, nu: usize) -> Result<Rational, Error> {
    if nu > 1 {
        return Err(Error::UnsupportedNu { nu });
    }
    let scale = Rational::ratio(1, 1 << (nu + 1));
    Ok(scale * Rational::from_bigint(binomial(n + nu, n)))
}

/// Table of `||Psi_n^nu||^2` values for `n = 0..=max_n`.
#[derive(Clone, Debug)]
pub struct PsiNormTable {
    pub nu: usize,
    pub norms: BTreeMap<usize, Rational>,
}

impl PsiNormTable {
    pub fn new(nu: usize, max_n: usize) -> Result<Self, Error> {
        let mut norms = BTreeMap::new();
        for n in 0..=max_n {
            norms.insert(n, psi_norm(n, nu)?);
        }
        Ok(PsiNormTable { nu, norms })
    }
}

/// Dense bivariate coefficient grid, `grid[i][j]` = coefficient of `x^i y^j`.
fn bivariate_zero(dim: usize) -> Vec<Vec<Rational>> {
    vec![vec![Rational::zero(); dim]; dim]
}

/// Checks the summation formula `L^1_S(x+y) = sum_{n=0}^S L_n(x) L_{S-n}(y)`
/// by exact bivariate expansion of both sides.
pub fn check_summation_formula(s: usize) -> bool {
    let dim = s + 1;

    // Left side: substitute x+y into L^1_S using Pascal rows for (x+y)^k.
    let mut lhs = bivariate_zero(dim);
    let lag1 = laguerre_poly(s, 1);
    let mut pascal: Vec<Vec<Rational>> = vec![vec![Rational::one()]];
    for k in 1..=s {
        let prev = &pascal[k - 1];
        let mut row = vec![Rational::one()];
        for i in 1..k {
            row.push(&prev[i - 1] + &prev[i]);
        }
        row.push(Rational::one());
        pascal.push(row);
    }
    for (k, c) in lag1.coeffs().iter().enumerate() {
        for (i, binom) in pascal[k].iter().enumerate() {
            let j = k - i;
            lhs[i][j] = &lhs[i][j] + &(c * binom);
        }
    }

    // Right side: sum of separable products.
    let mut rhs = bivariate_zero(dim);
    for n in 0..=s {
        let px = laguerre_poly(n, 0);
        let py = laguerre_poly(s - n, 0);
        for (i, a) in px.coeffs().iter().enumerate() {
            for (j, b) in py.coeffs().iter().enumerate() {
                rhs[i][j] = &rhs[i][j] + &(a * b);
            }
        }
    }

    lhs == rhs
}
