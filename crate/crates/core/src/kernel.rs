//! The kernel matrix `kappa_{m,n}` of the operator that squares `Q_S`, built
//! by two independent exact routes, together with its entrywise lower bound
//! and the bridge `Q_S^2 = P kappa_S P^t`.
//!
//! Fast route (production): the central-binomial convolution
//!
//! ```text
//! kappa_{m,n} = 4^{-S} sum C(2i,i) C(2j,j) C(2u,u) C(2v,v)
//! ```
//!
//! over `i,j,u,v >= 0` with `i+j = S-n`, `u+v = n`, `j+v = m`.
//!
//! Slow route (oracle): expand `L_{S-n}(x sin^2 t) L_n(x cos^2 t) L_m(x)`,
//! integrate `x` by Gamma moments and `t` by the rational Wallis values
//! `(2/pi) int_0^{pi/2} cos^{2u} t sin^{2v} t dt = (2u)!(2v)! / (4^{u+v} u! v! (u+v)!)`.

use num_bigint::BigInt;
use serde_json::json;

use crate::laguerre::{connection_coefficients, laguerre_half, laguerre_poly};
use crate::matrix::RatMatrix;
use crate::moments::{central_binomial, exp_moment_integrate, factorial};
use crate::qmatrix::q_matrix_cached;
use crate::rational::{pi_lower, pi_sq_lower, Rational};

/// `[kappa_{m,n}]_{m,n=0..S}`; symmetric and doubly stochastic, with every
/// entry at least `4 / (pi^2 (S+1))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaMatrix {
    pub s: usize,
    pub entries: RatMatrix,
}

/// `[p_m(a, S-a)]_{a,m=0..S}`; every row sums to exactly 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionMatrix {
    pub s: usize,
    pub entries: RatMatrix,
}

/// Fast route: the central-binomial convolution, `O(S)` terms per entry.
pub fn kappa_binomial(s: usize, m: usize, n: usize) -> Rational {
    assert!(m <= s && n <= s);
    let j_min = m.saturating_sub(n);
    let j_max = (s - n).min(m);
    let mut sum = BigInt::from(0);
    for j in j_min..=j_max {
        let i = s - n - j;
        let u = n + j - m;
        let v = m - j;
        sum += central_binomial(i) * central_binomial(j) * central_binomial(u) * central_binomial(v);
    }
    Rational::new(sum, BigInt::from(4).pow(s as u32))
}

/// Normalized Wallis integral `(2/pi) int_0^{pi/2} cos^{2u} t sin^{2v} t dt`.
fn wallis(u: usize, v: usize) -> Rational {
    let num = factorial(2 * u) * factorial(2 * v);
    let den = BigInt::from(4).pow((u + v) as u32) * factorial(u) * factorial(v) * factorial(u + v);
    Rational::new(num, den)
}

/// Slow oracle route via the trigonometric integral representation of the
/// kernel applied to `L_n`, paired against `L_m`. `O(S^3)` terms per entry.
pub fn kappa_integral(s: usize, m: usize, n: usize) -> Rational {
    assert!(m <= s && n <= s);
    let sin_part = laguerre_poly(s - n, 0); // argument x sin^2 t
    let cos_part = laguerre_poly(n, 0); // argument x cos^2 t
    let pair = laguerre_poly(m, 0);
    let mut total = Rational::zero();
    for (alpha, ca) in sin_part.coeffs().iter().enumerate() {
        for (beta, cb) in cos_part.coeffs().iter().enumerate() {
            let angular = wallis(beta, alpha);
            let ab = ca * cb * angular;
            for (gamma, cg) in pair.coeffs().iter().enumerate() {
                let moment = Rational::from_bigint(factorial(alpha + beta + gamma));
                total = total + &ab * cg * moment;
            }
        }
    }
    total
}

/// Checks `K_S(L_n) = 0` for `n > S` by assembling the kernel sum
/// `K_S(x,y) = sum_{k=0}^S [L_k L_{S-k}](x/2) [L_k L_{S-k}](y/2)`, integrating
/// it against `L_n(y) e^{-y}` exactly, and pairing with `L_m(x) e^{-x}` for
/// every `m <= max_m`.
pub fn kappa_vanishing_check(s: usize, n: usize, max_m: usize) -> bool {
    assert!(n > s, "vanishing holds only above the antidiagonal degree");
    let mut image = crate::poly::RatPoly::zero();
    let target = laguerre_poly(n, 0);
    for k in 0..=s {
        let pair = &laguerre_half(k) * &laguerre_half(s - k);
        let weight = exp_moment_integrate(&(&pair * &target));
        image = &image + &pair.scale(&weight);
    }
    (0..=max_m).all(|m| exp_moment_integrate(&(&image * &laguerre_poly(m, 0))).is_zero())
}

/// Assembles `kappa_S` by the fast binomial route.
pub fn build_kappa(s: usize) -> KappaMatrix {
    let entries = RatMatrix::from_fn(s + 1, |m, n| kappa_binomial(s, m, n));
    KappaMatrix { s, entries }
}

/// Assembles the connection matrix `P` with `P[a][m] = p_m(a, S-a)`.
pub fn build_connection(s: usize) -> ConnectionMatrix {
    let rows = (0..=s)
        .map(|a| connection_coefficients(a, s - a))
        .collect();
    ConnectionMatrix {
        s,
        entries: RatMatrix::from_rows(rows),
    }
}

/// Dual-route agreement: the binomial and integral routes coincide entrywise.
pub fn kappa_dual_route_agrees(s: usize) -> bool {
    (0..=s).all(|m| (0..=s).all(|n| kappa_binomial(s, m, n) == kappa_integral(s, m, n)))
}

/// Exact bridge `Q_S^2 = P kappa_S P^t`.
pub fn verify_step3_bridge(s: usize) -> bool {
    let q = q_matrix_cached(s);
    let kappa = build_kappa(s);
    let p = build_connection(s);
    let q_squared = q.entries.mul(&q.entries);
    let bridged = p.entries.mul(&kappa.entries).mul(&p.entries.transpose());
    q_squared == bridged
}

/// Result of the entrywise lower-bound certificate for `kappa_S`.
#[derive(Clone, Debug)]
pub struct KappaBoundCheck {
    pub s: usize,
    pub min_entry: Rational,
    /// `min entry * (S+1)`, the quantity compared against `4 / pi^2`.
    pub min_times_dim: Rational,
    pub holds: bool,
}

/// Certifies `kappa_{m,n} >= 4 / (pi^2 (S+1))` for every entry, using the
/// rational lower bound for `pi^2` (sound: the certified product only shrinks
/// when the bound does).
pub fn verify_kappa_entry_bound(s: usize) -> KappaBoundCheck {
    let kappa = build_kappa(s);
    let (min_entry, _) = kappa.entries.min_entry();
    let min_times_dim = &min_entry * &Rational::from_int(s as i64 + 1);
    let holds = &min_times_dim * &pi_sq_lower() >= Rational::from_int(4);
    KappaBoundCheck {
        s,
        min_entry,
        min_times_dim,
        holds,
    }
}

/// Certifies the central-binomial Stirling bound
/// `C(2p,p) / 4^p >= 1 / sqrt(pi (p + 1/2))` for all `p <= max_p`, in the
/// squared form `(C(2p,p)/4^p)^2 * pi_lower * (p + 1/2) >= 1`.
pub fn verify_stirling_bound(max_p: usize) -> bool {
    let pi_low = pi_lower();
    (0..=max_p).all(|p| {
        let cb = central_binomial(p);
        let ratio_sq = Rational::new(&cb * &cb, BigInt::from(16).pow(p as u32));
        ratio_sq * &pi_low * Rational::new(BigInt::from(2 * p + 1), BigInt::from(2))
            >= Rational::one()
    })
}

impl KappaMatrix {
    pub fn to_csv(&self) -> String {
        self.entries.to_csv()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "S": self.s, "entries": self.entries.entry_strings() })
    }
}

impl ConnectionMatrix {
    pub fn to_csv(&self) -> String {
        self.entries.to_csv()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({ "S": self.s, "entries": self.entries.entry_strings() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qmatrix::verify_doubly_stochastic;

    #[test]
    fn kappa_binomial_small_values() {
        assert_eq!(kappa_binomial(0, 0, 0), Rational::one());
        assert_eq!(kappa_binomial(1, 0, 0), Rational::ratio(1, 2));
        assert_eq!(kappa_binomial(1, 1, 0), Rational::ratio(1, 2));
    }

    #[test]
    fn kappa_integral_matches_binomial_route() {
        assert_eq!(kappa_integral(0, 0, 0), Rational::one());
        assert_eq!(kappa_integral(1, 0, 0), Rational::ratio(1, 2));
        for s in 0..=4 {
            assert!(kappa_dual_route_agrees(s), "S = {s}");
        }
    }

    #[test]
    fn kappa_matrices_are_symmetric_doubly_stochastic() {
        for s in 0..=30 {
            let kappa = build_kappa(s);
            assert!(kappa.entries.is_symmetric(), "S = {s}");
            assert!(verify_doubly_stochastic(&kappa.entries).is_ok(), "S = {s}");
        }
    }

    #[test]
    fn kappa_one_is_constant() {
        let kappa = build_kappa(1);
        let half = Rational::ratio(1, 2);
        assert_eq!(
            kappa.entries,
            RatMatrix::from_rows(vec![
                vec![half.clone(), half.clone()],
                vec![half.clone(), half.clone()],
            ])
        );
    }

    #[test]
    fn all_ones_vector_is_fixed() {
        // Row sums 1 is exactly kappa * 1 = 1.
        for s in 0..=12 {
            let kappa = build_kappa(s);
            for m in 0..=s {
                assert_eq!(kappa.entries.row_sum(m), Rational::one());
            }
        }
    }

    #[test]
    fn connection_rows_sum_to_one() {
        for s in 0..=30 {
            let p = build_connection(s);
            for a in 0..=s {
                assert_eq!(p.entries.row_sum(a), Rational::one(), "S={s} a={a}");
            }
        }
        let p1 = build_connection(1);
        let half = Rational::ratio(1, 2);
        assert_eq!(
            p1.entries,
            RatMatrix::from_rows(vec![
                vec![half.clone(), half.clone()],
                vec![half.clone(), half.clone()],
            ])
        );
    }

    #[test]
    fn vanishing_above_degree() {
        assert!(kappa_vanishing_check(1, 2, 5));
        assert!(kappa_vanishing_check(0, 1, 5));
        assert!(kappa_vanishing_check(2, 3, 8));
    }

    #[test]
    fn bridge_small_cases() {
        assert!(verify_step3_bridge(0));
        assert!(verify_step3_bridge(1));
        for s in 2..=8 {
            assert!(verify_step3_bridge(s), "S = {s}");
        }
    }

    #[test]
    fn entry_bound_small_cases() {
        for s in 1..=10 {
            let check = verify_kappa_entry_bound(s);
            assert!(check.holds, "S = {s}");
        }
        // S = 1: min entry 1/2, (S+1) = 2, so the certified product is 1.
        assert_eq!(
            verify_kappa_entry_bound(1).min_times_dim,
            Rational::one()
        );
    }

    #[test]
    fn stirling_bound_small_sweep() {
        assert!(verify_stirling_bound(50));
    }

    #[test]
    fn power_convergence_toward_uniform() {
        // max |kappa^k - J/(S+1)| decreases monotonically (exact route) and is
        // dominated by theta^{k-1} * D_1 with theta = sigma_2 + 1e-9 (float).
        for s in 1..=10usize {
            let kappa = build_kappa(s);
            let uniform = Rational::ratio(1, s as i64 + 1);
            let deviation = |m: &RatMatrix| -> Rational {
                m.entries()
                    .map(|(_, _, v)| (v - &uniform).abs())
                    .max()
                    .unwrap()
            };
            let moduli = crate::spectra::symmetric_eigenvalue_moduli(&kappa.entries.to_f64_rows());
            let theta = moduli.get(1).copied().unwrap_or(0.0) + 1e-9;

            let mut power = kappa.entries.clone();
            let d1 = deviation(&power);
            let mut previous = d1.clone();
            for k in 2..=12 {
                power = power.mul(&kappa.entries);
                let dk = deviation(&power);
                assert!(dk <= previous, "S={s} k={k}: deviation increased");
                let bound = theta.powi(k - 1) * d1.to_f64();
                assert!(
                    dk.to_f64() <= bound + 1e-12,
                    "S={s} k={k}: {} > {bound}",
                    dk.to_f64()
                );
                previous = dk;
            }
        }
    }
}
