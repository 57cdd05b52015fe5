//! Exact characteristic polynomials and spectral certificates for the `Q_S`
//! family, plus the generic doubly-stochastic contraction inequalities.
//!
//! Characteristic polynomials are computed division-free (Berkowitz) over big
//! integers after clearing denominators; conjectured eigenvalues are verified
//! by repeated exact division, never by floating point. A float symmetric
//! eigensolver exists only as a cross-check.

use std::time::Instant;

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use serde_json::json;

use crate::error::Error;
use crate::matrix::RatMatrix;
use crate::moments::central_binomial;
use crate::poly::RatPoly;
use crate::qmatrix::q_matrix_cached;
use crate::rational::Rational;

/// Which exact algorithm produced a characteristic polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Berkowitz iteration: no divisions at all.
    DivisionFree,
    /// Faddeev-LeVerrier with exact integer divisions.
    FractionFree,
}

/// Monic `det(lambda I - M)` with exact rational coefficients (ascending).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    pub dim: usize,
    pub poly: RatPoly,
    pub provenance: Provenance,
}

/// Characteristic polynomial by the Berkowitz algorithm: clear denominators,
/// run the division-free iteration over `BigInt`, then undo the scaling via
/// `p(lambda) = q(D lambda) / D^dim`.
pub fn char_poly(m: &RatMatrix) -> CharPoly {
    let n = m.dim();
    let (scaled, d) = m.clear_denominators();
    let coeffs = berkowitz_int(n, &scaled);
    CharPoly {
        dim: n,
        poly: rescale_char_poly(coeffs, &d, n),
        provenance: Provenance::DivisionFree,
    }
}

/// Characteristic polynomial by Faddeev-LeVerrier over big integers (every
/// division is exact). Independent of the Berkowitz route; used as an oracle.
pub fn char_poly_fraction_free(m: &RatMatrix) -> CharPoly {
    let n = m.dim();
    let (scaled, d) = m.clear_denominators();
    let coeffs = faddeev_leverrier_int(n, &scaled);
    CharPoly {
        dim: n,
        poly: rescale_char_poly(coeffs, &d, n),
        provenance: Provenance::FractionFree,
    }
}

/// Integer char poly coefficients (ascending) of the row-major matrix `a`.
fn berkowitz_int(n: usize, a: &[BigInt]) -> Vec<BigInt> {
    let at = |i: usize, j: usize| -> &BigInt { &a[i * n + j] };
    // Leading-first coefficient vector of the leading principal submatrices.
    let mut poly = vec![BigInt::one()];
    for i in 1..=n {
        let r = i - 1;
        // First column of the Toeplitz factor:
        // (1, -a_rr, -R C, -R B C, ..., -R B^{i-2} C).
        let mut col = Vec::with_capacity(i + 1);
        col.push(BigInt::one());
        col.push(-at(r, r).clone());
        if i >= 2 {
            let mut krylov: Vec<BigInt> = (0..r).map(|k| at(k, r).clone()).collect();
            let dot = |v: &[BigInt]| -> BigInt {
                (0..r).map(|k| at(r, k) * &v[k]).sum()
            };
            col.push(-dot(&krylov));
            for _ in 3..=i {
                krylov = (0..r)
                    .map(|row| (0..r).map(|k| at(row, k) * &krylov[k]).sum())
                    .collect();
                col.push(-dot(&krylov));
            }
        }
        let mut next = vec![BigInt::zero(); i + 1];
        for (row, slot) in next.iter_mut().enumerate() {
            for (c, p) in poly.iter().enumerate().take(row + 1) {
                if row - c < col.len() {
                    *slot += &col[row - c] * p;
                }
            }
        }
        poly = next;
    }
    poly.reverse();
    poly
}

/// Faddeev-LeVerrier over `BigInt`; the trace divisions are exact.
fn faddeev_leverrier_int(n: usize, a: &[BigInt]) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m: Vec<BigInt> = (0..n * n)
        .map(|k| {
            if k / n == k % n {
                BigInt::one()
            } else {
                BigInt::zero()
            }
        })
        .collect();
    for k in 1..=n {
        // m <- a * m
        let mut next = vec![BigInt::zero(); n * n];
        for i in 0..n {
            for l in 0..n {
                let v = &a[i * n + l];
                if v.is_zero() {
                    continue;
                }
                for j in 0..n {
                    next[i * n + j] += v * &m[l * n + j];
                }
            }
        }
        m = next;
        let trace: BigInt = (0..n).map(|i| m[i * n + i].clone()).sum();
        let (c, rem) = num_integer::Integer::div_rem(&(-trace), &BigInt::from(k));
        debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
        for i in 0..n {
            m[i * n + i] += &c;
        }
        coeffs[n - k] = c;
    }
    coeffs
}

/// `p(lambda) = q(D lambda) / D^n`, i.e. coefficient `k` becomes `q_k / D^{n-k}`.
fn rescale_char_poly(coeffs: Vec<BigInt>, d: &BigInt, n: usize) -> RatPoly {
    RatPoly::from_coeffs(
        coeffs
            .into_iter()
            .enumerate()
            .map(|(k, q)| Rational::new(q, pow_bigint(d, n - k)))
            .collect(),
    )
}

fn pow_bigint(base: &BigInt, exp: usize) -> BigInt {
    let mut acc = BigInt::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// The conjectured nonzero eigenvalue `lambda(n) = C(2n,n)^2 16^{-n}`.
pub fn conjectured_eigenvalue(n: usize) -> Rational {
    let cb = central_binomial(n);
    Rational::new(&cb * &cb, BigInt::from(16).pow(n as u32))
}

/// Outcome of the exact eigenvalue-conjecture verification for one `S`.
#[derive(Clone, Debug)]
pub struct SpectralReport {
    pub s: usize,
    pub char_poly: CharPoly,
    /// Verified nonzero eigenvalues with multiplicities (always 1 on pass).
    pub eigs: Vec<(Rational, usize)>,
    pub zero_multiplicity: usize,
    /// `1 - lambda(1)` once the conjecture verifies (`1` for `S = 1`).
    pub gap_exact: Option<Rational>,
    pub gap_float: f64,
    pub passed: bool,
    pub failure: Option<String>,
    pub elapsed_ms: u64,
}

/// Verifies that the spectrum of `Q_S` is exactly
/// `{lambda(0), ..., lambda(floor(S/2))}`, each simple, plus the zero
/// eigenvalue with multiplicity `ceil(S/2)`: divides the characteristic
/// polynomial by each conjectured linear factor exactly once, confirms the
/// quotient does not vanish there, and checks the residual is
/// `lambda^{ceil(S/2)}`.
pub fn verify_eig_conjecture(s: usize) -> SpectralReport {
    let start = Instant::now();
    let q = q_matrix_cached(s);
    let cp = char_poly(&q.entries);
    let gap_float = spectral_gap_float(&q.entries);

    let mut eigs = Vec::new();
    let mut failure: Option<String> = None;
    let mut remaining = cp.poly.clone();
    for n in 0..=s / 2 {
        let root = conjectured_eigenvalue(n);
        let (quotient, rem) = remaining.divide_by_linear(&root);
        if !rem.is_zero() {
            failure = Some(format!("lambda({n}) = {root} is not a root"));
            break;
        }
        if quotient.eval(&root).is_zero() {
            failure = Some(format!("lambda({n}) = {root} has multiplicity > 1"));
            break;
        }
        eigs.push((root, 1));
        remaining = quotient;
    }

    let expected_zero = s.div_ceil(2);
    let mut zero_multiplicity = 0;
    if failure.is_none() {
        let order = remaining.order_at_zero();
        if order == expected_zero && remaining.shift_down(order).is_one() {
            zero_multiplicity = order;
        } else {
            failure = Some(format!(
                "residual factor is {remaining}, expected lambda^{expected_zero}"
            ));
        }
    }

    let passed = failure.is_none();
    let gap_exact = if passed && s >= 1 {
        Some(if s == 1 {
            Rational::one()
        } else {
            Rational::one() - conjectured_eigenvalue(1)
        })
    } else {
        None
    };

    SpectralReport {
        s,
        char_poly: cp,
        eigs,
        zero_multiplicity,
        gap_exact,
        gap_float,
        passed,
        failure,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

impl SpectralReport {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "S": self.s,
            "char_poly": self.char_poly.poly.coeffs().iter().map(Rational::to_string).collect::<Vec<_>>(),
            "eigs": self.eigs.iter().map(|(v, m)| json!({
                "value": v.to_string(),
                "multiplicity": m,
            })).collect::<Vec<_>>(),
            "zero_multiplicity": self.zero_multiplicity,
            "gap_exact": self.gap_exact.as_ref().map(Rational::to_string),
            "gap_float": self.gap_float,
            "passed": self.passed,
            "failure": self.failure,
            "elapsed_ms": self.elapsed_ms,
        })
    }
}

/// PSD certificate for a real-rooted monic polynomial: all roots are `>= 0`
/// iff the coefficients weakly alternate, `(-1)^{deg-k} c_k >= 0`.
pub fn psd_certificate(p: &CharPoly) -> bool {
    let deg = match p.poly.degree() {
        Some(d) => d,
        None => return true,
    };
    p.poly.coeffs().iter().enumerate().all(|(k, c)| {
        if (deg - k) % 2 == 0 {
            !c.is_negative()
        } else {
            c.is_negative() || c.is_zero()
        }
    })
}

/// All eigenvalue moduli of a symmetric float matrix, sorted descending.
pub fn symmetric_eigenvalue_moduli(rows: &[Vec<f64>]) -> Vec<f64> {
    let n = rows.len();
    let m = DMatrix::from_fn(n, n, |i, j| rows[i][j]);
    let mut moduli: Vec<f64> = SymmetricEigen::new(m)
        .eigenvalues
        .iter()
        .map(|v| v.abs())
        .collect();
    moduli.sort_by(|a, b| b.partial_cmp(a).unwrap());
    moduli
}

/// Spectral gap `sigma_1 - sigma_2` of a symmetric float matrix, with moduli
/// clustered at tolerance `1e-9`; zero when all moduli coincide.
pub fn spectral_gap_from_floats(rows: &[Vec<f64>]) -> f64 {
    let moduli = symmetric_eigenvalue_moduli(rows);
    let sigma1 = moduli[0];
    moduli
        .iter()
        .find(|&&m| m < sigma1 - 1e-9)
        .map(|sigma2| sigma1 - sigma2)
        .unwrap_or(0.0)
}

/// Float spectral gap of an exact symmetric matrix (cross-check only).
pub fn spectral_gap_float(m: &RatMatrix) -> f64 {
    debug_assert!(m.is_symmetric());
    spectral_gap_from_floats(&m.to_f64_rows())
}

const DS_TOLERANCE: f64 = 1e-12;
const CONTRACTION_SLACK: f64 = 1e-9;

fn check_doubly_stochastic_floats(a: &[Vec<f64>]) -> Result<(), Error> {
    let n = a.len();
    let fail = |detail: String| Error::NotDoublyStochastic {
        tolerance: DS_TOLERANCE,
        detail,
    };
    for (i, row) in a.iter().enumerate() {
        if row.len() != n {
            return Err(fail(format!("row {i} has length {}", row.len())));
        }
        for (j, &v) in row.iter().enumerate() {
            if v < -DS_TOLERANCE {
                return Err(fail(format!("entry ({i}, {j}) = {v} is negative")));
            }
        }
        let sum: f64 = row.iter().sum();
        if (sum - 1.0).abs() > DS_TOLERANCE {
            return Err(fail(format!("row {i} sums to {sum}")));
        }
    }
    for j in 0..n {
        let sum: f64 = a.iter().map(|row| row[j]).sum();
        if (sum - 1.0).abs() > DS_TOLERANCE {
            return Err(fail(format!("column {j} sums to {sum}")));
        }
    }
    Ok(())
}

fn min_entry_floats(a: &[Vec<f64>]) -> f64 {
    a.iter()
        .flat_map(|row| row.iter().copied())
        .fold(f64::INFINITY, f64::min)
}

fn hermitian_form(a: &[Vec<f64>], v: &[Complex64]) -> Complex64 {
    let n = v.len();
    let mut acc = Complex64::zero();
    for i in 0..n {
        let av: Complex64 = (0..n).map(|j| v[j] * a[i][j]).sum();
        acc += av * v[i].conj();
    }
    acc
}

fn dist_sq_to_ones(v: &[Complex64]) -> (f64, f64) {
    let norm_sq: f64 = v.iter().map(|z| z.norm_sqr()).sum();
    let total: Complex64 = v.iter().sum();
    let dist_sq = norm_sq - total.norm_sqr() / v.len() as f64;
    (norm_sq, dist_sq)
}

/// Contraction inequality for a doubly stochastic `A` with
/// `mu = n * min entry > 0`:
/// `|<Av, v>| <= |v|^2 - mu * Dist(v, span(1))^2` (slack `1e-9`).
pub fn check_ds_contraction(
    a: &[Vec<f64>],
    v: &[Complex64],
    mu: f64,
) -> Result<bool, Error> {
    check_doubly_stochastic_floats(a)?;
    let actual_mu = a.len() as f64 * min_entry_floats(a);
    if actual_mu <= 0.0 {
        return Err(Error::NonPositiveMu { mu: actual_mu });
    }
    if mu <= 0.0 || mu > actual_mu + 1e-9 {
        return Err(Error::InvalidConfig(format!(
            "mu = {mu} is not a valid lower bound for n * min entry = {actual_mu}"
        )));
    }
    let (norm_sq, dist_sq) = dist_sq_to_ones(v);
    let lhs = hermitian_form(a, v).norm();
    Ok(lhs <= norm_sq - mu * dist_sq + CONTRACTION_SLACK)
}

/// Contraction inequality with the spectral gap of a symmetric doubly
/// stochastic `A`: `|<Av, v>| <= |v|^2 - SG(A) * Dist(v, span(1))^2`.
#[allow(clippy::needless_range_loop)] // (i, j<i) pair walk
pub fn check_sg_contraction(a: &[Vec<f64>], v: &[Complex64]) -> Result<bool, Error> {
    check_doubly_stochastic_floats(a)?;
    let n = a.len();
    for i in 0..n {
        for j in 0..i {
            if (a[i][j] - a[j][i]).abs() > DS_TOLERANCE {
                return Err(Error::NotDoublyStochastic {
                    tolerance: DS_TOLERANCE,
                    detail: format!("asymmetric at ({i}, {j})"),
                });
            }
        }
    }
    let actual_mu = n as f64 * min_entry_floats(a);
    if actual_mu <= 0.0 {
        return Err(Error::NonPositiveMu { mu: actual_mu });
    }
    let sg = spectral_gap_from_floats(a);
    let (norm_sq, dist_sq) = dist_sq_to_ones(v);
    let lhs = hermitian_form(a, v).norm();
    Ok(lhs <= norm_sq - sg * dist_sq + CONTRACTION_SLACK)
}

/// Random symmetric doubly stochastic matrix with strictly positive entries:
/// Sinkhorn row/column scaling of a positive random matrix, symmetrized, with
/// re-normalization sweeps until row and column sums are within `1e-12`.
#[allow(clippy::needless_range_loop)] // (i, j<i) pair walk
pub fn random_symmetric_doubly_stochastic<R: Rng>(n: usize, rng: &mut R) -> Vec<Vec<f64>> {
    assert!(n >= 1);
    let mut a: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_range(0.05..1.0)).collect())
        .collect();
    for _round in 0..64 {
        for _sweep in 0..200 {
            for row in a.iter_mut() {
                let sum: f64 = row.iter().sum();
                row.iter_mut().for_each(|v| *v /= sum);
            }
            for j in 0..n {
                let sum: f64 = a.iter().map(|row| row[j]).sum();
                a.iter_mut().for_each(|row| row[j] /= sum);
            }
            if doubly_stochastic_deviation(&a) < 1e-14 {
                break;
            }
        }
        // Symmetrize; the average of a DS matrix and its transpose stays DS.
        for i in 0..n {
            for j in 0..i {
                let avg = 0.5 * (a[i][j] + a[j][i]);
                a[i][j] = avg;
                a[j][i] = avg;
            }
        }
        if doubly_stochastic_deviation(&a) < 1e-13 {
            break;
        }
    }
    debug_assert!(doubly_stochastic_deviation(&a) <= DS_TOLERANCE);
    a
}

fn doubly_stochastic_deviation(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut worst: f64 = 0.0;
    for row in a {
        worst = worst.max((row.iter().sum::<f64>() - 1.0).abs());
    }
    for j in 0..n {
        worst = worst.max((a.iter().map(|r| r[j]).sum::<f64>() - 1.0).abs());
    }
    worst
}

/// Uniform random complex vector with coordinates in `[-1, 1]^2`.
pub fn random_complex_vector<R: Rng>(n: usize, rng: &mut R) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::ratio(n, d)
    }

    #[test]
    fn char_poly_of_identity_and_q1() {
        let cp = char_poly(&RatMatrix::from_rows(vec![vec![Rational::one()]]));
        assert_eq!(cp.poly.coeffs(), &[rat(-1, 1), rat(1, 1)]); // lambda - 1

        let q1 = q_matrix_cached(1);
        let cp1 = char_poly(&q1.entries);
        // lambda^2 - lambda
        assert_eq!(cp1.poly.coeffs(), &[rat(0, 1), rat(-1, 1), rat(1, 1)]);
    }

    #[test]
    fn char_poly_of_q2_has_conjectured_roots() {
        let q2 = q_matrix_cached(2);
        let cp = char_poly(&q2.entries);
        // lambda^3 - (5/4) lambda^2 + (1/4) lambda, roots {1, 1/4, 0}.
        assert_eq!(
            cp.poly.coeffs(),
            &[rat(0, 1), rat(1, 4), rat(-5, 4), rat(1, 1)]
        );
        assert!(cp.poly.eval(&Rational::one()).is_zero());
        assert!(cp.poly.eval(&rat(1, 4)).is_zero());
    }

    #[test]
    fn berkowitz_agrees_with_faddeev_leverrier() {
        for s in 0..=8 {
            let q = q_matrix_cached(s);
            let a = char_poly(&q.entries);
            let b = char_poly_fraction_free(&q.entries);
            assert_eq!(a.poly, b.poly, "S = {s}");
            assert_eq!(a.provenance, Provenance::DivisionFree);
            assert_eq!(b.provenance, Provenance::FractionFree);
        }
        // A non-symmetric matrix with known char poly (companion of x^2 - x - 1).
        let m = RatMatrix::from_rows(vec![
            vec![Rational::zero(), Rational::one()],
            vec![Rational::one(), Rational::one()],
        ]);
        assert_eq!(
            char_poly(&m).poly,
            char_poly_fraction_free(&m).poly
        );
        assert_eq!(
            char_poly(&m).poly.coeffs(),
            &[rat(-1, 1), rat(-1, 1), rat(1, 1)]
        );
    }

    #[test]
    fn conjectured_eigenvalues() {
        assert_eq!(conjectured_eigenvalue(0), Rational::one());
        assert_eq!(conjectured_eigenvalue(1), rat(1, 4));
        assert_eq!(conjectured_eigenvalue(2), rat(9, 64));
    }

    #[test]
    fn eig_conjecture_small_cases() {
        let r1 = verify_eig_conjecture(1);
        assert!(r1.passed, "{:?}", r1.failure);
        assert_eq!(r1.eigs, vec![(Rational::one(), 1)]);
        assert_eq!(r1.zero_multiplicity, 1);
        assert_eq!(r1.gap_exact, Some(Rational::one()));

        let r2 = verify_eig_conjecture(2);
        assert!(r2.passed, "{:?}", r2.failure);
        assert_eq!(
            r2.eigs,
            vec![(Rational::one(), 1), (rat(1, 4), 1)]
        );
        assert_eq!(r2.zero_multiplicity, 1);
        assert_eq!(r2.gap_exact, Some(rat(3, 4)));
    }

    #[test]
    fn multiplicity_consistency() {
        // floor(S/2) + 1 nonzero roots plus ceil(S/2) zeros fill dimension S+1.
        for s in 0..100usize {
            assert_eq!(s / 2 + 1 + s.div_ceil(2), s + 1);
        }
    }

    #[test]
    fn psd_certificate_examples() {
        let psd = CharPoly {
            dim: 2,
            poly: RatPoly::from_coeffs(vec![rat(0, 1), rat(-1, 1), rat(1, 1)]),
            provenance: Provenance::DivisionFree,
        };
        assert!(psd_certificate(&psd)); // lambda^2 - lambda, roots {0, 1}
        let indefinite = CharPoly {
            dim: 2,
            poly: RatPoly::from_coeffs(vec![rat(-1, 1), rat(0, 1), rat(1, 1)]),
            provenance: Provenance::DivisionFree,
        };
        assert!(!psd_certificate(&indefinite)); // lambda^2 - 1, root -1
    }

    #[test]
    fn float_gap_matches_exact_gaps() {
        let q1 = q_matrix_cached(1);
        assert!((spectral_gap_float(&q1.entries) - 1.0).abs() < 1e-9);
        let q2 = q_matrix_cached(2);
        assert!((spectral_gap_float(&q2.entries) - 0.75).abs() < 1e-9);
    }

    #[test]
    fn constant_matrix_attains_ds_equality() {
        let n = 4;
        let a = vec![vec![0.25; n]; n];
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let v = random_complex_vector(n, &mut rng);
            let (norm_sq, dist_sq) = dist_sq_to_ones(&v);
            let lhs = hermitian_form(&a, &v).norm();
            // mu = 1: equality up to rounding.
            assert!((lhs - (norm_sq - dist_sq)).abs() < 1e-9);
            assert!(check_ds_contraction(&a, &v, 1.0).unwrap());
        }
    }

    #[test]
    fn identity_is_rejected() {
        let eye = vec![vec![1.0, 0.0], vec![0.0, 1.0]];
        let v = vec![Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)];
        assert!(matches!(
            check_ds_contraction(&eye, &v, 0.0),
            Err(Error::NonPositiveMu { .. })
        ));
        assert!(matches!(
            check_sg_contraction(&eye, &v),
            Err(Error::NonPositiveMu { .. })
        ));
    }

    #[test]
    fn non_doubly_stochastic_is_rejected() {
        let bad = vec![vec![0.6, 0.3], vec![0.4, 0.7]];
        let v = vec![Complex64::new(1.0, 0.0); 2];
        assert!(matches!(
            check_ds_contraction(&bad, &v, 0.8),
            Err(Error::NotDoublyStochastic { .. })
        ));
    }

    #[test]
    fn contraction_on_q_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for s in 1..=6usize {
            let a = q_matrix_cached(s).entries.to_f64_rows();
            let mu = (s + 1) as f64 * min_entry_floats(&a);
            for _ in 0..200 {
                let v = random_complex_vector(s + 1, &mut rng);
                assert!(check_ds_contraction(&a, &v, mu).unwrap(), "S = {s}");
                assert!(check_sg_contraction(&a, &v).unwrap(), "S = {s}");
            }
        }
    }

    #[test]
    fn all_ones_vector_attains_sg_equality() {
        let a = q_matrix_cached(3).entries.to_f64_rows();
        let v = vec![Complex64::new(1.0, 0.0); 4];
        let (norm_sq, dist_sq) = dist_sq_to_ones(&v);
        assert!(dist_sq.abs() < 1e-12);
        let lhs = hermitian_form(&a, &v).norm();
        assert!((lhs - norm_sq).abs() < 1e-9);
        assert!(check_sg_contraction(&a, &v).unwrap());
    }

    #[test]
    fn sinkhorn_matrices_satisfy_contractions() {
        let mut rng = ChaCha8Rng::seed_from_u64(202);
        for _ in 0..60 {
            let n = rng.gen_range(2..=8);
            let a = random_symmetric_doubly_stochastic(n, &mut rng);
            assert!(doubly_stochastic_deviation(&a) <= DS_TOLERANCE);
            assert!(min_entry_floats(&a) > 0.0);
            let mu = n as f64 * min_entry_floats(&a);
            let v = random_complex_vector(n, &mut rng);
            assert!(check_ds_contraction(&a, &v, mu).unwrap());
            assert!(check_sg_contraction(&a, &v).unwrap());
        }
    }

    #[test]
    fn char_poly_of_q_has_eigenvalue_one() {
        for s in 0..=8 {
            let q = q_matrix_cached(s);
            let cp = char_poly(&q.entries);
            assert!(cp.poly.eval(&Rational::one()).is_zero(), "S = {s}");
            assert!(psd_certificate(&cp), "S = {s}");
        }
    }
}
