//! The sharpened-inequality evaluator in coefficient space.
//!
//! A [`CoeffSeq`] is a finitely supported map `(m, n) -> C` of expansion
//! coefficients of initial data that is radial in each variable. The
//! antidiagonal blocks `m + n = S` are mutually orthogonal and invariant, so
//! every quantity decomposes blockwise: the quadratic form pairs each block
//! against the exact `Q_S` (converted to nearest doubles once per entry), and
//! the distance to the radial subspace is the squared deviation from each
//! block's mean.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::Path;
use std::sync::{Arc, LazyLock, Mutex, OnceLock};

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::laguerre::psi_norm;
use crate::qmatrix::q_matrix_cached;

/// Finitely supported coefficient sequence on `Z+^2`.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CoeffSeq {
    support: BTreeMap<(usize, usize), Complex64>,
}

impl CoeffSeq {
    pub fn new() -> Self {
        Self::default()
    }

    /// The indicator sequence `e_{(m,n)}`.
    pub fn unit(m: usize, n: usize) -> Self {
        let mut seq = CoeffSeq::new();
        seq.set(m, n, Complex64::new(1.0, 0.0));
        seq
    }

    pub fn set(&mut self, m: usize, n: usize, value: Complex64) {
        if value == Complex64::new(0.0, 0.0) {
            self.support.remove(&(m, n));
        } else {
            self.support.insert((m, n), value);
        }
    }

    pub fn get(&self, m: usize, n: usize) -> Complex64 {
        self.support
            .get(&(m, n))
            .copied()
            .unwrap_or(Complex64::new(0.0, 0.0))
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &Complex64)> {
        self.support.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    /// Largest `m + n` over the support; `None` when empty.
    pub fn max_s(&self) -> Option<usize> {
        self.support.keys().map(|(m, n)| m + n).max()
    }

    pub fn norm_sq(&self) -> f64 {
        self.support.values().map(|z| z.norm_sqr()).sum()
    }

    /// Antidiagonal indices that carry support, ascending.
    fn blocks(&self) -> BTreeSet<usize> {
        self.support.keys().map(|(m, n)| m + n).collect()
    }

    /// The full `(S+1)`-vector of block `S`, zeros filled in.
    fn block_vector(&self, s: usize) -> Vec<Complex64> {
        (0..=s).map(|a| self.get(a, s - a)).collect()
    }
}

type SharedFloatMatrix = Arc<OnceLock<Arc<Vec<Vec<f64>>>>>;

static Q_FLOAT_CACHE: LazyLock<Mutex<HashMap<usize, SharedFloatMatrix>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Write-once per-`S` table of nearest-double images of the exact `Q_S`.
fn q_floats(s: usize) -> Arc<Vec<Vec<f64>>> {
    let cell = {
        let mut cache = Q_FLOAT_CACHE.lock().unwrap();
        Arc::clone(cache.entry(s).or_default())
    };
    cell.get_or_init(|| Arc::new(q_matrix_cached(s).entries.to_f64_rows()))
        .clone()
}

/// `<phi, Q phi> = sum_S <P_S phi, Q_S P_S phi>`.
pub fn quadratic_form(phi: &CoeffSeq) -> f64 {
    let mut total = 0.0;
    for s in phi.blocks() {
        let v = phi.block_vector(s);
        let q = q_floats(s);
        let mut block = Complex64::new(0.0, 0.0);
        for (a, va) in v.iter().enumerate() {
            let qv: Complex64 = v.iter().zip(&q[a]).map(|(vc, &w)| vc * w).sum();
            block += qv * va.conj();
        }
        total += block.re; // imaginary part cancels: Q_S is real symmetric
    }
    total
}

/// `Dist(phi, G_rad)^2`: squared deviation from the antidiagonal means,
/// `sum_{S>=1} sum_{a+b=S} |phi(a,b) - (sum_{c+d=S} phi(c,d))/(S+1)|^2`.
pub fn dist_to_grad(phi: &CoeffSeq) -> f64 {
    let mut total = 0.0;
    for s in phi.blocks() {
        if s == 0 {
            continue;
        }
        let v = phi.block_vector(s);
        let mean = v.iter().sum::<Complex64>() / (s + 1) as f64;
        total += v.iter().map(|z| (z - mean).norm_sqr()).sum::<f64>();
    }
    total
}

/// All the quantities of one inequality evaluation, including the space-time
/// (`1/16`) and `R^4`-distance (`1/4`) conversions.
#[derive(Clone, Debug, Serialize)]
pub struct InequalityVerdict {
    /// `<phi, Q phi>`.
    pub lhs: f64,
    pub norm_sq: f64,
    /// `Dist(phi, G_rad)^2`.
    pub dist_sq: f64,
    pub gamma: f64,
    /// `norm_sq - gamma * dist_sq - lhs`; nonnegative for `gamma <= 4/pi^2`.
    pub margin: f64,
    /// `lhs / 16`, the space-time integral.
    pub spacetime_lhs: f64,
    /// `norm_sq / 16`, the mass term.
    pub mass_rhs: f64,
    /// `dist_sq / 4`, the squared distance in `L^2(R^4)`.
    pub r4_dist_sq: f64,
}

/// Evaluates the sharpened inequality at a given `gamma`.
pub fn evaluate(phi: &CoeffSeq, gamma: f64) -> InequalityVerdict {
    let lhs = quadratic_form(phi);
    let norm_sq = phi.norm_sq();
    let dist_sq = dist_to_grad(phi);
    InequalityVerdict {
        lhs,
        norm_sq,
        dist_sq,
        gamma,
        margin: norm_sq - gamma * dist_sq - lhs,
        spacetime_lhs: lhs / 16.0,
        mass_rhs: norm_sq / 16.0,
        r4_dist_sq: dist_sq / 4.0,
    }
}

/// Coefficients of `g = f (x) f`: `phi(m, n) = f_m f_n`.
pub fn tensor_coeffs(f_coeffs: &[Complex64]) -> CoeffSeq {
    let mut phi = CoeffSeq::new();
    for (m, fm) in f_coeffs.iter().enumerate() {
        for (n, fn_) in f_coeffs.iter().enumerate() {
            phi.set(m, n, fm * fn_);
        }
    }
    phi
}

/// Fourth-power comparison of the sharpened Strichartz inequality for radial
/// initial data `f` given by its coefficients in the `Psi_n` basis: returns
/// `(||u||_4^4, right side)`, where the right side is
/// `1/4 ||f||^4 (1 - gamma Dist^2(f (x) f, rad) / ||f||^4)` and
/// `||f||^2 = sum |f_n|^2 ||Psi_n||^2 = (1/2) sum |f_n|^2`.
pub fn strichartz_margin_for_f(f_coeffs: &[Complex64], gamma: f64) -> (f64, f64) {
    let phi = tensor_coeffs(f_coeffs);
    let lhs_fourth_power = quadratic_form(&phi) / 16.0;
    let norm_f_sq: f64 = f_coeffs
        .iter()
        .enumerate()
        .map(|(n, c)| c.norm_sqr() * psi_norm(n, 0).expect("nu = 0").to_f64())
        .sum();
    let r4_dist_sq = dist_to_grad(&phi) / 4.0;
    let rhs_fourth_power = 0.25 * norm_f_sq * norm_f_sq - 0.25 * gamma * r4_dist_sq;
    (lhs_fourth_power, rhs_fourth_power)
}

/// Seeded random coefficient sequence with support on antidiagonals `<= max_s`.
pub fn random_coeff_seq<R: Rng>(rng: &mut R, max_s: usize, max_entries: usize) -> CoeffSeq {
    let count = rng.gen_range(1..=max_entries);
    let mut phi = CoeffSeq::new();
    for _ in 0..count {
        let s = rng.gen_range(0..=max_s);
        let m = rng.gen_range(0..=s);
        let value = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        phi.set(m, s - m, value);
    }
    phi
}

#[derive(Serialize, Deserialize)]
struct CoeffEntryRecord {
    m: usize,
    n: usize,
    re: f64,
    im: f64,
}

#[derive(Serialize, Deserialize)]
struct CoeffFileRecord {
    entries: Vec<CoeffEntryRecord>,
}

impl CoeffSeq {
    /// JSON value in the `{"entries": [{"m", "n", "re", "im"}]}` file format.
    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<CoeffEntryRecord> = self
            .support
            .iter()
            .map(|(&(m, n), z)| CoeffEntryRecord {
                m,
                n,
                re: z.re,
                im: z.im,
            })
            .collect();
        serde_json::to_value(CoeffFileRecord { entries }).expect("serializable")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self, serde_json::Error> {
        let record: CoeffFileRecord = serde_json::from_value(value.clone())?;
        let mut seq = CoeffSeq::new();
        for e in record.entries {
            seq.set(e.m, e.n, Complex64::new(e.re, e.im));
        }
        Ok(seq)
    }

    pub fn load(path: &Path) -> Result<Self, Error> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::CoeffFile {
            path: path.to_path_buf(),
            detail: e.to_string(),
        })?;
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| Error::CoeffFile {
                path: path.to_path_buf(),
                detail: e.to_string(),
            })?;
        CoeffSeq::from_json(&value).map_err(|e| Error::CoeffFile {
            path: path.to_path_buf(),
            detail: e.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    const GAMMA_PROVEN: f64 = 0.4052847345693511; // 4 / pi^2

    #[test]
    fn quadratic_form_examples() {
        assert!((quadratic_form(&CoeffSeq::unit(0, 0)) - 1.0).abs() < 1e-15);
        assert!((quadratic_form(&CoeffSeq::unit(1, 1)) - 0.5).abs() < 1e-15);
        // Constant on the S = 2 antidiagonal: the equality case, <phi,Qphi> = 3.
        let mut phi = CoeffSeq::new();
        for a in 0..=2 {
            phi.set(a, 2 - a, Complex64::new(1.0, 0.0));
        }
        assert!((quadratic_form(&phi) - 3.0).abs() < 1e-12);
        assert!((phi.norm_sq() - 3.0).abs() < 1e-15);
    }

    #[test]
    fn dist_examples() {
        let mut constant = CoeffSeq::new();
        for a in 0..=3 {
            constant.set(a, 3 - a, Complex64::new(0.25, -0.5));
        }
        assert!(dist_to_grad(&constant).abs() < 1e-15);

        // e_{(1,1)}: block (0, 1, 0), mean 1/3, deviation 2/3.
        let d = dist_to_grad(&CoeffSeq::unit(1, 1));
        assert!((d - 2.0 / 3.0).abs() < 1e-15);

        // e_{(1,0)}: block (0, 1), mean 1/2, deviation 1/2.
        let d = dist_to_grad(&CoeffSeq::unit(1, 0));
        assert!((d - 0.5).abs() < 1e-15);
    }

    #[test]
    fn extremal_margin_at_three_quarters() {
        let verdict = evaluate(&CoeffSeq::unit(1, 1), 0.75);
        assert!(verdict.margin.abs() < 1e-9, "margin = {}", verdict.margin);
    }

    #[test]
    fn gaussian_margin_is_zero_for_any_gamma() {
        for gamma in [0.0, 0.25, GAMMA_PROVEN, 0.75, 1.0] {
            let verdict = evaluate(&CoeffSeq::unit(0, 0), gamma);
            assert!(verdict.margin.abs() < 1e-12);
        }
    }

    #[test]
    fn tensor_examples() {
        let one = Complex64::new(1.0, 0.0);
        let zero = Complex64::new(0.0, 0.0);
        assert_eq!(tensor_coeffs(&[one]), CoeffSeq::unit(0, 0));
        assert_eq!(tensor_coeffs(&[zero, one]), CoeffSeq::unit(1, 1));
        let phi = tensor_coeffs(&[one, one]);
        for (m, n) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            assert_eq!(phi.get(m, n), one);
        }
        assert_eq!(phi.iter().count(), 4);
    }

    #[test]
    fn sharp_constant_for_gaussian() {
        let (lhs, rhs) = strichartz_margin_for_f(&[Complex64::new(1.0, 0.0)], 0.75);
        assert!((lhs - 1.0 / 16.0).abs() < 1e-12);
        assert!((lhs - rhs).abs() < 1e-12);
    }

    #[test]
    fn first_excited_state_attains_gamma_three_quarters() {
        let f = [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)];
        let (lhs, rhs) = strichartz_margin_for_f(&f, 0.75);
        assert!((lhs - 1.0 / 32.0).abs() < 1e-12);
        assert!((lhs - rhs).abs() < 1e-12);
        // At the proven gamma the margin is strictly positive.
        let (lhs2, rhs2) = strichartz_margin_for_f(&f, GAMMA_PROVEN);
        assert!(lhs2 < rhs2 - 1e-6);
    }

    #[test]
    fn mixed_state_has_positive_margin() {
        let inv_sqrt2 = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        let (lhs, rhs) = strichartz_margin_for_f(&[inv_sqrt2, inv_sqrt2], GAMMA_PROVEN);
        assert!(lhs < rhs - 1e-6, "lhs = {lhs}, rhs = {rhs}");
    }

    #[test]
    fn operator_norm_and_margin_campaign() {
        let mut rng = ChaCha8Rng::seed_from_u64(31415);
        for _ in 0..2000 {
            let phi = random_coeff_seq(&mut rng, 10, 16);
            let verdict = evaluate(&phi, GAMMA_PROVEN);
            assert!(
                verdict.lhs <= verdict.norm_sq + 1e-9,
                "operator norm violated"
            );
            assert!(verdict.spacetime_lhs <= verdict.mass_rhs + 1e-12);
            assert!(verdict.margin >= -1e-9, "margin = {}", verdict.margin);
            // Conjectural probe at 3/4: still nonnegative.
            assert!(evaluate(&phi, 0.75).margin >= -1e-9);
        }
    }

    #[test]
    fn equality_holds_exactly_on_antidiagonal_constants() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..200 {
            let mut phi = CoeffSeq::new();
            for s in 0..=6usize {
                if rng.gen_bool(0.5) {
                    let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                    for a in 0..=s {
                        phi.set(a, s - a, z);
                    }
                }
            }
            if phi.is_empty() {
                continue;
            }
            assert!(dist_to_grad(&phi) < 1e-12);
            assert!((quadratic_form(&phi) - phi.norm_sq()).abs() < 1e-9);
        }
        // Conversely, far from the radial subspace the form is strictly smaller.
        let mut rng2 = ChaCha8Rng::seed_from_u64(100);
        for _ in 0..200 {
            let phi = random_coeff_seq(&mut rng2, 8, 10);
            let dist = dist_to_grad(&phi);
            if dist > 1e-3 {
                assert!(quadratic_form(&phi) < phi.norm_sq() - 1e-9);
            }
        }
    }

    #[test]
    fn forms_are_block_additive() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..100 {
            // Disjoint antidiagonal supports: even blocks vs odd blocks.
            let mut even = CoeffSeq::new();
            let mut odd = CoeffSeq::new();
            for s in 0..=7usize {
                let m = rng.gen_range(0..=s);
                let z = Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
                if s % 2 == 0 {
                    even.set(m, s - m, z);
                } else {
                    odd.set(m, s - m, z);
                }
            }
            let mut combined = even.clone();
            for (&(m, n), &z) in odd.iter() {
                combined.set(m, n, z);
            }
            let qf_sum = quadratic_form(&even) + quadratic_form(&odd);
            assert!((quadratic_form(&combined) - qf_sum).abs() < 1e-12);
            let dist_sum = dist_to_grad(&even) + dist_to_grad(&odd);
            assert!((dist_to_grad(&combined) - dist_sum).abs() < 1e-12);
        }
    }

    #[test]
    fn coeff_file_roundtrip() {
        let mut phi = CoeffSeq::new();
        phi.set(0, 2, Complex64::new(0.5, -1.25));
        phi.set(3, 1, Complex64::new(-2.0, 0.0));
        let back = CoeffSeq::from_json(&phi.to_json()).unwrap();
        assert_eq!(back, phi);
    }
}
