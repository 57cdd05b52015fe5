//! The quartic Laguerre product coefficients
//!
//! ```text
//! Q(a,b,c,d) = int_0^inf L_a(x/2) L_b(x/2) L_c(x/2) L_d(x/2) e^{-x} dx
//! ```
//!
//! and the antidiagonal matrices `Q_S = [Q(a, S-a, c, S-c)]_{a,c=0..S}`, which
//! are symmetric, doubly stochastic, positive semi-definite and entrywise
//! positive. Everything here is exact; float projections live elsewhere.

use std::collections::HashMap;
use std::sync::{Arc, LazyLock, Mutex, OnceLock};

use serde_json::json;

use crate::laguerre::laguerre_half;
use crate::matrix::RatMatrix;
use crate::moments::{central_binomial, exp_moment_integrate};
use crate::rational::Rational;

/// A single coefficient together with its indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QEntry {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub d: usize,
    pub value: Rational,
}

/// The `(S+1) x (S+1)` matrix of `Q` restricted to the antidiagonal `a+b = S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMatrix {
    pub s: usize,
    pub entries: RatMatrix,
}

/// Exact value of `Q(a,b,c,d)` by moment integration of the quartic product.
/// The indices are unrestricted; `a+b = c+d` is not required.
pub fn q_coefficient(a: usize, b: usize, c: usize, d: usize) -> Rational {
    let product = &(&laguerre_half(a) * &laguerre_half(b))
        * &(&laguerre_half(c) * &laguerre_half(d));
    exp_moment_integrate(&product)
}

/// Assembles `Q_S` exactly, computing each antidiagonal pair product
/// `L_a(x/2) L_{S-a}(x/2)` once and exploiting the symmetry of the matrix.
pub fn build_q_matrix(s: usize) -> QMatrix {
    let pairs: Vec<_> = (0..=s)
        .map(|a| &laguerre_half(a) * &laguerre_half(s - a))
        .collect();
    let mut entries = RatMatrix::zeros(s + 1);
    for a in 0..=s {
        for c in a..=s {
            let value = exp_moment_integrate(&(&pairs[a] * &pairs[c]));
            entries.set(a, c, value.clone());
            entries.set(c, a, value);
        }
    }
    QMatrix { s, entries }
}

type SharedQMatrix = Arc<OnceLock<Arc<QMatrix>>>;

static Q_CACHE: LazyLock<Mutex<HashMap<usize, SharedQMatrix>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Shared write-once table of `Q_S` matrices. Distinct `S` values build
/// concurrently; a given `S` is built exactly once per process.
pub fn q_matrix_cached(s: usize) -> Arc<QMatrix> {
    let cell = {
        let mut cache = Q_CACHE.lock().unwrap();
        Arc::clone(cache.entry(s).or_default())
    };
    cell.get_or_init(|| Arc::new(build_q_matrix(s))).clone()
}

/// Witness for a failed double-stochasticity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StochasticViolation {
    NegativeEntry {
        row: usize,
        col: usize,
        value: Rational,
    },
    RowSum {
        row: usize,
        sum: Rational,
    },
    ColSum {
        col: usize,
        sum: Rational,
    },
}

impl std::fmt::Display for StochasticViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            StochasticViolation::NegativeEntry { row, col, value } => {
                write!(f, "negative entry {value} at ({row}, {col})")
            }
            StochasticViolation::RowSum { row, sum } => {
                write!(f, "row {row} sums to {sum}")
            }
            StochasticViolation::ColSum { col, sum } => {
                write!(f, "column {col} sums to {sum}")
            }
        }
    }
}

/// Exact check that every entry is nonnegative and every row and column sums
/// to exactly 1. Returns the first offending index on failure.
pub fn verify_doubly_stochastic(m: &RatMatrix) -> Result<(), StochasticViolation> {
    for (i, j, v) in m.entries() {
        if v.is_negative() {
            return Err(StochasticViolation::NegativeEntry {
                row: i,
                col: j,
                value: v.clone(),
            });
        }
    }
    let one = Rational::one();
    for i in 0..m.dim() {
        let sum = m.row_sum(i);
        if sum != one {
            return Err(StochasticViolation::RowSum { row: i, sum });
        }
    }
    for j in 0..m.dim() {
        let sum = m.col_sum(j);
        if sum != one {
            return Err(StochasticViolation::ColSum { col: j, sum });
        }
    }
    Ok(())
}

/// Global minimum of `Q_S` with the full set of attaining positions; the
/// symmetries of the matrix make the minimum non-unique for `S >= 1`.
pub fn min_entry(q: &QMatrix) -> (Rational, Vec<(usize, usize)>) {
    q.entries.min_entry()
}

/// Closed form for the first column: `Q(a,b,a+b,0) = C(2a,a) C(2b,b) / 4^{a+b}`.
pub fn first_column_formula(a: usize, b: usize) -> Rational {
    let num = central_binomial(a) * central_binomial(b);
    Rational::new(num, num_bigint::BigInt::from(4).pow((a + b) as u32))
}

/// Certifies `Q(a,b,a+b,0) >= 2 / (pi (a+b+1))` by the exact comparison
/// `first_column_formula(a,b) * pi_bound * (a+b+1) >= 2`. The certificate is
/// sound when `pi_bound` is a rational lower bound for pi (the left side only
/// shrinks when the bound does).
pub fn verify_first_column_bound(a: usize, b: usize, pi_bound: &Rational) -> bool {
    let lhs = first_column_formula(a, b) * pi_bound * Rational::from_int((a + b + 1) as i64);
    lhs >= Rational::from_int(2)
}

/// Whether the conjectured minimum location/value holds for `Q_S`: the global
/// minimum equals `Q(floor(S/2), ceil(S/2), S, 0)` and is attained in the
/// first column at the middle row.
#[derive(Clone, Debug)]
pub struct MinEntryCheck {
    pub value: Rational,
    pub positions: Vec<(usize, usize)>,
    pub conjectured_value: Rational,
    pub holds: bool,
}

pub fn check_min_entry_conjecture(q: &QMatrix) -> MinEntryCheck {
    let (value, positions) = min_entry(q);
    let conjectured_value = q_coefficient(q.s / 2, q.s.div_ceil(2), q.s, 0);
    let holds = value == conjectured_value && positions.contains(&(q.s / 2, 0));
    MinEntryCheck {
        value,
        positions,
        conjectured_value,
        holds,
    }
}

impl QMatrix {
    /// Row-major CSV with canonical `num/den` entries.
    pub fn to_csv(&self) -> String {
        self.entries.to_csv()
    }

    /// `{"S": .., "entries": [[".."]]}`.
    pub fn to_json(&self) -> serde_json::Value {
        json!({ "S": self.s, "entries": self.entries.entry_strings() })
    }
}
