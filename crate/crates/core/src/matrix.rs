//! Dense square matrices over [`Rational`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::rational::Rational;

#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    dim: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn from_fn(dim: usize, mut entry: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(entry(i, j));
            }
        }
        RatMatrix { dim, data }
    }

    pub fn zeros(dim: usize) -> Self {
        RatMatrix {
            dim,
            data: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        RatMatrix::from_fn(dim, |i, j| {
            if i == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix must be square");
        RatMatrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.dim + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> {
        self.data
            .iter()
            .enumerate()
            .map(|(k, v)| (k / self.dim, k % self.dim, v))
    }

    pub fn transpose(&self) -> RatMatrix {
        RatMatrix::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn row_sum(&self, i: usize) -> Rational {
        self.row(i).iter().sum()
    }

    pub fn col_sum(&self, j: usize) -> Rational {
        (0..self.dim).map(|i| self.get(i, j)).sum()
    }

    pub fn mul(&self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!(self.dim, rhs.dim);
        RatMatrix::from_fn(self.dim, |i, j| {
            (0..self.dim)
                .map(|k| self.get(i, k) * rhs.get(k, j))
                .sum()
        })
    }

    /// Global minimum entry together with every position attaining it.
    pub fn min_entry(&self) -> (Rational, Vec<(usize, usize)>) {
        assert!(self.dim > 0, "empty matrix has no minimum");
        let mut min = self.get(0, 0).clone();
        let mut positions = Vec::new();
        for (i, j, v) in self.entries() {
            if *v < min {
                min = v.clone();
                positions.clear();
                positions.push((i, j));
            } else if *v == min {
                positions.push((i, j));
            }
        }
        // The first pass pushed (0,0) twice if it is the minimum.
        positions.dedup();
        (min, positions)
    }

    /// Nearest-double image of the matrix.
    pub fn to_f64_rows(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| self.row(i).iter().map(Rational::to_f64).collect())
            .collect()
    }

    /// Clears denominators: returns `(n, d)` with `d > 0` the lcm of all entry
    /// denominators and `n` the row-major integer matrix `d * self`.
    pub fn clear_denominators(&self) -> (Vec<BigInt>, BigInt) {
        let mut lcm = BigInt::one();
        for v in &self.data {
            lcm = lcm.lcm(v.denom());
        }
        let scaled = self
            .data
            .iter()
            .map(|v| v.numer() * (&lcm / v.denom()))
            .collect();
        (scaled, lcm)
    }

    /// Row-major CSV with canonical `num/den` entry strings.
    pub fn to_csv(&self) -> String {
        (0..self.dim)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(Rational::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }

    /// Entry strings for the `{"S": .., "entries": [[..]]}` JSON dumps.
    pub fn entry_strings(&self) -> Vec<Vec<String>> {
        (0..self.dim)
            .map(|i| self.row(i).iter().map(Rational::to_string).collect())
            .collect()
    }
}

impl std::fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "RatMatrix[{0}x{0}]", self.dim)?;
        for i in 0..self.dim {
            writeln!(f, "  {}", self.to_csv_row(i))?;
        }
        Ok(())
    }
}

impl RatMatrix {
    fn to_csv_row(&self, i: usize) -> String {
        self.row(i)
            .iter()
            .map(Rational::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}
