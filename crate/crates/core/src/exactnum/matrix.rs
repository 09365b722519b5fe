use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{GaussianRational, Rational};
use crate::Error;

/// A dense `rows × cols` matrix over ℚ(i), row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<GaussianRational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![GaussianRational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = GaussianRational::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> GaussianRational) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, entries }
    }

    pub fn from_entries(rows: usize, cols: usize, entries: Vec<GaussianRational>) -> Result<Self, Error> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix { rows, cols, entries })
    }

    /// The matrix unit `E_ij` scaled by `c`.
    pub fn unit(n: usize, i: usize, j: usize, c: GaussianRational) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = c;
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn conj(&self) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(GaussianRational::conj).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, Error> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Gauss-Jordan inverse over ℚ(i).
    pub fn inverse(&self) -> Result<Self, Error> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(format!("inverse of {}x{}", self.rows, self.cols)));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Self::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[(r, col)].is_zero()).ok_or(Error::Singular)?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)].inv()?;
            for j in 0..n {
                a[(col, j)] = &a[(col, j)] * &p;
                inv[(col, j)] = &inv[(col, j)] * &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let t = &f * &a[(col, j)];
                    a[(r, j)] = &a[(r, j)] - &t;
                    let t = &f * &inv[(col, j)];
                    inv[(r, j)] = &inv[(r, j)] - &t;
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Real coordinates `(Re a_00, Im a_00, Re a_01, ...)`, length `2·rows·cols`.
    pub fn realify(&self) -> Vec<Rational> {
        self.entries.iter().flat_map(|z| [z.re.clone(), z.im.clone()]).collect()
    }
}

impl Index<(usize, usize)> for ExactMatrix {
    type Output = GaussianRational;
    fn index(&self, (i, j): (usize, usize)) -> &GaussianRational {
        &self.entries[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for ExactMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut GaussianRational {
        &mut self.entries[i * self.cols + j]
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Rank over ℝ of the span of `n × n` matrices over ℚ(i).
///
/// Each matrix is flattened into its `2n²` real coordinates; rows are cleared
/// of denominators and reduced by fraction-free (Bareiss) elimination.
pub fn real_rank(vectors: &[ExactMatrix], n: usize) -> Result<usize, Error> {
    for (k, v) in vectors.iter().enumerate() {
        if v.rows != n || v.cols != n {
            return Err(Error::DimensionMismatch(format!(
                "vector {k} is {}x{}, expected {n}x{n}",
                v.rows, v.cols
            )));
        }
    }
    let rows: Vec<Vec<BigInt>> = vectors.iter().map(|v| integer_row(&v.realify())).collect();
    Ok(bareiss_rank(rows, 2 * n * n))
}

fn integer_row(coords: &[Rational]) -> Vec<BigInt> {
    let lcm = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(&c.denom()));
    coords.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
}

/// Rank of an integer matrix by fraction-free elimination; every division is exact.
pub(crate) fn bareiss_rank(mut m: Vec<Vec<BigInt>>, width: usize) -> usize {
    let height = m.len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    for col in 0..width {
        if rank == height {
            break;
        }
        let Some(p) = (rank..height).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let pivot = m[rank][col].clone();
        for r in rank + 1..height {
            let factor = m[r][col].clone();
            for c in col..width {
                let v = (&pivot * &m[r][c] - &factor * &m[rank][c]) / &prev;
                m[r][c] = v;
            }
        }
        // Entries left of `col` in lower rows are already zero; keep them so.
        prev = pivot;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gi(re: i64, im: i64) -> GaussianRational {
        GaussianRational::new(Rational::from_int(re), Rational::from_int(im))
    }

    #[test]
    fn inverse_round_trip() {
        let g = ExactMatrix::from_entries(2, 2, vec![gi(1, 0), gi(0, 1), gi(0, 1), gi(1, 0)]).unwrap();
        let inv = g.inverse().unwrap();
        assert_eq!(g.mul(&inv).unwrap(), ExactMatrix::identity(2));
        let half = Rational::frac(1, 2);
        assert_eq!(inv[(0, 1)], GaussianRational::imag(-&half));
    }

    #[test]
    fn singular_inverse_fails() {
        let m = ExactMatrix::from_entries(2, 2, vec![gi(1, 0), gi(2, 0), gi(2, 0), gi(4, 0)]).unwrap();
        assert!(matches!(m.inverse(), Err(Error::Singular)));
    }

    #[test]
    fn rank_small_cases() {
        let id = ExactMatrix::identity(2);
        assert_eq!(real_rank(&[id.clone()], 2).unwrap(), 1);
        let i_id = ExactMatrix::from_fn(2, 2, |a, b| if a == b { GaussianRational::i() } else { GaussianRational::zero() });
        assert_eq!(real_rank(&[id.clone(), i_id], 2).unwrap(), 2);
        assert_eq!(real_rank(&[], 2).unwrap(), 0);
        assert!(real_rank(&[ExactMatrix::identity(3)], 2).is_err());
    }

    #[test]
    fn upper_triangular_plus_real_gl2() {
        let mut vs = Vec::new();
        for (i, j) in [(0, 0), (0, 1), (1, 1)] {
            vs.push(ExactMatrix::unit(2, i, j, GaussianRational::one()));
            vs.push(ExactMatrix::unit(2, i, j, GaussianRational::i()));
        }
        for i in 0..2 {
            for j in 0..2 {
                vs.push(ExactMatrix::unit(2, i, j, GaussianRational::one()));
            }
        }
        assert_eq!(real_rank(&vs, 2).unwrap(), 7);
    }
}
