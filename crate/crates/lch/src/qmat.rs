//! Small exact-rational matrices for representations and certificates.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

pub type QQ = BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<QQ>,
}

impl QMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        QMat {
            rows,
            cols,
            data: vec![QQ::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = QQ::one();
        }
        m
    }

    pub fn scalar(n: usize, v: QQ) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn from_ints(rows: usize, cols: usize, vals: &[i64]) -> Self {
        assert_eq!(vals.len(), rows * cols);
        QMat {
            rows,
            cols,
            data: vals.iter().map(|&v| QQ::from(BigInt::from(v))).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn mul(&self, other: &QMat) -> QMat {
        assert_eq!(self.cols, other.rows);
        let mut out = QMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self[(i, k)].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = &self[(i, k)] * &other[(k, j)];
                    out[(i, j)] += add;
                }
            }
        }
        out
    }

    pub fn add(&self, other: &QMat) -> QMat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(other.data.iter()) {
            *a += b;
        }
        out
    }

    pub fn scale(&self, v: &QQ) -> QMat {
        QMat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * v).collect(),
        }
    }

    pub fn neg(&self) -> QMat {
        self.scale(&-QQ::one())
    }
}

impl std::ops::Index<(usize, usize)> for QMat {
    type Output = QQ;
    fn index(&self, (i, j): (usize, usize)) -> &QQ {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for QMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut QQ {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Display for QMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Integer 2x2 matrices for the orbit cross-checks.
pub fn mat2_pow_times(m: [[i64; 2]; 2], k: u32, v: [i64; 2]) -> [i128; 2] {
    let mut x = [v[0] as i128, v[1] as i128];
    for _ in 0..k {
        x = [
            m[0][0] as i128 * x[0] + m[0][1] as i128 * x[1],
            m[1][0] as i128 * x[0] + m[1][1] as i128 * x[1],
        ];
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_identities() {
        // [[-2,-1],[1,0]]^k (1,1)^T = (-1)^k (2k+1, 1-2k)^T
        for k in 0..=12u32 {
            let got = mat2_pow_times([[-2, -1], [1, 0]], k, [1, 1]);
            let s = if k % 2 == 0 { 1 } else { -1 };
            assert_eq!(got, [s * (2 * k as i128 + 1), s * (1 - 2 * k as i128)]);
        }
    }

    #[test]
    fn matmul() {
        let a = QMat::from_ints(2, 2, &[1, 2, 3, 4]);
        let b = QMat::from_ints(2, 2, &[0, 1, 1, 0]);
        assert_eq!(a.mul(&b), QMat::from_ints(2, 2, &[2, 1, 4, 3]));
    }
}
