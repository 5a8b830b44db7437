use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Square matrix of exact rationals, stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    dim: usize,
    entries: Vec<BigRational>,
}

impl RatMatrix {
    /// # Panics
    /// If `entries.len() != dim * dim`.
    pub fn new(dim: usize, entries: Vec<BigRational>) -> Self {
        assert_eq!(entries.len(), dim * dim, "matrix entry count");
        RatMatrix { dim, entries }
    }

    pub fn from_i64(dim: usize, entries: &[i64]) -> Self {
        RatMatrix::new(dim, entries.iter().map(|&e| BigRational::from_integer(e.into())).collect())
    }

    pub fn zero(dim: usize) -> Self {
        RatMatrix::new(dim, vec![BigRational::zero(); dim * dim])
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = RatMatrix::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = BigRational::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &BigRational {
        &self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.entries
    }

    pub fn add(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimension");
        RatMatrix::new(
            self.dim,
            self.entries
                .iter()
                .zip(&other.entries)
                .map(|(x, y)| match (x.is_zero(), y.is_zero()) {
                    (true, _) => y.clone(),
                    (_, true) => x.clone(),
                    _ => x + y,
                })
                .collect(),
        )
    }

    pub fn mul(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.dim, other.dim, "matrix dimension");
        let n = self.dim;
        let mut out = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc: Option<BigRational> = None;
                for k in 0..n {
                    let (x, y) = (self.get(i, k), other.get(k, j));
                    if x.is_zero() || y.is_zero() {
                        continue;
                    }
                    let term = if x.is_one() {
                        y.clone()
                    } else if y.is_one() {
                        x.clone()
                    } else {
                        x * y
                    };
                    acc = Some(match acc {
                        None => term,
                        Some(a) => a + term,
                    });
                }
                out.push(acc.unwrap_or_else(BigRational::zero));
            }
        }
        RatMatrix::new(n, out)
    }

    /// Two-sided inverse, or `None` when singular.
    ///
    /// Each row is scaled to integers, then fraction-free Gauss-Jordan
    /// elimination (Bareiss-Montante) runs on `[A' | I]`; every division in it
    /// is exact. The result is reduced back to canonical rationals at the end.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if self.dim <= 2 {
            return self.small_inverse();
        }
        let n = self.dim;
        let w = 2 * n;
        // A' = D·A with D = diag(row denominators' lcm), so inv(A) = inv(A')·D.
        let scales: Vec<BigInt> =
            (0..n).map(|i| (0..n).fold(BigInt::one(), |l, j| l.lcm(self.get(i, j).denom()))).collect();
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigInt> = (0..n)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&scales[i] / e.denom())
                    })
                    .collect();
                row.extend((0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }));
                row
            })
            .collect();

        let mut prev = BigInt::one();
        for k in 0..n {
            let pivot = (k..n).find(|&r| !m[r][k].is_zero())?;
            m.swap(k, pivot);
            let pivot_row = m[k].clone();
            for (i, row) in m.iter_mut().enumerate() {
                if i == k {
                    continue;
                }
                let factor = row[k].clone();
                for j in 0..w {
                    let v = &pivot_row[k] * &row[j] - &factor * &pivot_row[j];
                    row[j] = v / &prev;
                }
            }
            prev = pivot_row[k].clone();
        }
        // Left block is now prev·I and the right block is prev·inv(A').
        let entries = (0..n)
            .flat_map(|i| {
                let row = &m[i];
                let prev = &prev;
                let scales = &scales;
                (0..n).map(move |j| BigRational::new(&row[n + j] * &scales[j], prev.clone()))
            })
            .collect();
        Some(RatMatrix::new(n, entries))
    }

    /// Whether the matrix has a two-sided inverse.
    pub fn is_invertible(&self) -> bool {
        match self.dim {
            1 => !self.entries[0].is_zero(),
            2 => !self.det2().is_zero(),
            _ => self.inverse().is_some(),
        }
    }

    fn det2(&self) -> BigRational {
        let e = &self.entries;
        &e[0] * &e[3] - &e[1] * &e[2]
    }

    /// Adjugate over determinant, for `dim ≤ 2`.
    fn small_inverse(&self) -> Option<RatMatrix> {
        let e = &self.entries;
        if self.dim == 1 {
            return (!e[0].is_zero()).then(|| RatMatrix::new(1, vec![e[0].recip()]));
        }
        let det = self.det2();
        if det.is_zero() {
            return None;
        }
        let entries = vec![&e[3] / &det, -(&e[1] / &det), -(&e[2] / &det), &e[0] / &det];
        Some(RatMatrix::new(2, entries))
    }

    pub fn max_bits(&self) -> u64 {
        self.entries.iter().map(|e| e.numer().bits().max(e.denom().bits())).max().unwrap_or(0)
    }
}

impl fmt::Display for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn products_do_not_commute() {
        let x = RatMatrix::from_i64(2, &[1, 1, 0, 1]);
        let y = RatMatrix::from_i64(2, &[1, 0, 0, -1]);
        assert_eq!(x.mul(&y), RatMatrix::from_i64(2, &[1, -1, 0, -1]));
        assert_eq!(y.mul(&x), RatMatrix::from_i64(2, &[1, 1, 0, -1]));
    }

    #[test]
    fn unipotent_inverse() {
        let x = RatMatrix::from_i64(2, &[1, 1, 0, 1]);
        assert_eq!(x.inverse().unwrap(), RatMatrix::from_i64(2, &[1, -1, 0, 1]));
    }

    #[test]
    fn singular_has_no_inverse() {
        assert!(RatMatrix::from_i64(2, &[1, 2, 2, 4]).inverse().is_none());
        assert!(RatMatrix::zero(3).inverse().is_none());
        assert!(RatMatrix::from_i64(3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]).inverse().is_none());
    }

    #[test]
    fn needs_row_swap() {
        let x = RatMatrix::from_i64(2, &[0, 1, 1, 0]);
        assert_eq!(x.inverse().unwrap(), x);
    }

    #[test]
    fn fractional_entries() {
        let m = RatMatrix::new(2, vec![q(1, 2), q(1, 3), q(-2, 5), q(7, 4)]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), RatMatrix::identity(2));
        assert_eq!(inv.mul(&m), RatMatrix::identity(2));
        // det = 7/8 + 2/15 = 121/120, so inv[0][0] = (7/4)/(121/120) = 210/121.
        assert_eq!(inv.get(0, 0), &q(210, 121));
    }

    #[test]
    fn three_by_three_against_adjugate() {
        let m = RatMatrix::from_i64(3, &[2, -1, 0, -1, 2, -1, 0, -1, 2]);
        // det = 4, adjugate of the path Laplacian is [[3,2,1],[2,4,2],[1,2,3]].
        let expected = RatMatrix::new(3, [3, 2, 1, 2, 4, 2, 1, 2, 3].iter().map(|&e| q(e, 4)).collect());
        assert_eq!(m.inverse().unwrap(), expected);
    }
}
