//! Dense matrices over [`Scalar`].
//!
//! Rational matrices are reduced by fraction-field Gaussian elimination.
//! Matrices with parametric entries use division-free Laplace expansion (memoized
//! over column subsets), and are only inverted when the determinant is a unit.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::{Ring, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Outcome of a non-degeneracy test over a parameter ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Nondegeneracy {
    Degenerate,
    Nondegenerate,
    /// Determinant is nonzero but not a unit; non-degenerate exactly where the
    /// determinant does not vanish.
    Conditional { determinant: Scalar },
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Scalar::one() } else { Scalar::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience for tests and fixtures.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
        .expect("rectangular")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Scalar)> {
        self.data
            .iter()
            .enumerate()
            .map(move |(n, x)| (n / self.cols.max(1), n % self.cols.max(1), x))
    }

    pub fn row(&self, i: usize) -> Vec<Scalar> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows)
            .map(|i| {
                let mut acc = Scalar::zero();
                for (j, x) in v.iter().enumerate() {
                    let a = self.get(i, j);
                    if !a.is_zero() && !x.is_zero() {
                        acc += a * x;
                    }
                }
                acc
            })
            .collect()
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i..self.cols).all(|j| (self.get(i, j) + self.get(j, i)).is_zero()))
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Common ring of all entries.
    pub fn ring(&self) -> Result<Ring> {
        let mut ring = Ring::rationals();
        for x in &self.data {
            if let Some(r) = x.ring() {
                ring = ring.unify(r)?;
            }
        }
        Ok(ring)
    }

    fn is_rational(&self) -> bool {
        self.data.iter().all(|x| x.as_rational().is_some())
    }

    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::Shape(format!("determinant of a {}x{} matrix", self.rows, self.cols)));
        }
        self.ring()?;
        if self.is_rational() {
            Ok(self.rational_determinant())
        } else {
            Ok(self.laplace_determinant())
        }
    }

    fn rational_determinant(&self) -> Scalar {
        let n = self.rows;
        let mut m = self.data.clone();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r * n + col].is_zero()) else {
                return Scalar::zero();
            };
            if pivot != col {
                for j in 0..n {
                    m.swap(pivot * n + j, col * n + j);
                }
                det = -det;
            }
            let p = m[col * n + col].clone();
            det *= &p;
            let inv = p.invert().expect("nonzero rational pivot");
            for r in col + 1..n {
                let factor = &m[r * n + col] * &inv;
                if factor.is_zero() {
                    continue;
                }
                for j in col..n {
                    let delta = &factor * &m[col * n + j];
                    m[r * n + j] -= delta;
                }
            }
        }
        det
    }

    /// Expansion along rows with minors memoized by the set of used columns.
    fn laplace_determinant(&self) -> Scalar {
        let n = self.rows;
        assert!(n < 63, "Laplace expansion limited to n < 63");
        let mut memo: HashMap<u64, Scalar> = HashMap::new();
        memo.insert(0, Scalar::one());
        // minor(mask) = det of rows [n-|mask|, n) restricted to the columns in mask.
        fn minor(m: &Matrix, mask: u64, memo: &mut HashMap<u64, Scalar>) -> Scalar {
            if let Some(v) = memo.get(&mask) {
                return v.clone();
            }
            let k = mask.count_ones() as usize;
            let row = m.rows - k;
            let mut acc = Scalar::zero();
            let mut sign_positive = true;
            for col in 0..m.cols {
                if mask & (1 << col) == 0 {
                    continue;
                }
                let a = m.get(row, col);
                if !a.is_zero() {
                    let sub = minor(m, mask & !(1 << col), memo);
                    let term = a * &sub;
                    if sign_positive {
                        acc += term;
                    } else {
                        acc -= term;
                    }
                }
                sign_positive = !sign_positive;
            }
            memo.insert(mask, acc.clone());
            acc
        }
        let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
        minor(self, full, &mut memo)
    }

    pub fn nondegeneracy(&self) -> Result<Nondegeneracy> {
        let det = self.determinant()?;
        Ok(if det.is_zero() {
            Nondegeneracy::Degenerate
        } else if det.is_unit() {
            Nondegeneracy::Nondegenerate
        } else {
            Nondegeneracy::Conditional { determinant: det }
        })
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::Shape(format!("inverse of a {}x{} matrix", self.rows, self.cols)));
        }
        self.ring()?;
        if self.is_rational() {
            self.gauss_jordan_inverse()
        } else {
            self.adjugate_inverse()
        }
    }

    fn gauss_jordan_inverse(&self) -> Result<Self> {
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a.get(r, col).is_zero()).ok_or(Error::Singular)?;
            if pivot != col {
                for j in 0..n {
                    a.data.swap(pivot * n + j, col * n + j);
                    inv.data.swap(pivot * n + j, col * n + j);
                }
            }
            let p = a.get(col, col).invert()?;
            for j in 0..n {
                let x = a.get(col, j) * &p;
                a.set(col, j, x);
                let y = inv.get(col, j) * &p;
                inv.set(col, j, y);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let x = a.get(r, j) - &factor * a.get(col, j);
                    a.set(r, j, x);
                    let y = inv.get(r, j) - &factor * inv.get(col, j);
                    inv.set(r, j, y);
                }
            }
        }
        Ok(inv)
    }

    fn adjugate_inverse(&self) -> Result<Self> {
        let det = self.laplace_determinant();
        if det.is_zero() {
            return Err(Error::Singular);
        }
        if !det.is_unit() {
            return Err(Error::NotInvertibleOverRing { determinant: det });
        }
        let inv_det = det.invert()?;
        let n = self.rows;
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let minor = Matrix::from_fn(n - 1, n - 1, |r, c| {
                    let rr = if r < j { r } else { r + 1 };
                    let cc = if c < i { c } else { c + 1 };
                    self.get(rr, cc).clone()
                });
                let cof = minor.laplace_determinant();
                let signed = if (i + j) % 2 == 0 { cof } else { -cof };
                out.set(i, j, signed * &inv_det);
            }
        }
        Ok(out)
    }

    /// Renders rows as `[a, b; c, d]`.
    pub fn render(&self) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(ToString::to_string)
                    .collect::<Vec<_>>()
                    .join(", ")
            })
            .collect();
        format!("[{}]", rows.join("; "))
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}{}", self.rows, self.cols, self.render())
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix add shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix sub shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix mul shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.data[i * rhs.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<Matrix> for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix { (&self).$method(&rhs) }
        }
        impl $trait<&Matrix> for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &Matrix) -> Matrix { (&self).$method(rhs) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl Neg for Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::parse_scalar;

    #[test]
    fn rational_inverse_round_trip() {
        let m = Matrix::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(3));
        assert_eq!(m.determinant().unwrap(), Scalar::from_int(18));
    }

    #[test]
    fn singular_matrix() {
        let m = Matrix::from_ints(&[&[1, 2], &[2, 4]]);
        assert!(matches!(m.inverse(), Err(Error::Singular)));
        assert_eq!(m.nondegeneracy().unwrap(), Nondegeneracy::Degenerate);
    }

    #[test]
    fn laurent_unit_determinant_inverts() {
        let r = Ring::new(["k"]).unwrap();
        let k = parse_scalar("k", &r).unwrap();
        let m = Matrix::from_rows(vec![
            vec![k.clone(), Scalar::one()],
            vec![Scalar::zero(), Scalar::one()],
        ])
        .unwrap();
        assert_eq!(m.nondegeneracy().unwrap(), Nondegeneracy::Nondegenerate);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(2));
    }

    #[test]
    fn laurent_non_unit_determinant_is_conditional() {
        let r = Ring::new(["a"]).unwrap();
        let a = parse_scalar("a", &r).unwrap();
        let m = Matrix::from_rows(vec![
            vec![a.clone(), Scalar::one()],
            vec![Scalar::one(), Scalar::one()],
        ])
        .unwrap();
        let det = parse_scalar("a - 1", &r).unwrap();
        assert_eq!(
            m.nondegeneracy().unwrap(),
            Nondegeneracy::Conditional { determinant: det.clone() }
        );
        assert!(matches!(
            m.inverse(),
            Err(Error::NotInvertibleOverRing { determinant }) if determinant == det
        ));
    }

    #[test]
    fn laplace_agrees_with_elimination() {
        let m = Matrix::from_ints(&[&[0, 2, -1, 3], &[1, 0, 4, 1], &[2, -3, 0, 1], &[1, 1, 1, 0]]);
        assert_eq!(m.rational_determinant(), m.laplace_determinant());
    }

    #[test]
    fn empty_matrix() {
        let m = Matrix::zeros(0, 0);
        assert_eq!(m.determinant().unwrap(), Scalar::one());
        assert_eq!(m.inverse().unwrap(), m);
    }
}
