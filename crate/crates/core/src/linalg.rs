//! Dense matrices with exact entries and Gaussian elimination.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::{Ring, Scalar};

#[derive(Clone, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: fmt::Debug> fmt::Debug for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl<E: Ring> Matrix<E> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![E::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = E::one();
        }
        m
    }

    pub fn scalar(n: usize, c: E) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entry_mut(&mut self, i: usize, j: usize) -> &mut E {
        &mut self.data[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch in add");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() + b).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch in sub");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.clone() - b).collect(),
        }
    }

    pub fn add_assign(&mut self, o: &Self) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch in add");
        for (a, b) in self.data.iter_mut().zip(&o.data) {
            if !b.is_zero() {
                *a += b;
            }
        }
    }

    pub fn neg(&self) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &E) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| if a.is_zero() { a.clone() } else { a.mul_ref(c) }).collect(),
        }
    }

    /// Matrix product; zero entries of the left factor are skipped.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch in mul");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k * o.cols + j];
                    if b.is_zero() {
                        continue;
                    }
                    out.data[i * o.cols + j] += &a.mul_ref(b);
                }
            }
        }
        out
    }

    /// `self * o - o * self`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Rows `r0..r0+nr`, columns `c0..c0+nc`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        Self::from_fn(nr, nc, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Self) {
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.set(r0 + i, c0 + j, b.get(i, j).clone());
            }
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn from_column(v: &[E]) -> Self {
        Self::from_fn(v.len(), 1, |i, _| v[i].clone())
    }

    /// Stack matrices with equal column counts vertically.
    pub fn vstack(parts: &[Self]) -> Self {
        let cols = parts.first().map_or(0, |p| p.cols);
        let mut data = Vec::new();
        let mut rows = 0;
        for p in parts {
            assert_eq!(p.cols, cols, "column mismatch in vstack");
            data.extend(p.data.iter().cloned());
            rows += p.rows;
        }
        Matrix { rows, cols, data }
    }

    /// Whether `self` is `c * I` for some `c`, returning `c`.
    pub fn as_scalar(&self) -> Option<E> {
        if !self.is_square() {
            return None;
        }
        let c = if self.rows == 0 { E::zero() } else { self.get(0, 0).clone() };
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if (i == j && *v != c) || (i != j && !v.is_zero()) {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&E) -> G) -> Matrix<G> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }
}

/// Reduced row echelon form.
pub struct Echelon<F> {
    pub matrix: Matrix<F>,
    pub pivots: Vec<usize>,
}

impl<F: Scalar> Matrix<F> {
    pub fn rref(&self) -> Echelon<F> {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = m.get(r, c).inv().expect("nonzero pivot");
            for j in c..m.cols {
                let v = m.get(r, j).mul_ref(&inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let rv = m.get(r, j);
                    if rv.is_zero() {
                        continue;
                    }
                    let d = f.mul_ref(rv);
                    *m.entry_mut(i, j) -= &d;
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().pivots.len()
    }

    /// Basis of the right null space as the columns of the result.
    ///
    /// The basis is in reduced form: each basis vector has a distinguished free
    /// coordinate equal to one where all the others vanish.
    pub fn nullspace(&self) -> Matrix<F> {
        let e = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !e.pivots.contains(c)).collect();
        let mut out = Matrix::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, F::one());
            for (r, &pc) in e.pivots.iter().enumerate() {
                let v = e.matrix.get(r, fc);
                if !v.is_zero() {
                    out.set(pc, k, -v.clone());
                }
            }
        }
        out
    }

    pub fn inverse(&self) -> Result<Matrix<F>> {
        if !self.is_square() {
            return Err(Error::Invalid("inverse of non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, &Matrix::identity(n));
        let e = aug.rref();
        if e.pivots.len() < n || e.pivots[n - 1] >= n {
            return Err(Error::Singular(String::new()));
        }
        Ok(e.matrix.block(0, n, n, n))
    }

    pub fn det(&self) -> F {
        assert!(self.is_square(), "determinant of non-square matrix");
        let mut m = self.clone();
        let n = m.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return F::zero();
            };
            if p != c {
                for j in 0..n {
                    m.data.swap(p * n + j, c * n + j);
                }
                det = -det;
            }
            let piv = m.get(c, c).clone();
            det = det * &piv;
            let inv = piv.inv().expect("nonzero pivot");
            for i in c + 1..n {
                if m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).mul_ref(&inv);
                for j in c..n {
                    let d = f.mul_ref(m.get(c, j));
                    *m.entry_mut(i, j) -= &d;
                }
            }
        }
        det
    }

    /// Some solution `x` of `self * x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &Matrix<F>) -> Option<Matrix<F>> {
        assert_eq!(self.rows, b.rows, "shape mismatch in solve");
        let n = self.cols;
        let mut aug = Matrix::zeros(self.rows, n + b.cols);
        aug.set_block(0, 0, self);
        aug.set_block(0, n, b);
        let e = aug.rref();
        if e.pivots.iter().any(|&p| p >= n) {
            return None;
        }
        let mut x = Matrix::zeros(n, b.cols);
        for (r, &pc) in e.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, e.matrix.get(r, n + j).clone());
            }
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn m(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Rational::from_i64(x)).collect()).collect())
    }

    #[test]
    fn inverse_and_det() {
        let a = m(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), Matrix::identity(3));
        assert_eq!(a.det(), Rational::from_i64(18));
        assert!(m(&[&[1, 2], &[2, 4]]).inverse().is_err());
    }

    #[test]
    fn nullspace_basis() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = a.nullspace();
        assert_eq!(ns.cols(), 2);
        assert!(a.mul(&ns).is_zero());
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn solve_consistent_and_not() {
        let a = m(&[&[1, 1], &[1, -1]]);
        let b = m(&[&[3], &[1]]);
        assert_eq!(a.solve(&b).unwrap(), m(&[&[2], &[1]]));
        let s = m(&[&[1, 1], &[2, 2]]);
        assert!(s.solve(&m(&[&[1], &[3]])).is_none());
    }
}
