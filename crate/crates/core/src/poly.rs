//! Laurent polynomials in spectral parameters, with scalar or operator coefficients.
//!
//! `N` is the number of spectral variables; exponents are `[i64; N]`.

use std::collections::BTreeMap;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use crate::linalg::Matrix;
use crate::scalar::{Algebra, RatFuncU, Ring, Scalar};

pub type Exp<const N: usize> = [i64; N];

fn add_exp<const N: usize>(a: &Exp<N>, b: &Exp<N>) -> Exp<N> {
    let mut out = [0; N];
    for i in 0..N {
        out[i] = a[i] + b[i];
    }
    out
}

fn alpha_pow<F: Scalar>(alpha: &F, k: i64) -> F {
    alpha.powi(k).expect("nonzero scaling factor")
}

/// Scalar Laurent polynomial in `N` variables.
#[derive(Clone, Debug, PartialEq)]
pub struct Laurent<F, const N: usize> {
    terms: BTreeMap<Exp<N>, F>,
}

impl<F: Scalar, const N: usize> Laurent<F, N> {
    pub fn monomial(c: F, e: Exp<N>) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        Laurent { terms }
    }

    pub fn constant(c: F) -> Self {
        Self::monomial(c, [0; N])
    }

    /// The `i`-th variable.
    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self::monomial(F::one(), e)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp<N>, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exp<N>) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            out.push(*e, v.mul_ref(c));
        }
        out
    }

    fn push(&mut self, e: Exp<N>, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v += &c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Substitute `x_var -> alpha * x_var`.
    pub fn scale_arg(&self, var: usize, alpha: &F) -> Self {
        let mut out = Self::zero();
        for (e, v) in &self.terms {
            out.push(*e, v.mul_ref(&alpha_pow(alpha, e[var])));
        }
        out
    }

    /// Substitute numeric values for all variables.
    pub fn eval(&self, point: &[F; N]) -> F {
        let mut acc = F::zero();
        for (e, v) in &self.terms {
            let mut t = v.clone();
            for i in 0..N {
                t = t * &alpha_pow(&point[i], e[i]);
            }
            acc += &t;
        }
        acc
    }

    fn add_impl(&self, o: &Self, sign: bool) -> Self {
        let mut out = self.clone();
        for (e, v) in &o.terms {
            out.push(*e, if sign { v.clone() } else { -v.clone() });
        }
        out
    }

    fn mul_impl(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.push(add_exp(a, b), x.mul_ref(y));
            }
        }
        out
    }
}

impl<F: Scalar> Laurent<F, 1> {
    /// Smallest and largest exponent, `None` for zero.
    pub fn degree_range(&self) -> Option<(i64, i64)> {
        let lo = self.terms.keys().next()?[0];
        let hi = self.terms.keys().next_back()?[0];
        Some((lo, hi))
    }

    pub fn to_ratfunc(&self) -> RatFuncU<F> {
        match self.degree_range() {
            None => RatFuncU::constant(F::zero()),
            Some((lo, hi)) => {
                let coeffs = (lo..=hi).map(|k| self.coeff(&[k])).collect();
                RatFuncU::from_laurent(lo, coeffs)
            }
        }
    }

    /// `sum_k c_k u^k` from `(k, c_k)` pairs.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (i64, F)>) -> Self {
        let mut out = Self::zero();
        for (k, c) in pairs {
            out.push([k], c);
        }
        out
    }
}

impl<F: Scalar, const N: usize> Ring for Laurent<F, N> {
    fn zero() -> Self {
        Laurent { terms: BTreeMap::new() }
    }
    fn one() -> Self {
        Self::constant(F::one())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn from_i64(n: i64) -> Self {
        Self::constant(F::from_i64(n))
    }
    fn mul_ref(&self, o: &Self) -> Self {
        self.mul_impl(o)
    }
}

impl<F: Scalar, const N: usize> Algebra<F> for Laurent<F, N> {
    fn from_scalar(c: F) -> Self {
        Self::constant(c)
    }
}

impl<F: Scalar, const N: usize> Add for Laurent<F, N> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_impl(&o, true)
    }
}
impl<F: Scalar, const N: usize> Add<&Laurent<F, N>> for Laurent<F, N> {
    type Output = Self;
    fn add(self, o: &Self) -> Self {
        self.add_impl(o, true)
    }
}
impl<F: Scalar, const N: usize> Sub for Laurent<F, N> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.add_impl(&o, false)
    }
}
impl<F: Scalar, const N: usize> Sub<&Laurent<F, N>> for Laurent<F, N> {
    type Output = Self;
    fn sub(self, o: &Self) -> Self {
        self.add_impl(o, false)
    }
}
impl<F: Scalar, const N: usize> Mul for Laurent<F, N> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_impl(&o)
    }
}
impl<F: Scalar, const N: usize> Mul<&Laurent<F, N>> for Laurent<F, N> {
    type Output = Self;
    fn mul(self, o: &Self) -> Self {
        self.mul_impl(o)
    }
}
impl<F: Scalar, const N: usize> Neg for Laurent<F, N> {
    type Output = Self;
    fn neg(self) -> Self {
        Laurent { terms: self.terms.into_iter().map(|(e, v)| (e, -v)).collect() }
    }
}
impl<F: Scalar, const N: usize> AddAssign<&Laurent<F, N>> for Laurent<F, N> {
    fn add_assign(&mut self, o: &Self) {
        for (e, v) in &o.terms {
            self.push(*e, v.clone());
        }
    }
}
impl<F: Scalar, const N: usize> SubAssign<&Laurent<F, N>> for Laurent<F, N> {
    fn sub_assign(&mut self, o: &Self) {
        for (e, v) in &o.terms {
            self.push(*e, -v.clone());
        }
    }
}

/// Laurent polynomial in `N` spectral variables with matrix coefficients.
///
/// All coefficients share the shape `rows x cols`.
#[derive(Clone, Debug, PartialEq)]
pub struct OpPoly<F, const N: usize> {
    rows: usize,
    cols: usize,
    terms: BTreeMap<Exp<N>, Matrix<F>>,
}

/// Operator-valued Laurent polynomial in one variable `u`.
pub type OperatorPoly<F> = OpPoly<F, 1>;

impl<F: Scalar, const N: usize> OpPoly<F, N> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        OpPoly { rows, cols, terms: BTreeMap::new() }
    }

    pub fn monomial(m: Matrix<F>, e: Exp<N>) -> Self {
        let mut p = Self::zero(m.rows(), m.cols());
        p.push(e, m);
        p
    }

    pub fn constant(m: Matrix<F>) -> Self {
        Self::monomial(m, [0; N])
    }

    pub fn identity(n: usize) -> Self {
        Self::constant(Matrix::identity(n))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exp<N>, &Matrix<F>)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exp<N>) -> Matrix<F> {
        self.terms.get(e).cloned().unwrap_or_else(|| Matrix::zeros(self.rows, self.cols))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn push(&mut self, e: Exp<N>, m: Matrix<F>) {
        if m.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                v.add_assign(&m);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, m);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign(o);
        out
    }

    pub fn add_assign(&mut self, o: &Self) {
        assert_eq!((self.rows, self.cols), (o.rows, o.cols), "shape mismatch");
        for (e, m) in &o.terms {
            self.push(*e, m.clone());
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        OpPoly {
            rows: self.rows,
            cols: self.cols,
            terms: self.terms.iter().map(|(e, m)| (*e, m.neg())).collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "shape mismatch in mul");
        let mut out = Self::zero(self.rows, o.cols);
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                out.push(add_exp(a, b), x.mul(y));
            }
        }
        out
    }

    pub fn mul_matrix(&self, m: &Matrix<F>) -> Self {
        let mut out = Self::zero(self.rows, m.cols());
        for (e, x) in &self.terms {
            out.push(*e, x.mul(m));
        }
        out
    }

    pub fn left_mul_matrix(&self, m: &Matrix<F>) -> Self {
        let mut out = Self::zero(m.rows(), self.cols);
        for (e, x) in &self.terms {
            out.push(*e, m.mul(x));
        }
        out
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.rows, self.cols);
        for (e, x) in &self.terms {
            out.push(*e, x.scale(c));
        }
        out
    }

    pub fn scale_laurent(&self, s: &Laurent<F, N>) -> Self {
        let mut out = Self::zero(self.rows, self.cols);
        for (a, c) in s.terms() {
            for (b, x) in &self.terms {
                out.push(add_exp(a, b), x.scale(c));
            }
        }
        out
    }

    /// Substitute `x_var -> alpha * x_var`.
    pub fn scale_arg(&self, var: usize, alpha: &F) -> Self {
        let mut out = Self::zero(self.rows, self.cols);
        for (e, x) in &self.terms {
            out.push(*e, x.scale(&alpha_pow(alpha, e[var])));
        }
        out
    }

    /// Apply a map to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Matrix<F>) -> Matrix<F>) -> Self {
        let mut iter = self.terms.iter().map(|(e, m)| (*e, f(m))).peekable();
        let (rows, cols) = match iter.peek() {
            Some((_, m)) => (m.rows(), m.cols()),
            None => {
                let z = f(&Matrix::zeros(self.rows, self.cols));
                (z.rows(), z.cols())
            }
        };
        let mut out = Self::zero(rows, cols);
        for (e, m) in iter {
            out.push(e, m);
        }
        out
    }

    /// Whether every coefficient commutes with `m`.
    pub fn commutes_with(&self, m: &Matrix<F>) -> bool {
        self.terms.values().all(|x| x.commutator(m).is_zero())
    }

    /// If every coefficient is a multiple of the identity, the scalar polynomial.
    pub fn as_scalar(&self) -> Option<Laurent<F, N>> {
        let mut out = Laurent::zero();
        for (e, x) in &self.terms {
            out += &Laurent::monomial(x.as_scalar()?, *e);
        }
        Some(out)
    }

    /// If `self * v = lambda * v` for a column `v`, the scalar polynomial `lambda`.
    pub fn eigenvalue_on(&self, v: &Matrix<F>) -> Option<Laurent<F, N>> {
        let pivot = (0..v.rows()).find(|&i| !v.get(i, 0).is_zero())?;
        let pinv = v.get(pivot, 0).inv().ok()?;
        let mut out = Laurent::zero();
        for (e, x) in &self.terms {
            let w = x.mul(v);
            let c = w.get(pivot, 0).mul_ref(&pinv);
            if w != v.scale(&c) {
                return None;
            }
            out += &Laurent::monomial(c, *e);
        }
        Some(out)
    }
}

impl<F: Scalar> OpPoly<F, 1> {
    pub fn coeff_at(&self, k: i64) -> Matrix<F> {
        self.coeff(&[k])
    }

    /// Value at `u = u0`.
    pub fn eval(&self, u0: &F) -> Matrix<F> {
        let mut out = Matrix::zeros(self.rows, self.cols);
        for (e, x) in &self.terms {
            out.add_assign(&x.scale(&alpha_pow(u0, e[0])));
        }
        out
    }

    /// `u0 -> self` as a polynomial in the variable `var` of an `M`-variable ring.
    pub fn embed<const M: usize>(&self, var: usize) -> OpPoly<F, M> {
        let mut out = OpPoly::zero(self.rows, self.cols);
        for (e, x) in &self.terms {
            let mut f = [0; M];
            f[var] = e[0];
            out.push(f, x.clone());
        }
        out
    }

    pub fn exponents(&self) -> Vec<i64> {
        self.terms.keys().map(|e| e[0]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rational;

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn laurent_ring_ops() {
        let u = Laurent::<Rational, 2>::var(0);
        let v = Laurent::<Rational, 2>::var(1);
        let x = (u.clone() - &v) * (u.clone() + &v);
        let y = u.clone() * &u - v.clone() * &v;
        assert_eq!(x, y);
        assert_eq!(x.eval(&[r(3), r(2)]), r(5));
        assert_eq!(x.scale_arg(0, &r(2)).eval(&[r(1), r(1)]), r(3));
    }

    #[test]
    fn oppoly_product_and_eval() {
        let a = Matrix::from_rows(vec![vec![r(0), r(1)], vec![r(0), r(0)]]);
        let p = OperatorPoly::constant(Matrix::identity(2)).add(&OperatorPoly::monomial(a.clone(), [-1]));
        let sq = p.mul(&p);
        // (1 + a/u)^2 = 1 + 2a/u since a^2 = 0
        assert_eq!(sq.coeff_at(-1), a.scale(&r(2)));
        assert!(sq.coeff_at(-2).is_zero());
        assert_eq!(sq.eval(&r(2)), Matrix::identity(2).add(&a));
        assert!(p.scale_arg(0, &r(2)).coeff_at(-1) == a.scale(&Rational::new(1.into(), 2.into())));
    }
}
