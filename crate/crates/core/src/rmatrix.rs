//! R-matrices on tensor powers of `C^n`.
//!
//! Basis vectors `e_{a_1} ⊗ ... ⊗ e_{a_r}` (0-based `a_k`) are indexed by
//! `Σ a_k n^{r-k}`, so the first tensor factor is the most significant digit.

use crate::linalg::Matrix;
use crate::perm;
use crate::poly::{Laurent, OpPoly};
use crate::scalar::{Algebra, QParam, Ring, Scalar};

/// Operator on `(C^n)^{⊗r}` with entries in `E`.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorOp<E> {
    n: usize,
    r: usize,
    mat: Matrix<E>,
}

/// Index of `e_{a_1} ⊗ ... ⊗ e_{a_r}`.
pub fn tensor_index(n: usize, a: &[usize]) -> usize {
    a.iter().fold(0, |acc, &x| acc * n + x)
}

/// Digits of a tensor index.
pub fn tensor_digits(n: usize, r: usize, mut idx: usize) -> Vec<usize> {
    let mut out = vec![0; r];
    for k in (0..r).rev() {
        out[k] = idx % n;
        idx /= n;
    }
    out
}

impl<E: Ring> TensorOp<E> {
    pub fn identity(n: usize, r: usize) -> Self {
        TensorOp { n, r, mat: Matrix::identity(n.pow(r as u32)) }
    }

    pub fn from_matrix(n: usize, r: usize, mat: Matrix<E>) -> Self {
        assert_eq!(mat.rows(), n.pow(r as u32));
        TensorOp { n, r, mat }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn matrix(&self) -> &Matrix<E> {
        &self.mat
    }

    /// Matrix element `<e_a | X | e_b>`.
    pub fn entry(&self, a: &[usize], b: &[usize]) -> &E {
        self.mat.get(tensor_index(self.n, a), tensor_index(self.n, b))
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!((self.n, self.r), (o.n, o.r));
        TensorOp { n: self.n, r: self.r, mat: self.mat.mul(&o.mat) }
    }

    pub fn add(&self, o: &Self) -> Self {
        TensorOp { n: self.n, r: self.r, mat: self.mat.add(&o.mat) }
    }

    pub fn scale(&self, c: &E) -> Self {
        TensorOp { n: self.n, r: self.r, mat: self.mat.scale(c) }
    }

    /// Image `X_{ij}` of a two-site operator acting in factors `i < j` of an `r`-fold product.
    pub fn embed(&self, r: usize, i: usize, j: usize) -> Self {
        assert_eq!(self.r, 2, "only two-site operators can be embedded");
        assert!(i != j && i < r && j < r);
        let n = self.n;
        let dim = n.pow(r as u32);
        let mut mat = Matrix::zeros(dim, dim);
        for col in 0..dim {
            let b = tensor_digits(n, r, col);
            for ai in 0..n {
                for aj in 0..n {
                    let v = self.entry(&[ai, aj], &[b[i], b[j]]);
                    if v.is_zero() {
                        continue;
                    }
                    let mut a = b.clone();
                    a[i] = ai;
                    a[j] = aj;
                    mat.set(tensor_index(n, &a), col, v.clone());
                }
            }
        }
        TensorOp { n, r, mat }
    }

    /// Apply to the basis vector `e_b`, returning coordinates.
    pub fn apply_basis(&self, b: &[usize]) -> Vec<E> {
        self.mat.column(tensor_index(self.n, b))
    }
}

fn two_site<E: Ring>(n: usize, mut f: impl FnMut(usize, usize, usize, usize) -> Option<E>) -> TensorOp<E> {
    let mut mat = Matrix::zeros(n * n, n * n);
    for a1 in 0..n {
        for a2 in 0..n {
            for b1 in 0..n {
                for b2 in 0..n {
                    if let Some(v) = f(a1, a2, b1, b2) {
                        mat.set(tensor_index(n, &[a1, a2]), tensor_index(n, &[b1, b2]), v);
                    }
                }
            }
        }
    }
    TensorOp { n, r: 2, mat }
}

/// `R = q Σ E_ii⊗E_ii + Σ_{i≠j} E_ii⊗E_jj + (q - q^{-1}) Σ_{i<j} E_ij⊗E_ji`.
pub fn constant_r<F: Scalar>(n: usize, q: &QParam<F>) -> TensorOp<F> {
    two_site(n, |a1, a2, b1, b2| {
        if (a1, a2) == (b1, b2) {
            Some(if a1 == a2 { q.q().clone() } else { F::one() })
        } else if a1 == b2 && a2 == b1 && a1 < a2 {
            // E_{a1 a2} ⊗ E_{a2 a1} maps e_{a2} ⊗ e_{a1} to e_{a1} ⊗ e_{a2}
            Some(q.q_diff())
        } else {
            None
        }
    })
}

/// Trigonometric R-matrix `R(u, v)` with `u`, `v` taken from any algebra over `F`:
///
/// `(u - v) Σ_{i≠j} E_ii⊗E_jj + (q^{-1}u - qv) Σ_i E_ii⊗E_ii
///  + (q^{-1} - q) u Σ_{i>j} E_ij⊗E_ji + (q^{-1} - q) v Σ_{i<j} E_ij⊗E_ji`.
pub fn trig_r<F: Scalar, E: Algebra<F>>(n: usize, u: &E, v: &E, q: &QParam<F>) -> TensorOp<E> {
    let qi = E::from_scalar(q.q_inv().clone());
    let qq = E::from_scalar(q.q().clone());
    let d = E::from_scalar(q.q_inv().clone() - q.q());
    two_site(n, |a1, a2, b1, b2| {
        if (a1, a2) == (b1, b2) {
            Some(if a1 == a2 {
                qi.mul_ref(u) - qq.mul_ref(v)
            } else {
                u.clone() - v
            })
        } else if a1 == b2 && a2 == b1 {
            Some(if a1 > a2 { d.mul_ref(u) } else { d.mul_ref(v) })
        } else {
            None
        }
    })
}

/// `P^q = Σ E_ii⊗E_ii + q Σ_{i>j} E_ij⊗E_ji + q^{-1} Σ_{i<j} E_ij⊗E_ji`.
pub fn q_permutation<F: Scalar>(n: usize, q: &QParam<F>) -> TensorOp<F> {
    two_site(n, |a1, a2, b1, b2| {
        if a1 == a2 && (a1, a2) == (b1, b2) {
            Some(F::one())
        } else if a1 != a2 && a1 == b2 && a2 == b1 {
            Some(if a1 > a2 { q.q().clone() } else { q.q_inv().clone() })
        } else {
            None
        }
    })
}

/// `P^q_σ = P^q_{s_{w_1}} ... P^q_{s_{w_l}}` for the word `w`.
pub fn p_sigma_word<F: Scalar>(n: usize, r: usize, word: &[usize], q: &QParam<F>) -> TensorOp<F> {
    let p = q_permutation(n, q);
    let mut out = TensorOp::identity(n, r);
    for &i in word {
        out = out.mul(&p.embed(r, i, i + 1));
    }
    out
}

/// `P^q_σ` built from the canonical reduced word of `σ`.
pub fn p_sigma<F: Scalar>(n: usize, r: usize, sigma: &[usize], q: &QParam<F>) -> TensorOp<F> {
    p_sigma_word(n, r, &perm::reduced_word(sigma), q)
}

/// `A^q_r = Σ_σ sgn σ · P^q_σ`.
pub fn antisymmetrizer<F: Scalar>(n: usize, r: usize, q: &QParam<F>) -> TensorOp<F> {
    let mut out = TensorOp { n, r, mat: Matrix::zeros(n.pow(r as u32), n.pow(r as u32)) };
    for s in perm::all_perms(r) {
        let mut p = p_sigma(n, r, &s, q);
        if perm::inversions(&s) % 2 == 1 {
            p = p.scale(&-F::one());
        }
        out = out.add(&p);
    }
    out
}

/// `R(u_1, ..., u_r) = Π_{i<j} R_{ij}(u_i, u_j)` in lexicographic order of `(i, j)`.
pub fn fused_r<F: Scalar, E: Algebra<F>>(n: usize, points: &[E], q: &QParam<F>) -> TensorOp<E> {
    let r = points.len();
    let mut out = TensorOp::identity(n, r);
    for i in 0..r {
        for j in i + 1..r {
            out = out.mul(&trig_r(n, &points[i], &points[j], q).embed(r, i, j));
        }
    }
    out
}

/// Whether `R(1, q^{-2}, ..., q^{-2r+2}) = Π_{i<j} (q^{-2i} - q^{-2j}) A^q_r`.
pub fn fusion_holds<F: Scalar>(n: usize, r: usize, q: &QParam<F>) -> bool {
    let pts: Vec<F> = (0..r as i64).map(|k| q.pow(-2 * k)).collect();
    let lhs = fused_r(n, &pts, q);
    let mut c = F::one();
    for i in 0..r as i64 {
        for j in i + 1..r as i64 {
            c = c * &(q.pow(-2 * i) - &q.pow(-2 * j));
        }
    }
    lhs == antisymmetrizer(n, r, q).scale(&c)
}

/// `c` with `(A^q_r)^2 = c A^q_r`, if such a scalar exists.
pub fn antisymmetrizer_square_constant<F: Scalar>(n: usize, r: usize, q: &QParam<F>) -> Option<F> {
    let a = antisymmetrizer(n, r, q);
    let a2 = a.mul(&a);
    let dim = a.mat.rows();
    let (i, j) = (0..dim)
        .flat_map(|i| (0..dim).map(move |j| (i, j)))
        .find(|&(i, j)| !a.mat.get(i, j).is_zero())?;
    let c = a2.mat.get(i, j).try_div(a.mat.get(i, j)).ok()?;
    (a2 == a.scale(&c)).then_some(c)
}

/// `A^q_r(e_{a_τ(1)} ⊗ ...) = (-q)^{-l(τ)} A^q_r(e_{a_1} ⊗ ...)` for all `τ`, `a = (0, .., r-1)`.
pub fn antisymmetrizer_signs_hold<F: Scalar>(n: usize, r: usize, q: &QParam<F>) -> bool {
    assert!(r <= n);
    let a = antisymmetrizer(n, r, q);
    let base: Vec<usize> = (0..r).collect();
    let v0 = a.apply_basis(&base);
    perm::all_perms(r).into_iter().all(|t| {
        let c = q.neg_q_pow(-(perm::inversions(&t) as i64));
        let v = a.apply_basis(&t);
        v.iter().zip(&v0).all(|(x, y)| *x == c.mul_ref(y))
    })
}

/// Whether `P^q_σ` is the same for every reduced word of every `σ ∈ S_r`.
pub fn reduced_word_independence<F: Scalar>(n: usize, r: usize, q: &QParam<F>) -> bool {
    perm::all_perms(r).into_iter().all(|s| {
        let words = perm::all_reduced_words(&s);
        let first = p_sigma_word(n, r, &words[0], q);
        words[1..].iter().all(|w| p_sigma_word(n, r, w, q) == first)
    })
}

/// `P^q_σ(e_{a_1} ⊗ ...) = q^{l(σ)} e_{a_{σ^{-1}(1)}} ⊗ ...` for `a = (0, .., r-1)`; needs `r <= n`.
pub fn p_sigma_action_holds<F: Scalar>(n: usize, r: usize, q: &QParam<F>) -> bool {
    let a: Vec<usize> = (0..r).collect();
    perm::all_perms(r).into_iter().all(|s| {
        let p = p_sigma(n, r, &s, q);
        let inv = perm::inverse(&s);
        let target: Vec<usize> = inv.iter().map(|&k| a[k]).collect();
        let mut expect = vec![F::zero(); n.pow(r as u32)];
        expect[tensor_index(n, &target)] = q.pow(perm::inversions(&s) as i64);
        p.apply_basis(&a) == expect
    })
}

/// `R12 R13 R23 = R23 R13 R12` for the constant R-matrix.
pub fn ybe_constant_holds<F: Scalar>(n: usize, q: &QParam<F>) -> bool {
    let r = constant_r(n, q);
    let (r12, r13, r23) = (r.embed(3, 0, 1), r.embed(3, 0, 2), r.embed(3, 1, 2));
    r12.mul(&r13).mul(&r23) == r23.mul(&r13).mul(&r12)
}

/// `R12(u,v) R13(u,w) R23(v,w) = R23(v,w) R13(u,w) R12(u,v)` for values in `E`.
pub fn ybe_trig_holds<F: Scalar, E: Algebra<F>>(n: usize, u: &E, v: &E, w: &E, q: &QParam<F>) -> bool {
    let r12 = trig_r(n, u, v, q).embed(3, 0, 1);
    let r13 = trig_r(n, u, w, q).embed(3, 0, 2);
    let r23 = trig_r(n, v, w, q).embed(3, 1, 2);
    r12.mul(&r13).mul(&r23) == r23.mul(&r13).mul(&r12)
}

/// Trigonometric YBE as an identity of Laurent polynomials in `u, v, w`.
pub fn ybe_trig_symbolic_holds<F: Scalar>(n: usize, q: &QParam<F>) -> bool {
    let (u, v, w) = (Laurent::<F, 3>::var(0), Laurent::var(1), Laurent::var(2));
    ybe_trig_holds(n, &u, &v, &w, q)
}

/// `n x n` matrix of operator-valued entries `x[i][j]`.
pub type OpMatrix<F, const N: usize> = Vec<Vec<OpPoly<F, N>>>;

/// `R X_1 Y_2 = Y_2 X_1 R` where `R` has scalar polynomial entries.
pub fn rtt_holds<F: Scalar, const N: usize>(
    r: &TensorOp<Laurent<F, N>>,
    x: &OpMatrix<F, N>,
    y: &OpMatrix<F, N>,
) -> bool {
    let n = r.n;
    let dim = x[0][0].rows();
    let mut xy = vec![vec![vec![vec![None; n]; n]; n]; n];
    let mut yx = vec![vec![vec![vec![None; n]; n]; n]; n];
    for c1 in 0..n {
        for b1 in 0..n {
            for c2 in 0..n {
                for b2 in 0..n {
                    // (X_1 Y_2)_{(c1 c2),(b1 b2)} = x_{c1 b1} y_{c2 b2}
                    xy[c1][c2][b1][b2] = Some(x[c1][b1].mul(&y[c2][b2]));
                    // (Y_2 X_1)_{(c1 c2),(b1 b2)} = y_{c2 b2} x_{c1 b1}
                    yx[c1][c2][b1][b2] = Some(y[c2][b2].mul(&x[c1][b1]));
                }
            }
        }
    }
    for a1 in 0..n {
        for a2 in 0..n {
            for b1 in 0..n {
                for b2 in 0..n {
                    let mut lhs = OpPoly::zero(dim, dim);
                    let mut rhs = OpPoly::zero(dim, dim);
                    for c1 in 0..n {
                        for c2 in 0..n {
                            let rl = r.entry(&[a1, a2], &[c1, c2]);
                            if !rl.is_zero() {
                                lhs.add_assign(&xy[c1][c2][b1][b2].as_ref().expect("filled").scale_laurent(rl));
                            }
                            let rr = r.entry(&[c1, c2], &[b1, b2]);
                            if !rr.is_zero() {
                                rhs.add_assign(&yx[a1][a2][c1][c2].as_ref().expect("filled").scale_laurent(rr));
                            }
                        }
                    }
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Constant R-matrix with entries viewed as constant polynomials.
pub fn constant_r_poly<F: Scalar, const N: usize>(n: usize, q: &QParam<F>) -> TensorOp<Laurent<F, N>> {
    let r = constant_r(n, q);
    TensorOp { n, r: 2, mat: r.mat.map(|x| Laurent::constant(x.clone())) }
}

/// `R(u, v)` with `u`, `v` the two variables of a bivariate Laurent ring.
pub fn trig_r_poly<F: Scalar>(n: usize, q: &QParam<F>) -> TensorOp<Laurent<F, 2>> {
    trig_r(n, &Laurent::var(0), &Laurent::var(1), q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{RatFuncQ, Rational};

    fn qr() -> QParam<Rational> {
        QParam::rational(&Rational::new(5.into(), 2.into())).unwrap()
    }

    #[test]
    fn constant_r_entry_n2() {
        let q = QParam::symbolic();
        let r = constant_r(2, &q);
        // R(e_2 ⊗ e_1) = (q - q^{-1}) e_1 ⊗ e_2 + e_2 ⊗ e_1
        let v = r.apply_basis(&[1, 0]);
        assert_eq!(v[tensor_index(2, &[0, 1])], q.q_diff());
        assert_eq!(v[tensor_index(2, &[1, 0])], RatFuncQ::one());
        assert!(v[tensor_index(2, &[0, 0])].is_zero());
        assert_eq!(r.apply_basis(&[0, 0])[0], RatFuncQ::q());
    }

    #[test]
    fn q_permutation_action() {
        let q = qr();
        let p = q_permutation(2, &q);
        let v = p.apply_basis(&[0, 1]);
        assert_eq!(v[tensor_index(2, &[1, 0])], q.q().clone());
        let w = p.apply_basis(&[1, 0]);
        assert_eq!(w[tensor_index(2, &[0, 1])], q.q_inv().clone());
    }

    #[test]
    fn antisymmetrizer_two_sites() {
        let q = qr();
        let a = antisymmetrizer(2, 2, &q);
        let v = a.apply_basis(&[1, 0]);
        let v0 = a.apply_basis(&[0, 1]);
        let c = -q.q_inv().clone();
        assert!(v.iter().zip(&v0).all(|(x, y)| *x == c.clone() * y));
    }

    #[test]
    fn fusion_small() {
        let q = qr();
        assert!(fusion_holds(2, 2, &q));
        assert!(fusion_holds(3, 3, &q));
    }
}
