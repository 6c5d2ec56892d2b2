//! Finite-`n` checks for the twisted subalgebra generated by the `τ_ij`, its
//! central polynomial `d_n(u)`, the centralizer map `φ_n` and two auxiliary
//! lemmas on elementary symmetric functions.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::gtrep::{self, GtRep, Which};
use crate::linalg::Matrix;
use crate::perm::{all_perms, ind, inversions};
use crate::poly::{Laurent, OperatorPoly};
use crate::qminor::{subsets, Minors};
use crate::report::Check;
use crate::scalar::{QParam, Rational, Ring, Scalar};

/// A module of `U_q(gl_n)` with the matrices of `τ_ij` (`i > j`) and `τ̄_ij` (`i <= j`).
#[derive(Clone, Debug)]
pub struct TauRep<F> {
    base: GtRep<F>,
    tau: Vec<Vec<Matrix<F>>>,
    taubar: Vec<Vec<Matrix<F>>>,
}

impl<F: Scalar> TauRep<F> {
    pub fn new(base: GtRep<F>) -> Self {
        let n = base.n();
        let dim = base.dim();
        let mut tau = vec![vec![Matrix::zeros(dim, dim); n]; n];
        let mut taubar = vec![vec![Matrix::zeros(dim, dim); n]; n];
        for i in 0..n {
            for j in 0..n {
                if i > j {
                    tau[i][j] = base.t(i, j).mul(base.tbar(j, j));
                } else {
                    taubar[i][j] = base.tbar(i, j).mul(base.tbar(j, j));
                }
            }
            tau[i][i] = Matrix::identity(dim);
        }
        TauRep { base, tau, taubar }
    }

    pub fn base(&self) -> &GtRep<F> {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// `τ_ij`; zero for `i < j`, identity for `i = j`.
    pub fn tau(&self, i: usize, j: usize) -> &Matrix<F> {
        &self.tau[i][j]
    }

    /// `τ̄_ij`; zero for `i > j`.
    pub fn taubar(&self, i: usize, j: usize) -> &Matrix<F> {
        &self.taubar[i][j]
    }
}

/// `d_n(u) = 1 + d^{(1)} u^{-1} + ... + d^{(n)} u^{-n}`.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralPoly<F> {
    /// `coeffs[k]` multiplies `u^{-k}`, `k = 0..=n`.
    pub coeffs: Vec<Matrix<F>>,
}

impl<F: Scalar> CentralPoly<F> {
    fn from_poly(p: &OperatorPoly<F>, n: usize) -> Result<Self> {
        if p.exponents().iter().any(|&e| e > 0 || e < -(n as i64)) {
            return Err(Error::Inconsistent("d_n(u) has exponents outside -n..0".into()));
        }
        Ok(CentralPoly { coeffs: (0..=n as i64).map(|k| p.coeff_at(-k)).collect() })
    }
}

/// `Σ_σ (-q)^{-l(σ)} q^{ind σ} ∏_k (τ_{σ(k)k} - τ̄_{σ(k)k} q^{2k-2} u^{-1})`.
pub fn d_tau_form<F: Scalar>(tr: &TauRep<F>) -> OperatorPoly<F> {
    let q = tr.base.q();
    let n = tr.n();
    let dim = tr.dim();
    let mut out = OperatorPoly::zero(dim, dim);
    for sigma in all_perms(n) {
        let mut term = OperatorPoly::identity(dim);
        for (k, &s) in sigma.iter().enumerate() {
            let f = OperatorPoly::monomial(tr.tau(s, k).clone(), [0])
                .sub(&OperatorPoly::monomial(tr.taubar(s, k).scale(&q.pow(2 * k as i64)), [-1]));
            term = term.mul(&f);
            if term.is_zero() {
                break;
            }
        }
        let c = q.neg_q_pow(-(inversions(&sigma) as i64)) * &q.pow(ind(&sigma) as i64);
        out.add_assign(&term.scale(&c));
    }
    out
}

/// `qdet(T - T̄u^{-1}) · t̄_11 ⋯ t̄_nn`.
pub fn d_qdet_form<F: Scalar>(tr: &TauRep<F>) -> OperatorPoly<F> {
    let g = tr.base.generators();
    let t = gtrep::evaluation_series(g, Which::T, false).entries;
    let mut out = Minors::standard(&t, tr.base.q()).qdet();
    for k in 0..tr.n() {
        out = out.mul_matrix(tr.base.tbar(k, k));
    }
    out
}

/// Both forms of `d_n(u)`, after checking they agree.
pub fn d_polynomial<F: Scalar>(tr: &TauRep<F>) -> Result<CentralPoly<F>> {
    let a = d_tau_form(tr);
    if a != d_qdet_form(tr) {
        return Err(Error::Inconsistent("the two forms of d_n(u) differ".into()));
    }
    CentralPoly::from_poly(&a, tr.n())
}

fn commutes_with_all<F: Scalar>(x: &Matrix<F>, gens: &[&Matrix<F>]) -> bool {
    gens.iter().all(|g| x.commutator(g).is_zero())
}

pub fn d_checks<F: Scalar>(tr: &TauRep<F>) -> Vec<Check> {
    let a = d_tau_form(tr);
    let b = d_qdet_form(tr);
    let mut out = vec![Check::new("olshanski:d tau form = qdet form", a == b, "")];
    match CentralPoly::from_poly(&a, tr.n()) {
        Ok(d) => {
            out.push(Check::new("olshanski:d constant term 1", d.coeffs[0] == Matrix::identity(tr.dim()), ""));
            let gens: Vec<&Matrix<F>> = tr.base.generators().all().collect();
            let central = d.coeffs.iter().all(|c| commutes_with_all(c, &gens));
            out.push(Check::new("olshanski:d central", central, format!("{} generators", gens.len())));
        }
        Err(e) => out.push(Check::new("olshanski:d shape", false, e.to_string())),
    }
    out
}

/// `τ_ij(u) ↦ qdet(T - T̄u^{-1})_{B_i B_j} · t̄_jj · t̄_{m+1,m+1} ⋯ t̄_nn`, `B_i = {i, m+1, .., n}`.
///
/// Indices are 0-based: `i, j < m <= n`.
pub fn phi_image<F: Scalar>(tr: &TauRep<F>, m: usize, i: usize, j: usize) -> Result<OperatorPoly<F>> {
    let n = tr.n();
    if !(i < m && j < m && m <= n) {
        return Err(Error::Invalid(format!("phi image needs i, j < m <= n, got i={i} j={j} m={m} n={n}")));
    }
    let rows: Vec<usize> = std::iter::once(i).chain(m..n).collect();
    let cols: Vec<usize> = std::iter::once(j).chain(m..n).collect();
    let t = gtrep::evaluation_series(tr.base.generators(), Which::T, false).entries;
    let mut out = Minors::standard(&t, tr.base.q()).minor(&rows, &cols);
    out = out.mul_matrix(tr.base.tbar(j, j));
    for k in m..n {
        out = out.mul_matrix(tr.base.tbar(k, k));
    }
    Ok(out)
}

/// Every coefficient of every `φ_n(τ_ij(u))` commutes with `t_kl`, `t̄_kl` for `k, l >= m`.
pub fn phi_checks<F: Scalar>(tr: &TauRep<F>, m: usize) -> Vec<Check> {
    let n = tr.n();
    let name = format!("olshanski:phi centralizer (n={n}, m={m})");
    if m == 0 || m >= n {
        return vec![Check::skipped(name, "needs 0 < m < n")];
    }
    let block: Vec<&Matrix<F>> = (m..n)
        .flat_map(|k| (m..n).flat_map(move |l| [(k, l), (k, l)]))
        .enumerate()
        .map(|(c, (k, l))| if c % 2 == 0 { tr.base.t(k, l) } else { tr.base.tbar(k, l) })
        .collect();
    let mut ok = true;
    let mut nontrivial = false;
    for i in 0..m {
        for j in 0..m {
            match phi_image(tr, m, i, j) {
                Ok(p) => {
                    nontrivial |= !p.is_zero();
                    ok &= p.terms().all(|(_, c)| commutes_with_all(c, &block));
                }
                Err(_) => ok = false,
            }
        }
    }
    vec![Check::new(name, ok && nontrivial, format!("{} block generators", block.len()))]
}

fn delta(a: bool) -> i64 {
    a as i64
}

/// The three defining relations between the `τ_ij`, `τ̄_ij`.
pub fn tau_relation_checks<F: Scalar>(tr: &TauRep<F>) -> Vec<Check> {
    let q = tr.base.q();
    let n = tr.n();
    let qd = q.q_diff();
    type Pick<'a, F> = &'a dyn Fn(usize, usize) -> &'a Matrix<F>;
    let tau: Pick<F> = &|i, j| tr.tau(i, j);
    let taubar: Pick<F> = &|i, j| tr.taubar(i, j);
    // (left X, left Y, right first, right second) for
    // q^{δij+δja} X_ia Y_jb - q^{δib+δab} Y_jb X_ia = (q-q^{-1}) q^{δia} (δ_{b<a} A_ja B_ib - δ_{i<j} C_ja D_ib)
    let families: [(&str, Pick<F>, Pick<F>, [Pick<F>; 4]); 3] = [
        ("tau-tau", tau, tau, [tau, tau, tau, tau]),
        ("taubar-taubar", taubar, taubar, [taubar, taubar, taubar, taubar]),
        ("taubar-tau", taubar, tau, [tau, taubar, taubar, tau]),
    ];
    let mut out = Vec::new();
    for (label, x, y, [a, b, c, d]) in families {
        let mut ok = true;
        for i in 0..n {
            for j in 0..n {
                for ia in 0..n {
                    for ib in 0..n {
                        let lhs = x(i, ia)
                            .mul(y(j, ib))
                            .scale(&q.pow(delta(i == j) + delta(j == ia)))
                            .sub(&y(j, ib).mul(x(i, ia)).scale(&q.pow(delta(i == ib) + delta(ia == ib))));
                        let mut rhs = Matrix::zeros(tr.dim(), tr.dim());
                        if ib < ia {
                            rhs.add_assign(&a(j, ia).mul(b(i, ib)));
                        }
                        if i < j {
                            rhs = rhs.sub(&c(j, ia).mul(d(i, ib)));
                        }
                        let rhs = rhs.scale(&(qd.clone() * &q.pow(delta(i == ia))));
                        ok &= lhs == rhs;
                    }
                }
            }
        }
        out.push(Check::new(format!("olshanski:tau relations {label}"), ok, ""));
    }
    out
}

/// `e_r(z_1, .., z_l)`; zero for `r > l`, one for `r = 0`.
pub fn esym(r: usize, z: &[Rational]) -> Rational {
    // coefficients of ∏ (1 + z_i x)
    let mut c = vec![Rational::one()];
    for zi in z {
        let mut next = vec![Rational::zero(); c.len() + 1];
        for (k, ck) in c.iter().enumerate() {
            next[k] += ck;
            next[k + 1] += &(ck.clone() * zi);
        }
        c = next;
    }
    c.get(r).cloned().unwrap_or_else(Rational::zero)
}

/// The `p x l` matrix with entries `e_{ri} = e_r(α_1, .., α̂_i, .., α_l)`, `r = 0..p-1`.
pub fn e_matrix(p: usize, alphas: &[Rational]) -> Matrix<Rational> {
    let l = alphas.len();
    Matrix::from_fn(p, l, |r, i| {
        let rest: Vec<Rational> = alphas.iter().enumerate().filter(|&(k, _)| k != i).map(|(_, a)| a.clone()).collect();
        esym(r, &rest)
    })
}

fn distinct(v: &[Rational]) -> bool {
    (0..v.len()).all(|i| (i + 1..v.len()).all(|j| v[i] != v[j]))
}

/// Every `p x p` minor of the matrix `E` built from distinct `α` is nonzero.
pub fn e_minors_nonzero(p: usize, alphas: &[Rational]) -> Result<bool> {
    if !distinct(alphas) {
        return Err(Error::Invalid("parameters must be distinct".into()));
    }
    if p == 0 || p > alphas.len() {
        return Err(Error::Invalid(format!("need 1 <= p <= l, got p={p}, l={}", alphas.len())));
    }
    let e = e_matrix(p, alphas);
    Ok(subsets(alphas.len(), p).iter().all(|cols| !e.select_cols(cols).det().is_zero()))
}

/// Rows `(E_0, β_k E_1, .., β_k^{m-1} E_{m-1})`, `k = 1..m`.
pub fn block_vandermonde(blocks: &[Matrix<Rational>], betas: &[Rational]) -> Result<Matrix<Rational>> {
    let m = blocks.len();
    if betas.len() != m || m == 0 {
        return Err(Error::Invalid("need one parameter per block".into()));
    }
    let p = blocks[0].rows();
    if blocks.iter().any(|b| b.rows() != p || b.cols() != p) {
        return Err(Error::Invalid("blocks must be square of equal size".into()));
    }
    let mut out = Matrix::zeros(m * p, m * p);
    for (k, beta) in betas.iter().enumerate() {
        let mut power = Rational::one();
        for (j, b) in blocks.iter().enumerate() {
            out.set_block(k * p, j * p, &b.scale(&power));
            power *= beta;
        }
    }
    Ok(out)
}

/// The block matrix is nonsingular for nonsingular blocks and distinct `β`.
pub fn block_lemma_holds(blocks: &[Matrix<Rational>], betas: &[Rational]) -> Result<bool> {
    if !distinct(betas) {
        return Err(Error::Invalid("parameters must be distinct".into()));
    }
    if blocks.iter().any(|b| b.det().is_zero()) {
        return Err(Error::Invalid("blocks must be nonsingular".into()));
    }
    Ok(!block_vandermonde(blocks, betas)?.det().is_zero())
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let num: i64 = rng.gen_range(-40..=40);
    let den: i64 = rng.gen_range(1..=9);
    Rational::new(num.into(), den.into())
}

fn distinct_rationals(rng: &mut ChaCha8Rng, k: usize) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::with_capacity(k);
    while out.len() < k {
        let x = random_rational(rng);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// Both lemmas on `draws` seeded random parameter sets. The blocks for the
/// second lemma are `p x p` column selections of an `E` matrix, as in its use.
pub fn lemma_checks(seed: u64, draws: usize) -> Vec<Check> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut e_ok = 0;
    let mut b_ok = 0;
    let mut failures = Vec::new();
    for d in 0..draws {
        let l = rng.gen_range(1..=6);
        let p = rng.gen_range(1..=l);
        let alphas = distinct_rationals(&mut rng, l);
        match e_minors_nonzero(p, &alphas) {
            Ok(true) => e_ok += 1,
            other => failures.push(format!("E draw {d}: {other:?}")),
        }
        let m = rng.gen_range(1..=3);
        let e = e_matrix(p, &alphas);
        let all_cols = subsets(l, p);
        let blocks: Vec<Matrix<Rational>> = (0..m)
            .map(|_| e.select_cols(all_cols.choose(&mut rng).expect("p <= l")))
            .collect();
        let betas = distinct_rationals(&mut rng, m);
        match block_lemma_holds(&blocks, &betas) {
            Ok(true) => b_ok += 1,
            other => failures.push(format!("block draw {d}: {other:?}")),
        }
    }
    vec![
        Check::new("olshanski:E minors nonzero", e_ok == draws, format!("{e_ok}/{draws} draws, seed {seed}")),
        Check::new(
            "olshanski:block Vandermonde nonsingular",
            b_ok == draws,
            format!("{b_ok}/{draws} draws, seed {seed}{}", if failures.is_empty() { String::new() } else { format!("; {}", failures.join("; ")) }),
        ),
    ]
}

/// `d_n(u)` on `L(λ)` as a scalar polynomial, when it acts by a scalar.
pub fn d_scalar<F: Scalar>(tr: &TauRep<F>) -> Option<Laurent<F, 1>> {
    d_tau_form(tr).as_scalar()
}

/// The value of `d_n(u)` on `L(λ)`: `∏_i (1 - q^{-2λ_i + 2i - 2} u^{-1})`,
/// read off from the highest vector.
pub fn d_expected<F: Scalar>(lambda: &[i64], q: &QParam<F>) -> Laurent<F, 1> {
    let mut out = Laurent::constant(F::one());
    for (i0, &l) in lambda.iter().enumerate() {
        let i = i0 as i64 + 1;
        out = out * Laurent::from_pairs([(0, F::one()), (-1, -q.pow(-2 * l + 2 * i - 2))]);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gtrep::build_rep;

    fn r(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn rq() -> QParam<Rational> {
        QParam::rational(&Rational::new(5.into(), 2.into())).unwrap()
    }

    #[test]
    fn d_one_dim() {
        let q = rq();
        let tr = TauRep::new(build_rep(&[3], &q).unwrap());
        let d = d_polynomial(&tr).unwrap();
        assert_eq!(d.coeffs[1], Matrix::scalar(1, -q.pow(-6)));
    }

    #[test]
    fn d_forms_and_phi() {
        let q = rq();
        for lambda in [vec![1, 0], vec![2, 1, 0], vec![1, 0, 0]] {
            let tr = TauRep::new(build_rep(&lambda, &q).unwrap());
            for c in d_checks(&tr).into_iter().chain(tau_relation_checks(&tr)) {
                assert!(c.passed(), "{lambda:?} {c:?}");
            }
            for m in 1..lambda.len() {
                for c in phi_checks(&tr, m) {
                    assert!(c.passed(), "{lambda:?} {c:?}");
                }
            }
            assert_eq!(d_scalar(&tr), Some(d_expected(&lambda, &q)), "{lambda:?}");
        }
    }

    #[test]
    fn phi_at_m_equal_n() {
        let q = rq();
        let tr = TauRep::new(build_rep(&[1, 0], &q).unwrap());
        for i in 0..2 {
            for j in 0..2 {
                let expect = OperatorPoly::monomial(tr.tau(i, j).clone(), [0])
                    .sub(&OperatorPoly::monomial(tr.taubar(i, j).clone(), [-1]));
                assert_eq!(phi_image(&tr, 2, i, j).unwrap(), expect);
            }
        }
    }

    #[test]
    fn e_matrix_small() {
        let e = e_matrix(2, &[r(1), r(2), r(3)]);
        assert_eq!(e, Matrix::from_rows(vec![vec![r(1), r(1), r(1)], vec![r(5), r(4), r(3)]]));
        assert!(e_minors_nonzero(2, &[r(1), r(2), r(3)]).unwrap());
        assert!(e_minors_nonzero(1, &[r(1), r(1)]).is_err());
        let id = Matrix::identity(2);
        assert!(block_lemma_holds(&[id.clone(), id], &[r(1), r(2)]).unwrap());
    }

    #[test]
    fn lemma_draws_pass() {
        for c in lemma_checks(11, 50) {
            assert!(c.passed(), "{c:?}");
        }
    }
}
