//! Evaluation modules `L(λ)` of `U_q(gl_n)` in the Gelfand-Tsetlin basis.
//!
//! Generator indices are 0-based in code (`t[i][j]` is `t_{i+1, j+1}`).
//! Matrices act on column vectors: `X ξ_b = Σ_a X[a][b] ξ_a`.

use std::collections::HashMap;

use crate::combinatorics::{enumerate_gt_patterns, Pattern};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::poly::{Laurent, OperatorPoly};
use crate::report::Check;
use crate::rmatrix::{self, OpMatrix};
use crate::scalar::{QParam, RatFuncU, Scalar};

/// The generators `t_ij` (`i >= j`) and `t̄_ij` (`i <= j`) as matrices;
/// entries outside those triangles are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorSet<F> {
    pub t: Vec<Vec<Matrix<F>>>,
    pub tbar: Vec<Vec<Matrix<F>>>,
}

impl<F: Scalar> GeneratorSet<F> {
    pub fn n(&self) -> usize {
        self.t.len()
    }

    pub fn dim(&self) -> usize {
        self.t[0][0].rows()
    }

    /// All `2n^2` matrices `t_ij`, `t̄_ij`.
    pub fn all(&self) -> impl Iterator<Item = &Matrix<F>> {
        self.t.iter().flatten().chain(self.tbar.iter().flatten())
    }
}

/// `L(λ)` with its Gelfand-Tsetlin basis and generator matrices.
#[derive(Clone, Debug)]
pub struct GtRep<F> {
    lambda: Vec<i64>,
    basis: Vec<Pattern>,
    index: HashMap<Pattern, usize>,
    q: QParam<F>,
    e: Vec<Matrix<F>>,
    f: Vec<Matrix<F>>,
    gens: GeneratorSet<F>,
}

/// Which generator matrix an evaluation series is built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Which {
    /// `T(u) -> T - T̄ u^{-1}`.
    T,
    /// `T̄(u) -> T̄ - T u`.
    TBar,
}

/// Image of `T(u)` or `T̄(u)` under the evaluation homomorphism.
#[derive(Clone, Debug)]
pub struct EvalSeries<F> {
    pub which: Which,
    pub entries: OpMatrix<F, 1>,
    /// Whether the normalized map (division by `1 - u^{-1}`, resp. `1 - u`) is meant.
    /// The entries never include this scalar; see [`EvalSeries::prefactor`].
    pub normalized: bool,
}

impl<F: Scalar> EvalSeries<F> {
    pub fn n(&self) -> usize {
        self.entries.len()
    }

    pub fn dim(&self) -> usize {
        self.entries[0][0].rows()
    }

    /// The scalar factor multiplying each entry: `1`, `1/(1 - u^{-1})` or `1/(1 - u)`.
    pub fn prefactor(&self) -> RatFuncU<F> {
        if !self.normalized {
            return RatFuncU::one();
        }
        let d = match self.which {
            Which::T => Laurent::from_pairs([(0, F::one()), (-1, -F::one())]),
            Which::TBar => Laurent::from_pairs([(0, F::one()), (1, -F::one())]),
        };
        RatFuncU::one().div(&d.to_ratfunc()).expect("nonzero")
    }
}

impl<F: Scalar> GtRep<F> {
    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn n(&self) -> usize {
        self.lambda.len()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Pattern] {
        &self.basis
    }

    pub fn index_of(&self, p: &Pattern) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn q(&self) -> &QParam<F> {
        &self.q
    }

    pub fn generators(&self) -> &GeneratorSet<F> {
        &self.gens
    }

    /// `e_k`, `k = 0 .. n-2`.
    pub fn e(&self, k: usize) -> &Matrix<F> {
        &self.e[k]
    }

    pub fn f(&self, k: usize) -> &Matrix<F> {
        &self.f[k]
    }

    /// `k_i = t_ii t̄_{i+1,i+1}`.
    pub fn k(&self, i: usize) -> Matrix<F> {
        self.gens.t[i][i].mul(&self.gens.tbar[i + 1][i + 1])
    }

    pub fn k_inv(&self, i: usize) -> Matrix<F> {
        self.gens.tbar[i][i].mul(&self.gens.t[i + 1][i + 1])
    }

    pub fn t(&self, i: usize, j: usize) -> &Matrix<F> {
        &self.gens.t[i][j]
    }

    pub fn tbar(&self, i: usize, j: usize) -> &Matrix<F> {
        &self.gens.tbar[i][j]
    }
}

/// `Π_i [l_{k+1,i} - l_{kj}] / Π_{i≠j} [l_{ki} - l_{kj}]` style products of q-integers.
fn qint_ratio<F: Scalar>(q: &QParam<F>, num: impl Iterator<Item = i64>, den: impl Iterator<Item = i64>) -> F {
    let mut x = F::one();
    for a in num {
        x = x * &q.qint(a);
    }
    let mut d = F::one();
    for b in den {
        d = d * &q.qint(b);
    }
    x.try_div(&d).expect("q-integers of nonzero arguments are nonzero")
}

/// Build `L(λ)` from its Gelfand-Tsetlin basis. `λ` must be non-increasing.
pub fn build_rep<F: Scalar>(lambda: &[i64], q: &QParam<F>) -> Result<GtRep<F>> {
    if lambda.is_empty() {
        return Err(Error::Invalid("empty signature".into()));
    }
    let basis = enumerate_gt_patterns(lambda)?;
    let n = lambda.len();
    let dim = basis.len();
    let index: HashMap<Pattern, usize> = basis.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();

    let mut t = vec![vec![Matrix::zeros(dim, dim); n]; n];
    let mut tbar = vec![vec![Matrix::zeros(dim, dim); n]; n];
    for (b, p) in basis.iter().enumerate() {
        for k in 0..n {
            let w = p.weight()[k];
            t[k][k].set(b, b, q.pow(w));
            tbar[k][k].set(b, b, q.pow(-w));
        }
    }

    let mut e = Vec::new();
    let mut f = Vec::new();
    for k in 1..n {
        // e_k, f_k with 1-based row index k
        let mut ek = Matrix::zeros(dim, dim);
        let mut fk = Matrix::zeros(dim, dim);
        for (b, p) in basis.iter().enumerate() {
            for j in 1..=k {
            let lkj = p.l(k, j);
                if let Some(up) = p.shifted(k, j, 1) {
                    let c = qint_ratio(
                        q,
                        (1..=k + 1).map(|i| p.l(k + 1, i) - lkj),
                        (1..=k).filter(|&i| i != j).map(|i| p.l(k, i) - lkj),
                    );
                    ek.set(index[&up], b, -c);
                }
                if let Some(down) = p.shifted(k, j, -1) {
                    let c = qint_ratio(
                        q,
                        (1..k).map(|i| p.l(k - 1, i) - lkj),
                        (1..=k).filter(|&i| i != j).map(|i| p.l(k, i) - lkj),
                    );
                    fk.set(index[&down], b, c);
                }
            }
        }
        e.push(ek);
        f.push(fk);
    }

    let mut rep = GtRep {
        lambda: lambda.to_vec(),
        basis,
        index,
        q: q.clone(),
        e,
        f,
        gens: GeneratorSet { t, tbar },
    };
    rep.gens = derive_full_generators(&rep, |_, j| j + 1, |i, _| i + 1)?;
    Ok(rep)
}

/// All `t_ij`, `t̄_ij` from the diagonal ones and `e_k`, `f_k`.
///
/// `mid_t(i, j)` chooses the middle index `k` with `i > k > j` used for `t_ij`,
/// `mid_tbar(i, j)` the one with `i < k < j` for `t̄_ij`.
pub fn derive_full_generators<F: Scalar>(
    rep: &GtRep<F>,
    mid_t: impl Fn(usize, usize) -> usize,
    mid_tbar: impl Fn(usize, usize) -> usize,
) -> Result<GeneratorSet<F>> {
    let n = rep.n();
    let q = &rep.q;
    let qd = q.q_diff();
    let qd_inv = qd.inv()?;
    let mut g = GeneratorSet { t: rep.gens.t.clone(), tbar: rep.gens.tbar.clone() };
    for i in 0..n - 1 {
        // t_{i+1,i} = (q - q^{-1}) t_ii f_i,  t̄_{i,i+1} = -(q - q^{-1}) e_i t̄_ii
        g.t[i + 1][i] = g.t[i][i].mul(&rep.f[i]).scale(&qd);
        g.tbar[i][i + 1] = rep.e[i].mul(&g.tbar[i][i]).scale(&-qd.clone());
    }
    for gap in 2..n {
        for j in 0..n - gap {
            let i = j + gap;
            let k = mid_t(i, j);
            if !(j < k && k < i) {
                return Err(Error::Invalid(format!("middle index {k} not between {j} and {i}")));
            }
            let c = g.t[i][k].mul(&g.t[k][j]).sub(&g.t[k][j].mul(&g.t[i][k]));
            g.t[i][j] = g.tbar[k][k].mul(&c).scale(&qd_inv);

            let (a, b) = (j, i); // t̄_ab with a < b
            let k = mid_tbar(a, b);
            if !(a < k && k < b) {
                return Err(Error::Invalid(format!("middle index {k} not between {a} and {b}")));
            }
            let c = g.tbar[k][b].mul(&g.tbar[a][k]).sub(&g.tbar[a][k].mul(&g.tbar[k][b]));
            g.tbar[a][b] = g.t[k][k].mul(&c).scale(&qd_inv);
        }
    }
    Ok(g)
}

/// `T(u) -> T - T̄ u^{-1}` or `T̄(u) -> T̄ - T u`.
pub fn evaluation_series<F: Scalar>(gens: &GeneratorSet<F>, which: Which, normalized: bool) -> EvalSeries<F> {
    let n = gens.n();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let (c0, c1, e1) = match which {
                        Which::T => (&gens.t[i][j], &gens.tbar[i][j], -1),
                        Which::TBar => (&gens.tbar[i][j], &gens.t[i][j], 1),
                    };
                    OperatorPoly::constant(c0.clone()).sub(&OperatorPoly::monomial(c1.clone(), [e1]))
                })
                .collect()
        })
        .collect();
    EvalSeries { which, entries, normalized }
}

/// `T_ij(u) = (u t_ij - u^{-1} t̄_ij) / (q - q^{-1})`.
pub fn capital_t_series<F: Scalar>(gens: &GeneratorSet<F>, q: &QParam<F>) -> OpMatrix<F, 1> {
    let n = gens.n();
    let c = q.q_diff().inv().expect("q is not ±1");
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    OperatorPoly::monomial(gens.t[i][j].scale(&c), [1])
                        .sub(&OperatorPoly::monomial(gens.tbar[i][j].scale(&c), [-1]))
                })
                .collect()
        })
        .collect()
}

fn delta(b: bool) -> i64 {
    b as i64
}

/// Check the `U_q(sl_n)` relations for `e_i`, `f_i`, `k_i`.
pub fn verify_sl_relations<F: Scalar>(rep: &GtRep<F>) -> Vec<Check> {
    let q = &rep.q;
    let n = rep.n();
    let mut out = Vec::new();
    let mut bad = |name: &str, fails: Vec<String>| {
        out.push(Check::new(
            format!("sl:{name}"),
            fails.is_empty(),
            if fails.is_empty() { "ok".to_string() } else { format!("fails at {}", fails.join(", ")) },
        ));
    };
    let qd_inv = q.q_diff().inv().expect("q is not ±1");
    let cartan = |i: usize, j: usize| -> i64 {
        if i == j {
            2
        } else if i.abs_diff(j) == 1 {
            -1
        } else {
            0
        }
    };
    let mut f_ke = Vec::new();
    let mut f_kf = Vec::new();
    let mut f_ef = Vec::new();
    let mut f_ee = Vec::new();
    let mut f_serre = Vec::new();
    for i in 0..n - 1 {
        let (k, ki) = (rep.k(i), rep.k_inv(i));
        if k.mul(&ki) != Matrix::identity(rep.dim()) {
            f_ke.push(format!("k_{} invertible", i + 1));
        }
        for j in 0..n - 1 {
            let a = cartan(i, j);
            if k.mul(&rep.e[j]).mul(&ki) != rep.e[j].scale(&q.pow(a)) {
                f_ke.push(format!("(i,j)=({},{})", i + 1, j + 1));
            }
            if k.mul(&rep.f[j]).mul(&ki) != rep.f[j].scale(&q.pow(-a)) {
                f_kf.push(format!("(i,j)=({},{})", i + 1, j + 1));
            }
            let lhs = rep.e[i].commutator(&rep.f[j]);
            let rhs = if i == j { k.sub(&ki).scale(&qd_inv) } else { Matrix::zeros(rep.dim(), rep.dim()) };
            if lhs != rhs {
                f_ef.push(format!("(i,j)=({},{})", i + 1, j + 1));
            }
            if i.abs_diff(j) > 1
                && (!rep.e[i].commutator(&rep.e[j]).is_zero() || !rep.f[i].commutator(&rep.f[j]).is_zero())
            {
                f_ee.push(format!("(i,j)=({},{})", i + 1, j + 1));
            }
            if i.abs_diff(j) == 1 {
                let c = q.q().clone() + q.q_inv();
                for (x, y, tag) in [(&rep.e[i], &rep.e[j], "e"), (&rep.f[i], &rep.f[j], "f")] {
                    let xx = x.mul(x);
                    let s = xx.mul(y).sub(&x.mul(y).mul(x).scale(&c)).add(&y.mul(&xx));
                    if !s.is_zero() {
                        f_serre.push(format!("{tag}:(i,j)=({},{})", i + 1, j + 1));
                    }
                }
            }
        }
    }
    bad("k-e conjugation", f_ke);
    bad("k-f conjugation", f_kf);
    bad("[e_i,f_j]", f_ef);
    bad("far commutation", f_ee);
    bad("serre", f_serre);
    out
}

/// Check the defining relations of `U_q(gl_n)` in component form for the
/// given generator matrices.
pub fn verify_gl_relations<F: Scalar>(g: &GeneratorSet<F>, q: &QParam<F>) -> Vec<Check> {
    let n = g.n();
    let dim = g.dim();
    let qd = q.q_diff();
    let qpow = |k: i64| q.pow(k);
    let mut fails: [Vec<String>; 4] = Default::default();
    for i in 0..n {
        if g.t[i][i].mul(&g.tbar[i][i]) != Matrix::identity(dim) {
            fails[0].push(format!("t_{0}{0} t̄_{0}{0}", i + 1));
        }
        for j in 0..n {
            if i < j && !g.t[i][j].is_zero() {
                fails[0].push(format!("t_{}{} != 0", i + 1, j + 1));
            }
            if i > j && !g.tbar[i][j].is_zero() {
                fails[0].push(format!("t̄_{}{} != 0", i + 1, j + 1));
            }
        }
    }
    let (t, tb) = (&g.t, &g.tbar);
    for i in 0..n {
        for j in 0..n {
            for a in 0..n {
                for b in 0..n {
                    let ci = qpow(delta(i == j));
                    let ca = qpow(delta(a == b));
                    let s = delta(b < a) - delta(i < j);
                    let tag = format!("(i,j,a,b)=({},{},{},{})", i + 1, j + 1, a + 1, b + 1);
                    // q^{δij} t_ia t_jb - q^{δab} t_jb t_ia = (q - q^{-1})(δ_{b<a} - δ_{i<j}) t_ja t_ib
                    for (k, x) in [(1, t), (2, tb)] {
                        let lhs = x[i][a].mul(&x[j][b]).scale(&ci).sub(&x[j][b].mul(&x[i][a]).scale(&ca));
                        let rhs = x[j][a].mul(&x[i][b]).scale(&(qd.clone() * &F::from_i64(s)));
                        if lhs != rhs {
                            fails[k].push(tag.clone());
                        }
                    }
                    // q^{δij} t̄_ia t_jb - q^{δab} t_jb t̄_ia
                    //   = (q - q^{-1})(δ_{b<a} t_ja t̄_ib - δ_{i<j} t̄_ja t_ib)
                    let lhs = tb[i][a].mul(&t[j][b]).scale(&ci).sub(&t[j][b].mul(&tb[i][a]).scale(&ca));
                    let mut rhs = Matrix::zeros(dim, dim);
                    if b < a {
                        rhs = rhs.add(&t[j][a].mul(&tb[i][b]));
                    }
                    if i < j {
                        rhs = rhs.sub(&tb[j][a].mul(&t[i][b]));
                    }
                    if lhs != rhs.scale(&qd) {
                        fails[3].push(tag);
                    }
                }
            }
        }
    }
    let names = ["gl:triangularity", "gl:t-t", "gl:tbar-tbar", "gl:tbar-t"];
    names
        .iter()
        .zip(fails)
        .map(|(name, f)| {
            let ok = f.is_empty();
            let detail = if ok {
                format!("{} index quadruples", n.pow(4))
            } else {
                format!("{} failures, first {}", f.len(), f[0])
            };
            Check::new(*name, ok, detail)
        })
        .collect()
}

/// `R T_1 T_2 = T_2 T_1 R` and its barred and mixed versions with the constant R-matrix.
pub fn verify_rtt_constant<F: Scalar>(g: &GeneratorSet<F>, q: &QParam<F>) -> Vec<Check> {
    let r = rmatrix::constant_r_poly::<F, 1>(g.n(), q);
    let lift = |x: &Vec<Vec<Matrix<F>>>| -> OpMatrix<F, 1> {
        x.iter().map(|row| row.iter().map(|m| OperatorPoly::constant(m.clone())).collect()).collect()
    };
    let (t, tb) = (lift(&g.t), lift(&g.tbar));
    vec![
        Check::new("rtt:R T1 T2 = T2 T1 R", rmatrix::rtt_holds(&r, &t, &t), ""),
        Check::new("rtt:R T̄1 T̄2 = T̄2 T̄1 R", rmatrix::rtt_holds(&r, &tb, &tb), ""),
        Check::new("rtt:R T̄1 T2 = T2 T̄1 R", rmatrix::rtt_holds(&r, &tb, &t), ""),
    ]
}

/// RTT relations with `R(u, v)` for the evaluation images of `T(u)` and `T̄(u)`,
/// as identities of Laurent polynomials in `u`, `v`.
pub fn verify_rtt_evaluation<F: Scalar>(g: &GeneratorSet<F>, q: &QParam<F>) -> Vec<Check> {
    let r = rmatrix::trig_r_poly(g.n(), q);
    let t = evaluation_series(g, Which::T, false).entries;
    let tb = evaluation_series(g, Which::TBar, false).entries;
    let emb = |x: &OpMatrix<F, 1>, var: usize| -> OpMatrix<F, 2> {
        x.iter().map(|row| row.iter().map(|p| p.embed::<2>(var)).collect()).collect()
    };
    vec![
        Check::new("rtt(u,v):T T", rmatrix::rtt_holds(&r, &emb(&t, 0), &emb(&t, 1)), ""),
        Check::new("rtt(u,v):T̄ T̄", rmatrix::rtt_holds(&r, &emb(&tb, 0), &emb(&tb, 1)), ""),
        Check::new("rtt(u,v):T̄ T", rmatrix::rtt_holds(&r, &emb(&tb, 0), &emb(&t, 1)), ""),
    ]
}

/// Every relation check for `L(λ)`.
pub fn verify_relations<F: Scalar>(rep: &GtRep<F>) -> Vec<Check> {
    let mut out = verify_sl_relations(rep);
    out.extend(verify_gl_relations(&rep.gens, &rep.q));
    out.extend(verify_rtt_constant(&rep.gens, &rep.q));
    out
}

/// Whether every alternative choice of middle index gives the same `t_ij`, `t̄_ij`.
pub fn middle_index_independent<F: Scalar>(rep: &GtRep<F>) -> Result<bool> {
    let n = rep.n();
    // for t_ij choose the largest admissible k = i - 1, for t̄_ij likewise k = j - 1
    let alt = derive_full_generators(rep, |i, _| i - 1, |_, j| j - 1)?;
    if alt != rep.gens {
        return Ok(false);
    }
    // every single alternative for each (i, j)
    for i in 0..n {
        for j in 0..i {
            for k in j + 1..i {
                let c = rep.gens.t[i][k].mul(&rep.gens.t[k][j]).sub(&rep.gens.t[k][j].mul(&rep.gens.t[i][k]));
                let v = rep.gens.tbar[k][k].mul(&c).scale(&rep.q.q_diff().inv()?);
                if v != rep.gens.t[i][j] {
                    return Ok(false);
                }
                let (a, b) = (j, i);
                let c = rep.gens.tbar[k][b]
                    .mul(&rep.gens.tbar[a][k])
                    .sub(&rep.gens.tbar[a][k].mul(&rep.gens.tbar[k][b]));
                let v = rep.gens.t[k][k].mul(&c).scale(&rep.q.q_diff().inv()?);
                if v != rep.gens.tbar[a][b] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

impl<F: Scalar> GtRep<F> {
    /// Replace the generator matrices, for mutation tests.
    pub fn with_generators(&self, gens: GeneratorSet<F>) -> Self {
        GtRep { gens, ..self.clone() }
    }

    /// Serialize generator matrices as canonical strings.
    pub fn to_json(&self) -> serde_json::Value {
        let mat = |m: &Matrix<F>| -> Vec<Vec<String>> {
            (0..m.rows()).map(|i| (0..m.cols()).map(|j| m.get(i, j).to_string()).collect()).collect()
        };
        let n = self.n();
        let mut gens = serde_json::Map::new();
        for i in 0..n {
            for j in 0..=i {
                gens.insert(format!("t_{}{}", i + 1, j + 1), serde_json::json!(mat(&self.gens.t[i][j])));
            }
        }
        for i in 0..n {
            for j in i..n {
                gens.insert(format!("tbar_{}{}", i + 1, j + 1), serde_json::json!(mat(&self.gens.tbar[i][j])));
            }
        }
        serde_json::json!({
            "lambda": self.lambda,
            "dim": self.dim(),
            "qmode": self.q.label(),
            "basis": self.basis.iter().map(Pattern::to_json).collect::<Vec<_>>(),
            "generators": gens,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{RatFuncQ, Rational, Ring};

    #[test]
    fn two_dim_module() {
        let q = QParam::symbolic();
        let rep = build_rep(&[1, 0], &q).unwrap();
        assert_eq!(rep.dim(), 2);
        // basis: Λ_1 = (0), (1); e_1 ξ_(0) = ξ_(1), f_1 ξ_(1) = ξ_(0)
        assert_eq!(rep.e(0).get(1, 0), &RatFuncQ::one());
        assert_eq!(rep.f(0).get(0, 1), &RatFuncQ::one());
        assert_eq!(rep.t(0, 0).get(1, 1), &RatFuncQ::q());
        assert_eq!(rep.t(1, 1).get(1, 1), &RatFuncQ::one());
        assert!(verify_relations(&rep).iter().all(|c| c.passed()));
    }

    #[test]
    fn gl3_adjoint_like() {
        let q = QParam::rational(&Rational::new(5.into(), 2.into())).unwrap();
        let rep = build_rep(&[2, 1, 0], &q).unwrap();
        assert_eq!(rep.dim(), 8);
        let checks = verify_relations(&rep);
        for c in &checks {
            assert!(c.passed(), "{c:?}");
        }
        assert!(middle_index_independent(&rep).unwrap());
    }
}
