//! Skew representations `L(λ)^+_μ` of the quantum affine algebra.
//!
//! `L(λ)^+_μ` is the space of `U_q(gl_m)`-singular vectors of weight `μ` inside
//! the `U_q(gl_{m+n})`-module `L(λ)`. The algebra acts through
//! `t_ij(u) -> t^{1..m}(u)^{-1} t^{1..m, m+i}_{1..m, m+j}(u)` composed with the
//! evaluation map. The first factor is a scalar on the subspace, so operators are
//! stored as numerators together with that scalar.

use std::collections::{BTreeMap, VecDeque};

use serde_json::{json, Value};

use crate::combinatorics::{
    content, enumerate_ssyt, enumerate_trapezium, is_admissible, lambda0, middle3, pattern_to_ssyt, ExtInt,
    Pattern, SkewDiagram,
};
use crate::error::{Error, Result};
use crate::gtrep::{self, build_rep, GtRep, Which};
use crate::linalg::Matrix;
use crate::poly::{Laurent, OperatorPoly};
use crate::qminor::{self, Expansion, Minors};
use crate::report::Check;
use crate::rmatrix::{self, OpMatrix};
use crate::scalar::{QParam, RatFuncU, Scalar, UPoly};

/// Restriction of operators to a subspace given by a basis matrix `S`.
#[derive(Clone, Debug)]
struct Restrictor<F> {
    s: Matrix<F>,
    pivots: Vec<usize>,
    piv_inv: Matrix<F>,
}

impl<F: Scalar> Restrictor<F> {
    fn new(s: Matrix<F>) -> Result<Self> {
        let ech = s.transpose().rref();
        let pivots = ech.pivots.clone();
        if pivots.len() != s.cols() {
            return Err(Error::Inconsistent("subspace basis is not independent".into()));
        }
        let piv_inv = s.select_rows(&pivots).inverse()?;
        Ok(Restrictor { s, pivots, piv_inv })
    }

    /// `Y` with `X S = S Y`, given `X S`; fails if the subspace is not preserved.
    fn restrict(&self, xs: &Matrix<F>) -> Result<Matrix<F>> {
        let y = self.piv_inv.mul(&xs.select_rows(&self.pivots));
        if self.s.mul(&y) != *xs {
            return Err(Error::Inconsistent("operator does not preserve the subspace".into()));
        }
        Ok(y)
    }

    fn restrict_poly(&self, xs: &OperatorPoly<F>) -> Result<OperatorPoly<F>> {
        let mut out = OperatorPoly::zero(self.s.cols(), self.s.cols());
        for (e, m) in xs.terms() {
            out.add_assign(&OperatorPoly::monomial(self.restrict(m)?, *e));
        }
        Ok(out)
    }
}

/// `L(λ)^+_μ` with its labelled eigenbasis.
#[derive(Clone, Debug)]
pub struct SkewModule<F> {
    lambda: Vec<i64>,
    mu: Vec<i64>,
    n: usize,
    q: QParam<F>,
    ambient: GtRep<F>,
    /// Trapezium patterns in enumeration order.
    labels: Vec<Pattern>,
    restrictor: Option<Restrictor<F>>,
    /// Columns: the eigenvector labelled by `labels[c]`, in subspace coordinates.
    eigen: Matrix<F>,
    /// Scalars by which `t^{1..m}(u)` and `t̄^{1..m}(u)` act.
    denom: RatFuncU<F>,
    denom_bar: RatFuncU<F>,
}

fn linear_factor<F: Scalar>(q: &QParam<F>, a: i64, b: i64, which: Which) -> RatFuncU<F> {
    // T: q^a - q^b u^{-1};  T̄: q^a - q^b u
    let e = match which {
        Which::T => -1,
        Which::TBar => 1,
    };
    Laurent::from_pairs([(0, q.pow(a)), (e, -q.pow(b))]).to_ratfunc()
}

/// `∏_{i=1}^{k} (q^{x_i} - q^{-x_i + 2i - 2} u^{-1})`, the value of `t^{1..k}(u)` on a vector
/// whose row `k` is `x`; with `TBar` the mirrored product `∏ (q^{-x_i} - q^{x_i - 2i + 2} u)`.
pub fn row_product<F: Scalar>(q: &QParam<F>, x: &[i64], which: Which) -> RatFuncU<F> {
    let mut out = RatFuncU::one();
    for (i, &xi) in x.iter().enumerate() {
        let s = 2 * i as i64;
        let f = match which {
            Which::T => linear_factor(q, xi, -xi + s, which),
            Which::TBar => linear_factor(q, -xi, xi - s, which),
        };
        out = out.mul(&f);
    }
    out
}

fn ratfunc_of_entry<F: Scalar>(p: &OperatorPoly<F>) -> Option<RatFuncU<F>> {
    p.as_scalar().map(|l| l.to_ratfunc())
}

/// Build `L(λ)^+_μ` inside `L(λ)` over `gl_{m+n}`, `m = len(μ)`.
///
/// Inadmissible pairs give the zero module.
pub fn build_skew_module<F: Scalar>(lambda: &[i64], mu: &[i64], q: &QParam<F>) -> Result<SkewModule<F>> {
    let m = mu.len();
    if lambda.len() <= m {
        return Err(Error::Invalid(format!("need len(lambda) > len(mu), got {} and {m}", lambda.len())));
    }
    let n = lambda.len() - m;
    let labels = enumerate_trapezium(lambda, mu, n)?;
    let ambient = build_rep(lambda, q)?;
    let empty = SkewModule {
        lambda: lambda.to_vec(),
        mu: mu.to_vec(),
        n,
        q: q.clone(),
        ambient: ambient.clone(),
        labels: vec![],
        restrictor: None,
        eigen: Matrix::zeros(0, 0),
        denom: RatFuncU::one(),
        denom_bar: RatFuncU::one(),
    };
    if !is_admissible(lambda, mu, n) {
        return Ok(empty);
    }
    let dim = ambient.dim();
    let g = ambient.generators();

    // weight μ on the first m coordinates: t_ii diagonal in the GT basis
    let coords: Vec<usize> = (0..dim)
        .filter(|&b| (0..m).all(|i| *g.t[i][i].get(b, b) == q.pow(mu[i])))
        .collect();
    // singular: t̄_ij = 0 for i < j <= m
    let mut conds = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            conds.push(g.tbar[i][j].select_cols(&coords));
        }
    }
    let local = if conds.is_empty() {
        Matrix::identity(coords.len())
    } else {
        Matrix::vstack(&conds).nullspace()
    };
    let mut s = Matrix::zeros(dim, local.cols());
    for (r, &c) in coords.iter().enumerate() {
        for k in 0..local.cols() {
            s.set(c, k, local.get(r, k).clone());
        }
    }
    if s.cols() != labels.len() {
        return Err(Error::Inconsistent(format!(
            "singular subspace has dimension {} but there are {} trapezium patterns",
            s.cols(),
            labels.len()
        )));
    }
    let restrictor = Restrictor::new(s)?;

    let t = gtrep::evaluation_series(g, Which::T, false).entries;
    let tb = gtrep::evaluation_series(g, Which::TBar, false).entries;
    let head: Vec<usize> = (0..m).collect();
    let mx = Minors::standard(&t, q);
    let mxb = Minors::standard(&tb, q);
    let d = restrictor.restrict_poly(&mx.apply(&head, &head, &restrictor.s, Expansion::Row))?;
    let db = restrictor.restrict_poly(&mxb.apply(&head, &head, &restrictor.s, Expansion::Row))?;
    let denom = ratfunc_of_entry(&d).ok_or_else(|| Error::Inconsistent("t^{1..m}(u) is not scalar".into()))?;
    let denom_bar = ratfunc_of_entry(&db).ok_or_else(|| Error::Inconsistent("t̄^{1..m}(u) is not scalar".into()))?;

    // joint eigenspaces of t^{1..m+k}(u), k = 1..n, with the predicted eigenvalues
    let sdim = labels.len();
    let mut principal = Vec::new();
    for k in 1..=n {
        let idx: Vec<usize> = (0..m + k).collect();
        principal.push(restrictor.restrict_poly(&mx.apply(&idx, &idx, &restrictor.s, Expansion::Row))?);
    }
    let mut eigen = Matrix::zeros(sdim, sdim);
    for (c, lab) in labels.iter().enumerate() {
        let mut eqs = Vec::new();
        for k in 1..=n {
            let pred = row_product(q, lab.row(m + k), Which::T);
            let pl = laurent_of(&pred)?;
            let shifted = principal[k - 1].sub(&OperatorPoly::identity(sdim).scale_laurent(&pl));
            for (_, mat) in shifted.terms() {
                eqs.push(mat.clone());
            }
        }
        let ns = if eqs.is_empty() { Matrix::identity(sdim) } else { Matrix::vstack(&eqs).nullspace() };
        if ns.cols() != 1 {
            return Err(Error::Inconsistent(format!(
                "eigenspace for {:?} has dimension {}",
                lab.rows_top_first(),
                ns.cols()
            )));
        }
        for r in 0..sdim {
            eigen.set(r, c, ns.get(r, 0).clone());
        }
    }
    if eigen.rank() != sdim {
        return Err(Error::Inconsistent("labelled eigenvectors are dependent".into()));
    }
    Ok(SkewModule { labels, restrictor: Some(restrictor), eigen, denom, denom_bar, ..empty })
}

/// A Laurent polynomial in `u` from a rational function whose denominator is a power of `u`.
fn laurent_of<F: Scalar>(f: &RatFuncU<F>) -> Result<Laurent<F, 1>> {
    let den = f.denominator();
    let k = den.degree().unwrap_or(0);
    if *den != UPoly::monomial(F::one(), k) {
        return Err(Error::Inconsistent("not a Laurent polynomial".into()));
    }
    Ok(Laurent::from_pairs(
        f.numerator().coeffs().iter().enumerate().map(|(i, c)| (i as i64 - k as i64, c.clone())),
    ))
}

/// Highest weight data of a skew module.
#[derive(Clone, Debug, PartialEq)]
pub struct HighestWeight<F> {
    pub nu: Vec<RatFuncU<F>>,
    pub nubar: Vec<RatFuncU<F>>,
    /// `ν_k^{(i)}`, `k = 1..n`, `i = 1..m+1`.
    pub exponents: Vec<Vec<i64>>,
}

/// `ν_k^{(i)} = middle{μ_{i-1}, μ_i, λ_{k+i-1}}` with `μ_0 = +∞`, `μ_{m+1} = -∞`.
pub fn nu_exponents(lambda: &[i64], mu: &[i64]) -> Result<Vec<Vec<i64>>> {
    let m = mu.len();
    let n = lambda.len() - m;
    let mu_ext = |j: usize| -> ExtInt {
        if j == 0 {
            ExtInt::PosInf
        } else if j > m {
            ExtInt::NegInf
        } else {
            ExtInt::Fin(mu[j - 1])
        }
    };
    (1..=n)
        .map(|k| {
            (1..=m + 1)
                .map(|i| {
                    middle3(mu_ext(i - 1), mu_ext(i), ExtInt::Fin(lambda[k + i - 2]))
                        .finite()
                        .ok_or_else(|| Error::Inconsistent("infinite exponent".into()))
                })
                .collect()
        })
        .collect()
}

/// The closed formulas for `ν_k(u)` and `ν̄_k(u)`.
pub fn highest_weight_formula<F: Scalar>(lambda: &[i64], mu: &[i64], q: &QParam<F>) -> Result<HighestWeight<F>> {
    let ex = nu_exponents(lambda, mu)?;
    let den = row_product(q, mu, Which::T);
    let den_bar = row_product(q, mu, Which::TBar);
    let mut nu = Vec::new();
    let mut nubar = Vec::new();
    for e in &ex {
        nu.push(row_product(q, e, Which::T).div(&den)?);
        nubar.push(row_product(q, e, Which::TBar).div(&den_bar)?);
    }
    Ok(HighestWeight { nu, nubar, exponents: ex })
}

impl<F: Scalar> SkewModule<F> {
    pub fn lambda(&self) -> &[i64] {
        &self.lambda
    }

    pub fn mu(&self) -> &[i64] {
        &self.mu
    }

    pub fn m(&self) -> usize {
        self.mu.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn q(&self) -> &QParam<F> {
        &self.q
    }

    pub fn ambient(&self) -> &GtRep<F> {
        &self.ambient
    }

    pub fn labels(&self) -> &[Pattern] {
        &self.labels
    }

    /// Scalar action of `t^{1..m}(u)` on the subspace.
    pub fn denominator(&self, which: Which) -> &RatFuncU<F> {
        match which {
            Which::T => &self.denom,
            Which::TBar => &self.denom_bar,
        }
    }

    fn restrictor(&self) -> Result<&Restrictor<F>> {
        self.restrictor.as_ref().ok_or_else(|| Error::Invalid("the module is zero".into()))
    }

    fn series(&self, which: Which) -> OpMatrix<F, 1> {
        gtrep::evaluation_series(self.ambient.generators(), which, false).entries
    }

    /// Restriction of the ambient minor `t^{rows}_{cols}(u)` (or `t̄`) to the subspace,
    /// in subspace coordinates.
    pub fn restricted_minor(&self, which: Which, rows: &[usize], cols: &[usize]) -> Result<OperatorPoly<F>> {
        let r = self.restrictor()?;
        let t = self.series(which);
        let mx = Minors::standard(&t, &self.q);
        r.restrict_poly(&mx.apply(rows, cols, &r.s, Expansion::Row))
    }

    /// Numerators of the images of `t_ij(u)` (or `t̄_ij(u)`): the restricted
    /// minors `t^{1..m, m+i}_{1..m, m+j}(u)`.
    pub fn numerator_matrix(&self, which: Which) -> Result<OpMatrix<F, 1>> {
        let m = self.m();
        let head: Vec<usize> = (0..m).collect();
        let mut out = Vec::new();
        for i in 0..self.n {
            let mut row = Vec::new();
            for j in 0..self.n {
                let r: Vec<usize> = head.iter().copied().chain([m + i]).collect();
                let c: Vec<usize> = head.iter().copied().chain([m + j]).collect();
                row.push(self.restricted_minor(which, &r, &c)?);
            }
            out.push(row);
        }
        Ok(out)
    }

    /// Eigenvector labelled `c`, in subspace coordinates.
    pub fn eigenvector(&self, c: usize) -> Matrix<F> {
        self.eigen.select_cols(&[c])
    }

    /// Eigenvector as a vector of the ambient module.
    pub fn ambient_vector(&self, c: usize) -> Result<Matrix<F>> {
        Ok(self.restrictor()?.s.mul(&self.eigenvector(c)))
    }

    pub fn label_index(&self, p: &Pattern) -> Option<usize> {
        self.labels.iter().position(|x| x == p)
    }
}

/// Trigonometric RTT relations for the restricted action (numerators; the
/// scalar denominators cancel from both sides).
pub fn restricted_rtt<F: Scalar>(sm: &SkewModule<F>) -> Result<Vec<Check>> {
    let y = sm.numerator_matrix(Which::T)?;
    let yb = sm.numerator_matrix(Which::TBar)?;
    let r = rmatrix::trig_r_poly(sm.n(), sm.q());
    let emb = |x: &OpMatrix<F, 1>, var: usize| -> OpMatrix<F, 2> {
        x.iter().map(|row| row.iter().map(|p| p.embed::<2>(var)).collect()).collect()
    };
    Ok(vec![
        Check::new("skew:rtt T T", rmatrix::rtt_holds(&r, &emb(&y, 0), &emb(&y, 1)), ""),
        Check::new("skew:rtt T̄ T̄", rmatrix::rtt_holds(&r, &emb(&yb, 0), &emb(&yb, 1)), ""),
        Check::new("skew:rtt T̄ T", rmatrix::rtt_holds(&r, &emb(&yb, 0), &emb(&y, 1)), ""),
    ])
}

/// Highest weight from the operators: `ν_k(u)`, `ν̄_k(u)` are the eigenvalues of
/// the images of `t_kk(u)`, `t̄_kk(u)` on the vector labelled `Λ⁰`, which must also
/// be annihilated by the images of `t_ij(u)`, `t̄_ij(u)` for `i < j`.
pub fn highest_weight_from_action<F: Scalar>(sm: &SkewModule<F>) -> Result<HighestWeight<F>> {
    let l0 = lambda0(sm.lambda(), sm.mu(), sm.n())?;
    let c = sm.label_index(&l0).ok_or_else(|| Error::Inconsistent("Λ⁰ is not a label".into()))?;
    let v = sm.eigenvector(c);
    let mut nu = Vec::new();
    let mut nubar = Vec::new();
    for (which, out) in [(Which::T, &mut nu), (Which::TBar, &mut nubar)] {
        let y = sm.numerator_matrix(which)?;
        for i in 0..sm.n() {
            for j in i + 1..sm.n() {
                if !y[i][j].mul_matrix(&v).is_zero() {
                    return Err(Error::Inconsistent(format!("Λ⁰ vector not annihilated by entry ({}, {})", i + 1, j + 1)));
                }
            }
            let ev = y[i][i]
                .eigenvalue_on(&v)
                .ok_or_else(|| Error::Inconsistent("Λ⁰ vector is not an eigenvector".into()))?;
            out.push(ev.to_ratfunc().div(sm.denominator(which))?);
        }
    }
    Ok(HighestWeight { nu, nubar, exponents: nu_exponents(sm.lambda(), sm.mu())? })
}

/// Drinfeld polynomials computed by the three routes.
#[derive(Clone, Debug, PartialEq)]
pub struct Drinfeld<F> {
    /// From the ratio `ν_k / ν_{k+1}`.
    pub ratio: Vec<UPoly<F>>,
    /// From the exponents `ν_k^{(i)}`.
    pub exponents: Vec<UPoly<F>>,
    /// From column contents; `None` for negative entries.
    pub contents: Option<Vec<UPoly<F>>>,
}

/// `P(u)` with `P(0) = 1` and `ρ(u) = q^{-deg P} P(q^2 u) / P(u)`.
pub fn solve_drinfeld_ratio<F: Scalar>(rho: &RatFuncU<F>, q: &QParam<F>) -> Result<UPoly<F>> {
    let fail = || Error::Inconsistent(format!("no Drinfeld polynomial for ratio {rho}"));
    let c_num = rho.numerator().coeff(0);
    let c_den = rho.denominator().coeff(0);
    if c_num.is_zero() || c_den.is_zero() {
        return Err(fail());
    }
    let kappa = c_num.try_div(&c_den)?;
    let mut a = rho.numerator().scale(&c_num.inv()?);
    let mut b = rho.denominator().scale(&c_den.inv()?);
    let q2 = q.pow(2);
    let mut p = UPoly::one();
    let bound = a.degree().unwrap_or(0) + b.degree().unwrap_or(0) + 2;
    for _ in 0..bound * bound + 2 {
        if b.degree() == Some(0) {
            break;
        }
        // P = B P' reduces P(q^2u)/P(u) = A/B to P'(q^2u)/P'(u) = A / B(q^2 u)
        p = p.mul(&b);
        let r = RatFuncU::new(a.clone(), b.scale_arg(&q2))?;
        let (rn, rd) = (r.numerator(), r.denominator());
        let (n0, d0) = (rn.coeff(0), rd.coeff(0));
        if n0.is_zero() || d0.is_zero() {
            return Err(fail());
        }
        a = rn.scale(&n0.inv()?);
        b = rd.scale(&d0.inv()?);
    }
    if b.degree() != Some(0) || a.degree() != Some(0) {
        return Err(fail());
    }
    let deg = p.degree().unwrap_or(0) as i64;
    if kappa != q.pow(-deg) {
        return Err(fail());
    }
    Ok(p)
}

/// `q^{-deg P} P(q^2 u) / P(u)`.
pub fn drinfeld_ratio<F: Scalar>(p: &UPoly<F>, q: &QParam<F>) -> Result<RatFuncU<F>> {
    let deg = p.degree().unwrap_or(0) as i64;
    RatFuncU::new(p.scale_arg(&q.pow(2)).scale(&q.pow(-deg)), p.clone())
}

fn one_minus<F: Scalar>(c: F) -> UPoly<F> {
    UPoly::linear(F::one(), -c)
}

/// Route R2: `∏_{i=1}^{m+1} ∏_{s=ν_{k+1}^{(i)}}^{ν_k^{(i)}-1} (1 - q^{2s-2i+2} u)`.
pub fn drinfeld_from_exponents<F: Scalar>(ex: &[Vec<i64>], q: &QParam<F>) -> Vec<UPoly<F>> {
    (0..ex.len().saturating_sub(1))
        .map(|k| {
            let mut p = UPoly::one();
            for (i0, (&hi, &lo)) in ex[k].iter().zip(&ex[k + 1]).enumerate() {
                let i = i0 as i64 + 1;
                for s in lo..hi {
                    p = p.mul(&one_minus(q.pow(2 * s - 2 * i + 2)));
                }
            }
            p
        })
        .collect()
}

/// Route R3: `∏ (1 - q^{2c(α)} u)` over the top boxes of the columns of height `k`.
pub fn drinfeld_from_contents<F: Scalar>(lambda: &[i64], mu: &[i64], n: usize, q: &QParam<F>) -> Result<Vec<UPoly<F>>> {
    let d = SkewDiagram::new(lambda, mu)?;
    let cols = d.columns();
    Ok((1..n)
        .map(|k| {
            let mut p = UPoly::one();
            for &(top, h) in &cols {
                if h == k {
                    p = p.mul(&one_minus(q.pow(2 * content(top))));
                }
            }
            p
        })
        .collect())
}

/// Drinfeld polynomials of the evaluation module `L(λ)`:
/// `P_k = (1 - q^{2λ_{k+1}} u) ... (1 - q^{2λ_k - 2} u)`.
pub fn drinfeld_evaluation_module<F: Scalar>(lambda: &[i64], q: &QParam<F>) -> Vec<UPoly<F>> {
    (0..lambda.len().saturating_sub(1))
        .map(|k| {
            let mut p = UPoly::one();
            for s in lambda[k + 1]..lambda[k] {
                p = p.mul(&one_minus(q.pow(2 * s)));
            }
            p
        })
        .collect()
}

fn nonnegative(lambda: &[i64], mu: &[i64]) -> bool {
    lambda.iter().chain(mu).all(|&x| x >= 0)
}

/// All three routes from a highest weight.
pub fn drinfeld_polynomials<F: Scalar>(
    lambda: &[i64],
    mu: &[i64],
    hw: &HighestWeight<F>,
    q: &QParam<F>,
) -> Result<Drinfeld<F>> {
    let n = hw.nu.len();
    let mut ratio = Vec::new();
    for k in 0..n.saturating_sub(1) {
        let rho = hw.nu[k].div(&hw.nu[k + 1])?;
        ratio.push(solve_drinfeld_ratio(&rho, q)?);
    }
    let exponents = drinfeld_from_exponents(&hw.exponents, q);
    let contents = if nonnegative(lambda, mu) { Some(drinfeld_from_contents(lambda, mu, n, q)?) } else { None };
    Ok(Drinfeld { ratio, exponents, contents })
}

/// Character tuple per label: `h_i(u)` eigenvalues in the normalized evaluation.
pub fn character_from_h<F: Scalar>(sm: &SkewModule<F>) -> Result<Vec<Vec<RatFuncU<F>>>> {
    let q = sm.q();
    let m = sm.m();
    let norm_m = qminor::normalization(Which::T, m, q);
    let den = sm.denominator(Which::T).mul(&norm_m);
    let mut ops = Vec::new();
    for k in 1..=sm.n() {
        let idx: Vec<usize> = (0..m + k).collect();
        ops.push(sm.restricted_minor(Which::T, &idx, &idx)?);
    }
    let mut out = Vec::new();
    for c in 0..sm.dim() {
        let v = sm.eigenvector(c);
        let mut principal = Vec::new();
        for (k, op) in ops.iter().enumerate() {
            let ev = op
                .eigenvalue_on(&v)
                .ok_or_else(|| Error::Inconsistent("labelled vector is not a principal eigenvector".into()))?;
            let val = ev.to_ratfunc().mul(&qminor::normalization(Which::T, m + k + 1, q)).div(&den)?;
            principal.push(val);
        }
        out.push(qminor::h_from_principal(&principal, q, false)?);
    }
    Ok(out)
}

/// `x_{i,a}(u) = (q^{a+i} - q^{-a-i} u^{-1}) / (q^{a+i-1} - q^{-a-i+1} u^{-1})`.
pub fn x_element<F: Scalar>(i: usize, a: i64, q: &QParam<F>) -> RatFuncU<F> {
    let s = a + i as i64;
    linear_factor(q, s, -s, Which::T).div(&linear_factor(q, s - 1, -s + 1, Which::T)).expect("nonzero")
}

/// Character tuples from semistandard tableaux, one per tableau, in enumeration order.
pub fn character_from_tableaux<F: Scalar>(lambda: &[i64], mu: &[i64], n: usize, q: &QParam<F>) -> Result<Vec<Vec<RatFuncU<F>>>> {
    let d = SkewDiagram::new(lambda, mu)?;
    Ok(enumerate_ssyt(&d, n)
        .iter()
        .map(|t| tableau_tuple(t.entries(), n, q))
        .collect())
}

fn tableau_tuple<F: Scalar>(entries: &BTreeMap<(usize, usize), usize>, n: usize, q: &QParam<F>) -> Vec<RatFuncU<F>> {
    let mut tuple = vec![RatFuncU::one(); n];
    for (&bx, &v) in entries {
        tuple[v - 1] = tuple[v - 1].mul(&x_element(v, content(bx), q));
    }
    tuple
}

/// A character as sorted `(tuple, multiplicity)` pairs of display strings.
pub fn character_multiset<F: Scalar>(tuples: &[Vec<RatFuncU<F>>]) -> Vec<(Vec<String>, usize)> {
    let mut counts: BTreeMap<Vec<String>, usize> = BTreeMap::new();
    for t in tuples {
        *counts.entry(t.iter().map(|f| f.to_string()).collect()).or_default() += 1;
    }
    counts.into_iter().collect()
}

pub fn character_json(multiset: &[(Vec<String>, usize)]) -> Value {
    json!(multiset
        .iter()
        .map(|(t, k)| json!({"multiplicity": k, "tuple": t}))
        .collect::<Vec<_>>())
}

/// Result of the irreducibility certificate.
#[derive(Clone, Debug)]
pub struct Irreducibility {
    pub edges: Vec<(usize, usize)>,
    pub strongly_connected: bool,
    /// Pairs whose coefficient products disagree with the closed forms.
    pub product_failures: Vec<String>,
    /// Raising/lowering images that are not multiples of a single basis vector.
    pub shape_failures: Vec<String>,
}

impl Irreducibility {
    pub fn passed(&self) -> bool {
        self.strongly_connected && self.product_failures.is_empty() && self.shape_failures.is_empty()
    }
}

/// Raising and lowering minors at the special points, the transition graph on
/// labels, and the normalization-free coefficient products.
pub fn irreducibility_certificate<F: Scalar>(sm: &SkewModule<F>) -> Result<Irreducibility> {
    let s = sm.dim();
    let mut cert = Irreducibility {
        edges: vec![],
        strongly_connected: true,
        product_failures: vec![],
        shape_failures: vec![],
    };
    if s <= 1 {
        return Ok(cert);
    }
    let q = sm.q();
    let m = sm.m();
    let n = sm.n();
    let r = sm.restrictor()?;
    let big_t = gtrep::capital_t_series(sm.ambient().generators(), q);
    let mx = Minors::new(&big_t, q, q.q_inv());
    let z_inv = sm.eigen.inverse()?;
    // coefficient of ζ_target in op(u0) ζ_source
    let coeff = |op: &OperatorPoly<F>, u0: &F, src: usize| -> Result<(Vec<F>, usize)> {
        let y = r.restrict(&op.eval(u0))?;
        let col = z_inv.mul(&y).mul(&sm.eigenvector(src));
        Ok(((0..s).map(|i| col.get(i, 0).clone()).collect(), src))
    };
    let mut raise = BTreeMap::new();
    let mut lower = BTreeMap::new();
    for k in 1..n {
        let p = m + k;
        let rows_r: Vec<usize> = (0..p).collect();
        let cols_r: Vec<usize> = (0..p - 1).chain([p]).collect();
        let up = mx.apply(&rows_r, &cols_r, &r.s, Expansion::Row);
        let down = mx.apply(&cols_r, &rows_r, &r.s, Expansion::Row);
        for (src, lab) in sm.labels().iter().enumerate() {
            for i in 1..=p {
                let u0 = q.pow(-lab.l(p, i));
                for (op, delta, store) in [(&up, 1, &mut raise), (&down, -1, &mut lower)] {
                    let (col, _) = coeff(op, &u0, src)?;
                    let target = lab.shifted(p, i, delta).and_then(|t| sm.label_index(&t));
                    let nonzero: Vec<usize> = (0..s).filter(|&t| !col[t].is_zero()).collect();
                    match target {
                        Some(t) => {
                            if nonzero != vec![t] {
                                cert.shape_failures.push(format!(
                                    "{:?} row {p} entry {i} shift {delta}: support {nonzero:?}",
                                    lab.rows_top_first()
                                ));
                            } else {
                                cert.edges.push((src, t));
                                store.insert((src, p, i), (t, col[t].clone()));
                            }
                        }
                        None => {
                            if !nonzero.is_empty() {
                                cert.shape_failures.push(format!(
                                    "{:?} row {p} entry {i} shift {delta}: nonzero image off the pattern set",
                                    lab.rows_top_first()
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    cert.edges.sort();
    cert.edges.dedup();
    cert.strongly_connected = strongly_connected(s, &cert.edges);

    // (Λ -> Λ+δ) (Λ+δ -> Λ) against raising_coefficient * lowering_coefficient
    for (&(src, p, i), (t, c_up)) in &raise {
        let Some((back, c_down)) = lower.get(&(*t, p, i)) else {
            cert.product_failures.push(format!("missing lowering edge back from label {t}"));
            continue;
        };
        if *back != src {
            cert.product_failures.push(format!("lowering from {t} does not return to {src}"));
            continue;
        }
        let lab = &sm.labels()[src];
        let expect_up = raising_coefficient(lab, p, i, q);
        let expect_down = lowering_coefficient(&sm.labels()[*t], p, i, q);
        if c_up.clone() * c_down != expect_up.clone() * &expect_down {
            cert.product_failures.push(format!("product mismatch at {:?}, row {p}, entry {i}", lab.rows_top_first()));
        }
    }
    Ok(cert)
}

/// `T^{1..k}_{1..k-1,k+1}(q^{-l_kj}) ξ_Λ = c ξ_{Λ+δ_kj}`: the coefficient `c`.
pub fn raising_coefficient<F: Scalar>(p: &Pattern, k: usize, j: usize, q: &QParam<F>) -> F {
    let l = p.l(k, j);
    let mut c = -F::one();
    for i in 1..=k + 1 {
        c = c * &q.qint(p.l(k + 1, i) - l);
    }
    c
}

/// `T^{1..k-1,k+1}_{1..k}(q^{-l_kj}) ξ_Λ = c ξ_{Λ-δ_kj}`: the coefficient `c`.
///
/// Carries a factor `q^{-1}` in front of the product of q-integers; already
/// for `gl_2`, `T_21(u) = u t_21 / (q - q^{-1})` sends `ξ_(1)` to `q^{-1} ξ_(0)` at `u = q^{-1}`.
pub fn lowering_coefficient<F: Scalar>(p: &Pattern, k: usize, j: usize, q: &QParam<F>) -> F {
    let l = p.l(k, j);
    let mut c = q.q_inv().clone();
    for i in 1..k {
        c = c * &q.qint(p.l(k - 1, i) - l);
    }
    c
}

/// Diagonal, raising and lowering minors of `T(u)` on the Gelfand-Tsetlin basis of `L(λ)`.
pub fn gt_minor_action_checks<F: Scalar>(rep: &GtRep<F>) -> Vec<Check> {
    let q = rep.q();
    let n = rep.n();
    let dim = rep.dim();
    let big_t = gtrep::capital_t_series(rep.generators(), q);
    let mx = Minors::new(&big_t, q, q.q_inv());
    let id = Matrix::identity(dim);
    let mut diag_ok = true;
    let mut up_ok = true;
    let mut down_ok = true;
    let unit = |b: usize| Matrix::from_fn(dim, 1, |r, _| if r == b { F::one() } else { F::zero() });
    let qd = q.q_diff().inv().expect("q is not ±1");
    for k in 1..=n {
        let idx: Vec<usize> = (0..k).collect();
        let d = mx.apply(&idx, &idx, &id, Expansion::Row);
        for (b, p) in rep.basis().iter().enumerate() {
            // ∏ (u q^{l_ki} - u^{-1} q^{-l_ki}) / (q - q^{-1})
            let mut expect = Laurent::<F, 1>::constant(F::one());
            for i in 1..=k {
                let l = p.l(k, i);
                expect = expect * Laurent::from_pairs([(1, q.pow(l) * &qd), (-1, -q.pow(-l) * &qd)]);
            }
            diag_ok &= d.eigenvalue_on(&unit(b)) == Some(expect);
        }
        if k == n {
            continue;
        }
        let rows: Vec<usize> = (0..k).collect();
        let cols: Vec<usize> = (0..k - 1).chain([k]).collect();
        let up = mx.apply(&rows, &cols, &id, Expansion::Row);
        let down = mx.apply(&cols, &rows, &id, Expansion::Row);
        for (b, p) in rep.basis().iter().enumerate() {
            for j in 1..=k {
                let u0 = q.pow(-p.l(k, j));
                let shifted = |delta: i64| -> Matrix<F> {
                    match p.shifted(k, j, delta).and_then(|t| rep.index_of(&t)) {
                        Some(t) => unit(t),
                        None => Matrix::zeros(dim, 1),
                    }
                };
                let got_up = up.eval(&u0).mul(&unit(b));
                up_ok &= got_up == shifted(1).scale(&raising_coefficient(p, k, j, q));
                let got_down = down.eval(&u0).mul(&unit(b));
                down_ok &= got_down == shifted(-1).scale(&lowering_coefficient(p, k, j, q));
            }
        }
    }
    vec![
        Check::new("gt-minors:diagonal", diag_ok, ""),
        Check::new("gt-minors:raising", up_ok, ""),
        Check::new("gt-minors:lowering", down_ok, ""),
    ]
}

fn strongly_connected(s: usize, edges: &[(usize, usize)]) -> bool {
    let reach = |forward: bool| -> usize {
        let mut seen = vec![false; s];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            for &(a, b) in edges {
                let (x, y) = if forward { (a, b) } else { (b, a) };
                if x == v && !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen.iter().filter(|&&x| x).count()
    };
    s == 0 || (reach(true) == s && reach(false) == s)
}

/// Every check on one skew module.
pub fn skew_checks<F: Scalar>(sm: &SkewModule<F>, tag: &str) -> Vec<Check> {
    let mut out = Vec::new();
    let name = |s: &str| if tag.is_empty() { format!("skew:{s}") } else { format!("skew:{tag}:{s}") };
    let count = enumerate_trapezium(sm.lambda(), sm.mu(), sm.n()).map(|v| v.len()).unwrap_or(0);
    out.push(Check::new(name("dim"), sm.dim() == count, format!("dim {}", sm.dim())));
    if sm.dim() == 0 {
        return out;
    }
    let q = sm.q();
    let m = sm.m();
    out.push(Check::new(
        name("denominator scalar"),
        *sm.denominator(Which::T) == row_product(q, sm.mu(), Which::T)
            && *sm.denominator(Which::TBar) == row_product(q, sm.mu(), Which::TBar),
        format!("m = {m}"),
    ));
    match restricted_rtt(sm) {
        Ok(cs) => out.extend(cs.into_iter().map(|mut c| {
            c.name = name(c.name.trim_start_matches("skew:"));
            c
        })),
        Err(e) => out.push(Check::new(name("rtt"), false, e.to_string())),
    }
    let hw = highest_weight_from_action(sm);
    let formula = highest_weight_formula(sm.lambda(), sm.mu(), q);
    match (&hw, &formula) {
        (Ok(a), Ok(b)) => {
            out.push(Check::new(name("highest weight ν"), a.nu == b.nu, display_list(&a.nu)));
            out.push(Check::new(name("highest weight ν̄"), a.nubar == b.nubar, display_list(&a.nubar)));
            if m == 0 {
                let collapse = (0..sm.n()).all(|k| {
                    let lk = sm.lambda()[k];
                    a.nu[k] == linear_factor(q, lk, -lk, Which::T)
                });
                out.push(Check::new(name("m=0 collapse"), collapse, ""));
            }
        }
        (Err(e), _) | (_, Err(e)) => out.push(Check::new(name("highest weight"), false, e.to_string())),
    }
    if let (Ok(a), Ok(_)) = (&hw, &formula) {
        match drinfeld_polynomials(sm.lambda(), sm.mu(), a, q) {
            Ok(d) => {
                out.push(Check::new(name("drinfeld R1=R2"), d.ratio == d.exponents, display_list(&d.exponents)));
                match &d.contents {
                    Some(c) => out.push(Check::new(name("drinfeld R2=R3"), *c == d.exponents, "")),
                    None => out.push(Check::skipped(name("drinfeld R3"), "negative entries")),
                }
                let both_sides = (0..d.exponents.len()).all(|k| {
                    let r = drinfeld_ratio(&d.exponents[k], q);
                    let lhs = a.nu[k].div(&a.nu[k + 1]);
                    let rhs = a.nubar[k].div(&a.nubar[k + 1]);
                    matches!((r, lhs, rhs), (Ok(r), Ok(l), Ok(rb)) if r == l && r == rb)
                });
                out.push(Check::new(name("drinfeld ratio ν and ν̄"), both_sides, ""));
                if m == 0 {
                    out.push(Check::new(
                        name("drinfeld evaluation module"),
                        d.exponents == drinfeld_evaluation_module(sm.lambda(), q),
                        "",
                    ));
                }
            }
            Err(e) => out.push(Check::new(name("drinfeld"), false, e.to_string())),
        }
    }
    if nonnegative(sm.lambda(), sm.mu()) {
        let a = character_from_tableaux(sm.lambda(), sm.mu(), sm.n(), q);
        let b = character_from_h(sm);
        match (a, b) {
            (Ok(a), Ok(b)) => {
                let ma = character_multiset(&a);
                let mb = character_multiset(&b);
                out.push(Check::new(name("character"), ma == mb, format!("{} tuples", a.len())));
                // per label through the pattern-tableau bijection
                let per_label = sm.labels().iter().zip(&b).all(|(lab, hb)| {
                    pattern_to_ssyt(lab).is_ok_and(|t| tableau_tuple(t.entries(), sm.n(), q) == *hb)
                });
                out.push(Check::new(name("character per label"), per_label, ""));
            }
            (Err(e), _) | (_, Err(e)) => out.push(Check::new(name("character"), false, e.to_string())),
        }
    } else {
        out.push(Check::skipped(name("character"), "negative entries"));
    }
    match irreducibility_certificate(sm) {
        Ok(c) => {
            out.push(Check::new(name("irreducible: connected"), c.strongly_connected, format!("{} edges", c.edges.len())));
            out.push(Check::new(
                name("irreducible: coefficient products"),
                c.product_failures.is_empty() && c.shape_failures.is_empty(),
                c.product_failures.iter().chain(&c.shape_failures).cloned().collect::<Vec<_>>().join("; "),
            ));
        }
        Err(e) => out.push(Check::new(name("irreducible"), false, e.to_string())),
    }
    out
}

fn display_list<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{RatFuncQ, Rational, Ring};

    fn rq() -> QParam<Rational> {
        QParam::rational(&Rational::new(5.into(), 2.into())).unwrap()
    }

    #[test]
    fn dims() {
        let q = rq();
        assert_eq!(build_skew_module(&[1, 0, 0], &[1], &q).unwrap().dim(), 1);
        assert_eq!(build_skew_module(&[3, 2, 0], &[1], &q).unwrap().dim(), 4);
        assert_eq!(build_skew_module(&[1, 0], &[], &q).unwrap().dim(), 2);
        assert_eq!(build_skew_module(&[1, 0, 0], &[2], &q).unwrap().dim(), 0);
    }

    #[test]
    fn exponents_example() {
        assert_eq!(nu_exponents(&[3, 2, 0], &[1]).unwrap(), vec![vec![3, 1], vec![2, 0]]);
    }

    #[test]
    fn evaluation_drinfeld() {
        let q = QParam::symbolic();
        let p = drinfeld_evaluation_module(&[2, 1, 0], &q);
        assert_eq!(p[0], UPoly::linear(RatFuncQ::one(), -RatFuncQ::q_power(2)));
        assert_eq!(p[1].to_string(), "1 - u");
        let hw = highest_weight_formula(&[2, 1, 0], &[], &q).unwrap();
        let d = drinfeld_polynomials(&[2, 1, 0], &[], &hw, &q).unwrap();
        assert_eq!(d.ratio, p);
        assert_eq!(d.exponents, p);
        assert_eq!(d.contents.unwrap(), p);
    }

    #[test]
    fn skew_320_1_all_checks() {
        let q = rq();
        let sm = build_skew_module(&[3, 2, 0], &[1], &q).unwrap();
        for c in skew_checks(&sm, "t") {
            assert!(c.passed(), "{c:?}");
        }
        let d = drinfeld_from_contents(&[3, 2, 0], &[1], 2, &q).unwrap();
        let expect = one_minus(q.pow(-2)).mul(&one_minus(q.pow(4)));
        assert_eq!(d[0], expect);
    }

    #[test]
    fn gt_minor_actions() {
        let q = rq();
        for lambda in [vec![1, 0], vec![2, 1, 0], vec![2, 0, -1]] {
            let rep = build_rep(&lambda, &q).unwrap();
            for c in gt_minor_action_checks(&rep) {
                assert!(c.passed(), "{lambda:?} {c:?}");
            }
        }
    }

    #[test]
    fn evaluation_module_checks() {
        let q = rq();
        let sm = build_skew_module(&[2, 1, 0], &[], &q).unwrap();
        for c in skew_checks(&sm, "t") {
            assert!(c.passed(), "{c:?}");
        }
    }
}
