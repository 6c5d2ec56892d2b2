use std::fmt;

use super::Scalar;
use crate::error::{Error, Result};

/// Polynomial in the spectral parameter `u` over a field `F`, ascending coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct UPoly<F> {
    coeffs: Vec<F>,
}

impl<F: Scalar> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: vec![] }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    /// `c * u^k`.
    pub fn monomial(c: F, k: usize) -> Self {
        let mut v = vec![F::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `a + b u`.
    pub fn linear(a: F, b: F) -> Self {
        Self::new(vec![a, b])
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> F {
        self.coeffs.get(k).cloned().unwrap_or_else(F::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + &o.coeff(i)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - &o.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += &a.mul_ref(b);
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.mul_ref(c)).collect())
    }

    /// Multiply by `u^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![F::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    /// `p(alpha * u)`.
    pub fn scale_arg(&self, alpha: &F) -> Self {
        let mut pw = F::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.mul_ref(&pw));
            pw = pw * alpha;
        }
        Self::new(out)
    }

    pub fn eval(&self, u: &F) -> F {
        let mut acc = F::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * u + c;
        }
        acc
    }

    /// Quotient and remainder.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.coeffs[dd].inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![F::zero(); r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = r[k + dd].mul_ref(&lead_inv);
            if top.is_zero() {
                continue;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                r[k + i] -= &top.mul_ref(c);
            }
            q[k] = top;
        }
        r.truncate(dd);
        Ok((Self::new(q), Self::new(r)))
    }

    /// Scale to leading coefficient one.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Monic greatest common divisor.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Multiplicity of `u = 0` as a root.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }
}

impl<F: Scalar> fmt::Display for UPoly<F> {
    /// Ascending powers, e.g. `1 - u` or `1 - 25/4*u + 3*u^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.looks_negative();
            let mag = if neg { -c.clone() } else { c.clone() };
            let body = match (k, mag.is_one()) {
                (0, true) => "1".to_string(),
                (0, false) => mag.to_string(),
                (1, true) => "u".to_string(),
                (1, false) => format!("{mag}*u"),
                (_, true) => format!("u^{k}"),
                (_, false) => format!("{mag}*u^{k}"),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Rational function of `u` over `F`, reduced, with monic denominator.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFuncU<F> {
    num: UPoly<F>,
    den: UPoly<F>,
}

impl<F: Scalar> RatFuncU<F> {
    pub fn new(num: UPoly<F>, den: UPoly<F>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::from_poly(UPoly::zero()));
        }
        let g = UPoly::gcd(&num, &den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_rem(&g)?.0, den.div_rem(&g)?.0)
        };
        let l = den.leading().expect("nonzero").inv()?;
        Ok(RatFuncU { num: num.scale(&l), den: den.scale(&l) })
    }

    pub fn from_poly(p: UPoly<F>) -> Self {
        RatFuncU { num: p, den: UPoly::one() }
    }

    pub fn constant(c: F) -> Self {
        Self::from_poly(UPoly::constant(c))
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    /// Laurent polynomial `sum_k c_k u^k` given by `(low, coeffs)`.
    pub fn from_laurent(low: i64, coeffs: Vec<F>) -> Self {
        let p = UPoly::new(coeffs);
        if low >= 0 {
            Self::from_poly(p.shift(low as usize))
        } else {
            Self::new(p, UPoly::monomial(F::one(), (-low) as usize)).expect("nonzero")
        }
    }

    pub fn numerator(&self) -> &UPoly<F> {
        &self.num
    }

    pub fn denominator(&self) -> &UPoly<F> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
            .expect("nonzero")
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.den).sub(&o.num.mul(&self.den)), self.den.mul(&o.den))
            .expect("nonzero")
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).expect("nonzero")
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        if o.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn scale(&self, c: &F) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("nonzero")
    }

    /// `f(alpha * u)`.
    pub fn scale_arg(&self, alpha: &F) -> Self {
        Self::new(self.num.scale_arg(alpha), self.den.scale_arg(alpha)).expect("nonzero")
    }

    /// Value at `u = u0`; fails at poles.
    pub fn eval(&self, u0: &F) -> Result<F> {
        let d = self.den.eval(u0);
        if d.is_zero() {
            return Err(Error::Pole(format!("u = {u0}")));
        }
        self.num.eval(u0).try_div(&d)
    }
}

impl<F: Scalar> fmt::Display for RatFuncU<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) && self.den.coeffs[0].is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Rational, Ring};

    fn r(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn reduce_and_display() {
        // (u^2 - 1)/(2u - 2) = (u + 1)/2
        let a = UPoly::new(vec![r(-1), r(0), r(1)]);
        let b = UPoly::new(vec![r(-2), r(2)]);
        let x = RatFuncU::new(a, b).unwrap();
        assert_eq!(x.denominator(), &UPoly::one());
        assert_eq!(x.to_string(), "1/2 + 1/2*u");
        assert_eq!(UPoly::new(vec![r(1), r(-1)]).to_string(), "1 - u");
    }

    #[test]
    fn laurent_embedding() {
        // 2 - 1/2 u^{-1} = (2u - 1/2)/u
        let x = RatFuncU::from_laurent(-1, vec![Rational::new((-1).into(), 2.into()), r(2)]);
        assert_eq!(x.numerator(), &UPoly::new(vec![Rational::new((-1).into(), 2.into()), r(2)]));
        assert_eq!(x.denominator(), &UPoly::new(vec![r(0), r(1)]));
        assert_eq!(x.eval(&r(2)).unwrap(), Rational::new(7.into(), 4.into()));
    }
}
