//! Exact scalars.
//!
//! Two coefficient fields are used throughout the crate:
//!
//! * [`Rational`]: `q` specialized to a rational `q0`;
//! * [`RatFuncQ`]: rational functions in an indeterminate `q`.
//!
//! Every algebraic routine is generic over [`Scalar`] and receives the value of
//! `q` through a [`QParam`].

mod laurent_q;
mod ratfunc;
mod upoly;
mod zpoly;

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use laurent_q::LaurentPolyQ;
pub use ratfunc::RatFuncQ;
pub use upoly::{RatFuncU, UPoly};

use crate::error::{Error, Result};

/// Arbitrary precision rational number.
pub type Rational = num_rational::BigRational;

/// Commutative ring with identity.
pub trait Ring:
    Clone
    + PartialEq
    + fmt::Debug
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(n: i64) -> Self;

    /// Product that borrows both factors.
    fn mul_ref(&self, other: &Self) -> Self {
        self.clone() * other
    }
}

/// A ring containing the scalars `F`.
pub trait Algebra<F>: Ring {
    fn from_scalar(c: F) -> Self;
}

impl Algebra<Rational> for Rational {
    fn from_scalar(c: Rational) -> Self {
        c
    }
}

impl Algebra<RatFuncQ> for RatFuncQ {
    fn from_scalar(c: RatFuncQ) -> Self {
        c
    }
}

/// A field of characteristic zero with a canonical text form.
pub trait Scalar: Algebra<Self> + fmt::Display {
    fn try_inv(&self) -> Option<Self>;

    /// Whether the canonical text form should be printed with a leading minus
    /// after negation. Only used for pretty printing.
    fn looks_negative(&self) -> bool {
        false
    }

    fn inv(&self) -> Result<Self> {
        self.try_inv().ok_or(Error::DivisionByZero)
    }

    fn try_div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul_ref(&other.inv()?))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn powi(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * &b;
            }
            e >>= 1;
            if e > 0 {
                b = b.mul_ref(&b);
            }
        }
        Ok(acc)
    }
}

impl Ring for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        <Rational as Zero>::is_zero(self)
    }
    fn from_i64(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
}

impl Scalar for Rational {
    fn try_inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
    fn looks_negative(&self) -> bool {
        self.is_negative()
    }
}

/// Parse `"p"` or `"p/q"` into a rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    Rational::from_str(s).map_err(|_| Error::Parse(format!("not a rational number: {s:?}")))
}

/// The image of a rational number in `F`.
///
/// Numerator and denominator must fit in an `i64`.
pub fn embed_rational<F: Scalar>(r: &Rational) -> Result<F> {
    use num_traits::ToPrimitive;
    let (Some(n), Some(d)) = (r.numer().to_i64(), r.denom().to_i64()) else {
        return Err(Error::Invalid(format!("{r} is too large to embed")));
    };
    F::from_i64(n).try_div(&F::from_i64(d))
}

/// The value of `q` together with cached powers.
#[derive(Clone, Debug)]
pub struct QParam<F> {
    q: F,
    q_inv: F,
    label: String,
}

impl<F: Scalar> QParam<F> {
    pub fn q(&self) -> &F {
        &self.q
    }

    pub fn q_inv(&self) -> &F {
        &self.q_inv
    }

    /// `q^k`.
    pub fn pow(&self, k: i64) -> F {
        let (b, e) = if k < 0 { (&self.q_inv, -k) } else { (&self.q, k) };
        let mut acc = F::one();
        for _ in 0..e {
            acc = acc * b;
        }
        acc
    }

    /// `q - q^{-1}`.
    pub fn q_diff(&self) -> F {
        self.q.clone() - &self.q_inv
    }

    /// `(-q)^k`.
    pub fn neg_q_pow(&self, k: i64) -> F {
        let p = self.pow(k);
        if k.rem_euclid(2) == 1 {
            -p
        } else {
            p
        }
    }

    /// The q-integer `[m] = (q^m - q^{-m}) / (q - q^{-1})`.
    pub fn qint(&self, m: i64) -> F {
        let s = m.signum();
        let mut acc = F::zero();
        for j in 0..m.abs() {
            acc += &self.pow(m.abs() - 1 - 2 * j);
        }
        if s < 0 {
            -acc
        } else {
            acc
        }
    }

    /// The parameter `q^{-1}`, for working in the algebra with inverted `q`.
    pub fn inverted(&self) -> Self {
        QParam {
            q: self.q_inv.clone(),
            q_inv: self.q.clone(),
            label: format!("inverse of {}", self.label),
        }
    }

    /// Human readable description used in reports.
    pub fn label(&self) -> &str {
        &self.label
    }
}

impl QParam<RatFuncQ> {
    pub fn symbolic() -> Self {
        QParam {
            q: RatFuncQ::q(),
            q_inv: RatFuncQ::q_power(-1),
            label: "symbolic".to_string(),
        }
    }
}

impl QParam<Rational> {
    /// `q` specialized to `q0`; rejects `0` and `±1`.
    pub fn rational(q0: &Rational) -> Result<Self> {
        check_q0(q0)?;
        Ok(QParam {
            q: q0.clone(),
            q_inv: q0.recip(),
            label: format!("rational:{q0}"),
        })
    }
}

fn check_q0(q0: &Rational) -> Result<()> {
    if Ring::is_zero(q0) || q0.abs() == <Rational as One>::one() {
        return Err(Error::InvalidQ(q0.to_string()));
    }
    Ok(())
}

/// How `q` is treated in a computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QMode {
    Symbolic,
    Rational(Rational),
}

impl FromStr for QMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "symbolic" {
            return Ok(QMode::Symbolic);
        }
        if let Some(v) = s.strip_prefix("rational:") {
            let q0 = parse_rational(v)?;
            check_q0(&q0)?;
            return Ok(QMode::Rational(q0));
        }
        Err(Error::Parse(format!(
            "q mode must be `symbolic` or `rational:P/Q`, got {s:?}"
        )))
    }
}

impl fmt::Display for QMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QMode::Symbolic => write!(f, "symbolic"),
            QMode::Rational(q0) => write!(f, "rational:{q0}"),
        }
    }
}

/// `[m]` as a Laurent polynomial `q^{m-1} + q^{m-3} + ... + q^{1-m}`.
pub fn q_integer(m: i64) -> LaurentPolyQ {
    let mut acc = LaurentPolyQ::zero();
    for j in 0..m.abs() {
        acc = acc + LaurentPolyQ::monomial(Rational::from_i64(1), m.abs() - 1 - 2 * j);
    }
    if m < 0 {
        -acc
    } else {
        acc
    }
}

/// Evaluate a rational function of `q` at `q = q0`.
///
/// Fails for `q0 ∈ {0, 1, -1}` and at poles.
pub fn specialize_q(x: &RatFuncQ, q0: &Rational) -> Result<Rational> {
    check_q0(q0)?;
    x.eval(q0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn q_integer_small() {
        assert_eq!(q_integer(1), LaurentPolyQ::monomial(r(1, 1), 0));
        let two = q_integer(2);
        let sq = two.clone() * &two;
        let expect = LaurentPolyQ::from_coeffs(-2, vec![r(1, 1), r(0, 1), r(2, 1), r(0, 1), r(1, 1)]);
        assert_eq!(sq, expect);
        assert_eq!(q_integer(0), LaurentPolyQ::zero());
        assert_eq!(q_integer(-3), -q_integer(3));
    }

    #[test]
    fn specialize_two_at_two() {
        let x = RatFuncQ::from_laurent(q_integer(2));
        assert_eq!(specialize_q(&x, &r(2, 1)).unwrap(), r(5, 2));
        assert!(specialize_q(&x, &r(1, 1)).is_err());
        assert!(specialize_q(&x, &r(-1, 1)).is_err());
        assert!(specialize_q(&x, &r(0, 1)).is_err());
    }

    #[test]
    fn qparam_matches_laurent_qint() {
        let p = QParam::rational(&r(5, 2)).unwrap();
        for m in -4..6 {
            let direct = specialize_q(&RatFuncQ::from_laurent(q_integer(m)), &r(5, 2)).unwrap();
            assert_eq!(p.qint(m), direct);
        }
        let s = QParam::symbolic();
        assert_eq!(s.qint(3), RatFuncQ::from_laurent(q_integer(3)));
        assert_eq!(s.neg_q_pow(-1), -RatFuncQ::q_power(-1));
    }

    #[test]
    fn qmode_parse() {
        assert_eq!("symbolic".parse::<QMode>().unwrap(), QMode::Symbolic);
        assert_eq!(
            "rational:5/2".parse::<QMode>().unwrap(),
            QMode::Rational(r(5, 2))
        );
        assert!("rational:1".parse::<QMode>().is_err());
        assert!("rational:0".parse::<QMode>().is_err());
        assert!("complex".parse::<QMode>().is_err());
    }
}
