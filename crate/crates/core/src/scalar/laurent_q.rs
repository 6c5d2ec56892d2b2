use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use super::Rational;

/// Laurent polynomial in `q` with rational coefficients.
///
/// Stored as `q^min_degree * (c_0 + c_1 q + ...)`, trimmed so that the first and
/// last stored coefficients are nonzero. The zero polynomial has no coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPolyQ {
    min_degree: i64,
    coeffs: Vec<Rational>,
}

impl LaurentPolyQ {
    pub fn zero() -> Self {
        LaurentPolyQ { min_degree: 0, coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: Rational, k: i64) -> Self {
        Self::from_coeffs(k, vec![c])
    }

    pub fn from_coeffs(min_degree: i64, coeffs: Vec<Rational>) -> Self {
        let mut p = LaurentPolyQ { min_degree, coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.min_degree += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.min_degree = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn min_degree(&self) -> i64 {
        self.min_degree
    }

    /// Largest exponent; meaningless for the zero polynomial.
    pub fn max_degree(&self) -> i64 {
        self.min_degree + self.coeffs.len() as i64 - 1
    }

    /// Coefficients from `q^min_degree` upwards.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: i64) -> Rational {
        let i = k - self.min_degree;
        if i < 0 || i >= self.coeffs.len() as i64 {
            Rational::zero()
        } else {
            self.coeffs[i as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPolyQ { min_degree: self.min_degree + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.min_degree, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.min_degree == 0 && self.coeffs.len() == 1)
    }

    /// Evaluate at a nonzero rational.
    pub fn eval(&self, q0: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * q0 + c;
        }
        if self.min_degree >= 0 {
            acc * num_traits::pow(q0.clone(), self.min_degree as usize)
        } else {
            acc / num_traits::pow(q0.clone(), (-self.min_degree) as usize)
        }
    }

    fn add_impl(&self, other: &Self, sign: bool) -> Self {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if sign { other.clone() } else { -other.clone() };
        }
        let lo = self.min_degree.min(other.min_degree);
        let hi = self.max_degree().max(other.max_degree());
        let mut c = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (i, x) in self.coeffs.iter().enumerate() {
            c[(self.min_degree - lo) as usize + i] += x;
        }
        for (i, x) in other.coeffs.iter().enumerate() {
            let slot = &mut c[(other.min_degree - lo) as usize + i];
            if sign {
                *slot += x;
            } else {
                *slot -= x;
            }
        }
        Self::from_coeffs(lo, c)
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        Self::from_coeffs(self.min_degree + other.min_degree, c)
    }
}

impl Add for LaurentPolyQ {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_impl(&o, true)
    }
}
impl Add<&LaurentPolyQ> for LaurentPolyQ {
    type Output = Self;
    fn add(self, o: &Self) -> Self {
        self.add_impl(o, true)
    }
}
impl Sub for LaurentPolyQ {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.add_impl(&o, false)
    }
}
impl Sub<&LaurentPolyQ> for LaurentPolyQ {
    type Output = Self;
    fn sub(self, o: &Self) -> Self {
        self.add_impl(o, false)
    }
}
impl Mul for LaurentPolyQ {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_impl(&o)
    }
}
impl Mul<&LaurentPolyQ> for LaurentPolyQ {
    type Output = Self;
    fn mul(self, o: &Self) -> Self {
        self.mul_impl(o)
    }
}
impl<'a> Mul<&'a LaurentPolyQ> for &'a LaurentPolyQ {
    type Output = LaurentPolyQ;
    fn mul(self, o: &LaurentPolyQ) -> LaurentPolyQ {
        self.mul_impl(o)
    }
}
impl Neg for LaurentPolyQ {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.coeffs.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}
impl AddAssign<&LaurentPolyQ> for LaurentPolyQ {
    fn add_assign(&mut self, o: &Self) {
        *self = self.add_impl(o, true);
    }
}
impl SubAssign<&LaurentPolyQ> for LaurentPolyQ {
    fn sub_assign(&mut self, o: &Self) {
        *self = self.add_impl(o, false);
    }
}
