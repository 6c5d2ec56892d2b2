use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent_q::LaurentPolyQ;
use super::zpoly::ZPoly;
use super::{Rational, Ring, Scalar};
use crate::error::{Error, Result};

/// Element of `Q(q)` in canonical form.
///
/// `num / den` with `gcd(num, den) = 1`, `den` an ordinary polynomial with
/// nonzero constant term, integer coefficients of content one and positive
/// leading coefficient. Powers of `q` are carried by the numerator, which is
/// a Laurent polynomial with rational coefficients. Two equal functions have
/// identical representations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFuncQ {
    num: LaurentPolyQ,
    den: LaurentPolyQ,
}

/// `p = scale * q^shift * z(q)` with `z` primitive, positive leading coefficient.
fn split(p: &LaurentPolyQ) -> (Rational, ZPoly, i64) {
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * &l).to_integer()).collect();
    let z = ZPoly::new(ints);
    let prim = z.primitive();
    // z = k * prim with k = lc(z) / lc(prim)
    let k = Rational::new(z.lc().clone(), prim.lc().clone());
    (k / Rational::from_integer(l), prim, p.min_degree())
}

fn zpoly_to_laurent(z: &ZPoly, shift: i64, scale: &Rational) -> LaurentPolyQ {
    LaurentPolyQ::from_coeffs(
        shift,
        z.0.iter().map(|c| Rational::from_integer(c.clone()) * scale).collect(),
    )
}

impl RatFuncQ {
    /// Build `num / den`, reducing to canonical form.
    pub fn new(num: LaurentPolyQ, den: LaurentPolyQ) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero_value());
        }
        let (sn, zn, en) = split(&num);
        let (sd, zd, ed) = split(&den);
        let g = ZPoly::gcd(&zn, &zd);
        let (zn, zd) = if g.degree() == 0 {
            (zn, zd)
        } else {
            (
                ZPoly::exact_div(&zn, &g).expect("gcd divides numerator"),
                ZPoly::exact_div(&zd, &g).expect("gcd divides denominator"),
            )
        };
        Ok(RatFuncQ {
            num: zpoly_to_laurent(&zn, en - ed, &(sn / sd)),
            den: zpoly_to_laurent(&zd, 0, &<Rational as One>::one()),
        })
    }

    fn zero_value() -> Self {
        RatFuncQ { num: LaurentPolyQ::zero(), den: LaurentPolyQ::one() }
    }

    pub fn from_laurent(p: LaurentPolyQ) -> Self {
        RatFuncQ { num: p, den: LaurentPolyQ::one() }
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from_laurent(LaurentPolyQ::constant(c))
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::q_power(1)
    }

    pub fn q_power(k: i64) -> Self {
        Self::from_laurent(LaurentPolyQ::monomial(<Rational as One>::one(), k))
    }

    pub fn numerator(&self) -> &LaurentPolyQ {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPolyQ {
        &self.den
    }

    pub fn is_laurent(&self) -> bool {
        self.den.is_constant()
    }

    /// Evaluate at `q = q0`; fails at poles and at `q0 = 0`.
    pub fn eval(&self, q0: &Rational) -> Result<Rational> {
        if Zero::is_zero(q0) {
            return Err(Error::InvalidQ("0".into()));
        }
        let d = self.den.eval(q0);
        if Zero::is_zero(&d) {
            return Err(Error::Pole(format!("{self} at q = {q0}")));
        }
        Ok(self.num.eval(q0) / d)
    }

    fn add_impl(&self, o: &Self, sign: bool) -> Self {
        let c = if sign { o.num.clone() } else { -o.num.clone() };
        if self.den.is_constant() && o.den.is_constant() {
            return Self::from_laurent(self.num.clone() + &c);
        }
        if o.den.is_constant() {
            // a/d + c: already coprime
            let n = self.num.clone() + &(c * &self.den);
            return if n.is_zero() {
                Self::zero_value()
            } else {
                RatFuncQ { num: n, den: self.den.clone() }
            };
        }
        if self.den.is_constant() {
            let n = self.num.clone() * &o.den + &c;
            return if n.is_zero() {
                Self::zero_value()
            } else {
                RatFuncQ { num: n, den: o.den.clone() }
            };
        }
        if self.den == o.den {
            return Self::new(self.num.clone() + &c, self.den.clone()).expect("nonzero denominator");
        }
        Self::new(self.num.clone() * &o.den + &(c * &self.den), self.den.clone() * &o.den)
            .expect("nonzero denominator")
    }

    fn mul_impl(&self, o: &Self) -> Self {
        if self.num.is_zero() || o.num.is_zero() {
            return Self::zero_value();
        }
        if self.den.is_constant() && o.den.is_constant() {
            return Self::from_laurent(&self.num * &o.num);
        }
        Self::new(&self.num * &o.num, &self.den * &o.den).expect("nonzero denominator")
    }
}

impl Ring for RatFuncQ {
    fn zero() -> Self {
        Self::zero_value()
    }
    fn one() -> Self {
        Self::from_laurent(LaurentPolyQ::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn from_i64(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self.mul_impl(other)
    }
}

impl Scalar for RatFuncQ {
    fn try_inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(Self::new(self.den.clone(), self.num.clone()).expect("nonzero numerator"))
        }
    }

    fn looks_negative(&self) -> bool {
        self.num.leading_coeff().is_some_and(|c| c.is_negative())
    }
}

impl Add for RatFuncQ {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self.add_impl(&o, true)
    }
}
impl Add<&RatFuncQ> for RatFuncQ {
    type Output = Self;
    fn add(self, o: &Self) -> Self {
        self.add_impl(o, true)
    }
}
impl Sub for RatFuncQ {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self.add_impl(&o, false)
    }
}
impl Sub<&RatFuncQ> for RatFuncQ {
    type Output = Self;
    fn sub(self, o: &Self) -> Self {
        self.add_impl(o, false)
    }
}
impl Mul for RatFuncQ {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self.mul_impl(&o)
    }
}
impl Mul<&RatFuncQ> for RatFuncQ {
    type Output = Self;
    fn mul(self, o: &Self) -> Self {
        self.mul_impl(o)
    }
}
impl Neg for RatFuncQ {
    type Output = Self;
    fn neg(self) -> Self {
        RatFuncQ { num: -self.num, den: self.den }
    }
}
impl AddAssign<&RatFuncQ> for RatFuncQ {
    fn add_assign(&mut self, o: &Self) {
        *self = self.add_impl(o, true);
    }
}
impl SubAssign<&RatFuncQ> for RatFuncQ {
    fn sub_assign(&mut self, o: &Self) {
        *self = self.add_impl(o, false);
    }
}

fn write_poly(f: &mut fmt::Formatter<'_>, p: &LaurentPolyQ, scale: &BigInt) -> fmt::Result {
    if p.is_zero() {
        return write!(f, "0");
    }
    let mut first = true;
    for k in (p.min_degree()..=p.max_degree()).rev() {
        let c = p.coeff(k);
        if Zero::is_zero(&c) {
            continue;
        }
        let c = (c * Rational::from_integer(scale.clone())).to_integer();
        if first {
            write!(f, "{c}*q^{k}")?;
            first = false;
        } else if c.is_negative() {
            write!(f, " - {}*q^{k}", -c)?;
        } else {
            write!(f, " + {c}*q^{k}")?;
        }
    }
    Ok(())
}

/// Canonical text form `(c_k*q^k + ...)/(d_j*q^j + ...)` with integer
/// coefficients in decreasing degree; the denominator is omitted when it is 1.
impl fmt::Display for RatFuncQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut l = BigInt::one();
        for c in self.num.coeffs() {
            l = l.lcm(c.denom());
        }
        write!(f, "(")?;
        write_poly(f, &self.num, &l)?;
        write!(f, ")")?;
        let den_is_one = self.den.is_constant() && l.is_one();
        if !den_is_one {
            write!(f, "/(")?;
            write_poly(f, &self.den, &l)?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Parse(format!(
            "{what} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.s)
        ))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        self.skip_ws();
        let start = self.pos;
        if matches!(self.s.get(self.pos), Some(b'-') | Some(b'+')) {
            self.pos += 1;
        }
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let txt = std::str::from_utf8(&self.s[start..self.pos]).expect("ascii");
        BigInt::from_str(txt).map_err(|_| self.err("expected integer"))
    }

    fn term(&mut self) -> Result<LaurentPolyQ> {
        let mut coeff = <Rational as One>::one();
        let mut have_coeff = false;
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let n = self.int()?;
            coeff = Rational::from_integer(n);
            if self.peek() == Some(b'/') && self.s.get(self.pos + 1).is_some_and(|c| c.is_ascii_digit()) {
                self.pos += 1;
                let d = self.int()?;
                if d.is_zero() {
                    return Err(self.err("zero denominator"));
                }
                coeff /= Rational::from_integer(d);
            }
            have_coeff = true;
            if !self.eat(b'*') {
                return Ok(LaurentPolyQ::constant(coeff));
            }
        }
        if !self.eat(b'q') {
            return Err(self.err(if have_coeff { "expected q" } else { "expected term" }));
        }
        let k = if self.eat(b'^') {
            let e = self.int()?;
            i64::try_from(e).map_err(|_| self.err("exponent out of range"))?
        } else {
            1
        };
        Ok(LaurentPolyQ::monomial(coeff, k))
    }

    fn poly(&mut self) -> Result<LaurentPolyQ> {
        let mut acc = LaurentPolyQ::zero();
        let mut neg = false;
        if self.eat(b'-') {
            neg = true;
        } else {
            self.eat(b'+');
        }
        loop {
            let t = self.term()?;
            acc = if neg { acc - t } else { acc + t };
            if self.eat(b'+') {
                neg = false;
            } else if self.eat(b'-') {
                neg = true;
            } else {
                return Ok(acc);
            }
        }
    }

    fn group(&mut self) -> Result<LaurentPolyQ> {
        if self.eat(b'(') {
            let p = self.poly()?;
            if !self.eat(b')') {
                return Err(self.err("expected )"));
            }
            Ok(p)
        } else {
            self.poly()
        }
    }
}

impl FromStr for RatFuncQ {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser { s: s.as_bytes(), pos: 0 };
        let num = p.group()?;
        let den = if p.eat(b'/') { p.group()? } else { LaurentPolyQ::one() };
        if p.peek().is_some() {
            return Err(p.err("trailing input"));
        }
        RatFuncQ::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(min: i64, c: &[i64]) -> LaurentPolyQ {
        LaurentPolyQ::from_coeffs(min, c.iter().map(|&x| Rational::from_integer(x.into())).collect())
    }

    #[test]
    fn canonical_cancellation() {
        // (q^2 - 1) / (q - 1) = q + 1
        let x = RatFuncQ::new(lp(0, &[-1, 0, 1]), lp(0, &[-1, 1])).unwrap();
        assert_eq!(x, RatFuncQ::from_laurent(lp(0, &[1, 1])));
        // (q - q^{-1}) / (q^2 - q^{-2}) = q / (q^2 + 1)
        let y = RatFuncQ::new(lp(-1, &[-1, 0, 1]), lp(-2, &[-1, 0, 0, 0, 1])).unwrap();
        assert_eq!(y.denominator(), &lp(0, &[1, 0, 1]));
        assert_eq!(y.numerator(), &lp(1, &[1]));
    }

    #[test]
    fn display_and_parse() {
        let x = RatFuncQ::new(lp(-1, &[1, 0, 1]), lp(0, &[2, 6])).unwrap();
        let s = x.to_string();
        assert_eq!(s, "(1*q^1 + 1*q^-1)/(6*q^1 + 2*q^0)");
        assert_eq!(s.parse::<RatFuncQ>().unwrap(), x);
        assert_eq!(RatFuncQ::zero().to_string(), "(0)");
        assert_eq!("(0)".parse::<RatFuncQ>().unwrap(), RatFuncQ::zero());
        let half = RatFuncQ::from_rational(Rational::new(1.into(), 2.into()));
        assert_eq!(half.to_string(), "(1*q^0)/(2*q^0)");
        assert_eq!(half.to_string().parse::<RatFuncQ>().unwrap(), half);
        assert_eq!("q^2 - 3/2*q + 1".parse::<RatFuncQ>().unwrap().to_string(), "(2*q^2 - 3*q^1 + 2*q^0)/(2*q^0)");
    }

    #[test]
    fn arithmetic_roundtrip() {
        let q = RatFuncQ::q();
        let qi = q.inv().unwrap();
        let two = q.clone() + &qi;
        let x = two.inv().unwrap();
        assert_eq!(x.clone() * &two, RatFuncQ::one());
        let y = x.clone() + &x;
        assert_eq!(y.try_div(&x).unwrap(), RatFuncQ::from_i64(2));
        assert!((x.clone() - &x).is_zero());
    }

    #[test]
    fn evaluation_and_poles() {
        let x: RatFuncQ = "(1*q^1)/(1*q^1 - 2*q^0)".parse().unwrap();
        assert!(x.eval(&Rational::from_integer(2.into())).is_err());
        assert_eq!(
            x.eval(&Rational::from_integer(3.into())).unwrap(),
            Rational::from_integer(3.into())
        );
    }
}
