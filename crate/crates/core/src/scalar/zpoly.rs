//! Dense integer polynomials, used for gcd computations in `Q[q]`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients in ascending degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct ZPoly(pub Vec<BigInt>);

impl ZPoly {
    pub fn new(mut c: Vec<BigInt>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        ZPoly(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lc(&self) -> &BigInt {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divide every coefficient by `d` (must divide exactly).
    pub fn div_scalar(&self, d: &BigInt) -> ZPoly {
        ZPoly(self.0.iter().map(|c| c / d).collect())
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        self.div_scalar(&c)
    }

    fn scale(&self, k: &BigInt) -> ZPoly {
        ZPoly::new(self.0.iter().map(|c| c * k).collect())
    }

    /// Pseudo-remainder `prem(a, b)` of `lc(b)^(deg a - deg b + 1) * a` by `b`.
    fn prem(a: &ZPoly, b: &ZPoly) -> ZPoly {
        let db = b.degree();
        let lb = b.lc().clone();
        let mut r = a.0.clone();
        if a.degree() < db {
            return a.clone();
        }
        let mut e = a.degree() - db + 1;
        while r.len() > db && !r.is_empty() {
            let dr = r.len() - 1;
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            let shift = dr - db;
            for (i, bc) in b.0.iter().enumerate() {
                r[shift + i] -= &lr * bc;
            }
            r.pop();
            while r.last().is_some_and(|x| x.is_zero()) {
                r.pop();
            }
            e -= 1;
        }
        let mut out = ZPoly::new(r);
        if e > 0 {
            out = out.scale(&num_traits::pow(lb, e));
        }
        out
    }

    /// Exact quotient `a / b`; `None` if `b` does not divide `a` over the integers.
    pub fn exact_div(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
        if b.is_zero() {
            return None;
        }
        if a.is_zero() {
            return Some(ZPoly(vec![]));
        }
        if a.degree() < b.degree() {
            return None;
        }
        let db = b.degree();
        let lb = b.lc();
        let mut r = a.0.clone();
        let mut q = vec![BigInt::zero(); a.degree() - db + 1];
        for k in (0..q.len()).rev() {
            let top = &r[k + db];
            if top.is_zero() {
                continue;
            }
            let (qk, rem) = top.div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            for (i, bc) in b.0.iter().enumerate() {
                r[k + i] -= &qk * bc;
            }
            q[k] = qk;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(ZPoly::new(q))
    }

    /// Greatest common divisor via the subresultant remainder sequence.
    /// The result is primitive with positive leading coefficient.
    pub fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
        if a.is_zero() {
            return b.primitive();
        }
        if b.is_zero() {
            return a.primitive();
        }
        let (mut a, mut b) = if a.degree() >= b.degree() {
            (a.primitive(), b.primitive())
        } else {
            (b.primitive(), a.primitive())
        };
        if b.degree() == 0 {
            return ZPoly(vec![BigInt::one()]);
        }
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let delta = a.degree() - b.degree();
            let r = ZPoly::prem(&a, &b);
            if r.is_zero() {
                return b.primitive();
            }
            if r.degree() == 0 {
                return ZPoly(vec![BigInt::one()]);
            }
            let denom = &g * num_traits::pow(h.clone(), delta);
            a = b;
            b = r.div_scalar(&denom);
            g = a.lc().clone();
            // h <- g^delta / h^(delta - 1)
            h = if delta == 0 {
                h
            } else {
                num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
            };
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        ZPoly::new(v.iter().map(|&x| BigInt::from(x)).collect())
    }

    fn mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
        let mut out = vec![BigInt::zero(); a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            for (j, y) in b.0.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        ZPoly::new(out)
    }

    #[test]
    fn gcd_of_products() {
        let f = z(&[1, 1]); // 1 + x
        let g = z(&[-2, 0, 3]);
        let h = z(&[5, -1, 0, 7]);
        let a = mul(&mul(&f, &g), &z(&[4]));
        let b = mul(&mul(&f, &h), &z(&[6]));
        assert_eq!(ZPoly::gcd(&a, &b), f);
        let c = mul(&g, &h);
        assert_eq!(ZPoly::gcd(&mul(&c, &f), &mul(&c, &z(&[1, -1]))), c.primitive());
    }

    #[test]
    fn coprime_is_one() {
        assert_eq!(ZPoly::gcd(&z(&[1, 0, 1]), &z(&[1, 1])), z(&[1]));
    }

    #[test]
    fn exact_division() {
        let a = mul(&z(&[1, 2, 3]), &z(&[-1, 1]));
        assert_eq!(ZPoly::exact_div(&a, &z(&[-1, 1])), Some(z(&[1, 2, 3])));
        assert_eq!(ZPoly::exact_div(&a, &z(&[2, 1])), None);
    }
}
