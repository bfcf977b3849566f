//! Univariate polynomials over the rationals and their fraction field.
//!
//! [`RatFun`] represents elements of the field of rational functions in one
//! indeterminate `q` with rational coefficients. Values are kept in canonical
//! form (numerator and denominator coprime, denominator monic), so equality
//! and zero tests are exact. This is the coefficient field used when q is
//! treated as a generic parameter: a power `q^t` equals 1 only for `t = 0`,
//! which is exactly the "q is not a root of unity" regime.

use crate::scalar::Scalar;
use num::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Dense polynomial over the rationals. Invariant: no trailing zero
/// coefficients (the zero polynomial has an empty coefficient vector).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    coeffs: Vec<BigRational>,
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        QPoly::from_coeffs(vec![c])
    }

    /// The monomial `c * x^e`.
    pub fn monomial(c: BigRational, e: usize) -> Self {
        if c.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = c;
        QPoly { coeffs }
    }

    pub fn x() -> Self {
        QPoly::monomial(BigRational::one(), 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        QPoly::from_coeffs(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, e: usize) -> BigRational {
        self.coeffs.get(e).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn add(&self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        QPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &QPoly) -> QPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        QPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &BigRational) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Euclidean division. Panics if `rhs` is zero.
    pub fn divrem(&self, rhs: &QPoly) -> (QPoly, QPoly) {
        assert!(!rhs.is_zero(), "polynomial division by zero");
        let drhs = rhs.degree().unwrap();
        let lead_inv = rhs.leading().recip();
        let mut rem = self.clone();
        let mut quot = vec![BigRational::zero(); self.coeffs.len().saturating_sub(drhs)];
        while let Some(drem) = rem.degree() {
            if drem < drhs {
                break;
            }
            let c = rem.leading() * &lead_inv;
            let shift = drem - drhs;
            quot[shift] = c.clone();
            // rem -= c * x^shift * rhs
            let mut coeffs = rem.coeffs;
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[shift + j] -= &c * b;
            }
            rem = QPoly::from_coeffs(coeffs);
        }
        (QPoly::from_coeffs(quot), rem)
    }

    /// Exact division; panics if the remainder is nonzero.
    pub fn exact_div(&self, rhs: &QPoly) -> QPoly {
        let (q, r) = self.divrem(rhs);
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        q
    }

    pub fn monic(&self) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        self.scale(&self.leading().recip())
    }

    /// Monic greatest common divisor via the Euclidean algorithm.
    pub fn gcd(&self, rhs: &QPoly) -> QPoly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            // Renormalize each remainder to keep coefficient growth in check.
            b = r.monic();
        }
        a.monic()
    }

    /// Extended Euclid: returns (g, u, v) with `u*self + v*rhs = g`, g monic.
    pub fn ext_gcd(&self, rhs: &QPoly) -> (QPoly, QPoly, QPoly) {
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut u0, mut u1) = (QPoly::one(), QPoly::zero());
        let (mut v0, mut v1) = (QPoly::zero(), QPoly::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let u = u0.sub(&q.mul(&u1));
            let v = v0.sub(&q.mul(&v1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u;
            v0 = v1;
            v1 = v;
        }
        if r0.is_zero() {
            return (QPoly::zero(), QPoly::zero(), QPoly::zero());
        }
        let lead = r0.leading().recip();
        (
            r0.scale(&lead),
            u0.scale(&lead),
            v0.scale(&lead),
        )
    }

    /// Render with the given variable name, highest power first.
    pub fn render(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c < &BigRational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let show_coeff = !abs.is_one() || e == 0;
            if show_coeff {
                out.push_str(&abs.to_string());
            }
            if e > 0 {
                if show_coeff {
                    out.push('*');
                }
                out.push_str(var);
                if e > 1 {
                    out.push_str(&format!("^{e}"));
                }
            }
        }
        out
    }
}

/// A rational function in `q`: a canonical fraction of two [`QPoly`]s.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFun {
    num: QPoly,
    den: QPoly,
}

impl RatFun {
    pub fn new(num: QPoly, den: QPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RatFun {
                num: QPoly::zero(),
                den: QPoly::one(),
            };
        }
        let g = num.gcd(&den);
        let mut num = num.exact_div(&g);
        let mut den = den.exact_div(&g);
        let lead = den.leading().recip();
        num = num.scale(&lead);
        den = den.scale(&lead);
        RatFun { num, den }
    }

    pub fn from_poly(p: QPoly) -> Self {
        RatFun {
            num: p,
            den: QPoly::one(),
        }
    }

    /// The generator `q` itself.
    pub fn q() -> Self {
        RatFun::from_poly(QPoly::x())
    }

    pub fn num(&self) -> &QPoly {
        &self.num
    }

    pub fn den(&self) -> &QPoly {
        &self.den
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num.render("q"))
        } else {
            let num = self.num.render("q");
            let den = self.den.render("q");
            let wrap = |s: &str| {
                if s.contains(' ') {
                    format!("({s})")
                } else {
                    s.to_string()
                }
            };
            write!(f, "{}/{}", wrap(&num), wrap(&den))
        }
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        RatFun::new(
            self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den)),
            self.den.mul(&rhs.den),
        )
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        self + (-rhs)
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        RatFun::new(self.num.mul(&rhs.num), self.den.mul(&rhs.den))
    }
}

impl Div for RatFun {
    type Output = RatFun;
    fn div(self, rhs: RatFun) -> RatFun {
        assert!(!rhs.is_zero(), "division by zero rational function");
        RatFun::new(self.num.mul(&rhs.den), self.den.mul(&rhs.num))
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        RatFun {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Zero for RatFun {
    fn zero() -> Self {
        RatFun::from_poly(QPoly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFun {
    fn one() -> Self {
        RatFun::from_poly(QPoly::one())
    }
}

impl Scalar for RatFun {
    fn from_rat(r: &BigRational) -> Self {
        RatFun::from_poly(QPoly::constant(r.clone()))
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero rational function");
        RatFun::new(self.den.clone(), self.num.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::scalar_pow;

    #[test]
    fn poly_divrem_roundtrip() {
        let a = QPoly::from_i64(&[2, 0, -3, 1]); // x^3 - 3x^2 + 2
        let b = QPoly::from_i64(&[-1, 1]); // x - 1
        let (q, r) = a.divrem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.is_zero()); // x = 1 is a root
    }

    #[test]
    fn gcd_of_q_powers() {
        let a = QPoly::monomial(BigRational::from_integer(4.into()), 5);
        let b = QPoly::monomial(BigRational::from_integer(6.into()), 3);
        assert_eq!(a.gcd(&b), QPoly::monomial(BigRational::one(), 3));
    }

    #[test]
    fn ratfun_canonical() {
        // (q^2 - 1)/(q - 1) reduces to q + 1
        let num = QPoly::from_i64(&[-1, 0, 1]);
        let den = QPoly::from_i64(&[-1, 1]);
        let f = RatFun::new(num, den);
        assert_eq!(f, RatFun::from_poly(QPoly::from_i64(&[1, 1])));
        assert_eq!(f.to_string(), "q + 1");
    }

    #[test]
    fn q_inverse_power() {
        let q = RatFun::q();
        let qm2 = scalar_pow(&q, -2);
        assert_eq!(qm2.clone() * q.clone() * q.clone(), RatFun::one());
        assert_eq!(qm2.to_string(), "1/q^2");
    }

    #[test]
    fn q_power_never_one() {
        // the defining property of the generic field
        let q = RatFun::q();
        for t in 1..20 {
            assert_ne!(scalar_pow(&q, t), RatFun::one());
        }
    }
}
