//! Cyclotomic fields: rationals extended by a primitive s-th root of unity.
//!
//! Elements are polynomials in the root `z` reduced modulo the s-th
//! cyclotomic polynomial. Reducing modulo the cyclotomic polynomial (rather
//! than `z^s - 1`) makes primitivity structural: `z^t = 1` holds exactly for
//! `s | t`.

use crate::ratfun::QPoly;
use crate::scalar::Scalar;
use num::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::sync::Arc;

/// Compute all divisors of `n` in ascending order.
fn divisors(n: u32) -> Vec<u32> {
    let mut divs = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            divs.push(i);
            if i != n / i {
                divs.push(n / i);
            }
        }
        i += 1;
    }
    divs.sort_unstable();
    divs
}

/// The n-th cyclotomic polynomial, via recursive division:
/// `Phi_n(x) = (x^n - 1) / prod_{d | n, d < n} Phi_d(x)`.
pub fn cyclotomic_poly(n: u32) -> QPoly {
    assert!(n > 0, "cyclotomic_poly: order must be positive");
    if n == 1 {
        return QPoly::from_i64(&[-1, 1]);
    }
    let mut coeffs = vec![0i64; n as usize + 1];
    coeffs[0] = -1;
    coeffs[n as usize] = 1;
    let mut result = QPoly::from_i64(&coeffs);
    for d in divisors(n) {
        if d == n {
            continue;
        }
        result = result.exact_div(&cyclotomic_poly(d));
    }
    result
}

/// Shared context of a cyclotomic field: the order and the modulus.
#[derive(Debug)]
pub struct CycCtx {
    pub order: u32,
    pub modulus: QPoly,
}

impl CycCtx {
    pub fn new(order: u32) -> Arc<CycCtx> {
        Arc::new(CycCtx {
            order,
            modulus: cyclotomic_poly(order),
        })
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("cyclotomic modulus nonzero")
    }
}

/// An element of a cyclotomic field, as a polynomial in the root `z`
/// reduced below the modulus degree.
///
/// Rational constants may be represented without a context (`ctx: None`);
/// they embed into any cyclotomic field, which lets `Zero::zero` and
/// `One::one` exist without a field handle. Equality ignores the context:
/// the reduced coefficient vector is canonical.
#[derive(Clone, Debug)]
pub struct Cyclo {
    coeffs: Vec<BigRational>,
    ctx: Option<Arc<CycCtx>>,
}

impl Cyclo {
    pub fn constant(c: BigRational) -> Self {
        Cyclo {
            coeffs: if c.is_zero() { vec![] } else { vec![c] },
            ctx: None,
        }
    }

    /// The root of unity itself, reduced if the field is small (s = 1, 2).
    pub fn root(ctx: &Arc<CycCtx>) -> Self {
        Cyclo::from_poly(QPoly::x(), Some(ctx.clone()))
    }

    fn from_poly(p: QPoly, ctx: Option<Arc<CycCtx>>) -> Self {
        let p = match &ctx {
            Some(c) if p.degree().is_some_and(|d| d >= c.degree()) => p.divrem(&c.modulus).1,
            _ => p,
        };
        Cyclo {
            coeffs: p.coeffs().to_vec(),
            ctx,
        }
    }

    fn poly(&self) -> QPoly {
        QPoly::from_coeffs(self.coeffs.clone())
    }

    fn merged_ctx(&self, other: &Cyclo) -> Option<Arc<CycCtx>> {
        match (&self.ctx, &other.ctx) {
            (Some(a), Some(b)) => {
                debug_assert_eq!(a.order, b.order, "mixed cyclotomic fields");
                Some(a.clone())
            }
            (Some(a), None) => Some(a.clone()),
            (None, Some(b)) => Some(b.clone()),
            (None, None) => None,
        }
    }
}

impl PartialEq for Cyclo {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for Cyclo {}

impl fmt::Display for Cyclo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly().render("z"))
    }
}

impl Add for Cyclo {
    type Output = Cyclo;
    fn add(self, rhs: Cyclo) -> Cyclo {
        let ctx = self.merged_ctx(&rhs);
        Cyclo::from_poly(self.poly().add(&rhs.poly()), ctx)
    }
}

impl Sub for Cyclo {
    type Output = Cyclo;
    fn sub(self, rhs: Cyclo) -> Cyclo {
        let ctx = self.merged_ctx(&rhs);
        Cyclo::from_poly(self.poly().sub(&rhs.poly()), ctx)
    }
}

impl Mul for Cyclo {
    type Output = Cyclo;
    fn mul(self, rhs: Cyclo) -> Cyclo {
        let ctx = self.merged_ctx(&rhs);
        Cyclo::from_poly(self.poly().mul(&rhs.poly()), ctx)
    }
}

impl Div for Cyclo {
    type Output = Cyclo;
    fn div(self, rhs: Cyclo) -> Cyclo {
        let inv = rhs.inv();
        self * inv
    }
}

impl Neg for Cyclo {
    type Output = Cyclo;
    fn neg(self) -> Cyclo {
        Cyclo {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
            ctx: self.ctx,
        }
    }
}

impl Zero for Cyclo {
    fn zero() -> Self {
        Cyclo::constant(BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Cyclo {
    fn one() -> Self {
        Cyclo::constant(BigRational::one())
    }
}

impl Scalar for Cyclo {
    fn from_rat(r: &BigRational) -> Self {
        Cyclo::constant(r.clone())
    }

    fn inv(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero cyclotomic element");
        match &self.ctx {
            None => Cyclo::constant(self.coeffs[0].recip()),
            Some(ctx) => {
                if self.coeffs.len() == 1 {
                    return Cyclo {
                        coeffs: vec![self.coeffs[0].recip()],
                        ctx: Some(ctx.clone()),
                    };
                }
                // u*self + v*Phi = 1 (the modulus is irreducible, so the
                // gcd with any nonzero reduced element is 1)
                let (g, u, _) = self.poly().ext_gcd(&ctx.modulus);
                assert!(g.is_one(), "cyclotomic inverse: gcd not 1");
                Cyclo::from_poly(u, Some(ctx.clone()))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::scalar_pow;

    #[test]
    fn small_cyclotomic_polys() {
        assert_eq!(cyclotomic_poly(1), QPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), QPoly::from_i64(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), QPoly::from_i64(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), QPoly::from_i64(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), QPoly::from_i64(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), QPoly::from_i64(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn root_is_primitive() {
        for s in 1..=12u32 {
            let ctx = CycCtx::new(s);
            let z = Cyclo::root(&ctx);
            assert_eq!(scalar_pow(&z, s as i64), Cyclo::one(), "z^{s} = 1");
            for t in 1..s as i64 {
                assert_ne!(scalar_pow(&z, t), Cyclo::one(), "z^{t} != 1 below {s}");
            }
        }
    }

    #[test]
    fn inverse_in_degree() {
        let ctx = CycCtx::new(5);
        let z = Cyclo::root(&ctx);
        let a = z.clone() + Cyclo::from_rat(&BigRational::from_integer(2.into()));
        assert_eq!(a.clone() * a.inv(), Cyclo::one());
        // negative powers of the root wrap around
        assert_eq!(scalar_pow(&z, -1), scalar_pow(&z, 4));
    }

    #[test]
    fn small_orders_collapse_to_rationals() {
        let ctx1 = CycCtx::new(1);
        assert_eq!(Cyclo::root(&ctx1), Cyclo::one());
        let ctx2 = CycCtx::new(2);
        assert_eq!(Cyclo::root(&ctx2), -Cyclo::one());
    }
}
