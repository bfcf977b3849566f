//! The coefficient-scalar abstraction.
//!
//! Everything downstream (the algebra, the complexes, the linear algebra)
//! is generic over a [`Scalar`]: an exact field element with decidable
//! equality. Three concrete scalar types are provided:
//!
//! - [`num::BigRational`] for the rational field (q a nonzero rational),
//! - [`crate::ratfun::RatFun`] for the rational function field in q,
//! - [`crate::cyclotomic::Cyclo`] for cyclotomic fields (q a root of unity).

use num::BigRational;
use num_traits::{One, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An exact field element. All arithmetic is exact and every value has a
/// canonical form, so `==` is a sound zero/equality test.
pub trait Scalar:
    Clone
    + PartialEq
    + Eq
    + Debug
    + Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + Zero
    + One
    + Send
    + Sync
    + 'static
{
    /// Embed a rational constant.
    fn from_rat(r: &BigRational) -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rat(&BigRational::from_integer(n.into()))
    }
}

impl Scalar for BigRational {
    fn from_rat(r: &BigRational) -> Self {
        r.clone()
    }

    fn inv(&self) -> Self {
        self.recip()
    }
}

/// Integer-exponent power of a scalar, with exact inversion for negative
/// exponents.
pub fn scalar_pow<K: Scalar>(base: &K, e: i64) -> K {
    let b = if e < 0 { base.inv() } else { base.clone() };
    let mut acc = K::one();
    for _ in 0..e.unsigned_abs() {
        acc = acc * b.clone();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::BigInt;

    fn rat(p: i64, q: i64) -> BigRational {
        BigRational::new(BigInt::from(p), BigInt::from(q))
    }

    #[test]
    fn rational_scalar_basics() {
        let a = rat(3, 2);
        assert_eq!(a.clone() * a.inv(), BigRational::one());
        assert_eq!(scalar_pow(&rat(2, 1), -1), rat(1, 2));
        assert_eq!(scalar_pow(&rat(2, 1), 3), rat(8, 1));
        assert_eq!(scalar_pow(&rat(5, 7), 0), BigRational::one());
    }

    #[test]
    fn cancellation_is_exact() {
        let a = rat(22, 7);
        assert!((a.clone() - a).is_zero());
    }
}
