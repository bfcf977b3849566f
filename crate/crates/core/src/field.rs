//! Coefficient-field handles: the choice of q and its classification.

use crate::cyclotomic::{CycCtx, Cyclo};
use crate::ratfun::RatFun;
use crate::scalar::{scalar_pow, Scalar};
use num::{BigInt, BigRational};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// The user-facing choice of the deformation parameter q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QSpec {
    /// q transcendental: coefficients in the rational function field.
    Generic,
    /// q a fixed nonzero rational number.
    Rational(BigRational),
    /// q a fixed primitive s-th root of unity.
    RootOfUnity(u32),
}

/// The case split driving every dimension formula: q not a root of unity,
/// q = 1 or -1, or q a primitive s-th root of unity with s > 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum QClass {
    NotRootOfUnity,
    PlusMinusOne,
    PrimitiveRoot(u32),
}

impl QClass {
    /// The multiplicative order of q: None means infinite order.
    /// For `PlusMinusOne` the order is at most 2, and exponent divisibility
    /// by 2 is what the rank conditions test, so 2 is the right value for
    /// q = -1 and 1 for q = 1; the caller distinguishes via [`Field::ord_q`].
    pub fn is_root_of_unity(&self) -> bool {
        !matches!(self, QClass::NotRootOfUnity)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    #[error("q must be nonzero")]
    ZeroQ,
    #[error("root-of-unity order must be at least 1")]
    BadOrder,
}

impl fmt::Display for QSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QSpec::Generic => write!(f, "generic"),
            QSpec::Rational(r) => write!(f, "rational:{}/{}", r.numer(), r.denom()),
            QSpec::RootOfUnity(s) => write!(f, "zeta:{s}"),
        }
    }
}

impl FromStr for QSpec {
    type Err = String;

    /// Parse the CLI serialization: `generic`, `rational:p/r`, `zeta:s`.
    fn from_str(s: &str) -> Result<Self, String> {
        if s == "generic" {
            return Ok(QSpec::Generic);
        }
        if let Some(body) = s.strip_prefix("rational:") {
            let (p, r) = match body.split_once('/') {
                Some((p, r)) => (p, r),
                None => (body, "1"),
            };
            let p: BigInt = p.parse().map_err(|_| format!("bad numerator {p:?}"))?;
            let r: BigInt = r.parse().map_err(|_| format!("bad denominator {r:?}"))?;
            if r.is_zero() {
                return Err("zero denominator".into());
            }
            let q = BigRational::new(p, r);
            if q.is_zero() {
                return Err("q must be nonzero".into());
            }
            return Ok(QSpec::Rational(q));
        }
        if let Some(body) = s.strip_prefix("zeta:") {
            let s: u32 = body.parse().map_err(|_| format!("bad order {body:?}"))?;
            if s == 0 {
                return Err("root-of-unity order must be at least 1".into());
            }
            return Ok(QSpec::RootOfUnity(s));
        }
        Err(format!(
            "unrecognized q spec {s:?} (expected generic | rational:p/r | zeta:s)"
        ))
    }
}

impl Serialize for QSpec {
    fn serialize<S: Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for QSpec {
    fn deserialize<D: Deserializer<'de>>(de: D) -> Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl QSpec {
    pub fn classify(&self) -> QClass {
        match self {
            QSpec::Generic => QClass::NotRootOfUnity,
            QSpec::Rational(r) => {
                if r.is_one() || (-r.clone()).is_one() {
                    QClass::PlusMinusOne
                } else {
                    QClass::NotRootOfUnity
                }
            }
            QSpec::RootOfUnity(s) if *s <= 2 => QClass::PlusMinusOne,
            QSpec::RootOfUnity(s) => QClass::PrimitiveRoot(*s),
        }
    }
}

/// A field handle: the scalar type plus the distinguished element q,
/// its inverse, and the classification. Read-only after construction.
#[derive(Clone, Debug)]
pub struct Field<K: Scalar> {
    spec: QSpec,
    class: QClass,
    q: K,
    q_inv: K,
}

impl Field<BigRational> {
    /// The rational field with q a fixed nonzero rational.
    pub fn rational(q: BigRational) -> Result<Self, FieldError> {
        if q.is_zero() {
            return Err(FieldError::ZeroQ);
        }
        let q_inv = q.recip();
        Ok(Field {
            spec: QSpec::Rational(q.clone()),
            class: QSpec::Rational(q.clone()).classify(),
            q,
            q_inv,
        })
    }

    pub fn rational_int(q: i64) -> Result<Self, FieldError> {
        Self::rational(BigRational::from_integer(q.into()))
    }
}

impl Field<RatFun> {
    /// The rational function field with q the indeterminate.
    pub fn generic() -> Self {
        let q = RatFun::q();
        let q_inv = q.inv();
        Field {
            spec: QSpec::Generic,
            class: QClass::NotRootOfUnity,
            q,
            q_inv,
        }
    }
}

impl Field<Cyclo> {
    /// The cyclotomic field with q a primitive s-th root of unity.
    pub fn cyclotomic(s: u32) -> Result<Self, FieldError> {
        if s == 0 {
            return Err(FieldError::BadOrder);
        }
        let ctx = CycCtx::new(s);
        let q = Cyclo::root(&ctx);
        let q_inv = q.inv();
        Ok(Field {
            spec: QSpec::RootOfUnity(s),
            class: QSpec::RootOfUnity(s).classify(),
            q,
            q_inv,
        })
    }
}

impl<K: Scalar> Field<K> {
    pub fn spec(&self) -> &QSpec {
        &self.spec
    }

    pub fn classify(&self) -> QClass {
        self.class
    }

    pub fn q(&self) -> &K {
        &self.q
    }

    pub fn q_inv(&self) -> &K {
        &self.q_inv
    }

    /// Exact q^e for any integer e; in a root-of-unity field the exponent
    /// is reduced modulo the order first.
    pub fn q_pow(&self, e: i64) -> K {
        let e = match &self.spec {
            QSpec::RootOfUnity(s) => e.rem_euclid(*s as i64),
            _ => e,
        };
        if e >= 0 {
            scalar_pow(&self.q, e)
        } else {
            scalar_pow(&self.q_inv, -e)
        }
    }

    pub fn one(&self) -> K {
        K::one()
    }

    pub fn zero(&self) -> K {
        K::zero()
    }

    pub fn int(&self, n: i64) -> K {
        K::from_int(n)
    }

    /// The multiplicative order of q, if finite.
    pub fn ord_q(&self) -> Option<u32> {
        match (&self.spec, self.class) {
            (QSpec::RootOfUnity(s), _) => Some(*s),
            (QSpec::Rational(_), QClass::PlusMinusOne) => {
                if self.q == K::one() {
                    Some(1)
                } else {
                    Some(2)
                }
            }
            _ => None,
        }
    }

    /// Does q equal the given integer?
    pub fn q_is(&self, n: i64) -> bool {
        self.q == K::from_int(n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_roundtrip() {
        for s in ["generic", "rational:3/2", "rational:-1/1", "zeta:6"] {
            let spec: QSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("rational:0/1".parse::<QSpec>().is_err());
        assert!("zeta:0".parse::<QSpec>().is_err());
        assert!("nonsense".parse::<QSpec>().is_err());
    }

    #[test]
    fn classification() {
        assert_eq!(
            "rational:-1/1".parse::<QSpec>().unwrap().classify(),
            QClass::PlusMinusOne
        );
        assert_eq!(
            "rational:3/2".parse::<QSpec>().unwrap().classify(),
            QClass::NotRootOfUnity
        );
        assert_eq!(QSpec::Generic.classify(), QClass::NotRootOfUnity);
        assert_eq!(QSpec::RootOfUnity(1).classify(), QClass::PlusMinusOne);
        assert_eq!(QSpec::RootOfUnity(2).classify(), QClass::PlusMinusOne);
        assert_eq!(QSpec::RootOfUnity(6).classify(), QClass::PrimitiveRoot(6));
    }

    #[test]
    fn q_pow_reduces_mod_order() {
        let f = Field::cyclotomic(4).unwrap();
        assert_eq!(f.q_pow(6), f.q_pow(2));
        assert_eq!(f.q_pow(4), f.one());
        assert_eq!(f.q_pow(-1), f.q_pow(3));
        let g = Field::rational_int(2).unwrap();
        assert_eq!(g.q_pow(-1), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn field_errors() {
        assert_eq!(
            Field::rational(BigRational::zero()).unwrap_err(),
            FieldError::ZeroQ
        );
        assert_eq!(Field::cyclotomic(0).unwrap_err(), FieldError::BadOrder);
    }

    #[test]
    fn q_is_minus_one_detection() {
        assert!(Field::rational_int(-1).unwrap().q_is(-1));
        assert!(Field::cyclotomic(2).unwrap().q_is(-1));
        assert!(!Field::cyclotomic(4).unwrap().q_is(-1));
        assert!(!Field::generic().q_is(-1));
    }
}
