//! Randomized exact-arithmetic properties: field axioms for the three
//! scalar types, canonicalization, q-power laws, and bilinearity of the
//! algebra product.

use num::{BigInt, BigRational};
use num_traits::{One, Zero};
use proptest::prelude::*;
use zigzag_core::algebra::{form, nakayama, AlgElem, BASIS};
use zigzag_core::cyclotomic::{CycCtx, Cyclo};
use zigzag_core::ratfun::{QPoly, RatFun};
use zigzag_core::scalar::{scalar_pow, Scalar};
use zigzag_core::Field;

fn rats() -> impl Strategy<Value = BigRational> {
    (-40i64..40, 1i64..12)
        .prop_map(|(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
}

/// Small rational functions: sums of signed powers of q.
fn ratfuns() -> impl Strategy<Value = RatFun> {
    proptest::collection::vec((rats(), -4i64..5), 0..4).prop_map(|terms| {
        let mut num = QPoly::zero();
        let mut shift = 0i64;
        for (_, e) in &terms {
            shift = shift.min(*e);
        }
        for (c, e) in &terms {
            num = num.add(&QPoly::monomial(c.clone(), (e - shift) as usize));
        }
        RatFun::new(num, QPoly::monomial(BigRational::one(), (-shift) as usize))
    })
}

fn cyclos(s: u32) -> impl Strategy<Value = Cyclo> {
    let ctx = CycCtx::new(s);
    proptest::collection::vec((rats(), 0i64..(s as i64)), 0..4).prop_map(move |terms| {
        let z = Cyclo::root(&ctx);
        let mut acc = Cyclo::zero();
        for (c, e) in terms {
            acc = acc + Cyclo::from_rat(&c) * scalar_pow(&z, e);
        }
        acc
    })
}

fn field_axioms<K: Scalar>(a: K, b: K, c: K) {
    // associativity and commutativity
    assert_eq!(
        (a.clone() + b.clone()) + c.clone(),
        a.clone() + (b.clone() + c.clone())
    );
    assert_eq!(
        (a.clone() * b.clone()) * c.clone(),
        a.clone() * (b.clone() * c.clone())
    );
    assert_eq!(a.clone() + b.clone(), b.clone() + a.clone());
    assert_eq!(a.clone() * b.clone(), b.clone() * a.clone());
    // distributivity
    assert_eq!(
        a.clone() * (b.clone() + c.clone()),
        a.clone() * b.clone() + a.clone() * c.clone()
    );
    // cancellation is exact in canonical form
    assert!((a.clone() - a.clone()).is_zero());
    assert!((b.clone() - b.clone()).is_zero());
    // inverses of nonzero elements
    if !a.is_zero() {
        assert_eq!(a.clone() * a.inv(), K::one());
        assert_eq!(a.clone() / a.clone(), K::one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rational_field_axioms(a in rats(), b in rats(), c in rats()) {
        field_axioms(a, b, c);
    }

    #[test]
    fn rational_function_field_axioms(a in ratfuns(), b in ratfuns(), c in ratfuns()) {
        field_axioms(a, b, c);
    }

    #[test]
    fn cyclotomic_field_axioms_s5(a in cyclos(5), b in cyclos(5), c in cyclos(5)) {
        field_axioms(a, b, c);
    }

    #[test]
    fn cyclotomic_field_axioms_s6(a in cyclos(6), b in cyclos(6), c in cyclos(6)) {
        field_axioms(a, b, c);
    }

    #[test]
    fn q_power_is_additive(e1 in -12i64..12, e2 in -12i64..12) {
        let f = Field::cyclotomic(5).unwrap();
        prop_assert_eq!(f.q_pow(e1) * f.q_pow(e2), f.q_pow(e1 + e2));
        let g = Field::generic();
        prop_assert_eq!(g.q_pow(e1) * g.q_pow(e2), g.q_pow(e1 + e2));
    }

    #[test]
    fn algebra_product_is_bilinear_and_frobenius(
        xs in proptest::collection::vec((rats(), 0usize..8), 1..4),
        ys in proptest::collection::vec((rats(), 0usize..8), 1..4),
    ) {
        let f = Field::rational_int(3).unwrap();
        let mk = |terms: &[(BigRational, usize)]| {
            let mut e = AlgElem::zero();
            for (c, i) in terms {
                e.add_term(c.clone(), BASIS[*i]);
            }
            e
        };
        let x = mk(&xs);
        let y = mk(&ys);
        // bilinearity against a basis decomposition
        let mut by_parts = AlgElem::zero();
        for (c, i) in &xs {
            let part = AlgElem::term(c.clone(), BASIS[*i]).mul(&f, &y);
            by_parts = by_parts.add(&part);
        }
        prop_assert_eq!(x.mul(&f, &y), by_parts);
        // Frobenius identity extends linearly
        prop_assert_eq!(form(&f, &x, &y), form(&f, &y, &nakayama(&f, &x)));
    }
}
