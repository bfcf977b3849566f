//! The quantum zigzag algebra `A_q` of type A~1.
//!
//! Two vertices, arrows `a_i: i -> i+1` and `b_i: i+1 -> i` (indices mod 2,
//! paths composed left to right), relations
//! `a1 a2, a2 a1, b1 b2, b2 b1, a1 b1 + q b2 a2, a2 b2 + q b1 a1`.
//! The eight basis paths `e_i, a_i, b_i, a_i b_i` span `A_q`; every product
//! of basis elements is a scalar multiple of a basis element or zero.

use crate::field::Field;
use crate::scalar::Scalar;

use std::collections::BTreeMap;
use std::fmt::Write as _;

/// One of the two quiver vertices, numbered 1 and 2. All index arithmetic
/// on vertices and arrow subscripts is modulo 2 with representatives {1,2}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(u8);

impl Vertex {
    pub const V1: Vertex = Vertex(1);
    pub const V2: Vertex = Vertex(2);

    /// Normalize an arbitrary integer index into {1, 2} modulo 2.
    pub fn norm(i: i64) -> Vertex {
        Vertex(((i - 1).rem_euclid(2) + 1) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn other(self) -> Vertex {
        Vertex::norm(self.0 as i64 + 1)
    }

    /// Zero-based index, for table lookups.
    pub fn idx(self) -> usize {
        (self.0 - 1) as usize
    }
}

impl std::fmt::Display for Vertex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A basis path of `A_q`. The derived order is the ordering
/// `e1 < e2 < a1 < a2 < b1 < b2 < a1b1 < a2b2` used throughout.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisElem {
    /// Idempotent `e_i` at vertex i.
    E(Vertex),
    /// Arrow `a_i: i -> i+1`.
    A(Vertex),
    /// Arrow `b_i: i+1 -> i`.
    B(Vertex),
    /// The length-2 cycle `a_i b_i: i -> i`.
    AB(Vertex),
}

pub use BasisElem::{A, AB, B, E};

/// All eight basis elements in the canonical order.
pub const BASIS: [BasisElem; 8] = [
    E(Vertex::V1),
    E(Vertex::V2),
    A(Vertex::V1),
    A(Vertex::V2),
    B(Vertex::V1),
    B(Vertex::V2),
    AB(Vertex::V1),
    AB(Vertex::V2),
];

impl BasisElem {
    pub fn a(i: i64) -> BasisElem {
        A(Vertex::norm(i))
    }

    pub fn b(i: i64) -> BasisElem {
        B(Vertex::norm(i))
    }

    pub fn e(i: i64) -> BasisElem {
        E(Vertex::norm(i))
    }

    pub fn ab(i: i64) -> BasisElem {
        AB(Vertex::norm(i))
    }

    pub fn source(self) -> Vertex {
        match self {
            E(i) | A(i) | AB(i) => i,
            B(i) => i.other(),
        }
    }

    pub fn target(self) -> Vertex {
        match self {
            E(i) | B(i) | AB(i) => i,
            A(i) => i.other(),
        }
    }

    pub fn is_idempotent(self) -> bool {
        matches!(self, E(_))
    }

    pub fn path_len(self) -> usize {
        match self {
            E(_) => 0,
            A(_) | B(_) => 1,
            AB(_) => 2,
        }
    }

    /// Position in the canonical order, 0..8.
    pub fn rank(self) -> usize {
        BASIS.iter().position(|b| *b == self).unwrap()
    }

    pub fn render(self) -> String {
        match self {
            E(i) => format!("e{i}"),
            A(i) => format!("a{i}"),
            B(i) => format!("b{i}"),
            AB(i) => format!("a{i}b{i}"),
        }
    }

    /// The dual under the q = -1 symmetrizing form: `e* = ab`, `a* = b`,
    /// `b* = a`, `(ab)* = e` (same vertex subscript).
    pub fn star(self) -> BasisElem {
        match self {
            E(i) => AB(i),
            A(i) => B(i),
            B(i) => A(i),
            AB(i) => E(i),
        }
    }
}

/// Product of two basis elements: `None` for zero, otherwise a scalar
/// multiple of a single basis element.
pub fn basis_mul<K: Scalar>(
    field: &Field<K>,
    x: BasisElem,
    y: BasisElem,
) -> Option<(K, BasisElem)> {
    if x.target() != y.source() {
        return None;
    }
    if x.is_idempotent() {
        return Some((K::one(), y));
    }
    if y.is_idempotent() {
        return Some((K::one(), x));
    }
    if x.path_len() + y.path_len() > 2 {
        // the radical cubes to zero
        return None;
    }
    match (x, y) {
        (A(i), B(j)) if i == j => Some((K::one(), AB(i))),
        // b_i a_i = -q^{-1} a_{i+1} b_{i+1}, from a_{i+1} b_{i+1} + q b_i a_i = 0
        (B(i), A(j)) if i == j => Some((-field.q_inv().clone(), AB(i.other()))),
        // consecutive arrows of the same kind are relations
        _ => None,
    }
}

/// A sparse element of `A_q` over the basis. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgElem<K: Scalar> {
    terms: BTreeMap<BasisElem, K>,
}

impl<K: Scalar> Default for AlgElem<K> {
    fn default() -> Self {
        AlgElem::zero()
    }
}

impl<K: Scalar> AlgElem<K> {
    pub fn zero() -> Self {
        AlgElem {
            terms: BTreeMap::new(),
        }
    }

    pub fn basis(b: BasisElem) -> Self {
        AlgElem::term(K::one(), b)
    }

    pub fn term(c: K, b: BasisElem) -> Self {
        let mut e = AlgElem::zero();
        e.add_term(c, b);
        e
    }

    /// The unit 1 = e1 + e2.
    pub fn unit() -> Self {
        let mut e = AlgElem::zero();
        e.add_term(K::one(), E(Vertex::V1));
        e.add_term(K::one(), E(Vertex::V2));
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: BasisElem) -> K {
        self.terms.get(&b).cloned().unwrap_or_else(K::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisElem, &K)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, c: K, b: BasisElem) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(b).or_insert_with(K::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&b);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in rhs.iter() {
            out.add_term(c.clone(), *b);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in rhs.iter() {
            out.add_term(-c.clone(), *b);
        }
        out
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut out = AlgElem::zero();
        for (b, a) in self.iter() {
            out.add_term(a.clone() * c.clone(), *b);
        }
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&(-K::one()))
    }

    /// Bilinear extension of the basis product table.
    pub fn mul(&self, field: &Field<K>, rhs: &Self) -> Self {
        let mut out = AlgElem::zero();
        for (x, cx) in self.iter() {
            for (y, cy) in rhs.iter() {
                if let Some((c, b)) = basis_mul(field, *x, *y) {
                    out.add_term(cx.clone() * cy.clone() * c, b);
                }
            }
        }
        out
    }

    /// Project onto the corner `e_s A_q e_t`.
    pub fn corner(&self, s: Vertex, t: Vertex) -> Self {
        let mut out = AlgElem::zero();
        for (b, c) in self.iter() {
            if b.source() == s && b.target() == t {
                out.add_term(c.clone(), *b);
            }
        }
        out
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        let mut entries: Vec<_> = self.terms.iter().collect();
        entries.sort_by_key(|(b, _)| b.rank());
        for (b, c) in entries {
            let cs = c.to_string();
            let (neg, abs) = match cs.strip_prefix('-') {
                Some(rest) if !rest.contains(" - ") && !rest.contains(" + ") => {
                    (true, rest.to_string())
                }
                _ => (false, cs),
            };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if abs == "1" {
                out.push_str(&b.render());
            } else {
                let wrapped = if abs.contains(' ') || abs.contains('/') {
                    format!("({abs})")
                } else {
                    abs
                };
                let _ = write!(out, "{}*{}", wrapped, b.render());
            }
        }
        out
    }
}

/// The trace functional: the sum of the coefficients of `a1b1` and `a2b2`.
pub fn lambda<K: Scalar>(x: &AlgElem<K>) -> K {
    x.coeff(AB(Vertex::V1)) + x.coeff(AB(Vertex::V2))
}

/// The Frobenius bilinear form `<x, y> = lambda(x y)`. On basis pairs whose
/// product is exactly `a1b1` or `a2b2` this is 1, matching the table
/// definition; linearity forces the values on the remaining pairs.
pub fn form<K: Scalar>(field: &Field<K>, x: &AlgElem<K>, y: &AlgElem<K>) -> K {
    lambda(&x.mul(field, y))
}

/// The Nakayama automorphism on a basis element: fixes idempotents and
/// cycles, scales `a_i` by -q and `b_i` by -q^{-1}.
pub fn nakayama_basis<K: Scalar>(field: &Field<K>, b: BasisElem) -> (K, BasisElem) {
    match b {
        E(_) | AB(_) => (K::one(), b),
        A(_) => (-field.q().clone(), b),
        B(_) => (-field.q_inv().clone(), b),
    }
}

/// Linear extension of the Nakayama automorphism.
pub fn nakayama<K: Scalar>(field: &Field<K>, x: &AlgElem<K>) -> AlgElem<K> {
    let mut out = AlgElem::zero();
    for (b, c) in x.iter() {
        let (s, nb) = nakayama_basis(field, *b);
        out.add_term(c.clone() * s, nb);
    }
    out
}

/// The dual-basis map of the form: `form(a, tilde(a)) = 1` and
/// `form(a, tilde(b)) = 0` for distinct basis elements a, b.
pub fn tilde<K: Scalar>(field: &Field<K>, b: BasisElem) -> (K, BasisElem) {
    match b {
        E(i) => (K::one(), AB(i)),
        A(i) => (K::one(), B(i)),
        B(i) => (-field.q().clone(), A(i)),
        AB(i) => (K::one(), E(i)),
    }
}

/// The defining relations of the ideal I, as elements of the path algebra
/// evaluated inside `A_q` (each must be zero).
pub fn relation_values<K: Scalar>(field: &Field<K>) -> Vec<(String, AlgElem<K>)> {
    let ab = |x: BasisElem, y: BasisElem| AlgElem::basis(x).mul(field, &AlgElem::basis(y));
    let a1 = A(Vertex::V1);
    let a2 = A(Vertex::V2);
    let b1 = B(Vertex::V1);
    let b2 = B(Vertex::V2);
    vec![
        ("a1 a2".into(), ab(a1, a2)),
        ("a2 a1".into(), ab(a2, a1)),
        ("b1 b2".into(), ab(b1, b2)),
        ("b2 b1".into(), ab(b2, b1)),
        (
            "a1 b1 + q b2 a2".into(),
            ab(a1, b1).add(&ab(b2, a2).scale(field.q())),
        ),
        (
            "a2 b2 + q b1 a1".into(),
            ab(a2, b2).add(&ab(b1, a1).scale(field.q())),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use num::BigRational;
    use num_traits::Zero;

    fn fq2() -> Field<BigRational> {
        Field::rational_int(2).unwrap()
    }

    #[test]
    fn basis_order_and_endpoints() {
        let ranks: Vec<usize> = BASIS.iter().map(|b| b.rank()).collect();
        assert_eq!(ranks, (0..8).collect::<Vec<_>>());
        assert_eq!(BasisElem::a(1).source(), Vertex::V1);
        assert_eq!(BasisElem::a(1).target(), Vertex::V2);
        assert_eq!(BasisElem::b(1).source(), Vertex::V2);
        assert_eq!(BasisElem::b(1).target(), Vertex::V1);
        assert_eq!(BasisElem::ab(2).source(), Vertex::V2);
        assert_eq!(BasisElem::ab(2).target(), Vertex::V2);
        // index normalization
        assert_eq!(BasisElem::a(-1), BasisElem::a(1));
        assert_eq!(BasisElem::b(0), BasisElem::b(2));
        assert_eq!(Vertex::norm(3), Vertex::V1);
    }

    #[test]
    fn product_table_spots() {
        let f = fq2();
        // a1 b1 = a1b1
        assert_eq!(
            basis_mul(&f, BasisElem::a(1), BasisElem::b(1)),
            Some((BigRational::from_integer(1.into()), BasisElem::ab(1)))
        );
        // b2 a2 = -q^{-1} a1b1
        assert_eq!(
            basis_mul(&f, BasisElem::b(2), BasisElem::a(2)),
            Some((
                -BigRational::new(1.into(), 2.into()),
                BasisElem::ab(1)
            ))
        );
        // a1 a2 = 0
        assert_eq!(basis_mul(&f, BasisElem::a(1), BasisElem::a(2)), None);
        // e2 absorbs
        assert_eq!(
            basis_mul(&f, BasisElem::a(1), BasisElem::e(2)),
            Some((BigRational::from_integer(1.into()), BasisElem::a(1)))
        );
        // non-composable
        assert_eq!(basis_mul(&f, BasisElem::a(1), BasisElem::b(2)), None);
    }

    #[test]
    fn relations_vanish() {
        let f = fq2();
        for (name, v) in relation_values(&f) {
            assert!(v.is_zero(), "relation {name} is nonzero: {}", v.render());
        }
    }

    #[test]
    fn associativity_on_all_triples() {
        let f = fq2();
        for x in BASIS {
            for y in BASIS {
                for z in BASIS {
                    let xe = AlgElem::<BigRational>::basis(x);
                    let ye = AlgElem::basis(y);
                    let ze = AlgElem::basis(z);
                    let left = xe.mul(&f, &ye).mul(&f, &ze);
                    let right = xe.mul(&f, &ye.mul(&f, &ze));
                    assert_eq!(left, right, "assoc fails on {x:?},{y:?},{z:?}");
                }
            }
        }
    }

    #[test]
    fn nakayama_is_automorphism() {
        let f = fq2();
        for x in BASIS {
            for y in BASIS {
                let xy = AlgElem::<BigRational>::basis(x).mul(&f, &AlgElem::basis(y));
                let lhs = nakayama(&f, &xy);
                let rhs = nakayama(&f, &AlgElem::basis(x)).mul(&f, &nakayama(&f, &AlgElem::basis(y)));
                assert_eq!(lhs, rhs);
            }
        }
        // fixes the unit
        assert_eq!(nakayama(&f, &AlgElem::unit()), AlgElem::unit());
    }

    #[test]
    fn form_values_and_frobenius_identity() {
        let f = fq2();
        let a1 = AlgElem::<BigRational>::basis(BasisElem::a(1));
        let b1 = AlgElem::basis(BasisElem::b(1));
        let e1 = AlgElem::basis(BasisElem::e(1));
        let e2 = AlgElem::basis(BasisElem::e(2));
        assert_eq!(form(&f, &a1, &b1), BigRational::from_integer(1.into()));
        // <b1, a1> = -q^{-1}
        assert_eq!(form(&f, &b1, &a1), -BigRational::new(1.into(), 2.into()));
        assert_eq!(form(&f, &e1, &e2), BigRational::zero());
        // <x, y> = <y, nakayama(x)> on all basis pairs
        for x in BASIS {
            for y in BASIS {
                let xe = AlgElem::basis(x);
                let ye = AlgElem::basis(y);
                assert_eq!(form(&f, &xe, &ye), form(&f, &ye, &nakayama(&f, &xe)));
            }
        }
    }

    #[test]
    fn tilde_is_dual_basis() {
        let f = fq2();
        for x in BASIS {
            for y in BASIS {
                let (c, ty) = tilde(&f, y);
                let t = AlgElem::term(c, ty);
                let expected = if x == y {
                    BigRational::from_integer(1.into())
                } else {
                    BigRational::zero()
                };
                assert_eq!(form(&f, &AlgElem::basis(x), &t), expected, "pair {x:?},{y:?}");
            }
        }
        // spot values from the tables
        assert_eq!(tilde(&f, BasisElem::b(1)).0, BigRational::from_integer((-2).into()));
        assert_eq!(tilde(&f, BasisElem::b(1)).1, BasisElem::a(1));
        assert_eq!(tilde(&f, BasisElem::e(2)), (BigRational::from_integer(1.into()), BasisElem::ab(2)));
        assert_eq!(tilde(&f, BasisElem::ab(2)), (BigRational::from_integer(1.into()), BasisElem::e(2)));
    }

    #[test]
    fn symmetric_at_minus_one() {
        let f = Field::rational_int(-1).unwrap();
        for x in BASIS {
            for y in BASIS {
                let xe = AlgElem::<BigRational>::basis(x);
                let ye = AlgElem::basis(y);
                assert_eq!(form(&f, &xe, &ye), form(&f, &ye, &xe));
                // matches the star table: <x, y> = 1 iff y = x*
                let expected = if y == x.star() {
                    BigRational::from_integer(1.into())
                } else {
                    BigRational::zero()
                };
                assert_eq!(form(&f, &xe, &ye), expected);
            }
        }
    }

    #[test]
    fn rendering() {
        let f = fq2();
        let mut x = AlgElem::<BigRational>::basis(BasisElem::ab(1));
        let minus_q_inv = -f.q_inv().clone();
        x.add_term(minus_q_inv, BasisElem::ab(2));
        assert_eq!(x.render(), "a1b1 - (1/2)*a2b2");
    }
}
