//! The minimal projective bimodule resolution `P = (P_m, d_m)` of `A_q`
//! and the reduced bar resolution, together with the generator tensors
//! `g^m_(i,j)` that express the comparison morphism into the bar side.
//!
//! Degree-m generators are indexed by `f^m_(i,j)` with `i` a vertex and
//! `0 <= j <= m`; out-of-range `j` denotes the zero symbol, and terms
//! referring to it vanish silently (the differential formulas rely on
//! this convention).

use crate::algebra::{basis_mul, AlgElem, BasisElem, Vertex};
use crate::field::Field;
use crate::scalar::Scalar;

use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ResolutionError {
    #[error("expected an element of homological degree >= 1, got {0}")]
    DegreeMismatch(usize),
}

/// Index of a resolution generator `f^m_(i,j)` (and of the bar-side tensor
/// `g^m_(i,j)`). Constructed only for in-range `j`; the constructor returns
/// `None` for the zero symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenIdx {
    m: u16,
    i: Vertex,
    j: u16,
}

impl GenIdx {
    /// Normalizes the vertex index mod 2; `None` when `j` is out of range
    /// (the zero symbol) or the degree is negative.
    pub fn new(m: i64, i: i64, j: i64) -> Option<GenIdx> {
        if m < 0 || j < 0 || j > m {
            return None;
        }
        Some(GenIdx {
            m: m as u16,
            i: Vertex::norm(i),
            j: j as u16,
        })
    }

    pub fn degree(self) -> usize {
        self.m as usize
    }

    pub fn i(self) -> Vertex {
        self.i
    }

    pub fn j(self) -> usize {
        self.j as usize
    }

    /// The common source vertex of the paths in `f^m_(i,j)`.
    pub fn origin(self) -> Vertex {
        self.i
    }

    /// The common target vertex: each of the m arrows switches vertex,
    /// so the target is `i + m` mod 2.
    pub fn target(self) -> Vertex {
        Vertex::norm(self.i.value() as i64 + self.m as i64)
    }

    pub fn render(self) -> String {
        format!("f{}_({},{})", self.m, self.i, self.j)
    }
}

/// The full generator set `F^m`, of size `2(m+1)`, ordered by `(j, i)`.
pub fn gens(m: usize) -> Vec<GenIdx> {
    let mut out = Vec::with_capacity(2 * (m + 1));
    for j in 0..=m as i64 {
        for i in [1i64, 2] {
            out.push(GenIdx::new(m as i64, i, j).unwrap());
        }
    }
    out
}

/// A key of the free bimodule `P_m`: `left (x) f (x) right` where the outer
/// factors are basis paths with `target(left) = o(f)` and
/// `t(f) = source(right)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct PKey {
    pub left: BasisElem,
    pub gen: GenIdx,
    pub right: BasisElem,
}

/// Sparse element of `P_m` in left-basis form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PElem<K: Scalar> {
    degree: usize,
    terms: BTreeMap<PKey, K>,
}

impl<K: Scalar> PElem<K> {
    pub fn zero(degree: usize) -> Self {
        PElem {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The generator `o(f) (x) t(f)` of the summand indexed by `f`.
    pub fn generator(f: GenIdx) -> Self {
        let mut e = PElem::zero(f.degree());
        e.add_term(
            K::one(),
            PKey {
                left: BasisElem::E(f.origin()),
                gen: f,
                right: BasisElem::E(f.target()),
            },
        );
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&PKey, &K)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, c: K, key: PKey) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(key.left.target(), key.gen.origin(), "left corner mismatch");
        debug_assert_eq!(key.gen.target(), key.right.source(), "right corner mismatch");
        debug_assert_eq!(key.gen.degree(), self.degree);
        let entry = self.terms.entry(key).or_insert_with(K::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(c.clone(), *k);
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&(-K::one())))
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut out = PElem::zero(self.degree);
        for (k, a) in self.iter() {
            out.add_term(a.clone() * c.clone(), *k);
        }
        out
    }

    /// Right action of a basis path.
    pub fn mul_right(&self, field: &Field<K>, b: BasisElem) -> Self {
        let mut out = PElem::zero(self.degree);
        for (k, c) in self.iter() {
            if let Some((s, r)) = basis_mul(field, k.right, b) {
                out.add_term(
                    c.clone() * s,
                    PKey {
                        left: k.left,
                        gen: k.gen,
                        right: r,
                    },
                );
            }
        }
        out
    }

    /// Left action of a basis path.
    pub fn mul_left(&self, field: &Field<K>, b: BasisElem) -> Self {
        let mut out = PElem::zero(self.degree);
        for (k, c) in self.iter() {
            if let Some((s, l)) = basis_mul(field, b, k.left) {
                out.add_term(
                    c.clone() * s,
                    PKey {
                        left: l,
                        gen: k.gen,
                        right: k.right,
                    },
                );
            }
        }
        out
    }

    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, c)| {
                format!(
                    "{} * {} (x) {} (x) {}",
                    c,
                    k.left.render(),
                    k.gen.render(),
                    k.right.render()
                )
            })
            .collect();
        parts.join("  +  ")
    }
}

/// The differential `d_m: P_m -> P_{m-1}` on a generator, as the four-term
/// formula; dropped terms correspond to the zero symbol. The same formula
/// specializes to `d_1(o(f) (x) t(f)) = f (x) t(f) - o(f) (x) f`.
fn d_on_generator<K: Scalar>(field: &Field<K>, f: GenIdx) -> PElem<K> {
    let m = f.degree() as i64;
    debug_assert!(m >= 1);
    let i = f.i().value() as i64;
    let j = f.j() as i64;
    let sign = if m % 2 == 0 { K::one() } else { -K::one() };
    let mut out = PElem::zero(f.degree() - 1);

    // a_i (x) t(f^{m-1}_(i+1, j-1))
    if let Some(g) = GenIdx::new(m - 1, i + 1, j - 1) {
        out.add_term(
            K::one(),
            PKey {
                left: BasisElem::a(i),
                gen: g,
                right: BasisElem::E(g.target()),
            },
        );
    }
    // (-1)^m q^{m-j} o(f^{m-1}_(i, j-1)) (x) a_{i-m-1}
    if let Some(g) = GenIdx::new(m - 1, i, j - 1) {
        out.add_term(
            sign.clone() * field.q_pow(m - j),
            PKey {
                left: BasisElem::E(g.origin()),
                gen: g,
                right: BasisElem::a(i - m - 1),
            },
        );
    }
    // q^j b_{i-1} (x) t(f^{m-1}_(i-1, j))
    if let Some(g) = GenIdx::new(m - 1, i - 1, j) {
        out.add_term(
            field.q_pow(j),
            PKey {
                left: BasisElem::b(i - 1),
                gen: g,
                right: BasisElem::E(g.target()),
            },
        );
    }
    // (-1)^m o(f^{m-1}_(i, j)) (x) b_{i-m}
    if let Some(g) = GenIdx::new(m - 1, i, j) {
        out.add_term(
            sign,
            PKey {
                left: BasisElem::E(g.origin()),
                gen: g,
                right: BasisElem::b(i - m),
            },
        );
    }
    out
}

/// Bimodule-linear extension of the differential to all of `P_m`.
pub fn apply_d<K: Scalar>(field: &Field<K>, x: &PElem<K>) -> Result<PElem<K>, ResolutionError> {
    if x.degree() == 0 {
        return Err(ResolutionError::DegreeMismatch(0));
    }
    let mut out = PElem::zero(x.degree() - 1);
    for (k, c) in x.iter() {
        let dg = d_on_generator(field, k.gen);
        let moved = dg.mul_left(field, k.left).mul_right(field, k.right);
        out = out.add(&moved.scale(c));
    }
    Ok(out)
}

/// The augmentation `d_0: P_0 -> A_q` (multiplication map).
pub fn apply_d0<K: Scalar>(field: &Field<K>, x: &PElem<K>) -> AlgElem<K> {
    debug_assert_eq!(x.degree(), 0);
    let mut out = AlgElem::zero();
    for (k, c) in x.iter() {
        if let Some((s, b)) = basis_mul(field, k.left, k.right) {
            out.add_term(c.clone() * s, b);
        }
    }
    out
}

/// A key of the reduced bar bimodule `B_m = A (x)_E Abar^{(x)_E m} (x)_E A`:
/// outer basis paths around a composable sequence of non-idempotent basis
/// paths.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BarKey {
    pub left: BasisElem,
    pub mid: Vec<BasisElem>,
    pub right: BasisElem,
}

impl BarKey {
    pub fn is_valid(&self) -> bool {
        let mut at = self.left.target();
        for b in &self.mid {
            if b.is_idempotent() || b.source() != at {
                return false;
            }
            at = b.target();
        }
        at == self.right.source()
    }
}

/// Sparse element of the reduced bar resolution in degree `mid.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BarElem<K: Scalar> {
    degree: usize,
    terms: BTreeMap<BarKey, K>,
}

impl<K: Scalar> BarElem<K> {
    pub fn zero(degree: usize) -> Self {
        BarElem {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BarKey, &K)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, c: K, key: BarKey) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(key.mid.len(), self.degree);
        debug_assert!(key.is_valid(), "ill-formed bar key {key:?}");
        let entry = self.terms.entry(key.clone()).or_insert_with(K::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        debug_assert_eq!(self.degree, rhs.degree);
        let mut out = self.clone();
        for (k, c) in rhs.iter() {
            out.add_term(c.clone(), k.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.scale(&(-K::one())))
    }

    pub fn scale(&self, c: &K) -> Self {
        let mut out = BarElem::zero(self.degree);
        for (k, a) in self.iter() {
            out.add_term(a.clone() * c.clone(), k.clone());
        }
        out
    }

    pub fn mul_right(&self, field: &Field<K>, b: BasisElem) -> Self {
        let mut out = BarElem::zero(self.degree);
        for (k, c) in self.iter() {
            if let Some((s, r)) = basis_mul(field, k.right, b) {
                out.add_term(
                    c.clone() * s,
                    BarKey {
                        left: k.left,
                        mid: k.mid.clone(),
                        right: r,
                    },
                );
            }
        }
        out
    }

    pub fn mul_left(&self, field: &Field<K>, b: BasisElem) -> Self {
        let mut out = BarElem::zero(self.degree);
        for (k, c) in self.iter() {
            if let Some((s, l)) = basis_mul(field, b, k.left) {
                out.add_term(
                    c.clone() * s,
                    BarKey {
                        left: l,
                        mid: k.mid.clone(),
                        right: k.right,
                    },
                );
            }
        }
        out
    }
}

/// The reduced bar differential `dbar_m: B_m -> B_{m-1}` for `m >= 1`.
/// Middle products of arrows never hit an idempotent, so the reduced
/// convention only drops zero products.
pub fn apply_dbar<K: Scalar>(field: &Field<K>, x: &BarElem<K>) -> Result<BarElem<K>, ResolutionError> {
    let m = x.degree();
    if m == 0 {
        return Err(ResolutionError::DegreeMismatch(0));
    }
    let mut out = BarElem::zero(m - 1);
    for (k, c) in x.iter() {
        // first entry absorbed into the left coefficient
        if let Some((s, l)) = basis_mul(field, k.left, k.mid[0]) {
            out.add_term(
                c.clone() * s,
                BarKey {
                    left: l,
                    mid: k.mid[1..].to_vec(),
                    right: k.right,
                },
            );
        }
        // interior merges with alternating signs
        for pos in 0..m - 1 {
            if let Some((s, merged)) = basis_mul(field, k.mid[pos], k.mid[pos + 1]) {
                debug_assert!(!merged.is_idempotent());
                let sign = if pos % 2 == 0 { -K::one() } else { K::one() };
                let mut mid = Vec::with_capacity(m - 1);
                mid.extend_from_slice(&k.mid[..pos]);
                mid.push(merged);
                mid.extend_from_slice(&k.mid[pos + 2..]);
                out.add_term(
                    c.clone() * s * sign,
                    BarKey {
                        left: k.left,
                        mid,
                        right: k.right,
                    },
                );
            }
        }
        // last entry absorbed into the right coefficient
        if let Some((s, r)) = basis_mul(field, k.mid[m - 1], k.right) {
            let sign = if m % 2 == 0 { K::one() } else { -K::one() };
            out.add_term(
                c.clone() * s * sign,
                BarKey {
                    left: k.left,
                    mid: k.mid[..m - 1].to_vec(),
                    right: r,
                },
            );
        }
    }
    Ok(out)
}

/// The augmentation `dbar_0: B_0 -> A_q`.
pub fn apply_dbar0<K: Scalar>(field: &Field<K>, x: &BarElem<K>) -> AlgElem<K> {
    debug_assert_eq!(x.degree(), 0);
    let mut out = AlgElem::zero();
    for (k, c) in x.iter() {
        if let Some((s, b)) = basis_mul(field, k.left, k.right) {
            out.add_term(c.clone() * s, b);
        }
    }
    out
}

/// All composable sequences of non-idempotent basis paths of length `m`,
/// in lexicographic order of the basis ranking. These index the reduced
/// bar basis (each vertex emits three such paths, so the count is
/// `2 * 3^m`).
pub fn bar_sequences(m: usize) -> Vec<Vec<BasisElem>> {
    assert!(m >= 1, "length-0 sequences carry no vertex information");
    let letters: Vec<BasisElem> = crate::algebra::BASIS
        .iter()
        .copied()
        .filter(|b| !b.is_idempotent())
        .collect();
    let mut out: Vec<Vec<BasisElem>> = letters.iter().map(|b| vec![*b]).collect();
    for _ in 1..m {
        let mut next = Vec::with_capacity(out.len() * 3);
        for seq in &out {
            let at = seq.last().unwrap().target();
            for b in &letters {
                if b.source() == at {
                    let mut s = seq.clone();
                    s.push(*b);
                    next.push(s);
                }
            }
        }
        out = next;
    }
    out
}

/// The bar-side generator tensor `o(g) (x) g^m_(i,j) (x) t(g)` defined by
/// the recursion
/// `g^m_(i,j) = a_i (x) g^{m-1}_(i+1,j-1) + q^j b_{i-1} (x) g^{m-1}_(i-1,j)`
/// with `g^1_(i,1) = a_i` and `g^1_(i+1,0) = b_i`; in degree 0 it is the
/// idempotent pair.
pub fn g_tensor<K: Scalar>(field: &Field<K>, g: GenIdx) -> BarElem<K> {
    let mut out = BarElem::zero(g.degree());
    let left = BasisElem::E(g.origin());
    let right = BasisElem::E(g.target());
    for (c, mid) in g_words(field, g) {
        out.add_term(
            c,
            BarKey {
                left,
                mid,
                right,
            },
        );
    }
    out
}

/// The arrow words of `g^m_(i,j)` with their coefficients.
fn g_words<K: Scalar>(field: &Field<K>, g: GenIdx) -> Vec<(K, Vec<BasisElem>)> {
    let m = g.degree() as i64;
    let i = g.i().value() as i64;
    let j = g.j() as i64;
    if m == 0 {
        return vec![(K::one(), Vec::new())];
    }
    if m == 1 {
        return if j == 1 {
            vec![(K::one(), vec![BasisElem::a(i)])]
        } else {
            vec![(K::one(), vec![BasisElem::b(i - 1)])]
        };
    }
    let mut out = Vec::new();
    if let Some(sub) = GenIdx::new(m - 1, i + 1, j - 1) {
        for (c, mut w) in g_words::<K>(field, sub) {
            w.insert(0, BasisElem::a(i));
            out.push((c, w));
        }
    }
    if let Some(sub) = GenIdx::new(m - 1, i - 1, j) {
        let qj = field.q_pow(j);
        for (c, mut w) in g_words::<K>(field, sub) {
            w.insert(0, BasisElem::b(i - 1));
            out.push((c * qj.clone(), w));
        }
    }
    out
}
