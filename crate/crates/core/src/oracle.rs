//! Independent ground truth: the reduced bar cochain complex.
//!
//! Cochains live on composable sequences of non-idempotent basis paths,
//! with values in the corner of the algebra matching the sequence's
//! endpoints (degree 0 cochains assign a loop-corner value to each
//! vertex). The Hochschild differential, cup product and circle products
//! are evaluated directly from their defining formulas, with the reduced
//! (normalized) convention: inserting an idempotent kills a term.
//!
//! Sequence counts grow as `2 * 3^m`, so the supported window is `m <= 7`.

use crate::algebra::{AlgElem, BasisElem, Vertex};
use crate::bv::Comparison;
use crate::complexes::{Cochain, Complexes, HHClass};
use crate::field::Field;
use crate::linalg::SparseMat;
use crate::resolution::{bar_sequences, g_tensor, gens, GenIdx};
use crate::scalar::Scalar;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("degree {0} exceeds the supported bar-complex window {1}")]
    WindowExceeded(usize, usize),
}

/// The two basis paths spanning the corner `e_o A_q e_t`, in basis order.
pub fn corner_elems(o: Vertex, t: Vertex) -> [BasisElem; 2] {
    match (o.value(), t.value()) {
        (1, 1) => [BasisElem::e(1), BasisElem::ab(1)],
        (2, 2) => [BasisElem::e(2), BasisElem::ab(2)],
        (1, 2) => [BasisElem::a(1), BasisElem::b(2)],
        (2, 1) => [BasisElem::a(2), BasisElem::b(1)],
        _ => unreachable!(),
    }
}

/// The slot list of the degree-m cochain space: sequences for `m >= 1`,
/// the two vertices for `m = 0`. Each slot carries a 2-dimensional corner.
struct SeqBasis {
    /// (source vertex, target vertex, sequence)
    slots: Vec<(Vertex, Vertex, Vec<BasisElem>)>,
    index: HashMap<Vec<BasisElem>, usize>,
}

impl SeqBasis {
    fn new(m: usize) -> Self {
        let slots: Vec<(Vertex, Vertex, Vec<BasisElem>)> = if m == 0 {
            vec![
                (Vertex::V1, Vertex::V1, Vec::new()),
                (Vertex::V2, Vertex::V2, Vec::new()),
            ]
        } else {
            bar_sequences(m)
                .into_iter()
                .map(|s| (s[0].source(), s[s.len() - 1].target(), s))
                .collect()
        };
        let index = if m == 0 {
            HashMap::new()
        } else {
            slots
                .iter()
                .enumerate()
                .map(|(i, (_, _, s))| (s.clone(), i))
                .collect()
        };
        SeqBasis { slots, index }
    }

    fn dim(&self) -> usize {
        2 * self.slots.len()
    }
}

/// The reduced bar cochain complex of `A_q` with its structure maps.
pub struct Oracle<K: Scalar> {
    pub field: Field<K>,
    pub window: usize,
    bases: HashMap<usize, SeqBasis>,
    delta_ranks: HashMap<usize, usize>,
}

impl<K: Scalar> Oracle<K> {
    pub fn new(field: Field<K>) -> Self {
        Oracle {
            field,
            window: 7,
            bases: HashMap::new(),
            delta_ranks: HashMap::new(),
        }
    }

    pub fn with_window(field: Field<K>, window: usize) -> Self {
        let mut o = Oracle::new(field);
        o.window = window;
        o
    }

    fn basis(&mut self, m: usize) -> &SeqBasis {
        self.bases.entry(m).or_insert_with(|| SeqBasis::new(m))
    }

    /// Dimension of the degree-m cochain space (`4 * 3^m / ... = 2 *`
    /// number of sequences).
    pub fn cochain_dim(&mut self, m: usize) -> usize {
        self.basis(m).dim()
    }

    /// The matrix of the Hochschild differential
    /// `delta^m: C^m -> C^{m+1}`.
    pub fn delta_matrix(&mut self, m: usize) -> SparseMat<K> {
        let field = self.field.clone();
        let src = SeqBasis::new(m);
        let tgt = SeqBasis::new(m + 1);
        let mut mat = SparseMat::zero(tgt.dim(), src.dim());
        let src_slot = |seq: &[BasisElem], o: Vertex| -> usize {
            if m == 0 {
                o.idx()
            } else {
                src.index[seq]
            }
        };
        for (t_slot, (to, tt, seq)) in tgt.slots.iter().enumerate() {
            let n = seq.len(); // m + 1
            let t_corner = corner_elems(*to, *tt);
            // head: a_1 * f(a_2..a_n)
            {
                let tail = &seq[1..];
                let s_o = seq[0].target();
                let slot = src_slot(tail, s_o);
                let s_corner = corner_elems(s_o, *tt);
                for (sc, src_b) in s_corner.iter().enumerate() {
                    if let Some((coef, prod)) =
                        crate::algebra::basis_mul(&field, seq[0], *src_b)
                    {
                        let tc = t_corner.iter().position(|b| *b == prod).unwrap();
                        mat.add_entry(2 * t_slot + tc, 2 * slot + sc, coef);
                    }
                }
            }
            // interior merges with alternating signs
            for k in 0..n - 1 {
                if let Some((coef, merged)) =
                    crate::algebra::basis_mul(&field, seq[k], seq[k + 1])
                {
                    debug_assert!(!merged.is_idempotent());
                    let mut msec = Vec::with_capacity(n - 1);
                    msec.extend_from_slice(&seq[..k]);
                    msec.push(merged);
                    msec.extend_from_slice(&seq[k + 2..]);
                    let slot = src_slot(&msec, *to);
                    let sign = if k % 2 == 0 { -K::one() } else { K::one() };
                    for tc in 0..2 {
                        mat.add_entry(
                            2 * t_slot + tc,
                            2 * slot + tc,
                            sign.clone() * coef.clone(),
                        );
                    }
                }
            }
            // tail: (-1)^n f(a_1..a_{n-1}) * a_n
            {
                let init = &seq[..n - 1];
                let s_t = seq[n - 1].source();
                let slot = src_slot(init, s_t);
                let s_corner = corner_elems(*to, s_t);
                let sign = if n % 2 == 0 { K::one() } else { -K::one() };
                for (sc, src_b) in s_corner.iter().enumerate() {
                    if let Some((coef, prod)) =
                        crate::algebra::basis_mul(&field, *src_b, seq[n - 1])
                    {
                        let tc = t_corner.iter().position(|b| *b == prod).unwrap();
                        mat.add_entry(2 * t_slot + tc, 2 * slot + sc, sign.clone() * coef);
                    }
                }
            }
        }
        mat
    }

    pub fn rank_delta(&mut self, m: usize) -> usize {
        if let Some(r) = self.delta_ranks.get(&m) {
            return *r;
        }
        let r = self.delta_matrix(m).rank();
        self.delta_ranks.insert(m, r);
        r
    }

    /// `dim HH^m` from the bar complex:
    /// `dim ker delta^m - rank delta^{m-1}`.
    pub fn hh_dim_oracle(&mut self, m: usize) -> Result<usize, OracleError> {
        if m > self.window {
            return Err(OracleError::WindowExceeded(m, self.window));
        }
        let dim = self.cochain_dim(m);
        let prev = if m == 0 { 0 } else { self.rank_delta(m - 1) };
        Ok(dim - self.rank_delta(m) - prev)
    }

    /// `delta . delta = 0` on the full cochain basis at degree m.
    pub fn delta_squared_zero(&mut self, m: usize) -> bool {
        let d1 = self.delta_matrix(m);
        let d2 = self.delta_matrix(m + 1);
        for col in 0..d1.ncols {
            let v = vec![(col, K::one())];
            let w = d1.apply(&v);
            if !d2.apply(&w).is_empty() {
                return false;
            }
        }
        true
    }
}

/// A minimal-resolution cochain transported to the bar side
/// (`f . Psi_m`), with its values materialized on every reduced sequence.
pub struct TransportedCochain<K: Scalar> {
    pub degree: usize,
    vals: HashMap<Vec<BasisElem>, AlgElem<K>>,
    vert_vals: [AlgElem<K>; 2],
}

impl<K: Scalar> TransportedCochain<K> {
    /// A bar cochain given directly by its values on reduced sequences
    /// (degree >= 1).
    pub fn from_values(degree: usize, vals: HashMap<Vec<BasisElem>, AlgElem<K>>) -> Self {
        assert!(degree >= 1);
        TransportedCochain {
            degree,
            vals,
            vert_vals: [AlgElem::zero(), AlgElem::zero()],
        }
    }

    /// A degree-0 bar cochain given by its loop-corner values at the two
    /// vertices.
    pub fn from_vertex_values(vert_vals: [AlgElem<K>; 2]) -> Self {
        TransportedCochain {
            degree: 0,
            vals: HashMap::new(),
            vert_vals,
        }
    }

    pub fn new(cmp: &mut Comparison<K>, f: &Cochain<K>) -> Self {
        let m = f.degree();
        let mut vals = HashMap::new();
        let mut vert_vals = [AlgElem::zero(), AlgElem::zero()];
        if m == 0 {
            for v in [Vertex::V1, Vertex::V2] {
                vert_vals[v.idx()] =
                    f.value_at(GenIdx::new(0, v.value() as i64, 0).unwrap());
            }
        } else {
            for seq in bar_sequences(m) {
                let val = cmp.transported_value(f, &seq);
                if !val.is_zero() {
                    vals.insert(seq, val);
                }
            }
        }
        TransportedCochain {
            degree: m,
            vals,
            vert_vals,
        }
    }

    /// Value on a sequence; for degree 0 supply the vertex.
    pub fn eval(&self, seq: &[BasisElem], vertex: Vertex) -> AlgElem<K> {
        if self.degree == 0 {
            debug_assert!(seq.is_empty());
            return self.vert_vals[vertex.idx()].clone();
        }
        self.vals.get(seq).cloned().unwrap_or_else(AlgElem::zero)
    }
}

/// `(x circle_i y)(word)`: substitute y's value on the window at position i
/// into x, with the normalized convention (idempotent components vanish).
/// For degree-0 y the insertion takes the loop components of y's value at
/// the connecting vertex.
pub fn circle_i_eval<K: Scalar>(
    _field: &Field<K>,
    x: &TransportedCochain<K>,
    i: usize,
    y: &TransportedCochain<K>,
    word: &[BasisElem],
    start: Vertex,
) -> AlgElem<K> {
    let mx = x.degree;
    let ly = y.degree;
    debug_assert!(i >= 1 && i <= mx);
    debug_assert_eq!(word.len(), mx + ly - 1);
    let mut out = AlgElem::zero();
    if ly >= 1 {
        let window = &word[i - 1..i - 1 + ly];
        let val = y.eval(window, start);
        for (c, coef) in val.iter() {
            if c.is_idempotent() {
                continue;
            }
            let mut arg = Vec::with_capacity(mx);
            arg.extend_from_slice(&word[..i - 1]);
            arg.push(*c);
            arg.extend_from_slice(&word[i - 1 + ly..]);
            let v = x.eval(&arg, start);
            out = out.add(&v.scale(coef));
        }
    } else {
        // connecting vertex for the insertion slot
        let v = if i == 1 {
            if word.is_empty() {
                start
            } else {
                word[0].source()
            }
        } else {
            word[i - 2].target()
        };
        let val = y.eval(&[], v);
        for (c, coef) in val.iter() {
            if c.is_idempotent() {
                continue;
            }
            // only loop components survive the relative structure
            if c.source() != v || c.target() != v {
                continue;
            }
            let mut arg = Vec::with_capacity(mx);
            arg.extend_from_slice(&word[..i - 1]);
            arg.push(*c);
            arg.extend_from_slice(&word[i - 1..]);
            let xv = x.eval(&arg, start);
            out = out.add(&xv.scale(coef));
        }
    }
    out
}

/// `(x circle y)(word) = sum_i (-1)^{(l-1)(i-1)} (x circle_i y)(word)`.
pub fn circle_eval<K: Scalar>(
    _field: &Field<K>,
    x: &TransportedCochain<K>,
    y: &TransportedCochain<K>,
    word: &[BasisElem],
    start: Vertex,
) -> AlgElem<K> {
    let mx = x.degree;
    let ly = y.degree;
    let mut out = AlgElem::zero();
    if mx == 0 {
        return out;
    }
    for i in 1..=mx {
        let sign_exp = (ly as i64 - 1) * (i as i64 - 1);
        let term = circle_i_eval(_field, x, i, y, word, start);
        if sign_exp.rem_euclid(2) == 0 {
            out = out.add(&term);
        } else {
            out = out.sub(&term);
        }
    }
    out
}

/// Evaluate the Gerstenhaber bracket `[x, y]` of two transported cochains
/// on a word.
pub fn bracket_eval<K: Scalar>(
    field: &Field<K>,
    x: &TransportedCochain<K>,
    y: &TransportedCochain<K>,
    word: &[BasisElem],
    start: Vertex,
) -> AlgElem<K> {
    let first = circle_eval(field, x, y, word, start);
    let second = circle_eval(field, y, x, word, start);
    let sign_exp = (x.degree as i64 - 1) * (y.degree as i64 - 1);
    if sign_exp.rem_euclid(2) == 0 {
        first.sub(&second)
    } else {
        first.add(&second)
    }
}

/// Pull a bar-side evaluation back to a minimal-resolution cochain through
/// `Phi`: evaluate on the g-tensor words of each degree-m generator.
pub fn pull_back<K: Scalar>(
    field: &Field<K>,
    m: usize,
    mut value: impl FnMut(&[BasisElem], Vertex) -> AlgElem<K>,
) -> Cochain<K> {
    let mut out = Cochain::zero(m);
    for g in gens(m) {
        let mut val = AlgElem::zero();
        for (bk, cw) in g_tensor::<K>(field, g).iter() {
            val = val.add(&value(&bk.mid, g.origin()).scale(cw));
        }
        let val = val.corner(g.origin(), g.target());
        for (b, c) in val.iter() {
            out.add_term(c.clone(), *b, g);
        }
    }
    out
}

/// The bracket of two classes computed entirely through the bar complex:
/// transport the representatives, apply the circle-product formula, pull
/// back, reduce.
pub fn bracket_oracle<K: Scalar>(
    ctx: &mut Complexes<K>,
    cmp: &mut Comparison<K>,
    window: usize,
    x: &HHClass<K>,
    y: &HHClass<K>,
) -> Result<HHClass<K>, OracleError> {
    let mx = x.degree;
    let my = y.degree;
    if mx + my == 0 {
        return Ok(ctx.zero_class(0));
    }
    let target = mx + my - 1;
    if mx.max(my).max(target) > window {
        return Err(OracleError::WindowExceeded(target, window));
    }
    let tx = TransportedCochain::new(cmp, &x.rep);
    let ty = TransportedCochain::new(cmp, &y.rep);
    let field = ctx.field.clone();
    let c = pull_back(&field, target, |word, start| {
        bracket_eval(&field, &tx, &ty, word, start)
    });
    Ok(ctx
        .class_of(&c)
        .expect("oracle bracket of cocycles is a cocycle"))
}

/// The cup product of two classes through the bar complex.
pub fn cup_oracle<K: Scalar>(
    ctx: &mut Complexes<K>,
    cmp: &mut Comparison<K>,
    window: usize,
    x: &HHClass<K>,
    y: &HHClass<K>,
) -> Result<HHClass<K>, OracleError> {
    let mx = x.degree;
    let my = y.degree;
    if mx + my > window {
        return Err(OracleError::WindowExceeded(mx + my, window));
    }
    let tx = TransportedCochain::new(cmp, &x.rep);
    let ty = TransportedCochain::new(cmp, &y.rep);
    let field = ctx.field.clone();
    let c = pull_back(&field, mx + my, |word, start| {
        let xa = tx.eval(&word[..mx], start);
        if xa.is_zero() {
            return AlgElem::zero();
        }
        let mid = if mx == 0 {
            start
        } else {
            word[mx - 1].target()
        };
        let ya = ty.eval(&word[mx..], mid);
        xa.mul(&field, &ya)
    });
    Ok(ctx
        .class_of(&c)
        .expect("oracle cup of cocycles is a cocycle"))
}
