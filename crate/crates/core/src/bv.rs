//! Comparison with the reduced bar resolution and the Batalin-Vilkovisky
//! structure.
//!
//! A weak self-homotopy `t` of the minimal resolution (right-module maps
//! with `d t + t d = id`, `t t = 0`) drives two comparison chain maps:
//! `Phi` into the reduced bar resolution, given on generators by the
//! `g`-tensors, and `Psi` back, defined by the recursion
//! `Psi_m = t_{m-1} . Psi_{m-1} . dbar_m` and memoized on reduced
//! sequences.
//!
//! The BV operator is evaluated on the bar side by the cyclic-sum formula
//! and transported: `Delta(f) = Delta(f . Psi_m) . Phi_{m-1}`. At `q = -1`
//! the algebra is symmetric and the sum runs over the non-idempotent basis
//! with the star duals; otherwise the twisted formula runs over the basis
//! elements with non-idempotent duals, inserting the tilde dual and
//! applying the Nakayama automorphism to the wrapped-around arguments. The
//! Gerstenhaber bracket is recovered from the BV identity.

use crate::algebra::{lambda, nakayama_basis, tilde, AlgElem, BasisElem};
use crate::complexes::{Cochain, Complexes, HHClass};
use crate::field::Field;
use crate::products::cup_classes;
use crate::resolution::{
    apply_d, apply_d0, apply_dbar, apply_dbar0, g_tensor, gens, BarElem, BarKey, GenIdx, PElem,
    PKey,
};
use crate::scalar::Scalar;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BvError {
    #[error("the BV operator lowers degree; degree-0 input has no image")]
    DegreeZero,
}

/// The contracting homotopy `t_{-1}: A_q -> P_0`, `e_i -> e_i (x) e_i`,
/// extended right-linearly.
pub fn homotopy_t_unit<K: Scalar>(_field: &Field<K>, x: &AlgElem<K>) -> PElem<K> {
    let mut out = PElem::zero(0);
    for (b, c) in x.iter() {
        let v = b.source();
        out.add_term(
            c.clone(),
            PKey {
                left: BasisElem::E(v),
                gen: GenIdx::new(0, v.value() as i64, 0).unwrap(),
                right: *b,
            },
        );
    }
    out
}

/// The weak self-homotopy `t_m: P_m -> P_{m+1}` on an element in left-basis
/// form, per the four generator rules, extended right-linearly:
///
/// 1. `t(o(f) (x) t(f)) = 0`;
/// 2. `t(b_i (x) t(f^m_(i,j))) = q^{-j} gen f^{m+1}_(i+1,j)`;
/// 3. `t(a_{i-1} (x) t(f^m_(i,j)))` is 0 for `j < m` and
///    `gen f^{m+1}_(i-1,j+1)` at `j = m`;
/// 4. `t(a_i b_i (x) t(f^m_(i,j)))` is `q^{-j} a_i (x) t(f^{m+1}_(i+1,j))`
///    for `j < m`, acquiring the extra term
///    `(-1)^m q^{-m} o(f^{m+1}_(i,m+1)) (x) b_{i+m}` at `j = m`.
pub fn homotopy_t<K: Scalar>(field: &Field<K>, x: &PElem<K>) -> PElem<K> {
    let m = x.degree() as i64;
    let mut out = PElem::zero(x.degree() + 1);
    for (k, c) in x.iter() {
        let i = k.gen.i().value() as i64;
        let j = k.gen.j() as i64;
        let image: PElem<K> = match k.left {
            BasisElem::E(_) => continue,
            BasisElem::B(_) => {
                // left factor is b_i with target i
                let g = GenIdx::new(m + 1, i + 1, j).unwrap();
                PElem::generator(g).scale(&field.q_pow(-j))
            }
            BasisElem::A(_) => {
                if j < m {
                    continue;
                }
                let g = GenIdx::new(m + 1, i - 1, j + 1).unwrap();
                PElem::generator(g)
            }
            BasisElem::AB(_) => {
                let mut e = PElem::zero((m + 1) as usize);
                let g1 = GenIdx::new(m + 1, i + 1, j).unwrap();
                e.add_term(
                    field.q_pow(-j),
                    PKey {
                        left: BasisElem::a(i),
                        gen: g1,
                        right: BasisElem::E(g1.target()),
                    },
                );
                if j == m {
                    let g2 = GenIdx::new(m + 1, i, m + 1).unwrap();
                    let sign = if m % 2 == 0 { K::one() } else { -K::one() };
                    e.add_term(
                        sign * field.q_pow(-m),
                        PKey {
                            left: BasisElem::E(g2.origin()),
                            gen: g2,
                            right: BasisElem::b(i + m),
                        },
                    );
                }
                e
            }
        };
        out = out.add(&image.mul_right(field, k.right).scale(c));
    }
    out
}

/// The bar-side homotopy `s_{-1}: A_q -> B_0`.
pub fn homotopy_s_unit<K: Scalar>(_field: &Field<K>, x: &AlgElem<K>) -> BarElem<K> {
    let mut out = BarElem::zero(0);
    for (b, c) in x.iter() {
        out.add_term(
            c.clone(),
            BarKey {
                left: BasisElem::E(b.source()),
                mid: Vec::new(),
                right: *b,
            },
        );
    }
    out
}

/// The bar-side homotopy `s_m`: prepend the left coefficient into the
/// tensor (terms whose left coefficient is an idempotent die in the
/// reduced complex), extended right-linearly.
pub fn homotopy_s<K: Scalar>(_field: &Field<K>, x: &BarElem<K>) -> BarElem<K> {
    let mut out = BarElem::zero(x.degree() + 1);
    for (k, c) in x.iter() {
        if k.left.is_idempotent() {
            continue;
        }
        let mut mid = Vec::with_capacity(k.mid.len() + 1);
        mid.push(k.left);
        mid.extend_from_slice(&k.mid);
        out.add_term(
            c.clone(),
            BarKey {
                left: BasisElem::E(k.left.source()),
                mid,
                right: k.right,
            },
        );
    }
    out
}

/// `Phi_m` applied to an arbitrary element of `P_m`: generators go to
/// their sandwiched g-tensors, extended bimodule-linearly.
pub fn phi<K: Scalar>(field: &Field<K>, x: &PElem<K>) -> BarElem<K> {
    let mut out = BarElem::zero(x.degree());
    for (k, c) in x.iter() {
        let t = g_tensor(field, k.gen)
            .mul_left(field, k.left)
            .mul_right(field, k.right)
            .scale(c);
        out = out.add(&t);
    }
    out
}

/// The comparison morphism `Psi` from the reduced bar resolution back to
/// the minimal resolution, computed by the defining recursion
/// `Psi_m = t_{m-1} . Psi_{m-1} . dbar_m` with memoization over reduced
/// sequences.
pub struct Comparison<K: Scalar> {
    pub field: Field<K>,
    memo: HashMap<Vec<BasisElem>, PElem<K>>,
}

impl<K: Scalar> Comparison<K> {
    pub fn new(field: Field<K>) -> Self {
        Comparison {
            field,
            memo: HashMap::new(),
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// `Psi_m` on the basis element `1 (x) mid (x) 1` (`m = mid.len() >= 1`).
    pub fn psi_mid(&mut self, mid: &[BasisElem]) -> PElem<K> {
        debug_assert!(!mid.is_empty());
        if let Some(v) = self.memo.get(mid) {
            return v.clone();
        }
        let field = self.field.clone();
        let m = mid.len();
        let bar = {
            let mut b = BarElem::zero(m);
            b.add_term(
                K::one(),
                BarKey {
                    left: BasisElem::E(mid[0].source()),
                    mid: mid.to_vec(),
                    right: BasisElem::E(mid[m - 1].target()),
                },
            );
            b
        };
        let boundary = apply_dbar(&field, &bar).expect("degree >= 1");
        let mut acc = PElem::zero(m - 1);
        for (k, c) in boundary.iter() {
            acc = acc.add(&self.psi_elem(k).scale(c));
        }
        let value = homotopy_t(&field, &acc);
        self.memo.insert(mid.to_vec(), value.clone());
        value
    }

    /// `Psi` on a general reduced bar key, by bimodule linearity.
    pub fn psi_elem(&mut self, key: &BarKey) -> PElem<K> {
        let field = self.field.clone();
        if key.mid.is_empty() {
            // Psi_0: the identification A (x)_E A -> P_0
            let v = key.left.target();
            let mut out = PElem::zero(0);
            out.add_term(
                K::one(),
                PKey {
                    left: key.left,
                    gen: GenIdx::new(0, v.value() as i64, 0).unwrap(),
                    right: key.right,
                },
            );
            return out;
        }
        self.psi_mid(&key.mid)
            .mul_left(&field, key.left)
            .mul_right(&field, key.right)
    }

    pub fn psi(&mut self, x: &BarElem<K>) -> PElem<K> {
        let mut out = PElem::zero(x.degree());
        for (k, c) in x.iter() {
            out = out.add(&self.psi_elem(k).scale(c));
        }
        out
    }

    /// The value of the transported bar cochain `f . Psi_m` on a reduced
    /// sequence (with unit outer factors).
    pub fn transported_value(&mut self, f: &Cochain<K>, seq: &[BasisElem]) -> AlgElem<K> {
        let field = self.field.clone();
        let p = if seq.is_empty() {
            unreachable!("transported_value needs a positive-length sequence")
        } else {
            self.psi_mid(seq)
        };
        let mut out = AlgElem::zero();
        for (k, c) in p.iter() {
            let fv = f.value_at(k.gen);
            if fv.is_zero() {
                continue;
            }
            let left = AlgElem::term(c.clone(), k.left);
            let val = left.mul(&field, &fv).mul(&field, &AlgElem::basis(k.right));
            out = out.add(&val);
        }
        out
    }
}

/// Is a sequence of basis elements consecutively composable?
fn composable(seq: &[BasisElem]) -> bool {
    seq.windows(2).all(|w| w[0].target() == w[1].source())
}

/// The bar-side cyclic-sum BV operator applied to a transported cochain,
/// pulled back through `Phi_{m-1}`: the resulting cochain of degree
/// `n - 1` on the minimal resolution.
pub fn bv_delta_cochain<K: Scalar>(cmp: &mut Comparison<K>, f: &Cochain<K>) -> Cochain<K> {
    let n = f.degree();
    assert!(n >= 1, "BV operator needs positive degree");
    let field = cmp.field.clone();
    let symmetric = field.q_is(-1);

    // insertion data: (inserted basis element, insertion coefficient,
    // output basis element)
    let insertions: Vec<(BasisElem, K, BasisElem)> = if symmetric {
        // sum over the non-idempotent basis, output the star dual
        crate::algebra::BASIS
            .iter()
            .filter(|b| !b.is_idempotent())
            .map(|b| (*b, K::one(), b.star()))
            .collect()
    } else {
        // sum over the basis elements with non-idempotent tilde duals,
        // insert the tilde dual, output the element itself
        crate::algebra::BASIS
            .iter()
            .filter(|b| !matches!(b, BasisElem::AB(_)))
            .map(|b| {
                let (c, tb) = tilde(&field, *b);
                (tb, c, *b)
            })
            .collect()
    };

    let mut out = Cochain::zero(n - 1);
    for gp in gens(n - 1) {
        let words = g_tensor::<K>(&field, gp);
        let mut val = AlgElem::zero();
        for (bk, cw) in words.iter() {
            let w = &bk.mid; // length n - 1
            for k in 1..=n {
                let sign = if (k * (n - 1)) % 2 == 0 {
                    K::one()
                } else {
                    -K::one()
                };
                let head = &w[k - 1..];
                let tail = &w[..k - 1];
                for (ins, ins_coef, out_elem) in &insertions {
                    let mut arg = Vec::with_capacity(n);
                    arg.extend_from_slice(head);
                    arg.push(*ins);
                    let mut coef = cw.clone() * sign.clone() * ins_coef.clone();
                    if symmetric {
                        arg.extend_from_slice(tail);
                    } else {
                        for t in tail {
                            let (nc, nb) = nakayama_basis(&field, *t);
                            coef = coef * nc;
                            arg.push(nb);
                        }
                    }
                    if !composable(&arg) {
                        continue;
                    }
                    let fv = cmp.transported_value(f, &arg);
                    let lam = lambda(&fv);
                    if lam.is_zero() {
                        continue;
                    }
                    val.add_term(lam * coef, *out_elem);
                }
            }
        }
        let val = val.corner(gp.origin(), gp.target());
        for (b, c) in val.iter() {
            out.add_term(c.clone(), *b, gp);
        }
    }
    out
}

/// The BV operator on a cohomology class of positive degree.
pub fn bv_delta<K: Scalar>(
    ctx: &mut Complexes<K>,
    cmp: &mut Comparison<K>,
    x: &HHClass<K>,
) -> Result<HHClass<K>, BvError> {
    if x.degree == 0 {
        return Err(BvError::DegreeZero);
    }
    if x.is_zero() {
        return Ok(ctx.zero_class(x.degree - 1));
    }
    let c = bv_delta_cochain(cmp, &x.rep);
    Ok(ctx
        .class_of(&c)
        .expect("the BV image of a cocycle is a cocycle"))
}

/// Delta extended by zero to degree 0.
pub fn bv_delta_or_zero<K: Scalar>(
    ctx: &mut Complexes<K>,
    cmp: &mut Comparison<K>,
    x: &HHClass<K>,
) -> HHClass<K> {
    if x.degree == 0 {
        // a degree -1 image does not exist; callers in the bracket identity
        // only combine this with other degree-(d-1) classes, so degree 0
        // inputs simply contribute nothing
        ctx.zero_class(0)
    } else {
        bv_delta(ctx, cmp, x).expect("positive degree")
    }
}

/// The Gerstenhaber bracket through the BV identity:
/// `[x, y] = -(-1)^{(|x|-1)|y|} (D(x cup y) - D(x) cup y - (-1)^{|x|} x cup D(y))`.
pub fn bracket<K: Scalar>(
    ctx: &mut Complexes<K>,
    cmp: &mut Comparison<K>,
    x: &HHClass<K>,
    y: &HHClass<K>,
) -> HHClass<K> {
    let mx = x.degree;
    let my = y.degree;
    if mx + my == 0 {
        return ctx.zero_class(0);
    }
    let target = mx + my - 1;
    let cup_xy = cup_classes(ctx, x, y);
    let d_cup = bv_delta(ctx, cmp, &cup_xy).expect("positive degree");
    let mut acc = d_cup;
    if mx >= 1 {
        let dx = bv_delta(ctx, cmp, x).expect("positive degree");
        let dx_y = cup_classes(ctx, &dx, y);
        acc = ctx.class_add(&acc, &ctx.class_scale(&dx_y, &(-K::one())));
    }
    if my >= 1 {
        let dy = bv_delta(ctx, cmp, y).expect("positive degree");
        let x_dy = cup_classes(ctx, x, &dy);
        let sign = if mx % 2 == 0 { -K::one() } else { K::one() };
        acc = ctx.class_add(&acc, &ctx.class_scale(&x_dy, &sign));
    }
    let outer = if ((mx as i64 - 1) * my as i64).rem_euclid(2) == 0 {
        -K::one()
    } else {
        K::one()
    };
    let out = ctx.class_scale(&acc, &outer);
    debug_assert_eq!(out.degree, target);
    out
}

/// `d_{m+1} t_m + t_{m-1} d_m = id` and `t t = 0` on every basis element
/// of `P_m`, for all degrees up to `mmax`. Returns the first failing
/// element, if any.
pub fn homotopy_laws_hold<K: Scalar>(field: &Field<K>, mmax: usize) -> Result<(), String> {
    // t_0 . t_{-1} = 0 and d_0 . t_{-1} = id on the algebra
    for b in crate::algebra::BASIS {
        let x = AlgElem::<K>::basis(b);
        let t = homotopy_t_unit(field, &x);
        if apply_d0(field, &t) != x {
            return Err(format!("d0 t-1 != id on {}", b.render()));
        }
        if !homotopy_t(field, &t).is_zero() {
            return Err(format!("t0 t-1 != 0 on {}", b.render()));
        }
    }
    for m in 0..=mmax {
        for g in gens(m) {
            for a in crate::algebra::BASIS {
                if a.target() != g.origin() {
                    continue;
                }
                for b in crate::algebra::BASIS {
                    if g.target() != b.source() {
                        continue;
                    }
                    let mut x = PElem::<K>::zero(m);
                    x.add_term(
                        K::one(),
                        PKey {
                            left: a,
                            gen: g,
                            right: b,
                        },
                    );
                    let tx = homotopy_t(field, &x);
                    let dtx = apply_d(field, &tx).expect("degree >= 1");
                    let tdx = if m == 0 {
                        homotopy_t_unit(field, &apply_d0(field, &x))
                    } else {
                        homotopy_t(field, &apply_d(field, &x).expect("degree >= 1"))
                    };
                    if dtx.add(&tdx) != x {
                        return Err(format!(
                            "homotopy identity fails on {} (x) {} (x) {}",
                            a.render(),
                            g.render(),
                            b.render()
                        ));
                    }
                    if !homotopy_t(field, &tx).is_zero() {
                        return Err(format!(
                            "t t != 0 on {} (x) {} (x) {}",
                            a.render(),
                            g.render(),
                            b.render()
                        ));
                    }
                }
            }
        }
    }
    Ok(())
}

/// `dbar_{m+1} s_m + s_{m-1} dbar_m = id` and `s s = 0` on reduced bar
/// basis elements with arbitrary left coefficients, up to `mmax`.
pub fn bar_homotopy_laws_hold<K: Scalar>(field: &Field<K>, mmax: usize) -> Result<(), String> {
    for b in crate::algebra::BASIS {
        let x = AlgElem::<K>::basis(b);
        let s = homotopy_s_unit(field, &x);
        if apply_dbar0(field, &s) != x {
            return Err(format!("dbar0 s-1 != id on {}", b.render()));
        }
        if !homotopy_s(field, &s).is_zero() {
            return Err(format!("s0 s-1 != 0 on {}", b.render()));
        }
    }
    for m in 0..=mmax {
        let mids: Vec<Vec<BasisElem>> = if m == 0 {
            vec![Vec::new()]
        } else {
            crate::resolution::bar_sequences(m)
        };
        for mid in mids {
            for a in crate::algebra::BASIS {
                let src_ok = match mid.first() {
                    Some(first) => a.target() == first.source(),
                    None => true,
                };
                if !src_ok {
                    continue;
                }
                let right = match mid.last() {
                    Some(last) => BasisElem::E(last.target()),
                    None => BasisElem::E(a.target()),
                };
                let mut x = BarElem::<K>::zero(m);
                x.add_term(
                    K::one(),
                    BarKey {
                        left: a,
                        mid: mid.clone(),
                        right,
                    },
                );
                let sx = homotopy_s(field, &x);
                let dsx = apply_dbar(field, &sx).expect("degree >= 1");
                let sdx = if m == 0 {
                    homotopy_s_unit(field, &apply_dbar0(field, &x))
                } else {
                    homotopy_s(field, &apply_dbar(field, &x).expect("degree >= 1"))
                };
                if dsx.add(&sdx) != x {
                    return Err(format!("bar homotopy identity fails at m={m}"));
                }
                if !homotopy_s(field, &sx).is_zero() {
                    return Err(format!("s s != 0 at m={m}"));
                }
            }
        }
    }
    Ok(())
}

/// `dbar_m . Phi_m = Phi_{m-1} . d_m` on all degree-m generators.
pub fn phi_chain_map_holds<K: Scalar>(field: &Field<K>, m: usize) -> Result<(), GenIdx> {
    assert!(m >= 1);
    for g in gens(m) {
        let p = PElem::<K>::generator(g);
        let lhs = apply_dbar(field, &phi(field, &p)).expect("degree >= 1");
        let rhs = phi(field, &apply_d(field, &p).expect("degree >= 1"));
        if lhs != rhs {
            return Err(g);
        }
    }
    Ok(())
}

/// `d_m . Psi_m = Psi_{m-1} . dbar_m` on all reduced sequences of length m.
pub fn psi_chain_map_holds<K: Scalar>(cmp: &mut Comparison<K>, m: usize) -> Result<(), Vec<BasisElem>> {
    assert!(m >= 1);
    let field = cmp.field.clone();
    for mid in crate::resolution::bar_sequences(m) {
        let mut bar = BarElem::<K>::zero(m);
        bar.add_term(
            K::one(),
            BarKey {
                left: BasisElem::E(mid[0].source()),
                mid: mid.clone(),
                right: BasisElem::E(mid[m - 1].target()),
            },
        );
        let psi = cmp.psi_elem(&BarKey {
            left: BasisElem::E(mid[0].source()),
            mid: mid.clone(),
            right: BasisElem::E(mid[m - 1].target()),
        });
        let boundary = apply_dbar(&field, &bar).expect("degree >= 1");
        let mut rhs = PElem::zero(m - 1);
        for (k, c) in boundary.iter() {
            rhs = rhs.add(&cmp.psi_elem(k).scale(c));
        }
        if apply_d(&field, &psi).expect("degree >= 1") != rhs {
            return Err(mid);
        }
    }
    Ok(())
}

/// `Psi . Phi` induces the identity on `HH^m`: pulling a class through
/// `Phi` after transporting by `Psi` returns the same class.
pub fn psi_phi_identity_on_hh<K: Scalar>(
    ctx: &mut Complexes<K>,
    cmp: &mut Comparison<K>,
    m: usize,
) -> Result<(), usize> {
    let field = ctx.field.clone();
    let basis = ctx.hh_basis(m);
    for (idx, cls) in basis.iter().enumerate() {
        let mut pulled = Cochain::zero(m);
        for g in gens(m) {
            let mut val = AlgElem::zero();
            for (bk, cw) in g_tensor::<K>(&field, g).iter() {
                let v = if m == 0 {
                    // Phi_0(gen) = e (x) e; f . Psi_0 evaluates f directly
                    cls.rep.value_at(g)
                } else {
                    cmp.transported_value(&cls.rep, &bk.mid).scale(cw)
                };
                val = val.add(&v);
            }
            for (b, c) in val.iter() {
                pulled.add_term(c.clone(), *b, g);
            }
        }
        let back = match ctx.class_of(&pulled) {
            Some(c) => c,
            None => return Err(idx),
        };
        if back.coords != cls.coords {
            return Err(idx);
        }
    }
    Ok(())
}

/// A linear combination of single generator names with integer
/// coefficients ("1" denotes the unit class).
pub type Combo = Vec<(i64, &'static str)>;

/// The published BV tables for one q-class: the nonzero values of the
/// operator on generators and pairwise products, and the nonzero brackets
/// on ordered generator pairs. Everything absent is the zero class.
pub struct BvTables {
    pub delta_gens: Vec<(&'static str, Combo)>,
    pub delta_products: Vec<((&'static str, &'static str), Combo)>,
    pub brackets: Vec<((&'static str, &'static str), Combo)>,
}

/// The published tables for the field's q value.
pub fn published_bv_tables<K: Scalar>(field: &Field<K>) -> BvTables {
    use crate::field::QClass;
    match field.classify() {
        QClass::NotRootOfUnity => BvTables {
            delta_gens: vec![("u1", vec![(1, "1")]), ("u2", vec![(1, "1")])],
            delta_products: vec![(("u1", "u2"), vec![(1, "u2"), (-1, "u1")])],
            brackets: vec![
                (("z1", "u1"), vec![(-1, "z1")]),
                (("z1", "u2"), vec![(-1, "z1")]),
                (("z2", "u1"), vec![(-1, "z2")]),
                (("z2", "u2"), vec![(-1, "z2")]),
            ],
        },
        QClass::PlusMinusOne if field.q_is(-1) => BvTables {
            delta_gens: vec![("u2", vec![(1, "1")]), ("u3", vec![(1, "1")])],
            delta_products: vec![
                (("z1", "w0"), vec![(2, "u1")]),
                (("z1", "w1"), vec![(1, "u2"), (-1, "u3")]),
                (("z1", "w2"), vec![(2, "u4")]),
                (("u1", "u2"), vec![(-2, "u1")]),
                (("u1", "u4"), vec![(1, "u2"), (-1, "u3")]),
                (("u2", "u3"), vec![(1, "u3"), (-1, "u2")]),
                (("u3", "u4"), vec![(2, "u4")]),
                (("u1", "w1"), vec![(-1, "w0")]),
                (("u1", "w2"), vec![(2, "w1")]),
                (("u2", "w0"), vec![(3, "w0")]),
                (("u2", "w1"), vec![(2, "w1")]),
                (("u2", "w2"), vec![(1, "w2")]),
                (("u3", "w0"), vec![(1, "w0")]),
                (("u3", "w1"), vec![(2, "w1")]),
                (("u3", "w2"), vec![(3, "w2")]),
                (("u4", "w0"), vec![(-2, "w1")]),
                (("u4", "w1"), vec![(1, "w2")]),
            ],
            brackets: vec![
                (("z1", "u2"), vec![(-1, "z1")]),
                (("z1", "u3"), vec![(-1, "z1")]),
                (("z2", "u2"), vec![(-1, "z2")]),
                (("z2", "u3"), vec![(-1, "z2")]),
                (("z1", "w0"), vec![(-2, "u1")]),
                (("z1", "w1"), vec![(1, "u3"), (-1, "u2")]),
                (("z1", "w2"), vec![(-2, "u4")]),
                (("u1", "u2"), vec![(1, "u1")]),
                (("u1", "u3"), vec![(-1, "u1")]),
                (("u1", "u4"), vec![(1, "u3"), (-1, "u2")]),
                (("u2", "u4"), vec![(1, "u4")]),
                (("u3", "u4"), vec![(-1, "u4")]),
                (("u1", "w1"), vec![(1, "w0")]),
                (("u1", "w2"), vec![(-2, "w1")]),
                (("u2", "w0"), vec![(-2, "w0")]),
                (("u2", "w1"), vec![(-1, "w1")]),
                (("u3", "w1"), vec![(-1, "w1")]),
                (("u3", "w2"), vec![(-2, "w2")]),
                (("u4", "w0"), vec![(2, "w1")]),
                (("u4", "w1"), vec![(-1, "w2")]),
            ],
        },
        QClass::PlusMinusOne => BvTables {
            // q = 1
            delta_gens: vec![("u2", vec![(1, "1")]), ("u3", vec![(1, "1")])],
            delta_products: vec![
                (("z1", "w0"), vec![(-2, "u1")]),
                (("z1", "w1"), vec![(1, "u2"), (-1, "u3")]),
                (("z1", "w2"), vec![(2, "u4")]),
                (("u1", "u2"), vec![(-2, "u1")]),
                (("u1", "u4"), vec![(1, "u2"), (-1, "u3")]),
                (("u2", "u3"), vec![(1, "u3"), (-1, "u2")]),
                (("u3", "u4"), vec![(2, "u4")]),
                (("u1", "w1"), vec![(1, "w0")]),
                (("u1", "w2"), vec![(2, "w1")]),
                (("u2", "w0"), vec![(3, "w0")]),
                (("u2", "w1"), vec![(2, "w1")]),
                (("u2", "w2"), vec![(1, "w2")]),
                (("u3", "w0"), vec![(1, "w0")]),
                (("u3", "w1"), vec![(2, "w1")]),
                (("u3", "w2"), vec![(3, "w2")]),
                (("u4", "w0"), vec![(2, "w1")]),
                (("u4", "w1"), vec![(1, "w2")]),
            ],
            brackets: vec![
                (("z1", "u2"), vec![(-1, "z1")]),
                (("z1", "u3"), vec![(-1, "z1")]),
                (("z2", "u2"), vec![(-1, "z2")]),
                (("z2", "u3"), vec![(-1, "z2")]),
                (("z1", "w0"), vec![(2, "u1")]),
                (("z1", "w1"), vec![(1, "u3"), (-1, "u2")]),
                (("z1", "w2"), vec![(-2, "u4")]),
                (("u1", "u2"), vec![(1, "u1")]),
                (("u1", "u3"), vec![(-1, "u1")]),
                (("u1", "u4"), vec![(1, "u3"), (-1, "u2")]),
                (("u2", "u4"), vec![(1, "u4")]),
                (("u3", "u4"), vec![(-1, "u4")]),
                (("u1", "w1"), vec![(-1, "w0")]),
                (("u1", "w2"), vec![(-2, "w1")]),
                (("u2", "w0"), vec![(-2, "w0")]),
                (("u2", "w1"), vec![(-1, "w1")]),
                (("u3", "w1"), vec![(-1, "w1")]),
                (("u3", "w2"), vec![(-2, "w2")]),
                (("u4", "w0"), vec![(-2, "w1")]),
                (("u4", "w1"), vec![(-1, "w2")]),
            ],
        },
        QClass::PrimitiveRoot(s) => {
            let s = s as i64;
            let half = s / 2;
            let (d_uw, br_uw): (Vec<(i64, i64, i64)>, Vec<(i64, i64)>) = if s % 2 == 1 {
                // Delta(u1 w_j) coefficients (2s+1, s+1, 1); Delta(u2 w_j)
                // reversed; brackets -2s, -s
                (vec![(2 * s + 1, s + 1, 1)], vec![(-2 * s, -s)])
            } else {
                (vec![(s + 1, half + 1, 1)], vec![(-s, -half)])
            };
            let (c0, c1, c2) = d_uw[0];
            let (bw0, bw1) = br_uw[0];
            BvTables {
                delta_gens: vec![("u1", vec![(1, "1")]), ("u2", vec![(1, "1")])],
                delta_products: vec![
                    (("u1", "u2"), vec![(1, "u2"), (-1, "u1")]),
                    (("u1", "w0"), vec![(c0, "w0")]),
                    (("u1", "w1"), vec![(c1, "w1")]),
                    (("u1", "w2"), vec![(c2, "w2")]),
                    (("u2", "w0"), vec![(1, "w0")]),
                    (("u2", "w1"), vec![(c1, "w1")]),
                    (("u2", "w2"), vec![(c0, "w2")]),
                ],
                brackets: vec![
                    (("z1", "u1"), vec![(-1, "z1")]),
                    (("z1", "u2"), vec![(-1, "z1")]),
                    (("z2", "u1"), vec![(-1, "z2")]),
                    (("z2", "u2"), vec![(-1, "z2")]),
                    (("u1", "w0"), vec![(bw0, "w0")]),
                    (("u1", "w1"), vec![(bw1, "w1")]),
                    (("u2", "w1"), vec![(bw1, "w1")]),
                    (("u2", "w2"), vec![(bw0, "w2")]),
                ],
            }
        }
    }
}

/// Resolve a combination of generator names to a class.
pub fn combo_class<K: Scalar>(
    ctx: &mut Complexes<K>,
    pres: &crate::products::Presentation<K>,
    combo: &Combo,
    degree: usize,
) -> HHClass<K> {
    let mut acc = ctx.zero_class(degree);
    for (n, name) in combo {
        let g = pres.gen(name).class.clone();
        assert_eq!(g.degree, degree, "combo degree mismatch at {name}");
        let coef = ctx.field.int(*n);
        acc = ctx.class_add(&acc, &ctx.class_scale(&g, &coef));
    }
    acc
}

/// One verified table entry.
#[derive(Clone, Debug)]
pub struct TableCheck {
    pub label: String,
    pub kind: TableCheckKind,
    pub pass: bool,
    pub computed: String,
    pub expected: String,
}

/// What a table check verified, so that mismatches can be re-derived
/// through the bar-complex oracle.
#[derive(Clone, Debug)]
pub enum TableCheckKind {
    DeltaGen(String),
    DeltaProduct(String, String),
    Bracket(String, String),
}

/// Verify every published Delta value and bracket for the active q-class:
/// listed entries must match, and every unlisted generator or pairwise
/// product must map to the zero class.
pub fn verify_bv_tables<K: Scalar>(
    ctx: &mut Complexes<K>,
    cmp: &mut Comparison<K>,
    pres: &crate::products::Presentation<K>,
) -> Vec<TableCheck> {
    let tables = published_bv_tables(&ctx.field);
    let mut out = Vec::new();
    let names: Vec<String> = pres.gens.iter().map(|g| g.name.clone()).collect();

    let mut check = |label: String, kind: TableCheckKind, got: HHClass<K>, expected: HHClass<K>| {
        let pass = got.coords == expected.coords;
        out.push(TableCheck {
            label,
            kind,
            pass,
            computed: got.rep.render(),
            expected: expected.rep.render(),
        });
    };

    // Delta on single generators (positive degree only: the operator has
    // degree -1 and vanishes on degree 0 by construction)
    for name in &names {
        let g = pres.gen(name).class.clone();
        if g.degree == 0 {
            continue;
        }
        let d = bv_delta(ctx, cmp, &g).expect("positive degree");
        let expected = match tables.delta_gens.iter().find(|(n, _)| n == name) {
            Some((_, combo)) => combo_class(ctx, pres, combo, g.degree - 1),
            None => ctx.zero_class(g.degree - 1),
        };
        check(
            format!("Delta({name})"),
            TableCheckKind::DeltaGen(name.clone()),
            d,
            expected,
        );
    }

    // Delta on pairwise products, in list order (i <= j)
    for (i, a) in names.iter().enumerate() {
        for b in names.iter().skip(i) {
            let ca = pres.gen(a).class.clone();
            let cb = pres.gen(b).class.clone();
            let prod = cup_classes(ctx, &ca, &cb);
            if prod.degree == 0 {
                continue;
            }
            let d = bv_delta(ctx, cmp, &prod).expect("positive degree");
            let expected = match tables
                .delta_products
                .iter()
                .find(|((x, y), _)| x == a && y == b)
            {
                Some((_, combo)) => combo_class(ctx, pres, combo, prod.degree - 1),
                None => ctx.zero_class(prod.degree - 1),
            };
            check(
                format!("Delta({a}{b})"),
                TableCheckKind::DeltaProduct(a.clone(), b.clone()),
                d,
                expected,
            );
        }
    }

    // brackets on ordered generator pairs (i <= j; the reversed
    // orientation is covered by the antisymmetry law)
    for (i, a) in names.iter().enumerate() {
        for b in names.iter().skip(i) {
            let ca = pres.gen(a).class.clone();
            let cb = pres.gen(b).class.clone();
            let br = bracket(ctx, cmp, &ca, &cb);
            let expected = match tables.brackets.iter().find(|((x, y), _)| x == a && y == b) {
                Some((_, combo)) => combo_class(ctx, pres, combo, br.degree),
                None => ctx.zero_class(br.degree),
            };
            check(
                format!("[{a},{b}]"),
                TableCheckKind::Bracket(a.clone(), b.clone()),
                br,
                expected,
            );
        }
    }
    out
}

/// Graded antisymmetry `[x, y] = -(-1)^{(|x|-1)(|y|-1)} [y, x]` on all
/// generator pairs.
pub fn bracket_antisymmetry_holds<K: Scalar>(
    ctx: &mut Complexes<K>,
    cmp: &mut Comparison<K>,
    pres: &crate::products::Presentation<K>,
) -> Result<(), String> {
    let gens: Vec<_> = pres.gens.clone();
    for a in &gens {
        for b in &gens {
            let xy = bracket(ctx, cmp, &a.class, &b.class);
            let yx = bracket(ctx, cmp, &b.class, &a.class);
            let exp = (a.degree as i64 - 1) * (b.degree as i64 - 1);
            let sign = if exp.rem_euclid(2) == 0 {
                -K::one()
            } else {
                K::one()
            };
            let expected = ctx.class_scale(&yx, &sign);
            if xy.coords != expected.coords {
                return Err(format!("antisymmetry fails on [{},{}]", a.name, b.name));
            }
        }
    }
    Ok(())
}

/// The Leibniz law `[f cup g, h] = [f, h] cup g + (-1)^{|f|(|h|-1)} f cup [g, h]`
/// on generator triples of total degree at most `max_total`.
pub fn leibniz_holds<K: Scalar>(
    ctx: &mut Complexes<K>,
    cmp: &mut Comparison<K>,
    pres: &crate::products::Presentation<K>,
    max_total: usize,
) -> Result<(), String> {
    let gens: Vec<_> = pres.gens.clone();
    for f in &gens {
        for g in &gens {
            for h in &gens {
                if f.degree + g.degree + h.degree > max_total {
                    continue;
                }
                let total = f.degree + g.degree + h.degree;
                if total == 0 {
                    continue;
                }
                // brackets of two degree-0 classes vanish and are returned
                // in the degree-0 slot by convention; route them to the
                // right degree before cupping
                let fg = cup_classes(ctx, &f.class, &g.class);
                let lhs = bracket(ctx, cmp, &fg, &h.class);
                let fh = bracket(ctx, cmp, &f.class, &h.class);
                let term1 = if fh.is_zero() {
                    ctx.zero_class(total - 1)
                } else {
                    cup_classes(ctx, &fh, &g.class)
                };
                let gh = bracket(ctx, cmp, &g.class, &h.class);
                let term2 = if gh.is_zero() {
                    ctx.zero_class(total - 1)
                } else {
                    cup_classes(ctx, &f.class, &gh)
                };
                let exp = (f.degree as i64) * (h.degree as i64 - 1);
                let sign = if exp.rem_euclid(2) == 0 {
                    K::one()
                } else {
                    -K::one()
                };
                let rhs = ctx.class_add(&term1, &ctx.class_scale(&term2, &sign));
                if lhs.coords != rhs.coords {
                    return Err(format!(
                        "Leibniz fails on [{} cup {}, {}]",
                        f.name, g.name, h.name
                    ));
                }
            }
        }
    }
    Ok(())
}

/// Degreewise dimensions of the quotient by the Gerstenhaber ideal
/// generated by the nilpotent homogeneous classes. The cup-ideal spans of
/// the nilpotent classes are closed under cup-by-anything and
/// bracket-by-anything with a worklist: every class whose insertion
/// enlarges a span gets its own consequences processed exactly once. The
/// BV images of the ambient basis classes are cached, so each pending pair
/// costs one operator evaluation (on the cup product).
pub fn gerstenhaber_ideal_quotient_dims<K: Scalar>(
    ctx: &mut Complexes<K>,
    cmp: &mut Comparison<K>,
    bound: usize,
) -> Vec<usize> {
    let mut spans = crate::products::nilpotent_ideal(ctx, bound).spans;
    let mut queue: Vec<HHClass<K>> = Vec::new();
    for (d, span) in spans.iter().enumerate() {
        let basis = ctx.hh_basis(d);
        for row in &span.rows {
            let mut cls = ctx.zero_class(d);
            for (idx, c) in row {
                let scaled = ctx.class_scale(&basis[*idx], c);
                cls = ctx.class_add(&cls, &scaled);
            }
            queue.push(cls);
        }
    }
    // Delta on every ambient basis class, by degree
    let mut basis_deltas: Vec<Vec<HHClass<K>>> = Vec::with_capacity(bound + 1);
    for e in 0..=bound {
        let mut ds = Vec::new();
        for y in ctx.hh_basis(e) {
            ds.push(bv_delta_or_zero(ctx, cmp, &y));
        }
        basis_deltas.push(ds);
    }
    while let Some(x) = queue.pop() {
        if x.is_zero() {
            continue;
        }
        let dx = bv_delta_or_zero(ctx, cmp, &x);
        for e in 0..=bound {
            let ys = ctx.hh_basis(e);
            for (yi, y) in ys.iter().enumerate() {
                let cup_deg = x.degree + e;
                let cup_xy = if cup_deg <= bound + 1 {
                    Some(cup_classes(ctx, &x, y))
                } else {
                    None
                };
                // cup-ideal closure
                if cup_deg <= bound {
                    let p = cup_xy.clone().expect("within bound");
                    let v: crate::linalg::SparseVec<K> = p
                        .coords
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (i, c.clone()))
                        .collect();
                    if !v.is_empty() && spans[cup_deg].insert(v) {
                        queue.push(p);
                    }
                }
                // bracket closure via the BV identity
                if cup_deg >= 1 && cup_deg - 1 <= bound {
                    let target = cup_deg - 1;
                    let p = cup_xy.expect("within bound + 1");
                    let d_cup = bv_delta_or_zero(ctx, cmp, &p);
                    let mut acc = d_cup;
                    if x.degree >= 1 && !dx.is_zero() {
                        let t = cup_classes(ctx, &dx, y);
                        acc = ctx.class_add(&acc, &ctx.class_scale(&t, &(-K::one())));
                    }
                    let dy = &basis_deltas[e][yi];
                    if e >= 1 && !dy.is_zero() {
                        let t = cup_classes(ctx, &x, dy);
                        let sign = if x.degree % 2 == 0 {
                            -K::one()
                        } else {
                            K::one()
                        };
                        acc = ctx.class_add(&acc, &ctx.class_scale(&t, &sign));
                    }
                    let outer = if ((x.degree as i64 - 1) * e as i64).rem_euclid(2) == 0 {
                        -K::one()
                    } else {
                        K::one()
                    };
                    let br = ctx.class_scale(&acc, &outer);
                    let v: crate::linalg::SparseVec<K> = br
                        .coords
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (i, c.clone()))
                        .collect();
                    if !v.is_empty() && spans[target].insert(v) {
                        queue.push(br);
                    }
                }
            }
        }
    }
    (0..=bound)
        .map(|d| ctx.hh_codim(d) - spans[d].rank())
        .collect()
}

/// The explicit published closed forms for `Psi_m` on special shapes of
/// reduced sequences, used as a test-vector corpus against the recursion.
pub enum BulletValue<K: Scalar> {
    /// The bullet pins the image completely.
    Exact(PElem<K>),
    /// The bullet prints a single term's coefficient and outer factors but
    /// leaves the generator's second index implicit.
    Shape {
        coeff: K,
        left: BasisElem,
        right: BasisElem,
    },
    /// "For the other case" the image is zero.
    Zero,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum RunKind {
    A,
    B,
    Ab,
}

fn runs_of(seq: &[BasisElem]) -> Vec<(RunKind, usize, i64)> {
    let mut out: Vec<(RunKind, usize, i64)> = Vec::new();
    for b in seq {
        let (kind, idx) = match b {
            BasisElem::A(v) => (RunKind::A, v.value() as i64),
            BasisElem::B(v) => (RunKind::B, v.value() as i64),
            BasisElem::AB(v) => (RunKind::Ab, v.value() as i64),
            BasisElem::E(_) => unreachable!("reduced sequences have no idempotents"),
        };
        match out.last_mut() {
            Some((k, n, _)) if *k == kind && kind != RunKind::Ab => *n += 1,
            _ => out.push((kind, 1, idx)),
        }
    }
    out
}

/// Classify a reduced sequence against the published case list and return
/// the published value of `Psi_m` on it (`m = seq.len() >= 3`). Trailing
/// runs of the printed shapes may be empty; the formulas specialize.
pub fn psi_bullet_expectation<K: Scalar>(field: &Field<K>, seq: &[BasisElem]) -> BulletValue<K> {
    let m = seq.len() as i64;
    let runs = runs_of(seq);
    let sign = |e: i64| {
        if e.rem_euclid(2) == 0 {
            K::one()
        } else {
            -K::one()
        }
    };
    let gen = |i: i64, j: i64| GenIdx::new(m, i, j).unwrap();
    let term = |c: K, left: BasisElem, g: GenIdx, right: BasisElem| {
        let mut p = PElem::zero(m as usize);
        p.add_term(c, PKey { left, gen: g, right });
        p
    };
    use RunKind::{A, Ab, B};
    // normalized parameters: (leading index, shape code, p, j, s, r)
    let (i, fam): (i64, Shape) = match runs.as_slice() {
        [(B, p, i)] => (*i, Shape::BA(*p as i64, 0)),
        [(B, p, i), (A, r, _)] => (*i, Shape::BA(*p as i64, *r as i64)),
        [(B, p, i), (Ab, 1, _)] => (*i, Shape::BCyB(*p as i64, 0, 0)),
        [(B, p, i), (Ab, 1, _), (B, j, _)] => (*i, Shape::BCyB(*p as i64, *j as i64, 0)),
        [(B, p, i), (Ab, 1, _), (A, r, _)] => (*i, Shape::BCyB(*p as i64, 0, *r as i64)),
        [(B, p, i), (Ab, 1, _), (B, j, _), (A, r, _)] => {
            (*i, Shape::BCyB(*p as i64, *j as i64, *r as i64))
        }
        [(B, p, i), (A, j, _), (Ab, 1, _)] => (*i, Shape::BACy(*p as i64, *j as i64, 0)),
        [(B, p, i), (A, j, _), (Ab, 1, _), (A, r, _)] => {
            (*i, Shape::BACy(*p as i64, *j as i64, *r as i64))
        }
        [(B, p, i), (Ab, 1, _), (Ab, 1, _)] => (*i, Shape::BCyCy(*p as i64, 0, 0, 0)),
        [(B, p, i), (Ab, 1, _), (Ab, 1, _), (A, r, _)] => {
            (*i, Shape::BCyCy(*p as i64, 0, 0, *r as i64))
        }
        [(B, p, i), (Ab, 1, _), (B, j, _), (Ab, 1, _)] => {
            (*i, Shape::BCyCy(*p as i64, *j as i64, 0, 0))
        }
        [(B, p, i), (Ab, 1, _), (B, j, _), (Ab, 1, _), (A, r, _)] => {
            (*i, Shape::BCyCy(*p as i64, *j as i64, 0, *r as i64))
        }
        [(B, p, i), (Ab, 1, _), (A, s, _), (Ab, 1, _)] => {
            (*i, Shape::BCyCy(*p as i64, 0, *s as i64, 0))
        }
        [(B, p, i), (Ab, 1, _), (A, s, _), (Ab, 1, _), (A, r, _)] => {
            (*i, Shape::BCyCy(*p as i64, 0, *s as i64, *r as i64))
        }
        [(B, p, i), (Ab, 1, _), (B, j, _), (A, s, _), (Ab, 1, _)] => {
            (*i, Shape::BCyCy(*p as i64, *j as i64, *s as i64, 0))
        }
        [(B, p, i), (Ab, 1, _), (B, j, _), (A, s, _), (Ab, 1, _), (A, r, _)] => {
            (*i, Shape::BCyCy(*p as i64, *j as i64, *s as i64, *r as i64))
        }
        [(A, _, i)] => (*i, Shape::AllA),
        [(A, p, i), (Ab, 1, _)] => (*i, Shape::ACy(*p as i64, 0)),
        [(A, p, i), (Ab, 1, _), (A, r, _)] => (*i, Shape::ACy(*p as i64, *r as i64)),
        [(Ab, 1, i), (A, r, _)] => (*i, Shape::CyA(*r as i64)),
        [(Ab, 1, i), (Ab, 1, _)] => (*i, Shape::CyACy(0, 0)),
        [(Ab, 1, i), (Ab, 1, _), (A, r, _)] => (*i, Shape::CyACy(0, *r as i64)),
        [(Ab, 1, i), (A, l, _), (Ab, 1, _)] => (*i, Shape::CyACy(*l as i64, 0)),
        [(Ab, 1, i), (A, l, _), (Ab, 1, _), (A, r, _)] => {
            (*i, Shape::CyACy(*l as i64, *r as i64))
        }
        [(Ab, 1, i), (B, p, _)] => (*i, Shape::CyBA(*p as i64, 0)),
        [(Ab, 1, i), (B, p, _), (A, r, _)] => (*i, Shape::CyBA(*p as i64, *r as i64)),
        [(Ab, 1, i), (B, p, _), (Ab, 1, _)] => (*i, Shape::CyBACy(*p as i64, 0, 0)),
        [(Ab, 1, i), (B, p, _), (Ab, 1, _), (A, r, _)] => {
            (*i, Shape::CyBACy(*p as i64, 0, *r as i64))
        }
        [(Ab, 1, i), (B, p, _), (A, j, _), (Ab, 1, _)] => {
            (*i, Shape::CyBACy(*p as i64, *j as i64, 0))
        }
        [(Ab, 1, i), (B, p, _), (A, j, _), (Ab, 1, _), (A, r, _)] => {
            (*i, Shape::CyBACy(*p as i64, *j as i64, *r as i64))
        }
        _ => return BulletValue::Zero,
    };
    match fam {
        // betas then alphas
        Shape::BA(p, r) => {
            BulletValue::Exact(PElem::generator(gen(i + 1, r)).scale(&field.q_pow(-p * r)))
        }
        // betas, cycle, betas, alphas
        Shape::BCyB(p, j, r) => {
            if j > 0 {
                let g1 = gen(i + 2, r);
                BulletValue::Exact(term(
                    sign(p) * field.q_pow(-p - (p + j + 1) * r),
                    BasisElem::a(i + 1),
                    g1,
                    BasisElem::E(g1.target()),
                ))
            } else {
                let coeff = field.q_pow(-p - (p + 1) * r);
                let g1 = gen(i + 2, r);
                let g2 = gen(i + 1, r + 1);
                let mut e = term(
                    coeff.clone() * sign(p),
                    BasisElem::a(i + 1),
                    g1,
                    BasisElem::E(g1.target()),
                );
                e = e.add(&term(
                    coeff * sign(m - p + 1),
                    BasisElem::E(g2.origin()),
                    g2,
                    BasisElem::b(m + i),
                ));
                BulletValue::Exact(e)
            }
        }
        // betas, alphas, cycle, alphas
        Shape::BACy(p, j, r) => {
            let g2 = gen(i + 1, m - p);
            BulletValue::Exact(term(
                sign(m - p + 1 - j) * field.q_pow(-r - p * (m - p)),
                BasisElem::E(g2.origin()),
                g2,
                BasisElem::b(m + i),
            ))
        }
        // betas with two cycles
        Shape::BCyCy(p, j, s, _r) => BulletValue::Shape {
            coeff: sign(m - j - s)
                * field.q_pow(-p - (j + p + 1) * (m - j - p - 1) - (m - p - j - s - 2)),
            left: BasisElem::a(i + 1),
            right: BasisElem::b(m + i + 1),
        },
        // all-ascending alphas
        Shape::AllA => BulletValue::Exact(PElem::generator(gen(i, m))),
        // alphas, cycle, alphas
        Shape::ACy(p, _r) => {
            let g = gen(i, m);
            BulletValue::Exact(term(
                sign(m - p - 1) * field.q_pow(-(m - p - 1)),
                BasisElem::E(g.origin()),
                g,
                BasisElem::b(m + i + 1),
            ))
        }
        // cycle then alphas
        Shape::CyA(_r) => {
            let g1 = gen(i + 1, m - 1);
            let g2 = gen(i, m);
            let c = field.q_pow(-(m - 1));
            let mut e = term(c.clone(), BasisElem::a(i), g1, BasisElem::E(g1.target()));
            e = e.add(&term(
                c * sign(m - 1),
                BasisElem::E(g2.origin()),
                g2,
                BasisElem::b(m + i + 1),
            ));
            BulletValue::Exact(e)
        }
        // cycle, alphas, cycle, alphas
        Shape::CyACy(l, _r) => BulletValue::Shape {
            coeff: sign(m - l - 2) * field.q_pow(-(m - 2) - (m - l - 2) - 1),
            left: BasisElem::a(i),
            right: BasisElem::b(m + i),
        },
        // cycle, betas, alphas
        Shape::CyBA(p, r) => {
            let g = gen(i + 1, r);
            BulletValue::Exact(term(
                field.q_pow(-r * (p + 1)),
                BasisElem::a(i),
                g,
                BasisElem::E(g.target()),
            ))
        }
        // cycle, betas, alphas, cycle, alphas
        Shape::CyBACy(p, j, _r) => {
            let l = p - 1;
            BulletValue::Shape {
                coeff: sign(m - l - j - 3)
                    * field.q_pow(
                        -(m - l - 3) - (m - l - j - 3) - (l + 1) - (m - l - 3) * (l + 1) - 1,
                    ),
                left: BasisElem::a(i),
                right: BasisElem::b(m + i),
            }
        }
    }
}

enum Shape {
    /// `b^p a^r`
    BA(i64, i64),
    /// `b^p (ab) b^j a^r`
    BCyB(i64, i64, i64),
    /// `b^p a^j (ab) a^r`
    BACy(i64, i64, i64),
    /// `b^p (ab) b^j a^s (ab) a^r`
    BCyCy(i64, i64, i64, i64),
    AllA,
    /// `a^p (ab) a^r`
    ACy(i64, i64),
    /// `(ab) a^r`
    CyA(i64),
    /// `(ab) a^l (ab) a^r`
    CyACy(i64, i64),
    /// `(ab) b^p a^r`
    CyBA(i64, i64),
    /// `(ab) b^p a^j (ab) a^r`
    CyBACy(i64, i64, i64),
}

/// Compare the recursion against the published closed forms on every
/// reduced sequence of lengths `3..=mmax`. Returns the mismatching
/// sequences with a rendering of both sides.
pub fn psi_bullet_mismatches<K: Scalar>(
    cmp: &mut Comparison<K>,
    mmax: usize,
) -> Vec<(Vec<BasisElem>, String)> {
    let field = cmp.field.clone();
    let mut out = Vec::new();
    for m in 3..=mmax {
        for seq in crate::resolution::bar_sequences(m) {
            let computed = cmp.psi_mid(&seq);
            let ok = match psi_bullet_expectation(&field, &seq) {
                BulletValue::Exact(e) => computed == e,
                BulletValue::Zero => computed.is_zero(),
                BulletValue::Shape { coeff, left, right } => {
                    let terms: Vec<_> = computed.iter().collect();
                    terms.len() == 1
                        && terms[0].0.left == left
                        && terms[0].0.right == right
                        && *terms[0].1 == coeff
                }
            };
            if !ok {
                let label = format!(
                    "psi on [{}]: computed {}",
                    seq.iter()
                        .map(|b| b.render())
                        .collect::<Vec<_>>()
                        .join(", "),
                    computed.render()
                );
                out.push((seq, label));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::products::presentation;
    use num::BigRational;
    use num_traits::One;

    #[test]
    fn homotopy_t_spot_values() {
        let f = Field::rational_int(2).unwrap();
        // t_0(b1 (x) t(f^0_(1,0))) = gen f^1_(2,0)
        let mut x = PElem::<BigRational>::zero(0);
        x.add_term(
            BigRational::one(),
            PKey {
                left: BasisElem::b(1),
                gen: GenIdx::new(0, 1, 0).unwrap(),
                right: BasisElem::e(1),
            },
        );
        assert_eq!(
            homotopy_t(&f, &x),
            PElem::generator(GenIdx::new(1, 2, 0).unwrap())
        );
        // t_m on generators vanishes
        for m in 0..=4 {
            for g in gens(m) {
                assert!(homotopy_t(&f, &PElem::<BigRational>::generator(g)).is_zero());
            }
        }
    }

    #[test]
    fn homotopy_laws_small_window() {
        for q in [2i64, -1] {
            let f = Field::rational_int(q).unwrap();
            assert_eq!(homotopy_laws_hold::<BigRational>(&f, 5), Ok(()));
            assert_eq!(bar_homotopy_laws_hold::<BigRational>(&f, 3), Ok(()));
        }
        let f = Field::cyclotomic(3).unwrap();
        assert_eq!(homotopy_laws_hold::<crate::Cyclo>(&f, 4), Ok(()));
    }

    #[test]
    fn phi_spot_values_and_chain_map() {
        let f = Field::rational_int(2).unwrap();
        // Phi_1 on the generator of a1 is e1 (x) a1 (x) e2
        let p = PElem::<BigRational>::generator(GenIdx::new(1, 1, 1).unwrap());
        let mut expected = BarElem::zero(1);
        expected.add_term(
            BigRational::one(),
            BarKey {
                left: BasisElem::e(1),
                mid: vec![BasisElem::a(1)],
                right: BasisElem::e(2),
            },
        );
        assert_eq!(phi(&f, &p), expected);
        for m in 1..=6 {
            assert_eq!(phi_chain_map_holds::<BigRational>(&f, m), Ok(()));
        }
    }

    #[test]
    fn psi_spot_values() {
        let f = Field::rational_int(2).unwrap();
        let mut cmp = Comparison::new(f.clone());
        // Psi_1 on an arrow is the corresponding generator
        assert_eq!(
            cmp.psi_mid(&[BasisElem::a(1)]),
            PElem::generator(GenIdx::new(1, 1, 1).unwrap())
        );
        assert_eq!(
            cmp.psi_mid(&[BasisElem::b(2)]),
            PElem::generator(GenIdx::new(1, 1, 0).unwrap())
        );
        // Psi_1 on a cycle: a_i (x) t(f^1_(i+1,0)) + o(f^1_(i,1)) (x) b_i
        let got = cmp.psi_mid(&[BasisElem::ab(1)]);
        let mut expected = PElem::zero(1);
        expected.add_term(
            BigRational::one(),
            PKey {
                left: BasisElem::a(1),
                gen: GenIdx::new(1, 2, 0).unwrap(),
                right: BasisElem::e(1),
            },
        );
        expected.add_term(
            BigRational::one(),
            PKey {
                left: BasisElem::e(1),
                gen: GenIdx::new(1, 1, 1).unwrap(),
                right: BasisElem::b(1),
            },
        );
        assert_eq!(got, expected);
        // Psi_2(b_i (x) a_i) = q^{-1} gen f^2_(i+1,1)
        let got = cmp.psi_mid(&[BasisElem::b(1), BasisElem::a(1)]);
        let expected = PElem::generator(GenIdx::new(2, 2, 1).unwrap()).scale(&f.q_pow(-1));
        assert_eq!(got, expected);
        // Psi_2(a_i (x) b_i) = 0
        assert!(cmp.psi_mid(&[BasisElem::a(1), BasisElem::b(1)]).is_zero());
        // Psi_m on the all-b word is the generator f^m_(i+1, 0)
        let got = cmp.psi_mid(&[BasisElem::b(1), BasisElem::b(2), BasisElem::b(1)]);
        assert_eq!(got, PElem::generator(GenIdx::new(3, 2, 0).unwrap()));
    }

    #[test]
    fn psi_chain_map_small_window() {
        for q in [2i64, -1] {
            let mut cmp = Comparison::new(Field::rational_int(q).unwrap());
            for m in 1..=4 {
                assert_eq!(psi_chain_map_holds::<BigRational>(&mut cmp, m), Ok(()));
            }
        }
    }

    #[test]
    fn psi_phi_is_identity_on_cohomology() {
        let mut ctx = Complexes::new(Field::rational_int(-1).unwrap());
        let mut cmp = Comparison::new(ctx.field.clone());
        for m in 0..=3 {
            assert_eq!(psi_phi_identity_on_hh(&mut ctx, &mut cmp, m), Ok(()));
        }
    }

    #[test]
    fn delta_on_degree_one_generators_symmetric() {
        // q = -1: Delta(u2) = Delta(u3) = 1, Delta(u1) = Delta(u4) = 0
        let mut ctx = Complexes::new(Field::rational_int(-1).unwrap());
        let mut cmp = Comparison::new(ctx.field.clone());
        let pres = presentation(&mut ctx);
        let unit = pres.unit.class.clone();
        for (name, expect_unit) in [("u1", false), ("u2", true), ("u3", true), ("u4", false)] {
            let g = pres.gen(name).class.clone();
            let d = bv_delta(&mut ctx, &mut cmp, &g).unwrap();
            if expect_unit {
                assert_eq!(d.coords, unit.coords, "Delta({name}) = 1");
            } else {
                assert!(d.is_zero(), "Delta({name}) = 0");
            }
        }
        // degree-0 input is rejected
        let z = pres.gen("z1").class.clone();
        assert_eq!(
            bv_delta(&mut ctx, &mut cmp, &z).unwrap_err(),
            BvError::DegreeZero
        );
    }

    #[test]
    fn delta_on_degree_one_generators_generic() {
        // generic q: Delta(u1) = Delta(u2) = 1
        let mut ctx = Complexes::new(Field::generic());
        let mut cmp = Comparison::new(ctx.field.clone());
        let pres = presentation(&mut ctx);
        let unit = pres.unit.class.clone();
        for name in ["u1", "u2"] {
            let g = pres.gen(name).class.clone();
            let d = bv_delta(&mut ctx, &mut cmp, &g).unwrap();
            assert_eq!(d.coords, unit.coords, "Delta({name}) = 1");
        }
        // Delta(u1 u2) = u2 - u1
        let u1 = pres.gen("u1").class.clone();
        let u2 = pres.gen("u2").class.clone();
        let prod = cup_classes(&mut ctx, &u1, &u2);
        let d = bv_delta(&mut ctx, &mut cmp, &prod).unwrap();
        let expected = ctx.class_add(&u2, &ctx.class_scale(&u1, &-crate::ratfun::RatFun::one()));
        assert_eq!(d.coords, expected.coords);
    }

    #[test]
    fn symmetric_and_twisted_formulas_agree_at_minus_one() {
        // at q = -1 the Nakayama automorphism is the identity and the tilde
        // duals coincide with the star duals, so both evaluation regimes
        // must produce the same operator
        let fq = Field::rational_int(-1).unwrap();
        let mut ctx = Complexes::new(fq.clone());
        let mut cmp = Comparison::new(fq.clone());
        let pres = presentation(&mut ctx);
        // hand-rolled twisted evaluation on u2's representative
        let u2 = pres.gen("u2").clone();
        let sym = bv_delta_cochain(&mut cmp, &u2.class.rep);
        // the twisted path is what bv_delta_cochain would do for q != -1;
        // emulate it by evaluating through the tilde/nu data directly
        let mut twisted = Cochain::zero(0);
        for gp in gens(0) {
            let mut val = AlgElem::zero();
            for b in crate::algebra::BASIS {
                if matches!(b, BasisElem::AB(_)) {
                    continue;
                }
                let (tc, tb) = tilde(&fq, b);
                let arg = vec![tb];
                if !composable(&arg) {
                    continue;
                }
                if tb.source() != gp.origin() || tb.target() != gp.origin() {
                    // k = 1 = n: the single argument must be a loop at the
                    // generator's vertex for the value to land in the corner
                }
                let fv = cmp.transported_value(&u2.class.rep, &arg);
                val.add_term(lambda(&fv) * tc, b);
            }
            let val = val.corner(gp.origin(), gp.target());
            for (b, c) in val.iter() {
                twisted.add_term(c.clone(), *b, gp);
            }
        }
        assert_eq!(sym, twisted);
    }

    #[test]
    fn delta_squares_to_zero_low_degree() {
        let mut ctx = Complexes::new(Field::rational_int(-1).unwrap());
        let mut cmp = Comparison::new(ctx.field.clone());
        for m in 2..=4usize {
            for x in ctx.hh_basis(m) {
                let d1 = bv_delta(&mut ctx, &mut cmp, &x).unwrap();
                if d1.degree >= 1 {
                    let d2 = bv_delta(&mut ctx, &mut cmp, &d1).unwrap();
                    assert!(d2.is_zero(), "Delta^2 != 0 at degree {m}");
                }
            }
        }
    }

    #[test]
    fn bv_tables_minus_one() {
        let mut ctx = Complexes::new(Field::rational_int(-1).unwrap());
        let mut cmp = Comparison::new(ctx.field.clone());
        let pres = presentation(&mut ctx);
        let checks = verify_bv_tables(&mut ctx, &mut cmp, &pres);
        let failures: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
        assert!(
            failures.is_empty(),
            "table mismatches: {:?}",
            failures
                .iter()
                .map(|c| format!("{}: got {}, want {}", c.label, c.computed, c.expected))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn bv_tables_generic() {
        let mut ctx = Complexes::new(Field::generic());
        let mut cmp = Comparison::new(ctx.field.clone());
        let pres = presentation(&mut ctx);
        let checks = verify_bv_tables(&mut ctx, &mut cmp, &pres);
        let failures: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
        assert!(
            failures.is_empty(),
            "table mismatches: {:?}",
            failures
                .iter()
                .map(|c| format!("{}: got {}, want {}", c.label, c.computed, c.expected))
                .collect::<Vec<_>>()
        );
    }

    #[test]
    fn psi_bullets_reproduced_low_degree() {
        let mut cmp = Comparison::new(Field::rational_int(2).unwrap());
        let mismatches = psi_bullet_mismatches::<BigRational>(&mut cmp, 4);
        assert!(
            mismatches.is_empty(),
            "{} bullet mismatches, first: {}",
            mismatches.len(),
            mismatches[0].1
        );
    }

    #[test]
    fn antisymmetry_and_leibniz_generic() {
        let mut ctx = Complexes::new(Field::generic());
        let mut cmp = Comparison::new(ctx.field.clone());
        let pres = presentation(&mut ctx);
        assert_eq!(bracket_antisymmetry_holds(&mut ctx, &mut cmp, &pres), Ok(()));
        assert_eq!(leibniz_holds(&mut ctx, &mut cmp, &pres, 8), Ok(()));
    }

    #[test]
    fn gerstenhaber_quotient_is_trivial_generic() {
        let mut ctx = Complexes::new(Field::generic());
        let mut cmp = Comparison::new(ctx.field.clone());
        let dims = gerstenhaber_ideal_quotient_dims(&mut ctx, &mut cmp, 5);
        assert_eq!(dims, vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn bracket_examples() {
        // q = -1: [u1, u2] = u1 and [z1, u2] = -z1
        let mut ctx = Complexes::new(Field::rational_int(-1).unwrap());
        let mut cmp = Comparison::new(ctx.field.clone());
        let pres = presentation(&mut ctx);
        let u1 = pres.gen("u1").class.clone();
        let u2 = pres.gen("u2").class.clone();
        let z1 = pres.gen("z1").class.clone();
        let br = bracket(&mut ctx, &mut cmp, &u1, &u2);
        assert_eq!(br.coords, u1.coords, "[u1,u2] = u1");
        let br = bracket(&mut ctx, &mut cmp, &z1, &u2);
        let expected = ctx.class_scale(&z1, &-BigRational::one());
        assert_eq!(br.coords, expected.coords, "[z1,u2] = -z1");
        // graded antisymmetry spot: [x, x] = 0 in even degree
        let w0 = pres.gen("w0").class.clone();
        let br = bracket(&mut ctx, &mut cmp, &w0, &w0);
        assert!(br.is_zero());
        // [1, x] = 0
        let unit = pres.unit.class.clone();
        let br = bracket(&mut ctx, &mut cmp, &unit, &u1);
        assert!(br.is_zero());
    }
}
