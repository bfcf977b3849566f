//! The verification suites: each function checks one family of published
//! statements against the exact computation and returns a [`SuiteReport`].
//! The acceptance test target and the command-line `verify` subcommand are
//! both thin wrappers around these.

use crate::algebra::BasisElem;
use crate::bv::{
    bracket, bracket_antisymmetry_holds, bv_delta, gerstenhaber_ideal_quotient_dims,
    homotopy_laws_hold, bar_homotopy_laws_hold, leibniz_holds, phi_chain_map_holds,
    psi_bullet_mismatches, psi_chain_map_holds, psi_phi_identity_on_hh, verify_bv_tables,
    Comparison,
};
use crate::complexes::{
    closed_hc_dim, closed_hh_codim, closed_hh_dim, closed_rank_sigma, closed_rank_tau, l_basis,
    Cochain, Complexes,
};
use crate::field::{Field, QClass};
use crate::linalg::{Rref, SparseVec};
use crate::oracle::{bracket_oracle, cup_oracle, Oracle};
use crate::products::{
    closed_nilpotent_quotient_dims, cup_classes, cup_cochain,
    diagonal_chain_map_holds, generation_holds, nilpotent_quotient_dims, presentation,
    Presentation,
};
use crate::report::SuiteReport;
use crate::resolution::{apply_d, gens, GenIdx, PElem};
use crate::scalar::Scalar;

fn spec_str<K: Scalar>(field: &Field<K>) -> String {
    field.spec().to_string()
}

/// Criterion: `d d = 0`, `tau tau = 0`, `sigma sigma = 0` exactly for all
/// degrees up to `mmax`.
pub fn suite_complex_laws<K: Scalar>(field: &Field<K>, mmax: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("complex-laws", spec_str(field));
    let mut dd_ok = true;
    for m in 2..=mmax {
        for g in gens(m) {
            let d1 = apply_d(field, &PElem::<K>::generator(g)).expect("degree >= 1");
            let d2 = apply_d(field, &d1).expect("degree >= 1");
            if !d2.is_zero() {
                dd_ok = false;
            }
        }
    }
    rep.push(format!("d*d = 0 for m <= {mmax}"), dd_ok, "");
    let mut ctx = Complexes::new(field.clone());
    let mut tau_ok = true;
    let mut sigma_ok = true;
    for m in 1..=mmax.saturating_sub(1) {
        let a = ctx.tau(m + 1).clone();
        let b = ctx.tau(m).clone();
        for col in 0..a.ncols {
            let w = a.apply(&vec![(col, K::one())]);
            if !b.apply(&w).is_empty() {
                tau_ok = false;
            }
        }
        let s1 = ctx.sigma(m).clone();
        let s2 = ctx.sigma(m + 1).clone();
        for col in 0..s1.ncols {
            let w = s1.apply(&vec![(col, K::one())]);
            if !s2.apply(&w).is_empty() {
                sigma_ok = false;
            }
        }
    }
    rep.push(format!("tau*tau = 0 for m <= {mmax}"), tau_ok, "");
    rep.push(format!("sigma*sigma = 0 for m <= {mmax}"), sigma_ok, "");
    rep
}

/// Criterion: computed `dim HH_m` equals the published case list.
pub fn suite_homology_dims<K: Scalar>(field: &Field<K>, mmax: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("homology-dims", spec_str(field));
    let class = field.classify();
    let mut ctx = Complexes::new(field.clone());
    for m in 0..=mmax {
        let got = ctx.hh_dim(m);
        let want = closed_hh_dim(class, m);
        rep.push(
            format!("dim HH_{m}"),
            got == want,
            format!("computed {got}, closed form {want}"),
        );
    }
    // finite-window witness that the homology never dies
    let positive = (0..=mmax).all(|m| ctx.hh_dim(m) > 0);
    rep.push(format!("HH_m > 0 for m <= {mmax}"), positive, "");
    rep
}

/// Criterion: the cyclic homology recursion reproduces the published case
/// list.
pub fn suite_cyclic_dims<K: Scalar>(field: &Field<K>, mmax: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("cyclic-dims", spec_str(field));
    let class = field.classify();
    let mut ctx = Complexes::new(field.clone());
    for m in 0..=mmax {
        let got = ctx.hc_dim(m);
        let want = closed_hc_dim(class, m);
        let published = crate::complexes::published_hc_dim(class, m);
        let mut detail = format!("computed {got}, closed form {want}");
        if published != want {
            detail.push_str(&format!(
                "; printed corollary gives {published} here, inconsistent with the recursion \
                 beyond the first special window"
            ));
        }
        rep.push(format!("dim HC_{m}"), got == want, detail);
    }
    rep
}

/// Criterion: computed ranks of `tau` (and `sigma`) match the exact
/// counting forms. The published homology rank case list omits the even
/// special degree (`m = 2ls`, resp. `ls`); entries where the printed list
/// disagrees with the consistent counting form are annotated.
pub fn suite_rank_formulas<K: Scalar>(field: &Field<K>, mmax: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("rank-formulas", spec_str(field));
    let ord = field.ord_q();
    let mut ctx = Complexes::new(field.clone());
    for m in 1..=mmax {
        let got = ctx.rank_tau(m);
        let want = closed_rank_tau(ord, m);
        let published = published_rank_tau(ord, m);
        let mut detail = format!("computed {got}, counting form {want}");
        if published != want {
            detail.push_str(&format!(
                "; printed case list gives {published} here and is inconsistent with the homology dimensions"
            ));
        }
        rep.push(format!("rank tau_{m}"), got == want, detail);
    }
    for m in 1..=mmax {
        let got = ctx.rank_sigma(m);
        let want = closed_rank_sigma(ord, m);
        rep.push(
            format!("rank sigma^{m}"),
            got == want,
            format!("computed {got}, counting form {want}"),
        );
    }
    rep
}

/// The rank of `tau_m` exactly as the printed case list states it
/// (no even special degree).
fn published_rank_tau(ord: Option<u32>, m: usize) -> usize {
    let m = m as i64;
    if m == 0 {
        return 0;
    }
    match ord {
        Some(1) | Some(2) => {
            if m % 2 == 1 {
                m as usize
            } else {
                (m + 1) as usize
            }
        }
        Some(s) if s > 2 => {
            let s = s as i64;
            let special = if s % 2 == 1 {
                (m + 1) % (2 * s) == 0
            } else {
                (m + 1) % s == 0
            };
            if special {
                let l = if s % 2 == 1 {
                    (m + 1) / (2 * s)
                } else {
                    (m + 1) / s
                };
                (2 * m - 2 * l + 1) as usize
            } else {
                (2 * m) as usize
            }
        }
        _ => (2 * m) as usize,
    }
}

/// The explicitly printed cocycle lists for `HH^m`, with the even-order
/// root-of-unity twists adjudicated: a listed element that fails to be a
/// cocycle, or reduces to the zero class, is replaced by the q-power
/// twisted variant forced by the differential, and the correction is
/// reported.
fn paper_cocycle_list<K: Scalar>(
    ctx: &mut Complexes<K>,
    m: usize,
) -> Vec<(String, Cochain<K>, bool)> {
    let field = ctx.field.clone();
    let class = field.classify();
    let g = |i: i64, j: i64| GenIdx::new(m as i64, i, j).expect("index in range");
    let e1 = BasisElem::e(1);
    let e2 = BasisElem::e(2);
    let a1 = BasisElem::a(1);
    let a2 = BasisElem::a(2);
    let b1 = BasisElem::b(1);
    let b2 = BasisElem::b(2);
    let ab1 = BasisElem::ab(1);
    let ab2 = BasisElem::ab(2);
    let two = |c1: K, p1: (BasisElem, GenIdx), c2: K, p2: (BasisElem, GenIdx)| {
        let mut x = Cochain::zero(m);
        x.add_term(c1, p1.0, p1.1);
        x.add_term(c2, p2.0, p2.1);
        x
    };
    let mut literal: Vec<(String, Cochain<K>)> = Vec::new();
    if m == 0 {
        literal.push((
            "(a1b1,f0_(1,0)) + q^-1 (a2b2,f0_(2,0))".into(),
            two(K::one(), (ab1, g(1, 0)), field.q_pow(-1), (ab2, g(2, 0))),
        ));
        literal.push((
            "(a1b1,f0_(1,0)) - q^-1 (a2b2,f0_(2,0))".into(),
            two(K::one(), (ab1, g(1, 0)), -field.q_pow(-1), (ab2, g(2, 0))),
        ));
        literal.push((
            "(e1,f0_(1,0)) + (e2,f0_(2,0))".into(),
            two(K::one(), (e1, g(1, 0)), K::one(), (e2, g(2, 0))),
        ));
    } else if m == 1 {
        match class {
            QClass::PlusMinusOne => {
                literal.push((
                    "(a1,f1_(1,0)) + q^-1 (a2,f1_(2,0))".into(),
                    two(K::one(), (a1, g(1, 0)), field.q_pow(-1), (a2, g(2, 0))),
                ));
                literal.push((
                    "(b1,f1_(2,0)) + (b2,f1_(1,0))".into(),
                    two(K::one(), (b1, g(2, 0)), K::one(), (b2, g(1, 0))),
                ));
                literal.push((
                    "(a1,f1_(1,1)) + (a2,f1_(2,1))".into(),
                    two(K::one(), (a1, g(1, 1)), K::one(), (a2, g(2, 1))),
                ));
                literal.push((
                    "(b1,f1_(2,1)) + q^-1 (b2,f1_(1,1))".into(),
                    two(K::one(), (b1, g(2, 1)), field.q_pow(-1), (b2, g(1, 1))),
                ));
            }
            _ => {
                literal.push((
                    "(a1,f1_(1,1)) + (a2,f1_(2,1))".into(),
                    two(K::one(), (a1, g(1, 1)), K::one(), (a2, g(2, 1))),
                ));
                literal.push((
                    "(b1,f1_(2,0)) + (b2,f1_(1,0))".into(),
                    two(K::one(), (b1, g(2, 0)), K::one(), (b2, g(1, 0))),
                ));
            }
        }
    } else {
        match class {
            QClass::NotRootOfUnity => {
                if m == 2 {
                    literal.push((
                        "(a1b1,f2_(1,1)) + (a2b2,f2_(2,1))".into(),
                        two(K::one(), (ab1, g(1, 1)), K::one(), (ab2, g(2, 1))),
                    ));
                }
            }
            QClass::PlusMinusOne => {
                for j in 0..=m as i64 {
                    if m % 2 == 1 {
                        literal.push((
                            format!("(b1,f{m}_(2,{j})) + q^{j} (b2,f{m}_(1,{j}))"),
                            two(K::one(), (b1, g(2, j)), field.q_pow(j), (b2, g(1, j))),
                        ));
                        literal.push((
                            format!("(a1,f{m}_(1,{j})) + q^{} (a2,f{m}_(2,{j}))", j - 1),
                            two(K::one(), (a1, g(1, j)), field.q_pow(j - 1), (a2, g(2, j))),
                        ));
                    } else {
                        literal.push((
                            format!("(a1b1,f{m}_(1,{j})) + q^{} (a2b2,f{m}_(2,{j}))", j - 1),
                            two(K::one(), (ab1, g(1, j)), field.q_pow(j - 1), (ab2, g(2, j))),
                        ));
                        literal.push((
                            format!("(e1,f{m}_(1,{j})) + q^{j} (e2,f{m}_(2,{j}))"),
                            two(K::one(), (e1, g(1, j)), field.q_pow(j), (e2, g(2, j))),
                        ));
                    }
                }
            }
            QClass::PrimitiveRoot(s) => {
                let s = s as i64;
                let m64 = m as i64;
                let (span, step) = if s % 2 == 1 { (2 * s, s) } else { (s, s / 2) };
                if m64 % span == 0 && m64 > 0 {
                    let l = m64 / span;
                    for t in 0..=2 * l {
                        let j = t * step;
                        let c2 = if s % 2 == 1 { K::one() } else { field.q_pow(j) };
                        literal.push((
                            format!("(e1,f{m}_(1,{j})) + (e2,f{m}_(2,{j}))"),
                            two(K::one(), (e1, g(1, j)), c2, (e2, g(2, j))),
                        ));
                    }
                } else if (m64 - 1) % span == 0 {
                    let l = (m64 - 1) / span;
                    for t in 0..=2 * l {
                        let j = t * step;
                        literal.push((
                            format!("(b1,f{m}_(2,{j})) + (b2,f{m}_(1,{j}))"),
                            two(K::one(), (b1, g(2, j)), K::one(), (b2, g(1, j))),
                        ));
                    }
                    for t in 0..=2 * l {
                        let j = t * step + 1;
                        literal.push((
                            format!("(a1,f{m}_(1,{j})) + (a2,f{m}_(2,{j}))"),
                            two(K::one(), (a1, g(1, j)), K::one(), (a2, g(2, j))),
                        ));
                    }
                } else if (m64 - 2) % span == 0 {
                    let l = (m64 - 2) / span;
                    for t in 0..=2 * l {
                        let j = t * step + 1;
                        literal.push((
                            format!("(a1b1,f{m}_(1,{j})) + (a2b2,f{m}_(2,{j}))"),
                            two(K::one(), (ab1, g(1, j)), K::one(), (ab2, g(2, j))),
                        ));
                    }
                }
            }
        }
    }

    // adjudicate: a literal entry must be a nonzero class; if not, the
    // twist forced by the differential is applied and flagged
    let mut out = Vec::new();
    for (label, coch) in literal {
        let usable = ctx
            .class_of(&coch)
            .map(|c| !c.is_zero())
            .unwrap_or(false);
        if usable {
            out.push((label, coch, false));
            continue;
        }
        let mut terms: Vec<(BasisElem, GenIdx, K)> = coch
            .iter()
            .map(|((b, gg), c)| (*b, *gg, c.clone()))
            .collect();
        terms.sort_by_key(|(b, _, _)| b.rank());
        let corrected = if terms.len() == 2 {
            let (b0, g0, c0) = terms[0].clone();
            let (b1m, g1m, _) = terms[1].clone();
            let j = g0.j() as i64;
            let twist = match b0 {
                BasisElem::B(_) => field.q_pow(m as i64 - j - 1),
                _ => field.q_pow(j - 1),
            };
            let mut x = Cochain::zero(m);
            x.add_term(c0, b0, g0);
            x.add_term(twist, b1m, g1m);
            x
        } else {
            coch.clone()
        };
        out.push((format!("{label} [twist adjusted]"), corrected, true));
    }
    out
}

/// Criterion: cohomology dimensions match the published case lists and the
/// printed cocycles span the computed quotient.
pub fn suite_cohomology<K: Scalar>(field: &Field<K>, mmax: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("cohomology", spec_str(field));
    let class = field.classify();
    let mut ctx = Complexes::new(field.clone());
    for m in 0..=mmax {
        let got = ctx.hh_codim(m);
        let want = closed_hh_codim(class, m);
        rep.push(
            format!("dim HH^{m}"),
            got == want,
            format!("computed {got}, closed form {want}"),
        );
    }
    for m in 0..=mmax {
        let dim = ctx.hh_codim(m);
        let list = paper_cocycle_list(&mut ctx, m);
        if dim == 0 {
            rep.push(
                format!("basis span at m={m}"),
                list.is_empty(),
                "no printed cocycles expected".to_string(),
            );
            continue;
        }
        let mut span: Rref<K> = Rref::new(dim);
        let mut all_classes = true;
        let mut adjusted = 0usize;
        for (label, coch, was_adjusted) in &list {
            adjusted += usize::from(*was_adjusted);
            match ctx.class_of(coch) {
                Some(cls) => {
                    let v: SparseVec<K> = cls
                        .coords
                        .iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(i, c)| (i, c.clone()))
                        .collect();
                    span.insert(v);
                }
                None => {
                    all_classes = false;
                    rep.push(
                        format!("cocycle check at m={m}"),
                        false,
                        format!("{label} is not a cocycle"),
                    );
                }
            }
        }
        let full = span.rank() == dim;
        let detail = if adjusted > 0 {
            format!(
                "span rank {} of {dim}; {adjusted} printed entries needed the q-power twist \
                 forced by the differential",
                span.rank()
            )
        } else {
            format!("span rank {} of {dim}", span.rank())
        };
        rep.push(format!("basis span at m={m}"), all_classes && full, detail);
    }
    rep
}

/// Criterion: the ring presentation holds: every published relation is the
/// zero class, the generators generate degreewise, and the nilpotent
/// quotient matches the published ring.
pub fn suite_ring<K: Scalar>(field: &Field<K>, gen_max: usize, quot_max: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("ring", spec_str(field));
    let mut ctx = Complexes::new(field.clone());
    let pres = presentation(&mut ctx);
    for rel in pres.relations.clone() {
        let v = pres.eval_relation(&mut ctx, &rel);
        let detail = if v.is_zero() {
            String::new()
        } else {
            // a failing relation is re-derived through the bar-complex
            // oracle before being reported
            let mut d = format!("evaluates to {}", v.rep.render());
            let mut cmp = Comparison::new(field.clone());
            let mut oracle_terms: Vec<String> = Vec::new();
            for (c, mon) in &rel.terms {
                let mut acc = pres.unit.class.clone();
                let mut ok = true;
                for name in mon {
                    let g = pres.gen(name).class.clone();
                    match crate::oracle::cup_oracle(&mut ctx, &mut cmp, 7, &acc, &g) {
                        Ok(p) => acc = p,
                        Err(_) => {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    let scaled = ctx.class_scale(&acc, &c.eval(&ctx.field));
                    oracle_terms.push(scaled.rep.render());
                } else {
                    oracle_terms.push("(window exceeded)".into());
                }
            }
            d.push_str(&format!("; oracle terms: {}", oracle_terms.join(" | ")));
            d
        };
        rep.push(format!("relation {} = 0", rel.name), v.is_zero(), detail);
    }
    match generation_holds(&mut ctx, &pres, gen_max) {
        Ok(()) => rep.push(format!("generation up to degree {gen_max}"), true, ""),
        Err(m) => rep.push(
            format!("generation up to degree {gen_max}"),
            false,
            format!("products do not span HH^{m}"),
        ),
    }
    let got = nilpotent_quotient_dims(&mut ctx, quot_max);
    let want = closed_nilpotent_quotient_dims(field.classify(), quot_max);
    rep.push(
        format!("HH*/N dimensions up to degree {quot_max}"),
        got == want,
        format!("computed {got:?}, closed form {want:?}"),
    );
    rep
}

/// Criterion: the diagonal is a chain map; the closed-form cup equals the
/// diagonal-route cup on all basis pairs; the class-level product is
/// graded commutative, associative on generators, and unital.
pub fn suite_cup<K: Scalar>(field: &Field<K>, total_max: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("cup", spec_str(field));
    let mut chain_ok = true;
    for m in 1..=total_max {
        if diagonal_chain_map_holds(field, m).is_err() {
            chain_ok = false;
        }
    }
    rep.push(
        format!("diagonal chain map for m <= {total_max}"),
        chain_ok,
        "",
    );
    let mut agree = true;
    let mut table = crate::products::DiagonalTable::new();
    for m in 0..=total_max {
        for l in 0..=total_max - m {
            for (bx, gx) in l_basis(m).pairs.iter() {
                for (by, gy) in l_basis(l).pairs.iter() {
                    let x = Cochain::<K>::pair(*bx, *gx);
                    let y = Cochain::pair(*by, *gy);
                    let closed = cup_cochain(field, &x, &y);
                    let diag = crate::products::cup_via_diagonal_cached(field, &mut table, &x, &y);
                    if closed != diag {
                        agree = false;
                    }
                }
            }
        }
    }
    rep.push(
        format!("closed form = diagonal route, total degree <= {total_max}"),
        agree,
        "",
    );
    let mut ctx = Complexes::new(field.clone());
    let pres = presentation(&mut ctx);
    // unit law on stored basis classes
    let mut unit_ok = true;
    for m in 0..=total_max.min(4) {
        for x in ctx.hh_basis(m) {
            let l = cup_classes(&mut ctx, &pres.unit.class, &x);
            let r = cup_classes(&mut ctx, &x, &pres.unit.class);
            if l.coords != x.coords || r.coords != x.coords {
                unit_ok = false;
            }
        }
    }
    rep.push("unit law", unit_ok, "");
    // graded commutativity on stored basis classes
    let comm_cap = total_max.min(8);
    let mut comm_ok = true;
    for m in 0..=comm_cap {
        for l in 0..=comm_cap - m {
            let xs = ctx.hh_basis(m);
            let ys = ctx.hh_basis(l);
            let sign = if (m * l) % 2 == 0 { K::one() } else { -K::one() };
            for x in &xs {
                for y in &ys {
                    let xy = cup_classes(&mut ctx, x, y);
                    let yx = cup_classes(&mut ctx, y, x);
                    if xy.coords != ctx.class_scale(&yx, &sign).coords {
                        comm_ok = false;
                    }
                }
            }
        }
    }
    rep.push(
        format!("graded commutativity, total degree <= {comm_cap}"),
        comm_ok,
        "",
    );
    // associativity on presentation generator triples
    let mut assoc_ok = true;
    for a in pres.gens.clone() {
        for b in pres.gens.clone() {
            for c in pres.gens.clone() {
                if a.degree + b.degree + c.degree > total_max {
                    continue;
                }
                let ab = cup_classes(&mut ctx, &a.class, &b.class);
                let lhs = cup_classes(&mut ctx, &ab, &c.class);
                let bc = cup_classes(&mut ctx, &b.class, &c.class);
                let rhs = cup_classes(&mut ctx, &a.class, &bc);
                if lhs.coords != rhs.coords {
                    assoc_ok = false;
                }
            }
        }
    }
    rep.push("associativity on generator triples", assoc_ok, "");
    rep
}

/// Criterion: the homotopy identities hold and `t t = 0` / `s s = 0`.
pub fn suite_homotopy<K: Scalar>(field: &Field<K>, mmax: usize, bar_mmax: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("homotopy", spec_str(field));
    match homotopy_laws_hold::<K>(field, mmax) {
        Ok(()) => rep.push(format!("d t + t d = id and t t = 0, m <= {mmax}"), true, ""),
        Err(e) => rep.push(
            format!("d t + t d = id and t t = 0, m <= {mmax}"),
            false,
            e,
        ),
    }
    match bar_homotopy_laws_hold::<K>(field, bar_mmax) {
        Ok(()) => rep.push(
            format!("dbar s + s dbar = id and s s = 0, m <= {bar_mmax}"),
            true,
            "",
        ),
        Err(e) => rep.push(
            format!("dbar s + s dbar = id and s s = 0, m <= {bar_mmax}"),
            false,
            e,
        ),
    }
    rep
}

/// Criterion: the comparison morphisms are chain maps, invert each other
/// on cohomology, and reproduce the printed closed forms.
pub fn suite_chainmaps<K: Scalar>(
    field: &Field<K>,
    square_max: usize,
    identity_max: usize,
    bullet_max: usize,
) -> SuiteReport {
    let mut rep = SuiteReport::new("chainmaps", spec_str(field));
    let mut phi_ok = true;
    for m in 1..=square_max {
        if phi_chain_map_holds::<K>(field, m).is_err() {
            phi_ok = false;
        }
    }
    rep.push(format!("Phi square commutes, m <= {square_max}"), phi_ok, "");
    let mut cmp = Comparison::new(field.clone());
    let mut psi_ok = true;
    for m in 1..=square_max {
        if psi_chain_map_holds::<K>(&mut cmp, m).is_err() {
            psi_ok = false;
        }
    }
    rep.push(format!("Psi square commutes, m <= {square_max}"), psi_ok, "");
    let mut ctx = Complexes::new(field.clone());
    let mut id_ok = true;
    for m in 0..=identity_max {
        if psi_phi_identity_on_hh(&mut ctx, &mut cmp, m).is_err() {
            id_ok = false;
        }
    }
    rep.push(
        format!("Psi Phi induces the identity on HH, m <= {identity_max}"),
        id_ok,
        "",
    );
    let mismatches = psi_bullet_mismatches(&mut cmp, bullet_max);
    rep.push(
        format!("printed Psi closed forms reproduced, m <= {bullet_max}"),
        mismatches.is_empty(),
        if mismatches.is_empty() {
            String::new()
        } else {
            format!("{} mismatching sequences, first: {}", mismatches.len(), mismatches[0].1)
        },
    );
    rep
}

/// Criterion: every published BV table entry is reproduced, the operator
/// squares to zero, and the bracket laws hold.
pub fn suite_bv_tables<K: Scalar>(
    field: &Field<K>,
    dd_max: usize,
    leibniz_total_max: usize,
) -> SuiteReport {
    let mut rep = SuiteReport::new("bv-tables", spec_str(field));
    let mut ctx = Complexes::new(field.clone());
    let mut cmp = Comparison::new(field.clone());
    let pres = presentation(&mut ctx);
    for check in verify_bv_tables(&mut ctx, &mut cmp, &pres) {
        let detail = if check.pass {
            String::new()
        } else {
            // a table mismatch is adjudicated by the independent
            // circle-product oracle before being reported
            let mut d = format!("computed {}, published {}", check.computed, check.expected);
            if let crate::bv::TableCheckKind::Bracket(a, b) = &check.kind {
                let ca = pres.gen(a).class.clone();
                let cb = pres.gen(b).class.clone();
                match bracket_oracle(&mut ctx, &mut cmp, 7, &ca, &cb) {
                    Ok(or) => d.push_str(&format!("; oracle gives {}", or.rep.render())),
                    Err(_) => d.push_str("; oracle window exceeded"),
                }
            }
            d
        };
        rep.push(check.label, check.pass, detail);
    }
    let mut dd_ok = true;
    for m in 1..=dd_max {
        for x in ctx.hh_basis(m) {
            let d1 = bv_delta(&mut ctx, &mut cmp, &x).expect("positive degree");
            if d1.degree >= 1 {
                let d2 = bv_delta(&mut ctx, &mut cmp, &d1).expect("positive degree");
                if !d2.is_zero() {
                    dd_ok = false;
                }
            }
        }
    }
    rep.push(format!("Delta Delta = 0, degree <= {dd_max}"), dd_ok, "");
    match bracket_antisymmetry_holds(&mut ctx, &mut cmp, &pres) {
        Ok(()) => rep.push("graded antisymmetry on generator pairs", true, ""),
        Err(e) => rep.push("graded antisymmetry on generator pairs", false, e),
    }
    match leibniz_holds(&mut ctx, &mut cmp, &pres, leibniz_total_max) {
        Ok(()) => rep.push(
            format!("Leibniz law on generator triples, total degree <= {leibniz_total_max}"),
            true,
            "",
        ),
        Err(e) => rep.push(
            format!("Leibniz law on generator triples, total degree <= {leibniz_total_max}"),
            false,
            e,
        ),
    }
    // bracket degree law on a few generator pairs
    let mut degree_ok = true;
    for a in pres.gens.clone() {
        for b in pres.gens.clone() {
            if a.degree + b.degree == 0 || a.degree + b.degree - 1 > dd_max + 2 {
                continue;
            }
            let br = bracket(&mut ctx, &mut cmp, &a.class, &b.class);
            if !br.is_zero() && br.degree != a.degree + b.degree - 1 {
                degree_ok = false;
            }
        }
    }
    rep.push("bracket degree |x|+|y|-1", degree_ok, "");
    rep
}

/// Criterion: the Gerstenhaber ideal generated by the nilpotent classes
/// leaves only the degree-0 line.
pub fn suite_g_ideal<K: Scalar>(field: &Field<K>, bound: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("g-ideal", spec_str(field));
    let mut ctx = Complexes::new(field.clone());
    let mut cmp = Comparison::new(field.clone());
    let dims = gerstenhaber_ideal_quotient_dims(&mut ctx, &mut cmp, bound);
    let want: Vec<usize> = (0..=bound).map(|d| usize::from(d == 0)).collect();
    rep.push(
        format!("HH*/G = k in degrees <= {bound}"),
        dims == want,
        format!("computed {dims:?}"),
    );
    rep
}

/// Criterion: the bar-complex oracle agrees with the minimal resolution:
/// dimensions, transported cup products, and brackets.
pub fn suite_oracle<K: Scalar>(field: &Field<K>, mmax: usize) -> SuiteReport {
    let mut rep = SuiteReport::new("oracle-crosscheck", spec_str(field));
    let mut oracle = Oracle::new(field.clone());
    let mut ctx = Complexes::new(field.clone());
    let mut cmp = Comparison::new(field.clone());
    for m in 0..=mmax {
        match oracle.hh_dim_oracle(m) {
            Ok(got) => {
                let want = ctx.hh_codim(m);
                rep.push(
                    format!("bar-complex dim HH^{m}"),
                    got == want,
                    format!("oracle {got}, minimal resolution {want}"),
                );
            }
            Err(e) => rep.push(format!("bar-complex dim HH^{m}"), false, e.to_string()),
        }
    }
    let mut dd_ok = true;
    for m in 0..mmax.min(4) {
        if !oracle.delta_squared_zero(m) {
            dd_ok = false;
        }
    }
    rep.push("bar differential squares to zero", dd_ok, "");
    // transported cup against the closed form, all basis-class pairs
    let mut cup_ok = true;
    for m in 0..=mmax {
        for l in 0..=mmax.saturating_sub(m) {
            let xs = ctx.hh_basis(m);
            let ys = ctx.hh_basis(l);
            for x in &xs {
                for y in &ys {
                    let direct = cup_classes(&mut ctx, x, y);
                    let via_bar = cup_oracle(&mut ctx, &mut cmp, 7, x, y)
                        .expect("within window");
                    if direct.coords != via_bar.coords {
                        cup_ok = false;
                    }
                }
            }
        }
    }
    rep.push(
        format!("cup transported through the bar complex, total degree <= {mmax}"),
        cup_ok,
        "",
    );
    // brackets on presentation generator pairs within the window
    let pres: Presentation<K> = presentation(&mut ctx);
    let mut br_ok = true;
    for a in pres.gens.clone() {
        for b in pres.gens.clone() {
            if a.degree + b.degree > mmax || a.degree + b.degree == 0 {
                continue;
            }
            let via_bv = bracket(&mut ctx, &mut cmp, &a.class, &b.class);
            let via_bar = bracket_oracle(&mut ctx, &mut cmp, 7, &a.class, &b.class)
                .expect("within window");
            if via_bv.coords != via_bar.coords {
                br_ok = false;
            }
        }
    }
    rep.push(
        format!("brackets via circle products, total degree <= {mmax}"),
        br_ok,
        "",
    );
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    #[test]
    fn rank_suite_flags_published_gap() {
        // at zeta_3 the printed case list misses rank tau_6
        let f = Field::cyclotomic(3).unwrap();
        let rep = suite_rank_formulas(&f, 6);
        assert!(rep.pass);
        let flagged: Vec<_> = rep
            .checks
            .iter()
            .filter(|c| c.detail.contains("printed case list"))
            .collect();
        assert!(!flagged.is_empty(), "expected a flagged entry at m = 6");
    }

    #[test]
    fn cohomology_suite_passes_odd_and_even_roots() {
        let f = Field::cyclotomic(3).unwrap();
        let rep = suite_cohomology(&f, 7);
        assert!(rep.pass, "{:?}", rep.failures().collect::<Vec<_>>());
        // even order: the printed lists need the twist adjudication
        let f = Field::cyclotomic(4).unwrap();
        let rep = suite_cohomology(&f, 6);
        assert!(rep.pass, "{:?}", rep.failures().collect::<Vec<_>>());
        let adjusted = rep
            .checks
            .iter()
            .any(|c| c.detail.contains("twist"));
        assert!(adjusted, "expected twist adjudications for even order");
    }

    #[test]
    fn quick_suites_smoke() {
        let f = Field::rational_int(-1).unwrap();
        assert!(suite_complex_laws(&f, 6).pass);
        assert!(suite_homology_dims(&f, 6).pass);
        assert!(suite_cyclic_dims(&f, 6).pass);
        assert!(suite_homotopy(&f, 4, 3).pass);
        let f = Field::generic();
        assert!(suite_ring(&f, 5, 4).pass);
        assert!(suite_g_ideal(&f, 4).pass);
    }
}
