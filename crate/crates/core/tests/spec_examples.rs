//! Pinned example values: small, independently derived facts that anchor
//! the implementation (empty-basis windows, specific operator values, the
//! degenerate circle-product rules).

use std::collections::HashMap;
use zigzag_core::algebra::{AlgElem, BasisElem, Vertex};
use zigzag_core::bv::{bracket, bv_delta, Comparison};
use zigzag_core::complexes::Complexes;
use zigzag_core::oracle::{
    bracket_oracle, circle_eval, circle_i_eval, TransportedCochain,
};
use zigzag_core::products::{cup_classes, presentation};
use zigzag_core::resolution::bar_sequences;
use zigzag_core::{BigRational, Field};

#[test]
fn hh_basis_is_empty_off_window_zeta4() {
    // at a primitive fourth root, degree 3 carries no cohomology
    let mut ctx = Complexes::new(Field::cyclotomic(4).unwrap());
    assert!(ctx.hh_basis(3).is_empty());
    assert_eq!(ctx.hh_codim(3), 0);
}

#[test]
fn delta_u1w0_at_cube_root() {
    // Delta(u1 w0) = (2s + 1) w0 = 7 w0 at s = 3
    let mut ctx = Complexes::new(Field::cyclotomic(3).unwrap());
    let mut cmp = Comparison::new(ctx.field.clone());
    let pres = presentation(&mut ctx);
    let u1 = pres.gen("u1").class.clone();
    let w0 = pres.gen("w0").class.clone();
    let prod = cup_classes(&mut ctx, &u1, &w0);
    let d = bv_delta(&mut ctx, &mut cmp, &prod).unwrap();
    let seven = ctx.field.int(7);
    let expected = ctx.class_scale(&w0, &seven);
    assert_eq!(d.coords, expected.coords);
}

#[test]
fn brackets_z_u_generic() {
    // [z_i, u_j] = -z_i for all four pairs at generic q
    let mut ctx = Complexes::new(Field::generic());
    let mut cmp = Comparison::new(ctx.field.clone());
    let pres = presentation(&mut ctx);
    for zi in ["z1", "z2"] {
        for uj in ["u1", "u2"] {
            let z = pres.gen(zi).class.clone();
            let u = pres.gen(uj).class.clone();
            let br = bracket(&mut ctx, &mut cmp, &z, &u);
            let minus_one = -ctx.field.one();
            let expected = ctx.class_scale(&z, &minus_one);
            assert_eq!(br.coords, expected.coords, "[{zi},{uj}]");
        }
    }
}

#[test]
fn bracket_oracle_u1_w1_at_q_one() {
    // the published value [u1, w1] = -w0 at q = 1, recovered through the
    // circle-product oracle
    let mut ctx = Complexes::new(Field::rational_int(1).unwrap());
    let mut cmp = Comparison::new(ctx.field.clone());
    let pres = presentation(&mut ctx);
    let u1 = pres.gen("u1").class.clone();
    let w1 = pres.gen("w1").class.clone();
    let w0 = pres.gen("w0").class.clone();
    let br = bracket_oracle(&mut ctx, &mut cmp, 7, &u1, &w1).unwrap();
    let minus_one = -ctx.field.one();
    let expected = ctx.class_scale(&w0, &minus_one);
    assert_eq!(br.coords, expected.coords);
    // and it matches the BV-identity bracket
    let via_bv = bracket(&mut ctx, &mut cmp, &u1, &w1);
    assert_eq!(br.coords, via_bv.coords);
}

#[test]
fn identity_cochain_is_a_circle_unit() {
    // the identity 1-cochain a -> a satisfies (id circle_1 b) = b
    let field = Field::rational_int(2).unwrap();
    let mut vals: HashMap<Vec<BasisElem>, AlgElem<BigRational>> = HashMap::new();
    for seq in bar_sequences(1) {
        vals.insert(seq.clone(), AlgElem::basis(seq[0]));
    }
    let id = TransportedCochain::from_values(1, vals);
    // b: a 1-cochain with assorted values
    let mut bvals: HashMap<Vec<BasisElem>, AlgElem<BigRational>> = HashMap::new();
    for (i, seq) in bar_sequences(1).into_iter().enumerate() {
        if i % 2 == 0 {
            bvals.insert(seq.clone(), AlgElem::basis(seq[0]));
        }
    }
    let b = TransportedCochain::from_values(1, bvals.clone());
    for seq in bar_sequences(1) {
        let got = circle_i_eval(&field, &id, 1, &b, &seq, seq[0].source());
        let want = b.eval(&seq, seq[0].source());
        assert_eq!(got, want);
    }
}

#[test]
fn degenerate_insertion_of_idempotents_vanishes() {
    // inserting the unit 0-cochain hits only idempotent components, which
    // die under the normalized convention, so x circle 1 = 0 and the
    // bracket [x, 1] vanishes identically
    let field = Field::rational_int(2).unwrap();
    let mut vals: HashMap<Vec<BasisElem>, AlgElem<BigRational>> = HashMap::new();
    for seq in bar_sequences(1) {
        vals.insert(seq.clone(), AlgElem::basis(seq[0]));
    }
    let x = TransportedCochain::from_values(1, vals);
    let unit = TransportedCochain::from_vertex_values([
        AlgElem::basis(BasisElem::e(1)),
        AlgElem::basis(BasisElem::e(2)),
    ]);
    // x circle unit has degree 1 + 0 - 1 = 0: evaluate on the empty word
    for v in [Vertex::V1, Vertex::V2] {
        let got = circle_eval(&field, &x, &unit, &[], v);
        assert!(got.is_zero());
    }
    // loop-valued 0-cochains do insert
    let loops = TransportedCochain::from_vertex_values([
        AlgElem::basis(BasisElem::ab(1)),
        AlgElem::basis(BasisElem::ab(2)),
    ]);
    let mut some_nonzero = false;
    for v in [Vertex::V1, Vertex::V2] {
        if !circle_eval(&field, &x, &loops, &[], v).is_zero() {
            some_nonzero = true;
        }
    }
    assert!(some_nonzero);
}

#[test]
fn homotopy_t_unit_spot() {
    // t_{-1}(e_i) = e_i (x) e_i, extended right-linearly
    let field = Field::rational_int(2).unwrap();
    let x = AlgElem::<BigRational>::basis(BasisElem::a(1));
    let t = zigzag_core::bv::homotopy_t_unit(&field, &x);
    let terms: Vec<_> = t.iter().collect();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0].0.left, BasisElem::e(1));
    assert_eq!(terms[0].0.right, BasisElem::a(1));
    assert_eq!(terms[0].0.gen.origin(), Vertex::V1);
}
