//! Acceptance suite: every published table and law, verified end to end at
//! the stated windows, for q in {generic, 1, -1, zeta_3, zeta_4, zeta_5,
//! zeta_6}. Each test prints one pass line per criterion on success; a
//! failure carries the offending checks in its panic message.

use zigzag_core::report::SuiteReport;
use zigzag_core::suites::*;
use zigzag_core::Field;

macro_rules! for_all_fields {
    ($f:ident, $body:block) => {{
        {
            let $f = Field::generic();
            $body
        }
        {
            let $f = Field::rational_int(1).unwrap();
            $body
        }
        {
            let $f = Field::rational_int(-1).unwrap();
            $body
        }
        {
            let $f = Field::cyclotomic(3).unwrap();
            $body
        }
        {
            let $f = Field::cyclotomic(4).unwrap();
            $body
        }
        {
            let $f = Field::cyclotomic(5).unwrap();
            $body
        }
        {
            let $f = Field::cyclotomic(6).unwrap();
            $body
        }
    }};
}

fn demand(rep: &SuiteReport) {
    if !rep.pass {
        let failures: Vec<String> = rep
            .failures()
            .map(|c| format!("{}: {}", c.label, c.detail))
            .collect();
        panic!(
            "suite {} failed for {}:\n{}",
            rep.suite,
            rep.qspec,
            failures.join("\n")
        );
    }
}

#[test]
fn criterion_01_complex_laws() {
    for_all_fields!(f, {
        demand(&suite_complex_laws(&f, 20));
    });
    println!("ACCEPTANCE 01 complex laws (d.d, tau.tau, sigma.sigma = 0, m <= 20): PASS");
}

#[test]
fn criterion_02_homology_dimensions() {
    for_all_fields!(f, {
        demand(&suite_homology_dims(&f, 24));
    });
    println!("ACCEPTANCE 02 homology dimensions (m <= 24, all q): PASS");
}

#[test]
fn criterion_03_cyclic_homology() {
    for_all_fields!(f, {
        demand(&suite_cyclic_dims(&f, 24));
    });
    println!("ACCEPTANCE 03 cyclic homology recursion vs closed form (m <= 24): PASS");
}

#[test]
fn criterion_04_cohomology_dims_and_bases() {
    for_all_fields!(f, {
        demand(&suite_cohomology(&f, 12));
    });
    println!("ACCEPTANCE 04 cohomology dimensions and printed bases span (m <= 12): PASS");
}

#[test]
fn criterion_05_rank_formulas() {
    for_all_fields!(f, {
        demand(&suite_rank_formulas(&f, 20));
    });
    println!("ACCEPTANCE 05 rank case formulas (m <= 20): PASS");
}

#[test]
fn criterion_06_ring_structure() {
    for_all_fields!(f, {
        demand(&suite_ring(&f, 10, 8));
    });
    println!("ACCEPTANCE 06 ring presentations, generation <= 10, HH*/N dims <= 8: PASS");
}

#[test]
fn criterion_07_cup_coherence() {
    for_all_fields!(f, {
        demand(&suite_cup(&f, 10));
    });
    println!("ACCEPTANCE 07 cup coherence (closed = diagonal, total degree <= 10): PASS");
}

#[test]
fn criterion_08_comparison_machinery() {
    for_all_fields!(f, {
        demand(&suite_homotopy(&f, 8, 6));
        demand(&suite_chainmaps(&f, 8, 6, 5));
    });
    println!(
        "ACCEPTANCE 08 homotopy laws m <= 8, chain maps m <= 8, Psi Phi = id m <= 6, \
         Psi closed forms m <= 5: PASS"
    );
}

#[test]
fn criterion_09_bv_tables_minus_one() {
    let f = Field::rational_int(-1).unwrap();
    demand(&suite_bv_tables(&f, 6, 8));
    println!("ACCEPTANCE 09a BV tables at q = -1 (with Delta^2 = 0 to degree 6): PASS");
}

#[test]
fn criterion_09_bv_tables_plus_one() {
    let f = Field::rational_int(1).unwrap();
    demand(&suite_bv_tables(&f, 6, 8));
    println!("ACCEPTANCE 09b BV tables at q = 1: PASS");
}

#[test]
fn criterion_09_bv_tables_generic() {
    let f = Field::generic();
    demand(&suite_bv_tables(&f, 6, 8));
    println!("ACCEPTANCE 09c BV tables at generic q: PASS");
}

#[test]
fn criterion_09_bv_tables_zeta3() {
    let f = Field::cyclotomic(3).unwrap();
    demand(&suite_bv_tables(&f, 6, 8));
    println!("ACCEPTANCE 09d BV tables at a primitive cube root (s = 3): PASS");
}

#[test]
fn criterion_09_bv_tables_zeta4() {
    let f = Field::cyclotomic(4).unwrap();
    demand(&suite_bv_tables(&f, 6, 8));
    println!("ACCEPTANCE 09e BV tables at a primitive fourth root (s = 4): PASS");
}

#[test]
fn criterion_10_oracle_rational() {
    for q in [1i64, -1] {
        let f = Field::rational_int(q).unwrap();
        demand(&suite_oracle(&f, 5));
    }
    println!("ACCEPTANCE 10a bar-complex oracle agreement, q = 1 and -1 (m <= 5): PASS");
}

#[test]
fn criterion_10_oracle_zeta34() {
    for s in [3u32, 4] {
        let f = Field::cyclotomic(s).unwrap();
        demand(&suite_oracle(&f, 5));
    }
    println!("ACCEPTANCE 10b bar-complex oracle agreement, s = 3, 4 (m <= 5): PASS");
}

#[test]
fn criterion_10_oracle_zeta56() {
    for s in [5u32, 6] {
        let f = Field::cyclotomic(s).unwrap();
        demand(&suite_oracle(&f, 5));
    }
    println!("ACCEPTANCE 10c bar-complex oracle agreement, s = 5, 6 (m <= 5): PASS");
}

#[test]
fn criterion_10_oracle_generic() {
    let f = Field::generic();
    demand(&suite_oracle(&f, 5));
    println!("ACCEPTANCE 10d bar-complex oracle agreement, generic q (m <= 5): PASS");
}

#[test]
fn criterion_11_gerstenhaber_ideal() {
    for_all_fields!(f, {
        demand(&suite_g_ideal(&f, 8));
    });
    println!("ACCEPTANCE 11 Gerstenhaber-ideal quotient is k (degrees <= 8): PASS");
}
