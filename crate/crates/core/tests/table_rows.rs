//! Witness pairs for the rarer answer-table rows: containments, the
//! degree-4 subfield collisions, and the kernel-based disambiguations.

use qg_core::forms::{
    quartic_galois_group, resolvent_cubic, GaloisLabel, GeneralQuartic, QuarticForm,
};
use qg_core::intersect::{genuine_kernels, intersect, Relation};
use qg_core::scalar::{rat, rat2, squarefree_kernel, Int};
use qg_core::UniPoly;

#[test]
fn s3_inside_s4_containment() {
    // the resolvent-cubic field of x^4+x+1 sits inside its splitting field:
    // pair the quartic with (x-1) * (its resolvent cubic)
    let quartic = UniPoly::from_int_coeffs(&[1, 1, 0, 0, 1]);
    let cubic = resolvent_cubic(&GeneralQuartic::from_poly(&quartic).unwrap());
    assert_eq!(cubic, UniPoly::from_int_coeffs(&[-1, -4, 0, 1]));
    let reducible = &UniPoly::from_int_coeffs(&[-1, 1]) * &cubic;
    let ans = intersect(&reducible, &quartic).unwrap();
    assert_eq!(ans.rows[0].row_id, "IV-3");
    assert_eq!(ans.relation, Relation::BContainsA);
    assert_eq!(ans.degree, 6);
    // and with the arguments the other way around
    let ans2 = intersect(&quartic, &reducible).unwrap();
    assert_eq!(ans2.relation, Relation::AContainsB);
    assert_eq!(ans2.degree, 6);
}

#[test]
fn c3_inside_a4_containment() {
    let b = rat2(64, 9);
    let quartic = QuarticForm::s4(rat(0), b.clone()).poly();
    let g = GeneralQuartic::from_poly(&quartic).unwrap();
    assert_eq!(quartic_galois_group(&g).unwrap(), GaloisLabel::A4);
    let cubic = resolvent_cubic(&g);
    let reducible = &UniPoly::from_int_coeffs(&[-1, 1]) * &cubic;
    let gr = GeneralQuartic::from_poly(&reducible).unwrap();
    assert_eq!(quartic_galois_group(&gr).unwrap(), GaloisLabel::C3);
    let ans = intersect(&reducible, &quartic).unwrap();
    assert_eq!(ans.rows[0].row_id, "V-3");
    assert_eq!(ans.relation, Relation::BContainsA);
    assert_eq!(ans.degree, 3);
}

#[test]
fn v4_inside_d4_containment() {
    // Spl(x^4+3) contains the biquadratic field Q(sqrt3, i), which is the
    // splitting field of x^4-4x^2+16 (minimal polynomial of sqrt3 + i)
    let d4 = QuarticForm::d4(rat(0), rat(3));
    let v4 = UniPoly::from_int_coeffs(&[16, 0, -4, 0, 1]);
    let gv = GeneralQuartic::from_poly(&v4).unwrap();
    assert_eq!(quartic_galois_group(&gv).unwrap(), GaloisLabel::V4);
    let ans = intersect(&d4.poly(), &v4).unwrap();
    assert!(ans.rows[0].row_id == "II-22" || ans.rows[0].row_id == "II-23");
    assert_eq!(ans.relation, Relation::AContainsB);
    assert_eq!(ans.degree, 4);
    // swapped
    let ans2 = intersect(&v4, &d4.poly()).unwrap();
    assert_eq!(ans2.relation, Relation::BContainsA);
}

#[test]
fn d4_pair_with_common_biquadratic_field() {
    // (0,3) and (0,12) have the same three quadratic subfields (kernels
    // 3, -1, -3) but different octics (12^(1/4) = sqrt2 * 3^(1/4) is not in
    // Q(3^(1/4), i)): intersection is the biquadratic field, degree 4
    // (rows II-7..II-11). (0,27) would instead be field-equal to (0,3):
    // 27^(1/4) = 3 / 3^(1/4).
    let fa = QuarticForm::d4(rat(0), rat(3));
    let fb = QuarticForm::d4(rat(0), rat(12));
    let ga = GeneralQuartic::from_poly(&fa.poly()).unwrap();
    let gb = GeneralQuartic::from_poly(&fb.poly()).unwrap();
    assert_eq!(quartic_galois_group(&ga).unwrap(), GaloisLabel::D4);
    assert_eq!(quartic_galois_group(&gb).unwrap(), GaloisLabel::D4);
    let ka = genuine_kernels(GaloisLabel::D4, &ga).unwrap();
    let kb = genuine_kernels(GaloisLabel::D4, &gb).unwrap();
    assert_eq!(ka, kb);
    let ans = intersect(&fa.poly(), &fb.poly()).unwrap();
    assert_eq!(ans.degree, 4);
    assert_ne!(ans.relation, Relation::Equal);
    assert!(ans.rows[0].row_id.starts_with("II-"));
    // and the scaled (0,27) really is field-equal
    let ans2 = intersect(&fa.poly(), &QuarticForm::d4(rat(0), rat(27)).poly()).unwrap();
    assert_eq!(ans2.relation, Relation::Equal);
}

#[test]
fn s4_d4_shared_quadratic_disambiguation() {
    // find an S4 quartic whose discriminant kernel lies among the D4 side's
    // three kernels: rows I-7/I-8 (degree 2) instead of I-6 (trivial)
    let d4 = QuarticForm::d4(rat(0), rat(3));
    let gd = GeneralQuartic::from_poly(&d4.poly()).unwrap();
    let dk = genuine_kernels(GaloisLabel::D4, &gd).unwrap();
    let mut found = false;
    'search: for s in -9i64..=9 {
        for t in 1i64..=9 {
            let f = QuarticForm::s4(rat(s), rat(t));
            if !f.is_separable() {
                continue;
            }
            let g = GeneralQuartic::from_poly(&f.poly()).unwrap();
            if quartic_galois_group(&g).unwrap() != GaloisLabel::S4 {
                continue;
            }
            let k = squarefree_kernel(&f.discriminant());
            if !dk.contains(&k) {
                continue;
            }
            let ans = intersect(&f.poly(), &d4.poly()).unwrap();
            assert_eq!(ans.degree, 2, "at ({s},{t}) kernel {k}");
            assert!(ans
                .rows
                .iter()
                .all(|r| r.row_id == "I-7" || r.row_id == "I-8" || r.row_id == "I-9"));
            found = true;
            break 'search;
        }
    }
    assert!(found, "no S4 quartic with a shared kernel in range");
}

#[test]
fn s4_v4_disambiguation() {
    // x^4+1 has subfield kernels {-2, -1, 2}; an S4 quartic with
    // discriminant kernel in that set shares a quadratic (row I-13),
    // one without shares nothing (row I-12)
    let v4 = UniPoly::from_int_coeffs(&[1, 0, 0, 0, 1]);
    let gv = GeneralQuartic::from_poly(&v4).unwrap();
    let kv = genuine_kernels(GaloisLabel::V4, &gv).unwrap();
    assert_eq!(kv, vec![Int::from(-2), Int::from(-1), Int::from(2)]);
    let mut hit = [false, false];
    for s in -9i64..=9 {
        for t in 1i64..=9 {
            if hit[0] && hit[1] {
                return;
            }
            let f = QuarticForm::s4(rat(s), rat(t));
            if !f.is_separable() {
                continue;
            }
            let g = GeneralQuartic::from_poly(&f.poly()).unwrap();
            if quartic_galois_group(&g).unwrap() != GaloisLabel::S4 {
                continue;
            }
            let k = squarefree_kernel(&f.discriminant());
            let ans = intersect(&f.poly(), &v4).unwrap();
            if kv.contains(&k) {
                assert_eq!(ans.rows[0].row_id, "I-13", "at ({s},{t})");
                assert_eq!(ans.degree, 2);
                hit[0] = true;
            } else {
                assert_eq!(ans.rows[0].row_id, "I-12", "at ({s},{t})");
                assert_eq!(ans.degree, 1);
                hit[1] = true;
            }
        }
    }
    assert!(hit[0] && hit[1], "both branches should occur in range");
}

#[test]
fn broad_pair_sweep_never_inconsistent() {
    // a structured sweep over small parameters: every in-scope pair must
    // resolve to a table row with coherent degree arithmetic
    let mut polys: Vec<UniPoly> = Vec::new();
    for s in [-3i64, 0, 2, 5] {
        for t in [1i64, 2, 3, -1] {
            let f = QuarticForm::s4(rat(s), rat(t));
            if f.is_separable() {
                polys.push(f.poly());
            }
            let d = QuarticForm::d4(rat(s), rat(t));
            if d.is_separable() {
                polys.push(d.poly());
            }
        }
    }
    let mut pairs = 0;
    let mut rows_seen = std::collections::BTreeSet::new();
    for (i, f) in polys.iter().enumerate() {
        for g in polys.iter().skip(i).step_by(3) {
            let Ok(la) = quartic_galois_group(&GeneralQuartic::from_poly(f).unwrap()) else {
                continue;
            };
            let Ok(lb) = quartic_galois_group(&GeneralQuartic::from_poly(g).unwrap()) else {
                continue;
            };
            if la.order() <= 2
                || lb.order() <= 2
                || la == GaloisLabel::ReducibleOther
                || lb == GaloisLabel::ReducibleOther
            {
                continue;
            }
            let ans = intersect(f, g).expect("in-scope pair must resolve");
            // degree divides both splitting-field degrees
            assert_eq!(la.order() % ans.degree as usize, 0);
            assert_eq!(lb.order() % ans.degree as usize, 0);
            // equality iff full degree on both sides
            assert_eq!(
                ans.relation == Relation::Equal,
                ans.degree as usize == la.order() && ans.degree as usize == lb.order()
            );
            rows_seen.insert(ans.rows[0].row_id.clone());
            pairs += 1;
        }
    }
    assert!(pairs >= 60, "sweep too small: {pairs}");
    assert!(rows_seen.len() >= 8, "rows seen: {rows_seen:?}");
}
