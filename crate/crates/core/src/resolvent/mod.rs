//! Multi-resolvent polynomials for pairs of quartics.
//!
//! For two quartics f, g with roots alpha_i, beta_i, the degree-24 resolvent
//! prod over all matchings pi in S4 of (X - sum_i alpha_i beta_pi(i)) detects
//! how the two splitting fields are related: its factorization over Q mirrors
//! the double-coset structure of the joint Galois group. This module builds
//! the resolvent from closed forms in the family parameters (no root finding):
//! the S4-form pair resolvent G1^2 - D D' G2^2, the biquadratic-pair splitting
//! R1 * R2^2, and the specialized C4/V4 products. `oracle` reconstructs the
//! same polynomials from certified high-precision roots and is used to
//! cross-validate every closed form.

pub mod oracle;
mod tables;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::forms::{FormKind, QuarticForm, RatPow};
use crate::scalar::{rat, Rat};
use crate::UniPoly;

/// Which coset family a `MultiResolvent` was built from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ResolventCase {
    /// Pair of X^4+sX^2+tX+t forms; parts are (G1, G2),
    /// total = G1^2 - D D' G2^2.
    S4Pair,
    /// Pair of X^4+sX^2+t forms; parts are (R1, R2), total = R1 * R2^2.
    D4Pair,
}

/// A pair resolvent with its structural decomposition.
#[derive(Clone, Debug)]
pub struct MultiResolvent {
    pub case: ResolventCase,
    /// Degree-24 resolvent over Q.
    pub total: UniPoly,
    /// G1 (degree 12) or R1 (degree 8).
    pub part_a: UniPoly,
    /// G2 (degree 6) or R2 (degree 8).
    pub part_b: UniPoly,
    /// D_a * D_a' for the S4 case (1 for the D4 case).
    pub disc_product: Rat,
}

fn eval_table(
    table: &[&[(u8, u8, u8, u8, i64, i64)]],
    s: &Rat,
    t: &Rat,
    s2: &Rat,
    t2: &Rat,
) -> UniPoly {
    let mut coeffs = Vec::with_capacity(table.len());
    for monos in table {
        let mut acc = Rat::zero();
        for &(i, j, k, l, num, den) in *monos {
            acc = acc
                + crate::scalar::rat2(num, den)
                    * s.powu(i as usize)
                    * t.powu(j as usize)
                    * s2.powu(k as usize)
                    * t2.powu(l as usize);
        }
        coeffs.push(acc);
    }
    UniPoly::new(coeffs)
}

fn expect_kind(f: &QuarticForm, kind: FormKind) -> Result<()> {
    if f.kind != kind {
        return Err(Error::DegreeMismatch(String::from("wrong form kind")));
    }
    Ok(())
}

/// Degree-24 resolvent of a pair of S4 forms, with its G1/G2 decomposition.
pub fn resolvent_s4(a: &QuarticForm, a2: &QuarticForm) -> Result<MultiResolvent> {
    expect_kind(a, FormKind::S4)?;
    expect_kind(a2, FormKind::S4)?;
    if !a.is_separable() || !a2.is_separable() {
        return Err(Error::Inseparable);
    }
    let (s, t) = (&a.p0, &a.p1);
    let (s2, t2) = (&a2.p0, &a2.p1);
    let g1 = eval_table(tables::G1_COEFFS, s, t, s2, t2);
    let g2 = eval_table(tables::G2_COEFFS, s, t, s2, t2);
    let dd = a.discriminant() * a2.discriminant();
    let total = &(&g1 * &g1) - &(&(&g2 * &g2) * &dd);
    Ok(MultiResolvent {
        case: ResolventCase::S4Pair,
        total,
        part_a: g1,
        part_b: g2,
        disc_product: dd,
    })
}

/// R1: the biquadratic-pair resolvent of degree 8 (cosets of D4'' in D4 x D4).
pub fn d4_r1(s: &Rat, t: &Rat, s2: &Rat, t2: &Rat) -> UniPoly {
    let c6 = rat(-8) * s * s2;
    let c4 =
        rat(16) * (s * s * s2 * s2 + rat(2) * t * s2 * s2 + rat(2) * s * s * t2 - rat(16) * t * t2);
    let c2 = rat(-128) * s * s2 * (t * s2 * s2 + s * s * t2 - rat(8) * t * t2);
    let c0 = rat(256) * (t * s2 * s2 - s * s * t2).powu(2);
    UniPoly::new(vec![
        c0,
        Rat::zero(),
        c2,
        Rat::zero(),
        c4,
        Rat::zero(),
        c6,
        Rat::zero(),
        Rat::one(),
    ])
}

/// R2: the complementary degree-8 part; the full 24-matching resolvent of a
/// biquadratic pair is R1 * R2^2.
pub fn d4_r2(s: &Rat, t: &Rat, s2: &Rat, t2: &Rat) -> UniPoly {
    let d = s * s - rat(4) * t;
    let d2 = s2 * s2 - rat(4) * t2;
    let c6 = rat(-4) * s * s2;
    let c4 = rat(2)
        * (rat(3) * s * s * s2 * s2
            - rat(4) * t * s2 * s2
            - rat(4) * s * s * t2
            - rat(16) * t * t2);
    let c2 = rat(-4) * s * s2 * &d * &d2;
    let c0 = &d * &d * &d2 * &d2;
    UniPoly::new(vec![
        c0,
        Rat::zero(),
        c2,
        Rat::zero(),
        c4,
        Rat::zero(),
        c6,
        Rat::zero(),
        Rat::one(),
    ])
}

/// Pair resolvent of two D4 forms: total = R1 * R2^2 of degree 24.
pub fn resolvent_d4(a: &QuarticForm, a2: &QuarticForm) -> Result<MultiResolvent> {
    let (s, t) = a
        .d4_params()
        .ok_or_else(|| Error::DegreeMismatch(String::from("first argument must be biquadratic")))?;
    let (s2, t2) = a2.d4_params().ok_or_else(|| {
        Error::DegreeMismatch(String::from("second argument must be biquadratic"))
    })?;
    if !a.is_separable() || !a2.is_separable() {
        return Err(Error::Inseparable);
    }
    let r1 = d4_r1(&s, &t, &s2, &t2);
    let r2 = d4_r2(&s, &t, &s2, &t2);
    let total = &r1 * &(&r2 * &r2);
    Ok(MultiResolvent {
        case: ResolventCase::D4Pair,
        total,
        part_a: r1,
        part_b: r2,
        disc_product: Rat::one(),
    })
}

/// The two quartics f_{A,C+-} whose rational roots decide splitting-field
/// equality for a pair of C4 forms (A = -aa', C+- = (cc' -+ 4)/(c +- c')).
pub fn resolvent_c4_pair(a: &QuarticForm, a2: &QuarticForm) -> Result<(QuarticForm, QuarticForm)> {
    expect_kind(a, FormKind::C4)?;
    expect_kind(a2, FormKind::C4)?;
    let (s, c) = (&a.p0, &a.p1);
    let (s2, c2) = (&a2.p0, &a2.p1);
    if (s * s2 * c * c2 * (c * c + rat(4)) * (c2 * c2 + rat(4))).is_zero() {
        return Err(Error::Degenerate(String::from("zero parameter in C4 pair")));
    }
    if c == c2 || *c == -c2 || c * c2 == rat(4) || c * c2 == rat(-4) {
        return Err(Error::ExcludedParameter(String::from(
            "apply eqC42 rewrite first",
        )));
    }
    let a_param = -(s * s2);
    let c_plus = (c * c2 - rat(4)) / (c + c2);
    let c_minus = (c * c2 + rat(4)) / (c - c2);
    Ok((
        QuarticForm::c4(a_param.clone(), c_plus),
        QuarticForm::c4(a_param, c_minus),
    ))
}

/// Degree-8 V4 pair resolvent:
/// (X^4-(ss'+4vv')X^2+(sv'+s'v)^2) * (X^4-(ss'-4vv')X^2+(sv'-s'v)^2).
/// A simple rational root certifies equal splitting fields (one direction).
pub fn resolvent_v4(a: &QuarticForm, a2: &QuarticForm) -> Result<UniPoly> {
    expect_kind(a, FormKind::V4)?;
    expect_kind(a2, FormKind::V4)?;
    if !a.is_separable() || !a2.is_separable() {
        return Err(Error::Inseparable);
    }
    let (fp, fm) = v4_factors(&a.p0, &a.p1, &a2.p0, &a2.p1);
    Ok(&fp * &fm)
}

/// The two degree-4 factors of the V4 pair resolvent.
pub fn v4_factors(s: &Rat, v: &Rat, s2: &Rat, v2: &Rat) -> (UniPoly, UniPoly) {
    let mk = |mid: Rat, root: Rat| {
        UniPoly::new(vec![
            &root * &root,
            Rat::zero(),
            -mid,
            Rat::zero(),
            Rat::one(),
        ])
    };
    (
        mk(s * s2 + rat(4) * v * v2, s * v2 + s2 * v),
        mk(s * s2 - rat(4) * v * v2, s * v2 - s2 * v),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::{decomposition_type, factor_over_q, DecompType};
    use crate::scalar::rat2;

    #[test]
    fn s4_resolvent_matches_printed_example_factorization() {
        // a = (0,1), a' = (2,1): R factors as
        // (X-3)(X+1)^3 (deg 6)(deg 6)(deg 8) with the printed coefficients
        let r = resolvent_s4(
            &QuarticForm::s4(rat(0), rat(1)),
            &QuarticForm::s4(rat(2), rat(1)),
        )
        .unwrap();
        assert_eq!(r.total.degree(), Some(24));
        // structural identity
        let back = &(&r.part_a * &r.part_a) - &(&(&r.part_b * &r.part_b) * &r.disc_product);
        assert_eq!(back, r.total);
        let fl = factor_over_q(&r.total).unwrap();
        let mut printed = vec![
            UniPoly::from_int_coeffs(&[-3, 1]),
            UniPoly::from_int_coeffs(&[1, 1]),
            UniPoly::from_int_coeffs(&[-64, 128, -64, -8, 12, -6, 1]),
            UniPoly::from_int_coeffs(&[-256, -32, 32, 56, 24, 6, 1]),
            UniPoly::from_int_coeffs(&[4233, -1048, 686, -48, -89, -16, 6, 0, 1]),
        ];
        printed.sort_by_key(|f| (f.degree(), f.coeffs().to_vec()));
        let got: Vec<UniPoly> = fl.factors.iter().map(|(f, _)| f.clone()).collect();
        assert_eq!(got, printed);
        let mults: Vec<u32> = fl.factors.iter().map(|(_, m)| *m).collect();
        // (x+1) has multiplicity 3
        let idx = fl
            .factors
            .iter()
            .position(|(f, _)| f == &UniPoly::from_int_coeffs(&[1, 1]))
            .unwrap();
        assert_eq!(mults[idx], 3);
        assert_eq!(
            decomposition_type(&r.total).unwrap(),
            DecompType::new(vec![8, 6, 6, 3, 1])
        );
    }

    #[test]
    fn s4_resolvent_a4_example() {
        // a = (0, 2^6/3^2), a' = (2b, b^2): leading factors (X - 2^6/3)(X + 2^6/9)^3
        let b = rat2(64, 9);
        let r = resolvent_s4(
            &QuarticForm::s4(rat(0), b.clone()),
            &QuarticForm::s4(rat(2) * &b, &b * &b),
        )
        .unwrap();
        let fl = factor_over_q(&r.total).unwrap();
        let lin1 = UniPoly::new(vec![rat2(-64, 3), rat(1)]);
        let lin2 = UniPoly::new(vec![rat2(64, 9), rat(1)]);
        assert!(fl.factors.iter().any(|(f, m)| f == &lin1 && *m == 1));
        assert!(fl.factors.iter().any(|(f, m)| f == &lin2 && *m == 3));
        assert_eq!(
            decomposition_type(&r.total).unwrap(),
            DecompType::new(vec![6, 6, 4, 4, 3, 1])
        );
    }

    #[test]
    fn d4_resolvent_identity_pair_has_zero_root() {
        let f = QuarticForm::d4(rat(5), rat(5));
        let r = resolvent_d4(&f, &f).unwrap();
        // constant term of R1 is 256(t s^2 - s^2 t)^2 = 0
        assert!(r.part_a.coeff(0).is_zero());
        assert_eq!(&(&r.part_a * &(&r.part_b * &r.part_b)), &r.total);
    }

    #[test]
    fn d4_resolvent_dual_pair_structure() {
        // (5,5) and its dual (10,5) share a splitting field (group C4 here).
        // The raw R1 is not squarefree: repeated linear factors read as blocks
        // of size 2, so the block DT is {2,2,2,2}; the intersection layer's
        // squarefree retry recovers the true {2,2,1,1,1,1}.
        let r = resolvent_d4(
            &QuarticForm::d4(rat(5), rat(5)),
            &QuarticForm::d4(rat(10), rat(5)),
        )
        .unwrap();
        let (_, repeated) = crate::factor::squarefree_part(&r.part_a).unwrap();
        assert!(repeated);
        let dt = decomposition_type(&r.part_a).unwrap();
        assert_eq!(dt, DecompType::new(vec![2, 2, 2, 2]));
    }

    #[test]
    fn v4_resolvent_specializes_r1() {
        // product = R1(2X)/2^8 at (s, v^2, s', v'^2)
        let (s, v, s2, v2) = (rat(-5), rat(2), rat(7), rat(3));
        let prod = resolvent_v4(
            &QuarticForm::v4(s.clone(), v.clone()),
            &QuarticForm::v4(s2.clone(), v2.clone()),
        )
        .unwrap();
        let r1 = d4_r1(&s, &(&v * &v), &s2, &(&v2 * &v2));
        let scaled = &r1.scale_arg(&rat(2)) * &rat2(1, 256);
        assert_eq!(prod, scaled);
    }

    #[test]
    fn v4_resolvent_identity_and_scaled_pairs() {
        let f = QuarticForm::v4(rat(-5), rat(2));
        let p = resolvent_v4(&f, &f).unwrap();
        assert!(p.coeff(0).is_zero()); // X divides: (sv - sv)^2 = 0
                                       // (-5,2) vs (-20,8) (scaled by c=2): explicit rational roots
        let p2 = resolvent_v4(&f, &QuarticForm::v4(rat(-20), rat(8))).unwrap();
        let roots = crate::factor::rational_roots(&p2).unwrap();
        assert!(!roots.is_empty());
    }

    #[test]
    fn c4_pair_examples_from_simplest_quartics() {
        use crate::forms::simplest_quartic_c4;
        // (m,n) = (2,22): f_{A,C+} = (X-60)(X+60)(X-80)(X+80)
        let (fp, _fm) =
            resolvent_c4_pair(&simplest_quartic_c4(2), &simplest_quartic_c4(22)).unwrap();
        let expected = UniPoly::from_int_coeffs(&[23040000, 0, -10000, 0, 1]);
        assert_eq!(fp.poly(), expected);
        // (m,n) = (1,103): f_{A,C-} has roots +-255, +-340
        let (_fp, fm) =
            resolvent_c4_pair(&simplest_quartic_c4(1), &simplest_quartic_c4(103)).unwrap();
        let expected2 =
            UniPoly::from_int_coeffs(&[255 * 255 * 340 * 340, 0, -(255 * 255 + 340 * 340), 0, 1]);
        assert_eq!(fm.poly(), expected2);
        // (m,n) = (4,956): f_{A,C+} roots +-2080, +-4992
        let (fp3, _) =
            resolvent_c4_pair(&simplest_quartic_c4(4), &simplest_quartic_c4(956)).unwrap();
        let r1: i64 = 2080;
        let r2: i64 = 4992;
        let expected3 =
            UniPoly::from_int_coeffs(&[r1 * r1 * r2 * r2, 0, -(r1 * r1 + r2 * r2), 0, 1]);
        assert_eq!(fp3.poly(), expected3);
    }

    #[test]
    fn c4_pair_exclusions() {
        use crate::forms::simplest_quartic_c4;
        // (1,16) and (2,8): c c' = 4 -> excluded
        for (m, n) in [(1i64, 16i64), (2, 8)] {
            assert!(matches!(
                resolvent_c4_pair(&simplest_quartic_c4(m), &simplest_quartic_c4(n)),
                Err(Error::ExcludedParameter(_))
            ));
        }
    }
}
