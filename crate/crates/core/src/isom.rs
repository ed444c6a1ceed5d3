//! Explicit parameter families with coincident splitting fields.
//!
//! Each constructor returns a `FamilyPoint` carrying the target parameters
//! and the Tschirnhausen map that witnesses the equality: applying the map to
//! the source polynomial reproduces the target polynomial bit-exactly.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::forms::{dual_d4_form, FormKind, QuarticForm, RatPow};
use crate::poly::{tschirnhausen_transform, TschirnhausenMap};
use crate::scalar::{is_fourth_power, is_square, rat, Rat};

/// One verified member of an isomorphism family.
#[derive(Clone, Debug)]
pub struct FamilyPoint {
    /// The quartic the witness map starts from (the input form, or its dual
    /// for the dual-orbit branch).
    pub source: QuarticForm,
    /// Parameters that generated the point (p, or (u,v), or (p,q), or u).
    pub params: Vec<Rat>,
    pub target: QuarticForm,
    /// tschirnhausen_transform(source.poly(), witness) == target.poly().
    pub witness: TschirnhausenMap,
}

impl FamilyPoint {
    /// Re-checks the defining identity.
    pub fn verify(&self) -> bool {
        tschirnhausen_transform(&self.source.poly(), &self.witness)
            .map(|t| t == self.target.poly())
            .unwrap_or(false)
    }
}

/// P, Q, R, S of the one-parameter S4 family.
pub fn s4_case1_blocks(s: &Rat, t: &Rat, p: &Rat) -> (Rat, Rat, Rat, Rat) {
    let d = s * s - rat(4) * t;
    let pp = rat(-2) * &d + rat(6) * t * p + s * p * p;
    let qq = rat(-8) * t * t - rat(8) * s * t * p - rat(2) * &d * p * p + t * p.powu(3);
    let rr = s.powu(4) - rat(8) * s * s * t
        + rat(16) * t * t
        + rat(8) * s * t * t
        + rat(2) * t * &d * p
        + s * &d * p * p
        - s * t * p.powu(3)
        + t * p.powu(4);
    let ss = rat(-64) * t * t + rat(16) * &d * p * p + rat(8) * s * p.powu(4) + p.powu(6);
    (pp, qq, rr, ss)
}

/// Case (i) of the S4 isomorphism family: target (P Q^2/R^2, Q^4/R^3) with
/// witness coefficients (s z'/2, p z'/2, z', 0), z' = 2Q/R.
pub fn isom_s4_case1(a: &QuarticForm, p: &Rat) -> Result<FamilyPoint> {
    expect_s4(a)?;
    let (s, t) = (&a.p0, &a.p1);
    let (pp, qq, rr, _ss) = s4_case1_blocks(s, t, p);
    if rr.is_zero() {
        return Err(Error::ExcludedParameter(String::from("R(a, p) = 0")));
    }
    if qq.is_zero() {
        return Err(Error::Degenerate(String::from(
            "degenerate target: Q(a, p) = 0",
        )));
    }
    let a2 = &pp * &qq * &qq / (&rr * &rr);
    let b2 = qq.powu(4) / rr.powu(3);
    let zp = rat(2) * &qq / &rr;
    let witness = TschirnhausenMap::new(s * &zp / rat(2), p * &zp / rat(2), zp, Rat::zero());
    let point = FamilyPoint {
        source: a.clone(),
        params: vec![p.clone()],
        target: QuarticForm::s4(a2, b2),
        witness,
    };
    debug_assert!(point.verify());
    Ok(point)
}

/// U, V, W of the two-parameter S4 family.
pub fn s4_case2_blocks(s: &Rat, t: &Rat, u: &Rat, v: &Rat) -> (Rat, Rat, Rat) {
    let uu = rat(16) * s.powu(3) - rat(48) * s * t - rat(6) * t * t - rat(8) * s * s * u
        + rat(16) * t * u
        + s * u * u
        - rat(28) * s * t * v
        + rat(6) * t * u * v
        - rat(2) * s * s * v * v
        + rat(8) * t * v * v;
    let vv = rat(96) * s.powu(3) * t - rat(96) * s * t * t + rat(8) * t.powu(3)
        - rat(64) * s * s * t * u
        + rat(16) * t * t * u
        + rat(14) * s * t * u * u
        - t * u.powu(3)
        + rat(32) * s.powu(4) * v
        - rat(160) * s * s * t * v
        + rat(128) * t * t * v
        - rat(40) * s * t * t * v
        - rat(16) * s.powu(3) * u * v
        + rat(64) * s * t * u * v
        + rat(12) * t * t * u * v
        + rat(2) * s * s * u * u * v
        - rat(8) * t * u * u * v
        - rat(32) * s * s * t * v * v
        + rat(64) * t * t * v * v
        + rat(8) * s * t * u * v * v
        + rat(8) * t * t * v.powu(3);
    let ww = rat(144) * s.powu(3) * t * t + rat(256) * t.powu(3) + rat(144) * s * t.powu(3)
        - rat(3) * t.powu(4)
        - rat(128) * s * t * t * u
        - rat(120) * s * s * t * t * u
        - rat(32) * t.powu(3) * u
        + rat(16) * s * s * t * u * u
        + rat(32) * t * t * u * u
        + rat(33) * s * t * t * u * u
        - rat(8) * s * t * u.powu(3)
        - rat(3) * t * t * u.powu(3)
        + t * u.powu(4)
        + rat(96) * s.powu(4) * t * v
        - rat(288) * s * s * t * t * v
        + rat(256) * t.powu(3) * v
        + rat(68) * s * t.powu(3) * v
        - rat(64) * s.powu(3) * t * u * v
        + rat(80) * s * t * t * u * v
        - rat(18) * t.powu(3) * u * v
        + rat(14) * s * s * t * u * u * v
        - s * t * u.powu(3) * v
        + rat(16) * s.powu(5) * v * v
        - rat(112) * s.powu(3) * t * v * v
        + rat(192) * s * t * t * v * v
        + rat(2) * s * s * t * t * v * v
        + rat(120) * t.powu(3) * v * v
        - rat(8) * s.powu(4) * u * v * v
        + rat(48) * s * s * t * u * v * v
        - rat(64) * t * t * u * v * v
        + s.powu(3) * u * u * v * v
        - rat(4) * s * t * u * u * v * v
        - rat(4) * s.powu(3) * t * v.powu(3)
        + rat(16) * s * t * t * v.powu(3)
        + rat(24) * t.powu(3) * v.powu(3)
        + rat(2) * s * s * t * u * v.powu(3)
        - rat(8) * t * t * u * v.powu(3)
        + s.powu(4) * v.powu(4)
        - rat(8) * s * s * t * v.powu(4)
        + rat(16) * t * t * v.powu(4)
        + rat(8) * s * t * t * v.powu(4);
    (uu, vv, ww)
}

/// Case (ii) of the S4 isomorphism family: target (U V^2/W^2, V^4/W^3) with
/// witness ((3t+sv)w'/4, u w'/4, v w'/2, w'), w' = -4V/W.
pub fn isom_s4_case2(a: &QuarticForm, u: &Rat, v: &Rat) -> Result<FamilyPoint> {
    expect_s4(a)?;
    let (s, t) = (&a.p0, &a.p1);
    let (uu, vv, ww) = s4_case2_blocks(s, t, u, v);
    if ww.is_zero() {
        return Err(Error::ExcludedParameter(String::from("W(a, u, v) = 0")));
    }
    if vv.is_zero() {
        return Err(Error::Degenerate(String::from(
            "degenerate target: V(a, u, v) = 0",
        )));
    }
    let a2 = &uu * &vv * &vv / (&ww * &ww);
    let b2 = vv.powu(4) / ww.powu(3);
    let wp = rat(-4) * &vv / &ww;
    let witness = TschirnhausenMap::new(
        (rat(3) * t + s * v) * &wp / rat(4),
        u * &wp / rat(4),
        v * &wp / rat(2),
        wp,
    );
    let point = FamilyPoint {
        source: a.clone(),
        params: vec![u.clone(), v.clone()],
        target: QuarticForm::s4(a2, b2),
        witness,
    };
    debug_assert!(point.verify());
    Ok(point)
}

/// One step of a family stream.
#[derive(Clone, Debug)]
pub enum FamilyStep {
    Point(FamilyPoint),
    /// Parameter skipped because Q, R, or S vanished (named factor), or the
    /// target came out degenerate.
    Skipped {
        param: Rat,
        vanishing: &'static str,
    },
}

/// Integer parameter order 0, 1, -1, 2, -2, ...
pub fn parameter_order() -> impl Iterator<Item = Rat> {
    core::iter::once(rat(0)).chain((1i64..).flat_map(|k| [rat(k), rat(-k)]))
}

/// The infinite case-(i) family over p = 0, 1, -1, 2, ...; every emitted
/// point has Q R S != 0, so its target is separable with the same splitting
/// field as the source.
pub fn isom_s4_family(a: &QuarticForm) -> Result<impl Iterator<Item = FamilyStep> + '_> {
    expect_s4(a)?;
    if !a.is_separable() {
        return Err(Error::Inseparable);
    }
    Ok(parameter_order().map(move |p| {
        let (s, t) = (&a.p0, &a.p1);
        let (_pp, qq, rr, ss) = s4_case1_blocks(s, t, &p);
        if qq.is_zero() {
            return FamilyStep::Skipped {
                param: p,
                vanishing: "Q",
            };
        }
        if rr.is_zero() {
            return FamilyStep::Skipped {
                param: p,
                vanishing: "R",
            };
        }
        if ss.is_zero() {
            return FamilyStep::Skipped {
                param: p,
                vanishing: "S",
            };
        }
        match isom_s4_case1(a, &p) {
            Ok(point) => FamilyStep::Point(point),
            Err(_) => FamilyStep::Skipped {
                param: p,
                vanishing: "construction",
            },
        }
    }))
}

/// Which orbit of quartic subfields the D4 family targets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum D4Branch {
    /// Target algebra isomorphic to the source's.
    SameOrbit,
    /// Target algebra isomorphic to the dual form's.
    DualOrbit,
}

/// Two-parameter D4 family: same-orbit targets (ap^2-4bpq+abq^2,
/// b(p^2-apq+bq^2)^2), dual-orbit targets (2(ap^2-4bpq+abq^2),
/// (a^2-4b)(p^2-bq^2)^2).
pub fn d4_isom_param(a: &QuarticForm, p: &Rat, q: &Rat, branch: D4Branch) -> Result<FamilyPoint> {
    let (av, bv) = a
        .d4_params()
        .filter(|_| a.kind == FormKind::D4)
        .ok_or_else(|| Error::DegreeMismatch(String::from("need a D4 form")))?;
    let core = &av * p * p - rat(4) * &bv * p * q + &av * &bv * q * q;
    let (target, source, witness) = match branch {
        D4Branch::SameOrbit => {
            let b2 = &bv * (p * p - &av * p * q + &bv * q * q).powu(2);
            let target = QuarticForm::d4(core.clone(), b2);
            // odd map (aq - p) X + q X^3 from f_{a,b}
            let witness = TschirnhausenMap::new(Rat::zero(), &av * q - p, Rat::zero(), q.clone());
            (target, a.clone(), witness)
        }
        D4Branch::DualOrbit => {
            let b2 = (&av * &av - rat(4) * &bv) * (p * p - &bv * q * q).powu(2);
            let target = QuarticForm::d4(rat(2) * &core, b2);
            // odd map (p + aq/2) X + (q/2) X^3 from the dual form
            let witness =
                TschirnhausenMap::new(Rat::zero(), p + &av * q / rat(2), Rat::zero(), q / rat(2));
            (target, dual_d4_form(a), witness)
        }
    };
    if !target.is_separable() {
        return Err(Error::Degenerate(String::from("target inseparable")));
    }
    let point = FamilyPoint {
        source,
        params: vec![p.clone(), q.clone()],
        target,
        witness,
    };
    debug_assert!(point.verify());
    Ok(point)
}

/// The one-parameter u-family of D4 targets
/// (a^3-3ab-2a^2u+4bu+au^2, b(b-au+u^2)^2), with witness uX + X^3.
pub fn d4_u_point(a: &QuarticForm, u: &Rat) -> Result<FamilyPoint> {
    let (av, bv) = a
        .d4_params()
        .filter(|_| a.kind == FormKind::D4)
        .ok_or_else(|| Error::DegreeMismatch(String::from("need a D4 form")))?;
    let a2 =
        av.powu(3) - rat(3) * &av * &bv - rat(2) * &av * &av * u + rat(4) * &bv * u + &av * u * u;
    let b2 = &bv * (&bv - &av * u + u * u).powu(2);
    let target = QuarticForm::d4(a2, b2);
    if !target.is_separable() {
        return Err(Error::Degenerate(String::from("target inseparable")));
    }
    let witness = TschirnhausenMap::new(Rat::zero(), u.clone(), Rat::zero(), rat(1));
    let point = FamilyPoint {
        source: a.clone(),
        params: vec![u.clone()],
        target,
        witness,
    };
    debug_assert!(point.verify());
    Ok(point)
}

/// The plain u-family stream (every separable target).
pub fn d4_u_family(a: &QuarticForm) -> impl Iterator<Item = FamilyPoint> + '_ {
    parameter_order().filter_map(move |u| d4_u_point(a, &u).ok())
}

/// The u-family restricted to points whose b'/b is not a fourth power
/// (equivalently |b-au+u^2| is not a square), additionally requiring
/// X^2-(b-au+u^2) irreducible as in the underlying existence proof.
pub fn d4_fourth_power_family(a: &QuarticForm) -> impl Iterator<Item = FamilyPoint> + '_ {
    let params = a.d4_params();
    parameter_order().filter_map(move |u| {
        let (av, bv) = params.clone()?;
        let m = &bv - &av * &u + &u * &u;
        if is_square(&m) {
            return None; // X^2 - m reducible
        }
        if is_fourth_power(&(&m * &m)) {
            return None; // b'/b = m^2 is a fourth power
        }
        d4_u_point(a, &u).ok()
    })
}

fn expect_s4(a: &QuarticForm) -> Result<()> {
    if a.kind != FormKind::S4 {
        return Err(Error::DegreeMismatch(String::from("need an S4 form")));
    }
    Ok(())
}

fn expect_c4(a: &QuarticForm) -> Result<(Rat, Rat)> {
    if a.kind != FormKind::C4 {
        return Err(Error::DegreeMismatch(String::from("need a C4 form")));
    }
    if !a.is_separable() {
        return Err(Error::Inseparable);
    }
    Ok((a.p0.clone(), a.p1.clone()))
}

/// Outcome of the C4 equality test, with the certificate when one exists.
#[derive(Clone, Debug)]
pub struct C4Verdict {
    pub equal: bool,
    /// The pair hit the excluded locus and was decided through the
    /// parameter rewrite (c -> 4/c with the sign identity).
    pub via_rewrite: bool,
    /// Rational roots of whichever f_{A,C+-} certified equality.
    pub certificate_roots: Vec<Rat>,
}

/// Splitting-field equality test for two C4 forms.
///
/// Outside the excluded locus this is the linear-factor criterion on
/// f_{A,C+-}. The excluded locus {c' = +-c} u {cc' = +-4} is stable under
/// the c -> 4/c and c -> -c rewrites, so excluded pairs are decided exactly
/// on a same-c representative: the two fields are F(sqrt(delta)) and
/// F(sqrt(delta')) over F = Q(sqrt(c^2+4)) with delta'/delta = a'/a, and a
/// rational is a square in F iff it lies in Q*^2 or (c^2+4) Q*^2.
pub fn c4_equal_verdict(a: &QuarticForm, a2: &QuarticForm) -> Result<C4Verdict> {
    let (s, c) = expect_c4(a)?;
    let (s2, c2) = expect_c4(a2)?;
    // sign identity: Spl f_{a,c} = Spl f_{a,-c}
    let (mut s, mut c) = (s, c.abs());
    let (s2, c2) = (s2, c2.abs());
    let mut via_rewrite = false;
    if &c * &c2 == rat(4) && c != c2 {
        // eqC42 on the first side: (a, c) -> (2a, 4/c); then 4/c = c'
        s = rat(2) * &s;
        c = rat(4) / &c;
        via_rewrite = true;
        debug_assert_eq!(c, c2);
    }
    if c == c2 {
        let ratio = &s2 / &s;
        let equal = is_square(&ratio) || is_square(&(&ratio * (&c * &c + rat(4))));
        return Ok(C4Verdict {
            equal,
            via_rewrite: true,
            certificate_roots: vec![],
        });
    }
    let _ = via_rewrite;
    // both fields are cyclic quartic over their unique quadratic subfield
    // Q(sqrt(c^2+4)); different subfields rule equality out immediately
    let k1 = &c * &c + rat(4);
    let k2 = &c2 * &c2 + rat(4);
    if !is_square(&(&k1 * &k2)) {
        return Ok(C4Verdict {
            equal: false,
            via_rewrite: false,
            certificate_roots: vec![],
        });
    }
    let (fp, fm) =
        crate::resolvent::resolvent_c4_pair(&QuarticForm::c4(s, c), &QuarticForm::c4(s2, c2))?;
    for form in [fp, fm] {
        let poly = form.poly();
        let roots = biquadratic_rational_roots(&poly.coeff(2), &poly.coeff(0));
        if !roots.is_empty() {
            return Ok(C4Verdict {
                equal: true,
                via_rewrite: false,
                certificate_roots: roots,
            });
        }
    }
    Ok(C4Verdict {
        equal: false,
        via_rewrite: false,
        certificate_roots: vec![],
    })
}

/// Splitting-field equality of two C4 forms.
pub fn c4_equal_test(a: &QuarticForm, a2: &QuarticForm) -> Result<bool> {
    Ok(c4_equal_verdict(a, a2)?.equal)
}

/// Rational roots of X^4 + A X^2 + B without factoring: X^2 must be a
/// rational root of Y^2 + AY + B that is itself a square.
pub fn biquadratic_rational_roots(a: &Rat, b: &Rat) -> Vec<Rat> {
    let disc = a * a - rat(4) * b;
    let Some(sq) = crate::scalar::sqrt_exact(&disc) else {
        return vec![];
    };
    let mut out = Vec::new();
    for y in [(-a + &sq) / rat(2), (-a - &sq) / rat(2)] {
        if let Some(x) = crate::scalar::sqrt_exact(&y) {
            if !out.contains(&x) {
                out.push(x.clone());
                if !x.is_zero() {
                    out.push(-x);
                }
            }
        }
    }
    out.sort();
    out
}

/// The three companion C4 forms sharing the splitting field of (a, c):
/// ((c^2+4)/a, c), (2a, 4/c), (2(c^2+4)/a, 4/c).
pub fn c4_known_identities(a: &QuarticForm) -> Result<Vec<QuarticForm>> {
    let (s, c) = expect_c4(a)?;
    let cc4 = &c * &c + rat(4);
    Ok(vec![
        QuarticForm::c4(&cc4 / &s, c.clone()),
        QuarticForm::c4(rat(2) * &s, rat(4) / &c),
        QuarticForm::c4(rat(2) * &cc4 / &s, rat(4) / &c),
    ])
}
