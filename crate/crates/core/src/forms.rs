//! Generic quartic forms and Galois group classification over Q.
//!
//! Any separable quartic can be normalized into the two-parameter form
//! X^4+sX^2+tX+t without changing its splitting field; quartics with group
//! inside D4 also normalize to X^4+sX^2+t. The classifier runs entirely on
//! exact data: factorization shapes, the resolvent cubic, and rational-square
//! tests on the D4-form parameters.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::factor::{factor_over_q, is_rational_square, rational_roots};
use crate::poly::{tschirnhausen_transform, TschirnhausenMap};
use crate::scalar::{rat, rat2, squarefree_kernel, Int, Rat};
use crate::UniPoly;

/// Monic quartic X^4 + a1 X^3 + a2 X^2 + a3 X + a4.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralQuartic {
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub a4: Rat,
}

impl GeneralQuartic {
    pub fn new(a1: Rat, a2: Rat, a3: Rat, a4: Rat) -> Self {
        GeneralQuartic { a1, a2, a3, a4 }
    }

    pub fn from_ints(a1: i64, a2: i64, a3: i64, a4: i64) -> Self {
        GeneralQuartic::new(rat(a1), rat(a2), rat(a3), rat(a4))
    }

    /// Accepts any degree-4 polynomial and normalizes it to monic.
    pub fn from_poly(f: &UniPoly) -> Result<Self> {
        if f.degree() != Some(4) {
            return Err(Error::DegreeMismatch(String::from("expected a quartic")));
        }
        let m = f.monic();
        Ok(GeneralQuartic::new(
            m.coeff(3),
            m.coeff(2),
            m.coeff(1),
            m.coeff(0),
        ))
    }

    pub fn to_poly(&self) -> UniPoly {
        UniPoly::new(vec![
            self.a4.clone(),
            self.a3.clone(),
            self.a2.clone(),
            self.a1.clone(),
            Rat::one(),
        ])
    }

    pub fn discriminant(&self) -> Rat {
        self.to_poly().discriminant().unwrap()
    }

    pub fn is_separable(&self) -> bool {
        !self.discriminant().is_zero()
    }

    /// Depressed coefficients (A2, A3, A4) of the shift X -> X - a1/4.
    pub fn depressed(&self) -> (Rat, Rat, Rat) {
        let a1 = &self.a1;
        let a2 = &self.a2;
        let a3 = &self.a3;
        let a4 = &self.a4;
        let b2 = (rat(-3) * a1 * a1 + rat(8) * a2) / rat(8);
        let b3 = (a1 * a1 * a1 - rat(4) * a1 * a2 + rat(8) * a3) / rat(8);
        let b4 = (rat(-3) * a1 * a1 * a1 * a1 + rat(16) * a1 * a1 * a2 - rat(64) * a1 * a3
            + rat(256) * a4)
            / rat(256);
        (b2, b3, b4)
    }
}

/// Which two-parameter generic family a normalized quartic belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormKind {
    /// X^4 + sX^2 + tX + t
    S4,
    /// X^4 + sX^2 + t
    D4,
    /// X^4 + sX^2 + s^2/(u^2+4)
    C4,
    /// X^4 + sX^2 + v^2
    V4,
}

/// A tagged parameter pair (see `FormKind` for the polynomial each kind encodes).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticForm {
    pub kind: FormKind,
    pub p0: Rat,
    pub p1: Rat,
}

impl QuarticForm {
    pub fn s4(s: Rat, t: Rat) -> Self {
        QuarticForm {
            kind: FormKind::S4,
            p0: s,
            p1: t,
        }
    }

    pub fn d4(s: Rat, t: Rat) -> Self {
        QuarticForm {
            kind: FormKind::D4,
            p0: s,
            p1: t,
        }
    }

    pub fn c4(s: Rat, u: Rat) -> Self {
        QuarticForm {
            kind: FormKind::C4,
            p0: s,
            p1: u,
        }
    }

    pub fn v4(s: Rat, v: Rat) -> Self {
        QuarticForm {
            kind: FormKind::V4,
            p0: s,
            p1: v,
        }
    }

    pub fn poly(&self) -> UniPoly {
        let s = &self.p0;
        match self.kind {
            FormKind::S4 => UniPoly::new(vec![
                self.p1.clone(),
                self.p1.clone(),
                s.clone(),
                Rat::zero(),
                Rat::one(),
            ]),
            FormKind::D4 => UniPoly::new(vec![
                self.p1.clone(),
                Rat::zero(),
                s.clone(),
                Rat::zero(),
                Rat::one(),
            ]),
            FormKind::C4 => {
                let u = &self.p1;
                let c0 = s * s / (u * u + rat(4));
                UniPoly::new(vec![c0, Rat::zero(), s.clone(), Rat::zero(), Rat::one()])
            }
            FormKind::V4 => {
                let v = &self.p1;
                UniPoly::new(vec![v * v, Rat::zero(), s.clone(), Rat::zero(), Rat::one()])
            }
        }
    }

    /// Printed closed-form discriminant of the family member.
    pub fn discriminant(&self) -> Rat {
        let s = &self.p0;
        match self.kind {
            FormKind::S4 => {
                let t = &self.p1;
                s4_discriminant(s, t)
            }
            FormKind::D4 => {
                let t = &self.p1;
                let d = s * s - rat(4) * t;
                rat(16) * t * &d * &d
            }
            FormKind::C4 => {
                let u = &self.p1;
                let u2p4 = u * u + rat(4);
                rat(16) * s.powu(6) * u.powu(4) / u2p4.powu(3)
            }
            FormKind::V4 => {
                let v = &self.p1;
                let a = s + rat(2) * v;
                let b = s - rat(2) * v;
                rat(16) * v * v * &a * &a * &b * &b
            }
        }
    }

    pub fn is_separable(&self) -> bool {
        let s = &self.p0;
        match self.kind {
            // the closed-form discriminants vanish exactly on these factors
            FormKind::C4 => !s.is_zero() && !self.p1.is_zero(),
            FormKind::V4 => {
                let v = &self.p1;
                !v.is_zero() && s.clone() != rat(2) * v && s.clone() != rat(-2) * v
            }
            FormKind::D4 => {
                let t = &self.p1;
                !t.is_zero() && s * s != rat(4) * t
            }
            FormKind::S4 => !self.discriminant().is_zero(),
        }
    }

    /// View a D4/C4/V4 form through its X^4+aX^2+b coefficients.
    pub fn d4_params(&self) -> Option<(Rat, Rat)> {
        match self.kind {
            FormKind::S4 => None,
            _ => {
                let p = self.poly();
                Some((p.coeff(2), p.coeff(0)))
            }
        }
    }
}

impl fmt::Display for QuarticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            FormKind::S4 => "S4",
            FormKind::D4 => "D4",
            FormKind::C4 => "C4",
            FormKind::V4 => "V4",
        };
        write!(f, "{k}-form({}, {})", self.p0, self.p1)
    }
}

/// D_{s,t} = t(16s^4 - 128s^2 t - 4s^3 t + 256t^2 + 144s t^2 - 27t^3).
pub fn s4_discriminant(s: &Rat, t: &Rat) -> Rat {
    t * (rat(16) * s.powu(4) - rat(128) * s * s * t - rat(4) * s.powu(3) * t
        + rat(256) * t * t
        + rat(144) * s * t * t
        - rat(27) * t.powu(3))
}

/// Galois group of a quartic over Q, as a label.
///
/// S4..V4 apply to irreducible quartics; S3/C3 to a linear times an
/// irreducible cubic; C2/C1 to reducible shapes whose splitting field has
/// degree 2 or 1; ReducibleOther to the intransitive biquadratic shape
/// (two distinct quadratic subfields).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GaloisLabel {
    S4,
    A4,
    D4,
    C4,
    V4,
    S3,
    C3,
    C2,
    C1,
    ReducibleOther,
}

impl GaloisLabel {
    /// Order of the group (degree of the splitting field).
    pub fn order(&self) -> usize {
        match self {
            GaloisLabel::S4 => 24,
            GaloisLabel::A4 => 12,
            GaloisLabel::D4 => 8,
            GaloisLabel::C4 | GaloisLabel::V4 | GaloisLabel::ReducibleOther => 4,
            GaloisLabel::S3 => 6,
            GaloisLabel::C3 => 3,
            GaloisLabel::C2 => 2,
            GaloisLabel::C1 => 1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GaloisLabel::S4 => "S4",
            GaloisLabel::A4 => "A4",
            GaloisLabel::D4 => "D4",
            GaloisLabel::C4 => "C4",
            GaloisLabel::V4 => "V4",
            GaloisLabel::S3 => "S3",
            GaloisLabel::C3 => "C3",
            GaloisLabel::C2 => "C2",
            GaloisLabel::C1 => "C1",
            GaloisLabel::ReducibleOther => "reducible-other",
        }
    }
}

impl fmt::Display for GaloisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// The resolvent cubic by x1x3 + x2x4:
/// X^3 - a2 X^2 + (a1 a3 - 4 a4) X - (a3^2 + a1^2 a4 - 4 a2 a4).
pub fn resolvent_cubic(g: &GeneralQuartic) -> UniPoly {
    let (a1, a2, a3, a4) = (&g.a1, &g.a2, &g.a3, &g.a4);
    UniPoly::new(vec![
        -(a3 * a3 + a1 * a1 * a4 - rat(4) * a2 * a4),
        a1 * a3 - rat(4) * a4,
        -a2.clone(),
        Rat::one(),
    ])
}

/// Canonical nonlinear retry maps (0, 1, c2, c3), ordered by c2+c3 then c2
/// descending: (1,0), (0,1), (2,0), (1,1), (0,2), (3,0), ...
pub(crate) fn retry_maps() -> impl Iterator<Item = TschirnhausenMap> {
    (1..).flat_map(|total: i64| {
        (0..=total)
            .rev()
            .map(move |c2| TschirnhausenMap::new(rat(0), rat(1), rat(c2), rat(total - c2)))
    })
}

/// Normalize a separable quartic to the form X^4+sX^2+tX+t with the same
/// splitting field, together with the root map from g to the form.
pub fn to_s4_form(g: &GeneralQuartic) -> Result<(QuarticForm, TschirnhausenMap)> {
    if !g.is_separable() {
        return Err(Error::Inseparable);
    }
    // identity attempt first, then the canonical nonlinear maps
    let attempts = core::iter::once(TschirnhausenMap::identity()).chain(retry_maps().take(16));
    for m in attempts {
        let base = g.to_poly();
        let transformed = tschirnhausen_transform(&base, &m)?;
        if !transformed.is_separable() {
            continue;
        }
        let gq = GeneralQuartic::from_poly(&transformed)?;
        let (b2, b3, b4) = gq.depressed();
        if b3.is_zero() || b4.is_zero() {
            continue;
        }
        // total map: alpha -> (A3/A4) * (m(alpha) + a1/4)
        let c = &b3 / &b4;
        let shift = &gq.a1 / rat(4);
        let affine = TschirnhausenMap::new(&c * &shift, c, Rat::zero(), Rat::zero());
        let total = affine.compose_mod(&m, &base)?;
        let s = &b2 * &b3 * &b3 / (&b4 * &b4);
        let t = b3.powu(4) / b4.powu(3);
        let form = QuarticForm::s4(s, t);
        debug_assert_eq!(tschirnhausen_transform(&base, &total).unwrap(), form.poly());
        return Ok((form, total));
    }
    Err(Error::Degenerate(String::from(
        "no nondegenerate normalization map found in 16 attempts",
    )))
}

/// Result of normalizing a quartic with group <= D4 to X^4+aX^2+b.
#[derive(Clone, Debug)]
pub struct D4Normalization {
    pub form: QuarticForm,
    /// Rational root of the resolvent cubic that was used (None when the
    /// input was already biquadratic after depression).
    pub used_root: Option<Rat>,
    /// Root map from the normalized form back to g: applying it to the form's
    /// polynomial reproduces g.
    pub witness: TschirnhausenMap,
}

/// Normalize a quartic with Gal <= D4 into X^4+aX^2+b with the same splitting
/// field (a = -a1^2+2a2+2c, b = a2^2-4a1a3+16a4+2a2c-3c^2 for a rational
/// resolvent-cubic root c).
pub fn to_d4_form(g: &GeneralQuartic) -> Result<D4Normalization> {
    if !g.is_separable() {
        return Err(Error::Inseparable);
    }
    let (b2, b3, b4) = g.depressed();
    if b3.is_zero() {
        // depressed quartic is already X^4+A2X^2+A4
        let form = QuarticForm::d4(b2, b4);
        let witness = TschirnhausenMap::new(-(&g.a1 / rat(4)), rat(1), rat(0), rat(0));
        debug_assert_eq!(
            tschirnhausen_transform(&form.poly(), &witness).unwrap(),
            g.to_poly()
        );
        return Ok(D4Normalization {
            form,
            used_root: None,
            witness,
        });
    }
    let cubic = resolvent_cubic(g);
    let mut roots = rational_roots(&cubic)?;
    if roots.is_empty() {
        return Err(Error::NotSubD4);
    }
    // smallest by absolute value, positive before negative on ties
    roots.sort_by(|x, y| x.abs().cmp(&y.abs()).then_with(|| y.cmp(x)));
    let c = roots[0].clone();
    let (a1, a2, a3, a4) = (&g.a1, &g.a2, &g.a3, &g.a4);
    let a = -(a1 * a1) + rat(2) * a2 + rat(2) * &c;
    let b = a2 * a2 - rat(4) * a1 * a3 + rat(16) * a4 + rat(2) * a2 * &c - rat(3) * &c * &c;
    let form = QuarticForm::d4(a, b);
    // witness from the proof of the quartic-to-biquadratic lemma, in the
    // elementary-symmetric parameters s1=-a1, s2=a2, s3=-a3
    let (s1, s2, s3) = (-a1.clone(), a2.clone(), -a3.clone());
    let den = &s1 * &s1 * &s1 - rat(4) * &s1 * &s2 + rat(8) * &s3;
    debug_assert!(!den.is_zero());
    let half_den = rat(2) * &den;
    let c0 = (&s1 * &s1 * &s2 - rat(4) * &s2 * &s2 + rat(4) * &s1 * &s3 - &s1 * &s1 * &c
        + rat(4) * &c * &c)
        / &half_den;
    let c1 = &den / &half_den;
    let c2 = (&s1 * &s1 - rat(4) * &s2 + rat(4) * &c) / &half_den;
    let witness = TschirnhausenMap::new(c0, c1, c2, Rat::zero());
    debug_assert_eq!(
        tschirnhausen_transform(&form.poly(), &witness).unwrap(),
        g.to_poly()
    );
    Ok(D4Normalization {
        form,
        used_root: Some(c),
        witness,
    })
}

/// The companion D4 form (2s, s^2-4t) sharing the splitting field (the
/// resolvent by x1+x2); its quartic algebra sits in the other root orbit.
pub fn dual_d4_form(f: &QuarticForm) -> QuarticForm {
    let (s, t) = (&f.p0, &f.p1);
    QuarticForm::d4(rat(2) * s, s * s - rat(4) * t)
}

/// Galois group of a separable quartic over Q.
pub fn quartic_galois_group(g: &GeneralQuartic) -> Result<GaloisLabel> {
    if !g.is_separable() {
        return Err(Error::Inseparable);
    }
    let f = g.to_poly();
    let fl = factor_over_q(&f)?;
    if !fl.is_irreducible() {
        return Ok(classify_reducible(&fl.factors));
    }
    let cubic = resolvent_cubic(g);
    let cubic_roots = rational_roots(&cubic)?;
    if cubic_roots.is_empty() {
        return Ok(if is_rational_square(&g.discriminant()) {
            GaloisLabel::A4
        } else {
            GaloisLabel::S4
        });
    }
    let norm = to_d4_form(g)?;
    let (a, b) = norm.form.d4_params().unwrap();
    if is_rational_square(&b) {
        Ok(GaloisLabel::V4)
    } else if is_rational_square(&((&a * &a - rat(4) * &b) / &b)) {
        Ok(GaloisLabel::C4)
    } else {
        Ok(GaloisLabel::D4)
    }
}

fn classify_reducible(factors: &[(UniPoly, u32)]) -> GaloisLabel {
    // separable input: all multiplicities are 1
    if let Some((cubic, _)) = factors.iter().find(|(f, _)| f.degree() == Some(3)) {
        let d = cubic.discriminant().unwrap();
        return if is_rational_square(&d) {
            GaloisLabel::C3
        } else {
            GaloisLabel::S3
        };
    }
    let mut kernels: Vec<Rat> = Vec::new();
    for (f, _) in factors {
        if f.degree() == Some(2) {
            let d = f.discriminant().unwrap();
            if is_rational_square(&d) {
                continue; // splits into rationals
            }
            if !kernels
                .iter()
                .any(|k| crate::scalar::same_quadratic_field(k, &d))
            {
                kernels.push(d);
            }
        }
    }
    match kernels.len() {
        0 => GaloisLabel::C1,
        1 => GaloisLabel::C2,
        _ => GaloisLabel::ReducibleOther,
    }
}

/// Squarefree kernels of b, (a^2-4b)/b and a^2-4b for a separable D4 form:
/// the three quadratic subfield generators (kernel 1 marks a collapsed one).
pub fn quadratic_subfields(form: &QuarticForm) -> Result<[Int; 3]> {
    let (a, b) = form
        .d4_params()
        .ok_or_else(|| Error::DegreeMismatch(String::from("need a biquadratic form")))?;
    if !form.is_separable() {
        return Err(Error::Inseparable);
    }
    let disc_part = &a * &a - rat(4) * &b;
    Ok([
        squarefree_kernel(&b),
        squarefree_kernel(&(&disc_part / &b)),
        squarefree_kernel(&disc_part),
    ])
}

/// Squarefree kernel of the quartic's discriminant: for S4/A4 groups this
/// generates the unique quadratic subfield (kernel 1 for A4).
pub fn discriminant_kernel(g: &GeneralQuartic) -> Int {
    squarefree_kernel(&g.discriminant())
}

pub(crate) trait RatPow {
    fn powu(&self, e: usize) -> Rat;
}

impl RatPow for Rat {
    fn powu(&self, e: usize) -> Rat {
        num_traits::pow::pow(self.clone(), e)
    }
}

/// f^{C4} parameters of the simplest-quartic member: H_n = (-(n^2+16), n/2).
pub fn simplest_quartic_c4(n: i64) -> QuarticForm {
    QuarticForm::c4(rat(-(n * n + 16)), rat2(n, 2))
}

/// The simplest quartic X^4 - nX^3 - 6X^2 + nX + 1.
pub fn simplest_quartic(n: i64) -> GeneralQuartic {
    GeneralQuartic::from_ints(-n, -6, n, 1)
}
