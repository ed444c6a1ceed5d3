//! Tschirnhausen transformations of quartics.
//!
//! For a monic quartic f and a cubic substitution map m, the transform is
//! `Resultant_Y(f(Y), X - m(Y))`: the monic quartic whose roots are the images
//! m(alpha) of the roots of f. For monic f this resultant equals the
//! characteristic polynomial of multiplication by m(Y) in Q[Y]/(f), which is
//! how it is computed here (Faddeev-LeVerrier on the 4x4 multiplication
//! matrix); `resultant_y` gives an independent route used by the tests.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::{rat, Rat};
use crate::UniPoly;

/// The substitution Y -> c0 + c1*Y + c2*Y^2 + c3*Y^3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TschirnhausenMap {
    pub c0: Rat,
    pub c1: Rat,
    pub c2: Rat,
    pub c3: Rat,
}

impl TschirnhausenMap {
    pub fn new(c0: Rat, c1: Rat, c2: Rat, c3: Rat) -> Self {
        TschirnhausenMap { c0, c1, c2, c3 }
    }

    pub fn from_ints(c0: i64, c1: i64, c2: i64, c3: i64) -> Self {
        TschirnhausenMap::new(rat(c0), rat(c1), rat(c2), rat(c3))
    }

    pub fn identity() -> Self {
        TschirnhausenMap::from_ints(0, 1, 0, 0)
    }

    /// X -> X + c as a map.
    pub fn shift(c: Rat) -> Self {
        TschirnhausenMap::new(c, rat(1), rat(0), rat(0))
    }

    pub fn as_poly(&self) -> UniPoly {
        UniPoly::new(alloc::vec![
            self.c0.clone(),
            self.c1.clone(),
            self.c2.clone(),
            self.c3.clone(),
        ])
    }

    /// True when the map can move roots at all (not constant).
    pub fn is_nondegenerate(&self) -> bool {
        !(self.c1.is_zero() && self.c2.is_zero() && self.c3.is_zero())
    }

    /// Composition: apply `self` after `inner` on a quartic with minimal
    /// polynomial f, i.e. reduce self(inner(Y)) mod f(Y).
    pub fn compose_mod(&self, inner: &TschirnhausenMap, f: &UniPoly) -> Result<TschirnhausenMap> {
        check_monic_quartic(f)?;
        let composed = self.as_poly().compose(&inner.as_poly());
        let (_, r) = composed.div_rem(f)?;
        Ok(TschirnhausenMap::new(
            r.coeff(0),
            r.coeff(1),
            r.coeff(2),
            r.coeff(3),
        ))
    }
}

impl fmt::Display for TschirnhausenMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.c0, self.c1, self.c2, self.c3)
    }
}

fn check_monic_quartic(f: &UniPoly) -> Result<()> {
    if f.degree() != Some(4) || !f.is_monic() {
        return Err(Error::DegreeMismatch(String::from(
            "Tschirnhausen transform needs a monic quartic",
        )));
    }
    Ok(())
}

/// Resultant_Y(f(Y), X - m(Y)) for a monic quartic f.
pub fn tschirnhausen_transform(f: &UniPoly, map: &TschirnhausenMap) -> Result<UniPoly> {
    check_monic_quartic(f)?;
    // multiplication-by-m(Y) matrix on the basis 1, Y, Y^2, Y^3 of Q[Y]/(f)
    let mut cols: Vec<[Rat; 4]> = Vec::with_capacity(4);
    let mut cur = map.as_poly();
    for _ in 0..4 {
        cols.push([cur.coeff(0), cur.coeff(1), cur.coeff(2), cur.coeff(3)]);
        // multiply by Y and reduce mod f
        let mut next = UniPoly::new(
            core::iter::once(Rat::zero())
                .chain(cur.coeffs().iter().cloned())
                .collect(),
        );
        if next.degree() == Some(4) {
            let top = next.coeff(4);
            next = &next - &(f * &top);
        }
        cur = next;
    }
    let m = |i: usize, j: usize| -> Rat { cols[j][i].clone() };
    // Faddeev-LeVerrier: char(X) = X^4 + a1 X^3 + a2 X^2 + a3 X + a4
    let mut b = identity4();
    let mut a = Vec::with_capacity(4);
    for k in 1..=4u32 {
        // b <- M*b ; a_k = -tr(b)/k ; b <- b + a_k * I
        let mut nb: Vec<Vec<Rat>> = (0..4)
            .map(|_| (0..4).map(|_| Rat::zero()).collect())
            .collect();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = Rat::zero();
                for l in 0..4 {
                    acc = acc + m(i, l) * b[l][j].clone();
                }
                nb[i][j] = acc;
            }
        }
        let tr = nb[0][0].clone() + nb[1][1].clone() + nb[2][2].clone() + nb[3][3].clone();
        let ak = -tr / rat(k as i64);
        for (i, row) in nb.iter_mut().enumerate() {
            row[i] = row[i].clone() + ak.clone();
        }
        a.push(ak);
        b = nb;
    }
    Ok(UniPoly::new(alloc::vec![
        a[3].clone(),
        a[2].clone(),
        a[1].clone(),
        a[0].clone(),
        rat(1),
    ]))
}

fn identity4() -> Vec<Vec<Rat>> {
    let mut b: Vec<Vec<Rat>> = (0..4)
        .map(|_| (0..4).map(|_| Rat::zero()).collect())
        .collect();
    for (i, row) in b.iter_mut().enumerate() {
        row[i] = rat(1);
    }
    b
}

/// The transform computed through the generic bivariate resultant; slower,
/// used to cross-check `tschirnhausen_transform`.
pub fn tschirnhausen_via_resultant(f: &UniPoly, map: &TschirnhausenMap) -> Result<UniPoly> {
    check_monic_quartic(f)?;
    let fy: Vec<UniPoly> = f
        .coeffs()
        .iter()
        .map(|c| UniPoly::constant(c.clone()))
        .collect();
    // X - (c0 + c1 Y + c2 Y^2 + c3 Y^3) as Y-coefficients over Q[X]
    let gy = alloc::vec![
        &UniPoly::x() - &UniPoly::constant(map.c0.clone()),
        UniPoly::constant(-map.c1.clone()),
        UniPoly::constant(-map.c2.clone()),
        UniPoly::constant(-map.c3.clone()),
    ];
    Ok(super::resultant_y(&fy, &gy))
}
