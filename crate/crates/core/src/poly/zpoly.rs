//! Integer polynomial internals: content/primitive split, pseudo-division and
//! the subresultant PRS. Working over fraction-cleared integer polynomials
//! keeps resultant and gcd computations free of rational blowup.

use alloc::vec;
use alloc::vec::Vec;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Int;

/// Coefficients ascending; trailing zeros trimmed; empty = zero polynomial.
pub type ZPoly = Vec<Int>;

pub fn trim(mut p: ZPoly) -> ZPoly {
    while p.last().map_or(false, Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn deg(p: &ZPoly) -> Option<usize> {
    if p.is_empty() {
        None
    } else {
        Some(p.len() - 1)
    }
}

pub fn lc(p: &ZPoly) -> &Int {
    p.last().expect("leading coefficient of zero polynomial")
}

#[cfg(test)]
pub fn neg(p: &ZPoly) -> ZPoly {
    p.iter().map(|c| -c).collect()
}

#[cfg(test)]
pub fn mul(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Int::zero(); a.len() + b.len() - 1];
    for (i, ca) in a.iter().enumerate() {
        if ca.is_zero() {
            continue;
        }
        for (j, cb) in b.iter().enumerate() {
            out[i + j] += ca * cb;
        }
    }
    trim(out)
}

/// Content: gcd of coefficients, carrying the sign of the leading coefficient.
pub fn content(p: &ZPoly) -> Int {
    let mut g = Int::zero();
    for c in p {
        g = g.gcd(c);
    }
    if !g.is_zero() && lc(p).is_negative() {
        g = -g;
    }
    g
}

pub fn primitive_part(p: &ZPoly) -> ZPoly {
    if p.is_empty() {
        return vec![];
    }
    let c = content(p);
    p.iter().map(|x| x / &c).collect()
}

#[cfg(test)]
pub fn derivative(p: &ZPoly) -> ZPoly {
    if p.len() <= 1 {
        return vec![];
    }
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Int::from(i))
            .collect(),
    )
}

/// Pseudo-remainder: lc(b)^(da-db+1) * a = q*b + r with deg r < deg b.
/// Scales exactly da-db+1 times even when intermediate degrees collapse,
/// as the subresultant recurrences require.
pub fn pseudo_rem(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let db = deg(b).expect("pseudo_rem by zero");
    let da = match deg(a) {
        Some(d) if d >= db => d,
        _ => return a.clone(),
    };
    let l = lc(b).clone();
    let mut r = vec![Int::zero(); da + 1];
    r[..a.len()].clone_from_slice(a);
    for k in (0..=da - db).rev() {
        let top = r[k + db].clone();
        for c in r.iter_mut() {
            *c *= &l;
        }
        for (i, c) in b.iter().enumerate() {
            r[k + i] -= c * &top;
        }
        debug_assert!(r[k + db].is_zero());
    }
    trim(r)
}

fn exact_div_int(p: &ZPoly, d: &Int) -> ZPoly {
    p.iter()
        .map(|c| {
            let (q, r) = c.div_rem(d);
            debug_assert!(r.is_zero(), "inexact division in PRS");
            q
        })
        .collect()
}

/// Resultant of integer polynomials via the subresultant PRS.
pub fn resultant(a: &ZPoly, b: &ZPoly) -> Int {
    let (da, db) = match (deg(a), deg(b)) {
        (Some(da), Some(db)) => (da, db),
        _ => return Int::zero(),
    };
    if da == 0 && db == 0 {
        return Int::one();
    }
    if da == 0 {
        return num_traits::pow::pow(a[0].clone(), db);
    }
    if db == 0 {
        return num_traits::pow::pow(b[0].clone(), da);
    }
    let mut s = 1i32;
    let (mut a, mut b) = (a.clone(), b.clone());
    if da < db {
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        core::mem::swap(&mut a, &mut b);
    }
    let ca = content(&a).abs();
    let cb = content(&b).abs();
    let da = deg(&a).unwrap();
    let db = deg(&b).unwrap();
    let t = num_traits::pow::pow(ca.clone(), db) * num_traits::pow::pow(cb.clone(), da);
    a = exact_div_int(&a, &ca);
    b = exact_div_int(&b, &cb);
    let mut g = Int::one();
    let mut h = Int::one();
    loop {
        let da = deg(&a).unwrap();
        let db = deg(&b).unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            s = -s;
        }
        let r = pseudo_rem(&a, &b);
        a = b;
        let divisor = &g * num_traits::pow::pow(h.clone(), delta);
        b = if r.is_empty() {
            vec![]
        } else {
            exact_div_int(&r, &divisor)
        };
        g = lc(&a).clone();
        h = if delta == 0 {
            h
        } else {
            // h^(1-delta) * g^delta, exact by the subresultant theory
            let num = num_traits::pow::pow(g.clone(), delta);
            let den = num_traits::pow::pow(h.clone(), delta - 1);
            let (q, rem) = num.div_rem(&den);
            debug_assert!(rem.is_zero());
            q
        };
        match deg(&b) {
            None => return Int::zero(), // common factor
            Some(0) => {
                let da = deg(&a).unwrap();
                let num = num_traits::pow::pow(b[0].clone(), da);
                let den = num_traits::pow::pow(h.clone(), da.saturating_sub(1));
                let (q, rem) = num.div_rem(&den);
                debug_assert!(rem.is_zero());
                let res = q;
                return Int::from(s) * t * res;
            }
            Some(_) => {}
        }
    }
}

/// Primitive gcd of integer polynomials via the subresultant PRS.
pub fn gcd(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.is_empty() {
        return primitive_part(b);
    }
    if b.is_empty() {
        return primitive_part(a);
    }
    let (mut a, mut b) = (primitive_part(a), primitive_part(b));
    if deg(&a) < deg(&b) {
        core::mem::swap(&mut a, &mut b);
    }
    let mut g = Int::one();
    let mut h = Int::one();
    loop {
        if deg(&b) == Some(0) {
            return vec![Int::one()];
        }
        let delta = deg(&a).unwrap() - deg(&b).unwrap();
        let r = pseudo_rem(&a, &b);
        if r.is_empty() {
            return primitive_part(&b);
        }
        a = b;
        let divisor = &g * num_traits::pow::pow(h.clone(), delta);
        b = exact_div_int(&r, &divisor);
        g = lc(&a).clone();
        if delta > 0 {
            let num = num_traits::pow::pow(g.clone(), delta);
            let den = num_traits::pow::pow(h.clone(), delta - 1);
            h = &num / &den;
        }
    }
}
