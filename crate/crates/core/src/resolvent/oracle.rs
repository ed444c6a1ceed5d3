//! Numeric matching oracle: rebuilds a pair resolvent from certified
//! high-precision roots instead of closed forms.
//!
//! Roots of both quartics are found by Durand-Kerner in fixed-point dyadic
//! arithmetic (BigInt mantissas, no floats), the matching sums are formed for
//! the requested coset family, the product polynomial is expanded, and every
//! coefficient is rounded to a rational with denominator <= 2^64 by
//! continued-fraction best approximation. Certification is layered: rounding
//! tolerances small enough to make the bounded-denominator rational unique,
//! exact power-sum identities on the rounded result, and bit-identical
//! agreement of an independent run at doubled precision.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{rat, Int, Rat};
use crate::UniPoly;

/// Which matching family to multiply over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MatchingTag {
    /// All 24 matchings: the S4 x S4 coset resolvent.
    S4,
    /// The 8 dihedral matchings on +-paired roots: the D4 x D4 resolvent R1.
    /// Requires both quartics to be biquadratic.
    D4,
}

/// Reconstruct the pair resolvent of f and g numerically and round it to an
/// exact polynomial. `precision_bits` overrides the starting precision.
pub fn numeric_matching_oracle(
    f: &UniPoly,
    g: &UniPoly,
    tag: MatchingTag,
    precision_bits: Option<u32>,
) -> Result<UniPoly> {
    if f.degree() != Some(4) || g.degree() != Some(4) {
        return Err(Error::DegreeMismatch(alloc::string::String::from(
            "oracle needs two quartics",
        )));
    }
    if !f.is_separable() || !g.is_separable() {
        return Err(Error::Inseparable);
    }
    if tag == MatchingTag::D4 {
        for q in [f, g] {
            let m = q.monic();
            if !m.coeff(1).is_zero() || !m.coeff(3).is_zero() {
                return Err(Error::DegreeMismatch(alloc::string::String::from(
                    "D4 matching needs biquadratic inputs",
                )));
            }
        }
    }
    let base = starting_precision(f, g).max(precision_bits.unwrap_or(0));
    let mut prec = base;
    for _ in 0..3 {
        let first = attempt(f, g, tag, prec);
        let second = attempt(f, g, tag, prec * 2);
        match (first, second) {
            (Ok(a), Ok(b)) if a == b => return Ok(a),
            _ => prec *= 2,
        }
    }
    Err(Error::PrecisionInsufficient)
}

fn starting_precision(f: &UniPoly, g: &UniPoly) -> u32 {
    let bound_bits = root_bound_bits(f) + root_bound_bits(g) + 3;
    (2 * (24 * bound_bits + 48)).max(384)
}

fn root_bound_bits(f: &UniPoly) -> u32 {
    let m = f.monic();
    let mut b = Rat::one();
    for k in 0..4 {
        let a = m.coeff(k).abs();
        if a > b {
            b = a;
        }
    }
    let ceil: Int = b.ceil().to_integer() + 2;
    ceil.bits() as u32
}

// ---------------------------------------------------------------------------
// dyadic fixed-point complex arithmetic
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, PartialEq, Eq)]
struct Cpx {
    re: Int,
    im: Int,
}

impl Cpx {
    fn zero() -> Self {
        Cpx {
            re: Int::zero(),
            im: Int::zero(),
        }
    }

    /// 1-norm: an upper bound for |z| within a factor of sqrt(2).
    fn norm1(&self) -> Int {
        self.re.abs() + self.im.abs()
    }
}

struct Dyadic {
    prec: u32,
}

impl Dyadic {
    fn from_int(&self, n: &Int) -> Int {
        n << self.prec
    }

    fn add(&self, a: &Cpx, b: &Cpx) -> Cpx {
        Cpx {
            re: &a.re + &b.re,
            im: &a.im + &b.im,
        }
    }

    fn sub(&self, a: &Cpx, b: &Cpx) -> Cpx {
        Cpx {
            re: &a.re - &b.re,
            im: &a.im - &b.im,
        }
    }

    fn mul(&self, a: &Cpx, b: &Cpx) -> Cpx {
        Cpx {
            re: (&a.re * &b.re - &a.im * &b.im) >> self.prec,
            im: (&a.re * &b.im + &a.im * &b.re) >> self.prec,
        }
    }

    fn div(&self, a: &Cpx, b: &Cpx) -> Cpx {
        // a / b = a * conj(b) / |b|^2, all at scale 2^prec
        let den = &b.re * &b.re + &b.im * &b.im; // scale 2^(2 prec)
        let nre = (&a.re * &b.re + &a.im * &b.im) << self.prec;
        let nim = (&a.im * &b.re - &a.re * &b.im) << self.prec;
        Cpx {
            re: nre / &den, // (2 prec + prec) - 2 prec = prec
            im: nim / &den,
        }
    }

    /// Evaluate an integer-coefficient polynomial at a dyadic complex point.
    fn eval(&self, coeffs: &[Int], x: &Cpx) -> Cpx {
        let mut acc = Cpx::zero();
        for c in coeffs.iter().rev() {
            acc = self.mul(&acc, x);
            acc.re += self.from_int(c);
        }
        acc
    }
}

/// Durand-Kerner roots of a separable integer quartic; error per root is
/// far below 2^-(prec-32) once the update norm stabilizes there.
fn quartic_roots(z: &[Int], dy: &Dyadic) -> Result<Vec<Cpx>> {
    let prec = dy.prec;
    let lc = z.last().unwrap().clone();
    // Cauchy bound 1 + max |c_i / lc|
    let mut bound = Int::one() << prec;
    for c in &z[..4] {
        let q = (c.abs() << prec) / lc.abs() + (Int::one() << prec);
        if q > bound {
            bound = q;
        }
    }
    // seeds: bound * (0.4 + 0.9i)^k, k = 1..4
    let seed = Cpx {
        re: (Int::from(2) << prec) / 5,
        im: (Int::from(9) << prec) / 10,
    };
    let mut xs = Vec::with_capacity(4);
    let mut cur = Cpx {
        re: bound.clone(),
        im: Int::zero(),
    };
    for _ in 0..4 {
        cur = dy.mul(&cur, &seed);
        xs.push(cur.clone());
    }
    let threshold = Int::one() << 24; // |delta| < 2^-(prec-24)
    let mut converged = false;
    for _ in 0..600 {
        let mut maxdelta = Int::zero();
        for i in 0..4 {
            let num = dy.eval(z, &xs[i]);
            let mut den = Cpx {
                re: dy.from_int(&lc),
                im: Int::zero(),
            };
            for j in 0..4 {
                if j != i {
                    let d = dy.sub(&xs[i], &xs[j]);
                    den = dy.mul(&den, &d);
                }
            }
            if den.norm1().is_zero() {
                return Err(Error::PrecisionInsufficient);
            }
            let delta = dy.div(&num, &den);
            xs[i] = dy.sub(&xs[i], &delta);
            let n = delta.norm1();
            if n > maxdelta {
                maxdelta = n;
            }
        }
        if maxdelta < threshold {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::PrecisionInsufficient);
    }
    Ok(xs)
}

/// Orders biquadratic roots as (r1, r2, -r1, -r2).
fn pair_roots(roots: &[Cpx], dy: &Dyadic) -> Result<Vec<Cpx>> {
    let r1 = roots[0].clone();
    let mut neg_idx = 0;
    let mut best = Int::zero();
    for (j, r) in roots.iter().enumerate().skip(1) {
        let d = dy.add(&r1, r).norm1();
        if neg_idx == 0 || d < best {
            best = d;
            neg_idx = j;
        }
    }
    let rest: Vec<usize> = (1..4).filter(|&j| j != neg_idx).collect();
    let r2 = roots[rest[0]].clone();
    Ok(vec![
        r1.clone(),
        r2.clone(),
        roots[neg_idx].clone(),
        roots[rest[1]].clone(),
    ])
}

const PERMS24: [[usize; 4]; 24] = [
    [0, 1, 2, 3],
    [0, 1, 3, 2],
    [0, 2, 1, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
    [0, 3, 2, 1],
    [1, 0, 2, 3],
    [1, 0, 3, 2],
    [1, 2, 0, 3],
    [1, 2, 3, 0],
    [1, 3, 0, 2],
    [1, 3, 2, 0],
    [2, 0, 1, 3],
    [2, 0, 3, 1],
    [2, 1, 0, 3],
    [2, 1, 3, 0],
    [2, 3, 0, 1],
    [2, 3, 1, 0],
    [3, 0, 1, 2],
    [3, 0, 2, 1],
    [3, 1, 0, 2],
    [3, 1, 2, 0],
    [3, 2, 0, 1],
    [3, 2, 1, 0],
];

/// e, s, s^2, s^3, t1, t2, t3, t4 of D4 = <(1234),(13)> acting on indices.
const PERMS_D4: [[usize; 4]; 8] = [
    [0, 1, 2, 3],
    [1, 2, 3, 0],
    [2, 3, 0, 1],
    [3, 0, 1, 2],
    [2, 1, 0, 3],
    [0, 3, 2, 1],
    [1, 0, 3, 2],
    [3, 2, 1, 0],
];

/// Root-scale a monic rational quartic into a monic integer quartic:
/// returns (coefficients of lambda^4 f(X/lambda), lambda) where lambda is the
/// lcm of the coefficient denominators. Roots get multiplied by lambda, so
/// they become algebraic integers and every matching-product coefficient is a
/// rational integer.
fn integralize(f: &UniPoly) -> (Vec<Int>, Int) {
    let m = f.monic();
    let mut lambda = Int::one();
    for k in 0..4 {
        lambda = num_integer::lcm(lambda, m.coeff(k).denom().clone());
    }
    let mut coeffs = Vec::with_capacity(5);
    for k in 0..=4usize {
        let scaled = m.coeff(k) * Rat::from_integer(num_traits::pow::pow(lambda.clone(), 4 - k));
        debug_assert!(scaled.is_integer());
        coeffs.push(scaled.to_integer());
    }
    (coeffs, lambda)
}

fn attempt(f: &UniPoly, g: &UniPoly, tag: MatchingTag, prec: u32) -> Result<UniPoly> {
    let dy = Dyadic { prec };
    let (zf, lam_f) = integralize(f);
    let (zg, lam_g) = integralize(g);
    let mut rf = quartic_roots(&zf, &dy)?;
    let mut rg = quartic_roots(&zg, &dy)?;
    if tag == MatchingTag::D4 {
        rf = pair_roots(&rf, &dy)?;
        rg = pair_roots(&rg, &dy)?;
    }
    let perms: &[[usize; 4]] = match tag {
        MatchingTag::S4 => &PERMS24,
        MatchingTag::D4 => &PERMS_D4,
    };
    // product of (X - theta_pi) over the scaled roots
    let mut poly = vec![Cpx {
        re: Int::one() << prec,
        im: Int::zero(),
    }];
    for p in perms {
        let mut theta = Cpx::zero();
        for i in 0..4 {
            theta = dy.add(&theta, &dy.mul(&rf[i], &rg[p[i]]));
        }
        let mut next = vec![Cpx::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            let t = dy.mul(c, &theta);
            next[k] = dy.sub(&next[k], &t);
            next[k + 1] = dy.add(&next[k + 1], c);
        }
        poly = next;
    }
    // all coefficients are rational integers of the scaled resolvent;
    // round to the nearest integer and demand a wide certification margin
    if prec < 280 {
        return Err(Error::PrecisionInsufficient);
    }
    let tol = Int::one() << (prec / 2);
    let half = Int::one() << (prec - 1);
    let mut scaled_coeffs = Vec::with_capacity(poly.len());
    for c in &poly {
        if c.im.abs() > tol {
            return Err(Error::PrecisionInsufficient);
        }
        let rounded = (&c.re + &half) >> prec;
        if (&c.re - (&rounded << prec)).abs() > tol {
            return Err(Error::PrecisionInsufficient);
        }
        scaled_coeffs.push(rounded);
    }
    // unscale: R(X) = R'(mu X) / mu^n with mu = lam_f * lam_g
    let mu = &lam_f * &lam_g;
    let n = scaled_coeffs.len() - 1;
    let mut coeffs = Vec::with_capacity(n + 1);
    for (k, c) in scaled_coeffs.iter().enumerate() {
        let denom = num_traits::pow::pow(mu.clone(), n - k);
        coeffs.push(Rat::new(c.clone(), denom));
    }
    let result = UniPoly::new(coeffs);
    check_power_sum_identities(f, g, tag, &result)?;
    Ok(result)
}

/// Exact identities the true resolvent satisfies: the first two power sums of
/// the matching values are symmetric functions of the input coefficients.
fn check_power_sum_identities(
    f: &UniPoly,
    g: &UniPoly,
    tag: MatchingTag,
    result: &UniPoly,
) -> Result<()> {
    let fm = f.monic();
    let gm = g.monic();
    let e1f = -fm.coeff(3);
    let e2f = fm.coeff(2);
    let e1g = -gm.coeff(3);
    let e2g = gm.coeff(2);
    let p2f = &e1f * &e1f - rat(2) * &e2f;
    let p2g = &e1g * &e1g - rat(2) * &e2g;
    let n = result.degree().unwrap();
    let (p1, p2) = match tag {
        MatchingTag::S4 => {
            let p1 = rat(6) * &e1f * &e1g;
            let p2 = rat(6) * &p2f * &p2g + rat(2) * (&e1f * &e1f - &p2f) * (&e1g * &e1g - &p2g);
            (p1, p2)
        }
        MatchingTag::D4 => (Rat::zero(), rat(16) * &e2f * &e2g),
    };
    let e1 = p1.clone();
    let e2 = (&p1 * &p1 - &p2) / rat(2);
    if result.coeff(n - 1) != -e1 || result.coeff(n - 2) != e2 {
        return Err(Error::PrecisionInsufficient);
    }
    Ok(())
}
