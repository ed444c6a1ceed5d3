//! Univariate polynomials over Q.
//!
//! `UniPoly` stores coefficients ascending by degree, normalized so the
//! leading coefficient is nonzero (the zero polynomial is the empty list).
//! All arithmetic is exact. Resultants and gcds run over fraction-cleared
//! integer polynomials via the subresultant PRS (see `zpoly`).

pub(crate) mod zpoly;

mod parse;
mod tschirn;

pub use parse::parse_poly;
pub use tschirn::{tschirnhausen_transform, tschirnhausen_via_resultant, TschirnhausenMap};

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Int, Rat};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    /// Build from ascending coefficients; trailing zeros are trimmed.
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        UniPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        UniPoly::new(vec![c])
    }

    /// The monomial x.
    pub fn x() -> Self {
        UniPoly::new(vec![Rat::zero(), Rat::one()])
    }

    /// c * x^k.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        UniPoly::new(v)
    }

    pub fn from_int_coeffs(cs: &[i64]) -> Self {
        UniPoly::new(cs.iter().map(|&c| crate::scalar::rat(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, One::is_one)
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return UniPoly::zero();
        }
        let l = self.leading_coeff();
        UniPoly::new(self.coeffs.iter().map(|c| c / &l).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero();
        }
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(Int::from(i)))
                .collect(),
        )
    }

    /// Substitute g for the variable: self(g(x)).
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// f(x + c).
    pub fn shift(&self, c: &Rat) -> UniPoly {
        self.compose(&UniPoly::new(vec![c.clone(), Rat::one()]))
    }

    /// f(c * x).
    pub fn scale_arg(&self, c: &Rat) -> UniPoly {
        let mut pw = Rat::one();
        UniPoly::new(
            self.coeffs
                .iter()
                .map(|a| {
                    let v = a * &pw;
                    pw = &pw * c;
                    v
                })
                .collect(),
        )
    }

    /// Quotient and remainder: self = q*d + r with deg r < deg d.
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = d.degree().ok_or(Error::ZeroDivisor)?;
        let mut r = self.coeffs.clone();
        if r.len() < dd + 1 {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let mut q = vec![Rat::zero(); r.len() - dd];
        let l = d.leading_coeff();
        for k in (0..q.len()).rev() {
            let c = &r[k + dd] / &l;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                let t = dc * &c;
                r[k + i] = &r[k + i] - &t;
            }
            q[k] = c;
        }
        Ok((UniPoly::new(q), UniPoly::new(r)))
    }

    /// Division known to be exact; errors if a nonzero remainder shows up.
    pub fn exact_div(&self, d: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(d)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Degenerate(String::from("division not exact")))
        }
    }

    /// Monic gcd over Q (computed over the integers by subresultant PRS).
    pub fn gcd(&self, other: &UniPoly) -> Result<UniPoly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if self.is_zero() {
            return Ok(other.monic());
        }
        if other.is_zero() {
            return Ok(self.monic());
        }
        let (a, _) = self.clear_denominators();
        let (b, _) = other.clear_denominators();
        let g = zpoly::gcd(&a, &b);
        Ok(UniPoly::from_zpoly(&g).monic())
    }

    /// Resultant of two polynomials over Q.
    pub fn resultant(&self, other: &UniPoly) -> Rat {
        let (da, db) = match (self.degree(), other.degree()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Rat::zero(),
        };
        let (za, na) = self.clear_denominators();
        let (zb, nb) = other.clear_denominators();
        // res(f/na, g/nb) = res(f,g) / (na^deg g * nb^deg f)
        let r = zpoly::resultant(&za, &zb);
        let den = num_traits::pow::pow(na, db) * num_traits::pow::pow(nb, da);
        Rat::new(r, den)
    }

    /// Discriminant; requires degree >= 2.
    pub fn discriminant(&self) -> Result<Rat> {
        let n = self
            .degree()
            .filter(|&n| n >= 2)
            .ok_or_else(|| Error::DegreeMismatch(String::from("discriminant needs degree >= 2")))?;
        let r = self.resultant(&self.derivative());
        let sign = if (n * (n - 1) / 2) % 2 == 0 {
            Rat::one()
        } else {
            -Rat::one()
        };
        Ok(sign * r / self.leading_coeff())
    }

    /// Separability test: nonzero discriminant (degree >= 1 counts as separable).
    pub fn is_separable(&self) -> bool {
        match self.degree() {
            None | Some(0) => false,
            Some(1) => true,
            Some(_) => !self.discriminant().unwrap().is_zero(),
        }
    }

    /// Fraction-clear: returns integer coefficients and the common denominator n
    /// such that self = (integer polynomial) / n.
    pub fn clear_denominators(&self) -> (zpoly::ZPoly, Int) {
        let mut n = Int::one();
        for c in &self.coeffs {
            n = num_integer::lcm(n, c.denom().clone());
        }
        let z = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&n / c.denom()))
            .collect();
        (z, n)
    }

    /// Primitive integer model: content removed, positive leading coefficient
    /// is not forced (sign follows the input).
    pub fn primitive_z(&self) -> zpoly::ZPoly {
        let (z, _) = self.clear_denominators();
        zpoly::primitive_part(&z)
    }

    pub(crate) fn from_zpoly(z: &[Int]) -> UniPoly {
        UniPoly::new(z.iter().map(|c| Rat::from_integer(c.clone())).collect())
    }

    /// Coefficient list in the CLI's ascending bracket syntax.
    pub fn to_coeff_list_string(&self) -> String {
        use core::fmt::Write;
        let mut s = String::from("[");
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{c}");
        }
        s.push(']');
        s
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, "-")?;
            } else {
                write!(f, "+")?;
            }
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + rhs.coeff(i));
        }
        UniPoly::new(out)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - rhs.coeff(i));
        }
        UniPoly::new(out)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul<&Rat> for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c * rhs).collect())
    }
}

/// Resultant with respect to an auxiliary variable Y, where both arguments are
/// given as ascending Y-coefficients whose entries are polynomials in x.
/// Computed as the Sylvester determinant over Q[x] by cofactor expansion;
/// intended for small degrees.
pub fn resultant_y(f: &[UniPoly], g: &[UniPoly]) -> UniPoly {
    let fd = f.iter().rposition(|c| !c.is_zero());
    let gd = g.iter().rposition(|c| !c.is_zero());
    let (m, n) = match (fd, gd) {
        (Some(m), Some(n)) => (m, n),
        _ => return UniPoly::zero(),
    };
    if m == 0 && n == 0 {
        return UniPoly::one();
    }
    if m == 0 {
        return pow_poly(&f[0], n);
    }
    if n == 0 {
        return pow_poly(&g[0], m);
    }
    let size = m + n;
    let mut rows: Vec<Vec<UniPoly>> = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![UniPoly::zero(); size];
        for (j, c) in f.iter().take(m + 1).enumerate() {
            row[i + (m - j)] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![UniPoly::zero(); size];
        for (j, c) in g.iter().take(n + 1).enumerate() {
            row[i + (n - j)] = c.clone();
        }
        rows.push(row);
    }
    det(&rows)
}

fn pow_poly(p: &UniPoly, e: usize) -> UniPoly {
    let mut acc = UniPoly::one();
    for _ in 0..e {
        acc = &acc * p;
    }
    acc
}

fn det(m: &[Vec<UniPoly>]) -> UniPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = UniPoly::zero();
    for (j, pivot) in m[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<UniPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = pivot * &det(&minor);
        if j % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}
