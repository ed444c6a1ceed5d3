//! Factorization over Q and decomposition types.
//!
//! The pipeline is content/primitive split, Yun's squarefree decomposition,
//! Berlekamp factorization modulo a good prime, quadratic Hensel lifting past
//! twice the coefficient bound, and exhaustive subset recombination. Output
//! factors are monic over Q, canonically ordered, with an explicit unit so
//! that unit * prod(factor^mult) reproduces the input bit-exactly.

mod modp;
mod zassenhaus;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::zpoly;
use crate::scalar::{divisors, Int, Rat};
use crate::UniPoly;

pub use crate::scalar::is_square as is_rational_square;

/// Complete factorization over Q: `unit * prod factors[i].0 ^ factors[i].1`
/// equals the original polynomial exactly; every factor is monic irreducible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorList {
    pub unit: Rat,
    pub factors: Vec<(UniPoly, u32)>,
}

impl FactorList {
    /// Multiply the factorization back out.
    pub fn expand(&self) -> UniPoly {
        let mut acc = UniPoly::constant(self.unit.clone());
        for (f, m) in &self.factors {
            for _ in 0..*m {
                acc = &acc * f;
            }
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// Monic irreducible factors of each degree, with multiplicity.
    pub fn degrees(&self) -> Vec<(usize, u32)> {
        self.factors
            .iter()
            .map(|(f, m)| (f.degree().unwrap(), *m))
            .collect()
    }
}

/// Multiset of block sizes of a resolvent factorization: for squarefree input
/// the irreducible factor degrees; a repeated factor g^e contributes the
/// single block deg(g)*e.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecompType {
    parts: Vec<usize>,
}

impl DecompType {
    /// Normalizes to descending order.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        DecompType { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn contains_one(&self) -> bool {
        self.parts.last() == Some(&1)
    }
}

impl fmt::Display for DecompType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for DecompType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// f / gcd(f, f'), monic, plus a flag telling whether anything was removed.
pub fn squarefree_part(f: &UniPoly) -> Result<(UniPoly, bool)> {
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if f.degree() == Some(0) {
        return Ok((UniPoly::one(), false));
    }
    let g = f.gcd(&f.derivative())?;
    if g.degree() == Some(0) {
        return Ok((f.monic(), false));
    }
    Ok((f.exact_div(&g)?.monic(), true))
}

/// Yun's algorithm: returns (g_i, i) with f = unit * prod g_i^i, the g_i
/// monic, squarefree and pairwise coprime.
pub fn squarefree_decomposition(f: &UniPoly) -> Result<Vec<(UniPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let f = f.monic();
    if f.degree() == Some(0) {
        return Ok(vec![]);
    }
    let df = f.derivative();
    let g = f.gcd(&df)?;
    if g.degree() == Some(0) {
        return Ok(vec![(f, 1)]);
    }
    let mut w = f.exact_div(&g)?;
    let mut y = df.exact_div(&g)?;
    let mut z = &y - &w.derivative();
    let mut out = Vec::new();
    let mut i = 1u32;
    while w.degree().unwrap_or(0) > 0 {
        let h = w.gcd(&z)?;
        if h.degree().unwrap_or(0) > 0 {
            out.push((h.monic(), i));
        }
        w = w.exact_div(&h)?;
        y = z.exact_div(&h)?;
        z = &y - &w.derivative();
        i += 1;
    }
    Ok(out)
}

/// Complete irreducible factorization over Q.
pub fn factor_over_q(f: &UniPoly) -> Result<FactorList> {
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if f.degree() == Some(0) {
        return Ok(FactorList {
            unit: f.coeff(0),
            factors: vec![],
        });
    }
    let unit = f.leading_coeff();
    let mut factors: Vec<(UniPoly, u32)> = Vec::new();
    for (part, mult) in squarefree_decomposition(f)? {
        let prim = part.primitive_z();
        for g in zassenhaus::factor_primitive_squarefree(&prim) {
            factors.push((UniPoly::from_zpoly(&g).monic(), mult));
        }
    }
    factors.sort_by(|a, b| {
        let da = a.0.degree();
        let db = b.0.degree();
        da.cmp(&db)
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
            .then_with(|| a.1.cmp(&b.1))
    });
    Ok(FactorList { unit, factors })
}

/// Decomposition type with the power-of-irreducible block reading.
pub fn decomposition_type(f: &UniPoly) -> Result<DecompType> {
    if f.degree().unwrap_or(0) == 0 {
        return Err(Error::DegreeMismatch(String::from(
            "decomposition type needs a nonconstant polynomial",
        )));
    }
    let fl = factor_over_q(f)?;
    Ok(DecompType::new(
        fl.factors
            .iter()
            .map(|(g, e)| g.degree().unwrap() * (*e as usize))
            .collect(),
    ))
}

/// All rational roots (without multiplicity), by divisor enumeration on the
/// fraction-cleared primitive model.
pub fn rational_roots(f: &UniPoly) -> Result<Vec<Rat>> {
    if f.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let mut z = f.primitive_z();
    let mut roots = Vec::new();
    // strip powers of x
    let mut shifted = 0;
    while z.first().map_or(false, Zero::is_zero) {
        z.remove(0);
        shifted += 1;
    }
    if shifted > 0 {
        roots.push(Rat::zero());
    }
    if zpoly::deg(&z).unwrap_or(0) == 0 {
        return Ok(roots);
    }
    let a0 = z.first().unwrap().magnitude().clone();
    let an = zpoly::lc(&z).magnitude().clone();
    let fq = UniPoly::from_zpoly(&z);
    for p in divisors(&a0) {
        for q in divisors(&an) {
            let cand = Rat::new(Int::from_biguint(num_bigint::Sign::Plus, p.clone()), {
                Int::from_biguint(num_bigint::Sign::Plus, q.clone())
            });
            for sgn in [1i64, -1] {
                let c = &cand * Rat::from_integer(Int::from(sgn));
                if fq.eval(&c).is_zero() && !roots.contains(&c) {
                    roots.push(c);
                }
            }
        }
    }
    roots.sort();
    Ok(roots)
}
