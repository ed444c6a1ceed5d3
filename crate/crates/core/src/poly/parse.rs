//! Text syntax for polynomials.
//!
//! Two forms are accepted:
//!   * expression form: `x^4+5*x^2+5`, `x^4 - 1/2*x + 3/4` (the `*` is
//!     optional, `x` or `X`, rationals as `p/q`);
//!   * coefficient-list form, ascending degree: `[5,0,5,0,1]`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Rat;
use crate::UniPoly;

pub fn parse_poly(input: &str) -> Result<UniPoly> {
    let s = input.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty input".to_string()));
    }
    if s.starts_with('[') {
        return parse_coeff_list(s);
    }
    parse_expr(s)
}

fn parse_rat(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad rational `{s}`")))
}

fn parse_coeff_list(s: &str) -> Result<UniPoly> {
    let inner = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .ok_or_else(|| Error::Parse("unterminated coefficient list".to_string()))?;
    if inner.trim().is_empty() {
        return Ok(UniPoly::zero());
    }
    let coeffs: Result<Vec<Rat>> = inner.split(',').map(parse_rat).collect();
    Ok(UniPoly::new(coeffs?))
}

fn parse_expr(s: &str) -> Result<UniPoly> {
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut terms: Vec<(Rat, usize)> = Vec::new();
    let bytes = compact.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let mut sign = Rat::one();
        while i < bytes.len() && (bytes[i] == b'+' || bytes[i] == b'-') {
            if bytes[i] == b'-' {
                sign = -sign;
            }
            i += 1;
        }
        if i >= bytes.len() {
            return Err(Error::Parse("dangling sign".to_string()));
        }
        // coefficient: digits with optional /digits
        let start = i;
        while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'/') {
            i += 1;
        }
        let mut coeff = if i > start {
            parse_rat(&compact[start..i])?
        } else {
            Rat::one()
        };
        coeff = coeff * sign;
        // optional '*'
        if i < bytes.len() && bytes[i] == b'*' {
            i += 1;
        }
        // optional variable with optional exponent
        let exp = if i < bytes.len() && (bytes[i] == b'x' || bytes[i] == b'X') {
            i += 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let es = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if es == i {
                    return Err(Error::Parse("missing exponent".to_string()));
                }
                compact[es..i]
                    .parse::<usize>()
                    .map_err(|_| Error::Parse("bad exponent".to_string()))?
            } else {
                1
            }
        } else {
            if i == start {
                return Err(Error::Parse(format!(
                    "unexpected character `{}`",
                    &compact[i..i + 1]
                )));
            }
            0
        };
        terms.push((coeff, exp));
    }
    let maxdeg = terms.iter().map(|t| t.1).max().unwrap_or(0);
    let mut coeffs = alloc::vec![Rat::zero(); maxdeg + 1];
    for (c, e) in terms {
        coeffs[e] = &coeffs[e] + &c;
    }
    Ok(UniPoly::new(coeffs))
}
