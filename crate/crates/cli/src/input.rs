//! Input parsing for the CLI: polynomials in expression or coefficient-list
//! syntax, and parameter-pair syntax like `(1,-1) S4-form` or `(5,5) d4`.

use std::str::FromStr;

use qg_core::error::Error;
use qg_core::forms::{FormKind, QuarticForm};
use qg_core::poly::parse_poly;
use qg_core::scalar::Rat;
use qg_core::UniPoly;

/// A parsed CLI operand: either a raw quartic or a tagged form.
#[derive(Clone, Debug)]
pub enum Operand {
    Poly(UniPoly),
    Form(QuarticForm),
}

impl Operand {
    pub fn poly(&self) -> UniPoly {
        match self {
            Operand::Poly(p) => p.clone(),
            Operand::Form(f) => f.poly(),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Operand::Poly(p) => p.to_string(),
            Operand::Form(f) => format!("{f} = {}", f.poly()),
        }
    }
}

pub fn parse_form_kind(s: &str) -> Result<FormKind, Error> {
    match s.to_ascii_lowercase().as_str() {
        "s4" => Ok(FormKind::S4),
        "d4" => Ok(FormKind::D4),
        "c4" => Ok(FormKind::C4),
        "v4" => Ok(FormKind::V4),
        other => Err(Error::Parse(format!("unknown form kind `{other}`"))),
    }
}

/// Parse an operand. `default_kind` interprets a bare `(a,b)` pair.
pub fn parse_operand(input: &str, default_kind: Option<FormKind>) -> Result<Operand, Error> {
    let s = input.trim();
    if let Some(rest) = s.strip_prefix('(') {
        let close = rest
            .find(')')
            .ok_or_else(|| Error::Parse("unterminated parameter pair".into()))?;
        let inner = &rest[..close];
        let tail = rest[close + 1..].trim();
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != 2 {
            return Err(Error::Parse("expected two parameters".into()));
        }
        let p0 = Rat::from_str(parts[0].trim())
            .map_err(|_| Error::Parse(format!("bad rational `{}`", parts[0])))?;
        let p1 = Rat::from_str(parts[1].trim())
            .map_err(|_| Error::Parse(format!("bad rational `{}`", parts[1])))?;
        let kind = if tail.is_empty() {
            default_kind.ok_or_else(|| {
                Error::Parse("bare parameter pair needs --form or a form suffix".into())
            })?
        } else {
            let word = tail
                .split_whitespace()
                .next()
                .unwrap()
                .trim_end_matches("-form")
                .trim_end_matches("-Form");
            parse_form_kind(word)?
        };
        return Ok(Operand::Form(QuarticForm { kind, p0, p1 }));
    }
    Ok(Operand::Poly(parse_poly(s)?))
}
