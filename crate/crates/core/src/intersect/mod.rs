//! The intersection decision: from a pair of quartics to the degree and shape
//! of the intersection of their splitting fields.
//!
//! The machinery follows the table-driven scheme: classify both Galois
//! groups, build the matching resolvent for the right coset family, read off
//! decomposition types (with a deterministic squarefree retry when the raw
//! resolvent has repeated factors), match the unique consistent table row,
//! and disambiguate DT collisions by comparing quadratic subfields.

pub mod tables;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::factor::{decomposition_type, DecompType};
use crate::forms::{
    discriminant_kernel, quadratic_subfields, quartic_galois_group, retry_maps, to_d4_form,
    to_s4_form, GaloisLabel, GeneralQuartic, QuarticForm,
};
use crate::poly::tschirnhausen_transform;
use crate::resolvent::{d4_r1, resolvent_s4};
use crate::scalar::{rat, sqrt_exact, squarefree_kernel, Int, Rat};
use crate::UniPoly;

pub use tables::{RowRelation, TableRow};

/// How the two splitting fields relate, from the first input's point of view.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    AContainsB,
    BContainsA,
    /// Proper nontrivial intersection of the reported degree.
    Proper,
    /// Intersection is Q.
    Trivial,
}

/// Decomposition-type evidence: the block reading of the raw resolvent, plus
/// the decomposition of the first squarefree rebuild when the raw one had
/// repeated factors (the squarefree version is the definitional DT).
#[derive(Clone, Debug)]
pub struct DtEvidence {
    pub block: DecompType,
    pub refined: Option<DecompType>,
    pub retries: u32,
}

impl DtEvidence {
    /// The authoritative decomposition type.
    pub fn dt(&self) -> &DecompType {
        self.refined.as_ref().unwrap_or(&self.block)
    }
}

/// The full intersection verdict with the evidence that produced it.
#[derive(Clone, Debug)]
pub struct IntersectionAnswer {
    pub group_a: GaloisLabel,
    pub group_b: GaloisLabel,
    pub relation: Relation,
    /// [L_a intersect L_b : Q].
    pub degree: u32,
    /// Matching table rows; more than one only when their answers coincide.
    pub rows: Vec<TableRow>,
    /// DT of the degree-24 resolvent.
    pub dt_r: DtEvidence,
    /// DT of the degree-8 R1 resolvent (biquadratic pairs only).
    pub dt_r1: Option<DtEvidence>,
    /// Genuine quadratic-subfield kernels of each splitting field.
    pub kernels_a: Vec<Int>,
    pub kernels_b: Vec<Int>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Family {
    /// Table 1: larger group is S4 or A4; degree-24 S4-form resolvent.
    General,
    /// Tables 3/4: both groups inside D4; R1 and R1*R2^2.
    Dihedral,
    /// Tables 5/6: first group S3 or C3; degree-24 S4-form resolvent.
    Reducible,
}

fn is_sub_d4(l: GaloisLabel) -> bool {
    matches!(l, GaloisLabel::D4 | GaloisLabel::C4 | GaloisLabel::V4)
}

fn is_red(l: GaloisLabel) -> bool {
    matches!(l, GaloisLabel::S3 | GaloisLabel::C3)
}

/// Tuning knobs for `intersect`.
#[derive(Clone, Copy, Debug)]
pub struct IntersectOptions {
    /// Budget for the squarefree Tschirnhausen retries.
    pub max_retries: u32,
}

impl Default for IntersectOptions {
    fn default() -> Self {
        IntersectOptions { max_retries: 16 }
    }
}

/// Decide the intersection of the splitting fields of two separable quartics.
pub fn intersect(f: &UniPoly, g: &UniPoly) -> Result<IntersectionAnswer> {
    intersect_with(f, g, IntersectOptions::default())
}

/// `intersect` with explicit options.
pub fn intersect_with(
    f: &UniPoly,
    g: &UniPoly,
    opts: IntersectOptions,
) -> Result<IntersectionAnswer> {
    let qa = GeneralQuartic::from_poly(f)?;
    let qb = GeneralQuartic::from_poly(g)?;
    let la = quartic_galois_group(&qa)?;
    let lb = quartic_galois_group(&qb)?;
    for l in [la, lb] {
        if l.order() <= 2 || l == GaloisLabel::ReducibleOther {
            return Err(Error::OutOfScope(format!(
                "Galois group {l} is outside the intersection tables"
            )));
        }
    }
    // orient the pair the way the tables are keyed
    let swap = if is_red(la) {
        false
    } else if is_red(lb) {
        true
    } else if is_sub_d4(la) && is_sub_d4(lb) {
        lb == GaloisLabel::D4 && la != GaloisLabel::D4
    } else {
        la.order() < lb.order()
    };
    let (qa, qb, la, lb) = if swap {
        (qb, qa, lb, la)
    } else {
        (qa, qb, la, lb)
    };
    let family = if is_red(la) {
        Family::Reducible
    } else if is_sub_d4(la) && is_sub_d4(lb) {
        Family::Dihedral
    } else {
        Family::General
    };

    let (dt_r, dt_r1) = match family {
        Family::General | Family::Reducible => {
            let (fa, _) = to_s4_form(&qa)?;
            let (fb, _) = to_s4_form(&qb)?;
            (dt_with_retry_s4_bounded(&fa, &fb, opts.max_retries)?, None)
        }
        Family::Dihedral => {
            // DT(R1) from the biquadratic closed form; DT(R) through the
            // S4-form route. The structural product R1*R2^2 cannot be block-
            // read for the full DT: a squared factor of R2 may cover two
            // orbits of size d rather than one of size 2d.
            let na = to_d4_form(&qa)?;
            let nb = to_d4_form(&qb)?;
            let pa = na.form.d4_params().unwrap();
            let pb = nb.form.d4_params().unwrap();
            let e1 = dt_with_retry_d4_bounded(&pa, &pb, opts.max_retries)?;
            let (fa, _) = to_s4_form(&qa)?;
            let (fb, _) = to_s4_form(&qb)?;
            let e = dt_with_retry_s4_bounded(&fa, &fb, opts.max_retries)?;
            (e, Some(e1))
        }
    };

    let kernels_a = genuine_kernels(la, &qa)?;
    let kernels_b = genuine_kernels(lb, &qb)?;

    let all = tables::rows();
    let mut cands: Vec<TableRow> = all
        .into_iter()
        .filter(|r| {
            r.group_a == la
                && r.group_b == lb
                && r.dt_r == *dt_r.dt()
                && match (&r.dt_r1, &dt_r1) {
                    (Some(want), Some(ev)) => want == ev.dt(),
                    (None, None) => true,
                    _ => false,
                }
        })
        .collect();
    if cands.is_empty() {
        return Err(Error::InconsistentDecomposition(format!(
            "no table row for ({la}, {lb}) with DT(R) = {}{}",
            dt_r.dt(),
            match &dt_r1 {
                Some(e) => format!(", DT(R1) = {}", e.dt()),
                None => String::new(),
            }
        )));
    }
    let answers_differ = cands
        .iter()
        .any(|r| (r.degree, r.relation) != (cands[0].degree, cands[0].relation));
    if answers_differ {
        // quadratic-subfield disambiguation: 0 common kernels means trivial
        // intersection, 1 means a shared quadratic, 2+ means the common
        // biquadratic field (degree 4)
        let common = kernels_a.iter().filter(|k| kernels_b.contains(k)).count();
        let expected: u32 = match common {
            0 => 1,
            1 => 2,
            _ => 4,
        };
        cands.retain(|r| r.degree == expected);
        if cands.is_empty() {
            return Err(Error::InconsistentDecomposition(format!(
                "subfield evidence (common kernels: {common}) matches no candidate row"
            )));
        }
        let still_differ = cands
            .iter()
            .any(|r| (r.degree, r.relation) != (cands[0].degree, cands[0].relation));
        if still_differ {
            return Err(Error::InconsistentDecomposition(String::from(
                "candidate rows disagree after subfield comparison",
            )));
        }
    }
    let row0 = &cands[0];
    let relation = match (row0.relation, swap) {
        (RowRelation::Equal, _) => Relation::Equal,
        (RowRelation::Trivial, _) => Relation::Trivial,
        (RowRelation::Proper, _) => Relation::Proper,
        (RowRelation::Contains, false) | (RowRelation::Contained, true) => Relation::AContainsB,
        (RowRelation::Contains, true) | (RowRelation::Contained, false) => Relation::BContainsA,
    };
    let (ka, kb, ga, gb) = if swap {
        (kernels_b, kernels_a, lb, la)
    } else {
        (kernels_a, kernels_b, la, lb)
    };
    Ok(IntersectionAnswer {
        group_a: ga,
        group_b: gb,
        relation,
        degree: row0.degree,
        rows: cands,
        dt_r,
        dt_r1,
        kernels_a: ka,
        kernels_b: kb,
    })
}

/// True iff both splitting fields coincide.
pub fn splitting_fields_equal(f: &UniPoly, g: &UniPoly) -> Result<bool> {
    Ok(intersect(f, g)?.relation == Relation::Equal)
}

fn is_squarefree(f: &UniPoly) -> Result<bool> {
    Ok(f.gcd(&f.derivative())?.degree() == Some(0))
}

/// DT of the S4-pair resolvent with the deterministic squarefree retry:
/// when the raw resolvent has repeated factors, the second form is replaced
/// by Tschirnhausen transforms from the canonical map list until the rebuilt
/// resolvent is squarefree.
pub fn dt_with_retry_s4(a: &QuarticForm, b: &QuarticForm) -> Result<DtEvidence> {
    dt_with_retry_s4_bounded(a, b, 16)
}

/// `dt_with_retry_s4` with an explicit retry budget.
pub fn dt_with_retry_s4_bounded(
    a: &QuarticForm,
    b: &QuarticForm,
    max_retries: u32,
) -> Result<DtEvidence> {
    let r = resolvent_s4(a, b)?;
    let block = decomposition_type(&r.total)?;
    if is_squarefree(&r.total)? {
        return Ok(DtEvidence {
            block,
            refined: None,
            retries: 0,
        });
    }
    for (i, map) in retry_maps().take(max_retries as usize).enumerate() {
        let tb = tschirnhausen_transform(&b.poly(), &map)?;
        if !tb.is_separable() {
            continue;
        }
        let gb = GeneralQuartic::from_poly(&tb)?;
        let Ok((b2, _)) = to_s4_form(&gb) else {
            continue;
        };
        let r2 = resolvent_s4(a, &b2)?;
        if is_squarefree(&r2.total)? {
            return Ok(DtEvidence {
                block,
                refined: Some(decomposition_type(&r2.total)?),
                retries: i as u32 + 1,
            });
        }
    }
    Err(Error::RetriesExhausted)
}

/// Deterministic biquadratic-preserving retry parameters (y, w) for the
/// odd Tschirnhausen maps yX + wX^3.
fn d4_retry_params() -> impl Iterator<Item = (Rat, Rat)> {
    (2i64..).flat_map(|total| (1..total).map(move |y| (rat(y), rat(total - y))))
}

/// DT of the R1 resolvent for a biquadratic pair, with the squarefree retry
/// running over biquadratic-preserving odd Tschirnhausen maps of the second
/// member (y X + w X^3).
pub fn dt_with_retry_d4(pa: &(Rat, Rat), pb: &(Rat, Rat)) -> Result<DtEvidence> {
    dt_with_retry_d4_bounded(pa, pb, 16)
}

/// `dt_with_retry_d4` with an explicit retry budget.
pub fn dt_with_retry_d4_bounded(
    pa: &(Rat, Rat),
    pb: &(Rat, Rat),
    max_retries: u32,
) -> Result<DtEvidence> {
    let build = |pb: &(Rat, Rat)| -> UniPoly { d4_r1(&pa.0, &pa.1, &pb.0, &pb.1) };
    let r1 = build(pb);
    let block_r1 = decomposition_type(&r1)?;
    if is_squarefree(&r1)? {
        return Ok(DtEvidence {
            block: block_r1,
            refined: None,
            retries: 0,
        });
    }
    for (i, (y, w)) in d4_retry_params().take(max_retries as usize).enumerate() {
        // odd map applied to X^4 + a'X^2 + b': stays biquadratic
        let (a2, b2) = pb;
        let na = a2 * a2 * a2 * &w * &w - rat(3) * a2 * b2 * &w * &w - rat(2) * a2 * a2 * &w * &y
            + rat(4) * b2 * &w * &y
            + a2 * &y * &y;
        let nb = b2 * num_traits::pow::pow(b2 * &w * &w - a2 * &w * &y + &y * &y, 2);
        let d = rat(16) * &nb * num_traits::pow::pow(&na * &na - rat(4) * &nb, 2);
        if d.is_zero() {
            continue;
        }
        let r1n = build(&(na, nb));
        if is_squarefree(&r1n)? {
            return Ok(DtEvidence {
                block: block_r1,
                refined: Some(decomposition_type(&r1n)?),
                retries: i as u32 + 1,
            });
        }
    }
    Err(Error::RetriesExhausted)
}

/// Squarefree kernels generating the quadratic subfields actually contained
/// in the splitting field (not the literal three-field display, which can
/// collapse for C4 and misses two of the V4 subfields).
pub fn genuine_kernels(label: GaloisLabel, g: &GeneralQuartic) -> Result<Vec<Int>> {
    let mut out = match label {
        GaloisLabel::S4 | GaloisLabel::S3 => vec![discriminant_kernel(g)],
        GaloisLabel::A4 | GaloisLabel::C3 => vec![],
        GaloisLabel::D4 => {
            let norm = to_d4_form(g)?;
            quadratic_subfields(&norm.form)?.to_vec()
        }
        GaloisLabel::C4 => {
            let norm = to_d4_form(g)?;
            let (a, b) = norm.form.d4_params().unwrap();
            vec![squarefree_kernel(&(&a * &a - rat(4) * &b))]
        }
        GaloisLabel::V4 => {
            let norm = to_d4_form(g)?;
            let (a, b) = norm.form.d4_params().unwrap();
            let v = sqrt_exact(&b).expect("V4 form has square constant term");
            vec![
                squarefree_kernel(&(-&a + rat(2) * &v)),
                squarefree_kernel(&(-&a - rat(2) * &v)),
                squarefree_kernel(&(&a * &a - rat(4) * &b)),
            ]
        }
        _ => {
            return Err(Error::OutOfScope(format!(
                "no subfield data for group {label}"
            )))
        }
    };
    out.sort();
    out.dedup();
    out.retain(|k| *k != Int::from(1));
    Ok(out)
}
