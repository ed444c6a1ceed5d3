//! Command implementations. Each returns a serializable report; `main`
//! decides between the line-oriented text rendering and `--machine` JSON.

use std::time::Instant;

use serde::Serialize;

use qg_core::error::{Error, Result};
use qg_core::forms::{
    quartic_galois_group, to_d4_form, to_s4_form, FormKind, GaloisLabel, GeneralQuartic,
    QuarticForm,
};
use qg_core::intersect::{intersect_with, IntersectOptions, IntersectionAnswer, Relation};
use qg_core::isom::{
    c4_equal_verdict, d4_isom_param, d4_u_family, isom_s4_case1, isom_s4_case2, isom_s4_family,
    C4Verdict, D4Branch, FamilyPoint, FamilyStep,
};
use qg_core::resolvent::oracle::{numeric_matching_oracle, MatchingTag};
use qg_core::resolvent::{resolvent_c4_pair, resolvent_d4, resolvent_s4, resolvent_v4};
use qg_core::scalar::{rat, sqrt_exact, Rat};
use qg_core::UniPoly;

use crate::input::Operand;

#[derive(Serialize)]
pub struct FormOut {
    pub kind: String,
    pub params: (String, String),
    pub poly: String,
}

impl FormOut {
    pub fn new(f: &QuarticForm) -> Self {
        FormOut {
            kind: match f.kind {
                FormKind::S4 => "S4".into(),
                FormKind::D4 => "D4".into(),
                FormKind::C4 => "C4".into(),
                FormKind::V4 => "V4".into(),
            },
            params: (f.p0.to_string(), f.p1.to_string()),
            poly: f.poly().to_string(),
        }
    }
}

// ---------------------------------------------------------------------------
// galois
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct GaloisReport {
    pub command: String,
    pub input: String,
    pub poly: String,
    pub group: String,
    pub group_order: usize,
    pub s4_form: Option<FormOut>,
    pub d4_form: Option<FormOut>,
}

pub fn cmd_galois(op: &Operand) -> Result<GaloisReport> {
    let poly = op.poly();
    let g = GeneralQuartic::from_poly(&poly)
        .map_err(|_| Error::Parse("input is not a quartic".into()))?;
    let label = quartic_galois_group(&g)?;
    let s4_form = to_s4_form(&g).ok().map(|(f, _)| FormOut::new(&f));
    let d4_form = if matches!(label, GaloisLabel::D4 | GaloisLabel::C4 | GaloisLabel::V4) {
        to_d4_form(&g).ok().map(|n| FormOut::new(&n.form))
    } else {
        None
    };
    Ok(GaloisReport {
        command: "galois".into(),
        input: op.describe(),
        poly: poly.to_string(),
        group: label.name().into(),
        group_order: label.order(),
        s4_form,
        d4_form,
    })
}

// ---------------------------------------------------------------------------
// intersect
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct DtOut {
    pub block: String,
    pub refined: Option<String>,
    pub retries: u32,
}

#[derive(Serialize)]
pub struct RowOut {
    pub table: u8,
    pub row_id: String,
    pub gap_id: (u32, u32),
}

#[derive(Serialize)]
pub struct IntersectReport {
    pub command: String,
    pub inputs: (String, String),
    pub groups: (String, String),
    pub relation: String,
    pub degree: u32,
    pub rows: Vec<RowOut>,
    pub dt_resolvent: DtOut,
    pub dt_r1: Option<DtOut>,
    pub subfield_kernels: (Vec<String>, Vec<String>),
    pub oracle_checked: Option<bool>,
    pub elapsed_ms: u128,
}

pub fn relation_name(r: Relation, degree: u32) -> String {
    match r {
        Relation::Equal => "equal".into(),
        Relation::AContainsB => "a-contains-b".into(),
        Relation::BContainsA => "b-contains-a".into(),
        Relation::Proper => format!("proper-degree-{degree}"),
        Relation::Trivial => "trivial".into(),
    }
}

fn dt_out(e: &qg_core::intersect::DtEvidence) -> DtOut {
    DtOut {
        block: e.block.to_string(),
        refined: e.refined.as_ref().map(|d| d.to_string()),
        retries: e.retries,
    }
}

pub fn oracle_precision_from_env() -> Option<u32> {
    std::env::var("QG_PRECISION_BITS")
        .ok()
        .and_then(|v| v.parse().ok())
}

/// Cross-validate the closed-form resolvent against the numeric oracle for
/// the family the answer used.
fn self_check_answer(a: &IntersectionAnswer, f: &UniPoly, g: &UniPoly) -> Result<bool> {
    let prec = oracle_precision_from_env();
    if a.dt_r1.is_some() {
        // biquadratic family: check R1 against the 8-matching oracle
        let na = to_d4_form(&GeneralQuartic::from_poly(f)?)?;
        let nb = to_d4_form(&GeneralQuartic::from_poly(g)?)?;
        let closed = resolvent_d4(&na.form, &nb.form)?;
        let numeric =
            numeric_matching_oracle(&na.form.poly(), &nb.form.poly(), MatchingTag::D4, prec)?;
        Ok(closed.part_a == numeric)
    } else {
        let (fa, _) = to_s4_form(&GeneralQuartic::from_poly(f)?)?;
        let (fb, _) = to_s4_form(&GeneralQuartic::from_poly(g)?)?;
        let closed = resolvent_s4(&fa, &fb)?;
        let numeric = numeric_matching_oracle(&fa.poly(), &fb.poly(), MatchingTag::S4, prec)?;
        Ok(closed.total == numeric)
    }
}

pub fn cmd_intersect(
    op1: &Operand,
    op2: &Operand,
    retries: u32,
    self_check: bool,
) -> Result<IntersectReport> {
    let start = Instant::now();
    let (f, g) = (op1.poly(), op2.poly());
    let ans = intersect_with(
        &f,
        &g,
        IntersectOptions {
            max_retries: retries,
        },
    )?;
    let oracle_checked = if self_check {
        Some(self_check_answer(&ans, &f, &g)?)
    } else {
        None
    };
    Ok(IntersectReport {
        command: "intersect".into(),
        inputs: (op1.describe(), op2.describe()),
        groups: (ans.group_a.name().into(), ans.group_b.name().into()),
        relation: relation_name(ans.relation, ans.degree),
        degree: ans.degree,
        rows: ans
            .rows
            .iter()
            .map(|r| RowOut {
                table: r.table,
                row_id: r.row_id.clone(),
                gap_id: (r.joint_order, r.joint_index),
            })
            .collect(),
        dt_resolvent: dt_out(&ans.dt_r),
        dt_r1: ans.dt_r1.as_ref().map(dt_out),
        subfield_kernels: (
            ans.kernels_a.iter().map(|k| k.to_string()).collect(),
            ans.kernels_b.iter().map(|k| k.to_string()).collect(),
        ),
        oracle_checked,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

// ---------------------------------------------------------------------------
// isom
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct WitnessOut {
    pub family: String,
    pub params: Vec<String>,
    pub source: FormOut,
    pub target: FormOut,
    pub map: String,
}

#[derive(Serialize)]
pub struct IsomReport {
    pub command: String,
    pub inputs: (String, String),
    pub equal: bool,
    pub witness: Option<WitnessOut>,
    pub note: Option<String>,
}

fn witness_out(family: &str, p: &FamilyPoint) -> WitnessOut {
    WitnessOut {
        family: family.into(),
        params: p.params.iter().map(|x| x.to_string()).collect(),
        source: FormOut::new(&p.source),
        target: FormOut::new(&p.target),
        map: p.witness.to_string(),
    }
}

/// Signed Farey-style candidates with |numerator|, denominator <= bound,
/// ordered by max(|num|, den) then denominator then value.
fn bounded_rationals(bound: i64) -> Vec<Rat> {
    let mut out = vec![rat(0)];
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(rat(0));
    let mut staged: Vec<(i64, Rat)> = Vec::new();
    fn gcd(a: i64, b: i64) -> i64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }
    for num in 1..=bound {
        for den in 1..=bound {
            if gcd(num, den) != 1 {
                continue;
            }
            let q = Rat::new(num.into(), den.into());
            staged.push((num.max(den), q.clone()));
            staged.push((num.max(den), -q));
        }
    }
    staged.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
    for (_, q) in staged {
        if seen.insert(q.clone()) {
            out.push(q);
        }
    }
    out
}

pub fn cmd_isom(op1: &Operand, op2: &Operand, bound: i64) -> Result<IsomReport> {
    let (f, g) = (op1.poly(), op2.poly());
    let ans = intersect_with(&f, &g, IntersectOptions::default())?;
    let equal = ans.relation == Relation::Equal;
    let mut witness = None;
    let mut note = None;
    if equal {
        witness = find_witness(&f, &g, bound)?;
        if witness.is_none() {
            note = Some(format!(
                "fields are equal but no family parameter was found within bound {bound}"
            ));
        }
    }
    Ok(IsomReport {
        command: "isom".into(),
        inputs: (op1.describe(), op2.describe()),
        equal,
        witness,
        note,
    })
}

fn find_witness(f: &UniPoly, g: &UniPoly, bound: i64) -> Result<Option<WitnessOut>> {
    let qa = GeneralQuartic::from_poly(f)?;
    let qb = GeneralQuartic::from_poly(g)?;
    let la = quartic_galois_group(&qa)?;
    let lb = quartic_galois_group(&qb)?;
    let sub_d4 = |l: GaloisLabel| matches!(l, GaloisLabel::D4 | GaloisLabel::C4 | GaloisLabel::V4);
    if sub_d4(la) && sub_d4(lb) {
        let na = to_d4_form(&qa)?;
        let nb = to_d4_form(&qb)?;
        let want = nb.form.d4_params().unwrap();
        for p in -bound..=bound {
            for q in -bound..=bound {
                if p == 0 && q == 0 {
                    continue;
                }
                for branch in [D4Branch::SameOrbit, D4Branch::DualOrbit] {
                    if let Ok(pt) = d4_isom_param(&na.form, &rat(p), &rat(q), branch) {
                        if pt.target.d4_params().unwrap() == want {
                            let fam = match branch {
                                D4Branch::SameOrbit => "d4-pq-same-orbit",
                                D4Branch::DualOrbit => "d4-pq-dual-orbit",
                            };
                            return Ok(Some(witness_out(fam, &pt)));
                        }
                    }
                }
            }
        }
        return Ok(None);
    }
    let (fa, _) = to_s4_form(&qa)?;
    let (fb, _) = to_s4_form(&qb)?;
    for p in bounded_rationals(bound) {
        if let Ok(pt) = isom_s4_case1(&fa, &p) {
            if pt.target == fb {
                return Ok(Some(witness_out("s4-p", &pt)));
            }
        }
    }
    for u in -bound..=bound {
        for v in -bound..=bound {
            if let Ok(pt) = isom_s4_case2(&fa, &rat(u), &rat(v)) {
                if pt.target == fb {
                    return Ok(Some(witness_out("s4-uv", &pt)));
                }
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------------------
// family
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct FamilyReport {
    pub command: String,
    pub input: String,
    pub kind: String,
    pub source: FormOut,
    pub points: Vec<WitnessOut>,
    pub skipped: Vec<(String, String)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    S4P,
    S4UV,
    D4U,
    D4PQ,
    C4,
}

impl FamilyKind {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "s4-p" => FamilyKind::S4P,
            "s4-uv" => FamilyKind::S4UV,
            "d4-u" => FamilyKind::D4U,
            "d4-pq" => FamilyKind::D4PQ,
            "c4" => FamilyKind::C4,
            other => return Err(Error::Parse(format!("unknown family kind `{other}`"))),
        })
    }

    fn name(&self) -> &'static str {
        match self {
            FamilyKind::S4P => "s4-p",
            FamilyKind::S4UV => "s4-uv",
            FamilyKind::D4U => "d4-u",
            FamilyKind::D4PQ => "d4-pq",
            FamilyKind::C4 => "c4",
        }
    }
}

fn form_mismatch(msg: &str) -> Error {
    Error::DegreeMismatch(msg.into())
}

/// Reduce the operand to the form the family needs.
fn family_source(op: &Operand, kind: FamilyKind) -> Result<QuarticForm> {
    let want = match kind {
        FamilyKind::S4P | FamilyKind::S4UV => FormKind::S4,
        FamilyKind::D4U | FamilyKind::D4PQ => FormKind::D4,
        FamilyKind::C4 => FormKind::C4,
    };
    if let Operand::Form(f) = op {
        if f.kind == want {
            return Ok(f.clone());
        }
    }
    let g = GeneralQuartic::from_poly(&op.poly())
        .map_err(|_| form_mismatch("input is not a quartic"))?;
    match want {
        FormKind::S4 => to_s4_form(&g)
            .map(|(f, _)| f)
            .map_err(|_| form_mismatch("input cannot be normalized to the S4 form")),
        FormKind::D4 => to_d4_form(&g)
            .map(|n| n.form)
            .map_err(|_| form_mismatch("Galois group is not contained in D4")),
        FormKind::C4 => {
            let label = quartic_galois_group(&g).map_err(|_| form_mismatch("inseparable"))?;
            if label != GaloisLabel::C4 {
                return Err(form_mismatch("Galois group is not C4"));
            }
            let n = to_d4_form(&g).map_err(|_| form_mismatch("no biquadratic normalization"))?;
            let (a, b) = n.form.d4_params().unwrap();
            let u = sqrt_exact(&((&a * &a - rat(4) * &b) / &b))
                .expect("C4 classification guarantees a rational value");
            Ok(QuarticForm::c4(a, u))
        }
        FormKind::V4 => unreachable!(),
    }
}

pub fn cmd_family(op: &Operand, kind: FamilyKind, count: usize) -> Result<FamilyReport> {
    let source = family_source(op, kind)?;
    let mut points = Vec::new();
    let mut skipped = Vec::new();
    match kind {
        FamilyKind::S4P => {
            for step in isom_s4_family(&source)? {
                if points.len() >= count {
                    break;
                }
                match step {
                    FamilyStep::Point(p) => points.push(witness_out("s4-p", &p)),
                    FamilyStep::Skipped { param, vanishing } => {
                        skipped.push((param.to_string(), vanishing.to_string()))
                    }
                }
            }
        }
        FamilyKind::S4UV => {
            'outer: for total in 0i64.. {
                for u in -total..=total {
                    let vmag = total - u.abs();
                    for v in [vmag, -vmag] {
                        if points.len() >= count {
                            break 'outer;
                        }
                        match isom_s4_case2(&source, &rat(u), &rat(v)) {
                            Ok(p) => {
                                if p.target.is_separable() {
                                    points.push(witness_out("s4-uv", &p));
                                }
                            }
                            Err(_) => skipped.push((format!("({u},{v})"), "degenerate".into())),
                        }
                        if v == 0 {
                            break;
                        }
                    }
                }
            }
        }
        FamilyKind::D4U => {
            for p in d4_u_family(&source).take(count) {
                points.push(witness_out("d4-u", &p));
            }
        }
        FamilyKind::D4PQ => {
            // (p, q) pairs by |p|+|q| levels, same then dual branch at each
            'outer2: for level in 1i64.. {
                for pv in (-level..=level).rev() {
                    let qmag = level - pv.abs();
                    for qv in [qmag, -qmag] {
                        for branch in [D4Branch::SameOrbit, D4Branch::DualOrbit] {
                            if points.len() >= count {
                                break 'outer2;
                            }
                            if let Ok(pt) = d4_isom_param(&source, &rat(pv), &rat(qv), branch) {
                                let fam = match branch {
                                    D4Branch::SameOrbit => "d4-pq-same-orbit",
                                    D4Branch::DualOrbit => "d4-pq-dual-orbit",
                                };
                                points.push(witness_out(fam, &pt));
                            }
                        }
                        if qv == 0 {
                            break;
                        }
                    }
                }
            }
        }
        FamilyKind::C4 => {
            for comp in qg_core::isom::c4_known_identities(&source)? {
                if points.len() >= count {
                    break;
                }
                points.push(WitnessOut {
                    family: "c4-companion".into(),
                    params: vec![],
                    source: FormOut::new(&source),
                    target: FormOut::new(&comp),
                    map: "-".into(),
                });
            }
        }
    }
    Ok(FamilyReport {
        command: "family".into(),
        input: op.describe(),
        kind: kind.name().into(),
        source: FormOut::new(&source),
        points,
        skipped,
    })
}

// ---------------------------------------------------------------------------
// search
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct Table2Row {
    pub b: i64,
    pub big_b: i64,
    pub a_target: i64,
    pub b_target: i64,
}

#[derive(Serialize)]
pub struct SimplestHit {
    pub m: i64,
    pub n: i64,
    pub equal: bool,
    pub via_rewrite: bool,
    pub roots: Vec<String>,
}

#[derive(Serialize)]
pub struct SearchReport {
    pub command: String,
    pub mode: String,
    pub range: (i64, i64),
    pub table2_rows: Vec<Table2Row>,
    pub equal_pairs: Vec<SimplestHit>,
    pub rewrite_pairs: Vec<SimplestHit>,
}

pub fn cmd_search_table2(min: i64, max: i64) -> SearchReport {
    let mut rows = Vec::new();
    for b in min..=max {
        let den = 3 * b - 256;
        if den == 0 || (8 * b) % den != 0 {
            continue;
        }
        let big_b = 8 * b / den;
        if big_b == 0 {
            continue; // target collapses to the inseparable (0, 0)
        }
        rows.push(Table2Row {
            b,
            big_b,
            a_target: -6 * big_b * big_b,
            b_target: -8 * big_b * big_b * big_b,
        });
    }
    SearchReport {
        command: "search".into(),
        mode: "table2".into(),
        range: (min, max),
        table2_rows: rows,
        equal_pairs: vec![],
        rewrite_pairs: vec![],
    }
}

fn simplest_hit(m: i64, n: i64, v: &C4Verdict) -> SimplestHit {
    SimplestHit {
        m,
        n,
        equal: v.equal,
        via_rewrite: v.via_rewrite,
        roots: v.certificate_roots.iter().map(|r| r.to_string()).collect(),
    }
}

pub fn cmd_search_simplest(min: i64, max: i64, jobs: usize) -> Result<SearchReport> {
    use qg_core::forms::simplest_quartic_c4;
    let min = min.max(1);
    let jobs = jobs.max(1);
    let ms: Vec<i64> = (min..max).collect();
    let chunks: Vec<&[i64]> = ms.chunks(ms.len().div_ceil(jobs).max(1)).collect();
    let results: Vec<Vec<(i64, i64, C4Verdict)>> = std::thread::scope(|scope| {
        let handles: Vec<_> = chunks
            .into_iter()
            .map(|chunk| {
                scope.spawn(move || {
                    let mut out = Vec::new();
                    for &m in chunk {
                        let hm = simplest_quartic_c4(m);
                        for n in (m + 1)..=max {
                            let hn = simplest_quartic_c4(n);
                            if let Ok(v) = c4_equal_verdict(&hm, &hn) {
                                if v.equal || v.via_rewrite {
                                    out.push((m, n, v));
                                }
                            }
                        }
                    }
                    out
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });
    let mut all: Vec<(i64, i64, C4Verdict)> = results.into_iter().flatten().collect();
    all.sort_by_key(|(m, n, _)| (*m, *n));
    let equal_pairs = all
        .iter()
        .filter(|(_, _, v)| v.equal)
        .map(|(m, n, v)| simplest_hit(*m, *n, v))
        .collect();
    let rewrite_pairs = all
        .iter()
        .filter(|(_, _, v)| v.via_rewrite)
        .map(|(m, n, v)| simplest_hit(*m, *n, v))
        .collect();
    Ok(SearchReport {
        command: "search".into(),
        mode: "simplest-quartic".into(),
        range: (min, max),
        table2_rows: vec![],
        equal_pairs,
        rewrite_pairs,
    })
}

// ---------------------------------------------------------------------------
// resolvent
// ---------------------------------------------------------------------------

#[derive(Serialize)]
pub struct ResolventReport {
    pub command: String,
    pub inputs: (String, String),
    pub case: String,
    pub total: String,
    pub total_coeffs: String,
    pub parts: Vec<(String, String)>,
    pub oracle_checked: Option<bool>,
}

pub fn cmd_resolvent(
    op1: &Operand,
    op2: &Operand,
    form: Option<FormKind>,
    self_check: bool,
) -> Result<ResolventReport> {
    let kind = form.or_else(|| match (op1, op2) {
        (Operand::Form(a), Operand::Form(b)) if a.kind == b.kind => Some(a.kind),
        _ => None,
    });
    let prec = oracle_precision_from_env();
    match kind {
        Some(FormKind::D4) => {
            let (fa, fb) = (as_form(op1, FormKind::D4)?, as_form(op2, FormKind::D4)?);
            let r = resolvent_d4(&fa, &fb)?;
            let oracle_checked = if self_check {
                let numeric =
                    numeric_matching_oracle(&fa.poly(), &fb.poly(), MatchingTag::D4, prec)?;
                Some(numeric == r.part_a)
            } else {
                None
            };
            Ok(ResolventReport {
                command: "resolvent".into(),
                inputs: (op1.describe(), op2.describe()),
                case: "d4-pair".into(),
                total: r.total.to_string(),
                total_coeffs: r.total.to_coeff_list_string(),
                parts: vec![
                    ("R1".into(), r.part_a.to_string()),
                    ("R2".into(), r.part_b.to_string()),
                ],
                oracle_checked,
            })
        }
        Some(FormKind::C4) => {
            let (fa, fb) = (as_form(op1, FormKind::C4)?, as_form(op2, FormKind::C4)?);
            let (fp, fm) = resolvent_c4_pair(&fa, &fb)?;
            Ok(ResolventReport {
                command: "resolvent".into(),
                inputs: (op1.describe(), op2.describe()),
                case: "c4-pair".into(),
                total: (&fp.poly() * &fm.poly()).to_string(),
                total_coeffs: (&fp.poly() * &fm.poly()).to_coeff_list_string(),
                parts: vec![
                    ("f_{A,C+}".into(), fp.poly().to_string()),
                    ("f_{A,C-}".into(), fm.poly().to_string()),
                ],
                oracle_checked: None,
            })
        }
        Some(FormKind::V4) => {
            let (fa, fb) = (as_form(op1, FormKind::V4)?, as_form(op2, FormKind::V4)?);
            let total = resolvent_v4(&fa, &fb)?;
            Ok(ResolventReport {
                command: "resolvent".into(),
                inputs: (op1.describe(), op2.describe()),
                case: "v4-pair".into(),
                total: total.to_string(),
                total_coeffs: total.to_coeff_list_string(),
                parts: vec![],
                oracle_checked: None,
            })
        }
        _ => {
            // S4 route, normalizing arbitrary quartics
            let fa = match op1 {
                Operand::Form(f) if f.kind == FormKind::S4 => f.clone(),
                _ => to_s4_form(&GeneralQuartic::from_poly(&op1.poly())?)?.0,
            };
            let fb = match op2 {
                Operand::Form(f) if f.kind == FormKind::S4 => f.clone(),
                _ => to_s4_form(&GeneralQuartic::from_poly(&op2.poly())?)?.0,
            };
            let r = resolvent_s4(&fa, &fb)?;
            let oracle_checked = if self_check {
                let numeric =
                    numeric_matching_oracle(&fa.poly(), &fb.poly(), MatchingTag::S4, prec)?;
                Some(numeric == r.total)
            } else {
                None
            };
            Ok(ResolventReport {
                command: "resolvent".into(),
                inputs: (op1.describe(), op2.describe()),
                case: "s4-pair".into(),
                total: r.total.to_string(),
                total_coeffs: r.total.to_coeff_list_string(),
                parts: vec![
                    ("G1".into(), r.part_a.to_string()),
                    ("G2".into(), r.part_b.to_string()),
                    ("disc_product".into(), r.disc_product.to_string()),
                ],
                oracle_checked,
            })
        }
    }
}

fn as_form(op: &Operand, kind: FormKind) -> Result<QuarticForm> {
    match op {
        Operand::Form(f) if f.kind == kind => Ok(f.clone()),
        Operand::Form(_) => Err(Error::DegreeMismatch("wrong form kind".into())),
        Operand::Poly(p) => {
            let g = GeneralQuartic::from_poly(p)?;
            match kind {
                FormKind::S4 => Ok(to_s4_form(&g)?.0),
                FormKind::D4 => Ok(to_d4_form(&g)?.form),
                _ => Err(Error::DegreeMismatch(
                    "give C4/V4 inputs as parameter pairs".into(),
                )),
            }
        }
    }
}

/// Exit code for an error, per the documented convention.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => 2,
        Error::Inseparable => 3,
        Error::OutOfScope(_) => 4,
        Error::DegreeMismatch(_) => 5,
        _ => 1,
    }
}
