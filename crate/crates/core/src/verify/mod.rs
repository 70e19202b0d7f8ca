//! Named verification suites. Every check becomes one report entry; checks run on the
//! ambient rayon pool and the report is ordered by check id.

mod tables;

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

pub use tables::ROOT_RELATIVE_TOLERANCE;

use crate::error::{Error, Result};
use crate::exactpoly::{coeff_props, format_rational, int, rat, to_f64, AnyPoly, QPoly, QXPoly, Rational, XPoly};
use crate::realroots::{interlaces, is_real_rooted, isolate_roots_with_width, mutually_interlacing};
use crate::recurrences::{
    assemble_a, assemble_dq, assemble_tilde_b, assemble_tilde_d, assemble_tq, check_identity,
    interlacing_transform, refined_affine_t, refined_k, refined_t, refined_tq, fisk_nx_check, Identity,
    KMethod, NXMatrix, TransformSpec, WeightedComboSpec, weighted_combination,
};
use crate::report::{timed, ReportEntry, VerificationReport, Verdict};
use crate::stability::{
    build_c, c_pairs, hurwitz_determinants, hurwitz_determinants_symbolic, interlace_via_stability,
    q_positive_on_positive_reals, q_positive_on_positive_reals_except_one, StabilityVerdict,
};
use crate::weylcomb::{
    affine_tail_holds_alt, brute_polynomial, inv_stats, psi, psi_inverse, signed_perms, stats, BruteFamily,
    InvSeq, DEFAULT_CAP,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    PaperTables,
    Oracles,
    Identities,
    Interlacing,
    Stability,
    All,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::PaperTables,
        Suite::Oracles,
        Suite::Identities,
        Suite::Interlacing,
        Suite::Stability,
        Suite::All,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::PaperTables => "paper_tables",
            Suite::Oracles => "oracles",
            Suite::Identities => "identities",
            Suite::Interlacing => "interlacing",
            Suite::Stability => "stability",
            Suite::All => "all",
        }
    }

    /// Rank bound used when none is configured: brute-force suites stop earlier.
    pub fn default_max_n(self) -> usize {
        match self {
            Suite::Oracles | Suite::Stability => 6,
            _ => 10,
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Largest rank at which the Stembridge identity is checked; `B_n` comes from enumeration.
pub const STEMBRIDGE_MAX_N: usize = 7;

pub fn default_q_samples() -> Vec<Rational> {
    vec![rat(1, 2), int(1), int(2), int(5)]
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_n: Option<usize>,
    pub q_samples: Vec<Rational>,
    pub cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_n: None, q_samples: default_q_samples(), cap: DEFAULT_CAP }
    }
}

enum Outcome {
    Pass(Option<Value>),
    Fail(Value),
    Skip(String),
}

fn outcome(ok: bool, witness: impl FnOnce() -> Value) -> Outcome {
    if ok {
        Outcome::Pass(None)
    } else {
        Outcome::Fail(witness())
    }
}

fn from_entry(e: ReportEntry) -> Outcome {
    match e.verdict {
        Verdict::Pass => Outcome::Pass(e.witness),
        Verdict::Fail => Outcome::Fail(e.witness.unwrap_or(Value::Null)),
        Verdict::Skipped => Outcome::Skip(
            e.witness.and_then(|w| w.as_str().map(str::to_string)).unwrap_or_default(),
        ),
    }
}

type Body = Box<dyn FnOnce() -> Result<Outcome> + Send>;

struct Job {
    id: String,
    params: Vec<(&'static str, Value)>,
    body: Body,
}

fn job(id: String, params: Vec<(&'static str, Value)>, body: impl FnOnce() -> Result<Outcome> + Send + 'static) -> Job {
    Job { id, params, body: Box::new(body) }
}

fn run_job(j: Job) -> ReportEntry {
    let Job { id, params, body } = j;
    let mut entry = timed(|| match body() {
        Ok(Outcome::Pass(None)) => ReportEntry::pass(id.clone()),
        Ok(Outcome::Pass(Some(note))) => ReportEntry::pass(id.clone()).with_witness(note),
        Ok(Outcome::Fail(w)) => ReportEntry::fail(id.clone(), w),
        Ok(Outcome::Skip(reason)) => ReportEntry::skipped(id.clone(), &reason),
        Err(Error::Resource { n, cap }) => {
            ReportEntry::skipped(id.clone(), &format!("n = {n} exceeds the enumeration cap {cap}"))
        }
        Err(e) => ReportEntry::fail(id.clone(), json!({ "error": e.to_string() })),
    });
    for (k, v) in params {
        entry.parameters.insert(k.to_string(), v);
    }
    entry
}

/// Runs `suite`; the output is independent of the worker count.
pub fn run_suite(suite: Suite, config: &VerifyConfig) -> Result<VerificationReport> {
    if let Some(m) = config.max_n {
        if m < 2 {
            return Err(Error::Usage(format!("max_n must be at least 2, got {m}")));
        }
    }
    if let Some(q) = config.q_samples.iter().find(|q| **q <= Rational::zero()) {
        return Err(Error::Usage(format!("q samples must be positive, got {}", format_rational(q))));
    }
    let mut seen = HashSet::new();
    let qs: Vec<Rational> = config.q_samples.iter().filter(|q| seen.insert((*q).clone())).cloned().collect();
    let bound = |s: Suite| config.max_n.unwrap_or(s.default_max_n());
    let cap = config.cap;

    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::ALL[..5].to_vec(),
        s => vec![s],
    };
    let mut jobs = Vec::new();
    for s in suites {
        match s {
            Suite::PaperTables => jobs.extend(paper_table_jobs()),
            Suite::Oracles => jobs.extend(oracle_jobs(bound(s), cap)),
            Suite::Identities => jobs.extend(identity_jobs(bound(s), cap)),
            Suite::Interlacing => jobs.extend(interlacing_jobs(bound(s), &qs)),
            Suite::Stability => jobs.extend(stability_jobs(bound(s), &qs)),
            Suite::All => unreachable!("expanded above"),
        }
    }
    let entries: Vec<ReportEntry> = jobs.into_par_iter().map(run_job).collect();
    VerificationReport::from_entries(entries)
}

fn q_label(q: &Rational) -> String {
    format_rational(q)
}

fn n_param(n: usize) -> Vec<(&'static str, Value)> {
    vec![("n", json!(n))]
}

fn nq_params(n: usize, q: &Rational) -> Vec<(&'static str, Value)> {
    vec![("n", json!(n)), ("q", json!(q_label(q)))]
}

fn x_diff(lhs: &XPoly, rhs: &XPoly) -> Value {
    let d = lhs - rhs;
    json!({"lhs": lhs.to_string(), "rhs": rhs.to_string(), "difference": d, "difference_text": d.to_string()})
}

fn qx_diff(lhs: &QXPoly, rhs: &QXPoly) -> Value {
    let d = lhs - rhs;
    json!({"lhs": lhs.to_string(), "rhs": rhs.to_string(), "difference": d, "difference_text": d.to_string()})
}

fn any_diff(lhs: &AnyPoly, rhs: &AnyPoly) -> Value {
    match (lhs, rhs) {
        (AnyPoly::X(a), AnyPoly::X(b)) => x_diff(a, b),
        (AnyPoly::QX(a), AnyPoly::QX(b)) => qx_diff(a, b),
        _ => json!({"lhs": lhs.to_string(), "rhs": rhs.to_string(), "reason": "kinds differ"}),
    }
}

fn compare_any(lhs: AnyPoly, rhs: AnyPoly) -> Outcome {
    outcome(lhs == rhs, || any_diff(&lhs, &rhs))
}

/// First index at which two families differ.
fn compare_families(lhs: &[AnyPoly], rhs: &[AnyPoly]) -> Outcome {
    if lhs.len() != rhs.len() {
        return Outcome::Fail(json!({"reason": "length mismatch", "lhs_len": lhs.len(), "rhs_len": rhs.len()}));
    }
    match lhs.iter().zip(rhs).position(|(a, b)| a != b) {
        None => Outcome::Pass(None),
        Some(i) => {
            let mut w = any_diff(&lhs[i], &rhs[i]);
            w["index"] = json!(i);
            Outcome::Fail(w)
        }
    }
}

fn brute(family: BruteFamily, n: usize, cap: usize) -> Result<AnyPoly> {
    brute_polynomial(family, n, cap)
}

// ---------------------------------------------------------------- paper tables

fn paper_table_jobs() -> Vec<Job> {
    let mut jobs = Vec::new();
    for (i, expected) in tables::t4().into_iter().enumerate() {
        jobs.push(job(format!("paper_tables/T4/i={i}"), vec![("i", json!(i))], move || {
            let got = refined_tq(4)?.polys[i].clone();
            Ok(outcome(got == expected, || qx_diff(&got, &expected)))
        }));
    }
    jobs.push(job("paper_tables/T4/T44_equals_q_T43".into(), vec![], || {
        let t = refined_tq(4)?.polys;
        let rhs = t[3].scale_q(&QPoly::q_pow(1));
        Ok(outcome(t[4] == rhs, || qx_diff(&t[4], &rhs)))
    }));
    jobs.push(job("paper_tables/T4/T47_equals_qx_T40".into(), vec![], || {
        let t = refined_tq(4)?.polys;
        let rhs = t[0].scale_q(&QPoly::q_pow(1)).mul_x_pow(1);
        Ok(outcome(t[7] == rhs, || qx_diff(&t[7], &rhs)))
    }));
    for (i, (expected, roots)) in tables::k4().into_iter().enumerate() {
        let expected_poly = expected.clone();
        jobs.push(job(format!("paper_tables/K4/i={i}"), vec![("i", json!(i))], move || {
            let got = refined_k(4, KMethod::Direct)?.polys[i].clone();
            Ok(outcome(got == expected_poly, || x_diff(&got, &expected_poly)))
        }));
        jobs.push(job(
            format!("paper_tables/K4_roots/i={i}"),
            vec![("i", json!(i)), ("width", json!("1/1000000"))],
            move || k4_roots(&expected, &roots),
        ));
    }
    for table in tables::c_tables() {
        let (i, j) = (table.i, table.j);
        let params = vec![("i", json!(i)), ("j", json!(j))];
        let expected_poly = table.poly.clone();
        let expected_m = table.m;
        jobs.push(job(format!("paper_tables/C/i={i},j={j}"), params.clone(), move || {
            let c = build_c(i, j)?;
            Ok(outcome(c.poly == expected_poly && c.m == expected_m, || {
                json!({"m": c.m, "expected_m": expected_m, "poly": c.poly.to_string(), "expected": expected_poly.to_string()})
            }))
        }));
        let expected_dets = table.determinants;
        jobs.push(job(format!("paper_tables/hurwitz/i={i},j={j}"), params, move || {
            let c = build_c(i, j)?;
            let dets = hurwitz_determinants_symbolic(&c.poly)?.determinants;
            Ok(match dets.iter().zip(&expected_dets).position(|(a, b)| a != b) {
                _ if dets.len() < expected_dets.len() => Outcome::Fail(json!({
                    "reason": "too few determinants",
                    "count": dets.len(),
                })),
                None => Outcome::Pass(None),
                Some(k) => Outcome::Fail(json!({
                    "k": k + 1,
                    "computed": dets[k].render(),
                    "expected": expected_dets[k].render(),
                })),
            })
        }));
    }
    jobs.push(job("paper_tables/hurwitz/C06_delta4_quintic_positive".into(), vec![], || {
        let quintic = QPoly::from_ints(tables::C06_QUINTIC);
        let ok = q_positive_on_positive_reals(&quintic)?;
        Ok(outcome(ok, || json!({"polynomial": quintic.render()})))
    }));
    jobs
}

fn k4_roots(poly: &XPoly, printed: &[f64]) -> Result<Outcome> {
    let width = rat(1, 1_000_000);
    let iso = isolate_roots_with_width(poly, &width)?;
    let found: Vec<f64> = iso
        .intervals
        .iter()
        .flat_map(|iv| std::iter::repeat(to_f64(&iv.midpoint())).take(iv.multiplicity))
        .collect();
    let mut sorted = printed.to_vec();
    sorted.sort_by(f64::total_cmp);
    let close = |got: f64, want: f64| {
        if want == 0.0 {
            got.abs() <= 1e-6
        } else {
            (got - want).abs() <= ROOT_RELATIVE_TOLERANCE * want.abs()
        }
    };
    let ok = found.len() == sorted.len() && found.iter().zip(&sorted).all(|(&g, &w)| close(g, w));
    Ok(outcome(ok, || json!({"isolated": found, "printed": sorted, "intervals": iso})))
}

// ---------------------------------------------------------------- oracles

fn oracle_jobs(max_n: usize, cap: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 2..=max_n {
        jobs.push(job(format!("oracles/Tq/n={n}"), n_param(n), move || {
            Ok(compare_any(AnyPoly::QX(assemble_tq(n)?), brute(BruteFamily::Tq, n, cap)?))
        }));
        jobs.push(job(format!("oracles/Dq/n={n}"), n_param(n), move || {
            Ok(compare_any(AnyPoly::QX(assemble_dq(n)?), brute(BruteFamily::Dq, n, cap)?))
        }));
        jobs.push(job(format!("oracles/tildeD/n={n}"), n_param(n), move || {
            Ok(compare_any(AnyPoly::X(assemble_tilde_d(n)?), brute(BruteFamily::TildeD, n, cap)?))
        }));
        jobs.push(job(format!("oracles/tildeB/n={n}"), n_param(n), move || {
            Ok(compare_any(AnyPoly::X(assemble_tilde_b(n)?), brute(BruteFamily::TildeB, n, cap)?))
        }));
        jobs.push(job(format!("oracles/A/n={n}"), n_param(n), move || {
            Ok(compare_any(AnyPoly::X(assemble_a(n)?), brute(BruteFamily::A, n, cap)?))
        }));
        jobs.push(job(format!("oracles/brute_Tq_factor/n={n}"), n_param(n), move || {
            let tq = brute(BruteFamily::Tq, n, cap)?;
            let dq = brute(BruteFamily::Dq, n, cap)?;
            let scaled = AnyPoly::QX(dq.as_qx().expect("Dq is bivariate").scale_q(&QPoly::one_plus_q()));
            Ok(compare_any(scaled, tq))
        }));
        jobs.push(job(format!("oracles/refined_Tq/n={n}"), n_param(n), move || {
            let rec: Vec<AnyPoly> = refined_tq(n)?.polys.into_iter().map(AnyPoly::QX).collect();
            let bf: Vec<AnyPoly> =
                (0..2 * n).map(|i| brute(BruteFamily::RefinedTq(i), n, cap)).collect::<Result<_>>()?;
            Ok(compare_families(&rec, &bf))
        }));
        if n >= 3 {
            jobs.push(job(format!("oracles/refined_tildeT/n={n}"), n_param(n), move || {
                let rec: Vec<AnyPoly> = refined_affine_t(n)?.polys.into_iter().map(AnyPoly::X).collect();
                let bf: Vec<AnyPoly> = (0..2 * n)
                    .map(|i| brute(BruteFamily::RefinedTildeT(i), n, cap))
                    .collect::<Result<_>>()?;
                Ok(compare_families(&rec, &bf))
            }));
            jobs.push(job(format!("oracles/tildeT_sum/n={n}"), n_param(n), move || {
                let fam = refined_affine_t(n)?.polys;
                let total: XPoly = fam.iter().sum();
                let lower: XPoly = fam[..n].iter().sum();
                let lhs = vec![AnyPoly::X(total), AnyPoly::X(lower)];
                let rhs = vec![brute(BruteFamily::TildeTViaB, n, cap)?, brute(BruteFamily::TildeD, n, cap)?];
                Ok(compare_families(&lhs, &rhs))
            }));
        }
        jobs.push(job(format!("oracles/psi/n={n}"), n_param(n), move || psi_properties(n, cap)));
        jobs.push(job(format!("oracles/psi_affine_threshold/n={n}"), n_param(n), move || {
            affine_threshold_note(n, cap)
        }));
    }
    jobs
}

/// Round trip, sign/excedance correspondence, type D descents against ascents, the
/// zero-position condition, and the affine statistic, over all of `B_n`.
fn psi_properties(n: usize, cap: usize) -> Result<Outcome> {
    let mut count = 0usize;
    for sigma in signed_perms(n, cap)? {
        count += 1;
        let e = psi(&sigma);
        let fail = |property: &str| {
            Ok(Outcome::Fail(json!({
                "property": property,
                "sigma": sigma.to_string(),
                "e": e.entries(),
            })))
        };
        if InvSeq::new(e.entries().to_vec()).is_err() {
            return fail("image is an inversion sequence");
        }
        if psi_inverse(&e) != sigma {
            return fail("round trip");
        }
        let s = sigma.entries();
        if (0..n).any(|k| (s[k] < 0) != (e.entries()[k] as usize > k)) {
            return fail("negative entries match large sequence entries");
        }
        let st = stats(&sigma)?;
        let it = inv_stats(&e)?;
        if st.neg as u32 != it.exc {
            return fail("neg equals exc");
        }
        if st.des_d as u32 != it.asc_d {
            return fail("type D descents equal ascents");
        }
        let v = e.entries();
        if (s[0] + s[1] < 0) != (2 * v[0] + v[1] >= 3) {
            return fail("zero-position condition");
        }
        if st.affine_des_d as u32 != it.affine_asc_d {
            return fail("affine descents equal affine ascents");
        }
    }
    let expected = (1usize << n) * (1..=n).product::<usize>();
    Ok(outcome(count == expected, || json!({"reason": "enumeration size", "count": count, "expected": expected})))
}

/// Passes when the `(2n-1)/n` affine threshold agrees with the descent side everywhere,
/// and records the first permutation on which the `(n-1)/n` reading disagrees.
fn affine_threshold_note(n: usize, cap: usize) -> Result<Outcome> {
    let mut alt_witness = None;
    for sigma in signed_perms(n, cap)? {
        let e = psi(&sigma);
        let st = stats(&sigma)?;
        let it = inv_stats(&e)?;
        if st.affine_des_d as u32 != it.affine_asc_d {
            return Ok(Outcome::Fail(json!({
                "threshold": "(2n-1)/n",
                "sigma": sigma.to_string(),
                "e": e.entries(),
                "affine_des_D": st.affine_des_d,
                "affine_asc_D": it.affine_asc_d,
            })));
        }
        if alt_witness.is_none() {
            let v = e.entries();
            let alt = it.asc_d + u32::from(affine_tail_holds_alt(v[n - 2] as u64, v[n - 1] as u64, n as u64));
            if alt != st.affine_des_d as u32 {
                alt_witness = Some(json!({
                    "adopted_threshold": "(2n-1)/n",
                    "rejected_threshold": "(n-1)/n",
                    "sigma": sigma.to_string(),
                    "e": v,
                    "affine_des_D": st.affine_des_d,
                    "affine_asc_D_with_rejected_threshold": alt,
                }));
            }
        }
    }
    Ok(Outcome::Pass(alt_witness))
}

// ---------------------------------------------------------------- identities

fn identity_jobs(max_n: usize, cap: usize) -> Vec<Job> {
    let mut jobs = Vec::new();
    for id in Identity::ALL {
        for n in id.min_n()..=max_n {
            let check_id = format!("identities/{}/n={n}", id.name());
            jobs.push(job(check_id, n_param(n), move || {
                if id == Identity::Stembridge && n > STEMBRIDGE_MAX_N {
                    return Ok(Outcome::Skip(format!(
                        "stembridge needs B_n by enumeration and is checked up to n = {STEMBRIDGE_MAX_N}"
                    )));
                }
                Ok(from_entry(check_identity(id, n, cap)?))
            }));
        }
    }
    jobs
}

// ---------------------------------------------------------------- interlacing

fn certify(fs: &[XPoly]) -> Result<Outcome> {
    let m = mutually_interlacing(fs)?;
    Ok(match m.first_failure {
        None => Outcome::Pass(None),
        Some((i, j)) => Outcome::Fail(json!({
            "pair": [i, j],
            "g": fs[i].to_string(),
            "f": fs[j].to_string(),
        })),
    })
}

/// Every member is certified real-rooted by a Sturm count, nonnegative and log-concave.
fn log_concave_members(fs: &[XPoly]) -> Result<Outcome> {
    for (i, p) in fs.iter().enumerate() {
        if !is_real_rooted(p)? {
            return Ok(Outcome::Fail(json!({"index": i, "poly": p.to_string(), "reason": "not real-rooted"})));
        }
        let props = coeff_props(p);
        if !(props.nonnegative && props.log_concave) {
            return Ok(Outcome::Fail(json!({"index": i, "poly": p.to_string(), "properties": props})));
        }
    }
    Ok(Outcome::Pass(None))
}

fn t_at(n: usize, q: &Rational) -> Result<Vec<XPoly>> {
    Ok(refined_tq(n)?.eval_q(q).polys)
}

fn interlacing_jobs(max_n: usize, qs: &[Rational]) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 4..=max_n {
        jobs.push(job(format!("interlacing/T/n={n}"), n_param(n), move || certify(&refined_t(n)?.polys)));
        jobs.push(job(format!("interlacing/K/n={n}"), n_param(n), move || {
            certify(&refined_k(n, KMethod::Direct)?.polys)
        }));
        jobs.push(job(format!("interlacing/log_concave/T/n={n}"), n_param(n), move || {
            log_concave_members(&refined_t(n)?.polys)
        }));
        jobs.push(job(format!("interlacing/log_concave/K/n={n}"), n_param(n), move || {
            log_concave_members(&refined_k(n, KMethod::Direct)?.polys)
        }));
        for q in qs {
            let label = q_label(q);
            let q1 = q.clone();
            jobs.push(job(format!("interlacing/Tq/n={n}/q={label}"), nq_params(n, q), move || {
                certify(&t_at(n, &q1)?)
            }));
            let q2 = q.clone();
            jobs.push(job(format!("interlacing/log_concave/Tq/n={n}/q={label}"), nq_params(n, q), move || {
                log_concave_members(&t_at(n, &q2)?)
            }));
            let q3 = q.clone();
            jobs.push(job(format!("interlacing/Dq_real_rooted/n={n}/q={label}"), nq_params(n, q), move || {
                let p = assemble_dq(n)?.eval_q(&q3);
                let ok = is_real_rooted(&p)? && coeff_props(&p).log_concave;
                Ok(outcome(ok, || json!({"poly": p.to_string()})))
            }));
        }
        jobs.push(job(format!("interlacing/tildeD_real_rooted/n={n}"), n_param(n), move || {
            let p = assemble_tilde_d(n)?;
            let ok = is_real_rooted(&p)? && coeff_props(&p).log_concave;
            Ok(outcome(ok, || json!({"poly": p.to_string()})))
        }));
    }
    // the input family must itself be certified, which starts at rank 4
    for n in 5..=max_n {
        jobs.push(job(format!("interlacing/transform/n={n}"), n_param(n), move || {
            let input = refined_t(n - 1)?.polys;
            if let Outcome::Fail(w) = certify(&input)? {
                return Ok(Outcome::Fail(json!({"reason": "input is not certified", "input": w})));
            }
            let out = interlacing_transform(&input, &TransformSpec::for_recurrence(n)?)?;
            let expected = refined_t(n)?.polys;
            if out != expected {
                let lhs: Vec<AnyPoly> = out.into_iter().map(AnyPoly::X).collect();
                let rhs: Vec<AnyPoly> = expected.into_iter().map(AnyPoly::X).collect();
                return Ok(compare_families(&lhs, &rhs));
            }
            certify(&out)
        }));
    }
    for n in 3..max_n {
        jobs.push(job(format!("interlacing/weighted/n={n}"), n_param(n), move || weighted_check(n)));
    }
    for n in 2..=max_n {
        jobs.push(job(format!("interlacing/coeff_props/tildeD/n={n}"), n_param(n), move || {
            symmetric_unimodal(&assemble_tilde_d(n)?)
        }));
        jobs.push(job(format!("interlacing/coeff_props/tildeB/n={n}"), n_param(n), move || {
            symmetric_unimodal(&assemble_tilde_b(n)?)
        }));
    }
    for n in 3..=max_n {
        jobs.push(job(format!("interlacing/fisk_nx/n={n}"), n_param(n), move || {
            let check = fisk_nx_check(&NXMatrix::t_recurrence(n)?);
            Ok(outcome(check.holds, || json!({"violation": check.violation})))
        }));
    }
    jobs
}

/// With `f_i = K_{n,n+i}` and weights `a_i = n - i`, `b_i = i + 1`, checks `F_a ⪯ F_b`
/// and that `x F_a + F_b` is the type D affine polynomial at rank `n + 1`.
fn weighted_check(n: usize) -> Result<Outcome> {
    let fs = refined_k(n, KMethod::Direct)?.polys[n..].to_vec();
    let a: Vec<i64> = (0..n).map(|i| (n - i) as i64).collect();
    let b: Vec<i64> = (0..n).map(|i| (i + 1) as i64).collect();
    let (fa, fb) = weighted_combination(&fs, &WeightedComboSpec::from_ints(&a, &b)?)?;
    let v = interlaces(&fa, &fb)?;
    if !v.relation.holds_weakly() {
        return Ok(Outcome::Fail(json!({"F_a": fa.to_string(), "F_b": fb.to_string(), "verdict": v.relation})));
    }
    let combined = &fa.mul_x_pow(1) + &fb;
    let tilde_d = assemble_tilde_d(n + 1)?;
    Ok(outcome(combined == tilde_d, || x_diff(&combined, &tilde_d)))
}

fn symmetric_unimodal(p: &XPoly) -> Result<Outcome> {
    let props = coeff_props(p);
    Ok(outcome(props.symmetric && props.unimodal, || json!({"poly": p.to_string(), "properties": props})))
}

// ---------------------------------------------------------------- stability

fn stability_jobs(max_n: usize, qs: &[Rational]) -> Vec<Job> {
    let mut jobs = Vec::new();
    for (i, j) in c_pairs() {
        let params = vec![("i", json!(i)), ("j", json!(j))];
        jobs.push(job(format!("stability/C_positive/i={i},j={j}"), params, move || {
            let c = build_c(i, j)?;
            let dets = hurwitz_determinants_symbolic(&c.poly)?.determinants;
            for (k, d) in dets.iter().enumerate() {
                if d.is_zero() || !q_positive_on_positive_reals_except_one(d)? {
                    return Ok(Outcome::Fail(json!({"k": k + 1, "determinant": d.render()})));
                }
            }
            Ok(Outcome::Pass(None))
        }));
        for q in qs {
            let q = q.clone();
            let label = q_label(&q);
            let params = vec![("i", json!(i)), ("j", json!(j)), ("q", json!(label.clone()))];
            jobs.push(job(format!("stability/C_numeric/i={i},j={j}/q={label}"), params, move || {
                let c = build_c(i, j)?;
                let symbolic = hurwitz_determinants_symbolic(&c.poly)?.determinants;
                let numeric = hurwitz_determinants(&c.poly.eval_q(&q))?;
                let evaluated: Vec<Rational> = symbolic.iter().map(|d| d.eval(&q)).collect();
                if evaluated != numeric.determinants {
                    return Ok(Outcome::Fail(json!({"reason": "symbolic and numeric determinants differ"})));
                }
                let verdict = numeric.verdict;
                let ok = verdict == Some(StabilityVerdict::HurwitzStable)
                    || (q.is_one() && verdict == Some(StabilityVerdict::Boundary));
                Ok(outcome(ok, || json!({"verdict": verdict, "report": numeric})))
            }));
        }
    }
    let top = max_n.min(6);
    for n in 2..=top {
        jobs.push(job(format!("stability/agreement/T/n={n}"), n_param(n), move || agreement(&refined_t(n)?.polys)));
        for q in qs {
            let q = q.clone();
            let label = q_label(&q);
            jobs.push(job(format!("stability/agreement/Tq/n={n}/q={label}"), nq_params(n, &q), move || {
                agreement(&t_at(n, &q)?)
            }));
        }
    }
    for n in 3..=top {
        jobs.push(job(format!("stability/agreement/K/n={n}"), n_param(n), move || {
            agreement(&refined_k(n, KMethod::Direct)?.polys)
        }));
    }
    jobs
}

/// Both interlacing deciders agree on every ordered pair of distinct members.
fn agreement(fs: &[XPoly]) -> Result<Outcome> {
    let pairs: Vec<(usize, usize)> =
        (0..fs.len()).flat_map(|i| (0..fs.len()).filter(move |&j| j != i).map(move |j| (i, j))).collect();
    let mismatch = pairs
        .par_iter()
        .map(|&(i, j)| -> Result<Option<Value>> {
            let by_roots = interlaces(&fs[i], &fs[j])?.relation;
            let by_stability = interlace_via_stability(&fs[i], &fs[j])?.relation;
            Ok((by_roots != by_stability).then(|| {
                json!({
                    "pair": [i, j],
                    "g": fs[i].to_string(),
                    "f": fs[j].to_string(),
                    "root_isolation": by_roots,
                    "hurwitz": by_stability,
                })
            }))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .next();
    Ok(match mismatch {
        None => Outcome::Pass(Some(json!({"pairs": pairs.len()}))),
        Some(w) => Outcome::Fail(w),
    })
}
