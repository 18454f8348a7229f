use std::collections::BTreeMap;

use arsubcat::arsubcat::{
    check_tau_is_syzygy, classify_gp_census, gorenstein_profile, has_finite_projdim,
    is_gorenstein_projective, tag_gp_census, verify_ar_duality, DualityReport, GorensteinProfile,
    Subcategory,
};
use arsubcat::morphcat::{from_t2_module, is_self_injective};
use arsubcat::quivalg::{t2_of, T2Algebra};
use arsubcat::repmod::{
    decompose, is_indecomposable, is_isomorphic, is_projective, Representation, DEFAULT_BUDGET,
};
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use crate::manifest::Fixture;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    ArFull,
    ArGprj,
    ArPfin,
    GpCensus,
    TauSyzygy,
    All,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    ExpectedFail,
    Skip,
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub status: Status,
    pub detail: String,
    pub report: Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub manifest: String,
    pub seed: u64,
    pub passed: bool,
    pub results: Vec<SuiteResult>,
}

fn result(suite: &str, status: Status, detail: String, report: Value) -> SuiteResult {
    SuiteResult {
        suite: suite.into(),
        status,
        detail,
        report,
    }
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

/// Checks the indecomposable list and the Gorenstein profile against the
/// manifest.
fn check_fixture(fx: &Fixture, profile: &GorensteinProfile) -> Result<SuiteResult, CliError> {
    let list = fx.indecomposables();
    let mut problems = Vec::new();
    for (k, (n, m)) in list.iter().enumerate() {
        if !is_indecomposable(m, DEFAULT_BUDGET, 0) {
            problems.push(format!("{n} {:?} is decomposable", m.dims()));
        }
        for (n2, m2) in &list[..k] {
            if m.dims() == m2.dims() && is_isomorphic(m, m2)? {
                problems.push(format!("{n} ≅ {n2}"));
            }
        }
    }
    let e = &fx.manifest.expected;
    if let Some(c) = e.indecomposable_count {
        if c != list.len() {
            problems.push(format!(
                "{} indecomposables listed, {c} expected",
                list.len()
            ));
        }
    }
    if let Some(d) = e.gorenstein_d {
        if profile.d != Some(d) {
            problems.push(format!(
                "Gorenstein dimension {:?}, {d} expected",
                profile.d
            ));
        }
    }
    if let Some(si) = e.selfinjective {
        if profile.is_selfinjective != si {
            problems.push(format!(
                "self-injective = {}, {si} expected",
                profile.is_selfinjective
            ));
        }
    }
    let detail = format!(
        "{} indecomposables, d = {:?}, self-injective = {}",
        list.len(),
        profile.d,
        profile.is_selfinjective
    );
    let status = if problems.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    let detail = if problems.is_empty() {
        detail
    } else {
        format!("{detail}; {}", problems.join("; "))
    };
    Ok(result("fixture", status, detail, to_value(profile)))
}

fn duality_result(
    name: &str,
    report: DualityReport,
    expected: Option<bool>,
    skipped: usize,
) -> SuiteResult {
    let ok = report.passed();
    let mut detail = format!(
        "{} pairs checked, {skipped} skipped (projective X)",
        report.pairs.len()
    );
    let bad: Vec<String> = report
        .pairs
        .iter()
        .filter(|p| !p.equal)
        .map(|p| format!("({}, {}): {} != {}", p.x, p.y, p.lhs_dim, p.rhs_dim))
        .collect();
    if !bad.is_empty() {
        detail.push_str(&format!("; unequal {}", bad.join(", ")));
    }
    if !report.closure_violations.is_empty() {
        detail.push_str(&format!(
            "; translate leaves the list for {}",
            report.closure_violations.join(", ")
        ));
    }
    let status = match (ok, expected.unwrap_or(true)) {
        (true, true) => Status::Pass,
        (false, false) => Status::ExpectedFail,
        _ => Status::Fail,
    };
    result(name, status, detail, to_value(&report))
}

fn run_duality(
    name: &str,
    objects: Vec<(String, Representation)>,
    sub: Subcategory,
    profile: &GorensteinProfile,
    expected: Option<bool>,
) -> Result<SuiteResult, CliError> {
    let skipped = objects.iter().filter(|(_, m)| is_projective(m)).count() * objects.len();
    let report = verify_ar_duality(&objects, sub, profile)?;
    Ok(duality_result(name, report, expected, skipped))
}

fn gp_objects(
    fx: &Fixture,
    profile: &GorensteinProfile,
) -> Result<Vec<(String, Representation)>, CliError> {
    let mut out = Vec::new();
    for (n, m) in fx.indecomposables() {
        if is_gorenstein_projective(&m, profile)? {
            out.push((n, m));
        }
    }
    Ok(out)
}

fn suite_ar_gprj(fx: &Fixture, profile: &GorensteinProfile) -> Result<SuiteResult, CliError> {
    if !profile.is_d_gorenstein {
        return Ok(result(
            "ar-gprj",
            Status::Skip,
            "algebra not Gorenstein within cap".into(),
            Value::Null,
        ));
    }
    run_duality(
        "ar-gprj",
        gp_objects(fx, profile)?,
        Subcategory::Gprj,
        profile,
        fx.manifest.expected.ar_gprj,
    )
}

fn suite_ar_pfin(fx: &Fixture, profile: &GorensteinProfile) -> Result<SuiteResult, CliError> {
    if !matches!(profile.d, Some(d) if d <= 1) {
        return Ok(result(
            "ar-pfin",
            Status::Skip,
            format!("not 1-Gorenstein (d = {:?})", profile.d),
            Value::Null,
        ));
    }
    let objects: Vec<_> = fx
        .indecomposables()
        .into_iter()
        .filter(|(_, m)| has_finite_projdim(m, 1).is_some())
        .collect();
    run_duality(
        "ar-pfin",
        objects,
        Subcategory::Pfin,
        profile,
        fx.manifest.expected.ar_pfin,
    )
}

/// Distinct indecomposable summands of the `A` and `B` parts of `objects`.
fn base_summands(
    t2: &T2Algebra,
    objects: &[(String, Representation)],
) -> Result<Vec<Representation>, CliError> {
    let mut base: Vec<Representation> = Vec::new();
    for (_, m) in objects {
        let obj = from_t2_module(t2, m)?;
        for part in [obj.a(), obj.b()] {
            for s in decompose(part, DEFAULT_BUDGET, 0).modules() {
                let mut seen = false;
                for b in &base {
                    if b.dims() == s.dims() && is_isomorphic(b, &s)? {
                        seen = true;
                        break;
                    }
                }
                if !seen {
                    base.push(s);
                }
            }
        }
    }
    Ok(base)
}

fn suite_gp_census(fx: &Fixture) -> Result<SuiteResult, CliError> {
    let census = if let Some(t2) = fx.t2.as_ref().filter(|t| is_self_injective(&t.base)) {
        // the fixture lists H(Λ) itself: tag its GP members
        let t2_profile = gorenstein_profile(&t2.t2, fx.manifest.gorenstein_cap)?;
        let objects = fx.indecomposables();
        tag_gp_census(t2, &base_summands(t2, &objects)?, &objects, &t2_profile)?
    } else if is_self_injective(&fx.algebra) {
        let Some(cap) = fx.manifest.census_dim_cap.clone() else {
            return Ok(result(
                "gp-census",
                Status::Skip,
                "no census_dim_cap in manifest".into(),
                Value::Null,
            ));
        };
        let t2 = t2_of(&fx.algebra)?;
        let t2_profile = gorenstein_profile(&t2.t2, fx.manifest.gorenstein_cap)?;
        let base: Vec<_> = fx.indecomposables().into_iter().map(|(_, m)| m).collect();
        classify_gp_census(&t2, &base, &cap, &t2_profile)?
    } else {
        return Ok(result(
            "gp-census",
            Status::Skip,
            "algebra not self-injective".into(),
            Value::Null,
        ));
    };
    let counts: BTreeMap<String, usize> = census
        .counts
        .iter()
        .map(|(k, v)| (to_value(k).as_str().unwrap_or_default().to_string(), *v))
        .collect();
    let shown: Vec<String> = counts.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    let mut detail = format!("{} objects {{{}}}", census.total(), shown.join(", "));
    let status = match &fx.manifest.expected.gp_census {
        None => Status::Pass,
        Some(want) => {
            let tags = ["A_IDENTITY", "B_COSOCLE", "C_SYZYGY", "OTHER"];
            let diff: Vec<String> = tags
                .iter()
                .filter(|t| {
                    want.get(**t).copied().unwrap_or(0) != counts.get(**t).copied().unwrap_or(0)
                })
                .map(|t| format!("{t} expected {}", want.get(*t).copied().unwrap_or(0)))
                .collect();
            if diff.is_empty() {
                Status::Pass
            } else {
                detail.push_str(&format!("; {}", diff.join(", ")));
                Status::Fail
            }
        }
    };
    if status == Status::Fail || counts.contains_key("OTHER") {
        let others: Vec<String> = census
            .objects
            .iter()
            .filter(|o| o.tag == arsubcat::arsubcat::CensusTag::Other)
            .map(|o| format!("{} {:?}->{:?}", o.id, o.dims_a, o.dims_b))
            .collect();
        if !others.is_empty() {
            detail.push_str(&format!("; OTHER: {}", others.join(", ")));
        }
    }
    Ok(result("gp-census", status, detail, to_value(&census)))
}

fn suite_tau_syzygy(fx: &Fixture, profile: &GorensteinProfile) -> Result<SuiteResult, CliError> {
    if !profile.is_d_gorenstein {
        return Ok(result(
            "tau-syzygy",
            Status::Skip,
            "algebra not Gorenstein within cap".into(),
            Value::Null,
        ));
    }
    let report = check_tau_is_syzygy(&gp_objects(fx, profile)?, profile)?;
    let mut detail = format!("{} non-projective GP objects checked", report.checked);
    if !report.holds {
        let w: Vec<String> = report
            .witnesses
            .iter()
            .map(|w| {
                format!(
                    "{} {:?} (dim τ = {}, dim Ω = {})",
                    w.id, w.dims, w.tau_dim, w.syzygy_dim
                )
            })
            .collect();
        detail.push_str(&format!("; witnesses {}", w.join(", ")));
    }
    let status = match &fx.manifest.expected.tau_syzygy {
        None if report.holds => Status::Pass,
        None => Status::Fail,
        Some(want) if want.holds == report.holds => {
            let named: Vec<&String> = report.witnesses.iter().map(|w| &w.id).collect();
            if want.witnesses.iter().all(|w| named.contains(&w)) {
                if report.holds {
                    Status::Pass
                } else {
                    Status::ExpectedFail
                }
            } else {
                detail.push_str(&format!("; expected witnesses {:?}", want.witnesses));
                Status::Fail
            }
        }
        Some(want) => {
            detail.push_str(&format!("; expected holds = {}", want.holds));
            Status::Fail
        }
    };
    Ok(result("tau-syzygy", status, detail, to_value(&report)))
}

pub fn run_suites(fx: &Fixture, suite: Suite, seed: u64) -> Result<VerifyReport, CliError> {
    let profile = gorenstein_profile(&fx.algebra, fx.manifest.gorenstein_cap)?;
    let mut results = vec![check_fixture(fx, &profile)?];
    let want = |s: Suite| suite == Suite::All || suite == s;
    if want(Suite::ArFull) {
        results.push(run_duality(
            "ar-full",
            fx.indecomposables(),
            Subcategory::Full,
            &profile,
            fx.manifest.expected.ar_full,
        )?);
    }
    if want(Suite::ArGprj) {
        results.push(suite_ar_gprj(fx, &profile)?);
    }
    if want(Suite::ArPfin) {
        results.push(suite_ar_pfin(fx, &profile)?);
    }
    if want(Suite::GpCensus) {
        results.push(suite_gp_census(fx)?);
    }
    if want(Suite::TauSyzygy) {
        results.push(suite_tau_syzygy(fx, &profile)?);
    }
    let passed = results.iter().all(|r| r.status != Status::Fail);
    Ok(VerifyReport {
        manifest: fx.manifest.name.clone(),
        seed,
        passed,
        results,
    })
}

pub fn render_table(report: &VerifyReport) -> String {
    let mut out = format!("manifest {} (seed {})\n", report.manifest, report.seed);
    for r in &report.results {
        let status = match r.status {
            Status::Pass => "PASS".to_string(),
            Status::Fail => "FAIL".to_string(),
            Status::ExpectedFail => "FAIL (expected)".to_string(),
            Status::Skip => "SKIP".to_string(),
        };
        out.push_str(&format!("{:<11} {:<16} {}\n", r.suite, status, r.detail));
    }
    out.push_str(if report.passed {
        "result: PASS\n"
    } else {
        "result: FAIL\n"
    });
    out
}

pub fn report_json(report: &VerifyReport) -> String {
    serde_json::to_string_pretty(&json!(report)).expect("serializable") + "\n"
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_layout() {
        let report = VerifyReport {
            manifest: "m".into(),
            seed: 3,
            passed: true,
            results: vec![
                result("fixture", Status::Pass, "ok".into(), Value::Null),
                result("tau-syzygy", Status::ExpectedFail, "w".into(), Value::Null),
            ],
        };
        let t = render_table(&report);
        assert_eq!(
            t,
            "manifest m (seed 3)\nfixture     PASS             ok\ntau-syzygy  FAIL (expected)  w\nresult: PASS\n"
        );
        let v: Value = serde_json::from_str(&report_json(&report)).unwrap();
        assert_eq!(v["results"][1]["status"], "EXPECTED_FAIL");
    }
}
