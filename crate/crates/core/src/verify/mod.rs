//! Randomized and symbolic checks of the neighbour machinery, with reports.

mod checks;
mod corpus;
mod shrink;

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::arith::RingSpec;
use crate::error::{Error, Result};
use checks::{Ctx, Family, Scope, COVERAGE, FAMILIES};

pub use corpus::{
    case_rng, monomials_up_to, random_codomain_map, random_coefficient, random_element, random_generator_multiple,
    random_matrix, random_nilpotent, random_pair, random_polynomial, random_weil, random_weil_algebra, WeilPattern,
};
pub use shrink::{restrict_pair, shrink_matrix, shrink_pair};

/// Rings the harness knows how to sample.
pub const SUPPORTED_RINGS: [RingSpec; 5] =
    [RingSpec::Rationals, RingSpec::Integers, RingSpec::Modular(2), RingSpec::Modular(3), RingSpec::Modular(5)];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    seed: u64,
    p_max: usize,
    n_max: usize,
    degree_bound: u32,
    #[serde(serialize_with = "ring_names")]
    rings: Vec<RingSpec>,
    case_count: usize,
    #[serde(skip)]
    timings: bool,
}

fn ring_names<S: serde::Serializer>(rings: &[RingSpec], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(rings.iter().map(|r| r.to_string()))
}

impl SuiteConfig {
    pub fn new(seed: u64) -> Self {
        SuiteConfig { seed, p_max: 2, n_max: 3, degree_bound: 3, rings: SUPPORTED_RINGS.to_vec(), case_count: 200, timings: false }
    }

    pub fn with_bounds(mut self, p_max: usize, n_max: usize, degree_bound: u32) -> Result<Self> {
        if p_max == 0 || n_max == 0 {
            return Err(Error::InvalidConfig(format!("p_max = {p_max} and n_max = {n_max} must both be at least 1")));
        }
        if degree_bound < 2 {
            return Err(Error::InvalidConfig(format!("degree bound {degree_bound} must be at least 2")));
        }
        self.p_max = p_max;
        self.n_max = n_max;
        self.degree_bound = degree_bound;
        Ok(self)
    }

    /// Keeps the given order, dropping repeats.
    pub fn with_rings(mut self, rings: &[RingSpec]) -> Result<Self> {
        let mut out = Vec::new();
        for r in rings {
            if !SUPPORTED_RINGS.contains(r) {
                return Err(Error::InvalidConfig(format!("ring {r} is not one of Q, Z, Z/2, Z/3, Z/5")));
            }
            if !out.contains(r) {
                out.push(*r);
            }
        }
        if out.is_empty() {
            return Err(Error::InvalidConfig("no rings selected".into()));
        }
        self.rings = out;
        Ok(self)
    }

    pub fn with_case_count(mut self, case_count: usize) -> Result<Self> {
        if case_count == 0 {
            return Err(Error::InvalidConfig("case_count must be at least 1".into()));
        }
        self.case_count = case_count;
        Ok(self)
    }

    /// Record elapsed milliseconds per check. Off by default so reports are reproducible.
    pub fn with_timings(mut self, on: bool) -> Self {
        self.timings = on;
        self
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn p_max(&self) -> usize {
        self.p_max
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn degree_bound(&self) -> u32 {
        self.degree_bound
    }

    pub fn rings(&self) -> &[RingSpec] {
        &self.rings
    }

    pub fn case_count(&self) -> usize {
        self.case_count
    }

    pub fn timings(&self) -> bool {
        self.timings
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig::new(0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckVerdict {
    Pass,
    Fail,
    Skipped,
    /// A disagreement that the theory predicts, e.g. when 2 is not a unit.
    ExpectedDivergence,
}

impl CheckVerdict {
    pub fn is_failure(self) -> bool {
        self == CheckVerdict::Fail
    }

    pub fn label(self) -> &'static str {
        match self {
            CheckVerdict::Pass => "PASS",
            CheckVerdict::Fail => "FAIL",
            CheckVerdict::Skipped => "SKIP",
            CheckVerdict::ExpectedDivergence => "DIVERGE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    /// What the check establishes.
    #[serde(rename = "paper_ref")]
    pub statement: String,
    pub params: BTreeMap<String, Value>,
    pub verdict: CheckVerdict,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
    pub ms: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct VerificationReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub config: Option<SuiteConfig>,
    pub checks: Vec<CheckRecord>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| !c.verdict.is_failure())
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| c.verdict.is_failure())
    }

    pub fn get(&self, id: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.id == id)
    }

    /// Records whose id is `family` or starts with `family/`.
    pub fn family<'a>(&'a self, family: &'a str) -> impl Iterator<Item = &'a CheckRecord> {
        self.checks.iter().filter(move |c| c.id == family || c.id.strip_prefix(family).is_some_and(|r| r.starts_with('/')))
    }
}

/// Names and statements of every registered family.
pub fn registry() -> Vec<(&'static str, &'static str)> {
    FAMILIES.iter().map(|f| (f.name, f.statement)).collect()
}

struct Job {
    id: String,
    family: &'static Family,
    ring: Option<RingSpec>,
    p: usize,
    n: usize,
}

fn ring_tag(r: RingSpec) -> String {
    r.to_string().replace('/', "")
}

fn expand(cfg: &SuiteConfig, family: &'static Family) -> Vec<Job> {
    let job = |ring: Option<RingSpec>, p: usize, n: usize| {
        let mut id = family.name.to_string();
        if let Some(r) = ring {
            id.push('/');
            id.push_str(&ring_tag(r));
        }
        if p > 0 {
            id.push_str(&format!("/p{p}"));
        }
        if n > 0 {
            id.push_str(&format!("/n{n}"));
        }
        Job { id, family, ring, p, n }
    };
    let all = cfg.rings.iter().copied();
    let fields: Vec<RingSpec> = cfg.rings.iter().copied().filter(RingSpec::is_field).collect();
    let mut jobs = Vec::new();
    match family.scope {
        Scope::Single => jobs.push(job(None, 0, 0)),
        Scope::PerRing => jobs.extend(all.map(|r| job(Some(r), 0, 0))),
        Scope::PerField => jobs.extend(fields.iter().map(|&r| job(Some(r), 0, 0))),
        Scope::PerFieldP => {
            for &r in &fields {
                jobs.extend((1..=cfg.p_max).map(|p| job(Some(r), p, 0)));
            }
        }
        Scope::PerFieldPN | Scope::PerRingPN => {
            let rings: Vec<RingSpec> = if family.scope == Scope::PerFieldPN { fields.clone() } else { all.collect() };
            for r in rings {
                for p in 1..=cfg.p_max {
                    jobs.extend((1..=cfg.n_max).map(|n| job(Some(r), p, n)));
                }
            }
        }
    }
    if jobs.is_empty() {
        // no field ring configured: keep the family visible
        jobs.push(job(None, 0, 0));
    }
    jobs
}

fn plan(cfg: &SuiteConfig, names: Option<&[&str]>) -> Vec<Job> {
    FAMILIES
        .iter()
        .filter(|f| names.is_none_or(|ns| ns.contains(&f.name)))
        .flat_map(|f| expand(cfg, f))
        .collect()
}

/// Ids `run_suite` will emit, sorted, including the coverage meta-check.
pub fn planned_checks(cfg: &SuiteConfig) -> Vec<String> {
    let mut ids: Vec<String> = plan(cfg, None).into_iter().map(|j| j.id).collect();
    ids.push(COVERAGE.to_string());
    ids.sort();
    ids
}

fn run_job(cfg: &SuiteConfig, job: &Job) -> CheckRecord {
    let mut params = BTreeMap::new();
    if let Some(r) = job.ring {
        params.insert("ring".to_string(), Value::from(r.to_string()));
    }
    if job.p > 0 {
        params.insert("p".to_string(), Value::from(job.p));
    }
    if job.n > 0 {
        params.insert("n".to_string(), Value::from(job.n));
    }
    let start = Instant::now();
    let scoped = matches!(job.family.scope, Scope::Single) || job.ring.is_some();
    let (verdict, witness) = if !scoped {
        (CheckVerdict::Skipped, Some("no field ring configured".to_string()))
    } else {
        let ctx = Ctx { cfg, ring: job.ring.unwrap_or(RingSpec::Rationals), p: job.p, n: job.n };
        match catch_unwind(AssertUnwindSafe(|| (job.family.run)(&ctx))) {
            Ok(Ok(out)) => {
                if !out.stats.is_empty() {
                    params.insert("counts".to_string(), Value::Object(out.stats.into_iter().collect()));
                }
                (out.verdict, out.witness)
            }
            Ok(Err(e)) => (CheckVerdict::Fail, Some(format!("error: {e}"))),
            Err(panic) => {
                let msg = panic
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_else(|| "unknown panic".into());
                (CheckVerdict::Fail, Some(format!("panic: {msg}")))
            }
        }
    };
    let ms = cfg.timings.then(|| start.elapsed().as_millis() as u64);
    CheckRecord { id: job.id.clone(), statement: job.family.statement.to_string(), params, verdict, witness, ms }
}

fn run_jobs(cfg: &SuiteConfig, jobs: Vec<Job>) -> Vec<CheckRecord> {
    let mut records: Vec<CheckRecord> = jobs.par_iter().map(|j| run_job(cfg, j)).collect();
    records.sort_by(|a, b| a.id.cmp(&b.id));
    records
}

fn coverage(cfg: &SuiteConfig, records: &[CheckRecord]) -> CheckRecord {
    let ids: Vec<&str> = records.iter().map(|r| r.id.as_str()).collect();
    let unique: BTreeSet<&str> = ids.iter().copied().collect();
    let planned: BTreeSet<String> = plan(cfg, None).into_iter().map(|j| j.id).collect();
    let executed: BTreeSet<String> = unique.iter().map(|s| s.to_string()).collect();
    let mut problems = Vec::new();
    if unique.len() != ids.len() {
        problems.push("duplicate check ids".to_string());
    }
    for missing in planned.difference(&executed) {
        problems.push(format!("missing {missing}"));
    }
    for extra in executed.difference(&planned) {
        problems.push(format!("unregistered {extra}"));
    }
    for f in FAMILIES {
        let present = ids.iter().any(|id| *id == f.name || id.starts_with(&format!("{}/", f.name)));
        if !present {
            problems.push(format!("family {} produced no check", f.name));
        }
    }
    let mut params = BTreeMap::new();
    params.insert("families".to_string(), Value::from(FAMILIES.len()));
    params.insert("checks".to_string(), Value::from(ids.len()));
    CheckRecord {
        id: COVERAGE.to_string(),
        statement: "every registered check runs exactly once".to_string(),
        params,
        verdict: if problems.is_empty() { CheckVerdict::Pass } else { CheckVerdict::Fail },
        witness: (!problems.is_empty()).then(|| problems.join("; ")),
        ms: cfg.timings.then_some(0),
    }
}

/// Runs every registered check. Failures become report entries.
pub fn run_suite(cfg: &SuiteConfig) -> VerificationReport {
    let mut checks = run_jobs(cfg, plan(cfg, None));
    let meta = coverage(cfg, &checks);
    let at = checks.partition_point(|c| c.id.as_str() < COVERAGE);
    checks.insert(at, meta);
    VerificationReport { config: Some(cfg.clone()), checks }
}

/// Runs the named families only; no coverage record.
pub fn run_families(cfg: &SuiteConfig, names: &[&str]) -> Result<VerificationReport> {
    if let Some(bad) = names.iter().find(|n| !FAMILIES.iter().any(|f| f.name == **n)) {
        return Err(Error::InvalidConfig(format!("unknown check family `{bad}`")));
    }
    Ok(VerificationReport { config: Some(cfg.clone()), checks: run_jobs(cfg, plan(cfg, Some(names))) })
}

/// Single-line JSON with `": "` and `", "` separators.
struct SpacedFormatter;

impl serde_json::ser::Formatter for SpacedFormatter {
    fn begin_array_value<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> std::io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_key<W: ?Sized + Write>(&mut self, w: &mut W, first: bool) -> std::io::Result<()> {
        if first {
            Ok(())
        } else {
            w.write_all(b", ")
        }
    }

    fn begin_object_value<W: ?Sized + Write>(&mut self, w: &mut W) -> std::io::Result<()> {
        w.write_all(b": ")
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Vec<u8> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, SpacedFormatter);
    value.serialize(&mut ser).expect("in-memory serialization");
    out
}

fn text_report(report: &VerificationReport) -> String {
    let mut s = String::new();
    if let Some(c) = &report.config {
        let rings: Vec<String> = c.rings.iter().map(|r| r.to_string()).collect();
        s.push_str(&format!(
            "seed {}  p_max {}  n_max {}  D {}  cases {}  rings {}\n",
            c.seed,
            c.p_max,
            c.n_max,
            c.degree_bound,
            c.case_count,
            rings.join(",")
        ));
    }
    for r in &report.checks {
        s.push_str(&format!("{:<7} {}  ({})", r.verdict.label(), r.id, r.statement));
        if let Some(ms) = r.ms {
            s.push_str(&format!("  {ms} ms"));
        }
        s.push('\n');
        if let Some(w) = &r.witness {
            s.push_str(&format!("        {w}\n"));
        }
    }
    let failed = report.failures().count();
    s.push_str(&format!("{} checks, {failed} failed\n", report.checks.len()));
    s
}

pub fn emit_report(report: &VerificationReport, format: &str) -> Result<Vec<u8>> {
    match format {
        "json" => Ok(to_json(report)),
        "text" => Ok(text_report(report).into_bytes()),
        other => Err(Error::UnknownFormat(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn config_validation() {
        assert!(matches!(SuiteConfig::new(1).with_case_count(0), Err(Error::InvalidConfig(_))));
        assert!(SuiteConfig::new(1).with_bounds(0, 1, 3).is_err());
        assert!(SuiteConfig::new(1).with_bounds(1, 1, 1).is_err());
        assert!(SuiteConfig::new(1).with_rings(&[RingSpec::Modular(7)]).is_err());
        let c = SuiteConfig::new(1).with_rings(&[RingSpec::Integers, RingSpec::Integers]).unwrap();
        assert_eq!(c.rings(), [RingSpec::Integers]);
    }

    #[test]
    fn report_formats() {
        let empty = VerificationReport::default();
        assert_eq!(emit_report(&empty, "json").unwrap(), br#"{"checks": []}"#);
        assert!(matches!(emit_report(&empty, "yaml"), Err(Error::UnknownFormat(_))));
        let rec = CheckRecord {
            id: "x/Q".into(),
            statement: "something holds".into(),
            params: BTreeMap::new(),
            verdict: CheckVerdict::Pass,
            witness: None,
            ms: None,
        };
        let one = VerificationReport { config: None, checks: vec![rec] };
        assert_eq!(
            String::from_utf8(emit_report(&one, "json").unwrap()).unwrap(),
            r#"{"checks": [{"id": "x/Q", "paper_ref": "something holds", "params": {}, "verdict": "pass", "ms": null}]}"#
        );
    }

    #[test]
    fn plan_ids() {
        let cfg = SuiteConfig::new(3).with_rings(&[RingSpec::Integers]).unwrap();
        let ids = planned_checks(&cfg);
        assert!(ids.contains(&"determinant".to_string()));
        assert!(ids.contains(&"extension/Z/p2/n3".to_string()));
        assert!(ids.contains(&"squares-counterexample".to_string()));
        let set: BTreeSet<&String> = ids.iter().collect();
        assert_eq!(set.len(), ids.len());
    }

    #[test]
    fn small_suite_over_two_rings() {
        let cfg = SuiteConfig::new(7)
            .with_rings(&[RingSpec::Rationals, RingSpec::Modular(2)])
            .unwrap()
            .with_case_count(12)
            .unwrap()
            .with_bounds(1, 2, 2)
            .unwrap();
        let report = run_suite(&cfg);
        let failed: Vec<String> = report.failures().map(|c| format!("{}: {:?}", c.id, c.witness)).collect();
        assert!(failed.is_empty(), "{failed:#?}");
        assert_eq!(report.get("square-zero/Z2").unwrap().verdict, CheckVerdict::ExpectedDivergence);
        assert_eq!(report.get("transposition/Z2/p1/n1").unwrap().verdict, CheckVerdict::Skipped);
        let ids: Vec<String> = report.checks.iter().map(|c| c.id.clone()).collect();
        assert_eq!(ids, planned_checks(&cfg));
    }
}
