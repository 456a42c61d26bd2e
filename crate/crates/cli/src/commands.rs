use felcheck_core::hilbert::{self, HilbertData};
use felcheck_core::random::SemigroupSampler;
use felcheck_core::universal;
use felcheck_core::verify::{self, Status, VerificationReport};
use felcheck_core::{Error, Rational, SemigroupSpec};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::golden;
use crate::render::{json_strings, rat, rat_list, record_text, report_json, Document};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;

pub struct Outcome {
    pub doc: Document,
    pub exit: i32,
    /// Lines for the diagnostic stream.
    pub warnings: Vec<String>,
}

impl Outcome {
    fn ok(doc: Document) -> Self {
        Outcome { doc, exit: EXIT_OK, warnings: Vec::new() }
    }
}

fn semigroup_json(spec: &SemigroupSpec) -> Value {
    json!(spec.generators())
}

pub fn invariants(spec: &SemigroupSpec, p_max: u32) -> Outcome {
    let gaps = spec.gaps();
    let g: Vec<String> = (0..=p_max).map(|r| gaps.power_sum(r).to_string()).collect();
    let stats = spec.stats(p_max as usize + 1);
    let gap_list: Vec<String> = gaps.gaps().iter().map(u64::to_string).collect();

    let mut doc = Document::new("invariants");
    doc.row("semigroup", vec![spec.to_string()])
        .row("m", vec![spec.m().to_string()])
        .row("pi", vec![spec.pi().to_string()])
        .row("gaps", gap_list)
        .row("frobenius", vec![gaps.frobenius().to_string()])
        .row("genus", vec![gaps.genus().to_string()])
        .row("G", g.clone())
        .row("sigma", rat_list(stats.sigmas()))
        .row("delta", rat_list(stats.deltas()));
    doc.field("semigroup", semigroup_json(spec))
        .field("m", json!(spec.m()))
        .field("pi", json!(spec.pi().to_string()))
        .field("gaps", json!(gaps.gaps()))
        .field("frobenius", json!(gaps.frobenius()))
        .field("genus", json!(gaps.genus()))
        .field("G", json!(g))
        .field("sigma", json_strings(stats.sigmas()))
        .field("delta", json_strings(stats.deltas()));
    Outcome::ok(doc)
}

pub fn hilbert(spec: &SemigroupSpec, p_max: u32) -> Result<Outcome, Error> {
    let h = HilbertData::new(spec, &spec.gaps())?;
    let m = spec.m() as u32;
    let c: Vec<Rational> = (0..=m + p_max).map(|r| h.syzygy_sum(r)).collect();
    let k: Vec<Rational> = (0..=p_max).map(|p| hilbert::k_invariant(spec, &h, p)).collect();

    let mut doc = Document::new("hilbert");
    doc.row("semigroup", vec![spec.to_string()])
        .row("Q", vec![h.numerator.to_string()])
        .row("Phi", vec![h.phi.to_string()])
        .row("P", vec![h.prod.to_string()]);
    for (r, v) in c.iter().enumerate() {
        doc.row(format!("C_{r}"), vec![rat(v)]);
    }
    for (p, v) in k.iter().enumerate() {
        doc.row(format!("K_{p}"), vec![rat(v)]);
    }
    doc.field("semigroup", semigroup_json(spec))
        .field("numerator", json!(h.numerator.to_string()))
        .field("phi", json!(h.phi.to_string()))
        .field("prod", json!(h.prod.to_string()))
        .field("C", json_strings(&c))
        .field("K", json_strings(&k));
    Ok(Outcome::ok(doc))
}

pub fn tn(n_max: usize, at: Option<&[Rational]>) -> Result<Outcome, Error> {
    let mut doc = Document::new("tn");
    let values: Vec<String> = match at {
        Some(x) => (0..=n_max)
            .map(|n| universal::t_numeric(x, n).map(|v| rat(&v)))
            .collect::<Result<_, _>>()?,
        None => universal::t_symbolic_table(n_max).iter().map(ToString::to_string).collect(),
    };
    for (n, v) in values.iter().enumerate() {
        doc.row(format!("T_{n}"), vec![v.clone()]);
    }
    doc.field("at", at.map_or(Value::Null, json_strings)).field("T", json!(values));
    Ok(Outcome::ok(doc))
}

pub struct VerifyPlan {
    pub semigroups: Vec<SemigroupSpec>,
    pub p_max: u32,
    /// Requested series order; `None` means `m + p_max + 2` per semigroup.
    pub order: Option<usize>,
    pub n_max: u32,
    pub samples: usize,
    pub seed: u64,
    pub verbose: bool,
}

pub fn verify(plan: &VerifyPlan) -> Result<Outcome, Error> {
    let mut warnings = Vec::new();
    let orders: Vec<usize> = plan
        .semigroups
        .iter()
        .map(|s| {
            let floor = s.m() + plan.p_max as usize;
            match plan.order {
                Some(o) if o < floor => {
                    warnings.push(format!("order {o} raised to {floor} for {s} (needs m + p_max)"));
                    floor
                }
                Some(o) => o,
                None => floor + 2,
            }
        })
        .collect();

    let mut reports: Vec<VerificationReport> = plan
        .semigroups
        .par_iter()
        .zip(orders.par_iter())
        .map(|(s, &o)| verify::verify_semigroup(s, plan.p_max, o))
        .collect::<Result<_, _>>()?;
    reports.push(verify::verify_companions(plan.n_max, plan.samples, plan.seed)?);
    verify::sort_reports(&mut reports);

    let count = |st: Status| reports.iter().map(|r| r.count(st)).sum::<usize>();
    let (pass, fail, skipped, disc) =
        (count(Status::Pass), count(Status::Fail), count(Status::Skipped), count(Status::Discrepancy));
    let ok = fail == 0;

    let mut doc = Document::new("verify");
    for r in &reports {
        let name = r.semigroup.as_ref().map_or("companions".to_string(), ToString::to_string);
        doc.row(
            name,
            vec![format!(
                "pass {} fail {} skipped {} discrepancy {}",
                r.count(Status::Pass),
                r.count(Status::Fail),
                r.count(Status::Skipped),
                r.count(Status::Discrepancy)
            )],
        );
        for c in r.checks.iter().filter(|c| plan.verbose || c.status != Status::Pass) {
            doc.row("  check", vec![record_text(c)]);
        }
    }
    doc.row("summary", vec![format!("pass {pass} fail {fail} skipped {skipped} discrepancy {disc}")])
        .row("verdict", vec![if ok { "PASS" } else { "FAIL" }]);
    doc.field("seed", json!(plan.seed))
        .field("p_max", json!(plan.p_max))
        .field("n_max", json!(plan.n_max))
        .field("samples", json!(plan.samples))
        .field("warnings", json!(warnings))
        .field("reports", Value::Array(reports.iter().map(report_json).collect()))
        .field(
            "summary",
            json!({"pass": pass, "fail": fail, "skipped": skipped, "discrepancy": disc, "all_passed": ok}),
        );
    Ok(Outcome { doc, exit: if ok { EXIT_OK } else { EXIT_FAILED }, warnings })
}

pub fn random_semigroups(m_max: usize, d_max: u64, count: usize, seed: u64) -> Vec<SemigroupSpec> {
    SemigroupSampler::new(m_max, d_max).sample_many(seed, count)
}

pub fn examples(p_max: u32) -> Result<Outcome, Error> {
    let mut doc = Document::new("examples");
    let mut objects = Vec::new();
    let mut exit = EXIT_OK;
    let mut warnings = Vec::new();
    for example in golden::worked_examples() {
        let computed = golden::compute(&example, p_max)?;
        let verdict = match golden::compare(&example, &computed) {
            Ok(()) => "PASS".to_string(),
            Err(field) => {
                exit = EXIT_FAILED;
                warnings.push(format!("{}: golden mismatch in field {field}", example.spec));
                format!("FAIL first differing field: {field}")
            }
        };
        doc.row(format!("{} gaps", example.spec), computed.gaps.iter().map(u64::to_string).collect())
            .row(format!("{} numerator", example.spec), vec![computed.numerator.to_string()])
            .row(format!("{} K", example.spec), rat_list(&computed.k))
            .row(format!("{} golden", example.spec), vec![verdict.clone()]);
        objects.push(json!({
            "semigroup": example.spec.generators(),
            "gaps": computed.gaps,
            "frobenius": computed.frobenius,
            "numerator": computed.numerator.to_string(),
            "C": json_strings(&computed.c),
            "K": json_strings(&computed.k),
            "fel_main_passed": computed.fel_main_passed,
            "golden": verdict,
        }));
    }
    doc.field("p_max", json!(p_max)).field("examples", Value::Array(objects));
    Ok(Outcome { doc, exit, warnings })
}
