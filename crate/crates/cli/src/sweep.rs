//! Randomized identity sweeps.

use ec_core::cluster::{binomial_identity_check, stfact_check};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::report::{CheckRecord, Status, VerificationReport};
use crate::{Failure, Rendered, Settings};

pub fn verify_identities(binomial: usize, series: usize, s: &Settings) -> Result<Rendered, Failure> {
    let mut report = VerificationReport::new(
        "verify-identities",
        json!({ "binomial_samples": binomial, "series_samples": series, "seed": s.seed }),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);

    let mut failures = Vec::new();
    for _ in 0..binomial {
        let m: i64 = rng.random_range(0..=8);
        let nn: i64 = rng.random_range(-5..=5);
        let c: i64 = rng.random_range(2..=4);
        let e1: i64 = rng.random_range(0..c);
        let e2: i64 = rng.random_range(0..=4);
        let inputs = json!({ "M": m, "N": nn, "c": c, "e1": e1, "e2": e2 });
        match binomial_identity_check(m, nn, c, e1, e2) {
            Ok(v) if v.equal => {}
            Ok(v) => failures.push((
                inputs,
                json!({ "lhs": v.lhs.to_string(), "rhs": v.rhs.to_string() }),
            )),
            Err(e) => failures.push((inputs, json!({ "error": e.to_string() }))),
        }
    }
    push_sweep(
        &mut report,
        "binomial-identity",
        binomial,
        json!({ "M": "0..=8", "N": "-5..=5", "c": "2..=4", "e1": "0..c", "e2": "0..=4" }),
        failures,
    );

    let mut failures = Vec::new();
    for _ in 0..series {
        let a: i64 = loop {
            let a = rng.random_range(-5..=5);
            if a != 0 {
                break a;
            }
        };
        let b: i64 = rng.random_range(-5..=5);
        let order: u32 = rng.random_range(1..=4);
        let trunc: u32 = rng.random_range(12..=20);
        let inputs = json!({ "A": a, "B": b, "order": order, "trunc": trunc });
        match stfact_check(a, b, order, trunc) {
            Ok(v) if v.equal => {}
            Ok(v) => {
                let witness = match v.mismatch {
                    Some((e, l, r)) => json!({ "exponent": e, "lhs": l.to_string(), "rhs": r.to_string() }),
                    None => Value::Null,
                };
                failures.push((inputs, witness));
            }
            Err(e) => failures.push((inputs, json!({ "error": e.to_string() }))),
        }
    }
    push_sweep(
        &mut report,
        "derivative-identity",
        series,
        json!({ "A": "-5..=5 without 0", "B": "-5..=5", "order": "1..=4", "trunc": "12..=20" }),
        failures,
    );

    Ok(Rendered {
        body: report.render(s.format),
        ok: report.passed(),
    })
}

/// One summary record per sweep, plus one record per failing tuple.
fn push_sweep(
    report: &mut VerificationReport,
    id: &str,
    samples: usize,
    ranges: Value,
    failures: Vec<(Value, Value)>,
) {
    let status = if failures.is_empty() {
        Status::Pass
    } else {
        Status::Fail
    };
    report.push(CheckRecord::new(
        id,
        json!({ "samples": samples, "ranges": ranges }),
        status,
        json!({ "failures": failures.len() }),
    ));
    for (i, (inputs, witness)) in failures.into_iter().enumerate() {
        report.push(CheckRecord::new(
            format!("{id}/failure-{i}"),
            inputs,
            Status::Fail,
            witness,
        ));
    }
}
