//! EC-polynomial commands.

use std::collections::BTreeMap;
use std::sync::Arc;
use std::time::Instant;

use ec_core::ecpoly::{check_symmetry, ec_poly_progress, ECPolynomial, SymmetryVerdict};
use ec_core::symfunc::{expand_with, sign_coherency, Basis, CoherencyVerdict, SignClass, SymExpansion};
use ec_core::Error;
use serde::Serialize;
use serde_json::{json, Value};

use crate::report::{to_csv, to_json, CheckRecord, Status, VerificationReport};
use crate::{Failure, Format, Rendered, Settings};

/// Largest `n` accepted without `--force`.
pub const MAX_N: usize = 8;

fn check_range(min_n: usize, max_n: usize, s: &Settings) -> Result<(), Failure> {
    if min_n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    if min_n > max_n {
        return Err(Failure::Usage(format!("--min-n {min_n} exceeds --max-n {max_n}")));
    }
    if max_n > MAX_N && !s.force {
        return Err(Failure::Usage(format!(
            "n = {max_n} is beyond the practical ceiling {MAX_N} (Bell({max_n}) set partitions); pass --force to run anyway"
        )));
    }
    Ok(())
}

/// Builds `EC_n`, printing progress to standard error for the slow cases.
fn build(n: usize, s: &Settings) -> Result<ECPolynomial, Error> {
    let show = !s.quiet && n >= 7;
    let p = ec_poly_progress(n, s.exec, &|done, total| {
        if show {
            eprint!("\rEC_{n}: {done}/{total} set partitions");
            if done == total {
                eprintln!();
            }
        }
    })?;
    Ok(p)
}

fn build_all(min_n: usize, max_n: usize, s: &Settings) -> BTreeMap<usize, Result<Arc<ECPolynomial>, Error>> {
    (min_n..=max_n).map(|n| (n, build(n, s).map(Arc::new))).collect()
}

fn timed<T>(s: &Settings, f: impl FnOnce() -> T) -> (T, Option<f64>) {
    let start = Instant::now();
    let v = f();
    (v, s.timings.then(|| start.elapsed().as_secs_f64() * 1e3))
}

#[derive(Serialize)]
struct ExpansionEntry {
    partition: Vec<u32>,
    coeff: String,
    sign: &'static str,
}

#[derive(Serialize)]
struct ParityMapJson {
    even: Option<&'static str>,
    odd: Option<&'static str>,
}

#[derive(Serialize)]
struct VerdictJson {
    coherent: bool,
    parity_map: ParityMapJson,
}

#[derive(Serialize)]
struct ExpansionJson {
    n: usize,
    basis: &'static str,
    entries: Vec<ExpansionEntry>,
    verdict: VerdictJson,
}

fn expansion_json(n: usize, exp: &SymExpansion, v: &CoherencyVerdict) -> ExpansionJson {
    ExpansionJson {
        n,
        basis: exp.basis.name(),
        entries: exp
            .coeffs
            .iter()
            .map(|(l, c)| ExpansionEntry {
                partition: l.parts().to_vec(),
                coeff: c.to_string(),
                sign: SignClass::of(c).as_str(),
            })
            .collect(),
        verdict: VerdictJson {
            coherent: v.coherent,
            parity_map: ParityMapJson {
                even: v.parity_map.even.map(|s| s.as_str()),
                odd: v.parity_map.odd.map(|s| s.as_str()),
            },
        },
    }
}

fn render_expansion(n: usize, exp: &SymExpansion, v: &CoherencyVerdict, format: Format) -> String {
    let doc = expansion_json(n, exp, v);
    match format {
        Format::Json => to_json(&doc),
        Format::Csv => {
            let mut rows = vec![vec!["partition".into(), "coeff".into(), "sign".into()]];
            rows.extend(doc.entries.iter().map(|e| {
                let p: Vec<String> = e.partition.iter().map(u32::to_string).collect();
                vec![p.join(" "), e.coeff.clone(), e.sign.into()]
            }));
            to_csv(rows)
        }
        Format::Text => {
            let sym = exp.basis.symbol();
            let mut out = String::new();
            for (l, c) in &exp.coeffs {
                out.push_str(&format!("{sym}{l}: {c}\n"));
            }
            out
        }
    }
}

pub fn compute(n: usize, basis: Option<Basis>, s: &Settings) -> Result<Rendered, Failure> {
    check_range(n, n, s)?;
    let ec = build(n, s)?;
    if let Some(b) = basis {
        let exp = expand_with(ec.poly(), b, s.exec)?;
        let v = sign_coherency(&exp);
        return Ok(Rendered {
            body: render_expansion(n, &exp, &v, s.format),
            ok: true,
        });
    }
    let text = ec.to_string();
    let body = match s.format {
        Format::Text => format!("{text}\n"),
        Format::Json => to_json(&json!({ "n": n, "ec": text })),
        Format::Csv => to_csv(vec![vec!["n".into(), "ec".into()], vec![n.to_string(), text]]),
    };
    Ok(Rendered { body, ok: true })
}

pub fn expand(n: usize, basis: Basis, s: &Settings) -> Result<Rendered, Failure> {
    check_range(n, n, s)?;
    let ec = build(n, s)?;
    let exp = expand_with(ec.poly(), basis, s.exec)?;
    let v = sign_coherency(&exp);
    Ok(Rendered {
        body: render_expansion(n, &exp, &v, s.format),
        ok: true,
    })
}

fn range_config(min_n: usize, max_n: usize) -> Value {
    json!({ "min_n": min_n, "max_n": max_n })
}

fn finish(report: VerificationReport, s: &Settings) -> Rendered {
    Rendered {
        body: report.render(s.format),
        ok: report.passed(),
    }
}

fn error_record(id: String, n: usize, e: &Error) -> CheckRecord {
    CheckRecord::new(
        id,
        json!({ "n": n }),
        Status::Fail,
        json!({ "error": e.to_string() }),
    )
}

pub fn verify_symmetry(min_n: usize, max_n: usize, s: &Settings) -> Result<Rendered, Failure> {
    check_range(min_n, max_n, s)?;
    let mut report = VerificationReport::new("verify-symmetry", range_config(min_n, max_n));
    for n in min_n..=max_n {
        let id = format!("symmetry/n={n}");
        let (res, wall) = timed(s, || build(n, s).map(|ec| check_symmetry(ec.poly())));
        let mut rec = match res {
            Ok(SymmetryVerdict::Symmetric) => {
                CheckRecord::new(id, json!({ "n": n }), Status::Pass, Value::Null)
            }
            Ok(SymmetryVerdict::Counterexample { transposition: i }) => CheckRecord::new(
                id,
                json!({ "n": n }),
                Status::Fail,
                json!({ "transposition": format!("z{i} <-> z{}", i + 1) }),
            ),
            Err(e) => error_record(id, n, &e),
        };
        rec.wall_ms = wall;
        report.push(rec);
    }
    Ok(finish(report, s))
}

pub fn verify_integrality(min_n: usize, max_n: usize, s: &Settings) -> Result<Rendered, Failure> {
    check_range(min_n, max_n, s)?;
    let mut report = VerificationReport::new("verify-integrality", range_config(min_n, max_n));
    for n in min_n..=max_n {
        let id = format!("integrality/n={n}");
        let (res, wall) = timed(s, || build(n, s));
        let mut rec = match res {
            Ok(ec) if ec.poly().is_integral() => CheckRecord::new(
                id,
                json!({ "n": n }),
                Status::Pass,
                json!({ "terms": ec.poly().len() }),
            ),
            Ok(_) => CheckRecord::new(
                id,
                json!({ "n": n }),
                Status::Fail,
                json!({ "error": "non-integral coefficient" }),
            ),
            Err(Error::IntegralityViolation { term, coeff, .. }) => CheckRecord::new(
                id,
                json!({ "n": n }),
                Status::Fail,
                json!({ "term": term, "coeff": coeff }),
            ),
            Err(e) => error_record(id, n, &e),
        };
        rec.wall_ms = wall;
        report.push(rec);
    }
    Ok(finish(report, s))
}

fn parity_json(v: &CoherencyVerdict) -> Value {
    json!({
        "even": v.parity_map.even.map(|s| s.as_str()),
        "odd": v.parity_map.odd.map(|s| s.as_str()),
    })
}

pub fn verify_coherency(
    min_n: usize,
    max_n: usize,
    bases: &[Basis],
    s: &Settings,
) -> Result<Rendered, Failure> {
    check_range(min_n, max_n, s)?;
    let mut bases = bases.to_vec();
    bases.sort();
    bases.dedup();
    let names: Vec<&str> = bases.iter().map(|b| b.name()).collect();
    let mut config = range_config(min_n, max_n);
    config["bases"] = json!(names);
    let mut report = VerificationReport::new("verify-coherency", config);
    for (n, ec) in build_all(min_n, max_n, s) {
        let ec = match ec {
            Ok(ec) => ec,
            Err(e) => {
                report.push(error_record(format!("coherency/n={n}"), n, &e));
                continue;
            }
        };
        let mut maps = Vec::new();
        for &b in &bases {
            let id = format!("coherency/n={n}/{}", b.name());
            let inputs = json!({ "n": n, "basis": b.name() });
            let (res, wall) = timed(s, || {
                expand_with(ec.poly(), b, s.exec).map(|e| sign_coherency(&e))
            });
            let mut rec = match res {
                Err(e) => CheckRecord::new(id, inputs, Status::Fail, json!({ "error": e.to_string() })),
                Ok(v) => {
                    let parity = parity_json(&v);
                    maps.push((b, parity.clone()));
                    if let Some(w) = &v.violation {
                        CheckRecord::new(
                            id,
                            inputs,
                            Status::Fail,
                            json!({
                                "partition": w.partition.parts(),
                                "coeff": w.coeff.to_string(),
                                "reason": w.reason,
                                "parity_map": parity,
                            }),
                        )
                    } else if !v.parity_map.matches_alternating(n) {
                        CheckRecord::new(
                            id,
                            inputs,
                            Status::Fail,
                            json!({ "reason": "sign is not (-1)^(n - l)", "parity_map": parity }),
                        )
                    } else {
                        CheckRecord::new(id, inputs, Status::Pass, json!({ "parity_map": parity }))
                    }
                }
            };
            rec.wall_ms = wall;
            report.push(rec);
        }
        if maps.len() > 1 {
            let stable = maps.iter().all(|(_, m)| m == &maps[0].1);
            let witness: serde_json::Map<String, Value> =
                maps.into_iter().map(|(b, m)| (b.name().to_string(), m)).collect();
            report.push(CheckRecord::new(
                format!("coherency/n={n}/parity-stable"),
                json!({ "n": n }),
                if stable { Status::Pass } else { Status::Fail },
                Value::Object(witness),
            ));
        }
    }
    Ok(finish(report, s))
}
