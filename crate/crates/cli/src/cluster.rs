//! `ec cluster ...` commands.

use std::collections::{BTreeMap, BTreeSet};

use clap::{Subcommand, ValueEnum};
use ec_core::cluster::{
    chi_closed_form_table, cross_check, is_positive, nonnegativity_report_of, xvar_closed_form_with,
    xvar_recurrence, ClusterParams, CrossCheckOptions, CrossCheckReport, Region, RegionStats, Route,
};
use ec_core::ring::LaurentPoly2;
use ec_core::Error;
use serde::Serialize;
use serde_json::{json, Value};

use crate::report::{aligned, aligned_right, to_csv, to_json, CheckRecord, Status, VerificationReport};
use crate::{Failure, Format, Rendered, Settings};

/// Largest `n` accepted without `--force`; coefficients of `x_n` grow doubly
/// exponentially in `n`.
pub const MAX_N: i64 = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum XvarRoute {
    Recurrence,
    Closed,
}

fn route_arg(s: &str) -> Result<RouteSel, String> {
    if s == "all" {
        return Ok(RouteSel::All);
    }
    s.parse().map(RouteSel::One).map_err(|e: Error| e.to_string())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RouteSel {
    All,
    One(Route),
}

#[derive(Subcommand, Debug)]
pub enum ClusterCommand {
    /// Print the cluster variable x_n as a Laurent polynomial in x1, x2.
    Xvar {
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        c: i64,
        /// Exponent at odd steps; defaults to c. Only the recurrence handles b != c.
        #[arg(long)]
        b: Option<i64>,
        #[arg(long, value_enum, default_value = "recurrence")]
        route: XvarRoute,
    },
    /// Euler characteristics chi(Gr_(e1,e2)(M(n))) by one or more routes.
    Chi {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        c: i64,
        #[arg(long)]
        e1: Option<i64>,
        #[arg(long)]
        e2: Option<i64>,
        /// `all` or a comma-separated list of recurrence, closed, small_e1, expanded, bridge.
        #[arg(long, value_parser = route_arg, value_delimiter = ',', default_value = "all")]
        route: Vec<RouteSel>,
        /// Largest e2 for the bridge route.
        #[arg(long, default_value_t = 5)]
        bridge_max_e2: i64,
    },
    /// Compare every route on every cell for each (c, n).
    CrossCheck {
        /// Comma-separated values of c.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        c: Vec<i64>,
        #[arg(long, default_value_t = 3)]
        min_n: i64,
        #[arg(long, default_value_t = 7)]
        max_n: i64,
        #[arg(long, default_value_t = 5)]
        bridge_max_e2: i64,
    },
    /// Check chi >= 0 where e2 >= a_(n-3)/c and record the rest of the table.
    Nonnegativity {
        #[arg(long, value_delimiter = ',', default_value = "3,4")]
        c: Vec<i64>,
        #[arg(long, default_value_t = 3)]
        min_n: i64,
        #[arg(long, default_value_t = 7)]
        max_n: i64,
    },
}

pub fn run(cmd: ClusterCommand, s: &Settings) -> Result<Rendered, Failure> {
    match cmd {
        ClusterCommand::Xvar { n, c, b, route } => xvar(n, b.unwrap_or(c), c, route, s),
        ClusterCommand::Chi {
            n,
            c,
            e1,
            e2,
            route,
            bridge_max_e2,
        } => chi(n, c, (e1, e2), &route, bridge_max_e2, s),
        ClusterCommand::CrossCheck {
            c,
            min_n,
            max_n,
            bridge_max_e2,
        } => cross(&c, min_n, max_n, bridge_max_e2, s),
        ClusterCommand::Nonnegativity { c, min_n, max_n } => nonnegativity(&c, min_n, max_n, s),
    }
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn check_n(min_n: i64, max_n: i64, s: &Settings) -> Result<(), Failure> {
    if min_n < 3 {
        return Err(Failure::Usage(format!("n must be at least 3, got {min_n}")));
    }
    if min_n > max_n {
        return Err(Failure::Usage(format!("--min-n {min_n} exceeds --max-n {max_n}")));
    }
    if max_n > MAX_N && !s.force {
        return Err(Failure::Usage(format!(
            "n = {max_n} exceeds {MAX_N}; pass --force to run anyway"
        )));
    }
    Ok(())
}

fn check_cs(cs: &[i64], min_c: i64) -> Result<Vec<i64>, Failure> {
    let set: BTreeSet<i64> = cs.iter().copied().collect();
    if let Some(&c) = set.iter().find(|&&c| c < min_c) {
        return Err(Failure::Usage(format!("c must be at least {min_c}, got {c}")));
    }
    Ok(set.into_iter().collect())
}

fn xvar(n: i64, b: i64, c: i64, route: XvarRoute, s: &Settings) -> Result<Rendered, Failure> {
    let params = ClusterParams::new(b, c).map_err(usage)?;
    if n.abs() > MAX_N + 2 && !s.force {
        return Err(Failure::Usage(format!(
            "|n| = {} exceeds {}; pass --force to run anyway",
            n.abs(),
            MAX_N + 2
        )));
    }
    let x = match route {
        XvarRoute::Recurrence => xvar_recurrence(n, params)?,
        XvarRoute::Closed => {
            let c = params.require_closed_form().map_err(usage)?;
            check_n(n, n, s)?;
            xvar_closed_form_with(n, c, s.exec)?
        }
    };
    let route = match route {
        XvarRoute::Recurrence => "recurrence",
        XvarRoute::Closed => "closed",
    };
    Ok(Rendered {
        body: render_laurent(&x, b, c, n, route, s.format),
        ok: true,
    })
}

fn render_laurent(x: &LaurentPoly2, b: i64, c: i64, n: i64, route: &str, format: Format) -> String {
    match format {
        Format::Text => format!("{x}\n"),
        Format::Json => to_json(
            &json!({ "b": b, "c": c, "n": n, "route": route, "xvar": x.to_string(), "positive": is_positive(x) }),
        ),
        Format::Csv => {
            let mut rows = vec![vec!["p1".into(), "p2".into(), "coeff".into()]];
            rows.extend(
                x.terms()
                    .map(|((p1, p2), v)| vec![p1.to_string(), p2.to_string(), v.to_string()]),
            );
            to_csv(rows)
        }
    }
}

/// Route values keyed by route name, in route order rather than sorted.
struct RoutesJson(Vec<(&'static str, String)>);

impl Serialize for RoutesJson {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut m = ser.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

#[derive(Serialize)]
struct CellJson {
    e1: i64,
    e2: i64,
    routes: RoutesJson,
    agree: bool,
}

#[derive(Serialize)]
struct ReportJson {
    c: i64,
    n: i64,
    dim_vector: [i64; 2],
    cells: Vec<CellJson>,
    xvar_agree: bool,
    positive: bool,
}

/// Keeps only the selected routes in every cell and recomputes agreement.
fn restrict(r: &mut CrossCheckReport, routes: &BTreeSet<Route>) {
    for cell in &mut r.cells {
        cell.routes.retain(|k, _| routes.contains(k));
        let mut vals = cell.routes.values();
        cell.agree = match vals.next() {
            Some(first) => vals.all(|v| v == first),
            None => true,
        };
    }
}

fn report_json(r: &CrossCheckReport) -> ReportJson {
    ReportJson {
        c: r.c,
        n: r.n,
        dim_vector: [r.dim_vector.0, r.dim_vector.1],
        cells: r
            .cells
            .iter()
            .map(|cell| CellJson {
                e1: cell.e1,
                e2: cell.e2,
                routes: RoutesJson(
                    cell.routes
                        .iter()
                        .map(|(k, v)| (k.name(), v.to_string()))
                        .collect(),
                ),
                agree: cell.agree,
            })
            .collect(),
        xvar_agree: r.xvar_agree,
        positive: r.positive,
    }
}

fn cells_csv(reports: &[CrossCheckReport]) -> String {
    let mut header: Vec<String> = vec!["c".into(), "n".into(), "e1".into(), "e2".into()];
    header.extend(Route::ALL.iter().map(|r| r.name().to_string()));
    header.push("agree".into());
    let mut rows = vec![header];
    for r in reports {
        for cell in &r.cells {
            let mut row = vec![
                r.c.to_string(),
                r.n.to_string(),
                cell.e1.to_string(),
                cell.e2.to_string(),
            ];
            row.extend(
                Route::ALL
                    .iter()
                    .map(|k| cell.routes.get(k).map_or(String::new(), |v| v.to_string())),
            );
            row.push(cell.agree.to_string());
            rows.push(row);
        }
    }
    to_csv(rows)
}

fn disagreement_lines(r: &CrossCheckReport) -> String {
    let mut out = String::new();
    for cell in r.disagreements() {
        let vals: Vec<String> = cell
            .routes
            .iter()
            .map(|(k, v)| format!("{}={v}", k.name()))
            .collect();
        out.push_str(&format!(
            "DISAGREE c={} n={} ({},{}): {}\n",
            r.c,
            r.n,
            cell.e1,
            cell.e2,
            vals.join(" ")
        ));
    }
    out
}

/// The table from `route` as a grid, rows `e2`, columns `e1`; zeros as `.`.
fn grid(r: &CrossCheckReport, route: Route) -> String {
    let cells: BTreeMap<(i64, i64), String> = r
        .cells
        .iter()
        .filter_map(|c| {
            c.routes
                .get(&route)
                .filter(|v| !v.is_zero())
                .map(|v| ((c.e1, c.e2), v.to_string()))
        })
        .collect();
    let max_e1 = cells.keys().map(|k| k.0).max().unwrap_or(0);
    let max_e2 = cells.keys().map(|k| k.1).max().unwrap_or(0);
    let mut rows = vec![std::iter::once("e2\\e1".to_string())
        .chain((0..=max_e1).map(|e| e.to_string()))
        .collect::<Vec<_>>()];
    for e2 in 0..=max_e2 {
        let mut row = vec![e2.to_string()];
        row.extend((0..=max_e1).map(|e1| cells.get(&(e1, e2)).cloned().unwrap_or_else(|| ".".into())));
        rows.push(row);
    }
    aligned_right(&rows)
}

fn chi(
    n: i64,
    c: i64,
    cell: (Option<i64>, Option<i64>),
    sel: &[RouteSel],
    bridge_max_e2: i64,
    s: &Settings,
) -> Result<Rendered, Failure> {
    ClusterParams::equal(c).map_err(usage)?;
    check_n(n, n, s)?;
    let routes: BTreeSet<Route> = if sel.contains(&RouteSel::All) {
        Route::ALL.into_iter().collect()
    } else {
        sel.iter()
            .filter_map(|r| match r {
                RouteSel::One(r) => Some(*r),
                RouteSel::All => None,
            })
            .collect()
    };
    let opts = CrossCheckOptions {
        bridge_max_e2,
        cell: match cell {
            (Some(e1), Some(e2)) => Some((e1, e2)),
            _ => None,
        },
        exec: s.exec,
    };
    let mut r = cross_check(n, c, opts)?;
    r.cells
        .retain(|x| cell.0.is_none_or(|e1| x.e1 == e1) && cell.1.is_none_or(|e2| x.e2 == e2));
    restrict(&mut r, &routes);
    r.cells.retain(|x| !x.routes.is_empty());
    let ok = r.cells.iter().all(|x| x.agree);
    let body = match s.format {
        Format::Json => to_json(&report_json(&r)),
        Format::Csv => cells_csv(std::slice::from_ref(&r)),
        Format::Text => {
            let mut out = format!(
                "c={c} n={n} dim_vector=({},{}) routes={}\n",
                r.dim_vector.0,
                r.dim_vector.1,
                routes.iter().map(|x| x.name()).collect::<Vec<_>>().join(",")
            );
            if let (Some(e1), Some(e2)) = cell {
                let rows: Vec<Vec<String>> = r
                    .cells
                    .iter()
                    .flat_map(|x| {
                        x.routes
                            .iter()
                            .map(|(k, v)| vec![k.name().to_string(), v.to_string()])
                    })
                    .collect();
                out.push_str(&format!("cell ({e1},{e2})\n"));
                if rows.is_empty() {
                    out.push_str("no selected route applies to this cell\n");
                }
                out.push_str(&aligned(&rows));
            } else if let Some(&first) = routes.iter().next() {
                out.push_str(&grid(&r, first));
                out.push_str(&disagreement_lines(&r));
                if ok {
                    out.push_str(&format!("all selected routes agree on {} cells\n", r.cells.len()));
                }
            }
            out
        }
    };
    Ok(Rendered { body, ok })
}

fn cross(cs: &[i64], min_n: i64, max_n: i64, bridge_max_e2: i64, s: &Settings) -> Result<Rendered, Failure> {
    let cs = check_cs(cs, 2)?;
    check_n(min_n, max_n, s)?;
    let mut reports = Vec::new();
    for &c in &cs {
        for n in min_n..=max_n {
            if !s.quiet && n >= 7 {
                eprintln!("cross-check c={c} n={n}");
            }
            let opts = CrossCheckOptions {
                bridge_max_e2,
                cell: None,
                exec: s.exec,
            };
            reports.push(cross_check(n, c, opts)?);
        }
    }
    let ok = reports.iter().all(|r| r.all_agree());
    let body = match s.format {
        Format::Json => to_json(&reports.iter().map(report_json).collect::<Vec<_>>()),
        Format::Csv => cells_csv(&reports),
        Format::Text => {
            let mut rows = vec![[
                "c",
                "n",
                "dim_vector",
                "cells",
                "disagree",
                "xvar_agree",
                "positive",
            ]
            .map(String::from)
            .to_vec()];
            let mut extra = String::new();
            for r in &reports {
                rows.push(vec![
                    r.c.to_string(),
                    r.n.to_string(),
                    format!("({},{})", r.dim_vector.0, r.dim_vector.1),
                    r.cells.len().to_string(),
                    r.disagreements().count().to_string(),
                    r.xvar_agree.to_string(),
                    r.positive.to_string(),
                ]);
                extra.push_str(&disagreement_lines(r));
            }
            let mut out = aligned(&rows);
            out.push_str(&extra);
            out.push_str(if ok {
                "all routes agree\n"
            } else {
                "routes disagree\n"
            });
            out
        }
    };
    Ok(Rendered { body, ok })
}

fn stats_json(s: Option<&RegionStats>) -> Value {
    match s {
        None => json!({ "nonzero": 0, "negative": 0, "min": null }),
        Some(s) => json!({
            "nonzero": s.nonzero,
            "negative": s.negative,
            "min": s.min.as_ref().map(|m| m.to_string()),
        }),
    }
}

fn nonnegativity(cs: &[i64], min_n: i64, max_n: i64, s: &Settings) -> Result<Rendered, Failure> {
    let cs = check_cs(cs, 3)?;
    check_n(min_n, max_n, s)?;
    let mut report = VerificationReport::new(
        "cluster nonnegativity",
        json!({ "c": cs, "min_n": min_n, "max_n": max_n }),
    );
    for &c in &cs {
        for n in min_n..=max_n {
            let inputs = json!({ "c": c, "n": n });
            let table = chi_closed_form_table(n, c, s.exec)?;
            match nonnegativity_report_of(&table) {
                Err(Error::AssertionFailure(m)) => report.push(CheckRecord::new(
                    format!("nonnegativity/c={c}/n={n}"),
                    inputs,
                    Status::Fail,
                    json!({ "error": m }),
                )),
                Err(e) => return Err(e.into()),
                Ok(r) => {
                    report.push(CheckRecord::new(
                        format!("nonnegativity/c={c}/n={n}"),
                        inputs.clone(),
                        if r.proven_ok() { Status::Pass } else { Status::Fail },
                        json!({
                            "a_n3": r.a_n3,
                            "proven": stats_json(r.regions.get(&Region::Proven)),
                        }),
                    ));
                    if let Some(open) = r.regions.get(&Region::Open) {
                        let negatives: Vec<Value> = r
                            .open_negatives
                            .iter()
                            .map(|((e1, e2), v)| json!({ "e1": e1, "e2": e2, "chi": v.to_string() }))
                            .collect();
                        let mut w = stats_json(Some(open));
                        w["negatives"] = Value::Array(negatives);
                        report.push(CheckRecord::new(
                            format!("nonnegativity/c={c}/n={n}/open"),
                            inputs,
                            Status::Observation,
                            w,
                        ));
                    }
                }
            }
        }
    }
    Ok(Rendered {
        body: report.render(s.format),
        ok: report.passed(),
    })
}
