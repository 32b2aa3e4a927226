use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::Signed;

use super::closed::Setup;
use super::{
    chi_closed_form_table, chi_expanded, chi_from_laurent, chi_small_e1, ec_bridge, xvar_recurrence,
    ChiTable, ClusterParams,
};
use crate::ring::BigRat;
use crate::{Error, Exec, Result};

/// Where a cell sits relative to the proven nonnegativity bound
/// `e2 >= a_{n-3}/c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Region {
    Proven,
    /// `0 < e2 < a_{n-3}/c`.
    Open,
    /// `e2 = 0` below the bound; only `(0, 0)` is nonzero there.
    Boundary,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RegionStats {
    pub nonzero: usize,
    pub negative: usize,
    pub min: Option<BigInt>,
}

impl RegionStats {
    fn record(&mut self, v: &BigInt) {
        self.nonzero += 1;
        if v.is_negative() {
            self.negative += 1;
        }
        if self.min.as_ref().is_none_or(|m| v < m) {
            self.min = Some(v.clone());
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonnegativityReport {
    pub n: i64,
    pub c: i64,
    pub a_n3: i64,
    pub regions: BTreeMap<Region, RegionStats>,
    /// Negative cells outside the proven region: observations, not errors.
    pub open_negatives: Vec<((i64, i64), BigInt)>,
}

impl NonnegativityReport {
    pub fn proven_ok(&self) -> bool {
        self.regions.get(&Region::Proven).is_none_or(|s| s.negative == 0)
    }
}

pub fn region_of(c: i64, a_n3: i64, e2: i64) -> Region {
    if c * e2 >= a_n3 {
        Region::Proven
    } else if e2 > 0 {
        Region::Open
    } else {
        Region::Boundary
    }
}

/// Splits the closed-form table at `e2 = a_{n-3}/c` and checks the proven
/// side. Fails with `AssertionFailure` if a proven-region value is negative.
pub fn chi_nonnegativity_report(n: i64, c: i64) -> Result<NonnegativityReport> {
    if c < 3 {
        return Err(Error::PreconditionViolated(format!("need c >= 3, got {c}")));
    }
    let table = chi_closed_form_table(n, c, Exec::default())?;
    nonnegativity_report_of(&table)
}

pub fn nonnegativity_report_of(table: &ChiTable) -> Result<NonnegativityReport> {
    let s = Setup::new(table.n, table.c, 3)?;
    let (_, _, a_n3) = s.dims();
    let mut regions: BTreeMap<Region, RegionStats> = BTreeMap::new();
    let mut open_negatives = Vec::new();
    for (&(e1, e2), v) in &table.entries {
        let region = region_of(table.c, a_n3, e2);
        regions.entry(region).or_default().record(v);
        if v.is_negative() {
            if region == Region::Proven {
                return Err(Error::AssertionFailure(format!(
                    "chi({e1},{e2}) = {v} < 0 for n = {}, c = {} in the proven region",
                    table.n, table.c
                )));
            }
            open_negatives.push(((e1, e2), v.clone()));
        }
    }
    Ok(NonnegativityReport {
        n: table.n,
        c: table.c,
        a_n3,
        regions,
        open_negatives,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Route {
    Recurrence,
    Closed,
    SmallE1,
    Expanded,
    Bridge,
}

impl Route {
    pub const ALL: [Route; 5] = [
        Route::Recurrence,
        Route::Closed,
        Route::SmallE1,
        Route::Expanded,
        Route::Bridge,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Route::Recurrence => "recurrence",
            Route::Closed => "closed",
            Route::SmallE1 => "small_e1",
            Route::Expanded => "expanded",
            Route::Bridge => "bridge",
        }
    }
}

impl std::str::FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Route::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown route `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellReport {
    pub e1: i64,
    pub e2: i64,
    pub routes: BTreeMap<Route, BigRat>,
    pub agree: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub n: i64,
    pub c: i64,
    pub dim_vector: (i64, i64),
    pub cells: Vec<CellReport>,
    /// Closed-form `x_n` equals the recurrence exactly.
    pub xvar_agree: bool,
    /// Every recurrence coefficient is positive.
    pub positive: bool,
    /// Bridge values that are not integers, by cell.
    pub bridge_non_integral: Vec<(i64, i64)>,
}

impl CrossCheckReport {
    pub fn all_agree(&self) -> bool {
        self.xvar_agree && self.cells.iter().all(|c| c.agree)
    }

    pub fn disagreements(&self) -> impl Iterator<Item = &CellReport> {
        self.cells.iter().filter(|c| !c.agree)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CrossCheckOptions {
    /// Largest `e2` for the bridge route; `EC_{e2}` must be built.
    pub bridge_max_e2: i64,
    /// Restrict to one cell.
    pub cell: Option<(i64, i64)>,
    pub exec: Exec,
}

impl Default for CrossCheckOptions {
    fn default() -> Self {
        CrossCheckOptions {
            bridge_max_e2: 5,
            cell: None,
            exec: Exec::default(),
        }
    }
}

/// Computes the table by every route that applies and compares cell by
/// cell. Reported cells: those nonzero on some full-table route, plus the
/// whole strip `e1 < c`. Disagreement is reported, not raised.
pub fn cross_check(n: i64, c: i64, opts: CrossCheckOptions) -> Result<CrossCheckReport> {
    let s = Setup::new(n, c, 3)?;
    let params = ClusterParams::equal(c)?;
    let x_rec = xvar_recurrence(n, params)?;
    let positive = x_rec.terms().all(|(_, v)| v.is_positive());
    let rec = chi_from_laurent(n, c, &x_rec)?;
    let closed = chi_closed_form_table(n, c, opts.exec)?;
    let xvar_agree = closed.to_laurent()? == x_rec;
    let (d1, d2, _) = s.dims();

    let mut cells: BTreeSet<(i64, i64)> = rec.entries.keys().chain(closed.entries.keys()).copied().collect();
    if n >= 4 {
        for e2 in 0..=d2 {
            for e1 in 0..c.min(d1 + 1) {
                cells.insert((e1, e2));
            }
        }
    }
    if let Some(cell) = opts.cell {
        cells.retain(|&x| x == cell);
        cells.insert(cell);
    }
    let cells: Vec<(i64, i64)> = cells.into_iter().collect();
    let computed = opts.exec.map(&cells, |&(e1, e2)| -> Result<CellReport> {
        let mut routes = BTreeMap::new();
        routes.insert(Route::Recurrence, BigRat::from(rec.get(e1, e2)));
        routes.insert(Route::Closed, BigRat::from(closed.get(e1, e2)));
        if n >= 4 && (0..c).contains(&e1) && e2 >= 0 {
            routes.insert(Route::SmallE1, chi_small_e1(n, c, e1, e2)?.into());
            routes.insert(Route::Expanded, chi_expanded(n, c, e1, e2)?.into());
            if e2 <= opts.bridge_max_e2 {
                routes.insert(Route::Bridge, ec_bridge(n, c, e1, e2)?);
            }
        }
        let first = routes.values().next().expect("recurrence present");
        let agree = routes.values().all(|v| v == first);
        Ok(CellReport {
            e1,
            e2,
            routes,
            agree,
        })
    });
    let cells = computed.into_iter().collect::<Result<Vec<_>>>()?;
    let bridge_non_integral = cells
        .iter()
        .filter(|c| c.routes.get(&Route::Bridge).is_some_and(|v| !v.is_integer()))
        .map(|c| (c.e1, c.e2))
        .collect();
    Ok(CrossCheckReport {
        n,
        c,
        dim_vector: (d1, d2),
        cells,
        xvar_agree,
        positive,
        bridge_non_integral,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cross_check_small() {
        for (n, c) in [(3, 2), (4, 2), (6, 2), (5, 3), (5, 4)] {
            let r = cross_check(n, c, CrossCheckOptions::default()).unwrap();
            assert!(r.all_agree(), "n={n} c={c}");
            assert!(r.positive);
            assert!(r.bridge_non_integral.is_empty());
        }
    }

    #[test]
    fn report_marks_routes_by_strip() {
        let r = cross_check(4, 2, CrossCheckOptions::default()).unwrap();
        let cell = r.cells.iter().find(|c| (c.e1, c.e2) == (2, 1)).unwrap();
        assert_eq!(cell.routes.len(), 2);
        let cell = r.cells.iter().find(|c| (c.e1, c.e2) == (1, 1)).unwrap();
        assert_eq!(cell.routes.len(), 5);
    }

    #[test]
    fn nonnegativity_regions() {
        let r = chi_nonnegativity_report(4, 3).unwrap();
        assert_eq!(r.a_n3, 0);
        assert_eq!(r.regions.len(), 1);
        // a_3 = 3 = c: the open strip 0 < e2 < 1 is empty at n = 6.
        let r = chi_nonnegativity_report(6, 3).unwrap();
        assert!(!r.regions.contains_key(&Region::Open));
        let r = chi_nonnegativity_report(7, 3).unwrap();
        assert!(r.proven_ok());
        assert!(r.regions[&Region::Open].nonzero > 0);
        assert!(chi_nonnegativity_report(5, 2).is_err());
    }

    #[test]
    fn proven_negative_is_an_error() {
        let mut t = chi_closed_form_table(5, 3, Exec::Sequential).unwrap();
        t.insert(1, 3, BigInt::from(-1));
        assert!(matches!(
            nonnegativity_report_of(&t),
            Err(Error::AssertionFailure(_))
        ));
    }
}
