//! Rank-2 cluster variables and Euler characteristics of quiver
//! Grassmannians of the generalized Kronecker quiver.
//!
//! The recurrence `x_{k+1} x_{k-1} = x_k^{b or c} + 1` is the oracle; every
//! other route must reproduce its Laurent coefficients. Closed forms need
//! `b = c >= 2`.

mod closed;
mod recurrence;
mod report;
mod series;
mod strip;

pub use closed::{
    chi_closed_form, chi_closed_form_table, chi_closed_form_ungated, closed_form_box_is_complete,
    xvar_closed_form, xvar_closed_form_with,
};

pub use recurrence::{
    chi_from_laurent, chi_from_recurrence, is_positive, xvar_range, xvar_recurrence, ChiTable,
};

pub use report::{
    chi_nonnegativity_report, cross_check, nonnegativity_report_of, region_of, CellReport, CrossCheckOptions,
    CrossCheckReport, NonnegativityReport, Region, RegionStats, Route,
};
pub use series::{
    binomial_identity_check, stfact_check, IdentityVerdict, Orientation, SeriesVerdict, TruncatedSeries,
};
pub use strip::{chi_expanded, chi_expanded_literal, chi_small_e1, ec_bridge};

use crate::{Error, Result};

/// Exchange exponents `b, c >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ClusterParams {
    pub b: i64,
    pub c: i64,
}

impl ClusterParams {
    pub fn new(b: i64, c: i64) -> Result<Self> {
        if b < 1 || c < 1 {
            return Err(Error::PreconditionViolated(format!(
                "b and c must be positive, got b = {b}, c = {c}"
            )));
        }
        Ok(ClusterParams { b, c })
    }

    /// `b = c`, as the closed forms require; `c >= 2`.
    pub fn equal(c: i64) -> Result<Self> {
        if c < 2 {
            return Err(Error::UnsupportedParams { b: c, c });
        }
        Ok(ClusterParams { b: c, c })
    }

    /// Fails unless `b = c >= 2`.
    pub fn require_closed_form(self) -> Result<i64> {
        if self.b != self.c || self.c < 2 {
            return Err(Error::UnsupportedParams { b: self.b, c: self.c });
        }
        Ok(self.c)
    }
}
