//! Verification reports: one CSV row per checked quantity.

use std::io::Write;

use serde::{Deserialize, Serialize};

use crate::algebra::Hyperbolic;
use crate::quadrature::QuadError;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub test: String,
    pub parameter: String,
    pub component1_value: f64,
    pub component2_value: f64,
    pub bound: f64,
    pub pass: bool,
}

impl ReportRow {
    pub fn new(
        test: impl Into<String>,
        parameter: impl Into<String>,
        values: (f64, f64),
        bound: f64,
        pass: bool,
    ) -> Self {
        Self {
            test: test.into(),
            parameter: parameter.into(),
            component1_value: values.0,
            component2_value: values.1,
            bound,
            pass,
        }
    }

    /// Passes when both components are at most `bound`.
    pub fn at_most(test: impl Into<String>, parameter: impl Into<String>, values: (f64, f64), bound: f64) -> Self {
        let pass = values.0 <= bound && values.1 <= bound;
        Self::new(test, parameter, values, bound, pass)
    }

    /// Passes when both components are at least `bound`.
    pub fn at_least(test: impl Into<String>, parameter: impl Into<String>, values: (f64, f64), bound: f64) -> Self {
        let pass = values.0 >= bound && values.1 >= bound;
        Self::new(test, parameter, values, bound, pass)
    }

    /// An informational row carrying a hyperbolic value.
    pub fn info(test: impl Into<String>, parameter: impl Into<String>, value: Hyperbolic) -> Self {
        Self::new(test, parameter, value.idempotent(), f64::NAN, true)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub rows: Vec<ReportRow>,
    /// Suites that were not run, with the reason.
    pub skipped: Vec<String>,
}

impl Report {
    pub fn push(&mut self, row: ReportRow) {
        self.rows.push(row);
    }

    pub fn extend(&mut self, other: Report) {
        self.rows.extend(other.rows);
        self.skipped.extend(other.skipped);
    }

    pub fn skip(&mut self, reason: impl Into<String>) {
        self.skipped.push(reason.into());
    }

    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn write_csv<W: Write>(&self, writer: W) -> Result<(), QuadError> {
        let mut w = csv::Writer::from_writer(writer);
        let err = |e: csv::Error| QuadError::Csv(e.to_string());
        for row in &self.rows {
            w.serialize(row).map_err(err)?;
        }
        if self.rows.is_empty() {
            w.write_record(["test", "parameter", "component1_value", "component2_value", "bound", "pass"])
                .map_err(err)?;
        }
        w.flush().map_err(|e| QuadError::Csv(e.to_string()))
    }
}
