use std::fmt;
use std::io::{Read, Write};
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::sweep::{ObservableValues, SweepResult, SweepRow};
use crate::compiler::ExcitationSet;
use crate::error::{Error, Result};

pub const CSV_HEADER: [&str; 5] = ["mu", "label", "observable", "value", "stderr"];

/// Per-row quantities a sweep can emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Observable {
    Energy,
    Parity,
    Number,
    Edge,
    /// All `⟨iγ₁γ_m⟩`, written as `site_corr_<m>`.
    SiteCorr,
}

impl Observable {
    pub const DEFAULT: [Observable; 4] = [Observable::Energy, Observable::Parity, Observable::Number, Observable::Edge];

    pub fn name(self) -> &'static str {
        match self {
            Observable::Energy => "energy",
            Observable::Parity => "parity",
            Observable::Number => "number",
            Observable::Edge => "edge",
            Observable::SiteCorr => "site_corr",
        }
    }

    fn pick(self, v: &ObservableValues) -> Option<f64> {
        match self {
            Observable::Energy => Some(v.energy),
            Observable::Parity => Some(v.parity),
            Observable::Number => Some(v.number),
            Observable::Edge => Some(v.edge_corr),
            Observable::SiteCorr => None,
        }
    }
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Observable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "energy" => Ok(Observable::Energy),
            "parity" => Ok(Observable::Parity),
            "number" => Ok(Observable::Number),
            "edge" | "edge_corr" => Ok(Observable::Edge),
            "site_corr" | "corr" => Ok(Observable::SiteCorr),
            other => Err(Error::Parse(format!("unknown observable {other:?}"))),
        }
    }
}

/// One long-format measurement.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Measurement {
    pub mu: f64,
    pub label: ExcitationSet,
    pub observable: String,
    pub value: f64,
    pub stderr: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct MeasurementTable {
    pub rows: Vec<Measurement>,
}

const JOIN_MU_TOL: f64 = 1e-9;

impl MeasurementTable {
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows for `observables`; noisy and sampled values get `noisy_` and
    /// `sampled_` prefixes. Failed sweep rows are omitted.
    pub fn from_sweep(sweep: &SweepResult, observables: &[Observable]) -> Self {
        let mut rows = Vec::new();
        for r in &sweep.rows {
            push_row(&mut rows, r, observables);
        }
        Self { rows }
    }

    pub fn filter(&self, observable: &str) -> Self {
        Self { rows: self.rows.iter().filter(|m| m.observable == observable).cloned().collect() }
    }

    /// Pairs of rows with equal label and observable and matching `μ`.
    pub fn join<'a>(&'a self, other: &'a MeasurementTable) -> Vec<(&'a Measurement, &'a Measurement)> {
        let mut out = Vec::new();
        for a in &self.rows {
            let tol = JOIN_MU_TOL * a.mu.abs().max(1.0);
            if let Some(b) = other.rows.iter().find(|b| b.label == a.label && b.observable == a.observable && (b.mu - a.mu).abs() <= tol) {
                out.push((a, b));
            }
        }
        out
    }

    pub fn write<W: Write>(&self, writer: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(writer);
        w.write_record(CSV_HEADER).map_err(csv_error)?;
        for m in &self.rows {
            let stderr = m.stderr.map(fmt_float).unwrap_or_default();
            w.write_record([fmt_float(m.mu), m.label.to_string(), m.observable.clone(), fmt_float(m.value), stderr]).map_err(csv_error)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read<R: Read>(reader: R) -> Result<Self> {
        let mut r = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).flexible(true).from_reader(reader);
        let mut records = r.records();
        let header = match records.next() {
            None => return Ok(Self::default()),
            Some(h) => h.map_err(csv_error)?,
        };
        let cols = Columns::from_header(&header)?;
        let mut rows = Vec::new();
        for rec in records {
            let rec = rec.map_err(csv_error)?;
            let line = rec.position().map_or(0, |p| p.line());
            if rec.iter().all(str::is_empty) {
                continue;
            }
            rows.push(cols.parse(&rec).map_err(|message| Error::Csv { line, message })?);
        }
        Ok(Self { rows })
    }
}

fn push_row(rows: &mut Vec<Measurement>, r: &SweepRow, observables: &[Observable]) {
    let Some(values) = r.values else { return };
    let mut push = |name: String, value: f64, stderr: Option<f64>| {
        rows.push(Measurement { mu: r.mu, label: r.label.clone(), observable: name, value, stderr })
    };
    for &o in observables {
        if o == Observable::SiteCorr {
            for (k, v) in r.site_corr.iter().enumerate() {
                push(format!("site_corr_{}", k + 2), *v, None);
            }
            continue;
        }
        push(o.name().to_string(), o.pick(&values).expect("scalar observable"), None);
        if let Some(noisy) = &r.noisy {
            push(format!("noisy_{}", o.name()), o.pick(noisy).expect("scalar observable"), None);
        }
        if let Some(s) = &r.sampled {
            let e = match o {
                Observable::Energy => s.energy,
                Observable::Parity => s.parity,
                Observable::Number => s.number,
                _ => s.edge_corr,
            };
            push(format!("sampled_{}", o.name()), e.value, Some(e.stderr));
        }
    }
}

struct Columns {
    mu: usize,
    label: usize,
    observable: usize,
    value: usize,
    stderr: Option<usize>,
}

impl Columns {
    fn from_header(header: &csv::StringRecord) -> Result<Self> {
        let find = |names: &[&str]| header.iter().position(|h| names.contains(&h.trim_start_matches('\u{feff}')));
        let need = |names: &[&str]| find(names).ok_or_else(|| Error::Csv { line: 1, message: format!("missing column {:?}", names[0]) });
        Ok(Self {
            mu: need(&["mu", "μ"])?,
            label: need(&["label"])?,
            observable: need(&["observable"])?,
            value: need(&["value"])?,
            stderr: find(&["stderr"]),
        })
    }

    fn parse(&self, rec: &csv::StringRecord) -> std::result::Result<Measurement, String> {
        let field = |i: usize, name: &str| rec.get(i).ok_or_else(|| format!("missing field {name}"));
        let float = |i: usize, name: &str| -> std::result::Result<f64, String> {
            let s = field(i, name)?;
            s.parse().map_err(|_| format!("bad {name} {s:?}"))
        };
        let stderr = match self.stderr.and_then(|i| rec.get(i)) {
            None | Some("") => None,
            Some(s) => Some(s.parse().map_err(|_| format!("bad stderr {s:?}"))?),
        };
        let label = field(self.label, "label")?;
        Ok(Measurement {
            mu: float(self.mu, "mu")?,
            label: label.parse().map_err(|e: Error| e.to_string())?,
            observable: field(self.observable, "observable")?.to_string(),
            value: float(self.value, "value")?,
            stderr,
        })
    }
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line());
    Error::Csv { line, message: e.to_string() }
}

/// Seventeen significant digits; enough to round-trip every `f64`.
pub fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_sweep_csv<W: Write>(sweep: &SweepResult, observables: &[Observable], writer: W) -> Result<()> {
    MeasurementTable::from_sweep(sweep, observables).write(writer)
}

pub fn load_measurement_csv(path: impl AsRef<Path>) -> Result<MeasurementTable> {
    MeasurementTable::read(std::fs::File::open(path)?)
}

/// `<experiment>_<n>_<t>_<delta>.csv`
pub fn output_file_name(experiment: &str, n: usize, t: f64, delta: f64) -> String {
    format!("{experiment}_{n}_{t}_{delta}.csv")
}
