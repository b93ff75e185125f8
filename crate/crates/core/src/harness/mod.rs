//! File format, verification campaigns, the Nordhaus–Gaddum scan and the
//! command line front end.

mod campaign;
pub mod cli;
pub mod io;
mod ng;

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::ops::RangeInclusive;
use std::time::Duration;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::formulas::TheoremId;

pub use campaign::{family_of_order, verify_all, verify_theorem};
pub use ng::{has_k2_component, nordhaus_gaddum_scan, NgExclusion, NgScan, NordhausGaddumRecord};

/// Environment variable holding the worker count for campaigns.
pub const WORKERS_ENV: &str = "MIDDOM_WORKERS";

const DEFAULT_GRID: &str = include_str!("../../grids.toml");

/// Builds the global rayon pool from [`WORKERS_ENV`] if it holds a
/// positive number. Later calls are no-ops.
pub fn init_workers() {
    let workers = std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .filter(|&w| w > 0);
    if let Some(w) = workers {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(w).build_global();
    }
}

/// Parameter ranges for one theorem's campaign.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GridEntry {
    pub n: Option<[usize; 2]>,
    pub n1: Option<[usize; 2]>,
    pub n2: Option<[usize; 2]>,
    pub families: Vec<String>,
    /// Number of seeded random connected graphs.
    pub random: usize,
    pub seed: u64,
    pub edge_prob: Option<f64>,
}

fn span(r: Option<[usize; 2]>) -> RangeInclusive<usize> {
    match r {
        Some([lo, hi]) => lo..=hi,
        #[allow(clippy::reversed_empty_ranges)]
        None => 1..=0,
    }
}

impl GridEntry {
    pub fn n_range(&self) -> RangeInclusive<usize> {
        span(self.n)
    }

    fn cap(&mut self, max_n: usize) {
        for r in [&mut self.n, &mut self.n1, &mut self.n2].into_iter().flatten() {
            r[1] = r[1].min(max_n);
        }
    }
}

/// The declarative verification grid: theorem id to parameter ranges.
#[derive(Debug, Clone)]
pub struct Grid {
    entries: BTreeMap<TheoremId, GridEntry>,
}

impl Grid {
    /// The grid checked in next to the crate manifest.
    pub fn standard() -> Grid {
        Grid::from_toml(DEFAULT_GRID).expect("bundled grid parses")
    }

    pub fn from_toml(text: &str) -> Result<Grid> {
        let raw: BTreeMap<String, GridEntry> = toml::from_str(text).map_err(|e| {
            let line = e.span().map_or(1, |s| text[..s.start].matches('\n').count() + 1);
            Error::Parse {
                line,
                msg: e.message().to_string(),
            }
        })?;
        let mut entries = BTreeMap::new();
        for (name, entry) in raw {
            entries.insert(name.parse::<TheoremId>()?, entry);
        }
        Ok(Grid { entries })
    }

    pub fn entry(&self, theorem: TheoremId) -> GridEntry {
        self.entries.get(&theorem).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, theorem: TheoremId, entry: GridEntry) {
        self.entries.insert(theorem, entry);
    }

    /// Caps every order range at `max_n`.
    pub fn with_max_n(mut self, max_n: usize) -> Grid {
        for e in self.entries.values_mut() {
            e.cap(max_n);
        }
        self
    }
}

/// One checked instance, or an aggregate over an exhaustive family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub params: String,
    pub expected: String,
    pub got: String,
    pub witness_size: Option<usize>,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub theorem: TheoremId,
    pub rows: Vec<Row>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn pass_count(&self) -> usize {
        self.rows.iter().filter(|r| r.pass).count()
    }

    pub fn to_text(&self) -> String {
        let headers = ["params", "expected", "got", "witness", "status"];
        let cells: Vec<[String; 5]> = self
            .rows
            .iter()
            .map(|r| {
                [
                    r.params.clone(),
                    r.expected.clone(),
                    r.got.clone(),
                    r.witness_size.map_or("-".into(), |w| w.to_string()),
                    status(r.pass).into(),
                ]
            })
            .collect();
        let mut widths = headers.map(str::len);
        for row in &cells {
            for (w, c) in widths.iter_mut().zip(row) {
                *w = (*w).max(c.chars().count());
            }
        }
        let mut out = format!(
            "== {}: {}/{} pass ({:.2?})\n",
            self.theorem,
            self.pass_count(),
            self.rows.len(),
            self.elapsed
        );
        let line = |out: &mut String, row: &[String]| {
            let padded: Vec<String> = row
                .iter()
                .zip(widths)
                .map(|(c, w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
                .collect();
            let _ = writeln!(out, "  {}", padded.join("  ").trim_end());
        };
        line(&mut out, &headers.map(String::from));
        for row in &cells {
            line(&mut out, row);
        }
        out
    }
}

fn status(pass: bool) -> &'static str {
    if pass {
        "pass"
    } else {
        "fail"
    }
}

/// CSV with columns theorem, params, expected, got, witness_size, status.
pub fn reports_to_csv(reports: &[VerificationReport]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io_err = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(["theorem", "params", "expected", "got", "witness_size", "status"])
        .map_err(io_err)?;
    for rep in reports {
        for r in &rep.rows {
            w.write_record([
                rep.theorem.name(),
                &r.params,
                &r.expected,
                &r.got,
                &r.witness_size.map_or(String::new(), |s| s.to_string()),
                status(r.pass),
            ])
            .map_err(io_err)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_grid_covers_every_theorem() {
        let g = Grid::standard();
        for t in TheoremId::ALL {
            let e = g.entry(t);
            assert!(e.n.is_some() || e.n1.is_some(), "{t} has no range");
        }
        let capped = g.with_max_n(5);
        assert_eq!(capped.entry(TheoremId::PathFormula).n_range(), 3..=5);
    }

    #[test]
    fn grid_errors() {
        assert!(matches!(Grid::from_toml("[nope]\nn = [1, 2]\n"), Err(Error::InvalidParameter { .. })));
        assert!(matches!(Grid::from_toml("[path]\nm = 3\n"), Err(Error::Parse { line: 2, .. })));
    }
}
