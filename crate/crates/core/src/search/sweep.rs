use std::fmt;
use std::time::Duration;

use serde::Serialize;

use crate::error::SearchError;
use crate::hopf::{hopf_admissible, HopfTriple};
use crate::search::{search, SearchOptions, SearchProblem};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellStatus {
    Found,
    ConsistentEmpty,
    Timeout,
}

impl fmt::Display for CellStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CellStatus::Found => "found",
            CellStatus::ConsistentEmpty => "consistent-empty",
            CellStatus::Timeout => "timeout",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SweepCell {
    pub r: usize,
    pub s: usize,
    pub n: usize,
    pub p: u64,
    pub status: CellStatus,
    pub admissible: bool,
}

impl SweepCell {
    /// A formula exists although the Hopf condition fails.
    pub fn is_violation(&self) -> bool {
        self.status == CellStatus::Found && !self.admissible
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepReport {
    pub cells: Vec<SweepCell>,
    pub violations: usize,
}

impl SweepReport {
    pub fn cell(&self, r: usize, s: usize, n: usize) -> Option<&SweepCell> {
        self.cells.iter().find(|c| (c.r, c.s, c.n) == (r, s, n))
    }

    pub fn completed(&self) -> bool {
        self.cells.iter().all(|c| c.status != CellStatus::Timeout)
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("r,s,n,p,status\n");
        for c in &self.cells {
            out.push_str(&format!("{},{},{},{},{}\n", c.r, c.s, c.n, c.p, c.status));
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.cells {
            let hopf = if c.admissible { "admissible" } else { "inadmissible" };
            let flag = if c.is_violation() { "  VIOLATION" } else { "" };
            out.push_str(&format!("[{},{},{}] GF({}): {}, {hopf}{flag}\n", c.r, c.s, c.n, c.p, c.status));
        }
        out.push_str(&format!("{} cells, {} violations\n", self.cells.len(), self.violations));
        out
    }
}

/// Searches every `1 <= r <= rmax`, `1 <= s <= smax`, `max(r,s) <= n <= nmax`
/// for one formula and checks that found cells satisfy the Hopf condition.
pub fn hopf_consistency_sweep(rmax: usize, smax: usize, nmax: usize, p: u64) -> Result<SweepReport, SearchError> {
    hopf_consistency_sweep_with(rmax, smax, nmax, p, None)
}

/// As [`hopf_consistency_sweep`] with a time budget per cell.
pub fn hopf_consistency_sweep_with(
    rmax: usize,
    smax: usize,
    nmax: usize,
    p: u64,
    budget: Option<Duration>,
) -> Result<SweepReport, SearchError> {
    let options = SearchOptions { max_solutions: Some(1), time_budget: budget, ..SearchOptions::default() };
    let mut cells = Vec::new();
    for r in 1..=rmax {
        for s in 1..=smax {
            for n in r.max(s)..=nmax {
                let out = search(&SearchProblem::new(r, s, n, p).with_options(options.clone()))?;
                let status = if !out.formulas.is_empty() {
                    debug_assert!(out.formulas.iter().all(|f| f.verify_by_expansion()));
                    CellStatus::Found
                } else if out.exhausted {
                    CellStatus::ConsistentEmpty
                } else {
                    CellStatus::Timeout
                };
                let admissible = hopf_admissible(HopfTriple::new(r as u64, s as u64, n as u64));
                cells.push(SweepCell { r, s, n, p, status, admissible });
            }
        }
    }
    let violations = cells.iter().filter(|c| c.is_violation()).count();
    Ok(SweepReport { cells, violations })
}
