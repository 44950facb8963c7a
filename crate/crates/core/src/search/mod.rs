//! Backtracking search for `[r, s, n]` formulas over `GF(p)`.
//!
//! A formula is a list of `n x s` matrices `B_1..B_r` with
//! `B_i^T B_l + B_l^T B_i = 2 delta_il I`. Columns are filled one at a time:
//! every constraint touching the new column is linear in it once earlier
//! columns are fixed, except its unit norm, so candidates are the points of
//! an affine space filtered by `x.x = 1`.

mod linalg;
mod sweep;

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::algebra::CoeffRing;
use crate::error::SearchError;
use crate::formula::{to_json, SosFormula};
use linalg::{dot, solve};

pub use sweep::{hopf_consistency_sweep, hopf_consistency_sweep_with, CellStatus, SweepCell, SweepReport};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    /// Fix `B_1 = [I_s; 0]`.
    pub canonical_first_matrix: bool,
    /// Entries in `{0, 1, -1}` with at most one nonzero per row of each `B_i`.
    pub signed_monomial_only: bool,
    pub max_solutions: Option<usize>,
    pub time_budget: Option<Duration>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            canonical_first_matrix: true,
            signed_monomial_only: false,
            max_solutions: None,
            time_budget: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchProblem {
    pub r: usize,
    pub s: usize,
    pub n: usize,
    pub p: u64,
    pub options: SearchOptions,
}

impl SearchProblem {
    pub fn new(r: usize, s: usize, n: usize, p: u64) -> Self {
        SearchProblem { r, s, n, p, options: SearchOptions::default() }
    }

    pub fn with_options(mut self, options: SearchOptions) -> Self {
        self.options = options;
        self
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    /// Sorted by canonical JSON.
    pub formulas: Vec<SosFormula>,
    /// The whole search space was explored; an empty result is then a proof
    /// of nonexistence.
    pub exhausted: bool,
    pub timed_out: bool,
}

/// `mats[i][c]` is column `c` of `B_{i+1}`.
type Partial = Vec<Vec<Vec<u64>>>;

struct Ctx<'a> {
    prob: &'a SearchProblem,
    slots: Vec<(usize, usize)>,
    deadline: Option<Instant>,
    timed_out: &'a AtomicBool,
}

impl Ctx<'_> {
    fn expired(&self) -> bool {
        if self.timed_out.load(Ordering::Relaxed) {
            return true;
        }
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.timed_out.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }

    fn is_signed(&self, v: u64) -> bool {
        v == 0 || v == 1 || v == self.prob.p - 1
    }

    /// Admissible values for column `c` of `B_i` given the filled prefix.
    fn candidates(&self, mats: &Partial, i: usize, c: usize) -> Vec<Vec<u64>> {
        let p = self.prob.p;
        let n = self.prob.n;
        let mut rows = Vec::new();
        let mut rhs = Vec::new();
        for prev in &mats[i][..c] {
            rows.push(prev.clone());
            rhs.push(0);
        }
        for bl in &mats[..i] {
            for (cp, col) in bl.iter().enumerate().take(c + 1) {
                rows.push(col.clone());
                // x . B_l[c'] = -B_l[c] . B_i[c'] for c' < c
                let b = if cp < c { (p - dot(&bl[c], &mats[i][cp], p)) % p } else { 0 };
                rhs.push(b);
            }
        }
        let Some(space) = solve(&rows, &rhs, n, p) else { return Vec::new() };
        let signed = self.prob.options.signed_monomial_only;
        let mut out = Vec::new();
        for x in space.points(p) {
            if out.len() % 1024 == 0 && self.expired() {
                break;
            }
            if dot(&x, &x, p) != 1 {
                continue;
            }
            if signed {
                if !x.iter().all(|&v| self.is_signed(v)) {
                    continue;
                }
                if (0..n).any(|k| x[k] != 0 && mats[i][..c].iter().any(|col| col[k] != 0)) {
                    continue;
                }
            }
            out.push(x);
        }
        out
    }

    fn dfs(&self, mats: &mut Partial, depth: usize, found: &mut Vec<Partial>, stop: &dyn Fn(usize) -> bool) -> bool {
        if self.expired() || stop(found.len()) {
            return false;
        }
        if depth == self.slots.len() {
            found.push(mats.clone());
            return true;
        }
        let (i, c) = self.slots[depth];
        for x in self.candidates(mats, i, c) {
            mats[i].push(x);
            let ok = self.dfs(mats, depth + 1, found, stop);
            mats[i].pop();
            if !ok && (self.expired() || stop(found.len())) {
                return false;
            }
        }
        true
    }
}

fn to_formula(prob: &SearchProblem, ring: &CoeffRing, mats: &Partial) -> SosFormula {
    let tensor = (0..prob.n)
        .map(|k| (0..prob.r).map(|i| (0..prob.s).map(|j| ring.from_i64(mats[i][j][k] as i64)).collect()).collect())
        .collect();
    SosFormula::new(ring.clone(), prob.r, prob.s, prob.n, tensor).expect("shape matches")
}

const TARGET_PREFIXES: usize = 64;

pub fn search(prob: &SearchProblem) -> Result<SearchOutcome, SearchError> {
    let SearchProblem { r, s, n, p, ref options } = *prob;
    if r == 0 || s == 0 || n == 0 {
        return Err(SearchError::NonPositive(r, s, n));
    }
    let ring = CoeffRing::prime_field(p)?;
    if r > n || s > n {
        return Ok(SearchOutcome { formulas: Vec::new(), exhausted: true, timed_out: false });
    }
    let start = Instant::now();
    let timed_out = AtomicBool::new(false);
    let first = usize::from(options.canonical_first_matrix);
    let slots: Vec<(usize, usize)> = (first..r).flat_map(|i| (0..s).map(move |c| (i, c))).collect();
    let ctx = Ctx { prob, slots, deadline: options.time_budget.map(|b| start + b), timed_out: &timed_out };

    let mut root: Partial = vec![Vec::new(); r];
    if options.canonical_first_matrix {
        root[0] = (0..s)
            .map(|c| {
                let mut e = vec![0; n];
                e[c] = 1;
                e
            })
            .collect();
    }

    // breadth-first expansion into ordered prefixes
    let mut prefixes = vec![root];
    let mut depth = 0;
    while prefixes.len() < TARGET_PREFIXES && depth < ctx.slots.len() && !ctx.expired() {
        let (i, c) = ctx.slots[depth];
        prefixes = prefixes
            .into_iter()
            .flat_map(|pre| {
                ctx.candidates(&pre, i, c).into_iter().map(move |x| {
                    let mut next = pre.clone();
                    next[i].push(x);
                    next
                })
            })
            .collect();
        depth += 1;
    }

    let max = options.max_solutions.unwrap_or(usize::MAX);
    let counts: Vec<AtomicUsize> = (0..prefixes.len()).map(|_| AtomicUsize::new(0)).collect();
    let done: Vec<AtomicBool> = (0..prefixes.len()).map(|_| AtomicBool::new(false)).collect();
    let cut = AtomicBool::new(false);

    let per_prefix: Vec<Vec<Partial>> = prefixes
        .into_par_iter()
        .enumerate()
        .map(|(idx, mut pre)| {
            // stop once finished earlier prefixes already supply `max` solutions
            let stop = |local: usize| {
                counts[idx].store(local, Ordering::Relaxed);
                if local >= max {
                    cut.store(true, Ordering::Relaxed);
                    return true;
                }
                let mut before = 0;
                for j in 0..idx {
                    if !done[j].load(Ordering::Acquire) {
                        return false;
                    }
                    before += counts[j].load(Ordering::Relaxed);
                    if before >= max {
                        cut.store(true, Ordering::Relaxed);
                        return true;
                    }
                }
                false
            };
            let mut found = Vec::new();
            ctx.dfs(&mut pre, depth, &mut found, &stop);
            counts[idx].store(found.len(), Ordering::Relaxed);
            done[idx].store(true, Ordering::Release);
            found
        })
        .collect();

    let mut all: Vec<Partial> = per_prefix.into_iter().flatten().collect();
    if all.len() > max {
        all.truncate(max);
        cut.store(true, Ordering::Relaxed);
    }
    let mut formulas: Vec<SosFormula> = all.iter().map(|m| to_formula(prob, &ring, m)).collect();
    formulas.sort_by_cached_key(|f| f.canonical_key());
    formulas.dedup();
    let timed_out = timed_out.load(Ordering::Relaxed);
    let exhausted = !timed_out && !cut.load(Ordering::Relaxed);
    Ok(SearchOutcome { formulas, exhausted, timed_out })
}

/// One JSON document per line.
pub fn to_json_lines(formulas: &[SosFormula]) -> String {
    formulas.iter().map(|f| to_json(f) + "\n").collect()
}
