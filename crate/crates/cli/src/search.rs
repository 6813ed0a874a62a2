//! Small-field sweep: every divisor s of q-1, every r in [1, q-1] and a
//! grid (or seeded sample) of h, cross-checking criterion and oracle on
//! every instance visited.

use std::collections::BTreeSet;

use invol_core::oracle::report_from_table;
use invol_core::{check_involution, check_permutation, numth, Elem, Field, RhsForm, SparsePoly};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, CliResult, ExitStatus};
use crate::report::{evaluate, FieldInfo, OracleOptions, RunReport, SCHEMA};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub seed: u64,
    /// Largest field the search accepts.
    pub max_q: u64,
    /// Restrict to one divisor of q-1.
    pub s: Option<u64>,
    /// Size of the h-grid above which a cell is sampled instead.
    pub grid_limit: u64,
    /// Random h per cell when sampling.
    pub samples: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { seed: 0, max_q: 64, s: None, grid_limit: 6561, samples: 200 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchSummary {
    pub schema: u32,
    pub field: FieldInfo,
    pub seed: u64,
    pub cells: usize,
    pub visited: u64,
    pub involutions: usize,
    pub mismatches: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SearchResult {
    pub summary: SearchSummary,
    /// One record per distinct involution, ordered by (s, r, h).
    pub reports: Vec<RunReport>,
}

impl SearchResult {
    pub fn status(&self) -> ExitStatus {
        if self.summary.mismatches > 0 {
            ExitStatus::Mismatch
        } else {
            ExitStatus::Involution
        }
    }

    pub fn to_text(&self) -> String {
        let s = &self.summary;
        let mut out = format!(
            "search over {} (alpha = {}), seed {}\n{} cells, {} instances, {} distinct involutions, {} mismatches\n",
            s.field.descriptor, s.field.alpha, s.seed, s.cells, s.visited, s.involutions, s.mismatches
        );
        out.push_str("s      r      d      f\n");
        for r in &self.reports {
            let form = r.form.as_ref().expect("search reports carry a form");
            out.push_str(&format!(
                "{:<6} {:<6} {:<6} {}\n",
                form.s,
                form.r,
                form.d,
                r.polynomial.as_deref().unwrap_or("")
            ));
        }
        out
    }

    /// JSON lines: one record per involution, then the summary.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.to_json_line());
            out.push('\n');
        }
        out.push_str(&serde_json::to_string(&self.summary).expect("summary serializes"));
        out.push('\n');
        out
    }
}

struct Cell {
    s: u64,
    r: u64,
    visited: u64,
    mismatches: u64,
    found: Vec<RhsForm>,
}

/// The reduced coefficient grid {0, 1, alpha}, deduplicated (alpha = 1 in F_2).
fn grid_values(field: &Field) -> Vec<Elem> {
    let mut v = vec![Elem::ZERO, Elem::ONE, field.alpha()];
    v.dedup();
    v
}

fn grid_size(k: usize, d: u64) -> Option<u64> {
    u32::try_from(d).ok().and_then(|d| (k as u64).checked_pow(d))
}

/// Every h with support in {0..d-1} and coefficients from `values`, except 0.
fn full_grid(field: &Field, d: u64, values: &[Elem], total: u64) -> Vec<SparsePoly> {
    let k = values.len() as u64;
    (1..total)
        .map(|mut code| {
            let mut terms = Vec::new();
            for i in 0..d {
                terms.push((i, values[(code % k) as usize]));
                code /= k;
            }
            SparsePoly::from_terms(field, terms)
        })
        .collect()
}

/// All of F_q as coefficients when that grid fits the limit, else
/// {0, 1, alpha} for q <= 16, else a seeded sample.
fn candidates(field: &Field, d: u64, opts: &SearchOptions, rng: &mut ChaCha8Rng) -> Vec<SparsePoly> {
    let everything: Vec<Elem> = field.elements().collect();
    if let Some(total) = grid_size(everything.len(), d).filter(|&t| t <= opts.grid_limit) {
        return full_grid(field, d, &everything, total);
    }
    let values = grid_values(field);
    match grid_size(values.len(), d) {
        Some(total) if field.q() <= 16 && total <= opts.grid_limit => full_grid(field, d, &values, total),
        _ => (0..opts.samples)
            .map(|_| {
                let count = rng.gen_range(1..=d.min(4));
                let terms: Vec<(u64, Elem)> = (0..count)
                    .map(|_| (rng.gen_range(0..d), field.elem(rng.gen_range(1..field.q())).expect("in range")))
                    .collect();
                SparsePoly::from_terms(field, terms)
            })
            .filter(|h| !h.is_zero())
            .collect(),
    }
}

fn run_cell(field: &Field, s: u64, r: u64, opts: &SearchOptions) -> Cell {
    let d = (field.q() - 1) / s;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ (s << 32 | r).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let mut cell = Cell { s, r, visited: 0, mismatches: 0, found: Vec::new() };
    for h in candidates(field, d, opts, &mut rng) {
        let rhs = RhsForm::new(field, r, s, &h).expect("s divides q-1");
        let crit = check_involution(field, &rhs);
        let perm = check_permutation(field, &rhs);
        let values: Vec<Elem> = field.elements().map(|x| rhs.eval(field, x)).collect();
        let oracle = report_from_table(field, &values);
        cell.visited += 1;
        if Some(crit.verdict) != oracle.is_involution || perm.verdict != oracle.is_permutation {
            cell.mismatches += 1;
        }
        if crit.verdict {
            cell.found.push(rhs);
        }
    }
    cell
}

/// Runs the sweep. Cells are processed in parallel and merged in (s, r)
/// order; each cell has its own seeded generator, so the output depends
/// only on the field and options.
pub fn cmd_search(field: &str, opts: &SearchOptions) -> CliResult<SearchResult> {
    let field = Field::parse(field)?;
    if field.q() > opts.max_q {
        return Err(CliError::precondition(format!(
            "field of size {} exceeds the search cap {}",
            field.q(),
            opts.max_q
        )));
    }
    let divisors: Vec<u64> = match opts.s {
        Some(s) if s == 0 || (field.q() - 1) % s != 0 => {
            return Err(CliError::precondition(format!("s = {s} does not divide q-1 = {}", field.q() - 1)))
        }
        Some(s) => vec![s],
        None => numth::divisors(field.q() - 1),
    };
    let cells: Vec<(u64, u64)> = divisors.iter().flat_map(|&s| (1..field.q().max(2)).map(move |r| (s, r))).collect();
    let results: Vec<Cell> = cells.par_iter().map(|&(s, r)| run_cell(&field, s, r, opts)).collect();

    let mut seen = BTreeSet::new();
    let mut reports = Vec::new();
    let (mut visited, mut mismatches) = (0, 0);
    for cell in &results {
        visited += cell.visited;
        mismatches += cell.mismatches;
        for rhs in &cell.found {
            let poly = rhs.expand(&field);
            let key: Vec<(u64, u32)> = poly.terms().map(|(e, c)| (e, c.encoding())).collect();
            if !seen.insert(key) {
                continue;
            }
            let mut report = RunReport::new("search", &field);
            evaluate(&mut report, &field, &poly, Some(rhs), OracleOptions::default())?;
            report.notes.push(format!("cell s = {}, r = {}", cell.s, cell.r));
            reports.push(report);
        }
    }
    Ok(SearchResult {
        summary: SearchSummary {
            schema: SCHEMA,
            field: FieldInfo::of(&field),
            seed: opts.seed,
            cells: cells.len(),
            visited,
            involutions: reports.len(),
            mismatches,
        },
        reports,
    })
}
