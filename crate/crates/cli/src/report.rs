use std::fmt::Write as _;

use invol_core::criterion::PermutationCheck;
use invol_core::{
    check_involution, check_permutation, decompose, ConditionCheck, CriterionReport, Error, Field, Oracle, PermReport,
    RhsForm, SparsePoly,
};
use serde::Serialize;

use crate::error::{CliResult, ExitStatus};

pub const SCHEMA: u32 = 1;

/// When to run the exhaustive oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OracleMode {
    /// Only when `q` is within the cap.
    #[default]
    Auto,
    /// Always; fails if `q` exceeds the cap.
    Force,
    Skip,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    pub mode: OracleMode,
    pub cap: u64,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions { mode: OracleMode::Auto, cap: Oracle::default().cap }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldInfo {
    pub descriptor: String,
    pub p: u64,
    pub n: u32,
    pub q: u64,
    pub modulus: Vec<u32>,
    pub alpha: u32,
}

impl FieldInfo {
    pub fn of(field: &Field) -> Self {
        FieldInfo {
            descriptor: field.descriptor(),
            p: field.p(),
            n: field.n(),
            q: field.q(),
            modulus: field.modulus().to_vec(),
            alpha: field.alpha().encoding(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormInfo {
    pub r: u64,
    pub s: u64,
    pub d: u64,
    pub h: String,
}

impl FormInfo {
    pub fn of(field: &Field, rhs: &RhsForm) -> Self {
        FormInfo { r: rhs.r(), s: rhs.s(), d: rhs.d(), h: rhs.h().display(field) }
    }
}

/// One self-contained result record.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub command: String,
    pub field: FieldInfo,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<String>,
    pub polynomial: Option<String>,
    pub form: Option<FormInfo>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub conditions: Vec<ConditionCheck>,
    pub criterion: Option<CriterionReport>,
    pub permutation: Option<PermutationCheck>,
    pub oracle: Option<PermReport>,
    pub involution: Option<bool>,
    pub status: ExitStatus,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl RunReport {
    pub fn new(command: &str, field: &Field) -> Self {
        RunReport {
            schema: SCHEMA,
            command: command.to_string(),
            field: FieldInfo::of(field),
            input: None,
            polynomial: None,
            form: None,
            conditions: Vec::new(),
            criterion: None,
            permutation: None,
            oracle: None,
            involution: None,
            status: ExitStatus::Precondition,
            notes: Vec::new(),
            timing_ms: None,
        }
    }

    /// A report for a command that stopped before producing a polynomial.
    pub fn failed(command: &str, field: &Field, conditions: Vec<ConditionCheck>, err: &Error) -> Self {
        let mut report = RunReport::new(command, field);
        report.conditions = conditions;
        report.status = crate::error::CliError::from(err.clone()).status;
        report.notes.push(err.to_string());
        report
    }

    pub fn exit_code(&self) -> i32 {
        self.status.code()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let f = &self.field;
        let _ = writeln!(out, "command      {}", self.command);
        let _ = writeln!(
            out,
            "field        {} (p = {}, n = {}, q = {}, alpha = {})",
            f.descriptor, f.p, f.n, f.q, f.alpha
        );
        if let Some(input) = &self.input {
            let _ = writeln!(out, "input        {input}");
        }
        if let Some(poly) = &self.polynomial {
            let _ = writeln!(out, "polynomial   {poly}");
        }
        if let Some(form) = &self.form {
            let _ = writeln!(out, "form         x^{} h(x^{}), d = {}, h = {}", form.r, form.s, form.d, form.h);
        }
        if !self.conditions.is_empty() {
            let _ = writeln!(out, "conditions");
            for c in &self.conditions {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                let _ = writeln!(out, "  {mark} {c}");
            }
        }
        if let Some(c) = &self.criterion {
            let phi = match c.phi_all_one {
                Some(v) => v.to_string(),
                None => "n/a".to_string(),
            };
            let _ = writeln!(
                out,
                "criterion    r^2 = 1 mod s: {}, phi = 1 on mu_d: {phi}, involution: {}",
                c.r_condition, c.verdict
            );
            if let Some(z) = c.failing_z {
                let _ = writeln!(out, "             phi != 1 at z = {z}");
            }
            if let Some(z) = c.h_root {
                let _ = writeln!(out, "             h has a root at z = {z}");
            }
        }
        if let Some(p) = &self.permutation {
            let _ = writeln!(out, "permutation  gcd(r, s) = 1: {}, permutes F_q: {}", p.gcd_condition, p.verdict);
        }
        match &self.oracle {
            Some(o) => {
                let _ = writeln!(
                    out,
                    "oracle       permutation: {}, involution: {}, fixed points: {}",
                    o.is_permutation,
                    o.is_involution.map_or("n/a".into(), |v| v.to_string()),
                    o.fixed_point_count.map_or("n/a".into(), |v| v.to_string()),
                );
                if let Some(w) = &o.witness {
                    let _ = writeln!(out, "             witness {w:?}");
                }
            }
            None => {
                let _ = writeln!(out, "oracle       not run");
            }
        }
        let verdict = self.involution.map_or("undecided".into(), |v| v.to_string());
        let _ = writeln!(out, "involution   {verdict}");
        let _ = writeln!(out, "status       {} (exit {})", self.status.label(), self.status.code());
        for note in &self.notes {
            let _ = writeln!(out, "note         {note}");
        }
        if let Some(ms) = self.timing_ms {
            let _ = writeln!(out, "time         {ms:.3} ms");
        }
        out
    }
}

fn run_oracle(field: &Field, poly: &SparsePoly, opts: OracleOptions) -> CliResult<Option<PermReport>> {
    let oracle = Oracle::new(opts.cap);
    match opts.mode {
        OracleMode::Skip => Ok(None),
        OracleMode::Auto if field.q() > opts.cap => Ok(None),
        _ => Ok(Some(oracle.is_involution(field, poly)?)),
    }
}

/// Fills in form, criterion, oracle, verdict and status for `poly`. The
/// criterion uses `rhs` when given, otherwise the maximal-s decomposition.
pub fn evaluate(
    report: &mut RunReport,
    field: &Field,
    poly: &SparsePoly,
    rhs: Option<&RhsForm>,
    opts: OracleOptions,
) -> CliResult<()> {
    report.polynomial = Some(poly.display(field));
    let rhs = match rhs {
        Some(rhs) => Some(rhs.clone()),
        None => match decompose(field, poly) {
            Ok(rhs) => Some(rhs),
            Err(e @ (Error::HasConstantTerm | Error::ZeroPolynomial)) => {
                report.notes.push(format!("no x^r h(x^s) form: {e}"));
                None
            }
            Err(e) => return Err(e.into()),
        },
    };
    if let Some(rhs) = &rhs {
        report.form = Some(FormInfo::of(field, rhs));
        report.criterion = Some(check_involution(field, rhs));
        report.permutation = Some(check_permutation(field, rhs));
    }
    report.oracle = run_oracle(field, poly, opts)?;
    report.involution = report.criterion.as_ref().map(|c| c.verdict).or(report.oracle.as_ref().and_then(|o| o.is_involution));
    let permutes = report
        .permutation
        .as_ref()
        .map(|p| p.verdict)
        .or(report.oracle.as_ref().map(|o| o.is_permutation));
    let mismatch = match (&report.criterion, &report.permutation, &report.oracle) {
        (Some(c), Some(p), Some(o)) => Some(c.verdict) != o.is_involution || p.verdict != o.is_permutation,
        _ => false,
    };
    report.status = if mismatch {
        report.notes.push("criterion and oracle disagree".into());
        ExitStatus::Mismatch
    } else {
        match (report.involution, permutes) {
            (Some(true), _) => ExitStatus::Involution,
            (Some(false), Some(true)) => ExitStatus::PermutationOnly,
            (Some(false), Some(false)) => ExitStatus::NotPermutation,
            _ => {
                report.notes.push("neither the criterion nor the oracle could decide this input".into());
                ExitStatus::Precondition
            }
        }
    };
    Ok(())
}
