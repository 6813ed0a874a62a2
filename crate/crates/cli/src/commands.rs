use std::time::Instant;

use invol_core::construct::{self, valid_params};
use invol_core::families::{self, FamilyId};
use invol_core::{numth, ConstructionParams, Error, Field, FamilySpec, SparsePoly, SubgroupInvolution};
use serde::Serialize;

use crate::error::{CliError, CliResult};
use crate::report::{evaluate, FieldInfo, OracleOptions, RunReport, SCHEMA};

fn parse_field(spec: &str) -> CliResult<Field> {
    Ok(Field::parse(spec)?)
}

fn elapsed_ms(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SubgroupInfo {
    pub d: u64,
    pub s: u64,
    pub omega: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FieldReport {
    pub schema: u32,
    pub field: FieldInfo,
    pub alpha_order: u64,
    pub subgroups: Vec<SubgroupInfo>,
}

impl FieldReport {
    pub fn to_text(&self) -> String {
        let f = &self.field;
        let mut out = format!(
            "field        {}\np, n, q      {}, {}, {}\nmodulus      {:?} (constant term first)\nalpha        {} (order {})\n",
            f.descriptor, f.p, f.n, f.q, f.modulus, f.alpha, self.alpha_order
        );
        out.push_str("subgroups    d     s     omega\n");
        for g in &self.subgroups {
            out.push_str(&format!("             {:<5} {:<5} {}\n", g.d, g.s, g.omega));
        }
        out
    }
}

/// Field parameters and the subgroups mu_d with their generators.
pub fn cmd_field(spec: &str) -> CliResult<FieldReport> {
    let field = parse_field(spec)?;
    let subgroups = numth::divisors(field.q() - 1)
        .into_iter()
        .map(|d| {
            let s = (field.q() - 1) / d;
            SubgroupInfo { d, s, omega: field.alpha_pow(s as i128).encoding() }
        })
        .collect();
    Ok(FieldReport {
        schema: SCHEMA,
        field: FieldInfo::of(&field),
        alpha_order: field.order(field.alpha())?,
        subgroups,
    })
}

/// Decomposes `poly`, runs both criteria and (within the cap) the oracle.
/// `s` overrides the maximal decomposition.
pub fn cmd_verify(field: &str, poly: &str, s: Option<u64>, oracle: OracleOptions) -> CliResult<RunReport> {
    let start = Instant::now();
    let field = parse_field(field)?;
    let f = SparsePoly::parse(&field, poly)?;
    let mut report = RunReport::new("verify", &field);
    report.input = Some(poly.to_string());
    let rhs = match s {
        Some(s) => Some(invol_core::poly::decompose_with(&field, &f, s)?),
        None => None,
    };
    evaluate(&mut report, &field, &f, rhs.as_ref(), oracle)?;
    report.timing_ms = Some(elapsed_ms(start));
    Ok(report)
}

/// The involution sigma on mu_d, as given on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SigmaSpec {
    Inverse,
    Identity,
    Perm(Vec<usize>),
}

impl std::str::FromStr for SigmaSpec {
    type Err = CliError;

    fn from_str(text: &str) -> CliResult<Self> {
        match text {
            "inverse" => Ok(SigmaSpec::Inverse),
            "identity" => Ok(SigmaSpec::Identity),
            _ => {
                let list = text
                    .strip_prefix("perm:")
                    .ok_or_else(|| CliError::input(format!("sigma must be inverse, identity or perm:l0,l1,..., got '{text}'")))?;
                let ell = list
                    .split(',')
                    .map(|t| t.trim().parse().map_err(|_| CliError::input(format!("bad sigma entry '{t}'"))))
                    .collect::<CliResult<Vec<usize>>>()?;
                Ok(SigmaSpec::Perm(ell))
            }
        }
    }
}

impl SigmaSpec {
    fn build(&self, d: usize) -> CliResult<SubgroupInvolution> {
        match self {
            SigmaSpec::Inverse => Ok(SubgroupInvolution::inversion(d)),
            SigmaSpec::Identity => Ok(SubgroupInvolution::identity(d)),
            SigmaSpec::Perm(ell) => {
                if ell.len() != d {
                    return Err(CliError::precondition(format!("sigma has {} entries but d = {d}", ell.len())));
                }
                SubgroupInvolution::new(ell.clone()).map_err(|e| CliError::precondition(e.to_string()))
            }
        }
    }
}

/// Arguments of `construct`. Elements are in the field's text form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructRequest {
    General { s: u64, sigma: SigmaSpec, r: Option<u64>, n: Option<Vec<u64>> },
    D2 { r: u64, a: String, b: String },
    D3 { r: u64, n: [u64; 3] },
    CorR1 { n1: u64 },
    CorRq43 { n0: u64, n1: u64 },
}

impl ConstructRequest {
    fn name(&self) -> &'static str {
        match self {
            ConstructRequest::General { .. } => "construct general",
            ConstructRequest::D2 { .. } => "construct d2",
            ConstructRequest::D3 { .. } => "construct d3",
            ConstructRequest::CorR1 { .. } => "construct cor-r1",
            ConstructRequest::CorRq43 { .. } => "construct cor-rq43",
        }
    }
}

pub fn cmd_construct(field: &str, request: &ConstructRequest, oracle: OracleOptions) -> CliResult<RunReport> {
    let start = Instant::now();
    let field = parse_field(field)?;
    let (poly, rhs, notes) = match request {
        ConstructRequest::General { s, sigma, r, n } => {
            let q1 = field.q() - 1;
            if *s == 0 || q1 % s != 0 {
                return Err(Error::NotADivisor { d: *s, modulus: q1 }.into());
            }
            let sigma = sigma.build((q1 / s) as usize)?;
            let space = valid_params(*s, &sigma, *r)?;
            let params = match n {
                Some(n) => ConstructionParams { r: space.r, n: n.clone() },
                None => space.default_params(),
            };
            let rhs = construct::construct_general(&field, *s, &sigma, &params)?;
            let note = format!("r = {}, n = {:?}, {} parameter choices for this (s, sigma, r)", params.r, params.n, space.size());
            (rhs.expand(&field), Some(rhs), vec![note])
        }
        ConstructRequest::D2 { r, a, b } => {
            let (a, b) = (field.parse_elem(a)?, field.parse_elem(b)?);
            (construct::construct_d2(&field, *r, a, b)?, None, Vec::new())
        }
        ConstructRequest::D3 { r, n } => (construct::construct_d3(&field, *r, n[0], n[1], n[2])?, None, Vec::new()),
        ConstructRequest::CorR1 { n1 } => (construct::construct_cor_r1(&field, *n1)?, None, Vec::new()),
        ConstructRequest::CorRq43 { n0, n1 } => (construct::construct_cor_rq43(&field, *n0, *n1)?, None, Vec::new()),
    };
    let mut report = RunReport::new(request.name(), &field);
    report.notes = notes;
    evaluate(&mut report, &field, &poly, rhs.as_ref(), oracle)?;
    report.timing_ms = Some(elapsed_ms(start));
    Ok(report)
}

/// Validates the family hypotheses, then generates and checks the map. A
/// failed hypothesis gives a report with status `Precondition` and the
/// condition table, not an error.
pub fn cmd_family(field: &str, id: &str, params: &str, oracle: OracleOptions) -> CliResult<RunReport> {
    let start = Instant::now();
    let field = parse_field(field)?;
    let spec = FamilySpec::parse(id, params)?;
    let command = format!("family {}", spec.id);
    let conditions = match families::validate(&field, &spec) {
        Ok(c) => c,
        Err(e @ Error::Parse { .. }) => return Err(e.into()),
        Err(e) => return Ok(RunReport::failed(&command, &field, Vec::new(), &e)),
    };
    let out = match families::generate(&field, &spec) {
        Ok(out) => out,
        Err(e @ Error::Parse { .. }) => return Err(e.into()),
        Err(e) => {
            let mut report = RunReport::failed(&command, &field, conditions, &e);
            report.timing_ms = Some(elapsed_ms(start));
            return Ok(report);
        }
    };
    let mut report = RunReport::new(&command, &field);
    report.input = Some(params.to_string());
    report.conditions = conditions;
    if let Some(root) = out.root {
        report.notes.push(format!("h vanishes at {} in mu_(q+1)", field.format_elem_power(root)));
    }
    evaluate(&mut report, &field, &out.poly, out.rhs.as_ref(), oracle)?;
    report.timing_ms = Some(elapsed_ms(start));
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyListing {
    pub id: &'static str,
    pub params: Vec<(&'static str, &'static str)>,
}

/// Every family id with its parameter schema.
pub fn family_list() -> Vec<FamilyListing> {
    FamilyId::ALL.iter().map(|id| FamilyListing { id: id.name(), params: id.schema().to_vec() }).collect()
}

pub fn family_list_text() -> String {
    let mut out = String::new();
    for entry in family_list() {
        out.push_str(entry.id);
        out.push('\n');
        for (k, v) in entry.params {
            out.push_str(&format!("    {k:<7} {v}\n"));
        }
    }
    out
}
