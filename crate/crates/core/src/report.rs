//! Grid reports reconciling enumeration with the closed forms.
//!
//! A grid is a list of points `(p, s, P, m)`. Each point yields one summary
//! row; rows are emitted in input order, and everything inside a row is
//! computed deterministically, so repeated runs are byte-identical.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::census::{
    brute_force_module_census, chi_census, enumeration_work, sweep_work, Rational, WorkBudget,
    EXPONENT_READING,
};
use crate::drinfeld::AField;
use crate::endo::conductor_sweep;
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::poly::{monic_irreducibles, APoly};

/// One grid point, written `p,s,P,m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridPoint {
    pub p: u32,
    pub s: u32,
    pub char_p: String,
    pub m: u32,
}

impl FromStr for GridPoint {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').map(str::trim).collect();
        if parts.len() < 4 {
            return Err(Error::invalid(format!(
                "grid point {text:?} is not of the form p,s,P,m"
            )));
        }
        let num = |s: &str, what: &str| {
            s.parse::<u32>()
                .map_err(|_| Error::invalid(format!("grid point {text:?}: bad {what} {s:?}")))
        };
        Ok(GridPoint {
            p: num(parts[0], "p")?,
            s: num(parts[1], "s")?,
            char_p: parts[2..parts.len() - 1].join(","),
            m: num(parts[parts.len() - 1], "m")?,
        })
    }
}

impl fmt::Display for GridPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{},{}", self.p, self.s, self.char_p, self.m)
    }
}

/// `q ∈ {3, 5}`, `n ≤ 3`: every `(P, m)` with `m deg P = n`, except that for
/// `q = 5, n = 3` only `P = T` and the first irreducible cubic are included.
pub fn default_suite() -> Vec<GridPoint> {
    let mut out = Vec::new();
    for p in [3u32, 5] {
        let ctx = FieldCtx::new(p, 1, 1).expect("small prime field");
        for n in 1..=3u32 {
            for d in (1..=n).filter(|d| n % d == 0) {
                let all: Vec<APoly> = monic_irreducibles(&ctx, d as usize).collect();
                let chosen: Vec<APoly> = if p == 5 && n == 3 {
                    all.into_iter().take(1).collect()
                } else {
                    all
                };
                for char_p in chosen {
                    out.push(GridPoint {
                        p,
                        s: 1,
                        char_p: char_p.to_string(),
                        m: n / d,
                    });
                }
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct GridOptions {
    pub brute_force: bool,
    pub endo: bool,
}

/// One summary row. Field order is the CSV column order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridRow {
    pub point: String,
    pub q: u32,
    #[serde(rename = "P")]
    pub char_p: String,
    pub m: u32,
    pub d: u32,
    pub n: u32,
    pub status: String,
    pub warning: String,
    pub n_classes: Option<usize>,
    pub n_ordinary: Option<usize>,
    pub n_supersingular: Option<usize>,
    pub closed_form_classes: Option<Rational>,
    pub classes_match: String,
    pub n_chi: Option<usize>,
    pub closed_form_chi: Option<Rational>,
    pub chi_match: String,
    #[serde(rename = "H")]
    pub h: Option<usize>,
    #[serde(rename = "B")]
    pub b: Option<usize>,
    pub fiber_relation: String,
    pub discrepancies: String,
    pub modules_swept: Option<usize>,
    pub realized_classes: Option<usize>,
    pub not_realized: Option<usize>,
    pub not_predicted: Option<usize>,
    pub non_unique_modules: Option<usize>,
    pub sweep: String,
    pub ordinary_modules: Option<usize>,
    pub maximal_modules: Option<usize>,
    pub conductor_divides_g: String,
    pub squarefree_maximal: String,
    pub realized_conductors: String,
}

/// CSV header, in [`GridRow`] field order.
pub const GRID_CSV_HEADER: &str = "point,q,P,m,d,n,status,warning,n_classes,n_ordinary,\
n_supersingular,closed_form_classes,classes_match,n_chi,closed_form_chi,chi_match,H,B,\
fiber_relation,discrepancies,modules_swept,realized_classes,not_realized,not_predicted,\
non_unique_modules,sweep,ordinary_modules,maximal_modules,conductor_divides_g,\
squarefree_maximal,realized_conductors";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridReport {
    pub exponent_reading: String,
    pub brute_force: bool,
    pub endo: bool,
    pub max_work: String,
    pub rows: Vec<GridRow>,
}

fn match_flag(flag: Option<bool>) -> String {
    match flag {
        Some(true) => "MATCH",
        Some(false) => "MISMATCH",
        None => "UNDEFINED",
    }
    .to_string()
}

fn holds(flag: bool) -> String {
    if flag { "HOLDS" } else { "FAILS" }.to_string()
}

fn empty_row(point: &GridPoint) -> GridRow {
    GridRow {
        point: point.to_string(),
        q: 0,
        char_p: point.char_p.clone(),
        m: point.m,
        d: 0,
        n: 0,
        status: "ok".into(),
        warning: String::new(),
        n_classes: None,
        n_ordinary: None,
        n_supersingular: None,
        closed_form_classes: None,
        classes_match: String::new(),
        n_chi: None,
        closed_form_chi: None,
        chi_match: String::new(),
        h: None,
        b: None,
        fiber_relation: String::new(),
        discrepancies: String::new(),
        modules_swept: None,
        realized_classes: None,
        not_realized: None,
        not_predicted: None,
        non_unique_modules: None,
        sweep: String::new(),
        ordinary_modules: None,
        maximal_modules: None,
        conductor_divides_g: String::new(),
        squarefree_maximal: String::new(),
        realized_conductors: String::new(),
    }
}

/// Work units a grid point needs under `opts`.
pub fn point_work(q: u32, d: u32, m: u32, opts: GridOptions) -> u128 {
    let mut work = enumeration_work(q, d, m);
    if opts.brute_force {
        work = work.saturating_add(sweep_work(q, m * d));
    }
    if opts.endo {
        work = work.saturating_add(sweep_work(q, m * d));
    }
    work
}

/// Builds one row. Scale-guard refusals become skipped rows; parameter
/// errors and cross-check failures are returned.
pub fn grid_row(point: &GridPoint, opts: GridOptions, budget: WorkBudget) -> Result<GridRow> {
    let mut row = empty_row(point);
    let base = FieldCtx::new(point.p, point.s, 1)?;
    let char_p = APoly::parse(&base, &point.char_p)?;
    let d = char_p.degree().ok_or(Error::ZeroPolynomial)? as u32;
    row.q = base.q();
    row.d = d;
    row.n = point.m * d;
    row.char_p = char_p.to_string();

    let needed = point_work(base.q(), d, point.m, opts);
    if let Err(Error::ScaleGuard { needed, budget, .. }) = budget.check("grid point", needed) {
        row.status = "skipped".into();
        row.warning = format!("needs {needed} work units, budget {budget}");
        return Ok(row);
    }

    let ctx = Arc::new(FieldCtx::with_limit(
        point.p,
        point.s,
        row.n,
        crate::field::DEFAULT_MAX_FIELD_SIZE,
    )?);
    let field = AField::new(ctx.clone(), char_p.clone(), point.m)?;
    let census = chi_census(&ctx, &char_p, point.m, budget)?;
    row.n_classes = Some(census.n_classes);
    row.n_ordinary = Some(census.n_ordinary);
    row.n_supersingular = Some(census.n_supersingular);
    row.classes_match = match_flag(census.classes_match());
    row.closed_form_classes = census.closed_form_classes.clone();
    row.n_chi = Some(census.n_chi);
    row.chi_match = match_flag(census.chi_match());
    row.closed_form_chi = census.closed_form_chi.clone();
    row.h = census.h;
    row.b = census.b;
    row.fiber_relation = match census.fiber_relation_holds() {
        Some(ok) => holds(ok),
        None => "UNASSIGNABLE".into(),
    };
    row.discrepancies = census
        .discrepancies
        .iter()
        .map(|d| d.code.as_str())
        .collect::<Vec<_>>()
        .join(";");

    if opts.brute_force {
        let sweep = brute_force_module_census(&field, 0, budget)?;
        row.modules_swept = Some(sweep.modules_swept);
        row.realized_classes = Some(sweep.realized.len());
        row.not_realized = Some(sweep.not_realized.len());
        row.not_predicted = Some(sweep.not_predicted.len());
        row.non_unique_modules = Some(sweep.non_unique_modules.len());
        row.sweep = if sweep.is_exact() { "EXACT" } else { "DIFFERS" }.into();
    }
    if opts.endo {
        let cs = conductor_sweep(&field, 0)?;
        row.ordinary_modules = Some(cs.ordinary_modules);
        row.maximal_modules = Some(cs.maximal_modules);
        row.conductor_divides_g = holds(cs.not_dividing == 0);
        row.squarefree_maximal = holds(cs.squarefree_not_maximal == 0);
        row.realized_conductors = cs
            .realized
            .iter()
            .map(|r| format!("{}/{}={}", r.g, r.f, r.modules))
            .collect::<Vec<_>>()
            .join(";");
    }
    Ok(row)
}

/// One row per point, in input order.
pub fn discrepancy_report(
    points: &[GridPoint],
    opts: GridOptions,
    budget: WorkBudget,
) -> Result<GridReport> {
    let rows = points
        .iter()
        .map(|p| grid_row(p, opts, budget))
        .collect::<Result<Vec<_>>>()?;
    Ok(GridReport {
        exponent_reading: EXPONENT_READING.to_string(),
        brute_force: opts.brute_force,
        endo: opts.endo,
        max_work: budget.0.to_string(),
        rows,
    })
}

impl GridReport {
    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self)
            .map(|s| s + "\n")
            .map_err(|e| Error::invalid(format!("serializing report: {e}")))
    }

    pub fn to_csv(&self) -> Result<String> {
        write_csv(&self.rows)
    }
}

/// Serializes records with a header row.
pub fn write_csv<T: Serialize>(records: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r)
            .map_err(|e| Error::invalid(format!("writing csv: {e}")))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| Error::invalid(format!("writing csv: {e}")))?;
    String::from_utf8(bytes).map_err(|e| Error::invalid(format!("writing csv: {e}")))
}
