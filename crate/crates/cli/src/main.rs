use std::fs;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use drinfeld_core::census::{
    brute_force_module_census, chi_census, CensusReport, SweepReport,
    WorkBudget, DEFAULT_MAX_WORK,
};
use drinfeld_core::endo::{measured_conductor, order_lattice, OrderCandidate, OrderDescription};
use drinfeld_core::report::{default_suite, discrepancy_report, write_csv, GridOptions, GridPoint};
use drinfeld_core::weil::{classify, ClassKind};
use drinfeld_core::{AField, APoly, DrinfeldModule, Error, FieldCtx};

#[derive(Parser)]
#[command(name = "drinfeld", version, about = "Exact computations with rank-2 Drinfeld modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Field tower data for F_p ⊂ F_q ⊂ F_{q^n}
    FieldInfo {
        #[command(flatten)]
        base: BaseArgs,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Frobenius characteristic polynomial of one module
    Charpoly {
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Label a candidate (c, mu)
    Classify {
        #[command(flatten)]
        char_p: CharArgs,
        #[arg(long)]
        c: String,
        #[arg(long)]
        mu: u32,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Enumerate the isogeny classes of (P, m)
    Census {
        #[command(flatten)]
        char_p: CharArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Euler-Poincaré census with fibers and closed forms
    ChiCensus {
        #[command(flatten)]
        char_p: CharArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Characteristic polynomials of every module, against the enumeration
    Sweep {
        #[command(flatten)]
        char_p: CharArgs,
        #[arg(long, default_value_t = 0)]
        root: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Endomorphism order of one ordinary module
    Endo {
        #[command(flatten)]
        module: ModuleArgs,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Summary rows for a list of points (default: the built-in suite)
    Grid {
        /// A point `p,s,P,m`; repeatable
        #[arg(long = "point")]
        points: Vec<String>,
        #[arg(long)]
        brute_force: bool,
        #[arg(long)]
        endo: bool,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Args)]
struct BaseArgs {
    #[arg(long)]
    p: u32,
    #[arg(long, default_value_t = 1)]
    s: u32,
}

#[derive(Args)]
struct CharArgs {
    #[command(flatten)]
    base: BaseArgs,
    /// The A-characteristic, e.g. `T^2+1` or `[1,0,1]`
    #[arg(long = "P")]
    char_p: String,
    #[arg(long)]
    m: u32,
}

#[derive(Args)]
struct ModuleArgs {
    #[command(flatten)]
    char_p: CharArgs,
    #[arg(long)]
    a2: u32,
    #[arg(long)]
    a3: u32,
    #[arg(long, default_value_t = 0)]
    root: usize,
}

#[derive(Args)]
struct OutArgs {
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[arg(long)]
    out: Option<String>,
    #[arg(long, default_value_t = DEFAULT_MAX_WORK)]
    max_work: u128,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

type Res<T> = Result<T, Error>;

fn field(args: &CharArgs) -> Res<AField> {
    let base = FieldCtx::new(args.base.p, args.base.s, 1)?;
    let p = APoly::parse(&base, &args.char_p)?;
    let d = p.degree().ok_or(Error::ZeroPolynomial)? as u32;
    if args.m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    let ctx = FieldCtx::new(args.base.p, args.base.s, args.m * d)?;
    let p = APoly::parse(&ctx, &args.char_p)?;
    AField::new(Arc::new(ctx), p, args.m)
}

fn module(args: &ModuleArgs) -> Res<DrinfeldModule> {
    let f = field(&args.char_p)?;
    let ctx = f.ctx();
    let a2 = ctx.element(drinfeld_core::Level::Ext, args.a2 as u64)?;
    let a3 = ctx.element(drinfeld_core::Level::Ext, args.a3 as u64)?;
    f.module(args.root, a2, a3)
}

fn json<T: Serialize>(value: &T) -> Res<String> {
    serde_json::to_string_pretty(value)
        .map(|s| s + "\n")
        .map_err(|e| Error::InvalidParameter(format!("serializing: {e}")))
}

fn emit(out: &OutArgs, text: String) -> Res<()> {
    match &out.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::InvalidParameter(format!("writing {path}: {e}"))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct FieldInfo {
    p: u32,
    s: u32,
    n: u32,
    q: u32,
    size: u32,
    modulus_q: String,
    modulus_l: String,
}

#[derive(Serialize)]
struct CharPolyOut {
    module: String,
    c: APoly,
    mu: u32,
    #[serde(rename = "P")]
    char_p: APoly,
    m: u32,
    polynomial: String,
    solutions: usize,
    supersingular: bool,
    height: usize,
    label: ClassKind,
}

#[derive(Serialize)]
struct ClassifyOut {
    c: APoly,
    mu: u32,
    #[serde(rename = "P")]
    char_p: APoly,
    m: u32,
    label: ClassKind,
    reason: String,
}

#[derive(Serialize)]
struct ClassRow {
    c: APoly,
    mu: u32,
    label: ClassKind,
    chi: APoly,
}

#[derive(Serialize)]
struct EndoOut {
    module: String,
    #[serde(flatten)]
    order: OrderDescription,
    lattice: Vec<OrderCandidate>,
}

#[derive(Serialize)]
struct EndoRow {
    module: String,
    disc: APoly,
    g: APoly,
    omega: APoly,
    measured_f: APoly,
    is_maximal: bool,
}

#[derive(Serialize)]
struct RealizedRow {
    c: APoly,
    mu: u32,
    label: ClassKind,
    modules: usize,
}

fn coeff_list(v: &[u32]) -> String {
    let parts: Vec<String> = v.iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn class_rows(r: &CensusReport) -> Vec<ClassRow> {
    r.class_list
        .iter()
        .map(|c| ClassRow {
            c: c.c.clone(),
            mu: c.mu,
            label: c.label,
            chi: c.chi.clone(),
        })
        .collect()
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or("-".to_string(), T::to_string)
}

fn human_census(r: &CensusReport, with_chi: bool) -> String {
    let mut s = format!(
        "q={} P={} m={} d={}\n",
        r.params.q, r.params.char_p, r.params.m, r.params.d
    );
    for c in &r.class_list {
        s += &format!("  c={:<12} mu={}  {:<8}", c.c.to_string(), c.mu, c.label.as_str());
        if with_chi {
            s += &format!("  chi={}", c.chi);
        }
        s += "\n";
    }
    s += &format!(
        "classes: {} ({} ordinary, {} supersingular), closed form {}\n",
        r.n_classes,
        r.n_ordinary,
        r.n_supersingular,
        opt(&r.closed_form_classes)
    );
    if with_chi {
        s += &format!(
            "chi: {}, closed form {}, H={} B={}\n",
            r.n_chi,
            opt(&r.closed_form_chi),
            opt(&r.h),
            opt(&r.b)
        );
        for f in &r.fiber_histogram {
            s += &format!("  fiber {}: {}\n", f.chi, f.size);
        }
    }
    for d in &r.discrepancies {
        s += &format!("discrepancy {}: {}\n", d.code, d.detail);
    }
    s
}

fn human_sweep(r: &SweepReport) -> String {
    let mut s = format!(
        "swept {} modules ({} supersingular, {} with non-unique solutions)\n",
        r.modules_swept,
        r.supersingular_modules,
        r.non_unique_modules.len()
    );
    for c in &r.realized {
        s += &format!("  c={:<12} mu={}  {:<8} {} modules\n", c.c.to_string(), c.mu, c.label.as_str(), c.modules);
    }
    s += &format!(
        "not realized: {}, not predicted: {}\n",
        r.not_realized.len(),
        r.not_predicted.len()
    );
    s
}

fn run(cli: Cli) -> Res<()> {
    match cli.command {
        Command::FieldInfo { base, n, out } => {
            let ctx = FieldCtx::new(base.p, base.s, n)?;
            let info = FieldInfo {
                p: ctx.p(),
                s: ctx.s(),
                n: ctx.n(),
                q: ctx.q(),
                size: ctx.size(),
                modulus_q: coeff_list(ctx.modulus_q()),
                modulus_l: coeff_list(ctx.modulus_l()),
            };
            let text = match out.format {
                Format::Json => json(&info)?,
                Format::Csv => write_csv(&[info])?,
                Format::Human => format!(
                    "F_{} ⊂ F_{} ⊂ F_{}^{} ({} elements)\nmodulus of F_q over F_p: {}\nmodulus of L over F_q: {}\n",
                    info.p, info.q, info.q, info.n, info.size, info.modulus_q, info.modulus_l
                ),
            };
            emit(&out, text)
        }
        Command::Charpoly { module: args, out } => {
            let phi = module(&args)?;
            let ctx = phi.ctx();
            let (cp, solutions) = phi.char_poly_counted()?;
            let supersingular = phi.is_supersingular_given(&cp)?;
            let label = classify(ctx, &cp.c, cp.mu(ctx), &cp.p, cp.m).kind;
            let res = CharPolyOut {
                module: phi.to_string(),
                polynomial: cp.to_string(),
                c: cp.c,
                mu: cp.mu,
                char_p: cp.p,
                m: cp.m,
                solutions,
                supersingular,
                height: phi.height(),
                label,
            };
            let text = match out.format {
                Format::Json => json(&res)?,
                Format::Csv => write_csv(&[res])?,
                Format::Human => format!(
                    "{}\nPhi_T = {}\nP_Phi(X) = {}\nc = {}, mu = {}\n{} ({})\n",
                    res.module,
                    phi.phi_t(),
                    res.polynomial,
                    res.c,
                    res.mu,
                    if supersingular { "supersingular" } else { "ordinary" },
                    res.label
                ),
            };
            emit(&out, text)
        }
        Command::Classify { char_p, c, mu, out } => {
            let f = field(&char_p)?;
            let ctx = f.ctx();
            let c = APoly::parse(ctx, &c)?;
            let mu_elem = ctx.element(drinfeld_core::Level::Base, mu as u64)?;
            let label = classify(ctx, &c, mu_elem, f.characteristic(), f.m());
            let res = ClassifyOut {
                c,
                mu,
                char_p: f.characteristic().clone(),
                m: f.m(),
                label: label.kind,
                reason: label.reason,
            };
            let text = match out.format {
                Format::Json => json(&res)?,
                Format::Csv => write_csv(&[res])?,
                Format::Human => format!("{} ({})\n", res.label, res.reason),
            };
            emit(&out, text)
        }
        Command::Census { char_p, out } => {
            let f = field(&char_p)?;
            let r = chi_census(f.ctx(), f.characteristic(), f.m(), WorkBudget(out.max_work))?;
            let text = match out.format {
                Format::Json => json(&r)?,
                Format::Csv => write_csv(&class_rows(&r))?,
                Format::Human => human_census(&r, false),
            };
            emit(&out, text)
        }
        Command::ChiCensus { char_p, out } => {
            let f = field(&char_p)?;
            let r = chi_census(f.ctx(), f.characteristic(), f.m(), WorkBudget(out.max_work))?;
            let text = match out.format {
                Format::Json => json(&r)?,
                Format::Csv => write_csv(&class_rows(&r))?,
                Format::Human => human_census(&r, true),
            };
            emit(&out, text)
        }
        Command::Sweep { char_p, root, out } => {
            let f = field(&char_p)?;
            let r = brute_force_module_census(&f, root, WorkBudget(out.max_work))?;
            let text = match out.format {
                Format::Json => json(&r)?,
                Format::Csv => write_csv(
                    &r.realized
                        .iter()
                        .map(|c| RealizedRow {
                            c: c.c.clone(),
                            mu: c.mu,
                            label: c.label,
                            modules: c.modules,
                        })
                        .collect::<Vec<_>>(),
                )?,
                Format::Human => human_sweep(&r),
            };
            emit(&out, text)
        }
        Command::Endo { module: args, out } => {
            let phi = module(&args)?;
            let od = measured_conductor(&phi)?;
            let lattice = order_lattice(phi.ctx(), &od.g);
            let text = match out.format {
                Format::Json => json(&EndoOut {
                    module: phi.to_string(),
                    order: od,
                    lattice,
                })?,
                Format::Csv => write_csv(&[EndoRow {
                    module: phi.to_string(),
                    disc: od.disc,
                    g: od.g,
                    omega: od.omega,
                    measured_f: od.measured_f,
                    is_maximal: od.is_maximal,
                }])?,
                Format::Human => {
                    let mut s = format!(
                        "disc = {}\ng = {}\nomega = {}\nconductor = {}{}\n",
                        od.disc,
                        od.g,
                        od.omega,
                        od.measured_f,
                        if od.is_maximal { " (maximal)" } else { "" }
                    );
                    for o in lattice {
                        s += &format!("  {}\n", o.description);
                    }
                    s
                }
            };
            emit(&out, text)
        }
        Command::Grid {
            points,
            brute_force,
            endo,
            out,
        } => {
            let points: Vec<GridPoint> = if points.is_empty() {
                default_suite()
            } else {
                points
                    .iter()
                    .map(|p| p.parse())
                    .collect::<Res<Vec<_>>>()?
            };
            let report = discrepancy_report(
                &points,
                GridOptions { brute_force, endo },
                WorkBudget(out.max_work),
            )?;
            for row in report.rows.iter().filter(|r| r.status == "skipped") {
                eprintln!("warning: skipped {}: {}", row.point, row.warning);
            }
            let text = match out.format {
                Format::Json => report.to_json()?,
                Format::Csv => report.to_csv()?,
                Format::Human => {
                    let mut s = String::new();
                    for r in &report.rows {
                        if r.status == "skipped" {
                            s += &format!("{:<16} skipped ({})\n", r.point, r.warning);
                            continue;
                        }
                        s += &format!(
                            "{:<16} classes {} vs {} {:<9} chi {} vs {} {:<9} fibers {}",
                            r.point,
                            opt(&r.n_classes),
                            opt(&r.closed_form_classes),
                            r.classes_match,
                            opt(&r.n_chi),
                            opt(&r.closed_form_chi),
                            r.chi_match,
                            r.fiber_relation
                        );
                        if brute_force {
                            s += &format!(" sweep {}", r.sweep);
                        }
                        if endo {
                            s += &format!(" conductors {}", r.realized_conductors);
                        }
                        s += "\n";
                    }
                    s
                }
            };
            emit(&out, text)
        }
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ScaleGuard { .. } => 3,
        Error::CrossCheck(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::CrossCheck("x".into())), 4);
        let guard = Error::ScaleGuard {
            what: "x".into(),
            needed: 2,
            budget: 1,
        };
        assert_eq!(exit_code(&guard), 3);
        assert_eq!(exit_code(&Error::Characteristic2), 2);
    }
}
