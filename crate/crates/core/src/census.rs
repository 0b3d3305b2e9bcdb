//! Isogeny-class and Euler-Poincaré censuses.
//!
//! Isogeny classes are counted as valid characteristic polynomials. The
//! closed-form counts are evaluated literally in exact rationals and compared
//! with the enumeration, which is treated as the ground truth; every
//! disagreement is recorded as a [`Discrepancy`].

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::drinfeld::{AField, CharPoly};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::poly::{enumerate_polys, APoly};
use crate::weil::{classify, ClassKind, ClassLabel};

/// Default bound for [`WorkBudget`].
pub const DEFAULT_MAX_WORK: u128 = 2_000_000;

/// A budget in work units: candidate `(c, μ)` pairs plus modules swept.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WorkBudget(pub u128);

impl Default for WorkBudget {
    fn default() -> Self {
        WorkBudget(DEFAULT_MAX_WORK)
    }
}

impl WorkBudget {
    pub fn check(self, what: impl Into<String>, needed: u128) -> Result<()> {
        if needed > self.0 {
            return Err(Error::ScaleGuard {
                what: what.into(),
                needed,
                budget: self.0,
            });
        }
        Ok(())
    }
}

/// Candidate `(c, μ)` pairs for `(q, d, m)`: `q^(⌊md/2⌋+1) (q-1)`.
pub fn enumeration_work(q: u32, d: u32, m: u32) -> u128 {
    (q as u128)
        .saturating_pow(m * d / 2 + 1)
        .saturating_mul(q as u128 - 1)
}

/// Modules swept over `L = F_{q^n}` with a fixed `γ`: `q^n (q^n - 1)`.
pub fn sweep_work(q: u32, n: u32) -> u128 {
    let size = (q as u128).saturating_pow(n);
    size.saturating_mul(size.saturating_sub(1))
}

/// An exact rational, serialized as `"num/den"`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn from_count(n: usize) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let (n, den) = s
            .split_once('/')
            .ok_or_else(|| serde::de::Error::custom("expected num/den"))?;
        let n: BigInt = n.parse().map_err(serde::de::Error::custom)?;
        let den: BigInt = den.parse().map_err(serde::de::Error::custom)?;
        if den.is_zero() {
            return Err(serde::de::Error::custom("zero denominator"));
        }
        Ok(Rational(BigRational::new(n, den)))
    }
}

fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn frac(a: i64, b: i64) -> BigRational {
    BigRational::new(BigInt::from(a), BigInt::from(b))
}

/// `q^e` for any integer `e`.
fn qpow(q: u32, e: i64) -> BigRational {
    int(q as i64).pow(e as i32)
}

/// Which closed-form case applies to `(m, d)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ParityCase {
    /// `m` and `d` odd.
    BothOdd,
    /// `m` even, `d` odd.
    MEvenDOdd,
    /// `m` and `d` even.
    BothEven,
    /// `m` odd, `d` even: no closed form is stated for this case.
    MOddDEven,
}

impl ParityCase {
    pub fn of(m: u32, d: u32) -> Self {
        match (m % 2, d % 2) {
            (1, 1) => ParityCase::BothOdd,
            (0, 1) => ParityCase::MEvenDOdd,
            (0, 0) => ParityCase::BothEven,
            _ => ParityCase::MOddDEven,
        }
    }
}

/// How the bracketed exponents of the closed forms are read.
pub const EXPONENT_READING: &str = "floor(m*d/2) and floor((m-2)*d/2)";

/// Closed-form number of characteristic polynomials; `None` when `m` is odd
/// and `d` even.
pub fn closed_form_isogeny_count(q: u32, d: u32, m: u32) -> Option<Rational> {
    let (m, d) = (m as i64, d as i64);
    let q1 = int(q as i64 - 1);
    let e_full = (m * d).div_euclid(2);
    let e_less = ((m - 2) * d).div_euclid(2);
    let value = match ParityCase::of(m as u32, d as u32) {
        ParityCase::BothOdd => q1 * (qpow(q, e_full + 1) - qpow(q, e_less + 1) + int(1)),
        ParityCase::MEvenDOdd => {
            q1 * (frac(q as i64 - 1, 2) * qpow(q, e_full) - qpow(q, e_less + 1) + int(q as i64))
        }
        ParityCase::BothEven => {
            q1 * (frac(q as i64 - 1, 2) * qpow(q, e_full) - qpow(q, e_less) + int(1))
        }
        ParityCase::MOddDEven => return None,
    };
    Some(Rational(value))
}

/// Closed-form number of Euler-Poincaré characteristics; `None` when `m` is
/// odd and `d` even.
pub fn closed_form_chi_count(q: u32, d: u32, m: u32) -> Option<Rational> {
    let (m, d) = (m as i64, d as i64);
    let qi = q as i64;
    let e_full = (m * d).div_euclid(2);
    let e_less = ((m - 2) * d).div_euclid(2);
    let q_over = frac(qi, qi - 1);
    let half = frac(qi * qi + 1, 2 * qi - 2);
    let value = match ParityCase::of(m as u32, d as u32) {
        ParityCase::BothOdd => {
            q_over.clone() * qpow(q, e_full + 1) - q_over * qpow(q, e_less + 1) + int(1)
        }
        ParityCase::MEvenDOdd => {
            half * qpow(q, e_full) - q_over * qpow(q, e_less + 1) + int(qi)
        }
        ParityCase::BothEven => half * qpow(q, e_full) - q_over * qpow(q, e_less + 1) + int(1),
        ParityCase::MOddDEven => return None,
    };
    Some(Rational(value))
}

/// One enumerated characteristic polynomial with its label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEntry {
    pub char_poly: CharPoly,
    pub label: ClassLabel,
}

/// All valid `(c, μ)` for `(P, m)`, ordered by the index of `c`, then `μ`.
pub fn enumerate_char_polys(
    ctx: &FieldCtx,
    p: &APoly,
    m: u32,
    budget: WorkBudget,
) -> Result<Vec<ClassEntry>> {
    let d = p.degree().unwrap_or(0) as u32;
    budget.check(
        format!("enumerating characteristic polynomials for P={p}, m={m}"),
        enumeration_work(ctx.q(), d, m),
    )?;
    let bound = (m * d / 2) as usize;
    let candidates: Vec<APoly> = enumerate_polys(ctx, bound, |_| true).collect();
    let entries = candidates
        .par_iter()
        .flat_map_iter(|c| {
            (1..ctx.q()).filter_map(move |mu| {
                let mu = ctx.fq(mu);
                let label = classify(ctx, c, mu, p, m);
                label.kind.is_valid().then(|| ClassEntry {
                    char_poly: CharPoly {
                        c: c.clone(),
                        mu: mu.index(),
                        p: p.clone(),
                        m,
                    },
                    label,
                })
            })
        })
        .collect();
    Ok(entries)
}

/// Monic generator of `χ_Φ = (P_Φ(1))`.
pub fn chi_of(ctx: &FieldCtx, cp: &CharPoly) -> Result<APoly> {
    let value = cp.eval_at_one(ctx);
    if value.is_zero() {
        return Err(Error::cross_check(format!(
            "P_Phi(1) = 0 for {cp}: 1 would be a Frobenius eigenvalue"
        )));
    }
    value.monic_gen(ctx)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Discrepancy {
    pub code: String,
    pub detail: String,
}

impl Discrepancy {
    fn new(code: &str, detail: impl Into<String>) -> Self {
        Self {
            code: code.to_string(),
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusParams {
    pub p: u32,
    pub s: u32,
    pub q: u32,
    #[serde(rename = "P")]
    pub char_p: APoly,
    pub m: u32,
    pub d: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub c: APoly,
    pub mu: u32,
    pub label: ClassKind,
    pub reason: String,
    pub chi: APoly,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fiber {
    pub chi: APoly,
    pub size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusReport {
    pub params: CensusParams,
    pub exponent_reading: String,
    pub class_list: Vec<ClassRecord>,
    pub n_classes: usize,
    pub n_ordinary: usize,
    pub n_supersingular: usize,
    pub closed_form_classes: Option<Rational>,
    pub chi_list: Vec<APoly>,
    pub n_chi: usize,
    pub fiber_histogram: Vec<Fiber>,
    #[serde(rename = "H")]
    pub h: Option<usize>,
    #[serde(rename = "B")]
    pub b: Option<usize>,
    pub closed_form_chi: Option<Rational>,
    pub discrepancies: Vec<Discrepancy>,
}

impl CensusReport {
    pub fn classes_match(&self) -> Option<bool> {
        self.closed_form_classes
            .as_ref()
            .map(|v| *v == Rational::from_count(self.n_classes))
    }

    pub fn chi_match(&self) -> Option<bool> {
        self.closed_form_chi
            .as_ref()
            .map(|v| *v == Rational::from_count(self.n_chi))
    }

    /// `(q-1)H + (q-2)B = n_classes` and `H + B = n_chi`; `None` when `H`
    /// and `B` are unassignable.
    pub fn fiber_relation_holds(&self) -> Option<bool> {
        let (h, b) = (self.h?, self.b?);
        let q = self.params.q as usize;
        Some((q - 1) * h + (q - 2) * b == self.n_classes && h + b == self.n_chi)
    }
}

/// Full census of `(P, m)`: classes, `χ` fibers, `(H, B)` and the closed-form
/// comparisons.
pub fn chi_census(ctx: &FieldCtx, p: &APoly, m: u32, budget: WorkBudget) -> Result<CensusReport> {
    let d = p.degree().ok_or(Error::ZeroPolynomial)? as u32;
    let q = ctx.q();
    let entries = enumerate_char_polys(ctx, p, m, budget)?;
    let mut class_list = Vec::with_capacity(entries.len());
    for e in &entries {
        class_list.push(ClassRecord {
            c: e.char_poly.c.clone(),
            mu: e.char_poly.mu,
            label: e.label.kind,
            reason: e.label.reason.clone(),
            chi: chi_of(ctx, &e.char_poly)?,
        });
    }
    let n_classes = class_list.len();
    let n_ordinary = class_list
        .iter()
        .filter(|r| r.label == ClassKind::Ordinary)
        .count();

    let mut by_chi: Vec<(u128, APoly)> = class_list
        .iter()
        .map(|r| (r.chi.index(ctx), r.chi.clone()))
        .collect();
    by_chi.sort();
    let mut fiber_histogram: Vec<Fiber> = Vec::new();
    for (_, chi) in by_chi {
        match fiber_histogram.last_mut() {
            Some(f) if f.chi == chi => f.size += 1,
            _ => fiber_histogram.push(Fiber { chi, size: 1 }),
        }
    }
    let chi_list: Vec<APoly> = fiber_histogram.iter().map(|f| f.chi.clone()).collect();
    let n_chi = chi_list.len();

    let mut discrepancies = Vec::new();
    let big = q as usize - 1;
    let small = q as usize - 2;
    let odd_sizes: Vec<usize> = fiber_histogram
        .iter()
        .map(|f| f.size)
        .filter(|&s| s != big && s != small)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let (h, b) = if odd_sizes.is_empty() {
        let h = fiber_histogram.iter().filter(|f| f.size == big).count();
        (Some(h), Some(n_chi - h))
    } else {
        discrepancies.push(Discrepancy::new(
            "fiber-size",
            format!("fiber sizes {odd_sizes:?} outside {{q-1, q-2}} = {{{big}, {small}}}; H and B unassignable"),
        ));
        (None, None)
    };

    let closed_form_classes = closed_form_isogeny_count(q, d, m);
    let closed_form_chi = closed_form_chi_count(q, d, m);
    for (name, value, actual) in [
        ("classes", &closed_form_classes, n_classes),
        ("chi", &closed_form_chi, n_chi),
    ] {
        match value {
            None => discrepancies.push(Discrepancy::new(
                &format!("{name}-closed-form-undefined"),
                format!("no closed form for m={m} odd and d={d} even"),
            )),
            Some(v) => {
                if !v.is_integer() {
                    discrepancies.push(Discrepancy::new(
                        &format!("{name}-closed-form-non-integral"),
                        format!("closed form evaluates to {v}"),
                    ));
                }
                if *v != Rational::from_count(actual) {
                    discrepancies.push(Discrepancy::new(
                        &format!("{name}-mismatch"),
                        format!("closed form {v} vs enumerated {actual}"),
                    ));
                }
            }
        }
    }

    let report = CensusReport {
        params: CensusParams {
            p: ctx.p(),
            s: ctx.s(),
            q,
            char_p: p.clone(),
            m,
            d,
        },
        exponent_reading: EXPONENT_READING.to_string(),
        n_classes,
        n_ordinary,
        n_supersingular: n_classes - n_ordinary,
        class_list,
        closed_form_classes,
        chi_list,
        n_chi,
        fiber_histogram,
        h,
        b,
        closed_form_chi,
        discrepancies,
    };
    if report.fiber_relation_holds() == Some(false) {
        return Err(Error::cross_check("fiber partition does not add up"));
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizedClass {
    pub c: APoly,
    pub mu: u32,
    /// Label assigned by the predicates (`invalid` marks an unsound predicate).
    pub label: ClassKind,
    /// Modules realizing this class.
    pub modules: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub params: CensusParams,
    pub root_index: usize,
    pub modules_swept: usize,
    pub supersingular_modules: usize,
    /// Modules whose Frobenius identity has several `(c, μ)` solutions
    /// (`F ∈ Φ(A)`); their class is `(X - a)^2`.
    pub non_unique_modules: Vec<String>,
    pub realized: Vec<RealizedClass>,
    /// Predicted classes no module realizes.
    pub not_realized: Vec<ClassRecord>,
    /// Realized classes the predicates reject.
    pub not_predicted: Vec<RealizedClass>,
}

impl SweepReport {
    pub fn realized_set(&self) -> BTreeSet<(APoly, u32)> {
        self.realized.iter().map(|r| (r.c.clone(), r.mu)).collect()
    }

    pub fn is_exact(&self) -> bool {
        self.not_realized.is_empty() && self.not_predicted.is_empty()
    }
}

/// Computes the characteristic polynomial of every module over `field` with
/// `γ` fixed by `root_index`, and compares the realized set with the
/// enumeration. Each module's supersingularity dual test runs as well; any
/// internal disagreement aborts with [`Error::CrossCheck`].
pub fn brute_force_module_census(
    field: &AField,
    root_index: usize,
    budget: WorkBudget,
) -> Result<SweepReport> {
    let ctx = field.ctx();
    let p = field.characteristic();
    let m = field.m();
    budget.check(
        format!("sweeping all modules over F_{}^{}", ctx.q(), ctx.n()),
        sweep_work(ctx.q(), ctx.n()) + enumeration_work(ctx.q(), field.d(), m),
    )?;
    let census = chi_census(ctx, p, m, budget)?;

    let per_a2: Vec<Vec<(CharPoly, bool, Option<String>)>> = (0..ctx.size())
        .into_par_iter()
        .map(|a2| {
            (1..ctx.size())
                .map(|a3| {
                    let phi = field.module(root_index, ctx.fl(a2), ctx.fl(a3))?;
                    let (cp, solutions) = phi.char_poly_counted()?;
                    let ss = phi.is_supersingular_given(&cp)?;
                    Ok((cp, ss, (solutions > 1).then(|| phi.to_string())))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;

    let mut counts: std::collections::BTreeMap<(u128, u32), (CharPoly, usize)> =
        std::collections::BTreeMap::new();
    let mut modules_swept = 0;
    let mut supersingular_modules = 0;
    let mut non_unique_modules = Vec::new();
    for (cp, ss, non_unique) in per_a2.into_iter().flatten() {
        modules_swept += 1;
        non_unique_modules.extend(non_unique);
        supersingular_modules += ss as usize;
        counts
            .entry((cp.c.index(ctx), cp.mu))
            .or_insert_with(|| (cp.clone(), 0))
            .1 += 1;
    }
    let realized: Vec<RealizedClass> = counts
        .into_values()
        .map(|(cp, k)| RealizedClass {
            label: classify(ctx, &cp.c, cp.mu(ctx), p, m).kind,
            c: cp.c,
            mu: cp.mu,
            modules: k,
        })
        .collect();
    let realized_keys: BTreeSet<(APoly, u32)> =
        realized.iter().map(|r| (r.c.clone(), r.mu)).collect();
    let not_realized = census
        .class_list
        .iter()
        .filter(|r| !realized_keys.contains(&(r.c.clone(), r.mu)))
        .cloned()
        .collect();
    let not_predicted = realized
        .iter()
        .filter(|r| !r.label.is_valid())
        .cloned()
        .collect();
    Ok(SweepReport {
        params: census.params,
        root_index,
        modules_swept,
        supersingular_modules,
        non_unique_modules,
        realized,
        not_realized,
        not_predicted,
    })
}
