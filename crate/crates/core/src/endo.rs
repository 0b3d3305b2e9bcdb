//! Endomorphism orders of ordinary modules.
//!
//! With `δ = 2F - c` we have `δ^2 = Δ = g^2 ω`, so `√ω = δ/g` and
//! `End = A + f·A[√ω]` for some monic `f | g`. The conductor `f` is found by
//! testing which `h | g` divide `δ` in `L{τ}`: `δ/h ∈ End` iff `g/h` is a
//! multiple of `f`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::drinfeld::{AField, CharPoly, DrinfeldModule};
use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::ore::OrePoly;
use crate::poly::{monic_polys, APoly};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderDescription {
    pub disc: APoly,
    pub g: APoly,
    pub omega: APoly,
    pub measured_f: APoly,
    pub is_maximal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderCandidate {
    pub f: APoly,
    pub description: String,
}

/// `c^2 - 4μP^m`.
pub fn discriminant(ctx: &FieldCtx, cp: &CharPoly) -> APoly {
    crate::weil::discriminant(ctx, &cp.c, cp.mu(ctx), &cp.p, cp.m)
}

/// `(g, ω)` with `Δ = g^2 ω`, `g` monic and `ω` squarefree.
pub fn order_bound(ctx: &FieldCtx, cp: &CharPoly) -> Result<(APoly, APoly)> {
    let disc = discriminant(ctx, cp);
    if disc.is_zero() {
        return Err(Error::invalid(format!(
            "zero discriminant for {cp}: End is not a quadratic order"
        )));
    }
    disc.square_part(ctx)
}

/// Monic divisors of `g` ordered by degree, then index.
pub fn monic_divisors(ctx: &FieldCtx, g: &APoly) -> Vec<APoly> {
    let top = g.degree().unwrap_or(0);
    (0..=top)
        .flat_map(|deg| monic_polys(ctx, deg))
        .filter(|f| g.is_divisible_by(ctx, f))
        .collect()
}

pub fn order_lattice(ctx: &FieldCtx, g: &APoly) -> Vec<OrderCandidate> {
    monic_divisors(ctx, g)
        .into_iter()
        .map(|f| {
            let description = if f == APoly::one() {
                "A[√ω] (maximal)".to_string()
            } else {
                format!("A + ({f})·A[√ω]")
            };
            OrderCandidate { f, description }
        })
        .collect()
}

/// `dim_{F_q}` of the elements of `A + f·A[√ω]` with τ-degree at most `bound`.
pub fn expected_commutant_dim(f_deg: usize, omega_deg: usize, bound: usize) -> usize {
    let scalars = bound / 2 + 1;
    let offset = 2 * f_deg + omega_deg;
    let multiples = if bound >= offset {
        (bound - offset) / 2 + 1
    } else {
        0
    };
    scalars + multiples
}

/// Conductor of `End_L Φ` in `A[√ω]`, by exact division in `L{τ}`, checked
/// against the dimensions of the commutant of `Φ_T`.
pub fn measured_conductor(phi: &DrinfeldModule) -> Result<OrderDescription> {
    let cp = phi.char_poly()?;
    if phi.is_supersingular_given(&cp)? {
        return Err(Error::Unsupported(format!(
            "conductor of a supersingular module ({phi})"
        )));
    }
    let ctx = phi.ctx();
    let disc = discriminant(ctx, &cp);
    let (g, omega) = order_bound(ctx, &cp)?;
    let delta = trace_free_frobenius(phi, &cp);

    let mut measured_f = None;
    for f in monic_divisors(ctx, &g) {
        let (h, r) = g.divmod(ctx, &f)?;
        debug_assert!(r.is_zero());
        let phi_h = phi.phi_of(&h);
        let (u, rem) = delta.right_divmod(ctx, &phi_h)?;
        if !rem.is_zero() {
            continue;
        }
        if phi_h.mul(ctx, &u) != delta {
            return Err(Error::cross_check(format!(
                "{phi}: δ/Φ_h is a right but not a left quotient for h = {h}"
            )));
        }
        if u.mul(ctx, phi.phi_t()) != phi.phi_t().mul(ctx, &u) {
            return Err(Error::cross_check(format!(
                "{phi}: δ/Φ_h does not commute with Φ_T for h = {h}"
            )));
        }
        measured_f = Some(f);
        break;
    }
    // h = 1 always divides, so f = g is the fallback
    let measured_f = measured_f.unwrap_or_else(|| g.clone());

    check_commutant_dims(phi, &measured_f, &omega, &disc)?;

    Ok(OrderDescription {
        is_maximal: measured_f == APoly::one(),
        disc,
        g,
        omega,
        measured_f,
    })
}

fn check_commutant_dims(
    phi: &DrinfeldModule,
    f: &APoly,
    omega: &APoly,
    disc: &APoly,
) -> Result<()> {
    let f_deg = f.degree().unwrap_or(0);
    let omega_deg = omega.degree().unwrap_or(0);
    let top = disc.degree().unwrap_or(0).max(1);
    for bound in 0..=top {
        let got = phi.commutant_basis(bound).len();
        let want = expected_commutant_dim(f_deg, omega_deg, bound);
        if got != want {
            return Err(Error::cross_check(format!(
                "{phi}: commutant of τ-degree ≤ {bound} has dimension {got}, conductor {f} predicts {want}"
            )));
        }
    }
    Ok(())
}

/// The Ore element `2F - Φ_c` whose square is `Φ_Δ`.
pub fn trace_free_frobenius(phi: &DrinfeldModule, cp: &CharPoly) -> OrePoly {
    let ctx = phi.ctx();
    let two = ctx.from_int(crate::field::Level::Ext, 2);
    phi.frobenius().scale(ctx, two).sub(ctx, &phi.phi_of(&cp.c))
}

/// Conductor statistics over every ordinary module of an A-field with a
/// fixed `γ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConductorSweep {
    pub ordinary_modules: usize,
    pub maximal_modules: usize,
    /// Modules whose measured conductor does not divide `g`.
    pub not_dividing: usize,
    /// Modules with squarefree `Δ` but a non-maximal order.
    pub squarefree_not_maximal: usize,
    /// `(g, f, count)` sorted by the indices of `g`, then `f`.
    pub realized: Vec<RealizedConductor>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealizedConductor {
    pub g: APoly,
    pub f: APoly,
    pub modules: usize,
}

pub fn conductor_sweep(field: &AField, root_index: usize) -> Result<ConductorSweep> {
    let ctx = field.ctx();
    let per_a2: Vec<Vec<OrderDescription>> = (0..ctx.size())
        .into_par_iter()
        .map(|a2| {
            let mut out = Vec::new();
            for a3 in 1..ctx.size() {
                let phi = field.module(root_index, ctx.fl(a2), ctx.fl(a3))?;
                let cp = phi.char_poly()?;
                if phi.is_supersingular_given(&cp)? {
                    continue;
                }
                out.push(measured_conductor(&phi)?);
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut counts: BTreeMap<(u128, u128), (APoly, APoly, usize)> = BTreeMap::new();
    let mut sweep = ConductorSweep {
        ordinary_modules: 0,
        maximal_modules: 0,
        not_dividing: 0,
        squarefree_not_maximal: 0,
        realized: Vec::new(),
    };
    for od in per_a2.into_iter().flatten() {
        sweep.ordinary_modules += 1;
        sweep.maximal_modules += od.is_maximal as usize;
        sweep.not_dividing += !od.g.is_divisible_by(ctx, &od.measured_f) as usize;
        sweep.squarefree_not_maximal += (od.disc.is_squarefree(ctx) && !od.is_maximal) as usize;
        counts
            .entry((od.g.index(ctx), od.measured_f.index(ctx)))
            .or_insert_with(|| (od.g.clone(), od.measured_f.clone(), 0))
            .2 += 1;
    }
    sweep.realized = counts
        .into_values()
        .map(|(g, f, modules)| RealizedConductor { g, f, modules })
        .collect();
    Ok(sweep)
}
