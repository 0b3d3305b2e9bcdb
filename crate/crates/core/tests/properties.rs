use std::sync::{Arc, OnceLock};

use proptest::prelude::*;

use drinfeld_core::poly::monic_polys;
use drinfeld_core::{AField, APoly, FieldCtx, FieldElem, Level, OrePoly};

fn contexts() -> &'static [FieldCtx] {
    static CTXS: OnceLock<Vec<FieldCtx>> = OnceLock::new();
    CTXS.get_or_init(|| {
        [(3, 1, 1), (3, 1, 2), (3, 2, 1), (3, 1, 3), (5, 1, 2), (7, 1, 1), (3, 2, 2)]
            .iter()
            .map(|&(p, s, n)| FieldCtx::new(p, s, n).unwrap())
            .collect()
    })
}

fn ctx_of(k: usize) -> &'static FieldCtx {
    let all = contexts();
    &all[k % all.len()]
}

fn el(ctx: &FieldCtx, raw: u32) -> FieldElem {
    ctx.fl(raw % ctx.size())
}

fn apoly(ctx: &FieldCtx, raw: &[u32]) -> APoly {
    let v: Vec<u32> = raw.iter().map(|&c| c % ctx.q()).collect();
    APoly::from_indices(ctx, &v).unwrap()
}

fn ore(ctx: &FieldCtx, raw: &[u32]) -> OrePoly {
    let v: Vec<u32> = raw.iter().map(|&c| c % ctx.size()).collect();
    OrePoly::from_indices(ctx, &v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn field_axioms(k in 0usize..16, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let ctx = ctx_of(k);
        let (a, b, c) = (el(ctx, a), el(ctx, b), el(ctx, c));
        prop_assert_eq!(ctx.add(a, b), ctx.add(b, a));
        prop_assert_eq!(ctx.mul(a, b), ctx.mul(b, a));
        prop_assert_eq!(ctx.add(ctx.add(a, b), c), ctx.add(a, ctx.add(b, c)));
        prop_assert_eq!(ctx.mul(ctx.mul(a, b), c), ctx.mul(a, ctx.mul(b, c)));
        prop_assert_eq!(ctx.mul(a, ctx.add(b, c)), ctx.add(ctx.mul(a, b), ctx.mul(a, c)));
        prop_assert_eq!(ctx.add(a, ctx.neg(a)), ctx.zero(Level::Ext));
        prop_assert_eq!(ctx.sub(ctx.add(a, b), b), a);
        if !a.is_zero() {
            prop_assert_eq!(ctx.mul(a, ctx.inv(a).unwrap()), ctx.one(Level::Ext));
            prop_assert_eq!(ctx.div(ctx.mul(a, b), a), b);
        }
    }

    #[test]
    fn frobenius_is_an_automorphism(k in 0usize..16, a in any::<u32>(), b in any::<u32>()) {
        let ctx = ctx_of(k);
        let (a, b) = (el(ctx, a), el(ctx, b));
        let fr = |x| ctx.frobenius_q(x);
        prop_assert_eq!(fr(ctx.add(a, b)), ctx.add(fr(a), fr(b)));
        prop_assert_eq!(fr(ctx.mul(a, b)), ctx.mul(fr(a), fr(b)));
        prop_assert_eq!(ctx.frobenius_pow(a, ctx.n()), a);
        prop_assert_eq!(fr(a), ctx.pow(a, ctx.q() as u128));
        let fixed = fr(a) == a;
        prop_assert_eq!(fixed, ctx.to_base(a).is_some());
    }

    #[test]
    fn encoding_round_trips(k in 0usize..16, a in any::<u32>()) {
        let ctx = ctx_of(k);
        let a = el(ctx, a);
        prop_assert_eq!(ctx.from_coords(Level::Ext, &ctx.coords(a)).unwrap(), a);
        if let Some(b) = ctx.to_base(a) {
            prop_assert_eq!(ctx.embed(b), a);
        }
    }

    #[test]
    fn poly_divmod_and_gcd(
        k in 0usize..16,
        f in prop::collection::vec(any::<u32>(), 0..7),
        g in prop::collection::vec(any::<u32>(), 1..5),
    ) {
        let ctx = ctx_of(k);
        let (f, g) = (apoly(ctx, &f), apoly(ctx, &g));
        prop_assume!(!g.is_zero());
        let (q, r) = f.divmod(ctx, &g).unwrap();
        prop_assert_eq!(q.mul(ctx, &g).add(ctx, &r), f.clone());
        prop_assert!(r.degree_i64() < g.degree_i64());
        let d = f.gcd_monic(ctx, &g).unwrap();
        prop_assert!(f.is_divisible_by(ctx, &d) && g.is_divisible_by(ctx, &d));
        if !f.is_zero() {
            let m = f.monic_gen(ctx).unwrap();
            prop_assert_eq!(m.monic_gen(ctx).unwrap(), m.clone());
            prop_assert!(m.is_monic());
            let (sq, omega) = f.square_part(ctx).unwrap();
            prop_assert_eq!(sq.mul(ctx, &sq).mul(ctx, &omega), f.clone());
            prop_assert!(omega.is_squarefree(ctx));
        }
    }

    #[test]
    fn ore_ring_laws(
        k in 0usize..16,
        u in prop::collection::vec(any::<u32>(), 0..4),
        v in prop::collection::vec(any::<u32>(), 1..4),
        w in prop::collection::vec(any::<u32>(), 0..4),
        x in any::<u32>(),
    ) {
        let ctx = ctx_of(k);
        let (u, v, w) = (ore(ctx, &u), ore(ctx, &v), ore(ctx, &w));
        prop_assert_eq!(u.mul(ctx, &v).mul(ctx, &w), u.mul(ctx, &v.mul(ctx, &w)));
        prop_assert_eq!(
            u.mul(ctx, &v.add(ctx, &w)),
            u.mul(ctx, &v).add(ctx, &u.mul(ctx, &w))
        );
        // evaluation turns products into composition
        let x = el(ctx, x);
        prop_assert_eq!(
            u.mul(ctx, &v).eval(ctx, x).unwrap(),
            u.eval(ctx, v.eval(ctx, x).unwrap()).unwrap()
        );
        if !v.is_zero() {
            let (q, r) = u.right_divmod(ctx, &v).unwrap();
            prop_assert_eq!(q.mul(ctx, &v).add(ctx, &r), u.clone());
            prop_assert!(r.tau_degree().map_or(true, |d| Some(d) < v.tau_degree()));
        }
    }
}

fn irreducible_by_trial_division(ctx: &FieldCtx, f: &APoly) -> bool {
    let deg = f.degree().unwrap();
    deg >= 1 && (1..=deg / 2).all(|d| monic_polys(ctx, d).all(|g| !f.is_divisible_by(ctx, &g)))
}

#[test]
fn rabin_agrees_with_trial_division() {
    for (p, s) in [(3, 1), (5, 1), (3, 2)] {
        let ctx = FieldCtx::new(p, s, 1).unwrap();
        let top = if ctx.q() > 5 { 3 } else { 4 };
        for deg in 1..=top {
            for f in monic_polys(&ctx, deg) {
                assert_eq!(
                    f.is_irreducible(&ctx).unwrap(),
                    irreducible_by_trial_division(&ctx, &f),
                    "{f} over F_{}",
                    ctx.q()
                );
            }
        }
    }
}

#[test]
fn phi_is_a_ring_homomorphism() {
    let ctx = Arc::new(FieldCtx::new(3, 1, 2).unwrap());
    let field = AField::new(ctx.clone(), APoly::parse(&ctx, "T^2+1").unwrap(), 1).unwrap();
    let polys: Vec<APoly> = (0..27u128).map(|i| APoly::from_index(&ctx, i)).collect();
    for phi in field.modules(0).step_by(7) {
        let phi = phi.unwrap();
        for a in &polys {
            for b in polys.iter().step_by(5) {
                assert_eq!(
                    phi.phi_of(&a.mul(&ctx, b)),
                    phi.phi_of(a).mul(&ctx, &phi.phi_of(b))
                );
                assert_eq!(
                    phi.phi_of(&a.add(&ctx, b)),
                    phi.phi_of(a).add(&ctx, &phi.phi_of(b))
                );
            }
            if let Some(d) = a.degree() {
                assert_eq!(phi.phi_of(a).tau_degree(), Some(2 * d));
            }
            let f = phi.frobenius();
            let pa = phi.phi_of(a);
            assert_eq!(f.mul(&ctx, &pa), pa.mul(&ctx, &f));
        }
    }
}
