//! Rank-2 Drinfeld modules `Φ_T = γ(T) + a2 τ + a3 τ^2` over `L = F_{q^n}`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem, Level};
use crate::linalg;
use crate::ore::{EvalField, OrePoly};
use crate::poly::APoly;

/// The A-field data shared by every module over it: `L`, the A-characteristic
/// `P`, `m = [L : A/P]` and the roots of `P` in `L` (candidates for `γ(T)`),
/// in index order.
#[derive(Debug, Clone)]
pub struct AField {
    ctx: Arc<FieldCtx>,
    p: APoly,
    m: u32,
    roots: Vec<FieldElem>,
}

impl AField {
    pub fn new(ctx: Arc<FieldCtx>, p: APoly, m: u32) -> Result<Self> {
        let d = p
            .degree()
            .filter(|&d| d >= 1)
            .ok_or(Error::ConstantPolynomial)?;
        if !p.is_monic() {
            return Err(Error::invalid(format!("characteristic {p} is not monic")));
        }
        if !p.is_irreducible(&ctx)? {
            return Err(Error::invalid(format!("characteristic {p} is reducible")));
        }
        if m == 0 || m as usize * d != ctx.n() as usize {
            return Err(Error::invalid(format!(
                "n = {} is not m * deg P = {m} * {d}",
                ctx.n()
            )));
        }
        let roots: Vec<FieldElem> = ctx
            .elements(Level::Ext)
            .filter(|&x| p.eval(&ctx, x).is_zero())
            .collect();
        debug_assert_eq!(roots.len(), d);
        Ok(Self { ctx, p, m, roots })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ctx
    }

    pub fn ctx_arc(&self) -> &Arc<FieldCtx> {
        &self.ctx
    }

    pub fn characteristic(&self) -> &APoly {
        &self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// `d = deg P`.
    pub fn d(&self) -> u32 {
        self.p.degree().unwrap_or(0) as u32
    }

    pub fn roots(&self) -> &[FieldElem] {
        &self.roots
    }

    pub fn module(&self, root_index: usize, a2: FieldElem, a3: FieldElem) -> Result<DrinfeldModule> {
        let gamma = *self.roots.get(root_index).ok_or_else(|| {
            Error::invalid(format!(
                "root index {root_index} out of range ({} roots)",
                self.roots.len()
            ))
        })?;
        for x in [a2, a3] {
            if x.level() != Level::Ext || x.index() >= self.ctx.size() {
                return Err(Error::LevelMismatch);
            }
        }
        if a3.is_zero() {
            return Err(Error::invalid("a3 must be nonzero (rank 2)"));
        }
        let phi_t = OrePoly::from_raw(vec![gamma.index(), a2.index(), a3.index()]);
        Ok(DrinfeldModule {
            field: self.clone(),
            root_index,
            gamma,
            a2,
            a3,
            phi_t,
        })
    }

    /// Every module over this A-field with the given `γ`: `a2` over `L`,
    /// `a3` over `L^*`, in index order.
    pub fn modules(&self, root_index: usize) -> impl Iterator<Item = Result<DrinfeldModule>> + '_ {
        let size = self.ctx.size();
        (0..size).flat_map(move |a2| {
            (1..size).map(move |a3| self.module(root_index, self.ctx.fl(a2), self.ctx.fl(a3)))
        })
    }
}

#[derive(Debug, Clone)]
pub struct DrinfeldModule {
    field: AField,
    root_index: usize,
    gamma: FieldElem,
    a2: FieldElem,
    a3: FieldElem,
    phi_t: OrePoly,
}

/// `P_Φ(X) = X^2 - cX + μ P^m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CharPoly {
    pub c: APoly,
    /// Index of `μ ∈ F_q^*`.
    pub mu: u32,
    pub p: APoly,
    pub m: u32,
}

impl CharPoly {
    pub fn new(ctx: &FieldCtx, c: APoly, mu: FieldElem, p: APoly, m: u32) -> Result<Self> {
        if mu.is_zero() || mu.index() >= ctx.q() {
            return Err(Error::invalid("mu must be a nonzero element of F_q"));
        }
        Ok(Self {
            c,
            mu: mu.index(),
            p,
            m,
        })
    }

    pub fn mu(&self, ctx: &FieldCtx) -> FieldElem {
        ctx.fq(self.mu)
    }

    pub fn d(&self) -> u32 {
        self.p.degree().unwrap_or(0) as u32
    }

    /// `⌊m d / 2⌋`.
    pub fn degree_bound(&self) -> usize {
        (self.m * self.d() / 2) as usize
    }

    /// The constant term `μ P^m`.
    pub fn norm(&self, ctx: &FieldCtx) -> APoly {
        self.p.pow(ctx, self.m).scale(ctx, self.mu(ctx))
    }

    /// `P_Φ(1) = 1 - c + μ P^m`.
    pub fn eval_at_one(&self, ctx: &FieldCtx) -> APoly {
        APoly::one().sub(ctx, &self.c).add(ctx, &self.norm(ctx))
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "X^2 - ({})*X + {}*({})^{}", self.c, self.mu, self.p, self.m)
    }
}

impl DrinfeldModule {
    pub fn ctx(&self) -> &FieldCtx {
        &self.field.ctx
    }

    pub fn field(&self) -> &AField {
        &self.field
    }

    pub fn characteristic(&self) -> &APoly {
        &self.field.p
    }

    pub fn m(&self) -> u32 {
        self.field.m
    }

    pub fn d(&self) -> u32 {
        self.field.d()
    }

    pub fn n(&self) -> u32 {
        self.ctx().n()
    }

    pub fn root_index(&self) -> usize {
        self.root_index
    }

    pub fn gamma(&self) -> FieldElem {
        self.gamma
    }

    pub fn a2(&self) -> FieldElem {
        self.a2
    }

    pub fn a3(&self) -> FieldElem {
        self.a3
    }

    pub fn phi_t(&self) -> &OrePoly {
        &self.phi_t
    }

    /// `Φ_a` by Horner's rule in `Φ_T`.
    pub fn phi_of(&self, a: &APoly) -> OrePoly {
        let ctx = self.ctx();
        a.indices().iter().rev().fold(OrePoly::zero(), |acc, &c| {
            acc.mul(ctx, &self.phi_t)
                .add(ctx, &OrePoly::from_raw(vec![c]))
        })
    }

    /// `Φ_T^j` for `j = 0..=k`.
    fn phi_t_powers(&self, k: usize) -> Vec<OrePoly> {
        let ctx = self.ctx();
        let mut out = Vec::with_capacity(k + 1);
        out.push(OrePoly::one());
        for j in 1..=k {
            let next = out[j - 1].mul(ctx, &self.phi_t);
            out.push(next);
        }
        out
    }

    /// The Frobenius `F = τ^n` of `L`.
    pub fn frobenius(&self) -> OrePoly {
        OrePoly::tau_pow(self.n() as usize)
    }

    /// Every `(c, μ)` with `μ ∈ F_q^*` and `deg c ≤ ⌊n/2⌋` solving
    /// `F^2 - Φ_c F + Φ_{μ P^m} = 0`, in `μ` order.
    ///
    /// The equation is `F_q`-linear in the coefficients of `c` once `μ` is
    /// fixed; the system is reduced once and each of the `q - 1` values of
    /// `μ` is tested against it. Every solution is re-verified by direct Ore
    /// arithmetic.
    pub fn char_poly_candidates(&self) -> Result<Vec<CharPoly>> {
        let ctx = self.ctx();
        let n = self.n() as usize;
        let bound = n / 2;
        let powers = self.phi_t_powers(n);
        let pm = self.characteristic().pow(ctx, self.m());

        let columns: Vec<OrePoly> = powers[..=bound].iter().map(|u| u.shift(n)).collect();
        let rhs_frob = OrePoly::tau_pow(2 * n);
        let rhs_norm = pm
            .indices()
            .iter()
            .zip(&powers)
            .fold(OrePoly::zero(), |acc, (&c, u)| {
                acc.add(ctx, &u.scale(ctx, ctx.fl(c)))
            });

        let ncols = bound + 1;
        let ech = self.reduce_system(&columns, &[rhs_frob, rhs_norm], 2 * n)?;
        let tq = ctx.tq();
        let f = self.frobenius();
        let f2 = f.mul(ctx, &f);
        let mut found = Vec::new();
        for mu in 1..ctx.q() {
            let rhs = |row: &Vec<u32>| tq.add(row[ncols], tq.mul(mu, row[ncols + 1]));
            if ech.rows[ech.rank()..].iter().any(|row| rhs(row) != 0) {
                continue;
            }
            let mut c = vec![0u32; ncols];
            for (r, &col) in ech.pivots.iter().enumerate() {
                c[col] = rhs(&ech.rows[r]);
            }
            let c = APoly::from_raw(crate::dense::trim(c));
            let identity = f2
                .sub(ctx, &self.phi_of(&c).mul(ctx, &f))
                .add(ctx, &self.phi_of(&pm.scale(ctx, ctx.fq(mu))));
            if !identity.is_zero() {
                return Err(Error::cross_check(format!(
                    "Frobenius identity fails for {self} at mu = {mu}"
                )));
            }
            found.push(CharPoly::new(
                ctx,
                c,
                ctx.fq(mu),
                self.characteristic().clone(),
                self.m(),
            )?);
        }
        Ok(found)
    }

    /// Row-reduces `Σ x_j columns[j] = rhs` coefficientwise in τ-degrees
    /// `0..=top`, with one right-hand-side column per entry of `rhs`.
    fn reduce_system(
        &self,
        columns: &[OrePoly],
        rhs: &[OrePoly],
        top: usize,
    ) -> Result<linalg::Echelon> {
        let ctx = self.ctx();
        let n = self.n() as usize;
        let ncols = columns.len();
        let mut rows = Vec::with_capacity((top + 1) * n);
        for deg in 0..=top {
            let coords_of = |u: &OrePoly| ctx.coords(u.coeff(ctx, deg));
            let col_coords: Vec<Vec<u32>> = columns.iter().chain(rhs).map(coords_of).collect();
            for k in 0..n {
                rows.push(col_coords.iter().map(|c| c[k]).collect());
            }
        }
        let ech = linalg::row_reduce(ctx.tq(), rows, ncols);
        if ech.rank() != ncols {
            return Err(Error::cross_check(format!(
                "Φ_T powers are dependent (rank {} < {ncols}) for {self}",
                ech.rank()
            )));
        }
        Ok(ech)
    }

    /// The `a ∈ A` with `Φ_a = F`, if Frobenius lies in `Φ(A)`.
    pub fn frobenius_in_a(&self) -> Result<Option<APoly>> {
        let n = self.n() as usize;
        if n % 2 == 1 {
            return Ok(None);
        }
        let powers = self.phi_t_powers(n / 2);
        let ncols = powers.len();
        let ech = self.reduce_system(&powers, &[self.frobenius()], n)?;
        if ech.rows[ech.rank()..].iter().any(|row| row[ncols] != 0) {
            return Ok(None);
        }
        let mut a = vec![0u32; ncols];
        for (r, &col) in ech.pivots.iter().enumerate() {
            a[col] = ech.rows[r][ncols];
        }
        Ok(Some(APoly::from_raw(crate::dense::trim(a))))
    }

    /// The characteristic polynomial of Frobenius.
    ///
    /// Normally exactly one candidate solves the Frobenius identity. When
    /// `F = Φ_a` every `(c, μ)` with `a^2 - ca + μP^m = 0` does, and the
    /// result is `(X - a)^2`, the polynomial of `F` acting on the rank-2
    /// Tate module. Any other multiplicity is an error.
    pub fn char_poly(&self) -> Result<CharPoly> {
        self.char_poly_counted().map(|(cp, _)| cp)
    }

    /// [`Self::char_poly`] together with the number of `(c, μ)` that solve
    /// the Frobenius identity.
    pub fn char_poly_counted(&self) -> Result<(CharPoly, usize)> {
        let ctx = self.ctx();
        let mut found = self.char_poly_candidates()?;
        let count = found.len();
        match count {
            1 => Ok((found.pop().expect("one candidate"), 1)),
            0 => Err(Error::cross_check(format!(
                "no (c, mu) satisfies the Frobenius identity for {self}"
            ))),
            k => {
                let Some(a) = self.frobenius_in_a()? else {
                    return Err(Error::cross_check(format!(
                        "{k} candidate (c, mu) pairs for {self}"
                    )));
                };
                let c = a.scale(ctx, ctx.from_int(Level::Base, 2));
                let norm = a.mul(ctx, &a);
                found
                    .into_iter()
                    .find(|cp| cp.c == c && cp.norm(ctx) == norm)
                    .map(|cp| (cp, count))
                    .ok_or_else(|| {
                        Error::cross_check(format!(
                            "F = Φ_({a}) but (X - a)^2 is not a candidate for {self}"
                        ))
                    })
            }
        }
    }

    /// Height of `Φ_P`.
    pub fn height(&self) -> usize {
        self.phi_of(self.characteristic())
            .height()
            .expect("Φ_P is nonzero")
    }

    /// Supersingular iff `Φ_P` is purely inseparable (height `2d`). Checked
    /// against the trace criterion `P | c`; a disagreement is an error.
    pub fn is_supersingular(&self) -> Result<bool> {
        self.is_supersingular_given(&self.char_poly()?)
    }

    /// [`Self::is_supersingular`] with an already computed characteristic
    /// polynomial.
    pub fn is_supersingular_given(&self, cp: &CharPoly) -> Result<bool> {
        let by_height = self.height() == 2 * self.d() as usize;
        let by_trace = cp.c.is_divisible_by(self.ctx(), self.characteristic());
        if by_height != by_trace {
            return Err(Error::cross_check(format!(
                "height test says supersingular={by_height}, trace test says {by_trace} for {self}"
            )));
        }
        Ok(by_height)
    }

    /// An extension `F_{q^(n k)}` for torsion computations.
    pub fn eval_field(&self, k: u32, max_size: u64) -> Result<EvalField> {
        EvalField::new(self.ctx(), k, max_size)
    }

    /// Zeros of `Φ_a` in the given extension, by exhaustive evaluation.
    pub fn torsion_kernel(&self, a: &APoly, field: &EvalField) -> Vec<FieldElem> {
        let ext = field.ctx();
        let u = field.embed_ore(&self.phi_of(a));
        (0..ext.size())
            .filter(|&x| u.eval_raw(ext, x) == 0)
            .map(|x| ext.fl(x))
            .collect()
    }

    /// An `F_q`-basis of the elements of `L{τ}` of τ-degree at most
    /// `max_tau_deg` commuting with `Φ_T`.
    pub fn commutant_basis(&self, max_tau_deg: usize) -> Vec<OrePoly> {
        let ctx = self.ctx();
        let n = self.n() as usize;
        let unknowns = n * (max_tau_deg + 1);
        let image_len = max_tau_deg + 3;
        // column (i, k): u = x^k τ^i, image = uΦ_T - Φ_T u
        let mut columns = Vec::with_capacity(unknowns);
        for i in 0..=max_tau_deg {
            for k in 0..n {
                let basis_elem = ctx.fl(ctx.q().pow(k as u32));
                let u = OrePoly::monomial(basis_elem, i);
                let image = u.mul(ctx, &self.phi_t).sub(ctx, &self.phi_t.mul(ctx, &u));
                let coords: Vec<u32> = (0..image_len)
                    .flat_map(|deg| ctx.coords(image.coeff(ctx, deg)))
                    .collect();
                columns.push(coords);
            }
        }
        let rows: Vec<Vec<u32>> = (0..image_len * n)
            .map(|r| columns.iter().map(|col| col[r]).collect())
            .collect();
        linalg::nullspace(ctx.tq(), rows, unknowns)
            .into_iter()
            .map(|v| {
                let coeffs = v
                    .chunks(n)
                    .map(|chunk| ctx.from_coords(Level::Ext, chunk).expect("coordinates in range").index())
                    .collect();
                OrePoly::from_raw(coeffs)
            })
            .collect()
    }
}

impl fmt::Display for DrinfeldModule {
    /// `p,s ; P=<APoly> ; m=<int> ; root=<int> ; a2=<idx> ; a3=<idx>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ctx = self.ctx();
        write!(
            f,
            "{},{} ; P={} ; m={} ; root={} ; a2={} ; a3={}",
            ctx.p(),
            ctx.s(),
            self.characteristic(),
            self.m(),
            self.root_index,
            self.a2,
            self.a3
        )
    }
}

/// Parses the module text form. `n` is recovered as `m * deg P`.
pub fn parse_module(text: &str, max_field_size: u64) -> Result<DrinfeldModule> {
    let mut parts = text.split(';').map(str::trim);
    let head = parts.next().unwrap_or("");
    let (p, s) = head
        .split_once(',')
        .ok_or_else(|| Error::parse(0, "expected \"p,s\""))?;
    let p: u32 = p.trim().parse().map_err(|_| Error::parse(0, "bad p"))?;
    let s: u32 = s.trim().parse().map_err(|_| Error::parse(0, "bad s"))?;
    let mut fields = std::collections::BTreeMap::new();
    for part in parts {
        let (k, v) = part
            .split_once('=')
            .ok_or_else(|| Error::parse(text.find(part).unwrap_or(0), format!("expected key=value, got {part:?}")))?;
        fields.insert(k.trim().to_string(), v.trim().to_string());
    }
    let get = |k: &str| {
        fields
            .get(k)
            .cloned()
            .ok_or_else(|| Error::parse(text.len(), format!("missing {k}")))
    };
    let int = |k: &str| -> Result<u64> {
        get(k)?
            .parse()
            .map_err(|_| Error::parse(text.find(k).unwrap_or(0), format!("{k} is not an integer")))
    };
    let m = int("m")? as u32;
    let root = int("root")? as usize;
    // P's degree is needed for n; parse it against F_q first
    let fq = FieldCtx::with_limit(p, s, 1, max_field_size)?;
    let char_poly = APoly::parse(&fq, &get("P")?)?;
    let d = char_poly.degree().unwrap_or(0) as u32;
    let ctx = Arc::new(FieldCtx::with_limit(p, s, m * d.max(1), max_field_size)?);
    let field = AField::new(ctx.clone(), char_poly, m)?;
    let a2 = ctx.element(Level::Ext, int("a2")?)?;
    let a3 = ctx.element(Level::Ext, int("a3")?)?;
    field.module(root, a2, a3)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3_field() -> AField {
        let ctx = Arc::new(FieldCtx::new(3, 1, 1).unwrap());
        AField::new(ctx, APoly::t(), 1).unwrap()
    }

    #[test]
    fn make_module_examples() {
        let field = f3_field();
        let ctx = field.ctx().clone();
        let phi = field.module(0, ctx.fl(1), ctx.fl(1)).unwrap();
        assert_eq!(phi.gamma(), ctx.fl(0));
        assert_eq!(phi.phi_t().indices(), &[0, 1, 1]);
        assert!(field.module(0, ctx.fl(1), ctx.fl(0)).is_err());
        assert!(field.module(1, ctx.fl(1), ctx.fl(1)).is_err());

        let ctx9 = Arc::new(FieldCtx::new(3, 1, 2).unwrap());
        let p = APoly::parse(&ctx9, "T^2+1").unwrap();
        let field9 = AField::new(ctx9.clone(), p, 1).unwrap();
        let phi = field9.module(0, ctx9.fl(0), ctx9.fl(1)).unwrap();
        let w = phi.gamma();
        assert_eq!(ctx9.mul(w, w), ctx9.fl(2));

        assert!(AField::new(ctx9.clone(), APoly::parse(&ctx9, "T^2-1").unwrap(), 1).is_err());
        assert!(AField::new(ctx9, APoly::t(), 1).is_err());
    }

    #[test]
    fn phi_of_examples() {
        let field = f3_field();
        let ctx = field.ctx().clone();
        let phi = field.module(0, ctx.fl(1), ctx.fl(1)).unwrap();
        let t2 = APoly::t().pow(&ctx, 2);
        assert_eq!(phi.phi_of(&t2).indices(), &[0, 0, 1, 2, 1]);
        assert_eq!(phi.phi_of(&APoly::one()), OrePoly::one());
        let two_t = APoly::parse(&ctx, "2*T").unwrap();
        assert_eq!(phi.phi_of(&two_t).indices(), &[0, 2, 2]);
    }

    #[test]
    fn char_poly_examples() {
        let field = f3_field();
        let ctx = field.ctx().clone();
        let phi = field.module(0, ctx.fl(1), ctx.fl(1)).unwrap();
        let cp = phi.char_poly().unwrap();
        assert_eq!((cp.c.clone(), cp.mu), (APoly::constant(ctx.fq(2)), 2));
        assert!(!phi.is_supersingular().unwrap());
        assert_eq!(phi.height(), 1);

        let phi = field.module(0, ctx.fl(0), ctx.fl(1)).unwrap();
        let cp = phi.char_poly().unwrap();
        assert_eq!((cp.c.clone(), cp.mu), (APoly::zero(), 2));
        assert!(phi.is_supersingular().unwrap());
    }

    #[test]
    fn frobenius_commutes_with_phi_t() {
        let ctx = Arc::new(FieldCtx::new(3, 1, 2).unwrap());
        let field = AField::new(ctx.clone(), APoly::parse(&ctx, "T^2+1").unwrap(), 1).unwrap();
        let phi = field.module(0, ctx.fl(5), ctx.fl(7)).unwrap();
        let f = phi.frobenius();
        assert_eq!(f, OrePoly::tau_pow(2));
        assert_eq!(f.mul(&ctx, phi.phi_t()), phi.phi_t().mul(&ctx, &f));
    }

    #[test]
    fn torsion_examples() {
        let field = f3_field();
        let ctx = field.ctx().clone();
        let phi = field.module(0, ctx.fl(1), ctx.fl(1)).unwrap();
        let ext = phi.eval_field(2, 1 << 16).unwrap();
        let kernel = phi.torsion_kernel(&APoly::t(), &ext);
        assert_eq!(kernel.len(), 3);
        for &x in &kernel[1..] {
            assert_eq!(ext.ctx().mul(x, x), ext.ctx().fl(2));
        }
        assert_eq!(phi.torsion_kernel(&APoly::one(), &ext).len(), 1);

        let ss = field.module(0, ctx.fl(0), ctx.fl(1)).unwrap();
        for k in 1..=3 {
            let ext = ss.eval_field(k, 1 << 16).unwrap();
            assert_eq!(ss.torsion_kernel(&APoly::t(), &ext), vec![ext.ctx().fl(0)]);
        }
    }

    #[test]
    fn commutant_examples() {
        let field = f3_field();
        let ctx = field.ctx().clone();
        let phi = field.module(0, ctx.fl(1), ctx.fl(1)).unwrap();
        assert_eq!(phi.commutant_basis(0), vec![OrePoly::one()]);
        assert_eq!(phi.commutant_basis(1), vec![OrePoly::one(), OrePoly::tau()]);
    }

    #[test]
    fn module_text_form() {
        let field = f3_field();
        let ctx = field.ctx().clone();
        let phi = field.module(0, ctx.fl(1), ctx.fl(2)).unwrap();
        let text = phi.to_string();
        assert_eq!(text, "3,1 ; P=T ; m=1 ; root=0 ; a2=1 ; a3=2");
        let back = parse_module(&text, 1 << 20).unwrap();
        assert_eq!(back.phi_t(), phi.phi_t());
        assert!(parse_module("3,1 ; P=T ; m=1 ; root=0 ; a2=1", 1 << 20).is_err());
        assert!(parse_module("3,1 ; P=T ; m=1 ; root=0 ; a2=1 ; a3=0", 1 << 20).is_err());
    }

    #[test]
    fn frobenius_in_a_is_double_root() {
        // over F_9 with P = T, m = 2: Φ_T = τ^2 = F
        let ctx = Arc::new(FieldCtx::new(3, 1, 2).unwrap());
        let field = AField::new(ctx.clone(), APoly::t(), 2).unwrap();
        let phi = field.module(0, ctx.fl(0), ctx.fl(1)).unwrap();
        assert_eq!(phi.frobenius_in_a().unwrap(), Some(APoly::t()));
        assert_eq!(phi.char_poly_candidates().unwrap().len(), 2);
        let (cp, count) = phi.char_poly_counted().unwrap();
        assert_eq!(count, 2);
        assert_eq!(cp.c, APoly::t().scale(&ctx, ctx.fq(2)));
        assert_eq!(cp.mu, 1);
        let ordinary = field.module(0, ctx.fl(1), ctx.fl(1)).unwrap();
        assert_eq!(ordinary.frobenius_in_a().unwrap(), None);
    }
}
