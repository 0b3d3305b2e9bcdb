//! The ring `A = F_q[T]`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::dense;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem, Level};

/// A polynomial in `T` over `F_q`. Coefficients are `F_q` indices, constant
/// term first, without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct APoly {
    coeffs: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Sub,
    Mul,
}

impl APoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    /// The indeterminate `T`.
    pub fn t() -> Self {
        Self { coeffs: vec![0, 1] }
    }

    pub fn constant(c: FieldElem) -> Self {
        Self::from_raw(vec![c.index()])
    }

    /// `c * T^e`.
    pub fn monomial(c: FieldElem, e: usize) -> Self {
        let mut v = vec![0; e + 1];
        v[e] = c.index();
        Self::from_raw(v)
    }

    /// Builds a polynomial from `F_q` indices, constant term first.
    pub fn from_indices(ctx: &FieldCtx, coeffs: &[u32]) -> Result<Self> {
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= ctx.q()) {
            return Err(Error::ElementOutOfRange {
                index: bad as u64,
                size: ctx.q() as u64,
            });
        }
        Ok(Self::from_raw(coeffs.to_vec()))
    }

    pub(crate) fn from_raw(coeffs: Vec<u32>) -> Self {
        Self {
            coeffs: dense::trim(coeffs),
        }
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.coeffs
    }

    /// Coefficient indices, constant term first.
    pub fn indices(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        dense::degree(&self.coeffs)
    }

    /// Degree with the zero polynomial mapped to `-1`.
    pub fn degree_i64(&self) -> i64 {
        self.degree().map_or(-1, |d| d as i64)
    }

    pub fn coeff(&self, ctx: &FieldCtx, i: usize) -> FieldElem {
        ctx.fq(self.coeffs.get(i).copied().unwrap_or(0))
    }

    /// Leading coefficient; zero for the zero polynomial.
    pub fn lead(&self, ctx: &FieldCtx) -> FieldElem {
        ctx.fq(self.coeffs.last().copied().unwrap_or(0))
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// Integer index `sum c_i q^i`.
    pub fn index(&self, ctx: &FieldCtx) -> u128 {
        self.coeffs
            .iter()
            .rev()
            .fold(0u128, |acc, &c| acc * ctx.q() as u128 + c as u128)
    }

    pub fn from_index(ctx: &FieldCtx, mut index: u128) -> Self {
        let q = ctx.q() as u128;
        let mut v = Vec::new();
        while index > 0 {
            v.push((index % q) as u32);
            index /= q;
        }
        Self::from_raw(v)
    }

    pub fn arith(ctx: &FieldCtx, op: PolyOp, f: &APoly, g: &APoly) -> APoly {
        match op {
            PolyOp::Add => f.add(ctx, g),
            PolyOp::Sub => f.sub(ctx, g),
            PolyOp::Mul => f.mul(ctx, g),
        }
    }

    pub fn add(&self, ctx: &FieldCtx, rhs: &APoly) -> APoly {
        Self::from_raw(dense::add(ctx.tq(), &self.coeffs, &rhs.coeffs))
    }

    pub fn sub(&self, ctx: &FieldCtx, rhs: &APoly) -> APoly {
        Self::from_raw(dense::sub(ctx.tq(), &self.coeffs, &rhs.coeffs))
    }

    pub fn neg(&self, ctx: &FieldCtx) -> APoly {
        Self::from_raw(dense::neg(ctx.tq(), &self.coeffs))
    }

    pub fn mul(&self, ctx: &FieldCtx, rhs: &APoly) -> APoly {
        Self::from_raw(dense::mul(ctx.tq(), &self.coeffs, &rhs.coeffs))
    }

    pub fn scale(&self, ctx: &FieldCtx, k: FieldElem) -> APoly {
        Self::from_raw(dense::scale(ctx.tq(), &self.coeffs, k.index()))
    }

    pub fn pow(&self, ctx: &FieldCtx, e: u32) -> APoly {
        (0..e).fold(APoly::one(), |acc, _| acc.mul(ctx, self))
    }

    pub fn divmod(&self, ctx: &FieldCtx, g: &APoly) -> Result<(APoly, APoly)> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (q, r) = dense::divrem(ctx.tq(), &self.coeffs, &g.coeffs);
        Ok((Self::from_raw(q), Self::from_raw(r)))
    }

    /// True when `g` divides `self`; the zero polynomial divides only zero.
    pub fn is_divisible_by(&self, ctx: &FieldCtx, g: &APoly) -> bool {
        if g.is_zero() {
            return self.is_zero();
        }
        dense::rem(ctx.tq(), &self.coeffs, &g.coeffs).is_empty()
    }

    pub fn gcd_monic(&self, ctx: &FieldCtx, g: &APoly) -> Result<APoly> {
        if self.is_zero() && g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::from_raw(dense::gcd(ctx.tq(), &self.coeffs, &g.coeffs)))
    }

    pub fn is_irreducible(&self, ctx: &FieldCtx) -> Result<bool> {
        if self.is_constant() {
            return Err(Error::ConstantPolynomial);
        }
        Ok(dense::is_irreducible(ctx.tq(), &self.coeffs))
    }

    /// The monic generator of the ideal `(self)`.
    pub fn monic_gen(&self, ctx: &FieldCtx) -> Result<APoly> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(Self::from_raw(dense::make_monic(ctx.tq(), &self.coeffs)))
    }

    pub(crate) fn derivative(&self, ctx: &FieldCtx) -> APoly {
        Self::from_raw(dense::derivative(ctx.tq(), &self.coeffs, ctx.p()))
    }

    /// Evaluates at an `F_q` or `L` point.
    pub fn eval(&self, ctx: &FieldCtx, x: FieldElem) -> FieldElem {
        let t = ctx.table(x.level());
        let v = self
            .coeffs
            .iter()
            .rev()
            .fold(0, |acc, &c| t.add(t.mul(acc, x.index()), c));
        match x.level() {
            Level::Base => ctx.fq(v),
            Level::Ext => ctx.fl(v),
        }
    }

    /// Returns `(g, omega)` with `g` monic, `g^2 * omega = self` and `omega`
    /// squarefree. The unit of `self` ends up in `omega`.
    pub fn square_part(&self, ctx: &FieldCtx) -> Result<(APoly, APoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let monic = self.monic_gen(ctx)?;
        let g = squarefree_factorization(ctx, &monic)
            .into_iter()
            .fold(APoly::one(), |acc, (fac, mult)| {
                acc.mul(ctx, &fac.pow(ctx, mult / 2))
            });
        let (omega, r) = self.divmod(ctx, &g.mul(ctx, &g))?;
        debug_assert!(r.is_zero());
        Ok((g, omega))
    }

    /// Squarefree test via `gcd(f, f') = 1`, handling `f' = 0`.
    pub fn is_squarefree(&self, ctx: &FieldCtx) -> bool {
        if self.is_zero() {
            return false;
        }
        if self.is_constant() {
            return true;
        }
        let d = self.derivative(ctx);
        if d.is_zero() {
            return false;
        }
        self.gcd_monic(ctx, &d).map(|g| g.is_constant()).unwrap_or(false)
    }

    /// Parses the term form (`T^2+2*T+1`) or the list form (`[1,2,1]`).
    pub fn parse(ctx: &FieldCtx, text: &str) -> Result<APoly> {
        parse_poly(ctx, text, 'T')
    }
}

/// Squarefree factorization of a monic polynomial: pairs `(a_i, i)` with the
/// input equal to `prod a_i^i`. In characteristic `p` the part whose
/// derivative vanishes is a `p`-th power; its root is taken and the
/// multiplicities are scaled by `p`.
fn squarefree_factorization(ctx: &FieldCtx, f: &APoly) -> Vec<(APoly, u32)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let tq = ctx.tq();
    let d = f.derivative(ctx);
    let mut c = if d.is_zero() {
        f.clone()
    } else {
        APoly::from_raw(dense::gcd(tq, f.raw(), d.raw()))
    };
    let mut w = f.divmod(ctx, &c).expect("nonzero").0;
    let mut i = 1;
    while !w.is_constant() {
        let y = APoly::from_raw(dense::gcd(tq, w.raw(), c.raw()));
        let fac = w.divmod(ctx, &y).expect("nonzero").0;
        if !fac.is_constant() {
            out.push((fac, i));
        }
        w = y.clone();
        c = c.divmod(ctx, &y).expect("nonzero").0;
        i += 1;
    }
    if !c.is_constant() {
        let root = pth_root(ctx, &c);
        for (fac, j) in squarefree_factorization(ctx, &root) {
            out.push((fac, j * ctx.p()));
        }
    }
    out
}

/// For `f = sum a_k T^(kp)`, returns `sum a_k^(1/p) T^k`.
fn pth_root(ctx: &FieldCtx, f: &APoly) -> APoly {
    let p = ctx.p() as usize;
    // a^(1/p) = a^(q/p) in F_q
    let e = (ctx.q() / ctx.p()) as u128;
    let v = f
        .raw()
        .iter()
        .step_by(p)
        .map(|&a| ctx.tq().pow(a, e))
        .collect();
    APoly::from_raw(v)
}

/// All polynomials of degree at most `max_deg` (the zero polynomial
/// included) in index order, filtered by `keep`.
pub fn enumerate_polys<'a, F>(
    ctx: &'a FieldCtx,
    max_deg: usize,
    keep: F,
) -> impl Iterator<Item = APoly> + 'a
where
    F: Fn(&APoly) -> bool + 'a,
{
    let count = (ctx.q() as u128).pow(max_deg as u32 + 1);
    (0..count)
        .map(move |i| APoly::from_index(ctx, i))
        .filter(move |f| keep(f))
}

/// Monic polynomials of degree exactly `deg`, in index order.
pub fn monic_polys(ctx: &FieldCtx, deg: usize) -> impl Iterator<Item = APoly> + '_ {
    let q = ctx.q() as u128;
    let base = q.pow(deg as u32);
    (0..base).map(move |i| APoly::from_index(ctx, base + i))
}

/// Monic irreducible polynomials of degree exactly `deg`, in index order.
pub fn monic_irreducibles(ctx: &FieldCtx, deg: usize) -> impl Iterator<Item = APoly> + '_ {
    monic_polys(ctx, deg).filter(move |f| f.is_irreducible(ctx).unwrap_or(false))
}

impl fmt::Display for APoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &self.coeffs, "T")
    }
}

impl Serialize for APoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for APoly {
    /// Reads the text form without range-checking the indices; callers holding
    /// a context should re-validate with [`APoly::from_indices`].
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        let terms = parse_terms(&s, 'T', u32::MAX).map_err(serde::de::Error::custom)?;
        if terms.iter().any(|t| t.2) {
            return Err(serde::de::Error::custom("negative terms need a field context"));
        }
        Ok(APoly::from_raw(assemble(terms, |c| c)))
    }
}

/// Term form, exponents descending, unit coefficients dropped on `T^e`.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, coeffs: &[u32], var: &str) -> fmt::Result {
    if coeffs.is_empty() {
        return write!(f, "0");
    }
    let mut first = true;
    for (e, &c) in coeffs.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        if !first {
            write!(f, "+")?;
        }
        first = false;
        match (e, c) {
            (0, c) => write!(f, "{c}")?,
            (1, 1) => write!(f, "{var}")?,
            (1, c) => write!(f, "{c}*{var}")?,
            (e, 1) => write!(f, "{var}^{e}")?,
            (e, c) => write!(f, "{c}*{var}^{e}")?,
        }
    }
    Ok(())
}

fn parse_poly(ctx: &FieldCtx, text: &str, var: char) -> Result<APoly> {
    let terms = parse_terms(text, var, ctx.q())?;
    Ok(APoly::from_raw(assemble(terms, |c| ctx.tq().neg(c))))
}

/// A parsed `k*X^e` term: exponent, coefficient index, negation flag.
pub(crate) type Term = (usize, u32, bool);

/// Collects terms into a coefficient vector, negating with `neg`.
pub(crate) fn assemble(terms: Vec<Term>, neg: impl Fn(u32) -> u32) -> Vec<u32> {
    let deg = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut out = vec![0u32; deg + 1];
    for (e, c, negated) in terms {
        out[e] = if negated { neg(c) } else { c };
    }
    dense::trim(out)
}

/// Parses `[a0,a1,...]` or a `+`/`-` separated sum of `k*X^e` terms.
/// Indices must be below `bound`; repeated exponents are rejected.
pub(crate) fn parse_terms(text: &str, var: char, bound: u32) -> Result<Vec<Term>> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::parse(0, "empty polynomial"));
    }
    if trimmed.starts_with('[') {
        let list = parse_list(text, bound)?;
        return Ok(list
            .into_iter()
            .enumerate()
            .map(|(e, c)| (e, c, false))
            .collect());
    }
    let mut p = Parser {
        chars: text.char_indices().collect(),
        pos: 0,
        var,
        bound,
        len: text.len(),
    };
    p.terms()
}

fn parse_list(text: &str, bound: u32) -> Result<Vec<u32>> {
    let start = text.find('[').unwrap_or(0);
    let end = text
        .rfind(']')
        .ok_or_else(|| Error::parse(text.len(), "missing ']'"))?;
    if !text[end + 1..].trim().is_empty() {
        return Err(Error::parse(end + 1, "trailing input after ']'"));
    }
    let body = &text[start + 1..end];
    if body.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut offset = start + 1;
    for part in body.split(',') {
        let v: u32 = part
            .trim()
            .parse()
            .map_err(|_| Error::parse(offset, format!("not an element index: {:?}", part.trim())))?;
        if v >= bound {
            return Err(Error::parse(offset, format!("element index {v} out of range")));
        }
        out.push(v);
        offset += part.len() + 1;
    }
    Ok(dense::trim(out))
}

struct Parser {
    chars: Vec<(usize, char)>,
    pos: usize,
    var: char,
    bound: u32,
    len: usize,
}

impl Parser {
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.len, |&(o, _)| o)
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|&(_, c)| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).map(|&(_, c)| c)
    }

    fn number(&mut self) -> Result<Option<u64>> {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|&(_, c)| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Ok(None);
        }
        let s: String = self.chars[start..self.pos].iter().map(|&(_, c)| c).collect();
        s.parse()
            .map(Some)
            .map_err(|_| Error::parse(self.chars[start].0, "integer too large"))
    }

    fn terms(&mut self) -> Result<Vec<Term>> {
        let mut terms: Vec<Term> = Vec::new();
        let mut negated = false;
        if self.peek() == Some('-') {
            self.pos += 1;
            negated = true;
        } else if self.peek() == Some('+') {
            self.pos += 1;
        }
        loop {
            let at = self.offset();
            let (e, c) = self.term()?;
            if terms.iter().any(|&(e2, _, _)| e2 == e) {
                return Err(Error::parse(at, format!("repeated exponent {e}")));
            }
            terms.push((e, c, negated));
            match self.peek() {
                None => break,
                Some('+') => {
                    self.pos += 1;
                    negated = false;
                }
                Some('-') => {
                    self.pos += 1;
                    negated = true;
                }
                Some(ch) => {
                    return Err(Error::parse(self.offset(), format!("unexpected {ch:?}")));
                }
            }
        }
        Ok(terms)
    }

    fn term(&mut self) -> Result<(usize, u32)> {
        let at = self.offset();
        let coeff = self.number()?;
        let mut has_var = false;
        if coeff.is_some() {
            if self.peek() == Some('*') {
                self.pos += 1;
                if self.peek() != Some(self.var) {
                    return Err(Error::parse(self.offset(), format!("expected {:?}", self.var)));
                }
            }
        }
        if self.peek() == Some(self.var) {
            self.pos += 1;
            has_var = true;
        }
        if coeff.is_none() && !has_var {
            return Err(Error::parse(at, "expected a term"));
        }
        let mut exp = 0usize;
        if has_var {
            exp = 1;
            if self.peek() == Some('^') {
                self.pos += 1;
                let e_at = self.offset();
                exp = self
                    .number()?
                    .ok_or_else(|| Error::parse(e_at, "expected an exponent"))?
                    as usize;
                if exp > 4096 {
                    return Err(Error::parse(e_at, "exponent too large"));
                }
            }
        }
        let c = coeff.unwrap_or(1);
        if c >= self.bound as u64 {
            return Err(Error::parse(at, format!("element index {c} out of range")));
        }
        Ok((exp, c as u32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f3() -> FieldCtx {
        FieldCtx::new(3, 1, 1).unwrap()
    }

    fn p(ctx: &FieldCtx, s: &str) -> APoly {
        APoly::parse(ctx, s).unwrap()
    }

    #[test]
    fn product_and_identities() {
        let ctx = f3();
        // (T+1)(T+2) = T^2 + 3T + 2 = T^2 + 2
        assert_eq!(p(&ctx, "T+1").mul(&ctx, &p(&ctx, "T+2")), p(&ctx, "T^2+2"));
        let f = p(&ctx, "2*T^3+T");
        assert_eq!(f.add(&ctx, &APoly::zero()), f);
        assert_eq!(APoly::t().mul(&ctx, &APoly::t()), p(&ctx, "T^2"));
        assert_eq!(APoly::arith(&ctx, PolyOp::Sub, &f, &f), APoly::zero());
    }

    #[test]
    fn divmod_examples() {
        let ctx = f3();
        let (q, r) = p(&ctx, "T^2+1").divmod(&ctx, &APoly::t()).unwrap();
        assert_eq!((q, r), (APoly::t(), APoly::one()));
        let (q, r) = p(&ctx, "T-1").divmod(&ctx, &p(&ctx, "T-1")).unwrap();
        assert_eq!((q, r), (APoly::one(), APoly::zero()));
        let f = p(&ctx, "T^3+2*T");
        let g = p(&ctx, "T+1");
        let (q, r) = f.divmod(&ctx, &g).unwrap();
        assert_eq!(q.mul(&ctx, &g).add(&ctx, &r), f);
        assert!(r.degree().is_none() || r.degree() < g.degree());
        assert_eq!(f.divmod(&ctx, &APoly::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn gcd_examples() {
        let ctx = f3();
        assert_eq!(
            p(&ctx, "T^2-1").gcd_monic(&ctx, &p(&ctx, "T-1")).unwrap(),
            p(&ctx, "T+2")
        );
        assert_eq!(p(&ctx, "2").gcd_monic(&ctx, &APoly::t()).unwrap(), APoly::one());
        assert_eq!(p(&ctx, "T^2").gcd_monic(&ctx, &p(&ctx, "T^3")).unwrap(), p(&ctx, "T^2"));
        assert_eq!(
            APoly::zero().gcd_monic(&ctx, &APoly::zero()),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn irreducibility_examples() {
        let ctx = f3();
        assert!(APoly::t().is_irreducible(&ctx).unwrap());
        assert!(p(&ctx, "T^2+1").is_irreducible(&ctx).unwrap());
        assert!(!p(&ctx, "T^2-1").is_irreducible(&ctx).unwrap());
        assert_eq!(p(&ctx, "2").is_irreducible(&ctx), Err(Error::ConstantPolynomial));
    }

    #[test]
    fn square_part_examples() {
        let ctx = f3();
        let (g, w) = p(&ctx, "T^3+T^2").square_part(&ctx).unwrap();
        assert_eq!((g, w), (APoly::t(), p(&ctx, "T+1")));
        let (g, w) = p(&ctx, "T+1").square_part(&ctx).unwrap();
        assert_eq!((g, w), (APoly::one(), p(&ctx, "T+1")));
        let (g, w) = p(&ctx, "2*T^2").square_part(&ctx).unwrap();
        assert_eq!((g, w), (APoly::t(), p(&ctx, "2")));
        assert_eq!(APoly::zero().square_part(&ctx), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn square_part_of_pth_powers() {
        let ctx = f3();
        // T^3 + 1 = (T+1)^3 has vanishing derivative
        let (g, w) = p(&ctx, "T^3+1").square_part(&ctx).unwrap();
        assert_eq!(g, p(&ctx, "T+1"));
        assert_eq!(w, p(&ctx, "T+1"));
        // T^6 (T+2)^5
        let f = APoly::t().pow(&ctx, 6).mul(&ctx, &p(&ctx, "T+2").pow(&ctx, 5));
        let (g, w) = f.square_part(&ctx).unwrap();
        assert_eq!(g, APoly::t().pow(&ctx, 3).mul(&ctx, &p(&ctx, "T+2").pow(&ctx, 2)));
        assert_eq!(w, p(&ctx, "T+2"));
    }

    #[test]
    fn monic_generators() {
        let ctx = f3();
        assert_eq!(p(&ctx, "2*T-1").monic_gen(&ctx).unwrap(), p(&ctx, "T+1"));
        assert_eq!(APoly::t().monic_gen(&ctx).unwrap(), APoly::t());
        assert_eq!(p(&ctx, "2").monic_gen(&ctx).unwrap(), APoly::one());
        assert_eq!(APoly::zero().monic_gen(&ctx), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn enumeration_counts() {
        let ctx = f3();
        assert_eq!(enumerate_polys(&ctx, 0, |_| true).count(), 3);
        assert_eq!(enumerate_polys(&ctx, 1, |_| true).count(), 9);
        let t = APoly::t();
        let coprime = enumerate_polys(&ctx, 1, move |c| !c.is_divisible_by(&f3(), &t)).count();
        assert_eq!(coprime, 6);
        assert_eq!(monic_irreducibles(&ctx, 2).count(), 3);
    }

    #[test]
    fn text_grammar() {
        let ctx = f3();
        let f = p(&ctx, "T^2+2*T+1");
        assert_eq!(f.indices(), &[1, 2, 1]);
        assert_eq!(p(&ctx, "[1,2,1]"), f);
        assert_eq!(f.to_string(), "T^2+2*T+1");
        assert_eq!(p(&ctx, " 2 * T ^ 3 - T "), p(&ctx, "2*T^3+2*T"));
        assert_eq!(APoly::zero().to_string(), "0");
        assert_eq!(p(&ctx, "0"), APoly::zero());
        match APoly::parse(&ctx, "T^2+*T") {
            Err(Error::Parse { position, .. }) => assert_eq!(position, 4),
            other => panic!("{other:?}"),
        }
        assert!(APoly::parse(&ctx, "3*T").is_err());
        assert!(APoly::parse(&ctx, "T+T").is_err());
        assert!(APoly::parse(&ctx, "").is_err());
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, "\"T^2+2*T+1\"");
        assert_eq!(serde_json::from_str::<APoly>(&json).unwrap(), f);
    }
}
