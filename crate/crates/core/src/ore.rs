//! The twisted polynomial ring `L{τ}` with `τλ = λ^q τ`.
//!
//! Elements act on extensions of `L` as `F_q`-linear maps
//! `x ↦ Σ u_i x^(q^i)`. Evaluation outside `L` goes through an
//! [`EvalField`], a larger context `F_{q^(n k)}` plus an explicit embedding
//! of `L` into it.

use std::fmt;

use crate::dense;
use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElem, Level};
use crate::poly::{assemble, parse_terms};

/// `Σ u_i τ^i` with `u_i ∈ L` stored as `L` indices, `τ^0` first, no trailing
/// zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct OrePoly {
    coeffs: Vec<u32>,
}

impl OrePoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self { coeffs: vec![1] }
    }

    pub fn tau() -> Self {
        Self::tau_pow(1)
    }

    pub fn tau_pow(k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = 1;
        Self { coeffs: v }
    }

    pub fn constant(x: FieldElem) -> Self {
        Self::from_raw(vec![x.index()])
    }

    /// `x τ^k`.
    pub fn monomial(x: FieldElem, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = x.index();
        Self::from_raw(v)
    }

    pub fn from_indices(ctx: &FieldCtx, coeffs: &[u32]) -> Result<Self> {
        if let Some(&bad) = coeffs.iter().find(|&&c| c >= ctx.size()) {
            return Err(Error::ElementOutOfRange {
                index: bad as u64,
                size: ctx.size() as u64,
            });
        }
        Ok(Self::from_raw(coeffs.to_vec()))
    }

    pub(crate) fn from_raw(coeffs: Vec<u32>) -> Self {
        Self {
            coeffs: dense::trim(coeffs),
        }
    }

    pub fn indices(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn coeff(&self, ctx: &FieldCtx, i: usize) -> FieldElem {
        ctx.fl(self.coeffs.get(i).copied().unwrap_or(0))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn tau_degree(&self) -> Option<usize> {
        dense::degree(&self.coeffs)
    }

    /// Index of the lowest nonzero coefficient.
    pub fn height(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    pub fn add(&self, ctx: &FieldCtx, rhs: &OrePoly) -> OrePoly {
        Self::from_raw(dense::add(ctx.tl(), &self.coeffs, &rhs.coeffs))
    }

    pub fn sub(&self, ctx: &FieldCtx, rhs: &OrePoly) -> OrePoly {
        Self::from_raw(dense::sub(ctx.tl(), &self.coeffs, &rhs.coeffs))
    }

    pub fn neg(&self, ctx: &FieldCtx) -> OrePoly {
        Self::from_raw(dense::neg(ctx.tl(), &self.coeffs))
    }

    /// Left multiplication by a scalar: `λ·u`.
    pub fn scale(&self, ctx: &FieldCtx, lambda: FieldElem) -> OrePoly {
        Self::from_raw(dense::scale(ctx.tl(), &self.coeffs, lambda.index()))
    }

    /// `u·τ^k`, a plain shift (no twist on the right).
    pub fn shift(&self, k: usize) -> OrePoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.coeffs);
        Self { coeffs: v }
    }

    /// `(Σ a_i τ^i)(Σ b_j τ^j) = Σ a_i b_j^(q^i) τ^(i+j)`.
    pub fn mul(&self, ctx: &FieldCtx, rhs: &OrePoly) -> OrePoly {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let t = ctx.tl();
        let q = ctx.q() as u128;
        let mut out = vec![0u32; self.coeffs.len() + rhs.coeffs.len() - 1];
        // twisted[j] = b_j^(q^i), updated as i advances
        let mut twisted = rhs.coeffs.clone();
        for (i, &a) in self.coeffs.iter().enumerate() {
            if i > 0 {
                for b in twisted.iter_mut() {
                    *b = t.pow(*b, q);
                }
            }
            if a == 0 {
                continue;
            }
            for (j, &b) in twisted.iter().enumerate() {
                out[i + j] = t.add(out[i + j], t.mul(a, b));
            }
        }
        Self::from_raw(out)
    }

    /// Right division: `self = quot·v + rem` with `deg rem < deg v`.
    pub fn right_divmod(&self, ctx: &FieldCtx, v: &OrePoly) -> Result<(OrePoly, OrePoly)> {
        let dv = v.tau_degree().ok_or(Error::DivisionByZero)?;
        let t = ctx.tl();
        let q = ctx.q() as u128;
        let lead = v.coeffs[dv];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dv {
            return Ok((Self::zero(), Self::from_raw(rem)));
        }
        let mut quot = vec![0u32; rem.len() - dv];
        for k in (dv..rem.len()).rev() {
            if rem[k] == 0 {
                continue;
            }
            let shift = k - dv;
            // a τ^shift · v has leading term a·lead^(q^shift) τ^k
            let frob = q.pow(shift as u32);
            let a = t.div(rem[k], t.pow(lead, frob));
            quot[shift] = a;
            for (j, &vj) in v.coeffs.iter().enumerate() {
                if vj == 0 {
                    continue;
                }
                let term = t.mul(a, t.pow(vj, frob));
                rem[shift + j] = t.sub(rem[shift + j], term);
            }
            debug_assert_eq!(rem[k], 0);
        }
        rem.truncate(dv);
        Ok((Self::from_raw(quot), Self::from_raw(rem)))
    }

    /// `Σ u_i x^(q^i)` for `x` in the same context as the coefficients.
    pub fn eval(&self, ctx: &FieldCtx, x: FieldElem) -> Result<FieldElem> {
        if x.level() != Level::Ext {
            return Err(Error::LevelMismatch);
        }
        if let Some(&bad) = self.coeffs.iter().find(|&&c| c >= ctx.size()) {
            return Err(Error::ElementOutOfRange {
                index: bad as u64,
                size: ctx.size() as u64,
            });
        }
        Ok(ctx.fl(self.eval_raw(ctx, x.index())))
    }

    pub(crate) fn eval_raw(&self, ctx: &FieldCtx, x: u32) -> u32 {
        let t = ctx.tl();
        let q = ctx.q() as u128;
        let mut acc = 0;
        let mut power = x;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                power = t.pow(power, q);
            }
            acc = t.add(acc, t.mul(c, power));
        }
        acc
    }

    /// Parses `a0 + a1*t + a2*t^2` or `[a0,a1,a2]`.
    pub fn parse(ctx: &FieldCtx, text: &str) -> Result<OrePoly> {
        let terms = parse_terms(text, 't', ctx.size())?;
        Ok(Self::from_raw(assemble(terms, |c| ctx.tl().neg(c))))
    }
}

impl fmt::Display for OrePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "t")?,
                (1, c) => write!(f, "{c}*t")?,
                (i, 1) => write!(f, "t^{i}")?,
                (i, c) => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// A finite layer `F_{q^(n k)}` of the algebraic closure of `L` together with
/// an embedding of `L`.
#[derive(Debug, Clone)]
pub struct EvalField {
    ext: FieldCtx,
    k: u32,
    embedding: Vec<u32>,
}

impl EvalField {
    pub fn new(base: &FieldCtx, k: u32, max_size: u64) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("extension degree must be at least 1"));
        }
        if k == 1 {
            return Ok(Self {
                ext: base.clone(),
                k,
                embedding: (0..base.size()).collect(),
            });
        }
        let ext = FieldCtx::with_limit(base.p(), base.s(), base.n() * k, max_size)?;
        // the generator of L goes to the first root of its modulus
        let modulus = base.modulus_l();
        let root = (0..ext.size())
            .find(|&r| {
                let x = ext.fl(r);
                modulus
                    .iter()
                    .rev()
                    .fold(ext.zero(Level::Ext), |acc, &c| {
                        ext.add(ext.mul(acc, x), ext.fl(c))
                    })
                    .is_zero()
            })
            .expect("L embeds into every extension of degree multiple of n");
        let root = ext.fl(root);
        let mut powers = Vec::with_capacity(base.n() as usize);
        let mut acc = ext.one(Level::Ext);
        for _ in 0..base.n() {
            powers.push(acc);
            acc = ext.mul(acc, root);
        }
        let embedding = base
            .elements(Level::Ext)
            .map(|x| {
                base.coords(x)
                    .iter()
                    .zip(&powers)
                    .fold(ext.zero(Level::Ext), |acc, (&c, &pw)| {
                        ext.add(acc, ext.mul(ext.fl(c), pw))
                    })
                    .index()
            })
            .collect();
        Ok(Self { ext, k, embedding })
    }

    pub fn ctx(&self) -> &FieldCtx {
        &self.ext
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn embed(&self, x: FieldElem) -> FieldElem {
        self.ext.fl(self.embedding[x.index() as usize])
    }

    /// Moves the coefficients of an `L{τ}` element into the extension.
    pub fn embed_ore(&self, u: &OrePoly) -> OrePoly {
        OrePoly::from_raw(
            u.coeffs
                .iter()
                .map(|&c| self.embedding[c as usize])
                .collect(),
        )
    }

    /// Evaluates an `L{τ}` element at a point of the extension.
    pub fn additive_eval(&self, u: &OrePoly, x: FieldElem) -> Result<FieldElem> {
        if u.coeffs.iter().any(|&c| c as usize >= self.embedding.len()) {
            return Err(Error::invalid("coefficients do not lie in the embedded field"));
        }
        if x.index() >= self.ext.size() || x.level() != Level::Ext {
            return Err(Error::LevelMismatch);
        }
        Ok(self.embed_ore(u).eval(&self.ext, x)?)
    }
}
