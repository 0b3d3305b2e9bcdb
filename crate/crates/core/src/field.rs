//! The tower F_p ⊂ F_q ⊂ L = F_{q^n}.
//!
//! Both moduli are chosen deterministically: the first monic irreducible of
//! the required degree when candidates are ordered lexicographically by
//! `(a_0, a_1, ..., a_{k-1})`, constant coefficient most significant. The same
//! `(p, s, n)` therefore always yields the same model of `L`, and element
//! indices are portable between runs.
//!
//! Element indices: an `F_q` element `sum b_j y^j` has index `sum b_j p^j`; an
//! `L` element `sum c_i x^i` has index `sum idx(c_i) q^i`. The subfield `F_q`
//! sits inside `L` as the indices `0..q`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::dense;
use crate::error::{Error, Result};
use crate::table::GfTable;

/// Largest `q^n` accepted by [`FieldCtx::new`].
pub const DEFAULT_MAX_FIELD_SIZE: u64 = 1 << 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    /// The constant field `F_q`.
    Base,
    /// The A-field `L = F_{q^n}`.
    Ext,
}

/// An element of `F_q` or `L`, identified by its index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    level: Level,
    index: u32,
}

impl FieldElem {
    pub fn level(self) -> Level {
        self.level
    }

    pub fn index(self) -> u32 {
        self.index
    }

    pub fn is_zero(self) -> bool {
        self.index == 0
    }

    pub fn is_one(self) -> bool {
        self.index == 1
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
    Div,
}

#[derive(Debug, Clone)]
pub struct FieldCtx {
    p: u32,
    s: u32,
    n: u32,
    q: u32,
    size: u32,
    modulus_q: Vec<u32>,
    modulus_l: Vec<u32>,
    tq: GfTable,
    tl: GfTable,
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        (self.p, self.s, self.n) == (other.p, other.s, other.n)
    }
}

impl Eq for FieldCtx {}

impl FieldCtx {
    pub fn new(p: u32, s: u32, n: u32) -> Result<Self> {
        Self::with_limit(p, s, n, DEFAULT_MAX_FIELD_SIZE)
    }

    /// Like [`FieldCtx::new`] with an explicit bound on `q^n`.
    pub fn with_limit(p: u32, s: u32, n: u32, max_size: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::Characteristic2);
        }
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if s == 0 || n == 0 {
            return Err(Error::invalid("s and n must be at least 1"));
        }
        let size = (p as u128)
            .checked_pow(s * n)
            .filter(|&v| v <= max_size as u128)
            .ok_or_else(|| Error::ScaleGuard {
                what: format!("field of order {p}^{}", s * n),
                needed: (p as u128).saturating_pow(s * n),
                budget: max_size as u128,
            })?;

        let tp = GfTable::prime(p);
        let modulus_q = first_irreducible(&tp, s as usize);
        let tq = GfTable::extension(&tp, &modulus_q);
        let modulus_l = first_irreducible(&tq, n as usize);
        let tl = GfTable::extension(&tq, &modulus_l);
        debug_assert_eq!(tl.size() as u128, size);
        Ok(Self {
            p,
            s,
            n,
            q: tq.size(),
            size: size as u32,
            modulus_q,
            modulus_l,
            tq,
            tl,
        })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `q = p^s`.
    pub fn q(&self) -> u32 {
        self.q
    }

    /// `q^n`, the number of elements of `L`.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Modulus of `F_q` over `F_p` as prime-field residues, constant first.
    pub fn modulus_q(&self) -> &[u32] {
        &self.modulus_q
    }

    /// Modulus of `L` over `F_q` as `F_q` indices, constant first.
    pub fn modulus_l(&self) -> &[u32] {
        &self.modulus_l
    }

    pub(crate) fn table(&self, level: Level) -> &GfTable {
        match level {
            Level::Base => &self.tq,
            Level::Ext => &self.tl,
        }
    }

    pub(crate) fn tq(&self) -> &GfTable {
        &self.tq
    }

    pub(crate) fn tl(&self) -> &GfTable {
        &self.tl
    }

    pub fn level_size(&self, level: Level) -> u32 {
        match level {
            Level::Base => self.q,
            Level::Ext => self.size,
        }
    }

    pub fn element(&self, level: Level, index: u64) -> Result<FieldElem> {
        let size = self.level_size(level);
        if index >= size as u64 {
            return Err(Error::ElementOutOfRange {
                index,
                size: size as u64,
            });
        }
        Ok(FieldElem {
            level,
            index: index as u32,
        })
    }

    /// An `F_q` element by index. Panics when out of range.
    pub fn fq(&self, index: u32) -> FieldElem {
        assert!(index < self.q, "F_q index {index} out of range");
        FieldElem {
            level: Level::Base,
            index,
        }
    }

    /// An `L` element by index. Panics when out of range.
    pub fn fl(&self, index: u32) -> FieldElem {
        assert!(index < self.size, "L index {index} out of range");
        FieldElem {
            level: Level::Ext,
            index,
        }
    }

    pub fn zero(&self, level: Level) -> FieldElem {
        FieldElem { level, index: 0 }
    }

    pub fn one(&self, level: Level) -> FieldElem {
        FieldElem { level, index: 1 }
    }

    /// The residue of an integer in the prime subfield.
    pub fn from_int(&self, level: Level, k: i64) -> FieldElem {
        FieldElem {
            level,
            index: k.rem_euclid(self.p as i64) as u32,
        }
    }

    /// All elements of a level in index order.
    pub fn elements(&self, level: Level) -> impl Iterator<Item = FieldElem> {
        (0..self.level_size(level)).map(move |index| FieldElem { level, index })
    }

    /// Coordinates over the level below: `s` residues for `F_q`, `n`
    /// `F_q`-indices for `L`.
    pub fn coords(&self, x: FieldElem) -> Vec<u32> {
        let (radix, len) = match x.level {
            Level::Base => (self.p, self.s),
            Level::Ext => (self.q, self.n),
        };
        let mut idx = x.index;
        (0..len)
            .map(|_| {
                let d = idx % radix;
                idx /= radix;
                d
            })
            .collect()
    }

    pub fn from_coords(&self, level: Level, coords: &[u32]) -> Result<FieldElem> {
        let (radix, len) = match level {
            Level::Base => (self.p, self.s),
            Level::Ext => (self.q, self.n),
        };
        if coords.len() != len as usize {
            return Err(Error::invalid(format!(
                "expected {len} coordinates, got {}",
                coords.len()
            )));
        }
        if let Some(&bad) = coords.iter().find(|&&c| c >= radix) {
            return Err(Error::ElementOutOfRange {
                index: bad as u64,
                size: radix as u64,
            });
        }
        let index = coords.iter().rev().fold(0u32, |acc, &d| acc * radix + d);
        Ok(FieldElem { level, index })
    }

    /// Views an `F_q` element inside `L`.
    pub fn embed(&self, x: FieldElem) -> FieldElem {
        FieldElem {
            level: Level::Ext,
            index: x.index,
        }
    }

    /// The `F_q` element equal to `x`, if `x` lies in the subfield.
    pub fn to_base(&self, x: FieldElem) -> Option<FieldElem> {
        (x.index < self.q).then_some(FieldElem {
            level: Level::Base,
            index: x.index,
        })
    }

    pub fn arith(&self, kind: ArithKind, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        if a.level != b.level {
            return Err(Error::LevelMismatch);
        }
        Ok(match kind {
            ArithKind::Add => self.add(a, b),
            ArithKind::Sub => self.sub(a, b),
            ArithKind::Mul => self.mul(a, b),
            ArithKind::Div => {
                if b.is_zero() {
                    return Err(Error::DivisionByZero);
                }
                self.div(a, b)
            }
        })
    }

    #[inline]
    fn wrap(&self, level: Level, index: u32) -> FieldElem {
        FieldElem { level, index }
    }

    #[inline]
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        debug_assert_eq!(a.level, b.level);
        self.wrap(a.level, self.table(a.level).add(a.index, b.index))
    }

    #[inline]
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        debug_assert_eq!(a.level, b.level);
        self.wrap(a.level, self.table(a.level).sub(a.index, b.index))
    }

    #[inline]
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        self.wrap(a.level, self.table(a.level).neg(a.index))
    }

    #[inline]
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        debug_assert_eq!(a.level, b.level);
        self.wrap(a.level, self.table(a.level).mul(a.index, b.index))
    }

    /// Panics on a zero divisor; use [`FieldCtx::arith`] for the checked form.
    pub fn div(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        assert!(!b.is_zero(), "division by zero");
        self.wrap(a.level, self.table(a.level).div(a.index, b.index))
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.wrap(a.level, self.table(a.level).inv(a.index)))
    }

    pub fn pow(&self, a: FieldElem, e: u128) -> FieldElem {
        self.wrap(a.level, self.table(a.level).pow(a.index, e))
    }

    /// `x^q`. On `L` its `n`-fold composite is the identity; on `F_q` it is
    /// the identity.
    pub fn frobenius_q(&self, x: FieldElem) -> FieldElem {
        match x.level {
            Level::Base => x,
            Level::Ext => self.pow(x, self.q as u128),
        }
    }

    /// `x^(q^k)`.
    pub fn frobenius_pow(&self, x: FieldElem, k: u32) -> FieldElem {
        match x.level {
            Level::Base => x,
            Level::Ext => {
                let k = k % self.n;
                self.pow(x, (self.q as u128).pow(k))
            }
        }
    }

    /// Euler's criterion in `F_q`; zero counts as a square.
    pub fn is_square_in_fq(&self, x: FieldElem) -> Result<bool> {
        let x = match x.level {
            Level::Base => x,
            Level::Ext => self.to_base(x).ok_or(Error::LevelMismatch)?,
        };
        if x.is_zero() {
            return Ok(true);
        }
        Ok(self.pow(x, ((self.q - 1) / 2) as u128).is_one())
    }

    /// Product of the `n` conjugates of `x`, returned in `F_q`.
    pub fn norm_to_fq(&self, x: FieldElem) -> FieldElem {
        if x.level == Level::Base {
            return self.pow(x, self.n as u128);
        }
        // x^(1 + q + ... + q^(n-1))
        let e = ((self.q as u128).pow(self.n) - 1) / (self.q as u128 - 1);
        let v = self.pow(x, e);
        self.to_base(v).expect("norm lies in F_q")
    }
}

impl fmt::Display for FieldCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.p, self.s, self.n)
    }
}

impl FromStr for FieldCtx {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::parse(0, "expected \"p,s,n\""));
        }
        let mut vals = [0u32; 3];
        let mut offset = 0;
        for (i, part) in parts.iter().enumerate() {
            vals[i] = part
                .parse()
                .map_err(|_| Error::parse(offset, format!("not an integer: {part:?}")))?;
            offset += part.len() + 1;
        }
        FieldCtx::new(vals[0], vals[1], vals[2])
    }
}

/// First monic irreducible of degree `k` over the field of `t`, candidates
/// ordered with the constant coefficient most significant.
fn first_irreducible(t: &GfTable, k: usize) -> Vec<u32> {
    let b = t.size() as u64;
    let count = b.pow(k as u32);
    for i in 0..count {
        let mut f = vec![0u32; k + 1];
        let mut rest = i;
        for j in (0..k).rev() {
            f[j] = (rest % b) as u32;
            rest /= b;
        }
        f[k] = 1;
        if dense::is_irreducible(t, &f) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
