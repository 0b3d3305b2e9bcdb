//! Which `X^2 - cX + μP^m` occur as Frobenius characteristic polynomials.
//!
//! The imaginary test at `∞` is authoritative: for odd `q`, `K(√Δ)/K` is
//! imaginary iff `Δ` is not a square in `F_q((1/T))`, i.e. `deg Δ` is odd, or
//! it is even and the leading coefficient is a non-square in `F_q`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::drinfeld::CharPoly;
use crate::field::{FieldCtx, FieldElem};
use crate::poly::APoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassKind {
    #[serde(rename = "ordinary")]
    Ordinary,
    /// `c = 0` with `-4μP^m` imaginary.
    #[serde(rename = "ss-a")]
    SupersingularA,
    /// `m` even, `d` odd, `c = c0 P^(m/2)` with `X^2 - c0 X + μ` irreducible.
    #[serde(rename = "ss-b")]
    SupersingularB,
    /// `m` even, `X^2 - cX + μP^m = (X + μ' P^(m/2))^2`.
    #[serde(rename = "ss-c")]
    SupersingularC,
    #[serde(rename = "invalid")]
    Invalid,
}

impl ClassKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClassKind::Ordinary => "ordinary",
            ClassKind::SupersingularA => "ss-a",
            ClassKind::SupersingularB => "ss-b",
            ClassKind::SupersingularC => "ss-c",
            ClassKind::Invalid => "invalid",
        }
    }

    pub fn is_supersingular(self) -> bool {
        matches!(
            self,
            ClassKind::SupersingularA | ClassKind::SupersingularB | ClassKind::SupersingularC
        )
    }

    pub fn is_valid(self) -> bool {
        self != ClassKind::Invalid
    }
}

impl fmt::Display for ClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassLabel {
    pub kind: ClassKind,
    /// Short machine-readable reason code.
    pub reason: String,
}

impl ClassLabel {
    fn new(kind: ClassKind, reason: &str) -> Self {
        Self {
            kind,
            reason: reason.to_string(),
        }
    }
}

pub fn is_imaginary(ctx: &FieldCtx, delta: &APoly) -> bool {
    match delta.degree() {
        None => false,
        Some(d) if d % 2 == 1 => true,
        Some(_) => !ctx
            .is_square_in_fq(delta.lead(ctx))
            .expect("leading coefficient lies in F_q"),
    }
}

/// `c^2 - 4μP^m`.
pub fn discriminant(ctx: &FieldCtx, c: &APoly, mu: FieldElem, p: &APoly, m: u32) -> APoly {
    let four_mu = ctx.mul(ctx.from_int(mu.level(), 4), mu);
    c.mul(ctx, c).sub(ctx, &p.pow(ctx, m).scale(ctx, four_mu))
}

fn within_bound(c: &APoly, p: &APoly, m: u32) -> bool {
    let md = m as usize * p.degree().unwrap_or(0);
    c.degree().is_none_or(|dc| 2 * dc <= md)
}

pub fn valid_ordinary(ctx: &FieldCtx, c: &APoly, mu: FieldElem, p: &APoly, m: u32) -> bool {
    if mu.is_zero() || !within_bound(c, p, m) {
        return false;
    }
    let coprime = c
        .gcd_monic(ctx, p)
        .map(|g| g == APoly::one())
        .unwrap_or(false);
    coprime && is_imaginary(ctx, &discriminant(ctx, c, mu, p, m))
}

/// Returns the supersingular case that accepts `(c, μ)`, if any.
pub fn valid_supersingular(
    ctx: &FieldCtx,
    c: &APoly,
    mu: FieldElem,
    p: &APoly,
    m: u32,
) -> Option<ClassKind> {
    if mu.is_zero() || !within_bound(c, p, m) {
        return None;
    }
    let d = p.degree().unwrap_or(0) as u32;
    if c.is_zero() {
        let delta = discriminant(ctx, c, mu, p, m);
        return is_imaginary(ctx, &delta).then_some(ClassKind::SupersingularA);
    }
    if m % 2 != 0 {
        return None;
    }
    // remaining cases need c = c0 P^(m/2) with c0 a nonzero constant
    let half = p.pow(ctx, m / 2);
    let (c0, r) = c.divmod(ctx, &half).expect("P^(m/2) is nonzero");
    if !r.is_zero() || !c0.is_constant() {
        return None;
    }
    let c0 = c0.lead(ctx);
    // (X + μ'P^(m/2))^2 = X^2 + 2μ'P^(m/2) X + μ'^2 P^m, so c = -2μ' and μ = μ'^2
    let two = ctx.from_int(mu.level(), 2);
    let mu_prime = ctx.div(ctx.neg(c0), two);
    if ctx.mul(mu_prime, mu_prime) == mu {
        return Some(ClassKind::SupersingularC);
    }
    if d % 2 == 1 {
        // X^2 - c0 X + μ irreducible over F_q
        let disc = ctx.sub(ctx.mul(c0, c0), ctx.mul(ctx.from_int(mu.level(), 4), mu));
        let nonsquare = !ctx.is_square_in_fq(disc).expect("F_q element");
        if nonsquare {
            return Some(ClassKind::SupersingularB);
        }
    }
    None
}

pub fn classify(ctx: &FieldCtx, c: &APoly, mu: FieldElem, p: &APoly, m: u32) -> ClassLabel {
    if mu.is_zero() {
        return ClassLabel::new(ClassKind::Invalid, "mu-zero");
    }
    if !within_bound(c, p, m) {
        return ClassLabel::new(ClassKind::Invalid, "degree-bound");
    }
    let ordinary = valid_ordinary(ctx, c, mu, p, m);
    let supersingular = valid_supersingular(ctx, c, mu, p, m);
    match (ordinary, supersingular) {
        (true, None) => ClassLabel::new(ClassKind::Ordinary, "coprime-imaginary"),
        (false, Some(kind)) => {
            let reason = match kind {
                ClassKind::SupersingularA => "trace-zero-imaginary",
                ClassKind::SupersingularB => "scaled-trace-irreducible",
                _ => "perfect-square",
            };
            ClassLabel::new(kind, reason)
        }
        (true, Some(_)) => unreachable!("coprimality and P | c are exclusive"),
        (false, None) => {
            let coprime = c
                .gcd_monic(ctx, p)
                .map(|g| g == APoly::one())
                .unwrap_or(false);
            let reason = if coprime { "real-at-infinity" } else { "non-supersingular-shape" };
            ClassLabel::new(ClassKind::Invalid, reason)
        }
    }
}

pub fn classify_char_poly(ctx: &FieldCtx, cp: &CharPoly) -> ClassLabel {
    classify(ctx, &cp.c, cp.mu(ctx), &cp.p, cp.m)
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
    fn imaginary_examples() {
        let ctx = f3();
        assert!(is_imaginary(&ctx, &p(&ctx, "T+1")));
        assert!(!is_imaginary(&ctx, &p(&ctx, "T^2+1")));
        assert!(is_imaginary(&ctx, &p(&ctx, "2*T^2+1")));
        assert!(!is_imaginary(&ctx, &APoly::zero()));
        assert!(!is_imaginary(&ctx, &p(&ctx, "1")));
        assert!(is_imaginary(&ctx, &p(&ctx, "2")));
    }

    #[test]
    fn ordinary_examples() {
        let ctx = f3();
        let t = APoly::t();
        assert!(valid_ordinary(&ctx, &p(&ctx, "2"), ctx.fq(2), &t, 1));
        assert!(!valid_ordinary(&ctx, &APoly::zero(), ctx.fq(1), &t, 1));
        // Δ = 4 - 8T^2 = 1 + T^2
        assert!(!valid_ordinary(&ctx, &p(&ctx, "2"), ctx.fq(2), &t, 2));
        assert_eq!(
            discriminant(&ctx, &p(&ctx, "2"), ctx.fq(2), &t, 2),
            p(&ctx, "T^2+1")
        );
    }

    #[test]
    fn supersingular_examples() {
        let ctx = f3();
        let t = APoly::t();
        assert_eq!(
            valid_supersingular(&ctx, &APoly::zero(), ctx.fq(1), &t, 1),
            Some(ClassKind::SupersingularA)
        );
        // -μ = 2 is a non-square
        assert_eq!(
            valid_supersingular(&ctx, &APoly::zero(), ctx.fq(1), &t, 2),
            Some(ClassKind::SupersingularA)
        );
        assert_eq!(valid_supersingular(&ctx, &APoly::zero(), ctx.fq(2), &t, 2), None);
        // (X + 2T)^2 = X^2 + TX + T^2 = X^2 - 2T X + T^2
        assert_eq!(
            valid_supersingular(&ctx, &p(&ctx, "2*T"), ctx.fq(1), &t, 2),
            Some(ClassKind::SupersingularC)
        );
        // c = T, μ = 2: Y^2 - Y + 2 has discriminant 1 - 8 = 2, a non-square
        assert_eq!(
            valid_supersingular(&ctx, &p(&ctx, "T"), ctx.fq(2), &t, 2),
            Some(ClassKind::SupersingularB)
        );
        assert_eq!(valid_supersingular(&ctx, &p(&ctx, "1"), ctx.fq(2), &t, 2), None);
    }

    #[test]
    fn classify_examples() {
        let ctx = f3();
        let t = APoly::t();
        assert_eq!(classify(&ctx, &p(&ctx, "2"), ctx.fq(2), &t, 1).kind, ClassKind::Ordinary);
        assert_eq!(
            classify(&ctx, &APoly::zero(), ctx.fq(1), &t, 1).kind,
            ClassKind::SupersingularA
        );
        // Δ = 1 - 4T^2 = 1 + 2T^2: leading 2 is a non-square
        assert_eq!(classify(&ctx, &p(&ctx, "1"), ctx.fq(1), &t, 2).kind, ClassKind::Ordinary);
        // Δ = 1 - 8T^2 = 1 + T^2: real
        let label = classify(&ctx, &p(&ctx, "1"), ctx.fq(2), &t, 2);
        assert_eq!(label.kind, ClassKind::Invalid);
        assert_eq!(label.reason, "real-at-infinity");
        assert_eq!(
            classify(&ctx, &p(&ctx, "T^2"), ctx.fq(1), &t, 2).kind,
            ClassKind::Invalid
        );
    }

    #[test]
    fn labels_serialize_to_short_strings() {
        let kinds = [
            ClassKind::Ordinary,
            ClassKind::SupersingularA,
            ClassKind::SupersingularB,
            ClassKind::SupersingularC,
            ClassKind::Invalid,
        ];
        let json: Vec<String> = kinds
            .iter()
            .map(|k| serde_json::to_string(k).unwrap())
            .collect();
        assert_eq!(json, ["\"ordinary\"", "\"ss-a\"", "\"ss-b\"", "\"ss-c\"", "\"invalid\""]);
    }
}
