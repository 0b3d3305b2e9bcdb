//! Dense univariate polynomials over a table-backed finite field.
//!
//! Coefficients are element indices, constant term first, with no trailing
//! zeros (the zero polynomial is the empty vector).

use crate::table::GfTable;

pub(crate) fn trim(mut v: Vec<u32>) -> Vec<u32> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

pub(crate) fn degree(a: &[u32]) -> Option<usize> {
    a.len().checked_sub(1)
}

pub(crate) fn add(t: &GfTable, a: &[u32], b: &[u32]) -> Vec<u32> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    let mut out = long.to_vec();
    for (o, &s) in out.iter_mut().zip(short) {
        *o = t.add(*o, s);
    }
    trim(out)
}

pub(crate) fn neg(t: &GfTable, a: &[u32]) -> Vec<u32> {
    a.iter().map(|&x| t.neg(x)).collect()
}

pub(crate) fn sub(t: &GfTable, a: &[u32], b: &[u32]) -> Vec<u32> {
    add(t, a, &neg(t, b))
}

pub(crate) fn scale(t: &GfTable, a: &[u32], k: u32) -> Vec<u32> {
    if k == 0 {
        return Vec::new();
    }
    a.iter().map(|&x| t.mul(x, k)).collect()
}

pub(crate) fn mul(t: &GfTable, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = t.add(out[i + j], t.mul(x, y));
        }
    }
    trim(out)
}

/// Euclidean division; `b` must be nonzero.
pub(crate) fn divrem(t: &GfTable, a: &[u32], b: &[u32]) -> (Vec<u32>, Vec<u32>) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = t.inv(b[db]);
    let mut r = a.to_vec();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u32; r.len() - db];
    for k in (db..r.len()).rev() {
        let coef = r[k];
        if coef == 0 {
            continue;
        }
        let f = t.mul(coef, lead_inv);
        q[k - db] = f;
        for (j, &bj) in b.iter().enumerate() {
            let idx = k - db + j;
            r[idx] = t.sub(r[idx], t.mul(f, bj));
        }
    }
    r.truncate(db);
    (trim(q), trim(r))
}

pub(crate) fn rem(t: &GfTable, a: &[u32], b: &[u32]) -> Vec<u32> {
    divrem(t, a, b).1
}

pub(crate) fn make_monic(t: &GfTable, a: &[u32]) -> Vec<u32> {
    match a.last() {
        None => Vec::new(),
        Some(&lead) => scale(t, a, t.inv(lead)),
    }
}

/// Monic gcd; gcd(0, 0) = 0.
pub(crate) fn gcd(t: &GfTable, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = rem(t, &x, &y);
        x = y;
        y = r;
    }
    make_monic(t, &x)
}

pub(crate) fn derivative(t: &GfTable, a: &[u32], p: u32) -> Vec<u32> {
    let out = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| {
            let k = (i as u32) % p;
            if k == 0 {
                0
            } else {
                // k as an element of the prime subfield has index k
                t.mul(c, k)
            }
        })
        .collect();
    trim(out)
}

#[cfg(test)]
pub(crate) fn eval(t: &GfTable, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| t.add(t.mul(acc, x), c))
}

pub(crate) fn mulmod(t: &GfTable, a: &[u32], b: &[u32], m: &[u32]) -> Vec<u32> {
    rem(t, &mul(t, a, b), m)
}

pub(crate) fn powmod(t: &GfTable, base: &[u32], mut e: u128, m: &[u32]) -> Vec<u32> {
    let mut result = rem(t, &[1], m);
    let mut b = rem(t, base, m);
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(t, &result, &b, m);
        }
        b = mulmod(t, &b, &b, m);
        e >>= 1;
    }
    result
}

/// Rabin's test: `f` of degree k is irreducible over F_Q iff
/// x^(Q^k) = x mod f and gcd(x^(Q^(k/r)) - x, f) = 1 for each prime r | k.
pub(crate) fn is_irreducible(t: &GfTable, f: &[u32]) -> bool {
    let k = match degree(f) {
        Some(0) | None => return false,
        Some(k) => k,
    };
    if k == 1 {
        return true;
    }
    let f = make_monic(t, f);
    let x = vec![0u32, 1];
    let q = t.size() as u128;
    // frob[i] = x^(Q^i) mod f
    let mut frob = vec![rem(t, &x, &f)];
    for i in 1..=k {
        let next = powmod(t, &frob[i - 1], q, &f);
        frob.push(next);
    }
    if sub(t, &frob[k], &rem(t, &x, &f)).iter().any(|&c| c != 0) {
        return false;
    }
    prime_factors(k as u64).into_iter().all(|r| {
        let h = sub(t, &frob[k / r as usize], &x);
        let g = gcd(t, &h, &f);
        g.len() == 1
    })
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_back_multiplies() {
        let t = GfTable::prime(5);
        let a = vec![3, 0, 4, 1, 2];
        let b = vec![1, 2, 3];
        let (q, r) = divrem(&t, &a, &b);
        assert!(r.len() < b.len());
        assert_eq!(add(&t, &mul(&t, &q, &b), &r), a);
    }

    #[test]
    fn rabin_matches_root_test_for_quadratics_over_f5() {
        let t = GfTable::prime(5);
        for c0 in 0..5 {
            for c1 in 0..5 {
                let f = vec![c0, c1, 1];
                let has_root = (0..5).any(|x| eval(&t, &f, x) == 0);
                assert_eq!(is_irreducible(&t, &f), !has_root, "{f:?}");
            }
        }
    }
}
