//! Zech-logarithm tables for a single finite field.
//!
//! Elements are integer indices. For a prime field the index is the residue;
//! for an extension `B[x]/(f)` of a base field `B` with `b` elements the index
//! of `sum c_i x^i` is `sum idx(c_i) * b^i`.

use crate::dense;

const NONE: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub(crate) struct GfTable {
    size: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// zech[k] = log(1 + g^k), or NONE when 1 + g^k = 0.
    zech: Vec<u32>,
}

impl GfTable {
    pub(crate) fn prime(p: u32) -> Self {
        let order = p - 1;
        let generator = (1..p)
            .find(|&g| multiplicative_order(p, g as u64) == order as u64)
            .expect("a prime field has a primitive root");
        let mut exp = Vec::with_capacity(order as usize);
        let mut log = vec![NONE; p as usize];
        let mut x = 1u64;
        for k in 0..order {
            exp.push(x as u32);
            log[x as usize] = k;
            x = x * generator as u64 % p as u64;
        }
        let zech = exp
            .iter()
            .map(|&e| {
                let s = (e + 1) % p;
                if s == 0 {
                    NONE
                } else {
                    log[s as usize]
                }
            })
            .collect();
        Self {
            size: p,
            exp,
            log,
            zech,
        }
    }

    /// Builds `base[x]/(modulus)`. The modulus must be monic and irreducible
    /// over `base`; the caller checks this.
    pub(crate) fn extension(base: &GfTable, modulus: &[u32]) -> Self {
        let degree = modulus.len() - 1;
        let b = base.size as u64;
        let size = b.pow(degree as u32);
        assert!(size < u32::MAX as u64, "field too large for index encoding");
        let size = size as u32;
        let order = size - 1;

        let to_coords = |mut idx: u32| -> Vec<u32> {
            let mut c = Vec::with_capacity(degree);
            for _ in 0..degree {
                c.push(idx % base.size);
                idx /= base.size;
            }
            dense::trim(c)
        };
        let from_coords = |c: &[u32]| -> u32 {
            c.iter().rev().fold(0u32, |acc, &d| acc * base.size + d)
        };
        let mul_slow = |a: u32, bb: u32| -> u32 {
            let prod = dense::mul(base, &to_coords(a), &to_coords(bb));
            from_coords(&dense::rem(base, &prod, modulus))
        };

        // Smallest index whose powers exhaust the multiplicative group.
        let mut exp = Vec::with_capacity(order as usize);
        'candidates: for g in 1..size {
            exp.clear();
            let mut x = 1u32;
            for _ in 0..order {
                exp.push(x);
                x = mul_slow(x, g);
                if x == 1 && exp.len() < order as usize {
                    continue 'candidates;
                }
            }
            if x == 1 {
                break;
            }
        }
        assert_eq!(exp.len(), order as usize, "no primitive element found");

        let mut log = vec![NONE; size as usize];
        for (k, &e) in exp.iter().enumerate() {
            log[e as usize] = k as u32;
        }
        let zech = exp
            .iter()
            .map(|&e| {
                let c0 = e % base.size;
                let s = e - c0 + base.add(c0, 1);
                if s == 0 {
                    NONE
                } else {
                    log[s as usize]
                }
            })
            .collect();
        Self {
            size,
            exp,
            log,
            zech,
        }
    }

    #[inline]
    pub(crate) fn size(&self) -> u32 {
        self.size
    }

    #[inline]
    fn order(&self) -> u32 {
        self.size - 1
    }

    #[inline]
    fn exp_mod(&self, k: u64) -> u32 {
        self.exp[(k % self.order() as u64) as usize]
    }

    #[inline]
    pub(crate) fn add(&self, a: u32, b: u32) -> u32 {
        if a == 0 {
            return b;
        }
        if b == 0 {
            return a;
        }
        let la = self.log[a as usize];
        let lb = self.log[b as usize];
        let k = if lb >= la {
            lb - la
        } else {
            lb + self.order() - la
        };
        match self.zech[k as usize] {
            NONE => 0,
            z => self.exp_mod(la as u64 + z as u64),
        }
    }

    #[inline]
    pub(crate) fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            // odd characteristic: -1 = g^((size-1)/2)
            self.exp_mod(self.log[a as usize] as u64 + (self.order() / 2) as u64)
        }
    }

    #[inline]
    pub(crate) fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub(crate) fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            0
        } else {
            self.exp_mod(self.log[a as usize] as u64 + self.log[b as usize] as u64)
        }
    }

    /// Multiplicative inverse; `a` must be nonzero.
    #[inline]
    pub(crate) fn inv(&self, a: u32) -> u32 {
        debug_assert!(a != 0);
        let l = self.log[a as usize];
        if l == 0 {
            1
        } else {
            self.exp[(self.order() - l) as usize]
        }
    }

    #[inline]
    pub(crate) fn div(&self, a: u32, b: u32) -> u32 {
        self.mul(a, self.inv(b))
    }

    pub(crate) fn pow(&self, a: u32, e: u128) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let k = (self.log[a as usize] as u128 * (e % self.order() as u128)) % self.order() as u128;
        self.exp[k as usize]
    }
}

fn multiplicative_order(p: u32, g: u64) -> u64 {
    let mut x = g % p as u64;
    let mut k = 1;
    while x != 1 {
        x = x * g % p as u64;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_table_matches_modular_arithmetic() {
        for p in [3u32, 5, 7, 11] {
            let t = GfTable::prime(p);
            for a in 0..p {
                for b in 0..p {
                    assert_eq!(t.add(a, b), (a + b) % p);
                    assert_eq!(t.mul(a, b), a * b % p);
                    assert_eq!(t.sub(a, b), (a + p - b) % p);
                }
                if a != 0 {
                    assert_eq!(t.mul(a, t.inv(a)), 1);
                }
            }
        }
    }

    #[test]
    fn f9_from_x2_plus_1() {
        let f3 = GfTable::prime(3);
        let f9 = GfTable::extension(&f3, &[1, 0, 1]);
        // w has index 3; w*w = -1 = 2
        assert_eq!(f9.mul(3, 3), 2);
        assert_eq!(f9.size(), 9);
        for a in 1..9 {
            assert_eq!(f9.mul(a, f9.inv(a)), 1);
            assert_eq!(f9.pow(a, 8), 1);
        }
    }
}
