//! Arithmetic tables for small finite fields GF(q), q a prime or prime power.
//!
//! Prime-power orders use a polynomial representation modulo a fixed
//! irreducible polynomial per order (4: x^2+x+1, 8: x^3+x+1, 9: x^2+1),
//! so generation is deterministic.

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("unsupported field order {0}")]
pub struct UnsupportedOrder(pub usize);

const SUPPORTED: &[(usize, usize, u32, u64)] = &[
    // (q, p, k, irreducible poly as base-p digit string packed little-endian)
    (2, 2, 1, 0),
    (3, 3, 1, 0),
    (4, 2, 2, 0b111),      // x^2 + x + 1
    (5, 5, 1, 0),
    (7, 7, 1, 0),
    (8, 2, 3, 0b1011),     // x^3 + x + 1
    (9, 3, 2, 0o101),      // x^2 + 1 (digits 1,0,1 base 3 packed as octal-style)
];

/// Precomputed add/mul tables for GF(q). Elements are `0..q`, with `0` and
/// `1` the additive and multiplicative identities.
pub struct Field {
    q: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
}

impl Field {
    pub fn new(q: usize) -> Result<Field, UnsupportedOrder> {
        let &(_, p, k, poly) = SUPPORTED
            .iter()
            .find(|&&(order, _, _, _)| order == q)
            .ok_or(UnsupportedOrder(q))?;
        // element i <-> polynomial with base-p digits of i, degree < k
        let digits = |mut x: usize| -> Vec<usize> {
            let mut d = vec![0usize; k as usize];
            for slot in d.iter_mut() {
                *slot = x % p;
                x /= p;
            }
            d
        };
        let pack = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &c| acc * p + c) };
        let poly_digits: Vec<usize> = {
            let mut v = Vec::new();
            let mut x = poly;
            if k == 1 {
                v.push(0);
            } else {
                // irreducible poly has degree k; digits packed in base 2 or 3 above
                let base = if p == 2 { 2 } else { 8 };
                while x > 0 {
                    v.push((x % base) as usize);
                    x /= base;
                }
            }
            v
        };
        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        let mut neg = vec![0u8; q];
        for a in 0..q {
            let da = digits(a);
            let dneg: Vec<usize> = da.iter().map(|&c| (p - c) % p).collect();
            neg[a] = pack(&dneg) as u8;
            for b in 0..q {
                let db = digits(b);
                let dsum: Vec<usize> = da.iter().zip(&db).map(|(&x, &y)| (x + y) % p).collect();
                add[a * q + b] = pack(&dsum) as u8;
                // polynomial product reduced modulo the irreducible polynomial
                let mut prod = vec![0usize; 2 * k as usize];
                for (i, &x) in da.iter().enumerate() {
                    for (j, &y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for deg in (k as usize..prod.len()).rev() {
                    let c = prod[deg];
                    if c == 0 {
                        continue;
                    }
                    prod[deg] = 0;
                    // x^deg = x^(deg-k) * (-(poly - x^k))
                    for (i, &pc) in poly_digits.iter().enumerate().take(k as usize) {
                        let sub = (c * pc) % p;
                        let idx = deg - k as usize + i;
                        prod[idx] = (prod[idx] + p - sub) % p;
                    }
                }
                mul[a * q + b] = pack(&prod[..k as usize]) as u8;
            }
        }
        Ok(Field { q, add, mul, neg })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }
}
