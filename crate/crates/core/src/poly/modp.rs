//! Word-sized prime fields used by the modular algorithms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        p - (b - a)
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for sp in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Descending sequence of primes just below 2^62.
pub struct Primes {
    next: u64,
}

impl Primes {
    pub fn new() -> Self {
        Primes { next: (1u64 << 62) - 1 }
    }
}

impl Default for Primes {
    fn default() -> Self {
        Self::new()
    }
}

impl Iterator for Primes {
    type Item = u64;
    fn next(&mut self) -> Option<u64> {
        while self.next > 3 {
            let c = self.next;
            self.next -= 2;
            if is_prime(c) {
                return Some(c);
            }
        }
        None
    }
}

pub fn reduce(c: &BigInt, p: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in a word")
}

/// Dense polynomial mod p, ascending; trailing zeros trimmed.
pub fn reduce_poly(coeffs: &[BigInt], p: u64) -> Vec<u64> {
    let mut v: Vec<u64> = coeffs.iter().map(|c| reduce(c, p)).collect();
    trim(&mut v);
    v
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

/// Remainder of `a` by `b` (b nonzero), in place.
fn rem_in_place(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while a.len() > db {
        let da = a.len() - 1;
        let q = mul_mod(a[da], inv, p);
        if q != 0 {
            let off = da - db;
            for (j, &bc) in b.iter().enumerate() {
                a[off + j] = sub_mod(a[off + j], mul_mod(q, bc, p), p);
            }
        }
        a.pop();
        trim(a);
    }
}

/// Monic gcd mod p.
pub fn gcd_modp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        rem_in_place(&mut x, &y, p);
        std::mem::swap(&mut x, &mut y);
    }
    if let Some(&l) = x.last() {
        let inv = inv_mod(l, p);
        for c in x.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    x
}

/// Chinese remaindering of `acc mod m` with `r mod p`, result in `[0, m·p)`.
pub fn crt(acc: &BigInt, m: &BigInt, r: u64, p: u64, m_inv_p: u64) -> BigInt {
    let a_mod = reduce(acc, p);
    let k = mul_mod(sub_mod(r, a_mod, p), m_inv_p, p);
    acc + m * BigInt::from(k)
}

/// Symmetric representative of `v mod m`.
pub fn symmetric(v: &BigInt, m: &BigInt) -> BigInt {
    let r = v.mod_floor(m);
    if (&r << 1) > *m {
        r - m
    } else {
        r
    }
}

pub fn is_zero_mod(c: &BigInt, p: u64) -> bool {
    reduce(c, p).is_zero()
}
