//! Word-size modular arithmetic and Chinese remaindering shared by the
//! multimodular algorithms.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((u128::from(a) * u128::from(b)) % u128::from(p)) as u64
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub(crate) fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64;
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

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub(crate) fn is_prime_u64(n: u64) -> bool {
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
    'witness: for a in [2u64, 325, 9375, 28178, 450775, 9780504, 1795265022] {
        let a = a % n;
        if a == 0 {
            continue;
        }
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

pub(crate) fn reduce(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("residue fits in u64")
}


/// Incremental Chinese remaindering of a vector of residues.
pub(crate) struct CrtAccumulator {
    pub(crate) modulus: BigInt,
    pub(crate) values: Vec<BigInt>,
}

impl CrtAccumulator {
    pub(crate) fn new(len: usize) -> Self {
        CrtAccumulator { modulus: BigInt::one(), values: vec![BigInt::zero(); len] }
    }

    pub(crate) fn add(&mut self, residues: &[u64], p: u64) {
        let m_mod_p = reduce(&self.modulus, p);
        let inv = inv_mod(m_mod_p, p);
        for (v, &r) in self.values.iter_mut().zip(residues) {
            let cur = reduce(v, p);
            let t = mul_mod(sub_mod(r, cur, p), inv, p);
            *v += &self.modulus * BigInt::from(t);
        }
        self.modulus *= BigInt::from(p);
    }

    /// Symmetric representatives in `(-M/2, M/2]`.
    pub(crate) fn finish(self) -> Vec<BigInt> {
        self.symmetric()
    }

    pub(crate) fn symmetric(&self) -> Vec<BigInt> {
        let half = &self.modulus >> 1usize;
        self.values.iter().map(|v| if v > &half { v - &self.modulus } else { v.clone() }).collect()
    }
}

/// All primes below `2^62`, in decreasing order.
pub(crate) struct Primes {
    next: u64,
}

impl Primes {
    pub(crate) fn new() -> Self {
        Primes { next: (1u64 << 62) - 1 }
    }
}

impl Iterator for Primes {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        while self.next > 2 {
            let cand = self.next;
            self.next -= 2;
            if is_prime_u64(cand) {
                return Some(cand);
            }
        }
        None
    }
}

/// Coefficients of `f` reduced modulo `p`, trailing zeros removed.
pub(crate) fn reduce_poly(f: &[BigInt], p: u64) -> Vec<u64> {
    let mut out: Vec<u64> = f.iter().map(|c| reduce(c, p)).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Monic gcd over `Z_p` by Euclid's algorithm; empty if both inputs vanish.
pub(crate) fn gcd_mod(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> Vec<u64> {
    while !b.is_empty() {
        // a <- a mod b
        let inv = inv_mod(*b.last().expect("nonzero"), p);
        while a.len() >= b.len() {
            let f = mul_mod(*a.last().expect("nonzero"), inv, p);
            let shift = a.len() - b.len();
            for (i, &c) in b.iter().enumerate() {
                a[shift + i] = sub_mod(a[shift + i], mul_mod(f, c, p), p);
            }
            while a.last() == Some(&0) {
                a.pop();
            }
        }
        core::mem::swap(&mut a, &mut b);
    }
    if let Some(&lc) = a.last() {
        let inv = inv_mod(lc, p);
        for c in &mut a {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}
