//! Exact characteristic polynomials of Gaussian-integer matrices.
//!
//! The matrix is reduced modulo primes `p ≡ 1 (mod 4)`, where `i` has a
//! square root `r`. Each reduction is run under both embeddings `i ↦ ±r`;
//! their half-sum and half-difference recover the real and imaginary parts
//! of every coefficient modulo `p`. Real and imaginary parts are then lifted
//! by Chinese remaindering up to a Hadamard-type coefficient bound, so the
//! result is exact, not probabilistic.
//!
//! Per prime the work is a Hessenberg reduction followed by the Hessenberg
//! characteristic polynomial recurrence, `O(n³)` word operations.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::modular::{add_mod, inv_mod, is_prime_u64, mul_mod, pow_mod, reduce, sub_mod, CrtAccumulator};
use crate::poly::ZPoly;

/// A prime `p ≡ 1 (mod 4)` together with a square root of `-1` modulo `p`.
#[derive(Clone, Copy, Debug)]
struct GaussPrime {
    p: u64,
    sqrt_neg_one: u64,
}

/// Primes `≡ 1 (mod 4)` below `2^62`, in decreasing order.
struct GaussPrimes {
    next: u64,
}

impl GaussPrimes {
    fn new() -> Self {
        // Largest value below 2^62 that is ≡ 1 (mod 4).
        GaussPrimes { next: (1u64 << 62) - 3 }
    }
}

impl Iterator for GaussPrimes {
    type Item = GaussPrime;

    fn next(&mut self) -> Option<GaussPrime> {
        loop {
            let cand = self.next;
            self.next -= 4;
            if !is_prime_u64(cand) {
                continue;
            }
            // For a quadratic non-residue a, a^((p-1)/4) squares to -1.
            for a in 2u64.. {
                if pow_mod(a, (cand - 1) / 2, cand) == cand - 1 {
                    let r = pow_mod(a, (cand - 1) / 4, cand);
                    debug_assert_eq!(mul_mod(r, r, cand), cand - 1);
                    return Some(GaussPrime { p: cand, sqrt_neg_one: r });
                }
            }
        }
    }
}

/// Monic characteristic polynomial `det(X·Id - M)` over `Z_p` of a dense
/// row-major matrix, by Hessenberg reduction.
fn charpoly_mod(mut a: Vec<u64>, n: usize, p: u64) -> Vec<u64> {
    let idx = |i: usize, j: usize| i * n + j;
    // Reduce to upper Hessenberg form by similarity transforms.
    for m in 1..n.saturating_sub(1) {
        let Some(piv) = (m..n).find(|&i| a[idx(i, m - 1)] != 0) else {
            continue;
        };
        if piv != m {
            for j in 0..n {
                a.swap(idx(piv, j), idx(m, j));
            }
            for i in 0..n {
                a.swap(idx(i, piv), idx(i, m));
            }
        }
        let inv = inv_mod(a[idx(m, m - 1)], p);
        for i in m + 1..n {
            let t = a[idx(i, m - 1)];
            if t == 0 {
                continue;
            }
            let u = mul_mod(t, inv, p);
            // row_i -= u * row_m
            for j in 0..n {
                let v = a[idx(m, j)];
                if v != 0 {
                    a[idx(i, j)] = sub_mod(a[idx(i, j)], mul_mod(u, v, p), p);
                }
            }
            // col_m += u * col_i
            for r in 0..n {
                let v = a[idx(r, i)];
                if v != 0 {
                    a[idx(r, m)] = add_mod(a[idx(r, m)], mul_mod(u, v, p), p);
                }
            }
        }
    }
    // polys[k] = char poly of the leading k x k block, coefficients low to high.
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for k in 1..=n {
        let h_kk = a[idx(k - 1, k - 1)];
        // (x - h_kk) * polys[k-1]
        let prev = &polys[k - 1];
        let mut next = vec![0u64; k + 1];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = add_mod(next[i + 1], c, p);
            next[i] = sub_mod(next[i], mul_mod(h_kk, c, p), p);
        }
        // - Σ_{i<k} h_{i,k} (Π_{j=i+1}^{k-1} h_{j,j-1}) polys[i]   (0-based)
        let mut prod = 1u64;
        for i in (0..k - 1).rev() {
            prod = mul_mod(prod, a[idx(i + 1, i)], p);
            if prod == 0 {
                break;
            }
            let coef = mul_mod(a[idx(i, k - 1)], prod, p);
            if coef == 0 {
                continue;
            }
            for (t, &c) in polys[i].iter().enumerate() {
                next[t] = sub_mod(next[t], mul_mod(coef, c, p), p);
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n + 1 polynomials")
}

/// Number of bits `b` with `|c| < 2^b` for every characteristic polynomial
/// coefficient `c` (binomial factor times Hadamard bound on principal minors).
fn coefficient_bits(n: usize, re: &[BigInt], im: &[BigInt]) -> u64 {
    let mut bits = n as u64 + 1;
    for i in 0..n {
        let mut norm2 = BigUint::zero();
        for j in 0..n {
            let (a, b) = (re[i * n + j].magnitude(), im[i * n + j].magnitude());
            norm2 += a * a + b * b;
        }
        // |row| < 2^ceil(bits(norm2) / 2); rows of norm < 1 contribute nothing.
        if norm2 > BigUint::one() {
            bits += norm2.bits().div_ceil(2);
        }
    }
    bits
}

/// Characteristic polynomial `det(X·Id - M)` of `M = re + i·im` (row-major,
/// `n × n`). Fails if a coefficient has a nonzero imaginary part.
pub fn charpoly_gaussian(n: usize, re: &[BigInt], im: &[BigInt]) -> Result<ZPoly> {
    if re.len() != n * n || im.len() != n * n {
        return Err(Error::invalid("matrix data does not match dimension"));
    }
    if n == 0 {
        return Ok(ZPoly::constant(BigInt::one()));
    }
    let target_bits = coefficient_bits(n, re, im) + 2;
    let real_input = im.iter().all(Zero::is_zero);
    let mut crt_re = CrtAccumulator::new(n + 1);
    let mut crt_im = CrtAccumulator::new(n + 1);
    for gp in GaussPrimes::new() {
        if crt_re.modulus.bits() > target_bits {
            break;
        }
        let p = gp.p;
        let re_p: Vec<u64> = re.iter().map(|x| reduce(x, p)).collect();
        let im_p: Vec<u64> = im.iter().map(|x| reduce(x, p)).collect();
        let embed = |r: u64| -> Vec<u64> {
            re_p.iter().zip(&im_p).map(|(&a, &b)| add_mod(a, mul_mod(b, r, p), p)).collect()
        };
        let plus = charpoly_mod(embed(gp.sqrt_neg_one), n, p);
        if real_input {
            crt_re.add(&plus, p);
            continue;
        }
        let minus = charpoly_mod(embed(p - gp.sqrt_neg_one), n, p);
        let inv2 = inv_mod(2, p);
        let inv2r = inv_mod(mul_mod(2, gp.sqrt_neg_one, p), p);
        let re_c: Vec<u64> = plus.iter().zip(&minus).map(|(&a, &b)| mul_mod(add_mod(a, b, p), inv2, p)).collect();
        let im_c: Vec<u64> = plus.iter().zip(&minus).map(|(&a, &b)| mul_mod(sub_mod(a, b, p), inv2r, p)).collect();
        crt_re.add(&re_c, p);
        crt_im.add(&im_c, p);
    }
    if !real_input {
        let imag = crt_im.finish();
        if let Some((k, c)) = imag.iter().enumerate().find(|(_, c)| !c.is_zero()) {
            return Err(Error::inconsistent(alloc::format!(
                "characteristic polynomial coefficient of x^{k} has imaginary part {c}"
            )));
        }
    }
    Ok(ZPoly::new(crt_re.finish()))
}
