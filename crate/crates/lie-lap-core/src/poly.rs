//! Dense univariate polynomials over `Z` and `Q`.
//!
//! Integer polynomials carry the heavy lifting (gcds, square-free
//! decomposition, resultants, Sturm sequences); rational polynomials are
//! converted to a primitive integer multiple where needed.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::modular::{gcd_mod, mul_mod, reduce, reduce_poly, CrtAccumulator, Primes};
use crate::ratmat::Rat;

/// Polynomial with integer coefficients, lowest degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZPoly {
    coeffs: Vec<BigInt>,
}

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        ZPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `x - r`.
    pub fn linear_root(r: i64) -> Self {
        Self::from_i64(&[-r, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with `deg 0 = 0`, for places where zero is excluded upstream.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    /// Gcd of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> ZPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        ZPoly { coeffs: self.coeffs.iter().map(|a| a / &c).collect() }
    }

    pub fn derivative(&self) -> ZPoly {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect())
    }

    pub fn neg(&self) -> ZPoly {
        ZPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &BigInt) -> ZPoly {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn add(&self, rhs: &ZPoly) -> ZPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let z = BigInt::zero();
        Self::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&z) + rhs.coeffs.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn sub(&self, rhs: &ZPoly) -> ZPoly {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() || rhs.is_zero() {
            return ZPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn pow(&self, e: u32) -> ZPoly {
        (0..e).fold(ZPoly::constant(BigInt::one()), |acc, _| acc.mul(self))
    }

    /// Pseudo-remainder: `lc(b)^(deg a - deg b + 1) · a = q · b + r`.
    pub fn pseudo_rem(&self, b: &ZPoly) -> ZPoly {
        assert!(!b.is_zero(), "pseudo-division by zero polynomial");
        let db = b.deg();
        if self.is_zero() || self.deg() < db {
            return self.clone();
        }
        let lb = b.lc();
        let delta = self.deg() - db;
        let mut r = self.coeffs.clone();
        for _ in 0..=delta {
            // r <- lb * r - lc(r) x^(deg r - db) b
            let dr = match r.len().checked_sub(1) {
                Some(d) if d >= db => d,
                _ => {
                    for c in r.iter_mut() {
                        *c *= &lb;
                    }
                    continue;
                }
            };
            let lr = r[dr].clone();
            for c in r.iter_mut() {
                *c *= &lb;
            }
            let shift = dr - db;
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[shift + j] -= &lr * bc;
            }
            while r.last().is_some_and(Zero::is_zero) {
                r.pop();
            }
        }
        ZPoly::new(r)
    }

    /// Exact quotient `self / b` over `Z`; fails if `b` does not divide `self`.
    pub fn div_exact(&self, b: &ZPoly) -> Result<ZPoly> {
        if b.is_zero() {
            return Err(Error::invalid("division by zero polynomial"));
        }
        if self.is_zero() {
            return Ok(ZPoly::zero());
        }
        let db = b.deg();
        if self.deg() < db {
            return Err(Error::inconsistent("polynomial division is not exact"));
        }
        let lb = b.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); self.deg() - db + 1];
        for i in (0..q.len()).rev() {
            let top = &r[i + db];
            if top.is_zero() {
                continue;
            }
            let (qi, rem) = top.div_rem(&lb);
            if !rem.is_zero() {
                return Err(Error::inconsistent("polynomial division is not exact"));
            }
            for (j, bc) in b.coeffs.iter().enumerate() {
                r[i + j] -= &qi * bc;
            }
            q[i] = qi;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return Err(Error::inconsistent("polynomial division is not exact"));
        }
        Ok(ZPoly::new(q))
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    ///
    /// Modular: gcds modulo word-size primes not dividing either leading
    /// coefficient are scaled by `gcd(lc a, lc b)`, lifted by Chinese
    /// remaindering, and the stabilized candidate is verified by exact
    /// division.
    pub fn gcd(&self, rhs: &ZPoly) -> ZPoly {
        if self.is_zero() {
            return rhs.primitive();
        }
        if rhs.is_zero() {
            return self.primitive();
        }
        let (a, b) = (self.primitive(), rhs.primitive());
        if a.deg() == 0 || b.deg() == 0 {
            return ZPoly::constant(BigInt::one());
        }
        let gamma = a.lc().gcd(&b.lc());
        let (lca, lcb) = (a.lc(), b.lc());
        let mut degree = usize::MAX;
        let mut crt = CrtAccumulator::new(0);
        let mut last: Option<ZPoly> = None;
        for p in Primes::new() {
            if reduce(&lca, p) == 0 || reduce(&lcb, p) == 0 {
                continue;
            }
            let g = gcd_mod(reduce_poly(&a.coeffs, p), reduce_poly(&b.coeffs, p), p);
            let d = g.len() - 1;
            if d == 0 {
                return ZPoly::constant(BigInt::one());
            }
            if d > degree {
                continue;
            }
            if d < degree {
                degree = d;
                crt = CrtAccumulator::new(d + 1);
                last = None;
            }
            let gm = reduce(&gamma, p);
            let scaled: Vec<u64> = g.iter().map(|&c| mul_mod(c, gm, p)).collect();
            crt.add(&scaled, p);
            let cand = ZPoly::new(crt.symmetric()).primitive();
            if last.as_ref() == Some(&cand) && a.div_exact(&cand).is_ok() && b.div_exact(&cand).is_ok() {
                return cand;
            }
            last = Some(cand);
        }
        unreachable!("primes below 2^62 are exhausted")
    }

    /// Whether `self` and `rhs` share a root (a nonconstant gcd).
    pub fn shares_root(&self, rhs: &ZPoly) -> bool {
        !self.gcd(rhs).is_constant()
    }

    /// Square-free decomposition: primitive pairwise coprime factors `f_j`
    /// with `self = c · Π f_j^j`. Only factors of positive degree are listed.
    pub fn squarefree_decomposition(&self) -> Vec<(u32, ZPoly)> {
        if self.is_constant() {
            return Vec::new();
        }
        let f = self.primitive();
        let mut g = f.gcd(&f.derivative());
        let mut h = f.div_exact(&g).expect("gcd divides f").primitive();
        let mut out = Vec::new();
        let mut j = 1u32;
        while !h.is_constant() {
            let h2 = g.gcd(&h);
            let factor = h.div_exact(&h2).expect("gcd divides h").primitive();
            if !factor.is_constant() {
                out.push((j, factor));
            }
            g = g.div_exact(&h2).expect("gcd divides g").primitive();
            h = h2;
            j += 1;
        }
        out
    }

    /// Square-free part `Π f_j`.
    pub fn squarefree_part(&self) -> ZPoly {
        if self.is_constant() {
            return ZPoly::constant(BigInt::one());
        }
        let f = self.primitive();
        f.div_exact(&f.gcd(&f.derivative())).expect("gcd divides f").primitive()
    }

    /// Value at a rational point.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at `x`, computed without rational arithmetic.
    pub fn sign_at(&self, x: &Rat) -> Ordering {
        // q^deg · f(p/q) has the sign of f(p/q) for q > 0.
        let (p, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        let d = self.coeffs.len();
        let mut terms = vec![BigInt::zero(); d];
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            terms[i] = c * &qpow;
            qpow *= q;
        }
        for t in terms.iter().rev() {
            acc = acc * p + t;
        }
        acc.sign_cmp()
    }

    /// Sign of the leading coefficient at `+∞` (or of `(-1)^deg · lc` at `-∞`).
    fn sign_at_infinity(&self, positive: bool) -> Ordering {
        let s = self.lc().sign_cmp();
        if positive || self.deg().is_multiple_of(2) {
            s
        } else {
            s.reverse()
        }
    }

    /// Bound `B` such that every complex root has `|z| < B`, a power of two.
    pub fn root_bound(&self) -> Rat {
        // Fujiwara: |x| ≤ 2·max_k |a_{n-k}/a_n|^{1/k}, rounded up to a power of two.
        let n = self.deg();
        let lc_bits = self.lc().bits();
        let mut e = 0u64;
        for k in 1..=n {
            let c = &self.coeffs[n - k];
            if c.is_zero() {
                continue;
            }
            // |c/lc| < 2^(bits(c) - bits(lc) + 1) ≤ 2^(e·k)
            let ratio_bits = (c.bits() + 1).saturating_sub(lc_bits);
            e = e.max(ratio_bits.div_ceil(k as u64));
        }
        Rat::from_integer(BigInt::one() << (e + 1))
    }

    /// `Π (x - r)` over the given integer roots.
    pub fn monic_roots_product(roots: &[i64]) -> ZPoly {
        roots.iter().fold(ZPoly::constant(BigInt::one()), |acc, &r| acc.mul(&ZPoly::linear_root(r)))
    }
}

trait SignCmp {
    fn sign_cmp(&self) -> Ordering;
}

impl SignCmp for BigInt {
    fn sign_cmp(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = !abs.is_one() || i == 0;
            if show_coeff {
                write!(f, "{abs}")?;
            }
            match i {
                0 => {}
                1 => f.write_str(if show_coeff { "*x" } else { "x" })?,
                _ => write!(f, "{}x^{i}", if show_coeff { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

/// Sturm sequence of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    chain: Vec<ZPoly>,
}

impl SturmChain {
    pub fn new(f: &ZPoly) -> Self {
        let mut chain = vec![f.clone()];
        if f.is_constant() {
            return SturmChain { chain };
        }
        chain.push(f.derivative());
        loop {
            let n = chain.len();
            let (a, b) = (&chain[n - 2], &chain[n - 1]);
            if b.is_constant() {
                break;
            }
            // rem = prem / lc(b)^(δ+1); only the sign of the scale matters.
            let delta = a.deg() - b.deg();
            let mut r = a.pseudo_rem(b);
            if r.is_zero() {
                break;
            }
            let lb_neg = b.lc().is_negative();
            if !(lb_neg && (delta + 1) % 2 == 1) {
                r = r.neg();
            }
            let c = r.content();
            r = ZPoly::new(r.coeffs.iter().map(|x| x / &c).collect());
            chain.push(r);
        }
        SturmChain { chain }
    }

    fn variations<F: Fn(&ZPoly) -> Ordering>(&self, sign: F) -> usize {
        let mut count = 0;
        let mut last = Ordering::Equal;
        for p in &self.chain {
            let s = sign(p);
            if s == Ordering::Equal {
                continue;
            }
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    pub fn variations_at(&self, x: &Rat) -> usize {
        self.variations(|p| p.sign_at(x))
    }

    /// Number of distinct real roots in `(a, b]`; requires `f(a) ≠ 0`.
    pub fn count_roots(&self, a: &Rat, b: &Rat) -> usize {
        self.variations_at(a).saturating_sub(self.variations_at(b))
    }

    /// Number of distinct real roots.
    pub fn count_all_roots(&self) -> usize {
        let lo = self.variations(|p| p.sign_at_infinity(false));
        let hi = self.variations(|p| p.sign_at_infinity(true));
        lo.saturating_sub(hi)
    }
}

/// An interval `(lo, hi]` containing exactly one root of a square-free
/// polynomial, with `f(lo) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rat,
    pub hi: Rat,
}

impl RootInterval {
    pub fn midpoint(&self) -> Rat {
        (&self.lo + &self.hi) / Rat::from_integer(BigInt::from(2))
    }

    pub fn width(&self) -> Rat {
        &self.hi - &self.lo
    }
}

/// Isolates the real roots of square-free `f` in `(lo, hi]`, in increasing
/// order. `f(lo)` must be nonzero.
pub fn isolate_roots(f: &ZPoly, lo: &Rat, hi: &Rat) -> Vec<RootInterval> {
    let sturm = SturmChain::new(f);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    let two = Rat::from_integer(BigInt::from(2));
    while let Some((a, b)) = stack.pop() {
        let n = sturm.count_roots(&a, &b);
        match n {
            0 => {}
            1 => out.push(RootInterval { lo: a, hi: b }),
            _ => {
                let mut mid = (&a + &b) / &two;
                // Keep f(mid) ≠ 0 so the left endpoint of (mid, b] is valid;
                // shift towards b until it is.
                let mut step = (&b - &a) / Rat::from_integer(BigInt::from(7));
                while f.sign_at(&mid) == Ordering::Equal {
                    mid = &mid + &step;
                    step /= &two;
                }
                stack.push((mid.clone(), b));
                stack.push((a, mid));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    out
}

/// Shrinks an isolating interval by bisection until its width is at most `width`.
pub fn refine_root(f: &ZPoly, iv: &RootInterval, width: &Rat) -> RootInterval {
    let mut iv = iv.clone();
    let two = Rat::from_integer(BigInt::from(2));
    let s_lo = f.sign_at(&iv.lo);
    if f.sign_at(&iv.hi) == Ordering::Equal {
        return RootInterval { lo: &iv.hi - width / &two, hi: iv.hi.clone() };
    }
    while &iv.width() > width {
        let mid = iv.midpoint();
        match f.sign_at(&mid) {
            Ordering::Equal => {
                return RootInterval { lo: &mid - width / &two, hi: mid };
            }
            s if s == s_lo => iv.lo = mid,
            _ => iv.hi = mid,
        }
    }
    iv
}

/// Resultant with the Sylvester-matrix sign convention.
///
/// Small degrees use a fraction-free determinant of the Sylvester matrix,
/// larger ones the subresultant remainder sequence.
pub fn resultant(a: &ZPoly, b: &ZPoly) -> Result<BigInt> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::invalid("resultant of two zero polynomials"));
    }
    if a.deg() + b.deg() <= 8 {
        Ok(resultant_sylvester(a, b))
    } else {
        Ok(resultant_subresultant(a, b))
    }
}

/// Resultant as the determinant of the Sylvester matrix (Bareiss elimination).
pub fn resultant_sylvester(a: &ZPoly, b: &ZPoly) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let (m, n) = (a.deg(), b.deg());
    if m == 0 {
        return num_traits::pow(a.lc(), n);
    }
    if n == 0 {
        return num_traits::pow(b.lc(), m);
    }
    let size = m + n;
    let mut mat = vec![vec![BigInt::zero(); size]; size];
    for i in 0..n {
        for (j, c) in a.coeffs.iter().rev().enumerate() {
            mat[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in b.coeffs.iter().rev().enumerate() {
            mat[n + i][i + j] = c.clone();
        }
    }
    bareiss_determinant(mat)
}

/// Fraction-free determinant of an integer matrix.
pub fn bareiss_determinant(mut mat: Vec<Vec<BigInt>>) -> BigInt {
    let n = mat.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if mat[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !mat[r][k].is_zero()) else {
                return BigInt::zero();
            };
            mat.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&mat[i][j] * &mat[k][k] - &mat[i][k] * &mat[k][j]) / &prev;
                mat[i][j] = v;
            }
        }
        prev = mat[k][k].clone();
    }
    sign * &mat[n - 1][n - 1]
}

/// Resultant via the subresultant polynomial remainder sequence.
pub fn resultant_subresultant(a: &ZPoly, b: &ZPoly) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::zero();
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    if a.deg() == 0 {
        return num_traits::pow(a.lc(), b.deg());
    }
    if b.deg() == 0 {
        return num_traits::pow(b.lc(), a.deg());
    }
    let ca = a.content();
    let cb = b.content();
    a = ZPoly::new(a.coeffs.iter().map(|c| c / &ca).collect());
    b = ZPoly::new(b.coeffs.iter().map(|c| c / &cb).collect());
    let t = num_traits::pow(ca, b.deg()) * num_traits::pow(cb, a.deg());
    let mut s = BigInt::one();
    if a.deg() < b.deg() {
        core::mem::swap(&mut a, &mut b);
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = a.deg() - b.deg();
        if a.deg() % 2 == 1 && b.deg() % 2 == 1 {
            s = -s;
        }
        let r = a.pseudo_rem(&b);
        a = b;
        let div = &g * num_traits::pow(h.clone(), delta);
        b = ZPoly::new(r.coeffs.iter().map(|c| c / &div).collect());
        g = a.lc();
        // h <- g^δ / h^(δ-1)
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h.clone(), delta - 1)
        };
        if b.is_zero() {
            return BigInt::zero();
        }
        if b.deg() == 0 {
            let da = a.deg();
            let hh = if da == 0 {
                h.clone()
            } else {
                num_traits::pow(b.lc(), da) / num_traits::pow(h.clone(), da - 1)
            };
            return s * t * hh;
        }
    }
}

/// Polynomial with rational coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_zpoly(p: &ZPoly) -> Self {
        QPoly { coeffs: p.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect() }
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn lc(&self) -> Rat {
        self.coeffs.last().cloned().unwrap_or_else(Rat::zero)
    }

    pub fn derivative(&self) -> QPoly {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::new(Vec::new());
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// `(c, z)` with `self = c · z`, `z` primitive integer with positive
    /// leading coefficient. The zero polynomial maps to `(0, 0)`.
    pub fn to_primitive(&self) -> (Rat, ZPoly) {
        if self.is_zero() {
            return (Rat::zero(), ZPoly::zero());
        }
        let den = self.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        let z = ZPoly::new(ints);
        let p = z.primitive();
        // self = (z / den), z = lc_ratio · p
        let ratio = BigRational::new(z.lc(), p.lc());
        (ratio / BigRational::from_integer(den), p)
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => alloc::format!("({c})"),
                1 => alloc::format!("({c})*x"),
                _ => alloc::format!("({c})*x^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

/// Resultant of rational polynomials, from the primitive integer parts:
/// `res(c₁z₁, c₂z₂) = c₁^deg z₂ · c₂^deg z₁ · res(z₁, z₂)`.
pub fn resultant_q(a: &QPoly, b: &QPoly) -> Result<Rat> {
    if a.is_zero() && b.is_zero() {
        return Err(Error::invalid("resultant of two zero polynomials"));
    }
    if a.is_zero() || b.is_zero() {
        return Ok(Rat::zero());
    }
    let (ca, za) = a.to_primitive();
    let (cb, zb) = b.to_primitive();
    let r = resultant(&za, &zb)?;
    Ok(num_traits::pow(ca, zb.deg()) * num_traits::pow(cb, za.deg()) * BigRational::from_integer(r))
}

#[cfg(test)]
mod tests {
    use alloc::string::ToString;
    use super::*;
    use crate::ratmat::{rat, rat_int};

    fn z(c: &[i64]) -> ZPoly {
        ZPoly::from_i64(c)
    }

    #[test]
    fn resultant_examples() {
        // res(x^2 - 1, x - 1) = 0
        assert_eq!(resultant(&z(&[-1, 0, 1]), &z(&[-1, 1])).unwrap(), BigInt::zero());
        // res((x-1)(x-2), x-3) = 2
        let p = ZPoly::monic_roots_product(&[1, 2]);
        assert_eq!(resultant(&p, &z(&[-3, 1])).unwrap(), BigInt::from(2));
        // double root kills the discriminant
        let sq = ZPoly::monic_roots_product(&[1, 1]);
        assert_eq!(resultant(&sq, &sq.derivative()).unwrap(), BigInt::zero());
        // constant second argument
        assert_eq!(resultant(&p, &ZPoly::constant(BigInt::from(3))).unwrap(), BigInt::from(9));
        assert!(resultant(&ZPoly::zero(), &ZPoly::zero()).is_err());
    }

    #[test]
    fn subresultant_matches_sylvester_on_fixed_cases() {
        let cases = [
            (z(&[1, -3, 0, 2, 5]), z(&[-2, 7, 1])),
            (z(&[0, 0, 1]), z(&[3, 0, 0, 1])),
            (z(&[6, -5, 1]), z(&[-6, 11, -6, 1])),
            (z(&[4, 0, 0, 0, 0, 0, 0, 2]), z(&[1, 1, 1, 1, 1, 1])),
            (z(&[-1, 2, -3, 4, -5, 6]), z(&[2, 4, 6, 8, 10, 12])),
        ];
        for (a, b) in cases {
            assert_eq!(resultant_subresultant(&a, &b), resultant_sylvester(&a, &b), "{a} / {b}");
            assert_eq!(resultant_subresultant(&b, &a), resultant_sylvester(&b, &a), "{b} / {a}");
        }
    }

    #[test]
    fn gcd_and_division() {
        let a = ZPoly::monic_roots_product(&[1, 2, 3]).scale(&BigInt::from(4));
        let b = ZPoly::monic_roots_product(&[2, 3, 5]);
        assert_eq!(a.gcd(&b), ZPoly::monic_roots_product(&[2, 3]));
        assert_eq!(a.div_exact(&z(&[-1, 1])).unwrap(), ZPoly::monic_roots_product(&[2, 3]).scale(&BigInt::from(4)));
        assert!(a.div_exact(&z(&[-7, 1])).is_err());
    }

    #[test]
    fn squarefree_examples() {
        // (x-1)^2 (x-2)
        let p = ZPoly::monic_roots_product(&[1, 1, 2]);
        let d = p.squarefree_decomposition();
        assert_eq!(d, vec![(1, z(&[-2, 1])), (2, z(&[-1, 1]))]);
        // (x-9)^2 (x-1)^2
        let p = ZPoly::monic_roots_product(&[9, 9, 1, 1]);
        let d = p.squarefree_decomposition();
        assert_eq!(d.len(), 1);
        assert_eq!(d[0].0, 2);
        assert_eq!(d[0].1.deg(), 2);
        // (8 - x)^3
        let p = z(&[8, -1]).pow(3);
        assert_eq!(p.squarefree_decomposition(), vec![(3, z(&[-8, 1]))]);
    }

    #[test]
    fn sturm_counts_and_isolation() {
        let p = ZPoly::monic_roots_product(&[-3, 0, 2, 7]);
        let sc = SturmChain::new(&p);
        assert_eq!(sc.count_all_roots(), 4);
        assert_eq!(sc.count_roots(&rat_int(-1), &rat_int(2)), 2);
        assert_eq!(sc.count_roots(&rat(1, 2), &rat_int(7)), 2);
        let roots = isolate_roots(&p, &rat_int(-10), &rat_int(10));
        let approx: Vec<Rat> = roots.iter().map(|iv| refine_root(&p, iv, &rat(1, 1000)).hi).collect();
        for (a, e) in approx.iter().zip([-3, 0, 2, 7]) {
            assert!((a - rat_int(e)).abs() <= rat(1, 1000));
        }
        // x^2 - 2 has irrational roots
        let q = z(&[-2, 0, 1]);
        let roots = isolate_roots(&q, &rat_int(-3), &rat_int(3));
        assert_eq!(roots.len(), 2);
        let r = refine_root(&q, &roots[1], &rat(1, 1 << 30));
        assert!((r.midpoint() - rat(14142135, 10000000)).abs() < rat(1, 1000000));
    }

    #[test]
    fn rational_resultant_scaling() {
        // res((x-1)(x-2)/2, x - 3) = (1/2)^1 · 2
        let a = QPoly::new(vec![rat_int(1), rat(-3, 2), rat(1, 2)]);
        let b = QPoly::new(vec![rat_int(-3), rat_int(1)]);
        assert_eq!(resultant_q(&a, &b).unwrap(), rat_int(1));
        let (c, p) = a.to_primitive();
        assert_eq!(c, rat(1, 2));
        assert_eq!(p, ZPoly::monic_roots_product(&[1, 2]));
    }

    #[test]
    fn display() {
        assert_eq!(z(&[-2, 0, 1]).to_string(), "x^2 - 2");
        assert_eq!(z(&[0, -3, 2]).to_string(), "2*x^2 - 3*x");
    }
}
