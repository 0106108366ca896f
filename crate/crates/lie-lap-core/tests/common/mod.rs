//! Helpers shared by the integration tests: random tensors and
//! straightforward reference algorithms used as oracles.

#![allow(dead_code)]

use lie_lap_core::algebra::{GroupSpec, SymTensor};
use lie_lap_core::irreps::IrrepLabel;
use lie_lap_core::operator::OperatorMatrix;
use lie_lap_core::poly::{isolate_roots, refine_root, ZPoly};
use lie_lap_core::polycert::CharPoly;
use lie_lap_core::ratmat::{Rat, RatMatrix};
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type CRat = Complex<Rat>;

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `S = I + Q/d` with `Q` symmetric, entries in `[-r, r]`, and `d` above
/// twice the largest row sum, so `S` is positive definite.
pub fn random_definite(dim: usize, r: i64, rng: &mut ChaCha8Rng) -> SymTensor {
    let mut q = vec![vec![0i64; dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let v = rng.gen_range(-r..=r);
            q[i][j] = v;
            q[j][i] = v;
        }
    }
    definite_from(&q, rng.gen_range(1..=3))
}

/// `I + Q/d` with `d = slack · (2·max row sum + 1)`.
pub fn definite_from(q: &[Vec<i64>], slack: i64) -> SymTensor {
    let dim = q.len();
    let row_max = q.iter().map(|r| r.iter().map(|v| v.abs()).sum::<i64>()).max().unwrap_or(0);
    let d = int(slack * (2 * row_max + 1));
    let mut c = RatMatrix::identity(dim);
    for i in 0..dim {
        for j in 0..dim {
            c[(i, j)] += int(q[i][j]) / &d;
        }
    }
    SymTensor::new(c).expect("symmetric")
}

/// A symmetric matrix with small rational entries and no definiteness guarantee.
pub fn random_symmetric(dim: usize, rng: &mut ChaCha8Rng) -> RatMatrix {
    let mut c = RatMatrix::zeros(dim, dim);
    for i in 0..dim {
        for j in i..dim {
            let v = Rat::new(BigInt::from(rng.gen_range(-6i64..=6)), BigInt::from(rng.gen_range(1i64..=4)));
            c[(i, j)] = v.clone();
            c[(j, i)] = v;
        }
    }
    c
}

/// A random label of `spec` with every spin `≤ max_spin`, `|λ_i| ≤ max_weight`
/// and dimension at most `max_dim`.
pub fn random_label(spec: &GroupSpec, max_spin: u32, max_weight: i64, max_dim: usize, rng: &mut ChaCha8Rng) -> IrrepLabel {
    loop {
        let spins: Vec<u32> = (0..spec.su2_factors()).map(|_| rng.gen_range(0..=max_spin)).collect();
        let weight: Vec<i64> = (0..spec.torus_rank()).map(|_| rng.gen_range(-max_weight..=max_weight)).collect();
        let l = IrrepLabel::new(spins, weight);
        if l.dim() <= max_dim {
            return l;
        }
    }
}

/// Dense Gaussian-rational matrix of an operator.
pub fn dense(op: &OperatorMatrix) -> Vec<Vec<CRat>> {
    (0..op.dim()).map(|i| (0..op.dim()).map(|j| op.entry(i, j)).collect()).collect()
}

fn matmul(a: &[Vec<CRat>], b: &[Vec<CRat>]) -> Vec<Vec<CRat>> {
    let n = a.len();
    let mut out = vec![vec![CRat::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] = &out[i][j] + &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// Faddeev–LeVerrier: coefficients of `det(X·I - A)`, lowest degree first,
/// over the Gaussian rationals.
pub fn faddeev_leverrier(a: &[Vec<CRat>]) -> Vec<CRat> {
    let n = a.len();
    let mut c = vec![CRat::zero(); n + 1];
    c[n] = CRat::one();
    let mut m = vec![vec![CRat::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1}·I
        let mut next = matmul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] = &row[i] + &c[n - k + 1];
        }
        m = next;
        let am = matmul(a, &m);
        let trace = (0..n).fold(CRat::zero(), |acc, i| acc + &am[i][i]);
        c[n - k] = -trace / CRat::new(int(k as i64), Rat::zero());
    }
    c
}

/// Determinant by cofactor-free fraction elimination over `Q`, used as an
/// oracle for resultants.
pub fn det_q(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if p != col {
            m.swap(p, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pivot;
            for c in col..n {
                let v = &f * &m[col][c];
                m[r][c] -= v;
            }
        }
    }
    det
}

/// Euclid's algorithm over `Q`; returns the monic gcd.
pub fn gcd_q(a: &ZPoly, b: &ZPoly) -> Vec<Rat> {
    let to_q = |p: &ZPoly| -> Vec<Rat> { p.coeffs().iter().map(|c| Rat::from_integer(c.clone())).collect() };
    let (mut x, mut y) = (to_q(a), to_q(b));
    while !y.is_empty() {
        // x mod y
        while x.len() >= y.len() && !x.is_empty() {
            let f = x.last().unwrap() / y.last().unwrap();
            let shift = x.len() - y.len();
            for (i, c) in y.iter().enumerate() {
                let v = &f * c;
                x[i + shift] -= v;
            }
            while x.last().is_some_and(Zero::is_zero) {
                x.pop();
            }
        }
        std::mem::swap(&mut x, &mut y);
    }
    if let Some(lc) = x.last().cloned() {
        for c in &mut x {
            *c /= &lc;
        }
    }
    x
}

/// Random integer polynomial of exact degree `deg` with coefficients in `[-r, r]`.
pub fn random_zpoly(deg: usize, r: i64, rng: &mut ChaCha8Rng) -> ZPoly {
    let mut c: Vec<BigInt> = (0..=deg).map(|_| BigInt::from(rng.gen_range(-r..=r))).collect();
    if c[deg].is_zero() {
        c[deg] = BigInt::from(if rng.gen_bool(0.5) { 1 } else { -1 });
    }
    ZPoly::new(c)
}

/// Numeric eigenvalues of a real symmetric rational matrix.
pub fn numeric_symmetric_eigenvalues(m: &RatMatrix) -> Vec<f64> {
    use num_traits::ToPrimitive;
    let n = m.rows();
    let d = nalgebra::DMatrix::from_fn(n, n, |i, j| m[(i, j)].to_f64().unwrap());
    d.symmetric_eigenvalues().iter().copied().collect()
}

/// Real roots of a char poly with their multiplicities, increasing,
/// isolated exactly and refined to width `2^-80 · bound`.
pub fn exact_roots(p: &CharPoly) -> Vec<(Rat, u32)> {
    let mut out = Vec::new();
    for (j, f) in p.primitive().squarefree_decomposition() {
        let bound = f.root_bound();
        let width = &bound / Rat::from_integer(BigInt::from(2).pow(80));
        for iv in isolate_roots(&f, &-&bound, &bound) {
            out.push((refine_root(&f, &iv, &width).midpoint(), j));
        }
    }
    out.sort();
    out
}

/// Real parts of the eigenvalues of an operator in its own (non-orthonormal)
/// basis, by a complex Schur decomposition; sorted.
pub fn operator_eigenvalues(op: &OperatorMatrix) -> Vec<f64> {
    use num_traits::ToPrimitive;
    let n = op.dim();
    let m = nalgebra::DMatrix::from_fn(n, n, |i, j| {
        let z = op.entry(i, j);
        Complex::new(z.re.to_f64().unwrap(), z.im.to_f64().unwrap())
    });
    let eig = nalgebra::linalg::Schur::new(m).eigenvalues().expect("triangular");
    let mut v: Vec<f64> = eig.iter().map(|z| z.re).collect();
    v.sort_by(f64::total_cmp);
    v
}
