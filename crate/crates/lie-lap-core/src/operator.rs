//! The operators `D_V(s) = -Σ_pq S_pq ρ*(X_p) ρ*(X_q)` and their numeric spectra.
//!
//! `D_V(s)` is held exactly as `M / den` with `M` a Gaussian-integer matrix
//! and `den` the common denominator of the tensor coefficients.

use alloc::vec;
use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{Float, One, ToPrimitive, Zero};

use crate::algebra::{GroupSpec, SymTensor};
use crate::error::{Error, Result};
use crate::irreps::{build_irrep, Irrep, IrrepLabel, SparseGauss};
use crate::ratmat::Rat;

/// Exact matrix `(re + i·im) / den` in the monomial basis of an irrep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorMatrix {
    dim: usize,
    den: BigInt,
    re: Vec<BigInt>,
    im: Vec<BigInt>,
    label: IrrepLabel,
    tensor: SymTensor,
}

impl OperatorMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn label(&self) -> &IrrepLabel {
        &self.label
    }

    pub fn tensor(&self) -> &SymTensor {
        &self.tensor
    }

    /// Common denominator of all entries (positive).
    pub fn denominator(&self) -> &BigInt {
        &self.den
    }

    /// Real and imaginary parts of the integer numerator matrix, row-major.
    pub fn numerator(&self) -> (&[BigInt], &[BigInt]) {
        (&self.re, &self.im)
    }

    pub fn entry(&self, i: usize, j: usize) -> Complex<Rat> {
        let k = i * self.dim + j;
        Complex::new(
            BigRational::new(self.re[k].clone(), self.den.clone()),
            BigRational::new(self.im[k].clone(), self.den.clone()),
        )
    }

    /// `Some(c)` if the matrix equals `c · Id`.
    pub fn as_scalar(&self) -> Option<Rat> {
        let n = self.dim;
        let c = self.re.first()?.clone();
        for i in 0..n {
            for j in 0..n {
                let k = i * n + j;
                let expect = if i == j { &c } else { &BigInt::zero() };
                if &self.re[k] != expect || !self.im[k].is_zero() {
                    return None;
                }
            }
        }
        Some(BigRational::new(c, self.den.clone()))
    }

    pub fn is_zero(&self) -> bool {
        self.re.iter().chain(&self.im).all(Zero::is_zero)
    }

    /// Whether all entries are real.
    pub fn is_real(&self) -> bool {
        self.im.iter().all(Zero::is_zero)
    }

    /// Restriction to an invariant subspace spanned by `basis` (columns given
    /// as rational vectors). Coordinates are read off at `free`, where basis
    /// vector `j` has entry 1 at `free[j]` and the others vanish. Fails if the
    /// subspace is not invariant.
    pub fn restrict(&self, basis: &[Vec<Rat>], free: &[usize]) -> Result<OperatorMatrix> {
        let n = self.dim;
        let r = basis.len();
        if free.len() != r || basis.iter().any(|v| v.len() != n) {
            return Err(Error::invalid("restriction basis does not match operator dimension"));
        }
        // Images D·w_j as exact Gaussian rationals.
        let images: Vec<Vec<Complex<Rat>>> = basis
            .iter()
            .map(|w| {
                (0..n)
                    .map(|i| {
                        let mut acc = Complex::new(Rat::zero(), Rat::zero());
                        for (j, wj) in w.iter().enumerate() {
                            if !wj.is_zero() {
                                let e = self.entry(i, j);
                                acc += Complex::new(e.re * wj, e.im * wj);
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        let mut entries = vec![Complex::new(Rat::zero(), Rat::zero()); r * r];
        for (col, img) in images.iter().enumerate() {
            // Coordinates c with Σ c_j w_j = img, then verify invariance.
            let coords: Vec<Complex<Rat>> = free.iter().map(|&f| img[f].clone()).collect();
            for i in 0..n {
                let mut recon = Complex::new(Rat::zero(), Rat::zero());
                for (c, w) in coords.iter().zip(basis) {
                    if !w[i].is_zero() {
                        recon += Complex::new(&c.re * &w[i], &c.im * &w[i]);
                    }
                }
                if recon != img[i] {
                    return Err(Error::invalid("subspace is not invariant under the operator"));
                }
            }
            for (row, c) in coords.into_iter().enumerate() {
                entries[row * r + col] = c;
            }
        }
        Ok(OperatorMatrix::from_gaussian_rationals(r, &entries, self.label.clone(), self.tensor.clone()))
    }

    /// Builds an operator from exact Gaussian-rational entries (row-major).
    pub fn from_gaussian_rationals(
        dim: usize,
        entries: &[Complex<Rat>],
        label: IrrepLabel,
        tensor: SymTensor,
    ) -> OperatorMatrix {
        use num_integer::Integer;
        let den = entries.iter().fold(BigInt::one(), |acc, e| acc.lcm(e.re.denom()).lcm(e.im.denom()));
        let scale = BigRational::from_integer(den.clone());
        let re = entries.iter().map(|e| (&e.re * &scale).to_integer()).collect();
        let im = entries.iter().map(|e| (&e.im * &scale).to_integer()).collect();
        OperatorMatrix { dim, den, re, im, label, tensor }
    }

    /// Numeric matrix in the orthonormal basis `v_ℓ / sqrt(ℓ!(m-ℓ)!)` (per
    /// tensor factor), where it is hermitian.
    pub fn to_orthonormal_numeric(&self) -> DMatrix<Complex<f64>> {
        let n = self.dim;
        let log_sigma = log_norms(&self.label);
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        DMatrix::from_fn(n, n, |i, j| {
            let k = i * n + j;
            if self.re[k].is_zero() && self.im[k].is_zero() {
                return Complex::new(0.0, 0.0);
            }
            let ratio = Float::exp(log_sigma[i] - log_sigma[j]);
            let re = BigRational::new(self.re[k].clone(), self.den.clone()).to_f64().unwrap_or_else(|| {
                self.re[k].to_f64().unwrap_or(f64::NAN) / den
            });
            let im = BigRational::new(self.im[k].clone(), self.den.clone()).to_f64().unwrap_or_else(|| {
                self.im[k].to_f64().unwrap_or(f64::NAN) / den
            });
            Complex::new(re * ratio, im * ratio)
        })
    }
}

/// `ln ‖v‖` of every monomial basis vector for the invariant inner product
/// `‖v_ℓ‖² = ℓ!(m-ℓ)!`, multiplied over tensor factors.
fn log_norms(label: &IrrepLabel) -> Vec<f64> {
    let max_m = label.spins.iter().copied().max().unwrap_or(0) as usize;
    let mut ln_fact = vec![0.0f64; max_m + 1];
    for i in 1..=max_m {
        ln_fact[i] = ln_fact[i - 1] + Float::ln(i as f64);
    }
    let mut out = vec![0.0f64];
    for &m in &label.spins {
        let m = m as usize;
        let factor: Vec<f64> = (0..=m).map(|l| 0.5 * (ln_fact[l] + ln_fact[m - l])).collect();
        out = out.iter().flat_map(|&a| factor.iter().map(move |&b| a + b)).collect();
    }
    out
}

/// `D_V(s) = -Σ_pq S_pq ρ*(X_p) ρ*(X_q)`.
pub fn build_dv(label: &IrrepLabel, s: &SymTensor, spec: &GroupSpec) -> Result<OperatorMatrix> {
    let irrep = build_irrep(label, spec)?;
    build_dv_from_irrep(&irrep, s)
}

/// Same as [`build_dv`] for an already constructed irrep.
pub fn build_dv_from_irrep(irrep: &Irrep, s: &SymTensor) -> Result<OperatorMatrix> {
    let gens = irrep.generators();
    if s.dim() != gens.len() {
        return Err(Error::invalid(alloc::format!(
            "tensor has size {}, Lie algebra has dimension {}",
            s.dim(),
            gens.len()
        )));
    }
    let n = irrep.dim();
    let den = s.common_denominator();
    let den_q = BigRational::from_integer(den.clone());
    let mut re = vec![BigInt::zero(); n * n];
    let mut im = vec![BigInt::zero(); n * n];
    for p in 0..gens.len() {
        for q in 0..gens.len() {
            let c = s.get(p, q);
            if c.is_zero() || gens[p].is_zero() || gens[q].is_zero() {
                continue;
            }
            let c_int = (c * &den_q).to_integer();
            let prod: SparseGauss = gens[p].mul(&gens[q]);
            for ((i, j), v) in prod.entries() {
                let k = i * n + j;
                if v.re != 0 {
                    re[k] -= &c_int * BigInt::from(v.re);
                }
                if v.im != 0 {
                    im[k] -= &c_int * BigInt::from(v.im);
                }
            }
        }
    }
    Ok(OperatorMatrix { dim: n, den, re, im, label: irrep.label().clone(), tensor: s.clone() })
}

/// `Σ_j (H_j² + A_j² + B_j²) + Σ_i e_i²`, the identity coefficient matrix.
pub fn casimir_tensor(spec: &GroupSpec) -> SymTensor {
    SymTensor::identity(spec.dim())
}

/// Sorted numeric eigenvalues of a `D_V(s)` and their clusters.
#[derive(Clone, Debug, PartialEq)]
pub struct NumericSpectrum {
    pub eigenvalues: Vec<f64>,
    /// `(representative value, multiplicity)`, increasing.
    pub clusters: Vec<(f64, usize)>,
    pub tolerance: f64,
}

impl NumericSpectrum {
    /// Multiplicities of the clusters, increasing by value.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.clusters.iter().map(|c| c.1).collect()
    }
}

/// Default relative gap for clustering eigenvalues.
pub const DEFAULT_CLUSTER_TOLERANCE: f64 = 1e-8;

/// Hermitian eigensolve in the orthonormalized basis followed by clustering
/// with relative gap `tolerance` (relative to the largest |eigenvalue|).
pub fn eigen_decompose_numeric(op: &OperatorMatrix, tolerance: f64) -> Result<NumericSpectrum> {
    let h = op.to_orthonormal_numeric();
    let n = op.dim();
    let scale = h.iter().map(|z| z.norm()).fold(0.0f64, f64::max);
    let mut asym = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            asym = asym.max((h[(i, j)] - h[(j, i)].conj()).norm());
        }
    }
    if asym > 1e-10 * scale.max(1.0) {
        return Err(Error::inconsistent(alloc::format!(
            "orthonormalized operator is not hermitian (asymmetry {asym:e})"
        )));
    }
    // Symmetrize away rounding before the solve.
    let herm = (&h + h.adjoint()).map(|z| z * 0.5);
    let eig = herm.symmetric_eigenvalues();
    let mut eigenvalues: Vec<f64> = eig.iter().copied().collect();
    eigenvalues.sort_by(|a, b| a.partial_cmp(b).expect("finite eigenvalues"));
    let clusters = cluster_values(&eigenvalues, tolerance);
    Ok(NumericSpectrum { eigenvalues, clusters, tolerance })
}

/// Groups sorted values whose consecutive gap is at most
/// `tolerance · max |value|`.
pub fn cluster_values(sorted: &[f64], tolerance: f64) -> Vec<(f64, usize)> {
    let max_abs = sorted.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let gap = tolerance * max_abs;
    let mut clusters: Vec<(f64, usize)> = Vec::new();
    let mut sum = 0.0;
    let mut count = 0usize;
    let mut last = f64::NAN;
    for &v in sorted {
        if count > 0 && v - last > gap {
            clusters.push((sum / count as f64, count));
            sum = 0.0;
            count = 0;
        }
        sum += v;
        count += 1;
        last = v;
    }
    if count > 0 {
        clusters.push((sum / count as f64, count));
    }
    clusters
}

/// Result of [`kronecker_spectrum_check`].
#[derive(Clone, Debug, PartialEq)]
pub struct KroneckerCheck {
    /// Numeric spectrum of the combined operator equals the Minkowski sum.
    pub numeric: bool,
    /// Exact char poly of the combined operator equals the composed sum of the factors.
    pub exact: bool,
}

impl KroneckerCheck {
    pub fn passed(&self) -> bool {
        self.numeric && self.exact
    }
}

/// Compares the spectrum of `D` on `ι(s) + ε·ι'(s')` for `V ⊗ V'` on the
/// product group with the sums `μ_i + εν_j`.
pub fn kronecker_spectrum_check(
    (spec1, label1, s1): (&GroupSpec, &IrrepLabel, &SymTensor),
    (spec2, label2, s2): (&GroupSpec, &IrrepLabel, &SymTensor),
    eps: &Rat,
) -> Result<KroneckerCheck> {
    let spec = spec1.product(spec2)?;
    let label = IrrepLabel::new(
        label1.spins.iter().chain(&label2.spins).copied().collect(),
        label1.weight.iter().chain(&label2.weight).copied().collect(),
    );
    let mut combined = crate::ratmat::RatMatrix::zeros(spec.dim(), spec.dim());
    for p in 0..spec1.dim() {
        for q in 0..spec1.dim() {
            combined[(spec1.product_index(spec2, p, true), spec1.product_index(spec2, q, true))] = s1.get(p, q).clone();
        }
    }
    for p in 0..spec2.dim() {
        for q in 0..spec2.dim() {
            combined[(spec1.product_index(spec2, p, false), spec1.product_index(spec2, q, false))] =
                s2.get(p, q) * eps;
        }
    }
    let s = SymTensor::new(combined)?;
    let d = build_dv(&label, &s, &spec)?;
    let d1 = build_dv(label1, s1, spec1)?;
    let d2 = build_dv(label2, s2, spec2)?;

    // Exact: composed-sum polynomial from power sums.
    let p = crate::polycert::char_poly_exact(&d)?;
    let p1 = crate::polycert::char_poly_exact(&d1)?;
    let p2 = crate::polycert::char_poly_exact(&d2)?;
    let expected = crate::polycert::kronecker_sum_charpoly(&p1, &p2, eps);
    let exact = p == expected;

    // Numeric: Minkowski sum against the combined spectrum.
    let tol = DEFAULT_CLUSTER_TOLERANCE;
    let n1 = eigen_decompose_numeric(&d1, tol)?;
    let n2 = eigen_decompose_numeric(&d2, tol)?;
    let nc = eigen_decompose_numeric(&d, tol)?;
    let e = eps.to_f64().unwrap_or(f64::NAN);
    let mut sums: Vec<f64> = n1.eigenvalues.iter().flat_map(|&a| n2.eigenvalues.iter().map(move |&b| a + e * b)).collect();
    sums.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
    let scale = sums.iter().chain(&nc.eigenvalues).fold(1.0f64, |m, v| m.max(v.abs()));
    let numeric = sums.len() == nc.eigenvalues.len()
        && sums.iter().zip(&nc.eigenvalues).all(|(a, b)| (a - b).abs() <= 1e-8 * scale)
        && cluster_values(&sums, tol).iter().map(|c| c.1).eq(nc.multiplicities());
    Ok(KroneckerCheck { numeric, exact })
}
