//! Irreducible complex representations of `SU(2)^k x T^n`.
//!
//! `V_m` is realized on homogeneous polynomials of degree `m` in `z_1, z_2`
//! with monomial basis `v_ℓ = z_1^(m-ℓ) z_2^ℓ`. Generators are stored in that
//! (non-orthonormal) basis, where all entries are Gaussian integers. Tensor
//! products use the row-major multi-index `(ℓ_1, ..., ℓ_k)`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::Zero;

use crate::algebra::GroupSpec;
use crate::error::{Error, Result};
use crate::ratmat::Rat;

pub type GaussI64 = Complex<i64>;

/// Label `(m_1, ..., m_k; λ_1, ..., λ_n)` of `V_{m_1} ⊗ ... ⊗ V_{m_k} ⊗ V_λ`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IrrepLabel {
    pub spins: Vec<u32>,
    pub weight: Vec<i64>,
}

impl IrrepLabel {
    pub fn new(spins: Vec<u32>, weight: Vec<i64>) -> Self {
        IrrepLabel { spins, weight }
    }

    pub fn trivial(spec: &GroupSpec) -> Self {
        IrrepLabel { spins: vec![0; spec.su2_factors()], weight: vec![0; spec.torus_rank()] }
    }

    pub fn su2(m: u32) -> Self {
        IrrepLabel { spins: vec![m], weight: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.spins.iter().map(|&m| m as usize + 1).product()
    }

    pub fn is_trivial(&self) -> bool {
        self.spins.iter().all(|&m| m == 0) && self.weight.iter().all(|&l| l == 0)
    }

    pub fn is_self_dual(&self) -> bool {
        self.weight.iter().all(|&l| l == 0)
    }

    /// Eigenvalue of the Casimir `Σ_j (H_j² + A_j² + B_j²) + Σ_i e_i²`:
    /// `Σ m_j (m_j + 2) + |λ|²`.
    pub fn casimir(&self) -> u64 {
        let s: u64 = self.spins.iter().map(|&m| u64::from(m) * (u64::from(m) + 2)).sum();
        s + self.weight.iter().map(|&l| (l * l) as u64).sum::<u64>()
    }

    /// The representative of `{V, V*}` whose first nonzero weight entry is positive.
    pub fn canonical(&self) -> IrrepLabel {
        match self.weight.iter().find(|&&l| l != 0) {
            Some(&l) if l < 0 => dual_label(self),
            _ => self.clone(),
        }
    }

    pub fn check_spec(&self, spec: &GroupSpec) -> Result<()> {
        if self.spins.len() != spec.su2_factors() || self.weight.len() != spec.torus_rank() {
            return Err(Error::invalid(format!(
                "label {self} does not fit a group with k = {}, n = {}",
                spec.su2_factors(),
                spec.torus_rank()
            )));
        }
        Ok(())
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<String>| v.join(",");
        let spins = join(self.spins.iter().map(|m| format!("{m}")).collect());
        if self.weight.is_empty() {
            f.write_str(&spins)
        } else {
            write!(f, "{spins};{}", join(self.weight.iter().map(|l| format!("{l}")).collect()))
        }
    }
}

impl FromStr for IrrepLabel {
    type Err = Error;

    /// Parses `"m1,m2,...;l1,...,ln"`; the `;` part may be omitted when `n = 0`.
    fn from_str(s: &str) -> Result<Self> {
        let (spins, weight) = s.split_once(';').unwrap_or((s, ""));
        let parse_list = |part: &str| -> Result<Vec<i64>> {
            part.split(',')
                .map(str::trim)
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<i64>().map_err(|_| Error::invalid(format!("bad label entry {t:?} in {s:?}"))))
                .collect()
        };
        let spins = parse_list(spins)?
            .into_iter()
            .map(|m| u32::try_from(m).map_err(|_| Error::invalid(format!("negative spin in {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(IrrepLabel { spins, weight: parse_list(weight)? })
    }
}

/// Real, complex or quaternionic type of a complex irreducible representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RepType {
    Real,
    Complex,
    Quaternionic,
}

impl RepType {
    pub fn as_str(self) -> &'static str {
        match self {
            RepType::Real => "real",
            RepType::Complex => "complex",
            RepType::Quaternionic => "quaternionic",
        }
    }
}

impl fmt::Display for RepType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Sparse square matrix over Gaussian integers, stored by columns:
/// `cols[j]` lists `(row, value)` for the image of basis vector `j`.
#[derive(Clone, Debug)]
pub struct SparseGauss {
    dim: usize,
    cols: Vec<Vec<(usize, GaussI64)>>,
}

impl PartialEq for SparseGauss {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries() == other.entries()
    }
}

impl Eq for SparseGauss {}

impl SparseGauss {
    pub fn zeros(dim: usize) -> Self {
        SparseGauss { dim, cols: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, Complex::new(1, 0))
    }

    pub fn scalar(dim: usize, c: GaussI64) -> Self {
        if c.is_zero() {
            return Self::zeros(dim);
        }
        SparseGauss { dim, cols: (0..dim).map(|j| vec![(j, c)]).collect() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &[(usize, GaussI64)] {
        &self.cols[j]
    }

    fn push(&mut self, row: usize, col: usize, v: GaussI64) {
        if !v.is_zero() {
            self.cols[col].push((row, v));
        }
    }

    pub fn get(&self, row: usize, col: usize) -> GaussI64 {
        self.cols[col].iter().filter(|(r, _)| *r == row).map(|(_, v)| *v).sum()
    }

    /// Map `(row, col) -> value` without zero entries.
    pub fn entries(&self) -> BTreeMap<(usize, usize), GaussI64> {
        let mut out = BTreeMap::new();
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                *out.entry((i, j)).or_insert_with(Complex::zero) += v;
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    pub fn to_dense(&self) -> Vec<Vec<GaussI64>> {
        let mut d = vec![vec![Complex::zero(); self.dim]; self.dim];
        for ((i, j), v) in self.entries() {
            d[i][j] = v;
        }
        d
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &SparseGauss) -> SparseGauss {
        assert_eq!(self.dim, rhs.dim, "sparse product size mismatch");
        let mut out = SparseGauss::zeros(self.dim);
        for j in 0..self.dim {
            let mut acc: BTreeMap<usize, GaussI64> = BTreeMap::new();
            for &(k, b) in &rhs.cols[j] {
                for &(i, a) in &self.cols[k] {
                    *acc.entry(i).or_insert_with(Complex::zero) += a * b;
                }
            }
            for (i, v) in acc {
                out.push(i, j, v);
            }
        }
        out
    }

    pub fn add(&self, rhs: &SparseGauss) -> SparseGauss {
        self.combine(rhs, Complex::new(1, 0))
    }

    pub fn sub(&self, rhs: &SparseGauss) -> SparseGauss {
        self.combine(rhs, Complex::new(-1, 0))
    }

    fn combine(&self, rhs: &SparseGauss, sign: GaussI64) -> SparseGauss {
        assert_eq!(self.dim, rhs.dim, "sparse sum size mismatch");
        let mut out = SparseGauss::zeros(self.dim);
        for j in 0..self.dim {
            let mut acc: BTreeMap<usize, GaussI64> = BTreeMap::new();
            for &(i, v) in &self.cols[j] {
                *acc.entry(i).or_insert_with(Complex::zero) += v;
            }
            for &(i, v) in &rhs.cols[j] {
                *acc.entry(i).or_insert_with(Complex::zero) += sign * v;
            }
            for (i, v) in acc {
                out.push(i, j, v);
            }
        }
        out
    }

    pub fn scale(&self, c: GaussI64) -> SparseGauss {
        let mut out = SparseGauss::zeros(self.dim);
        for (j, col) in self.cols.iter().enumerate() {
            for &(i, v) in col {
                out.push(i, j, v * c);
            }
        }
        out
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> SparseGauss {
        SparseGauss {
            dim: self.dim,
            cols: self.cols.iter().map(|c| c.iter().map(|&(i, v)| (i, v.conj())).collect()).collect(),
        }
    }

    pub fn commutator(&self, rhs: &SparseGauss) -> SparseGauss {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn anticommutator(&self, rhs: &SparseGauss) -> SparseGauss {
        self.mul(rhs).add(&rhs.mul(self))
    }

    pub fn is_zero(&self) -> bool {
        self.entries().is_empty()
    }

    /// `A ⊗ B` with row-major multi-index.
    pub fn kron(&self, rhs: &SparseGauss) -> SparseGauss {
        let dim = self.dim * rhs.dim;
        let mut out = SparseGauss::zeros(dim);
        for (ja, ca) in self.cols.iter().enumerate() {
            for (jb, cb) in rhs.cols.iter().enumerate() {
                for &(ia, va) in ca {
                    for &(ib, vb) in cb {
                        out.push(ia * rhs.dim + ib, ja * rhs.dim + jb, va * vb);
                    }
                }
            }
        }
        out
    }

    /// Whether all entries are real integers.
    pub fn is_real(&self) -> bool {
        self.cols.iter().flatten().all(|(_, v)| v.im == 0)
    }
}

/// `(ρ*(H), ρ*(A), ρ*(B))` on `V_m` in the monomial basis:
///
/// * `ρ*(H) v_ℓ = i(m - 2ℓ) v_ℓ`
/// * `ρ*(A) v_ℓ = i(m - ℓ) v_{ℓ+1} + iℓ v_{ℓ-1}`
/// * `ρ*(B) v_ℓ = (m - ℓ) v_{ℓ+1} - ℓ v_{ℓ-1}`
pub fn su2_generators(m: u32) -> [SparseGauss; 3] {
    let dim = m as usize + 1;
    let m = i64::from(m);
    let mut h = SparseGauss::zeros(dim);
    let mut a = SparseGauss::zeros(dim);
    let mut b = SparseGauss::zeros(dim);
    for l in 0..dim {
        let li = l as i64;
        h.push(l, l, Complex::new(0, m - 2 * li));
        if l + 1 < dim {
            a.push(l + 1, l, Complex::new(0, m - li));
            b.push(l + 1, l, Complex::new(m - li, 0));
        }
        if l > 0 {
            a.push(l - 1, l, Complex::new(0, li));
            b.push(l - 1, l, Complex::new(-li, 0));
        }
    }
    [h, a, b]
}

/// `ρ_{V_m}(x)` for `x = exp(π/2·B)`: `v_ℓ ↦ (-1)^ℓ v_{m-ℓ}`.
pub fn su2_x_action(m: u32) -> SparseGauss {
    let dim = m as usize + 1;
    let mut t = SparseGauss::zeros(dim);
    for l in 0..dim {
        let sign = if l % 2 == 0 { 1 } else { -1 };
        t.push(dim - 1 - l, l, Complex::new(sign, 0));
    }
    t
}

/// A labeled irreducible representation with its Lie algebra generators,
/// one per basis element of the group's Lie algebra.
#[derive(Clone, Debug)]
pub struct Irrep {
    label: IrrepLabel,
    dim: usize,
    rep_type: RepType,
    generators: Vec<SparseGauss>,
}

impl Irrep {
    pub fn label(&self) -> &IrrepLabel {
        &self.label
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rep_type(&self) -> RepType {
        self.rep_type
    }

    /// `ρ*(X_p)` for basis index `p`.
    pub fn generator(&self, p: usize) -> &SparseGauss {
        &self.generators[p]
    }

    pub fn generators(&self) -> &[SparseGauss] {
        &self.generators
    }
}

/// Assembles generators factor by factor: the su(2) generators of factor
/// `j` act on the `j`-th tensor slot, torus direction `e_i` acts as `iλ_i`.
pub fn build_irrep(label: &IrrepLabel, spec: &GroupSpec) -> Result<Irrep> {
    label.check_spec(spec)?;
    let dim = label.dim();
    let mut generators = Vec::with_capacity(spec.dim());
    for (j, &m) in label.spins.iter().enumerate() {
        let left: usize = label.spins[..j].iter().map(|&x| x as usize + 1).product();
        let right: usize = label.spins[j + 1..].iter().map(|&x| x as usize + 1).product();
        let id_left = SparseGauss::identity(left);
        let id_right = SparseGauss::identity(right);
        for g in su2_generators(m) {
            generators.push(id_left.kron(&g).kron(&id_right));
        }
    }
    for &l in &label.weight {
        generators.push(SparseGauss::scalar(dim, Complex::new(0, l)));
    }
    Ok(Irrep { label: label.clone(), dim, rep_type: classify_type(label), generators })
}

/// Complex if `λ ≠ 0`; otherwise quaternionic iff an odd number of spins
/// are odd, else real.
pub fn classify_type(label: &IrrepLabel) -> RepType {
    if !label.is_self_dual() {
        return RepType::Complex;
    }
    let odd = label.spins.iter().filter(|&&m| m % 2 == 1).count();
    if odd % 2 == 1 {
        RepType::Quaternionic
    } else {
        RepType::Real
    }
}

/// `V*`: spins unchanged, weight negated.
pub fn dual_label(label: &IrrepLabel) -> IrrepLabel {
    IrrepLabel { spins: label.spins.clone(), weight: label.weight.iter().map(|l| -l).collect() }
}

/// Whether the representation is trivial on every central generator, i.e.
/// `Π_j sign_j^{m_j} · exp(2πi λ·t) = 1`. Evaluated exactly as the
/// integrality of `Σ_{sign_j = -1} m_j / 2 + λ·t`.
pub fn descends_to_quotient(label: &IrrepLabel, spec: &GroupSpec) -> bool {
    spec.central_generators().iter().all(|g| {
        let mut phase = Rat::zero();
        for (&s, &m) in g.signs().iter().zip(&label.spins) {
            if s == -1 {
                phase += Rat::new(BigInt::from(m), BigInt::from(2));
            }
        }
        for (t, &l) in g.torus_part().iter().zip(&label.weight) {
            phase += t * Rat::from_integer(BigInt::from(l));
        }
        phase.is_integer()
    })
}

/// The conjugate-linear map `J = P ∘ conj` with `P v_ℓ = (-1)^ℓ v_{m-ℓ}`.
#[derive(Clone, Debug)]
pub struct QuaternionicStructure {
    m: u32,
    linear_part: SparseGauss,
}

impl QuaternionicStructure {
    pub fn spin(&self) -> u32 {
        self.m
    }

    /// The matrix `P` with `J(c) = P · conj(c)`.
    pub fn linear_part(&self) -> &SparseGauss {
        &self.linear_part
    }

    /// Applies `J` to a coordinate vector.
    pub fn apply(&self, c: &[GaussI64]) -> Vec<GaussI64> {
        let mut out = vec![Complex::zero(); c.len()];
        for (j, col) in self.linear_part.cols.iter().enumerate() {
            for &(i, v) in col {
                out[i] += v * c[j].conj();
            }
        }
        out
    }

    /// `J² = sign · Id`; returns the sign, or `None` if `J²` is not scalar.
    pub fn square_sign(&self) -> Option<i64> {
        // J² = P · conj(P) = P² since P is real.
        let sq = self.linear_part.mul(&self.linear_part.conj());
        let e = sq.entries();
        let dim = self.linear_part.dim();
        let first = *e.get(&(0, 0))?;
        let scalar = first.im == 0 && (first.re == 1 || first.re == -1);
        (scalar && e.len() == dim && (0..dim).all(|i| e.get(&(i, i)) == Some(&first))).then_some(first.re)
    }

    /// `J ∘ ρ*(X) = ρ*(X) ∘ J`, i.e. `P · conj(ρ*(X)) = ρ*(X) · P`.
    pub fn commutes_with(&self, g: &SparseGauss) -> bool {
        self.linear_part.mul(&g.conj()) == g.mul(&self.linear_part)
    }
}

/// The conjugate-linear equivariant map on `V_m`. It squares to `(-1)^m`.
pub fn quaternionic_structure(m: u32) -> QuaternionicStructure {
    QuaternionicStructure { m, linear_part: su2_x_action(m) }
}

/// Sign of `J²` for the tensor product structure `J_1 ⊗ ... ⊗ J_k`, or
/// `None` when the label is not self-dual.
pub fn structure_sign(label: &IrrepLabel) -> Option<i64> {
    if !label.is_self_dual() {
        return None;
    }
    label.spins.iter().map(|&m| quaternionic_structure(m).square_sign()).product::<Option<i64>>()
}

/// All labels with every spin `≤ level` and every `|λ_i| ≤ level` that
/// descend to the quotient, one representative per dual pair, sorted.
pub fn labels_up_to_level(spec: &GroupSpec, level: u32) -> Vec<IrrepLabel> {
    let k = spec.su2_factors();
    let n = spec.torus_rank();
    let mut spins_list: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..k {
        spins_list = spins_list
            .into_iter()
            .flat_map(|s| {
                (0..=level).map(move |m| {
                    let mut t = s.clone();
                    t.push(m);
                    t
                })
            })
            .collect();
    }
    let l = i64::from(level);
    let mut weights: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..n {
        weights = weights
            .into_iter()
            .flat_map(|w| {
                (-l..=l).map(move |x| {
                    let mut t = w.clone();
                    t.push(x);
                    t
                })
            })
            .collect();
    }
    let mut out: Vec<IrrepLabel> = Vec::new();
    for s in &spins_list {
        for w in &weights {
            let label = IrrepLabel::new(s.clone(), w.clone());
            if label.canonical() == label && descends_to_quotient(&label, spec) {
                out.push(label);
            }
        }
    }
    out.sort_by(|a, b| a.casimir().cmp(&b.casimir()).then_with(|| a.cmp(b)));
    out
}
