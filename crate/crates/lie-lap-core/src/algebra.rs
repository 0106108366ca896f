//! Lie algebra bookkeeping for `SU(2)^k x T^n` and its central quotients.
//!
//! The Lie algebra basis is fixed once and for all as
//! `(H_1, A_1, B_1, ..., H_k, A_k, B_k, e_1, ..., e_n)`, where `H, A, B` are
//! the standard basis of `su(2)`:
//!
//! ```text
//! H = [[i, 0], [0, -i]],  A = [[0, i], [i, 0]],  B = [[0, -1], [1, 0]]
//! ```
//!
//! and `e_i` are the standard torus directions. Torus characters are
//! normalized so that the character with weight `λ` has derivative `iλ_i`
//! along `e_i`, i.e. the torus is `R^n / 2πZ^n`. Eigenvalues for the
//! `R^n / Z^n` normalization are obtained by multiplying torus contributions
//! by `(2π)^2`.
//!
//! Symmetric 2-tensors `s = Σ S_pq X_p ⊗ X_q` are stored as their symmetric
//! coefficient matrix `S` in that basis. A metric with Gram matrix `G` has
//! tensor `S = G⁻¹` (the sum of squares of any `g`-orthonormal basis).

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ratmat::{Rat, RatMatrix};

/// Named groups recognized by [`build_group_spec`] and [`GroupSpec::preset`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Preset {
    Su2,
    So3,
    U2,
    So4,
    Spin4,
    Custom,
}

impl Preset {
    pub fn as_str(self) -> &'static str {
        match self {
            Preset::Su2 => "su2",
            Preset::So3 => "so3",
            Preset::U2 => "u2",
            Preset::So4 => "so4",
            Preset::Spin4 => "spin4",
            Preset::Custom => "custom",
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A central element `(±Id, ..., ±Id, exp(2πi t))` of `SU(2)^k x T^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CentralElement {
    signs: Vec<i8>,
    torus_part: Vec<Rat>,
}

impl CentralElement {
    /// `signs` must be ±1; torus entries are reduced modulo 1 into `[0, 1)`.
    pub fn new(signs: Vec<i8>, torus_part: Vec<Rat>) -> Result<Self> {
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::invalid("central element signs must be +1 or -1"));
        }
        let torus_part = torus_part.into_iter().map(|t| reduce_mod_one(&t)).collect();
        Ok(CentralElement { signs, torus_part })
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn torus_part(&self) -> &[Rat] {
        &self.torus_part
    }

    /// Order of the element in the group.
    pub fn order(&self) -> BigInt {
        let two = if self.signs.contains(&-1) { BigInt::from(2) } else { BigInt::one() };
        self.torus_part.iter().fold(two, |acc, t| acc.lcm(t.denom()))
    }
}

fn reduce_mod_one(t: &Rat) -> Rat {
    t - t.floor()
}

/// The group `SU(2)^k x T^n / Γ` with `Γ` generated by `central_generators`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupSpec {
    k: usize,
    n: usize,
    central: Vec<CentralElement>,
    name: Preset,
}

/// A basis element of the Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BasisElement {
    H(usize),
    A(usize),
    B(usize),
    Torus(usize),
}

/// A factor of the product decomposition: one `su(2)` summand or the whole torus.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Su2(usize),
    Torus,
}

impl GroupSpec {
    pub fn su2_factors(&self) -> usize {
        self.k
    }

    pub fn torus_rank(&self) -> usize {
        self.n
    }

    /// Lie algebra dimension `3k + n`.
    pub fn dim(&self) -> usize {
        3 * self.k + self.n
    }

    pub fn central_generators(&self) -> &[CentralElement] {
        &self.central
    }

    pub fn name(&self) -> Preset {
        self.name
    }

    /// Human-readable description, e.g. `su2xsu2/Γ` or `so3`.
    pub fn describe(&self) -> String {
        if self.name != Preset::Custom {
            return self.name.to_string();
        }
        let mut parts: Vec<String> = (0..self.k).map(|_| "su2".to_string()).collect();
        if self.n > 0 {
            parts.push(format!("t{}", self.n));
        }
        let mut s = parts.join("x");
        if !self.central.is_empty() {
            s.push_str("/Γ");
        }
        s
    }

    /// Index of a basis element in the fixed ordered basis.
    pub fn index(&self, e: BasisElement) -> Result<usize> {
        let idx = match e {
            BasisElement::H(j) if j < self.k => 3 * j,
            BasisElement::A(j) if j < self.k => 3 * j + 1,
            BasisElement::B(j) if j < self.k => 3 * j + 2,
            BasisElement::Torus(i) if i < self.n => 3 * self.k + i,
            _ => return Err(Error::invalid(format!("basis element {e:?} out of range"))),
        };
        Ok(idx)
    }

    pub fn basis_element(&self, idx: usize) -> Result<BasisElement> {
        if idx >= self.dim() {
            return Err(Error::invalid(format!("basis index {idx} out of range")));
        }
        Ok(if idx < 3 * self.k {
            match idx % 3 {
                0 => BasisElement::H(idx / 3),
                1 => BasisElement::A(idx / 3),
                _ => BasisElement::B(idx / 3),
            }
        } else {
            BasisElement::Torus(idx - 3 * self.k)
        })
    }

    /// Basis indices spanned by a factor.
    pub fn factor_indices(&self, factor: Factor) -> Result<core::ops::Range<usize>> {
        match factor {
            Factor::Su2(j) if j < self.k => Ok(3 * j..3 * j + 3),
            Factor::Torus => Ok(3 * self.k..3 * self.k + self.n),
            Factor::Su2(j) => Err(Error::invalid(format!("su(2) factor {j} out of range (k = {})", self.k))),
        }
    }

    /// The product `self x other` without central quotient. The su(2)
    /// factors of `self` come first, then those of `other`; likewise for the
    /// torus directions.
    pub fn product(&self, other: &GroupSpec) -> Result<GroupSpec> {
        build_group_spec(self.k + other.k, self.n + other.n, Vec::new())
    }

    /// Position in `self.product(other)` of basis index `idx` of `other`
    /// (`left = false`) or of `self` (`left = true`).
    pub fn product_index(&self, other: &GroupSpec, idx: usize, left: bool) -> usize {
        if left {
            if idx < 3 * self.k {
                idx
            } else {
                3 * (self.k + other.k) + (idx - 3 * self.k)
            }
        } else if idx < 3 * other.k {
            3 * self.k + idx
        } else {
            3 * (self.k + other.k) + self.n + (idx - 3 * other.k)
        }
    }

    /// Parses a preset or product description: `su2`, `so3`, `u2`, `so4`,
    /// `spin4`, `t3`, `su2xsu2`, `su2xt2`, `su2^3xt1`.
    pub fn preset(name: &str) -> Result<GroupSpec> {
        let lower = name.trim().to_ascii_lowercase();
        match lower.as_str() {
            "so3" => return build_group_spec(1, 0, vec![CentralElement::new(vec![-1], vec![])?]),
            "so4" => return build_group_spec(2, 0, vec![CentralElement::new(vec![-1, -1], vec![])?]),
            "u2" => {
                let half = Rat::new(BigInt::one(), BigInt::from(2));
                return build_group_spec(1, 1, vec![CentralElement::new(vec![-1], vec![half])?]);
            }
            "spin4" => return build_group_spec(2, 0, Vec::new()),
            _ => {}
        }
        let (mut k, mut n) = (0usize, 0usize);
        for token in lower.split('x') {
            let token = token.trim();
            if let Some(rest) = token.strip_prefix("su2") {
                let reps = match rest.strip_prefix('^') {
                    Some(p) => p.parse::<usize>().map_err(|_| Error::invalid(format!("bad factor {token:?}")))?,
                    None if rest.is_empty() => 1,
                    None => return Err(Error::invalid(format!("bad factor {token:?}"))),
                };
                k += reps;
            } else if let Some(rest) = token.strip_prefix('t') {
                let r = if rest.is_empty() {
                    1
                } else {
                    rest.parse::<usize>().map_err(|_| Error::invalid(format!("bad torus factor {token:?}")))?
                };
                n += r;
            } else {
                return Err(Error::invalid(format!("unknown group {name:?}")));
            }
        }
        build_group_spec(k, n, Vec::new())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Validates and builds a group description; recognizes the named presets.
pub fn build_group_spec(k: usize, n: usize, central_generators: Vec<CentralElement>) -> Result<GroupSpec> {
    if k + n == 0 {
        return Err(Error::invalid("group must have at least one factor (k + n >= 1)"));
    }
    for g in &central_generators {
        if g.signs.len() != k {
            return Err(Error::invalid(format!("central element has {} signs, expected {k}", g.signs.len())));
        }
        if g.torus_part.len() != n {
            return Err(Error::invalid(format!(
                "central element has {} torus entries, expected {n}",
                g.torus_part.len()
            )));
        }
    }
    // Drop trivial generators; they do not change the quotient.
    let central: Vec<CentralElement> = central_generators
        .into_iter()
        .filter(|g| g.signs.contains(&-1) || g.torus_part.iter().any(|t| !t.is_zero()))
        .collect();
    let name = classify_preset(k, n, &central);
    Ok(GroupSpec { k, n, central, name })
}

fn classify_preset(k: usize, n: usize, central: &[CentralElement]) -> Preset {
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    match (k, n, central) {
        (1, 0, []) => Preset::Su2,
        (2, 0, []) => Preset::Spin4,
        (1, 0, [g]) if g.signs == [-1] => Preset::So3,
        (2, 0, [g]) if g.signs == [-1, -1] => Preset::So4,
        (1, 1, [g]) if g.signs == [-1] && g.torus_part == [half] => Preset::U2,
        _ => Preset::Custom,
    }
}

/// An element of `Sym²(g)` as its symmetric coefficient matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymTensor {
    coeffs: RatMatrix,
}

impl SymTensor {
    pub fn new(coeffs: RatMatrix) -> Result<Self> {
        if !coeffs.is_symmetric() {
            return Err(Error::invalid("tensor coefficient matrix must be square and symmetric"));
        }
        Ok(SymTensor { coeffs })
    }

    pub fn zero(dim: usize) -> Self {
        SymTensor { coeffs: RatMatrix::zeros(dim, dim) }
    }

    /// `Σ X_p²` over the fixed basis.
    pub fn identity(dim: usize) -> Self {
        SymTensor { coeffs: RatMatrix::identity(dim) }
    }

    pub fn diagonal(entries: &[Rat]) -> Self {
        SymTensor { coeffs: RatMatrix::diagonal(entries) }
    }

    /// `Y²` for the vector `Y = Σ y_p X_p`.
    pub fn square(y: &[Rat]) -> Self {
        let n = y.len();
        let mut c = RatMatrix::zeros(n, n);
        for p in 0..n {
            for q in 0..n {
                c[(p, q)] = &y[p] * &y[q];
            }
        }
        SymTensor { coeffs: c }
    }

    /// `Σ_k Y_k²`.
    pub fn sum_of_squares(vectors: &[Vec<Rat>]) -> Result<Self> {
        let dim = vectors.first().map_or(0, Vec::len);
        vectors.iter().try_fold(SymTensor::zero(dim), |acc, y| {
            if y.len() != dim {
                return Err(Error::invalid("vectors of different lengths"));
            }
            acc.add(&SymTensor::square(y))
        })
    }

    pub fn dim(&self) -> usize {
        self.coeffs.rows()
    }

    pub fn coeffs(&self) -> &RatMatrix {
        &self.coeffs
    }

    pub fn get(&self, p: usize, q: usize) -> &Rat {
        &self.coeffs[(p, q)]
    }

    pub fn add(&self, other: &SymTensor) -> Result<SymTensor> {
        Ok(SymTensor { coeffs: self.coeffs.add(&other.coeffs)? })
    }

    pub fn scale(&self, c: &Rat) -> SymTensor {
        SymTensor { coeffs: self.coeffs.scale(c) }
    }

    pub fn is_positive_definite(&self) -> bool {
        is_positive_definite(self)
    }

    /// Least common denominator of the coefficients.
    pub fn common_denominator(&self) -> BigInt {
        let mut d = BigInt::one();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                d = d.lcm(self.coeffs[(i, j)].denom());
            }
        }
        d
    }

    /// A positive rational `c` with `S - c·Id` positive definite, i.e. a
    /// certified lower bound for the smallest eigenvalue of `S`. Found by
    /// dyadic bisection on exact definiteness tests.
    pub fn definite_lower_bound(&self) -> Result<Rat> {
        if !self.is_positive_definite() {
            return Err(Error::domain("tensor is not positive definite"));
        }
        let n = self.dim();
        let shifted_is_pd = |c: &Rat| {
            let mut m = self.coeffs.clone();
            for i in 0..n {
                m[(i, i)] -= c;
            }
            m.is_positive_definite()
        };
        let mut hi = (0..n).map(|i| self.coeffs[(i, i)].clone()).min().unwrap_or_else(Rat::one);
        let mut lo = Rat::zero();
        let two = Rat::from_integer(BigInt::from(2));
        for _ in 0..40 {
            let mid = (&lo + &hi) / &two;
            if shifted_is_pd(&mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        // The smallest eigenvalue may lie below hi / 2^40; keep halving.
        let mut c = if lo.is_zero() { hi / &two } else { lo };
        while !shifted_is_pd(&c) {
            c /= &two;
        }
        Ok(c)
    }
}

/// A left-invariant metric given by its Gram matrix in the fixed basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MetricSpec {
    gram: RatMatrix,
}

impl MetricSpec {
    pub fn new(gram: RatMatrix) -> Result<Self> {
        if !gram.is_symmetric() {
            return Err(Error::invalid("Gram matrix must be square and symmetric"));
        }
        if !gram.is_positive_definite() {
            return Err(Error::domain("Gram matrix is not positive definite"));
        }
        Ok(MetricSpec { gram })
    }

    pub fn gram(&self) -> &RatMatrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }
}

/// The tensor `Σ Y_i²` of a `g`-orthonormal basis, whose coefficient
/// matrix is `G⁻¹`.
pub fn metric_to_tensor(m: &MetricSpec) -> Result<SymTensor> {
    let inv = m.gram.inverse()?;
    SymTensor::new(inv)
}

/// Exact positive definiteness via leading principal minors.
pub fn is_positive_definite(s: &SymTensor) -> bool {
    s.coeffs.is_positive_definite()
}

/// Embeds a tensor on one factor into `Sym²(g)`, zero outside the factor block.
pub fn embed_factor_tensor(factor: Factor, s_f: &SymTensor, spec: &GroupSpec) -> Result<SymTensor> {
    let range = spec.factor_indices(factor)?;
    if s_f.dim() != range.len() {
        return Err(Error::invalid(format!(
            "factor tensor has size {}, factor block has size {}",
            s_f.dim(),
            range.len()
        )));
    }
    let mut c = RatMatrix::zeros(spec.dim(), spec.dim());
    for (a, p) in range.clone().enumerate() {
        for (b, q) in range.clone().enumerate() {
            c[(p, q)] = s_f.coeffs[(a, b)].clone();
        }
    }
    Ok(SymTensor { coeffs: c })
}

/// `coeff · X_p·X_q` with `Y·Z = ½(Y⊗Z + Z⊗Y)`.
pub fn symmetric_product(dim: usize, p: usize, q: usize, coeff: &Rat) -> Result<SymTensor> {
    if p >= dim || q >= dim {
        return Err(Error::invalid(format!("basis index out of range for dimension {dim}")));
    }
    let mut c = RatMatrix::zeros(dim, dim);
    if p == q {
        c[(p, p)] = coeff.clone();
    } else {
        let half = coeff / Rat::from_integer(BigInt::from(2));
        c[(p, q)] = half.clone();
        c[(q, p)] = half;
    }
    Ok(SymTensor { coeffs: c })
}

/// Negative leading minors certify indefiniteness quickly; exposed for
/// diagnostics.
pub fn first_nonpositive_minor(s: &SymTensor) -> Option<(usize, Rat)> {
    s.coeffs
        .leading_principal_minors()
        .into_iter()
        .enumerate()
        .find(|(_, m)| !m.is_positive())
        .map(|(i, m)| (i + 1, m))
}
