//! Constructive witnesses: tensors at which the certificates `a`, `b`, `c`
//! are all nonzero, and the explicit SU(2) constructions behind them.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{build_group_spec, BasisElement, GroupSpec, SymTensor};
use crate::error::{Error, Result};
use crate::exec::{Executor, Sequential};
use crate::irreps::{classify_type, labels_up_to_level, su2_generators, su2_x_action, IrrepLabel, RepType, SparseGauss};
use crate::operator::build_dv;
use crate::polycert::{
    cert_a_from, cert_b, cert_b_from, cert_c_from, char_poly_exact, char_poly_of, multiplicity_profile, resultant,
    CertKind, Certificate, CharPoly, MultiplicityProfile,
};
use crate::poly::QPoly;
use crate::ratmat::{Rat, RatMatrix};

/// Whether the second spectrum of [`epsilon_separation`] is simple or
/// consists of double eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeparationMode {
    Simple,
    Double,
}

/// Smallest positive element of `{(μ_i - μ_k)/(ν_l - ν_j)}` halved (or 1),
/// so that the sums `μ_i + ε ν_j` collide only where forced by repeated `ν`.
pub fn epsilon_separation(mu: &[Rat], nu: &[Rat], mode: SeparationMode) -> Result<Rat> {
    let mu_distinct = distinct(mu);
    if mu_distinct.len() != mu.len() {
        return Err(Error::invalid("first spectrum must be simple"));
    }
    let nu_distinct = distinct(nu);
    let required = match mode {
        SeparationMode::Simple => 1,
        SeparationMode::Double => 2,
    };
    if nu_distinct.len() * required != nu.len() || nu_distinct.iter().any(|v| count(nu, v) != required) {
        return Err(Error::invalid(match mode {
            SeparationMode::Simple => "second spectrum must be simple",
            SeparationMode::Double => "second spectrum must consist of double eigenvalues",
        }));
    }
    let mut best: Option<Rat> = None;
    for a in &mu_distinct {
        for b in &mu_distinct {
            for c in &nu_distinct {
                for d in &nu_distinct {
                    if c == d {
                        continue;
                    }
                    let f = (a - b) / (c - d);
                    if f.is_positive() && best.as_ref().is_none_or(|x| &f < x) {
                        best = Some(f);
                    }
                }
            }
        }
    }
    let eps = best.map_or_else(Rat::one, |f| f / Rat::from_integer(BigInt::from(2)));
    // Recheck: every sum has exactly the multiplicity forced by ν.
    let eps_ref = &eps;
    let sums: Vec<Rat> = mu.iter().flat_map(|a| nu.iter().map(move |c| a + eps_ref * c)).collect();
    if sums.iter().any(|v| count(&sums, v) != required) {
        return Err(Error::inconsistent("separation produced a collision"));
    }
    Ok(eps)
}

fn distinct(v: &[Rat]) -> Vec<Rat> {
    let mut d = v.to_vec();
    d.sort();
    d.dedup();
    d
}

fn count(v: &[Rat], x: &Rat) -> usize {
    v.iter().filter(|y| *y == x).count()
}

fn su2_spec() -> GroupSpec {
    build_group_spec(1, 0, vec![]).expect("SU(2)")
}

fn basis_vector(spec: &GroupSpec, terms: &[(BasisElement, Rat)]) -> Result<Vec<Rat>> {
    let mut y = vec![Rat::zero(); spec.dim()];
    for (e, c) in terms {
        y[spec.index(*e)?] += c;
    }
    Ok(y)
}

/// Outcome of [`su2_even_b_witness`].
#[derive(Clone, Debug)]
pub struct EvenWitness {
    pub m: u32,
    /// `b_{V_m}(H²)`, expected zero.
    pub b_at_h2: Certificate,
    /// `-(ρ*(A))²` maps even-index monomials to even ones and odd to odd.
    pub parity_split: bool,
    /// Subdiagonal of `-(ρ*(A))²` on the even-index block.
    pub subdiagonal_even: Vec<Rat>,
    /// Subdiagonal on the odd-index block.
    pub subdiagonal_odd: Vec<Rat>,
    /// `res` of the char polys of `D(H²)` on the two parity blocks.
    pub parity_blocks_disjoint: Rat,
    /// The ε values tried, in order.
    pub scanned: Vec<Rat>,
    pub eps: Rat,
    pub certificate: Certificate,
}

impl EvenWitness {
    pub fn passed(&self) -> bool {
        let m = self.m as i64;
        let expected: Vec<Rat> = (0..self.subdiagonal_even.len() as i64)
            .map(|i| Rat::from_integer(BigInt::from((m - 2 * i) * (m - 2 * i - 1))))
            .collect();
        !self.b_at_h2.verdict()
            && self.parity_split
            && self.subdiagonal_even == expected
            && self.subdiagonal_even.iter().chain(&self.subdiagonal_odd).all(|v| !v.is_zero())
            && !self.parity_blocks_disjoint.is_zero()
            && self.certificate.verdict()
    }
}

/// The first primes, used as denominators of the ε scan.
fn small_primes(count: usize) -> Vec<i64> {
    let mut out = Vec::with_capacity(count);
    let mut n = 2i64;
    while out.len() < count {
        if (2..n).take_while(|d| d * d <= n).all(|d| n % d != 0) {
            out.push(n);
        }
        n += 1;
    }
    out
}

/// For even `m ≥ 2`: `b_{V_m}(H²) = 0`, and some `ε ∈ {1/2, 1/3, 1/5, …}`
/// gives `b_{V_m}(H² + εA²) ≠ 0`.
pub fn su2_even_b_witness(m: u32) -> Result<EvenWitness> {
    if m < 2 || m % 2 == 1 {
        return Err(Error::invalid(format!("even spin m >= 2 required, got {m}")));
    }
    let spec = su2_spec();
    let label = IrrepLabel::su2(m);
    let h = basis_vector(&spec, &[(BasisElement::H(0), Rat::one())])?;
    let a = basis_vector(&spec, &[(BasisElement::A(0), Rat::one())])?;
    let h2 = SymTensor::square(&h);
    let a2 = SymTensor::square(&a);
    let b_at_h2 = cert_b(&label, &h2, &spec)?;

    let da = build_dv(&label, &a2, &spec)?;
    let n = da.dim();
    let mut parity_split = true;
    for i in 0..n {
        for j in 0..n {
            let e = da.entry(i, j);
            if (i + j) % 2 == 1 && !(e.re.is_zero() && e.im.is_zero()) {
                parity_split = false;
            }
            if (i as i64 - j as i64).abs() > 2 && !(e.re.is_zero() && e.im.is_zero()) {
                parity_split = false;
            }
        }
    }
    let sub = |start: usize| -> Vec<Rat> { (start..n.saturating_sub(2)).step_by(2).map(|l| da.entry(l + 2, l).re).collect() };
    let subdiagonal_even = sub(0);
    let subdiagonal_odd = sub(1);

    let dh = build_dv(&label, &h2, &spec)?;
    let block = |start: usize| -> Result<CharPoly> {
        let idx: Vec<usize> = (start..n).step_by(2).collect();
        let basis: Vec<Vec<Rat>> = idx
            .iter()
            .map(|&i| (0..n).map(|j| if j == i { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        char_poly_exact(&dh.restrict(&basis, &idx)?)
    };
    let parity_blocks_disjoint = resultant(block(0)?.as_qpoly(), block(1)?.as_qpoly())?;

    let mut scanned = Vec::new();
    for p in small_primes(64) {
        let eps = Rat::new(BigInt::one(), BigInt::from(p));
        scanned.push(eps.clone());
        let s = h2.add(&a2.scale(&eps))?;
        let certificate = cert_b(&label, &s, &spec)?;
        if certificate.verdict() {
            return Ok(EvenWitness {
                m,
                b_at_h2,
                parity_split,
                subdiagonal_even,
                subdiagonal_odd,
                parity_blocks_disjoint,
                scanned,
                eps,
                certificate,
            });
        }
    }
    Err(Error::exhausted(format!("no ε in the scan gives a nonzero b-certificate for m = {m}")))
}

/// Outcome of [`pairs_mixed_witness`].
#[derive(Clone, Debug)]
pub struct MixedWitness {
    pub label: IrrepLabel,
    /// `λ(Y)`.
    pub pairing: Rat,
    /// Exact spectrum of `D` on the mixed tensor `(H,0)·(0,Y)`, decreasing.
    pub spectrum: Vec<Rat>,
    pub profile: MultiplicityProfile,
    pub certificate: Certificate,
}

impl MixedWitness {
    pub fn passed(&self) -> bool {
        self.profile.is_simple() && self.certificate.verdict()
    }
}

/// On `SU(2) × T^n`, label `(m; λ)` and tensor `(H,0)·(0,Y)`:
/// `D = -ρ*(H) ⊗ iλ(Y)` has the simple spectrum `{kλ(Y) : k = m, m-2, …, -m}`.
pub fn pairs_mixed_witness(m: u32, weight: &[i64], y: &[Rat]) -> Result<MixedWitness> {
    if weight.len() != y.len() || weight.is_empty() {
        return Err(Error::invalid("weight and torus direction must have the same positive length"));
    }
    let pairing: Rat = weight.iter().zip(y).map(|(&l, c)| c * Rat::from_integer(BigInt::from(l))).sum();
    if pairing.is_zero() {
        return Err(Error::invalid("λ(Y) must be nonzero"));
    }
    if m.is_multiple_of(2) {
        return Err(Error::invalid(format!("odd spin required, got {m}")));
    }
    let spec = build_group_spec(1, weight.len(), vec![])?;
    let label = IrrepLabel::new(vec![m], weight.to_vec());
    // s = H·Y with Y·Z = ½(Y⊗Z + Z⊗Y)
    let h = spec.index(BasisElement::H(0))?;
    let mut c = RatMatrix::zeros(spec.dim(), spec.dim());
    for (i, yi) in y.iter().enumerate() {
        let t = spec.index(BasisElement::Torus(i))?;
        let half = yi / Rat::from_integer(BigInt::from(2));
        c[(h, t)] = half.clone();
        c[(t, h)] = half;
    }
    let s = SymTensor::new(c)?;
    let p = char_poly_of(&label, &s, &spec)?;
    let spectrum: Vec<Rat> =
        (0..=m as i64).map(|l| &pairing * Rat::from_integer(BigInt::from(m as i64 - 2 * l))).collect();
    let expected = spectrum.iter().fold(QPoly::new(vec![Rat::one()]), |acc, r| acc.mul(&QPoly::new(vec![r.clone(), -Rat::one()])));
    if p.as_qpoly() != &expected {
        return Err(Error::inconsistent(format!("mixed-tensor spectrum differs from kλ(Y): got {p}")));
    }
    let profile = multiplicity_profile(&p);
    let certificate = cert_b_from(&label, &p, &s);
    Ok(MixedWitness { label, pairing, spectrum, profile, certificate })
}

/// Default `α` grid `{j/64 : 1 ≤ j ≤ 63}`.
pub fn default_alpha_grid() -> Vec<Rat> {
    (1..64).map(|j| Rat::new(BigInt::from(j), BigInt::from(64))).collect()
}

/// Default `ε = 1/(2m′)`.
pub fn default_pairs_epsilon(m_prime: u32) -> Rat {
    Rat::new(BigInt::one(), BigInt::from(2 * m_prime))
}

/// Stage results of [`pairs_pipeline`].
#[derive(Clone, Debug)]
pub struct PairsPipelineReport {
    pub m: u32,
    pub m_prime: u32,
    pub eps: Rat,
    pub dim_plus: usize,
    pub dim_minus: usize,
    /// `T² = Id`.
    pub involution: bool,
    /// `Tφ + φT = 0`.
    pub anticommutes_phi: bool,
    /// `Tψ - ψT = 0`.
    pub commutes_psi: bool,
    /// `T` has integer entries, hence preserves the real span.
    pub preserves_real_span: bool,
    /// Exact spectrum of `D(s_H)` is `{(k ± εk′)²}`, every value double.
    pub s_h_spectrum_double: bool,
    /// `D_0` restricted to `W⁺`, `W⁻` has simple spectrum.
    pub d0_simple: (bool, bool),
    /// `res` of the char polys of `D_1` on `W⁺` and `W⁻`.
    pub d1_disjoint: Rat,
    pub alphas_tried: usize,
    pub alpha: Option<Rat>,
    pub profile: Option<MultiplicityProfile>,
    pub certificate: Option<Certificate>,
}

impl PairsPipelineReport {
    pub fn structural(&self) -> bool {
        self.involution && self.anticommutes_phi && self.commutes_psi && self.preserves_real_span
    }

    pub fn passed(&self) -> bool {
        self.structural()
            && self.s_h_spectrum_double
            && self.d0_simple.0
            && self.d0_simple.1
            && !self.d1_disjoint.is_zero()
            && self.dim_plus + self.dim_minus == (self.m as usize + 1) * (self.m_prime as usize + 1)
            && self.certificate.as_ref().is_some_and(|c| c.verdict())
            && self.profile.as_ref().is_some_and(|p| p.is_simple())
    }
}

/// On `V_m ⊗ V_{m′}` over `SU(2) × SU(2)`, both spins odd: splits by the
/// involution `T = ρ(x) ⊗ ρ(x)` and scans `D_α = D((1-α)s_H + α s_B)` for
/// a simple spectrum.
pub fn pairs_pipeline(m: u32, m_prime: u32, eps: &Rat, alpha_grid: &[Rat]) -> Result<PairsPipelineReport> {
    if m.is_multiple_of(2) || m_prime.is_multiple_of(2) {
        return Err(Error::invalid("both spins must be odd"));
    }
    if !eps.is_positive() || eps * Rat::from_integer(BigInt::from(m_prime)) >= Rat::one() {
        return Err(Error::invalid(format!("ε must lie in (0, 1/{m_prime})")));
    }
    // Eigenvalues of φ are i(k + εk′); all must be distinct.
    let ks = |m: u32| -> Vec<i64> { (0..=m as i64).map(|l| m as i64 - 2 * l).collect() };
    let phi_vals: Vec<Rat> = ks(m)
        .iter()
        .flat_map(|&k| ks(m_prime).into_iter().map(move |kp| (k, kp)))
        .map(|(k, kp)| Rat::from_integer(BigInt::from(k)) + eps * Rat::from_integer(BigInt::from(kp)))
        .collect();
    if distinct(&phi_vals).len() != phi_vals.len() {
        return Err(Error::invalid("ε produces a collision among k + εk′"));
    }

    let spec = build_group_spec(2, 0, vec![])?;
    let label = IrrepLabel::new(vec![m, m_prime], vec![]);
    let [h1, _, b1] = su2_generators(m);
    let [h2, _, b2] = su2_generators(m_prime);
    let id1 = SparseGauss::identity(m as usize + 1);
    let id2 = SparseGauss::identity(m_prime as usize + 1);
    let t = su2_x_action(m).kron(&su2_x_action(m_prime));
    let n = t.dim();
    let involution = t.mul(&t) == SparseGauss::identity(n);
    // φ and ψ are linear in ε, so checking each tensor factor separately
    // covers every ε.
    let anticommutes_phi = [h1.kron(&id2), id1.kron(&h2)].iter().all(|g| t.anticommutator(g).is_zero());
    let commutes_psi = [b1.kron(&id2), id1.kron(&b2)].iter().all(|g| t.commutator(g).is_zero());
    let preserves_real_span = t.is_real();

    let y_h = basis_vector(&spec, &[(BasisElement::H(0), Rat::one()), (BasisElement::H(1), eps.clone())])?;
    let y_b = basis_vector(&spec, &[(BasisElement::B(0), Rat::one()), (BasisElement::B(1), eps.clone())])?;
    let s_h = SymTensor::square(&y_h);
    let s_b = SymTensor::square(&y_b);

    let d0 = build_dv(&label, &s_h, &spec)?;
    let p0 = char_poly_exact(&d0)?;
    let mut squares: Vec<Rat> = phi_vals.iter().map(|v| v * v).collect();
    squares.sort();
    let expected = squares.iter().fold(QPoly::new(vec![Rat::one()]), |acc, r| acc.mul(&QPoly::new(vec![r.clone(), -Rat::one()])));
    let s_h_spectrum_double = p0.as_qpoly() == &expected && multiplicity_profile(&p0).is_all_double();

    // W± = ker(T ∓ Id)
    let dense_t = RatMatrix::from_rows(
        t.to_dense().iter().map(|row| row.iter().map(|z| Rat::from_integer(BigInt::from(z.re))).collect()).collect(),
    )?;
    let shifted = |sign: i64| dense_t.add(&RatMatrix::identity(n).scale(&Rat::from_integer(BigInt::from(-sign))));
    let w_plus = shifted(1)?.nullspace();
    let w_minus = shifted(-1)?.nullspace();

    let d1 = build_dv(&label, &s_b, &spec)?;
    let restricted_poly = |d: &crate::operator::OperatorMatrix, w: &crate::ratmat::Nullspace| -> Result<CharPoly> {
        char_poly_exact(&d.restrict(&w.basis, &w.free)?)
    };
    let d0_simple = (
        multiplicity_profile(&restricted_poly(&d0, &w_plus)?).is_simple(),
        multiplicity_profile(&restricted_poly(&d0, &w_minus)?).is_simple(),
    );
    let d1_disjoint =
        resultant(restricted_poly(&d1, &w_plus)?.as_qpoly(), restricted_poly(&d1, &w_minus)?.as_qpoly())?;

    let mut report = PairsPipelineReport {
        m,
        m_prime,
        eps: eps.clone(),
        dim_plus: w_plus.basis.len(),
        dim_minus: w_minus.basis.len(),
        involution,
        anticommutes_phi,
        commutes_psi,
        preserves_real_span,
        s_h_spectrum_double,
        d0_simple,
        d1_disjoint,
        alphas_tried: 0,
        alpha: None,
        profile: None,
        certificate: None,
    };
    for alpha in alpha_grid {
        report.alphas_tried += 1;
        let s = s_h.scale(&(Rat::one() - alpha)).add(&s_b.scale(alpha))?;
        let p = char_poly_of(&label, &s, &spec)?;
        let profile = multiplicity_profile(&p);
        if profile.is_simple() {
            let cert = cert_b_from(&label, &p, &s);
            if cert.verdict() {
                report.alpha = Some(alpha.clone());
                report.profile = Some(profile);
                report.certificate = Some(cert);
                break;
            }
        }
    }
    Ok(report)
}

/// A tensor with all certificates nonzero up to a level.
#[derive(Clone, Debug)]
pub struct WitnessReport {
    pub group: GroupSpec,
    pub tensor: SymTensor,
    /// Labels certified: every spin and every `|λ_i|` at most `level`.
    pub level: u32,
    pub labels: Vec<IrrepLabel>,
    pub certificates: Vec<Certificate>,
    pub trials: u64,
    pub seed: u64,
}

impl WitnessReport {
    pub fn verdict(&self) -> bool {
        self.certificates.iter().all(Certificate::verdict)
    }
}

/// Bound on the random integer entries of `Q` in `S = I + Q/d`.
pub const SAMPLE_RANGE: i64 = 1000;

/// The tensor sampled in trial `trial` from `seed`: `I + Q/d` with `Q`
/// symmetric, entries in `[-SAMPLE_RANGE, SAMPLE_RANGE]`, and `d` twice the
/// largest absolute row sum of `Q` plus one, so `S` is positive definite.
pub fn sample_tensor(dim: usize, seed: u64, trial: u64) -> SymTensor {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    let mut q = vec![vec![0i64; dim]; dim];
    for i in 0..dim {
        for j in i..dim {
            let v = rng.gen_range(-SAMPLE_RANGE..=SAMPLE_RANGE);
            q[i][j] = v;
            q[j][i] = v;
        }
    }
    let row_max = q.iter().map(|r| r.iter().map(|v| v.abs()).sum::<i64>()).max().unwrap_or(0);
    let d = Rat::from_integer(BigInt::from(2 * row_max + 1));
    let mut c = RatMatrix::identity(dim);
    for i in 0..dim {
        for j in 0..dim {
            c[(i, j)] += Rat::from_integer(BigInt::from(q[i][j])) / &d;
        }
    }
    SymTensor::new(c).expect("symmetric by construction")
}

/// All certificates for `s` on `labels`: `a` on every pair, `b` on
/// real/complex labels, `c` on quaternionic ones.
pub fn certify_labels<E: Executor>(
    exec: &E,
    labels: &[IrrepLabel],
    s: &SymTensor,
    spec: &GroupSpec,
) -> Result<Vec<Certificate>> {
    let polys: Vec<CharPoly> = exec.map(labels, |l| char_poly_of(l, s, spec)).into_iter().collect::<Result<_>>()?;
    let mut singles: Vec<Certificate> = labels
        .iter()
        .zip(&polys)
        .map(|(l, p)| match classify_type(l) {
            RepType::Quaternionic => cert_c_from(l, p, s),
            RepType::Real | RepType::Complex => cert_b_from(l, p, s),
        })
        .collect();
    let pairs: Vec<(usize, usize)> =
        (0..labels.len()).flat_map(|i| (i + 1..labels.len()).map(move |j| (i, j))).collect();
    let pair_certs = exec.map(&pairs, |&(i, j)| cert_a_from(&labels[i], &labels[j], &polys[i], &polys[j], s));
    singles.extend(pair_certs);
    Ok(singles)
}

pub fn witness_search(spec: &GroupSpec, level: u32, trials: u64, seed: u64) -> Result<WitnessReport> {
    witness_search_with(&Sequential, spec, level, trials, seed)
}

/// [`witness_search`] with certificates distributed by `exec`.
pub fn witness_search_with<E: Executor>(
    exec: &E,
    spec: &GroupSpec,
    level: u32,
    trials: u64,
    seed: u64,
) -> Result<WitnessReport> {
    if trials == 0 {
        return Err(Error::invalid("at least one trial is required"));
    }
    let labels = labels_up_to_level(spec, level);
    let total = labels.len() + labels.len() * labels.len().saturating_sub(1) / 2;
    let mut best = 0usize;
    for trial in 0..trials {
        let s = sample_tensor(spec.dim(), seed, trial);
        let certificates = certify_labels(exec, &labels, &s, spec)?;
        let good = certificates.iter().filter(|c| c.verdict()).count();
        if good == certificates.len() {
            return Ok(WitnessReport {
                group: spec.clone(),
                tensor: s,
                level,
                labels,
                certificates,
                trials: trial + 1,
                seed,
            });
        }
        best = best.max(good);
    }
    Err(Error::exhausted(format!(
        "{trials} trials exhausted; best tensor certified {best} of {total} conditions"
    )))
}

/// Counts of certificates per kind, for summaries.
pub fn certificate_counts(certs: &[Certificate]) -> [(CertKind, usize, usize); 3] {
    let mut out = [(CertKind::A, 0, 0), (CertKind::B, 0, 0), (CertKind::C, 0, 0)];
    for c in certs {
        let slot = &mut out[c.kind as usize];
        slot.1 += 1;
        if c.verdict() {
            slot.2 += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratmat::{rat, rat_int};

    fn r(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn separation_examples() {
        assert_eq!(epsilon_separation(&r(&[1, 2]), &r(&[10, 20]), SeparationMode::Simple).unwrap(), rat(1, 20));
        assert_eq!(epsilon_separation(&r(&[0]), &r(&[1, 2]), SeparationMode::Simple).unwrap(), rat_int(1));
        let eps = epsilon_separation(&r(&[1, 3]), &r(&[5, 5, 9, 9]), SeparationMode::Double).unwrap();
        assert_eq!(eps, rat(1, 4));
        assert!(epsilon_separation(&r(&[1, 1]), &r(&[1, 2]), SeparationMode::Simple).is_err());
        assert!(epsilon_separation(&r(&[1]), &r(&[1, 1, 2]), SeparationMode::Double).is_err());
    }

    #[test]
    fn even_witness_small() {
        let w = su2_even_b_witness(2).unwrap();
        assert!(w.passed());
        let w = su2_even_b_witness(4).unwrap();
        assert_eq!(w.subdiagonal_even, r(&[12, 2]));
        assert!(w.passed());
        assert!(su2_even_b_witness(3).is_err());
    }

    #[test]
    fn mixed_examples() {
        let w = pairs_mixed_witness(1, &[1], &[rat_int(1)]).unwrap();
        assert_eq!(w.spectrum, r(&[1, -1]));
        assert!(w.passed());
        let w = pairs_mixed_witness(3, &[2], &[rat_int(1)]).unwrap();
        assert_eq!(w.spectrum, r(&[6, 2, -2, -6]));
        assert!(pairs_mixed_witness(1, &[0], &[rat_int(1)]).is_err());
    }

    #[test]
    fn pipeline_one_one() {
        let rep = pairs_pipeline(1, 1, &rat(1, 2), &default_alpha_grid()).unwrap();
        assert!(rep.structural());
        assert!(rep.s_h_spectrum_double);
        assert_eq!((rep.dim_plus, rep.dim_minus), (2, 2));
        assert!(rep.passed(), "{rep:?}");
        assert!(pairs_pipeline(1, 1, &rat(1, 1), &default_alpha_grid()).is_err());
    }

    #[test]
    fn pipeline_one_three() {
        let rep = pairs_pipeline(1, 3, &rat(1, 4), &default_alpha_grid()).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.profile.unwrap().classes, vec![(1, 8)]);
    }

    #[test]
    fn sampling_is_reproducible_and_definite() {
        let a = sample_tensor(6, 7, 3);
        assert_eq!(a, sample_tensor(6, 7, 3));
        assert_ne!(a, sample_tensor(6, 7, 4));
        assert!(a.is_positive_definite());
    }

    #[test]
    fn su2_search() {
        let spec = su2_spec();
        let rep = witness_search(&spec, 4, 5, 1).unwrap();
        assert!(rep.verdict());
        assert_eq!(rep.labels.len(), 5);
        assert_eq!(rep.certificates.len(), 5 + 10);
        let cas = certify_labels(&Sequential, &rep.labels, &SymTensor::identity(3), &spec).unwrap();
        assert!(cas.iter().any(|c| c.kind == CertKind::B && !c.verdict()));
    }
}
