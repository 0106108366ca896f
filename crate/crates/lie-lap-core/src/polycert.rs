//! Characteristic polynomials of `D_V(s)`, resultants and the certificates
//! `a_{V,W}`, `b_V`, `c_V`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{GroupSpec, SymTensor};
use crate::charpoly::charpoly_gaussian;
use crate::error::{Error, Result};
use crate::irreps::{classify_type, dual_label, IrrepLabel, RepType};
use crate::operator::{build_dv, OperatorMatrix};
use crate::poly::{resultant_q, QPoly, ZPoly};
use crate::ratmat::Rat;

/// `p(X) = det(D - X·Id)`, leading coefficient `(-1)^dim`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly {
    poly: QPoly,
}

impl CharPoly {
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        CharPoly { poly: QPoly::new(coeffs) }
    }

    /// Coefficients from the constant term upwards.
    pub fn coeffs(&self) -> &[Rat] {
        self.poly.coeffs()
    }

    pub fn degree(&self) -> usize {
        self.poly.deg()
    }

    pub fn as_qpoly(&self) -> &QPoly {
        &self.poly
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.poly.eval(x)
    }

    pub fn derivative(&self) -> QPoly {
        self.poly.derivative()
    }

    /// Primitive integer polynomial with the same roots and positive leading coefficient.
    pub fn primitive(&self) -> ZPoly {
        self.poly.to_primitive().1.primitive()
    }

    /// Monic version `det(X·Id - D)`.
    pub fn monic(&self) -> QPoly {
        let lc = self.poly.lc();
        QPoly::new(self.poly.coeffs().iter().map(|c| c / &lc).collect())
    }
}

impl fmt::Display for CharPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly)
    }
}

/// Exact characteristic polynomial via the multimodular Hessenberg route
/// on the integer numerator `M = den·D`.
pub fn char_poly_exact(op: &OperatorMatrix) -> Result<CharPoly> {
    let n = op.dim();
    let (re, im) = op.numerator();
    let chi = charpoly_gaussian(n, re, im)?;
    let den = op.denominator();
    // det(D - X) = (-1)^n den^{-n} χ_M(den·X)
    let sign = if n.is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    let mut den_pow = BigInt::one();
    let mut coeffs = vec![Rat::zero(); n + 1];
    for k in (0..=n).rev() {
        // coefficient of X^k is sign · c_k · den^{k-n}
        coeffs[k] = BigRational::new(&sign * &chi.coeffs()[k], den_pow.clone());
        den_pow *= den;
    }
    Ok(CharPoly::from_coeffs(coeffs))
}

/// `p_V(s)` directly from a label and tensor.
pub fn char_poly_of(label: &IrrepLabel, s: &SymTensor, spec: &GroupSpec) -> Result<CharPoly> {
    char_poly_exact(&build_dv(label, s, spec)?)
}

/// Sylvester-convention resultant of two rational polynomials.
pub fn resultant(p: &QPoly, q: &QPoly) -> Result<Rat> {
    resultant_q(p, q)
}

/// `d_j` distinct roots of multiplicity exactly `j`, as `(j, d_j)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicityProfile {
    pub classes: Vec<(u32, usize)>,
}

impl MultiplicityProfile {
    pub fn degree(&self) -> usize {
        self.classes.iter().map(|&(j, d)| j as usize * d).sum()
    }

    pub fn is_simple(&self) -> bool {
        self.classes.iter().all(|&(j, _)| j == 1)
    }

    pub fn is_all_double(&self) -> bool {
        self.classes.iter().all(|&(j, _)| j == 2)
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.classes.iter().map(|c| c.0).max().unwrap_or(0)
    }

    /// Multiplicities as a sorted list with one entry per distinct root.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.classes.iter().flat_map(|&(j, d)| core::iter::repeat_n(j as usize, d)).collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Display for MultiplicityProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, (j, d)) in self.classes.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({j},{d})")?;
        }
        write!(f, "]")
    }
}

pub fn multiplicity_profile(p: &CharPoly) -> MultiplicityProfile {
    profile_of(&p.primitive())
}

pub fn profile_of(p: &ZPoly) -> MultiplicityProfile {
    let classes = p
        .squarefree_decomposition()
        .into_iter()
        .filter(|(_, f)| f.deg() > 0)
        .map(|(j, f)| (j, f.deg()))
        .collect();
    MultiplicityProfile { classes }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CertKind {
    /// `res(p_V, p_W)`: disjoint spectra.
    A,
    /// `res(p_V, p_V')`: simple spectrum.
    B,
    /// `res(p_V, p_V'')`: no multiplicity above two.
    C,
}

impl CertKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CertKind::A => "a",
            CertKind::B => "b",
            CertKind::C => "c",
        }
    }
}

impl fmt::Display for CertKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub kind: CertKind,
    pub labels: Vec<IrrepLabel>,
    pub tensor: SymTensor,
    pub value: Rat,
}

impl Certificate {
    /// `true` iff the value is nonzero.
    pub fn verdict(&self) -> bool {
        !self.value.is_zero()
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(", self.kind)?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write!(f, "{l}")?;
        }
        let v = if self.verdict() { "nonzero" } else { "zero" };
        write!(f, ") = {} [{v}]", crate::ratmat::format_rational(&self.value))
    }
}

pub fn cert_a(v: &IrrepLabel, w: &IrrepLabel, s: &SymTensor, spec: &GroupSpec) -> Result<Certificate> {
    if w == v || *w == dual_label(v) {
        return Err(Error::invalid(alloc::format!("cert_a needs inequivalent, non-dual labels; got {v} and {w}")));
    }
    let pv = char_poly_of(v, s, spec)?;
    let pw = char_poly_of(w, s, spec)?;
    Ok(cert_a_from(v, w, &pv, &pw, s))
}

/// `a_{V,W}` from already computed char polys.
pub fn cert_a_from(v: &IrrepLabel, w: &IrrepLabel, pv: &CharPoly, pw: &CharPoly, s: &SymTensor) -> Certificate {
    let value = resultant(pv.as_qpoly(), pw.as_qpoly()).expect("char polys are nonzero");
    Certificate { kind: CertKind::A, labels: vec![v.clone(), w.clone()], tensor: s.clone(), value }
}

pub fn cert_b(v: &IrrepLabel, s: &SymTensor, spec: &GroupSpec) -> Result<Certificate> {
    Ok(cert_b_from(v, &char_poly_of(v, s, spec)?, s))
}

pub fn cert_b_from(v: &IrrepLabel, p: &CharPoly, s: &SymTensor) -> Certificate {
    let value = resultant(p.as_qpoly(), &p.derivative()).expect("char poly is nonzero");
    Certificate { kind: CertKind::B, labels: vec![v.clone()], tensor: s.clone(), value }
}

pub fn cert_c(v: &IrrepLabel, s: &SymTensor, spec: &GroupSpec) -> Result<Certificate> {
    Ok(cert_c_from(v, &char_poly_of(v, s, spec)?, s))
}

pub fn cert_c_from(v: &IrrepLabel, p: &CharPoly, s: &SymTensor) -> Certificate {
    let value = resultant(p.as_qpoly(), &p.derivative().derivative()).expect("char poly is nonzero");
    Certificate { kind: CertKind::C, labels: vec![v.clone()], tensor: s.clone(), value }
}

/// The certificate appropriate for a single label: `c` for quaternionic, `b` otherwise.
pub fn cert_single_from(v: &IrrepLabel, p: &CharPoly, s: &SymTensor) -> Certificate {
    match classify_type(v) {
        RepType::Quaternionic => cert_c_from(v, p, s),
        RepType::Real | RepType::Complex => cert_b_from(v, p, s),
    }
}

/// Power sums `P_1..P_count` of the roots of a monic polynomial (Newton's identities).
pub fn power_sums(monic: &QPoly, count: usize) -> Vec<Rat> {
    let n = monic.deg();
    let a = monic.coeffs();
    // e_k = (-1)^k a_{n-k}
    let e: Vec<Rat> = (0..=n).map(|k| if k % 2 == 0 { a[n - k].clone() } else { -a[n - k].clone() }).collect();
    let mut p: Vec<Rat> = vec![Rat::from_integer(BigInt::from(n))];
    for k in 1..=count {
        let mut acc = Rat::zero();
        for i in 1..k.min(n + 1) {
            let term = &e[i] * &p[k - i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        if k <= n {
            let term = &e[k] * Rat::from_integer(BigInt::from(k));
            if k % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        p.push(acc);
    }
    p
}

/// Monic polynomial of degree `n` with the given power sums `P_0 = n, P_1, …, P_n`.
pub fn from_power_sums(p: &[Rat]) -> QPoly {
    let n = p.len() - 1;
    let mut e = vec![Rat::one()];
    for k in 1..=n {
        let mut acc = Rat::zero();
        for i in 1..=k {
            let term = &e[k - i] * &p[i];
            if i % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e.push(acc / Rat::from_integer(BigInt::from(k)));
    }
    let coeffs = (0..=n).map(|j| {
        let k = n - j;
        if k.is_multiple_of(2) {
            e[k].clone()
        } else {
            -e[k].clone()
        }
    });
    QPoly::new(coeffs.collect())
}

/// Char poly (in the `det(D - X)` convention) whose roots are `μ_i + ε·ν_j`.
pub fn kronecker_sum_charpoly(p1: &CharPoly, p2: &CharPoly, eps: &Rat) -> CharPoly {
    let (n1, n2) = (p1.degree(), p2.degree());
    let n = n1 * n2;
    let s1 = power_sums(&p1.monic(), n);
    let s2 = power_sums(&p2.monic(), n);
    let mut sums = vec![Rat::from_integer(BigInt::from(n))];
    let mut binom: Vec<BigInt> = vec![BigInt::one()];
    for k in 1..=n {
        let mut next = vec![BigInt::one(); k + 1];
        for t in 1..k {
            next[t] = &binom[t - 1] + &binom[t];
        }
        binom = next;
        let mut acc = Rat::zero();
        let mut eps_pow = Rat::one();
        // t runs downward so that eps_pow = ε^{k-t}
        for t in (0..=k).rev() {
            acc += Rat::from_integer(binom[t].clone()) * &s1[t] * &s2[k - t] * &eps_pow;
            eps_pow *= eps;
        }
        sums.push(acc);
    }
    let monic = from_power_sums(&sums);
    let coeffs = if n % 2 == 0 { monic.coeffs().to_vec() } else { monic.coeffs().iter().map(|c| -c).collect() };
    CharPoly::from_coeffs(coeffs)
}

/// Whether the exact spectra of two char polys share an eigenvalue.
pub fn spectra_intersect(p: &CharPoly, q: &CharPoly) -> bool {
    p.primitive().shares_root(&q.primitive())
}

/// Sign of a rational, used in reports.
pub fn sign_str(v: &Rat) -> &'static str {
    if v.is_zero() {
        "0"
    } else if v.is_negative() {
        "-"
    } else {
        "+"
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_group_spec, BasisElement};
    use crate::operator::casimir_tensor;
    use crate::ratmat::{rat, rat_int};

    fn su2() -> GroupSpec {
        build_group_spec(1, 0, vec![]).unwrap()
    }

    fn basis_square(spec: &GroupSpec, e: BasisElement) -> SymTensor {
        let mut y = vec![rat_int(0); spec.dim()];
        y[spec.index(e).unwrap()] = rat_int(1);
        SymTensor::square(&y)
    }

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| rat_int(x)).collect()
    }

    #[test]
    fn char_poly_examples() {
        let spec = su2();
        let h2 = basis_square(&spec, BasisElement::H(0));
        assert_eq!(char_poly_of(&IrrepLabel::su2(1), &h2, &spec).unwrap().coeffs(), ints(&[1, -2, 1]).as_slice());
        assert_eq!(char_poly_of(&IrrepLabel::su2(2), &h2, &spec).unwrap().coeffs(), ints(&[0, -16, 8, -1]).as_slice());
        let cas = casimir_tensor(&spec);
        for m in 0..=6u32 {
            let c = i64::from(m * (m + 2));
            let expect = ZPoly::from_i64(&[c, -1]).pow(m + 1);
            let p = char_poly_of(&IrrepLabel::su2(m), &cas, &spec).unwrap();
            assert_eq!(p.coeffs(), QPoly::from_zpoly(&expect).coeffs());
        }
    }

    #[test]
    fn rational_tensor_scaling() {
        let spec = su2();
        let s = basis_square(&spec, BasisElement::H(0)).scale(&rat(1, 3));
        let p = char_poly_of(&IrrepLabel::su2(1), &s, &spec).unwrap();
        // (1/3 - X)^2
        assert_eq!(p.coeffs(), &[rat(1, 9), rat(-2, 3), rat_int(1)]);
    }

    #[test]
    fn profiles() {
        let p = CharPoly::from_coeffs(QPoly::from_zpoly(&ZPoly::from_i64(&[-1, 1]).pow(2).mul(&ZPoly::from_i64(&[-2, 1]))).coeffs().to_vec());
        assert_eq!(multiplicity_profile(&p).classes, vec![(1, 1), (2, 1)]);
        let spec = su2();
        let h2 = basis_square(&spec, BasisElement::H(0));
        let p3 = char_poly_of(&IrrepLabel::su2(3), &h2, &spec).unwrap();
        assert_eq!(multiplicity_profile(&p3).classes, vec![(2, 2)]);
        let c2 = char_poly_of(&IrrepLabel::su2(2), &casimir_tensor(&spec), &spec).unwrap();
        assert_eq!(multiplicity_profile(&c2).classes, vec![(3, 1)]);
    }

    #[test]
    fn certificate_examples() {
        let spec = su2();
        let cas = casimir_tensor(&spec);
        let h2 = basis_square(&spec, BasisElement::H(0));
        let v = |m| IrrepLabel::su2(m);
        assert!(cert_a(&v(1), &v(2), &cas, &spec).unwrap().verdict());
        assert!(!cert_a(&v(1), &v(3), &h2, &spec).unwrap().verdict());
        assert!(cert_a(&v(1), &v(1), &h2, &spec).is_err());
        assert!(!cert_b(&v(2), &h2, &spec).unwrap().verdict());
        assert!(cert_b(&v(0), &h2, &spec).unwrap().verdict());
        assert!(cert_c(&v(1), &h2, &spec).unwrap().verdict());
        assert!(!cert_c(&v(3), &cas, &spec).unwrap().verdict());
        assert_eq!(cert_c(&v(1), &cas, &spec).unwrap().value, rat_int(4));

        let t1 = build_group_spec(0, 1, vec![]).unwrap();
        let y2 = basis_square(&t1, BasisElement::Torus(0));
        let l = |w| IrrepLabel::new(vec![], vec![w]);
        assert!(cert_a(&l(1), &l(2), &y2, &t1).unwrap().verdict());
        assert!(cert_a(&l(1), &l(-1), &y2, &t1).is_err());
    }

    #[test]
    fn newton_round_trip() {
        let f = QPoly::from_zpoly(&ZPoly::monic_roots_product(&[1, 1, -3, 7]));
        let ps = power_sums(&f, 4);
        assert_eq!(ps, ints(&[4, 6, 60, 2 - 27 + 343, 2 + 81 + 2401]));
        assert_eq!(from_power_sums(&ps), f);
    }

    #[test]
    fn kronecker_sum_of_small_polys() {
        // roots {1,2} and {10,20}, ε = 1/10 → {2,3,3,4}
        let p1 = CharPoly::from_coeffs(QPoly::from_zpoly(&ZPoly::monic_roots_product(&[1, 2])).coeffs().to_vec());
        let p2 = CharPoly::from_coeffs(QPoly::from_zpoly(&ZPoly::monic_roots_product(&[10, 20])).coeffs().to_vec());
        let k = kronecker_sum_charpoly(&p1, &p2, &rat(1, 10));
        let expect = QPoly::from_zpoly(&ZPoly::monic_roots_product(&[2, 3, 3, 4]));
        assert_eq!(k.as_qpoly(), &expect);
    }
}
