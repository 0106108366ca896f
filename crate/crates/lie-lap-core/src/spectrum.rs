//! Global Laplace spectrum below a cutoff, assembled from the per-irrep
//! operators, with real multiplicities and irreducibility verdicts.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive};

use crate::algebra::{GroupSpec, SymTensor};
use crate::error::{Error, Result};
use crate::exec::{Executor, Sequential};
use crate::irreps::{classify_type, descends_to_quotient, IrrepLabel, RepType};
use crate::polycert::{char_poly_of, CertKind};
use crate::poly::{isolate_roots, refine_root, RootInterval, ZPoly};
use crate::ratmat::Rat;

/// Every label (one per dual pair, descending to the quotient) whose
/// Casimir value is at most `cutoff / c`, `c` a certified lower bound for
/// the smallest eigenvalue of `S`. Sorted by Casimir value, then label.
pub fn enumerate_irreps(spec: &GroupSpec, s: &SymTensor, cutoff: &Rat) -> Result<Vec<IrrepLabel>> {
    if s.dim() != spec.dim() {
        return Err(Error::invalid("tensor size does not match the group"));
    }
    if cutoff.is_negative() {
        return Err(Error::invalid("cutoff must be nonnegative"));
    }
    let c = s.definite_lower_bound()?;
    let budget = (cutoff / &c).floor().to_integer().to_u64().ok_or_else(|| Error::invalid("cutoff too large"))?;
    Ok(labels_with_casimir_at_most(spec, budget))
}

/// All canonical descending labels with `Σ m_j(m_j+2) + |λ|² ≤ budget`.
pub fn labels_with_casimir_at_most(spec: &GroupSpec, budget: u64) -> Vec<IrrepLabel> {
    let k = spec.su2_factors();
    let n = spec.torus_rank();
    let mut out = Vec::new();
    let mut spins = Vec::with_capacity(k);
    let mut weight = Vec::with_capacity(n);
    enumerate_rec(spec, budget, k, n, &mut spins, &mut weight, &mut out);
    out.sort_by(|a, b| a.casimir().cmp(&b.casimir()).then_with(|| a.cmp(b)));
    out
}

fn enumerate_rec(
    spec: &GroupSpec,
    budget: u64,
    k: usize,
    n: usize,
    spins: &mut Vec<u32>,
    weight: &mut Vec<i64>,
    out: &mut Vec<IrrepLabel>,
) {
    if spins.len() < k {
        let mut m = 0u32;
        loop {
            let cost = u64::from(m) * (u64::from(m) + 2);
            if cost > budget {
                break;
            }
            spins.push(m);
            enumerate_rec(spec, budget - cost, k, n, spins, weight, out);
            spins.pop();
            m += 1;
        }
        return;
    }
    if weight.len() < n {
        let r = Roots::sqrt(&budget) as i64;
        for l in -r..=r {
            weight.push(l);
            enumerate_rec(spec, budget - (l * l) as u64, k, n, spins, weight, out);
            weight.pop();
        }
        return;
    }
    let label = IrrepLabel::new(spins.clone(), weight.clone());
    if label.canonical() == label && descends_to_quotient(&label, spec) {
        out.push(label);
    }
}

/// One label contributing to an eigenvalue, with the eigenvalue's
/// multiplicity inside `D_V(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contributor {
    pub label: IrrepLabel,
    pub rep_type: RepType,
    pub multiplicity: u32,
}

impl Contributor {
    /// `m·dim V`, doubled for a complex dual pair.
    pub fn real_multiplicity(&self) -> usize {
        let base = self.multiplicity as usize * self.label.dim();
        match self.rep_type {
            RepType::Complex => 2 * base,
            RepType::Real | RepType::Quaternionic => base,
        }
    }

    /// Conditions (b)/(c) violated by this contributor alone.
    fn violation(&self) -> Option<CertKind> {
        match (self.rep_type, self.multiplicity) {
            (RepType::Quaternionic, j) if j > 2 => Some(CertKind::C),
            (RepType::Real | RepType::Complex, j) if j > 1 => Some(CertKind::B),
            _ => None,
        }
    }
}

/// Exact description of an eigenvalue: a root of a square-free integer
/// polynomial, isolated in `(lo, hi]`; `value` is set when it is rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactEigenvalue {
    pub factor: ZPoly,
    pub interval: RootInterval,
    pub value: Option<Rat>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumEntry {
    pub eigenvalue: f64,
    pub exact: ExactEigenvalue,
    pub real_multiplicity: usize,
    pub contributors: Vec<Contributor>,
    pub irreducible: bool,
    /// Failed conditions among `a` (several labels), `b`, `c`.
    pub violations: Vec<CertKind>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumTable {
    pub group: GroupSpec,
    pub tensor: SymTensor,
    pub cutoff: Rat,
    pub labels: Vec<IrrepLabel>,
    pub entries: Vec<SpectrumEntry>,
}

impl SpectrumTable {
    pub fn eigenvalues(&self) -> Vec<f64> {
        self.entries.iter().map(|e| e.eigenvalue).collect()
    }

    pub fn multiplicities(&self) -> Vec<usize> {
        self.entries.iter().map(|e| e.real_multiplicity).collect()
    }
}

/// Converting the internal torus convention to the `exp(2πiλ(x))` one
/// multiplies torus contributions by `(2π)²`.
pub const TORUS_CONVENTION_NOTE: &str =
    "torus characters are exp(i<lambda,x>) internally; for exp(2*pi*i<lambda,x>) scale torus eigenvalue contributions by 4*pi^2";

pub fn assemble_spectrum(spec: &GroupSpec, s: &SymTensor, cutoff: &Rat) -> Result<SpectrumTable> {
    assemble_spectrum_with(&Sequential, spec, s, cutoff)
}

/// [`assemble_spectrum`] with per-label work distributed by `exec`.
pub fn assemble_spectrum_with<E: Executor>(
    exec: &E,
    spec: &GroupSpec,
    s: &SymTensor,
    cutoff: &Rat,
) -> Result<SpectrumTable> {
    let labels = enumerate_irreps(spec, s, cutoff)?;
    let per_label: Vec<Result<Vec<(u32, ZPoly)>>> = exec.map(&labels, |label| {
        let p = char_poly_of(label, s, spec)?;
        Ok(p.primitive().squarefree_decomposition())
    });

    // Pairwise coprime basis of all square-free factors, each tagged with
    // the (label, multiplicity) pairs whose char poly it divides.
    let mut basis: Vec<(ZPoly, Vec<(usize, u32)>)> = Vec::new();
    for (idx, factors) in per_label.into_iter().enumerate() {
        for (j, f) in factors? {
            insert_coprime(&mut basis, f, (idx, j));
        }
    }

    let lo = -Rat::one();
    let mut roots: Vec<(usize, RootInterval)> = Vec::new();
    for (b, (f, _)) in basis.iter().enumerate() {
        for iv in isolate_roots(f, &lo, cutoff) {
            roots.push((b, iv));
        }
    }
    separate_intervals(&basis, &mut roots);

    let width = Rat::new(BigInt::one(), BigInt::one() << 64u32);
    let mut entries = Vec::with_capacity(roots.len());
    for (b, iv) in roots {
        let (factor, tags) = &basis[b];
        let value = rational_root(factor);
        let (eigenvalue, interval) = match &value {
            Some(v) => (v.to_f64().unwrap_or(f64::NAN), RootInterval { lo: iv.lo.clone(), hi: v.clone() }),
            None => {
                let scale = Rat::one() + iv.hi.abs();
                let fine = refine_root(factor, &iv, &(&width * scale));
                (fine.midpoint().to_f64().unwrap_or(f64::NAN), fine)
            }
        };
        let mut contributors: Vec<Contributor> = tags
            .iter()
            .map(|&(idx, j)| Contributor {
                label: labels[idx].clone(),
                rep_type: classify_type(&labels[idx]),
                multiplicity: j,
            })
            .collect();
        contributors.sort_by(|a, b| a.label.cmp(&b.label));
        let real_multiplicity = contributors.iter().map(Contributor::real_multiplicity).sum();
        let mut violations = Vec::new();
        if contributors.len() > 1 {
            violations.push(CertKind::A);
        }
        for c in &contributors {
            if let Some(v) = c.violation() {
                if !violations.contains(&v) {
                    violations.push(v);
                }
            }
        }
        let irreducible = contributors.len() == 1
            && matches!(
                (contributors[0].rep_type, contributors[0].multiplicity),
                (RepType::Real | RepType::Complex, 1) | (RepType::Quaternionic, 2)
            );
        entries.push(SpectrumEntry {
            eigenvalue,
            exact: ExactEigenvalue { factor: factor.clone(), interval, value },
            real_multiplicity,
            contributors,
            irreducible,
            violations,
        });
    }
    Ok(SpectrumTable { group: spec.clone(), tensor: s.clone(), cutoff: cutoff.clone(), labels, entries })
}

fn insert_coprime(basis: &mut Vec<(ZPoly, Vec<(usize, u32)>)>, f: ZPoly, tag: (usize, u32)) {
    let mut rest = f;
    let mut added: Vec<(ZPoly, Vec<(usize, u32)>)> = Vec::new();
    for entry in basis.iter_mut() {
        if rest.is_constant() {
            break;
        }
        let g = rest.gcd(&entry.0);
        if g.is_constant() {
            continue;
        }
        let cofactor = entry.0.div_exact(&g).expect("gcd divides").primitive();
        rest = rest.div_exact(&g).expect("gcd divides").primitive();
        let mut tags = entry.1.clone();
        tags.push(tag);
        if cofactor.is_constant() {
            entry.1 = tags;
        } else {
            entry.0 = cofactor;
            added.push((g, tags));
        }
    }
    basis.extend(added);
    if !rest.is_constant() {
        basis.push((rest, vec![tag]));
    }
}

fn rational_root(f: &ZPoly) -> Option<Rat> {
    (f.deg() == 1).then(|| Rat::new(-f.coeffs()[0].clone(), f.coeffs()[1].clone()))
}

/// Sorts isolated roots by exact value, refining overlapping intervals of
/// distinct factors until they separate.
fn separate_intervals(basis: &[(ZPoly, Vec<(usize, u32)>)], roots: &mut [(usize, RootInterval)]) {
    loop {
        roots.sort_by(|a, b| a.1.lo.cmp(&b.1.lo).then_with(|| a.1.hi.cmp(&b.1.hi)));
        let mut changed = false;
        for i in 1..roots.len() {
            if roots[i].1.lo < roots[i - 1].1.hi {
                for k in [i - 1, i] {
                    let (b, iv) = &roots[k];
                    let half = iv.width() / Rat::from_integer(BigInt::from(2));
                    let refined = refine_root(&basis[*b].0, iv, &half);
                    roots[k].1 = refined;
                }
                changed = true;
            }
        }
        if !changed {
            return;
        }
    }
}

/// Overall verdict: all eigenvalues below the cutoff have irreducible real
/// eigenspaces.
#[derive(Clone, Debug, PartialEq)]
pub struct VerdictReport {
    pub irreducible: bool,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Violation {
    pub eigenvalue: f64,
    pub real_multiplicity: usize,
    pub conditions: Vec<CertKind>,
    pub labels: Vec<IrrepLabel>,
}

pub fn verdict_report(table: &SpectrumTable) -> VerdictReport {
    let violations: Vec<Violation> = table
        .entries
        .iter()
        .filter(|e| !e.irreducible)
        .map(|e| Violation {
            eigenvalue: e.eigenvalue,
            real_multiplicity: e.real_multiplicity,
            conditions: e.violations.clone(),
            labels: e.contributors.iter().map(|c| c.label.clone()).collect(),
        })
        .collect();
    VerdictReport { irreducible: violations.is_empty(), violations }
}

/// Exact comparison of two entries' eigenvalues.
pub fn compare_entries(a: &SpectrumEntry, b: &SpectrumEntry) -> Ordering {
    match (&a.exact.value, &b.exact.value) {
        (Some(x), Some(y)) => x.cmp(y),
        _ => a.eigenvalue.partial_cmp(&b.eigenvalue).unwrap_or(Ordering::Equal),
    }
}
