//! Named identity checks run by `lie-lap verify-paper`.

use lie_lap_core::algebra::{build_group_spec, metric_to_tensor, BasisElement, GroupSpec, MetricSpec, SymTensor};
use lie_lap_core::irreps::{
    classify_type, labels_up_to_level, quaternionic_structure, structure_sign, su2_generators, IrrepLabel, RepType,
};
use lie_lap_core::operator::{build_dv, casimir_tensor};
use lie_lap_core::polycert::{cert_c, char_poly_of, multiplicity_profile};
use lie_lap_core::poly::QPoly;
use lie_lap_core::ratmat::{Rat, RatMatrix};
use lie_lap_core::witness::{default_alpha_grid, default_pairs_epsilon, pairs_mixed_witness, pairs_pipeline, su2_even_b_witness};
use num_bigint::BigInt;
use num_complex::Complex;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::output::{rat_str, EvenJson, MixedJson, PipelineJson};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Casimir,
    #[value(name = "eigH", alias = "eigh")]
    #[serde(rename = "eigH", alias = "eigh")]
    EigH,
    QuaternionicDouble,
    Tridiag,
    PairsI,
    PairsIi,
    Torus,
    Types,
    All,
}

impl Check {
    pub const EACH: [Check; 8] = [
        Check::Casimir,
        Check::EigH,
        Check::QuaternionicDouble,
        Check::Tridiag,
        Check::PairsI,
        Check::PairsIi,
        Check::Torus,
        Check::Types,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Casimir => "casimir",
            Check::EigH => "eigH",
            Check::QuaternionicDouble => "quaternionic-double",
            Check::Tridiag => "tridiag",
            Check::PairsI => "pairs-i",
            Check::PairsIi => "pairs-ii",
            Check::Torus => "torus",
            Check::Types => "types",
            Check::All => "all",
        }
    }
}

/// Optional parameters narrowing a check to specific spins.
#[derive(Clone, Debug, Default)]
pub struct Params {
    pub m: Option<u32>,
    pub m_prime: Option<u32>,
    pub max_m: Option<u32>,
    pub eps: Option<Rat>,
    pub lambda: Vec<i64>,
}

#[derive(Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub details: Value,
}

pub fn run(check: Check, p: &Params) -> Result<Vec<CheckResult>, CliError> {
    if check == Check::All {
        return Check::EACH.iter().map(|&c| run_one(c, p)).collect();
    }
    Ok(vec![run_one(check, p)?])
}

fn run_one(check: Check, p: &Params) -> Result<CheckResult, CliError> {
    let (passed, details) = match check {
        Check::Casimir => casimir(p)?,
        Check::EigH => eig_h(p)?,
        Check::QuaternionicDouble => quaternionic_double(p)?,
        Check::Tridiag => tridiag(p)?,
        Check::PairsI => pairs_i(p)?,
        Check::PairsIi => pairs_ii(p)?,
        Check::Torus => torus()?,
        Check::Types => types(p)?,
        Check::All => unreachable!("expanded by run"),
    };
    Ok(CheckResult { name: check.name(), passed, details })
}

fn spins(p: &Params, default_max: u32, keep: impl Fn(u32) -> bool) -> Vec<u32> {
    match p.m {
        Some(m) => vec![m],
        None => (0..=p.max_m.unwrap_or(default_max)).filter(|&m| keep(m)).collect(),
    }
}

fn su2() -> GroupSpec {
    build_group_spec(1, 0, vec![]).expect("SU(2)")
}

fn h_squared(spec: &GroupSpec, j: usize) -> SymTensor {
    let mut y = vec![Rat::from_integer(BigInt::from(0)); spec.dim()];
    y[spec.index(BasisElement::H(j)).expect("index")] = Rat::from_integer(BigInt::from(1));
    SymTensor::square(&y)
}

fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// `D_{V_m}(H²+A²+B²) = m(m+2)·Id`, and additivity on `SU(2)²` for `dim ≤ 256`.
fn casimir(p: &Params) -> Result<(bool, Value), CliError> {
    let spec = su2();
    let cas = casimir_tensor(&spec);
    let mut failures = Vec::new();
    let ms = spins(p, 30, |_| true);
    for &m in &ms {
        let d = build_dv(&IrrepLabel::su2(m), &cas, &spec)?;
        if d.as_scalar() != Some(int(i64::from(m * (m + 2)))) {
            failures.push(format!("m={m}"));
        }
    }
    let spec2 = build_group_spec(2, 0, vec![])?;
    let cas2 = casimir_tensor(&spec2);
    let mut pairs = 0;
    for m in 0..=15u32 {
        for mp in 0..=15u32 {
            if (m + 1) * (mp + 1) > 256 || p.m.is_some_and(|x| x != m) {
                continue;
            }
            pairs += 1;
            let d = build_dv(&IrrepLabel::new(vec![m, mp], vec![]), &cas2, &spec2)?;
            if d.as_scalar() != Some(int(i64::from(m * (m + 2) + mp * (mp + 2)))) {
                failures.push(format!("(m,m')=({m},{mp})"));
            }
        }
    }
    Ok((failures.is_empty(), json!({"spins": ms, "product_pairs": pairs, "failures": failures})))
}

/// `ρ*(H) = diag(im, i(m-2), …, -im)` and `D(H²)` has char poly `Π((m-2ℓ)² - X)`.
fn eig_h(p: &Params) -> Result<(bool, Value), CliError> {
    let spec = su2();
    let h2 = h_squared(&spec, 0);
    let mut failures = Vec::new();
    let ms = spins(p, 30, |_| true);
    for &m in &ms {
        let [h, _, _] = su2_generators(m);
        let n = m as usize + 1;
        let diag_ok = (0..n).all(|i| {
            (0..n).all(|j| {
                let expect = if i == j { Complex::new(0, m as i64 - 2 * i as i64) } else { Complex::new(0, 0) };
                h.get(i, j) == expect
            })
        });
        let poly = char_poly_of(&IrrepLabel::su2(m), &h2, &spec)?;
        let expect = (0..=m as i64).fold(QPoly::new(vec![int(1)]), |acc, l| {
            let k = m as i64 - 2 * l;
            acc.mul(&QPoly::new(vec![int(k * k), int(-1)]))
        });
        if !diag_ok || poly.as_qpoly() != &expect {
            failures.push(m);
        }
    }
    Ok((failures.is_empty(), json!({"spins": ms, "failures": failures})))
}

/// Odd `m`: `D(H²)` has the double eigenvalues `m², (m-2)², …, 1` and `c_{V_m}(H²) ≠ 0`.
fn quaternionic_double(p: &Params) -> Result<(bool, Value), CliError> {
    let spec = su2();
    let h2 = h_squared(&spec, 0);
    let mut rows = Vec::new();
    let mut ok = true;
    for m in spins(p, 15, |m| m % 2 == 1) {
        let label = IrrepLabel::su2(m);
        let poly = char_poly_of(&label, &h2, &spec)?;
        let profile = multiplicity_profile(&poly);
        let expect = (0..=m as i64)
            .map(|l| m as i64 - 2 * l)
            .fold(QPoly::new(vec![int(1)]), |acc, k| acc.mul(&QPoly::new(vec![int(k * k), int(-1)])));
        let cert = cert_c(&label, &h2, &spec)?;
        let pass = m % 2 == 1 && poly.as_qpoly() == &expect && profile.is_all_double() && cert.verdict();
        ok &= pass;
        rows.push(json!({"m": m, "profile": profile.to_string(), "c": rat_str(&cert.value), "passed": pass}));
    }
    Ok((ok, Value::Array(rows)))
}

/// Even `m`: `b(H²) = 0`, the tridiagonal structure of `-(ρ*(A))²`, and a
/// scanned `ε` with `b(H² + εA²) ≠ 0`.
fn tridiag(p: &Params) -> Result<(bool, Value), CliError> {
    let mut rows = Vec::new();
    let mut ok = true;
    let ms = match p.m {
        Some(m) => vec![m],
        None => (2..=p.max_m.unwrap_or(12)).step_by(2).collect(),
    };
    for m in ms {
        let w = su2_even_b_witness(m)?;
        ok &= w.passed();
        rows.push(serde_json::to_value(EvenJson::from(&w)).expect("json"));
    }
    Ok((ok, Value::Array(rows)))
}

/// Mixed tensor `(H,0)·(0,Y)` on `V_m ⊗ V_λ`: simple spectrum `{kλ(Y)}`.
fn pairs_i(p: &Params) -> Result<(bool, Value), CliError> {
    let lambdas = if p.lambda.is_empty() { vec![1, 2, 3] } else { p.lambda.clone() };
    let mut rows = Vec::new();
    let mut ok = true;
    for m in spins(p, 9, |m| m % 2 == 1) {
        for &l in &lambdas {
            let w = pairs_mixed_witness(m, &[l], &[int(1)])?;
            ok &= w.passed();
            rows.push(serde_json::to_value(MixedJson::from(&w)).expect("json"));
        }
    }
    Ok((ok, Value::Array(rows)))
}

/// The involution pipeline on `V_m ⊗ V_{m′}`.
fn pairs_ii(p: &Params) -> Result<(bool, Value), CliError> {
    let pairs = match (p.m, p.m_prime) {
        (Some(m), Some(mp)) => vec![(m, mp)],
        (Some(m), None) | (None, Some(m)) => vec![(m, m)],
        (None, None) => vec![(1, 1), (1, 3), (3, 3), (3, 5)],
    };
    let mut rows = Vec::new();
    let mut ok = true;
    for (m, mp) in pairs {
        let eps = p.eps.clone().unwrap_or_else(|| default_pairs_epsilon(mp));
        let r = pairs_pipeline(m, mp, &eps, &default_alpha_grid())?;
        ok &= r.passed();
        rows.push(serde_json::to_value(PipelineJson::from(&r)).expect("json"));
    }
    Ok((ok, Value::Array(rows)))
}

/// Torus characters: `D_λ(G⁻¹) = λᵀ G⁻¹ λ` (times `4π²` in the `exp(2πiλ(x))` normalization).
fn torus() -> Result<(bool, Value), CliError> {
    let spec = build_group_spec(0, 2, vec![])?;
    let grams = [
        RatMatrix::diagonal(&[int(1), Rat::new(BigInt::from(7), BigInt::from(5))]),
        RatMatrix::from_rows(vec![
            vec![int(1), Rat::new(BigInt::from(1), BigInt::from(3))],
            vec![Rat::new(BigInt::from(1), BigInt::from(3)), Rat::new(BigInt::from(7), BigInt::from(5))],
        ])?,
    ];
    let mut ok = true;
    let mut checked = 0;
    for g in &grams {
        let s = metric_to_tensor(&MetricSpec::new(g.clone())?)?;
        for a in -3i64..=3 {
            for b in -3i64..=3 {
                let label = IrrepLabel::new(vec![], vec![a, b]);
                let d = build_dv(&label, &s, &spec)?;
                let (x, y) = (int(a), int(b));
                let expect = s.get(0, 0) * &x * &x + s.get(0, 1) * &x * &y * int(2) + s.get(1, 1) * &y * &y;
                ok &= d.as_scalar() == Some(expect);
                checked += 1;
            }
        }
    }
    Ok((ok, json!({"labels_checked": checked, "conversion": "multiply by 4*pi^2 for characters exp(2*pi*i<lambda,x>)"})))
}

/// Types from the spin parities agree with the structure map `J`; on
/// products, real ⇔ both factors real or both quaternionic.
fn types(p: &Params) -> Result<(bool, Value), CliError> {
    let level = p.max_m.unwrap_or(6);
    let mut ok = true;
    for m in 0..=level.max(10) {
        let j = quaternionic_structure(m);
        let gens = su2_generators(m);
        ok &= gens.iter().all(|g| j.commutes_with(g));
        let expect = if m % 2 == 0 { 1 } else { -1 };
        ok &= j.square_sign() == Some(expect);
    }
    let spec = GroupSpec::preset("su2xsu2xt1")?;
    let mut counted = 0;
    for label in labels_up_to_level(&spec, level) {
        counted += 1;
        let t = classify_type(&label);
        let expect = match structure_sign(&label) {
            None => RepType::Complex,
            Some(1) => RepType::Real,
            Some(_) => RepType::Quaternionic,
        };
        ok &= t == expect;
        if label.is_self_dual() {
            let single = |m: u32| classify_type(&IrrepLabel::su2(m));
            let (a, b) = (single(label.spins[0]), single(label.spins[1]));
            ok &= (t == RepType::Real) == (a == b);
        }
    }
    Ok((ok, json!({"level": level, "labels_checked": counted})))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_checks_pass() {
        let p = Params { m: Some(3), ..Params::default() };
        for c in [Check::Casimir, Check::EigH, Check::QuaternionicDouble, Check::PairsI, Check::Torus, Check::Types] {
            let r = run(c, &p).unwrap();
            assert!(r[0].passed, "{}", c.name());
        }
        let p = Params { m: Some(4), ..Params::default() };
        assert!(run(Check::Tridiag, &p).unwrap()[0].passed);
    }
}
