//! JSON, CSV and plain-text renderings of tables, certificates and reports.
//!
//! Rationals are written as `"p/q"` strings; floating approximations are
//! rounded to 10 decimals so that identical runs give identical bytes.

use std::fmt::Write as _;
use std::io::Write;

use lie_lap_core::algebra::{GroupSpec, SymTensor};
use lie_lap_core::polycert::Certificate;
use lie_lap_core::ratmat::{format_rational, Rat};
use lie_lap_core::spectrum::{verdict_report, SpectrumEntry, SpectrumTable, TORUS_CONVENTION_NOTE};
use lie_lap_core::witness::{EvenWitness, MixedWitness, PairsPipelineReport, WitnessReport};
use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

pub fn round(x: f64) -> f64 {
    let r = (x * 1e10).round() / 1e10;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn rat_str(r: &Rat) -> String {
    format_rational(r)
}

pub fn tensor_rows(s: &SymTensor) -> Vec<Vec<String>> {
    s.coeffs().to_rows().iter().map(|r| r.iter().map(rat_str).collect()).collect()
}

/// First 16 hex digits of the SHA-256 of the tensor entries.
pub fn tensor_hash(s: &SymTensor) -> String {
    let mut h = Sha256::new();
    for row in tensor_rows(s) {
        h.update(row.join(",").as_bytes());
        h.update(b";");
    }
    h.finalize().iter().take(8).fold(String::new(), |mut acc, b| {
        let _ = write!(acc, "{b:02x}");
        acc
    })
}

#[derive(Serialize)]
pub struct CentralJson {
    pub signs: Vec<i8>,
    pub torus: Vec<String>,
}

#[derive(Serialize)]
pub struct GroupJson {
    pub name: String,
    pub description: String,
    pub su2_factors: usize,
    pub torus_rank: usize,
    pub central: Vec<CentralJson>,
}

impl From<&GroupSpec> for GroupJson {
    fn from(g: &GroupSpec) -> Self {
        GroupJson {
            name: g.name().to_string(),
            description: g.describe(),
            su2_factors: g.su2_factors(),
            torus_rank: g.torus_rank(),
            central: g
                .central_generators()
                .iter()
                .map(|c| CentralJson { signs: c.signs().to_vec(), torus: c.torus_part().iter().map(rat_str).collect() })
                .collect(),
        }
    }
}

#[derive(Serialize)]
pub struct CertificateJson {
    pub kind: String,
    pub labels: Vec<String>,
    pub tensor_hash: String,
    pub value: String,
    pub verdict: &'static str,
}

impl From<&Certificate> for CertificateJson {
    fn from(c: &Certificate) -> Self {
        CertificateJson {
            kind: c.kind.to_string(),
            labels: c.labels.iter().map(ToString::to_string).collect(),
            tensor_hash: tensor_hash(&c.tensor),
            value: rat_str(&c.value),
            verdict: if c.verdict() { "nonzero" } else { "zero" },
        }
    }
}

#[derive(Serialize)]
pub struct ContributorJson {
    pub label: String,
    #[serde(rename = "type")]
    pub rep_type: &'static str,
    pub multiplicity: u32,
}

#[derive(Serialize)]
pub struct EntryJson {
    pub eigenvalue_approx: f64,
    pub exact_factor: String,
    pub exact_value: Option<String>,
    pub interval: [String; 2],
    pub real_multiplicity: usize,
    pub contributors: Vec<ContributorJson>,
    pub irreducible: bool,
    pub violations: Vec<String>,
}

impl From<&SpectrumEntry> for EntryJson {
    fn from(e: &SpectrumEntry) -> Self {
        EntryJson {
            eigenvalue_approx: round(e.eigenvalue),
            exact_factor: e.exact.factor.to_string(),
            exact_value: e.exact.value.as_ref().map(rat_str),
            interval: [rat_str(&e.exact.interval.lo), rat_str(&e.exact.interval.hi)],
            real_multiplicity: e.real_multiplicity,
            contributors: e
                .contributors
                .iter()
                .map(|c| ContributorJson { label: c.label.to_string(), rep_type: c.rep_type.as_str(), multiplicity: c.multiplicity })
                .collect(),
            irreducible: e.irreducible,
            violations: e.violations.iter().map(ToString::to_string).collect(),
        }
    }
}

#[derive(Serialize)]
pub struct ViolationJson {
    pub eigenvalue_approx: f64,
    pub conditions: Vec<String>,
    pub labels: Vec<String>,
}

#[derive(Serialize)]
pub struct VerdictJson {
    pub irreducible: bool,
    pub violations: Vec<ViolationJson>,
}

#[derive(Serialize)]
pub struct SpectrumJson {
    pub group: GroupJson,
    pub tensor: Vec<Vec<String>>,
    pub tensor_hash: String,
    pub cutoff: String,
    pub convention: &'static str,
    pub labels: Vec<String>,
    pub entries: Vec<EntryJson>,
    pub verdict: VerdictJson,
}

impl From<&SpectrumTable> for SpectrumJson {
    fn from(t: &SpectrumTable) -> Self {
        let report = verdict_report(t);
        SpectrumJson {
            group: (&t.group).into(),
            tensor: tensor_rows(&t.tensor),
            tensor_hash: tensor_hash(&t.tensor),
            cutoff: rat_str(&t.cutoff),
            convention: TORUS_CONVENTION_NOTE,
            labels: t.labels.iter().map(ToString::to_string).collect(),
            entries: t.entries.iter().map(EntryJson::from).collect(),
            verdict: VerdictJson {
                irreducible: report.irreducible,
                violations: report
                    .violations
                    .iter()
                    .map(|v| ViolationJson {
                        eigenvalue_approx: round(v.eigenvalue),
                        conditions: v.conditions.iter().map(ToString::to_string).collect(),
                        labels: v.labels.iter().map(ToString::to_string).collect(),
                    })
                    .collect(),
            },
        }
    }
}

pub fn write_spectrum_csv<W: Write>(t: &SpectrumTable, out: W) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["eigenvalue_approx", "exact_factor", "real_multiplicity", "contributors", "irreducible"])?;
    for e in &t.entries {
        let contributors =
            e.contributors.iter().map(|c| format!("{}:{}", c.label, c.multiplicity)).collect::<Vec<_>>().join(" ");
        w.write_record([
            format!("{}", round(e.eigenvalue)),
            e.exact.factor.to_string(),
            e.real_multiplicity.to_string(),
            contributors,
            e.irreducible.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn spectrum_pretty(t: &SpectrumTable) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "group {}  cutoff {}  tensor {}", t.group, rat_str(&t.cutoff), tensor_hash(&t.tensor));
    let _ = writeln!(s, "{:>16}  {:>6}  {:<5}  contributors", "eigenvalue", "mult", "irr");
    for e in &t.entries {
        let contributors =
            e.contributors.iter().map(|c| format!("{}^{}", c.label, c.multiplicity)).collect::<Vec<_>>().join(" ");
        let _ = writeln!(
            s,
            "{:>16.10}  {:>6}  {:<5}  {}",
            e.eigenvalue,
            e.real_multiplicity,
            if e.irreducible { "yes" } else { "no" },
            contributors
        );
    }
    let report = verdict_report(t);
    let _ = writeln!(s, "verdict: {}", if report.irreducible { "irreducible" } else { "NOT irreducible" });
    s
}

#[derive(Serialize)]
pub struct CertifyJson {
    pub group: GroupJson,
    pub tensor: Vec<Vec<String>>,
    pub tensor_hash: String,
    pub level: u32,
    pub labels: Vec<String>,
    pub certificates: Vec<CertificateJson>,
    pub verdict: bool,
}

#[derive(Serialize)]
pub struct PipelineJson {
    pub m: u32,
    pub m_prime: u32,
    pub eps: String,
    pub dim_plus: usize,
    pub dim_minus: usize,
    pub involution: bool,
    pub anticommutes_phi: bool,
    pub commutes_psi: bool,
    pub preserves_real_span: bool,
    pub s_h_spectrum_double: bool,
    pub d0_simple_plus: bool,
    pub d0_simple_minus: bool,
    pub d1_disjoint: String,
    pub alphas_tried: usize,
    pub alpha: Option<String>,
    pub profile: Option<String>,
    pub certificate: Option<CertificateJson>,
    pub passed: bool,
}

impl From<&PairsPipelineReport> for PipelineJson {
    fn from(r: &PairsPipelineReport) -> Self {
        PipelineJson {
            m: r.m,
            m_prime: r.m_prime,
            eps: rat_str(&r.eps),
            dim_plus: r.dim_plus,
            dim_minus: r.dim_minus,
            involution: r.involution,
            anticommutes_phi: r.anticommutes_phi,
            commutes_psi: r.commutes_psi,
            preserves_real_span: r.preserves_real_span,
            s_h_spectrum_double: r.s_h_spectrum_double,
            d0_simple_plus: r.d0_simple.0,
            d0_simple_minus: r.d0_simple.1,
            d1_disjoint: rat_str(&r.d1_disjoint),
            alphas_tried: r.alphas_tried,
            alpha: r.alpha.as_ref().map(rat_str),
            profile: r.profile.as_ref().map(ToString::to_string),
            certificate: r.certificate.as_ref().map(CertificateJson::from),
            passed: r.passed(),
        }
    }
}

#[derive(Serialize)]
pub struct MixedJson {
    pub label: String,
    pub pairing: String,
    pub spectrum: Vec<String>,
    pub certificate: CertificateJson,
    pub passed: bool,
}

impl From<&MixedWitness> for MixedJson {
    fn from(w: &MixedWitness) -> Self {
        MixedJson {
            label: w.label.to_string(),
            pairing: rat_str(&w.pairing),
            spectrum: w.spectrum.iter().map(rat_str).collect(),
            certificate: (&w.certificate).into(),
            passed: w.passed(),
        }
    }
}

#[derive(Serialize)]
pub struct EvenJson {
    pub m: u32,
    pub b_at_h2: String,
    pub parity_split: bool,
    pub subdiagonal_even: Vec<String>,
    pub subdiagonal_odd: Vec<String>,
    pub parity_blocks_disjoint: String,
    pub eps: String,
    pub certificate: CertificateJson,
    pub passed: bool,
}

impl From<&EvenWitness> for EvenJson {
    fn from(w: &EvenWitness) -> Self {
        EvenJson {
            m: w.m,
            b_at_h2: rat_str(&w.b_at_h2.value),
            parity_split: w.parity_split,
            subdiagonal_even: w.subdiagonal_even.iter().map(rat_str).collect(),
            subdiagonal_odd: w.subdiagonal_odd.iter().map(rat_str).collect(),
            parity_blocks_disjoint: rat_str(&w.parity_blocks_disjoint),
            eps: rat_str(&w.eps),
            certificate: (&w.certificate).into(),
            passed: w.passed(),
        }
    }
}

/// Explicit constructions run alongside a witness search.
#[derive(Serialize, Default)]
pub struct ConstructiveJson {
    pub even_spin: Vec<EvenJson>,
    pub mixed: Vec<MixedJson>,
    pub pairs: Vec<PipelineJson>,
}

#[derive(Serialize)]
pub struct WitnessJson {
    pub group: GroupJson,
    pub level: u32,
    pub seed: u64,
    pub trials: u64,
    pub tensor: Vec<Vec<String>>,
    pub tensor_hash: String,
    pub labels: Vec<String>,
    pub certificates: Vec<CertificateJson>,
    pub verdict: bool,
    pub constructive: ConstructiveJson,
}

impl WitnessJson {
    pub fn new(r: &WitnessReport, constructive: ConstructiveJson) -> Self {
        WitnessJson {
            group: (&r.group).into(),
            level: r.level,
            seed: r.seed,
            trials: r.trials,
            tensor: tensor_rows(&r.tensor),
            tensor_hash: tensor_hash(&r.tensor),
            labels: r.labels.iter().map(ToString::to_string).collect(),
            certificates: r.certificates.iter().map(CertificateJson::from).collect(),
            verdict: r.verdict(),
            constructive,
        }
    }
}

pub fn certificates_pretty(certs: &[Certificate]) -> String {
    let mut s = String::new();
    for c in certs {
        let _ = writeln!(s, "{c}");
    }
    s
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
