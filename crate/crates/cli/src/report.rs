//! Output documents. Every subcommand produces one serializable document;
//! `--json` prints it to stdout, `--out DIR` writes it to a file, and the
//! default is a plain text rendering of the same fields.

use serde::Serialize;

use graychain::verify::{CheckReport, Expectation, Mode};
use graychain::{ChainRing, Family};

#[derive(Debug, Serialize)]
pub struct RingInfoDoc {
    pub description: String,
    pub family: &'static str,
    pub p: u32,
    pub k: u32,
    pub e: u32,
    pub nilpotency_index: u32,
    pub size: u64,
    pub digit_base: u64,
    pub characteristic: u64,
    pub unit_count: u64,
    pub ideal_generator: u64,
    pub socle_generator: u64,
    pub residue_field_size: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub field_modulus: Option<Vec<u32>>,
    pub nilpotency_two: bool,
}

impl RingInfoDoc {
    pub fn new(ring: &ChainRing) -> Self {
        let family = match ring.family() {
            Family::IntegerModular => "zpe",
            Family::TruncatedPolynomial => "fpk_u",
        };
        RingInfoDoc {
            description: ring.describe(),
            family,
            p: ring.p(),
            k: ring.k(),
            e: ring.e(),
            nilpotency_index: ring.e() + 1,
            size: ring.size(),
            digit_base: ring.digit_base(),
            characteristic: ring.characteristic(),
            unit_count: ring.unit_count(),
            ideal_generator: ring.ideal_generator().encoding(),
            socle_generator: ring.ideal_generator_pow(ring.e()).encoding(),
            residue_field_size: ring.field().size(),
            field_modulus: (ring.k() > 1).then(|| ring.field().modulus().to_vec()),
            nilpotency_two: ring.nilpotency_two(),
        }
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        line(&mut out, "ring", &self.description);
        line(&mut out, "family", self.family);
        line(&mut out, "p, k, e", &format!("{}, {}, {}", self.p, self.k, self.e));
        line(&mut out, "nilpotency index", &(self.nilpotency_index).to_string());
        line(&mut out, "size", &self.size.to_string());
        line(&mut out, "digit base q", &self.digit_base.to_string());
        line(&mut out, "characteristic", &self.characteristic.to_string());
        line(&mut out, "units", &self.unit_count.to_string());
        line(&mut out, "ideal generator g", &self.ideal_generator.to_string());
        line(&mut out, "socle generator g^e", &self.socle_generator.to_string());
        line(&mut out, "residue field size", &self.residue_field_size.to_string());
        if let Some(m) = &self.field_modulus {
            line(&mut out, "field modulus", &format!("{m:?}"));
        }
        line(&mut out, "nilpotency two", &self.nilpotency_two.to_string());
        out
    }
}

fn line(out: &mut String, label: &str, value: &str) {
    out.push_str(&format!("{label:<24}{value}\n"));
}

pub fn join(values: &[u64]) -> String {
    values
        .iter()
        .map(u64::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Serialize)]
pub struct GrayDoc {
    pub ring: String,
    pub n: usize,
    pub word: Vec<u64>,
    pub image: Vec<u64>,
    pub image_length: usize,
    pub homogeneous_weight: u64,
    pub image_hamming_weight: u64,
}

#[derive(Debug, Serialize)]
pub struct GrayInverseDoc {
    pub ring: String,
    pub n: usize,
    pub image: Vec<u64>,
    pub preimage: Option<Vec<u64>>,
}

#[derive(Debug, Serialize)]
pub struct ShiftDoc {
    pub ring: String,
    pub op: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unit: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub nprime: Option<u32>,
    pub input: Vec<u64>,
    pub output: Vec<u64>,
}

#[derive(Debug, Serialize)]
pub struct PermDoc {
    pub ring: String,
    pub p: u32,
    pub n: usize,
    pub nprime: u32,
    pub points: usize,
    pub table: Vec<usize>,
    pub convention: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output: Option<Vec<u64>>,
}

#[derive(Debug, Serialize)]
pub struct ImageDoc {
    pub length: usize,
    pub word_count: usize,
    pub quasicyclic: bool,
    pub distance_invariant: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_hamming_distance: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct AnalyzeDoc {
    pub ring: String,
    pub n: usize,
    pub unit: String,
    pub unit_encoding: u64,
    pub generator_count: usize,
    pub word_count: usize,
    pub linear: bool,
    pub constacyclic: bool,
    pub ideal: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_homogeneous_distance: Option<u64>,
    pub image: ImageDoc,
}

impl AnalyzeDoc {
    pub fn render(&self) -> String {
        let mut out = String::new();
        line(&mut out, "ring", &self.ring);
        line(&mut out, "length n", &self.n.to_string());
        line(
            &mut out,
            "unit",
            &format!("{} (encoding {})", self.unit, self.unit_encoding),
        );
        line(&mut out, "generators", &self.generator_count.to_string());
        line(&mut out, "words", &self.word_count.to_string());
        line(&mut out, "linear", &self.linear.to_string());
        line(&mut out, "constacyclic", &self.constacyclic.to_string());
        line(&mut out, "ideal", &self.ideal.to_string());
        if let Some(d) = self.min_homogeneous_distance {
            line(&mut out, "min homogeneous dist", &d.to_string());
        }
        line(&mut out, "image length", &self.image.length.to_string());
        line(&mut out, "image words", &self.image.word_count.to_string());
        line(&mut out, "image quasicyclic", &self.image.quasicyclic.to_string());
        line(
            &mut out,
            "image dist invariant",
            &self.image.distance_invariant.to_string(),
        );
        if let Some(d) = self.image.min_hamming_distance {
            line(&mut out, "image min Hamming", &d.to_string());
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct DistanceDoc {
    pub ring: String,
    pub n: usize,
    pub word_count: usize,
    pub min_homogeneous_distance: u64,
    pub image_min_hamming_distance: u64,
    pub distances_agree: bool,
}

#[derive(Debug, Serialize)]
pub struct FailureDoc {
    pub input: String,
    pub left: String,
    pub right: String,
}

#[derive(Debug, Serialize)]
pub struct ReportDoc {
    pub claim: String,
    pub summary: String,
    pub ring: String,
    pub n: usize,
    pub mode: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<u64>,
    pub expectation: &'static str,
    pub examined: u64,
    pub failure_count: u64,
    pub verdict: String,
    pub gate_passed: bool,
    pub failures: Vec<FailureDoc>,
    pub notes: Vec<String>,
}

impl ReportDoc {
    pub fn new(report: &CheckReport) -> Self {
        let (mode, seed, count) = match report.mode {
            Mode::Exhaustive => ("exhaustive", None, None),
            Mode::Random { seed, count } => ("random", Some(seed), Some(count)),
        };
        ReportDoc {
            claim: report.claim.name().to_owned(),
            summary: report.claim.summary().to_owned(),
            ring: report.ring.clone(),
            n: report.n,
            mode,
            seed,
            count,
            expectation: match report.expectation {
                Expectation::Holds => "holds",
                Expectation::Arbitrate => "arbitrate",
            },
            examined: report.examined,
            failure_count: report.failure_count,
            verdict: report.verdict().to_owned(),
            gate_passed: report.passes_gate(),
            failures: report
                .failures
                .iter()
                .map(|f| FailureDoc {
                    input: f.input.clone(),
                    left: f.left.clone(),
                    right: f.right.clone(),
                })
                .collect(),
            notes: report.notes.clone(),
        }
    }

    /// A skipped-claim placeholder for sweep runs where one claim is not
    /// applicable (for example a twist claim with gcd(n, p) > 1).
    pub fn skipped(claim: graychain::verify::ClaimId, ring: &ChainRing, n: usize, why: &str) -> Self {
        ReportDoc {
            claim: claim.name().to_owned(),
            summary: claim.summary().to_owned(),
            ring: ring.describe(),
            n,
            mode: "skipped",
            seed: None,
            count: None,
            expectation: "holds",
            examined: 0,
            failure_count: 0,
            verdict: "skipped".to_owned(),
            gate_passed: true,
            failures: Vec::new(),
            notes: vec![why.to_owned()],
        }
    }

    pub fn render(&self, verbose: bool) -> String {
        let mode = match (self.seed, self.count) {
            (Some(seed), Some(count)) => format!("random(seed={seed}, count={count})"),
            _ => self.mode.to_owned(),
        };
        let mut out = format!(
            "{:<30} {:<12} n={:<3} {:<28} examined={:<7} failures={:<3} {}\n",
            self.claim, self.ring, self.n, mode, self.examined, self.failure_count, self.verdict
        );
        if verbose || !self.gate_passed || self.verdict == "refuted" {
            for f in &self.failures {
                out.push_str(&format!(
                    "    counterexample: {} => {} vs {}\n",
                    f.input, f.left, f.right
                ));
            }
        }
        if verbose {
            for note in &self.notes {
                out.push_str(&format!("    note: {note}\n"));
            }
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyDoc {
    pub reports: Vec<ReportDoc>,
    pub all_gates_passed: bool,
}

impl VerifyDoc {
    pub fn new(reports: Vec<ReportDoc>) -> Self {
        let all_gates_passed = reports.iter().all(|r| r.gate_passed);
        VerifyDoc {
            reports,
            all_gates_passed,
        }
    }

    pub fn render(&self, verbose: bool) -> String {
        let mut out = String::new();
        for r in &self.reports {
            out.push_str(&r.render(verbose));
        }
        let gates = self.reports.iter().filter(|r| r.gate_passed).count();
        out.push_str(&format!(
            "gates: {gates}/{} passed => {}\n",
            self.reports.len(),
            if self.all_gates_passed { "PASS" } else { "FAIL" }
        ));
        out
    }
}
