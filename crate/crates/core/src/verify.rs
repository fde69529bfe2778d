//! A small falsification harness for the identities the rest of the crate
//! implements.
//!
//! Each [`ClaimId`] names one checkable statement about the Gray map, the
//! shift operators, or code-level structure. A [`CheckPlan`] fixes a ring,
//! a word length, and a domain — either the whole space ([`Mode::Exhaustive`])
//! or a seeded random sample ([`Mode::Random`]) — and [`run_check`] walks
//! the domain recording counterexamples. Random mode uses a fixed-seed
//! ChaCha stream, so a given plan is bit-reproducible across runs.
//!
//! Two of the claims are *competing readings* of the same correspondence
//! (`plus_correspondence_literal` vs `plus_correspondence_corrected`); a
//! plan can be marked [`Expectation::Arbitrate`] so that a refutation is an
//! informative verdict rather than a suite failure. On rings where
//! `1 + g^e = 1 - g^e` (e.g. `Z_8`) the two readings coincide and the
//! literal form survives; `Z_27` separates them.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::codes::{
    gray_image_set, is_constacyclic, is_linear, min_homogeneous_distance, span, word_for_index,
    Code, CodewordSet, FieldCode, DEFAULT_ENUM_CAP,
};
use crate::error::Error;
use crate::gray::{gray, gray_length, hamming_distance, homogeneous_distance};
use crate::ring::{ChainRing, FieldElem, RingElem};
use crate::shifts::{
    block_shift, constacyclic_shift, nechaev_permutation, permute_blocks, Twist, UnitSpec,
};

/// Default bound on how many domain points an exhaustive check may visit.
pub const DEFAULT_EVAL_CAP: u64 = 1 << 20;

/// At most this many counterexamples are stored per report; the rest are
/// only counted.
pub const MAX_RECORDED_FAILURES: usize = 10;

/// The checkable statements. The wire names (`ClaimId::name`) are stable
/// and are what the command-line front end accepts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClaimId {
    /// Homogeneous distance equals Hamming distance of Gray images.
    Isometry,
    /// Gray map intertwines the `(1 - g^e)`-constacyclic shift with the
    /// block shift.
    GrayShift,
    /// Gray map intertwines the twist with the blockwise Nechaev
    /// permutation.
    GrayTwist,
    /// Same for the squared twist and the permutation applied twice.
    GrayTwistSquared,
    /// A code is `(1 - g^e)`-constacyclic iff its Gray image is
    /// quasicyclic.
    ConstacyclicIffQuasicyclic,
    /// A code is cyclic iff its twist is `(1 - g^e)`-constacyclic, iff the
    /// Nechaev-permuted Gray image is quasicyclic.
    CyclicCorrespondence,
    /// Literal reading: twisting twice keeps a `(1 + g^e)`-constacyclic
    /// code `(1 + g^e)`-constacyclic. Expected to fail where
    /// `1 + g^e != 1 - g^e`.
    PlusCorrespondenceLiteral,
    /// Corrected reading: twisting twice sends `(1 + g^e)`-constacyclic
    /// codes to `(1 - g^e)`-constacyclic ones (and the doubly permuted
    /// Gray image is quasicyclic).
    PlusCorrespondenceCorrected,
    /// Gray images of linear codes are distance invariant and minimum
    /// homogeneous distance equals minimum Hamming distance.
    DistanceInvariance,
}

impl ClaimId {
    pub const ALL: [ClaimId; 9] = [
        ClaimId::Isometry,
        ClaimId::GrayShift,
        ClaimId::GrayTwist,
        ClaimId::GrayTwistSquared,
        ClaimId::ConstacyclicIffQuasicyclic,
        ClaimId::CyclicCorrespondence,
        ClaimId::PlusCorrespondenceLiteral,
        ClaimId::PlusCorrespondenceCorrected,
        ClaimId::DistanceInvariance,
    ];

    /// Stable wire name.
    pub fn name(self) -> &'static str {
        match self {
            ClaimId::Isometry => "isometry",
            ClaimId::GrayShift => "phi_nu",
            ClaimId::GrayTwist => "phi_mu",
            ClaimId::GrayTwistSquared => "phi_mu2",
            ClaimId::ConstacyclicIffQuasicyclic => "constacyclic_iff_qc",
            ClaimId::CyclicCorrespondence => "cyclic_correspondence",
            ClaimId::PlusCorrespondenceLiteral => "plus_correspondence_literal",
            ClaimId::PlusCorrespondenceCorrected => "plus_correspondence_corrected",
            ClaimId::DistanceInvariance => "distance_invariance",
        }
    }

    pub fn parse(name: &str) -> Option<ClaimId> {
        ClaimId::ALL.iter().copied().find(|c| c.name() == name)
    }

    /// One-line description used in reports.
    pub fn summary(self) -> &'static str {
        match self {
            ClaimId::Isometry => "homogeneous distance = Hamming distance of Gray images",
            ClaimId::GrayShift => {
                "Gray of the (1-g^e)-constacyclic shift = block shift of Gray"
            }
            ClaimId::GrayTwist => "Gray of the twist = Nechaev-permuted Gray",
            ClaimId::GrayTwistSquared => {
                "Gray of the squared twist = twice Nechaev-permuted Gray"
            }
            ClaimId::ConstacyclicIffQuasicyclic => {
                "(1-g^e)-constacyclic iff Gray image is quasicyclic"
            }
            ClaimId::CyclicCorrespondence => {
                "cyclic iff twist is (1-g^e)-constacyclic iff permuted image is quasicyclic"
            }
            ClaimId::PlusCorrespondenceLiteral => {
                "(1+g^e)-constacyclic implies squared twist is (1+g^e)-constacyclic (literal reading)"
            }
            ClaimId::PlusCorrespondenceCorrected => {
                "(1+g^e)-constacyclic iff squared twist is (1-g^e)-constacyclic (corrected reading)"
            }
            ClaimId::DistanceInvariance => {
                "Gray images of linear codes are distance invariant with matching minimum distances"
            }
        }
    }

    /// Whether the claim ranges over codes (rather than single words).
    pub fn is_code_level(self) -> bool {
        matches!(
            self,
            ClaimId::ConstacyclicIffQuasicyclic
                | ClaimId::CyclicCorrespondence
                | ClaimId::PlusCorrespondenceLiteral
                | ClaimId::PlusCorrespondenceCorrected
                | ClaimId::DistanceInvariance
        )
    }
}

/// Domain selection for a check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Visit every point of the domain (bounded by the evaluation cap).
    Exhaustive,
    /// Visit `count` seeded pseudo-random points; reproducible per seed.
    Random { seed: u64, count: u64 },
}

/// Whether a refutation fails the suite or is itself the sought answer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    /// The claim must hold; any counterexample is a failure.
    Holds,
    /// The run decides between competing readings; either verdict passes.
    Arbitrate,
}

/// One checkable unit of work.
#[derive(Debug, Clone)]
pub struct CheckPlan {
    pub claim: ClaimId,
    pub ring: ChainRing,
    pub n: usize,
    pub mode: Mode,
    /// Explicit code for code-level claims; otherwise codes are sampled.
    pub code: Option<Code>,
    /// Bound on exhaustively visited domain points.
    pub eval_cap: u64,
    /// Bound on materialised codewords per enumeration.
    pub enum_cap: u64,
    pub expectation: Expectation,
    /// Replaces the computed inverse of `n` mod `p` in the permutation
    /// side of the twist claims. Only useful for proving the harness can
    /// detect a wrong permutation.
    pub nprime_override: Option<u32>,
}

impl CheckPlan {
    pub fn new(claim: ClaimId, ring: ChainRing, n: usize, mode: Mode) -> Self {
        CheckPlan {
            claim,
            ring,
            n,
            mode,
            code: None,
            eval_cap: DEFAULT_EVAL_CAP,
            enum_cap: DEFAULT_ENUM_CAP,
            expectation: Expectation::Holds,
            nprime_override: None,
        }
    }

    pub fn with_code(mut self, code: Code) -> Self {
        self.code = Some(code);
        self
    }

    pub fn arbitrated(mut self) -> Self {
        self.expectation = Expectation::Arbitrate;
        self
    }

    pub fn with_eval_cap(mut self, cap: u64) -> Self {
        self.eval_cap = cap;
        self
    }

    pub fn with_enum_cap(mut self, cap: u64) -> Self {
        self.enum_cap = cap;
        self
    }

    pub fn with_nprime_override(mut self, nprime: u32) -> Self {
        self.nprime_override = Some(nprime);
        self
    }
}

/// A recorded disagreement: the domain point and the two sides that were
/// supposed to match.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub input: String,
    pub left: String,
    pub right: String,
}

/// Outcome of one plan.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub claim: ClaimId,
    pub ring: String,
    pub n: usize,
    pub mode: Mode,
    pub expectation: Expectation,
    /// Domain points visited: word pairs, words, or codes depending on the
    /// claim.
    pub examined: u64,
    pub failure_count: u64,
    /// First few counterexamples (at most [`MAX_RECORDED_FAILURES`]).
    pub failures: Vec<Counterexample>,
    pub notes: Vec<String>,
}

impl CheckReport {
    /// True when no counterexample was found.
    pub fn holds(&self) -> bool {
        self.failure_count == 0
    }

    /// Whether this report keeps a suite green: failures only count
    /// against claims expected to hold.
    pub fn passes_gate(&self) -> bool {
        self.holds() || self.expectation == Expectation::Arbitrate
    }

    /// Four-way verdict string: pass/FAIL for expected-to-hold claims,
    /// holds/refuted for arbitrated ones.
    pub fn verdict(&self) -> &'static str {
        match (self.expectation, self.holds()) {
            (Expectation::Holds, true) => "pass",
            (Expectation::Holds, false) => "FAIL",
            (Expectation::Arbitrate, true) => "holds",
            (Expectation::Arbitrate, false) => "refuted",
        }
    }
}

struct Recorder {
    examined: u64,
    failure_count: u64,
    failures: Vec<Counterexample>,
    notes: Vec<String>,
}

impl Recorder {
    fn new() -> Self {
        Recorder {
            examined: 0,
            failure_count: 0,
            failures: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn visit(&mut self) {
        self.examined += 1;
    }

    fn fail(&mut self, input: String, left: String, right: String) {
        self.failure_count += 1;
        if self.failures.len() < MAX_RECORDED_FAILURES {
            self.failures.push(Counterexample { input, left, right });
        }
    }

    fn note(&mut self, note: String) {
        self.notes.push(note);
    }
}

fn format_ring_word(word: &[RingElem]) -> String {
    let mut out = String::from("(");
    for (i, c) in word.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!("{}", c.encoding()));
    }
    out.push(')');
    out
}

fn format_field_word(word: &[FieldElem]) -> String {
    let mut out = String::from("(");
    for (i, c) in word.iter().enumerate() {
        if i > 0 {
            out.push(',');
        }
        out.push_str(&format!("{}", c.encoding()));
    }
    out.push(')');
    out
}

fn random_word(rng: &mut ChaCha8Rng, ring: &ChainRing, n: usize) -> Vec<RingElem> {
    (0..n)
        .map(|_| {
            ring.element(rng.gen_range(0..ring.size()))
                .expect("sampled below ring size")
        })
        .collect()
}

/// Random generators without any imposed structure: one or two uniform
/// words. Spans of these are linear but rarely shift-closed.
pub fn sample_plain_generators(
    rng: &mut ChaCha8Rng,
    ring: &ChainRing,
    n: usize,
) -> Vec<Vec<RingElem>> {
    let count = rng.gen_range(1..=2usize);
    (0..count).map(|_| random_word(rng, ring, n)).collect()
}

/// One uniform word together with its whole orbit under the
/// `lambda`-constacyclic shift; the span of these is `lambda`-constacyclic
/// by construction.
pub fn sample_shift_closed_generators(
    rng: &mut ChaCha8Rng,
    ring: &ChainRing,
    n: usize,
    lambda: RingElem,
) -> Result<Vec<Vec<RingElem>>, Error> {
    let mut gens = vec![random_word(rng, ring, n)];
    for i in 1..n {
        let prev = gens[i - 1].clone();
        gens.push(constacyclic_shift(ring, &prev, lambda)?);
    }
    Ok(gens)
}

/// Run one plan. Errors are propagated for malformed plans (wrong
/// parameters, cap overruns); counterexamples are *not* errors — they are
/// collected in the report.
pub fn run_check(plan: &CheckPlan) -> Result<CheckReport, Error> {
    let mut rec = Recorder::new();
    if plan.ring.nilpotency_two() {
        rec.note(String::from(
            "nilpotency index 2 (e = 1): degenerate but checkable case",
        ));
    }
    match plan.claim {
        ClaimId::Isometry => check_isometry(plan, &mut rec)?,
        ClaimId::GrayShift => check_gray_shift(plan, &mut rec)?,
        ClaimId::GrayTwist => check_gray_twist(plan, &mut rec, 1)?,
        ClaimId::GrayTwistSquared => check_gray_twist(plan, &mut rec, 2)?,
        ClaimId::ConstacyclicIffQuasicyclic => check_constacyclic_iff_qc(plan, &mut rec)?,
        ClaimId::CyclicCorrespondence => check_cyclic_correspondence(plan, &mut rec)?,
        ClaimId::PlusCorrespondenceLiteral => check_plus_correspondence(plan, &mut rec, false)?,
        ClaimId::PlusCorrespondenceCorrected => check_plus_correspondence(plan, &mut rec, true)?,
        ClaimId::DistanceInvariance => check_distance_invariance(plan, &mut rec)?,
    }
    Ok(CheckReport {
        claim: plan.claim,
        ring: plan.ring.describe(),
        n: plan.n,
        mode: plan.mode,
        expectation: plan.expectation,
        examined: rec.examined,
        failure_count: rec.failure_count,
        failures: rec.failures,
        notes: rec.notes,
    })
}

/// Run plans in order, stopping at the first plan that cannot be run at
/// all (counterexamples never stop the suite).
pub fn run_suite(plans: &[CheckPlan]) -> Result<Vec<CheckReport>, Error> {
    plans.iter().map(run_check).collect()
}

/// A suite is green when every report passes its gate.
pub fn suite_passes(reports: &[CheckReport]) -> bool {
    reports.iter().all(CheckReport::passes_gate)
}

fn exhaustive_total(ring: &ChainRing, n: usize, eval_cap: u64) -> Result<u64, Error> {
    let total = ring
        .size()
        .checked_pow(n as u32)
        .ok_or(Error::RingTooLarge)?;
    if total > eval_cap {
        return Err(Error::CapExceeded {
            reached: total,
            cap: eval_cap,
        });
    }
    Ok(total)
}

fn for_each_word(
    plan: &CheckPlan,
    mut f: impl FnMut(&mut Recorder, Vec<RingElem>) -> Result<(), Error>,
    rec: &mut Recorder,
) -> Result<(), Error> {
    match plan.mode {
        Mode::Exhaustive => {
            let total = exhaustive_total(&plan.ring, plan.n, plan.eval_cap)?;
            for idx in 0..total {
                rec.visit();
                f(rec, word_for_index(&plan.ring, plan.n, idx))?;
            }
        }
        Mode::Random { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                rec.visit();
                f(rec, random_word(&mut rng, &plan.ring, plan.n))?;
            }
        }
    }
    Ok(())
}

fn check_isometry(plan: &CheckPlan, rec: &mut Recorder) -> Result<(), Error> {
    let ring = &plan.ring;
    match plan.mode {
        Mode::Exhaustive => {
            // Pairs: the domain is (R^n)^2, cap-checked as a whole.
            let per_word = exhaustive_total(ring, plan.n, plan.eval_cap)?;
            let total = per_word
                .checked_mul(per_word)
                .ok_or(Error::RingTooLarge)?;
            if total > plan.eval_cap {
                return Err(Error::CapExceeded {
                    reached: total,
                    cap: plan.eval_cap,
                });
            }
            for i in 0..per_word {
                let x = word_for_index(ring, plan.n, i);
                let gx = gray(ring, &x);
                for j in 0..per_word {
                    let y = word_for_index(ring, plan.n, j);
                    rec.visit();
                    compare_distances(ring, rec, &x, &gx, &y)?;
                }
            }
        }
        Mode::Random { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..count {
                let x = random_word(&mut rng, ring, plan.n);
                let y = random_word(&mut rng, ring, plan.n);
                let gx = gray(ring, &x);
                rec.visit();
                compare_distances(ring, rec, &x, &gx, &y)?;
            }
        }
    }
    Ok(())
}

fn compare_distances(
    ring: &ChainRing,
    rec: &mut Recorder,
    x: &[RingElem],
    gx: &[FieldElem],
    y: &[RingElem],
) -> Result<(), Error> {
    let hom = homogeneous_distance(ring, x, y)?;
    let ham = hamming_distance(gx, &gray(ring, y))?;
    if hom != ham {
        rec.fail(
            format!("x={}, y={}", format_ring_word(x), format_ring_word(y)),
            format!("homogeneous distance {hom}"),
            format!("Hamming distance {ham}"),
        );
    }
    Ok(())
}

fn check_gray_shift(plan: &CheckPlan, rec: &mut Recorder) -> Result<(), Error> {
    let lambda = UnitSpec::OneMinusSocleGen.resolve(&plan.ring)?;
    let ring = plan.ring.clone();
    let n = plan.n;
    for_each_word(
        plan,
        move |rec, x| {
            let lhs = gray(&ring, &constacyclic_shift(&ring, &x, lambda)?);
            let rhs = block_shift(&ring, &gray(&ring, &x), n)?;
            if lhs != rhs {
                rec.fail(
                    format!("x={}", format_ring_word(&x)),
                    format!("Gray(shift(x)) = {}", format_field_word(&lhs)),
                    format!("block_shift(Gray(x)) = {}", format_field_word(&rhs)),
                );
            }
            Ok(())
        },
        rec,
    )
}

fn check_gray_twist(plan: &CheckPlan, rec: &mut Recorder, times: u32) -> Result<(), Error> {
    let twist = Twist::new(&plan.ring, plan.n)?;
    let nprime = plan.nprime_override.unwrap_or_else(|| twist.nprime());
    if let Some(forced) = plan.nprime_override {
        rec.note(format!(
            "using supplied permutation parameter n' = {forced} instead of {}",
            twist.nprime()
        ));
    }
    let perm = nechaev_permutation(plan.ring.p(), plan.n, nprime);
    let ring = plan.ring.clone();
    for_each_word(
        plan,
        move |rec, x| {
            let twisted = match times {
                1 => twist.apply(&ring, &x)?,
                _ => twist.apply_squared(&ring, &x)?,
            };
            let lhs = gray(&ring, &twisted);
            let mut rhs = permute_blocks(&perm, &gray(&ring, &x))?;
            if times == 2 {
                rhs = permute_blocks(&perm, &rhs)?;
            }
            if lhs != rhs {
                rec.fail(
                    format!("x={}", format_ring_word(&x)),
                    format!("Gray(twist^{times}(x)) = {}", format_field_word(&lhs)),
                    format!("permuted Gray(x) = {}", format_field_word(&rhs)),
                );
            }
            Ok(())
        },
        rec,
    )
}

/// Iterate the codes a code-level plan ranges over: the explicit code if
/// present, otherwise sampled spans alternating between unstructured
/// generators and `lambda`-shift-closed orbits.
fn for_each_code(
    plan: &CheckPlan,
    closure_lambda: RingElem,
    mut f: impl FnMut(&mut Recorder, &CodewordSet, &str) -> Result<(), Error>,
    rec: &mut Recorder,
) -> Result<(), Error> {
    if let Some(code) = &plan.code {
        let set = code.enumerate(plan.enum_cap)?;
        rec.visit();
        let label = format!(
            "explicit code, {} generator(s), {} words",
            code.generators().len(),
            set.len()
        );
        f(rec, &set, label.as_str())?;
        return Ok(());
    }
    match plan.mode {
        Mode::Exhaustive => Err(Error::InvalidPlan(String::from(
            "code-level claims need random mode or an explicit code",
        ))),
        Mode::Random { seed, count } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut closed = 0u64;
            for i in 0..count {
                let orbit_style = i % 2 == 1;
                let gens = if orbit_style {
                    closed += 1;
                    sample_shift_closed_generators(&mut rng, &plan.ring, plan.n, closure_lambda)?
                } else {
                    sample_plain_generators(&mut rng, &plan.ring, plan.n)
                };
                let set = span(&plan.ring, plan.n, &gens, plan.enum_cap)?;
                rec.visit();
                let label = format!(
                    "sample {i} ({}), generators {}, {} words",
                    if orbit_style { "orbit-closed" } else { "plain" },
                    gens.iter()
                        .map(|g| format_ring_word(g))
                        .collect::<Vec<_>>()
                        .join(" "),
                    set.len()
                );
                f(rec, &set, label.as_str())?;
            }
            rec.note(format!(
                "samples: {count} ({closed} orbit-closed, {} plain)",
                count - closed
            ));
            Ok(())
        }
    }
}

fn image_code(ring: &ChainRing, n: usize, set: &CodewordSet) -> Result<FieldCode, Error> {
    FieldCode::new(
        ring.field().clone(),
        gray_length(ring, n),
        gray_image_set(ring, set),
    )
}

fn check_constacyclic_iff_qc(plan: &CheckPlan, rec: &mut Recorder) -> Result<(), Error> {
    let lambda = UnitSpec::OneMinusSocleGen.resolve(&plan.ring)?;
    let ring = plan.ring.clone();
    let n = plan.n;
    let mut constacyclic_count = 0u64;
    let mut other_count = 0u64;
    for_each_code(
        plan,
        lambda,
        |rec, set, label| {
            let cc = is_constacyclic(&ring, set, lambda)?;
            if cc {
                constacyclic_count += 1;
            } else {
                other_count += 1;
            }
            let qc = image_code(&ring, n, set)?.is_quasicyclic(&ring, n)?;
            if cc != qc {
                rec.fail(
                    String::from(label),
                    format!("constacyclic = {cc}"),
                    format!("image quasicyclic = {qc}"),
                );
            }
            Ok(())
        },
        rec,
    )?;
    rec.note(format!(
        "constacyclic codes seen: {constacyclic_count}, non-constacyclic: {other_count}"
    ));
    Ok(())
}

fn map_words(
    set: &CodewordSet,
    mut f: impl FnMut(&Vec<RingElem>) -> Result<Vec<RingElem>, Error>,
) -> Result<CodewordSet, Error> {
    let mut out = CodewordSet::new();
    for w in set {
        out.insert(f(w)?);
    }
    Ok(out)
}

fn map_field_words(
    set: &BTreeSet<Vec<FieldElem>>,
    mut f: impl FnMut(&Vec<FieldElem>) -> Result<Vec<FieldElem>, Error>,
) -> Result<BTreeSet<Vec<FieldElem>>, Error> {
    let mut out = BTreeSet::new();
    for w in set {
        out.insert(f(w)?);
    }
    Ok(out)
}

fn check_cyclic_correspondence(plan: &CheckPlan, rec: &mut Recorder) -> Result<(), Error> {
    let ring = plan.ring.clone();
    let n = plan.n;
    let one = ring.one();
    let minus = UnitSpec::OneMinusSocleGen.resolve(&ring)?;
    let twist = Twist::new(&ring, n)?;
    let perm = nechaev_permutation(ring.p(), n, twist.nprime());
    for_each_code(
        plan,
        one,
        |rec, set, label| {
            let cyclic = is_constacyclic(&ring, set, one)?;
            let twisted = map_words(set, |w| twist.apply(&ring, w))?;
            let twisted_cc = is_constacyclic(&ring, &twisted, minus)?;
            if cyclic != twisted_cc {
                rec.fail(
                    String::from(label),
                    format!("cyclic = {cyclic}"),
                    format!("twist is (1-g^e)-constacyclic = {twisted_cc}"),
                );
            }
            let image = gray_image_set(&ring, set);
            let permuted = map_field_words(&image, |w| permute_blocks(&perm, w))?;
            let qc = FieldCode::new(ring.field().clone(), gray_length(&ring, n), permuted)?
                .is_quasicyclic(&ring, n)?;
            if cyclic != qc {
                rec.fail(
                    String::from(label),
                    format!("cyclic = {cyclic}"),
                    format!("permuted Gray image quasicyclic = {qc}"),
                );
            }
            Ok(())
        },
        rec,
    )
}

fn check_plus_correspondence(
    plan: &CheckPlan,
    rec: &mut Recorder,
    corrected: bool,
) -> Result<(), Error> {
    let ring = plan.ring.clone();
    let n = plan.n;
    let plus = UnitSpec::OnePlusSocleGen.resolve(&ring)?;
    let minus = UnitSpec::OneMinusSocleGen.resolve(&ring)?;
    let twist = Twist::new(&ring, n)?;
    let perm = nechaev_permutation(ring.p(), n, twist.nprime());
    if plus == minus {
        rec.note(String::from(
            "1 + g^e = 1 - g^e in this ring, so both readings coincide here",
        ));
    }
    for_each_code(
        plan,
        plus,
        |rec, set, label| {
            let src = is_constacyclic(&ring, set, plus)?;
            let twisted = map_words(set, |w| twist.apply_squared(&ring, w))?;
            if corrected {
                let dst = is_constacyclic(&ring, &twisted, minus)?;
                if src != dst {
                    rec.fail(
                        String::from(label),
                        format!("(1+g^e)-constacyclic = {src}"),
                        format!("squared twist is (1-g^e)-constacyclic = {dst}"),
                    );
                }
                let image = gray_image_set(&ring, set);
                let permuted = map_field_words(&image, |w| {
                    permute_blocks(&perm, &permute_blocks(&perm, w)?)
                })?;
                let qc = FieldCode::new(ring.field().clone(), gray_length(&ring, n), permuted)?
                    .is_quasicyclic(&ring, n)?;
                if src != qc {
                    rec.fail(
                        String::from(label),
                        format!("(1+g^e)-constacyclic = {src}"),
                        format!("doubly permuted Gray image quasicyclic = {qc}"),
                    );
                }
            } else {
                // Literal reading, forward implication only.
                let dst = is_constacyclic(&ring, &twisted, plus)?;
                if src && !dst {
                    rec.fail(
                        String::from(label),
                        format!("(1+g^e)-constacyclic = {src}"),
                        format!("squared twist is (1+g^e)-constacyclic = {dst}"),
                    );
                }
            }
            Ok(())
        },
        rec,
    )
}

fn check_distance_invariance(plan: &CheckPlan, rec: &mut Recorder) -> Result<(), Error> {
    let ring = plan.ring.clone();
    let n = plan.n;
    let minus = UnitSpec::OneMinusSocleGen.resolve(&ring)?;
    for_each_code(
        plan,
        minus,
        |rec, set, label| {
            if !is_linear(&ring, set) {
                // Spans are linear by construction; guard anyway.
                return Ok(());
            }
            let image = image_code(&ring, n, set)?;
            if !image.is_distance_invariant() {
                rec.fail(
                    String::from(label),
                    String::from("image distance invariant = false"),
                    String::from("expected true for linear codes"),
                );
            }
            if set.len() >= 2 {
                let hom = min_homogeneous_distance(&ring, set)?;
                let ham = image.min_hamming_distance()?;
                if hom != ham {
                    rec.fail(
                        String::from(label),
                        format!("minimum homogeneous distance {hom}"),
                        format!("minimum Hamming distance {ham}"),
                    );
                }
            }
            Ok(())
        },
        rec,
    )
}

/// The standing desk-scale suite: exhaustive word-level checks on `Z_8`,
/// `Z_27`, and `F_4[u]/u^3`, plus seeded code-level samples. The two
/// readings of the plus-correspondence run arbitrated, side by side; the
/// literal reading runs against the explicit separating code
/// `<(1, 10)> over Z_27` — the span of `(1, 10)` is `(1+g^e)`-constacyclic
/// while its squared twist `{(a, 19a)}` is not — so the refutation is
/// deterministic rather than at the mercy of sampling.
pub fn desk_suite() -> Vec<CheckPlan> {
    let z8 = ChainRing::integer_modular(2, 2).expect("Z_8 parameters are valid");
    let z27 = ChainRing::integer_modular(3, 2).expect("Z_27 parameters are valid");
    let f4u3 = ChainRing::truncated_polynomial(2, 2, 2, Some(&[1, 1, 1]))
        .expect("F_4[u]/u^3 parameters are valid");
    let separating_code = Code::new(
        z27.clone(),
        2,
        UnitSpec::OnePlusSocleGen,
        vec![vec![
            z27.element(1).expect("1 < 27"),
            z27.element(10).expect("10 < 27"),
        ]],
    )
    .expect("generator has length 2 and in-range entries");
    vec![
        CheckPlan::new(ClaimId::Isometry, z8.clone(), 2, Mode::Exhaustive),
        CheckPlan::new(ClaimId::Isometry, z27.clone(), 1, Mode::Exhaustive),
        CheckPlan::new(ClaimId::GrayShift, z8.clone(), 3, Mode::Exhaustive),
        CheckPlan::new(ClaimId::GrayShift, z27.clone(), 2, Mode::Exhaustive),
        CheckPlan::new(ClaimId::GrayShift, f4u3.clone(), 2, Mode::Exhaustive),
        CheckPlan::new(ClaimId::GrayTwist, z8.clone(), 3, Mode::Exhaustive),
        CheckPlan::new(ClaimId::GrayTwist, z27.clone(), 2, Mode::Exhaustive),
        CheckPlan::new(ClaimId::GrayTwistSquared, z8.clone(), 3, Mode::Exhaustive),
        CheckPlan::new(ClaimId::GrayTwistSquared, z27.clone(), 2, Mode::Exhaustive),
        CheckPlan::new(
            ClaimId::ConstacyclicIffQuasicyclic,
            z8.clone(),
            3,
            Mode::Random { seed: 0x1001, count: 40 },
        ),
        CheckPlan::new(
            ClaimId::ConstacyclicIffQuasicyclic,
            z27.clone(),
            2,
            Mode::Random { seed: 0x1002, count: 40 },
        ),
        CheckPlan::new(
            ClaimId::CyclicCorrespondence,
            z8.clone(),
            3,
            Mode::Random { seed: 0x1003, count: 40 },
        ),
        CheckPlan::new(
            ClaimId::CyclicCorrespondence,
            z27.clone(),
            2,
            Mode::Random { seed: 0x1004, count: 40 },
        ),
        CheckPlan::new(
            ClaimId::PlusCorrespondenceLiteral,
            z8.clone(),
            3,
            Mode::Random { seed: 0x1005, count: 40 },
        )
        .arbitrated(),
        CheckPlan::new(
            ClaimId::PlusCorrespondenceLiteral,
            z27.clone(),
            2,
            Mode::Exhaustive,
        )
        .with_code(separating_code.clone())
        .arbitrated(),
        CheckPlan::new(
            ClaimId::PlusCorrespondenceCorrected,
            z27.clone(),
            2,
            Mode::Exhaustive,
        )
        .with_code(separating_code),
        CheckPlan::new(
            ClaimId::PlusCorrespondenceCorrected,
            z8.clone(),
            3,
            Mode::Random { seed: 0x1007, count: 40 },
        ),
        CheckPlan::new(
            ClaimId::PlusCorrespondenceCorrected,
            z27.clone(),
            2,
            Mode::Random { seed: 0x1008, count: 40 },
        ),
        CheckPlan::new(
            ClaimId::DistanceInvariance,
            z8,
            3,
            Mode::Random { seed: 0x1009, count: 12 },
        ),
        CheckPlan::new(
            ClaimId::DistanceInvariance,
            z27,
            2,
            Mode::Random { seed: 0x100A, count: 12 },
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z8() -> ChainRing {
        ChainRing::integer_modular(2, 2).unwrap()
    }

    fn z27() -> ChainRing {
        ChainRing::integer_modular(3, 2).unwrap()
    }

    #[test]
    fn claim_names_round_trip() {
        for claim in ClaimId::ALL {
            assert_eq!(ClaimId::parse(claim.name()), Some(claim));
        }
        assert_eq!(ClaimId::parse("nope"), None);
    }

    #[test]
    fn isometry_holds_exhaustively_on_z8_pairs() {
        let plan = CheckPlan::new(ClaimId::Isometry, z8(), 2, Mode::Exhaustive);
        let report = run_check(&plan).unwrap();
        assert_eq!(report.examined, 4096);
        assert!(report.holds());
        assert_eq!(report.verdict(), "pass");
    }

    #[test]
    fn exhaustive_checks_respect_the_eval_cap() {
        let plan =
            CheckPlan::new(ClaimId::Isometry, z8(), 2, Mode::Exhaustive).with_eval_cap(100);
        assert!(matches!(
            run_check(&plan).unwrap_err(),
            Error::CapExceeded { cap: 100, .. }
        ));
    }

    #[test]
    fn twist_commutation_holds_and_wrong_parameter_is_caught() {
        let plan = CheckPlan::new(ClaimId::GrayTwist, z27(), 2, Mode::Exhaustive);
        let report = run_check(&plan).unwrap();
        assert_eq!(report.examined, 729);
        assert!(report.holds());

        // Mutated permutation parameter: the harness must notice.
        let broken = CheckPlan::new(ClaimId::GrayTwist, z27(), 2, Mode::Exhaustive)
            .with_nprime_override(1);
        let report = run_check(&broken).unwrap();
        assert!(!report.holds());
        assert!(report.failure_count > 0);
        assert!(!report.failures.is_empty());
    }

    #[test]
    fn random_mode_is_reproducible() {
        let plan = || {
            CheckPlan::new(
                ClaimId::ConstacyclicIffQuasicyclic,
                z27(),
                2,
                Mode::Random {
                    seed: 7,
                    count: 10,
                },
            )
        };
        let a = run_check(&plan()).unwrap();
        let b = run_check(&plan()).unwrap();
        assert_eq!(a.examined, b.examined);
        assert_eq!(a.failure_count, b.failure_count);
        assert_eq!(a.notes, b.notes);
        assert!(a.holds());
    }

    #[test]
    fn code_level_claims_reject_exhaustive_mode() {
        let plan = CheckPlan::new(ClaimId::CyclicCorrespondence, z8(), 3, Mode::Exhaustive);
        assert!(matches!(
            run_check(&plan).unwrap_err(),
            Error::InvalidPlan(_)
        ));
    }

    #[test]
    fn literal_plus_reading_is_refuted_on_z27() {
        let ring = z27();
        let gen = vec![ring.element(1).unwrap(), ring.element(10).unwrap()];
        let code = Code::new(ring.clone(), 2, UnitSpec::OnePlusSocleGen, vec![gen]).unwrap();
        let literal = CheckPlan::new(
            ClaimId::PlusCorrespondenceLiteral,
            ring.clone(),
            2,
            Mode::Exhaustive,
        )
        .with_code(code.clone())
        .arbitrated();
        let report = run_check(&literal).unwrap();
        assert_eq!(report.verdict(), "refuted");
        assert!(report.passes_gate());

        let corrected = CheckPlan::new(
            ClaimId::PlusCorrespondenceCorrected,
            ring,
            2,
            Mode::Exhaustive,
        )
        .with_code(code);
        let report = run_check(&corrected).unwrap();
        assert_eq!(report.verdict(), "pass");
    }

    #[test]
    fn desk_suite_is_green() {
        let reports = run_suite(&desk_suite()).unwrap();
        assert!(suite_passes(&reports));
        // The arbitrated literal reading must actually be refuted on Z_27,
        // where the two candidate units differ: the suite pins the
        // separating code <(1,10)>.
        let literal_z27 = reports
            .iter()
            .find(|r| r.claim == ClaimId::PlusCorrespondenceLiteral && r.ring == "Z_27")
            .expect("plan exists");
        assert_eq!(literal_z27.verdict(), "refuted");
        // The corrected reading passes on that same code.
        let corrected_explicit = reports
            .iter()
            .find(|r| {
                r.claim == ClaimId::PlusCorrespondenceCorrected
                    && r.ring == "Z_27"
                    && r.mode == Mode::Exhaustive
            })
            .expect("plan exists");
        assert_eq!(corrected_explicit.verdict(), "pass");
        // On Z_8 the units coincide, so the literal reading survives there.
        let literal_z8 = reports
            .iter()
            .find(|r| r.claim == ClaimId::PlusCorrespondenceLiteral && r.ring == "Z_8")
            .expect("plan exists");
        assert_eq!(literal_z8.verdict(), "holds");
        // Everything non-arbitrated passes outright.
        for r in &reports {
            if r.expectation == Expectation::Holds {
                assert!(r.holds(), "{} on {} failed", r.claim.name(), r.ring);
            }
        }
    }
}
