//! Acceptance gate for the whole crate: eight criteria, each printing one
//! pass/fail line (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! The criteria pin down, in order: the Gray isometry, the two commutation
//! identities, the constacyclic/quasicyclic correspondence, the cyclic
//! correspondence through the twist, the classical nilpotency-2 anchor
//! case, the arbitration between the two readings of the
//! plus-correspondence, and the agreement of the two independent ideal
//! characterisations on every code these criteria enumerate.

use std::collections::BTreeSet;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use graychain::codes::{
    gray_image_set, is_constacyclic, is_ideal, is_linear, min_homogeneous_distance, span,
    word_for_index, Code, CodewordSet, FieldCode,
};
use graychain::gray::{
    gray, gray_length, hamming_distance, homogeneous_distance, homogeneous_weight,
};
use graychain::shifts::{constacyclic_shift, nechaev_blocks, Twist, UnitSpec};
use graychain::verify::{
    run_check, sample_plain_generators, sample_shift_closed_generators, CheckPlan, ClaimId, Mode,
};
use graychain::{ChainRing, FieldElem, RingElem};

const SEED_NON_CONSTACYCLIC: u64 = 0xACC0_0004;
const SEED_CYCLIC_Z8: u64 = 0xACC0_0051;
const SEED_CYCLIC_Z27: u64 = 0xACC0_0052;
const SEED_NON_CYCLIC_Z8: u64 = 0xACC0_0053;
const SEED_NON_CYCLIC_Z27: u64 = 0xACC0_0054;
const SEED_PLUS_SAMPLES: u64 = 0xACC0_0007;
const PLUS_SAMPLE_COUNT: u64 = 24;
const ENUM_CAP: u64 = 1 << 16;

fn z4() -> ChainRing {
    ChainRing::integer_modular(2, 1).unwrap()
}

fn z8() -> ChainRing {
    ChainRing::integer_modular(2, 2).unwrap()
}

fn z27() -> ChainRing {
    ChainRing::integer_modular(3, 2).unwrap()
}

fn f4u3() -> ChainRing {
    ChainRing::truncated_polynomial(2, 2, 2, Some(&[1, 1, 1])).unwrap()
}

fn conclude(name: &str, problems: Vec<String>) {
    if problems.is_empty() {
        println!("[acceptance] {name}: PASS");
    } else {
        println!("[acceptance] {name}: FAIL");
        for p in &problems {
            println!("  - {p}");
        }
        panic!("{name}: {} problem(s)", problems.len());
    }
}

fn all_words(ring: &ChainRing, n: usize) -> Vec<Vec<RingElem>> {
    let total = ring.size().pow(n as u32);
    (0..total).map(|i| word_for_index(ring, n, i)).collect()
}

#[test]
fn criterion_1_isometry_on_all_pairs() {
    let start = Instant::now();
    let mut problems = Vec::new();
    for (ring, n, expected_pairs) in [(z8(), 2usize, 4096u64), (z27(), 1, 729)] {
        let words = all_words(&ring, n);
        let images: Vec<Vec<FieldElem>> = words.iter().map(|w| gray(&ring, w)).collect();
        let mut pairs = 0u64;
        for (x, gx) in words.iter().zip(&images) {
            for (y, gy) in words.iter().zip(&images) {
                pairs += 1;
                let hom = homogeneous_distance(&ring, x, y).unwrap();
                let ham = hamming_distance(gx, gy).unwrap();
                if hom != ham {
                    problems.push(format!(
                        "{}: pair ({x:?}, {y:?}) has homogeneous distance {hom} but Hamming {ham}",
                        ring.describe()
                    ));
                }
            }
        }
        if pairs != expected_pairs {
            problems.push(format!(
                "{}: visited {pairs} ordered pairs, expected {expected_pairs}",
                ring.describe()
            ));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 5.0 {
        problems.push(format!("took {elapsed:?}, budget is 5 s"));
    }
    conclude("criterion 1 (Gray map is an isometry on all ordered pairs)", problems);
}

#[test]
fn criterion_2_shift_commutation_exhaustive() {
    let start = Instant::now();
    let mut problems = Vec::new();
    for (ring, n, expected_words, expected_len) in [
        (z8(), 3usize, 512u64, 12usize),
        (z27(), 2, 729, 18),
        (f4u3(), 2, 4096, 32),
    ] {
        let lambda = UnitSpec::OneMinusSocleGen.resolve(&ring).unwrap();
        let mut seen = 0u64;
        for word in all_words(&ring, n) {
            seen += 1;
            let image = gray(&ring, &word);
            if image.len() != expected_len {
                problems.push(format!(
                    "{}: image length {} instead of {expected_len}",
                    ring.describe(),
                    image.len()
                ));
                break;
            }
            let lhs = gray(&ring, &constacyclic_shift(&ring, &word, lambda).unwrap());
            let rhs = graychain::shifts::block_shift(&ring, &image, n).unwrap();
            if lhs != rhs {
                problems.push(format!(
                    "{}: commutation fails on {word:?}",
                    ring.describe()
                ));
            }
        }
        if seen != expected_words {
            problems.push(format!(
                "{}: visited {seen} words, expected {expected_words}",
                ring.describe()
            ));
        }
    }
    let elapsed = start.elapsed();
    if elapsed.as_secs_f64() >= 30.0 {
        problems.push(format!("took {elapsed:?}, budget is 30 s"));
    }
    conclude(
        "criterion 2 (Gray interchanges constacyclic shift and block shift, exhaustively)",
        problems,
    );
}

#[test]
fn criterion_3_twist_commutation_exhaustive() {
    let mut problems = Vec::new();
    for (ring, n, expected_nprime) in [(z8(), 3usize, 1u32), (z27(), 2, 2)] {
        let twist = Twist::new(&ring, n).unwrap();
        if twist.nprime() != expected_nprime {
            problems.push(format!(
                "{}: computed n' = {}, expected {expected_nprime}",
                ring.describe(),
                twist.nprime()
            ));
        }
        for word in all_words(&ring, n) {
            let image = gray(&ring, &word);
            let once = gray(&ring, &twist.apply(&ring, &word).unwrap());
            let perm_once = nechaev_blocks(&ring, &image, n, twist.nprime()).unwrap();
            if once != perm_once {
                problems.push(format!(
                    "{}: single twist fails on {word:?}",
                    ring.describe()
                ));
            }
            let twice = gray(&ring, &twist.apply_squared(&ring, &word).unwrap());
            let perm_twice = nechaev_blocks(&ring, &perm_once, n, twist.nprime()).unwrap();
            if twice != perm_twice {
                problems.push(format!(
                    "{}: squared twist fails on {word:?}",
                    ring.describe()
                ));
            }
        }
    }
    conclude(
        "criterion 3 (Gray interchanges twist and blockwise Nechaev permutation, exhaustively)",
        problems,
    );
}

/// The reference code for criterion 4: {0, 4}^3 over Z_8, generated by the
/// three socle unit vectors.
fn socle_cube() -> Code {
    let ring = z8();
    let gens = vec![
        vec![ring.element(4).unwrap(), ring.element(0).unwrap(), ring.element(0).unwrap()],
        vec![ring.element(0).unwrap(), ring.element(4).unwrap(), ring.element(0).unwrap()],
        vec![ring.element(0).unwrap(), ring.element(0).unwrap(), ring.element(4).unwrap()],
    ];
    Code::new(ring, 3, UnitSpec::OneMinusSocleGen, gens).unwrap()
}

/// Deterministically sample spans of unstructured generators until `want`
/// of them fail the `lambda` shift-closure test.
fn collect_non_closed_samples(
    ring: &ChainRing,
    n: usize,
    lambda: RingElem,
    seed: u64,
    want: usize,
) -> Vec<CodewordSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < want {
        attempts += 1;
        assert!(attempts < 500, "sampler failed to find enough non-closed codes");
        let gens = sample_plain_generators(&mut rng, ring, n);
        let set = span(ring, n, &gens, ENUM_CAP).unwrap();
        if !is_constacyclic(ring, &set, lambda).unwrap() {
            out.push(set);
        }
    }
    out
}

fn collect_closed_samples(
    ring: &ChainRing,
    n: usize,
    lambda: RingElem,
    seed: u64,
    want: usize,
) -> Vec<CodewordSet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..want)
        .map(|_| {
            let gens = sample_shift_closed_generators(&mut rng, ring, n, lambda).unwrap();
            span(ring, n, &gens, ENUM_CAP).unwrap()
        })
        .collect()
}

fn image_of(ring: &ChainRing, n: usize, set: &CodewordSet) -> FieldCode {
    FieldCode::new(
        ring.field().clone(),
        gray_length(ring, n),
        gray_image_set(ring, set),
    )
    .unwrap()
}

#[test]
fn criterion_4_constacyclic_iff_quasicyclic() {
    let mut problems = Vec::new();
    let code = socle_cube();
    let ring = code.ring().clone();
    let lambda = code.lambda();
    let set = code.enumerate(ENUM_CAP).unwrap();

    if set.len() != 8 {
        problems.push(format!("reference code has {} words, expected 8", set.len()));
    }
    if !is_ideal(&ring, &set, lambda).unwrap() {
        problems.push("reference code is not an ideal for 1 - g^e".into());
    }
    let image = image_of(&ring, 3, &set);
    if image.word_count() != 8 || image.len() != 12 {
        problems.push(format!(
            "image has {} words of length {}, expected 8 of length 12",
            image.word_count(),
            image.len()
        ));
    }
    if !image.is_quasicyclic(&ring, 3).unwrap() {
        problems.push("image of the reference code is not quasicyclic".into());
    }
    if !image.is_distance_invariant() {
        problems.push("image of the reference code is not distance invariant".into());
    }

    // Minimum distances, with library results cross-checked against plain
    // pairwise brute force here.
    let words: Vec<&Vec<RingElem>> = set.iter().collect();
    let mut brute_hom = u64::MAX;
    for (i, a) in words.iter().enumerate() {
        for b in &words[i + 1..] {
            brute_hom = brute_hom.min(homogeneous_distance(&ring, a.as_slice(), b.as_slice()).unwrap());
        }
    }
    let image_words: Vec<&Vec<FieldElem>> = image.words().iter().collect();
    let mut brute_ham = u64::MAX;
    for (i, a) in image_words.iter().enumerate() {
        for b in &image_words[i + 1..] {
            brute_ham = brute_ham.min(hamming_distance(a.as_slice(), b.as_slice()).unwrap());
        }
    }
    let lib_hom = min_homogeneous_distance(&ring, &set).unwrap();
    let lib_ham = image.min_hamming_distance().unwrap();
    for (label, value) in [
        ("brute-force homogeneous", brute_hom),
        ("library homogeneous", lib_hom),
        ("brute-force Hamming", brute_ham),
        ("library Hamming", lib_ham),
    ] {
        if value != 4 {
            problems.push(format!("{label} minimum distance is {value}, expected 4"));
        }
    }

    // Only-if direction: shift-open codes must have shift-open images.
    let samples = collect_non_closed_samples(&ring, 3, lambda, SEED_NON_CONSTACYCLIC, 20);
    if samples.len() < 20 {
        problems.push("fewer than 20 non-constacyclic samples".into());
    }
    for (i, sample) in samples.iter().enumerate() {
        if image_of(&ring, 3, sample).is_quasicyclic(&ring, 3).unwrap() {
            problems.push(format!(
                "non-constacyclic sample {i} has a quasicyclic image"
            ));
        }
    }
    conclude(
        "criterion 4 (constacyclic iff quasicyclic image, reference code + 20 negative samples)",
        problems,
    );
}

#[test]
fn criterion_5_cyclic_correspondence_both_directions() {
    let mut problems = Vec::new();
    for (ring, n, seed_cyc, seed_non) in [
        (z8(), 3usize, SEED_CYCLIC_Z8, SEED_NON_CYCLIC_Z8),
        (z27(), 2, SEED_CYCLIC_Z27, SEED_NON_CYCLIC_Z27),
    ] {
        let one = ring.one();
        let minus = UnitSpec::OneMinusSocleGen.resolve(&ring).unwrap();
        let twist = Twist::new(&ring, n).unwrap();

        // Forward: cyclic codes twist into (1-g^e)-constacyclic codes and
        // their permuted images are quasicyclic.
        let cyclic = collect_closed_samples(&ring, n, one, seed_cyc, 20);
        for (i, set) in cyclic.iter().enumerate() {
            if !is_constacyclic(&ring, set, one).unwrap() {
                problems.push(format!("{}: sample {i} is not cyclic", ring.describe()));
                continue;
            }
            let twisted: CodewordSet = set
                .iter()
                .map(|w| twist.apply(&ring, w).unwrap())
                .collect();
            if !is_constacyclic(&ring, &twisted, minus).unwrap() {
                problems.push(format!(
                    "{}: twist of cyclic sample {i} is not (1-g^e)-constacyclic",
                    ring.describe()
                ));
            }
            let permuted: BTreeSet<Vec<FieldElem>> = gray_image_set(&ring, set)
                .iter()
                .map(|w| nechaev_blocks(&ring, w, n, twist.nprime()).unwrap())
                .collect();
            let fc = FieldCode::new(ring.field().clone(), gray_length(&ring, n), permuted).unwrap();
            if !fc.is_quasicyclic(&ring, n).unwrap() {
                problems.push(format!(
                    "{}: permuted image of cyclic sample {i} is not quasicyclic",
                    ring.describe()
                ));
            }
        }

        // Reverse: non-cyclic codes must fail both derived properties.
        let non_cyclic = collect_non_closed_samples(&ring, n, one, seed_non, 20);
        for (i, set) in non_cyclic.iter().enumerate() {
            let twisted: CodewordSet = set
                .iter()
                .map(|w| twist.apply(&ring, w).unwrap())
                .collect();
            if is_constacyclic(&ring, &twisted, minus).unwrap() {
                problems.push(format!(
                    "{}: twist of non-cyclic sample {i} is (1-g^e)-constacyclic",
                    ring.describe()
                ));
            }
            let permuted: BTreeSet<Vec<FieldElem>> = gray_image_set(&ring, set)
                .iter()
                .map(|w| nechaev_blocks(&ring, w, n, twist.nprime()).unwrap())
                .collect();
            let fc = FieldCode::new(ring.field().clone(), gray_length(&ring, n), permuted).unwrap();
            if fc.is_quasicyclic(&ring, n).unwrap() {
                problems.push(format!(
                    "{}: permuted image of non-cyclic sample {i} is quasicyclic",
                    ring.describe()
                ));
            }
        }
    }
    conclude(
        "criterion 5 (cyclic correspondence via twist and permuted image, 20 samples per direction per ring)",
        problems,
    );
}

#[test]
fn criterion_6_classical_quaternary_anchor() {
    let mut problems = Vec::new();
    let ring = z4();
    let expect: [(u64, [u32; 2], u64); 4] = [
        (0, [0, 0], 0),
        (1, [0, 1], 1),
        (2, [1, 1], 2),
        (3, [1, 0], 1),
    ];
    for (value, image, weight) in expect {
        let r = ring.element(value).unwrap();
        let img: Vec<u32> = gray(&ring, &[r]).iter().map(|c| c.encoding()).collect();
        if img != image {
            problems.push(format!("image of {value} is {img:?}, expected {image:?}"));
        }
        let w = homogeneous_weight(&ring, r);
        if w != weight {
            problems.push(format!("weight of {value} is {w}, expected {weight}"));
        }
    }
    if !ring.nilpotency_two() {
        problems.push("Z_4 should report the nilpotency-2 flag".into());
    }
    conclude(
        "criterion 6 (classical quaternary Gray map and weights as the e = 1 anchor)",
        problems,
    );
}

#[test]
fn criterion_7_plus_correspondence_arbitration() {
    let mut problems = Vec::new();
    let ring = z27();
    let separating = Code::new(
        ring.clone(),
        2,
        UnitSpec::OnePlusSocleGen,
        vec![vec![ring.element(1).unwrap(), ring.element(10).unwrap()]],
    )
    .unwrap();

    // Corrected reading: green on random samples and on the separating code.
    let sampled = CheckPlan::new(
        ClaimId::PlusCorrespondenceCorrected,
        ring.clone(),
        2,
        Mode::Random {
            seed: SEED_PLUS_SAMPLES,
            count: PLUS_SAMPLE_COUNT,
        },
    );
    let report = run_check(&sampled).unwrap();
    if !report.holds() {
        problems.push(format!(
            "corrected reading failed on {} of {} sampled codes",
            report.failure_count, report.examined
        ));
    }
    let explicit = CheckPlan::new(
        ClaimId::PlusCorrespondenceCorrected,
        ring.clone(),
        2,
        Mode::Exhaustive,
    )
    .with_code(separating.clone());
    let report = run_check(&explicit).unwrap();
    if !report.holds() {
        problems.push("corrected reading failed on the separating code".into());
    }

    // Literal reading: arbitrated, and refuted by the separating code.
    let literal = CheckPlan::new(
        ClaimId::PlusCorrespondenceLiteral,
        ring.clone(),
        2,
        Mode::Exhaustive,
    )
    .with_code(separating)
    .arbitrated();
    let report = run_check(&literal).unwrap();
    println!(
        "[acceptance] criterion 7 note: literal reading verdict on {} is '{}' ({} counterexample(s))",
        ring.describe(),
        report.verdict(),
        report.failure_count
    );
    if report.verdict() != "refuted" {
        problems.push(format!(
            "literal reading was expected to be refuted on Z_27, got '{}'",
            report.verdict()
        ));
    }
    if !report.passes_gate() {
        problems.push("arbitrated refutation must not fail the gate".into());
    }
    conclude(
        "criterion 7 (corrected plus-correspondence passes; literal reading recorded as refuted)",
        problems,
    );
}

#[test]
fn criterion_8_ideal_test_agreement_everywhere() {
    // Replays every code enumerated by criteria 4, 5, and 7 (same seeds,
    // same samplers) plus their twisted variants, and checks that the
    // polynomial ideal test agrees with linearity + shift closure for all
    // three named units.
    let mut problems = Vec::new();
    let mut collected: Vec<(ChainRing, CodewordSet)> = Vec::new();

    let code = socle_cube();
    let z8_ring = code.ring().clone();
    let lambda_minus_z8 = code.lambda();
    collected.push((z8_ring.clone(), code.enumerate(ENUM_CAP).unwrap()));
    for set in collect_non_closed_samples(&z8_ring, 3, lambda_minus_z8, SEED_NON_CONSTACYCLIC, 20) {
        collected.push((z8_ring.clone(), set));
    }

    for (ring, n, seed_cyc, seed_non) in [
        (z8(), 3usize, SEED_CYCLIC_Z8, SEED_NON_CYCLIC_Z8),
        (z27(), 2, SEED_CYCLIC_Z27, SEED_NON_CYCLIC_Z27),
    ] {
        let one = ring.one();
        let twist = Twist::new(&ring, n).unwrap();
        for set in collect_closed_samples(&ring, n, one, seed_cyc, 20)
            .into_iter()
            .chain(collect_non_closed_samples(&ring, n, one, seed_non, 20))
        {
            let twisted: CodewordSet = set
                .iter()
                .map(|w| twist.apply(&ring, w).unwrap())
                .collect();
            collected.push((ring.clone(), set));
            collected.push((ring.clone(), twisted));
        }
    }

    // Criterion 7's sampled codes: same alternation the harness uses.
    let ring = z27();
    let plus = UnitSpec::OnePlusSocleGen.resolve(&ring).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED_PLUS_SAMPLES);
    for i in 0..PLUS_SAMPLE_COUNT {
        let gens = if i % 2 == 1 {
            sample_shift_closed_generators(&mut rng, &ring, 2, plus).unwrap()
        } else {
            sample_plain_generators(&mut rng, &ring, 2)
        };
        collected.push((ring.clone(), span(&ring, 2, &gens, ENUM_CAP).unwrap()));
    }
    let separating = span(
        &ring,
        2,
        &[vec![ring.element(1).unwrap(), ring.element(10).unwrap()]],
        ENUM_CAP,
    )
    .unwrap();
    collected.push((ring.clone(), separating));

    let mut checked = 0u64;
    for (ring, set) in &collected {
        for unit in [
            UnitSpec::One,
            UnitSpec::OneMinusSocleGen,
            UnitSpec::OnePlusSocleGen,
        ] {
            let lam = unit.resolve(ring).unwrap();
            let via_polynomials = is_ideal(ring, set, lam).unwrap();
            let via_closure = is_linear(ring, set) && is_constacyclic(ring, set, lam).unwrap();
            checked += 1;
            if via_polynomials != via_closure {
                problems.push(format!(
                    "{}: ideal test disagreement (unit {}) on a {}-word code",
                    ring.describe(),
                    lam.encoding(),
                    set.len()
                ));
            }
        }
    }
    println!("[acceptance] criterion 8 note: {checked} (code, unit) pairs compared across {} codes", collected.len());
    conclude(
        "criterion 8 (polynomial ideal test agrees with linearity + shift closure on every enumerated code)",
        problems,
    );
}
