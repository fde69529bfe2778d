//! Command-line front end for the `graychain` library.
//!
//! Exit codes: `0` success, `1` verification failure (a failed gate, a
//! distance mismatch, or a Gray preimage that does not exist), `2` usage
//! error (bad flags, malformed spec files, exceeded caps).

mod report;
mod spec;

use std::fs;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use graychain::codes::{
    is_constacyclic, is_ideal, is_linear, min_homogeneous_distance, Code, DEFAULT_ENUM_CAP,
};
use graychain::gray::{gray, gray_inverse, hamming_weight, homogeneous_weight_word};
use graychain::shifts::{
    block_shift, constacyclic_shift, least_positive_inverse, nechaev_blocks, nechaev_permutation,
    Twist,
};
use graychain::verify::{desk_suite, run_check, run_suite, CheckPlan, ClaimId, Mode};
use graychain::RingElem;

use report::{
    join, AnalyzeDoc, DistanceDoc, GrayDoc, GrayInverseDoc, ImageDoc, PermDoc, ReportDoc,
    RingInfoDoc, ShiftDoc, VerifyDoc,
};

const DEFAULT_SEED: u64 = 0xC0FFEE;
const DEFAULT_SAMPLE_COUNT: u64 = 40;

#[derive(Parser)]
#[command(
    name = "graychain",
    version,
    about = "Gray maps, homogeneous weights, and shift correspondences over finite chain rings"
)]
struct Cli {
    /// Print the result document as JSON on stdout
    #[arg(long, global = true)]
    json: bool,

    /// Also write the JSON document to DIR/<subcommand>.json
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ShiftOp {
    /// Constacyclic shift of a ring word (uses --unit, default 1)
    Nu,
    /// Blockwise right rotation of a Gray-image word (uses --n)
    Sigma,
    /// Coordinate twist of a ring word by powers of 1 + n'·g^e
    Mu,
    /// The twist applied twice
    Mu2,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Exhaustive,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Describe a chain ring: sizes, digits, ideal chain, residue field
    RingInfo {
        /// Ring preset (z4|z8|z27|f4u3) or path to a ring-spec JSON file
        #[arg(long)]
        ring: String,
    },
    /// Map a ring word to its Gray image over the residue field
    Gray {
        #[arg(long)]
        ring: String,
        /// Comma-separated element encodings, e.g. 1,2,0
        #[arg(long)]
        word: String,
        /// Ring-word length; must match the word if given
        #[arg(long)]
        n: Option<usize>,
    },
    /// Recover the ring word mapping to a given Gray-image word
    GrayInverse {
        #[arg(long)]
        ring: String,
        /// Ring-word length (the image must have q^e times this length)
        #[arg(long)]
        n: usize,
        /// Comma-separated residue field symbols
        #[arg(long)]
        word: String,
    },
    /// Apply a shift operator to a word
    Shift {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        op: ShiftOp,
        #[arg(long)]
        word: String,
        /// Shift unit for --op nu: 1 | 1-g^e | 1+g^e | custom:<encoding>
        #[arg(long)]
        unit: Option<String>,
        /// Ring-word length; required for sigma, optional elsewhere
        #[arg(long)]
        n: Option<usize>,
    },
    /// Print the Nechaev permutation table, optionally applying it blockwise
    Perm {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        n: usize,
        /// Override the least positive inverse of n modulo p
        #[arg(long)]
        nprime: Option<u32>,
        /// Gray-image word to permute blockwise
        #[arg(long)]
        word: Option<String>,
    },
    /// Enumerate a code and report its structural properties
    Analyze {
        /// Code-spec JSON file (full document or bare generator matrix)
        #[arg(long)]
        generators: PathBuf,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        unit: Option<String>,
        /// Enumeration size cap
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Minimum homogeneous distance of a code and Hamming distance of its image
    Distance {
        #[arg(long)]
        generators: PathBuf,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        unit: Option<String>,
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Run correspondence checks (the built-in suite, one claim, or all claims)
    Verify {
        /// Named built-in suite ('desk'); also the default with no --claim
        #[arg(long)]
        suite: Option<String>,
        /// Claim name (see --list) or 'all'; omit to run the built-in suite
        #[arg(long)]
        claim: Option<String>,
        #[arg(long)]
        ring: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// exhaustive (word-level claims) or random (default for code-level)
        #[arg(long)]
        mode: Option<ModeArg>,
        #[arg(long)]
        seed: Option<u64>,
        /// Number of random samples
        #[arg(long)]
        count: Option<u64>,
        /// Evaluation and enumeration cap
        #[arg(long)]
        cap: Option<u64>,
        /// Attach an explicit code (code-level claims only)
        #[arg(long)]
        generators: Option<PathBuf>,
        /// Unit for the attached code
        #[arg(long)]
        unit: Option<String>,
        /// Deliberately wrong n' for the twist claims (harness self-test)
        #[arg(long)]
        nprime: Option<u32>,
        /// Print notes and counterexamples for passing checks too
        #[arg(long)]
        verbose: bool,
        /// List the available claims and exit
        #[arg(long)]
        list: bool,
    },
}

fn main() {
    match run() {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            std::process::exit(2);
        }
    }
}

struct Emit {
    json: bool,
    out: Option<PathBuf>,
}

impl Emit {
    fn emit<T: Serialize>(&self, name: &str, doc: &T, text: &str) -> Result<()> {
        if self.json {
            println!("{}", serde_json::to_string_pretty(doc)?);
        } else {
            print!("{text}");
        }
        if let Some(dir) = &self.out {
            fs::create_dir_all(dir)
                .with_context(|| format!("creating output directory {}", dir.display()))?;
            let path = dir.join(format!("{name}.json"));
            fs::write(&path, serde_json::to_string_pretty(doc)?)
                .with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {}", path.display());
        }
        Ok(())
    }
}

fn encodings(word: &[RingElem]) -> Vec<u64> {
    word.iter().map(|r| r.encoding()).collect()
}

fn field_encodings(word: &[graychain::FieldElem]) -> Vec<u64> {
    word.iter().map(|c| u64::from(c.encoding())).collect()
}

fn run() -> Result<i32> {
    let cli = Cli::parse();
    let emit = Emit {
        json: cli.json,
        out: cli.out.clone(),
    };
    match cli.command {
        Command::RingInfo { ring } => {
            let ring = spec::load_ring(&ring)?;
            let doc = RingInfoDoc::new(&ring);
            emit.emit("ring-info", &doc, &doc.render())?;
            Ok(0)
        }
        Command::Gray { ring, word, n } => {
            let ring = spec::load_ring(&ring)?;
            let word = spec::parse_ring_word(&ring, &word)?;
            if n.is_some_and(|n| n != word.len()) {
                bail!("--n disagrees with the word length {}", word.len());
            }
            let image = gray(&ring, &word);
            let doc = GrayDoc {
                ring: ring.describe(),
                n: word.len(),
                word: encodings(&word),
                image: field_encodings(&image),
                image_length: image.len(),
                homogeneous_weight: homogeneous_weight_word(&ring, &word),
                image_hamming_weight: hamming_weight(&image),
            };
            emit.emit("gray", &doc, &format!("{}\n", join(&doc.image)))?;
            Ok(0)
        }
        Command::GrayInverse { ring, n, word } => {
            let ring = spec::load_ring(&ring)?;
            let image = spec::parse_field_word(&ring, &word)?;
            let preimage = gray_inverse(&ring, &image, n)?;
            let doc = GrayInverseDoc {
                ring: ring.describe(),
                n,
                image: field_encodings(&image),
                preimage: preimage.as_deref().map(encodings),
            };
            match &doc.preimage {
                Some(w) => {
                    emit.emit("gray-inverse", &doc, &format!("{}\n", join(w)))?;
                    Ok(0)
                }
                None => {
                    emit.emit("gray-inverse", &doc, "")?;
                    eprintln!("no preimage: the word is not in the image of the Gray map");
                    Ok(1)
                }
            }
        }
        Command::Shift {
            ring,
            op,
            word,
            unit,
            n,
        } => {
            let ring = spec::load_ring(&ring)?;
            if !matches!(op, ShiftOp::Nu) && unit.is_some() {
                bail!("--unit only applies to --op nu; the twist fixes its own unit");
            }
            let doc = match op {
                ShiftOp::Nu => {
                    let word = spec::parse_ring_word(&ring, &word)?;
                    if n.is_some_and(|n| n != word.len()) {
                        bail!("--n disagrees with the word length {}", word.len());
                    }
                    let lambda =
                        spec::parse_unit(&ring, unit.as_deref().unwrap_or("1"))?.resolve(&ring)?;
                    let out = constacyclic_shift(&ring, &word, lambda)?;
                    ShiftDoc {
                        ring: ring.describe(),
                        op: "nu".into(),
                        n: word.len(),
                        unit: Some(lambda.encoding()),
                        nprime: None,
                        input: encodings(&word),
                        output: encodings(&out),
                    }
                }
                ShiftOp::Sigma => {
                    let Some(n) = n else {
                        bail!("--op sigma needs --n (the ring-word length behind the image)")
                    };
                    let image = spec::parse_field_word(&ring, &word)?;
                    let out = block_shift(&ring, &image, n)?;
                    ShiftDoc {
                        ring: ring.describe(),
                        op: "sigma".into(),
                        n,
                        unit: None,
                        nprime: None,
                        input: field_encodings(&image),
                        output: field_encodings(&out),
                    }
                }
                ShiftOp::Mu | ShiftOp::Mu2 => {
                    let word = spec::parse_ring_word(&ring, &word)?;
                    if n.is_some_and(|n| n != word.len()) {
                        bail!("--n disagrees with the word length {}", word.len());
                    }
                    let twist = Twist::new(&ring, word.len())?;
                    let (name, out) = match op {
                        ShiftOp::Mu => ("mu", twist.apply(&ring, &word)?),
                        _ => ("mu2", twist.apply_squared(&ring, &word)?),
                    };
                    ShiftDoc {
                        ring: ring.describe(),
                        op: name.into(),
                        n: word.len(),
                        unit: Some(twist.unit().encoding()),
                        nprime: Some(twist.nprime()),
                        input: encodings(&word),
                        output: encodings(&out),
                    }
                }
            };
            emit.emit("shift", &doc, &format!("{}\n", join(&doc.output)))?;
            Ok(0)
        }
        Command::Perm {
            ring,
            n,
            nprime,
            word,
        } => {
            let ring = spec::load_ring(&ring)?;
            let p = ring.p();
            let nprime = match nprime {
                Some(np) => {
                    if (u64::from(np) * n as u64) % u64::from(p) != 1 {
                        bail!("{np} is not an inverse of n = {n} modulo p = {p}");
                    }
                    np
                }
                None => least_positive_inverse(n, p)?,
            };
            let perm = nechaev_permutation(p, n, nprime);
            let (input, output) = match word {
                Some(text) => {
                    let image = spec::parse_field_word(&ring, &text)?;
                    let out = nechaev_blocks(&ring, &image, n, nprime)?;
                    (Some(field_encodings(&image)), Some(field_encodings(&out)))
                }
                None => (None, None),
            };
            let doc = PermDoc {
                ring: ring.describe(),
                p,
                n,
                nprime,
                points: perm.len(),
                table: perm.table().to_vec(),
                convention: "output[i] = input[table[i]]",
                input,
                output,
            };
            let mut text = format!(
                "points                  {}\nn'                      {}\ntable                   {}\nconvention              {}\n",
                doc.points,
                doc.nprime,
                doc.table
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(","),
                doc.convention
            );
            if let Some(out) = &doc.output {
                text.push_str(&format!("output                  {}\n", join(out)));
            }
            emit.emit("perm", &doc, &text)?;
            Ok(0)
        }
        Command::Analyze {
            generators,
            ring,
            n,
            unit,
            cap,
        } => {
            let resolved =
                spec::resolve_code(&generators, ring.as_deref(), n, unit.as_deref())?;
            let cap = cap.unwrap_or(DEFAULT_ENUM_CAP);
            let code = Code::new(
                resolved.ring.clone(),
                resolved.n,
                resolved.unit,
                resolved.generators.clone(),
            )?;
            let set = code.enumerate(cap)?;
            let image = code.gray_image(cap)?;
            let doc = AnalyzeDoc {
                ring: resolved.ring.describe(),
                n: resolved.n,
                unit: resolved.unit_label.clone(),
                unit_encoding: code.lambda().encoding(),
                generator_count: resolved.generators.len(),
                word_count: set.len(),
                linear: is_linear(&resolved.ring, &set),
                constacyclic: is_constacyclic(&resolved.ring, &set, code.lambda())?,
                ideal: is_ideal(&resolved.ring, &set, code.lambda())?,
                min_homogeneous_distance: if set.len() >= 2 {
                    Some(min_homogeneous_distance(&resolved.ring, &set)?)
                } else {
                    None
                },
                image: ImageDoc {
                    length: image.len(),
                    word_count: image.word_count(),
                    quasicyclic: image.is_quasicyclic(&resolved.ring, resolved.n)?,
                    distance_invariant: image.is_distance_invariant(),
                    min_hamming_distance: if image.word_count() >= 2 {
                        Some(image.min_hamming_distance()?)
                    } else {
                        None
                    },
                },
            };
            emit.emit("analyze", &doc, &doc.render())?;
            Ok(0)
        }
        Command::Distance {
            generators,
            ring,
            n,
            unit,
            cap,
        } => {
            let resolved =
                spec::resolve_code(&generators, ring.as_deref(), n, unit.as_deref())?;
            let cap = cap.unwrap_or(DEFAULT_ENUM_CAP);
            let code = Code::new(
                resolved.ring.clone(),
                resolved.n,
                resolved.unit,
                resolved.generators.clone(),
            )?;
            let set = code.enumerate(cap)?;
            let min_hom = min_homogeneous_distance(&resolved.ring, &set)?;
            let image = code.gray_image(cap)?;
            let min_ham = image.min_hamming_distance()?;
            let doc = DistanceDoc {
                ring: resolved.ring.describe(),
                n: resolved.n,
                word_count: set.len(),
                min_homogeneous_distance: min_hom,
                image_min_hamming_distance: min_ham,
                distances_agree: min_hom == min_ham,
            };
            let text = format!(
                "words                   {}\nmin homogeneous dist    {}\nimage min Hamming dist  {}\ndistances agree         {}\n",
                doc.word_count, min_hom, min_ham, doc.distances_agree
            );
            emit.emit("distance", &doc, &text)?;
            if doc.distances_agree {
                Ok(0)
            } else {
                eprintln!("verification failure: distances disagree under the Gray map");
                Ok(1)
            }
        }
        Command::Verify {
            suite,
            claim,
            ring,
            n,
            mode,
            seed,
            count,
            cap,
            generators,
            unit,
            nprime,
            verbose,
            list,
        } => {
            if list {
                let mut text = String::new();
                for c in ClaimId::ALL {
                    text.push_str(&format!("{:<32} {}\n", c.name(), c.summary()));
                }
                print!("{text}");
                return Ok(0);
            }
            if let Some(name) = &suite {
                if name != "desk" {
                    bail!("unknown suite '{name}'; the built-in suite is 'desk'");
                }
                if claim.is_some() {
                    bail!("give either --suite or --claim, not both");
                }
            }
            run_verify(
                &emit, claim, ring, n, mode, seed, count, cap, generators, unit, nprime, verbose,
            )
        }
    }
}

fn pick_mode(
    claim: ClaimId,
    mode: Option<ModeArg>,
    seed: Option<u64>,
    count: Option<u64>,
) -> Mode {
    let random = Mode::Random {
        seed: seed.unwrap_or(DEFAULT_SEED),
        count: count.unwrap_or(DEFAULT_SAMPLE_COUNT),
    };
    match mode {
        Some(ModeArg::Exhaustive) => Mode::Exhaustive,
        Some(ModeArg::Random) => random,
        None if claim.is_code_level() => random,
        None => Mode::Exhaustive,
    }
}

fn finish_plan(plan: CheckPlan, cap: Option<u64>) -> CheckPlan {
    // The literal plus-correspondence reading exists to be arbitrated: a
    // refutation is an answer, not a failed gate.
    let plan = if plan.claim == ClaimId::PlusCorrespondenceLiteral {
        plan.arbitrated()
    } else {
        plan
    };
    match cap {
        Some(c) => plan.with_eval_cap(c).with_enum_cap(c),
        None => plan,
    }
}

#[allow(clippy::too_many_arguments)]
fn run_verify(
    emit: &Emit,
    claim: Option<String>,
    ring: Option<String>,
    n: Option<usize>,
    mode: Option<ModeArg>,
    seed: Option<u64>,
    count: Option<u64>,
    cap: Option<u64>,
    generators: Option<PathBuf>,
    unit: Option<String>,
    nprime: Option<u32>,
    verbose: bool,
) -> Result<i32> {
    let Some(claim) = claim else {
        if ring.is_some() || n.is_some() || mode.is_some() || generators.is_some() {
            bail!("the built-in suite takes no further flags; give --claim to customize a run");
        }
        let reports = run_suite(&desk_suite())?;
        let doc = VerifyDoc::new(reports.iter().map(ReportDoc::new).collect());
        emit.emit("verify", &doc, &doc.render(verbose))?;
        return Ok(if doc.all_gates_passed { 0 } else { 1 });
    };

    let Some(ring_arg) = ring else {
        bail!("--claim needs --ring")
    };
    let ring = spec::load_ring(&ring_arg)?;
    let Some(n) = n else { bail!("--claim needs --n") };

    if claim == "all" {
        if generators.is_some() || nprime.is_some() {
            bail!("attach --generators or --nprime to a single --claim, not to 'all'");
        }
        let mut docs = Vec::new();
        for c in ClaimId::ALL {
            let plan = finish_plan(
                CheckPlan::new(c, ring.clone(), n, pick_mode(c, mode, seed, count)),
                cap,
            );
            match run_check(&plan) {
                Ok(report) => docs.push(ReportDoc::new(&report)),
                Err(err) => docs.push(ReportDoc::skipped(c, &ring, n, &err.to_string())),
            }
        }
        let doc = VerifyDoc::new(docs);
        emit.emit("verify", &doc, &doc.render(verbose))?;
        return Ok(if doc.all_gates_passed { 0 } else { 1 });
    }

    let Some(claim) = ClaimId::parse(&claim) else {
        let names: Vec<&str> = ClaimId::ALL.iter().map(|c| c.name()).collect();
        bail!("unknown claim '{claim}'; expected one of {} or all", names.join(", "));
    };
    let mut plan = CheckPlan::new(
        claim,
        ring.clone(),
        n,
        pick_mode(claim, mode, seed, count),
    );
    if let Some(path) = generators {
        if !claim.is_code_level() {
            bail!("--generators only applies to code-level claims");
        }
        let resolved = spec::resolve_code(&path, Some(&ring_arg), Some(n), unit.as_deref())?;
        let code = Code::new(
            resolved.ring,
            resolved.n,
            resolved.unit,
            resolved.generators,
        )?;
        plan = plan.with_code(code);
    }
    if let Some(np) = nprime {
        if !matches!(claim, ClaimId::GrayTwist | ClaimId::GrayTwistSquared) {
            bail!("--nprime only applies to the twist claims phi_mu and phi_mu2");
        }
        plan = plan.with_nprime_override(np);
    }
    let plan = finish_plan(plan, cap);
    let report = run_check(&plan)?;
    let doc = VerifyDoc::new(vec![ReportDoc::new(&report)]);
    emit.emit("verify", &doc, &doc.render(verbose))?;
    Ok(if doc.all_gates_passed { 0 } else { 1 })
}
