//! Input formats: ring presets, JSON ring specs, JSON code specs, and the
//! small textual grammars for units and words.
//!
//! A ring is named either by a preset (`z4`, `z8`, `z27`, `f4u3`) or by a
//! path to a JSON document:
//!
//! ```json
//! { "family": "zpe", "p": 3, "e": 2 }
//! { "family": "fpk_u", "p": 2, "k": 2, "e": 2, "modulus": [1, 1, 1] }
//! ```
//!
//! A code spec is either a bare generator matrix (`[[1, 10]]`, completed by
//! command-line flags) or a full document:
//!
//! ```json
//! { "ring": "z27", "n": 2, "unit": "1+g^e", "generators": [[1, 10]] }
//! ```

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use serde::Deserialize;

use graychain::shifts::UnitSpec;
use graychain::{ChainRing, FieldElem, RingElem};

/// JSON description of a ring.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RingSpec {
    pub family: String,
    pub p: u32,
    #[serde(default)]
    pub k: Option<u32>,
    pub e: u32,
    #[serde(default)]
    pub modulus: Option<Vec<u32>>,
}

impl RingSpec {
    pub fn build(&self) -> Result<ChainRing> {
        match self.family.as_str() {
            "zpe" => {
                if self.k.unwrap_or(1) != 1 {
                    bail!("family 'zpe' is Z_p^(e+1); it has k = 1, got k = {:?}", self.k);
                }
                if self.modulus.is_some() {
                    bail!("family 'zpe' takes no field modulus");
                }
                Ok(ChainRing::integer_modular(self.p, self.e)?)
            }
            "fpk_u" => {
                let k = self.k.unwrap_or(1);
                Ok(ChainRing::truncated_polynomial(
                    self.p,
                    k,
                    self.e,
                    self.modulus.as_deref(),
                )?)
            }
            other => bail!("unknown ring family '{other}' (expected 'zpe' or 'fpk_u')"),
        }
    }
}

/// Built-in rings used throughout the checks.
pub fn preset(name: &str) -> Option<ChainRing> {
    let ring = match name.to_ascii_lowercase().as_str() {
        "z4" => ChainRing::integer_modular(2, 1),
        "z8" => ChainRing::integer_modular(2, 2),
        "z27" => ChainRing::integer_modular(3, 2),
        "f4u3" => ChainRing::truncated_polynomial(2, 2, 2, Some(&[1, 1, 1])),
        _ => return None,
    };
    Some(ring.expect("presets are well formed"))
}

/// Resolve a `--ring` argument: a preset name, or a path to a ring spec.
pub fn load_ring(arg: &str) -> Result<ChainRing> {
    if let Some(ring) = preset(arg) {
        return Ok(ring);
    }
    let path = Path::new(arg);
    if path.exists() {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading ring spec {}", path.display()))?;
        let spec: RingSpec = serde_json::from_str(&text)
            .with_context(|| format!("parsing ring spec {}", path.display()))?;
        return spec.build();
    }
    bail!("unknown ring '{arg}': expected z4, z8, z27, f4u3, or a path to a ring-spec JSON file")
}

/// Parse a `--unit` argument: `1`, `1-g^e`, `1+g^e`, or `custom:<encoding>`.
pub fn parse_unit(ring: &ChainRing, text: &str) -> Result<UnitSpec> {
    match text {
        "1" => Ok(UnitSpec::One),
        "1-g^e" => Ok(UnitSpec::OneMinusSocleGen),
        "1+g^e" => Ok(UnitSpec::OnePlusSocleGen),
        other => {
            if let Some(enc) = other.strip_prefix("custom:") {
                let enc: u64 = enc
                    .parse()
                    .map_err(|_| anyhow!("bad custom unit encoding '{enc}'"))?;
                Ok(UnitSpec::Custom(ring.element(enc)?))
            } else {
                bail!("unknown unit '{other}': expected 1, 1-g^e, 1+g^e, or custom:<encoding>")
            }
        }
    }
}

fn parse_encodings(text: &str) -> Result<Vec<u64>> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.is_empty() || parts.iter().any(|s| s.is_empty()) {
        bail!("empty word: expected comma-separated encodings like 1,2,0");
    }
    parts
        .iter()
        .map(|s| {
            s.parse::<u64>()
                .map_err(|_| anyhow!("bad encoding '{s}' in word '{text}'"))
        })
        .collect()
}

/// Parse a comma-separated word of ring element encodings.
pub fn parse_ring_word(ring: &ChainRing, text: &str) -> Result<Vec<RingElem>> {
    parse_encodings(text)?
        .into_iter()
        .map(|v| Ok(ring.element(v)?))
        .collect()
}

/// Parse a comma-separated word of residue field symbols.
pub fn parse_field_word(ring: &ChainRing, text: &str) -> Result<Vec<FieldElem>> {
    parse_encodings(text)?
        .into_iter()
        .map(|v| {
            let v = u32::try_from(v).map_err(|_| anyhow!("symbol {v} out of field range"))?;
            Ok(ring.field().element(v)?)
        })
        .collect()
}

/// Ring field inside a code spec: a preset name or an inline spec.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum RingRef {
    Preset(String),
    Inline(RingSpec),
}

impl RingRef {
    fn build(&self) -> Result<ChainRing> {
        match self {
            RingRef::Preset(name) => {
                preset(name).ok_or_else(|| anyhow!("unknown ring preset '{name}' in code spec"))
            }
            RingRef::Inline(spec) => spec.build(),
        }
    }
}

/// Full code-spec document.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpec {
    #[serde(default)]
    pub ring: Option<RingRef>,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub unit: Option<String>,
    pub generators: Vec<Vec<u64>>,
}

/// A `--generators` file: either a full document or a bare matrix.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum GeneratorsDoc {
    Full(CodeSpec),
    Bare(Vec<Vec<u64>>),
}

/// A code spec merged with command-line flags (flags win).
pub struct ResolvedCode {
    pub ring: ChainRing,
    pub n: usize,
    pub unit_label: String,
    pub unit: UnitSpec,
    pub generators: Vec<Vec<RingElem>>,
}

pub fn resolve_code(
    path: &Path,
    ring_flag: Option<&str>,
    n_flag: Option<usize>,
    unit_flag: Option<&str>,
) -> Result<ResolvedCode> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("reading code spec {}", path.display()))?;
    let doc: GeneratorsDoc = serde_json::from_str(&text)
        .with_context(|| format!("parsing code spec {}", path.display()))?;
    let spec = match doc {
        GeneratorsDoc::Full(spec) => spec,
        GeneratorsDoc::Bare(generators) => CodeSpec {
            ring: None,
            n: None,
            unit: None,
            generators,
        },
    };

    let ring = match (ring_flag, &spec.ring) {
        (Some(arg), _) => load_ring(arg)?,
        (None, Some(r)) => r.build()?,
        (None, None) => bail!("no ring: give --ring or a 'ring' field in the code spec"),
    };
    if spec.generators.is_empty() {
        bail!("code spec has no generators");
    }
    let n = n_flag
        .or(spec.n)
        .unwrap_or_else(|| spec.generators[0].len());
    let unit_label = unit_flag
        .map(str::to_owned)
        .or_else(|| spec.unit.clone())
        .unwrap_or_else(|| "1".to_owned());
    let unit = parse_unit(&ring, &unit_label)?;
    let generators = spec
        .generators
        .iter()
        .map(|row| {
            row.iter()
                .map(|&v| Ok(ring.element(v)?))
                .collect::<Result<Vec<RingElem>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ResolvedCode {
        ring,
        n,
        unit_label,
        unit,
        generators,
    })
}
