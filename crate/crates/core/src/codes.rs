//! Finite codes over a chain ring: enumeration from generators and the
//! structural predicates used by the verification harness.
//!
//! A code here is always materialised as an explicit set of words, so every
//! predicate is decided by finite search rather than by algebra on
//! generator matrices. Two of the predicates deliberately overlap:
//!
//! * [`is_constacyclic`] asks whether the set is closed under the
//!   constacyclic shift operator;
//! * [`is_ideal`] asks whether the set is a submodule closed under
//!   multiplication by `X` in `R[X] / <X^n - L>`, computed through generic
//!   polynomial multiplication ([`poly_mul_mod`]) rather than the shift.
//!
//! The two must agree on linear codes — that equivalence is one of the
//! facts the harness checks — and keeping the implementations independent
//! is what makes the check meaningful.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::gray;
use crate::ring::{ChainRing, FieldElem, ResidueField, RingElem};
use crate::shifts::{block_shift, constacyclic_shift, UnitSpec};

/// A materialised set of codewords. `BTreeSet` keeps iteration order
/// deterministic, which the harness relies on for reproducible reports.
pub type CodewordSet = BTreeSet<Vec<RingElem>>;

/// Default bound on how many codewords an enumeration may materialise.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 24;

/// The module span of the generators inside `R^n`, found by closing the
/// set `{0}` under `w -> w + r g` for every generator `g` and scalar `r`.
/// Fails with [`Error::CapExceeded`] as soon as the set would grow past
/// `cap`.
pub fn span(
    ring: &ChainRing,
    n: usize,
    generators: &[Vec<RingElem>],
    cap: u64,
) -> Result<CodewordSet, Error> {
    for g in generators {
        if g.len() != n {
            return Err(Error::BadLength {
                found: g.len(),
                expected: n,
            });
        }
        for c in g {
            ring.element(c.encoding())?;
        }
    }
    let zero = vec![ring.zero(); n];
    let mut set = CodewordSet::new();
    set.insert(zero.clone());
    if cap == 0 {
        return Err(Error::CapExceeded { reached: 1, cap });
    }
    let mut frontier = vec![zero];
    while let Some(w) = frontier.pop() {
        for g in generators {
            for r in ring.elements() {
                let cand: Vec<RingElem> = w
                    .iter()
                    .zip(g)
                    .map(|(&a, &b)| ring.add(a, ring.mul(r, b)))
                    .collect();
                if !set.contains(&cand) {
                    if set.len() as u64 >= cap {
                        return Err(Error::CapExceeded {
                            reached: set.len() as u64 + 1,
                            cap,
                        });
                    }
                    set.insert(cand.clone());
                    frontier.push(cand);
                }
            }
        }
    }
    Ok(set)
}

/// All of `R^n` as an iterator, with the total count checked against `u64`.
pub fn all_words(
    ring: &ChainRing,
    n: usize,
) -> Result<impl Iterator<Item = Vec<RingElem>> + '_, Error> {
    let total = ring
        .size()
        .checked_pow(n as u32)
        .ok_or(Error::RingTooLarge)?;
    Ok((0..total).map(move |idx| word_for_index(ring, n, idx)))
}

/// Decode index `idx` (base `|R|`, low digit = coordinate 0) into a word.
pub fn word_for_index(ring: &ChainRing, n: usize, mut idx: u64) -> Vec<RingElem> {
    let size = ring.size();
    let mut out = Vec::with_capacity(n);
    for _ in 0..n {
        out.push(ring.element(idx % size).expect("digit below ring size"));
        idx /= size;
    }
    out
}

/// A linear code contains zero and is closed under addition and scalar
/// multiplication. Decided by exhaustive search over the set.
pub fn is_linear(ring: &ChainRing, words: &CodewordSet) -> bool {
    let Some(first) = words.first() else {
        return false;
    };
    let zero = vec![ring.zero(); first.len()];
    if !words.contains(&zero) {
        return false;
    }
    for a in words {
        for r in ring.elements() {
            let scaled: Vec<RingElem> = a.iter().map(|&c| ring.mul(r, c)).collect();
            if !words.contains(&scaled) {
                return false;
            }
        }
        for b in words {
            let sum: Vec<RingElem> = a.iter().zip(b).map(|(&x, &y)| ring.add(x, y)).collect();
            if !words.contains(&sum) {
                return false;
            }
        }
    }
    true
}

/// Closure of the set under the `lambda`-constacyclic shift. This is a
/// set-level property; linearity is not assumed.
pub fn is_constacyclic(
    ring: &ChainRing,
    words: &CodewordSet,
    lambda: RingElem,
) -> Result<bool, Error> {
    for w in words {
        if !words.contains(&constacyclic_shift(ring, w, lambda)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Product of two coefficient vectors in `R[X] / <X^n - lambda>`: plain
/// convolution followed by folding `X^{n+t}` down to `lambda X^t`.
pub fn poly_mul_mod(
    ring: &ChainRing,
    a: &[RingElem],
    b: &[RingElem],
    n: usize,
    lambda: RingElem,
) -> Result<Vec<RingElem>, Error> {
    if !ring.is_unit(lambda) {
        return Err(Error::NotAUnit {
            encoding: lambda.encoding(),
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut conv = vec![ring.zero(); a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            conv[i + j] = ring.add(conv[i + j], ring.mul(x, y));
        }
    }
    // Fold from the top; degrees may exceed 2n, so keep reducing.
    let mut out = conv;
    while out.len() > n {
        let top = out.pop().expect("length checked");
        let deg = out.len();
        let tgt = deg - n;
        out[tgt] = ring.add(out[tgt], ring.mul(lambda, top));
    }
    out.resize(n, ring.zero());
    Ok(out)
}

/// Ideal test in `R[X] / <X^n - lambda>`, implemented independently of the
/// shift operator: the set must be linear and closed under multiplication
/// by the monomial `X`, computed via [`poly_mul_mod`].
pub fn is_ideal(
    ring: &ChainRing,
    words: &CodewordSet,
    lambda: RingElem,
) -> Result<bool, Error> {
    if !ring.is_unit(lambda) {
        return Err(Error::NotAUnit {
            encoding: lambda.encoding(),
        });
    }
    if !is_linear(ring, words) {
        return Ok(false);
    }
    let Some(first) = words.first() else {
        return Ok(false);
    };
    let n = first.len();
    let x_monomial = [ring.zero(), ring.one()];
    for w in words {
        let shifted = poly_mul_mod(ring, w, &x_monomial, n, lambda)?;
        if !words.contains(&shifted) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Gray image of every codeword.
pub fn gray_image_set(ring: &ChainRing, words: &CodewordSet) -> BTreeSet<Vec<FieldElem>> {
    words.iter().map(|w| gray::gray(ring, w)).collect()
}

/// Minimum homogeneous distance over distinct pairs. For linear codes this
/// equals the minimum nonzero weight, which is how it is computed there;
/// otherwise all pairs are compared.
pub fn min_homogeneous_distance(ring: &ChainRing, words: &CodewordSet) -> Result<u64, Error> {
    if words.len() < 2 {
        return Err(Error::TooFewWords { count: words.len() });
    }
    if is_linear(ring, words) {
        return Ok(words
            .iter()
            .filter(|w| w.iter().any(|c| !c.is_zero()))
            .map(|w| gray::homogeneous_weight_word(ring, w))
            .min()
            .expect("a linear code with two words has a nonzero word"));
    }
    let list: Vec<&Vec<RingElem>> = words.iter().collect();
    let mut best = u64::MAX;
    for (i, a) in list.iter().enumerate() {
        for b in &list[i + 1..] {
            best = best.min(gray::homogeneous_distance(ring, a, b)?);
        }
    }
    Ok(best)
}

/// A code over the residue field, carried with its field so the
/// block-structure predicates know `p` and `q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldCode {
    field: ResidueField,
    len: usize,
    words: BTreeSet<Vec<FieldElem>>,
}

impl FieldCode {
    /// All words must share length `len` and use in-range symbols.
    pub fn new(
        field: ResidueField,
        len: usize,
        words: BTreeSet<Vec<FieldElem>>,
    ) -> Result<Self, Error> {
        for w in &words {
            if w.len() != len {
                return Err(Error::BadLength {
                    found: w.len(),
                    expected: len,
                });
            }
            for c in w {
                field.element(c.encoding())?;
            }
        }
        Ok(FieldCode { field, len, words })
    }

    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word_count(&self) -> usize {
        self.words.len()
    }

    pub fn words(&self) -> &BTreeSet<Vec<FieldElem>> {
        &self.words
    }

    /// Minimum Hamming distance over distinct pairs.
    pub fn min_hamming_distance(&self) -> Result<u64, Error> {
        if self.words.len() < 2 {
            return Err(Error::TooFewWords {
                count: self.words.len(),
            });
        }
        let list: Vec<&Vec<FieldElem>> = self.words.iter().collect();
        let mut best = u64::MAX;
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                best = best.min(gray::hamming_distance(a, b)?);
            }
        }
        Ok(best)
    }

    /// Multiset of Hamming distances from `reference` to every codeword,
    /// as sorted `(distance, count)` pairs.
    pub fn distance_distribution(
        &self,
        reference: &[FieldElem],
    ) -> Result<Vec<(u64, u64)>, Error> {
        if reference.len() != self.len {
            return Err(Error::BadLength {
                found: reference.len(),
                expected: self.len,
            });
        }
        let mut counts: alloc::collections::BTreeMap<u64, u64> = alloc::collections::BTreeMap::new();
        for w in &self.words {
            *counts.entry(gray::hamming_distance(reference, w)?).or_insert(0) += 1;
        }
        Ok(counts.into_iter().collect())
    }

    /// True when the distance distribution looks the same from every
    /// codeword — the property that makes minimum distance equal minimum
    /// nonzero weight even for nonlinear codes.
    pub fn is_distance_invariant(&self) -> bool {
        let mut iter = self.words.iter();
        let Some(first) = iter.next() else {
            return true;
        };
        let base = self
            .distance_distribution(first)
            .expect("codeword lengths are validated");
        for w in iter {
            let dist = self
                .distance_distribution(w)
                .expect("codeword lengths are validated");
            if dist != base {
                return false;
            }
        }
        true
    }

    /// Closure under the block shift of the Gray layout for `ring` and
    /// ring-word length `n`: the defining property of the quasicyclic
    /// class that Gray images of constacyclic codes land in.
    pub fn is_quasicyclic(&self, ring: &ChainRing, n: usize) -> Result<bool, Error> {
        if ring.field() != &self.field {
            return Err(Error::InvalidPlan(alloc::string::String::from(
                "field code does not live over the residue field of the ring",
            )));
        }
        if gray::gray_length(ring, n) != self.len {
            return Err(Error::BadLength {
                found: self.len,
                expected: gray::gray_length(ring, n),
            });
        }
        for w in &self.words {
            if !self.words.contains(&block_shift(ring, w, n)?) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// A code presented by generators over a chain ring, with the unit that
/// fixes which constacyclic structure it is measured against.
#[derive(Debug, Clone)]
pub struct Code {
    ring: ChainRing,
    n: usize,
    unit: UnitSpec,
    lambda: RingElem,
    generators: Vec<Vec<RingElem>>,
}

impl Code {
    pub fn new(
        ring: ChainRing,
        n: usize,
        unit: UnitSpec,
        generators: Vec<Vec<RingElem>>,
    ) -> Result<Self, Error> {
        let lambda = unit.resolve(&ring)?;
        for g in &generators {
            if g.len() != n {
                return Err(Error::BadLength {
                    found: g.len(),
                    expected: n,
                });
            }
            for c in g {
                ring.element(c.encoding())?;
            }
        }
        Ok(Code {
            ring,
            n,
            unit,
            lambda,
            generators,
        })
    }

    pub fn ring(&self) -> &ChainRing {
        &self.ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn unit(&self) -> UnitSpec {
        self.unit
    }

    /// The resolved constacyclic unit.
    pub fn lambda(&self) -> RingElem {
        self.lambda
    }

    pub fn generators(&self) -> &[Vec<RingElem>] {
        &self.generators
    }

    /// Materialise the codeword set (the module span of the generators).
    pub fn enumerate(&self, cap: u64) -> Result<CodewordSet, Error> {
        span(&self.ring, self.n, &self.generators, cap)
    }

    /// Gray image as a residue-field code.
    pub fn gray_image(&self, cap: u64) -> Result<FieldCode, Error> {
        let words = self.enumerate(cap)?;
        FieldCode::new(
            self.ring.field().clone(),
            gray::gray_length(&self.ring, self.n),
            gray_image_set(&self.ring, &words),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn z4() -> ChainRing {
        ChainRing::integer_modular(2, 1).unwrap()
    }

    fn z8() -> ChainRing {
        ChainRing::integer_modular(2, 2).unwrap()
    }

    fn z27() -> ChainRing {
        ChainRing::integer_modular(3, 2).unwrap()
    }

    fn word(ring: &ChainRing, encs: &[u64]) -> Vec<RingElem> {
        encs.iter().map(|&v| ring.element(v).unwrap()).collect()
    }

    /// The length-2 code {(a, 10 a)} over Z_27: closed under the shift with
    /// unit 10 but not with unit 19.
    fn scaled_diagonal() -> (ChainRing, CodewordSet) {
        let r = z27();
        let set = span(&r, 2, &[word(&r, &[1, 10])], 1 << 10).unwrap();
        (r, set)
    }

    #[test]
    fn span_of_unit_vectors_is_everything() {
        let r = z4();
        let gens = vec![word(&r, &[1, 0]), word(&r, &[0, 1])];
        let set = span(&r, 2, &gens, 100).unwrap();
        assert_eq!(set.len(), 16);
        assert!(is_linear(&r, &set));
    }

    #[test]
    fn span_respects_cap() {
        let r = z4();
        let gens = vec![word(&r, &[1, 0]), word(&r, &[0, 1])];
        let err = span(&r, 2, &gens, 10).unwrap_err();
        assert!(matches!(err, Error::CapExceeded { cap: 10, .. }));
    }

    #[test]
    fn span_checks_generator_shape() {
        let r = z4();
        assert!(span(&r, 2, &[word(&r, &[1])], 100).is_err());
    }

    #[test]
    fn socle_cube_code_over_z8() {
        let r = z8();
        let gens = vec![
            word(&r, &[4, 0, 0]),
            word(&r, &[0, 4, 0]),
            word(&r, &[0, 0, 4]),
        ];
        let set = span(&r, 3, &gens, 100).unwrap();
        assert_eq!(set.len(), 8);
        assert!(is_linear(&r, &set));
        // Every unit keeps {0,4} coordinatewise stable, so the code is
        // constacyclic for 1 and 1 -+ g^e alike.
        for unit in [UnitSpec::One, UnitSpec::OneMinusSocleGen, UnitSpec::OnePlusSocleGen] {
            let lam = unit.resolve(&r).unwrap();
            assert!(is_constacyclic(&r, &set, lam).unwrap());
            assert!(is_ideal(&r, &set, lam).unwrap());
        }
        assert_eq!(min_homogeneous_distance(&r, &set).unwrap(), 4);
    }

    #[test]
    fn scaled_diagonal_is_constacyclic_for_its_unit_only() {
        let (r, set) = scaled_diagonal();
        assert_eq!(set.len(), 27);
        assert!(is_linear(&r, &set));
        let plus = UnitSpec::OnePlusSocleGen.resolve(&r).unwrap(); // 10
        let minus = UnitSpec::OneMinusSocleGen.resolve(&r).unwrap(); // 19
        assert!(is_constacyclic(&r, &set, plus).unwrap());
        assert!(!is_constacyclic(&r, &set, minus).unwrap());
        assert!(!is_constacyclic(&r, &set, r.one()).unwrap());
        assert!(is_ideal(&r, &set, plus).unwrap());
        assert!(!is_ideal(&r, &set, minus).unwrap());
    }

    #[test]
    fn nonlinear_sets_are_detected() {
        let r = z4();
        let mut set = CodewordSet::new();
        set.insert(word(&r, &[0, 0]));
        set.insert(word(&r, &[1, 0]));
        assert!(!is_linear(&r, &set));
        // Missing zero also fails.
        let mut no_zero = CodewordSet::new();
        no_zero.insert(word(&r, &[1, 0]));
        assert!(!is_linear(&r, &no_zero));
    }

    #[test]
    fn poly_mul_folds_the_top_power() {
        let r = z8();
        let lam = r.element(5).unwrap();
        // X^2 * X = X^3 = lambda in R[X]/<X^3 - lambda>.
        let prod = poly_mul_mod(&r, &word(&r, &[0, 0, 1]), &word(&r, &[0, 1]), 3, lam).unwrap();
        assert_eq!(prod, word(&r, &[5, 0, 0]));
        // (X^2 + 1)(X^2 + 1) = X^4 + 2X^2 + 1 = lambda X + 2 X^2 + 1.
        let sq = poly_mul_mod(&r, &word(&r, &[1, 0, 1]), &word(&r, &[1, 0, 1]), 3, lam).unwrap();
        assert_eq!(sq, word(&r, &[1, 5, 2]));
        assert!(poly_mul_mod(&r, &[], &[], 3, r.element(2).unwrap()).is_err());
    }

    #[test]
    fn ideal_test_agrees_with_shift_closure_on_linear_codes() {
        // Sweep all principal codes <(a, b)> over Z_4 against two units.
        let r = z4();
        for a in 0..4u64 {
            for b in 0..4u64 {
                let set = span(&r, 2, &[word(&r, &[a, b])], 1 << 10).unwrap();
                for lam_enc in [1u64, 3] {
                    let lam = r.element(lam_enc).unwrap();
                    let lhs = is_ideal(&r, &set, lam).unwrap();
                    let rhs =
                        is_linear(&r, &set) && is_constacyclic(&r, &set, lam).unwrap();
                    assert_eq!(lhs, rhs, "generator ({a},{b}), unit {lam_enc}");
                }
            }
        }
    }

    #[test]
    fn gray_image_preserves_counts_and_distances() {
        let r = z8();
        let gens = vec![
            word(&r, &[4, 0, 0]),
            word(&r, &[0, 4, 0]),
            word(&r, &[0, 0, 4]),
        ];
        let code = Code::new(r.clone(), 3, UnitSpec::OneMinusSocleGen, gens).unwrap();
        let image = code.gray_image(100).unwrap();
        assert_eq!(image.word_count(), 8);
        assert_eq!(image.len(), 12);
        assert_eq!(image.min_hamming_distance().unwrap(), 4);
        assert!(image.is_distance_invariant());
        assert!(image.is_quasicyclic(&r, 3).unwrap());
    }

    #[test]
    fn non_constacyclic_code_has_non_quasicyclic_image() {
        let r = z8();
        // <(1, 0, 0)> is linear but not shift-closed.
        let code = Code::new(
            r.clone(),
            3,
            UnitSpec::OneMinusSocleGen,
            vec![word(&r, &[1, 0, 0])],
        )
        .unwrap();
        let set = code.enumerate(100).unwrap();
        assert!(!is_constacyclic(&r, &set, code.lambda()).unwrap());
        assert!(!code.gray_image(100).unwrap().is_quasicyclic(&r, 3).unwrap());
    }

    #[test]
    fn distance_profile_is_sorted_and_complete() {
        let (r, set) = scaled_diagonal();
        let image = FieldCode::new(
            r.field().clone(),
            gray::gray_length(&r, 2),
            gray_image_set(&r, &set),
        )
        .unwrap();
        let zero_ref = vec![FieldElem::ZERO; image.len()];
        let dist = image.distance_distribution(&zero_ref).unwrap();
        let total: u64 = dist.iter().map(|&(_, c)| c).sum();
        assert_eq!(total, 27);
        // Distances from zero are the homogeneous weights of the preimages.
        let weights: BTreeSet<u64> = set
            .iter()
            .map(|w| gray::homogeneous_weight_word(&r, w))
            .collect();
        let observed: BTreeSet<u64> = dist.iter().map(|&(d, _)| d).collect();
        assert_eq!(weights, observed);
    }

    #[test]
    fn min_distance_needs_two_words() {
        let r = z4();
        let set = span(&r, 2, &[], 10).unwrap();
        assert_eq!(set.len(), 1);
        assert_eq!(
            min_homogeneous_distance(&r, &set).unwrap_err(),
            Error::TooFewWords { count: 1 }
        );
    }

    #[test]
    fn field_code_validates_contents() {
        let r = z8();
        let mut words = BTreeSet::new();
        words.insert(vec![FieldElem::ZERO; 4]);
        assert!(FieldCode::new(r.field().clone(), 4, words.clone()).is_ok());
        assert!(FieldCode::new(r.field().clone(), 5, words).is_err());
    }
}
