//! Homogeneous weight and the Gray isometry.
//!
//! Writing `q = p^k` for the residue field size and `e + 1` for the
//! nilpotency index, the homogeneous weight on the chain ring is
//!
//! ```text
//! w(r) = 0                  r = 0
//! w(r) = q^e                r in the socle, r != 0
//! w(r) = q^(e-1) (q - 1)    otherwise
//! ```
//!
//! extended to words coordinatewise. The Gray map sends a word of length
//! `n` over the ring to a word of length `q^e n` over the residue field and
//! turns homogeneous distance into Hamming distance.
//!
//! The image is laid out in `q^e` blocks of length `n`, indexed by a pair
//! `(w, s)` with `w < q^(e-1)` and `s < q` (flat block index `w*q + s`).
//! With `a_0, ..., a_e` the digit expansion of the input coordinate `r`,
//! block `(w, s)` of the image holds
//!
//! ```text
//! A(s) * a_0  +  sum_{l=1}^{e-1} A(t_l) * a_l  +  a_e
//! ```
//!
//! where `t_1, ..., t_{e-1}` are the base-`q` digits of `w` and `A` is the
//! digit labelling of field elements ([`crate::ring::ResidueField::element_from_index`]).
//! For `q = 2, e = 1` this is the classical quaternary Gray map
//! `0 -> 00, 1 -> 01, 2 -> 11, 3 -> 10`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::ring::{digits_in_base, ChainRing, FieldElem, RingElem};

/// Homogeneous weight of a single ring element.
pub fn homogeneous_weight(ring: &ChainRing, r: RingElem) -> u64 {
    if r.is_zero() {
        return 0;
    }
    let q = ring.digit_base();
    if ring.in_socle(r) {
        q.pow(ring.e())
    } else {
        q.pow(ring.e() - 1) * (q - 1)
    }
}

/// Homogeneous weight of a word, summed coordinatewise.
pub fn homogeneous_weight_word(ring: &ChainRing, word: &[RingElem]) -> u64 {
    word.iter().map(|&r| homogeneous_weight(ring, r)).sum()
}

/// Homogeneous distance `w(x - y)`.
pub fn homogeneous_distance(
    ring: &ChainRing,
    x: &[RingElem],
    y: &[RingElem],
) -> Result<u64, Error> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter()
        .zip(y)
        .map(|(&a, &b)| homogeneous_weight(ring, ring.sub(a, b)))
        .sum())
}

/// Hamming weight of a residue-field word.
pub fn hamming_weight(word: &[FieldElem]) -> u64 {
    word.iter().filter(|c| !c.is_zero()).count() as u64
}

/// Hamming distance between residue-field words of equal length.
pub fn hamming_distance(x: &[FieldElem], y: &[FieldElem]) -> Result<u64, Error> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    Ok(x.iter().zip(y).filter(|(a, b)| a != b).count() as u64)
}

/// Length of the Gray image of a word of length `n`: `q^e * n`.
pub fn gray_length(ring: &ChainRing, n: usize) -> usize {
    ring.digit_base().pow(ring.e()) as usize * n
}

/// The Gray map. Produces the `q^e * n` residue-field coordinates in the
/// block layout described in the module docs.
pub fn gray(ring: &ChainRing, word: &[RingElem]) -> Vec<FieldElem> {
    let n = word.len();
    let f = ring.field();
    let q = ring.digit_base();
    let e = ring.e() as usize;
    let outer = q.pow(ring.e() - 1); // number of w-values

    // Digit labelling of all field elements, indexed by encoding; the
    // labelling is the identity on encodings but is computed through field
    // arithmetic so the map stays tied to its definition.
    let labels: Vec<FieldElem> = (0..q)
        .map(|i| f.element_from_index(i).expect("index below field size"))
        .collect();
    let digits: Vec<Vec<FieldElem>> = word.iter().map(|&r| ring.digits(r)).collect();

    let mut out = vec![FieldElem::ZERO; gray_length(ring, n)];
    for w in 0..outer {
        let tail = digits_in_base(w, q, e.saturating_sub(1)).expect("w below q^(e-1)");
        for s in 0..q {
            let block = (w * q + s) as usize;
            for (j, d) in digits.iter().enumerate() {
                let mut acc = f.mul(labels[s as usize], d[0]);
                for l in 1..e {
                    acc = f.add(acc, f.mul(labels[tail[l - 1] as usize], d[l]));
                }
                acc = f.add(acc, d[e]);
                out[block * n + j] = acc;
            }
        }
    }
    out
}

/// Inverse of the Gray map on its image.
///
/// `image.len()` must equal `q^e * n`; returns `Ok(None)` when the word is
/// not in the image of any length-`n` ring word. The candidate digits are
/// read off linearly — block 0 carries the top digit and blocks `q^l`
/// carry top-plus-`l`-th — then confirmed by re-encoding.
pub fn gray_inverse(
    ring: &ChainRing,
    image: &[FieldElem],
    n: usize,
) -> Result<Option<Vec<RingElem>>, Error> {
    let expected = gray_length(ring, n);
    if image.len() != expected {
        return Err(Error::BadLength {
            found: image.len(),
            expected,
        });
    }
    let f = ring.field();
    let q = ring.digit_base();
    let e = ring.e() as usize;
    for c in image {
        if c.encoding() as u64 >= q {
            return Err(Error::OutOfRange {
                value: c.encoding() as u64,
                bound: q,
            });
        }
    }

    let mut word = Vec::with_capacity(n);
    for j in 0..n {
        let top = image[j]; // block (w, s) = (0, 0)
        let mut digits = vec![FieldElem::ZERO; e + 1];
        digits[e] = top;
        // Block q^l isolates digit l on top of the top digit: l = 0 is the
        // (0, 1) block, l >= 1 the (q^(l-1), 0) blocks.
        for (l, d) in digits.iter_mut().enumerate().take(e) {
            let block = q.pow(l as u32) as usize;
            *d = f.sub(image[block * n + j], top);
        }
        word.push(ring.from_digits(&digits)?);
    }

    if gray(ring, &word) == image {
        Ok(Some(word))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

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

    fn image_of(ring: &ChainRing, encs: &[u64]) -> Vec<u32> {
        let word: Vec<RingElem> = encs.iter().map(|&v| ring.element(v).unwrap()).collect();
        gray(ring, &word).iter().map(|c| c.encoding()).collect()
    }

    #[test]
    fn quaternary_gray_table() {
        let r = z4();
        assert_eq!(image_of(&r, &[0]), [0, 0]);
        assert_eq!(image_of(&r, &[1]), [0, 1]);
        assert_eq!(image_of(&r, &[2]), [1, 1]);
        assert_eq!(image_of(&r, &[3]), [1, 0]);
    }

    #[test]
    fn octal_gray_table() {
        let r = z8();
        let table: [[u32; 4]; 8] = [
            [0, 0, 0, 0],
            [0, 1, 0, 1],
            [0, 0, 1, 1],
            [0, 1, 1, 0],
            [1, 1, 1, 1],
            [1, 0, 1, 0],
            [1, 1, 0, 0],
            [1, 0, 0, 1],
        ];
        for (v, expect) in table.iter().enumerate() {
            assert_eq!(image_of(&r, &[v as u64]), *expect, "image of {v}");
        }
    }

    #[test]
    fn blocks_interleave_across_coordinates() {
        // For n = 2 the image interleaves the two single-coordinate images
        // blockwise: coordinate j sits at position block*n + j.
        let r = z8();
        assert_eq!(image_of(&r, &[1, 2]), [0, 0, 1, 0, 0, 1, 1, 1]);
    }

    #[test]
    fn weights_match_the_three_cases() {
        let r = z8();
        let expect = [0u64, 2, 2, 2, 4, 2, 2, 2];
        for (v, &w) in expect.iter().enumerate() {
            assert_eq!(homogeneous_weight(&r, r.element(v as u64).unwrap()), w);
        }
        let r = z27();
        for v in 0..27u64 {
            let w = homogeneous_weight(&r, r.element(v).unwrap());
            let expect = match v {
                0 => 0,
                9 | 18 => 9,
                _ => 6,
            };
            assert_eq!(w, expect, "weight of {v}");
        }
        let r = f4u3();
        for v in r.elements() {
            let w = homogeneous_weight(&r, v);
            let expect = if v.is_zero() {
                0
            } else if r.in_socle(v) {
                16
            } else {
                12
            };
            assert_eq!(w, expect);
        }
    }

    #[test]
    fn weight_equals_hamming_weight_of_image() {
        for ring in [z4(), z8(), z27(), f4u3()] {
            for r in ring.elements() {
                let img = gray(&ring, &[r]);
                assert_eq!(
                    homogeneous_weight(&ring, r),
                    hamming_weight(&img),
                    "element {} of {}",
                    r.encoding(),
                    ring.describe()
                );
            }
        }
    }

    #[test]
    fn distance_checks_lengths() {
        let r = z8();
        let a = [r.one()];
        let b = [r.one(), r.zero()];
        assert!(homogeneous_distance(&r, &a, &b).is_err());
        assert!(hamming_distance(&gray(&r, &a), &gray(&r, &b)).is_err());
    }

    #[test]
    fn image_length_is_qe_times_n() {
        assert_eq!(gray_length(&z8(), 3), 12);
        assert_eq!(gray_length(&z27(), 2), 18);
        assert_eq!(gray_length(&f4u3(), 2), 32);
        assert_eq!(gray_length(&z4(), 5), 10);
    }

    #[test]
    fn gray_is_injective_on_words() {
        let r = z27();
        let mut seen = BTreeSet::new();
        for v in 0..27u64 {
            for w in 0..27u64 {
                let word = [r.element(v).unwrap(), r.element(w).unwrap()];
                assert!(seen.insert(gray(&r, &word)));
            }
        }
        assert_eq!(seen.len(), 729);
    }

    #[test]
    fn gray_inverse_round_trips_exhaustively() {
        for ring in [z4(), z8(), z27(), f4u3()] {
            for v in ring.elements() {
                for w in ring.elements() {
                    let word = vec![v, w];
                    let img = gray(&ring, &word);
                    assert_eq!(gray_inverse(&ring, &img, 2).unwrap(), Some(word));
                }
            }
        }
    }

    #[test]
    fn gray_inverse_rejects_non_images() {
        let r = z8();
        // Flip one bit of a valid image; the result is outside the image set.
        let mut img = gray(&r, &[r.zero()]);
        img[0] = r.field().element(1).unwrap();
        assert_eq!(gray_inverse(&r, &img, 1).unwrap(), None);
        // Wrong length is an error, not a failed lookup.
        assert!(gray_inverse(&r, &img[..3], 1).is_err());
    }
}
