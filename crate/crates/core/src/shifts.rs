//! Shift operators on ring words, their residue-field counterparts, and the
//! twist maps connecting cyclic codes to constacyclic ones.
//!
//! Three operator families live here:
//!
//! * the **constacyclic shift** `(x_0, ..., x_{n-1}) -> (L x_{n-1}, x_0, ..., x_{n-2})`
//!   for a unit `L`, whose fixed codes are the `L`-constacyclic codes;
//! * the **block shift** on residue-field words of length `q^e n`: cut into
//!   blocks of length `p n` and rotate each block one step right. Under the
//!   Gray map this is the partner of the `(1 - g^e)`-constacyclic shift;
//! * the **Nechaev permutation** of `p n` points (for `gcd(n, p) = 1`),
//!   applied blockwise, which is the Gray partner of the [`Twist`] maps.
//!
//! The twist scales coordinate `j` by `b^j` where `b = 1 + n' g^e` and
//! `n'` is the least positive inverse of `n` mod `p`. Its key property is
//! `b^n = 1 + g^e` (so `b^{-n} = 1 - g^e`), which makes `f(X) -> f(bX)`
//! a ring isomorphism
//!
//! ```text
//! R[X] / <X^n - L>   ->   R[X] / <X^n - L (1 - g^e)>
//! ```
//!
//! sending ideals to ideals: twisting a cyclic code yields a
//! `(1 - g^e)`-constacyclic code, and twisting twice sends a
//! `(1 + g^e)`-constacyclic code to a `(1 - g^e)`-constacyclic one.

use alloc::vec::Vec;

use crate::error::Error;
use crate::ring::{ChainRing, FieldElem, RingElem};

/// A named choice of constacyclic unit. `g` stands for the generator of
/// the maximal ideal, so `g^e` generates the socle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnitSpec {
    /// The unit 1: plain cyclic shifts.
    One,
    /// `1 - g^e`.
    OneMinusSocleGen,
    /// `1 + g^e`.
    OnePlusSocleGen,
    /// An explicit element, checked to be a unit when resolved.
    Custom(RingElem),
}

impl UnitSpec {
    /// The concrete unit in the given ring.
    pub fn resolve(&self, ring: &ChainRing) -> Result<RingElem, Error> {
        let top = ring.ideal_generator_pow(ring.e());
        let lambda = match *self {
            UnitSpec::One => ring.one(),
            UnitSpec::OneMinusSocleGen => ring.sub(ring.one(), top),
            UnitSpec::OnePlusSocleGen => ring.add(ring.one(), top),
            UnitSpec::Custom(r) => ring.element(r.encoding())?,
        };
        if !ring.is_unit(lambda) {
            return Err(Error::NotAUnit {
                encoding: lambda.encoding(),
            });
        }
        Ok(lambda)
    }
}

/// One constacyclic shift: the last coordinate wraps to the front scaled
/// by the unit `lambda`.
pub fn constacyclic_shift(
    ring: &ChainRing,
    word: &[RingElem],
    lambda: RingElem,
) -> Result<Vec<RingElem>, Error> {
    if !ring.is_unit(lambda) {
        return Err(Error::NotAUnit {
            encoding: lambda.encoding(),
        });
    }
    let n = word.len();
    let mut out = Vec::with_capacity(n);
    if n == 0 {
        return Ok(out);
    }
    out.push(ring.mul(lambda, word[n - 1]));
    out.extend_from_slice(&word[..n - 1]);
    Ok(out)
}

/// The residue-field partner of the `(1 - g^e)`-constacyclic shift: the
/// `q^e n` coordinates are cut into `q^e / p` blocks of length `p n` and
/// each block is rotated one step right.
pub fn block_shift(
    ring: &ChainRing,
    image: &[FieldElem],
    n: usize,
) -> Result<Vec<FieldElem>, Error> {
    let expected = crate::gray::gray_length(ring, n);
    if image.len() != expected {
        return Err(Error::BadLength {
            found: image.len(),
            expected,
        });
    }
    let block = ring.p() as usize * n;
    if block == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::with_capacity(image.len());
    for chunk in image.chunks_exact(block) {
        out.push(chunk[block - 1]);
        out.extend_from_slice(&chunk[..block - 1]);
    }
    Ok(out)
}

/// A permutation of `0..len`, stored as an image table used in *pull*
/// convention: applying it puts input coordinate `table[i]` at output
/// position `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation {
    table: Vec<usize>,
}

impl Permutation {
    /// Validates that the table is a bijection on `0..len`.
    pub fn new(table: Vec<usize>) -> Result<Self, Error> {
        let len = table.len();
        let mut seen = alloc::vec![false; len];
        for (i, &img) in table.iter().enumerate() {
            if img >= len || seen[img] {
                return Err(Error::NotAPermutation { index: i });
            }
            seen[img] = true;
        }
        Ok(Permutation { table })
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    /// The image table: output `i` reads input `table()[i]`.
    pub fn table(&self) -> &[usize] {
        &self.table
    }

    /// Apply to a word of matching length.
    pub fn apply<T: Copy>(&self, word: &[T]) -> Result<Vec<T>, Error> {
        if word.len() != self.table.len() {
            return Err(Error::BadLength {
                found: word.len(),
                expected: self.table.len(),
            });
        }
        Ok(self.table.iter().map(|&i| word[i]).collect())
    }
}

/// The least `n'` in `1..p` with `n n' = 1 (mod p)`; exists exactly when
/// `p` does not divide `n`.
pub fn least_positive_inverse(n: usize, p: u32) -> Result<u32, Error> {
    let r = (n % p as usize) as u32;
    if r == 0 {
        return Err(Error::NotCoprime { n, p });
    }
    for candidate in 1..p {
        if (r as u64 * candidate as u64) % p as u64 == 1 {
            return Ok(candidate);
        }
    }
    // p prime and r nonzero mod p always has an inverse.
    unreachable!("prime modulus guarantees an inverse")
}

/// The Nechaev permutation of `p * n` points: writing an index as
/// `m n + j` with `m < p`, `j < n`, it maps to `((m + j n') mod p) n + j`.
/// No inverse relation between `n` and `nprime` is enforced here; the
/// commutation identities need `nprime` to invert `n` mod `p`, and the
/// verification harness deliberately feeds wrong values to prove it can
/// tell the difference.
pub fn nechaev_permutation(p: u32, n: usize, nprime: u32) -> Permutation {
    let len = p as usize * n;
    let mut table = Vec::with_capacity(len);
    for m in 0..p as usize {
        for j in 0..n {
            let m2 = (m + j * nprime as usize) % p as usize;
            table.push(m2 * n + j);
        }
    }
    Permutation { table }
}

/// Apply `perm` to every consecutive block of `perm.len()` coordinates.
pub fn permute_blocks(perm: &Permutation, word: &[FieldElem]) -> Result<Vec<FieldElem>, Error> {
    let block = perm.len();
    if block == 0 || !word.len().is_multiple_of(block) {
        return Err(Error::NotBlockAligned {
            len: word.len(),
            block,
        });
    }
    let mut out = Vec::with_capacity(word.len());
    for chunk in word.chunks_exact(block) {
        out.extend_from_slice(&perm.apply(chunk)?);
    }
    Ok(out)
}

/// The residue-field partner of the [`Twist`]: the Nechaev permutation of
/// the `p n` positions inside each of the `q^e / p` blocks of a length
/// `q^e n` word. Validates that `nprime` inverts `n` mod `p`.
pub fn nechaev_blocks(
    ring: &ChainRing,
    image: &[FieldElem],
    n: usize,
    nprime: u32,
) -> Result<Vec<FieldElem>, Error> {
    let p = ring.p();
    let r = (n % p as usize) as u32;
    if (r as u64 * nprime as u64) % p as u64 != 1 {
        return Err(Error::BadInverse { nprime, n, p });
    }
    let expected = crate::gray::gray_length(ring, n);
    if image.len() != expected {
        return Err(Error::BadLength {
            found: image.len(),
            expected,
        });
    }
    permute_blocks(&nechaev_permutation(p, n, nprime), image)
}

/// The coordinate twist for words of length `n`: coordinate `j` is scaled
/// by `b^j`, where `b = 1 + n' g^e` and `n'` is the least positive inverse
/// of `n` mod `p`. See the module docs for why `b^n = 1 + g^e` makes this
/// map cyclic codes to `(1 - g^e)`-constacyclic ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Twist {
    n: usize,
    nprime: u32,
    unit: RingElem,
}

impl Twist {
    /// Requires `gcd(n, p) = 1`.
    pub fn new(ring: &ChainRing, n: usize) -> Result<Self, Error> {
        let nprime = least_positive_inverse(n, ring.p())?;
        let top = ring.ideal_generator_pow(ring.e());
        let scaled = ring.mul(ring.element(nprime as u64)?, top);
        let unit = ring.add(ring.one(), scaled);
        Ok(Twist { n, nprime, unit })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The inverse of `n` mod `p` used to build the multiplier.
    pub fn nprime(&self) -> u32 {
        self.nprime
    }

    /// The multiplier `b = 1 + n' g^e`.
    pub fn unit(&self) -> RingElem {
        self.unit
    }

    /// Scale coordinate `j` by `b^j`. The word length must match `n`.
    pub fn apply(&self, ring: &ChainRing, word: &[RingElem]) -> Result<Vec<RingElem>, Error> {
        self.apply_power(ring, word, 1)
    }

    /// The twist applied twice: coordinate `j` scaled by `b^{2j}`.
    pub fn apply_squared(
        &self,
        ring: &ChainRing,
        word: &[RingElem],
    ) -> Result<Vec<RingElem>, Error> {
        self.apply_power(ring, word, 2)
    }

    fn apply_power(
        &self,
        ring: &ChainRing,
        word: &[RingElem],
        times: u64,
    ) -> Result<Vec<RingElem>, Error> {
        if word.len() != self.n {
            return Err(Error::BadLength {
                found: word.len(),
                expected: self.n,
            });
        }
        let step = ring.pow(self.unit, times);
        Ok(self.scale_by_powers(ring, word, step))
    }

    /// Scale an arbitrary-length coefficient vector: coefficient `j` by
    /// `b^j`. This is the polynomial form `f(X) -> f(bX)`, usable beyond
    /// length `n` (e.g. on products before reduction).
    pub fn apply_poly(&self, ring: &ChainRing, coeffs: &[RingElem]) -> Vec<RingElem> {
        self.scale_by_powers(ring, coeffs, self.unit)
    }

    fn scale_by_powers(
        &self,
        ring: &ChainRing,
        coeffs: &[RingElem],
        step: RingElem,
    ) -> Vec<RingElem> {
        let mut factor = ring.one();
        coeffs
            .iter()
            .map(|&c| {
                let scaled = ring.mul(factor, c);
                factor = ring.mul(factor, step);
                scaled
            })
            .collect()
    }
}
