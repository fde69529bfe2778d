//! Finite chain rings with nilpotency index `e + 1` and their residue fields.
//!
//! Two families are supported:
//!
//! * **integer-modular** — `Z_{p^{e+1}}`, where the maximal ideal is
//!   generated by `p` and the residue field is `Z_p` (so `k = 1`);
//! * **truncated-polynomial** — `F_{p^k}[u] / <u^{e+1}>`, where the maximal
//!   ideal is generated by `u` and the residue field is `F_{p^k}`.
//!
//! Writing `g` for the ideal generator (`p` or `u`) and `q = p^k` for the
//! residue field size, every element has a unique digit expansion
//!
//! ```text
//! r = a_0 + a_1 g + ... + a_e g^e
//! ```
//!
//! whose digits `a_i` come from a fixed set of coset representatives: the
//! integers `0..p` in the first family, the field constants in the second.
//! Elements are stored by their canonical integer encoding
//!
//! ```text
//! enc(r) = enc(a_0) + enc(a_1) q + ... + enc(a_e) q^e    (0 <= enc(r) < q^{e+1})
//! ```
//!
//! which for `Z_{p^{e+1}}` is just the usual representative in
//! `0..p^{e+1}`. Field elements are likewise stored by their base-`p`
//! coefficient vector packed into an integer, so `F_4 = {0, 1, x, x + 1}`
//! is encoded `{0, 1, 2, 3}`.
//!
//! All arithmetic is exact; nothing here allocates beyond small digit
//! vectors.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// Which of the two chain-ring families a ring belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `Z_{p^{e+1}}`; the ideal generator is `p` and digits are base-`p`.
    IntegerModular,
    /// `F_{p^k}[u] / <u^{e+1}>`; the ideal generator is `u` and digits are
    /// the `u`-coefficients.
    TruncatedPolynomial,
}

/// An element of a residue field `F_{p^k}`, stored as its packed base-`p`
/// coefficient vector. Field elements are only meaningful relative to the
/// [`ResidueField`] that produced them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem(u32);

impl FieldElem {
    /// The zero element (valid in every field).
    pub const ZERO: FieldElem = FieldElem(0);

    /// The one element (valid in every field).
    pub const ONE: FieldElem = FieldElem(1);

    /// The packed integer encoding, in `0..p^k`.
    pub fn encoding(self) -> u32 {
        self.0
    }

    /// True exactly for the zero element.
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// An element of a [`ChainRing`], stored as its canonical integer encoding.
/// Ring elements are only meaningful relative to the ring that produced
/// them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingElem(u64);

impl RingElem {
    /// The zero element (valid in every chain ring).
    pub const ZERO: RingElem = RingElem(0);

    /// The canonical integer encoding, in `0..q^{e+1}`.
    pub fn encoding(self) -> u64 {
        self.0
    }

    /// True exactly for the zero element.
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Deterministic trial-division primality check; inputs here are tiny.
fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Digits of `value` in the given base, least significant first, padded to
/// `len` digits. Fails if `value` needs more than `len` digits.
pub fn digits_in_base(value: u64, base: u64, len: usize) -> Result<Vec<u64>, Error> {
    debug_assert!(base >= 2);
    let mut digits = vec![0u64; len];
    let mut rest = value;
    for d in digits.iter_mut() {
        *d = rest % base;
        rest /= base;
    }
    if rest != 0 {
        let bound = base.checked_pow(len as u32).unwrap_or(u64::MAX);
        return Err(Error::OutOfRange { value, bound });
    }
    Ok(digits)
}

/// The residue field `F_{p^k}` of a chain ring.
///
/// For `k = 1` this is `Z_p` and arithmetic is integer arithmetic mod `p`.
/// For `k > 1` elements are polynomials in a root `x` of the configured
/// degree-`k` modulus, stored as packed base-`p` coefficient vectors, and
/// the modulus is required to be *primitive*: `x` must generate the whole
/// multiplicative group. That convention fixes the discrete-log labelling
/// used by [`ResidueField::element_from_index`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidueField {
    p: u32,
    k: u32,
    size: u32,
    /// Modulus coefficients, low degree first, length `k + 1`; empty for `k = 1`.
    modulus: Vec<u32>,
}

impl ResidueField {
    /// Build `F_{p^k}`. The modulus must be omitted when `k = 1` and must be
    /// a degree-`k` primitive polynomial over `Z_p` (coefficients low-first)
    /// when `k > 1`.
    pub fn new(p: u32, k: u32, modulus: Option<&[u32]>) -> Result<Self, Error> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if k < 1 {
            return Err(Error::InvalidDegree { k });
        }
        let size = (p as u64)
            .checked_pow(k)
            .filter(|&s| s <= u32::MAX as u64)
            .ok_or(Error::RingTooLarge)? as u32;
        let modulus = match (k, modulus) {
            (1, None) => Vec::new(),
            (1, Some(_)) => {
                return Err(Error::BadModulus(String::from(
                    "modulus must be omitted when k = 1",
                )))
            }
            (_, None) => {
                return Err(Error::BadModulus(format!(
                    "a degree-{k} modulus is required when k > 1"
                )))
            }
            (_, Some(m)) => {
                if m.len() != k as usize + 1 {
                    return Err(Error::BadModulus(format!(
                        "expected {} coefficients, got {}",
                        k + 1,
                        m.len()
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(Error::BadModulus(format!(
                        "coefficients must lie in 0..{p}"
                    )));
                }
                if m[k as usize] == 0 {
                    return Err(Error::BadModulus(String::from(
                        "leading coefficient must be nonzero",
                    )));
                }
                m.to_vec()
            }
        };
        let field = ResidueField { p, k, size, modulus };
        if k > 1 {
            field.check_primitive()?;
        }
        Ok(field)
    }

    /// The root of the modulus must have multiplicative order exactly
    /// `p^k - 1`; this also rules out reducible moduli, whose root would be
    /// a zero divisor and never reach 1.
    fn check_primitive(&self) -> Result<(), Error> {
        let x = FieldElem(self.p); // the monomial x
        let mut acc = x;
        for _ in 1..self.size - 1 {
            if acc == FieldElem::ONE {
                return Err(Error::NotPrimitive);
            }
            acc = self.mul(acc, x);
        }
        if acc != FieldElem::ONE {
            return Err(Error::NotPrimitive);
        }
        Ok(())
    }

    /// Characteristic prime `p`.
    pub fn p(&self) -> u32 {
        self.p
    }

    /// Extension degree `k`.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Field size `q = p^k`.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Modulus coefficients (low degree first); empty for `k = 1`.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Validated constructor from a packed encoding in `0..p^k`.
    pub fn element(&self, encoding: u32) -> Result<FieldElem, Error> {
        if encoding < self.size {
            Ok(FieldElem(encoding))
        } else {
            Err(Error::OutOfRange {
                value: encoding as u64,
                bound: self.size as u64,
            })
        }
    }

    /// All field elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> {
        (0..self.size).map(FieldElem)
    }

    fn coeffs(&self, a: FieldElem) -> Vec<u32> {
        let mut c = vec![0u32; self.k as usize];
        let mut rest = a.0;
        for d in c.iter_mut() {
            *d = rest % self.p;
            rest /= self.p;
        }
        c
    }

    fn pack(&self, coeffs: &[u32]) -> FieldElem {
        let mut enc = 0u32;
        for &c in coeffs.iter().rev() {
            enc = enc * self.p + c % self.p;
        }
        FieldElem(enc)
    }

    /// Field addition (coefficientwise mod `p`).
    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.k == 1 {
            return FieldElem((a.0 + b.0) % self.p);
        }
        let ca = self.coeffs(a);
        let cb = self.coeffs(b);
        let sum: Vec<u32> = ca.iter().zip(&cb).map(|(&x, &y)| (x + y) % self.p).collect();
        self.pack(&sum)
    }

    /// Additive inverse.
    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.k == 1 {
            return FieldElem((self.p - a.0) % self.p);
        }
        let ca = self.coeffs(a);
        let neg: Vec<u32> = ca.iter().map(|&x| (self.p - x) % self.p).collect();
        self.pack(&neg)
    }

    /// Field subtraction.
    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    /// Field multiplication; for `k > 1` a convolution reduced by the
    /// modulus.
    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.k == 1 {
            return FieldElem(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        let ca = self.coeffs(a);
        let cb = self.coeffs(b);
        let k = self.k as usize;
        let p = self.p as u64;
        let mut prod = vec![0u64; 2 * k - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Long division by the modulus; its leading coefficient need not
        // be 1, so divide through by its inverse.
        let lead_inv = mod_inverse(self.modulus[k] as u64, p);
        for deg in (k..2 * k - 1).rev() {
            let factor = prod[deg] * lead_inv % p;
            if factor == 0 {
                continue;
            }
            for (i, &m) in self.modulus.iter().enumerate() {
                let idx = deg - k + i;
                prod[idx] = (prod[idx] + p * p - factor * m as u64 % p) % p;
            }
        }
        let low: Vec<u32> = prod[..k].iter().map(|&c| c as u32).collect();
        self.pack(&low)
    }

    /// `a^exp` by binary exponentiation.
    pub fn pow(&self, a: FieldElem, mut exp: u64) -> FieldElem {
        let mut base = a;
        let mut acc = FieldElem::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// The field element whose power-basis coordinates are the base-`p`
    /// digits of `index`: writing `index = d_0 + d_1 p + ... + d_{k-1} p^{k-1}`,
    /// the result is `d_0 + d_1 x + ... + d_{k-1} x^{k-1}` where `x` is the
    /// root of the modulus. By construction its packed encoding equals
    /// `index` again; the round trip is asserted in tests.
    pub fn element_from_index(&self, index: u64) -> Result<FieldElem, Error> {
        if index >= self.size as u64 {
            return Err(Error::OutOfRange {
                value: index,
                bound: self.size as u64,
            });
        }
        let digits = digits_in_base(index, self.p as u64, self.k as usize)?;
        let x = if self.k == 1 { FieldElem::ONE } else { FieldElem(self.p) };
        let mut acc = FieldElem::ZERO;
        let mut xpow = FieldElem::ONE;
        for &d in &digits {
            let term = self.mul(self.scalar(d as u32), xpow);
            acc = self.add(acc, term);
            xpow = self.mul(xpow, x);
        }
        Ok(acc)
    }

    /// The constant field element `c * 1` for `c` in `0..p`.
    fn scalar(&self, c: u32) -> FieldElem {
        FieldElem(c % self.p)
    }
}

/// Modular inverse by Fermat for prime modulus.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// A finite chain ring from one of the two supported [`Family`]s.
///
/// The ring is a context object: elements are plain [`RingElem`] values and
/// all arithmetic goes through methods on the ring, mirroring how the
/// digit-level representation depends on `(p, k, e)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainRing {
    family: Family,
    e: u32,
    field: ResidueField,
    /// `q^{e+1}` with `q = p^k`.
    size: u64,
    /// `q^e`; encodings divisible by this lie in the socle.
    socle_divisor: u64,
}

impl ChainRing {
    /// Build a chain ring. `modulus` is required exactly when
    /// `family == TruncatedPolynomial` and `k > 1`.
    ///
    /// `e >= 1` is accepted; `e = 1` (nilpotency index 2) is the classical
    /// quaternary-style case and is flagged by [`ChainRing::nilpotency_two`]
    /// so callers can surface a note — the identities in this crate target
    /// `e >= 2` but degenerate gracefully.
    pub fn new(
        family: Family,
        p: u32,
        k: u32,
        e: u32,
        modulus: Option<&[u32]>,
    ) -> Result<Self, Error> {
        if e < 1 {
            return Err(Error::InvalidExponent { e });
        }
        if family == Family::IntegerModular && k != 1 {
            return Err(Error::FamilyRequiresPrimeResidue { k });
        }
        let field = ResidueField::new(p, k, modulus)?;
        let q = field.size() as u64;
        let size = q.checked_pow(e + 1).ok_or(Error::RingTooLarge)?;
        let socle_divisor = size / q;
        Ok(ChainRing {
            family,
            e,
            field,
            size,
            socle_divisor,
        })
    }

    /// `Z_{p^{e+1}}`.
    pub fn integer_modular(p: u32, e: u32) -> Result<Self, Error> {
        ChainRing::new(Family::IntegerModular, p, 1, e, None)
    }

    /// `F_{p^k}[u] / <u^{e+1}>`.
    pub fn truncated_polynomial(p: u32, k: u32, e: u32, modulus: Option<&[u32]>) -> Result<Self, Error> {
        ChainRing::new(Family::TruncatedPolynomial, p, k, e, modulus)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Nilpotency parameter: the ideal generator satisfies `g^{e+1} = 0`,
    /// `g^e != 0`.
    pub fn e(&self) -> u32 {
        self.e
    }

    /// The residue field `F_{p^k}`.
    pub fn field(&self) -> &ResidueField {
        &self.field
    }

    /// Characteristic prime of the residue field.
    pub fn p(&self) -> u32 {
        self.field.p()
    }

    /// Residue field extension degree.
    pub fn k(&self) -> u32 {
        self.field.k()
    }

    /// Number of ring elements, `q^{e+1}`.
    pub fn size(&self) -> u64 {
        self.size
    }

    /// Digit base `q = p^k` (= residue field size).
    pub fn digit_base(&self) -> u64 {
        self.field.size() as u64
    }

    /// Additive characteristic of the ring.
    pub fn characteristic(&self) -> u64 {
        match self.family {
            Family::IntegerModular => self.size,
            Family::TruncatedPolynomial => self.p() as u64,
        }
    }

    /// Number of units: everything outside the maximal ideal.
    pub fn unit_count(&self) -> u64 {
        self.size - self.size / self.digit_base()
    }

    /// True for `e = 1`, the nilpotency-index-2 case. Everything still
    /// works there, but the weight/shift identities are mainly interesting
    /// for `e >= 2`; front ends use this to print a note.
    pub fn nilpotency_two(&self) -> bool {
        self.e == 1
    }

    /// Short human-readable name, e.g. `Z_8` or `F_4[u]/u^3`.
    pub fn describe(&self) -> String {
        match self.family {
            Family::IntegerModular => format!("Z_{}", self.size),
            Family::TruncatedPolynomial => {
                format!("F_{}[u]/u^{}", self.field.size(), self.e + 1)
            }
        }
    }

    /// Validated constructor from a canonical encoding in `0..q^{e+1}`.
    pub fn element(&self, encoding: u64) -> Result<RingElem, Error> {
        if encoding < self.size {
            Ok(RingElem(encoding))
        } else {
            Err(Error::OutOfRange {
                value: encoding,
                bound: self.size,
            })
        }
    }

    /// All ring elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = RingElem> {
        (0..self.size).map(RingElem)
    }

    pub fn zero(&self) -> RingElem {
        RingElem(0)
    }

    pub fn one(&self) -> RingElem {
        RingElem(1)
    }

    /// The generator of the maximal ideal: `p` in the integer-modular
    /// family, `u` in the truncated-polynomial family. In both cases its
    /// encoding is the digit base.
    pub fn ideal_generator(&self) -> RingElem {
        RingElem(self.digit_base())
    }

    /// `g^j` for the ideal generator `g`; zero once `j > e`.
    pub fn ideal_generator_pow(&self, j: u32) -> RingElem {
        if j > self.e {
            RingElem(0)
        } else {
            RingElem(self.digit_base().pow(j))
        }
    }

    /// The digit expansion `r = a_0 + a_1 g + ... + a_e g^e`, least
    /// significant first, each digit a residue-field constant. The
    /// expansion is unique, and `from_digits` inverts it.
    pub fn digits(&self, r: RingElem) -> Vec<FieldElem> {
        let q = self.digit_base();
        let mut out = Vec::with_capacity(self.e as usize + 1);
        let mut rest = r.0;
        for _ in 0..=self.e {
            out.push(FieldElem((rest % q) as u32));
            rest /= q;
        }
        out
    }

    /// Rebuild an element from its `e + 1` digits.
    pub fn from_digits(&self, digits: &[FieldElem]) -> Result<RingElem, Error> {
        if digits.len() != self.e as usize + 1 {
            return Err(Error::BadLength {
                found: digits.len(),
                expected: self.e as usize + 1,
            });
        }
        let q = self.digit_base();
        let mut enc = 0u64;
        for d in digits.iter().rev() {
            if (d.encoding() as u64) >= q {
                return Err(Error::OutOfRange {
                    value: d.encoding() as u64,
                    bound: q,
                });
            }
            enc = enc * q + d.encoding() as u64;
        }
        Ok(RingElem(enc))
    }

    /// Image in the residue field (the constant digit `a_0`).
    pub fn residue(&self, r: RingElem) -> FieldElem {
        FieldElem((r.0 % self.digit_base()) as u32)
    }

    /// Units are exactly the elements with nonzero residue.
    pub fn is_unit(&self, r: RingElem) -> bool {
        !r.0.is_multiple_of(self.digit_base())
    }

    /// True on the socle `<g^e>`, the minimal nonzero ideal: all digits
    /// below the top one vanish.
    pub fn in_socle(&self, r: RingElem) -> bool {
        r.0.is_multiple_of(self.socle_divisor)
    }

    /// Ring addition.
    pub fn add(&self, a: RingElem, b: RingElem) -> RingElem {
        match self.family {
            Family::IntegerModular => RingElem((a.0 + b.0) % self.size),
            Family::TruncatedPolynomial => {
                self.zip_digits(a, b, |f, x, y| f.add(x, y))
            }
        }
    }

    /// Additive inverse.
    pub fn neg(&self, a: RingElem) -> RingElem {
        match self.family {
            Family::IntegerModular => RingElem((self.size - a.0) % self.size),
            Family::TruncatedPolynomial => {
                self.zip_digits(a, RingElem(0), |f, x, _| f.neg(x))
            }
        }
    }

    /// Ring subtraction.
    pub fn sub(&self, a: RingElem, b: RingElem) -> RingElem {
        self.add(a, self.neg(b))
    }

    /// Ring multiplication: integers mod `p^{e+1}`, or a `u`-truncated
    /// convolution of digit vectors with field-coefficient arithmetic.
    pub fn mul(&self, a: RingElem, b: RingElem) -> RingElem {
        match self.family {
            Family::IntegerModular => {
                RingElem((a.0 as u128 * b.0 as u128 % self.size as u128) as u64)
            }
            Family::TruncatedPolynomial => {
                let da = self.digits(a);
                let db = self.digits(b);
                let f = &self.field;
                let len = self.e as usize + 1;
                let mut out = vec![FieldElem::ZERO; len];
                for (i, &x) in da.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for (j, &y) in db.iter().enumerate().take(len - i) {
                        out[i + j] = f.add(out[i + j], f.mul(x, y));
                    }
                }
                // Digits stay in range, so from_digits cannot fail.
                self.from_digits(&out).expect("digit arithmetic stays in range")
            }
        }
    }

    /// `a^exp` by binary exponentiation.
    pub fn pow(&self, a: RingElem, mut exp: u64) -> RingElem {
        let mut base = a;
        let mut acc = self.one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a unit, found by Euler's theorem on the
    /// unit group (its order is `unit_count`).
    pub fn inverse(&self, a: RingElem) -> Result<RingElem, Error> {
        if !self.is_unit(a) {
            return Err(Error::NotAUnit { encoding: a.0 });
        }
        Ok(self.pow(a, self.unit_count() - 1))
    }

    fn zip_digits(
        &self,
        a: RingElem,
        b: RingElem,
        op: impl Fn(&ResidueField, FieldElem, FieldElem) -> FieldElem,
    ) -> RingElem {
        let q = self.digit_base();
        let mut ea = a.0;
        let mut eb = b.0;
        let mut enc = 0u64;
        let mut place = 1u64;
        for _ in 0..=self.e {
            let x = FieldElem((ea % q) as u32);
            let y = FieldElem((eb % q) as u32);
            enc += op(&self.field, x, y).encoding() as u64 * place;
            ea /= q;
            eb /= q;
            place *= q;
        }
        RingElem(enc)
    }
}

impl core::fmt::Display for ChainRing {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.describe())
    }
}
