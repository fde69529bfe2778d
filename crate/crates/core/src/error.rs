use alloc::string::String;
use core::fmt;

/// Errors raised by ring construction, operator preconditions, and
/// enumeration limits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The characteristic parameter is not a prime number.
    NotPrime(u64),
    /// The integer-modular family only exists for extension degree `k = 1`.
    FamilyRequiresPrimeResidue { k: u32 },
    /// The extension degree must satisfy `k >= 1`.
    InvalidDegree { k: u32 },
    /// The nilpotency parameter must satisfy `e >= 1`.
    InvalidExponent { e: u32 },
    /// The field modulus is missing, has the wrong degree, or has
    /// coefficients outside `0..p`.
    BadModulus(String),
    /// The field modulus is not primitive: its root does not generate the
    /// multiplicative group of the extension field.
    NotPrimitive,
    /// The requested ring does not fit in the supported integer range.
    RingTooLarge,
    /// A raw value does not encode an element of the structure.
    OutOfRange { value: u64, bound: u64 },
    /// Two vectors that must have equal length do not.
    LengthMismatch { left: usize, right: usize },
    /// A vector does not have the length required by the operation.
    BadLength { found: usize, expected: usize },
    /// The element used as a constacyclic unit is not invertible.
    NotAUnit { encoding: u64 },
    /// The code length must be coprime to the characteristic prime.
    NotCoprime { n: usize, p: u32 },
    /// The supplied residue is not an inverse of `n` modulo `p`.
    BadInverse { nprime: u32, n: usize, p: u32 },
    /// An image table does not describe a permutation.
    NotAPermutation { index: usize },
    /// A word cannot be cut into blocks of the required length.
    NotBlockAligned { len: usize, block: usize },
    /// An enumeration grew past the configured cap.
    CapExceeded { reached: u64, cap: u64 },
    /// A distance computation needs at least two codewords.
    TooFewWords { count: usize },
    /// A verification plan cannot be run as written.
    InvalidPlan(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::FamilyRequiresPrimeResidue { k } => {
                write!(f, "integer-modular rings need k = 1, got k = {k}")
            }
            Error::InvalidDegree { k } => write!(f, "extension degree must be >= 1, got {k}"),
            Error::InvalidExponent { e } => {
                write!(f, "nilpotency parameter must be >= 1, got e = {e}")
            }
            Error::BadModulus(msg) => write!(f, "bad field modulus: {msg}"),
            Error::NotPrimitive => write!(f, "field modulus is not primitive"),
            Error::RingTooLarge => write!(f, "ring size exceeds the supported integer range"),
            Error::OutOfRange { value, bound } => {
                write!(f, "value {value} is out of range (bound {bound})")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::BadLength { found, expected } => {
                write!(f, "bad vector length: found {found}, expected {expected}")
            }
            Error::NotAUnit { encoding } => {
                write!(f, "element {encoding} is not a unit")
            }
            Error::NotCoprime { n, p } => {
                write!(f, "length n = {n} must be coprime to p = {p}")
            }
            Error::BadInverse { nprime, n, p } => {
                write!(f, "{nprime} is not an inverse of n = {n} modulo p = {p}")
            }
            Error::NotAPermutation { index } => {
                write!(f, "image table is not a permutation (problem at index {index})")
            }
            Error::NotBlockAligned { len, block } => {
                write!(f, "length {len} is not a multiple of the block length {block}")
            }
            Error::CapExceeded { reached, cap } => {
                write!(f, "enumeration cap exceeded: reached {reached}, cap {cap}")
            }
            Error::TooFewWords { count } => {
                write!(f, "need at least two codewords, got {count}")
            }
            Error::InvalidPlan(msg) => write!(f, "invalid plan: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
