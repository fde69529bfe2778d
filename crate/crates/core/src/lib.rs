//! Exact arithmetic over finite chain rings, the associated Gray isometry,
//! and the shift operators that make constacyclic codes correspond to
//! quasicyclic codes over the residue field.
//!
//! The crate is organised bottom-up:
//!
//! * [`ring`] — the two chain-ring families, digit expansions, residue fields;
//! * [`gray`] — homogeneous weight/distance and the Gray map with its inverse;
//! * [`shifts`] — constacyclic shifts, block shifts, Nechaev permutations,
//!   and the twist maps that relate cyclic codes to constacyclic ones;
//! * [`codes`] — finite code enumeration and structural predicates
//!   (linearity, constacyclicity, quasicyclicity, distance invariance);
//! * [`verify`] — a small harness that checks the commutation identities
//!   either exhaustively or on seeded random samples and reports
//!   counterexamples when a claim fails.
//!
//! Everything is exact integer arithmetic; the crate is `no_std` + `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

mod error;
pub mod ring;
pub mod gray;
pub mod shifts;
pub mod codes;
pub mod verify;

pub use error::Error;
pub use ring::{ChainRing, Family, FieldElem, ResidueField, RingElem};
