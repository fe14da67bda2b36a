//! Specht modules of symmetric groups in characteristic 2.
//!
//! Two engines that check each other:
//! * a combinatorial oracle for every closed-form structural result about
//!   two-part and hook Specht modules at p = 2 (composition factors, socles,
//!   uniseriality, decomposition numbers, witness tables), and
//! * an exact GF(2) matrix engine that builds the modules explicitly and
//!   enumerates their full submodule lattices.
//!
//! The crate is `no_std` + `alloc`; IO, file formats and the CLI live in the
//! companion crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

use alloc::string::String;

/// Crate-wide error: rejected input with a human-readable reason.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Error(pub String);

impl core::fmt::Display for Error {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.0)
    }
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error(msg.into()))
}

pub mod f2;
pub mod partition;
pub mod twopart;
pub mod tableau;
pub mod rep;
pub mod homs;
pub mod spin;
pub mod backend;
pub mod lattice;
