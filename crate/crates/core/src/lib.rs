//! Core library for constructing and verifying completely transitive binary
//! codes and their distance partitions.
//!
//! The crate is organized bottom-up:
//!
//! - [`word`] and [`code`] give bit-packed words and codes (linear or
//!   explicit word lists);
//! - [`partition`] computes distance partitions of the ambient Hamming space
//!   with bitset breadth-first search;
//! - [`dist`] holds exact Krawtchouk transforms, dual distance distributions,
//!   and external distance;
//! - [`regular`] decides complete regularity and related coset invariants;
//! - [`geometry`] and [`groups`] supply the projective-plane machinery and
//!   permutation-group algorithms the verifications lean on;
//! - [`zoo`] constructs the named codes themselves.

pub mod code;
pub mod comb;
pub mod designs;
pub mod dist;
pub mod error;
pub mod geometry;
pub mod groups;
pub mod partition;
pub mod regular;
pub mod word;
pub mod zoo;

pub use code::Code;
pub use error::{Error, Result};
pub use word::Word;
