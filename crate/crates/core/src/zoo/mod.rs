//! Constructions of the specific codes the toolkit studies.
//!
//! Each submodule builds one family from first principles and verifies its
//! defining parameters during construction, so a successfully returned code
//! is already known to have the advertised length, size and minimum
//! distance.  The `registry` submodule collects every construction under a
//! stable name with its claimed invariants.

pub mod ff;
pub mod golay;
pub mod gqr;
pub mod hadamard;
pub mod menu;
pub mod equiv;
pub mod nr;
pub mod registry;
pub mod unital;
pub mod witt;
