//! Finite geometry over the four-element field: the projective plane of
//! order four, its hyperovals and order-two subplanes, and the binary codes
//! they span.

pub mod gf4;
pub mod modules;
pub mod ovals;
pub mod plane;
