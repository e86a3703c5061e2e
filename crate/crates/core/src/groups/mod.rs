//! Group actions on Hamming space: permutations, graph automorphisms,
//! orbit engines, transitivity tests, and stabilizer chains.

pub mod autsearch;
pub mod construct;
pub mod gens;
pub mod haut;
pub mod orbits;
pub mod perm;
pub mod schreier;
pub mod subsets;
pub mod verify;
