//! Exact verification engine for B-module cohomology of relative tangent
//! bundles on Bott-Samelson-Demazure-Hansen varieties in type C.
//!
//! Everything is computed over exact rationals: weights and roots live in
//! `cartan`, the word combinatorics in `weyl`, finite-dimensional B-modules
//! and their operators in `bmod`, the one-step and word-level cohomology
//! recursions in `coh`, and the lemma/theorem bookkeeping in `ledger`.

pub mod bmod;
pub mod cartan;
pub mod coh;
pub mod ledger;
pub mod linalg;
pub mod weyl;
