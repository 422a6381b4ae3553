//! Directed Hamilton-Waterloo factorizations of complete symmetric digraphs.
//!
//! A solution to `HWP*(v; m^r, n^s)` partitions the arcs of `K_v*` into `r`
//! spanning unions of directed `m`-cycles and `s` spanning unions of
//! directed `n`-cycles. This crate provides
//!
//! - host builders ([`digraph`]) and the factorization model with its
//!   verifier ([`model`]),
//! - the text format for certificates ([`format`]) and a catalog of
//!   explicit base solutions ([`atlas`]),
//! - the recursive constructions that lift base solutions to every order
//!   they cover ([`constructions`]),
//! - an exact backtracking search used for base-case generation and small
//!   nonexistence proofs ([`search`]).
//!
//! Every factorization returned by a construction has been passed through
//! [`model::verify_factors`] first.

pub mod atlas;
pub mod constructions;
pub mod digraph;
pub mod error;
pub mod format;
pub mod model;
pub mod search;

pub use error::{Error, Result};
