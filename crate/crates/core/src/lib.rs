//! Submodular set-functions and their convex analysis.
//!
//! Subsets of the ground set `V = {0, .., p-1}` are bitmasks ([`Subset`]) and
//! every function is an evaluation oracle ([`SetFunction`]) with `F(∅) = 0`.
//! On top of that sit the Lovász extension and greedy algorithm
//! ([`lovasz`]), membership and maximizer tests for the associated polyhedra
//! ([`polyhedra`]), minimization with duality certificates ([`sfm`]),
//! separable proximal problems ([`prox`]), submodularity-preserving
//! constructions ([`transforms`]) and a library of classical examples
//! ([`zoo`]).

pub mod error;
pub mod lovasz;
pub mod polyhedra;
pub mod prox;
pub mod setfn;
pub mod sfm;
pub mod transforms;
pub mod zoo;

pub use error::{Error, Result};
pub use setfn::{SetFunction, SharedFn, Subset};
