//! Exact-arithmetic tools for low-dimensional nilpotent Lie algebras.
//!
//! Everything runs over ℚ with arbitrary-precision rationals, so every
//! result in this crate is exact: ranks, nullspaces and Jordan partitions
//! ([`matrix`]); structure-constant Lie algebras with their central
//! series, nilindex, associativity-family checks and characteristic
//! sequences ([`lie`]); the mixed deformation cohomology of two-step
//! nilpotent algebras and the exterior-algebra homology ([`cohomology`]);
//! generating-function identities for the associated operads ([`operad`]);
//! bundled classification catalogs in dimensions ≤ 7 ([`catalog`]); and
//! linear deformations with normal-form extraction ([`deform`]).
//!
//! The heavy sweeps are data-parallel via rayon behind the default
//! `parallel` feature; disabling it (or calling
//! [`parallel::set_enabled`]`(false)`) falls back to sequential loops with
//! identical results.

pub mod catalog;
pub mod cochain;
pub mod cohomology;
pub mod deform;
pub mod interchange;
pub mod lie;
pub mod matrix;
pub mod operad;
pub mod parallel;
pub mod rational;

pub use cochain::AlternatingCochain;
pub use cohomology::{CohomologyReport, Rigidity};
pub use lie::{CharSequence, StructureTensor, SubspaceChain};
pub use matrix::{ExactMatrix, Partition};
pub use rational::Rational;
