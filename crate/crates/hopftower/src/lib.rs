//! Exact-integer computations on pairs of graded dual free modules given
//! by structure constants, and the dual graded graphs their degree-1
//! elements generate.
//!
//! The pipeline, end to end:
//!
//! 1. pick an instance — a structure-constant pair with distinguished
//!    nonnegative bases ([`instances`]: self-dual `sym` in the Schur
//!    basis, or the ribbon/fundamental pair `nsym-qsym`);
//! 2. verify the dual-Hopf axioms empirically up to a degree cutoff
//!    ([`hopf`]);
//! 3. pick weighted degree-1 elements `alpha`, `beta` and build the
//!    graded graph pair `Gamma(beta)`, `Gamma'(alpha)` ([`construct`]);
//! 4. check the commutation identity `D'U - UD' = r*Id` and Fomin's
//!    path-count identity `r^n n! = sum_v f^v f'^v` ([`graph`]);
//! 5. read off the per-rank dimension table and check that it equals
//!    `r^n n!` ([`tower`]).
//!
//! All arithmetic is checked 64-bit integer arithmetic: results are exact
//! and overflow is an error, never a wrap. Every enumeration order is
//! pinned, so all output is byte-deterministic.
//!
//! With the `parallel` feature (on by default) the verification sweeps
//! and graph construction fan out over rayon; without it the same code
//! runs sequentially with identical results.

pub mod combinat;
pub mod construct;
pub mod element;
pub mod error;
pub mod graph;
pub mod hopf;
pub mod instances;
pub mod tower;

mod arith;
mod par;

pub use error::{Error, Result};
