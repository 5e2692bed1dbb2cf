//! Error type shared by the whole crate.
//!
//! All coefficient arithmetic is checked: an `Overflow` is a hard error,
//! never a silent wrap. Verification *failures* (a violated axiom, a
//! non-scalar commutator, a wrong dimension) are not errors — they are
//! reported as data by the check that found them.

use std::fmt;

use crate::element::{Family, Side};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Checked 64-bit arithmetic overflowed in the named operation.
    Overflow(&'static str),
    /// Parts are not weakly decreasing positive integers.
    InvalidPartition(Vec<u32>),
    /// Parts are not positive integers.
    InvalidComposition(Vec<u32>),
    /// Input word is not a permutation of 1..n.
    NotPermutation(Vec<u32>),
    /// An element of the wrong side (H_bullet vs H^bullet) was supplied.
    SideMismatch { expected: Side, found: Side },
    /// Elements of two different instances were combined.
    FamilyMismatch { left: Family, right: Family },
    /// Operation requires a homogeneous element.
    NotHomogeneous,
    /// A structure provider was asked about a label it does not index.
    UnknownLabel { side: Side, label: String },
    /// A provider produced a negative structure constant; the graph
    /// construction is undefined in that case, so it is rejected.
    NegativeStructureConstant { side: Side, context: String },
    /// Negative coefficient where a nonnegative one is required.
    NegativeCoefficient { context: &'static str },
    /// Element is not homogeneous of degree 1.
    DegreeNotOne { found: Option<u32>, context: &'static str },
    /// A nonzero element is required.
    ZeroElement { context: &'static str },
    /// Weight vector length differs from the degree-1 basis size.
    WeightCount { expected: usize, found: usize },
    /// Weights must be >= 1.
    NonpositiveWeight(i64),
    /// Graph constructor rejected inconsistent rank/matrix shapes.
    GraphShape(String),
    /// Requested rank is outside the materialized horizon.
    RankOutOfRange { rank: usize, max: usize },
    /// The two graphs do not share vertex labels at the given rank.
    VertexSetMismatch { rank: usize },
    /// A check that requires a dual pair was run on a non-dual pair.
    NotDual { rank: usize },
    /// A vertex unreachable from the root; dimensions cannot be zero.
    ZeroPathCount { rank: usize, vertex: String },
    /// Dimension table has no entry for the requested rank.
    MissingRank(usize),
    /// Dimension table file was malformed or violated its invariants.
    InvalidTowerData(String),
    /// No instance registered under this key.
    UnknownInstance(String),
    /// Polynomial could not be decomposed into Schur polynomials.
    SchurExpansion(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Overflow(op) => write!(f, "integer overflow in {op}"),
            Error::InvalidPartition(p) => write!(f, "invalid partition parts {p:?}"),
            Error::InvalidComposition(p) => write!(f, "invalid composition parts {p:?}"),
            Error::NotPermutation(w) => write!(f, "{w:?} is not a permutation of 1..n"),
            Error::SideMismatch { expected, found } => {
                write!(f, "side mismatch: expected {expected}, found {found}")
            }
            Error::FamilyMismatch { left, right } => {
                write!(f, "family mismatch: {left} vs {right}")
            }
            Error::NotHomogeneous => write!(f, "element is not homogeneous"),
            Error::UnknownLabel { side, label } => {
                write!(f, "unknown {side} basis label {label}")
            }
            Error::NegativeStructureConstant { side, context } => {
                write!(f, "negative structure constant on {side} side in {context}")
            }
            Error::NegativeCoefficient { context } => {
                write!(f, "negative coefficient in {context}")
            }
            Error::DegreeNotOne { found, context } => match found {
                Some(d) => write!(f, "{context} must have degree 1, found degree {d}"),
                None => write!(f, "{context} must be homogeneous of degree 1"),
            },
            Error::ZeroElement { context } => write!(f, "{context} must be nonzero"),
            Error::WeightCount { expected, found } => {
                write!(f, "expected {expected} weight pairs, found {found}")
            }
            Error::NonpositiveWeight(w) => write!(f, "weights must be >= 1, found {w}"),
            Error::GraphShape(msg) => write!(f, "inconsistent graph data: {msg}"),
            Error::RankOutOfRange { rank, max } => {
                write!(f, "rank {rank} outside materialized range 0..={max}")
            }
            Error::VertexSetMismatch { rank } => {
                write!(f, "graphs disagree on the vertex set at rank {rank}")
            }
            Error::NotDual { rank } => {
                write!(f, "graph pair is not dual (first failure at rank {rank})")
            }
            Error::ZeroPathCount { rank, vertex } => {
                write!(f, "vertex {vertex} at rank {rank} has no path from the root")
            }
            Error::MissingRank(n) => write!(f, "dimension table has no rank {n}"),
            Error::InvalidTowerData(msg) => write!(f, "invalid dimension table: {msg}"),
            Error::UnknownInstance(key) => write!(f, "unknown instance key {key:?}"),
            Error::SchurExpansion(msg) => write!(f, "Schur expansion failed: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
