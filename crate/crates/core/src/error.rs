use thiserror::Error;

use crate::rational::Rational;

/// Everything that can go wrong while building or analysing a Betti table.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BettiError {
    #[error("negative entry {value} at (i={i}, j={j})")]
    NegativeEntry { i: usize, j: i64, value: Rational },

    #[error("broken chain at (i={i}, j={j}): column {} has no entry below degree {j}", i - 1)]
    BrokenChain { i: usize, j: i64 },

    #[error("duplicate entry at (i={i}, j={j})")]
    DuplicateEntry { i: usize, j: i64 },

    #[error("table has no nonzero entries")]
    EmptyTable,

    #[error("invalid degree sequence {degrees:?}: {reason}")]
    InvalidSequence {
        degrees: Vec<i64>,
        reason: &'static str,
    },

    #[error("table has length 0; a degree sequence of length >= 1 is required")]
    ZeroLength,

    #[error("length mismatch: table has length {length}, requested s = {s}")]
    LengthMismatch { length: usize, s: usize },

    #[error("not Cohen-Macaulay consistent: functional l={l} is {value}, expected 0")]
    NotCohenMacaulayConsistent { l: usize, value: Rational },

    #[error("invalid N = {n}: need N >= {min}")]
    InvalidN { n: i64, min: i64 },

    #[error("not in cone at step {step}: {reason}")]
    NotInCone { step: usize, reason: String },

    #[error("decomposition is not closed under duality: {0}")]
    NotDualClosed(String),

    #[error("decomposition has no terms")]
    EmptyDecomposition,

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(String),

    #[error("degree sequence {0:?} does not start at 0")]
    NonZeroStart(Vec<i64>),

    #[error("table is not generated in degree zero (m_0 = {m0})")]
    NotDegreeZeroGenerated { m0: i64 },

    #[error("resolution is not quasi-pure")]
    NotQuasiPure,

    #[error("table has length {0}, codimension 3 required")]
    NotCodimThree(usize),

    #[error("table is not cyclic (need a single generator in degree 0)")]
    NotCyclic,

    #[error("no degree j with beta_1,j > beta_2,j")]
    NoSuchDegree,

    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T, E = BettiError> = std::result::Result<T, E>;
