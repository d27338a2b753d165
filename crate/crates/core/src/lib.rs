//! Exact rational Betti tables and the multiplicity bounds of self-dual
//! (Gorenstein type) resolutions.
//!
//! The crate is organised as
//!
//! * [`table`], [`sequence`], [`pure`]: tables, degree sequences,
//!   Herzog-Kühl pure tables, duality and Peskine-Szpiro multiplicity;
//! * [`decomposition`]: greedy Boij-Söderberg chain decomposition and its
//!   symmetrized form;
//! * [`bounds`]: the theorem bound, Srinivasan's quasi-pure bounds, the
//!   Migliore-Nagel-Zanello codimension-3 bound and the auxiliary `Psi_d`, `b_d`;
//! * [`survey`]: exhaustive and randomized checks of the inequalities
//!   behind the theorem bound;
//! * [`io`]: text and JSON documents.
//!
//! Every computation is exact over [`Rational`].

pub mod bounds;
pub mod decomposition;
pub mod error;
pub mod fixtures;
pub mod io;
pub mod pure;
pub mod rational;
pub mod sequence;
pub mod survey;
pub mod table;

pub use bounds::{bounds_report, BoundsReport, Verdict};
pub use decomposition::{
    es_decompose, symmetrize, synthesize, verify_decomposition, ChainDecomposition, ChainTerm,
    SymmetrizedDecomposition, SymmetrizedTerm, VerificationReport,
};
pub use error::{BettiError, Result};
pub use pure::{pure_table, symmetrized_pure_table};
pub use rational::Rational;
pub use sequence::DegreeSequence;
pub use survey::{enumerate_sequences, run_survey, SurveyKind, SurveyResult};
pub use table::{BettiTable, ShiftProfile};
