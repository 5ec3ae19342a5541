//! Probabilistic alignment of two RDFS ontologies.
//!
//! Given two ontologies, the engine iterates instance-equivalence and
//! relation-inclusion estimates to a fixpoint, then derives class
//! inclusions from the final instance assignment. Every score is a
//! probability obtained by treating the pieces of evidence as independent
//! events (see [`calculus`]).
//!
//! The crate is organised bottom-up:
//!
//! * [`store`]: interned, inverse-closed, schema-closed statement store.
//! * [`ntriples`]: N-Triples ingestion, alignment TSV and gold standard IO.
//! * [`functionality`]: global (inverse) functionality of every relation.
//! * [`literal`]: a-priori literal equality.
//! * [`engine`]: the fixpoint itself.
//! * [`evaluation`]: precision/recall against a gold standard.

pub mod calculus;
pub mod engine;
pub mod evaluation;
pub mod functionality;
pub mod literal;
pub mod ntriples;
pub mod store;

pub use engine::{
    AlignmentConfig, AlignmentResult, Aligner, ClassAlignmentTable, EquivalenceTable,
    MaximalAssignment, SubrelationTable,
};
pub use functionality::{FunctionalityMode, FunctionalityTable};
pub use literal::LiteralMode;
pub use store::{Ontology, Origin, RelId, Statement, TermId, TermKind};
