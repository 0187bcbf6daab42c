//! Lens spaces from surface-slope surgery on doubly primitive knots: the
//! residue criterion, Schubert diagrams of two-bridge links, knot
//! invariants, and a decider that combines them.

pub mod arith;
pub mod cli;
pub mod decide;
pub mod diagram;
pub mod error;
pub mod invariants;
pub mod lens;
pub mod report;
pub mod residue;

pub use error::{Error, Result};
pub use lens::{canonical_form, homeomorphic, normalize_u, DualKnotSpec};
pub use residue::{klein_candidates, residue_sequence, longitudinal_criterion, CriterionResult, LensParams, ResidueProfile};
