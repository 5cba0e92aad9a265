//! Freely braided elements of simply laced Coxeter groups.
//!
//! The crate covers the integer reflection representation, root sequences
//! and braid moves, contractible inversion triples, freely braided and
//! content-maximal elements, Bruhat lower sets with palindromicity
//! (smoothness) verdicts, and the content-maximal counts of the A, D and E
//! families together with their generating functions.

pub mod braid;
pub mod bruhat;
pub mod budget;
pub mod cli;
pub mod element;
pub mod enumeration;
pub mod error;
pub mod graph;
pub mod pattern;
pub mod root;
pub mod verify;

pub use braid::{
    greedy_braids, is_content_maximal, is_freely_braided, BraidOccurrence, BraidSequence,
    ClassificationRecord, ContractibilityRule, FlaggedTriple, InversionTriple, RootSequence,
};
pub use bruhat::{is_palindromic, Polynomial, SmoothnessVerdict};
pub use budget::Budgets;
pub use element::{GroupElement, Side, Word};
pub use enumeration::{CensusOptions, CensusReport, ChainClass, RationalSeries};
pub use error::{Error, Result};
pub use graph::{CoxeterGraph, Family};
pub use root::Root;
