//! Symbolic workbench for countable complete partial orders.
//!
//! Orders are finite sums of `n`, `ω` and `ω*` ([`order`]); their elements
//! are monotypic binary strings or pairs of them ([`strings`], [`named`]).
//! On top of that sit the finite stage construction with its embedding and
//! projection maps ([`stages`]), Scott-continuous function spaces and the
//! fixed point engine ([`funcspace`]), adjunction and boundary analysis
//! ([`adjunction`]) and the replication pipeline ([`replication`]).

pub mod adjunction;
pub mod error;
pub mod funcspace;
pub mod named;
pub mod order;
pub mod replication;
pub mod stages;
pub mod strings;

pub use error::{Error, Result};
