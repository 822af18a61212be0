//! Propositional formulas: syntax, parsing, printing and brute-force semantics.

mod formula;
mod parser;
mod semantics;

pub use formula::{atoms, is_identifier, BinOp, Formula};
pub use parser::parse_formula;
pub(crate) use semantics::{check_universe, valuations, Compiled};
pub use semantics::{entails, evaluate, is_consistent_set, is_consistent_set_capped, Valuation};
