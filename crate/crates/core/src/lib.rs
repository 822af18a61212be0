//! Judgment aggregation over propositional agendas: agendas and profiles,
//! aggregation rules, distances, property checks and the voting bridge.

pub mod agenda;
pub mod aggregators;
mod caps;
mod error;
pub mod logic;
pub mod metrics;
pub mod preference;
pub mod properties;
pub mod samples;

pub use agenda::{Agenda, JudgmentSet, Profile, SignedJudgment};
pub use caps::Caps;
pub use error::{Error, Result};
pub use logic::{parse_formula, Formula};
