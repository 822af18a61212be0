//! Agendas, judgment sets, profiles and the structural analyses built on them.

#[allow(clippy::module_inception)]
mod agenda;
mod binary;
mod domains;
mod judgment;
mod profile;
mod structure;

pub use agenda::Agenda;
pub use binary::{from_binary, to_binary, BinaryProblem};
pub use domains::{restricted_domain_report, DomainReport};
pub use judgment::{full_mask, JudgmentSet, SignedJudgment, Verdict};
pub use profile::{Occurrence, Profile};
pub use structure::{
    agenda_report, check_independent_partition, check_iod, check_syntactic_partition, minimal_inconsistent_subsets,
    AgendaReport,
};

pub(crate) use domains::all_permutations;
pub(crate) use judgment::mask_of;
