use crate::agenda::JudgmentSet;

/// Result of an irresolute rule: a non-empty, canonically ordered collection
/// of rational judgment sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub rule: String,
    pub sets: Vec<JudgmentSet>,
    pub note: Option<String>,
}

impl Outcome {
    pub fn new(rule: impl Into<String>, sets: impl IntoIterator<Item = JudgmentSet>) -> Self {
        let mut sets: Vec<JudgmentSet> = sets.into_iter().collect();
        sets.sort();
        sets.dedup();
        Outcome { rule: rule.into(), sets, note: None }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn contains(&self, j: &JudgmentSet) -> bool {
        self.sets.binary_search(j).is_ok()
    }

    /// Every set of `self` is also in `other`.
    pub fn refines(&self, other: &Outcome) -> bool {
        self.sets.iter().all(|j| other.contains(j))
    }

    pub fn same_sets(&self, other: &Outcome) -> bool {
        self.sets == other.sets
    }

    pub fn is_resolute(&self) -> bool {
        self.sets.len() == 1
    }

    /// Keeps only the canonically smallest set.
    pub fn tie_break(&self) -> Outcome {
        Outcome { rule: self.rule.clone(), sets: self.sets.iter().take(1).copied().collect(), note: self.note.clone() }
    }
}

/// Result of a rule that may leave issues undecided.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialOutcome {
    pub rule: String,
    pub set: JudgmentSet,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleOutput {
    Sets(Outcome),
    Partial(PartialOutcome),
}
