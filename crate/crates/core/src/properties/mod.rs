//! Property checks for aggregation rules on concrete instances, bounded
//! counterexample search and refinement comparison between rules.
//!
//! Verdicts certify instances only: a search that finds nothing reports
//! the bounds it exhausted, never a proof.

mod checks;
mod search;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::agenda::Profile;
use crate::aggregators::Rule;
use crate::error::{Error, Result};

pub use checks::strengthening;
pub use search::{catalog, compare_rules, search_counterexample, Bounds, Comparison, Relation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    MajorityPreservation,
    WeakUnanimity,
    StrongUnanimity,
    Monotonicity,
    AgendaSeparability,
    OverlappingSeparability,
    Reinforcement,
    Homogeneity,
    Anonymity,
    SenAlpha,
    SenBeta,
    Responsiveness,
    UnanimityPreservation,
    Independence,
    IssueNeutrality,
    DomainNeutrality,
    NeutralMonotonicity,
    SetMonotonicity,
}

/// What an instance must carry besides the profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Shape {
    Single,
    Pair,
    Partition,
    Overlap,
    Subagenda,
    Repeat,
}

impl Property {
    pub const ALL: [Property; 18] = [
        Property::MajorityPreservation,
        Property::WeakUnanimity,
        Property::StrongUnanimity,
        Property::Monotonicity,
        Property::AgendaSeparability,
        Property::OverlappingSeparability,
        Property::Reinforcement,
        Property::Homogeneity,
        Property::Anonymity,
        Property::SenAlpha,
        Property::SenBeta,
        Property::Responsiveness,
        Property::UnanimityPreservation,
        Property::Independence,
        Property::IssueNeutrality,
        Property::DomainNeutrality,
        Property::NeutralMonotonicity,
        Property::SetMonotonicity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::MajorityPreservation => "majority-preservation",
            Property::WeakUnanimity => "weak-unanimity",
            Property::StrongUnanimity => "strong-unanimity",
            Property::Monotonicity => "monotonicity",
            Property::AgendaSeparability => "agenda-separability",
            Property::OverlappingSeparability => "oas",
            Property::Reinforcement => "reinforcement",
            Property::Homogeneity => "homogeneity",
            Property::Anonymity => "anonymity",
            Property::SenAlpha => "sen-alpha",
            Property::SenBeta => "sen-beta",
            Property::Responsiveness => "responsiveness",
            Property::UnanimityPreservation => "unanimity-preservation",
            Property::Independence => "independence",
            Property::IssueNeutrality => "issue-neutrality",
            Property::DomainNeutrality => "domain-neutrality",
            Property::NeutralMonotonicity => "neutral-monotonicity",
            Property::SetMonotonicity => "set-monotonicity",
        }
    }

    /// Properties stated for rules with a single collective set; they are
    /// checked only where the outcome happens to be resolute.
    pub fn is_resolute(self) -> bool {
        matches!(
            self,
            Property::UnanimityPreservation
                | Property::Independence
                | Property::IssueNeutrality
                | Property::DomainNeutrality
                | Property::NeutralMonotonicity
                | Property::SetMonotonicity
        )
    }

    pub(crate) fn shape(self) -> Shape {
        match self {
            Property::Monotonicity | Property::Reinforcement | Property::Independence => Shape::Pair,
            Property::AgendaSeparability => Shape::Partition,
            Property::OverlappingSeparability => Shape::Overlap,
            Property::SenAlpha | Property::SenBeta => Shape::Subagenda,
            Property::Homogeneity => Shape::Repeat,
            _ => Shape::Single,
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Property::ALL.into_iter().find(|p| p.name() == s).ok_or_else(|| {
            let names: Vec<&str> = Property::ALL.iter().map(|p| p.name()).collect();
            Error::input(format!("unknown property `{s}` (expected one of: {})", names.join(", ")))
        })
    }
}

/// A profile plus whatever the property needs: a second profile, a pair of
/// issue groups, a sub-agenda or a repetition count.
#[derive(Debug, Clone)]
pub struct Instance {
    pub profile: Profile,
    pub other: Option<Profile>,
    pub parts: Option<(Vec<usize>, Vec<usize>)>,
    pub subagenda: Option<Vec<usize>>,
    pub k: Option<usize>,
}

impl Instance {
    pub fn new(profile: Profile) -> Self {
        Instance { profile, other: None, parts: None, subagenda: None, k: None }
    }

    pub fn with_other(mut self, other: Profile) -> Self {
        self.other = Some(other);
        self
    }

    pub fn with_parts(mut self, a: Vec<usize>, b: Vec<usize>) -> Self {
        self.parts = Some((a, b));
        self
    }

    pub fn with_subagenda(mut self, issues: Vec<usize>) -> Self {
        self.subagenda = Some(issues);
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }
}

#[derive(Debug, Clone)]
pub struct PropertyVerdict {
    pub property: Property,
    pub rule: String,
    pub holds_on_instance: bool,
    pub vacuous: bool,
    pub detail: String,
    pub witness: Option<Instance>,
    pub search_bounds: Option<Bounds>,
    pub instances_checked: usize,
    pub instances_skipped: usize,
}

fn need<'a, T>(x: &'a Option<T>, property: Property, what: &str) -> Result<&'a T> {
    x.as_ref().ok_or_else(|| Error::input(format!("property `{property}` needs {what}")))
}

/// Checks one property of `rule` on one instance. A failing verdict carries
/// the instance as its witness.
pub fn check(rule: &Rule, property: Property, inst: &Instance) -> Result<PropertyVerdict> {
    let p = &inst.profile;
    let c = match property {
        Property::MajorityPreservation => checks::majority_preservation(rule, p)?,
        Property::WeakUnanimity => checks::unanimity(rule, p, false)?,
        Property::StrongUnanimity => checks::unanimity(rule, p, true)?,
        Property::Monotonicity => checks::monotonicity(rule, p, need(&inst.other, property, "a second profile")?)?,
        Property::AgendaSeparability => {
            let (a, b) = need(&inst.parts, property, "two issue groups")?;
            checks::agenda_separability(rule, p, a, b)?
        }
        Property::OverlappingSeparability => {
            let (a, b) = need(&inst.parts, property, "two issue groups")?;
            checks::overlapping_separability(rule, p, a, b)?
        }
        Property::Reinforcement => checks::reinforcement(rule, p, need(&inst.other, property, "a second profile")?)?,
        Property::Homogeneity => checks::homogeneity(rule, p, inst.k.unwrap_or(2))?,
        Property::Anonymity => checks::anonymity(rule, p)?,
        Property::SenAlpha | Property::SenBeta => {
            let sub = need(&inst.subagenda, property, "a sub-agenda")?;
            checks::sen(rule, p, sub, property == Property::SenAlpha)?
        }
        Property::Responsiveness => checks::responsiveness(rule, p, inst.k.unwrap_or(3))?,
        Property::UnanimityPreservation => checks::unanimity_preservation(rule, p)?,
        Property::Independence => checks::independence(rule, p, need(&inst.other, property, "a second profile")?)?,
        Property::IssueNeutrality => checks::neutrality(rule, p, false)?,
        Property::DomainNeutrality => checks::neutrality(rule, p, true)?,
        Property::NeutralMonotonicity => checks::neutral_monotonicity(rule, p)?,
        Property::SetMonotonicity => checks::set_monotonicity(rule, p)?,
    };
    Ok(PropertyVerdict {
        property,
        rule: rule.to_string(),
        holds_on_instance: c.holds,
        vacuous: c.vacuous,
        detail: c.detail,
        witness: (!c.holds).then(|| inst.clone()),
        search_bounds: None,
        instances_checked: 1,
        instances_skipped: 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::samples;
    use crate::JudgmentSet;

    fn p17_split() -> Instance {
        Instance::new(samples::seventeen_agents()).with_parts(vec![0, 1, 2, 3], vec![4])
    }

    #[test]
    fn names_round_trip() {
        for p in Property::ALL {
            assert_eq!(p.name().parse::<Property>().unwrap(), p);
        }
    }

    #[test]
    fn young_is_not_agenda_separable_on_seventeen_agents() {
        let v = check(&Rule::Young, Property::AgendaSeparability, &p17_split()).unwrap();
        assert!(!v.holds_on_instance);
        let replay = check(&Rule::Young, Property::AgendaSeparability, &v.witness.unwrap()).unwrap();
        assert!(!replay.holds_on_instance);
        assert!(check(&Rule::Mc, Property::AgendaSeparability, &p17_split()).unwrap().holds_on_instance);
    }

    #[test]
    fn separability_rejects_bad_partitions() {
        let inst = Instance::new(samples::seventeen_agents()).with_parts(vec![0, 1, 2, 3, 4], vec![]);
        assert!(matches!(check(&Rule::Mc, Property::AgendaSeparability, &inst), Err(Error::Precondition(_))));
        let dp = Instance::new(samples::doctrinal_paradox()).with_parts(vec![0], vec![1, 2]);
        assert!(check(&Rule::Mc, Property::AgendaSeparability, &dp).is_err());
    }

    #[test]
    fn unanimity_contrast() {
        let inst = Instance::new(samples::unanimity_contrast());
        assert!(check(&Rule::Ra, Property::StrongUnanimity, &inst).unwrap().holds_on_instance);
        assert!(!check(&Rule::Mcc, Property::WeakUnanimity, &inst).unwrap().holds_on_instance);
    }

    #[test]
    fn doctrinal_strengthening() {
        let p = samples::doctrinal_paradox();
        let rows: Vec<Vec<i8>> = vec![vec![1, 1, 1], vec![1, -1, -1], vec![-1, -1, -1]];
        let q = Profile::from_signs(p.agenda().clone(), &rows).unwrap();
        let phi = strengthening(&p, &q).unwrap();
        assert_eq!(p.agenda().judgment_formula(phi).to_string(), "!q");
        assert!(strengthening(&p, &p).is_none());
        let v = check(&Rule::Med, Property::Monotonicity, &Instance::new(p.clone()).with_other(q)).unwrap();
        assert!(v.holds_on_instance);
        assert!(check(&Rule::Med, Property::Monotonicity, &Instance::new(p.clone()).with_other(p)).is_err());
    }

    #[test]
    fn simple_checks_on_samples() {
        let p17 = Instance::new(samples::seventeen_agents());
        assert!(check(&Rule::Med, Property::Homogeneity, &p17.clone().with_k(2)).unwrap().holds_on_instance);
        assert!(
            check(&Rule::Med, Property::Anonymity, &Instance::new(samples::doctrinal_paradox()))
                .unwrap()
                .holds_on_instance
        );
        let full = Instance::new(samples::doctrinal_paradox()).with_subagenda(vec![0, 1, 2]);
        for prop in [Property::SenAlpha, Property::SenBeta] {
            assert!(check(&Rule::Med, prop, &full).unwrap().holds_on_instance);
        }
        let v = check(&Rule::Mc, Property::MajorityPreservation, &p17).unwrap();
        assert!(v.vacuous && v.holds_on_instance);
    }

    #[test]
    fn resolute_checks_skip_irresolute_outcomes() {
        let v = check(&Rule::Mc, Property::UnanimityPreservation, &Instance::new(samples::seventeen_agents())).unwrap();
        assert!(v.vacuous);
        let one = samples::doctrinal_paradox();
        let single = Profile::new(one.agenda().clone(), vec![JudgmentSet::from_signs(&[1, 1, 1]).unwrap()]).unwrap();
        let v = check(&Rule::Med, Property::UnanimityPreservation, &Instance::new(single)).unwrap();
        assert!(v.holds_on_instance && !v.vacuous);
    }
}
