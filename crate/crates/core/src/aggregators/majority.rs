use super::outcome::{Outcome, PartialOutcome};
use crate::agenda::{mask_of, Profile};
use crate::error::{Error, Result};

pub fn rule_majority(p: &Profile) -> PartialOutcome {
    let (set, consistent) = p.majoritarian_set();
    PartialOutcome { rule: "majority".into(), set, consistent }
}

pub fn rule_unanimity(p: &Profile) -> PartialOutcome {
    let set = p.unanimity_set();
    PartialOutcome { rule: "unanimity".into(), set, consistent: p.agenda().is_consistent(&set) }
}

/// Judgments supported by more than `k` agents, `0 < k <= n`.
pub fn rule_quota(p: &Profile, k: usize) -> Result<PartialOutcome> {
    if k == 0 || k > p.n() {
        return Err(Error::pre(format!("quota {k} is outside 1..={}", p.n())));
    }
    let set = p.quota_set(k);
    Ok(PartialOutcome { rule: format!("quota:k={k}"), set, consistent: p.agenda().is_consistent(&set) })
}

pub(crate) fn check_strict_subset(p: &Profile, issues: &[usize], what: &str) -> Result<()> {
    for &i in issues {
        p.agenda().check_issue(i)?;
    }
    let mask = mask_of(issues);
    if mask == 0 || mask == p.agenda().mask() {
        return Err(Error::pre(format!("{what} must be a non-empty strict subset of the issues")));
    }
    Ok(())
}

/// Majority on the premises, then every rational extension.
pub fn rule_pbp(p: &Profile, premises: &[usize]) -> Result<Outcome> {
    check_strict_subset(p, premises, "the premises")?;
    if !p.is_strict() {
        return Err(Error::pre("the premise-based procedure needs rational agents"));
    }
    let (m, consistent) = p.restrict(premises)?.majoritarian_set();
    if !consistent {
        return Err(Error::pre("the premise majority is inconsistent"));
    }
    Ok(Outcome::new(super::spec_name("pbp", &[("premises", list(premises))]), p.agenda().ext(&m)?))
}

/// Majority on the conclusions only.
pub fn rule_cbp(p: &Profile, conclusions: &[usize]) -> Result<PartialOutcome> {
    for &i in conclusions {
        p.agenda().check_issue(i)?;
    }
    if conclusions.is_empty() {
        return Err(Error::pre("the conclusions must be non-empty"));
    }
    let (set, consistent) = p.restrict(conclusions)?.majoritarian_set();
    Ok(PartialOutcome { rule: super::spec_name("cbp", &[("conclusions", list(conclusions))]), set, consistent })
}

pub(crate) fn list(issues: &[usize]) -> String {
    issues.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}
