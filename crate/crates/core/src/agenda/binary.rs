use super::agenda::Agenda;
use super::judgment::JudgmentSet;
use super::profile::Profile;
use super::structure::minimal_inconsistent_subsets;
use crate::error::{Error, Result};
use crate::logic::{is_identifier, Formula};

/// A binary aggregation problem: variables, integrity constraints and one
/// ballot (a model of the constraints) per agent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryProblem {
    pub variables: Vec<String>,
    pub integrity_constraints: Vec<Formula>,
    pub ballots: Vec<Vec<bool>>,
}

/// Encodes a strict profile with one fresh variable `x1..xm` per issue. The
/// integrity constraints forbid every minimal inconsistent combination of
/// judgments, which is exactly the projection of the constraints and the
/// issue definitions onto the fresh variables.
pub fn to_binary(profile: &Profile) -> Result<BinaryProblem> {
    if !profile.is_strict() {
        return Err(Error::pre("binary encoding needs every agent to be rational"));
    }
    let agenda = profile.agenda();
    let m = agenda.size();
    let variables: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    let mut ic = Vec::new();
    for y in minimal_inconsistent_subsets(agenda)? {
        if y.len() == 2 && y[0].issue == y[1].issue {
            continue;
        }
        ic.push(Formula::disjunction(y.iter().map(|j| {
            let x = Formula::atom(variables[j.issue].clone());
            if j.accept {
                x.negate()
            } else {
                x
            }
        })));
    }
    if ic.is_empty() {
        ic.push(Formula::top());
    }
    let ballots = profile.agents().iter().map(|j| (0..m).map(|i| j.accepted() >> i & 1 == 1).collect()).collect();
    Ok(BinaryProblem { variables, integrity_constraints: ic, ballots })
}

/// Reads every variable as an atomic issue under the integrity constraints.
pub fn from_binary(b: &BinaryProblem) -> Result<(Agenda, Profile)> {
    if b.variables.is_empty() {
        return Err(Error::input("a binary problem needs at least one variable"));
    }
    if let Some(v) = b.variables.iter().find(|v| !is_identifier(v)) {
        return Err(Error::input(format!("`{v}` is not a valid variable name")));
    }
    let pre: Vec<Formula> = b.variables.iter().map(|v| Formula::atom(v.clone())).collect();
    if (1..pre.len()).any(|i| pre[..i].contains(&pre[i])) {
        return Err(Error::input("duplicate variable"));
    }
    let agenda = Agenda::derived(pre, b.integrity_constraints.clone(), crate::Caps::default())
        .map_err(|_| Error::input("the integrity constraints are unsatisfiable"))?;
    let m = b.variables.len();
    let mut agents = Vec::with_capacity(b.ballots.len());
    for (i, ballot) in b.ballots.iter().enumerate() {
        if ballot.len() != m {
            return Err(Error::input(format!("ballot {i} has {} entries, expected {m}", ballot.len())));
        }
        let mask = ballot.iter().enumerate().fold(0u64, |acc, (k, &x)| acc | (x as u64) << k);
        agents.push(JudgmentSet::complete(m, mask));
    }
    let profile = Profile::new(agenda.clone(), agents)
        .map_err(|e| Error::input(format!("a ballot violates the integrity constraints: {e}")))?;
    Ok((agenda, profile))
}
