use std::collections::BTreeSet;

use super::consistent::med_value;
use super::majority::{check_strict_subset, list};
use super::outcome::Outcome;
use crate::agenda::{JudgmentSet, Profile};
use crate::error::{Error, Result};
use crate::logic::Formula;
use crate::metrics::{score_reversal, Distance, Metric, Norm, Scoring};

/// Per-agent distances from each candidate, reduced by the norm.
fn norm_values(p: &Profile, candidates: &[JudgmentSet], metric: &Metric, norm: Norm) -> Result<Vec<u64>> {
    candidates
        .iter()
        .map(|c| {
            let v = p.agents().iter().map(|a| metric.between(a, c).map(u64::from)).collect::<Result<Vec<_>>>()?;
            Ok(norm.apply(&v))
        })
        .collect()
}

fn argmin(candidates: &[JudgmentSet], values: &[u64]) -> Vec<JudgmentSet> {
    let best = values.iter().copied().min().unwrap_or(0);
    candidates.iter().zip(values).filter(|(_, v)| **v == best).map(|(c, _)| *c).collect()
}

fn strict_for(p: &Profile, d: Distance) -> Result<()> {
    match d {
        Distance::Drastic => Ok(()),
        Distance::Hamming if p.agents().iter().all(|j| j.is_complete(p.agenda().size())) => Ok(()),
        _ if p.is_strict() => Ok(()),
        _ => Err(Error::pre(format!("the {d} distance needs rational agents"))),
    }
}

pub(crate) fn dist_name(d: Distance, norm: Norm) -> String {
    super::spec_name("dist", &[("distance", d.to_string()), ("norm", norm.to_string())])
}

/// Rational sets minimising the norm of the agent-wise distances.
pub fn rule_distance_based(p: &Profile, d: Distance, norm: Norm) -> Result<Outcome> {
    strict_for(p, d)?;
    let metric = Metric::new(p.agenda(), d);
    let codomain = p.agenda().codomain();
    let values = norm_values(p, codomain, &metric, norm)?;
    Ok(Outcome::new(dist_name(d, norm), argmin(codomain, &values)))
}

/// Per-agent score of every signed judgment, indexed `2 * issue + reject`.
fn score_table(p: &Profile, scoring: Scoring, agent: &JudgmentSet) -> Result<Vec<u32>> {
    let m = p.agenda().size();
    let mut table = vec![0; 2 * m];
    for j in agent.judgments() {
        table[2 * j.issue + usize::from(!j.accept)] = match scoring {
            Scoring::Simple => 1,
            Scoring::Reversal => score_reversal(j, agent, p.agenda())?,
        };
    }
    Ok(table)
}

/// Rational sets maximising the summed scores of shared judgments.
pub fn rule_scoring(p: &Profile, scoring: Scoring) -> Result<Outcome> {
    if !p.is_strict() {
        return Err(Error::pre("scoring rules need rational agents"));
    }
    let mut totals = vec![0u64; 2 * p.agenda().size()];
    for (agent, count) in p.distinct() {
        for (t, s) in totals.iter_mut().zip(score_table(p, scoring, &agent)?) {
            *t += u64::from(s) * count as u64;
        }
    }
    let value = |c: &JudgmentSet| -> u64 { c.judgments().map(|j| totals[2 * j.issue + usize::from(!j.accept)]).sum() };
    let codomain = p.agenda().codomain();
    let best = codomain.iter().map(value).max().unwrap_or(0);
    let name = super::spec_name("scoring", &[("scoring", scoring.to_string())]);
    Ok(Outcome::new(name, codomain.iter().copied().filter(|c| value(c) == best)))
}

/// Target profiles for the nearest-profile rules.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Consensus {
    /// Profiles with a consistent majority, read off by `ext(m(P'))`.
    MajorityConsistent,
    /// Unanimous profiles, read off by the shared set.
    Unanimous,
}

/// The sets chosen at the profiles nearest to `p` within the consensus class.
pub fn rule_rationalising(p: &Profile, d: Distance, norm: Norm, class: Consensus) -> Result<Outcome> {
    if !p.is_strict() {
        return Err(Error::pre("nearest-profile rules need rational agents"));
    }
    let metric = Metric::new(p.agenda(), d);
    let codomain = p.agenda().codomain();
    match class {
        Consensus::Unanimous => {
            let values = norm_values(p, codomain, &metric, norm)?;
            let name = super::spec_name(
                "rationalising",
                &[("distance", d.to_string()), ("norm", norm.to_string()), ("class", "unanimous".into())],
            );
            Ok(Outcome::new(name, argmin(codomain, &values)))
        }
        Consensus::MajorityConsistent => {
            let caps = p.agenda().caps();
            if p.n() > caps.full_max_agents {
                return Err(Error::cap("agents for the nearest-profile search", p.n(), caps.full_max_agents));
            }
            if codomain.len() > caps.full_max_codomain {
                return Err(Error::cap(
                    "codomain size for the nearest-profile search",
                    codomain.len(),
                    caps.full_max_codomain,
                ));
            }
            let table = p
                .agents()
                .iter()
                .map(|a| codomain.iter().map(|c| metric.between(a, c).map(u64::from)).collect::<Result<Vec<_>>>())
                .collect::<Result<Vec<_>>>()?;
            let mut search = Nearest {
                p,
                codomain,
                table: &table,
                norm,
                best: u64::MAX,
                found: BTreeSet::new(),
                chosen: Vec::with_capacity(p.n()),
            };
            search.walk(0);
            let sets: Vec<JudgmentSet> = search.found.iter().flat_map(|m| p.agenda().ext_unchecked(m)).collect();
            let name = super::spec_name("full", &[("distance", d.to_string()), ("norm", norm.to_string())]);
            Ok(Outcome::new(name, sets).with_note(format!("nearest distance {}", search.best)))
        }
    }
}

struct Nearest<'a> {
    p: &'a Profile,
    codomain: &'a [JudgmentSet],
    table: &'a [Vec<u64>],
    norm: Norm,
    best: u64,
    found: BTreeSet<JudgmentSet>,
    chosen: Vec<usize>,
}

impl Nearest<'_> {
    fn partial_value(&self) -> u64 {
        let v: Vec<u64> = self.chosen.iter().enumerate().map(|(i, &c)| self.table[i][c]).collect();
        self.norm.apply(&v)
    }

    fn walk(&mut self, agent: usize) {
        let value = self.partial_value();
        if value > self.best {
            return;
        }
        if agent == self.p.n() {
            let profile = self.p.with_agents(self.chosen.iter().map(|&c| self.codomain[c]).collect());
            let (m, consistent) = profile.majoritarian_set();
            if !consistent {
                return;
            }
            if value < self.best {
                self.best = value;
                self.found.clear();
            }
            self.found.insert(m);
            return;
        }
        for c in 0..self.codomain.len() {
            self.chosen.push(c);
            self.walk(agent + 1);
            self.chosen.pop();
        }
    }
}

pub fn rule_full(p: &Profile, d: Distance, norm: Norm) -> Result<Outcome> {
    rule_rationalising(p, d, norm, Consensus::MajorityConsistent)
}

/// Value used to rank candidates for the most-representative-voter rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Representative {
    /// Summed support, maximised.
    Med,
    /// Norm of agent-wise distances, minimised.
    Distance(Distance, Norm),
}

/// Chooses among the judgment sets that agents actually hold.
pub fn rule_mrv(p: &Profile, base: Representative) -> Result<Outcome> {
    if !p.is_strict() {
        return Err(Error::pre("the most-representative-voter rule needs rational agents"));
    }
    let candidates: Vec<JudgmentSet> = p.distinct().into_iter().map(|(j, _)| j).collect();
    if candidates.is_empty() {
        return Err(Error::pre("the profile has no agents"));
    }
    let (name, chosen) = match base {
        Representative::Med => {
            let values: Vec<usize> = candidates.iter().map(|c| med_value(p, c)).collect();
            let best = values.iter().copied().max().unwrap_or(0);
            let chosen: Vec<JudgmentSet> =
                candidates.iter().zip(&values).filter(|(_, v)| **v == best).map(|(c, _)| *c).collect();
            (super::spec_name("mrv", &[("base", "med".into())]), chosen)
        }
        Representative::Distance(d, norm) => {
            let values = norm_values(p, &candidates, &Metric::new(p.agenda(), d), norm)?;
            let name = super::spec_name("mrv", &[("distance", d.to_string()), ("norm", norm.to_string())]);
            (name, argmin(&candidates, &values))
        }
    };
    Ok(Outcome::new(name, chosen))
}

/// Distance rule on the conclusions, then on the whole agenda with the
/// conclusion outcome added as a constraint.
pub fn rule_extended_cbp(p: &Profile, conclusions: &[usize], d: Distance, norm: Norm) -> Result<Outcome> {
    if d == Distance::Geodesic {
        return Err(Error::pre("the extended conclusion-based procedure admits only drastic or Hamming distance"));
    }
    check_strict_subset(p, conclusions, "the conclusions")?;
    let m = p.agenda().size();
    if !p.agents().iter().all(|j| j.is_complete(m)) {
        return Err(Error::pre("the extended conclusion-based procedure needs complete agents"));
    }
    let mut sorted = conclusions.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let step1 = rule_distance_based(&p.project(&sorted)?, d, norm)?;
    let agenda = p.agenda();
    let disjuncts = step1.sets.iter().map(|s| {
        let full = s.expand(&sorted);
        Formula::conjunction(agenda.formulas_of(&full))
    });
    let extra = Formula::disjunction(disjuncts);
    let narrowed = agenda.with_constraint(extra.clone())?;
    let metric = Metric::new(&narrowed, d);
    let candidates = narrowed.codomain();
    let values = norm_values(p, candidates, &metric, norm)?;
    let name = super::spec_name(
        "ecbp",
        &[("conclusions", list(&sorted)), ("distance", d.to_string()), ("norm", norm.to_string())],
    );
    Ok(Outcome::new(name, argmin(candidates, &values)).with_note(format!("added constraint: {extra}")))
}
