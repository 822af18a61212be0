use std::collections::BTreeMap;

use super::agenda::Agenda;
use super::judgment::{mask_of, JudgmentSet, SignedJudgment};
use crate::error::{Error, Result};

/// How [`Profile::common_agents`] counts repeated judgment sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Occurrence {
    /// Minimum of the two multiplicities.
    #[default]
    Multiset,
    /// One copy of every set present in both.
    Set,
}

/// An ordered list of agents' judgment sets over one agenda.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Profile {
    agenda: Agenda,
    agents: Vec<JudgmentSet>,
}

impl Profile {
    /// Every agent must hold a rational judgment set.
    pub fn new(agenda: Agenda, agents: Vec<JudgmentSet>) -> Result<Self> {
        let p = Self::open(agenda, agents)?;
        if let Some(i) = p.agents.iter().position(|j| !p.agenda.is_rational(j)) {
            return Err(Error::input(format!(
                "agent {i} holds {}, which is not rational",
                p.agenda.show(&p.agents[i])
            )));
        }
        Ok(p)
    }

    /// Agents may hold partial or inconsistent sets.
    pub fn open(agenda: Agenda, agents: Vec<JudgmentSet>) -> Result<Self> {
        let cap = agenda.caps().max_agents;
        if agents.len() > cap {
            return Err(Error::cap("agents", agents.len(), cap));
        }
        let mask = agenda.mask();
        if let Some(i) = agents.iter().position(|j| j.defined() & !mask != 0) {
            return Err(Error::input(format!("agent {i} judges an issue outside the agenda")));
        }
        Ok(Profile { agenda, agents })
    }

    pub fn from_signs(agenda: Agenda, rows: &[Vec<i8>]) -> Result<Self> {
        let m = agenda.size();
        let agents = rows
            .iter()
            .enumerate()
            .map(|(i, r)| {
                if r.len() != m {
                    return Err(Error::input(format!("agent {i} has {} verdicts, expected {m}", r.len())));
                }
                JudgmentSet::from_signs(r)
            })
            .collect::<Result<Vec<_>>>()?;
        if agents.iter().all(|j| agenda.is_rational(j)) {
            Self::new(agenda, agents)
        } else {
            Self::open(agenda, agents)
        }
    }

    pub fn agenda(&self) -> &Agenda {
        &self.agenda
    }

    pub fn agents(&self) -> &[JudgmentSet] {
        &self.agents
    }

    pub fn n(&self) -> usize {
        self.agents.len()
    }

    /// All agents rational.
    pub fn is_strict(&self) -> bool {
        self.agents.iter().all(|j| self.agenda.is_rational(j))
    }

    pub fn support(&self, issue: usize, accept: bool) -> Result<usize> {
        self.agenda.check_issue(issue)?;
        Ok(self.count(SignedJudgment { issue, accept }))
    }

    pub(crate) fn count(&self, j: SignedJudgment) -> usize {
        self.agents.iter().filter(|a| a.contains(j)).count()
    }

    /// `(accept, reject)` supports per issue.
    pub fn supports(&self) -> Vec<(usize, usize)> {
        (0..self.agenda.size())
            .map(|i| (self.count(SignedJudgment::accept(i)), self.count(SignedJudgment::reject(i))))
            .collect()
    }

    /// Judgments with support strictly above `k`.
    pub fn quota_set(&self, k: usize) -> JudgmentSet {
        let mut set = JudgmentSet::EMPTY;
        for (i, (a, r)) in self.supports().into_iter().enumerate() {
            if a > k {
                set.insert(SignedJudgment::accept(i));
            } else if r > k {
                set.insert(SignedJudgment::reject(i));
            }
        }
        set
    }

    /// Strict-majority judgments and whether they are consistent.
    pub fn majoritarian_set(&self) -> (JudgmentSet, bool) {
        let set = self.majority();
        (set, self.agenda.is_consistent(&set))
    }

    pub(crate) fn majority(&self) -> JudgmentSet {
        let n = self.n();
        let mut set = JudgmentSet::EMPTY;
        for (i, (a, r)) in self.supports().into_iter().enumerate() {
            if 2 * a > n {
                set.insert(SignedJudgment::accept(i));
            } else if 2 * r > n {
                set.insert(SignedJudgment::reject(i));
            }
        }
        set
    }

    /// Judgments held by every agent.
    pub fn unanimity_set(&self) -> JudgmentSet {
        let mut it = self.agents.iter();
        match it.next() {
            None => JudgmentSet::EMPTY,
            Some(first) => it.fold(*first, |acc, j| acc.intersection(j)),
        }
    }

    /// Same agenda; verdicts outside `issues` become absent.
    pub fn restrict(&self, issues: &[usize]) -> Result<Profile> {
        for &i in issues {
            self.agenda.check_issue(i)?;
        }
        let mask = mask_of(issues);
        Ok(Profile { agenda: self.agenda.clone(), agents: self.agents.iter().map(|j| j.restrict(mask)).collect() })
    }

    /// The profile over the sub-agenda on `issues`, reindexed in that order.
    pub fn project(&self, issues: &[usize]) -> Result<Profile> {
        let agenda = self.agenda.sub_agenda(issues)?;
        Ok(Profile { agenda, agents: self.agents.iter().map(|j| j.compress(issues)).collect() })
    }

    pub(crate) fn with_agents(&self, agents: Vec<JudgmentSet>) -> Profile {
        Profile { agenda: self.agenda.clone(), agents }
    }

    fn same_agenda(&self, other: &Profile) -> Result<()> {
        if self.agenda != other.agenda {
            return Err(Error::input("profiles are over different agendas"));
        }
        Ok(())
    }

    /// Concatenation.
    pub fn sum(&self, other: &Profile) -> Result<Profile> {
        self.same_agenda(other)?;
        let mut agents = self.agents.clone();
        agents.extend_from_slice(&other.agents);
        Profile::open(self.agenda.clone(), agents)
    }

    /// `k` concatenated copies.
    pub fn repeat(&self, k: usize) -> Result<Profile> {
        Profile::open(self.agenda.clone(), self.agents.repeat(k))
    }

    pub fn permuted(&self, order: &[usize]) -> Result<Profile> {
        let mut seen = vec![false; self.n()];
        if order.len() != self.n() || order.iter().any(|&i| i >= self.n() || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::input("not a permutation of the agents"));
        }
        Ok(self.with_agents(order.iter().map(|&i| self.agents[i]).collect()))
    }

    fn multiplicities(&self) -> BTreeMap<JudgmentSet, usize> {
        let mut m = BTreeMap::new();
        for j in &self.agents {
            *m.entry(*j).or_insert(0) += 1;
        }
        m
    }

    /// Whether every judgment-set occurrence of `self` is matched by a
    /// distinct occurrence in `other`.
    pub fn is_subprofile(&self, other: &Profile) -> Result<bool> {
        self.same_agenda(other)?;
        let theirs = other.multiplicities();
        Ok(self.multiplicities().iter().all(|(j, c)| theirs.get(j).is_some_and(|t| t >= c)))
    }

    /// Agents present in both profiles, in canonical set order.
    pub fn common_agents(&self, other: &Profile, occurrence: Occurrence) -> Result<Profile> {
        self.same_agenda(other)?;
        let theirs = other.multiplicities();
        let mut agents = Vec::new();
        for (j, c) in self.multiplicities() {
            if let Some(&t) = theirs.get(&j) {
                let k = match occurrence {
                    Occurrence::Multiset => c.min(t),
                    Occurrence::Set => 1,
                };
                agents.extend(std::iter::repeat_n(j, k));
            }
        }
        Ok(self.with_agents(agents))
    }

    /// Distinct judgment sets in canonical order with their multiplicities.
    pub fn distinct(&self) -> Vec<(JudgmentSet, usize)> {
        self.multiplicities().into_iter().collect()
    }
}
