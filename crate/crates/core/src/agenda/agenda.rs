use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rayon::prelude::*;

use super::judgment::{full_mask, JudgmentSet, SignedJudgment};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::logic::{atoms, check_universe, parse_formula, valuations, Compiled, Formula};

/// An ordered pre-agenda together with its constraints and the enumerated
/// codomain of rational judgment sets. Cloning is cheap.
#[derive(Clone)]
pub struct Agenda(Arc<Inner>);

struct Inner {
    pre_agenda: Vec<Formula>,
    constraints: Vec<Formula>,
    universe: Vec<String>,
    codomain: Vec<JudgmentSet>,
    caps: Caps,
}

#[derive(Default)]
struct Scan {
    patterns: BTreeSet<u64>,
    ever_true: u64,
    ever_false: u64,
}

impl Scan {
    fn merge(mut self, other: Scan) -> Scan {
        self.patterns.extend(other.patterns);
        self.ever_true |= other.ever_true;
        self.ever_false |= other.ever_false;
        self
    }
}

impl Agenda {
    pub fn new(pre_agenda: Vec<Formula>, constraints: Vec<Formula>) -> Result<Self> {
        Self::with_caps(pre_agenda, constraints, Caps::default())
    }

    /// Parses formula texts and builds a validated agenda.
    pub fn parse(pre_agenda: &[&str], constraints: &[&str]) -> Result<Self> {
        let pre = pre_agenda.iter().map(|s| parse_formula(s)).collect::<Result<_>>()?;
        let gamma = constraints.iter().map(|s| parse_formula(s)).collect::<Result<_>>()?;
        Self::new(pre, gamma)
    }

    pub fn with_caps(pre_agenda: Vec<Formula>, constraints: Vec<Formula>, caps: Caps) -> Result<Self> {
        let constraints = normalise(constraints);
        if pre_agenda.is_empty() {
            return Err(Error::InvalidAgenda("the pre-agenda is empty".into()));
        }
        for (i, f) in pre_agenda.iter().enumerate() {
            if f.is_constant() {
                return Err(Error::InvalidAgenda(format!("issue {i} `{f}` is not contingent")));
            }
            if pre_agenda[..i].contains(f) {
                return Err(Error::InvalidAgenda(format!("issue {i} `{f}` is a duplicate")));
            }
            let neg = f.negate();
            if constraints.iter().any(|g| *g == *f || *g == neg) {
                return Err(Error::InvalidAgenda(format!("issue {i} `{f}` is resolved by the constraints")));
            }
        }
        let trivial = constraints.iter().all(|g| *g == Formula::top());
        if !trivial && atoms(&constraints).is_disjoint(&atoms(&pre_agenda)) {
            return Err(Error::InvalidAgenda("the constraints share no atom with the pre-agenda".into()));
        }
        let (agenda, scan) = Self::build(pre_agenda, constraints, caps)?;
        let m = agenda.size();
        let full = full_mask(m);
        if let Some(i) = (0..m).find(|i| (scan.ever_true & scan.ever_false & full) >> i & 1 == 0) {
            let f = &agenda.0.pre_agenda[i];
            let kind = if scan.ever_true >> i & 1 == 1 { "a tautology" } else { "a contradiction" };
            return Err(Error::InvalidAgenda(format!("issue {i} `{f}` is {kind}")));
        }
        if agenda.0.codomain.is_empty() {
            return Err(Error::InvalidAgenda("the constraints are inconsistent".into()));
        }
        Ok(agenda)
    }

    /// Builds without the well-formedness checks; used for agendas derived
    /// from a validated one (sub-agendas, strengthened constraints, binary
    /// encodings). Still fails on an empty codomain.
    pub(crate) fn derived(pre_agenda: Vec<Formula>, constraints: Vec<Formula>, caps: Caps) -> Result<Self> {
        let (agenda, _) = Self::build(pre_agenda, normalise(constraints), caps)?;
        if agenda.0.codomain.is_empty() {
            return Err(Error::pre("the constraints are inconsistent"));
        }
        Ok(agenda)
    }

    fn build(pre_agenda: Vec<Formula>, constraints: Vec<Formula>, caps: Caps) -> Result<(Self, Scan)> {
        let m = pre_agenda.len();
        let issue_cap = caps.max_issues.min(64);
        if m > issue_cap {
            return Err(Error::cap("issues", m, issue_cap));
        }
        let universe: Vec<String> = atoms(pre_agenda.iter().chain(&constraints)).into_iter().collect();
        check_universe(universe.len(), caps.max_atoms)?;
        let issues: Vec<Compiled> = pre_agenda.iter().map(|f| Compiled::new(f, &universe)).collect::<Result<_>>()?;
        let gamma: Vec<Compiled> = constraints.iter().map(|f| Compiled::new(f, &universe)).collect::<Result<_>>()?;
        let scan = valuations(universe.len())
            .fold(Scan::default, |mut s, v| {
                let pattern = issues.iter().enumerate().fold(0u64, |acc, (i, c)| acc | (c.eval(v) as u64) << i);
                s.ever_true |= pattern;
                s.ever_false |= !pattern;
                if gamma.iter().all(|g| g.eval(v)) {
                    s.patterns.insert(pattern);
                }
                s
            })
            .reduce(Scan::default, Scan::merge);
        let mut codomain: Vec<JudgmentSet> = scan.patterns.iter().map(|&p| JudgmentSet::complete(m, p)).collect();
        codomain.sort();
        let inner = Inner { pre_agenda, constraints, universe, codomain, caps };
        Ok((Agenda(Arc::new(inner)), scan))
    }

    /// Number of issues.
    pub fn size(&self) -> usize {
        self.0.pre_agenda.len()
    }

    pub fn mask(&self) -> u64 {
        full_mask(self.size())
    }

    pub fn pre_agenda(&self) -> &[Formula] {
        &self.0.pre_agenda
    }

    pub fn constraints(&self) -> &[Formula] {
        &self.0.constraints
    }

    pub fn atom_universe(&self) -> &[String] {
        &self.0.universe
    }

    pub fn caps(&self) -> Caps {
        self.0.caps
    }

    /// Every rational judgment set, canonically ordered.
    pub fn codomain(&self) -> &[JudgmentSet] {
        &self.0.codomain
    }

    pub fn judgment_formula(&self, j: SignedJudgment) -> Formula {
        let f = &self.0.pre_agenda[j.issue];
        if j.accept {
            f.clone()
        } else {
            f.negate()
        }
    }

    pub fn formulas_of(&self, set: &JudgmentSet) -> Vec<Formula> {
        set.judgments().map(|j| self.judgment_formula(j)).collect()
    }

    /// Whether `set` together with the constraints is satisfiable.
    pub fn is_consistent(&self, set: &JudgmentSet) -> bool {
        self.0.codomain.iter().any(|c| set.is_subset(c))
    }

    pub fn is_rational(&self, set: &JudgmentSet) -> bool {
        set.is_complete(self.size()) && self.0.codomain.binary_search(set).is_ok()
    }

    /// All rational supersets of a consistent set.
    pub fn ext(&self, set: &JudgmentSet) -> Result<Vec<JudgmentSet>> {
        let out: Vec<JudgmentSet> = self.0.codomain.iter().copied().filter(|c| set.is_subset(c)).collect();
        if out.is_empty() {
            return Err(Error::pre(format!("{} is inconsistent", self.show(set))));
        }
        Ok(out)
    }

    pub(crate) fn ext_unchecked(&self, set: &JudgmentSet) -> impl Iterator<Item = JudgmentSet> + '_ {
        let set = *set;
        self.0.codomain.iter().copied().filter(move |c| set.is_subset(c))
    }

    /// The agenda on the selected issues (in the given order) under the same
    /// constraints.
    pub fn sub_agenda(&self, issues: &[usize]) -> Result<Agenda> {
        let m = self.size();
        if let Some(&bad) = issues.iter().find(|&&i| i >= m) {
            return Err(Error::input(format!("issue index {bad} out of range")));
        }
        let pre = issues.iter().map(|&i| self.0.pre_agenda[i].clone()).collect();
        Agenda::derived(pre, self.0.constraints.clone(), self.0.caps)
    }

    /// Same issues with one more constraint.
    pub fn with_constraint(&self, extra: Formula) -> Result<Agenda> {
        let mut gamma = self.0.constraints.clone();
        gamma.push(extra);
        Agenda::derived(self.0.pre_agenda.clone(), gamma, self.0.caps)
    }

    pub fn show(&self, set: &JudgmentSet) -> String {
        let parts: Vec<String> = self.formulas_of(set).iter().map(|f| f.to_string()).collect();
        format!("{{{}}}", parts.join(", "))
    }

    pub(crate) fn check_issue(&self, issue: usize) -> Result<()> {
        if issue >= self.size() {
            return Err(Error::input(format!("issue index {issue} out of range (agenda has {})", self.size())));
        }
        Ok(())
    }
}

fn normalise(constraints: Vec<Formula>) -> Vec<Formula> {
    if constraints.is_empty() {
        vec![Formula::top()]
    } else {
        constraints
    }
}

impl PartialEq for Agenda {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.pre_agenda == other.0.pre_agenda && self.0.constraints == other.0.constraints)
    }
}

impl Eq for Agenda {}

impl fmt::Debug for Agenda {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pre: Vec<String> = self.0.pre_agenda.iter().map(|x| x.to_string()).collect();
        let gamma: Vec<String> = self.0.constraints.iter().map(|x| x.to_string()).collect();
        f.debug_struct("Agenda").field("pre_agenda", &pre).field("constraints", &gamma).finish()
    }
}
