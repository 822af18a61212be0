//! Voting problems through the preference agenda: one issue `x_P_y` per
//! pair of options, with transitivity (`Tr`) or winner (`W`) constraints.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::agenda::{Agenda, JudgmentSet, Profile, SignedJudgment};
use crate::aggregators::Rule;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::logic::Formula;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GammaMode {
    Tr,
    W,
}

impl FromStr for GammaMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tr" => Ok(GammaMode::Tr),
            "w" => Ok(GammaMode::W),
            _ => Err(Error::input(format!("unknown constraint mode `{s}` (expected tr or w)"))),
        }
    }
}

impl fmt::Display for GammaMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GammaMode::Tr => "tr",
            GammaMode::W => "w",
        })
    }
}

/// Options and ballots; each ballot lists every option once, best first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VoteProfile {
    pub options: Vec<String>,
    pub ballots: Vec<Vec<String>>,
}

fn valid_option(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_lowercase())
        && chars.all(|c| c.is_ascii_alphanumeric())
        && !matches!(name, "true" | "false" | "xor")
}

impl VoteProfile {
    pub fn new(options: Vec<String>, ballots: Vec<Vec<String>>) -> Result<Self> {
        let v = VoteProfile { options, ballots };
        v.validate()?;
        Ok(v)
    }

    pub fn from_strs(options: &[&str], ballots: &[Vec<&str>]) -> Result<Self> {
        Self::new(
            options.iter().map(|s| s.to_string()).collect(),
            ballots.iter().map(|b| b.iter().map(|s| s.to_string()).collect()).collect(),
        )
    }

    pub fn validate(&self) -> Result<()> {
        if self.options.len() < 2 {
            return Err(Error::input("a vote needs at least two options"));
        }
        let distinct: BTreeSet<&String> = self.options.iter().collect();
        if distinct.len() != self.options.len() {
            return Err(Error::input("duplicate option name"));
        }
        if let Some(bad) = self.options.iter().find(|o| !valid_option(o)) {
            return Err(Error::input(format!("invalid option name `{bad}` (use [a-z][a-zA-Z0-9]*)")));
        }
        for (i, b) in self.ballots.iter().enumerate() {
            let seen: BTreeSet<&String> = b.iter().collect();
            if b.len() != self.options.len() || seen != distinct {
                return Err(Error::input(format!("ballot {i} is not a permutation of the options")));
            }
        }
        Ok(())
    }

    /// Position of each option on each ballot (0 is best).
    fn ranks(&self) -> Vec<Vec<usize>> {
        let index: BTreeMap<&str, usize> = self.options.iter().enumerate().map(|(i, o)| (o.as_str(), i)).collect();
        self.ballots
            .iter()
            .map(|b| {
                let mut r = vec![0; b.len()];
                for (pos, o) in b.iter().enumerate() {
                    r[index[o.as_str()]] = pos;
                }
                r
            })
            .collect()
    }

    /// Ballots ranking option `x` above option `y`.
    pub fn pairwise(&self, x: usize, y: usize) -> usize {
        self.ranks().iter().filter(|r| r[x] < r[y]).count()
    }
}

/// Issue index of the pair `(i, j)`, `i < j`, in the preference agenda.
fn pair_issue(m: usize, i: usize, j: usize) -> usize {
    i * (2 * m - i - 1) / 2 + (j - i - 1)
}

fn atom_name(x: &str, y: &str) -> String {
    format!("{x}_P_{y}")
}

/// The judgment "option x is preferred to option y".
pub fn prefers(m: usize, x: usize, y: usize) -> SignedJudgment {
    if x < y {
        SignedJudgment::accept(pair_issue(m, x, y))
    } else {
        SignedJudgment::reject(pair_issue(m, y, x))
    }
}

fn prefers_formula(options: &[String], x: usize, y: usize) -> Formula {
    if x < y {
        Formula::atom(atom_name(&options[x], &options[y]))
    } else {
        Formula::atom(atom_name(&options[y], &options[x])).negate()
    }
}

pub fn preference_agenda(options: &[String], mode: GammaMode) -> Result<Agenda> {
    preference_agenda_with(options, mode, Caps::default())
}

pub fn preference_agenda_with(options: &[String], mode: GammaMode, caps: Caps) -> Result<Agenda> {
    VoteProfile { options: options.to_vec(), ballots: vec![] }.validate()?;
    let m = options.len();
    let issues = m * (m - 1) / 2;
    if issues > caps.max_issues {
        return Err(Error::cap("issues", issues, caps.max_issues));
    }
    let mut pre = Vec::with_capacity(issues);
    for i in 0..m {
        for j in i + 1..m {
            pre.push(Formula::atom(atom_name(&options[i], &options[j])));
        }
    }
    let gamma = match mode {
        GammaMode::Tr => {
            let mut out = Vec::new();
            for x in 0..m {
                for y in 0..m {
                    for z in 0..m {
                        if x != y && y != z && x != z {
                            out.push(Formula::implies(
                                Formula::and(prefers_formula(options, x, y), prefers_formula(options, y, z)),
                                prefers_formula(options, x, z),
                            ));
                        }
                    }
                }
            }
            if out.is_empty() {
                vec![Formula::top()]
            } else {
                out
            }
        }
        GammaMode::W => vec![Formula::disjunction(
            (0..m).map(|x| Formula::conjunction((0..m).filter(|&y| y != x).map(|y| prefers_formula(options, x, y)))),
        )],
    };
    Agenda::derived(pre, gamma, caps)
}

/// Each ballot as a complete judgment set over the preference agenda.
pub fn votes_to_profile(v: &VoteProfile, mode: GammaMode) -> Result<Profile> {
    votes_to_profile_with(v, mode, Caps::default())
}

pub fn votes_to_profile_with(v: &VoteProfile, mode: GammaMode, caps: Caps) -> Result<Profile> {
    v.validate()?;
    let agenda = preference_agenda_with(&v.options, mode, caps)?;
    let m = v.options.len();
    let agents = v
        .ranks()
        .iter()
        .map(|r| {
            let mut set = JudgmentSet::EMPTY;
            for x in 0..m {
                for y in x + 1..m {
                    set.insert(if r[x] < r[y] { prefers(m, x, y) } else { prefers(m, y, x) });
                }
            }
            set
        })
        .collect();
    Profile::new(agenda, agents)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MajorityGraph {
    pub nodes: Vec<String>,
    pub edges: Vec<(String, String)>,
}

pub fn majority_graph(v: &VoteProfile) -> MajorityGraph {
    let m = v.options.len();
    let n = v.ballots.len();
    let mut edges = Vec::new();
    for x in 0..m {
        for y in 0..m {
            if x != y && 2 * v.pairwise(x, y) > n {
                edges.push((v.options[x].clone(), v.options[y].clone()));
            }
        }
    }
    MajorityGraph { nodes: v.options.clone(), edges }
}

pub fn condorcet_winner(v: &VoteProfile) -> Option<String> {
    let g = majority_graph(v);
    let m = v.options.len();
    g.nodes.iter().find(|x| g.edges.iter().filter(|(a, _)| a == *x).count() == m - 1).cloned()
}

/// Borda scores (m−1 for a first place down to 0) and the top scorers.
pub fn borda(v: &VoteProfile) -> (BTreeMap<String, usize>, BTreeSet<String>) {
    let m = v.options.len();
    let mut scores: BTreeMap<String, usize> = v.options.iter().map(|o| (o.clone(), 0)).collect();
    for b in &v.ballots {
        for (pos, o) in b.iter().enumerate() {
            *scores.get_mut(o).unwrap() += m - 1 - pos;
        }
    }
    let best = scores.values().copied().max().unwrap_or(0);
    let winners = scores.iter().filter(|(_, s)| **s == best).map(|(o, _)| o.clone()).collect();
    (scores, winners)
}

/// Options that no other option is preferred to in `j`.
pub fn winners(j: &JudgmentSet, options: &[String]) -> Result<BTreeSet<String>> {
    let m = options.len();
    if !j.is_complete(m * (m - 1) / 2) {
        return Err(Error::input("winner extraction needs a complete judgment set"));
    }
    Ok((0..m)
        .filter(|&x| (0..m).all(|y| y == x || !j.contains(prefers(m, y, x))))
        .map(|x| options[x].clone())
        .collect())
}

/// Union of winners over the rule's collective judgment sets.
pub fn vote_via_ja(v: &VoteProfile, rule: &Rule, mode: GammaMode) -> Result<BTreeSet<String>> {
    let p = votes_to_profile(v, mode)?;
    let outcome = rule.outcome(&p)?;
    let mut out = BTreeSet::new();
    for j in &outcome.sets {
        out.extend(winners(j, &v.options)?);
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VoteMethod {
    Condorcet,
    Borda,
}

impl FromStr for VoteMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "condorcet" => Ok(VoteMethod::Condorcet),
            "borda" => Ok(VoteMethod::Borda),
            _ => Err(Error::input(format!("unknown voting method `{s}`"))),
        }
    }
}

/// Whether the rule picks the reference method's winners on this vote.
/// Without a Condorcet winner the Condorcet comparison passes vacuously.
pub fn check_generalization(v: &VoteProfile, rule: &Rule, reference: VoteMethod, mode: GammaMode) -> Result<bool> {
    let expected = match reference {
        VoteMethod::Condorcet => match condorcet_winner(v) {
            Some(w) => BTreeSet::from([w]),
            None => return Ok(true),
        },
        VoteMethod::Borda => borda(v).1,
    };
    Ok(vote_via_ja(v, rule, mode)? == expected)
}

/// The order encoded by a Tr-rational judgment set, best first.
pub fn ranking(j: &JudgmentSet, options: &[String]) -> Result<Vec<String>> {
    let m = options.len();
    if !j.is_complete(m * (m - 1) / 2) {
        return Err(Error::input("judgment set does not encode a strict total order"));
    }
    let mut wins: Vec<(usize, usize)> =
        (0..m).map(|x| ((0..m).filter(|&y| y != x && j.contains(prefers(m, x, y))).count(), x)).collect();
    wins.sort_by(|a, b| b.cmp(a));
    let order: Vec<usize> = wins.iter().map(|(_, x)| *x).collect();
    if !order.windows(2).all(|w| j.contains(prefers(m, w[0], w[1]))) {
        return Err(Error::input("judgment set does not encode a strict total order"));
    }
    Ok(order.into_iter().map(|x| options[x].clone()).collect())
}
