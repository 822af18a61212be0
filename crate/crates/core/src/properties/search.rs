use std::fmt;
use std::str::FromStr;

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::checks::{multisets, strengthening};
use super::{check, Instance, Property, PropertyVerdict, Shape};
use crate::agenda::{check_independent_partition, check_iod, Agenda, JudgmentSet, Profile};
use crate::aggregators::{Outcome, Rule};
use crate::error::{Error, Result};
use crate::preference::{preference_agenda, GammaMode};

const MAX_SEARCH_AGENTS: usize = 6;
const MAX_SEARCH_ISSUES: usize = 8;
const MAX_RANDOM: usize = 100_000;
const CHUNK: usize = 256;

/// Limits of a bounded search: catalog agendas with at most `atoms` atoms
/// and `issues` issues, every profile of up to `agents` agents, then
/// `random` seeded profiles of up to `2 * agents + 1` agents.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub atoms: usize,
    pub issues: usize,
    pub agents: usize,
    pub random: usize,
    pub seed: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { atoms: 3, issues: 4, agents: 3, random: 200, seed: 0 }
    }
}

impl Bounds {
    fn validate(&self) -> Result<()> {
        if self.agents > MAX_SEARCH_AGENTS {
            return Err(Error::cap("search agents", self.agents, MAX_SEARCH_AGENTS));
        }
        if self.issues > MAX_SEARCH_ISSUES {
            return Err(Error::cap("search issues", self.issues, MAX_SEARCH_ISSUES));
        }
        if self.random > MAX_RANDOM {
            return Err(Error::cap("random instances", self.random, MAX_RANDOM));
        }
        Ok(())
    }
}

impl fmt::Display for Bounds {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "a={},m={},n={},r={},seed={}", self.atoms, self.issues, self.agents, self.random, self.seed)
    }
}

/// Parses `a=3,m=4,n=3,r=200,seed=0`; omitted keys keep their defaults.
impl FromStr for Bounds {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut b = Bounds::default();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::input(format!("bound `{part}` is not of the form key=value")))?;
            let bad = || Error::input(format!("bound `{part}` needs a non-negative integer"));
            match k.trim() {
                "a" | "atoms" => b.atoms = v.trim().parse().map_err(|_| bad())?,
                "m" | "issues" => b.issues = v.trim().parse().map_err(|_| bad())?,
                "n" | "agents" => b.agents = v.trim().parse().map_err(|_| bad())?,
                "r" | "random" => b.random = v.trim().parse().map_err(|_| bad())?,
                "seed" => b.seed = v.trim().parse().map_err(|_| bad())?,
                other => return Err(Error::input(format!("unknown bound `{other}` (expected a, m, n, r, seed)"))),
            }
        }
        Ok(b)
    }
}

const CATALOG: &[(&[&str], &[&str])] = &[
    (&["p"], &[]),
    (&["p", "q"], &[]),
    (&["p", "q"], &["p xor q"]),
    (&["p", "q", "p & q"], &[]),
    (&["p", "q", "d"], &["(p & q) <-> d"]),
    (&["p", "q", "p | q"], &[]),
    (&["p", "p -> q", "q"], &[]),
    (&["p", "q", "r"], &["p xor q"]),
    (&["p", "q", "r"], &["p -> q", "q -> r"]),
    (&["p & q", "p | q", "p", "q"], &[]),
    (&["p & r", "q", "p & q", "r"], &[]),
    (&["p", "q", "r", "p & (q | r)"], &[]),
];

/// Small agendas used by bounded searches, filtered by the bounds.
pub fn catalog(bounds: &Bounds) -> Vec<Agenda> {
    let mut out: Vec<Agenda> =
        CATALOG.iter().map(|(pre, gamma)| Agenda::parse(pre, gamma).expect("catalog agenda")).collect();
    let options: Vec<String> = ["a", "b", "c"].iter().map(|s| s.to_string()).collect();
    out.insert(8, preference_agenda(&options, GammaMode::Tr).expect("preference agenda"));
    out.retain(|a| a.atom_universe().len() <= bounds.atoms && a.size() <= bounds.issues);
    out
}

fn subsets(m: usize) -> impl Iterator<Item = Vec<usize>> {
    (1u64..1 << m).map(move |mask| (0..m).filter(|i| mask >> i & 1 == 1).collect())
}

struct Setting {
    agenda: Agenda,
    partitions: Vec<(Vec<usize>, Vec<usize>)>,
    decompositions: Vec<(Vec<usize>, Vec<usize>)>,
}

impl Setting {
    fn new(agenda: Agenda, shape: Shape) -> Self {
        let m = agenda.size();
        let all = (1u64 << m) - 1;
        let split = |mask: u64| -> Vec<usize> { (0..m).filter(|i| mask >> i & 1 == 1).collect() };
        let mut partitions = Vec::new();
        let mut decompositions = Vec::new();
        if shape == Shape::Partition {
            for mask in 1..all {
                // Each unordered partition once: the part holding issue 0 comes first.
                if mask & 1 == 1 {
                    let (a, b) = (split(mask), split(all & !mask));
                    if check_independent_partition(&agenda, &a, &b).unwrap_or(false) {
                        partitions.push((a, b));
                    }
                }
            }
        }
        if shape == Shape::Overlap {
            for x in 1..all {
                for y in x + 1..all {
                    if x | y == all && x & y != 0 && x & y != x && x & y != y {
                        let (a, b) = (split(x), split(y));
                        if check_iod(&agenda, &a, &b).unwrap_or(false) {
                            decompositions.push((a, b));
                        }
                    }
                }
            }
        }
        Setting { agenda, partitions, decompositions }
    }

    fn profile(&self, idx: &[usize]) -> Profile {
        let c = self.agenda.codomain();
        Profile::new(self.agenda.clone(), idx.iter().map(|&k| c[k]).collect()).expect("codomain profile")
    }

    fn strengthenings(&self, p: &Profile) -> Vec<Profile> {
        let mut out = Vec::new();
        for i in 0..p.n() {
            for &c in self.agenda.codomain() {
                let mut agents = p.agents().to_vec();
                agents[i] = c;
                let q = p_with(p, agents);
                if strengthening(p, &q).is_some() {
                    out.push(q);
                }
            }
        }
        out
    }

    fn replacements(&self, p: &Profile) -> Vec<Profile> {
        let mut out = Vec::new();
        for i in 0..p.n() {
            for &c in self.agenda.codomain() {
                if c != p.agents()[i] {
                    let mut agents = p.agents().to_vec();
                    agents[i] = c;
                    out.push(p_with(p, agents));
                }
            }
        }
        out
    }

    /// Instances for `property` built around `p`; `partners` feed the
    /// two-profile properties that combine independent profiles.
    fn instances(&self, property: Property, p: &Profile, partners: &[Profile]) -> Vec<Instance> {
        let base = || Instance::new(p.clone());
        match property.shape() {
            Shape::Single => vec![base()],
            Shape::Repeat => vec![base().with_k(2), base().with_k(3)],
            Shape::Subagenda => subsets(self.agenda.size()).map(|s| base().with_subagenda(s)).collect(),
            Shape::Partition => self.partitions.iter().map(|(a, b)| base().with_parts(a.clone(), b.clone())).collect(),
            Shape::Overlap => {
                self.decompositions.iter().map(|(a, b)| base().with_parts(a.clone(), b.clone())).collect()
            }
            Shape::Pair => {
                let others = match property {
                    Property::Monotonicity => self.strengthenings(p),
                    Property::Independence => self.replacements(p),
                    _ => partners.to_vec(),
                };
                others.into_iter().map(|q| base().with_other(q)).collect()
            }
        }
    }
}

fn p_with(p: &Profile, agents: Vec<JudgmentSet>) -> Profile {
    Profile::new(p.agenda().clone(), agents).expect("codomain profile")
}

fn random_profile(rng: &mut ChaCha8Rng, agenda: &Agenda, n: usize) -> Profile {
    let c = agenda.codomain();
    let agents = (0..n).map(|_| c[rng.random_range(0..c.len())]).collect();
    Profile::new(agenda.clone(), agents).expect("codomain profile")
}

fn all_profiles(setting: &Setting, max_agents: usize) -> Vec<Profile> {
    (1..=max_agents)
        .flat_map(|n| multisets(setting.agenda.codomain().len(), n))
        .map(|idx| setting.profile(&idx))
        .collect()
}

/// The exhaustive instances followed by the seeded random ones.
fn instance_stream(property: Property, bounds: &Bounds) -> Vec<Instance> {
    let settings: Vec<Setting> = catalog(bounds).into_iter().map(|a| Setting::new(a, property.shape())).collect();
    let mut out = Vec::new();
    for s in &settings {
        if property == Property::Responsiveness {
            out.push(Instance::new(s.profile(&[0])).with_k(bounds.agents));
            continue;
        }
        let profiles = all_profiles(s, bounds.agents);
        for p in &profiles {
            let partners: Vec<Profile> = if property == Property::Reinforcement {
                profiles.iter().filter(|q| p.n() + q.n() <= bounds.agents).cloned().collect()
            } else {
                vec![]
            };
            out.extend(s.instances(property, p, &partners));
        }
    }
    if settings.is_empty() || property == Property::Responsiveness {
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let top = 2 * bounds.agents + 1;
    for _ in 0..bounds.random {
        let s = &settings[rng.random_range(0..settings.len())];
        let n = rng.random_range(1..=top);
        let p = random_profile(&mut rng, &s.agenda, n);
        let n = rng.random_range(1..=top);
        let partner = random_profile(&mut rng, &s.agenda, n);
        let mut candidates = s.instances(property, &p, &[partner]);
        if !candidates.is_empty() {
            out.push(candidates.swap_remove(rng.random_range(0..candidates.len())));
        }
    }
    out
}

/// Looks for an instance on which `rule` violates `property`: first the
/// caller's instances, then every catalog instance within the bounds, then
/// seeded random ones. Instances the rule cannot be applied to are skipped.
pub fn search_counterexample(
    rule: &Rule,
    property: Property,
    bounds: &Bounds,
    extra: &[Instance],
) -> Result<PropertyVerdict> {
    bounds.validate()?;
    let mut stream = extra.to_vec();
    stream.extend(instance_stream(property, bounds));
    let (mut checked, mut skipped, mut vacuous) = (0, 0, 0);
    for chunk in stream.chunks(CHUNK) {
        let results: Vec<Result<PropertyVerdict>> = chunk.par_iter().map(|inst| check(rule, property, inst)).collect();
        for r in results {
            match r {
                Ok(v) if !v.holds_on_instance => {
                    return Ok(PropertyVerdict {
                        search_bounds: Some(*bounds),
                        instances_checked: checked + 1,
                        instances_skipped: skipped,
                        ..v
                    });
                }
                Ok(v) => {
                    checked += 1;
                    vacuous += usize::from(v.vacuous);
                }
                Err(_) => skipped += 1,
            }
        }
    }
    Ok(PropertyVerdict {
        property,
        rule: rule.to_string(),
        holds_on_instance: true,
        vacuous: checked == vacuous,
        detail: format!("no violation in {checked} instances ({vacuous} vacuous, {skipped} skipped)"),
        witness: None,
        search_bounds: Some(*bounds),
        instances_checked: checked,
        instances_skipped: skipped,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equal,
    Refines,
    RefinedBy,
    Different,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Equal => "equal",
            Relation::Refines => "refines",
            Relation::RefinedBy => "refined_by",
            Relation::Different => "different",
        })
    }
}

/// How two rules relate on every profile examined. Witnesses show where
/// the first rule leaves the second and where the second leaves the first.
#[derive(Debug, Clone)]
pub struct Comparison {
    pub first: String,
    pub second: String,
    pub relation: Relation,
    pub witnesses: Vec<Profile>,
    pub bounds: Bounds,
    pub instances_checked: usize,
    pub instances_skipped: usize,
}

fn both(r1: &Rule, r2: &Rule, p: &Profile) -> Option<(Outcome, Outcome)> {
    Some((r1.outcome(p).ok()?, r2.outcome(p).ok()?))
}

pub fn compare_rules(r1: &Rule, r2: &Rule, bounds: &Bounds, extra: &[Profile]) -> Result<Comparison> {
    bounds.validate()?;
    let mut profiles = extra.to_vec();
    let settings: Vec<Setting> = catalog(bounds).into_iter().map(|a| Setting::new(a, Shape::Single)).collect();
    for s in &settings {
        profiles.extend(all_profiles(s, bounds.agents));
    }
    if !settings.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
        for _ in 0..bounds.random {
            let s = &settings[rng.random_range(0..settings.len())];
            let n = rng.random_range(1..=2 * bounds.agents + 1);
            profiles.push(random_profile(&mut rng, &s.agenda, n));
        }
    }
    let results: Vec<Option<(bool, bool)>> =
        profiles.par_iter().map(|p| both(r1, r2, p).map(|(a, b)| (a.refines(&b), b.refines(&a)))).collect();
    let mut leaves_first = None;
    let mut leaves_second = None;
    let mut skipped = 0;
    for (i, r) in results.iter().enumerate() {
        match r {
            None => skipped += 1,
            Some((one_in_two, two_in_one)) => {
                if !one_in_two && leaves_first.is_none() {
                    leaves_first = Some(i);
                }
                if !two_in_one && leaves_second.is_none() {
                    leaves_second = Some(i);
                }
            }
        }
    }
    let relation = match (leaves_first, leaves_second) {
        (None, None) => Relation::Equal,
        (None, Some(_)) => Relation::Refines,
        (Some(_), None) => Relation::RefinedBy,
        (Some(_), Some(_)) => Relation::Different,
    };
    let mut idx: Vec<usize> = leaves_first.into_iter().chain(leaves_second).collect();
    idx.dedup();
    Ok(Comparison {
        first: r1.to_string(),
        second: r2.to_string(),
        relation,
        witnesses: idx.into_iter().map(|i| profiles[i].clone()).collect(),
        bounds: *bounds,
        instances_checked: profiles.len() - skipped,
        instances_skipped: skipped,
    })
}
