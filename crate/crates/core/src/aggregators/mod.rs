//! Aggregation rules.
//!
//! Rules are addressed by a compact text form `name[:key=value]...`, e.g.
//! `dist:distance=hamming:norm=sum` or `pbp:premises=0,1`.

mod consistent;
mod distance;
mod majority;
mod outcome;

use std::fmt;
use std::str::FromStr;

pub use consistent::{
    leximax_vector, maximal_consistent_subsets, med_value, rule_leximax, rule_mc, rule_mcc, rule_med, rule_ra,
    rule_young, young_witnesses,
};
pub use distance::{
    rule_distance_based, rule_extended_cbp, rule_full, rule_mrv, rule_rationalising, rule_scoring, Consensus,
    Representative,
};
pub use majority::{rule_cbp, rule_majority, rule_pbp, rule_quota, rule_unanimity};
pub use outcome::{Outcome, PartialOutcome, RuleOutput};

use crate::agenda::Profile;
use crate::error::{Error, Result};
use crate::metrics::{Distance, Norm, Scoring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rule {
    Majority,
    Pbp { premises: Vec<usize> },
    Cbp { conclusions: Vec<usize> },
    ExtendedCbp { conclusions: Vec<usize>, distance: Distance, norm: Norm },
    Quota { k: usize },
    Unanimity,
    Mc,
    Mcc,
    Ra,
    Leximax,
    Med,
    Young,
    Distance { distance: Distance, norm: Norm },
    Scoring { scoring: Scoring },
    Full { distance: Distance, norm: Norm },
    Mrv { base: Representative },
}

pub(crate) fn spec_name(name: &str, params: &[(&str, String)]) -> String {
    let mut s = name.to_owned();
    for (k, v) in params {
        s.push_str(&format!(":{k}={v}"));
    }
    s
}

impl Rule {
    pub const NAMES: [&'static str; 16] = [
        "majority",
        "pbp",
        "cbp",
        "ecbp",
        "quota",
        "unanimity",
        "mc",
        "mcc",
        "ra",
        "leximax",
        "med",
        "young",
        "dist",
        "scoring",
        "full",
        "mrv",
    ];

    /// Rules returning possibly partial sets rather than rational ones.
    pub fn is_partial(&self) -> bool {
        matches!(self, Rule::Majority | Rule::Cbp { .. } | Rule::Quota { .. } | Rule::Unanimity)
    }

    /// Rules whose parameters refer to issue or agent positions and so do not
    /// carry over to other agendas or profile sizes.
    pub fn is_instance_bound(&self) -> bool {
        matches!(self, Rule::Pbp { .. } | Rule::Cbp { .. } | Rule::ExtendedCbp { .. } | Rule::Quota { .. })
    }

    pub fn apply(&self, p: &Profile) -> Result<RuleOutput> {
        Ok(match self {
            Rule::Majority => RuleOutput::Partial(rule_majority(p)),
            Rule::Cbp { conclusions } => RuleOutput::Partial(rule_cbp(p, conclusions)?),
            Rule::Quota { k } => RuleOutput::Partial(rule_quota(p, *k)?),
            Rule::Unanimity => RuleOutput::Partial(rule_unanimity(p)),
            _ => RuleOutput::Sets(self.outcome(p)?),
        })
    }

    /// The outcome of an irresolute rule; partial rules are refused.
    pub fn outcome(&self, p: &Profile) -> Result<Outcome> {
        let mut o = match self {
            Rule::Pbp { premises } => rule_pbp(p, premises)?,
            Rule::ExtendedCbp { conclusions, distance, norm } => rule_extended_cbp(p, conclusions, *distance, *norm)?,
            Rule::Mc => rule_mc(p),
            Rule::Mcc => rule_mcc(p),
            Rule::Ra => rule_ra(p),
            Rule::Leximax => rule_leximax(p),
            Rule::Med => rule_med(p),
            Rule::Young => rule_young(p),
            Rule::Distance { distance, norm } => rule_distance_based(p, *distance, *norm)?,
            Rule::Scoring { scoring } => rule_scoring(p, *scoring)?,
            Rule::Full { distance, norm } => rule_full(p, *distance, *norm)?,
            Rule::Mrv { base } => rule_mrv(p, *base)?,
            partial => {
                return Err(Error::pre(format!("`{partial}` may return a partial set, not rational judgment sets")))
            }
        };
        o.rule = self.to_string();
        Ok(o)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dn = |d: &Distance, n: &Norm| vec![("distance", d.to_string()), ("norm", n.to_string())];
        let s = match self {
            Rule::Majority => "majority".into(),
            Rule::Pbp { premises } => spec_name("pbp", &[("premises", majority::list(premises))]),
            Rule::Cbp { conclusions } => spec_name("cbp", &[("conclusions", majority::list(conclusions))]),
            Rule::ExtendedCbp { conclusions, distance, norm } => {
                let mut params = vec![("conclusions", majority::list(conclusions))];
                params.extend(dn(distance, norm));
                spec_name("ecbp", &params)
            }
            Rule::Quota { k } => spec_name("quota", &[("k", k.to_string())]),
            Rule::Unanimity => "unanimity".into(),
            Rule::Mc => "mc".into(),
            Rule::Mcc => "mcc".into(),
            Rule::Ra => "ra".into(),
            Rule::Leximax => "leximax".into(),
            Rule::Med => "med".into(),
            Rule::Young => "young".into(),
            Rule::Distance { distance, norm } => spec_name("dist", &dn(distance, norm)),
            Rule::Scoring { scoring } => spec_name("scoring", &[("scoring", scoring.to_string())]),
            Rule::Full { distance, norm } => spec_name("full", &dn(distance, norm)),
            Rule::Mrv { base: Representative::Med } => spec_name("mrv", &[("base", "med".into())]),
            Rule::Mrv { base: Representative::Distance(d, n) } => spec_name("mrv", &dn(d, n)),
        };
        f.write_str(&s)
    }
}

/// Named parameters collected for building a [`Rule`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RuleParams {
    pub k: Option<usize>,
    pub premises: Option<Vec<usize>>,
    pub conclusions: Option<Vec<usize>>,
    pub distance: Option<Distance>,
    pub norm: Option<Norm>,
    pub scoring: Option<Scoring>,
    pub base_med: bool,
}

fn parse_issue_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .filter(|x| !x.trim().is_empty())
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::input(format!("`{x}` is not an issue index"))))
        .collect()
}

impl RuleParams {
    /// Reads one `key=value` pair.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        match key {
            "k" => self.k = Some(value.parse().map_err(|_| Error::input(format!("`{value}` is not a quota")))?),
            "premises" => self.premises = Some(parse_issue_list(value)?),
            "conclusions" => self.conclusions = Some(parse_issue_list(value)?),
            "distance" => self.distance = Some(value.parse()?),
            "norm" => self.norm = Some(value.parse()?),
            "scoring" => self.scoring = Some(value.parse()?),
            "base" if value == "med" => self.base_med = true,
            "base" if value == "dist" => self.base_med = false,
            _ => return Err(Error::input(format!("unknown rule parameter `{key}={value}`"))),
        }
        Ok(())
    }

    /// Builds the rule `name`. Conclusions default to the complement of the
    /// premises and vice versa when `m` is known.
    pub fn build(&self, name: &str, m: Option<usize>) -> Result<Rule> {
        let distance = self.distance.unwrap_or(Distance::Hamming);
        let norm = self.norm.unwrap_or(Norm::Sum);
        let complement = |of: &Option<Vec<usize>>| -> Option<Vec<usize>> {
            let (of, m) = (of.as_ref()?, m?);
            Some((0..m).filter(|i| !of.contains(i)).collect())
        };
        let premises = self.premises.clone().or_else(|| complement(&self.conclusions));
        let conclusions = self.conclusions.clone().or_else(|| complement(&self.premises));
        let need =
            |v: Option<Vec<usize>>, what: &str| v.ok_or_else(|| Error::input(format!("rule `{name}` needs --{what}")));
        Ok(match name {
            "majority" => Rule::Majority,
            "pbp" => Rule::Pbp { premises: need(premises, "premises")? },
            "cbp" => Rule::Cbp { conclusions: need(conclusions, "conclusions")? },
            "ecbp" => Rule::ExtendedCbp { conclusions: need(conclusions, "conclusions")?, distance, norm },
            "quota" => Rule::Quota { k: self.k.ok_or_else(|| Error::input("rule `quota` needs --k"))? },
            "unanimity" => Rule::Unanimity,
            "mc" => Rule::Mc,
            "mcc" => Rule::Mcc,
            "ra" => Rule::Ra,
            "leximax" => Rule::Leximax,
            "med" => Rule::Med,
            "young" => Rule::Young,
            "dist" => Rule::Distance { distance, norm },
            "scoring" => Rule::Scoring { scoring: self.scoring.unwrap_or(Scoring::Simple) },
            "full" => Rule::Full { distance, norm },
            "mrv" if self.base_med => Rule::Mrv { base: Representative::Med },
            "mrv" => Rule::Mrv { base: Representative::Distance(distance, norm) },
            _ => {
                return Err(Error::input(format!(
                    "unknown rule `{name}` (expected one of: {})",
                    Rule::NAMES.join(", ")
                )))
            }
        })
    }
}

impl Rule {
    /// Parses `name[:key=value]...`, filling unset parameters from `defaults`.
    pub fn parse_with(spec: &str, defaults: &RuleParams, m: Option<usize>) -> Result<Rule> {
        let mut parts = spec.split(':');
        let name = parts.next().unwrap_or_default().trim();
        let mut params = defaults.clone();
        for part in parts {
            let (k, v) = part
                .split_once('=')
                .ok_or_else(|| Error::input(format!("rule parameter `{part}` is not of the form key=value")))?;
            params.set(k.trim(), v.trim())?;
        }
        params.build(name, m)
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Rule::parse_with(s, &RuleParams::default(), None)
    }
}
