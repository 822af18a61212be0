use std::collections::HashSet;

use serde::Serialize;

use super::judgment::{full_mask, JudgmentSet, SignedJudgment};
use super::profile::Profile;
use crate::error::{Error, Result};

/// Membership in the four restricted domains, each with a witnessing order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DomainReport {
    /// Order over the agenda judgments under which every set is an interval.
    pub single_plateaued: Option<Vec<SignedJudgment>>,
    /// Order under which every set's complement is an interval.
    pub single_canyoned: Option<Vec<SignedJudgment>>,
    /// Agent order in which each set lies between its neighbours.
    pub unidimensionally_aligned: Option<Vec<usize>>,
    /// Agent order in which the holders of each judgment are adjacent.
    pub unidimensionally_ordered: Option<Vec<usize>>,
}

fn element(j: SignedJudgment) -> usize {
    2 * j.issue + usize::from(!j.accept)
}

fn judgment(e: usize) -> SignedJudgment {
    SignedJudgment { issue: e / 2, accept: e.is_multiple_of(2) }
}

fn as_elements(j: &JudgmentSet) -> u64 {
    j.judgments().fold(0, |acc, x| acc | 1 << element(x))
}

/// Finds a linear order of `0..k` in which every mask in `sets` occupies
/// consecutive positions.
fn consecutive_order(k: usize, sets: &[u64]) -> Option<Vec<usize>> {
    fn go(
        k: usize,
        sets: &[u64],
        placed: u64,
        last: Option<usize>,
        path: &mut Vec<usize>,
        dead: &mut HashSet<(u64, usize)>,
    ) -> bool {
        if path.len() == k {
            return true;
        }
        let key = (placed, last.unwrap_or(k));
        if dead.contains(&key) {
            return false;
        }
        for e in 0..k {
            if placed >> e & 1 == 1 {
                continue;
            }
            let fits = sets.iter().all(|&s| {
                let inside = s >> e & 1 == 1;
                let started = s & placed != 0;
                let open = last.is_some_and(|l| s >> l & 1 == 1);
                if inside {
                    !started || open
                } else {
                    !(open && s & !placed != 0)
                }
            });
            if fits {
                path.push(e);
                if go(k, sets, placed | 1 << e, Some(e), path, dead) {
                    return true;
                }
                path.pop();
            }
        }
        dead.insert(key);
        false
    }
    let mut path = Vec::with_capacity(k);
    go(k, sets, 0, None, &mut path, &mut HashSet::new()).then_some(path)
}

fn permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    let mut current: Option<Vec<usize>> = Some((0..n).collect());
    std::iter::from_fn(move || {
        let out = current.clone()?;
        let mut p = out.clone();
        let next = (|| {
            let i = (1..p.len()).rev().find(|&i| p[i - 1] < p[i])?;
            let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1])?;
            p.swap(i - 1, j);
            p[i..].reverse();
            Some(p)
        })();
        current = next;
        Some(out)
    })
}

pub(crate) fn all_permutations(n: usize) -> impl Iterator<Item = Vec<usize>> {
    permutations(n)
}

pub fn restricted_domain_report(profile: &Profile) -> Result<DomainReport> {
    if !profile.is_strict() {
        return Err(Error::pre("restricted domains are defined for rational profiles"));
    }
    let caps = profile.agenda().caps();
    let m = profile.agenda().size();
    let n = profile.n();
    if m > caps.domain_max_issues {
        return Err(Error::cap("issues for domain search", m, caps.domain_max_issues));
    }
    if n > caps.domain_max_agents {
        return Err(Error::cap("agents for domain search", n, caps.domain_max_agents));
    }
    let k = 2 * m;
    let mut plateaus: Vec<u64> = profile.agents().iter().map(as_elements).collect();
    plateaus.sort_unstable();
    plateaus.dedup();
    let canyons: Vec<u64> = plateaus.iter().map(|s| full_mask(k) & !s).collect();
    let to_order = |o: Vec<usize>| o.into_iter().map(judgment).collect::<Vec<_>>();

    let agents = profile.agents();
    let aligned = permutations(n).find(|order| {
        order.windows(3).all(|w| {
            let (a, b, c) = (agents[w[0]], agents[w[1]], agents[w[2]]);
            a.intersection(&c).is_subset(&b)
        })
    });
    let ordered = permutations(n).find(|order| {
        (0..k).all(|e| {
            let holds: Vec<bool> = order.iter().map(|&i| as_elements(&agents[i]) >> e & 1 == 1).collect();
            let first = holds.iter().position(|&h| h);
            let last = holds.iter().rposition(|&h| h);
            match (first, last) {
                (Some(f), Some(l)) => holds[f..=l].iter().all(|&h| h),
                _ => true,
            }
        })
    });
    Ok(DomainReport {
        single_plateaued: consecutive_order(k, &plateaus).map(to_order),
        single_canyoned: consecutive_order(k, &canyons).map(to_order),
        unidimensionally_aligned: aligned,
        unidimensionally_ordered: ordered,
    })
}
