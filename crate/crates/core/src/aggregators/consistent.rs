use std::collections::{BTreeSet, HashSet};

use super::outcome::Outcome;
use crate::agenda::{JudgmentSet, Profile, SignedJudgment};

/// Inclusion-maximal consistent subsets of `s`.
pub fn maximal_consistent_subsets(p: &Profile, s: &JudgmentSet) -> Vec<JudgmentSet> {
    // Every consistent subset of `s` sits inside `s ∩ c` for some rational `c`.
    let candidates: BTreeSet<JudgmentSet> = p.agenda().codomain().iter().map(|c| s.intersection(c)).collect();
    candidates.iter().filter(|x| !candidates.iter().any(|y| y != *x && x.is_subset(y))).copied().collect()
}

fn union_ext(p: &Profile, subsets: &[JudgmentSet]) -> Vec<JudgmentSet> {
    subsets.iter().flat_map(|s| p.agenda().ext_unchecked(s)).collect()
}

pub fn rule_mc(p: &Profile) -> Outcome {
    let maxcons = maximal_consistent_subsets(p, &p.majority());
    Outcome::new("mc", union_ext(p, &maxcons))
}

pub fn rule_mcc(p: &Profile) -> Outcome {
    let maxcons = maximal_consistent_subsets(p, &p.majority());
    let best = maxcons.iter().map(JudgmentSet::len).max().unwrap_or(0);
    let largest: Vec<JudgmentSet> = maxcons.into_iter().filter(|s| s.len() == best).collect();
    Outcome::new("mcc", union_ext(p, &largest))
}

/// Greedy acceptance in order of decreasing support, over every ordering of
/// equally supported judgments.
pub fn rule_ra(p: &Profile) -> Outcome {
    let m = p.agenda().size();
    let mut ranked: Vec<(usize, SignedJudgment)> =
        (0..m).flat_map(|i| [SignedJudgment::accept(i), SignedJudgment::reject(i)]).map(|j| (p.count(j), j)).collect();
    ranked.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));

    let mut states: BTreeSet<JudgmentSet> = BTreeSet::from([JudgmentSet::EMPTY]);
    for group in ranked.chunk_by(|a, b| a.0 == b.0) {
        let group: Vec<SignedJudgment> = group.iter().map(|(_, j)| *j).collect();
        let mut next = BTreeSet::new();
        for s in &states {
            let mut seen = HashSet::new();
            greedy(p, &group, *s, (1u64 << group.len()) - 1, &mut seen, &mut next);
        }
        states = next;
    }
    Outcome::new("ra", states)
}

fn greedy(
    p: &Profile,
    group: &[SignedJudgment],
    s: JudgmentSet,
    remaining: u64,
    seen: &mut HashSet<(JudgmentSet, u64)>,
    out: &mut BTreeSet<JudgmentSet>,
) {
    if !seen.insert((s, remaining)) {
        return;
    }
    if remaining == 0 {
        out.insert(s);
        return;
    }
    for k in 0..group.len() {
        if remaining >> k & 1 == 0 {
            continue;
        }
        let j = group[k];
        let rest = remaining & !(1 << k);
        let grown = s.with(j);
        if !s.contains(j.negate()) && p.agenda().is_consistent(&grown) {
            greedy(p, group, grown, rest, seen, out);
        } else {
            greedy(p, group, s, rest, seen, out);
        }
    }
}

/// Counts of judgments at each strict-majority support level, highest
/// level first.
pub fn leximax_vector(p: &Profile, j: &JudgmentSet) -> Vec<usize> {
    let n = p.n();
    let mut v = vec![0; n - n / 2];
    for x in j.judgments() {
        let k = p.count(x);
        if 2 * k > n {
            v[n - k] += 1;
        }
    }
    v
}

pub fn rule_leximax(p: &Profile) -> Outcome {
    let scored: Vec<(Vec<usize>, JudgmentSet)> =
        p.agenda().codomain().iter().map(|c| (leximax_vector(p, c), *c)).collect();
    let best = scored.iter().map(|(v, _)| v).max().cloned().unwrap_or_default();
    Outcome::new("leximax", scored.into_iter().filter(|(v, _)| *v == best).map(|(_, c)| c))
}

/// Summed support of the judgments in `j`.
pub fn med_value(p: &Profile, j: &JudgmentSet) -> usize {
    j.judgments().map(|x| p.count(x)).sum()
}

pub fn rule_med(p: &Profile) -> Outcome {
    let supports = p.supports();
    let value = |c: &JudgmentSet| -> usize {
        c.judgments().map(|x| if x.accept { supports[x.issue].0 } else { supports[x.issue].1 }).sum()
    };
    let best = p.agenda().codomain().iter().map(value).max().unwrap_or(0);
    Outcome::new("med", p.agenda().codomain().iter().copied().filter(|c| value(c) == best))
}

/// Fewest agents whose removal leaves a consistent majority, and the
/// majority sets of every such sub-profile.
pub fn young_witnesses(p: &Profile) -> (usize, Vec<JudgmentSet>) {
    let distinct = p.distinct();
    let m = p.agenda().size();
    let n = p.n();
    for r in 0..=n {
        let mut found = BTreeSet::new();
        let mut removal = vec![0; distinct.len()];
        removals(&distinct, r, 0, &mut removal, &mut |rem| {
            let kept = n - r;
            let mut maj = JudgmentSet::EMPTY;
            for i in 0..m {
                let (mut yes, mut no) = (0, 0);
                for ((j, c), x) in distinct.iter().zip(rem) {
                    let w = c - x;
                    if j.contains(SignedJudgment::accept(i)) {
                        yes += w;
                    } else if j.contains(SignedJudgment::reject(i)) {
                        no += w;
                    }
                }
                if 2 * yes > kept {
                    maj.insert(SignedJudgment::accept(i));
                } else if 2 * no > kept {
                    maj.insert(SignedJudgment::reject(i));
                }
            }
            if p.agenda().is_consistent(&maj) {
                found.insert(maj);
            }
        });
        if !found.is_empty() {
            return (r, found.into_iter().collect());
        }
    }
    unreachable!("removing every agent leaves an empty, consistent majority")
}

/// Visits every way of removing `left` agents, as per-set removal counts.
fn removals(
    distinct: &[(JudgmentSet, usize)],
    left: usize,
    at: usize,
    current: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if at == distinct.len() {
        if left == 0 {
            visit(current);
        }
        return;
    }
    let remaining_capacity: usize = distinct[at..].iter().map(|(_, c)| c).sum();
    if remaining_capacity < left {
        return;
    }
    for x in 0..=left.min(distinct[at].1) {
        current[at] = x;
        removals(distinct, left - x, at + 1, current, visit);
    }
    current[at] = 0;
}

pub fn rule_young(p: &Profile) -> Outcome {
    let (r, majorities) = young_witnesses(p);
    Outcome::new("young", union_ext(p, &majorities)).with_note(format!("removed {r} agent(s)"))
}
