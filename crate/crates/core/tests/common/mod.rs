//! Brute-force oracles: slow, definition-following reimplementations that
//! work on formulas rather than the engine's cached codomain.
#![allow(dead_code)]

use std::collections::BTreeSet;

use ja_core::agenda::{Agenda, JudgmentSet, Profile, SignedJudgment};
use ja_core::logic::{atoms, is_consistent_set, Formula};

pub fn js(signs: &[i8]) -> JudgmentSet {
    JudgmentSet::from_signs(signs).unwrap()
}

pub fn sets(rows: &[&[i8]]) -> Vec<JudgmentSet> {
    let mut v: Vec<JudgmentSet> = rows.iter().map(|r| js(r)).collect();
    v.sort();
    v
}

/// Satisfiability of the judgments plus constraints, by truth tables.
pub fn consistent(agenda: &Agenda, set: &JudgmentSet) -> bool {
    let mut fs: Vec<Formula> = agenda.constraints().to_vec();
    fs.extend(agenda.formulas_of(set));
    let universe = atoms(agenda.pre_agenda().iter().chain(agenda.constraints()));
    is_consistent_set(&fs, &universe).unwrap()
}

pub fn codomain(agenda: &Agenda) -> Vec<JudgmentSet> {
    let m = agenda.size();
    let mut out: Vec<JudgmentSet> =
        (0..1u64 << m).map(|mask| JudgmentSet::complete(m, mask)).filter(|j| consistent(agenda, j)).collect();
    out.sort();
    out
}

pub fn ext(agenda: &Agenda, set: &JudgmentSet) -> Vec<JudgmentSet> {
    codomain(agenda).into_iter().filter(|c| set.is_subset(c)).collect()
}

pub fn majority(p: &Profile) -> JudgmentSet {
    let n = p.n();
    let mut set = JudgmentSet::EMPTY;
    for i in 0..p.agenda().size() {
        for j in [SignedJudgment::accept(i), SignedJudgment::reject(i)] {
            if 2 * p.agents().iter().filter(|a| a.contains(j)).count() > n {
                set.insert(j);
            }
        }
    }
    set
}

/// Subsets of `s`, as judgment sets.
pub fn subsets(s: &JudgmentSet) -> Vec<JudgmentSet> {
    let items: Vec<SignedJudgment> = s.judgments().collect();
    (0..1u64 << items.len())
        .map(|mask| {
            JudgmentSet::from_judgments((0..items.len()).filter(|k| mask >> k & 1 == 1).map(|k| items[k])).unwrap()
        })
        .collect()
}

pub fn maxcons(agenda: &Agenda, s: &JudgmentSet) -> Vec<JudgmentSet> {
    let cons: Vec<JudgmentSet> = subsets(s).into_iter().filter(|x| consistent(agenda, x)).collect();
    let mut out: Vec<JudgmentSet> =
        cons.iter().filter(|x| !cons.iter().any(|y| y != *x && x.is_subset(y))).copied().collect();
    out.sort();
    out
}

fn union_ext(agenda: &Agenda, parts: &[JudgmentSet]) -> Vec<JudgmentSet> {
    let all: BTreeSet<JudgmentSet> = parts.iter().flat_map(|s| ext(agenda, s)).collect();
    all.into_iter().collect()
}

pub fn mc(p: &Profile) -> Vec<JudgmentSet> {
    union_ext(p.agenda(), &maxcons(p.agenda(), &majority(p)))
}

pub fn mcc(p: &Profile) -> Vec<JudgmentSet> {
    let mx = maxcons(p.agenda(), &majority(p));
    let best = mx.iter().map(|s| s.len()).max().unwrap_or(0);
    let big: Vec<JudgmentSet> = mx.into_iter().filter(|s| s.len() == best).collect();
    union_ext(p.agenda(), &big)
}

pub fn support(p: &Profile, j: SignedJudgment) -> usize {
    p.agents().iter().filter(|a| a.contains(j)).count()
}

fn permutations<T: Clone>(items: &[T]) -> Vec<Vec<T>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, x.clone());
            out.push(tail);
        }
    }
    out
}

/// Greedy over every support-descending permutation of all judgments.
pub fn ra(p: &Profile) -> Vec<JudgmentSet> {
    let m = p.agenda().size();
    let all: Vec<SignedJudgment> =
        (0..m).flat_map(|i| [SignedJudgment::accept(i), SignedJudgment::reject(i)]).collect();
    let mut out = BTreeSet::new();
    for perm in permutations(&all) {
        if perm.windows(2).any(|w| support(p, w[0]) < support(p, w[1])) {
            continue;
        }
        let mut s = JudgmentSet::EMPTY;
        for j in perm {
            if s.contains(j.negate()) {
                continue;
            }
            let grown = s.with(j);
            if consistent(p.agenda(), &grown) {
                s = grown;
            }
        }
        out.insert(s);
    }
    out.into_iter().collect()
}

pub fn med_value(p: &Profile, j: &JudgmentSet) -> usize {
    j.judgments().map(|x| support(p, x)).sum()
}

pub fn med(p: &Profile) -> Vec<JudgmentSet> {
    let c = codomain(p.agenda());
    let best = c.iter().map(|j| med_value(p, j)).max().unwrap();
    c.into_iter().filter(|j| med_value(p, j) == best).collect()
}

pub fn leximax(p: &Profile) -> Vec<JudgmentSet> {
    let n = p.n();
    let c = codomain(p.agenda());
    let key = |j: &JudgmentSet| -> Vec<usize> {
        (n / 2 + 1..=n).rev().map(|k| j.judgments().filter(|x| support(p, *x) == k).count()).collect()
    };
    let best = c.iter().map(key).max().unwrap();
    c.into_iter().filter(|j| key(j) == best).collect()
}

/// Removal of agent subsets in order of size.
pub fn young(p: &Profile) -> (usize, Vec<JudgmentSet>) {
    let n = p.n();
    for r in 0..=n {
        let mut found = BTreeSet::new();
        for mask in 0u64..1 << n {
            if mask.count_ones() as usize != r {
                continue;
            }
            let kept: Vec<JudgmentSet> = (0..n).filter(|i| mask >> i & 1 == 0).map(|i| p.agents()[i]).collect();
            let q = Profile::open(p.agenda().clone(), kept).unwrap();
            let m = majority(&q);
            if consistent(p.agenda(), &m) {
                found.extend(ext(p.agenda(), &m));
            }
        }
        if !found.is_empty() {
            return (r, found.into_iter().collect());
        }
    }
    unreachable!()
}

pub fn hamming(a: &JudgmentSet, b: &JudgmentSet, m: usize) -> u64 {
    (0..m).filter(|&i| a.verdict(i) != b.verdict(i)).count() as u64
}

/// Nearest majority-consistent profiles by plain enumeration of every
/// profile over the codomain.
pub fn full_hamming_sum(p: &Profile) -> Vec<JudgmentSet> {
    let c = codomain(p.agenda());
    let n = p.n();
    let m = p.agenda().size();
    let mut best = u64::MAX;
    let mut found = BTreeSet::new();
    let total = c.len().pow(n as u32);
    for code in 0..total {
        let mut x = code;
        let mut agents = Vec::new();
        for _ in 0..n {
            agents.push(c[x % c.len()]);
            x /= c.len();
        }
        let d: u64 = agents.iter().zip(p.agents()).map(|(a, b)| hamming(a, b, m)).sum();
        let q = Profile::open(p.agenda().clone(), agents).unwrap();
        let maj = majority(&q);
        if !consistent(p.agenda(), &maj) {
            continue;
        }
        if d < best {
            best = d;
            found.clear();
        }
        if d == best {
            found.extend(ext(p.agenda(), &maj));
        }
    }
    found.into_iter().collect()
}
