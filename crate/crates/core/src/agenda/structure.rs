use std::collections::{HashSet, VecDeque};

use serde::Serialize;

use super::agenda::Agenda;
use super::judgment::{full_mask, issues_of, mask_of, JudgmentSet, SignedJudgment};
use crate::error::{Error, Result};
use crate::logic::{atoms, Formula};

/// Logical structure of an agenda.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AgendaReport {
    pub closed_under_atoms: bool,
    /// Minimal inconsistent subsets, each sorted by issue then sign.
    pub minimal_inconsistent_subsets: Vec<Vec<SignedJudgment>>,
    pub simple: bool,
    pub smallest_k_median: usize,
    pub path_connected: bool,
}

/// Every consistent partial set as `(defined, accepted)` mask pairs.
fn consistent_partials(agenda: &Agenda) -> HashSet<(u64, u64)> {
    let m = agenda.size();
    let mut out = HashSet::new();
    for d in 0..=full_mask(m) {
        for c in agenda.codomain() {
            out.insert((d, c.accepted() & d));
        }
    }
    out
}

/// Minimal inconsistent subsets of the agenda (including complementary
/// pairs), ordered by size then canonically.
pub fn minimal_inconsistent_subsets(agenda: &Agenda) -> Result<Vec<Vec<SignedJudgment>>> {
    let m = agenda.size();
    let cap = agenda.caps().max_report_issues;
    if m > cap {
        return Err(Error::cap("issues for structure analysis", m, cap));
    }
    let ok = consistent_partials(agenda);
    let mut found = Vec::new();
    for d in 0..=full_mask(m) {
        // Walk the submasks of d as accepted sets.
        let mut a = d;
        loop {
            if !ok.contains(&(d, a)) && issues_of(d).iter().all(|&i| ok.contains(&(d & !(1 << i), a & !(1 << i)))) {
                let set = JudgmentSet::raw(a, d & !a);
                found.push(set.judgments().collect::<Vec<_>>());
            }
            if a == 0 {
                break;
            }
            a = (a - 1) & d;
        }
    }
    for i in 0..m {
        let yes = ok.contains(&(1 << i, 1 << i));
        let no = ok.contains(&(1 << i, 0));
        if yes && no {
            found.push(vec![SignedJudgment::accept(i), SignedJudgment::reject(i)]);
        }
    }
    for y in &mut found {
        y.sort();
    }
    found.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(found)
}

fn index(j: SignedJudgment) -> usize {
    2 * j.issue + usize::from(!j.accept)
}

/// Conditional entailment edges: `phi` reaches `psi` when some minimal
/// inconsistent subset contains both `phi` and the negation of `psi`.
fn conditional_entailment(m: usize, mis: &[Vec<SignedJudgment>]) -> Vec<Vec<bool>> {
    let mut edge = vec![vec![false; 2 * m]; 2 * m];
    for y in mis {
        for &phi in y {
            for &neg_psi in y {
                let psi = neg_psi.negate();
                if psi != phi.negate() {
                    edge[index(phi)][index(psi)] = true;
                }
            }
        }
    }
    edge
}

fn strongly_connected(edge: &[Vec<bool>]) -> bool {
    let n = edge.len();
    (0..n).all(|s| {
        let mut seen = vec![false; n];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for v in 0..n {
                if edge[u][v] && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.iter().all(|&x| x)
    })
}

pub fn agenda_report(agenda: &Agenda) -> Result<AgendaReport> {
    let mis = minimal_inconsistent_subsets(agenda)?;
    let largest = mis.iter().map(Vec::len).max().unwrap_or(0);
    let issue_atoms: HashSet<&str> = agenda
        .pre_agenda()
        .iter()
        .filter_map(|f| match f {
            Formula::Atom(a) => Some(a.as_str()),
            _ => None,
        })
        .collect();
    let closed = atoms(agenda.pre_agenda()).iter().all(|a| issue_atoms.contains(a.as_str()));
    let edges = conditional_entailment(agenda.size(), &mis);
    Ok(AgendaReport {
        closed_under_atoms: closed,
        simple: largest < 3,
        smallest_k_median: largest.max(2),
        path_connected: strongly_connected(&edges),
        minimal_inconsistent_subsets: mis,
    })
}

/// Codomain of the sub-agenda on `issues`, kept in full-agenda indexing.
fn projected(agenda: &Agenda, issues: &[usize]) -> Vec<JudgmentSet> {
    let mask = mask_of(issues);
    let mut out: Vec<JudgmentSet> = agenda.codomain().iter().map(|c| c.restrict(mask)).collect();
    out.sort();
    out.dedup();
    out
}

fn check_indices(agenda: &Agenda, part: &[usize]) -> Result<u64> {
    for &i in part {
        agenda.check_issue(i)?;
    }
    Ok(mask_of(part))
}

/// Semantic independence of a two-part partition of the issues.
pub fn check_independent_partition(agenda: &Agenda, part1: &[usize], part2: &[usize]) -> Result<bool> {
    let (a, b) = (check_indices(agenda, part1)?, check_indices(agenda, part2)?);
    if a == 0 || b == 0 || a & b != 0 || a | b != agenda.mask() {
        return Err(Error::pre("the parts do not partition the issues into two non-empty sets"));
    }
    independent_cover(agenda, part1, part2)
}

fn independent_cover(agenda: &Agenda, a1: &[usize], a2: &[usize]) -> Result<bool> {
    let left = projected(agenda, a1);
    let right = projected(agenda, a2);
    Ok(left.iter().all(|x| right.iter().all(|y| x.union(y).is_none_or(|u| agenda.is_rational(&u)))))
}

/// Syntactic independence: the parts share no atom. Only meaningful without
/// constraints.
pub fn check_syntactic_partition(agenda: &Agenda, part1: &[usize], part2: &[usize]) -> Result<bool> {
    let (a, b) = (check_indices(agenda, part1)?, check_indices(agenda, part2)?);
    if a == 0 || b == 0 || a & b != 0 || a | b != agenda.mask() {
        return Err(Error::pre("the parts do not partition the issues into two non-empty sets"));
    }
    if agenda.constraints().iter().any(|g| *g != Formula::top()) {
        return Err(Error::pre("the syntactic test requires trivial constraints"));
    }
    let f = |part: &[usize]| atoms(part.iter().map(|&i| &agenda.pre_agenda()[i]));
    Ok(f(part1).is_disjoint(&f(part2)))
}

/// Independent overlapping decomposition: sets on the two (possibly
/// overlapping) parts that agree on the overlap always combine rationally.
pub fn check_iod(agenda: &Agenda, a1: &[usize], a2: &[usize]) -> Result<bool> {
    let (a, b) = (check_indices(agenda, a1)?, check_indices(agenda, a2)?);
    if a == 0 || b == 0 || a | b != agenda.mask() {
        return Err(Error::pre("the parts do not cover the issues"));
    }
    independent_cover(agenda, a1, a2)
}
