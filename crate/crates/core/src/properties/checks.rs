use std::collections::BTreeSet;

use crate::agenda::{
    all_permutations, check_independent_partition, check_iod, mask_of, JudgmentSet, Profile, SignedJudgment, Verdict,
};
use crate::aggregators::{Outcome, Rule, RuleOutput};
use crate::error::{Error, Result};

/// Result of one property check on one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Check {
    pub holds: bool,
    pub vacuous: bool,
    pub detail: String,
}

impl Check {
    fn pass(detail: impl Into<String>) -> Self {
        Check { holds: true, vacuous: false, detail: detail.into() }
    }

    fn vacuous(detail: impl Into<String>) -> Self {
        Check { holds: true, vacuous: true, detail: detail.into() }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Check { holds: false, vacuous: false, detail: detail.into() }
    }

    fn verdict(holds: bool, ok: impl Into<String>, bad: impl Into<String>) -> Self {
        if holds {
            Check::pass(ok)
        } else {
            Check::fail(bad)
        }
    }
}

fn run(rule: &Rule, p: &Profile) -> Result<Outcome> {
    rule.outcome(p)
}

/// Collective sets of any rule; a partial rule yields its one partial set.
fn output_sets(rule: &Rule, p: &Profile) -> Result<Vec<JudgmentSet>> {
    Ok(match rule.apply(p)? {
        RuleOutput::Sets(o) => o.sets,
        RuleOutput::Partial(o) => vec![o.set],
    })
}

fn show_all(p: &Profile, sets: &[JudgmentSet]) -> String {
    let parts: Vec<String> = sets.iter().map(|s| p.agenda().show(s)).collect();
    format!("{{{}}}", parts.join(", "))
}

fn judgment_name(p: &Profile, j: SignedJudgment) -> String {
    p.agenda().judgment_formula(j).to_string()
}

fn in_all(sets: &[JudgmentSet], j: SignedJudgment) -> bool {
    sets.iter().all(|s| s.contains(j))
}

fn judgments_on(issues: impl IntoIterator<Item = usize>) -> impl Iterator<Item = SignedJudgment> {
    issues.into_iter().flat_map(|i| [SignedJudgment::accept(i), SignedJudgment::reject(i)])
}

pub(crate) fn majority_preservation(rule: &Rule, p: &Profile) -> Result<Check> {
    let (m, ok) = p.majoritarian_set();
    if !ok {
        return Ok(Check::vacuous("the majority set is inconsistent"));
    }
    let expected = p.agenda().ext(&m)?;
    let got = run(rule, p)?;
    Ok(Check::verdict(
        got.sets == expected,
        "outcome equals the extensions of the majority set",
        format!("outcome {} differs from ext(m(P)) = {}", show_all(p, &got.sets), show_all(p, &expected)),
    ))
}

pub(crate) fn unanimity(rule: &Rule, p: &Profile, strong: bool) -> Result<Check> {
    let u = p.unanimity_set();
    if u.is_empty() || p.n() == 0 {
        return Ok(Check::vacuous("no unanimously supported judgment"));
    }
    let got = run(rule, p)?;
    for j in u.judgments() {
        let ok = if strong { in_all(&got.sets, j) } else { got.sets.iter().any(|s| s.contains(j)) };
        if !ok {
            let how = if strong { "some" } else { "every" };
            return Ok(Check::fail(format!(
                "unanimous judgment `{}` is missing from {how} outcome set of {}",
                judgment_name(p, j),
                show_all(p, &got.sets)
            )));
        }
    }
    Ok(Check::pass("unanimous judgments are kept"))
}

/// The judgment by which `stronger` strengthens `p`, if it is one.
pub fn strengthening(p: &Profile, stronger: &Profile) -> Option<SignedJudgment> {
    if p.agenda() != stronger.agenda() || p.n() != stronger.n() {
        return None;
    }
    let changed: Vec<usize> = (0..p.n()).filter(|&i| p.agents()[i] != stronger.agents()[i]).collect();
    let &[i] = changed.as_slice() else { return None };
    let (old, new) = (p.agents()[i], stronger.agents()[i]);
    let issues: Vec<usize> = (0..p.agenda().size()).filter(|&k| old.verdict(k) != new.verdict(k)).collect();
    let &[k] = issues.as_slice() else { return None };
    match (old.verdict(k), new.verdict(k)) {
        (Verdict::Reject, Verdict::Accept) => Some(SignedJudgment::accept(k)),
        (Verdict::Accept, Verdict::Reject) => Some(SignedJudgment::reject(k)),
        _ => None,
    }
}

pub(crate) fn monotonicity(rule: &Rule, p: &Profile, stronger: &Profile) -> Result<Check> {
    let phi = strengthening(p, stronger)
        .ok_or_else(|| Error::pre("the second profile is not a single-judgment strengthening of the first"))?;
    let name = judgment_name(p, phi);
    let before = run(rule, p)?;
    if !in_all(&before.sets, phi) {
        return Ok(Check::vacuous(format!("`{name}` is not in every outcome set before strengthening")));
    }
    let after = run(rule, stronger)?;
    Ok(Check::verdict(
        in_all(&after.sets, phi),
        format!("`{name}` stays in every outcome set"),
        format!("`{name}` drops out after strengthening: {}", show_all(p, &after.sets)),
    ))
}

/// Outcomes on the projection to `issues`, mapped back to full indices.
fn projected(rule: &Rule, p: &Profile, issues: &[usize]) -> Result<Vec<JudgmentSet>> {
    Ok(run(rule, &p.project(issues)?)?.sets.iter().map(|s| s.expand(issues)).collect())
}

fn unions(left: &[JudgmentSet], right: &[JudgmentSet]) -> Vec<JudgmentSet> {
    let all: BTreeSet<JudgmentSet> = left.iter().flat_map(|a| right.iter().filter_map(move |b| a.union(b))).collect();
    all.into_iter().collect()
}

pub(crate) fn agenda_separability(rule: &Rule, p: &Profile, a1: &[usize], a2: &[usize]) -> Result<Check> {
    if !check_independent_partition(p.agenda(), a1, a2)? {
        return Err(Error::pre("the parts are not an independent partition"));
    }
    let combined = unions(&projected(rule, p, a1)?, &projected(rule, p, a2)?);
    let got = run(rule, p)?;
    Ok(Check::verdict(
        got.sets == combined,
        "outcome equals the unions of the part outcomes",
        format!("outcome {} differs from the part unions {}", show_all(p, &got.sets), show_all(p, &combined)),
    ))
}

pub(crate) fn overlapping_separability(rule: &Rule, p: &Profile, a1: &[usize], a2: &[usize]) -> Result<Check> {
    if !check_iod(p.agenda(), a1, a2)? {
        return Err(Error::pre("the parts are not an independent overlapping decomposition"));
    }
    let (left, right) = (projected(rule, p, a1)?, projected(rule, p, a2)?);
    let (m1, m2) = (mask_of(a1), mask_of(a2));
    let agree = left.iter().all(|x| right.iter().all(|y| x.restrict(m2) == y.restrict(m1)));
    if !agree {
        return Ok(Check::vacuous("the part outcomes disagree on the overlap"));
    }
    let combined = unions(&left, &right);
    let got = run(rule, p)?;
    Ok(Check::verdict(
        got.sets == combined,
        "outcome equals the unions of the part outcomes",
        format!("outcome {} differs from the part unions {}", show_all(p, &got.sets), show_all(p, &combined)),
    ))
}

pub(crate) fn reinforcement(rule: &Rule, p1: &Profile, p2: &Profile) -> Result<Check> {
    let (f1, f2) = (run(rule, p1)?, run(rule, p2)?);
    let common: Vec<JudgmentSet> = f1.sets.iter().filter(|s| f2.contains(s)).copied().collect();
    if common.is_empty() {
        return Ok(Check::vacuous("the two outcomes share no set"));
    }
    let joint = run(rule, &p1.sum(p2)?)?;
    Ok(Check::verdict(
        joint.sets == common,
        "joint outcome is the intersection",
        format!("joint outcome {} differs from the intersection {}", show_all(p1, &joint.sets), show_all(p1, &common)),
    ))
}

pub(crate) fn homogeneity(rule: &Rule, p: &Profile, k: usize) -> Result<Check> {
    if k == 0 {
        return Err(Error::pre("homogeneity needs k >= 1"));
    }
    let (once, many) = (run(rule, p)?, run(rule, &p.repeat(k)?)?);
    Ok(Check::verdict(
        once.sets == many.sets,
        format!("outcome unchanged by {k} copies"),
        format!("{k} copies give {} instead of {}", show_all(p, &many.sets), show_all(p, &once.sets)),
    ))
}

pub(crate) fn anonymity(rule: &Rule, p: &Profile) -> Result<Check> {
    let n = p.n();
    let orders: Vec<Vec<usize>> = if n <= 6 {
        all_permutations(n).collect()
    } else {
        let mut v: Vec<Vec<usize>> = (0..n).map(|r| (0..n).map(|i| (i + r) % n).collect()).collect();
        v.push((0..n).rev().collect());
        v
    };
    let base = output_sets(rule, p)?;
    let mut seen = BTreeSet::new();
    for order in orders {
        let q = p.permuted(&order)?;
        if !seen.insert(q.agents().to_vec()) {
            continue;
        }
        let got = output_sets(rule, &q)?;
        if got != base {
            return Ok(Check::fail(format!("agent order {order:?} gives {}", show_all(p, &got))));
        }
    }
    Ok(Check::pass(format!("{} distinct agent orders agree", seen.len())))
}

fn check_subagenda(p: &Profile, sub: &[usize]) -> Result<()> {
    let distinct: BTreeSet<usize> = sub.iter().copied().collect();
    if sub.is_empty() || distinct.len() != sub.len() || sub.iter().any(|&i| i >= p.agenda().size()) {
        return Err(Error::pre("the sub-agenda must list distinct, valid issues"));
    }
    Ok(())
}

pub(crate) fn sen(rule: &Rule, p: &Profile, sub: &[usize], alpha: bool) -> Result<Check> {
    check_subagenda(p, sub)?;
    let full = run(rule, p)?.sets;
    let restricted = projected(rule, p, sub)?;
    if alpha {
        for phi in judgments_on(sub.iter().copied()) {
            if in_all(&full, phi) && !in_all(&restricted, phi) {
                return Ok(Check::fail(format!(
                    "`{}` is in every outcome set but not in every sub-agenda outcome set {}",
                    judgment_name(p, phi),
                    show_all(p, &restricted)
                )));
            }
        }
        return Ok(Check::pass("judgments kept everywhere survive the restriction"));
    }
    let shared: Vec<SignedJudgment> = judgments_on(sub.iter().copied()).filter(|&j| in_all(&restricted, j)).collect();
    for (a, &x) in shared.iter().enumerate() {
        for &y in &shared[a + 1..] {
            if let Some(s) = full.iter().find(|s| s.contains(x) != s.contains(y)) {
                return Ok(Check::fail(format!(
                    "`{}` and `{}` are together in every sub-agenda outcome but split in {}",
                    judgment_name(p, x),
                    judgment_name(p, y),
                    p.agenda().show(s)
                )));
            }
        }
    }
    Ok(Check::pass("judgments paired on the sub-agenda stay paired"))
}

fn resolute(rule: &Rule, p: &Profile) -> Result<Option<JudgmentSet>> {
    let o = run(rule, p)?;
    Ok(o.is_resolute().then(|| o.sets[0]))
}

const NOT_RESOLUTE: &str = "the outcome is not resolute on this instance";

pub(crate) fn unanimity_preservation(rule: &Rule, p: &Profile) -> Result<Check> {
    let Some(j) = resolute(rule, p)? else { return Ok(Check::vacuous(NOT_RESOLUTE)) };
    let u = p.unanimity_set();
    Ok(Check::verdict(
        p.n() == 0 || u.is_subset(&j),
        "the collective set keeps every unanimous judgment",
        format!("{} drops a unanimous judgment of {}", p.agenda().show(&j), p.agenda().show(&u)),
    ))
}

pub(crate) fn independence(rule: &Rule, p1: &Profile, p2: &Profile) -> Result<Check> {
    if p1.agenda() != p2.agenda() || p1.n() != p2.n() {
        return Err(Error::pre("independence compares profiles with the same agenda and number of agents"));
    }
    let (Some(j1), Some(j2)) = (resolute(rule, p1)?, resolute(rule, p2)?) else {
        return Ok(Check::vacuous(NOT_RESOLUTE));
    };
    let agreeing: Vec<usize> = (0..p1.agenda().size())
        .filter(|&i| p1.agents().iter().zip(p2.agents()).all(|(a, b)| a.verdict(i) == b.verdict(i)))
        .collect();
    if agreeing.is_empty() {
        return Ok(Check::vacuous("the profiles agree on no issue"));
    }
    match agreeing.iter().find(|&&i| j1.verdict(i) != j2.verdict(i)) {
        Some(&i) => Ok(Check::fail(format!(
            "both profiles agree on `{}` but the collective verdicts differ",
            p1.agenda().pre_agenda()[i]
        ))),
        None => Ok(Check::pass("issues with identical individual verdicts get identical collective verdicts")),
    }
}

/// `negative` checks the mirrored pattern (accepting one issue iff
/// rejecting the other).
pub(crate) fn neutrality(rule: &Rule, p: &Profile, negative: bool) -> Result<Check> {
    let Some(j) = resolute(rule, p)? else { return Ok(Check::vacuous(NOT_RESOLUTE)) };
    let m = p.agenda().size();
    let acc = |s: &JudgmentSet, i: usize| s.verdict(i) == Verdict::Accept;
    let mut patterned = 0;
    for a in 0..m {
        for b in a + 1..m {
            if !p.agents().iter().all(|s| (acc(s, a) == acc(s, b)) != negative) {
                continue;
            }
            patterned += 1;
            if (acc(&j, a) == acc(&j, b)) == negative {
                let pre = p.agenda().pre_agenda();
                return Ok(Check::fail(format!(
                    "`{}` and `{}` share an individual pattern the collective set {} breaks",
                    pre[a],
                    pre[b],
                    p.agenda().show(&j)
                )));
            }
        }
    }
    if patterned == 0 {
        return Ok(Check::vacuous("no pair of issues shows the pattern"));
    }
    Ok(Check::pass("patterned issue pairs are treated alike"))
}

pub(crate) fn neutral_monotonicity(rule: &Rule, p: &Profile) -> Result<Check> {
    let Some(j) = resolute(rule, p)? else { return Ok(Check::vacuous(NOT_RESOLUTE)) };
    let all: Vec<(SignedJudgment, usize)> =
        judgments_on(0..p.agenda().size()).map(|x| (x, p.support(x.issue, x.accept).unwrap_or(0))).collect();
    for &(phi, np) in &all {
        if !j.contains(phi) {
            continue;
        }
        if let Some(&(psi, _)) = all.iter().find(|&&(psi, ns)| np < ns && !j.contains(psi)) {
            return Ok(Check::fail(format!(
                "`{}` is accepted while better supported `{}` is not",
                judgment_name(p, phi),
                judgment_name(p, psi)
            )));
        }
    }
    Ok(Check::pass("accepted judgments are never outranked by rejected ones"))
}

pub(crate) fn set_monotonicity(rule: &Rule, p: &Profile) -> Result<Check> {
    let Some(j) = resolute(rule, p)? else { return Ok(Check::vacuous(NOT_RESOLUTE)) };
    for i in 0..p.n() {
        if p.agents()[i] == j {
            continue;
        }
        let mut agents = p.agents().to_vec();
        agents[i] = j;
        let q = Profile::open(p.agenda().clone(), agents)?;
        let got = run(rule, &q)?;
        if got.sets != [j] {
            return Ok(Check::fail(format!(
                "agent {i} adopting {} changes the outcome to {}",
                p.agenda().show(&j),
                show_all(p, &got.sets)
            )));
        }
    }
    Ok(Check::pass("agents adopting the collective set keep it"))
}

/// Multisets of `size` elements drawn from `pool`, as sorted index lists.
pub(crate) fn multisets(pool: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(pool: usize, size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for k in start..pool {
            cur.push(k);
            go(pool, size, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(pool, size, 0, &mut Vec::with_capacity(size), &mut out);
    out
}

/// Every rational set is the sole outcome of some profile with at most
/// `max_agents` agents.
pub(crate) fn responsiveness(rule: &Rule, p: &Profile, max_agents: usize) -> Result<Check> {
    let agenda = p.agenda();
    let codomain = agenda.codomain();
    let mut missing: BTreeSet<JudgmentSet> = codomain.iter().copied().collect();
    'sizes: for n in 1..=max_agents {
        for idx in multisets(codomain.len(), n) {
            let q = Profile::new(agenda.clone(), idx.iter().map(|&k| codomain[k]).collect())?;
            if let Some(j) = resolute(rule, &q)? {
                missing.remove(&j);
                if missing.is_empty() {
                    break 'sizes;
                }
            }
        }
    }
    let missing: Vec<JudgmentSet> = missing.into_iter().collect();
    Ok(Check::verdict(
        missing.is_empty(),
        format!("every rational set is reachable with at most {max_agents} agents"),
        format!("no profile with at most {max_agents} agents yields exactly {}", show_all(p, &missing)),
    ))
}
