use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Mask with the low `m` bits set.
pub fn full_mask(m: usize) -> u64 {
    if m >= 64 {
        u64::MAX
    } else {
        (1u64 << m) - 1
    }
}

pub(crate) fn mask_of(issues: &[usize]) -> u64 {
    issues.iter().fold(0, |acc, &i| acc | 1 << i)
}

pub(crate) fn issues_of(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}

/// An issue index together with a sign: `accept` selects the pre-agenda
/// formula, otherwise its negation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct SignedJudgment {
    pub issue: usize,
    pub accept: bool,
}

impl SignedJudgment {
    pub fn accept(issue: usize) -> Self {
        SignedJudgment { issue, accept: true }
    }

    pub fn reject(issue: usize) -> Self {
        SignedJudgment { issue, accept: false }
    }

    pub fn negate(self) -> Self {
        SignedJudgment { issue: self.issue, accept: !self.accept }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Accept,
    Reject,
    Absent,
}

/// Per-issue verdicts packed as two disjoint bit masks (bit `i` is issue `i`).
///
/// The ordering is canonical: sets compare as sign vectors read as binary
/// numbers with the first issue most significant and accept = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct JudgmentSet {
    accept: u64,
    reject: u64,
}

impl JudgmentSet {
    pub const EMPTY: JudgmentSet = JudgmentSet { accept: 0, reject: 0 };

    pub fn from_masks(accept: u64, reject: u64) -> Result<Self> {
        if accept & reject != 0 {
            return Err(Error::input("an issue cannot be both accepted and rejected"));
        }
        Ok(JudgmentSet { accept, reject })
    }

    pub(crate) fn raw(accept: u64, reject: u64) -> Self {
        debug_assert_eq!(accept & reject, 0);
        JudgmentSet { accept, reject }
    }

    /// Complete set over `m` issues accepting exactly `accept`.
    pub fn complete(m: usize, accept: u64) -> Self {
        let full = full_mask(m);
        JudgmentSet { accept: accept & full, reject: full & !accept }
    }

    /// From +1 / -1 / 0 entries.
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        if signs.len() > 64 {
            return Err(Error::input("at most 64 issues are supported"));
        }
        let mut set = JudgmentSet::EMPTY;
        for (i, &s) in signs.iter().enumerate() {
            match s {
                1 => set.accept |= 1 << i,
                -1 => set.reject |= 1 << i,
                0 => {}
                other => return Err(Error::input(format!("verdict {other} is not one of +1, -1, 0"))),
            }
        }
        Ok(set)
    }

    pub fn from_judgments(js: impl IntoIterator<Item = SignedJudgment>) -> Result<Self> {
        let mut set = JudgmentSet::EMPTY;
        for j in js {
            if set.verdict(j.issue) != Verdict::Absent && !set.contains(j) {
                return Err(Error::input(format!("issue {} judged both ways", j.issue)));
            }
            set.insert(j);
        }
        Ok(set)
    }

    pub fn signs(&self, m: usize) -> Vec<i8> {
        (0..m)
            .map(|i| match self.verdict(i) {
                Verdict::Accept => 1,
                Verdict::Reject => -1,
                Verdict::Absent => 0,
            })
            .collect()
    }

    pub fn accepted(&self) -> u64 {
        self.accept
    }

    pub fn rejected(&self) -> u64 {
        self.reject
    }

    /// Issues carrying a verdict.
    pub fn defined(&self) -> u64 {
        self.accept | self.reject
    }

    pub fn verdict(&self, issue: usize) -> Verdict {
        if self.accept >> issue & 1 == 1 {
            Verdict::Accept
        } else if self.reject >> issue & 1 == 1 {
            Verdict::Reject
        } else {
            Verdict::Absent
        }
    }

    pub fn contains(&self, j: SignedJudgment) -> bool {
        let mask = if j.accept { self.accept } else { self.reject };
        mask >> j.issue & 1 == 1
    }

    /// Sets the verdict for `j.issue`, replacing any previous one.
    pub fn insert(&mut self, j: SignedJudgment) {
        let bit = 1u64 << j.issue;
        if j.accept {
            self.accept |= bit;
            self.reject &= !bit;
        } else {
            self.reject |= bit;
            self.accept &= !bit;
        }
    }

    pub fn with(mut self, j: SignedJudgment) -> Self {
        self.insert(j);
        self
    }

    pub fn judgments(&self) -> impl Iterator<Item = SignedJudgment> + '_ {
        (0..64).filter_map(move |i| match self.verdict(i) {
            Verdict::Accept => Some(SignedJudgment::accept(i)),
            Verdict::Reject => Some(SignedJudgment::reject(i)),
            Verdict::Absent => None,
        })
    }

    pub fn len(&self) -> usize {
        self.defined().count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.defined() == 0
    }

    pub fn is_complete(&self, m: usize) -> bool {
        self.defined() == full_mask(m)
    }

    pub fn is_subset(&self, other: &JudgmentSet) -> bool {
        self.accept & !other.accept == 0 && self.reject & !other.reject == 0
    }

    /// True when no issue is judged oppositely by the two sets.
    pub fn compatible(&self, other: &JudgmentSet) -> bool {
        self.accept & other.reject == 0 && self.reject & other.accept == 0
    }

    pub fn union(&self, other: &JudgmentSet) -> Option<JudgmentSet> {
        self.compatible(other)
            .then_some(JudgmentSet { accept: self.accept | other.accept, reject: self.reject | other.reject })
    }

    pub fn intersection(&self, other: &JudgmentSet) -> JudgmentSet {
        JudgmentSet { accept: self.accept & other.accept, reject: self.reject & other.reject }
    }

    /// Keeps only the verdicts on issues in `mask`.
    pub fn restrict(&self, mask: u64) -> JudgmentSet {
        JudgmentSet { accept: self.accept & mask, reject: self.reject & mask }
    }

    /// Number of issues judged oppositely.
    pub(crate) fn conflicts(&self, other: &JudgmentSet) -> u32 {
        ((self.accept & other.reject) | (self.reject & other.accept)).count_ones()
    }

    /// Reindexes verdicts: issue `issues[k]` of `self` becomes issue `k`.
    pub(crate) fn compress(&self, issues: &[usize]) -> JudgmentSet {
        let mut out = JudgmentSet::EMPTY;
        for (k, &i) in issues.iter().enumerate() {
            match self.verdict(i) {
                Verdict::Accept => out.accept |= 1 << k,
                Verdict::Reject => out.reject |= 1 << k,
                Verdict::Absent => {}
            }
        }
        out
    }

    /// Inverse of [`compress`](Self::compress).
    pub(crate) fn expand(&self, issues: &[usize]) -> JudgmentSet {
        let mut out = JudgmentSet::EMPTY;
        for (k, &i) in issues.iter().enumerate() {
            match self.verdict(k) {
                Verdict::Accept => out.accept |= 1 << i,
                Verdict::Reject => out.reject |= 1 << i,
                Verdict::Absent => {}
            }
        }
        out
    }
}

impl Ord for JudgmentSet {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.accept.reverse_bits(), self.reject.reverse_bits())
            .cmp(&(other.accept.reverse_bits(), other.reject.reverse_bits()))
    }
}

impl PartialOrd for JudgmentSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
