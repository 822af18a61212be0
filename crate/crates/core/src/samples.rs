//! Worked example profiles from the judgment-aggregation literature.

use crate::agenda::{Agenda, Profile};

fn build(pre: &[&str], gamma: &[&str], groups: &[(usize, &[i8])]) -> Profile {
    let agenda = Agenda::parse(pre, gamma).expect("sample agenda is valid");
    let rows: Vec<Vec<i8>> = groups.iter().flat_map(|(k, row)| std::iter::repeat_n(row.to_vec(), *k)).collect();
    Profile::from_signs(agenda, &rows).expect("sample profile is valid")
}

/// Premises p, q and conclusion d with d ↔ (p ∧ q); three judges.
pub fn doctrinal_paradox() -> Profile {
    build(&["p", "q", "d"], &["(p & q) <-> d"], &[(1, &[1, 1, 1]), (1, &[1, -1, -1]), (1, &[-1, 1, -1])])
}

/// Seventeen agents over p∧r, p∧s, q, p∧q, t; the majority is inconsistent
/// and the rules disagree.
pub fn seventeen_agents() -> Profile {
    build(
        &["p & r", "p & s", "q", "p & q", "t"],
        &["true"],
        &[(6, &[1, 1, 1, 1, 1]), (4, &[1, 1, -1, -1, 1]), (7, &[-1, -1, 1, -1, -1])],
    )
}

/// Fifteen agents over p∧q, p, q, p∧r, q∧r, s separating the ranked rules.
pub fn fifteen_agents() -> Profile {
    build(
        &["p & q", "p", "q", "p & r", "q & r", "s"],
        &["true"],
        &[
            (5, &[-1, 1, -1, 1, -1, 1]),
            (5, &[-1, -1, 1, -1, 1, -1]),
            (4, &[1, 1, 1, 1, 1, 1]),
            (1, &[1, 1, 1, -1, -1, -1]),
        ],
    )
}

/// Three agents who unanimously accept p while majority-based rules can
/// drop it.
pub fn unanimity_contrast() -> Profile {
    build(
        &["p", "p -> (q | r)", "q", "r", "p -> (s | t)", "s", "t", "p -> (u | v)", "u", "v"],
        &["true"],
        &[
            (1, &[1, 1, 1, -1, 1, 1, -1, 1, 1, -1]),
            (1, &[1, 1, -1, 1, 1, -1, 1, 1, -1, 1]),
            (1, &[1, -1, -1, -1, -1, -1, -1, -1, -1, -1]),
        ],
    )
}

/// Beer or cider, pizza or kebab: two independent exclusive choices.
pub fn party_goers() -> Profile {
    build(
        &["b", "c", "p", "k"],
        &["b xor c", "k xor p"],
        &[(11, &[1, -1, 1, -1]), (10, &[-1, 1, -1, 1]), (2, &[1, -1, -1, 1])],
    )
}

/// Options and ballots (best first) with a Condorcet winner that is not the
/// Borda winner.
pub fn condorcet_votes() -> (Vec<&'static str>, Vec<Vec<&'static str>>) {
    (
        vec!["a", "b", "c", "d"],
        vec![
            vec!["a", "c", "d", "b"],
            vec!["b", "c", "d", "a"],
            vec!["d", "a", "c", "b"],
            vec!["a", "b", "d", "c"],
            vec!["d", "a", "c", "b"],
        ],
    )
}

/// A three-ballot majority cycle.
pub fn cyclic_votes() -> (Vec<&'static str>, Vec<Vec<&'static str>>) {
    (vec!["a", "b", "c"], vec![vec!["a", "b", "c"], vec!["b", "c", "a"], vec!["c", "a", "b"]])
}
