//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_RED` fail for reasons recorded with them; the
//! run succeeds only if exactly those fail.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::Instant;

use ja_core::agenda::Verdict;
use ja_core::aggregators::*;
use ja_core::metrics::{build_agenda_graph, d_geodesic, d_hamming, score_reversal, Distance, Norm};
use ja_core::preference::*;
use ja_core::properties::{catalog, check, compare_rules, search_counterexample, Bounds, Instance, Property, Relation};
use ja_core::{samples, JudgmentSet, Profile, SignedJudgment};
use rand::seq::SliceRandom;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (u8, &'static str, fn() -> Outcome);

const KNOWN_RED: &[(u8, &str)] = &[
    (6, "one printed reversal score contradicts the definition"),
    (10, "a Condorcet winner and majority consistency are not equivalent on this domain"),
];

fn js(signs: &[i8]) -> JudgmentSet {
    JudgmentSet::from_signs(signs).unwrap()
}

fn sets(rows: &[&[i8]]) -> Vec<JudgmentSet> {
    let mut v: Vec<JudgmentSet> = rows.iter().map(|r| js(r)).collect();
    v.sort();
    v
}

fn rule(spec: &str) -> Rule {
    spec.parse().unwrap()
}

/// Collects failed claims instead of stopping at the first.
#[derive(Default)]
struct Claims(Vec<String>);

impl Claims {
    fn expect(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.0.push(what.into());
        }
    }

    fn done(self, summary: impl Into<String>) -> Outcome {
        if self.0.is_empty() {
            Ok(summary.into())
        } else {
            Err(format!("{}; every other claim holds", self.0.join("; ")))
        }
    }
}

fn doctrinal_paradox() -> Outcome {
    let p = samples::doctrinal_paradox();
    let mut c = Claims::default();
    let m = rule_majority(&p);
    c.expect(m.set == js(&[1, 1, -1]) && !m.consistent, "majority is not the inconsistent {p, q, !d}");
    c.expect(rule_pbp(&p, &[0, 1]).unwrap().sets == sets(&[&[1, 1, 1]]), "premise-based outcome");
    c.expect(rule_cbp(&p, &[2]).unwrap().set == js(&[0, 0, -1]), "conclusion-based outcome");
    c.done("majority {p, q, !d} inconsistent; premise-based {p, q, d}; conclusion-based {!d}")
}

fn running_example() -> Outcome {
    let p = samples::seventeen_agents();
    let mut c = Claims::default();
    let (m, consistent) = p.majoritarian_set();
    c.expect(!consistent, "majority is consistent");
    let maxcons = maximal_consistent_subsets(&p, &m);
    c.expect(maxcons == sets(&[&[1, 1, 1, 0, 1], &[1, 1, 0, -1, 1], &[0, 0, 1, -1, 1]]), "maximal consistent subsets");
    c.expect(
        rule_mc(&p).sets == sets(&[&[1, 1, 1, 1, 1], &[1, 1, -1, -1, 1], &[-1, -1, 1, -1, 1]]),
        "maximal-consistent outcome",
    );
    c.expect(rule_mcc(&p).sets == sets(&[&[1, 1, 1, 1, 1], &[1, 1, -1, -1, 1]]), "maximum-cardinality outcome");
    c.done("3 maximal consistent subsets, 3 MC sets, 2 MCC sets")
}

fn ranked_agenda() -> Outcome {
    let mut c = Claims::default();
    let p17 = samples::seventeen_agents();
    let p15 = samples::fifteen_agents();
    c.expect(rule_ra(&p17).sets == sets(&[&[-1, -1, 1, -1, 1]]), "ranked agenda on 17 agents");
    c.expect(
        rule_ra(&p15).sets == sets(&[&[1, 1, 1, 1, 1, 1], &[-1, 1, -1, 1, -1, 1], &[-1, -1, 1, -1, 1, 1]]),
        "ranked agenda on 15 agents",
    );
    c.expect(rule_leximax(&p15).sets == sets(&[&[1, 1, 1, 1, 1, 1]]), "leximax on 15 agents");
    c.done("RA on 17 agents resolute, RA on 15 agents 3 sets, leximax the all-accept set")
}

fn median_values() -> Outcome {
    let p = samples::seventeen_agents();
    let mut c = Claims::default();
    for (signs, value) in [([1, 1, 1, 1, 1], 49), ([-1, -1, 1, -1, 1], 48), ([1, 1, -1, -1, 1], 45)] {
        let got = med_value(&p, &js(&signs));
        c.expect(got == value, format!("value of {signs:?} is {got}, expected {value}"));
    }
    c.expect(rule_med(&p).sets == sets(&[&[1, 1, 1, 1, 1]]), "median outcome");
    c.done("values 49, 48, 45; MED = {all accepted}")
}

fn young() -> Outcome {
    let p = samples::seventeen_agents();
    let mut c = Claims::default();
    let (removed, _) = young_witnesses(&p);
    c.expect(removed == 3, format!("removal count {removed}"));
    c.expect(rule_young(&p).sets == sets(&[&[-1, -1, 1, -1, 1], &[-1, -1, 1, -1, -1]]), "Young outcome");
    c.done("3 agents removed; outcome = the two extensions of {q, !(p & q)}")
}

fn reversal_scores() -> Outcome {
    let p = samples::doctrinal_paradox();
    let a = p.agenda();
    // Rows as printed, columns p, !p, q, !q, d, !d.
    let printed: [([i8; 3], [u32; 6]); 4] = [
        ([1, 1, 1], [2, 0, 2, 0, 2, 0]),
        ([1, -1, -1], [1, 0, 0, 2, 0, 2]),
        ([-1, 1, -1], [0, 2, 1, 0, 0, 2]),
        ([-1, -1, -1], [0, 1, 0, 1, 0, 2]),
    ];
    let mut wrong = Vec::new();
    for (row, expected) in printed {
        let set = js(&row);
        let columns = (0..3).flat_map(|i| [SignedJudgment::accept(i), SignedJudgment::reject(i)]);
        for (j, want) in columns.zip(expected) {
            let got = score_reversal(j, &set, a).unwrap();
            if got != want {
                wrong.push(format!("{} under {}: printed {want}, computed {got}", a.judgment_formula(j), a.show(&set)));
            }
        }
    }
    if wrong.is_empty() {
        Ok("24 of 24 scores match".into())
    } else {
        Err(format!("{} of 24 match; {}", 24 - wrong.len(), wrong.join("; ")))
    }
}

fn extended_cbp() -> Outcome {
    let p = samples::doctrinal_paradox();
    let o = rule_extended_cbp(&p, &[2], Distance::Hamming, Norm::Sum).unwrap();
    let mut c = Claims::default();
    c.expect(o.sets == sets(&[&[-1, 1, -1], &[1, -1, -1]]), "extended conclusion-based outcome");
    c.done("{{!p, q, !d}, {p, !q, !d}}")
}

fn unanimity_contrast() -> Outcome {
    let p = samples::unanimity_contrast();
    let (ra, mcc, mc) = (rule_ra(&p), rule_mcc(&p), rule_mc(&p));
    let mut c = Claims::default();
    c.expect(ra.sets.iter().all(|s| s.verdict(0) == Verdict::Accept), "p missing from an RA set");
    c.expect(mcc.sets.iter().all(|s| s.verdict(0) != Verdict::Accept), "p in an MCC set");
    let union: BTreeSet<JudgmentSet> = ra.sets.iter().chain(&mcc.sets).copied().collect();
    c.expect(mc.sets == union.into_iter().collect::<Vec<_>>(), "MC differs from MCC plus RA");
    c.done(format!("p in all {} RA sets, in no MCC set; MC = MCC + RA", ra.sets.len()))
}

fn random_votes(seed: u64, count: usize) -> Vec<VoteProfile> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let m = rng.random_range(2..=4);
            let n = rng.random_range(1..=5);
            let options: Vec<String> = ["a", "b", "c", "d"][..m].iter().map(|s| s.to_string()).collect();
            let ballots = (0..n)
                .map(|_| {
                    let mut b = options.clone();
                    b.shuffle(&mut rng);
                    b
                })
                .collect();
            VoteProfile::new(options, ballots).unwrap()
        })
        .collect()
}

fn voting() -> Outcome {
    let mut c = Claims::default();
    let (o, b) = samples::condorcet_votes();
    let v1 = VoteProfile::from_strs(&o, &b).unwrap();
    let (o, b) = samples::cyclic_votes();
    let v2 = VoteProfile::from_strs(&o, &b).unwrap();
    c.expect(condorcet_winner(&v1).as_deref() == Some("d"), "Condorcet winner of V1");
    c.expect(condorcet_winner(&v2).is_none(), "V2 has a Condorcet winner");
    let scores: Vec<(String, usize)> = borda(&v1).0.into_iter().collect();
    let expected: Vec<(String, usize)> =
        [("a", 10), ("b", 5), ("c", 6), ("d", 9)].iter().map(|(k, v)| (k.to_string(), *v)).collect();
    c.expect(scores == expected, format!("Borda scores {scores:?}"));
    let reversal = rule("scoring:scoring=reversal");
    let mut agree = 0;
    let votes: Vec<VoteProfile> = std::iter::once(v1).chain(random_votes(2024, 50)).collect();
    for v in &votes {
        if vote_via_ja(v, &reversal, GammaMode::Tr).unwrap() == borda(v).1 {
            agree += 1;
        }
    }
    c.expect(agree == votes.len(), format!("reversal scoring matches Borda on {agree} of {}", votes.len()));
    c.done(format!("V1 winner d, V2 none, Borda 10/5/6/9, reversal = Borda on {agree} profiles"))
}

/// Every multiset of `size` indices below `k`, as non-decreasing sequences.
fn multisets(k: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, size: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in from..k {
            cur.push(i);
            go(k, size, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(k, size, 0, &mut Vec::new(), &mut out);
    out
}

fn permutations(options: &[String]) -> Vec<Vec<String>> {
    if options.len() <= 1 {
        return vec![options.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..options.len() {
        let mut rest = options.to_vec();
        let first = rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, first.clone());
            out.push(tail);
        }
    }
    out
}

/// Vote profiles with 2..=4 options and 1..=5 ballots where a Condorcet
/// winner exists without majority consistency, or the reverse.
fn condorcet_mismatches() -> (usize, usize, usize) {
    let (mut total, mut consistent_no_winner, mut winner_inconsistent) = (0, 0, 0);
    for m in 2..=4 {
        let options: Vec<String> = ["a", "b", "c", "d"][..m].iter().map(|s| s.to_string()).collect();
        let agenda = preference_agenda(&options, GammaMode::Tr).unwrap();
        let rankings = permutations(&options);
        let translated: Vec<JudgmentSet> = rankings
            .iter()
            .map(|r| {
                let v = VoteProfile::new(options.clone(), vec![r.clone()]).unwrap();
                votes_to_profile(&v, GammaMode::Tr).unwrap().agents()[0]
            })
            .collect();
        for n in 1..=5 {
            for pick in multisets(rankings.len(), n) {
                let v = VoteProfile::new(options.clone(), pick.iter().map(|&i| rankings[i].clone()).collect()).unwrap();
                let p = Profile::open(agenda.clone(), pick.iter().map(|&i| translated[i]).collect()).unwrap();
                let consistent = p.majoritarian_set().1;
                let winner = condorcet_winner(&v).is_some();
                total += 1;
                consistent_no_winner += usize::from(consistent && !winner);
                winner_inconsistent += usize::from(winner && !consistent);
            }
        }
    }
    (total, consistent_no_winner, winner_inconsistent)
}

fn property_suites() -> Outcome {
    let bounds = Bounds::default();
    let mut c = Claims::default();
    let mut checked = 0;

    let refines = |a: &str, b: &str| compare_rules(&rule(a), &rule(b), &bounds, &[]).unwrap();
    for (a, b) in [("mcc", "mc"), ("leximax", "ra"), ("ra", "mc"), ("med", "mc")] {
        let cmp = refines(a, b);
        checked += cmp.instances_checked;
        c.expect(matches!(cmp.relation, Relation::Refines | Relation::Equal), format!("{a} is {} {b}", cmp.relation));
    }
    for (a, b) in [("scoring:scoring=simple", "med"), ("med", "dist:distance=hamming:norm=sum")] {
        let cmp = refines(a, b);
        checked += cmp.instances_checked;
        c.expect(cmp.relation == Relation::Equal, format!("{a} is {} {b}", cmp.relation));
    }

    for r in ["mc", "mcc", "ra", "leximax", "med", "young"] {
        let v = search_counterexample(&rule(r), Property::MajorityPreservation, &bounds, &[]).unwrap();
        checked += v.instances_checked;
        c.expect(v.holds_on_instance, format!("{r} majority preservation: {}", v.detail));
    }

    let mut metric_pairs = 0;
    for a in catalog(&bounds) {
        let g = build_agenda_graph(&a);
        let cod = a.codomain();
        for x in cod {
            for y in cod {
                let h = d_hamming(&a, x, y).unwrap();
                let geo = d_geodesic(x, y, &g).unwrap();
                metric_pairs += 1;
                let symmetric = h == d_hamming(&a, y, x).unwrap() && geo == d_geodesic(y, x, &g).unwrap();
                let identity = (h == 0) == (x == y) && (geo == 0) == (x == y);
                let triangle = cod.iter().all(|z| {
                    h <= d_hamming(&a, x, z).unwrap() + d_hamming(&a, z, y).unwrap()
                        && geo <= d_geodesic(x, z, &g).unwrap() + d_geodesic(z, y, &g).unwrap()
                });
                c.expect(geo <= h && symmetric && identity && triangle, format!("metric axioms on {}", a.show(x)));
            }
        }
    }

    let general = [
        "majority",
        "unanimity",
        "quota:k=2",
        "mc",
        "mcc",
        "ra",
        "leximax",
        "med",
        "young",
        "dist:distance=hamming:norm=sum",
        "dist:distance=hamming:norm=max",
        "dist:distance=geodesic:norm=sum",
        "scoring:scoring=simple",
        "scoring:scoring=reversal",
        "full",
        "mrv",
    ];
    for r in general {
        let v = search_counterexample(&rule(r), Property::Anonymity, &bounds, &[]).unwrap();
        checked += v.instances_checked;
        c.expect(v.holds_on_instance, format!("{r} anonymity: {}", v.detail));
    }
    let dp = Instance::new(samples::doctrinal_paradox());
    for r in ["pbp:premises=0,1", "cbp:conclusions=2", "ecbp:conclusions=2"] {
        c.expect(check(&rule(r), Property::Anonymity, &dp).unwrap().holds_on_instance, format!("{r} anonymity"));
    }

    let split = Instance::new(samples::seventeen_agents()).with_parts(vec![0, 1, 2, 3], vec![4]);
    let y = check(&rule("young"), Property::AgendaSeparability, &split).unwrap();
    c.expect(!y.holds_on_instance, "Young is separable on the 17-agent partition");

    let (total, consistent_no_winner, winner_inconsistent) = condorcet_mismatches();
    c.expect(
        consistent_no_winner + winner_inconsistent == 0,
        format!(
            "Condorcet winner vs majority consistency over {total} vote profiles: \
             {consistent_no_winner} consistent without a winner, {winner_inconsistent} with a winner but inconsistent"
        ),
    );
    c.done(format!("{checked} search instances, {metric_pairs} metric pairs, {total} vote profiles, no violation"))
}

fn determinism() -> Outcome {
    let mut c = Claims::default();
    for (name, args) in common::CASES {
        let golden = std::fs::read(common::golden_path(name, args)).unwrap_or_default();
        let runs: Vec<Vec<u8>> =
            [Some(1), Some(1), Some(8), Some(8)].into_iter().map(|t| common::ja_with_threads(args, t).stdout).collect();
        c.expect(runs.iter().all(|r| *r == golden), format!("{name} is not byte-identical"));
    }
    c.done(format!("{} golden cases, 2 runs each at 1 and 8 threads", common::CASES.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        (1, "doctrinal paradox", doctrinal_paradox),
        (2, "running example: consistent subsets, MC, MCC", running_example),
        (3, "ranked agenda and leximax", ranked_agenda),
        (4, "median values", median_values),
        (5, "Young", young),
        (6, "reversal scores on the doctrinal agenda", reversal_scores),
        (7, "extended conclusion-based procedure", extended_cbp),
        (8, "unanimity contrast", unanimity_contrast),
        (9, "voting bridge", voting),
        (10, "bounded property suites", property_suites),
        (11, "CLI determinism", determinism),
    ];
    let mut unexpected = Vec::new();
    for (id, name, run) in criteria {
        let started = Instant::now();
        let outcome = run();
        let secs = started.elapsed().as_secs_f64();
        let known = KNOWN_RED.iter().find(|(k, _)| *k == id).map(|(_, why)| *why);
        match (&outcome, known) {
            (Ok(detail), None) => println!("PASS {id:>2} {name} ({secs:.1}s): {detail}"),
            (Err(detail), Some(why)) => println!("FAIL {id:>2} {name} ({secs:.1}s) [known red: {why}]: {detail}"),
            (Err(detail), None) => {
                println!("FAIL {id:>2} {name} ({secs:.1}s): {detail}");
                unexpected.push(id);
            }
            (Ok(detail), Some(_)) => {
                println!("PASS {id:>2} {name} ({secs:.1}s) [listed as known red]: {detail}");
                unexpected.push(id);
            }
        }
    }
    if unexpected.is_empty() {
        println!("acceptance: all criteria as expected ({} known red)", KNOWN_RED.len());
        ExitCode::SUCCESS
    } else {
        println!("acceptance: unexpected results for criteria {unexpected:?}");
        ExitCode::FAILURE
    }
}
