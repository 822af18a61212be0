//! Distances between judgment sets, norms, profile distances and scoring
//! functions.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::agenda::{Agenda, JudgmentSet, Profile, SignedJudgment};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Distance {
    Drastic,
    Hamming,
    Geodesic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Norm {
    Sum,
    Max,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scoring {
    Simple,
    Reversal,
}

macro_rules! named {
    ($ty:ty, $($variant:ident => $name:literal),+) => {
        impl FromStr for $ty {
            type Err = Error;
            fn from_str(s: &str) -> Result<Self> {
                match s {
                    $($name => Ok(<$ty>::$variant),)+
                    _ => Err(Error::input(format!(
                        concat!("unknown ", stringify!($ty), " `{}` (expected one of: ", $($name, " ",)+ ")"),
                        s
                    ))),
                }
            }
        }
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(match self { $(<$ty>::$variant => $name,)+ })
            }
        }
    };
}

named!(Distance, Drastic => "drastic", Hamming => "hamming", Geodesic => "geodesic");
named!(Norm, Sum => "sum", Max => "max");
named!(Scoring, Simple => "simple", Reversal => "reversal");

impl Norm {
    pub fn apply(self, values: &[u64]) -> u64 {
        match self {
            Norm::Sum => values.iter().sum(),
            Norm::Max => values.iter().copied().max().unwrap_or(0),
        }
    }
}

pub fn d_drastic(a: &JudgmentSet, b: &JudgmentSet) -> u32 {
    u32::from(a != b)
}

/// Number of issues judged oppositely; both sets must be complete.
pub fn d_hamming(agenda: &Agenda, a: &JudgmentSet, b: &JudgmentSet) -> Result<u32> {
    let m = agenda.size();
    if !a.is_complete(m) || !b.is_complete(m) {
        return Err(Error::pre("Hamming distance needs complete judgment sets"));
    }
    Ok(a.conflicts(b))
}

/// The codomain with an edge between two sets when no third set lies
/// between them.
#[derive(Debug, Clone)]
pub struct AgendaGraph {
    vertices: Vec<JudgmentSet>,
    adjacency: Vec<Vec<usize>>,
    distances: Vec<Vec<Option<u32>>>,
}

/// `mid` lies between `a` and `b`: it keeps every judgment they share.
pub fn is_between(a: &JudgmentSet, mid: &JudgmentSet, b: &JudgmentSet) -> bool {
    a.intersection(b).is_subset(mid)
}

pub fn build_agenda_graph(agenda: &Agenda) -> AgendaGraph {
    let vertices = agenda.codomain().to_vec();
    let k = vertices.len();
    let mut adjacency = vec![Vec::new(); k];
    for i in 0..k {
        for j in i + 1..k {
            let blocked = (0..k).any(|l| l != i && l != j && is_between(&vertices[i], &vertices[l], &vertices[j]));
            if !blocked {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
    }
    let distances = (0..k)
        .map(|s| {
            let mut dist = vec![None; k];
            dist[s] = Some(0);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let du = dist[u].unwrap_or(0);
                for &v in &adjacency[u] {
                    if dist[v].is_none() {
                        dist[v] = Some(du + 1);
                        queue.push_back(v);
                    }
                }
            }
            dist
        })
        .collect();
    AgendaGraph { vertices, adjacency, distances }
}

impl AgendaGraph {
    pub fn vertices(&self) -> &[JudgmentSet] {
        &self.vertices
    }

    /// Undirected edges as index pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, adj) in self.adjacency.iter().enumerate() {
            out.extend(adj.iter().filter(|&&j| j > i).map(|&j| (i, j)));
        }
        out
    }

    fn index(&self, j: &JudgmentSet) -> Result<usize> {
        self.vertices.binary_search(j).map_err(|_| Error::pre("geodesic distance needs rational judgment sets"))
    }

    pub fn is_connected(&self) -> bool {
        self.distances.first().is_none_or(|row| row.iter().all(Option::is_some))
    }
}

/// Shortest-path length in the agenda graph.
pub fn d_geodesic(a: &JudgmentSet, b: &JudgmentSet, graph: &AgendaGraph) -> Result<u32> {
    let (i, j) = (graph.index(a)?, graph.index(b)?);
    graph.distances[i][j]
        .ok_or_else(|| Error::pre("the two judgment sets are in different components of the agenda graph"))
}

/// A distance prepared for one agenda.
pub(crate) enum Metric {
    Drastic,
    Hamming(usize),
    Geodesic(AgendaGraph),
}

impl Metric {
    pub fn new(agenda: &Agenda, d: Distance) -> Metric {
        match d {
            Distance::Drastic => Metric::Drastic,
            Distance::Hamming => Metric::Hamming(agenda.size()),
            Distance::Geodesic => Metric::Geodesic(build_agenda_graph(agenda)),
        }
    }

    pub fn between(&self, a: &JudgmentSet, b: &JudgmentSet) -> Result<u32> {
        match self {
            Metric::Drastic => Ok(d_drastic(a, b)),
            Metric::Hamming(m) => {
                if !a.is_complete(*m) || !b.is_complete(*m) {
                    return Err(Error::pre("Hamming distance needs complete judgment sets"));
                }
                Ok(a.conflicts(b))
            }
            Metric::Geodesic(g) => d_geodesic(a, b, g),
        }
    }
}

pub fn profile_distance(p1: &Profile, p2: &Profile, d: Distance, norm: Norm) -> Result<f64> {
    if p1.agenda() != p2.agenda() {
        return Err(Error::input("profiles are over different agendas"));
    }
    if p1.n() != p2.n() {
        return Err(Error::input(format!("profiles have {} and {} agents", p1.n(), p2.n())));
    }
    let metric = Metric::new(p1.agenda(), d);
    let v = p1
        .agents()
        .iter()
        .zip(p2.agents())
        .map(|(a, b)| metric.between(a, b).map(u64::from))
        .collect::<Result<Vec<_>>>()?;
    Ok(norm.apply(&v) as f64)
}

pub fn score_simple(j: SignedJudgment, set: &JudgmentSet) -> u32 {
    u32::from(set.contains(j))
}

/// Fewest issues on which `set` must change once `j` is reversed; zero when
/// `j` is not in `set`.
pub fn score_reversal(j: SignedJudgment, set: &JudgmentSet, agenda: &Agenda) -> Result<u32> {
    agenda.check_issue(j.issue)?;
    if !agenda.is_rational(set) {
        return Err(Error::pre("reversal scores are defined for rational judgment sets"));
    }
    if !set.contains(j) {
        return Ok(0);
    }
    let flipped = j.negate();
    agenda
        .codomain()
        .iter()
        .filter(|c| c.contains(flipped))
        .map(|c| set.conflicts(c))
        .min()
        .ok_or_else(|| Error::pre("the reversed judgment occurs in no rational judgment set"))
}

/// Summed scores of the judgments `agent` shares with `candidate`.
pub fn similarity(scoring: Scoring, agent: &JudgmentSet, candidate: &JudgmentSet, agenda: &Agenda) -> Result<u32> {
    agent
        .intersection(candidate)
        .judgments()
        .map(|j| match scoring {
            Scoring::Simple => Ok(score_simple(j, agent)),
            Scoring::Reversal => score_reversal(j, agent, agenda),
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn js(s: &[i8]) -> JudgmentSet {
        JudgmentSet::from_signs(s).unwrap()
    }

    fn dp() -> Agenda {
        Agenda::parse(&["p", "q", "d"], &["(p & q) <-> d"]).unwrap()
    }

    fn p17() -> Agenda {
        Agenda::parse(&["p & r", "p & s", "q", "p & q", "t"], &[]).unwrap()
    }

    #[test]
    fn hamming_examples() {
        let a = p17();
        let x = js(&[1, -1, -1, -1, 1]);
        let y = js(&[-1, 1, -1, -1, -1]);
        assert_eq!(d_hamming(&a, &x, &y).unwrap(), 3);
        assert_eq!(d_hamming(&a, &x, &x).unwrap(), 0);
        let all = js(&[1, 1, 1, 1, 1]);
        let none = js(&[-1, -1, -1, -1, -1]);
        assert_eq!(d_hamming(&a, &all, &none).unwrap(), 5);
        assert!(d_hamming(&a, &js(&[1, 0, 0, 0, 0]), &x).is_err());
    }

    #[test]
    fn drastic_examples() {
        assert_eq!(d_drastic(&js(&[1, 1, 1]), &js(&[1, 1, 1])), 0);
        assert_eq!(d_drastic(&js(&[1, 1, 1]), &js(&[1, -1, -1])), 1);
    }

    #[test]
    fn geodesic_shortcut_where_hamming_counts_two() {
        let a = p17();
        let g = build_agenda_graph(&a);
        let j = js(&[1, 1, 1, 1, 1]);
        let k = js(&[1, 1, -1, -1, 1]);
        assert_eq!(d_hamming(&a, &j, &k).unwrap(), 2);
        assert_eq!(d_geodesic(&j, &k, &g).unwrap(), 1);
        assert_eq!(d_geodesic(&j, &j, &g).unwrap(), 0);
        assert!(g.is_connected());
        assert!(d_geodesic(&js(&[1, 1, -1, 1, 1]), &j, &g).is_err());
    }

    #[test]
    fn reversal_scores_of_the_first_three_rows() {
        let a = dp();
        let rows =
            [([1, 1, 1], [2, 0, 2, 0, 2, 0]), ([1, -1, -1], [1, 0, 0, 2, 0, 2]), ([-1, 1, -1], [0, 2, 1, 0, 0, 2])];
        for (set, expected) in rows {
            let set = js(&set);
            let got: Vec<u32> = (0..3)
                .flat_map(|i| [SignedJudgment::accept(i), SignedJudgment::reject(i)])
                .map(|j| score_reversal(j, &set, &a).unwrap())
                .collect();
            assert_eq!(got, expected);
        }
    }

    #[test]
    fn reversal_similarity_is_asymmetric() {
        let a = dp();
        let x = js(&[1, 1, 1]);
        let y = js(&[1, -1, -1]);
        assert_eq!(similarity(Scoring::Reversal, &x, &y, &a).unwrap(), 2);
        assert_eq!(similarity(Scoring::Reversal, &y, &x, &a).unwrap(), 1);
        assert_eq!(similarity(Scoring::Simple, &x, &y, &a).unwrap(), 3 - 2);
    }

    #[test]
    fn profile_distance_examples() {
        let a = dp();
        let p = Profile::from_signs(a.clone(), &[vec![1, 1, 1], vec![1, -1, -1], vec![-1, 1, -1]]).unwrap();
        let u = Profile::from_signs(a, &vec![vec![-1, -1, -1]; 3]).unwrap();
        // Per-agent distances are 3, 1 and 1.
        assert_eq!(profile_distance(&p, &u, Distance::Hamming, Norm::Sum).unwrap(), 5.0);
        assert_eq!(profile_distance(&p, &u, Distance::Hamming, Norm::Max).unwrap(), 3.0);
        assert_eq!(profile_distance(&p, &p, Distance::Geodesic, Norm::Sum).unwrap(), 0.0);
    }

    #[test]
    fn names_parse() {
        assert_eq!("geodesic".parse::<Distance>().unwrap(), Distance::Geodesic);
        assert_eq!(Norm::Max.to_string(), "max");
        assert!("euclid".parse::<Distance>().is_err());
    }
}
