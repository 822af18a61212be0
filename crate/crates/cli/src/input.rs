//! Input files: agenda, profile, votes and binary-problem documents.

use std::path::Path;

use ja_core::agenda::BinaryProblem;
use ja_core::preference::VoteProfile;
use ja_core::{parse_formula, Agenda, Caps, Error, Formula, Profile, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AgendaDoc {
    pub pre_agenda: Vec<String>,
    #[serde(default)]
    pub constraints: Vec<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileDoc {
    pub agenda: AgendaDoc,
    pub agents: Vec<Vec<i8>>,
}

/// Ballots are rows of 0/1 values, one per variable.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BinaryDoc {
    pub variables: Vec<String>,
    #[serde(default)]
    pub integrity_constraints: Vec<String>,
    pub ballots: Vec<Vec<u8>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Digest256 {
    pub path: String,
    pub sha256: String,
}

pub enum Document {
    Agenda(AgendaDoc),
    Profile(ProfileDoc),
    Votes(VoteProfile),
    Binary(BinaryDoc),
}

impl Document {
    pub fn kind(&self) -> &'static str {
        match self {
            Document::Agenda(_) => "agenda",
            Document::Profile(_) => "profile",
            Document::Votes(_) => "votes",
            Document::Binary(_) => "binary",
        }
    }
}

pub struct Loaded {
    pub digest: Digest256,
    pub doc: Document,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn typed<T: serde::de::DeserializeOwned>(path: &str, v: Value) -> Result<T> {
    serde_json::from_value(v).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))
}

pub fn load(path: &str) -> Result<Loaded> {
    let bytes = std::fs::read(Path::new(path)).map_err(|e| Error::InvalidInput(format!("{path}: {e}")))?;
    let digest = Digest256 { path: path.to_owned(), sha256: hex(&Sha256::digest(&bytes)) };
    let value: Value =
        serde_json::from_slice(&bytes).map_err(|e| Error::InvalidInput(format!("{path}: not valid JSON: {e}")))?;
    let has = |k: &str| value.get(k).is_some();
    let doc = if has("agents") {
        Document::Profile(typed(path, value)?)
    } else if has("pre_agenda") {
        Document::Agenda(typed(path, value)?)
    } else if has("options") {
        Document::Votes(typed(path, value)?)
    } else if has("variables") {
        Document::Binary(typed(path, value)?)
    } else {
        return Err(Error::InvalidInput(format!("{path}: expected an agenda, profile, votes or binary document")));
    };
    Ok(Loaded { digest, doc })
}

fn formulas(texts: &[String]) -> Result<Vec<Formula>> {
    texts.iter().map(|t| parse_formula(t)).collect()
}

pub fn agenda(doc: &AgendaDoc, caps: Caps) -> Result<Agenda> {
    Agenda::with_caps(formulas(&doc.pre_agenda)?, formulas(&doc.constraints)?, caps)
}

pub fn profile(doc: &ProfileDoc, caps: Caps) -> Result<Profile> {
    Profile::from_signs(agenda(&doc.agenda, caps)?, &doc.agents)
}

pub fn agenda_doc(a: &Agenda) -> AgendaDoc {
    AgendaDoc {
        pre_agenda: a.pre_agenda().iter().map(ToString::to_string).collect(),
        constraints: a.constraints().iter().map(ToString::to_string).collect(),
    }
}

/// A profile as a document that `load` reads back.
pub fn profile_doc(p: &Profile) -> ProfileDoc {
    let m = p.agenda().size();
    ProfileDoc { agenda: agenda_doc(p.agenda()), agents: p.agents().iter().map(|j| j.signs(m)).collect() }
}

pub fn binary_problem(doc: &BinaryDoc) -> Result<BinaryProblem> {
    let ballots = doc
        .ballots
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .map(|&x| match x {
                    0 => Ok(false),
                    1 => Ok(true),
                    _ => Err(Error::InvalidInput(format!("ballot {i} holds {x}; entries are 0 or 1"))),
                })
                .collect()
        })
        .collect::<Result<_>>()?;
    Ok(BinaryProblem {
        variables: doc.variables.clone(),
        integrity_constraints: formulas(&doc.integrity_constraints)?,
        ballots,
    })
}

pub fn binary_doc(b: &BinaryProblem) -> BinaryDoc {
    BinaryDoc {
        variables: b.variables.clone(),
        integrity_constraints: b.integrity_constraints.iter().map(ToString::to_string).collect(),
        ballots: b.ballots.iter().map(|r| r.iter().map(|&x| u8::from(x)).collect()).collect(),
    }
}
