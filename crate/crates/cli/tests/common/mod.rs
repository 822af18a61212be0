#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

/// Golden cases: name and arguments, run from the workspace root.
pub const CASES: &[(&str, &[&str])] = &[
    ("aggregate-majority-pdp", &["aggregate", "--rule", "majority", "--input", "fixtures/pdp.json"]),
    ("aggregate-pbp-pdp", &["aggregate", "--rule", "pbp", "--premises", "0,1", "--input", "fixtures/pdp.json"]),
    ("aggregate-cbp-pdp", &["aggregate", "--rule", "cbp:conclusions=2", "--input", "fixtures/pdp.json"]),
    ("aggregate-ecbp-pdp", &["aggregate", "--rule", "ecbp", "--conclusions", "2", "--input", "fixtures/pdp.json"]),
    ("aggregate-med-p17", &["aggregate", "--rule", "med", "--input", "fixtures/p17.json"]),
    ("aggregate-mc-p17", &["aggregate", "--rule", "mc", "--input", "fixtures/p17.json"]),
    ("aggregate-mcc-p17", &["aggregate", "--rule", "mcc", "--input", "fixtures/p17.json"]),
    ("aggregate-ra-p17", &["aggregate", "--rule", "ra", "--input", "fixtures/p17.json"]),
    ("aggregate-young-p17", &["aggregate", "--rule", "young", "--input", "fixtures/p17.json"]),
    ("aggregate-ra-p15", &["aggregate", "--rule", "ra", "--input", "fixtures/p15.json"]),
    ("aggregate-leximax-p15", &["aggregate", "--rule", "leximax", "--input", "fixtures/p15.json"]),
    ("aggregate-mcc-table9", &["aggregate", "--rule", "mcc", "--input", "fixtures/table9.json"]),
    ("aggregate-ra-table9", &["aggregate", "--rule", "ra", "--input", "fixtures/table9.json"]),
    ("aggregate-med-party", &["aggregate", "--rule", "med", "--input", "fixtures/party.json"]),
    ("aggregate-mc-p17-table", &["aggregate", "--rule", "mc", "--input", "fixtures/p17.json", "--format", "table"]),
    ("codomain-pdp-reversal", &["codomain", "--input", "fixtures/pdp.json", "--score", "reversal"]),
    ("codomain-p17-med", &["codomain", "--input", "fixtures/p17.json", "--score", "med", "--format", "table"]),
    ("agenda-props-pdp", &["agenda-props", "--input", "fixtures/pdp.json", "--graph", "--domains"]),
    ("agenda-props-p17", &["agenda-props", "--input", "fixtures/p17.json", "--parts", "0,1,2,3/4"]),
    ("agenda-props-party", &["agenda-props", "--input", "fixtures/party.json", "--parts", "0,1/2,3"]),
    (
        "check-young-separability-p17",
        &[
            "check",
            "--rule",
            "young",
            "--property",
            "agenda-separability",
            "--parts",
            "0,1,2,3/4",
            "--input",
            "fixtures/p17.json",
        ],
    ),
    ("check-dist-max-majority", &["check", "--rule", "dist:norm=max", "--property", "majority-preservation"]),
    (
        "check-med-majority-search",
        &[
            "check",
            "--rule",
            "med",
            "--property",
            "majority-preservation",
            "--bounds",
            "a=3,m=4,n=3,r=200",
            "--seed",
            "7",
        ],
    ),
    ("compare-mc-young", &["compare", "--rule", "mc", "--rule", "young", "--input", "fixtures/p17.json"]),
    ("vote-v1-condorcet", &["vote", "--method", "condorcet", "--input", "fixtures/v1.json"]),
    ("vote-v1-borda", &["vote", "--method", "borda", "--input", "fixtures/v1.json"]),
    (
        "vote-v1-reversal",
        &["vote", "--method", "via-ja:scoring:scoring=reversal", "--gamma", "tr", "--input", "fixtures/v1.json"],
    ),
    ("vote-v2-condorcet", &["vote", "--method", "condorcet", "--input", "fixtures/v2.json"]),
    ("vote-v2-mc", &["vote", "--method", "via-ja:mc", "--input", "fixtures/v2.json"]),
    ("convert-pdp-binary", &["convert", "--to", "binary", "--input", "fixtures/pdp.json"]),
    ("convert-v2-logic", &["convert", "--input", "fixtures/v2.json", "--format", "table"]),
];

pub fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn golden_path(name: &str, args: &[&str]) -> PathBuf {
    let ext = if args.contains(&"table") { "txt" } else { "json" };
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(format!("{name}.{ext}"))
}

/// Runs `ja` from the workspace root with a clean cap and seed environment.
pub fn ja_with_threads(args: &[&str], threads: Option<usize>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ja"));
    cmd.current_dir(root()).args(args);
    for var in ["JA_MAX_ATOMS", "JA_MAX_ISSUES", "JA_MAX_AGENTS", "JA_SEED"] {
        cmd.env_remove(var);
    }
    match threads {
        Some(n) => cmd.env("RAYON_NUM_THREADS", n.to_string()),
        None => cmd.env_remove("RAYON_NUM_THREADS"),
    };
    cmd.output().expect("the ja binary runs")
}

pub fn ja(args: &[&str]) -> Output {
    ja_with_threads(args, None)
}

pub fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

pub fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("JSON report")
}
