mod commands;
mod input;
mod render;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ja_core::aggregators::RuleParams;
use ja_core::{Caps, Error, Result};
use serde::Serialize;

use crate::input::Digest256;

#[derive(Parser)]
#[command(name = "ja", version, about = "Judgment aggregation over propositional agendas")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Add wall-clock milliseconds to the report (makes output non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
    /// Atoms in one agenda [env: JA_MAX_ATOMS].
    #[arg(long, global = true)]
    max_atoms: Option<usize>,
    /// Issues in one agenda [env: JA_MAX_ISSUES].
    #[arg(long, global = true)]
    max_issues: Option<usize>,
    /// Agents in one profile [env: JA_MAX_AGENTS].
    #[arg(long, global = true)]
    max_agents: Option<usize>,
    /// Any other cap, e.g. `full_max_agents=6`. Repeatable.
    #[arg(long = "cap", global = true, value_name = "NAME=VALUE")]
    caps: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

/// Rule parameters shared by every subcommand that takes `--rule`. Inline
/// parameters (`dist:norm=max`) take precedence over these flags.
#[derive(Args, Clone, Default)]
pub struct RuleFlags {
    /// Quota for the quota rule.
    #[arg(long)]
    pub k: Option<usize>,
    /// Premise issue indices, e.g. `0,1`.
    #[arg(long)]
    pub premises: Option<String>,
    /// Conclusion issue indices.
    #[arg(long)]
    pub conclusions: Option<String>,
    /// drastic | hamming | geodesic
    #[arg(long)]
    pub distance: Option<String>,
    /// sum | max
    #[arg(long)]
    pub norm: Option<String>,
    /// simple | reversal
    #[arg(long)]
    pub scoring: Option<String>,
    /// Representative base for mrv: med | dist
    #[arg(long)]
    pub base: Option<String>,
}

impl RuleFlags {
    pub fn params(&self) -> Result<RuleParams> {
        let mut p = RuleParams::default();
        if let Some(k) = self.k {
            p.k = Some(k);
        }
        let pairs = [
            ("premises", &self.premises),
            ("conclusions", &self.conclusions),
            ("distance", &self.distance),
            ("norm", &self.norm),
            ("scoring", &self.scoring),
            ("base", &self.base),
        ];
        for (key, value) in pairs {
            if let Some(v) = value {
                p.set(key, v)?;
            }
        }
        Ok(p)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Apply one rule to a profile.
    Aggregate(commands::AggregateArgs),
    /// List the rational judgment sets of an agenda, optionally scored against a profile.
    Codomain(commands::CodomainArgs),
    /// Logical structure of an agenda; majority and domain restrictions of a profile.
    AgendaProps(commands::AgendaPropsArgs),
    /// Check a property of a rule on given instances or by bounded search.
    Check(commands::CheckArgs),
    /// Compare the outcomes of two rules over a bounded search domain.
    Compare(commands::CompareArgs),
    /// Voting methods and voting through the preference agenda.
    Vote(commands::VoteArgs),
    /// Convert between logic profiles and binary problems; translate votes.
    Convert(commands::ConvertArgs),
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Aggregate(_) => "aggregate",
            Command::Codomain(_) => "codomain",
            Command::AgendaProps(_) => "agenda-props",
            Command::Check(_) => "check",
            Command::Compare(_) => "compare",
            Command::Vote(_) => "vote",
            Command::Convert(_) => "convert",
        }
    }
}

#[derive(Serialize)]
struct Report<'a> {
    command: &'a str,
    argv: Vec<String>,
    inputs: &'a [Digest256],
    caps: Caps,
    result: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

fn env_usize(name: &str) -> Result<Option<usize>> {
    match std::env::var(name) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Error::InvalidInput(format!("{name}={v} is not a non-negative integer"))),
        Err(_) => Ok(None),
    }
}

fn caps(g: &Global) -> Result<Caps> {
    let mut caps = Caps::default();
    for (name, flag, env) in [
        ("max_atoms", g.max_atoms, "JA_MAX_ATOMS"),
        ("max_issues", g.max_issues, "JA_MAX_ISSUES"),
        ("max_agents", g.max_agents, "JA_MAX_AGENTS"),
    ] {
        if let Some(v) = flag.or(env_usize(env)?) {
            caps.set(name, v)?;
        }
    }
    for c in &g.caps {
        let (k, v) = c
            .split_once('=')
            .ok_or_else(|| Error::InvalidInput(format!("--cap `{c}` is not of the form NAME=VALUE")))?;
        let v = v.trim().parse().map_err(|_| Error::InvalidInput(format!("--cap `{c}` needs an integer")))?;
        caps.set(k.trim(), v)?;
    }
    Ok(caps)
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::Precondition(_) => 4,
        _ => 2,
    }
}

fn run(cli: Cli) -> Result<String> {
    let mut ctx = commands::Ctx { caps: caps(&cli.global)?, inputs: Vec::new() };
    let started = Instant::now();
    let out = match &cli.command {
        Command::Aggregate(a) => commands::aggregate(&mut ctx, a),
        Command::Codomain(a) => commands::codomain(&mut ctx, a),
        Command::AgendaProps(a) => commands::agenda_props(&mut ctx, a),
        Command::Check(a) => commands::check(&mut ctx, a),
        Command::Compare(a) => commands::compare(&mut ctx, a),
        Command::Vote(a) => commands::vote(&mut ctx, a),
        Command::Convert(a) => commands::convert(&mut ctx, a),
    }?;
    let elapsed = started.elapsed().as_millis();
    if cli.global.format == Format::Table {
        let mut text = out.table;
        if cli.global.timing {
            text.push_str(&format!("time: {elapsed} ms\n"));
        }
        return Ok(text);
    }
    if let Some(bare) = out.bare {
        return Ok(render::to_json(&bare));
    }
    let report = Report {
        command: cli.command.name(),
        argv: std::env::args().skip(1).collect(),
        inputs: &ctx.inputs,
        caps: ctx.caps,
        result: out.result,
        timing_ms: cli.global.timing.then_some(elapsed),
    };
    Ok(render::to_json(&serde_json::to_value(&report).expect("reports serialise")))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("ja: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
