use clap::{Args, ValueEnum};
use ja_core::agenda::{
    agenda_report, check_independent_partition, check_iod, check_syntactic_partition, from_binary,
    restricted_domain_report, to_binary,
};
use ja_core::aggregators::{leximax_vector, med_value, Rule, RuleOutput};
use ja_core::metrics::{build_agenda_graph, similarity, Scoring};
use ja_core::preference::{
    borda, condorcet_winner, majority_graph, ranking, votes_to_profile_with, winners, GammaMode, VoteProfile,
};
use ja_core::properties::{self, compare_rules, search_counterexample, Bounds, Instance, Property, PropertyVerdict};
use ja_core::{Agenda, Caps, Error, JudgmentSet, Profile, Result, SignedJudgment};
use serde_json::{json, Value};

use crate::input::{self, Digest256, Document};
use crate::render::{lines, set_json, sets_json, Table};
use crate::RuleFlags;

pub struct Ctx {
    pub caps: Caps,
    pub inputs: Vec<Digest256>,
}

pub struct Output {
    pub result: Value,
    pub table: String,
    /// Printed instead of the report when set.
    pub bare: Option<Value>,
}

impl Output {
    fn new(result: Value, table: String) -> Self {
        Output { result, table, bare: None }
    }
}

impl Ctx {
    fn load(&mut self, path: &str) -> Result<Document> {
        let loaded = input::load(path)?;
        self.inputs.push(loaded.digest);
        Ok(loaded.doc)
    }

    fn profile(&mut self, path: &str) -> Result<Profile> {
        match self.load(path)? {
            Document::Profile(d) => input::profile(&d, self.caps),
            other => Err(wrong_kind(path, "a profile", &other)),
        }
    }

    fn agenda_and_profile(&mut self, path: &str) -> Result<(Agenda, Option<Profile>)> {
        match self.load(path)? {
            Document::Agenda(d) => Ok((input::agenda(&d, self.caps)?, None)),
            Document::Profile(d) => {
                let p = input::profile(&d, self.caps)?;
                Ok((p.agenda().clone(), Some(p)))
            }
            other => Err(wrong_kind(path, "an agenda or profile", &other)),
        }
    }

    fn votes(&mut self, path: &str) -> Result<VoteProfile> {
        match self.load(path)? {
            Document::Votes(v) => {
                v.validate()?;
                Ok(v)
            }
            other => Err(wrong_kind(path, "a votes", &other)),
        }
    }
}

fn wrong_kind(path: &str, expected: &str, found: &Document) -> Error {
    Error::InvalidInput(format!("{path}: expected {expected} document, found a {} document", found.kind()))
}

fn parse_rule(spec: &str, flags: &RuleFlags, m: Option<usize>) -> Result<Rule> {
    Rule::parse_with(spec, &flags.params()?, m)
}

fn issue_list(s: &str) -> Result<Vec<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| Error::InvalidInput(format!("`{x}` is not an issue index"))))
        .collect()
}

/// `0,1,2/2,3` into two issue groups.
fn two_groups(s: &str) -> Result<(Vec<usize>, Vec<usize>)> {
    let (a, b) = s.split_once('/').ok_or_else(|| Error::InvalidInput(format!("`{s}` is not of the form 0,1/2,3")))?;
    Ok((issue_list(a)?, issue_list(b)?))
}

fn issues(a: &Agenda) -> Vec<String> {
    a.pre_agenda().iter().map(ToString::to_string).collect()
}

fn constraints(a: &Agenda) -> Vec<String> {
    a.constraints().iter().map(ToString::to_string).collect()
}

fn judgment(a: &Agenda, j: SignedJudgment) -> String {
    a.judgment_formula(j).to_string()
}

fn profile_value(p: &Profile) -> Value {
    serde_json::to_value(input::profile_doc(p)).expect("profiles serialise")
}

fn sets_or_error(rule: &Rule, p: &Profile) -> Value {
    match rule.apply(p) {
        Ok(RuleOutput::Sets(o)) => sets_json(p.agenda(), &o.sets),
        Ok(RuleOutput::Partial(o)) => json!([set_json(p.agenda(), &o.set)]),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

#[derive(Args)]
pub struct AggregateArgs {
    /// Rule as `name[:key=value]...`, e.g. `med`, `pbp:premises=0,1`.
    #[arg(long)]
    pub rule: String,
    #[command(flatten)]
    pub flags: RuleFlags,
    /// Keep only the canonically first collective set.
    #[arg(long)]
    pub tie_break: bool,
    /// Profile file.
    #[arg(long, short)]
    pub input: String,
}

pub fn aggregate(ctx: &mut Ctx, a: &AggregateArgs) -> Result<Output> {
    let p = ctx.profile(&a.input)?;
    let agenda = p.agenda();
    let rule = parse_rule(&a.rule, &a.flags, Some(agenda.size()))?;
    let mut table = Table::new(agenda);
    table.profile(&p);
    let (result, footer) = match rule.apply(&p)? {
        RuleOutput::Sets(o) => {
            let o = if a.tie_break { o.tie_break() } else { o };
            for (i, s) in o.sets.iter().enumerate() {
                table.set(format!("{} {}", o.rule, i + 1), agenda, s);
            }
            let footer = o.note.clone().map(|n| format!("note: {n}\n")).unwrap_or_default();
            let result = json!({
                "rule": o.rule,
                "kind": "sets",
                "issues": issues(agenda),
                "resolute": o.is_resolute(),
                "tie_broken": a.tie_break,
                "note": o.note,
                "sets": sets_json(agenda, &o.sets),
            });
            (result, footer)
        }
        RuleOutput::Partial(o) => {
            table.set(o.rule.clone(), agenda, &o.set);
            let result = json!({
                "rule": o.rule,
                "kind": "partial",
                "issues": issues(agenda),
                "consistent": o.consistent,
                "set": set_json(agenda, &o.set),
            });
            (result, format!("consistent: {}\n", o.consistent))
        }
    };
    Ok(Output::new(result, table.render() + &footer))
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Score {
    /// Summed support of the set's judgments.
    Med,
    /// Strict-majority support counts, highest level first.
    Leximax,
    /// Summed simple similarity to the agents.
    Simple,
    /// Summed reversal similarity to the agents.
    Reversal,
}

#[derive(Args)]
pub struct CodomainArgs {
    /// Agenda or profile file.
    #[arg(long, short)]
    pub input: String,
    /// Score every set against the input profile.
    #[arg(long, value_enum)]
    pub score: Option<Score>,
}

fn score(p: &Profile, kind: Score, j: &JudgmentSet) -> Result<Value> {
    let summed = |s: Scoring| -> Result<Value> {
        let mut total = 0u64;
        for agent in p.agents() {
            total += u64::from(similarity(s, agent, j, p.agenda())?);
        }
        Ok(json!(total))
    };
    match kind {
        Score::Med => Ok(json!(med_value(p, j))),
        Score::Leximax => Ok(json!(leximax_vector(p, j))),
        Score::Simple => summed(Scoring::Simple),
        Score::Reversal => summed(Scoring::Reversal),
    }
}

pub fn codomain(ctx: &mut Ctx, a: &CodomainArgs) -> Result<Output> {
    let (agenda, profile) = ctx.agenda_and_profile(&a.input)?;
    let scored = match (a.score, &profile) {
        (Some(kind), Some(p)) => Some((kind, p)),
        (Some(_), None) => return Err(Error::InvalidInput("--score needs a profile document".into())),
        (None, _) => None,
    };
    let mut table = Table::new(&agenda);
    let mut sets = Vec::new();
    for (i, j) in agenda.codomain().iter().enumerate() {
        let mut v = set_json(&agenda, j);
        let mut label = format!("J{}", i + 1);
        if let Some((kind, p)) = scored {
            let s = score(p, kind, j)?;
            label.push_str(&format!(" ({s})"));
            v["score"] = s;
        }
        table.set(label, &agenda, j);
        sets.push(v);
    }
    let result = json!({
        "issues": issues(&agenda),
        "constraints": constraints(&agenda),
        "size": sets.len(),
        "sets": sets,
    });
    let footer = format!("{} rational judgment set(s)\n", agenda.codomain().len());
    Ok(Output::new(result, table.render() + &footer))
}

#[derive(Args)]
pub struct AgendaPropsArgs {
    /// Agenda or profile file.
    #[arg(long, short)]
    pub input: String,
    /// Check a partition into two issue groups, e.g. `0,1,2,3/4`.
    #[arg(long)]
    pub parts: Option<String>,
    /// Check an overlapping decomposition, e.g. `0,1,2/2,3`.
    #[arg(long)]
    pub overlap: Option<String>,
    /// Include the agenda graph over the rational judgment sets.
    #[arg(long)]
    pub graph: bool,
    /// Search agent and judgment orders for the restricted domains (profile input).
    #[arg(long)]
    pub domains: bool,
}

pub fn agenda_props(ctx: &mut Ctx, a: &AgendaPropsArgs) -> Result<Output> {
    let (agenda, profile) = ctx.agenda_and_profile(&a.input)?;
    let report = agenda_report(&agenda)?;
    let mis: Vec<Vec<String>> =
        report.minimal_inconsistent_subsets.iter().map(|s| s.iter().map(|j| judgment(&agenda, *j)).collect()).collect();
    let mut result = json!({
        "issues": issues(&agenda),
        "constraints": constraints(&agenda),
        "structure": {
            "closed_under_atoms": report.closed_under_atoms,
            "minimal_inconsistent_subsets": mis,
            "simple": report.simple,
            "smallest_k_median": report.smallest_k_median,
            "path_connected": report.path_connected,
        },
    });
    let mut text = vec![
        ("issues", issues(&agenda).join(", ")),
        ("closed under atoms", report.closed_under_atoms.to_string()),
        ("simple", report.simple.to_string()),
        ("smallest k-median", report.smallest_k_median.to_string()),
        ("path-connected", report.path_connected.to_string()),
        ("minimal inconsistent subsets", mis.len().to_string()),
    ];
    if let Some(s) = &a.parts {
        let (x, y) = two_groups(s)?;
        let independent = check_independent_partition(&agenda, &x, &y)?;
        // The syntactic test only applies without constraints; report it as unknown otherwise.
        let syntactic = match check_syntactic_partition(&agenda, &x, &y) {
            Err(Error::Precondition(_)) => None,
            other => Some(other?),
        };
        result["partition"] = json!({ "parts": [x, y], "independent": independent, "syntactic": syntactic });
        text.push(("independent partition", independent.to_string()));
        let shown = syntactic.map_or_else(|| "n/a (constrained agenda)".to_owned(), |b| b.to_string());
        text.push(("syntactic partition", shown));
    }
    if let Some(s) = &a.overlap {
        let (x, y) = two_groups(s)?;
        let iod = check_iod(&agenda, &x, &y)?;
        result["overlap"] = json!({ "parts": [x, y], "independent": iod });
        text.push(("independent overlapping decomposition", iod.to_string()));
    }
    if a.graph {
        let g = build_agenda_graph(&agenda);
        result["graph"] = json!({
            "vertices": sets_json(&agenda, g.vertices()),
            "edges": g.edges(),
            "connected": g.is_connected(),
        });
        text.push(("graph edges", g.edges().len().to_string()));
        text.push(("graph connected", g.is_connected().to_string()));
    }
    let mut table = String::new();
    if let Some(p) = &profile {
        let (m, consistent) = p.majoritarian_set();
        result["majority"] = json!({ "set": set_json(&agenda, &m), "consistent": consistent });
        text.push(("majority consistent", consistent.to_string()));
        let mut t = Table::new(&agenda);
        t.profile(p).set("majority", &agenda, &m);
        table = t.render();
    }
    if a.domains {
        let p = profile.as_ref().ok_or_else(|| Error::InvalidInput("--domains needs a profile document".into()))?;
        let d = restricted_domain_report(p)?;
        let order = |o: &Option<Vec<SignedJudgment>>| -> Value {
            match o {
                Some(o) => json!(o.iter().map(|j| judgment(&agenda, *j)).collect::<Vec<_>>()),
                None => Value::Null,
            }
        };
        result["domains"] = json!({
            "single_plateaued": order(&d.single_plateaued),
            "single_canyoned": order(&d.single_canyoned),
            "unidimensionally_aligned": d.unidimensionally_aligned,
            "unidimensionally_ordered": d.unidimensionally_ordered,
        });
        text.push(("single-plateaued", d.single_plateaued.is_some().to_string()));
        text.push(("single-canyoned", d.single_canyoned.is_some().to_string()));
        text.push(("unidimensionally aligned", d.unidimensionally_aligned.is_some().to_string()));
        text.push(("unidimensionally ordered", d.unidimensionally_ordered.is_some().to_string()));
    }
    Ok(Output::new(result, table + &lines(&text)))
}

#[derive(Args)]
pub struct SearchFlags {
    /// Search bounds, e.g. `a=3,m=4,n=3,r=200`.
    #[arg(long)]
    pub bounds: Option<String>,
    /// Seed for the random part of the search [env: JA_SEED].
    #[arg(long)]
    pub seed: Option<u64>,
}

impl SearchFlags {
    fn bounds(&self) -> Result<Bounds> {
        let text = self.bounds.as_deref().unwrap_or("");
        let mut b: Bounds = text.parse()?;
        if !text.contains("seed") {
            if let Ok(v) = std::env::var("JA_SEED") {
                b.seed = v.trim().parse().map_err(|_| Error::InvalidInput(format!("JA_SEED={v} is not an integer")))?;
            }
        }
        if let Some(s) = self.seed {
            b.seed = s;
        }
        Ok(b)
    }
}

#[derive(Args)]
pub struct CheckArgs {
    #[arg(long)]
    pub rule: String,
    #[command(flatten)]
    pub flags: RuleFlags,
    /// Property name, e.g. `majority-preservation`, `agenda-separability`.
    #[arg(long)]
    pub property: String,
    #[command(flatten)]
    pub search: SearchFlags,
    /// Search for a counterexample even when inputs are given; the inputs are checked first.
    #[arg(long = "search")]
    pub force_search: bool,
    /// Two issue groups for the separability properties, e.g. `0,1,2,3/4`.
    #[arg(long)]
    pub parts: Option<String>,
    /// Sub-agenda issues for the Sen properties, e.g. `0,1`.
    #[arg(long)]
    pub subagenda: Option<String>,
    /// Repetition count for homogeneity; agent bound for responsiveness.
    #[arg(long)]
    pub count: Option<usize>,
    /// Profile files: the instance, then the second profile for two-profile properties.
    #[arg(long, short, num_args = 1..)]
    pub input: Vec<String>,
}

fn instance_value(rule: &Rule, inst: &Instance) -> Value {
    let mut v = json!({
        "profile": profile_value(&inst.profile),
        "outcome": sets_or_error(rule, &inst.profile),
    });
    if let Some(o) = &inst.other {
        v["other"] = profile_value(o);
        v["other_outcome"] = sets_or_error(rule, o);
    }
    if let Some((x, y)) = &inst.parts {
        v["parts"] = json!([x, y]);
    }
    if let Some(s) = &inst.subagenda {
        v["subagenda"] = json!(s);
    }
    if let Some(k) = inst.k {
        v["count"] = json!(k);
    }
    v
}

fn verdict_output(rule: &Rule, v: &PropertyVerdict, mode: &str) -> Output {
    let result = json!({
        "rule": v.rule,
        "property": v.property,
        "mode": mode,
        "holds": v.holds_on_instance,
        "vacuous": v.vacuous,
        "detail": v.detail,
        "bounds": v.search_bounds.map(|b| b.to_string()),
        "instances_checked": v.instances_checked,
        "instances_skipped": v.instances_skipped,
        "witness": v.witness.as_ref().map(|w| instance_value(rule, w)),
    });
    let mut text = lines(&[
        ("rule", v.rule.clone()),
        ("property", v.property.to_string()),
        ("holds", v.holds_on_instance.to_string()),
        ("vacuous", v.vacuous.to_string()),
        ("detail", v.detail.clone()),
    ]);
    if let Some(w) = &v.witness {
        let mut t = Table::new(w.profile.agenda());
        t.profile(&w.profile);
        text.push_str("witness:\n");
        text.push_str(&t.render());
    }
    Output::new(result, text)
}

pub fn check(ctx: &mut Ctx, a: &CheckArgs) -> Result<Output> {
    let property: Property = a.property.parse()?;
    let mut profiles = Vec::new();
    for path in &a.input {
        profiles.push(ctx.profile(path)?);
    }
    let m = profiles.first().map(|p| p.agenda().size());
    let rule = parse_rule(&a.rule, &a.flags, m)?;
    let mut extra = Vec::new();
    if let Some(first) = profiles.first() {
        let mut inst = Instance::new(first.clone());
        if let Some(o) = profiles.get(1) {
            inst = inst.with_other(o.clone());
        }
        if let Some(s) = &a.parts {
            let (x, y) = two_groups(s)?;
            inst = inst.with_parts(x, y);
        }
        if let Some(s) = &a.subagenda {
            inst = inst.with_subagenda(issue_list(s)?);
        }
        if let Some(k) = a.count {
            inst = inst.with_k(k);
        }
        extra.push(inst);
    }
    let searching = extra.is_empty() || a.force_search || a.search.bounds.is_some();
    if !searching {
        let v = properties::check(&rule, property, &extra[0])?;
        return Ok(verdict_output(&rule, &v, "instance"));
    }
    let v = search_counterexample(&rule, property, &a.search.bounds()?, &extra)?;
    Ok(verdict_output(&rule, &v, "search"))
}

#[derive(Args)]
pub struct CompareArgs {
    /// The two rules, e.g. `--rule mc --rule young`.
    #[arg(long, required = true, num_args = 1)]
    pub rule: Vec<String>,
    #[command(flatten)]
    pub flags: RuleFlags,
    #[command(flatten)]
    pub search: SearchFlags,
    /// Extra profiles to compare on before the search domain.
    #[arg(long, short, num_args = 1..)]
    pub input: Vec<String>,
}

pub fn compare(ctx: &mut Ctx, a: &CompareArgs) -> Result<Output> {
    if a.rule.len() != 2 {
        return Err(Error::InvalidInput(format!("compare takes two rules, got {}", a.rule.len())));
    }
    let mut profiles = Vec::new();
    for path in &a.input {
        profiles.push(ctx.profile(path)?);
    }
    let m = profiles.first().map(|p| p.agenda().size());
    let r1 = parse_rule(&a.rule[0], &a.flags, m)?;
    let r2 = parse_rule(&a.rule[1], &a.flags, m)?;
    let c = compare_rules(&r1, &r2, &a.search.bounds()?, &profiles)?;
    let witnesses: Vec<Value> = c
        .witnesses
        .iter()
        .map(
            |p| json!({ "profile": profile_value(p), "first": sets_or_error(&r1, p), "second": sets_or_error(&r2, p) }),
        )
        .collect();
    let result = json!({
        "first": c.first,
        "second": c.second,
        "relation": c.relation,
        "bounds": c.bounds.to_string(),
        "instances_checked": c.instances_checked,
        "instances_skipped": c.instances_skipped,
        "witnesses": witnesses,
    });
    let mut text = lines(&[
        ("first", c.first.clone()),
        ("second", c.second.clone()),
        ("relation", c.relation.to_string()),
        ("instances", format!("{} checked, {} skipped", c.instances_checked, c.instances_skipped)),
    ]);
    for (i, p) in c.witnesses.iter().enumerate() {
        let mut t = Table::new(p.agenda());
        t.profile(p);
        for (label, rule) in [(&c.first, &r1), (&c.second, &r2)] {
            if let Ok(o) = rule.outcome(p) {
                for s in &o.sets {
                    t.set(label.clone(), p.agenda(), s);
                }
            }
        }
        text.push_str(&format!("witness {}:\n{}", i + 1, t.render()));
    }
    Ok(Output::new(result, text))
}

#[derive(Args)]
pub struct VoteArgs {
    /// condorcet | borda | via-ja:<rule>
    #[arg(long, default_value = "condorcet")]
    pub method: String,
    /// Constraints of the preference agenda: tr | w
    #[arg(long, default_value = "tr")]
    pub gamma: String,
    #[command(flatten)]
    pub flags: RuleFlags,
    /// Votes file.
    #[arg(long, short)]
    pub input: String,
}

fn list(xs: &std::collections::BTreeSet<String>) -> String {
    xs.iter().cloned().collect::<Vec<_>>().join(", ")
}

pub fn vote(ctx: &mut Ctx, a: &VoteArgs) -> Result<Output> {
    let v = ctx.votes(&a.input)?;
    let mode: GammaMode = a.gamma.parse()?;
    if a.method == "condorcet" {
        let winner = condorcet_winner(&v);
        let graph = majority_graph(&v);
        let edges: Vec<String> = graph.edges.iter().map(|(x, y)| format!("{x}>{y}")).collect();
        let text =
            lines(&[("winner", winner.clone().unwrap_or_else(|| "none".into())), ("majority graph", edges.join(" "))]);
        let result = json!({ "method": "condorcet", "winner": winner, "majority_graph": graph });
        return Ok(Output::new(result, text));
    }
    if a.method == "borda" {
        let (scores, top) = borda(&v);
        let shown: Vec<String> = scores.iter().map(|(o, s)| format!("{o}={s}")).collect();
        let text = lines(&[("scores", shown.join(" ")), ("winners", list(&top))]);
        let result = json!({ "method": "borda", "scores": scores, "winners": top });
        return Ok(Output::new(result, text));
    }
    let spec = a.method.strip_prefix("via-ja:").ok_or_else(|| {
        Error::InvalidInput(format!("unknown method `{}` (expected condorcet, borda or via-ja:<rule>)", a.method))
    })?;
    let p = votes_to_profile_with(&v, mode, ctx.caps)?;
    let rule = parse_rule(spec, &a.flags, Some(p.agenda().size()))?;
    let outcome = rule.outcome(&p)?;
    let mut all = std::collections::BTreeSet::new();
    let mut sets = Vec::new();
    for j in &outcome.sets {
        let w = winners(j, &v.options)?;
        let mut s = set_json(p.agenda(), j);
        s["winners"] = json!(w);
        if mode == GammaMode::Tr {
            s["ranking"] = json!(ranking(j, &v.options)?);
        }
        all.extend(w);
        sets.push(s);
    }
    let cw = condorcet_winner(&v);
    let (_, borda_top) = borda(&v);
    let agrees_condorcet = cw.as_ref().map(|w| all.len() == 1 && all.contains(w));
    let result = json!({
        "method": "via-ja",
        "rule": outcome.rule,
        "gamma": mode,
        "winners": all,
        "sets": sets,
        "condorcet_winner": cw,
        "borda_winners": borda_top,
        "matches_condorcet": agrees_condorcet,
        "matches_borda": all == borda_top,
    });
    let text = lines(&[
        ("rule", outcome.rule.clone()),
        ("winners", list(&all)),
        ("condorcet winner", cw.unwrap_or_else(|| "none".into())),
        ("borda winners", list(&borda_top)),
    ]);
    Ok(Output::new(result, text))
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Binary,
    Logic,
}

#[derive(Args)]
pub struct ConvertArgs {
    /// Profile, binary-problem or votes file.
    #[arg(long, short)]
    pub input: String,
    /// Output form; inferred from the input when omitted.
    #[arg(long, value_enum)]
    pub to: Option<Target>,
    /// Constraints used when translating votes: tr | w
    #[arg(long, default_value = "tr")]
    pub gamma: String,
    /// Print only the converted document, ready to be used as input.
    #[arg(long)]
    pub bare: bool,
}

pub fn convert(ctx: &mut Ctx, a: &ConvertArgs) -> Result<Output> {
    let doc = ctx.load(&a.input)?;
    let from = doc.kind();
    let (to, document, table) = match (doc, a.to) {
        (Document::Profile(d), None | Some(Target::Binary)) => {
            let p = input::profile(&d, ctx.caps)?;
            let b = to_binary(&p)?;
            let mut t = b.variables.join(" ") + "\n";
            for row in &b.ballots {
                let cells: Vec<&str> = row.iter().map(|&x| if x { "1" } else { "0" }).collect();
                t.push_str(&(cells.join(" ") + "\n"));
            }
            let v = serde_json::to_value(input::binary_doc(&b)).expect("documents serialise");
            ("binary", v, t)
        }
        (Document::Binary(d), None | Some(Target::Logic)) => {
            let (_, p) = from_binary(&input::binary_problem(&d)?)?;
            let mut t = Table::new(p.agenda());
            t.profile(&p);
            ("profile", profile_value(&p), t.render())
        }
        (Document::Votes(v), None | Some(Target::Logic)) => {
            v.validate()?;
            let p = votes_to_profile_with(&v, a.gamma.parse()?, ctx.caps)?;
            let mut t = Table::new(p.agenda());
            t.profile(&p);
            ("profile", profile_value(&p), t.render())
        }
        (other, to) => {
            let target = match to {
                Some(Target::Binary) => "binary",
                Some(Target::Logic) => "logic",
                None => "another form",
            };
            return Err(Error::InvalidInput(format!("cannot convert a {} document to {target}", other.kind())));
        }
    };
    let result = json!({ "from": from, "to": to, "document": document });
    Ok(Output { bare: a.bare.then(|| document.clone()), result, table })
}
