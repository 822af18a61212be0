mod common;

use common::{golden_path, ja, ja_with_threads, json, stdout, CASES};
use serde_json::json;

/// Compares every golden case; `JA_BLESS=1` rewrites the files instead.
#[test]
fn golden_outputs() {
    let bless = std::env::var_os("JA_BLESS").is_some();
    let mut mismatched = Vec::new();
    for (name, args) in CASES {
        let out = ja(args);
        assert!(out.status.success(), "{name}: {}", String::from_utf8_lossy(&out.stderr));
        let path = golden_path(name, args);
        if bless {
            std::fs::write(&path, &out.stdout).unwrap();
            continue;
        }
        let expected = std::fs::read(&path).unwrap_or_else(|_| panic!("missing golden file {}", path.display()));
        if expected != out.stdout {
            mismatched.push(*name);
        }
    }
    assert!(mismatched.is_empty(), "golden mismatch: {mismatched:?}");
}

#[test]
fn output_is_identical_across_runs_and_thread_counts() {
    for (name, args) in CASES {
        let one = ja_with_threads(args, Some(1));
        let again = ja_with_threads(args, Some(1));
        let many = ja_with_threads(args, Some(8));
        assert_eq!(one.stdout, again.stdout, "{name} differs between runs");
        assert_eq!(one.stdout, many.stdout, "{name} differs between 1 and 8 threads");
    }
}

#[test]
fn med_on_seventeen_agents() {
    let r = json(&ja(&["aggregate", "--rule", "med", "--input", "fixtures/p17.json"]));
    assert_eq!(r["command"], "aggregate");
    assert_eq!(
        r["result"]["sets"],
        json!([{
            "signs": [1, 1, 1, 1, 1],
            "judgments": ["p & r", "p & s", "q", "p & q", "t"],
        }])
    );
    assert_eq!(r["inputs"][0]["sha256"].as_str().unwrap().len(), 64);
}

#[test]
fn majority_on_doctrinal_paradox_is_partial_and_inconsistent() {
    let out = ja(&["aggregate", "--rule", "majority", "--input", "fixtures/pdp.json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = json(&out);
    assert_eq!(r["result"]["kind"], "partial");
    assert_eq!(r["result"]["consistent"], false);
    assert_eq!(r["result"]["set"]["judgments"], json!(["p", "q", "!d"]));
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["codomain", "--input", "fixtures/empty-agenda.json"], 2),
        (&["codomain", "--input", "fixtures/no-such-file.json"], 2),
        (&["aggregate", "--rule", "pbp", "--input", "fixtures/pdp.json"], 2),
        (&["aggregate", "--rule", "borda", "--input", "fixtures/pdp.json"], 2),
        (&["aggregate", "--rule", "med", "--input", "fixtures/v1.json"], 2),
        (&["aggregate", "--rule", "full", "--input", "fixtures/p17.json"], 3),
        (&["aggregate", "--rule", "med", "--max-agents", "10", "--input", "fixtures/p17.json"], 3),
        (&["aggregate", "--rule", "med", "--cap", "max_issues=4", "--input", "fixtures/p17.json"], 3),
        (&["aggregate", "--rule", "med", "--cap", "nonsense=4", "--input", "fixtures/p17.json"], 2),
        (&["agenda-props", "--input", "fixtures/p17.json", "--domains"], 3),
        (
            &[
                "check",
                "--rule",
                "mc",
                "--property",
                "monotonicity",
                "--input",
                "fixtures/pdp.json",
                "fixtures/pdp.json",
            ],
            4,
        ),
        (
            &[
                "check",
                "--rule",
                "mc",
                "--property",
                "agenda-separability",
                "--parts",
                "0/1,2",
                "--input",
                "fixtures/pdp.json",
            ],
            4,
        ),
        (&["check", "--rule", "mc", "--property", "no-such-property"], 2),
        (&["vote", "--method", "plurality", "--input", "fixtures/v1.json"], 2),
        (&["nonsense"], 2),
    ];
    for (args, code) in cases {
        let out = ja(args);
        assert_eq!(out.status.code(), Some(*code), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?} wrote a report");
        assert!(!out.stderr.is_empty(), "{args:?} gave no diagnostic");
    }
}

#[test]
fn environment_caps_apply() {
    let mut cmd = std::process::Command::new(env!("CARGO_BIN_EXE_ja"));
    cmd.current_dir(common::root())
        .args(["aggregate", "--rule", "med", "--input", "fixtures/p17.json"])
        .env("JA_MAX_AGENTS", "5");
    assert_eq!(cmd.output().unwrap().status.code(), Some(3));
    cmd.args(["--max-agents", "20"]);
    let out = cmd.output().unwrap();
    assert!(out.status.success());
    assert_eq!(json(&out)["caps"]["max_agents"], 20);
}

#[test]
fn witness_replays_from_its_own_report() {
    let r = json(&ja(&["check", "--rule", "dist:norm=max", "--property", "majority-preservation"]));
    assert_eq!(r["result"]["holds"], false);
    let witness = &r["result"]["witness"]["profile"];
    let path = std::env::temp_dir().join(format!("ja-witness-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_vec(witness).unwrap()).unwrap();
    let replay = json(&ja(&[
        "check",
        "--rule",
        "dist:norm=max",
        "--property",
        "majority-preservation",
        "--input",
        path.to_str().unwrap(),
    ]));
    std::fs::remove_file(&path).ok();
    assert_eq!(replay["result"]["mode"], "instance");
    assert_eq!(replay["result"]["holds"], false);
    assert_eq!(replay["result"]["detail"], r["result"]["detail"]);
}

#[test]
fn conversions_round_trip() {
    let path = std::env::temp_dir().join(format!("ja-binary-{}.json", std::process::id()));
    let out = ja(&["convert", "--input", "fixtures/p17.json", "--bare"]);
    assert!(out.status.success());
    std::fs::write(&path, &out.stdout).unwrap();
    let back = ja(&["convert", "--input", path.to_str().unwrap(), "--bare"]);
    std::fs::remove_file(&path).ok();
    let logic: serde_json::Value = serde_json::from_slice(&back.stdout).unwrap();
    let original: serde_json::Value =
        serde_json::from_slice(&std::fs::read(common::root().join("fixtures/p17.json")).unwrap()).unwrap();
    assert_eq!(logic["agents"], original["agents"]);
    assert_eq!(logic["agenda"]["pre_agenda"], json!(["x1", "x2", "x3", "x4", "x5"]));
}

#[test]
fn reports_record_their_command() {
    let args = ["vote", "--method", "borda", "--input", "fixtures/v1.json"];
    let r = json(&ja(&args));
    assert_eq!(r["argv"], json!(args));
    assert_eq!(r["result"]["scores"], json!({"a": 10, "b": 5, "c": 6, "d": 9}));
    assert!(r.get("timing_ms").is_none());
    let timed = json(&ja(&["vote", "--method", "borda", "--input", "fixtures/v1.json", "--timing"]));
    assert!(timed["timing_ms"].is_u64());
}

#[test]
fn table_format_mirrors_profiles() {
    let text = stdout(&ja(&["aggregate", "--rule", "majority", "--input", "fixtures/pdp.json", "--format", "table"]));
    assert_eq!(
        text,
        "          p  q  d\nagent 1   +  +  +\nagent 2   +  -  -\nagent 3   -  +  -\nmajority  +  +  -\nconsistent: false\n"
    );
}
