//! End-to-end runs of the installed binary against the shipped fixtures.

use std::path::PathBuf;
use std::process::Command;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn infratopo(args: &[&str]) -> Run {
    let output = Command::new(env!("CARGO_BIN_EXE_infratopo"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: output.status.code().expect("no signal"),
        stdout: String::from_utf8(output.stdout).expect("stdout is utf-8"),
        stderr: String::from_utf8(output.stderr).expect("stderr is utf-8"),
    }
}

fn fixture(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(name);
    path.to_str().expect("fixture path is utf-8").to_string()
}

/// Output lines that are results rather than `# `-prefixed report context.
fn results(run: &Run) -> Vec<&str> {
    run.stdout.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn validate_accepts_the_shipped_fixtures() {
    for name in ["ex41.json", "ex42.json", "s3.json"] {
        let run = infratopo(&["validate", &fixture(name)]);
        assert_eq!(run.code, 0, "{name}: {}", run.stderr);
        assert!(run.stdout.contains("valid: "), "{name} output: {}", run.stdout);
    }
    let run = infratopo(&["validate", &fixture("ex41.json")]);
    assert_eq!(results(&run)[0], "valid: 5 open sets over {a,b,c,d}");
    assert_eq!(
        results(&run)[1],
        r#"{"ground":["a","b","c","d"],"opens":[[],["a"],["b"],["a","c"],["a","b","c","d"]]}"#
    );
}

#[test]
fn validate_reemission_is_a_fixed_point() {
    let first = infratopo(&["validate", &fixture("ex42.json")]);
    let emitted = results(&first)[1];
    let path = std::env::temp_dir().join(format!("infratopo-roundtrip-{}.json", std::process::id()));
    std::fs::write(&path, emitted).expect("temp file writes");
    let second = infratopo(&["validate", path.to_str().expect("utf-8 path")]);
    assert_eq!(second.code, 0);
    assert_eq!(results(&second)[1], emitted);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn validate_rejects_and_complete_repairs_a_gappy_family() {
    let path = std::env::temp_dir().join(format!("infratopo-gappy-{}.json", std::process::id()));
    std::fs::write(&path, r#"{"ground":["a","b"],"opens":[["a"],["b"],["a","b"]]}"#)
        .expect("temp file writes");
    let path = path.to_str().expect("utf-8 path");

    let rejected = infratopo(&["validate", path]);
    assert_eq!(rejected.code, 1);
    assert!(rejected.stderr.contains("the empty set is not a member"), "{}", rejected.stderr);

    let repaired = infratopo(&["validate", path, "--complete"]);
    assert_eq!(repaired.code, 0, "{}", repaired.stderr);
    assert!(repaired.stdout.contains("# completed: added {{}}"), "{}", repaired.stdout);
    assert_eq!(results(&repaired)[0], "valid: 4 open sets over {a,b}");
    let _ = std::fs::remove_file(path);
}

#[test]
fn validate_rejects_files_that_do_not_parse() {
    let missing = infratopo(&["validate", "/no/such/file.json"]);
    assert_eq!(missing.code, 1);

    let path = std::env::temp_dir().join(format!("infratopo-bad-{}.json", std::process::id()));
    std::fs::write(&path, "not json").expect("temp file writes");
    let garbled = infratopo(&["validate", path.to_str().expect("utf-8 path")]);
    assert_eq!(garbled.code, 1);
    assert!(garbled.stderr.contains("not a valid space file"), "{}", garbled.stderr);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn op_computes_the_closure_example() {
    let run = infratopo(&["op", &fixture("ex41.json"), "--set", "a", "--which", "closure"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(results(&run), vec!["{a,c,d}"]);
}

#[test]
fn op_covers_every_operator() {
    let cases = [
        ("interior", "a,b,d", "{a,b}"),
        ("closure", "b", "{b,d}"),
        ("exterior", "b", "{a,c}"),
        ("boundary", "b", "{d}"),
        ("derived", "a", "{c,d}"),
        ("delta-interior", "a,c", "{a,c}"),
        ("delta-closure", "b", "{b,d}"),
        ("delta-frontier", "b", "{d}"),
    ];
    for (which, set, expected) in cases {
        let run = infratopo(&["op", &fixture("ex41.json"), "--set", set, "--which", which]);
        assert_eq!(run.code, 0, "{which}: {}", run.stderr);
        assert_eq!(results(&run), vec![expected], "{which} of {set}");
    }
}

#[test]
fn op_literal_delta_closure_changes_the_answer() {
    let default = infratopo(&["op", &fixture("ex41.json"), "--set", "b", "--which", "delta-closure"]);
    assert_eq!(results(&default), vec!["{b,d}"]);
    let literal = infratopo(&[
        "op",
        &fixture("ex41.json"),
        "--set",
        "b",
        "--which",
        "delta-closure",
        "--literal-delta-closure",
    ]);
    assert_eq!(results(&literal), vec!["{b}"]);
}

#[test]
fn op_accepts_the_empty_set() {
    let run = infratopo(&["op", &fixture("ex41.json"), "--set", "", "--which", "closure"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(results(&run), vec!["{}"]);
}

#[test]
fn classify_matches_the_worked_example() {
    let run = infratopo(&["classify", &fixture("ex41.json"), "--set", "c,d"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let lines = results(&run);
    assert!(lines.contains(&"e-star-open"));
    assert!(!lines.contains(&"e-open"));
    assert_eq!(
        lines,
        vec![
            "e-star-open",
            "pre-closed",
            "semi-closed",
            "delta-pre-closed",
            "e-closed",
            "e-star-closed",
            "beta-closed",
        ]
    );
}

#[test]
fn classify_rejects_unknown_elements() {
    let run = infratopo(&["classify", &fixture("ex41.json"), "--set", "a,z"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("unknown element"), "{}", run.stderr);
}

#[test]
fn families_lists_the_members_of_a_class() {
    let run = infratopo(&["families", &fixture("ex41.json"), "--class", "e-open"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(
        results(&run),
        vec!["{{},{a},{b},{a,b},{c},{a,c},{b,c},{a,b,c},{b,d},{a,b,d},{a,c,d},{b,c,d},{a,b,c,d}}"]
    );
}

#[test]
fn families_rejects_an_unknown_class_listing_the_valid_ones() {
    let run = infratopo(&["families", &fixture("ex41.json"), "--class", "frobnitz"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("unknown class"), "{}", run.stderr);
    assert!(run.stderr.contains("delta-pre-open"), "{}", run.stderr);
}

#[test]
fn check_single_claim_reports_the_pinned_witness() {
    let run = infratopo(&["check", &fixture("ex41.json"), "--theorem", "T2.19.ii", "--jsonl"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(
        results(&run),
        vec![
            r#"{"checked":256,"space_opens":"{{},{a},{b},{a,c},{a,b,c,d}}","status":"fail","theorem":"T2.19.ii","witnesses":[["{a}","{b}"]]}"#
        ]
    );
}

#[test]
fn check_enumerated_known_fail_exits_zero_without_strict() {
    let run = infratopo(&["check", "--enumerated", "3", "--theorem", "T2.19.ii"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let lines = results(&run);
    assert_eq!(lines.len(), 1);
    assert!(lines[0].starts_with("fail"), "{}", lines[0]);
    assert!(lines[0].contains("KNOWN-FAIL"), "{}", lines[0]);
}

#[test]
fn check_strict_exits_two_only_on_check_failures() {
    let known_fail = infratopo(&["check", "--enumerated", "3", "--theorem", "T2.19.ii", "--strict"]);
    assert_eq!(known_fail.code, 0, "{}", known_fail.stderr);

    let with_check_fail = infratopo(&["check", "--enumerated", "2", "--strict"]);
    assert_eq!(with_check_fail.code, 2, "{}", with_check_fail.stderr);

    let relaxed = infratopo(&["check", "--enumerated", "2"]);
    assert_eq!(relaxed.code, 0, "{}", relaxed.stderr);
}

#[test]
fn check_rejects_an_unknown_theorem_listing_the_valid_ids() {
    let run = infratopo(&["check", "--enumerated", "2", "--theorem", "T99.x"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("unknown theorem id"), "{}", run.stderr);
    assert!(run.stderr.contains("T2.19.ii"), "{}", run.stderr);
}

#[test]
fn check_requires_exactly_one_input() {
    let neither = infratopo(&["check"]);
    assert_eq!(neither.code, 1);
    let both = infratopo(&["check", &fixture("s3.json"), "--enumerated", "2"]);
    assert_eq!(both.code, 1);
}

#[test]
fn enumerate_count_matches_the_small_census() {
    let run = infratopo(&["enumerate", "--n", "3", "--count-only"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(results(&run), vec!["45"]);
}

#[test]
fn enumerate_streams_every_space_once() {
    let run = infratopo(&["enumerate", "--n", "2"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(
        results(&run),
        vec![
            "{{},{a,b}}",
            "{{},{a},{a,b}}",
            "{{},{b},{a,b}}",
            "{{},{a},{b},{a,b}}",
        ]
    );
}

#[test]
fn enumerate_jsonl_lines_parse() {
    let run = infratopo(&["enumerate", "--n", "2", "--jsonl"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let lines = results(&run);
    assert_eq!(lines.len(), 4);
    for line in &lines {
        let value: serde_json::Value = serde_json::from_str(line).expect("line is JSON");
        assert_eq!(value["n"], 2);
        assert!(value["opens"].is_array());
    }
}

#[test]
fn enumerate_shards_partition_the_census() {
    let whole = infratopo(&["enumerate", "--n", "3"]);
    let whole_lines: Vec<String> = results(&whole).iter().map(|s| s.to_string()).collect();
    let mut merged: Vec<String> = Vec::new();
    for index in 0..3 {
        let shard = infratopo(&["enumerate", "--n", "3", "--shard", &format!("{index}/3")]);
        assert_eq!(shard.code, 0, "{}", shard.stderr);
        merged.extend(results(&shard).iter().map(|s| s.to_string()));
    }
    assert_eq!(merged.len(), whole_lines.len());
    let merged_set: std::collections::BTreeSet<_> = merged.iter().collect();
    let whole_set: std::collections::BTreeSet<_> = whole_lines.iter().collect();
    assert_eq!(merged_set, whole_set);
}

#[test]
fn enumerate_rejects_bad_arguments() {
    assert_eq!(infratopo(&["enumerate", "--n", "6", "--count-only"]).code, 1);
    assert_eq!(infratopo(&["enumerate", "--n", "3", "--shard", "3/3"]).code, 1);
    assert_eq!(infratopo(&["enumerate", "--n", "3", "--shard", "nope"]).code, 1);
}

#[test]
fn up_to_iso_collapses_relabelings() {
    let run = infratopo(&["enumerate", "--n", "3", "--up-to-iso", "--count-only"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(results(&run), vec!["14"]);
}

#[test]
fn hunt_finds_the_minimal_separating_set() {
    let run = infratopo(&[
        "hunt",
        &fixture("ex41.json"),
        "--from",
        "delta-pre-open",
        "--not-to",
        "pre-open",
    ]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(results(&run), vec!["{c} in {{},{a},{b},{a,c},{a,b,c,d}}"]);
}

#[test]
fn hunt_reports_universal_implications_as_witnessless() {
    let run = infratopo(&["hunt", "--n", "3", "--from", "open", "--not-to", "pre-open"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    assert_eq!(results(&run), vec!["no counterexample"]);
}

#[test]
fn hunt_rejects_identical_classes() {
    let run = infratopo(&["hunt", "--n", "2", "--from", "open", "--not-to", "open"]);
    assert_eq!(run.code, 1);
    assert!(run.stderr.contains("different classes"), "{}", run.stderr);
}

#[test]
fn implications_json_has_one_row_per_class() {
    let run = infratopo(&["implications", &fixture("ex41.json")]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let value: serde_json::Value = serde_json::from_str(results(&run)[0]).expect("matrix is JSON");
    assert_eq!(value["classes"].as_array().expect("classes array").len(), 11);
    assert_eq!(value["cells"].as_array().expect("cells array").len(), 11);

    let duals = infratopo(&["implications", &fixture("ex41.json"), "--duals"]);
    let value: serde_json::Value = serde_json::from_str(results(&duals)[0]).expect("matrix is JSON");
    assert_eq!(value["classes"].as_array().expect("classes array").len(), 22);
}

#[test]
fn implications_dot_contains_the_universal_edges() {
    let run = infratopo(&["implications", "--n", "3", "--dot"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let dot = results(&run).join("\n");
    assert!(dot.starts_with("digraph implications {"), "{dot}");
    assert!(dot.contains(r#""open" -> "pre-open""#), "{dot}");
    assert!(dot.contains(r#""open" -> "semi-open""#), "{dot}");
    assert!(!dot.contains(r#""pre-open" -> "open""#), "{dot}");
}

#[test]
fn jobs_flag_never_changes_result_bytes() {
    let one = infratopo(&["check", "--enumerated", "3", "--jsonl", "--jobs", "1"]);
    let four = infratopo(&["check", "--enumerated", "3", "--jsonl", "--jobs", "4"]);
    assert_eq!(one.code, four.code);
    assert_eq!(results(&one), results(&four));

    let count_two = infratopo(&["enumerate", "--n", "4", "--count-only", "--jobs", "2"]);
    assert_eq!(results(&count_two), vec!["2271"]);
}

#[test]
fn headers_echo_the_command_and_digest_the_input() {
    let run = infratopo(&["op", &fixture("ex41.json"), "--set", "a", "--which", "closure"]);
    let lines: Vec<&str> = run.stdout.lines().collect();
    assert!(lines[0].starts_with("# command: infratopo op "), "{}", lines[0]);
    assert!(lines[1].starts_with("# input: "), "{}", lines[1]);
    assert!(lines[1].contains("sha256="), "{}", lines[1]);
    assert!(run.stderr.contains("# elapsed:"), "{}", run.stderr);
}

#[test]
fn delta_symbol_is_accepted_in_class_names() {
    let run = infratopo(&["families", &fixture("ex41.json"), "--class", "δ-pre-open"]);
    assert_eq!(run.code, 0, "{}", run.stderr);
    let plain = infratopo(&["families", &fixture("ex41.json"), "--class", "delta-pre-open"]);
    assert_eq!(results(&run), results(&plain));
}
