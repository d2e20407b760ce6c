//! End-to-end tests against the real binary: JSON round trips, agreement
//! with the library predicates, and the exit-status contract.

use std::io::Write;
use std::process::{Command, Output, Stdio};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use aifam::constructions::{all_k_subsets, Interval};
use aifam::family::{Params, SetFamily};
use aifam::json::FamilyJson;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_aifam"))
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn aifam");
    child
        .stdin
        .as_mut()
        .expect("stdin piped")
        .write_all(input.as_bytes())
        .expect("write stdin");
    child.wait_with_output().expect("wait for aifam")
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("run aifam")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout was not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    })
}

#[test]
fn construct_outputs_round_trip() {
    let cases: Vec<Vec<&str>> = vec![
        vec!["construct", "--family", "star", "--n", "5", "--k", "2", "--x", "1"],
        vec!["construct", "--family", "br", "--n", "10", "--k", "4", "--r", "3"],
        vec!["construct", "--family", "hm", "--n", "9", "--k", "4"],
        vec!["construct", "--family", "bplus", "--n", "13", "--k", "3"],
        vec!["construct", "--family", "bplus", "--n", "13", "--k", "3", "--extra", "1,7,9"],
        vec!["construct", "--family", "lex", "--n", "9", "--k", "3", "--m", "20"],
    ];
    for args in cases {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let text = String::from_utf8(out.stdout.clone()).unwrap();
        let parsed: FamilyJson = serde_json::from_str(text.trim()).expect("family JSON");
        let family = parsed.clone().into_family().expect("valid family");
        // Canonical emission: re-serializing reproduces the output.
        let again = serde_json::to_string(&FamilyJson::from_family(&family)).unwrap();
        assert_eq!(again, text.trim(), "{args:?}");
    }
}

#[test]
fn check_agrees_with_library_on_fuzzed_families() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC11);
    for trial in 0..500u32 {
        let n = rng.random_range(4..=9u32);
        let k = rng.random_range(1..n.min(5));
        let params = Params::new(n, k).unwrap();
        let mut universe = all_k_subsets(Interval::new(1, n).unwrap(), k);
        universe.shuffle(&mut rng);
        let len = rng.random_range(0..=universe.len().min(25));
        universe.truncate(len);
        let family = SetFamily::from_masks(params, universe).unwrap();
        let text = serde_json::to_string(&FamilyJson::from_family(&family)).unwrap();

        let out = run_with_stdin(&["check", "--json-only"], &text);
        assert_eq!(out.status.code(), Some(0), "trial {trial}");
        let v = stdout_json(&out);
        assert_eq!(
            v["almost_intersecting"].as_bool().unwrap(),
            family.is_almost_intersecting(),
            "trial {trial}: {text}"
        );
        assert_eq!(v["size"].as_u64().unwrap() as usize, family.len());
    }
}

#[test]
fn check_matches_extremal_example() {
    let bp = run(&["construct", "--family", "bplus", "--n", "13", "--k", "3"]);
    let out = run_with_stdin(
        &["check", "--json-only"],
        String::from_utf8_lossy(&bp.stdout).trim(),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["almost_intersecting"], serde_json::json!(true));
    assert_eq!(v["size"], serde_json::json!(32));
    assert_eq!(v["bound"], serde_json::json!(32));
    assert_eq!(v["within_bound"], serde_json::json!(true));
}

#[test]
fn oversized_family_outside_range_still_exits_zero() {
    // The whole universe at n = 2k is almost intersecting and far above the
    // bound formula, but the proven range does not cover it.
    let params = Params::new(6, 3).unwrap();
    let all = SetFamily::from_masks(
        params,
        all_k_subsets(Interval::new(1, 6).unwrap(), 3),
    )
    .unwrap();
    let text = serde_json::to_string(&FamilyJson::from_family(&all)).unwrap();
    let out = run_with_stdin(&["check", "--json-only"], &text);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["almost_intersecting"], serde_json::json!(true));
    assert_eq!(v["within_bound"], serde_json::json!(false));
}

#[test]
fn partition_pipeline() {
    let bp = run(&["construct", "--family", "bplus", "--n", "13", "--k", "3"]);
    let out = run_with_stdin(
        &["partition", "--json-only"],
        String::from_utf8_lossy(&bp.stdout).trim(),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["ell"], serde_json::json!(1));
    assert_eq!(v["core"].as_array().unwrap().len(), 30);
    assert_eq!(
        v["pairs"],
        serde_json::json!([[[2, 3, 4], [1, 5, 6]]])
    );

    // Not almost intersecting: usage error.
    let bad = r#"{"n": 6, "k": 2, "sets": [[1,2],[3,4],[5,6]]}"#;
    let out = run_with_stdin(&["partition", "--json-only"], bad);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn shadow_subcommand() {
    let quad = r#"{"n": 4, "k": 2, "sets": [[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#;
    let out = run_with_stdin(&["shadow", "--b", "1", "--json-only"], quad);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["sets"], serde_json::json!([[1], [2], [3], [4]]));
}

#[test]
fn cross_subcommand() {
    let dir = std::env::temp_dir().join(format!("aifam-cross-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let a_path = dir.join("a.json");
    let b_path = dir.join("b.json");
    std::fs::write(&a_path, r#"{"n": 6, "k": 2, "sets": [[2,3]]}"#).unwrap();
    std::fs::write(&b_path, r#"{"n": 6, "k": 3, "sets": [[3,4,5]]}"#).unwrap();
    let out = run(&[
        "cross",
        "--json-only",
        a_path.to_str().unwrap(),
        b_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["cross_intersecting"], serde_json::json!(true));
    // 3-subsets of [6] meeting {2,3}: C(6,3) - C(4,3) = 16.
    assert_eq!(v["max_partner_size"], serde_json::json!(16));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn search_flagship_and_budget_exit() {
    let out = run(&["search", "--n", "13", "--k", "3", "--json-only"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["optimum"], serde_json::json!(32));
    assert_eq!(v["exhausted"], serde_json::json!(true));
    assert_eq!(v["witness_classes"], serde_json::json!(1));
    assert_eq!(v["intersecting_max"], serde_json::json!(66));
    assert!(v["stats"]["nodes"].as_u64().unwrap() > 0);

    let out = run(&[
        "search", "--n", "9", "--k", "2", "--budget-nodes", "1", "--json-only",
    ]);
    assert_eq!(out.status.code(), Some(3), "budget exhaustion exits 3");
    let v = stdout_json(&out);
    assert_eq!(v["exhausted"], serde_json::json!(false));
}

#[test]
fn search_witness_file() {
    let dir = std::env::temp_dir().join(format!("aifam-wit-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("witnesses.json");
    let out = run(&[
        "search", "--n", "7", "--k", "2", "--json-only", "--witnesses",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["optimum"], serde_json::json!(6));
    let families = doc["families"].as_array().unwrap();
    assert_eq!(families.len(), 1);
    let parsed: FamilyJson = serde_json::from_value(families[0].clone()).unwrap();
    let family = parsed.into_family().unwrap();
    assert!(family.is_almost_intersecting());
    assert_eq!(family.len(), 6);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_bounds_modes() {
    let out = run(&["verify-bounds", "--lemma", "all", "--kmax", "30", "--json-only"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    assert_eq!(v["lemmas"].as_array().unwrap().len(), 4);

    let out = run(&["verify-bounds", "--formulas", "--nmax", "12", "--json-only"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["formulas"]["mismatches"].as_array().unwrap().len(), 0);

    let out = run(&[
        "verify-bounds", "--thm24", "--trials", "50", "--seed", "3", "--jobs", "2",
        "--json-only",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["compression"]["all_preserved"], serde_json::json!(true));

    // No mode selected: usage error.
    let out = run(&["verify-bounds", "--json-only"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn diagnose_extremal_family() {
    let bp = run(&["construct", "--family", "bplus", "--n", "13", "--k", "3"]);
    let out = run_with_stdin(
        &["diagnose", "--json-only"],
        String::from_utf8_lossy(&bp.stdout).trim(),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    assert_eq!(v["ell"], serde_json::json!(1));
    assert_eq!(v["delta_f0"], serde_json::json!(30));
    assert_eq!(v["theorem_case"], serde_json::json!("i"));
    assert_eq!(v["bound_value"], serde_json::json!(32));
    assert_eq!(v["within_bound"], serde_json::json!(true));
}

#[test]
fn report_grid() {
    let out = run(&["report", "--grid", "k=3..4", "--nmax", "15", "--json-only"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let rows = v["rows"].as_array().unwrap();
    let find = |n: u64, k: u64| {
        rows.iter()
            .find(|r| r["n"] == serde_json::json!(n) && r["k"] == serde_json::json!(k))
            .unwrap_or_else(|| panic!("row ({n},{k})"))
    };
    assert_eq!(find(13, 3)["size_b_plus"], serde_json::json!(32));
    assert_eq!(find(13, 3)["case"], serde_json::json!("i"));
    assert_eq!(find(12, 3)["case"], serde_json::json!("outside"));
    assert_eq!(find(15, 4)["case"], serde_json::json!("ii"));

    let out = run(&["report", "--grid", "bogus", "--json-only"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["construct", "--family", "star", "--n", "5", "--k", "2"]).status.code(), Some(2));
    assert_eq!(run_with_stdin(&["check"], "not json").status.code(), Some(2));
    assert_eq!(
        run_with_stdin(&["check"], r#"{"n": 6, "k": 2, "sets": [[2,1]]}"#).status.code(),
        Some(2)
    );
    // Help goes to stdout and exits zero.
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn run_report_on_stderr_unless_json_only() {
    let with = run(&["construct", "--family", "hm", "--n", "9", "--k", "4"]);
    assert!(!with.stderr.is_empty());
    let without = run(&["construct", "--family", "hm", "--n", "9", "--k", "4", "--json-only"]);
    assert!(without.stderr.is_empty());
}
