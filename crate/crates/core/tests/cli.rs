use std::process::{Command, Output};

fn hopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hopf"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .env_remove("HOPF_MAX_DEGREE")
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    hopf(args).status.code().expect("exit code")
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(hopf(args).stdout).expect("utf-8")
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&["verify", "--family", "A", "--params", "1,0,0"]), 0);
    assert_eq!(
        code(&["verify", "--family", "cla35h", "--params", "2,0"]),
        0
    );
    assert_eq!(
        code(&["verify", "--file", "tests/data/corrupted_b.json"]),
        1
    );
    assert_eq!(
        code(&["verify", "--family", "cla35h", "--params", "2,1"]),
        1
    );
    assert_eq!(code(&["verify", "--family", "A", "--params", "1,0"]), 2);
    assert_eq!(code(&["verify", "--family", "Q"]), 2);
    assert_eq!(code(&["verify", "--file", "tests/data/missing.json"]), 2);
    assert_eq!(code(&["verify"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn family_lie_reads_a_lie_algebra_file() {
    assert_eq!(
        code(&[
            "verify",
            "--family",
            "lie",
            "--file",
            "tests/data/heis3.json"
        ]),
        0
    );
    assert_eq!(
        code(&[
            "verify",
            "--family",
            "lie",
            "--file",
            "tests/data/corrupted_b.json"
        ]),
        2
    );
    assert_eq!(
        code(&["verify", "--family", "A", "--file", "tests/data/heis3.json"]),
        2
    );
    let out = stdout(&[
        "lantern",
        "--family",
        "lie",
        "--file",
        "tests/data/heis3.json",
    ]);
    assert!(out.contains("Abelian(3)"), "{out}");
}

#[test]
fn primitives_json() {
    let out = stdout(&["--json", "primitives", "--family", "K"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["subspace"]["dimension"], 2);
    assert_eq!(v["subspace"]["degree_bound"], 5);
    assert_eq!(v["stable"], true);
}

#[test]
fn max_degree_from_flag_and_env() {
    let out = stdout(&[
        "--json",
        "--max-degree",
        "3",
        "coradical",
        "--family",
        "A",
        "--params",
        "1,0,0",
        "--level",
        "2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["subspace"]["degree_bound"], 3);
    assert_eq!(v["subspace"]["dimension"], 7);
    let out = Command::new(env!("CARGO_BIN_EXE_hopf"))
        .args([
            "--json",
            "p2",
            "--family",
            "D",
            "--params",
            "1,0,0,0,0,1,0,0",
        ])
        .env("HOPF_MAX_DEGREE", "4")
        .output()
        .unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["subspace"]["degree_bound"], 4);
    assert_eq!(v["subspace"]["dimension"], 3);
}

#[test]
fn extract_cla_round_trips_through_json() {
    let out = stdout(&[
        "--json",
        "extract-cla",
        "--family",
        "cla-b",
        "--params",
        "-1/2",
    ]);
    match hopf_core::json::load_str(&out).unwrap() {
        hopf_core::json::Loaded::Cla(l) => {
            assert_eq!(l, hopf_core::catalog::make_cla_b(&"-1/2".parse().unwrap()))
        }
        hopf_core::json::Loaded::Hopf(_) => panic!("expected a CLA"),
    }
}

#[test]
fn cohomology_both_modes() {
    let out = stdout(&[
        "--json",
        "--max-degree",
        "4",
        "cohomology",
        "--family",
        "A",
        "--params",
        "0,0,0",
        "--bidegree",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total_h2"], 2);
    let out = stdout(&["cohomology", "--family", "B", "--params", "1"]);
    assert!(out.contains("total dim H² = 2"), "{out}");
    assert_eq!(
        code(&[
            "cohomology",
            "--family",
            "A",
            "--params",
            "1,0,0",
            "--bidegree"
        ]),
        2
    );
}

#[test]
fn morphism_file() {
    assert_eq!(
        code(&["morphism", "--file", "tests/data/k_substitution.json"]),
        0
    );
    let bad = std::env::temp_dir().join("hopf_bad_morphism.json");
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/data/k_substitution.json"
    ))
    .unwrap();
    std::fs::write(&bad, text.replace("W - 1/2*X*Y^2", "W")).unwrap();
    assert_eq!(code(&["morphism", "--file", bad.to_str().unwrap()]), 1);
}

#[test]
fn presentation_file_matches_family() {
    let from_file = stdout(&["--json", "primitives", "--file", "tests/data/a100.json"]);
    let from_family = stdout(&["--json", "primitives", "--family", "A", "--params", "1,0,0"]);
    let (a, b): (serde_json::Value, serde_json::Value) = (
        serde_json::from_str(&from_file).unwrap(),
        serde_json::from_str(&from_family).unwrap(),
    );
    assert_eq!(a["subspace"], b["subspace"]);
}

#[test]
fn catalog_lists_every_entry() {
    let out = stdout(&["catalog"]);
    assert_eq!(
        out.lines().count(),
        hopf_core::catalog::list_catalog().len()
    );
    for line in out.lines() {
        let args: Vec<&str> = line
            .split("--")
            .skip(1)
            .flat_map(|a| {
                let mut it = a.trim().splitn(2, ' ');
                let flag = it.next().unwrap();
                let val = it.next().unwrap_or("").trim();
                [flag, val]
            })
            .collect();
        let mut cmd = vec!["verify"];
        let owned: Vec<String> = args
            .chunks(2)
            .flat_map(|c| [format!("--{}", c[0]), c[1].to_string()])
            .collect();
        cmd.extend(owned.iter().map(String::as_str));
        assert_eq!(code(&cmd), 0, "{line}");
    }
}

#[test]
fn replicate_reports_every_criterion() {
    let out = hopf(&["--json", "replicate"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"].as_array().unwrap().len(), 9);
}
