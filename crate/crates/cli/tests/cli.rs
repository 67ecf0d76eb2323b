use std::process::{Command, Output};

fn braidlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_braidlab"))
        .args(args)
        .env_remove("BRAIDLAB_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn nf_prints_the_canonical_serialization() {
    let o = braidlab(&["nf", "B4: 1 -3 2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "B4: D^-1 | 3 4 2 1 | 3 1 2 4\n");
    let band = braidlab(&["nf", "--form", "bkl", "B4 band: +(2,1)"]);
    assert_eq!(band.status.code(), Some(0));
    assert!(stdout(&band).starts_with("B4: d^0 | "));
}

#[test]
fn wp_exit_codes() {
    assert_eq!(
        braidlab(&["wp", "--method", "handle", "B3: 1 2 1 -2 -1 -2"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        braidlab(&["wp", "B3: 1 2 1", "B3: 2 1 2"]).status.code(),
        Some(0)
    );
    assert_eq!(
        braidlab(&["wp", "--method", "burau", "B3: 1", "B3: 2"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        braidlab(&[
            "wp",
            "--method",
            "handle",
            "--budget",
            "1",
            "B3: 1 2 1 -2 -1 -2"
        ])
        .status
        .code(),
        Some(2)
    );
}

#[test]
fn malformed_input_is_a_usage_error() {
    assert_eq!(braidlab(&["nf", "B3: 1 7"]).status.code(), Some(64));
    assert_eq!(braidlab(&["nf", "3: 1"]).status.code(), Some(64));
    assert_eq!(braidlab(&["frobnicate"]).status.code(), Some(64));
    assert_eq!(
        braidlab(&["conj", "--kind", "stable", "B3: 1"])
            .status
            .code(),
        Some(64)
    );
    assert_eq!(braidlab(&["--help"]).status.code(), Some(0));
}

#[test]
fn conj_reports_sliding_circuit_and_graph() {
    let dir = std::env::temp_dir().join(format!("braidlab-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graph = dir.join("sc.tsv");
    let o = braidlab(&[
        "conj",
        "--kind",
        "sc",
        "B4: 3 2 1",
        "--emit-graph",
        graph.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("sc: 2 vertices"));
    let edges = std::fs::read_to_string(&graph).unwrap();
    assert!(edges.lines().all(|l| l.split('\t').count() == 3));
    assert_eq!(edges.lines().count(), 2);
    let budget = braidlab(&[
        "conj",
        "--kind",
        "sss",
        "--budget-vertices",
        "3",
        "B4: 1 3 2 1 1 2 2 1 3",
    ]);
    assert_eq!(budget.status.code(), Some(2));
    let search = braidlab(&["conj", "B4: 1 2 -3", "--target", "B4: 2 -3 1"]);
    assert_eq!(search.status.code(), Some(0));
    let apart = braidlab(&["conj", "B4: 1 2", "--target", "B4: 1"]);
    assert_eq!(apart.status.code(), Some(1));
}

#[test]
fn protocol_csv_is_byte_stable() {
    let args = ["--seed", "7", "protocol", "--scheme", "aag", "--runs", "4"];
    let a = braidlab(&args);
    let b = braidlab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "seed,scheme,n,key_agree,time_us");
    assert_eq!(
        lines[1..],
        ["0,aag,8,1,0", "1,aag,8,1,0", "2,aag,8,1,0", "3,aag,8,1,0"]
    );
    let markov = braidlab(&[
        "protocol", "--scheme", "ko", "--dist", "markov:3", "--runs", "2",
    ]);
    assert_eq!(markov.status.code(), Some(0));
}

#[test]
fn attack_csv() {
    let empty = braidlab(&["attack", "--seeds", ""]);
    assert_eq!(
        stdout(&empty),
        "seed,attack,length,memory,depth,dedup,peaks,success,steps,time_us\n"
    );
    let args = [
        "attack", "--attack", "lba-mem", "--memory", "3", "--dedup", "--seeds", "0..3,5", "--jobs",
        "2",
    ];
    let a = braidlab(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, braidlab(&args).stdout);
    let text = stdout(&a);
    let seeds: Vec<&str> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').next().unwrap())
        .collect();
    assert_eq!(seeds, ["0", "1", "2", "5"]);
    assert!(text
        .lines()
        .skip(1)
        .all(|l| l.contains(",lba-mem,redgar,3,1,1,0,")));
    assert_eq!(
        braidlab(&["attack", "--length", "furlong"]).status.code(),
        Some(64)
    );
}

#[test]
fn config_file_from_environment() {
    let dir = std::env::temp_dir().join(format!("braidlab-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let good = dir.join("good.toml");
    std::fs::write(&good, "n = 5\nmaster_seed = 3\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_braidlab"))
        .args(["gen", "--count", "3", "--length", "6"])
        .env("BRAIDLAB_CONFIG", &good)
        .output()
        .unwrap();
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().all(|l| l.starts_with("B5: ")));
    let bad = dir.join("bad.toml");
    std::fs::write(&bad, "n = 1\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_braidlab"))
        .args(["gen"])
        .env("BRAIDLAB_CONFIG", &bad)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn selftest_subset() {
    let o = braidlab(&["selftest", "--only", "1,4,6"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 3);
    assert!(text.lines().all(|l| l.contains(" PASS ")));
}
