//! Drives the `sweepmap` binary as a subprocess.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn sweepmap(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_sweepmap"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn sweepmap");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn text_pipeline_reproduces_paths() {
    let listed = sweepmap(&["enumerate", "--k", "2", "--n", "4"], "");
    assert!(listed.status.success());
    let swept = sweepmap(&["sweep", "--emit", "sigma"], &stdout(&listed));
    assert!(swept.status.success());
    let inverted = sweepmap(&["invert", "--emit", "path"], &stdout(&swept));
    assert!(inverted.status.success());
    assert_eq!(stdout(&inverted), stdout(&listed));
    assert_eq!(stdout(&listed).lines().count(), 55);
}

#[test]
fn json_pipeline_reproduces_path_field() {
    let listed = sweepmap(&["enumerate", "--k", "3", "--n", "3"], "");
    let swept = sweepmap(&["--format", "json", "sweep"], &stdout(&listed));
    let inverted = sweepmap(&["--format", "json", "invert"], &stdout(&swept));
    assert!(inverted.status.success());
    let swept: Vec<serde_json::Value> = stdout(&swept)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    let inverted: Vec<serde_json::Value> = stdout(&inverted)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(swept.len(), 22);
    for (s, i) in swept.iter().zip(&inverted) {
        assert_eq!(s["path"], i["preimage"]);
        assert_eq!(s["tau"], i["tau"]);
        assert_eq!(s["sigma"], i["sigma"]);
    }
}

#[test]
fn text_and_json_carry_the_same_data() {
    let text = sweepmap(&["invert", "--sigma", "SWWSWWWSWWWWWWW"], "");
    let json = sweepmap(
        &["--format", "json", "invert", "--sigma", "SWWSWWWSWWWWWWW"],
        "",
    );
    let v: serde_json::Value = serde_json::from_str(stdout(&json).trim()).unwrap();
    let tau: Vec<String> = v["tau"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t.to_string())
        .collect();
    assert_eq!(
        stdout(&text),
        format!(
            "tau: {}\npreimage: {}\n",
            tau.join(" "),
            v["preimage"].as_str().unwrap()
        )
    );
    assert_eq!((v["k"].as_u64(), v["n"].as_u64()), (Some(4), Some(3)));
}

#[test]
fn exit_codes() {
    assert_eq!(
        sweepmap(&["verify", "--k", "2", "--n", "3"], "")
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        sweepmap(&["invert", "--sigma", "SWWS"], "").status.code(),
        Some(2)
    );
    assert_eq!(
        sweepmap(&["sweep", "--path", "WS"], "").status.code(),
        Some(2)
    );
    assert_eq!(sweepmap(&["nonsense"], "").status.code(), Some(2));
    assert_eq!(sweepmap(&["--help"], "").status.code(), Some(0));
}

#[test]
fn bench_is_deterministic() {
    let a = sweepmap(&["random", "--k", "2", "--n", "100", "--seed", "3"], "");
    let b = sweepmap(&["random", "--k", "2", "--n", "100", "--seed", "3"], "");
    assert_eq!(stdout(&a), stdout(&b));
    for implementation in ["naive", "fast"] {
        let o = sweepmap(
            &[
                "bench",
                "--k",
                "2",
                "--scale",
                "300",
                "--impl",
                implementation,
                "--seed",
                "3",
            ],
            "",
        );
        assert!(o.status.success());
        assert!(stdout(&o).starts_with(&format!("impl={implementation} k=2 n=100 L=300 seed=3")));
    }
}
