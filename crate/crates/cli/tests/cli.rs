//! End-to-end tests through the compiled binary: output contracts, exit
//! codes, and byte-level determinism of output files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pappus-steiner"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn tmp_path(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("pappus-steiner-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn signature_example() {
    let out = run(&["signature", "-r", "-1", "-s", "3"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("\"x\":\"586/243\""), "{text}");
    assert!(text.contains("\"y\":\"343/243\""), "{text}");
    assert!(text.contains("\"match\":true"), "{text}");
}

#[test]
fn signature_fixed_point() {
    let out = run(&["signature", "-r", "2", "-s", "2"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    // [2, 1] is fixed under the map
    assert!(
        text.contains("\"signature\":{\"x\":\"2\",\"y\":\"1\"}"),
        "{text}"
    );
    assert!(
        text.contains("\"map_image\":{\"x\":\"2\",\"y\":\"1\"}"),
        "{text}"
    );
}

#[test]
fn signature_invalid_parameter_exits_2() {
    let out = run(&["signature", "-r", "1", "-s", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn iterate_cycle_over_f47() {
    let out = run(&[
        "iterate", "--field", "fp:47", "-x", "21", "-y", "2", "-n", "3",
    ]);
    assert!(out.status.success());
    let lines: Vec<String> = stdout_str(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 4);
    assert!(
        lines[3].contains("\"x\":21") && lines[3].contains("\"y\":2"),
        "{}",
        lines[3]
    );
}

#[test]
fn iterate_two_cycle_rational() {
    let out = run(&[
        "iterate", "--field", "rational", "-x", "5", "-y", "4", "-n", "2",
    ]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[1].contains("\"x\":\"8\"") && lines[1].contains("\"y\":\"16\""));
    assert!(lines[2].contains("\"x\":\"5\"") && lines[2].contains("\"y\":\"4\""));
}

#[test]
fn iterate_from_diagonal_exits_3() {
    let out = run(&["iterate", "--field", "rational", "-x", "3", "-y", "3"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn iterate_stops_at_w1_mid_orbit() {
    let out = run(&[
        "iterate", "--field", "rational", "-x", "5", "-y", "6", "-n", "9",
    ]);
    assert!(out.status.success(), "mid-orbit W1 is a normal stop");
    let text = stdout_str(&out);
    assert!(text.contains("\"stratum\":\"W2\""), "{text}");
    assert!(text.contains("\"stopped_at\":1"), "{text}");
}

#[test]
fn iterate_bad_field_exits_2() {
    let out = run(&["iterate", "--field", "fp:91", "-x", "1", "-y", "2"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["iterate", "--field", "complex", "-x", "1", "-y", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn preimage_examples() {
    let out = run(&["preimage", "--field", "rational", "-x", "5", "-y", "4"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("\"count\":2"), "{text}");
    assert!(text.contains("\"x\":\"8/3\""), "{text}");

    let out = run(&["preimage", "--field", "rational", "-x", "8", "-y", "16"]);
    let text = stdout_str(&out);
    assert!(text.contains("\"ramified\":true"), "{text}");
    assert!(text.contains("\"count\":1"), "{text}");
}

#[test]
fn verify_targets_pass() {
    for target in ["steiner", "involution", "harmonic"] {
        let out = run(&["verify", target, "--trials", "10", "--seed", "7"]);
        assert!(out.status.success(), "verify {target} failed");
        assert!(stdout_str(&out).contains("\"passed\":true"));
    }
}

#[test]
fn verify_conics_includes_uniqueness() {
    let out = run(&["verify", "conics", "--trials", "10", "--seed", "7"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(text.contains("\"unique_label\":\"2/7\""), "{text}");
    assert!(text.contains("\"iota_matrix_identity\":true"), "{text}");
}

#[test]
fn verify_unknown_target_exits_2() {
    let out = run(&["verify", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let a = run(&["verify", "leisenring", "--trials", "5", "--seed", "11"]);
    let b = run(&["verify", "leisenring", "--trials", "5", "--seed", "11"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn census_row_for_p47() {
    let out = run(&["census", "--from", "37", "--to", "60", "--period", "3"]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    assert!(
        text.contains("p,n,exists,predicted,agrees,witness"),
        "{text}"
    );
    assert!(
        text.contains("47,3,true,true,true,21:2;39:6;24:28"),
        "{text}"
    );
    assert!(text.contains("disagree=0"), "{text}");
}

#[test]
fn census_json_format() {
    let out = run(&[
        "census", "--from", "37", "--to", "45", "--period", "4", "--format", "json",
    ]);
    assert!(out.status.success());
    let text = stdout_str(&out);
    let first = text.lines().next().expect("at least one row");
    let v: serde_json::Value = serde_json::from_str(first).expect("json line");
    assert_eq!(v["p"], 37);
    assert_eq!(v["n"], 4);
}

#[test]
fn census_budget_refusal_exits_2() {
    let out = run(&[
        "census", "--from", "37", "--to", "300", "--period", "3", "--budget", "100",
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["census", "--from", "37", "--to", "60", "--period", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn census_file_output_is_deterministic() {
    let p1 = tmp_path("census1.csv");
    let p2 = tmp_path("census2.csv");
    for p in [&p1, &p2] {
        let out = run(&[
            "census",
            "--from",
            "37",
            "--to",
            "80",
            "--period",
            "4",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let a = std::fs::read(&p1).unwrap();
    let b = std::fs::read(&p2).unwrap();
    assert!(!a.is_empty());
    assert_eq!(a, b);
    let _ = std::fs::remove_file(p1);
    let _ = std::fs::remove_file(p2);
}

#[test]
fn raster_pgm_output() {
    let pgm1 = tmp_path("basin1.pgm");
    let pgm2 = tmp_path("basin2.pgm");
    let csv = tmp_path("basin.csv");
    for p in [&pgm1, &pgm2] {
        let out = run(&[
            "raster",
            "--width",
            "32",
            "--height",
            "32",
            "--max-iter",
            "120",
            "--out",
            p.to_str().unwrap(),
            "--csv",
            csv.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let a = std::fs::read(&pgm1).unwrap();
    let b = std::fs::read(&pgm2).unwrap();
    assert_eq!(a, b, "PGM output must be byte-identical across runs");
    assert!(a.starts_with(b"P5\n"));
    let text = String::from_utf8(a.clone()).unwrap_or_default();
    // header documents the label-to-gray map
    assert!(String::from_utf8_lossy(&a).contains("origin_attractor=64"));
    drop(text);
    // 32 x 32 payload bytes after the maxval line ("255" also appears in
    // the comment, so anchor on the preceding newline)
    let header_end = a.windows(5).position(|w| w == b"\n255\n").unwrap() + 5;
    assert_eq!(a.len() - header_end, 32 * 32);

    let rows = std::fs::read_to_string(&csv).unwrap();
    assert!(rows.starts_with("row,col,x,y,label,steps"));
    assert_eq!(rows.lines().count(), 1 + 32 * 32);
    for p in [pgm1, pgm2, csv] {
        let _ = std::fs::remove_file(p);
    }
}

#[test]
fn raster_budget_exceeded_exits_2() {
    let out = run(&[
        "raster",
        "--width",
        "4000",
        "--height",
        "4000",
        "--budget",
        "1000",
        "--out",
        tmp_path("never.pgm").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}
