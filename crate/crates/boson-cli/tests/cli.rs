//! End-to-end checks of the command-line surface: spec'd output shapes,
//! round-trip of printed values, exit codes, and verify determinism.

use std::process::{Command, Output};

fn boson(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_boson"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).to_string()
}

#[test]
fn straighten_matches_expected_text() {
    let out = boson(&["straighten", "[1:i,0:i]"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out).trim(),
        "q^-2*[0:i,1:i] + (1/(1-q^2))*[]"
    );
}

#[test]
fn form_on_sl2_generators() {
    let out = boson(&["form", "[1:i,0:i]", "[0:i,1:i]"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("algebraic: q^2/(1-q^2)^2"));
    assert!(text.contains("graphical: q^2/(1-q^2)^2"));
}

#[test]
fn worked_example_on_a2() {
    let out = boson(&[
        "--cartan",
        "a2",
        "form",
        "[0:i,8:j,1:i,2:i]",
        "[2:i,1:i,0:i,8:j]",
        "--engine",
        "graphical",
    ]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "(q^-2+2)/(1-q^2)^4");
}

#[test]
fn round_trip_of_printed_output() {
    // straighten output parses back and re-straightens to itself
    let out = boson(&["--cartan", "b2", "straighten", "[2:i,0:j,1:i]"]);
    assert!(out.status.success());
    let printed = stdout(&out).trim().to_string();
    let again = boson(&["--cartan", "b2", "straighten", &printed]);
    assert!(again.status.success());
    assert_eq!(stdout(&again).trim(), printed);
}

#[test]
fn form_accepts_element_syntax() {
    let out = boson(&[
        "form",
        "q^-2*[0:i,1:i] + (1/(1-q^2))*[]",
        "[1:i,0:i]",
        "--engine",
        "algebraic",
    ]);
    assert!(out.status.success());
    // (straighten(FE), FE) = (FE, FE) = 1/(1-q^2)^2
    assert_eq!(stdout(&out).trim(), "1/(1-q^2)^2");
}

#[test]
fn homdim_prints_fraction_and_series() {
    let out = boson(&["homdim", "[]", "[1:i,0:i]"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("1/(1-q^2)"));
    assert!(text.contains("series[-10..10]: 1*q^0 1*q^2"));
    // the forbidden direction is zero
    let out = boson(&["homdim", "[1:i,0:i]", "[0:i,1:i]"]);
    assert_eq!(stdout(&out).lines().next().unwrap().trim(), "0");
}

#[test]
fn gram_csv_and_kernel_json() {
    let out = boson(&[
        "--cartan",
        "a2",
        "gram",
        "--words",
        "[0:i,0:i,0:j];[0:i,0:j,0:i];[0:j,0:i,0:i]",
        "--kernel",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("word,[0:i,0:i,0:j]"));
    assert_eq!(lines.len(), 5);
    let json: serde_json::Value = serde_json::from_str(lines[4]).unwrap();
    assert_eq!(json["rank"], 2);
    assert_eq!(json["kernel"].as_array().unwrap().len(), 1);
}

#[test]
fn klr_subcommands() {
    let out = boson(&["--cartan", "a2", "klr-dim", "i,j", "j,i"]);
    assert!(out.status.success());
    assert!(stdout(&out).starts_with("q/("));
    let out = boson(&["klr-mul", "t{2,1}*e{i,i}", "t{2,1}*e{i,i}"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "0");
    // guard refusal names the bound and exits 3
    let out = boson(&[
        "--max-alpha",
        "2",
        "klr-mul",
        "e{i,i,i}",
        "e{i,i,i}",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound"));
}

#[test]
fn serre_output_parses_back() {
    let out = boson(&["--cartan", "a2", "serre", "i", "j", "0"]);
    assert!(out.status.success());
    let printed = stdout(&out).trim().to_string();
    let echo = boson(&["--cartan", "a2", "straighten", &printed]);
    assert_eq!(stdout(&echo).trim(), printed);
}

#[test]
fn exit_codes() {
    // input error
    let out = boson(&["form", "[0:z]", "[]"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("byte"));
    // verify success
    let out = boson(&["verify", "--suite", "sz"]);
    assert_eq!(out.status.code(), Some(0));
    // unknown suite
    let out = boson(&["verify", "--suite", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_is_deterministic_under_a_seed() {
    let a = boson(&["verify", "--suite", "klr", "--seed", "17"]);
    let b = boson(&["verify", "--suite", "klr", "--seed", "17"]);
    assert!(a.status.success() && b.status.success());
    let strip = |s: &str| {
        s.lines()
            .map(|l| l.split(" checks").next().unwrap_or(l).to_string())
            .collect::<Vec<_>>()
    };
    // identical check counts; timings may differ
    let ca = stdout(&a);
    let cb = stdout(&b);
    assert_eq!(strip(&ca), strip(&cb));
}

#[test]
fn json_format_is_lossless() {
    let out = boson(&["--format", "json", "form", "[0:i]", "[0:i]", "--engine", "algebraic"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(json["num"][0][1], "1");
    assert_eq!(json["den"][1][0], 2);
    assert_eq!(json["den"][1][1], "-1");
    let out = boson(&["--format", "json", "straighten", "[1:i,0:i]"]);
    let json: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(json.as_array().unwrap().len(), 2);
}

#[test]
fn config_file_cartan() {
    let dir = std::env::temp_dir().join("boson-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("b2.cfg");
    std::fs::write(
        &path,
        "labels i j\nrow 2 -2\nrow -1 2\nsymmetrizers 1 2\n",
    )
    .unwrap();
    let out = boson(&[
        "--cartan",
        path.to_str().unwrap(),
        "form",
        "[0:j]",
        "[0:j]",
        "--engine",
        "algebraic",
    ]);
    assert!(out.status.success());
    // d_j = 2, so the chord factor is 1/(1-q^4)
    assert_eq!(stdout(&out).trim(), "1/(1-q^4)");
    // invalid config is an input error
    std::fs::write(&path, "labels i\nrow 3\nsymmetrizers 1\n").unwrap();
    let out = boson(&["--cartan", path.to_str().unwrap(), "straighten", "[]"]);
    assert_eq!(out.status.code(), Some(2));
}
