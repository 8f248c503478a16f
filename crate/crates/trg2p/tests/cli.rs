//! Smoke tests against the installed binary: formats, flags, exit codes.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trg2p"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    child
        .stdin
        .take()
        .unwrap()
        .write_all(stdin.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout_lines(out: &Output) -> Vec<String> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(str::to_string)
        .collect()
}

#[test]
fn tsv_lines_keep_input_order() {
    let out = run(&[], "koyun\nzamanında\n");
    assert_eq!(out.status.code(), Some(0));
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 2);
    assert!(lines[0].starts_with("koyun\t"), "{}", lines[0]);
    assert!(lines[1].starts_with("zamanında\t"), "{}", lines[1]);
    assert!(lines[1].contains("z a m a: n 1 n d a"), "{}", lines[1]);
}

#[test]
fn word_errors_mark_the_line_and_exit_code() {
    let out = run(&[], "!!!\nkoyun\n");
    assert_eq!(out.status.code(), Some(2));
    let lines = stdout_lines(&out);
    assert_eq!(lines[0], "!!!\tERROR:EmptyToken");
    assert!(lines[1].starts_with("koyun\t"));
    let out = run(&[], "w1x2\n");
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(stdout_lines(&out)[0], "w1x2\tERROR:UnknownGrapheme");
}

#[test]
fn variants_flag_adds_fast_speech_forms() {
    let plain = run(&[], "gidiyor\n");
    let with = run(&["--variants"], "gidiyor\n");
    let plain_line = &stdout_lines(&plain)[0];
    let with_line = &stdout_lines(&with)[0];
    assert!(!plain_line.contains("gj i d i j o;"), "{plain_line}");
    assert!(with_line.contains("gj i d i j o"), "{with_line}");
    assert!(
        with_line.split('\t').nth(1).unwrap().split(';').count()
            > plain_line.split('\t').nth(1).unwrap().split(';').count()
    );
}

#[test]
fn tts_mode_marks_stress_and_syllables() {
    let out = run(&["--mode", "tts"], "kısadır\n");
    let line = &stdout_lines(&out)[0];
    assert!(line.contains("k 1-s a-d +1 r"), "{line}");
}

#[test]
fn json_format_carries_provenance() {
    let out = run(&["--format", "json", "--mode", "tts"], "gidiyor\nw1x2\n");
    assert_eq!(out.status.code(), Some(2));
    let lines = stdout_lines(&out);
    assert_eq!(lines.len(), 2);

    let word: serde_json::Value = serde_json::from_str(&lines[0]).unwrap();
    assert_eq!(word["input"], "gidiyor");
    assert_eq!(word["surface"], "gidiyor");
    let prons = word["prons"].as_array().unwrap();
    assert!(!prons.is_empty());
    for p in prons {
        assert!(p["pron"].is_string());
        assert!(p["stress_syllable"].is_u64());
        assert!(!p["syllables"].as_array().unwrap().is_empty());
        assert_eq!(p["source"], "native");
        assert!(p["analysis_tags"].as_str().unwrap().contains("<V>"));
    }

    let err: serde_json::Value = serde_json::from_str(&lines[1]).unwrap();
    assert_eq!(err["input"], "w1x2");
    assert_eq!(err["error"], "UnknownGrapheme");
    assert!(err.get("prons").is_none());
}

#[test]
fn lexicon_dir_flag_loads_external_data() {
    let dir = tempfile::tempdir().unwrap();
    let src = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    for entry in std::fs::read_dir(&src).unwrap() {
        let entry = entry.unwrap();
        std::fs::copy(entry.path(), dir.path().join(entry.file_name())).unwrap();
    }
    let external = run(
        &["--lexicon-dir", dir.path().to_str().unwrap()],
        "Zonguldak'a\n",
    );
    assert_eq!(external.status.code(), Some(0));
    let built_in = run(&[], "Zonguldak'a\n");
    assert_eq!(external.stdout, built_in.stdout);

    let missing = run(&["--lexicon-dir", "/nonexistent-lexicon"], "koyun\n");
    assert_eq!(missing.status.code(), Some(1));
    assert!(!missing.stderr.is_empty());
}

#[test]
fn empty_input_is_clean_success() {
    let out = run(&[], "");
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
}
