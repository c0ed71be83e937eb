#![allow(dead_code)]

use std::process::Command;

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn cpo(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_cpo"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exited normally"),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

/// Runs and requires exit status 0.
pub fn ok(args: &[&str]) -> String {
    let r = cpo(args);
    assert_eq!(r.code, 0, "cpo {args:?} failed: {}", r.stderr);
    r.stdout
}

pub fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    serde_json::from_str(&ok(&full)).unwrap_or_else(|e| panic!("cpo {args:?}: not JSON: {e}"))
}
