#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::Command;

pub const GOLDEN_BUILTINS: [&str; 7] = ["S4", "CP2", "CP2bar", "S1xS3", "S2xS2", "S2xS2_candidate", "CP2#CP2bar"];
pub const GOLDEN_COMMANDS: [&str; 6] = ["validate", "homology", "diamond", "form", "spin", "spinc"];

pub struct Run {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn trisect(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_trisect"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8"),
        stderr: String::from_utf8(out.stderr).expect("utf-8"),
    }
}

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn golden_name(command: &str, builtin: &str, json: bool) -> String {
    format!("{command}_{}.{}", builtin.replace('#', "_sum_"), if json { "json" } else { "txt" })
}

pub fn golden_args<'a>(command: &'a str, builtin: &'a str, json: bool) -> Vec<&'a str> {
    let mut args = vec![command, "--builtin", builtin];
    if json {
        args.push("--json");
    }
    args
}

/// Every golden case as `(file name, output of a fresh run)`.
pub fn golden_runs() -> Vec<(String, Run)> {
    let mut out = Vec::new();
    for c in GOLDEN_COMMANDS {
        for b in GOLDEN_BUILTINS {
            for json in [false, true] {
                out.push((golden_name(c, b, json), trisect(&golden_args(c, b, json))));
            }
        }
    }
    out
}
