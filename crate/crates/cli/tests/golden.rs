//! Set `TRISECT_BLESS=1` to rewrite the golden files from the current build.

mod common;

use std::fs;

use common::{golden_dir, golden_runs};

#[test]
fn golden_reports() {
    let bless = std::env::var_os("TRISECT_BLESS").is_some();
    let mut stale = Vec::new();
    for (name, run) in golden_runs() {
        assert_eq!(run.code, 0, "{name}: {}", run.stderr);
        let path = golden_dir().join(&name);
        if bless {
            fs::write(&path, &run.stdout).unwrap();
            continue;
        }
        let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
        if expected != run.stdout {
            stale.push(name);
        }
    }
    assert!(stale.is_empty(), "golden mismatch: {stale:?}");
}

#[test]
fn json_and_text_agree_on_values() {
    for b in ["CP2", "S1xS3", "CP2#CP2bar"] {
        let text = common::trisect(&["form", "--builtin", b]).stdout;
        let json: serde_json::Value = serde_json::from_str(&common::trisect(&["form", "--builtin", b, "--json"]).stdout).unwrap();
        let det = json["determinant"].to_string();
        assert!(text.contains(&format!("determinant: {det}\n")), "{b}");
        let sig = &json["signature"];
        assert!(text.contains(&format!("signature: ({}, {})", sig[0], sig[1])), "{b}");
    }
}
