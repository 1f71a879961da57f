//! Helpers shared by the CLI tests and the acceptance suite.
#![allow(dead_code)]

use std::path::PathBuf;
use std::process::{Command, Output};

pub const CASES: [&str; 4] = ["a", "b", "c", "d"];

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_splpat"))
}

pub fn fixture(case: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../fixtures/case_{case}.json"))
}

pub fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

/// Every golden file name with the arguments that produce it.
pub fn golden_invocations() -> Vec<(String, Vec<String>)> {
    let mut out = Vec::new();
    for case in CASES {
        let path = fixture(case).to_string_lossy().into_owned();
        out.push((
            format!("assess_case_{case}.txt"),
            vec!["assess".into(), path.clone()],
        ));
        out.push((
            format!("assess_case_{case}.json"),
            vec![
                "assess".into(),
                path.clone(),
                "--format".into(),
                "machine".into(),
            ],
        ));
        out.push((
            format!("compare_case_{case}.txt"),
            vec!["compare".into(), path],
        ));
    }
    out
}

pub fn run(args: &[String]) -> Output {
    bin().args(args).output().expect("binary runs")
}
