//! Runs the `mgu` binary over the golden corpus and compares transcripts.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

pub const BIN: &str = env!("CARGO_BIN_EXE_mgu");
pub const COMMANDS: [&str; 3] = ["solve", "measure", "trace"];

pub fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

pub fn run_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .current_dir(dir)
        .output()
        .unwrap()
}

pub fn transcript(out: &Output) -> String {
    format!(
        "exit: {}\n--- stdout\n{}--- stderr\n{}",
        out.status.code().unwrap(),
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    )
}

pub fn corpus() -> Vec<String> {
    let mut names: Vec<String> = fs::read_dir(golden_dir())
        .unwrap()
        .filter_map(|e| {
            let name = e.unwrap().file_name().into_string().unwrap();
            name.strip_suffix(".cons").map(str::to_string)
        })
        .collect();
    names.sort();
    names
}

/// Compares every corpus file under every command. With `bless` set the
/// expected files are rewritten instead. Returns the number of comparisons
/// and a description of each mismatch.
pub fn check_corpus(bless: bool) -> (usize, Vec<String>) {
    let dir = golden_dir();
    let mut compared = 0;
    let mut mismatches = Vec::new();
    for name in corpus() {
        for cmd in COMMANDS {
            let file = format!("{name}.cons");
            let got = transcript(&run_in(&dir, &[cmd, &file]));
            let expected_path = dir.join(format!("{name}.{cmd}.out"));
            if bless {
                fs::write(&expected_path, &got).unwrap();
                continue;
            }
            compared += 1;
            match fs::read_to_string(&expected_path) {
                Ok(expected) if expected == got => {}
                Ok(expected) => mismatches.push(format!(
                    "{cmd} {file}:\n--- expected\n{expected}--- got\n{got}"
                )),
                Err(e) => mismatches.push(format!("{}: {e}", expected_path.display())),
            }
        }
    }
    (compared, mismatches)
}
