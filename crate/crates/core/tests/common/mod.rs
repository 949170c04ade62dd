#![allow(dead_code)]

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use closedmine::fixtures::worked_example;

pub fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_closedmine"))
}

pub fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

pub fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

pub fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

/// Writes the worked example as a FIMI file inside `dir`.
pub fn example_file(dir: &Path) -> PathBuf {
    let path = dir.join("example.dat");
    std::fs::write(&path, worked_example().to_fimi()).unwrap();
    path
}
