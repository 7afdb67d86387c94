//! Runs the bundled catalog spec file and prints the text report; pass
//! `--json` for the canonical JSON document.

use diagonal::cli::{parse_spec_file, run_reports};

pub const CATALOG: &str = include_str!("catalog.json");

pub fn run_example() -> String {
    let spec = parse_spec_file(CATALOG).unwrap();
    run_reports(&spec).unwrap().to_text()
}

#[allow(dead_code)]
fn main() {
    if std::env::args().any(|a| a == "--json") {
        let spec = parse_spec_file(CATALOG).unwrap();
        print!("{}", run_reports(&spec).unwrap().to_canonical_json());
    } else {
        print!("{}", run_example());
    }
}
