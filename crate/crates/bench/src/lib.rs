//! Shared inputs for the benchmarks.

use std::path::PathBuf;

use tvartop_core::document::{parse, FanDocument};
use tvartop_core::DivisorialFan;

pub fn fixture_fan(name: &str) -> DivisorialFan {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures/fans").join(format!("{name}.json"));
    let text = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    parse::<FanDocument>(&text).and_then(|d| d.to_fan()).expect("fixture parses")
}
