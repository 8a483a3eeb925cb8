//! Keeps the shipped fixture documents canonical and valid.
//!
//! Run with `TMDOC_REGEN_FIXTURES=1` to rewrite the files from the
//! builders in `common`.

mod common;

use std::fs;

use tmdoc::docio::{parse_document, serialize_document, validate_document, ValidateOptions};

#[test]
fn fixtures_match_builders_in_canonical_form() {
    let regen = std::env::var_os("TMDOC_REGEN_FIXTURES").is_some();
    for (name, doc) in common::fixture_names().iter().zip(common::fixture_docs()) {
        let path = common::fixture_path(name);
        let canonical = serialize_document(&doc);
        if regen {
            fs::write(&path, &canonical).unwrap();
            continue;
        }
        let on_disk = fs::read_to_string(&path)
            .unwrap_or_else(|e| panic!("reading {name}: {e}"));
        assert_eq!(on_disk, canonical, "{name} is not canonical");
    }
}

#[test]
fn fixtures_parse_and_validate_cleanly() {
    for name in common::fixture_names() {
        let text = fs::read_to_string(common::fixture_path(name)).unwrap();
        let doc = parse_document(&text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let report = validate_document(&doc, ValidateOptions::default());
        assert!(
            report.errors.is_empty(),
            "{name} has validation errors:\n{report}"
        );
        // Round-trip: canonical serialization parses back to the same value.
        let again = parse_document(&serialize_document(&doc)).unwrap();
        assert_eq!(doc, again);
    }
}
