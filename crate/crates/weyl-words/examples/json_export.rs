//! Serialize a full reflection table to JSON, read it back, and re-verify
//! every entry from the deserialized data alone.

use weyl_words::cli::{export_record, ExportRecord};
use weyl_words::verify::verify_entry;
use weyl_words::{Root, RootSystem, Word};

fn main() {
    let c3 = RootSystem::build("C3".parse().unwrap());
    let json = serde_json::to_string_pretty(&export_record(&c3)).unwrap();
    println!("{json}");

    let record: ExportRecord = serde_json::from_str(&json).unwrap();
    let sys = RootSystem::build(record.type_label.parse().unwrap());
    let mut ok = 0;
    for entry in &record.entries {
        let root = Root(entry.root_coeffs.clone());
        let word = Word::parse(&entry.word).unwrap();
        assert!(verify_entry(&sys, &root, &word).unwrap());
        ok += 1;
    }
    eprintln!("re-imported {ok}/{} entries verified", record.entries.len());
}
