//! The embedded reflection tables of the exceptional types.
//!
//! G_2 and F_4 print in full. For E_8 the program shows how the last
//! section of the table stores only a conjugating word w per row; the
//! reflection word is w, then the fixed palindromic seed for the highest
//! root of the E_6 subsystem, then w reversed.

use weyl_words::formulas::{coordinate_label, exceptional_table};
use weyl_words::RootSystem;

fn main() {
    for label in ["G2", "F4"] {
        let sys = RootSystem::build(label.parse().unwrap());
        println!("type {label}:");
        for entry in exceptional_table(&sys).unwrap() {
            println!(
                "  {:<12} ({})  {}",
                coordinate_label(&sys, &entry.root).unwrap(),
                entry.root,
                entry.word
            );
        }
        println!();
    }

    let e8 = RootSystem::build("E8".parse().unwrap());
    let table = exceptional_table(&e8).unwrap();
    println!(
        "type E8: {} reflections; the five longest words:",
        table.len()
    );
    let mut rows: Vec<_> = table.iter().collect();
    rows.sort_by_key(|e| e.length);
    for entry in rows.iter().rev().take(5) {
        println!("  ({})  {} letters", entry.root, entry.length);
        println!("    {}", entry.word);
    }
}
