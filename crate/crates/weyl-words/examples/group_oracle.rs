//! Lengths without geometry: enumerate a whole Weyl group breadth-first
//! by right multiplication, so the depth at which each reflection matrix
//! first appears is its Coxeter length. Compare that against the
//! inversion-set count and the closed-form word length.

use weyl_words::formulas::reflection_word;
use weyl_words::verify::{small_group_oracle, small_group_oracle_bounded};
use weyl_words::RootSystem;

fn main() {
    for label in ["A3", "B3", "D4", "F4", "G2"] {
        let sys = RootSystem::build(label.parse().unwrap());
        let oracle = small_group_oracle(&sys).unwrap();
        let mut lengths: Vec<usize> = oracle.values().copied().collect();
        lengths.sort();
        println!(
            "{label}: |W| = {}, reflection lengths {lengths:?}",
            sys.label().weyl_order()
        );
        for root in sys.positive_roots() {
            let by_inversions = sys.reflection_length(root).unwrap();
            let by_word = reflection_word(&sys, root).unwrap().len();
            assert_eq!(oracle[root], by_inversions);
            assert_eq!(oracle[root], by_word);
        }
        println!("     BFS depth = inversion count = word length, all roots");
    }

    // The bound is a guard, not a tuning knob: E6 is past the default.
    let e6 = RootSystem::build("E6".parse().unwrap());
    match small_group_oracle_bounded(&e6, 50_000) {
        Err(e) => println!("E6: {e}"),
        Ok(_) => unreachable!("|W(E6)| = 51840 exceeds the bound"),
    }
}
