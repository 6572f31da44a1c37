//! The closed-form words of the classical types, grouped by family.
//!
//! Type C_4 is printed in full: six words for the e_i - e_j reflections,
//! four for the doubled coordinates 2e_i, six for the e_i + e_j
//! reflections built around the s_n s_{n-1} s_n core.

use weyl_words::formulas::{
    coordinate_label, reflection_word, word_bc_plus, young_coset_word, Flavor,
};
use weyl_words::RootSystem;

fn main() {
    let c4 = RootSystem::build("C4".parse().unwrap());
    println!("All sixteen reflection words in type C4:");
    for root in c4.positive_roots() {
        let word = reflection_word(&c4, root).unwrap();
        println!(
            "  s_{{{}}} = {word}   (length {})",
            coordinate_label(&c4, root).unwrap(),
            word.len()
        );
    }

    // The e_i + e_j words factor through a two-column Young coset word.
    println!("\nYoung coset words w_ij in type C9, and the words they wrap:");
    let n = 9;
    for (i, j) in [(1, 6), (2, 3), (8, 9)] {
        let w = young_coset_word(i, j, n, Flavor::C).unwrap();
        let full = word_bc_plus(i, j, n).unwrap();
        println!("  (i,j) = ({i},{j}): w_ij = {w}, s_{{e{i}+e{j}}} = {full}");
    }

    // Same constructors, different geometry: in B4 the diagonal word
    // reflects in e_i rather than 2e_i.
    let b4 = RootSystem::build("B4".parse().unwrap());
    println!("\nDiagonal reflections in B4:");
    for root in b4.positive_roots() {
        let label = coordinate_label(&b4, root).unwrap();
        if !label.contains('-') && !label.contains('+') {
            println!("  s_{{{label}}} = {}", reflection_word(&b4, root).unwrap());
        }
    }
}
