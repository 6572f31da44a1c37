//! Grow reflection words with no formulas at all: start from the simple
//! reflections and conjugate, keeping an edge s_beta -> s_i s_beta s_i
//! only when the length rises by two. The words that come out are
//! palindromic and reduced by construction; here they are compared with
//! the closed forms.

use weyl_words::formulas::{conjugation_generate, reflection_word};
use weyl_words::RootSystem;

fn main() {
    let d5 = RootSystem::build("D5".parse().unwrap());
    println!("D5: conjugation-search words next to the closed forms\n");
    println!("{:<14} {:<24} closed form", "root", "search");
    let mut identical = 0;
    for (root, grown) in conjugation_generate(&d5) {
        let formula = reflection_word(&d5, &root).unwrap();
        let same_string = grown == formula;
        if same_string {
            identical += 1;
        }
        println!(
            "{:<14} {:<24} {}{}",
            format!("({root})"),
            grown.to_string(),
            formula,
            if same_string {
                ""
            } else {
                "   (different spelling)"
            }
        );
        // Different spellings are fine; the group element must agree.
        assert_eq!(
            d5.word_matrix(&grown).unwrap(),
            d5.word_matrix(&formula).unwrap()
        );
        assert_eq!(grown.len(), formula.len());
    }
    println!(
        "\n{identical}/{} words come out letter-for-letter identical;",
        d5.positive_roots().len()
    );
    println!("every pair spells the same reflection at the same length.");
}
