//! The five typos in item (II) of the classical reference plates, found
//! by regenerating every positive-root expansion from scratch. Two of
//! the five are demonstrated against the computed root systems.

use weyl_words::formulas::bourbaki_corrections;
use weyl_words::{Root, RootSystem};

fn main() {
    for (k, c) in bourbaki_corrections().iter().enumerate() {
        println!("{}. {} plate, {}", k + 1, c.plate, c.location);
        println!("   printed:   {}", c.erroneous);
        println!("   corrected: {}", c.corrected);
    }

    // The G_2 positive system really does contain a2.
    let g2 = RootSystem::build("G2".parse().unwrap());
    assert!(g2.is_positive_root(&Root(vec![0, 1])));
    println!("\ncheck: a2 is a positive root of G2, as corrected");

    // The E_8 system contains both (12232111) and (11233221) exactly once,
    // and also the root (11233321) that the plate printed in the wrong row.
    let e8 = RootSystem::build("E8".parse().unwrap());
    for coeffs in [
        vec![1, 2, 2, 3, 2, 1, 1, 1],
        vec![1, 1, 2, 3, 3, 2, 2, 1],
        vec![1, 1, 2, 3, 3, 3, 2, 1],
    ] {
        assert!(e8.is_positive_root(&Root(coeffs.clone())));
    }
    println!("check: the corrected E8 coefficient rows are all roots");
}
