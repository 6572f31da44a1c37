//! Build root systems and poke at their raw data: positive roots in
//! simple-root coordinates, coroots, heights, and the ambient embedding.

use weyl_words::{Root, RootSystem};

fn main() {
    let g2 = RootSystem::build("G2".parse().unwrap());
    println!("G2 positive roots (coefficients on a1, a2):");
    for root in g2.positive_roots() {
        let coroot = g2.coroot(root).unwrap();
        let euclid = g2.euclidean(root).unwrap();
        println!(
            "  ({root})  height {}  coroot ({})  ambient {euclid}",
            root.height(),
            coroot
                .coeffs()
                .iter()
                .map(i64::to_string)
                .collect::<Vec<_>>()
                .join(","),
        );
    }

    // Short and long roots pair differently against the invariant form.
    let alpha1 = Root(vec![1, 0]);
    let alpha2 = Root(vec![0, 1]);
    println!("\n(a1, a1) = {}", g2.inner(&alpha1, &alpha1));
    println!("(a2, a2) = {}", g2.inner(&alpha2, &alpha2));
    println!("(a1, a2) = {}", g2.inner(&alpha1, &alpha2));

    for label in ["A3", "B4", "C4", "D5", "F4", "E6"] {
        let sys = RootSystem::build(label.parse().unwrap());
        let theta = sys.highest_root();
        println!(
            "\n{label}: {} positive roots, |W| = {}, highest root ({theta}) at height {}",
            sys.positive_roots().len(),
            sys.label().weyl_order(),
            theta.height()
        );
    }
}
