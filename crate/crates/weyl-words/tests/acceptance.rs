//! Acceptance gate: ten end-to-end checks, one test per criterion, each
//! printing a pass line. Together they re-derive every distinguished
//! reflection word from independent arithmetic: inversion counts, matrix
//! products, brute-force group enumeration, conjugation search, and the
//! frozen golden tables.

use std::collections::HashMap;
use std::process::Command;
use std::time::Instant;

use weyl_words::cartan::all_labels;
use weyl_words::cli::{parse_root_spec, table_text};
use weyl_words::formulas::{
    bourbaki_corrections, conjugation_generate, exceptional_table, reflection_word,
};
use weyl_words::verify::{
    check_inversion_characterizations, check_simply_laced_lengths, small_group_oracle, verify_all,
    DEFAULT_GROUP_BOUND,
};
use weyl_words::{Family, Root, RootSystem, TypeLabel, Word};

fn sys(label: &str) -> RootSystem {
    RootSystem::build(label.parse().unwrap())
}

#[test]
fn criterion_01_every_reflection_word_verifies() {
    let start = Instant::now();
    for label in all_labels() {
        let report = verify_all(label);
        assert!(report.passed(), "{label}: {:?}", report.failures);
        assert_eq!(report.checked, report.total, "{label}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 60, "took {elapsed:?}");
    println!("criterion 1 (full verification, all types, {elapsed:?}): PASS");
}

#[test]
fn criterion_02_positive_root_counts() {
    for label in all_labels() {
        let n = label.rank();
        let expected = match label.family() {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * n - n,
            Family::E => [36, 63, 120][n - 6],
            Family::F => 24,
            Family::G => 6,
        };
        assert_eq!(
            RootSystem::build(label).positive_roots().len(),
            expected,
            "{label}"
        );
    }
    println!("criterion 2 (positive-root counts): PASS");
}

#[test]
fn criterion_03_simply_laced_length_law() {
    for label in all_labels() {
        if !label.is_simply_laced() {
            continue;
        }
        assert!(check_simply_laced_lengths(label).unwrap(), "{label}");
    }
    println!("criterion 3 (simply laced: length = 2 dual height - 1): PASS");
}

#[test]
fn criterion_04_type_c_lengths_and_inversion_sets() {
    for n in 2..=8usize {
        let label: TypeLabel = format!("C{n}").parse().unwrap();
        let c = RootSystem::build(label);
        for i in 1..=n {
            let diag = parse_root_spec(&c, &format!("2e{i}")).unwrap();
            assert_eq!(c.reflection_length(&diag).unwrap(), 2 * (n - i) + 1);
            for j in i + 1..=n {
                let minus = parse_root_spec(&c, &format!("e{i}-e{j}")).unwrap();
                assert_eq!(c.reflection_length(&minus).unwrap(), 2 * (j - i) - 1);
                let plus = parse_root_spec(&c, &format!("e{i}+e{j}")).unwrap();
                assert_eq!(c.reflection_length(&plus).unwrap(), 4 * n + 1 - 2 * (i + j));
            }
        }
        assert!(check_inversion_characterizations(label), "C{n}");
    }
    println!("criterion 4 (type C length formulas and inversion sets): PASS");
}

#[test]
fn criterion_05_golden_tables() {
    for (label, golden) in [
        ("G2", include_str!("goldens/table_g2.txt")),
        ("F4", include_str!("goldens/table_f4.txt")),
        ("E6", include_str!("goldens/table_e6.txt")),
        ("E7", include_str!("goldens/table_e7.txt")),
        ("E8", include_str!("goldens/table_e8.txt")),
    ] {
        assert_eq!(table_text(&sys(label)), golden, "{label}");
    }
    println!("criterion 5 (golden tables G2/F4/E6/E7/E8): PASS");
}

#[test]
fn criterion_06_c4_words_from_the_cli() {
    let expected = [
        ("e1-e2", "s1"),
        ("e2-e3", "s2"),
        ("e3-e4", "s3"),
        ("2e4", "s4"),
        ("e1-e3", "s121"),
        ("e2-e4", "s232"),
        ("e1-e4", "s12321"),
        ("2e3", "s343"),
        ("2e2", "s23432"),
        ("2e1", "s1234321"),
        ("e3+e4", "s434"),
        ("e2+e4", "s24342"),
        ("e1+e4", "s1243421"),
        ("e2+e3", "s3243423"),
        ("e1+e3", "s312434213"),
        ("e1+e2", "s23124342132"),
    ];
    assert_eq!(expected.len(), 16);
    for (spec, word) in expected {
        let out = Command::new(env!("CARGO_BIN_EXE_weyl-words"))
            .args(["word", "C4", spec])
            .output()
            .unwrap();
        assert!(out.status.success(), "{spec}");
        let stdout = String::from_utf8(out.stdout).unwrap();
        assert_eq!(stdout.lines().next(), Some(word), "{spec}");
    }
    println!("criterion 6 (the sixteen C4 words, verbatim): PASS");
}

#[test]
fn criterion_07_e8_highest_root_word() {
    let e8 = sys("E8");
    let theta = e8.highest_root();
    assert_eq!(theta.coeffs(), &[2, 3, 4, 6, 5, 4, 3, 2]);
    assert_eq!(theta.height(), 29);

    let conjugator = Word::parse("s87654312435426543765487").unwrap();
    let seed = Word::parse("s16524342561").unwrap();
    let word = conjugator.concat(&seed).concat(&conjugator.reversed());
    assert_eq!(word.len(), 57);
    assert_eq!(57, 2 * 29 - 1);
    assert!(word.is_palindrome());
    assert_eq!(
        e8.word_matrix(&word).unwrap(),
        e8.reflection_matrix(&theta).unwrap()
    );
    assert_eq!(reflection_word(&e8, &theta).unwrap(), word);
    println!("criterion 7 (57-letter highest reflection word in E8): PASS");
}

#[test]
fn criterion_08_group_enumeration_oracle() {
    let start = Instant::now();
    let mut covered = Vec::new();
    for label in all_labels() {
        if label.weyl_order() > DEFAULT_GROUP_BOUND {
            continue;
        }
        let s = RootSystem::build(label);
        let oracle: HashMap<Root, usize> = small_group_oracle(&s).unwrap();
        assert_eq!(oracle.len(), s.positive_roots().len());
        for root in s.positive_roots() {
            assert_eq!(
                oracle[root],
                s.reflection_length(root).unwrap(),
                "{label} {root}"
            );
        }
        covered.push(label.to_string());
    }
    for must in ["F4", "G2", "A4", "B4", "C4", "D4"] {
        assert!(covered.iter().any(|l| l == must), "{must} not covered");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs() < 30, "took {elapsed:?}");
    println!(
        "criterion 8 (enumeration oracle, {} groups, {elapsed:?}): PASS",
        covered.len()
    );
}

#[test]
fn criterion_09_conjugation_search_agrees() {
    for label in all_labels() {
        let s = RootSystem::build(label);
        for (root, word) in conjugation_generate(&s) {
            assert!(word.is_palindrome(), "{label} {root}");
            assert_eq!(
                word.len(),
                s.reflection_length(&root).unwrap(),
                "{label} {root}"
            );
            let formula = reflection_word(&s, &root).unwrap();
            assert_eq!(
                s.word_matrix(&word).unwrap(),
                s.word_matrix(&formula).unwrap(),
                "{label} {root}"
            );
        }
    }
    println!("criterion 9 (conjugation search agreement): PASS");
}

#[test]
fn criterion_10_exactly_five_corrections() {
    let corrections = bourbaki_corrections();
    assert_eq!(corrections.len(), 5);
    let plates: Vec<&str> = corrections.iter().map(|c| c.plate).collect();
    assert_eq!(plates, ["C_n", "D_n", "G_2", "E_8", "E_8"]);
    println!("criterion 10 (exactly five plate corrections): PASS");
}

#[test]
fn exceptional_tables_expose_full_positive_systems() {
    // Belt and braces around criteria 1 and 5: the table rows of each
    // exceptional type are exactly its positive system, no repeats.
    for label in ["G2", "F4", "E6", "E7", "E8"] {
        let s = sys(label);
        let table = exceptional_table(&s).unwrap();
        let mut roots: Vec<&Root> = table.iter().map(|e| &e.root).collect();
        roots.sort();
        roots.dedup();
        assert_eq!(roots.len(), s.positive_roots().len(), "{label}");
    }
}
