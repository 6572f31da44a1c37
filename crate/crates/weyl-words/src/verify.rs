//! Independent checks on the distinguished reflection words.
//!
//! A word for the reflection in a positive root makes three separate
//! claims: it is a palindrome, it is reduced, and it spells that exact
//! reflection. [`verify_entry`] tests the three claims against arithmetic
//! that never consults the closed forms: palindromy is a string property,
//! reducedness compares the letter count with the inversion-set size of
//! the reflection, and the element check multiplies out generator
//! matrices. [`verify_all`] sweeps a whole type and additionally replays
//! the breadth-first conjugation search as a second, formula-free source
//! of words.
//!
//! [`small_group_oracle`] goes further for groups small enough to
//! enumerate: it walks the full Weyl group by right multiplication, so
//! the depth at which a reflection matrix first appears is its Coxeter
//! length with no appeal to root geometry at all.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::fmt;

use num_rational::Rational64;
use serde::Serialize;

use crate::cartan::{Family, TypeLabel};
use crate::formulas::{conjugation_generate, reflection_word};
use crate::roots::{EuclideanVector, Root, RootSystem};
use crate::weyl::{WeylMatrix, Word};
use crate::{Error, Result};

/// Largest Weyl group the enumeration oracle will walk by default.
pub const DEFAULT_GROUP_BOUND: u128 = 50_000;

/// Which of the three claims about a reflection word failed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ReasonCode {
    #[serde(rename = "NOT_PALINDROME")]
    NotPalindrome,
    #[serde(rename = "NOT_REDUCED")]
    NotReduced,
    #[serde(rename = "WRONG_ELEMENT")]
    WrongElement,
}

impl fmt::Display for ReasonCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ReasonCode::NotPalindrome => "NOT_PALINDROME",
            ReasonCode::NotReduced => "NOT_REDUCED",
            ReasonCode::WrongElement => "WRONG_ELEMENT",
        };
        f.write_str(s)
    }
}

/// One failed claim, pinned to a root.
#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub root: String,
    pub reason: ReasonCode,
    pub detail: String,
}

/// Outcome of sweeping every reflection of one type.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub label: String,
    pub total: usize,
    pub checked: usize,
    pub failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checked == self.total && self.failures.is_empty()
    }
}

fn claim_failures(
    sys: &RootSystem,
    root: &Root,
    word: &Word,
    source: &str,
    out: &mut Vec<Failure>,
) -> Result<()> {
    let push = |out: &mut Vec<Failure>, reason, detail| {
        out.push(Failure {
            root: root.to_string(),
            reason,
            detail,
        })
    };
    if !word.is_palindrome() {
        push(
            out,
            ReasonCode::NotPalindrome,
            format!("{source} word {word} differs from its reverse"),
        );
    }
    let expected = sys.reflection_length(root)?;
    if word.len() != expected {
        push(
            out,
            ReasonCode::NotReduced,
            format!(
                "{source} word {word} has {} letters, reflection length is {expected}",
                word.len()
            ),
        );
    }
    if sys.word_matrix(word)? != sys.reflection_matrix(root)? {
        push(
            out,
            ReasonCode::WrongElement,
            format!("{source} word {word} spells a different group element"),
        );
    }
    Ok(())
}

/// True iff `word` is a palindromic reduced expression for the reflection
/// in the positive root `root`: palindrome, letter count equal to the
/// reflection length, and matrix equal to the reflection matrix.
pub fn verify_entry(sys: &RootSystem, root: &Root, word: &Word) -> Result<bool> {
    if !sys.is_positive_root(root) {
        return Err(Error::NotARoot {
            label: sys.label(),
            coeffs: root.to_string(),
        });
    }
    let mut failures = Vec::new();
    claim_failures(sys, root, word, "candidate", &mut failures)?;
    Ok(failures.is_empty())
}

/// Checks the distinguished word of every reflection of one type, then
/// cross-checks the words grown by conjugation search against the same
/// three claims. Failures are collected, never thrown.
pub fn verify_all(label: TypeLabel) -> VerificationReport {
    let sys = RootSystem::build(label);
    let total = sys.positive_roots().len();
    let mut failures = Vec::new();
    let mut checked = 0;
    for root in sys.positive_roots() {
        let word = reflection_word(&sys, root).expect("positive root has a word");
        claim_failures(&sys, root, &word, "closed-form", &mut failures).expect("positive root");
        checked += 1;
    }
    for (root, word) in conjugation_generate(&sys) {
        claim_failures(&sys, &root, &word, "conjugation", &mut failures).expect("positive root");
    }
    VerificationReport {
        label: label.to_string(),
        total,
        checked,
        failures,
    }
}

/// Coxeter length of every reflection, measured by brute force: the full
/// group is grown breadth-first from the identity by right multiplication,
/// so an element's first appearance depth is its true length. Uses the
/// default group-order bound.
pub fn small_group_oracle(sys: &RootSystem) -> Result<HashMap<Root, usize>> {
    small_group_oracle_bounded(sys, DEFAULT_GROUP_BOUND)
}

/// [`small_group_oracle`] with an explicit bound on the group order.
pub fn small_group_oracle_bounded(sys: &RootSystem, bound: u128) -> Result<HashMap<Root, usize>> {
    let order = sys.label().weyl_order();
    if order > bound {
        return Err(Error::GroupTooLarge { order, bound });
    }
    let gens: Vec<WeylMatrix> = (1..=sys.rank())
        .map(|i| sys.simple_matrix(i))
        .collect::<Result<_>>()?;
    let mut depth: HashMap<Vec<i8>, usize> = HashMap::with_capacity(order as usize);
    let identity = WeylMatrix::identity(sys.rank());
    depth.insert(identity.key(), 0);
    let mut frontier = vec![identity];
    let mut d = 0usize;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for m in &frontier {
            for g in &gens {
                let prod = m.mul(g);
                if let Entry::Vacant(slot) = depth.entry(prod.key()) {
                    slot.insert(d + 1);
                    next.push(prod);
                }
            }
        }
        d += 1;
        frontier = next;
    }
    assert_eq!(
        depth.len() as u128,
        order,
        "group enumeration disagrees with the order formula for {}",
        sys.label()
    );
    let mut lengths = HashMap::with_capacity(sys.positive_roots().len());
    for root in sys.positive_roots() {
        let key = sys.reflection_matrix(root)?.key();
        let l = *depth
            .get(&key)
            .expect("every reflection occurs in the full group");
        lengths.insert(root.clone(), l);
    }
    Ok(lengths)
}

/// In the simply laced types the length law collapses to a height count:
/// `l(s_a) = <2rho, a^> - 1 = 2 ht(a^) - 1` for every positive root `a`.
/// Checks both forms of the right-hand side against the inversion-set
/// length. Errors on types with two root lengths.
pub fn check_simply_laced_lengths(label: TypeLabel) -> Result<bool> {
    if !label.is_simply_laced() {
        return Err(Error::NotSimplyLaced(label));
    }
    let sys = RootSystem::build(label);
    let two_rho = Root(sys.two_rho().to_vec());
    for root in sys.positive_roots() {
        let length = sys.reflection_length(root)? as i64;
        let dual_height = sys.coroot(root)?.height();
        if length != 2 * dual_height - 1 {
            return Ok(false);
        }
        let pairing =
            Rational64::from_integer(2) * sys.inner(&two_rho, root) / sys.inner(root, root);
        if pairing != Rational64::from_integer(length + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn unit(n: usize, k: usize) -> Vec<Rational64> {
    let mut v = vec![Rational64::from_integer(0); n];
    v[k - 1] = Rational64::from_integer(1);
    v
}

fn add(a: &[Rational64], b: &[Rational64], sign: i64) -> EuclideanVector {
    EuclideanVector(
        a.iter()
            .zip(b)
            .map(|(x, y)| x + y * Rational64::from_integer(sign))
            .collect(),
    )
}

/// Checks, in types `B` and `C`, that the inversion set of each diagonal
/// and plus reflection equals its explicit coordinate description:
///
/// ```text
/// N(s_{2e_i})     = {e_i - e_j, e_i + e_j | i < j <= n} u {2e_i}
/// N(s_{e_i+e_j})  = {e_i - e_l | l > i, l != j} u {e_j - e_l | l > j}
///                 u {e_i + e_l | l >= j} u {e_k + e_j | k > i, k != j}
///                 u {2e_i, 2e_j}
/// ```
///
/// with `e_i` in place of `2e_i` in type `B`. Sums are compared as
/// ambient vectors, so the description is independent of the simple-root
/// coordinates the inversion sets are computed in.
///
/// # Panics
/// If the family is not `B` or `C`.
pub fn check_inversion_characterizations(label: TypeLabel) -> bool {
    assert!(
        matches!(label.family(), Family::B | Family::C),
        "inversion characterizations apply to types B and C"
    );
    let sys = RootSystem::build(label);
    let n = sys.rank();
    let diag_scale = match label.family() {
        Family::B => 1,
        _ => 2,
    };
    let diag = |i: usize| {
        EuclideanVector(
            unit(n, i)
                .into_iter()
                .map(|x| x * Rational64::from_integer(diag_scale))
                .collect(),
        )
    };
    let mut diag_seen = 0;
    let mut plus_seen = 0;
    for root in sys.positive_roots() {
        let v = sys.euclidean_unchecked(root);
        let supp: Vec<(usize, i64)> =
            v.0.iter()
                .enumerate()
                .filter(|(_, c)| *c != &Rational64::from_integer(0))
                .map(|(k, c)| (k + 1, c.to_integer()))
                .collect();
        let mut expected: Vec<EuclideanVector> = Vec::new();
        match *supp.as_slice() {
            [(i, s)] if s == diag_scale => {
                diag_seen += 1;
                for j in i + 1..=n {
                    expected.push(add(&unit(n, i), &unit(n, j), -1));
                    expected.push(add(&unit(n, i), &unit(n, j), 1));
                }
                expected.push(diag(i));
            }
            [(i, 1), (j, 1)] => {
                plus_seen += 1;
                for l in i + 1..=n {
                    if l != j {
                        expected.push(add(&unit(n, i), &unit(n, l), -1));
                    }
                }
                for l in j + 1..=n {
                    expected.push(add(&unit(n, j), &unit(n, l), -1));
                }
                for l in j..=n {
                    expected.push(add(&unit(n, i), &unit(n, l), 1));
                }
                for k in i + 1..=n {
                    if k != j {
                        expected.push(add(&unit(n, k), &unit(n, j), 1));
                    }
                }
                expected.push(diag(i));
                expected.push(diag(j));
            }
            _ => continue,
        }
        let word = reflection_word(&sys, root).expect("positive root");
        let inversions = sys.inversion_set(&word).expect("valid word");
        let mut actual: Vec<EuclideanVector> = inversions
            .iter()
            .map(|r| sys.euclidean_unchecked(r))
            .collect();
        let sort_key = |e: &EuclideanVector| e.0.clone();
        actual.sort_by_key(sort_key);
        expected.sort_by_key(sort_key);
        if actual != expected {
            return false;
        }
    }
    diag_seen == n && plus_seen == n * (n - 1) / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::Word;

    fn sys(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    #[test]
    fn entry_accepts_the_true_word_and_rejects_the_braid_twin() {
        let c4 = sys("C4");
        let plus = Root(vec![0, 0, 1, 1]);
        assert!(verify_entry(&c4, &plus, &w("s434")).unwrap());
        assert!(!verify_entry(&c4, &plus, &w("s343")).unwrap());
        let diag = Root(vec![0, 0, 2, 1]);
        assert!(verify_entry(&c4, &diag, &w("s343")).unwrap());
    }

    #[test]
    fn entry_accepts_simple_generators() {
        let d5 = sys("D5");
        for i in 1..=5 {
            let mut alpha = vec![0; 5];
            alpha[i - 1] = 1;
            assert!(verify_entry(&d5, &Root(alpha), &Word(vec![i])).unwrap());
        }
    }

    #[test]
    fn entry_rejects_negative_roots() {
        let c4 = sys("C4");
        assert!(matches!(
            verify_entry(&c4, &Root(vec![-1, 0, 0, 0]), &w("s1")),
            Err(Error::NotARoot { .. })
        ));
    }

    #[test]
    fn claim_reasons_are_separated() {
        let a2 = sys("A2");
        let alpha2 = Root(vec![0, 1]);
        let mut failures = Vec::new();
        // Non-palindrome.
        claim_failures(&a2, &alpha2, &w("s12"), "test", &mut failures).unwrap();
        assert!(failures
            .iter()
            .any(|f| f.reason == ReasonCode::NotPalindrome));
        // Palindrome spelling the right element unreducedly: s1s2s1s2s1 = s2.
        failures.clear();
        claim_failures(&a2, &alpha2, &w("s12121"), "test", &mut failures).unwrap();
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].reason, ReasonCode::NotReduced);
        // Reduced palindrome spelling the wrong element.
        failures.clear();
        claim_failures(&a2, &alpha2, &w("s1"), "test", &mut failures).unwrap();
        assert_eq!(failures.len(), 1);
        assert_eq!(failures[0].reason, ReasonCode::WrongElement);
    }

    #[test]
    fn verify_all_small_types() {
        for (label, total) in [("A1", 1), ("A3", 6), ("B3", 9), ("C3", 9), ("G2", 6)] {
            let report = verify_all(label.parse().unwrap());
            assert!(report.passed(), "{label}: {:?}", report.failures);
            assert_eq!(report.total, total);
            assert_eq!(report.checked, total);
        }
    }

    #[test]
    fn verify_all_f4() {
        let report = verify_all("F4".parse().unwrap());
        assert!(report.passed());
        assert_eq!(report.total, 24);
    }

    #[test]
    fn report_serializes_with_uppercase_reason_codes() {
        let failure = Failure {
            root: "1,0".to_string(),
            reason: ReasonCode::WrongElement,
            detail: "test".to_string(),
        };
        let json = serde_json::to_string(&failure).unwrap();
        assert!(json.contains("\"WRONG_ELEMENT\""));
        assert!(json.contains("\"root\""));
    }

    #[test]
    fn oracle_lengths_in_rank_two() {
        let a2 = sys("A2");
        let lengths = small_group_oracle(&a2).unwrap();
        let mut values: Vec<usize> = lengths.values().copied().collect();
        values.sort();
        assert_eq!(values, vec![1, 1, 3]);
    }

    #[test]
    fn oracle_matches_inversion_lengths() {
        for label in ["A4", "B4", "C4", "D4", "G2", "F4"] {
            let s = sys(label);
            let lengths = small_group_oracle(&s).unwrap();
            for root in s.positive_roots() {
                assert_eq!(
                    lengths[root],
                    s.reflection_length(root).unwrap(),
                    "{label} {root}"
                );
            }
        }
    }

    #[test]
    fn oracle_c4_plus_length() {
        let c4 = sys("C4");
        let lengths = small_group_oracle(&c4).unwrap();
        let plus = Root(vec![1, 2, 2, 1]);
        assert_eq!(c4.euclidean(&plus).unwrap().0[0], 1.into());
        assert_eq!(lengths[&plus], 11);
    }

    #[test]
    fn oracle_refuses_large_groups() {
        let e6 = sys("E6");
        assert!(matches!(
            small_group_oracle(&e6),
            Err(Error::GroupTooLarge {
                order: 51840,
                bound: DEFAULT_GROUP_BOUND
            })
        ));
        let b5 = sys("B5");
        assert!(small_group_oracle_bounded(&b5, 100).is_err());
        assert!(small_group_oracle_bounded(&b5, 3840).is_ok());
    }

    #[test]
    fn simply_laced_length_law() {
        for label in ["A5", "D4", "D5", "E6"] {
            assert!(check_simply_laced_lengths(label.parse().unwrap()).unwrap());
        }
        assert!(matches!(
            check_simply_laced_lengths("B3".parse().unwrap()),
            Err(Error::NotSimplyLaced(_))
        ));
        assert!(matches!(
            check_simply_laced_lengths("G2".parse().unwrap()),
            Err(Error::NotSimplyLaced(_))
        ));
    }

    #[test]
    fn inversion_characterizations_hold_in_small_rank() {
        for label in ["B2", "B3", "B4", "C2", "C3", "C4", "C5"] {
            assert!(
                check_inversion_characterizations(label.parse().unwrap()),
                "{label}"
            );
        }
    }

    #[test]
    #[should_panic]
    fn inversion_characterizations_reject_other_families() {
        check_inversion_characterizations("A3".parse().unwrap());
    }

    #[test]
    fn b_and_c_share_their_word_multisets() {
        let b4 = sys("B4");
        let c4 = sys("C4");
        let collect = |s: &RootSystem| {
            let mut words: Vec<String> = s
                .positive_roots()
                .iter()
                .map(|r| reflection_word(s, r).unwrap().to_string())
                .collect();
            words.sort();
            words
        };
        assert_eq!(collect(&b4), collect(&c4));
    }
}
