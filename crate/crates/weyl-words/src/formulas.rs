//! Closed-form palindromic reduced words for every reflection.
//!
//! Classical types use nested-interval words. Writing roots in the standard
//! coordinates, the three families in types `B`/`C` are
//!
//! ```text
//! s_{e_i - e_j}       = s_i ... s_{j-2} s_{j-1} s_{j-2} ... s_i
//! s_{e_i} = s_{2e_i}  = s_i ... s_{n-1} s_n s_{n-1} ... s_i
//! s_{e_i + e_j}       = w_{ij} (s_n s_{n-1} s_n) reverse(w_{ij})
//! ```
//!
//! where the coset word `w_{ij}` reads the column lengths of a two-column
//! Young diagram: letters `j..n-1` then `i..n-2`. Type `D` mirrors this
//! with core `s_{n-1} s_{n-2} s_n s_{n-2} s_{n-1}` and columns shortened by
//! one, plus a separate family through the fork:
//!
//! ```text
//! s_{e_i + e_n} = s_i ... s_{n-2} s_n s_{n-2} ... s_i
//! ```
//!
//! The exceptional words live in [`tables`] as static data, in the row
//! order of the reference plates. [`reflection_word`] dispatches on the
//! type and is total on positive roots. [`conjugation_generate`] regrows
//! words for all reflections by breadth-first conjugation from the simple
//! ones; it knows nothing about the closed forms, which makes it a useful
//! independent check.

mod tables;

use std::collections::VecDeque;

use num_traits::Zero;

use crate::cartan::{Family, TypeLabel};
use crate::roots::{Coroot, EuclideanVector, Root, RootSystem};
use crate::weyl::Word;
use crate::{Error, Result};

/// One reflection: its root data and the distinguished reduced word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReflectionEntry {
    pub root: Root,
    pub coroot: Coroot,
    pub word: Word,
    /// Letter count of `word`; equals the Coxeter length of the reflection.
    pub length: usize,
    pub euclid: EuclideanVector,
}

/// Which two-column grid shape a coset word reads.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Flavor {
    /// Columns `j..n-1` and `i..n-2`.
    C,
    /// Columns `j..n-2` and `i..n-3`.
    D,
}

/// A correction to item (II) of one of the classical reference plates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Correction {
    pub plate: &'static str,
    pub location: &'static str,
    pub erroneous: &'static str,
    pub corrected: &'static str,
}

fn check_range(pre: bool, i: usize, j: usize, n: usize) -> Result<()> {
    if pre {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { i, j, n })
    }
}

/// `s_{e_i - e_{j+1}}` in type `A_n`: ascend `i..=j`, descend back to `i`.
/// Degenerates to the single letter `s_i` when `i = j`.
pub fn word_a(i: usize, j: usize, n: usize) -> Result<Word> {
    check_range(1 <= i && i <= j && j <= n, i, j, n)?;
    let mut letters: Vec<usize> = (i..=j).collect();
    letters.extend((i..j).rev());
    Ok(Word(letters))
}

/// `s_{e_i - e_j}` in types `B_n`/`C_n`, `i < j <= n`.
pub fn word_bc_minus(i: usize, j: usize, n: usize) -> Result<Word> {
    check_range(1 <= i && i < j && j <= n, i, j, n)?;
    word_a(i, j - 1, n)
}

/// `s_{e_i}` in type `B_n`, equally `s_{2e_i}` in type `C_n`.
pub fn word_bc_diag(i: usize, n: usize) -> Result<Word> {
    check_range(1 <= i && i <= n, i, i, n)?;
    let mut letters: Vec<usize> = (i..=n).collect();
    letters.extend((i..n).rev());
    Ok(Word(letters))
}

/// `s_{e_i + e_j}` in types `B_n`/`C_n`, `i < j <= n`.
pub fn word_bc_plus(i: usize, j: usize, n: usize) -> Result<Word> {
    let w = young_coset_word(i, j, n, Flavor::C)?;
    let core = Word(vec![n, n - 1, n]);
    Ok(w.concat(&core).concat(&w.reversed()))
}

/// `s_{e_i - e_j}` in type `D_n`, `i < j <= n`.
pub fn word_d_minus(i: usize, j: usize, n: usize) -> Result<Word> {
    check_range(1 <= i && i < j && j <= n, i, j, n)?;
    word_a(i, j - 1, n)
}

/// `s_{e_i + e_n}` in type `D_n`: ascend `i..=n-2`, cross the fork at
/// `s_n`, descend. Degenerates to `s_n` itself when `i = n-1`.
pub fn word_d_mixed(i: usize, n: usize) -> Result<Word> {
    check_range(1 <= i && i < n, i, i, n)?;
    let mut letters: Vec<usize> = (i..=n - 2).collect();
    letters.push(n);
    letters.extend((i..=n - 2).rev());
    Ok(Word(letters))
}

/// `s_{e_i + e_j}` in type `D_n`, `i < j < n`.
pub fn word_d_plus(i: usize, j: usize, n: usize) -> Result<Word> {
    let w = young_coset_word(i, j, n, Flavor::D)?;
    let core = Word(vec![n - 1, n - 2, n, n - 2, n - 1]);
    Ok(w.concat(&core).concat(&w.reversed()))
}

/// The minimal coset word read off a two-column Young diagram: the right
/// column bottom-to-top, then the left column bottom-to-top. Either column
/// may be empty (`j` at its maximum empties the first, `i` at its maximum
/// the second).
pub fn young_coset_word(i: usize, j: usize, n: usize, flavor: Flavor) -> Result<Word> {
    let (top, shift) = match flavor {
        Flavor::C => (n, 1),
        Flavor::D => (n - 1, 2),
    };
    check_range(1 <= i && i < j && j <= top, i, j, n)?;
    let mut letters: Vec<usize> = (j..=n - shift).collect();
    letters.extend(i..=n.saturating_sub(shift + 1));
    Ok(Word(letters))
}

fn delta_padded(raw: &'static [i64], rank: usize) -> Root {
    let mut v = raw.to_vec();
    v.resize(rank, 0);
    Root(v)
}

/// The plate rows of an exceptional type: coordinate label, root, and the
/// fully materialized word, in plate order.
fn plate_rows(label: TypeLabel) -> Result<Vec<(&'static str, Root, Word)>> {
    let rank = label.rank();
    let sections: &[&[tables::RawRow]] = match (label.family(), rank) {
        (Family::G, _) => &[tables::G2_ROWS],
        (Family::F, _) => &[tables::F4_ROWS],
        (Family::E, 6) => &[tables::E6_ROWS],
        (Family::E, 7) => &[tables::E6_ROWS, tables::E7_EXTRA],
        (Family::E, _) => &[
            tables::E6_ROWS,
            tables::E7_EXTRA,
            tables::E8_CLASSICAL,
            tables::E8_DISTINCT,
        ],
        _ => return Err(Error::NotExceptional(label)),
    };
    let mut rows = Vec::new();
    for (k, section) in sections.iter().enumerate() {
        let conjugator = rank == 8 && k == 3;
        for row in section.iter() {
            let word = if conjugator {
                let w = Word::parse(row.word)?;
                let theta = Word::parse(tables::THETA_WORD)?;
                w.concat(&theta).concat(&w.reversed())
            } else {
                Word::parse(row.word)?
            };
            rows.push((row.plate, delta_padded(row.delta, rank), word));
        }
    }
    Ok(rows)
}

/// All reflections of an exceptional type in plate row order.
pub fn exceptional_table(sys: &RootSystem) -> Result<Vec<ReflectionEntry>> {
    let rows = plate_rows(sys.label())?;
    rows.into_iter()
        .map(|(_, root, word)| {
            let coroot = sys.coroot(&root)?;
            let euclid = sys.euclidean(&root)?;
            let length = word.len();
            Ok(ReflectionEntry {
                root,
                coroot,
                word,
                length,
                euclid,
            })
        })
        .collect()
}

/// Every reflection of one type: plate row order in the exceptional
/// types, canonical positive-root order in the classical ones.
pub fn all_entries(sys: &RootSystem) -> Vec<ReflectionEntry> {
    if sys.label().is_exceptional() {
        return exceptional_table(sys).expect("exceptional type");
    }
    sys.positive_roots()
        .iter()
        .map(|root| {
            let word = reflection_word(sys, root).expect("positive root");
            ReflectionEntry {
                root: root.clone(),
                coroot: sys.coroot(root).expect("positive root"),
                length: word.len(),
                euclid: sys.euclidean(root).expect("positive root"),
                word,
            }
        })
        .collect()
}

/// The coordinate label a table prints for a root: the plate's own string
/// in the exceptional types (sign bits for the half-integer rows), the
/// standard symbolic form (`e1-e3`, `2e2`, `e1+e2`) in the classical ones.
pub fn coordinate_label(sys: &RootSystem, root: &Root) -> Result<String> {
    if sys.label().is_exceptional() {
        let rows = plate_rows(sys.label())?;
        let plate = rows
            .iter()
            .find(|(_, r, _)| r == root)
            .map(|(p, _, _)| *p)
            .ok_or_else(|| Error::NotARoot {
                label: sys.label(),
                coeffs: root.to_string(),
            })?;
        return Ok(plate.strip_prefix("nu:").unwrap_or(plate).to_string());
    }
    let v = sys.euclidean(root)?;
    let mut parts = String::new();
    for (idx, c) in v.0.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let c = c.to_integer();
        if c < 0 {
            parts.push('-');
        } else if !parts.is_empty() {
            parts.push('+');
        }
        if c.abs() != 1 {
            parts.push_str(&c.abs().to_string());
        }
        parts.push_str(&format!("e{}", idx + 1));
    }
    Ok(parts)
}

/// Nonzero ambient coordinates of a classical root as 1-based
/// `(axis, value)` pairs, sorted by axis.
fn support(sys: &RootSystem, root: &Root) -> Vec<(usize, i64)> {
    sys.euclidean_unchecked(root)
        .0
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(idx, c)| {
            debug_assert!(c.is_integer());
            (idx + 1, c.to_integer())
        })
        .collect()
}

/// The distinguished palindromic reduced word for the reflection in a
/// positive root. Total on the positive system of every type.
pub fn reflection_word(sys: &RootSystem, root: &Root) -> Result<Word> {
    if !sys.is_positive_root(root) {
        return Err(Error::NotARoot {
            label: sys.label(),
            coeffs: root.to_string(),
        });
    }
    let n = sys.rank();
    if sys.label().is_exceptional() {
        let rows = plate_rows(sys.label())?;
        return Ok(rows
            .into_iter()
            .find(|(_, r, _)| r == root)
            .map(|(_, _, w)| w)
            .expect("plate rows cover the positive system"));
    }
    let shape = support(sys, root);
    let word = match (sys.label().family(), shape.as_slice()) {
        (Family::A, &[(a, 1), (b, -1)]) => word_a(a, b - 1, n)?,
        (Family::B, &[(a, 1), (b, -1)]) => word_bc_minus(a, b, n)?,
        (Family::B, &[(a, 1)]) => word_bc_diag(a, n)?,
        (Family::B, &[(a, 1), (b, 1)]) => word_bc_plus(a, b, n)?,
        (Family::C, &[(a, 1), (b, -1)]) => word_bc_minus(a, b, n)?,
        (Family::C, &[(a, 2)]) => word_bc_diag(a, n)?,
        (Family::C, &[(a, 1), (b, 1)]) => word_bc_plus(a, b, n)?,
        (Family::D, &[(a, 1), (b, -1)]) => word_d_minus(a, b, n)?,
        (Family::D, &[(a, 1), (b, 1)]) if b == n => word_d_mixed(a, n)?,
        (Family::D, &[(a, 1), (b, 1)]) => word_d_plus(a, b, n)?,
        _ => unreachable!("unclassified positive root {root} in {}", sys.label()),
    };
    Ok(word)
}

/// Grows a reduced word for every reflection by breadth-first conjugation,
/// seeded at the simple reflections. An edge conjugates `s_beta` by `s_i`
/// and is taken only when the length rises by exactly 2, so words stay
/// reduced and palindromic by construction. Ties break toward the smallest
/// generator; the first word found for a root wins. Returns canonical
/// positive-root order.
pub fn conjugation_generate(sys: &RootSystem) -> Vec<(Root, Word)> {
    let positives = sys.positive_roots();
    let lengths: Vec<usize> = positives
        .iter()
        .map(|r| sys.reflection_length(r).expect("positive root"))
        .collect();
    let mut words: Vec<Option<Word>> = vec![None; positives.len()];
    let mut queue = VecDeque::new();
    for i in 1..=sys.rank() {
        let mut alpha = vec![0i64; sys.rank()];
        alpha[i - 1] = 1;
        let idx = sys.index_of(&Root(alpha)).expect("simple root");
        words[idx] = Some(Word(vec![i]));
        queue.push_back(idx);
    }
    while let Some(idx) = queue.pop_front() {
        let u = words[idx].clone().expect("queued root has a word");
        for i in 1..=sys.rank() {
            let image = sys
                .apply_simple(i, &positives[idx])
                .expect("valid generator");
            if !image.is_positive() {
                continue;
            }
            let target = sys.index_of(&image).expect("closure");
            if words[target].is_some() || lengths[target] != lengths[idx] + 2 {
                continue;
            }
            let mut letters = Vec::with_capacity(u.len() + 2);
            letters.push(i);
            letters.extend_from_slice(u.letters());
            letters.push(i);
            words[target] = Some(Word(letters));
            queue.push_back(target);
        }
    }
    positives
        .iter()
        .cloned()
        .zip(words)
        .map(|(r, w)| (r, w.expect("conjugation search reaches every reflection")))
        .collect()
}

/// The five corrections to item (II) of the classical reference plates.
pub fn bourbaki_corrections() -> Vec<Correction> {
    vec![
        Correction {
            plate: "C_n",
            location: "item (II), expansion of 2e_i",
            erroneous: "omits the 2s on the righthand side of the expansion",
            corrected: "2e_i = 2α_i + ... + 2α_{n-1} + α_n",
        },
        Correction {
            plate: "D_n",
            location: "item (II), expansion of e_i - e_j",
            erroneous: "omits α_i from this expansion",
            corrected: "e_i - e_j = α_i + α_{i+1} + ... + α_{j-1}",
        },
        Correction {
            plate: "G_2",
            location: "item (II), list of positive roots",
            erroneous: "omits α_2 from Φ+",
            corrected: "Φ+ = {α_1, α_2, α_1+α_2, 2α_1+α_2, 3α_1+α_2, 3α_1+2α_2}",
        },
        Correction {
            plate: "E_8",
            location: "item (II), positive root expansions",
            erroneous: "the root (12232211) is recorded twice",
            corrected: "the second occurrence reads (12232111)",
        },
        Correction {
            plate: "E_8",
            location: "item (II), positive root expansions",
            erroneous: "the erroneous root (11233321) appears",
            corrected: "(11233221)",
        },
    ]
}
