//! Words in the simple generators and their action on the root lattice.
//!
//! A word `(i_1, ..., i_k)` spells `s_{i_1} s_{i_2} ... s_{i_k}` and its
//! matrix is the product `M(s_{i_1}) ... M(s_{i_k})` acting on column
//! vectors of simple-root coefficients, so column `j` of any group element
//! is the image of `alpha_j` and is itself (plus or minus) a root. Length
//! is always measured geometrically, as the number of positive roots sent
//! negative; two words denote the same group element exactly when their
//! matrices agree.

use std::fmt;

use crate::roots::{Root, RootSystem};
use crate::{Error, Result};

/// A word in the generators `s_1..s_n`, stored with 1-based letters.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Accepts the compact digit form `s24342` (ranks below 10) and the
    /// bracketed form `s[2,4,3,4,2]`; the `s` prefix is optional.
    pub fn parse(s: &str) -> Result<Word> {
        let err = || Error::ParseWord(s.to_string());
        let body = s.strip_prefix('s').unwrap_or(s);
        if let Some(inner) = body.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(err)?;
            if inner.trim().is_empty() {
                return Ok(Word(Vec::new()));
            }
            let letters: std::result::Result<Vec<usize>, _> =
                inner.split(',').map(|t| t.trim().parse()).collect();
            let letters = letters.map_err(|_| err())?;
            if letters.contains(&0) {
                return Err(err());
            }
            return Ok(Word(letters));
        }
        if body.is_empty() && s.starts_with('s') {
            return Ok(Word(Vec::new()));
        }
        let mut letters = Vec::with_capacity(body.len());
        for c in body.chars() {
            let d = c.to_digit(10).ok_or_else(err)?;
            if d == 0 {
                return Err(err());
            }
            letters.push(d as usize);
        }
        if letters.is_empty() {
            return Err(err());
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    /// Compact form: `s24342`. Every supported rank is a single digit.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s")?;
        for &i in &self.0 {
            if i < 10 {
                write!(f, "{i}")?;
            } else {
                return write!(f, "[{}]", join(&self.0));
            }
        }
        Ok(())
    }
}

fn join(letters: &[usize]) -> String {
    letters
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Integer matrix of a Weyl group element in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeylMatrix {
    entries: Vec<Vec<i64>>,
}

impl WeylMatrix {
    pub fn identity(n: usize) -> WeylMatrix {
        let entries = (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
        WeylMatrix { entries }
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn mul(&self, other: &WeylMatrix) -> WeylMatrix {
        let n = self.size();
        let mut entries = vec![vec![0i64; n]; n];
        for (row, out) in entries.iter_mut().enumerate() {
            for k in 0..n {
                let a = self.entries[row][k];
                if a == 0 {
                    continue;
                }
                for (j, cell) in out.iter_mut().enumerate() {
                    *cell += a * other.entries[k][j];
                }
            }
        }
        WeylMatrix { entries }
    }

    pub fn apply(&self, root: &Root) -> Root {
        let n = self.size();
        let mut out = vec![0i64; n];
        for (j, &c) in root.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for (o, row) in out.iter_mut().zip(&self.entries) {
                *o += row[j] * c;
            }
        }
        Root(out)
    }

    /// Flattened entries, for hashing group elements during enumeration.
    pub fn key(&self) -> Vec<i8> {
        self.entries.iter().flatten().map(|&x| x as i8).collect()
    }
}

impl RootSystem {
    fn check_generator(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.rank() {
            return Err(Error::InvalidGenerator {
                index: i,
                rank: self.rank(),
            });
        }
        Ok(())
    }

    /// `s_i(beta) = beta - <beta, alpha_i^vee> alpha_i`, total on
    /// coefficient vectors.
    pub fn apply_simple(&self, i: usize, beta: &Root) -> Result<Root> {
        self.check_generator(i)?;
        let n = self.rank();
        let pairing: i64 = (0..n)
            .map(|j| beta.0[j] * self.datum().cartan(j + 1, i))
            .sum();
        let mut out = beta.0.clone();
        out[i - 1] -= pairing;
        Ok(Root(out))
    }

    pub fn simple_matrix(&self, i: usize) -> Result<WeylMatrix> {
        self.check_generator(i)?;
        let n = self.rank();
        let mut m = WeylMatrix::identity(n);
        for j in 0..n {
            m.entries[i - 1][j] -= self.datum().cartan(j + 1, i);
        }
        Ok(m)
    }

    /// Left-to-right product of the letters' matrices.
    pub fn word_matrix(&self, word: &Word) -> Result<WeylMatrix> {
        let mut m = WeylMatrix::identity(self.rank());
        for &i in word.letters() {
            m = m.mul(&self.simple_matrix(i)?);
        }
        Ok(m)
    }

    /// Positive roots sent negative, in canonical order.
    pub fn inversion_set(&self, word: &Word) -> Result<Vec<Root>> {
        let m = self.word_matrix(word)?;
        Ok(self
            .positive_roots()
            .iter()
            .filter(|r| !m.apply(r).is_positive())
            .cloned()
            .collect())
    }

    /// Coxeter length of the element the word spells.
    pub fn word_length(&self, word: &Word) -> Result<usize> {
        Ok(self.inversion_set(word)?.len())
    }

    pub fn is_reduced(&self, word: &Word) -> Result<bool> {
        Ok(self.word_length(word)? == word.len())
    }

    /// Matrix of the reflection in an arbitrary root: column `j` is
    /// `alpha_j - <alpha^vee, alpha_j> alpha`.
    pub fn reflection_matrix(&self, root: &Root) -> Result<WeylMatrix> {
        let co = self.coroot(root)?;
        let n = self.rank();
        let mut m = WeylMatrix::identity(n);
        for j in 0..n {
            let pairing: i64 = (0..n)
                .map(|k| co.0[k] * self.datum().cartan(j + 1, k + 1))
                .sum();
            if pairing == 0 {
                continue;
            }
            for i in 0..n {
                m.entries[i][j] -= pairing * root.0[i];
            }
        }
        Ok(m)
    }

    /// Coxeter length of the reflection in a root.
    pub fn reflection_length(&self, root: &Root) -> Result<usize> {
        let m = self.reflection_matrix(root)?;
        Ok(self
            .positive_roots()
            .iter()
            .filter(|r| !m.apply(r).is_positive())
            .count())
    }

    /// Deletes letters pairwise until the word is reduced, preserving the
    /// group element. Uses the exchange property: at the first position
    /// where the running prefix sends the next letter's root negative,
    /// some earlier suffix carries `alpha_{i_j}` onto a simple root, and
    /// dropping that pair shortens the word by two.
    pub fn reduce(&self, word: &Word) -> Result<Word> {
        for &i in word.letters() {
            self.check_generator(i)?;
        }
        let mut letters = word.0.clone();
        'outer: loop {
            let mut prefix = WeylMatrix::identity(self.rank());
            for (j, &letter) in letters.iter().enumerate() {
                let mut alpha = vec![0i64; self.rank()];
                alpha[letter - 1] = 1;
                let image = prefix.apply(&Root(alpha));
                if image.is_positive() {
                    prefix = prefix.mul(&self.simple_matrix(letter)?);
                    continue;
                }
                // Walk the suffix roots t_p = s_{i_p} ... s_{i_{j-1}}(alpha_{i_j})
                // back from p = j; the last positive one is simple.
                let mut t = {
                    let mut v = vec![0i64; self.rank()];
                    v[letter - 1] = 1;
                    Root(v)
                };
                for p in (0..j).rev() {
                    let next = self.apply_simple(letters[p], &t)?;
                    if !next.is_positive() {
                        letters.remove(j);
                        letters.remove(p);
                        continue 'outer;
                    }
                    t = next;
                }
                unreachable!("prefix sent a simple root negative with no descent");
            }
            return Ok(Word(letters));
        }
    }
}
