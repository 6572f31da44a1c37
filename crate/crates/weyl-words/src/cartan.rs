//! Cartan data for the finite crystallographic types.
//!
//! Generators are numbered `1..=n` following the standard plate conventions:
//! chains are numbered along the diagram, the multiple edge in types `B_n`,
//! `C_n`, `F_4`, `G_2` sits at the labelled end, and in the `E` family the
//! branch node is `s_4` with `s_2` hanging below the `s_1-s_3-s_4-s_5-...`
//! chain. All public indices are 1-based; zero-based offsets exist only
//! transiently inside array arithmetic.
//!
//! The Cartan matrix convention is fixed by the simple reflection action
//!
//! ```text
//! s_i(alpha_j) = alpha_j - c[j][i] * alpha_i
//! ```
//!
//! so `c[j][i] = 2(alpha_j, alpha_i) / (alpha_i, alpha_i)`. Types `B_n` and
//! `C_n` therefore carry mutually transposed matrices.

use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;

use crate::{Error, Result};

/// The seven families of finite crystallographic root systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        };
        write!(f, "{c}")
    }
}

/// A validated family-and-rank pair such as `C4` or `E8`.
///
/// Construction enforces the rank constraints (`A_n` n>=1, `B_n`/`C_n` n>=2,
/// `D_n` n>=4, `E_n` n in {6,7,8}, `F_4`, `G_2`), so code holding a
/// `TypeLabel` never needs to re-check them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    family: Family,
    rank: usize,
}

impl TypeLabel {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(TypeLabel { family, rank })
        } else {
            Err(Error::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    pub fn is_exceptional(&self) -> bool {
        matches!(self.family, Family::E | Family::F | Family::G)
    }

    /// Order of the Weyl group, exact.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u32;
        let fact = |k: u32| (1..=k as u128).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match self.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

impl FromStr for TypeLabel {
    type Err = Error;

    /// Parses `"C4"`, `"e8"`, ... The family letter is case-insensitive.
    fn from_str(s: &str) -> Result<Self> {
        let err = || Error::ParseLabel(s.to_string());
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(err()),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| err())?;
        TypeLabel::new(family, rank)
    }
}

/// Every finite type through rank 8, the range the verification suite
/// sweeps: `A1..A8`, `B2..B8`, `C2..C8`, `D4..D8`, `E6..E8`, `F4`, `G2`.
pub fn all_labels() -> Vec<TypeLabel> {
    let mut labels = Vec::new();
    let mut push_range = |family, lo: usize, hi: usize| {
        for rank in lo..=hi {
            labels.push(TypeLabel::new(family, rank).expect("valid rank"));
        }
    };
    push_range(Family::A, 1, 8);
    push_range(Family::B, 2, 8);
    push_range(Family::C, 2, 8);
    push_range(Family::D, 4, 8);
    push_range(Family::E, 6, 8);
    push_range(Family::F, 4, 4);
    push_range(Family::G, 2, 2);
    labels
}

/// The Cartan matrix of a type together with its Coxeter matrix and
/// symmetrizer.
///
/// `sym[i]` is half the squared length of `alpha_{i+1}`, normalized so long
/// roots get 1; short roots get 1/2 (`B`, `C`, `F_4`) or 1/3 (`G_2`). The
/// symmetrized products `sym[j] * c[i][j] = sym[i] * c[j][i]` recover the
/// invariant inner product used by [`crate::RootSystem`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanDatum {
    label: TypeLabel,
    cartan: Vec<Vec<i64>>,
    coxeter: Vec<Vec<i64>>,
    sym: Vec<Rational64>,
}

impl CartanDatum {
    pub fn label(&self) -> TypeLabel {
        self.label
    }

    pub fn rank(&self) -> usize {
        self.label.rank()
    }

    /// Entry `c[i][j]` with 1-based indices.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.cartan[i - 1][j - 1]
    }

    /// Coxeter exponent `m(i,j)`: the order of `s_i s_j`.
    pub fn coxeter(&self, i: usize, j: usize) -> i64 {
        self.coxeter[i - 1][j - 1]
    }

    /// Half the squared length of `alpha_i`.
    pub fn sym(&self, i: usize) -> Rational64 {
        self.sym[i - 1]
    }

    pub fn cartan_rows(&self) -> &[Vec<i64>] {
        &self.cartan
    }
}

/// Builds the Cartan datum for a validated label.
pub fn datum(label: TypeLabel) -> CartanDatum {
    let n = label.rank();
    let mut c = vec![vec![0i64; n]; n];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    // 0-based pairs (i, j) with a single edge: c[i][j] = c[j][i] = -1.
    let mut single: Vec<(usize, usize)> = Vec::new();
    match label.family() {
        Family::A => single.extend((0..n - 1).map(|i| (i, i + 1))),
        Family::B => {
            single.extend((0..n.saturating_sub(2)).map(|i| (i, i + 1)));
            // alpha_n short: s_n(alpha_{n-1}) = alpha_{n-1} + 2 alpha_n
            c[n - 2][n - 1] = -2;
            c[n - 1][n - 2] = -1;
        }
        Family::C => {
            single.extend((0..n.saturating_sub(2)).map(|i| (i, i + 1)));
            // alpha_n long: s_{n-1}(alpha_n) = 2 alpha_{n-1} + alpha_n
            c[n - 2][n - 1] = -1;
            c[n - 1][n - 2] = -2;
        }
        Family::D => {
            single.extend((0..n - 2).map(|i| (i, i + 1)));
            single.push((n - 3, n - 1));
        }
        Family::E => {
            single.push((0, 2));
            single.extend((2..n - 1).map(|i| (i, i + 1)));
            single.push((1, 3));
        }
        Family::F => {
            single.push((0, 1));
            single.push((2, 3));
            c[1][2] = -2;
            c[2][1] = -1;
        }
        Family::G => {
            // alpha_1 short: s_1(alpha_2) = 3 alpha_1 + alpha_2
            c[0][1] = -1;
            c[1][0] = -3;
        }
    }
    for (i, j) in single {
        c[i][j] = -1;
        c[j][i] = -1;
    }

    let coxeter = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        return 1;
                    }
                    match c[i][j] * c[j][i] {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        _ => 6,
                    }
                })
                .collect()
        })
        .collect();

    let sym: Vec<Rational64> = (0..n)
        .map(|i| match (label.family(), i + 1) {
            (Family::B, k) if k == n => Rational64::new(1, 2),
            (Family::C, k) if k < n => Rational64::new(1, 2),
            (Family::F, 3 | 4) => Rational64::new(1, 2),
            (Family::G, 1) => Rational64::new(1, 3),
            _ => Rational64::from_integer(1),
        })
        .collect();

    CartanDatum {
        label,
        cartan: c,
        coxeter,
        sym,
    }
}
