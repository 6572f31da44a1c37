//! Exact-arithmetic root systems for the finite crystallographic types, and
//! one distinguished palindromic reduced word for every reflection in every
//! finite Weyl group.
//!
//! Every reflection `s_alpha` equals `w s_i w^{-1}` for some simple
//! reflection `s_i`, which forces a reduced expression that reads the same
//! forwards and backwards. This crate builds those expressions in closed
//! form: nested-interval words for the classical types `A`, `B`, `C`, `D`
//! (with two-column Young coset words around a short core for the `e_i+e_j`
//! reflections), and embedded static tables for `G_2`, `F_4`, `E_6`, `E_7`,
//! `E_8`. Everything is computed over the integers and exact rationals;
//! there is no floating point anywhere.
//!
//! The crate is organized as a library with one thin `weyl-words` binary on
//! top. The `examples/` directory is the tour:
//!
//! Construction
//! - `root_systems`: build a system, list positive roots, coroots, heights:
//!   `cargo run --example root_systems`
//! - `classical_words`: the closed-form words in ranks 2..8, including the
//!   full type `C_4` list: `cargo run --example classical_words`
//! - `exceptional_tables`: the embedded `G_2` and `F_4` tables:
//!   `cargo run --example exceptional_tables`
//!
//! Verification
//! - `verify_words`: check palindromicity, reducedness, and the group
//!   element for all 935 reflections across 32 types:
//!   `cargo run --example verify_words`
//! - `group_oracle`: brute-force BFS enumeration of small Weyl groups as an
//!   independent length oracle: `cargo run --example group_oracle`
//! - `conjugation_graph`: regrow all words by conjugation search and compare
//!   against the closed forms: `cargo run --example conjugation_graph`
//!
//! Interchange
//! - `json_export`: serialize a full table, re-import it, re-verify:
//!   `cargo run --example json_export`
//! - `bourbaki_corrections`: the five corrections to the classical
//!   reference plates: `cargo run --example bourbaki_corrections`
//!
//! The binary exposes the same surface as subcommands; see `README.md` or
//! `cargo run -- --help`.

pub mod cartan;
pub mod cli;
pub mod formulas;
pub mod roots;
pub mod verify;
pub mod weyl;

pub use cartan::{datum, CartanDatum, Family, TypeLabel};
pub use formulas::{reflection_word, ReflectionEntry};
pub use roots::{Coroot, EuclideanVector, Root, RootSystem};
pub use weyl::{WeylMatrix, Word};

/// Errors shared by every module.
///
/// Rank validation happens once, inside [`TypeLabel`]: a label that exists
/// is always usable, so the construction functions downstream are total.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },
    #[error("cannot parse type label `{0}`")]
    ParseLabel(String),
    #[error("generator {index} out of range 1..={rank}")]
    InvalidGenerator { index: usize, rank: usize },
    #[error("not a root of {label}: {coeffs}")]
    NotARoot { label: TypeLabel, coeffs: String },
    #[error("{0} is not an exceptional type")]
    NotExceptional(TypeLabel),
    #[error("{0} is not simply laced")]
    NotSimplyLaced(TypeLabel),
    #[error("Weyl group of order {order} exceeds the enumeration bound {bound}")]
    GroupTooLarge { order: u128, bound: u128 },
    #[error("cannot parse word `{0}`")]
    ParseWord(String),
    #[error("cannot parse root `{0}`")]
    ParseRoot(String),
    #[error("indices ({i},{j}) out of range for rank {n}")]
    IndexOutOfRange { i: usize, j: usize, n: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
