//! Standard episturmian words and their Ziv-Lempel and Crochemore factorizations.
//!
//! The crate has two sides that are meant to be checked against each other:
//!
//! * [`factorizer`] computes z- and c-factorizations of arbitrary finite words, with a
//!   naive engine that follows the definitions and a suffix-array engine built on the
//!   longest-previous-factor array;
//! * [`closed_form`] produces the same factors for a standard episturmian word
//!   directly from its directive word, through the words `h_n` of [`episturmian`].
//!
//! [`verify`] runs both sides (and the structural identities between `u_n` and `h_n`)
//! over a corpus of directive words.

pub mod cli;
pub mod closed_form;
pub mod corpus;
pub mod episturmian;
pub mod error;
pub mod factorizer;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use word::{Letter, Word};
