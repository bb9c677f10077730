//! Active learning of bar languages: languages of finite words, infinite
//! words and finite trees with explicit name binding, read up to
//! alpha-equivalence.
//!
//! The pieces fit together as follows. [`words`], [`trees`] and [`nf`]
//! provide the syntax of bar strings and bar trees and decide
//! alpha-equivalence through De Bruijn normal forms. [`automata`] has the
//! classical automata over finite bar alphabets with their literal
//! semantics; [`closure`] turns any such automaton into one whose literal
//! language is the alpha-closure restricted to a chosen alphabet, which
//! makes the bar-language semantics computable. [`learn`] contains
//! classical observation-table learners, and [`assistant`] lifts any such
//! learner to bar languages by translating counterexamples through
//! representatives and hypothesis witnesses; [`teacher`] simulates the
//! answering side from a hidden automaton. [`text`] fixes the file and
//! command-line formats, [`corpus`] generates seeded test material and
//! [`sweep`] holds the exhaustive (optionally rayon-parallel)
//! verification sweeps.

pub mod assistant;
pub mod automata;
pub mod closure;
pub mod corpus;
pub mod data;
pub mod learn;
pub mod names;
pub mod nf;
pub mod sweep;
pub mod teacher;
pub mod text;
pub mod trees;
pub mod words;

pub use automata::{BarAlphabet, BarBuchi, BarNfa, BarNftaBottomUp, BarNftaTopDown, Lasso};
pub use names::{Name, Permutation, Symbol};
pub use nf::{alpha_eq_string, alpha_eq_tree, alpha_eq_up, nf_string, nf_tree};
pub use trees::{BarTree, Signature};
pub use words::{BarString, Letter, UltPeriodicWord};
