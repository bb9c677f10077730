//! Finite automata over finite bar alphabets: word automata, the same
//! structure read as Büchi automata over infinite words, and bottom-up /
//! top-down tree automata. All of them have the usual literal semantics;
//! the bar-language semantics (closure under alpha-equivalence) lives in
//! the [`crate::closure`] module.

use std::collections::BTreeSet;
use std::fmt;

use crate::names::Name;
use crate::words::Letter;

mod buchi;
mod tree;
mod word;

pub use buchi::{buchi_lasso_search, buchi_product, singleton_up, BarBuchi, Lasso};
pub use tree::{
    bottomup_of_topdown, complement_tree, determinize_tree, literal_member_tree,
    min_accepted_tree, product_tree, shortest_in_symmetric_difference_tree, singleton_tree,
    topdown_of_bottomup, BarNftaBottomUp, BarNftaTopDown, TdRule, TreeRule,
};
pub use word::{
    complement_word, determinize_word, literal_member_word, product_word, shortest_accepted_word,
    shortest_in_symmetric_difference_word, singleton_word, BarNfa,
};

/// Dense automaton state index.
pub type StateId = usize;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AutomatonError {
    #[error("state index {0} out of range")]
    BadState(StateId),
    #[error("letter {0} is not in the alphabet")]
    LetterOutsideAlphabet(Letter),
    #[error("automaton is not deterministic and complete")]
    NotDeterministicComplete,
    #[error("automata have different alphabets")]
    AlphabetMismatch,
    #[error("automata have different signatures")]
    SignatureMismatch,
    #[error("tree does not conform to the automaton signature")]
    TreeSignatureMismatch,
    #[error("rule for {0} has {1} child states, arity is {2}")]
    ArityMismatch(String, usize, usize),
    #[error("symbol {0} is not in the signature")]
    UnknownSymbol(String),
}

/// A finite set of plain and bar letters.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash, PartialOrd, Ord)]
pub struct BarAlphabet {
    letters: BTreeSet<Letter>,
}

impl BarAlphabet {
    pub fn new<I: IntoIterator<Item = Letter>>(letters: I) -> Self {
        BarAlphabet {
            letters: letters.into_iter().collect(),
        }
    }

    pub fn empty() -> Self {
        BarAlphabet::default()
    }

    pub fn contains(&self, l: &Letter) -> bool {
        self.letters.contains(l)
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters in sorted order.
    pub fn iter(&self) -> impl Iterator<Item = Letter> + '_ {
        self.letters.iter().copied()
    }

    pub fn letters(&self) -> &BTreeSet<Letter> {
        &self.letters
    }

    /// Names of the plain letters, sorted. These define the register
    /// indices of the closure construction.
    pub fn plains(&self) -> Vec<Name> {
        self.letters
            .iter()
            .filter_map(|l| match l {
                Letter::Plain(a) => Some(*a),
                Letter::Bar(_) => None,
            })
            .collect()
    }

    /// Names of the bar letters, sorted.
    pub fn bars(&self) -> Vec<Name> {
        self.letters
            .iter()
            .filter_map(|l| match l {
                Letter::Bar(a) => Some(*a),
                Letter::Plain(_) => None,
            })
            .collect()
    }

    /// All underlying names.
    pub fn names(&self) -> BTreeSet<Name> {
        self.letters.iter().map(|l| l.name()).collect()
    }

    pub fn union(&self, other: &BarAlphabet) -> BarAlphabet {
        BarAlphabet {
            letters: self.letters.union(&other.letters).copied().collect(),
        }
    }

    pub fn insert(&mut self, l: Letter) {
        self.letters.insert(l);
    }
}

impl FromIterator<Letter> for BarAlphabet {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        BarAlphabet::new(iter)
    }
}

impl fmt::Display for BarAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// Default dense state names `q0, q1, ...`.
pub(crate) fn default_state_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("q{i}")).collect()
}
