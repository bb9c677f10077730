//! Data-language membership at brute-force scale: a data word (or data
//! tree) over plain names belongs to the local-freshness interpretation
//! of a bar language if some choice of bars turns it into a member; the
//! global-freshness interpretation additionally requires the barred
//! pattern to be clean.

use crate::automata::{literal_member_tree, literal_member_word, BarAlphabet, BarNfa, BarNftaBottomUp};
use crate::closure::{close_tree, close_word};
use crate::names::{Name, Symbol};
use crate::trees::BarTree;
use crate::words::{is_clean, BarString, Letter};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("data input of size {size} exceeds the brute-force bound {limit}")]
pub struct DataBoundExceeded {
    pub size: usize,
    pub limit: usize,
}

/// Default size bound for the brute-force bar-pattern enumeration.
pub const DATA_MEMBER_MAX_SIZE: usize = 16;

fn bar_patterns(len: usize) -> impl Iterator<Item = u64> {
    0..(1u64 << len)
}

fn apply_pattern(names: &[Name], pattern: u64) -> BarString {
    names
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            if pattern & (1 << i) != 0 {
                Letter::Bar(a)
            } else {
                Letter::Plain(a)
            }
        })
        .collect()
}

fn data_member_word(
    a: &BarNfa,
    word: &[Name],
    require_clean: bool,
    max_size: usize,
) -> Result<bool, DataBoundExceeded> {
    if word.len() > max_size {
        return Err(DataBoundExceeded {
            size: word.len(),
            limit: max_size,
        });
    }
    // One closure serves all patterns: it is taken over the automaton's
    // alphabet joined with both the plain and barred version of every name
    // in the data word.
    let mut ext = a.alphabet().clone();
    for &n in word {
        ext.insert(Letter::Plain(n));
        ext.insert(Letter::Bar(n));
    }
    let closed = close_word(a, &ext);
    Ok(bar_patterns(word.len()).any(|pattern| {
        let candidate = apply_pattern(word, pattern);
        if require_clean && !is_clean(&candidate) {
            return false;
        }
        literal_member_word(&closed, &candidate)
    }))
}

/// Local freshness: is `word` the bar-erasure of some member of the bar
/// language of `a`?
pub fn data_member_local_word(
    a: &BarNfa,
    word: &[Name],
    max_size: usize,
) -> Result<bool, DataBoundExceeded> {
    data_member_word(a, word, false, max_size)
}

/// Global freshness: as local, but the witnessing bar string must be
/// clean.
pub fn data_member_global_word(
    a: &BarNfa,
    word: &[Name],
    max_size: usize,
) -> Result<bool, DataBoundExceeded> {
    data_member_word(a, word, true, max_size)
}

/// A data tree: plain names at every node.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DataTree {
    pub name: Name,
    pub symbol: Symbol,
    pub children: Vec<DataTree>,
}

impl DataTree {
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(DataTree::size).sum::<usize>()
    }

    fn names_preorder(&self, out: &mut Vec<Name>) {
        out.push(self.name);
        for c in &self.children {
            c.names_preorder(out);
        }
    }

    fn with_pattern(&self, pattern: u64, position: &mut usize) -> BarTree {
        let barred = pattern & (1 << *position) != 0;
        *position += 1;
        let letter = if barred {
            Letter::Bar(self.name)
        } else {
            Letter::Plain(self.name)
        };
        let children = self
            .children
            .iter()
            .map(|c| c.with_pattern(pattern, position))
            .collect();
        BarTree::new(letter, self.symbol, children)
    }
}

/// Clean for trees: bar names pairwise distinct and disjoint from the
/// free names, mirroring the word case on the node set.
fn is_clean_tree(t: &BarTree) -> bool {
    let mut bars = Vec::new();
    fn collect(t: &BarTree, out: &mut Vec<Name>) {
        if let Letter::Bar(a) = t.letter {
            out.push(a);
        }
        for c in &t.children {
            collect(c, out);
        }
    }
    collect(t, &mut bars);
    let distinct: std::collections::BTreeSet<Name> = bars.iter().copied().collect();
    if distinct.len() != bars.len() {
        return false;
    }
    let free = crate::trees::free_names_tree(t);
    distinct.is_disjoint(&free)
}

fn data_member_tree(
    a: &BarNftaBottomUp,
    tree: &DataTree,
    require_clean: bool,
    max_size: usize,
) -> Result<bool, DataBoundExceeded> {
    let size = tree.size();
    if size > max_size {
        return Err(DataBoundExceeded {
            size,
            limit: max_size,
        });
    }
    let mut names = Vec::new();
    tree.names_preorder(&mut names);
    let mut ext = a.alphabet().clone();
    for &n in &names {
        ext.insert(Letter::Plain(n));
        ext.insert(Letter::Bar(n));
    }
    let closed = close_tree(a, &ext);
    Ok(bar_patterns(size).any(|pattern| {
        let mut position = 0;
        let candidate = tree.with_pattern(pattern, &mut position);
        if require_clean && !is_clean_tree(&candidate) {
            return false;
        }
        literal_member_tree(&closed, &candidate).unwrap_or(false)
    }))
}

pub fn data_member_local_tree(
    a: &BarNftaBottomUp,
    tree: &DataTree,
    max_size: usize,
) -> Result<bool, DataBoundExceeded> {
    data_member_tree(a, tree, false, max_size)
}

pub fn data_member_global_tree(
    a: &BarNftaBottomUp,
    tree: &DataTree,
    max_size: usize,
) -> Result<bool, DataBoundExceeded> {
    data_member_tree(a, tree, true, max_size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::singleton_word;

    fn n(s: &str) -> Name {
        Name::new(s)
    }

    fn pl(s: &str) -> Letter {
        Letter::Plain(n(s))
    }

    fn br(s: &str) -> Letter {
        Letter::Bar(n(s))
    }

    #[test]
    fn local_membership_finds_a_barring() {
        // hidden language: the alpha-class of "|a a"; data word "z z" is
        // readable by barring the first z
        let a = singleton_word(
            &BarString::new(vec![br("a"), pl("a")]),
            &BarAlphabet::new([br("a"), pl("a")]),
        )
        .unwrap();
        assert_eq!(data_member_local_word(&a, &[n("z"), n("z")], 8), Ok(true));
        assert_eq!(data_member_local_word(&a, &[n("z"), n("y")], 8), Ok(false));
        // empty data word: accepted iff the automaton accepts the empty word
        assert_eq!(data_member_local_word(&a, &[], 8), Ok(false));
        assert!(data_member_local_word(&a, &vec![n("z"); 20], 8).is_err());
    }

    #[test]
    fn global_membership_requires_cleanliness() {
        // language: classes of "|a |a" (shadowed rebinding). Locally the
        // data word "z z" fits (|z |z), but no clean barring exists.
        let a = singleton_word(
            &BarString::new(vec![br("a"), br("a")]),
            &BarAlphabet::new([br("a")]),
        )
        .unwrap();
        assert_eq!(data_member_local_word(&a, &[n("z"), n("z")], 8), Ok(true));
        assert_eq!(data_member_global_word(&a, &[n("z"), n("z")], 8), Ok(false));
        assert_eq!(data_member_global_word(&a, &[n("z"), n("y")], 8), Ok(true));
    }
}
