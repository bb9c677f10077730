//! Exhaustive enumerations and corpus sweeps.
//!
//! The sweeps here are the data-parallel inner loops of the verification
//! suites: oracle-agreement checks over all short words, closure
//! correctness over generated automata, and prefix-consistency checks for
//! ultimately periodic words. With the `parallel` feature (on by
//! default) they fan out over rayon; `Mode::Sequential` always runs the
//! single-threaded path, which is what `--no-default-features` leaves.

use std::collections::HashSet;

use crate::automata::{literal_member_tree, literal_member_word, BarAlphabet, BarNfa, BarNftaBottomUp};
use crate::closure::{close_tree, close_word};
use crate::nf::{alpha_eq_string, alpha_eq_up, brute_alpha_eq, nf_string, nf_tree, NfString, NfTree};
use crate::trees::{BarTree, Signature};
use crate::words::{BarString, Letter, UltPeriodicWord};

/// Execution mode for a sweep.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Mode {
    Sequential,
    /// Rayon-parallel when the `parallel` feature is enabled; falls back
    /// to sequential otherwise.
    Parallel,
}

#[cfg(feature = "parallel")]
fn find_map<T, R, F>(mode: Mode, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync,
{
    use rayon::prelude::*;
    match mode {
        Mode::Parallel => items.par_iter().find_map_any(f),
        Mode::Sequential => items.iter().find_map(f),
    }
}

#[cfg(not(feature = "parallel"))]
fn find_map<T, R, F>(_mode: Mode, items: &[T], f: F) -> Option<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> Option<R> + Sync,
{
    items.iter().find_map(f)
}

/// All bar strings over the given letters with length up to `max_len`,
/// in short-lex order.
pub fn enumerate_bar_strings(letters: &[Letter], max_len: usize) -> Vec<BarString> {
    let mut letters = letters.to_vec();
    letters.sort();
    let mut out = vec![BarString::empty()];
    let mut frontier = vec![BarString::empty()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(frontier.len() * letters.len());
        for w in &frontier {
            for &l in &letters {
                let mut u = w.clone();
                u.push(l);
                next.push(u);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// All bar strings of exactly the given length.
pub fn enumerate_bar_strings_of_len(letters: &[Letter], len: usize) -> Vec<BarString> {
    let mut letters = letters.to_vec();
    letters.sort();
    let mut frontier = vec![BarString::empty()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(frontier.len() * letters.len());
        for w in &frontier {
            for &l in &letters {
                let mut u = w.clone();
                u.push(l);
                next.push(u);
            }
        }
        frontier = next;
    }
    frontier
}

/// All trees over the given letters and signature with depth up to
/// `max_depth` (a leaf has depth 1), in ascending tree order.
pub fn enumerate_trees(letters: &[Letter], sig: &Signature, max_depth: usize) -> Vec<BarTree> {
    let mut letters = letters.to_vec();
    letters.sort();
    let mut by_depth: Vec<Vec<BarTree>> = vec![Vec::new()]; // by_depth[d] = trees of depth <= d
    for depth in 1..=max_depth {
        let smaller = &by_depth[depth - 1];
        let mut level = Vec::new();
        for (f, arity) in sig.symbols() {
            for &l in &letters {
                let mut tuples: Vec<Vec<BarTree>> = vec![Vec::new()];
                for _ in 0..arity {
                    let mut next = Vec::new();
                    for t in &tuples {
                        for c in smaller {
                            let mut t2 = t.clone();
                            t2.push(c.clone());
                            next.push(t2);
                        }
                    }
                    tuples = next;
                }
                for children in tuples {
                    level.push(BarTree::new(l, f, children));
                }
            }
        }
        // depth <= d trees: all of depth <= d-1 plus the new level (dedup:
        // new level trees have depth exactly d only if some child has depth
        // d-1, but shallow combinations reappear; collect into a set-like
        // merge instead).
        let mut all = smaller.clone();
        for t in level {
            if t.depth() == depth {
                all.push(t);
            }
        }
        by_depth.push(all);
    }
    let mut out = by_depth.pop().unwrap_or_default();
    out.sort();
    out
}

/// Exhaustive alpha-closure oracle for a word automaton: the normal forms
/// of all accepted words up to a length bound, computed from literal
/// membership and normal forms only (independent of the closure
/// construction).
pub struct AlphaClosureOracle {
    by_len: Vec<HashSet<NfString>>,
}

impl AlphaClosureOracle {
    pub fn new(a: &BarNfa, max_len: usize) -> Self {
        let letters: Vec<Letter> = a.alphabet().iter().collect();
        let mut by_len = Vec::with_capacity(max_len + 1);
        for len in 0..=max_len {
            let mut set = HashSet::new();
            for w in enumerate_bar_strings_of_len(&letters, len) {
                if literal_member_word(a, &w) {
                    set.insert(nf_string(&w));
                }
            }
            by_len.push(set);
        }
        AlphaClosureOracle { by_len }
    }

    /// Is `w` alpha-equivalent to some accepted word?
    pub fn contains(&self, w: &BarString) -> bool {
        self.by_len
            .get(w.len())
            .is_some_and(|set| set.contains(&nf_string(w)))
    }
}

/// Tree analogue of [`AlphaClosureOracle`], keyed by normal forms of all
/// accepted trees up to a depth bound.
pub struct TreeClosureOracle {
    nfs: HashSet<NfTree>,
    max_depth: usize,
}

impl TreeClosureOracle {
    pub fn new(a: &BarNftaBottomUp, max_depth: usize) -> Self {
        let letters: Vec<Letter> = a.alphabet().iter().collect();
        let mut nfs = HashSet::new();
        for t in enumerate_trees(&letters, a.signature(), max_depth) {
            if literal_member_tree(a, &t).unwrap_or(false) {
                nfs.insert(nf_tree(&t));
            }
        }
        TreeClosureOracle { nfs, max_depth }
    }

    pub fn contains(&self, t: &BarTree) -> bool {
        t.depth() <= self.max_depth && self.nfs.contains(&nf_tree(t))
    }
}

/// Compares the fast alpha-equivalence against the brute-force oracle on
/// all ordered pairs of bar strings over `letters` with length up to
/// `max_len`, returning the first disagreement.
pub fn alpha_agreement_failure(
    mode: Mode,
    letters: &[Letter],
    max_len: usize,
) -> Option<(BarString, BarString)> {
    let words = enumerate_bar_strings(letters, max_len);
    // Pairs (i, j) with i <= j; the relation is symmetric and both checks
    // are, so this halves the work without losing coverage.
    let pairs: Vec<(usize, usize)> = (0..words.len())
        .flat_map(|i| (i..words.len()).map(move |j| (i, j)))
        .collect();
    find_map(mode, &pairs, |&(i, j)| {
        let (v, w) = (&words[i], &words[j]);
        let fast = alpha_eq_string(v, w);
        let brute = brute_alpha_eq(v, w, max_len).expect("within configured bound");
        (fast != brute).then(|| (v.clone(), w.clone()))
    })
}

/// Checks closure correctness for one word automaton: for every word over
/// the target alphabet up to `max_len`, literal membership in
/// `close_word(a, target)` must coincide with the exhaustive oracle
/// (some equal-length literal member of `a` that is alpha-equivalent).
/// Returns the first counterexample word.
pub fn closure_word_failure(
    mode: Mode,
    a: &BarNfa,
    target: &BarAlphabet,
    max_len: usize,
) -> Option<BarString> {
    let closed = close_word(a, target);
    let oracle = AlphaClosureOracle::new(a, max_len);
    let target_letters: Vec<Letter> = target.iter().collect();
    let words = enumerate_bar_strings(&target_letters, max_len);
    find_map(mode, &words, |w| {
        let via_closure = literal_member_word(&closed, w);
        let via_oracle = oracle.contains(w);
        (via_closure != via_oracle).then(|| w.clone())
    })
}

/// Tree analogue of [`closure_word_failure`] at a depth bound.
pub fn closure_tree_failure(
    mode: Mode,
    a: &BarNftaBottomUp,
    target: &BarAlphabet,
    max_depth: usize,
) -> Option<BarTree> {
    let closed = close_tree(a, target);
    let oracle = TreeClosureOracle::new(a, max_depth);
    let target_letters: Vec<Letter> = target.iter().collect();
    let trees = enumerate_trees(&target_letters, a.signature(), max_depth);
    find_map(mode, &trees, |t| {
        let via_closure = literal_member_tree(&closed, t).expect("signature preserved");
        let via_oracle = oracle.contains(t);
        (via_closure != via_oracle).then(|| t.clone())
    })
}

/// Checks one ultimately periodic pair against the prefix criterion: if
/// the pair is judged equivalent, every prefix pair up to
/// `|u1| + |u2| + 10 |v1| |v2|` must be alpha-equivalent; if judged
/// inequivalent, some prefix within that bound must differ. Returns the
/// offending prefix length on failure.
pub fn up_pair_inconsistency(x: &UltPeriodicWord, y: &UltPeriodicWord) -> Option<usize> {
    let bound =
        x.stem().len() + y.stem().len() + 10 * x.period().len() * y.period().len();
    let verdict = alpha_eq_up(x, y);
    if verdict {
        (0..=bound).find(|&n| !alpha_eq_string(&x.prefix(n), &y.prefix(n)))
    } else {
        if (0..=bound).any(|n| !alpha_eq_string(&x.prefix(n), &y.prefix(n))) {
            None
        } else {
            Some(bound)
        }
    }
}

/// Runs [`up_pair_inconsistency`] over a corpus of pairs.
pub fn up_consistency_failure(
    mode: Mode,
    pairs: &[(UltPeriodicWord, UltPeriodicWord)],
) -> Option<(UltPeriodicWord, UltPeriodicWord, usize)> {
    find_map(mode, pairs, |(x, y)| {
        up_pair_inconsistency(x, y).map(|n| (x.clone(), y.clone(), n))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names::{Name, Symbol};

    fn pl(s: &str) -> Letter {
        Letter::Plain(Name::new(s))
    }

    fn br(s: &str) -> Letter {
        Letter::Bar(Name::new(s))
    }

    #[test]
    fn enumeration_counts_and_order() {
        let letters = [pl("a"), br("a")];
        let words = enumerate_bar_strings(&letters, 3);
        assert_eq!(words.len(), 1 + 2 + 4 + 8);
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        assert_eq!(enumerate_bar_strings_of_len(&letters, 2).len(), 4);
    }

    #[test]
    fn tree_enumeration_counts() {
        let sig = Signature::new([(Symbol::new("f"), 1), (Symbol::new("c"), 0)]);
        let letters = [pl("a"), br("a")];
        // depth 1: 2 letters x c = 2 trees; depth 2 adds f over the two leaves x 2 letters = 4
        let d1 = enumerate_trees(&letters, &sig, 1);
        assert_eq!(d1.len(), 2);
        let d2 = enumerate_trees(&letters, &sig, 2);
        assert_eq!(d2.len(), 6);
        let mut sorted = d2.clone();
        sorted.sort();
        assert_eq!(d2, sorted);
    }

    #[test]
    fn small_alpha_agreement_sweep_passes() {
        let letters = [pl("a"), br("a"), pl("b"), br("b")];
        assert_eq!(
            alpha_agreement_failure(Mode::Sequential, &letters, 3),
            None
        );
        assert_eq!(alpha_agreement_failure(Mode::Parallel, &letters, 3), None);
    }
}
