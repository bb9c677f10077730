//! Seeded random generation of words, trees and automata for corpus
//! construction. All randomness flows from an explicit 64-bit seed
//! through one splittable generator (independent streams per purpose),
//! so corpora are reproducible byte for byte.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;

use crate::automata::{BarAlphabet, BarNfa, BarNftaBottomUp, TreeRule};
use crate::trees::{BarTree, Signature};
use crate::words::{BarString, Letter, UltPeriodicWord};

/// The corpus generator for a seed.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// An independent stream split off the same seed.
pub fn rng_stream(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub fn random_bar_string(rng: &mut ChaCha8Rng, letters: &[Letter], len: usize) -> BarString {
    (0..len)
        .map(|_| letters[rng.gen_range(0..letters.len())])
        .collect()
}

pub fn random_up_word(
    rng: &mut ChaCha8Rng,
    letters: &[Letter],
    max_stem: usize,
    max_period: usize,
) -> UltPeriodicWord {
    let stem_len = rng.gen_range(0..=max_stem);
    let period_len = rng.gen_range(1..=max_period.max(1));
    UltPeriodicWord::new(
        random_bar_string(rng, letters, stem_len),
        random_bar_string(rng, letters, period_len),
    )
    .expect("period is nonempty")
}

/// A random tree of depth at most `max_depth`: below the bound, arities
/// are drawn uniformly from the signature; at the bound only nullary
/// symbols are used. The signature must contain a nullary symbol.
pub fn random_tree(
    rng: &mut ChaCha8Rng,
    letters: &[Letter],
    signature: &Signature,
    max_depth: usize,
) -> BarTree {
    let all: Vec<_> = signature.symbols().collect();
    let nullary: Vec<_> = all.iter().copied().filter(|&(_, n)| n == 0).collect();
    assert!(
        !nullary.is_empty(),
        "tree generation needs a nullary symbol"
    );
    let (symbol, arity) = if max_depth <= 1 {
        nullary[rng.gen_range(0..nullary.len())]
    } else {
        all[rng.gen_range(0..all.len())]
    };
    let letter = letters[rng.gen_range(0..letters.len())];
    let children = (0..arity)
        .map(|_| random_tree(rng, letters, signature, max_depth - 1))
        .collect();
    BarTree::new(letter, symbol, children)
}

/// A random word automaton: `transitions_per_state` outgoing edges with
/// uniformly drawn letters and targets, plus at least one final state.
pub fn random_nfa(
    rng: &mut ChaCha8Rng,
    states: usize,
    alphabet: &BarAlphabet,
    transitions_per_state: usize,
) -> BarNfa {
    let letters: Vec<Letter> = alphabet.iter().collect();
    let mut transitions = BTreeSet::new();
    for q in 0..states {
        for _ in 0..transitions_per_state {
            let l = letters[rng.gen_range(0..letters.len())];
            let t = rng.gen_range(0..states);
            transitions.insert((q, l, t));
        }
    }
    let mut finals: BTreeSet<usize> = BTreeSet::new();
    finals.insert(rng.gen_range(0..states));
    for q in 0..states {
        if rng.gen_bool(0.3) {
            finals.insert(q);
        }
    }
    BarNfa::with_default_names(states, alphabet.clone(), 0, finals, transitions)
        .expect("generated transitions are consistent")
}

/// A random bottom-up tree automaton with roughly `rules_per_state`
/// rules per state and at least one nullary rule.
pub fn random_nfta(
    rng: &mut ChaCha8Rng,
    states: usize,
    alphabet: &BarAlphabet,
    signature: &Signature,
    rules_per_state: usize,
) -> BarNftaBottomUp {
    let letters: Vec<Letter> = alphabet.iter().collect();
    let symbols: Vec<_> = signature.symbols().collect();
    let nullary: Vec<_> = symbols.iter().copied().filter(|&(_, n)| n == 0).collect();
    assert!(
        !nullary.is_empty(),
        "tree automaton generation needs a nullary symbol"
    );
    let mut rules = BTreeSet::new();
    // Guarantee at least one nullary rule so the language can be nonempty.
    {
        let (f, _) = nullary[rng.gen_range(0..nullary.len())];
        rules.insert(TreeRule {
            symbol: f,
            letter: letters[rng.gen_range(0..letters.len())],
            children: Vec::new(),
            result: rng.gen_range(0..states),
        });
    }
    for q in 0..states {
        for _ in 0..rules_per_state {
            let (f, arity) = symbols[rng.gen_range(0..symbols.len())];
            rules.insert(TreeRule {
                symbol: f,
                letter: letters[rng.gen_range(0..letters.len())],
                children: (0..arity).map(|_| rng.gen_range(0..states)).collect(),
                result: q,
            });
        }
    }
    let mut finals: BTreeSet<usize> = BTreeSet::new();
    finals.insert(rng.gen_range(0..states));
    for q in 0..states {
        if rng.gen_bool(0.3) {
            finals.insert(q);
        }
    }
    BarNftaBottomUp::with_default_names(states, alphabet.clone(), signature.clone(), finals, rules)
        .expect("generated rules are consistent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names::Name;

    #[test]
    fn generation_is_deterministic_in_the_seed() {
        let letters = [
            Letter::Plain(Name::new("a")),
            Letter::Bar(Name::new("a")),
            Letter::Plain(Name::new("b")),
        ];
        let w1 = random_bar_string(&mut rng(7), &letters, 10);
        let w2 = random_bar_string(&mut rng(7), &letters, 10);
        assert_eq!(w1, w2);
        let w3 = random_bar_string(&mut rng(8), &letters, 10);
        assert_ne!(w1, w3);
        // independent streams differ
        let s1 = random_bar_string(&mut rng_stream(7, 1), &letters, 10);
        assert_ne!(w1, s1);
    }

    #[test]
    fn generated_automata_are_well_formed() {
        let alphabet = BarAlphabet::new([
            Letter::Plain(Name::new("a")),
            Letter::Bar(Name::new("b")),
        ]);
        let a = random_nfa(&mut rng(3), 4, &alphabet, 3);
        assert_eq!(a.num_states(), 4);
        assert!(!a.finals().is_empty());
        let sig = Signature::new([
            (crate::names::Symbol::new("f"), 2),
            (crate::names::Symbol::new("c"), 0),
        ]);
        let t = random_nfta(&mut rng(4), 3, &alphabet, &sig, 4);
        assert_eq!(t.num_states(), 3);
    }

    #[test]
    fn random_trees_respect_depth_and_signature() {
        let sig = Signature::new([
            (crate::names::Symbol::new("f"), 2),
            (crate::names::Symbol::new("c"), 0),
        ]);
        let letters = [Letter::Plain(Name::new("a")), Letter::Bar(Name::new("b"))];
        let mut r = rng(11);
        for _ in 0..50 {
            let t = random_tree(&mut r, &letters, &sig, 3);
            assert!(t.depth() <= 3);
            assert!(t.conforms_to(&sig));
        }
    }
}
