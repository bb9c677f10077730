//! Nondeterministic word automata over bar alphabets and the standard
//! algorithms on them: membership, trimming, subset-construction
//! determinization, complement, product, and minimal-witness searches.
//!
//! All constructions emit reachable states only, numbered in breadth-first
//! discovery order with letters explored in sorted order, so outputs are
//! reproducible.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{default_state_names, AutomatonError, BarAlphabet, StateId};
use crate::words::{BarString, Letter};

/// A nondeterministic finite automaton over a finite bar alphabet.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarNfa {
    state_names: Vec<String>,
    alphabet: BarAlphabet,
    initial: StateId,
    finals: BTreeSet<StateId>,
    transitions: BTreeSet<(StateId, Letter, StateId)>,
}

impl BarNfa {
    pub fn new(
        state_names: Vec<String>,
        alphabet: BarAlphabet,
        initial: StateId,
        finals: BTreeSet<StateId>,
        transitions: BTreeSet<(StateId, Letter, StateId)>,
    ) -> Result<Self, AutomatonError> {
        let n = state_names.len();
        if initial >= n {
            return Err(AutomatonError::BadState(initial));
        }
        if let Some(&q) = finals.iter().find(|&&q| q >= n) {
            return Err(AutomatonError::BadState(q));
        }
        for &(p, l, q) in &transitions {
            if p >= n {
                return Err(AutomatonError::BadState(p));
            }
            if q >= n {
                return Err(AutomatonError::BadState(q));
            }
            if !alphabet.contains(&l) {
                return Err(AutomatonError::LetterOutsideAlphabet(l));
            }
        }
        Ok(BarNfa {
            state_names,
            alphabet,
            initial,
            finals,
            transitions,
        })
    }

    /// Convenience constructor with default state names.
    pub fn with_default_names(
        num_states: usize,
        alphabet: BarAlphabet,
        initial: StateId,
        finals: BTreeSet<StateId>,
        transitions: BTreeSet<(StateId, Letter, StateId)>,
    ) -> Result<Self, AutomatonError> {
        BarNfa::new(
            default_state_names(num_states),
            alphabet,
            initial,
            finals,
            transitions,
        )
    }

    pub fn num_states(&self) -> usize {
        self.state_names.len()
    }

    pub fn state_names(&self) -> &[String] {
        &self.state_names
    }

    pub fn alphabet(&self) -> &BarAlphabet {
        &self.alphabet
    }

    pub fn initial(&self) -> StateId {
        self.initial
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn is_final(&self, q: StateId) -> bool {
        self.finals.contains(&q)
    }

    pub fn transitions(&self) -> impl Iterator<Item = (StateId, Letter, StateId)> + '_ {
        self.transitions.iter().copied()
    }

    /// Successors of `q` on `l`, in ascending state order.
    pub fn successors(&self, q: StateId, l: Letter) -> impl Iterator<Item = StateId> + '_ {
        self.transitions
            .range((q, l, 0)..=(q, l, usize::MAX))
            .map(|&(_, _, t)| t)
    }

    pub fn is_deterministic_complete(&self) -> bool {
        self.state_names.iter().enumerate().all(|(q, _)| {
            self.alphabet
                .iter()
                .all(|l| self.successors(q, l).count() == 1)
        })
    }

    /// The empty-language automaton over an alphabet: one non-final state.
    pub fn empty_language(alphabet: BarAlphabet) -> BarNfa {
        BarNfa {
            state_names: default_state_names(1),
            alphabet,
            initial: 0,
            finals: BTreeSet::new(),
            transitions: BTreeSet::new(),
        }
    }

    /// Replaces the alphabet, dropping transitions whose letter is no
    /// longer present.
    pub fn restrict_alphabet(&self, alphabet: BarAlphabet) -> BarNfa {
        BarNfa {
            state_names: self.state_names.clone(),
            alphabet: alphabet.clone(),
            initial: self.initial,
            finals: self.finals.clone(),
            transitions: self
                .transitions
                .iter()
                .filter(|&&(_, l, _)| alphabet.contains(&l))
                .copied()
                .collect(),
        }
    }

    /// Keeps only states on a path from the initial state to a final
    /// state, renumbered in breadth-first order. The initial state is kept
    /// even if the language is empty.
    pub fn trim(&self) -> BarNfa {
        let n = self.num_states();
        let mut reach = vec![false; n];
        let mut queue = VecDeque::from([self.initial]);
        reach[self.initial] = true;
        while let Some(q) = queue.pop_front() {
            for &(p, _, t) in self.transitions.range((q, min_letter(), 0)..) {
                if p != q {
                    break;
                }
                if !reach[t] {
                    reach[t] = true;
                    queue.push_back(t);
                }
            }
        }
        let mut coreach = vec![false; n];
        let mut rev: Vec<Vec<StateId>> = vec![Vec::new(); n];
        for &(p, _, t) in &self.transitions {
            rev[t].push(p);
        }
        let mut queue: VecDeque<StateId> = self.finals.iter().copied().collect();
        for &q in &self.finals {
            coreach[q] = true;
        }
        while let Some(q) = queue.pop_front() {
            for &p in &rev[q] {
                if !coreach[p] {
                    coreach[p] = true;
                    queue.push_back(p);
                }
            }
        }
        let keep: Vec<bool> = (0..n).map(|q| reach[q] && coreach[q]).collect();
        if !keep[self.initial] {
            return BarNfa::empty_language(self.alphabet.clone());
        }
        // BFS renumbering within kept states.
        let mut id = vec![usize::MAX; n];
        let mut order = Vec::new();
        let mut queue = VecDeque::from([self.initial]);
        id[self.initial] = 0;
        order.push(self.initial);
        while let Some(q) = queue.pop_front() {
            for l in self.alphabet.iter() {
                for t in self.successors(q, l) {
                    if keep[t] && id[t] == usize::MAX {
                        id[t] = order.len();
                        order.push(t);
                        queue.push_back(t);
                    }
                }
            }
        }
        BarNfa {
            state_names: order.iter().map(|&q| self.state_names[q].clone()).collect(),
            alphabet: self.alphabet.clone(),
            initial: 0,
            finals: self
                .finals
                .iter()
                .filter(|&&q| keep[q] && id[q] != usize::MAX)
                .map(|&q| id[q])
                .collect(),
            transitions: self
                .transitions
                .iter()
                .filter(|&&(p, _, t)| {
                    keep[p] && keep[t] && id[p] != usize::MAX && id[t] != usize::MAX
                })
                .map(|&(p, l, t)| (id[p], l, id[t]))
                .collect(),
        }
    }
}

fn min_letter() -> Letter {
    // Smallest possible letter for range queries: the empty name sorts first.
    Letter::Plain(crate::names::Name::new(""))
}

/// Literal membership: is `w` accepted? Letters outside the alphabet make
/// the answer `false`, not an error.
pub fn literal_member_word(a: &BarNfa, w: &BarString) -> bool {
    if w.iter().any(|l| !a.alphabet().contains(l)) {
        return false;
    }
    let mut current = vec![false; a.num_states()];
    current[a.initial()] = true;
    for &l in w.letters() {
        let mut next = vec![false; a.num_states()];
        for (q, &active) in current.iter().enumerate() {
            if active {
                for t in a.successors(q, l) {
                    next[t] = true;
                }
            }
        }
        current = next;
    }
    current
        .iter()
        .enumerate()
        .any(|(q, &active)| active && a.is_final(q))
}

/// Subset-construction determinization. The input is trimmed first; the
/// output is deterministic, complete, and accepts the same literal
/// language, with only reachable subsets materialized.
pub fn determinize_word(a: &BarNfa) -> BarNfa {
    let a = a.trim();
    let mut subsets: Vec<BTreeSet<StateId>> = Vec::new();
    let mut index: HashMap<BTreeSet<StateId>, StateId> = HashMap::new();
    let mut transitions = BTreeSet::new();
    let start: BTreeSet<StateId> = [a.initial()].into();
    index.insert(start.clone(), 0);
    subsets.push(start);
    let mut next_subset = 0;
    while next_subset < subsets.len() {
        let current = subsets[next_subset].clone();
        for l in a.alphabet().iter() {
            let successor: BTreeSet<StateId> = current
                .iter()
                .flat_map(|&q| a.successors(q, l))
                .collect();
            let id = *index.entry(successor.clone()).or_insert_with(|| {
                subsets.push(successor);
                subsets.len() - 1
            });
            transitions.insert((next_subset, l, id));
        }
        next_subset += 1;
    }
    let finals = subsets
        .iter()
        .enumerate()
        .filter(|(_, s)| s.iter().any(|&q| a.is_final(q)))
        .map(|(i, _)| i)
        .collect();
    BarNfa {
        state_names: default_state_names(subsets.len()),
        alphabet: a.alphabet().clone(),
        initial: 0,
        finals,
        transitions,
    }
}

/// Complement of a deterministic complete automaton: swap final and
/// non-final states.
pub fn complement_word(a: &BarNfa) -> Result<BarNfa, AutomatonError> {
    if !a.is_deterministic_complete() {
        return Err(AutomatonError::NotDeterministicComplete);
    }
    let finals = (0..a.num_states()).filter(|q| !a.is_final(*q)).collect();
    Ok(BarNfa {
        state_names: a.state_names.clone(),
        alphabet: a.alphabet.clone(),
        initial: a.initial,
        finals,
        transitions: a.transitions.clone(),
    })
}

/// Product automaton accepting the intersection of the literal languages.
/// Both automata must be over the same alphabet.
pub fn product_word(a: &BarNfa, b: &BarNfa) -> Result<BarNfa, AutomatonError> {
    if a.alphabet() != b.alphabet() {
        return Err(AutomatonError::AlphabetMismatch);
    }
    let mut pairs: Vec<(StateId, StateId)> = Vec::new();
    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut transitions = BTreeSet::new();
    let start = (a.initial(), b.initial());
    index.insert(start, 0);
    pairs.push(start);
    let mut next = 0;
    while next < pairs.len() {
        let (p, q) = pairs[next];
        for l in a.alphabet().iter() {
            for pt in a.successors(p, l) {
                for qt in b.successors(q, l) {
                    let id = *index.entry((pt, qt)).or_insert_with(|| {
                        pairs.push((pt, qt));
                        pairs.len() - 1
                    });
                    transitions.insert((next, l, id));
                }
            }
        }
        next += 1;
    }
    let finals = pairs
        .iter()
        .enumerate()
        .filter(|(_, &(p, q))| a.is_final(p) && b.is_final(q))
        .map(|(i, _)| i)
        .collect();
    Ok(BarNfa {
        state_names: default_state_names(pairs.len()),
        alphabet: a.alphabet().clone(),
        initial: 0,
        finals,
        transitions,
    })
}

/// Shortest accepted word; among the shortest, the lexicographically
/// least (letters in name order, plain before bar). `None` iff the
/// language is empty.
pub fn shortest_accepted_word(a: &BarNfa) -> Option<BarString> {
    if a.is_final(a.initial()) {
        return Some(BarString::empty());
    }
    let mut pred: Vec<Option<(StateId, Letter)>> = vec![None; a.num_states()];
    let mut seen = vec![false; a.num_states()];
    let mut queue = VecDeque::from([a.initial()]);
    seen[a.initial()] = true;
    while let Some(q) = queue.pop_front() {
        for l in a.alphabet().iter() {
            for t in a.successors(q, l) {
                if !seen[t] {
                    seen[t] = true;
                    pred[t] = Some((q, l));
                    if a.is_final(t) {
                        let mut letters = Vec::new();
                        let mut s = t;
                        while let Some((p, pl)) = pred[s] {
                            letters.push(pl);
                            s = p;
                        }
                        letters.reverse();
                        return Some(BarString::new(letters));
                    }
                    queue.push_back(t);
                }
            }
        }
    }
    None
}

/// A size-minimal, lexicographically least word in the symmetric
/// difference of the two literal languages, or `None` if they are equal.
pub fn shortest_in_symmetric_difference_word(
    a: &BarNfa,
    b: &BarNfa,
) -> Result<Option<BarString>, AutomatonError> {
    if a.alphabet() != b.alphabet() {
        return Err(AutomatonError::AlphabetMismatch);
    }
    let da = determinize_word(a);
    let db = determinize_word(b);
    let in_a_not_b = shortest_accepted_word(&product_word(&da, &complement_word(&db)?)?);
    let in_b_not_a = shortest_accepted_word(&product_word(&db, &complement_word(&da)?)?);
    Ok(match (in_a_not_b, in_b_not_a) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    })
}

/// An automaton whose literal language is exactly `{w}`.
pub fn singleton_word(w: &BarString, alphabet: &BarAlphabet) -> Result<BarNfa, AutomatonError> {
    if let Some(l) = w.iter().find(|l| !alphabet.contains(l)) {
        return Err(AutomatonError::LetterOutsideAlphabet(*l));
    }
    let n = w.len();
    let transitions = w
        .letters()
        .iter()
        .enumerate()
        .map(|(i, &l)| (i, l, i + 1))
        .collect();
    Ok(BarNfa {
        state_names: default_state_names(n + 1),
        alphabet: alphabet.clone(),
        initial: 0,
        finals: [n].into(),
        transitions,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names::Name;

    fn pl(s: &str) -> Letter {
        Letter::Plain(Name::new(s))
    }

    fn br(s: &str) -> Letter {
        Letter::Bar(Name::new(s))
    }

    fn w(ls: &[Letter]) -> BarString {
        BarString::new(ls.to_vec())
    }

    fn ab_alphabet() -> BarAlphabet {
        BarAlphabet::new([pl("a"), pl("b"), br("a"), br("b")])
    }

    fn bar_a_a() -> BarNfa {
        singleton_word(&w(&[br("a"), pl("a")]), &ab_alphabet()).unwrap()
    }

    #[test]
    fn literal_membership_is_literal() {
        let a = bar_a_a();
        assert!(literal_member_word(&a, &w(&[br("a"), pl("a")])));
        assert!(!literal_member_word(&a, &w(&[br("b"), pl("b")])));
        assert!(!literal_member_word(&a, &w(&[pl("a")])));
        // letters outside the alphabet: false, not an error
        assert!(!literal_member_word(&a, &w(&[pl("z")])));
    }

    #[test]
    fn singleton_accepts_exactly_one_word() {
        let target = w(&[br("a"), pl("a")]);
        let a = bar_a_a();
        assert_eq!(a.num_states(), 3);
        for len in 0..4 {
            for word in crate::sweep::enumerate_bar_strings(
                &ab_alphabet().iter().collect::<Vec<_>>(),
                len,
            ) {
                assert_eq!(literal_member_word(&a, &word), word == target);
            }
        }
    }

    #[test]
    fn determinize_preserves_language_and_is_complete() {
        // Nondeterministic branch: accepts a(a|b) and ab via two paths.
        let alph = BarAlphabet::new([pl("a"), pl("b")]);
        let trans: BTreeSet<_> = [
            (0, pl("a"), 1),
            (0, pl("a"), 2),
            (1, pl("a"), 3),
            (2, pl("b"), 3),
        ]
        .into();
        let a = BarNfa::with_default_names(4, alph.clone(), 0, [3].into(), trans).unwrap();
        let d = determinize_word(&a);
        assert!(d.is_deterministic_complete());
        let letters: Vec<Letter> = alph.iter().collect();
        for word in crate::sweep::enumerate_bar_strings(&letters, 6) {
            assert_eq!(
                literal_member_word(&a, &word),
                literal_member_word(&d, &word),
                "disagreement on {word}"
            );
        }
    }

    #[test]
    fn determinize_empty_language_gives_sink() {
        let a = BarNfa::empty_language(ab_alphabet());
        let d = determinize_word(&a);
        assert!(d.is_deterministic_complete());
        assert!(d.finals().is_empty());
    }

    #[test]
    fn complement_partitions_short_words() {
        let d = determinize_word(&bar_a_a());
        let c = complement_word(&d).unwrap();
        let letters: Vec<Letter> = ab_alphabet().iter().collect();
        for word in crate::sweep::enumerate_bar_strings(&letters, 4) {
            assert!(literal_member_word(&d, &word) ^ literal_member_word(&c, &word));
        }
        let cc = complement_word(&c).unwrap();
        for word in crate::sweep::enumerate_bar_strings(&letters, 4) {
            assert_eq!(
                literal_member_word(&d, &word),
                literal_member_word(&cc, &word)
            );
        }
        // complement of the empty language accepts everything
        let all = complement_word(&determinize_word(&BarNfa::empty_language(ab_alphabet())))
            .unwrap();
        for word in crate::sweep::enumerate_bar_strings(&letters, 3) {
            assert!(literal_member_word(&all, &word));
        }
    }

    #[test]
    fn complement_requires_deterministic_complete_input() {
        assert_eq!(
            complement_word(&bar_a_a()),
            Err(AutomatonError::NotDeterministicComplete)
        );
    }

    #[test]
    fn product_intersects() {
        let a = bar_a_a();
        let universal =
            complement_word(&determinize_word(&BarNfa::empty_language(ab_alphabet()))).unwrap();
        let empty = BarNfa::empty_language(ab_alphabet());
        let letters: Vec<Letter> = ab_alphabet().iter().collect();
        let pu = product_word(&a, &universal).unwrap();
        let pe = product_word(&a, &empty).unwrap();
        for word in crate::sweep::enumerate_bar_strings(&letters, 3) {
            assert_eq!(
                literal_member_word(&pu, &word),
                literal_member_word(&a, &word)
            );
            assert!(!literal_member_word(&pe, &word));
        }
    }

    #[test]
    fn shortest_witness_is_minimal_and_lexicographically_least() {
        let a = bar_a_a();
        assert_eq!(
            shortest_in_symmetric_difference_word(&a, &a).unwrap(),
            None
        );
        let empty = BarNfa::empty_language(ab_alphabet());
        assert_eq!(
            shortest_in_symmetric_difference_word(&a, &empty).unwrap(),
            Some(w(&[br("a"), pl("a")]))
        );
        // single-word language {"a"} vs empty: witness "a"
        let just_a = singleton_word(&w(&[pl("a")]), &ab_alphabet()).unwrap();
        assert_eq!(
            shortest_in_symmetric_difference_word(&just_a, &empty).unwrap(),
            Some(w(&[pl("a")]))
        );
    }

    #[test]
    fn trim_drops_dead_states() {
        let alph = BarAlphabet::new([pl("a")]);
        // state 2 is unreachable, state 3 is a dead end
        let trans: BTreeSet<_> = [
            (0, pl("a"), 1),
            (2, pl("a"), 1),
            (0, pl("a"), 3),
        ]
        .into();
        let a = BarNfa::with_default_names(4, alph.clone(), 0, [1].into(), trans).unwrap();
        let t = a.trim();
        assert_eq!(t.num_states(), 2);
        assert!(literal_member_word(&t, &w(&[pl("a")])));
        // trimming an empty-language automaton keeps a lone initial state
        let e = BarNfa::with_default_names(2, alph, 0, BTreeSet::new(), BTreeSet::new()).unwrap();
        assert_eq!(e.trim().num_states(), 1);
    }
}
