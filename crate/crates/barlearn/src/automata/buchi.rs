//! Büchi interpretation of bar automata: acceptance on infinite words,
//! lasso emptiness search, and the two-phase intersection product.

use std::collections::{BTreeSet, HashMap, VecDeque};

use super::word::BarNfa;
use super::{default_state_names, AutomatonError, BarAlphabet, StateId};
use crate::words::{BarString, Letter, UltPeriodicWord};

/// A Büchi automaton: the same structure as [`BarNfa`], read over
/// infinite words (a run is accepting if it visits a final state
/// infinitely often).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarBuchi {
    inner: BarNfa,
}

impl BarBuchi {
    pub fn new(inner: BarNfa) -> Self {
        BarBuchi { inner }
    }

    pub fn as_nfa(&self) -> &BarNfa {
        &self.inner
    }

    pub fn into_nfa(self) -> BarNfa {
        self.inner
    }

    pub fn alphabet(&self) -> &BarAlphabet {
        self.inner.alphabet()
    }

    pub fn num_states(&self) -> usize {
        self.inner.num_states()
    }
}

/// A witness for Büchi nonemptiness: a stem run from the initial state to
/// a state on a cycle that visits at least one final state.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Lasso {
    /// States along the stem, starting at the initial state; one longer
    /// than the stem label.
    pub stem_states: Vec<StateId>,
    pub stem: BarString,
    /// States along the cycle; first and last entries are equal.
    pub cycle_states: Vec<StateId>,
    pub cycle: BarString,
}

impl Lasso {
    pub fn to_up_word(&self) -> UltPeriodicWord {
        UltPeriodicWord::new(self.stem.clone(), self.cycle.clone())
            .expect("lasso cycles are nonempty")
    }

    /// Re-simulates the lasso on an automaton: every step must be a
    /// transition, the stem must start at the initial state, the cycle
    /// must close, and the cycle must visit a final state.
    pub fn verify(&self, a: &BarBuchi) -> bool {
        let nfa = a.as_nfa();
        let steps_ok = |states: &[StateId], letters: &BarString| {
            states.len() == letters.len() + 1
                && states.windows(2).zip(letters.letters()).all(|(pair, &l)| {
                    nfa.successors(pair[0], l).any(|t| t == pair[1])
                })
        };
        steps_ok(&self.stem_states, &self.stem)
            && steps_ok(&self.cycle_states, &self.cycle)
            && self.stem_states.first() == Some(&nfa.initial())
            && self.stem_states.last() == self.cycle_states.first()
            && self.cycle_states.first() == self.cycle_states.last()
            && !self.cycle.is_empty()
            && self.cycle_states.iter().any(|&q| nfa.is_final(q))
    }
}

// Shortest path from `from` to `to` (nonempty if from == to), with letters
// explored in sorted order so the first path found is lexicographically
// least among the shortest. Returns (states, letters).
fn shortest_path(
    nfa: &BarNfa,
    from: StateId,
    to: StateId,
    nonempty: bool,
) -> Option<(Vec<StateId>, BarString)> {
    if from == to && !nonempty {
        return Some((vec![from], BarString::empty()));
    }
    let mut pred: Vec<Option<(StateId, Letter)>> = vec![None; nfa.num_states()];
    let mut seen = vec![false; nfa.num_states()];
    let mut queue = VecDeque::new();
    // Seed with the one-step successors so that from == to requires a real cycle.
    for l in nfa.alphabet().iter() {
        for t in nfa.successors(from, l) {
            if t == to {
                return Some((vec![from, to], BarString::new(vec![l])));
            }
            if !seen[t] {
                seen[t] = true;
                pred[t] = Some((from, l));
                queue.push_back(t);
            }
        }
    }
    while let Some(q) = queue.pop_front() {
        for l in nfa.alphabet().iter() {
            for t in nfa.successors(q, l) {
                if t == to {
                    let mut states = vec![to, q];
                    let mut letters = vec![l];
                    let mut s = q;
                    while let Some((p, pl)) = pred[s] {
                        letters.push(pl);
                        states.push(p);
                        s = p;
                    }
                    states.reverse();
                    letters.reverse();
                    return Some((states, BarString::new(letters)));
                }
                if !seen[t] {
                    seen[t] = true;
                    pred[t] = Some((q, l));
                    queue.push_back(t);
                }
            }
        }
    }
    None
}

/// Searches for an accepting lasso: a final state reachable from the
/// initial state and lying on a nonempty cycle. Among final states that
/// qualify, the lasso with the smallest combined label is returned.
pub fn buchi_lasso_search(a: &BarBuchi) -> Option<Lasso> {
    let nfa = a.as_nfa();
    let mut best: Option<Lasso> = None;
    for &f in nfa.finals() {
        let Some((stem_states, stem)) = shortest_path(nfa, nfa.initial(), f, false) else {
            continue;
        };
        let Some((cycle_states, cycle)) = shortest_path(nfa, f, f, true) else {
            continue;
        };
        let candidate = Lasso {
            stem_states,
            stem,
            cycle_states,
            cycle,
        };
        let key = |l: &Lasso| (l.stem.len() + l.cycle.len(), l.stem.concat(&l.cycle));
        if best.as_ref().map_or(true, |b| key(&candidate) < key(b)) {
            best = Some(candidate);
        }
    }
    best
}

/// Büchi intersection via the standard two-phase flag construction:
/// phase 0 waits for a final state of the left factor, phase 1 for one of
/// the right factor; accepting states are phase-1 states whose right
/// component is final.
pub fn buchi_product(a: &BarBuchi, b: &BarBuchi) -> Result<BarBuchi, AutomatonError> {
    let (na, nb) = (a.as_nfa(), b.as_nfa());
    if na.alphabet() != nb.alphabet() {
        return Err(AutomatonError::AlphabetMismatch);
    }
    type Triple = (StateId, StateId, u8);
    let mut states: Vec<Triple> = Vec::new();
    let mut index: HashMap<Triple, StateId> = HashMap::new();
    let mut transitions = BTreeSet::new();
    let start = (na.initial(), nb.initial(), 0u8);
    index.insert(start, 0);
    states.push(start);
    let mut next = 0;
    while next < states.len() {
        let (p, q, phase) = states[next];
        // Phase switches depend on the source state only.
        let new_phase = match phase {
            0 if na.is_final(p) => 1,
            1 if nb.is_final(q) => 0,
            other => other,
        };
        for l in na.alphabet().iter() {
            for pt in na.successors(p, l) {
                for qt in nb.successors(q, l) {
                    let t = (pt, qt, new_phase);
                    let id = *index.entry(t).or_insert_with(|| {
                        states.push(t);
                        states.len() - 1
                    });
                    transitions.insert((next, l, id));
                }
            }
        }
        next += 1;
    }
    let finals = states
        .iter()
        .enumerate()
        .filter(|(_, &(_, q, phase))| phase == 1 && nb.is_final(q))
        .map(|(i, _)| i)
        .collect();
    Ok(BarBuchi::new(
        BarNfa::new(
            default_state_names(states.len()),
            na.alphabet().clone(),
            0,
            finals,
            transitions,
        )
        .expect("product states are consistent"),
    ))
}

/// A Büchi automaton whose literal language is exactly the single
/// infinite word denoted by `x`: a stem path feeding a cycle.
pub fn singleton_up(
    x: &UltPeriodicWord,
    alphabet: &BarAlphabet,
) -> Result<BarBuchi, AutomatonError> {
    for l in x.stem().iter().chain(x.period().iter()) {
        if !alphabet.contains(l) {
            return Err(AutomatonError::LetterOutsideAlphabet(*l));
        }
    }
    let s = x.stem().len();
    let p = x.period().len();
    let mut transitions = BTreeSet::new();
    for (i, &l) in x.stem().letters().iter().enumerate() {
        transitions.insert((i, l, i + 1));
    }
    for (j, &l) in x.period().letters().iter().enumerate() {
        let from = s + j;
        let to = if j + 1 == p { s } else { s + j + 1 };
        transitions.insert((from, l, to));
    }
    Ok(BarBuchi::new(
        BarNfa::new(
            default_state_names(s + p),
            alphabet.clone(),
            0,
            [s].into(),
            transitions,
        )
        .expect("singleton states are consistent"),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::names::Name;
    use crate::nf::alpha_eq_up;

    fn pl(s: &str) -> Letter {
        Letter::Plain(Name::new(s))
    }

    fn br(s: &str) -> Letter {
        Letter::Bar(Name::new(s))
    }

    fn up(stem: &[Letter], period: &[Letter]) -> UltPeriodicWord {
        UltPeriodicWord::new(BarString::new(stem.to_vec()), BarString::new(period.to_vec()))
            .unwrap()
    }

    #[test]
    fn self_loop_on_final_state_yields_trivial_lasso() {
        let alph = BarAlphabet::new([pl("a")]);
        let a = BarBuchi::new(
            BarNfa::with_default_names(1, alph, 0, [0].into(), [(0, pl("a"), 0)].into())
                .unwrap(),
        );
        let lasso = buchi_lasso_search(&a).unwrap();
        assert!(lasso.stem.is_empty());
        assert_eq!(lasso.cycle, BarString::new(vec![pl("a")]));
        assert!(lasso.verify(&a));
    }

    #[test]
    fn unreachable_final_state_means_empty() {
        let alph = BarAlphabet::new([pl("a")]);
        let a = BarBuchi::new(
            BarNfa::with_default_names(2, alph, 0, [1].into(), [(1, pl("a"), 1)].into())
                .unwrap(),
        );
        assert!(buchi_lasso_search(&a).is_none());
    }

    #[test]
    fn handcrafted_lasso_reverifies() {
        // 0 -a-> 1 -b-> 2 -a-> 1, final 2
        let alph = BarAlphabet::new([pl("a"), pl("b")]);
        let trans: BTreeSet<_> = [
            (0, pl("a"), 1),
            (1, pl("b"), 2),
            (2, pl("a"), 1),
        ]
        .into();
        let a = BarBuchi::new(BarNfa::with_default_names(3, alph, 0, [2].into(), trans).unwrap());
        let lasso = buchi_lasso_search(&a).unwrap();
        assert!(lasso.verify(&a));
        assert_eq!(lasso.to_up_word().prefix(5).to_string(), "a b a b a");
    }

    #[test]
    fn singleton_up_accepts_exactly_its_word() {
        let alph = BarAlphabet::new([pl("a"), br("b")]);
        let x = up(&[pl("a")], &[br("b")]);
        let s = singleton_up(&x, &alph).unwrap();
        let lasso = buchi_lasso_search(&s).unwrap();
        assert!(lasso.verify(&s));
        assert!(alpha_eq_up(&lasso.to_up_word(), &x));
        // one-state loop: (ε, a)
        let x = up(&[], &[pl("a")]);
        let s = singleton_up(&x, &BarAlphabet::new([pl("a")])).unwrap();
        assert_eq!(s.num_states(), 1);
        let lasso = buchi_lasso_search(&s).unwrap();
        assert_eq!(lasso.to_up_word().prefix(3).to_string(), "a a a");
    }

    #[test]
    fn product_intersects_on_period_alignment() {
        let alph = BarAlphabet::new([pl("a"), pl("b")]);
        // left: words with infinitely many a's after any prefix of (a|b)
        // (here simply: accepts (ab)^w via cycle 0 -a-> 1 -b-> 0, final 0)
        let left = BarBuchi::new(
            BarNfa::with_default_names(
                2,
                alph.clone(),
                0,
                [0].into(),
                [(0, pl("a"), 1), (1, pl("b"), 0)].into(),
            )
            .unwrap(),
        );
        // right: universal single state
        let right = BarBuchi::new(
            BarNfa::with_default_names(
                1,
                alph.clone(),
                0,
                [0].into(),
                [(0, pl("a"), 0), (0, pl("b"), 0)].into(),
            )
            .unwrap(),
        );
        let prod = buchi_product(&left, &right).unwrap();
        let lasso = buchi_lasso_search(&prod).unwrap();
        assert!(lasso.verify(&prod));
        assert!(alpha_eq_up(&lasso.to_up_word(), &up(&[], &[pl("a"), pl("b")])));
        // intersection with the empty automaton is empty
        let empty = BarBuchi::new(BarNfa::empty_language(alph));
        assert!(buchi_lasso_search(&buchi_product(&left, &empty).unwrap()).is_none());
    }
}
