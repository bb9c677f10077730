//! Register-based closure of bar automata.
//!
//! Given an automaton over a finite bar alphabet and a target alphabet,
//! the closure is an automaton over the target whose literal language is
//! the alpha-closure of the source language restricted to the target. The
//! construction pairs each source state with a partial injective register
//! assignment: one register per plain letter of the source alphabet,
//! initially holding that letter's own name. A plain letter `b` can be
//! read wherever some register currently holds `b`; a bar letter `|b`
//! can be read along any source bar transition, optionally storing `b`
//! into the register matching the source bar name.
//!
//! Register values range over the names of the source plains and the
//! target letters; names never readable in the target cannot influence
//! acceptance, which keeps the state space finite.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::automata::{
    bottomup_of_topdown, shortest_in_symmetric_difference_tree,
    shortest_in_symmetric_difference_word, topdown_of_bottomup, BarAlphabet, BarBuchi, BarNfa,
    BarNftaBottomUp, BarNftaTopDown, StateId, TdRule,
};
use crate::names::Name;
use crate::words::Letter;

/// A partial injective map from register slots to names.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RegisterAssignment {
    slots: Vec<Option<Name>>,
}

impl RegisterAssignment {
    pub fn empty(k: usize) -> Self {
        RegisterAssignment {
            slots: vec![None; k],
        }
    }

    /// The identity assignment: slot `i` holds `names[i]`.
    pub fn identity(names: &[Name]) -> Self {
        RegisterAssignment {
            slots: names.iter().map(|&a| Some(a)).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn get(&self, slot: usize) -> Option<Name> {
        self.slots.get(slot).copied().flatten()
    }

    /// The unique slot currently holding `name`, if any.
    pub fn slot_of(&self, name: Name) -> Option<usize> {
        self.slots.iter().position(|&s| s == Some(name))
    }

    /// Drops the slot holding `name`, if any.
    pub fn drop_value(&self, name: Name) -> Self {
        let mut r = self.clone();
        for s in &mut r.slots {
            if *s == Some(name) {
                *s = None;
            }
        }
        r
    }

    pub fn with(&self, slot: usize, name: Name) -> Self {
        let mut r = self.clone();
        r.slots[slot] = Some(name);
        r
    }

    pub fn without(&self, slot: usize) -> Self {
        let mut r = self.clone();
        r.slots[slot] = None;
        r
    }

    pub fn is_injective(&self) -> bool {
        let defined: Vec<Name> = self.slots.iter().copied().flatten().collect();
        let distinct: BTreeSet<Name> = defined.iter().copied().collect();
        defined.len() == distinct.len()
    }
}

/// A closure state: a source state paired with a register assignment.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct ClosureState {
    pub base: StateId,
    pub regs: RegisterAssignment,
}

/// Number of partial injective maps from `slots` registers into a pool of
/// `pool` names: sum over j of C(slots, j) * pool! / (pool - j)!.
pub fn register_assignment_count(slots: usize, pool: usize) -> u128 {
    let mut total: u128 = 0;
    for j in 0..=slots.min(pool) {
        let mut choose: u128 = 1;
        for i in 0..j {
            choose = choose * (slots - i) as u128 / (i + 1) as u128;
        }
        let mut arrange: u128 = 1;
        for i in 0..j {
            arrange = arrange.saturating_mul((pool - i) as u128);
        }
        total = total.saturating_add(choose.saturating_mul(arrange));
    }
    total
}

/// Upper bound on reachable closure states.
pub fn closure_state_bound(source_states: usize, slots: usize, pool: usize) -> u128 {
    (source_states as u128).saturating_mul(register_assignment_count(slots, pool))
}

// Register names: plains of the source alphabet (their order defines the
// slot indices) plus all names underlying the target alphabet.
fn register_pool(source: &BarAlphabet, target: &BarAlphabet) -> (Vec<Name>, BTreeSet<Name>) {
    let regs = source.plains();
    let mut pool: BTreeSet<Name> = regs.iter().copied().collect();
    pool.extend(target.names());
    (regs, pool)
}

// Successor assignments for reading the target letter `|b` along a source
// bar transition on `|c`. Restrictions commute with reading, so only the
// maximal assignments are generated: any run using a further-restricted
// assignment is simulated by one of these.
fn bar_successors(
    r: &RegisterAssignment,
    regs: &[Name],
    c: Name,
    b: Name,
) -> Vec<RegisterAssignment> {
    let base = r.drop_value(b);
    match regs.iter().position(|&a| a == c) {
        // Source bar name owns a register: either store b there or drop it.
        Some(i) => vec![base.with(i, b), base.without(i)],
        // Pure binder: registers can only shrink.
        None => vec![base],
    }
}

fn close_nfa(a: &BarNfa, target: &BarAlphabet) -> BarNfa {
    let (regs, pool) = register_pool(a.alphabet(), target);
    let source_bars: Vec<Name> = a.alphabet().bars();
    let initial = ClosureState {
        base: a.initial(),
        regs: RegisterAssignment::identity(&regs),
    };
    let mut states: Vec<ClosureState> = vec![initial.clone()];
    let mut index: HashMap<ClosureState, StateId> = HashMap::from([(initial, 0)]);
    let mut transitions: BTreeSet<(StateId, Letter, StateId)> = BTreeSet::new();
    let mut queue = VecDeque::from([0usize]);
    let bound = closure_state_bound(a.num_states(), regs.len(), pool.len());
    while let Some(id) = queue.pop_front() {
        let ClosureState { base, regs: r } = states[id].clone();
        for letter in target.iter() {
            let successors: Vec<ClosureState> = match letter {
                Letter::Plain(b) => match r.slot_of(b) {
                    Some(i) => a
                        .successors(base, Letter::Plain(regs[i]))
                        .map(|q| ClosureState {
                            base: q,
                            regs: r.clone(),
                        })
                        .collect(),
                    None => Vec::new(),
                },
                Letter::Bar(b) => {
                    let mut out = Vec::new();
                    for &c in &source_bars {
                        for q in a.successors(base, Letter::Bar(c)) {
                            for r2 in bar_successors(&r, &regs, c, b) {
                                out.push(ClosureState { base: q, regs: r2 });
                            }
                        }
                    }
                    out
                }
            };
            for s in successors {
                debug_assert!(s.regs.is_injective());
                let sid = *index.entry(s.clone()).or_insert_with(|| {
                    states.push(s);
                    queue.push_back(states.len() - 1);
                    states.len() - 1
                });
                transitions.insert((id, letter, sid));
            }
        }
    }
    assert!(
        (states.len() as u128) <= bound,
        "closure reached {} states, exceeding the register bound {}",
        states.len(),
        bound
    );
    let finals = states
        .iter()
        .enumerate()
        .filter(|(_, s)| a.is_final(s.base))
        .map(|(i, _)| i)
        .collect();
    BarNfa::with_default_names(states.len(), target.clone(), 0, finals, transitions)
        .expect("closure states are consistent")
}

/// Closure of a word automaton: the result accepts exactly the words over
/// `target` that are alpha-equivalent to some word accepted by `a`.
pub fn close_word(a: &BarNfa, target: &BarAlphabet) -> BarNfa {
    close_nfa(a, target)
}

/// Closure of a Büchi automaton; same state construction as for words
/// with acceptance read over infinite runs.
pub fn close_buchi(a: &BarBuchi, target: &BarAlphabet) -> BarBuchi {
    BarBuchi::new(close_nfa(a.as_nfa(), target))
}

/// Closure of a bottom-up tree automaton, via the top-down form: each
/// node reads a target letter, with register assignments propagated to
/// the children (restricted per child independently on bar steps).
pub fn close_tree(a: &BarNftaBottomUp, target: &BarAlphabet) -> BarNftaBottomUp {
    let td = topdown_of_bottomup(a);
    let (regs, pool) = register_pool(&td.alphabet, target);
    let initial = ClosureState {
        base: td.initial,
        regs: RegisterAssignment::identity(&regs),
    };
    let mut states: Vec<ClosureState> = vec![initial.clone()];
    let mut index: HashMap<ClosureState, StateId> = HashMap::from([(initial, 0)]);
    let mut rules: BTreeSet<TdRule> = BTreeSet::new();
    let mut queue = VecDeque::from([0usize]);
    let bound = closure_state_bound(td.state_names.len(), regs.len(), pool.len());
    // Rules of the source, grouped by state for the worklist.
    let mut by_state: HashMap<StateId, Vec<&TdRule>> = HashMap::new();
    for rule in &td.rules {
        by_state.entry(rule.state).or_default().push(rule);
    }
    while let Some(id) = queue.pop_front() {
        let ClosureState { base, regs: r } = states[id].clone();
        let mut intern =
            |s: ClosureState, states: &mut Vec<ClosureState>, queue: &mut VecDeque<usize>| {
                debug_assert!(s.regs.is_injective());
                *index.entry(s.clone()).or_insert_with(|| {
                    states.push(s);
                    queue.push_back(states.len() - 1);
                    states.len() - 1
                })
            };
        for rule in by_state.get(&base).cloned().unwrap_or_default() {
            for letter in target.iter() {
                match (letter, rule.letter) {
                    (Letter::Plain(b), Letter::Plain(c)) => {
                        // Reading b requires the register for c to hold b.
                        if r.slot_of(b) == regs.iter().position(|&a| a == c)
                            && r.slot_of(b).is_some()
                        {
                            let children: Vec<StateId> = rule
                                .children
                                .iter()
                                .map(|&q| {
                                    intern(
                                        ClosureState {
                                            base: q,
                                            regs: r.clone(),
                                        },
                                        &mut states,
                                        &mut queue,
                                    )
                                })
                                .collect();
                            rules.insert(TdRule {
                                state: id,
                                letter,
                                symbol: rule.symbol,
                                children,
                            });
                        }
                    }
                    (Letter::Bar(b), Letter::Bar(c)) => {
                        // Each child independently gets one of the maximal
                        // successor assignments.
                        let options = bar_successors(&r, &regs, c, b);
                        let mut child_choices: Vec<Vec<StateId>> = vec![Vec::new()];
                        for &q in &rule.children {
                            let mut next = Vec::new();
                            for prefix in &child_choices {
                                for opt in &options {
                                    let cid = intern(
                                        ClosureState {
                                            base: q,
                                            regs: opt.clone(),
                                        },
                                        &mut states,
                                        &mut queue,
                                    );
                                    let mut p = prefix.clone();
                                    p.push(cid);
                                    next.push(p);
                                }
                            }
                            child_choices = next;
                        }
                        for children in child_choices {
                            rules.insert(TdRule {
                                state: id,
                                letter,
                                symbol: rule.symbol,
                                children,
                            });
                        }
                    }
                    _ => {}
                }
            }
        }
    }
    assert!(
        (states.len() as u128) <= bound,
        "tree closure reached {} states, exceeding the register bound {}",
        states.len(),
        bound
    );
    let closed_td = BarNftaTopDown {
        state_names: crate::automata::default_state_names(states.len()),
        alphabet: target.clone(),
        signature: td.signature.clone(),
        initial: 0,
        rules,
    };
    bottomup_of_topdown(&closed_td)
}

/// Is the literal language already closed under alpha-equivalence with
/// respect to the automaton's own alphabet?
pub fn is_closed_word(a: &BarNfa) -> bool {
    let closed = close_word(a, a.alphabet());
    shortest_in_symmetric_difference_word(a, &closed)
        .expect("same alphabet")
        .is_none()
}

/// Tree analogue of [`is_closed_word`].
pub fn is_closed_tree(a: &BarNftaBottomUp) -> bool {
    let closed = close_tree(a, a.alphabet());
    shortest_in_symmetric_difference_tree(a, &closed)
        .expect("same alphabet and signature")
        .is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::{literal_member_word, singleton_word};
    use crate::names::Name;
    use crate::sweep::enumerate_bar_strings;
    use crate::words::BarString;

    fn pl(s: &str) -> Letter {
        Letter::Plain(Name::new(s))
    }

    fn br(s: &str) -> Letter {
        Letter::Bar(Name::new(s))
    }

    fn w(ls: &[Letter]) -> BarString {
        BarString::new(ls.to_vec())
    }

    fn accepted_words(a: &BarNfa, max_len: usize) -> Vec<BarString> {
        let letters: Vec<Letter> = a.alphabet().iter().collect();
        enumerate_bar_strings(&letters, max_len)
            .into_iter()
            .filter(|x| literal_member_word(a, x))
            .collect()
    }

    #[test]
    fn closing_a_lone_binder_renames_it() {
        // accepts exactly "|a"; over {|a, |b} the closure accepts both bars
        let a =
            singleton_word(&w(&[br("a")]), &BarAlphabet::new([br("a")])).unwrap();
        let closed = close_word(&a, &BarAlphabet::new([br("a"), br("b")]));
        assert_eq!(
            accepted_words(&closed, 2),
            vec![w(&[br("a")]), w(&[br("b")])]
        );
    }

    #[test]
    fn free_names_are_alpha_invariant() {
        let a = singleton_word(&w(&[pl("a")]), &BarAlphabet::new([pl("a")])).unwrap();
        let closed = close_word(&a, &BarAlphabet::new([pl("a"), pl("b")]));
        assert_eq!(accepted_words(&closed, 2), vec![w(&[pl("a")])]);
    }

    #[test]
    fn bound_occurrences_follow_their_binder() {
        let a = singleton_word(
            &w(&[br("a"), pl("a")]),
            &BarAlphabet::new([br("a"), pl("a")]),
        )
        .unwrap();
        let target = BarAlphabet::new([br("a"), br("b"), pl("a"), pl("b")]);
        let closed = close_word(&a, &target);
        assert_eq!(
            accepted_words(&closed, 2),
            vec![w(&[br("a"), pl("a")]), w(&[br("b"), pl("b")])]
        );
    }

    #[test]
    fn closure_register_count_is_finite_and_bounded() {
        assert_eq!(register_assignment_count(0, 5), 1);
        assert_eq!(register_assignment_count(1, 2), 3); // undefined, a, b
        assert_eq!(register_assignment_count(2, 2), 1 + 2 * 2 + 2);
    }

    #[test]
    fn closure_over_own_alphabet_detects_closedness() {
        let alphabet = BarAlphabet::new([br("a"), br("b"), pl("a"), pl("b")]);
        let a = singleton_word(&w(&[br("a"), pl("a")]), &alphabet).unwrap();
        // "|b b" is missing, so the singleton is not closed
        assert!(!is_closed_word(&a));
        let closed = close_word(&a, &alphabet);
        assert!(is_closed_word(&closed));
        // idempotence: closing twice changes nothing
        let twice = close_word(&closed, &alphabet);
        assert_eq!(
            shortest_in_symmetric_difference_word(&closed, &twice).unwrap(),
            None
        );
        // automata without bar letters are always closed
        let plain_only =
            singleton_word(&w(&[pl("a")]), &BarAlphabet::new([pl("a"), pl("b")])).unwrap();
        assert!(is_closed_word(&plain_only));
    }
}
