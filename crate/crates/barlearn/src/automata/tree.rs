//! Bottom-up and top-down nondeterministic finite tree automata over bar
//! alphabets, with membership, determinization, product, complement,
//! minimal-witness search and the conversion between the two forms.
//!
//! Externally everything is bottom-up; the top-down form exists because
//! the register closure of tree automata is formulated top-down.

use std::collections::{BTreeMap, BTreeSet, BinaryHeap, HashMap};

use super::{default_state_names, AutomatonError, BarAlphabet, StateId};
use crate::names::Symbol;
use crate::trees::{BarTree, Signature};
use crate::words::Letter;

/// A bottom-up rule: reading `symbol` labeled with `letter` on children
/// in states `children` yields `result`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct TreeRule {
    pub symbol: Symbol,
    pub letter: Letter,
    pub children: Vec<StateId>,
    pub result: StateId,
}

/// A top-down rule: a node in state `state` with `symbol`/`letter` sends
/// its children to states `children`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct TdRule {
    pub state: StateId,
    pub letter: Letter,
    pub symbol: Symbol,
    pub children: Vec<StateId>,
}

/// A bottom-up nondeterministic finite tree automaton.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarNftaBottomUp {
    state_names: Vec<String>,
    alphabet: BarAlphabet,
    signature: Signature,
    finals: BTreeSet<StateId>,
    rules: BTreeSet<TreeRule>,
}

impl BarNftaBottomUp {
    pub fn new(
        state_names: Vec<String>,
        alphabet: BarAlphabet,
        signature: Signature,
        finals: BTreeSet<StateId>,
        rules: BTreeSet<TreeRule>,
    ) -> Result<Self, AutomatonError> {
        let n = state_names.len();
        if let Some(&q) = finals.iter().find(|&&q| q >= n) {
            return Err(AutomatonError::BadState(q));
        }
        for r in &rules {
            let arity = signature
                .arity(r.symbol)
                .ok_or_else(|| AutomatonError::UnknownSymbol(r.symbol.to_string()))?;
            if r.children.len() != arity {
                return Err(AutomatonError::ArityMismatch(
                    r.symbol.to_string(),
                    r.children.len(),
                    arity,
                ));
            }
            if !alphabet.contains(&r.letter) {
                return Err(AutomatonError::LetterOutsideAlphabet(r.letter));
            }
            if r.result >= n {
                return Err(AutomatonError::BadState(r.result));
            }
            if let Some(&q) = r.children.iter().find(|&&q| q >= n) {
                return Err(AutomatonError::BadState(q));
            }
        }
        Ok(BarNftaBottomUp {
            state_names,
            alphabet,
            signature,
            finals,
            rules,
        })
    }

    pub fn with_default_names(
        num_states: usize,
        alphabet: BarAlphabet,
        signature: Signature,
        finals: BTreeSet<StateId>,
        rules: BTreeSet<TreeRule>,
    ) -> Result<Self, AutomatonError> {
        BarNftaBottomUp::new(
            default_state_names(num_states),
            alphabet,
            signature,
            finals,
            rules,
        )
    }

    /// The empty-language automaton over an alphabet and signature.
    pub fn empty_language(alphabet: BarAlphabet, signature: Signature) -> Self {
        BarNftaBottomUp {
            state_names: Vec::new(),
            alphabet,
            signature,
            finals: BTreeSet::new(),
            rules: BTreeSet::new(),
        }
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

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn finals(&self) -> &BTreeSet<StateId> {
        &self.finals
    }

    pub fn rules(&self) -> impl Iterator<Item = &TreeRule> {
        self.rules.iter()
    }

    /// True if for every symbol, letter and child-state tuple there is
    /// exactly one rule.
    pub fn is_deterministic_complete(&self) -> bool {
        let mut counts: BTreeMap<(Symbol, Letter, &[StateId]), usize> = BTreeMap::new();
        for r in &self.rules {
            *counts
                .entry((r.symbol, r.letter, r.children.as_slice()))
                .or_default() += 1;
        }
        for (f, arity) in self.signature.symbols() {
            for l in self.alphabet.iter() {
                let mut expected = 1usize;
                for _ in 0..arity {
                    expected = expected.saturating_mul(self.num_states());
                }
                let found = counts
                    .iter()
                    .filter(|((sym, lt, _), _)| *sym == f && *lt == l)
                    .map(|(_, &c)| c)
                    .sum::<usize>();
                let distinct = counts
                    .keys()
                    .filter(|(sym, lt, _)| *sym == f && *lt == l)
                    .count();
                if found != expected || distinct != expected {
                    return false;
                }
            }
        }
        true
    }

    /// Keeps only productive states that can occur in some accepting run,
    /// renumbered in ascending old-id order.
    pub fn trim(&self) -> BarNftaBottomUp {
        let n = self.num_states();
        // Productive: derivable by some tree.
        let mut productive = vec![false; n];
        let mut changed = true;
        while changed {
            changed = false;
            for r in &self.rules {
                if !productive[r.result] && r.children.iter().all(|&c| productive[c]) {
                    productive[r.result] = true;
                    changed = true;
                }
            }
        }
        // Useful: productive and reachable downward from a productive final.
        let mut useful = vec![false; n];
        for &q in &self.finals {
            if productive[q] {
                useful[q] = true;
            }
        }
        let mut changed = true;
        while changed {
            changed = false;
            for r in &self.rules {
                if useful[r.result] && r.children.iter().all(|&c| productive[c]) {
                    for &c in &r.children {
                        if !useful[c] {
                            useful[c] = true;
                            changed = true;
                        }
                    }
                }
            }
        }
        let keep: Vec<bool> = (0..n).map(|q| productive[q] && useful[q]).collect();
        let mut id = vec![usize::MAX; n];
        let mut names = Vec::new();
        for q in 0..n {
            if keep[q] {
                id[q] = names.len();
                names.push(self.state_names[q].clone());
            }
        }
        BarNftaBottomUp {
            state_names: names,
            alphabet: self.alphabet.clone(),
            signature: self.signature.clone(),
            finals: self
                .finals
                .iter()
                .filter(|&&q| keep[q])
                .map(|&q| id[q])
                .collect(),
            rules: self
                .rules
                .iter()
                .filter(|r| keep[r.result] && r.children.iter().all(|&c| keep[c]))
                .map(|r| TreeRule {
                    symbol: r.symbol,
                    letter: r.letter,
                    children: r.children.iter().map(|&c| id[c]).collect(),
                    result: id[r.result],
                })
                .collect(),
        }
    }
}

/// A top-down nondeterministic finite tree automaton (single initial
/// state at the root).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BarNftaTopDown {
    pub state_names: Vec<String>,
    pub alphabet: BarAlphabet,
    pub signature: Signature,
    pub initial: StateId,
    pub rules: BTreeSet<TdRule>,
}

/// Bottom-up state sets of a tree, computed recursively.
fn run_states(a: &BarNftaBottomUp, t: &BarTree) -> BTreeSet<StateId> {
    let child_sets: Vec<BTreeSet<StateId>> = t.children.iter().map(|c| run_states(a, c)).collect();
    let mut out = BTreeSet::new();
    for r in a.rules() {
        if r.symbol == t.symbol
            && r.letter == t.letter
            && r.children
                .iter()
                .zip(&child_sets)
                .all(|(q, set)| set.contains(q))
        {
            out.insert(r.result);
        }
    }
    out
}

/// Literal membership: is `t` accepted? The tree must conform to the
/// automaton's signature.
pub fn literal_member_tree(a: &BarNftaBottomUp, t: &BarTree) -> Result<bool, AutomatonError> {
    if !t.conforms_to(a.signature()) {
        return Err(AutomatonError::TreeSignatureMismatch);
    }
    Ok(run_states(a, t).iter().any(|q| a.finals().contains(q)))
}

// All arity-length tuples over `0..states`, in lexicographic order.
fn state_tuples(states: usize, arity: usize) -> Vec<Vec<StateId>> {
    let mut out: Vec<Vec<StateId>> = vec![Vec::new()];
    for _ in 0..arity {
        let mut next = Vec::new();
        for tuple in &out {
            for q in 0..states {
                let mut t = tuple.clone();
                t.push(q);
                next.push(t);
            }
        }
        out = next;
    }
    out
}

/// Subset-construction determinization for bottom-up tree automata. The
/// input is trimmed first; the result is deterministic and complete over
/// all materialized subsets.
pub fn determinize_tree(a: &BarNftaBottomUp) -> BarNftaBottomUp {
    let a = a.trim();
    // Group rules by (symbol, letter) for the saturation loop.
    let mut by_key: BTreeMap<(Symbol, Letter), Vec<&TreeRule>> = BTreeMap::new();
    for r in a.rules.iter() {
        by_key.entry((r.symbol, r.letter)).or_default().push(r);
    }
    let mut subsets: Vec<BTreeSet<StateId>> = Vec::new();
    let mut index: HashMap<BTreeSet<StateId>, StateId> = HashMap::new();
    let mut rules: BTreeSet<TreeRule> = BTreeSet::new();
    let mut changed = true;
    while changed {
        changed = false;
        let known = subsets.len();
        for (f, arity) in a.signature.symbols() {
            for l in a.alphabet.iter() {
                for tuple in state_tuples(known, arity) {
                    let successor: BTreeSet<StateId> = by_key
                        .get(&(f, l))
                        .map(|rs| {
                            rs.iter()
                                .filter(|r| {
                                    r.children
                                        .iter()
                                        .zip(&tuple)
                                        .all(|(q, &s)| subsets[s].contains(q))
                                })
                                .map(|r| r.result)
                                .collect()
                        })
                        .unwrap_or_default();
                    let id = match index.get(&successor) {
                        Some(&id) => id,
                        None => {
                            let id = subsets.len();
                            index.insert(successor.clone(), id);
                            subsets.push(successor);
                            changed = true;
                            id
                        }
                    };
                    if rules.insert(TreeRule {
                        symbol: f,
                        letter: l,
                        children: tuple,
                        result: id,
                    }) {
                        changed = true;
                    }
                }
            }
        }
    }
    let finals = subsets
        .iter()
        .enumerate()
        .filter(|(_, s)| s.iter().any(|q| a.finals.contains(q)))
        .map(|(i, _)| i)
        .collect();
    BarNftaBottomUp {
        state_names: default_state_names(subsets.len()),
        alphabet: a.alphabet.clone(),
        signature: a.signature.clone(),
        finals,
        rules,
    }
}

/// Complement of a deterministic complete tree automaton.
pub fn complement_tree(a: &BarNftaBottomUp) -> Result<BarNftaBottomUp, AutomatonError> {
    if !a.is_deterministic_complete() {
        return Err(AutomatonError::NotDeterministicComplete);
    }
    let finals = (0..a.num_states())
        .filter(|q| !a.finals().contains(q))
        .collect();
    Ok(BarNftaBottomUp {
        state_names: a.state_names.clone(),
        alphabet: a.alphabet.clone(),
        signature: a.signature.clone(),
        finals,
        rules: a.rules.clone(),
    })
}

/// Product automaton for the intersection of two tree languages over the
/// same alphabet and signature. Only pairs derivable bottom-up are
/// materialized.
pub fn product_tree(
    a: &BarNftaBottomUp,
    b: &BarNftaBottomUp,
) -> Result<BarNftaBottomUp, AutomatonError> {
    if a.alphabet() != b.alphabet() {
        return Err(AutomatonError::AlphabetMismatch);
    }
    if a.signature() != b.signature() {
        return Err(AutomatonError::SignatureMismatch);
    }
    let mut pairs: Vec<(StateId, StateId)> = Vec::new();
    let mut index: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut rules: BTreeSet<TreeRule> = BTreeSet::new();
    let mut changed = true;
    while changed {
        changed = false;
        for ra in a.rules() {
            for rb in b.rules() {
                if ra.symbol != rb.symbol || ra.letter != rb.letter {
                    continue;
                }
                let child_pairs: Option<Vec<StateId>> = ra
                    .children
                    .iter()
                    .zip(&rb.children)
                    .map(|(&ca, &cb)| index.get(&(ca, cb)).copied())
                    .collect();
                let Some(children) = child_pairs else {
                    continue;
                };
                let key = (ra.result, rb.result);
                let id = match index.get(&key) {
                    Some(&id) => id,
                    None => {
                        let id = pairs.len();
                        index.insert(key, id);
                        pairs.push(key);
                        changed = true;
                        id
                    }
                };
                if rules.insert(TreeRule {
                    symbol: ra.symbol,
                    letter: ra.letter,
                    children,
                    result: id,
                }) {
                    changed = true;
                }
            }
        }
    }
    let finals = pairs
        .iter()
        .enumerate()
        .filter(|(_, &(p, q))| a.finals().contains(&p) && b.finals().contains(&q))
        .map(|(i, _)| i)
        .collect();
    BarNftaBottomUp::new(
        default_state_names(pairs.len()),
        a.alphabet().clone(),
        a.signature().clone(),
        finals,
        rules,
    )
}

type TreeKey = (usize, Vec<(Letter, Symbol)>);

fn tree_key(t: &BarTree) -> TreeKey {
    (t.size(), t.preorder())
}

/// Minimal tree (by size, then preorder sequence) deriving each state,
/// computed Dijkstra-style: states are finalized in ascending witness
/// order, which is sound because a combined tree is strictly larger than
/// each of its children. Returns the minimal accepted tree.
pub fn min_accepted_tree(a: &BarNftaBottomUp) -> Option<BarTree> {
    let rules: Vec<&TreeRule> = a.rules().collect();
    let mut best: Vec<Option<BarTree>> = vec![None; a.num_states()];
    let mut done = vec![false; a.num_states()];
    let mut heap: BinaryHeap<std::cmp::Reverse<(TreeKey, StateId)>> = BinaryHeap::new();

    let mut offer = |state: StateId,
                     tree: BarTree,
                     best: &mut Vec<Option<BarTree>>,
                     heap: &mut BinaryHeap<std::cmp::Reverse<(TreeKey, StateId)>>| {
        let better = best[state]
            .as_ref()
            .map_or(true, |old| tree_key(&tree) < tree_key(old));
        if better {
            heap.push(std::cmp::Reverse((tree_key(&tree), state)));
            best[state] = Some(tree);
        }
    };

    for r in &rules {
        if r.children.is_empty() {
            let t = BarTree::leaf(r.letter, r.symbol);
            offer(r.result, t, &mut best, &mut heap);
        }
    }
    while let Some(std::cmp::Reverse((key, q))) = heap.pop() {
        if done[q] || best[q].as_ref().map(tree_key) != Some(key.clone()) {
            continue;
        }
        done[q] = true;
        // Relax every rule all of whose children are finalized.
        for r in &rules {
            if done[r.result] || r.children.is_empty() {
                continue;
            }
            if r.children.iter().all(|&c| done[c]) {
                let children: Vec<BarTree> = r
                    .children
                    .iter()
                    .map(|&c| best[c].clone().expect("finalized state has a witness"))
                    .collect();
                let t = BarTree::new(r.letter, r.symbol, children);
                offer(r.result, t, &mut best, &mut heap);
            }
        }
    }
    a.finals()
        .iter()
        .filter_map(|&q| best[q].clone())
        .min_by_key(tree_key)
}

/// Minimal tree in the symmetric difference of the two literal tree
/// languages, or `None` if they are equal.
pub fn shortest_in_symmetric_difference_tree(
    a: &BarNftaBottomUp,
    b: &BarNftaBottomUp,
) -> Result<Option<BarTree>, AutomatonError> {
    if a.alphabet() != b.alphabet() {
        return Err(AutomatonError::AlphabetMismatch);
    }
    if a.signature() != b.signature() {
        return Err(AutomatonError::SignatureMismatch);
    }
    let da = determinize_tree(a);
    let db = determinize_tree(b);
    let in_a_not_b = min_accepted_tree(&product_tree(&da, &complement_tree(&db)?)?);
    let in_b_not_a = min_accepted_tree(&product_tree(&db, &complement_tree(&da)?)?);
    Ok(match (in_a_not_b, in_b_not_a) {
        (Some(x), Some(y)) => Some(if tree_key(&x) <= tree_key(&y) { x } else { y }),
        (x, y) => x.or(y),
    })
}

/// An automaton whose literal language is exactly `{t}`: one state per
/// node of the tree.
pub fn singleton_tree(
    t: &BarTree,
    alphabet: &BarAlphabet,
    signature: &Signature,
) -> Result<BarNftaBottomUp, AutomatonError> {
    if let Some(l) = t.letter_set().iter().find(|l| !alphabet.contains(l)) {
        return Err(AutomatonError::LetterOutsideAlphabet(*l));
    }
    if !t.conforms_to(signature) {
        return Err(AutomatonError::TreeSignatureMismatch);
    }
    fn build(t: &BarTree, rules: &mut BTreeSet<TreeRule>, next: &mut StateId) -> StateId {
        let children: Vec<StateId> = t.children.iter().map(|c| build(c, rules, next)).collect();
        let state = *next;
        *next += 1;
        rules.insert(TreeRule {
            symbol: t.symbol,
            letter: t.letter,
            children,
            result: state,
        });
        state
    }
    let mut rules = BTreeSet::new();
    let mut next = 0;
    let root = build(t, &mut rules, &mut next);
    BarNftaBottomUp::new(
        default_state_names(next),
        alphabet.clone(),
        signature.clone(),
        [root].into(),
        rules,
    )
}

/// Converts bottom-up to top-down, first reducing to a single final state
/// (adding a fresh one if there are zero or several), then reversing the
/// rules.
pub fn topdown_of_bottomup(a: &BarNftaBottomUp) -> BarNftaTopDown {
    let (names, initial, rules) = if a.finals().len() == 1 {
        let initial = *a.finals().iter().next().unwrap();
        let rules = a
            .rules()
            .map(|r| TdRule {
                state: r.result,
                letter: r.letter,
                symbol: r.symbol,
                children: r.children.clone(),
            })
            .collect();
        (a.state_names.to_vec(), initial, rules)
    } else {
        let fresh = a.num_states();
        let mut names = a.state_names.to_vec();
        names.push(format!("qf{fresh}"));
        let mut rules: BTreeSet<TdRule> = a
            .rules()
            .map(|r| TdRule {
                state: r.result,
                letter: r.letter,
                symbol: r.symbol,
                children: r.children.clone(),
            })
            .collect();
        let extra: Vec<TdRule> = a
            .rules()
            .filter(|r| a.finals().contains(&r.result))
            .map(|r| TdRule {
                state: fresh,
                letter: r.letter,
                symbol: r.symbol,
                children: r.children.clone(),
            })
            .collect();
        rules.extend(extra);
        (names, fresh, rules)
    };
    BarNftaTopDown {
        state_names: names,
        alphabet: a.alphabet().clone(),
        signature: a.signature().clone(),
        initial,
        rules,
    }
}

/// Converts top-down to bottom-up: the initial state becomes the single
/// final state and the rules reverse.
pub fn bottomup_of_topdown(a: &BarNftaTopDown) -> BarNftaBottomUp {
    BarNftaBottomUp {
        state_names: a.state_names.clone(),
        alphabet: a.alphabet.clone(),
        signature: a.signature.clone(),
        finals: [a.initial].into(),
        rules: a
            .rules
            .iter()
            .map(|r| TreeRule {
                symbol: r.symbol,
                letter: r.letter,
                children: r.children.clone(),
                result: r.state,
            })
            .collect(),
    }
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

    fn sym(s: &str) -> Symbol {
        Symbol::new(s)
    }

    fn sig_fc() -> Signature {
        Signature::new([(sym("f"), 2), (sym("c"), 0)])
    }

    fn alph() -> BarAlphabet {
        BarAlphabet::new([pl("a"), pl("b"), br("a")])
    }

    // |a.f(a.c, b.c)
    fn sample_tree() -> BarTree {
        BarTree::new(
            br("a"),
            sym("f"),
            vec![
                BarTree::leaf(pl("a"), sym("c")),
                BarTree::leaf(pl("b"), sym("c")),
            ],
        )
    }

    #[test]
    fn singleton_membership_is_literal() {
        let t = sample_tree();
        let a = singleton_tree(&t, &alph(), &sig_fc()).unwrap();
        assert_eq!(literal_member_tree(&a, &t), Ok(true));
        // alpha-variant is not a literal member
        let variant = BarTree::new(
            br("a"),
            sym("f"),
            vec![
                BarTree::leaf(pl("b"), sym("c")),
                BarTree::leaf(pl("b"), sym("c")),
            ],
        );
        assert_eq!(literal_member_tree(&a, &variant), Ok(false));
        assert_eq!(
            literal_member_tree(&a, &BarTree::leaf(pl("a"), sym("c"))),
            Ok(false)
        );
        // wrong arity is a signature error
        let bad = BarTree::new(pl("a"), sym("f"), vec![BarTree::leaf(pl("a"), sym("c"))]);
        assert!(literal_member_tree(&a, &bad).is_err());
    }

    #[test]
    fn singleton_language_is_exactly_the_tree() {
        let t = sample_tree();
        let a = singleton_tree(&t, &alph(), &sig_fc()).unwrap();
        let letters: Vec<Letter> = alph().iter().collect();
        for candidate in crate::sweep::enumerate_trees(&letters, &sig_fc(), 3) {
            assert_eq!(
                literal_member_tree(&a, &candidate).unwrap(),
                candidate == t,
                "wrong verdict on {candidate}"
            );
        }
    }

    #[test]
    fn determinize_and_complement_agree_with_enumeration() {
        let t = sample_tree();
        let a = singleton_tree(&t, &alph(), &sig_fc()).unwrap();
        let d = determinize_tree(&a);
        assert!(d.is_deterministic_complete());
        let c = complement_tree(&d).unwrap();
        let letters: Vec<Letter> = alph().iter().collect();
        for candidate in crate::sweep::enumerate_trees(&letters, &sig_fc(), 2) {
            let in_a = literal_member_tree(&a, &candidate).unwrap();
            assert_eq!(literal_member_tree(&d, &candidate).unwrap(), in_a);
            assert_eq!(literal_member_tree(&c, &candidate).unwrap(), !in_a);
        }
    }

    #[test]
    fn product_and_symmetric_difference() {
        let t = sample_tree();
        let a = singleton_tree(&t, &alph(), &sig_fc()).unwrap();
        let leaf = BarTree::leaf(pl("a"), sym("c"));
        let b = singleton_tree(&leaf, &alph(), &sig_fc()).unwrap();
        let p = product_tree(&a, &b).unwrap();
        assert_eq!(min_accepted_tree(&p), None);
        assert_eq!(
            shortest_in_symmetric_difference_tree(&a, &a).unwrap(),
            None
        );
        // the minimal element of the difference is the smaller tree
        assert_eq!(
            shortest_in_symmetric_difference_tree(&a, &b).unwrap(),
            Some(leaf)
        );
    }

    #[test]
    fn min_accepted_tree_is_minimal() {
        // accepts all trees; minimum should be the least leaf a.c
        let d = determinize_tree(&BarNftaBottomUp::empty_language(alph(), sig_fc()));
        let all = complement_tree(&d).unwrap();
        assert_eq!(
            min_accepted_tree(&all),
            Some(BarTree::leaf(pl("a"), sym("c")))
        );
        assert_eq!(
            min_accepted_tree(&BarNftaBottomUp::empty_language(alph(), sig_fc())),
            None
        );
    }

    #[test]
    fn topdown_roundtrip_preserves_membership() {
        let t = sample_tree();
        let a = singleton_tree(&t, &alph(), &sig_fc()).unwrap();
        let round = bottomup_of_topdown(&topdown_of_bottomup(&a));
        let letters: Vec<Letter> = alph().iter().collect();
        for candidate in crate::sweep::enumerate_trees(&letters, &sig_fc(), 3) {
            assert_eq!(
                literal_member_tree(&a, &candidate).unwrap(),
                literal_member_tree(&round, &candidate).unwrap()
            );
        }
        // empty language round-trips to empty
        let e = BarNftaBottomUp::empty_language(alph(), sig_fc());
        let round = bottomup_of_topdown(&topdown_of_bottomup(&e));
        assert_eq!(min_accepted_tree(&round), None);
    }

    #[test]
    fn topdown_of_multi_final_automaton() {
        // two final states, each accepting a different leaf
        let rules: BTreeSet<TreeRule> = [
            TreeRule {
                symbol: sym("c"),
                letter: pl("a"),
                children: vec![],
                result: 0,
            },
            TreeRule {
                symbol: sym("c"),
                letter: pl("b"),
                children: vec![],
                result: 1,
            },
        ]
        .into();
        let a =
            BarNftaBottomUp::with_default_names(2, alph(), sig_fc(), [0, 1].into(), rules)
                .unwrap();
        let round = bottomup_of_topdown(&topdown_of_bottomup(&a));
        for leaf in [BarTree::leaf(pl("a"), sym("c")), BarTree::leaf(pl("b"), sym("c"))] {
            assert_eq!(literal_member_tree(&round, &leaf), Ok(true));
        }
        assert_eq!(
            literal_member_tree(&round, &sample_tree()),
            Ok(false)
        );
    }
}
