//! Simulated teachers backed by a hidden bar automaton.
//!
//! Membership is decided through the closure of the hidden automaton over
//! its alphabet joined with the query's letters. Equivalence closes both
//! the hypothesis and the hidden automaton over the union of their
//! alphabets and compares literally: a language closed under
//! alpha-renaming within an alphabet is the restriction of its
//! alpha-closure to that alphabet, so on a shared alphabet literal
//! equality of the two closures coincides with equality of the bar
//! languages, and any literal witness separates the bar languages too.
//!
//! The adversarial mode renames the bound names of every counterexample
//! to fresh names outside the union alphabet, forcing the receiving side
//! to do real representative computation.

use std::collections::{BTreeSet, HashMap};

use crate::automata::{
    buchi_lasso_search, buchi_product, literal_member_tree, literal_member_word,
    shortest_in_symmetric_difference_tree, shortest_in_symmetric_difference_word, singleton_up,
    BarAlphabet, BarBuchi, BarNfa, BarNftaBottomUp,
};
use crate::assistant::{TreeAlphaTeacher, WordAlphaTeacher};
use crate::closure::{close_buchi, close_tree, close_word};
use crate::names::{fresh_names, Name};
use crate::trees::BarTree;
use crate::words::{BarString, Letter, UltPeriodicWord};

/// Adversary behaviour for counterexamples.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum AdversaryMode {
    #[default]
    Off,
    /// Rename all bound names of each counterexample to fresh names
    /// outside the union alphabet, deterministically in the seed.
    RenameOutsideAlphabet,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct AdversaryConfig {
    pub mode: AdversaryMode,
    pub seed: u64,
}

/// Renames every binder of `w` (and its bound occurrences) to a distinct
/// fresh name outside `avoid`, preserving the alpha-class. Deterministic
/// in the seed, which offsets the fresh-name stream.
pub fn adversarial_rename_word(w: &BarString, avoid: &BTreeSet<Name>, seed: u64) -> BarString {
    let mut all_avoid = avoid.clone();
    all_avoid.extend(w.names());
    let mut stream = fresh_names(&all_avoid).skip((seed % 8) as usize);
    let mut binding: HashMap<Name, Name> = HashMap::new();
    let mut out = Vec::with_capacity(w.len());
    for &l in w.letters() {
        match l {
            Letter::Bar(a) => {
                let fresh = stream.next().unwrap();
                binding.insert(a, fresh);
                out.push(Letter::Bar(fresh));
            }
            Letter::Plain(a) => match binding.get(&a) {
                Some(&f) => out.push(Letter::Plain(f)),
                None => out.push(Letter::Plain(a)),
            },
        }
    }
    let renamed = BarString::new(out);
    debug_assert!(crate::nf::alpha_eq_string(&renamed, w));
    renamed
}

/// Tree analogue of [`adversarial_rename_word`]; bindings are scoped to
/// root-to-node paths.
pub fn adversarial_rename_tree(t: &BarTree, avoid: &BTreeSet<Name>, seed: u64) -> BarTree {
    let mut all_avoid = avoid.clone();
    all_avoid.extend(t.names());
    let fresh: Vec<Name> = fresh_names(&all_avoid)
        .skip((seed % 8) as usize)
        .take(t.size())
        .collect();
    let mut next = 0usize;
    let mut binding: HashMap<Name, Vec<Name>> = HashMap::new();
    fn walk(
        t: &BarTree,
        binding: &mut HashMap<Name, Vec<Name>>,
        fresh: &[Name],
        next: &mut usize,
    ) -> BarTree {
        let (letter, bound_here) = match t.letter {
            Letter::Bar(a) => {
                let f = fresh[*next];
                *next += 1;
                binding.entry(a).or_default().push(f);
                (Letter::Bar(f), Some(a))
            }
            Letter::Plain(a) => match binding.get(&a).and_then(|v| v.last()) {
                Some(&f) => (Letter::Plain(f), None),
                None => (Letter::Plain(a), None),
            },
        };
        let children = t
            .children
            .iter()
            .map(|c| walk(c, binding, fresh, next))
            .collect();
        if let Some(a) = bound_here {
            binding.get_mut(&a).unwrap().pop();
        }
        BarTree::new(letter, t.symbol, children)
    }
    let renamed = walk(t, &mut binding, &fresh, &mut next);
    debug_assert!(crate::nf::alpha_eq_tree(&renamed, t));
    renamed
}

/// A hidden bar word automaton together with closure caching.
pub struct WordHidden {
    hidden: BarNfa,
    closures: HashMap<BarAlphabet, BarNfa>,
}

impl WordHidden {
    pub fn new(hidden: BarNfa) -> Self {
        WordHidden {
            hidden,
            closures: HashMap::new(),
        }
    }

    pub fn automaton(&self) -> &BarNfa {
        &self.hidden
    }

    fn closure_over(&mut self, target: &BarAlphabet) -> &BarNfa {
        if !self.closures.contains_key(target) {
            let closed = close_word(&self.hidden, target);
            self.closures.insert(target.clone(), closed);
        }
        &self.closures[target]
    }

    /// Is `w` in the bar language of the hidden automaton?
    pub fn mq(&mut self, w: &BarString) -> bool {
        let ext = self
            .hidden
            .alphabet()
            .union(&BarAlphabet::new(w.letter_set()));
        literal_member_word(self.closure_over(&ext), w)
    }

    /// Does the hypothesis accept the same bar language? On inequality,
    /// the minimal literal witness over the union alphabet, with bound
    /// names adversarially renamed if configured.
    pub fn eq(&mut self, hypothesis: &BarNfa, adversary: AdversaryConfig) -> Option<BarString> {
        let union = self.hidden.alphabet().union(hypothesis.alphabet());
        let closed_hidden = self.closure_over(&union).clone();
        let closed_hypothesis = close_word(hypothesis, &union);
        let witness =
            shortest_in_symmetric_difference_word(&closed_hypothesis, &closed_hidden)
                .expect("both closures share the union alphabet")?;
        Some(match adversary.mode {
            AdversaryMode::Off => witness,
            AdversaryMode::RenameOutsideAlphabet => {
                adversarial_rename_word(&witness, &union.names(), adversary.seed)
            }
        })
    }
}

/// A hidden bar tree automaton with closure caching.
pub struct TreeHidden {
    hidden: BarNftaBottomUp,
    closures: HashMap<BarAlphabet, BarNftaBottomUp>,
}

impl TreeHidden {
    pub fn new(hidden: BarNftaBottomUp) -> Self {
        TreeHidden {
            hidden,
            closures: HashMap::new(),
        }
    }

    pub fn automaton(&self) -> &BarNftaBottomUp {
        &self.hidden
    }

    fn closure_over(&mut self, target: &BarAlphabet) -> &BarNftaBottomUp {
        if !self.closures.contains_key(target) {
            let closed = close_tree(&self.hidden, target);
            self.closures.insert(target.clone(), closed);
        }
        &self.closures[target]
    }

    pub fn mq(&mut self, t: &BarTree) -> bool {
        let ext = self
            .hidden
            .alphabet()
            .union(&BarAlphabet::new(t.letter_set()));
        literal_member_tree(self.closure_over(&ext), t).unwrap_or(false)
    }

    pub fn eq(
        &mut self,
        hypothesis: &BarNftaBottomUp,
        adversary: AdversaryConfig,
    ) -> Option<BarTree> {
        let union = self.hidden.alphabet().union(hypothesis.alphabet());
        let closed_hidden = self.closure_over(&union).clone();
        let closed_hypothesis = close_tree(hypothesis, &union);
        let witness =
            shortest_in_symmetric_difference_tree(&closed_hypothesis, &closed_hidden)
                .expect("both closures share the union alphabet and signature")?;
        Some(match adversary.mode {
            AdversaryMode::Off => witness,
            AdversaryMode::RenameOutsideAlphabet => {
                adversarial_rename_tree(&witness, &union.names(), adversary.seed)
            }
        })
    }
}

/// A hidden bar Büchi automaton. Only membership of ultimately periodic
/// words is offered; Büchi equivalence is out of scope.
pub struct BuchiHidden {
    hidden: BarBuchi,
    closures: HashMap<BarAlphabet, BarBuchi>,
}

impl BuchiHidden {
    pub fn new(hidden: BarBuchi) -> Self {
        BuchiHidden {
            hidden,
            closures: HashMap::new(),
        }
    }

    pub fn automaton(&self) -> &BarBuchi {
        &self.hidden
    }

    fn closure_over(&mut self, target: &BarAlphabet) -> &BarBuchi {
        if !self.closures.contains_key(target) {
            let closed = close_buchi(&self.hidden, target);
            self.closures.insert(target.clone(), closed);
        }
        &self.closures[target]
    }

    /// Is the infinite word denoted by `x` in the bar language of the
    /// hidden automaton? Decided as nonemptiness of the product of the
    /// closure with a singleton automaton for `x`.
    pub fn mq_up(&mut self, x: &UltPeriodicWord) -> bool {
        let ext = self
            .hidden
            .alphabet()
            .union(&BarAlphabet::new(x.letter_set()));
        let closed = self.closure_over(&ext).clone();
        let singleton = singleton_up(x, &ext).expect("letters are in the extended alphabet");
        let product = buchi_product(&closed, &singleton).expect("alphabets match");
        buchi_lasso_search(&product).is_some()
    }
}

/// [`WordAlphaTeacher`] over a hidden automaton.
pub struct SimWordTeacher {
    pub target: WordHidden,
    pub adversary: AdversaryConfig,
}

impl SimWordTeacher {
    pub fn new(hidden: BarNfa, adversary: AdversaryConfig) -> Self {
        SimWordTeacher {
            target: WordHidden::new(hidden),
            adversary,
        }
    }
}

impl WordAlphaTeacher for SimWordTeacher {
    fn mq_alpha(&mut self, w: &BarString) -> bool {
        self.target.mq(w)
    }

    fn eq_alpha(&mut self, hypothesis: &BarNfa) -> Option<BarString> {
        self.target.eq(hypothesis, self.adversary)
    }
}

/// [`TreeAlphaTeacher`] over a hidden automaton.
pub struct SimTreeTeacher {
    pub target: TreeHidden,
    pub adversary: AdversaryConfig,
}

impl SimTreeTeacher {
    pub fn new(hidden: BarNftaBottomUp, adversary: AdversaryConfig) -> Self {
        SimTreeTeacher {
            target: TreeHidden::new(hidden),
            adversary,
        }
    }
}

impl TreeAlphaTeacher for SimTreeTeacher {
    fn mq_alpha(&mut self, t: &BarTree) -> bool {
        self.target.mq(t)
    }

    fn eq_alpha(&mut self, hypothesis: &BarNftaBottomUp) -> Option<BarTree> {
        self.target.eq(hypothesis, self.adversary)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::singleton_word;
    use crate::closure::close_word;
    use crate::names::Name;
    use crate::nf::alpha_eq_string;

    fn pl(s: &str) -> Letter {
        Letter::Plain(Name::new(s))
    }

    fn br(s: &str) -> Letter {
        Letter::Bar(Name::new(s))
    }

    fn w(ls: &[Letter]) -> BarString {
        BarString::new(ls.to_vec())
    }

    fn hidden_bar_a_a() -> BarNfa {
        singleton_word(
            &w(&[br("a"), pl("a")]),
            &BarAlphabet::new([br("a"), pl("a")]),
        )
        .unwrap()
    }

    #[test]
    fn membership_is_up_to_alpha() {
        let mut target = WordHidden::new(hidden_bar_a_a());
        assert!(target.mq(&w(&[br("z"), pl("z")])));
        assert!(target.mq(&w(&[br("a"), pl("a")])));
        assert!(!target.mq(&w(&[pl("z")])));
    }

    #[test]
    fn equivalence_of_the_closure_is_detected() {
        let mut target = WordHidden::new(hidden_bar_a_a());
        let own = hidden_bar_a_a();
        let closed = close_word(&own, own.alphabet());
        assert_eq!(target.eq(&closed, AdversaryConfig::default()), None);
        assert_eq!(target.eq(&own, AdversaryConfig::default()), None);
        // the empty hypothesis is missing the whole class
        let empty = BarNfa::empty_language(own.alphabet().clone());
        let cex = target.eq(&empty, AdversaryConfig::default()).unwrap();
        assert!(alpha_eq_string(&cex, &w(&[br("a"), pl("a")])));
    }

    #[test]
    fn adversarial_rename_leaves_the_class_and_escapes_the_alphabet() {
        let avoid: BTreeSet<Name> = [Name::new("a")].into();
        let input = w(&[br("a"), pl("a"), pl("b")]);
        let renamed = adversarial_rename_word(&input, &avoid, 3);
        assert!(alpha_eq_string(&renamed, &input));
        for l in renamed.letters() {
            if l.is_bar() {
                assert!(!avoid.contains(&l.name()));
            }
        }
        // no binders: unchanged
        let free = w(&[pl("a"), pl("b")]);
        assert_eq!(adversarial_rename_word(&free, &avoid, 3), free);
        // determinism in the seed
        assert_eq!(
            adversarial_rename_word(&input, &avoid, 5),
            adversarial_rename_word(&input, &avoid, 5)
        );
    }

    #[test]
    fn buchi_membership_examples() {
        // hidden: accepting self-loop on |a
        let alph = BarAlphabet::new([br("a")]);
        let hidden = BarBuchi::new(
            BarNfa::with_default_names(1, alph, 0, [0].into(), [(0, br("a"), 0)].into())
                .unwrap(),
        );
        let mut target = BuchiHidden::new(hidden);
        let up = |stem: &[Letter], period: &[Letter]| {
            UltPeriodicWord::new(BarString::new(stem.to_vec()), BarString::new(period.to_vec()))
                .unwrap()
        };
        assert!(target.mq_up(&up(&[], &[br("b")])));
        assert!(!target.mq_up(&up(&[], &[br("b"), pl("b")])));
        assert!(!target.mq_up(&up(&[], &[pl("c")])));
        // empty hidden automaton rejects everything
        let mut empty = BuchiHidden::new(BarBuchi::new(BarNfa::empty_language(
            BarAlphabet::new([br("a")]),
        )));
        assert!(!empty.mq_up(&up(&[], &[br("a")])));
    }
}
