//! The teaching assistant: it sits between a classical internal learner
//! working over a fixed finite alphabet and a teacher that answers
//! queries about a bar language (a language closed under
//! alpha-equivalence). Membership and equivalence queries pass through
//! unchanged; counterexamples from the teacher are translated in two
//! steps: first pick an alpha-equivalent representative over the finite
//! alphabet, then prefer a literal member of the current hypothesis from
//! the same alpha-class if one exists.
//!
//! Both steps run on closure automata: the representative is the minimal
//! word accepted by the closure of a singleton automaton, and the
//! hypothesis witness is the minimal word in the product of that closure
//! with the hypothesis.

use std::collections::BTreeSet;

use crate::automata::{
    buchi_lasso_search, buchi_product, min_accepted_tree, product_tree, product_word,
    shortest_accepted_word, singleton_tree, singleton_up, singleton_word, BarAlphabet, BarBuchi,
    BarNfa, BarNftaBottomUp,
};
use crate::closure::{close_buchi, close_tree, close_word};
use crate::learn::{
    Aborted, LearnError, QueryStats, TreeLearner, TreeTeacher, WordLearner, WordTeacher,
};
use crate::names::{fresh_names, Name};
use crate::nf::alpha_eq_up;
use crate::trees::{free_names_tree, BarTree, Signature};
use crate::words::{free_names, BarString, Letter, UltPeriodicWord};

/// A teacher answering queries about an unknown bar word language.
pub trait WordAlphaTeacher {
    fn mq_alpha(&mut self, w: &BarString) -> bool;
    /// `None` means the hypothesis accepts exactly the unknown language
    /// (up to alpha-equivalence); otherwise a counterexample from the
    /// symmetric difference, over any alphabet.
    fn eq_alpha(&mut self, hypothesis: &BarNfa) -> Option<BarString>;
}

/// A teacher answering queries about an unknown bar tree language.
pub trait TreeAlphaTeacher {
    fn mq_alpha(&mut self, t: &BarTree) -> bool;
    fn eq_alpha(&mut self, hypothesis: &BarNftaBottomUp) -> Option<BarTree>;
}

/// Session limits and reproducibility knobs.
#[derive(Clone, Debug)]
pub struct TaConfig {
    pub max_counterexample_size: usize,
    pub max_restarts: u64,
    /// Seed handed to learners that use randomness; the shipped learners
    /// are deterministic and ignore it.
    pub seed: u64,
}

impl Default for TaConfig {
    fn default() -> Self {
        TaConfig {
            max_counterexample_size: 10_000,
            max_restarts: 64,
            seed: 0,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AssistError<C: std::fmt::Debug> {
    /// No alpha-equivalent representative over the current alphabet
    /// exists; carries the offending counterexample.
    #[error("no representative over the current alphabet for {0:?}")]
    AlphabetTooSmall(C),
    #[error("teacher answers inconsistent: {0}")]
    InconsistentTeacher(String),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
}

/// The lexicographically least bar string over `a0` that is
/// alpha-equivalent to `w`, or `None` if the class has no member over
/// `a0`. Any representative has the same length as `w`.
pub fn representative_word(w: &BarString, a0: &BarAlphabet) -> Option<BarString> {
    let extended = a0.union(&BarAlphabet::new(w.letter_set()));
    let singleton = singleton_word(w, &extended).expect("letters are in the extended alphabet");
    let closed = close_word(&singleton, a0);
    let rep = shortest_accepted_word(&closed);
    debug_assert!(rep
        .as_ref()
        .is_none_or(|r| crate::nf::alpha_eq_string(r, w)));
    rep
}

/// Minimal tree over `a0` alpha-equivalent to `t`, or `None`.
pub fn representative_tree(t: &BarTree, a0: &BarAlphabet) -> Option<BarTree> {
    let extended = a0.union(&BarAlphabet::new(t.letter_set()));
    let signature = t.infer_signature().expect("trees carry one signature");
    let singleton =
        singleton_tree(t, &extended, &signature).expect("letters are in the extended alphabet");
    let closed = close_tree(&singleton, a0);
    let rep = min_accepted_tree(&closed);
    debug_assert!(rep
        .as_ref()
        .is_none_or(|r| crate::nf::alpha_eq_tree(r, t)));
    rep
}

/// An ultimately periodic word over `a0` alpha-equivalent to `x`,
/// extracted as a lasso of the closure of the singleton Büchi automaton,
/// or `None`. The result is re-verified against `x`.
pub fn representative_up(x: &UltPeriodicWord, a0: &BarAlphabet) -> Option<UltPeriodicWord> {
    let extended = a0.union(&BarAlphabet::new(x.letter_set()));
    let singleton = singleton_up(x, &extended).expect("letters are in the extended alphabet");
    let closed = close_buchi(&singleton, a0);
    let lasso = buchi_lasso_search(&closed)?;
    let rep = lasso.to_up_word();
    assert!(
        alpha_eq_up(&rep, x),
        "closure lasso {rep} is not alpha-equivalent to {x}"
    );
    Some(rep)
}

/// A literal member of the hypothesis alpha-equivalent to `w`, minimal in
/// the witness order, or `None` if the hypothesis accepts no member of
/// the class.
pub fn alpha_witness_word(hypothesis: &BarNfa, w: &BarString) -> Option<BarString> {
    let extended = hypothesis.alphabet().union(&BarAlphabet::new(w.letter_set()));
    let singleton = singleton_word(w, &extended).expect("letters are in the extended alphabet");
    let class = close_word(&singleton, hypothesis.alphabet());
    let product = product_word(&class, hypothesis).expect("alphabets match");
    shortest_accepted_word(&product)
}

/// Tree analogue of [`alpha_witness_word`].
pub fn alpha_witness_tree(hypothesis: &BarNftaBottomUp, t: &BarTree) -> Option<BarTree> {
    let extended = hypothesis.alphabet().union(&BarAlphabet::new(t.letter_set()));
    let singleton = singleton_tree(t, &extended, hypothesis.signature()).ok()?;
    let class = close_tree(&singleton, hypothesis.alphabet());
    let product = product_tree(&class, hypothesis).expect("alphabets and signatures match");
    min_accepted_tree(&product)
}

/// Büchi analogue: an ultimately periodic word in the literal language of
/// the hypothesis alpha-equivalent to `x`, via a lasso of the product.
pub fn alpha_witness_up(hypothesis: &BarBuchi, x: &UltPeriodicWord) -> Option<UltPeriodicWord> {
    let extended = hypothesis.alphabet().union(&BarAlphabet::new(x.letter_set()));
    let singleton = singleton_up(x, &extended).expect("letters are in the extended alphabet");
    let class = close_buchi(&singleton, hypothesis.alphabet());
    let product = buchi_product(&class, hypothesis).expect("alphabets match");
    let lasso = buchi_lasso_search(&product)?;
    let witness = lasso.to_up_word();
    assert!(
        alpha_eq_up(&witness, x),
        "product lasso {witness} is not alpha-equivalent to {x}"
    );
    Some(witness)
}

/// Translates a teacher counterexample into one over the internal
/// alphabet: the representative itself if the hypothesis accepts no
/// member of its class, otherwise the hypothesis witness.
pub fn ta_process_counterexample_word(
    hypothesis: &BarNfa,
    counterexample: &BarString,
    a0: &BarAlphabet,
) -> Result<BarString, AssistError<BarString>> {
    let rep = representative_word(counterexample, a0)
        .ok_or_else(|| AssistError::AlphabetTooSmall(counterexample.clone()))?;
    Ok(alpha_witness_word(hypothesis, &rep).unwrap_or(rep))
}

/// Tree analogue of [`ta_process_counterexample_word`].
pub fn ta_process_counterexample_tree(
    hypothesis: &BarNftaBottomUp,
    counterexample: &BarTree,
    a0: &BarAlphabet,
) -> Result<BarTree, AssistError<BarTree>> {
    let rep = representative_tree(counterexample, a0)
        .ok_or_else(|| AssistError::AlphabetTooSmall(counterexample.clone()))?;
    Ok(alpha_witness_tree(hypothesis, &rep).unwrap_or(rep))
}

struct WordTa<'a, T: WordAlphaTeacher + ?Sized> {
    teacher: &'a mut T,
    a0: BarAlphabet,
    config: TaConfig,
    stats: QueryStats,
    pending: Option<AssistError<BarString>>,
}

impl<T: WordAlphaTeacher + ?Sized> WordTeacher for WordTa<'_, T> {
    fn mq(&mut self, w: &BarString) -> bool {
        // Words over the internal alphabet are their own representatives:
        // forward verbatim.
        self.stats.membership += 1;
        self.teacher.mq_alpha(w)
    }

    fn eq(&mut self, hypothesis: &BarNfa) -> Result<Option<BarString>, Aborted> {
        self.stats.equivalence += 1;
        match self.teacher.eq_alpha(hypothesis) {
            None => Ok(None),
            Some(cex) => {
                if cex.len() > self.config.max_counterexample_size {
                    self.pending = Some(AssistError::LimitExceeded(format!(
                        "counterexample of length {} exceeds the limit {}",
                        cex.len(),
                        self.config.max_counterexample_size
                    )));
                    return Err(Aborted);
                }
                match ta_process_counterexample_word(hypothesis, &cex, &self.a0) {
                    Ok(w) => Ok(Some(w)),
                    Err(e) => {
                        self.pending = Some(e);
                        Err(Aborted)
                    }
                }
            }
        }
    }
}

struct TreeTa<'a, T: TreeAlphaTeacher + ?Sized> {
    teacher: &'a mut T,
    a0: BarAlphabet,
    config: TaConfig,
    stats: QueryStats,
    pending: Option<AssistError<BarTree>>,
}

impl<T: TreeAlphaTeacher + ?Sized> TreeTeacher for TreeTa<'_, T> {
    fn mq(&mut self, t: &BarTree) -> bool {
        self.stats.membership += 1;
        self.teacher.mq_alpha(t)
    }

    fn eq(&mut self, hypothesis: &BarNftaBottomUp) -> Result<Option<BarTree>, Aborted> {
        self.stats.equivalence += 1;
        match self.teacher.eq_alpha(hypothesis) {
            None => Ok(None),
            Some(cex) => {
                if cex.size() > self.config.max_counterexample_size {
                    self.pending = Some(AssistError::LimitExceeded(format!(
                        "counterexample of size {} exceeds the limit {}",
                        cex.size(),
                        self.config.max_counterexample_size
                    )));
                    return Err(Aborted);
                }
                match ta_process_counterexample_tree(hypothesis, &cex, &self.a0) {
                    Ok(t) => Ok(Some(t)),
                    Err(e) => {
                        self.pending = Some(e);
                        Err(Aborted)
                    }
                }
            }
        }
    }
}

fn run_word_session<T: WordAlphaTeacher + ?Sized, L: WordLearner>(
    teacher: &mut T,
    a0: &BarAlphabet,
    learner: &L,
    config: &TaConfig,
) -> (QueryStats, Result<BarNfa, AssistError<BarString>>) {
    let mut ta = WordTa {
        teacher,
        a0: a0.clone(),
        config: config.clone(),
        stats: QueryStats::default(),
        pending: None,
    };
    match learner.learn(&mut ta, a0) {
        Ok((hypothesis, learner_stats)) => {
            // Forwarding fidelity: every internal query maps to exactly one
            // teacher query.
            debug_assert_eq!(learner_stats.membership, ta.stats.membership);
            debug_assert_eq!(learner_stats.equivalence, ta.stats.equivalence);
            (ta.stats, Ok(hypothesis))
        }
        Err(LearnError::Aborted) => {
            let pending = ta
                .pending
                .take()
                .unwrap_or_else(|| AssistError::InconsistentTeacher("abort without cause".into()));
            (ta.stats, Err(pending))
        }
        Err(LearnError::InconsistentTeacher(msg)) => {
            (ta.stats, Err(AssistError::InconsistentTeacher(msg)))
        }
    }
}

fn run_tree_session<T: TreeAlphaTeacher + ?Sized, L: TreeLearner>(
    teacher: &mut T,
    signature: &Signature,
    a0: &BarAlphabet,
    learner: &L,
    config: &TaConfig,
) -> (QueryStats, Result<BarNftaBottomUp, AssistError<BarTree>>) {
    let mut ta = TreeTa {
        teacher,
        a0: a0.clone(),
        config: config.clone(),
        stats: QueryStats::default(),
        pending: None,
    };
    match learner.learn(&mut ta, signature, a0) {
        Ok((hypothesis, learner_stats)) => {
            debug_assert_eq!(learner_stats.membership, ta.stats.membership);
            debug_assert_eq!(learner_stats.equivalence, ta.stats.equivalence);
            (ta.stats, Ok(hypothesis))
        }
        Err(LearnError::Aborted) => {
            let pending = ta
                .pending
                .take()
                .unwrap_or_else(|| AssistError::InconsistentTeacher("abort without cause".into()));
            (ta.stats, Err(pending))
        }
        Err(LearnError::InconsistentTeacher(msg)) => {
            (ta.stats, Err(AssistError::InconsistentTeacher(msg)))
        }
    }
}

/// Learns a bar word language over a known finite alphabet. Fails with
/// [`AssistError::AlphabetTooSmall`] if a counterexample has no
/// representative over `a0`.
pub fn learn_word_language<T: WordAlphaTeacher + ?Sized, L: WordLearner>(
    teacher: &mut T,
    a0: &BarAlphabet,
    learner: &L,
    config: &TaConfig,
) -> Result<(BarNfa, QueryStats), AssistError<BarString>> {
    let (stats, result) = run_word_session(teacher, a0, learner, config);
    result.map(|h| (h, stats))
}

/// Learns a bar tree language over a known finite alphabet.
pub fn learn_tree_language<T: TreeAlphaTeacher + ?Sized, L: TreeLearner>(
    teacher: &mut T,
    signature: &Signature,
    a0: &BarAlphabet,
    learner: &L,
    config: &TaConfig,
) -> Result<(BarNftaBottomUp, QueryStats), AssistError<BarTree>> {
    let (stats, result) = run_tree_session(teacher, signature, a0, learner, config);
    result.map(|h| (h, stats))
}

// Candidate pools for minimal extension: names already usable, free
// names of the counterexample, and fresh names (one per binder occurrence
// is always enough).
fn extension_pool(
    a0: &BarAlphabet,
    forced_plains: &BTreeSet<Name>,
    input_names: &BTreeSet<Name>,
    binders: usize,
) -> Vec<Letter> {
    let mut pool_names: BTreeSet<Name> = a0.names();
    pool_names.extend(forced_plains.iter().copied());
    let mut avoid: BTreeSet<Name> = a0.names();
    avoid.extend(input_names.iter().copied());
    pool_names.extend(fresh_names(&avoid).take(binders));
    let mut candidates = Vec::new();
    for &a in &pool_names {
        for l in [Letter::Plain(a), Letter::Bar(a)] {
            if !a0.contains(&l) {
                candidates.push(l);
            }
        }
    }
    candidates.sort();
    candidates
}

fn subsets_of_size(candidates: &[Letter], size: usize) -> Vec<Vec<Letter>> {
    fn rec(candidates: &[Letter], size: usize, start: usize, acc: &mut Vec<Letter>, out: &mut Vec<Vec<Letter>>) {
        if acc.len() == size {
            out.push(acc.clone());
            return;
        }
        for i in start..candidates.len() {
            acc.push(candidates[i]);
            rec(candidates, size, i + 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(candidates, size, 0, &mut Vec::new(), &mut out);
    out
}

fn minimal_extension_generic(
    a0: &BarAlphabet,
    forced_plains: &BTreeSet<Name>,
    input_names: &BTreeSet<Name>,
    binders: usize,
    feasible: impl Fn(&BarAlphabet) -> bool,
) -> BarAlphabet {
    if feasible(a0) {
        return a0.clone();
    }
    // Free names are forced: any feasible alphabet contains them as plains.
    let mut base = a0.clone();
    for &a in forced_plains {
        base.insert(Letter::Plain(a));
    }
    let candidates = extension_pool(a0, forced_plains, input_names, binders);
    for size in 0..=candidates.len() {
        for subset in subsets_of_size(&candidates, size) {
            let mut candidate = base.clone();
            for l in subset {
                candidate.insert(l);
            }
            if feasible(&candidate) {
                return candidate;
            }
        }
    }
    unreachable!("adding one fresh bar/plain pair per binder is always feasible")
}

/// Smallest extension of `a0` (in added-letter count, ties broken by
/// letter order) over which `w` has a representative. Returns `a0`
/// unchanged if one already exists.
pub fn minimal_extension_word(w: &BarString, a0: &BarAlphabet) -> BarAlphabet {
    let forced: BTreeSet<Name> = free_names(w)
        .into_iter()
        .filter(|&a| !a0.contains(&Letter::Plain(a)))
        .collect();
    let binders = w.iter().filter(|l| l.is_bar()).count();
    minimal_extension_generic(a0, &forced, &w.names(), binders, |candidate| {
        representative_word(w, candidate).is_some()
    })
}

/// Tree analogue of [`minimal_extension_word`].
pub fn minimal_extension_tree(t: &BarTree, a0: &BarAlphabet) -> BarAlphabet {
    let forced: BTreeSet<Name> = free_names_tree(t)
        .into_iter()
        .filter(|&a| !a0.contains(&Letter::Plain(a)))
        .collect();
    let binders = t.preorder().iter().filter(|(l, _)| l.is_bar()).count();
    minimal_extension_generic(a0, &forced, &t.names(), binders, |candidate| {
        representative_tree(t, candidate).is_some()
    })
}

/// Smallest extension of `a0` within `a0` plus the letters of `x` over
/// which `x` has an ultimately periodic representative. Free names of the
/// infinite word prune the search: they must be present as plains.
pub fn minimal_extension_up(x: &UltPeriodicWord, a0: &BarAlphabet) -> BarAlphabet {
    if representative_up(x, a0).is_some() {
        return a0.clone();
    }
    // Free names of the infinite word stabilize within stem + two periods.
    let frees = free_names(&x.prefix(x.stem().len() + 2 * x.period().len()));
    let candidates: Vec<Letter> = x
        .letter_set()
        .into_iter()
        .filter(|l| !a0.contains(l))
        .collect();
    for size in 0..=candidates.len() {
        for subset in subsets_of_size(&candidates, size) {
            let mut candidate = a0.clone();
            for l in subset {
                candidate.insert(l);
            }
            if frees.iter().any(|&a| !candidate.contains(&Letter::Plain(a))) {
                continue;
            }
            if representative_up(x, &candidate).is_some() {
                return candidate;
            }
        }
    }
    unreachable!("the word is a representative of itself over its own letters")
}

/// Learns a bar word language with no alphabet known up front: starts
/// from the empty alphabet and, whenever a counterexample has no
/// representative, extends the alphabet minimally and restarts. The
/// alphabet grows strictly on every restart.
pub fn discover_word_language<T: WordAlphaTeacher + ?Sized, L: WordLearner>(
    teacher: &mut T,
    learner: &L,
    config: &TaConfig,
) -> Result<(BarNfa, BarAlphabet, QueryStats), AssistError<BarString>> {
    let mut a0 = BarAlphabet::empty();
    let mut total = QueryStats::default();
    loop {
        let (stats, result) = run_word_session(teacher, &a0, learner, config);
        total.add(stats);
        match result {
            Ok(h) => return Ok((h, a0, total)),
            Err(AssistError::AlphabetTooSmall(cex)) => {
                if total.restarts >= config.max_restarts {
                    return Err(AssistError::LimitExceeded(format!(
                        "more than {} alphabet restarts",
                        config.max_restarts
                    )));
                }
                let extended = minimal_extension_word(&cex, &a0);
                assert!(
                    extended.len() > a0.len(),
                    "alphabet must grow on every restart"
                );
                total.restarts += 1;
                a0 = extended;
            }
            Err(e) => return Err(e),
        }
    }
}

/// Tree analogue of [`discover_word_language`].
pub fn discover_tree_language<T: TreeAlphaTeacher + ?Sized, L: TreeLearner>(
    teacher: &mut T,
    signature: &Signature,
    learner: &L,
    config: &TaConfig,
) -> Result<(BarNftaBottomUp, BarAlphabet, QueryStats), AssistError<BarTree>> {
    let mut a0 = BarAlphabet::empty();
    let mut total = QueryStats::default();
    loop {
        let (stats, result) = run_tree_session(teacher, signature, &a0, learner, config);
        total.add(stats);
        match result {
            Ok(h) => return Ok((h, a0, total)),
            Err(AssistError::AlphabetTooSmall(cex)) => {
                if total.restarts >= config.max_restarts {
                    return Err(AssistError::LimitExceeded(format!(
                        "more than {} alphabet restarts",
                        config.max_restarts
                    )));
                }
                let extended = minimal_extension_tree(&cex, &a0);
                assert!(
                    extended.len() > a0.len(),
                    "alphabet must grow on every restart"
                );
                total.restarts += 1;
                a0 = extended;
            }
            Err(e) => return Err(e),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
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

    #[test]
    fn representative_renames_into_the_alphabet() {
        // "|c c" over {|a, a} -> "|a a"
        let a0 = BarAlphabet::new([br("a"), pl("a")]);
        let rep = representative_word(&w(&[br("c"), pl("c")]), &a0).unwrap();
        assert_eq!(rep, w(&[br("a"), pl("a")]));
        // free name outside the alphabet: no representative
        assert_eq!(representative_word(&w(&[pl("d")]), &BarAlphabet::new([pl("a")])), None);
        // input already over the alphabet: some equivalent representative
        let input = w(&[br("a"), pl("a")]);
        let rep = representative_word(&input, &a0).unwrap();
        assert!(alpha_eq_string(&rep, &input));
    }

    #[test]
    fn representative_is_lexicographically_least() {
        // over {|a, a, |b, b} the class of "|c c" has two members; |a < |b
        let a0 = BarAlphabet::new([br("a"), pl("a"), br("b"), pl("b")]);
        let rep = representative_word(&w(&[br("c"), pl("c")]), &a0).unwrap();
        assert_eq!(rep, w(&[br("a"), pl("a")]));
    }

    #[test]
    fn alpha_witness_prefers_hypothesis_members() {
        let a0 = BarAlphabet::new([br("a"), pl("a"), br("b"), pl("b")]);
        let h = singleton_word(&w(&[br("a"), pl("a")]), &a0).unwrap();
        // the hypothesis accepts only "|a a"; the witness for "|b b" is "|a a"
        let witness = alpha_witness_word(&h, &w(&[br("b"), pl("b")])).unwrap();
        assert_eq!(witness, w(&[br("a"), pl("a")]));
        // no witness across alpha classes
        assert_eq!(alpha_witness_word(&h, &w(&[pl("a")])), None);
        // a literal member is its own witness
        let witness = alpha_witness_word(&h, &w(&[br("a"), pl("a")])).unwrap();
        assert_eq!(witness, w(&[br("a"), pl("a")]));
    }

    #[test]
    fn minimal_extension_uses_fresh_names_for_binders() {
        // "|c c" from the empty alphabet: one bar + one plain of the first
        // fresh name
        let ext = minimal_extension_word(&w(&[br("c"), pl("c")]), &BarAlphabet::empty());
        assert_eq!(
            ext,
            BarAlphabet::new([br("n1"), pl("n1")])
        );
        // free names are forced
        let ext = minimal_extension_word(&w(&[pl("a"), pl("b")]), &BarAlphabet::empty());
        assert_eq!(ext, BarAlphabet::new([pl("a"), pl("b")]));
        // no extension needed
        let a0 = BarAlphabet::new([br("a"), pl("a")]);
        assert_eq!(minimal_extension_word(&w(&[br("a"), pl("a")]), &a0), a0);
    }

    #[test]
    fn minimal_extension_reuses_existing_plains() {
        // plain a is present; a single bar letter |a suffices for "|c c"
        let a0 = BarAlphabet::new([pl("a")]);
        let ext = minimal_extension_word(&w(&[br("c"), pl("c")]), &a0);
        assert_eq!(ext, BarAlphabet::new([pl("a"), br("a")]));
    }

    #[test]
    fn minimal_extension_up_searches_the_words_letters() {
        let x = UltPeriodicWord::new(BarString::empty(), w(&[br("c"), pl("c")])).unwrap();
        let ext = minimal_extension_up(&x, &BarAlphabet::empty());
        assert_eq!(ext, BarAlphabet::new([br("c"), pl("c")]));
        let y = UltPeriodicWord::new(BarString::empty(), w(&[pl("a")])).unwrap();
        assert_eq!(
            minimal_extension_up(&y, &BarAlphabet::empty()),
            BarAlphabet::new([pl("a")])
        );
        let a0 = BarAlphabet::new([br("c"), pl("c")]);
        assert_eq!(minimal_extension_up(&x, &a0), a0);
    }
}
