//! Internal MAT learners over a fixed finite alphabet: an Angluin-style
//! observation-table learner for deterministic word automata and its
//! analogue for deterministic bottom-up tree automata. Both sit behind
//! learner traits so that other MAT learners can be plugged in.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use crate::automata::{
    literal_member_tree, literal_member_word, BarAlphabet, BarNfa, BarNftaBottomUp, TreeRule,
};
use crate::names::Symbol;
use crate::trees::{BarTree, Signature};
use crate::words::{BarString, Letter};

/// Query counters for a learning session.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
pub struct QueryStats {
    pub membership: u64,
    pub equivalence: u64,
    pub restarts: u64,
}

impl QueryStats {
    pub fn add(&mut self, other: QueryStats) {
        self.membership += other.membership;
        self.equivalence += other.equivalence;
        self.restarts += other.restarts;
    }
}

/// Marker returned by a teacher that wants the current learning run to
/// stop (the caller knows why).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Aborted;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LearnError {
    #[error("teacher answers are inconsistent: {0}")]
    InconsistentTeacher(String),
    #[error("teacher aborted the session")]
    Aborted,
}

/// A teacher for regular word languages over a finite bar alphabet.
pub trait WordTeacher {
    fn mq(&mut self, w: &BarString) -> bool;
    /// `Ok(None)` means the hypothesis is correct; `Ok(Some(w))` is a
    /// counterexample in the symmetric difference.
    fn eq(&mut self, hypothesis: &BarNfa) -> Result<Option<BarString>, Aborted>;
}

/// A teacher for regular tree languages.
pub trait TreeTeacher {
    fn mq(&mut self, t: &BarTree) -> bool;
    fn eq(&mut self, hypothesis: &BarNftaBottomUp) -> Result<Option<BarTree>, Aborted>;
}

/// A MAT-based learner for word languages. The shipped implementation is
/// [`LStar`]; anything answering the same contract can replace it.
pub trait WordLearner {
    fn learn(
        &self,
        teacher: &mut dyn WordTeacher,
        alphabet: &BarAlphabet,
    ) -> Result<(BarNfa, QueryStats), LearnError>;
}

/// A MAT-based learner for tree languages.
pub trait TreeLearner {
    fn learn(
        &self,
        teacher: &mut dyn TreeTeacher,
        signature: &Signature,
        alphabet: &BarAlphabet,
    ) -> Result<(BarNftaBottomUp, QueryStats), LearnError>;
}

/// Classical observation-table learner for deterministic word automata.
#[derive(Debug, Default, Clone, Copy)]
pub struct LStar;

struct WordTable<'t> {
    teacher: &'t mut dyn WordTeacher,
    letters: Vec<Letter>,
    rows: BTreeSet<BarString>,
    cols: BTreeSet<BarString>,
    cells: HashMap<BarString, bool>,
    stats: QueryStats,
}

impl<'t> WordTable<'t> {
    fn new(teacher: &'t mut dyn WordTeacher, alphabet: &BarAlphabet) -> Self {
        WordTable {
            teacher,
            letters: alphabet.iter().collect(),
            rows: [BarString::empty()].into(),
            cols: [BarString::empty()].into(),
            cells: HashMap::new(),
            stats: QueryStats::default(),
        }
    }

    fn cell(&mut self, w: BarString) -> bool {
        if let Some(&v) = self.cells.get(&w) {
            return v;
        }
        self.stats.membership += 1;
        let v = self.teacher.mq(&w);
        self.cells.insert(w, v);
        v
    }

    fn row_vector(&mut self, r: &BarString) -> Vec<bool> {
        let cols: Vec<BarString> = self.cols.iter().cloned().collect();
        cols.into_iter().map(|e| self.cell(r.concat(&e))).collect()
    }

    fn extend_row(&self, r: &BarString, l: Letter) -> BarString {
        let mut w = r.clone();
        w.push(l);
        w
    }

    // Returns false if the table changed (a row or column was added).
    fn close_and_make_consistent(&mut self) -> bool {
        // Closedness: every one-letter extension's row vector must occur
        // among the rows.
        let rows: Vec<BarString> = self.rows.iter().cloned().collect();
        let mut row_vectors = BTreeSet::new();
        for r in &rows {
            row_vectors.insert(self.row_vector(r));
        }
        for r in &rows {
            for &l in &self.letters.clone() {
                let ext = self.extend_row(r, l);
                if self.rows.contains(&ext) {
                    continue;
                }
                let v = self.row_vector(&ext);
                if !row_vectors.contains(&v) {
                    self.rows.insert(ext);
                    return false;
                }
            }
        }
        // Consistency: equal rows must have equal one-letter extensions.
        for (i, r1) in rows.iter().enumerate() {
            for r2 in rows.iter().skip(i + 1) {
                if self.row_vector(r1) != self.row_vector(r2) {
                    continue;
                }
                for &l in &self.letters.clone() {
                    let e1 = self.extend_row(r1, l);
                    let e2 = self.extend_row(r2, l);
                    let v1 = self.row_vector(&e1);
                    let v2 = self.row_vector(&e2);
                    if v1 != v2 {
                        let cols: Vec<BarString> = self.cols.iter().cloned().collect();
                        let defect = cols
                            .iter()
                            .zip(v1.iter().zip(&v2))
                            .find(|(_, (a, b))| a != b)
                            .map(|(e, _)| e.clone())
                            .expect("vectors differ");
                        let mut new_col = BarString::new(vec![l]);
                        new_col = new_col.concat(&defect);
                        self.cols.insert(new_col);
                        return false;
                    }
                }
            }
        }
        true
    }

    fn hypothesis(&mut self) -> BarNfa {
        // One state per distinct row vector; ids in the order of the
        // short-lex least representative.
        let rows: Vec<BarString> = self.rows.iter().cloned().collect();
        let mut class_of: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
        let mut class_order: Vec<Vec<bool>> = Vec::new();
        for r in &rows {
            let v = self.row_vector(r);
            if !class_of.contains_key(&v) {
                class_of.insert(v.clone(), class_order.len());
                class_order.push(v);
            }
        }
        let initial = class_of[&self.row_vector(&BarString::empty())];
        let mut finals = BTreeSet::new();
        let mut transitions = BTreeSet::new();
        for r in &rows {
            let from = class_of[&self.row_vector(r)];
            if self.cell(r.clone()) {
                finals.insert(from);
            }
            for &l in &self.letters.clone() {
                let ext = self.extend_row(r, l);
                let to = class_of[&self.row_vector(&ext)];
                transitions.insert((from, l, to));
            }
        }
        BarNfa::with_default_names(
            class_order.len(),
            BarAlphabet::new(self.letters.iter().copied()),
            initial,
            finals,
            transitions,
        )
        .expect("table hypothesis is consistent")
    }
}

impl WordLearner for LStar {
    fn learn(
        &self,
        teacher: &mut dyn WordTeacher,
        alphabet: &BarAlphabet,
    ) -> Result<(BarNfa, QueryStats), LearnError> {
        let mut table = WordTable::new(teacher, alphabet);
        loop {
            while !table.close_and_make_consistent() {}
            let hypothesis = table.hypothesis();
            table.stats.equivalence += 1;
            match table.teacher.eq(&hypothesis) {
                Err(Aborted) => return Err(LearnError::Aborted),
                Ok(None) => return Ok((hypothesis, table.stats)),
                Ok(Some(cex)) => {
                    let predicted = literal_member_word(&hypothesis, &cex);
                    let actual = table.cell(cex.clone());
                    if predicted == actual {
                        return Err(LearnError::InconsistentTeacher(format!(
                            "counterexample {cex:?} does not distinguish hypothesis and target"
                        )));
                    }
                    for len in 1..=cex.len() {
                        table.rows.insert(cex.prefix(len));
                    }
                }
            }
        }
    }
}

/// A one-hole context over bar trees.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Context {
    Hole,
    Node {
        letter: Letter,
        symbol: Symbol,
        before: Vec<BarTree>,
        inner: Box<Context>,
        after: Vec<BarTree>,
    },
}

impl Context {
    pub fn apply(&self, t: &BarTree) -> BarTree {
        match self {
            Context::Hole => t.clone(),
            Context::Node {
                letter,
                symbol,
                before,
                inner,
                after,
            } => {
                let mut children = before.clone();
                children.push(inner.apply(t));
                children.extend(after.iter().cloned());
                BarTree::new(*letter, *symbol, children)
            }
        }
    }

    /// `self[other[.]]`.
    pub fn compose(&self, other: &Context) -> Context {
        match self {
            Context::Hole => other.clone(),
            Context::Node {
                letter,
                symbol,
                before,
                inner,
                after,
            } => Context::Node {
                letter: *letter,
                symbol: *symbol,
                before: before.clone(),
                inner: Box::new(inner.compose(other)),
                after: after.clone(),
            },
        }
    }
}

/// Observation-table learner for deterministic bottom-up tree automata:
/// rows are a subtree-closed set of trees, columns are one-hole contexts
/// including the trivial one.
#[derive(Debug, Default, Clone, Copy)]
pub struct TreeLStar;

struct TreeTable<'t> {
    teacher: &'t mut dyn TreeTeacher,
    letters: Vec<Letter>,
    signature: Signature,
    rows: BTreeSet<BarTree>,
    cols: BTreeSet<Context>,
    cells: HashMap<BarTree, bool>,
    stats: QueryStats,
}

impl<'t> TreeTable<'t> {
    fn new(teacher: &'t mut dyn TreeTeacher, signature: &Signature, alphabet: &BarAlphabet) -> Self {
        TreeTable {
            teacher,
            letters: alphabet.iter().collect(),
            signature: signature.clone(),
            rows: BTreeSet::new(),
            cols: [Context::Hole].into(),
            cells: HashMap::new(),
            stats: QueryStats::default(),
        }
    }

    fn cell(&mut self, t: BarTree) -> bool {
        if let Some(&v) = self.cells.get(&t) {
            return v;
        }
        self.stats.membership += 1;
        let v = self.teacher.mq(&t);
        self.cells.insert(t, v);
        v
    }

    fn row_vector(&mut self, t: &BarTree) -> Vec<bool> {
        let cols: Vec<Context> = self.cols.iter().cloned().collect();
        cols.into_iter().map(|c| self.cell(c.apply(t))).collect()
    }

    /// All one-symbol extensions `f(s1..sn)` with rows as children, in
    /// ascending tree order.
    fn extensions(&self) -> Vec<BarTree> {
        let rows: Vec<BarTree> = self.rows.iter().cloned().collect();
        let mut out = Vec::new();
        for (f, arity) in self.signature.clone().symbols() {
            for &l in &self.letters {
                let mut tuples: Vec<Vec<BarTree>> = vec![Vec::new()];
                for _ in 0..arity {
                    let mut next = Vec::new();
                    for t in &tuples {
                        for r in &rows {
                            let mut t2 = t.clone();
                            t2.push(r.clone());
                            next.push(t2);
                        }
                    }
                    tuples = next;
                }
                for children in tuples {
                    out.push(BarTree::new(l, f, children));
                }
            }
        }
        out.sort();
        out
    }

    /// One-symbol contexts with the hole at each child position and rows
    /// filling the other positions.
    fn one_symbol_contexts(&self) -> Vec<Context> {
        let rows: Vec<BarTree> = self.rows.iter().cloned().collect();
        let mut out = Vec::new();
        for (f, arity) in self.signature.clone().symbols() {
            for &l in &self.letters {
                for hole_at in 0..arity {
                    let mut fillings: Vec<Vec<BarTree>> = vec![Vec::new()];
                    for _ in 0..arity - 1 {
                        let mut next = Vec::new();
                        for t in &fillings {
                            for r in &rows {
                                let mut t2 = t.clone();
                                t2.push(r.clone());
                                next.push(t2);
                            }
                        }
                        fillings = next;
                    }
                    for fill in fillings {
                        out.push(Context::Node {
                            letter: l,
                            symbol: f,
                            before: fill[..hole_at].to_vec(),
                            inner: Box::new(Context::Hole),
                            after: fill[hole_at..].to_vec(),
                        });
                    }
                }
            }
        }
        out.sort();
        out
    }

    fn close_and_make_consistent(&mut self) -> bool {
        // Closedness.
        let mut row_vectors = BTreeSet::new();
        let rows: Vec<BarTree> = self.rows.iter().cloned().collect();
        for r in &rows {
            row_vectors.insert(self.row_vector(r));
        }
        for ext in self.extensions() {
            if self.rows.contains(&ext) {
                continue;
            }
            let v = self.row_vector(&ext);
            if !row_vectors.contains(&v) {
                self.rows.insert(ext);
                return false;
            }
        }
        // Consistency: equally-rowed trees must agree in every one-symbol
        // context over current rows.
        let contexts = self.one_symbol_contexts();
        for (i, r1) in rows.iter().enumerate() {
            for r2 in rows.iter().skip(i + 1) {
                if self.row_vector(r1) != self.row_vector(r2) {
                    continue;
                }
                for c in &contexts {
                    let v1 = self.row_vector(&c.apply(r1));
                    let v2 = self.row_vector(&c.apply(r2));
                    if v1 != v2 {
                        let cols: Vec<Context> = self.cols.iter().cloned().collect();
                        let defect = cols
                            .iter()
                            .zip(v1.iter().zip(&v2))
                            .find(|(_, (a, b))| a != b)
                            .map(|(e, _)| e.clone())
                            .expect("vectors differ");
                        self.cols.insert(defect.compose(c));
                        return false;
                    }
                }
            }
        }
        true
    }

    fn hypothesis(&mut self) -> BarNftaBottomUp {
        let rows: Vec<BarTree> = self.rows.iter().cloned().collect();
        let mut class_of: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
        let mut representative: Vec<BarTree> = Vec::new();
        for r in &rows {
            let v = self.row_vector(r);
            if !class_of.contains_key(&v) {
                class_of.insert(v, representative.len());
                representative.push(r.clone());
            }
        }
        let n = representative.len();
        let mut finals = BTreeSet::new();
        for (id, rep) in representative.iter().enumerate() {
            if self.cell(rep.clone()) {
                finals.insert(id);
            }
        }
        let mut rules = BTreeSet::new();
        for (f, arity) in self.signature.clone().symbols() {
            for &l in &self.letters.clone() {
                let mut tuples: Vec<Vec<usize>> = vec![Vec::new()];
                for _ in 0..arity {
                    let mut next = Vec::new();
                    for t in &tuples {
                        for q in 0..n {
                            let mut t2 = t.clone();
                            t2.push(q);
                            next.push(t2);
                        }
                    }
                    tuples = next;
                }
                for tuple in tuples {
                    let children: Vec<BarTree> = tuple
                        .iter()
                        .map(|&q| representative[q].clone())
                        .collect();
                    let combined = BarTree::new(l, f, children);
                    let v = self.row_vector(&combined);
                    let result = *class_of.get(&v).unwrap_or_else(|| {
                        panic!("table not closed: extension {combined} has a new row")
                    });
                    rules.insert(TreeRule {
                        symbol: f,
                        letter: l,
                        children: tuple,
                        result,
                    });
                }
            }
        }
        BarNftaBottomUp::with_default_names(
            n,
            BarAlphabet::new(self.letters.iter().copied()),
            self.signature.clone(),
            finals,
            rules,
        )
        .expect("table hypothesis is consistent")
    }

    fn add_subtrees(&mut self, t: &BarTree) {
        self.rows.insert(t.clone());
        for c in &t.children {
            self.add_subtrees(c);
        }
    }
}

impl TreeLearner for TreeLStar {
    fn learn(
        &self,
        teacher: &mut dyn TreeTeacher,
        signature: &Signature,
        alphabet: &BarAlphabet,
    ) -> Result<(BarNftaBottomUp, QueryStats), LearnError> {
        let mut table = TreeTable::new(teacher, signature, alphabet);
        loop {
            while !table.close_and_make_consistent() {}
            let hypothesis = table.hypothesis();
            table.stats.equivalence += 1;
            match table.teacher.eq(&hypothesis) {
                Err(Aborted) => return Err(LearnError::Aborted),
                Ok(None) => return Ok((hypothesis, table.stats)),
                Ok(Some(cex)) => {
                    let predicted = literal_member_tree(&hypothesis, &cex)
                        .map_err(|e| LearnError::InconsistentTeacher(e.to_string()))?;
                    let actual = table.cell(cex.clone());
                    if predicted == actual {
                        return Err(LearnError::InconsistentTeacher(format!(
                            "counterexample {cex} does not distinguish hypothesis and target"
                        )));
                    }
                    table.add_subtrees(&cex);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automata::shortest_in_symmetric_difference_word;
    use crate::names::Name;

    fn pl(s: &str) -> Letter {
        Letter::Plain(Name::new(s))
    }

    fn br(s: &str) -> Letter {
        Letter::Bar(Name::new(s))
    }

    /// Perfect teacher for the literal language of a word automaton,
    /// answering equivalence queries with the minimal witness.
    pub struct DirectWordTeacher {
        pub target: BarNfa,
    }

    impl WordTeacher for DirectWordTeacher {
        fn mq(&mut self, w: &BarString) -> bool {
            literal_member_word(&self.target, w)
        }

        fn eq(&mut self, hypothesis: &BarNfa) -> Result<Option<BarString>, Aborted> {
            Ok(
                shortest_in_symmetric_difference_word(hypothesis, &self.target)
                    .expect("same alphabet"),
            )
        }
    }

    #[test]
    fn learns_the_empty_language() {
        let alphabet = BarAlphabet::new([pl("a")]);
        let mut teacher = DirectWordTeacher {
            target: BarNfa::empty_language(alphabet.clone()),
        };
        let (h, stats) = LStar.learn(&mut teacher, &alphabet).unwrap();
        assert_eq!(h.num_states(), 1);
        assert!(h.finals().is_empty());
        assert!(stats.equivalence <= 2);
    }

    #[test]
    fn learns_words_containing_a_bar() {
        // language: all words over {a, |a} containing |a; minimal DFA has 2 states
        let alphabet = BarAlphabet::new([pl("a"), br("a")]);
        let target = BarNfa::with_default_names(
            2,
            alphabet.clone(),
            0,
            [1].into(),
            [
                (0, pl("a"), 0),
                (0, br("a"), 1),
                (1, pl("a"), 1),
                (1, br("a"), 1),
            ]
            .into(),
        )
        .unwrap();
        let mut teacher = DirectWordTeacher {
            target: target.clone(),
        };
        let (h, stats) = LStar.learn(&mut teacher, &alphabet).unwrap();
        assert_eq!(h.num_states(), 2);
        assert!(h.is_deterministic_complete());
        assert_eq!(
            shortest_in_symmetric_difference_word(&h, &target).unwrap(),
            None
        );
        // classical bound: equivalence queries at most minimal-state count
        assert!(stats.equivalence <= 2 + 1);
    }

    #[test]
    fn identical_sessions_are_deterministic() {
        let alphabet = BarAlphabet::new([pl("a"), br("a")]);
        let target = BarNfa::with_default_names(
            2,
            alphabet.clone(),
            0,
            [1].into(),
            [(0, br("a"), 1), (1, pl("a"), 1)].into(),
        )
        .unwrap();
        let run = || {
            let mut teacher = DirectWordTeacher {
                target: target.clone(),
            };
            LStar.learn(&mut teacher, &alphabet).unwrap()
        };
        let (h1, s1) = run();
        let (h2, s2) = run();
        assert_eq!(h1, h2);
        assert_eq!(s1, s2);
    }
}
