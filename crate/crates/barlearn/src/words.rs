//! Bar strings and ultimately periodic bar words.
//!
//! A bar string is a finite word over plain letters `a` and bar letters
//! `|a`; a bar letter binds its name for the rest of the word. An
//! ultimately periodic word `(u, v)` denotes the infinite word `u v v ...`.

use std::collections::BTreeSet;
use std::fmt;

use crate::names::{Name, Permutation};

/// One alphabet symbol: a plain name or a barred (binding) name.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    Plain(Name),
    Bar(Name),
}

impl Letter {
    pub fn name(&self) -> Name {
        match *self {
            Letter::Plain(a) | Letter::Bar(a) => a,
        }
    }

    pub fn is_bar(&self) -> bool {
        matches!(self, Letter::Bar(_))
    }

    pub fn apply_perm(&self, p: &Permutation) -> Letter {
        match *self {
            Letter::Plain(a) => Letter::Plain(p.apply(a)),
            Letter::Bar(a) => Letter::Bar(p.apply(a)),
        }
    }
}

// Letters order by name first, plain before bar at equal name: a < |a < b.
impl Ord for Letter {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.name(), self.is_bar()).cmp(&(other.name(), other.is_bar()))
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Plain(a) => write!(f, "{a}"),
            Letter::Bar(a) => write!(f, "|{a}"),
        }
    }
}

/// A finite word of letters.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct BarString {
    letters: Vec<Letter>,
}

// Short-lex: by length, then letterwise. This is the witness order used
// throughout (minimal counterexamples, table exploration).
impl Ord for BarString {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.letters.len(), &self.letters).cmp(&(other.letters.len(), &other.letters))
    }
}

impl PartialOrd for BarString {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl BarString {
    pub fn new(letters: Vec<Letter>) -> Self {
        BarString { letters }
    }

    pub fn empty() -> Self {
        BarString::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn iter(&self) -> impl Iterator<Item = &Letter> {
        self.letters.iter()
    }

    pub fn push(&mut self, l: Letter) {
        self.letters.push(l);
    }

    pub fn concat(&self, other: &BarString) -> BarString {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        BarString { letters }
    }

    pub fn repeat(&self, times: usize) -> BarString {
        let mut letters = Vec::with_capacity(self.letters.len() * times);
        for _ in 0..times {
            letters.extend_from_slice(&self.letters);
        }
        BarString { letters }
    }

    pub fn prefix(&self, len: usize) -> BarString {
        BarString::new(self.letters[..len.min(self.letters.len())].to_vec())
    }

    /// All names occurring in the word, barred or plain.
    pub fn names(&self) -> BTreeSet<Name> {
        self.letters.iter().map(|l| l.name()).collect()
    }

    pub fn letter_set(&self) -> BTreeSet<Letter> {
        self.letters.iter().copied().collect()
    }
}

impl FromIterator<Letter> for BarString {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        BarString::new(iter.into_iter().collect())
    }
}

impl fmt::Display for BarString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for l in &self.letters {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
            first = false;
        }
        Ok(())
    }
}

/// The free names of a bar string: plain occurrences of `a` that precede
/// the first occurrence (if any) of `|a`.
pub fn free_names(w: &BarString) -> BTreeSet<Name> {
    let mut barred = BTreeSet::new();
    let mut free = BTreeSet::new();
    for l in w.iter() {
        match *l {
            Letter::Plain(a) => {
                if !barred.contains(&a) {
                    free.insert(a);
                }
            }
            Letter::Bar(a) => {
                barred.insert(a);
            }
        }
    }
    free
}

/// Erase all bars, keeping the underlying names.
pub fn ub(w: &BarString) -> Vec<Name> {
    w.iter().map(|l| l.name()).collect()
}

/// Clean: all bar names pairwise distinct and no barred name occurs free.
pub fn is_clean(w: &BarString) -> bool {
    let mut seen_bars = BTreeSet::new();
    for l in w.iter() {
        if let Letter::Bar(a) = *l {
            if !seen_bars.insert(a) {
                return false;
            }
        }
    }
    let free = free_names(w);
    seen_bars.is_disjoint(&free)
}

/// Closed: no free names.
pub fn is_closed(w: &BarString) -> bool {
    free_names(w).is_empty()
}

/// Letterwise permutation action.
pub fn apply_perm(p: &Permutation, w: &BarString) -> BarString {
    w.iter().map(|l| l.apply_perm(p)).collect()
}

/// An ultimately periodic word `u v v v ...` with nonempty `v`. The
/// representation is not unique: distinct pairs may denote the same
/// infinite word.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct UltPeriodicWord {
    stem: BarString,
    period: BarString,
}

impl UltPeriodicWord {
    /// Fails if the period is empty.
    pub fn new(stem: BarString, period: BarString) -> Option<Self> {
        (!period.is_empty()).then_some(UltPeriodicWord { stem, period })
    }

    pub fn stem(&self) -> &BarString {
        &self.stem
    }

    pub fn period(&self) -> &BarString {
        &self.period
    }

    /// Finite prefix of the denoted infinite word.
    pub fn prefix(&self, len: usize) -> BarString {
        let mut letters = Vec::with_capacity(len);
        for i in 0..len {
            if i < self.stem.len() {
                letters.push(self.stem.letters()[i]);
            } else {
                let j = (i - self.stem.len()) % self.period.len();
                letters.push(self.period.letters()[j]);
            }
        }
        BarString::new(letters)
    }

    pub fn names(&self) -> BTreeSet<Name> {
        let mut names = self.stem.names();
        names.extend(self.period.names());
        names
    }

    pub fn letter_set(&self) -> BTreeSet<Letter> {
        let mut set = self.stem.letter_set();
        set.extend(self.period.letter_set());
        set
    }

    /// Rewrites the pair so the stem has length `target_len >= |stem|`,
    /// denoting the same infinite word: letters move from the front of the
    /// period into the stem while the period rotates.
    pub fn with_stem_length(&self, target_len: usize) -> UltPeriodicWord {
        assert!(target_len >= self.stem.len());
        let d = target_len - self.stem.len();
        let k = self.period.len();
        let mut stem = self.stem.letters().to_vec();
        for i in 0..d {
            stem.push(self.period.letters()[i % k]);
        }
        let rot = d % k;
        let mut period = self.period.letters()[rot..].to_vec();
        period.extend_from_slice(&self.period.letters()[..rot]);
        UltPeriodicWord {
            stem: BarString::new(stem),
            period: BarString::new(period),
        }
    }
}

impl fmt::Display for UltPeriodicWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.stem.is_empty() {
            write!(f, "; {}", self.period)
        } else {
            write!(f, "{} ; {}", self.stem, self.period)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> Name {
        Name::new(s)
    }

    fn pl(s: &str) -> Letter {
        Letter::Plain(n(s))
    }

    fn br(s: &str) -> Letter {
        Letter::Bar(n(s))
    }

    fn w(ls: &[Letter]) -> BarString {
        BarString::new(ls.to_vec())
    }

    // "b a |b a b"
    fn balbab() -> BarString {
        w(&[pl("b"), pl("a"), br("b"), pl("a"), pl("b")])
    }

    #[test]
    fn letter_order_is_name_then_bar() {
        let mut ls = vec![br("b"), pl("b"), br("a"), pl("a")];
        ls.sort();
        assert_eq!(ls, vec![pl("a"), br("a"), pl("b"), br("b")]);
    }

    #[test]
    fn free_names_examples() {
        // FN(b a |b a b) = {a, b}: the first b is plain and precedes |b.
        assert_eq!(
            free_names(&balbab()),
            [n("a"), n("b")].into_iter().collect()
        );
        assert_eq!(free_names(&BarString::empty()), BTreeSet::new());
        // "|a a": the only plain a is preceded by |a.
        assert_eq!(free_names(&w(&[br("a"), pl("a")])), BTreeSet::new());
    }

    #[test]
    fn ub_erases_bars() {
        assert_eq!(
            ub(&balbab()),
            vec![n("b"), n("a"), n("b"), n("a"), n("b")]
        );
        assert_eq!(ub(&BarString::empty()), Vec::<Name>::new());
        assert_eq!(ub(&w(&[br("a"), br("b")])), vec![n("a"), n("b")]);
    }

    #[test]
    fn clean_and_closed() {
        let v = w(&[br("a"), pl("a"), br("b"), pl("b")]);
        assert!(is_clean(&v));
        assert!(is_closed(&v));
        // b occurs barred yet free.
        assert!(!is_clean(&balbab()));
        assert!(!is_closed(&balbab()));
        // Repeated bar name.
        assert!(!is_clean(&w(&[br("a"), br("a")])));
    }

    #[test]
    fn permutation_action_is_letterwise() {
        let p = Permutation::transposition(n("a"), n("b"));
        assert_eq!(
            apply_perm(&p, &w(&[pl("a"), br("b"), pl("b")])),
            w(&[pl("b"), br("a"), pl("a")])
        );
        assert_eq!(apply_perm(&Permutation::identity(), &balbab()), balbab());
        let q = Permutation::transposition(n("a"), n("c"));
        assert_eq!(
            apply_perm(&q, &balbab()),
            w(&[pl("b"), pl("c"), br("b"), pl("c"), pl("b")])
        );
    }

    #[test]
    fn up_word_prefix_unrolls() {
        let x = UltPeriodicWord::new(w(&[pl("a")]), w(&[br("b"), pl("b")])).unwrap();
        assert_eq!(
            x.prefix(5),
            w(&[pl("a"), br("b"), pl("b"), br("b"), pl("b")])
        );
        assert!(UltPeriodicWord::new(BarString::empty(), BarString::empty()).is_none());
    }

    #[test]
    fn stem_extension_preserves_the_infinite_word() {
        let x = UltPeriodicWord::new(w(&[pl("a")]), w(&[br("b"), pl("b"), pl("a")])).unwrap();
        let y = x.with_stem_length(5);
        assert_eq!(y.stem().len(), 5);
        assert_eq!(y.period().len(), 3);
        for len in 0..20 {
            assert_eq!(x.prefix(len), y.prefix(len));
        }
    }
}
