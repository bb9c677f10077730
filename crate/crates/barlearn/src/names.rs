//! Names, symbols and finite permutations.
//!
//! Names are drawn from a countably infinite, totally ordered universe and
//! stand for data values. They are interned so that copies are cheap and
//! comparisons are deterministic (string order, independent of creation
//! order).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::{Mutex, OnceLock};

fn interner() -> &'static Mutex<BTreeSet<&'static str>> {
    static INTERNER: OnceLock<Mutex<BTreeSet<&'static str>>> = OnceLock::new();
    INTERNER.get_or_init(|| Mutex::new(BTreeSet::new()))
}

fn intern(s: &str) -> &'static str {
    let mut set = interner().lock().unwrap();
    if let Some(existing) = set.get(s) {
        existing
    } else {
        let leaked: &'static str = Box::leak(s.to_owned().into_boxed_str());
        set.insert(leaked);
        leaked
    }
}

/// A name from the countable universe of data values.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct Name(&'static str);

impl Name {
    pub fn new(s: &str) -> Self {
        Name(intern(s))
    }

    pub fn as_str(&self) -> &'static str {
        self.0
    }
}

impl Ord for Name {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.cmp(other.0)
    }
}

impl PartialOrd for Name {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl fmt::Debug for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Name({})", self.0)
    }
}

/// A signature symbol identifier (`f`, `c`, ...), interned like names.
#[derive(Copy, Clone, PartialEq, Eq, Hash)]
pub struct Symbol(&'static str);

impl Symbol {
    pub fn new(s: &str) -> Self {
        Symbol(intern(s))
    }

    pub fn as_str(&self) -> &'static str {
        self.0
    }
}

impl Ord for Symbol {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.0.cmp(other.0)
    }
}

impl PartialOrd for Symbol {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.0)
    }
}

impl fmt::Debug for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Symbol({})", self.0)
    }
}

/// Deterministic enumeration of fresh names: `n1, n2, ...`, skipping any
/// name already in use in the given context.
pub fn fresh_names(avoid: &BTreeSet<Name>) -> impl Iterator<Item = Name> + '_ {
    (1u64..).filter_map(move |i| {
        let candidate = Name::new(&format!("n{i}"));
        (!avoid.contains(&candidate)).then_some(candidate)
    })
}

/// First fresh name for a context.
pub fn fresh_name(avoid: &BTreeSet<Name>) -> Name {
    fresh_names(avoid).next().unwrap()
}

/// A finite permutation of the name universe: a bijection that is the
/// identity outside a finite domain.
#[derive(Clone, Default, PartialEq, Eq, Debug)]
pub struct Permutation {
    map: BTreeMap<Name, Name>,
}

impl Permutation {
    pub fn identity() -> Self {
        Permutation::default()
    }

    /// The transposition `(a b)`.
    pub fn transposition(a: Name, b: Name) -> Self {
        let mut map = BTreeMap::new();
        if a != b {
            map.insert(a, b);
            map.insert(b, a);
        }
        Permutation { map }
    }

    /// Builds a permutation from explicit pairs. Fails if the pairs do not
    /// describe a bijection on their domain.
    pub fn from_pairs<I: IntoIterator<Item = (Name, Name)>>(pairs: I) -> Option<Self> {
        let mut map = BTreeMap::new();
        let mut image = BTreeSet::new();
        for (a, b) in pairs {
            if map.insert(a, b).is_some() || !image.insert(b) {
                return None;
            }
        }
        if map.keys().collect::<BTreeSet<_>>() != map.values().collect::<BTreeSet<_>>() {
            return None;
        }
        Some(Permutation { map })
    }

    pub fn apply(&self, a: Name) -> Name {
        self.map.get(&a).copied().unwrap_or(a)
    }

    pub fn inverse(&self) -> Self {
        Permutation {
            map: self.map.iter().map(|(&a, &b)| (b, a)).collect(),
        }
    }

    /// Composition `self . other` (apply `other` first).
    pub fn compose(&self, other: &Permutation) -> Self {
        let mut map = BTreeMap::new();
        for &a in self.map.keys().chain(other.map.keys()) {
            let image = self.apply(other.apply(a));
            if image != a {
                map.insert(a, image);
            }
        }
        Permutation { map }
    }

    /// True if the permutation fixes every name in `names`.
    pub fn fixes_all<'a, I: IntoIterator<Item = &'a Name>>(&self, names: I) -> bool {
        names.into_iter().all(|&a| self.apply(a) == a)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> Name {
        Name::new(s)
    }

    #[test]
    fn interned_names_compare_by_string() {
        assert_eq!(n("a"), n("a"));
        assert!(n("a") < n("b"));
        assert!(n("b") < n("n1"));
    }

    #[test]
    fn fresh_enumeration_skips_used_names() {
        let avoid: BTreeSet<Name> = [n("n1"), n("n3")].into_iter().collect();
        let got: Vec<Name> = fresh_names(&avoid).take(3).collect();
        assert_eq!(got, vec![n("n2"), n("n4"), n("n5")]);
    }

    #[test]
    fn transposition_swaps_and_fixes_rest() {
        let p = Permutation::transposition(n("a"), n("b"));
        assert_eq!(p.apply(n("a")), n("b"));
        assert_eq!(p.apply(n("b")), n("a"));
        assert_eq!(p.apply(n("c")), n("c"));
        assert_eq!(p.compose(&p), Permutation::identity());
    }

    #[test]
    fn compose_and_inverse() {
        let p = Permutation::transposition(n("a"), n("b"));
        let q = Permutation::transposition(n("b"), n("c"));
        let pq = p.compose(&q);
        // (a b)(b c): c -> b -> a, a -> b, b -> c -> c.
        assert_eq!(pq.apply(n("c")), n("a"));
        assert_eq!(pq.apply(n("a")), n("b"));
        assert_eq!(pq.apply(n("b")), n("c"));
        assert_eq!(pq.compose(&pq.inverse()), Permutation::identity());
    }

    #[test]
    fn from_pairs_rejects_non_bijections() {
        assert!(Permutation::from_pairs([(n("a"), n("b")), (n("c"), n("b"))]).is_none());
        assert!(Permutation::from_pairs([(n("a"), n("b"))]).is_none());
        assert!(Permutation::from_pairs([(n("a"), n("b")), (n("b"), n("a"))]).is_some());
    }
}
