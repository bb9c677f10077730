//! De Bruijn normal forms and decidable alpha-equivalence.
//!
//! The normal form of a bar string replaces every bar letter and every
//! bound plain occurrence by a numeric binding level, while free names
//! stay as they are. Two bar strings (or bar trees) are alpha-equivalent
//! exactly when their normal forms are syntactically equal, which makes
//! the check linear-time. Ultimately periodic words have no such normal
//! form; their equivalence reduces to a finite prefix comparison.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::names::{fresh_name, Name, Permutation, Symbol};
use crate::words::{apply_perm, BarString, Letter, UltPeriodicWord};
use crate::trees::BarTree;

/// One normal-form position: a free name or a binding level (>= 1).
#[derive(Copy, Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum NfSymbol {
    Free(Name),
    Level(u32),
}

impl fmt::Display for NfSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NfSymbol::Free(a) => write!(f, "{a}"),
            NfSymbol::Level(k) => write!(f, "{k}"),
        }
    }
}

/// The normal form of a bar string: same length, over names and levels.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, PartialOrd, Ord)]
pub struct NfString {
    symbols: Vec<NfSymbol>,
}

impl NfString {
    pub fn symbols(&self) -> &[NfSymbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Free names occurring in the normal form.
    pub fn free_names(&self) -> BTreeSet<Name> {
        self.symbols
            .iter()
            .filter_map(|s| match s {
                NfSymbol::Free(a) => Some(*a),
                NfSymbol::Level(_) => None,
            })
            .collect()
    }

    /// Checks the level discipline: a new level `k` may only appear once
    /// levels `1..k-1` have appeared, and always at a bar position.
    pub fn is_well_formed(&self) -> bool {
        let mut max_level = 0u32;
        for s in &self.symbols {
            if let NfSymbol::Level(k) = *s {
                if k == 0 || k > max_level + 1 {
                    return false;
                }
                if k == max_level + 1 {
                    max_level = k;
                }
            }
        }
        true
    }
}

impl fmt::Display for NfString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for s in &self.symbols {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
            first = false;
        }
        Ok(())
    }
}

/// The normal form of a bar tree: same shape, with normal-form symbols.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct NfTree {
    pub symbol_nf: NfSymbol,
    pub symbol: Symbol,
    pub children: Vec<NfTree>,
}

impl fmt::Display for NfTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.symbol_nf, self.symbol)?;
        if !self.children.is_empty() {
            f.write_str("(")?;
            for (i, c) in self.children.iter().enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{c}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// De Bruijn normal form of a bar string, computed in one left-to-right
/// pass. A bar letter becomes level (bars seen so far) + 1; a plain
/// occurrence becomes the level of the most recent bar on its name, or
/// stays free if there is none.
pub fn nf_string(w: &BarString) -> NfString {
    let mut symbols = Vec::with_capacity(w.len());
    let mut bars = 0u32;
    let mut last_bar_level: HashMap<Name, u32> = HashMap::new();
    for l in w.iter() {
        match *l {
            Letter::Plain(a) => match last_bar_level.get(&a) {
                Some(&k) => symbols.push(NfSymbol::Level(k)),
                None => symbols.push(NfSymbol::Free(a)),
            },
            Letter::Bar(a) => {
                bars += 1;
                last_bar_level.insert(a, bars);
                symbols.push(NfSymbol::Level(bars));
            }
        }
    }
    NfString { symbols }
}

/// De Bruijn normal form of a bar tree. Each node gets the symbol it
/// would get as the last letter of the normal form of its root path, so
/// levels count bars on the path only, not in sibling subtrees.
pub fn nf_tree(t: &BarTree) -> NfTree {
    let mut bindings: HashMap<Name, Vec<u32>> = HashMap::new();
    nf_tree_inner(t, 0, &mut bindings)
}

fn nf_tree_inner(t: &BarTree, bars_on_path: u32, bindings: &mut HashMap<Name, Vec<u32>>) -> NfTree {
    let (symbol_nf, bound_here) = match t.letter {
        Letter::Plain(a) => match bindings.get(&a).and_then(|v| v.last()) {
            Some(&k) => (NfSymbol::Level(k), None),
            None => (NfSymbol::Free(a), None),
        },
        Letter::Bar(a) => {
            let level = bars_on_path + 1;
            bindings.entry(a).or_default().push(level);
            (NfSymbol::Level(level), Some(a))
        }
    };
    let child_bars = bars_on_path + u32::from(t.letter.is_bar());
    let children = t
        .children
        .iter()
        .map(|c| nf_tree_inner(c, child_bars, bindings))
        .collect();
    if let Some(a) = bound_here {
        bindings.get_mut(&a).unwrap().pop();
    }
    NfTree {
        symbol_nf,
        symbol: t.symbol,
        children,
    }
}

/// Alpha-equivalence of finite bar strings via normal-form equality.
pub fn alpha_eq_string(v: &BarString, w: &BarString) -> bool {
    v.len() == w.len() && nf_string(v) == nf_string(w)
}

/// Alpha-equivalence of bar trees via normal-form equality.
pub fn alpha_eq_tree(s: &BarTree, t: &BarTree) -> bool {
    nf_tree(s) == nf_tree(t)
}

/// Alpha-equivalence of ultimately periodic words. After equalizing stem
/// lengths (which does not change the denoted infinite words), the words
/// `u1 v1^w` and `u2 v2^w` are equivalent iff the finite prefixes
/// `u1 v1^(2|v2|)` and `u2 v2^(2|v1|)` are.
pub fn alpha_eq_up(x: &UltPeriodicWord, y: &UltPeriodicWord) -> bool {
    let target = x.stem().len().max(y.stem().len());
    let x = x.with_stem_length(target);
    let y = y.with_stem_length(target);
    let p1 = x.stem().concat(&x.period().repeat(2 * y.period().len()));
    let p2 = y.stem().concat(&y.period().repeat(2 * x.period().len()));
    alpha_eq_string(&p1, &p2)
}

/// Default length bound for [`brute_alpha_eq`].
pub const BRUTE_ALPHA_MAX_LEN: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("brute-force alpha-equivalence limited to length {limit}, got {len}")]
pub struct BruteLenExceeded {
    pub limit: usize,
    pub len: usize,
}

/// Independent test oracle for alpha-equivalence, following the
/// generative definition directly: equal plain heads with equivalent
/// tails, or bar heads whose tails become equivalent after renaming both
/// bound names to one shared fresh name. Exponentially slower than the
/// normal-form route and therefore length-bounded.
pub fn brute_alpha_eq(
    v: &BarString,
    w: &BarString,
    max_len: usize,
) -> Result<bool, BruteLenExceeded> {
    let len = v.len().max(w.len());
    if len > max_len {
        return Err(BruteLenExceeded {
            limit: max_len,
            len,
        });
    }
    Ok(brute_rec(v.letters(), w.letters()))
}

fn brute_rec(v: &[Letter], w: &[Letter]) -> bool {
    match (v.split_first(), w.split_first()) {
        (None, None) => true,
        (Some((&Letter::Plain(a), vt)), Some((&Letter::Plain(b), wt))) => {
            a == b && brute_rec(vt, wt)
        }
        (Some((&Letter::Bar(a), vt)), Some((&Letter::Bar(b), wt))) => {
            let mut avoid: BTreeSet<Name> = vt.iter().map(|l| l.name()).collect();
            avoid.extend(wt.iter().map(|l| l.name()));
            avoid.insert(a);
            avoid.insert(b);
            let c = fresh_name(&avoid);
            let vp = apply_perm(&Permutation::transposition(a, c), &BarString::new(vt.to_vec()));
            let wp = apply_perm(&Permutation::transposition(b, c), &BarString::new(wt.to_vec()));
            brute_rec(vp.letters(), wp.letters())
        }
        _ => false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::free_names;

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

    fn lv(k: u32) -> NfSymbol {
        NfSymbol::Level(k)
    }

    fn fr(s: &str) -> NfSymbol {
        NfSymbol::Free(n(s))
    }

    fn balbab() -> BarString {
        w(&[pl("b"), pl("a"), br("b"), pl("a"), pl("b")])
    }

    fn balcac() -> BarString {
        w(&[pl("b"), pl("a"), br("c"), pl("a"), pl("c")])
    }

    #[test]
    fn nf_of_the_running_example() {
        // |a c |b b |a a  ->  1 c 2 2 3 3
        let v = w(&[br("a"), pl("c"), br("b"), pl("b"), br("a"), pl("a")]);
        let nf = nf_string(&v);
        assert_eq!(
            nf.symbols(),
            &[lv(1), fr("c"), lv(2), lv(2), lv(3), lv(3)]
        );
        assert_eq!(nf.to_string(), "1 c 2 2 3 3");
        // same normal form for |d c |a a |a a
        let v2 = w(&[br("d"), pl("c"), br("a"), pl("a"), br("a"), pl("a")]);
        assert_eq!(nf_string(&v2), nf);
        assert!(nf.is_well_formed());
    }

    #[test]
    fn nf_of_empty_and_of_free_heavy_word() {
        assert!(nf_string(&BarString::empty()).is_empty());
        // b a |b a b -> b a 1 a 1; must equal nf of b a |c a c
        let nf = nf_string(&balbab());
        assert_eq!(nf.symbols(), &[fr("b"), fr("a"), lv(1), fr("a"), lv(1)]);
        assert_eq!(nf_string(&balcac()), nf);
    }

    #[test]
    fn alpha_eq_string_examples() {
        assert!(alpha_eq_string(&balbab(), &balcac()));
        assert!(alpha_eq_string(&balbab(), &balbab()));
        // not equivalent to b a |a a a: the bound name captures the free a
        let bad = w(&[pl("b"), pl("a"), br("a"), pl("a"), pl("a")]);
        assert!(!alpha_eq_string(&balbab(), &bad));
    }

    #[test]
    fn nf_free_names_match_word_free_names() {
        for v in [balbab(), balcac(), w(&[br("a"), pl("a")]), BarString::empty()] {
            assert_eq!(nf_string(&v).free_names(), free_names(&v));
        }
    }

    #[test]
    fn nf_tree_examples() {
        let sym = Symbol::new;
        // a.c -> a.c
        let t = BarTree::leaf(pl("a"), sym("c"));
        assert_eq!(nf_tree(&t).symbol_nf, fr("a"));
        // |a.f(a.c, b.c) -> 1.f(1.c, b.c)
        let t = BarTree::new(
            br("a"),
            sym("f"),
            vec![
                BarTree::leaf(pl("a"), sym("c")),
                BarTree::leaf(pl("b"), sym("c")),
            ],
        );
        let nf = nf_tree(&t);
        assert_eq!(nf.symbol_nf, lv(1));
        assert_eq!(nf.children[0].symbol_nf, lv(1));
        assert_eq!(nf.children[1].symbol_nf, fr("b"));
        // |a.f(|a.g(a.c)) -> 1.f(2.g(2.c)): shadowing resolves to the inner bar
        let inner = BarTree::new(br("a"), sym("g"), vec![BarTree::leaf(pl("a"), sym("c"))]);
        let t = BarTree::new(br("a"), sym("f"), vec![inner]);
        let nf = nf_tree(&t);
        assert_eq!(nf.symbol_nf, lv(1));
        assert_eq!(nf.children[0].symbol_nf, lv(2));
        assert_eq!(nf.children[0].children[0].symbol_nf, lv(2));
    }

    #[test]
    fn sibling_bars_do_not_leak_levels() {
        let sym = Symbol::new;
        // f has two children; a bar in the left child must not shift levels
        // or capture names in the right child.
        let left = BarTree::new(br("a"), sym("g"), vec![BarTree::leaf(pl("a"), sym("c"))]);
        let right = BarTree::leaf(pl("a"), sym("c"));
        let t = BarTree::new(pl("b"), sym("f"), vec![left, right]);
        let nf = nf_tree(&t);
        assert_eq!(nf.children[0].symbol_nf, lv(1));
        assert_eq!(nf.children[1].symbol_nf, fr("a"));
    }

    #[test]
    fn alpha_eq_tree_examples() {
        let sym = Symbol::new;
        let s = BarTree::new(br("a"), sym("f"), vec![BarTree::leaf(pl("a"), sym("c"))]);
        let t = BarTree::new(br("b"), sym("f"), vec![BarTree::leaf(pl("b"), sym("c"))]);
        assert!(alpha_eq_tree(&s, &t));
        assert!(alpha_eq_tree(&s, &s));
        let s2 = BarTree::new(
            br("a"),
            sym("f"),
            vec![
                BarTree::leaf(pl("a"), sym("c")),
                BarTree::leaf(pl("b"), sym("c")),
            ],
        );
        let t2 = BarTree::new(
            br("b"),
            sym("f"),
            vec![
                BarTree::leaf(pl("b"), sym("c")),
                BarTree::leaf(pl("b"), sym("c")),
            ],
        );
        assert!(!alpha_eq_tree(&s2, &t2));
    }

    #[test]
    fn alpha_eq_up_examples() {
        let up = |s: &[Letter], p: &[Letter]| {
            UltPeriodicWord::new(w(s), w(p)).unwrap()
        };
        // (|a a)^w and (|b b)^w
        assert!(alpha_eq_up(&up(&[], &[br("a"), pl("a")]), &up(&[], &[br("b"), pl("b")])));
        // identical unrolling with stems equalized
        assert!(alpha_eq_up(
            &up(&[], &[br("a"), pl("a")]),
            &up(&[br("a"), pl("a")], &[br("a"), pl("a")])
        ));
        // distinct free names
        assert!(!alpha_eq_up(&up(&[], &[pl("a")]), &up(&[], &[pl("b")])));
    }

    #[test]
    fn brute_alpha_eq_matches_examples() {
        assert_eq!(brute_alpha_eq(&balbab(), &balcac(), 10), Ok(true));
        assert_eq!(brute_alpha_eq(&w(&[pl("a")]), &w(&[pl("b")]), 10), Ok(false));
        assert!(brute_alpha_eq(&w(&[pl("a")]).repeat(11), &w(&[pl("a")]).repeat(11), 10).is_err());
    }

    #[test]
    fn brute_alpha_eq_agrees_with_nf_on_short_words() {
        // Exhaustive over {a, |a, b, |b}, lengths <= 3 (the full length-5
        // sweep is in the acceptance suite).
        let letters = [pl("a"), br("a"), pl("b"), br("b")];
        let mut words = vec![BarString::empty()];
        let mut frontier = vec![BarString::empty()];
        for _ in 0..3 {
            let mut next = Vec::new();
            for v in &frontier {
                for &l in &letters {
                    let mut u = v.clone();
                    u.push(l);
                    next.push(u);
                }
            }
            words.extend(next.iter().cloned());
            frontier = next;
        }
        for v in &words {
            for u in &words {
                assert_eq!(
                    alpha_eq_string(v, u),
                    brute_alpha_eq(v, u, 10).unwrap(),
                    "disagreement on {v} vs {u}"
                );
            }
        }
    }
}
