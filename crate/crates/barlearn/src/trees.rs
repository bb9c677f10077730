//! Bar trees: finite ordered trees whose nodes carry a letter and a
//! signature symbol. A bar letter at a node binds its name in the whole
//! subtree below it.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::names::{Name, Permutation, Symbol};
use crate::words::Letter;

/// A finite map from symbols to arities.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Signature {
    arities: BTreeMap<Symbol, usize>,
}

impl Signature {
    pub fn new<I: IntoIterator<Item = (Symbol, usize)>>(symbols: I) -> Self {
        Signature {
            arities: symbols.into_iter().collect(),
        }
    }

    pub fn arity(&self, f: Symbol) -> Option<usize> {
        self.arities.get(&f).copied()
    }

    pub fn symbols(&self) -> impl Iterator<Item = (Symbol, usize)> + '_ {
        self.arities.iter().map(|(&f, &n)| (f, n))
    }

    pub fn is_empty(&self) -> bool {
        self.arities.is_empty()
    }

    pub fn contains(&self, f: Symbol) -> bool {
        self.arities.contains_key(&f)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (sym, arity) in &self.arities {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{sym}/{arity}")?;
            first = false;
        }
        Ok(())
    }
}

/// A bar tree node: letter, symbol, and exactly arity-many children.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BarTree {
    pub letter: Letter,
    pub symbol: Symbol,
    pub children: Vec<BarTree>,
}

impl BarTree {
    pub fn new(letter: Letter, symbol: Symbol, children: Vec<BarTree>) -> Self {
        BarTree {
            letter,
            symbol,
            children,
        }
    }

    pub fn leaf(letter: Letter, symbol: Symbol) -> Self {
        BarTree::new(letter, symbol, Vec::new())
    }

    pub fn size(&self) -> usize {
        1 + self.children.iter().map(BarTree::size).sum::<usize>()
    }

    /// Depth counted in nodes: a leaf has depth 1.
    pub fn depth(&self) -> usize {
        1 + self.children.iter().map(BarTree::depth).max().unwrap_or(0)
    }

    pub fn names(&self) -> BTreeSet<Name> {
        let mut out = BTreeSet::new();
        self.collect_names(&mut out);
        out
    }

    fn collect_names(&self, out: &mut BTreeSet<Name>) {
        out.insert(self.letter.name());
        for c in &self.children {
            c.collect_names(out);
        }
    }

    pub fn letter_set(&self) -> BTreeSet<Letter> {
        let mut out = BTreeSet::new();
        self.collect_letters(&mut out);
        out
    }

    fn collect_letters(&self, out: &mut BTreeSet<Letter>) {
        out.insert(self.letter);
        for c in &self.children {
            c.collect_letters(out);
        }
    }

    /// Preorder (letter, symbol) sequence; together with the size this is
    /// the tree's position in the witness order.
    pub fn preorder(&self) -> Vec<(Letter, Symbol)> {
        let mut out = Vec::with_capacity(self.size());
        self.collect_preorder(&mut out);
        out
    }

    fn collect_preorder(&self, out: &mut Vec<(Letter, Symbol)>) {
        out.push((self.letter, self.symbol));
        for c in &self.children {
            c.collect_preorder(out);
        }
    }

    /// Derives the signature used by the tree; fails if a symbol occurs
    /// with two different arities.
    pub fn infer_signature(&self) -> Option<Signature> {
        let mut arities = BTreeMap::new();
        self.collect_arities(&mut arities)?;
        Some(Signature { arities })
    }

    fn collect_arities(&self, out: &mut BTreeMap<Symbol, usize>) -> Option<()> {
        match out.get(&self.symbol) {
            Some(&n) if n != self.children.len() => return None,
            None => {
                out.insert(self.symbol, self.children.len());
            }
            _ => {}
        }
        for c in &self.children {
            c.collect_arities(out)?;
        }
        Some(())
    }

    /// True if every node's symbol and arity agree with the signature.
    pub fn conforms_to(&self, sig: &Signature) -> bool {
        sig.arity(self.symbol) == Some(self.children.len())
            && self.children.iter().all(|c| c.conforms_to(sig))
    }
}

// Trees order by size, then by preorder (letter, symbol) sequence.
impl Ord for BarTree {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.size(), self.preorder()).cmp(&(other.size(), other.preorder()))
    }
}

impl PartialOrd for BarTree {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.letter, self.symbol)?;
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

/// Free names of a bar tree: `a.f` contributes `a` plus the children's
/// free names, `|a.f` contributes the children's free names minus `a`.
pub fn free_names_tree(t: &BarTree) -> BTreeSet<Name> {
    let mut below: BTreeSet<Name> = BTreeSet::new();
    for c in &t.children {
        below.extend(free_names_tree(c));
    }
    match t.letter {
        Letter::Plain(a) => {
            below.insert(a);
        }
        Letter::Bar(a) => {
            below.remove(&a);
        }
    }
    below
}

/// Nodewise permutation action.
pub fn apply_perm_tree(p: &Permutation, t: &BarTree) -> BarTree {
    BarTree {
        letter: t.letter.apply_perm(p),
        symbol: t.symbol,
        children: t.children.iter().map(|c| apply_perm_tree(p, c)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(s: &str) -> Name {
        Name::new(s)
    }

    fn sym(s: &str) -> Symbol {
        Symbol::new(s)
    }

    fn pl(s: &str) -> Letter {
        Letter::Plain(n(s))
    }

    fn br(s: &str) -> Letter {
        Letter::Bar(n(s))
    }

    #[test]
    fn free_names_follow_the_recursive_definition() {
        // a.f(b.c) -> {a, b}
        let t = BarTree::new(pl("a"), sym("f"), vec![BarTree::leaf(pl("b"), sym("c"))]);
        assert_eq!(free_names_tree(&t), [n("a"), n("b")].into_iter().collect());
        // |a.f(a.c) -> {}
        let t = BarTree::new(br("a"), sym("f"), vec![BarTree::leaf(pl("a"), sym("c"))]);
        assert_eq!(free_names_tree(&t), BTreeSet::new());
        // a.f(|a.g(a.c)) -> {a}: the root occurrence is free, the inner one bound.
        let inner = BarTree::new(br("a"), sym("g"), vec![BarTree::leaf(pl("a"), sym("c"))]);
        let t = BarTree::new(pl("a"), sym("f"), vec![inner]);
        assert_eq!(free_names_tree(&t), [n("a")].into_iter().collect());
    }

    #[test]
    fn perm_action_renames_every_node() {
        let t = BarTree::new(pl("a"), sym("f"), vec![BarTree::leaf(br("b"), sym("c"))]);
        let p = Permutation::transposition(n("a"), n("b"));
        let expect = BarTree::new(pl("b"), sym("f"), vec![BarTree::leaf(br("a"), sym("c"))]);
        assert_eq!(apply_perm_tree(&p, &t), expect);
    }

    #[test]
    fn tree_order_is_size_then_preorder() {
        let small = BarTree::leaf(pl("b"), sym("c"));
        let big = BarTree::new(pl("a"), sym("f"), vec![BarTree::leaf(pl("a"), sym("c"))]);
        assert!(small < big);
        let other = BarTree::new(pl("a"), sym("f"), vec![BarTree::leaf(br("a"), sym("c"))]);
        assert!(big < other);
    }

    #[test]
    fn signature_inference_rejects_arity_conflicts() {
        let t = BarTree::new(
            pl("a"),
            sym("f"),
            vec![BarTree::leaf(pl("b"), sym("f"))], // f used with arity 1 and 0
        );
        assert!(t.infer_signature().is_none());
        let ok = BarTree::new(pl("a"), sym("f"), vec![BarTree::leaf(pl("b"), sym("c"))]);
        let sig = ok.infer_signature().unwrap();
        assert_eq!(sig.arity(sym("f")), Some(1));
        assert_eq!(sig.arity(sym("c")), Some(0));
        assert!(ok.conforms_to(&sig));
    }
}
