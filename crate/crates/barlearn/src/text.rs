//! Text formats: bar strings, ultimately periodic words, trees, data
//! inputs and automaton files.
//!
//! Words are whitespace-separated tokens (`a` plain, `|a` bar); an
//! ultimately periodic word is `u ; v` with a possibly-empty stem and a
//! nonempty period; trees use term syntax `|a.f(t1, t2)` with arity-0
//! symbols written `a.c`. Automaton files are line-based with
//! `key: value` sections; see the parsers below for the exact shapes.

use std::collections::BTreeSet;
use std::fmt;

use crate::automata::{BarAlphabet, BarNfa, BarNftaBottomUp, TreeRule};
use crate::data::DataTree;
use crate::names::{Name, Symbol};
use crate::trees::{BarTree, Signature};
use crate::words::{BarString, Letter, UltPeriodicWord};

/// A parse error with 1-based position information.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("parse error at line {line}, column {col}: {msg}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub msg: String,
}

impl ParseError {
    fn new(line: usize, col: usize, msg: impl Into<String>) -> Self {
        ParseError {
            line,
            col,
            msg: msg.into(),
        }
    }
}

fn is_ident(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

// Column of a token within a line, 1-based; for error reporting.
fn col_of(line: &str, token: &str) -> usize {
    line.find(token).map_or(1, |i| i + 1)
}

/// Parses one letter token: `name` or `|name`.
pub fn parse_letter(token: &str) -> Option<Letter> {
    if let Some(rest) = token.strip_prefix('|') {
        is_ident(rest).then(|| Letter::Bar(Name::new(rest)))
    } else {
        is_ident(token).then(|| Letter::Plain(Name::new(token)))
    }
}

/// Whitespace-separated letters; the empty string is the empty word.
pub fn parse_bar_string(input: &str) -> Result<BarString, ParseError> {
    let mut letters = Vec::new();
    for token in input.split_whitespace() {
        let letter = parse_letter(token).ok_or_else(|| {
            ParseError::new(1, col_of(input, token), format!("invalid letter token `{token}`"))
        })?;
        letters.push(letter);
    }
    Ok(BarString::new(letters))
}

/// `u ; v` with nonempty `v`.
pub fn parse_up_word(input: &str) -> Result<UltPeriodicWord, ParseError> {
    let parts: Vec<&str> = input.split(';').collect();
    if parts.len() != 2 {
        return Err(ParseError::new(
            1,
            1,
            "an ultimately periodic word is written `stem ; period` with exactly one `;`",
        ));
    }
    let stem = parse_bar_string(parts[0])?;
    let period = parse_bar_string(parts[1])?;
    UltPeriodicWord::new(stem, period)
        .ok_or_else(|| ParseError::new(1, col_of(input, ";") + 1, "the period must be nonempty"))
}

struct TreeParser<'a> {
    input: &'a str,
    pos: usize,
}

impl<'a> TreeParser<'a> {
    fn error(&self, msg: impl Into<String>) -> ParseError {
        ParseError::new(1, self.pos + 1, msg)
    }

    fn skip_ws(&mut self) {
        while self.input[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.input[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(format!("expected `{c}`")))
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.input[self.pos..].chars().next()
    }

    fn ident(&mut self) -> Result<&'a str, ParseError> {
        self.skip_ws();
        let rest = &self.input[self.pos..];
        let end = rest
            .char_indices()
            .take_while(|&(i, c)| {
                if i == 0 {
                    c.is_ascii_alphabetic()
                } else {
                    c.is_ascii_alphanumeric() || c == '_'
                }
            })
            .count();
        if end == 0 {
            return Err(self.error("expected an identifier"));
        }
        let ident = &rest[..end];
        self.pos += end;
        Ok(ident)
    }

    fn tree(&mut self) -> Result<BarTree, ParseError> {
        let barred = self.peek() == Some('|');
        if barred {
            self.eat('|')?;
        }
        let name = Name::new(self.ident()?);
        let letter = if barred {
            Letter::Bar(name)
        } else {
            Letter::Plain(name)
        };
        self.eat('.')?;
        let symbol = Symbol::new(self.ident()?);
        let mut children = Vec::new();
        if self.peek() == Some('(') {
            self.eat('(')?;
            loop {
                children.push(self.tree()?);
                match self.peek() {
                    Some(',') => self.eat(',')?,
                    Some(')') => {
                        self.eat(')')?;
                        break;
                    }
                    _ => return Err(self.error("expected `,` or `)`")),
                }
            }
        }
        Ok(BarTree::new(letter, symbol, children))
    }
}

/// Term syntax: `|a.f(t1, t2)`, `a.c`. The symbols must use consistent
/// arities.
pub fn parse_tree(input: &str) -> Result<BarTree, ParseError> {
    let mut p = TreeParser { input, pos: 0 };
    let t = p.tree()?;
    p.skip_ws();
    if p.pos != input.len() {
        return Err(p.error("trailing input after the tree"));
    }
    t.infer_signature()
        .ok_or_else(|| ParseError::new(1, 1, "a symbol is used with two different arities"))?;
    Ok(t)
}

/// Whitespace-separated plain names (a data word).
pub fn parse_data_word(input: &str) -> Result<Vec<Name>, ParseError> {
    let w = parse_bar_string(input)?;
    if let Some(l) = w.iter().find(|l| l.is_bar()) {
        return Err(ParseError::new(
            1,
            1,
            format!("data words contain plain names only, found `{l}`"),
        ));
    }
    Ok(w.iter().map(|l| l.name()).collect())
}

/// A data tree: term syntax with plain letters only.
pub fn parse_data_tree(input: &str) -> Result<DataTree, ParseError> {
    fn convert(t: &BarTree) -> Result<DataTree, ParseError> {
        match t.letter {
            Letter::Bar(a) => Err(ParseError::new(
                1,
                1,
                format!("data trees contain plain names only, found `|{a}`"),
            )),
            Letter::Plain(a) => Ok(DataTree {
                name: a,
                symbol: t.symbol,
                children: t
                    .children
                    .iter()
                    .map(convert)
                    .collect::<Result<_, _>>()?,
            }),
        }
    }
    convert(&parse_tree(input)?)
}

/// A whitespace-separated list of letters, e.g. for `--target`.
pub fn parse_letter_list(input: &str) -> Result<BarAlphabet, ParseError> {
    Ok(BarAlphabet::new(
        parse_bar_string(input)?.letters().iter().copied(),
    ))
}

/// Input kinds the CLI can auto-detect: `;` marks an ultimately periodic
/// word and `.` marks a tree, neither of which can occur in plain words.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum InputKind {
    Word,
    UpWord,
    Tree,
}

pub fn detect_kind(input: &str) -> InputKind {
    if input.contains(';') {
        InputKind::UpWord
    } else if input.contains('.') {
        InputKind::Tree
    } else {
        InputKind::Word
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnyInput {
    Word(BarString),
    UpWord(UltPeriodicWord),
    Tree(BarTree),
}

pub fn parse_input(input: &str) -> Result<AnyInput, ParseError> {
    match detect_kind(input) {
        InputKind::Word => Ok(AnyInput::Word(parse_bar_string(input)?)),
        InputKind::UpWord => Ok(AnyInput::UpWord(parse_up_word(input)?)),
        InputKind::Tree => Ok(AnyInput::Tree(parse_tree(input)?)),
    }
}

impl fmt::Display for AnyInput {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyInput::Word(w) => write!(f, "{w}"),
            AnyInput::UpWord(x) => write!(f, "{x}"),
            AnyInput::Tree(t) => write!(f, "{t}"),
        }
    }
}

// Line-based automaton file scaffolding shared by the word and tree
// parsers.
struct Sections<'a> {
    alphabet: Option<(usize, &'a str)>,
    signature: Option<(usize, &'a str)>,
    states: Option<(usize, &'a str)>,
    initial: Option<(usize, &'a str)>,
    finals: Option<(usize, &'a str)>,
    trans: Vec<(usize, &'a str)>,
}

fn split_sections(input: &str) -> Result<Sections<'_>, ParseError> {
    let mut out = Sections {
        alphabet: None,
        signature: None,
        states: None,
        initial: None,
        finals: None,
        trans: Vec::new(),
    };
    for (i, raw) in input.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, rest)) = line.split_once(':') else {
            return Err(ParseError::new(lineno, 1, "expected `key: ...`"));
        };
        let slot = match key.trim() {
            "alphabet" => &mut out.alphabet,
            "signature" => &mut out.signature,
            "states" => &mut out.states,
            "initial" => &mut out.initial,
            "final" => &mut out.finals,
            "trans" => {
                out.trans.push((lineno, rest));
                continue;
            }
            other => {
                return Err(ParseError::new(
                    lineno,
                    1,
                    format!("unknown key `{other}`"),
                ))
            }
        };
        if slot.is_some() {
            return Err(ParseError::new(
                lineno,
                1,
                format!("duplicate `{}` line", key.trim()),
            ));
        }
        *slot = Some((lineno, rest));
    }
    Ok(out)
}

fn parse_state_list<'a>(
    lineno: usize,
    line: &'a str,
) -> Result<Vec<&'a str>, ParseError> {
    let mut out = Vec::new();
    for token in line.split_whitespace() {
        if !is_ident(token) {
            return Err(ParseError::new(
                lineno,
                col_of(line, token),
                format!("invalid state name `{token}`"),
            ));
        }
        out.push(token);
    }
    Ok(out)
}

fn parse_alphabet_line(lineno: usize, line: &str) -> Result<BarAlphabet, ParseError> {
    let mut letters = BTreeSet::new();
    for token in line.split_whitespace() {
        let letter = parse_letter(token).ok_or_else(|| {
            ParseError::new(lineno, col_of(line, token), format!("invalid letter `{token}`"))
        })?;
        letters.insert(letter);
    }
    Ok(BarAlphabet::new(letters))
}

/// Parses the word/Büchi automaton file format:
///
/// ```text
/// alphabet: a b |a |b
/// states: q0 q1 q2
/// initial: q0
/// final: q2
/// trans: q0 |a q1
/// ```
///
/// Several initial states are allowed and normalized away with a fresh
/// initial state carrying the union of their outgoing transitions.
pub fn parse_word_automaton(input: &str) -> Result<BarNfa, ParseError> {
    let sections = split_sections(input)?;
    if sections.signature.is_some() {
        return Err(ParseError::new(
            sections.signature.unwrap().0,
            1,
            "`signature` is only valid in tree automaton files",
        ));
    }
    let (aline, alphabet_text) = sections
        .alphabet
        .ok_or_else(|| ParseError::new(1, 1, "missing `alphabet:` line"))?;
    let alphabet = parse_alphabet_line(aline, alphabet_text)?;
    let (sline, states_text) = sections
        .states
        .ok_or_else(|| ParseError::new(1, 1, "missing `states:` line"))?;
    let state_names: Vec<String> = parse_state_list(sline, states_text)?
        .into_iter()
        .map(str::to_owned)
        .collect();
    let lookup = |lineno: usize, line: &str, token: &str| -> Result<usize, ParseError> {
        state_names
            .iter()
            .position(|s| s == token)
            .ok_or_else(|| {
                ParseError::new(lineno, col_of(line, token), format!("unknown state `{token}`"))
            })
    };
    let (iline, initial_text) = sections
        .initial
        .ok_or_else(|| ParseError::new(1, 1, "missing `initial:` line"))?;
    let initial_states: Vec<usize> = parse_state_list(iline, initial_text)?
        .iter()
        .map(|t| lookup(iline, initial_text, t))
        .collect::<Result<_, _>>()?;
    if initial_states.is_empty() {
        return Err(ParseError::new(iline, 1, "at least one initial state required"));
    }
    let mut finals: BTreeSet<usize> = BTreeSet::new();
    if let Some((fline, finals_text)) = sections.finals {
        for token in parse_state_list(fline, finals_text)? {
            finals.insert(lookup(fline, finals_text, token)?);
        }
    }
    let mut transitions: BTreeSet<(usize, Letter, usize)> = BTreeSet::new();
    for (lineno, line) in &sections.trans {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != 3 {
            return Err(ParseError::new(
                *lineno,
                1,
                "a transition is `trans: source letter target`",
            ));
        }
        let from = lookup(*lineno, line, tokens[0])?;
        let letter = parse_letter(tokens[1]).ok_or_else(|| {
            ParseError::new(*lineno, col_of(line, tokens[1]), format!("invalid letter `{}`", tokens[1]))
        })?;
        if !alphabet.contains(&letter) {
            return Err(ParseError::new(
                *lineno,
                col_of(line, tokens[1]),
                format!("letter `{letter}` is not in the alphabet"),
            ));
        }
        let to = lookup(*lineno, line, tokens[2])?;
        transitions.insert((from, letter, to));
    }
    let (state_names, initial, finals, transitions) = if initial_states.len() == 1 {
        (state_names, initial_states[0], finals, transitions)
    } else {
        // Normalize multiple initial states: a fresh state takes the union
        // of their outgoing transitions and their acceptance of the empty
        // word.
        let mut names = state_names;
        let mut fresh_name = "qinit".to_string();
        let mut counter = 0;
        while names.contains(&fresh_name) {
            counter += 1;
            fresh_name = format!("qinit{counter}");
        }
        names.push(fresh_name);
        let fresh = names.len() - 1;
        let mut transitions = transitions;
        let extra: Vec<(usize, Letter, usize)> = initial_states
            .iter()
            .flat_map(|&q| {
                transitions
                    .iter()
                    .filter(move |&&(p, _, _)| p == q)
                    .map(move |&(_, l, t)| (fresh, l, t))
                    .collect::<Vec<_>>()
            })
            .collect();
        transitions.extend(extra);
        let mut finals = finals;
        if initial_states.iter().any(|q| finals.contains(q)) {
            finals.insert(fresh);
        }
        (names, fresh, finals, transitions)
    };
    BarNfa::new(state_names, alphabet, initial, finals, transitions)
        .map_err(|e| ParseError::new(1, 1, e.to_string()))
}

/// Canonical printer for the word/Büchi automaton format.
pub fn print_word_automaton(a: &BarNfa) -> String {
    let mut out = String::new();
    out.push_str("alphabet:");
    for l in a.alphabet().iter() {
        out.push_str(&format!(" {l}"));
    }
    out.push('\n');
    out.push_str("states:");
    for s in a.state_names() {
        out.push_str(&format!(" {s}"));
    }
    out.push('\n');
    out.push_str(&format!("initial: {}\n", a.state_names()[a.initial()]));
    out.push_str("final:");
    for &q in a.finals() {
        out.push_str(&format!(" {}", a.state_names()[q]));
    }
    out.push('\n');
    for (p, l, q) in a.transitions() {
        out.push_str(&format!(
            "trans: {} {} {}\n",
            a.state_names()[p],
            l,
            a.state_names()[q]
        ));
    }
    out
}

/// Parses the tree automaton file format (bottom-up):
///
/// ```text
/// alphabet: a |a
/// signature: f/2 c/0
/// states: q0 q1
/// final: q1
/// trans: c a -> q0
/// trans: f |a q0 q0 -> q1
/// ```
pub fn parse_tree_automaton(input: &str) -> Result<BarNftaBottomUp, ParseError> {
    let sections = split_sections(input)?;
    if let Some((lineno, _)) = sections.initial {
        return Err(ParseError::new(
            lineno,
            1,
            "tree automaton files are bottom-up and have no `initial` line",
        ));
    }
    let (aline, alphabet_text) = sections
        .alphabet
        .ok_or_else(|| ParseError::new(1, 1, "missing `alphabet:` line"))?;
    let alphabet = parse_alphabet_line(aline, alphabet_text)?;
    let (gline, sig_text) = sections
        .signature
        .ok_or_else(|| ParseError::new(1, 1, "missing `signature:` line"))?;
    let mut symbols = Vec::new();
    for token in sig_text.split_whitespace() {
        let Some((name, arity)) = token.split_once('/') else {
            return Err(ParseError::new(
                gline,
                col_of(sig_text, token),
                format!("signature entries are `symbol/arity`, got `{token}`"),
            ));
        };
        if !is_ident(name) {
            return Err(ParseError::new(
                gline,
                col_of(sig_text, token),
                format!("invalid symbol name `{name}`"),
            ));
        }
        let arity: usize = arity.parse().map_err(|_| {
            ParseError::new(
                gline,
                col_of(sig_text, token),
                format!("invalid arity `{arity}`"),
            )
        })?;
        symbols.push((Symbol::new(name), arity));
    }
    let signature = Signature::new(symbols);
    let (sline, states_text) = sections
        .states
        .ok_or_else(|| ParseError::new(1, 1, "missing `states:` line"))?;
    let state_names: Vec<String> = parse_state_list(sline, states_text)?
        .into_iter()
        .map(str::to_owned)
        .collect();
    let lookup = |lineno: usize, line: &str, token: &str| -> Result<usize, ParseError> {
        state_names
            .iter()
            .position(|s| s == token)
            .ok_or_else(|| {
                ParseError::new(lineno, col_of(line, token), format!("unknown state `{token}`"))
            })
    };
    let mut finals: BTreeSet<usize> = BTreeSet::new();
    if let Some((fline, finals_text)) = sections.finals {
        for token in parse_state_list(fline, finals_text)? {
            finals.insert(lookup(fline, finals_text, token)?);
        }
    }
    let mut rules: BTreeSet<TreeRule> = BTreeSet::new();
    for (lineno, line) in &sections.trans {
        let Some((lhs, rhs)) = line.split_once("->") else {
            return Err(ParseError::new(
                *lineno,
                1,
                "a tree rule is `trans: symbol letter children... -> result`",
            ));
        };
        let lhs_tokens: Vec<&str> = lhs.split_whitespace().collect();
        if lhs_tokens.len() < 2 {
            return Err(ParseError::new(
                *lineno,
                1,
                "a tree rule needs at least a symbol and a letter",
            ));
        }
        let symbol = Symbol::new(lhs_tokens[0]);
        let arity = signature.arity(symbol).ok_or_else(|| {
            ParseError::new(
                *lineno,
                col_of(line, lhs_tokens[0]),
                format!("symbol `{}` is not in the signature", lhs_tokens[0]),
            )
        })?;
        let letter = parse_letter(lhs_tokens[1]).ok_or_else(|| {
            ParseError::new(
                *lineno,
                col_of(line, lhs_tokens[1]),
                format!("invalid letter `{}`", lhs_tokens[1]),
            )
        })?;
        if !alphabet.contains(&letter) {
            return Err(ParseError::new(
                *lineno,
                col_of(line, lhs_tokens[1]),
                format!("letter `{letter}` is not in the alphabet"),
            ));
        }
        let children: Vec<usize> = lhs_tokens[2..]
            .iter()
            .map(|t| lookup(*lineno, line, t))
            .collect::<Result<_, _>>()?;
        if children.len() != arity {
            return Err(ParseError::new(
                *lineno,
                1,
                format!(
                    "symbol `{symbol}` has arity {arity}, rule lists {} children",
                    children.len()
                ),
            ));
        }
        let rhs_tokens: Vec<&str> = rhs.split_whitespace().collect();
        if rhs_tokens.len() != 1 {
            return Err(ParseError::new(
                *lineno,
                1,
                "exactly one result state expected after `->`",
            ));
        }
        let result = lookup(*lineno, line, rhs_tokens[0])?;
        rules.insert(TreeRule {
            symbol,
            letter,
            children,
            result,
        });
    }
    BarNftaBottomUp::new(state_names, alphabet, signature, finals, rules)
        .map_err(|e| ParseError::new(1, 1, e.to_string()))
}

/// Canonical printer for the tree automaton format.
pub fn print_tree_automaton(a: &BarNftaBottomUp) -> String {
    let mut out = String::new();
    out.push_str("alphabet:");
    for l in a.alphabet().iter() {
        out.push_str(&format!(" {l}"));
    }
    out.push('\n');
    out.push_str(&format!("signature: {}\n", a.signature()));
    out.push_str("states:");
    for s in a.state_names() {
        out.push_str(&format!(" {s}"));
    }
    out.push('\n');
    out.push_str("final:");
    for &q in a.finals() {
        out.push_str(&format!(" {}", a.state_names()[q]));
    }
    out.push('\n');
    for r in a.rules() {
        out.push_str(&format!("trans: {} {}", r.symbol, r.letter));
        for &c in &r.children {
            out.push_str(&format!(" {}", a.state_names()[c]));
        }
        out.push_str(&format!(" -> {}\n", a.state_names()[r.result]));
    }
    out
}
