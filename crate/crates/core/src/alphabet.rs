//! Alphabets, symbols and blocks.
//!
//! Symbols are indices into an [`Alphabet`]; the alphabet's declaration order
//! is the total order used for every length-lexicographic search.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// Index of a symbol in its alphabet.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(pub u32);

impl Symbol {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Finite sequence of symbols. Ordering is plain lexicographic on symbol
/// indices; use [`length_lex`] where shorter blocks must come first.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Block(pub Vec<Symbol>);

impl Block {
    pub fn empty() -> Self {
        Block(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn concat(&self, other: &Block) -> Block {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Block(v)
    }

    pub fn push(&mut self, s: Symbol) {
        self.0.push(s);
    }

    /// The subblock `[start, end)`.
    pub fn slice(&self, start: usize, end: usize) -> Block {
        Block(self.0[start..end].to_vec())
    }

    pub fn starts_with(&self, prefix: &Block) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn ends_with(&self, suffix: &Block) -> bool {
        self.0.ends_with(&suffix.0)
    }
}

impl From<Vec<Symbol>> for Block {
    fn from(v: Vec<Symbol>) -> Self {
        Block(v)
    }
}

/// Length-lexicographic comparison: shorter first, then lexicographic.
pub fn length_lex(a: &Block, b: &Block) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

/// An ordered, non-empty set of distinct symbol names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    names: Vec<String>,
    index: HashMap<String, Symbol>,
    single_char: bool,
}

/// Rendering of the empty block.
pub const EMPTY_BLOCK: &str = "-";

impl Alphabet {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet is empty".into()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if name.is_empty()
                || name == EMPTY_BLOCK
                || name.contains('.')
                || name.chars().any(char::is_whitespace)
            {
                return Err(Error::InvalidAlphabet(format!("bad symbol name `{name}`")));
            }
            if index.insert(name.clone(), Symbol(i as u32)).is_some() {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol `{name}`")));
            }
        }
        let single_char = names.iter().all(|n| n.chars().count() == 1);
        Ok(Alphabet {
            names,
            index,
            single_char,
        })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = Symbol> + '_ {
        (0..self.names.len()).map(|i| Symbol(i as u32))
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: Symbol) -> &str {
        &self.names[s.index()]
    }

    pub fn symbol(&self, name: &str) -> Result<Symbol> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownSymbol(name.to_string()))
    }

    /// Whether every symbol is a single character, in which case blocks are
    /// written by plain concatenation; otherwise symbols are joined with `.`.
    pub fn is_single_char(&self) -> bool {
        self.single_char
    }

    pub fn render(&self, block: &Block) -> String {
        if block.is_empty() {
            return EMPTY_BLOCK.to_string();
        }
        let sep = if self.single_char { "" } else { "." };
        block
            .0
            .iter()
            .map(|&s| self.name(s))
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn parse_block(&self, text: &str) -> Result<Block> {
        if text == EMPTY_BLOCK || text.is_empty() {
            return Ok(Block::empty());
        }
        if self.single_char {
            text.chars()
                .map(|c| self.symbol(c.encode_utf8(&mut [0u8; 4])))
                .collect::<Result<Vec<_>>>()
                .map(Block)
        } else {
            text.split('.')
                .map(|t| self.symbol(t))
                .collect::<Result<Vec<_>>>()
                .map(Block)
        }
    }

    /// Re-express a block of `other` in this alphabet, matching by name.
    pub fn translate(&self, other: &Alphabet, block: &Block) -> Result<Block> {
        block
            .0
            .iter()
            .map(|&s| self.symbol(other.name(s)))
            .collect::<Result<Vec<_>>>()
            .map(Block)
    }

    /// All blocks of length `n` over the full alphabet, in lexicographic order.
    pub fn all_blocks(&self, n: usize) -> Vec<Block> {
        let mut out = vec![Block::empty()];
        for _ in 0..n {
            let mut next = Vec::with_capacity(out.len() * self.len());
            for b in &out {
                for s in self.symbols() {
                    let mut c = b.clone();
                    c.push(s);
                    next.push(c);
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert!(Alphabet::new(Vec::<String>::new()).is_err());
        assert!(Alphabet::new(["a", "a"]).is_err());
        assert!(Alphabet::new(["a b"]).is_err());
        assert!(Alphabet::new(["-"]).is_err());
    }

    #[test]
    fn render_and_parse() {
        let a = Alphabet::new(["0", "1"]).unwrap();
        let b = a.parse_block("0110").unwrap();
        assert_eq!(b.len(), 4);
        assert_eq!(a.render(&b), "0110");
        assert_eq!(a.render(&Block::empty()), "-");
        let m = Alphabet::new(["(1", ")1"]).unwrap();
        let b = m.parse_block("(1.)1").unwrap();
        assert_eq!(b.0, vec![Symbol(0), Symbol(1)]);
        assert_eq!(m.render(&b), "(1.)1");
        assert!(a.parse_block("012").is_err());
    }

    #[test]
    fn length_lex_puts_short_first() {
        let a = Alphabet::new(["0", "1"]).unwrap();
        let mut v = [a.parse_block("10").unwrap(),
            a.parse_block("1").unwrap(),
            a.parse_block("00").unwrap()];
        v.sort_by(length_lex);
        let r: Vec<_> = v.iter().map(|b| a.render(b)).collect();
        assert_eq!(r, ["1", "00", "10"]);
    }
}
