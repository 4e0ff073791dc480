use std::ops::Deref;

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};

/// A finite, non-empty string over Z_q.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn new(alphabet: Alphabet, symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::Empty);
        }
        alphabet.validate(&symbols)?;
        Ok(Self(symbols))
    }

    /// Wraps symbols that the caller has already validated.
    pub(crate) fn from_vec(symbols: Vec<Symbol>) -> Self {
        debug_assert!(!symbols.is_empty());
        Self(symbols)
    }

    /// The constant word `s^len`.
    pub fn constant(alphabet: Alphabet, s: Symbol, len: usize) -> Result<Self> {
        Self::new(alphabet, vec![s; len])
    }

    pub fn as_slice(&self) -> &[Symbol] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<Symbol> {
        self.0
    }

    pub fn weight(&self, alphabet: Alphabet) -> Symbol {
        weight(alphabet, &self.0)
    }

    pub fn translate(&self, alphabet: Alphabet, lambda: Symbol) -> Word {
        Word(translate(alphabet, &self.0, lambda))
    }

    /// The `q` words that share this word's successors: every choice of first symbol.
    pub fn conjugates(&self, alphabet: Alphabet) -> Vec<Word> {
        alphabet
            .symbols()
            .map(|s| {
                let mut w = self.0.clone();
                w[0] = s;
                Word(w)
            })
            .collect()
    }

    /// The `q` successors of this word in the De Bruijn digraph.
    pub fn successors(&self, alphabet: Alphabet) -> Vec<Word> {
        alphabet
            .symbols()
            .map(|s| {
                let mut w = self.0[1..].to_vec();
                w.push(s);
                Word(w)
            })
            .collect()
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl AsRef<[Symbol]> for Word {
    fn as_ref(&self) -> &[Symbol] {
        &self.0
    }
}

/// Sum of all symbols in Z_q.
pub fn weight(alphabet: Alphabet, symbols: &[Symbol]) -> Symbol {
    let q = u64::from(alphabet.size());
    (symbols.iter().map(|&s| u64::from(s)).sum::<u64>() % q) as Symbol
}

/// Componentwise addition of `lambda`.
pub fn translate(alphabet: Alphabet, symbols: &[Symbol], lambda: Symbol) -> Vec<Symbol> {
    symbols.iter().map(|&s| alphabet.add(s, lambda)).collect()
}
