//! Cyclic sequences, their orientation, and 1-based positional indexing.

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};
use crate::render;
use crate::word::{self, Word};

/// 1-based position of a symbol within a cycle's linear representation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Index(usize);

impl Index {
    pub fn new(value: usize) -> Option<Self> {
        (value >= 1).then_some(Self(value))
    }

    pub fn get(self) -> usize {
        self.0
    }
}

impl fmt::Display for Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// How the linear representation of a cycle was chosen.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Orientation {
    /// Arbitrary rotation.
    #[default]
    Free,
    /// The all-zero window of the given length ends at the last position.
    ZeroTerminal { order: usize },
}

/// A word read cyclically.
///
/// Equality and hashing are up to rotation; the stored rotation (and the
/// orientation flag describing it) only matters for positional queries.
#[derive(Clone, Debug)]
pub struct Cycle {
    symbols: Vec<Symbol>,
    orientation: Orientation,
}

impl Cycle {
    pub fn new(alphabet: Alphabet, symbols: Vec<Symbol>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::Empty);
        }
        alphabet.validate(&symbols)?;
        Ok(Self { symbols, orientation: Orientation::Free })
    }

    pub(crate) fn from_vec(symbols: Vec<Symbol>) -> Self {
        debug_assert!(!symbols.is_empty());
        Self { symbols, orientation: Orientation::Free }
    }

    /// Parses a rendered cycle (see [`render::parse_symbols`]).
    pub fn parse(alphabet: Alphabet, text: &str) -> Result<Self> {
        Self::new(alphabet, render::parse_symbols(alphabet, text)?)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    /// Symbol at a 1-based position, wrapping around.
    #[inline]
    pub fn at(&self, position: usize) -> Symbol {
        let len = self.symbols.len();
        self.symbols[(position + len - 1) % len]
    }

    pub fn weight(&self, alphabet: Alphabet) -> Symbol {
        word::weight(alphabet, &self.symbols)
    }

    pub fn translate(&self, alphabet: Alphabet, lambda: Symbol) -> Cycle {
        Cycle::from_vec(word::translate(alphabet, &self.symbols, lambda))
    }

    /// The same cycle started `k` symbols later.
    pub fn rotate_left(&self, k: usize) -> Cycle {
        let mut symbols = self.symbols.clone();
        let len = symbols.len();
        symbols.rotate_left(k % len);
        Cycle::from_vec(symbols)
    }

    /// Lexicographically least rotation.
    pub fn canonical(&self) -> Vec<Symbol> {
        let start = least_rotation(&self.symbols);
        let mut out = self.symbols.clone();
        out.rotate_left(start);
        out
    }

    /// The window of length `len` whose last symbol sits at `end` (1-based, cyclic).
    pub fn window(&self, end: usize, len: usize) -> Vec<Symbol> {
        let l = self.symbols.len();
        (0..len).map(|t| self.symbols[(end + l * len - len + t) % l]).collect()
    }

    /// All cyclic windows of length `n`, the `i`-th one ending at position `i + 1`.
    pub fn windows(&self, n: usize) -> impl Iterator<Item = Vec<Symbol>> + '_ {
        (1..=self.len()).map(move |end| self.window(end, n))
    }

    /// Position of the ending symbol of the first occurrence of `pattern`,
    /// scanning end positions upward from 1 with cyclic wraparound.
    pub fn index_of(&self, pattern: &[Symbol]) -> Result<Index> {
        if pattern.is_empty() {
            return Err(Error::Empty);
        }
        let l = self.symbols.len();
        let n = pattern.len();
        (1..=l)
            .find(|&end| {
                let first = end + l * n - n;
                pattern.iter().enumerate().all(|(t, &s)| self.symbols[(first + t) % l] == s)
            })
            .map(Index)
            .ok_or(Error::NotFound)
    }

    /// True iff no `n`-window is a nonzero translate of another `n`-window.
    pub fn is_primitive(&self, alphabet: Alphabet, n: usize) -> bool {
        let mut by_shape: HashMap<Vec<Symbol>, Vec<Symbol>> = HashMap::new();
        for w in self.windows(n) {
            let shape = word::translate(alphabet, &w, alphabet.neg(w[0]));
            match by_shape.get(&shape) {
                Some(seen) if *seen != w => return false,
                Some(_) => {}
                None => {
                    by_shape.insert(shape, w);
                }
            }
        }
        true
    }

    /// True iff all cyclic `n`-windows are distinct.
    pub fn is_vertex_disjoint(&self, alphabet: Alphabet, n: usize) -> bool {
        distinct_windows(alphabet, &self.symbols, n) == self.symbols.len()
    }

    /// True iff every word of `Z_q^n` occurs exactly once as a cyclic window.
    pub fn is_de_bruijn(&self, alphabet: Alphabet, n: usize) -> bool {
        alphabet.pow(n) == Some(self.len()) && self.is_vertex_disjoint(alphabet, n)
    }

    /// Start position (0-based) of the first cyclic run `s^len`.
    pub fn run_start(&self, s: Symbol, len: usize) -> Option<usize> {
        let l = self.symbols.len();
        if len == 0 {
            return Some(0);
        }
        let mut run = 0;
        for end in 0..l + len - 1 {
            if self.symbols[end % l] != s {
                run = 0;
                continue;
            }
            run += 1;
            if run >= len {
                return Some((end + 1 - len) % l);
            }
        }
        None
    }

    /// Rotates so the all-zero window of length `order` ends at the last position.
    pub fn oriented(&self, order: usize) -> Result<Cycle> {
        let start = self.run_start(0, order).ok_or(Error::NotFound)?;
        let l = self.symbols.len();
        let mut out = self.rotate_left((start + order) % l);
        out.orientation = Orientation::ZeroTerminal { order };
        Ok(out)
    }

    pub fn render(&self, alphabet: Alphabet) -> String {
        render::render(alphabet, &self.symbols)
    }

    pub fn to_word(&self) -> Word {
        Word::from_vec(self.symbols.clone())
    }
}

impl PartialEq for Cycle {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }
}

impl Eq for Cycle {}

impl Hash for Cycle {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

/// Number of distinct cyclic `n`-windows.
pub(crate) fn distinct_windows(alphabet: Alphabet, symbols: &[Symbol], n: usize) -> usize {
    let l = symbols.len();
    let fits = alphabet.pow(n).is_some_and(|p| p <= u64::MAX as usize);
    if fits && n > 0 {
        let q = alphabet.size() as u64;
        let modulus = alphabet.pow(n - 1).unwrap() as u64;
        let mut code = 0u64;
        for t in 0..n {
            code = code * q + u64::from(symbols[(l * n - n + 1 + t) % l]);
        }
        let mut seen = HashSet::with_capacity(l);
        seen.insert(code);
        for end in 2..=l {
            code = (code % modulus) * q + u64::from(symbols[(end - 1) % l]);
            seen.insert(code);
        }
        seen.len()
    } else {
        let c = Cycle::from_vec(symbols.to_vec());
        c.windows(n).collect::<HashSet<_>>().len()
    }
}

/// Start index of the lexicographically least rotation.
fn least_rotation(s: &[Symbol]) -> usize {
    let n = s.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = s[(i + k) % n];
        let b = s[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}
