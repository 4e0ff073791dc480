//! The residue ring Z_q that every word and cycle lives in.

use std::fmt;

use crate::error::{Error, Result};

/// A single element of Z_q, stored as its canonical representative in `0..q`.
pub type Symbol = u16;

/// Alphabet of size `q`, i.e. the residues modulo `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet {
    q: u32,
}

impl Alphabet {
    pub const MAX_SIZE: u32 = 1 << 16;

    pub fn new(q: u32) -> Result<Self> {
        if !(2..=Self::MAX_SIZE).contains(&q) {
            return Err(Error::InvalidAlphabet(q));
        }
        Ok(Self { q })
    }

    /// The binary alphabet.
    pub fn binary() -> Self {
        Self { q: 2 }
    }

    #[inline]
    pub fn size(self) -> u32 {
        self.q
    }

    #[inline]
    pub fn size_usize(self) -> usize {
        self.q as usize
    }

    pub fn is_odd(self) -> bool {
        self.q % 2 == 1
    }

    pub fn symbols(self) -> impl Iterator<Item = Symbol> {
        (0..self.q).map(|s| s as Symbol)
    }

    #[inline]
    pub fn contains(self, s: Symbol) -> bool {
        u32::from(s) < self.q
    }

    /// Checks that every symbol lies in `0..q`.
    pub fn validate(self, symbols: &[Symbol]) -> Result<()> {
        match symbols.iter().find(|&&s| !self.contains(s)) {
            Some(&s) => Err(Error::SymbolOutOfRange { symbol: u64::from(s), q: self.q }),
            None => Ok(()),
        }
    }

    /// Converts an arbitrary integer to its residue.
    #[inline]
    pub fn reduce(self, v: i64) -> Symbol {
        v.rem_euclid(i64::from(self.q)) as Symbol
    }

    /// Converts a nonnegative integer that must already be a symbol.
    pub fn symbol(self, v: u64) -> Result<Symbol> {
        if v < u64::from(self.q) {
            Ok(v as Symbol)
        } else {
            Err(Error::SymbolOutOfRange { symbol: v, q: self.q })
        }
    }

    #[inline]
    pub fn add(self, a: Symbol, b: Symbol) -> Symbol {
        ((u32::from(a) + u32::from(b)) % self.q) as Symbol
    }

    #[inline]
    pub fn sub(self, a: Symbol, b: Symbol) -> Symbol {
        ((u32::from(a) + self.q - u32::from(b)) % self.q) as Symbol
    }

    #[inline]
    pub fn neg(self, a: Symbol) -> Symbol {
        ((self.q - u32::from(a)) % self.q) as Symbol
    }

    #[inline]
    pub fn mul(self, a: Symbol, b: Symbol) -> Symbol {
        ((u64::from(a) * u64::from(b)) % u64::from(self.q)) as Symbol
    }

    pub fn is_unit(self, a: Symbol) -> bool {
        gcd(u64::from(a), u64::from(self.q)) == 1
    }

    /// Multiplicative inverse, if `a` is a unit.
    pub fn inverse(self, a: Symbol) -> Option<Symbol> {
        let (g, x, _) = extended_gcd(i64::from(a), i64::from(self.q));
        (g == 1).then(|| self.reduce(x))
    }

    /// Units of Z_q in ascending order.
    pub fn units(self) -> Vec<Symbol> {
        self.symbols().filter(|&s| self.is_unit(s)).collect()
    }

    /// Euler's totient of `q`.
    pub fn totient(self) -> usize {
        self.units().len()
    }

    /// `q^n`, or `None` on overflow.
    pub fn pow(self, n: usize) -> Option<usize> {
        let n = u32::try_from(n).ok()?;
        (self.q as usize).checked_pow(n)
    }

    /// The `m` with `q^m == len`, if any.
    pub fn order_of_length(self, len: usize) -> Option<usize> {
        let mut m = 0;
        let mut acc = 1usize;
        while acc < len {
            acc = acc.checked_mul(self.q as usize)?;
            m += 1;
        }
        (acc == len).then_some(m)
    }

    /// Encodes a word as a base-q integer, first symbol most significant.
    pub fn encode(self, word: &[Symbol]) -> usize {
        word.iter().fold(0usize, |acc, &s| acc * self.q as usize + s as usize)
    }

    /// Inverse of [`Alphabet::encode`] for words of length `len`.
    pub fn decode(self, mut code: usize, len: usize) -> Vec<Symbol> {
        let q = self.q as usize;
        let mut out = vec![0; len];
        for slot in out.iter_mut().rev() {
            *slot = (code % q) as Symbol;
            code /= q;
        }
        out
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.q)
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn extended_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = extended_gcd(b, a.rem_euclid(b));
        (g, y, x - (a.div_euclid(b)) * y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_sizes() {
        assert_eq!(Alphabet::new(1), Err(Error::InvalidAlphabet(1)));
        assert_eq!(Alphabet::new(0), Err(Error::InvalidAlphabet(0)));
        assert!(Alphabet::new(65536).is_ok());
        assert!(Alphabet::new(65537).is_err());
    }

    #[test]
    fn inverses_match_brute_force() {
        for q in 2..40u32 {
            let a = Alphabet::new(q).unwrap();
            for s in a.symbols() {
                let brute = a.symbols().find(|&t| a.mul(s, t) == 1);
                assert_eq!(a.inverse(s), brute, "q={q} s={s}");
                assert_eq!(a.is_unit(s), brute.is_some());
            }
        }
    }

    #[test]
    fn totient_small() {
        let phi: Vec<usize> = (2..=12).map(|q| Alphabet::new(q).unwrap().totient()).collect();
        assert_eq!(phi, vec![1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
    }

    #[test]
    fn order_of_length() {
        let a = Alphabet::new(3).unwrap();
        assert_eq!(a.order_of_length(1), Some(0));
        assert_eq!(a.order_of_length(27), Some(3));
        assert_eq!(a.order_of_length(26), None);
    }

    #[test]
    fn encode_decode() {
        let a = Alphabet::new(5).unwrap();
        for code in 0..125 {
            assert_eq!(a.encode(&a.decode(code, 3)), code);
        }
        assert_eq!(a.decode(7, 2), vec![1, 2]);
    }

    #[test]
    fn negative_reduction() {
        let a = Alphabet::new(7).unwrap();
        assert_eq!(a.reduce(-1), 6);
        assert_eq!(a.reduce(-14), 0);
        assert_eq!(a.sub(2, 5), 4);
        assert_eq!(a.neg(0), 0);
    }
}
