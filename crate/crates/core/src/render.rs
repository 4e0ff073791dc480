//! Text form of words and cycles.
//!
//! For `q <= 10` a sequence is a plain digit string (`120221100`); for larger
//! alphabets symbols are written in decimal and separated by commas
//! (`10,3,0,12`).

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};

pub fn render(alphabet: Alphabet, symbols: &[Symbol]) -> String {
    if alphabet.size() <= 10 {
        symbols.iter().map(|&s| char::from(b'0' + s as u8)).collect()
    } else {
        let parts: Vec<String> = symbols.iter().map(|s| s.to_string()).collect();
        parts.join(",")
    }
}

/// Parses either rendering. Commas force the decimal form for any `q`;
/// surrounding whitespace is ignored.
pub fn parse_symbols(alphabet: Alphabet, text: &str) -> Result<Vec<Symbol>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Empty);
    }
    let raw: Vec<u64> = if text.contains(',') || alphabet.size() > 10 {
        text.split(',')
            .map(|part| {
                let part = part.trim();
                part.parse::<u64>().map_err(|_| Error::Parse(format!("bad symbol {part:?}")))
            })
            .collect::<Result<_>>()?
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(u64::from)
                    .ok_or_else(|| Error::Parse(format!("bad digit {c:?}")))
            })
            .collect::<Result<_>>()?
    };
    raw.into_iter().map(|v| alphabet.symbol(v)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn digit_strings() {
        let a = Alphabet::new(3).unwrap();
        assert_eq!(render(a, &[1, 2, 0, 2, 2, 1, 1, 0, 0]), "120221100");
        assert_eq!(parse_symbols(a, " 120221100\n").unwrap(), vec![1, 2, 0, 2, 2, 1, 1, 0, 0]);
        assert_eq!(parse_symbols(a, "1,2,0").unwrap(), vec![1, 2, 0]);
    }

    #[test]
    fn large_alphabets_use_commas() {
        let a = Alphabet::new(11).unwrap();
        assert_eq!(render(a, &[10, 3, 0]), "10,3,0");
        assert_eq!(parse_symbols(a, "10,3,0").unwrap(), vec![10, 3, 0]);
        assert_eq!(parse_symbols(a, "7").unwrap(), vec![7]);
    }

    #[test]
    fn rejects_out_of_range() {
        let a = Alphabet::new(3).unwrap();
        assert!(matches!(parse_symbols(a, "1203"), Err(Error::SymbolOutOfRange { symbol: 3, q: 3 })));
        assert!(matches!(parse_symbols(a, "12x"), Err(Error::Parse(_))));
        assert_eq!(parse_symbols(a, "  "), Err(Error::Empty));
    }
}
