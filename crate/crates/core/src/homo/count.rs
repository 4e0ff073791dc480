//! Counting property-(D) kernels through Latin squares.

use num_bigint::BigUint;

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};

/// Largest alphabet for which Latin squares are counted by search.
pub const MAX_LATIN_ORDER: u32 = 7;

/// Largest table size `q^{k+1}` accepted by [`count_property_d`].
pub const MAX_COUNT_TABLE: u64 = 10_000_000;

/// Number of `q x q` Latin squares.
///
/// Counts reduced squares (first row and column in natural order) by
/// backtracking, then multiplies by `q! (q-1)!`.
pub fn latin_square_count(q: u32) -> Result<u64> {
    if q < 1 {
        return Err(Error::InvalidAlphabet(q));
    }
    if q > MAX_LATIN_ORDER {
        return Err(Error::TooLarge(format!("Latin squares of order {q}")));
    }
    let n = q as usize;
    let reduced = count_reduced(n);
    let fact = |m: u64| (1..=m).product::<u64>();
    Ok(fact(q as u64) * fact(q as u64 - 1) * reduced)
}

fn count_reduced(n: usize) -> u64 {
    if n <= 2 {
        return 1;
    }
    let mut grid = vec![0usize; n * n];
    let mut row_used = vec![0u32; n];
    let mut col_used = vec![0u32; n];
    for j in 0..n {
        grid[j] = j;
        grid[j * n] = j;
        row_used[j] |= 1 << j;
        col_used[j] |= 1 << j;
    }
    row_used[0] = (1 << n) - 1;
    col_used[0] = (1 << n) - 1;
    fill(n, n + 1, &mut grid, &mut row_used, &mut col_used)
}

fn fill(n: usize, cell: usize, grid: &mut [usize], rows: &mut [u32], cols: &mut [u32]) -> u64 {
    if cell == n * n {
        return 1;
    }
    let (r, c) = (cell / n, cell % n);
    if c == 0 {
        return fill(n, cell + 1, grid, rows, cols);
    }
    let mut total = 0;
    let free = !(rows[r] | cols[c]) & ((1 << n) - 1);
    for v in 0..n {
        if free & (1 << v) == 0 {
            continue;
        }
        grid[cell] = v;
        rows[r] |= 1 << v;
        cols[c] |= 1 << v;
        total += fill(n, cell + 1, grid, rows, cols);
        rows[r] &= !(1 << v);
        cols[c] &= !(1 << v);
    }
    total
}

/// Number of kernels of span `k + 1` over `alphabet` with property (D).
///
/// Each of the `q^{k-1}` assignments of the middle variables independently
/// picks a Latin square, so the count is `A_q^{q^{k-1}}`.
pub fn count_property_d(alphabet: Alphabet, k: usize) -> Result<BigUint> {
    if k == 0 {
        return Err(Error::BadParameters("k must be at least 1".into()));
    }
    let q = u64::from(alphabet.size());
    let table = u32::try_from(k + 1)
        .ok()
        .and_then(|e| q.checked_pow(e))
        .filter(|&t| t <= MAX_COUNT_TABLE)
        .ok_or_else(|| Error::TooLarge(format!("q^(k+1) table for q={q}, k={k}")))?;
    latin_power(alphabet, table / (q * q))
}

/// `A_q^exponent`, used to compare count formulas.
pub fn latin_power(alphabet: Alphabet, exponent: u64) -> Result<BigUint> {
    let a = BigUint::from(latin_square_count(alphabet.size())?);
    let exponent = u32::try_from(exponent).map_err(|_| Error::TooLarge(format!("exponent {exponent}")))?;
    Ok(a.pow(exponent))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_latin_counts() {
        let expected = [1u64, 2, 12, 576, 161_280, 812_851_200];
        for (q, &want) in (1..=6).zip(expected.iter()) {
            assert_eq!(latin_square_count(q).unwrap(), want, "q = {q}");
        }
        assert!(matches!(latin_square_count(8), Err(Error::TooLarge(_))));
    }

    #[test]
    fn property_d_counts() {
        let b = Alphabet::binary();
        assert_eq!(count_property_d(b, 1).unwrap(), BigUint::from(2u32));
        assert_eq!(count_property_d(b, 2).unwrap(), BigUint::from(4u32));
        assert_eq!(count_property_d(b, 3).unwrap(), BigUint::from(16u32));
        assert_eq!(count_property_d(Alphabet::new(3).unwrap(), 1).unwrap(), BigUint::from(12u32));
        assert_eq!(count_property_d(Alphabet::new(3).unwrap(), 2).unwrap(), BigUint::from(1728u32));
    }

    #[test]
    fn guard() {
        assert!(matches!(count_property_d(Alphabet::new(11).unwrap(), 6), Err(Error::TooLarge(_))));
        assert!(count_property_d(Alphabet::binary(), 0).is_err());
    }
}
