use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};

/// Largest number of tables [`count_latin_tables`] will visit.
pub const MAX_TABLES: u64 = 1 << 20;

/// All `q^{q^{k+1}}` tables over `Z_q^{k+1}`, for small cases. The index of a
/// tuple is its base-q value with `x1` most significant.
pub fn all_tables(alphabet: Alphabet, k: usize) -> Result<impl Iterator<Item = Vec<Symbol>>> {
    let q = alphabet.size() as u64;
    let len = alphabet.pow(k + 1).ok_or_else(|| Error::TooLarge("table length".into()))?;
    let count = u32::try_from(len)
        .ok()
        .and_then(|l| q.checked_pow(l))
        .filter(|&c| c <= MAX_TABLES)
        .ok_or_else(|| Error::TooLarge(format!("tables for q={q}, k={k}")))?;
    Ok((0..count).map(move |mut code| {
        let mut t = vec![0; len];
        for slot in t.iter_mut() {
            *slot = (code % q) as Symbol;
            code /= q;
        }
        t
    }))
}

/// Pairwise test: changing only `x1`, or only `x_{k+1}`, always changes the value.
pub fn is_latin_table(alphabet: Alphabet, k: usize, table: &[Symbol]) -> bool {
    let q = alphabet.size_usize();
    let top = q.pow(k as u32);
    (0..table.len()).all(|code| {
        let x1 = code / top;
        let last = code % q;
        let first_ok = (x1 + 1..q).all(|y| table[code - x1 * top + y * top] != table[code]);
        let last_ok = (last + 1..q).all(|y| table[code - last + y] != table[code]);
        first_ok && last_ok
    })
}

/// Number of tables passing [`is_latin_table`], by visiting every table.
pub fn count_latin_tables(alphabet: Alphabet, k: usize) -> Result<u64> {
    Ok(all_tables(alphabet, k)?.filter(|t| is_latin_table(alphabet, k, t)).count() as u64)
}

/// Binary tables of the form `x1 + h(x2, ..., xk) + x_{k+1}` over every
/// Boolean function `h` of `k - 1` variables.
pub fn binary_normal_form_tables(k: usize) -> Result<Vec<Vec<Symbol>>> {
    if k == 0 || k > 4 {
        return Err(Error::TooLarge(format!("binary normal forms for k={k}")));
    }
    let middles = 1usize << (k - 1);
    let len = 1usize << (k + 1);
    Ok((0..1u64 << middles)
        .map(|h| {
            (0..len)
                .map(|code| {
                    let x1 = code >> k;
                    let last = code & 1;
                    let middle = (code >> 1) & (middles - 1);
                    (x1 ^ last ^ ((h >> middle) & 1) as usize) as Symbol
                })
                .collect()
        })
        .collect())
}
