//! Binary span-3 kernel `x1 + x2 + x3`: its unique fixed seed, the
//! decomposition of a lifted De Bruijn cycle into two cycles, and the
//! conjugate-pair join back into one De Bruijn cycle two orders higher.

use std::collections::HashSet;

use crate::alphabet::{Alphabet, Symbol};
use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::homo::{lift_cycle_decomposition, Kernel};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedSeedReport {
    /// Order of the base cycle.
    pub n: usize,
    pub n_mod2: usize,
    /// `a[j]`: sum mod 2 of the base symbols at 1-based positions `== j (mod 3)`.
    pub a: [u8; 3],
    pub seed: Word,
    /// Lengths of the lifted cycles, short one first.
    pub cycle_lengths: Vec<usize>,
}

fn binary_order(b: &Cycle) -> Result<usize> {
    let alphabet = Alphabet::binary();
    alphabet.validate(b.symbols())?;
    let order = alphabet.order_of_length(b.len()).unwrap_or(0);
    if order == 0 || !b.is_de_bruijn(alphabet, order) {
        return Err(Error::NotDeBruijn { q: 2, order });
    }
    Ok(order)
}

/// Predicted fixed seed of the `x1 + x2 + x3` seed map for `b` read from its
/// stored start. The prediction depends on that rotation.
pub fn predicted_seed(b: &Cycle) -> Result<(usize, [u8; 3], Word)> {
    let n = binary_order(b)?;
    let mut a = [0u8; 3];
    for (idx, &bit) in b.symbols().iter().enumerate() {
        a[(idx + 1) % 3] ^= bit as u8;
    }
    let (z1, z2) = if n % 2 == 0 {
        (a[0] ^ a[1], a[1] ^ a[2])
    } else {
        (a[0] ^ a[2], a[1] ^ a[0])
    };
    Ok((n, a, Word::from_vec(vec![z1 as Symbol, z2 as Symbol])))
}

/// Fixed seed together with the lengths of the two lifted cycles.
pub fn fixed_seed(b: &Cycle) -> Result<FixedSeedReport> {
    let (n, a, seed) = predicted_seed(b)?;
    let (short, long) = decompose_with_seed(b, n, &seed)?;
    Ok(FixedSeedReport { n, n_mod2: n % 2, a, seed, cycle_lengths: vec![short.len(), long.len()] })
}

/// The lift of `b` from its fixed seed (length `2^n`) and the single cycle
/// through the other three seeds (length `3 * 2^n`).
pub fn decompose_d2(b: &Cycle) -> Result<(Cycle, Cycle)> {
    let (n, _, seed) = predicted_seed(b)?;
    decompose_with_seed(b, n, &seed)
}

fn decompose_with_seed(b: &Cycle, n: usize, seed: &Word) -> Result<(Cycle, Cycle)> {
    let alphabet = Alphabet::binary();
    let dec = lift_cycle_decomposition(&Kernel::d2(), b, n)?;
    let fixed = alphabet.encode(seed);
    if dec.cycles().len() != 2 || dec.orbits().iter().all(|o| o != &[fixed]) {
        return Err(Error::BadParameters(format!(
            "lift of the base does not split as a fixed seed plus one cycle (lengths {:?})",
            dec.lengths()
        )));
    }
    let mut cycles = dec.into_cycles();
    cycles.sort_by_key(Cycle::len);
    let long = cycles.pop().unwrap();
    let short = cycles.pop().unwrap();
    Ok((short, long))
}

fn window_codes(c: &Cycle, n: usize) -> HashSet<Vec<Symbol>> {
    (0..c.len()).map(|s| start_window(c, s, n)).collect()
}

/// The `n` symbols starting at 0-based position `start`, cyclically.
fn start_window(c: &Cycle, start: usize, n: usize) -> Vec<Symbol> {
    (0..n).map(|t| c.at(start + t + 1)).collect()
}

fn flip_first(w: &[Symbol]) -> Vec<Symbol> {
    let mut v = w.to_vec();
    v[0] ^= 1;
    v
}

/// First window `v` of `short` (by start position) whose conjugate lies on `long`.
pub fn find_cross_join(short: &Cycle, long: &Cycle, n_out: usize) -> Result<(Word, Word)> {
    if n_out == 0 {
        return Err(Error::BadParameters("window length must be at least 1".into()));
    }
    let on_long = window_codes(long, n_out);
    (0..short.len())
        .map(|s| start_window(short, s, n_out))
        .find_map(|v| {
            let conj = flip_first(&v);
            on_long.contains(&conj).then(|| (Word::from_vec(v), Word::from_vec(conj)))
        })
        .ok_or(Error::NoPairFound)
}

/// 0-based index of the last symbol of the first occurrence of `w`.
fn end_of(c: &Cycle, w: &[Symbol]) -> Option<usize> {
    c.index_of(w).ok().map(|i| i.get() - 1)
}

fn check_conjugate(v: &[Symbol], v_conj: &[Symbol]) -> Result<()> {
    if v.is_empty() || v.len() != v_conj.len() || v[0] == v_conj[0] || v[1..] != v_conj[1..] {
        return Err(Error::PairNotConjugate);
    }
    Ok(())
}

/// Swaps the successors of `v` (on `short`) and `v_conj` (on `long`), merging
/// the two cycles into one.
pub fn join(short: &Cycle, long: &Cycle, v: &[Symbol], v_conj: &[Symbol]) -> Result<Cycle> {
    check_conjugate(v, v_conj)?;
    let (Some(es), Some(el)) = (end_of(short, v), end_of(long, v_conj)) else {
        return Err(Error::PairNotSplit);
    };
    if end_of(short, v_conj).is_some() || end_of(long, v).is_some() {
        return Err(Error::PairNotSplit);
    }
    let mut out = Vec::with_capacity(short.len() + long.len());
    out.extend((1..=long.len()).map(|t| long.at(el + 1 + t)));
    out.extend((1..=short.len()).map(|t| short.at(es + 1 + t)));
    Ok(Cycle::from_vec(out))
}

/// Inverse of [`join`]: swaps the successors of `v` and `v_conj` on one cycle,
/// returning the cycle through `v` and the cycle through `v_conj`.
pub fn split(cycle: &Cycle, v: &[Symbol], v_conj: &[Symbol]) -> Result<(Cycle, Cycle)> {
    check_conjugate(v, v_conj)?;
    let (Some(ev), Some(ec)) = (end_of(cycle, v), end_of(cycle, v_conj)) else {
        return Err(Error::PairNotSplit);
    };
    let len = cycle.len();
    let gap = (ec + len - ev) % len;
    let through_conj: Vec<Symbol> = (1..=gap).map(|t| cycle.at(ev + 1 + t)).collect();
    let through_v: Vec<Symbol> = (1..=len - gap).map(|t| cycle.at(ec + 1 + t)).collect();
    if through_conj.is_empty() || through_v.is_empty() {
        return Err(Error::PairNotSplit);
    }
    Ok((Cycle::from_vec(through_v), Cycle::from_vec(through_conj)))
}

/// Decomposes, finds the first cross-join pair and joins: an order-`n + 2`
/// De Bruijn cycle oriented at its all-zero window.
pub fn join_d2(b: &Cycle) -> Result<Cycle> {
    let n = binary_order(b)?;
    let (short, long) = decompose_d2(b)?;
    let (v, v_conj) = find_cross_join(&short, &long, n + 2)?;
    join(&short, &long, &v, &v_conj)?.oriented(n + 2)
}
