use std::collections::HashMap;

use crate::alphabet::{Alphabet, Symbol};
use crate::cycle::{Cycle, Index};
use crate::error::{Error, Result};

/// Outcome of an exhaustive window check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub ok: bool,
    pub order: usize,
    pub alphabet: u32,
    pub length: usize,
    /// Words of `Z_q^n` that never occur.
    pub missing_windows: u64,
    /// Window occurrences beyond the first.
    pub duplicate_windows: u64,
    /// End position and content of the first repeated window.
    pub first_violation: Option<(Index, Vec<Symbol>)>,
}

fn cyclic_window(symbols: &[Symbol], start: usize, n: usize) -> Vec<Symbol> {
    (0..n).map(|t| symbols[(start + t) % symbols.len()]).collect()
}

/// Checks that every word of `Z_q^n` is a cyclic window of `symbols` exactly once.
pub fn is_de_bruijn(symbols: &[Symbol], alphabet: Alphabet, n: usize) -> VerificationReport {
    let q = alphabet.size();
    let mut counts: HashMap<Vec<Symbol>, u64> = HashMap::new();
    let mut first_violation = None;
    let mut out_of_range = false;
    for start in 0..symbols.len() {
        let w = cyclic_window(symbols, start, n);
        out_of_range |= w.iter().any(|&s| u32::from(s) >= q);
        let c = counts.entry(w).or_insert(0);
        *c += 1;
        if *c == 2 && first_violation.is_none() {
            let end = (start + n - 1) % symbols.len() + 1;
            first_violation = Some((Index::new(end).unwrap(), cyclic_window(symbols, start, n)));
        }
    }
    let total = (q as u64).checked_pow(n as u32).unwrap_or(u64::MAX);
    let distinct = counts.keys().filter(|w| w.iter().all(|&s| u32::from(s) < q)).count() as u64;
    let duplicate_windows = counts.values().map(|&c| c - 1).sum();
    let missing_windows = total.saturating_sub(distinct);
    let ok = !out_of_range && missing_windows == 0 && duplicate_windows == 0 && symbols.len() as u64 == total;
    VerificationReport {
        ok,
        order: n,
        alphabet: q,
        length: symbols.len(),
        missing_windows,
        duplicate_windows,
        first_violation,
    }
}

/// True iff all cyclic `n`-windows of `symbols` are distinct.
pub fn is_vertex_disjoint(symbols: &[Symbol], n: usize) -> bool {
    let mut seen = std::collections::HashSet::new();
    (0..symbols.len()).all(|s| seen.insert(cyclic_window(symbols, s, n)))
}

/// Largest `q^n` accepted by [`enumerate_de_bruijn`].
pub const MAX_ENUMERATED_VERTICES: usize = 64;

/// Every De Bruijn cycle of order `n`, by Hamiltonian-cycle backtracking from
/// the all-zero vertex. Each is returned once, oriented at `0_n`.
pub fn enumerate_de_bruijn(alphabet: Alphabet, n: usize) -> Result<Vec<Cycle>> {
    let vertices = alphabet
        .pow(n)
        .filter(|&v| v <= MAX_ENUMERATED_VERTICES && n >= 1)
        .ok_or_else(|| Error::TooLarge(format!("B_{n}({alphabet}) has too many vertices to enumerate")))?;
    let q = alphabet.size_usize();
    let mut visited = vec![false; vertices];
    let mut path: Vec<Symbol> = Vec::with_capacity(vertices);
    let mut out = Vec::new();
    visited[0] = true;
    extend(q, vertices, 0, &mut visited, &mut path, &mut |p: &[Symbol]| {
        out.push(Cycle::new(alphabet, p.to_vec()).and_then(|c| c.oriented(n)));
    });
    out.into_iter().collect()
}

fn extend(
    q: usize,
    vertices: usize,
    v: usize,
    visited: &mut [bool],
    path: &mut Vec<Symbol>,
    emit: &mut impl FnMut(&[Symbol]),
) {
    for s in 0..q {
        let u = (v * q + s) % vertices;
        if u == 0 && path.len() + 1 == vertices {
            path.push(s as Symbol);
            emit(path);
            path.pop();
        } else if !visited[u] {
            visited[u] = true;
            path.push(s as Symbol);
            extend(q, vertices, u, visited, path, emit);
            path.pop();
            visited[u] = false;
        }
    }
}
