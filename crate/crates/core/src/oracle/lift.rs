use std::collections::{HashMap, HashSet};

use crate::alphabet::{Alphabet, Symbol};
use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::homo::{Kernel, LiftDecomposition};

/// Largest digraph (`q^n` vertices) whose simple cycles may be enumerated.
pub const MAX_CYCLE_SEARCH_VERTICES: usize = 1 << 12;

/// Every simple cycle of `B_n(q)` with at most `max_len` vertices, each once.
///
/// A cycle is written as the last symbols of its vertices, starting after its
/// smallest vertex, so that its cyclic `n`-windows are exactly its vertices.
pub fn enumerate_vertex_disjoint_cycles(alphabet: Alphabet, n: usize, max_len: usize) -> Result<Vec<Cycle>> {
    let vertices = alphabet
        .pow(n)
        .filter(|&v| n >= 1 && v <= MAX_CYCLE_SEARCH_VERTICES)
        .ok_or_else(|| Error::TooLarge(format!("B_{n}({alphabet})")))?;
    let q = alphabet.size_usize();
    let mut out = Vec::new();
    let mut on_path = vec![false; vertices];
    let mut path = Vec::new();
    for start in 0..vertices {
        on_path[start] = true;
        search(q, vertices, start, start, max_len, &mut on_path, &mut path, &mut |p| {
            out.push(Cycle::new(alphabet, p.to_vec()));
        });
        on_path[start] = false;
    }
    out.into_iter().collect()
}

#[allow(clippy::too_many_arguments)]
fn search(
    q: usize,
    vertices: usize,
    start: usize,
    v: usize,
    max_len: usize,
    on_path: &mut [bool],
    path: &mut Vec<Symbol>,
    emit: &mut impl FnMut(&[Symbol]),
) {
    for s in 0..q {
        let u = (v * q + s) % vertices;
        if u == start {
            path.push(s as Symbol);
            emit(path);
            path.pop();
        } else if u > start && !on_path[u] && path.len() + 1 < max_len {
            on_path[u] = true;
            path.push(s as Symbol);
            search(q, vertices, start, u, max_len, on_path, path, emit);
            path.pop();
            on_path[u] = false;
        }
    }
}

fn decode(q: usize, mut code: usize, len: usize) -> Vec<Symbol> {
    let mut out = vec![0; len];
    for slot in out.iter_mut().rev() {
        *slot = (code % q) as Symbol;
        code /= q;
    }
    out
}

fn image(kernel: &Kernel, x: &[Symbol]) -> Vec<Symbol> {
    x.windows(kernel.k() + 1).map(|w| kernel.eval(w)).collect()
}

fn base_vertices(base: &[Symbol], n: usize) -> Vec<Vec<Symbol>> {
    (0..base.len()).map(|s| (0..n).map(|t| base[(s + t) % base.len()]).collect()).collect()
}

/// The inverse image of a cycle, found by scanning all of `B_{n+k}(q)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Preimage {
    /// Number of vertices mapping onto a vertex of the base.
    pub vertices: usize,
    /// Closed cycles of the preimage subgraph when every preimage vertex has
    /// exactly one preimage successor; `None` otherwise.
    pub cycles: Option<Vec<Cycle>>,
}

/// Scans every vertex of `B_{n+k}(q)`, keeps those whose image is a vertex of
/// `base`, links each to the successors lying over the next base vertex, and
/// traces the resulting cycles.
pub fn preimage_cycles(kernel: &Kernel, base: &Cycle, n: usize) -> Result<Preimage> {
    let alphabet = kernel.alphabet();
    let q = alphabet.size_usize();
    let big = n + kernel.k();
    let total = alphabet
        .pow(big)
        .filter(|&v| v <= 1 << 22)
        .ok_or_else(|| Error::TooLarge(format!("B_{big}({alphabet})")))?;
    let verts = base_vertices(base.symbols(), n);
    let position: HashMap<&[Symbol], usize> = verts.iter().enumerate().map(|(i, v)| (v.as_slice(), i)).collect();
    if position.len() != verts.len() {
        return Err(Error::NotVertexDisjoint(n));
    }
    // vertex code -> index of the base vertex it lies over
    let mut over: HashMap<usize, usize> = HashMap::new();
    for code in 0..total {
        let x = decode(q, code, big);
        if let Some(&i) = position.get(image(kernel, &x).as_slice()) {
            over.insert(code, i);
        }
    }
    let mut next: HashMap<usize, usize> = HashMap::new();
    for (&code, &i) in &over {
        let want = (i + 1) % verts.len();
        let succ: Vec<usize> = (0..q)
            .map(|s| (code * q + s) % total)
            .filter(|u| over.get(u) == Some(&want))
            .collect();
        if succ.len() != 1 {
            return Ok(Preimage { vertices: over.len(), cycles: None });
        }
        next.insert(code, succ[0]);
    }
    let mut seen = HashSet::new();
    let mut cycles = Vec::new();
    let mut starts: Vec<usize> = over.keys().copied().collect();
    starts.sort_unstable();
    for start in starts {
        if seen.contains(&start) {
            continue;
        }
        let mut symbols = Vec::new();
        let mut v = start;
        loop {
            if !seen.insert(v) {
                // reached a vertex of another cycle: the successor map is not a permutation
                return Ok(Preimage { vertices: over.len(), cycles: None });
            }
            v = next[&v];
            symbols.push((v % q) as Symbol);
            if v == start {
                break;
            }
        }
        cycles.push(Cycle::new(alphabet, symbols)?);
    }
    Ok(Preimage { vertices: over.len(), cycles: Some(cycles) })
}

fn canonical(symbols: &[Symbol]) -> Vec<Symbol> {
    (0..symbols.len())
        .map(|r| symbols[r..].iter().chain(&symbols[..r]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Confirms a decomposition against an independent preimage scan: same
/// cycles up to rotation, vertex-disjoint, and covering `q^k |base|` vertices.
pub fn check_lift_structure(kernel: &Kernel, base: &Cycle, expected: &LiftDecomposition) -> Result<bool> {
    let n = expected.order();
    let pre = preimage_cycles(kernel, base, n)?;
    let Some(found) = pre.cycles else {
        return Ok(false);
    };
    let big = n + kernel.k();
    let covered: usize = expected.cycles().iter().map(Cycle::len).sum();
    let want_total = kernel.alphabet().pow(kernel.k()).unwrap_or(0) * base.len();
    let mut all_windows = HashSet::new();
    for c in expected.cycles() {
        for v in base_vertices(c.symbols(), big) {
            if !all_windows.insert(v) {
                return Ok(false);
            }
        }
    }
    let mut a: Vec<Vec<Symbol>> = found.iter().map(|c| canonical(c.symbols())).collect();
    let mut b: Vec<Vec<Symbol>> = expected.cycles().iter().map(|c| canonical(c.symbols())).collect();
    a.sort();
    b.sort();
    Ok(a == b && covered == want_total && pre.vertices == want_total)
}

/// Brute-force lift criterion: from every prefix of length `k` there is
/// exactly one path of `|base|` vertices of `B_{n+k}(q)` lying over the base
/// read from its stored start, and these `q^k` paths share no vertex.
pub fn lift_criterion(kernel: &Kernel, base: &Cycle, n: usize) -> bool {
    let q = kernel.alphabet().size_usize();
    let k = kernel.k();
    let c = base.symbols();
    let l = c.len();
    // symbol s of a path is constrained by d(z_{s-k}..z_s) = c_{s-k}
    let path_len = n + k + l - 1;
    let mut vertices = HashSet::new();
    let seeds = q.pow(k as u32);
    for seed in 0..seeds {
        let mut z = decode(q, seed, k);
        let mut found = Vec::new();
        paths(kernel, c, path_len, &mut z, &mut found);
        if found.len() != 1 {
            return false;
        }
        let path = &found[0];
        for t in 0..l {
            if !vertices.insert(path[t..t + n + k].to_vec()) {
                return false;
            }
        }
    }
    true
}

/// Collects up to two completions of `z` to length `len`.
fn paths(kernel: &Kernel, c: &[Symbol], len: usize, z: &mut Vec<Symbol>, found: &mut Vec<Vec<Symbol>>) {
    if found.len() > 1 {
        return;
    }
    if z.len() == len {
        found.push(z.clone());
        return;
    }
    let k = kernel.k();
    let target = c[(z.len() - k) % c.len()];
    for s in 0..kernel.alphabet().size() as Symbol {
        z.push(s);
        if kernel.eval(&z[z.len() - k - 1..]) == target {
            paths(kernel, c, len, z, found);
        }
        z.pop();
    }
}
