//! Inverse images of sequences and cycles under a property-(D) kernel.

use crate::alphabet::{Alphabet, Symbol};
use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::homo::kernel::Kernel;
use crate::word::Word;

/// Solves `d(z_i, ..., z_{i+k}) = base_i` for each next symbol, starting from `seed`.
///
/// Returns `seed` followed by `base.len()` solved symbols.
pub fn lift_sequence(kernel: &Kernel, base: &[Symbol], seed: &[Symbol]) -> Result<Word> {
    let alphabet = kernel.alphabet();
    if seed.len() != kernel.k() {
        return Err(Error::BadParameters(format!(
            "seed has length {}, expected k = {}",
            seed.len(),
            kernel.k()
        )));
    }
    alphabet.validate(seed)?;
    alphabet.validate(base)?;
    let mut out = Vec::with_capacity(seed.len() + base.len());
    out.extend_from_slice(seed);
    Lifter::new(kernel)?.extend(&mut out, alphabet.encode(seed), base);
    Ok(Word::from_vec(out))
}

struct Lifter<'a> {
    solver: &'a [Symbol],
    q: usize,
    seeds: usize,
}

impl<'a> Lifter<'a> {
    fn new(kernel: &'a Kernel) -> Result<Self> {
        if !kernel.is_property_d() {
            return Err(Error::NotPropertyD);
        }
        let solver = kernel.solver().ok_or(Error::NotPropertyD)?;
        let q = kernel.alphabet().size_usize();
        Ok(Self { solver, q, seeds: q.pow(kernel.k() as u32) })
    }

    /// Appends the lift of `base` to `out`; `state` encodes the last k symbols.
    /// Returns the final state.
    fn extend(&self, out: &mut Vec<Symbol>, mut state: usize, base: &[Symbol]) -> usize {
        for &target in base {
            let next = self.solver[state * self.q + target as usize];
            out.push(next);
            state = (state * self.q + next as usize) % self.seeds;
        }
        state
    }
}

/// The permutation of `Z_q^k` sending a seed to the last `k` symbols of its
/// lift over one traversal of the base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeedMap {
    alphabet: Alphabet,
    k: usize,
    images: Vec<usize>,
}

impl SeedMap {
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of seeds, `q^k`.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    /// Image of a seed given by its base-q code.
    pub fn image_code(&self, seed: usize) -> usize {
        self.images[seed]
    }

    pub fn image(&self, seed: &[Symbol]) -> Word {
        Word::from_vec(self.alphabet.decode(self.images[self.alphabet.encode(seed)], self.k))
    }

    pub fn is_permutation(&self) -> bool {
        let mut hit = vec![false; self.images.len()];
        self.images.iter().all(|&i| !std::mem::replace(&mut hit[i], true))
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn fixed_points(&self) -> Vec<Word> {
        (0..self.images.len())
            .filter(|&s| self.images[s] == s)
            .map(|s| Word::from_vec(self.alphabet.decode(s, self.k)))
            .collect()
    }

    /// `(seed, image)` pairs in seed order.
    pub fn pairs(&self) -> impl Iterator<Item = (Word, Word)> + '_ {
        self.images.iter().enumerate().map(|(s, &t)| {
            (
                Word::from_vec(self.alphabet.decode(s, self.k)),
                Word::from_vec(self.alphabet.decode(t, self.k)),
            )
        })
    }
}

/// Inverse image of a vertex-disjoint cycle, grouped into closed cycles.
#[derive(Clone, Debug)]
pub struct LiftDecomposition {
    base: Cycle,
    order: usize,
    cycles: Vec<Cycle>,
    orbits: Vec<Vec<usize>>,
    seed_map: SeedMap,
}

impl LiftDecomposition {
    pub fn base(&self) -> &Cycle {
        &self.base
    }

    /// Order of the digraph the base cycle lives in.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Order of the digraph the lifted cycles live in.
    pub fn lifted_order(&self) -> usize {
        self.order + self.seed_map.k
    }

    pub fn cycles(&self) -> &[Cycle] {
        &self.cycles
    }

    pub fn into_cycles(self) -> Vec<Cycle> {
        self.cycles
    }

    /// For each cycle, the seed codes of the paths it is made of, in traversal order.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }

    pub fn seed_map(&self) -> &SeedMap {
        &self.seed_map
    }

    pub fn lengths(&self) -> Vec<usize> {
        self.cycles.iter().map(Cycle::len).collect()
    }
}

fn check_base(kernel: &Kernel, base: &Cycle, order: usize) -> Result<()> {
    if order == 0 {
        return Err(Error::BadParameters("base order must be at least 1".into()));
    }
    kernel.alphabet().validate(base.symbols())?;
    if !kernel.is_property_d() {
        return Err(Error::NotPropertyD);
    }
    if !base.is_vertex_disjoint(kernel.alphabet(), order) {
        return Err(Error::NotVertexDisjoint(order));
    }
    Ok(())
}

/// One lift per seed, each of `base.len()` symbols past its seed, and the seed map.
fn lift_all_seeds(kernel: &Kernel, base: &Cycle) -> Result<(Vec<Vec<Symbol>>, SeedMap)> {
    let lifter = Lifter::new(kernel)?;
    let alphabet = kernel.alphabet();
    let mut bodies = Vec::with_capacity(lifter.seeds);
    let mut images = Vec::with_capacity(lifter.seeds);
    for seed in 0..lifter.seeds {
        let mut path = alphabet.decode(seed, kernel.k());
        path.reserve(base.len());
        images.push(lifter.extend(&mut path, seed, base.symbols()));
        path.truncate(base.len());
        bodies.push(path);
    }
    Ok((bodies, SeedMap { alphabet, k: kernel.k(), images }))
}

/// The induced map on seeds for the base as stored (started at its first symbol).
pub fn seed_map(kernel: &Kernel, base: &Cycle, order: usize) -> Result<SeedMap> {
    check_base(kernel, base, order)?;
    Ok(lift_all_seeds(kernel, base)?.1)
}

/// Lifts `base` from every seed and joins the resulting paths into closed
/// cycles by following seed recurrence. Cycles are listed by their smallest
/// seed, and each cycle starts with the path of that seed.
pub fn lift_cycle_decomposition(kernel: &Kernel, base: &Cycle, order: usize) -> Result<LiftDecomposition> {
    check_base(kernel, base, order)?;
    let (bodies, seed_map) = lift_all_seeds(kernel, base)?;
    let seeds = seed_map.len();
    let mut visited = vec![false; seeds];
    let mut cycles = Vec::new();
    let mut orbits = Vec::new();
    for start in 0..seeds {
        if visited[start] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut symbols = Vec::new();
        let mut seed = start;
        loop {
            if visited[seed] || orbit.len() > seeds {
                // only reachable if the seed map is not a permutation
                return Err(Error::NotPropertyD);
            }
            visited[seed] = true;
            orbit.push(seed);
            symbols.extend_from_slice(&bodies[seed]);
            seed = seed_map.images[seed];
            if seed == start {
                break;
            }
        }
        cycles.push(Cycle::from_vec(symbols));
        orbits.push(orbit);
    }
    Ok(LiftDecomposition { base: base.clone(), order, cycles, orbits, seed_map })
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;

    fn cyc(q: u32, s: &[Symbol]) -> Cycle {
        Cycle::new(Alphabet::new(q).unwrap(), s.to_vec()).unwrap()
    }

    #[test]
    fn lift_sequence_examples() {
        let base = [0, 0, 0, 1, 1, 1, 0, 1];
        let z = lift_sequence(&Kernel::d2(), &base, &[1, 0]).unwrap();
        assert_eq!(z.as_slice(), &[1, 0, 1, 1, 0, 0, 1, 0, 1, 0]);

        let zeros = lift_sequence(&Kernel::lempel(), &[0; 6], &[0]).unwrap();
        assert_eq!(zeros.as_slice(), &[0; 7]);

        let q3 = Alphabet::new(3).unwrap();
        let theta = lift_sequence(&Kernel::linear(q3, 1).unwrap(), &[1, 1, 1], &[0]).unwrap();
        assert_eq!(theta.as_slice(), &[0, 1, 2, 0]);
    }

    #[test]
    fn lift_sequence_rejects_bad_kernels_and_seeds() {
        let trimming = Kernel::trimming(Alphabet::binary(), 2).unwrap();
        assert_eq!(lift_sequence(&trimming, &[0, 1], &[0, 0]), Err(Error::NotPropertyD));
        assert!(matches!(lift_sequence(&Kernel::d2(), &[0, 1], &[0]), Err(Error::BadParameters(_))));
    }

    #[test]
    fn lift_solves_every_window() {
        let a = Alphabet::new(4).unwrap();
        let kernel = Kernel::from_fn(a, 2, |x| a.add(a.add(x[0], a.mul(x[1], x[1])), a.mul(3, x[2]))).unwrap();
        assert!(kernel.is_property_d());
        let base = [3, 1, 0, 2, 2, 1, 0, 0, 3];
        let z = lift_sequence(&kernel, &base, &[2, 1]).unwrap();
        assert_eq!(kernel.apply(&z).unwrap().as_slice(), &base);
    }

    #[test]
    fn d2_decomposition_of_order_three_cycle() {
        let b = cyc(2, &[0, 0, 0, 1, 1, 1, 0, 1]);
        let dec = lift_cycle_decomposition(&Kernel::d2(), &b, 3).unwrap();
        assert_eq!(dec.lengths(), vec![24, 8]);
        assert_eq!(dec.cycles()[1], cyc(2, &[1, 0, 1, 1, 0, 0, 1, 0]));
        assert_eq!(
            Cycle::parse(Alphabet::binary(), "000001000110100111011111").unwrap(),
            dec.cycles()[0]
        );
        assert_eq!(dec.orbits(), &[vec![0, 1, 3], vec![2]]);
        assert_eq!(dec.seed_map().fixed_points(), vec![Word::from_vec(vec![1, 0])]);
        assert_eq!(dec.lifted_order(), 5);
    }

    #[test]
    fn lempel_seed_map_is_identity() {
        let b = cyc(2, &[0, 0, 0, 1, 1, 1, 0, 1]);
        assert!(seed_map(&Kernel::lempel(), &b, 3).unwrap().is_identity());
        let b4 = cyc(2, &[0, 0, 0, 0, 1, 0, 0, 1, 1, 0, 1, 0, 1, 1, 1, 1]);
        assert!(seed_map(&Kernel::lempel(), &b4, 4).unwrap().is_identity());
    }

    #[test]
    fn weight_zero_base_gives_identity_seed_map() {
        let q3 = Alphabet::new(3).unwrap();
        let map = seed_map(&Kernel::linear(q3, 1).unwrap(), &cyc(3, &[1, 2, 0]), 1).unwrap();
        assert!(map.is_identity());
        let dec = lift_cycle_decomposition(&Kernel::linear(q3, 1).unwrap(), &cyc(3, &[1, 2, 0]), 1).unwrap();
        assert_eq!(dec.lengths(), vec![3, 3, 3]);
    }

    #[test]
    fn self_loop_lifts_to_alternating_cycle() {
        for q in [3u32, 4, 5, 7, 9] {
            let a = Alphabet::new(q).unwrap();
            for beta in a.units() {
                let kernel = Kernel::linear(a, beta).unwrap();
                for gamma in a.units() {
                    let dec = lift_cycle_decomposition(&kernel, &cyc(q, &[gamma]), 3).unwrap();
                    assert_eq!(dec.lengths(), vec![q as usize]);
                    let step = a.mul(a.inverse(beta).unwrap(), gamma);
                    let theta: Vec<Symbol> = (0..q as u16).map(|i| a.mul(i, step)).collect();
                    assert_eq!(dec.cycles()[0].symbols(), theta.as_slice());
                }
            }
        }
    }

    #[test]
    fn rejects_non_disjoint_base() {
        let base = cyc(2, &[0, 1, 0, 1]);
        assert_eq!(
            lift_cycle_decomposition(&Kernel::lempel(), &base, 2).unwrap_err(),
            Error::NotVertexDisjoint(2)
        );
        let trimming = Kernel::trimming(Alphabet::binary(), 1).unwrap();
        assert_eq!(
            lift_cycle_decomposition(&trimming, &cyc(2, &[0, 1]), 1).unwrap_err(),
            Error::NotPropertyD
        );
    }

    #[test]
    fn decomposition_windows_are_distinct_and_cover_preimage() {
        let a = Alphabet::new(3).unwrap();
        let kernel = Kernel::from_fn(a, 2, |x| a.add(a.add(a.mul(2, x[0]), a.mul(x[1], x[1])), x[2])).unwrap();
        let base = cyc(3, &[1, 2, 0, 2, 2, 1, 1, 0, 0]);
        let dec = lift_cycle_decomposition(&kernel, &base, 2).unwrap();
        let windows: Vec<Vec<Symbol>> = dec.cycles().iter().flat_map(|c| c.windows(4).collect::<Vec<_>>()).collect();
        assert_eq!(windows.len(), 81);
        assert_eq!(windows.iter().collect::<HashSet<_>>().len(), 81);
        for c in dec.cycles() {
            let image = kernel.apply(&c.window(c.len() + 2, c.len() + 2)).unwrap();
            let image = Cycle::from_vec(image.into_vec());
            assert_eq!(image.len() % base.len(), 0);
            let reps = image.len() / base.len();
            let base_rep = Cycle::from_vec(base.symbols().repeat(reps));
            assert_eq!(image, base_rep);
        }
        assert!(dec.seed_map().is_permutation());
    }
}
