use std::sync::OnceLock;

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};
use crate::word::Word;

/// Largest dense table a kernel may hold.
pub const MAX_TABLE_LEN: usize = 1 << 24;

/// Where a kernel came from. Metadata only: behaviour is defined by the table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// `alpha*x1 + beta*x2`, with `alpha + beta = 0` and `beta` a unit.
    Linear { alpha: Symbol, beta: Symbol },
    /// Binary `x1 + x2`.
    Lempel,
    /// Binary `x1 + x3`.
    D1,
    /// Binary `x1 + x2 + x3`.
    D2,
    /// `x_{k+1}`: drops the `k` leftmost symbols.
    Trimming,
    /// Affine combination parsed from an expression.
    Expression,
    Custom,
}

/// The window function `d_k : Z_q^{k+1} -> Z_q` inducing a homomorphism
/// `B_{n+k}(q) -> B_n(q)`, stored as a dense truth table.
///
/// Table index of `(x_1, ..., x_{k+1})` is its base-q value with `x_1` most
/// significant.
#[derive(Clone, Debug)]
pub struct Kernel {
    alphabet: Alphabet,
    k: usize,
    table: Vec<Symbol>,
    provenance: Provenance,
    property_d: OnceLock<bool>,
    // solver[prefix * q + target] = the last symbol x with d(prefix, x) = target
    solver: OnceLock<Option<Vec<Symbol>>>,
}

impl PartialEq for Kernel {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.k == other.k && self.table == other.table
    }
}

impl Eq for Kernel {}

impl Kernel {
    pub fn from_table(alphabet: Alphabet, k: usize, table: Vec<Symbol>) -> Result<Self> {
        let expected = table_len(alphabet, k)?;
        if table.len() != expected {
            return Err(Error::BadParameters(format!(
                "kernel table has {} entries, expected q^(k+1) = {expected}",
                table.len()
            )));
        }
        alphabet.validate(&table)?;
        Ok(Self {
            alphabet,
            k,
            table,
            provenance: Provenance::Custom,
            property_d: OnceLock::new(),
            solver: OnceLock::new(),
        })
    }

    /// Tabulates `f` over all `q^{k+1}` argument tuples.
    pub fn from_fn(alphabet: Alphabet, k: usize, mut f: impl FnMut(&[Symbol]) -> Symbol) -> Result<Self> {
        let len = table_len(alphabet, k)?;
        let table = (0..len).map(|code| f(&alphabet.decode(code, k + 1))).collect();
        Self::from_table(alphabet, k, table)
    }

    /// `d(x1, x2) = (q - beta) x1 + beta x2`.
    pub fn linear(alphabet: Alphabet, beta: Symbol) -> Result<Self> {
        if !alphabet.contains(beta) || !alphabet.is_unit(beta) {
            return Err(Error::InvalidBeta { beta, q: alphabet.size() });
        }
        let alpha = alphabet.neg(beta);
        let kernel = Self::from_fn(alphabet, 1, |x| {
            alphabet.add(alphabet.mul(alpha, x[0]), alphabet.mul(beta, x[1]))
        })?;
        Ok(kernel.with_provenance(Provenance::Linear { alpha, beta }))
    }

    /// `sum(coeffs[i] * x_{i+1}) + constant`; the span is `coeffs.len()`.
    pub fn affine(alphabet: Alphabet, coeffs: &[Symbol], constant: Symbol) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::BadParameters("a kernel needs at least two variables".into()));
        }
        alphabet.validate(coeffs)?;
        alphabet.validate(&[constant])?;
        let kernel = Self::from_fn(alphabet, coeffs.len() - 1, |x| {
            x.iter()
                .zip(coeffs)
                .fold(constant, |acc, (&xi, &c)| alphabet.add(acc, alphabet.mul(c, xi)))
        })?;
        let provenance = match kernel.as_linear() {
            Some((alpha, beta)) => Provenance::Linear { alpha, beta },
            None => Provenance::Expression,
        };
        Ok(kernel.with_provenance(provenance))
    }

    /// Lempel's D-morphism kernel.
    pub fn lempel() -> Self {
        Self::linear(Alphabet::binary(), 1).unwrap().with_provenance(Provenance::Lempel)
    }

    pub fn d1() -> Self {
        Self::from_fn(Alphabet::binary(), 2, |x| x[0] ^ x[2])
            .unwrap()
            .with_provenance(Provenance::D1)
    }

    pub fn d2() -> Self {
        Self::from_fn(Alphabet::binary(), 2, |x| x[0] ^ x[1] ^ x[2])
            .unwrap()
            .with_provenance(Provenance::D2)
    }

    pub fn trimming(alphabet: Alphabet, k: usize) -> Result<Self> {
        Ok(Self::from_fn(alphabet, k, |x| x[k])?.with_provenance(Provenance::Trimming))
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Self {
        self.provenance = provenance;
        self
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    /// Order difference between the two digraphs.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of arguments, `k + 1`.
    pub fn span(&self) -> usize {
        self.k + 1
    }

    pub fn table(&self) -> &[Symbol] {
        &self.table
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    #[inline]
    pub fn eval(&self, args: &[Symbol]) -> Symbol {
        debug_assert_eq!(args.len(), self.span());
        self.table[self.alphabet.encode(args)]
    }

    #[inline]
    pub fn eval_code(&self, code: usize) -> Symbol {
        self.table[code]
    }

    /// Sliding-window image of a word of length `n + k`.
    pub fn apply(&self, word: &[Symbol]) -> Result<Word> {
        if word.len() <= self.k {
            return Err(Error::WordTooShort { len: word.len(), span: self.span() });
        }
        self.alphabet.validate(word)?;
        Ok(Word::from_vec(word.windows(self.span()).map(|w| self.eval(w)).collect()))
    }

    /// Whether every slice with `x_2..x_k` fixed is a Latin square in `(x_1, x_{k+1})`.
    pub fn is_property_d(&self) -> bool {
        *self.property_d.get_or_init(|| self.latin_in_every_slice())
    }

    fn latin_in_every_slice(&self) -> bool {
        let q = self.alphabet.size_usize();
        let q_k = q.pow(self.k as u32);
        let middles = q_k / q;
        let mut seen = vec![false; q];
        for m in 0..middles {
            let cell = |x1: usize, last: usize| self.table[x1 * q_k + m * q + last];
            for x1 in 0..q {
                if !is_permutation(&mut seen, (0..q).map(|last| cell(x1, last))) {
                    return false;
                }
            }
            for last in 0..q {
                if !is_permutation(&mut seen, (0..q).map(|x1| cell(x1, last))) {
                    return false;
                }
            }
        }
        true
    }

    /// The inverse over the last variable, present when `d` is bijective in it.
    pub(crate) fn solver(&self) -> Option<&[Symbol]> {
        self.solver
            .get_or_init(|| {
                let q = self.alphabet.size_usize();
                let mut inverse = vec![Symbol::MAX; self.table.len()];
                for (code, &value) in self.table.iter().enumerate() {
                    let slot = &mut inverse[(code / q) * q + value as usize];
                    if *slot != Symbol::MAX {
                        return None;
                    }
                    *slot = (code % q) as Symbol;
                }
                Some(inverse)
            })
            .as_deref()
    }

    /// `(alpha, beta)` when this is a span-2 kernel `alpha*x1 + beta*x2`
    /// with `alpha + beta = 0` and `beta` a unit.
    pub fn as_linear(&self) -> Option<(Symbol, Symbol)> {
        if self.k != 1 {
            return None;
        }
        let a = self.alphabet;
        let alpha = self.eval(&[1, 0]);
        let beta = self.eval(&[0, 1]);
        let matches = a.symbols().all(|x| {
            a.symbols().all(|y| self.eval(&[x, y]) == a.add(a.mul(alpha, x), a.mul(beta, y)))
        });
        (matches && a.add(alpha, beta) == 0 && a.is_unit(beta)).then_some((alpha, beta))
    }
}

fn is_permutation(seen: &mut [bool], mut values: impl Iterator<Item = Symbol>) -> bool {
    seen.iter_mut().for_each(|s| *s = false);
    values.all(|v| !std::mem::replace(&mut seen[v as usize], true))
}

fn table_len(alphabet: Alphabet, k: usize) -> Result<usize> {
    if k == 0 {
        return Err(Error::BadParameters("kernel span minus one (k) must be at least 1".into()));
    }
    alphabet
        .pow(k + 1)
        .filter(|&len| len <= MAX_TABLE_LEN)
        .ok_or_else(|| Error::TooLarge(format!("kernel table q^(k+1) for q={}, k={k}", alphabet.size())))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: u32) -> Alphabet {
        Alphabet::new(n).unwrap()
    }

    #[test]
    fn linear_kernel_examples() {
        let lempel = Kernel::linear(Alphabet::binary(), 1).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                assert_eq!(lempel.eval(&[x, y]), x ^ y);
            }
        }
        let k3 = Kernel::linear(q(3), 2).unwrap();
        assert_eq!(k3.provenance(), Provenance::Linear { alpha: 1, beta: 2 });
        assert_eq!(k3.eval(&[2, 2]), (2 + 4) % 3);
        // Ronse: 4x1 + x2 = x2 - x1 over Z_5
        let ronse = Kernel::linear(q(5), 1).unwrap();
        for x in 0..5u16 {
            for y in 0..5u16 {
                assert_eq!(ronse.eval(&[x, y]), q(5).sub(y, x));
            }
        }
    }

    #[test]
    fn linear_kernel_rejects_non_units() {
        assert_eq!(Kernel::linear(q(6), 2), Err(Error::InvalidBeta { beta: 2, q: 6 }));
        assert_eq!(Kernel::linear(q(3), 0), Err(Error::InvalidBeta { beta: 0, q: 3 }));
        assert!(Kernel::linear(q(6), 5).is_ok());
    }

    #[test]
    fn linear_kernels_are_translation_invariant() {
        for n in 2..9 {
            let a = q(n);
            for beta in a.units() {
                let kernel = Kernel::linear(a, beta).unwrap();
                for code in 0..(n * n) as usize {
                    let w = a.decode(code, 2);
                    for lambda in a.symbols() {
                        let t = crate::word::translate(a, &w, lambda);
                        assert_eq!(kernel.eval(&t), kernel.eval(&w));
                    }
                }
            }
        }
    }

    #[test]
    fn apply_examples() {
        let d1 = Kernel::d1();
        assert_eq!(d1.apply(&[0, 1, 0]).unwrap().as_slice(), &[0]);
        assert_eq!(Kernel::lempel().apply(&[0, 0, 1]).unwrap().as_slice(), &[0, 1]);
        let x1_plus_x2 = Kernel::affine(Alphabet::binary(), &[1, 1, 0], 0).unwrap();
        assert_eq!(x1_plus_x2.apply(&[1, 1, 0]).unwrap().as_slice(), &[0]);
        let zero_preimage: Vec<usize> = (0..8)
            .filter(|&c| x1_plus_x2.eval_code(c) == 0)
            .collect();
        assert_eq!(zero_preimage, vec![0b000, 0b001, 0b110, 0b111]);
        assert_eq!(d1.apply(&[0, 1]), Err(Error::WordTooShort { len: 2, span: 3 }));
    }

    #[test]
    fn d1_preimage_edges_of_zero_zero() {
        // edges (x; y) of B_3 with y the shift of x whose images are (0; 0)
        let d1 = Kernel::d1();
        let mut edges = Vec::new();
        for code in 0..16usize {
            let w = Alphabet::binary().decode(code, 4);
            if d1.apply(&w).unwrap().as_slice() == [0, 0] {
                edges.push((w[..3].to_vec(), w[1..].to_vec()));
            }
        }
        let expected = vec![
            (vec![0, 0, 0], vec![0, 0, 0]),
            (vec![0, 1, 0], vec![1, 0, 1]),
            (vec![1, 0, 1], vec![0, 1, 0]),
            (vec![1, 1, 1], vec![1, 1, 1]),
        ];
        assert_eq!(edges, expected);
    }

    #[test]
    fn property_d_examples() {
        let b = Alphabet::binary();
        assert!(!Kernel::affine(b, &[1, 1, 0], 0).unwrap().is_property_d());
        assert!(Kernel::d1().is_property_d());
        assert!(Kernel::d2().is_property_d());
        for k in 1..4 {
            assert!(!Kernel::trimming(b, k).unwrap().is_property_d());
            assert!(!Kernel::trimming(q(3), k).unwrap().is_property_d());
        }
        assert!(Kernel::lempel().is_property_d());
    }

    #[test]
    fn nonlinear_ternary_kernel_has_property_d() {
        // per x2 = 0, 1, 2: x1 + 2 x2, 2 x1 + x3, x1 + 2 x2 + 2 x3
        let a = q(3);
        let kernel = Kernel::from_fn(a, 2, |x| match x[1] {
            0 => a.add(x[0], a.mul(2, x[1])),
            1 => a.add(a.mul(2, x[0]), x[2]),
            _ => a.add(a.add(x[0], a.mul(2, x[1])), a.mul(2, x[2])),
        })
        .unwrap();
        // the x2 = 0 slice ignores x3, so it is not a Latin square
        assert!(!kernel.is_property_d());

        // the intended slices, each a Latin square in (x1, x3)
        let fixed = Kernel::from_fn(a, 2, |x| match x[1] {
            0 => a.add(x[0], x[2]),
            1 => a.add(a.mul(2, x[0]), x[2]),
            _ => a.add(a.add(x[0], a.mul(2, x[1])), a.mul(2, x[2])),
        })
        .unwrap();
        assert!(fixed.is_property_d());
        assert_eq!(fixed.as_linear(), None);
    }

    #[test]
    fn nonlinear_binary_kernel() {
        let kernel = Kernel::from_fn(Alphabet::binary(), 3, |x| x[0] ^ (x[1] & x[2]) ^ x[3]).unwrap();
        assert!(kernel.is_property_d());
    }

    #[test]
    fn as_linear_recognises_linear_tables() {
        let a = q(7);
        let kernel = Kernel::from_fn(a, 1, |x| a.add(a.mul(4, x[0]), a.mul(3, x[1]))).unwrap();
        assert_eq!(kernel.as_linear(), Some((4, 3)));
        let not_balanced = Kernel::from_fn(a, 1, |x| a.add(x[0], x[1])).unwrap();
        assert_eq!(not_balanced.as_linear(), None);
    }

    #[test]
    fn table_validation() {
        assert!(Kernel::from_table(Alphabet::binary(), 1, vec![0, 1, 1]).is_err());
        assert!(Kernel::from_table(Alphabet::binary(), 1, vec![0, 1, 1, 2]).is_err());
        assert!(Kernel::from_table(Alphabet::binary(), 0, vec![0, 1]).is_err());
        assert!(matches!(Kernel::trimming(q(300), 3), Err(Error::TooLarge(_))));
    }
}
