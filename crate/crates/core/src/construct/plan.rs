use std::fmt;

use crate::alphabet::{Alphabet, Symbol};
use crate::cycle::Cycle;
use crate::error::{Error, Result};

/// Join variant `(i; lambda)`: start at lifted cycle `C_i`, step between
/// cycles by `lambda`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct JoinType {
    pub i: Symbol,
    pub lambda: Symbol,
}

impl JoinType {
    pub fn new(alphabet: Alphabet, i: Symbol, lambda: Symbol) -> Result<Self> {
        alphabet.validate(&[i])?;
        check_lambda(alphabet, lambda)?;
        Ok(Self { i, lambda })
    }
}

pub(crate) fn check_lambda(alphabet: Alphabet, lambda: Symbol) -> Result<()> {
    if alphabet.contains(lambda) && alphabet.is_unit(lambda) {
        Ok(())
    } else {
        Err(Error::BadLambda { lambda, q: alphabet.size() })
    }
}

pub(crate) fn check_beta(alphabet: Alphabet, beta: Symbol) -> Result<()> {
    if alphabet.contains(beta) && alphabet.is_unit(beta) {
        Ok(())
    } else {
        Err(Error::InvalidBeta { beta, q: alphabet.size() })
    }
}

/// The order-1 cycle `[1, 2, ..., q-1, 0]` used as the starting point for odd `q`.
pub fn base_cycle(alphabet: Alphabet) -> Result<Cycle> {
    if !alphabet.is_odd() {
        return Err(Error::EvenAlphabetNeedsBase(alphabet.size()));
    }
    let q = alphabet.size();
    let symbols = (1..q).chain(std::iter::once(0)).map(|s| s as Symbol).collect();
    Cycle::from_vec(symbols).oriented(1)
}

/// Parameters steering the recursive construction.
///
/// Level `j` (producing order `j` from order `j - 1`) uses `betas[t]`,
/// `lambdas[t]` and `starts[t]` with `t = j - base_order - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionPlan {
    alphabet: Alphabet,
    n: usize,
    betas: Vec<Symbol>,
    lambdas: Vec<Symbol>,
    starts: Vec<Symbol>,
    base: Option<Cycle>,
    base_order: usize,
}

impl ConstructionPlan {
    /// A plan over the built-in base `[1, 2, ..., q-1, 0]`; needs odd `q` and
    /// lists of length `n - 1`.
    pub fn new(alphabet: Alphabet, n: usize, betas: Vec<Symbol>, lambdas: Vec<Symbol>, starts: Vec<Symbol>) -> Result<Self> {
        if !alphabet.is_odd() {
            return Err(Error::EvenAlphabetNeedsBase(alphabet.size()));
        }
        Self::build(alphabet, n, betas, lambdas, starts, None, 1)
    }

    /// A plan over a caller-supplied De Bruijn cycle of order `m`; the lists
    /// have length `n - m`.
    pub fn with_base(
        alphabet: Alphabet,
        base: Cycle,
        n: usize,
        betas: Vec<Symbol>,
        lambdas: Vec<Symbol>,
        starts: Vec<Symbol>,
    ) -> Result<Self> {
        alphabet.validate(base.symbols())?;
        let order = alphabet
            .order_of_length(base.len())
            .filter(|&m| m >= 1 && base.is_de_bruijn(alphabet, m))
            .ok_or(Error::NotDeBruijn { q: alphabet.size(), order: alphabet.order_of_length(base.len()).unwrap_or(0) })?;
        if base.weight(alphabet) != 0 {
            return Err(Error::BadParameters("base cycle must have weight 0".into()));
        }
        let base = base.oriented(order)?;
        Self::build(alphabet, n, betas, lambdas, starts, Some(base), order)
    }

    fn build(
        alphabet: Alphabet,
        n: usize,
        betas: Vec<Symbol>,
        lambdas: Vec<Symbol>,
        starts: Vec<Symbol>,
        base: Option<Cycle>,
        base_order: usize,
    ) -> Result<Self> {
        if n < base_order {
            return Err(Error::BadParameters(format!("order n = {n} is below the base order {base_order}")));
        }
        let levels = n - base_order;
        for (name, list) in [("B", &betas), ("L", &lambdas), ("I", &starts)] {
            if list.len() != levels {
                return Err(Error::BadParameters(format!(
                    "{name} has {} entries, expected {levels}",
                    list.len()
                )));
            }
        }
        for &beta in &betas {
            check_beta(alphabet, beta)?;
        }
        for &lambda in &lambdas {
            check_lambda(alphabet, lambda)?;
        }
        alphabet.validate(&starts)?;
        Ok(Self { alphabet, n, betas, lambdas, starts, base, base_order })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn betas(&self) -> &[Symbol] {
        &self.betas
    }

    pub fn lambdas(&self) -> &[Symbol] {
        &self.lambdas
    }

    pub fn starts(&self) -> &[Symbol] {
        &self.starts
    }

    /// The external base, if one was supplied.
    pub fn base(&self) -> Option<&Cycle> {
        self.base.as_ref()
    }

    pub fn base_order(&self) -> usize {
        self.base_order
    }

    /// The starting cycle, oriented at its all-zero window.
    pub fn start_cycle(&self) -> Cycle {
        match &self.base {
            Some(b) => b.clone(),
            None => base_cycle(self.alphabet).expect("plan checked q is odd"),
        }
    }

    /// Number of lifting levels, `n - base_order`.
    pub fn levels(&self) -> usize {
        self.betas.len()
    }

    /// Join type used at level `t` (0-based).
    pub fn join(&self, t: usize) -> JoinType {
        JoinType { i: self.starts[t], lambda: self.lambdas[t] }
    }
}

/// `B;L;I` with comma-separated entries, as printed by the command line tool.
impl fmt::Display for ConstructionPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Symbol]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{};{};{}", join(&self.betas), join(&self.lambdas), join(&self.starts))
    }
}
