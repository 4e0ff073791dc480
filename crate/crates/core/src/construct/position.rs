use crate::alphabet::{Alphabet, Symbol};
use crate::construct::plan::check_lambda;
use crate::cycle::Index;
use crate::error::{Error, Result};

/// Position of the ending symbol of the constant word `gamma^{n+1}` in the
/// type-`(i; lambda)` cycle of order `n + 1` built from a base oriented at `0_n`.
///
/// With `m = (gamma - i)/lambda` and `m' = -i/lambda` as residues in `0..q`:
/// `(q - m) q^n + m` when `i = 0`, otherwise `(m' - m)(q^n - 1)`, plus
/// `q^{n+1}` when `m > m'`.
pub fn cross_join_position(alphabet: Alphabet, n: usize, i: Symbol, lambda: Symbol, gamma: Symbol) -> Result<Index> {
    if n == 0 {
        return Err(Error::BadParameters("order n must be at least 1".into()));
    }
    check_lambda(alphabet, lambda)?;
    alphabet.validate(&[i, gamma])?;
    if gamma == 0 {
        return Err(Error::GammaZero);
    }
    let too_large = || Error::TooLarge(format!("q^{} for q={alphabet}", n + 1));
    let q = alphabet.size() as i128;
    let q_n = alphabet.pow(n).ok_or_else(too_large)? as i128;
    let q_n1 = alphabet.pow(n + 1).ok_or_else(too_large)? as i128;
    let inv = alphabet.inverse(lambda).expect("lambda checked to be a unit");
    let m = alphabet.mul(alphabet.sub(gamma, i), inv) as i128;
    let m_prime = alphabet.mul(alphabet.neg(i), inv) as i128;
    let pos = if i == 0 {
        (q - m) * q_n + m
    } else {
        assert_ne!(m, m_prime, "m = m' only when gamma = 0");
        let base = (m_prime - m) * (q_n - 1);
        if m < m_prime {
            base
        } else {
            base + q_n1
        }
    };
    Ok(Index::new(pos as usize).expect("position is positive"))
}
