use crate::alphabet::{Alphabet, Symbol};
use crate::construct::plan::ConstructionPlan;
use crate::construct::recursive::algorithm_aa;
use crate::cycle::Cycle;
use crate::error::{Error, Result};

/// Number of plans `(q phi(q)^2)^levels`, or `None` on overflow.
pub fn family_size(alphabet: Alphabet, levels: usize) -> Option<u128> {
    let per_level = alphabet.size() as u128 * (alphabet.totient() as u128).pow(2);
    per_level.checked_pow(u32::try_from(levels).ok()?)
}

/// All plans of a given order in lexicographic order of `(B, L, I)`, with
/// `beta` and `lambda` ranging over the units of `Z_q`, paired with their cycles.
#[derive(Clone, Debug)]
pub struct Family {
    alphabet: Alphabet,
    n: usize,
    base: Option<Cycle>,
    levels: usize,
    units: Vec<Symbol>,
    next: u128,
    end: u128,
}

/// The family over the built-in base (odd `q`, `n >= 1`).
pub fn enumerate_family(alphabet: Alphabet, n: usize, limit: Option<usize>) -> Result<Family> {
    if !alphabet.is_odd() {
        return Err(Error::EvenAlphabetNeedsBase(alphabet.size()));
    }
    if n == 0 {
        return Err(Error::BadParameters("order n must be at least 1".into()));
    }
    Family::new(alphabet, n, None, n - 1, limit)
}

/// The family over an external De Bruijn base cycle.
pub fn enumerate_family_with_base(alphabet: Alphabet, base: Cycle, n: usize, limit: Option<usize>) -> Result<Family> {
    // validate once through a plan with no levels
    let order = alphabet.order_of_length(base.len()).unwrap_or(0);
    let probe = ConstructionPlan::with_base(alphabet, base, order, vec![], vec![], vec![])?;
    if n < order {
        return Err(Error::BadParameters(format!("order n = {n} is below the base order {order}")));
    }
    Family::new(alphabet, n, probe.base().cloned(), n - order, limit)
}

impl Family {
    fn new(alphabet: Alphabet, n: usize, base: Option<Cycle>, levels: usize, limit: Option<usize>) -> Result<Self> {
        let total = family_size(alphabet, levels).ok_or_else(|| Error::TooLarge(format!("family of order {n}")))?;
        let end = limit.map_or(total, |l| total.min(l as u128));
        Ok(Self { alphabet, n, base, levels, units: alphabet.units(), next: 0, end })
    }

    /// Plan number `index` in enumeration order.
    pub fn plan(&self, index: u128) -> Result<ConstructionPlan> {
        let q = self.alphabet.size() as u128;
        let u = self.units.len() as u128;
        let mut rest = index;
        let mut digits = |radix: u128| {
            let mut v = vec![0u128; self.levels];
            for slot in v.iter_mut().rev() {
                *slot = rest % radix;
                rest /= radix;
            }
            v
        };
        // I varies fastest, B slowest
        let starts: Vec<Symbol> = digits(q).into_iter().map(|d| d as Symbol).collect();
        let lambdas: Vec<Symbol> = digits(u).into_iter().map(|d| self.units[d as usize]).collect();
        let betas: Vec<Symbol> = digits(u).into_iter().map(|d| self.units[d as usize]).collect();
        match &self.base {
            None => ConstructionPlan::new(self.alphabet, self.n, betas, lambdas, starts),
            Some(b) => ConstructionPlan::with_base(self.alphabet, b.clone(), self.n, betas, lambdas, starts),
        }
    }

    /// Plans still to be produced.
    pub fn remaining(&self) -> u128 {
        self.end - self.next
    }
}

impl Iterator for Family {
    type Item = Result<(ConstructionPlan, Cycle)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.next >= self.end {
            return None;
        }
        let index = self.next;
        self.next += 1;
        Some(self.plan(index).and_then(|plan| {
            let cycle = algorithm_aa(&plan)?;
            Ok((plan, cycle))
        }))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = usize::try_from(self.remaining()).unwrap_or(usize::MAX);
        (r, usize::try_from(self.remaining()).ok())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let q3 = Alphabet::new(3).unwrap();
        assert_eq!(family_size(q3, 1), Some(12));
        assert_eq!(family_size(q3, 2), Some(144));
        assert_eq!(family_size(Alphabet::new(5).unwrap(), 1), Some(80));
    }

    #[test]
    fn ordering_and_limit() {
        let q3 = Alphabet::new(3).unwrap();
        let labels: Vec<String> = enumerate_family(q3, 2, None)
            .unwrap()
            .map(|r| r.unwrap().0.to_string())
            .collect();
        assert_eq!(labels.len(), 12);
        assert_eq!(&labels[..4], &["1;1;0", "1;1;1", "1;1;2", "1;2;0"]);
        assert_eq!(labels[11], "2;2;2");
        assert_eq!(enumerate_family(q3, 3, Some(5)).unwrap().count(), 5);
        let third = enumerate_family(q3, 3, None).unwrap().plan(1).unwrap();
        assert_eq!(third.to_string(), "1,1;1,1;0,1");
    }

    #[test]
    fn even_alphabet_needs_base() {
        assert_eq!(
            enumerate_family(Alphabet::new(4).unwrap(), 2, None).unwrap_err(),
            Error::EvenAlphabetNeedsBase(4)
        );
    }
}
