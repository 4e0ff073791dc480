//! One lifting step through a linear kernel `(q - beta) x1 + beta x2`, joined
//! into a single De Bruijn cycle through the alternating strings.

use crate::alphabet::{Alphabet, Symbol};
use crate::construct::plan::{check_beta, check_lambda};
use crate::cycle::Cycle;
use crate::error::{Error, Result};
use crate::homo::Kernel;

/// Lift of a weight-0 cycle under the linear kernel with the given `beta`,
/// starting from `start`: `x_{t+1} = x_t + beta^{-1} g_t`.
pub(crate) fn linear_lift(alphabet: Alphabet, g: &[Symbol], beta: Symbol, start: Symbol) -> Vec<Symbol> {
    let inv = alphabet.inverse(beta).expect("beta is a unit");
    let mut x = Vec::with_capacity(g.len());
    let mut cur = start;
    x.push(cur);
    for &s in &g[..g.len() - 1] {
        cur = alphabet.add(cur, alphabet.mul(inv, s));
        x.push(cur);
    }
    debug_assert_eq!(alphabet.add(cur, alphabet.mul(inv, g[g.len() - 1])), start);
    x
}

/// Joins the `q` translates `x + k` of a lifted cycle `x`.
///
/// The translates visited are `first + t * step` for `t = 0..q`. The output
/// opens with the symbol at position `anchor` of each translate in that order,
/// then runs once around each translate, last one first.
pub(crate) fn splice(alphabet: Alphabet, x: &[Symbol], first: Symbol, step: Symbol, anchor: usize) -> Vec<Symbol> {
    let q = alphabet.size() as usize;
    let l = x.len();
    let at = |k: Symbol, p: usize| alphabet.add(x[(p - 1) % l], k);
    let shift = |t: usize| alphabet.add(first, alphabet.mul(step, (t % q) as Symbol));
    let mut out = Vec::with_capacity(q * l);
    out.extend((0..q).map(|t| at(shift(t), anchor)));
    for t in (0..q).rev() {
        let k = shift(t);
        out.extend((1..l).map(|u| at(k, anchor + u)));
    }
    out
}

struct Step {
    alphabet: Alphabet,
    order: usize,
    alpha: Symbol,
    beta: Symbol,
    led: Vec<Symbol>,
}

/// Checks the inputs shared by the two algorithms and rotates `gamma` so the
/// run `lambda^{n-1}` leads.
fn prepare(gamma: &Cycle, kernel: &Kernel, a: Symbol, lambda: Symbol) -> Result<Step> {
    let alphabet = kernel.alphabet();
    let (alpha, beta) = kernel
        .as_linear()
        .ok_or_else(|| Error::BadParameters("kernel must be (q - beta) x1 + beta x2 with beta a unit".into()))?;
    check_beta(alphabet, beta)?;
    check_lambda(alphabet, lambda)?;
    alphabet.validate(&[a])?;
    alphabet.validate(gamma.symbols())?;
    let not_db = || Error::NotDeBruijn { q: alphabet.size(), order: alphabet.order_of_length(gamma.len()).unwrap_or(0) };
    let m = alphabet.order_of_length(gamma.len()).filter(|&m| m >= 1).ok_or_else(not_db)?;
    if !gamma.is_de_bruijn(alphabet, m) {
        return Err(not_db());
    }
    if gamma.weight(alphabet) != 0 {
        return Err(Error::BadParameters("input cycle must have weight 0".into()));
    }
    let start = gamma.run_start(lambda, m).expect("a De Bruijn cycle contains every constant run");
    let led = gamma.rotate_left(start).into_symbols();
    Ok(Step { alphabet, order: m + 1, alpha, beta, led })
}

/// Algorithm A before the final rotation: `q` alternating symbols followed by
/// `q` translated sections of length `q^{n-1} - 1`.
pub fn algorithm_a_unoriented(gamma: &Cycle, kernel: &Kernel, a: Symbol, lambda: Symbol) -> Result<Vec<Symbol>> {
    let s = prepare(gamma, kernel, a, lambda)?;
    let x = linear_lift(s.alphabet, &s.led, s.beta, a);
    let step = s.alphabet.mul(s.alphabet.inverse(s.beta).expect("unit"), lambda);
    Ok(splice(s.alphabet, &x, 0, step, s.order))
}

/// Lifts a De Bruijn cycle of order `n - 1` through a linear kernel and joins
/// the `q` lifted cycles into one De Bruijn cycle of order `n`, oriented at `0_n`.
///
/// `gamma` may be given in any rotation; it is read starting at its run
/// `lambda^{n-1}`, and the lift starts from `a`.
pub fn algorithm_a(gamma: &Cycle, kernel: &Kernel, a: Symbol, lambda: Symbol) -> Result<Cycle> {
    let out = algorithm_a_unoriented(gamma, kernel, a, lambda)?;
    let order = kernel.alphabet().order_of_length(out.len()).expect("output has length q^n");
    Cycle::from_vec(out).oriented(order)
}

/// Same output as [`algorithm_a`], computed as a single lift of `q` copies of
/// `gamma` with one `lambda` removed from its constant run, preceded by the
/// alternating string.
pub fn algorithm_b(gamma: &Cycle, kernel: &Kernel, a: Symbol, lambda: Symbol) -> Result<Cycle> {
    let s = prepare(gamma, kernel, a, lambda)?;
    let alphabet = s.alphabet;
    let n = s.order;
    let q = alphabet.size() as usize;
    let inv = alphabet.inverse(s.beta).expect("unit");
    let step = alphabet.mul(inv, lambda);

    // gamma^- : the cycle with one lambda dropped from its leading run
    let mut reduced: Vec<Symbol> = s.led[n - 1..].to_vec();
    reduced.extend(std::iter::repeat_n(lambda, n - 2));
    let total = q * s.led.len();

    let mut x = Vec::with_capacity(total);
    x.push(a);
    for _ in 1..n + q - 1 {
        let last = *x.last().unwrap();
        x.push(alphabet.add(last, step));
    }
    let mut t = 0;
    while x.len() < total {
        let last = *x.last().unwrap();
        let target = reduced[t % reduced.len()];
        x.push(alphabet.mul(inv, alphabet.sub(target, alphabet.mul(s.alpha, last))));
        t += 1;
    }
    Cycle::from_vec(x).oriented(n)
}
