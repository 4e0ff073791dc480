//! Text formats for kernels.
//!
//! A kernel file starts with a header line `q=<int> k=<int>` followed by one
//! line per input tuple, `x1 x2 ... x{k+1} -> d`, in decimal. Every tuple must
//! appear exactly once, in any order. Blank lines and lines starting with `#`
//! are ignored. A linear span-2 kernel may instead be written as
//! `q=<int>` followed by `linear beta=<int>`.
//!
//! The one-line form accepted by [`parse_kernel_spec`] is a list of
//! `key=value` fields: `q=3 beta=1`, or `q=2 d=x1+x3` with an affine
//! expression over `x1..x{k+1}`. An optional `k=` widens the span beyond the
//! highest variable used.

use std::fmt::Write as _;

use crate::alphabet::{Alphabet, Symbol};
use crate::error::{Error, Result};
use crate::homo::kernel::Kernel;

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_u64(field: &str, value: &str) -> Result<u64> {
    value.trim().parse().map_err(|_| parse_err(format!("{field}: not a number: {value:?}")))
}

fn parse_alphabet(value: &str) -> Result<Alphabet> {
    let q = parse_u64("q", value)?;
    Alphabet::new(u32::try_from(q).map_err(|_| Error::InvalidAlphabet(u32::MAX))?)
}

fn fields(line: &str) -> Result<Vec<(&str, &str)>> {
    line.split_whitespace()
        .map(|tok| tok.split_once('=').ok_or_else(|| parse_err(format!("expected key=value, got {tok:?}"))))
        .collect()
}

/// Reads the kernel file format.
pub fn parse_kernel(text: &str) -> Result<Kernel> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines.next().ok_or_else(|| parse_err("empty kernel file"))?;
    let mut q = None;
    let mut k = None;
    for (key, value) in fields(header)? {
        match key {
            "q" => q = Some(parse_alphabet(value)?),
            "k" => k = Some(parse_u64("k", value)? as usize),
            _ => return Err(parse_err(format!("unknown header field {key:?}"))),
        }
    }
    let alphabet = q.ok_or_else(|| parse_err("header lacks q="))?;
    let mut body = lines.peekable();
    if let Some(first) = body.peek() {
        if let Some(rest) = first.strip_prefix("linear") {
            let beta = match fields(rest)?.as_slice() {
                [("beta", v)] => parse_u64("beta", v)?,
                _ => return Err(parse_err("expected `linear beta=<int>`")),
            };
            if k.is_some_and(|k| k != 1) {
                return Err(parse_err("linear kernels have k=1"));
            }
            let beta = alphabet.symbol(beta)?;
            body.next();
            if let Some(extra) = body.next() {
                return Err(parse_err(format!("unexpected line after linear kernel: {extra:?}")));
            }
            return Kernel::linear(alphabet, beta);
        }
    }
    let k = k.ok_or_else(|| parse_err("header lacks k="))?;
    let len = alphabet
        .pow(k + 1)
        .filter(|&len| len <= super::kernel::MAX_TABLE_LEN)
        .ok_or_else(|| Error::TooLarge(format!("kernel table for q={alphabet}, k={k}")))?;
    let mut table: Vec<Option<Symbol>> = vec![None; len];
    for line in body {
        let (lhs, rhs) = line
            .split_once("->")
            .ok_or_else(|| parse_err(format!("expected `x1 ... -> d`, got {line:?}")))?;
        let args = lhs
            .split_whitespace()
            .map(|t| parse_u64("argument", t).and_then(|v| alphabet.symbol(v)))
            .collect::<Result<Vec<_>>>()?;
        if args.len() != k + 1 {
            return Err(parse_err(format!("line {line:?} has {} arguments, expected {}", args.len(), k + 1)));
        }
        let value = alphabet.symbol(parse_u64("value", rhs)?)?;
        let slot = &mut table[alphabet.encode(&args)];
        if slot.replace(value).is_some() {
            return Err(parse_err(format!("input repeated: {}", lhs.trim())));
        }
    }
    let missing = table.iter().filter(|v| v.is_none()).count();
    if missing > 0 {
        return Err(parse_err(format!("{missing} of {len} inputs have no value")));
    }
    Kernel::from_table(alphabet, k, table.into_iter().flatten().collect())
}

/// Writes a kernel in the file format, tuples in increasing order.
pub fn write_kernel(kernel: &Kernel) -> String {
    let alphabet = kernel.alphabet();
    let mut out = format!("q={} k={}\n", alphabet.size(), kernel.k());
    for (code, &value) in kernel.table().iter().enumerate() {
        let args: Vec<String> = alphabet.decode(code, kernel.span()).iter().map(|s| s.to_string()).collect();
        let _ = writeln!(out, "{} -> {value}", args.join(" "));
    }
    out
}

/// Reads a one-line kernel description such as `q=3 beta=1` or `q=2 d=x1+x3`.
pub fn parse_kernel_spec(spec: &str) -> Result<Kernel> {
    let mut q = None;
    let mut beta = None;
    let mut expr = None;
    let mut k = None;
    for (key, value) in fields(spec)? {
        match key {
            "q" => q = Some(parse_alphabet(value)?),
            "beta" => beta = Some(parse_u64("beta", value)?),
            "d" => expr = Some(value),
            "k" => k = Some(parse_u64("k", value)? as usize),
            _ => return Err(parse_err(format!("unknown field {key:?}"))),
        }
    }
    let alphabet = q.ok_or_else(|| parse_err("kernel spec lacks q="))?;
    match (beta, expr) {
        (Some(beta), None) => {
            if k.is_some_and(|k| k != 1) {
                return Err(parse_err("linear kernels have k=1"));
            }
            Kernel::linear(alphabet, alphabet.symbol(beta)?)
        }
        (None, Some(expr)) => {
            let (mut coeffs, constant) = parse_affine(alphabet, expr)?;
            if let Some(k) = k {
                if k + 1 < coeffs.len() {
                    return Err(parse_err(format!("expression uses x{} but k={k}", coeffs.len())));
                }
                coeffs.resize(k + 1, 0);
            }
            if coeffs.len() < 2 {
                coeffs.resize(2, 0);
            }
            Kernel::affine(alphabet, &coeffs, constant)
        }
        _ => Err(parse_err("kernel spec needs exactly one of beta= or d=")),
    }
}

/// Parses `c1*x1 + x3 - 2*x2 + 1` into per-variable coefficients and a constant.
fn parse_affine(alphabet: Alphabet, expr: &str) -> Result<(Vec<Symbol>, Symbol)> {
    let mut coeffs: Vec<Symbol> = Vec::new();
    let mut constant: Symbol = 0;
    let expr: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if expr.is_empty() {
        return Err(parse_err("empty expression"));
    }
    let mut terms = Vec::new();
    let mut start = 0;
    for (i, c) in expr.char_indices() {
        if (c == '+' || c == '-') && i > 0 {
            terms.push(&expr[start..i]);
            start = i;
        }
    }
    terms.push(&expr[start..]);
    for term in terms {
        let (negative, body) = match term.as_bytes().first() {
            Some(b'-') => (true, &term[1..]),
            Some(b'+') => (false, &term[1..]),
            _ => (false, term),
        };
        if body.is_empty() {
            return Err(parse_err(format!("dangling sign in {expr:?}")));
        }
        let (coef, var) = match body.find('x') {
            Some(pos) => {
                let coef = body[..pos].trim_end_matches('*');
                let coef = if coef.is_empty() { 1 } else { parse_u64("coefficient", coef)? };
                let idx = parse_u64("variable index", &body[pos + 1..])? as usize;
                if idx == 0 {
                    return Err(parse_err("variables are numbered from x1"));
                }
                (coef, Some(idx))
            }
            None => (parse_u64("constant", body)?, None),
        };
        let q = u64::from(alphabet.size());
        let mut value = (coef % q) as Symbol;
        if negative {
            value = alphabet.neg(value);
        }
        match var {
            Some(idx) => {
                if coeffs.len() < idx {
                    coeffs.resize(idx, 0);
                }
                coeffs[idx - 1] = alphabet.add(coeffs[idx - 1], value);
            }
            None => constant = alphabet.add(constant, value),
        }
    }
    Ok((coeffs, constant))
}
