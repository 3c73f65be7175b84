use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use super::{Algebra, Elem};
use crate::error::Error;

fn decode(mut idx: usize, factors: &[u64]) -> Vec<u64> {
    let mut out = alloc::vec![0u64; factors.len()];
    for i in (0..factors.len()).rev() {
        out[i] = (idx as u64) % factors[i];
        idx /= factors[i] as usize;
    }
    out
}

fn encode(t: &[u64], factors: &[u64]) -> usize {
    t.iter().zip(factors).fold(0usize, |acc, (&x, &f)| acc * f as usize + x as usize)
}

fn group_name(factors: &[u64]) -> String {
    if factors.is_empty() {
        return "Z1".into();
    }
    let parts: Vec<String> = factors.iter().map(|f| format!("Z{f}")).collect();
    parts.join("+")
}

/// `(ℤ_{n₁} ⊕ … ⊕ ℤ_{n_k}, a)` with elements in lexicographic tuple order.
pub fn abelian_group(factors: &[u64], basepoint: &[u64], modulus: u64) -> Result<Algebra, Error> {
    if factors.contains(&0) {
        return Err(Error::Malformed("cyclic factors must be positive".into()));
    }
    if basepoint.len() != factors.len() || basepoint.iter().zip(factors).any(|(&b, &f)| b >= f) {
        return Err(Error::Malformed("basepoint does not match the factors".into()));
    }
    let n: usize = factors.iter().map(|&f| f as usize).product();
    let tuples: Vec<Vec<u64>> = (0..n).map(|i| decode(i, factors)).collect();
    let labels: Vec<String> = tuples
        .iter()
        .map(|t| {
            if t.len() == 1 {
                format!("{}", t[0])
            } else if t.is_empty() {
                "0".into()
            } else {
                let parts: Vec<String> = t.iter().map(|x| format!("{x}")).collect();
                format!("({})", parts.join(","))
            }
        })
        .collect();
    let add: Vec<Vec<Elem>> = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| {
                    let s: Vec<u64> =
                        factors.iter().enumerate().map(|(i, &f)| (tuples[x][i] + tuples[y][i]) % f).collect();
                    encode(&s, factors)
                })
                .collect()
        })
        .collect();
    let neg: Vec<Elem> = (0..n)
        .map(|x| {
            let s: Vec<u64> = factors.iter().enumerate().map(|(i, &f)| (f - tuples[x][i]) % f).collect();
            encode(&s, factors)
        })
        .collect();
    let a = encode(basepoint, factors);
    let name = format!("({},{})", group_name(factors), labels[a]);
    Algebra::coslice(name, labels, &add, &neg, a, modulus)
}

pub fn cyclic_group(n: u64, basepoint: u64, modulus: u64) -> Result<Algebra, Error> {
    if n == 1 {
        return abelian_group(&[], &[], modulus);
    }
    abelian_group(&[n], &[basepoint], modulus)
}

/// Invariant-factor lists `n₁ | n₂ | …` (each `nᵢ ≥ 2`) of groups of order ≤ `max_order`,
/// ordered by group order and then lexicographically. The empty list is the trivial group.
pub fn invariant_factor_lists(max_order: u64) -> Vec<Vec<u64>> {
    fn extend(prefix: &mut Vec<u64>, order: u64, max: u64, out: &mut Vec<Vec<u64>>) {
        out.push(prefix.clone());
        let last = prefix.last().copied().unwrap_or(1);
        let mut next = if last == 1 { 2 } else { last };
        while order * next <= max {
            if next % last == 0 {
                prefix.push(next);
                extend(prefix, order * next, max, out);
                prefix.pop();
            }
            next += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max_order, &mut out);
    out.sort_by_key(|l| (l.iter().product::<u64>(), l.clone()));
    out
}
