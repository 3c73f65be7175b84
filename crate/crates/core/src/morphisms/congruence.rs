use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::Morphism;
use crate::structures::{Algebra, Elem};

/// A partition of the carrier, stored as canonical block numbers (blocks
/// numbered by their least element).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Congruence {
    block_of: Vec<usize>,
}

impl Congruence {
    /// Canonicalizes arbitrary block keys.
    pub fn from_keys<K: PartialEq>(keys: &[K]) -> Self {
        let mut reps: Vec<&K> = Vec::new();
        let block_of = keys
            .iter()
            .map(|k| match reps.iter().position(|r| *r == k) {
                Some(i) => i,
                None => {
                    reps.push(k);
                    reps.len() - 1
                }
            })
            .collect();
        Congruence { block_of }
    }

    pub fn identity(n: usize) -> Self {
        Congruence { block_of: (0..n).collect() }
    }

    pub fn total(n: usize) -> Self {
        Congruence { block_of: alloc::vec![0; n] }
    }

    pub fn carrier_size(&self) -> usize {
        self.block_of.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.block_of.iter().copied().max().map_or(0, |m| m + 1)
    }

    #[inline]
    pub fn block_of(&self, x: Elem) -> usize {
        self.block_of[x]
    }

    pub fn related(&self, x: Elem, y: Elem) -> bool {
        self.block_of[x] == self.block_of[y]
    }

    pub fn blocks(&self) -> Vec<Vec<Elem>> {
        let mut out: Vec<Vec<Elem>> = alloc::vec![Vec::new(); self.num_blocks()];
        for (x, &b) in self.block_of.iter().enumerate() {
            out[b].push(x);
        }
        out
    }

    /// `self ⊆ other` as relations.
    pub fn is_finer_than(&self, other: &Congruence) -> bool {
        let n = self.block_of.len();
        let mut image: Vec<Option<usize>> = alloc::vec![None; self.num_blocks()];
        (0..n).all(|x| {
            let b = self.block_of[x];
            match image[b] {
                Some(o) => o == other.block_of[x],
                None => {
                    image[b] = Some(other.block_of[x]);
                    true
                }
            }
        })
    }

    pub fn meet(&self, other: &Congruence) -> Congruence {
        let keys: Vec<(usize, usize)> = self.block_of.iter().zip(&other.block_of).map(|(&a, &b)| (a, b)).collect();
        Congruence::from_keys(&keys)
    }

    /// Pairs `(x, least element of x's block)` generating the relation.
    pub fn generating_pairs(&self) -> Vec<(Elem, Elem)> {
        let mut first: Vec<Option<Elem>> = alloc::vec![None; self.num_blocks()];
        let mut out = Vec::new();
        for (x, &b) in self.block_of.iter().enumerate() {
            match first[b] {
                Some(r) => out.push((x, r)),
                None => first[b] = Some(x),
            }
        }
        out
    }

    pub fn is_compatible(&self, a: &Algebra) -> bool {
        let n = a.size();
        let pairs = self.generating_pairs();
        pairs.iter().all(|&(x, y)| {
            a.unary_ops().iter().all(|t| self.related(t[x], t[y]))
                && (0..a.binary_ops().len()).all(|op| {
                    (0..n).all(|z| {
                        self.related(a.bin(op, x, z), a.bin(op, y, z)) && self.related(a.bin(op, z, x), a.bin(op, z, y))
                    })
                })
        })
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

/// The least congruence containing `pairs`.
pub fn congruence_generated(a: &Algebra, pairs: &[(Elem, Elem)]) -> Congruence {
    let n = a.size();
    let mut parent: Vec<usize> = (0..n).collect();
    let mut work: Vec<(Elem, Elem)> = pairs.to_vec();
    while let Some((x, y)) = work.pop() {
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        if rx == ry {
            continue;
        }
        parent[rx.max(ry)] = rx.min(ry);
        for t in a.unary_ops() {
            work.push((t[x], t[y]));
        }
        for op in 0..a.binary_ops().len() {
            for z in 0..n {
                work.push((a.bin(op, x, z), a.bin(op, y, z)));
                work.push((a.bin(op, z, x), a.bin(op, z, y)));
            }
        }
    }
    let roots: Vec<usize> = (0..n).map(|x| find(&mut parent, x)).collect();
    Congruence::from_keys(&roots)
}

/// Every congruence of `a`, sorted.
pub fn all_congruences(a: &Algebra) -> Vec<Congruence> {
    let n = a.size();
    let mut principal: BTreeSet<Congruence> = BTreeSet::new();
    for x in 0..n {
        for y in x + 1..n {
            principal.insert(congruence_generated(a, &[(x, y)]));
        }
    }
    let mut all: BTreeSet<Congruence> = BTreeSet::new();
    all.insert(Congruence::identity(n));
    let mut frontier: Vec<Congruence> = all.iter().cloned().collect();
    while let Some(c) = frontier.pop() {
        for p in &principal {
            let mut pairs = c.generating_pairs();
            pairs.extend(p.generating_pairs());
            let j = congruence_generated(a, &pairs);
            if all.insert(j.clone()) {
                frontier.push(j);
            }
        }
    }
    all.into_iter().collect()
}

pub fn kernel(f: &Morphism) -> Congruence {
    Congruence::from_keys(f.map())
}
