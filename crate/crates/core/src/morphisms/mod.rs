//! Structure-preserving maps and the backtracking hom engine.

mod congruence;
mod construct;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::Error;
use crate::structures::{Algebra, Elem};

pub use congruence::{all_congruences, congruence_generated, kernel, Congruence};
pub use construct::{
    coproduct, image, kernel_pair, mset_pushout, product, pullback, quotient, subalgebra_generated, subalgebra_on,
    Image, KernelPair, Pullback, Pushout,
};

/// A map between two structures of the same family, certified to preserve
/// every operation.
#[derive(Clone, Debug)]
pub struct Morphism {
    source: Arc<Algebra>,
    target: Arc<Algebra>,
    map: Vec<Elem>,
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.map == other.map && self.source == other.source && self.target == other.target
    }
}
impl Eq for Morphism {}

impl Morphism {
    pub fn new(source: Arc<Algebra>, target: Arc<Algebra>, map: Vec<Elem>) -> Result<Self, Error> {
        if source.family() != target.family() {
            return Err(Error::FamilyMismatch);
        }
        check_preserves(&source, &target, &map).map_err(Error::NotAMorphism)?;
        Ok(Morphism { source, target, map })
    }

    pub(crate) fn unchecked(source: Arc<Algebra>, target: Arc<Algebra>, map: Vec<Elem>) -> Self {
        debug_assert!(check_preserves(&source, &target, &map).is_ok());
        Morphism { source, target, map }
    }

    pub fn identity(a: &Arc<Algebra>) -> Self {
        Morphism { source: a.clone(), target: a.clone(), map: (0..a.size()).collect() }
    }

    pub fn source(&self) -> &Arc<Algebra> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Algebra> {
        &self.target
    }

    pub fn map(&self) -> &[Elem] {
        &self.map
    }

    #[inline]
    pub fn apply(&self, x: Elem) -> Elem {
        self.map[x]
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &Morphism) -> Result<Morphism, Error> {
        if !(Arc::ptr_eq(&f.target, &self.source) || *f.target == *self.source) {
            return Err(Error::NotComposable);
        }
        Ok(Morphism {
            source: f.source.clone(),
            target: self.target.clone(),
            map: f.map.iter().map(|&x| self.map[x]).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = alloc::vec![false; self.target.size()];
        self.map.iter().all(|&y| !core::mem::replace(&mut seen[y], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = alloc::vec![false; self.target.size()];
        for &y in &self.map {
            seen[y] = true;
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_bijective(&self) -> bool {
        self.source.size() == self.target.size() && self.is_injective()
    }

    /// The image as a sorted set of target elements.
    pub fn image_set(&self) -> Vec<Elem> {
        let mut v = self.map.clone();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// The inverse of a bijective morphism.
    pub fn inverse(&self) -> Option<Morphism> {
        if !self.is_bijective() {
            return None;
        }
        let mut inv = alloc::vec![0; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        Some(Morphism { source: self.target.clone(), target: self.source.clone(), map: inv })
    }
}

fn check_preserves(a: &Algebra, b: &Algebra, map: &[Elem]) -> Result<(), String> {
    if map.len() != a.size() {
        return Err(format!("map has {} entries, source has {}", map.len(), a.size()));
    }
    if let Some(&y) = map.iter().find(|&&y| y >= b.size()) {
        return Err(format!("image index {y} out of range"));
    }
    for (i, (&ca, &cb)) in a.constants().iter().zip(b.constants()).enumerate() {
        if map[ca] != cb {
            return Err(format!("constant #{i} not preserved"));
        }
    }
    for (op, (ta, tb)) in a.unary_ops().iter().zip(b.unary_ops()).enumerate() {
        for x in 0..a.size() {
            if map[ta[x]] != tb[map[x]] {
                return Err(format!("unary operation #{op} fails at {}", a.label(x)));
            }
        }
    }
    for op in 0..a.binary_ops().len() {
        for x in 0..a.size() {
            for y in 0..a.size() {
                if map[a.bin(op, x, y)] != b.bin(op, map[x], map[y]) {
                    return Err(format!("binary operation #{op} fails at ({},{})", a.label(x), a.label(y)));
                }
            }
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MorphismKind {
    pub mono: bool,
    pub epi: bool,
    pub iso: bool,
}

/// Mono is injectivity and epi is surjectivity of the underlying map.
pub fn classify_morphism(f: &Morphism) -> MorphismKind {
    let mono = f.is_injective();
    let epi = f.is_surjective();
    MorphismKind { mono, epi, iso: mono && epi }
}

const UNSET: usize = usize::MAX;

struct Search<'a> {
    a: &'a Algebra,
    b: &'a Algebra,
    map: Vec<Elem>,
    used: Vec<bool>,
    trail: Vec<Elem>,
    queue: Vec<Elem>,
    injective: bool,
    limit: usize,
    out: Vec<Vec<Elem>>,
}

impl Search<'_> {
    fn assign(&mut self, x: Elem, y: Elem) -> bool {
        if self.map[x] != UNSET {
            return self.map[x] == y;
        }
        if self.injective && self.used[y] {
            return false;
        }
        self.map[x] = y;
        self.used[y] = true;
        self.trail.push(x);
        self.queue.push(x);
        true
    }

    fn propagate(&mut self) -> bool {
        let (a, b) = (self.a, self.b);
        while let Some(x) = self.queue.pop() {
            let fx = self.map[x];
            for (ta, tb) in a.unary_ops().iter().zip(b.unary_ops()) {
                if !self.assign(ta[x], tb[fx]) {
                    self.queue.clear();
                    return false;
                }
            }
            for op in 0..a.binary_ops().len() {
                for z in 0..a.size() {
                    let fz = self.map[z];
                    if fz == UNSET {
                        continue;
                    }
                    if !self.assign(a.bin(op, x, z), b.bin(op, fx, fz))
                        || !self.assign(a.bin(op, z, x), b.bin(op, fz, fx))
                    {
                        self.queue.clear();
                        return false;
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            self.used[self.map[x]] = false;
            self.map[x] = UNSET;
        }
    }

    fn run(&mut self, from: Elem) -> bool {
        let mut x = from;
        while x < self.a.size() && self.map[x] != UNSET {
            x += 1;
        }
        if x == self.a.size() {
            self.out.push(self.map.clone());
            return self.limit != 0 && self.out.len() >= self.limit;
        }
        for y in 0..self.b.size() {
            let mark = self.trail.len();
            if self.assign(x, y) && self.propagate() && self.run(x + 1) {
                self.undo(mark);
                return true;
            }
            self.queue.clear();
            self.undo(mark);
        }
        false
    }
}

/// Element maps `a → b` preserving all operations, in lexicographic order.
///
/// `fixed` pre-assigns images; `limit` of 0 means no limit.
pub(crate) fn search_maps(
    a: &Algebra,
    b: &Algebra,
    injective: bool,
    limit: usize,
    fixed: &[(Elem, Elem)],
) -> Vec<Vec<Elem>> {
    let mut s = Search {
        a,
        b,
        map: alloc::vec![UNSET; a.size()],
        used: alloc::vec![false; b.size()],
        trail: Vec::new(),
        queue: Vec::new(),
        injective,
        limit,
        out: Vec::new(),
    };
    let seeds = a.constants().iter().copied().zip(b.constants().iter().copied()).chain(fixed.iter().copied());
    for (x, y) in seeds {
        if !s.assign(x, y) {
            return Vec::new();
        }
    }
    if !s.propagate() {
        return Vec::new();
    }
    s.run(0);
    s.out.sort();
    s.out
}

/// All morphisms `a → b`, sorted by their map tuples.
pub fn enumerate_homs(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<Vec<Morphism>, Error> {
    if a.family() != b.family() {
        return Err(Error::FamilyMismatch);
    }
    Ok(search_maps(a, b, false, 0, &[])
        .into_iter()
        .map(|map| Morphism { source: a.clone(), target: b.clone(), map })
        .collect())
}

/// Some isomorphism `a → b`, if one exists.
pub fn find_isomorphism(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Option<Morphism> {
    if a.family() != b.family() || a.size() != b.size() {
        return None;
    }
    search_maps(a, b, true, 1, &[]).into_iter().next().map(|map| Morphism { source: a.clone(), target: b.clone(), map })
}

pub fn are_isomorphic(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    find_isomorphism(a, b).is_some()
}

/// Morphisms `a → b` agreeing with `fixed` on the listed elements.
pub fn homs_extending(a: &Arc<Algebra>, b: &Arc<Algebra>, fixed: &[(Elem, Elem)]) -> Result<Vec<Morphism>, Error> {
    if a.family() != b.family() {
        return Err(Error::FamilyMismatch);
    }
    Ok(search_maps(a, b, false, 0, fixed)
        .into_iter()
        .map(|map| Morphism { source: a.clone(), target: b.clone(), map })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{cyclic_group, heyting_chain, lukasiewicz_chain};

    fn arc(a: Algebra) -> Arc<Algebra> {
        Arc::new(a)
    }

    #[test]
    fn no_mv_map_from_l2_to_l1() {
        let l2 = arc(lukasiewicz_chain(2));
        let l1 = arc(lukasiewicz_chain(1));
        assert!(enumerate_homs(&l2, &l1).unwrap().is_empty());
    }

    #[test]
    fn initial_objects_have_unique_maps() {
        let l1 = arc(lukasiewicz_chain(1));
        for n in 0..5 {
            let t = arc(lukasiewicz_chain(n));
            assert_eq!(enumerate_homs(&l1, &t).unwrap().len(), 1);
        }
        let z2 = arc(cyclic_group(2, 1, 2).unwrap());
        let z4 = arc(cyclic_group(4, 2, 2).unwrap());
        let homs = enumerate_homs(&z2, &z4).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].map(), &[0, 2]);
    }

    #[test]
    fn three_chain_has_one_map_to_two() {
        let c3 = arc(heyting_chain(3));
        let c2 = arc(heyting_chain(2));
        let homs = enumerate_homs(&c3, &c2).unwrap();
        assert_eq!(homs.len(), 1);
        assert_eq!(homs[0].map(), &[0, 1, 1]);
        assert!(Morphism::new(c3, c2, alloc::vec![0, 0, 1]).is_err());
    }

    #[test]
    fn classify_examples() {
        let z4 = arc(cyclic_group(4, 2, 2).unwrap());
        let z2 = arc(cyclic_group(2, 0, 2).unwrap());
        let f = Morphism::new(z4, z2, alloc::vec![0, 1, 0, 1]).unwrap();
        assert_eq!(classify_morphism(&f), MorphismKind { mono: false, epi: true, iso: false });
        let l3 = arc(lukasiewicz_chain(3));
        let t = arc(lukasiewicz_chain(0));
        let v = Morphism::new(l3.clone(), t, alloc::vec![0; 4]).unwrap();
        assert_eq!(classify_morphism(&v), MorphismKind { mono: false, epi: true, iso: false });
        assert!(classify_morphism(&Morphism::identity(&l3)).iso);
    }
}
