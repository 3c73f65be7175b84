//! The class Z of zero objects, trivial arrows, Z-kernels and Z-cokernels.
//!
//! All constructions are phrased in an [`Ambient`] category. For MV-algebras,
//! Heyting algebras and pointed groups this is the category of the structures
//! itself. For M-sets it is the opposite of M-Set: an ambient arrow `A → B`
//! is stored as the M-set map `B → A`.

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::Error;
use crate::morphisms::{
    all_congruences, congruence_generated, enumerate_homs, find_isomorphism, mset_pushout, pullback, quotient,
    subalgebra_generated, subalgebra_on, Congruence, Morphism, Pullback,
};
use crate::structures::{
    cyclic_group, heyting_chain, lukasiewicz_chain, mset_empty, mset_point, Algebra, Elem, Family,
};

/// A failed universal-property or condition check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub reason: String,
    pub objects: Vec<Arc<Algebra>>,
    pub arrows: Vec<Morphism>,
}

impl Counterexample {
    pub fn new(reason: impl Into<String>) -> Self {
        Counterexample { reason: reason.into(), objects: Vec::new(), arrows: Vec::new() }
    }

    pub fn with_objects(mut self, objects: &[&Arc<Algebra>]) -> Self {
        self.objects.extend(objects.iter().map(|&o| o.clone()));
        self
    }

    pub fn with_arrows(mut self, arrows: &[&Morphism]) -> Self {
        self.arrows.extend(arrows.iter().map(|&a| a.clone()));
        self
    }
}

/// `f ∘ k` is trivial; `ε ∘ chi = f ∘ k` is the pullback square.
#[derive(Clone, Debug)]
pub struct ZKernelWitness {
    pub kernel: Morphism,
    pub chi: Morphism,
    pub zero_part: Morphism,
}

/// `q ∘ f = z ∘ quotient` is the pushout square along the maximum quotient
/// of the domain.
#[derive(Clone, Debug)]
pub struct ZCokernelWitness {
    pub cokernel: Morphism,
    pub quotient: Morphism,
    pub z: Morphism,
}

/// The ambient category of one family of structures.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambient {
    family: Family,
}

/// `d` with `d ∘ e = g`, for `e` surjective.
fn lift_through_surjection(e: &Morphism, g: &Morphism) -> Option<Morphism> {
    let mut d = alloc::vec![usize::MAX; e.target().size()];
    for x in 0..e.source().size() {
        let slot = &mut d[e.apply(x)];
        if *slot == usize::MAX {
            *slot = g.apply(x);
        } else if *slot != g.apply(x) {
            return None;
        }
    }
    if d.contains(&usize::MAX) {
        return None;
    }
    Morphism::new(e.target().clone(), g.target().clone(), d).ok()
}

/// `d` with `m ∘ d = g`, for `m` injective.
fn lift_into_injection(m: &Morphism, g: &Morphism) -> Option<Morphism> {
    let mut inv = alloc::vec![usize::MAX; m.target().size()];
    for x in 0..m.source().size() {
        inv[m.apply(x)] = x;
    }
    let d = g.map().iter().map(|&y| (inv[y] != usize::MAX).then_some(inv[y])).collect::<Option<Vec<_>>>()?;
    Morphism::new(g.source().clone(), m.source().clone(), d).ok()
}

impl Ambient {
    pub fn new(family: Family) -> Self {
        Ambient { family }
    }

    pub fn of(a: &Algebra) -> Self {
        Ambient { family: a.family().clone() }
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    /// True for M-sets, whose ambient category is M-Set^op.
    pub fn is_dual(&self) -> bool {
        matches!(self.family, Family::MSet(_))
    }

    pub fn accepts(&self, a: &Algebra) -> bool {
        *a.family() == self.family
    }

    pub fn dom<'a>(&self, f: &'a Morphism) -> &'a Arc<Algebra> {
        if self.is_dual() {
            f.target()
        } else {
            f.source()
        }
    }

    pub fn cod<'a>(&self, f: &'a Morphism) -> &'a Arc<Algebra> {
        if self.is_dual() {
            f.source()
        } else {
            f.target()
        }
    }

    /// `g ∘ f` in the ambient category.
    pub fn compose(&self, g: &Morphism, f: &Morphism) -> Result<Morphism, Error> {
        if self.is_dual() {
            f.after(g)
        } else {
            g.after(f)
        }
    }

    pub fn identity(&self, a: &Arc<Algebra>) -> Morphism {
        Morphism::identity(a)
    }

    /// Ambient arrows `a → b`, sorted by their stored maps.
    pub fn homs(&self, a: &Arc<Algebra>, b: &Arc<Algebra>) -> Vec<Morphism> {
        let r = if self.is_dual() { enumerate_homs(b, a) } else { enumerate_homs(a, b) };
        r.unwrap_or_default()
    }

    pub fn is_mono(&self, f: &Morphism) -> bool {
        if self.is_dual() {
            f.is_surjective()
        } else {
            f.is_injective()
        }
    }

    /// Regular epimorphism: surjective in a variety, injective in M-Set.
    pub fn is_regular_epi(&self, f: &Morphism) -> bool {
        if self.is_dual() {
            f.is_injective()
        } else {
            f.is_surjective()
        }
    }

    /// Effective descent coincides with regular epi in these Barr-exact categories.
    pub fn is_descent(&self, f: &Morphism) -> bool {
        self.is_regular_epi(f)
    }

    pub fn is_iso(&self, f: &Morphism) -> bool {
        f.is_bijective()
    }

    /// Some ambient isomorphism `a → b`.
    pub fn isomorphism(&self, a: &Arc<Algebra>, b: &Arc<Algebra>) -> Option<Morphism> {
        if self.is_dual() {
            find_isomorphism(b, a)
        } else {
            find_isomorphism(a, b)
        }
    }

    /// Pullback of `f: A → C` and `g: B → C`; the legs point to `A` and `B`.
    pub fn pullback(&self, f: &Morphism, g: &Morphism) -> Result<Pullback, Error> {
        if self.is_dual() {
            let po = mset_pushout(f, g)?;
            Ok(Pullback { object: po.object, left: po.left, right: po.right })
        } else {
            pullback(f, g)
        }
    }

    /// The unique `w: X → P` with `left ∘ w = u` and `right ∘ w = v`.
    pub fn induce_into_pullback(&self, pb: &Pullback, u: &Morphism, v: &Morphism) -> Option<Morphism> {
        if self.is_dual() {
            let mut w = alloc::vec![usize::MAX; pb.object.size()];
            let legs = [(&pb.left, u), (&pb.right, v)];
            for (leg, target) in legs {
                for x in 0..leg.source().size() {
                    let slot = &mut w[leg.apply(x)];
                    if *slot == usize::MAX {
                        *slot = target.apply(x);
                    } else if *slot != target.apply(x) {
                        return None;
                    }
                }
            }
            if w.contains(&usize::MAX) {
                return None;
            }
            Morphism::new(pb.object.clone(), u.target().clone(), w).ok()
        } else {
            let pairs: Vec<(Elem, Elem)> =
                (0..pb.object.size()).map(|p| (pb.left.apply(p), pb.right.apply(p))).collect();
            let w = (0..u.source().size())
                .map(|x| pairs.iter().position(|&q| q == (u.apply(x), v.apply(x))))
                .collect::<Option<Vec<_>>>()?;
            Morphism::new(u.source().clone(), pb.object.clone(), w).ok()
        }
    }

    /// Pushout of a regular epi `x: A → M` along `f: A → B`: returns `(q: B → Q, z: M → Q)`.
    pub fn pushout_of_regular_epi(&self, x: &Morphism, f: &Morphism) -> Result<(Morphism, Morphism), Error> {
        if !self.is_regular_epi(x) {
            return Err(Error::Unsupported("pushout along a non-regular epi".into()));
        }
        if self.is_dual() {
            // M-Set pullback of the mono x: M ↪ A along f: B → A
            let img = x.image_set();
            let elems: Vec<Elem> = (0..f.source().size()).filter(|&b| img.binary_search(&f.apply(b)).is_ok()).collect();
            let (_, incl) = subalgebra_on(f.source(), &elems, &format!("{}.pre", f.source().name()))
                .ok_or_else(|| Error::Internal("preimage of a sub-M-set not closed".into()))?;
            let to_m = lift_into_injection(x, &f.after(&incl)?)
                .ok_or_else(|| Error::Internal("pushout leg is not well defined".into()))?;
            Ok((incl, to_m))
        } else {
            let pairs: Vec<(Elem, Elem)> = {
                let mut first = alloc::vec![usize::MAX; x.target().size()];
                let mut out = Vec::new();
                for a in 0..x.source().size() {
                    let b = x.apply(a);
                    if first[b] == usize::MAX {
                        first[b] = a;
                    } else {
                        out.push((f.apply(a), f.apply(first[b])));
                    }
                }
                out
            };
            let theta = congruence_generated(f.target(), &pairs);
            let (_, q) = quotient(f.target(), &theta);
            let g = q.after(f)?;
            let z = lift_through_surjection(x, &g)
                .ok_or_else(|| Error::Internal("pushout leg is not well defined".into()))?;
            Ok((q, z))
        }
    }

    /// One representative of every regular quotient of `a`.
    pub fn quotients(&self, a: &Arc<Algebra>) -> Vec<Morphism> {
        if self.is_dual() {
            let n = a.size();
            assert!(n <= 20, "sub-M-set enumeration is exponential");
            let mut out = Vec::new();
            for mask in 0u32..(1u32 << n) {
                let elems: Vec<Elem> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
                if let Some((_, incl)) = subalgebra_on(a, &elems, &format!("{}.sub", a.name())) {
                    out.push(incl);
                }
            }
            out
        } else {
            all_congruences(a).iter().map(|t| quotient(a, t).1).collect()
        }
    }

    pub fn initial(&self) -> Arc<Algebra> {
        Arc::new(match &self.family {
            Family::Mv => lukasiewicz_chain(1),
            Family::Heyting => heyting_chain(2),
            Family::MSet(m) => mset_point(m.clone()),
            Family::Coslice { modulus } => cyclic_group(*modulus, 1 % modulus, *modulus).expect("cyclic"),
        })
    }

    pub fn terminal(&self) -> Arc<Algebra> {
        Arc::new(match &self.family {
            Family::Mv => lukasiewicz_chain(0),
            Family::Heyting => heyting_chain(1),
            Family::MSet(m) => mset_empty(m.clone()),
            Family::Coslice { modulus } => cyclic_group(1, 0, *modulus).expect("trivial group"),
        })
    }

    /// Representatives of the members of Z, smallest first.
    pub fn zero_objects(&self) -> Vec<Arc<Algebra>> {
        match &self.family {
            Family::Coslice { modulus } => (1..=*modulus)
                .filter(|h| modulus % h == 0)
                .map(|h| Arc::new(cyclic_group(h, 1 % h, *modulus).expect("cyclic")))
                .collect(),
            _ => alloc::vec![self.terminal(), self.initial()],
        }
    }

    /// `ε_A: Z(A) → A`.
    pub fn zero_part(&self, a: &Arc<Algebra>) -> Morphism {
        if self.is_dual() {
            if a.size() == 0 {
                Morphism::identity(a)
            } else {
                let p = self.initial();
                Morphism::unchecked(a.clone(), p, alloc::vec![0; a.size()])
            }
        } else {
            let (z, incl) = subalgebra_generated(a, &[]);
            let z = Arc::new(z.with_name(format!("Z({})", a.name())));
            Morphism::unchecked(z, a.clone(), incl.map().to_vec())
        }
    }

    pub fn is_zero(&self, a: &Arc<Algebra>) -> bool {
        if self.is_dual() {
            a.size() <= 1
        } else {
            subalgebra_generated(a, &[]).0.size() == a.size()
        }
    }

    /// Whether `f` factors through a member of Z.
    pub fn is_trivial(&self, f: &Morphism) -> bool {
        if self.is_dual() {
            f.image_set().len() <= 1
        } else {
            let (_, incl) = subalgebra_generated(f.target(), &[]);
            f.map().iter().all(|y| incl.map().contains(y))
        }
    }

    /// The Z-kernel, built directly: the preimage of `Z(B)` in a variety, the
    /// quotient `A/f(B)` of M-sets under the dual convention.
    pub fn zker(&self, f: &Morphism) -> ZKernelWitness {
        let a = self.dom(f);
        let b = self.cod(f);
        let eps = self.zero_part(b);
        let name = format!("K[{}->{}]", a.name(), b.name());
        if self.is_dual() {
            let img = f.image_set();
            let keys: Vec<usize> =
                (0..a.size()).map(|x| if img.binary_search(&x).is_ok() { 0 } else { x + 1 }).collect();
            let (k_obj, k) = quotient(a, &Congruence::from_keys(&keys));
            let k_obj = Arc::new(k_obj.with_name(name));
            let k = Morphism::unchecked(a.clone(), k_obj.clone(), k.map().to_vec());
            let chi_map = if b.size() == 0 { Vec::new() } else { alloc::vec![k.apply(img[0])] };
            let chi = Morphism::unchecked(eps.target().clone(), k_obj, chi_map);
            ZKernelWitness { kernel: k, chi, zero_part: eps }
        } else {
            let zb = eps.map();
            let elems: Vec<Elem> = (0..a.size()).filter(|&x| zb.contains(&f.apply(x))).collect();
            let (k_obj, k) = subalgebra_on(a, &elems, &name).expect("preimage of a subalgebra");
            let chi_map = elems.iter().map(|&x| zb.iter().position(|&z| z == f.apply(x)).unwrap()).collect();
            let chi = Morphism::unchecked(k_obj, eps.source().clone(), chi_map);
            ZKernelWitness { kernel: k, chi, zero_part: eps }
        }
    }

    /// The Z-kernel as the generic pullback of `ε_B` along `f`.
    pub fn zker_by_pullback(&self, f: &Morphism) -> Result<ZKernelWitness, Error> {
        let eps = self.zero_part(self.cod(f));
        let pb = self.pullback(f, &eps)?;
        Ok(ZKernelWitness { kernel: pb.left, chi: pb.right, zero_part: eps })
    }

    /// The quotient of `a` in Z through which every arrow from `a` into Z factors.
    pub fn max_quotient_in_z(&self, a: &Arc<Algebra>) -> Option<Morphism> {
        let zs = self.zero_objects();
        let candidates: Vec<Morphism> = zs.iter().flat_map(|z| self.homs(a, z)).collect();
        candidates
            .iter()
            .find(|x| {
                candidates.iter().all(|c| {
                    self.homs(self.cod(x), self.cod(c))
                        .iter()
                        .any(|phi| self.compose(phi, x).map(|g| g == *c).unwrap_or(false))
                })
            })
            .cloned()
    }

    /// The Z-cokernel as the pushout of the maximum quotient of the domain.
    pub fn zcoker(&self, f: &Morphism) -> Option<ZCokernelWitness> {
        let x = self.max_quotient_in_z(self.dom(f))?;
        let (q, z) = self.pushout_of_regular_epi(&x, f).ok()?;
        Some(ZCokernelWitness { cokernel: q, quotient: x, z })
    }

    /// The Z-cokernel found by searching all quotients of the codomain for the
    /// least one killing `f`.
    pub fn zcoker_by_search(&self, f: &Morphism) -> Option<Morphism> {
        let killing: Vec<Morphism> = self
            .quotients(self.cod(f))
            .into_iter()
            .filter(|q| self.compose(q, f).map(|g| self.is_trivial(&g)).unwrap_or(false))
            .collect();
        killing.iter().find(|q| killing.iter().all(|c| self.factor_through_epi(q, c).is_some())).cloned()
    }

    /// `v_A: A → V(A)`, the unique arrow to the terminal object.
    pub fn terminal_map(&self, a: &Arc<Algebra>) -> Morphism {
        let t = self.terminal();
        if self.is_dual() {
            Morphism::unchecked(t, a.clone(), Vec::new())
        } else {
            Morphism::unchecked(a.clone(), t, alloc::vec![0; a.size()])
        }
    }

    /// The unique `d` with `d ∘ e = g`, for a regular epi `e`.
    pub fn factor_through_epi(&self, e: &Morphism, g: &Morphism) -> Option<Morphism> {
        if self.is_dual() {
            lift_into_injection(e, g)
        } else {
            lift_through_surjection(e, g)
        }
    }

    /// The unique `d` with `m ∘ d = g`, for a mono `m`.
    pub fn factor_through_mono(&self, m: &Morphism, g: &Morphism) -> Option<Morphism> {
        if self.is_dual() {
            lift_through_surjection(m, g)
        } else {
            lift_into_injection(m, g)
        }
    }

    /// Every `d` with `d ∘ e = g`, by hom search.
    pub fn fillers_after(&self, e: &Morphism, g: &Morphism) -> Vec<Morphism> {
        self.homs(self.cod(e), self.cod(g))
            .into_iter()
            .filter(|d| self.compose(d, e).map(|c| c == *g).unwrap_or(false))
            .collect()
    }

    /// An iso `φ` with `k2 ∘ φ = k1`.
    pub fn iso_over(&self, k1: &Morphism, k2: &Morphism) -> Option<Morphism> {
        if self.cod(k1) != self.cod(k2) {
            return None;
        }
        if self.is_mono(k2) {
            return self.factor_through_mono(k2, k1).filter(|p| self.is_iso(p));
        }
        self.homs(self.dom(k1), self.dom(k2))
            .into_iter()
            .find(|p| self.is_iso(p) && self.compose(k2, p).map(|c| c == *k1).unwrap_or(false))
    }

    /// An iso `φ` with `φ ∘ q1 = q2`.
    pub fn iso_under(&self, q1: &Morphism, q2: &Morphism) -> Option<Morphism> {
        if self.dom(q1) != self.dom(q2) {
            return None;
        }
        if self.is_regular_epi(q1) {
            return self.factor_through_epi(q1, q2).filter(|p| self.is_iso(p));
        }
        self.fillers_after(q1, q2).into_iter().find(|p| self.is_iso(p))
    }

    /// `Z(f): Z(A) → Z(B)`.
    pub fn z_functor(&self, f: &Morphism) -> Morphism {
        let ea = self.zero_part(self.dom(f));
        let eb = self.zero_part(self.cod(f));
        let g = self.compose(f, &ea).expect("composable");
        self.factor_through_mono(&eb, &g).expect("zero parts are coreflective")
    }

    pub fn is_z_inverted(&self, f: &Morphism) -> bool {
        self.is_iso(&self.z_functor(f))
    }
}

fn same_maps(mut a: Vec<Vec<Elem>>, mut b: Vec<Vec<Elem>>) -> bool {
    a.sort();
    b.sort();
    a == b
}

/// Checks that `k` is a Z-kernel of `f` against every object in `objects`.
///
/// Returns the number of test arrows examined.
pub fn check_zker_universal(
    amb: &Ambient,
    f: &Morphism,
    k: &Morphism,
    objects: &[Arc<Algebra>],
) -> Result<usize, Counterexample> {
    let fk = amb.compose(f, k).map_err(|_| Counterexample::new("kernel not composable"))?;
    if !amb.is_trivial(&fk) {
        return Err(Counterexample::new("f ∘ k is not trivial").with_arrows(&[f, k]));
    }
    let (a, kobj) = (amb.dom(f), amb.dom(k));
    let mut tested = 0;
    for e_obj in objects {
        let killed: Vec<Vec<Elem>> = amb
            .homs(e_obj, a)
            .into_iter()
            .filter(|e| amb.compose(f, e).map(|c| amb.is_trivial(&c)).unwrap_or(false))
            .map(|e| e.map().to_vec())
            .collect();
        let through: Vec<Vec<Elem>> =
            amb.homs(e_obj, kobj).iter().map(|phi| amb.compose(k, phi).expect("composable").map().to_vec()).collect();
        tested += killed.len();
        let mut dedup = through.clone();
        dedup.sort();
        dedup.dedup();
        if dedup.len() != through.len() {
            return Err(Counterexample::new("factorization through the kernel is not unique")
                .with_objects(&[e_obj])
                .with_arrows(&[f, k]));
        }
        if !same_maps(killed, through) {
            return Err(Counterexample::new("an arrow killed by f does not factor through the kernel")
                .with_objects(&[e_obj])
                .with_arrows(&[f, k]));
        }
    }
    Ok(tested)
}

/// Checks that `q` is a Z-cokernel of `f` against every object in `objects`.
pub fn check_zcoker_universal(
    amb: &Ambient,
    f: &Morphism,
    q: &Morphism,
    objects: &[Arc<Algebra>],
) -> Result<usize, Counterexample> {
    let qf = amb.compose(q, f).map_err(|_| Counterexample::new("cokernel not composable"))?;
    if !amb.is_trivial(&qf) {
        return Err(Counterexample::new("q ∘ f is not trivial").with_arrows(&[f, q]));
    }
    let (b, qobj) = (amb.cod(f), amb.cod(q));
    let mut tested = 0;
    for p_obj in objects {
        let killing: Vec<Vec<Elem>> = amb
            .homs(b, p_obj)
            .into_iter()
            .filter(|p| amb.compose(p, f).map(|c| amb.is_trivial(&c)).unwrap_or(false))
            .map(|p| p.map().to_vec())
            .collect();
        let through: Vec<Vec<Elem>> =
            amb.homs(qobj, p_obj).iter().map(|phi| amb.compose(phi, q).expect("composable").map().to_vec()).collect();
        tested += killing.len();
        let mut dedup = through.clone();
        dedup.sort();
        dedup.dedup();
        if dedup.len() != through.len() {
            return Err(Counterexample::new("factorization through the cokernel is not unique")
                .with_objects(&[p_obj])
                .with_arrows(&[f, q]));
        }
        if !same_maps(killing, through) {
            return Err(Counterexample::new("an arrow killing f does not factor through the cokernel")
                .with_objects(&[p_obj])
                .with_arrows(&[f, q]));
        }
    }
    Ok(tested)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::abelian_group;

    fn arc(a: Algebra) -> Arc<Algebra> {
        Arc::new(a)
    }

    #[test]
    fn coslice_zero_part_and_triviality() {
        let amb = Ambient::new(Family::Coslice { modulus: 2 });
        let z2 = arc(cyclic_group(2, 1, 2).unwrap());
        let z4 = arc(cyclic_group(4, 2, 2).unwrap());
        let f = Morphism::new(z2, z4.clone(), alloc::vec![0, 2]).unwrap();
        assert!(amb.is_trivial(&f));
        assert_eq!(amb.zero_part(&z4).map(), &[0, 2]);
        assert!(!amb.is_trivial(&Morphism::identity(&z4)));
    }

    #[test]
    fn coslice_zker_of_projection() {
        let amb = Ambient::new(Family::Coslice { modulus: 2 });
        let a = arc(abelian_group(&[4, 3], &[2, 0], 2).unwrap());
        let b = arc(cyclic_group(4, 2, 2).unwrap());
        let map = (0..12).map(|i| i / 3).collect();
        let f = Morphism::new(a.clone(), b, map).unwrap();
        let w = amb.zker(&f);
        let labels: Vec<&str> = w.kernel.map().iter().map(|&x| a.label(x)).collect();
        assert_eq!(labels, ["(0,0)", "(0,1)", "(0,2)", "(2,0)", "(2,1)", "(2,2)"]);
        assert_eq!(w.kernel.source().basepoint(), 3);
    }

    #[test]
    fn l2_has_terminal_max_quotient() {
        let amb = Ambient::new(Family::Mv);
        let l2 = arc(lukasiewicz_chain(2));
        let q = amb.max_quotient_in_z(&l2).unwrap();
        assert_eq!(q.target().size(), 1);
        let (p, _, _) = crate::morphisms::product(&amb.initial(), &amb.initial()).unwrap();
        assert!(amb.max_quotient_in_z(&p).is_none());
    }

    #[test]
    fn three_chain_max_quotient() {
        let amb = Ambient::new(Family::Heyting);
        let c3 = arc(heyting_chain(3));
        assert_eq!(amb.max_quotient_in_z(&c3).unwrap().map(), &[0, 1, 1]);
    }

    #[test]
    fn zcoker_of_zero_part_is_identity() {
        let amb = Ambient::new(Family::Mv);
        let l2 = arc(lukasiewicz_chain(2));
        let eps = amb.zero_part(&l2);
        let w = amb.zcoker(&eps).unwrap();
        assert!(w.cokernel.is_bijective());
    }

    #[test]
    fn terminal_map_is_idempotent() {
        let amb = Ambient::new(Family::Coslice { modulus: 2 });
        let z4 = arc(cyclic_group(4, 2, 2).unwrap());
        let v = amb.terminal_map(&z4);
        assert_eq!(v.target().size(), 1);
        assert_eq!(amb.terminal_map(v.target()).target().size(), 1);
    }
}
