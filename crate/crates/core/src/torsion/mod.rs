//! Torsion theories in the four ambient categories, with the exact sequence
//! `T(A) → A → F(A)` of every object.

mod coslice;
mod heyting;
mod mset;
mod mv;

use alloc::format;
use alloc::sync::Arc;

pub use coslice::{coslice_divisible_part, coslice_reflect, coslice_torsion_part};
pub use heyting::{heyting_pseudo_det_part, heyting_regulars, heyting_unit};
pub use mset::{mset_contract, mset_fix};
pub use mv::{mv_ideal_congruence, mv_perfect_part, mv_radical, mv_semisimple_quotient};

use crate::error::Error;
use crate::morphisms::{subalgebra_generated, subalgebra_on, Morphism};
use crate::structures::{Algebra, Family, Monoid};
use crate::zeroclass::{Ambient, ZCokernelWitness, ZKernelWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoryTag {
    /// perfect / semisimple MV-algebras
    Mv,
    /// semisimple / perfect MV-algebras
    MvSwapped,
    /// pseudo-deterministic / Boolean Heyting algebras
    Heyting,
    /// M-sets under the dual convention
    MSet,
    /// `ℤ_m`-pointed abelian groups
    Coslice,
}

impl TheoryTag {
    pub fn name(self) -> &'static str {
        match self {
            TheoryTag::Mv => "mv",
            TheoryTag::MvSwapped => "mv-swapped",
            TheoryTag::Heyting => "heyting",
            TheoryTag::MSet => "mset",
            TheoryTag::Coslice => "coslice",
        }
    }
}

/// `T(A) ↪ A ↠ F(A)` with both legs certified as Z-kernel and Z-cokernel.
#[derive(Clone, Debug)]
pub struct ZExactSequence {
    pub object: Arc<Algebra>,
    pub t: Morphism,
    pub eta: Morphism,
    pub kernel: ZKernelWitness,
    pub cokernel: ZCokernelWitness,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorsionTheory {
    tag: TheoryTag,
    ambient: Ambient,
}

impl TorsionTheory {
    pub fn mv() -> Self {
        TorsionTheory { tag: TheoryTag::Mv, ambient: Ambient::new(Family::Mv) }
    }

    /// The pair with the roles of perfect and semisimple exchanged.
    pub fn mv_swapped() -> Self {
        TorsionTheory { tag: TheoryTag::MvSwapped, ambient: Ambient::new(Family::Mv) }
    }

    pub fn heyting() -> Self {
        TorsionTheory { tag: TheoryTag::Heyting, ambient: Ambient::new(Family::Heyting) }
    }

    pub fn mset(monoid: Arc<Monoid>) -> Self {
        TorsionTheory { tag: TheoryTag::MSet, ambient: Ambient::new(Family::MSet(monoid)) }
    }

    pub fn coslice(modulus: u64) -> Self {
        TorsionTheory { tag: TheoryTag::Coslice, ambient: Ambient::new(Family::Coslice { modulus }) }
    }

    pub fn tag(&self) -> TheoryTag {
        self.tag
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    /// Whether the sequence comes from a formula rather than a search.
    pub fn has_closed_form(&self) -> bool {
        self.tag != TheoryTag::MvSwapped
    }

    fn check(&self, a: &Algebra) -> Result<(), Error> {
        if self.ambient.accepts(a) {
            Ok(())
        } else {
            Err(Error::FamilyMismatch)
        }
    }

    pub fn is_torsion(&self, a: &Arc<Algebra>) -> bool {
        match self.tag {
            TheoryTag::Mv => is_perfect(a),
            TheoryTag::MvSwapped => is_semisimple(a),
            TheoryTag::Heyting => (0..a.size()).all(|x| a.hneg(x) == a.bottom() || a.hneg(x) == a.top()),
            TheoryTag::MSet => mset_fix(a).len() <= 1,
            TheoryTag::Coslice => {
                let d = coslice_divisible_part(a, a.modulus().expect("coslice"));
                subalgebra_generated(a, &d).0.size() == a.size()
            }
        }
    }

    pub fn is_torsion_free(&self, a: &Arc<Algebra>) -> bool {
        match self.tag {
            TheoryTag::Mv => is_semisimple(a),
            TheoryTag::MvSwapped => is_perfect(a),
            TheoryTag::Heyting => (0..a.size()).all(|x| a.hneg(a.hneg(x)) == x),
            TheoryTag::MSet => mset_fix(a).len() == a.size(),
            TheoryTag::Coslice => coslice_divisible_part(a, a.modulus().expect("coslice")) == [0],
        }
    }

    /// The coreflection `t_A: T(A) → A` as an ambient arrow.
    pub fn coreflect(&self, a: &Arc<Algebra>) -> Result<Morphism, Error> {
        self.check(a)?;
        Ok(match self.tag {
            TheoryTag::Mv => mv_perfect_part(a).1,
            TheoryTag::Heyting => heyting_pseudo_det_part(a)?.1,
            TheoryTag::MSet => mset_contract(a).1,
            TheoryTag::Coslice => coslice_torsion_part(a).1,
            TheoryTag::MvSwapped => self.decompose_by_search(a)?.0,
        })
    }

    /// The reflection `η_A: A → F(A)` as an ambient arrow.
    pub fn reflect(&self, a: &Arc<Algebra>) -> Result<Morphism, Error> {
        self.check(a)?;
        Ok(match self.tag {
            TheoryTag::Mv => mv_semisimple_quotient(a).1,
            TheoryTag::Heyting => heyting_unit(a)?,
            TheoryTag::MSet => {
                let fix = mset_fix(a);
                let (_, incl) = subalgebra_on(a, &fix, &format!("Fix({})", a.name()))
                    .ok_or_else(|| Error::Internal("fixed points are not closed".into()))?;
                incl
            }
            TheoryTag::Coslice => coslice_reflect(a).1,
            TheoryTag::MvSwapped => self.decompose_by_search(a)?.1,
        })
    }

    /// The exact sequence of `a`, checked against the Z-kernel of `η` and the
    /// Z-cokernel of `t`.
    pub fn decompose(&self, a: &Arc<Algebra>) -> Result<ZExactSequence, Error> {
        self.check(a)?;
        let (t, eta) =
            if self.has_closed_form() { (self.coreflect(a)?, self.reflect(a)?) } else { self.decompose_by_search(a)? };
        let amb = &self.ambient;
        let kernel = amb.zker(&eta);
        if amb.iso_over(&t, &kernel.kernel).is_none() {
            return Err(Error::Internal(format!("t is not a Z-kernel of η at {}", a.name())));
        }
        let cokernel = amb.zcoker(&t).ok_or_else(|| Error::Internal(format!("no Z-cokernel of t at {}", a.name())))?;
        if amb.iso_under(&eta, &cokernel.cokernel).is_none() {
            return Err(Error::Internal(format!("η is not a Z-cokernel of t at {}", a.name())));
        }
        if !self.is_torsion(amb.dom(&t)) || !self.is_torsion_free(amb.cod(&eta)) {
            return Err(Error::Internal(format!("sequence at {} leaves T × F", a.name())));
        }
        Ok(ZExactSequence { object: a.clone(), t, eta, kernel, cokernel })
    }

    /// Looks for an exact sequence among all regular quotients of `a`.
    pub fn decompose_by_search(&self, a: &Arc<Algebra>) -> Result<(Morphism, Morphism), Error> {
        self.check(a)?;
        let amb = &self.ambient;
        for q in amb.quotients(a) {
            if !self.is_torsion_free(amb.cod(&q)) {
                continue;
            }
            let k = amb.zker(&q).kernel;
            if !self.is_torsion(amb.dom(&k)) {
                continue;
            }
            if let Some(c) = amb.zcoker(&k) {
                if amb.iso_under(&q, &c.cokernel).is_some() {
                    return Ok((k, q));
                }
            }
        }
        Err(Error::NoExactSequence(a.name().into()))
    }

    /// `(T(f), F(f))` for an ambient arrow `f`.
    pub fn functorial_action(&self, f: &Morphism) -> Result<(Morphism, Morphism), Error> {
        let amb = &self.ambient;
        let sa = self.decompose(amb.dom(f))?;
        let sb = self.decompose(amb.cod(f))?;
        let tf = amb
            .factor_through_mono(&sb.t, &amb.compose(f, &sa.t)?)
            .ok_or_else(|| Error::Internal("T(f) does not exist".into()))?;
        let ff = amb
            .factor_through_epi(&sa.eta, &amb.compose(&sb.eta, f)?)
            .ok_or_else(|| Error::Internal("F(f) does not exist".into()))?;
        Ok((tf, ff))
    }
}

impl ZExactSequence {
    pub fn torsion_part(&self, amb: &Ambient) -> Arc<Algebra> {
        amb.dom(&self.t).clone()
    }

    pub fn free_part(&self, amb: &Ambient) -> Arc<Algebra> {
        amb.cod(&self.eta).clone()
    }
}

fn is_perfect(a: &Algebra) -> bool {
    let rad = mv_radical(a);
    (0..a.size()).all(|x| rad.contains(&x) || rad.contains(&a.mv_neg(x)))
}

fn is_semisimple(a: &Algebra) -> bool {
    mv_radical(a) == [0]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structures::{
        abelian_group, boolean_lattice, cyclic_group, generate_catalog, heyting_chain, lukasiewicz_chain,
        small_monoids, CatalogKind,
    };
    use alloc::vec::Vec;

    fn sweep(theory: &TorsionTheory, kind: CatalogKind, bound: usize) {
        for a in generate_catalog(&kind, bound).unwrap().instances {
            let seq = theory.decompose(&a).unwrap_or_else(|e| panic!("{}: {e}", a.name()));
            let amb = theory.ambient();
            assert_eq!(theory.is_torsion(&a), amb.is_iso(&seq.t), "{}", a.name());
            assert_eq!(theory.is_torsion_free(&a), amb.is_iso(&seq.eta), "{}", a.name());
        }
    }

    #[test]
    fn mv_catalog_sequences() {
        sweep(&TorsionTheory::mv(), CatalogKind::Mv, 8);
    }

    #[test]
    fn heyting_catalog_sequences() {
        sweep(&TorsionTheory::heyting(), CatalogKind::Heyting, 7);
    }

    #[test]
    fn mset_catalog_sequences() {
        for m in small_monoids(2) {
            sweep(&TorsionTheory::mset(m.clone()), CatalogKind::MSet(m), 4);
        }
    }

    #[test]
    fn coslice_catalog_sequences() {
        for modulus in [1, 2, 3, 4, 6] {
            sweep(&TorsionTheory::coslice(modulus), CatalogKind::Coslice { modulus }, 12);
        }
    }

    #[test]
    fn finite_chains_are_semisimple() {
        let th = TorsionTheory::mv();
        for n in 0..6 {
            let l = Arc::new(lukasiewicz_chain(n));
            assert_eq!(mv_radical(&l), [0]);
            assert!(th.is_torsion_free(&l));
            assert_eq!(th.is_torsion(&l), n <= 1);
        }
    }

    #[test]
    fn heyting_three_chain() {
        let th = TorsionTheory::heyting();
        let c3 = Arc::new(heyting_chain(3));
        assert!(th.is_torsion(&c3));
        assert!(!th.is_torsion_free(&c3));
        assert_eq!(th.reflect(&c3).unwrap().map(), [0, 1, 1]);
        let b4 = Arc::new(boolean_lattice(2));
        assert!(th.is_torsion_free(&b4));
        assert!(!th.is_torsion(&b4));
    }

    #[test]
    fn regulars_of_downsets_are_boolean() {
        for h in generate_catalog(&CatalogKind::Heyting, 8).unwrap().instances {
            let (b, _) = heyting_regulars(&h).unwrap();
            assert!(b.size().is_power_of_two());
            assert!(crate::structures::validate(&b).is_valid());
            assert!(TorsionTheory::heyting().is_torsion_free(&b));
        }
    }

    /// `⋂ₖ mᵏA` computed from the whole chain rather than by stabilization.
    fn divisible_oracle(a: &Algebra, m: u64) -> Vec<usize> {
        let mut power = 1u64;
        let mut keep: Vec<bool> = alloc::vec![true; a.size()];
        for _ in 0..=a.size() {
            let img: Vec<usize> = (0..a.size()).map(|x| a.gmul(power, x)).collect();
            for (y, k) in keep.iter_mut().enumerate() {
                *k &= img.contains(&y);
            }
            power = power.wrapping_mul(m) % (a.size() as u64 * 64).max(1);
        }
        (0..a.size()).filter(|&y| keep[y]).collect()
    }

    #[test]
    fn divisible_part_matches_chain_intersection() {
        for modulus in [2, 3, 4, 6] {
            for a in generate_catalog(&CatalogKind::Coslice { modulus }, 16).unwrap().instances {
                assert_eq!(coslice_divisible_part(&a, modulus), divisible_oracle(&a, modulus), "{}", a.name());
            }
        }
    }

    #[test]
    fn z4_plus_z3_splits() {
        let a = Arc::new(abelian_group(&[4, 3], &[2, 0], 2).unwrap());
        let th = TorsionTheory::coslice(2);
        let seq = th.decompose(&a).unwrap();
        assert_eq!(seq.t.source().size(), 6);
        // D₂ = 0 ⊕ ℤ₃, so F is (ℤ₄, 2)
        let f = seq.eta.target();
        assert_eq!(f.size(), 4);
        assert_eq!(f.label(f.basepoint()), "[(2,0)]");
        let z6 = Arc::new(cyclic_group(6, 3, 2).unwrap());
        assert_eq!(coslice_divisible_part(&z6, 2).len(), 3);
    }

    #[test]
    fn mset_fix_and_contraction() {
        let z2 = small_monoids(2).into_iter().find(|m| m.order() == 2 && m.mul(1, 1) == 0).unwrap();
        let x = Arc::new(
            Algebra::mset(
                "X",
                z2.clone(),
                ["p", "q", "r", "s"].map(Into::into).to_vec(),
                &[alloc::vec![0, 1, 2, 3], alloc::vec![0, 1, 3, 2]],
            )
            .unwrap(),
        );
        assert_eq!(mset_fix(&x), [0, 1]);
        let th = TorsionTheory::mset(z2);
        let seq = th.decompose(&x).unwrap();
        assert_eq!(seq.t.target().size(), 3);
        assert_eq!(seq.eta.source().size(), 2);
    }

    #[test]
    fn swapped_mv_has_no_sequence_for_square() {
        let th = TorsionTheory::mv_swapped();
        let l1 = Arc::new(lukasiewicz_chain(1));
        let (sq, _, _) = crate::morphisms::product(&l1, &l1).unwrap();
        assert!(matches!(th.decompose(&sq), Err(Error::NoExactSequence(_))));
        for n in 0..4 {
            assert!(th.decompose(&Arc::new(lukasiewicz_chain(n))).is_ok());
        }
    }

    #[test]
    fn functorial_action_is_identity_on_identity() {
        let th = TorsionTheory::coslice(2);
        let a = Arc::new(abelian_group(&[4, 3], &[2, 0], 2).unwrap());
        let (tf, ff) = th.functorial_action(&Morphism::identity(&a)).unwrap();
        assert!(tf.map().iter().enumerate().all(|(i, &y)| i == y));
        assert!(ff.map().iter().enumerate().all(|(i, &y)| i == y));
    }
}
