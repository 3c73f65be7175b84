//! The Galois structure of a torsion theory and the classification of
//! extensions as trivial, normal or central.

use alloc::format;

use crate::error::Error;
use crate::factorization::{check_condition, Condition};
use crate::morphisms::Morphism;
use crate::structures::Catalog;
use crate::torsion::{TheoryTag, TorsionTheory};
use crate::zeroclass::Ambient;

/// A torsion theory whose reflector passed (M') and (S) on a catalog.
#[derive(Clone, Debug)]
pub struct GaloisContext {
    theory: TorsionTheory,
    catalog_bound: usize,
    protoadditive: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtensionTag {
    Trivial,
    Normal,
    Central,
    NonCentral,
}

impl ExtensionTag {
    pub fn name(self) -> &'static str {
        match self {
            ExtensionTag::Trivial => "trivial",
            ExtensionTag::Normal => "normal",
            ExtensionTag::Central => "central",
            ExtensionTag::NonCentral => "non-central",
        }
    }
}

#[derive(Clone, Debug)]
pub struct ExtensionClass {
    pub tag: ExtensionTag,
    pub descent: bool,
    pub trivial: bool,
    /// `None` off descent morphisms
    pub normal: Option<bool>,
    pub central: Option<bool>,
    /// `A → B ×_{F(B)} F(A)` when it is an isomorphism
    pub comparison: Option<Morphism>,
    /// `K[f] → A`
    pub kernel: Morphism,
    pub kernel_torsion_free: bool,
    /// the kernel pair projections, when computed
    pub kernel_pair: Option<(Morphism, Morphism)>,
}

impl GaloisContext {
    /// Checks (M') and (S), and records (P), over `catalog`.
    pub fn new(theory: TorsionTheory, catalog: &Catalog) -> Result<Self, Error> {
        for c in [Condition::MPrime, Condition::S] {
            let r = check_condition(&theory, c, catalog)?;
            if !r.verdict {
                let why = r.counterexample.map(|cx| cx.reason).unwrap_or_default();
                return Err(Error::NotAdmissible(format!("condition {} fails: {why}", c.name())));
            }
        }
        let protoadditive = check_condition(&theory, Condition::P, catalog)?.verdict;
        Ok(GaloisContext { theory, catalog_bound: catalog.size_bound, protoadditive })
    }

    pub fn theory(&self) -> &TorsionTheory {
        &self.theory
    }

    pub fn catalog_bound(&self) -> usize {
        self.catalog_bound
    }

    pub fn is_protoadditive(&self) -> bool {
        self.protoadditive
    }

    fn amb(&self) -> &Ambient {
        self.theory.ambient()
    }

    /// The comparison `A → B ×_{F(B)} F(A)` into the pullback of `F(f)` along `η_B`.
    pub fn comparison(&self, f: &Morphism) -> Result<Morphism, Error> {
        let amb = self.amb();
        let (a, b) = (amb.dom(f), amb.cod(f));
        let eta_a = self.theory.reflect(a)?;
        let eta_b = self.theory.reflect(b)?;
        let ff = amb
            .factor_through_epi(&eta_a, &amb.compose(&eta_b, f)?)
            .ok_or_else(|| Error::Internal("η is not natural".into()))?;
        let pb = amb.pullback(&ff, &eta_b)?;
        amb.induce_into_pullback(&pb, &eta_a, f).ok_or_else(|| Error::Internal("unit square does not commute".into()))
    }

    pub fn is_trivial_extension(&self, f: &Morphism) -> Result<bool, Error> {
        Ok(self.amb().is_iso(&self.comparison(f)?))
    }

    fn kernel_pair(&self, f: &Morphism) -> Result<(Morphism, Morphism), Error> {
        let pb = self.amb().pullback(f, f)?;
        Ok((pb.left, pb.right))
    }

    /// Both kernel pair projections are trivial extensions.
    pub fn is_normal_extension(&self, f: &Morphism) -> Result<bool, Error> {
        if !self.amb().is_descent(f) {
            return Err(Error::NotDescent);
        }
        let (p1, p2) = self.kernel_pair(f)?;
        Ok(self.is_trivial_extension(&p1)? && self.is_trivial_extension(&p2)?)
    }

    /// `K[f]` is torsion-free.
    pub fn is_central_extension(&self, f: &Morphism) -> Result<bool, Error> {
        let amb = self.amb();
        if !amb.is_descent(f) {
            return Err(Error::NotDescent);
        }
        Ok(self.theory.is_torsion_free(amb.dom(&amb.zker(f).kernel)))
    }

    /// The strongest class of `f`, with the two central-extension routes
    /// checked against each other.
    pub fn classify_extension(&self, f: &Morphism) -> Result<ExtensionClass, Error> {
        let amb = self.amb();
        if !amb.accepts(f.source()) {
            return Err(Error::FamilyMismatch);
        }
        let comparison = self.comparison(f)?;
        let trivial = amb.is_iso(&comparison);
        let kernel = amb.zker(f).kernel;
        let kernel_torsion_free = self.theory.is_torsion_free(amb.dom(&kernel));
        let descent = amb.is_descent(f);
        let mut class = ExtensionClass {
            tag: if trivial { ExtensionTag::Trivial } else { ExtensionTag::NonCentral },
            descent,
            trivial,
            normal: None,
            central: None,
            comparison: trivial.then_some(comparison),
            kernel,
            kernel_torsion_free,
            kernel_pair: None,
        };
        if !descent {
            return if trivial { Ok(class) } else { Err(Error::NotDescent) };
        }
        let (p1, p2) = self.kernel_pair(f)?;
        let normal = self.is_trivial_extension(&p1)? && self.is_trivial_extension(&p2)?;
        let central = kernel_torsion_free;
        if trivial && !normal {
            return Err(Error::Internal("trivial extension with non-trivial kernel pair".into()));
        }
        if self.protoadditive && normal != central {
            return Err(Error::Internal(format!(
                "kernel pair route says {normal}, K[f] route says {central} for {} → {}",
                amb.dom(f).name(),
                amb.cod(f).name()
            )));
        }
        if self.theory.tag() == TheoryTag::Heyting && central && !trivial {
            return Err(Error::Internal("central Heyting extension that is not trivial".into()));
        }
        class.normal = Some(normal);
        class.central = Some(central);
        class.kernel_pair = Some((p1, p2));
        if !trivial {
            class.tag = if normal {
                ExtensionTag::Normal
            } else if central {
                ExtensionTag::Central
            } else {
                ExtensionTag::NonCentral
            };
        }
        Ok(class)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::HomTable;
    use crate::structures::Algebra;
    use crate::structures::{abelian_group, cyclic_group, generate_catalog, heyting_chain, small_monoids, CatalogKind};
    use alloc::sync::Arc;
    use alloc::vec;

    fn coslice_ctx() -> GaloisContext {
        GaloisContext::new(
            TorsionTheory::coslice(2),
            &generate_catalog(&CatalogKind::Coslice { modulus: 2 }, 8).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn worked_coslice_extensions() {
        let ctx = coslice_ctx();
        let z4 = Arc::new(cyclic_group(4, 2, 2).unwrap());
        let z2 = Arc::new(cyclic_group(2, 0, 2).unwrap());
        let f = Morphism::new(z4.clone(), z2, vec![0, 1, 0, 1]).unwrap();
        assert_eq!(ctx.classify_extension(&f).unwrap().tag, ExtensionTag::Trivial);
        let a = Arc::new(abelian_group(&[4, 3], &[2, 0], 2).unwrap());
        let proj = Morphism::new(a.clone(), z4, (0..12).map(|x| x / 3).collect()).unwrap();
        let c = ctx.classify_extension(&proj).unwrap();
        assert_eq!(c.tag, ExtensionTag::NonCentral);
        assert_eq!(c.kernel.source().size(), 6);
        assert!(!ctx.is_trivial_extension(&proj).unwrap());
    }

    #[test]
    fn no_coslice_map_onto_pointed_two() {
        let z4 = Arc::new(cyclic_group(4, 2, 2).unwrap());
        let z2 = Arc::new(cyclic_group(2, 1, 2).unwrap());
        assert!(crate::morphisms::enumerate_homs(&z4, &z2).unwrap().is_empty());
    }

    #[test]
    fn isos_are_trivial_and_non_descent_is_rejected() {
        let ctx = coslice_ctx();
        let z4 = Arc::new(cyclic_group(4, 2, 2).unwrap());
        assert_eq!(ctx.classify_extension(&Morphism::identity(&z4)).unwrap().tag, ExtensionTag::Trivial);
        let z2 = Arc::new(cyclic_group(2, 1, 2).unwrap());
        let incl = Morphism::new(z2, z4, vec![0, 2]).unwrap();
        assert_eq!(ctx.is_central_extension(&incl), Err(Error::NotDescent));
    }

    #[test]
    fn heyting_unit_of_three_chain_is_not_normal() {
        let ctx =
            GaloisContext::new(TorsionTheory::heyting(), &generate_catalog(&CatalogKind::Heyting, 5).unwrap()).unwrap();
        let c3 = Arc::new(heyting_chain(3));
        let eta = ctx.theory().reflect(&c3).unwrap();
        assert!(!ctx.is_normal_extension(&eta).unwrap());
        assert!(!ctx.is_central_extension(&eta).unwrap());
        assert_eq!(ctx.classify_extension(&eta).unwrap().tag, ExtensionTag::NonCentral);
    }

    #[test]
    fn mset_central_iff_fixed_or_image() {
        let idem = small_monoids(2).into_iter().find(|m| m.order() == 2 && m.mul(1, 1) == 1).unwrap();
        let cat = generate_catalog(&CatalogKind::MSet(idem.clone()), 3).unwrap();
        let ctx = GaloisContext::new(TorsionTheory::mset(idem.clone()), &cat).unwrap();
        // Y = {y0 fixed} ⊔ f(X), X = {x, x'} with e·x = x'
        let x = Arc::new(
            Algebra::mset("X", idem.clone(), ["x", "x'"].map(Into::into).to_vec(), &[vec![0, 1], vec![1, 1]]).unwrap(),
        );
        let y = Arc::new(
            Algebra::mset(
                "Y",
                idem.clone(),
                ["y0", "x", "x'"].map(Into::into).to_vec(),
                &[vec![0, 1, 2], vec![0, 2, 2]],
            )
            .unwrap(),
        );
        let f = Morphism::new(x.clone(), y.clone(), vec![1, 2]).unwrap();
        assert_eq!(ctx.is_central_extension(&f), Ok(true));
        // adding a moving point outside the image breaks it
        let w = Arc::new(
            Algebra::mset(
                "W",
                idem,
                ["x", "x'", "u", "v"].map(Into::into).to_vec(),
                &[vec![0, 1, 2, 3], vec![1, 1, 3, 3]],
            )
            .unwrap(),
        );
        let g = Morphism::new(x, w, vec![0, 1]).unwrap();
        assert_eq!(ctx.is_central_extension(&g), Ok(false));
        assert_eq!(ctx.classify_extension(&g).unwrap().normal, Some(false));
    }

    fn sweep(ctx: &GaloisContext, cat: &Catalog) -> usize {
        let amb = ctx.theory().ambient();
        let table = HomTable::new(amb, &cat.instances);
        let mut n = 0;
        for (_, _, f) in table.arrows().filter(|(_, _, f)| amb.is_descent(f)) {
            let c = ctx.classify_extension(f).unwrap();
            assert_eq!(c.normal, c.central);
            n += 1;
        }
        n
    }

    #[test]
    fn routes_agree_on_small_catalogs() {
        let cat = generate_catalog(&CatalogKind::Coslice { modulus: 2 }, 8).unwrap();
        assert!(sweep(&coslice_ctx(), &cat) > 0);
        let cat = generate_catalog(&CatalogKind::Heyting, 6).unwrap();
        let ctx = GaloisContext::new(TorsionTheory::heyting(), &cat).unwrap();
        assert!(sweep(&ctx, &cat) > 0);
        let cat = generate_catalog(&CatalogKind::Mv, 6).unwrap();
        let ctx = GaloisContext::new(TorsionTheory::mv(), &cat).unwrap();
        assert!(sweep(&ctx, &cat) > 0);
    }
}
