//! The (E, M) factorization system of a torsion theory, orthogonality, and
//! catalog checkers for the side conditions (N), (M), (M'), (S) and (P).

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::Error;
use crate::morphisms::{congruence_generated, kernel, quotient, subalgebra_on, Morphism};
use crate::structures::{Algebra, Catalog, Elem};
use crate::torsion::{heyting_unit, mset_fix, mv_ideal_congruence, mv_radical, TheoryTag, TorsionTheory};
use crate::zeroclass::{Ambient, Counterexample};

/// Every ambient arrow between catalog objects, indexed by object position.
#[derive(Clone, Debug)]
pub struct HomTable {
    pub objects: Vec<Arc<Algebra>>,
    homs: Vec<Vec<Morphism>>,
}

impl HomTable {
    pub fn new(amb: &Ambient, objects: &[Arc<Algebra>]) -> Self {
        let n = objects.len();
        let mut homs = Vec::with_capacity(n * n);
        for a in objects {
            for b in objects {
                homs.push(amb.homs(a, b));
            }
        }
        HomTable { objects: objects.to_vec(), homs }
    }

    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn get(&self, i: usize, j: usize) -> &[Morphism] {
        &self.homs[i * self.objects.len() + j]
    }

    /// `(i, j, f)` for every arrow, ordered by source, target, then map.
    pub fn arrows(&self) -> impl Iterator<Item = (usize, usize, &Morphism)> + '_ {
        let n = self.objects.len();
        (0..n).flat_map(move |i| (0..n).flat_map(move |j| self.get(i, j).iter().map(move |f| (i, j, f))))
    }

    pub fn arrow_count(&self) -> usize {
        self.homs.iter().map(Vec::len).sum()
    }
}

/// `f = m ∘ e` with `e ∈ E` and `m ∈ M`.
#[derive(Clone, Debug)]
pub struct Factorization {
    pub e: Morphism,
    pub m: Morphism,
    pub middle: Arc<Algebra>,
    /// `K[e]`, torsion
    pub e_kernel: Morphism,
    /// `K[m]`, torsion-free
    pub m_kernel: Morphism,
}

/// `f` is a Z-cokernel whose Z-kernel is torsion.
pub fn in_e(theory: &TorsionTheory, f: &Morphism) -> bool {
    let amb = theory.ambient();
    let k = amb.zker(f).kernel;
    if !theory.is_torsion(amb.dom(&k)) {
        return false;
    }
    match amb.zcoker(&k) {
        Some(c) => amb.iso_under(f, &c.cokernel).is_some(),
        None => false,
    }
}

/// `K[f]` is torsion-free.
pub fn in_m(theory: &TorsionTheory, f: &Morphism) -> bool {
    let amb = theory.ambient();
    theory.is_torsion_free(amb.dom(&amb.zker(f).kernel))
}

/// Least `S ⊇ m·S` inside a subgroup given as a sorted subset.
fn divisible_subset(a: &Algebra, m: u64, subset: &[Elem]) -> Vec<Elem> {
    let mut s = subset.to_vec();
    loop {
        let next: Vec<Elem> = s.iter().map(|&x| a.gmul(m, x)).collect::<BTreeSet<_>>().into_iter().collect();
        if next == s {
            return s;
        }
        s = next;
    }
}

/// The `E`-part given by the family's formula, or `None` without one.
fn closed_form_e(theory: &TorsionTheory, f: &Morphism) -> Result<Option<Morphism>, Error> {
    let e = match theory.tag() {
        TheoryTag::Mv => {
            let a = f.source();
            let zero = f.target().constants()[0];
            let rad = mv_radical(a);
            let ideal: Vec<Elem> = rad.into_iter().filter(|&x| f.apply(x) == zero).collect();
            quotient(a, &mv_ideal_congruence(a, &ideal)).1
        }
        TheoryTag::Heyting => {
            let a = f.source();
            let theta = kernel(f).meet(&kernel(&heyting_unit(a)?));
            quotient(a, &theta).1
        }
        TheoryTag::MSet => {
            let a = f.target();
            let mut elems = f.image_set();
            elems.extend(mset_fix(a));
            elems.sort_unstable();
            elems.dedup();
            subalgebra_on(a, &elems, &format!("{}.im", a.name()))
                .ok_or_else(|| Error::Internal("image with fixed points is not closed".into()))?
                .1
        }
        TheoryTag::Coslice => {
            let a = f.source();
            let zeros: Vec<Elem> = (0..a.size()).filter(|&x| f.apply(x) == 0).collect();
            let d = divisible_subset(a, a.modulus().expect("coslice"), &zeros);
            let pairs: Vec<(Elem, Elem)> = d.iter().map(|&x| (x, 0)).collect();
            quotient(a, &congruence_generated(a, &pairs)).1
        }
        TheoryTag::MvSwapped => return Ok(None),
    };
    Ok(Some(e))
}

/// `e = Zcoker(k ∘ t)` where `k = Zker(f)` and `t` is the torsion part of `K[f]`.
fn generic_e(theory: &TorsionTheory, f: &Morphism) -> Result<Morphism, Error> {
    let amb = theory.ambient();
    let k = amb.zker(f).kernel;
    let t = theory.coreflect(amb.dom(&k))?;
    let kt = amb.compose(&k, &t)?;
    amb.zcoker(&kt).map(|c| c.cokernel).ok_or_else(|| Error::Internal("torsion subobject has no Z-cokernel".into()))
}

fn complete(theory: &TorsionTheory, f: &Morphism, e: Morphism) -> Result<Factorization, Error> {
    let amb = theory.ambient();
    let m =
        amb.factor_through_epi(&e, f).ok_or_else(|| Error::Internal("f does not factor through its E-part".into()))?;
    let e_kernel = amb.zker(&e).kernel;
    let m_kernel = amb.zker(&m).kernel;
    if !theory.is_torsion(amb.dom(&e_kernel)) || !in_e(theory, &e) {
        return Err(Error::Internal("E-part is not in E".into()));
    }
    if !theory.is_torsion_free(amb.dom(&m_kernel)) {
        return Err(Error::Internal("M-part is not in M".into()));
    }
    Ok(Factorization { middle: amb.cod(&e).clone(), e, m, e_kernel, m_kernel })
}

/// The (E, M)-factorization through the family's closed form, cross-checked
/// against [`factorize_generic`] up to an isomorphism of middles.
pub fn factorize(theory: &TorsionTheory, f: &Morphism) -> Result<Factorization, Error> {
    let amb = theory.ambient();
    if !amb.accepts(f.source()) {
        return Err(Error::FamilyMismatch);
    }
    let Some(e) = closed_form_e(theory, f)? else {
        return factorize_generic(theory, f);
    };
    let fz = complete(theory, f, e)?;
    let g = generic_e(theory, f)?;
    let phi = amb
        .iso_under(&fz.e, &g)
        .ok_or_else(|| Error::Internal("closed and generic middles are not isomorphic".into()))?;
    let m2 = amb.factor_through_epi(&g, f).ok_or_else(|| Error::Internal("generic M-part".into()))?;
    if amb.compose(&m2, &phi)? != fz.m {
        return Err(Error::Internal("middle isomorphism does not commute with M-parts".into()));
    }
    Ok(fz)
}

/// The factorization built from the Z-cokernel of the torsion part of `K[f]`.
pub fn factorize_generic(theory: &TorsionTheory, f: &Morphism) -> Result<Factorization, Error> {
    let e = generic_e(theory, f)?;
    complete(theory, f, e)
}

/// The diagonal `d: B → C` of a square `m ∘ g = h ∘ e` with `e: A → B`,
/// `m: C → D`, if one exists.
pub fn diagonal(
    amb: &Ambient,
    e: &Morphism,
    m: &Morphism,
    g: &Morphism,
    h: &Morphism,
) -> Result<Option<Morphism>, Error> {
    if amb.compose(m, g)? != amb.compose(h, e)? {
        return Err(Error::NotCommuting);
    }
    Ok(amb.fillers_after(e, g).into_iter().find(|d| amb.compose(m, d).map(|c| c == *h).unwrap_or(false)))
}

/// Counts the commuting squares from `e` to `m` and checks that each has
/// exactly one diagonal among all homs `cod e → dom m`.
pub fn check_orthogonality(amb: &Ambient, e: &Morphism, m: &Morphism) -> Result<usize, Counterexample> {
    let (a, b, c, d) = (amb.dom(e), amb.cod(e), amb.dom(m), amb.cod(m));
    let candidates: Vec<(Morphism, Morphism)> = amb
        .homs(b, c)
        .into_iter()
        .map(|x| (amb.compose(&x, e).expect("composable"), amb.compose(m, &x).expect("composable")))
        .collect();
    let hbd: Vec<(Morphism, Morphism)> =
        amb.homs(b, d).into_iter().map(|h| (amb.compose(&h, e).expect("composable"), h)).collect();
    let mut squares = 0;
    for g in amb.homs(a, c) {
        let mg = amb.compose(m, &g).expect("composable");
        for (he, h) in &hbd {
            if *he != mg {
                continue;
            }
            squares += 1;
            let count = candidates.iter().filter(|(de, md)| *de == g && md == h).count();
            if count != 1 {
                return Err(Counterexample::new(format!("square with {count} diagonals")).with_arrows(&[e, m, &g, h]));
            }
        }
    }
    Ok(squares)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    /// `T ∩ F = Z`, `Hom(T, F)` trivial and an exact sequence for every object.
    Axioms,
    N,
    M,
    MPrime,
    S,
    P,
    /// The reflector preserves the terminal object and every pullback.
    Lex,
}

impl Condition {
    pub const ALL: [Condition; 7] =
        [Condition::Axioms, Condition::N, Condition::M, Condition::MPrime, Condition::S, Condition::P, Condition::Lex];

    pub fn name(self) -> &'static str {
        match self {
            Condition::Axioms => "axioms",
            Condition::N => "N",
            Condition::M => "M",
            Condition::MPrime => "Mprime",
            Condition::S => "S",
            Condition::P => "P",
            Condition::Lex => "lex",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Condition::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(s) || (s == "M'" && *c == Condition::MPrime))
    }
}

#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub theory: TheoryTag,
    pub condition: Condition,
    pub catalog_bound: usize,
    pub objects_scanned: usize,
    pub cases_scanned: usize,
    pub verdict: bool,
    pub counterexample: Option<Counterexample>,
}

/// Reflection data cached per catalog object.
struct Sweep<'a> {
    theory: &'a TorsionTheory,
    amb: &'a Ambient,
    table: HomTable,
    etas: Vec<Morphism>,
    /// `F` of every catalog arrow, laid out like `table`
    images: Vec<Vec<Morphism>>,
}

impl<'a> Sweep<'a> {
    fn new(theory: &'a TorsionTheory, objects: &[Arc<Algebra>]) -> Result<Self, Counterexample> {
        let amb = theory.ambient();
        let etas = objects.iter().map(|a| reflect_or_cx(theory, a)).collect::<Result<Vec<_>, _>>()?;
        let table = HomTable::new(amb, objects);
        let n = objects.len();
        let mut sw = Sweep { theory, amb, table, etas, images: Vec::with_capacity(n * n) };
        for i in 0..n {
            for j in 0..n {
                let row = sw.table.get(i, j).iter().map(|f| sw.f_arrow(&sw.etas[i], &sw.etas[j], f)).collect::<Result<
                    Vec<_>,
                    _,
                >>(
                )?;
                sw.images.push(row);
            }
        }
        Ok(sw)
    }

    /// `F(f)` for an arrow between objects with known units.
    fn f_arrow(&self, eta_src: &Morphism, eta_dst: &Morphism, f: &Morphism) -> Result<Morphism, Counterexample> {
        self.amb
            .factor_through_epi(eta_src, &self.amb.compose(eta_dst, f).expect("composable"))
            .ok_or_else(|| Counterexample::new("η is not natural").with_arrows(&[f]))
    }

    /// Whether `F` sends the pullback of `f: A → C` and `g: B → C` to a pullback.
    fn preserves_pullback(
        &self,
        (ia, ib, ic): (usize, usize, usize),
        (fi, gi): (usize, usize),
    ) -> Result<(), Counterexample> {
        let amb = self.amb;
        let n = self.table.len();
        let (f, g) = (&self.table.get(ia, ic)[fi], &self.table.get(ib, ic)[gi]);
        let pb = amb.pullback(f, g).map_err(|e| Counterexample::new(format!("{e}")))?;
        let eta_p = reflect_or_cx(self.theory, &pb.object)?;
        let fl = self.f_arrow(&eta_p, &self.etas[ia], &pb.left)?;
        let fr = self.f_arrow(&eta_p, &self.etas[ib], &pb.right)?;
        let (ff, fg) = (&self.images[ia * n + ic][fi], &self.images[ib * n + ic][gi]);
        let q = amb.pullback(ff, fg).map_err(|e| Counterexample::new(format!("{e}")))?;
        match amb.induce_into_pullback(&q, &fl, &fr) {
            Some(w) if amb.is_iso(&w) => Ok(()),
            _ => Err(Counterexample::new("F does not preserve the pullback")
                .with_objects(&[&pb.object, &q.object])
                .with_arrows(&[f, g])),
        }
    }
}

fn reflect_or_cx(theory: &TorsionTheory, a: &Arc<Algebra>) -> Result<Morphism, Counterexample> {
    theory.reflect(a).map_err(|e| Counterexample::new(format!("{e}")).with_objects(&[a]))
}

fn check_axioms(theory: &TorsionTheory, objects: &[Arc<Algebra>]) -> Result<usize, Counterexample> {
    let amb = theory.ambient();
    let mut cases = 0;
    for a in objects {
        cases += 1;
        if (theory.is_torsion(a) && theory.is_torsion_free(a)) != amb.is_zero(a) {
            return Err(Counterexample::new("T ∩ F differs from Z").with_objects(&[a]));
        }
    }
    for a in objects.iter().filter(|a| theory.is_torsion(a)) {
        for b in objects.iter().filter(|b| theory.is_torsion_free(b)) {
            for h in amb.homs(a, b) {
                cases += 1;
                if !amb.is_trivial(&h) {
                    return Err(Counterexample::new("non-trivial arrow from T to F").with_arrows(&[&h]));
                }
            }
        }
    }
    for a in objects {
        cases += 1;
        if let Err(e) = theory.decompose(a) {
            return Err(Counterexample::new(format!("{e}")).with_objects(&[a]));
        }
    }
    Ok(cases)
}

fn check_n(theory: &TorsionTheory, objects: &[Arc<Algebra>]) -> Result<usize, Counterexample> {
    let amb = theory.ambient();
    let table = HomTable::new(amb, objects);
    let mut seen: BTreeSet<(usize, Vec<Elem>)> = BTreeSet::new();
    let mut cases = 0;
    for (i, _, f) in table.arrows() {
        let k = amb.zker(f).kernel;
        let t = theory.coreflect(amb.dom(&k)).map_err(|e| Counterexample::new(format!("{e}")).with_arrows(&[f]))?;
        let kt = amb.compose(&k, &t).expect("composable");
        if !seen.insert((i, kt.map().to_vec())) {
            continue;
        }
        cases += 1;
        let found = amb.quotients(&objects[i]).iter().any(|q| amb.iso_over(&kt, &amb.zker(q).kernel).is_some());
        if !found {
            return Err(Counterexample::new("k ∘ t is not the Z-kernel of any arrow").with_arrows(&[f, &kt]));
        }
    }
    Ok(cases)
}

fn check_m(theory: &TorsionTheory, objects: &[Arc<Algebra>]) -> Result<usize, Counterexample> {
    let amb = theory.ambient();
    let mut cases = 0;
    for a in objects {
        for q in amb.quotients(a) {
            let k = amb.zker(&q).kernel;
            let t = amb.dom(&k);
            if !theory.is_torsion(t) {
                continue;
            }
            let exact = amb.zcoker(&k).is_some_and(|c| amb.iso_under(&q, &c.cokernel).is_some());
            if !exact {
                continue;
            }
            cases += 1;
            let ft = reflect_or_cx(theory, t)?;
            let zq = amb.zero_part(amb.cod(&q));
            if amb.isomorphism(amb.cod(&ft), amb.dom(&zq)).is_none() {
                return Err(Counterexample::new("F(T) is not Z(Q)").with_arrows(&[&k, &q]));
            }
        }
    }
    Ok(cases)
}

fn check_m_prime(theory: &TorsionTheory, objects: &[Arc<Algebra>]) -> Result<usize, Counterexample> {
    let amb = theory.ambient();
    for a in objects {
        let seq = theory.decompose(a).map_err(|e| Counterexample::new(format!("{e}")).with_objects(&[a]))?;
        let ft = reflect_or_cx(theory, amb.dom(&seq.t))?;
        let zf = amb.zero_part(amb.cod(&seq.eta));
        if amb.isomorphism(amb.cod(&ft), amb.dom(&zf)).is_none() {
            return Err(Counterexample::new("F(T(A)) is not Z(F(A))").with_arrows(&[&seq.t, &seq.eta]));
        }
    }
    Ok(objects.len())
}

fn check_s(theory: &TorsionTheory, objects: &[Arc<Algebra>]) -> Result<usize, Counterexample> {
    let amb = theory.ambient();
    let zs = amb.zero_objects();
    let mut cases = 0;
    for t in objects.iter().filter(|t| theory.is_torsion(t)) {
        let eta = reflect_or_cx(theory, t)?;
        for z2 in &zs {
            for z in amb.homs(z2, amb.cod(&eta)) {
                cases += 1;
                let pb = amb.pullback(&eta, &z).map_err(|e| Counterexample::new(format!("{e}")))?;
                if !theory.is_torsion(&pb.object) {
                    return Err(Counterexample::new("pullback of η_T is not torsion").with_arrows(&[&eta, &z]));
                }
                let eta2 = reflect_or_cx(theory, &pb.object)?;
                if amb.iso_under(&pb.right, &eta2).is_none() {
                    return Err(Counterexample::new("χ is not the unit at T'").with_arrows(&[&eta, &z, &pb.right]));
                }
            }
        }
    }
    Ok(cases)
}

fn check_p(theory: &TorsionTheory, objects: &[Arc<Algebra>]) -> Result<usize, Counterexample> {
    let sw = Sweep::new(theory, objects)?;
    let amb = sw.amb;
    let n = sw.table.len();
    let mut cases = 0;
    for ia in 0..n {
        for (ib, b) in objects.iter().enumerate() {
            let id_b = Morphism::identity(b);
            for (pi, p) in sw.table.get(ia, ib).iter().enumerate() {
                let split = sw.table.get(ib, ia).iter().any(|s| amb.compose(p, s).map(|c| c == id_b).unwrap_or(false));
                if !split {
                    continue;
                }
                for ic in 0..n {
                    for (gi, g) in sw.table.get(ic, ib).iter().enumerate() {
                        if amb.is_z_inverted(g) {
                            cases += 1;
                            sw.preserves_pullback((ia, ic, ib), (pi, gi))?;
                        }
                    }
                }
            }
        }
    }
    Ok(cases)
}

fn check_lex(theory: &TorsionTheory, objects: &[Arc<Algebra>]) -> Result<usize, Counterexample> {
    let sw = Sweep::new(theory, objects)?;
    let amb = sw.amb;
    let term = amb.terminal();
    let ft = reflect_or_cx(theory, &term)?;
    if !amb.is_iso(&ft) {
        return Err(Counterexample::new("F does not preserve the terminal object").with_objects(&[&term]));
    }
    let n = sw.table.len();
    let mut cases = 1;
    for ic in 0..n {
        for ia in 0..n {
            for (fi, f) in sw.table.get(ia, ic).iter().enumerate() {
                if amb.is_iso(f) {
                    continue;
                }
                for ib in ia..n {
                    for (gi, g) in sw.table.get(ib, ic).iter().enumerate() {
                        // pullbacks along isomorphisms are preserved by every functor
                        if amb.is_iso(g) {
                            continue;
                        }
                        cases += 1;
                        sw.preserves_pullback((ia, ib, ic), (fi, gi))?;
                    }
                }
            }
        }
    }
    Ok(cases)
}

/// Evaluates one condition over every object (and arrow) of `catalog`.
pub fn check_condition(
    theory: &TorsionTheory,
    condition: Condition,
    catalog: &Catalog,
) -> Result<ConditionReport, Error> {
    if catalog.kind.family() != *theory.ambient().family() {
        return Err(Error::FamilyMismatch);
    }
    let objects = &catalog.instances;
    let result = match condition {
        Condition::Axioms => check_axioms(theory, objects),
        Condition::N => check_n(theory, objects),
        Condition::M => check_m(theory, objects),
        Condition::MPrime => check_m_prime(theory, objects),
        Condition::S => check_s(theory, objects),
        Condition::P => check_p(theory, objects),
        Condition::Lex => check_lex(theory, objects),
    };
    let (cases, cx) = match result {
        Ok(n) => (n, None),
        Err(cx) => (0, Some(cx)),
    };
    Ok(ConditionReport {
        theory: theory.tag(),
        condition,
        catalog_bound: catalog.size_bound,
        objects_scanned: objects.len(),
        cases_scanned: cases,
        verdict: cx.is_none(),
        counterexample: cx,
    })
}

#[derive(Clone, Debug, Default)]
pub struct SystemReport {
    pub arrows: usize,
    pub in_e: usize,
    pub in_m: usize,
    /// factorizations whose E-part is an isomorphism
    pub e_isos: usize,
    pub compositions: usize,
    pub squares: usize,
    pub pullbacks: usize,
    pub counterexample: Option<Counterexample>,
}

impl SystemReport {
    pub fn is_valid(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Sweeps every catalog arrow: closed and generic factorizations agree, E and
/// M contain the isos and are closed under composition, `e ↓ m` for every
/// pair, and E is stable under pullback along Z-inverted arrows.
pub fn verify_factorization_system(theory: &TorsionTheory, catalog: &Catalog) -> Result<SystemReport, Error> {
    if catalog.kind.family() != *theory.ambient().family() {
        return Err(Error::FamilyMismatch);
    }
    let mut report = SystemReport::default();
    if let Err(cx) = sweep_system(theory, &catalog.instances, &mut report) {
        report.counterexample = Some(cx);
    }
    Ok(report)
}

fn sweep_system(theory: &TorsionTheory, objects: &[Arc<Algebra>], r: &mut SystemReport) -> Result<(), Counterexample> {
    let amb = theory.ambient();
    let table = HomTable::new(amb, objects);
    let n = table.len();
    let cx = |e: Error, f: &Morphism| Counterexample::new(format!("{e}")).with_arrows(&[f]);
    // flags[i*n+j][k] = (in E, in M) of table.get(i, j)[k]
    let mut flags: Vec<Vec<(bool, bool)>> = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            let mut row = Vec::new();
            for f in table.get(i, j) {
                r.arrows += 1;
                let fz = factorize(theory, f).map_err(|e| cx(e, f))?;
                if amb.is_iso(&fz.e) {
                    r.e_isos += 1;
                }
                let (fe, fm) = (in_e(theory, f), in_m(theory, f));
                if amb.is_iso(f) && !(fe && fm) {
                    return Err(Counterexample::new("an isomorphism is missing from E or M").with_arrows(&[f]));
                }
                r.in_e += fe as usize;
                r.in_m += fm as usize;
                row.push((fe, fm));
            }
            flags.push(row);
        }
    }
    let flag = |i: usize, j: usize, f: &Morphism| -> (bool, bool) {
        let k = table.get(i, j).iter().position(|g| g == f).expect("composite is a catalog arrow");
        flags[i * n + j][k]
    };
    for i in 0..n {
        for j in 0..n {
            for (fi, f) in table.get(i, j).iter().enumerate() {
                let (fe, fm) = flags[i * n + j][fi];
                if !fe && !fm {
                    continue;
                }
                for k in 0..n {
                    for (gi, g) in table.get(j, k).iter().enumerate() {
                        let (ge, gm) = flags[j * n + k][gi];
                        let (we, wm) = (fe && ge, fm && gm);
                        if !we && !wm {
                            continue;
                        }
                        r.compositions += 1;
                        let gf = amb.compose(g, f).expect("composable");
                        let (ce, cm) = flag(i, k, &gf);
                        if (we && !ce) || (wm && !cm) {
                            return Err(Counterexample::new("class not closed under composition").with_arrows(&[f, g]));
                        }
                    }
                }
            }
        }
    }
    let members = |want_e: bool| -> Vec<(usize, usize, &Morphism)> {
        table
            .arrows()
            .filter(|&(i, j, f)| {
                let k = table.get(i, j).iter().position(|g| g == f).unwrap();
                let (fe, fm) = flags[i * n + j][k];
                (if want_e { fe } else { fm }) && !amb.is_iso(f)
            })
            .collect()
    };
    let es = members(true);
    let ms = members(false);
    for &(_, _, e) in &es {
        for &(_, _, m) in &ms {
            r.squares += check_orthogonality(amb, e, m)?;
        }
    }
    for &(_, j, e) in &es {
        for k in 0..n {
            for g in table.get(k, j).iter().filter(|g| amb.is_z_inverted(g)) {
                r.pullbacks += 1;
                let pb = amb.pullback(e, g).map_err(|err| cx(err, e))?;
                if !in_e(theory, &pb.right) {
                    return Err(Counterexample::new("pullback of an E-arrow leaves E").with_arrows(&[e, g, &pb.right]));
                }
            }
        }
    }
    Ok(())
}
