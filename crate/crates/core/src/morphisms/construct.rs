use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{congruence_generated, kernel, Congruence, Morphism};
use crate::error::Error;
use crate::structures::{unique_labels, Algebra, Elem, Family};

/// Restricts `a` to a sorted subset closed under all operations.
pub fn subalgebra_on(a: &Arc<Algebra>, elems: &[Elem], name: &str) -> Option<(Arc<Algebra>, Morphism)> {
    let n = a.size();
    let mut pos = alloc::vec![usize::MAX; n];
    for (i, &x) in elems.iter().enumerate() {
        pos[x] = i;
    }
    let idx = |y: Elem| -> Option<Elem> { (pos[y] != usize::MAX).then_some(pos[y]) };
    let constants = a.constants().iter().map(|&c| idx(c)).collect::<Option<Vec<_>>>()?;
    let unary = a
        .unary_ops()
        .iter()
        .map(|t| elems.iter().map(|&x| idx(t[x])).collect::<Option<Vec<_>>>())
        .collect::<Option<Vec<_>>>()?;
    let m = elems.len();
    let binary = (0..a.binary_ops().len())
        .map(|op| {
            let mut row = Vec::with_capacity(m * m);
            for &x in elems {
                for &y in elems {
                    row.push(idx(a.bin(op, x, y))?);
                }
            }
            Some(row)
        })
        .collect::<Option<Vec<_>>>()?;
    let labels = elems.iter().map(|&x| a.label(x).to_string()).collect();
    let sub = Arc::new(Algebra::from_parts(a.family().clone(), name.into(), labels, constants, unary, binary));
    let incl = Morphism::unchecked(sub.clone(), a.clone(), elems.to_vec());
    Some((sub, incl))
}

/// The least substructure containing `subset` (and every constant).
pub fn subalgebra_generated(a: &Arc<Algebra>, subset: &[Elem]) -> (Arc<Algebra>, Morphism) {
    let n = a.size();
    let mut inside = alloc::vec![false; n];
    let mut work: Vec<Elem> = subset.iter().chain(a.constants()).copied().collect();
    let mut members: Vec<Elem> = Vec::new();
    while let Some(x) = work.pop() {
        if inside[x] {
            continue;
        }
        inside[x] = true;
        members.push(x);
        for t in a.unary_ops() {
            work.push(t[x]);
        }
        for op in 0..a.binary_ops().len() {
            for &y in &members {
                work.push(a.bin(op, x, y));
                work.push(a.bin(op, y, x));
            }
        }
    }
    let elems: Vec<Elem> = (0..n).filter(|&x| inside[x]).collect();
    subalgebra_on(a, &elems, &format!("{}.sub", a.name())).expect("closure is closed")
}

/// `a/θ` with blocks ordered by least element.
pub fn quotient(a: &Arc<Algebra>, theta: &Congruence) -> (Arc<Algebra>, Morphism) {
    let blocks = theta.blocks();
    let k = blocks.len();
    let labels: Vec<String> = blocks
        .iter()
        .map(|b| if b.len() == 1 { a.label(b[0]).to_string() } else { format!("[{}]", a.label(b[0])) })
        .collect();
    let constants = a.constants().iter().map(|&c| theta.block_of(c)).collect();
    let unary = a.unary_ops().iter().map(|t| blocks.iter().map(|b| theta.block_of(t[b[0]])).collect()).collect();
    let binary = (0..a.binary_ops().len())
        .map(|op| {
            let mut row = Vec::with_capacity(k * k);
            for bx in &blocks {
                for by in &blocks {
                    row.push(theta.block_of(a.bin(op, bx[0], by[0])));
                }
            }
            row
        })
        .collect();
    let q = Arc::new(Algebra::from_parts(
        a.family().clone(),
        format!("{}.quo", a.name()),
        unique_labels(labels),
        constants,
        unary,
        binary,
    ));
    let map = (0..a.size()).map(|x| theta.block_of(x)).collect();
    (q.clone(), Morphism::unchecked(a.clone(), q, map))
}

fn pair_structure(a: &Algebra, b: &Algebra, pairs: &[(Elem, Elem)], name: String) -> Algebra {
    let nb = b.size();
    let mut slot = alloc::vec![usize::MAX; a.size() * nb];
    for (i, &(x, y)) in pairs.iter().enumerate() {
        slot[x * nb + y] = i;
    }
    let index = |(x, y): (Elem, Elem)| {
        let i = slot[x * nb + y];
        assert!(i != usize::MAX, "pairs closed under operations");
        i
    };
    let constants = a.constants().iter().zip(b.constants()).map(|(&x, &y)| index((x, y))).collect();
    let unary = a
        .unary_ops()
        .iter()
        .zip(b.unary_ops())
        .map(|(ta, tb)| pairs.iter().map(|&(x, y)| index((ta[x], tb[y]))).collect())
        .collect();
    let m = pairs.len();
    let binary = (0..a.binary_ops().len())
        .map(|op| {
            let mut row = Vec::with_capacity(m * m);
            for &(x1, y1) in pairs {
                for &(x2, y2) in pairs {
                    row.push(index((a.bin(op, x1, x2), b.bin(op, y1, y2))));
                }
            }
            row
        })
        .collect();
    let labels = pairs.iter().map(|&(x, y)| format!("({},{})", a.label(x), b.label(y))).collect();
    Algebra::from_parts(a.family().clone(), name, unique_labels(labels), constants, unary, binary)
}

/// `a × b` with lexicographically ordered pairs, plus both projections.
pub fn product(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<(Arc<Algebra>, Morphism, Morphism), Error> {
    if a.family() != b.family() {
        return Err(Error::FamilyMismatch);
    }
    let pairs: Vec<(Elem, Elem)> = (0..a.size()).flat_map(|x| (0..b.size()).map(move |y| (x, y))).collect();
    let p = Arc::new(pair_structure(a, b, &pairs, format!("{}x{}", a.name(), b.name())));
    let p1 = Morphism::unchecked(p.clone(), a.clone(), pairs.iter().map(|q| q.0).collect());
    let p2 = Morphism::unchecked(p.clone(), b.clone(), pairs.iter().map(|q| q.1).collect());
    Ok((p, p1, p2))
}

/// A pullback square: `object` with legs to the domains of `f` and `g`.
#[derive(Clone, Debug)]
pub struct Pullback {
    pub object: Arc<Algebra>,
    pub left: Morphism,
    pub right: Morphism,
}

/// The pullback of `f: A → C` and `g: B → C` as pairs `(x, y)` with `f x = g y`.
pub fn pullback(f: &Morphism, g: &Morphism) -> Result<Pullback, Error> {
    if f.target() != g.target() {
        return Err(Error::NotComposable);
    }
    let (a, b) = (f.source(), g.source());
    let pairs: Vec<(Elem, Elem)> = (0..a.size())
        .flat_map(|x| (0..b.size()).map(move |y| (x, y)))
        .filter(|&(x, y)| f.apply(x) == g.apply(y))
        .collect();
    let p = Arc::new(pair_structure(a, b, &pairs, format!("{}x_{}", a.name(), b.name())));
    Ok(Pullback {
        left: Morphism::unchecked(p.clone(), a.clone(), pairs.iter().map(|q| q.0).collect()),
        right: Morphism::unchecked(p.clone(), b.clone(), pairs.iter().map(|q| q.1).collect()),
        object: p,
    })
}

#[derive(Clone, Debug)]
pub struct KernelPair {
    pub relation: Congruence,
    pub object: Arc<Algebra>,
    pub first: Morphism,
    pub second: Morphism,
}

pub fn kernel_pair(f: &Morphism) -> KernelPair {
    let pb = pullback(f, f).expect("same codomain");
    KernelPair { relation: kernel(f), object: pb.object, first: pb.left, second: pb.right }
}

/// The epi-mono factorization `f = mono ∘ epi` through the image.
#[derive(Clone, Debug)]
pub struct Image {
    pub object: Arc<Algebra>,
    pub epi: Morphism,
    pub mono: Morphism,
}

pub fn image(f: &Morphism) -> Image {
    let elems = f.image_set();
    let (object, mono) =
        subalgebra_on(f.target(), &elems, &format!("im({})", f.source().name())).expect("images are closed");
    let epi_map = f.map().iter().map(|y| elems.binary_search(y).unwrap()).collect();
    let epi = Morphism::unchecked(f.source().clone(), object.clone(), epi_map);
    Image { object, epi, mono }
}

/// Disjoint union of two M-sets; left elements come first.
pub fn coproduct(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Result<(Arc<Algebra>, Morphism, Morphism), Error> {
    if a.family() != b.family() {
        return Err(Error::FamilyMismatch);
    }
    if !matches!(a.family(), Family::MSet(_)) {
        return Err(Error::Unsupported("coproducts outside M-Set".into()));
    }
    let (na, nb) = (a.size(), b.size());
    let unary = a
        .unary_ops()
        .iter()
        .zip(b.unary_ops())
        .map(|(ta, tb)| ta.iter().copied().chain(tb.iter().map(|&y| y + na)).collect())
        .collect();
    let labels = a.labels().iter().cloned().chain(b.labels().iter().cloned()).collect();
    let s = Arc::new(Algebra::from_parts(
        a.family().clone(),
        format!("{}+{}", a.name(), b.name()),
        unique_labels(labels),
        Vec::new(),
        unary,
        Vec::new(),
    ));
    let inl = Morphism::unchecked(a.clone(), s.clone(), (0..na).collect());
    let inr = Morphism::unchecked(b.clone(), s.clone(), (na..na + nb).collect());
    Ok((s, inl, inr))
}

/// A pushout square: `object` with legs from the codomains of `f` and `g`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub object: Arc<Algebra>,
    pub left: Morphism,
    pub right: Morphism,
}

/// Pushout of `f: C → A` and `g: C → B` in M-Set.
pub fn mset_pushout(f: &Morphism, g: &Morphism) -> Result<Pushout, Error> {
    if f.source() != g.source() {
        return Err(Error::NotComposable);
    }
    let (s, inl, inr) = coproduct(f.target(), g.target())?;
    let glue: Vec<(Elem, Elem)> =
        (0..f.source().size()).map(|c| (inl.apply(f.apply(c)), inr.apply(g.apply(c)))).collect();
    let theta = congruence_generated(&s, &glue);
    let (q, proj) = quotient(&s, &theta);
    Ok(Pushout { left: proj.after(&inl)?, right: proj.after(&inr)?, object: q })
}
