use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::morphisms::{subalgebra_on, Morphism};
use crate::structures::{Algebra, Elem};

/// The Boolean algebra of regular elements `¬¬x = x` with the unit `η = ¬¬`.
pub fn heyting_regulars(h: &Arc<Algebra>) -> Result<(Arc<Algebra>, Morphism), Error> {
    let regs: Vec<Elem> = (0..h.size()).filter(|&x| h.hneg(h.hneg(x)) == x).collect();
    let pos = |x: Elem| regs.binary_search(&x).expect("regular");
    let table = |op: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Elem> {
        regs.iter().flat_map(|&x| regs.iter().map(move |&y| (x, y))).map(|(x, y)| pos(op(x, y))).collect()
    };
    // regular elements are closed under ∧ and ⇒; the join is ¬(¬x ∧ ¬y)
    let binary = vec![
        table(&|x, y| h.meet(x, y)),
        table(&|x, y| h.hneg(h.meet(h.hneg(x), h.hneg(y)))),
        table(&|x, y| h.imp(x, y)),
    ];
    let labels = regs.iter().map(|&x| h.label(x).into()).collect();
    let constants = vec![pos(h.bottom()), pos(h.top())];
    let b = Algebra::from_parts(h.family().clone(), format!("F({})", h.name()), labels, constants, Vec::new(), binary);
    let b = Arc::new(b);
    let eta = (0..h.size()).map(|x| pos(h.hneg(h.hneg(x)))).collect();
    let eta = Morphism::new(h.clone(), b.clone(), eta)?;
    Ok((b, eta))
}

/// `T(H) = {x : ¬x ∈ {0, 1}}` with its inclusion.
pub fn heyting_pseudo_det_part(h: &Arc<Algebra>) -> Result<(Arc<Algebra>, Morphism), Error> {
    let elems: Vec<Elem> = (0..h.size()).filter(|&x| h.hneg(x) == h.bottom() || h.hneg(x) == h.top()).collect();
    subalgebra_on(h, &elems, &format!("T({})", h.name()))
        .ok_or_else(|| Error::Internal("pseudo-deterministic part is not a subalgebra".into()))
}

pub fn heyting_unit(h: &Arc<Algebra>) -> Result<Morphism, Error> {
    heyting_regulars(h).map(|(_, eta)| eta)
}
