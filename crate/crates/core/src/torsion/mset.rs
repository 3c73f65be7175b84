use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::morphisms::{quotient, Congruence, Morphism};
use crate::structures::{Algebra, Elem};

/// Elements fixed by every monoid element.
pub fn mset_fix(x: &Algebra) -> Vec<Elem> {
    let k = x.unary_ops().len();
    (0..x.size()).filter(|&p| (0..k).all(|m| x.act(m, p) == p)).collect()
}

/// `X/Fix(X)`: the fixed points collapse to one point; identity when there are none.
pub fn mset_contract(x: &Arc<Algebra>) -> (Arc<Algebra>, Morphism) {
    let fix = mset_fix(x);
    let keys: Vec<usize> = (0..x.size()).map(|p| if fix.contains(&p) { usize::MAX } else { p }).collect();
    let (q, proj) = quotient(x, &Congruence::from_keys(&keys));
    let q = Arc::new(q.with_name(format!("{}/Fix", x.name())));
    let proj = Morphism::new(x.clone(), q.clone(), proj.map().into()).expect("contraction is equivariant");
    (q, proj)
}
