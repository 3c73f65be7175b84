use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::morphisms::{quotient, subalgebra_on, Congruence, Morphism};
use crate::structures::{Algebra, Elem};

/// `Rad(A) = Inf(A) ∪ {0}`, where `a ≠ 0` is infinitesimal when `n·a ≤ ¬a` for
/// every `n`; the sequence `n·a` stabilizes within `|A|` steps.
pub fn mv_radical(a: &Algebra) -> Vec<Elem> {
    let n = a.size();
    (0..n).filter(|&x| x == 0 || (1..=n).all(|k| a.mv_leq(a.mv_mul(k, x), a.mv_neg(x)))).collect()
}

/// The congruence `x ~ y ⟺ d(x, y) ∈ I` of an ideal `I`.
pub fn mv_ideal_congruence(a: &Algebra, ideal: &[Elem]) -> Congruence {
    let keys: Vec<Elem> =
        (0..a.size()).map(|x| (0..a.size()).find(|&y| ideal.contains(&a.mv_dist(x, y))).expect("d(x,x) = 0")).collect();
    Congruence::from_keys(&keys)
}

/// `P(A) = Rad(A) ∪ ¬Rad(A)` with its inclusion.
pub fn mv_perfect_part(a: &Arc<Algebra>) -> (Arc<Algebra>, Morphism) {
    let rad = mv_radical(a);
    let mut elems: Vec<Elem> = rad.iter().flat_map(|&x| [x, a.mv_neg(x)]).collect();
    elems.sort_unstable();
    elems.dedup();
    subalgebra_on(a, &elems, &alloc::format!("P({})", a.name())).expect("the perfect part is a subalgebra")
}

/// `S(A) = A/Rad(A)` with its projection.
pub fn mv_semisimple_quotient(a: &Arc<Algebra>) -> (Arc<Algebra>, Morphism) {
    let theta = mv_ideal_congruence(a, &mv_radical(a));
    quotient(a, &theta)
}
