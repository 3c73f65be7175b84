use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::morphisms::{congruence_generated, quotient, subalgebra_generated, Morphism};
use crate::structures::{Algebra, Elem};

/// `D_m(A)` as the stable value of `A ⊇ mA ⊇ m²A ⊇ …`.
pub fn coslice_divisible_part(a: &Algebra, m: u64) -> Vec<Elem> {
    let mut s: Vec<Elem> = (0..a.size()).collect();
    loop {
        let mut next: Vec<Elem> = s.iter().map(|&x| a.gmul(m, x)).collect();
        next.sort_unstable();
        next.dedup();
        if next == s {
            return s;
        }
        s = next;
    }
}

/// `⟨D_m(A), a⟩` with its inclusion.
pub fn coslice_torsion_part(a: &Arc<Algebra>) -> (Arc<Algebra>, Morphism) {
    let d = coslice_divisible_part(a, a.modulus().expect("coslice"));
    let (t, incl) = subalgebra_generated(a, &d);
    let t = Arc::new(t.with_name(format!("T({})", a.name())));
    (t.clone(), Morphism::new(t, a.clone(), incl.map().into()).expect("inclusion"))
}

/// `(A/D_m(A), [a])` with its projection.
pub fn coslice_reflect(a: &Arc<Algebra>) -> (Arc<Algebra>, Morphism) {
    let d = coslice_divisible_part(a, a.modulus().expect("coslice"));
    let pairs: Vec<(Elem, Elem)> = d.iter().map(|&x| (x, 0)).collect();
    let (q, proj) = quotient(a, &congruence_generated(a, &pairs));
    let q = Arc::new(q.with_name(format!("F({})", a.name())));
    (q.clone(), Morphism::new(a.clone(), q, proj.map().into()).expect("projection"))
}
