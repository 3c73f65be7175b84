use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{Algebra, Elem, Monoid};

fn monoid_labels(k: usize) -> Vec<String> {
    (0..k).map(|i| if i == 0 { "1".to_string() } else { format!("m{i}") }).collect()
}

fn isomorphic_tables(k: usize, a: &[Elem], b: &[Elem]) -> bool {
    let mut perm: Vec<Elem> = (0..k).collect();
    permutations_fixing_zero(&mut perm, 1, &mut |p| {
        (0..k).all(|x| (0..k).all(|y| p[a[x * k + y]] == b[p[x] * k + p[y]]))
    })
}

fn permutations_fixing_zero(perm: &mut Vec<Elem>, i: usize, found: &mut dyn FnMut(&[Elem]) -> bool) -> bool {
    if i >= perm.len() {
        return found(perm);
    }
    for j in i..perm.len() {
        perm.swap(i, j);
        if permutations_fixing_zero(perm, i + 1, found) {
            perm.swap(i, j);
            return true;
        }
        perm.swap(i, j);
    }
    false
}

/// All monoids of order at most `max_order` up to isomorphism, identity at index 0.
///
/// Ordered by order, then by the first table found in lexicographic order.
pub fn small_monoids(max_order: usize) -> Vec<Arc<Monoid>> {
    let mut out = Vec::new();
    for k in 1..=max_order {
        let free: Vec<(usize, usize)> = (1..k).flat_map(|a| (1..k).map(move |b| (a, b))).collect();
        let mut reps: Vec<Vec<Elem>> = Vec::new();
        let mut digits = alloc::vec![0usize; free.len()];
        loop {
            let mut table = alloc::vec![0usize; k * k];
            for x in 0..k {
                table[x] = x;
                table[x * k] = x;
            }
            for (d, &(a, b)) in digits.iter().zip(&free) {
                table[a * k + b] = *d;
            }
            let m = Monoid { labels: monoid_labels(k), table: table.clone(), identity: 0 };
            if m.is_valid() && !reps.iter().any(|r| isomorphic_tables(k, r, &table)) {
                reps.push(table);
                out.push(Arc::new(m));
            }
            let mut i = 0;
            while i < digits.len() {
                digits[i] += 1;
                if digits[i] < k {
                    break;
                }
                digits[i] = 0;
                i += 1;
            }
            if i == digits.len() {
                break;
            }
        }
    }
    out
}

/// The empty M-set, initial in M-Set.
pub fn mset_empty(monoid: Arc<Monoid>) -> Algebra {
    let rows: Vec<Vec<Elem>> = (0..monoid.order()).map(|_| Vec::new()).collect();
    Algebra::mset("empty", monoid, Vec::new(), &rows).expect("empty action")
}

/// The one-point M-set, terminal in M-Set.
pub fn mset_point(monoid: Arc<Monoid>) -> Algebra {
    let rows: Vec<Vec<Elem>> = (0..monoid.order()).map(|_| alloc::vec![0]).collect();
    Algebra::mset("point", monoid, alloc::vec!["*".to_string()], &rows).expect("point action")
}
