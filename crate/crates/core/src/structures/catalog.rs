use alloc::format;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{abelian_group, downset_lattice, invariant_factor_lists, lukasiewicz_chain, Algebra, Elem, Family, Monoid};
use crate::error::Error;
use crate::morphisms::{are_isomorphic, product};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogKind {
    Mv,
    Heyting,
    MSet(Arc<Monoid>),
    Coslice { modulus: u64 },
}

impl CatalogKind {
    pub fn family(&self) -> Family {
        match self {
            CatalogKind::Mv => Family::Mv,
            CatalogKind::Heyting => Family::Heyting,
            CatalogKind::MSet(m) => Family::MSet(m.clone()),
            CatalogKind::Coslice { modulus } => Family::Coslice { modulus: *modulus },
        }
    }
}

/// Small instances of one family, in a fixed documented order.
#[derive(Clone, Debug)]
pub struct Catalog {
    pub kind: CatalogKind,
    pub size_bound: usize,
    pub instances: Vec<Arc<Algebra>>,
}

/// Builds the catalog of `kind` with carriers of at most `size_bound` elements.
///
/// * MV: chains `Ł₀ … Łₙ`, then products `Łᵢ × Łⱼ` (`1 ≤ i ≤ j`) by `(i, j)`.
/// * Heyting: downset lattices of posets, up to isomorphism, by size and then
///   discovery order (posets grown one maximal point at a time).
/// * M-set: every action on `0 … size_bound` points up to isomorphism, by
///   carrier size and then lexicographic action table.
/// * coslice: groups in invariant-factor form by order and factor list, each
///   with every basepoint `a` with `m·a = 0` up to isomorphism.
pub fn generate_catalog(kind: &CatalogKind, size_bound: usize) -> Result<Catalog, Error> {
    if size_bound == 0 {
        return Err(Error::Malformed("catalog size bound must be at least 1".into()));
    }
    let instances = match kind {
        CatalogKind::Mv => mv_catalog(size_bound),
        CatalogKind::Heyting => heyting_catalog(size_bound),
        CatalogKind::MSet(m) => mset_catalog(m, size_bound),
        CatalogKind::Coslice { modulus } => coslice_catalog(*modulus, size_bound)?,
    };
    Ok(Catalog { kind: kind.clone(), size_bound, instances })
}

fn mv_catalog(bound: usize) -> Vec<Arc<Algebra>> {
    let mut out: Vec<Arc<Algebra>> = (0..bound).map(|n| Arc::new(lukasiewicz_chain(n))).collect();
    for i in 1..bound {
        for j in i..bound {
            if (i + 1) * (j + 1) <= bound {
                let (p, _, _) =
                    product(&Arc::new(lukasiewicz_chain(i)), &Arc::new(lukasiewicz_chain(j))).expect("same family");
                out.push(Arc::new(p.with_name(format!("L{i}xL{j}"))));
            }
        }
    }
    out
}

fn count_downsets(leq: &[Vec<bool>]) -> usize {
    let p = leq.len();
    (0u32..(1u32 << p))
        .filter(|&s| (0..p).all(|j| s & (1 << j) == 0 || (0..p).all(|i| !leq[i][j] || s & (1 << i) != 0)))
        .count()
}

fn grow_posets(leq: &mut Vec<Vec<bool>>, bound: usize, out: &mut Vec<Vec<Vec<bool>>>) {
    out.push(leq.clone());
    let p = leq.len();
    if p + 2 > bound {
        return;
    }
    // the new point sits above exactly one downset of the current poset
    let downsets: Vec<u32> = (0u32..(1u32 << p))
        .filter(|&s| (0..p).all(|j| s & (1 << j) == 0 || (0..p).all(|i| !leq[i][j] || s & (1 << i) != 0)))
        .collect();
    for d in downsets {
        for (i, row) in leq.iter_mut().enumerate() {
            row.push(d & (1 << i) != 0);
        }
        let mut last = alloc::vec![false; p + 1];
        last[p] = true;
        leq.push(last);
        if count_downsets(leq) <= bound {
            grow_posets(leq, bound, out);
        }
        leq.pop();
        for row in leq.iter_mut() {
            row.pop();
        }
    }
}

fn dedup_push(reps: &mut Vec<Arc<Algebra>>, a: Algebra) {
    let a = Arc::new(a);
    if !reps.iter().any(|r| r.size() == a.size() && are_isomorphic(r, &a)) {
        reps.push(a);
    }
}

fn heyting_catalog(bound: usize) -> Vec<Arc<Algebra>> {
    let mut posets = Vec::new();
    grow_posets(&mut Vec::new(), bound, &mut posets);
    let mut reps: Vec<Arc<Algebra>> = Vec::new();
    for leq in &posets {
        let h = downset_lattice("", leq).expect("downset lattices are Heyting");
        if h.size() <= bound {
            dedup_push(&mut reps, h);
        }
    }
    reps.sort_by_key(|h| h.size());
    let mut counts = alloc::vec![0usize; bound + 1];
    reps.into_iter()
        .map(|h| {
            counts[h.size()] += 1;
            Arc::new(h.with_name(format!("H{}_{}", h.size(), counts[h.size()])))
        })
        .collect()
}

fn mset_catalog(monoid: &Arc<Monoid>, bound: usize) -> Vec<Arc<Algebra>> {
    let k = monoid.order();
    let e = monoid.identity();
    let mut out = Vec::new();
    for n in 0..=bound {
        let mut reps: Vec<Arc<Algebra>> = Vec::new();
        let mut rows: Vec<Vec<Elem>> = alloc::vec![Vec::new(); k];
        rows[e] = (0..n).collect();
        let free: Vec<Elem> = (0..k).filter(|&m| m != e).collect();
        enumerate_actions(monoid, n, &free, 0, &mut rows, &mut |rows| {
            let labels = (0..n).map(|i| format!("x{i}")).collect();
            let x = Algebra::mset("", monoid.clone(), labels, rows).expect("rows have the right shape");
            dedup_push(&mut reps, x);
        });
        for (i, r) in reps.into_iter().enumerate() {
            out.push(Arc::new(r.with_name(format!("X{n}_{}", i + 1))));
        }
    }
    out
}

fn enumerate_actions(
    monoid: &Monoid,
    n: usize,
    free: &[Elem],
    depth: usize,
    rows: &mut Vec<Vec<Elem>>,
    emit: &mut dyn FnMut(&[Vec<Elem>]),
) {
    if depth == free.len() {
        emit(rows);
        return;
    }
    let m = free[depth];
    let assigned = |r: Elem| r == monoid.identity() || free[..=depth].contains(&r);
    let mut f = alloc::vec![0usize; n];
    loop {
        rows[m] = f.clone();
        let consistent = (0..monoid.order()).all(|m1| {
            (0..monoid.order()).all(|m2| {
                let p = monoid.mul(m1, m2);
                !(assigned(m1) && assigned(m2) && assigned(p)) || (0..n).all(|x| rows[p][x] == rows[m1][rows[m2][x]])
            })
        });
        if consistent {
            enumerate_actions(monoid, n, free, depth + 1, rows, emit);
        }
        let mut i = n;
        loop {
            if i == 0 {
                rows[m] = Vec::new();
                return;
            }
            i -= 1;
            f[i] += 1;
            if f[i] < n {
                break;
            }
            f[i] = 0;
        }
    }
}

fn coslice_catalog(modulus: u64, bound: usize) -> Result<Vec<Arc<Algebra>>, Error> {
    let mut out = Vec::new();
    for factors in invariant_factor_lists(bound as u64) {
        let g = abelian_group(&factors, &alloc::vec![0; factors.len()], modulus)?;
        let mut reps: Vec<Arc<Algebra>> = Vec::new();
        for a in 0..g.size() {
            if g.gmul(modulus, a) != 0 {
                continue;
            }
            let point: Vec<u64> = label_tuple(g.label(a), factors.len());
            dedup_push(&mut reps, abelian_group(&factors, &point, modulus)?);
        }
        out.extend(reps);
    }
    Ok(out)
}

fn label_tuple(label: &str, len: usize) -> Vec<u64> {
    if len == 0 {
        return Vec::new();
    }
    label.trim_start_matches('(').trim_end_matches(')').split(',').map(|s| s.parse().expect("numeric label")).collect()
}
