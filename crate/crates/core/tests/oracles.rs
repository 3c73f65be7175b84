//! Brute-force cross-checks of the search-based and closed-form routines.

use std::collections::BTreeSet;
use std::sync::Arc;

use ztorsion::morphisms::{all_congruences, enumerate_homs, Congruence};
use ztorsion::structures::{generate_catalog, small_monoids, Algebra, CatalogKind, Elem};
use ztorsion::torsion::{coslice_divisible_part, heyting_regulars, mset_fix, mv_radical};
use ztorsion::zeroclass::{check_zcoker_universal, check_zker_universal};
use ztorsion::{Ambient, TorsionTheory};

fn preserves(a: &Algebra, b: &Algebra, map: &[Elem]) -> bool {
    let n = a.size();
    a.constants().iter().zip(b.constants()).all(|(&c, &d)| map[c] == d)
        && a.unary_ops().iter().zip(b.unary_ops()).all(|(ua, ub)| (0..n).all(|x| map[ua[x]] == ub[map[x]]))
        && (0..a.binary_ops().len())
            .all(|op| (0..n).all(|x| (0..n).all(|y| map[a.bin(op, x, y)] == b.bin(op, map[x], map[y]))))
}

fn naive_homs(a: &Algebra, b: &Algebra) -> Vec<Vec<Elem>> {
    let (n, k) = (a.size(), b.size());
    if n == 0 {
        return vec![Vec::new()];
    }
    if k == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut map = vec![0; n];
    loop {
        if preserves(a, b, &map) {
            out.push(map.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            map[i] += 1;
            if map[i] < k {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

fn small_catalogs() -> Vec<Vec<Arc<Algebra>>> {
    let mut out = vec![
        generate_catalog(&CatalogKind::Mv, 4).unwrap().instances,
        generate_catalog(&CatalogKind::Heyting, 4).unwrap().instances,
        generate_catalog(&CatalogKind::Coslice { modulus: 2 }, 4).unwrap().instances,
        generate_catalog(&CatalogKind::Coslice { modulus: 3 }, 4).unwrap().instances,
    ];
    for m in small_monoids(2) {
        out.push(generate_catalog(&CatalogKind::MSet(m), 3).unwrap().instances);
    }
    out
}

#[test]
fn hom_search_matches_exhaustive_maps() {
    for cat in small_catalogs() {
        for a in &cat {
            for b in &cat {
                let mut fast: Vec<Vec<Elem>> = enumerate_homs(a, b).unwrap().iter().map(|f| f.map().to_vec()).collect();
                fast.sort();
                let mut slow = naive_homs(a, b);
                slow.sort();
                assert_eq!(fast, slow, "{} → {}", a.name(), b.name());
            }
        }
    }
}

fn partitions(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let next = cur.iter().copied().max().map_or(0, |m| m + 1);
        for b in 0..=next {
            cur.push(b);
            go(n, cur, out);
            cur.pop();
        }
    }
    go(n, &mut cur, &mut out);
    out
}

fn compatible(a: &Algebra, blocks: &[usize]) -> bool {
    let n = a.size();
    let rel = |x: usize, y: usize| blocks[x] == blocks[y];
    (0..n).all(|x| {
        (0..n).filter(|&y| rel(x, y)).all(|y| {
            a.unary_ops().iter().all(|u| rel(u[x], u[y]))
                && (0..a.binary_ops().len()).all(|op| {
                    (0..n).all(|z| rel(a.bin(op, x, z), a.bin(op, y, z)) && rel(a.bin(op, z, x), a.bin(op, z, y)))
                })
        })
    })
}

#[test]
fn congruences_match_compatible_partitions() {
    let mut cats = small_catalogs();
    cats.push(generate_catalog(&CatalogKind::Heyting, 6).unwrap().instances);
    cats.push(generate_catalog(&CatalogKind::Coslice { modulus: 2 }, 8).unwrap().instances);
    for cat in cats {
        for a in &cat {
            let brute: BTreeSet<Congruence> = partitions(a.size())
                .into_iter()
                .filter(|p| compatible(a, p))
                .map(|p| Congruence::from_keys(&p))
                .collect();
            let fast: BTreeSet<Congruence> = all_congruences(a).into_iter().collect();
            assert_eq!(fast, brute, "{}", a.name());
        }
    }
}

#[test]
fn heyting_implication_is_greatest_residual() {
    for h in generate_catalog(&CatalogKind::Heyting, 8).unwrap().instances {
        let leq = |x: usize, y: usize| h.meet(x, y) == x;
        for y in 0..h.size() {
            for z in 0..h.size() {
                let residuals: Vec<usize> = (0..h.size()).filter(|&x| leq(h.meet(x, y), z)).collect();
                let top = residuals.iter().copied().find(|&r| residuals.iter().all(|&x| leq(x, r))).unwrap();
                assert_eq!(h.imp(y, z), top);
            }
        }
    }
}

/// Intersection of the maximal ideals, by enumerating every subset.
fn radical_by_maximal_ideals(a: &Algebra) -> Vec<usize> {
    let n = a.size();
    let leq = |x: usize, y: usize| a.mv_leq(x, y);
    let ideals: Vec<u32> = (0u32..(1 << n))
        .filter(|&s| {
            let has = |x: usize| s & (1 << x) != 0;
            has(0)
                && (0..n).all(|x| !has(x) || (0..n).all(|y| !leq(y, x) || has(y)))
                && (0..n).all(|x| !has(x) || (0..n).all(|y| !has(y) || has(a.oplus(x, y))))
        })
        .collect();
    let full = (1u32 << n) - 1;
    let proper: Vec<u32> = ideals.into_iter().filter(|&s| s != full).collect();
    let maximal: Vec<u32> = proper.iter().copied().filter(|&s| !proper.iter().any(|&t| t != s && t & s == s)).collect();
    let meet = maximal.iter().fold(full, |acc, &s| acc & s);
    (0..n).filter(|&x| meet & (1 << x) != 0).collect()
}

#[test]
fn radical_is_intersection_of_maximal_ideals() {
    for a in generate_catalog(&CatalogKind::Mv, 9).unwrap().instances {
        if a.size() < 2 {
            continue;
        }
        assert_eq!(mv_radical(&a), radical_by_maximal_ideals(&a), "{}", a.name());
        assert_eq!(mv_radical(&a), [0]);
    }
}

#[test]
fn radical_of_square() {
    let cat = generate_catalog(&CatalogKind::Mv, 4).unwrap();
    let sq = cat.instances.iter().find(|a| a.name() == "L1xL1").unwrap();
    assert_eq!(mv_radical(sq), [0]);
    let (p, _) = ztorsion::torsion::mv_perfect_part(sq);
    assert_eq!(p.labels(), ["(0,0)", "(1,1)"]);
}

/// The largest subgroup `S` with `m·S = S`, among all subgroups.
fn divisible_by_subgroups(a: &Algebra, m: u64) -> Vec<usize> {
    let n = a.size();
    let mut best: Vec<usize> = vec![0];
    for s in 0u32..(1 << n) {
        let has = |x: usize| s & (1 << x) != 0;
        if !has(0) || !(0..n).all(|x| !has(x) || (0..n).all(|y| !has(y) || has(a.add(x, y)))) {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&x| has(x)).collect();
        let image: BTreeSet<usize> = members.iter().map(|&x| a.gmul(m, x)).collect();
        if image.into_iter().collect::<Vec<_>>() == members && members.len() > best.len() {
            best = members;
        }
    }
    best
}

#[test]
fn divisible_part_is_largest_divisible_subgroup() {
    for m in [2, 3, 4, 6] {
        for a in generate_catalog(&CatalogKind::Coslice { modulus: m }, 12).unwrap().instances {
            assert_eq!(coslice_divisible_part(&a, m), divisible_by_subgroups(&a, m), "{} m={m}", a.name());
        }
    }
}

#[test]
fn regulars_are_the_double_negation_fixed_points() {
    for h in generate_catalog(&CatalogKind::Heyting, 8).unwrap().instances {
        let (b, eta) = heyting_regulars(&h).unwrap();
        let fixed: Vec<&str> = (0..h.size()).filter(|&x| h.hneg(h.hneg(x)) == x).map(|x| h.label(x)).collect();
        assert_eq!(b.labels().iter().map(String::as_str).collect::<Vec<_>>(), fixed);
        assert!(eta.is_surjective());
        // complemented: x ∨ ¬x = 1 in the regulars
        assert!((0..b.size()).all(|x| b.join(x, b.hneg(x)) == b.top()));
    }
}

#[test]
fn fix_is_pointwise() {
    for m in small_monoids(3) {
        for x in generate_catalog(&CatalogKind::MSet(m.clone()), 4).unwrap().instances {
            let brute: Vec<usize> = (0..x.size()).filter(|&p| (0..m.order()).all(|g| x.act(g, p) == p)).collect();
            assert_eq!(mset_fix(&x), brute);
        }
    }
}

fn universal_sweep(theory: &TorsionTheory, objects: &[Arc<Algebra>]) {
    let amb: &Ambient = theory.ambient();
    for a in objects {
        for b in objects {
            for f in amb.homs(a, b) {
                let k = amb.zker(&f);
                check_zker_universal(amb, &f, &k.kernel, objects).unwrap_or_else(|cx| panic!("{}", cx.reason));
                let via_pb = amb.zker_by_pullback(&f).unwrap();
                assert!(amb.iso_over(&k.kernel, &via_pb.kernel).is_some());
                match (amb.zcoker(&f), amb.zcoker_by_search(&f)) {
                    (Some(c), Some(q)) => {
                        check_zcoker_universal(amb, &f, &c.cokernel, objects)
                            .unwrap_or_else(|cx| panic!("{}", cx.reason));
                        assert!(amb.iso_under(&c.cokernel, &q).is_some());
                    }
                    (None, _) => {}
                    (Some(_), None) => panic!("search missed a Z-cokernel"),
                }
            }
        }
    }
}

#[test]
fn kernels_and_cokernels_are_universal() {
    universal_sweep(&TorsionTheory::mv(), &generate_catalog(&CatalogKind::Mv, 5).unwrap().instances);
    universal_sweep(&TorsionTheory::heyting(), &generate_catalog(&CatalogKind::Heyting, 5).unwrap().instances);
    universal_sweep(
        &TorsionTheory::coslice(2),
        &generate_catalog(&CatalogKind::Coslice { modulus: 2 }, 8).unwrap().instances,
    );
    for m in small_monoids(2) {
        universal_sweep(
            &TorsionTheory::mset(m.clone()),
            &generate_catalog(&CatalogKind::MSet(m), 3).unwrap().instances,
        );
    }
}
