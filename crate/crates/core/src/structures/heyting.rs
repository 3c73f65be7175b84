use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{check_labels, flatten, Algebra, Elem, Family};
use crate::error::Error;

/// Bounded lattice tables, the input to [`derive_heyting_implication`].
#[derive(Clone, Debug)]
pub struct BoundedLattice {
    labels: Vec<String>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
}

impl BoundedLattice {
    pub fn new(
        labels: Vec<String>,
        meet: &[Vec<Elem>],
        join: &[Vec<Elem>],
        bottom: Elem,
        top: Elem,
    ) -> Result<Self, Error> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Malformed("lattice must be nonempty".into()));
        }
        check_labels(&labels)?;
        if bottom >= n || top >= n {
            return Err(Error::Malformed("bottom/top out of range".into()));
        }
        let meet = flatten(meet, n, "meet")?;
        let join = flatten(join, n, "join")?;
        Ok(BoundedLattice { labels, meet, join, bottom, top })
    }

    fn n(&self) -> usize {
        self.labels.len()
    }

    fn m(&self, x: Elem, y: Elem) -> Elem {
        self.meet[x * self.n() + y]
    }

    fn j(&self, x: Elem, y: Elem) -> Elem {
        self.join[x * self.n() + y]
    }

    fn leq(&self, x: Elem, y: Elem) -> bool {
        self.m(x, y) == x
    }

    /// Checks commutativity, associativity, absorption and the bounds.
    pub fn check_laws(&self) -> Result<(), Error> {
        let n = self.n();
        let l = |x: Elem| self.labels[x].as_str();
        for x in 0..n {
            if self.m(x, self.top) != x || self.j(x, self.bottom) != x {
                return Err(Error::NotALattice(format!("bounds at {}", l(x))));
            }
            for y in 0..n {
                if self.m(x, y) != self.m(y, x) || self.j(x, y) != self.j(y, x) {
                    return Err(Error::NotALattice(format!("commutativity at ({},{})", l(x), l(y))));
                }
                if self.m(x, self.j(x, y)) != x || self.j(x, self.m(x, y)) != x {
                    return Err(Error::NotALattice(format!("absorption at ({},{})", l(x), l(y))));
                }
                for z in 0..n {
                    if self.m(self.m(x, y), z) != self.m(x, self.m(y, z))
                        || self.j(self.j(x, y), z) != self.j(x, self.j(y, z))
                    {
                        return Err(Error::NotALattice(format!("associativity at ({},{},{})", l(x), l(y), l(z))));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Derives `y ⇒ z` as the greatest `x` with `x ∧ y ≤ z`.
pub fn derive_heyting_implication(name: impl Into<String>, lattice: &BoundedLattice) -> Result<Algebra, Error> {
    lattice.check_laws()?;
    if lattice.bottom != 0 {
        return Err(Error::Malformed("bottom must be the first element".into()));
    }
    let n = lattice.n();
    let mut imp = Vec::with_capacity(n * n);
    for y in 0..n {
        for z in 0..n {
            let below: Vec<Elem> = (0..n).filter(|&x| lattice.leq(lattice.m(x, y), z)).collect();
            let greatest = below.iter().copied().find(|&g| below.iter().all(|&x| lattice.leq(x, g)));
            match greatest {
                Some(g) => imp.push(g),
                None => return Err(Error::NotHeyting { y: lattice.labels[y].clone(), z: lattice.labels[z].clone() }),
            }
        }
    }
    Ok(Algebra::from_parts(
        Family::Heyting,
        name.into(),
        lattice.labels.clone(),
        alloc::vec![lattice.bottom, lattice.top],
        Vec::new(),
        alloc::vec![lattice.meet.clone(), lattice.join.clone(), imp],
    ))
}

/// The `n`-element chain; the 3-chain is labelled `0, a, 1`.
pub fn heyting_chain(n: usize) -> Algebra {
    assert!(n >= 1);
    let labels: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "0".to_string(),
            _ if i == n - 1 => "1".to_string(),
            _ if n == 3 => "a".to_string(),
            _ => format!("a{i}"),
        })
        .collect();
    let meet: Vec<Vec<Elem>> = (0..n).map(|x| (0..n).map(|y| x.min(y)).collect()).collect();
    let join: Vec<Vec<Elem>> = (0..n).map(|x| (0..n).map(|y| x.max(y)).collect()).collect();
    Algebra::heyting(format!("C{n}"), labels, &meet, &join, 0, n - 1).expect("chains are Heyting")
}

/// The lattice of downsets of a finite poset; `leq[i][j]` means `i ≤ j`.
pub fn downset_lattice(name: impl Into<String>, leq: &[Vec<bool>]) -> Result<Algebra, Error> {
    let p = leq.len();
    if p > 20 {
        return Err(Error::Unsupported("posets with more than 20 points".into()));
    }
    let full: u32 = if p == 0 { 0 } else { (1u32 << p) - 1 };
    let mut downsets: Vec<u32> = (0..=full)
        .filter(|&s| (0..p).all(|j| s & (1 << j) == 0 || (0..p).all(|i| !leq[i][j] || s & (1 << i) != 0)))
        .collect();
    downsets.sort_by_key(|&s| (s.count_ones(), s));
    let n = downsets.len();
    let pos = |s: u32| downsets.binary_search_by_key(&(s.count_ones(), s), |&d| (d.count_ones(), d)).unwrap();
    let labels: Vec<String> = downsets
        .iter()
        .map(|&s| {
            if s == 0 {
                "0".to_string()
            } else if s == full {
                "1".to_string()
            } else {
                let pts: Vec<String> = (0..p).filter(|i| s & (1 << i) != 0).map(|i| format!("{i}")).collect();
                format!("{{{}}}", pts.join(","))
            }
        })
        .collect();
    let meet: Vec<Vec<Elem>> = (0..n).map(|x| (0..n).map(|y| pos(downsets[x] & downsets[y])).collect()).collect();
    let join: Vec<Vec<Elem>> = (0..n).map(|x| (0..n).map(|y| pos(downsets[x] | downsets[y])).collect()).collect();
    Algebra::heyting(name, labels, &meet, &join, 0, n - 1)
}

/// The Boolean algebra with `k` atoms.
pub fn boolean_lattice(k: usize) -> Algebra {
    let leq: Vec<Vec<bool>> = (0..k).map(|i| (0..k).map(|j| i == j).collect()).collect();
    downset_lattice(format!("B{k}"), &leq).expect("Boolean lattices are Heyting")
}
