use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{Algebra, Elem};

/// Operations of an MV-algebra derived from `⊕`, `¬` and `0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedTables {
    pub odot: Vec<Vec<Elem>>,
    pub ominus: Vec<Vec<Elem>>,
    pub implies: Vec<Vec<Elem>>,
    pub dist: Vec<Vec<Elem>>,
    pub leq: Vec<Vec<bool>>,
}

impl Algebra {
    pub fn mv_one(&self) -> Elem {
        self.mv_neg(0)
    }

    pub fn mv_odot(&self, x: Elem, y: Elem) -> Elem {
        self.mv_neg(self.oplus(self.mv_neg(x), self.mv_neg(y)))
    }

    pub fn mv_ominus(&self, x: Elem, y: Elem) -> Elem {
        self.mv_neg(self.oplus(self.mv_neg(x), y))
    }

    pub fn mv_implies(&self, x: Elem, y: Elem) -> Elem {
        self.oplus(self.mv_neg(x), y)
    }

    pub fn mv_dist(&self, x: Elem, y: Elem) -> Elem {
        self.oplus(self.mv_ominus(x, y), self.mv_ominus(y, x))
    }

    pub fn mv_leq(&self, x: Elem, y: Elem) -> bool {
        self.mv_implies(x, y) == self.mv_one()
    }

    /// `k·x = x ⊕ … ⊕ x`.
    pub fn mv_mul(&self, k: usize, x: Elem) -> Elem {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.oplus(acc, x);
        }
        acc
    }
}

pub fn derive_mv_tables(a: &Algebra) -> DerivedTables {
    let n = a.size();
    let table = |f: &dyn Fn(Elem, Elem) -> Elem| -> Vec<Vec<Elem>> {
        (0..n).map(|x| (0..n).map(|y| f(x, y)).collect()).collect()
    };
    DerivedTables {
        odot: table(&|x, y| a.mv_odot(x, y)),
        ominus: table(&|x, y| a.mv_ominus(x, y)),
        implies: table(&|x, y| a.mv_implies(x, y)),
        dist: table(&|x, y| a.mv_dist(x, y)),
        leq: (0..n).map(|x| (0..n).map(|y| a.mv_leq(x, y)).collect()).collect(),
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn fraction(k: usize, n: usize) -> String {
    if k == 0 {
        return "0".to_string();
    }
    if k == n {
        return "1".to_string();
    }
    let g = gcd(k, n);
    format!("{}/{}", k / g, n / g)
}

/// The Łukasiewicz chain `Łₙ = {0, 1/n, …, 1}`; `Ł₀` is the terminal algebra.
pub fn lukasiewicz_chain(n: usize) -> Algebra {
    let size = n + 1;
    let labels = if n == 0 { alloc::vec!["0".to_string()] } else { (0..size).map(|k| fraction(k, n)).collect() };
    let oplus: Vec<Vec<Elem>> = (0..size).map(|x| (0..size).map(|y| core::cmp::min(n, x + y)).collect()).collect();
    let neg: Vec<Elem> = (0..size).map(|x| n - x).collect();
    Algebra::mv(format!("L{n}"), labels, &oplus, &neg).expect("chain tables are well formed")
}
