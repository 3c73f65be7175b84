//! Finite structures stored as carriers with full operation tables.
//!
//! Operation slots per family:
//!
//! | family   | constants           | unary          | binary             |
//! |----------|---------------------|----------------|--------------------|
//! | MV       | `0`                 | `¬`            | `⊕`                |
//! | Heyting  | `0`, `1`            |                | `∧`, `∨`, `⇒`      |
//! | M-set    |                     | `m·−` per `m`  |                    |
//! | coslice  | `0`, basepoint `a`  | `−`            | `+`                |
//!
//! Index 0 always holds the first constant when there is one.

mod catalog;
mod coslice;
mod heyting;
mod mset;
mod mv;
mod validate;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::Error;

pub use catalog::{generate_catalog, Catalog, CatalogKind};
pub use coslice::{abelian_group, cyclic_group, invariant_factor_lists};
pub use heyting::{boolean_lattice, derive_heyting_implication, downset_lattice, heyting_chain, BoundedLattice};
pub use mset::{mset_empty, mset_point, small_monoids};
pub use mv::{derive_mv_tables, lukasiewicz_chain, DerivedTables};
pub use validate::{validate, ValidationReport, Violation};

pub type Elem = usize;

/// A finite monoid given by its multiplication table.
#[derive(Clone, Debug)]
pub struct Monoid {
    labels: Vec<String>,
    table: Vec<Elem>,
    identity: Elem,
}

impl PartialEq for Monoid {
    fn eq(&self, other: &Self) -> bool {
        self.identity == other.identity && self.table == other.table
    }
}
impl Eq for Monoid {}

impl Monoid {
    pub fn new(labels: Vec<String>, table: &[Vec<Elem>], identity: Elem) -> Result<Self, Error> {
        let k = labels.len();
        if k == 0 {
            return Err(Error::Malformed("monoid must be nonempty".into()));
        }
        check_labels(&labels)?;
        if identity >= k {
            return Err(Error::Malformed("monoid identity out of range".into()));
        }
        let table = flatten(table, k, "monoid table")?;
        Ok(Monoid { labels, table, identity })
    }

    pub fn trivial() -> Self {
        Monoid { labels: alloc::vec!["1".to_string()], table: alloc::vec![0], identity: 0 }
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn identity(&self) -> Elem {
        self.identity
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order() + b]
    }

    pub fn table_rows(&self) -> Vec<Vec<Elem>> {
        self.table.chunks(self.order()).map(|r| r.to_vec()).collect()
    }

    pub fn is_valid(&self) -> bool {
        let k = self.order();
        (0..k).all(|a| self.mul(self.identity, a) == a && self.mul(a, self.identity) == a)
            && (0..k)
                .all(|a| (0..k).all(|b| (0..k).all(|c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Mv,
    Heyting,
    MSet(Arc<Monoid>),
    Coslice { modulus: u64 },
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Mv => "mv",
            Family::Heyting => "heyting",
            Family::MSet(_) => "mset",
            Family::Coslice { .. } => "coslice",
        }
    }
}

/// A finite structure of one of the four families.
///
/// Equality compares the family and the tables; names and labels are
/// presentation only.
#[derive(Clone, Debug)]
pub struct Algebra {
    family: Family,
    name: String,
    labels: Vec<String>,
    constants: Vec<Elem>,
    unary: Vec<Vec<Elem>>,
    binary: Vec<Vec<Elem>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.family == other.family
            && self.labels.len() == other.labels.len()
            && self.constants == other.constants
            && self.unary == other.unary
            && self.binary == other.binary
    }
}
impl Eq for Algebra {}

pub(crate) const MV_OPLUS: usize = 0;
pub(crate) const MV_NEG: usize = 0;
pub(crate) const H_MEET: usize = 0;
pub(crate) const H_JOIN: usize = 1;
pub(crate) const H_IMP: usize = 2;
pub(crate) const G_ADD: usize = 0;
pub(crate) const G_NEG: usize = 0;

impl Algebra {
    pub(crate) fn from_parts(
        family: Family,
        name: String,
        labels: Vec<String>,
        constants: Vec<Elem>,
        unary: Vec<Vec<Elem>>,
        binary: Vec<Vec<Elem>>,
    ) -> Self {
        Algebra { family, name, labels, constants, unary, binary }
    }

    /// An MV-algebra; element 0 is the constant `0`.
    pub fn mv(name: impl Into<String>, labels: Vec<String>, oplus: &[Vec<Elem>], neg: &[Elem]) -> Result<Self, Error> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Malformed("MV-algebra must be nonempty".into()));
        }
        check_labels(&labels)?;
        let oplus = flatten(oplus, n, "oplus")?;
        let neg = check_row(neg, n, "neg")?;
        Ok(Self::from_parts(Family::Mv, name.into(), labels, alloc::vec![0], alloc::vec![neg], alloc::vec![oplus]))
    }

    /// A Heyting algebra from its lattice tables; `⇒` is derived.
    pub fn heyting(
        name: impl Into<String>,
        labels: Vec<String>,
        meet: &[Vec<Elem>],
        join: &[Vec<Elem>],
        bottom: Elem,
        top: Elem,
    ) -> Result<Self, Error> {
        let lattice = BoundedLattice::new(labels, meet, join, bottom, top)?;
        derive_heyting_implication(name, &lattice)
    }

    pub fn mset(
        name: impl Into<String>,
        monoid: Arc<Monoid>,
        labels: Vec<String>,
        action: &[Vec<Elem>],
    ) -> Result<Self, Error> {
        let n = labels.len();
        check_labels(&labels)?;
        if action.len() != monoid.order() {
            return Err(Error::Malformed(format!(
                "action has {} rows, monoid has {} elements",
                action.len(),
                monoid.order()
            )));
        }
        let mut unary = Vec::with_capacity(action.len());
        for row in action {
            unary.push(check_row(row, n, "action")?);
        }
        Ok(Self::from_parts(Family::MSet(monoid), name.into(), labels, Vec::new(), unary, Vec::new()))
    }

    /// A pointed abelian group; element 0 is the group zero.
    pub fn coslice(
        name: impl Into<String>,
        labels: Vec<String>,
        add: &[Vec<Elem>],
        neg: &[Elem],
        basepoint: Elem,
        modulus: u64,
    ) -> Result<Self, Error> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Malformed("group must be nonempty".into()));
        }
        if modulus == 0 {
            return Err(Error::Malformed("modulus must be positive".into()));
        }
        check_labels(&labels)?;
        if basepoint >= n {
            return Err(Error::Malformed("basepoint out of range".into()));
        }
        let add = flatten(add, n, "add")?;
        let neg = check_row(neg, n, "neg")?;
        Ok(Self::from_parts(
            Family::Coslice { modulus },
            name.into(),
            labels,
            alloc::vec![0, basepoint],
            alloc::vec![neg],
            alloc::vec![add],
        ))
    }

    pub fn family(&self) -> &Family {
        &self.family
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(&self, name: impl Into<String>) -> Self {
        let mut a = self.clone();
        a.name = name.into();
        a
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, x: Elem) -> &str {
        &self.labels[x]
    }

    pub fn index_of(&self, label: &str) -> Option<Elem> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn constants(&self) -> &[Elem] {
        &self.constants
    }

    pub fn unary_ops(&self) -> &[Vec<Elem>] {
        &self.unary
    }

    pub fn binary_ops(&self) -> &[Vec<Elem>] {
        &self.binary
    }

    #[inline]
    pub fn un(&self, op: usize, x: Elem) -> Elem {
        self.unary[op][x]
    }

    #[inline]
    pub fn bin(&self, op: usize, x: Elem, y: Elem) -> Elem {
        self.binary[op][x * self.size() + y]
    }

    pub fn binary_rows(&self, op: usize) -> Vec<Vec<Elem>> {
        let n = self.size();
        if n == 0 {
            return Vec::new();
        }
        self.binary[op].chunks(n).map(|r| r.to_vec()).collect()
    }

    #[inline]
    pub fn oplus(&self, x: Elem, y: Elem) -> Elem {
        self.bin(MV_OPLUS, x, y)
    }

    #[inline]
    pub fn mv_neg(&self, x: Elem) -> Elem {
        self.un(MV_NEG, x)
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.bin(H_MEET, x, y)
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.bin(H_JOIN, x, y)
    }

    #[inline]
    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.bin(H_IMP, x, y)
    }

    /// Heyting pseudo-complement `x ⇒ 0`.
    #[inline]
    pub fn hneg(&self, x: Elem) -> Elem {
        self.imp(x, self.bottom())
    }

    pub fn bottom(&self) -> Elem {
        self.constants[0]
    }

    pub fn top(&self) -> Elem {
        match self.family {
            Family::Heyting => self.constants[1],
            _ => self.mv_neg(0),
        }
    }

    #[inline]
    pub fn act(&self, m: Elem, x: Elem) -> Elem {
        self.un(m, x)
    }

    pub fn monoid(&self) -> Option<&Arc<Monoid>> {
        match &self.family {
            Family::MSet(m) => Some(m),
            _ => None,
        }
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        self.bin(G_ADD, x, y)
    }

    #[inline]
    pub fn gneg(&self, x: Elem) -> Elem {
        self.un(G_NEG, x)
    }

    pub fn basepoint(&self) -> Elem {
        self.constants[1]
    }

    pub fn modulus(&self) -> Option<u64> {
        match self.family {
            Family::Coslice { modulus } => Some(modulus),
            _ => None,
        }
    }

    /// `k·x` in the group.
    pub fn gmul(&self, k: u64, x: Elem) -> Elem {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.add(acc, x);
        }
        acc
    }
}

pub(crate) fn check_labels(labels: &[String]) -> Result<(), Error> {
    for (i, l) in labels.iter().enumerate() {
        if labels[..i].contains(l) {
            return Err(Error::Malformed(format!("duplicate label {l:?}")));
        }
    }
    Ok(())
}

fn flatten(rows: &[Vec<Elem>], n: usize, what: &str) -> Result<Vec<Elem>, Error> {
    if rows.len() != n {
        return Err(Error::Malformed(format!("{what} has {} rows, expected {n}", rows.len())));
    }
    let mut out = Vec::with_capacity(n * n);
    for r in rows {
        out.extend(check_row(r, n, what)?);
    }
    Ok(out)
}

fn check_row(row: &[Elem], n: usize, what: &str) -> Result<Vec<Elem>, Error> {
    if row.len() != n {
        return Err(Error::Malformed(format!("{what} row has length {}, expected {n}", row.len())));
    }
    if let Some(&bad) = row.iter().find(|&&x| x >= n) {
        return Err(Error::Malformed(format!("{what} entry {bad} out of range")));
    }
    Ok(row.to_vec())
}

/// Makes labels pairwise distinct by priming repeats.
pub(crate) fn unique_labels(mut labels: Vec<String>) -> Vec<String> {
    let mut seen = alloc::collections::BTreeSet::new();
    for l in labels.iter_mut() {
        while seen.contains(l) {
            l.push('\'');
        }
        seen.insert(l.clone());
    }
    labels
}
