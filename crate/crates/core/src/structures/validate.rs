use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use super::{Algebra, Elem, Family};

/// A failed axiom with the first witnessing tuple found.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<String>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at ({})", self.axiom, self.witness.join(","))
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

struct Checker<'a> {
    a: &'a Algebra,
    report: ValidationReport,
}

impl Checker<'_> {
    fn require(&mut self, axiom: &str, ok: bool, witness: &[Elem]) {
        if ok || self.report.violations.iter().any(|v| v.axiom == axiom) {
            return;
        }
        self.report.violations.push(Violation {
            axiom: axiom.to_string(),
            witness: witness.iter().map(|&x| self.a.label(x).to_string()).collect(),
        });
    }
}

/// Checks every axiom of the structure's family exhaustively.
pub fn validate(a: &Algebra) -> ValidationReport {
    let mut c = Checker { a, report: ValidationReport::default() };
    match a.family() {
        Family::Mv => validate_mv(&mut c),
        Family::Heyting => validate_heyting(&mut c),
        Family::MSet(_) => validate_mset(&mut c),
        Family::Coslice { .. } => validate_coslice(&mut c),
    }
    c.report
}

fn validate_mv(c: &mut Checker<'_>) {
    let a = c.a;
    let n = a.size();
    let one = a.mv_one();
    for x in 0..n {
        c.require("neutral element", a.oplus(x, 0) == x, &[x]);
        c.require("involution", a.mv_neg(a.mv_neg(x)) == x, &[x]);
        c.require("absorbing ¬0", a.oplus(x, one) == one, &[x]);
        c.require("distance zero", a.mv_dist(x, x) == 0, &[x]);
        for y in 0..n {
            c.require("commutativity", a.oplus(x, y) == a.oplus(y, x), &[x, y]);
            let lhs = a.oplus(a.mv_neg(a.oplus(a.mv_neg(x), y)), y);
            let rhs = a.oplus(a.mv_neg(a.oplus(a.mv_neg(y), x)), x);
            c.require("Łukasiewicz axiom", lhs == rhs, &[x, y]);
            c.require("difference", a.mv_ominus(x, y) == a.mv_odot(x, a.mv_neg(y)), &[x, y]);
            c.require("distance symmetry", a.mv_dist(x, y) == a.mv_dist(y, x), &[x, y]);
            for z in 0..n {
                c.require("associativity", a.oplus(a.oplus(x, y), z) == a.oplus(x, a.oplus(y, z)), &[x, y, z]);
            }
        }
    }
}

fn validate_heyting(c: &mut Checker<'_>) {
    let a = c.a;
    let n = a.size();
    let (bot, top) = (a.bottom(), a.top());
    let leq = |x: Elem, y: Elem| a.meet(x, y) == x;
    c.require("bottom first", bot == 0, &[bot]);
    for x in 0..n {
        c.require("bounds", a.meet(x, top) == x && a.join(x, bot) == x, &[x]);
        for y in 0..n {
            c.require("commutativity", a.meet(x, y) == a.meet(y, x) && a.join(x, y) == a.join(y, x), &[x, y]);
            c.require("absorption", a.meet(x, a.join(x, y)) == x && a.join(x, a.meet(x, y)) == x, &[x, y]);
            for z in 0..n {
                c.require(
                    "associativity",
                    a.meet(a.meet(x, y), z) == a.meet(x, a.meet(y, z))
                        && a.join(a.join(x, y), z) == a.join(x, a.join(y, z)),
                    &[x, y, z],
                );
                c.require("residuation", leq(a.meet(x, y), z) == leq(x, a.imp(y, z)), &[x, y, z]);
            }
        }
    }
}

fn validate_mset(c: &mut Checker<'_>) {
    let a = c.a;
    let monoid = a.monoid().expect("M-set").clone();
    let k = monoid.order();
    if !monoid.is_valid() {
        c.report.violations.push(Violation { axiom: "monoid laws".into(), witness: Vec::new() });
    }
    let e = monoid.identity();
    for x in 0..a.size() {
        c.require("unit action", a.act(e, x) == x, &[x]);
        for m1 in 0..k {
            for m2 in 0..k {
                let ok = a.act(monoid.mul(m1, m2), x) == a.act(m1, a.act(m2, x));
                if !ok && !c.report.violations.iter().any(|v| v.axiom == "action compatibility") {
                    c.report.violations.push(Violation {
                        axiom: "action compatibility".into(),
                        witness: alloc::vec![
                            monoid.labels()[m1].clone(),
                            monoid.labels()[m2].clone(),
                            a.label(x).to_string(),
                        ],
                    });
                }
            }
        }
    }
}

fn validate_coslice(c: &mut Checker<'_>) {
    let a = c.a;
    let n = a.size();
    for x in 0..n {
        c.require("neutral element", a.add(x, 0) == x, &[x]);
        c.require("inverse", a.add(x, a.gneg(x)) == 0, &[x]);
        for y in 0..n {
            c.require("commutativity", a.add(x, y) == a.add(y, x), &[x, y]);
            for z in 0..n {
                c.require("associativity", a.add(a.add(x, y), z) == a.add(x, a.add(y, z)), &[x, y, z]);
            }
        }
    }
    let m = a.modulus().expect("coslice");
    let b = a.basepoint();
    c.require(&format!("{m}·a = 0"), a.gmul(m, b) == 0, &[b]);
}
