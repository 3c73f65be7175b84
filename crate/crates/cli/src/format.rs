//! Structure and morphism files. Elements are always referred to by label.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use ztorsion::structures::{Algebra, Family, Monoid};
use ztorsion::{Error, Morphism};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidFile {
    pub elements: Vec<String>,
    pub table: Vec<Vec<String>>,
    pub identity: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub kind: String,
    pub name: String,
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oplus: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub neg: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meet: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bottom: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub top: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub monoid: Option<MonoidFile>,
    /// monoid element label ↦ image of each element
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub action: Option<BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub add: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basepoint: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorphismFile {
    pub source: String,
    pub target: String,
    pub map: BTreeMap<String, String>,
}

fn missing(field: &str, kind: &str) -> Error {
    Error::Malformed(format!("{kind} structure needs `{field}`"))
}

fn index(labels: &[String], l: &str) -> Result<usize, Error> {
    labels.iter().position(|x| x == l).ok_or_else(|| Error::Malformed(format!("unknown element `{l}`")))
}

fn row(labels: &[String], r: &[String]) -> Result<Vec<usize>, Error> {
    r.iter().map(|l| index(labels, l)).collect()
}

fn table(labels: &[String], t: &[Vec<String>]) -> Result<Vec<Vec<usize>>, Error> {
    t.iter().map(|r| row(labels, r)).collect()
}

fn labelled_row(labels: &[String], r: &[usize]) -> Vec<String> {
    r.iter().map(|&x| labels[x].clone()).collect()
}

fn labelled(labels: &[String], t: &[Vec<usize>]) -> Vec<Vec<String>> {
    t.iter().map(|r| labelled_row(labels, r)).collect()
}

impl MonoidFile {
    pub fn to_monoid(&self) -> Result<Monoid, Error> {
        let t = table(&self.elements, &self.table)?;
        Monoid::new(self.elements.clone(), &t, index(&self.elements, &self.identity)?)
    }

    pub fn from_monoid(m: &Monoid) -> Self {
        MonoidFile {
            elements: m.labels().to_vec(),
            table: labelled(m.labels(), &m.table_rows()),
            identity: m.labels()[m.identity()].clone(),
        }
    }
}

impl StructureFile {
    fn empty(kind: &str, a: &Algebra) -> Self {
        StructureFile {
            kind: kind.into(),
            name: a.name().into(),
            elements: a.labels().to_vec(),
            oplus: None,
            neg: None,
            meet: None,
            join: None,
            bottom: None,
            top: None,
            monoid: None,
            action: None,
            add: None,
            modulus: None,
            basepoint: None,
        }
    }

    pub fn from_algebra(a: &Algebra) -> Self {
        let l = a.labels();
        let un = |op: usize| labelled_row(l, &a.unary_ops()[op]);
        match a.family() {
            Family::Mv => {
                StructureFile { oplus: Some(labelled(l, &a.binary_rows(0))), neg: Some(un(0)), ..Self::empty("mv", a) }
            }
            Family::Heyting => StructureFile {
                meet: Some(labelled(l, &a.binary_rows(0))),
                join: Some(labelled(l, &a.binary_rows(1))),
                bottom: Some(l[a.bottom()].clone()),
                top: Some(l[a.top()].clone()),
                ..Self::empty("heyting", a)
            },
            Family::MSet(m) => StructureFile {
                monoid: Some(MonoidFile::from_monoid(m)),
                action: Some((0..m.order()).map(|g| (m.labels()[g].clone(), un(g))).collect()),
                ..Self::empty("mset", a)
            },
            Family::Coslice { modulus } => StructureFile {
                add: Some(labelled(l, &a.binary_rows(0))),
                neg: Some(un(0)),
                modulus: Some(*modulus),
                basepoint: Some(l[a.basepoint()].clone()),
                ..Self::empty("coslice", a)
            },
        }
    }

    pub fn to_algebra(&self) -> Result<Algebra, Error> {
        let l = &self.elements;
        let k = self.kind.as_str();
        match k {
            "mv" => {
                let oplus = table(l, self.oplus.as_ref().ok_or_else(|| missing("oplus", k))?)?;
                let neg = row(l, self.neg.as_ref().ok_or_else(|| missing("neg", k))?)?;
                Algebra::mv(self.name.clone(), l.clone(), &oplus, &neg)
            }
            "heyting" => {
                let meet = table(l, self.meet.as_ref().ok_or_else(|| missing("meet", k))?)?;
                let join = table(l, self.join.as_ref().ok_or_else(|| missing("join", k))?)?;
                let bottom = index(l, self.bottom.as_ref().ok_or_else(|| missing("bottom", k))?)?;
                let top = index(l, self.top.as_ref().ok_or_else(|| missing("top", k))?)?;
                Algebra::heyting(self.name.clone(), l.clone(), &meet, &join, bottom, top)
            }
            "mset" => {
                let mf = self.monoid.as_ref().ok_or_else(|| missing("monoid", k))?;
                let monoid = Arc::new(mf.to_monoid()?);
                let action = self.action.as_ref().ok_or_else(|| missing("action", k))?;
                if action.len() != monoid.order() {
                    return Err(Error::Malformed("action needs one row per monoid element".into()));
                }
                let rows = mf
                    .elements
                    .iter()
                    .map(|g| {
                        let r = action.get(g).ok_or_else(|| Error::Malformed(format!("no action row for `{g}`")))?;
                        row(l, r)
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Algebra::mset(self.name.clone(), monoid, l.clone(), &rows)
            }
            "coslice" => {
                let add = table(l, self.add.as_ref().ok_or_else(|| missing("add", k))?)?;
                let neg = row(l, self.neg.as_ref().ok_or_else(|| missing("neg", k))?)?;
                let bp = index(l, self.basepoint.as_ref().ok_or_else(|| missing("basepoint", k))?)?;
                let m = self.modulus.ok_or_else(|| missing("modulus", k))?;
                Algebra::coslice(self.name.clone(), l.clone(), &add, &neg, bp, m)
            }
            other => Err(Error::Malformed(format!("unknown kind `{other}`"))),
        }
    }
}

impl MorphismFile {
    pub fn from_morphism(f: &Morphism) -> Self {
        let (s, t) = (f.source(), f.target());
        MorphismFile {
            source: s.name().into(),
            target: t.name().into(),
            map: (0..s.size()).map(|x| (s.label(x).to_string(), t.label(f.apply(x)).to_string())).collect(),
        }
    }

    /// Resolves the file against loaded structures and checks that it is a morphism.
    pub fn to_morphism(&self, structures: &[Arc<Algebra>]) -> Result<Morphism, Error> {
        let find = |name: &str| {
            structures
                .iter()
                .find(|a| a.name() == name)
                .cloned()
                .ok_or_else(|| Error::Malformed(format!("no structure named `{name}`")))
        };
        let (s, t) = (find(&self.source)?, find(&self.target)?);
        if self.map.len() != s.size() {
            return Err(Error::Malformed("map must list every source element once".into()));
        }
        let map = s
            .labels()
            .iter()
            .map(|x| {
                let y = self.map.get(x).ok_or_else(|| Error::Malformed(format!("`{x}` is not mapped")))?;
                index(t.labels(), y)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Morphism::new(s, t, map)
    }
}

/// A file holding one structure or an array of them.
pub fn parse_structures(text: &str) -> Result<Vec<StructureFile>, Error> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    let parse =
        |v: serde_json::Value| serde_json::from_value::<StructureFile>(v).map_err(|e| Error::Malformed(e.to_string()));
    match value {
        serde_json::Value::Array(items) => items.into_iter().map(parse).collect(),
        v => Ok(vec![parse(v)?]),
    }
}

pub fn parse_morphism(text: &str) -> Result<MorphismFile, Error> {
    serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))
}

/// Pretty JSON with keys in sorted order and a trailing newline.
pub fn canonical<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("serializable");
    let mut s = serde_json::to_string_pretty(&v).expect("serializable");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use ztorsion::structures::{cyclic_group, lukasiewicz_chain, small_monoids};

    #[test]
    fn monoid_round_trip() {
        for m in small_monoids(3) {
            let f = MonoidFile::from_monoid(&m);
            assert_eq!(f.to_monoid().unwrap(), *m);
        }
    }

    #[test]
    fn canonical_sorts_keys() {
        let a = cyclic_group(4, 2, 2).unwrap();
        let text = canonical(&StructureFile::from_algebra(&a));
        let keys: Vec<&str> =
            text.lines().filter(|l| l.starts_with("  \"")).map(|l| l.trim().split('"').nth(1).unwrap()).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert!(text.ends_with("}\n"));
    }

    #[test]
    fn missing_tables_are_named() {
        let mut f = StructureFile::from_algebra(&lukasiewicz_chain(2));
        f.neg = None;
        assert_eq!(f.to_algebra(), Err(Error::Malformed("mv structure needs `neg`".into())));
    }

    #[test]
    fn morphism_map_must_be_total() {
        let a = Arc::new(lukasiewicz_chain(1));
        let mf = MorphismFile { source: "L1".into(), target: "L1".into(), map: [("0".into(), "0".into())].into() };
        assert!(mf.to_morphism(&[a]).is_err());
    }
}
