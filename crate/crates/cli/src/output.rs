//! JSON renderings of results. Morphisms use the morphism file layout, so any
//! arrow printed here can be fed back to the tool.

use serde_json::{json, Value};
use ztorsion::factorization::{ConditionReport, Factorization, SystemReport};
use ztorsion::galois::{ExtensionClass, GaloisContext};
use ztorsion::zeroclass::{Counterexample, ZCokernelWitness, ZKernelWitness};
use ztorsion::{Algebra, Ambient, Catalog, Elem, Morphism, TorsionTheory, ZExactSequence};

use crate::format::{MorphismFile, StructureFile};

pub fn structure(a: &Algebra) -> Value {
    serde_json::to_value(StructureFile::from_algebra(a)).expect("serializable")
}

pub fn morphism(f: &Morphism) -> Value {
    serde_json::to_value(MorphismFile::from_morphism(f)).expect("serializable")
}

pub fn labels(a: &Algebra, xs: &[Elem]) -> Vec<String> {
    xs.iter().map(|&x| a.label(x).to_string()).collect()
}

pub fn counterexample(c: &Option<Counterexample>) -> Value {
    match c {
        None => Value::Null,
        Some(c) => json!({
            "reason": c.reason,
            "objects": c.objects.iter().map(|a| a.name()).collect::<Vec<_>>(),
            "arrows": c.arrows.iter().map(morphism).collect::<Vec<_>>(),
        }),
    }
}

pub fn zker(amb: &Ambient, f: &Morphism, w: &ZKernelWitness) -> Value {
    let k = amb.dom(&w.kernel);
    json!({
        "arrow": morphism(f),
        "kernel_object": structure(k),
        "kernel": morphism(&w.kernel),
        "chi": morphism(&w.chi),
        "zero_part": morphism(&w.zero_part),
        "is_zero": amb.is_zero(k),
    })
}

pub fn zcoker(amb: &Ambient, f: &Morphism, w: Option<&ZCokernelWitness>) -> Value {
    match w {
        None => json!({ "arrow": morphism(f), "exists": false }),
        Some(w) => json!({
            "arrow": morphism(f),
            "exists": true,
            "cokernel_object": structure(amb.cod(&w.cokernel)),
            "cokernel": morphism(&w.cokernel),
            "quotient": morphism(&w.quotient),
            "z": morphism(&w.z),
        }),
    }
}

pub fn sequence(th: &TorsionTheory, s: &ZExactSequence) -> Value {
    let amb = th.ambient();
    let (t, f) = (s.torsion_part(amb), s.free_part(amb));
    json!({
        "theory": th.tag().name(),
        "middle": s.object.name(),
        "torsion_part": structure(&t),
        "free_part": structure(&f),
        "t": morphism(&s.t),
        "eta": morphism(&s.eta),
        "orders": [t.size(), s.object.size(), f.size()],
        "zker_eta": morphism(&s.kernel.kernel),
        "zcoker_t": morphism(&s.cokernel.cokernel),
    })
}

pub fn factorization(th: &TorsionTheory, f: &Morphism, fac: &Factorization) -> Value {
    let amb = th.ambient();
    json!({
        "theory": th.tag().name(),
        "arrow": morphism(f),
        "middle": structure(&fac.middle),
        "e": morphism(&fac.e),
        "m": morphism(&fac.m),
        "e_kernel_order": amb.dom(&fac.e_kernel).size(),
        "m_kernel_order": amb.dom(&fac.m_kernel).size(),
    })
}

pub fn condition(th: &TorsionTheory, r: &ConditionReport) -> Value {
    json!({
        "theory": th.tag().name(),
        "condition": r.condition.name(),
        "catalog_bound": r.catalog_bound,
        "objects_scanned": r.objects_scanned,
        "cases_scanned": r.cases_scanned,
        "verdict": r.verdict,
        "counterexample": counterexample(&r.counterexample),
    })
}

pub fn system(th: &TorsionTheory, catalog: &Catalog, r: &SystemReport) -> Value {
    json!({
        "theory": th.tag().name(),
        "condition": "system",
        "catalog_bound": catalog.size_bound,
        "objects_scanned": catalog.instances.len(),
        "arrows": r.arrows,
        "in_e": r.in_e,
        "in_m": r.in_m,
        "e_isos": r.e_isos,
        "compositions": r.compositions,
        "squares": r.squares,
        "pullbacks": r.pullbacks,
        "verdict": r.is_valid(),
        "counterexample": counterexample(&r.counterexample),
    })
}

pub fn extension(ctx: &GaloisContext, f: &Morphism, c: &ExtensionClass) -> Value {
    let amb = ctx.theory().ambient();
    json!({
        "tag": c.tag.name(),
        "evidence": {
            "theory": ctx.theory().tag().name(),
            "arrow": morphism(f),
            "catalog_bound": ctx.catalog_bound(),
            "protoadditive": ctx.is_protoadditive(),
            "descent": c.descent,
            "trivial": c.trivial,
            "normal": c.normal,
            "central": c.central,
            "kernel_object": structure(amb.dom(&c.kernel)),
            "kernel_torsion_free": c.kernel_torsion_free,
        },
    })
}

pub fn manifest(c: &Catalog) -> Value {
    json!({
        "family": c.kind.family().tag(),
        "catalog_bound": c.size_bound,
        "count": c.instances.len(),
        "objects": c.instances.iter().map(|a| json!({ "name": a.name(), "order": a.size() })).collect::<Vec<_>>(),
    })
}
