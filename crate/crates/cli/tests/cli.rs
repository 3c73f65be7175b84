use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::Arc;

use proptest::prelude::*;
use serde_json::{json, Value};
use ztorsion::structures::{generate_catalog, small_monoids, CatalogKind};
use ztorsion_cli::format::{canonical, parse_morphism, parse_structures, StructureFile};
use ztorsion_cli::run;

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn schema_for(def: &str) -> jsonschema::Validator {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("schemas/ztorsion.schema.json");
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    let schema = json!({
        "$schema": doc["$schema"],
        "$defs": doc["$defs"],
        "$ref": format!("#/$defs/{def}"),
    });
    jsonschema::validator_for(&schema).unwrap()
}

fn assert_schema(def: &str, v: &Value) {
    let validator = schema_for(def);
    let errors: Vec<String> = validator.iter_errors(v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{def}: {errors:?}\n{v:#}");
}

fn ok(args: &[&str]) -> Value {
    let mut argv = vec!["ztorsion".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let out = run(argv);
    assert_eq!(out.code, 0, "{args:?}: {}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    let mut argv = vec!["ztorsion".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    run(argv).code
}

fn structure_files() -> Vec<PathBuf> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data");
    let mut files: Vec<PathBuf> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| {
            let text = std::fs::read_to_string(p).unwrap();
            parse_structures(&text).is_ok()
        })
        .collect();
    files.sort();
    files
}

#[test]
fn data_files_round_trip_byte_identically() {
    let files = structure_files();
    assert!(files.len() >= 8);
    for p in files {
        let text = std::fs::read_to_string(&p).unwrap();
        let parsed = parse_structures(&text).unwrap();
        let again = if text.trim_start().starts_with('[') { canonical(&parsed) } else { canonical(&parsed[0]) };
        assert_eq!(again, text, "{}", p.display());
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_schema("structures", &v);
    }
}

#[test]
fn structures_rebuild_from_their_files() {
    for p in structure_files() {
        if p.ends_with("broken_mv.json") {
            continue;
        }
        for f in parse_structures(&std::fs::read_to_string(&p).unwrap()).unwrap() {
            let a = f.to_algebra().unwrap();
            assert_eq!(StructureFile::from_algebra(&a), f, "{}", p.display());
        }
    }
}

#[test]
fn morphism_files_resolve() {
    for (s, m) in [
        ("chains.json", "chain3_unit.json"),
        ("coslice_small.json", "z4_onto_z2.json"),
        ("z4xz3_pair.json", "z4xz3_onto_z4.json"),
        ("z2_sets.json", "swap_onto_point.json"),
    ] {
        let objs: Vec<_> = parse_structures(&std::fs::read_to_string(data(s)).unwrap())
            .unwrap()
            .iter()
            .map(|f| Arc::new(f.to_algebra().unwrap()))
            .collect();
        let text = std::fs::read_to_string(data(m)).unwrap();
        let mf = parse_morphism(&text).unwrap();
        assert_eq!(canonical(&mf), text);
        assert_schema("morphism", &serde_json::from_str(&text).unwrap());
        mf.to_morphism(&objs).unwrap();
    }
}

#[test]
fn malformed_files_are_rejected() {
    let bad = [
        r#"{"kind":"mv","name":"x","elements":["0"]}"#,
        r#"{"kind":"group","name":"x","elements":["0"]}"#,
        r#"{"kind":"mv","name":"x","elements":["0"],"oplus":[["0"]],"neg":["0"],"extra":1}"#,
        r#"{"kind":"mv","name":"x","elements":["0"],"oplus":[["1"]],"neg":["0"]}"#,
        "not json",
    ];
    for text in bad {
        let parsed = parse_structures(text);
        assert!(parsed.is_err() || parsed.unwrap()[0].to_algebra().is_err(), "{text}");
    }
}

#[test]
fn validate_reports_validity() {
    let v = ok(&["validate", &data("lukasiewicz3.json")]);
    assert_eq!(v["valid"], true);
    assert_schema("validate", &v);
    assert_eq!(code(&["validate", &data("broken_mv.json")]), 1);
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["frobnicate"]), 2);
    assert_eq!(code(&["check", "--theory", "mv"]), 2);
    assert_eq!(code(&["check", "--theory", "mv", "--condition", "Q"]), 2);
    assert_eq!(code(&["validate", "/nonexistent/file.json"]), 1);
    assert_eq!(code(&["radical", &data("chain3.json")]), 1);
    assert_eq!(code(&["fix", &data("lukasiewicz3.json")]), 1);
    assert_eq!(code(&["decompose", "--theory", "heyting", &data("lukasiewicz3.json")]), 1);
    assert_eq!(code(&["--help"]), 0);
}

#[test]
fn domain_errors_print_json() {
    let out = run(["ztorsion", "validate", &data("broken_mv.json")]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("error: "));
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_schema("error", &v);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_ztorsion");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let good = status(&["validate", &data("lukasiewicz3.json")]);
    assert_eq!(good.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&good.stdout).unwrap();
    assert_eq!(v["valid"], true);
    let bad = status(&["validate", &data("broken_mv.json")]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(!bad.stderr.is_empty());
    assert_eq!(status(&["nonsense"]).status.code(), Some(2));
}

#[test]
fn decompose_pointed_group() {
    let v = ok(&["decompose", "--theory", "coslice", "--modulus", "2", &data("z4xz3.json")]);
    assert_schema("decompose", &v);
    assert_eq!(v["middle"], "(ℤ₄⊕ℤ₃,(2,0))");
    assert_eq!(v["orders"], json!([6, 12, 4]));
}

#[test]
fn decompose_every_family() {
    for (file, theory) in [
        ("lukasiewicz3.json", "mv"),
        ("l1xl1.json", "mv"),
        ("chain3.json", "heyting"),
        ("z2_swap.json", "mset"),
        ("z4_2.json", "coslice"),
    ] {
        let v = ok(&["decompose", &data(file)]);
        assert_schema("decompose", &v);
        assert_eq!(v["theory"], theory);
    }
    // the 3-chain: T is the chain itself, F is the two-element algebra
    let v = ok(&["decompose", &data("chain3.json")]);
    assert_eq!(v["orders"], json!([3, 3, 2]));
}

#[test]
fn swapped_theory_has_no_sequence_for_the_square() {
    assert_eq!(code(&["decompose", "--theory", "mv-swapped", &data("l1xl1.json")]), 1);
    let v = ok(&["decompose", "--theory", "mv-swapped", &data("lukasiewicz3.json")]);
    assert_schema("decompose", &v);
}

#[test]
fn subset_commands() {
    let v = ok(&["radical", &data("l1xl1.json")]);
    assert_schema("radical", &v);
    assert_eq!(v["perfect_part"], json!(["(0,0)", "(1,1)"]));
    assert_eq!(v["radical"], json!(["(0,0)"]));

    let v = ok(&["fix", &data("z2_swap.json")]);
    assert_schema("fix", &v);
    assert_eq!(v["fix"], json!([]));

    let v = ok(&["divisible-part", &data("z4xz3.json")]);
    assert_schema("divisible-part", &v);
    assert_eq!(v["divisible_part"].as_array().unwrap().len(), 3);
    assert_eq!(v["reflection"]["elements"].as_array().unwrap().len(), 4);
    assert_eq!(code(&["divisible-part", "--modulus", "3", &data("z4xz3.json")]), 1);
}

#[test]
fn homs_between_pointed_groups() {
    let v = ok(&["homs", &data("coslice_small.json"), "--source", "(Z4,2)", "--target", "(Z2,1)"]);
    assert_schema("homs", &v);
    assert_eq!(v["count"], 0);
    let v = ok(&["homs", &data("coslice_small.json"), "--source", "(Z4,2)", "--target", "(Z2,0)"]);
    assert_eq!(v["count"], 2);
}

#[test]
fn kernels_and_cokernels() {
    let v = ok(&["zker", &data("coslice_small.json"), &data("z4_onto_z2.json")]);
    assert_schema("zker", &v);
    assert_eq!(v["kernel_object"]["elements"].as_array().unwrap().len(), 2);
    let v = ok(&["zcoker", &data("coslice_small.json"), &data("z4_onto_z2.json")]);
    assert_schema("zcoker", &v);
    let v = ok(&["zker", &data("chains.json"), &data("chain3_unit.json")]);
    assert_schema("zker", &v);
    let v = ok(&["zcoker", &data("z2_sets.json"), &data("swap_onto_point.json")]);
    assert_schema("zcoker", &v);
}

#[test]
fn factorize_outputs() {
    for (s, m) in [
        ("chains.json", "chain3_unit.json"),
        ("coslice_small.json", "z4_onto_z2.json"),
        ("z4xz3_pair.json", "z4xz3_onto_z4.json"),
        ("z2_sets.json", "swap_onto_point.json"),
    ] {
        let v = ok(&["factorize", &data(s), &data(m)]);
        assert_schema("factorize", &v);
    }
}

#[test]
fn check_reports() {
    let v = ok(&["check", "--theory", "heyting", "--condition", "S", "--catalog-bound", "8"]);
    assert_schema("check", &v);
    assert_eq!(v["verdict"], true);
    let v = ok(&["check", "--theory", "mv-swapped", "--condition", "axioms", "--catalog-bound", "9"]);
    assert_schema("check", &v);
    assert_eq!(v["verdict"], false);
    assert_eq!(v["counterexample"]["objects"], json!(["L1xL1"]));
    let v = ok(&["check", "--theory", "coslice", "--condition", "system", "--catalog-bound", "6"]);
    assert_schema("check", &v);
    assert_eq!(v["verdict"], true);
    let v = ok(&["check", "--theory", "mset", "--monoid", "z2", "--condition", "Mprime", "--catalog-bound", "3"]);
    assert_schema("check", &v);
    assert_eq!(v["verdict"], true);
}

#[test]
fn classify_extensions() {
    let v = ok(&["classify-extension", &data("coslice_small.json"), &data("z4_onto_z2.json"), "--catalog-bound", "8"]);
    assert_schema("classify-extension", &v);
    assert_eq!(v["tag"], "trivial");
    let v = ok(&["classify-extension", &data("z4xz3_pair.json"), &data("z4xz3_onto_z4.json"), "--catalog-bound", "12"]);
    assert_schema("classify-extension", &v);
    assert_eq!(v["tag"], "non-central");
    assert_eq!(v["evidence"]["kernel_object"]["elements"].as_array().unwrap().len(), 6);
    let v = ok(&["classify-extension", &data("chains.json"), &data("chain3_unit.json"), "--catalog-bound", "5"]);
    assert_schema("classify-extension", &v);
    assert_eq!(v["tag"], "non-central");
}

#[test]
fn catalog_directory() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("mv");
    let v = ok(&["catalog", "--family", "mv", "--catalog-bound", "6", "--out", out.to_str().unwrap()]);
    assert_schema("catalog", &v);
    let manifest: Value = serde_json::from_str(&std::fs::read_to_string(out.join("manifest.json")).unwrap()).unwrap();
    assert_eq!(manifest, v);
    let mut files: Vec<_> = std::fs::read_dir(&out).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), v["count"].as_u64().unwrap() as usize + 1);
    for p in files.iter().filter(|p| !p.ends_with("manifest.json")) {
        let text = std::fs::read_to_string(p).unwrap();
        let f = &parse_structures(&text).unwrap()[0];
        assert_eq!(canonical(f), text);
        assert_eq!(ok(&["validate", p.to_str().unwrap()])["valid"], true);
    }
    assert_eq!(code(&["catalog", "--family", "mset", "--catalog-bound", "2"]), 1);
}

#[test]
fn commands_are_deterministic() {
    let runs = [
        vec!["decompose".to_string(), data("z4xz3.json")],
        vec!["factorize".to_string(), data("chains.json"), data("chain3_unit.json")],
        vec!["check".into(), "--theory".into(), "mv".into(), "--condition".into(), "P".into()],
        vec!["catalog".into(), "--family".into(), "heyting".into(), "--catalog-bound".into(), "6".into()],
    ];
    for args in runs {
        let argv = || std::iter::once("ztorsion".to_string()).chain(args.iter().cloned());
        let a = run(argv());
        let b = run(argv());
        assert_eq!(a.code, 0);
        assert_eq!(a, b);
    }
}

fn catalog_kinds() -> Vec<CatalogKind> {
    let mut kinds = vec![CatalogKind::Mv, CatalogKind::Heyting, CatalogKind::Coslice { modulus: 2 }];
    kinds.extend(small_monoids(3).into_iter().map(CatalogKind::MSet));
    kinds
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn catalog_structures_round_trip(kind in 0usize..13, pick in any::<prop::sample::Index>()) {
        let kinds = catalog_kinds();
        let kind = &kinds[kind % kinds.len()];
        let bound = if matches!(kind, CatalogKind::MSet(_)) { 3 } else { 8 };
        let catalog = generate_catalog(kind, bound).unwrap();
        let a = &catalog.instances[pick.index(catalog.instances.len())];
        let text = canonical(&StructureFile::from_algebra(a));
        let parsed = parse_structures(&text).unwrap();
        prop_assert_eq!(canonical(&parsed[0]), text);
        let back = parsed[0].to_algebra().unwrap();
        prop_assert_eq!(&back, &**a);
        prop_assert_eq!(back.labels(), a.labels());
    }
}
