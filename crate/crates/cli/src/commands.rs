//! Subcommands. Each returns a JSON value or a domain error.

use std::fs;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use ztorsion::factorization::{check_condition, factorize, verify_factorization_system, Condition};
use ztorsion::galois::GaloisContext;
use ztorsion::morphisms::enumerate_homs;
use ztorsion::structures::{generate_catalog, small_monoids, validate, Algebra, CatalogKind, Family, Monoid};
use ztorsion::torsion::{
    coslice_divisible_part, coslice_reflect, coslice_torsion_part, mset_contract, mset_fix, mv_perfect_part,
    mv_radical, mv_semisimple_quotient,
};
use ztorsion::{Error, Morphism, TorsionTheory};

use crate::format::{parse_morphism, parse_structures, MonoidFile, StructureFile};
use crate::output;

#[derive(Parser, Debug)]
#[command(name = "ztorsion", version, about = "Torsion theories relative to a class of zero objects")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format; JSON is the only one.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Json)]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OutputFormat {
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TheoryArg {
    Mv,
    MvSwapped,
    Heyting,
    Mset,
    Coslice,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Mv,
    Heyting,
    Mset,
    Coslice,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConditionArg {
    Axioms,
    #[value(name = "N", alias = "n")]
    N,
    #[value(name = "M", alias = "m")]
    M,
    #[value(name = "Mprime", alias = "mprime")]
    MPrime,
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "P", alias = "p")]
    P,
    Lex,
    /// the whole factorization-system sweep
    System,
}

#[derive(Args, Debug, Clone)]
pub struct TheoryOpts {
    /// Torsion theory; inferred from the structure kind when omitted.
    #[arg(long, value_enum)]
    pub theory: Option<TheoryArg>,
    /// Modulus `m` of the coslice category.
    #[arg(long)]
    pub modulus: Option<u64>,
    /// Monoid for M-sets: `trivial`, `z2`, `idempotent`, `small-<k>` or a JSON file.
    #[arg(long)]
    pub monoid: Option<String>,
    /// Largest carrier size in generated catalogs.
    #[arg(long, default_value_t = 6)]
    pub catalog_bound: usize,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the axioms of a structure.
    Validate { structure: PathBuf },
    /// List the homomorphisms between two structures of a file.
    Homs {
        structures: PathBuf,
        #[arg(long)]
        source: Option<String>,
        #[arg(long)]
        target: Option<String>,
    },
    /// The exact sequence T(A) → A → F(A).
    Decompose {
        structure: PathBuf,
        #[command(flatten)]
        opts: TheoryOpts,
    },
    /// Radical, perfect part and semisimple quotient of an MV-algebra.
    Radical { structure: PathBuf },
    /// Fixed points and contraction of an M-set.
    Fix { structure: PathBuf },
    /// Divisible part, torsion part and reflection of a pointed group.
    DivisiblePart {
        structure: PathBuf,
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// The Z-kernel of a morphism.
    Zker {
        structures: PathBuf,
        morphism: PathBuf,
        #[command(flatten)]
        opts: TheoryOpts,
    },
    /// The Z-cokernel of a morphism, when it exists.
    Zcoker {
        structures: PathBuf,
        morphism: PathBuf,
        #[command(flatten)]
        opts: TheoryOpts,
    },
    /// The (E, M)-factorization of a morphism.
    Factorize {
        structures: PathBuf,
        morphism: PathBuf,
        #[command(flatten)]
        opts: TheoryOpts,
    },
    /// Evaluate a condition over a generated catalog.
    Check {
        #[arg(long, value_enum)]
        condition: ConditionArg,
        #[command(flatten)]
        opts: TheoryOpts,
    },
    /// Trivial, normal or central extension.
    ClassifyExtension {
        structures: PathBuf,
        morphism: PathBuf,
        #[command(flatten)]
        opts: TheoryOpts,
    },
    /// Generate a catalog; with `--out`, also write one file per structure.
    Catalog {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long, default_value_t = 4)]
        catalog_bound: usize,
        #[arg(long)]
        modulus: Option<u64>,
        #[arg(long)]
        monoid: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A domain failure: reported on standard error with exit code 1.
#[derive(Debug)]
pub struct Failure(pub String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn load_structures(path: &Path) -> Result<Vec<Arc<Algebra>>, Failure> {
    let files = parse_structures(&read(path)?)?;
    files.iter().map(|f| f.to_algebra().map(Arc::new).map_err(Failure::from)).collect()
}

fn load_one(path: &Path) -> Result<Arc<Algebra>, Failure> {
    let mut all = load_structures(path)?;
    if all.len() != 1 {
        return Err(Failure(format!("{}: expected exactly one structure", path.display())));
    }
    Ok(all.remove(0))
}

fn load_morphism(structures: &Path, morphism: &Path) -> Result<Morphism, Failure> {
    let objs = load_structures(structures)?;
    Ok(parse_morphism(&read(morphism)?)?.to_morphism(&objs)?)
}

/// Resolves a `--monoid` argument.
pub fn resolve_monoid(choice: &str) -> Result<Arc<Monoid>, Failure> {
    let pick = |order: usize, square: usize| {
        small_monoids(order).into_iter().find(|m| m.order() == order && (order == 1 || m.mul(1, 1) == square))
    };
    let found = match choice {
        "trivial" => pick(1, 0),
        "z2" => pick(2, 0),
        "idempotent" => pick(2, 1),
        s if s.starts_with("small-") => {
            let k: usize = s[6..].parse().map_err(|_| Failure(format!("bad monoid `{s}`")))?;
            small_monoids(3).into_iter().nth(k)
        }
        path => {
            let text = read(Path::new(path))?;
            let mf: MonoidFile = serde_json::from_str(&text).map_err(|e| Failure(e.to_string()))?;
            Some(Arc::new(mf.to_monoid()?))
        }
    };
    found.ok_or_else(|| Failure(format!("unknown monoid `{choice}`")))
}

fn theory_for(opts: &TheoryOpts, family: Option<&Family>) -> Result<TorsionTheory, Failure> {
    let inferred = match family {
        Some(Family::Mv) => Some(TheoryArg::Mv),
        Some(Family::Heyting) => Some(TheoryArg::Heyting),
        Some(Family::MSet(_)) => Some(TheoryArg::Mset),
        Some(Family::Coslice { .. }) => Some(TheoryArg::Coslice),
        None => None,
    };
    let tag = opts.theory.or(inferred).ok_or_else(|| Failure("--theory is required".into()))?;
    let th = match tag {
        TheoryArg::Mv => TorsionTheory::mv(),
        TheoryArg::MvSwapped => TorsionTheory::mv_swapped(),
        TheoryArg::Heyting => TorsionTheory::heyting(),
        TheoryArg::Mset => match (family, &opts.monoid) {
            (Some(Family::MSet(m)), _) => TorsionTheory::mset(m.clone()),
            (_, Some(choice)) => TorsionTheory::mset(resolve_monoid(choice)?),
            _ => return Err(Failure("--monoid is required for M-sets".into())),
        },
        TheoryArg::Coslice => match (family, opts.modulus) {
            (Some(Family::Coslice { modulus }), _) => TorsionTheory::coslice(*modulus),
            (_, m) => TorsionTheory::coslice(m.unwrap_or(2)),
        },
    };
    if let Some(f) = family {
        if th.ambient().family() != f {
            return Err(Error::FamilyMismatch.into());
        }
    }
    Ok(th)
}

fn catalog_kind(th: &TorsionTheory) -> CatalogKind {
    match th.ambient().family() {
        Family::Mv => CatalogKind::Mv,
        Family::Heyting => CatalogKind::Heyting,
        Family::MSet(m) => CatalogKind::MSet(m.clone()),
        Family::Coslice { modulus } => CatalogKind::Coslice { modulus: *modulus },
    }
}

pub fn execute(cmd: &Command) -> Result<Value, Failure> {
    match cmd {
        Command::Validate { structure } => {
            let a = load_one(structure)?;
            let report = validate(&a);
            let out = json!({
                "name": a.name(),
                "valid": report.is_valid(),
                "violations": report.violations.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            });
            if report.is_valid() {
                Ok(out)
            } else {
                Err(Failure(format!("{} is not valid: {}", a.name(), out["violations"])))
            }
        }
        Command::Homs { structures, source, target } => {
            let objs = load_structures(structures)?;
            let pick = |name: &Option<String>, default: usize| -> Result<Arc<Algebra>, Failure> {
                match name {
                    Some(n) => objs
                        .iter()
                        .find(|a| a.name() == n)
                        .cloned()
                        .ok_or_else(|| Failure(format!("no structure named `{n}`"))),
                    None => Ok(objs[default.min(objs.len() - 1)].clone()),
                }
            };
            let (a, b) = (pick(source, 0)?, pick(target, 1)?);
            let homs = enumerate_homs(&a, &b)?;
            Ok(json!({
                "source": a.name(),
                "target": b.name(),
                "count": homs.len(),
                "homs": homs.iter().map(output::morphism).collect::<Vec<_>>(),
            }))
        }
        Command::Decompose { structure, opts } => {
            let a = load_one(structure)?;
            let th = theory_for(opts, Some(a.family()))?;
            Ok(output::sequence(&th, &th.decompose(&a)?))
        }
        Command::Radical { structure } => {
            let a = load_one(structure)?;
            if *a.family() != Family::Mv {
                return Err(Error::FamilyMismatch.into());
            }
            let rad = mv_radical(&a);
            let (p, _) = mv_perfect_part(&a);
            let (s, proj) = mv_semisimple_quotient(&a);
            Ok(json!({
                "radical": output::labels(&a, &rad),
                "perfect_part": p.labels(),
                "semisimple_quotient": output::structure(&s),
                "projection": output::morphism(&proj),
                "semisimple": rad == [0],
            }))
        }
        Command::Fix { structure } => {
            let a = load_one(structure)?;
            if !matches!(a.family(), Family::MSet(_)) {
                return Err(Error::FamilyMismatch.into());
            }
            let fix = mset_fix(&a);
            let (c, proj) = mset_contract(&a);
            Ok(json!({
                "fix": output::labels(&a, &fix),
                "contraction": output::structure(&c),
                "projection": output::morphism(&proj),
            }))
        }
        Command::DivisiblePart { structure, modulus } => {
            let a = load_one(structure)?;
            let Family::Coslice { modulus: own } = a.family() else {
                return Err(Error::FamilyMismatch.into());
            };
            let m = modulus.unwrap_or(*own);
            if m != *own {
                return Err(Error::FamilyMismatch.into());
            }
            let d = coslice_divisible_part(&a, m);
            let (t, _) = coslice_torsion_part(&a);
            let (f, proj) = coslice_reflect(&a);
            Ok(json!({
                "modulus": m,
                "divisible_part": output::labels(&a, &d),
                "torsion_part": t.labels(),
                "reflection": output::structure(&f),
                "projection": output::morphism(&proj),
            }))
        }
        Command::Zker { structures, morphism, opts } => {
            let f = load_morphism(structures, morphism)?;
            let th = theory_for(opts, Some(f.source().family()))?;
            let amb = th.ambient();
            Ok(output::zker(amb, &f, &amb.zker(&f)))
        }
        Command::Zcoker { structures, morphism, opts } => {
            let f = load_morphism(structures, morphism)?;
            let th = theory_for(opts, Some(f.source().family()))?;
            let amb = th.ambient();
            Ok(output::zcoker(amb, &f, amb.zcoker(&f).as_ref()))
        }
        Command::Factorize { structures, morphism, opts } => {
            let f = load_morphism(structures, morphism)?;
            let th = theory_for(opts, Some(f.source().family()))?;
            Ok(output::factorization(&th, &f, &factorize(&th, &f)?))
        }
        Command::Check { condition, opts } => {
            let th = theory_for(opts, None)?;
            let catalog = generate_catalog(&catalog_kind(&th), opts.catalog_bound)?;
            let c = match condition {
                ConditionArg::Axioms => Condition::Axioms,
                ConditionArg::N => Condition::N,
                ConditionArg::M => Condition::M,
                ConditionArg::MPrime => Condition::MPrime,
                ConditionArg::S => Condition::S,
                ConditionArg::P => Condition::P,
                ConditionArg::Lex => Condition::Lex,
                ConditionArg::System => {
                    return Ok(output::system(&th, &catalog, &verify_factorization_system(&th, &catalog)?));
                }
            };
            Ok(output::condition(&th, &check_condition(&th, c, &catalog)?))
        }
        Command::ClassifyExtension { structures, morphism, opts } => {
            let f = load_morphism(structures, morphism)?;
            let th = theory_for(opts, Some(f.source().family()))?;
            let catalog = generate_catalog(&catalog_kind(&th), opts.catalog_bound)?;
            let ctx = GaloisContext::new(th, &catalog)?;
            Ok(output::extension(&ctx, &f, &ctx.classify_extension(&f)?))
        }
        Command::Catalog { family, catalog_bound, modulus, monoid, out } => {
            let kind = match family {
                FamilyArg::Mv => CatalogKind::Mv,
                FamilyArg::Heyting => CatalogKind::Heyting,
                FamilyArg::Coslice => CatalogKind::Coslice { modulus: modulus.unwrap_or(2) },
                FamilyArg::Mset => {
                    let choice = monoid.as_deref().ok_or_else(|| Failure("--monoid is required for M-sets".into()))?;
                    CatalogKind::MSet(resolve_monoid(choice)?)
                }
            };
            let catalog = generate_catalog(&kind, *catalog_bound)?;
            let manifest = output::manifest(&catalog);
            if let Some(dir) = out {
                write_catalog(dir, &catalog.instances, &manifest)?;
            }
            Ok(manifest)
        }
    }
}

/// File name for a structure: its name with anything unusual replaced.
pub fn file_stem(index: usize, name: &str) -> String {
    let clean: String = name.chars().map(|c| if c.is_ascii_alphanumeric() || c == '-' { c } else { '_' }).collect();
    format!("{index:03}_{clean}")
}

fn write_catalog(dir: &Path, objs: &[Arc<Algebra>], manifest: &Value) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure(format!("{}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    for (i, a) in objs.iter().enumerate() {
        let path = dir.join(format!("{}.json", file_stem(i, a.name())));
        fs::write(path, crate::format::canonical(&StructureFile::from_algebra(a))).map_err(io)?;
    }
    fs::write(dir.join("manifest.json"), crate::format::canonical(manifest)).map_err(io)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_stems_are_portable() {
        assert_eq!(file_stem(7, "(Z4,2)"), "007__Z4_2_");
        assert_eq!(file_stem(0, "L1xL1"), "000_L1xL1");
    }

    #[test]
    fn builtin_monoids() {
        assert_eq!(resolve_monoid("trivial").unwrap().order(), 1);
        let z2 = resolve_monoid("z2").unwrap();
        assert_eq!(z2.mul(1, 1), 0);
        let idem = resolve_monoid("idempotent").unwrap();
        assert_eq!(idem.mul(1, 1), 1);
        assert_eq!(resolve_monoid("small-9").unwrap().order(), 3);
        assert!(resolve_monoid("small-10").is_err());
    }

    #[test]
    fn theory_follows_the_structure() {
        let opts = TheoryOpts { theory: None, modulus: None, monoid: None, catalog_bound: 4 };
        assert_eq!(theory_for(&opts, Some(&Family::Heyting)).unwrap(), TorsionTheory::heyting());
        assert!(theory_for(&opts, None).is_err());
        let clash = TheoryOpts { theory: Some(TheoryArg::Mv), ..opts };
        assert!(theory_for(&clash, Some(&Family::Heyting)).is_err());
    }
}
