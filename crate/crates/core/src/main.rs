use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use hopf_forge::braided::{self, AlgObject, BraidedBialgebra, StructKind};
use hopf_forge::catalog::{self, Entry};
use hopf_forge::cocycle::{self, Cocycle2};
use hopf_forge::double::{self, DEFAULT_MAX_STEPS};
use hopf_forge::hopf;
use hopf_forge::io::{self, Document, IoError, Structure};
use hopf_forge::report::Report;
use hopf_forge::FieldSpec;

/// Exact computations with finite-dimensional (braided) Hopf algebras,
/// their doubles and cocycle twists.
#[derive(Parser)]
#[command(name = "hopf-forge", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    opts: Global,
}

#[derive(Args)]
struct Global {
    /// Coefficient field, e.g. `Q`, `Q(zeta_3)`, `Q(q)`.
    #[arg(long, global = true)]
    field: Option<FieldSpec>,
    /// Worker threads for `check --all`.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Rewrite budget for straightening products in doubles.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_STEPS)]
    max_rewrite_steps: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    report_format: Format,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Verify the axioms of structures in a document or in the catalog.
    Check {
        /// Document to check.
        file: Option<PathBuf>,
        /// Only this structure of the document.
        #[arg(long)]
        structure: Option<String>,
        /// Check one catalog entry instead of a file.
        #[arg(long, conflicts_with = "file")]
        catalog: Option<String>,
        /// Check every catalog entry.
        #[arg(long, conflicts_with_all = ["file", "catalog"])]
        all: bool,
    },
    /// Construct a new structure and write it as a document.
    Build {
        #[arg(value_enum)]
        what: BuildKind,
        #[command(flatten)]
        args: BuildArgs,
    },
    /// List catalog names.
    List,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildKind {
    /// Drinfeld double of a pairing.
    Double,
    /// Heisenberg double of a pairing.
    Heis,
    /// Smash product A#K of a module algebra.
    Smash,
    /// Bosonization of a braided Hopf algebra.
    Bosonize,
    /// Cocycle twist of a Hopf algebra or double.
    Twist,
    /// Cocycle on a double composed from cocycles on its two factors.
    ComposeCocycles,
    /// A catalog entry, unchanged.
    Catalog,
}

#[derive(Args)]
struct BuildArgs {
    /// Catalog entry used as input (a pairing for `double`, `heis` and
    /// `compose-cocycles`).
    #[arg(long)]
    catalog: Option<String>,
    /// Input document.
    #[arg(long, alias = "algebra")]
    input: Option<PathBuf>,
    /// Structure of the input document to use.
    #[arg(long)]
    structure: Option<String>,
    /// Hopf structure acting, for `smash`.
    #[arg(long)]
    hopf: Option<String>,
    /// Action map K⊗A→A for `smash`; the trivial action when omitted.
    #[arg(long)]
    action: Option<String>,
    /// Cocycle for `twist`: a cocycle structure of the input, or
    /// `indB-triv` / `indC-triv` for the induced cocycles of a double.
    #[arg(long)]
    cocycle: Option<String>,
    /// Cocycle on B for `compose-cocycles` (trivial when omitted).
    #[arg(long)]
    sigma: Option<String>,
    /// Cocycle on C for `compose-cocycles` (trivial when omitted).
    #[arg(long)]
    tau: Option<String>,
    /// Output document.
    #[arg(long)]
    out: PathBuf,
}

enum Failure {
    Input(String),
}

impl From<IoError> for Failure {
    fn from(e: IoError) -> Self {
        Failure::Input(e.to_string())
    }
}

fn input<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Input(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.opts.jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global();
    }
    let res = match &cli.cmd {
        Cmd::Check { file, structure, catalog, all } => check(&cli.opts, file.as_ref(), structure.as_deref(), catalog.as_deref(), *all),
        Cmd::Build { what, args } => build(&cli.opts, *what, args),
        Cmd::List => {
            for n in catalog::NAMES {
                println!("{n}");
            }
            Ok(true)
        }
    };
    match res {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(opts: &Global, reports: &[Report]) -> bool {
    let reports: Vec<Report> = reports.iter().cloned().map(Report::sorted).collect();
    match opts.report_format {
        Format::Text => {
            for r in &reports {
                print!("{r}");
            }
        }
        Format::Json => println!("{}", serde_json::to_string_pretty(&reports).expect("reports serialize")),
    }
    reports.iter().all(Report::passed)
}

fn load(opts: &Global, path: &PathBuf) -> Result<Document, Failure> {
    let doc = Document::load(path)?;
    if let Some(f) = &opts.field {
        if f != doc.field() {
            return Err(Failure::Input(format!("{}: document field is {}, expected {f}", path.display(), doc.field())));
        }
    }
    Ok(doc)
}

fn check(opts: &Global, file: Option<&PathBuf>, structure: Option<&str>, cat: Option<&str>, all: bool) -> Result<bool, Failure> {
    if all {
        let start = Instant::now();
        let reports: Vec<Report> = catalog::NAMES
            .par_iter()
            .map(|name| match catalog::lookup(name) {
                Ok(e) => {
                    let mut r = e.check();
                    r.subject = format!("{name}: {}", r.subject);
                    r
                }
                Err(e) => {
                    let mut r = Report::new(name.to_string());
                    r.check("construct", false, Some(e.to_string()));
                    r
                }
            })
            .collect();
        let ok = emit(opts, &reports);
        if opts.report_format == Format::Text {
            let passed = reports.iter().filter(|r| r.passed()).count();
            println!("{passed}/{} catalog entries pass in {:.2}s", reports.len(), start.elapsed().as_secs_f64());
        }
        return Ok(ok);
    }
    if let Some(name) = cat {
        let e = catalog::lookup(name).map_err(input)?;
        let mut r = e.check();
        r.subject = format!("{name}: {}", r.subject);
        return Ok(emit(opts, &[r]));
    }
    let Some(path) = file else {
        return Err(Failure::Input("give a document, --catalog NAME or --all".into()));
    };
    let doc = load(opts, path)?;
    let names: Vec<String> = match structure {
        Some(s) => vec![s.to_string()],
        None => doc.structures.iter().map(|s| s.name().to_string()).collect(),
    };
    if names.is_empty() {
        return Err(Failure::Input(format!("{} holds no structures", path.display())));
    }
    let reports = names.iter().map(|n| doc.check(n, opts.max_rewrite_steps)).collect::<Result<Vec<_>, _>>()?;
    Ok(emit(opts, &reports))
}

fn fix_field(opts: &Global, doc: &mut Document) -> Result<(), Failure> {
    if let Some(f) = &opts.field {
        doc.set_field(f.clone())?;
    }
    Ok(())
}

fn source_pairing(opts: &Global, a: &BuildArgs) -> Result<(hopf_forge::double::Pairing, Option<Document>), Failure> {
    if let Some(c) = &a.catalog {
        return Ok((catalog::pairing_by_name(c).map_err(input)?, None));
    }
    let path = a.input.as_ref().ok_or_else(|| Failure::Input("give --catalog NAME or --input FILE".into()))?;
    let doc = load(opts, path)?;
    let name = match &a.structure {
        Some(s) => s.clone(),
        None => doc
            .structures
            .iter()
            .find(|s| matches!(s, Structure::Pairing { .. }))
            .map(|s| s.name().to_string())
            .ok_or_else(|| Failure::Input(format!("{} holds no pairing", path.display())))?,
    };
    Ok((doc.pairing(&name)?, Some(doc)))
}

fn source_braided(opts: &Global, a: &BuildArgs) -> Result<BraidedBialgebra, Failure> {
    if let Some(c) = &a.catalog {
        return match catalog::lookup(c).map_err(input)? {
            Entry::Braided(b) => Ok(b),
            Entry::Hopf(h) => Ok(BraidedBialgebra::from_hopf(&h)),
            _ => Err(Failure::Input(format!("`{c}` is not a bialgebra"))),
        };
    }
    let path = a.input.as_ref().ok_or_else(|| Failure::Input("give --catalog NAME or --input FILE".into()))?;
    let doc = load(opts, path)?;
    let name = a.structure.as_deref().ok_or_else(|| Failure::Input("give --structure NAME".into()))?;
    Ok(doc.braided(name)?)
}

fn build(opts: &Global, what: BuildKind, a: &BuildArgs) -> Result<bool, Failure> {
    let budget = opts.max_rewrite_steps;
    let mut doc = Document::new();
    fix_field(opts, &mut doc)?;
    let mut reports = Vec::new();
    match what {
        BuildKind::Catalog => {
            let name = a.catalog.as_deref().ok_or_else(|| Failure::Input("give --catalog NAME".into()))?;
            let e = catalog::lookup(name).map_err(input)?;
            doc = io::entry_document(name, &e)?;
            fix_field(opts, &mut doc)?;
        }
        BuildKind::Double => {
            let (p, _) = source_pairing(opts, a)?;
            let d = double::drinfeld_double_with_budget(&p, budget).map_err(input)?;
            doc.add_double("D", &d)?;
            doc.metadata.insert("rewrite_steps".into(), d.rewrite_steps.into());
        }
        BuildKind::Heis => {
            let (p, _) = source_pairing(opts, a)?;
            let h = double::heisenberg_double_with_budget(&p, budget).map_err(input)?;
            doc.add_pairing("P", &p)?;
            doc.add_algebra("Heis", &h.algebra)?;
            reports.push(hopf::check_algebra(&h.algebra));
        }
        BuildKind::Smash => {
            let path = a.input.as_ref().ok_or_else(|| Failure::Input("give --input FILE".into()))?;
            let src = load(opts, path)?;
            let aname = a.structure.as_deref().ok_or_else(|| Failure::Input("give --structure NAME (the module algebra)".into()))?;
            let kname = a.hopf.as_deref().ok_or_else(|| Failure::Input("give --hopf NAME (the acting Hopf algebra)".into()))?;
            let alg = src.algebra(aname)?;
            let k = BraidedBialgebra::from_hopf(&src.hopf(kname)?);
            let obj = k.amb.trivial_module(std::slice::from_ref(&alg.space));
            let structure = match &a.action {
                Some(m) => src.map(m)?.clone(),
                None => braided::trivial_structure(&k, StructKind::LeftModule, std::slice::from_ref(&alg.space)),
            };
            let ao = AlgObject { b: k, obj, mult: alg.mult, unit: alg.unit, structure, kind: StructKind::LeftModule };
            reports.push(braided::check_module_algebra(&ao));
            let cp = double::smash_product(&ao).map_err(input)?;
            doc.add_algebra(&format!("{aname}#{kname}"), &cp.algebra)?;
            reports.push(hopf::check_algebra(&cp.algebra));
        }
        BuildKind::Bosonize => {
            let b = source_braided(opts, a)?;
            let h = double::bosonize(&b).map_err(input)?;
            doc.add_hopf("Boson", &h)?;
            reports.push(hopf::check_hopf(&h));
        }
        BuildKind::Twist => {
            let path = a.input.as_ref().ok_or_else(|| Failure::Input("give --algebra FILE".into()))?;
            let src = load(opts, path)?;
            let spec = a.cocycle.as_deref().ok_or_else(|| Failure::Input("give --cocycle NAME | indB-triv | indC-triv".into()))?;
            let sigma = match spec {
                "indB-triv" | "indC-triv" => {
                    let dname = match &a.structure {
                        Some(s) => s.clone(),
                        None => src
                            .structures
                            .iter()
                            .find(|s| matches!(s, Structure::Double { .. }))
                            .map(|s| s.name().to_string())
                            .ok_or_else(|| Failure::Input(format!("{} holds no double", path.display())))?,
                    };
                    let d = src.double(&dname, budget)?;
                    let p = &d.pairing;
                    let s = if spec == "indB-triv" {
                        cocycle::ind_b(&Cocycle2::trivial(&p.b), &d)
                    } else {
                        cocycle::ind_c(&Cocycle2::trivial(&p.c), &d)
                    };
                    s.map_err(input)?
                }
                name => src.cocycle(name)?.map_err(input)?,
            };
            reports.push(cocycle::check_cocycle(&sigma));
            let t = cocycle::twist_algebra(&sigma);
            let alg = hopf::Algebra { space: t.space().clone(), mult: t.mult.clone(), unit: t.unit.clone() };
            reports.push(hopf::check_algebra(&alg));
            doc.add_cocycle("sigma", &sigma)?;
            doc.add_algebra("twisted", &alg)?;
        }
        BuildKind::ComposeCocycles => {
            let (p, src) = source_pairing(opts, a)?;
            let pick = |name: &Option<String>, over: &BraidedBialgebra| -> Result<Cocycle2, Failure> {
                match name {
                    None => Ok(Cocycle2::trivial(over)),
                    Some(n) => {
                        let doc = src.as_ref().ok_or_else(|| Failure::Input("--sigma/--tau need --input FILE".into()))?;
                        let s = doc.cocycle(n)?.map_err(input)?;
                        let same = s.over.mult == over.mult && s.over.comult == over.comult;
                        if !same {
                            return Err(Failure::Input(format!("cocycle `{n}` does not live on the expected factor")));
                        }
                        Ok(Cocycle2 { over: over.clone(), ..s })
                    }
                }
            };
            let s = pick(&a.sigma, &p.b)?;
            let t = pick(&a.tau, &p.c)?;
            let d = double::drinfeld_double_with_budget(&p, budget).map_err(input)?;
            let c = cocycle::compose_cocycles(&s, &t, &d).map_err(input)?;
            reports.push(cocycle::check_cocycle(&c));
            doc.add_double("D", &d)?;
            doc.add_cocycle_over("composite", "D.H", &c.sigma)?;
        }
    }
    doc.save(&a.out)?;
    let ok = emit(opts, &reports);
    if opts.report_format == Format::Text {
        println!("wrote {}", a.out.display());
    }
    Ok(ok)
}
