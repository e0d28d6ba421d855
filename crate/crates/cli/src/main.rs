//! Command-line front end: structured input parsing, catalog of built-in
//! examples, subcommand dispatch, canonical report emission.
//!
//! Exit codes: 0 success, 2 parse/validation error, 3 invariant violation,
//! 4 resource cap exceeded.

use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use kempf_core::bb::{assemble_bb, fixed_ideal, BBOptions};
use kempf_core::coaction::{find_kempf_opsg, universal_quotient, KempfOnePSG};
use kempf_core::error::Error;
use kempf_core::formal::{
    check_stabilization, check_stabilization_module, truncate, validate_grounded, AdicModule,
    GeneratorWeightSpec,
};
use kempf_core::grading::WeightVector;
use kempf_core::parse_poly;
use kempf_core::poly::{MonomialOrder, MultiPoly};

use kempf_cli::input::{parse_doc, ProblemDoc, Resolved};
use kempf_cli::{catalog, report};

#[derive(Parser)]
#[command(
    name = "kempf",
    version,
    about = "Attractor decompositions, Kempf cocharacters, and formal truncations \
             for affine schemes with monoid actions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Attractor decomposition: both ideals, structure maps, verification
    Bb(ProblemArgs),
    /// Search for a Kempf one-parameter subgroup through the central torus
    Kempf(ProblemArgs),
    /// Fixed-scheme ideal of a Kempf grading
    Fixed(ProblemArgs),
    /// Isotypic dimension tables and stabilization bounds of the truncation tower
    Stabilize(ProblemArgs),
    /// Reconstruct per-character pieces from truncation data
    Algebraize(ProblemArgs),
    /// Universal monoid-representation quotient of the acted space
    #[command(name = "universal-quotient")]
    UniversalQuotient(ProblemArgs),
    /// Built-in examples
    Catalog {
        #[command(subcommand)]
        action: CatalogCommand,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// List every entry
    List,
    /// Print one entry's presentations
    Show { key: String },
}

#[derive(Args)]
struct ProblemArgs {
    /// Input document path; `-` or absent reads standard input
    input: Option<PathBuf>,
    /// Use a built-in example instead of (or as defaults for) a document
    #[arg(long)]
    catalog: Option<String>,
    /// Truncation depth
    #[arg(long)]
    depth: Option<usize>,
    /// Degree bound for the outsider-component adjunction
    #[arg(long)]
    degree_bound: Option<u32>,
    /// Iteration cap on ideal saturation
    #[arg(long)]
    saturation_cap: Option<usize>,
    /// Monomial order for reported generator lists
    #[arg(long, value_enum, default_value_t = OrderArg::Grevlex)]
    order: OrderArg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OrderArg {
    Grevlex,
    Lex,
}

impl From<OrderArg> for MonomialOrder {
    fn from(o: OrderArg) -> Self {
        match o {
            OrderArg::Grevlex => MonomialOrder::GrevLex,
            OrderArg::Lex => MonomialOrder::Lex,
        }
    }
}

struct Output {
    text: String,
    code: i32,
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvariantViolation(_) => 3,
        Error::SaturationCap { .. } | Error::ResourceCap(_) => 4,
        _ => 2,
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            print!("{}", out.text);
            std::process::exit(out.code);
        }
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(exit_code(&e));
        }
    }
}

fn run(cli: Cli) -> Result<Output, Error> {
    match cli.command {
        Command::Bb(args) => cmd_bb(args),
        Command::Kempf(args) => cmd_kempf(args),
        Command::Fixed(args) => cmd_fixed(args),
        Command::Stabilize(args) => cmd_stabilize(args),
        Command::Algebraize(args) => cmd_algebraize(args),
        Command::UniversalQuotient(args) => cmd_universal_quotient(args),
        Command::Catalog { action } => cmd_catalog(action),
    }
}

/// Load the document, resolve it against any catalog entry, and apply flag
/// overrides. Returns the resolved problem and a printable source label.
fn load(args: &ProblemArgs) -> Result<(Resolved, String), Error> {
    let doc = match &args.input {
        Some(path) if path.as_os_str() != "-" => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
            parse_doc(&text)?
        }
        Some(_) => read_stdin_doc()?,
        None if args.catalog.is_none() => read_stdin_doc()?,
        None => ProblemDoc::default(),
    };

    let key = args.catalog.clone().or_else(|| doc.catalog.clone());
    let entry = match &key {
        Some(k) => Some(catalog::load(k)?),
        None => None,
    };
    let mut resolved = doc.resolve(entry.as_ref())?;

    if let Some(depth) = args.depth {
        resolved.depth = depth;
    }
    if let Some(b) = args.degree_bound {
        resolved.degree_bound = Some(b);
    }
    if let Some(c) = args.saturation_cap {
        resolved.saturation_cap = c;
    }
    let source = key.unwrap_or_else(|| "input".to_string());
    Ok((resolved, source))
}

fn read_stdin_doc() -> Result<ProblemDoc, Error> {
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .map_err(|e| Error::Parse(format!("cannot read standard input: {e}")))?;
    parse_doc(&text)
}

/// The Kempf cocharacter in the central-torus lattice: an explicit
/// `params.kempf` wins, otherwise the search runs.
fn central_cochar(resolved: &Resolved) -> Result<KempfOnePSG, Error> {
    if let Some(c) = &resolved.kempf_cochar {
        return Ok(KempfOnePSG { cochar: c.clone() });
    }
    let monoid = resolved.monoid.as_ref().ok_or_else(|| {
        Error::Parse("this command needs monoid data (inline or from the catalog)".into())
    })?;
    match find_kempf_opsg(monoid)? {
        Some(k) => Ok(k),
        None => Err(Error::Parse(
            "no Kempf one-parameter subgroup through the given torus; \
             supply `params.kempf` explicitly"
                .into(),
        )),
    }
}

/// The Kempf cocharacter in the maximal-torus lattice, for grading-only
/// commands. Without monoid data, `params.kempf` is already a torus
/// cocharacter, and a rank-1 torus defaults to (1).
fn torus_cochar(resolved: &Resolved) -> Result<WeightVector, Error> {
    if let Some(monoid) = &resolved.monoid {
        let k = central_cochar(resolved)?;
        return monoid.embed_cochar(&k.cochar);
    }
    if let Some(c) = &resolved.kempf_cochar {
        return Ok(c.clone());
    }
    let alg = resolved
        .algebra
        .as_ref()
        .ok_or_else(|| Error::Parse("this command needs [ring] and [torus] data".into()))?;
    if alg.action().rank() == 1 {
        return Ok(WeightVector(vec![1]));
    }
    Err(Error::Parse(
        "no Kempf cocharacter available: supply `params.kempf` or monoid data".into(),
    ))
}

fn require_algebra(resolved: &Resolved) -> Result<&kempf_core::grading::GradedAlgebra, Error> {
    resolved
        .algebra
        .as_ref()
        .ok_or_else(|| Error::Parse("this command needs [ring] and [torus] data".into()))
}

fn default_characters(resolved: &Resolved, rank: usize) -> Vec<WeightVector> {
    if resolved.characters.is_empty() {
        vec![WeightVector(vec![0; rank])]
    } else {
        resolved.characters.clone()
    }
}

fn cmd_bb(args: ProblemArgs) -> Result<Output, Error> {
    let (resolved, source) = load(&args)?;
    let alg = require_algebra(&resolved)?;
    let monoid = resolved
        .monoid
        .as_ref()
        .ok_or_else(|| Error::Parse("bb needs monoid data (inline or from the catalog)".into()))?;
    let kempf = central_cochar(&resolved)?;
    let opts = BBOptions {
        degree_bound: resolved.degree_bound,
        saturation_cap: resolved.saturation_cap,
    };
    let out = assemble_bb(alg, monoid, &kempf, opts)?;
    let code = if out.verification.all_ok() { 0 } else { 3 };
    let text = report::bb_report(&source, alg, &out, args.order.into());
    Ok(Output { text, code })
}

fn cmd_kempf(args: ProblemArgs) -> Result<Output, Error> {
    let (resolved, source) = load(&args)?;
    let monoid = resolved.monoid.as_ref().ok_or_else(|| {
        Error::Parse("kempf needs monoid data (inline or from the catalog)".into())
    })?;
    let found = find_kempf_opsg(monoid)?;
    let text = report::kempf_report(&source, found.as_ref().map(|k| &k.cochar));
    Ok(Output { text, code: 0 })
}

fn cmd_fixed(args: ProblemArgs) -> Result<Output, Error> {
    let (resolved, source) = load(&args)?;
    let alg = require_algebra(&resolved)?;
    let cochar = torus_cochar(&resolved)?;
    let fix = fixed_ideal(alg, &cochar)?;
    let text = report::fixed_report(&source, alg, &fix, args.order.into());
    Ok(Output { text, code: 0 })
}

fn cmd_stabilize(args: ProblemArgs) -> Result<Output, Error> {
    let (resolved, source) = load(&args)?;
    let alg = require_algebra(&resolved)?;
    let cochar = torus_cochar(&resolved)?;
    let chars = default_characters(&resolved, alg.action().rank());
    let trunc = truncate(alg.clone(), cochar.clone(), resolved.depth)?;

    if !resolved.module_weights.is_empty() {
        // groundedness gate first, then a finite presentation is required
        validate_grounded(&resolved.module_weights, &cochar)?;
        let mut gen_weights = Vec::new();
        for spec in &resolved.module_weights {
            match spec {
                GeneratorWeightSpec::Single(w) => gen_weights.push(w.clone()),
                _ => {
                    return Err(Error::Parse(
                        "infinite generator families are accepted only for groundedness \
                         checking; list generators explicitly for dimension tables"
                            .into(),
                    ))
                }
            }
        }
        let trunc = std::sync::Arc::new(trunc);
        let ring = std::sync::Arc::clone(trunc.base().ring());
        let relations: Vec<Vec<MultiPoly>> = resolved
            .module_relations
            .iter()
            .map(|col| col.iter().map(|s| parse_poly(&ring, s)).collect())
            .collect::<Result<_, _>>()?;
        let module = AdicModule::new(trunc, gen_weights, relations)?;
        let rep = check_stabilization_module(&module, &chars)?;
        let text = report::stabilize_report(&source, "module", resolved.depth, &rep);
        return Ok(Output { text, code: 0 });
    }

    let rep = check_stabilization(&trunc, &chars)?;
    let text = report::stabilize_report(&source, "algebra", resolved.depth, &rep);
    Ok(Output { text, code: 0 })
}

fn cmd_algebraize(args: ProblemArgs) -> Result<Output, Error> {
    let (resolved, source) = load(&args)?;
    let alg = require_algebra(&resolved)?;
    let cochar = torus_cochar(&resolved)?;
    let chars = default_characters(&resolved, alg.action().rank());
    let trunc = truncate(alg.clone(), cochar, resolved.depth)?;
    let pieces = trunc.algebraize(&chars)?;
    let text = report::algebraize_report(&source, &pieces);
    Ok(Output { text, code: 0 })
}

fn cmd_universal_quotient(args: ProblemArgs) -> Result<Output, Error> {
    let (resolved, source) = load(&args)?;
    let monoid = resolved
        .monoid
        .as_ref()
        .ok_or_else(|| Error::Parse("universal-quotient needs monoid data".into()))?;
    let group = resolved.group.as_ref().unwrap_or_else(|| monoid.group());
    let u = universal_quotient(group.action_matrix(), monoid)?;
    let text = report::universal_quotient_report(&source, &u);
    Ok(Output { text, code: 0 })
}

fn cmd_catalog(action: CatalogCommand) -> Result<Output, Error> {
    match action {
        CatalogCommand::List => {
            let mut text = String::new();
            for entry in catalog::load_all_validated()? {
                text.push_str(&format!("{:<18} {}\n", entry.key, entry.description));
            }
            Ok(Output { text, code: 0 })
        }
        CatalogCommand::Show { key } => {
            let entry = catalog::load(&key)?;
            let text = report::catalog_show(
                entry.key,
                entry.description,
                &entry.group,
                &entry.monoid,
                entry.default_algebra.as_ref(),
            );
            Ok(Output { text, code: 0 })
        }
    }
}
