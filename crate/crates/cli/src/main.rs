use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde::Serialize;
use serde_json::json;

use edbound::bound::{self, BoundOptions, DegreeData};
use edbound::catalog::{Catalog, VerificationReport};
use edbound::character::TABLE_SEED;
use edbound::lie::{self, Family, LieAlgebra, RANK_SEED};
use edbound::{CharacterTable, Error, FiniteGroup, GroupDefinition, DEFAULT_ORDER_CAP};

#[derive(Parser)]
#[command(name = "edbound", version, about = "Exact group and Lie algebra computations for essential dimension bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order that will be enumerated.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    cap: usize,
    /// Catalog file (defaults to the built-in catalog).
    #[arg(long, global = true)]
    catalog: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Group structure summaries.
    Group {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// Character table of a group file or catalog group.
    Chartable {
        target: String,
        #[command(flatten)]
        common: Common,
    },
    /// Frobenius–Schur indicators of the irreducible characters.
    Fsind {
        target: String,
        #[command(flatten)]
        common: Common,
    },
    /// Upper bound s for a simple group (catalog name or group file).
    Bound {
        target: Option<String>,
        /// Include optional catalog covers.
        #[arg(long)]
        with_optional: bool,
        /// Use externally supplied degree data instead of enumerating the group.
        #[arg(long, value_name = "FILE")]
        degrees_from: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Export degree data (degrees, indicators, faithfulness) of a group and its catalog covers.
    Degrees {
        target: String,
        #[arg(long)]
        with_optional: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Catalog listing and verification.
    Catalog {
        #[command(subcommand)]
        command: CatalogCommand,
    },
    /// Lie algebra tools. ALGEBRA is a structure-constant file or a built-in
    /// name (sl2, sl<n>, so<n>, sp<n>, so3eps, abelian<n>, aff1).
    Lie {
        #[command(subcommand)]
        command: LieCommand,
    },
    /// Least m with chi_target inside the m-th tensor power of faithful chi_faithful.
    Contain {
        target: String,
        #[arg(long)]
        faithful: usize,
        /// Target irreducible; all of them when omitted.
        #[arg(long = "target")]
        target_index: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum GroupCommand {
    /// Order, classes, center and simplicity.
    Info {
        target: String,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum CatalogCommand {
    /// Names of base groups and cover entries.
    List {
        #[command(flatten)]
        common: Common,
    },
    /// Verify one entry, or every entry (optional ones included).
    Verify {
        entry: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Subcommand)]
enum LieCommand {
    /// Check antisymmetry and the Jacobi identity.
    Validate {
        algebra: String,
        #[command(flatten)]
        common: Common,
    },
    /// Killing form and semisimplicity.
    Killing {
        algebra: String,
        #[command(flatten)]
        common: Common,
    },
    /// Rank from the seeded generic-element schedule.
    Rank {
        algebra: String,
        #[command(flatten)]
        common: Common,
    },
    /// Simple type by dimension and rank.
    Classify {
        algebra: String,
        #[command(flatten)]
        common: Common,
    },
    /// (r, s) for a simple type, e.g. `A 5`, `orthogonal 7`, `symplectic 4`, `G2`.
    Table {
        family: String,
        n: Option<u64>,
        #[command(flatten)]
        common: Common,
    },
    /// Check that vectors span a subalgebra; `--basis "1,0,0;0,1,0"`.
    Subalgebra {
        algebra: String,
        #[arg(long)]
        basis: String,
        #[command(flatten)]
        common: Common,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Error(e)) => {
            eprintln!("{}", json!({ "error": { "category": e.category(), "message": e.to_string() } }));
            ExitCode::from(2)
        }
        Err(Failure::Report { category, output }) => {
            emit(&output);
            eprintln!("{}", json!({ "error": { "category": category, "message": "one or more checks failed" } }));
            ExitCode::from(1)
        }
    }
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(out: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(out.as_bytes());
    if !out.ends_with('\n') {
        let _ = stdout.write_all(b"\n");
    }
}

enum Failure {
    Error(Error),
    /// The command produced a report in which something failed.
    Report { category: &'static str, output: String },
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Error(e.into())
    }
}

type CmdResult = Result<String, Failure>;

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("output always serializes")
}

fn load_catalog(common: &Common) -> Result<Catalog, Error> {
    Ok(match &common.catalog {
        Some(p) => Catalog::load(p)?,
        None => Catalog::builtin(),
    })
}

/// A group file path, a catalog base name, or a catalog cover name.
fn load_group(target: &str, common: &Common) -> Result<FiniteGroup, Error> {
    if Path::new(target).exists() {
        let def = GroupDefinition::load(target)?;
        let g = def.build(common.cap)?;
        return Ok(match def.name {
            Some(_) => g,
            None => g.with_name(Path::new(target).file_stem().map_or("G".into(), |s| s.to_string_lossy().into_owned())),
        });
    }
    let catalog = load_catalog(common)?;
    if catalog.base(target).is_ok() {
        return Ok(catalog.build_base(target, common.cap)?);
    }
    match catalog.cover(target) {
        Ok(entry) => Ok(entry.group.build(common.cap)?.with_name(entry.name.clone())),
        Err(_) => Err(Error::Io { path: target.to_owned(), message: "no such file or catalog group".into() }),
    }
}

fn load_algebra(arg: &str) -> Result<LieAlgebra, Error> {
    if Path::new(arg).exists() {
        let text = std::fs::read_to_string(arg).map_err(|e| Error::Io { path: arg.to_owned(), message: e.to_string() })?;
        return Ok(LieAlgebra::parse(&text)?);
    }
    Ok(LieAlgebra::builtin(arg)?)
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Group { command: GroupCommand::Info { target, common } } => group_info(&target, &common),
        Command::Chartable { target, common } => chartable(&target, &common),
        Command::Fsind { target, common } => fsind(&target, &common),
        Command::Bound { target, with_optional, degrees_from, common } => {
            bound_cmd(target.as_deref(), with_optional, degrees_from.as_deref(), &common)
        }
        Command::Degrees { target, with_optional, common } => degrees(&target, with_optional, &common),
        Command::Catalog { command: CatalogCommand::List { common } } => catalog_list(&common),
        Command::Catalog { command: CatalogCommand::Verify { entry, common } } => catalog_verify(entry.as_deref(), &common),
        Command::Lie { command } => lie_cmd(command),
        Command::Contain { target, faithful, target_index, common } => contain(&target, faithful, target_index, &common),
    }
}

fn group_info(target: &str, common: &Common) -> CmdResult {
    let g = load_group(target, common)?;
    let classes = g.conjugacy_classes();
    let simple = g.is_simple().ok();
    let center = g.center().order();
    let perfect = g.commutator_subgroup().order() == g.order();
    let info = json!({
        "schema": "edbound.group/1",
        "seed": null,
        "group": g.name(),
        "ambient": g.ambient().to_string(),
        "order": g.order(),
        "exponent": g.exponent(),
        "classes": classes.len(),
        "class_sizes": classes.iter().map(|c| c.size()).collect::<Vec<_>>(),
        "class_orders": classes.iter().map(|c| c.element_order()).collect::<Vec<_>>(),
        "center_order": center,
        "abelian": g.is_abelian(),
        "perfect": perfect,
        "simple": simple.unwrap_or(false),
        "simple_note": if simple.is_none() { Some("the trivial group is not simple by definition") } else { None },
    });
    if common.json {
        return Ok(to_json(&info));
    }
    let mut out = format!("group {} in {}\n", g.name().unwrap_or("G"), g.ambient());
    out += &format!("order {}, exponent {}\n", g.order(), g.exponent());
    out += &format!("{} conjugacy classes\n", classes.len());
    out += &format!("  sizes  {:?}\n  orders {:?}\n", info["class_sizes"], info["class_orders"]);
    out += &format!("center order {center}, abelian {}, perfect {perfect}\n", g.is_abelian());
    out += &match simple {
        Some(s) => format!("simple {s}\n"),
        None => "simple false (the trivial group is not simple by definition)\n".into(),
    };
    Ok(out)
}

fn chartable(target: &str, common: &Common) -> CmdResult {
    let g = load_group(target, common)?;
    let t = CharacterTable::compute(&g)?;
    Ok(if common.json { to_json(&t.dump()) } else { t.to_string() })
}

fn fsind(target: &str, common: &Common) -> CmdResult {
    let g = load_group(target, common)?;
    let t = CharacterTable::compute(&g)?;
    let mut rows = Vec::new();
    for i in 0..t.num_classes() {
        let r = t.fs_indicator(i)?;
        rows.push(json!({
            "index": i,
            "degree": t.degrees()[i],
            "indicator": r.indicator(),
            "reality": r,
            "faithful": t.is_faithful(i)?,
        }));
    }
    let involutions: i64 =
        (0..t.num_classes()).map(|i| t.fs_indicator(i).map(|r| r.indicator() as i64 * t.degrees()[i] as i64)).sum::<Result<_, _>>()?;
    if common.json {
        return Ok(to_json(&json!({
            "schema": "edbound.fsind/1",
            "seed": TABLE_SEED,
            "group": g.name(),
            "prime": t.prime(),
            "irreducibles": rows,
            "sum_indicator_times_degree": involutions,
        })));
    }
    let mut out = format!("group {} order {}\n", g.name().unwrap_or("G"), g.order());
    for r in &rows {
        out += &format!(
            "chi_{:<3} degree {:<5} indicator {:>2} {:<12} faithful {}\n",
            r["index"], r["degree"], r["indicator"], r["reality"].as_str().unwrap_or(""), r["faithful"]
        );
    }
    out += &format!("sum of indicator * degree = {involutions}\n");
    Ok(out)
}

fn bound_cmd(target: Option<&str>, with_optional: bool, degrees_from: Option<&Path>, common: &Common) -> CmdResult {
    let report = if let Some(path) = degrees_from {
        bound::bound_from_degrees(&DegreeData::load(path)?)?
    } else {
        let target = target.ok_or_else(|| Error::Precondition("a group name or file is required".into()))?;
        let catalog = load_catalog(common)?;
        let options = BoundOptions { order_cap: common.cap, with_optional };
        if Path::new(target).exists() {
            bound::essential_dimension_bound(load_group(target, common)?, &catalog, options)?
        } else {
            bound::bound_for_name(target, &catalog, options)?
        }
    };
    Ok(if common.json { report.to_json() } else { report.to_string() })
}

fn degrees(target: &str, with_optional: bool, common: &Common) -> CmdResult {
    let catalog = load_catalog(common)?;
    let g = load_group(target, common)?;
    let name = g.name().unwrap_or("G").to_owned();
    let order = g.order() as u64;
    let alternating_degree = bound::alternating_degree(&g);
    let search = match catalog.base(&name) {
        Ok(base) => {
            let base_name = base.name.clone();
            Some(catalog.covers_for_group(&base_name, g, edbound::catalog::CoverOptions { order_cap: common.cap, with_optional })?)
        }
        Err(_) => None,
    };
    let mut tables = Vec::new();
    let complete = match &search {
        Some(s) => {
            for c in &s.served {
                let t = CharacterTable::compute(&c.group)?;
                tables.push(DegreeData::table_from(&c.name, c.is_self, &t)?);
            }
            s.complete
        }
        None => {
            let g = load_group(target, common)?;
            let t = CharacterTable::compute(&g)?;
            tables.push(DegreeData::table_from(&name, true, &t)?);
            false
        }
    };
    let data = DegreeData { group: name, order, alternating_degree, complete, table: tables };
    Ok(if common.json { to_json(&data) } else { data.to_toml_string() })
}

fn catalog_list(common: &Common) -> CmdResult {
    let catalog = load_catalog(common)?;
    if common.json {
        return Ok(to_json(&json!({
            "schema": "edbound.catalog/1",
            "seed": null,
            "bases": catalog.base.iter().map(|b| json!({"name": b.name, "aliases": b.aliases, "multiplier": b.multiplier})).collect::<Vec<_>>(),
            "covers": catalog.cover.iter().map(|c| json!({
                "name": c.name, "base": c.base, "multiplier": c.multiplier, "maximal": c.maximal, "optional": c.optional,
            })).collect::<Vec<_>>(),
        })));
    }
    let mut out = String::from("bases:\n");
    for b in &catalog.base {
        let mult = b.multiplier.map_or("?".to_owned(), |m| m.to_string());
        out += &format!("  {:<8} multiplier {mult:<3} {}\n", b.name, b.aliases.join(", "));
    }
    out += "covers:\n";
    for c in &catalog.cover {
        let mut flags = Vec::new();
        if c.maximal {
            flags.push("maximal (asserted)");
        }
        if c.optional {
            flags.push("optional");
        }
        out += &format!("  {:<10} of {:<8} |M| = {:<3} {}\n", c.name, c.base, c.multiplier, flags.join(", "));
    }
    Ok(out)
}

fn render_verification(r: &VerificationReport) -> String {
    let mut out = format!(
        "{} over {}: {} (|K| = {}, |G| = {}, |M| = {}; maximality {})\n",
        r.entry,
        r.base,
        if r.passed { "PASS" } else { "FAIL" },
        r.cover_order,
        r.base_order,
        r.multiplier,
        r.maximality
    );
    for c in &r.checks {
        out += &format!("  [{}] {:<26} {}\n", if c.passed { "ok" } else { "FAIL" }, c.name, c.detail);
    }
    out
}

fn catalog_verify(entry: Option<&str>, common: &Common) -> CmdResult {
    let catalog = load_catalog(common)?;
    let entries: Vec<_> = match entry {
        Some(name) => vec![catalog.cover(name)?],
        None => catalog.cover.iter().collect(),
    };
    let mut reports = Vec::new();
    for e in entries {
        reports.push(catalog.verify_entry(e, common.cap)?.0);
    }
    let output = if common.json {
        to_json(&json!({ "schema": "edbound.verify/1", "seed": null, "reports": reports }))
    } else {
        reports.iter().map(render_verification).collect()
    };
    if reports.iter().all(|r| r.passed) {
        Ok(output)
    } else {
        Err(Failure::Report { category: "cover-verification-failed", output })
    }
}

fn parse_basis(text: &str, dim: usize) -> Result<Vec<Vec<BigRational>>, Error> {
    text.split(';')
        .map(|v| {
            let coords: Vec<BigRational> =
                v.split(',').map(|x| lie::parse_rational(x.trim())).collect::<Result<_, _>>()?;
            if coords.len() != dim {
                return Err(lie::LieError::WrongLength { dim, got: coords.len() }.into());
            }
            Ok(coords)
        })
        .collect()
}

fn matrix_strings(m: &lie::linalg::QMatrix) -> Vec<Vec<String>> {
    m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

fn lie_cmd(command: LieCommand) -> CmdResult {
    match command {
        LieCommand::Validate { algebra, common } => {
            let a = load_algebra(&algebra)?;
            let v = json!({ "schema": "edbound.lie/1", "seed": null, "algebra": algebra, "dim": a.dim(), "valid": true,
                            "abelian": a.is_abelian() });
            Ok(if common.json { to_json(&v) } else { format!("{algebra}: valid Lie algebra of dimension {}\n", a.dim()) })
        }
        LieCommand::Killing { algebra, common } => {
            let a = load_algebra(&algebra)?;
            let b = a.killing_form();
            let det = b.determinant();
            let semisimple = !num_traits_is_zero(&det);
            if common.json {
                return Ok(to_json(&json!({ "schema": "edbound.lie/1", "seed": null, "algebra": algebra,
                    "killing_form": matrix_strings(&b), "determinant": det.to_string(), "semisimple": semisimple })));
            }
            let mut out = format!("{algebra}: Killing form\n");
            for row in matrix_strings(&b) {
                out += &format!("  [{}]\n", row.join(", "));
            }
            out += &format!("determinant {det}, semisimple {semisimple}\n");
            Ok(out)
        }
        LieCommand::Rank { algebra, common } => {
            let a = load_algebra(&algebra)?;
            let r = a.rank()?;
            if common.json {
                return Ok(to_json(&json!({ "schema": "edbound.lie/1", "seed": RANK_SEED, "algebra": algebra, "rank": r })));
            }
            Ok(format!(
                "{algebra}: rank {} (nullities {:?}, zero multiplicity {} at the best sample, certified {}, seed {:#x})\n",
                r.rank, r.nullities, r.zero_multiplicity, r.certified, r.seed
            ))
        }
        LieCommand::Classify { algebra, common } => {
            let a = load_algebra(&algebra)?;
            let c = a.classify_simple()?;
            if common.json {
                return Ok(to_json(&json!({ "schema": "edbound.lie/1", "seed": RANK_SEED, "algebra": algebra, "classification": c })));
            }
            Ok(match c {
                lie::Classification::Unique(r) => format!("{algebra}: {r}\n"),
                lie::Classification::Ambiguous(v) => {
                    let mut out = format!("{algebra}: ambiguous, dimension and rank match {} types\n", v.len());
                    for r in v {
                        out += &format!("  {r}\n");
                    }
                    out
                }
            })
        }
        LieCommand::Table { family, n, common } => {
            let rec = match family.to_ascii_lowercase().as_str() {
                "orthogonal" | "so" => lie::table::orthogonal(n.ok_or_else(|| {
                    lie::LieError::InvalidParameter("orthogonal needs the number of variables n".into())
                })?)?,
                _ => lie::simple_type_table(family.parse::<Family>()?, n)?,
            };
            Ok(if common.json {
                to_json(&json!({ "schema": "edbound.lie/1", "seed": null, "type": rec.label(), "record": rec }))
            } else {
                format!("{rec}\n")
            })
        }
        LieCommand::Subalgebra { algebra, basis, common } => {
            let a = load_algebra(&algebra)?;
            let vectors = parse_basis(&basis, a.dim())?;
            let sub = a.verify_subalgebra(&vectors)?;
            let gamma: Vec<String> = sub.induced.constants().iter().map(ToString::to_string).collect();
            if common.json {
                return Ok(to_json(&json!({ "schema": "edbound.lie/1", "seed": null, "algebra": algebra,
                    "dimension": sub.induced.dim(), "index": sub.index, "gamma": gamma })));
            }
            Ok(format!(
                "{algebra}: closed subalgebra of dimension {}, index s = {}\ninduced constants:\n{}",
                sub.induced.dim(),
                sub.index,
                sub.induced.to_text()
            ))
        }
    }
}

fn num_traits_is_zero(q: &BigRational) -> bool {
    *q.numer() == 0.into()
}

fn contain(target: &str, faithful: usize, target_index: Option<usize>, common: &Common) -> CmdResult {
    let g = load_group(target, common)?;
    let t = CharacterTable::compute(&g)?;
    let targets: Vec<usize> = match target_index {
        Some(j) => vec![j],
        None => (0..t.num_classes()).collect(),
    };
    let mut results = Vec::new();
    for j in targets {
        results.push((j, t.tensor_power_containment(faithful, j)?));
    }
    if common.json {
        return Ok(to_json(&json!({
            "schema": "edbound.contain/1",
            "seed": TABLE_SEED,
            "group": g.name(),
            "faithful": faithful,
            "results": results.iter().map(|(j, m)| json!({"target": j, "m": m})).collect::<Vec<_>>(),
        })));
    }
    Ok(results
        .iter()
        .map(|(j, m)| format!("chi_{j} first appears in chi_{faithful}^{m}\n"))
        .collect())
}
