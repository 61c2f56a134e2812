//! The `hk` command line: catalog, verification, constructions, bridge,
//! matroid and pipeline commands.
//!
//! Exit codes: 0 match, 1 mismatch, 2 usage, 3 resource.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::bridge::{
    check_assumption_hyper1, elimination_profile, hypersystem_of, null_or_large, recover_hyperring, retraction_suite,
    table_difference,
};
use crate::catalog::{self, mismatches, run_suite, Suite};
use crate::constructions::{
    direct_sum, layered_hyper, layered_second_kind, semidirect_naturals, symmetrize, symmetrize_bipotent,
    truncate_naturals, Layered, MatrixSystem, PolySystem, SumOption,
};
use crate::error::{Error, Result};
use crate::families::{grades, q, St, Supertropical};
use crate::hsf::{parse_structure, to_hsf, Structure};
use crate::hyper::{prime_field, quotient_hyperring};
use crate::matroid::{bases, check_exchange, check_gp, minors_gp_map, neg_valuation, sign_of, tuples, GpMap};
use crate::report::{AxiomOutcome, Report};
use crate::systems::BalanceContext;
use crate::table::{HyperTable, SystemTable};

pub const EXIT_MATCH: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hk", about = "Finite hyperrings, semiring systems and their constructions")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// List catalog entries, optionally filtered by a substring.
    Catalog { filter: Option<String> },
    /// Run a suite on a catalog entry or an HSF file.
    Verify {
        target: String,
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a structure and emit it as HSF.
    Construct {
        #[command(subcommand)]
        sub: ConstructCmd,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Pass between hyperrings and systems.
    Bridge {
        #[command(subcommand)]
        sub: BridgeCmd,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Grassmann–Plücker maps of matrices.
    Matroid {
        #[command(subcommand)]
        sub: MatroidCmd,
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Run a JSON pipeline of steps.
    Pipeline {
        file: PathBuf,
        /// Directory for intermediate HSF files; defaults to `<file stem>.work`.
        #[arg(long)]
        workdir: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ConstructCmd {
    /// Quotient hyperring F_p / G with G given by its residues.
    Quotient {
        #[arg(long)]
        p: usize,
        #[arg(long, value_delimiter = ',')]
        g: Vec<usize>,
    },
    Symmetrize {
        target: String,
    },
    SymmetrizeBipotent {
        target: String,
    },
    /// Layered system over a layering system on integer grades `lo..=hi`.
    Layered {
        target: String,
        #[command(flatten)]
        grades: GradeArgs,
        #[arg(long)]
        keep_zero: bool,
    },
    /// Layered hyperring over a hyper table.
    LayeredHyper {
        target: String,
        #[command(flatten)]
        grades: GradeArgs,
        #[arg(long)]
        keep_zero: bool,
    },
    /// Layering of the second kind of `target` by `layers`.
    SecondKind {
        layers: String,
        target: String,
    },
    DirectSum {
        #[arg(required = true)]
        targets: Vec<String>,
        #[arg(long, default_value_t = 1)]
        option: u8,
    },
    Poly {
        target: String,
        #[arg(long, default_value_t = 1)]
        vars: usize,
        #[arg(long, default_value_t = 1)]
        deg: usize,
    },
    Matrix {
        target: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
    },
    /// Naturals truncated at `m`.
    Truncate {
        #[arg(long)]
        m: usize,
    },
    Semidirect {
        #[arg(long, default_value_t = 5)]
        bound: usize,
        #[command(flatten)]
        grades: GradeArgs,
        #[arg(long, default_value_t = 1)]
        variant: u8,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct GradeArgs {
    #[arg(long, default_value_t = -1, allow_negative_numbers = true)]
    lo: i64,
    #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
    hi: i64,
}

#[derive(Subcommand, Debug)]
enum BridgeCmd {
    /// Hypersystem of a hyperring.
    ToSystem {
        target: String,
        #[arg(long)]
        distributed: bool,
    },
    /// Hyperring recovered from a system.
    Recover {
        target: String,
        #[command(flatten)]
        ideal: IdealArgs,
    },
    /// Hyperring to system and back.
    Retraction { target: String },
    /// Elimination profile of a system, or of the hypersystem of a hyperring.
    Profile {
        target: String,
        #[command(flatten)]
        ideal: IdealArgs,
    },
    /// Order-hypergroup assumption with `I = A_Null`.
    Hyper1 { target: String },
}

#[derive(Args, Debug, Clone, Copy)]
struct IdealArgs {
    /// Use `I = A_Null ∪ {|S| ≥ k}` on a hypersystem.
    #[arg(long)]
    large: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum MatroidCmd {
    /// GP map of the maximal minors of a rational matrix.
    FromMatrix {
        matrix: PathBuf,
        /// `signs`, `supertropical` or a catalog name or HSF path of a system.
        #[arg(long, default_value = "signs")]
        over: String,
        /// Prime for the supertropical valuation.
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
    Check {
        map: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    Exchange {
        map: PathBuf,
    },
    Bases {
        map: PathBuf,
    },
}

/// Parses `args` (program name first), runs the command and returns the exit
/// code. Results go to `out`, diagnostics to standard error.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_MATCH };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli.cmd, out) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("hk: {e}");
            exit_code(&e)
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::CapExceeded { .. } | Error::Resource(_) => EXIT_RESOURCE,
        _ => EXIT_USAGE,
    }
}

fn dispatch(cmd: Cmd, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Cmd::Catalog { filter } => {
            emit(out, None, &catalog_json(filter.as_deref())?)?;
            Ok(EXIT_MATCH)
        }
        Cmd::Verify {
            target,
            suite,
            out: file,
        } => {
            let (report, code) = verify(&target, Suite::parse(&suite)?)?;
            emit(out, file.as_deref(), &report.to_json())?;
            Ok(code)
        }
        Cmd::Construct { sub, out: file } => {
            let s = construct(sub)?;
            emit(out, file.as_deref(), &to_hsf(&s))?;
            Ok(EXIT_MATCH)
        }
        Cmd::Bridge { sub, out: file } => {
            let (text, code) = bridge(sub)?;
            emit(out, file.as_deref(), &text)?;
            Ok(code)
        }
        Cmd::Matroid { sub, out: file } => {
            let (text, code) = matroid(sub)?;
            emit(out, file.as_deref(), &text)?;
            Ok(code)
        }
        Cmd::Pipeline { file, workdir } => {
            let workdir = workdir.unwrap_or_else(|| default_workdir(&file));
            let (v, code) = run_pipeline(&file, &workdir)?;
            emit(out, None, &pretty(&v))?;
            Ok(code)
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}

fn emit(out: &mut dyn Write, file: Option<&Path>, text: &str) -> Result<()> {
    match file {
        Some(p) => std::fs::write(p, text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn catalog_json(filter: Option<&str>) -> Result<String> {
    let mut v = Vec::new();
    for e in catalog::catalog_list()? {
        if filter.is_some_and(|f| !e.name.contains(f)) {
            continue;
        }
        let (kind, size) = match &e.structure {
            Structure::Hyper(h) => ("hyper", h.n()),
            Structure::System(s) => ("system", s.n()),
        };
        let expected: BTreeMap<&str, bool> = e.expected.iter().map(|(a, b)| (a.as_str(), *b)).collect();
        v.push(json!({
            "name": e.name,
            "kind": kind,
            "size": size,
            "negative_fixture": e.negative_fixture(),
            "note": e.note,
            "expected": expected,
        }));
    }
    Ok(pretty(&Value::Array(v)))
}

/// A catalog name (with optional `:args`) or a path to an HSF file.
pub fn resolve(target: &str) -> Result<Structure> {
    let path = Path::new(target);
    if path.is_file() {
        return parse_structure(path);
    }
    let base = target.split(':').next().unwrap_or(target);
    if !catalog::names().contains(&base) {
        return Err(Error::Domain(format!(
            "unknown target {target}: not a catalog name or a file"
        )));
    }
    Ok(catalog::lookup(target)?.structure)
}

fn resolve_hyper(target: &str) -> Result<HyperTable> {
    match resolve(target)? {
        Structure::Hyper(h) => Ok(h),
        Structure::System(s) => Err(Error::Domain(format!("{} is a system, expected a hyper table", s.name))),
    }
}

fn resolve_system(target: &str) -> Result<SystemTable> {
    match resolve(target)? {
        Structure::System(s) => Ok(s),
        Structure::Hyper(h) => Err(Error::Domain(format!("{} is a hyper table, expected a system", h.name))),
    }
}

/// Catalog targets are compared with their expected verdicts; files pass when
/// every checked axiom passes.
pub fn verify(target: &str, suite: Suite) -> Result<(Report, i32)> {
    let is_file = Path::new(target).is_file();
    let st = resolve(target)?;
    let report = run_suite(&st, suite)?;
    let ok = if is_file {
        report.all_pass()
    } else {
        mismatches(&catalog::lookup(target)?, &report).is_empty()
    };
    Ok((report, if ok { EXIT_MATCH } else { EXIT_MISMATCH }))
}

fn construct(sub: ConstructCmd) -> Result<Structure> {
    let gr = |g: GradeArgs| grades(g.lo, g.hi);
    Ok(match sub {
        ConstructCmd::Quotient { p, g } => Structure::Hyper(quotient(p, &g)?),
        ConstructCmd::Symmetrize { target } => Structure::System(symmetrize(&resolve_system(&target)?)),
        ConstructCmd::SymmetrizeBipotent { target } => {
            Structure::System(symmetrize_bipotent(&resolve_system(&target)?)?)
        }
        ConstructCmd::Layered {
            target,
            grades,
            keep_zero,
        } => Structure::System(Layered::new(resolve_system(&target)?, !keep_zero).table(&gr(grades))),
        ConstructCmd::LayeredHyper {
            target,
            grades,
            keep_zero,
        } => Structure::Hyper(layered_hyper(&resolve_hyper(&target)?, &gr(grades), !keep_zero)?),
        ConstructCmd::SecondKind { layers, target } => Structure::System(layered_second_kind(
            &resolve_system(&layers)?,
            &resolve_system(&target)?,
        )?),
        ConstructCmd::DirectSum { targets, option } => {
            let parts = targets.iter().map(|t| resolve_system(t)).collect::<Result<Vec<_>>>()?;
            Structure::System(direct_sum(&parts, SumOption::from_number(option)?)?)
        }
        ConstructCmd::Poly { target, vars, deg } => {
            Structure::System(PolySystem::new(resolve_system(&target)?, vars, deg).table()?)
        }
        ConstructCmd::Matrix { target, n } => {
            Structure::System(MatrixSystem::new(resolve_system(&target)?, n).table()?)
        }
        ConstructCmd::Truncate { m } => Structure::System(truncate_naturals(m)?),
        ConstructCmd::Semidirect { bound, grades, variant } => {
            Structure::System(semidirect_naturals(bound, &gr(grades), variant)?)
        }
    })
}

fn quotient(p: usize, g: &[usize]) -> Result<HyperTable> {
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
        return Err(Error::Domain(format!("{p} is not prime")));
    }
    quotient_hyperring(&prime_field(p), g)
}

fn context(s: &SystemTable, ideal: IdealArgs) -> Result<BalanceContext> {
    match ideal.large {
        Some(k) => null_or_large(s, k),
        None => Ok(BalanceContext::new(s)),
    }
}

fn as_system(st: Structure) -> Result<SystemTable> {
    match st {
        Structure::System(s) => Ok(s),
        Structure::Hyper(h) => hypersystem_of(&h, true),
    }
}

fn verdict(r: &Report) -> i32 {
    if r.all_pass() {
        EXIT_MATCH
    } else {
        EXIT_MISMATCH
    }
}

fn bridge(sub: BridgeCmd) -> Result<(String, i32)> {
    Ok(match sub {
        BridgeCmd::ToSystem { target, distributed } => {
            let s = hypersystem_of(&resolve_hyper(&target)?, distributed)?;
            (to_hsf(&Structure::System(s)), EXIT_MATCH)
        }
        BridgeCmd::Recover { target, ideal } => {
            let s = as_system(resolve(&target)?)?;
            let h = recover_hyperring(&s, &context(&s, ideal)?)?;
            (to_hsf(&Structure::Hyper(h)), EXIT_MATCH)
        }
        BridgeCmd::Retraction { target } => {
            let r = retraction_suite(&resolve_hyper(&target)?)?;
            let code = verdict(&r);
            (r.to_json(), code)
        }
        BridgeCmd::Profile { target, ideal } => {
            let s = as_system(resolve(&target)?)?;
            let r = elimination_profile(&s, &context(&s, ideal)?).to_report(&s);
            (r.to_json(), EXIT_MATCH)
        }
        BridgeCmd::Hyper1 { target } => {
            let s = as_system(resolve(&target)?)?;
            let r = check_assumption_hyper1(&s, &BalanceContext::new(&s).ideal)?;
            let code = verdict(&r);
            (r.to_json(), code)
        }
    })
}

/// On-disk GP map: values on every tuple of `{1..n}^m`, keyed `"i,j,k"`.
#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GpDoc {
    pub over: String,
    pub n: usize,
    pub m: usize,
    pub values: BTreeMap<String, String>,
}

fn tuple_key(t: &[usize]) -> String {
    t.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(",")
}

fn gp_doc<A: Algebra>(alg: &A, over: &str, b: &GpMap<A::Elem>) -> GpDoc {
    let values = tuples(b.n, b.m)
        .iter()
        .map(|t| (tuple_key(t), alg.label(b.get(t))))
        .collect();
    GpDoc {
        over: over.into(),
        n: b.n,
        m: b.m,
        values,
    }
}

fn gp_map<A: Algebra>(doc: &GpDoc, parse: impl Fn(&str) -> Option<A::Elem>) -> Result<GpMap<A::Elem>> {
    GpMap::from_fn(doc.n, doc.m, |t| {
        let key = tuple_key(t);
        let label = doc
            .values
            .get(&key)
            .ok_or_else(|| Error::Domain(format!("GP map lacks tuple ({key})")))?;
        parse(label).ok_or_else(|| Error::Domain(format!("unknown element {label} at ({key})")))
    })
}

/// Supertropical labels: `-inf`, `x` tangible, `xv` ghost.
pub fn parse_supertropical(label: &str) -> Option<St> {
    if label == "-inf" {
        return Some(St::Zero);
    }
    let (body, ghost) = match label.strip_suffix('v') {
        Some(b) => (b, true),
        None => (label, false),
    };
    let x: crate::families::Q = body.parse().ok()?;
    Some(if ghost { St::Ghost(x) } else { St::Tan(x) })
}

fn parse_matrix(path: &Path) -> Result<Vec<Vec<BigRational>>> {
    let text = std::fs::read_to_string(path)?;
    let rows: Vec<Vec<Value>> = serde_json::from_str(&text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    let cell = |v: &Value| -> Result<BigRational> {
        let s = match v {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            _ => return Err(Error::Domain(format!("matrix entry {v} is not a rational"))),
        };
        s.trim()
            .parse()
            .map_err(|_| Error::Domain(format!("matrix entry {s} is not a rational")))
    };
    rows.iter().map(|r| r.iter().map(cell).collect()).collect()
}

fn over_system(over: &str) -> Result<SystemTable> {
    resolve_system(if over == "signs" { "sign-semiring" } else { over })
}

fn matroid(sub: MatroidCmd) -> Result<(String, i32)> {
    match sub {
        MatroidCmd::FromMatrix { matrix, over, p } => {
            let a = parse_matrix(&matrix)?;
            let doc = if over == "supertropical" {
                let img: Vec<Vec<St>> = a
                    .iter()
                    .map(|r| {
                        r.iter()
                            .map(|x| neg_valuation(x, p).map_or(St::Zero, |v| St::Tan(q(v))))
                            .collect()
                    })
                    .collect();
                gp_doc(&Supertropical, &over, &minors_gp_map(&Supertropical, &img)?)
            } else {
                let s = over_system(&over)?;
                let id = |x: &BigRational| -> Result<usize> {
                    let l = match sign_of(x) {
                        1 => "1",
                        -1 => "-1",
                        _ => "0",
                    };
                    s.index_of(l)
                        .ok_or_else(|| Error::Domain(format!("{} has no element {l}", s.name)))
                };
                let grid = a
                    .iter()
                    .map(|r| r.iter().map(id).collect())
                    .collect::<Result<Vec<Vec<usize>>>>()?;
                gp_doc(&s, &over, &minors_gp_map(&s, &grid)?)
            };
            Ok((
                format!("{}\n", serde_json::to_string_pretty(&doc).expect("gp maps serialize")),
                EXIT_MATCH,
            ))
        }
        MatroidCmd::Check { map, strict } => with_map(&map, |alg, b| {
            let r = alg.check(b, strict)?;
            let code = verdict(&r.report);
            let v = json!({
                "structure": alg.name(),
                "mode": r.report.mode,
                "axioms": r.report.axioms,
                "bases": r.bases,
            });
            Ok((pretty(&v), code))
        }),
        MatroidCmd::Exchange { map } => with_map(&map, |alg, b| {
            let e = alg.exchange(b)?;
            let code = if e.outcome.pass { EXIT_MATCH } else { EXIT_MISMATCH };
            let v = json!({
                "structure": alg.name(),
                "axioms": [e.outcome],
                "premises": e.premises,
                "found": e.found,
            });
            Ok((pretty(&v), code))
        }),
        MatroidCmd::Bases { map } => with_map(&map, |alg, b| {
            Ok((
                pretty(&json!({ "structure": alg.name(), "bases": alg.bases(b) })),
                EXIT_MATCH,
            ))
        }),
    }
}

/// Loads a GP map file and runs `f` over its algebra.
fn with_map(path: &Path, f: impl Fn(&dyn DynMatroid, &DynMap) -> Result<(String, i32)>) -> Result<(String, i32)> {
    let text = std::fs::read_to_string(path)?;
    let doc: GpDoc = serde_json::from_str(&text).map_err(|e| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    })?;
    if doc.n > crate::matroid::GP_MAX_N || doc.m > crate::matroid::GP_MAX_M || doc.m == 0 {
        return Err(Error::Resource(format!(
            "GP map on n = {}, m = {} exceeds the sweep bounds",
            doc.n, doc.m
        )));
    }
    if doc.over == "supertropical" {
        let b = gp_map::<Supertropical>(&doc, parse_supertropical)?;
        f(&Supertropical, &DynMap::St(b))
    } else {
        let s = over_system(&doc.over)?;
        let b = gp_map::<SystemTable>(&doc, |l| s.index_of(l))?;
        f(&s, &DynMap::Table(b))
    }
}

/// A GP map over one of the algebras the CLI can load.
enum DynMap {
    St(GpMap<St>),
    Table(GpMap<usize>),
}

/// Object-safe view of the matroid operations for the two loadable algebras.
trait DynMatroid {
    fn name(&self) -> String;
    fn check(&self, b: &DynMap, strict: bool) -> Result<crate::matroid::MatroidReport>;
    fn exchange(&self, b: &DynMap) -> Result<crate::matroid::ExchangeOutcome>;
    fn bases(&self, b: &DynMap) -> Vec<Vec<usize>>;
}

fn mismatch() -> Error {
    Error::Domain("GP map does not match its algebra".into())
}

impl DynMatroid for Supertropical {
    fn name(&self) -> String {
        Algebra::name(self)
    }
    fn check(&self, b: &DynMap, strict: bool) -> Result<crate::matroid::MatroidReport> {
        let DynMap::St(b) = b else { return Err(mismatch()) };
        check_gp(self, b, strict)
    }
    fn exchange(&self, b: &DynMap) -> Result<crate::matroid::ExchangeOutcome> {
        let DynMap::St(b) = b else { return Err(mismatch()) };
        check_exchange(self, b)
    }
    fn bases(&self, b: &DynMap) -> Vec<Vec<usize>> {
        match b {
            DynMap::St(b) => bases(self, b),
            DynMap::Table(_) => Vec::new(),
        }
    }
}

impl DynMatroid for SystemTable {
    fn name(&self) -> String {
        Algebra::name(self)
    }
    fn check(&self, b: &DynMap, strict: bool) -> Result<crate::matroid::MatroidReport> {
        let DynMap::Table(b) = b else { return Err(mismatch()) };
        check_gp(self, b, strict)
    }
    fn exchange(&self, b: &DynMap) -> Result<crate::matroid::ExchangeOutcome> {
        let DynMap::Table(b) = b else { return Err(mismatch()) };
        check_exchange(self, b)
    }
    fn bases(&self, b: &DynMap) -> Vec<Vec<usize>> {
        match b {
            DynMap::Table(b) => bases(self, b),
            DynMap::St(_) => Vec::new(),
        }
    }
}

/// One pipeline step. Steps act on the current structure; `load` and
/// `quotient` replace it.
#[derive(Deserialize, Debug, Clone)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum Step {
    Load {
        target: String,
    },
    Quotient {
        p: usize,
        g: Vec<usize>,
    },
    Symmetrize,
    SymmetrizeBipotent,
    Layered {
        #[serde(default = "default_lo")]
        lo: i64,
        #[serde(default = "default_hi")]
        hi: i64,
        #[serde(default)]
        keep_zero: bool,
    },
    ToSystem {
        #[serde(default)]
        distributed: bool,
    },
    Recover {
        #[serde(default)]
        large: Option<usize>,
    },
    Retraction,
    Profile {
        #[serde(default)]
        large: Option<usize>,
    },
    Hyper1,
    Verify {
        #[serde(default = "default_suite")]
        suite: String,
    },
    /// Compares the current hyper table with `target`.
    Diff {
        target: String,
    },
}

fn default_lo() -> i64 {
    -1
}

fn default_hi() -> i64 {
    1
}

fn default_suite() -> String {
    "all".into()
}

impl Step {
    fn op(&self) -> &'static str {
        match self {
            Step::Load { .. } => "load",
            Step::Quotient { .. } => "quotient",
            Step::Symmetrize => "symmetrize",
            Step::SymmetrizeBipotent => "symmetrize-bipotent",
            Step::Layered { .. } => "layered",
            Step::ToSystem { .. } => "to-system",
            Step::Recover { .. } => "recover",
            Step::Retraction => "retraction",
            Step::Profile { .. } => "profile",
            Step::Hyper1 => "hyper1",
            Step::Verify { .. } => "verify",
            Step::Diff { .. } => "diff",
        }
    }
}

/// A step with optional expected verdicts; any disagreement makes the
/// pipeline exit with a mismatch.
#[derive(Deserialize, Debug, Clone)]
pub struct StepDoc {
    #[serde(flatten)]
    pub step: Step,
    #[serde(default)]
    pub expect: BTreeMap<String, bool>,
}

fn default_workdir(file: &Path) -> PathBuf {
    let stem = file
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_else(|| "pipeline".into());
    file.with_file_name(format!("{stem}.work"))
}

/// Reads a pipeline file: an array of steps or an object with a `steps` array.
pub fn parse_pipeline(text: &str) -> Result<Vec<StepDoc>> {
    let perr = |e: serde_json::Error| Error::Parse {
        line: e.line(),
        msg: e.to_string(),
    };
    let v: Value = serde_json::from_str(text).map_err(perr)?;
    let steps = match v {
        Value::Array(_) => v,
        Value::Object(mut o) => o.remove("steps").unwrap_or(Value::Array(Vec::new())),
        _ => {
            return Err(Error::Parse {
                line: 1,
                msg: "pipeline must be an array or an object with steps".into(),
            })
        }
    };
    serde_json::from_value(steps).map_err(perr)
}

/// Runs a pipeline file, writing structure artifacts to `workdir`.
pub fn run_pipeline(file: &Path, workdir: &Path) -> Result<(Value, i32)> {
    let steps = parse_pipeline(&std::fs::read_to_string(file)?)?;
    let mut cur: Option<Structure> = None;
    let mut results = Vec::new();
    let mut code = EXIT_MATCH;
    for (i, sd) in steps.iter().enumerate() {
        let out = run_step(&sd.step, &mut cur).inspect_err(|_| {
            eprintln!("hk: pipeline step {i} ({}) failed", sd.step.op());
        })?;
        let mut entry = json!({ "step": i, "op": sd.step.op() });
        if let Some(st) = &cur {
            entry["structure"] = json!(st.name());
        }
        match out {
            StepOutput::Structure => {
                let st = cur.as_ref().expect("structure steps set the current structure");
                std::fs::create_dir_all(workdir)?;
                let path = workdir.join(format!("step-{i:02}-{}.json", sd.step.op()));
                std::fs::write(&path, to_hsf(st))?;
                entry["artifact"] = json!(path.to_string_lossy());
            }
            StepOutput::Report(r, pass) => {
                if !pass {
                    code = EXIT_MISMATCH;
                }
                for (axiom, want) in &sd.expect {
                    match r.get(axiom) {
                        Some(a) if a.pass == *want => {}
                        _ => code = EXIT_MISMATCH,
                    }
                }
                entry["report"] = serde_json::to_value(&r).expect("reports serialize");
            }
        }
        results.push(entry);
    }
    Ok((json!({ "steps": results }), code))
}

enum StepOutput {
    Structure,
    /// A report and whether the step itself counts as passed.
    Report(Report, bool),
}

fn current<'a>(cur: &'a Option<Structure>, op: &str) -> Result<&'a Structure> {
    cur.as_ref()
        .ok_or_else(|| Error::Domain(format!("{op} needs a current structure")))
}

fn current_hyper<'a>(cur: &'a Option<Structure>, op: &str) -> Result<&'a HyperTable> {
    match current(cur, op)? {
        Structure::Hyper(h) => Ok(h),
        Structure::System(s) => Err(Error::Domain(format!(
            "{op} needs a hyper table, found system {}",
            s.name
        ))),
    }
}

fn current_system<'a>(cur: &'a Option<Structure>, op: &str) -> Result<&'a SystemTable> {
    match current(cur, op)? {
        Structure::System(s) => Ok(s),
        Structure::Hyper(h) => Err(Error::Domain(format!(
            "{op} needs a system, found hyper table {}",
            h.name
        ))),
    }
}

fn run_step(step: &Step, cur: &mut Option<Structure>) -> Result<StepOutput> {
    let op = step.op();
    let next = match step {
        Step::Load { target } => resolve(target)?,
        Step::Quotient { p, g } => Structure::Hyper(quotient(*p, g)?),
        Step::Symmetrize => Structure::System(symmetrize(current_system(cur, op)?)),
        Step::SymmetrizeBipotent => Structure::System(symmetrize_bipotent(current_system(cur, op)?)?),
        Step::Layered { lo, hi, keep_zero } => {
            Structure::System(Layered::new(current_system(cur, op)?.clone(), !keep_zero).table(&grades(*lo, *hi)))
        }
        Step::ToSystem { distributed } => Structure::System(hypersystem_of(current_hyper(cur, op)?, *distributed)?),
        Step::Recover { large } => {
            let s = current_system(cur, op)?;
            Structure::Hyper(recover_hyperring(s, &context(s, IdealArgs { large: *large })?)?)
        }
        Step::Retraction => {
            let r = retraction_suite(current_hyper(cur, op)?)?;
            let pass = r.all_pass();
            return Ok(StepOutput::Report(r, pass));
        }
        Step::Profile { large } => {
            let s = as_system(current(cur, op)?.clone())?;
            let r = elimination_profile(&s, &context(&s, IdealArgs { large: *large })?).to_report(&s);
            return Ok(StepOutput::Report(r, true));
        }
        Step::Hyper1 => {
            let s = as_system(current(cur, op)?.clone())?;
            let r = check_assumption_hyper1(&s, &BalanceContext::new(&s).ideal)?;
            let pass = r.all_pass();
            return Ok(StepOutput::Report(r, pass));
        }
        Step::Verify { suite } => {
            let r = run_suite(current(cur, op)?, Suite::parse(suite)?)?;
            return Ok(StepOutput::Report(r, true));
        }
        Step::Diff { target } => {
            let h = current_hyper(cur, op)?;
            let other = match resolve(target)? {
                Structure::Hyper(g) => g,
                Structure::System(s) => return Err(Error::Domain(format!("diff target {} is a system", s.name))),
            };
            let d = table_difference(&other, h);
            let mut r = Report::new(&h.name, false);
            r.push(AxiomOutcome::from_witness("identical-tables", d));
            let pass = r.all_pass();
            return Ok(StepOutput::Report(r, pass));
        }
    };
    *cur = Some(next);
    Ok(StepOutput::Structure)
}
