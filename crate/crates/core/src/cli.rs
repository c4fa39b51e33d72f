//! The `nichols` command line: tables, verification suites and a JSON cache.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classify::{classify_coinvariant, classify_one_vertex, decompose_space, Kind, ModuleDescriptor};
use crate::cyclo::{CycNum, Field};
use crate::fusion::{fuse_brute, fuse_closed};
use crate::loop_op::{chi_on_simple, lambda_closed, mu_closed, mu_uv_basis, LoopForm};
use crate::report::CheckReport;
use crate::suites::{run_suite, Suite};

/// Version of the JSON layout; bump on any change to the output schema.
pub const SCHEMA_VERSION: &str = "nichols-cli/1";
pub const CACHE_ENV: &str = "NICHOLS_CACHE_DIR";
pub const DEFAULT_MAX_P: u32 = 12;

#[derive(Parser, Debug)]
#[command(name = "nichols", version, about = "Exact tables and checks for Yetter-Drinfeld modules over the rank-one Nichols algebra")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// p >= 2; the root of unity has order 2p
    #[arg(long, global = true)]
    pub p: Option<u32>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Sector labels reported modulo 2 (entwined) or 4 (braided)
    #[arg(long = "nu-mod", global = true, default_value_t = 4, value_parser = parse_nu_mod)]
    pub nu_mod: u8,
    /// Write output here instead of stdout
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,
    /// Cache directory
    #[arg(long, global = true, env = CACHE_ENV)]
    pub cache_dir: Option<PathBuf>,
    #[arg(long, global = true)]
    pub no_cache: bool,
    /// Largest accepted p
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_P)]
    pub max_p: u32,
}

fn parse_nu_mod(s: &str) -> Result<u8, String> {
    match s {
        "2" => Ok(2),
        "4" => Ok(4),
        _ => Err("must be 2 or 4".into()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Fusion table of all pairs of simples, closed form checked against brute force
    Fusion,
    /// Indecomposable multiplicities of the one- or two-vertex space
    Decompose {
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(1..=2))]
        vertices: u32,
    },
    /// Classify the module generated by a coinvariant, or the whole table
    Classify {
        #[arg(long, allow_hyphen_values = true)]
        a: Option<i64>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<i64>,
        #[arg(long)]
        t: Option<i64>,
    },
    /// Eigenvalues of the loop operators on simples and their nilpotent parts on projectives
    Loop,
    /// Run verification suites
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
    },
}

/// Exact value plus a labeled floating-point approximation.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Scalar {
    /// Rational coefficients of `1, ζ, …, ζ^{φ(4p)-1}`, `ζ = e^{iπ/(2p)}`.
    pub zeta_coeffs: Vec<String>,
    pub approx_re: String,
    pub approx_im: String,
}

fn fmt_float(x: f64) -> String {
    let s = format!("{x:.12}");
    if s.trim_start_matches('-').chars().all(|c| c == '0' || c == '.') {
        s.trim_start_matches('-').to_string()
    } else {
        s
    }
}

impl Scalar {
    pub fn of(c: &CycNum) -> Self {
        let (re, im) = c.to_complex();
        Scalar { zeta_coeffs: c.coeff_strings(), approx_re: fmt_float(re), approx_im: fmt_float(im) }
    }

    fn exact(&self) -> String {
        self.zeta_coeffs.join(" ")
    }

    fn approx(&self) -> String {
        format!("{}{}{}i", self.approx_re, if self.approx_im.starts_with('-') { "" } else { "+" }, self.approx_im)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Module {
    pub kind: String,
    pub r: u32,
    pub nu: i64,
}

impl Module {
    fn of(d: &ModuleDescriptor, nu_mod: u8) -> Self {
        Module { kind: d.kind.to_string(), r: d.r, nu: d.nu_raw.rem_euclid(nu_mod as i64) }
    }

    fn label(&self) -> String {
        match self.kind.as_str() {
            "V" | "L" | "P" => format!("{}[{}]_{}", self.kind, self.r, self.nu),
            _ => format!("{}({})_{}", self.kind, self.r, self.nu),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FusionRow {
    pub r1: u32,
    pub nu1: i64,
    pub r2: u32,
    pub nu2: i64,
    pub summands: Vec<Module>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FusionTable {
    pub rows: Vec<FusionRow>,
    pub paths_agree: bool,
    pub disagreements: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Multiplicity {
    pub kind: String,
    pub r: u32,
    pub count: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DecomposeTable {
    pub vertices: u32,
    pub total_dim: u64,
    pub multiplicities: Vec<Multiplicity>,
    /// Number of `V` summands, against `p(p²-1)/3` for two vertices
    pub v_modules: u64,
    /// Number of `P` summands, against `p(p-1)(2p-1)/6`
    pub p_modules: u64,
    pub identities_hold: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ClassifyRow {
    pub a: i64,
    pub b: Option<i64>,
    pub t: Option<i64>,
    #[serde(flatten)]
    pub module: Module,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ClassifyOut {
    One(Module),
    Table(Vec<ClassifyRow>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LambdaRow {
    /// The module the loop acts on
    pub y: Module,
    /// The module running along the loop
    pub z: Module,
    pub lambda: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MuRow {
    pub y: Module,
    pub z: Module,
    /// Top-to-bottom coefficient for the basis `u(i) = F^{i-1}▶T`, `v(i) = F^{i-1}▶V_{0,t}`
    pub mu: Scalar,
    /// The closed form as printed, for comparison
    pub mu_printed: Scalar,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LoopTable {
    pub lambda: Vec<LambdaRow>,
    pub mu: Vec<MuRow>,
    /// Direct evaluation of the loop on every simple agrees with `lambda`
    pub direct_agrees: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckOut {
    pub name: String,
    pub total: usize,
    pub failed: usize,
    pub failures: Vec<String>,
}

impl From<CheckReport> for CheckOut {
    fn from(r: CheckReport) -> Self {
        CheckOut { name: r.name, total: r.total, failed: r.failed, failures: r.failures }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteOut {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyOut {
    pub passed: bool,
    pub suites: Vec<SuiteOut>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase", tag = "command", content = "result")]
pub enum Payload {
    Fusion(FusionTable),
    Decompose(DecomposeTable),
    Classify(ClassifyOut),
    Loop(LoopTable),
    Verify(VerifyOut),
}

/// Top-level JSON document; also the cache file format.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Document {
    pub schema: String,
    pub version: String,
    pub p: u32,
    pub nu_mod: u8,
    #[serde(flatten)]
    pub payload: Payload,
}

impl Document {
    pub fn exit_code(&self) -> i32 {
        let ok = match &self.payload {
            Payload::Fusion(f) => f.paths_agree,
            Payload::Decompose(d) => d.identities_hold,
            Payload::Classify(_) => true,
            Payload::Loop(l) => l.direct_agrees,
            Payload::Verify(v) => v.passed,
        };
        if ok {
            0
        } else {
            2
        }
    }
}

#[derive(Debug)]
pub struct UsageError(pub String);

fn cache_key(cmd: &Command, common: &Common, p: u32) -> String {
    let extra = match cmd {
        Command::Fusion => "fusion".to_string(),
        Command::Decompose { vertices } => format!("decompose-v{vertices}"),
        Command::Classify { a, b, t } => {
            let f = |x: &Option<i64>| x.map_or("all".to_string(), |v| v.to_string());
            format!("classify-a{}-b{}-t{}", f(a), f(b), f(t))
        }
        Command::Loop => "loop".to_string(),
        Command::Verify { suite } => format!("verify-{}", suite.name()),
    };
    format!("{extra}-p{p}-nu{}-v{}", common.nu_mod, env!("CARGO_PKG_VERSION"))
}

fn default_cache_dir() -> PathBuf {
    if let Some(x) = std::env::var_os("XDG_CACHE_HOME") {
        return PathBuf::from(x).join("nichols");
    }
    if let Some(h) = std::env::var_os("HOME") {
        return PathBuf::from(h).join(".cache").join("nichols");
    }
    std::env::temp_dir().join("nichols-cache")
}

fn load_cached(path: &Path) -> Option<Document> {
    let text = std::fs::read_to_string(path).ok()?;
    let doc: Document = serde_json::from_str(&text).ok()?;
    (doc.schema == SCHEMA_VERSION && doc.version == env!("CARGO_PKG_VERSION")).then_some(doc)
}

fn store_cached(path: &Path, doc: &Document) {
    // the cache is an optimization; failures to write are ignored
    if let Some(dir) = path.parent() {
        let _ = std::fs::create_dir_all(dir);
    }
    if let Ok(text) = serde_json::to_string(doc) {
        let tmp = path.with_extension("json.tmp");
        if std::fs::write(&tmp, text).is_ok() {
            let _ = std::fs::rename(&tmp, path);
        }
    }
}

fn check_p(common: &Common) -> Result<u32, UsageError> {
    let p = common.p.ok_or_else(|| UsageError("--p is required".into()))?;
    if p < 2 {
        return Err(UsageError(format!("p must be at least 2, got {p}")));
    }
    if p > common.max_p {
        return Err(UsageError(format!("p={p} exceeds the cap {} (raise it with --max-p)", common.max_p)));
    }
    Ok(p)
}

/// Computes the document for a parsed command line, consulting the cache.
pub fn compute(cli: &Cli) -> Result<Document, UsageError> {
    let p = check_p(&cli.common)?;
    if let Command::Classify { a, b, t } = &cli.command {
        if a.is_none() && (b.is_some() || t.is_some()) || (b.is_some() != t.is_some()) {
            return Err(UsageError("classify takes --a alone, --a --b --t together, or none".into()));
        }
        if let Some(t) = t {
            if !(0..p as i64).contains(t) {
                return Err(UsageError(format!("--t must lie in 0..{p}")));
            }
        }
    }
    let cache_path = (!cli.common.no_cache).then(|| {
        let dir = cli.common.cache_dir.clone().unwrap_or_else(default_cache_dir);
        dir.join(format!("{}.json", cache_key(&cli.command, &cli.common, p)))
    });
    if let Some(doc) = cache_path.as_deref().and_then(load_cached) {
        return Ok(doc);
    }
    let nu_mod = cli.common.nu_mod;
    let payload = match &cli.command {
        Command::Fusion => Payload::Fusion(fusion_table(p, nu_mod)),
        Command::Decompose { vertices } => Payload::Decompose(decompose_table(p, *vertices)),
        Command::Classify { a, b, t } => Payload::Classify(classify_out(p, nu_mod, *a, *b, *t)),
        Command::Loop => Payload::Loop(loop_table(p, nu_mod)),
        Command::Verify { suite } => Payload::Verify(verify_out(p, *suite)),
    };
    let doc = Document { schema: SCHEMA_VERSION.into(), version: env!("CARGO_PKG_VERSION").into(), p, nu_mod, payload };
    if let Some(path) = cache_path {
        store_cached(&path, &doc);
    }
    Ok(doc)
}

fn sectors(nu_mod: u8) -> std::ops::Range<i64> {
    0..nu_mod as i64
}

pub fn fusion_table(p: u32, nu_mod: u8) -> FusionTable {
    let grid: Vec<(u32, i64, u32, i64)> = (1..=p)
        .flat_map(|r1| sectors(nu_mod).flat_map(move |n1| (1..=p).flat_map(move |r2| sectors(nu_mod).map(move |n2| (r1, n1, r2, n2)))))
        .collect();
    let results: Vec<_> = grid
        .par_iter()
        .map(|&(r1, n1, r2, n2)| {
            let closed = fuse_closed(r1, n1, r2, n2, p).expect("inputs in range");
            let brute = fuse_brute(r1, n1, r2, n2, p);
            let agree = brute.as_ref().map(|b| b.key() == closed.key()).unwrap_or(false);
            (closed, agree)
        })
        .collect();
    let mut rows = Vec::new();
    let mut disagreements = Vec::new();
    for (&(r1, nu1, r2, nu2), (closed, agree)) in grid.iter().zip(results) {
        let mut summands: Vec<Module> = closed.summands.iter().map(|d| Module::of(d, nu_mod)).collect();
        summands.sort_by(|x, y| (kind_rank(&x.kind), x.r, x.nu).cmp(&(kind_rank(&y.kind), y.r, y.nu)));
        if !agree {
            disagreements.push(format!("X({r1})_{nu1} x X({r2})_{nu2}"));
        }
        rows.push(FusionRow { r1, nu1, r2, nu2, summands });
    }
    FusionTable { paths_agree: disagreements.is_empty(), rows, disagreements }
}

fn kind_rank(k: &str) -> usize {
    ["X", "S", "V", "L", "B", "P"].iter().position(|x| *x == k).unwrap_or(usize::MAX)
}

pub fn decompose_table(p: u32, vertices: u32) -> DecomposeTable {
    let d = decompose_space(vertices, p).expect("one or two vertices");
    let pu = p as u64;
    let v_modules = d.modules_of(Kind::V);
    let p_modules = d.modules_of(Kind::P);
    let identities_hold = if vertices == 2 {
        d.total_dim == pu.pow(4)
            && d.count(Kind::S, p) == pu * pu
            && (1..p).all(|r| {
                let r = r as u64;
                d.count(Kind::V, r as u32) == 2 * r * (pu - r) && d.count(Kind::P, r as u32) == (pu - r).pow(2)
            })
            && 3 * v_modules == pu * (pu * pu - 1)
            && 6 * p_modules == pu * (pu - 1) * (2 * pu - 1)
    } else {
        d.total_dim == pu * pu && d.count(Kind::S, p) == 1 && (1..p).all(|r| d.count(Kind::V, r) == 1) && p_modules == 0
    };
    DecomposeTable {
        vertices,
        total_dim: d.total_dim,
        multiplicities: d.multiplicities.iter().map(|&(k, r, count)| Multiplicity { kind: k.to_string(), r, count }).collect(),
        v_modules,
        p_modules,
        identities_hold,
    }
}

pub fn classify_out(p: u32, nu_mod: u8, a: Option<i64>, b: Option<i64>, t: Option<i64>) -> ClassifyOut {
    match (a, b, t) {
        (Some(a), Some(b), Some(t)) => {
            ClassifyOut::One(Module::of(&classify_coinvariant(a, b, t, p).expect("t in range"), nu_mod))
        }
        (Some(a), None, None) => ClassifyOut::One(Module::of(&classify_one_vertex(a, p), nu_mod)),
        _ => {
            let pi = p as i64;
            let mut rows = Vec::new();
            for a in 0..pi {
                for b in 0..pi {
                    for t in 0..pi {
                        let d = classify_coinvariant(a, b, t, p).expect("t in range");
                        rows.push(ClassifyRow { a, b: Some(b), t: Some(t), module: Module::of(&d, nu_mod) });
                    }
                }
            }
            ClassifyOut::Table(rows)
        }
    }
}

pub fn loop_table(p: u32, nu_mod: u8) -> LoopTable {
    let field = Field::new(p).expect("p >= 2");
    let simples: Vec<(u32, i64)> = (1..=p).flat_map(|r| sectors(nu_mod).map(move |n| (r, n))).collect();
    let pairs: Vec<((u32, i64), (u32, i64))> =
        simples.iter().flat_map(|&y| simples.iter().map(move |&z| (y, z))).collect();
    let direct: Vec<bool> = pairs
        .par_iter()
        .map(|&((r1, n1), (r, n))| {
            chi_on_simple(&field, r1, n1, r, n, LoopForm::RelativeAntipode).ok()
                == lambda_closed(r1, n1, r, n, p).ok()
        })
        .collect();
    let module = |kind: &str, r: u32, nu: i64| Module { kind: kind.into(), r, nu };
    let lambda = pairs
        .iter()
        .map(|&((r1, n1), (r, n))| LambdaRow {
            y: module("X", r1, n1),
            z: module("X", r, n),
            lambda: Scalar::of(&lambda_closed(r1, n1, r, n, p).expect("in range")),
        })
        .collect();
    let mut mu = Vec::new();
    for &((r1, n1), (r, n)) in &pairs {
        if r1 < p {
            mu.push(MuRow {
                y: module("P", r1, n1),
                z: module("X", r, n),
                mu: Scalar::of(&mu_uv_basis(r1, n1, r, n, p).expect("in range")),
                mu_printed: Scalar::of(&mu_closed(r1, n1, r, n, p).expect("in range")),
            });
        }
    }
    LoopTable { lambda, mu, direct_agrees: direct.iter().all(|&x| x) }
}

pub fn verify_out(p: u32, suite: Suite) -> VerifyOut {
    let suites: Vec<SuiteOut> = suite
        .expand()
        .into_iter()
        .map(|s| {
            let checks: Vec<CheckOut> = run_suite(s, p).into_iter().map(CheckOut::from).collect();
            let passed = checks.iter().all(|c| c.failed == 0 && c.total > 0);
            SuiteOut { suite: s.name().into(), passed, checks }
        })
        .collect();
    VerifyOut { passed: suites.iter().all(|s| s.passed), suites }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn csv_line(fields: &[String]) -> String {
    let mut line = fields.iter().map(|f| csv_field(f)).collect::<Vec<_>>().join(",");
    line.push('\n');
    line
}

fn opt(x: Option<i64>) -> String {
    x.map_or(String::new(), |v| v.to_string())
}

pub fn render(doc: &Document, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string(doc).expect("serializable");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(doc),
        Format::Pretty => render_pretty(doc),
    }
}

fn render_csv(doc: &Document) -> String {
    let mut out = String::new();
    let s = |x: &dyn ToString| x.to_string();
    match &doc.payload {
        Payload::Fusion(f) => {
            out += &csv_line(&["r1", "nu1", "r2", "nu2", "summands"].map(String::from));
            for row in &f.rows {
                let sums = row.summands.iter().map(Module::label).collect::<Vec<_>>().join(" + ");
                out += &csv_line(&[s(&row.r1), s(&row.nu1), s(&row.r2), s(&row.nu2), sums]);
            }
        }
        Payload::Decompose(d) => {
            out += &csv_line(&["kind", "r", "count"].map(String::from));
            for m in &d.multiplicities {
                out += &csv_line(&[m.kind.clone(), s(&m.r), s(&m.count)]);
            }
        }
        Payload::Classify(c) => {
            out += &csv_line(&["a", "b", "t", "kind", "r", "nu"].map(String::from));
            match c {
                ClassifyOut::One(m) => out += &csv_line(&[String::new(), String::new(), String::new(), m.kind.clone(), s(&m.r), s(&m.nu)]),
                ClassifyOut::Table(rows) => {
                    for row in rows {
                        let m = &row.module;
                        out += &csv_line(&[s(&row.a), opt(row.b), opt(row.t), m.kind.clone(), s(&m.r), s(&m.nu)]);
                    }
                }
            }
        }
        Payload::Loop(l) => {
            out += &csv_line(&["quantity", "y", "z", "zeta_coeffs", "approx_re", "approx_im"].map(String::from));
            for row in &l.lambda {
                out += &csv_line(&["lambda".into(), row.y.label(), row.z.label(), row.lambda.exact(), row.lambda.approx_re.clone(), row.lambda.approx_im.clone()]);
            }
            for row in &l.mu {
                out += &csv_line(&["mu".into(), row.y.label(), row.z.label(), row.mu.exact(), row.mu.approx_re.clone(), row.mu.approx_im.clone()]);
                let pr = &row.mu_printed;
                out += &csv_line(&["mu_printed".into(), row.y.label(), row.z.label(), pr.exact(), pr.approx_re.clone(), pr.approx_im.clone()]);
            }
        }
        Payload::Verify(v) => {
            out += &csv_line(&["suite", "check", "total", "failed", "passed"].map(String::from));
            for su in &v.suites {
                for c in &su.checks {
                    out += &csv_line(&[su.suite.clone(), c.name.clone(), s(&c.total), s(&c.failed), s(&(c.failed == 0 && c.total > 0))]);
                }
            }
        }
    }
    out
}

fn render_pretty(doc: &Document) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "p = {}, sectors mod {}", doc.p, doc.nu_mod);
    match &doc.payload {
        Payload::Fusion(f) => {
            for row in &f.rows {
                let sums = row.summands.iter().map(Module::label).collect::<Vec<_>>().join(" + ");
                let _ = writeln!(out, "X({})_{} x X({})_{} = {}", row.r1, row.nu1, row.r2, row.nu2, sums);
            }
            let _ = writeln!(out, "closed form and brute force {}", if f.paths_agree { "agree" } else { "DISAGREE" });
            for d in &f.disagreements {
                let _ = writeln!(out, "  differs at {d}");
            }
        }
        Payload::Decompose(d) => {
            let _ = writeln!(out, "{}-vertex space, dimension {}", d.vertices, d.total_dim);
            for m in &d.multiplicities {
                let label = Module { kind: m.kind.clone(), r: m.r, nu: 0 }.label();
                let _ = writeln!(out, "  {} x {}", label.trim_end_matches("_0"), m.count);
            }
            let _ = writeln!(out, "V summands {}, P summands {}, identities {}", d.v_modules, d.p_modules, if d.identities_hold { "hold" } else { "FAIL" });
        }
        Payload::Classify(ClassifyOut::One(m)) => {
            let _ = writeln!(out, "{}", m.label());
        }
        Payload::Classify(ClassifyOut::Table(rows)) => {
            for row in rows {
                let _ = writeln!(out, "a={} b={} t={}  {}", row.a, opt(row.b), opt(row.t), row.module.label());
            }
        }
        Payload::Loop(l) => {
            for row in &l.lambda {
                let _ = writeln!(out, "lambda {} on {} = {}  [{}]", row.z.label(), row.y.label(), row.lambda.approx(), row.lambda.exact());
            }
            for row in &l.mu {
                let _ = writeln!(out, "mu {} on {} = {}  [{}]", row.z.label(), row.y.label(), row.mu.approx(), row.mu.exact());
            }
            let _ = writeln!(out, "direct evaluation {}", if l.direct_agrees { "agrees" } else { "DISAGREES" });
        }
        Payload::Verify(v) => {
            for su in &v.suites {
                for c in &su.checks {
                    let mark = if c.failed == 0 && c.total > 0 { "PASS" } else { "FAIL" };
                    let _ = writeln!(out, "{mark} {}: {}/{} passed", c.name, c.total - c.failed, c.total);
                    for f in &c.failures {
                        let _ = writeln!(out, "    {f}");
                    }
                }
            }
            let _ = writeln!(out, "{}", if v.passed { "all checks passed" } else { "some checks FAILED" });
        }
    }
    out
}

/// Entry point; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let doc = match compute(&cli) {
        Ok(d) => d,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return 1;
        }
    };
    let text = render(&doc, cli.common.format);
    match &cli.common.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return 1;
            }
        }
        None => print!("{text}"),
    }
    doc.exit_code()
}
