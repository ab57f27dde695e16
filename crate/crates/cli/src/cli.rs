//! Command-line interface. [`run`] returns the exit code and the text to print.
//!
//! Exit codes: 0 success, 1 a checked property fails, 2 parse or usage error,
//! 3 the ground-size guard refused the input.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;

use deltamat::ground::{check_guard, enumerate_admissible, SignedPermutation};
use deltamat::invariants::{
    activities, activity, activity_expansion, activity_zero_complex, independence_fvector, interlace,
    pure_o_inequalities, upoly, UMethod,
};
use deltamat::lorentzian::{conjecture_check, efls_gen_poly, indep_gen_poly, is_lorentzian, two_var_ulc_check, Inequality};
use deltamat::matroid::{
    closed_form_rank, closed_form_upoly, dm_from_gf2, dm_from_matroid, enveloping_check, enveloping_search,
    EnvelopeSearch, FromMatroid,
};
use deltamat::rankfn::{check_g_axioms, check_h_axioms, HSystem};
use deltamat::{AdmissibleSet, DeltaMatroid, Error, Matroid, MultiPoly, RankTable, ValidationMethod};

use crate::format::{self, InputDocument};
use crate::random::{scan_sample, Distribution};
use crate::scan::check_sample;

#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError { code: 2, message: message.into() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = if matches!(e, Error::GuardLimit { .. }) { 3 } else { 2 };
        CliError { code, message: format!("error: {e}") }
    }
}

impl From<format::ParseError> for CliError {
    fn from(e: format::ParseError) -> Self {
        CliError::usage(e.to_string())
    }
}

type CmdResult = Result<(i32, String), CliError>;

#[derive(Parser, Debug)]
#[command(name = "deltamat", version, about = "Delta-matroid workbench")]
struct Cli {
    /// Worker threads for parallel work (0 picks a default)
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,
    /// Print polynomial results as JSON
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ValidateMethod {
    Exchange,
    Polytope,
    Both,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum UpolyMethod {
    Direct,
    Recursive,
    Compare,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    Bases,
    Independents,
}

impl From<Mode> for FromMatroid {
    fn from(m: Mode) -> Self {
        match m {
            Mode::Bases => FromMatroid::Bases,
            Mode::Independents => FromMatroid::Independents,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum System {
    Shifted,
    Bouchet,
    Allys,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Which {
    Indep,
    Efls,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check the exchange axiom
    Validate {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "both")]
        method: ValidateMethod,
    },
    /// Summary of a delta-matroid
    Info { file: PathBuf },
    /// g and h of one admissible set, e.g. "1 -2"
    Rank {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Full rank table
    RankTable {
        file: PathBuf,
        /// Print h = (g + |S|)/2 instead of g
        #[arg(long)]
        h: bool,
    },
    /// The U-polynomial
    Upoly {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "direct")]
        method: UpolyMethod,
    },
    /// The interlace polynomial U(0, v)
    Interlace { file: PathBuf },
    /// Independence f-vector and the pure O-sequence inequalities
    Fvector { file: PathBuf },
    /// Activities of independent sets
    Activity {
        file: PathBuf,
        /// A single independent set
        #[arg(long, allow_hyphen_values = true, conflicts_with = "all")]
        set: Option<String>,
        /// Every independent set (default)
        #[arg(long)]
        all: bool,
    },
    /// The complex of activity-zero independent sets
    Complex { file: PathBuf },
    /// Contract, delete and project indices
    Minor {
        file: PathBuf,
        #[arg(long, default_value = "")]
        contract: String,
        #[arg(long, default_value = "")]
        delete: String,
        #[arg(long, default_value = "")]
        project: String,
    },
    /// Apply a signed permutation given by the images of 1..n, e.g. "2 -1 3"
    Twist {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        perm: String,
    },
    /// Direct sum of two delta-matroids
    Product { first: PathBuf, second: PathBuf },
    /// The matroid of feasible-set intersections with a transversal window
    UpperMatroid {
        file: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        window: String,
    },
    /// Delta-matroid of a matroid
    FromMatroid {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "bases")]
        mode: Mode,
    },
    /// Delta-matroid of nonsingular principal minors of a symmetric GF(2) matrix
    FromGf2 { file: PathBuf },
    /// Check the g-axioms of a rank table or delta-matroid
    AxiomsG { file: PathBuf },
    /// Check an h-axiom system
    AxiomsH {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "shifted")]
        system: System,
    },
    /// Check or search for an enveloping matroid
    Envelope {
        file: PathBuf,
        /// Matroid file to check
        #[arg(long, conflicts_with = "search")]
        check: Option<PathBuf>,
        #[arg(long)]
        search: bool,
        /// Node budget for the search
        #[arg(long, default_value_t = 100_000)]
        limit: usize,
    },
    /// Lorentzian check of a generating polynomial or a given polynomial
    Lorentzian {
        #[arg(required_unless_present = "poly")]
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "indep")]
        which: Which,
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
    },
    /// Log-concavity inequalities of the independence sequence
    Logconc { file: PathBuf },
    /// Closed forms for delta-matroids of matroids
    ClosedForm {
        file: Option<PathBuf>,
        /// Uniform matroid "r,m" instead of a file
        #[arg(long, conflicts_with = "file")]
        uniform: Option<String>,
        #[arg(long, value_enum, default_value = "bases")]
        mode: Mode,
        /// Compare against direct computation
        #[arg(long)]
        compare: bool,
    },
    /// Seeded random sweep of proven identities and conjectured inequalities
    Scan {
        #[arg(long, default_value_t = 100)]
        random: u64,
        #[arg(long, default_value_t = 4)]
        size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Restrict to one distribution (default cycles through all)
        #[arg(long, value_enum)]
        dist: Option<Distribution>,
    },
    /// Run the acceptance criteria
    Selftest,
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run(argv: &[String]) -> (i32, String) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.to_string());
        }
    };
    let result = match cli.threads {
        None => dispatch(cli.command, cli.json),
        Some(t) => match rayon::ThreadPoolBuilder::new().num_threads(t).build() {
            Ok(pool) => pool.install(|| dispatch(cli.command, cli.json)),
            Err(e) => Err(CliError::usage(format!("error: thread pool: {e}"))),
        },
    };
    match result {
        Ok(out) => out,
        Err(e) => (e.code, e.message),
    }
}

fn read(path: &Path) -> Result<InputDocument, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("error: cannot read {}: {e}", path.display())))?;
    let doc = format::parse(&text)?;
    let n = match &doc {
        InputDocument::DeltaMatroid(d) => d.ground_size(),
        InputDocument::Matroid(m) => match m.ground() {
            deltamat::Ground::Plain(k) | deltamat::Ground::Signed(k) => k,
            deltamat::Ground::Window(s) => s.ground_size(),
        },
        InputDocument::Gf2(a) => a.size(),
        InputDocument::RankTable(t) => t.ground_size(),
    };
    check_guard(n)?;
    Ok(doc)
}

fn read_dm(path: &Path) -> Result<DeltaMatroid, CliError> {
    match read(path)? {
        InputDocument::DeltaMatroid(d) => Ok(d),
        InputDocument::Gf2(a) => Ok(dm_from_gf2(&a)?),
        other => Err(CliError::usage(format!(
            "error: expected a delta-matroid, found a {} (convert it first)",
            other.kind()
        ))),
    }
}

fn read_matroid(path: &Path) -> Result<Matroid, CliError> {
    match read(path)? {
        InputDocument::Matroid(m) => Ok(m),
        other => Err(CliError::usage(format!("error: expected a matroid, found a {}", other.kind()))),
    }
}

fn parse_set(n: usize, text: &str) -> Result<AdmissibleSet, CliError> {
    format::parse_set(n, text).map_err(|m| CliError::usage(format!("error: {m}")))
}

fn parse_indices(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::usage(format!("error: expected an index, found `{t}`"))))
        .collect()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn braces(s: &AdmissibleSet) -> String {
    format!("{{{s}}}")
}

fn list(items: &[usize]) -> String {
    if items.is_empty() {
        return "-".into();
    }
    items.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(" ")
}

fn poly_json(p: &MultiPoly) -> serde_json::Value {
    let terms: Vec<serde_json::Value> = p
        .terms()
        .rev()
        .map(|(e, c)| serde_json::json!({ "exponents": e, "coefficient": c.to_string() }))
        .collect();
    serde_json::json!({ "variables": p.vars(), "terms": terms })
}

fn poly_out(p: &MultiPoly, json: bool) -> String {
    if json {
        poly_json(p).to_string()
    } else {
        p.to_string()
    }
}

fn dispatch(command: Command, json: bool) -> CmdResult {
    match command {
        Command::Validate { file, method } => validate(&read_dm(&file)?, method),
        Command::Info { file } => info(&read_dm(&file)?),
        Command::Rank { file, set } => {
            let d = read_dm(&file)?;
            let r = d.rank(&parse_set(d.ground_size(), &set)?)?;
            Ok((0, format!("g: {}\nh: {}", r.g, r.h)))
        }
        Command::RankTable { file, h } => {
            let d = read_dm(&file)?;
            let t = if h { d.h_table()? } else { d.rank_table()? };
            Ok((0, format::serialize_table(&t).trim_end().to_string()))
        }
        Command::Upoly { file, method } => upoly_cmd(&read_dm(&file)?, method, json),
        Command::Interlace { file } => Ok((0, poly_out(&interlace(&read_dm(&file)?)?, json))),
        Command::Fvector { file } => {
            let f = independence_fvector(&read_dm(&file)?)?;
            let report = pure_o_inequalities(&f);
            Ok((if report.passed() { 0 } else { 1 }, format!("f-vector: {f}\npure-O: {report}")))
        }
        Command::Activity { file, set, all: _ } => activity_cmd(&read_dm(&file)?, set.as_deref(), json),
        Command::Complex { file } => {
            let c = activity_zero_complex(&read_dm(&file)?)?;
            let mut out = format!("f-vector: {}; pure: {}", c.fvector, yes_no(c.pure));
            for f in &c.faces {
                write!(out, "\n{}", braces(f)).unwrap();
            }
            Ok((0, out))
        }
        Command::Minor { file, contract, delete, project } => {
            let d = read_dm(&file)?;
            let m = d.minor(&parse_indices(&contract)?, &parse_indices(&delete)?, &parse_indices(&project)?)?;
            Ok((0, format::serialize_dm(&m).trim_end().to_string()))
        }
        Command::Twist { file, perm } => {
            let d = read_dm(&file)?;
            let image = perm
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse().map_err(|_| CliError::usage(format!("error: expected a signed index, found `{t}`"))))
                .collect::<Result<Vec<i64>, _>>()?;
            let w = SignedPermutation::new(image)?;
            Ok((0, format::serialize_dm(&d.twist(&w)?).trim_end().to_string()))
        }
        Command::Product { first, second } => {
            let p = read_dm(&first)?.product(&read_dm(&second)?)?;
            check_guard(p.ground_size())?;
            Ok((0, format::serialize_dm(&p).trim_end().to_string()))
        }
        Command::UpperMatroid { file, window } => {
            let d = read_dm(&file)?;
            let m = d.upper_matroid(&parse_set(d.ground_size(), &window)?)?;
            Ok((0, format::serialize_matroid(&m).trim_end().to_string()))
        }
        Command::FromMatroid { file, mode } => {
            let d = dm_from_matroid(&read_matroid(&file)?, mode.into())?;
            Ok((0, format::serialize_dm(&d).trim_end().to_string()))
        }
        Command::FromGf2 { file } => match read(&file)? {
            InputDocument::Gf2(a) => Ok((0, format::serialize_dm(&dm_from_gf2(&a)?).trim_end().to_string())),
            other => Err(CliError::usage(format!("error: expected a gf2 matrix, found a {}", other.kind()))),
        },
        Command::AxiomsG { file } => {
            let table = match read(&file)? {
                InputDocument::RankTable(t) => t,
                InputDocument::DeltaMatroid(d) => d.rank_table()?,
                other => return Err(CliError::usage(format!("error: expected a rank table, found a {}", other.kind()))),
            };
            let report = check_g_axioms(&table)?;
            let mut out = format!("{}\neven: {}", report.axioms, yes_no(report.even));
            if report.passed() {
                let d = deltamat::rankfn::delta_from_rank(&table)?;
                write!(out, "\n{}", format::serialize_dm(&d).trim_end()).unwrap();
            }
            Ok((if report.passed() { 0 } else { 1 }, out))
        }
        Command::AxiomsH { file, system } => {
            let table: RankTable = match read(&file)? {
                InputDocument::RankTable(t) => t,
                InputDocument::DeltaMatroid(d) => d.h_table()?,
                other => return Err(CliError::usage(format!("error: expected a rank table, found a {}", other.kind()))),
            };
            let system = match system {
                System::Shifted => HSystem::Shifted,
                System::Bouchet => HSystem::Bouchet,
                System::Allys => HSystem::Allys,
            };
            let report = check_h_axioms(&table, system)?;
            Ok((if report.passed() { 0 } else { 1 }, report.to_string()))
        }
        Command::Envelope { file, check, search, limit } => {
            let d = read_dm(&file)?;
            match (check, search) {
                (Some(m), _) => {
                    let report = enveloping_check(&read_matroid(&m)?, &d)?;
                    Ok((if report.passed() { 0 } else { 1 }, report.to_string()))
                }
                (None, true) => envelope_search(&d, limit),
                (None, false) => Err(CliError::usage("error: envelope needs --check FILE or --search")),
            }
        }
        Command::Lorentzian { file, which, poly } => lorentzian_cmd(file.as_deref(), which, poly.as_deref(), json),
        Command::Logconc { file } => logconc(&read_dm(&file)?),
        Command::ClosedForm { file, uniform, mode, compare } => {
            closed_form(file.as_deref(), uniform.as_deref(), mode.into(), compare, json)
        }
        Command::Scan { random, size, seed, dist } => scan(random, size, seed, dist),
        Command::Selftest => {
            let outcomes = crate::acceptance::run_all();
            let ok = outcomes.iter().all(|o| o.passed);
            let text = outcomes.iter().map(|o| o.to_string()).collect::<Vec<_>>().join("\n");
            Ok((if ok { 0 } else { 1 }, text))
        }
    }
}

fn validate(d: &DeltaMatroid, method: ValidateMethod) -> CmdResult {
    let run = |m| d.validate(m);
    match method {
        ValidateMethod::Exchange | ValidateMethod::Polytope => {
            let m = if matches!(method, ValidateMethod::Exchange) {
                ValidationMethod::Exchange
            } else {
                ValidationMethod::Polytope
            };
            let v = run(m)?;
            Ok((if v.is_valid() { 0 } else { 1 }, v.to_string()))
        }
        ValidateMethod::Both => {
            let p = run(ValidationMethod::Polytope)?;
            let e = run(ValidationMethod::Exchange)?;
            let mut out = format!("{p}\nexchange: {e}");
            let agree = p.is_valid() == e.is_valid();
            if !agree {
                out.push_str("\nvalidators disagree");
            }
            Ok((if agree && p.is_valid() { 0 } else { 1 }, out))
        }
    }
}

fn info(d: &DeltaMatroid) -> CmdResult {
    let (loops, coloops) = d.loops_coloops();
    let valid = d.validate(ValidationMethod::Exchange)?.is_valid();
    Ok((
        0,
        format!(
            "n: {}\nfeasible sets: {}\nvalid: {}\neven: {}\nloops: {}\ncoloops: {}",
            d.ground_size(),
            d.feasible().len(),
            yes_no(valid),
            yes_no(d.is_even()),
            list(&loops),
            list(&coloops)
        ),
    ))
}

fn upoly_cmd(d: &DeltaMatroid, method: UpolyMethod, json: bool) -> CmdResult {
    match method {
        UpolyMethod::Direct => Ok((0, poly_out(&upoly(d, UMethod::Direct)?, json))),
        UpolyMethod::Recursive => Ok((0, poly_out(&upoly(d, UMethod::Recursive)?, json))),
        UpolyMethod::Compare => {
            let a = upoly(d, UMethod::Direct)?;
            let b = upoly(d, UMethod::Recursive)?;
            if json {
                let v = serde_json::json!({ "equal": a == b, "direct": poly_json(&a), "recursive": poly_json(&b) });
                return Ok((if a == b { 0 } else { 1 }, v.to_string()));
            }
            if a == b {
                Ok((0, format!("equal: {a}")))
            } else {
                Ok((1, format!("differ\ndirect: {a}\nrecursive: {b}")))
            }
        }
    }
}

fn activity_cmd(d: &DeltaMatroid, set: Option<&str>, json: bool) -> CmdResult {
    let line = |r: &deltamat::invariants::ActivityRecord| format!("{}: a={} active={}", braces(&r.set), r.a, list(&r.active));
    if let Some(s) = set {
        let r = activity(d, &parse_set(d.ground_size(), s)?)?;
        return Ok((0, line(&r)));
    }
    let mut out = String::new();
    for r in activities(d)? {
        writeln!(out, "{}", line(&r)).unwrap();
    }
    write!(out, "expansion: {}", poly_out(&activity_expansion(d)?, json)).unwrap();
    Ok((0, out))
}

fn envelope_search(d: &DeltaMatroid, limit: usize) -> CmdResult {
    match enveloping_search(d, limit)? {
        EnvelopeSearch::Found(m) => Ok((0, format!("found\n{}", format::serialize_matroid(&m).trim_end()))),
        EnvelopeSearch::NoneExists => Ok((1, "none: no enveloping matroid exists".into())),
        EnvelopeSearch::Inconclusive => Ok((1, format!("inconclusive: node budget {limit} exhausted"))),
    }
}

fn lorentzian_cmd(file: Option<&Path>, which: Which, poly: Option<&str>, json: bool) -> CmdResult {
    let p = match (poly, file) {
        (Some(text), _) => text.parse::<MultiPoly>()?,
        (None, Some(f)) => {
            let d = read_dm(f)?;
            match which {
                Which::Indep => indep_gen_poly(&d)?,
                Which::Efls => efls_gen_poly(&d)?,
            }
        }
        (None, None) => return Err(CliError::usage("error: lorentzian needs a file or --poly")),
    };
    let report = is_lorentzian(&p);
    let code = if report.passed() { 0 } else { 1 };
    if json {
        let v = serde_json::json!({ "polynomial": poly_json(&p), "lorentzian": report.passed() });
        return Ok((code, v.to_string()));
    }
    Ok((code, format!("polynomial: {p}\n{report}")))
}

fn logconc(d: &DeltaMatroid) -> CmdResult {
    let n = d.ground_size();
    let f = independence_fvector(d)?;
    let mut out = format!("a: {f}");
    let results = conjecture_check(f.a_sequence(), n)?;
    let mut two_holds = true;
    for r in &results {
        write!(out, "\n{r}").unwrap();
        if r.inequality == Inequality::Two && !r.holds {
            two_holds = false;
        }
    }
    let ulc = two_var_ulc_check(d)?;
    let seq: Vec<String> = ulc.sequence.iter().map(|c| c.to_string()).collect();
    write!(
        out,
        "\nulc sequence: {}\nulc log-concave: {}\nulc agrees with (2): {}",
        seq.join(" "),
        yes_no(ulc.log_concave()),
        yes_no(ulc.agrees_with_two)
    )
    .unwrap();
    Ok((if two_holds && ulc.agrees_with_two { 0 } else { 1 }, out))
}

fn parse_uniform(text: &str) -> Result<(usize, usize), CliError> {
    let parts = parse_indices(text)?;
    match parts.as_slice() {
        [r, m] => Ok((*r, *m)),
        _ => Err(CliError::usage(format!("error: expected \"r,m\", found `{text}`"))),
    }
}

fn closed_form(file: Option<&Path>, uniform: Option<&str>, mode: FromMatroid, compare: bool, json: bool) -> CmdResult {
    let mut matroids: Vec<(String, Matroid)> = Vec::new();
    match (file, uniform) {
        (Some(f), _) => matroids.push(("matroid".into(), read_matroid(f)?)),
        (None, Some(u)) => {
            let (r, m) = parse_uniform(u)?;
            check_guard(m)?;
            matroids.push((format!("U({r},{m})"), Matroid::uniform(r, m)?));
        }
        (None, None) => {
            for m in 0..=3 {
                for r in 0..=m {
                    matroids.push((format!("U({r},{m})"), Matroid::uniform(r, m)?));
                }
            }
        }
    }
    let mut code = 0;
    let mut lines = Vec::new();
    for (label, m) in &matroids {
        let formula = closed_form_upoly(m, mode)?;
        if !compare {
            lines.push(format!("{label}: {}", poly_out(&formula, json)));
            continue;
        }
        let d = dm_from_matroid(m, mode)?;
        let direct = upoly(&d, UMethod::Direct)?;
        if formula == direct {
            lines.push(format!("{label}: equal: {}", poly_out(&formula, json)));
        } else {
            code = 1;
            lines.push(format!(
                "{label}: formula {} vs direct {}",
                poly_out(&formula, json),
                poly_out(&direct, json)
            ));
        }
        let mut mismatches = 0usize;
        let mut first = None;
        for s in enumerate_admissible(d.ground_size())? {
            if closed_form_rank(m, &s, mode)? != d.g(&s) {
                mismatches += 1;
                first.get_or_insert(s);
            }
        }
        match first {
            None => lines.push(format!("{label}: rank agrees on all admissible sets")),
            Some(s) => {
                code = 1;
                lines.push(format!("{label}: rank differs on {mismatches} sets, first {}", braces(&s)));
            }
        }
    }
    Ok((code, lines.join("\n")))
}

fn scan(count: u64, n: usize, seed: u64, dist: Option<Distribution>) -> CmdResult {
    check_guard(n)?;
    let results: Vec<_> = (0..count)
        .into_par_iter()
        .map(|i| {
            let (dist, d) = match dist {
                None => scan_sample(seed, i, n),
                Some(dist) => (dist, crate::random::sample(dist, n, &mut crate::random::rng(seed, i))),
            };
            let report = check_sample(&d);
            (i, dist, d, report)
        })
        .collect();
    let mut out = String::new();
    let mut identity_failures = 0usize;
    let mut conjecture_failures = 0usize;
    for (i, dist, d, report) in results {
        let report = report?;
        let f = independence_fvector(&d)?;
        let status = if report.ok() { "ok".to_string() } else { format!("FAIL: {}", report.failures.join("; ")) };
        writeln!(out, "#{i} {} feasible={} f={f}: {status}", dist.name(), d.feasible().len()).unwrap();
        for c in &report.conjecture {
            writeln!(out, "  conjecture fails: {c}").unwrap();
        }
        if !report.ok() {
            identity_failures += 1;
            out.push_str(&indent(&format::serialize_dm(&d)));
        }
        if !report.conjecture.is_empty() {
            conjecture_failures += 1;
            out.push_str(&indent(&format::serialize_dm(&d)));
        }
    }
    write!(
        out,
        "samples: {count}; size: {n}; seed: {seed}; identity failures: {identity_failures}; conjecture failures: {conjecture_failures}"
    )
    .unwrap();
    Ok((if identity_failures == 0 { 0 } else { 1 }, out))
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("    {l}\n")).collect()
}
