//! The `sgp` command line: argument parsing, dispatch and rendering.
//!
//! [`run`] is the whole program minus process exit, so tests can drive it
//! with an in-memory writer.

pub mod scan;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Map, Value};
use sgp_core::bounds::{BoundName, BoundReport};
use sgp_core::classify::{project_by_n, symmetry_profile, type_verdict};
use sgp_core::families::{
    buchweitz_family, cover_family, superelliptic_i, superelliptic_ii, superelliptic_iii,
    FamilyResult,
};
use sgp_core::obstruction::{explain_lambda, gap_sum_profile, lemma_4_1_1};
use sgp_core::{Error, NumericalSemigroup, DEFAULT_GENUS_CAP};

use crate::scan::{Predicate, UnknownPredicate};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Longest list printed in full; longer ones are cut and flagged.
pub const LIST_CAP: usize = 512;

pub const GENUS_CAP_VAR: &str = "SGP_GENUS_CAP";

#[derive(Debug, Parser)]
#[command(name = "sgp", version, about = "Numerical semigroup analysis")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Output::Json, global = true)]
    pub output: Output,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Gaps,
    Gens,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Genus, Frobenius number, gaps and minimal generators.
    Info { semigroup: String },
    /// Type (N, γ) verdict, or the symmetry profile when --N is absent.
    Classify {
        semigroup: String,
        #[arg(long = "N")]
        n: Option<u64>,
        /// Defaults to the number of gaps divisible by N.
        #[arg(long)]
        gamma: Option<u64>,
    },
    /// Closed-form bounds.
    Bounds {
        #[command(subcommand)]
        action: BoundsAction,
    },
    /// Sums of gaps, the Buchweitz bound and the pairwise gap test.
    Obstruct {
        semigroup: String,
        #[arg(long, default_value_t = 2)]
        n: u64,
        /// List the sums responsible for the excess.
        #[arg(long)]
        explain: bool,
    },
    /// Build a member of a named family.
    Family {
        #[arg(value_enum)]
        name: FamilyName,
        /// Parameters as key=value.
        #[arg(long, num_args = 1..)]
        params: Vec<String>,
        #[arg(long, value_enum, default_value_t = Emit::Gaps)]
        emit: Emit,
        /// For `cover`, retry with g + 1 when 2g - f is divisible by N.
        #[arg(long)]
        bump_g: bool,
    },
    /// Enumerate a genus range and stream the semigroups matching a predicate.
    Scan {
        /// Single genus; shorthand for --genus-min G --genus-max G.
        #[arg(long, conflicts_with_all = ["genus_min", "genus_max"])]
        genus: Option<u64>,
        #[arg(long)]
        genus_min: Option<u64>,
        #[arg(long)]
        genus_max: Option<u64>,
        /// bc_fail | type:N,gamma | symmetric | quasi_symmetric | lemma411
        #[arg(long)]
        predicate: String,
        /// Order of the gap sums for bc_fail.
        #[arg(long, default_value_t = 2)]
        n: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Quotient semigroup of a type (N, γ) semigroup.
    Project {
        semigroup: String,
        #[arg(long = "N")]
        n: u64,
        #[arg(long)]
        gamma: Option<u64>,
    },
}

#[derive(Debug, Subcommand)]
pub enum BoundsAction {
    /// Evaluate one bound: rho1..rho5, castelnuovo_c, compositum, coprime_lower, jenkins.
    Eval {
        name: String,
        #[arg(allow_negative_numbers = true)]
        args: Vec<i64>,
        /// Semigroup for coprime_lower.
        #[arg(long)]
        semigroup: Option<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Buchweitz,
    Cover,
    #[value(name = "superelliptic_i")]
    SuperellipticI,
    #[value(name = "superelliptic_ii")]
    SuperellipticII,
    #[value(name = "superelliptic_iii")]
    SuperellipticIII,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Core(Error),
    Predicate(UnknownPredicate),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Usage(_) | Failure::Predicate(_) | Failure::Core(Error::Parse(_)) => EXIT_USAGE,
            Failure::Core(_) => EXIT_FAILURE,
        }
    }

    fn to_json(&self) -> Value {
        let (name, message) = match self {
            Failure::Usage(m) => ("Usage", m.clone()),
            Failure::Predicate(p) => ("UnknownPredicate", p.to_string()),
            Failure::Core(e) => (e.name(), e.to_string()),
        };
        json!({ "error": name, "message": message })
    }
}

/// Runs the program on `args` (including the program name), writing the
/// report to `out`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let output = cli.output;
    let result = match cli.command {
        Command::Scan {
            genus,
            genus_min,
            genus_max,
            predicate,
            n,
            jobs,
        } => run_scan(genus, genus_min, genus_max, &predicate, n, jobs, output, out),
        other => dispatch(other).map(|v| {
            let _ = emit(&v, output, out);
        }),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = emit(&f.to_json(), output, out);
            f.code()
        }
    }
}

fn parse_semigroup(s: &str) -> Result<NumericalSemigroup, Failure> {
    s.parse().map_err(Failure::Core)
}

fn dispatch(cmd: Command) -> Result<Value, Failure> {
    match cmd {
        Command::Info { semigroup } => Ok(info_json(&parse_semigroup(&semigroup)?)),
        Command::Classify {
            semigroup,
            n,
            gamma,
        } => {
            let h = parse_semigroup(&semigroup)?;
            match n {
                Some(0) => Err(Failure::Usage("--N must be positive".into())),
                Some(n) => {
                    let gamma = gamma.unwrap_or_else(|| h.gamma_n(n));
                    Ok(to_value(&type_verdict(&h, n, gamma)))
                }
                None if gamma.is_some() => Err(Failure::Usage("--gamma requires --N".into())),
                None => Ok(to_value(&symmetry_profile(&h)?)),
            }
        }
        Command::Bounds {
            action:
                BoundsAction::Eval {
                    name,
                    args,
                    semigroup,
                },
        } => {
            let name: BoundName = name.parse().map_err(|e: Error| Failure::Usage(e.to_string()))?;
            let h = semigroup.as_deref().map(parse_semigroup).transpose()?;
            Ok(to_value(&BoundReport::evaluate(name, &args, h.as_ref())?))
        }
        Command::Obstruct {
            semigroup,
            n,
            explain,
        } => {
            let h = parse_semigroup(&semigroup)?;
            obstruct_json(&h, n, explain)
        }
        Command::Family {
            name,
            params,
            emit,
            bump_g,
        } => family_json(name, &params, emit, bump_g),
        Command::Project {
            semigroup,
            n,
            gamma,
        } => {
            let h = parse_semigroup(&semigroup)?;
            if n == 0 {
                return Err(Failure::Usage("--N must be positive".into()));
            }
            let gamma = gamma.unwrap_or_else(|| h.gamma_n(n));
            Ok(info_json(&project_by_n(&h, n, gamma)?))
        }
        Command::Scan { .. } => unreachable!("handled by run"),
    }
}

fn to_value<T: sgp_core::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn capped_list(key: &str, xs: &[u64], obj: &mut Map<String, Value>) {
    let cut = xs.len() > LIST_CAP;
    obj.insert(key.to_string(), json!(&xs[..xs.len().min(LIST_CAP)]));
    obj.insert(format!("{key}_truncated"), json!(cut));
}

pub fn info_json(h: &NumericalSemigroup) -> Value {
    let mut obj = Map::new();
    obj.insert("semigroup".into(), json!(h.to_string()));
    obj.insert("genus".into(), json!(h.genus()));
    obj.insert("frobenius".into(), json!(h.frobenius()));
    obj.insert("conductor".into(), json!(h.conductor()));
    obj.insert("multiplicity".into(), json!(h.multiplicity()));
    capped_list("gaps", &h.gap_list(), &mut obj);
    obj.insert("min_gens".into(), json!(h.minimal_generators()));
    Value::Object(obj)
}

fn obstruct_json(h: &NumericalSemigroup, n: u64, explain: bool) -> Result<Value, Failure> {
    let p = gap_sum_profile(h, n)?;
    let mut obj = Map::new();
    obj.insert("n".into(), json!(p.n));
    obj.insert("cardinality".into(), json!(p.cardinality));
    obj.insert("bc_bound".into(), json!(p.bc_bound));
    obj.insert("passes_bc".into(), json!(p.passes_bc));
    obj.insert("lambda".into(), json!(p.lambda));
    capped_list("sums", &p.sums, &mut obj);
    let lemma = match lemma_4_1_1(h) {
        Ok(r) => to_value(&r),
        Err(e) => json!({ "error": e.name(), "message": e.to_string() }),
    };
    obj.insert("lemma_4_1_1".into(), lemma);
    if explain {
        obj.insert("explain".into(), to_value(&explain_lambda(h)?));
    }
    Ok(Value::Object(obj))
}

fn parse_params(params: &[String]) -> Result<BTreeMap<String, String>, Failure> {
    let mut map = BTreeMap::new();
    for p in params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("parameter {p:?} is not key=value")))?;
        if map.insert(k.to_string(), v.to_string()).is_some() {
            return Err(Failure::Usage(format!("parameter {k:?} given twice")));
        }
    }
    Ok(map)
}

struct Params {
    map: BTreeMap<String, String>,
}

impl Params {
    fn int(&mut self, key: &str) -> Result<u64, Failure> {
        self.opt_int(key)?
            .ok_or_else(|| Failure::Usage(format!("missing parameter {key}")))
    }

    fn opt_int(&mut self, key: &str) -> Result<Option<u64>, Failure> {
        self.map
            .remove(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Failure::Usage(format!("parameter {key}={v} is not a nonnegative integer")))
            })
            .transpose()
    }

    fn semigroup(&mut self, key: &str) -> Result<NumericalSemigroup, Failure> {
        let v = self
            .map
            .remove(key)
            .ok_or_else(|| Failure::Usage(format!("missing parameter {key}")))?;
        parse_semigroup(&v)
    }

    fn done(self) -> Result<(), Failure> {
        match self.map.keys().next() {
            Some(k) => Err(Failure::Usage(format!("unknown parameter {k}"))),
            None => Ok(()),
        }
    }
}

fn family_json(name: FamilyName, params: &[String], emit: Emit, bump_g: bool) -> Result<Value, Failure> {
    let mut p = Params {
        map: parse_params(params)?,
    };
    let result: FamilyResult = match name {
        FamilyName::Buchweitz => {
            let (g, i, a) = (p.int("g")?, p.int("i")?, p.opt_int("a")?);
            p.done()?;
            buchweitz_family(g, i, a)?
        }
        FamilyName::Cover => {
            let htilde = p.semigroup("htilde")?;
            let (n, g, f) = (p.int("N")?, p.int("g")?, p.int("f")?);
            p.done()?;
            let congruent = n > 0 && (2 * g).checked_sub(f).is_some_and(|x| x % n == 0);
            let g = if bump_g && congruent { g + 1 } else { g };
            cover_family(&htilde, n, g, f)?
        }
        FamilyName::SuperellipticI => {
            let (n, gamma, g) = (p.int("N")?, p.int("gamma")?, p.int("g")?);
            p.done()?;
            superelliptic_i(n, gamma, g)?
        }
        FamilyName::SuperellipticII => {
            let (n, gamma) = (p.int("N")?, p.int("gamma")?);
            p.done()?;
            superelliptic_ii(n, gamma)?
        }
        FamilyName::SuperellipticIII => {
            let (n, gamma) = (p.int("N")?, p.int("gamma")?);
            let (a, t, g) = (p.int("A")?, p.int("t")?, p.int("g")?);
            p.done()?;
            superelliptic_iii(n, gamma, a, t, g)?
        }
    };
    let mut v = to_value(&result);
    if emit == Emit::Gens {
        let gens: Vec<String> = result
            .semigroup
            .minimal_generators()
            .iter()
            .map(u64::to_string)
            .collect();
        v["semigroup"] = json!(format!("gens:{}", gens.join(",")));
    }
    Ok(v)
}

fn genus_cap() -> Result<u64, Failure> {
    match std::env::var(GENUS_CAP_VAR) {
        Ok(s) => s
            .parse()
            .map_err(|_| Failure::Usage(format!("{GENUS_CAP_VAR}={s} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_GENUS_CAP),
    }
}

#[allow(clippy::too_many_arguments)]
fn run_scan(
    genus: Option<u64>,
    genus_min: Option<u64>,
    genus_max: Option<u64>,
    predicate: &str,
    n: u64,
    jobs: usize,
    output: Output,
    out: &mut dyn Write,
) -> Result<(), Failure> {
    let pred = Predicate::parse(predicate, n).map_err(Failure::Predicate)?;
    let (lo, hi) = match (genus, genus_min, genus_max) {
        (Some(g), _, _) => (g, g),
        (None, None, None) => return Err(Failure::Usage("scan needs --genus or --genus-max".into())),
        (None, lo, hi) => {
            let hi = hi.ok_or_else(|| Failure::Usage("scan needs --genus-max".into()))?;
            (lo.unwrap_or(0), hi)
        }
    };
    if lo > hi {
        return Err(Failure::Usage(format!("empty genus range {lo}..={hi}")));
    }
    if jobs == 0 {
        return Err(Failure::Usage("--jobs must be positive".into()));
    }
    let report = scan::scan(lo, hi, pred, jobs, genus_cap()?)?;
    for h in &report.matches {
        match output {
            Output::Json => {
                let line = json!({
                    "semigroup": h.to_string(),
                    "genus": h.genus(),
                    "min_gens": h.minimal_generators(),
                });
                let _ = writeln!(out, "{line}");
            }
            Output::Text => {
                let _ = writeln!(out, "{h}");
            }
        }
    }
    let summary = json!({
        "summary": {
            "genus_min": lo,
            "genus_max": hi,
            "predicate": pred.to_string(),
            "scanned": report.scanned,
            "matches": report.matches.len(),
        }
    });
    let _ = emit(&summary, output, out);
    Ok(())
}

fn emit(v: &Value, output: Output, out: &mut dyn Write) -> std::io::Result<()> {
    match output {
        Output::Json => writeln!(out, "{v}"),
        Output::Text => write_text(v, "", out),
    }
}

/// `key: value` per line; nested objects use dotted keys, arrays print as JSON.
fn write_text(v: &Value, prefix: &str, out: &mut dyn Write) -> std::io::Result<()> {
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                let key = if prefix.is_empty() {
                    k.clone()
                } else {
                    format!("{prefix}.{k}")
                };
                match val {
                    Value::Object(_) => write_text(val, &key, out)?,
                    Value::String(s) => writeln!(out, "{key}: {s}")?,
                    other => writeln!(out, "{key}: {other}")?,
                }
            }
            Ok(())
        }
        Value::String(s) => writeln!(out, "{s}"),
        other => writeln!(out, "{other}"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_str(args: &[&str]) -> (i32, String) {
        let mut buf = Vec::new();
        let code = run(std::iter::once("sgp").chain(args.iter().copied()), &mut buf);
        (code, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn text_mode_lists_every_field() {
        let (code, out) = run_str(&["--output", "text", "info", "gens:4,7"]);
        assert_eq!(code, 0);
        let (_, js) = run_str(&["info", "gens:4,7"]);
        let v: Value = serde_json::from_str(&js).unwrap();
        for k in v.as_object().unwrap().keys() {
            assert!(out.lines().any(|l| l.starts_with(&format!("{k}: "))), "{k}");
        }
    }

    #[test]
    fn params_are_strict() {
        assert_eq!(run_str(&["family", "buchweitz", "--params", "g=16"]).0, EXIT_USAGE);
        assert_eq!(
            run_str(&["family", "buchweitz", "--params", "g=16", "i=4", "z=1"]).0,
            EXIT_USAGE
        );
        assert_eq!(run_str(&["family", "buchweitz", "--params", "g=x", "i=4"]).0, EXIT_USAGE);
    }

    #[test]
    fn list_cap_marks_truncation() {
        let mut obj = Map::new();
        let xs: Vec<u64> = (0..600).collect();
        capped_list("gaps", &xs, &mut obj);
        assert_eq!(obj["gaps"].as_array().unwrap().len(), LIST_CAP);
        assert_eq!(obj["gaps_truncated"], json!(true));
    }
}
