//! The `nakayama` command line: JSON ideal files in, JSON reports out.
//!
//! Exit codes: 0 ok, 1 mismatch, 2 parse error, 3 precondition error,
//! 4 size guard.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::degree::Multidegree;
use crate::error::{Error, Result};
use crate::formulas::{
    betti_table_formula, cohomology_table_formula, cohomology_table_formula_with_mult,
    dual_betti_table_formula, is_c_linear, is_support_linear, local_cohomology,
    nonvanishing_witness, two_var_linearity_predicted, two_var_report, vanishing_h0, vanishing_top,
};
use crate::ideal::MonomialIdeal;
use crate::linalg::{Field, FieldSpec};
use crate::modrep::{
    cohomology_table as oracle_table, quotient_module, CohomologyTable, ComplexOfReps,
};
use crate::verify::{exhaustive_cases, random_cases, run_sweep, SweepSpec};
use crate::with_field;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_PRECONDITION: i32 = 3;
pub const EXIT_SIZE_GUARD: i32 = 4;

/// Exit code for an error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        Error::SizeGuard { .. } => EXIT_SIZE_GUARD,
        Error::NotPrime(_)
        | Error::NegativeExponent(_)
        | Error::NotTDetermined { .. }
        | Error::Precondition(_) => EXIT_PRECONDITION,
        Error::NotAComplex(_) | Error::NotAChainMap(_) | Error::NotExact(_) => EXIT_MISMATCH,
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "nakayama",
    version,
    about = "Nakayama cohomology of monomial quotient rings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Cohomology table of the k-th Nakayama iterate of S/I.
    Cohomology {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_degree)]
        k: Multidegree,
        #[arg(long, value_enum, default_value_t = Mode::Formula)]
        mode: Mode,
        /// Also report ranks of the multiplication maps.
        #[arg(long)]
        with_mult: bool,
    },
    /// Betti table of the k-th Nakayama iterate of S/I.
    Betti {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_degree)]
        k: Multidegree,
        #[arg(long, value_enum, default_value_t = Mode::Formula)]
        mode: Mode,
    },
    /// One local cohomology dimension of S/I.
    Localcoh {
        #[command(flatten)]
        input: Input,
        #[arg(long, allow_hyphen_values = true)]
        i: i32,
        #[arg(long, value_parser = parse_degree, allow_hyphen_values = true)]
        z: Multidegree,
    },
    /// Alexander dual of I.
    Dual {
        #[command(flatten)]
        input: Input,
    },
    /// Vanishing of the extreme cohomology groups, with witnesses.
    Vanishing {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_degree)]
        k: Multidegree,
    },
    /// The complete vanishing report in two variables.
    Twovar {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_degree)]
        k: Multidegree,
    },
    /// Linearity of the Betti table of the k-th iterate and of A_t(S/I).
    Linearity {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_degree)]
        k: Multidegree,
        /// Defaults to k − 1, clamped at 0.
        #[arg(long, value_parser = parse_degree)]
        c: Option<Multidegree>,
    },
    /// Formula against oracle over a family of ideals.
    Verify {
        /// Family to sweep, as n=N,tmax=T.
        #[arg(long, default_value = "n=2,tmax=2")]
        exhaustive: String,
        /// Draw this many random cases from the family's shape instead.
        #[arg(long)]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        field: Option<String>,
    },
}

#[derive(Args, Debug)]
pub struct Input {
    /// JSON file with n, t, field and generators.
    pub file: PathBuf,
    /// Overrides the file's field: q, gf2, gf3, ...
    #[arg(long)]
    pub field: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Formula,
    Oracle,
    Both,
}

fn parse_degree(s: &str) -> std::result::Result<Multidegree, String> {
    s.split(',')
        .map(|x| x.trim().parse::<i32>().map_err(|e| format!("{x:?}: {e}")))
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(Multidegree::new)
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealFile {
    n: usize,
    t: Vec<i32>,
    #[serde(default)]
    field: Option<FieldSpec>,
    generators: Vec<Vec<i32>>,
}

/// A parsed ideal file: the minimalized ideal, its box and its field.
#[derive(Clone, Debug)]
pub struct Job {
    pub ideal: MonomialIdeal,
    pub t: Multidegree,
    pub field: FieldSpec,
}

/// Reads the JSON ideal format. Redundant generators are dropped with a
/// warning on `err`.
pub fn parse_ideal(text: &str, err: &mut dyn Write) -> Result<Job> {
    let raw: IdealFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if raw.t.len() != raw.n {
        return Err(Error::Parse(format!(
            "t has {} entries, n = {}",
            raw.t.len(),
            raw.n
        )));
    }
    if let Some(g) = raw.generators.iter().find(|g| g.len() != raw.n) {
        return Err(Error::Parse(format!(
            "generator {g:?} does not have {} entries",
            raw.n
        )));
    }
    let t = Multidegree::new(raw.t);
    if !t.is_nonnegative() {
        return Err(Error::Precondition(format!("t = {t} has a negative entry")));
    }
    let gens: Vec<Multidegree> = raw.generators.into_iter().map(Multidegree::new).collect();
    let ideal = MonomialIdeal::minimalize(raw.n, &gens)?;
    let given: BTreeSet<&Multidegree> = gens.iter().collect();
    if given.len() != ideal.gens().len() {
        let _ = writeln!(err, "warning: generators minimalized to {ideal}");
    }
    ideal.require_t_determined(&t)?;
    let field = raw.field.unwrap_or_else(FieldSpec::gf2);
    field.validate()?;
    Ok(Job { ideal, t, field })
}

fn load(input: &Input, err: &mut dyn Write) -> Result<Job> {
    let text = read(&input.file)?;
    let mut job = parse_ideal(&text, err)?;
    if let Some(f) = &input.field {
        job.field = FieldSpec::parse(f)?;
    }
    Ok(job)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn check_len(job: &Job, name: &str, d: &Multidegree) -> Result<()> {
    if d.len() != job.t.len() {
        return Err(Error::Parse(format!(
            "--{name} needs {} entries, got {d}",
            job.t.len()
        )));
    }
    Ok(())
}

fn header(command: &str, job: &Job) -> serde_json::Map<String, Value> {
    let mut m = serde_json::Map::new();
    m.insert("command".into(), json!(command));
    m.insert("ideal".into(), json!(job.ideal.to_string()));
    m.insert("generators".into(), json!(job.ideal.gens()));
    m.insert("t".into(), json!(job.t));
    m.insert("field".into(), json!(job.field.to_string()));
    m
}

fn oracle_nakayama(job: &Job, k: &Multidegree) -> Result<ComplexOfReps> {
    ComplexOfReps::concentrated(quotient_module(&job.ideal, &job.t)?, 0).nakayama(k)
}

/// Runs `mode` and returns the reports with whether they agree.
fn both_ways(
    mode: Mode,
    formula: impl FnOnce() -> Result<CohomologyTable>,
    oracle: impl FnOnce() -> Result<CohomologyTable>,
) -> Result<(Option<CohomologyTable>, Option<CohomologyTable>)> {
    let f = matches!(mode, Mode::Formula | Mode::Both)
        .then(formula)
        .transpose()?;
    let o = matches!(mode, Mode::Oracle | Mode::Both)
        .then(oracle)
        .transpose()?;
    Ok((f, o))
}

fn emit_tables(
    m: &mut serde_json::Map<String, Value>,
    f: &Option<CohomologyTable>,
    o: &Option<CohomologyTable>,
) -> bool {
    if let Some(f) = f {
        m.insert("formula".into(), json!(f));
    }
    if let Some(o) = o {
        m.insert("oracle".into(), json!(o));
    }
    match (f, o) {
        (Some(f), Some(o)) => {
            let same = f == o;
            m.insert("match".into(), json!(same));
            same
        }
        _ => true,
    }
}

fn homological(table: &CohomologyTable) -> Value {
    let rows: Vec<Value> = table
        .dims
        .iter()
        .rev()
        .map(|((i, r), d)| json!({ "p": -i, "r": r, "dim": d }))
        .collect();
    json!(rows)
}

fn cohomology_cmd<F: Field>(
    job: &Job,
    k: &Multidegree,
    mode: Mode,
    with_mult: bool,
    field: &F,
) -> Result<(Value, bool)> {
    check_len(job, "k", k)?;
    let (f, o) = both_ways(
        mode,
        || match with_mult {
            true => cohomology_table_formula_with_mult(&job.ideal, &job.t, k, field),
            false => cohomology_table_formula(&job.ideal, &job.t, k, field),
        },
        || Ok(oracle_table(&oracle_nakayama(job, k)?, field, with_mult)),
    )?;
    let mut m = header("cohomology", job);
    m.insert("k".into(), json!(k));
    let ok = emit_tables(&mut m, &f, &o);
    Ok((Value::Object(m), ok))
}

fn betti_cmd<F: Field>(job: &Job, k: &Multidegree, mode: Mode, field: &F) -> Result<(Value, bool)> {
    check_len(job, "k", k)?;
    let (f, o) = both_ways(
        mode,
        || betti_table_formula(&job.ideal, &job.t, k, field),
        || {
            Ok(oracle_table(
                &oracle_nakayama(job, k)?.koszul_tensor()?,
                field,
                false,
            ))
        },
    )?;
    let mut m = header("betti", job);
    m.insert("k".into(), json!(k));
    let ok = emit_tables(&mut m, &f, &o);
    if k.coords().iter().all(|&x| x == 0) {
        if let Some(table) = f.as_ref().or(o.as_ref()) {
            m.insert("betti_numbers".into(), homological(table));
        }
    }
    Ok((Value::Object(m), ok))
}

fn linearity_cmd<F: Field>(
    job: &Job,
    k: &Multidegree,
    c: Option<Multidegree>,
    field: &F,
) -> Result<Value> {
    check_len(job, "k", k)?;
    let n = job.t.len();
    let c = c.unwrap_or_else(|| Multidegree::max(&k.add_scalar(-1), &Multidegree::zero(n)));
    check_len(job, "c", &c)?;
    let betti = betti_table_formula(&job.ideal, &job.t, k, field)?;
    let dual = dual_betti_table_formula(&job.ideal, &job.t, field)?;
    let local = cohomology_table_formula(&job.ideal, &job.t, &Multidegree::ones(n), field)?;
    let classification = if n == 2 && Multidegree::ones(2).leq(k) && k.leq(&job.t) {
        Some(two_var_linearity_predicted(
            &job.ideal,
            &job.t,
            &job.t.add_scalar(1).sub(k),
        )?)
    } else {
        None
    };
    let mut m = header("linearity", job);
    m.insert("k".into(), json!(k));
    m.insert("c".into(), json!(c));
    m.insert("c_linear".into(), json!(is_c_linear(&betti, &c, n)));
    m.insert(
        "dual_support_linear".into(),
        json!(is_support_linear(&dual)),
    );
    m.insert(
        "single_local_cohomology".into(),
        json!(local.degrees().len() <= 1),
    );
    m.insert("classification".into(), json!(classification));
    Ok(Value::Object(m))
}

fn execute(command: Command, err: &mut dyn Write) -> Result<(Value, bool)> {
    match command {
        Command::Cohomology {
            input,
            k,
            mode,
            with_mult,
        } => {
            let job = load(&input, err)?;
            with_field!(job.field, |f| cohomology_cmd(&job, &k, mode, with_mult, f))
        }
        Command::Betti { input, k, mode } => {
            let job = load(&input, err)?;
            with_field!(job.field, |f| betti_cmd(&job, &k, mode, f))
        }
        Command::Localcoh { input, i, z } => {
            let job = load(&input, err)?;
            check_len(&job, "z", &z)?;
            let dim = with_field!(job.field, |f| local_cohomology(
                &job.ideal, &job.t, i, &z, f
            ))?;
            let mut m = header("localcoh", &job);
            m.insert("i".into(), json!(i));
            m.insert("z".into(), json!(z));
            m.insert("dim".into(), json!(dim));
            Ok((Value::Object(m), true))
        }
        Command::Dual { input } => {
            let job = load(&input, err)?;
            let dual = job.ideal.alexander_dual(&job.t)?;
            let mut m = header("dual", &job);
            m.insert("dual".into(), json!(dual.to_string()));
            m.insert("dual_generators".into(), json!(dual.gens()));
            Ok((Value::Object(m), true))
        }
        Command::Vanishing { input, k } => {
            let job = load(&input, err)?;
            check_len(&job, "k", &k)?;
            let mut m = header("vanishing", &job);
            m.insert("k".into(), json!(k));
            m.insert(
                "h0_vanishes".into(),
                json!(vanishing_h0(&job.ideal, &job.t, &k)?),
            );
            m.insert(
                "top_vanishes".into(),
                json!(vanishing_top(&job.ideal, &job.t, &k)?),
            );
            m.insert(
                "witnesses".into(),
                json!(nonvanishing_witness(&job.ideal, &job.t, &k)?),
            );
            Ok((Value::Object(m), true))
        }
        Command::Twovar { input, k } => {
            let job = load(&input, err)?;
            check_len(&job, "k", &k)?;
            let mut m = header("twovar", &job);
            m.insert("k".into(), json!(k));
            m.insert(
                "report".into(),
                json!(two_var_report(&job.ideal, &job.t, &k)?),
            );
            Ok((Value::Object(m), true))
        }
        Command::Linearity { input, k, c } => {
            let job = load(&input, err)?;
            let v = with_field!(job.field, |f| linearity_cmd(&job, &k, c, f))?;
            Ok((v, true))
        }
        Command::Verify {
            exhaustive,
            random,
            seed,
            field,
        } => {
            let spec: SweepSpec = exhaustive.parse()?;
            let field = field
                .as_deref()
                .map(FieldSpec::parse)
                .transpose()?
                .unwrap_or_else(FieldSpec::gf2);
            let cases = match random {
                Some(count) => random_cases(spec, count, seed),
                None => exhaustive_cases(spec),
            };
            let summary = with_field!(field, |f| run_sweep(&cases, f))?;
            let ok = summary.failed == 0;
            Ok((json!(summary), ok))
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// writes JSON to `out` and diagnostics to `err`. Returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                EXIT_PARSE
            } else {
                let _ = write!(out, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    match execute(cli.command, err) {
        Ok((value, ok)) => {
            let text = serde_json::to_string_pretty(&value).expect("reports serialize");
            let _ = writeln!(out, "{text}");
            if ok {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
