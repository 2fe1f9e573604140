//! Command-line front end.
//!
//! Every subcommand prints plain text by default and a single JSON object
//! with `--json`. Exit codes: 0 yes/success, 1 no, 2 indeterminate (budget
//! exhausted), 64 usage error, 65 parse or data error.

use std::io::{BufRead, Write};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use bandbraid::band::{
    band_to_artin, closure_invariants, is_unknot_presentation, parse_band_word, permutation,
    BandWord,
};
use bandbraid::mutual_braiding::{
    census_with, decide, verify, CensusOptions, SweepCertificate, SweepPredicate, Verdict,
    DEFAULT_DECIDE_BUDGET,
};
use bandbraid::rewriting::neighbors;
use bandbraid::word_graph::{
    conjugacy_orbit_members, equality_class_members, monoid_equal, orbit_contains, GraphError,
    Orbit, DEFAULT_GRAPH_BUDGET,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Yes,
    No,
    Indeterminate,
    Usage,
    DataError,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        match self {
            ExitStatus::Yes => 0,
            ExitStatus::No => 1,
            ExitStatus::Indeterminate => 2,
            ExitStatus::Usage => 64,
            ExitStatus::DataError => 65,
        }
    }

    // Batch outcome: a definite "no" wins over "unknown", which wins over "yes".
    fn combine(self, other: ExitStatus) -> ExitStatus {
        use ExitStatus::*;
        match (self, other) {
            (No, _) | (_, No) => No,
            (Indeterminate, _) | (_, Indeterminate) => Indeterminate,
            _ => Yes,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "bandbraid",
    version,
    about = "Positive band-generator braid words"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Strand count of every word read.
    #[arg(long = "n", global = true)]
    n: Option<u32>,
    /// Maximum number of states a search may visit.
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Sweep predicate for decide and census: any, adjacent-first or never.
    #[arg(long, global = true)]
    predicate: Option<String>,
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Expand band words into classical generators.
    Convert { words: Vec<String> },
    /// Print the permutation of a word (images of strands 1..n).
    Perm { words: Vec<String> },
    /// Component count, Euler characteristic and exponent sum of the closure.
    Invariants { words: Vec<String> },
    /// Every relation move applicable to a word.
    Neighbors { word: String },
    /// Equality in the band monoid; with one word, dump its equality class.
    /// Batch mode reads `u = v` lines from standard input.
    Equal { words: Vec<String> },
    /// Conjugacy orbit under relations and cycling; with two words, test
    /// membership.
    Conjugate { words: Vec<String> },
    /// Search for an admissible sweep and print its certificate.
    Decide { words: Vec<String> },
    /// Replay a certificate file (path, or standard input when absent or `-`).
    Replay { file: Option<String> },
    /// Census of minimal unknot presentations on n strands.
    Census {
        /// Decide orbits one at a time instead of on the thread pool.
        #[arg(long)]
        sequential: bool,
    },
}

struct Io<'a> {
    stdin: &'a mut dyn BufRead,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

enum Failure {
    Usage(String),
    Data(String),
}

type Outcome = Result<ExitStatus, Failure>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn BufRead,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> ExitStatus
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    ExitStatus::Yes
                }
                _ => {
                    let _ = write!(stderr, "{e}");
                    ExitStatus::Usage
                }
            };
        }
    };
    let mut io = Io {
        stdin,
        out: stdout,
        err: stderr,
    };
    match dispatch(&cli, &mut io) {
        Ok(status) => status,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(io.err, "usage error: {msg}");
            ExitStatus::Usage
        }
        Err(Failure::Data(msg)) => {
            let _ = writeln!(io.err, "error: {msg}");
            ExitStatus::DataError
        }
    }
}

fn dispatch(cli: &Cli, io: &mut Io<'_>) -> Outcome {
    let g = &cli.global;
    match &cli.command {
        Command::Convert { words } => per_word(g, io, words, convert),
        Command::Perm { words } => per_word(g, io, words, perm),
        Command::Invariants { words } => per_word(g, io, words, invariants),
        Command::Neighbors { word } => per_word(g, io, std::slice::from_ref(word), neighbor_list),
        Command::Equal { words } => equal(g, io, words),
        Command::Conjugate { words } => conjugate(g, io, words),
        Command::Decide { words } => decide_cmd(g, io, words),
        Command::Replay { file } => replay_cmd(g, io, file.as_deref()),
        Command::Census { sequential } => census_cmd(g, io, *sequential),
    }
}

fn io_fail(e: std::io::Error) -> Failure {
    Failure::Data(format!("i/o: {e}"))
}

fn strands(g: &Global) -> Result<u32, Failure> {
    g.n.ok_or_else(|| Failure::Usage("--n <strands> is required".into()))
}

fn parse(text: &str, n: u32) -> Result<BandWord, Failure> {
    parse_band_word(text, n).map_err(|e| Failure::Data(format!("`{}`: {e}", text.trim())))
}

fn predicate(g: &Global) -> Result<SweepPredicate, Failure> {
    let presets = SweepPredicate::PRESETS.join(", ");
    let name = g
        .predicate
        .as_deref()
        .ok_or_else(|| Failure::Usage(format!("--predicate is required ({presets})")))?;
    SweepPredicate::preset(name).ok_or_else(|| {
        Failure::Usage(format!(
            "unknown predicate `{name}` (expected one of {presets})"
        ))
    })
}

fn graph_budget(g: &Global) -> Result<usize, Failure> {
    match g.budget {
        Some(0) => Err(Failure::Usage("--budget must be at least 1".into())),
        Some(b) => Ok(b),
        None => Ok(DEFAULT_GRAPH_BUDGET),
    }
}

fn decide_budget(g: &Global) -> Result<usize, Failure> {
    match g.budget {
        Some(0) => Err(Failure::Usage("--budget must be at least 1".into())),
        Some(b) => Ok(b),
        None => Ok(DEFAULT_DECIDE_BUDGET),
    }
}

/// Positional words, or non-blank stdin lines when none are given.
fn input_lines(words: &[String], io: &mut Io<'_>) -> Result<Vec<String>, Failure> {
    if !words.is_empty() {
        return Ok(words.to_vec());
    }
    let mut lines = Vec::new();
    for line in io.stdin.lines() {
        let line = line.map_err(io_fail)?;
        if !line.trim().is_empty() {
            lines.push(line);
        }
    }
    Ok(lines)
}

fn emit_json(io: &mut Io<'_>, value: &Value) -> Result<(), Failure> {
    writeln!(io.out, "{value}").map_err(io_fail)
}

/// A per-word report: text lines and a JSON object.
struct Report {
    text: String,
    json: Map<String, Value>,
}

fn per_word(g: &Global, io: &mut Io<'_>, words: &[String], f: fn(&BandWord) -> Report) -> Outcome {
    let n = strands(g)?;
    let lines = input_lines(words, io)?;
    let parsed = lines
        .iter()
        .map(|l| parse(l, n))
        .collect::<Result<Vec<_>, _>>()?;
    let reports: Vec<Report> = parsed.iter().map(f).collect();
    if g.json {
        let value = match reports.as_slice() {
            [single] => Value::Object(single.json.clone()),
            many => {
                json!({ "results": many.iter().map(|r| Value::Object(r.json.clone())).collect::<Vec<_>>() })
            }
        };
        emit_json(io, &value)?;
    } else {
        for r in &reports {
            write!(io.out, "{}", r.text).map_err(io_fail)?;
        }
    }
    Ok(ExitStatus::Yes)
}

fn object(value: Value) -> Map<String, Value> {
    match value {
        Value::Object(m) => m,
        _ => unreachable!(),
    }
}

fn convert(w: &BandWord) -> Report {
    let artin = band_to_artin(w);
    Report {
        text: format!("{artin}\n"),
        json: object(json!({
            "n": w.strands(),
            "word": w.to_string(),
            "artin": artin.to_string(),
        })),
    }
}

fn perm(w: &BandWord) -> Report {
    let p = permutation(w);
    Report {
        text: format!("{p}\n"),
        json: object(json!({
            "n": w.strands(),
            "word": w.to_string(),
            "permutation": p.images(),
        })),
    }
}

fn invariants(w: &BandWord) -> Report {
    let inv = closure_invariants(w);
    let unknot = is_unknot_presentation(w);
    Report {
        text: format!(
            "components={} euler={} exponent_sum={} unknot={}\n",
            inv.components, inv.euler, inv.exponent_sum, unknot
        ),
        json: object(json!({
            "n": w.strands(),
            "word": w.to_string(),
            "components": inv.components,
            "euler": inv.euler,
            "exponent_sum": inv.exponent_sum,
            "unknot": unknot,
        })),
    }
}

fn neighbor_list(w: &BandWord) -> Report {
    let list = neighbors(w);
    let mut text = String::new();
    for (m, next) in &list {
        text.push_str(&format!("{m}\t{next}\n"));
    }
    Report {
        text,
        json: object(json!({
            "n": w.strands(),
            "word": w.to_string(),
            "neighbors": list
                .iter()
                .map(|(m, next)| json!({ "move": m.to_string(), "word": next.to_string() }))
                .collect::<Vec<_>>(),
        })),
    }
}

fn orbit_json(o: &Orbit) -> Value {
    let words: Vec<String> = o.words().map(|w| w.to_string()).collect();
    json!({
        "representative": words[0],
        "orbit_size": o.size(),
        "exact": o.is_exact(),
        "members": words,
    })
}

fn write_orbit(g: &Global, io: &mut Io<'_>, o: &Orbit, w: &BandWord) -> Outcome {
    if g.json {
        let mut obj = object(orbit_json(o));
        obj.insert("n".into(), json!(w.strands()));
        obj.insert("k".into(), json!(w.len()));
        emit_json(io, &Value::Object(obj))?;
    } else {
        write!(io.out, "{}", o.dump()).map_err(io_fail)?;
    }
    Ok(if o.is_exact() {
        ExitStatus::Yes
    } else {
        ExitStatus::Indeterminate
    })
}

type PairTest = fn(&BandWord, &BandWord, usize) -> Result<bool, GraphError>;

fn pair_decisions(
    g: &Global,
    io: &mut Io<'_>,
    pairs: &[(String, String)],
    test: PairTest,
    field: &str,
) -> Outcome {
    let n = strands(g)?;
    let budget = graph_budget(g)?;
    let mut status = ExitStatus::Yes;
    let mut results = Vec::new();
    let mut text = String::new();
    for (l, r) in pairs {
        let (u, v) = (parse(l, n)?, parse(r, n)?);
        let (answer, s) = match test(&u, &v, budget) {
            Ok(true) => ("true", ExitStatus::Yes),
            Ok(false) => ("false", ExitStatus::No),
            Err(GraphError::BudgetExhausted { .. }) => ("indeterminate", ExitStatus::Indeterminate),
            Err(e) => return Err(Failure::Data(e.to_string())),
        };
        status = status.combine(s);
        if pairs.len() > 1 {
            text.push_str(&format!("{u} = {v}\t{answer}\n"));
        } else {
            text.push_str(&format!("{answer}\n"));
        }
        let mut obj = object(json!({ "left": u.to_string(), "right": v.to_string() }));
        obj.insert(
            field.into(),
            match answer {
                "true" => json!(true),
                "false" => json!(false),
                _ => Value::Null,
            },
        );
        obj.insert("verdict".into(), json!(answer));
        results.push(Value::Object(obj));
    }
    if g.json {
        let value = match results.len() {
            1 => results.pop().unwrap(),
            _ => json!({ "results": results }),
        };
        emit_json(io, &value)?;
    } else {
        write!(io.out, "{text}").map_err(io_fail)?;
    }
    Ok(status)
}

fn equal(g: &Global, io: &mut Io<'_>, words: &[String]) -> Outcome {
    match words {
        [single] => {
            let w = parse(single, strands(g)?)?;
            let o = equality_class_members(&w, graph_budget(g)?)
                .map_err(|e| Failure::Data(e.to_string()))?;
            write_orbit(g, io, &o, &w)
        }
        [u, v] => pair_decisions(g, io, &[(u.clone(), v.clone())], monoid_equal, "equal"),
        [] => {
            let mut pairs = Vec::new();
            for line in input_lines(&[], io)? {
                let (l, r) = line
                    .split_once('=')
                    .ok_or_else(|| Failure::Data(format!("expected `u = v`, got `{line}`")))?;
                pairs.push((l.to_string(), r.to_string()));
            }
            if pairs.is_empty() {
                return Err(Failure::Usage("no word pairs given".into()));
            }
            pair_decisions(g, io, &pairs, monoid_equal, "equal")
        }
        _ => Err(Failure::Usage("equal takes one or two words".into())),
    }
}

fn conjugate(g: &Global, io: &mut Io<'_>, words: &[String]) -> Outcome {
    match words {
        [single] => {
            let w = parse(single, strands(g)?)?;
            let o = conjugacy_orbit_members(&w, graph_budget(g)?)
                .map_err(|e| Failure::Data(e.to_string()))?;
            write_orbit(g, io, &o, &w)
        }
        [u, v] => pair_decisions(
            g,
            io,
            &[(u.clone(), v.clone())],
            orbit_contains,
            "conjugate",
        ),
        _ => Err(Failure::Usage("conjugate takes one or two words".into())),
    }
}

fn verdict_status(v: &Verdict) -> ExitStatus {
    match v {
        Verdict::MutuallyBraided(_) => ExitStatus::Yes,
        Verdict::NotMutuallyBraided { .. } => ExitStatus::No,
        Verdict::Indeterminate { .. } => ExitStatus::Indeterminate,
    }
}

fn verdict_json(w: &BandWord, p: &SweepPredicate, v: &Verdict) -> Value {
    let inv = closure_invariants(w);
    let mut obj = object(json!({
        "word": w.to_string(),
        "n": w.strands(),
        "predicate": p.name(),
        "verdict": v.kind().as_str(),
        "components": inv.components,
        "euler": inv.euler,
    }));
    match v {
        Verdict::MutuallyBraided(c) => {
            obj.insert(
                "certificate".into(),
                json!(c.moves.iter().map(|m| m.to_string()).collect::<Vec<_>>()),
            );
        }
        Verdict::NotMutuallyBraided { states_explored } => {
            obj.insert("states_explored".into(), json!(states_explored));
        }
        Verdict::Indeterminate { budget } => {
            obj.insert("budget".into(), json!(budget));
        }
    }
    Value::Object(obj)
}

fn verdict_text(v: &Verdict) -> String {
    match v {
        Verdict::MutuallyBraided(c) => c.to_text(),
        Verdict::NotMutuallyBraided { states_explored } => {
            format!("not-mutually-braided states={states_explored}\n")
        }
        Verdict::Indeterminate { budget } => format!("indeterminate budget={budget}\n"),
    }
}

fn decide_cmd(g: &Global, io: &mut Io<'_>, words: &[String]) -> Outcome {
    let n = strands(g)?;
    let p = predicate(g)?;
    let budget = decide_budget(g)?;
    let lines = input_lines(words, io)?;
    if lines.is_empty() {
        return Err(Failure::Usage("no word given".into()));
    }
    let mut status = ExitStatus::Yes;
    let mut results = Vec::new();
    let mut text = String::new();
    for line in &lines {
        let w = parse(line, n)?;
        let v = decide(&w, &p, budget).map_err(|e| Failure::Data(e.to_string()))?;
        status = status.combine(verdict_status(&v));
        if lines.len() == 1 {
            text.push_str(&verdict_text(&v));
        } else {
            text.push_str(&format!("{w}\t{}\n", v.kind().as_str()));
        }
        results.push(verdict_json(&w, &p, &v));
    }
    if g.json {
        let value = match results.len() {
            1 => results.pop().unwrap(),
            _ => json!({ "results": results }),
        };
        emit_json(io, &value)?;
    } else {
        write!(io.out, "{text}").map_err(io_fail)?;
    }
    Ok(status)
}

fn replay_cmd(g: &Global, io: &mut Io<'_>, file: Option<&str>) -> Outcome {
    let text = match file {
        None | Some("-") => {
            let mut buf = String::new();
            io.stdin.read_to_string(&mut buf).map_err(io_fail)?;
            buf
        }
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| Failure::Data(format!("{path}: {e}")))?
        }
    };
    let parsed = SweepCertificate::parse(&text).map_err(|e| Failure::Data(e.to_string()))?;
    let cert = parsed.certificate;
    let p = SweepPredicate::preset(&cert.predicate);
    if p.is_none() {
        let _ = writeln!(
            io.err,
            "warning: predicate `{}` is not a shipped preset; cyclings not re-checked",
            cert.predicate
        );
    }
    let result = verify(&cert, p.as_ref());
    if g.json {
        let mut obj = object(json!({
            "n": cert.initial.strands(),
            "initial": cert.initial.to_string(),
            "predicate": cert.predicate,
            "certificate": cert.moves.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
            "valid": result.is_ok(),
            "predicate_checked": p.is_some(),
        }));
        if let Err(e) = &result {
            obj.insert("error".into(), json!(e.to_string()));
        }
        emit_json(io, &Value::Object(obj))?;
    } else if result.is_ok() {
        write!(io.out, "{}", cert.to_validated_text()).map_err(io_fail)?;
    } else {
        write!(io.out, "{}", cert.to_text()).map_err(io_fail)?;
    }
    match result {
        Ok(()) => Ok(ExitStatus::Yes),
        Err(e) => {
            let _ = writeln!(io.err, "invalid certificate: {e}");
            Ok(ExitStatus::No)
        }
    }
}

fn census_cmd(g: &Global, io: &mut Io<'_>, sequential: bool) -> Outcome {
    let n = strands(g)?;
    if n < 2 {
        return Err(Failure::Usage("census needs --n of at least 2".into()));
    }
    let p = predicate(g)?;
    let options = CensusOptions {
        decide_budget: decide_budget(g)?,
        orbit_budget: g.budget.unwrap_or(DEFAULT_GRAPH_BUDGET),
        parallel: !sequential,
    };
    let census = census_with(n, &p, options).map_err(|e| Failure::Data(e.to_string()))?;
    if g.json {
        let records: Vec<Value> = census
            .records
            .iter()
            .map(|r| {
                json!({
                    "representative": r.representative.to_string(),
                    "orbit_size": r.orbit_size,
                    "orbit_exact": r.orbit_exact,
                    "verdict": r.verdict.kind().as_str(),
                    "components": r.invariants.components,
                    "euler": r.invariants.euler,
                })
            })
            .collect();
        emit_json(
            io,
            &json!({
                "n": census.strands,
                "k": census.strands - 1,
                "words": census.enumerated,
                "orbits": census.records.len(),
                "predicate": census.predicate,
                "records": records,
            }),
        )?;
    } else {
        write!(io.out, "{}", census.to_text()).map_err(io_fail)?;
    }
    Ok(ExitStatus::Yes)
}
