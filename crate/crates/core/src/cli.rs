//! Command-line front end.
//!
//! ```text
//! clubcomb <command> [--club NAME] [--no-verify] [--fuel N] [--json] [--constants] "<input>"
//! ```
//!
//! Exit codes: 0 success, 1 usage or syntax error, 2 club violation,
//! 3 fuel exhausted, 4 internal invariant failure.

use std::fmt::Write as _;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::comb::{self, ReductionStatus, DEFAULT_FUEL};
use crate::compiler::{self, CompileError, CompileOptions, CompileReport};
use crate::diagram;
use crate::finord::{self, Club, FinFun, FinordError, Generator};
use crate::poly;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CLUB: i32 = 2;
pub const EXIT_FUEL: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Usage function, skeleton, minimal club and diagram of a sequent
    Analyze,
    /// Compile a sequent to a combinator term
    Compile,
    /// Normalize a combinator term
    Eval,
    /// Factor a finite function into generators
    Factor,
    /// Draw a finite function
    Diagram,
}

impl Command {
    fn name(self) -> &'static str {
        match self {
            Command::Analyze => "analyze",
            Command::Compile => "compile",
            Command::Eval => "eval",
            Command::Factor => "factor",
            Command::Diagram => "diagram",
        }
    }
}

fn parse_club(s: &str) -> Result<Club, String> {
    Club::ALL
        .into_iter()
        .find(|c| c.name().to_ascii_lowercase() == s)
        .ok_or_else(|| {
            let names: Vec<String> = Club::ALL
                .iter()
                .map(|c| c.name().to_ascii_lowercase())
                .collect();
            format!("unknown club '{s}' (expected one of: {})", names.join(", "))
        })
}

#[derive(Debug, Parser)]
#[command(
    name = "clubcomb",
    version,
    about = "Classify polynomials by variable discipline and compile them to B/C/K/W/I combinators"
)]
pub struct Invocation {
    #[arg(value_enum)]
    pub command: Command,
    /// Sequent (`x, y |- x y`), combinator term or finite function (`3->2:[2,1,1]`)
    pub input: String,
    /// Club to compile or factor in (id, bij, minj, msrj, inj, srj, mfun, fun)
    #[arg(long, value_parser = parse_club)]
    pub club: Option<Club>,
    /// Skip checking the compiled term by reduction
    #[arg(long)]
    pub no_verify: bool,
    /// Reduction step budget
    #[arg(long, default_value_t = DEFAULT_FUEL as u64, value_parser = clap::value_parser!(u64).range(1..))]
    pub fuel: u64,
    /// Print a JSON record instead of text
    #[arg(long)]
    pub json: bool,
    /// Treat undeclared term identifiers as constants when compiling
    #[arg(long)]
    pub constants: bool,
}

/// What an invocation printed and how it exited.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug, Default, Serialize)]
struct JsonRecord {
    command: String,
    input: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    usage: Option<FinFun>,
    #[serde(skip_serializing_if = "Option::is_none")]
    skeleton: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimal_club: Option<Club>,
    #[serde(skip_serializing_if = "Option::is_none")]
    club_used: Option<Club>,
    #[serde(skip_serializing_if = "Option::is_none")]
    generators: Option<Vec<Generator>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    term: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    steps: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

struct Run {
    code: i32,
    text: String,
    error: Option<String>,
    record: JsonRecord,
}

impl Run {
    fn ok(text: String, record: JsonRecord) -> Run {
        Run {
            code: EXIT_OK,
            text,
            error: None,
            record,
        }
    }

    fn fail(code: i32, message: String, mut record: JsonRecord) -> Run {
        record.error = Some(message.clone());
        Run {
            code,
            text: String::new(),
            error: Some(message),
            record,
        }
    }
}

/// Runs one invocation; `args` includes the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let inv = match Invocation::try_parse_from(args) {
        Ok(inv) => inv,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    execute(&inv)
}

pub fn execute(inv: &Invocation) -> Outcome {
    let record = JsonRecord {
        command: inv.command.name().to_string(),
        input: inv.input.clone(),
        ..Default::default()
    };
    let run = match inv.command {
        Command::Analyze => analyze(inv, record),
        Command::Compile => compile(inv, record),
        Command::Eval => eval(inv, record),
        Command::Factor => factor(inv, record),
        Command::Diagram => draw(inv, record),
    };
    let stderr = run
        .error
        .as_ref()
        .map(|e| format!("error: {e}\n"))
        .unwrap_or_default();
    let stdout = if inv.json {
        let mut s = serde_json::to_string_pretty(&run.record).expect("record serializes");
        s.push('\n');
        s
    } else {
        run.text
    };
    Outcome {
        code: run.code,
        stdout,
        stderr,
    }
}

fn analyze(inv: &Invocation, mut record: JsonRecord) -> Run {
    let s = match poly::parse(&inv.input) {
        Ok(s) => s,
        Err(e) => return Run::fail(EXIT_USAGE, e.to_string(), record),
    };
    let d = poly::usage(&s);
    let club = finord::minimal_club(&d.usage);
    let mut text = String::new();
    writeln!(text, "sequent:  {s}").unwrap();
    writeln!(text, "usage:    {}", d.usage).unwrap();
    writeln!(text, "skeleton: {}", d.skeleton).unwrap();
    writeln!(text, "club:     {club}").unwrap();
    writeln!(text, "diagram:").unwrap();
    text.push_str(&diagram::render(&d.usage));

    record.usage = Some(d.usage);
    record.skeleton = Some(d.skeleton.to_string());
    record.minimal_club = Some(club);
    Run::ok(text, record)
}

fn fill_report(record: &mut JsonRecord, r: &CompileReport) {
    record.usage = Some(r.usage.clone());
    record.skeleton = Some(r.skeleton.to_string());
    record.minimal_club = Some(finord::minimal_club(&r.usage));
    record.club_used = Some(r.club_used);
    record.generators = Some(r.generator_chain.clone());
    record.term = Some(r.output.to_string());
}

fn chain_text(chain: &[Generator]) -> String {
    if chain.is_empty() {
        "(identity)".to_string()
    } else {
        chain
            .iter()
            .map(Generator::to_string)
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn compile(inv: &Invocation, mut record: JsonRecord) -> Run {
    let opts = CompileOptions {
        verify: !inv.no_verify,
        fuel: inv.fuel as usize,
    };
    let report = match compiler::compile_source(&inv.input, inv.club, opts, inv.constants) {
        Ok(r) => r,
        Err(e) => {
            let code = match &e {
                CompileError::ClubViolation {
                    requested,
                    minimal,
                    usage,
                } => {
                    record.usage = Some(usage.clone());
                    record.minimal_club = Some(*minimal);
                    record.club_used = Some(*requested);
                    EXIT_CLUB
                }
                CompileError::FuelExhausted { .. } => EXIT_FUEL,
                CompileError::IndexOutOfRange { .. } => EXIT_INTERNAL,
                CompileError::ArityZero | CompileError::Poly(_) => EXIT_USAGE,
            };
            return Run::fail(code, e.to_string(), record);
        }
    };

    fill_report(&mut record, &report);
    let mut text = String::new();
    writeln!(text, "sequent:    {}", report.input).unwrap();
    if !report.constants.is_empty() {
        writeln!(text, "constants:  {}", report.constants.join(" ")).unwrap();
    }
    writeln!(text, "usage:      {}", report.usage).unwrap();
    writeln!(text, "skeleton:   {}", report.skeleton).unwrap();
    writeln!(text, "club:       {}", report.club_used).unwrap();
    writeln!(text, "generators: {}", chain_text(&report.generator_chain)).unwrap();
    writeln!(text, "term:       {}", report.output).unwrap();

    if !opts.verify {
        writeln!(text, "verified:   skipped").unwrap();
        return Run::ok(text, record);
    }
    record.verified = Some(report.verified);
    record.steps = Some(report.steps);
    if report.verified {
        writeln!(text, "verified:   yes ({} steps)", report.steps).unwrap();
        Run::ok(text, record)
    } else {
        writeln!(text, "verified:   NO ({} steps)", report.steps).unwrap();
        let mut run = Run::fail(
            EXIT_INTERNAL,
            "compiled term does not reduce to the polynomial".to_string(),
            record,
        );
        run.text = text;
        run
    }
}

fn eval(inv: &Invocation, mut record: JsonRecord) -> Run {
    let term = match comb::parse(&inv.input) {
        Ok(t) => t,
        Err(e) => return Run::fail(EXIT_USAGE, e.to_string(), record),
    };
    let r = comb::normalize(&term, inv.fuel as usize);
    let text = format!("{}\nsteps: {}\n", r.term, r.steps);
    record.term = Some(r.term.to_string());
    record.steps = Some(r.steps);
    match r.status {
        ReductionStatus::Normal => Run::ok(text, record),
        ReductionStatus::FuelExhausted => {
            let mut run = Run::fail(
                EXIT_FUEL,
                format!("fuel exhausted after {} steps", r.steps),
                record,
            );
            run.text = text;
            run
        }
    }
}

fn parse_finfun(inv: &Invocation, record: JsonRecord) -> Result<(FinFun, JsonRecord), Box<Run>> {
    match inv.input.parse::<FinFun>() {
        Ok(f) => Ok((f, record)),
        Err(e) => Err(Box::new(Run::fail(EXIT_USAGE, e.to_string(), record))),
    }
}

fn factor(inv: &Invocation, record: JsonRecord) -> Run {
    let (f, mut record) = match parse_finfun(inv, record) {
        Ok(x) => x,
        Err(run) => return *run,
    };
    let minimal = finord::minimal_club(&f);
    let club = inv.club.unwrap_or(minimal);
    record.usage = Some(f.clone());
    record.minimal_club = Some(minimal);
    record.club_used = Some(club);
    let chain = match finord::factor(&f, club) {
        Ok(chain) => chain,
        Err(e @ FinordError::NotInClub { .. }) => return Run::fail(EXIT_CLUB, e.to_string(), record),
        Err(e) => return Run::fail(EXIT_INTERNAL, e.to_string(), record),
    };
    if finord::compose_chain(f.dom(), &chain).as_ref() != Ok(&f) {
        return Run::fail(
            EXIT_INTERNAL,
            format!("generators do not recompose to {f}"),
            record,
        );
    }
    let text = format!("{}\n", chain_text(&chain));
    record.generators = Some(chain);
    Run::ok(text, record)
}

fn draw(inv: &Invocation, record: JsonRecord) -> Run {
    let (f, mut record) = match parse_finfun(inv, record) {
        Ok(x) => x,
        Err(run) => return *run,
    };
    let text = diagram::render(&f);
    record.usage = Some(f);
    Run::ok(text, record)
}
