//! Argument parsing and subcommand dispatch.
//!
//! Exit codes: 0 success, 1 domain or verification failure, 2 parse or
//! validation error, 3 budget exceeded.

use std::ffi::OsString;
use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use pfhanoi_core::bijection::BijectionRecord;
use pfhanoi_core::enumeration::{self, EnumerationBudget};
use pfhanoi_core::search::{self, SearchBudget};
use pfhanoi_core::{parking, HanoiState, PreferenceVector};

use crate::format::{
    self, BijectionRecordJson, CountReportJson, OutcomeJson, ParseError, StrategyJson,
};
use crate::render;
use crate::verify;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Lines,
    Table,
}

#[derive(Debug, Parser)]
#[command(
    name = "pfhanoi",
    version,
    about = "Parking functions, ideal Tower of Hanoi states, and the bijection between them"
)]
pub struct Cli {
    /// Output format; each subcommand has its own default.
    #[arg(long, global = true, env = "PFHANOI_FORMAT", value_enum)]
    pub format: Option<Format>,

    /// Largest state graph a search may allocate.
    #[arg(long, global = true, env = "PFHANOI_BUDGET_STATES", default_value_t = SearchBudget::DEFAULT_MAX_STATES)]
    pub budget_states: usize,

    /// Largest n whose n^n preference vectors may be scanned.
    #[arg(long, global = true, env = "PFHANOI_BUDGET_N", default_value_t = 7)]
    pub budget_n: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct SizeArg {
    #[arg(long = "n", env = "PFHANOI_N")]
    pub n: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    /// All parking functions of length n.
    Pf,
    /// Parking functions of length n with displacement one.
    Pf1,
    /// Ideal states of the (n+1) x (n+1) game.
    Ideal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    Th2pf,
    Pf2th,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Park cars with the given comma-separated preferences.
    Park { prefs: String },
    /// Stream one vector per line in lexicographic order.
    Enumerate {
        kind: Kind,
        #[command(flatten)]
        size: SizeArg,
    },
    /// Map an ideal state to its parking function or back.
    Map {
        direction: Direction,
        vector: String,
    },
    /// Run every count, bijection and shortest-win check for n.
    Verify {
        #[command(flatten)]
        size: SizeArg,
    },
    /// Print one shortest winning strategy.
    Solve {
        #[command(flatten)]
        size: SizeArg,
        /// Emit the opening moves of all shortest wins as a Graphviz digraph.
        #[arg(long, env = "PFHANOI_DOT")]
        dot: bool,
    },
    /// Compare closed-form counts with brute force.
    Count {
        #[command(flatten)]
        size: SizeArg,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] pfhanoi_core::Error),
    #[error("{0}")]
    Io(#[from] io::Error),
    /// Message already written by the command.
    #[error("{0}")]
    Reported(&'static str),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => EXIT_USAGE,
            CliError::Core(e) if e.is_validation() => EXIT_USAGE,
            CliError::Core(e) if e.is_budget() => EXIT_BUDGET,
            CliError::Core(_) | CliError::Io(_) | CliError::Reported(_) => EXIT_FAILURE,
        }
    }
}

struct Context<'a> {
    format: Option<Format>,
    enumeration: EnumerationBudget,
    search: SearchBudget,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Context<'_> {
    fn format_or(&self, default: Format) -> Format {
        self.format.unwrap_or(default)
    }

    fn json(&mut self, value: &impl serde::Serialize) -> Result<(), CliError> {
        serde_json::to_writer_pretty(&mut *self.out, value).map_err(io::Error::from)?;
        writeln!(self.out)?;
        Ok(())
    }

    /// Single-line JSON for small records.
    fn json_line(&mut self, value: &impl serde::Serialize) -> Result<(), CliError> {
        serde_json::to_writer(&mut *self.out, value).map_err(io::Error::from)?;
        writeln!(self.out)?;
        Ok(())
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = target.write_all(rendered.as_bytes());
            return code;
        }
    };
    let mut ctx = Context {
        format: cli.format,
        enumeration: EnumerationBudget::with_max_n(cli.budget_n),
        search: SearchBudget {
            max_states: cli.budget_states,
        },
        out,
        err,
    };
    let result = dispatch(&mut ctx, cli.command).and_then(|()| Ok(ctx.out.flush()?));
    match result {
        Ok(()) => EXIT_OK,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(e) => {
            if !matches!(e, CliError::Reported(_)) {
                let _ = writeln!(ctx.err, "error: {e}");
            }
            e.exit_code()
        }
    }
}

fn dispatch(ctx: &mut Context<'_>, command: Command) -> Result<(), CliError> {
    match command {
        Command::Park { prefs } => cmd_park(ctx, &prefs),
        Command::Enumerate { kind, size } => cmd_enumerate(ctx, kind, size.n),
        Command::Map { direction, vector } => cmd_map(ctx, direction, &vector),
        Command::Verify { size } => cmd_verify(ctx, size.n),
        Command::Solve { size, dot } => cmd_solve(ctx, size.n, dot),
        Command::Count { size } => cmd_count(ctx, size.n),
    }
}

fn parse_preferences(text: &str) -> Result<PreferenceVector, CliError> {
    Ok(PreferenceVector::new(format::parse_vector(text)?)?)
}

fn parse_state(text: &str) -> Result<HanoiState, CliError> {
    Ok(HanoiState::new(format::parse_vector(text)?)?)
}

fn cmd_park(ctx: &mut Context<'_>, prefs: &str) -> Result<(), CliError> {
    let alpha = parse_preferences(prefs)?;
    let outcome = parking::park(&alpha);
    match ctx.format_or(Format::Json) {
        Format::Json => ctx.json_line(&OutcomeJson::from(&outcome))?,
        Format::Lines => {
            if let Some(p) = outcome.parked() {
                writeln!(ctx.out, "{}", format::csv(p.assignment()))?;
            }
        }
        Format::Table => writeln!(ctx.out, "{}", render::parking_table(&alpha, &outcome))?,
    }
    match outcome.failed_car() {
        None => Ok(()),
        Some(car) => {
            writeln!(ctx.err, "not a parking function: car {car} cannot park")?;
            Err(CliError::Reported("not a parking function"))
        }
    }
}

/// Writes vectors one per line (or as one JSON array, or as boards) and
/// reports the count on stderr.
fn emit_vectors<I, V>(ctx: &mut Context<'_>, items: I, board: bool) -> Result<(), CliError>
where
    I: IntoIterator<Item = V>,
    V: AsVector,
{
    let format = ctx.format_or(Format::Lines);
    let mut count = 0usize;
    if format == Format::Json {
        write!(ctx.out, "[")?;
    }
    for item in items {
        let v = item.as_vector();
        match format {
            Format::Lines => writeln!(ctx.out, "{}", format::csv(v))?,
            Format::Json => {
                let sep = if count == 0 { "\n" } else { ",\n" };
                write!(
                    ctx.out,
                    "{sep}{}",
                    serde_json::to_string(v).map_err(io::Error::from)?
                )?;
            }
            Format::Table => {
                if count > 0 {
                    writeln!(ctx.out)?;
                }
                writeln!(ctx.out, "{}", format::csv(v))?;
                if board {
                    let state = HanoiState::new(v.to_vec())?;
                    writeln!(ctx.out, "{}", render::board(&state))?;
                }
            }
        }
        count += 1;
    }
    if format == Format::Json {
        writeln!(ctx.out, "{}]", if count == 0 { "" } else { "\n" })?;
    }
    writeln!(ctx.err, "count: {count}")?;
    Ok(())
}

trait AsVector {
    fn as_vector(&self) -> &[u32];
}

impl AsVector for PreferenceVector {
    fn as_vector(&self) -> &[u32] {
        self.as_slice()
    }
}

impl AsVector for HanoiState {
    fn as_vector(&self) -> &[u32] {
        self.pegs()
    }
}

fn cmd_enumerate(ctx: &mut Context<'_>, kind: Kind, n: usize) -> Result<(), CliError> {
    let budget = ctx.enumeration;
    match kind {
        Kind::Pf => emit_vectors(ctx, enumeration::enumerate_pf(n, budget)?, false),
        Kind::Pf1 => emit_vectors(
            ctx,
            enumeration::enumerate_pf_displacement(n, 1, budget)?,
            false,
        ),
        Kind::Ideal => emit_vectors(ctx, enumeration::ideal_states(n, budget)?, true),
    }
}

fn cmd_map(ctx: &mut Context<'_>, direction: Direction, vector: &str) -> Result<(), CliError> {
    let record = match direction {
        Direction::Th2pf => BijectionRecord::from_ideal(parse_state(vector)?)?,
        Direction::Pf2th => BijectionRecord::from_pf(parse_preferences(vector)?)?,
    };
    let mapped = match direction {
        Direction::Th2pf => record.pf.as_slice(),
        Direction::Pf2th => record.ideal.pegs(),
    };
    match ctx.format_or(Format::Lines) {
        Format::Lines => writeln!(ctx.out, "{}", format::csv(mapped))?,
        Format::Json => ctx.json_line(&BijectionRecordJson::from(&record))?,
        Format::Table => writeln!(
            ctx.out,
            "ideal state {} (doubled peg {})\n{}\nparking function {}",
            record.ideal,
            record.j,
            render::board(&record.ideal),
            record.pf
        )?,
    }
    Ok(())
}

fn cmd_verify(ctx: &mut Context<'_>, n: usize) -> Result<(), CliError> {
    let report = verify::run(n, ctx.enumeration, ctx.search)?;
    match ctx.format_or(Format::Json) {
        Format::Json => ctx.json(&report.to_json())?,
        Format::Lines | Format::Table => {
            for c in &report.counts {
                writeln!(
                    ctx.out,
                    "count {}: closed form {}, brute force {}",
                    c.statistic,
                    c.closed_form,
                    c.brute_force
                        .as_ref()
                        .map_or("-".into(), ToString::to_string)
                )?;
            }
            let b = &report.bijection;
            writeln!(
                ctx.out,
                "bijection: {} ideal states, {} displacement-one parking functions, {}",
                b.ideal_count,
                b.pf_count,
                if b.passed() { "ok" } else { "FAILED" }
            )?;
            if let Some(h) = &report.hanoi {
                writeln!(
                    ctx.out,
                    "game: {}-move minimum, ideal states at move {}, {} shortest wins, {} through an ideal state",
                    h.min_win_moves,
                    h.ideal_at_level.map_or("-".into(), |l| l.to_string()),
                    h.shortest_wins,
                    h.wins_through_ideal
                )?;
            }
            for m in &report.mismatches {
                writeln!(
                    ctx.out,
                    "MISMATCH {}: expected {}, got {}",
                    m.check, m.expected, m.actual
                )?;
            }
            writeln!(ctx.out, "{}", if report.passed() { "PASS" } else { "FAIL" })?;
        }
    }
    if report.passed() {
        Ok(())
    } else {
        writeln!(ctx.err, "verification failed for n = {n}")?;
        Err(CliError::Reported("verification failed"))
    }
}

fn cmd_solve(ctx: &mut Context<'_>, n: usize, dot: bool) -> Result<(), CliError> {
    if dot {
        let edges = search::opening_graph(n, ctx.search)?;
        writeln!(ctx.out, "{}", render::opening_dot(n, &edges))?;
        return Ok(());
    }
    let strategy = search::solve(n, ctx.search)?;
    let format = ctx.format_or(Format::Lines);
    if format == Format::Json {
        return ctx.json(&StrategyJson::from(&strategy));
    }
    let ideal = strategy.ideal_moves();
    for (i, state) in strategy.states().iter().enumerate() {
        let note = if ideal.contains(&i) { " (ideal)" } else { "" };
        if i == 0 {
            writeln!(ctx.out, "start: {state}{note}")?;
        } else {
            let m = strategy.moves()[i - 1];
            writeln!(
                ctx.out,
                "move {i}: disk {} {}->{} => {state}{note}",
                m.disk, m.from, m.to
            )?;
        }
        if format == Format::Table {
            writeln!(ctx.out, "{}\n", render::board(state))?;
        }
    }
    Ok(())
}

fn cmd_count(ctx: &mut Context<'_>, n: usize) -> Result<(), CliError> {
    let reports = enumeration::brute_force_counts(n, ctx.enumeration);
    match ctx.format_or(Format::Json) {
        Format::Json => {
            let json: Vec<CountReportJson> = reports.iter().map(CountReportJson::from).collect();
            ctx.json(&json)?;
        }
        Format::Lines | Format::Table => {
            for r in &reports {
                let brute = r
                    .brute_force
                    .as_ref()
                    .map_or("-".into(), ToString::to_string);
                let verdict = match r.matches() {
                    Some(true) => "match",
                    Some(false) => "MISMATCH",
                    None => "over budget",
                };
                writeln!(
                    ctx.out,
                    "{}\t{}\t{}\t{}",
                    r.statistic, r.closed_form, brute, verdict
                )?;
            }
        }
    }
    if reports.iter().any(|r| r.matches() == Some(false)) {
        return Err(CliError::Reported("count mismatch"));
    }
    Ok(())
}
