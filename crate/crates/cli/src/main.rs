//! `poker`: hand evaluation and hand-history replay, plus table dumps and
//! an exhaustive-evaluation benchmark.
//!
//! Exit status: 0 on success, 1 on usage or input errors, 2 when a replayed
//! action breaks the rules.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use md5::{Digest, Md5};
use poker_core::eval::{sweep, LookupKind};
use poker_core::history::{replay, HandHistoryScript, ReplayError};
use poker_core::{dump_ordered_hands, parse_cards, DeckSource, EvalError, Hand, HandType};

#[derive(Parser)]
#[command(name = "poker", version, about = "Multi-variant poker engine and hand evaluator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the best hand of a hand type from hole and board cards.
    Eval {
        /// Hand type, e.g. standard, omaha, razz, badugi, 2-7.
        hand_type: String,
        /// Hole cards such as AsKd. Without a board, exactly one hand's
        /// worth of cards is evaluated as that hand.
        hole: String,
        /// Board cards.
        board: Option<String>,
    },
    /// Replay a hand-history script and print pots and final stacks.
    Replay {
        script: PathBuf,
        /// Shuffle seed replacing the script's deck.
        #[arg(long)]
        seed: Option<u64>,
        /// Print the executed actions as a canonical script afterwards.
        #[arg(long)]
        emit_log: bool,
    },
    /// Write the ordered hands of a lookup table and print its MD5 digest.
    Dump {
        /// standard, eight-or-better, short-deck, regular, badugi or kuhn.
        kind: String,
        #[arg(long)]
        output: PathBuf,
    },
    /// Evaluate every hand of the chosen size and report throughput.
    Bench {
        #[arg(default_value = "standard")]
        kind: String,
        #[arg(long, value_enum, default_value_t = Mode::All5Card)]
        mode: Mode,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    #[value(name = "all-5-card")]
    All5Card,
    #[value(name = "all-7-card")]
    All7Card,
}

const USAGE: u8 = 1;
const VIOLATION: u8 = 2;

fn fail(code: u8, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn lookup_kind(name: &str) -> Result<LookupKind, String> {
    LookupKind::from_name(name).ok_or_else(|| {
        let names: Vec<&str> = LookupKind::ALL.iter().map(|k| k.name()).collect();
        format!("unknown lookup kind `{name}` (expected one of {})", names.join(", "))
    })
}

fn eval(hand_type: &str, hole: &str, board: Option<&str>) -> ExitCode {
    let parsed = (|| {
        let t = HandType::from_name(hand_type).map_err(|e| e.to_string())?;
        let hole = parse_cards(hole).map_err(|e| e.to_string())?;
        // a bare hand of exactly the evaluated size is taken as the hand itself
        if board.is_none() && hole.len() == t.spec().arity {
            return match Hand::from_cards(t, &hole) {
                Ok(hand) => Ok(Some(hand)),
                Err(EvalError::NotQualified) => Ok(None),
                Err(e) => Err(e.to_string()),
            };
        }
        let board = parse_cards(board.unwrap_or("")).map_err(|e| e.to_string())?;
        Hand::from_game(t, &hole, &board).map_err(|e| e.to_string())
    })();
    match parsed {
        Ok(Some(hand)) => {
            println!("{}", hand.identity());
            println!("cards: {}", poker_core::format_cards(hand.cards()));
            println!("strength: {}", hand.strength());
            ExitCode::SUCCESS
        }
        Ok(None) => {
            println!("no qualifying hand");
            ExitCode::SUCCESS
        }
        Err(e) => fail(USAGE, e),
    }
}

fn run_replay(path: &PathBuf, seed: Option<u64>, emit_log: bool) -> ExitCode {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return fail(USAGE, format!("{}: {e}", path.display())),
    };
    let (mut script, lines) = match HandHistoryScript::parse_with_lines(&text) {
        Ok(parsed) => parsed,
        Err(e) => return fail(USAGE, e),
    };
    if let Some(seed) = seed {
        script.header.deck = DeckSource::Seeded(seed);
    }
    let state = match replay(&script, Some(&lines)) {
        Ok(state) => state,
        Err(e @ ReplayError::Script(_)) | Err(e @ ReplayError::Variant(_)) => return fail(USAGE, e),
        Err(e) => return fail(VIOLATION, e),
    };
    for total in state.collected_totals() {
        println!("pot {total}");
    }
    if !state.is_terminal() {
        println!("unfinished: waiting in the {} phase", state.phase());
    }
    let stacks: Vec<String> = state.stacks().iter().map(u64::to_string).collect();
    println!("final stacks: {}", stacks.join(" "));
    if emit_log {
        print!("{}", HandHistoryScript::from_log(script.header.clone(), &state).format());
    }
    ExitCode::SUCCESS
}

fn dump(kind: &str, output: &PathBuf) -> ExitCode {
    let kind = match lookup_kind(kind) {
        Ok(k) => k,
        Err(e) => return fail(USAGE, e),
    };
    let text = dump_ordered_hands(kind.lookup());
    if let Err(e) = fs::write(output, &text) {
        return fail(USAGE, format!("{}: {e}", output.display()));
    }
    let digest = Md5::digest(text.as_bytes());
    let hex: String = digest.iter().map(|b| format!("{b:02x}")).collect();
    println!("{hex}  {}", output.display());
    println!("lines: {}", text.lines().count());
    ExitCode::SUCCESS
}

fn bench(kind: &str, mode: Mode) -> ExitCode {
    let kind = match lookup_kind(kind) {
        Ok(k) => k,
        Err(e) => return fail(USAGE, e),
    };
    let (size, mode_name) = match mode {
        Mode::All5Card => (5, "all-5-card"),
        Mode::All7Card => (7, "all-7-card"),
    };
    let report = match sweep(kind, size) {
        Ok(r) => r,
        Err(e) => return fail(USAGE, format!("{mode_name} is not possible for {}: {e}", kind.name())),
    };
    let classes = kind.lookup().class_count();
    println!("kind: {}", kind.name());
    println!("mode: {mode_name}");
    println!("hands: {}", report.hands);
    println!("qualified hands: {}", report.qualified_hands);
    println!("elapsed: {:.3} s", report.elapsed.as_secs_f64());
    println!("rate: {:.1} hands/s", report.hands_per_second());
    println!("distinct classes: {}", report.selection_classes);
    println!("distinct best-hand classes: {}", report.best_classes);
    let ok = report.selection_classes == classes;
    println!(
        "self-check: {} ({} of {classes} classes evaluated)",
        if ok { "ok" } else { "FAILED" },
        report.selection_classes
    );
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match &cli.command {
        Command::Eval { hand_type, hole, board } => eval(hand_type, hole, board.as_deref()),
        Command::Replay { script, seed, emit_log } => run_replay(script, *seed, *emit_log),
        Command::Dump { kind, output } => dump(kind, output),
        Command::Bench { kind, mode } => bench(kind, *mode),
    }
}
