//! Line-oriented hand-history scripts and their replay.
//!
//! A script is a header followed by one action per line. `#` starts a
//! comment; blank lines are ignored. Header directives, each at most once
//! and before the first action:
//!
//! ```text
//! variant no-limit-texas-holdem
//! stakes 2000 4000
//! antes 500 500 500
//! blinds 1000 2000
//! bring-in 0
//! stacks 1125600 2000000 553500
//! seed 7                     # or: deck AcKd...
//! automation all             # or: none, or a comma-separated flag list
//! ```
//!
//! `variant` and `stacks` are required. Without `stakes`, the small bet is
//! the largest blind and the big bet twice that; with no blinds the catalog
//! default applies. A Kuhn poker script with no forced bets at all antes
//! one chip per player. Without `seed` or `deck` the seed is 0. The
//! automation profile defaults to `all`.
//!
//! Actions, with `pN` naming seat N:
//!
//! ```text
//! post-ante [pN]            collect            post-blind [pN]
//! burn [card]               deal-hole [cards] [pN]
//! deal-board [cards]        stand-pat          discard <cards>
//! fold                      check-call         post-bring-in
//! complete-bet-raise-to [amount]
//! show                      muck               show-or-muck
//! kill [pN]                 push               pull [pN]
//! ```
//!
//! [`HandHistoryScript::format`] writes the canonical form, which parses
//! back to an equal script and formats to identical bytes.

use std::fmt::Write as _;

use thiserror::Error;

use crate::cards::{format_cards, parse_cards, Card};
use crate::engine::{Automation, AutomationSet, DeckSource, EngineError, GameState, Operation, StateConfig};
use crate::variants::{
    builtin_variant_with_stakes, default_stakes, Chips, VariantError, DEFAULT_BIG_BET, DEFAULT_SMALL_BET, KUHN_ANTE,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScriptHeader {
    pub variant: String,
    pub stakes: Option<(Chips, Chips)>,
    pub antes: Vec<Chips>,
    pub blinds: Vec<Chips>,
    pub bring_in: Chips,
    pub stacks: Vec<Chips>,
    pub deck: DeckSource,
    pub automations: AutomationSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HandHistoryScript {
    pub header: ScriptHeader,
    pub actions: Vec<Operation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScriptError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `{0}` directive")]
    Missing(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error(transparent)]
    Script(#[from] ScriptError),
    #[error(transparent)]
    Variant(#[from] VariantError),
    #[error("cannot start the hand: {0}")]
    Setup(EngineError),
    #[error("line {line}: `{action}` rejected: {source}")]
    Action { line: usize, action: String, source: EngineError },
}

fn syntax(line: usize, message: impl Into<String>) -> ScriptError {
    ScriptError::Syntax { line, message: message.into() }
}

fn parse_amounts(line: usize, args: &[&str]) -> Result<Vec<Chips>, ScriptError> {
    args.iter().map(|a| a.parse().map_err(|_| syntax(line, format!("`{a}` is not a chip amount")))).collect()
}

fn parse_card_list(line: usize, text: &str) -> Result<Vec<Card>, ScriptError> {
    parse_cards(text).map_err(|e| syntax(line, e.to_string()))
}

fn parse_seat(token: &str) -> Option<usize> {
    token.strip_prefix('p').and_then(|n| n.parse().ok())
}

/// Optional `pN` seat as the only argument.
fn seat_arg(line: usize, args: &[&str]) -> Result<Option<usize>, ScriptError> {
    match args {
        [] => Ok(None),
        [t] => parse_seat(t).map(Some).ok_or_else(|| syntax(line, format!("`{t}` is not a seat"))),
        _ => Err(syntax(line, "too many arguments")),
    }
}

fn no_args(line: usize, args: &[&str], op: Operation) -> Result<Operation, ScriptError> {
    if args.is_empty() {
        Ok(op)
    } else {
        Err(syntax(line, "unexpected arguments"))
    }
}

fn parse_action(line: usize, word: &str, args: &[&str]) -> Result<Operation, ScriptError> {
    Ok(match word {
        "post-ante" => Operation::PostAnte(seat_arg(line, args)?),
        "collect" => no_args(line, args, Operation::CollectBets)?,
        "post-blind" => Operation::PostBlindOrStraddle(seat_arg(line, args)?),
        "burn" => match args {
            [] => Operation::BurnCard(None),
            [c] => match parse_card_list(line, c)?.as_slice() {
                [card] => Operation::BurnCard(Some(*card)),
                _ => return Err(syntax(line, "burn takes one card")),
            },
            _ => return Err(syntax(line, "too many arguments")),
        },
        "deal-hole" => {
            let (mut cards, mut player) = (None, None);
            for a in args {
                match parse_seat(a) {
                    Some(p) if player.is_none() => player = Some(p),
                    None if cards.is_none() && player.is_none() => cards = Some(parse_card_list(line, a)?),
                    _ => return Err(syntax(line, format!("unexpected `{a}`"))),
                }
            }
            Operation::DealHole { cards, player }
        }
        "deal-board" => match args {
            [] => Operation::DealBoard(None),
            [c] => Operation::DealBoard(Some(parse_card_list(line, c)?)),
            _ => return Err(syntax(line, "too many arguments")),
        },
        "stand-pat" => no_args(line, args, Operation::StandPatOrDiscard(Vec::new()))?,
        "discard" => match args {
            [c] => Operation::StandPatOrDiscard(parse_card_list(line, c)?),
            _ => return Err(syntax(line, "discard takes one card string")),
        },
        "fold" => no_args(line, args, Operation::Fold)?,
        "check-call" => no_args(line, args, Operation::CheckOrCall)?,
        "post-bring-in" => no_args(line, args, Operation::PostBringIn)?,
        "complete-bet-raise-to" => match args {
            [] => Operation::CompleteBetOrRaiseTo(None),
            [a] => Operation::CompleteBetOrRaiseTo(Some(parse_amounts(line, &[a])?[0])),
            _ => return Err(syntax(line, "too many arguments")),
        },
        "show" => no_args(line, args, Operation::ShowOrMuckHoleCards(Some(true)))?,
        "muck" => no_args(line, args, Operation::ShowOrMuckHoleCards(Some(false)))?,
        "show-or-muck" => no_args(line, args, Operation::ShowOrMuckHoleCards(None))?,
        "kill" => Operation::KillHand(seat_arg(line, args)?),
        "push" => no_args(line, args, Operation::PushChips)?,
        "pull" => Operation::PullChips(seat_arg(line, args)?),
        other => return Err(syntax(line, format!("unknown action `{other}`"))),
    })
}

/// Canonical text of one action.
pub fn format_action(op: &Operation) -> String {
    let seat = |p: &Option<usize>| p.map(|p| format!(" p{p}")).unwrap_or_default();
    match op {
        Operation::PostAnte(p) => format!("post-ante{}", seat(p)),
        Operation::CollectBets => "collect".into(),
        Operation::PostBlindOrStraddle(p) => format!("post-blind{}", seat(p)),
        Operation::BurnCard(c) => c.map_or("burn".into(), |c| format!("burn {c}")),
        Operation::DealHole { cards, player } => {
            let cards = cards.as_ref().map(|c| format!(" {}", format_cards(c))).unwrap_or_default();
            format!("deal-hole{cards}{}", seat(player))
        }
        Operation::DealBoard(cards) => {
            cards.as_ref().map_or("deal-board".into(), |c| format!("deal-board {}", format_cards(c)))
        }
        Operation::StandPatOrDiscard(cards) if cards.is_empty() => "stand-pat".into(),
        Operation::StandPatOrDiscard(cards) => format!("discard {}", format_cards(cards)),
        Operation::Fold => "fold".into(),
        Operation::CheckOrCall => "check-call".into(),
        Operation::PostBringIn => "post-bring-in".into(),
        Operation::CompleteBetOrRaiseTo(a) => {
            a.map_or("complete-bet-raise-to".into(), |a| format!("complete-bet-raise-to {a}"))
        }
        Operation::ShowOrMuckHoleCards(Some(true)) => "show".into(),
        Operation::ShowOrMuckHoleCards(Some(false)) => "muck".into(),
        Operation::ShowOrMuckHoleCards(None) => "show-or-muck".into(),
        Operation::KillHand(p) => format!("kill{}", seat(p)),
        Operation::PushChips => "push".into(),
        Operation::PullChips(p) => format!("pull{}", seat(p)),
    }
}

fn join(values: &[Chips]) -> String {
    values.iter().map(Chips::to_string).collect::<Vec<_>>().join(" ")
}

impl HandHistoryScript {
    pub fn parse(text: &str) -> Result<HandHistoryScript, ScriptError> {
        Self::parse_with_lines(text).map(|(s, _)| s)
    }

    /// Also returns the 1-based line number of every action.
    pub fn parse_with_lines(text: &str) -> Result<(HandHistoryScript, Vec<usize>), ScriptError> {
        let mut variant = None;
        let mut stakes = None;
        let mut antes = None;
        let mut blinds = None;
        let mut bring_in = None;
        let mut stacks = None;
        let mut deck = None;
        let mut automations = None;
        let mut actions = Vec::new();
        let mut lines = Vec::new();

        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            let mut words = content.split_whitespace();
            let Some(word) = words.next() else { continue };
            let args: Vec<&str> = words.collect();
            let header = matches!(
                word,
                "variant" | "stakes" | "antes" | "blinds" | "bring-in" | "stacks" | "seed" | "deck" | "automation"
            );
            if !header {
                actions.push(parse_action(line, word, &args)?);
                lines.push(line);
                continue;
            }
            if !actions.is_empty() {
                return Err(syntax(line, format!("`{word}` must come before the first action")));
            }
            let set_once = |slot: bool| if slot { Err(syntax(line, format!("`{word}` given twice"))) } else { Ok(()) };
            match word {
                "variant" => {
                    set_once(variant.is_some())?;
                    match args.as_slice() {
                        [name] => variant = Some(name.to_string()),
                        _ => return Err(syntax(line, "variant takes one name")),
                    }
                }
                "stakes" => {
                    set_once(stakes.is_some())?;
                    match parse_amounts(line, &args)?.as_slice() {
                        [s, b] => stakes = Some((*s, *b)),
                        _ => return Err(syntax(line, "stakes takes a small and a big bet")),
                    }
                }
                "antes" => {
                    set_once(antes.is_some())?;
                    antes = Some(parse_amounts(line, &args)?);
                }
                "blinds" => {
                    set_once(blinds.is_some())?;
                    blinds = Some(parse_amounts(line, &args)?);
                }
                "bring-in" => {
                    set_once(bring_in.is_some())?;
                    match parse_amounts(line, &args)?.as_slice() {
                        [b] => bring_in = Some(*b),
                        _ => return Err(syntax(line, "bring-in takes one amount")),
                    }
                }
                "stacks" => {
                    set_once(stacks.is_some())?;
                    stacks = Some(parse_amounts(line, &args)?);
                }
                "seed" | "deck" => {
                    set_once(deck.is_some())?;
                    deck = Some(match (word, args.as_slice()) {
                        ("seed", [s]) => DeckSource::Seeded(
                            s.parse().map_err(|_| syntax(line, format!("`{s}` is not a seed")))?,
                        ),
                        ("deck", [c]) => DeckSource::Preset(parse_card_list(line, c)?),
                        _ => return Err(syntax(line, format!("{word} takes one argument"))),
                    });
                }
                _ => {
                    set_once(automations.is_some())?;
                    automations = Some(match args.as_slice() {
                        ["all"] => AutomationSet::all(),
                        ["none"] => AutomationSet::none(),
                        [list] => list
                            .split(',')
                            .map(|n| {
                                Automation::from_name(n)
                                    .ok_or_else(|| syntax(line, format!("unknown automation `{n}`")))
                            })
                            .collect::<Result<AutomationSet, _>>()?,
                        _ => return Err(syntax(line, "automation takes all, none or a comma-separated list")),
                    });
                }
            }
        }

        let header = ScriptHeader {
            variant: variant.ok_or(ScriptError::Missing("variant"))?,
            stakes,
            antes: antes.unwrap_or_default(),
            blinds: blinds.unwrap_or_default(),
            bring_in: bring_in.unwrap_or(0),
            stacks: stacks.ok_or(ScriptError::Missing("stacks"))?,
            deck: deck.unwrap_or(DeckSource::Seeded(0)),
            automations: automations.unwrap_or_else(AutomationSet::all),
        };
        Ok((HandHistoryScript { header, actions }, lines))
    }

    /// Canonical text; parsing it yields an equal script.
    pub fn format(&self) -> String {
        let h = &self.header;
        let mut out = String::new();
        let _ = writeln!(out, "variant {}", h.variant);
        if let Some((s, b)) = h.stakes {
            let _ = writeln!(out, "stakes {s} {b}");
        }
        if !h.antes.is_empty() {
            let _ = writeln!(out, "antes {}", join(&h.antes));
        }
        if !h.blinds.is_empty() {
            let _ = writeln!(out, "blinds {}", join(&h.blinds));
        }
        if h.bring_in > 0 {
            let _ = writeln!(out, "bring-in {}", h.bring_in);
        }
        let _ = writeln!(out, "stacks {}", join(&h.stacks));
        match &h.deck {
            DeckSource::Seeded(seed) => {
                let _ = writeln!(out, "seed {seed}");
            }
            DeckSource::Preset(cards) => {
                let _ = writeln!(out, "deck {}", format_cards(cards));
            }
        }
        if h.automations != AutomationSet::all() {
            let names: Vec<&str> = h.automations.iter().map(Automation::name).collect();
            let list = if names.is_empty() { "none".to_string() } else { names.join(",") };
            let _ = writeln!(out, "automation {list}");
        }
        for op in &self.actions {
            out.push_str(&format_action(op));
            out.push('\n');
        }
        out
    }

    /// Builds the initial state the header describes.
    pub fn start(&self) -> Result<GameState, ReplayError> {
        let h = &self.header;
        let (small, big) = h.stakes.unwrap_or_else(|| match h.blinds.iter().max() {
            Some(&b) if b > 0 => (b, 2 * b),
            _ => default_stakes(&h.variant).unwrap_or((DEFAULT_SMALL_BET, DEFAULT_BIG_BET)),
        });
        let variant = builtin_variant_with_stakes(&h.variant, small, big)?;
        let unforced = h.antes.iter().chain(&h.blinds).all(|&c| c == 0) && h.bring_in == 0;
        let antes = if unforced && variant.name == "kuhn-poker" {
            vec![KUHN_ANTE; h.stacks.len()]
        } else {
            h.antes.clone()
        };
        let config = StateConfig {
            automations: h.automations,
            antes,
            blinds_or_straddles: h.blinds.clone(),
            bring_in: h.bring_in,
            player_count: h.stacks.len(),
            starting_stacks: h.stacks.clone(),
            deck: h.deck.clone(),
        };
        GameState::new(variant, config).map_err(ReplayError::Setup)
    }

    /// Script whose actions are the manual operations of `state`'s log,
    /// with every argument resolved.
    pub fn from_log(header: ScriptHeader, state: &GameState) -> HandHistoryScript {
        let actions = state.log().iter().filter(|r| !r.automatic).map(|r| r.operation.clone()).collect();
        HandHistoryScript { header, actions }
    }
}

/// Runs every action of a script. `lines` gives the line numbers used in
/// errors; without it actions are numbered from 1.
pub fn replay(script: &HandHistoryScript, lines: Option<&[usize]>) -> Result<GameState, ReplayError> {
    let mut state = script.start()?;
    for (i, op) in script.actions.iter().enumerate() {
        if let Err(source) = state.apply(op) {
            let line = lines.and_then(|l| l.get(i).copied()).unwrap_or(i + 1);
            return Err(ReplayError::Action { line, action: format_action(op), source });
        }
    }
    Ok(state)
}

/// Parses and replays script text.
pub fn replay_text(text: &str) -> Result<GameState, ReplayError> {
    let (script, lines) = HandHistoryScript::parse_with_lines(text)?;
    replay(&script, Some(&lines))
}

/// The televised million-dollar pot: three-handed no-limit hold'em with
/// explicit hole and board cards.
pub const MILLION_DOLLAR_POT: &str = "\
# Three-handed no-limit hold'em, ante 500, blinds 1000/2000.
variant no-limit-texas-holdem
stakes 2000 4000
antes 500 500 500
blinds 1000 2000
stacks 1125600 2000000 553500
seed 0
automation ante-posting,bet-collection,blind-or-straddle-posting,card-burning,hole-cards-showing-or-mucking,hand-killing,chips-pushing,chips-pulling
deal-hole Ac2d # seat 0
deal-hole 5h7s # seat 1
deal-hole 7h6h # seat 2
complete-bet-raise-to 7000
complete-bet-raise-to 23000
fold
check-call
deal-board Jc3d5c
complete-bet-raise-to 35000
check-call
deal-board 4h
complete-bet-raise-to 90000
complete-bet-raise-to 232600
complete-bet-raise-to 1067100
check-call
deal-board Jh
";
