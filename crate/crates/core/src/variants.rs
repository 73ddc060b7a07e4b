//! Variant definitions: deck, hand types, streets and betting structure,
//! plus the built-in catalog.

use std::fmt;

use thiserror::Error;

use crate::cards::DeckKind;
use crate::eval::{HandType, LookupKind, Selection};

/// Chip amounts.
pub type Chips = u64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BettingStructure {
    NoLimit,
    PotLimit,
    FixedLimit,
}

impl BettingStructure {
    pub fn name(self) -> &'static str {
        match self {
            BettingStructure::NoLimit => "no-limit",
            BettingStructure::PotLimit => "pot-limit",
            BettingStructure::FixedLimit => "fixed-limit",
        }
    }
}

/// How the first player to act on a street is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OpenerRule {
    /// First seat after the last blind or straddle.
    PositionAfterBlinds,
    /// Lowest upcard posts the bring-in (high games).
    BringInLowUpcard,
    /// Highest upcard posts the bring-in (lowball games).
    BringInHighUpcard,
    /// Best exposed cards under the variant's first hand type.
    BestExposedHand,
    /// First active seat after the button (seat 0 onward).
    FirstActiveAfterButton,
}

impl OpenerRule {
    pub fn is_bring_in(self) -> bool {
        matches!(self, OpenerRule::BringInLowUpcard | OpenerRule::BringInHighUpcard)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Street {
    pub burn: bool,
    /// Face-down hole cards dealt to each player, dealt before the upcards.
    pub hole_down: usize,
    pub hole_up: usize,
    pub board: usize,
    pub draw: bool,
    pub opener: OpenerRule,
    /// Minimum bet, and the fixed bet size under fixed-limit.
    pub min_bet: Chips,
    /// Cap on aggressive actions, completions included; `None` is unbounded.
    pub max_raises: Option<u32>,
}

impl Street {
    pub fn hole_count(&self) -> usize {
        self.hole_down + self.hole_up
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VariantDefinition {
    pub name: String,
    pub deck: DeckKind,
    /// The first is the high (or only) hand; a second one splits the pot.
    pub hand_types: Vec<HandType>,
    pub streets: Vec<Street>,
    pub betting: BettingStructure,
    pub max_players: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("empty streets")]
    EmptyStreets,
    #[error("expected one or two hand types, got {0}")]
    HandTypeCount(usize),
    #[error("second hand type {0} is not a low hand")]
    SplitWithoutLow(HandType),
    #[error("hand type {hand_type} does not fit the {deck:?} deck")]
    DeckMismatch { hand_type: HandType, deck: DeckKind },
    #[error("hand type {0} cannot be formed from the dealt cards")]
    UnsatisfiableSelection(HandType),
    #[error("deck exhaustion possible: {players} players need {needed} cards, deck has {available}")]
    DeckExhaustion { players: usize, needed: usize, available: usize },
    #[error("maximum player count {0} is below 2")]
    TooFewPlayers(usize),
    #[error("street {0} has a zero minimum bet")]
    ZeroMinBet(usize),
    #[error("fixed-limit street {0} has no raise cap")]
    UncappedFixedLimit(usize),
    #[error("street {0} both draws and deals")]
    DrawWithDeal(usize),
    #[error("street {0} uses a bring-in opener but is not the first street")]
    LateBringIn(usize),
    #[error("street {0} draws before any hole cards are dealt")]
    DrawWithoutHoleCards(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VariantError {
    #[error("unknown variant {0:?}")]
    Unknown(String),
    #[error("invalid variant definition: {}", .0.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid(Vec<Violation>),
}

impl VariantDefinition {
    /// Builds a definition whose `max_players` is the largest count the card
    /// budget allows.
    pub fn new(
        name: impl Into<String>,
        deck: DeckKind,
        hand_types: Vec<HandType>,
        streets: Vec<Street>,
        betting: BettingStructure,
    ) -> VariantDefinition {
        let mut def = VariantDefinition {
            name: name.into(),
            deck,
            hand_types,
            streets,
            betting,
            max_players: 0,
        };
        def.max_players = (2..=deck.size()).take_while(|&n| def.cards_needed(n) <= deck.size()).last().unwrap_or(0);
        def
    }

    pub fn with_max_players(mut self, n: usize) -> VariantDefinition {
        self.max_players = n;
        self
    }

    /// Worst-case cards taken out of the deck for `players` players. Draws
    /// are excluded because the engine reshuffles the muck when a draw
    /// would run the deck dry.
    pub fn cards_needed(&self, players: usize) -> usize {
        let hole: usize = self.streets.iter().map(Street::hole_count).sum();
        let board: usize = self.streets.iter().map(|s| s.board).sum();
        let burns = self.streets.iter().filter(|s| s.burn).count();
        players * hole + board + burns
    }

    pub fn total_hole_cards(&self) -> usize {
        self.streets.iter().map(Street::hole_count).sum()
    }

    pub fn total_board_cards(&self) -> usize {
        self.streets.iter().map(|s| s.board).sum()
    }

    pub fn is_split(&self) -> bool {
        self.hand_types.len() == 2
    }

    pub fn uses_bring_in(&self) -> bool {
        self.streets.first().is_some_and(|s| s.opener.is_bring_in())
    }

    pub fn has_draws(&self) -> bool {
        self.streets.iter().any(|s| s.draw)
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        validate_definition(self)
    }
}

impl fmt::Display for VariantDefinition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name)
    }
}

fn lookup_fits_deck(lookup: LookupKind, deck: DeckKind) -> bool {
    match lookup {
        LookupKind::ShortDeck => deck == DeckKind::ShortDeck,
        LookupKind::Kuhn => deck == DeckKind::Kuhn,
        _ => deck == DeckKind::Standard,
    }
}

/// Checks every structural rule and reports all violations.
pub fn validate_definition(def: &VariantDefinition) -> Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    if def.streets.is_empty() {
        out.push(Violation::EmptyStreets);
    }
    if !(1..=2).contains(&def.hand_types.len()) {
        out.push(Violation::HandTypeCount(def.hand_types.len()));
    }
    if let Some(&low) = def.hand_types.get(1) {
        if !matches!(
            low,
            HandType::EightOrBetterLow
                | HandType::OmahaEightOrBetterLow
                | HandType::RegularLow
                | HandType::OmahaRegularLow
        ) {
            out.push(Violation::SplitWithoutLow(low));
        }
    }
    let hole = def.total_hole_cards();
    let board = def.total_board_cards();
    for &hand_type in &def.hand_types {
        let spec = hand_type.spec();
        if !lookup_fits_deck(spec.lookup, def.deck) {
            out.push(Violation::DeckMismatch { hand_type, deck: def.deck });
        }
        let ok = match spec.selection {
            Selection::Any => hole + board >= spec.arity,
            Selection::HoleOnly => hole >= spec.arity,
            Selection::Exact { hole: h, board: b } => hole >= h && board >= b,
        };
        if !ok {
            out.push(Violation::UnsatisfiableSelection(hand_type));
        }
    }
    if def.max_players < 2 {
        out.push(Violation::TooFewPlayers(def.max_players));
    }
    let needed = def.cards_needed(def.max_players);
    if needed > def.deck.size() {
        out.push(Violation::DeckExhaustion {
            players: def.max_players,
            needed,
            available: def.deck.size(),
        });
    }
    let mut dealt_hole = 0;
    for (i, street) in def.streets.iter().enumerate() {
        if street.min_bet == 0 {
            out.push(Violation::ZeroMinBet(i));
        }
        if def.betting == BettingStructure::FixedLimit && street.max_raises.is_none() {
            out.push(Violation::UncappedFixedLimit(i));
        }
        if street.draw && (street.hole_count() > 0 || street.board > 0) {
            out.push(Violation::DrawWithDeal(i));
        }
        if street.draw && dealt_hole == 0 {
            out.push(Violation::DrawWithoutHoleCards(i));
        }
        if i > 0 && street.opener.is_bring_in() {
            out.push(Violation::LateBringIn(i));
        }
        dealt_hole += street.hole_count();
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

/// Default stakes for [`builtin_variant`]: small bet 2, big bet 4.
pub const DEFAULT_SMALL_BET: Chips = 2;
pub const DEFAULT_BIG_BET: Chips = 4;

/// Kuhn poker's conventional one-chip ante and one-chip bet.
pub const KUHN_ANTE: Chips = 1;
pub const KUHN_BET: Chips = 1;

/// Stakes [`builtin_variant`] uses for `name`; `None` for unknown names.
pub fn default_stakes(name: &str) -> Option<(Chips, Chips)> {
    match canonical_name(name)? {
        "kuhn-poker" => Some((KUHN_BET, KUHN_BET)),
        _ => Some((DEFAULT_SMALL_BET, DEFAULT_BIG_BET)),
    }
}

/// Canonical names of the built-in catalog.
pub const BUILTIN_NAMES: [&str; 27] = [
    "no-limit-texas-holdem",
    "pot-limit-omaha",
    "pot-limit-omaha-hl8",
    "pot-limit-omaha-hlr",
    "pot-limit-5-card-omaha",
    "pot-limit-5-card-omaha-hl8",
    "pot-limit-5-card-omaha-hlr",
    "pot-limit-6-card-omaha",
    "pot-limit-6-card-omaha-hl8",
    "pot-limit-6-card-omaha-hlr",
    "no-limit-short-deck-holdem",
    "pot-limit-courchevel",
    "pot-limit-courchevel-hl8",
    "pot-limit-courchevel-hlr",
    "fixed-limit-7-card-stud",
    "fixed-limit-7-card-stud-hl8",
    "fixed-limit-7-card-stud-hlr",
    "fixed-limit-razz",
    "no-limit-5-card-draw",
    "fixed-limit-2-7-triple-draw",
    "no-limit-2-7-single-draw",
    "fixed-limit-badugi",
    "fixed-limit-greek-holdem",
    "kuhn-poker",
    "fixed-limit-5-card-stud",
    "fixed-limit-5-card-stud-hl8",
    "fixed-limit-5-card-stud-hlr",
];

fn normalize(name: &str) -> String {
    name.trim()
        .to_ascii_lowercase()
        .replace(['_', ' '], "-")
        .replace("hold'em", "holdem")
        .replace("deuce-to-seven", "2-7")
        .replace("2-to-7", "2-7")
}

fn strip_structure(name: &str) -> &str {
    ["no-limit-", "pot-limit-", "fixed-limit-"]
        .iter()
        .find_map(|p| name.strip_prefix(p))
        .unwrap_or(name)
}

/// Resolves a name to its canonical catalog entry. The betting-structure
/// prefix may be omitted and spaces stand in for dashes, so
/// `"no-limit texas holdem"`, `"texas holdem"` and `"razz"` all resolve.
pub fn canonical_name(name: &str) -> Option<&'static str> {
    let norm = normalize(name);
    BUILTIN_NAMES
        .iter()
        .copied()
        .find(|&n| n == norm || strip_structure(n) == norm)
}

pub fn builtin_variant(name: &str) -> Result<VariantDefinition, VariantError> {
    let (small, big) = default_stakes(name).ok_or_else(|| VariantError::Unknown(name.to_string()))?;
    builtin_variant_with_stakes(name, small, big)
}

/// Catalog entry with explicit stakes. No-limit and pot-limit streets use
/// `small_bet` as the minimum bet throughout; fixed-limit streets use the
/// small bet early and the big bet late, as is conventional per variant.
pub fn builtin_variant_with_stakes(
    name: &str,
    small_bet: Chips,
    big_bet: Chips,
) -> Result<VariantDefinition, VariantError> {
    let canonical = canonical_name(name).ok_or_else(|| VariantError::Unknown(name.to_string()))?;
    let def = catalog(canonical, small_bet, big_bet);
    validate_definition(&def).map_err(VariantError::Invalid)?;
    Ok(def)
}

fn street(
    burn: bool,
    hole: (usize, usize),
    board: usize,
    draw: bool,
    opener: OpenerRule,
    min_bet: Chips,
    max_raises: Option<u32>,
) -> Street {
    Street { burn, hole_down: hole.0, hole_up: hole.1, board, draw, opener, min_bet, max_raises }
}

fn catalog(name: &'static str, small: Chips, big: Chips) -> VariantDefinition {
    use BettingStructure::*;
    use OpenerRule::*;

    let base = strip_structure(name);
    let betting = if name.starts_with("no-limit") {
        NoLimit
    } else if name.starts_with("pot-limit") {
        PotLimit
    } else {
        FixedLimit
    };
    let cap = (betting == FixedLimit).then_some(4);
    // late streets play for the big bet only under fixed-limit
    let late = if betting == FixedLimit { big } else { small };
    let (family, split) = match base.rsplit_once('-') {
        Some((f, "hl8")) => (f, Some(false)),
        Some((f, "hlr")) => (f, Some(true)),
        _ => (base, None),
    };

    let board_streets = |hole: usize, first_board: usize| {
        let mut s = vec![street(false, (hole, 0), first_board, false, PositionAfterBlinds, small, cap)];
        s.push(street(true, (0, 0), 3 - first_board, false, FirstActiveAfterButton, small, cap));
        s.push(street(true, (0, 0), 1, false, FirstActiveAfterButton, late, cap));
        s.push(street(true, (0, 0), 1, false, FirstActiveAfterButton, late, cap));
        s
    };
    let draw_streets = |hole: usize, draws: usize| {
        let mut s = vec![street(false, (hole, 0), 0, false, PositionAfterBlinds, small, cap)];
        for i in 0..draws {
            let bet = if i == 0 { small } else { late };
            s.push(street(true, (0, 0), 0, true, FirstActiveAfterButton, bet, cap));
        }
        s
    };
    let stud_streets = |cards: usize, opener: OpenerRule| {
        let first = if cards == 7 { (2, 1) } else { (1, 1) };
        let mut s = vec![street(false, first, 0, false, opener, small, cap)];
        let rest = cards - first.0 - first.1;
        for i in 0..rest {
            let last_down = cards == 7 && i == rest - 1;
            let hole = if last_down { (1, 0) } else { (0, 1) };
            let bet = if i == 0 { small } else { late };
            s.push(street(true, hole, 0, false, BestExposedHand, bet, cap));
        }
        s
    };
    let omaha_types = |split: Option<bool>| match split {
        None => vec![HandType::OmahaHoldem],
        Some(false) => vec![HandType::OmahaHoldem, HandType::OmahaEightOrBetterLow],
        Some(true) => vec![HandType::OmahaHoldem, HandType::OmahaRegularLow],
    };
    let stud_types = |split: Option<bool>| match split {
        None => vec![HandType::StandardHigh],
        Some(false) => vec![HandType::StandardHigh, HandType::EightOrBetterLow],
        Some(true) => vec![HandType::StandardHigh, HandType::RegularLow],
    };

    let (deck, hand_types, streets) = match family {
        "texas-holdem" => (DeckKind::Standard, vec![HandType::StandardHigh], board_streets(2, 0)),
        "omaha" => (DeckKind::Standard, omaha_types(split), board_streets(4, 0)),
        "5-card-omaha" => (DeckKind::Standard, omaha_types(split), board_streets(5, 0)),
        "6-card-omaha" => (DeckKind::Standard, omaha_types(split), board_streets(6, 0)),
        "short-deck-holdem" => (DeckKind::ShortDeck, vec![HandType::ShortDeckHoldem], board_streets(2, 0)),
        // first board card comes out before the first betting round
        "courchevel" => (DeckKind::Standard, omaha_types(split), board_streets(5, 1)),
        "greek-holdem" => (DeckKind::Standard, vec![HandType::GreekHoldem], board_streets(2, 0)),
        "7-card-stud" => (DeckKind::Standard, stud_types(split), stud_streets(7, BringInLowUpcard)),
        "5-card-stud" => (DeckKind::Standard, stud_types(split), stud_streets(5, BringInLowUpcard)),
        "razz" => (DeckKind::Standard, vec![HandType::RegularLow], stud_streets(7, BringInHighUpcard)),
        "5-card-draw" => (DeckKind::Standard, vec![HandType::StandardHigh], draw_streets(5, 1)),
        "2-7-triple-draw" => (DeckKind::Standard, vec![HandType::StandardLow], draw_streets(5, 3)),
        "2-7-single-draw" => (DeckKind::Standard, vec![HandType::StandardLow], draw_streets(5, 1)),
        "badugi" => (DeckKind::Standard, vec![HandType::Badugi], draw_streets(4, 3)),
        "kuhn-poker" => {
            let streets = vec![street(false, (1, 0), 0, false, FirstActiveAfterButton, small, Some(1))];
            let def = VariantDefinition::new(name, DeckKind::Kuhn, vec![HandType::KuhnPoker], streets, FixedLimit);
            return def.with_max_players(2);
        }
        other => unreachable!("catalog is missing {other}"),
    };
    VariantDefinition::new(name, deck, hand_types, streets, betting)
}
