//! The phase-based game state machine.
//!
//! A hand moves through the forced-bet phases first. Every street then
//! runs its dealing and betting, and the settlement phases close the hand;
//! see [`Phase`] for the exact order. Phases with nothing to do are skipped.
//!
//! Every operation comes as a triplet. `verify_x` reports why the operation
//! is illegal and `can_x` turns that into a boolean. `x` performs it after
//! verifying, leaving the state untouched on failure. After each successful
//! operation the state runs every pending operation whose automation flag
//! is set, stopping when a manual decision is needed or the hand is over.

mod betting;
mod dealing;
mod forced;
mod pots;
mod showdown;
mod state;

use std::fmt;

use thiserror::Error;

use crate::cards::Card;
use crate::variants::{Chips, VariantError};

pub use pots::{layer_pots, Pot};
pub use state::GameState;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Phase {
    AntePosting,
    BetCollection,
    BlindOrStraddlePosting,
    Dealing,
    Betting,
    Showdown,
    HandKilling,
    ChipsPushing,
    ChipsPulling,
    Terminal,
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::AntePosting => "ante-posting",
            Phase::BetCollection => "bet-collection",
            Phase::BlindOrStraddlePosting => "blind-or-straddle-posting",
            Phase::Dealing => "dealing",
            Phase::Betting => "betting",
            Phase::Showdown => "showdown",
            Phase::HandKilling => "hand-killing",
            Phase::ChipsPushing => "chips-pushing",
            Phase::ChipsPulling => "chips-pulling",
            Phase::Terminal => "terminal",
        })
    }
}

/// Operations that may run without user input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Automation {
    AntePosting,
    BetCollection,
    BlindOrStraddlePosting,
    CardBurning,
    HoleDealing,
    BoardDealing,
    HoleCardsShowingOrMucking,
    HandKilling,
    ChipsPushing,
    ChipsPulling,
}

impl Automation {
    pub const ALL: [Automation; 10] = [
        Automation::AntePosting,
        Automation::BetCollection,
        Automation::BlindOrStraddlePosting,
        Automation::CardBurning,
        Automation::HoleDealing,
        Automation::BoardDealing,
        Automation::HoleCardsShowingOrMucking,
        Automation::HandKilling,
        Automation::ChipsPushing,
        Automation::ChipsPulling,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Automation::AntePosting => "ante-posting",
            Automation::BetCollection => "bet-collection",
            Automation::BlindOrStraddlePosting => "blind-or-straddle-posting",
            Automation::CardBurning => "card-burning",
            Automation::HoleDealing => "hole-dealing",
            Automation::BoardDealing => "board-dealing",
            Automation::HoleCardsShowingOrMucking => "hole-cards-showing-or-mucking",
            Automation::HandKilling => "hand-killing",
            Automation::ChipsPushing => "chips-pushing",
            Automation::ChipsPulling => "chips-pulling",
        }
    }

    pub fn from_name(name: &str) -> Option<Automation> {
        Automation::ALL.into_iter().find(|a| a.name() == name)
    }
}

/// Which automatable operations run on their own.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct AutomationSet(u16);

impl AutomationSet {
    pub fn none() -> AutomationSet {
        AutomationSet(0)
    }

    pub fn all() -> AutomationSet {
        Automation::ALL.into_iter().collect()
    }

    /// Everything except hole and board dealing, so dealt cards can be
    /// supplied explicitly.
    pub fn all_but_dealing() -> AutomationSet {
        Automation::ALL
            .into_iter()
            .filter(|a| !matches!(a, Automation::HoleDealing | Automation::BoardDealing))
            .collect()
    }

    pub fn contains(self, a: Automation) -> bool {
        self.0 & (1 << a as u16) != 0
    }

    pub fn with(self, a: Automation) -> AutomationSet {
        AutomationSet(self.0 | (1 << a as u16))
    }

    pub fn without(self, a: Automation) -> AutomationSet {
        AutomationSet(self.0 & !(1 << a as u16))
    }

    pub fn iter(self) -> impl Iterator<Item = Automation> {
        Automation::ALL.into_iter().filter(move |&a| self.contains(a))
    }
}

impl FromIterator<Automation> for AutomationSet {
    fn from_iter<I: IntoIterator<Item = Automation>>(iter: I) -> Self {
        iter.into_iter().fold(AutomationSet::none(), AutomationSet::with)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HoleCard {
    pub card: Card,
    pub face_up: bool,
}

/// Where the deck comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeckSource {
    /// The variant's deck shuffled with [`crate::cards::shuffle_deck`].
    Seeded(u64),
    /// An exact deck order, top card first; must be a permutation of the
    /// variant's deck.
    Preset(Vec<Card>),
}

/// Table configuration for [`GameState::new`]. Per-seat sequences may be
/// shorter than the player count; missing seats are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateConfig {
    pub automations: AutomationSet,
    pub antes: Vec<Chips>,
    pub blinds_or_straddles: Vec<Chips>,
    pub bring_in: Chips,
    pub starting_stacks: Vec<Chips>,
    pub player_count: usize,
    pub deck: DeckSource,
}

impl StateConfig {
    pub fn new(starting_stacks: Vec<Chips>) -> StateConfig {
        StateConfig {
            automations: AutomationSet::all(),
            antes: Vec::new(),
            blinds_or_straddles: Vec::new(),
            bring_in: 0,
            player_count: starting_stacks.len(),
            starting_stacks,
            deck: DeckSource::Seeded(0),
        }
    }

    pub fn automations(mut self, automations: AutomationSet) -> Self {
        self.automations = automations;
        self
    }

    pub fn uniform_antes(mut self, ante: Chips) -> Self {
        self.antes = vec![ante; self.player_count];
        self
    }

    pub fn antes(mut self, antes: Vec<Chips>) -> Self {
        self.antes = antes;
        self
    }

    pub fn blinds(mut self, blinds: Vec<Chips>) -> Self {
        self.blinds_or_straddles = blinds;
        self
    }

    pub fn bring_in(mut self, bring_in: Chips) -> Self {
        self.bring_in = bring_in;
        self
    }

    pub fn seed(mut self, seed: u64) -> Self {
        self.deck = DeckSource::Seeded(seed);
        self
    }

    pub fn preset_deck(mut self, cards: Vec<Card>) -> Self {
        self.deck = DeckSource::Preset(cards);
        self
    }
}

/// Any engine operation with its arguments. Optional arguments are chosen by
/// the engine when omitted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Operation {
    PostAnte(Option<usize>),
    CollectBets,
    PostBlindOrStraddle(Option<usize>),
    BurnCard(Option<Card>),
    DealHole { cards: Option<Vec<Card>>, player: Option<usize> },
    DealBoard(Option<Vec<Card>>),
    StandPatOrDiscard(Vec<Card>),
    Fold,
    CheckOrCall,
    PostBringIn,
    CompleteBetOrRaiseTo(Option<Chips>),
    ShowOrMuckHoleCards(Option<bool>),
    KillHand(Option<usize>),
    PushChips,
    PullChips(Option<usize>),
}

impl Operation {
    pub fn name(&self) -> &'static str {
        match self {
            Operation::PostAnte(_) => "post-ante",
            Operation::CollectBets => "collect-bets",
            Operation::PostBlindOrStraddle(_) => "post-blind-or-straddle",
            Operation::BurnCard(_) => "burn-card",
            Operation::DealHole { .. } => "deal-hole",
            Operation::DealBoard(_) => "deal-board",
            Operation::StandPatOrDiscard(_) => "stand-pat-or-discard",
            Operation::Fold => "fold",
            Operation::CheckOrCall => "check-or-call",
            Operation::PostBringIn => "post-bring-in",
            Operation::CompleteBetOrRaiseTo(_) => "complete-bet-or-raise-to",
            Operation::ShowOrMuckHoleCards(_) => "show-or-muck-hole-cards",
            Operation::KillHand(_) => "kill-hand",
            Operation::PushChips => "push-chips",
            Operation::PullChips(_) => "pull-chips",
        }
    }

    /// The automation flag that may run this operation, if any.
    pub fn automation(&self) -> Option<Automation> {
        Some(match self {
            Operation::PostAnte(_) => Automation::AntePosting,
            Operation::CollectBets => Automation::BetCollection,
            Operation::PostBlindOrStraddle(_) => Automation::BlindOrStraddlePosting,
            Operation::BurnCard(_) => Automation::CardBurning,
            Operation::DealHole { .. } => Automation::HoleDealing,
            Operation::DealBoard(_) => Automation::BoardDealing,
            Operation::ShowOrMuckHoleCards(_) => Automation::HoleCardsShowingOrMucking,
            Operation::KillHand(_) => Automation::HandKilling,
            Operation::PushChips => Automation::ChipsPushing,
            Operation::PullChips(_) => Automation::ChipsPulling,
            _ => return None,
        })
    }
}

/// An executed operation with every optional argument resolved.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Record {
    pub operation: Operation,
    pub automatic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("{operation} is not allowed in the {phase} phase")]
    WrongPhase { operation: &'static str, phase: Phase },
    #[error("player {0} does not exist")]
    NoSuchPlayer(usize),
    #[error("player {0} owes nothing")]
    NothingOwed(usize),
    #[error("no card burn is pending")]
    BurnNotPending,
    #[error("a card must be burned first")]
    BurnPending,
    #[error("players must stand pat or discard first")]
    DiscardsPending,
    #[error("hole cards must be dealt first")]
    HoleCardsPending,
    #[error("no player is due to stand pat or discard")]
    NoDiscardTurn,
    #[error("no hole cards are due")]
    NoHoleCardsDue,
    #[error("player {0} has been dealt all hole cards")]
    PlayerFullyDealt(usize),
    #[error("no board cards are due")]
    NoBoardCardsDue,
    #[error("{actual} cards given, between 1 and {max} allowed")]
    WrongCardCount { max: usize, actual: usize },
    #[error("card {0} is not in the deck")]
    CardNotInDeck(Card),
    #[error("card {0} is given twice")]
    DuplicateCard(Card),
    #[error("card {0} is not held by the player")]
    CardNotHeld(Card),
    #[error("not enough cards left to deal")]
    DeckExhausted,
    #[error("no one is to act")]
    NoActor,
    #[error("there is no wager to fold against")]
    NoWagerToFold,
    #[error("the bring-in must be posted or completed")]
    BringInPending,
    #[error("no bring-in is due")]
    NoBringIn,
    #[error("cannot complete, bet or raise: {0}")]
    RaiseNotAllowed(&'static str),
    #[error("amount {amount} is below the minimum {minimum}")]
    BelowMinimum { amount: Chips, minimum: Chips },
    #[error("amount {amount} is above the maximum {maximum}")]
    AboveMaximum { amount: Chips, maximum: Chips },
    #[error("hole cards must be shown when all-in or when the last contender")]
    MuckNotAllowed,
    #[error("player {0} wins a share of a pot")]
    HandWins(usize),
    #[error("player {0} has no hand to kill")]
    NotKillable(usize),
    #[error("no hand can be killed")]
    NothingToKill,
    #[error("player {0} has nothing to pull")]
    NothingToPull(usize),
    #[error("no player has chips to pull")]
    NoChipsToPull,
    #[error("at least one ante, blind, straddle or bring-in must be nonzero")]
    NoForcedBets,
    #[error("{stacks} starting stacks for {players} players")]
    StackCountMismatch { stacks: usize, players: usize },
    #[error("{what} configured for {given} seats but only {players} players")]
    TooManySeats { what: &'static str, given: usize, players: usize },
    #[error("player count {count} outside 2..={max}")]
    PlayerCount { count: usize, max: usize },
    #[error("starting stacks must be positive")]
    EmptyStack,
    #[error("the variant has no bring-in")]
    BringInUnsupported,
    #[error("preset deck is not a permutation of the variant's deck")]
    InvalidPresetDeck,
    #[error(transparent)]
    Variant(#[from] VariantError),
}
